//! Generator cocycles (to come).
