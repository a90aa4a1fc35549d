//! Bar oracle (to come).
