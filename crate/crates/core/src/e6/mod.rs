//! Everything parametric in `(s, char K)` for the self-injective family of
//! tree class E6: the quiver and its relations, the automorphism sigma, the
//! periodic bimodule resolution, degree classification, and the expected
//! dimension tables.

pub mod dims;
pub mod happel;
pub mod quiver;
pub mod resolution;

use crate::field::Field;

pub const N: i64 = 6;

#[derive(Debug, Clone, Copy)]
pub struct FamilyParams {
    pub s: usize,
    pub field: Field,
}

impl FamilyParams {
    pub fn new(s: usize, field: Field) -> Self {
        assert!(s >= 1);
        FamilyParams { s, field }
    }

    pub fn characteristic(&self) -> u64 {
        self.field.characteristic()
    }
}

/// smallest nonnegative residue, the paper's `(a)_t`
pub fn residue(a: i64, t: i64) -> i64 {
    a.rem_euclid(t)
}

/// indicator of equality
pub fn f(x: i64, y: i64) -> i64 {
    if x == y {
        1
    } else {
        0
    }
}

/// parity/order helper: 1 when (x even, x<y) or (x odd, x>=y)
pub fn h(x: i64, y: i64) -> i64 {
    let even = x.rem_euclid(2) == 0;
    if x < y {
        if even {
            1
        } else {
            0
        }
    } else if even {
        0
    } else {
        1
    }
}

pub fn f0(x: i64, y: i64) -> i64 {
    if x < y {
        1
    } else {
        0
    }
}

pub fn f1(x: i64, y: i64) -> i64 {
    if x < y {
        1
    } else {
        -1
    }
}

pub fn f2(x: i64, y: i64) -> i64 {
    if x == y {
        1
    } else {
        -1
    }
}

/// Period constants of the family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PeriodData {
    pub m0: usize,
    pub order_of_sigma: usize,
    /// minimal period of the bimodule resolution, `11 * order_of_sigma`
    pub m: usize,
}

impl PeriodData {
    pub fn new(s: usize, characteristic: u64) -> Self {
        let n = N as usize;
        let m0 = 2 * s / gcd(n + s, 2 * s);
        let order_of_sigma = if characteristic == 2 || m0 % 4 == 0 { m0 } else { 2 * m0 };
        PeriodData { m0, order_of_sigma, m: 11 * order_of_sigma }
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Decomposition `t = 11 l + r` with the matched generator conditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeClass {
    pub t: usize,
    pub l: usize,
    pub r: usize,
    pub m: usize,
    pub matched_conditions: Vec<u8>,
}

/// The defining condition of generator family `i` (1..=22) at degree `t`.
pub fn condition_holds(i: u8, s: usize, characteristic: u64, t: usize) -> bool {
    let l = (t / 11) as i64;
    let r = (t % 11) as i64;
    let m = r / 2;
    let s_ = s as i64;
    let two_s = 2 * s_;
    let c = residue(l * (N + s_) + m, two_s);
    let even = l % 2 == 0;
    let ch2 = characteristic == 2;
    let ch3 = characteristic == 3;
    let at = |v: i64| c == residue(v, two_s);
    match i {
        1 => r == 0 && at(0) && (even || ch2),
        2 => r == 0 && at(s_ + 1) && even && ch3,
        3 => r == 1 && at(0) && (even || ch2),
        4 => r == 1 && at(s_) && (!even || ch2),
        5 => r == 2 && at(s_ + 1) && (!even || ch2),
        6 => r == 3 && at(0),
        7 => r == 3 && at(s_) && ch2,
        8 => r == 4 && at(s_ + 1) && ch2,
        9 => r == 4 && at(s_) && !even && ch3,
        10 => r == 4 && at(1),
        11 => r == 5 && at(0) && even && ch3,
        12 => r == 5 && at(s_) && !even && ch3,
        13 => r == 6 && at(0) && ch2,
        14 => r == 6 && at(1) && even && ch3,
        15 => r == 6 && at(s_),
        16 => r == 7 && at(0) && ch2,
        17 => r == 7 && at(s_),
        18 => r == 8 && at(0) && (even || ch2),
        19 => r == 9 && at(0) && (even || ch2),
        20 => r == 9 && at(s_) && (!even || ch2),
        21 => r == 10 && at(s_ + 1) && (!even || ch2),
        22 => r == 10 && at(0) && !even && ch3,
        _ => panic!("condition index {i} out of range"),
    }
}

pub fn classify_degree(s: usize, characteristic: u64, t: usize) -> DegreeClass {
    let matched: Vec<u8> =
        (1..=22).filter(|&i| condition_holds(i, s, characteristic, t)).collect();
    DegreeClass { t, l: t / 11, r: t % 11, m: (t % 11) / 2, matched_conditions: matched }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn helper_tables() {
        assert_eq!(h(0, 2), 1);
        assert_eq!(h(1, 2), 0);
        assert_eq!(h(3, 2), 1);
        assert_eq!(h(2, 2), 0);
        assert_eq!(f(3, 3), 1);
        assert_eq!(f(3, 4), 0);
        assert_eq!(f0(1, 2), 1);
        assert_eq!(f1(2, 2), -1);
        assert_eq!(f2(5, 5), 1);
        assert_eq!(residue(-1, 8), 7);
    }

    #[test]
    fn period_data_examples() {
        // s=1: M0 = 2/gcd(7,2) = 2
        let p = PeriodData::new(1, 2);
        assert_eq!(p.m0, 2);
        assert_eq!(p.order_of_sigma, 2);
        assert_eq!(p.m, 22);
        // char 0: 2 not divisible by 4 -> order 4
        let p = PeriodData::new(1, 0);
        assert_eq!(p.order_of_sigma, 4);
        assert_eq!(p.m, 44);
        // s=2, char 2: 4/gcd(8,4) = 1
        let p = PeriodData::new(2, 2);
        assert_eq!(p.order_of_sigma, 1);
        // s=2, char 3: M0 = 1, not divisible by 4 -> 2
        let p = PeriodData::new(2, 3);
        assert_eq!(p.order_of_sigma, 2);
        assert_eq!(p.m, 22);
    }

    #[test]
    fn classify_examples() {
        // s=2, char 3, t=0 matches condition (1)
        assert!(condition_holds(1, 2, 3, 0));
        assert_eq!(classify_degree(2, 3, 0).matched_conditions, vec![1]);
        // s=2, char 5, t=4: l=0, m=2, 2 != 1 mod 4 -> condition 10 fails, nothing matches
        assert!(!condition_holds(10, 2, 5, 4));
        assert!(classify_degree(2, 5, 4).matched_conditions.is_empty());
        // s=1, char 2, t=1: condition 3 via l=0
        assert!(condition_holds(3, 1, 2, 1));
    }

    #[test]
    fn s1_conditions_may_overlap() {
        // at s=1, char 3, t=22 both (1) and (2) fire (the dim-2 degrees)
        let c = classify_degree(1, 3, 22);
        assert_eq!(c.matched_conditions, vec![1, 2]);
    }
}
