//! Exact scalar arithmetic over prime fields GF(p) and the rationals.
//!
//! Every computation in this crate runs over one of these two kinds of
//! fields; there is no floating point anywhere.

use num::{BigInt, BigRational, One, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    MixedFields,
    #[error("{0} is not a valid field characteristic (need a prime 2 <= p < 2^31, or 0)")]
    BadCharacteristic(u64),
}

/// Which exact field scalars live in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    Prime(u64),
    Rational,
}

impl FieldSpec {
    /// Build from a characteristic: 0 means the rationals, a prime p means GF(p).
    pub fn from_char(c: u64) -> Result<Self, FieldError> {
        if c == 0 {
            return Ok(FieldSpec::Rational);
        }
        if c < 2 || c >= (1 << 31) || !is_prime(c) {
            return Err(FieldError::BadCharacteristic(c));
        }
        Ok(FieldSpec::Prime(c))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Prime(p) => *p,
            FieldSpec::Rational => 0,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Prime(p) => write!(f, "GF({p})"),
            FieldSpec::Rational => write!(f, "Q"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// A field element in canonical form: prime-field values reduced to `[0, p)`,
/// rationals in lowest terms (num::BigRational keeps them that way).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Fp(u64),
    Rat(BigRational),
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Fp(v) => *v == 0,
            Scalar::Rat(r) => r.is_zero(),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Fp(v) => write!(f, "{v}"),
            Scalar::Rat(r) => write!(f, "{r}"),
        }
    }
}

/// Arithmetic context for one field. All `Scalar` operations go through this
/// so that mixed-field operands are caught instead of silently combined.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Field {
    spec: FieldSpec,
}

impl Field {
    pub fn new(spec: FieldSpec) -> Self {
        Field { spec }
    }

    pub fn rational() -> Self {
        Field { spec: FieldSpec::Rational }
    }

    pub fn prime(p: u64) -> Result<Self, FieldError> {
        Ok(Field { spec: FieldSpec::from_char(p)? })
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn characteristic(&self) -> u64 {
        self.spec.characteristic()
    }

    pub fn zero(&self) -> Scalar {
        match self.spec {
            FieldSpec::Prime(_) => Scalar::Fp(0),
            FieldSpec::Rational => Scalar::Rat(BigRational::zero()),
        }
    }

    pub fn one(&self) -> Scalar {
        match self.spec {
            FieldSpec::Prime(_) => Scalar::Fp(1),
            FieldSpec::Rational => Scalar::Rat(BigRational::one()),
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self.spec {
            FieldSpec::Prime(p) => {
                let r = n.rem_euclid(p as i64) as u64;
                Scalar::Fp(r)
            }
            FieldSpec::Rational => Scalar::Rat(BigRational::from(BigInt::from(n))),
        }
    }

    fn check(&self, a: &Scalar) -> Result<(), FieldError> {
        match (self.spec, a) {
            (FieldSpec::Prime(_), Scalar::Fp(_)) => Ok(()),
            (FieldSpec::Rational, Scalar::Rat(_)) => Ok(()),
            _ => Err(FieldError::MixedFields),
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Result<Scalar, FieldError> {
        self.check(a)?;
        self.check(b)?;
        Ok(match (a, b) {
            (Scalar::Fp(x), Scalar::Fp(y)) => {
                let p = self.characteristic();
                Scalar::Fp((x + y) % p)
            }
            (Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x + y),
            _ => unreachable!(),
        })
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Result<Scalar, FieldError> {
        let nb = self.neg(b)?;
        self.add(a, &nb)
    }

    pub fn neg(&self, a: &Scalar) -> Result<Scalar, FieldError> {
        self.check(a)?;
        Ok(match a {
            Scalar::Fp(x) => {
                let p = self.characteristic();
                Scalar::Fp(if *x == 0 { 0 } else { p - x })
            }
            Scalar::Rat(x) => Scalar::Rat(-x),
        })
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Result<Scalar, FieldError> {
        self.check(a)?;
        self.check(b)?;
        Ok(match (a, b) {
            // p < 2^31 so the widened product fits in u64
            (Scalar::Fp(x), Scalar::Fp(y)) => Scalar::Fp((x * y) % self.characteristic()),
            (Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x * y),
            _ => unreachable!(),
        })
    }

    pub fn inv(&self, a: &Scalar) -> Result<Scalar, FieldError> {
        self.check(a)?;
        if a.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(match a {
            Scalar::Fp(x) => Scalar::Fp(mod_inv(*x, self.characteristic())),
            Scalar::Rat(x) => Scalar::Rat(x.recip()),
        })
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Result<Scalar, FieldError> {
        let ib = self.inv(b)?;
        self.mul(a, &ib)
    }

    /// a + c*b, the fused update used all over Gaussian elimination.
    pub fn add_mul(&self, a: &Scalar, c: &Scalar, b: &Scalar) -> Result<Scalar, FieldError> {
        let cb = self.mul(c, b)?;
        self.add(a, &cb)
    }
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // extended Euclid on i128 to dodge sign fiddling
    let (mut t, mut new_t): (i128, i128) = (0, 1);
    let (mut r, mut new_r): (i128, i128) = (p as i128, a as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    assert_eq!(r, 1, "{a} not invertible mod {p}");
    t.rem_euclid(p as i128) as u64
}

/// The four binary operations, for the table-driven arithmetic entry point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Single dispatch point for scalar arithmetic.
pub fn field_arith(field: &Field, a: &Scalar, b: &Scalar, op: ArithOp) -> Result<Scalar, FieldError> {
    match op {
        ArithOp::Add => field.add(a, b),
        ArithOp::Sub => field.sub(a, b),
        ArithOp::Mul => field.mul(a, b),
        ArithOp::Div => field.div(a, b),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf3_add() {
        let f = Field::prime(3).unwrap();
        let two = f.from_i64(2);
        assert_eq!(field_arith(&f, &two, &two, ArithOp::Add).unwrap(), f.from_i64(1));
    }

    #[test]
    fn gf5_div() {
        let f = Field::prime(5).unwrap();
        let a = f.from_i64(4);
        let b = f.from_i64(3);
        assert_eq!(field_arith(&f, &a, &b, ArithOp::Div).unwrap(), f.from_i64(3));
    }

    #[test]
    fn rational_add() {
        let f = Field::rational();
        let half = f.div(&f.from_i64(1), &f.from_i64(2)).unwrap();
        let third = f.div(&f.from_i64(1), &f.from_i64(3)).unwrap();
        let sum = f.add(&half, &third).unwrap();
        let expect = f.div(&f.from_i64(5), &f.from_i64(6)).unwrap();
        assert_eq!(sum, expect);
    }

    #[test]
    fn division_by_zero_rejected() {
        let f = Field::prime(7).unwrap();
        assert_eq!(f.div(&f.one(), &f.zero()), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn mixed_fields_rejected() {
        let f = Field::prime(7).unwrap();
        let q = Field::rational();
        assert_eq!(f.add(&f.one(), &q.one()), Err(FieldError::MixedFields));
    }

    #[test]
    fn bad_characteristics_rejected() {
        assert!(FieldSpec::from_char(1).is_err());
        assert!(FieldSpec::from_char(4).is_err());
        assert!(FieldSpec::from_char(0).is_ok());
        assert!(FieldSpec::from_char(2).is_ok());
    }

    #[test]
    fn inverses_roundtrip() {
        let f = Field::prime(101).unwrap();
        for n in 1..101 {
            let a = f.from_i64(n);
            let inv = f.inv(&a).unwrap();
            assert_eq!(f.mul(&a, &inv).unwrap(), f.one());
        }
    }
}
