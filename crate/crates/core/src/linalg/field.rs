//! Coefficient fields: prime fields GF(p) and the rationals.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default characteristic. Large enough that the trace-form radical is exact
/// for every module met at desk scale.
pub const DEFAULT_PRIME: u64 = 32003;

/// Largest accepted characteristic; products of two residues must fit in `u64`.
pub const MAX_PRIME: u64 = (1 << 31) - 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FieldSpec {
    Prime(u64),
    Rationals,
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec::Prime(DEFAULT_PRIME)
    }
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        if p > MAX_PRIME {
            return Err(Error::InvalidField(format!(
                "gf({p}) exceeds the supported maximum {MAX_PRIME}"
            )));
        }
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        Ok(FieldSpec::Prime(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Prime(p) => *p,
            FieldSpec::Rationals => 0,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Prime(_) => Scalar::Mod(0),
            FieldSpec::Rationals => Scalar::Rat(Box::new(BigRational::zero())),
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Prime(p) => Scalar::Mod(reduce_i64(n, *p)),
            FieldSpec::Rationals => Scalar::Rat(Box::new(BigRational::from_integer(n.into()))),
        }
    }

    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Scalar> {
        if den.is_zero() {
            return Err(Error::InvalidField("zero denominator".into()));
        }
        match self {
            FieldSpec::Prime(p) => {
                let pb = BigInt::from(*p);
                let n = mod_big(num, &pb);
                let d = mod_big(den, &pb);
                if d == 0 {
                    return Err(Error::InvalidField(format!(
                        "denominator {den} vanishes in gf({p})"
                    )));
                }
                Ok(Scalar::Mod(mul_mod(n, inv_mod(d, *p), *p)))
            }
            FieldSpec::Rationals => Ok(Scalar::Rat(Box::new(BigRational::new(
                num.clone(),
                den.clone(),
            )))),
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::Prime(p), Scalar::Mod(x), Scalar::Mod(y)) => Scalar::Mod((x + y) % p),
            (FieldSpec::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => {
                Scalar::Rat(Box::new(&**x + &**y))
            }
            _ => panic!("scalar does not belong to {self}"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (FieldSpec::Prime(p), Scalar::Mod(x)) => Scalar::Mod((p - x) % p),
            (FieldSpec::Rationals, Scalar::Rat(x)) => Scalar::Rat(Box::new(-&**x)),
            _ => panic!("scalar does not belong to {self}"),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::Prime(p), Scalar::Mod(x), Scalar::Mod(y)) => Scalar::Mod(mul_mod(*x, *y, *p)),
            (FieldSpec::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => {
                Scalar::Rat(Box::new(&**x * &**y))
            }
            _ => panic!("scalar does not belong to {self}"),
        }
    }

    pub fn inv(&self, a: &Scalar) -> Option<Scalar> {
        if a.is_zero() {
            return None;
        }
        match (self, a) {
            (FieldSpec::Prime(p), Scalar::Mod(x)) => Some(Scalar::Mod(inv_mod(*x, *p))),
            (FieldSpec::Rationals, Scalar::Rat(x)) => Some(Scalar::Rat(Box::new(x.recip()))),
            _ => panic!("scalar does not belong to {self}"),
        }
    }

    /// Parses an integer or `num/den` literal into the field.
    pub fn parse_scalar(&self, text: &str) -> Result<Scalar> {
        let bad = || Error::InvalidField(format!("malformed scalar `{text}`"));
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => (
                BigInt::from_str(n.trim()).map_err(|_| bad())?,
                BigInt::from_str(d.trim()).map_err(|_| bad())?,
            ),
            None => (BigInt::from_str(text.trim()).map_err(|_| bad())?, BigInt::one()),
        };
        self.from_ratio(&num, &den)
    }

    /// Printable form. Prime-field residues use the symmetric range so that
    /// `-1` prints as `-1` rather than `p - 1`.
    pub fn format(&self, a: &Scalar) -> String {
        match (self, a) {
            (FieldSpec::Prime(p), Scalar::Mod(x)) => {
                if *x > p / 2 {
                    format!("-{}", p - x)
                } else {
                    x.to_string()
                }
            }
            (_, Scalar::Rat(x)) => {
                if x.is_integer() {
                    x.numer().to_string()
                } else {
                    format!("{}/{}", x.numer(), x.denom())
                }
            }
            (_, Scalar::Mod(x)) => x.to_string(),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Prime(p) => write!(f, "gf({p})"),
            FieldSpec::Rationals => write!(f, "rationals"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        if s == "rationals" || s == "q" {
            return Ok(FieldSpec::Rationals);
        }
        let inner = s
            .strip_prefix("gf(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::InvalidField(format!("expected gf(p) or rationals, got `{s}`")))?;
        let p: u64 = inner
            .trim()
            .parse()
            .map_err(|_| Error::InvalidField(format!("bad characteristic `{inner}`")))?;
        FieldSpec::prime(p)
    }
}

/// An element of a [`FieldSpec`]. Always stored in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Mod(u64),
    Rat(Box<BigRational>),
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Mod(x) => *x == 0,
            Scalar::Rat(x) => x.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Mod(x) => *x == 1,
            Scalar::Rat(x) => x.is_one(),
        }
    }

    /// Numerator and denominator as `i128` when they fit.
    pub fn as_ratio_i128(&self) -> Option<(i128, i128)> {
        match self {
            Scalar::Mod(x) => Some((*x as i128, 1)),
            Scalar::Rat(x) => Some((x.numer().to_i128()?, x.denom().to_i128()?)),
        }
    }

    pub fn is_negative(&self) -> bool {
        matches!(self, Scalar::Rat(x) if x.is_negative())
    }
}

pub(crate) fn reduce_i64(n: i64, p: u64) -> u64 {
    (n as i128).rem_euclid(p as i128) as u64
}

fn mod_big(n: &BigInt, p: &BigInt) -> u64 {
    let r = ((n % p) + p) % p;
    r.to_u64().expect("residue fits in u64")
}

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    a * b % p
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print_fields() {
        assert_eq!("gf(5)".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(5));
        assert_eq!("rationals".parse::<FieldSpec>().unwrap(), FieldSpec::Rationals);
        assert!("gf(6)".parse::<FieldSpec>().is_err());
        assert_eq!(FieldSpec::Prime(32003).to_string(), "gf(32003)");
    }

    #[test]
    fn prime_arithmetic() {
        let f = FieldSpec::Prime(5);
        let two = f.from_i64(2);
        let inv = f.inv(&two).unwrap();
        assert_eq!(inv, Scalar::Mod(3));
        assert_eq!(f.format(&f.from_i64(-1)), "-1");
        assert_eq!(f.parse_scalar("1/2").unwrap(), Scalar::Mod(3));
    }

    #[test]
    fn rational_arithmetic() {
        let q = FieldSpec::Rationals;
        let x = q.parse_scalar("-3/6").unwrap();
        assert_eq!(q.format(&x), "-1/2");
        let y = q.mul(&x, &q.from_i64(-2));
        assert!(y.is_one());
    }
}
