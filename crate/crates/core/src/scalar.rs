//! Exact base rings: the rationals and the integers modulo `m`.
//!
//! Every scalar is stored as a [`BigRational`]. Over `Z/m` the stored value
//! is always an integer in `[0, m)`; rational literals are mapped into the
//! ring through [`ScalarRing::reduce`], which succeeds exactly when the
//! denominator is a unit mod `m`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Scalar = BigRational;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ScalarRing {
    Rationals,
    IntegersMod(u64),
}

/// Wire form: `{"ring":"Q"}` or `{"ring":"Zmod","m":7}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScalarSpec {
    pub ring: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<u64>,
}

impl ScalarRing {
    pub fn integers_mod(m: u64) -> Result<Self> {
        if m < 2 {
            return Err(Error::Parse(format!("modulus must be at least 2, got {m}")));
        }
        Ok(ScalarRing::IntegersMod(m))
    }

    pub fn from_spec(spec: &ScalarSpec) -> Result<Self> {
        match (spec.ring.as_str(), spec.m) {
            ("Q", None) => Ok(ScalarRing::Rationals),
            ("Zmod", Some(m)) => ScalarRing::integers_mod(m),
            (ring, m) => Err(Error::Parse(format!("unknown scalar ring {ring:?} (m = {m:?})"))),
        }
    }

    pub fn to_spec(&self) -> ScalarSpec {
        match self {
            ScalarRing::Rationals => ScalarSpec { ring: "Q".into(), m: None },
            ScalarRing::IntegersMod(m) => ScalarSpec { ring: "Zmod".into(), m: Some(*m) },
        }
    }

    pub fn zero(&self) -> Scalar {
        Scalar::zero()
    }

    pub fn one(&self) -> Scalar {
        Scalar::one()
    }

    pub fn from_int(&self, n: i64) -> Scalar {
        self.reduce_integer(BigInt::from(n))
    }

    fn reduce_integer(&self, n: BigInt) -> Scalar {
        match self {
            ScalarRing::Rationals => Scalar::from_integer(n),
            ScalarRing::IntegersMod(m) => Scalar::from_integer(n.mod_floor(&BigInt::from(*m))),
        }
    }

    /// Maps a rational number into the ring. Over `Z/m` this fails when the
    /// denominator shares a factor with `m`.
    pub fn reduce(&self, q: &Scalar) -> Result<Scalar> {
        match self {
            ScalarRing::Rationals => Ok(q.clone()),
            ScalarRing::IntegersMod(m) => {
                let modulus = BigInt::from(*m);
                let num = q.numer().mod_floor(&modulus);
                let den = q.denom().mod_floor(&modulus);
                let inv = mod_inverse(&den, &modulus)
                    .ok_or_else(|| Error::NotInvertible(q.to_string(), self.to_string()))?;
                Ok(Scalar::from_integer((num * inv).mod_floor(&modulus)))
            }
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match self {
            ScalarRing::Rationals => a + b,
            ScalarRing::IntegersMod(_) => self.reduce_integer(a.to_integer() + b.to_integer()),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match self {
            ScalarRing::Rationals => a - b,
            ScalarRing::IntegersMod(_) => self.reduce_integer(a.to_integer() - b.to_integer()),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match self {
            ScalarRing::Rationals => a * b,
            ScalarRing::IntegersMod(_) => self.reduce_integer(a.to_integer() * b.to_integer()),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match self {
            ScalarRing::Rationals => -a,
            ScalarRing::IntegersMod(_) => self.reduce_integer(-a.to_integer()),
        }
    }

    /// Multiplicative inverse; over `Z/m` exists iff `gcd(a, m) = 1`.
    pub fn inv(&self, a: &Scalar) -> Option<Scalar> {
        match self {
            ScalarRing::Rationals => (!a.is_zero()).then(|| a.recip()),
            ScalarRing::IntegersMod(m) => {
                mod_inverse(&a.to_integer(), &BigInt::from(*m)).map(Scalar::from_integer)
            }
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Option<Scalar> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    /// The image of the integer `n` inverted, if it is a unit.
    pub fn inv_int(&self, n: usize) -> Option<Scalar> {
        self.inv(&self.from_int(n as i64))
    }

    pub fn is_field(&self) -> bool {
        match self {
            ScalarRing::Rationals => true,
            ScalarRing::IntegersMod(m) => is_prime(*m),
        }
    }

    pub fn require_field(&self) -> Result<()> {
        if self.is_field() {
            Ok(())
        } else {
            Err(Error::UnsupportedScalar(self.to_string()))
        }
    }

    /// Parses `"p"`, `"-p"` or `"p/q"` and maps the value into the ring.
    pub fn parse(&self, text: &str) -> Result<Scalar> {
        let text = text.trim();
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (text, "1"),
        };
        let num: BigInt = num
            .parse()
            .map_err(|_| Error::Parse(format!("bad scalar literal {text:?}")))?;
        let den: BigInt = den
            .parse()
            .map_err(|_| Error::Parse(format!("bad scalar literal {text:?}")))?;
        if den.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {text:?}")));
        }
        self.reduce(&Scalar::new(num, den))
    }

    /// Canonical string form, `"p"` or `"p/q"`.
    pub fn format(&self, a: &Scalar) -> String {
        format_scalar(a)
    }
}

impl fmt::Display for ScalarRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarRing::Rationals => write!(f, "Q"),
            ScalarRing::IntegersMod(m) => write!(f, "Z/{m}"),
        }
    }
}

pub fn format_scalar(a: &Scalar) -> String {
    if a.is_integer() {
        a.numer().to_string()
    } else {
        format!("{}/{}", a.numer(), a.denom())
    }
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let a = a.mod_floor(m);
    let egcd = a.extended_gcd(m);
    if egcd.gcd.is_one() {
        Some(egcd.x.mod_floor(m))
    } else {
        None
    }
}

fn is_prime(m: u64) -> bool {
    if m < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= m {
        if m.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Small integer view of a scalar, when it is one.
pub fn as_small_int(a: &Scalar) -> Option<i64> {
    if a.is_integer() && a.numer().abs() < BigInt::from(i64::MAX) {
        a.numer().to_i64()
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rationals_are_exact() {
        let q = ScalarRing::Rationals;
        let half = q.parse("1/2").unwrap();
        let third = q.parse("-1/3").unwrap();
        assert_eq!(q.format(&q.add(&half, &third)), "1/6");
        assert_eq!(q.format(&q.inv(&third).unwrap()), "-3");
        assert!(q.inv(&q.zero()).is_none());
    }

    #[test]
    fn modular_reduction_of_rationals() {
        let z7 = ScalarRing::integers_mod(7).unwrap();
        // 1/2 = 4 mod 7
        assert_eq!(z7.format(&z7.parse("1/2").unwrap()), "4");
        assert_eq!(z7.format(&z7.parse("-1").unwrap()), "6");
        let z6 = ScalarRing::integers_mod(6).unwrap();
        assert!(matches!(z6.parse("1/2"), Err(Error::NotInvertible(..))));
        assert!(!z6.is_field());
        assert!(z7.is_field());
        assert!(ScalarRing::integers_mod(1).is_err());
    }

    #[test]
    fn spec_round_trip() {
        let z = ScalarRing::from_spec(&ScalarSpec { ring: "Zmod".into(), m: Some(7) }).unwrap();
        assert_eq!(z, ScalarRing::IntegersMod(7));
        assert_eq!(ScalarRing::from_spec(&z.to_spec()).unwrap(), z);
        let json: ScalarSpec = serde_json::from_str(r#"{"ring":"Q"}"#).unwrap();
        assert_eq!(ScalarRing::from_spec(&json).unwrap(), ScalarRing::Rationals);
    }

    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 { a } else { gcd(b, a % b) }
    }

    proptest! {
        #[test]
        fn invertible_iff_coprime(m in 2u64..60, x in 0u64..200) {
            let ring = ScalarRing::integers_mod(m).unwrap();
            let v = ring.from_int(x as i64);
            let inv = ring.inv(&v);
            prop_assert_eq!(inv.is_some(), gcd(x % m, m) == 1);
            if let Some(i) = inv {
                prop_assert_eq!(ring.mul(&v, &i), ring.one());
            }
        }

        #[test]
        fn reduce_is_a_ring_map(a in -50i64..50, b in 1i64..50, c in -50i64..50, d in 1i64..50) {
            let ring = ScalarRing::integers_mod(101).unwrap();
            let x = Scalar::new(a.into(), b.into());
            let y = Scalar::new(c.into(), d.into());
            let rx = ring.reduce(&x).unwrap();
            let ry = ring.reduce(&y).unwrap();
            prop_assert_eq!(ring.reduce(&(&x * &y)).unwrap(), ring.mul(&rx, &ry));
            prop_assert_eq!(ring.reduce(&(&x + &y)).unwrap(), ring.add(&rx, &ry));
        }
    }
}
