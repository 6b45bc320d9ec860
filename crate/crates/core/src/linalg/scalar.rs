//! Exact field elements over the rationals or a prime field.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The scalar field a value lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rationals,
    /// `F_p` for an odd prime `p`.
    Prime(u64),
}

impl Field {
    /// Builds `F_p`, rejecting non-primes and characteristic 2.
    pub fn prime(p: u64) -> Result<Self> {
        if p == 2 {
            return Err(Error::Format("characteristic 2 is not supported".into()));
        }
        if !is_prime(p) {
            return Err(Error::Format(format!("{p} is not prime")));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, v: i64) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => Scalar::Modular { value: v.rem_euclid(p as i64) as u64, modulus: p },
        }
    }

    /// Maps a rational into this field. Fails when the denominator vanishes mod `p`.
    pub fn from_rational(self, q: &BigRational) -> Result<Scalar> {
        match self {
            Field::Rationals => Ok(Scalar::Rational(q.clone())),
            Field::Prime(p) => {
                let pm = BigInt::from(p);
                let reduce = |x: &BigInt| -> u64 {
                    let r = ((x % &pm) + &pm) % &pm;
                    r.to_u64().expect("residue fits in u64")
                };
                let num = reduce(q.numer());
                let den = reduce(q.denom());
                if den == 0 {
                    return Err(Error::Format(format!("{q} has no image in F_{p}")));
                }
                let den = Scalar::Modular { value: den, modulus: p };
                Ok(&Scalar::Modular { value: num, modulus: p } * &den.inv().expect("nonzero"))
            }
        }
    }

    /// Parses a serialized scalar: `"a"` or `"a/b"` over Q, a decimal residue over `F_p`.
    pub fn parse(self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        let bad = || Error::Format(format!("malformed scalar {s:?}"));
        let (num, den) = match s.split_once('/') {
            Some((a, b)) => (a.trim(), Some(b.trim())),
            None => (s, None),
        };
        let num = BigInt::from_str(num).map_err(|_| bad())?;
        let den = match den {
            Some(b) => BigInt::from_str(b).map_err(|_| bad())?,
            None => BigInt::one(),
        };
        if den.is_zero() {
            return Err(Error::Format(format!("zero denominator in {s:?}")));
        }
        self.from_rational(&BigRational::new(num, den))
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => p,
        }
    }

    /// Every element of a prime field, in canonical order `0, 1, ..., p-1`.
    pub fn elements(self) -> Option<Vec<Scalar>> {
        match self {
            Field::Rationals => None,
            Field::Prime(p) => Some((0..p).map(|v| Scalar::Modular { value: v, modulus: p }).collect()),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "Fp:{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "Q" => Ok(Field::Rationals),
            other => {
                let p = other
                    .strip_prefix("Fp:")
                    .and_then(|p| p.parse::<u64>().ok())
                    .ok_or_else(|| Error::Format(format!("unknown field {other:?}")))?;
                Field::prime(p)
            }
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field element. Rationals are kept in lowest terms with a positive
/// denominator; residues are kept in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Modular { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rationals,
            Scalar::Modular { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Modular { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Modular { value, modulus } => {
                Scalar::Modular { value: pow_mod(*value, modulus - 2, *modulus), modulus: *modulus }
            }
        })
    }

    /// `(-1)^k` in the field of `self`.
    pub fn sign(field: Field, negative: bool) -> Scalar {
        if negative {
            field.from_i64(-1)
        } else {
            field.one()
        }
    }

    /// Residue of a prime-field element; `None` over Q.
    pub fn residue(&self) -> Option<u64> {
        match self {
            Scalar::Modular { value, .. } => Some(*value),
            Scalar::Rational(_) => None,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(q) => Some(q),
            Scalar::Modular { .. } => None,
        }
    }

    fn check_same(&self, other: &Scalar) {
        assert_eq!(self.field(), other.field(), "scalar field mismatch");
    }
}

fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    let m = m as u128;
    let mut acc = 1u128;
    let mut b = base as u128 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

impl fmt::Display for Scalar {
    /// Canonical serialization: `"a"` or `"a/b"` with `b > 0` over Q, the residue over `F_p`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Modular { value, .. } => write!(f, "{value}"),
        }
    }
}

impl Add for &Scalar {
    type Output = Scalar;

    fn add(self, rhs: &Scalar) -> Scalar {
        self.check_same(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Modular { value: a, modulus }, Scalar::Modular { value: b, .. }) => {
                Scalar::Modular { value: ((*a as u128 + *b as u128) % *modulus as u128) as u64, modulus: *modulus }
            }
            _ => unreachable!(),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;

    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;

    fn mul(self, rhs: &Scalar) -> Scalar {
        self.check_same(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Modular { value: a, modulus }, Scalar::Modular { value: b, .. }) => {
                Scalar::Modular { value: ((*a as u128 * *b as u128) % *modulus as u128) as u64, modulus: *modulus }
            }
            _ => unreachable!(),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Modular { value, modulus } => {
                Scalar::Modular { value: (modulus - value) % modulus, modulus: *modulus }
            }
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

/// Orders prime-field elements by residue and rationals numerically.
impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => a.partial_cmp(b),
            (Scalar::Modular { value: a, modulus: p }, Scalar::Modular { value: b, modulus: q }) if p == q => {
                a.partial_cmp(b)
            }
            _ => None,
        }
    }
}

impl Scalar {
    pub fn is_negative(&self) -> bool {
        matches!(self, Scalar::Rational(q) if q.is_negative())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rational_canonical_form() {
        let q = Field::Rationals.parse("6/-4").unwrap();
        assert_eq!(q.to_string(), "-3/2");
        assert_eq!(Field::Rationals.parse("4/2").unwrap().to_string(), "2");
        assert!(Field::Rationals.parse("1/0").is_err());
        assert!(Field::Rationals.parse("x").is_err());
    }

    #[test]
    fn prime_field_reduction() {
        let f = Field::prime(3).unwrap();
        assert_eq!(f.from_i64(-1).to_string(), "2");
        assert_eq!(f.parse("1/2").unwrap().to_string(), "2");
        assert!(f.parse("1/3").is_err());
        assert_eq!(f.from_i64(4).inv().unwrap(), f.one());
        assert!(Field::prime(2).is_err());
        assert!(Field::prime(9).is_err());
        assert_eq!("Fp:7".parse::<Field>().unwrap(), Field::Prime(7));
        assert_eq!("Q".parse::<Field>().unwrap(), Field::Rationals);
    }

    #[test]
    #[should_panic(expected = "scalar field mismatch")]
    fn mixed_fields_panic() {
        let _ = Field::Rationals.one() + Field::Prime(5).one();
    }

    proptest! {
        #[test]
        fn add_then_sub_is_identity(a in -1000i64..1000, b in -1000i64..1000, d in 1i64..50) {
            let x = Field::Rationals.parse(&format!("{a}/{d}")).unwrap();
            let y = Field::Rationals.from_i64(b);
            prop_assert_eq!(&(&x + &y) - &y, x);
            let f = Field::Prime(101);
            let x = f.from_i64(a);
            let y = f.from_i64(b);
            prop_assert_eq!(&(&x + &y) - &y, x.clone());
            if !x.is_zero() {
                prop_assert!((&x * &x.inv().unwrap()).is_one());
            }
        }

        #[test]
        fn serialization_round_trips(a in -10_000i64..10_000, d in 1i64..1000) {
            let x = Field::Rationals.parse(&format!("{a}/{d}")).unwrap();
            prop_assert_eq!(Field::Rationals.parse(&x.to_string()).unwrap(), x);
        }
    }
}
