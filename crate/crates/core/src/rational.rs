//! Exact rationals backed by arbitrary-precision integers.
//!
//! Serialized as `{"num": .., "den": ..}`; never as floats.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A fraction in lowest terms with a positive denominator.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        Rational(BigRational::new(num.into(), den.into()))
    }

    pub fn from_big(num: BigInt, den: BigInt) -> Self {
        Rational(BigRational::new(num, den))
    }

    pub fn integer(n: i64) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    /// Numerator and denominator as machine integers, if they fit.
    pub fn to_i128_pair(&self) -> Option<(i128, i128)> {
        Some((self.numer().to_i128()?, self.denom().to_i128()?))
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn as_big(&self) -> &BigRational {
        &self.0
    }

    /// The fraction with the smallest denominator in the half-open interval `(lo, hi]`,
    /// found by walking the Stern–Brocot tree. Both bounds must be nonnegative and `lo < hi`.
    pub fn simplest_in(lo: &Rational, hi: &Rational) -> Rational {
        assert!(lo < hi, "empty interval");
        assert!(!lo.is_negative(), "negative interval");
        let (mut ln, mut ld) = (BigInt::zero(), BigInt::one());
        let (mut rn, mut rd) = (BigInt::one(), BigInt::zero());
        loop {
            let mn = &ln + &rn;
            let md = &ld + &rd;
            let med = Rational::from_big(mn.clone(), md.clone());
            if &med <= lo {
                // Move right in one batch: largest t with (ln + t*rn)/(ld + t*rd) <= lo.
                let t = batch_steps(&ln, &ld, &rn, &rd, lo, true);
                ln += &rn * &t;
                ld += &rd * &t;
            } else if &med > hi {
                let t = batch_steps(&rn, &rd, &ln, &ld, hi, false);
                rn += &ln * &t;
                rd += &ld * &t;
            } else {
                return med;
            }
        }
    }
}

/// Number of consecutive Stern–Brocot steps in one direction. `toward_right` moves the
/// left bound up while it stays `<= bound`; otherwise moves the right bound down while it
/// stays `> bound`. Always at least one step.
fn batch_steps(
    an: &BigInt,
    ad: &BigInt,
    bn: &BigInt,
    bd: &BigInt,
    bound: &Rational,
    toward_right: bool,
) -> BigInt {
    // Solve (an + t*bn) / (ad + t*bd) against p/q for the largest admissible t.
    let p = bound.numer();
    let q = bound.denom();
    let one = BigInt::one();
    let t = if toward_right {
        // (an + t bn) q <= p (ad + t bd)  <=>  t (bn q - p bd) <= p ad - an q
        let coef = bn * q - p * bd;
        let rhs = p * ad - an * q;
        if coef.is_positive() {
            num_integer::Integer::div_floor(&rhs, &coef)
        } else {
            // The right endpoint is at or below the bound: never happens for finite bounds
            // reached from the root, fall back to a single step.
            one.clone()
        }
    } else {
        // (an + t bn) q > p (ad + t bd)  <=>  t (p bd - bn q) < an q - p ad
        let coef = p * bd - bn * q;
        let rhs = an * q - p * ad;
        if coef.is_positive() {
            // largest t with t*coef < rhs
            num_integer::Integer::div_floor(&(rhs - &one), &coef)
        } else {
            one.clone()
        }
    };
    if t < one {
        one
    } else {
        t
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::zero()
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::integer(n)
    }
}

impl From<usize> for Rational {
    fn from(n: usize) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRationalError(pub String);

impl fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid rational {:?}", self.0)
    }
}

impl std::error::Error for ParseRationalError {}

impl FromStr for Rational {
    type Err = ParseRationalError;

    /// Accepts `"p/q"` or a bare integer `"p"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseRationalError(s.to_string());
        let t = s.trim();
        let (n, d) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let num: BigInt = n.parse().map_err(|_| err())?;
        let den: BigInt = d.parse().map_err(|_| err())?;
        if den.is_zero() {
            return Err(err());
        }
        Ok(Rational::from_big(num, den))
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $op:tt) => {
        impl $tr for Rational {
            type Output = Rational;
            fn $m(self, rhs: Rational) -> Rational {
                Rational(self.0 $op rhs.0)
            }
        }
        impl<'a> $tr<&'a Rational> for &'a Rational {
            type Output = Rational;
            fn $m(self, rhs: &'a Rational) -> Rational {
                Rational(&self.0 $op &rhs.0)
            }
        }
        impl<'a> $tr<&'a Rational> for Rational {
            type Output = Rational;
            fn $m(self, rhs: &'a Rational) -> Rational {
                Rational(self.0 $op &rhs.0)
            }
        }
    };
}

binop!(Add, add, +);
binop!(Sub, sub, -);
binop!(Mul, mul, *);

impl Mul<i64> for &Rational {
    type Output = Rational;
    fn mul(self, rhs: i64) -> Rational {
        Rational(&self.0 * BigRational::from_integer(rhs.into()))
    }
}

impl Mul<i64> for Rational {
    type Output = Rational;
    fn mul(self, rhs: i64) -> Rational {
        &self * rhs
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl std::iter::Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |a, b| a + b)
    }
}

impl<'a> std::iter::Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |mut a, b| {
            a += b;
            a
        })
    }
}

fn big_to_json(n: &BigInt) -> serde_json::Value {
    match n.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::String(n.to_string()),
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Rational", 2)?;
        st.serialize_field("num", &big_to_json(self.numer()))?;
        st.serialize_field("den", &big_to_json(self.denom()))?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Text(String),
            Parts {
                num: serde_json::Value,
                den: serde_json::Value,
            },
        }
        fn big(v: &serde_json::Value) -> Option<BigInt> {
            match v {
                serde_json::Value::Number(n) => n.as_i64().map(BigInt::from),
                serde_json::Value::String(s) => s.parse().ok(),
                _ => None,
            }
        }
        match Repr::deserialize(d)? {
            Repr::Text(s) => s.parse().map_err(D::Error::custom),
            Repr::Parts { num, den } => {
                let num = big(&num).ok_or_else(|| D::Error::custom("bad numerator"))?;
                let den = big(&den).ok_or_else(|| D::Error::custom("bad denominator"))?;
                if den.is_zero() {
                    return Err(D::Error::custom("zero denominator"));
                }
                Ok(Rational::from_big(num, den))
            }
        }
    }
}
