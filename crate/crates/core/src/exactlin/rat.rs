//! Exact rational scalars.
//!
//! All coordinates in this crate are quarter-integer-ish rationals with
//! tiny numerators, so an `i64`-backed ratio is plenty. The wrapper fixes
//! the serialization format ("p/q", with "/q" omitted when q = 1) and
//! keeps the rest of the crate independent of the backing crate.

use num::rational::Ratio;
use num::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

/// A reduced rational number with positive denominator.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rat(Ratio<i64>);

impl Rat {
    pub const ZERO: Rat = Rat(Ratio::new_raw(0, 1));
    pub const ONE: Rat = Rat(Ratio::new_raw(1, 1));

    /// Builds `p/q`. Panics if `q == 0`.
    pub fn new(p: i64, q: i64) -> Rat {
        Rat(Ratio::new(p, q))
    }

    pub fn int(p: i64) -> Rat {
        Rat(Ratio::from_integer(p))
    }

    pub fn half(p: i64) -> Rat {
        Rat::new(p, 2)
    }

    pub fn quarter(p: i64) -> Rat {
        Rat::new(p, 4)
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Rat {
        Rat(self.0.abs())
    }

    pub fn recip(&self) -> Rat {
        Rat(self.0.recip())
    }

    /// True when the value is an integer.
    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn to_f64(&self) -> f64 {
        self.numer() as f64 / self.denom() as f64
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Rat {
    type Err = String;

    fn from_str(s: &str) -> Result<Rat, String> {
        let s = s.trim();
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (p, q),
            None => (s, "1"),
        };
        let p: i64 = p.trim().parse().map_err(|e| format!("bad numerator in {s:?}: {e}"))?;
        let q: i64 = q.trim().parse().map_err(|e| format!("bad denominator in {s:?}: {e}"))?;
        if q == 0 {
            return Err(format!("zero denominator in {s:?}"));
        }
        Ok(Rat::new(p, q))
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Rat, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(D::Error::custom)
    }
}

impl From<i64> for Rat {
    fn from(p: i64) -> Rat {
        Rat::int(p)
    }
}

macro_rules! binop {
    ($trait:ident, $fn:ident) => {
        impl $trait for Rat {
            type Output = Rat;
            fn $fn(self, rhs: Rat) -> Rat {
                Rat(self.0.$fn(rhs.0))
            }
        }
        impl $trait<&Rat> for Rat {
            type Output = Rat;
            fn $fn(self, rhs: &Rat) -> Rat {
                Rat(self.0.$fn(rhs.0))
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl AddAssign for Rat {
    fn add_assign(&mut self, rhs: Rat) {
        self.0 += rhs.0;
    }
}

impl SubAssign for Rat {
    fn sub_assign(&mut self, rhs: Rat) {
        self.0 -= rhs.0;
    }
}

impl Sum for Rat {
    fn sum<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::ZERO, |a, b| a + b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn display_roundtrip() {
        assert_eq!(Rat::new(3, 6).to_string(), "1/2");
        assert_eq!(Rat::new(-4, 2).to_string(), "-2");
        assert_eq!("7/4".parse::<Rat>().unwrap(), Rat::quarter(7));
        assert_eq!("-3".parse::<Rat>().unwrap(), Rat::int(-3));
    }

    #[test]
    fn normalization() {
        let r = Rat::new(6, -8);
        assert_eq!(r.numer(), -3);
        assert_eq!(r.denom(), 4);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(256))]

        // Exactness checked against i128 cross multiplication.
        #[test]
        fn add_matches_cross_multiplication(a in -1000i64..1000, b in 1i64..60, c in -1000i64..1000, d in 1i64..60) {
            let x = Rat::new(a, b) + Rat::new(c, d);
            let num = a as i128 * d as i128 + c as i128 * b as i128;
            let den = b as i128 * d as i128;
            prop_assert_eq!(x.numer() as i128 * den, num * x.denom() as i128);
        }

        #[test]
        fn mul_matches_cross_multiplication(a in -1000i64..1000, b in 1i64..60, c in -1000i64..1000, d in 1i64..60) {
            let x = Rat::new(a, b) * Rat::new(c, d);
            prop_assert_eq!(
                x.numer() as i128 * (b as i128 * d as i128),
                (a as i128 * c as i128) * x.denom() as i128
            );
        }

        #[test]
        fn always_reduced(a in -10000i64..10000, b in 1i64..1000) {
            let x = Rat::new(a, b);
            prop_assert!(x.denom() > 0);
            prop_assert_eq!(num::integer::gcd(x.numer(), x.denom()), if x.numer() == 0 { x.denom() } else { 1 });
        }
    }
}
