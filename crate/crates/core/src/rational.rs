//! Exact rational scalars on overflow-checked `i64`.
//!
//! Every value is kept canonical: positive denominator, gcd(|num|, den) = 1.
//! Intermediate products are taken in `i128`, so overflow is detected exactly
//! when a result does not fit back into `i64`; there is no silent wraparound
//! and no floating point anywhere.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: i64,
    den: i64, // > 0
}

fn gcd128(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Rational {
    pub const ZERO: Rational = Rational { num: 0, den: 1 };
    pub const ONE: Rational = Rational { num: 1, den: 1 };

    /// Canonical rational from an i128 pair; errors on zero denominator or
    /// a reduced value outside the i64 range.
    fn reduce(num: i128, den: i128) -> Result<Self> {
        if den == 0 {
            return Err(Error::ZeroDenominator);
        }
        let sign = if den < 0 { -1 } else { 1 };
        let g = gcd128(num, den);
        let (num, den) = if num == 0 {
            (0, 1)
        } else {
            (sign * num / g, sign * den / g)
        };
        let num = i64::try_from(num).map_err(|_| Error::Overflow)?;
        let den = i64::try_from(den).map_err(|_| Error::Overflow)?;
        // Keep the value range closed under negation.
        if num == i64::MIN {
            return Err(Error::Overflow);
        }
        Ok(Rational { num, den })
    }

    pub fn new(num: i64, den: i64) -> Result<Self> {
        Self::reduce(num as i128, den as i128)
    }

    pub const fn from_int(n: i64) -> Self {
        assert!(n != i64::MIN);
        Rational { num: n, den: 1 }
    }

    pub fn numerator(&self) -> i64 {
        self.num
    }

    pub fn denominator(&self) -> i64 {
        self.den
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let num = self.num as i128 * other.den as i128 + other.num as i128 * self.den as i128;
        Self::reduce(num, self.den as i128 * other.den as i128)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        let num = self.num as i128 * other.den as i128 - other.num as i128 * self.den as i128;
        Self::reduce(num, self.den as i128 * other.den as i128)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        Self::reduce(
            self.num as i128 * other.num as i128,
            self.den as i128 * other.den as i128,
        )
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.num == 0 {
            return Err(Error::ZeroDenominator);
        }
        Self::reduce(
            self.num as i128 * other.den as i128,
            self.den as i128 * other.num as i128,
        )
    }

    pub fn neg(&self) -> Self {
        // Total: canonical values never hold i64::MIN.
        Rational {
            num: -self.num,
            den: self.den,
        }
    }

    /// self * k for an integer k.
    pub fn scale(&self, k: i64) -> Result<Self> {
        Self::reduce(self.num as i128 * k as i128, self.den as i128)
    }

    pub fn halve(&self) -> Result<Self> {
        Self::reduce(self.num as i128, self.den as i128 * 2)
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    /// True for 1, 2, 3, ... — naturals here exclude zero.
    pub fn is_natural(&self) -> bool {
        self.den == 1 && self.num >= 1
    }

    /// True when k * self is a natural number.
    pub fn is_in_naturals_over(&self, k: i64) -> Result<bool> {
        Ok(self.scale(k)?.is_natural())
    }

    pub fn as_integer(&self) -> Option<i64> {
        (self.den == 1).then_some(self.num)
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        // Denominators are positive, so cross-multiplication preserves order.
        let lhs = self.num as i128 * other.den as i128;
        let rhs = other.num as i128 * self.den as i128;
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts "p" or "p/q" with q > 0; decimals are rejected.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected \"p\" or \"p/q\" with q > 0, got {s:?}"));
        let (num_s, den_s) = match s.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (s, None),
        };
        let valid_int = |t: &str| {
            let t = t.strip_prefix('-').unwrap_or(t);
            !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit())
        };
        if !valid_int(num_s) {
            return Err(bad());
        }
        let num: i64 = num_s.parse().map_err(|_| bad())?;
        let den: i64 = match den_s {
            Some(d) => {
                if !valid_int(d) || d.starts_with('-') {
                    return Err(bad());
                }
                let q: i64 = d.parse().map_err(|_| bad())?;
                if q <= 0 {
                    return Err(bad());
                }
                q
            }
            None => 1,
        };
        Rational::new(num, den)
    }
}
