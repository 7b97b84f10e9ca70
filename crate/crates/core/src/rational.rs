//! Exact nonnegative rationals.
//!
//! Every beta/alpha comparison in the solvers is a sharp inequality at a
//! breakpoint (1/2 versus float 0.5 would flip boundary cases), so values
//! are kept as reduced fractions and compared by cross-multiplication.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// A nonnegative fraction p/q in lowest terms, q >= 1.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(Ratio<u64>);

impl Rational {
    pub fn new(num: u64, den: u64) -> Result<Self, Error> {
        if den == 0 {
            return Err(Error::InvalidRational {
                input: format!("{num}/{den}"),
                reason: "denominator must be nonzero".into(),
            });
        }
        Ok(Self(Ratio::new(num, den)))
    }

    pub fn zero() -> Self {
        Self(Ratio::from_integer(0))
    }

    pub fn one() -> Self {
        Self(Ratio::from_integer(1))
    }

    pub fn num(&self) -> u64 {
        *self.0.numer()
    }

    pub fn den(&self) -> u64 {
        *self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.num() == 0
    }

    pub fn is_one(&self) -> bool {
        self.num() == self.den()
    }

    /// True iff 0 < self <= 1, the admissible range for beta and alpha.
    pub fn in_unit_interval(&self) -> bool {
        !self.is_zero() && *self <= Self::one()
    }

    /// floor(self * m), computed exactly as (num*m) div den.
    pub fn floor_mul(&self, m: usize) -> usize {
        ((self.num() as u128 * m as u128) / self.den() as u128) as usize
    }

    /// ceil(self * m), computed exactly.
    pub fn ceil_mul(&self, m: usize) -> usize {
        let p = self.num() as u128 * m as u128;
        let q = self.den() as u128;
        p.div_ceil(q) as usize
    }

    /// Exact midpoint (a + b) / 2, reduced.
    pub fn midpoint(a: Rational, b: Rational) -> Rational {
        Rational((a.0 + b.0) / Ratio::from_integer(2))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den() == 1 {
            write!(f, "{}", self.num())
        } else {
            write!(f, "{}/{}", self.num(), self.den())
        }
    }
}

// Debug as "p/q" so test failures read like the CLI output.
impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts "p/q" or a bare nonnegative integer. Decimal notation is
    /// rejected so a value like 0.5 never silently rounds; write 1/2.
    fn from_str(s: &str) -> Result<Self, Error> {
        let raw = s.trim();
        let err = |reason: &str| Error::InvalidRational {
            input: raw.to_string(),
            reason: reason.to_string(),
        };
        if raw.contains('.') {
            return Err(err(
                "decimal notation is not accepted; write 1/2 instead of 0.5",
            ));
        }
        let mut parts = raw.splitn(2, '/');
        let num_s = parts.next().unwrap_or("");
        let num: u64 = num_s
            .trim()
            .parse()
            .map_err(|_| err("expected a nonnegative integer or p/q"))?;
        match parts.next() {
            None => Rational::new(num, 1),
            Some(den_s) => {
                let den: u64 = den_s
                    .trim()
                    .parse()
                    .map_err(|_| err("expected a nonnegative integer or p/q"))?;
                if den == 0 {
                    return Err(err("denominator must be nonzero"));
                }
                Rational::new(num, den)
            }
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}
