//! Exact rational numbers with a fixed `{"num", "den"}` wire format.
//!
//! Rates and cache fractions are compared for equality, so they are kept as
//! reduced integer ratios end to end. Human-readable output always prints
//! `num/den`, including `1/1`.

use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

/// A reduced rational number with a positive denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "RationalRepr", into = "RationalRepr")]
pub struct Rational(Ratio<i64>);

#[derive(Serialize, Deserialize, Clone, Copy)]
struct RationalRepr {
    num: i64,
    den: i64,
}

impl From<RationalRepr> for Rational {
    fn from(r: RationalRepr) -> Self {
        Rational::new(r.num, r.den)
    }
}

impl From<Rational> for RationalRepr {
    fn from(r: Rational) -> Self {
        RationalRepr {
            num: r.numer(),
            den: r.denom(),
        }
    }
}

impl Rational {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rational(Ratio::new(num, den))
    }

    pub fn integer(n: i64) -> Self {
        Rational(Ratio::from_integer(n))
    }

    /// Ratio of two counts, e.g. `S/F`.
    pub fn of_counts(num: usize, den: usize) -> Self {
        Rational::new(num as i64, den as i64)
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl std::ops::Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        Rational(self.0 * rhs.0)
    }
}

impl std::ops::Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        Rational(self.0 + rhs.0)
    }
}

impl std::ops::Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Rational) -> Rational {
        Rational(self.0 - rhs.0)
    }
}

impl std::ops::Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        Rational(self.0 / rhs.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_and_normalizes_sign() {
        let r = Rational::new(-6, -8);
        assert_eq!((r.numer(), r.denom()), (3, 4));
        let r = Rational::new(6, -8);
        assert_eq!((r.numer(), r.denom()), (-3, 4));
    }

    #[test]
    fn display_always_shows_denominator() {
        assert_eq!(Rational::integer(1).to_string(), "1/1");
        assert_eq!(Rational::new(12, 12).to_string(), "1/1");
        assert_eq!(Rational::new(24, 56).to_string(), "3/7");
    }

    #[test]
    fn json_wire_format() {
        let r = Rational::new(24, 56);
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(json, r#"{"num":3,"den":7}"#);
        let back: Rational = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn exact_equality_across_routes() {
        // S/F for the (9,3,1) scheme both ways.
        assert_eq!(Rational::of_counts(9, 12), Rational::new(3, 4));
        assert_eq!(
            Rational::of_counts(3 * 2, 9 - 1),
            Rational::of_counts(9, 12)
        );
    }
}
