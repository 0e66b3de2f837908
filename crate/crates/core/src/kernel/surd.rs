//! Numbers of the form c·√m with c, m rational, enough to carry the
//! half-integer powers that appear in some inequality constants.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::kernel::Rational;

/// c·√m with m a nonnegative integer; m = 1 for rational values.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Surd {
    coeff: Rational,
    radicand: BigInt,
}

impl Surd {
    pub fn rational(q: Rational) -> Self {
        Surd {
            coeff: q,
            radicand: BigInt::from(1),
        }
    }

    /// c·√m for any nonnegative rational m.
    pub fn new(coeff: Rational, radicand: Rational) -> Result<Self> {
        if radicand.is_negative() {
            return Err(Error::Precondition("square root of a negative number".into()));
        }
        if radicand.is_zero() || coeff.is_zero() {
            return Ok(Surd::rational(Rational::zero()));
        }
        // √(p/q) = √(pq)/q
        let q = radicand.denom().clone();
        let m = radicand.numer() * &q;
        let mut coeff = coeff / Rational::from(q);
        let mut m = m;
        // pull out small square factors so equal values compare equal structurally
        let mut p = BigInt::from(2);
        while &p * &p <= m && p <= BigInt::from(1000) {
            let sq = &p * &p;
            while (&m % &sq).is_zero() {
                m /= &sq;
                coeff *= Rational::from(p.clone());
            }
            p += 1;
        }
        let root = m.sqrt();
        if &root * &root == m {
            return Ok(Surd::rational(coeff * Rational::from(root)));
        }
        Ok(Surd { coeff, radicand: m })
    }

    /// √q.
    pub fn sqrt(q: Rational) -> Result<Self> {
        Surd::new(Rational::one(), q)
    }

    pub fn coeff(&self) -> &Rational {
        &self.coeff
    }

    pub fn radicand(&self) -> &BigInt {
        &self.radicand
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        (self.radicand == BigInt::from(1)).then_some(&self.coeff)
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn signum(&self) -> i32 {
        self.coeff.signum()
    }

    /// c²·m, the square of the value.
    pub fn square(&self) -> Rational {
        &self.coeff * &self.coeff * Rational::from(self.radicand.clone())
    }

    pub fn mul_rational(&self, q: &Rational) -> Surd {
        if q.is_zero() {
            return Surd::rational(Rational::zero());
        }
        Surd {
            coeff: &self.coeff * q,
            radicand: self.radicand.clone(),
        }
    }

    pub fn mul(&self, other: &Surd) -> Surd {
        Surd::new(
            &self.coeff * &other.coeff,
            Rational::from(&self.radicand * &other.radicand),
        )
        .expect("nonnegative radicand")
    }

    pub fn checked_div(&self, other: &Surd) -> Result<Surd> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // a√r / (b√s) = (a / (b·s))·√(rs)
        let s = Rational::from(other.radicand.clone());
        Surd::new(
            &self.coeff / &(&other.coeff * &s),
            Rational::from(&self.radicand * &other.radicand),
        )
    }

    pub fn to_f64(&self) -> f64 {
        let r: f64 = Rational::from(self.radicand.clone()).to_f64();
        self.coeff.to_f64() * r.sqrt()
    }

    /// Decimal rendering, truncated, with `digits` significant digits.
    pub fn to_decimal(&self, digits: usize) -> String {
        if let Some(q) = self.as_rational() {
            return q.to_decimal(digits);
        }
        let sq = self.square();
        // enough fractional places to cover `digits` significant digits
        let scale_exp = digits as u32 + 2 + sq.denom().to_string().len() as u32;
        let scale = BigInt::from(10u32).pow(scale_exp);
        let scaled = (sq * Rational::from(&scale * &scale)).floor();
        let approx = Rational::new(scaled.sqrt(), scale).expect("nonzero scale");
        let approx = if self.coeff.is_negative() { -approx } else { approx };
        approx.to_decimal(digits)
    }
}

impl From<Rational> for Surd {
    fn from(q: Rational) -> Self {
        Surd::rational(q)
    }
}

impl PartialOrd for Surd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Surd {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.signum().cmp(&other.signum()) {
            Ordering::Equal => {}
            o => return o,
        }
        let by_square = self.square().cmp(&other.square());
        if self.signum() < 0 {
            by_square.reverse()
        } else {
            by_square
        }
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_rational() {
            Some(q) => write!(f, "{q}"),
            None if self.coeff == Rational::one() => write!(f, "sqrt({})", self.radicand),
            None => write!(f, "{}*sqrt({})", self.coeff, self.radicand),
        }
    }
}

impl FromStr for Surd {
    type Err = Error;

    /// Accepts "q", "sqrt(m)" and "q*sqrt(m)" with q, m rational literals.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("invalid surd {s:?}"));
        let (coeff, rest) = match s.find("sqrt(") {
            None => return Ok(Surd::rational(s.parse()?)),
            Some(0) => (Rational::one(), s),
            Some(i) => {
                let head = s[..i].trim_end();
                let head = head.strip_suffix('*').ok_or_else(bad)?;
                (head.trim().parse()?, &s[i..])
            }
        };
        let inner = rest
            .strip_prefix("sqrt(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(bad)?;
        Surd::new(coeff, inner.parse()?)
    }
}

impl Serialize for Surd {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Surd {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Str(String),
            Int(i64),
        }
        match Repr::deserialize(deserializer)? {
            Repr::Str(s) => s.parse().map_err(serde::de::Error::custom),
            Repr::Int(i) => Ok(Surd::rational(Rational::from(i))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perfect_squares_fold() {
        assert_eq!(Surd::sqrt(Rational::frac(9, 4)).unwrap(), Surd::rational(Rational::frac(3, 2)));
        assert_eq!(Surd::sqrt(Rational::frac(1, 2)).unwrap().to_string(), "1/2*sqrt(2)");
    }

    #[test]
    fn ordering_by_squares() {
        let r2 = Surd::sqrt(Rational::from(2)).unwrap();
        assert!(r2 > Surd::rational(Rational::frac(141, 100)));
        assert!(r2 < Surd::rational(Rational::frac(142, 100)));
        assert!(r2.mul_rational(&Rational::from(-1)) < Surd::rational(Rational::zero()));
        assert_eq!(r2.mul(&r2), Surd::rational(Rational::from(2)));
        assert_eq!(
            Surd::rational(Rational::one()).checked_div(&r2).unwrap(),
            Surd::new(Rational::frac(1, 2), Rational::from(2)).unwrap()
        );
    }

    #[test]
    fn parse_and_render() {
        let s: Surd = "3/2*sqrt(8)".parse().unwrap();
        assert_eq!(s, Surd::new(Rational::from(3), Rational::from(2)).unwrap());
        assert_eq!("sqrt(3)".parse::<Surd>().unwrap().to_decimal(6), "1.73205");
        assert_eq!("5/4".parse::<Surd>().unwrap(), Surd::rational(Rational::frac(5, 4)));
        assert!("2*sqrt(-1)".parse::<Surd>().is_err());
        assert!("2sqrt(3)".parse::<Surd>().is_err());
    }
}
