//! The min-plus tropical semiring over exact rationals.
//!
//! A tropical number is either a finite rational or `∞`. Tropical addition
//! is `min`, tropical multiplication is ordinary addition, and `∞` is the
//! additive identity (absorbing for multiplication). Projective vectors are
//! compared up to a common finite shift of all finite coordinates.

use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// Exact rational scalar used throughout the crate.
pub type Rat = num_rational::Rational64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TropError {
    #[error("cannot parse {0:?} as a rational or \"inf\"")]
    Parse(String),
    #[error("vector length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
}

/// An element of the tropical semiring `(ℚ ∪ {∞}, min, +)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TropValue {
    Fin(Rat),
    Inf,
}

pub use TropValue::{Fin, Inf};

impl TropValue {
    pub fn from_int(v: i64) -> Self {
        Fin(Rat::from_integer(v))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Fin(_))
    }

    /// Tropical sum, i.e. the minimum.
    pub fn add(self, other: Self) -> Self {
        std::cmp::min(self, other)
    }

    /// Tropical product, i.e. ordinary addition; `∞` is absorbing.
    pub fn mul(self, other: Self) -> Self {
        match (self, other) {
            (Fin(a), Fin(b)) => Fin(a + b),
            _ => Inf,
        }
    }

    /// The finite value, if any.
    pub fn finite(&self) -> Option<Rat> {
        match self {
            Fin(v) => Some(*v),
            Inf => None,
        }
    }
}

impl Ord for TropValue {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Fin(a), Fin(b)) => a.cmp(b),
            (Fin(_), Inf) => Ordering::Less,
            (Inf, Fin(_)) => Ordering::Greater,
            (Inf, Inf) => Ordering::Equal,
        }
    }
}

impl PartialOrd for TropValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for TropValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Fin(v) => {
                if v.denom() == &1 {
                    write!(f, "{}", v.numer())
                } else {
                    write!(f, "{}/{}", v.numer(), v.denom())
                }
            }
            Inf => write!(f, "inf"),
        }
    }
}

/// Parse a rational from a decimal integer or a `p/q` string.
pub fn parse_rat(s: &str) -> Result<Rat, TropError> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p: i64 = p.trim().parse().map_err(|_| TropError::Parse(s.into()))?;
        let q: i64 = q.trim().parse().map_err(|_| TropError::Parse(s.into()))?;
        if q == 0 {
            return Err(TropError::Parse(s.into()));
        }
        Ok(Rat::new(p, q))
    } else {
        let p: i64 = s.parse().map_err(|_| TropError::Parse(s.into()))?;
        Ok(Rat::from_integer(p))
    }
}

impl FromStr for TropValue {
    type Err = TropError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("inf") || t == "∞" {
            Ok(Inf)
        } else {
            parse_rat(t).map(Fin)
        }
    }
}

impl Serialize for TropValue {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        match self {
            Fin(v) if v.denom() == &1 => ser.serialize_i64(*v.numer()),
            other => ser.serialize_str(&other.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for TropValue {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(de)?;
        match v {
            serde_json::Value::Number(n) => {
                let i = n
                    .as_i64()
                    .ok_or_else(|| D::Error::custom("scalars must be exact integers or \"p/q\""))?;
                Ok(TropValue::from_int(i))
            }
            serde_json::Value::String(s) => s.parse().map_err(D::Error::custom),
            other => Err(D::Error::custom(format!(
                "expected integer, \"p/q\" or \"inf\", got {other}"
            ))),
        }
    }
}

/// `true` when the minimum of `vals` is attained at least twice, with the
/// all-`∞` vector passing vacuously.
pub fn min_achieved_twice(vals: &[TropValue]) -> bool {
    let m = match vals.iter().min() {
        Some(m) => *m,
        None => return true,
    };
    if m == Inf {
        return true;
    }
    vals.iter().filter(|v| **v == m).count() >= 2
}

/// A vector of tropical numbers considered up to a common finite shift of
/// all coordinates. The all-`∞` vector is allowed and equals only itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TropProjVector(pub Vec<TropValue>);

impl TropProjVector {
    /// Projective equality: same `∞`-support and constant finite difference.
    pub fn proj_equal(&self, other: &Self) -> Result<bool, TropError> {
        if self.0.len() != other.0.len() {
            return Err(TropError::LengthMismatch(self.0.len(), other.0.len()));
        }
        let mut shift: Option<Rat> = None;
        for (a, b) in self.0.iter().zip(&other.0) {
            match (a, b) {
                (Inf, Inf) => {}
                (Fin(x), Fin(y)) => {
                    let d = *x - *y;
                    match shift {
                        None => shift = Some(d),
                        Some(s) if s == d => {}
                        Some(_) => return Ok(false),
                    }
                }
                _ => return Ok(false),
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fin(p: i64, q: i64) -> TropValue {
        Fin(Rat::new(p, q))
    }

    #[test]
    fn semiring_ops() {
        assert_eq!(TropValue::from_int(2).add(TropValue::from_int(5)), TropValue::from_int(2));
        assert_eq!(TropValue::from_int(2).mul(TropValue::from_int(5)), TropValue::from_int(7));
        assert_eq!(Inf.add(TropValue::from_int(3)), TropValue::from_int(3));
        assert_eq!(Inf.mul(TropValue::from_int(3)), Inf);
        assert_eq!(fin(1, 2).mul(fin(1, 3)), fin(5, 6));
    }

    #[test]
    fn ordering_puts_inf_last() {
        assert!(TropValue::from_int(100) < Inf);
        assert!(fin(-1, 2) < TropValue::from_int(0));
    }

    #[test]
    fn min_twice() {
        let i = TropValue::from_int;
        assert!(min_achieved_twice(&[i(0), i(1), i(0)]));
        assert!(!min_achieved_twice(&[i(0), i(1), i(2)]));
        assert!(min_achieved_twice(&[Inf, Inf]));
        assert!(!min_achieved_twice(&[i(3)]));
        assert!(min_achieved_twice(&[i(1), i(1), Inf]));
    }

    #[test]
    fn projective_equality() {
        let i = TropValue::from_int;
        let u = TropProjVector(vec![i(0), i(1), Inf]);
        let v = TropProjVector(vec![i(5), i(6), Inf]);
        let w = TropProjVector(vec![i(0), i(2), Inf]);
        let x = TropProjVector(vec![i(0), i(1), i(2)]);
        assert!(u.proj_equal(&v).unwrap());
        assert!(!u.proj_equal(&w).unwrap());
        assert!(!u.proj_equal(&x).unwrap());
        let all_inf = TropProjVector(vec![Inf, Inf, Inf]);
        assert!(all_inf.proj_equal(&all_inf).unwrap());
        assert!(!all_inf.proj_equal(&u).unwrap());
        assert!(matches!(
            u.proj_equal(&TropProjVector(vec![i(0)])),
            Err(TropError::LengthMismatch(3, 1))
        ));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("inf".parse::<TropValue>().unwrap(), Inf);
        assert_eq!("-3".parse::<TropValue>().unwrap(), TropValue::from_int(-3));
        assert_eq!("1/2".parse::<TropValue>().unwrap(), fin(1, 2));
        assert_eq!(fin(-1, 2).to_string(), "-1/2");
        assert_eq!(Inf.to_string(), "inf");
        assert!("1/0".parse::<TropValue>().is_err());
    }

    #[test]
    fn serde_round_trip() {
        let vals = vec![TropValue::from_int(-2), fin(1, 3), Inf];
        let js = serde_json::to_string(&vals).unwrap();
        assert_eq!(js, "[-2,\"1/3\",\"inf\"]");
        let back: Vec<TropValue> = serde_json::from_str(&js).unwrap();
        assert_eq!(back, vals);
    }
}
