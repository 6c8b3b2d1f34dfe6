//! Exact divisor arithmetic over an abstract curve.
//!
//! Points are opaque string labels; a divisor is a finite formal sum of
//! labeled points with integer multiplicities, kept in canonical form (no
//! zero entries, entries ordered by label). All the computations in this
//! crate depend only on multiplicities, so no geometry is attached to the
//! labels.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DivisorError {
    /// A point carries an odd multiplicity where an even one is required.
    #[error("divisor is not twice another divisor: point `{0}` has odd multiplicity")]
    OddMultiplicity(String),
    #[error("divisor must be effective, but point `{0}` has multiplicity {1}")]
    NotEffective(String, i64),
    #[error("cannot parse divisor from `{input}`: {reason}")]
    Parse { input: String, reason: String },
}

/// An opaque point label on the base curve.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Point(pub String);

impl Point {
    pub fn new(label: impl Into<String>) -> Self {
        Point(label.into())
    }

    pub fn label(&self) -> &str {
        &self.0
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<&str> for Point {
    fn from(s: &str) -> Self {
        Point::new(s)
    }
}

/// A divisor: a finite map from points to nonzero integer multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Divisor {
    coeffs: BTreeMap<Point, i64>,
}

impl Divisor {
    /// The zero divisor.
    pub fn zero() -> Self {
        Divisor::default()
    }

    /// Build from explicit (point, multiplicity) pairs; repeated points add up.
    pub fn from_pairs<I, P>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (P, i64)>,
        P: Into<Point>,
    {
        let mut d = Divisor::zero();
        for (p, m) in pairs {
            d.bump(p.into(), m);
        }
        d
    }

    /// A single point with multiplicity.
    pub fn point(p: impl Into<Point>, mult: i64) -> Self {
        Divisor::from_pairs([(p, mult)])
    }

    fn bump(&mut self, p: Point, m: i64) {
        let entry = self.coeffs.entry(p.clone()).or_insert(0);
        *entry += m;
        if *entry == 0 {
            self.coeffs.remove(&p);
        }
    }

    /// Multiplicity at a point (zero when absent).
    pub fn mult(&self, p: &Point) -> i64 {
        self.coeffs.get(p).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> i64 {
        self.coeffs.values().sum()
    }

    pub fn support(&self) -> BTreeSet<Point> {
        self.coeffs.keys().cloned().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_effective(&self) -> bool {
        self.coeffs.values().all(|&m| m > 0)
    }

    /// Iterate over (point, multiplicity) in label order.
    pub fn iter(&self) -> impl Iterator<Item = (&Point, i64)> {
        self.coeffs.iter().map(|(p, &m)| (p, m))
    }

    /// Pointwise partial order.
    pub fn leq(&self, other: &Divisor) -> bool {
        let support: BTreeSet<&Point> = self.coeffs.keys().chain(other.coeffs.keys()).collect();
        support.iter().all(|p| self.mult(p) <= other.mult(p))
    }

    /// Pointwise minimum.
    pub fn min(&self, other: &Divisor) -> Divisor {
        let support: BTreeSet<&Point> = self.coeffs.keys().chain(other.coeffs.keys()).collect();
        Divisor::from_pairs(
            support
                .into_iter()
                .map(|p| (p.clone(), self.mult(p).min(other.mult(p)))),
        )
    }

    /// Pointwise maximum.
    pub fn max(&self, other: &Divisor) -> Divisor {
        let support: BTreeSet<&Point> = self.coeffs.keys().chain(other.coeffs.keys()).collect();
        Divisor::from_pairs(
            support
                .into_iter()
                .map(|p| (p.clone(), self.mult(p).max(other.mult(p)))),
        )
    }

    /// Split an effective divisor into its even- and odd-multiplicity parts.
    pub fn even_odd_split(&self) -> Result<(Divisor, Divisor), DivisorError> {
        self.require_effective()?;
        let even = Divisor::from_pairs(
            self.iter()
                .filter(|(_, m)| m % 2 == 0)
                .map(|(p, m)| (p.clone(), m)),
        );
        let odd = Divisor::from_pairs(
            self.iter()
                .filter(|(_, m)| m % 2 != 0)
                .map(|(p, m)| (p.clone(), m)),
        );
        Ok((even, odd))
    }

    /// The divisor `E` with `2E = self`, when every multiplicity is even.
    pub fn half(&self) -> Result<Divisor, DivisorError> {
        if let Some((p, _)) = self.iter().find(|(_, m)| m % 2 != 0) {
            return Err(DivisorError::OddMultiplicity(p.label().to_string()));
        }
        Ok(Divisor::from_pairs(
            self.iter().map(|(p, m)| (p.clone(), m / 2)),
        ))
    }

    /// The delta divisor of an effective divisor: `m/2` at even-multiplicity
    /// points and `(m-1)/2` at odd ones. Its degree is the genus drop from
    /// the curve cut out by a section with this zero divisor to its
    /// normalization.
    pub fn delta_divisor(&self) -> Result<Divisor, DivisorError> {
        self.require_effective()?;
        Ok(Divisor::from_pairs(self.iter().map(|(p, m)| {
            let half = if m % 2 == 0 { m / 2 } else { (m - 1) / 2 };
            (p.clone(), half)
        })))
    }

    fn require_effective(&self) -> Result<(), DivisorError> {
        match self.iter().find(|(_, m)| *m <= 0) {
            Some((p, m)) => Err(DivisorError::NotEffective(p.label().to_string(), m)),
            None => Ok(()),
        }
    }

    /// Compact text form, e.g. `4p+3q`, `p-2q`, `0`.
    pub fn compact(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (p, m) in self.iter() {
            if m >= 0 && !out.is_empty() {
                out.push('+');
            }
            match m {
                1 => {}
                -1 => out.push('-'),
                _ => out.push_str(&m.to_string()),
            }
            out.push_str(p.label());
        }
        out
    }
}

impl fmt::Display for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.compact())
    }
}

impl Add for &Divisor {
    type Output = Divisor;
    fn add(self, rhs: &Divisor) -> Divisor {
        let mut out = self.clone();
        for (p, m) in rhs.iter() {
            out.bump(p.clone(), m);
        }
        out
    }
}

impl Add for Divisor {
    type Output = Divisor;
    fn add(self, rhs: Divisor) -> Divisor {
        &self + &rhs
    }
}

impl Sub for &Divisor {
    type Output = Divisor;
    fn sub(self, rhs: &Divisor) -> Divisor {
        let mut out = self.clone();
        for (p, m) in rhs.iter() {
            out.bump(p.clone(), -m);
        }
        out
    }
}

impl Sub for Divisor {
    type Output = Divisor;
    fn sub(self, rhs: Divisor) -> Divisor {
        &self - &rhs
    }
}

impl Neg for &Divisor {
    type Output = Divisor;
    fn neg(self) -> Divisor {
        Divisor::from_pairs(self.iter().map(|(p, m)| (p.clone(), -m)))
    }
}

/// Parse the compact text form: signed integer coefficients followed by
/// alphanumeric labels, e.g. `2p+3q`, `-p1+4p2`, `0`.
impl FromStr for Divisor {
    type Err = DivisorError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| DivisorError::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() {
            return Err(err("empty input"));
        }
        if text == "0" {
            return Ok(Divisor::zero());
        }
        let mut pairs: Vec<(Point, i64)> = Vec::new();
        let mut chars = text.chars().peekable();
        loop {
            let mut sign = 1i64;
            match chars.peek() {
                Some('+') => {
                    chars.next();
                }
                Some('-') => {
                    sign = -1;
                    chars.next();
                }
                Some(_) => {}
                None => break,
            }
            let mut digits = String::new();
            while let Some(c) = chars.peek() {
                if c.is_ascii_digit() {
                    digits.push(*c);
                    chars.next();
                } else {
                    break;
                }
            }
            let coeff: i64 = if digits.is_empty() {
                1
            } else {
                digits.parse().map_err(|_| err("multiplicity overflow"))?
            };
            let mut label = String::new();
            while let Some(c) = chars.peek() {
                if c.is_alphanumeric() || *c == '_' {
                    label.push(*c);
                    chars.next();
                } else {
                    break;
                }
            }
            if label.is_empty() {
                return Err(err("expected a point label"));
            }
            if label.chars().next().is_some_and(|c| c.is_ascii_digit()) {
                return Err(err("labels must not start with a digit"));
            }
            pairs.push((Point::new(label), sign * coeff));
        }
        if pairs.is_empty() {
            return Err(err("no terms"));
        }
        Ok(Divisor::from_pairs(pairs))
    }
}

#[derive(Serialize, Deserialize)]
struct Entry {
    label: String,
    mult: i64,
}

#[derive(Serialize, Deserialize)]
struct Wire {
    points: Vec<Entry>,
}

impl Serialize for Divisor {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let wire = Wire {
            points: self
                .iter()
                .map(|(p, m)| Entry {
                    label: p.label().to_string(),
                    mult: m,
                })
                .collect(),
        };
        wire.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Divisor {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let wire = Wire::deserialize(deserializer)?;
        let mut d = Divisor::zero();
        for e in wire.points {
            if e.mult == 0 {
                return Err(D::Error::custom("zero multiplicities are not stored"));
            }
            if d.mult(&Point::new(e.label.clone())) != 0 {
                return Err(D::Error::custom(format!("duplicate label `{}`", e.label)));
            }
            d.bump(Point::new(e.label), e.mult);
        }
        Ok(d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> Divisor {
        s.parse().unwrap()
    }

    #[test]
    fn addition_is_pointwise() {
        assert_eq!(d("2p") + d("p+q"), d("3p+q"));
        assert_eq!(d("4p+3q") + Divisor::zero(), d("4p+3q"));
        // cancellation drops the point entirely
        assert_eq!(d("4p+3q") + d("-4p"), d("3q"));
    }

    #[test]
    fn order_min_max() {
        assert!(d("p").leq(&d("p+q")));
        assert_eq!(d("2p+q").min(&d("p+3q")), d("p+q"));
        assert_eq!(d("2p+q").max(&d("p+3q")), d("2p+3q"));
        assert!(!d("2p").leq(&d("3q")));
        assert!(!d("3q").leq(&d("2p")));
    }

    #[test]
    fn even_odd_split_examples() {
        let (e, o) = d("4p+3q").even_odd_split().unwrap();
        assert_eq!((e, o), (d("4p"), d("3q")));
        let (e, o) = Divisor::zero().even_odd_split().unwrap();
        assert!(e.is_zero() && o.is_zero());
        let (e, o) = d("2p+2q").even_odd_split().unwrap();
        assert_eq!((e, o), (d("2p+2q"), Divisor::zero()));
    }

    #[test]
    fn half_examples() {
        assert_eq!(d("4p+2q").half().unwrap(), d("2p+q"));
        assert!(matches!(
            d("3p").half(),
            Err(DivisorError::OddMultiplicity(_))
        ));
        assert_eq!(Divisor::zero().half().unwrap(), Divisor::zero());
    }

    #[test]
    fn delta_divisor_examples() {
        assert_eq!(d("4p+3q").delta_divisor().unwrap(), d("2p+q"));
        assert_eq!(d("p+q").delta_divisor().unwrap(), Divisor::zero());
        assert_eq!(d("6p").delta_divisor().unwrap(), d("3p"));
    }

    #[test]
    fn compact_round_trip() {
        for s in ["0", "p", "2p+3q", "4p1+q2", "-p+2q"] {
            let div = d(s);
            assert_eq!(d(&div.compact()), div);
        }
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("".parse::<Divisor>().is_err());
        assert!("2".parse::<Divisor>().is_err());
        assert!("p+".parse::<Divisor>().is_err());
        assert!("3 4".parse::<Divisor>().is_err());
    }

    #[test]
    fn json_shape_is_sorted_by_label() {
        let div = d("3q+4p");
        let json = serde_json::to_string(&div).unwrap();
        assert_eq!(
            json,
            r#"{"points":[{"label":"p","mult":4},{"label":"q","mult":3}]}"#
        );
        let back: Divisor = serde_json::from_str(&json).unwrap();
        assert_eq!(back, div);
    }

    #[test]
    fn json_rejects_zero_and_duplicates() {
        assert!(serde_json::from_str::<Divisor>(r#"{"points":[{"label":"p","mult":0}]}"#).is_err());
        assert!(serde_json::from_str::<Divisor>(
            r#"{"points":[{"label":"p","mult":1},{"label":"p","mult":2}]}"#
        )
        .is_err());
    }
}
