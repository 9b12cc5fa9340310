//! Slopes on a boundary torus in canonical meridian/longitude coordinates.
//!
//! A slope is a point of `Q ∪ {∞}` stored as a reduced fraction with the
//! sign in the numerator. `∞` is the meridian `(1, 0)` and `0` is the
//! longitude `(0, 1)`.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Rational64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slope {
    numerator: i64,
    denominator: i64,
}

impl Slope {
    pub const INFINITY: Slope = Slope { numerator: 1, denominator: 0 };
    pub const ZERO: Slope = Slope { numerator: 0, denominator: 1 };

    /// Reduces `a/b`; `b = 0` gives `∞`. Rejects `0/0`.
    pub fn new(a: i64, b: i64) -> Result<Self> {
        if a == 0 && b == 0 {
            return Err(Error::MalformedSlope("0/0".into()));
        }
        if b == 0 {
            return Ok(Self::INFINITY);
        }
        let g = a.gcd(&b);
        let (mut a, mut b) = (a / g, b / g);
        if b < 0 {
            a = -a;
            b = -b;
        }
        Ok(Slope { numerator: a, denominator: b })
    }

    pub fn integer(n: i64) -> Self {
        Slope { numerator: n, denominator: 1 }
    }

    pub fn from_ratio(r: Rational64) -> Self {
        Slope { numerator: *r.numer(), denominator: *r.denom() }
    }

    pub fn numerator(&self) -> i64 {
        self.numerator
    }

    pub fn denominator(&self) -> i64 {
        self.denominator
    }

    pub fn is_infinite(&self) -> bool {
        self.denominator == 0
    }

    /// The finite value, or `None` for `∞`.
    pub fn as_ratio(&self) -> Option<Rational64> {
        (!self.is_infinite()).then(|| Rational64::new_raw(self.numerator, self.denominator))
    }

    /// Whether the slope is a rational in `[-2, 2)`.
    pub fn in_forbidden_range(&self) -> bool {
        let (a, b) = (self.numerator as i128, self.denominator as i128);
        b != 0 && -2 * b <= a && a < 2 * b
    }

    pub fn neg(&self) -> Slope {
        if self.is_infinite() {
            *self
        } else {
            Slope { numerator: -self.numerator, denominator: self.denominator }
        }
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.numerator, self.denominator) {
            (_, 0) => f.write_str("inf"),
            (a, 1) => write!(f, "{a}"),
            (a, b) => write!(f, "{a}/{b}"),
        }
    }
}

impl FromStr for Slope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::MalformedSlope(s.to_string());
        let t = s.trim();
        if t == "inf" {
            return Ok(Slope::INFINITY);
        }
        let mut parts = t.split('/');
        let a = parts.next().ok_or_else(bad)?;
        let b = parts.next();
        if parts.next().is_some() {
            return Err(bad());
        }
        let a: i64 = a.parse().map_err(|_| bad())?;
        let b: i64 = match b {
            Some(b) => b.parse().map_err(|_| bad())?,
            None => 1,
        };
        Slope::new(a, b).map_err(|_| bad())
    }
}

impl Serialize for Slope {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Slope {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

pub fn reduce_slope(a: i64, b: i64) -> Result<Slope> {
    Slope::new(a, b)
}

/// Minimal geometric intersection number `|a d - b c|`.
pub fn geom_intersection(s: Slope, t: Slope) -> i64 {
    let v = s.numerator as i128 * t.denominator as i128 - s.denominator as i128 * t.numerator as i128;
    v.unsigned_abs() as i64
}

/// A degeneracy locus `(p; q)` with `p > 0` and `-p/2 < q <= p/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DegeneracyLocus {
    p: i64,
    q: i64,
}

impl DegeneracyLocus {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if p <= 0 {
            return Err(Error::InvalidLocus { p, q, reason: "p must be positive" });
        }
        if 2 * q <= -p || 2 * q > p {
            return Err(Error::InvalidLocus { p, q, reason: "q outside (-p/2, p/2]" });
        }
        Ok(DegeneracyLocus { p, q })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn slope(&self) -> Slope {
        Slope::new(self.p, self.q).expect("p > 0")
    }

    pub fn multiplicity(&self) -> i64 {
        self.p.gcd(&self.q)
    }
}

impl fmt::Display for DegeneracyLocus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {})", self.p, self.q)
    }
}

/// Builds `d(T) = (n u; n v)` from the degeneracy slope `u/v` (`u > 0`) and
/// the multiplicity `n`.
pub fn normalize_degeneracy(delta: Slope, multiplicity: i64) -> Result<DegeneracyLocus> {
    if multiplicity <= 0 {
        return Err(Error::InvalidMultiplicity(multiplicity));
    }
    if delta.in_forbidden_range() {
        return Err(Error::DeltaOutOfRange(delta));
    }
    let (mut u, mut v) = (delta.numerator(), delta.denominator());
    if u < 0 {
        u = -u;
        v = -v;
    }
    let locus = DegeneracyLocus::new(multiplicity * u, multiplicity * v)?;
    debug_assert_eq!(locus.multiplicity(), multiplicity);
    Ok(locus)
}

/// Fractional Dehn twist coefficient `1/δ`, zero when `δ = ∞`.
pub fn fdtc(delta: Slope) -> Result<Rational64> {
    match delta.as_ratio() {
        None => Ok(Rational64::from_integer(0)),
        Some(r) if r == Rational64::from_integer(0) => Err(Error::ZeroDegeneracySlope),
        Some(r) => Ok(r.recip()),
    }
}

/// Slope coordinates after reversing the ambient orientation.
pub fn flip_orientation(s: Slope, delta: Slope) -> Result<Slope> {
    if delta == Slope::integer(2) {
        return match s {
            Slope::INFINITY => Ok(Slope::integer(1)),
            x if x == Slope::integer(1) => Ok(Slope::INFINITY),
            other => Err(Error::UnsupportedCoordinateFlip(other)),
        };
    }
    Ok(s.neg())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum KnotType {
    TypeI,
    TypeII,
    TypeIII,
}

impl fmt::Display for KnotType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            KnotType::TypeI => "type-I",
            KnotType::TypeII => "type-II",
            KnotType::TypeIII => "type-III",
        })
    }
}

/// Classifies a knot by where its meridian sits relative to the
/// degeneracy locus and the longitude.
pub fn classify_knot_type(meridian: Slope, locus: DegeneracyLocus) -> Result<KnotType> {
    let delta = locus.slope();
    let intersection = geom_intersection(meridian, delta) * locus.multiplicity();
    if intersection >= 2 {
        return Err(Error::ObstructedMeridian { meridian, intersection });
    }
    if meridian == delta {
        return Ok(KnotType::TypeI);
    }
    if geom_intersection(meridian, Slope::ZERO) == 1 {
        return Ok(KnotType::TypeII);
    }
    // intersection == 1 here, which forces multiplicity one
    assert_eq!(locus.multiplicity(), 1);
    Ok(KnotType::TypeIII)
}
