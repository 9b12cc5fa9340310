//! Open subsets of `RP^1` built from finitely many arcs, and the filling
//! intervals of a boundary orbit.

use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::monodromy::PhiTriple;
use crate::slope::Slope;

/// Endpoint of an arc in the affine chart `R ⊂ RP^1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Bound {
    NegInf,
    Finite(Rational64),
    PosInf,
}

impl Bound {
    fn negate(self) -> Bound {
        match self {
            Bound::NegInf => Bound::PosInf,
            Bound::PosInf => Bound::NegInf,
            Bound::Finite(r) => Bound::Finite(-r),
        }
    }
}

/// An open interval `(lo, hi)` of the real line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arc {
    pub lo: Bound,
    pub hi: Bound,
}

impl Arc {
    pub fn new(lo: Bound, hi: Bound) -> Self {
        Arc { lo, hi }
    }

    fn is_empty(&self) -> bool {
        self.lo >= self.hi || self.lo == Bound::PosInf || self.hi == Bound::NegInf
    }

    fn contains(&self, x: Rational64) -> bool {
        self.lo < Bound::Finite(x) && Bound::Finite(x) < self.hi
    }
}

/// A finite union of open arcs of `RP^1`, kept sorted and merged, together
/// with a flag for the point `∞`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct SlopeInterval {
    arcs: Vec<Arc>,
    includes_infinity: bool,
}

impl SlopeInterval {
    pub fn new(arcs: impl IntoIterator<Item = Arc>, includes_infinity: bool) -> Self {
        let mut arcs: Vec<Arc> = arcs.into_iter().filter(|a| !a.is_empty()).collect();
        arcs.sort();
        let mut merged: Vec<Arc> = Vec::with_capacity(arcs.len());
        for a in arcs {
            match merged.last_mut() {
                // open arcs sharing only an endpoint stay separate
                Some(last) if a.lo < last.hi => last.hi = last.hi.max(a.hi),
                _ => merged.push(a),
            }
        }
        SlopeInterval { arcs: merged, includes_infinity }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn includes_infinity(&self) -> bool {
        self.includes_infinity
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty() && !self.includes_infinity
    }

    pub fn contains(&self, s: Slope) -> bool {
        match s.as_ratio() {
            None => self.includes_infinity,
            Some(x) => self.arcs.iter().any(|a| a.contains(x)),
        }
    }

    /// Image under `s ↦ -s`.
    pub fn negate(&self) -> Self {
        SlopeInterval::new(
            self.arcs.iter().map(|a| Arc::new(a.hi.negate(), a.lo.negate())),
            self.includes_infinity,
        )
    }

    /// Finite endpoints of all arcs, in order.
    pub fn finite_endpoints(&self) -> Vec<Rational64> {
        let mut out = Vec::new();
        for a in &self.arcs {
            for b in [a.lo, a.hi] {
                if let Bound::Finite(r) = b {
                    out.push(r);
                }
            }
        }
        out
    }
}

pub fn contains(j: &SlopeInterval, s: Slope) -> bool {
    j.contains(s)
}

fn ratio_of(s: Slope) -> Bound {
    s.as_ratio().map_or(Bound::PosInf, Bound::Finite)
}

/// The component of `RP^1 - {e1, e2}` that avoids `excluded`.
pub fn rp1_between(e1: Slope, e2: Slope, excluded: Slope) -> Result<SlopeInterval> {
    if e1 == e2 || e1 == excluded || e2 == excluded {
        return Err(Error::CoincidentEndpoints);
    }
    let (x, y) = match (e1.as_ratio(), e2.as_ratio()) {
        (Some(x), Some(y)) => (x.min(y), x.max(y)),
        (None, Some(e)) | (Some(e), None) => {
            // excluded is finite because it differs from both
            let z = excluded.as_ratio().expect("distinct from inf");
            let arc = if z < e {
                Arc::new(Bound::Finite(e), Bound::PosInf)
            } else {
                Arc::new(Bound::NegInf, Bound::Finite(e))
            };
            return Ok(SlopeInterval::new([arc], false));
        }
        (None, None) => unreachable!("e1 != e2"),
    };
    let inner = Arc::new(Bound::Finite(x), Bound::Finite(y));
    let inside = excluded.as_ratio().is_some_and(|z| inner.contains(z));
    Ok(if inside {
        SlopeInterval::new(
            [Arc::new(Bound::NegInf, Bound::Finite(x)), Arc::new(Bound::Finite(y), Bound::PosInf)],
            true,
        )
    } else {
        SlopeInterval::new([inner], false)
    })
}

/// `p / k` as an endpoint; `k = 0` is `∞`.
fn frac(p: i64, k: i64) -> Slope {
    Slope::new(p, k).expect("p > 0")
}

/// The CTF filling interval of a boundary orbit, case by case.
pub fn ctf_interval(t: &PhiTriple) -> SlopeInterval {
    let (c, p, q) = (t.c(), t.p(), t.q());
    let fin = |s: Slope| ratio_of(s);
    let r = |n: i64, d: i64| Bound::Finite(Rational64::new(n, d));
    let (arcs, inf) = if q > c {
        (
            vec![
                Arc::new(Bound::NegInf, fin(frac(p, q + c))),
                Arc::new(fin(frac(p, q - c)), Bound::PosInf),
            ],
            true,
        )
    } else if q == c {
        (vec![Arc::new(Bound::NegInf, r(p, 2 * q))], false)
    } else if q >= 0 {
        (vec![Arc::new(r(-p, c - q), r(p, q + c))], false)
    } else if q > -c {
        (vec![Arc::new(r(-p, q.abs() + c), r(p, c - q.abs()))], false)
    } else if q == -c {
        (vec![Arc::new(r(-p, 2 * q.abs()), Bound::PosInf)], false)
    } else {
        (
            vec![
                Arc::new(Bound::NegInf, r(-p, q.abs() - c)),
                Arc::new(r(-p, q.abs() + c), Bound::PosInf),
            ],
            true,
        )
    };
    SlopeInterval::new(arcs, inf)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Multislope(pub Vec<Slope>);

pub fn multislope_member(intervals: &[SlopeInterval], m: &Multislope) -> Result<bool> {
    if intervals.len() != m.0.len() {
        return Err(Error::LengthMismatch { intervals: intervals.len(), slopes: m.0.len() });
    }
    Ok(intervals.iter().zip(&m.0).all(|(j, s)| j.contains(*s)))
}

fn bound_text(b: Bound) -> String {
    match b {
        Bound::NegInf => "-inf".into(),
        Bound::PosInf => "inf".into(),
        Bound::Finite(r) => Slope::from_ratio(r).to_string(),
    }
}

impl fmt::Display for SlopeInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("{}");
        }
        let mut terms: Vec<String> = self
            .arcs
            .iter()
            .map(|a| format!("({}, {})", bound_text(a.lo), bound_text(a.hi)))
            .collect();
        if self.includes_infinity {
            terms.push("{inf}".into());
        }
        f.write_str(&terms.join(" U "))
    }
}

fn parse_bound(text: &str, whole: &str) -> Result<Bound> {
    match text {
        "-inf" => Ok(Bound::NegInf),
        "inf" => Ok(Bound::PosInf),
        _ => {
            let s: Slope = text
                .parse()
                .map_err(|_| Error::MalformedInterval(format!("bad endpoint '{text}' in '{whole}'")))?;
            Ok(Bound::Finite(s.as_ratio().expect("'inf' handled above")))
        }
    }
}

impl FromStr for SlopeInterval {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let whole = s.trim();
        if whole == "{}" {
            return Ok(SlopeInterval::empty());
        }
        let bad = |why: &str| Error::MalformedInterval(format!("{why} in '{whole}'"));
        let mut arcs = Vec::new();
        let mut inf = false;
        for term in whole.split(" U ") {
            let term = term.trim();
            if term == "{inf}" {
                if inf {
                    return Err(bad("repeated {inf}"));
                }
                inf = true;
                continue;
            }
            let body = term
                .strip_prefix('(')
                .and_then(|t| t.strip_suffix(')'))
                .ok_or_else(|| bad("expected '(lo, hi)'"))?;
            let (lo, hi) = body.split_once(',').ok_or_else(|| bad("missing ','"))?;
            let arc = Arc::new(parse_bound(lo.trim(), whole)?, parse_bound(hi.trim(), whole)?);
            if arc.is_empty() {
                return Err(bad("empty arc"));
            }
            arcs.push(arc);
        }
        Ok(SlopeInterval::new(arcs, inf))
    }
}

impl Serialize for SlopeInterval {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for SlopeInterval {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monodromy::validate_triple;

    fn s(t: &str) -> Slope {
        t.parse().unwrap()
    }

    fn j(c: i64, p: i64, q: i64) -> String {
        ctf_interval(&validate_triple(c, p, q).unwrap()).to_string()
    }

    #[test]
    fn six_cases() {
        assert_eq!(j(1, 4, 1), "(-inf, 2)");
        assert_eq!(j(1, 6, -1), "(-3, inf)");
        assert_eq!(j(1, 8, -3), "(-inf, -4) U (-2, inf) U {inf}");
        assert_eq!(j(1, 8, 3), "(-inf, 2) U (4, inf) U {inf}");
        assert_eq!(j(2, 4, 0), "(-2, 2)");
        assert_eq!(j(3, 12, 1), "(-6, 3)");
        assert_eq!(j(3, 12, -1), "(-3, 6)");
        assert_eq!(j(2, 8, -2), "(-2, inf)");
    }

    #[test]
    fn between_examples() {
        let b = |a, c, e| rp1_between(s(a), s(c), s(e)).unwrap().to_string();
        assert_eq!(b("2", "inf", "4"), "(-inf, 2)");
        assert_eq!(b("inf", "-3", "-6"), "(-3, inf)");
        assert_eq!(b("0", "1", "1/2"), "(-inf, 0) U (1, inf) U {inf}");
        assert_eq!(b("1", "0", "5"), "(0, 1)");
        assert_eq!(rp1_between(s("1"), s("1"), s("2")), Err(Error::CoincidentEndpoints));
        assert_eq!(rp1_between(s("1"), s("inf"), s("inf")), Err(Error::CoincidentEndpoints));
    }

    #[test]
    fn membership() {
        let a: SlopeInterval = "(-inf, 2)".parse().unwrap();
        assert!(a.contains(Slope::ZERO));
        assert!(!a.contains(s("2")));
        assert!(!a.contains(Slope::INFINITY));
        let b: SlopeInterval = "(-inf, -4) U (-2, inf) U {inf}".parse().unwrap();
        assert!(b.contains(Slope::INFINITY));
        assert!(!b.contains(s("-3")));
        assert!(!b.contains(s("-4")));
    }

    #[test]
    fn multislopes() {
        let a: SlopeInterval = "(-inf, 2)".parse().unwrap();
        let b: SlopeInterval = "(-3, inf)".parse().unwrap();
        let m = |v: &[&str]| Multislope(v.iter().map(|t| s(t)).collect());
        assert!(multislope_member(&[a.clone()], &m(&["0"])).unwrap());
        assert!(!multislope_member(&[a.clone(), b.clone()], &m(&["1", "-3"])).unwrap());
        assert!(multislope_member(&[a.clone(), b.clone()], &m(&["-7", "100"])).unwrap());
        assert_eq!(
            multislope_member(&[a], &m(&["1", "2"])),
            Err(Error::LengthMismatch { intervals: 1, slopes: 2 })
        );
    }

    #[test]
    fn canonical_form() {
        let x: SlopeInterval = "(1, 3) U (-inf, 0) U (2, 5)".parse().unwrap();
        assert_eq!(x.to_string(), "(-inf, 0) U (1, 5)");
        let y: SlopeInterval = "(0, 1) U (1, 2)".parse().unwrap();
        assert_eq!(y.to_string(), "(0, 1) U (1, 2)");
        assert_eq!(SlopeInterval::empty().to_string(), "{}");
        assert_eq!("{}".parse::<SlopeInterval>().unwrap(), SlopeInterval::empty());
        assert!("(2, 1)".parse::<SlopeInterval>().is_err());
        assert!("(1, 4/0/1)".parse::<SlopeInterval>().is_err());
        assert!("[1, 2)".parse::<SlopeInterval>().is_err());
        assert!("{inf} U {inf}".parse::<SlopeInterval>().is_err());
        let z: SlopeInterval = "(-5/2, 7/3)".parse().unwrap();
        assert_eq!(z.negate().to_string(), "(-7/3, 5/2)");
    }

    #[test]
    fn json_round_trip() {
        let x = ctf_interval(&validate_triple(1, 8, -3).unwrap());
        let text = serde_json::to_string(&x).unwrap();
        assert_eq!(text, "\"(-inf, -4) U (-2, inf) U {inf}\"");
        assert_eq!(serde_json::from_str::<SlopeInterval>(&text).unwrap(), x);
    }
}
