use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{Mode, TrainTrack};
use crate::error::{Error, Result};
use crate::slope::Slope;

/// Nonnegative rational weights, indexed by edge id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Measure {
    weights: Vec<BigRational>,
}

impl Measure {
    pub fn new(track: &TrainTrack, weights: Vec<BigRational>) -> Result<Self> {
        let expected = track.edges().len();
        if weights.len() != expected {
            return Err(Error::MeasureSize { expected, got: weights.len() });
        }
        if let Some(e) = weights.iter().position(|w| w.is_negative()) {
            return Err(Error::NegativeWeight(e));
        }
        Ok(Measure { weights })
    }

    pub fn zero(track: &TrainTrack) -> Self {
        Measure { weights: vec![BigRational::zero(); track.edges().len()] }
    }

    pub fn weights(&self) -> &[BigRational] {
        &self.weights
    }

    /// Adds `coeff` for every traversal of an edge in `path`.
    pub fn add_path(&mut self, path: &[usize], coeff: &BigRational) {
        for &e in path {
            self.weights[e] += coeff;
        }
    }

    pub fn add_scaled(&mut self, other: &Measure, coeff: &BigRational) {
        for (w, o) in self.weights.iter_mut().zip(&other.weights) {
            *w += o * coeff;
        }
    }

    pub fn is_strictly_positive(&self) -> bool {
        self.weights.iter().all(|w| w.is_positive())
    }

    /// One `weight <edge> <a/b>` line per edge.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (e, w) in self.weights.iter().enumerate() {
            writeln!(s, "weight {e} {w}").unwrap();
        }
        s
    }

    pub fn parse_text(track: &TrainTrack, text: &str) -> Result<Self> {
        let mut weights = vec![None; track.edges().len()];
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |message: String| Error::Parse { line: i + 1, message };
            let fields: Vec<&str> = line.split_whitespace().collect();
            let [kw, edge, value] = fields[..] else {
                return Err(err(format!("expected 'weight <edge> <a/b>', got '{line}'")));
            };
            if kw != "weight" {
                return Err(err(format!("unknown keyword '{kw}'")));
            }
            let e: usize = edge.parse().map_err(|_| err(format!("bad edge id '{edge}'")))?;
            let w: BigRational = value.parse().map_err(|_| err(format!("bad weight '{value}'")))?;
            let slot = weights.get_mut(e).ok_or_else(|| err(format!("edge {e} out of range")))?;
            if slot.replace(w).is_some() {
                return Err(err(format!("edge {e} weighted twice")));
            }
        }
        let got = weights.iter().filter(|w| w.is_some()).count();
        if got != weights.len() {
            return Err(Error::MeasureSize { expected: weights.len(), got });
        }
        Measure::new(track, weights.into_iter().map(Option::unwrap).collect())
    }
}

/// Homology class `(a, b)` with slope `a/b`: `a` counts signed crossings of
/// the last circle gap and `b` the winding along the fiber circles.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleClass {
    pub a: BigInt,
    pub b: BigInt,
}

impl CycleClass {
    pub fn new(a: i64, b: i64) -> Self {
        CycleClass { a: a.into(), b: b.into() }
    }

    pub fn slope(&self) -> Result<Slope> {
        if self.a.is_zero() && self.b.is_zero() {
            return Err(Error::DegenerateClass);
        }
        let g = self.a.gcd(&self.b);
        let conv = |x: &BigInt| (x / &g).to_i64().ok_or(Error::DegenerateClass);
        Slope::new(conv(&self.a)?, conv(&self.b)?)
    }
}

pub fn check_switches(track: &TrainTrack, m: &Measure) -> Result<()> {
    if m.weights.len() != track.edges().len() {
        return Err(Error::MeasureSize { expected: track.edges().len(), got: m.weights.len() });
    }
    for w in track.switches() {
        let [x, y] = w.cusped;
        if m.weights[w.smooth] != &m.weights[x] + &m.weights[y] {
            return Err(Error::SwitchViolation { switch: w.id });
        }
    }
    Ok(())
}

/// Homology class of `m` read as a 1-cycle with the orientation of `mode`.
pub fn measure_class(track: &TrainTrack, m: &Measure, mode: Mode) -> Result<CycleClass> {
    check_switches(track, m)?;
    let mut v = BigRational::zero();
    let mut disp = BigRational::zero();
    for (e, w) in m.weights.iter().enumerate() {
        let g = track.gap_crossing(e, mode);
        if g != 0 {
            v += w * BigRational::from_integer(g.into());
        }
        disp += w * BigRational::from_integer(track.oriented_disp(e, mode).into());
    }
    let w = disp / BigRational::from_integer(track.circle_length().into());
    let l = v.denom().lcm(w.denom());
    let scale = BigRational::from_integer(l);
    let (a, b) = ((v * &scale).to_integer(), (w * &scale).to_integer());
    Ok(CycleClass { a, b })
}

/// Counts how often each edge occurs in `path`.
pub fn indicator_measure(track: &TrainTrack, path: &[usize]) -> Measure {
    let mut m = Measure::zero(track);
    m.add_path(path, &BigRational::one());
    m
}
