use thiserror::Error;

use crate::slope::Slope;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed slope: {0}")]
    MalformedSlope(String),

    #[error("degeneracy slope {0} lies in [-2, 2)")]
    DeltaOutOfRange(Slope),

    #[error("multiplicity must be positive, got {0}")]
    InvalidMultiplicity(i64),

    #[error("invalid degeneracy locus ({p}; {q}): {reason}")]
    InvalidLocus { p: i64, q: i64, reason: &'static str },

    #[error("the fractional Dehn twist coefficient is undefined for slope 0")]
    ZeroDegeneracySlope,

    #[error("orientation flip with degeneracy slope 2 is only defined on the slopes inf and 1, got {0}")]
    UnsupportedCoordinateFlip(Slope),

    #[error("meridian {meridian} meets the degeneracy locus {intersection} times (must be < 2)")]
    ObstructedMeridian { meridian: Slope, intersection: i64 },

    #[error("odd prong count p = {0}")]
    OddProngCount(i64),

    #[error("parity mismatch: q = {q} and c = {c} differ mod 2")]
    ParityMismatch { c: i64, q: i64 },

    #[error("q = {q} outside (-p/2, p/2] for p = {p}")]
    RangeViolation { p: i64, q: i64 },

    #[error("degeneracy slope {p}/{q} lies in [-2, 2)")]
    DegenerateDelta { p: i64, q: i64 },

    #[error("invalid triple ({c}, {p}, {q}): {reason}")]
    InvalidTriple { c: i64, p: i64, q: i64, reason: &'static str },

    #[error("singularity index {j} outside 1..={p}")]
    IndexOutOfRange { j: i64, p: i64 },

    #[error("veering class requires c = 1, got c = {0}")]
    VeeringNeedsFixedCircle(i64),

    #[error("invalid monodromy: {0}")]
    InvalidMonodromy(String),

    #[error("endpoints of an RP^1 arc must be pairwise distinct")]
    CoincidentEndpoints,

    #[error("length mismatch: {intervals} intervals for {slopes} slopes")]
    LengthMismatch { intervals: usize, slopes: usize },

    #[error("malformed interval: {0}")]
    MalformedInterval(String),

    #[error("switch {switch} violates its cusp relation")]
    SwitchViolation { switch: usize },

    #[error("measure has {got} weights for a track with {expected} edges")]
    MeasureSize { expected: usize, got: usize },

    #[error("negative weight on edge {0}")]
    NegativeWeight(usize),

    #[error("measure class is zero; slope undefined")]
    DegenerateClass,

    #[error("slope {slope} is not in the realizable interval {interval}")]
    SlopeOutsideInterval { slope: Slope, interval: String },

    #[error("no slope-zero cycle through edge {0}")]
    NoSlopeZeroCycle(usize),

    #[error("malformed sector complex: {0}")]
    MalformedIncidence(String),

    #[error("inconsistent arc pairing: {0}")]
    InconsistentPairing(String),

    #[error("invalid cover parameters: {0}")]
    InvalidCover(String),

    #[error("pretzel parameter q must be >= 3, got {0}")]
    InvalidPretzel(i64),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("io error: {0}")]
    Io(String),
}
