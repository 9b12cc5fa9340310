//! Cyclic branched covers of fibered knots with co-orientation-reversing
//! monodromy, and the pretzel family.
//!
//! A knot exterior has one boundary circle fixed by the monodromy, so
//! every computation here uses `c = 1`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::interval::{ctf_interval, SlopeInterval};
use crate::monodromy::{power_coorientation, validate_triple, Coorientation};
use crate::slope::Slope;

/// `(a, b)` with `b = n - a p` and `-p/2 < b <= p/2`; `(p; b)` is the
/// degeneracy locus of the `n`-th power.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CoverLocus {
    pub p: i64,
    pub n: i64,
    pub a: i64,
    pub b: i64,
}

pub fn cyclic_cover_locus(p: i64, n: i64) -> Result<CoverLocus> {
    if p < 2 || p % 2 != 0 {
        return Err(Error::InvalidCover(format!("p must be even and >= 2, got {p}")));
    }
    if n < 1 {
        return Err(Error::InvalidCover(format!("cover degree must be positive, got {n}")));
    }
    // smallest a with n - a p <= p/2
    let a = (n - p / 2 + p - 1).div_euclid(p).max(0);
    let b = n - a * p;
    debug_assert!(-p < 2 * b && 2 * b <= p);
    Ok(CoverLocus { p, n, a, b })
}

/// Preimage of the meridian in the `n`-fold cyclic cover: `-1/a`.
pub fn lifted_meridian(a: i64) -> Slope {
    Slope::new(-1, a).expect("numerator is nonzero")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum CoverWitness {
    /// `φ^n` preserves the co-orientation, so every slope other than the
    /// degeneracy slope admits a co-orientable taut foliation.
    PreservingPower,
    /// The lifted meridian lies in the filling interval of `(1, p, b)`.
    Interval { locus: CoverLocus, meridian: Slope, interval: SlopeInterval },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverVerdict {
    pub genus: i64,
    pub n: i64,
    pub has_ctf: bool,
    pub witness: CoverWitness,
}

/// Whether the `n`-fold cyclic branched cover of a genus `g` knot with
/// degeneracy slope `4g - 2` (multiplicity one, right-veering, reversing
/// monodromy) carries a co-orientable taut foliation by this criterion.
pub fn branched_cover_ctf(g: i64, n: i64) -> Result<CoverVerdict> {
    if g < 2 {
        return Err(Error::InvalidCover(format!("genus must be >= 2, got {g}")));
    }
    if n < 2 {
        return Err(Error::InvalidCover(format!("cover degree must be >= 2, got {n}")));
    }
    if power_coorientation(n as u64) == Coorientation::Preserving {
        return Ok(CoverVerdict { genus: g, n, has_ctf: true, witness: CoverWitness::PreservingPower });
    }
    let locus = cyclic_cover_locus(4 * g - 2, n)?;
    let triple = validate_triple(1, locus.p, locus.b)?;
    let interval = ctf_interval(&triple);
    let meridian = lifted_meridian(locus.a);
    Ok(CoverVerdict {
        genus: g,
        n,
        has_ctf: interval.contains(meridian),
        witness: CoverWitness::Interval { locus, meridian, interval },
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PretzelData {
    pub q: i64,
    pub genus: i64,
    pub delta: Slope,
    pub ctf_interval: SlopeInterval,
}

/// The `P(-2, 3, 2q+1)` family: genus `q + 2`, degeneracy slope
/// `4g - 2`, interval `(-inf, 2g - 1)`.
pub fn pretzel_data(q: i64) -> Result<PretzelData> {
    if q < 3 {
        return Err(Error::InvalidPretzel(q));
    }
    let genus = q + 2;
    let p = 4 * genus - 2;
    let delta = Slope::integer(p);
    let interval: SlopeInterval = format!("(-inf, {})", 2 * genus - 1).parse()?;
    assert_eq!(interval, ctf_interval(&validate_triple(1, p, 1)?));
    Ok(PretzelData { q, genus, delta, ctf_interval: interval })
}
