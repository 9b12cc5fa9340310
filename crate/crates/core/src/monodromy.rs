//! Boundary data of a co-orientation-reversing pseudo-Anosov monodromy.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::slope::{DegeneracyLocus, Slope};

/// `(c, p, q)`: orbit length of a boundary circle, number of stable
/// singularities on it, and the index shift under the `c`-th power.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PhiTriple {
    c: i64,
    p: i64,
    q: i64,
}

pub fn validate_triple(c: i64, p: i64, q: i64) -> Result<PhiTriple> {
    if c <= 0 {
        return Err(Error::InvalidTriple { c, p, q, reason: "c must be positive" });
    }
    if p <= 0 {
        return Err(Error::InvalidTriple { c, p, q, reason: "p must be positive" });
    }
    if p.is_odd() {
        return Err(Error::OddProngCount(p));
    }
    if (q - c).is_odd() {
        return Err(Error::ParityMismatch { c, q });
    }
    if 2 * q <= -p || 2 * q > p {
        return Err(Error::RangeViolation { p, q });
    }
    if Slope::new(p, q)?.in_forbidden_range() {
        return Err(Error::DegenerateDelta { p, q });
    }
    Ok(PhiTriple { c, p, q })
}

impl PhiTriple {
    pub fn c(&self) -> i64 {
        self.c
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn delta(&self) -> Slope {
        Slope::new(self.p, self.q).expect("p > 0")
    }

    pub fn locus(&self) -> DegeneracyLocus {
        DegeneracyLocus::new(self.p, self.q).expect("validated")
    }

    /// Index of `φ^c(v_j)`, with indices in `1..=p`.
    pub fn singularity_action(&self, j: i64) -> Result<i64> {
        if j < 1 || j > self.p {
            return Err(Error::IndexOutOfRange { j, p: self.p });
        }
        Ok((j - 1 + self.q).rem_euclid(self.p) + 1)
    }

    pub fn veering_class(&self) -> Result<VeeringTag> {
        if self.c != 1 {
            return Err(Error::VeeringNeedsFixedCircle(self.c));
        }
        Ok(match self.q.signum() {
            1 => VeeringTag::RightVeering,
            -1 => VeeringTag::LeftVeering,
            _ => VeeringTag::Neither,
        })
    }
}

impl fmt::Display for PhiTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.c, self.p, self.q)
    }
}

impl FromStr for PhiTriple {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        let bad = || Error::MalformedSlope(format!("triple '{s}' (expected c,p,q)"));
        if parts.len() != 3 {
            return Err(bad());
        }
        let mut v = [0i64; 3];
        for (slot, part) in v.iter_mut().zip(&parts) {
            *slot = part.parse().map_err(|_| bad())?;
        }
        validate_triple(v[0], v[1], v[2])
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum VeeringTag {
    RightVeering,
    LeftVeering,
    Neither,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Coorientation {
    Preserving,
    Reversing,
}

/// Co-orientation behaviour of `φ^n` when `φ` itself reverses.
pub fn power_coorientation(n: u64) -> Coorientation {
    if n % 2 == 0 {
        Coorientation::Preserving
    } else {
        Coorientation::Reversing
    }
}

/// One triple per boundary torus. The ambient monodromy always reverses
/// the co-orientation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonodromySpec {
    orbits: Vec<PhiTriple>,
}

impl MonodromySpec {
    pub fn new(orbits: Vec<PhiTriple>) -> Result<Self> {
        if orbits.is_empty() {
            return Err(Error::InvalidMonodromy("no boundary orbits".into()));
        }
        if let [t] = orbits.as_slice() {
            if t.c() == 1 && t.q() == 0 {
                return Err(Error::InvalidMonodromy(
                    "a single fixed boundary circle cannot have degeneracy slope inf".into(),
                ));
            }
        }
        Ok(MonodromySpec { orbits })
    }

    pub fn orbits(&self) -> &[PhiTriple] {
        &self.orbits
    }

    pub fn coorientation(&self) -> Coorientation {
        Coorientation::Reversing
    }
}
