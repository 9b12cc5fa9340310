//! Co-orientable taut foliation filling intervals for mapping tori of
//! co-orientation-reversing pseudo-Anosov maps.
//!
//! Everything here is exact: slopes are reduced integer pairs, intervals are
//! unions of open arcs of `RP^1` with rational endpoints, and train-track
//! measures are rational weight vectors checked against their switch
//! relations with zero tolerance.

pub mod branched;
pub mod census;
pub mod cli;
pub mod covers;
pub mod error;
pub mod interval;
pub mod lp;
pub mod monodromy;
pub mod slope;
pub mod track;

pub use error::{Error, Result};
pub use interval::{contains, ctf_interval, multislope_member, rp1_between, SlopeInterval};
pub use monodromy::{validate_triple, PhiTriple};
pub use slope::{DegeneracyLocus, Slope};
