//! The boundary train track of a boundary orbit, built from its φ-triple.
//!
//! Circle `k` (of `c`) carries `p` stable segments, segment `s` negative iff
//! `s` is even. Positions along a circle are measured in thirds of a
//! segment, so a circle has length `3p`. Segment `s` holds the upper
//! endpoint of a vertical edge at `3s + 1` (switch `2s`) and the lower
//! endpoint at `3s + 2` (switch `2s + 1`). The vertical edge starting in
//! segment `s` of circle `k` climbs to segment `s + sh_k` of circle
//! `k + 1`, where the shifts are `1, ..., 1, q - (c - 1)`.

mod curves;
mod cycles;
mod measure;
mod realize;

use std::fmt::Write as _;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::monodromy::PhiTriple;

pub use curves::{canonical_gamma, canonical_nu, gamma_path, nu_path};
pub use cycles::slope_zero_cycles;
pub use measure::{check_switches, indicator_measure, measure_class, CycleClass, Measure};
pub use realize::{full_carry_feasible, realize_slope};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EdgeKind {
    Horizontal,
    /// Positive edges have their lower endpoint in a negative segment.
    Vertical { positive: bool },
}

/// Direction along a fiber circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CircleDir {
    Positive,
    Negative,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub id: usize,
    pub kind: EdgeKind,
    /// Switch at the start (horizontal) or lower end (vertical).
    pub tail: usize,
    /// Switch at the end (horizontal) or upper end (vertical).
    pub head: usize,
    /// Lifted displacement from tail to head, in thirds of a segment.
    pub disp: i64,
    /// Circle holding the edge, or the lower circle of a vertical edge.
    pub circle: usize,
    /// For horizontal edges, whether the segment at the tail is positive.
    pub positive_segment: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Switch {
    pub id: usize,
    pub circle: usize,
    /// Index along the circle, in `0..2p`.
    pub index: usize,
    pub pos: i64,
    /// The through-branch: its weight is the sum of the other two.
    pub smooth: usize,
    pub cusped: [usize; 2],
    /// Side of the circle on which the smooth branch leaves.
    pub cusp_dir: CircleDir,
}

/// Orientation conventions used when reading a measure as a 1-cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Mode {
    /// Circles positive, positive vertical edges up, negative ones down.
    Upward,
    /// Everything reversed.
    Downward,
}

impl Mode {
    pub fn reverse(self) -> Mode {
        match self {
            Mode::Upward => Mode::Downward,
            Mode::Downward => Mode::Upward,
        }
    }
}

#[derive(Debug)]
pub struct TrainTrack {
    triple: PhiTriple,
    switches: Vec<Switch>,
    edges: Vec<Edge>,
    shifts: Vec<i64>,
    cycle_cache: [OnceLock<Result<Vec<Vec<usize>>>>; 2],
}

impl Clone for TrainTrack {
    fn clone(&self) -> Self {
        TrainTrack {
            triple: self.triple,
            switches: self.switches.clone(),
            edges: self.edges.clone(),
            shifts: self.shifts.clone(),
            cycle_cache: Default::default(),
        }
    }
}

impl PartialEq for TrainTrack {
    fn eq(&self, other: &Self) -> bool {
        self.triple == other.triple && self.switches == other.switches && self.edges == other.edges
    }
}

impl Eq for TrainTrack {}

pub fn build_track(t: &PhiTriple) -> TrainTrack {
    let (c, p, q) = (t.c() as usize, t.p() as usize, t.q());
    let mut shifts = vec![1i64; c];
    shifts[c - 1] = q - (c as i64 - 1);

    let sw = |k: usize, i: usize| k * 2 * p + i;
    let per_circle = 3 * p;
    let mut edges = Vec::with_capacity(3 * p * c);
    for k in 0..c {
        for i in 0..2 * p {
            edges.push(Edge {
                id: k * per_circle + i,
                kind: EdgeKind::Horizontal,
                tail: sw(k, i),
                head: sw(k, (i + 1) % (2 * p)),
                disp: if i % 2 == 0 { 1 } else { 2 },
                circle: k,
                positive_segment: (i / 2) % 2 == 1,
            });
        }
        for s in 0..p {
            let target = (s as i64 + shifts[k]).rem_euclid(p as i64) as usize;
            edges.push(Edge {
                id: k * per_circle + 2 * p + s,
                kind: EdgeKind::Vertical { positive: s % 2 == 0 },
                tail: sw(k, 2 * s + 1),
                head: sw((k + 1) % c, 2 * target),
                disp: 3 * shifts[k] - 1,
                circle: k,
                positive_segment: false,
            });
        }
    }

    let mut vertical_at = vec![usize::MAX; 2 * p * c];
    for e in &edges {
        if matches!(e.kind, EdgeKind::Vertical { .. }) {
            vertical_at[e.tail] = e.id;
            vertical_at[e.head] = e.id;
        }
    }
    let mut switches = Vec::with_capacity(2 * p * c);
    for k in 0..c {
        for i in 0..2 * p {
            let left = k * per_circle + (i + 2 * p - 1) % (2 * p);
            let right = k * per_circle + i;
            let vertical = vertical_at[sw(k, i)];
            let seg = i / 2;
            // lower end of a positive edge or upper end of a negative one:
            // both sit in negative (even) segments and cusp backwards
            let smooth_left = seg % 2 == 0;
            let (smooth, other, cusp_dir) = if smooth_left {
                (left, right, CircleDir::Negative)
            } else {
                (right, left, CircleDir::Positive)
            };
            switches.push(Switch {
                id: sw(k, i),
                circle: k,
                index: i,
                pos: (3 * seg + 1 + i % 2) as i64,
                smooth,
                cusped: [other, vertical],
                cusp_dir,
            });
        }
    }

    TrainTrack { triple: *t, switches, edges, shifts, cycle_cache: Default::default() }
}

impl TrainTrack {
    pub fn triple(&self) -> &PhiTriple {
        &self.triple
    }

    pub fn switches(&self) -> &[Switch] {
        &self.switches
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn shifts(&self) -> &[i64] {
        &self.shifts
    }

    /// Length of one circle in position units.
    pub fn circle_length(&self) -> i64 {
        3 * self.triple.p()
    }

    pub fn switch_id(&self, circle: usize, index: usize) -> usize {
        circle * 2 * self.triple.p() as usize + index
    }

    pub fn vertical_id(&self, circle: usize, segment: usize) -> usize {
        let p = self.triple.p() as usize;
        circle * 3 * p + 2 * p + segment
    }

    /// Whether `mode` traverses edge `e` from tail to head.
    pub fn forward(&self, e: usize, mode: Mode) -> bool {
        let up = match self.edges[e].kind {
            EdgeKind::Horizontal => true,
            EdgeKind::Vertical { positive } => positive,
        };
        up == (mode == Mode::Upward)
    }

    /// Displacement of `e` in the direction `mode` traverses it.
    pub fn oriented_disp(&self, e: usize, mode: Mode) -> i64 {
        let d = self.edges[e].disp;
        if self.forward(e, mode) { d } else { -d }
    }

    /// `+1` or `-1` for vertical edges crossing the last gap (circle
    /// `c - 1` to circle `0`) up or down under `mode`, else `0`.
    pub fn gap_crossing(&self, e: usize, mode: Mode) -> i64 {
        let edge = &self.edges[e];
        let last = self.triple.c() as usize - 1;
        match edge.kind {
            EdgeKind::Vertical { .. } if edge.circle == last => {
                if self.forward(e, mode) { 1 } else { -1 }
            }
            _ => 0,
        }
    }

    /// Directed view of the track under `mode`.
    pub fn orient(&self, mode: Mode) -> OrientedTrack<'_> {
        let mut out = vec![Vec::new(); self.switches.len()];
        for e in &self.edges {
            let (from, to) = if self.forward(e.id, mode) { (e.tail, e.head) } else { (e.head, e.tail) };
            out[from].push((e.id, to));
        }
        for list in &mut out {
            list.sort_unstable();
        }
        OrientedTrack { track: self, mode, out }
    }

    /// Plain-text listing of switches and edges.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "track {}", self.triple).unwrap();
        for w in &self.switches {
            writeln!(
                s,
                "switch {} circle {} index {} pos {} smooth {} cusped {} {}",
                w.id, w.circle, w.index, w.pos, w.smooth, w.cusped[0], w.cusped[1]
            )
            .unwrap();
        }
        for e in &self.edges {
            let kind = match e.kind {
                EdgeKind::Horizontal => "horizontal",
                EdgeKind::Vertical { positive: true } => "vertical+",
                EdgeKind::Vertical { positive: false } => "vertical-",
            };
            writeln!(s, "edge {} {} {} {} disp {}", e.id, kind, e.tail, e.head, e.disp).unwrap();
        }
        s
    }

    fn cycle_cache(&self, mode: Mode) -> &OnceLock<Result<Vec<Vec<usize>>>> {
        &self.cycle_cache[(mode == Mode::Downward) as usize]
    }
}

pub fn orient_track(track: &TrainTrack, mode: Mode) -> OrientedTrack<'_> {
    track.orient(mode)
}

pub struct OrientedTrack<'a> {
    pub track: &'a TrainTrack,
    pub mode: Mode,
    out: Vec<Vec<(usize, usize)>>,
}

impl OrientedTrack<'_> {
    /// Outgoing `(edge, target switch)` pairs, sorted by edge id.
    pub fn out_edges(&self, switch: usize) -> &[(usize, usize)] {
        &self.out[switch]
    }

    /// Tail and head of `e` in the oriented direction.
    pub fn ends(&self, e: usize) -> (usize, usize) {
        let edge = &self.track.edges[e];
        if self.track.forward(e, self.mode) { (edge.tail, edge.head) } else { (edge.head, edge.tail) }
    }

    /// Every switch has either the smooth branch incoming and both cusped
    /// branches outgoing, or the reverse.
    pub fn is_coherent(&self) -> bool {
        self.track.switches.iter().all(|w| {
            let incoming = |e: usize| self.ends(e).1 == w.id;
            let z = incoming(w.smooth);
            w.cusped.iter().all(|&e| incoming(e) != z)
        })
    }

    /// Whether consecutive edges of `path` meet head to tail.
    pub fn is_directed_cycle(&self, path: &[usize]) -> bool {
        !path.is_empty()
            && (0..path.len()).all(|i| self.ends(path[i]).1 == self.ends(path[(i + 1) % path.len()]).0)
    }
}
