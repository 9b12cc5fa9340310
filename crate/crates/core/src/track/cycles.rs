//! Slope-zero cycles through each edge: `ρ_e` on the upward track and
//! `η_e` on the downward one.

use std::collections::VecDeque;

use super::{Mode, OrientedTrack, TrainTrack};
use crate::error::{Error, Result};

const WIND: i64 = 3;
const GAPS: i64 = 3;
const SPAN: usize = (2 * WIND + 1) as usize;
const GSPAN: usize = (2 * GAPS + 1) as usize;

/// For every edge `e`, a shortest directed cycle starting with `e` that
/// crosses the last circle gap zero times net and winds once along the
/// fiber in the direction of `mode`. Ties go to the lexicographically
/// least edge sequence. Results are computed once per track.
pub fn slope_zero_cycles(track: &TrainTrack, mode: Mode) -> Result<&[Vec<usize>]> {
    let cached = track.cycle_cache(mode).get_or_init(|| {
        let oriented = track.orient(mode);
        (0..track.edges().len()).map(|e| cycle_through(&oriented, e)).collect()
    });
    match cached {
        Ok(v) => Ok(v.as_slice()),
        Err(e) => Err(e.clone()),
    }
}

fn cycle_through(ot: &OrientedTrack<'_>, e: usize) -> Result<Vec<usize>> {
    let track = ot.track;
    let mode = ot.mode;
    let len = track.circle_length();
    let (a, b) = ot.ends(e);
    let pos = |s: usize| track.switches()[s].pos;
    let target_disp = if mode == Mode::Upward { len } else { -len } - track.oriented_disp(e, mode);
    let target_gap = -track.gap_crossing(e, mode);

    // state: (switch, winding, gap count); the lifted displacement from b is
    // pos(switch) - pos(b) + len * winding
    let index = |s: usize, w: i64, g: i64| (s * SPAN + (w + WIND) as usize) * GSPAN + (g + GAPS) as usize;
    let n = track.switches().len() * SPAN * GSPAN;
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut seen = vec![false; n];
    let mut queue = VecDeque::new();
    let start = index(b, 0, 0);
    seen[start] = true;
    queue.push_back((b, 0i64, 0i64));

    let goal_w = {
        let d = target_disp - (pos(a) - pos(b));
        debug_assert_eq!(d % len, 0);
        d / len
    };
    if goal_w.abs() > WIND || target_gap.abs() > GAPS {
        return Err(Error::NoSlopeZeroCycle(e));
    }
    let goal = index(a, goal_w, target_gap);

    while let Some((s, w, g)) = queue.pop_front() {
        if index(s, w, g) == goal {
            let mut path = Vec::new();
            let mut at = goal;
            while let Some((prev, edge)) = parent[at] {
                path.push(edge);
                at = prev;
            }
            path.push(e);
            path.reverse();
            return Ok(path);
        }
        let here = index(s, w, g);
        let disp = pos(s) - pos(b) + len * w;
        for &(edge, to) in ot.out_edges(s) {
            let nd = disp + track.oriented_disp(edge, mode);
            let nw = (nd - (pos(to) - pos(b))).div_euclid(len);
            let ng = g + track.gap_crossing(edge, mode);
            if nw.abs() > WIND || ng.abs() > GAPS {
                continue;
            }
            let k = index(to, nw, ng);
            if !seen[k] {
                seen[k] = true;
                parent[k] = Some((here, edge));
                queue.push_back((to, nw, ng));
            }
        }
    }
    Err(Error::NoSlopeZeroCycle(e))
}
