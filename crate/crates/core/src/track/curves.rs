//! The two extremal carried curves `γ` and `ν`.

use super::{EdgeKind, Mode, TrainTrack};
use crate::track::CycleClass;

/// Class of `γ` by following segment indices around the circles: each
/// climb from segment `s` lands on `s + sh_k`, after which `γ` runs one
/// segment forward to the next positive vertical edge.
pub fn canonical_gamma(track: &TrainTrack) -> CycleClass {
    orbit_class(track, 1)
}

/// Class of `ν` read with the downward orientation; it runs one segment
/// backwards between climbs.
pub fn canonical_nu(track: &TrainTrack) -> CycleClass {
    orbit_class(track, -1)
}

fn orbit_class(track: &TrainTrack, step: i64) -> CycleClass {
    let t = track.triple();
    let (c, p) = (t.c() as usize, t.p());
    let start = if step > 0 { 0 } else { 1 };
    let (mut k, mut s) = (0usize, start);
    let (mut crossings, mut disp) = (0i64, 0i64);
    loop {
        let sh = track.shifts()[k];
        // climb, then 4 units forward or 2 units back along the circle
        disp += 3 * sh - 1 + if step > 0 { 4 } else { -2 };
        s = (s + sh + step).rem_euclid(p);
        if k == c - 1 {
            crossings += 1;
        }
        k = (k + 1) % c;
        if (k, s) == (0, start) {
            break;
        }
    }
    let length = track.circle_length();
    debug_assert_eq!(disp % length, 0);
    CycleClass::new(crossings, disp / length)
}

/// Edge sequence of `γ`, traced on the upward-oriented track starting at
/// the lower end of the first positive vertical edge.
pub fn gamma_path(track: &TrainTrack) -> Vec<usize> {
    trace(track, Mode::Upward, true, track.switch_id(0, 1))
}

/// Edge sequence of `ν` on the downward-oriented track.
pub fn nu_path(track: &TrainTrack) -> Vec<usize> {
    trace(track, Mode::Downward, false, track.switch_id(0, 3 % (2 * track.triple().p() as usize)))
}

fn trace(track: &TrainTrack, mode: Mode, climb_positive: bool, start: usize) -> Vec<usize> {
    let oriented = track.orient(mode);
    let mut path = Vec::new();
    let mut at = start;
    let limit = 4 * track.edges().len();
    loop {
        let outs = oriented.out_edges(at);
        let (e, next) = match outs {
            [only] => *only,
            _ => *outs
                .iter()
                .find(|(e, _)| {
                    let edge = &track.edges()[*e];
                    edge.tail == at && edge.kind == EdgeKind::Vertical { positive: climb_positive }
                })
                .or_else(|| outs.iter().find(|(e, _)| track.edges()[*e].kind == EdgeKind::Horizontal))
                .expect("a horizontal branch leaves every switch"),
        };
        path.push(e);
        at = next;
        if at == start || path.len() > limit {
            break;
        }
    }
    assert_eq!(at, start, "trace did not close up");
    path
}
