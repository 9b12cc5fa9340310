//! Seeded generators and independent oracles shared by the integration
//! tests.

#![allow(dead_code)]

use ctf_core::branched::{ArcSystemRibbon, CoCore};
use ctf_core::monodromy::{validate_triple, PhiTriple};
use ctf_core::slope::Slope;
use num_rational::Rational64;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A uniformly drawn valid triple with `p <= max_p` and `c <= max_c`.
pub fn random_triple(rng: &mut impl Rng, max_p: i64, max_c: i64) -> PhiTriple {
    loop {
        let c = rng.gen_range(1..=max_c);
        let p = 2 * rng.gen_range(1..=max_p / 2);
        let q = rng.gen_range(-p / 2 + 1..=p / 2);
        if let Ok(t) = validate_triple(c, p, q) {
            return t;
        }
    }
}

/// Every valid triple with `p <= max_p` and `c <= max_c`.
pub fn all_triples(max_p: i64, max_c: i64) -> Vec<PhiTriple> {
    let mut out = Vec::new();
    for c in 1..=max_c {
        for p in (2..=max_p).step_by(2) {
            for q in -p / 2 + 1..=p / 2 {
                if let Ok(t) = validate_triple(c, p, q) {
                    out.push(t);
                }
            }
        }
    }
    out
}

/// Membership in the filling interval read off from `f = 1/x`: the
/// interval is where `f` lies outside `[(q - c)/p, (q + c)/p]`.
pub fn oracle_member(t: &PhiTriple, x: Slope) -> bool {
    let (c, p, q) = (t.c(), t.p(), t.q());
    if x == Slope::ZERO {
        return true;
    }
    // f = b/a with a != 0; compare f * p against q +- c using a > 0 form
    let (mut a, mut b) = (x.numerator() as i128, x.denominator() as i128);
    if a < 0 {
        a = -a;
        b = -b;
    }
    let fp = b * p as i128; // f * p * a
    fp > (q + c) as i128 * a || fp < (q - c) as i128 * a
}

/// The two endpoints `p/(q + c)` and `p/(q - c)`.
pub fn endpoints(t: &PhiTriple) -> [Slope; 2] {
    [Slope::new(t.p(), t.q() + t.c()).unwrap(), Slope::new(t.p(), t.q() - t.c()).unwrap()]
}

pub fn random_slope(rng: &mut impl Rng, max_num: i64, max_den: i64) -> Slope {
    if rng.gen_ratio(1, 40) {
        return Slope::INFINITY;
    }
    let a = rng.gen_range(-max_num..=max_num);
    let b = rng.gen_range(1..=max_den);
    Slope::new(a, b).unwrap()
}

/// `n` distinct slopes inside the filling interval, by rejection against
/// the oracle. Numerators reach at least 40 and denominators 30 so that
/// narrow intervals such as `(-1, 1)` still have enough candidates.
pub fn interior_slopes(rng: &mut impl Rng, t: &PhiTriple, n: usize) -> Vec<Slope> {
    let mut out: Vec<Slope> = Vec::with_capacity(n);
    let scale = (2 * t.p()).max(40);
    while out.len() < n {
        let x = random_slope(rng, scale, 30);
        if oracle_member(t, x) && !out.contains(&x) {
            out.push(x);
        }
    }
    out
}

pub fn ratio(s: Slope) -> Rational64 {
    s.as_ratio().unwrap()
}

/// A random connected fat graph with `vertices` vertices and `edges`
/// edges, or `None` if the draw is disconnected.
pub fn random_fat_graph(rng: &mut impl Rng, vertices: usize, edges: usize) -> Option<ArcSystemRibbon> {
    let h = 2 * edges;
    let mut halves: Vec<usize> = (0..h).collect();
    halves.shuffle(rng);
    // every vertex gets at least one half-edge
    let mut cuts: Vec<usize> = (1..h).collect();
    cuts.shuffle(rng);
    let mut cuts: Vec<usize> = cuts.into_iter().take(vertices - 1).collect();
    cuts.sort_unstable();
    let mut rots = Vec::new();
    let mut start = 0;
    for &c in cuts.iter().chain(std::iter::once(&h)) {
        rots.push(halves[start..c].to_vec());
        start = c;
    }
    let mut pairing: Vec<usize> = (0..h).collect();
    pairing.shuffle(rng);
    let edge_list: Vec<(usize, usize)> = pairing.chunks(2).map(|w| (w[0], w[1])).collect();
    ArcSystemRibbon::new(rots, edge_list, vec![]).ok()
}

/// Arc systems on random fat graphs whose endpoints alternate in sign on
/// every boundary circle and whose complement has no disk component.
pub fn valid_arc_systems(seed: u64, count: usize) -> Vec<(ArcSystemRibbon, Vec<usize>)> {
    let mut rng = rng(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let vertices = rng.gen_range(1..=3);
        let edges = rng.gen_range(vertices + 1..=vertices + 5);
        let Some(g) = random_fat_graph(&mut rng, vertices, edges) else { continue };
        if g.genus() < 1 {
            continue;
        }
        let k = rng.gen_range(1..=edges.min(4));
        let mut chosen: Vec<usize> = (0..edges).collect();
        chosen.shuffle(&mut rng);
        let arcs: Vec<CoCore> =
            chosen[..k].iter().map(|&edge| CoCore { edge, forward: rng.gen_bool(0.5) }).collect();
        let r = ArcSystemRibbon::new(g.vertices().to_vec(), g.edges().to_vec(), arcs).unwrap();
        if !r.endpoint_signs_alternate() || r.trace_complement_faces().iter().any(|f| f.is_disk) {
            continue;
        }
        let mut perm: Vec<usize> = (0..k).collect();
        perm.shuffle(&mut rng);
        out.push((r, perm));
    }
    out
}
