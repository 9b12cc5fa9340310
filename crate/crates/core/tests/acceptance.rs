//! One pass/fail line per acceptance criterion. Every tolerance is pinned
//! below; comparisons are exact unless a time budget is stated.

mod common;

use std::time::{Duration, Instant};

use ctf_core::branched::SectorComplex;
use ctf_core::census::{bundled_census, verify_census, MatchKind};
use ctf_core::covers::{branched_cover_ctf, cyclic_cover_locus, lifted_meridian, pretzel_data, CoverWitness};
use ctf_core::interval::{ctf_interval, rp1_between};
use ctf_core::monodromy::validate_triple;
use ctf_core::slope::Slope;
use ctf_core::track::{
    build_track, canonical_gamma, canonical_nu, full_carry_feasible, gamma_path, indicator_measure, measure_class,
    nu_path, realize_slope, Mode,
};

const CENSUS_BUDGET: Duration = Duration::from_secs(1);
const REALIZE_BUDGET: Duration = Duration::from_secs(60);
const FORMULA_SAMPLES: usize = 10_000;
const FORMULA_MAX_P: i64 = 200;
const FORMULA_MAX_C: i64 = 6;
const TRACK_MAX_P: i64 = 40;
const TRACK_MAX_C: i64 = 4;
const REALIZE_TRIPLES: usize = 50;
const REALIZE_SLOPES: usize = 100;
const REALIZE_MAX_P: i64 = 24;
const REALIZE_MAX_C: i64 = 4;
const ARC_SYSTEMS: usize = 20;

type Outcome = std::result::Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn census_reproduction() -> Outcome {
    let start = Instant::now();
    let records = bundled_census();
    let report = verify_census(&records);
    let elapsed = start.elapsed();
    for o in &report.records {
        let want = if o.name == "o9_26541" { MatchKind::KnownDiscrepancy } else { MatchKind::Exact };
        ensure(o.kind == want, || format!("{} is {:?}, expected {want:?}", o.name, o.kind))?;
    }
    let odd = report.records.iter().find(|o| o.name == "o9_26541").ok_or("o9_26541 missing")?;
    let computed = odd.computed.as_ref().ok_or("o9_26541 not computed")?.to_string();
    let printed = odd.expected.to_string();
    ensure(computed.contains("-2") && !printed.contains("-2") && printed.contains("2"), || {
        format!("o9_26541 computed {computed} printed {printed}")
    })?;
    let anchors = [
        ("m122", "(-inf, 2)"),
        ("m280", "(-2, inf)"),
        ("v0751", "(-3, inf)"),
        ("s297", "(-3, inf)"),
        ("v2585", "(-inf, 7)"),
        ("v1076", "(-inf, 2)"),
        ("o9_19364", "(-inf, 24)"),
    ];
    for (name, want) in anchors {
        let o = report.records.iter().find(|o| o.name == name).ok_or(format!("{name} missing"))?;
        let got = o.computed.as_ref().map(|j| j.to_string()).unwrap_or_default();
        ensure(got == want, || format!("{name}: computed {got}, anchor {want}"))?;
    }
    ensure(elapsed < CENSUS_BUDGET, || format!("took {elapsed:?}"))?;
    Ok(format!(
        "{} rows: {} exact, {} known discrepancy, {} mismatch; 7 anchors; {:?} < {CENSUS_BUDGET:?}",
        records.len(),
        report.exact,
        report.known_discrepancy,
        report.mismatch,
        elapsed
    ))
}

fn formula_equivalence() -> Outcome {
    let mut rng = common::rng(0x5eed_0002);
    for _ in 0..FORMULA_SAMPLES {
        let t = common::random_triple(&mut rng, FORMULA_MAX_P, FORMULA_MAX_C);
        let j = ctf_interval(&t);
        let [e1, e2] = common::endpoints(&t);
        let arc = rp1_between(e1, e2, t.delta()).map_err(|e| format!("{t}: {e}"))?;
        ensure(j == arc, || format!("{t}: {j} vs {arc}"))?;
        ensure(j.contains(Slope::ZERO), || format!("{t}: 0 not in {j}"))?;
        ensure(j.contains(Slope::INFINITY) == (t.q().abs() > t.c()), || format!("{t}: inf membership in {j}"))?;
        ensure(!j.contains(t.delta()), || format!("{t}: delta in {j}"))?;
        ensure(!j.contains(e1) && !j.contains(e2), || format!("{t}: endpoint in {j}"))?;
    }
    Ok(format!("{FORMULA_SAMPLES} triples with p <= {FORMULA_MAX_P}, c <= {FORMULA_MAX_C}; exact"))
}

fn track_oracles() -> Outcome {
    let triples = common::all_triples(TRACK_MAX_P, TRACK_MAX_C);
    for t in &triples {
        let [want_gamma, want_nu] = common::endpoints(t);
        let track = build_track(t);
        let orbit_gamma = canonical_gamma(&track).slope().map_err(|e| format!("{t}: {e}"))?;
        let orbit_nu = canonical_nu(&track).slope().map_err(|e| format!("{t}: {e}"))?;
        ensure(orbit_gamma == want_gamma, || format!("{t}: gamma by orbits {orbit_gamma}, want {want_gamma}"))?;
        ensure(orbit_nu == want_nu, || format!("{t}: nu by orbits {orbit_nu}, want {want_nu}"))?;
        let up = measure_class(&track, &indicator_measure(&track, &gamma_path(&track)), Mode::Upward)
            .and_then(|c| c.slope())
            .map_err(|e| format!("{t}: {e}"))?;
        let down = measure_class(&track, &indicator_measure(&track, &nu_path(&track)), Mode::Downward)
            .and_then(|c| c.slope())
            .map_err(|e| format!("{t}: {e}"))?;
        ensure(up == want_gamma, || format!("{t}: gamma by homology {up}, want {want_gamma}"))?;
        ensure(down == want_nu, || format!("{t}: nu by homology {down}, want {want_nu}"))?;
    }
    Ok(format!("all {} triples with p <= {TRACK_MAX_P}, c <= {TRACK_MAX_C}; orbits and homology exact", triples.len()))
}

fn realization() -> Outcome {
    let start = Instant::now();
    let mut rng = common::rng(0x5eed_0004);
    let mut checked = 0;
    for _ in 0..REALIZE_TRIPLES {
        let t = common::random_triple(&mut rng, REALIZE_MAX_P, REALIZE_MAX_C);
        let track = build_track(&t);
        for x in common::interior_slopes(&mut rng, &t, REALIZE_SLOPES) {
            let m = realize_slope(&track, x).map_err(|e| format!("{t} at {x}: {e}"))?;
            ensure(m.is_strictly_positive(), || format!("{t} at {x}: zero weight"))?;
            let got = measure_class(&track, &m, Mode::Upward)
                .and_then(|c| c.slope())
                .map_err(|e| format!("{t} at {x}: {e}"))?;
            ensure(got == x, || format!("{t} at {x}: realized {got}"))?;
            ensure(full_carry_feasible(&track, x), || format!("{t} at {x}: infeasible"))?;
            checked += 1;
        }
        for e in common::endpoints(&t) {
            ensure(realize_slope(&track, e).is_err(), || format!("{t}: endpoint {e} realized"))?;
            ensure(!full_carry_feasible(&track, e), || format!("{t}: endpoint {e} feasible"))?;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < REALIZE_BUDGET, || format!("took {elapsed:?}"))?;
    Ok(format!(
        "{REALIZE_TRIPLES} triples (p <= {REALIZE_MAX_P}, c <= {REALIZE_MAX_C}), {checked} interior slopes, \
         {} endpoints; {elapsed:?} < {REALIZE_BUDGET:?}",
        2 * REALIZE_TRIPLES
    ))
}

fn sink_disks() -> Outcome {
    let systems = common::valid_arc_systems(0x5eed_0005, ARC_SYSTEMS);
    let mut flips = 0;
    for (i, (ribbon, perm)) in systems.iter().enumerate() {
        let total: i64 = ribbon.trace_complement_faces().iter().map(|f| f.euler_characteristic).sum();
        let surface = 2 - 2 * ribbon.genus() - ribbon.boundary_count() as i64;
        ensure(surface == ribbon.euler_characteristic(), || format!("instance {i}: surface euler"))?;
        // each cut along an arc raises the Euler characteristic by one
        ensure(total - ribbon.arcs().len() as i64 == surface, || {
            format!("instance {i}: face sum {total}, arcs {}, 2-2g-b {surface}", ribbon.arcs().len())
        })?;
        let complex = SectorComplex::from_arc_system(ribbon, perm).map_err(|e| format!("instance {i}: {e}"))?;
        let report = complex.detect_sink_disks();
        ensure(report.is_empty(), || format!("instance {i}: {report:?}"))?;
        let seg = complex.segments().iter().find(|s| s.id % 2 == 1).ok_or("no segment to flip")?;
        let target = seg.left;
        ensure(complex.sectors()[target].is_disk, || format!("instance {i}: flip target is not a disk"))?;
        let mut flipped = complex.clone();
        flipped.set_cusp(seg.id, target).map_err(|e| e.to_string())?;
        let report = flipped.detect_sink_disks();
        ensure(!report.is_empty(), || format!("instance {i}: flip went unreported"))?;
        flips += 1;
    }
    Ok(format!(
        "{} arc systems sink-free, {flips} single flips reported, face Euler sums equal 2-2g-b plus #arcs",
        systems.len()
    ))
}

fn covers_and_pretzels() -> Outcome {
    for g in 2..=20 {
        let p = 4 * g - 2;
        for n in 2..=50 {
            let v = branched_cover_ctf(g, n).map_err(|e| format!("g={g} n={n}: {e}"))?;
            ensure(v.has_ctf, || format!("g={g} n={n}: no CTF"))?;
            if n % 2 == 1 {
                // recheck the odd case against the independent oracle
                let l = cyclic_cover_locus(p, n).map_err(|e| e.to_string())?;
                let t = validate_triple(1, p, l.b).map_err(|e| format!("g={g} n={n}: {e}"))?;
                let m = lifted_meridian(l.a);
                ensure(common::oracle_member(&t, m), || format!("g={g} n={n}: {m} outside"))?;
                ensure(matches!(v.witness, CoverWitness::Interval { .. }), || format!("g={g} n={n}: witness"))?;
            }
        }
    }
    for q in 3..=50 {
        let d = pretzel_data(q).map_err(|e| format!("q={q}: {e}"))?;
        let g = q + 2;
        ensure(d.delta == Slope::integer(4 * g - 2), || format!("q={q}: delta {}", d.delta))?;
        let text = d.ctf_interval.to_string();
        ensure(text == format!("(-inf, {})", 2 * g - 1), || format!("q={q}: interval {text}"))?;
        let t = validate_triple(1, 4 * g - 2, 1).map_err(|e| e.to_string())?;
        ensure(d.ctf_interval == ctf_interval(&t), || format!("q={q}: differs from formula"))?;
    }
    Ok("g in [2,20] x n in [2,50] all CTF; pretzels q in [3,50] exact".into())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 6] = [
        ("census reproduction", census_reproduction),
        ("formula equivalence", formula_equivalence),
        ("train-track oracles", track_oracles),
        ("realization soundness and sharpness", realization),
        ("sink-disk checker", sink_disks),
        ("covers and pretzels", covers_and_pretzels),
    ];
    let mut passed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = run();
        match &outcome {
            Ok(detail) => println!("criterion {}: PASS {name}: {detail}", i + 1),
            Err(why) => println!("criterion {}: FAIL {name}: {why}", i + 1),
        }
        passed.push(outcome.is_ok());
    }
    // the foliations themselves are out of reach; their checkable
    // hypotheses are the laminar and realization criteria
    let substitute = passed[3] && passed[4];
    println!(
        "criterion 7: {} non-reproducible content acknowledged: foliation existence is not machine-checked; \
         substitute hypotheses (criteria 4 and 5) {}",
        if substitute { "PASS" } else { "FAIL" },
        if substitute { "hold" } else { "fail" }
    );
    passed.push(substitute);
    let failures = passed.iter().filter(|ok| !**ok).count();
    println!("acceptance: {} of {} criteria pass", passed.len() - failures, passed.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
