//! Strictly positive measures of prescribed slope.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{
    canonical_gamma, canonical_nu, gamma_path, indicator_measure, nu_path, slope_zero_cycles, Measure, Mode,
    TrainTrack,
};
use crate::error::{Error, Result};
use crate::interval::ctf_interval;
use crate::lp::{self, EqualitySystem};
use crate::slope::Slope;

fn big(v: &BigInt) -> BigRational {
    BigRational::from_integer(v.clone())
}

fn sum_of_cycles(track: &TrainTrack, mode: Mode) -> Result<Measure> {
    let mut m = Measure::zero(track);
    let one = BigRational::from_integer(1.into());
    for cycle in slope_zero_cycles(track, mode)? {
        m.add_path(cycle, &one);
    }
    Ok(m)
}

/// A measure with every weight positive whose class has slope `x`.
///
/// With `f = 1/x`, `N` the number of edges, `(v, u)` the class of `γ` and
/// `(s, r)` that of `ν`:
/// `x = 0` takes `Σ ρ_e`; `f > u/v` takes `γ + t Σ ρ_e` with
/// `t = (f v - u)/N`; `f < r/s` takes `ν + t Σ η_e` with `t = (r - f s)/N`.
pub fn realize_slope(track: &TrainTrack, x: Slope) -> Result<Measure> {
    let interval = ctf_interval(track.triple());
    if !interval.contains(x) {
        return Err(Error::SlopeOutsideInterval { slope: x, interval: interval.to_string() });
    }
    let n = BigRational::from_integer(track.edges().len().into());
    if x == Slope::ZERO {
        return sum_of_cycles(track, Mode::Upward);
    }
    let f = BigRational::new(x.denominator().into(), x.numerator().into());
    let gamma = canonical_gamma(track);
    let nu = canonical_nu(track);
    let (v, u) = (big(&gamma.a), big(&gamma.b));
    let (s, r) = (big(&nu.a), big(&nu.b));

    let (mut base, t, mode) = if &f * &v > u {
        (indicator_measure(track, &gamma_path(track)), (&f * &v - &u) / &n, Mode::Upward)
    } else if &f * &s < r {
        (indicator_measure(track, &nu_path(track)), (&r - &f * &s) / &n, Mode::Downward)
    } else {
        unreachable!("membership in the interval forces one of the two inequalities");
    };
    debug_assert!(t > BigRational::zero());
    base.add_scaled(&sum_of_cycles(track, mode)?, &t);
    Ok(base)
}

/// Exact feasibility of switch conditions, all weights `>= 1` and class
/// slope `x`.
pub fn full_carry_feasible(track: &TrainTrack, x: Slope) -> bool {
    let edges = track.edges().len();
    let mut sys = EqualitySystem::new(edges);
    // substitute w = 1 + y
    for w in track.switches() {
        let [a, b] = w.cusped;
        sys.push(vec![(w.smooth, 1), (a, -1), (b, -1)], 1);
    }
    let (a, b) = (x.numerator(), x.denominator());
    let len = track.circle_length();
    let coeffs: Vec<(usize, i64)> = (0..edges)
        .map(|e| {
            let v = track.gap_crossing(e, Mode::Upward);
            let d = track.oriented_disp(e, Mode::Upward);
            (e, b * len * v - a * d)
        })
        .filter(|&(_, c)| c != 0)
        .collect();
    let rhs = -coeffs.iter().map(|&(_, c)| c).sum::<i64>();
    sys.push(coeffs, rhs);
    lp::feasible(&sys)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monodromy::validate_triple;
    use crate::track::{build_track, measure_class};

    fn s(t: &str) -> Slope {
        t.parse().unwrap()
    }

    fn track(c: i64, p: i64, q: i64) -> TrainTrack {
        build_track(&validate_triple(c, p, q).unwrap())
    }

    fn slope_of(t: &TrainTrack, m: &Measure) -> Slope {
        measure_class(t, m, Mode::Upward).unwrap().slope().unwrap()
    }

    #[test]
    fn realize_examples() {
        let t = track(1, 4, 1);
        let m0 = realize_slope(&t, Slope::ZERO).unwrap();
        assert!(m0.is_strictly_positive());
        assert_eq!(slope_of(&t, &m0), Slope::ZERO);

        let m1 = realize_slope(&t, s("1")).unwrap();
        assert!(m1.is_strictly_positive());
        assert_eq!(slope_of(&t, &m1), s("1"));
        // m1 = γ + Σρ / 12: weights off γ are multiples of 1/12
        let gp = gamma_path(&t);
        let twelfth = BigRational::new(1.into(), 12.into());
        let off = (0..12).find(|e| !gp.contains(e)).unwrap();
        let rho = sum_of_cycles(&t, Mode::Upward).unwrap();
        assert_eq!(m1.weights()[off], &rho.weights()[off] * &twelfth);

        assert!(matches!(realize_slope(&t, s("2")), Err(Error::SlopeOutsideInterval { .. })));
        assert!(realize_slope(&t, Slope::INFINITY).is_err());
    }

    #[test]
    fn realize_both_sides() {
        let t = track(1, 8, -3);
        for x in ["inf", "-5", "-1", "7", "-9/2"] {
            let m = realize_slope(&t, s(x)).unwrap();
            assert!(m.is_strictly_positive());
            assert_eq!(slope_of(&t, &m), s(x), "slope {x}");
        }
        for x in ["-4", "-2", "-3", "-8/3"] {
            assert!(realize_slope(&t, s(x)).is_err(), "slope {x}");
        }
    }

    #[test]
    fn feasibility_examples() {
        let t = track(1, 4, 1);
        assert!(full_carry_feasible(&t, Slope::ZERO));
        assert!(full_carry_feasible(&t, s("1")));
        assert!(!full_carry_feasible(&t, s("2")));
        assert!(!full_carry_feasible(&t, Slope::INFINITY));
        assert!(!full_carry_feasible(&t, s("3")));
        let t = track(1, 6, -1);
        assert!(!full_carry_feasible(&t, s("-3")));
        assert!(!full_carry_feasible(&t, Slope::INFINITY));
        assert!(full_carry_feasible(&t, s("-2")));
    }
}
