//! Property suites for the series ring and the functional layer.

use bohrlab_core::functionals::{majorant, norm_sq};
use bohrlab_core::functions::{random_schwarz, random_unit_bounded};
use bohrlab_core::series::{composition_remainder_bound, GrowthClass, TruncatedSeries};
use bohrlab_core::Complex64;
use proptest::prelude::*;

fn coeff() -> impl Strategy<Value = Complex64> {
    (-1.0f64..1.0, -1.0f64..1.0).prop_map(|(re, im)| Complex64::new(re, im))
}

fn series(max_order: usize) -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec(coeff(), 1..=max_order + 1)
        .prop_map(|coeffs| TruncatedSeries::new(coeffs, GrowthClass::Unknown, 0.0).unwrap())
}

fn max_coeff(s: &TruncatedSeries) -> f64 {
    s.coeffs().iter().map(|c| c.norm()).fold(0.0, f64::max)
}

fn assert_coeffs_close(a: &TruncatedSeries, b: &TruncatedSeries, scale: f64) {
    assert_eq!(a.order(), b.order());
    for n in 0..=a.order() {
        let diff = (a.coeff(n) - b.coeff(n)).norm();
        assert!(diff <= 1e-12 * scale.max(1.0), "n = {}, diff = {}", n, diff);
    }
}

proptest! {
    #[test]
    fn multiplication_commutes(a in series(32), b in series(32)) {
        let ab = a.multiply(&b);
        let ba = b.multiply(&a);
        let scale = max_coeff(&a) * max_coeff(&b) * 33.0;
        assert_coeffs_close(&ab, &ba, scale);
    }

    #[test]
    fn multiplication_associates(a in series(32), b in series(32), c in series(32)) {
        let left = a.multiply(&b).multiply(&c);
        let right = a.multiply(&b.multiply(&c));
        let scale = max_coeff(&a) * max_coeff(&b) * max_coeff(&c) * 33.0 * 33.0;
        assert_coeffs_close(&left, &right, scale);
    }

    #[test]
    fn multiplication_distributes_over_addition(a in series(32), b in series(32), c in series(32)) {
        let left = a.multiply(&b.add(&c));
        let right = a.multiply(&b).add(&a.multiply(&c));
        let scale = max_coeff(&a) * (max_coeff(&b) + max_coeff(&c)) * 33.0;
        assert_coeffs_close(&left, &right, scale);
    }

    #[test]
    fn addition_commutes_exactly(a in series(32), b in series(32)) {
        let ab = a.add(&b);
        let ba = b.add(&a);
        prop_assert_eq!(ab.coeffs(), ba.coeffs());
    }

    #[test]
    fn compose_rejects_every_shifted_inner(shift in 1e-12f64..0.9, a in series(16)) {
        let mut coeffs = vec![Complex64::new(shift, 0.0), Complex64::new(0.5, 0.0)];
        coeffs.resize(6, Complex64::ZERO);
        let w = TruncatedSeries::new(coeffs, GrowthClass::Unknown, 0.0).unwrap();
        prop_assert!(a.compose(&w).is_err());
    }

    #[test]
    fn composition_agrees_with_pointwise_evaluation(
        g_seed in any::<u64>(),
        w_seed in any::<u64>(),
        g_depth in 1usize..=3,
        w_depth in 0usize..=3,
        radius in 0.0f64..0.3,
        angle in 0.0f64..std::f64::consts::TAU,
    ) {
        // Orders >= 64 and |z| <= 0.3: the truncation remainder is certified
        // by the majorant-composition bound.
        let g = random_unit_bounded(g_seed, 64, g_depth);
        let w = random_schwarz(w_seed, 64, w_depth);
        let z = Complex64::from_polar(radius, angle);
        let lhs = g.compose(&w).unwrap().evaluate(z).unwrap();
        let rhs = g.evaluate(w.evaluate(z).unwrap()).unwrap();
        let bound = composition_remainder_bound(&g, &w, z.norm()).unwrap();
        prop_assert!((lhs - rhs).norm() <= bound + 1e-12);
    }

    #[test]
    fn generators_are_reproducible(seed in any::<u64>(), depth in 0usize..=3) {
        let a = random_schwarz(seed, 48, depth);
        let b = random_schwarz(seed, 48, depth);
        prop_assert_eq!(a.coeffs(), b.coeffs());
        let c = random_unit_bounded(seed, 48, depth + 1);
        let d = random_unit_bounded(seed, 48, depth + 1);
        prop_assert_eq!(c.coeffs(), d.coeffs());
    }

    #[test]
    fn functionals_nondecreasing_in_radius(seed in any::<u64>(), r1 in 0.0f64..0.95, r2 in 0.0f64..0.95) {
        let f = random_unit_bounded(seed, 64, 2);
        let (lo, hi) = if r1 <= r2 { (r1, r2) } else { (r2, r1) };
        prop_assert!(majorant(&f, lo).unwrap().value <= majorant(&f, hi).unwrap().value + 1e-15);
        prop_assert!(norm_sq(&f, lo).unwrap().value <= norm_sq(&f, hi).unwrap().value + 1e-15);
    }

    #[test]
    fn bounded_tail_dominates_sampled_remainders(
        c in 0.01f64..2.0,
        r in 0.01f64..0.9,
        order in 4usize..32,
    ) {
        // Any coefficient sequence below the bound has its tail below the
        // closed form; sample the extremal constant sequence.
        let tail = GrowthClass::BoundedBy(c).majorant_tail(r, order);
        let direct: f64 = (order + 1..order + 600).map(|n| c * r.powi(n as i32)).sum();
        prop_assert!(direct <= tail + 1e-12);
    }
}
