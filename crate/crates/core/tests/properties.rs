use proptest::prelude::*;
use teichext::fd::dbar_d_stencil;
use teichext::torus::{self, primitive_curves};
use teichext::verify::{run_suite, Suite, SuiteConfig};
use teichext::{Complex, DistanceMethod, TorusFoliation, TorusPoint, TorusTangent};

fn point() -> impl Strategy<Value = TorusPoint> {
    (-2.0..2.0f64, 0.05..5.0f64).prop_map(|(x, y)| TorusPoint::from_parts(x, y).unwrap())
}

fn foliation() -> impl Strategy<Value = TorusFoliation> {
    (-5.0..5.0f64, -5.0..5.0f64)
        .prop_filter("nonzero", |(a, b)| a.hypot(*b) > 1e-3)
        .prop_map(|(a, b)| TorusFoliation::new(a, b).unwrap())
}

fn direction() -> impl Strategy<Value = Complex> {
    (-2.0..2.0f64, -2.0..2.0f64).prop_map(|(re, im)| Complex::new(re, im))
}

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1e-300)
}

proptest! {
    #[test]
    fn ext_is_quadratically_homogeneous(x in point(), f in foliation(), t in 0.01..100.0f64) {
        let scaled = torus::extremal_length(&x, &f.scaled(t).unwrap());
        prop_assert!(close(scaled, t * t * torus::extremal_length(&x, &f), 1e-12));
    }

    #[test]
    fn hubbard_masur_norm_is_ext(x in point(), f in foliation()) {
        prop_assert!(close(torus::hubbard_masur(&x, &f).norm(), torus::extremal_length(&x, &f), 1e-12));
    }

    #[test]
    fn minsky_slack_is_nonnegative(x in point(), f in foliation(), g in foliation()) {
        let scale = torus::extremal_length(&x, &f) * torus::extremal_length(&x, &g);
        prop_assert!(torus::minsky_slack(&x, &f, &g) >= -1e-12 * scale);
    }

    #[test]
    fn torus_gradient_levi_equality(x in point(), f in foliation(), v in direction()) {
        prop_assume!(v.norm() > 1e-3);
        let t = TorusTangent::new(x, v).unwrap();
        let scale = torus::extremal_length(&x, &f) * torus::levi_form(&x, &f, &t).unwrap();
        prop_assert!(torus::strong_positivity_slack(&x, &f, &t).unwrap().abs() <= 1e-12 * scale);
    }

    #[test]
    fn eta_is_conjugate_linear(x in point(), f in foliation(), v in direction(), w in direction(), s in direction()) {
        let eta = |v: Complex| torus::eta_v(&x, &f, &TorusTangent::new(x, v).unwrap()).unwrap().coeff;
        let sum = eta(v + w);
        let scale = eta(v).norm() + eta(w).norm() + 1e-300;
        prop_assert!((sum - eta(v) - eta(w)).norm() <= 1e-12 * scale);
        let scaled = eta(s * v);
        prop_assert!((scaled - s.conj() * eta(v)).norm() <= 1e-12 * (scaled.norm() + 1e-300));
    }

    #[test]
    fn eigen_distance_is_symmetric(x in point(), y in point()) {
        let (d1, d2) = (torus::kerckhoff_eigen(&x, &y), torus::kerckhoff_eigen(&y, &x));
        prop_assert!((d1 - d2).abs() <= 1e-12 * d1.max(1.0));
    }

    #[test]
    fn eigen_distance_is_half_poincare(x in point(), y in point()) {
        let half = torus::poincare_distance(&x, &y) / 2.0;
        prop_assert!((torus::kerckhoff_eigen(&x, &y) - half).abs() <= 1e-9 * half.max(1.0));
    }

    #[test]
    fn brute_distance_is_monotone_and_bounded(x in point(), y in point()) {
        let eigen = torus::kerckhoff_eigen(&x, &y);
        let mut last = f64::NEG_INFINITY;
        for bound in [1, 3, 10, 30] {
            let d = torus::teich_distance(&x, &y, DistanceMethod::Brute { bound }).unwrap();
            prop_assert!(d >= last);
            prop_assert!(d <= eigen + 1e-12);
            last = d;
        }
    }
}

#[test]
fn curve_list_is_primitive_and_projectively_distinct() {
    let curves = primitive_curves(12);
    for &(p, q) in &curves {
        assert_eq!(num_integer::gcd(p, q), 1, "({p}, {q})");
    }
    let mut slopes: Vec<_> = curves.iter().map(|&(p, q)| (q as f64).atan2(p as f64)).collect();
    slopes.sort_by(f64::total_cmp);
    slopes.dedup();
    assert_eq!(slopes.len(), curves.len());
}

#[test]
fn log_ext_stencil_converges_at_second_order() {
    // ∂∂̄ log Ext along τ₀ + λV is |V|² / (4 (Im τ)²).
    for (tau0, v) in
        [(Complex::new(0.0, 1.0), Complex::new(1.0, 0.0)), (Complex::new(0.7, 1.5), Complex::new(-0.4, 0.9))]
    {
        let f = TorusFoliation::new(2.0, -1.0).unwrap();
        let mut log_ext = |lambda: Complex| {
            let x = TorusPoint::new(tau0 + lambda * v)?;
            Ok(torus::extremal_length(&x, &f).ln())
        };
        let exact = v.norm_sqr() / (4.0 * tau0.im * tau0.im);
        for h in [1e-2, 5e-3] {
            let err = (dbar_d_stencil(&mut log_ext, Complex::new(0.0, 0.0), h).unwrap() - exact).abs();
            assert!(err <= 10.0 * h * h, "tau0={tau0} h={h}: {err}");
        }
    }
}

#[test]
fn reports_are_deterministic_under_a_seed() {
    let config = SuiteConfig { seed: 9, samples: Some(20), ..Default::default() };
    for suite in [Suite::LogPsh, Suite::Distance, Suite::Periods, Suite::Minsky] {
        let first = run_suite(suite, &config).unwrap();
        let second = run_suite(suite, &config).unwrap();
        assert_eq!(serde_json::to_string(&first).unwrap(), serde_json::to_string(&second).unwrap());
        assert!(first.iter().all(|r| r.seed == Some(9)));
    }
}
