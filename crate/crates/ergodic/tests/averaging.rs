//! Cesàro averaging tests: predicted constant limits, checkpointed error
//! decay, collinearity in the hyperbolic case, mode budgets, and the volume
//! normalization behind the limit coefficients.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use adt_core::IntPolynomial;
use adt_ergodic::{ErgodicError, FourierForm, ModeEntry, TorusAutomorphism};

fn int_poly(coeffs: &[i64]) -> IntPolynomial {
    IntPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
}

fn salem_torus() -> TorusAutomorphism {
    TorusAutomorphism::from_reciprocal_polynomial(&int_poly(&[1, -1, -1, -1, 1])).unwrap()
}

fn zero_l(g: usize) -> Vec<BigInt> {
    vec![BigInt::zero(); 2 * g]
}

#[test]
fn predicted_limit_examples() {
    let t = salem_torus();

    // The top eigenform is its own limit.
    let top = FourierForm::constant(4, 1, &[0], &[0], Complex64::new(1.0, 0.0)).unwrap();
    let lim = t.predicted_limit(&top, 1).unwrap();
    assert!(lim.sup_distance(&top) == 0.0);

    // No component in the top frame direction: the limit vanishes.
    let second = FourierForm::constant(4, 1, &[1], &[1], Complex64::new(1.0, 0.0)).unwrap();
    assert!(t.predicted_limit(&second, 1).unwrap().is_zero());

    // Oscillating modes have no zero-mode mass.
    let mut osc = FourierForm::new(4, 1);
    let mut l = zero_l(4);
    l[0] = BigInt::one();
    osc.insert(l, &[0], &[0], Complex64::new(1.0, 0.0)).unwrap();
    assert!(t.predicted_limit(&osc, 1).unwrap().is_zero());

    // Off-diagonal constants are dropped too.
    let cross = FourierForm::constant(4, 1, &[0], &[1], Complex64::new(1.0, 0.0)).unwrap();
    assert!(t.predicted_limit(&cross, 1).unwrap().is_zero());

    // Two eigenvalues outside the circle: hypothesis fails.
    // (x^2 - 3x + 1)(x^2 - 4x + 1) = x^4 - 7x^3 + 14x^2 - 7x + 1.
    let h4 = TorusAutomorphism::from_reciprocal_polynomial(&int_poly(&[1, -7, 14, -7, 1])).unwrap();
    let omega4 = FourierForm::constant(4, 1, &[0], &[0], Complex64::new(1.0, 0.0)).unwrap();
    match h4.predicted_limit(&omega4, 1) {
        Err(ErgodicError::HypothesisNotMet) => {}
        other => panic!("expected HypothesisNotMet, got {other:?}"),
    }

    // For g = 2 the circle block is empty, so a hyperbolic quadratic
    // degenerately satisfies the one-outside / one-inside shape.
    let h = TorusAutomorphism::from_reciprocal_polynomial(&int_poly(&[1, -3, 1])).unwrap();
    let omega = FourierForm::constant(2, 1, &[0], &[0], Complex64::new(1.0, 0.0)).unwrap();
    assert!(h.predicted_limit(&omega, 1).unwrap().sup_distance(&omega) == 0.0);
}

#[test]
fn eigenform_average_has_zero_error() {
    let t = salem_torus();
    let omega = FourierForm::constant(4, 1, &[0], &[0], Complex64::new(1.0, 0.0)).unwrap();
    let (avg, report) = t.cesaro_average(&omega, 1, 256).unwrap();
    assert!(report.limit_from_hypothesis);
    assert!(report.sup_errors.iter().all(|&e| e >= 0.0 && e <= 1e-9));
    assert!(avg.sup_distance(&report.limit) <= 1e-9);
    // The top eigenform is perfectly aligned with itself.
    assert!(report.collinearity.iter().all(|&c| c <= 1e-9));
}

#[test]
fn mixed_form_error_decays_to_the_limit() {
    let t = salem_torus();
    let mut omega = FourierForm::new(4, 1);
    omega
        .insert(zero_l(4), &[0], &[0], Complex64::new(1.0, 0.0))
        .unwrap();
    omega
        .insert(zero_l(4), &[1], &[1], Complex64::new(1.0, 0.0))
        .unwrap();
    let mut l = zero_l(4);
    l[0] = BigInt::one();
    omega.insert(l, &[0], &[0], Complex64::new(0.5, 0.5)).unwrap();

    let n = 2000;
    let (avg, report) = t.cesaro_average(&omega, 1, n).unwrap();
    assert!(report.limit_from_hypothesis);
    assert_eq!(report.limit.mode_count(), 1);
    let final_err = *report.sup_errors.last().unwrap();
    assert!(final_err <= 5.0 / n as f64, "final error {final_err}");
    assert!(avg.sup_distance(&report.limit) <= 5.0 / n as f64);

    // Checkpoint errors trend down: each window-of-3 median is no larger
    // than the previous one (up to a small slack for oscillation).
    let medians: Vec<f64> = report
        .sup_errors
        .windows(3)
        .map(|w| {
            let mut v = w.to_vec();
            v.sort_by(|a, b| a.partial_cmp(b).unwrap());
            v[1]
        })
        .collect();
    for pair in medians.windows(2) {
        assert!(pair[1] <= pair[0] * 1.05, "medians not decreasing: {medians:?}");
    }

    // Exact mode tracking: the oscillating mode contributes one escaping
    // frequency per step, never truncated.
    assert!(*report.mode_counts.last().unwrap() >= n);
}

#[test]
fn oscillating_mode_average_decays_like_one_over_n() {
    let t = salem_torus();
    let mut omega = FourierForm::new(4, 1);
    let mut l = zero_l(4);
    l[2] = BigInt::one();
    omega.insert(l, &[0], &[0], Complex64::new(1.0, 0.0)).unwrap();

    let n = 512;
    let (avg, report) = t.cesaro_average(&omega, 1, n).unwrap();
    // The mode keeps unit strength (the frame factor has modulus lambda_1)
    // but spreads over n distinct frequencies, so the average's largest
    // coefficient is 1/n.
    assert!((avg.sup_norm() - 1.0 / n as f64).abs() <= 1e-3 / n as f64);
    assert!(*report.sup_errors.last().unwrap() <= 1.01 / n as f64);
}

#[test]
fn hyperbolic_average_aligns_with_the_top_eigenform() {
    // Genuinely hyperbolic with two expanding directions, so there is no
    // predicted constant limit; the average still lines up with the top
    // eigenform because lambda_1 is attained by a unique frame pair.
    let t = TorusAutomorphism::from_reciprocal_polynomial(&int_poly(&[1, -7, 14, -7, 1])).unwrap();
    assert!(t.is_hyperbolic());
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let mut omega = FourierForm::new(4, 1);
    for i in 0..4 {
        for j in 0..4 {
            omega
                .insert(
                    zero_l(4),
                    &[i],
                    &[j],
                    Complex64::new(rng.gen_range(0.5..1.5), rng.gen_range(-0.5..0.5)),
                )
                .unwrap();
        }
    }
    let n = 1000;
    let (avg, report) = t.cesaro_average(&omega, 1, n).unwrap();
    assert!(!report.limit_from_hypothesis);

    // Direction of the iterates converges geometrically.
    assert!(*report.collinearity.last().unwrap() <= 1e-6);

    // The average itself is dominated by the top eigenform component.
    let top = avg.coefficient(&zero_l(4), &[0], &[0]).norm();
    let rest = (avg.l2_norm_sq() - top * top).max(0.0).sqrt();
    assert!(rest <= 5e-2 * top, "off-line mass {rest} vs top {top}");
}

#[test]
fn mode_budget_aborts_with_a_partial_report() {
    let t = salem_torus();
    let mut omega = FourierForm::new(4, 1);
    let mut l = zero_l(4);
    l[0] = BigInt::one();
    omega.insert(l, &[0], &[0], Complex64::new(1.0, 0.0)).unwrap();

    match t.cesaro_average_with_budget(&omega, 1, 500, 50) {
        Err(ErgodicError::ModeBudgetExceeded(partial)) => {
            assert!(partial.steps > 50 && partial.steps < 500);
            assert!(partial.average.mode_count() > 50);
            assert!(!partial.report.checkpoints.is_empty());
            assert_eq!(
                partial.report.checkpoints.len(),
                partial.report.sup_errors.len()
            );
        }
        other => panic!("expected ModeBudgetExceeded, got {other:?}"),
    }
}

#[test]
fn limit_coefficients_match_direct_integration() {
    // The a_I normalization: the predicted limit coefficient for I = {1} is
    // the average of the omega_{I,I} coefficient function over the torus.
    // Quasi-Monte Carlo with a badly-approximable direction integrates
    // trigonometric polynomials accurately.
    let t = salem_torus();
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let mut omega = FourierForm::new(4, 1);
    omega
        .insert(zero_l(4), &[0], &[0], Complex64::new(0.83, -0.21))
        .unwrap();
    for _ in 0..5 {
        let mut l = zero_l(4);
        for e in l.iter_mut() {
            *e = BigInt::from(rng.gen_range(-2i64..=2));
        }
        if l.iter().all(|x| x.is_zero()) {
            continue;
        }
        omega
            .insert(
                l,
                &[0],
                &[0],
                Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
            )
            .unwrap();
    }

    let lim = t.predicted_limit(&omega, 1).unwrap();
    let predicted = lim.coefficient(&zero_l(4), &[0], &[0]);

    let alpha: Vec<f64> = [2.0f64, 3.0, 5.0, 7.0, 11.0, 13.0, 17.0, 19.0]
        .iter()
        .map(|p| p.sqrt().fract())
        .collect();
    let m = 200_000;
    let mut acc = Complex64::new(0.0, 0.0);
    for step in 1..=m {
        let x: Vec<f64> = alpha.iter().map(|a| (a * step as f64).fract()).collect();
        acc += omega.eval_coefficient(&[0], &[0], &x);
    }
    let integral = acc / m as f64;
    assert!(
        (integral - predicted).norm() <= 1e-2,
        "quadrature {integral} vs predicted {predicted}"
    );
}

#[test]
fn mode_entries_round_trip() {
    let entries = vec![
        ModeEntry {
            l: vec![1, 0, -2, 0, 0, 0, 0, 3],
            i: vec![1],
            j: vec![2],
            re: 0.5,
            im: -1.25,
        },
        ModeEntry {
            l: vec![0; 8],
            i: vec![3],
            j: vec![3],
            re: 2.0,
            im: 0.0,
        },
    ];
    let f = FourierForm::from_entries(4, 1, &entries).unwrap();
    assert_eq!(f.mode_count(), 2);
    let mut back = f.to_entries().unwrap();
    back.sort_by_key(|e| e.i.clone());
    assert_eq!(back.len(), 2);
    assert_eq!(back[0].i, vec![1]);
    assert_eq!(back[0].j, vec![2]);
    assert!((back[0].re - 0.5).abs() < 1e-15);

    // JSON uses the documented field names.
    let json = serde_json::to_string(&entries[0]).unwrap();
    assert!(json.contains("\"I\":[1]") && json.contains("\"J\":[2]"));
    let parsed: ModeEntry = serde_json::from_str(&json).unwrap();
    assert_eq!(parsed, entries[0]);

    // 1-based indices are validated.
    let bad = vec![ModeEntry {
        l: vec![0; 8],
        i: vec![0],
        j: vec![1],
        re: 1.0,
        im: 0.0,
    }];
    assert!(FourierForm::from_entries(4, 1, &bad).is_err());
}

#[test]
fn wedge_handles_signs_and_collisions() {
    // dw_1 dw̄_2 ∧ dw_2 dw̄_1 picks up the shuffle signs; repeated frame
    // indices annihilate.
    let a = FourierForm::constant(3, 1, &[0], &[1], Complex64::new(1.0, 0.0)).unwrap();
    let b = FourierForm::constant(3, 1, &[1], &[0], Complex64::new(1.0, 0.0)).unwrap();
    let ab = a.wedge(&b).unwrap();
    assert_eq!(ab.mode_count(), 1);
    // dw_0 dw̄_1 dw_1 dw̄_0 = -dw_0 dw_1 dw̄_1 dw̄_0 = +dw_0 dw_1 dw̄_0 dw̄_1.
    let c = ab.coefficient(&zero_l(3), &[0, 1], &[0, 1]);
    assert!((c - Complex64::new(1.0, 0.0)).norm() < 1e-15);

    assert!(a.wedge(&a).unwrap().is_zero());

    // Inserting an unsorted multi-index normalizes with a sign.
    let mut f = FourierForm::new(3, 2);
    f.insert(zero_l(3), &[2, 0], &[0, 1], Complex64::new(1.0, 0.0))
        .unwrap();
    let c = f.coefficient(&zero_l(3), &[0, 2], &[0, 1]);
    assert!((c - Complex64::new(-1.0, 0.0)).norm() < 1e-15);

    // A repeated index vanishes outright.
    let mut z = FourierForm::new(3, 2);
    z.insert(zero_l(3), &[1, 1], &[0, 1], Complex64::new(1.0, 0.0))
        .unwrap();
    assert!(z.is_zero());
}
