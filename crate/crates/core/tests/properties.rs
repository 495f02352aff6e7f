//! Randomized invariant checks: Salem/trace-criterion agreement, the
//! hyperbolicity equivalence, log-concavity and palindromic duality of
//! degree sequences, all-or-none circle moduli for real/CM/definite
//! descriptors, Lefschetz determinant cross-checks, and serde round trips.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

use adt_core::dynamics::{
    count_fixed_points, dynamical_degrees, hyperbolicity, spectrum_from_field_endo,
    spectrum_from_quaternion_endo, EndoDescriptor, Spectrum,
};
use adt_core::exact::{det_bareiss, IntPolynomial, RatPolynomial};
use adt_core::number_field::{FieldElement, NumberField};
use adt_core::salem::{classify_root_moduli, is_salem, salem_by_trace_criterion};

fn int_poly(coeffs: &[i64]) -> IntPolynomial {
    IntPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
}

/// Monic reciprocal polynomial of degree 4 or 6 from its lower half.
fn reciprocal_poly(half: &[i64]) -> IntPolynomial {
    let mut coeffs: Vec<i64> = vec![1];
    coeffs.extend_from_slice(half);
    let mut upper: Vec<i64> = half.to_vec();
    upper.reverse();
    coeffs.extend(upper.into_iter().skip(1));
    coeffs.push(1);
    int_poly(&coeffs)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// The trace-polynomial criterion agrees with the moduli-based Salem
    /// test on reciprocal quartics.
    #[test]
    fn salem_trace_criterion_agrees(a in -5i64..=5, b in -7i64..=7) {
        let p = reciprocal_poly(&[a, b]);
        prop_assume!(p.is_squarefree());
        let by_trace = salem_by_trace_criterion(&p).unwrap();
        prop_assert_eq!(by_trace, is_salem(&p));
    }

    /// On spectra of torus automorphisms (reciprocal polynomial, each
    /// eigenvalue doubled): moduli counts sum to 2g, the degree sequence is
    /// log-concave and palindromic, and hyperbolicity is equivalent to all
    /// adjacent dynamical degrees being distinct.
    #[test]
    fn automorphism_spectrum_invariants(a in -3i64..=3, b in -4i64..=4, c in -4i64..=4, sextic in any::<bool>()) {
        let p = if sextic {
            reciprocal_poly(&[a, b, c])
        } else {
            reciprocal_poly(&[a, b])
        };
        prop_assume!(p.is_squarefree());
        let g = p.deg();
        let pattern = classify_root_moduli(&p).unwrap();
        prop_assert_eq!(pattern.n_outside + pattern.n_on + pattern.n_inside, g);
        // Reciprocal roots pair off across the circle.
        prop_assert_eq!(pattern.n_outside, pattern.n_inside);

        let s = Spectrum::from_components(g, vec![(p, 2)]).unwrap();
        let profile = dynamical_degrees(&s).unwrap();
        let l = &profile.lambdas;
        prop_assert!((l[0] - 1.0).abs() < 1e-12);
        for k in 1..g {
            prop_assert!(l[k] * l[k] >= l[k - 1] * l[k + 1] * (1.0 - 1e-9));
        }
        // The inverse automorphism has the same (reciprocal) polynomial, so
        // duality makes the sequence palindromic.
        for k in 0..=g {
            let m = l[k].max(l[g - k]).max(1.0);
            prop_assert!((l[k] - l[g - k]).abs() < 1e-9 * m);
        }
        // Hyperbolicity equivalence: no modulus 1 iff no adjacent equality.
        let distinct_adjacent = profile.adjacent.iter().all(|&d| d != 0);
        prop_assert_eq!(hyperbolicity(&s), distinct_adjacent);
    }

    /// Real multiplication: the analytic eigenvalues of an element of a
    /// totally real field are either all on the circle or none are.
    #[test]
    fn all_or_none_for_real_multiplication(u in -4i64..=4, v in -4i64..=4) {
        prop_assume!(u != 0 || v != 0);
        let f = NumberField::new(int_poly(&[-3, -1, 1])).unwrap();
        let el = FieldElement::new(
            f,
            RatPolynomial::new(vec![
                BigRational::from(BigInt::from(u)),
                BigRational::from(BigInt::from(v)),
            ]),
        );
        let mp = el.min_poly().to_int_exact().unwrap();
        let l = mp.deg() as u32;
        let s = spectrum_from_field_endo(&EndoDescriptor::Field {
            min_poly: mp,
            m: 2 / l,
            e: 2,
            g: 2,
        })
        .unwrap();
        prop_assert!(s.n_on_circle() == 0 || s.n_on_circle() == 4);
    }

    /// Complex multiplication by Q(zeta_5): same all-or-none dichotomy.
    #[test]
    fn all_or_none_for_complex_multiplication(
        a in -2i64..=2, b in -2i64..=2, c in -2i64..=2, d in -2i64..=2,
    ) {
        let f = NumberField::new(int_poly(&[1, 1, 1, 1, 1])).unwrap();
        let el = FieldElement::new(
            f,
            RatPolynomial::new(
                [a, b, c, d]
                    .iter()
                    .map(|&x| BigRational::from(BigInt::from(x)))
                    .collect(),
            ),
        );
        prop_assume!(!el.is_zero() && !el.norm().is_zero());
        let mp = el.min_poly().to_int_exact().unwrap();
        let l = mp.deg() as u32;
        let s = spectrum_from_field_endo(&EndoDescriptor::Field {
            min_poly: mp,
            m: 4 / l,
            e: 4,
            g: 2,
        })
        .unwrap();
        prop_assert!(s.n_on_circle() == 0 || s.n_on_circle() == 4);
    }

    /// Definite quaternion multiplication over Q: half traces live in an
    /// imaginary quadratic field, and the dichotomy persists.
    #[test]
    fn all_or_none_for_definite_quaternions(a in -3i64..=3, b in 1i64..=3) {
        // t = a + b*i has minimal polynomial x^2 - 2a x + (a^2 + b^2).
        let mp = int_poly(&[a * a + b * b, -2 * a, 1]);
        prop_assume!(mp.is_squarefree());
        let s = spectrum_from_quaternion_endo(&EndoDescriptor::Quaternion {
            t1_min_poly: mp.clone(),
            t2_min_poly: mp,
            m: 1,
            e: 1,
            g: 2,
        })
        .unwrap();
        prop_assert!(s.n_on_circle() == 0 || s.n_on_circle() == 4);
    }

    /// Lefschetz fixed-point count equals |det(I - C)| for the companion
    /// matrix C of the characteristic polynomial.
    #[test]
    fn fixed_points_equal_companion_determinant(
        c0 in -6i64..=6, c1 in -6i64..=6, c2 in -6i64..=6, c3 in -6i64..=6,
    ) {
        let q = int_poly(&[c0, c1, c2, c3, 1]);
        prop_assume!(c0 != 0 && q.is_squarefree());
        prop_assume!(!q.eval_rat(&BigRational::one()).is_zero());
        let s = Spectrum::from_components(2, vec![(q.clone(), 1)]).unwrap();
        let count = count_fixed_points(&s).unwrap();
        let n = 4usize;
        let m: Vec<Vec<RatPolynomial>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut v = if i == j {
                            BigRational::one()
                        } else {
                            BigRational::zero()
                        };
                        if i == j + 1 {
                            v -= BigRational::one();
                        }
                        if j == n - 1 {
                            v += BigRational::from(q.coeff(i));
                        }
                        RatPolynomial::constant(v)
                    })
                    .collect()
            })
            .collect();
        let det = det_bareiss(m).coeff(0).to_integer();
        prop_assert_eq!(count, num_traits::Signed::abs(&det));
    }

    /// Polynomials, descriptors and moduli patterns survive a JSON round
    /// trip unchanged.
    #[test]
    fn serde_round_trips(c0 in -9i64..=9, c1 in -9i64..=9, c2 in -9i64..=9) {
        let p = int_poly(&[c0, c1, c2, 1]);
        let back: IntPolynomial =
            serde_json::from_str(&serde_json::to_string(&p).unwrap()).unwrap();
        prop_assert_eq!(&back, &p);

        let d = EndoDescriptor::Field {
            min_poly: p.clone(),
            m: 1,
            e: 3,
            g: 3,
        };
        let back: EndoDescriptor =
            serde_json::from_str(&serde_json::to_string(&d).unwrap()).unwrap();
        prop_assert_eq!(back, d);

        if p.is_squarefree() && !p.coeff(0).is_zero() {
            let pattern = classify_root_moduli(&p).unwrap();
            let back: adt_core::salem::ModuliPattern =
                serde_json::from_str(&serde_json::to_string(&pattern).unwrap()).unwrap();
            prop_assert_eq!(back, pattern);
        }
    }
}

#[test]
fn certificate_and_profile_serde_round_trips() {
    use adt_core::quaternion::{build_construction_certificate, ConstructionVariant};
    let p = int_poly(&[1, -1, -1, -1, 1]);
    let cert =
        build_construction_certificate(&p, ConstructionVariant::SecondKind, 1, 100).unwrap();
    let json = serde_json::to_string(&cert.ramification).unwrap();
    let back: adt_core::quaternion::RamificationCertificate =
        serde_json::from_str(&json).unwrap();
    assert_eq!(back, cert.ramification);
    assert!(back.verify());

    let s = Spectrum::from_components(4, vec![(p, 2)]).unwrap();
    let profile = dynamical_degrees(&s).unwrap();
    let v1 = serde_json::to_value(&profile).unwrap();
    let back: adt_core::dynamics::DynamicalProfile = serde_json::from_value(v1.clone()).unwrap();
    assert_eq!(serde_json::to_value(&back).unwrap(), v1);
}
