//! Classification of dynamical degree sequences: the worked corpus of
//! totally real cubics, sextics and quartics, fixed-point counts, and the
//! encoded classification tables.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use adt_core::dynamics::{
    classification_table, classify_diagram, count_fixed_points, cyclotomic, dynamical_degrees,
    hyperbolicity, reducibility_criterion, spectrum_from_field_endo,
    spectrum_from_quaternion_endo, DynError, EndoDescriptor, Reducibility, Spectrum,
};
use adt_core::exact::{det_bareiss, parse_poly, IntPolynomial, RatPolynomial};
use adt_core::salem::{classify_root_moduli, is_pisot, salem_value};

fn p(s: &str) -> IntPolynomial {
    parse_poly(s).unwrap()
}

/// Spectrum of a field-type endomorphism of degree e = deg(min poly) acting
/// on a g-dimensional variety.
fn field_spectrum(s: &str, g: u32) -> Spectrum {
    let mp = p(s);
    let e = mp.deg() as u32;
    spectrum_from_field_endo(&EndoDescriptor::Field {
        min_poly: mp,
        m: 1,
        e,
        g,
    })
    .unwrap()
}

fn label(s: &Spectrum) -> String {
    classify_diagram(s).unwrap().label
}

#[test]
fn low_dimension_diagrams() {
    // Elliptic curve with complex multiplication: all eigenvalues on the
    // circle.
    assert_eq!(label(&field_spectrum("x^2 + 1", 1)), "(1)");
    // Abelian surface with real multiplication by Q(sqrt(5)).
    assert_eq!(label(&field_spectrum("x^2 - 3x + 1", 2)), "(2)");
    // Threefold with real multiplication by a totally real cubic.
    assert_eq!(label(&field_spectrum("x^3 - 5x + 1", 3)), "(2)");
    assert_eq!(label(&field_spectrum("x^3 - 3x^2 - 2x + 1", 3)), "(3)");
}

#[test]
fn sextic_examples_in_dimension_three() {
    let s1 = p("x^6 + x^4 + x^3 + 2x^2 + 1");
    let s2 = p("x^6 + x^4 + x^3 + 1");
    // Root counts pin down the diagram: four roots off the circle on each
    // side of it give (2), two give (3).
    let m1 = classify_root_moduli(&s1).unwrap();
    assert_eq!((m1.n_outside, m1.n_on, m1.n_inside), (4, 0, 2));
    let m2 = classify_root_moduli(&s2).unwrap();
    assert_eq!((m2.n_outside, m2.n_on, m2.n_inside), (2, 0, 4));
    assert_eq!(label(&field_spectrum("x^6 + x^4 + x^3 + 2x^2 + 1", 3)), "(2)");
    assert_eq!(label(&field_spectrum("x^6 + x^4 + x^3 + 1", 3)), "(3)");
}

/// The worked quartic corpus in dimension 4 (real multiplication by a
/// totally real quartic field).
const QUARTIC_CORPUS: &[(&str, &str)] = &[
    ("x^4 - 5x^2 + 1", "(2)"),
    ("x^4 + x^3 - 5x^2 + x + 1", "(4)"),
    ("x^4 - x^3 - 7x^2 + 1", "(5)"),
    ("x^4 - x^3 - 139x^2 + 139x + 1", "(6)"),
    ("x^4 - 1133x^3 - 139x^2 + 13x + 1", "(7)"),
    ("x^4 + 2x^3 - 3x^2 + 3x + 1", "(6)"),
    ("x^4 - 4x^3 + 2x^2 - 3x + 1", "(7)"),
    ("x^4 - x^3 + x^2 + 7x + 1", "(8)"),
    ("x^4 - 5x^3 + 3x^2 - x + 1", "(9)"),
    ("x^4 - x^3 + 3x^2 + 7x + 1", "(8)"),
    ("x^4 - 5x^3 + x^2 + 3x + 1", "(11)"),
];

#[test]
fn quartic_corpus_diagrams_and_degree_properties() {
    // One pass per polynomial: building the certified spectrum is the
    // expensive step, so every per-spectrum property is checked here.
    for (poly, expected) in QUARTIC_CORPUS {
        let s = field_spectrum(poly, 4);
        assert_eq!(&label(&s), expected, "diagram of {poly}");
        let profile = dynamical_degrees(&s).unwrap();
        assert!(hyperbolicity(&s), "no corpus root lies on the circle");
        assert!(
            profile.cohomologically_hyperbolic,
            "{poly} should have a strictly unimodal degree sequence"
        );
        let l = &profile.lambdas;
        assert!((l[0] - 1.0).abs() < 1e-12);
        // Automorphism: the product of all moduli is |constant term| = 1.
        assert!((l[4] - 1.0).abs() < 1e-6 * l[2]);
        for k in 1..4 {
            assert!(
                l[k] * l[k] >= l[k - 1] * l[k + 1] * (1.0 - 1e-9),
                "log-concavity fails at k = {k} for {poly}"
            );
        }
    }
}

#[test]
fn salem_quartic_realizes_the_equal_degrees_diagram() {
    let s = field_spectrum("x^4 - x^3 - x^2 - x + 1", 4);
    let d = classify_diagram(&s).unwrap();
    assert_eq!(d.label, "(12)");
    assert!(d.condition.contains("Salem"));
    // lambda_1 = lambda_2 = lambda_3 = (Salem value)^2 and the map is not
    // cohomologically hyperbolic.
    let profile = dynamical_degrees(&s).unwrap();
    assert!(!profile.hyperbolic);
    assert!(!profile.cohomologically_hyperbolic);
    let lam = salem_value(&p("x^4 - x^3 - x^2 - x + 1")).unwrap().to_f64();
    for k in 1..=3 {
        assert!((profile.lambdas[k] - lam * lam).abs() < 1e-9);
    }
}

#[test]
fn quaternion_multiplication_merges_half_traces() {
    // Definite quaternion multiplication over Q on an abelian surface: both
    // half-trace components are x^2 + 1, so every eigenvalue sits on the
    // circle.
    let d = EndoDescriptor::Quaternion {
        t1_min_poly: p("x^2 + 1"),
        t2_min_poly: p("x^2 + 1"),
        m: 1,
        e: 1,
        g: 2,
    };
    let s = spectrum_from_quaternion_endo(&d).unwrap();
    assert_eq!(s.components, vec![(p("x^2 + 1"), 2)]);
    assert_eq!(label(&s), "(1)");
    // Distinct half traces keep separate components.
    let d2 = EndoDescriptor::Quaternion {
        t1_min_poly: p("x^2 - 3x + 1"),
        t2_min_poly: p("x^2 - x - 1"),
        m: 1,
        e: 1,
        g: 2,
    };
    let s2 = spectrum_from_quaternion_endo(&d2).unwrap();
    assert_eq!(s2.components.len(), 2);
    assert_eq!(s2.n_outside(), 2);
    assert_eq!(label(&s2), "(2)");
}

#[test]
fn pisot_trace_source_for_dimension_three() {
    // The totally real cubic with a dominant root > 1 and small conjugates.
    assert!(is_pisot(&p("x^3 - 3x^2 - 2x + 1")));
    assert!(!is_pisot(&p("x^3 - 5x + 1")));
}

#[test]
fn lehmer_map_entropy() {
    // The degree-10 Salem polynomial acting with multiplicity 2 on a
    // 10-dimensional variety: entropy 2 log(lambda).
    let lehmer = "x^10 + x^9 - x^7 - x^6 - x^5 - x^4 - x^3 + x + 1";
    let s = field_spectrum(lehmer, 10);
    let profile = dynamical_degrees(&s).unwrap();
    let lam = salem_value(&p(lehmer)).unwrap().to_f64();
    assert!((profile.entropy - 2.0 * lam.ln()).abs() < 1e-12);
    assert!(!profile.hyperbolic);
}

#[test]
fn salem_spectrum_is_not_hyperbolic() {
    let salem = field_spectrum("x^4 - x^3 - x^2 - x + 1", 4);
    assert!(!hyperbolicity(&salem));
    assert!(!dynamical_degrees(&salem).unwrap().cohomologically_hyperbolic);
}

#[test]
fn inverse_swaps_the_degree_sequence() {
    // A representative slice of the corpus, including the largest
    // coefficients; the inverse automorphism has the reversed polynomial.
    for poly in [
        "x^4 - 5x^2 + 1",
        "x^4 - 5x^3 + x^2 + 3x + 1",
        "x^4 - 1133x^3 - 139x^2 + 13x + 1",
    ] {
        let q = p(poly);
        let s = field_spectrum(poly, 4);
        let rev = q.reverse();
        assert!(rev.is_monic(), "corpus polynomials have constant term 1");
        let e = rev.deg() as u32;
        let si = spectrum_from_field_endo(&EndoDescriptor::Field {
            min_poly: rev,
            m: 1,
            e,
            g: 4,
        })
        .unwrap();
        let l = dynamical_degrees(&s).unwrap().lambdas;
        let li = dynamical_degrees(&si).unwrap().lambdas;
        for k in 0..=4 {
            assert!(
                (li[k] - l[4 - k]).abs() < 1e-9 * l[4 - k].max(1.0),
                "duality fails at k = {k} for {poly}"
            );
        }
    }
}

#[test]
fn fixed_point_counts_match_lefschetz_determinants() {
    // Holomorphic Lefschetz: # Fix = |det(I - R)| for the rational
    // representation R; cross-checked on random companion matrices.
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let mut done = 0usize;
    while done < 50 {
        let mut coeffs: Vec<BigInt> = (0..4).map(|_| BigInt::from(rng.gen_range(-6..=6i64))).collect();
        coeffs.push(BigInt::one());
        let q = IntPolynomial::new(coeffs);
        if q.coeff(0).is_zero()
            || !q.is_squarefree()
            || q.eval_rat(&BigRational::one()).is_zero()
        {
            continue;
        }
        let s = Spectrum::from_components(2, vec![(q.clone(), 1)]).unwrap();
        let count = count_fixed_points(&s).unwrap();
        // I - C for the companion matrix C of q.
        let n = 4usize;
        let m: Vec<Vec<RatPolynomial>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut v = BigRational::from(if i == j { BigInt::one() } else { BigInt::from(0) });
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
        assert_eq!(count, det.abs(), "Lefschetz count mismatch for {q:?}");
        done += 1;
    }
}

#[test]
fn infinite_fixed_locus_is_detected() {
    let s = Spectrum::from_components(1, vec![(p("x^2 - 3x + 2"), 1)]).unwrap();
    assert_eq!(count_fixed_points(&s).unwrap_err(), DynError::InfiniteFixedLocus);
    assert_eq!(reducibility_criterion(&s), Reducibility::EigenvalueOne);
}

#[test]
fn reducibility_detects_roots_of_unity() {
    let s = Spectrum::from_components(1, vec![(p("x^2 + x + 1"), 1)]).unwrap();
    assert_eq!(reducibility_criterion(&s), Reducibility::RootOfUnity(3));
    let salem = field_spectrum("x^4 - x^3 - x^2 - x + 1", 4);
    assert_eq!(reducibility_criterion(&salem), Reducibility::None);
    // A fixed-point count exists for the Salem automorphism: P(1) = -1
    // taken with multiplicity 2 gives a single fixed point.
    assert_eq!(count_fixed_points(&salem).unwrap(), BigInt::one());
}

#[test]
fn cyclotomic_polynomials() {
    assert_eq!(cyclotomic(1), p("x - 1"));
    assert_eq!(cyclotomic(2), p("x + 1"));
    assert_eq!(cyclotomic(3), p("x^2 + x + 1"));
    assert_eq!(cyclotomic(4), p("x^2 + 1"));
    assert_eq!(cyclotomic(6), p("x^2 - x + 1"));
    assert_eq!(cyclotomic(12), p("x^4 - x^2 + 1"));
    // First index with a coefficient outside {-1, 0, 1}.
    let c105 = cyclotomic(105);
    assert_eq!(c105.deg(), 48);
    assert_eq!(c105.coeff(7), BigInt::from(-2));
}

#[test]
fn descriptor_validation() {
    // Eigenvalue count must equal 2g.
    assert!(matches!(
        Spectrum::from_components(3, vec![(p("x^2 + 1"), 1)]),
        Err(DynError::InvalidDescriptor(_))
    ));
    // Zero constant term means a zero eigenvalue: not an isogeny.
    assert!(matches!(
        Spectrum::from_components(1, vec![(p("x^2 + x"), 1)]),
        Err(DynError::ZeroEigenvalue)
    ));
    // l * m must equal e for field descriptors.
    assert!(matches!(
        spectrum_from_field_endo(&EndoDescriptor::Field {
            min_poly: p("x^2 + 1"),
            m: 1,
            e: 3,
            g: 3,
        }),
        Err(DynError::InvalidDescriptor(_))
    ));
}

#[test]
fn unclassified_dimensions_are_rejected() {
    let s = field_spectrum("x^10 + x^9 - x^7 - x^6 - x^5 - x^4 - x^3 + x + 1", 5);
    assert_eq!(classify_diagram(&s).unwrap_err(), DynError::Unclassified);
}

#[test]
fn classification_tables_are_complete() {
    assert_eq!(classification_table(1).len(), 2);
    assert_eq!(classification_table(2).len(), 7);
    assert_eq!(classification_table(3).len(), 5);
    assert_eq!(classification_table(4).len(), 17);
    assert!(classification_table(5).is_empty());
    let t4 = classification_table(4);
    assert_eq!(t4[10].diagrams, "(6) - (12),");
    assert_eq!(t4[10].field, "real and complex embeddings");
    assert_eq!(t4[16].field, "quad. ext. of CM-field of deg. 2");
    assert_eq!(t4[16].diagrams, "(1), (2)");
    // Every dimension-4 row quotes diagrams from the dimension-4 figure.
    for row in t4 {
        assert!(!row.diagrams.is_empty());
        assert!(!row.lambda_property.is_empty());
    }
}
