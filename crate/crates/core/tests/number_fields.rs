//! Number-field arithmetic: norms, traces, minimal polynomials,
//! discriminants, embeddings, splitting of primes and the power order.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use adt_core::exact::{parse_poly, IntPolynomial, RatPolynomial};
use adt_core::number_field::{
    defining_irreducible_mod_p, embedding_signature, field_kind, is_prime_ideal_p_o,
    power_basis_discriminant, quadratic_splitting, rational_sqrt, FieldElement, FieldKind,
    NumberField, PowerOrder, SplittingKind,
};

fn p(s: &str) -> IntPolynomial {
    parse_poly(s).unwrap()
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn elem(field: &adt_core::number_field::FieldRef, coeffs: &[(i64, i64)]) -> FieldElement {
    FieldElement::new(
        field.clone(),
        RatPolynomial::new(coeffs.iter().map(|&(n, d)| rat(n, d)).collect()),
    )
}

#[test]
fn norms_in_the_real_quadratic_field() {
    // F = Q(sqrt(13)); N((3 + sqrt(13))/2) = (9 - 13)/4 = -1.
    let f = NumberField::new(p("x^2 - 13")).unwrap();
    let u = elem(&f, &[(3, 2), (1, 2)]);
    assert_eq!(u.norm(), rat(-1, 1));
    // N(-2 - 2 sqrt(13)) = 4 - 4*13 = -48.
    let a = elem(&f, &[(-2, 1), (-2, 1)]);
    assert_eq!(a.norm(), rat(-48, 1));
    assert_eq!(a.trace(), rat(-4, 1));
}

#[test]
fn norm_in_the_trace_field_presentation() {
    // F presented as Q[t]/(t^2 - t - 3) with t = (1 + sqrt(13))/2:
    // the same two elements, u = t + 1 and a = -4t.
    let f = NumberField::new(p("x^2 - x - 3")).unwrap();
    let u = elem(&f, &[(1, 1), (1, 1)]);
    assert_eq!(u.norm(), rat(-1, 1));
    let a = elem(&f, &[(0, 1), (-4, 1)]);
    assert_eq!(a.norm(), rat(-48, 1));
}

#[test]
fn field_element_arithmetic() {
    let k = NumberField::new(p("x^4 - x^3 - x^2 - x + 1")).unwrap();
    let g = FieldElement::generator(k.clone());
    // 1/gamma = -gamma^3 + gamma^2 + gamma + 1 from the defining relation.
    let inv = g.inv().unwrap();
    assert_eq!(
        inv.repr(),
        &RatPolynomial::new(vec![rat(1, 1), rat(1, 1), rat(1, 1), rat(-1, 1)])
    );
    assert!(g.mul(&inv).is_rational());
    assert_eq!(g.mul(&inv).repr(), &RatPolynomial::one());
    // gamma is a unit: norm 1 (constant term of the defining polynomial).
    assert_eq!(g.norm(), rat(1, 1));
}

#[test]
fn min_poly_of_the_trace_element() {
    let k = NumberField::new(p("x^4 - x^3 - x^2 - x + 1")).unwrap();
    let g = FieldElement::generator(k.clone());
    let t = g.add(&g.inv().unwrap());
    let mp = t.min_poly();
    assert_eq!(mp, p("y^2 - y - 3").to_rat());
    // Degree divides the parent degree; char poly is mp squared here.
    assert_eq!(t.char_poly(), mp.mul(&mp));
}

#[test]
fn min_poly_trivia() {
    let k = NumberField::new(p("x^4 - x^3 - x^2 - x + 1")).unwrap();
    let g = FieldElement::generator(k.clone());
    assert_eq!(g.min_poly(), k.defining().to_rat());
    let two = FieldElement::from_integer(k.clone(), 2);
    assert_eq!(two.min_poly(), p("x - 2").to_rat());
}

#[test]
fn power_basis_discriminants() {
    // The quartic's power-basis discriminant: (-1)^6 * N(S'(gamma)) = -507.
    // (-507 = -3 * 13^2; the 13^2 factor is forced by the quadratic
    // subfield Q(sqrt(13)).)
    assert_eq!(
        power_basis_discriminant(&p("x^4 - x^3 - x^2 - x + 1")),
        BigInt::from(-507)
    );
    assert_eq!(power_basis_discriminant(&p("x^2 - x - 1")), BigInt::from(5));
    assert_eq!(power_basis_discriminant(&p("x^2 - 13")), BigInt::from(52));
    assert_eq!(power_basis_discriminant(&p("x^2 - x - 3")), BigInt::from(13));
}

#[test]
fn embedding_signatures() {
    assert_eq!(embedding_signature(&p("x^4 - x^3 - x^2 - x + 1")), (2, 1));
    assert_eq!(embedding_signature(&p("x^2 - 13")), (2, 0));
    assert_eq!(embedding_signature(&p("x^4 + x^3 + x^2 + x + 1")), (0, 2));
    assert_eq!(embedding_signature(&p("x^3 - 5x + 1")), (3, 0));
    assert_eq!(embedding_signature(&p("x^3 - x - 1")), (1, 1));
}

#[test]
fn signature_consistency_on_random_irreducibles() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
    let mut tested = 0;
    while tested < 40 {
        let deg = rng.gen_range(2..=6);
        let mut coeffs: Vec<i64> = (0..deg).map(|_| rng.gen_range(-7..=7)).collect();
        coeffs.push(1);
        let q = IntPolynomial::from_i64(&coeffs);
        if !q.is_irreducible() {
            continue;
        }
        let (r1, r2) = embedding_signature(&q);
        assert_eq!(r1 + 2 * r2, q.deg());
        tested += 1;
    }
}

#[test]
fn field_kinds() {
    assert_eq!(field_kind(&p("x^2 - 13")), FieldKind::TotallyReal);
    assert_eq!(field_kind(&p("x^2 + 1")), FieldKind::Cm);
    assert_eq!(field_kind(&p("x^4 + x^3 + x^2 + x + 1")), FieldKind::Cm);
    assert_eq!(field_kind(&p("x^4 - x^3 - x^2 - x + 1")), FieldKind::Mixed);
    assert_eq!(field_kind(&p("x^3 - 5x + 1")), FieldKind::TotallyReal);
    // Minimal polynomial of zeta_5 + 2: not self-reciprocal, but the field is
    // Q(zeta_5), so complex conjugation is still a rational automorphism.
    assert_eq!(
        field_kind(&p("x^4 - 7x^3 + 19x^2 - 23x + 11")),
        FieldKind::Cm
    );
    // Totally imaginary but conjugation is not an automorphism: not CM.
    assert_eq!(
        field_kind(&p("x^6 + x^4 + x^3 + 2x^2 + 1")),
        FieldKind::Other
    );
}

#[test]
fn splitting_of_odd_primes_in_quadratic_fields() {
    let d = BigInt::from(13);
    let inert = quadratic_splitting(&d, 5).unwrap();
    assert_eq!(inert.kind, SplittingKind::Inert);
    assert_eq!(inert.primes, vec![(1, 2)]);
    let split = quadratic_splitting(&d, 3).unwrap();
    assert_eq!(split.kind, SplittingKind::Split);
    assert_eq!(split.primes, vec![(1, 1), (1, 1)]);
    let ram = quadratic_splitting(&d, 13).unwrap();
    assert_eq!(ram.kind, SplittingKind::Ramified);
    assert_eq!(ram.primes, vec![(2, 1)]);
    // Sum of e*f always 2.
    for s in [inert, split, ram] {
        let total: u32 = s.primes.iter().map(|(e, f)| e * f).sum();
        assert_eq!(total, 2);
    }
}

#[test]
fn squares_and_square_roots_in_quadratic_fields() {
    let f = NumberField::new(p("x^2 - x - 3")).unwrap();
    // a = t - 1 = (sqrt(13) - 1)/2 is not a square (it is negative in one
    // real embedding).
    let a = elem(&f, &[(-1, 1), (1, 1)]);
    assert!(!a.is_square().unwrap());
    // Its square is one, with a recoverable square root.
    let sq = a.mul(&a);
    assert!(sq.is_square().unwrap());
    let r = sq.square_root().unwrap().unwrap();
    assert_eq!(r.mul(&r), sq);
    assert!(r == a || r == a.neg());
    // -1 is never a square in a totally real field.
    let m1 = FieldElement::from_integer(f.clone(), -1);
    assert!(!m1.is_square().unwrap());
    // Rational squares are recognized.
    let nine = FieldElement::from_integer(f.clone(), 9);
    assert!(nine.is_square().unwrap());
}

#[test]
fn rational_sqrt_helper() {
    assert_eq!(rational_sqrt(&rat(9, 4)), Some(rat(3, 2)));
    assert_eq!(rational_sqrt(&rat(2, 1)), None);
    assert_eq!(rational_sqrt(&rat(-1, 1)), None);
    assert_eq!(rational_sqrt(&rat(0, 1)), Some(rat(0, 1)));
}

#[test]
fn norm_is_multiplicative() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(41);
    for defining in ["x^2 - 13", "x^4 - x^3 - x^2 - x + 1"] {
        let f = NumberField::new(p(defining)).unwrap();
        for _ in 0..100 {
            let x = FieldElement::new(
                f.clone(),
                RatPolynomial::new(
                    (0..f.degree()).map(|_| rat(rng.gen_range(-5..=5), 1)).collect(),
                ),
            );
            let y = FieldElement::new(
                f.clone(),
                RatPolynomial::new(
                    (0..f.degree()).map(|_| rat(rng.gen_range(-5..=5), 1)).collect(),
                ),
            );
            assert_eq!(x.mul(&y).norm(), x.norm() * y.norm());
            assert_eq!(x.add(&y).trace(), x.trace() + y.trace());
        }
    }
}

#[test]
fn prime_ideal_test_on_the_salem_order() {
    let k = NumberField::new(p("x^4 - x^3 - x^2 - x + 1")).unwrap();
    let order = PowerOrder::new(k.clone());
    assert!(is_prime_ideal_p_o(&order, 5).unwrap());
    assert!(defining_irreducible_mod_p(k.defining(), 5));
    // 3 splits differently: x^4 - x^3 - x^2 - x + 1 mod 3 factors iff the
    // ideal is not prime; the two oracles must agree either way.
    assert_eq!(
        is_prime_ideal_p_o(&order, 3).unwrap(),
        defining_irreducible_mod_p(k.defining(), 3)
    );
}

#[test]
fn prime_ideal_cross_oracle_on_random_fields() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
    let primes = [3u64, 5, 7];
    let mut tested = 0;
    while tested < 20 {
        let deg = rng.gen_range(2..=3);
        let mut coeffs: Vec<i64> = (0..deg).map(|_| rng.gen_range(-4..=4)).collect();
        coeffs.push(1);
        let q = IntPolynomial::from_i64(&coeffs);
        if !q.is_irreducible() {
            continue;
        }
        let disc = power_basis_discriminant(&q);
        // The equivalence between "pO prime" and "defining irreducible mod p"
        // needs the order to be maximal at p; restrict to squarefree
        // discriminants not divisible by p.
        if !matches!(adt_core::exact::is_squarefree_integer(&disc), Ok(true)) {
            continue;
        }
        let pr = primes[rng.gen_range(0..primes.len())];
        if (disc.clone() % BigInt::from(pr)) == BigInt::from(0) {
            continue;
        }
        let field = NumberField::new(q.clone()).unwrap();
        let order = PowerOrder::new(field);
        assert_eq!(
            is_prime_ideal_p_o(&order, pr).unwrap(),
            defining_irreducible_mod_p(&q, pr),
            "disagreement for {q} at p = {pr}"
        );
        tested += 1;
    }
}

#[test]
fn power_order_flags_non_maximal_candidates() {
    // disc(x^2 - 13) = 52 = 4 * 13 is not squarefree: maximality is not
    // certified by the squarefree criterion.
    let f = NumberField::new(p("x^2 - 13")).unwrap();
    let order = PowerOrder::new(f);
    assert!(order.maybe_non_maximal);
    // disc(x^2 - x - 3) = 13 is squarefree: certified maximal.
    let f2 = NumberField::new(p("x^2 - x - 3")).unwrap();
    assert!(!PowerOrder::new(f2).maybe_non_maximal);
}

#[test]
fn field_construction_rejections() {
    assert!(NumberField::new(p("x^2 - 1")).is_err()); // reducible
    assert!(NumberField::new(p("2x^2 - 1")).is_err()); // not monic
    assert!(NumberField::new(p("x^9 - x - 1")).is_err()); // over the degree cap
}
