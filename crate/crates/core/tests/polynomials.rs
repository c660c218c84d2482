use octoek::poly::{parse_polynomial_json, polynomial_to_json};
use octoek::{ImaginaryUnit, OctPolynomial, Octonion};
use num_complex::Complex64;
use proptest::prelude::*;

fn octonion() -> impl Strategy<Value = Octonion> {
    prop::array::uniform8(-2.0f64..2.0).prop_map(|c| Octonion::new(c).unwrap())
}

fn poly(max_deg: usize) -> impl Strategy<Value = OctPolynomial> {
    prop::collection::vec(octonion(), 1..=max_deg + 1).prop_map(OctPolynomial::new)
}

fn small_point() -> impl Strategy<Value = Octonion> {
    prop::array::uniform8(-0.8f64..0.8).prop_map(|c| Octonion::new(c).unwrap())
}

fn coeff_sum(a: &OctPolynomial, b: &OctPolynomial) -> OctPolynomial {
    let n = a.coeffs().len().max(b.coeffs().len());
    let get = |p: &OctPolynomial, k: usize| p.coeffs().get(k).copied().unwrap_or(Octonion::ZERO);
    OctPolynomial::new((0..n).map(|k| get(a, k) + get(b, k)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn multiplying_by_one_minus_q(p in poly(8), q in small_point()) {
        let lhs = p.star(&OctPolynomial::one_minus_q()).eval(&q);
        let rhs = (Octonion::ONE - q) * p.eval(&q);
        let scale = p.modulus_scale(q.norm()) * (1.0 + q.norm());
        prop_assert!((lhs - rhs).norm() <= 1e-10 * scale);
        prop_assert_eq!(p.star(&OctPolynomial::one_minus_q()), p.one_minus_q_transform());
    }

    #[test]
    fn constructed_zeros_carry_over(tail in prop::collection::vec(octonion(), 1..6), q0 in small_point()) {
        // a_0 chosen so that p(q0) = 0
        let mut coeffs = vec![Octonion::ZERO];
        coeffs.extend(tail);
        let shifted = OctPolynomial::new(coeffs.clone()).eval(&q0);
        coeffs[0] = -shifted;
        let p = OctPolynomial::new(coeffs);
        let scale = p.modulus_scale(q0.norm());
        prop_assert!(p.eval(&q0).norm() <= 1e-13 * scale);
        let f = p.one_minus_q_transform();
        prop_assert!(f.eval(&q0).norm() <= 1e-12 * scale * 2.0);

        // away from q = 1, f(q) = 0 forces p(q) = 0
        let q = q0 + Octonion::basis(2) * 0.3;
        let (fv, pv) = (f.eval(&q), p.eval(&q));
        prop_assert!((fv.norm() - (Octonion::ONE - q).norm() * pv.norm()).abs() <= 1e-12 * scale * 4.0);
    }

    #[test]
    fn degrees_add(p in poly(5), g in poly(5)) {
        prop_assume!(!p.is_zero() && !g.is_zero());
        prop_assert_eq!(p.star(&g).degree(), p.degree() + g.degree());
    }

    #[test]
    fn star_is_bilinear(p in poly(4), g in poly(4), h in poly(4), q in small_point()) {
        let lhs = coeff_sum(&p, &g).star(&h);
        let rhs = coeff_sum(&p.star(&h), &g.star(&h));
        for (x, y) in lhs.coeffs().iter().zip(rhs.coeffs()) {
            prop_assert!((*x - *y).norm() <= 1e-13 * 64.0);
        }
        let lhs = h.star(&coeff_sum(&p, &g)).eval(&q);
        let rhs = h.star(&p).eval(&q) + h.star(&g).eval(&q);
        prop_assert!((lhs - rhs).norm() <= 1e-12 * 64.0);
    }

    #[test]
    fn real_points_are_multiplicative(p in poly(4), g in poly(4), t in -1.5f64..1.5) {
        let q = Octonion::real(t);
        let lhs = p.star(&g).eval(&q);
        let rhs = p.eval(&q) * g.eval(&q);
        let scale = p.modulus_scale(t.abs()) * g.modulus_scale(t.abs());
        prop_assert!((lhs - rhs).norm() <= 1e-12 * scale.max(1.0));
    }

    #[test]
    fn slice_restriction_commutes_with_evaluation(
        parts in prop::collection::vec((-2.0f64..2.0, -2.0f64..2.0), 1..8),
        seed in any::<u64>(),
        x in -1.5f64..1.5,
        y in -1.5f64..1.5,
    ) {
        let unit = ImaginaryUnit::random(seed);
        let p = OctPolynomial::new(parts.iter().map(|&(a, b)| unit.point(a, b)).collect());
        let restricted = p.restrict_to_slice(&unit).unwrap();
        let via_slice = restricted.embed(restricted.eval(Complex64::new(x, y)));
        let direct = p.eval(&unit.point(x, y));
        let scale = p.modulus_scale(x.hypot(y));
        prop_assert!((via_slice - direct).norm() <= 1e-12 * scale.max(1.0));
    }

    #[test]
    fn reversal_is_an_involution(p in poly(6)) {
        prop_assume!(!p.coeffs()[0].is_zero());
        prop_assert_eq!(p.reverse().reverse(), p);
    }

    #[test]
    fn argument_scaling(p in poly(5), q in small_point(), a in 0.25f64..4.0) {
        let scaled = p.scale_arg(a).unwrap();
        let lhs = scaled.eval(&(q * a));
        let rhs = p.eval(&q);
        prop_assert!((lhs - rhs).norm() <= 1e-12 * p.modulus_scale(q.norm()).max(1.0));
    }

    #[test]
    fn json_round_trip(p in poly(6)) {
        prop_assert_eq!(parse_polynomial_json(&polynomial_to_json(&p)).unwrap(), p);
    }
}

#[test]
fn malformed_documents() {
    assert!(parse_polynomial_json("{}").is_err());
    assert!(parse_polynomial_json(r#"{"real_coeffs": []}"#).is_err());
    assert!(parse_polynomial_json(r#"{"coeffs": [[1,2,3]]}"#).is_err());
    assert!(parse_polynomial_json(r#"{"real_coeffs": [1], "coeffs": [[1,0,0,0,0,0,0,0]]}"#).is_err());
    assert!(parse_polynomial_json("[1, 2]").is_err());
}
