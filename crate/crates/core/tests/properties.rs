use fe_umbral::exact::rational::{factorial_q, int, pow, rat, Rational};
use fe_umbral::exact::{Poly, PolySeries};
use fe_umbral::families::{family_table, FamilyKind};
use fe_umbral::numbers::{delta_zero, stirling2};
use fe_umbral::operators::{f_op, forward_diff, tilde_diff, ShiftCombo};
use fe_umbral::representation::{reconstruct, represent, FormulaVariant};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=12).prop_map(|(n, d)| rat(n, d))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    small_rational().prop_filter("nonzero", |q| !q.is_zero())
}

/// Admissible Frobenius parameter.
fn u_param() -> impl Strategy<Value = Rational> {
    small_rational().prop_filter("u != 1", |q| !q.is_one())
}

fn poly(max_len: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(small_rational(), 0..=max_len).prop_map(Poly::from_coeffs)
}

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, failure_persistence: None, ..ProptestConfig::default() }
}

/// Set partitions of `{1..n}` into `k` blocks, by enumerating restricted
/// growth strings.
fn count_partitions(n: usize, k: usize) -> u64 {
    fn go(pos: usize, n: usize, blocks: usize, k: usize) -> u64 {
        if pos == n {
            return u64::from(blocks == k);
        }
        let reuse: u64 = (0..blocks).map(|_| go(pos + 1, n, blocks, k)).sum();
        reuse + go(pos + 1, n, blocks + 1, k)
    }
    go(0, n, 0, k)
}

#[test]
fn stirling_matches_partition_count() {
    for n in 0..=8 {
        for k in 0..=n {
            assert_eq!(stirling2(n, k), int(count_partitions(n, k) as i64), "S2({n},{k})");
        }
    }
}

proptest! {
    #![proptest_config(config(128))]

    #[test]
    fn ring_axioms(p in poly(6), q in poly(6), s in poly(6)) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &s, &p * &(&q * &s));
        prop_assert_eq!(&p * &(&q + &s), &(&p * &q) + &(&p * &s));
        prop_assert_eq!(&p - &p, Poly::zero());
        prop_assert_eq!(&p * &Poly::one(), p.clone());
    }

    #[test]
    fn evaluation_is_a_homomorphism(p in poly(6), q in poly(6), x in small_rational()) {
        prop_assert_eq!((&p * &q).evaluate(&x), p.evaluate(&x) * q.evaluate(&x));
        prop_assert_eq!((&p + &q).evaluate(&x), p.evaluate(&x) + q.evaluate(&x));
    }

    #[test]
    fn shifts_compose_and_commute_with_derivative(p in poly(7), a in small_rational(), b in small_rational()) {
        prop_assert_eq!(p.shift(&a).shift(&b), p.shift(&(&a + &b)));
        prop_assert_eq!(p.shift(&a).derivative(1), p.derivative(1).shift(&a));
        prop_assert_eq!(p.shift(&a).evaluate(&b), p.evaluate(&(&a + &b)));
    }

    #[test]
    fn canonical_form_has_nonzero_leading(p in poly(7)) {
        match p.degree() {
            None => prop_assert!(p.coeffs().is_empty()),
            Some(d) => {
                prop_assert_eq!(p.coeffs().len(), d + 1);
                prop_assert!(!p.leading().unwrap().is_zero());
            }
        }
    }

    #[test]
    fn series_inverse(c0 in nonzero_rational(), rest in prop::collection::vec(small_rational(), 5)) {
        let order = rest.len();
        let s = PolySeries::from_scalars(order, |k| if k == 0 { c0.clone() } else { rest[k - 1].clone() });
        let product = s.mul(&s.inverse().unwrap()).unwrap();
        prop_assert!(product.is_unit());
    }

    #[test]
    fn difference_operators_commute(p in poly(7), a in nonzero_rational(), k in 0usize..4, j in 0usize..4) {
        prop_assert_eq!(
            tilde_diff(&forward_diff(&p, &a, k), j),
            forward_diff(&tilde_diff(&p, j), &a, k)
        );
        let composed = ShiftCombo::forward_difference(&a, k).compose(&ShiftCombo::tilde_difference(j));
        prop_assert_eq!(composed.apply(&p), tilde_diff(&forward_diff(&p, &a, k), j));
    }

    #[test]
    fn f_op_lowers_degree(p in poly(8), lambda in small_rational()) {
        let d = f_op(&p, &lambda, 1);
        match p.degree() {
            None | Some(0) => prop_assert!(d.is_zero()),
            Some(n) => prop_assert_eq!(d.degree(), Some(n - 1)),
        }
    }
}

proptest! {
    #![proptest_config(config(24))]

    #[test]
    fn delta_zero_is_scaled_stirling(lambda in small_rational(), n in 0usize..=10, k in 0usize..=10) {
        prop_assert_eq!(delta_zero(n, k, &lambda), pow(&lambda, n) * factorial_q(k) * stirling2(n, k));
    }

    #[test]
    fn degenerate_family_specialisations(lambda in nonzero_rational(), u in u_param(), r in 0usize..4) {
        let n = 6;
        let dfe = |lambda: Rational, u: Rational| {
            family_table(&FamilyKind::DegenerateFrobeniusEuler { lambda, u, r }, n).unwrap()
        };
        // lambda = 0 is the classical family
        prop_assert_eq!(
            dfe(Rational::zero(), u.clone()),
            family_table(&FamilyKind::FrobeniusEuler { u: u.clone(), r }, n).unwrap()
        );
        // u = -1 is the degenerate Euler family
        prop_assert_eq!(
            dfe(lambda.clone(), int(-1)),
            family_table(&FamilyKind::DegenerateEuler { lambda: lambda.clone(), r }, n).unwrap()
        );
        // appell-like in lambda: members are monic of exact degree
        for (k, h) in dfe(lambda, u).iter().enumerate() {
            prop_assert_eq!(h.degree(), Some(k));
            prop_assert!(h.leading().unwrap().is_one());
        }
    }

    #[test]
    fn sheffer_lowering(lambda in nonzero_rational(), u in u_param(), r in 1usize..4) {
        let t = family_table(&FamilyKind::DegenerateFrobeniusEuler { lambda: lambda.clone(), u, r }, 6).unwrap();
        for n in 1..t.len() {
            prop_assert_eq!(f_op(&t[n], &lambda, 1), t[n - 1].scale(&int(n as i64)));
        }
    }

    #[test]
    fn euler_difference_equation(r in 1usize..4) {
        // E^{(r)}_n(x+1) + E^{(r)}_n(x) = 2 E^{(r-1)}_n(x)
        let hi = family_table(&FamilyKind::Euler { r }, 8).unwrap();
        let lo = family_table(&FamilyKind::Euler { r: r - 1 }, 8).unwrap();
        for (h, l) in hi.iter().zip(&lo) {
            prop_assert_eq!(tilde_diff(h, 1), l.scale(&int(2)));
        }
    }

    #[test]
    fn representation_is_linear(
        p in poly(6),
        q in poly(6),
        alpha in small_rational(),
        lambda in nonzero_rational(),
        u in u_param(),
        r in 1usize..4,
    ) {
        let kind = FamilyKind::DegenerateFrobeniusEuler { lambda, u, r };
        let v = FormulaVariant::BinomialSum;
        let combo = &p.scale(&alpha) + &q;
        // coefficient vectors, encoded as polynomials so lengths need not match
        let coeffs = |p: &Poly| Poly::from_coeffs(represent(p, &kind, v).unwrap().coeffs);
        prop_assert_eq!(coeffs(&combo), &coeffs(&p).scale(&alpha) + &coeffs(&q));
        prop_assert_eq!(reconstruct(&represent(&combo, &kind, v).unwrap()).unwrap(), combo);
    }

    #[test]
    fn representation_is_triangular(n in 0usize..8, lambda in nonzero_rational(), u in u_param(), r in 0usize..4) {
        // x^n has length n + 1 with top coefficient 1, since every member is monic
        let kind = FamilyKind::DegenerateFrobeniusEuler { lambda, u, r };
        let e = represent(&Poly::monomial(Rational::one(), n), &kind, FormulaVariant::DeltaForm).unwrap();
        prop_assert_eq!(e.coeffs.len(), n + 1);
        prop_assert!(e.coeffs[n].is_one());
    }
}
