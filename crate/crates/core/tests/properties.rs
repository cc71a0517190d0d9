mod common;

use std::sync::OnceLock;

use common::alg;
use lieact::catalog::{parse_expression, standard_catalog};
use lieact::classify::random_derivations;
use lieact::exactla::{format_rational, parse_rational, q, qf, q_linear_rank, MatrixQ, Rational, SpanValue};
use lieact::liecore::LieAlgebra;
use lieact::spectral::SpectralConfig;
use proptest::prelude::*;

fn catalog() -> &'static [LieAlgebra] {
    static CATALOG: OnceLock<Vec<LieAlgebra>> = OnceLock::new();
    CATALOG.get_or_init(|| standard_catalog().into_iter().filter(|s| !s.contains(",C")).map(alg).collect())
}

fn small_matrix(max_dim: usize) -> impl Strategy<Value = MatrixQ> {
    (1..=max_dim).prop_flat_map(|n| {
        prop::collection::vec(-4i64..=4, n * n)
            .prop_map(move |v| MatrixQ::from_flat(n, n, v.into_iter().map(q).collect()))
    })
}

fn vector(n: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec((-5i64..=5, 1i64..=3), n).prop_map(|v| v.into_iter().map(|(a, b)| qf(a, b)).collect())
}

fn algebra_with_vectors(k: usize) -> impl Strategy<Value = (usize, Vec<Vec<Rational>>)> {
    (0..catalog().len()).prop_flat_map(move |i| {
        let n = catalog()[i].dim();
        (Just(i), prop::collection::vec(vector(n), k))
    })
}

fn dot(u: &[Rational], v: &[Rational]) -> Rational {
    u.iter().zip(v).map(|(a, b)| a * b).sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cayley_hamilton(a in small_matrix(5)) {
        let p = a.charpoly().unwrap();
        prop_assert!(a.eval_poly(&p).is_zero());
    }

    #[test]
    fn charpoly_is_similarity_invariant(a in small_matrix(4), seed in small_matrix(4)) {
        prop_assume!(a.rows() == seed.rows());
        let p = seed.add(&MatrixQ::identity(a.rows()).scale(&q(11)));
        let inv = p.inverse();
        prop_assume!(inv.is_some());
        let conj = p.mul(&a).mul(&inv.unwrap());
        prop_assert_eq!(conj.charpoly().unwrap(), a.charpoly().unwrap());
    }

    #[test]
    fn jacobi_on_random_vectors((i, vs) in algebra_with_vectors(3)) {
        let l = &catalog()[i];
        let (x, y, z) = (&vs[0], &vs[1], &vs[2]);
        let a = l.bracket(x, &l.bracket(y, z));
        let b = l.bracket(y, &l.bracket(z, x));
        let c = l.bracket(z, &l.bracket(x, y));
        prop_assert!(a.iter().zip(&b).zip(&c).all(|((a, b), c)| (a + b + c) == q(0)));
    }

    #[test]
    fn adjoint_maps_are_derivations((i, vs) in algebra_with_vectors(1)) {
        let l = &catalog()[i];
        prop_assert!(l.is_derivation(&l.ad_matrix(&vs[0])));
    }

    #[test]
    fn killing_form_is_invariant((i, vs) in algebra_with_vectors(3)) {
        let l = &catalog()[i];
        let k = l.killing_form();
        let (x, y, z) = (&vs[0], &vs[1], &vs[2]);
        let lhs = dot(&l.bracket(x, y), &k.mul_vec(z));
        let rhs = dot(x, &k.mul_vec(&l.bracket(y, z)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn sampled_derivations_are_derivations(i in 0..catalog().len(), seed in 0u64..1000) {
        let l = &catalog()[i];
        let cfg = SpectralConfig { seed, ..SpectralConfig::default() };
        for d in random_derivations(l, &cfg, 2) {
            prop_assert!(l.is_derivation(&d));
        }
    }

    #[test]
    fn direct_sum_invariants(i in 0..catalog().len(), j in 0..catalog().len()) {
        let (a, b) = (&catalog()[i], &catalog()[j]);
        let s = a.direct_sum(b);
        prop_assert_eq!(s.dim(), a.dim() + b.dim());
        prop_assert_eq!(s.center().dim(), a.center().dim() + b.center().dim());
        let both = |x: Option<usize>, y: Option<usize>| Some(x?.max(y?));
        prop_assert_eq!(s.derived_length(), both(a.derived_length(), b.derived_length()));
        prop_assert_eq!(s.nilpotency_class(), both(a.nilpotency_class(), b.nilpotency_class()));
    }

    #[test]
    fn rational_text_round_trip(n in -10_000i64..10_000, d in 1i64..500) {
        let r = qf(n, d);
        prop_assert_eq!(parse_rational(&format_rational(&r)), Some(r));
    }

    #[test]
    fn rational_values_span_rank_one(vals in prop::collection::vec((-50i64..50, 1i64..20), 1..6)) {
        let values: Vec<SpanValue> = vals.iter().map(|&(a, b)| SpanValue::Rational(qf(a, b))).collect();
        let expected = usize::from(vals.iter().any(|&(a, _)| a != 0));
        prop_assert_eq!(q_linear_rank(&values, 128, 1_000_000).unwrap().rank, expected);
    }

    #[test]
    fn expression_print_parse(atoms in prop::collection::vec(prop::sample::select(vec![
        "st(2,R)", "st(3,C)", "nt(4,R)", "sl(2,R)", "sl(3,C)", "abelian(1)", "abelian(3)", "strn(2)",
    ]), 1..5)) {
        let e = parse_expression(&atoms.join(" x ")).unwrap();
        let printed = e.to_string();
        prop_assert_eq!(parse_expression(&printed).unwrap(), e);
    }
}
