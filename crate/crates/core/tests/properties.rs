use bicomplex_cas::classify::{polyholo_signature, signature_by_iteration};
use bicomplex_cas::decompose::{almansi_bicomplex, expand_conjugate_basis};
use bicomplex_cas::expr::{self, ParseOptions};
use bicomplex_cas::scalar::rational;
use bicomplex_cas::{Bicomplex, BicomplexFunction, Conjugation, Error, GaussianRational, Operator, Poly4, Wirtinger};
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = bicomplex_cas::Rational> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| rational(n, d))
}

fn gaussian() -> impl Strategy<Value = GaussianRational> {
    (small_rational(), small_rational()).prop_map(|(re, im)| GaussianRational::new(re, im))
}

fn bicomplex() -> impl Strategy<Value = Bicomplex> {
    (gaussian(), gaussian()).prop_map(|(a, b)| Bicomplex::new(a, b))
}

fn poly() -> impl Strategy<Value = Poly4> {
    prop::collection::vec(([0u32..3, 0u32..3, 0u32..3, 0u32..3], gaussian()), 0..5)
        .prop_map(Poly4::from_terms)
}

fn function() -> impl Strategy<Value = BicomplexFunction> {
    (poly(), poly()).prop_map(|(p, m)| BicomplexFunction::new(p, m))
}

fn symbol() -> impl Strategy<Value = Poly4> {
    prop::collection::vec(([0u32..2, 0u32..2, 0u32..2, 0u32..2], gaussian()), 0..4).prop_map(Poly4::from_terms)
}

fn operator() -> impl Strategy<Value = Operator> {
    (symbol(), symbol()).prop_map(|(p, m)| Operator::new(p, m))
}

fn conjugation() -> impl Strategy<Value = Conjugation> {
    prop::sample::select(Conjugation::ALL.to_vec())
}

fn wirtinger() -> impl Strategy<Value = Wirtinger> {
    prop::sample::select(Wirtinger::ALL.to_vec())
}

/// Expression token streams that stay valid whatever whitespace separates them.
fn tokens() -> impl Strategy<Value = Vec<String>> {
    let atom = prop::sample::select(vec![
        "Z", "star ( Z )", "dag ( Z )", "til ( Z )", "rehyp ( Z )", "rec ( Z )", "i", "j", "k", "e+", "e-", "3",
        "1 / 2",
    ])
    .prop_map(|s| s.split(' ').map(str::to_string).collect::<Vec<_>>());
    atom.prop_recursive(4, 24, 3, |inner| {
        prop_oneof![
            (inner.clone(), prop::sample::select(vec!["+", "-", "*"]), inner.clone()).prop_map(|(a, op, b)| {
                let mut v = vec!["(".to_string()];
                v.extend(a);
                v.push(op.to_string());
                v.extend(b);
                v.push(")".to_string());
                v
            }),
            (inner, 0u32..4).prop_map(|(a, p)| {
                let mut v = vec!["(".to_string()];
                v.extend(a);
                v.extend([")".to_string(), "^".to_string(), p.to_string()]);
                v
            }),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn format_parse_roundtrip(f in function()) {
        prop_assert_eq!(expr::parse_with(&expr::format(&f), ParseOptions::raw()).unwrap(), f);
    }

    #[test]
    fn json_roundtrips(f in function(), t in operator(), z in bicomplex()) {
        prop_assert_eq!(expr::parse_function_json(&expr::function_to_json(&f).to_string()).unwrap(), f);
        prop_assert_eq!(expr::parse_operator_json(&expr::operator_to_json(&t).to_string()).unwrap(), t);
        prop_assert_eq!(expr::parse_bicomplex_json(&expr::bicomplex_to_json(&z).to_string()).unwrap(), z);
    }

    #[test]
    fn whitespace_independent(toks in tokens(), seps in prop::collection::vec(prop::sample::select(vec!["", " ", "  ", "\t", "\n "]), 64)) {
        let tight = toks.concat();
        let mut loose = String::new();
        for (t, s) in toks.iter().zip(seps.iter().cycle()) {
            loose.push_str(s);
            loose.push_str(t);
        }
        match (expr::parse(&tight), expr::parse(&loose)) {
            (Ok(a), Ok(b)) => prop_assert_eq!(a, b),
            (Err(Error::Parse { message: a, .. }), Err(Error::Parse { message: b, .. })) => prop_assert_eq!(a, b),
            (a, b) => prop_assert!(false, "{tight:?} -> {a:?}, {loose:?} -> {b:?}"),
        }
    }

    #[test]
    fn ring_axioms(f in function(), g in function(), h in function()) {
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert!((&f - &f).is_zero());
        prop_assert_eq!(&f * &BicomplexFunction::one(), f);
    }

    #[test]
    fn scalar_ring_and_conjugations(z in bicomplex(), w in bicomplex(), c in conjugation(), d in conjugation()) {
        prop_assert_eq!((&z * &w).conjugate(c), &z.conjugate(c) * &w.conjugate(c));
        prop_assert_eq!((&z + &w).conjugate(c), &z.conjugate(c) + &w.conjugate(c));
        prop_assert_eq!(z.conjugate(c).conjugate(c), z.clone());
        let composed = z.conjugate(c).conjugate(d);
        match c.then(d) {
            Some(e) => prop_assert_eq!(composed, z.conjugate(e)),
            None => prop_assert_eq!(composed, z),
        }
    }

    #[test]
    fn evaluation_is_a_homomorphism(f in function(), g in function(), z in bicomplex()) {
        prop_assert_eq!((&f * &g).evaluate(&z), &f.evaluate(&z) * &g.evaluate(&z));
        prop_assert_eq!((&f + &g).evaluate(&z), &f.evaluate(&z) + &g.evaluate(&z));
    }

    #[test]
    fn pointwise_conjugation(f in function(), z in bicomplex(), c in conjugation()) {
        // f^c(Z) = conj_c(f(Z)) for every point
        prop_assert_eq!(f.conjugate(c).evaluate(&z), f.evaluate(&z).conjugate(c));
    }

    #[test]
    fn wirtinger_leibniz(f in function(), g in function(), w in wirtinger()) {
        let d = Operator::wirtinger(w);
        let lhs = d.apply(&(&f * &g));
        let rhs = &(&d.apply(&f) * &g) + &(&f * &d.apply(&g));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn wirtingers_commute(f in function(), v in wirtinger(), w in wirtinger()) {
        let (a, b) = (Operator::wirtinger(v), Operator::wirtinger(w));
        prop_assert_eq!(a.apply(&b.apply(&f)), b.apply(&a.apply(&f)));
        prop_assert_eq!(a.compose(&b).apply(&f), a.apply(&b.apply(&f)));
    }

    #[test]
    fn reduction_lemma(f in function(), c in conjugation(), w in wirtinger()) {
        // Conjugating an operator and its argument commutes with application.
        let d = Operator::wirtinger(w);
        prop_assert_eq!(d.conjugate(c).apply(&f.conjugate(c)), d.apply(&f).conjugate(c));
    }

    #[test]
    fn operator_algebra(s in operator(), t in operator(), f in function()) {
        prop_assert_eq!(s.add(&t).apply(&f), &s.apply(&f) + &t.apply(&f));
        prop_assert_eq!(s.compose(&t), t.compose(&s));
    }

    #[test]
    fn seventh_laplacian_is_sum(f in function()) {
        let lhs = Operator::laplacian(1).unwrap().add(&Operator::laplacian(6).unwrap());
        prop_assert_eq!(lhs.apply(&f), Operator::laplacian(7).unwrap().apply(&f));
    }

    #[test]
    fn decompositions_reconstruct(f in function()) {
        prop_assert_eq!(expand_conjugate_basis(&f).reconstruct(), f.clone());
        prop_assert_eq!(almansi_bicomplex(&f).reconstruct(), f);
    }

    #[test]
    fn signature_agrees_with_iteration(f in function()) {
        prop_assert_eq!(polyholo_signature(&f), signature_by_iteration(&f));
    }

    #[test]
    fn real_parts_are_projections(f in function()) {
        let (hyp, re) = f.real_parts();
        prop_assert!(hyp.is_hyperbolic_valued());
        prop_assert!(re.is_real_valued());
        prop_assert_eq!(hyp.re_c(), re.clone());
        prop_assert_eq!(hyp.re_hyp(), hyp);
        prop_assert_eq!(re.re_c(), re);
    }
}
