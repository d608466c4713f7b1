use proptest::prelude::*;

use psdiag::construct::{
    epsilon_gram, random_gram, CounterexampleSpec, Field, GeneratorSpec, Kind,
};
use psdiag::matrix::{
    certify, generalized_diagonal, CertifiedMatrix, ComplexMatrix, DEFAULT_TOL, LOG_SLACK,
};
use psdiag::order::{
    bruhat_leq, canonicalize_class, class_members, classify, cycle_equiv, cycle_leq,
};
use psdiag::{Cycle, Permutation, Relation, Setting};

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(&v).unwrap())
}

fn pair(max_n: usize) -> impl Strategy<Value = (Permutation, Permutation)> {
    (0..=max_n).prop_flat_map(|n| (permutation(n), permutation(n)))
}

fn gram(n: usize, seed: u64, field: Field) -> ComplexMatrix {
    random_gram(&GeneratorSpec {
        n,
        seed,
        field,
        kind: Kind::Psd,
    })
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn decomposition_round_trips(p in (0usize..=9).prop_flat_map(permutation)) {
        prop_assert_eq!(p.decompose().recompose(), p.clone());
        prop_assert_eq!(Permutation::parse_cycles(&p.to_string(), p.degree()).unwrap(), p.clone());
        prop_assert_eq!(p.inverse().inverse(), p.clone());
    }

    #[test]
    fn canonicalization_is_idempotent(p in (0usize..=9).prop_flat_map(permutation)) {
        let rep = canonicalize_class(&p);
        prop_assert_eq!(canonicalize_class(&rep.to_permutation()), rep.clone());
        let members = class_members(&rep);
        prop_assert_eq!(members.len(), rep.class_size());
        prop_assert!(members.contains(&p));
        for m in &members {
            prop_assert!(cycle_equiv(m, &p).unwrap());
        }
    }

    #[test]
    fn cycle_inclusion_implies_bruhat((t, s) in pair(8)) {
        if cycle_leq(&t, &s).unwrap() {
            prop_assert!(bruhat_leq(&t, &s).unwrap());
        }
    }

    #[test]
    fn classify_is_antisymmetric((s, t) in pair(7)) {
        for setting in Setting::ALL {
            let st = classify(&s, &t, setting).unwrap().relation;
            let ts = classify(&t, &s, setting).unwrap().relation;
            prop_assert_eq!(st, ts.swapped());
        }
    }

    #[test]
    fn gram_matrices_satisfy_inequalities(n in 0usize..=8, seed: u64, complex: bool) {
        let field = if complex { Field::Complex } else { Field::Real };
        let x = CertifiedMatrix::with_default_tol(gram(n, seed, field));
        prop_assert!(x.certificate().is_psd());
        prop_assert!(x.hadamard_pair_check().unwrap());
        for p in Permutation::all(n.min(5)).take(40) {
            let p = Permutation::from_images(
                &p.images().chain(p.degree() + 1..=n).collect::<Vec<_>>()
            ).unwrap();
            for c in p.cycles() {
                prop_assert!(x.cycle_factor_check(&c).unwrap());
            }
        }
    }

    #[test]
    fn class_order_bounds_moduli((s, t) in pair(6), seed: u64) {
        let x = gram(s.degree(), seed, Field::Complex);
        let ds = generalized_diagonal(&x, &s).unwrap();
        let dt = generalized_diagonal(&x, &t).unwrap();
        match classify(&s, &t, Setting::ComplexAbs).unwrap().relation {
            Relation::AlwaysEqual => prop_assert!(ds.abs_eq(&dt, LOG_SLACK)),
            Relation::SigmaLeqTau => prop_assert!(ds.abs_leq(&dt, LOG_SLACK)),
            Relation::TauLeqSigma => prop_assert!(dt.abs_leq(&ds, LOG_SLACK)),
            _ => {}
        }
    }

    #[test]
    fn log_value_matches_direct_product(p in (1usize..=7).prop_flat_map(permutation), seed: u64) {
        let x = gram(p.degree(), seed, Field::Complex);
        let d = generalized_diagonal(&x, &p).unwrap();
        let direct = x.diagonal_product(&p).unwrap();
        prop_assert!((d.to_complex() - direct).norm() <= 1e-10 * direct.norm().max(1e-300));
    }

    #[test]
    fn gram_of_any_factor_certifies(n in 0usize..=6, entries in prop::collection::vec(-10.0f64..10.0, 72)) {
        // B·B* for an arbitrary finite complex B
        let b: Vec<num_complex::Complex64> = (0..n * n)
            .map(|k| num_complex::Complex64::new(entries[2 * k], entries[2 * k + 1]))
            .collect();
        let mut x = vec![num_complex::Complex64::new(0.0, 0.0); n * n];
        for i in 0..n {
            for j in 0..n {
                x[i * n + j] = (0..n).map(|k| b[i * n + k] * b[j * n + k].conj()).sum();
            }
        }
        let c = certify(&ComplexMatrix::new(n, x).unwrap(), DEFAULT_TOL);
        prop_assert!(c.is_psd(), "{:?}", c);
    }

    #[test]
    fn epsilon_gram_shape(n in 2usize..=8, p in 1usize..=8, q in 1usize..=8, eps in 1e-8f64..0.99) {
        prop_assume!(p <= n && q <= n && p != q);
        let a = epsilon_gram(&CounterexampleSpec::new(n, p, q, eps).unwrap());
        prop_assert_eq!(a.get(p - 1, q - 1).re, eps);
        for i in 0..n {
            for j in 0..n {
                if (i, j) != (p - 1, q - 1) && (i, j) != (q - 1, p - 1) {
                    prop_assert!(a.get(i, j).re > 1.0);
                }
            }
        }
    }
}

#[test]
fn single_cycle_inequality_on_named_cycle() {
    let c = Cycle::new(vec![1, 3, 5]).unwrap();
    for seed in 0..1000 {
        let x = CertifiedMatrix::with_default_tol(gram(5, seed, Field::Complex));
        assert!(x.cycle_factor_check(&c).unwrap());
        assert!(x.hadamard_pair_check().unwrap());
    }
}
