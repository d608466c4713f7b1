//! Brute-force oracles, kept independent of the library's canonical forms.

use psdiag::order::{canonicalize_class, class_leq, cycle_equiv, cycle_leq};
use psdiag::verify::exhaustive_poset;
use psdiag::Permutation;

/// `σ ~c τ` element-wise: on every cycle support of `σ`, `τ` acts like `σ`
/// or like `σ⁻¹`, and the two permutations have the same supports.
fn equiv_oracle(sigma: &Permutation, tau: &Permutation) -> bool {
    let n = sigma.degree();
    let inv = sigma.inverse();
    let mut seen = vec![false; n + 1];
    for start in 1..=n {
        if seen[start] {
            continue;
        }
        let mut orbit = vec![];
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            orbit.push(i);
            i = sigma.image(i);
        }
        let forward = orbit.iter().all(|&e| tau.image(e) == sigma.image(e));
        let backward = orbit.iter().all(|&e| tau.image(e) == inv.image(e));
        if !forward && !backward {
            return false;
        }
    }
    true
}

/// `τ ≤_c σ` element-wise: `σ` agrees with `τ` wherever `τ` moves a point.
fn leq_oracle(tau: &Permutation, sigma: &Permutation) -> bool {
    (1..=tau.degree()).all(|i| tau.image(i) == i || sigma.image(i) == tau.image(i))
}

fn class_count_oracle(n: usize) -> usize {
    let all: Vec<_> = Permutation::all(n).collect();
    // count permutations that are the first of their class in enumeration order
    all.iter()
        .enumerate()
        .filter(|(i, p)| all[..*i].iter().all(|q| !equiv_oracle(p, q)))
        .count()
}

#[test]
fn class_counts_match_oracle() {
    let frozen = [(1, 1), (2, 2), (3, 5), (4, 17), (5, 73)];
    for (n, count) in frozen {
        assert_eq!(class_count_oracle(n), count, "oracle at n={n}");
        assert_eq!(
            exhaustive_poset(n).unwrap().class_count,
            count,
            "library at n={n}"
        );
    }
    assert_eq!(exhaustive_poset(6).unwrap().class_count, 388);
}

#[test]
fn relations_match_elementwise_oracles() {
    for n in 0..=5 {
        let all: Vec<_> = Permutation::all(n).collect();
        for s in &all {
            for t in &all {
                assert_eq!(cycle_leq(t, s).unwrap(), leq_oracle(t, s), "{t:?} {s:?}");
                assert_eq!(
                    cycle_equiv(s, t).unwrap(),
                    equiv_oracle(s, t),
                    "{s:?} {t:?}"
                );
                assert_eq!(
                    canonicalize_class(s) == canonicalize_class(t),
                    equiv_oracle(s, t)
                );
            }
        }
    }
}

#[test]
fn class_order_matches_member_brute_force() {
    // [τ] ≤ [σ] iff some member pair is ≤_c, members found by scanning S_n
    let n = 4;
    let all: Vec<_> = Permutation::all(n).collect();
    for s in &all {
        for t in &all {
            let brute = all.iter().filter(|a| equiv_oracle(a, t)).any(|a| {
                all.iter()
                    .filter(|b| equiv_oracle(b, s))
                    .any(|b| leq_oracle(a, b))
            });
            let got = class_leq(t, s).unwrap();
            assert_eq!(got.is_some(), brute);
            if let Some(w) = got {
                assert!(leq_oracle(&w.lower, &w.upper));
                assert!(equiv_oracle(&w.lower, t) && equiv_oracle(&w.upper, s));
            }
        }
    }
}

#[test]
fn hasse_heights_small() {
    // n = 3: identity below everything, nothing else comparable
    let r = exhaustive_poset(3).unwrap();
    let id = r
        .classes
        .iter()
        .position(|c| c.to_permutation().is_identity())
        .unwrap();
    for &(a, b) in &r.relation {
        assert!(a == b || a == id);
    }
}
