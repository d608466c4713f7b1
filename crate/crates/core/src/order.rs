//! Relations on `S_n` that govern generalized diagonals of PSD matrices.
//!
//! - cycle inclusion order: `τ ≤_c σ` iff every cycle of length ≥ 2 of `τ`
//!   is also a cycle of `σ`;
//! - cycle-reversal equivalence: `σ ~c τ` iff each cycle of one equals, or is
//!   the reverse of, a cycle of the other;
//! - the class order `[τ] ≤_[c] [σ]` on `~c`-classes;
//! - strong Bruhat order.
//!
//! [`classify`] combines them into the verdict for a pair of permutations
//! under one of three matrix settings.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::error::check_degree;
use crate::perm::{Cycle, Permutation};
use crate::Result;

/// `τ ≤_c σ`: `C_k(τ) ⊆ C_k(σ)` for all `k ≥ 2`.
pub fn cycle_leq(tau: &Permutation, sigma: &Permutation) -> Result<bool> {
    check_degree(tau.degree(), sigma.degree())?;
    Ok(tau.decompose().is_included_in(&sigma.decompose()))
}

/// `σ ~c τ`, checked cycle by cycle in both directions.
pub fn cycle_equiv(sigma: &Permutation, tau: &Permutation) -> Result<bool> {
    check_degree(sigma.degree(), tau.degree())?;
    let left: BTreeSet<Cycle> = sigma.cycles().into_iter().collect();
    let right: BTreeSet<Cycle> = tau.cycles().into_iter().collect();
    let covered = |from: &BTreeSet<Cycle>, to: &BTreeSet<Cycle>| {
        from.iter()
            .all(|c| to.contains(c) || to.contains(&c.inverse()))
    };
    Ok(covered(&left, &right) && covered(&right, &left))
}

/// Canonical representative of a `~c`-class.
///
/// Holds every cycle of the permutation (fixed points included); each cycle
/// of length ≥ 3 is replaced by the lexicographically smaller of itself and
/// its reverse, both in min-first rotation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EquivClassRep {
    degree: usize,
    cycles: BTreeSet<Cycle>,
}

impl EquivClassRep {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn cycles(&self) -> &BTreeSet<Cycle> {
        &self.cycles
    }

    /// Number of cycles of length ≥ 3, i.e. `log2` of the class size.
    pub fn flippable(&self) -> usize {
        self.cycles.iter().filter(|c| c.len() >= 3).count()
    }

    pub fn class_size(&self) -> usize {
        1 << self.flippable()
    }

    /// The representative as a permutation.
    pub fn to_permutation(&self) -> Permutation {
        permutation_from_cycles(self.degree, self.cycles.iter())
    }

    /// `[τ] ≤_[c] [σ]` read off the representatives: every nontrivial cycle of
    /// `self` is among the cycles of `other`.
    pub fn is_below(&self, other: &Self) -> bool {
        self.degree == other.degree
            && self
                .cycles
                .iter()
                .filter(|c| c.len() >= 2)
                .all(|c| other.cycles.contains(c))
    }
}

/// Cycle notation of the representative; `()` for the identity class.
impl fmt::Display for EquivClassRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for c in self.cycles.iter().filter(|c| c.len() >= 2) {
            write!(f, "{c}")?;
            any = true;
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}

fn orient(c: &Cycle) -> Cycle {
    if c.len() >= 3 {
        let rev = c.inverse();
        if rev < *c {
            return rev;
        }
    }
    c.clone()
}

fn permutation_from_cycles<'a>(n: usize, cycles: impl Iterator<Item = &'a Cycle>) -> Permutation {
    let mut images: Vec<usize> = (0..n).collect();
    for c in cycles {
        for (a, b) in c.arcs() {
            images[a - 1] = b - 1;
        }
    }
    Permutation::from_zero_based_unchecked(images)
}

pub fn canonicalize_class(sigma: &Permutation) -> EquivClassRep {
    EquivClassRep {
        degree: sigma.degree(),
        cycles: sigma.cycles().iter().map(orient).collect(),
    }
}

/// All `2^m` members of the class, sorted; `m` counts cycles of length ≥ 3.
pub fn class_members(rep: &EquivClassRep) -> Vec<Permutation> {
    let flippable: Vec<&Cycle> = rep.cycles.iter().filter(|c| c.len() >= 3).collect();
    let fixed: Vec<&Cycle> = rep.cycles.iter().filter(|c| c.len() < 3).collect();
    let mut members: Vec<Permutation> = (0..1usize << flippable.len())
        .map(|mask| {
            let flipped: Vec<Cycle> = flippable
                .iter()
                .enumerate()
                .map(|(k, c)| {
                    if mask >> k & 1 == 1 {
                        c.inverse()
                    } else {
                        (*c).clone()
                    }
                })
                .collect();
            permutation_from_cycles(rep.degree, flipped.iter().chain(fixed.iter().copied()))
        })
        .collect();
    members.sort();
    members
}

/// A pair of permutations with `lower ≤_c upper`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub lower: Permutation,
    pub upper: Permutation,
}

/// `[τ] ≤_[c] [σ]`. Returns a member pair `τ′ ≤_c σ′` when it holds,
/// `(τ, σ)` itself if possible.
pub fn class_leq(tau: &Permutation, sigma: &Permutation) -> Result<Option<Witness>> {
    check_degree(tau.degree(), sigma.degree())?;
    if tau.decompose().is_included_in(&sigma.decompose()) {
        return Ok(Some(Witness {
            lower: tau.clone(),
            upper: sigma.clone(),
        }));
    }
    let lower = class_members(&canonicalize_class(tau));
    let upper: Vec<_> = class_members(&canonicalize_class(sigma))
        .into_iter()
        .map(|p| {
            let d = p.decompose();
            (p, d)
        })
        .collect();
    for t in &lower {
        let dt = t.decompose();
        if let Some((s, _)) = upper.iter().find(|(_, ds)| dt.is_included_in(ds)) {
            return Ok(Some(Witness {
                lower: t.clone(),
                upper: s.clone(),
            }));
        }
    }
    Ok(None)
}

/// Strong Bruhat order via the rank-dominance criterion:
/// `τ ≤ σ` iff `#{k ≤ i : τ(k) ≥ j} ≤ #{k ≤ i : σ(k) ≥ j}` for all `i, j`.
pub fn bruhat_leq(tau: &Permutation, sigma: &Permutation) -> Result<bool> {
    check_degree(tau.degree(), sigma.degree())?;
    let n = tau.degree();
    let (t, s) = (tau.zero_based(), sigma.zero_based());
    // counts[j]: how many prefix values are ≥ j
    let mut count_t = alloc::vec![0usize; n];
    let mut count_s = alloc::vec![0usize; n];
    for i in 0..n {
        for c in &mut count_t[..=t[i]] {
            *c += 1;
        }
        for c in &mut count_s[..=s[i]] {
            *c += 1;
        }
        if count_t.iter().zip(&count_s).any(|(a, b)| a > b) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Which matrices and which products a verdict speaks about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Setting {
    /// `|X_σ|` vs `|X_τ|` over complex PSD matrices.
    ComplexAbs,
    /// `X_σ` vs `X_τ` over complex PSD matrices.
    ComplexPlain,
    /// `X_σ` vs `X_τ` over real PSD matrices.
    RealPlain,
}

impl Setting {
    pub const ALL: [Setting; 3] = [
        Setting::ComplexAbs,
        Setting::ComplexPlain,
        Setting::RealPlain,
    ];
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    AlwaysEqual,
    /// σ-side product ≤ τ-side product for every matrix in the setting.
    SigmaLeqTau,
    TauLeqSigma,
    Incomparable,
    /// The plain products may be non-real, so `≤` is meaningless.
    Undefined,
}

impl Relation {
    /// The verdict with σ and τ exchanged.
    pub fn swapped(self) -> Relation {
        match self {
            Relation::SigmaLeqTau => Relation::TauLeqSigma,
            Relation::TauLeqSigma => Relation::SigmaLeqTau,
            other => other,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationVerdict {
    pub relation: Relation,
    /// For inequality verdicts, the `≤_c` pair backing them: `upper` is on the
    /// side with the smaller product.
    pub witness: Option<Witness>,
}

impl RelationVerdict {
    fn bare(relation: Relation) -> Self {
        RelationVerdict {
            relation,
            witness: None,
        }
    }

    fn with(relation: Relation, lower: &Permutation, upper: &Permutation) -> Self {
        RelationVerdict {
            relation,
            witness: Some(Witness {
                lower: lower.clone(),
                upper: upper.clone(),
            }),
        }
    }
}

/// Decides how `X_σ` and `X_τ` (or their moduli) compare across every PSD
/// matrix of the given setting.
pub fn classify(
    sigma: &Permutation,
    tau: &Permutation,
    setting: Setting,
) -> Result<RelationVerdict> {
    check_degree(sigma.degree(), tau.degree())?;
    let equiv = cycle_equiv(sigma, tau)?;
    let verdict = match setting {
        Setting::ComplexAbs => {
            if equiv {
                RelationVerdict::bare(Relation::AlwaysEqual)
            } else if let Some(w) = class_leq(tau, sigma)? {
                RelationVerdict {
                    relation: Relation::SigmaLeqTau,
                    witness: Some(w),
                }
            } else if let Some(w) = class_leq(sigma, tau)? {
                RelationVerdict {
                    relation: Relation::TauLeqSigma,
                    witness: Some(w),
                }
            } else {
                RelationVerdict::bare(Relation::Incomparable)
            }
        }
        Setting::ComplexPlain => {
            if !sigma.is_involution() || !tau.is_involution() {
                RelationVerdict::bare(Relation::Undefined)
            } else if equiv {
                RelationVerdict::bare(Relation::AlwaysEqual)
            } else if cycle_leq(tau, sigma)? {
                RelationVerdict::with(Relation::SigmaLeqTau, tau, sigma)
            } else if cycle_leq(sigma, tau)? {
                RelationVerdict::with(Relation::TauLeqSigma, sigma, tau)
            } else {
                RelationVerdict::bare(Relation::Incomparable)
            }
        }
        Setting::RealPlain => {
            if equiv {
                RelationVerdict::bare(Relation::AlwaysEqual)
            } else if tau.is_involution() && cycle_leq(tau, sigma)? {
                RelationVerdict::with(Relation::SigmaLeqTau, tau, sigma)
            } else if sigma.is_involution() && cycle_leq(sigma, tau)? {
                RelationVerdict::with(Relation::TauLeqSigma, sigma, tau)
            } else {
                RelationVerdict::bare(Relation::Incomparable)
            }
        }
    };
    Ok(verdict)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Error;
    use alloc::collections::VecDeque;
    use alloc::string::ToString;
    use alloc::vec;

    fn cyc(text: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(text, n).unwrap()
    }

    fn line(text: &str) -> Permutation {
        Permutation::parse_one_line(text).unwrap()
    }

    /// Upward closure of `tau` under swapping positions `a < b` with
    /// `π(a) < π(b)`, applied to the current permutation.
    fn bruhat_upset_by_transpositions(tau: &Permutation) -> BTreeSet<Vec<usize>> {
        let start: Vec<usize> = tau.zero_based().to_vec();
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(start.clone());
        queue.push_back(start);
        while let Some(cur) = queue.pop_front() {
            for a in 0..cur.len() {
                for b in a + 1..cur.len() {
                    if cur[a] < cur[b] {
                        let mut next = cur.clone();
                        next.swap(a, b);
                        if seen.insert(next.clone()) {
                            queue.push_back(next);
                        }
                    }
                }
            }
        }
        seen
    }

    #[test]
    fn cycle_leq_examples() {
        assert!(cycle_leq(&cyc("(1 3 2)", 5), &cyc("(1 3 2)(4 5)", 5)).unwrap());
        for s in Permutation::all(4) {
            assert!(cycle_leq(&Permutation::identity(4), &s).unwrap());
        }
        let (a, b) = (cyc("(1 2 3)", 3), cyc("(1 3 2)", 3));
        assert!(!cycle_leq(&a, &b).unwrap());
        assert!(!cycle_leq(&b, &a).unwrap());
        assert_eq!(
            cycle_leq(&a, &Permutation::identity(4)),
            Err(Error::DegreeMismatch { left: 3, right: 4 })
        );
    }

    #[test]
    fn cycle_equiv_examples() {
        assert!(cycle_equiv(
            &cyc("(1 2 3)(4 5)(6 7 8)", 8),
            &cyc("(3 2 1)(4 5)(8 7 6)", 8)
        )
        .unwrap());
        // (1 3 2) is the reverse of (1 2 3), so the definition makes these equivalent
        assert!(cycle_equiv(&cyc("(1 3 2)(4 5 6)", 6), &cyc("(1 2 3)(4 5 6)", 6)).unwrap());
        assert!(!cycle_equiv(&cyc("(1 3 2)(4 5 6)", 6), &cyc("(1 2 3)(4 5)", 6)).unwrap());
        assert!(!cycle_equiv(&cyc("(1 2 3)(4 5)", 5), &cyc("(3 2 1)", 5)).unwrap());
        assert!(cycle_equiv(&cyc("(1 2)", 2), &cyc("(1 2)", 3)).is_err());
    }

    #[test]
    fn canonicalize_examples() {
        let rep = canonicalize_class(&cyc("(3 2 1)", 3));
        assert!(rep.cycles().contains(&Cycle::new(vec![1, 2, 3]).unwrap()));
        assert_eq!(rep.to_string(), "(1 2 3)");

        let inv = cyc("(1 4)(2 5)", 6);
        let rep = canonicalize_class(&inv);
        assert_eq!(
            rep.cycles().iter().cloned().collect::<Vec<_>>(),
            inv.cycles()
        );
        assert_eq!(rep.to_permutation(), inv);

        let rep = canonicalize_class(&cyc("(1 2 3)(4 5)(8 7 6)", 8));
        assert_eq!(rep.to_string(), "(1 2 3)(4 5)(6 7 8)");
        let members = class_members(&rep);
        let listed = [
            "(1 2 3)(4 5)(6 7 8)",
            "(3 2 1)(4 5)(6 7 8)",
            "(1 2 3)(4 5)(8 7 6)",
            "(3 2 1)(4 5)(8 7 6)",
        ];
        for text in listed {
            let p = cyc(text, 8);
            assert!(members.contains(&p));
            assert_eq!(canonicalize_class(&p), rep);
            assert!(cycle_equiv(&p, &cyc("(1 2 3)(4 5)(8 7 6)", 8)).unwrap());
        }
    }

    #[test]
    fn class_members_sizes() {
        assert_eq!(
            class_members(&canonicalize_class(&cyc("(1 2 3)(4 5)(6 7 8)", 8))).len(),
            4
        );
        assert_eq!(
            class_members(&canonicalize_class(&Permutation::identity(5))).len(),
            1
        );
        assert_eq!(
            class_members(&canonicalize_class(&cyc("(1 2)(3 4)", 4))).len(),
            1
        );
    }

    #[test]
    fn class_leq_examples() {
        let tau = cyc("(1 2 3)", 5);
        let sigma = cyc("(3 2 1)(4 5)", 5);
        assert!(!cycle_leq(&tau, &sigma).unwrap());
        let w = class_leq(&tau, &sigma).unwrap().expect("comparable");
        assert!(cycle_leq(&w.lower, &w.upper).unwrap());
        assert!(cycle_equiv(&w.lower, &tau).unwrap());
        assert!(cycle_equiv(&w.upper, &sigma).unwrap());
        // the pair named in the literature is one valid choice
        assert!(cycle_leq(&cyc("(3 2 1)", 5), &sigma).unwrap());

        for s in Permutation::all(4) {
            assert!(class_leq(&Permutation::identity(4), &s).unwrap().is_some());
        }
        let (a, b) = (cyc("(1 2)", 3), cyc("(1 3)", 3));
        assert!(class_leq(&a, &b).unwrap().is_none());
        assert!(class_leq(&b, &a).unwrap().is_none());
    }

    #[test]
    fn bruhat_examples() {
        for s in Permutation::all(4) {
            assert!(bruhat_leq(&Permutation::identity(4), &s).unwrap());
        }
        assert!(bruhat_leq(&line("2 1 3"), &line("2 3 1")).unwrap());
        assert!(!bruhat_leq(&line("2 3 1"), &line("2 1 3")).unwrap());
        for s in Permutation::all(3) {
            assert!(bruhat_leq(&s, &line("3 2 1")).unwrap());
        }
        // the same examples via the closure oracle
        assert!(bruhat_upset_by_transpositions(&line("2 1 3")).contains(&vec![1, 2, 0]));
        for s in Permutation::all(3) {
            assert!(bruhat_upset_by_transpositions(&s).contains(&vec![2, 1, 0]));
        }
    }

    #[test]
    fn bruhat_matches_transposition_closure() {
        for n in 0..=4 {
            for tau in Permutation::all(n) {
                let upset = bruhat_upset_by_transpositions(&tau);
                for sigma in Permutation::all(n) {
                    assert_eq!(
                        bruhat_leq(&tau, &sigma).unwrap(),
                        upset.contains(sigma.zero_based()),
                        "{tau:?} {sigma:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn classify_examples() {
        let v = classify(
            &cyc("(1 3 2)(4 5)", 5),
            &cyc("(1 3 2)", 5),
            Setting::ComplexAbs,
        )
        .unwrap();
        assert_eq!(v.relation, Relation::SigmaLeqTau);
        let w = v.witness.unwrap();
        assert!(cycle_leq(&w.lower, &w.upper).unwrap());

        let v = classify(&cyc("(1 2 3)", 3), &cyc("(3 2 1)", 3), Setting::ComplexAbs).unwrap();
        assert_eq!(v.relation, Relation::AlwaysEqual);

        let v = classify(
            &cyc("(1 2)(3 4)", 4),
            &cyc("(1 2)", 4),
            Setting::ComplexPlain,
        )
        .unwrap();
        assert_eq!(v.relation, Relation::SigmaLeqTau);

        let v = classify(
            &cyc("(1 2)(3 4 5)", 5),
            &cyc("(1 2)", 5),
            Setting::RealPlain,
        )
        .unwrap();
        assert_eq!(v.relation, Relation::SigmaLeqTau);

        let v = classify(&cyc("(1 2 3)", 4), &cyc("(1 2 4)", 4), Setting::ComplexAbs).unwrap();
        assert_eq!(v.relation, Relation::Incomparable);
    }

    #[test]
    fn classify_plain_settings() {
        let (s, t) = (cyc("(1 2 3)", 3), cyc("(1 3 2)", 3));
        assert_eq!(
            classify(&s, &t, Setting::ComplexPlain).unwrap().relation,
            Relation::Undefined
        );
        assert_eq!(
            classify(&s, &t, Setting::RealPlain).unwrap().relation,
            Relation::AlwaysEqual
        );
        // real: a non-involution τ never bounds anything from above
        let (s, t) = (cyc("(1 2 3)(4 5)", 5), cyc("(1 2 3)", 5));
        assert_eq!(
            classify(&s, &t, Setting::RealPlain).unwrap().relation,
            Relation::Incomparable
        );
        assert_eq!(
            classify(&s, &t, Setting::ComplexAbs).unwrap().relation,
            Relation::SigmaLeqTau
        );
        let id = Permutation::identity(3);
        assert_eq!(
            classify(&cyc("(1 2 3)", 3), &id, Setting::RealPlain)
                .unwrap()
                .relation,
            Relation::SigmaLeqTau
        );
        assert_eq!(
            classify(&id, &id, Setting::ComplexPlain).unwrap().relation,
            Relation::AlwaysEqual
        );
        assert!(classify(&id, &Permutation::identity(2), Setting::RealPlain).is_err());
    }

    #[test]
    fn brute_force_incomparable_example() {
        let (s, t) = (cyc("(1 2 3)", 4), cyc("(1 2 4)", 4));
        let ms = class_members(&canonicalize_class(&s));
        let mt = class_members(&canonicalize_class(&t));
        assert_eq!((ms.len(), mt.len()), (2, 2));
        for a in &ms {
            for b in &mt {
                assert!(!cycle_leq(a, b).unwrap() && !cycle_leq(b, a).unwrap());
            }
        }
    }

    #[test]
    fn relations_exhaustive_small() {
        for n in 0..=4 {
            let all: Vec<_> = Permutation::all(n).collect();
            for s in &all {
                for t in &all {
                    // ~c agrees with canonical representatives
                    assert_eq!(
                        cycle_equiv(s, t).unwrap(),
                        canonicalize_class(s) == canonicalize_class(t)
                    );
                    // class order from enumeration agrees with the representative check
                    assert_eq!(
                        class_leq(t, s).unwrap().is_some(),
                        canonicalize_class(t).is_below(&canonicalize_class(s))
                    );
                    // ≤_c implies Bruhat
                    if cycle_leq(t, s).unwrap() {
                        assert!(bruhat_leq(t, s).unwrap());
                    }
                    for setting in Setting::ALL {
                        let st = classify(s, t, setting).unwrap().relation;
                        let ts = classify(t, s, setting).unwrap().relation;
                        assert_eq!(st, ts.swapped(), "{s:?} {t:?} {setting:?}");
                        assert!(setting == Setting::ComplexPlain || st != Relation::Undefined);
                    }
                }
                let rep = canonicalize_class(s);
                assert_eq!(canonicalize_class(&rep.to_permutation()), rep);
            }
        }
    }
}
