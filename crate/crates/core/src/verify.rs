//! Numerical and exhaustive checks of every combinatorial verdict.
//!
//! - [`exhaustive_poset`] enumerates `S_n` and checks the order axioms, the
//!   member-wise well-definedness of the class order and the containment of
//!   cycle inclusion in Bruhat order.
//! - [`monte_carlo_pair`] samples Gram matrices and counts violations of the
//!   verdict returned by [`classify`].
//! - [`find_violation`] builds the two ε-Gram matrices that separate an
//!   incomparable pair in both directions.
//! - [`full_theorem_audit`] runs the last two over all of `S_n × S_n`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::construct::{
    epsilon_gram, random_gram, stream_seed, CounterexampleSpec, Field, GeneratorSpec, Kind,
    DEFAULT_EPSILON,
};
use crate::matrix::{
    certify, generalized_diagonal, ComplexMatrix, PsdVerdict, DEFAULT_TOL, LOG_SLACK,
};
use crate::order::{
    bruhat_leq, canonicalize_class, class_leq, class_members, classify, cycle_equiv, EquivClassRep,
    Relation, RelationVerdict, Setting,
};
use crate::perm::{CycleDecomposition, Permutation};
use crate::{Error, Result};

pub const MAX_POSET_DEGREE: usize = 7;
pub const MAX_AUDIT_DEGREE: usize = 5;
/// Cap on ε-halvings starting from [`DEFAULT_EPSILON`].
pub const MAX_HALVINGS: usize = 60;
/// Degrees up to which every `~c` pair and every class pair is checked
/// against the definitional routines.
const FULL_PAIR_DEGREE: usize = 5;
const CLASS_ENUMERATION_DEGREE: usize = 6;

/// Monte-Carlo trials per pair used by the audit when none are requested.
pub fn default_trials(n: usize) -> usize {
    if n <= 4 {
        100
    } else {
        20
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum RelationName {
    CycleLeq,
    CycleEquiv,
    ClassLeq,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Law {
    Reflexive,
    Symmetric,
    Antisymmetric,
    Transitive,
    /// `~c` disagrees with equality of class representatives.
    RepresentativeMismatch,
    /// Member enumeration disagrees with representative inclusion.
    ClassOrderMismatch,
    /// Some `τ′ ∈ [τ]` has no `σ′ ∈ [σ]` above it.
    MemberWise,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomFailure {
    pub relation: RelationName,
    pub law: Law,
    pub members: Vec<Permutation>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PosetReport {
    pub n: usize,
    pub permutation_count: usize,
    pub class_count: usize,
    /// Class representatives, sorted.
    pub classes: Vec<EquivClassRep>,
    /// `(lower, upper)` index pairs into `classes` with `lower ≤_[c] upper`,
    /// reflexive pairs included.
    pub relation: Vec<(usize, usize)>,
    pub cycle_leq_pairs: usize,
    pub axiom_failures: Vec<AxiomFailure>,
    /// Pairs `τ ≤_c σ` with `τ ≰ σ` in Bruhat order.
    pub bruhat_containment_failures: Vec<(Permutation, Permutation)>,
}

impl PosetReport {
    pub fn is_success(&self) -> bool {
        self.axiom_failures.is_empty() && self.bruhat_containment_failures.is_empty()
    }
}

/// Checks a relation given by sorted up-sets for the partial-order axioms.
fn check_partial_order<F>(up: &[Vec<usize>], mut fail: F)
where
    F: FnMut(Law, &[usize]),
{
    for (a, ups) in up.iter().enumerate() {
        if ups.binary_search(&a).is_err() {
            fail(Law::Reflexive, &[a]);
        }
        for &b in ups {
            if b != a && up[b].binary_search(&a).is_ok() {
                fail(Law::Antisymmetric, &[a, b]);
            }
            for &c in &up[b] {
                if ups.binary_search(&c).is_err() {
                    fail(Law::Transitive, &[a, b, c]);
                }
            }
        }
    }
}

/// Enumerates `S_n` and checks every structural claim about `≤_c`, `~c`,
/// `≤_[c]` and Bruhat order.
pub fn exhaustive_poset(n: usize) -> Result<PosetReport> {
    if n > MAX_POSET_DEGREE {
        return Err(Error::DegreeTooLarge {
            n,
            limit: MAX_POSET_DEGREE,
        });
    }
    let perms: Vec<Permutation> = Permutation::all(n).collect();
    let decomps: Vec<CycleDecomposition> = perms.iter().map(Permutation::decompose).collect();
    let mut axiom_failures = Vec::new();

    // ≤_c on permutations
    let up: Vec<Vec<usize>> = decomps
        .iter()
        .map(|dt| {
            decomps
                .iter()
                .enumerate()
                .filter(|(_, ds)| dt.is_included_in(ds))
                .map(|(s, _)| s)
                .collect()
        })
        .collect();
    check_partial_order(&up, |law, idx| {
        axiom_failures.push(AxiomFailure {
            relation: RelationName::CycleLeq,
            law,
            members: idx.iter().map(|&i| perms[i].clone()).collect(),
        })
    });
    let cycle_leq_pairs = up.iter().map(Vec::len).sum();

    let mut bruhat_containment_failures = Vec::new();
    for (t, ups) in up.iter().enumerate() {
        for &s in ups {
            if !bruhat_leq(&perms[t], &perms[s])? {
                bruhat_containment_failures.push((perms[t].clone(), perms[s].clone()));
            }
        }
    }

    // ~c against canonical representatives
    let reps: Vec<EquivClassRep> = perms.iter().map(canonicalize_class).collect();
    let mut equiv_fail = |law: Law, members: Vec<Permutation>| {
        axiom_failures.push(AxiomFailure {
            relation: RelationName::CycleEquiv,
            law,
            members,
        })
    };
    let buckets: Vec<Vec<usize>> = if n <= FULL_PAIR_DEGREE {
        alloc::vec![(0..perms.len()).collect()]
    } else {
        // ~c preserves the partition of {1..n} into cycle supports
        let mut by_support: BTreeMap<Vec<Vec<usize>>, Vec<usize>> = BTreeMap::new();
        for (i, p) in perms.iter().enumerate() {
            let mut support: Vec<Vec<usize>> = p
                .cycles()
                .iter()
                .map(|c| {
                    let mut e = c.elements().to_vec();
                    e.sort_unstable();
                    e
                })
                .collect();
            support.sort();
            by_support.entry(support).or_default().push(i);
        }
        by_support.into_values().collect()
    };
    for bucket in &buckets {
        for &a in bucket {
            if !cycle_equiv(&perms[a], &perms[a])? {
                equiv_fail(Law::Reflexive, alloc::vec![perms[a].clone()]);
            }
            for &b in bucket {
                let ab = cycle_equiv(&perms[a], &perms[b])?;
                if ab != cycle_equiv(&perms[b], &perms[a])? {
                    equiv_fail(
                        Law::Symmetric,
                        alloc::vec![perms[a].clone(), perms[b].clone()],
                    );
                }
                // agreement with equality of representatives makes ~c the
                // kernel of a map, hence transitive
                if ab != (reps[a] == reps[b]) {
                    equiv_fail(
                        Law::RepresentativeMismatch,
                        alloc::vec![perms[a].clone(), perms[b].clone()],
                    );
                }
            }
        }
    }

    // ≤_[c] on classes
    let classes: Vec<EquivClassRep> = reps
        .iter()
        .cloned()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let class_perm: Vec<Permutation> = classes.iter().map(EquivClassRep::to_permutation).collect();
    let mut class_fail = |law: Law, members: Vec<Permutation>| {
        axiom_failures.push(AxiomFailure {
            relation: RelationName::ClassLeq,
            law,
            members,
        })
    };
    let mut class_up: Vec<Vec<usize>> = Vec::with_capacity(classes.len());
    for (a, ra) in classes.iter().enumerate() {
        let mut ups = Vec::new();
        for (b, rb) in classes.iter().enumerate() {
            let below = ra.is_below(rb);
            if n <= CLASS_ENUMERATION_DEGREE {
                let enumerated = class_leq(&class_perm[a], &class_perm[b])?;
                if enumerated.is_some() != below {
                    class_fail(
                        Law::ClassOrderMismatch,
                        alloc::vec![class_perm[a].clone(), class_perm[b].clone()],
                    );
                }
            }
            if below {
                ups.push(b);
            }
        }
        class_up.push(ups);
    }
    let mut order_failures = Vec::new();
    check_partial_order(&class_up, |law, idx| {
        order_failures.push((law, idx.iter().map(|&i| class_perm[i].clone()).collect()))
    });
    for (law, members) in order_failures {
        class_fail(law, members);
    }
    for (a, ups) in class_up.iter().enumerate() {
        let lower = class_members(&classes[a]);
        for &b in ups {
            let upper: Vec<CycleDecomposition> = class_members(&classes[b])
                .iter()
                .map(Permutation::decompose)
                .collect();
            for t in &lower {
                let dt = t.decompose();
                if !upper.iter().any(|ds| dt.is_included_in(ds)) {
                    class_fail(
                        Law::MemberWise,
                        alloc::vec![t.clone(), class_perm[b].clone()],
                    );
                }
            }
        }
    }

    let relation = class_up
        .iter()
        .enumerate()
        .flat_map(|(a, ups)| ups.iter().map(move |&b| (a, b)))
        .collect();
    Ok(PosetReport {
        n,
        permutation_count: perms.len(),
        class_count: classes.len(),
        classes,
        relation,
        cycle_leq_pairs,
        axiom_failures,
        bruhat_containment_failures,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct TrialReport {
    pub sigma: Permutation,
    pub tau: Permutation,
    pub setting: Setting,
    pub trials: usize,
    pub verdict_expected: RelationVerdict,
    pub violations: usize,
    /// Largest log-domain slack a passing trial needed: `log|X_small| −
    /// log|X_large|` for inequalities, the absolute gap for equalities.
    pub max_slack_used: f64,
    /// Trials in which `X_σ` or `X_τ` came out non-real.
    pub non_real_samples: usize,
}

impl TrialReport {
    pub fn is_success(&self) -> bool {
        self.violations == 0
    }
}

fn field_for(setting: Setting) -> Field {
    match setting {
        Setting::ComplexAbs | Setting::ComplexPlain => Field::Complex,
        Setting::RealPlain => Field::Real,
    }
}

/// Samples `trials` PSD Gram matrices and counts those that contradict the
/// verdict of [`classify`]. Trial `k` draws from seed `stream_seed(seed, [k])`.
pub fn monte_carlo_pair(
    sigma: &Permutation,
    tau: &Permutation,
    setting: Setting,
    trials: usize,
    seed: u64,
) -> Result<TrialReport> {
    let verdict = classify(sigma, tau, setting)?;
    let n = sigma.degree();
    let mut violations = 0;
    let mut max_slack_used: f64 = 0.0;
    let mut non_real_samples = 0;
    for trial in 0..trials {
        let spec = GeneratorSpec {
            n,
            seed: stream_seed(seed, &[trial as u64]),
            field: field_for(setting),
            kind: Kind::Psd,
        };
        let x = random_gram(&spec)?;
        let ds = generalized_diagonal(&x, sigma)?;
        let dt = generalized_diagonal(&x, tau)?;
        if !ds.is_real || !dt.is_real {
            non_real_samples += 1;
        }
        let gap = ds.log_magnitude - dt.log_magnitude;
        let plain = setting != Setting::ComplexAbs;
        let ok = match verdict.relation {
            Relation::AlwaysEqual => {
                if !(ds.is_zero() && dt.is_zero()) {
                    max_slack_used = max_slack_used.max(gap.abs());
                }
                ds.abs_eq(&dt, LOG_SLACK)
                    && (!plain || (ds.is_real && dt.is_real && ds.sign == dt.sign))
            }
            Relation::SigmaLeqTau => {
                if gap.is_finite() {
                    max_slack_used = max_slack_used.max(gap);
                }
                if plain {
                    ds.real_leq(&dt, LOG_SLACK)
                } else {
                    ds.abs_leq(&dt, LOG_SLACK)
                }
            }
            Relation::TauLeqSigma => {
                if gap.is_finite() {
                    max_slack_used = max_slack_used.max(-gap);
                }
                if plain {
                    dt.real_leq(&ds, LOG_SLACK)
                } else {
                    dt.abs_leq(&ds, LOG_SLACK)
                }
            }
            Relation::Incomparable | Relation::Undefined => true,
        };
        if !ok {
            violations += 1;
        }
    }
    if verdict.relation == Relation::Undefined && trials > 0 && non_real_samples == 0 {
        // ill-definedness was never observed
        violations += 1;
    }
    Ok(TrialReport {
        sigma: sigma.clone(),
        tau: tau.clone(),
        setting,
        trials,
        verdict_expected: verdict,
        violations,
        max_slack_used,
        non_real_samples,
    })
}

/// Which branch of the `(p, q)` case analysis produced the pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PqCase {
    /// `x_pq` is a factor of the smaller product; neither `x_pq` nor `x_qp` is
    /// a factor of the larger one.
    SingleArc,
    /// Both `x_pq` and `x_qp` are factors of the smaller product; at most one
    /// is a factor of the larger one.
    TwoCycle,
}

/// One ε-Gram matrix with `0 < A_small < A_large`.
#[derive(Debug, Clone, PartialEq)]
pub struct Separation {
    pub matrix: ComplexMatrix,
    pub case: PqCase,
    /// 1-based.
    pub pq: (usize, usize),
    pub epsilon: f64,
    pub halvings: usize,
    /// `A_small` and `A_large` as computed doubles.
    pub smaller_value: f64,
    pub larger_value: f64,
}

/// Both directions for an incomparable pair: `A` has `0 < A_σ < A_τ` and
/// `A′` has `0 < A′_τ < A′_σ`.
#[derive(Debug, Clone, PartialEq)]
pub struct ViolationWitness {
    pub sigma: Permutation,
    pub tau: Permutation,
    pub a: Separation,
    pub a_prime: Separation,
}

impl ViolationWitness {
    /// `[A_σ, A_τ, A′_σ, A′_τ]`.
    pub fn values(&self) -> [f64; 4] {
        [
            self.a.smaller_value,
            self.a.larger_value,
            self.a_prime.larger_value,
            self.a_prime.smaller_value,
        ]
    }
}

/// Picks `(p, q)` so that the ε-Gram matrix shrinks `X_small` faster than
/// `X_large`: take a cycle of `small` that is neither a cycle of `large` nor
/// the reverse of one; a cycle of length ≥ 3 has an arc whose two directions
/// are both absent from `large`, and a 2-cycle is not fully present in it.
pub fn choose_pq(small: &Permutation, large: &Permutation) -> Result<(PqCase, (usize, usize))> {
    crate::error::check_degree(small.degree(), large.degree())?;
    let theirs: BTreeSet<_> = large.nontrivial_cycles().into_iter().collect();
    let unmatched: Vec<_> = small
        .nontrivial_cycles()
        .into_iter()
        .filter(|c| !theirs.contains(c) && !theirs.contains(&c.inverse()))
        .collect();
    let arc_in_large = |a: usize, b: usize| large.image(a) == b;
    if let Some(c) = unmatched.iter().find(|c| c.len() >= 3) {
        return c
            .arcs()
            .find(|&(p, q)| !arc_in_large(p, q) && !arc_in_large(q, p))
            .map(|pq| (PqCase::SingleArc, pq))
            .ok_or_else(|| Error::CaseSearchFailed(format!("{small} vs {large}")));
    }
    match unmatched.first() {
        Some(c) => {
            let (p, q) = (c.elements()[0], c.elements()[1]);
            if arc_in_large(p, q) && arc_in_large(q, p) {
                Err(Error::CaseSearchFailed(format!("{small} vs {large}")))
            } else {
                Ok((PqCase::TwoCycle, (p, q)))
            }
        }
        None => Err(Error::CaseSearchFailed(format!(
            "every cycle of {small} occurs in {large} up to reversal"
        ))),
    }
}

/// A PD matrix `A` with `0 < A_small < A_large`, for `[small] ≰_[c] [large]`.
///
/// ε starts at [`DEFAULT_EPSILON`] and is halved until the strict inequality
/// holds in double precision, at most [`MAX_HALVINGS`] times.
pub fn find_separation(small: &Permutation, large: &Permutation) -> Result<Separation> {
    if class_leq(small, large)?.is_some() {
        return Err(Error::NotIncomparable);
    }
    let (case, (p, q)) = choose_pq(small, large)?;
    let n = small.degree();
    let mut epsilon = DEFAULT_EPSILON;
    for halvings in 0..=MAX_HALVINGS {
        let spec = CounterexampleSpec::new(n, p, q, epsilon)?;
        let matrix = epsilon_gram(&spec);
        let smaller_value = matrix.diagonal_product(small)?.re;
        let larger_value = matrix.diagonal_product(large)?.re;
        if 0.0 < smaller_value && smaller_value < larger_value {
            return Ok(Separation {
                matrix,
                case,
                pq: (p, q),
                epsilon,
                halvings,
                smaller_value,
                larger_value,
            });
        }
        epsilon /= 2.0;
    }
    Err(Error::EpsilonExhausted(MAX_HALVINGS))
}

/// Real PD matrices refuting both `|X_σ| ≤ |X_τ|` and `|X_τ| ≤ |X_σ|`.
pub fn find_violation(sigma: &Permutation, tau: &Permutation) -> Result<ViolationWitness> {
    if classify(sigma, tau, Setting::ComplexAbs)?.relation != Relation::Incomparable {
        return Err(Error::NotIncomparable);
    }
    let a = find_separation(sigma, tau)?;
    let a_prime = find_separation(tau, sigma)?;
    Ok(ViolationWitness {
        sigma: sigma.clone(),
        tau: tau.clone(),
        a,
        a_prime,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub enum AuditFailureKind {
    MonteCarlo {
        violations: usize,
        trials: usize,
    },
    /// No separating matrix for an incomparable pair.
    MissingWitness(Error),
    /// A strictly comparable, non-equivalent pair whose moduli could not be
    /// pulled apart.
    MissingStrictGap(Error),
    WitnessNotPd {
        pq: (usize, usize),
        epsilon: f64,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct AuditFailure {
    pub sigma: Permutation,
    pub tau: Permutation,
    pub kind: AuditFailureKind,
}

/// Aggregate of [`full_theorem_audit`]; merging is associative.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct AuditSummary {
    pub pairs: usize,
    pub equal_pairs: usize,
    pub comparable_pairs: usize,
    pub incomparable_pairs: usize,
    pub witnesses_found: usize,
    pub strict_gaps_found: usize,
    pub monte_carlo_trials: usize,
    pub monte_carlo_violations: usize,
    pub max_slack_used: f64,
    pub max_halvings: usize,
    pub failures: Vec<AuditFailure>,
}

impl AuditSummary {
    pub fn is_success(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn merge(mut self, other: AuditSummary) -> AuditSummary {
        self.pairs += other.pairs;
        self.equal_pairs += other.equal_pairs;
        self.comparable_pairs += other.comparable_pairs;
        self.incomparable_pairs += other.incomparable_pairs;
        self.witnesses_found += other.witnesses_found;
        self.strict_gaps_found += other.strict_gaps_found;
        self.monte_carlo_trials += other.monte_carlo_trials;
        self.monte_carlo_violations += other.monte_carlo_violations;
        self.max_slack_used = self.max_slack_used.max(other.max_slack_used);
        self.max_halvings = self.max_halvings.max(other.max_halvings);
        self.failures.extend(other.failures);
        self
    }
}

/// Audits single pairs; keeps a cache of PD certificates for ε-Gram
/// matrices, which depend only on `(p, q, ε)`.
#[derive(Debug, Clone)]
pub struct Auditor {
    trials: usize,
    seed: u64,
    pd_cache: BTreeMap<(usize, usize, usize, u64), bool>,
}

impl Auditor {
    pub fn new(trials: usize, seed: u64) -> Self {
        Auditor {
            trials,
            seed,
            pd_cache: BTreeMap::new(),
        }
    }

    fn is_pd(&mut self, sep: &Separation) -> bool {
        let key = (sep.matrix.dim(), sep.pq.0, sep.pq.1, sep.epsilon.to_bits());
        *self
            .pd_cache
            .entry(key)
            .or_insert_with(|| certify(&sep.matrix, DEFAULT_TOL).verdict == PsdVerdict::PD)
    }

    fn record_separation(
        &mut self,
        summary: &mut AuditSummary,
        sigma: &Permutation,
        tau: &Permutation,
        sep: &Separation,
    ) {
        summary.max_halvings = summary.max_halvings.max(sep.halvings);
        if !self.is_pd(sep) {
            summary.failures.push(AuditFailure {
                sigma: sigma.clone(),
                tau: tau.clone(),
                kind: AuditFailureKind::WitnessNotPd {
                    pq: sep.pq,
                    epsilon: sep.epsilon,
                },
            });
        }
    }

    /// Audits one ordered pair; `pair_index` selects the random stream.
    pub fn audit_pair(
        &mut self,
        pair_index: u64,
        sigma: &Permutation,
        tau: &Permutation,
    ) -> Result<AuditSummary> {
        let mut summary = AuditSummary {
            pairs: 1,
            ..AuditSummary::default()
        };
        let verdict = classify(sigma, tau, Setting::ComplexAbs)?;
        match verdict.relation {
            Relation::Incomparable => {
                summary.incomparable_pairs = 1;
                match find_violation(sigma, tau) {
                    Ok(w) => {
                        summary.witnesses_found = 1;
                        self.record_separation(&mut summary, sigma, tau, &w.a);
                        self.record_separation(&mut summary, sigma, tau, &w.a_prime);
                    }
                    Err(e) => summary.failures.push(AuditFailure {
                        sigma: sigma.clone(),
                        tau: tau.clone(),
                        kind: AuditFailureKind::MissingWitness(e),
                    }),
                }
                return Ok(summary);
            }
            Relation::AlwaysEqual => summary.equal_pairs = 1,
            Relation::SigmaLeqTau | Relation::TauLeqSigma => {
                summary.comparable_pairs = 1;
                let (small, large) = if verdict.relation == Relation::SigmaLeqTau {
                    (sigma, tau)
                } else {
                    (tau, sigma)
                };
                match find_separation(small, large) {
                    Ok(sep) => {
                        summary.strict_gaps_found = 1;
                        self.record_separation(&mut summary, sigma, tau, &sep);
                    }
                    Err(e) => summary.failures.push(AuditFailure {
                        sigma: sigma.clone(),
                        tau: tau.clone(),
                        kind: AuditFailureKind::MissingStrictGap(e),
                    }),
                }
            }
            Relation::Undefined => unreachable!("ComplexAbs verdicts are always defined"),
        }
        let report = monte_carlo_pair(
            sigma,
            tau,
            Setting::ComplexAbs,
            self.trials,
            stream_seed(self.seed, &[pair_index]),
        )?;
        summary.monte_carlo_trials = report.trials;
        summary.monte_carlo_violations = report.violations;
        summary.max_slack_used = report.max_slack_used;
        if !report.is_success() {
            summary.failures.push(AuditFailure {
                sigma: sigma.clone(),
                tau: tau.clone(),
                kind: AuditFailureKind::MonteCarlo {
                    violations: report.violations,
                    trials: report.trials,
                },
            });
        }
        Ok(summary)
    }
}

/// Checks the modulus verdict on every ordered pair of `S_n`: comparable and
/// equal pairs by Monte-Carlo sampling, incomparable pairs by constructing
/// both separating matrices. Pair `(i, j)` of the lexicographic enumeration
/// uses stream `i · n! + j`.
pub fn full_theorem_audit(n: usize, trials: usize, seed: u64) -> Result<AuditSummary> {
    if n > MAX_AUDIT_DEGREE {
        return Err(Error::DegreeTooLarge {
            n,
            limit: MAX_AUDIT_DEGREE,
        });
    }
    let perms: Vec<Permutation> = Permutation::all(n).collect();
    let mut auditor = Auditor::new(trials, seed);
    let mut summary = AuditSummary::default();
    for (i, sigma) in perms.iter().enumerate() {
        for (j, tau) in perms.iter().enumerate() {
            let index = (i * perms.len() + j) as u64;
            summary = summary.merge(auditor.audit_pair(index, sigma, tau)?);
        }
    }
    Ok(summary)
}

/// Human-readable one-liner for a failure record.
pub fn describe_failure(f: &AuditFailure) -> String {
    format!("sigma={} tau={}: {:?}", f.sigma, f.tau, f.kind)
}
