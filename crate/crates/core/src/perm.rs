//! Permutations of `{1, …, n}` and their cycle decompositions.
//!
//! Element labels are 1-based on every public surface. Two text formats are
//! understood: one-line notation (`"3 1 2"`, the images of `1, 2, 3`) and
//! cycle notation (`"(1 3 2)(4 5)"`).

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::check_degree;
use crate::{Error, Result};

/// An element of the symmetric group `S_n`.
///
/// Stored as the 0-based image table; `image(i)` speaks 1-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation from 1-based images, `images[i - 1] = σ(i)`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut zero_based = Vec::with_capacity(n);
        for &v in images {
            if v == 0 || v > n {
                return Err(Error::NotABijection(format!(
                    "value {v} is outside 1..={n}"
                )));
            }
            if core::mem::replace(&mut seen[v - 1], true) {
                return Err(Error::NotABijection(format!("value {v} appears twice")));
            }
            zero_based.push(v - 1);
        }
        Ok(Permutation { images: zero_based })
    }

    pub(crate) fn from_zero_based_unchecked(images: Vec<usize>) -> Self {
        debug_assert!({
            let mut sorted = images.clone();
            sorted.sort_unstable();
            sorted.iter().copied().eq(0..images.len())
        });
        Permutation { images }
    }

    /// Parses whitespace-separated one-line notation.
    pub fn parse_one_line(text: &str) -> Result<Self> {
        let images = text
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>().map_err(|_| {
                    Error::MalformedInput(format!("`{tok}` is not a positive integer"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_images(&images)
    }

    /// Parses a product of disjoint cycles over `{1, …, n}`.
    ///
    /// Elements inside a cycle are separated by whitespace or commas. A cycle
    /// written as a single run of digits, such as `(132)`, is read one digit
    /// per element. Omitted elements are fixed points; `""` and `"()"` both
    /// denote the identity.
    pub fn parse_cycles(text: &str, n: usize) -> Result<Self> {
        let cycles = parse_cycle_list(text)?;
        let mut images: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        for cycle in &cycles {
            for &e in cycle {
                if e == 0 || e > n {
                    return Err(Error::OutOfRange {
                        element: e,
                        degree: n,
                    });
                }
                if core::mem::replace(&mut used[e - 1], true) {
                    return Err(Error::RepeatedElement(e));
                }
            }
            for (k, &e) in cycle.iter().enumerate() {
                let next = cycle[(k + 1) % cycle.len()];
                images[e - 1] = next - 1;
            }
        }
        Ok(Permutation { images })
    }

    /// Degree `n`.
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// `σ(i)` for 1-based `i`.
    ///
    /// Panics if `i` is outside `1..=n`.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1] + 1
    }

    /// 1-based one-line images.
    pub fn images(&self) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.images.iter().map(|&v| v + 1)
    }

    /// 0-based image table, for index arithmetic.
    pub fn zero_based(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { images: inv }
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        check_degree(self.degree(), other.degree())?;
        Ok(Permutation {
            images: other.images.iter().map(|&v| self.images[v]).collect(),
        })
    }

    /// True iff `σ ∘ σ = id`. The identity counts.
    pub fn is_involution(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &v)| self.images[v] == i)
    }

    pub fn decompose(&self) -> CycleDecomposition {
        CycleDecomposition::from_cycles(self.degree(), self.cycles())
    }

    /// All cycles, fixed points included, in canonical rotation and sorted by
    /// their minima.
    pub fn cycles(&self) -> Vec<Cycle> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut elements = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                elements.push(i + 1);
                i = self.images[i];
            }
            // `start` is the smallest unvisited index, so rotation is already canonical.
            out.push(Cycle { elements });
        }
        out
    }

    /// Cycles of length at least two.
    pub fn nontrivial_cycles(&self) -> Vec<Cycle> {
        self.cycles().into_iter().filter(|c| c.len() >= 2).collect()
    }

    /// One-line notation, e.g. `"3 1 2"`.
    pub fn to_one_line(&self) -> String {
        let mut s = String::new();
        for (k, v) in self.images().enumerate() {
            if k > 0 {
                s.push(' ');
            }
            s.push_str(&format!("{v}"));
        }
        s
    }

    /// Every permutation of degree `n` in lexicographic order of one-line
    /// notation.
    pub fn all(n: usize) -> AllPermutations {
        AllPermutations {
            next: Some((0..n).collect()),
        }
    }
}

/// Cycle notation without fixed points; the identity prints as `()`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.nontrivial_cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in &cycles {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), self)
    }
}

/// Lexicographic enumeration of `S_n`, see [`Permutation::all`].
#[derive(Debug, Clone)]
pub struct AllPermutations {
    next: Option<Vec<usize>>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_lexicographic(&mut succ) {
            self.next = Some(succ);
        }
        Some(Permutation { images: current })
    }
}

fn next_lexicographic(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// Splits cycle notation into element lists without range checks.
fn parse_cycle_list(text: &str) -> Result<Vec<Vec<usize>>> {
    let mut cycles = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let Some(body) = rest.strip_prefix('(') else {
            return Err(Error::MalformedInput(format!("expected `(` at `{rest}`")));
        };
        let Some(close) = body.find(')') else {
            return Err(Error::MalformedInput("unclosed `(`".into()));
        };
        let inner = &body[..close];
        if inner.contains('(') {
            return Err(Error::MalformedInput("nested `(`".into()));
        }
        let tokens: Vec<&str> = inner
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .collect();
        let mut elements = Vec::new();
        if tokens.len() == 1 && tokens[0].len() > 1 && tokens[0].bytes().all(|b| b.is_ascii_digit())
        {
            // compact form, e.g. (132)
            elements.extend(tokens[0].bytes().map(|b| usize::from(b - b'0')));
        } else {
            for tok in tokens {
                let e = tok.parse::<usize>().map_err(|_| {
                    Error::MalformedInput(format!("`{tok}` is not a positive integer"))
                })?;
                elements.push(e);
            }
        }
        if let Some(dup) = first_duplicate(&elements) {
            return Err(Error::RepeatedElement(dup));
        }
        if !elements.is_empty() {
            cycles.push(elements);
        }
        rest = body[close + 1..].trim_start();
    }
    Ok(cycles)
}

fn first_duplicate(elements: &[usize]) -> Option<usize> {
    let mut seen = BTreeSet::new();
    elements.iter().copied().find(|&e| !seen.insert(e))
}

/// Largest element mentioned in cycle notation (0 for the identity).
///
/// Used by front ends that infer the degree from the text.
pub fn max_cycle_element(text: &str) -> Result<usize> {
    Ok(parse_cycle_list(text)?
        .iter()
        .flatten()
        .copied()
        .max()
        .unwrap_or(0))
}

/// A cycle `(c_1 c_2 … c_ℓ)` with its minimum element first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle {
    elements: Vec<usize>,
}

impl Cycle {
    /// Validates distinctness and rotates the minimum to the front.
    pub fn new(mut elements: Vec<usize>) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::MalformedInput("empty cycle".into()));
        }
        if elements.contains(&0) {
            return Err(Error::OutOfRange {
                element: 0,
                degree: elements.len(),
            });
        }
        if let Some(dup) = first_duplicate(&elements) {
            return Err(Error::RepeatedElement(dup));
        }
        let min_pos = (0..elements.len())
            .min_by_key(|&k| elements[k])
            .unwrap_or(0);
        elements.rotate_left(min_pos);
        Ok(Cycle { elements })
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn min(&self) -> usize {
        self.elements[0]
    }

    pub fn contains(&self, e: usize) -> bool {
        self.elements.contains(&e)
    }

    /// The reversed cycle, again in canonical rotation.
    pub fn inverse(&self) -> Cycle {
        let mut elements = Vec::with_capacity(self.elements.len());
        if let Some((&first, rest)) = self.elements.split_first() {
            elements.push(first);
            elements.extend(rest.iter().rev());
        }
        Cycle { elements }
    }

    /// Consecutive pairs `(c_k, c_{k+1})`, wrapping around.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let l = self.elements.len();
        (0..l).map(move |k| (self.elements[k], self.elements[(k + 1) % l]))
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, e) in self.elements.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The sets `C_ℓ(σ)` for `ℓ = 1, …, n`; `C_1` holds the fixed points as
/// singleton cycles. Lengths with no cycles are absent from the map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleDecomposition {
    degree: usize,
    by_length: BTreeMap<usize, BTreeSet<Cycle>>,
}

impl CycleDecomposition {
    fn from_cycles(degree: usize, cycles: Vec<Cycle>) -> Self {
        let mut by_length: BTreeMap<usize, BTreeSet<Cycle>> = BTreeMap::new();
        for c in cycles {
            by_length.entry(c.len()).or_default().insert(c);
        }
        CycleDecomposition { degree, by_length }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn by_length(&self) -> &BTreeMap<usize, BTreeSet<Cycle>> {
        &self.by_length
    }

    /// `C_ℓ`, possibly empty.
    pub fn of_length(&self, len: usize) -> impl Iterator<Item = &Cycle> {
        self.by_length.get(&len).into_iter().flatten()
    }

    pub fn fixed_points(&self) -> impl Iterator<Item = usize> + '_ {
        self.of_length(1).map(Cycle::min)
    }

    /// Every cycle of length ≥ 2.
    pub fn nontrivial(&self) -> impl Iterator<Item = &Cycle> {
        self.by_length.range(2..).flat_map(|(_, set)| set.iter())
    }

    pub fn iter(&self) -> impl Iterator<Item = &Cycle> {
        self.by_length.values().flatten()
    }

    /// `C_k(self) ⊆ C_k(other)` for every `k ≥ 2`.
    pub fn is_included_in(&self, other: &Self) -> bool {
        self.by_length.range(2..).all(|(len, set)| {
            other
                .by_length
                .get(len)
                .is_some_and(|theirs| set.is_subset(theirs))
        })
    }

    /// Rebuilds the permutation.
    pub fn recompose(&self) -> Permutation {
        let mut images: Vec<usize> = (0..self.degree).collect();
        for c in self.iter() {
            for (a, b) in c.arcs() {
                images[a - 1] = b - 1;
            }
        }
        Permutation { images }
    }
}
