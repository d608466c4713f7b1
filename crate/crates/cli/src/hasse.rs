//! Covering relations of the cycle orders, rendered as DOT.

use std::collections::BTreeSet;
use std::fmt::Write;

use psdiag::order::canonicalize_class;
use psdiag::{Cycle, EquivClassRep, Permutation};

/// Sort key matching the printed label: nontrivial cycles, min-first.
fn label_key<'a>(cycles: impl IntoIterator<Item = &'a Cycle>) -> Vec<Vec<usize>> {
    let mut key: Vec<Vec<usize>> = cycles
        .into_iter()
        .filter(|c| c.len() >= 2)
        .map(|c| c.elements().to_vec())
        .collect();
    key.sort();
    key
}

/// Nodes in cycle notation and covering edges `(lower, upper)` by index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HasseGraph {
    pub nodes: Vec<String>,
    pub edges: Vec<(usize, usize)>,
}

/// Covering pairs of a partial order given by sorted up-sets (reflexive).
fn covers(up: &[Vec<usize>]) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for (a, ups) in up.iter().enumerate() {
        for &b in ups {
            if b == a {
                continue;
            }
            let between = ups
                .iter()
                .any(|&c| c != a && c != b && up[c].binary_search(&b).is_ok());
            if !between {
                edges.push((a, b));
            }
        }
    }
    edges
}

/// `≤_[c]` on the `~c`-classes of `S_n`, nodes sorted by representative.
pub fn class_hasse(n: usize) -> HasseGraph {
    let mut classes: Vec<EquivClassRep> = Permutation::all(n)
        .map(|p| canonicalize_class(&p))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    classes.sort_by_cached_key(|c| label_key(c.cycles()));
    let up: Vec<Vec<usize>> = classes
        .iter()
        .map(|a| {
            classes
                .iter()
                .enumerate()
                .filter(|(_, b)| a.is_below(b))
                .map(|(k, _)| k)
                .collect()
        })
        .collect();
    HasseGraph {
        nodes: classes.iter().map(ToString::to_string).collect(),
        edges: covers(&up),
    }
}

/// `≤_c` on the permutations of `S_n`, nodes sorted by cycle notation.
pub fn permutation_hasse(n: usize) -> HasseGraph {
    let mut perms: Vec<Permutation> = Permutation::all(n).collect();
    perms.sort_by_cached_key(|p| label_key(&p.cycles()));
    let decomps: Vec<_> = perms.iter().map(Permutation::decompose).collect();
    let up: Vec<Vec<usize>> = decomps
        .iter()
        .map(|a| {
            decomps
                .iter()
                .enumerate()
                .filter(|(_, b)| a.is_included_in(b))
                .map(|(k, _)| k)
                .collect()
        })
        .collect();
    HasseGraph {
        nodes: perms.iter().map(ToString::to_string).collect(),
        edges: covers(&up),
    }
}

impl HasseGraph {
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph {name} {{");
        out.push_str("  rankdir=BT;\n  node [shape=box];\n");
        for (k, label) in self.nodes.iter().enumerate() {
            let _ = writeln!(out, "  n{k} [label=\"{label}\"];");
        }
        for (a, b) in &self.edges {
            let _ = writeln!(out, "  n{a} -> n{b};");
        }
        out.push_str("}\n");
        out
    }
}
