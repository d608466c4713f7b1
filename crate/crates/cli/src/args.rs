//! Permutation arguments as typed on the command line.

use psdiag::perm::max_cycle_element;
use psdiag::Permutation;

/// Cycle notation if the text has a `(` or is blank, one-line otherwise.
pub fn is_cycle_notation(text: &str) -> bool {
    text.contains('(') || text.trim().is_empty()
}

fn one_line_len(text: &str) -> usize {
    text.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .count()
}

/// Degree implied by a set of arguments: `explicit` wins, then the length of
/// any one-line argument, then the largest element in cycle notation.
pub fn infer_degree(texts: &[&str], explicit: Option<usize>) -> psdiag::Result<usize> {
    if let Some(n) = explicit {
        return Ok(n);
    }
    if let Some(t) = texts.iter().find(|t| !is_cycle_notation(t)) {
        return Ok(one_line_len(t));
    }
    let mut n = 0;
    for t in texts {
        n = n.max(max_cycle_element(t)?);
    }
    Ok(n)
}

pub fn parse_permutation(text: &str, n: usize) -> psdiag::Result<Permutation> {
    if is_cycle_notation(text) {
        Permutation::parse_cycles(text, n)
    } else {
        Permutation::parse_one_line(text)
    }
}
