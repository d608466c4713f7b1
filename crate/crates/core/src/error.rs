use alloc::string::String;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    MalformedInput(String),
    #[error("not a bijection: {0}")]
    NotABijection(String),
    #[error("element {0} appears in more than one cycle")]
    RepeatedElement(usize),
    #[error("element {element} is outside 1..={degree}")]
    OutOfRange { element: usize, degree: usize },
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("matrix has no PSD certificate")]
    NotCertified,
    #[error("generation failed after {0} attempts")]
    GenerationFailed(usize),
    #[error("degree {n} exceeds the limit {limit}")]
    DegreeTooLarge { n: usize, limit: usize },
    #[error("the classes of the two permutations are comparable")]
    NotIncomparable,
    #[error("no (p, q) case applies to {0}")]
    CaseSearchFailed(String),
    #[error("epsilon search did not separate the diagonals after {0} halvings")]
    EpsilonExhausted(usize),
}

pub(crate) fn check_degree(left: usize, right: usize) -> Result<(), Error> {
    if left == right {
        Ok(())
    } else {
        Err(Error::DegreeMismatch { left, right })
    }
}
