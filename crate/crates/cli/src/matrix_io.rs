//! Plain-text matrix files.
//!
//! ```text
//! 3
//! 2 1+0.5i 0
//! 1-0.5i 2 0
//! 0 0 1e-3
//! ```
//!
//! The first line is the dimension, followed by one line per row. An entry is
//! a real literal, `a+bi`, `a-bi`, or a bare imaginary `bi`. The writer emits
//! shortest round-trip decimal forms, so values survive a round trip exactly.

use num_complex::Complex64;
use psdiag::ComplexMatrix;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum MatrixFileError {
    #[error("empty matrix file")]
    Empty,
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error(transparent)]
    Invalid(#[from] psdiag::Error),
}

fn syntax(line: usize, msg: impl Into<String>) -> MatrixFileError {
    MatrixFileError::Syntax {
        line,
        msg: msg.into(),
    }
}

/// Parses one entry; `None` if it is not a number.
pub fn parse_entry(tok: &str) -> Option<Complex64> {
    let Some(body) = tok.strip_suffix('i') else {
        return tok.parse::<f64>().ok().map(|re| Complex64::new(re, 0.0));
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let imag = |s: &str| match s {
        "" | "+" => Some(1.0),
        "-" => Some(-1.0),
        _ => s.parse::<f64>().ok(),
    };
    match split {
        Some(k) => Some(Complex64::new(body[..k].parse().ok()?, imag(&body[k..])?)),
        None => Some(Complex64::new(0.0, imag(body)?)),
    }
}

pub fn parse_matrix(text: &str) -> Result<ComplexMatrix, MatrixFileError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (first, header) = lines.next().ok_or(MatrixFileError::Empty)?;
    let n: usize = header
        .parse()
        .map_err(|_| syntax(first, format!("expected the dimension, found `{header}`")))?;
    let mut entries = Vec::with_capacity(n * n);
    for row in 0..n {
        let (line, content) = lines
            .next()
            .ok_or_else(|| syntax(first + row + 1, format!("missing row {} of {n}", row + 1)))?;
        let before = entries.len();
        for tok in content.split_whitespace() {
            entries
                .push(parse_entry(tok).ok_or_else(|| syntax(line, format!("bad entry `{tok}`")))?);
        }
        let got = entries.len() - before;
        if got != n {
            return Err(syntax(line, format!("expected {n} entries, found {got}")));
        }
    }
    if let Some((line, _)) = lines.next() {
        return Err(syntax(line, "trailing content after the last row"));
    }
    Ok(ComplexMatrix::new(n, entries)?)
}

pub fn format_entry(z: Complex64) -> String {
    if z.im == 0.0 {
        format!("{:?}", z.re)
    } else if z.im.is_sign_negative() {
        format!("{:?}-{:?}i", z.re, -z.im)
    } else {
        format!("{:?}+{:?}i", z.re, z.im)
    }
}

pub fn write_matrix(x: &ComplexMatrix) -> String {
    let mut out = format!("{}\n", x.dim());
    for row in x.rows() {
        let cells: Vec<String> = row.iter().map(|&z| format_entry(z)).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}
