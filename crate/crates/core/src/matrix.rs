//! Dense complex matrices, PSD certification and generalized diagonals.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::error::check_degree;
use crate::perm::{Cycle, Permutation};
use crate::{Error, Result};

mod eigen;

pub use eigen::hermitian_eigenvalues;

/// Hermitian and eigenvalue tolerance, relative to the largest entry.
pub const DEFAULT_TOL: f64 = 1e-10;
/// Slack allowed in log-magnitude comparisons.
pub const LOG_SLACK: f64 = 1e-9;
/// A unit phase with `|Im| ≤ REAL_TOL` counts as real.
pub const REAL_TOL: f64 = 1e-12;

/// Row-major `n × n` complex matrix with finite entries.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    n: usize,
    entries: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn new(n: usize, entries: Vec<Complex64>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::MalformedInput(format!(
                "expected {} entries for a {n}x{n} matrix, got {}",
                n * n,
                entries.len()
            )));
        }
        if let Some(k) = entries
            .iter()
            .position(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::MalformedInput(format!(
                "entry ({}, {}) is not finite",
                k / n + 1,
                k % n + 1
            )));
        }
        Ok(ComplexMatrix { n, entries })
    }

    pub fn from_real(n: usize, entries: &[f64]) -> Result<Self> {
        Self::new(n, entries.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = vec![Complex64::new(0.0, 0.0); n * n];
        for i in 0..n {
            entries[i * n + i] = Complex64::new(1.0, 0.0);
        }
        ComplexMatrix { n, entries }
    }

    /// Skips the finiteness scan; callers guarantee finite entries.
    pub(crate) fn from_parts(n: usize, entries: Vec<Complex64>) -> Self {
        debug_assert_eq!(entries.len(), n * n);
        ComplexMatrix { n, entries }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// Entry `(i, j)`, 0-based.
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Complex64]> {
        self.entries.chunks(self.n.max(1)).take(self.n)
    }

    pub fn is_real(&self) -> bool {
        self.entries.iter().all(|z| z.im == 0.0)
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn max_abs(&self) -> f64 {
        self.entries.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// `max |x_ij − conj(x_ji)|`.
    pub fn hermitian_defect(&self) -> f64 {
        let mut defect: f64 = 0.0;
        for i in 0..self.n {
            for j in i..self.n {
                defect = defect.max((self.get(i, j) - self.get(j, i).conj()).norm());
            }
        }
        defect
    }

    /// `(X + X*) / 2`.
    pub fn hermitian_part(&self) -> ComplexMatrix {
        let n = self.n;
        let mut entries = vec![Complex64::new(0.0, 0.0); n * n];
        for i in 0..n {
            for j in 0..n {
                entries[i * n + j] = (self.get(i, j) + self.get(j, i).conj()) * 0.5;
            }
        }
        ComplexMatrix { n, entries }
    }

    /// Plain product `Π_k x_{k,σ(k)}` in linear arithmetic.
    pub fn diagonal_product(&self, sigma: &Permutation) -> Result<Complex64> {
        check_degree(sigma.degree(), self.n)?;
        Ok(sigma
            .zero_based()
            .iter()
            .enumerate()
            .fold(Complex64::new(1.0, 0.0), |acc, (k, &j)| {
                acc * self.get(k, j)
            }))
    }
}

/// A generalized diagonal `X_σ` held as log-magnitude and unit phase.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiagonalValue {
    /// `ln |X_σ|`, or `-∞` when a factor is exactly zero.
    pub log_magnitude: f64,
    /// `X_σ / |X_σ|`; `None` for a zero product.
    pub phase: Option<Complex64>,
    pub is_real: bool,
    /// Sign of a real nonzero product.
    pub sign: Option<i8>,
}

impl DiagonalValue {
    pub fn zero() -> Self {
        DiagonalValue {
            log_magnitude: f64::NEG_INFINITY,
            phase: None,
            is_real: true,
            sign: None,
        }
    }

    fn from_parts(log_magnitude: f64, phase: Complex64) -> Self {
        let is_real = phase.im.abs() <= REAL_TOL;
        DiagonalValue {
            log_magnitude,
            phase: Some(phase),
            is_real,
            sign: is_real.then_some(if phase.re >= 0.0 { 1 } else { -1 }),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.phase.is_none()
    }

    pub fn magnitude(&self) -> f64 {
        libm::exp(self.log_magnitude)
    }

    pub fn to_complex(&self) -> Complex64 {
        self.phase
            .map_or(Complex64::new(0.0, 0.0), |p| p * self.magnitude())
    }

    /// Signed real value, when the product is real.
    pub fn to_real(&self) -> Option<f64> {
        if self.is_zero() {
            return Some(0.0);
        }
        self.sign.map(|s| f64::from(s) * self.magnitude())
    }

    /// `|self| ≤ |other|` up to `slack` in log domain.
    pub fn abs_leq(&self, other: &Self, slack: f64) -> bool {
        self.log_magnitude == f64::NEG_INFINITY || self.log_magnitude <= other.log_magnitude + slack
    }

    /// `|self| = |other|` up to `slack`; two zeros compare equal.
    pub fn abs_eq(&self, other: &Self, slack: f64) -> bool {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => true,
            (false, false) => (self.log_magnitude - other.log_magnitude).abs() <= slack,
            _ => false,
        }
    }

    /// `self ≤ other` as real numbers, magnitudes compared in log domain.
    /// Non-real values never compare.
    pub fn real_leq(&self, other: &Self, slack: f64) -> bool {
        let sign = |v: &Self| if v.is_zero() { Some(0) } else { v.sign };
        match (sign(self), sign(other)) {
            (Some(a), Some(b)) if a < b => true,
            (Some(0), Some(0)) => true,
            (Some(1), Some(1)) => self.abs_leq(other, slack),
            (Some(-1), Some(-1)) => other.abs_leq(self, slack),
            _ => false,
        }
    }
}

/// `X_σ = Π_k x_{k,σ(k)}`, magnitude accumulated in log domain.
pub fn generalized_diagonal(x: &ComplexMatrix, sigma: &Permutation) -> Result<DiagonalValue> {
    check_degree(sigma.degree(), x.dim())?;
    let mut log_magnitude = 0.0;
    let mut phase = Complex64::new(1.0, 0.0);
    for (k, &j) in sigma.zero_based().iter().enumerate() {
        let z = x.get(k, j);
        let r = z.norm();
        if r == 0.0 {
            return Ok(DiagonalValue::zero());
        }
        log_magnitude += libm::log(r);
        phase *= z / r;
        phase /= phase.norm();
    }
    Ok(DiagonalValue::from_parts(log_magnitude, phase))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PsdVerdict {
    PD,
    PSD,
    NotPSD,
    NotHermitian,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PsdCertificate {
    pub hermitian_defect: f64,
    /// Smallest eigenvalue of the Hermitian part; `+∞` for the empty matrix.
    pub min_eigenvalue: f64,
    /// Largest entry modulus, or 1 for the zero matrix.
    pub scale: f64,
    pub verdict: PsdVerdict,
}

impl PsdCertificate {
    /// PSD or PD.
    pub fn is_psd(&self) -> bool {
        matches!(self.verdict, PsdVerdict::PD | PsdVerdict::PSD)
    }
}

/// Classifies `x` as PD, PSD, not PSD, or not Hermitian.
///
/// Both the Hermitian defect and the smallest eigenvalue are measured against
/// `tol · scale`, where `scale` is the largest entry modulus.
pub fn certify(x: &ComplexMatrix, tol: f64) -> PsdCertificate {
    let max = x.max_abs();
    let scale = if max > 0.0 { max } else { 1.0 };
    let hermitian_defect = x.hermitian_defect();
    let min_eigenvalue = hermitian_eigenvalues(&x.hermitian_part())
        .first()
        .copied()
        .unwrap_or(f64::INFINITY);
    let bound = tol * scale;
    let verdict = if hermitian_defect > bound {
        PsdVerdict::NotHermitian
    } else if min_eigenvalue > bound {
        PsdVerdict::PD
    } else if min_eigenvalue >= -bound {
        PsdVerdict::PSD
    } else {
        PsdVerdict::NotPSD
    };
    PsdCertificate {
        hermitian_defect,
        min_eigenvalue,
        scale,
        verdict,
    }
}

/// A matrix together with its certificate.
#[derive(Debug, Clone, PartialEq)]
pub struct CertifiedMatrix {
    matrix: ComplexMatrix,
    certificate: PsdCertificate,
    tol: f64,
}

impl CertifiedMatrix {
    pub fn new(matrix: ComplexMatrix, tol: f64) -> Self {
        let certificate = certify(&matrix, tol);
        CertifiedMatrix {
            matrix,
            certificate,
            tol,
        }
    }

    pub fn with_default_tol(matrix: ComplexMatrix) -> Self {
        Self::new(matrix, DEFAULT_TOL)
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn certificate(&self) -> &PsdCertificate {
        &self.certificate
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.matrix
    }

    fn require_psd(&self) -> Result<()> {
        if self.certificate.is_psd() {
            Ok(())
        } else {
            Err(Error::NotCertified)
        }
    }

    fn abs_floor(&self) -> f64 {
        self.tol * self.certificate.scale
    }

    /// `|x_ij|² ≤ x_ii x_jj` for every pair, with relative slack
    /// [`LOG_SLACK`] and an absolute floor of `(tol · scale)²`.
    pub fn hadamard_pair_check(&self) -> Result<bool> {
        self.require_psd()?;
        let x = &self.matrix;
        let floor = self.abs_floor() * self.abs_floor();
        for i in 0..x.dim() {
            let xii = x.get(i, i).re.max(0.0);
            for j in 0..x.dim() {
                let xjj = x.get(j, j).re.max(0.0);
                let rhs = xii * xjj;
                if x.get(i, j).norm_sqr() > rhs + LOG_SLACK * rhs + floor {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `|x_{c1,c2} x_{c2,c3} ⋯ x_{cℓ,c1}| ≤ |x_{c1,c1}| ⋯ |x_{cℓ,cℓ}|`, compared
    /// in log domain with slack [`LOG_SLACK`].
    pub fn cycle_factor_check(&self, cycle: &Cycle) -> Result<bool> {
        self.require_psd()?;
        let x = &self.matrix;
        if let Some(&e) = cycle.elements().iter().find(|&&e| e > x.dim()) {
            return Err(Error::OutOfRange {
                element: e,
                degree: x.dim(),
            });
        }
        let log_abs = |i: usize, j: usize| {
            let r = x.get(i - 1, j - 1).norm();
            if r == 0.0 {
                f64::NEG_INFINITY
            } else {
                libm::log(r)
            }
        };
        let lhs: f64 = cycle.arcs().map(|(a, b)| log_abs(a, b)).sum();
        let rhs: f64 = cycle.elements().iter().map(|&c| log_abs(c, c)).sum();
        if lhs == f64::NEG_INFINITY {
            return Ok(true);
        }
        if rhs == f64::NEG_INFINITY {
            // zero diagonal: off-diagonal factors must be rounding noise
            let bound = libm::log(self.abs_floor())
                + (cycle.len() as f64 - 1.0) * libm::log(self.certificate.scale);
            return Ok(lhs <= bound);
        }
        Ok(lhs <= rhs + LOG_SLACK)
    }
}
