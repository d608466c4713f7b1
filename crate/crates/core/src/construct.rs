//! Seeded Gram-matrix generators and the ε-Gram counterexample matrix.
//!
//! Random matrices are `B·B*` with `B` drawn entrywise from a standard normal
//! (real) or circular complex normal (independent parts scaled by `1/√2`).
//! The bit source is ChaCha20 (`rand_chacha::ChaCha20Rng`) keyed through
//! `SeedableRng::seed_from_u64`; both are specified algorithms, so a seed
//! yields the same matrix on every platform.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rand_distr::StandardNormal;

use crate::matrix::{certify, ComplexMatrix, PsdVerdict, DEFAULT_TOL};
use crate::{Error, Result};

/// Attempts before a PD request gives up.
pub const PD_RETRIES: usize = 32;
/// ε used when the caller does not choose one.
pub const DEFAULT_EPSILON: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    Real,
    Complex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    Psd,
    Pd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GeneratorSpec {
    pub n: usize,
    pub seed: u64,
    pub field: Field,
    pub kind: Kind,
}

/// Mixes a base seed with stream coordinates into an independent seed
/// (SplitMix64 finalizer applied per coordinate).
pub fn stream_seed(base: u64, coords: &[u64]) -> u64 {
    fn mix(mut z: u64) -> u64 {
        z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }
    coords.iter().fold(mix(base), |acc, &c| mix(acc ^ mix(c)))
}

/// `B·B*` for a Gaussian `B`; PD requests redraw until certified PD.
pub fn random_gram(spec: &GeneratorSpec) -> Result<ComplexMatrix> {
    let mut rng = ChaCha20Rng::seed_from_u64(spec.seed);
    let attempts = match spec.kind {
        Kind::Psd => 1,
        Kind::Pd => PD_RETRIES,
    };
    for _ in 0..attempts {
        let x = gram(spec.n, &gaussian_factor(spec.n, spec.field, &mut rng));
        if spec.kind == Kind::Psd || certify(&x, DEFAULT_TOL).verdict == PsdVerdict::PD {
            return Ok(x);
        }
    }
    Err(Error::GenerationFailed(attempts))
}

fn gaussian_factor<R: Rng>(n: usize, field: Field, rng: &mut R) -> Vec<Complex64> {
    let scale = core::f64::consts::FRAC_1_SQRT_2;
    (0..n * n)
        .map(|_| match field {
            Field::Real => Complex64::new(rng.sample(StandardNormal), 0.0),
            Field::Complex => {
                let re: f64 = rng.sample(StandardNormal);
                let im: f64 = rng.sample(StandardNormal);
                Complex64::new(re * scale, im * scale)
            }
        })
        .collect()
}

/// `B·B*` where the rows of `B` are the row-major `n × n` slice `b`.
///
/// Only the upper triangle is computed; the lower one is its conjugate, so
/// the result is exactly Hermitian with an exactly real diagonal.
fn gram(n: usize, b: &[Complex64]) -> ComplexMatrix {
    let mut out = vec![Complex64::new(0.0, 0.0); n * n];
    for i in 0..n {
        let row_i = &b[i * n..(i + 1) * n];
        out[i * n + i] = Complex64::new(row_i.iter().map(|z| z.norm_sqr()).sum(), 0.0);
        for j in i + 1..n {
            let row_j = &b[j * n..(j + 1) * n];
            let dot: Complex64 = row_i.iter().zip(row_j).map(|(u, v)| u * v.conj()).sum();
            out[i * n + j] = dot;
            out[j * n + i] = dot.conj();
        }
    }
    ComplexMatrix::from_parts(n, out)
}

/// Parameters of the ε-Gram matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CounterexampleSpec {
    n: usize,
    p: usize,
    q: usize,
    epsilon: f64,
}

impl CounterexampleSpec {
    /// `p`, `q` are distinct 1-based indices in `1..=n`; `0 < ε < 1`.
    pub fn new(n: usize, p: usize, q: usize, epsilon: f64) -> Result<Self> {
        for e in [p, q] {
            if e == 0 || e > n {
                return Err(Error::OutOfRange {
                    element: e,
                    degree: n,
                });
            }
        }
        if p == q {
            return Err(Error::MalformedInput(format!(
                "p and q must differ, both are {p}"
            )));
        }
        if !(epsilon > 0.0 && epsilon < 1.0) {
            return Err(Error::MalformedInput(format!(
                "epsilon {epsilon} is outside (0, 1)"
            )));
        }
        Ok(CounterexampleSpec { n, p, q, epsilon })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pq(&self) -> (usize, usize) {
        (self.p, self.q)
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }
}

/// The Gram matrix of
///
/// ```text
/// v_p = e_p + (ε/2) e_q
/// v_q = e_q + (ε/2) e_p
/// v_k = e_k + e_p + e_q   (k ∉ {p, q})
/// ```
///
/// It is real symmetric PD with `a_pq = a_qp = ε` and every other entry
/// above 1: `1 + ε/2` in rows `p`, `q`, `2` elsewhere off the diagonal, and
/// `3` or `1 + ε²/4` on it.
pub fn epsilon_gram(spec: &CounterexampleSpec) -> ComplexMatrix {
    let n = spec.n;
    let (p, q) = (spec.p - 1, spec.q - 1);
    let half = spec.epsilon / 2.0;
    let mut v = vec![0.0f64; n * n];
    for k in 0..n {
        let row = &mut v[k * n..(k + 1) * n];
        row[k] = 1.0;
        if k == p {
            row[q] = half;
        } else if k == q {
            row[p] = half;
        } else {
            row[p] = 1.0;
            row[q] = 1.0;
        }
    }
    let mut a = vec![Complex64::new(0.0, 0.0); n * n];
    for i in 0..n {
        for j in 0..n {
            let dot: f64 = (0..n).map(|t| v[i * n + t] * v[j * n + t]).sum();
            a[i * n + j] = Complex64::new(dot, 0.0);
        }
    }
    ComplexMatrix::from_parts(n, a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::CertifiedMatrix;

    fn spec(n: usize, seed: u64, field: Field, kind: Kind) -> GeneratorSpec {
        GeneratorSpec {
            n,
            seed,
            field,
            kind,
        }
    }

    #[test]
    fn gram_outputs_certify() {
        for seed in 0..50 {
            for field in [Field::Real, Field::Complex] {
                for kind in [Kind::Psd, Kind::Pd] {
                    let x = random_gram(&spec(5, seed, field, kind)).unwrap();
                    let c = certify(&x, DEFAULT_TOL);
                    assert!(c.is_psd(), "{c:?}");
                    if kind == Kind::Pd {
                        assert_eq!(c.verdict, PsdVerdict::PD);
                    }
                    assert_eq!(x.hermitian_defect(), 0.0);
                    if field == Field::Real {
                        assert!(x.is_real() && x.is_symmetric());
                    }
                }
            }
        }
    }

    #[test]
    fn complex_gram_is_not_real() {
        let x = random_gram(&spec(3, 1, Field::Complex, Kind::Psd)).unwrap();
        assert!(!x.is_real());
    }

    #[test]
    fn deterministic_per_seed() {
        let s = spec(4, 7, Field::Complex, Kind::Psd);
        assert_eq!(random_gram(&s).unwrap(), random_gram(&s).unwrap());
        let t = spec(4, 8, Field::Complex, Kind::Psd);
        assert_ne!(random_gram(&s).unwrap(), random_gram(&t).unwrap());
    }

    #[test]
    fn degenerate_sizes() {
        assert_eq!(
            random_gram(&spec(0, 1, Field::Real, Kind::Pd))
                .unwrap()
                .dim(),
            0
        );
        let one = random_gram(&spec(1, 1, Field::Real, Kind::Pd)).unwrap();
        assert!(one.get(0, 0).re > 0.0);
    }

    #[test]
    fn stream_seed_separates_coordinates() {
        let a = stream_seed(42, &[0, 1]);
        assert_ne!(a, stream_seed(42, &[1, 0]));
        assert_ne!(a, stream_seed(43, &[0, 1]));
        assert_eq!(a, stream_seed(42, &[0, 1]));
    }

    #[test]
    fn epsilon_gram_entries() {
        let eps = 1e-3;
        let a = epsilon_gram(&CounterexampleSpec::new(5, 2, 4, eps).unwrap());
        let at = |i: usize, j: usize| a.get(i - 1, j - 1).re;
        assert_eq!(at(2, 4), eps);
        assert_eq!(at(4, 2), eps);
        assert_eq!(at(2, 1), 1.0 + eps / 2.0);
        assert_eq!(at(4, 5), 1.0 + eps / 2.0);
        assert_eq!(at(1, 3), 2.0);
        assert_eq!(at(5, 5), 3.0);
        assert_eq!(at(2, 2), 1.0 + eps * eps / 4.0);
        assert_eq!(at(4, 4), 1.0 + eps * eps / 4.0);
        assert!(a.is_real() && a.is_symmetric());
        let cert = CertifiedMatrix::with_default_tol(a);
        assert_eq!(cert.certificate().verdict, PsdVerdict::PD);
    }

    #[test]
    fn counterexample_spec_validation() {
        assert!(CounterexampleSpec::new(3, 1, 1, 0.1).is_err());
        assert!(CounterexampleSpec::new(3, 0, 1, 0.1).is_err());
        assert!(CounterexampleSpec::new(3, 1, 4, 0.1).is_err());
        assert!(CounterexampleSpec::new(3, 1, 2, 0.0).is_err());
        assert!(CounterexampleSpec::new(3, 1, 2, 1.0).is_err());
        assert!(CounterexampleSpec::new(3, 1, 2, f64::NAN).is_err());
        assert!(CounterexampleSpec::new(2, 2, 1, 0.5).is_ok());
    }
}
