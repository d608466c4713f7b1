//! Eigenvalues of Hermitian matrices by cyclic Jacobi rotation.
//!
//! `H = A + iB` is embedded as the real symmetric `[[A, -B], [B, A]]`, whose
//! spectrum is that of `H` with every eigenvalue doubled.

use alloc::vec;
use alloc::vec::Vec;

use super::ComplexMatrix;

const MAX_SWEEPS: usize = 64;

/// Ascending eigenvalues of `h`, which is assumed Hermitian (only the
/// Hermitian part influences the result).
pub fn hermitian_eigenvalues(h: &ComplexMatrix) -> Vec<f64> {
    let n = h.dim();
    let m = 2 * n;
    let mut a = vec![0.0; m * m];
    for i in 0..n {
        for j in 0..n {
            let z = h.get(i, j);
            a[i * m + j] = z.re;
            a[(n + i) * m + n + j] = z.re;
            a[i * m + n + j] = -z.im;
            a[(n + i) * m + j] = z.im;
        }
    }
    symmetrize(&mut a, m);
    let mut values = symmetric_eigenvalues(a, m);
    values.sort_by(f64::total_cmp);
    values.into_iter().step_by(2).collect()
}

fn symmetrize(a: &mut [f64], m: usize) {
    for i in 0..m {
        for j in i + 1..m {
            let avg = 0.5 * (a[i * m + j] + a[j * m + i]);
            a[i * m + j] = avg;
            a[j * m + i] = avg;
        }
    }
}

/// Unsorted eigenvalues of the real symmetric `m × m` row-major matrix.
pub(crate) fn symmetric_eigenvalues(mut a: Vec<f64>, m: usize) -> Vec<f64> {
    let total: f64 = a.iter().map(|x| x * x).sum();
    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..m)
            .flat_map(|i| (0..m).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i * m + j] * a[i * m + j])
            .sum();
        if off <= total * f64::EPSILON * f64::EPSILON || off == 0.0 {
            break;
        }
        for p in 0..m {
            for q in p + 1..m {
                let apq = a[p * m + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * m + q] - a[p * m + p]) / (2.0 * apq);
                let t = if theta >= 0.0 { 1.0 } else { -1.0 }
                    / (theta.abs() + libm::sqrt(theta * theta + 1.0));
                let c = 1.0 / libm::sqrt(t * t + 1.0);
                let s = t * c;
                for k in 0..m {
                    let (akp, akq) = (a[k * m + p], a[k * m + q]);
                    a[k * m + p] = c * akp - s * akq;
                    a[k * m + q] = s * akp + c * akq;
                }
                for k in 0..m {
                    let (apk, aqk) = (a[p * m + k], a[q * m + k]);
                    a[p * m + k] = c * apk - s * aqk;
                    a[q * m + k] = s * apk + c * aqk;
                }
            }
        }
    }
    (0..m).map(|i| a[i * m + i]).collect()
}
