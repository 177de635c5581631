//! Real spectra of symmetric integer matrices.
//!
//! Eigenvalues are computed by cyclic Jacobi rotations, which preserve
//! symmetry and the trace by construction and are entirely self-contained;
//! the matrices in this crate are tiny, so nothing faster is warranted.
//! Spectra are stored sorted descending.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::matrix::IntMatrix;

/// Iteration stop: off-diagonal Frobenius norm below this value.
pub const DEFAULT_SOLVER_TOLERANCE: f64 = 1e-10;
/// Eigenvalues with absolute value below this count as zero when comparing
/// nonzero spectra.
pub const DEFAULT_ZERO_TOLERANCE: f64 = 1e-8;
/// Tolerance for pairing two sorted spectra value by value.
pub const SPECTRUM_PAIR_TOLERANCE: f64 = 1e-8;
/// Hard cap on Jacobi sweeps; exceeding it is reported, never silent.
pub const MAX_SWEEPS: usize = 100;

#[cfg(feature = "std")]
#[inline]
fn sqrt(x: f64) -> f64 {
    x.sqrt()
}

#[cfg(all(not(feature = "std"), feature = "libm"))]
#[inline]
fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

#[cfg(all(not(feature = "std"), not(feature = "libm")))]
compile_error!("ohg-core needs either the `std` or the `libm` feature for eigenvalue computation");

/// Real eigenvalues sorted descending.
#[derive(Clone, Debug)]
pub struct Spectrum {
    values: Vec<f64>,
    zero_tolerance: f64,
}

impl Spectrum {
    pub fn new(mut values: Vec<f64>) -> Self {
        values.sort_by(|a, b| b.total_cmp(a));
        Spectrum {
            values,
            zero_tolerance: DEFAULT_ZERO_TOLERANCE,
        }
    }

    pub fn with_zero_tolerance(mut self, tol: f64) -> Self {
        self.zero_tolerance = tol;
        self
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Largest eigenvalue, `None` for the empty spectrum.
    pub fn max(&self) -> Option<f64> {
        self.values.first().copied()
    }

    /// Smallest eigenvalue.
    pub fn min(&self) -> Option<f64> {
        self.values.last().copied()
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }

    pub fn zero_tolerance(&self) -> f64 {
        self.zero_tolerance
    }

    /// Values with `|value| >= zero_tolerance`, still sorted descending.
    pub fn nonzero(&self) -> Vec<f64> {
        self.values
            .iter()
            .copied()
            .filter(|v| v.abs() >= self.zero_tolerance)
            .collect()
    }

    fn format_value(v: f64) -> String {
        use alloc::string::ToString;
        let s = alloc::format!("{v:.6}");
        if s == "-0.000000" {
            "0.000000".to_string()
        } else {
            s
        }
    }
}

/// One value per line, fixed 6-decimal format.
impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            f.write_str(&Spectrum::format_value(*v))?;
        }
        Ok(())
    }
}

fn off_diagonal_norm(n: usize, a: &[f64]) -> f64 {
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                sum += a[i * n + j] * a[i * n + j];
            }
        }
    }
    sqrt(sum)
}

/// Cyclic Jacobi on a symmetric matrix given as a row-major slice. Returns
/// the eigenvalues unsorted.
pub fn jacobi_eigenvalues(n: usize, data: &[f64], tol: f64) -> Result<Vec<f64>, Error> {
    assert_eq!(data.len(), n * n, "matrix data must be n*n entries");
    for i in 0..n {
        for j in (i + 1)..n {
            if data[i * n + j] != data[j * n + i] {
                return Err(Error::NotSymmetric { row: i, col: j });
            }
        }
    }
    let mut a: Vec<f64> = data.to_vec();
    for sweep in 0..MAX_SWEEPS {
        if off_diagonal_norm(n, &a) < tol {
            return Ok((0..n).map(|i| a[i * n + i]).collect());
        }
        for p in 0..n.saturating_sub(1) {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = {
                    let d = theta.abs() + sqrt(theta * theta + 1.0);
                    if theta >= 0.0 {
                        1.0 / d
                    } else {
                        -1.0 / d
                    }
                };
                let c = 1.0 / sqrt(t * t + 1.0);
                let s = t * c;
                for j in 0..n {
                    if j == p || j == q {
                        continue;
                    }
                    let ajp = a[j * n + p];
                    let ajq = a[j * n + q];
                    let new_p = c * ajp - s * ajq;
                    let new_q = s * ajp + c * ajq;
                    a[j * n + p] = new_p;
                    a[p * n + j] = new_p;
                    a[j * n + q] = new_q;
                    a[q * n + j] = new_q;
                }
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
            }
        }
        let _ = sweep;
    }
    let off = off_diagonal_norm(n, &a);
    if off < tol {
        return Ok((0..n).map(|i| a[i * n + i]).collect());
    }
    Err(Error::NoConvergence {
        sweeps: MAX_SWEEPS,
        off_norm: off,
    })
}

/// All eigenvalues of a symmetric integer matrix, sorted descending.
/// Symmetry is checked exactly.
pub fn symmetric_eigenvalues(m: &IntMatrix, tol: f64) -> Result<Spectrum, Error> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    let data: Vec<f64> = m.entries().iter().map(|&x| x as f64).collect();
    let values = jacobi_eigenvalues(n, &data, tol)?;
    Ok(Spectrum::new(values))
}

pub fn symmetric_eigenvalues_default(m: &IntMatrix) -> Result<Spectrum, Error> {
    symmetric_eigenvalues(m, DEFAULT_SOLVER_TOLERANCE)
}

/// Pairs two sorted spectra value by value within `tol`.
pub fn spectra_match(a: &Spectrum, b: &Spectrum, tol: f64) -> bool {
    lists_match(a.values(), b.values(), tol)
}

fn lists_match(a: &[f64], b: &[f64], tol: f64) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
}

/// Strips near-zero values from both spectra (each by its own zero
/// tolerance) and multiset-matches the rest within the pairing tolerance.
pub fn nonzero_spectra_equal(a: &Spectrum, b: &Spectrum) -> bool {
    lists_match(&a.nonzero(), &b.nonzero(), SPECTRUM_PAIR_TOLERANCE)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    /// Closed-form eigenvalues of [[a, b], [b, d]].
    fn closed_form_2x2(a: f64, b: f64, d: f64) -> (f64, f64) {
        let mean = (a + d) / 2.0;
        let gap = ((a - d) * (a - d) / 4.0 + b * b).sqrt();
        (mean + gap, mean - gap)
    }

    #[test]
    fn p3_laplacian_spectrum() {
        // L(P3) = [[1,1,0],[1,2,-1],[0,-1,1]], characteristic polynomial
        // x(x-1)(x-3).
        let l = IntMatrix::from_rows(&[vec![1, 1, 0], vec![1, 2, -1], vec![0, -1, 1]]).unwrap();
        let spec = symmetric_eigenvalues_default(&l).unwrap();
        let expected = [3.0, 1.0, 0.0];
        for (got, want) in spec.values().iter().zip(expected) {
            assert!((got - want).abs() < 1e-8, "{got} vs {want}");
        }
        assert!((spec.sum() - 4.0).abs() < 1e-8 * 3.0);
    }

    #[test]
    fn p3_dual_laplacian_spectrum() {
        let l = IntMatrix::from_rows(&[vec![2, 1], vec![1, 2]]).unwrap();
        let spec = symmetric_eigenvalues_default(&l).unwrap();
        let (hi, lo) = closed_form_2x2(2.0, 1.0, 2.0);
        assert!((spec.values()[0] - hi).abs() < 1e-10);
        assert!((spec.values()[1] - lo).abs() < 1e-10);
        assert!((hi - 3.0).abs() < 1e-12);
        assert!((lo - 1.0).abs() < 1e-12);
    }

    #[test]
    fn zero_and_trivial_matrices() {
        let spec = symmetric_eigenvalues_default(&IntMatrix::zeros(3, 3)).unwrap();
        assert_eq!(spec.values(), &[0.0, 0.0, 0.0]);
        let spec = symmetric_eigenvalues_default(&IntMatrix::zeros(0, 0)).unwrap();
        assert!(spec.is_empty());
        let spec =
            symmetric_eigenvalues_default(&IntMatrix::from_rows(&[vec![7]]).unwrap()).unwrap();
        assert_eq!(spec.values(), &[7.0]);
    }

    #[test]
    fn rejects_bad_input() {
        let m = IntMatrix::from_rows(&[vec![0, 1], vec![2, 0]]).unwrap();
        assert!(matches!(
            symmetric_eigenvalues_default(&m),
            Err(Error::NotSymmetric { row: 0, col: 1 })
        ));
        assert!(matches!(
            symmetric_eigenvalues_default(&IntMatrix::zeros(2, 3)),
            Err(Error::NotSquare { .. })
        ));
    }

    #[test]
    fn nonzero_comparison_strips_zeros() {
        let a = Spectrum::new(vec![3.0, 1.0, 0.0]);
        let b = Spectrum::new(vec![3.0 + 1e-10, 1.0 - 1e-10]);
        assert!(nonzero_spectra_equal(&a, &b));
        assert!(nonzero_spectra_equal(
            &Spectrum::new(vec![0.0]),
            &Spectrum::new(vec![])
        ));
        assert!(!nonzero_spectra_equal(
            &Spectrum::new(vec![2.0]),
            &Spectrum::new(vec![3.0])
        ));
    }

    #[test]
    fn random_2x2_matches_closed_form() {
        for a in -3..=3_i64 {
            for b in -3..=3_i64 {
                for d in -3..=3_i64 {
                    let m = IntMatrix::from_rows(&[vec![a, b], vec![b, d]]).unwrap();
                    let spec = symmetric_eigenvalues_default(&m).unwrap();
                    let (hi, lo) = closed_form_2x2(a as f64, b as f64, d as f64);
                    assert!((spec.values()[0] - hi).abs() < 1e-8);
                    assert!((spec.values()[1] - lo).abs() < 1e-8);
                    let trace = (a + d) as f64;
                    assert!((spec.sum() - trace).abs() <= 1e-8 * 2.0);
                }
            }
        }
    }

    #[test]
    fn display_uses_six_decimals() {
        let s = Spectrum::new(vec![3.0, 1.0, -1e-15]);
        assert_eq!(alloc::format!("{s}"), "3.000000\n1.000000\n0.000000");
    }
}
