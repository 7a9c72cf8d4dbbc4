//! Numeric checks of block-matrix spectral identities.

use super::{multiset_distance, symmetric_eigenvalues, Matrix, DEFAULT_TOL};
use crate::error::{Error, Result};

/// Gap between the spectrum of `[[b0, b1], [b1, b0]]` and the union of the
/// spectra of `b0 + b1` and `b0 - b1`.
pub fn block2_spectrum_deviation(b0: &Matrix<f64>, b1: &Matrix<f64>) -> Result<f64> {
    if b0.rows() != b1.rows() || b0.cols() != b1.cols() || !b0.is_square() {
        return Err(Error::ShapeMismatch(format!(
            "blocks {}x{} and {}x{} must be square of the same order",
            b0.rows(),
            b0.cols(),
            b1.rows(),
            b1.cols()
        )));
    }
    let whole = Matrix::block2(b0, b1, b1, b0)?;
    let full = symmetric_eigenvalues(&whole, DEFAULT_TOL)?;
    let mut halves = symmetric_eigenvalues(&b0.try_add(b1)?, DEFAULT_TOL)?;
    halves.extend(symmetric_eigenvalues(&b0.try_sub(b1)?, DEFAULT_TOL)?);
    Ok(multiset_distance(&full, &halves))
}

/// True when the block identity holds to within `tol * max(1, ‖M‖_F)`.
pub fn block2_spectrum_check(b0: &Matrix<f64>, b1: &Matrix<f64>, tol: f64) -> Result<bool> {
    let dev = block2_spectrum_deviation(b0, b1)?;
    let scale = (2.0 * (b0.frobenius_norm().powi(2) + b1.frobenius_norm().powi(2))).sqrt();
    Ok(dev < tol * scale.max(1.0))
}

/// Solves `a x = rhs` by Gaussian elimination with partial pivoting.
/// Returns the solution and the smallest pivot magnitude encountered.
pub fn solve(a: &Matrix<f64>, rhs: &[f64]) -> Result<(Vec<f64>, f64)> {
    let n = a.rows();
    if !a.is_square() || rhs.len() != n {
        return Err(Error::ShapeMismatch("solve needs a square system".into()));
    }
    let mut m: Vec<Vec<f64>> = a.to_rows();
    let mut b = rhs.to_vec();
    let mut min_pivot = f64::INFINITY;
    for k in 0..n {
        let p = (k..n)
            .max_by(|&i, &j| m[i][k].abs().total_cmp(&m[j][k].abs()))
            .unwrap_or(k);
        m.swap(k, p);
        b.swap(k, p);
        let pivot = m[k][k];
        min_pivot = min_pivot.min(pivot.abs());
        if pivot == 0.0 {
            return Ok((vec![f64::NAN; n], 0.0));
        }
        for i in k + 1..n {
            let f = m[i][k] / pivot;
            if f == 0.0 {
                continue;
            }
            for j in k..n {
                m[i][j] -= f * m[k][j];
            }
            b[i] -= f * b[k];
        }
    }
    let mut x = vec![0.0; n];
    for k in (0..n).rev() {
        let s: f64 = (k + 1..n).map(|j| m[k][j] * x[j]).sum();
        x[k] = (b[k] - s) / m[k][k];
    }
    Ok((x, min_pivot))
}

/// `1ᵀ (λI - B)⁻¹ 1`, computed by solving `(λI - B) x = 1`.
///
/// Fails when `λ` lies within `tol * max(1, ‖B‖_F)` of an eigenvalue of `B`
/// (checked with Jacobi for symmetric `B`, by pivot size otherwise).
pub fn column_sum_identity_value(b: &Matrix<f64>, lambda: f64, tol: f64) -> Result<f64> {
    if !b.is_square() {
        return Err(Error::ShapeMismatch("column-sum identity needs a square matrix".into()));
    }
    let n = b.rows();
    let scale = b.frobenius_norm().max(1.0);
    if b.check_symmetric(1e-12).is_ok() {
        let ev = symmetric_eigenvalues(b, DEFAULT_TOL)?;
        if ev.iter().any(|mu| (lambda - mu).abs() <= tol * scale) {
            return Err(Error::NearEigenvalue { lambda });
        }
    }
    let shifted = Matrix::identity(n).scale(lambda).try_sub(b)?;
    let (x, min_pivot) = solve(&shifted, &vec![1.0; n])?;
    if min_pivot <= tol * scale.max(lambda.abs()) {
        return Err(Error::NearEigenvalue { lambda });
    }
    Ok(x.iter().sum())
}

/// Checks `1ᵀ (λI - B)⁻¹ 1 = n / (λ - α)` for a matrix whose column sums
/// all equal `alpha`.
pub fn column_sum_identity_check(b: &Matrix<f64>, alpha: f64, lambda: f64, tol: f64) -> Result<bool> {
    let n = b.rows();
    let scale = b.frobenius_norm().max(1.0);
    for j in 0..b.cols() {
        let sum: f64 = (0..n).map(|i| b.get(i, j)).sum();
        if (sum - alpha).abs() > tol * scale {
            return Err(Error::Precondition(format!("column {j} sums to {sum}, expected {alpha}")));
        }
    }
    let value = column_sum_identity_value(b, lambda, tol)?;
    let expected = n as f64 / (lambda - alpha);
    Ok((value - expected).abs() < tol * expected.abs().max(1.0))
}
