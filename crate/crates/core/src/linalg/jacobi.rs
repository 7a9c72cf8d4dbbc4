use super::{Matrix, Spectrum};
use crate::error::{Error, Result};

/// Default relative convergence threshold for [`eig_symmetric`].
pub const DEFAULT_TOL: f64 = 1e-12;

const MAX_SWEEPS: usize = 100;

/// Eigenvalues of a real symmetric matrix, sorted ascending.
///
/// Cyclic Jacobi: sweeps of plane rotations over every off-diagonal pair
/// until the off-diagonal Frobenius norm drops below `tol * ‖M‖_F`.
pub fn symmetric_eigenvalues(m: &Matrix<f64>, tol: f64) -> Result<Vec<f64>> {
    m.check_symmetric(tol.max(1e-12))?;
    let n = m.rows();
    let mut a: Vec<f64> = (0..n).flat_map(|i| m.row(i).iter().copied()).collect();
    Ok(eigenvalues_in_place(&mut a, n, tol))
}

/// Jacobi on a row-major `n * n` buffer that is assumed symmetric. The
/// buffer is overwritten; the returned eigenvalues are sorted ascending.
pub(crate) fn eigenvalues_in_place(a: &mut [f64], n: usize, tol: f64) -> Vec<f64> {
    let norm = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let target = tol * norm;
    for _ in 0..MAX_SWEEPS {
        if off_norm(a, n) <= target {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(a, n, p, q);
            }
        }
    }
    let mut ev: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    ev.sort_by(f64::total_cmp);
    ev
}

fn off_norm(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            s += a[i * n + j] * a[i * n + j];
        }
    }
    (2.0 * s).sqrt()
}

fn rotate(a: &mut [f64], n: usize, p: usize, q: usize) {
    let apq = a[p * n + q];
    if apq == 0.0 {
        return;
    }
    let app = a[p * n + p];
    let aqq = a[q * n + q];
    let theta = (aqq - app) / (2.0 * apq);
    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
    // theta.signum() is 1 for +0.0, so t is finite even when app == aqq
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let akp = a[k * n + p];
        let akq = a[k * n + q];
        let new_p = c * akp - s * akq;
        let new_q = s * akp + c * akq;
        a[k * n + p] = new_p;
        a[p * n + k] = new_p;
        a[k * n + q] = new_q;
        a[q * n + k] = new_q;
    }
    a[p * n + p] = app - t * apq;
    a[q * n + q] = aqq + t * apq;
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;
}

/// Float spectrum of a symmetric matrix with eigenvalues closer than
/// `10 * tol * ‖M‖_F` merged into one entry.
pub fn eig_symmetric(m: &Matrix<f64>, tol: f64) -> Result<Spectrum> {
    if !(tol > 0.0) {
        return Err(Error::Precondition(format!("tolerance must be positive, got {tol}")));
    }
    let values = symmetric_eigenvalues(m, tol)?;
    let window = 10.0 * tol * m.frobenius_norm();
    Ok(Spectrum::from_floats(&values, window))
}
