use std::time::Instant;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::VerificationReport;
use crate::error::Error;
use crate::linalg::{
    block2_spectrum_deviation, column_sum_identity_check, multiset_distance, symmetric_eigenvalues, Matrix,
    DEFAULT_TOL,
};

/// Seed used by the property suites unless one is given.
pub const DEFAULT_SEED: u64 = 20240917;

/// Tolerance for the block, Kronecker and column-sum suites (relative to
/// the matrix norm) and the absolute interlacing slack.
const SUITE_TOL: f64 = 1e-8;

/// Instance counts for each randomized suite.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteCounts {
    pub block: usize,
    pub kron: usize,
    pub column_sum: usize,
    pub interlacing: usize,
}

impl Default for SuiteCounts {
    fn default() -> Self {
        SuiteCounts { block: 100, kron: 100, column_sum: 50, interlacing: 200 }
    }
}

fn random_symmetric(rng: &mut ChaCha8Rng, n: usize) -> Matrix<f64> {
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let x = rng.gen_range(-5.0..5.0);
            m.set(i, j, x);
            m.set(j, i, x);
        }
    }
    m
}

fn block_suite(rng: &mut ChaCha8Rng, count: usize, seed: u64) -> VerificationReport {
    let started = Instant::now();
    let mut report = VerificationReport::new("block-lemma", format!("{count} random pairs, order 1..=6, seed {seed}"));
    for i in 0..count {
        let n = rng.gen_range(1..=6);
        let (b0, b1) = (random_symmetric(rng, n), random_symmetric(rng, n));
        report.checked();
        let scale = Matrix::block2(&b0, &b1, &b1, &b0).map(|m| m.frobenius_norm().max(1.0)).unwrap_or(1.0);
        match block2_spectrum_deviation(&b0, &b1) {
            Ok(dev) => {
                report.deviation(dev / scale);
                if !(dev < SUITE_TOL * scale) {
                    report.fail(format!("pair {i:03}"), dev, format!("< {}", SUITE_TOL * scale));
                }
            }
            Err(e) => report.fail(format!("pair {i:03}"), e, "a deviation"),
        }
    }
    report.finish(started)
}

fn kron_suite(rng: &mut ChaCha8Rng, count: usize, seed: u64) -> VerificationReport {
    let started = Instant::now();
    let mut report = VerificationReport::new("kronecker-lemma", format!("{count} random pairs, order 1..=4, seed {seed}"));
    for i in 0..count {
        let (p, q) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
        let (a, b) = (random_symmetric(rng, p), random_symmetric(rng, q));
        report.checked();
        let k = a.kron(&b);
        let scale = k.frobenius_norm().max(1.0);
        let outcome = (|| -> crate::Result<f64> {
            let ea = symmetric_eigenvalues(&a, DEFAULT_TOL)?;
            let eb = symmetric_eigenvalues(&b, DEFAULT_TOL)?;
            let mut products: Vec<f64> = ea.iter().flat_map(|x| eb.iter().map(move |y| x * y)).collect();
            products.sort_by(f64::total_cmp);
            Ok(multiset_distance(&symmetric_eigenvalues(&k, DEFAULT_TOL)?, &products))
        })();
        match outcome {
            Ok(dev) => {
                report.deviation(dev / scale);
                if !(dev < SUITE_TOL * scale) {
                    report.fail(format!("pair {i:03}"), dev, format!("< {}", SUITE_TOL * scale));
                }
            }
            Err(e) => report.fail(format!("pair {i:03}"), e, "eigenvalues"),
        }
    }
    report.finish(started)
}

/// Random `B` whose column sums all equal `alpha`: entries are uniform and
/// the last row absorbs the difference.
fn fixed_column_sums(rng: &mut ChaCha8Rng, n: usize, alpha: f64) -> Matrix<f64> {
    let mut m = Matrix::from_fn(n, n, |_, _| rng.gen_range(-3.0..3.0));
    for j in 0..n {
        let partial: f64 = (0..n - 1).map(|i| m.get(i, j)).sum();
        m.set(n - 1, j, alpha - partial);
    }
    m
}

fn column_sum_suite(rng: &mut ChaCha8Rng, count: usize, seed: u64) -> VerificationReport {
    let started = Instant::now();
    let mut report = VerificationReport::new("column-sum-identity", format!("{count} instances, order 2..=6, seed {seed}"));
    let mut i = 0;
    while i < count {
        let n = rng.gen_range(2..=6);
        let alpha = rng.gen_range(-4.0..4.0);
        let b = fixed_column_sums(rng, n, alpha);
        let lambda = rng.gen_range(-20.0..20.0);
        match column_sum_identity_check(&b, alpha, lambda, SUITE_TOL) {
            // λ landed on the spectrum; draw a new instance
            Err(Error::NearEigenvalue { .. }) => {
                report.count("resampled", 1);
                continue;
            }
            Ok(ok) => {
                report.checked();
                if !ok {
                    report.fail(format!("instance {i:03}"), "identity violated", format!("{n}/(λ-α)"));
                }
            }
            Err(e) => {
                report.checked();
                report.fail(format!("instance {i:03}"), e, "identity");
            }
        }
        i += 1;
    }
    report.finish(started)
}

fn interlacing_suite(rng: &mut ChaCha8Rng, count: usize, seed: u64) -> VerificationReport {
    let started = Instant::now();
    let mut report =
        VerificationReport::new("interlacing", format!("{count} instances, order 2..=8, deleting one index, seed {seed}"));
    for i in 0..count {
        let n = rng.gen_range(2..=8);
        let m = random_symmetric(rng, n);
        let mut keep: Vec<usize> = sample(rng, n, n - 1).into_vec();
        keep.sort_unstable();
        report.checked();
        let outcome = (|| -> crate::Result<(Vec<f64>, Vec<f64>)> {
            let sub = m.principal_submatrix(&keep)?;
            Ok((symmetric_eigenvalues(&m, DEFAULT_TOL)?, symmetric_eigenvalues(&sub, DEFAULT_TOL)?))
        })();
        match outcome {
            Ok((lam, beta)) => {
                let mut worst: f64 = 0.0;
                for (k, b) in beta.iter().enumerate() {
                    worst = worst.max(lam[k] - b).max(b - lam[k + 1]);
                }
                report.deviation(worst.max(0.0));
                if worst > SUITE_TOL {
                    report.fail(format!("instance {i:03}"), format!("{beta:?}"), format!("interlaces {lam:?}"));
                }
            }
            Err(e) => report.fail(format!("instance {i:03}"), e, "eigenvalues"),
        }
    }
    report.finish(started)
}

/// Runs the four randomized linear-algebra suites. Each suite draws from
/// its own generator derived from `seed`, so changing one count leaves the
/// other suites' instances unchanged.
pub fn run_property_suites(seed: u64, counts: SuiteCounts) -> Vec<VerificationReport> {
    let rng = |k: u64| ChaCha8Rng::seed_from_u64(seed.wrapping_add(k));
    vec![
        block_suite(&mut rng(0), counts.block, seed),
        kron_suite(&mut rng(1), counts.kron, seed),
        column_sum_suite(&mut rng(2), counts.column_sum, seed),
        interlacing_suite(&mut rng(3), counts.interlacing, seed),
    ]
}
