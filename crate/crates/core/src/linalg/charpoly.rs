use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use super::SymmetricIntMatrix;

/// Coefficients of `det(λI - M)`, leading coefficient first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Charpoly {
    coeffs: Vec<BigInt>,
}

impl Charpoly {
    /// `[1, c_1, ..., c_n]` for `λ^n + c_1 λ^(n-1) + ... + c_n`.
    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn constant_term(&self) -> &BigInt {
        self.coeffs.last().expect("charpoly has a leading coefficient")
    }

    /// `det(M) = (-1)^n * p(0)`.
    pub fn determinant(&self) -> BigInt {
        if self.degree() % 2 == 0 {
            self.constant_term().clone()
        } else {
            -self.constant_term()
        }
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc * x + c)
    }
}

impl Serialize for Charpoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(BigInt::to_string))
    }
}

impl fmt::Display for Charpoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let power = n - i;
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            let show_mag = !mag.is_one() || power == 0;
            if show_mag {
                write!(f, "{mag}")?;
            }
            match power {
                0 => {}
                1 => write!(f, "x")?,
                p => write!(f, "x^{p}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Characteristic polynomial by Berkowitz's division-free algorithm.
///
/// Each step borders the leading principal submatrix `A_r` with column `S`,
/// row `R` and corner `a`, and multiplies the running coefficient vector by
/// the lower-triangular Toeplitz matrix whose first column is
/// `[1, -a, -R S, -R A_r S, ..., -R A_r^(r-1) S]`.
pub fn charpoly_exact(m: &SymmetricIntMatrix) -> Charpoly {
    let a = m.matrix();
    let n = m.n();
    let mut poly = vec![BigInt::one()];
    for r in 0..n {
        let mut column = Vec::with_capacity(r + 2);
        column.push(BigInt::one());
        column.push(-a.get(r, r));
        let mut v: Vec<BigInt> = (0..r).map(|i| a.get(i, r).clone()).collect();
        for _ in 0..r {
            let rs: BigInt = (0..r).map(|j| a.get(r, j) * &v[j]).sum();
            column.push(-rs);
            v = (0..r)
                .map(|i| (0..r).map(|j| a.get(i, j) * &v[j]).sum())
                .collect();
        }
        let mut next = vec![BigInt::zero(); r + 2];
        for (i, slot) in next.iter_mut().enumerate() {
            for (j, p) in poly.iter().enumerate().take(i + 1) {
                if !p.is_zero() {
                    *slot += &column[i - j] * p;
                }
            }
        }
        poly = next;
    }
    Charpoly { coeffs: poly }
}

/// Counts of positive, negative and zero eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Inertia {
    pub n_plus: usize,
    pub n_minus: usize,
    pub n_zero: usize,
}

impl Inertia {
    pub fn new(n_plus: usize, n_minus: usize, n_zero: usize) -> Self {
        Inertia { n_plus, n_minus, n_zero }
    }

    pub fn n(&self) -> usize {
        self.n_plus + self.n_minus + self.n_zero
    }

    pub fn rank(&self) -> usize {
        self.n_plus + self.n_minus
    }

    /// Sign counts of a list of floats; `|x| <= threshold` counts as zero.
    pub fn from_eigenvalues(values: &[f64], threshold: f64) -> Self {
        let mut inertia = Inertia::new(0, 0, 0);
        for &x in values {
            if x.abs() <= threshold {
                inertia.n_zero += 1;
            } else if x > 0.0 {
                inertia.n_plus += 1;
            } else {
                inertia.n_minus += 1;
            }
        }
        inertia
    }
}

impl fmt::Display for Inertia {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.n_plus, self.n_minus, self.n_zero)
    }
}

/// Exact inertia of a symmetric integer matrix.
///
/// The multiplicity of zero is the number of vanishing low-order
/// coefficients of the characteristic polynomial. On what remains, every
/// root is real and nonzero, so Descartes' rule of signs is exact: sign
/// variations count positive roots, and variations of `p(-λ)` count
/// negative ones.
pub fn inertia_exact(m: &SymmetricIntMatrix) -> Inertia {
    let poly = charpoly_exact(m);
    let coeffs = poly.coefficients();
    let n_zero = coeffs.iter().rev().take_while(|c| c.is_zero()).count();
    let reduced = &coeffs[..coeffs.len() - n_zero];
    let degree = reduced.len() - 1;
    let signs: Vec<i8> = reduced.iter().map(sign).collect();
    let alternated: Vec<i8> = signs
        .iter()
        .enumerate()
        .map(|(i, &s)| if (degree - i) % 2 == 1 { -s } else { s })
        .collect();
    Inertia {
        n_plus: sign_variations(&signs),
        n_minus: sign_variations(&alternated),
        n_zero,
    }
}

fn sign(x: &BigInt) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

fn sign_variations(signs: &[i8]) -> usize {
    let nonzero: Vec<i8> = signs.iter().copied().filter(|&s| s != 0).collect();
    nonzero.windows(2).filter(|w| w[0] != w[1]).count()
}
