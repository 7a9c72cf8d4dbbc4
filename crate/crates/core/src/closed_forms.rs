//! Closed-form eccentricity spectra of graph families.
//!
//! Quadratic-surd eigenvalues are exact; eigenvalues that come from the
//! adjacency spectrum of a cycle or a regular graph are floats.

use num_bigint::BigInt;
use num_traits::One;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Family, Graph};
use crate::linalg::{symmetric_eigenvalues, ExactValue, Matrix, SpectralValue, Spectrum, SymmetricIntMatrix, DEFAULT_TOL};

/// Window used to merge repeated float eigenvalues in generated spectra.
const FLOAT_MERGE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FamilySpectrum {
    pub family: String,
    pub params: Vec<i64>,
    pub spectrum: Spectrum,
    #[serde(serialize_with = "opt_bigint_string", skip_serializing_if = "Option::is_none")]
    pub det: Option<BigInt>,
}

fn opt_bigint_string<S: Serializer>(v: &Option<BigInt>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(x) => s.serialize_str(&x.to_string()),
        None => s.serialize_none(),
    }
}

impl FamilySpectrum {
    fn new(family: &str, params: &[usize], spectrum: Spectrum) -> Self {
        FamilySpectrum {
            family: family.to_string(),
            params: params.iter().map(|&p| p as i64).collect(),
            spectrum,
            det: None,
        }
    }
}

fn require(family: &str, ok: bool, reason: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::param(family, reason()))
    }
}

fn surd(a: i64, b: i64, r: i64, c: i64) -> ExactValue {
    ExactValue::surd(a, b, r as u64, c).expect("closed-form surd fits in 64 bits")
}

fn int(k: i64) -> SpectralValue {
    SpectralValue::Exact(ExactValue::int(k))
}

/// `(p ± √disc) / 2`.
fn half_roots(p: i64, disc: i64) -> [ExactValue; 2] {
    [surd(p, 1, disc, 2), surd(p, -1, disc, 2)]
}

/// Star `K_{1,n-1}`: `(n-2) ± √(n²-3n+3)` once each and `-2` with
/// multiplicity `n-2`; determinant `(-1)^(n-1) (n-1) 2^(n-2)`.
pub fn star_spectrum(n: usize) -> Result<FamilySpectrum> {
    require("star", n >= 3, || format!("n = {n} < 3"))?;
    let k = n as i64;
    let disc = k * k - 3 * k + 3;
    let spectrum = Spectrum::from_entries([
        (SpectralValue::from(surd(k - 2, 1, disc, 1)), 1),
        (SpectralValue::from(surd(k - 2, -1, disc, 1)), 1),
        (int(-2), n - 2),
    ]);
    let sign = if n % 2 == 0 { -BigInt::one() } else { BigInt::one() };
    let det = sign * BigInt::from(n - 1) * (BigInt::one() << (n - 2));
    Ok(FamilySpectrum { det: Some(det), ..FamilySpectrum::new("star", &[n], spectrum) })
}

/// The `(n+1) x (n+1)` matrix `[[0, 2·1ᵀ], [2·1, 3J_n]]`.
pub fn block_a_matrix(n: usize) -> Result<SymmetricIntMatrix> {
    require("block-a", n >= 1, || "n must be positive".into())?;
    SymmetricIntMatrix::from_i64(&Matrix::from_fn(n + 1, n + 1, |i, j| match (i, j) {
        (0, 0) => 0,
        (0, _) | (_, 0) => 2,
        _ => 3,
    }))
}

/// Spectrum of [`block_a_matrix`]: `0` with multiplicity `n-1` and
/// `(3n ± √(9n²+16n)) / 2`.
pub fn block_a_spectrum(n: usize) -> Result<Spectrum> {
    require("block-a", n >= 1, || "n must be positive".into())?;
    let k = n as i64;
    let [hi, lo] = half_roots(3 * k, 9 * k * k + 16 * k);
    Ok(Spectrum::from_entries([(SpectralValue::from(hi), 1), (lo.into(), 1), (int(0), n - 1)]))
}

/// `A ⊗ (J_n - I_n)` with `A` from [`block_a_matrix`]; equals the
/// eccentricity matrix of `K_n ∘ H` for any connected `H` on `m` vertices
/// under the corona labeling of [`Graph::corona`].
pub fn corona_kron_matrix(n: usize, m: usize) -> Result<SymmetricIntMatrix> {
    let a = block_a_matrix(m)?;
    let b = SymmetricIntMatrix::from_i64(&Matrix::from_fn(n, n, |i, j| (i != j) as i64))?;
    Ok(a.kron(&b))
}

/// `K_n ∘ H` for connected `H` on `m` vertices. With `λ₁,₂` the roots of
/// `x² - 3mx - 4m`: `0` (mult `n(m-1)`), `-λ₁`, `-λ₂` (mult `n-1` each),
/// `λ₁(n-1)`, `λ₂(n-1)`.
pub fn corona_spectrum(n: usize, m: usize) -> Result<FamilySpectrum> {
    require("corona", n >= 2, || format!("n = {n} < 2"))?;
    require("corona", m >= 1, || "m must be positive".into())?;
    let k = m as i64;
    let roots = half_roots(3 * k, 9 * k * k + 16 * k);
    let mut pairs: Vec<(SpectralValue, usize)> = vec![(int(0), n * (m - 1))];
    for r in roots {
        pairs.push((r.neg().into(), n - 1));
        pairs.push((r.scale(n as i64 - 1).expect("scaled root fits").into(), 1));
    }
    Ok(FamilySpectrum::new("corona", &[n, m], Spectrum::from_entries(pairs)))
}

/// Cone `G ∨ K_1` over an `r`-regular non-complete graph `G` on `n`
/// vertices: `(n-r-1) ± √((n-r-1)² + n)` together with `-2(λ + 1)` for the
/// adjacency eigenvalues `λ` of `G` other than `r`.
///
/// Only the absence of a dominating vertex in `G` matters (every vertex of
/// `G` then has eccentricity 2 in the cone), so cycles longer than five are
/// accepted as well as diameter-2 graphs.
pub fn cone_spectrum(g: &Graph) -> Result<FamilySpectrum> {
    let r = g.is_regular().ok_or_else(|| Error::Precondition("cone base graph is not regular".into()))?;
    if let Some(v) = g.dominating_vertex() {
        return Err(Error::Precondition(format!("cone base graph has dominating vertex {v}")));
    }
    let n = g.n();
    let mut spectrum = cone_with_adjacency(n, r, &adjacency_eigenvalues(g)?);
    spectrum.params = vec![n as i64, r as i64];
    Ok(spectrum)
}

fn adjacency_eigenvalues(g: &Graph) -> Result<Vec<f64>> {
    let a = Matrix::from_rows(g.adjacency_matrix())?.to_f64();
    symmetric_eigenvalues(&a, DEFAULT_TOL)
}

fn cone_with_adjacency(n: usize, r: usize, adjacency: &[f64]) -> FamilySpectrum {
    let s = n as i64 - r as i64 - 1;
    let disc = s * s + n as i64;
    // drop one copy of the regular eigenvalue r
    let mut rest = adjacency.to_vec();
    let idx = rest
        .iter()
        .enumerate()
        .min_by(|a, b| (a.1 - r as f64).abs().total_cmp(&(b.1 - r as f64).abs()))
        .map(|(i, _)| i)
        .expect("nonempty adjacency spectrum");
    rest.remove(idx);
    let floats: Vec<f64> = rest.iter().map(|l| -2.0 * (l + 1.0)).collect();
    let exact = Spectrum::from_entries([
        (SpectralValue::from(surd(s, 1, disc, 1)), 1),
        (surd(s, -1, disc, 1).into(), 1),
    ]);
    let spectrum = exact.union(&Spectrum::from_floats(&floats, FLOAT_MERGE));
    FamilySpectrum::new("cone", &[n, r], spectrum)
}

/// Wheel `W_{n+1}` (rim `C_n`, `n >= 4`): the cone over `C_n`, using the
/// cycle eigenvalues `2cos(2πi/n)`.
pub fn wheel_spectrum(n: usize) -> Result<FamilySpectrum> {
    require("wheel", n >= 4, || format!("rim {n} < 4"))?;
    let cycle: Vec<f64> = (0..n)
        .map(|i| 2.0 * (2.0 * std::f64::consts::PI * i as f64 / n as f64).cos())
        .collect();
    let mut out = cone_with_adjacency(n, 2, &cycle);
    out.family = "wheel".into();
    out.params = vec![n as i64];
    Ok(out)
}

/// Barbell `B_{n,n}`: `0` (mult `2(n-2)`) and
/// `±(3(n-1) ± √(9n²-2n-7)) / 2`.
pub fn barbell_spectrum(n: usize) -> Result<FamilySpectrum> {
    require("barbell", n >= 2, || format!("n = {n} < 2"))?;
    let k = n as i64;
    let roots = half_roots(3 * (k - 1), 9 * k * k - 2 * k - 7);
    let mut pairs: Vec<(SpectralValue, usize)> = vec![(int(0), 2 * (n - 2))];
    for r in roots {
        pairs.push((r.into(), 1));
        pairs.push((r.neg().into(), 1));
    }
    Ok(FamilySpectrum::new("barbell", &[n], Spectrum::from_entries(pairs)))
}

/// Cocktail-party `CP(n)`: `2` and `-2`, each with multiplicity `n`.
pub fn cocktail_spectrum(n: usize) -> Result<FamilySpectrum> {
    require("cocktail-party", n >= 2, || format!("n = {n} < 2"))?;
    let spectrum = Spectrum::from_entries([(int(2), n), (int(-2), n)]);
    Ok(FamilySpectrum::new("cocktail-party", &[n], spectrum))
}

/// Complete multipartite `K_{n_1,...,n_k}` with every part of size at least
/// two: `-2` with multiplicity `n - k` and `2(n_i - 1)` for each part.
///
/// A part of size one is a dominating vertex of eccentricity 1, which
/// breaks the block-diagonal form, so such partitions are rejected.
pub fn multipartite_spectrum(parts: &[usize]) -> Result<FamilySpectrum> {
    require("multipartite", parts.len() >= 2, || "needs at least two parts".into())?;
    if let Some(i) = parts.iter().position(|&p| p < 2) {
        return Err(Error::Precondition(format!(
            "part {i} has size {}; a part of size one is a dominating vertex",
            parts[i]
        )));
    }
    let n: usize = parts.iter().sum();
    let mut pairs = vec![(int(-2), n - parts.len())];
    pairs.extend(parts.iter().map(|&p| (int(2 * (p as i64 - 1)), 1)));
    Ok(FamilySpectrum::new("multipartite", parts, Spectrum::from_entries(pairs)))
}

fn check_join_part(g: &Graph, which: usize) -> Result<()> {
    if let Some((u, v)) = g.unreachable_pair() {
        return Err(Error::Precondition(format!("part {which} is disconnected ({u} and {v})")));
    }
    if let Some(v) = g.dominating_vertex() {
        return Err(Error::Precondition(format!("part {which} has dominating vertex {v}")));
    }
    Ok(())
}

/// `blockdiag(2A(Ḡ₁), 2A(Ḡ₂))`, the eccentricity matrix of `G₁ ∨ G₂` when
/// neither part has a vertex adjacent to all others in its part.
pub fn join_ecc_matrix(g1: &Graph, g2: &Graph) -> Result<SymmetricIntMatrix> {
    check_join_part(g1, 1)?;
    check_join_part(g2, 2)?;
    let comp = |g: &Graph| -> Result<SymmetricIntMatrix> {
        Ok(SymmetricIntMatrix::from_rows(g.complement().adjacency_matrix())?.scale(2))
    };
    Ok(comp(g1)?.block_diag(&comp(g2)?))
}

/// Spectrum of `G₁ ∨ G₂` as `2·eig(A(Ḡ₁)) ∪ 2·eig(A(Ḡ₂))`.
pub fn complete_product_spectrum(g1: &Graph, g2: &Graph) -> Result<FamilySpectrum> {
    check_join_part(g1, 1)?;
    check_join_part(g2, 2)?;
    let mut values = Vec::new();
    for g in [g1, g2] {
        values.extend(adjacency_eigenvalues(&g.complement())?.into_iter().map(|x| 2.0 * x));
    }
    let spectrum = Spectrum::from_floats(&values, FLOAT_MERGE);
    Ok(FamilySpectrum::new("complete-product", &[g1.n(), g2.n()], spectrum))
}

/// Closed form for a named family, when one is known.
pub fn family_spectrum(family: &Family) -> Result<FamilySpectrum> {
    match family {
        Family::Star(n) => star_spectrum(*n),
        Family::Wheel(n) => wheel_spectrum(*n),
        Family::Barbell(n) => barbell_spectrum(*n),
        Family::CocktailParty(n) => cocktail_spectrum(*n),
        Family::CompleteMultipartite(parts) => multipartite_spectrum(parts),
        Family::Complete(n) if *n >= 2 => {
            // J - I
            let spectrum = Spectrum::from_entries([(int(*n as i64 - 1), 1), (int(-1), n - 1)]);
            Ok(FamilySpectrum::new("complete", &[*n], spectrum))
        }
        other => Err(Error::param(&other.to_string(), "no closed-form spectrum for this family")),
    }
}
