use std::time::Instant;

use serde::Serialize;

use super::VerificationReport;
use crate::closed_forms::corona_spectrum;
use crate::error::{Error, Result};
use crate::graph::{is_isomorphic, to_graph6, Family, Graph};
use crate::linalg::{multiset_distance, symmetric_eigenvalues, Spectrum, DEFAULT_TOL};
use crate::metric::{apsp, eccentricity_matrix};

/// Largest order for which coronas are compared by exhaustive search
/// regardless of cheaper invariants.
const BRUTE_FORCE_MAX: usize = 10;

/// Largest order enumerated exhaustively by [`connected_graphs_up_to_iso`].
const ENUMERATE_MAX: usize = 6;

/// Evidence that two graphs are not isomorphic.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    /// Exhaustive search found no isomorphism.
    BruteForce,
    EdgeCount(usize, usize),
    DegreeSequence(Vec<usize>, Vec<usize>),
    /// Max gap between the sorted distance-matrix eigenvalues.
    DistanceSpectrum(f64),
}

#[derive(Debug, Clone, Serialize)]
pub struct CospectralPair {
    pub n: usize,
    pub m: usize,
    /// graph6 of the two partners.
    pub h1: String,
    pub h2: String,
    #[serde(skip)]
    pub g1: Graph,
    #[serde(skip)]
    pub g2: Graph,
    pub spectrum: Spectrum,
    pub deviation: f64,
    pub witness: Witness,
}

/// Connected graphs on `m` vertices, one per isomorphism class, for
/// `m <= 6`. Larger orders get a fixed list of pairwise non-isomorphic
/// family members.
pub fn connected_graphs_up_to_iso(m: usize) -> Vec<Graph> {
    if m == 0 {
        return Vec::new();
    }
    if m > ENUMERATE_MAX {
        return [Family::Path(m), Family::Star(m), Family::Cycle(m), Family::Wheel(m - 1), Family::Complete(m)]
            .iter()
            .map(|f| f.build().expect("families are valid for m > 6"))
            .collect();
    }
    let pairs: Vec<(usize, usize)> = (0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j))).collect();
    let mut reps: Vec<(Vec<usize>, Graph)> = Vec::new();
    for mask in 0u64..(1 << pairs.len()) {
        let edges = pairs.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &e)| e);
        let g = Graph::new(m, edges).expect("pairs are valid edges");
        if !g.is_connected() {
            continue;
        }
        let mut degrees = g.degrees();
        degrees.sort_unstable();
        if !reps.iter().any(|(d, h)| *d == degrees && is_isomorphic(h, &g)) {
            reps.push((degrees, g));
        }
    }
    reps.into_iter().map(|(_, g)| g).collect()
}

fn sorted_degrees(g: &Graph) -> Vec<usize> {
    let mut d = g.degrees();
    d.sort_unstable();
    d
}

fn distance_spectrum(g: &Graph) -> Result<Vec<f64>> {
    symmetric_eigenvalues(&apsp(g)?.to_matrix().to_f64(), DEFAULT_TOL)
}

/// Finds evidence that `a` and `b` differ, or `None` if they are isomorphic.
fn non_isomorphism_witness(a: &Graph, b: &Graph) -> Result<Option<Witness>> {
    let brute = |a: &Graph, b: &Graph| if is_isomorphic(a, b) { None } else { Some(Witness::BruteForce) };
    if a.n() <= BRUTE_FORCE_MAX {
        return Ok(brute(a, b));
    }
    if a.edge_count() != b.edge_count() {
        return Ok(Some(Witness::EdgeCount(a.edge_count(), b.edge_count())));
    }
    let (da, db) = (sorted_degrees(a), sorted_degrees(b));
    if da != db {
        return Ok(Some(Witness::DegreeSequence(da, db)));
    }
    let gap = multiset_distance(&distance_spectrum(a)?, &distance_spectrum(b)?);
    if gap > 1e-6 {
        return Ok(Some(Witness::DistanceSpectrum(gap)));
    }
    Ok(brute(a, b))
}

/// Builds `K_n ∘ h1` and `K_n ∘ h2` and checks they are ε-cospectral within
/// `tol` and not isomorphic.
pub fn check_pair(n: usize, h1: &Graph, h2: &Graph, tol: f64) -> Result<CospectralPair> {
    if h1.n() != h2.n() {
        return Err(Error::Precondition(format!("partners have {} and {} vertices", h1.n(), h2.n())));
    }
    let m = h1.n();
    let kn = Family::Complete(n).build()?;
    let (g1, g2) = (kn.corona(h1), kn.corona(h2));
    let s1 = symmetric_eigenvalues(&eccentricity_matrix(&g1)?.to_f64(), DEFAULT_TOL)?;
    let s2 = symmetric_eigenvalues(&eccentricity_matrix(&g2)?.to_f64(), DEFAULT_TOL)?;
    let deviation = multiset_distance(&s1, &s2);
    if !(deviation < tol) {
        return Err(Error::Precondition(format!("coronas are not cospectral: deviation {deviation:e}")));
    }
    let witness = non_isomorphism_witness(&g1, &g2)?
        .ok_or_else(|| Error::Precondition("coronas are isomorphic".into()))?;
    Ok(CospectralPair {
        n,
        m,
        h1: to_graph6(h1),
        h2: to_graph6(h2),
        spectrum: corona_spectrum(n, m)?.spectrum,
        g1,
        g2,
        deviation,
        witness,
    })
}

/// All pairs of coronas `K_n ∘ H1`, `K_n ∘ H2` over non-isomorphic connected
/// `H1`, `H2` on `m` vertices.
pub fn cospectral_pairs(n: usize, m: usize) -> Result<Vec<CospectralPair>> {
    if n < 2 {
        return Err(Error::param("cospectral", "n must be at least 2"));
    }
    if m < 3 {
        return Err(Error::param("cospectral", format!("only one connected graph on {m} vertices")));
    }
    let hs = connected_graphs_up_to_iso(m);
    let mut out = Vec::new();
    for i in 0..hs.len() {
        for j in i + 1..hs.len() {
            out.push(check_pair(n, &hs[i], &hs[j], 1e-8)?);
        }
    }
    Ok(out)
}

/// Checks every partner pair for `(n, m)` and records failures instead of
/// stopping at the first.
pub fn verify_cospectral(n: usize, m: usize, tol: f64) -> Result<VerificationReport> {
    let started = Instant::now();
    if n < 2 || m < 3 {
        return Err(Error::param("cospectral", "needs n >= 2 and m >= 3"));
    }
    let hs = connected_graphs_up_to_iso(m);
    let mut report = VerificationReport::new("cospectral", format!("K{n} corona each pair of {} connected graphs on {m} vertices", hs.len()));
    for i in 0..hs.len() {
        for j in i + 1..hs.len() {
            report.checked();
            let label = format!("{} vs {}", to_graph6(&hs[i]), to_graph6(&hs[j]));
            match check_pair(n, &hs[i], &hs[j], tol) {
                Ok(pair) => {
                    report.deviation(pair.deviation);
                    let key = match pair.witness {
                        Witness::BruteForce => "witness_brute_force",
                        Witness::EdgeCount(..) => "witness_edge_count",
                        Witness::DegreeSequence(..) => "witness_degree_sequence",
                        Witness::DistanceSpectrum(_) => "witness_distance_spectrum",
                    };
                    report.count(key, 1);
                }
                Err(e) => report.fail(label, e, "cospectral and non-isomorphic"),
            }
        }
    }
    Ok(report.finish(started))
}
