use std::fmt;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::VerificationReport;
use crate::closed_forms::{
    barbell_spectrum, block_a_matrix, block_a_spectrum, cocktail_spectrum, complete_product_spectrum,
    cone_spectrum, corona_spectrum, join_ecc_matrix, multipartite_spectrum, star_spectrum, wheel_spectrum,
};
use crate::error::{Error, Result};
use crate::graph::{is_isomorphic, Family, Graph};
use crate::linalg::{inertia_exact, multiset_distance, symmetric_eigenvalues, Inertia, Spectrum, DEFAULT_TOL};
use crate::metric::eccentricity_matrix;

/// One grid point of a closed-form cross-check.
#[derive(Debug, Clone)]
pub enum FamilyCase {
    Star(usize),
    BlockA(usize),
    /// `K_n ∘ h`, with a label for `h`.
    Corona { n: usize, h: Graph, h_name: String },
    Wheel(usize),
    Barbell(usize),
    Cocktail(usize),
    Multipartite(Vec<usize>),
    Cone { g: Graph, name: String },
    CompleteProduct { g1: Graph, g2: Graph, name: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    Star,
    BlockA,
    Corona,
    Wheel,
    Barbell,
    Cocktail,
    Multipartite,
    Cone,
    CompleteProduct,
}

impl FamilyKind {
    pub fn from_name(name: &str) -> Option<Self> {
        Some(match name {
            "star" => FamilyKind::Star,
            "block-a" => FamilyKind::BlockA,
            "corona" => FamilyKind::Corona,
            "wheel" => FamilyKind::Wheel,
            "barbell" => FamilyKind::Barbell,
            "cocktail" | "cocktail-party" => FamilyKind::Cocktail,
            "multipartite" => FamilyKind::Multipartite,
            "cone" => FamilyKind::Cone,
            "complete-product" | "join" => FamilyKind::CompleteProduct,
            _ => return None,
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            FamilyKind::Star => "star",
            FamilyKind::BlockA => "block-a",
            FamilyKind::Corona => "corona",
            FamilyKind::Wheel => "wheel",
            FamilyKind::Barbell => "barbell",
            FamilyKind::Cocktail => "cocktail",
            FamilyKind::Multipartite => "multipartite",
            FamilyKind::Cone => "cone",
            FamilyKind::CompleteProduct => "complete-product",
        }
    }

    pub fn all() -> [FamilyKind; 9] {
        [
            FamilyKind::Star,
            FamilyKind::BlockA,
            FamilyKind::Corona,
            FamilyKind::Wheel,
            FamilyKind::Barbell,
            FamilyKind::Cocktail,
            FamilyKind::Multipartite,
            FamilyKind::Cone,
            FamilyKind::CompleteProduct,
        ]
    }

    /// Cases for a single integer parameter, for families that take one.
    pub fn case_for(&self, p: usize) -> Option<FamilyCase> {
        Some(match self {
            FamilyKind::Star => FamilyCase::Star(p),
            FamilyKind::BlockA => FamilyCase::BlockA(p),
            FamilyKind::Wheel => FamilyCase::Wheel(p),
            FamilyKind::Barbell => FamilyCase::Barbell(p),
            FamilyKind::Cocktail => FamilyCase::Cocktail(p),
            _ => return None,
        })
    }
}

impl fmt::Display for FamilyCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyCase::Star(n) => write!(f, "star({n})"),
            FamilyCase::BlockA(n) => write!(f, "block-a({n})"),
            FamilyCase::Corona { n, h_name, .. } => write!(f, "corona(K{n}, {h_name})"),
            FamilyCase::Wheel(n) => write!(f, "wheel({n})"),
            FamilyCase::Barbell(n) => write!(f, "barbell({n})"),
            FamilyCase::Cocktail(n) => write!(f, "cocktail({n})"),
            FamilyCase::Multipartite(p) => write!(f, "{}", Family::CompleteMultipartite(p.clone())),
            FamilyCase::Cone { name, .. } => write!(f, "cone({name})"),
            FamilyCase::CompleteProduct { name, .. } => write!(f, "join({name})"),
        }
    }
}

fn build(f: Family) -> Graph {
    f.build().expect("grid families are valid")
}

fn k(n: usize) -> Graph {
    build(Family::Complete(n))
}

impl FamilyCase {
    pub fn closed_form(&self) -> Result<Spectrum> {
        Ok(match self {
            FamilyCase::Star(n) => star_spectrum(*n)?.spectrum,
            FamilyCase::BlockA(n) => block_a_spectrum(*n)?,
            FamilyCase::Corona { n, h, .. } => corona_spectrum(*n, h.n())?.spectrum,
            FamilyCase::Wheel(n) => wheel_spectrum(*n)?.spectrum,
            FamilyCase::Barbell(n) => barbell_spectrum(*n)?.spectrum,
            FamilyCase::Cocktail(n) => cocktail_spectrum(*n)?.spectrum,
            FamilyCase::Multipartite(p) => multipartite_spectrum(p)?.spectrum,
            FamilyCase::Cone { g, .. } => cone_spectrum(g)?.spectrum,
            FamilyCase::CompleteProduct { g1, g2, .. } => complete_product_spectrum(g1, g2)?.spectrum,
        })
    }

    /// The constructed graph, for cases that have one.
    pub fn graph(&self) -> Result<Option<Graph>> {
        Ok(Some(match self {
            FamilyCase::Star(n) => Family::Star(*n).build()?,
            FamilyCase::BlockA(_) => return Ok(None),
            FamilyCase::Corona { n, h, .. } => Family::Complete(*n).build()?.corona(h),
            FamilyCase::Wheel(n) => Family::Wheel(*n).build()?,
            FamilyCase::Barbell(n) => Family::Barbell(*n).build()?,
            FamilyCase::Cocktail(n) => Family::CocktailParty(*n).build()?,
            FamilyCase::Multipartite(p) => Family::CompleteMultipartite(p.clone()).build()?,
            FamilyCase::Cone { g, .. } => g.join(&Graph::empty(1)?),
            FamilyCase::CompleteProduct { g1, g2, .. } => g1.join(g2),
        }))
    }

    /// Numeric eigenvalues of the eccentricity matrix of the constructed
    /// graph (or of the explicit block matrix).
    pub fn numeric(&self) -> Result<Vec<f64>> {
        let m = match self.graph()? {
            Some(g) => eccentricity_matrix(&g)?.to_f64(),
            None => match self {
                FamilyCase::BlockA(n) => block_a_matrix(*n)?.to_f64(),
                _ => unreachable!("only block-a lacks a graph"),
            },
        };
        symmetric_eigenvalues(&m, DEFAULT_TOL)
    }
}

fn corona_partners(m: usize) -> Vec<(String, Graph)> {
    let named = |f: Family| (f.to_string(), build(f));
    match m {
        1 => vec![("K1".into(), k(1))],
        2 => vec![("K2".into(), k(2))],
        3 => vec![named(Family::Path(3)), named(Family::Complete(3))],
        m => vec![named(Family::Path(m)), named(Family::Star(m)), named(Family::Cycle(m))],
    }
}

/// Random partitions of `n <= 12` into at least two parts of size >= 2.
fn random_partitions(count: usize, seed: u64) -> Vec<Vec<usize>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(4..=12);
        let mut parts = Vec::new();
        let mut left = n;
        while left > 0 {
            let p = if left <= 3 { left } else { rng.gen_range(2..=left - 2) };
            parts.push(p);
            left -= p;
        }
        if parts.len() >= 2 && parts.iter().all(|&p| p >= 2) {
            parts.shuffle(&mut rng);
            out.push(parts);
        }
    }
    out
}

/// The documented grid for each family.
///
/// Corona uses every `n` in `2..=5` and `m` in `1..=5` with up to three
/// structurally distinct connected partners per `m` (only one exists for
/// `m <= 2` and two for `m = 3`).
pub fn default_grid(kind: FamilyKind) -> Vec<FamilyCase> {
    match kind {
        FamilyKind::Star => (3..=30).map(FamilyCase::Star).collect(),
        FamilyKind::BlockA => (1..=12).map(FamilyCase::BlockA).collect(),
        FamilyKind::Corona => {
            let mut cases = Vec::new();
            for n in 2..=5 {
                for m in 1..=5 {
                    for (h_name, h) in corona_partners(m) {
                        cases.push(FamilyCase::Corona { n, h, h_name });
                    }
                }
            }
            cases
        }
        FamilyKind::Wheel => (4..=12).map(FamilyCase::Wheel).collect(),
        FamilyKind::Barbell => (2..=10).map(FamilyCase::Barbell).collect(),
        FamilyKind::Cocktail => (2..=12).map(FamilyCase::Cocktail).collect(),
        FamilyKind::Multipartite => random_partitions(10, super::DEFAULT_SEED)
            .into_iter()
            .map(FamilyCase::Multipartite)
            .collect(),
        FamilyKind::Cone => [
            Family::Cycle(4),
            Family::Cycle(5),
            Family::Cycle(6),
            Family::CocktailParty(2),
            Family::CocktailParty(3),
        ]
        .into_iter()
        .map(|f| FamilyCase::Cone { name: f.to_string(), g: build(f) })
        .collect(),
        FamilyKind::CompleteProduct => [
            (Family::Cycle(4), Family::Cycle(4)),
            (Family::Cycle(4), Family::Cycle(5)),
            (Family::Path(4), Family::Path(4)),
            (Family::Cycle(5), Family::Cycle(6)),
            (Family::CocktailParty(3), Family::Path(5)),
        ]
        .into_iter()
        .map(|(a, b)| FamilyCase::CompleteProduct { name: format!("{a}, {b}"), g1: build(a), g2: build(b) })
        .collect(),
    }
}

/// Compares each case's closed-form spectrum with Jacobi eigenvalues of the
/// constructed eccentricity matrix. Complete products additionally check
/// the block-diagonal matrix against the direct construction entrywise.
pub fn crosscheck_family(claim: &str, cases: &[FamilyCase], tol: f64) -> VerificationReport {
    let started = Instant::now();
    let range: Vec<String> = cases.iter().map(ToString::to_string).collect();
    let mut report = VerificationReport::new(claim, format!("{} (tol {tol:e})", range.join("; ")));
    for case in cases {
        report.checked();
        let outcome = case.closed_form().and_then(|closed| Ok((closed, case.numeric()?)));
        match outcome {
            Err(e) => report.fail(case.to_string(), format!("error: {e}"), "closed form and numeric spectrum"),
            Ok((closed, numeric)) => {
                let dev = multiset_distance(&closed.to_floats(), &numeric);
                report.deviation(dev);
                if !(dev < tol) {
                    report.fail(case.to_string(), format!("{numeric:?}"), closed.to_string());
                }
            }
        }
        if let FamilyCase::CompleteProduct { g1, g2, .. } = case {
            let block = join_ecc_matrix(g1, g2);
            let direct = eccentricity_matrix(&g1.join(g2)).map(|m| m.to_symmetric());
            match (block, direct) {
                (Ok(b), Ok(d)) if b == d => report.count("block_matrix_matches", 1),
                (b, d) => report.fail(case.to_string(), format!("direct {d:?}"), format!("block {b:?}")),
            }
        }
    }
    report.finish(started)
}

/// Exact star determinants against the closed form, via the characteristic
/// polynomial's constant term.
pub fn verify_star_determinants(range: std::ops::RangeInclusive<usize>) -> Result<VerificationReport> {
    let started = Instant::now();
    let mut report = VerificationReport::new("star-determinant", format!("n = {}..={}", range.start(), range.end()));
    for n in range {
        report.checked();
        let expected = star_spectrum(n)?.det.expect("star spectrum carries its determinant");
        let m = eccentricity_matrix(&Family::Star(n).build()?)?.to_symmetric();
        let det = m.charpoly().determinant();
        if det != expected {
            report.fail(format!("star({n})"), &det, &expected);
        }
    }
    Ok(report.finish(started))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InertiaFamily {
    Path,
    Lollipop,
}

/// Exact inertia `(2, 2, N - 4)` and rank 4 for paths (`n >= 4`) and
/// lollipops (`m >= 3`, `n >= 2`) on `N` vertices.
pub fn verify_inertia(family: InertiaFamily, grid: &[Vec<usize>]) -> Result<VerificationReport> {
    let started = Instant::now();
    let (claim, range) = match family {
        InertiaFamily::Path => ("path-inertia", "n"),
        InertiaFamily::Lollipop => ("lollipop-inertia", "(m, n)"),
    };
    let points: Vec<String> = grid.iter().map(|p| format!("{p:?}")).collect();
    let mut report = VerificationReport::new(claim, format!("{range} in {}", points.join(" ")));
    for params in grid {
        let f = match (family, params.as_slice()) {
            (InertiaFamily::Path, &[n]) if n >= 4 => Family::Path(n),
            (InertiaFamily::Lollipop, &[m, n]) if m >= 3 && n >= 2 => Family::Lollipop(m, n),
            _ => return Err(Error::param(claim, format!("grid point {params:?} outside the theorem's range"))),
        };
        report.checked();
        let g = f.build()?;
        let inertia = inertia_exact(&eccentricity_matrix(&g)?.to_symmetric());
        let expected = Inertia::new(2, 2, g.n() - 4);
        if inertia != expected {
            report.fail(f.to_string(), inertia, expected);
        } else if inertia.rank() != 4 {
            report.fail(f.to_string(), format!("rank {}", inertia.rank()), "rank 4");
        }
    }
    Ok(report.finish(started))
}

/// `B_{2,2} = K_2 ∘ K_1 = P_4`: both closed forms and the Jacobi spectrum of
/// `ε(P_4)` agree pairwise, and the exact inertia is `(2, 2, 0)`.
pub fn consistency_sentinel(tol: f64) -> Result<VerificationReport> {
    let started = Instant::now();
    let mut report = VerificationReport::new("consistency-sentinel", "barbell(2), corona(K2, K1), path(4)");
    let p4 = Family::Path(4).build()?;
    let barbell = Family::Barbell(2).build()?;
    let corona = k(2).corona(&k(1));
    for (name, g) in [("barbell(2)", &barbell), ("corona(K2, K1)", &corona)] {
        report.checked();
        if !is_isomorphic(g, &p4) {
            report.fail(name, "not isomorphic", "P4");
        }
    }
    let from_barbell = barbell_spectrum(2)?.spectrum.to_floats();
    let from_corona = corona_spectrum(2, 1)?.spectrum.to_floats();
    let m = eccentricity_matrix(&p4)?;
    let numeric = symmetric_eigenvalues(&m.to_f64(), DEFAULT_TOL)?;
    for (name, a, b) in [
        ("barbell vs corona", &from_barbell, &from_corona),
        ("barbell vs jacobi", &from_barbell, &numeric),
        ("corona vs jacobi", &from_corona, &numeric),
    ] {
        report.checked();
        let dev = multiset_distance(a, b);
        report.deviation(dev);
        if !(dev < tol) {
            report.fail(name, format!("{a:?}"), format!("{b:?}"));
        }
    }
    report.checked();
    let inertia = inertia_exact(&m.to_symmetric());
    if inertia != Inertia::new(2, 2, 0) {
        report.fail("inertia of path(4)", inertia, Inertia::new(2, 2, 0));
    }
    Ok(report.finish(started))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grids_are_well_formed() {
        assert_eq!(default_grid(FamilyKind::Star).len(), 28);
        assert_eq!(default_grid(FamilyKind::Corona).len(), 4 * (1 + 1 + 2 + 3 + 3));
        assert_eq!(default_grid(FamilyKind::Cone).len(), 5);
        assert_eq!(default_grid(FamilyKind::CompleteProduct).len(), 5);
        let parts = random_partitions(10, 1);
        assert!(parts.iter().all(|p| p.len() >= 2 && p.iter().all(|&x| x >= 2) && p.iter().sum::<usize>() <= 12));
        assert_eq!(parts, random_partitions(10, 1));
    }

    #[test]
    fn small_crosschecks_pass() {
        for kind in [FamilyKind::Barbell, FamilyKind::Cocktail, FamilyKind::Cone, FamilyKind::CompleteProduct] {
            let r = crosscheck_family(kind.name(), &default_grid(kind), 1e-8);
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn crosscheck_reports_failures() {
        // a multipartite graph with a singleton part violates the closed form's precondition
        let r = crosscheck_family("multipartite", &[FamilyCase::Multipartite(vec![1, 3])], 1e-8);
        assert_eq!(r.failure_count(), 1);
    }

    #[test]
    fn inertia_small() {
        let grid: Vec<Vec<usize>> = (4..=10).map(|n| vec![n]).collect();
        assert!(verify_inertia(InertiaFamily::Path, &grid).unwrap().passed());
        let grid = vec![vec![3, 2], vec![4, 3]];
        assert!(verify_inertia(InertiaFamily::Lollipop, &grid).unwrap().passed());
        assert!(verify_inertia(InertiaFamily::Path, &[vec![3]]).is_err());
        assert!(verify_inertia(InertiaFamily::Lollipop, &[vec![3, 1]]).is_err());
    }

    #[test]
    fn sentinel_passes() {
        let r = consistency_sentinel(1e-8).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn star_determinants() {
        let r = verify_star_determinants(3..=10).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.instances_checked, 8);
    }
}
