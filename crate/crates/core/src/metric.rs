//! Distances, eccentricities and the eccentricity matrix.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{Matrix, SymmetricIntMatrix};

/// Dense all-pairs shortest-path distances of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.d[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.d[i * self.n..(i + 1) * self.n]
    }

    /// Eccentricity of every vertex (row maxima).
    pub fn eccentricities(&self) -> Vec<u32> {
        (0..self.n).map(|i| self.row(i).iter().copied().max().unwrap_or(0)).collect()
    }

    pub fn diameter(&self) -> u32 {
        self.d.iter().copied().max().unwrap_or(0)
    }

    pub fn radius(&self) -> u32 {
        self.eccentricities().into_iter().min().unwrap_or(0)
    }

    pub fn to_matrix(&self) -> Matrix<i64> {
        Matrix::from_fn(self.n, self.n, |i, j| self.get(i, j) as i64)
    }
}

/// All-pairs distances by one breadth-first search per source.
pub fn apsp(g: &Graph) -> Result<DistanceMatrix> {
    let n = g.n();
    let mut d = vec![0u32; n * n];
    let mut queue = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for s in 0..n {
        let row = &mut d[s * n..(s + 1) * n];
        seen.iter_mut().for_each(|x| *x = false);
        queue.clear();
        queue.push(s);
        seen[s] = true;
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    row[w] = row[u] + 1;
                    queue.push(w);
                }
            }
        }
        if queue.len() < n {
            let v = seen.iter().position(|&x| !x).unwrap_or(0);
            return Err(Error::Disconnected { u: s, v });
        }
    }
    Ok(DistanceMatrix { n, d })
}

/// The eccentricity matrix: `d(i, j)` where it equals `min(e(i), e(j))`,
/// zero elsewhere.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EccentricityMatrix {
    n: usize,
    entries: Vec<Vec<u32>>,
}

impl EccentricityMatrix {
    pub fn from_distances(dist: &DistanceMatrix) -> Self {
        let n = dist.n();
        let ecc = dist.eccentricities();
        let entries = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let d = dist.get(i, j);
                        if i != j && d == ecc[i].min(ecc[j]) {
                            d
                        } else {
                            0
                        }
                    })
                    .collect()
            })
            .collect();
        EccentricityMatrix { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.entries
    }

    pub fn to_f64(&self) -> Matrix<f64> {
        Matrix::from_fn(self.n, self.n, |i, j| self.entries[i][j] as f64)
    }

    pub fn to_symmetric(&self) -> SymmetricIntMatrix {
        SymmetricIntMatrix::from_i64(&Matrix::from_fn(self.n, self.n, |i, j| self.entries[i][j] as i64))
            .expect("eccentricity matrices are symmetric")
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries
            .iter()
            .flatten()
            .map(|&x| (x as f64) * (x as f64))
            .sum::<f64>()
            .sqrt()
    }

    /// One row per line, comma separated.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(u32::to_string).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    /// Graph with an edge wherever the matrix has a nonzero entry.
    pub fn support_graph(&self) -> Graph {
        let mut edges = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.entries[i][j] != 0 {
                    edges.push((i, j));
                }
            }
        }
        Graph::new(self.n, edges).expect("support graph edges are in range")
    }

    /// A nonnegative symmetric matrix is irreducible exactly when its
    /// support graph is connected.
    pub fn is_irreducible(&self) -> bool {
        self.support_graph().is_connected()
    }
}

pub fn eccentricity_matrix(g: &Graph) -> Result<EccentricityMatrix> {
    Ok(EccentricityMatrix::from_distances(&apsp(g)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Family, LabeledTrees};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn ecc(f: Family) -> EccentricityMatrix {
        eccentricity_matrix(&f.build().unwrap()).unwrap()
    }

    fn rows(m: &EccentricityMatrix) -> Vec<Vec<u32>> {
        m.rows().to_vec()
    }

    #[test]
    fn apsp_small() {
        let d = apsp(&Family::Path(3).build().unwrap()).unwrap();
        assert_eq!((d.get(0, 2), d.get(0, 1), d.get(1, 2)), (2, 1, 1));
        let d = apsp(&Family::Complete(4).build().unwrap()).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(d.get(i, j), (i != j) as u32);
            }
        }
    }

    #[test]
    fn apsp_rejects_disconnected() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(apsp(&g), Err(Error::Disconnected { u: 0, v: 2 }));
        assert!(eccentricity_matrix(&g).is_err());
    }

    fn floyd_warshall(g: &Graph) -> Vec<Vec<u32>> {
        let n = g.n();
        let inf = u32::MAX / 4;
        let mut d = vec![vec![inf; n]; n];
        for (i, row) in d.iter_mut().enumerate() {
            row[i] = 0;
        }
        for &(i, j) in g.edges() {
            d[i][j] = 1;
            d[j][i] = 1;
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    let via = d[i][k] + d[k][j];
                    if via < d[i][j] {
                        d[i][j] = via;
                    }
                }
            }
        }
        d
    }

    fn random_connected(rng: &mut ChaCha8Rng, n: usize) -> Graph {
        // random spanning tree plus extra edges
        let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
        let extra = rng.gen_range(0..=n);
        for _ in 0..extra {
            let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
            if a != b {
                edges.push((a, b));
            }
        }
        Graph::new(n, edges).unwrap()
    }

    #[test]
    fn apsp_matches_floyd_warshall() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let n = rng.gen_range(2..=30);
            let g = random_connected(&mut rng, n);
            let d = apsp(&g).unwrap();
            let fw = floyd_warshall(&g);
            for i in 0..n {
                assert_eq!(d.row(i), fw[i].as_slice());
            }
        }
    }

    #[test]
    fn star_matrix() {
        assert_eq!(rows(&ecc(Family::Star(3))), vec![vec![0, 1, 1], vec![1, 0, 2], vec![1, 2, 0]]);
    }

    #[test]
    fn path_matrix() {
        assert_eq!(
            rows(&ecc(Family::Path(4))),
            vec![vec![0, 0, 2, 3], vec![0, 0, 0, 2], vec![2, 0, 0, 0], vec![3, 2, 0, 0]]
        );
    }

    #[test]
    fn complete_matrix_equals_distance_matrix() {
        let g = Family::Complete(5).build().unwrap();
        let m = eccentricity_matrix(&g).unwrap();
        let d = apsp(&g).unwrap();
        for i in 0..5 {
            for j in 0..5 {
                assert_eq!(m.get(i, j), d.get(i, j));
            }
        }
    }

    #[test]
    fn cocktail_party_matrix() {
        assert_eq!(
            rows(&ecc(Family::CocktailParty(2))),
            vec![vec![0, 0, 2, 0], vec![0, 0, 0, 2], vec![2, 0, 0, 0], vec![0, 2, 0, 0]]
        );
    }

    #[test]
    fn support_graphs() {
        let k5 = ecc(Family::Complete(5));
        assert!(k5.support_graph().is_complete());
        assert!(k5.is_irreducible());

        let c4 = ecc(Family::Cycle(4));
        assert_eq!(c4.support_graph().edges(), &[(0, 2), (1, 3)]);
        assert!(!c4.is_irreducible());

        let p4 = ecc(Family::Path(4));
        assert_eq!(p4.support_graph().edges(), &[(0, 2), (0, 3), (1, 3)]);
        assert!(p4.is_irreducible());
    }

    #[test]
    fn csv_output() {
        assert_eq!(ecc(Family::Star(3)).to_csv(), "0,1,1\n1,0,2\n1,2,0\n");
    }

    #[test]
    fn json_shape() {
        let v = serde_json::to_value(ecc(Family::Path(2))).unwrap();
        assert_eq!(v, serde_json::json!({"n": 2, "entries": [[0, 1], [1, 0]]}));
    }

    #[test]
    fn structural_invariants_on_random_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let n = rng.gen_range(2..=14);
            let g = random_connected(&mut rng, n);
            let d = apsp(&g).unwrap();
            let e = d.eccentricities();
            let m = EccentricityMatrix::from_distances(&d);
            let (rad, diam) = (d.radius(), d.diameter());
            for i in 0..n {
                assert!(rad <= e[i] && e[i] <= diam);
                assert_eq!(m.get(i, i), 0);
                assert!(m.rows()[i].contains(&e[i]), "row {i} misses its eccentricity");
                for j in 0..n {
                    assert_eq!(m.get(i, j), m.get(j, i));
                    assert!(m.get(i, j) == 0 || m.get(i, j) == d.get(i, j));
                    for k in 0..n {
                        assert!(d.get(i, k) <= d.get(i, j) + d.get(j, k));
                    }
                }
            }
        }
    }

    #[test]
    fn trees_are_irreducible() {
        for n in 2..=8 {
            for t in LabeledTrees::new(n).unwrap() {
                assert!(eccentricity_matrix(&t).unwrap().is_irreducible());
            }
        }
    }

    #[test]
    fn complete_bipartite_is_reducible() {
        assert!(!ecc(Family::CompleteMultipartite(vec![2, 3])).is_irreducible());
    }
}
