//! Simple undirected graphs on vertices `0..n`.
//!
//! A [`Graph`] is immutable once built. Edges are kept as a sorted,
//! deduplicated list of pairs `(i, j)` with `i < j`, alongside sorted
//! adjacency lists.

mod families;
mod format;
mod iso;
mod trees;

pub use families::Family;
pub use format::{parse_edge_list, parse_graph6, to_edge_list, to_graph6};
pub use iso::{find_isomorphism, is_isomorphic, relabel};
pub use trees::{decode_prufer, LabeledTrees};

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawGraph", into = "RawGraph")]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct RawGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl TryFrom<RawGraph> for Graph {
    type Error = Error;

    fn try_from(raw: RawGraph) -> Result<Self> {
        Graph::new(raw.n, raw.edges)
    }
}

impl From<Graph> for RawGraph {
    fn from(g: Graph) -> Self {
        RawGraph { n: g.n, edges: g.edges }
    }
}

impl Graph {
    /// Builds a graph from an edge list. Pairs may be given in either order
    /// and duplicates are merged; self-loops and out-of-range endpoints are
    /// rejected.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::NoVertices);
        }
        let mut list = Vec::new();
        for (a, b) in edges {
            for v in [a, b] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            list.push((a.min(b), a.max(b)));
        }
        Ok(Self::from_normalized(n, list))
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, [])
    }

    // Caller guarantees i < j < n for every pair.
    pub(crate) fn from_normalized(n: usize, mut edges: Vec<(usize, usize)>) -> Self {
        edges.sort_unstable();
        edges.dedup();
        let mut adj = vec![Vec::new(); n];
        for &(i, j) in &edges {
            adj[i].push(j);
            adj[j].push(i);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Sorted edge list, each pair with `i < j`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// 0/1 adjacency matrix in row-major order.
    pub fn adjacency_matrix(&self) -> Vec<Vec<i64>> {
        let mut a = vec![vec![0; self.n]; self.n];
        for &(i, j) in &self.edges {
            a[i][j] = 1;
            a[j][i] = 1;
        }
        a
    }

    /// Breadth-first distances from `source`; `None` marks unreachable vertices.
    pub fn bfs(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::with_capacity(self.n);
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or(0);
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.bfs(0).iter().all(Option::is_some)
    }

    /// First vertex pair `(0, v)` with no path between them, if any.
    pub fn unreachable_pair(&self) -> Option<(usize, usize)> {
        self.bfs(0).iter().position(Option::is_none).map(|v| (0, v))
    }

    pub fn is_regular(&self) -> Option<usize> {
        let d = self.degree(0);
        self.adj.iter().all(|a| a.len() == d).then_some(d)
    }

    /// A vertex adjacent to every other vertex.
    pub fn dominating_vertex(&self) -> Option<usize> {
        (0..self.n).find(|&v| self.degree(v) + 1 == self.n)
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * (self.n - 1) / 2
    }

    /// True for a tree with a vertex adjacent to all others (the star
    /// `K_{1,n-1}`; for `n <= 3` every tree qualifies).
    pub fn is_star(&self) -> bool {
        self.edges.len() + 1 == self.n && self.dominating_vertex().is_some()
    }

    pub fn complement(&self) -> Graph {
        let mut edges = Vec::with_capacity(self.n * (self.n - 1) / 2 - self.edges.len());
        for i in 0..self.n {
            for j in i + 1..self.n {
                if !self.has_edge(i, j) {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_normalized(self.n, edges)
    }

    /// Complete product: disjoint union plus every edge between the parts.
    /// Vertices of `other` are shifted by `self.n()`.
    pub fn join(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(i, j)| (i + shift, j + shift)));
        for i in 0..self.n {
            for j in 0..other.n {
                edges.push((i, j + shift));
            }
        }
        Graph::from_normalized(self.n + other.n, edges)
    }

    /// Disjoint union, `other` shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(i, j)| (i + shift, j + shift)));
        Graph::from_normalized(self.n + other.n, edges)
    }

    /// Corona `self ∘ h`: hub vertex `i` of `self` is joined to every vertex
    /// of the `i`-th copy of `h`. Vertex `k` of copy `i` gets label
    /// `i + n * (k + 1)`, so hubs keep labels `0..n`.
    pub fn corona(&self, h: &Graph) -> Graph {
        let n = self.n;
        let m = h.n;
        let label = |i: usize, k: usize| i + n * (k + 1);
        let mut edges = self.edges.clone();
        for i in 0..n {
            for &(a, b) in &h.edges {
                edges.push((label(i, a), label(i, b)));
            }
            for k in 0..m {
                edges.push((i, label(i, k)));
            }
        }
        Graph::from_normalized(n * (1 + m), edges)
    }

    /// Subgraph induced by `vertices`, relabelled `0..vertices.len()` in the
    /// given order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Graph> {
        let mut edges = Vec::new();
        for (a, &u) in vertices.iter().enumerate() {
            if u >= self.n {
                return Err(Error::VertexOutOfRange { vertex: u, n: self.n });
            }
            for (b, &v) in vertices.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    edges.push((a, b));
                }
            }
        }
        Graph::new(vertices.len(), edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    pub(crate) fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
                let mut edges = Vec::new();
                let mut it = bits.into_iter();
                for i in 0..n {
                    for j in i + 1..n {
                        if it.next().unwrap() {
                            edges.push((i, j));
                        }
                    }
                }
                Graph::new(n, edges).unwrap()
            })
        })
    }

    #[test]
    fn make_graph_examples() {
        let k2 = Graph::new(2, [(0, 1)]).unwrap();
        assert_eq!(k2.edges(), &[(0, 1)]);
        let p3 = Graph::new(3, [(0, 1), (0, 2)]).unwrap();
        assert!(p3.is_star());
        assert_eq!(p3.degrees(), vec![2, 1, 1]);
        let p4 = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(p4, Family::Path(4).build().unwrap());
    }

    #[test]
    fn make_graph_normalizes_and_dedups() {
        let g = Graph::new(3, [(1, 0), (0, 1), (2, 1)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn make_graph_rejects_bad_input() {
        assert_eq!(
            Graph::new(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::new(3, [(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(Graph::new(0, []), Err(Error::NoVertices));
    }

    #[test]
    fn complement_examples() {
        let k4 = Family::Complete(4).build().unwrap();
        assert_eq!(k4.complement().edge_count(), 0);
        let c4 = Family::Cycle(4).build().unwrap();
        // 0-1-2-3-0; complement is {0,2},{1,3}
        assert_eq!(c4.complement().edges(), &[(0, 2), (1, 3)]);
    }

    #[test]
    fn join_examples() {
        let c5 = Family::Cycle(5).build().unwrap();
        let w = Graph::empty(1).unwrap().join(&c5);
        assert_eq!(w, Family::Wheel(5).build().unwrap());

        let star = Graph::empty(1).unwrap().join(&Graph::empty(4).unwrap());
        assert_eq!(star, Family::Star(5).build().unwrap());

        let p3 = Family::Path(3).build().unwrap();
        let j = p3.join(&p3);
        assert_eq!(j.n(), 6);
        assert_eq!(j.edge_count(), 13);
    }

    #[test]
    fn corona_examples() {
        let k1 = Family::Complete(1).build().unwrap();
        let k2 = Family::Complete(2).build().unwrap();
        let k3 = Family::Complete(3).build().unwrap();
        let p4 = Family::Path(4).build().unwrap();
        assert!(is_isomorphic(&k2.corona(&k1), &p4));

        let net = k3.corona(&k1);
        assert_eq!((net.n(), net.edge_count()), (6, 6));

        let g = k2.corona(&k2);
        assert_eq!((g.n(), g.edge_count()), (6, 7));
    }

    #[test]
    fn corona_labels_copies_by_stride() {
        let k3 = Family::Complete(3).build().unwrap();
        let p2 = Family::Path(2).build().unwrap();
        let g = k3.corona(&p2);
        // copy of hub 1 occupies {4, 7}
        assert_eq!(g.neighbors(1), &[0, 2, 4, 7]);
        assert!(g.has_edge(4, 7));
    }

    #[test]
    fn connectivity() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!g.is_connected());
        assert_eq!(g.unreachable_pair(), Some((0, 2)));
        assert!(Family::Path(5).build().unwrap().is_connected());
    }

    proptest! {
        #[test]
        fn complement_is_involution(g in arb_graph(9)) {
            prop_assert_eq!(g.complement().complement(), g);
        }

        #[test]
        fn join_edge_count(a in arb_graph(6), b in arb_graph(6)) {
            let j = a.join(&b);
            prop_assert_eq!(j.edge_count(), a.edge_count() + b.edge_count() + a.n() * b.n());
        }

        #[test]
        fn degree_sum_is_twice_edges(g in arb_graph(10)) {
            prop_assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.edge_count());
        }

        #[test]
        fn corona_of_complete_keeps_hub_clique(n in 1usize..5, h in arb_graph(4)) {
            let kn = Family::Complete(n).build().unwrap();
            let c = kn.corona(&h);
            prop_assert_eq!(c.n(), n * (1 + h.n()));
            prop_assert_eq!(c.edge_count(), kn.edge_count() + n * h.edge_count() + n * h.n());
            let hubs: Vec<usize> = (0..n).collect();
            prop_assert!(c.induced(&hubs).unwrap().is_complete());
        }
    }
}
