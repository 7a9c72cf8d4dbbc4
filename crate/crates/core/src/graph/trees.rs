use super::Graph;
use crate::error::{Error, Result};

/// Decodes a Prüfer sequence over `0..n` (length `n - 2`) into its labeled tree.
pub fn decode_prufer(seq: &[usize], n: usize) -> Result<Graph> {
    if n < 2 || seq.len() + 2 != n {
        return Err(Error::param("prufer", format!("sequence length {} does not fit n = {n}", seq.len())));
    }
    if let Some(&bad) = seq.iter().find(|&&s| s >= n) {
        return Err(Error::VertexOutOfRange { vertex: bad, n });
    }
    Ok(Graph::from_normalized(n, prufer_edges(seq, n)))
}

// Linear-time decoding: `ptr` walks the smallest leaf, and a freshly
// created leaf smaller than `ptr` is consumed immediately.
fn prufer_edges(seq: &[usize], n: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut ptr = 0;
    while degree[ptr] != 1 {
        ptr += 1;
    }
    let mut leaf = ptr;
    for &v in seq {
        edges.push((leaf.min(v), leaf.max(v)));
        degree[v] -= 1;
        if v < ptr && degree[v] == 1 {
            leaf = v;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    // the last two remaining vertices: `leaf` and n - 1
    edges.push((leaf.min(n - 1), leaf.max(n - 1)));
    edges
}

/// Every labeled tree on `n` vertices, in lexicographic Prüfer order.
///
/// The stream can be split into `n` disjoint chunks by the first Prüfer
/// symbol (see [`LabeledTrees::chunk`]); concatenating the chunks in order
/// reproduces the full stream.
#[derive(Debug, Clone)]
pub struct LabeledTrees {
    n: usize,
    seq: Vec<usize>,
    // symbols 0..fixed are pinned by the chunk prefix
    fixed: usize,
    done: bool,
}

impl LabeledTrees {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::param("labeled trees", "need n >= 2"));
        }
        Ok(LabeledTrees { n, seq: vec![0; n - 2], fixed: 0, done: false })
    }

    /// Number of chunks [`LabeledTrees::chunk`] accepts.
    pub fn chunk_count(n: usize) -> usize {
        n
    }

    /// The trees whose Prüfer sequence starts with `first`. For `n = 2`
    /// (empty sequence) chunk 0 holds the single edge and the rest are empty.
    pub fn chunk(n: usize, first: usize) -> Result<Self> {
        let mut it = Self::new(n)?;
        if first >= n {
            return Err(Error::VertexOutOfRange { vertex: first, n });
        }
        if n == 2 {
            it.done = first != 0;
        } else {
            it.seq[0] = first;
            it.fixed = 1;
        }
        Ok(it)
    }

    /// `n^(n-2)`, the number of labeled trees on `n` vertices.
    pub fn total(n: usize) -> u64 {
        (n as u64).pow(n.saturating_sub(2) as u32)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The Prüfer sequence of the tree the next call to `next` yields.
    pub fn current_sequence(&self) -> Option<&[usize]> {
        (!self.done).then_some(self.seq.as_slice())
    }

    fn advance(&mut self) {
        for pos in (self.fixed..self.seq.len()).rev() {
            self.seq[pos] += 1;
            if self.seq[pos] < self.n {
                return;
            }
            self.seq[pos] = 0;
        }
        self.done = true;
    }
}

impl Iterator for LabeledTrees {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.done {
            return None;
        }
        let tree = Graph::from_normalized(self.n, prufer_edges(&self.seq, self.n));
        self.advance();
        Some(tree)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{is_isomorphic, Family};

    #[test]
    fn cayley_counts() {
        for n in 2..=8 {
            let trees: Vec<Graph> = LabeledTrees::new(n).unwrap().collect();
            assert_eq!(trees.len() as u64, LabeledTrees::total(n), "n = {n}");
            for t in &trees {
                assert_eq!(t.edge_count(), n - 1);
                assert!(t.is_connected());
            }
        }
    }

    #[test]
    fn two_vertices_single_edge() {
        let trees: Vec<Graph> = LabeledTrees::new(2).unwrap().collect();
        assert_eq!(trees, vec![Family::Path(2).build().unwrap()]);
    }

    #[test]
    fn three_vertices_are_paths() {
        let p3 = Family::Path(3).build().unwrap();
        let trees: Vec<Graph> = LabeledTrees::new(3).unwrap().collect();
        assert_eq!(trees.len(), 3);
        assert!(trees.iter().all(|t| is_isomorphic(t, &p3)));
    }

    #[test]
    fn four_vertices_split_into_paths_and_stars() {
        let p4 = Family::Path(4).build().unwrap();
        let s4 = Family::Star(4).build().unwrap();
        let (mut paths, mut stars) = (0, 0);
        for t in LabeledTrees::new(4).unwrap() {
            if is_isomorphic(&t, &p4) {
                paths += 1;
            } else if is_isomorphic(&t, &s4) {
                stars += 1;
            }
        }
        assert_eq!((paths, stars), (12, 4));
    }

    #[test]
    fn all_distinct() {
        let mut trees: Vec<Graph> = LabeledTrees::new(6).unwrap().collect();
        trees.sort_by(|a, b| a.edges().cmp(b.edges()));
        trees.dedup();
        assert_eq!(trees.len(), 1296);
    }

    #[test]
    fn chunks_concatenate_to_full_stream() {
        for n in 2..=6 {
            let full: Vec<Graph> = LabeledTrees::new(n).unwrap().collect();
            let chunked: Vec<Graph> = (0..LabeledTrees::chunk_count(n))
                .flat_map(|c| LabeledTrees::chunk(n, c).unwrap())
                .collect();
            assert_eq!(full, chunked);
        }
    }

    #[test]
    fn decode_known_sequence() {
        // [3, 3, 3] on 5 vertices is the star centered at 3
        let t = decode_prufer(&[3, 3, 3], 5).unwrap();
        assert_eq!(t.degree(3), 4);
        // [0, 1] on 4 vertices: 2-0, 0-1, 1-3
        let t = decode_prufer(&[0, 1], 4).unwrap();
        assert_eq!(t.edges(), &[(0, 1), (0, 2), (1, 3)]);
        assert!(decode_prufer(&[5], 3).is_err());
        assert!(decode_prufer(&[0], 4).is_err());
    }
}
