use super::Graph;
use crate::error::{Error, Result};

/// Applies a vertex permutation: vertex `v` of `g` becomes `perm[v]`.
pub fn relabel(g: &Graph, perm: &[usize]) -> Result<Graph> {
    let n = g.n();
    let mut seen = vec![false; n];
    if perm.len() != n {
        return Err(Error::ShapeMismatch(format!("permutation of length {} for {n} vertices", perm.len())));
    }
    for &p in perm {
        if p >= n || std::mem::replace(&mut seen[p], true) {
            return Err(Error::Precondition("relabel needs a permutation".into()));
        }
    }
    Graph::new(n, g.edges().iter().map(|&(i, j)| (perm[i], perm[j])))
}

/// Brute-force isomorphism search with degree pruning. Intended for small
/// graphs (a dozen vertices or so); cost grows factorially in the worst case.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return None;
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return None;
    }
    let n = g.n();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend(g, h, 0, &mut map, &mut used).then_some(map)
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    find_isomorphism(g, h).is_some()
}

fn extend(g: &Graph, h: &Graph, v: usize, map: &mut [usize], used: &mut [bool]) -> bool {
    if v == g.n() {
        return true;
    }
    for cand in 0..h.n() {
        if used[cand] || h.degree(cand) != g.degree(v) {
            continue;
        }
        let consistent = (0..v).all(|u| g.has_edge(u, v) == h.has_edge(map[u], cand));
        if !consistent {
            continue;
        }
        map[v] = cand;
        used[cand] = true;
        if extend(g, h, v + 1, map, used) {
            return true;
        }
        used[cand] = false;
    }
    map[v] = usize::MAX;
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    #[test]
    fn relabelled_graphs_are_isomorphic() {
        let g = Family::Lollipop(3, 3).build().unwrap();
        let h = relabel(&g, &[5, 3, 1, 0, 2, 4]).unwrap();
        let map = find_isomorphism(&g, &h).unwrap();
        assert_eq!(relabel(&g, &map).unwrap(), h);
    }

    #[test]
    fn distinguishes_same_degree_sequence() {
        // C6 vs two triangles: both 2-regular on 6 vertices
        let c6 = Family::Cycle(6).build().unwrap();
        let k3 = Family::Complete(3).build().unwrap();
        assert!(!is_isomorphic(&c6, &k3.disjoint_union(&k3)));
    }

    #[test]
    fn rejects_non_permutation() {
        let g = Family::Path(3).build().unwrap();
        assert!(relabel(&g, &[0, 0, 1]).is_err());
        assert!(relabel(&g, &[0, 1]).is_err());
    }
}
