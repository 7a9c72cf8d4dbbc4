use std::fmt;

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

/// Named graph families.
///
/// Labeling conventions: the star center and the wheel hub are vertex 0;
/// the lollipop's clique is `0..m` and its path `m..m+n`, bridged between
/// `m - 1` and `m`; the barbell's cliques are `0..n` and `n..2n`, bridged
/// between `0` and `n`; the cocktail-party graph misses exactly the edges
/// `{i, i + n}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", content = "params", rename_all = "kebab-case")]
pub enum Family {
    Empty(usize),
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Star(usize),
    CompleteMultipartite(Vec<usize>),
    /// Wheel with the given rim length (`rim + 1` vertices).
    Wheel(usize),
    Barbell(usize),
    CocktailParty(usize),
    Lollipop(usize, usize),
}

impl Family {
    /// Resolves a family from its CLI name and integer parameters.
    pub fn from_name(name: &str, params: &[usize]) -> Result<Self> {
        let one = |family: &str| -> Result<usize> {
            match params {
                [p] => Ok(*p),
                _ => Err(Error::param(family, "expects exactly one parameter")),
            }
        };
        Ok(match name {
            "empty" => Family::Empty(one(name)?),
            "path" => Family::Path(one(name)?),
            "cycle" => Family::Cycle(one(name)?),
            "complete" => Family::Complete(one(name)?),
            "star" => Family::Star(one(name)?),
            "wheel" => Family::Wheel(one(name)?),
            "barbell" => Family::Barbell(one(name)?),
            "cocktail" | "cocktail-party" => Family::CocktailParty(one(name)?),
            "multipartite" | "complete-multipartite" => {
                Family::CompleteMultipartite(params.to_vec())
            }
            "lollipop" => match params {
                [m, n] => Family::Lollipop(*m, *n),
                _ => return Err(Error::param(name, "expects two parameters m n")),
            },
            other => return Err(Error::param(other, "unknown family")),
        })
    }

    pub fn build(&self) -> Result<Graph> {
        match *self {
            Family::Empty(n) => Graph::empty(n),
            Family::Path(n) => {
                at_least("path", n, 1)?;
                Ok(Graph::from_normalized(n, (1..n).map(|i| (i - 1, i)).collect()))
            }
            Family::Cycle(n) => {
                at_least("cycle", n, 3)?;
                let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
                edges.push((0, n - 1));
                Ok(Graph::from_normalized(n, edges))
            }
            Family::Complete(n) => {
                at_least("complete", n, 1)?;
                Ok(complete(n))
            }
            Family::Star(n) => {
                at_least("star", n, 2)?;
                Ok(Graph::from_normalized(n, (1..n).map(|i| (0, i)).collect()))
            }
            Family::CompleteMultipartite(ref parts) => {
                if parts.len() < 2 {
                    return Err(Error::param("multipartite", "needs at least two parts"));
                }
                if parts.contains(&0) {
                    return Err(Error::param("multipartite", "parts must be positive"));
                }
                let n: usize = parts.iter().sum();
                let mut class = Vec::with_capacity(n);
                for (c, &size) in parts.iter().enumerate() {
                    class.extend(std::iter::repeat(c).take(size));
                }
                let mut edges = Vec::new();
                for i in 0..n {
                    for j in i + 1..n {
                        if class[i] != class[j] {
                            edges.push((i, j));
                        }
                    }
                }
                Ok(Graph::from_normalized(n, edges))
            }
            Family::Wheel(rim) => {
                at_least("wheel", rim, 3)?;
                Ok(Graph::empty(1)?.join(&Family::Cycle(rim).build()?))
            }
            Family::Barbell(n) => {
                at_least("barbell", n, 2)?;
                let k = complete(n);
                let two = k.disjoint_union(&k);
                let mut edges = two.edges().to_vec();
                edges.push((0, n));
                Ok(Graph::from_normalized(2 * n, edges))
            }
            Family::CocktailParty(n) => {
                at_least("cocktail-party", n, 2)?;
                let edges = complete(2 * n)
                    .edges()
                    .iter()
                    .copied()
                    .filter(|&(i, j)| j != i + n)
                    .collect();
                Ok(Graph::from_normalized(2 * n, edges))
            }
            Family::Lollipop(m, n) => {
                at_least("lollipop clique", m, 3)?;
                at_least("lollipop path", n, 1)?;
                let mut edges = complete(m).edges().to_vec();
                edges.extend((m..m + n - 1).map(|i| (i, i + 1)));
                edges.push((m - 1, m));
                Ok(Graph::from_normalized(m + n, edges))
            }
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Empty(n) => write!(f, "empty({n})"),
            Family::Path(n) => write!(f, "path({n})"),
            Family::Cycle(n) => write!(f, "cycle({n})"),
            Family::Complete(n) => write!(f, "complete({n})"),
            Family::Star(n) => write!(f, "star({n})"),
            Family::CompleteMultipartite(p) => {
                let parts: Vec<String> = p.iter().map(usize::to_string).collect();
                write!(f, "multipartite({})", parts.join(","))
            }
            Family::Wheel(n) => write!(f, "wheel({n})"),
            Family::Barbell(n) => write!(f, "barbell({n})"),
            Family::CocktailParty(n) => write!(f, "cocktail-party({n})"),
            Family::Lollipop(m, n) => write!(f, "lollipop({m},{n})"),
        }
    }
}

fn at_least(family: &str, value: usize, min: usize) -> Result<()> {
    if value < min {
        Err(Error::param(family, format!("parameter {value} below minimum {min}")))
    } else {
        Ok(())
    }
}

fn complete(n: usize) -> Graph {
    let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            edges.push((i, j));
        }
    }
    Graph::from_normalized(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_degrees() {
        let s = Family::Star(4).build().unwrap();
        assert_eq!(s.degrees(), vec![3, 1, 1, 1]);
    }

    #[test]
    fn cocktail_party_two_is_four_cycle() {
        let cp = Family::CocktailParty(2).build().unwrap();
        assert_eq!(cp.edge_count(), 4);
        assert!(cp.is_regular() == Some(2) && cp.is_connected());
        assert!(!cp.has_edge(0, 2) && !cp.has_edge(1, 3));
    }

    #[test]
    fn lollipop_shape() {
        let l = Family::Lollipop(3, 2).build().unwrap();
        assert_eq!((l.n(), l.edge_count()), (5, 5));
        assert!(l.has_edge(2, 3) && l.has_edge(3, 4));
    }

    #[test]
    fn barbell_and_wheel() {
        let b = Family::Barbell(3).build().unwrap();
        assert_eq!((b.n(), b.edge_count()), (6, 7));
        assert!(b.has_edge(0, 3));
        let w = Family::Wheel(4).build().unwrap();
        assert_eq!(w.degree(0), 4);
        assert_eq!(w.edge_count(), 8);
    }

    #[test]
    fn multipartite_edges() {
        let g = Family::CompleteMultipartite(vec![2, 3]).build().unwrap();
        assert_eq!(g.edge_count(), 6);
        let g = Family::CompleteMultipartite(vec![1, 1, 1]).build().unwrap();
        assert!(g.is_complete());
    }

    #[test]
    fn parameters_below_minimum_are_rejected() {
        for fam in [
            Family::Cycle(2),
            Family::Wheel(2),
            Family::Barbell(1),
            Family::CocktailParty(1),
            Family::Lollipop(2, 2),
            Family::Lollipop(3, 0),
            Family::CompleteMultipartite(vec![3]),
            Family::CompleteMultipartite(vec![2, 0]),
        ] {
            assert!(matches!(fam.build(), Err(Error::InvalidParameter { .. })), "{fam}");
        }
    }

    #[test]
    fn from_name() {
        assert_eq!(Family::from_name("lollipop", &[3, 2]).unwrap(), Family::Lollipop(3, 2));
        assert_eq!(
            Family::from_name("multipartite", &[2, 2, 3]).unwrap(),
            Family::CompleteMultipartite(vec![2, 2, 3])
        );
        assert!(Family::from_name("star", &[]).is_err());
        assert!(Family::from_name("petersen", &[10]).is_err());
    }
}
