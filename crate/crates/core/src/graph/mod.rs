//! Finite simple undirected graphs over indexed vertices.
//!
//! Adjacency is stored as a dense bit matrix so that neighbourhood tests are a
//! single word operation for the small graphs the solvers work on.

mod families;
mod io;

pub use families::{
    attach, generate, generate_uncapped, lower_pair_layout, Family, FamilyKind, FamilySpec,
    GlueRole, LowerPairLayout,
};
pub use io::{from_graph6, parse_edge_list, to_edge_list, to_graph6};

use std::fmt;

use thiserror::Error;

/// Largest graph accepted as a game-solver input.
pub const SOLVER_VERTEX_CAP: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("self-loop at vertex {0} is not allowed in a simple graph")]
    SelfLoop(usize),
    #[error("invalid parameter for {family}: {bound}")]
    InvalidParameter { family: &'static str, bound: String },
    #[error("graph has {vertex_count} vertices, above the cap of {cap}")]
    TooLarge { vertex_count: usize, cap: usize },
    #[error("glue role {role:?} is not valid for a {part} part")]
    InvalidGlue { role: GlueRole, part: &'static str },
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("malformed graph6 data: {0}")]
    Graph6(String),
}

/// A finite simple undirected graph on vertices `0..vertex_count`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Graph {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    fn check(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                vertex_count: self.n,
            })
        }
    }

    /// Adds the edge `{u, v}`; adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
        self.bits[v * self.words + u / 64] |= 1 << (u % 64);
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        let ones: u32 = self.bits.iter().map(|w| w.count_ones()).sum();
        ones as usize / 2
    }

    /// Adjacency test. Panics if either index is out of range.
    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        assert!(u < self.n && v < self.n, "vertex index out of range");
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    /// Neighbours of `v` as a 64-bit mask. Only meaningful for graphs within the solver cap.
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        debug_assert!(self.n <= 64);
        self.bits[v * self.words]
    }

    /// Neighbours of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().flat_map(|(wi, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }

    pub fn neighborhood(&self, v: usize) -> Result<Vec<usize>, GraphError> {
        self.check(v)?;
        Ok(self.neighbors(v).collect())
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Induced subgraph on `vertices`, keeping their relative order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Graph, GraphError> {
        for &v in vertices {
            self.check(v)?;
        }
        let mut sorted = vertices.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut g = Graph::empty(sorted.len());
        for (i, &u) in sorted.iter().enumerate() {
            for (j, &v) in sorted.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j)?;
                }
            }
        }
        Ok(g)
    }

    /// `G - v`: indices above `v` shift down by one.
    pub fn remove_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        self.check(v)?;
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced(&keep)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Disjoint union; the vertices of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.add_edge(u, v).expect("in range");
        }
        for (u, v) in other.edges() {
            g.add_edge(u + self.n, v + self.n).expect("in range");
        }
        g
    }

    /// Relabels vertices: vertex `v` of `self` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        if perm.len() != self.n {
            return Err(GraphError::InvalidParameter {
                family: "permutation",
                bound: format!("length {} differs from vertex count {}", perm.len(), self.n),
            });
        }
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v])?;
        }
        Ok(g)
    }

    pub fn ensure_within(&self, cap: usize) -> Result<(), GraphError> {
        if self.n > cap {
            Err(GraphError::TooLarge {
                vertex_count: self.n,
                cap,
            })
        } else {
            Ok(())
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}; ", self.n)?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_edges() -> Graph {
        Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap()
    }

    #[test]
    fn adjacency_is_symmetric_and_irreflexive() {
        let mut g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(g.has_edge(1, 0) && g.has_edge(0, 1));
        assert!(!g.has_edge(0, 0));
        assert_eq!(g.add_edge(1, 1), Err(GraphError::SelfLoop(1)));
    }

    #[test]
    fn out_of_range_edge_is_rejected() {
        let err = Graph::from_edges(2, &[(0, 2)]).unwrap_err();
        assert!(matches!(err, GraphError::VertexOutOfRange { vertex: 2, .. }));
    }

    #[test]
    fn connectivity() {
        assert!(Graph::empty(0).is_connected());
        assert!(Graph::empty(1).is_connected());
        assert!(!two_edges().is_connected());
        assert_eq!(two_edges().components(), vec![vec![0, 1], vec![2, 3]]);
    }

    #[test]
    fn remove_vertex_compacts_indices() {
        let k3 = Graph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        for v in 0..3 {
            let k2 = k3.remove_vertex(v).unwrap();
            assert_eq!(k2, Graph::from_edges(2, &[(0, 1)]).unwrap());
        }
        assert!(k3.remove_vertex(3).is_err());
    }

    #[test]
    fn neighborhood_and_degree() {
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(c4.neighborhood(0).unwrap(), vec![1, 3]);
        assert_eq!(c4.max_degree(), 2);
        assert!(c4.neighborhood(4).is_err());
        assert_eq!(c4.edge_count(), 4);
    }

    #[test]
    fn wide_graphs_use_multiple_words() {
        let mut g = Graph::empty(130);
        g.add_edge(0, 129).unwrap();
        g.add_edge(64, 65).unwrap();
        assert!(g.has_edge(129, 0));
        assert_eq!(g.neighbors(0).collect::<Vec<_>>(), vec![129]);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 129), (64, 65)]);
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn induced_keeps_relative_order() {
        let g = Graph::from_edges(5, &[(0, 4), (4, 2), (1, 3)]).unwrap();
        let sub = g.induced(&[4, 0, 2]).unwrap();
        assert_eq!(sub, Graph::from_edges(3, &[(0, 2), (1, 2)]).unwrap());
    }
}
