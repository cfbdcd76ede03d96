use serde::{Deserialize, Serialize};

use crate::graph::Graph;

/// Partition of the vertex set into twin classes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwinDecomposition {
    /// Classes ordered by smallest member; each class is sorted.
    pub classes: Vec<Vec<usize>>,
    /// Size of the largest class.
    pub sigma: usize,
    /// Whether some class of size `sigma` is an inclusion-maximal homogeneous set.
    pub largest_class_is_maximal_homogeneous: bool,
}

impl TwinDecomposition {
    pub fn class_of(&self, v: usize) -> Option<&[usize]> {
        self.classes.iter().find(|c| c.contains(&v)).map(Vec::as_slice)
    }

    /// Some class of maximum size.
    pub fn largest_class(&self) -> &[usize] {
        self.classes
            .iter()
            .find(|c| c.len() == self.sigma)
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }
}

/// No third vertex is adjacent to exactly one of `u`, `v`.
pub fn are_twins(g: &Graph, u: usize, v: usize) -> bool {
    u == v
        || (0..g.vertex_count())
            .filter(|&w| w != u && w != v)
            .all(|w| g.has_edge(w, u) == g.has_edge(w, v))
}

pub fn twin_decomposition(g: &Graph) -> TwinDecomposition {
    let n = g.vertex_count();
    let mut class_id: Vec<Option<usize>> = vec![None; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        if class_id[v].is_some() {
            continue;
        }
        let id = classes.len();
        let members: Vec<usize> = (v..n)
            .filter(|&u| class_id[u].is_none() && are_twins(g, v, u))
            .collect();
        for &u in &members {
            class_id[u] = Some(id);
        }
        classes.push(members);
    }
    let sigma = classes.iter().map(Vec::len).max().unwrap_or(0);
    let largest_class_is_maximal_homogeneous = classes
        .iter()
        .filter(|c| c.len() == sigma)
        .any(|c| is_maximal_homogeneous(g, c));
    TwinDecomposition {
        classes,
        sigma,
        largest_class_is_maximal_homogeneous,
    }
}

fn is_clique(g: &Graph, set: &[usize]) -> bool {
    set.iter()
        .enumerate()
        .all(|(i, &u)| set[i + 1..].iter().all(|&v| g.has_edge(u, v)))
}

fn is_independent(g: &Graph, set: &[usize]) -> bool {
    set.iter()
        .enumerate()
        .all(|(i, &u)| set[i + 1..].iter().all(|&v| !g.has_edge(u, v)))
}

/// `set` is a clique or an independent set and no outside vertex can be added
/// keeping it one.
pub fn is_maximal_homogeneous(g: &Graph, set: &[usize]) -> bool {
    let clique = is_clique(g, set);
    let independent = is_independent(g, set);
    if !clique && !independent {
        return false;
    }
    (0..g.vertex_count()).filter(|v| !set.contains(v)).all(|v| {
        let joins_clique = clique && set.iter().all(|&u| g.has_edge(u, v));
        let joins_independent = independent && set.iter().all(|&u| !g.has_edge(u, v));
        !joins_clique && !joins_independent
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, FamilySpec};

    fn one(spec: FamilySpec) -> Graph {
        generate(&spec).unwrap().into_single().unwrap()
    }

    #[test]
    fn complete_graph_is_one_class() {
        let t = twin_decomposition(&one(FamilySpec::Complete { n: 5 }));
        assert_eq!(t.classes, vec![vec![0, 1, 2, 3, 4]]);
        assert_eq!(t.sigma, 5);
        assert!(t.largest_class_is_maximal_homogeneous);
    }

    #[test]
    fn path_p4_has_singleton_classes() {
        let t = twin_decomposition(&one(FamilySpec::Path { l: 4 }));
        assert_eq!(t.sigma, 1);
        assert_eq!(t.classes.len(), 4);
        assert!(!t.largest_class_is_maximal_homogeneous);
    }

    #[test]
    fn star_leaves_form_a_class() {
        let t = twin_decomposition(&one(FamilySpec::Star { l: 4 }));
        assert_eq!(t.classes, vec![vec![0], vec![1, 2, 3]]);
        assert_eq!(t.class_of(2), Some(&[1, 2, 3][..]));
        assert!(t.largest_class_is_maximal_homogeneous);
    }

    #[test]
    fn non_maximal_independent_class() {
        // K_{1,3} plus an isolated vertex: the leaves could absorb it.
        let g = one(FamilySpec::Star { l: 4 }).disjoint_union(&Graph::empty(1));
        let t = twin_decomposition(&g);
        assert_eq!(t.sigma, 3);
        assert!(!t.largest_class_is_maximal_homogeneous);
    }
}
