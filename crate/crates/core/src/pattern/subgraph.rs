use serde::{Deserialize, Serialize};

use crate::graph::Graph;

/// An injective map from pattern vertices to host vertices that sends every
/// pattern edge to a host edge. `map[f]` is the image of pattern vertex `f`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Embedding {
    pub map: Vec<usize>,
}

impl Embedding {
    /// Replays the embedding edge by edge.
    pub fn is_valid(&self, host: &Graph, pattern: &Graph) -> bool {
        if self.map.len() != pattern.vertex_count() {
            return false;
        }
        let mut used = vec![false; host.vertex_count()];
        for &h in &self.map {
            if h >= host.vertex_count() || std::mem::replace(&mut used[h], true) {
                return false;
            }
        }
        pattern.edges().all(|(u, v)| host.has_edge(self.map[u], self.map[v]))
    }
}

/// Order in which pattern vertices are matched: repeatedly the smallest
/// unplaced vertex adjacent to a placed one, or the smallest unplaced vertex
/// when the placed set has no outside neighbours.
fn search_order(pattern: &Graph) -> Vec<usize> {
    let n = pattern.vertex_count();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let next = (0..n)
            .find(|&v| !placed[v] && pattern.neighbors(v).any(|u| placed[u]))
            .or_else(|| (0..n).find(|&v| !placed[v]))
            .expect("an unplaced vertex remains");
        placed[next] = true;
        order.push(next);
    }
    order
}

struct Search<'a> {
    host: &'a Graph,
    words: usize,
    host_rows: Vec<u64>,
    host_deg: Vec<usize>,
    order: Vec<usize>,
    pattern_deg: Vec<usize>,
    /// For each position in `order`, the earlier positions adjacent to it.
    back_edges: Vec<Vec<usize>>,
    images: Vec<usize>,
    used: Vec<u64>,
}

impl Search<'_> {
    fn run(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let mut candidates = vec![!0u64; self.words];
        for &earlier in &self.back_edges[depth] {
            let img = self.images[earlier];
            let row = &self.host_rows[img * self.words..(img + 1) * self.words];
            for (c, r) in candidates.iter_mut().zip(row) {
                *c &= r;
            }
        }
        for (c, u) in candidates.iter_mut().zip(&self.used) {
            *c &= !u;
        }
        let need = self.pattern_deg[self.order[depth]];
        for (wi, &word) in candidates.iter().enumerate() {
            let mut w = word;
            while w != 0 {
                let h = wi * 64 + w.trailing_zeros() as usize;
                w &= w - 1;
                if h >= self.host.vertex_count() {
                    break;
                }
                if self.host_deg[h] < need {
                    continue;
                }
                self.images[depth] = h;
                self.used[wi] |= 1 << (h % 64);
                if self.run(depth + 1) {
                    return true;
                }
                self.used[wi] &= !(1 << (h % 64));
            }
        }
        false
    }
}

/// Finds a (not necessarily induced) copy of `pattern` in `host`.
///
/// Pattern vertices are matched in the order of [`search_order`] and host
/// candidates are tried in increasing index, so the result is the
/// lexicographically least embedding along that order. For patterns whose
/// every vertex is adjacent to an earlier one (all generated families) that
/// order is the plain index order.
pub fn find_subgraph(host: &Graph, pattern: &Graph) -> Option<Embedding> {
    let k = pattern.vertex_count();
    if k > host.vertex_count() || pattern.edge_count() > host.edge_count() {
        return None;
    }
    let order = search_order(pattern);
    let mut position = vec![0; k];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let back_edges = order
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            pattern
                .neighbors(v)
                .map(|u| position[u])
                .filter(|&j| j < i)
                .collect()
        })
        .collect();
    let n = host.vertex_count();
    let words = n.div_ceil(64).max(1);
    let mut host_rows = vec![0u64; n * words];
    for v in 0..n {
        for u in host.neighbors(v) {
            host_rows[v * words + u / 64] |= 1 << (u % 64);
        }
    }
    let mut search = Search {
        host,
        words,
        host_rows,
        host_deg: (0..n).map(|v| host.degree(v)).collect(),
        pattern_deg: (0..k).map(|v| pattern.degree(v)).collect(),
        order,
        back_edges,
        images: vec![0; k],
        used: vec![0; words],
    };
    if !search.run(0) {
        return None;
    }
    let mut map = vec![0; k];
    for (i, &v) in search.order.iter().enumerate() {
        map[v] = search.images[i];
    }
    Some(Embedding { map })
}

/// Isomorphism test: equal orders and sizes plus a spanning embedding.
pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    let degrees = |g: &Graph| {
        let mut d: Vec<usize> = (0..g.vertex_count()).map(|v| g.degree(v)).collect();
        d.sort_unstable();
        d
    };
    degrees(a) == degrees(b) && find_subgraph(a, b).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, FamilySpec};

    fn one(spec: FamilySpec) -> Graph {
        generate(&spec).unwrap().into_single().unwrap()
    }

    #[test]
    fn edge_pattern_found_in_any_graph_with_an_edge() {
        let k2 = one(FamilySpec::Path { l: 2 });
        let host = Graph::from_edges(5, &[(3, 4)]).unwrap();
        assert_eq!(find_subgraph(&host, &k2).unwrap().map, vec![3, 4]);
        assert!(find_subgraph(&Graph::empty(5), &k2).is_none());
    }

    #[test]
    fn returns_lexicographically_least_embedding() {
        let p3 = one(FamilySpec::Path { l: 3 });
        let c5 = one(FamilySpec::Cycle { n: 5 });
        assert_eq!(find_subgraph(&c5, &p3).unwrap().map, vec![0, 1, 2]);
        let k4 = one(FamilySpec::Complete { n: 4 });
        let star = one(FamilySpec::Star { l: 4 });
        assert_eq!(find_subgraph(&k4, &star).unwrap().map, vec![0, 1, 2, 3]);
    }

    #[test]
    fn empty_pattern_always_embeds() {
        assert_eq!(find_subgraph(&Graph::empty(0), &Graph::empty(0)).unwrap().map, Vec::<usize>::new());
        assert!(find_subgraph(&Graph::empty(1), &Graph::empty(2)).is_none());
    }

    #[test]
    fn embedding_validation_rejects_non_injective_maps() {
        let p3 = one(FamilySpec::Path { l: 3 });
        let k3 = one(FamilySpec::Complete { n: 3 });
        assert!(Embedding { map: vec![0, 1, 2] }.is_valid(&k3, &p3));
        assert!(!Embedding { map: vec![0, 1, 0] }.is_valid(&k3, &p3));
        assert!(!Embedding { map: vec![0, 1] }.is_valid(&k3, &p3));
    }

    #[test]
    fn isomorphism_of_relabelled_graphs() {
        let s = one(FamilySpec::Sparkler { q: 4, p: 2 });
        let relabelled = s.permuted(&[5, 3, 1, 0, 2, 4]).unwrap();
        assert!(are_isomorphic(&s, &relabelled));
        assert!(!are_isomorphic(&s, &one(FamilySpec::Path { l: 6 })));
    }
}
