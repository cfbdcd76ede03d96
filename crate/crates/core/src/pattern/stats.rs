use serde::{Deserialize, Serialize};

use super::PatternError;
use crate::graph::Graph;

/// Pendant-structure parameters of a connected pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternStats {
    /// Largest `t` with a pendant path on `t + 1` vertices; 0 without pendant vertices.
    pub pendant_path: usize,
    /// Largest `s` with a pendant star `K_{1,s}`; 0 without pendant vertices.
    pub pendant_star: usize,
    /// Largest `p` over pendant sparkler subgraphs `S_{q,p}` (`q >= 3`, `p >= 0`),
    /// or `None` if there is none.
    pub pendant_sparkler: Option<usize>,
}

pub fn pattern_stats(f: &Graph) -> Result<PatternStats, PatternError> {
    if !f.is_connected() {
        return Err(PatternError::Disconnected);
    }
    Ok(PatternStats {
        pendant_path: pendant_path(f),
        pendant_star: pendant_star(f),
        pendant_sparkler: pendant_sparklers(f).into_iter().map(|s| s.p).max(),
    })
}

/// From each pendant vertex walk inwards through degree-2 vertices; the walk
/// stops at the first vertex whose degree differs from 2.
fn pendant_path(f: &Graph) -> usize {
    let mut best = 0;
    for end in (0..f.vertex_count()).filter(|&v| f.degree(v) == 1) {
        let mut prev = end;
        let mut cur = f.neighbors(end).next().expect("pendant vertex has a neighbour");
        let mut t = 1;
        while f.degree(cur) == 2 {
            let next = f.neighbors(cur).find(|&w| w != prev).expect("degree two");
            if next == end {
                break;
            }
            prev = cur;
            cur = next;
            t += 1;
        }
        best = best.max(t);
    }
    best
}

/// A pendant star is centred at a vertex and consists of all of its pendant neighbours.
fn pendant_star(f: &Graph) -> usize {
    (0..f.vertex_count())
        .map(|v| f.neighbors(v).filter(|&u| f.degree(u) == 1).count())
        .max()
        .unwrap_or(0)
}

/// A pendant sparkler `S_{q,p}` found at attachment vertex `at`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PendantSparkler {
    pub at: usize,
    pub q: usize,
    pub p: usize,
}

/// Enumerates pendant sparklers.
///
/// For every vertex `v` of degree 1 or at least 3, each `v`-branch (a
/// component of `F - v` together with `v`) is matched against the shape of
/// `S_{q,p}` with `v` as the end of the tail, `q >= 3`, `p >= 1`. The `p = 0`
/// case is a star `K_{1,q-1}` hanging at its centre `v`: it is formed by all
/// pendant neighbours of `v` together, since each of them is a separate
/// component of `F - v`.
pub fn pendant_sparklers(f: &Graph) -> Vec<PendantSparkler> {
    let n = f.vertex_count();
    let mut out = Vec::new();
    for v in 0..n {
        let deg = f.degree(v);
        if deg != 1 && deg < 3 {
            continue;
        }
        let leaves = f.neighbors(v).filter(|&u| f.degree(u) == 1).count();
        if deg >= 3 && leaves >= 2 {
            out.push(PendantSparkler { at: v, q: leaves + 1, p: 0 });
        }
        let rest = f.remove_vertex(v).expect("in range");
        for comp in rest.components() {
            let mut vertices: Vec<usize> = comp.iter().map(|&u| if u >= v { u + 1 } else { u }).collect();
            vertices.push(v);
            vertices.sort_unstable();
            let branch = f.induced(&vertices).expect("in range");
            let root = vertices.binary_search(&v).expect("v is in its branch");
            if let Some((q, p)) = sparkler_from_tail_end(&branch, root) {
                out.push(PendantSparkler { at: v, q, p });
            }
        }
    }
    out
}

/// Matches `g` against `S_{q,p}` (`q >= 3`, `p >= 1`) whose tail ends at `end`.
fn sparkler_from_tail_end(g: &Graph, end: usize) -> Option<(usize, usize)> {
    if g.degree(end) != 1 || g.edge_count() + 1 != g.vertex_count() {
        return None;
    }
    let mut prev = end;
    let mut cur = g.neighbors(end).next()?;
    let mut p = 1;
    while g.degree(cur) == 2 {
        let next = g.neighbors(cur).find(|&w| w != prev)?;
        prev = cur;
        cur = next;
        p += 1;
    }
    let q = g.degree(cur);
    if q < 3 {
        return None;
    }
    let leaves_ok = g.neighbors(cur).filter(|&w| w != prev).all(|w| g.degree(w) == 1);
    (leaves_ok && g.vertex_count() == p + q).then_some((q, p))
}

/// Recognises `S_{q,p}` with `q >= 3` and `p >= 2`, returning `(q, p)`.
pub fn sparkler_shape(f: &Graph) -> Option<(usize, usize)> {
    let n = f.vertex_count();
    if n < 5 || f.edge_count() + 1 != n || !f.is_connected() {
        return None;
    }
    let mut hubs = (0..n).filter(|&v| f.degree(v) >= 3);
    let center = hubs.next()?;
    if hubs.next().is_some() {
        return None;
    }
    let q = f.degree(center);
    let tail_start: Vec<usize> = f.neighbors(center).filter(|&u| f.degree(u) != 1).collect();
    let [first] = tail_start[..] else {
        return None;
    };
    // A tree with one hub whose other neighbours are leaves: the remaining
    // branch is a path.
    let p = n - q;
    (f.degree(first) == 2 && p >= 2).then_some((q, p))
}

/// Recognises the star `K_{1,s}` with `s >= 3`, returning `s`.
pub fn star_shape(f: &Graph) -> Option<usize> {
    let n = f.vertex_count();
    (n >= 4 && f.edge_count() + 1 == n && f.max_degree() + 1 == n).then_some(n - 1)
}

/// Recognises the path `P_l` with `l >= 3`, returning `l`.
pub fn path_shape(f: &Graph) -> Option<usize> {
    let n = f.vertex_count();
    (n >= 3 && f.edge_count() + 1 == n && f.max_degree() == 2 && f.is_connected()).then_some(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, FamilySpec};

    fn one(spec: FamilySpec) -> Graph {
        generate(&spec).unwrap().into_single().unwrap()
    }

    #[test]
    fn sparkler_stats() {
        let s = one(FamilySpec::Sparkler { q: 4, p: 2 });
        let st = pattern_stats(&s).unwrap();
        assert_eq!((st.pendant_path, st.pendant_star), (2, 3));
        assert_eq!(st.pendant_sparkler, Some(2));
    }

    #[test]
    fn star_stats() {
        let st = pattern_stats(&one(FamilySpec::Star { l: 5 })).unwrap();
        assert_eq!(st.pendant_star, 4);
        assert_eq!(st.pendant_path, 1);
        // K_{1,4} = S_{4,1} seen from a leaf, and the star at its centre.
        assert_eq!(st.pendant_sparkler, Some(1));
    }

    #[test]
    fn paths_and_cycles() {
        let st = pattern_stats(&one(FamilySpec::Path { l: 5 })).unwrap();
        assert_eq!((st.pendant_path, st.pendant_star, st.pendant_sparkler), (4, 1, None));
        let st = pattern_stats(&one(FamilySpec::Cycle { n: 5 })).unwrap();
        assert_eq!((st.pendant_path, st.pendant_star, st.pendant_sparkler), (0, 0, None));
        let st = pattern_stats(&one(FamilySpec::Path { l: 2 })).unwrap();
        assert_eq!((st.pendant_path, st.pendant_star), (1, 1));
    }

    #[test]
    fn disconnected_pattern_is_an_error() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(pattern_stats(&g), Err(PatternError::Disconnected));
    }

    #[test]
    fn star_hanging_at_its_centre_gives_p_zero() {
        // K_4 with two pendant leaves on vertex 0.
        let g = crate::graph::attach(
            &one(FamilySpec::Complete { n: 4 }),
            0,
            &FamilySpec::Star { l: 3 },
            crate::graph::GlueRole::StarCenter,
        )
        .unwrap();
        let st = pattern_stats(&g).unwrap();
        assert_eq!(st.pendant_sparkler, Some(0));
        assert_eq!(st.pendant_star, 2);
    }

    #[test]
    fn glued_clique_sparkler_branch() {
        let g = one(FamilySpec::GluedCliqueSparkler { l: 5, p: 2, n: 3 });
        let found = pendant_sparklers(&g);
        // The glued vertex is itself the last of the p + 1 tail vertices.
        assert!(found.contains(&PendantSparkler { at: 0, q: 3, p: 3 }), "{found:?}");
        assert_eq!(pattern_stats(&g).unwrap().pendant_sparkler, Some(3));
    }

    #[test]
    fn sparkler_shape_recognition() {
        assert_eq!(sparkler_shape(&one(FamilySpec::Sparkler { q: 4, p: 4 })), Some((4, 4)));
        assert_eq!(sparkler_shape(&one(FamilySpec::Sparkler { q: 3, p: 2 })), Some((3, 2)));
        let relabelled = one(FamilySpec::Sparkler { q: 3, p: 3 }).permuted(&[5, 0, 3, 1, 4, 2]).unwrap();
        assert_eq!(sparkler_shape(&relabelled), Some((3, 3)));
        assert_eq!(sparkler_shape(&one(FamilySpec::Star { l: 5 })), None);
        assert_eq!(sparkler_shape(&one(FamilySpec::Path { l: 6 })), None);
        assert_eq!(sparkler_shape(&one(FamilySpec::SubdividedStar { s: 3, t: 2 })), None);
    }
}
