//! Generators for the graph families used by the scenarios.
//!
//! Every generator uses a fixed vertex layout so callers can address named
//! vertices directly:
//!
//! | family | layout |
//! |---|---|
//! | `Path l` | `0 - 1 - ... - (l-1)` |
//! | `Cycle n` | path plus the edge `(n-1, 0)` |
//! | `CompleteBipartite t s` | part of size `t` first, then part of size `s` |
//! | `Star l` | `K_{1,l-1}`, centre `0`, leaves `1..l` |
//! | `Sparkler q p` | centre `0`, star leaves `1..q`, tail `q..q+p` starting at the centre |
//! | `BrokenFan n` | path `0..n-2`, hub `n-2` (adjacent to `0..n-3`), extra pendant `n-1` on the hub |
//! | `SubdividedStar s t` | centre `0`, branch `i` is `1+i*t ..= (i+1)*t`, outward |
//! | `SparklerLowerPair q p n` | see [`LowerPairLayout`] |
//! | `CliquePendantPath k n` | clique `0..k`, path of `n` vertices whose first vertex is clique vertex `0` |
//! | `CliquePendantStar k n` | clique `0..k`, `n` leaves on clique vertex `0` |
//! | `GluedCliqueSparkler l p n` | clique `0..l`; a copy of `S_{n,p+1}` whose tail end is clique vertex `0` |

use serde::{Deserialize, Serialize};

use super::{Graph, GraphError, SOLVER_VERTEX_CAP};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum FamilySpec {
    /// `P_l`, `l` vertices.
    Path { l: usize },
    /// `C_n`, `n >= 3`.
    Cycle { n: usize },
    /// `K_n`.
    Complete { n: usize },
    /// `K_{t,s}`.
    CompleteBipartite { t: usize, s: usize },
    /// `K_{1,l-1}`: a star on `l >= 1` vertices.
    Star { l: usize },
    /// `S_{q,p}`: `K_{1,q-1}` whose centre gains a tail path of `p` vertices.
    Sparkler { q: usize, p: usize },
    /// `B_n`, `n >= 4`.
    BrokenFan { n: usize },
    /// `M_{s,t}`: `K_{1,s}` with every edge subdivided into a path of `t` edges.
    SubdividedStar { s: usize, t: usize },
    /// The pair `(G_{a,b,n}, H_{a,b,n})` separating `S_{q,p}`-containment.
    SparklerLowerPair { q: usize, p: usize, n: usize },
    /// `K_k` with a pendant path on `n` vertices glued at one clique vertex.
    CliquePendantPath { k: usize, n: usize },
    /// `K_k` with a pendant star `K_{1,n}` centred at one clique vertex.
    CliquePendantStar { k: usize, n: usize },
    /// `K_l` glued with `S_{n,p+1}` at the end vertex of the sparkler's tail.
    GluedCliqueSparkler { l: usize, p: usize, n: usize },
}

/// Family names as accepted on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    Star,
    Sparkler,
    BrokenFan,
    SubdividedStar,
    SparklerLowerPair,
    CliquePendantPath,
    CliquePendantStar,
    GluedCliqueSparkler,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 12] = [
        FamilyKind::Path,
        FamilyKind::Cycle,
        FamilyKind::Complete,
        FamilyKind::CompleteBipartite,
        FamilyKind::Star,
        FamilyKind::Sparkler,
        FamilyKind::BrokenFan,
        FamilyKind::SubdividedStar,
        FamilyKind::SparklerLowerPair,
        FamilyKind::CliquePendantPath,
        FamilyKind::CliquePendantStar,
        FamilyKind::GluedCliqueSparkler,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Path => "path",
            FamilyKind::Cycle => "cycle",
            FamilyKind::Complete => "complete",
            FamilyKind::CompleteBipartite => "complete-bipartite",
            FamilyKind::Star => "star",
            FamilyKind::Sparkler => "sparkler",
            FamilyKind::BrokenFan => "broken-fan",
            FamilyKind::SubdividedStar => "subdivided-star",
            FamilyKind::SparklerLowerPair => "sparkler-lower-pair",
            FamilyKind::CliquePendantPath => "clique-pendant-path",
            FamilyKind::CliquePendantStar => "clique-pendant-star",
            FamilyKind::GluedCliqueSparkler => "glued-clique-sparkler",
        }
    }

    /// Parameter names in the order the family takes them.
    pub fn parameters(self) -> &'static [&'static str] {
        match self {
            FamilyKind::Path | FamilyKind::Star => &["l"],
            FamilyKind::Cycle | FamilyKind::Complete | FamilyKind::BrokenFan => &["n"],
            FamilyKind::CompleteBipartite => &["t", "s"],
            FamilyKind::Sparkler => &["q", "p"],
            FamilyKind::SubdividedStar => &["s", "t"],
            FamilyKind::SparklerLowerPair => &["q", "p", "n"],
            FamilyKind::CliquePendantPath | FamilyKind::CliquePendantStar => &["k", "n"],
            FamilyKind::GluedCliqueSparkler => &["l", "p", "n"],
        }
    }

    pub fn from_name(name: &str) -> Option<FamilyKind> {
        FamilyKind::ALL.into_iter().find(|k| k.name() == name)
    }

    /// Builds a spec from named parameters; `get` returns `None` for a missing one.
    pub fn with_params(
        self,
        mut get: impl FnMut(&str) -> Option<usize>,
    ) -> Result<FamilySpec, GraphError> {
        let mut need = |name: &'static str| {
            get(name).ok_or_else(|| GraphError::InvalidParameter {
                family: self.name(),
                bound: format!("missing parameter {name}"),
            })
        };
        Ok(match self {
            FamilyKind::Path => FamilySpec::Path { l: need("l")? },
            FamilyKind::Cycle => FamilySpec::Cycle { n: need("n")? },
            FamilyKind::Complete => FamilySpec::Complete { n: need("n")? },
            FamilyKind::CompleteBipartite => FamilySpec::CompleteBipartite {
                t: need("t")?,
                s: need("s")?,
            },
            FamilyKind::Star => FamilySpec::Star { l: need("l")? },
            FamilyKind::Sparkler => FamilySpec::Sparkler {
                q: need("q")?,
                p: need("p")?,
            },
            FamilyKind::BrokenFan => FamilySpec::BrokenFan { n: need("n")? },
            FamilyKind::SubdividedStar => FamilySpec::SubdividedStar {
                s: need("s")?,
                t: need("t")?,
            },
            FamilyKind::SparklerLowerPair => FamilySpec::SparklerLowerPair {
                q: need("q")?,
                p: need("p")?,
                n: need("n")?,
            },
            FamilyKind::CliquePendantPath => FamilySpec::CliquePendantPath {
                k: need("k")?,
                n: need("n")?,
            },
            FamilyKind::CliquePendantStar => FamilySpec::CliquePendantStar {
                k: need("k")?,
                n: need("n")?,
            },
            FamilyKind::GluedCliqueSparkler => FamilySpec::GluedCliqueSparkler {
                l: need("l")?,
                p: need("p")?,
                n: need("n")?,
            },
        })
    }
}

impl FamilySpec {
    pub fn kind(&self) -> FamilyKind {
        match self {
            FamilySpec::Path { .. } => FamilyKind::Path,
            FamilySpec::Cycle { .. } => FamilyKind::Cycle,
            FamilySpec::Complete { .. } => FamilyKind::Complete,
            FamilySpec::CompleteBipartite { .. } => FamilyKind::CompleteBipartite,
            FamilySpec::Star { .. } => FamilyKind::Star,
            FamilySpec::Sparkler { .. } => FamilyKind::Sparkler,
            FamilySpec::BrokenFan { .. } => FamilyKind::BrokenFan,
            FamilySpec::SubdividedStar { .. } => FamilyKind::SubdividedStar,
            FamilySpec::SparklerLowerPair { .. } => FamilyKind::SparklerLowerPair,
            FamilySpec::CliquePendantPath { .. } => FamilyKind::CliquePendantPath,
            FamilySpec::CliquePendantStar { .. } => FamilyKind::CliquePendantStar,
            FamilySpec::GluedCliqueSparkler { .. } => FamilyKind::GluedCliqueSparkler,
        }
    }
}

/// Output of [`generate`]: most families yield one graph, the lower-bound pair yields two.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Single(Graph),
    Pair(Graph, Graph),
}

impl Family {
    pub fn into_single(self) -> Option<Graph> {
        match self {
            Family::Single(g) => Some(g),
            Family::Pair(..) => None,
        }
    }

    pub fn into_pair(self) -> Option<(Graph, Graph)> {
        match self {
            Family::Pair(g, h) => Some((g, h)),
            Family::Single(_) => None,
        }
    }

    pub fn graphs(&self) -> Vec<&Graph> {
        match self {
            Family::Single(g) => vec![g],
            Family::Pair(g, h) => vec![g, h],
        }
    }
}

fn invalid(family: &'static str, bound: impl Into<String>) -> GraphError {
    GraphError::InvalidParameter {
        family,
        bound: bound.into(),
    }
}

/// Generates a family member, refusing graphs above [`SOLVER_VERTEX_CAP`].
pub fn generate(spec: &FamilySpec) -> Result<Family, GraphError> {
    let out = generate_uncapped(spec)?;
    for g in out.graphs() {
        g.ensure_within(SOLVER_VERTEX_CAP)?;
    }
    Ok(out)
}

/// Like [`generate`] without the solver cap, for containment-only use.
pub fn generate_uncapped(spec: &FamilySpec) -> Result<Family, GraphError> {
    let single = |g: Graph| Ok(Family::Single(g));
    match *spec {
        FamilySpec::Path { l } => single(path(l)),
        FamilySpec::Cycle { n } => {
            if n < 3 {
                return Err(invalid("cycle", format!("n = {n} must be at least 3")));
            }
            let mut g = path(n);
            g.add_edge(n - 1, 0)?;
            single(g)
        }
        FamilySpec::Complete { n } => single(complete(n)),
        FamilySpec::CompleteBipartite { t, s } => single(complete_bipartite(t, s)),
        FamilySpec::Star { l } => {
            if l == 0 {
                return Err(invalid("star", "l = 0; a star has at least its centre"));
            }
            single(sparkler_unchecked(l, 0))
        }
        FamilySpec::Sparkler { q, p } => {
            if q < 2 {
                return Err(invalid("sparkler", format!("q = {q} must be at least 2")));
            }
            single(sparkler_unchecked(q, p))
        }
        FamilySpec::BrokenFan { n } => {
            if n < 4 {
                return Err(invalid("broken-fan", format!("n = {n} must be at least 4")));
            }
            let hub = n - 2;
            let mut g = path(n - 2);
            g = g.disjoint_union(&Graph::empty(2));
            for v in 0..n - 3 {
                g.add_edge(hub, v)?;
            }
            g.add_edge(hub, n - 1)?;
            single(g)
        }
        FamilySpec::SubdividedStar { s, t } => {
            if t == 0 {
                return Err(invalid("subdivided-star", "t = 0; each branch needs at least one edge"));
            }
            let mut g = Graph::empty(s * t + 1);
            for branch in 0..s {
                let first = 1 + branch * t;
                g.add_edge(0, first)?;
                for v in first..first + t - 1 {
                    g.add_edge(v, v + 1)?;
                }
            }
            single(g)
        }
        FamilySpec::SparklerLowerPair { q, p, n } => {
            let layout = lower_pair_layout(q, p, n)?;
            let g = layout.build_g();
            let h = g.remove_vertex(layout.designated_twin)?;
            Ok(Family::Pair(g, h))
        }
        FamilySpec::CliquePendantPath { k, n } => {
            if k == 0 || n == 0 {
                return Err(invalid("clique-pendant-path", "k and n must be positive"));
            }
            single(attach(&complete(k), 0, &FamilySpec::Path { l: n }, GlueRole::PathEnd)?)
        }
        FamilySpec::CliquePendantStar { k, n } => {
            if k == 0 {
                return Err(invalid("clique-pendant-star", "k must be positive"));
            }
            single(attach(
                &complete(k),
                0,
                &FamilySpec::Star { l: n + 1 },
                GlueRole::StarCenter,
            )?)
        }
        FamilySpec::GluedCliqueSparkler { l, p, n } => {
            if l == 0 {
                return Err(invalid("glued-clique-sparkler", "l must be positive"));
            }
            if n < 3 {
                return Err(invalid("glued-clique-sparkler", format!("n = {n} must be at least 3")));
            }
            single(attach(
                &complete(l),
                0,
                &FamilySpec::Sparkler { q: n, p: p + 1 },
                GlueRole::SparklerTailEnd,
            )?)
        }
    }
}

fn path(l: usize) -> Graph {
    let mut g = Graph::empty(l);
    for v in 1..l {
        g.add_edge(v - 1, v).expect("in range");
    }
    g
}

fn complete(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v).expect("in range");
        }
    }
    g
}

fn complete_bipartite(t: usize, s: usize) -> Graph {
    let mut g = Graph::empty(t + s);
    for u in 0..t {
        for v in t..t + s {
            g.add_edge(u, v).expect("in range");
        }
    }
    g
}

fn sparkler_unchecked(q: usize, p: usize) -> Graph {
    let mut g = Graph::empty(q + p);
    for leaf in 1..q {
        g.add_edge(0, leaf).expect("in range");
    }
    let mut prev = 0;
    for v in q..q + p {
        g.add_edge(prev, v).expect("in range");
        prev = v;
    }
    g
}

/// Which vertex of an attached part is identified with the host vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GlueRole {
    /// Vertex `0` of a path.
    PathEnd,
    /// The centre of a star.
    StarCenter,
    /// The far end of a sparkler's tail (requires `p >= 1`).
    SparklerTailEnd,
}

/// Glues `part` onto `g`, identifying the part's `role` vertex with `at`.
///
/// The part's remaining vertices are appended after those of `g`, in the
/// part's own order.
pub fn attach(g: &Graph, at: usize, part: &FamilySpec, role: GlueRole) -> Result<Graph, GraphError> {
    g.check(at)?;
    let (part_graph, glue) = match (*part, role) {
        (FamilySpec::Path { l }, GlueRole::PathEnd) if l >= 1 => (path(l), 0),
        (FamilySpec::Star { l }, GlueRole::StarCenter) if l >= 1 => (sparkler_unchecked(l, 0), 0),
        (FamilySpec::Sparkler { q, p }, GlueRole::SparklerTailEnd) if q >= 2 && p >= 1 => {
            (sparkler_unchecked(q, p), q + p - 1)
        }
        (FamilySpec::Path { .. }, _) => return Err(GraphError::InvalidGlue { role, part: "path" }),
        (FamilySpec::Star { .. }, _) => return Err(GraphError::InvalidGlue { role, part: "star" }),
        (FamilySpec::Sparkler { .. }, _) => {
            return Err(GraphError::InvalidGlue { role, part: "sparkler" })
        }
        _ => return Err(GraphError::InvalidGlue { role, part: "non-attachable family" }),
    };
    let base = g.vertex_count();
    let mut index = vec![0; part_graph.vertex_count()];
    let mut next = base;
    for (v, slot) in index.iter_mut().enumerate() {
        if v == glue {
            *slot = at;
        } else {
            *slot = next;
            next += 1;
        }
    }
    let mut out = g.disjoint_union(&Graph::empty(next - base));
    for (u, v) in part_graph.edges() {
        out.add_edge(index[u], index[v])?;
    }
    Ok(out)
}

/// Vertex layout of `G_{a,b,n}` built for the sparkler `S_{q,p}`.
///
/// `G` is `K_{a+1,a+s}` glued with `S_{n+1,b}` at the sparkler centre `w`,
/// where `s = q - 1`, `b = 2 + (p mod 2)` and `a = (p - b) / 2`.
/// Indices: `w = 0`; the rest of the smaller part is `1..=a`; the larger
/// part is `a+1 ..= 2a+s`; the `n` pendant leaves of `w` follow, then the
/// tail of `b` vertices starting next to `w`. `H` is `G` minus
/// [`designated_twin`](Self::designated_twin), the last vertex of the larger part.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LowerPairLayout {
    pub q: usize,
    pub p: usize,
    pub n: usize,
    pub a: usize,
    pub b: usize,
    pub s: usize,
    pub w: usize,
    pub larger_part: (usize, usize),
    pub leaves: (usize, usize),
    pub tail: (usize, usize),
    pub designated_twin: usize,
    pub vertex_count: usize,
}

pub fn lower_pair_layout(q: usize, p: usize, n: usize) -> Result<LowerPairLayout, GraphError> {
    const NAME: &str = "sparkler-lower-pair";
    if q < 3 {
        return Err(invalid(NAME, format!("q = {q} must be at least 3")));
    }
    if p < 4 {
        return Err(invalid(NAME, format!("p = {p} must be at least 4")));
    }
    if n == 0 {
        return Err(invalid(NAME, "n must be positive"));
    }
    let b = 2 + p % 2;
    let a = (p - b) / 2;
    let s = q - 1;
    let larger_start = a + 1;
    let leaves_start = larger_start + a + s;
    let tail_start = leaves_start + n;
    let vertex_count = tail_start + b;
    Ok(LowerPairLayout {
        q,
        p,
        n,
        a,
        b,
        s,
        w: 0,
        larger_part: (larger_start, leaves_start),
        leaves: (leaves_start, tail_start),
        tail: (tail_start, vertex_count),
        designated_twin: leaves_start - 1,
        vertex_count,
    })
}

impl LowerPairLayout {
    fn build_g(&self) -> Graph {
        let mut g = Graph::empty(self.vertex_count);
        let (ls, le) = self.larger_part;
        for u in 0..=self.a {
            for v in ls..le {
                g.add_edge(u, v).expect("in range");
            }
        }
        for leaf in self.leaves.0..self.leaves.1 {
            g.add_edge(self.w, leaf).expect("in range");
        }
        let mut prev = self.w;
        for v in self.tail.0..self.tail.1 {
            g.add_edge(prev, v).expect("in range");
            prev = v;
        }
        g
    }
}
