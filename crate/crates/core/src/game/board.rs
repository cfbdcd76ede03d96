//! Shared machinery for both solvers: compact position keys, liveness and the
//! atomic type of a vertex relative to a base position.

use rustc_hash::FxHashMap;
use smallvec::SmallVec;

use crate::graph::Graph;

use super::Side;

/// A canonical position: the sorted codes of its pairs.
pub(crate) type Key = SmallVec<[u16; 8]>;

/// Atomic type of a vertex over a base: two bits per base pair
/// (0 non-adjacent, 1 adjacent, 2 equal).
pub(crate) type Type = u128;

pub(crate) struct Board<'a> {
    pub g: &'a Graph,
    pub h: &'a Graph,
    pub pebbles: usize,
    stride: usize,
}

/// The vertices of both graphs grouped by type over one base.
pub(crate) struct Replies {
    pub g_types: Vec<Type>,
    pub h_types: Vec<Type>,
    g_classes: FxHashMap<Type, Vec<usize>>,
    h_classes: FxHashMap<Type, Vec<usize>>,
}

impl Replies {
    /// Duplicator's live answers when Spoiler plays `vertex` on `side`.
    pub fn answers(&self, side: Side, vertex: usize) -> &[usize] {
        let found = match side {
            Side::G => self.h_classes.get(&self.g_types[vertex]),
            Side::H => self.g_classes.get(&self.h_types[vertex]),
        };
        found.map_or(&[], Vec::as_slice)
    }

    /// All Spoiler moves, those with fewer live answers first.
    pub fn moves(&self) -> Vec<(Side, usize)> {
        let mut out: Vec<(Side, usize)> = (0..self.g_types.len())
            .map(|v| (Side::G, v))
            .chain((0..self.h_types.len()).map(|v| (Side::H, v)))
            .collect();
        out.sort_by_key(|&(side, v)| self.answers(side, v).len());
        out
    }
}

fn classes(types: &[Type]) -> FxHashMap<Type, Vec<usize>> {
    let mut out: FxHashMap<Type, Vec<usize>> = FxHashMap::default();
    for (v, &t) in types.iter().enumerate() {
        out.entry(t).or_default().push(v);
    }
    out
}

impl<'a> Board<'a> {
    pub fn new(g: &'a Graph, h: &'a Graph, pebbles: usize) -> Self {
        Board {
            g,
            h,
            pebbles,
            stride: h.vertex_count().max(1),
        }
    }

    pub fn encode(&self, side: Side, vertex: usize, answer: usize) -> u16 {
        let (v, w) = match side {
            Side::G => (vertex, answer),
            Side::H => (answer, vertex),
        };
        (v * self.stride + w) as u16
    }

    pub fn decode(&self, code: u16) -> (usize, usize) {
        let code = code as usize;
        (code / self.stride, code % self.stride)
    }

    pub fn key_of(&self, pairs: &[(usize, usize)]) -> Key {
        let mut key: Key = pairs.iter().map(|&(v, w)| (v * self.stride + w) as u16).collect();
        key.sort_unstable();
        key.dedup();
        key
    }

    pub fn pairs_of(&self, key: &[u16]) -> Vec<(usize, usize)> {
        key.iter().map(|&c| self.decode(c)).collect()
    }

    pub fn is_live(&self, key: &[u16]) -> bool {
        let pairs = self.pairs_of(key);
        for (i, &(a, b)) in pairs.iter().enumerate() {
            for &(c, d) in &pairs[i + 1..] {
                if (a == c) != (b == d) {
                    return false;
                }
                if a != c && self.g.has_edge(a, c) != self.h.has_edge(b, d) {
                    return false;
                }
            }
        }
        true
    }

    fn type_in(graph: &Graph, base: &[(usize, usize)], v: usize, pick: impl Fn(&(usize, usize)) -> usize) -> Type {
        let mut t: Type = 0;
        for (i, pair) in base.iter().enumerate() {
            let u = pick(pair);
            let code = if u == v {
                2
            } else if graph.has_edge(u, v) {
                1
            } else {
                0
            };
            t |= (code as Type) << (2 * i);
        }
        t
    }

    pub fn replies(&self, base: &[u16]) -> Replies {
        let pairs = self.pairs_of(base);
        let g_types: Vec<Type> = (0..self.g.vertex_count())
            .map(|v| Self::type_in(self.g, &pairs, v, |p| p.0))
            .collect();
        let h_types: Vec<Type> = (0..self.h.vertex_count())
            .map(|v| Self::type_in(self.h, &pairs, v, |p| p.1))
            .collect();
        Replies {
            g_classes: classes(&g_types),
            h_classes: classes(&h_types),
            g_types,
            h_types,
        }
    }

    /// The positions Spoiler may place from: the position itself while a
    /// pebble is free, and the position minus each placed pair.
    pub fn bases(&self, key: &[u16]) -> Vec<(Option<u16>, Key)> {
        let mut out = Vec::with_capacity(key.len() + 1);
        if key.len() < self.pebbles {
            out.push((None, Key::from_slice(key)));
        }
        for i in 0..key.len() {
            let mut base = Key::from_slice(key);
            let lifted = base.remove(i);
            out.push((Some(lifted), base));
        }
        out
    }

    pub fn with_pair(base: &[u16], code: u16) -> Key {
        let mut key = Key::from_slice(base);
        if let Err(at) = key.binary_search(&code) {
            key.insert(at, code);
        }
        key
    }
}
