//! Least-fixpoint solver for the game without a round limit.
//!
//! Every live position with at most `k` pairs is enumerated and indexed. The
//! attractor is then grown one level per sweep: a base gets level `i` when
//! some Spoiler move sends every live answer to a position of level below `i`,
//! and a position takes the smallest level among its bases. Levels are exact
//! minimal round counts because each sweep only reads levels from earlier
//! sweeps.

use log::debug;
use rustc_hash::FxHashMap;

use super::board::{Board, Key};
use super::WinOracle;

pub(crate) const UNRESOLVED: u32 = u32::MAX;

pub(crate) struct Attractor<'a> {
    pub board: Board<'a>,
    index: FxHashMap<Key, u32>,
    keys: Vec<Key>,
    level: Vec<u32>,
    good: Vec<u32>,
}

impl<'a> Attractor<'a> {
    pub fn new(board: Board<'a>) -> Self {
        let mut solver = Attractor {
            board,
            index: FxHashMap::default(),
            keys: Vec::new(),
            level: Vec::new(),
            good: Vec::new(),
        };
        solver.enumerate();
        solver
    }

    fn enumerate(&mut self) {
        let total = self.board.g.vertex_count() * self.board.h.vertex_count();
        let mut stack: Vec<Key> = vec![Key::new()];
        while let Some(key) = stack.pop() {
            if key.len() < self.board.pebbles {
                let replies = self.board.replies(&key);
                let start = key.last().map_or(0, |&c| c as usize + 1);
                for code in start..total {
                    let (v, w) = self.board.decode(code as u16);
                    if replies.g_types[v] == replies.h_types[w] {
                        stack.push(Board::with_pair(&key, code as u16));
                    }
                }
            }
            self.index.insert(key.clone(), self.keys.len() as u32);
            self.keys.push(key);
        }
        debug!("{} live positions with at most {} pairs", self.keys.len(), self.board.pebbles);
        self.level = vec![UNRESOLVED; self.keys.len()];
        self.good = vec![UNRESOLVED; self.keys.len()];
    }

    pub fn position_count(&self) -> usize {
        self.keys.len()
    }

    fn level_of(&self, key: &Key) -> u32 {
        self.index.get(key).map_or(0, |&i| self.level[i as usize])
    }

    /// Best level reachable by placing from `base`, given the current levels.
    fn base_value(&self, base: &Key) -> u32 {
        let replies = self.board.replies(base);
        let mut best = UNRESOLVED;
        for (side, v) in replies.moves() {
            let mut worst = 0;
            for &w in replies.answers(side, v) {
                let child = Board::with_pair(base, self.board.encode(side, v, w));
                worst = worst.max(self.level_of(&child));
                if worst == UNRESOLVED || worst + 1 >= best {
                    break;
                }
            }
            if worst != UNRESOLVED && worst + 1 < best {
                best = worst + 1;
                if best == 1 {
                    break;
                }
            }
        }
        best
    }

    /// Runs sweeps until the empty position is resolved or nothing changes.
    /// Returns the attractor level of the empty position.
    pub fn solve(&mut self) -> Option<u32> {
        let root = self.index[&Key::new()] as usize;
        let mut sweep = 0;
        loop {
            sweep += 1;
            let mut changed = false;
            let pending: Vec<(usize, u32)> = (0..self.keys.len())
                .filter(|&i| self.good[i] == UNRESOLVED && self.keys[i].len() < self.board.pebbles)
                .filter_map(|i| {
                    let value = self.base_value(&self.keys[i]);
                    (value != UNRESOLVED).then_some((i, value))
                })
                .collect();
            for (i, value) in pending {
                self.good[i] = value;
                changed = true;
            }
            if self.good[root] != UNRESOLVED {
                self.level[root] = self.good[root];
                debug!("empty position resolved after {sweep} sweeps");
                return Some(self.good[root]);
            }
            let pending: Vec<(usize, u32)> = (0..self.keys.len())
                .filter(|&i| self.level[i] == UNRESOLVED)
                .filter_map(|i| {
                    let value = self
                        .board
                        .bases(&self.keys[i])
                        .iter()
                        .map(|(_, base)| self.good[self.index[base] as usize])
                        .min()
                        .unwrap_or(UNRESOLVED);
                    (value != UNRESOLVED).then_some((i, value))
                })
                .collect();
            for (i, value) in pending {
                self.level[i] = value;
                changed = true;
            }
            if !changed {
                debug!("fixpoint reached after {sweep} sweeps");
                return None;
            }
        }
    }
}

impl WinOracle for Attractor<'_> {
    fn board(&self) -> &Board<'_> {
        &self.board
    }

    fn wins(&mut self, position: &Key, rounds: usize) -> bool {
        match self.index.get(position) {
            None => true,
            Some(&i) => {
                let level = self.level[i as usize];
                level != UNRESOLVED && level as usize <= rounds
            }
        }
    }
}
