//! Depth-limited AND/OR search with memoization on base positions.

use rustc_hash::FxHashMap;

use super::board::{Board, Key};
use super::WinOracle;

#[derive(Debug, Clone, Copy, Default)]
struct Memo {
    /// Largest round budget known to lose.
    lose_upto: usize,
    /// Smallest round budget known to win, 0 if none.
    win_at: usize,
}

pub(crate) struct BoundedSolver<'a> {
    pub board: Board<'a>,
    memo: FxHashMap<Key, Memo>,
}

impl<'a> BoundedSolver<'a> {
    pub fn new(board: Board<'a>) -> Self {
        BoundedSolver {
            board,
            memo: FxHashMap::default(),
        }
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    /// Whether Spoiler, placing from `base`, wins within `rounds >= 1` rounds.
    pub fn good(&mut self, base: &Key, rounds: usize) -> bool {
        let memo = self.memo.get(base).copied().unwrap_or_default();
        if memo.win_at != 0 && memo.win_at <= rounds {
            return true;
        }
        if memo.lose_upto >= rounds {
            return false;
        }
        let result = self.search(base, rounds);
        let entry = self.memo.entry(base.clone()).or_default();
        match result {
            Some(at) => {
                if entry.win_at == 0 || at < entry.win_at {
                    entry.win_at = at;
                }
            }
            None => entry.lose_upto = entry.lose_upto.max(rounds),
        }
        result.is_some()
    }

    fn search(&mut self, base: &Key, rounds: usize) -> Option<usize> {
        let replies = self.board.replies(base);
        let moves = replies.moves();
        if let Some(&(side, v)) = moves.first() {
            if replies.answers(side, v).is_empty() {
                return Some(1);
            }
        }
        if rounds == 1 {
            return None;
        }
        'moves: for (side, v) in moves {
            for &w in replies.answers(side, v) {
                let child = Board::with_pair(base, self.board.encode(side, v, w));
                if !self.wins(&child, rounds - 1) {
                    continue 'moves;
                }
            }
            return Some(rounds);
        }
        None
    }
}

impl WinOracle for BoundedSolver<'_> {
    fn board(&self) -> &Board<'_> {
        &self.board
    }

    fn wins(&mut self, position: &Key, rounds: usize) -> bool {
        if !self.board.is_live(position) {
            return true;
        }
        if rounds == 0 {
            return false;
        }
        self.board
            .bases(position)
            .into_iter()
            .any(|(_, base)| self.good(&base, rounds))
    }
}
