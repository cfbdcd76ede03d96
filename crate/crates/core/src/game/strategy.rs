//! Spoiler strategy trees: construction from a solved game and independent replay.

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

use super::board::{Board, Key};
use super::{is_partial_isomorphism, Position, Side, WinOracle};

/// One Spoiler move and what happens after each possible answer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrategyNode {
    /// The pair lifted before placing, if any.
    pub lift: Option<(usize, usize)>,
    pub side: Side,
    pub vertex: usize,
    /// One entry per vertex of the other graph.
    pub responses: Vec<Response>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Response {
    pub reply: usize,
    /// `None` when the reply breaks the partial isomorphism.
    pub next: Option<Box<StrategyNode>>,
}

impl StrategyNode {
    /// Longest line of play through the tree.
    pub fn depth(&self) -> usize {
        1 + self
            .responses
            .iter()
            .filter_map(|r| r.next.as_ref().map(|n| n.depth()))
            .max()
            .unwrap_or(0)
    }

    pub fn node_count(&self) -> usize {
        1 + self
            .responses
            .iter()
            .filter_map(|r| r.next.as_ref().map(|n| n.node_count()))
            .sum::<usize>()
    }
}

/// Finds a winning move from `key` within `rounds`, as (lift, base, side, vertex).
pub(crate) fn winning_move<O: WinOracle>(
    oracle: &mut O,
    key: &Key,
    rounds: usize,
) -> Option<(Option<u16>, Key, Side, usize)> {
    if rounds == 0 {
        return None;
    }
    let bases = oracle.board().bases(key);
    for (lift, base) in bases {
        let replies = oracle.board().replies(&base);
        'moves: for (side, v) in replies.moves() {
            for &w in replies.answers(side, v) {
                let child = Board::with_pair(&base, oracle.board().encode(side, v, w));
                if !oracle.wins(&child, rounds - 1) {
                    continue 'moves;
                }
            }
            return Some((lift, base, side, v));
        }
    }
    None
}

pub(crate) fn build<O: WinOracle>(oracle: &mut O, key: &Key, rounds: usize) -> Option<StrategyNode> {
    let (lift, base, side, v) = winning_move(oracle, key, rounds)?;
    let replies = oracle.board().replies(&base);
    let answers = replies.answers(side, v).to_vec();
    let other = match side {
        Side::G => oracle.board().h.vertex_count(),
        Side::H => oracle.board().g.vertex_count(),
    };
    let mut responses = Vec::with_capacity(other);
    for w in 0..other {
        let next = if answers.contains(&w) {
            let child = Board::with_pair(&base, oracle.board().encode(side, v, w));
            let node = build(oracle, &child, rounds - 1).expect("oracle promised a win");
            Some(Box::new(node))
        } else {
            None
        };
        responses.push(Response { reply: w, next });
    }
    Some(StrategyNode {
        lift: lift.map(|c| oracle.board().decode(c)),
        side,
        vertex: v,
        responses,
    })
}

/// Checks that `tree` wins the game with `pebbles` pebbles within `rounds`
/// rounds against every Duplicator answer, starting from the empty position.
pub fn replays_to_win(g: &Graph, h: &Graph, pebbles: usize, rounds: usize, tree: &StrategyNode) -> bool {
    replay(g, h, pebbles, rounds, &Position::default(), tree)
}

fn replay(g: &Graph, h: &Graph, pebbles: usize, rounds: usize, at: &Position, node: &StrategyNode) -> bool {
    if rounds == 0 {
        return false;
    }
    let mut base = at.pairs().to_vec();
    match node.lift {
        Some(pair) => match base.iter().position(|&p| p == pair) {
            Some(i) => {
                base.remove(i);
            }
            None => return false,
        },
        None if base.len() >= pebbles => return false,
        None => {}
    }
    let (own, other) = match node.side {
        Side::G => (g.vertex_count(), h.vertex_count()),
        Side::H => (h.vertex_count(), g.vertex_count()),
    };
    if node.vertex >= own {
        return false;
    }
    (0..other).all(|w| {
        let pair = match node.side {
            Side::G => (node.vertex, w),
            Side::H => (w, node.vertex),
        };
        let next = Position::new(base.iter().copied().chain([pair]));
        if !is_partial_isomorphism(g, h, &next) {
            return true;
        }
        node.responses
            .iter()
            .find(|r| r.reply == w)
            .and_then(|r| r.next.as_deref())
            .is_some_and(|child| replay(g, h, pebbles, rounds - 1, &next, child))
    })
}
