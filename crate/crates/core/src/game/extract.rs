//! Turning a Spoiler win into a distinguishing sentence.
//!
//! Pebble `j` is variable `x{j+1}`. A placement in G becomes an existential
//! whose body rules out every answer in H; a placement in H becomes a
//! universal whose body covers every vertex of G. Answers that break the
//! partial isomorphism are ruled out by a single literal. Subformulas already
//! collected are reused whenever they settle another answer.

use crate::graph::Graph;
use crate::logic::{evaluate_with, Formula};

use super::board::Board;
use super::strategy::winning_move;
use super::{Side, WinOracle};

fn var(label: usize) -> String {
    format!("x{}", label + 1)
}

fn relation(graph: &Graph, u: usize, v: usize) -> u8 {
    if u == v {
        2
    } else if graph.has_edge(u, v) {
        1
    } else {
        0
    }
}

type Labels = Vec<Option<(usize, usize)>>;

/// A literal on `x{label+1}` true in G at `u` and false in H at `w`.
fn separating_literal(board: &Board<'_>, labels: &Labels, label: usize, u: usize, w: usize) -> Formula {
    for (l, pair) in labels.iter().enumerate() {
        let Some((a, b)) = *pair else { continue };
        if l == label {
            continue;
        }
        let in_g = relation(board.g, u, a);
        let in_h = relation(board.h, w, b);
        if in_g == in_h {
            continue;
        }
        let (x, y) = (var(label), var(l));
        return match (in_g, in_h) {
            (2, _) => Formula::equal(x, y),
            (_, 2) => Formula::not(Formula::equal(x, y)),
            (1, _) => Formula::adjacent(x, y),
            _ => Formula::not(Formula::adjacent(x, y)),
        };
    }
    unreachable!("answer differs from the base in some pair")
}

fn assignment(labels: &Labels, pick: impl Fn((usize, usize)) -> usize) -> Vec<(String, usize)> {
    labels
        .iter()
        .enumerate()
        .filter_map(|(l, p)| p.map(|p| (var(l), pick(p))))
        .collect()
}

fn holds(f: &Formula, graph: &Graph, env: &[(String, usize)]) -> bool {
    let env: Vec<(&str, usize)> = env.iter().map(|(x, v)| (x.as_str(), *v)).collect();
    evaluate_with(f, graph, &env).expect("all free variables are assigned")
}

fn flatten(mut parts: Vec<Formula>, conjunction: bool) -> Formula {
    if parts.len() == 1 {
        return parts.pop().expect("one part");
    }
    if conjunction {
        Formula::And(parts)
    } else {
        Formula::Or(parts)
    }
}

pub(crate) fn extract<O: WinOracle>(oracle: &mut O, labels: &mut Labels, rounds: usize) -> Formula {
    let placed: Vec<(usize, usize)> = labels.iter().flatten().copied().collect();
    let key = oracle.board().key_of(&placed);
    let (lift, _, side, v) = winning_move(oracle, &key, rounds).expect("oracle promised a win");
    let label = match lift {
        None => labels.iter().position(Option::is_none).expect("a free pebble"),
        Some(code) => {
            let pair = oracle.board().decode(code);
            labels.iter().position(|&p| p == Some(pair)).expect("lifted pair is placed")
        }
    };
    let saved = labels[label];
    labels[label] = None;
    let base_pairs: Vec<(usize, usize)> = labels.iter().flatten().copied().collect();
    let base = oracle.board().key_of(&base_pairs);
    let answers = oracle.board().replies(&base).answers(side, v).to_vec();
    let other = match side {
        Side::G => oracle.board().h.vertex_count(),
        Side::H => oracle.board().g.vertex_count(),
    };
    let order: Vec<usize> = answers
        .iter()
        .copied()
        .chain((0..other).filter(|w| !answers.contains(w)))
        .collect();

    let mut parts: Vec<Formula> = Vec::new();
    for w in order {
        let pair = match side {
            Side::G => (v, w),
            Side::H => (w, v),
        };
        labels[label] = Some(pair);
        // Side G: parts are conjuncts that must fail in H at w.
        // Side H: parts are disjuncts that must hold in G at w.
        let settled = match side {
            Side::G => {
                let env = assignment(labels, |p| p.1);
                parts.iter().any(|f| !holds(f, oracle.board().h, &env))
            }
            Side::H => {
                let env = assignment(labels, |p| p.0);
                parts.iter().any(|f| holds(f, oracle.board().g, &env))
            }
        };
        if !settled {
            let part = if answers.contains(&w) {
                // Re-pebbling a pebbled pair leaves the position unchanged.
                if base_pairs.contains(&pair) {
                    labels[label] = None;
                }
                extract(oracle, labels, rounds - 1)
            } else {
                separating_literal(oracle.board(), labels, label, pair.0, pair.1)
            };
            parts.push(part);
        }
    }
    labels[label] = saved;
    match side {
        Side::G => Formula::exists(var(label), flatten(parts, true)),
        Side::H => Formula::forall(var(label), flatten(parts, false)),
    }
}
