//! Exact solvers for the k-pebble Ehrenfeucht–Fraïssé game on two graphs.
//!
//! Positions are sets of pebbled pairs with pebble identities erased. One
//! round is an optional lift of a placed pair, a placement by Spoiler on
//! either graph, and Duplicator's answer on the other graph. Spoiler wins
//! once the pebbled pairs stop being a partial isomorphism. Re-placing a
//! lifted pebble on the vertex it came from is allowed.

mod attractor;
mod board;
mod bounded;
mod extract;
mod strategy;

pub use strategy::{replays_to_win, Response, StrategyNode};

use log::info;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError, SOLVER_VERTEX_CAP};
use crate::logic::Formula;
use crate::pattern::are_isomorphic;

use attractor::Attractor;
use board::{Board, Key};
use bounded::BoundedSolver;

/// Largest pebble count the solvers accept.
pub const MAX_PEBBLES: usize = 64;

/// Largest vertex cap the solvers accept, even when overridden.
pub const MAX_CAP: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GameError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("parameter out of range: {0}")]
    InvalidParameter(String),
    #[error("no sentence with at most {tried} variables separates the graphs; they are isomorphic")]
    Indistinguishable { tried: usize },
    #[error("Spoiler has no winning strategy with {pebbles} pebbles in {rounds} rounds")]
    NotDistinguishing { pebbles: usize, rounds: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    G,
    H,
}

/// A set of pebbled pairs `(vertex in G, vertex in H)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Position {
    pairs: Vec<(usize, usize)>,
}

impl Position {
    pub fn new(pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut pairs: Vec<_> = pairs.into_iter().collect();
        pairs.sort_unstable();
        pairs.dedup();
        Position { pairs }
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// Whether the pairs of `p` form a partial isomorphism from `g` to `h`.
///
/// # Panics
/// If a pair names a vertex outside its graph.
pub fn is_partial_isomorphism(g: &Graph, h: &Graph, p: &Position) -> bool {
    let pairs = p.pairs();
    for (i, &(a, b)) in pairs.iter().enumerate() {
        assert!(a < g.vertex_count() && b < h.vertex_count(), "pair ({a}, {b}) out of range");
        for &(c, d) in &pairs[i + 1..] {
            if (a == c) != (b == d) {
                return false;
            }
            if a != c && g.has_edge(a, c) != h.has_edge(b, d) {
                return false;
            }
        }
    }
    true
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Rounds {
    Bounded(usize),
    Unbounded,
}

#[derive(Debug, Clone, Copy)]
pub struct GameQuery<'a> {
    pub g: &'a Graph,
    pub h: &'a Graph,
    pub pebbles: usize,
    pub rounds: Rounds,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    /// Vertex cap for either graph.
    pub cap: usize,
    /// Build a strategy tree when Spoiler wins.
    pub strategy: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            cap: SOLVER_VERTEX_CAP,
            strategy: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GameOutcome {
    pub spoiler_wins: bool,
    /// Fewest rounds Spoiler needs, present exactly when Spoiler wins.
    pub rounds_needed: Option<usize>,
    /// A Spoiler strategy winning within `rounds_needed`, when requested.
    pub strategy: Option<StrategyNode>,
}

/// Answers "does Spoiler win from this live position within `rounds` rounds".
/// Non-live positions count as already won.
pub(crate) trait WinOracle {
    fn board(&self) -> &Board<'_>;
    fn wins(&mut self, position: &Key, rounds: usize) -> bool;
}

fn check(g: &Graph, h: &Graph, pebbles: usize, cap: usize) -> Result<(), GameError> {
    if cap > MAX_CAP {
        return Err(GameError::InvalidParameter(format!("cap {cap} exceeds {MAX_CAP}")));
    }
    g.ensure_within(cap)?;
    h.ensure_within(cap)?;
    if pebbles == 0 || pebbles > MAX_PEBBLES {
        return Err(GameError::InvalidParameter(format!(
            "pebble count {pebbles} must be between 1 and {MAX_PEBBLES}"
        )));
    }
    Ok(())
}

/// Solves the game described by `query`.
pub fn solve(query: &GameQuery<'_>, options: &SolveOptions) -> Result<GameOutcome, GameError> {
    check(query.g, query.h, query.pebbles, options.cap)?;
    let board = Board::new(query.g, query.h, query.pebbles);
    let root = Key::new();
    match query.rounds {
        Rounds::Bounded(0) => Err(GameError::InvalidParameter("round count must be at least 1".into())),
        Rounds::Bounded(r) => {
            let mut solver = BoundedSolver::new(board);
            let needed = (1..=r).find(|&i| solver.good(&root, i));
            info!(
                "bounded game, {} pebbles, {r} rounds: {} memo entries",
                query.pebbles,
                solver.memo_len()
            );
            Ok(outcome(&mut solver, needed, options.strategy))
        }
        Rounds::Unbounded => {
            let mut solver = Attractor::new(board);
            let needed = solver.solve().map(|l| l as usize);
            info!(
                "unbounded game, {} pebbles: {} live positions",
                query.pebbles,
                solver.position_count()
            );
            Ok(outcome(&mut solver, needed, options.strategy))
        }
    }
}

fn outcome<O: WinOracle>(solver: &mut O, needed: Option<usize>, with_strategy: bool) -> GameOutcome {
    let strategy = match needed {
        Some(r) if with_strategy => strategy::build(solver, &Key::new(), r),
        _ => None,
    };
    GameOutcome {
        spoiler_wins: needed.is_some(),
        rounds_needed: needed,
        strategy,
    }
}

/// The `pebbles`-pebble game limited to `rounds` rounds.
pub fn solve_bounded(g: &Graph, h: &Graph, pebbles: usize, rounds: usize) -> Result<GameOutcome, GameError> {
    let query = GameQuery {
        g,
        h,
        pebbles,
        rounds: Rounds::Bounded(rounds),
    };
    solve(&query, &SolveOptions::default())
}

/// The `pebbles`-pebble game without a round limit.
pub fn solve_unbounded(g: &Graph, h: &Graph, pebbles: usize) -> Result<GameOutcome, GameError> {
    let query = GameQuery {
        g,
        h,
        pebbles,
        rounds: Rounds::Unbounded,
    };
    solve(&query, &SolveOptions::default())
}

fn least_winning(
    g: &Graph,
    h: &Graph,
    cap: usize,
    what: &str,
    mut wins: impl FnMut(usize) -> Result<bool, GameError>,
) -> Result<usize, GameError> {
    check(g, h, 1, cap)?;
    if are_isomorphic(g, h) {
        return Err(GameError::Indistinguishable {
            tried: g.vertex_count().max(h.vertex_count()),
        });
    }
    let limit = g.vertex_count().max(h.vertex_count());
    for k in 1..=limit {
        info!("{what}: trying {k} pebbles");
        if wins(k)? {
            return Ok(k);
        }
    }
    Err(GameError::Indistinguishable { tried: limit })
}

/// Least quantifier depth of a sentence true in exactly one of `g`, `h`:
/// the least `k` such that Spoiler wins the `k`-round `k`-pebble game.
pub fn distinguishing_depth(g: &Graph, h: &Graph) -> Result<usize, GameError> {
    distinguishing_depth_with(g, h, SOLVER_VERTEX_CAP)
}

pub fn distinguishing_depth_with(g: &Graph, h: &Graph, cap: usize) -> Result<usize, GameError> {
    least_winning(g, h, cap, "depth", |k| {
        let query = GameQuery {
            g,
            h,
            pebbles: k,
            rounds: Rounds::Bounded(k),
        };
        solve(&query, &SolveOptions { cap, strategy: false }).map(|o| o.spoiler_wins)
    })
}

/// Least variable width of a sentence true in exactly one of `g`, `h`:
/// the least `k` such that Spoiler wins the `k`-pebble game.
pub fn distinguishing_width(g: &Graph, h: &Graph) -> Result<usize, GameError> {
    distinguishing_width_with(g, h, SOLVER_VERTEX_CAP)
}

pub fn distinguishing_width_with(g: &Graph, h: &Graph, cap: usize) -> Result<usize, GameError> {
    least_winning(g, h, cap, "width", |k| {
        let query = GameQuery {
            g,
            h,
            pebbles: k,
            rounds: Rounds::Unbounded,
        };
        solve(&query, &SolveOptions { cap, strategy: false }).map(|o| o.spoiler_wins)
    })
}

/// A sentence of quantifier depth at most `rounds` using at most `pebbles`
/// variables that is true in `g` and false in `h`.
///
/// Requires Spoiler to win the `rounds`-round `pebbles`-pebble game.
pub fn extract_sentence(g: &Graph, h: &Graph, pebbles: usize, rounds: usize) -> Result<Formula, GameError> {
    check(g, h, pebbles, SOLVER_VERTEX_CAP)?;
    if rounds == 0 {
        return Err(GameError::InvalidParameter("round count must be at least 1".into()));
    }
    let mut solver = BoundedSolver::new(Board::new(g, h, pebbles));
    if !solver.good(&Key::new(), rounds) {
        return Err(GameError::NotDistinguishing { pebbles, rounds });
    }
    let mut labels = vec![None; pebbles];
    Ok(extract::extract(&mut solver, &mut labels, rounds))
}
