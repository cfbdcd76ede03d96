//! First-order logic over `{~, =}`: formulas, evaluation, the text syntax and
//! the explicit sentences used by the scenarios.

mod formula;
mod parse;

pub use formula::Formula;
pub use parse::parse_formula;

use std::collections::HashMap;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LogicError {
    #[error("free variable {0} in a formula evaluated as a sentence")]
    FreeVariable(String),
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("parameter out of range: {0}")]
    InvalidParameter(String),
}

/// Formula with variables replaced by slot indices.
enum Compiled {
    Exists(usize, Box<Compiled>),
    Forall(usize, Box<Compiled>),
    And(Vec<Compiled>),
    Or(Vec<Compiled>),
    Not(Box<Compiled>),
    Adjacent(usize, usize),
    Equal(usize, usize),
}

fn compile(f: &Formula, slots: &mut HashMap<String, usize>) -> Compiled {
    let mut slot = |x: &String| {
        let next = slots.len();
        *slots.entry(x.clone()).or_insert(next)
    };
    match f {
        Formula::Exists(x, b) => {
            let s = slot(x);
            Compiled::Exists(s, Box::new(compile(b, slots)))
        }
        Formula::Forall(x, b) => {
            let s = slot(x);
            Compiled::Forall(s, Box::new(compile(b, slots)))
        }
        Formula::And(fs) => Compiled::And(fs.iter().map(|f| compile(f, slots)).collect()),
        Formula::Or(fs) => Compiled::Or(fs.iter().map(|f| compile(f, slots)).collect()),
        Formula::Not(b) => Compiled::Not(Box::new(compile(b, slots))),
        Formula::Adjacent(x, y) => {
            let (a, b) = (slot(x), slot(y));
            Compiled::Adjacent(a, b)
        }
        Formula::Equal(x, y) => {
            let (a, b) = (slot(x), slot(y));
            Compiled::Equal(a, b)
        }
    }
}

fn eval(f: &Compiled, g: &Graph, env: &mut [usize]) -> bool {
    match f {
        Compiled::Exists(s, b) | Compiled::Forall(s, b) => {
            let want = matches!(f, Compiled::Exists(..));
            let saved = env[*s];
            let mut result = !want;
            for v in 0..g.vertex_count() {
                env[*s] = v;
                if eval(b, g, env) == want {
                    result = want;
                    break;
                }
            }
            env[*s] = saved;
            result
        }
        Compiled::And(fs) => fs.iter().all(|f| eval(f, g, env)),
        Compiled::Or(fs) => fs.iter().any(|f| eval(f, g, env)),
        Compiled::Not(b) => !eval(b, g, env),
        Compiled::Adjacent(a, b) => g.has_edge(env[*a], env[*b]),
        Compiled::Equal(a, b) => env[*a] == env[*b],
    }
}

/// Evaluates `f` on `g` with the free variables bound by `assignment`.
///
/// Every free variable must be assigned, and assigned vertices must be in range.
pub fn evaluate_with(f: &Formula, g: &Graph, assignment: &[(&str, usize)]) -> Result<bool, LogicError> {
    for free in f.free_variables() {
        if !assignment.iter().any(|(x, _)| *x == free) {
            return Err(LogicError::FreeVariable(free));
        }
    }
    let mut slots = HashMap::new();
    for (x, _) in assignment {
        let next = slots.len();
        slots.entry(x.to_string()).or_insert(next);
    }
    let compiled = compile(f, &mut slots);
    let mut env = vec![0; slots.len()];
    for (x, v) in assignment {
        if *v >= g.vertex_count() {
            return Err(LogicError::InvalidParameter(format!("{x} assigned to missing vertex {v}")));
        }
        env[slots[*x]] = *v;
    }
    Ok(eval(&compiled, g, &mut env))
}

/// Tarskian truth of the sentence `f` on `g`.
pub fn evaluate(f: &Formula, g: &Graph) -> Result<bool, LogicError> {
    evaluate_with(f, g, &[])
}

fn var(i: usize) -> String {
    format!("x{}", i + 1)
}

fn distinct(vars: usize) -> Vec<Formula> {
    let mut out = Vec::new();
    for i in 0..vars {
        for j in i + 1..vars {
            out.push(Formula::not(Formula::equal(var(i), var(j))));
        }
    }
    out
}

fn exists_prefix(vars: usize, body: Formula) -> Formula {
    (0..vars).rev().fold(body, |acc, i| Formula::exists(var(i), acc))
}

/// `EXISTS x1 ... xl (pairwise distinct AND one adjacency per edge of f)`.
pub fn canonical_subgraph_sentence(f: &Graph) -> Formula {
    let l = f.vertex_count();
    let mut body = distinct(l);
    body.extend(f.edges().map(|(u, v)| Formula::adjacent(var(u), var(v))));
    exists_prefix(l, Formula::And(body))
}

/// The width-`s` sentence true on every graph containing `K_{1,s}`:
/// `s` distinct vertices such that for each `i` some vertex (reusing `x_i`)
/// is adjacent to all `x_j`, `j != i`.
pub fn star_sentence(s: usize) -> Result<Formula, LogicError> {
    if s < 3 {
        return Err(LogicError::InvalidParameter(format!("s = {s} must be at least 3")));
    }
    let mut body = distinct(s);
    for i in 0..s {
        let adj = (0..s).filter(|&j| j != i).map(|j| Formula::adjacent(var(i), var(j))).collect();
        body.push(Formula::exists(var(i), Formula::And(adj)));
    }
    Ok(exists_prefix(s, Formula::And(body)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, FamilySpec};

    fn one(spec: FamilySpec) -> Graph {
        generate(&spec).unwrap().into_single().unwrap()
    }

    #[test]
    fn distinct_adjacent_pair_on_k2() {
        let f = parse_formula("(EXISTS x . (EXISTS y . (AND (NOT (x = y)) (x ~ y))))").unwrap();
        assert!(evaluate(&f, &one(FamilySpec::Complete { n: 2 })).unwrap());
        assert!(!evaluate(&f, &Graph::empty(2)).unwrap());
    }

    #[test]
    fn canonical_sentence_shape() {
        let k2 = canonical_subgraph_sentence(&one(FamilySpec::Complete { n: 2 }));
        assert_eq!(k2.to_string(), "(EXISTS x1 . (EXISTS x2 . (AND (NOT (x1 = x2)) (x1 ~ x2))))");
        let c4 = canonical_subgraph_sentence(&one(FamilySpec::Cycle { n: 4 }));
        assert_eq!((c4.quantifier_depth(), c4.variable_width()), (4, 4));
        let k3 = canonical_subgraph_sentence(&one(FamilySpec::Complete { n: 3 }));
        assert_eq!((k3.quantifier_depth(), k3.variable_width()), (3, 3));
    }

    #[test]
    fn canonical_sentence_needs_enough_vertices() {
        let p3 = canonical_subgraph_sentence(&one(FamilySpec::Path { l: 3 }));
        assert!(!evaluate(&p3, &one(FamilySpec::Path { l: 2 })).unwrap());
        assert!(evaluate(&p3, &one(FamilySpec::Path { l: 3 })).unwrap());
    }

    #[test]
    fn star_sentence_metrics() {
        let f = star_sentence(3).unwrap();
        assert_eq!((f.variable_width(), f.quantifier_depth()), (3, 4));
        assert_eq!(star_sentence(4).unwrap().variable_width(), 4);
        assert!(star_sentence(2).is_err());
    }

    #[test]
    fn star_sentence_on_star_and_cycle() {
        let f = star_sentence(3).unwrap();
        assert!(evaluate(&f, &one(FamilySpec::Star { l: 4 })).unwrap());
        assert!(!evaluate(&f, &one(FamilySpec::Cycle { n: 7 })).unwrap());
        // Without the size condition the sentence can hold without K_{1,3}.
        assert!(evaluate(&f, &one(FamilySpec::Cycle { n: 6 })).unwrap());
    }

    #[test]
    fn free_variables_are_rejected() {
        let f = Formula::exists("x", Formula::adjacent("x", "y"));
        assert_eq!(evaluate(&f, &Graph::empty(2)), Err(LogicError::FreeVariable("y".into())));
        assert!(evaluate_with(&f, &one(FamilySpec::Complete { n: 2 }), &[("y", 1)]).unwrap());
        assert!(evaluate_with(&f, &Graph::empty(2), &[("y", 7)]).is_err());
    }
}
