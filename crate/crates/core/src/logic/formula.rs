use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

/// First-order formula over adjacency `~` and equality `=`.
///
/// `And(vec![])` is truth and `Or(vec![])` is falsity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Formula {
    Exists(String, Box<Formula>),
    Forall(String, Box<Formula>),
    And(Vec<Formula>),
    Or(Vec<Formula>),
    Not(Box<Formula>),
    Adjacent(String, String),
    Equal(String, String),
}

impl Formula {
    pub fn exists(var: impl Into<String>, body: Formula) -> Formula {
        Formula::Exists(var.into(), Box::new(body))
    }

    pub fn forall(var: impl Into<String>, body: Formula) -> Formula {
        Formula::Forall(var.into(), Box::new(body))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(body: Formula) -> Formula {
        Formula::Not(Box::new(body))
    }

    pub fn adjacent(x: impl Into<String>, y: impl Into<String>) -> Formula {
        Formula::Adjacent(x.into(), y.into())
    }

    pub fn equal(x: impl Into<String>, y: impl Into<String>) -> Formula {
        Formula::Equal(x.into(), y.into())
    }

    pub fn truth() -> Formula {
        Formula::And(Vec::new())
    }

    pub fn falsity() -> Formula {
        Formula::Or(Vec::new())
    }

    /// Maximum nesting of quantifiers.
    pub fn quantifier_depth(&self) -> usize {
        match self {
            Formula::Exists(_, b) | Formula::Forall(_, b) => 1 + b.quantifier_depth(),
            Formula::And(fs) | Formula::Or(fs) => fs.iter().map(Formula::quantifier_depth).max().unwrap_or(0),
            Formula::Not(b) => b.quantifier_depth(),
            Formula::Adjacent(..) | Formula::Equal(..) => 0,
        }
    }

    /// Every variable name occurring in the formula, bound or free.
    pub fn variables(&self) -> BTreeSet<&str> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars<'a>(&'a self, out: &mut BTreeSet<&'a str>) {
        match self {
            Formula::Exists(x, b) | Formula::Forall(x, b) => {
                out.insert(x);
                b.collect_vars(out);
            }
            Formula::And(fs) | Formula::Or(fs) => fs.iter().for_each(|f| f.collect_vars(out)),
            Formula::Not(b) => b.collect_vars(out),
            Formula::Adjacent(x, y) | Formula::Equal(x, y) => {
                out.insert(x);
                out.insert(y);
            }
        }
    }

    /// Number of distinct variable names; reuse across scopes does not count.
    pub fn variable_width(&self) -> usize {
        self.variables().len()
    }

    /// Variables occurring outside the scope of any quantifier binding them.
    pub fn free_variables(&self) -> BTreeSet<String> {
        let mut free = BTreeSet::new();
        let mut bound = Vec::new();
        self.collect_free(&mut bound, &mut free);
        free
    }

    fn collect_free<'a>(&'a self, bound: &mut Vec<&'a str>, free: &mut BTreeSet<String>) {
        match self {
            Formula::Exists(x, b) | Formula::Forall(x, b) => {
                bound.push(x);
                b.collect_free(bound, free);
                bound.pop();
            }
            Formula::And(fs) | Formula::Or(fs) => fs.iter().for_each(|f| f.collect_free(bound, free)),
            Formula::Not(b) => b.collect_free(bound, free),
            Formula::Adjacent(x, y) | Formula::Equal(x, y) => {
                for v in [x, y] {
                    if !bound.contains(&v.as_str()) {
                        free.insert(v.clone());
                    }
                }
            }
        }
    }

    pub fn is_sentence(&self) -> bool {
        self.free_variables().is_empty()
    }

    /// Renames variables with `rename`, applied uniformly to binders and occurrences.
    pub fn rename_variables(&self, rename: &impl Fn(&str) -> String) -> Formula {
        match self {
            Formula::Exists(x, b) => Formula::exists(rename(x), b.rename_variables(rename)),
            Formula::Forall(x, b) => Formula::forall(rename(x), b.rename_variables(rename)),
            Formula::And(fs) => Formula::And(fs.iter().map(|f| f.rename_variables(rename)).collect()),
            Formula::Or(fs) => Formula::Or(fs.iter().map(|f| f.rename_variables(rename)).collect()),
            Formula::Not(b) => Formula::not(b.rename_variables(rename)),
            Formula::Adjacent(x, y) => Formula::adjacent(rename(x), rename(y)),
            Formula::Equal(x, y) => Formula::equal(rename(x), rename(y)),
        }
    }

    /// Number of AST nodes.
    pub fn size(&self) -> usize {
        match self {
            Formula::Exists(_, b) | Formula::Forall(_, b) | Formula::Not(b) => 1 + b.size(),
            Formula::And(fs) | Formula::Or(fs) => 1 + fs.iter().map(Formula::size).sum::<usize>(),
            Formula::Adjacent(..) | Formula::Equal(..) => 1,
        }
    }
}

/// Fully parenthesised ASCII syntax, e.g.
/// `(EXISTS x . (EXISTS y . (AND (NOT (x = y)) (x ~ y))))`.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Exists(x, b) => write!(f, "(EXISTS {x} . {b})"),
            Formula::Forall(x, b) => write!(f, "(FORALL {x} . {b})"),
            Formula::And(fs) | Formula::Or(fs) => {
                let op = if matches!(self, Formula::And(_)) { "AND" } else { "OR" };
                write!(f, "({op}")?;
                for sub in fs {
                    write!(f, " {sub}")?;
                }
                write!(f, ")")
            }
            Formula::Not(b) => write!(f, "(NOT {b})"),
            Formula::Adjacent(x, y) => write!(f, "({x} ~ {y})"),
            Formula::Equal(x, y) => write!(f, "({x} = {y})"),
        }
    }
}
