//! Subgraph containment, pendant-structure parameters and twin classes.

mod stats;
mod subgraph;
mod twins;

pub use stats::{
    path_shape, pattern_stats, pendant_sparklers, sparkler_shape, star_shape, PatternStats, PendantSparkler,
};
pub use subgraph::{are_isomorphic, find_subgraph, Embedding};
pub use twins::{are_twins, is_maximal_homogeneous, twin_decomposition, TwinDecomposition};

use thiserror::Error;

use crate::bounds::{BoundScalar, LowerBoundTerms, ShapeHints};
use crate::graph::{generate_uncapped, FamilySpec, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error("pattern must be connected")]
    Disconnected,
    #[error("pattern needs at least {0} vertices")]
    TooSmall(usize),
    #[error("parameter out of range: {0}")]
    InvalidParameter(String),
}

/// Whether `g` contains `P_l` or `K_{1,l-1}` as a subgraph.
pub fn has_path_or_star(g: &Graph, l: usize) -> Result<bool, PatternError> {
    if l < 2 {
        return Err(PatternError::InvalidParameter(format!("l = {l} must be at least 2")));
    }
    if g.max_degree() + 1 >= l {
        return Ok(true);
    }
    let path = generate_uncapped(&FamilySpec::Path { l })
        .expect("paths are always valid")
        .into_single()
        .expect("single graph");
    Ok(find_subgraph(g, &path).is_some())
}

/// Certified lower bound on the asymptotic width of `F`-containment,
/// together with the terms it is the maximum of.
pub fn combined_lower_bound_terms<T: BoundScalar>(f: &Graph) -> Result<LowerBoundTerms<T>, PatternError> {
    if f.vertex_count() < 2 {
        return Err(PatternError::TooSmall(2));
    }
    let stats = pattern_stats(f)?;
    Ok(LowerBoundTerms::new(
        f.vertex_count(),
        stats.pendant_star,
        stats.pendant_path,
        stats.pendant_sparkler,
        ShapeHints {
            sparkler: sparkler_shape(f),
            star: star_shape(f),
            path: path_shape(f),
        },
    ))
}

pub fn combined_lower_bound<T: BoundScalar>(f: &Graph) -> Result<T, PatternError> {
    combined_lower_bound_terms(f).map(|t| t.value)
}
