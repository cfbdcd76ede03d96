//! Scenario runner: each scenario checks one claim about pebble games,
//! subgraph patterns or first-order sentences on small or sampled graphs and
//! produces a [`Verdict`].
//!
//! Scenarios are deterministic given their id, parameters and seed. Sampled
//! scenarios draw from a ChaCha stream selected by the scenario id, so running
//! scenarios in parallel does not change any result.

pub mod manifest;
mod report;
pub mod sample;
mod scenarios;

pub use manifest::{Manifest, DEFAULT_MANIFEST};
pub use report::{to_csv, to_json, to_text};
pub use scenarios::*;

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::game::GameError;
use crate::graph::GraphError;
use crate::logic::LogicError;
use crate::pattern::PatternError;

pub const DEFAULT_SEED: u64 = 1;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("unknown scenario id {0:?}")]
    UnknownScenario(String),
    #[error("scenario {scenario} has no parameter {name:?}")]
    UnknownParameter { scenario: String, name: String },
    #[error("scenario {scenario}: {message}")]
    InvalidParameter { scenario: String, message: String },
    #[error("manifest: {0}")]
    Manifest(String),
    #[error(transparent)]
    Game(#[from] GameError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Pattern(#[from] PatternError),
    #[error(transparent)]
    Logic(#[from] LogicError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ScenarioKind {
    CliqueSeparation,
    TwinLemma,
    SparklerPair,
    StarTheorem,
    PathTheorem,
    StructureProperties,
    WidthThresholdCatalog,
    TwinDepthBound,
    PathOrStar,
    CrossOracle,
    ExtractionSoundness,
    StarSentenceDichotomy,
    StructureWithoutSize,
}

impl ScenarioKind {
    pub const ALL: [ScenarioKind; 13] = [
        ScenarioKind::CliqueSeparation,
        ScenarioKind::TwinLemma,
        ScenarioKind::SparklerPair,
        ScenarioKind::StarTheorem,
        ScenarioKind::PathTheorem,
        ScenarioKind::StructureProperties,
        ScenarioKind::WidthThresholdCatalog,
        ScenarioKind::TwinDepthBound,
        ScenarioKind::PathOrStar,
        ScenarioKind::CrossOracle,
        ScenarioKind::ExtractionSoundness,
        ScenarioKind::StarSentenceDichotomy,
        ScenarioKind::StructureWithoutSize,
    ];

    pub fn id(self) -> &'static str {
        match self {
            ScenarioKind::CliqueSeparation => "clique-separation",
            ScenarioKind::TwinLemma => "twin-lemma",
            ScenarioKind::SparklerPair => "sparkler-pair",
            ScenarioKind::StarTheorem => "star-theorem",
            ScenarioKind::PathTheorem => "path-theorem",
            ScenarioKind::StructureProperties => "structure-properties",
            ScenarioKind::WidthThresholdCatalog => "width-threshold-catalog",
            ScenarioKind::TwinDepthBound => "twin-depth-bound",
            ScenarioKind::PathOrStar => "path-or-star",
            ScenarioKind::CrossOracle => "cross-oracle",
            ScenarioKind::ExtractionSoundness => "extraction-soundness",
            ScenarioKind::StarSentenceDichotomy => "star-sentence-dichotomy",
            ScenarioKind::StructureWithoutSize => "structure-without-size",
        }
    }

    pub fn from_id(id: &str) -> Option<ScenarioKind> {
        ScenarioKind::ALL.into_iter().find(|k| k.id() == id)
    }

    /// The claim the scenario checks, in words.
    pub fn claim(self) -> &'static str {
        match self {
            ScenarioKind::CliqueSeparation => {
                "K_l and K_(l-1) are separated by depth exactly l and width exactly l"
            }
            ScenarioKind::TwinLemma => {
                "if v lies in a twin class of size t then W(G, G-v) >= t"
            }
            ScenarioKind::SparklerPair => {
                "G_(a,b,n) contains S_(q,p), H_(a,b,n) does not, both exceed n vertices, \
                 and W(G,H) >= q + p/2 - 2 - (p mod 2)/2"
            }
            ScenarioKind::StarTheorem => {
                "Duplicator survives the s-round s-pebble game on M_(s,t) vs M_(s-1,t); \
                 D = s+1 and W = s; the width-s star sentence decides K_(1,s) on connected \
                 graphs with more than 2s vertices"
            }
            ScenarioKind::PathTheorem => {
                "K_(l-1) and K_(l-2) with a pendant K_(1,n) differ on P_l containment, \
                 yet D >= l-1 and W >= l-2"
            }
            ScenarioKind::StructureProperties => {
                "(i) K_(1,q) and P_(2qp) force S_(q,p); (ii) max degree >= q+p with C_(p+1) \
                 or B_(p+2) forces S_(q,p); (iii) S_(q,p)-free connected graphs have \
                 max degree < q or v <= 3 * maxdeg^(2qp)"
            }
            ScenarioKind::WidthThresholdCatalog => {
                "the combined lower bound of every connected F exceeds 2v(F)/3 - 2"
            }
            ScenarioKind::TwinDepthBound => {
                "D(A,B) <= v/2 + 5/2 when sigma(A) <= v/2 + 1/2, <= sigma(A) + 2 otherwise, \
                 and <= sigma(A) + 1 when sigma(A) >= v/2 + 1 and the largest twin class is \
                 an inclusion-maximal homogeneous set"
            }
            ScenarioKind::PathOrStar => {
                "every connected graph with more than 3(l-2)^(l-2) vertices contains P_l or K_(1,l-1)"
            }
            ScenarioKind::CrossOracle => {
                "the canonical existential sentence of F holds in G exactly when F embeds in G"
            }
            ScenarioKind::ExtractionSoundness => {
                "the sentence read off a depth-D Spoiler strategy separates the pair \
                 with depth and width at most D"
            }
            ScenarioKind::StarSentenceDichotomy => {
                "on connected graphs with more than 2s vertices the width-s star sentence \
                 holds exactly when K_(1,s) is a subgraph"
            }
            ScenarioKind::StructureWithoutSize => {
                "exploratory: S_(q,p)-free connected graphs with max degree >= q that still \
                 contain C_(p+1) or B_(p+2) when no size condition is imposed"
            }
        }
    }

    /// Parameter names with their defaults.
    pub fn defaults(self) -> &'static [(&'static str, i64)] {
        match self {
            ScenarioKind::CliqueSeparation => &[("max_l", 4)],
            ScenarioKind::TwinLemma => &[("max_vertices", 5)],
            ScenarioKind::SparklerPair => &[("q", 3), ("p", 4), ("n", 3), ("width", 1)],
            ScenarioKind::StarTheorem => &[("s", 3), ("t", 4), ("samples", 100)],
            ScenarioKind::PathTheorem => &[("l", 5), ("n", 5)],
            ScenarioKind::StructureProperties => &[("q", 3), ("p", 2), ("samples", 200)],
            ScenarioKind::WidthThresholdCatalog => &[
                ("max_l", 6),
                ("samples", 500),
                ("min_vertices", 7),
                ("max_vertices", 9),
            ],
            ScenarioKind::TwinDepthBound => &[("pairs", 100), ("max_vertices", 6)],
            ScenarioKind::PathOrStar => &[("l", 4), ("samples", 100)],
            ScenarioKind::CrossOracle => &[("pairs", 300), ("pattern_max", 4), ("host_max", 7)],
            ScenarioKind::ExtractionSoundness => &[("pairs", 50), ("max_vertices", 6)],
            ScenarioKind::StarSentenceDichotomy => &[
                ("s", 3),
                ("samples", 100),
                ("min_vertices", 7),
                ("max_vertices", 10),
            ],
            ScenarioKind::StructureWithoutSize => &[("q", 3), ("p", 2), ("max_vertices", 6)],
        }
    }

    /// Whether the scenario draws random graphs.
    pub fn is_sampled(self) -> bool {
        matches!(
            self,
            ScenarioKind::StarTheorem
                | ScenarioKind::StructureProperties
                | ScenarioKind::WidthThresholdCatalog
                | ScenarioKind::TwinDepthBound
                | ScenarioKind::PathOrStar
                | ScenarioKind::CrossOracle
                | ScenarioKind::ExtractionSoundness
                | ScenarioKind::StarSentenceDichotomy
        )
    }
}

/// One configured scenario run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Scenario {
    pub id: String,
    pub claim: String,
    pub parameters: BTreeMap<String, i64>,
    pub seed: u64,
}

impl Scenario {
    /// Fills in defaults for parameters not given in `overrides`.
    pub fn new(id: &str, overrides: &BTreeMap<String, i64>, seed: u64) -> Result<Scenario, HarnessError> {
        let kind = ScenarioKind::from_id(id).ok_or_else(|| HarnessError::UnknownScenario(id.to_string()))?;
        let mut parameters: BTreeMap<String, i64> =
            kind.defaults().iter().map(|&(k, v)| (k.to_string(), v)).collect();
        for (name, &value) in overrides {
            match parameters.get_mut(name) {
                Some(slot) => *slot = value,
                None => {
                    return Err(HarnessError::UnknownParameter {
                        scenario: id.to_string(),
                        name: name.clone(),
                    })
                }
            }
        }
        Ok(Scenario {
            id: id.to_string(),
            claim: kind.claim().to_string(),
            parameters,
            seed,
        })
    }

    pub fn kind(&self) -> ScenarioKind {
        ScenarioKind::from_id(&self.id).expect("validated on construction")
    }

    pub(crate) fn param(&self, name: &str) -> Result<usize, HarnessError> {
        let value = self.parameters[name];
        usize::try_from(value).map_err(|_| HarnessError::InvalidParameter {
            scenario: self.id.clone(),
            message: format!("{name} = {value} must be non-negative"),
        })
    }

    pub(crate) fn invalid(&self, message: impl Into<String>) -> HarnessError {
        HarnessError::InvalidParameter {
            scenario: self.id.clone(),
            message: message.into(),
        }
    }
}

/// A reproducing instance for a failed check.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    /// The graphs involved, in graph6.
    pub graphs: Vec<String>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub scenario: String,
    pub claim: String,
    pub parameters: BTreeMap<String, i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seed: Option<u64>,
    pub observed: BTreeMap<String, Value>,
    pub expected: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub runtime_ms: Option<f64>,
}

/// Runs one scenario.
pub fn run_scenario(scenario: &Scenario) -> Result<Verdict, HarnessError> {
    let start = Instant::now();
    let mut verdict = scenarios::dispatch(scenario)?;
    verdict.runtime_ms = Some(start.elapsed().as_secs_f64() * 1000.0);
    Ok(verdict)
}

/// Runs scenarios on up to `jobs` threads; results keep the input order.
pub fn run_all(scenarios: &[Scenario], jobs: usize) -> Vec<Result<Verdict, HarnessError>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool");
    pool.install(|| scenarios.par_iter().map(run_scenario).collect())
}
