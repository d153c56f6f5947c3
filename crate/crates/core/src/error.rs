use thiserror::Error;

use crate::formula::ParseError;
use crate::worlds::WorldSet;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("carrier size {0} exceeds the supported maximum of {max}", max = crate::worlds::MAX_WORLDS)]
    CarrierTooLarge(usize),

    #[error("exhaustive enumeration is limited to {limit} worlds, got {n}")]
    EnumerationTooLarge { n: usize, limit: usize },

    #[error("subset {set} is not contained in the carrier of {n} worlds")]
    OutOfRange { set: WorldSet, n: usize },

    #[error("world {world} is not in the carrier of {n} worlds")]
    WorldOutOfRange { world: usize, n: usize },

    #[error("not a topology: {0}")]
    Topology(String),

    #[error("invalid scenario: {0}")]
    Scenario(String),

    #[error("{kind} semantics cannot evaluate this scenario: {reason}")]
    KindMismatch { kind: &'static str, reason: String },

    #[error("scheme {scheme} has no binding for metavariable {var}")]
    MissingBinding { scheme: String, var: &'static str },

    #[error("relation is not transitive")]
    NotTransitive,

    #[error("relation is not a belief frame (serial, transitive and euclidean)")]
    NotBeliefFrame,

    #[error("formula {0} is outside the doxastic fragment")]
    NotDoxastic(String),

    #[error("enumeration needs {needed} scenario steps, over the budget of {budget}")]
    BudgetExceeded { needed: u64, budget: u64 },

    #[error("unknown suite {0:?}")]
    UnknownSuite(String),

    #[error("model document: {0}")]
    Document(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
