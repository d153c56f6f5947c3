//! Finite-model checking for a trimodal logic of knowledge (`K`),
//! knowability (`box`) and belief (`B`) on topological subset spaces.
//!
//! The pieces, roughly bottom-up:
//!
//! * [`worlds`]: bitset world sets over at most 16 points.
//! * [`formula`]: the language, its ASCII grammar, axiom schemes and the
//!   belief-eliminating translations.
//! * [`topology`]: finite topologies with interior, closure, density,
//!   nowhere-dense sets and almost-inclusion, plus exhaustive enumeration.
//! * [`model`]: subset models, scenarios, the JSON model document and random models.
//! * [`semantics`]: strong, epistemic-doxastic and almost-everywhere belief,
//!   validity in a model and countermodel search.
//! * [`relational`]: belief frames, brushes and the bridge to Alexandroff topologies.
//! * [`suites`]: named axiom systems and soundness runs.
//! * [`cli`]: the `topobelief` command.
//!
//! The `examples/` directory has one runnable program per capability:
//! `formulas`, `topology_laws`, `strong_belief`, `doxastic_ranges`,
//! `countermodels`, `belief_frames` and `soundness_suites`.
//!
//! ```
//! use topobelief::{eval, Formula, Scenario, SemanticsKind, SubsetModel, Topology, WorldSet};
//!
//! let t = Topology::sierpinski();
//! let m = SubsetModel::new(t, [("p".to_string(), WorldSet::singleton(0))].into()).unwrap();
//! let s = Scenario::epistemic(1, WorldSet::full(2));
//! let false_belief: Formula = "B p & !p".parse().unwrap();
//! assert!(eval(&m, &s, &false_belief, SemanticsKind::Strong).unwrap());
//! ```

pub mod cli;
pub mod error;
pub mod formula;
pub mod model;
pub mod relational;
pub mod semantics;
pub mod suites;
pub mod topology;
pub mod worlds;

pub use error::{Error, Result};
pub use formula::{parse, to_text, Formula, Scheme, SchemeName, Translation};
pub use model::{load, random_model, Model, Scenario, ScenarioClass, SubsetModel, Valuation};
pub use relational::{random_belief_frame, RelationalModel};
pub use semantics::{
    eval, extension, find_countermodel, valid_in_model, SearchConfig, SearchOutcome, SemanticsKind,
    Verdict,
};
pub use suites::{expected_failures, get_suite, run_suite, Batch, LogicSuite, SuiteReport};
pub use topology::{enumerate_topologies, Topology};
pub use worlds::WorldSet;
