//! Named axiom systems, their intended semantics, soundness runs over model
//! batches, and a registry of formulas known to fail together with small
//! countermodels.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::formula::{Formula, Modality, Scheme, SchemeName};
use crate::model::{
    atom_name, exhaustive_models, random_model, ModelDocument, Scenario, ScenarioClass,
    SubsetModel, Valuation, DEFAULT_SCENARIO_BUDGET,
};
use crate::semantics::{explain, Compiled, SemanticsKind};
use crate::topology::Topology;
use crate::worlds::WorldSet;

/// Systems that exist only through their translated images and are never run.
pub const EXCLUDED_SUITES: &[&str] = &["STAL_T"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SuiteName {
    ElKBox,
    Sel,
    ElKBoxB,
    ElKBoxBD,
    ElKBoxBWf,
    ElKBoxBCb,
    Kd45B,
}

impl SuiteName {
    pub const ALL: [SuiteName; 7] = [
        SuiteName::ElKBox,
        SuiteName::Sel,
        SuiteName::ElKBoxB,
        SuiteName::ElKBoxBD,
        SuiteName::ElKBoxBWf,
        SuiteName::ElKBoxBCb,
        SuiteName::Kd45B,
    ];

    pub fn label(self) -> &'static str {
        match self {
            SuiteName::ElKBox => "EL_KBOX",
            SuiteName::Sel => "SEL",
            SuiteName::ElKBoxB => "EL_KBOXB",
            SuiteName::ElKBoxBD => "EL_KBOXB_D",
            SuiteName::ElKBoxBWf => "EL_KBOXB_WF",
            SuiteName::ElKBoxBCb => "EL_KBOXB_CB",
            SuiteName::Kd45B => "KD45_B",
        }
    }
}

impl fmt::Display for SuiteName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.label())
    }
}

impl FromStr for SuiteName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SuiteName::ALL
            .into_iter()
            .find(|n| n.label().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

/// An axiom system with the semantics and scenario class it is sound for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogicSuite {
    pub name: SuiteName,
    pub schemes: Vec<Scheme>,
    /// Modalities whose necessitation rule belongs to the system.
    pub necessitation: Vec<Modality>,
    pub semantics: SemanticsKind,
    pub class: ScenarioClass,
}

impl LogicSuite {
    /// The same axioms checked under another semantics and class.
    pub fn under(mut self, semantics: SemanticsKind, class: ScenarioClass) -> LogicSuite {
        self.semantics = semantics;
        self.class = class;
        self
    }

    pub fn scheme_labels(&self) -> Vec<String> {
        self.schemes.iter().map(|s| s.name.label()).collect()
    }
}

fn schemes(names: &[SchemeName]) -> Vec<Scheme> {
    names.iter().map(|&n| Scheme::new(n)).collect()
}

fn base() -> Vec<SchemeName> {
    use Modality::{Know, Knowable};
    use SchemeName::*;
    vec![
        Distribution(Know),
        Factivity(Know),
        PositiveIntrospection(Know),
        NegativeIntrospection(Know),
        Distribution(Knowable),
        Factivity(Knowable),
        PositiveIntrospection(Knowable),
        KnowledgeImpliesKnowable,
    ]
}

fn weak_belief() -> Vec<SchemeName> {
    use SchemeName::*;
    vec![
        Distribution(Modality::Believe),
        StrongPositiveIntrospection,
        KnowledgeImpliesBelief,
        ResponsibleBelief,
    ]
}

/// Looks a suite up by name, case-insensitively.
pub fn get_suite(name: &str) -> Result<LogicSuite> {
    Ok(suite(name.parse()?))
}

pub fn suite(name: SuiteName) -> LogicSuite {
    use Modality::{Believe, Know, Knowable};
    use ScenarioClass as C;
    use SchemeName::*;
    use SemanticsKind as S;

    let with = |extra: &[SchemeName]| {
        let mut v = base();
        v.extend(weak_belief());
        v.extend_from_slice(extra);
        v
    };
    let (names, nec, semantics, class) = match name {
        SuiteName::ElKBox => (base(), vec![Know, Knowable], S::Strong, C::All),
        SuiteName::Sel => (
            with(&[WeakFactivity, ConfidentBelief]),
            vec![Know, Knowable, Believe],
            S::Strong,
            C::All,
        ),
        SuiteName::ElKBoxB => (with(&[]), vec![Know, Knowable, Believe], S::Ed, C::All),
        SuiteName::ElKBoxBD => (
            with(&[Consistency(Believe)]),
            vec![Know, Knowable, Believe],
            S::Ed,
            C::Consistent,
        ),
        SuiteName::ElKBoxBWf => (
            with(&[WeakFactivity]),
            vec![Know, Knowable, Believe],
            S::Ed,
            C::Dense,
        ),
        SuiteName::ElKBoxBCb => (
            with(&[ConfidentBelief]),
            vec![Know, Knowable, Believe],
            S::Ae,
            C::All,
        ),
        SuiteName::Kd45B => (
            vec![
                Distribution(Believe),
                Consistency(Believe),
                PositiveIntrospection(Believe),
                NegativeIntrospection(Believe),
            ],
            vec![Believe],
            S::Strong,
            C::All,
        ),
    };
    LogicSuite {
        name,
        schemes: schemes(&names),
        necessitation: nec,
        semantics,
        class,
    }
}

/// Every suite under its own semantics, plus the strong system read through
/// almost-everywhere belief on total scenarios.
pub fn matrix() -> Vec<LogicSuite> {
    let mut out: Vec<LogicSuite> = SuiteName::ALL.into_iter().map(suite).collect();
    out.push(suite(SuiteName::Sel).under(SemanticsKind::Ae, ScenarioClass::Total));
    out
}

/// The fixed substitution candidates for scheme metavariables.
pub fn default_instantiations() -> Vec<Formula> {
    ["p", "q", "p & q", "!p", "K p", "box p", "B p", "dia q"]
        .iter()
        .map(|t| t.parse().expect("fixed candidate parses"))
        .collect()
}

/// Which models a suite run checks.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Batch {
    /// Every topology on up to this many points with every valuation (0 skips).
    pub exhaustive_max_n: usize,
    /// Number of atoms valuated in generated models (`p`, `q`, ...).
    pub atoms: usize,
    /// Number of random models; model `i` uses size `sizes[i % sizes.len()]`
    /// and seed `seed + i`.
    pub random_models: usize,
    pub sizes: Vec<usize>,
    pub seed: u64,
    pub density: f64,
}

impl Default for Batch {
    fn default() -> Self {
        Batch {
            exhaustive_max_n: 3,
            atoms: 2,
            random_models: 0,
            sizes: vec![4, 5, 6],
            seed: 0,
            density: 0.3,
        }
    }
}

impl Batch {
    pub fn exhaustive(max_n: usize) -> Batch {
        Batch {
            exhaustive_max_n: max_n,
            ..Batch::default()
        }
    }

    pub fn models(&self) -> Result<Vec<SubsetModel>> {
        let atoms: Vec<String> = (0..self.atoms).map(atom_name).collect();
        let mut out = exhaustive_models(self.exhaustive_max_n, &atoms)?;
        if self.random_models > 0 && self.sizes.is_empty() {
            return Err(Error::Document(
                "random models need at least one size".into(),
            ));
        }
        for i in 0..self.random_models {
            let n = self.sizes[i % self.sizes.len()];
            out.push(random_model(
                self.seed.wrapping_add(i as u64),
                n,
                self.atoms,
                self.density,
            )?);
        }
        Ok(out)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Valid,
    Countermodel,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportWitness {
    pub model: ModelDocument,
    #[serde(serialize_with = "as_text")]
    pub scenario: Scenario,
    /// The innermost subformula deciding the failure.
    #[serde(serialize_with = "as_text")]
    pub failing: Formula,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SchemeResult {
    pub scheme: String,
    #[serde(serialize_with = "as_text")]
    pub instance: Formula,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<ReportWitness>,
}

fn as_text<T: fmt::Display, S: serde::Serializer>(
    v: &T,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub semantics: SemanticsKind,
    pub class: ScenarioClass,
    pub batch: Batch,
    pub models_checked: usize,
    pub excluded: Vec<String>,
    pub results: Vec<SchemeResult>,
}

impl SuiteReport {
    pub fn countermodels(&self) -> usize {
        self.results
            .iter()
            .filter(|r| r.status == Status::Countermodel)
            .count()
    }

    pub fn is_clean(&self) -> bool {
        self.countermodels() == 0
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// One line per scheme, then each countermodel in full.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "suite {} under {} semantics, class {}: {} models, {} instances",
            self.suite,
            self.semantics,
            self.class,
            self.models_checked,
            self.results.len()
        );
        let mut labels: Vec<&str> = Vec::new();
        for r in &self.results {
            if !labels.contains(&r.scheme.as_str()) {
                labels.push(&r.scheme);
            }
        }
        for label in labels {
            let rows: Vec<&SchemeResult> =
                self.results.iter().filter(|r| r.scheme == label).collect();
            let bad = rows
                .iter()
                .filter(|r| r.status == Status::Countermodel)
                .count();
            let status = if bad == 0 {
                "valid".to_string()
            } else {
                format!("{bad} countermodel(s)")
            };
            let _ = writeln!(out, "  {label:<8} {:>4} instances  {status}", rows.len());
        }
        for r in self
            .results
            .iter()
            .filter(|r| r.status == Status::Countermodel)
        {
            if let Some(w) = &r.witness {
                let _ = writeln!(
                    out,
                    "  countermodel for {} instance `{}`: scenario {}, failing `{}`, model {}",
                    r.scheme,
                    r.instance,
                    w.scenario,
                    w.failing,
                    w.model.to_json().trim_end()
                );
            }
        }
        for s in &self.excluded {
            let _ = writeln!(out, "  {s}: out of scope, not run");
        }
        if self.is_clean() {
            let _ = writeln!(out, "all schemes valid");
        } else {
            let _ = writeln!(out, "{} countermodel(s) found", self.countermodels());
        }
        out
    }
}

struct Row {
    scheme: String,
    instance: Formula,
    /// For necessitation rows, the row whose validity licenses this one.
    premise: Option<usize>,
}

fn rows(suite: &LogicSuite, instantiations: &[Formula]) -> Vec<Row> {
    let mut rows = Vec::new();
    for scheme in &suite.schemes {
        for instance in scheme.instances(instantiations) {
            rows.push(Row {
                scheme: scheme.name.label(),
                instance,
                premise: None,
            });
        }
    }
    let axioms = rows.len();
    for &m in &suite.necessitation {
        for i in 0..axioms {
            let instance = m.apply(rows[i].instance.clone());
            rows.push(Row {
                scheme: format!("Nec_{}", m.label()),
                instance,
                premise: Some(i),
            });
        }
    }
    rows
}

/// Checks every scheme instance over `instantiations`, and every
/// necessitation step applied to them, on every model of `batch`.
///
/// A necessitation row fails on a model only where its premise is valid and
/// the conclusion is not. Each failing row reports its first failing model
/// in batch order, at the canonically first scenario.
pub fn run_suite(
    suite: &LogicSuite,
    batch: &Batch,
    instantiations: &[Formula],
) -> Result<SuiteReport> {
    if suite.semantics == SemanticsKind::Strong && suite.class != ScenarioClass::All {
        return Err(Error::KindMismatch {
            kind: suite.semantics.name(),
            reason: format!("scenario class {} needs a doxastic range", suite.class),
        });
    }
    let rows = rows(suite, instantiations);
    let compiled = Compiled::new(rows.iter().map(|r| &r.instance));
    let models = batch.models()?;

    let first: Vec<Option<(usize, Scenario)>> = models
        .par_iter()
        .enumerate()
        .map(|(i, m)| -> Result<Vec<Option<(usize, Scenario)>>> {
            m.check_budget(DEFAULT_SCENARIO_BUDGET)?;
            let fails = compiled.first_failures(m, suite.semantics, suite.class)?;
            Ok(rows
                .iter()
                .zip(&fails)
                .map(|(row, f)| match row.premise {
                    Some(p) if fails[p].is_some() => None,
                    _ => f.map(|s| (i, s)),
                })
                .collect())
        })
        .try_reduce(
            || vec![None; rows.len()],
            |a, b| {
                Ok(a.into_iter()
                    .zip(b)
                    .map(|(x, y)| match (x, y) {
                        (Some(x), Some(y)) => Some(if x.0 <= y.0 { x } else { y }),
                        (x, y) => x.or(y),
                    })
                    .collect())
            },
        )?;

    let mut results = Vec::with_capacity(rows.len());
    for (row, hit) in rows.into_iter().zip(first) {
        let witness = match hit {
            None => None,
            Some((i, scenario)) => {
                let trace = explain(&models[i], &scenario, &row.instance, suite.semantics)?;
                let failing = trace
                    .last()
                    .map_or_else(|| row.instance.clone(), |s| s.formula.clone());
                Some(ReportWitness {
                    model: models[i].to_document(),
                    scenario,
                    failing,
                })
            }
        };
        results.push(SchemeResult {
            scheme: row.scheme,
            instance: row.instance,
            status: if witness.is_some() {
                Status::Countermodel
            } else {
                Status::Valid
            },
            witness,
        });
    }
    Ok(SuiteReport {
        suite: suite.name.label().to_string(),
        semantics: suite.semantics,
        class: suite.class,
        batch: batch.clone(),
        models_checked: models.len(),
        excluded: EXCLUDED_SUITES.iter().map(|s| s.to_string()).collect(),
        results,
    })
}

/// A formula that is not valid under the given semantics and class, with a
/// guaranteed bound on the size of a smallest countermodel and one stored
/// countermodel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpectedFailure {
    pub label: &'static str,
    pub formula: Formula,
    pub semantics: SemanticsKind,
    pub class: ScenarioClass,
    pub max_size: usize,
    pub model: SubsetModel,
    pub scenario: Scenario,
}

fn set(xs: &[usize]) -> WorldSet {
    WorldSet::from_worlds(xs.iter().copied())
}

fn with_p(t: Topology, p: &[usize]) -> SubsetModel {
    SubsetModel::new(t, Valuation::from([("p".to_string(), set(p))]))
        .expect("registry model is valid")
}

/// The registry of known non-theorems.
pub fn expected_failures() -> Vec<ExpectedFailure> {
    use ScenarioClass as C;
    use SemanticsKind as S;
    let f = |t: &str| -> Formula { t.parse().expect("registry formula parses") };
    let sierpinski = Topology::sierpinski();
    let x2 = set(&[0, 1]);
    let x3 = set(&[0, 1, 2]);
    vec![
        ExpectedFailure {
            label: "5_box",
            formula: f("!box p -> box !box p"),
            semantics: S::Strong,
            class: C::All,
            max_size: 3,
            model: with_p(
                Topology::new(3, [WorldSet::EMPTY, set(&[0]), x3]).expect("chain"),
                &[0, 1],
            ),
            scenario: Scenario::epistemic(1, x3),
        },
        ExpectedFailure {
            label: "5_box disjunctive",
            formula: f("box p | box !box p"),
            semantics: S::Strong,
            class: C::All,
            max_size: 2,
            model: with_p(sierpinski.clone(), &[0]),
            scenario: Scenario::epistemic(1, x2),
        },
        ExpectedFailure {
            label: "T_B",
            formula: f("B p -> p"),
            semantics: S::Strong,
            class: C::All,
            max_size: 2,
            model: with_p(sierpinski.clone(), &[0]),
            scenario: Scenario::epistemic(1, x2),
        },
        ExpectedFailure {
            label: "p -> K p",
            formula: f("p -> K p"),
            semantics: S::Strong,
            class: C::All,
            max_size: 2,
            model: with_p(sierpinski, &[0]),
            scenario: Scenario::epistemic(0, x2),
        },
        ExpectedFailure {
            label: "D_B",
            formula: f("B p -> !B !p"),
            semantics: S::Ed,
            class: C::All,
            max_size: 1,
            model: with_p(Topology::discrete(1).expect("one point"), &[]),
            scenario: Scenario::ed(0, set(&[0]), WorldSet::EMPTY),
        },
        ExpectedFailure {
            label: "wF",
            formula: f("B p -> dia p"),
            semantics: S::Ed,
            class: C::Consistent,
            max_size: 2,
            model: with_p(Topology::discrete(2).expect("two points"), &[1]),
            scenario: Scenario::ed(0, x2, set(&[1])),
        },
        ExpectedFailure {
            label: "CB",
            formula: f("B (box p | box !box p)"),
            semantics: S::Ed,
            class: C::Dense,
            max_size: 3,
            model: with_p(
                Topology::generate_from_subbasis(3, [set(&[0]), set(&[1])])
                    .expect("subbasis in range"),
                &[0, 2],
            ),
            scenario: Scenario::ed(0, x3, x3),
        },
    ]
}
