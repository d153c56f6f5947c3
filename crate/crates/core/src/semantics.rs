//! Satisfaction on topological subset models under three readings of belief:
//!
//! * `Strong`: scenarios `(x, U)`; `B φ` holds iff `U ⊆ cl(int(⟦φ⟧))`.
//! * `Ed`: scenarios `(x, U, V)`; `B φ` holds iff `V ⊆ ⟦φ⟧`.
//! * `Ae`: scenarios `(x, U, V)`; `B φ` holds iff `V ∖ ⟦φ⟧` is nowhere dense.
//!
//! `K` and `box` read the same way under all three: `K φ` iff `⟦φ⟧ = U`, and
//! `box φ` iff `x ∈ int(⟦φ⟧)`.
//!
//! None of the modalities change the ranges, so for a fixed `(U, V)` the
//! extension of every subformula is computed once, bottom-up, over a
//! hash-consed DAG of all subformulas.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::formula::Formula;
use crate::model::{
    all_valuations, random_model, Scenario, ScenarioClass, SubsetModel, DEFAULT_SCENARIO_BUDGET,
};
use crate::topology::{enumerate_topologies, ENUMERATION_LIMIT};
use crate::worlds::{WorldSet, MAX_WORLDS};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SemanticsKind {
    Strong,
    Ed,
    Ae,
}

impl SemanticsKind {
    pub fn name(self) -> &'static str {
        match self {
            SemanticsKind::Strong => "strong",
            SemanticsKind::Ed => "ed",
            SemanticsKind::Ae => "ae",
        }
    }

    fn needs_doxastic(self) -> bool {
        self != SemanticsKind::Strong
    }

    fn check_ranges(self, doxastic: Option<WorldSet>) -> Result<()> {
        match (self.needs_doxastic(), doxastic.is_some()) {
            (true, false) => Err(Error::KindMismatch {
                kind: self.name(),
                reason: "a doxastic range V is required".into(),
            }),
            (false, true) => Err(Error::KindMismatch {
                kind: self.name(),
                reason: "epistemic scenarios take no doxastic range".into(),
            }),
            _ => Ok(()),
        }
    }

    fn check_class(self, class: ScenarioClass) -> Result<()> {
        if self == SemanticsKind::Strong && class != ScenarioClass::All {
            return Err(Error::KindMismatch {
                kind: self.name(),
                reason: format!("scenario class {class} needs a doxastic range"),
            });
        }
        Ok(())
    }
}

impl fmt::Display for SemanticsKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for SemanticsKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "strong" => Ok(SemanticsKind::Strong),
            "ed" => Ok(SemanticsKind::Ed),
            "ae" => Ok(SemanticsKind::Ae),
            _ => Err(Error::KindMismatch {
                kind: "unknown",
                reason: format!("no semantics named {s:?}"),
            }),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Node {
    Atom(usize),
    Top,
    Bot,
    Not(usize),
    And(usize, usize),
    Or(usize, usize),
    Implies(usize, usize),
    Iff(usize, usize),
    Know(usize),
    Knowable(usize),
    Believe(usize),
}

/// A set of formulas compiled into one DAG of shared subformulas, children
/// always before parents.
#[derive(Clone, Debug)]
pub struct Compiled {
    nodes: Vec<Node>,
    atoms: Vec<String>,
    roots: Vec<usize>,
}

impl Compiled {
    pub fn new<'a>(formulas: impl IntoIterator<Item = &'a Formula>) -> Compiled {
        let mut builder = Builder::default();
        let roots = formulas.into_iter().map(|f| builder.intern(f)).collect();
        Compiled {
            nodes: builder.nodes,
            atoms: builder.atoms,
            roots,
        }
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    fn atom_values(&self, m: &SubsetModel) -> Vec<WorldSet> {
        self.atoms.iter().map(|a| m.value(a)).collect()
    }

    /// Fills `ext` with the extension of every node under the given ranges.
    fn extensions(
        &self,
        m: &SubsetModel,
        atoms: &[WorldSet],
        u: WorldSet,
        v: Option<WorldSet>,
        kind: SemanticsKind,
        ext: &mut Vec<WorldSet>,
    ) {
        let t = m.topology();
        ext.clear();
        for node in &self.nodes {
            let e = match *node {
                Node::Atom(i) => atoms[i].intersection(u),
                Node::Top => u,
                Node::Bot => WorldSet::EMPTY,
                Node::Not(a) => ext[a].complement_in(u),
                Node::And(a, b) => ext[a].intersection(ext[b]),
                Node::Or(a, b) => ext[a].union(ext[b]),
                Node::Implies(a, b) => ext[a].complement_in(u).union(ext[b]),
                Node::Iff(a, b) => {
                    let (x, y) = (ext[a], ext[b]);
                    x.intersection(y).union(x.union(y).complement_in(u))
                }
                Node::Know(a) => {
                    if ext[a] == u {
                        u
                    } else {
                        WorldSet::EMPTY
                    }
                }
                Node::Knowable(a) => t.interior(ext[a]),
                Node::Believe(a) => {
                    let e = ext[a];
                    let holds = match kind {
                        SemanticsKind::Strong => u.is_subset(t.closure(t.interior(e))),
                        SemanticsKind::Ed => v.unwrap_or_default().is_subset(e),
                        SemanticsKind::Ae => t.almost_subset(v.unwrap_or_default(), e),
                    };
                    if holds {
                        u
                    } else {
                        WorldSet::EMPTY
                    }
                }
            };
            ext.push(e);
        }
    }

    /// Extensions of the roots under one pair of ranges.
    pub fn root_extensions(
        &self,
        m: &SubsetModel,
        u: WorldSet,
        v: Option<WorldSet>,
        kind: SemanticsKind,
    ) -> Vec<WorldSet> {
        let atoms = self.atom_values(m);
        let mut ext = Vec::with_capacity(self.nodes.len());
        self.extensions(m, &atoms, u, v, kind, &mut ext);
        self.roots.iter().map(|&r| ext[r]).collect()
    }

    /// For each root, the canonically first scenario of `class` where it
    /// fails, or `None` if it is valid in `m`.
    pub fn first_failures(
        &self,
        m: &SubsetModel,
        kind: SemanticsKind,
        class: ScenarioClass,
    ) -> Result<Vec<Option<Scenario>>> {
        kind.check_class(class)?;
        let t = m.topology();
        let atoms = self.atom_values(m);
        let mut ext = Vec::with_capacity(self.nodes.len());
        // (world, U index, V index) of the best failure so far
        let mut best: Vec<Option<(usize, usize, usize)>> = vec![None; self.roots.len()];
        let pairs: Vec<(WorldSet, Option<WorldSet>)> = if kind.needs_doxastic() {
            m.range_pairs(class)
                .into_iter()
                .map(|(u, v)| (u, Some(v)))
                .collect()
        } else {
            t.opens()
                .iter()
                .filter(|u| !u.is_empty())
                .map(|&u| (u, None))
                .collect()
        };
        for (u, v) in pairs {
            self.extensions(m, &atoms, u, v, kind, &mut ext);
            let ui = t.open_index(u).expect("ranges are open");
            let vi = v.map_or(0, |v| t.open_index(v).expect("ranges are open"));
            for (slot, &r) in best.iter_mut().zip(&self.roots) {
                if let Some(x) = ext[r].complement_in(u).min() {
                    let cand = (x, ui, vi);
                    if slot.is_none_or(|b| cand < b) {
                        *slot = Some(cand);
                    }
                }
            }
        }
        let opens = t.opens();
        Ok(best
            .into_iter()
            .map(|b| {
                b.map(|(x, ui, vi)| Scenario {
                    world: x,
                    epistemic: opens[ui],
                    doxastic: kind.needs_doxastic().then(|| opens[vi]),
                })
            })
            .collect())
    }
}

#[derive(Default)]
struct Builder {
    nodes: Vec<Node>,
    index: HashMap<Node, usize>,
    atoms: Vec<String>,
    atom_index: HashMap<String, usize>,
}

impl Builder {
    fn push(&mut self, node: Node) -> usize {
        if let Some(&i) = self.index.get(&node) {
            return i;
        }
        let i = self.nodes.len();
        self.nodes.push(node);
        self.index.insert(node, i);
        i
    }

    fn intern(&mut self, f: &Formula) -> usize {
        let node = match f {
            Formula::Atom(name) => {
                let next = self.atoms.len();
                let i = *self.atom_index.entry(name.clone()).or_insert(next);
                if i == next {
                    self.atoms.push(name.clone());
                }
                Node::Atom(i)
            }
            Formula::Top => Node::Top,
            Formula::Bot => Node::Bot,
            Formula::Not(a) => Node::Not(self.intern(a)),
            Formula::And(a, b) => Node::And(self.intern(a), self.intern(b)),
            Formula::Or(a, b) => Node::Or(self.intern(a), self.intern(b)),
            Formula::Implies(a, b) => Node::Implies(self.intern(a), self.intern(b)),
            Formula::Iff(a, b) => Node::Iff(self.intern(a), self.intern(b)),
            Formula::Know(a) => Node::Know(self.intern(a)),
            Formula::Knowable(a) => Node::Knowable(self.intern(a)),
            Formula::Believe(a) => Node::Believe(self.intern(a)),
        };
        self.push(node)
    }
}

/// `⟦f⟧` under the epistemic range `u` and, for `Ed`/`Ae`, doxastic range `v`.
pub fn extension(
    m: &SubsetModel,
    u: WorldSet,
    v: Option<WorldSet>,
    f: &Formula,
    kind: SemanticsKind,
) -> Result<WorldSet> {
    kind.check_ranges(v)?;
    let t = m.topology();
    if !t.is_open(u) {
        return Err(Error::Scenario(format!("U={u} is not open")));
    }
    if let Some(v) = v {
        if !t.is_open(v) || !v.is_subset(u) {
            return Err(Error::Scenario(format!(
                "V={v} must be open and inside U={u}"
            )));
        }
    }
    Ok(Compiled::new([f]).root_extensions(m, u, v, kind)[0])
}

/// Truth of `f` at scenario `s`.
pub fn eval(m: &SubsetModel, s: &Scenario, f: &Formula, kind: SemanticsKind) -> Result<bool> {
    kind.check_ranges(s.doxastic)?;
    m.validate_scenario(s)?;
    Ok(extension(m, s.epistemic, s.doxastic, f, kind)?.contains(s.world))
}

/// One step of a failure explanation: a subformula and its truth value at
/// the witness scenario.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub formula: Formula,
    pub holds: bool,
}

/// A scenario where a formula fails, with the chain of subformulas that
/// decides the failure. The last step is the failing subformula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub scenario: Scenario,
    pub trace: Vec<TraceStep>,
}

impl Witness {
    /// Re-evaluates every step of the trace; true iff the top formula still
    /// fails and every recorded truth value is reproduced.
    pub fn replay(&self, m: &SubsetModel, f: &Formula, kind: SemanticsKind) -> Result<bool> {
        if eval(m, &self.scenario, f, kind)? {
            return Ok(false);
        }
        for step in &self.trace {
            if eval(m, &self.scenario, &step.formula, kind)? != step.holds {
                return Ok(false);
            }
        }
        Ok(self
            .trace
            .first()
            .is_some_and(|s| &s.formula == f && !s.holds))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub valid: bool,
    pub witness: Option<Witness>,
}

/// Follows the subformulas that decide the truth value of `f` at `s`.
pub fn explain(
    m: &SubsetModel,
    s: &Scenario,
    f: &Formula,
    kind: SemanticsKind,
) -> Result<Vec<TraceStep>> {
    let mut trace = Vec::new();
    let mut current = f.clone();
    loop {
        let holds = eval(m, s, &current, kind)?;
        trace.push(TraceStep {
            formula: current.clone(),
            holds,
        });
        let next = match (&current, holds) {
            (Formula::Not(a), _) => Some(a.as_ref().clone()),
            (Formula::And(a, b), false) => Some(if eval(m, s, a, kind)? {
                b.as_ref().clone()
            } else {
                a.as_ref().clone()
            }),
            (Formula::Or(a, b), true) => Some(if eval(m, s, a, kind)? {
                a.as_ref().clone()
            } else {
                b.as_ref().clone()
            }),
            (Formula::Implies(_, b), false) => Some(b.as_ref().clone()),
            _ => None,
        };
        match next {
            Some(n) => current = n,
            None => return Ok(trace),
        }
    }
}

/// Validity of `f` over every scenario of `class` in `m`.
pub fn valid_in_model(
    m: &SubsetModel,
    f: &Formula,
    kind: SemanticsKind,
    class: ScenarioClass,
) -> Result<Verdict> {
    valid_in_model_with_budget(m, f, kind, class, DEFAULT_SCENARIO_BUDGET)
}

pub fn valid_in_model_with_budget(
    m: &SubsetModel,
    f: &Formula,
    kind: SemanticsKind,
    class: ScenarioClass,
    budget: u64,
) -> Result<Verdict> {
    m.check_budget(budget)?;
    let failure = Compiled::new([f]).first_failures(m, kind, class)?.remove(0);
    match failure {
        None => Ok(Verdict {
            valid: true,
            witness: None,
        }),
        Some(scenario) => {
            let trace = explain(m, &scenario, f, kind)?;
            Ok(Verdict {
                valid: false,
                witness: Some(Witness { scenario, trace }),
            })
        }
    }
}

/// Bounds for [`find_countermodel`].
#[derive(Clone, Debug, PartialEq)]
pub struct SearchConfig {
    /// Largest carrier for the exhaustive phase (at most 4; 0 skips it).
    pub exhaustive_max_n: usize,
    /// Number of seeded random models tried after the exhaustive phase.
    pub random_models: usize,
    /// Largest carrier for random models (at most 16).
    pub random_max_n: usize,
    /// Subbasis density for random models.
    pub density: f64,
    /// Maximum number of models examined.
    pub budget: u64,
    pub seed: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            exhaustive_max_n: 3,
            random_models: 0,
            random_max_n: 6,
            density: 0.3,
            budget: 100_000,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Countermodel {
    pub model: SubsetModel,
    pub witness: Witness,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(Countermodel),
    /// Nothing found. `complete_through` is the largest carrier size for
    /// which every model was examined; only that claim is definitive.
    Exhausted {
        models_checked: u64,
        complete_through: Option<usize>,
    },
}

/// Looks for a model and scenario falsifying `f`: every topology on up to
/// `exhaustive_max_n` points with every valuation of the formula's atoms,
/// smallest first, then seeded random models.
pub fn find_countermodel(
    f: &Formula,
    kind: SemanticsKind,
    class: ScenarioClass,
    config: &SearchConfig,
) -> Result<SearchOutcome> {
    kind.check_class(class)?;
    if config.exhaustive_max_n > ENUMERATION_LIMIT {
        return Err(Error::EnumerationTooLarge {
            n: config.exhaustive_max_n,
            limit: ENUMERATION_LIMIT,
        });
    }
    if config.random_models > 0 && (config.random_max_n == 0 || config.random_max_n > MAX_WORLDS) {
        return Err(Error::CarrierTooLarge(config.random_max_n));
    }
    let compiled = Compiled::new([f]);
    let atoms: Vec<String> = f.atoms().into_iter().collect();
    let mut checked = 0u64;
    let mut complete_through = None;

    let try_model = |m: SubsetModel, checked: &mut u64| -> Result<Option<Countermodel>> {
        *checked += 1;
        if m.check_budget(DEFAULT_SCENARIO_BUDGET).is_err() {
            return Ok(None);
        }
        if let Some(scenario) = compiled.first_failures(&m, kind, class)?.remove(0) {
            let trace = explain(&m, &scenario, f, kind)?;
            return Ok(Some(Countermodel {
                model: m,
                witness: Witness { scenario, trace },
            }));
        }
        Ok(None)
    };

    for n in 1..=config.exhaustive_max_n {
        for t in enumerate_topologies(n)? {
            for v in all_valuations(n, &atoms) {
                if checked >= config.budget {
                    return Ok(SearchOutcome::Exhausted {
                        models_checked: checked,
                        complete_through,
                    });
                }
                if let Some(cm) = try_model(SubsetModel::new(t.clone(), v)?, &mut checked)? {
                    return Ok(SearchOutcome::Found(cm));
                }
            }
        }
        complete_through = Some(n);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    for _ in 0..config.random_models {
        if checked >= config.budget {
            break;
        }
        let n = rng.gen_range(1..=config.random_max_n);
        let seed = rng.gen::<u64>();
        let mut m = random_model(seed, n, 0, config.density)?;
        let full = WorldSet::full(n).bits();
        let valuation = atoms
            .iter()
            .map(|a| (a.clone(), WorldSet::from_bits(rng.gen::<u32>() & full)))
            .collect();
        m = SubsetModel::new(m.topology().clone(), valuation)?;
        if let Some(cm) = try_model(m, &mut checked)? {
            return Ok(SearchOutcome::Found(cm));
        }
    }
    Ok(SearchOutcome::Exhausted {
        models_checked: checked,
        complete_through,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Valuation;
    use crate::topology::Topology;

    fn s(xs: &[usize]) -> WorldSet {
        WorldSet::from_worlds(xs.iter().copied())
    }

    fn f(text: &str) -> Formula {
        text.parse().unwrap()
    }

    fn model(t: Topology, p: &[usize]) -> SubsetModel {
        SubsetModel::new(t, Valuation::from([("p".to_string(), s(p))])).unwrap()
    }

    #[test]
    fn extension_examples() {
        let m = model(Topology::sierpinski(), &[0]);
        let x = s(&[0, 1]);
        assert_eq!(
            extension(&m, x, None, &Formula::Top, SemanticsKind::Strong).unwrap(),
            x
        );
        assert_eq!(
            extension(&m, x, None, &f("dia p"), SemanticsKind::Strong).unwrap(),
            x
        );
        assert_eq!(
            extension(&m, x, None, &f("box p"), SemanticsKind::Strong).unwrap(),
            s(&[0])
        );
        assert!(extension(&m, x, Some(x), &f("p"), SemanticsKind::Strong).is_err());
        assert!(extension(&m, x, None, &f("p"), SemanticsKind::Ed).is_err());
        assert!(extension(&m, s(&[1]), None, &f("p"), SemanticsKind::Strong).is_err());
    }

    #[test]
    fn false_belief_under_strong_semantics() {
        let m = model(Topology::sierpinski(), &[0]);
        let sc = Scenario::epistemic(1, s(&[0, 1]));
        let k = SemanticsKind::Strong;
        assert!(eval(&m, &sc, &f("B p"), k).unwrap());
        assert!(!eval(&m, &sc, &f("K p"), k).unwrap());
        assert!(!eval(&m, &sc, &f("p"), k).unwrap());
        assert!(eval(&m, &sc, &f("B p -> dia p"), k).unwrap());
    }

    #[test]
    fn weak_factivity_fails_for_consistent_ed_scenario() {
        let m = model(Topology::discrete(2).unwrap(), &[1]);
        let sc = Scenario::ed(0, s(&[0, 1]), s(&[1]));
        assert!(eval(&m, &sc, &f("B p"), SemanticsKind::Ed).unwrap());
        assert!(!eval(&m, &sc, &f("dia p"), SemanticsKind::Ed).unwrap());
    }

    #[test]
    fn confident_belief_fails_for_dense_ed_scenario() {
        let t = Topology::generate_from_subbasis(3, [s(&[0]), s(&[1])]).unwrap();
        let m = model(t, &[0, 2]);
        let sc = Scenario::ed(0, s(&[0, 1, 2]), s(&[0, 1, 2]));
        let cb = f("B (box p | box !box p)");
        assert_eq!(
            extension(
                &m,
                sc.epistemic,
                sc.doxastic,
                &f("box p | box !box p"),
                SemanticsKind::Ed
            )
            .unwrap(),
            s(&[0, 1])
        );
        assert!(!eval(&m, &sc, &cb, SemanticsKind::Ed).unwrap());
    }

    #[test]
    fn validity_examples() {
        let m = model(Topology::sierpinski(), &[1]);
        let tk = valid_in_model(
            &m,
            &f("K p -> p"),
            SemanticsKind::Strong,
            ScenarioClass::All,
        )
        .unwrap();
        assert!(tk.valid && tk.witness.is_none());

        let v = valid_in_model(
            &m,
            &f("p -> box p"),
            SemanticsKind::Strong,
            ScenarioClass::All,
        )
        .unwrap();
        assert!(!v.valid);
        let w = v.witness.unwrap();
        assert_eq!(w.scenario, Scenario::epistemic(1, s(&[0, 1])));
        assert_eq!(w.trace.last().unwrap().formula, f("box p"));
        assert!(w
            .replay(&m, &f("p -> box p"), SemanticsKind::Strong)
            .unwrap());

        assert!(valid_in_model(&m, &f("p"), SemanticsKind::Strong, ScenarioClass::Dense).is_err());
    }

    #[test]
    fn reduction_equivalence_small() {
        for n in 1..=3 {
            for t in enumerate_topologies(n).unwrap() {
                for p in WorldSet::all_subsets(n) {
                    let m =
                        SubsetModel::new(t.clone(), Valuation::from([("p".into(), p)])).unwrap();
                    let v = valid_in_model(
                        &m,
                        &f("B p <-> K dia box p"),
                        SemanticsKind::Strong,
                        ScenarioClass::All,
                    )
                    .unwrap();
                    assert!(v.valid);
                }
            }
        }
    }

    #[test]
    fn countermodel_for_negative_introspection_of_box() {
        let phi = f("!box p -> box !box p");
        let out = find_countermodel(
            &phi,
            SemanticsKind::Strong,
            ScenarioClass::All,
            &SearchConfig::default(),
        )
        .unwrap();
        let SearchOutcome::Found(cm) = out else {
            panic!("expected a countermodel")
        };
        assert!(cm.model.size() <= 3);
        assert!(!eval(&cm.model, &cm.witness.scenario, &phi, SemanticsKind::Strong).unwrap());
    }

    #[test]
    fn countermodel_for_consistency_uses_empty_doxastic_range() {
        let phi = f("B p -> !B !p");
        let out = find_countermodel(
            &phi,
            SemanticsKind::Ed,
            ScenarioClass::All,
            &SearchConfig::default(),
        )
        .unwrap();
        let SearchOutcome::Found(cm) = out else {
            panic!("expected a countermodel")
        };
        assert_eq!(cm.witness.scenario.doxastic, Some(WorldSet::EMPTY));
        assert_eq!(cm.model.size(), 1);
    }

    #[test]
    fn sound_scheme_exhausts() {
        let out = find_countermodel(
            &f("K p -> p"),
            SemanticsKind::Strong,
            ScenarioClass::All,
            &SearchConfig::default(),
        )
        .unwrap();
        assert!(matches!(
            out,
            SearchOutcome::Exhausted {
                complete_through: Some(3),
                ..
            }
        ));
        let tiny = SearchConfig {
            budget: 3,
            ..SearchConfig::default()
        };
        let out = find_countermodel(
            &f("K p -> p"),
            SemanticsKind::Strong,
            ScenarioClass::All,
            &tiny,
        )
        .unwrap();
        assert_eq!(
            out,
            SearchOutcome::Exhausted {
                models_checked: 3,
                complete_through: Some(1)
            }
        );
    }

    #[test]
    fn search_rejects_oversized_exhaustive_phase() {
        let cfg = SearchConfig {
            exhaustive_max_n: 5,
            ..SearchConfig::default()
        };
        assert!(
            find_countermodel(&f("p"), SemanticsKind::Strong, ScenarioClass::All, &cfg).is_err()
        );
    }
}
