//! Topological subset models, epistemic and epistemic-doxastic scenarios,
//! the JSON model document, and seeded random models.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::formula::is_atom_name;
use crate::relational::RelationalModel;
use crate::topology::{enumerate_topologies, Topology};
use crate::worlds::{WorldSet, MAX_WORLDS};

/// Default cap on `|opens|² × n` for scenario enumeration.
pub const DEFAULT_SCENARIO_BUDGET: u64 = 1_000_000;

pub type Valuation = BTreeMap<String, WorldSet>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetModel {
    topology: Topology,
    valuation: Valuation,
}

impl SubsetModel {
    pub fn new(topology: Topology, valuation: Valuation) -> Result<SubsetModel> {
        let n = topology.size();
        for (atom, &set) in &valuation {
            if !is_atom_name(atom) {
                return Err(Error::Document(format!("invalid atom name {atom:?}")));
            }
            if !set.within(n) {
                return Err(Error::OutOfRange { set, n });
            }
        }
        Ok(SubsetModel {
            topology,
            valuation,
        })
    }

    pub fn topology(&self) -> &Topology {
        &self.topology
    }

    pub fn valuation(&self) -> &Valuation {
        &self.valuation
    }

    pub fn size(&self) -> usize {
        self.topology.size()
    }

    /// Worlds where `atom` holds; unlisted atoms hold nowhere.
    pub fn value(&self, atom: &str) -> WorldSet {
        self.valuation.get(atom).copied().unwrap_or_default()
    }

    /// Checks the scenario invariants: `x ∈ U`, `U` open, and when present
    /// `V` open with `V ⊆ U`.
    pub fn validate_scenario(&self, s: &Scenario) -> Result<()> {
        let n = self.size();
        if s.world >= n {
            return Err(Error::WorldOutOfRange { world: s.world, n });
        }
        if !s.epistemic.contains(s.world) {
            return Err(Error::Scenario(format!(
                "world {} is not in U={}",
                s.world, s.epistemic
            )));
        }
        if !self.topology.is_open(s.epistemic) {
            return Err(Error::Scenario(format!("U={} is not open", s.epistemic)));
        }
        if let Some(v) = s.doxastic {
            if !self.topology.is_open(v) {
                return Err(Error::Scenario(format!("V={v} is not open")));
            }
            if !v.is_subset(s.epistemic) {
                return Err(Error::Scenario(format!(
                    "V={v} is not contained in U={}",
                    s.epistemic
                )));
            }
        }
        Ok(())
    }

    /// Refuses models whose e-d scenario space exceeds `budget` steps.
    pub fn check_budget(&self, budget: u64) -> Result<()> {
        let opens = self.topology.opens().len() as u64;
        let needed = opens * opens * self.size() as u64;
        if needed > budget {
            Err(Error::BudgetExceeded { needed, budget })
        } else {
            Ok(())
        }
    }

    /// All `(x, U)` with `x ∈ U` open; `x` ascending, then `U` in canonical order.
    pub fn epistemic_scenarios(&self) -> impl Iterator<Item = Scenario> + '_ {
        (0..self.size()).flat_map(move |x| {
            self.topology
                .opens()
                .iter()
                .filter(move |u| u.contains(x))
                .map(move |&u| Scenario::epistemic(x, u))
        })
    }

    /// All `(x, U, V)` admitted by `class`, in canonical order.
    pub fn ed_scenarios(&self, class: ScenarioClass) -> impl Iterator<Item = Scenario> + '_ {
        self.epistemic_scenarios().flat_map(move |s| {
            let u = s.epistemic;
            self.topology
                .opens()
                .iter()
                .filter(move |v| v.is_subset(u) && class.admits(&self.topology, u, **v))
                .map(move |&v| Scenario::ed(s.world, u, v))
        })
    }

    /// `(U, V)` range pairs admitted by `class` with `U` nonempty, canonical order.
    pub fn range_pairs(&self, class: ScenarioClass) -> Vec<(WorldSet, WorldSet)> {
        let opens = self.topology.opens();
        let mut out = Vec::new();
        for &u in opens.iter().filter(|u| !u.is_empty()) {
            for &v in opens.iter().filter(|v| v.is_subset(u)) {
                if class.admits(&self.topology, u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn to_document(&self) -> ModelDocument {
        ModelDocument {
            opens: Some(self.topology.opens().iter().map(|o| o.to_vec()).collect()),
            rel: None,
            subbasis: None,
            kind: DocumentKind::Subset,
            valuation: valuation_to_lists(&self.valuation),
            worlds: self.size(),
        }
    }

    /// Canonical JSON dump.
    pub fn dump(&self) -> String {
        self.to_document().to_json()
    }
}

pub(crate) fn valuation_to_lists(v: &Valuation) -> BTreeMap<String, Vec<usize>> {
    v.iter().map(|(k, s)| (k.clone(), s.to_vec())).collect()
}

/// An epistemic scenario `(x, U)` or, with a doxastic range, `(x, U, V)`.
///
/// `x ∈ V` is not required: the agent may believe falsehoods.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Scenario {
    pub world: usize,
    pub epistemic: WorldSet,
    pub doxastic: Option<WorldSet>,
}

impl Scenario {
    pub fn epistemic(world: usize, u: WorldSet) -> Scenario {
        Scenario {
            world,
            epistemic: u,
            doxastic: None,
        }
    }

    pub fn ed(world: usize, u: WorldSet, v: WorldSet) -> Scenario {
        Scenario {
            world,
            epistemic: u,
            doxastic: Some(v),
        }
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, s: WorldSet) -> fmt::Result {
    for (i, x) in s.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

/// `x=<world>;U=<list>;V=<list>`, with `V` omitted for epistemic scenarios.
impl fmt::Display for Scenario {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x={};U=", self.world)?;
        write_list(f, self.epistemic)?;
        if let Some(v) = self.doxastic {
            write!(f, ";V=")?;
            write_list(f, v)?;
        }
        Ok(())
    }
}

fn parse_list(text: &str) -> Result<WorldSet> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(WorldSet::EMPTY);
    }
    let mut set = WorldSet::EMPTY;
    for part in text.split(',') {
        let x: usize = part
            .trim()
            .parse()
            .map_err(|_| Error::Scenario(format!("bad world index {part:?}")))?;
        if x >= MAX_WORLDS {
            return Err(Error::WorldOutOfRange {
                world: x,
                n: MAX_WORLDS,
            });
        }
        set = set.with(x);
    }
    Ok(set)
}

impl FromStr for Scenario {
    type Err = Error;

    fn from_str(text: &str) -> Result<Scenario> {
        let (mut world, mut u, mut v) = (None, None, None);
        for field in text.split(';').filter(|f| !f.trim().is_empty()) {
            let (key, value) = field
                .split_once('=')
                .ok_or_else(|| Error::Scenario(format!("expected key=value, got {field:?}")))?;
            match key.trim() {
                "x" => {
                    world = Some(
                        value
                            .trim()
                            .parse::<usize>()
                            .map_err(|_| Error::Scenario(format!("bad world index {value:?}")))?,
                    )
                }
                "U" => u = Some(parse_list(value)?),
                "V" => v = Some(parse_list(value)?),
                other => return Err(Error::Scenario(format!("unknown field {other:?}"))),
            }
        }
        let world = world.ok_or_else(|| Error::Scenario("missing x".into()))?;
        let epistemic = u.ok_or_else(|| Error::Scenario("missing U".into()))?;
        Ok(Scenario {
            world,
            epistemic,
            doxastic: v,
        })
    }
}

/// Restriction on admissible e-d scenarios.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ScenarioClass {
    All,
    /// `V ≠ ∅`
    Consistent,
    /// `U ⊆ cl(V)`
    Dense,
    /// `V = U`
    Total,
}

impl ScenarioClass {
    pub fn admits(self, t: &Topology, u: WorldSet, v: WorldSet) -> bool {
        match self {
            ScenarioClass::All => true,
            ScenarioClass::Consistent => !v.is_empty(),
            ScenarioClass::Dense => t.is_dense_in(v, u),
            ScenarioClass::Total => v == u,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ScenarioClass::All => "all",
            ScenarioClass::Consistent => "consistent",
            ScenarioClass::Dense => "dense",
            ScenarioClass::Total => "total",
        }
    }
}

impl fmt::Display for ScenarioClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for ScenarioClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(ScenarioClass::All),
            "consistent" => Ok(ScenarioClass::Consistent),
            "dense" => Ok(ScenarioClass::Dense),
            "total" => Ok(ScenarioClass::Total),
            _ => Err(Error::Scenario(format!("unknown scenario class {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DocumentKind {
    Subset,
    Relational,
}

/// Serialized form of a model. Keys are declared in sorted order so the
/// compact dump is canonical.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub opens: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rel: Option<Vec<[usize; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subbasis: Option<Vec<Vec<usize>>>,
    #[serde(rename = "type")]
    pub kind: DocumentKind,
    #[serde(default)]
    pub valuation: BTreeMap<String, Vec<usize>>,
    pub worlds: usize,
}

impl ModelDocument {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("model documents always serialize");
        s.push('\n');
        s
    }
}

/// A loaded model of either kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Model {
    Subset(SubsetModel),
    Relational(RelationalModel),
}

impl Model {
    pub fn dump(&self) -> String {
        match self {
            Model::Subset(m) => m.dump(),
            Model::Relational(m) => m.dump(),
        }
    }

    /// The subset model, converting a relational one through its reflexive closure.
    pub fn into_subset(self) -> Result<SubsetModel> {
        match self {
            Model::Subset(m) => Ok(m),
            Model::Relational(m) => m.to_subset_model(),
        }
    }
}

fn set_in_range(xs: &[usize], n: usize) -> Result<WorldSet> {
    if let Some(&x) = xs.iter().find(|&&x| x >= n) {
        return Err(Error::WorldOutOfRange { world: x, n });
    }
    Ok(WorldSet::from_worlds(xs.iter().copied()))
}

fn valuation_from_lists(lists: &BTreeMap<String, Vec<usize>>, n: usize) -> Result<Valuation> {
    lists
        .iter()
        .map(|(k, xs)| Ok((k.clone(), set_in_range(xs, n)?)))
        .collect()
}

/// Parses and validates a model document.
pub fn load(text: &str) -> Result<Model> {
    let doc: ModelDocument = serde_json::from_str(text)?;
    from_document(&doc)
}

pub fn from_document(doc: &ModelDocument) -> Result<Model> {
    let n = doc.worlds;
    if n == 0 {
        return Err(Error::Document("a model needs at least one world".into()));
    }
    if n > MAX_WORLDS {
        return Err(Error::CarrierTooLarge(n));
    }
    let valuation = valuation_from_lists(&doc.valuation, n)?;
    match doc.kind {
        DocumentKind::Subset => {
            if doc.rel.is_some() {
                return Err(Error::Document(
                    "\"rel\" is only allowed in relational documents".into(),
                ));
            }
            let sets = |lists: &Vec<Vec<usize>>| -> Result<Vec<WorldSet>> {
                lists.iter().map(|xs| set_in_range(xs, n)).collect()
            };
            let topology = match (&doc.opens, &doc.subbasis) {
                (Some(_), Some(_)) => {
                    return Err(Error::Document(
                        "give either \"opens\" or \"subbasis\", not both".into(),
                    ))
                }
                (Some(opens), None) => Topology::new(n, sets(opens)?)?,
                (None, Some(sub)) => Topology::generate_from_subbasis(n, sets(sub)?)?,
                (None, None) => {
                    return Err(Error::Document(
                        "subset documents need \"opens\" or \"subbasis\"".into(),
                    ))
                }
            };
            Ok(Model::Subset(SubsetModel::new(topology, valuation)?))
        }
        DocumentKind::Relational => {
            if doc.opens.is_some() || doc.subbasis.is_some() {
                return Err(Error::Document(
                    "relational documents take \"rel\", not opens".into(),
                ));
            }
            let rel = doc.rel.clone().unwrap_or_default();
            let pairs = rel.iter().map(|[a, b]| (*a, *b));
            Ok(Model::Relational(RelationalModel::new(
                n, pairs, valuation,
            )?))
        }
    }
}

/// Name of the `i`-th generated atom: `p`, `q`, `r`, `s`, `t`, then `a5`, `a6`, ...
pub fn atom_name(i: usize) -> String {
    const NAMES: [&str; 5] = ["p", "q", "r", "s", "t"];
    NAMES
        .get(i)
        .map_or_else(|| format!("a{i}"), |s| s.to_string())
}

/// A reproducible random model: a random subbasis (each of `2n` random
/// candidate subsets kept with probability `density`) closed into a
/// topology, and a uniform valuation for `atoms` atoms.
pub fn random_model(seed: u64, n: usize, atoms: usize, density: f64) -> Result<SubsetModel> {
    if n == 0 {
        return Err(Error::Document("a model needs at least one world".into()));
    }
    if n > MAX_WORLDS {
        return Err(Error::CarrierTooLarge(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let full = WorldSet::full(n).bits();
    let p = density.clamp(0.0, 1.0);
    let mut subbasis = Vec::new();
    for _ in 0..2 * n {
        let candidate = WorldSet::from_bits(rng.gen::<u32>() & full);
        if rng.gen_bool(p) {
            subbasis.push(candidate);
        }
    }
    let topology = Topology::generate_from_subbasis(n, subbasis)?;
    let valuation = (0..atoms)
        .map(|i| (atom_name(i), WorldSet::from_bits(rng.gen::<u32>() & full)))
        .collect();
    SubsetModel::new(topology, valuation)
}

/// Every valuation of `atoms` over a carrier of `n` worlds.
pub fn all_valuations(n: usize, atoms: &[String]) -> impl Iterator<Item = Valuation> + '_ {
    let per_atom = 1u64 << n;
    let total = per_atom.pow(atoms.len() as u32);
    (0..total).map(move |mut code| {
        atoms
            .iter()
            .map(|a| {
                let set = WorldSet::from_bits((code % per_atom) as u32);
                code /= per_atom;
                (a.clone(), set)
            })
            .collect()
    })
}

/// All topologies on `1..=max_n` points crossed with all valuations of `atoms`,
/// smallest carriers first.
pub fn exhaustive_models(max_n: usize, atoms: &[String]) -> Result<Vec<SubsetModel>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for t in enumerate_topologies(n)? {
            for v in all_valuations(n, atoms) {
                out.push(SubsetModel::new(t.clone(), v)?);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(xs: &[usize]) -> WorldSet {
        WorldSet::from_worlds(xs.iter().copied())
    }

    const SIERPINSKI: &str =
        r#"{"opens":[[],[0],[0,1]],"type":"subset","valuation":{"p":[0]},"worlds":2}"#;

    #[test]
    fn load_sierpinski_document() {
        let Model::Subset(m) = load(SIERPINSKI).unwrap() else {
            panic!("expected subset model")
        };
        assert_eq!(m.topology(), &Topology::sierpinski());
        assert_eq!(m.value("p"), s(&[0]));
        assert_eq!(m.value("q"), WorldSet::EMPTY);
        assert_eq!(m.dump(), format!("{SIERPINSKI}\n"));
    }

    #[test]
    fn load_subbasis_document() {
        let doc = r#"{"type":"subset","worlds":3,"subbasis":[[0],[1]],"valuation":{}}"#;
        let Model::Subset(m) = load(doc).unwrap() else {
            panic!()
        };
        assert_eq!(m.topology().opens().len(), 5);
    }

    #[test]
    fn load_rejects_missing_empty_set() {
        let doc = r#"{"type":"subset","worlds":2,"opens":[[0],[0,1]],"valuation":{}}"#;
        assert!(matches!(load(doc), Err(Error::Topology(_))));
    }

    #[test]
    fn load_rejects_valuation_out_of_range() {
        let doc = r#"{"type":"subset","worlds":2,"opens":[[],[0,1]],"valuation":{"p":[2]}}"#;
        assert!(matches!(
            load(doc),
            Err(Error::WorldOutOfRange { world: 2, n: 2 })
        ));
        let bad_atom = r#"{"type":"subset","worlds":1,"opens":[[],[0]],"valuation":{"box":[0]}}"#;
        assert!(load(bad_atom).is_err());
        assert!(load("{").is_err());
    }

    #[test]
    fn epistemic_scenarios_of_small_spaces() {
        let m = SubsetModel::new(Topology::indiscrete(2).unwrap(), Valuation::new()).unwrap();
        let got: Vec<_> = m.epistemic_scenarios().collect();
        assert_eq!(
            got,
            vec![
                Scenario::epistemic(0, s(&[0, 1])),
                Scenario::epistemic(1, s(&[0, 1]))
            ]
        );

        let m = SubsetModel::new(Topology::sierpinski(), Valuation::new()).unwrap();
        let got: Vec<_> = m.epistemic_scenarios().collect();
        assert_eq!(
            got,
            vec![
                Scenario::epistemic(0, s(&[0])),
                Scenario::epistemic(0, s(&[0, 1])),
                Scenario::epistemic(1, s(&[0, 1])),
            ]
        );

        let m = SubsetModel::new(Topology::discrete(1).unwrap(), Valuation::new()).unwrap();
        assert_eq!(
            m.epistemic_scenarios().collect::<Vec<_>>(),
            vec![Scenario::epistemic(0, s(&[0]))]
        );
    }

    #[test]
    fn ed_scenarios_of_indiscrete_pair() {
        let m = SubsetModel::new(Topology::indiscrete(2).unwrap(), Valuation::new()).unwrap();
        assert_eq!(m.ed_scenarios(ScenarioClass::All).count(), 4);
        let consistent: Vec<_> = m.ed_scenarios(ScenarioClass::Consistent).collect();
        assert_eq!(consistent.len(), 2);
        assert!(consistent.iter().all(|s| s.doxastic == Some(s.epistemic)));
    }

    #[test]
    fn total_class_matches_epistemic_scenarios() {
        let m = SubsetModel::new(Topology::discrete(3).unwrap(), Valuation::new()).unwrap();
        let total: Vec<_> = m.ed_scenarios(ScenarioClass::Total).collect();
        let expected: Vec<_> = m
            .epistemic_scenarios()
            .map(|e| Scenario::ed(e.world, e.epistemic, e.epistemic))
            .collect();
        assert_eq!(total, expected);
    }

    #[test]
    fn scenario_literal_round_trip() {
        let sc: Scenario = "x=1;U=0,1;V=".parse().unwrap();
        assert_eq!(sc, Scenario::ed(1, s(&[0, 1]), WorldSet::EMPTY));
        assert_eq!(sc.to_string(), "x=1;U=0,1;V=");
        let ep: Scenario = "x=0;U=0".parse().unwrap();
        assert_eq!(ep.doxastic, None);
        assert!("x=0".parse::<Scenario>().is_err());
        assert!("x=0;U=a".parse::<Scenario>().is_err());
        assert!("x=0;U=0;W=1".parse::<Scenario>().is_err());
    }

    #[test]
    fn scenario_validation() {
        let m = SubsetModel::new(Topology::sierpinski(), Valuation::new()).unwrap();
        assert!(m.validate_scenario(&"x=1;U=0,1".parse().unwrap()).is_ok());
        assert!(m.validate_scenario(&"x=1;U=0".parse().unwrap()).is_err());
        assert!(m.validate_scenario(&"x=1;U=1".parse().unwrap()).is_err());
        assert!(m
            .validate_scenario(&"x=0;U=0;V=0,1".parse().unwrap())
            .is_err());
        assert!(m
            .validate_scenario(&"x=1;U=0,1;V=".parse().unwrap())
            .is_ok());
    }

    #[test]
    fn random_model_is_deterministic() {
        let a = random_model(1, 3, 2, 0.3).unwrap();
        let b = random_model(1, 3, 2, 0.3).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.topology().verify(), Ok(()));
        assert!(matches!(
            random_model(1, 17, 1, 0.5),
            Err(Error::CarrierTooLarge(17))
        ));
    }

    #[test]
    fn budget_guard() {
        let m = SubsetModel::new(Topology::discrete(4).unwrap(), Valuation::new()).unwrap();
        assert!(m.check_budget(DEFAULT_SCENARIO_BUDGET).is_ok());
        assert!(matches!(
            m.check_budget(100),
            Err(Error::BudgetExceeded {
                needed: 1024,
                budget: 100
            })
        ));
    }

    #[test]
    fn valuation_enumeration() {
        let atoms = vec!["p".to_string(), "q".to_string()];
        assert_eq!(all_valuations(2, &atoms).count(), 16);
        assert_eq!(exhaustive_models(2, &atoms[..1]).unwrap().len(), 2 + 4 * 4);
    }
}
