//! Relational (Kripke) models for the belief-only fragment, belief frames and
//! their brush decomposition, and the bridge to Alexandroff topologies.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::formula::Formula;
use crate::model::{
    atom_name, valuation_to_lists, DocumentKind, ModelDocument, Scenario, SubsetModel, Valuation,
};
use crate::semantics::{eval, SemanticsKind};
use crate::topology::Topology;
use crate::worlds::{WorldSet, MAX_WORLDS};

/// Worlds `0..n`, a binary relation, and a valuation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationalModel {
    n: usize,
    successors: Vec<WorldSet>,
    valuation: Valuation,
}

/// Frame conditions of a relation, each checked directly.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FrameProperties {
    pub serial: bool,
    pub transitive: bool,
    pub euclidean: bool,
    /// Serial, transitive and euclidean.
    pub belief_frame: bool,
    /// The final cluster `C` when the relation is `X × C` for nonempty `C`.
    pub brush: Option<WorldSet>,
    /// A brush with exactly one world outside its final cluster.
    pub pin: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BrushComponent {
    pub cell: WorldSet,
    pub final_cluster: WorldSet,
}

/// A belief frame split into brushes: the cells partition the worlds and the
/// relation is the union of `cell × final_cluster`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrushDecomposition {
    pub components: Vec<BrushComponent>,
}

impl BrushDecomposition {
    /// The relation the components describe, as successor sets.
    pub fn reconstruct(&self, n: usize) -> Vec<WorldSet> {
        let mut succ = vec![WorldSet::EMPTY; n];
        for c in &self.components {
            for x in c.cell {
                succ[x] = succ[x].union(c.final_cluster);
            }
        }
        succ
    }

    /// The component containing `x`.
    pub fn component_of(&self, x: usize) -> Option<&BrushComponent> {
        self.components.iter().find(|c| c.cell.contains(x))
    }
}

/// Outcome of comparing relational truth with topological truth.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BridgeCheck {
    Agrees,
    Disagrees { world: usize },
}

impl RelationalModel {
    pub fn new(
        n: usize,
        pairs: impl IntoIterator<Item = (usize, usize)>,
        valuation: Valuation,
    ) -> Result<RelationalModel> {
        if n > MAX_WORLDS {
            return Err(Error::CarrierTooLarge(n));
        }
        let mut successors = vec![WorldSet::EMPTY; n];
        for (a, b) in pairs {
            for w in [a, b] {
                if w >= n {
                    return Err(Error::WorldOutOfRange { world: w, n });
                }
            }
            successors[a] = successors[a].with(b);
        }
        for (atom, &set) in &valuation {
            if !crate::formula::is_atom_name(atom) {
                return Err(Error::Document(format!("invalid atom name {atom:?}")));
            }
            if !set.within(n) {
                return Err(Error::OutOfRange { set, n });
            }
        }
        Ok(RelationalModel {
            n,
            successors,
            valuation,
        })
    }

    pub fn from_successors(
        successors: Vec<WorldSet>,
        valuation: Valuation,
    ) -> Result<RelationalModel> {
        let n = successors.len();
        let pairs: Vec<(usize, usize)> = successors
            .iter()
            .enumerate()
            .flat_map(|(x, s)| s.iter().map(move |y| (x, y)))
            .collect();
        RelationalModel::new(n, pairs, valuation)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn successors(&self, x: usize) -> WorldSet {
        self.successors[x]
    }

    pub fn valuation(&self) -> &Valuation {
        &self.valuation
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|x| self.successors[x].iter().map(move |y| (x, y)))
            .collect()
    }

    pub fn classify(&self) -> FrameProperties {
        let succ = &self.successors;
        let serial = succ.iter().all(|s| !s.is_empty());
        let transitive = (0..self.n).all(|x| succ[x].iter().all(|y| succ[y].is_subset(succ[x])));
        let euclidean = (0..self.n).all(|x| succ[x].iter().all(|y| succ[x].is_subset(succ[y])));
        let brush = match succ.first() {
            Some(&c) if !c.is_empty() && succ.iter().all(|&s| s == c) => Some(c),
            _ => None,
        };
        let pin = brush.is_some_and(|c| self.n - c.len() == 1);
        FrameProperties {
            serial,
            transitive,
            euclidean,
            belief_frame: serial && transitive && euclidean,
            brush,
            pin,
        }
    }

    /// Splits a belief frame into brushes. Two worlds share a cell iff they
    /// have a common successor; the final cluster of a cell is its reflexive
    /// worlds. Components are ordered by their least world.
    pub fn decompose(&self) -> Result<BrushDecomposition> {
        if !self.classify().belief_frame {
            return Err(Error::NotBeliefFrame);
        }
        let mut components = Vec::new();
        let mut covered = WorldSet::EMPTY;
        for x in 0..self.n {
            if covered.contains(x) {
                continue;
            }
            let cell: WorldSet = (0..self.n)
                .filter(|&y| self.successors[x].intersects(self.successors[y]))
                .collect();
            let final_cluster: WorldSet = cell
                .iter()
                .filter(|&y| self.successors[y].contains(y))
                .collect();
            covered = covered.union(cell);
            components.push(BrushComponent {
                cell,
                final_cluster,
            });
        }
        Ok(BrushDecomposition { components })
    }

    /// The subset model whose topology is generated by the reflexive
    /// successor sets `R⁺(x)`.
    pub fn to_subset_model(&self) -> Result<SubsetModel> {
        if !self.classify().transitive {
            return Err(Error::NotTransitive);
        }
        let basis = (0..self.n).map(|x| self.successors[x].with(x));
        let topology = Topology::generate_from_subbasis(self.n, basis)?;
        SubsetModel::new(topology, self.valuation.clone())
    }

    /// Worlds satisfying a belief-only formula.
    pub fn truth_set(&self, f: &Formula) -> Result<WorldSet> {
        use Formula::*;
        let all = WorldSet::full(self.n);
        Ok(match f {
            Atom(a) => self.valuation.get(a).copied().unwrap_or_default(),
            Top => all,
            Bot => WorldSet::EMPTY,
            Not(a) => self.truth_set(a)?.complement_in(all),
            And(a, b) => self.truth_set(a)?.intersection(self.truth_set(b)?),
            Or(a, b) => self.truth_set(a)?.union(self.truth_set(b)?),
            Implies(a, b) => self
                .truth_set(a)?
                .complement_in(all)
                .union(self.truth_set(b)?),
            Iff(a, b) => {
                let (x, y) = (self.truth_set(a)?, self.truth_set(b)?);
                x.intersection(y).union(x.union(y).complement_in(all))
            }
            Believe(a) => {
                let inner = self.truth_set(a)?;
                (0..self.n)
                    .filter(|&x| self.successors[x].is_subset(inner))
                    .collect()
            }
            Know(_) | Knowable(_) => return Err(Error::NotDoxastic(f.to_string())),
        })
    }

    /// Kripke truth at `x`: `B φ` holds iff every successor satisfies `φ`.
    pub fn eval(&self, x: usize, f: &Formula) -> Result<bool> {
        if x >= self.n {
            return Err(Error::WorldOutOfRange {
                world: x,
                n: self.n,
            });
        }
        Ok(self.truth_set(f)?.contains(x))
    }

    /// Compares truth at each world `x` with truth at the epistemic scenario
    /// `(x, [x])` of the generated subset model, under strong semantics.
    pub fn check_bridge(&self, f: &Formula) -> Result<BridgeCheck> {
        let decomposition = self.decompose()?;
        let relational = self.truth_set(f)?;
        let subset = self.to_subset_model()?;
        for x in 0..self.n {
            let cell = decomposition
                .component_of(x)
                .expect("cells cover every world")
                .cell;
            let topological = eval(
                &subset,
                &Scenario::epistemic(x, cell),
                f,
                SemanticsKind::Strong,
            )?;
            if topological != relational.contains(x) {
                return Ok(BridgeCheck::Disagrees { world: x });
            }
        }
        Ok(BridgeCheck::Agrees)
    }

    pub fn to_document(&self) -> ModelDocument {
        ModelDocument {
            opens: None,
            rel: Some(self.pairs().into_iter().map(|(a, b)| [a, b]).collect()),
            subbasis: None,
            kind: DocumentKind::Relational,
            valuation: valuation_to_lists(&self.valuation),
            worlds: self.n,
        }
    }

    pub fn dump(&self) -> String {
        self.to_document().to_json()
    }
}

/// A reproducible random belief frame on `n` worlds: a random partition into
/// cells, a random nonempty final cluster in each, and `R = ⋃ cell × cluster`.
pub fn random_belief_frame(seed: u64, n: usize, atoms: usize) -> Result<RelationalModel> {
    if n == 0 || n > MAX_WORLDS {
        return Err(Error::CarrierTooLarge(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cells: BTreeMap<usize, WorldSet> = BTreeMap::new();
    for x in 0..n {
        let label = rng.gen_range(0..n);
        let cell = cells.entry(label).or_default();
        *cell = cell.with(x);
    }
    let mut successors = vec![WorldSet::EMPTY; n];
    for cell in cells.values() {
        let mut cluster: WorldSet = cell.iter().filter(|_| rng.gen_bool(0.5)).collect();
        if cluster.is_empty() {
            let members = cell.to_vec();
            cluster = WorldSet::singleton(members[rng.gen_range(0..members.len())]);
        }
        for x in *cell {
            successors[x] = cluster;
        }
    }
    let full = WorldSet::full(n).bits();
    let valuation = (0..atoms)
        .map(|i| (atom_name(i), WorldSet::from_bits(rng.gen::<u32>() & full)))
        .collect();
    RelationalModel::from_successors(successors, valuation)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(xs: &[usize]) -> WorldSet {
        WorldSet::from_worlds(xs.iter().copied())
    }

    fn pin() -> RelationalModel {
        let v = Valuation::from([("p".to_string(), s(&[1]))]);
        RelationalModel::new(2, [(0, 1), (1, 1)], v).unwrap()
    }

    #[test]
    fn classify_pin() {
        let props = pin().classify();
        assert_eq!(
            props,
            FrameProperties {
                serial: true,
                transitive: true,
                euclidean: true,
                belief_frame: true,
                brush: Some(s(&[1])),
                pin: true,
            }
        );
    }

    #[test]
    fn classify_identity_and_empty() {
        let id = RelationalModel::new(2, [(0, 0), (1, 1)], Valuation::new())
            .unwrap()
            .classify();
        assert!(id.belief_frame);
        assert_eq!(id.brush, None);
        let empty = RelationalModel::new(1, [], Valuation::new())
            .unwrap()
            .classify();
        assert!(!empty.serial);
        assert!(!empty.belief_frame);
    }

    #[test]
    fn decompose_examples() {
        let d = pin().decompose().unwrap();
        assert_eq!(
            d.components,
            vec![BrushComponent {
                cell: s(&[0, 1]),
                final_cluster: s(&[1])
            }]
        );

        let two_pins =
            RelationalModel::new(4, [(0, 1), (1, 1), (2, 3), (3, 3)], Valuation::new()).unwrap();
        let d = two_pins.decompose().unwrap();
        assert_eq!(d.components.len(), 2);
        assert_eq!(
            d.reconstruct(4),
            (0..4).map(|x| two_pins.successors(x)).collect::<Vec<_>>()
        );

        let total = RelationalModel::new(
            3,
            (0..3).flat_map(|x| (0..3).map(move |y| (x, y))),
            Valuation::new(),
        )
        .unwrap();
        let d = total.decompose().unwrap();
        assert_eq!(
            d.components,
            vec![BrushComponent {
                cell: s(&[0, 1, 2]),
                final_cluster: s(&[0, 1, 2])
            }]
        );

        let chain = RelationalModel::new(2, [(0, 1)], Valuation::new()).unwrap();
        assert!(matches!(chain.decompose(), Err(Error::NotBeliefFrame)));
    }

    #[test]
    fn subset_model_examples() {
        let m = pin().to_subset_model().unwrap();
        assert_eq!(m.topology().opens(), &[s(&[]), s(&[1]), s(&[0, 1])]);

        let id = RelationalModel::new(2, [(0, 0), (1, 1)], Valuation::new()).unwrap();
        assert_eq!(
            id.to_subset_model().unwrap().topology(),
            &Topology::discrete(2).unwrap()
        );

        let total =
            RelationalModel::new(2, [(0, 0), (0, 1), (1, 0), (1, 1)], Valuation::new()).unwrap();
        assert_eq!(
            total.to_subset_model().unwrap().topology(),
            &Topology::indiscrete(2).unwrap()
        );

        let non_transitive = RelationalModel::new(3, [(0, 1), (1, 2)], Valuation::new()).unwrap();
        assert!(matches!(
            non_transitive.to_subset_model(),
            Err(Error::NotTransitive)
        ));
    }

    #[test]
    fn kripke_evaluation() {
        let m = pin();
        let bp: Formula = "B p".parse().unwrap();
        assert!(m.eval(0, &bp).unwrap());
        assert!(!m.eval(0, &"p".parse().unwrap()).unwrap());
        assert!(m.eval(0, &"B p & !p".parse().unwrap()).unwrap());
        let lonely = RelationalModel::new(1, [], Valuation::new()).unwrap();
        assert!(lonely.eval(0, &"B false".parse().unwrap()).unwrap());
        assert!(matches!(
            m.eval(0, &"K p".parse().unwrap()),
            Err(Error::NotDoxastic(_))
        ));
        assert!(matches!(
            m.eval(0, &"box p".parse().unwrap()),
            Err(Error::NotDoxastic(_))
        ));
    }

    #[test]
    fn bridge_examples() {
        assert_eq!(
            pin().check_bridge(&"B p".parse().unwrap()).unwrap(),
            BridgeCheck::Agrees
        );
        let brush = RelationalModel::new(
            3,
            (0..3).flat_map(|x| [(x, 1), (x, 2)]),
            Valuation::from([("p".to_string(), s(&[1]))]),
        )
        .unwrap();
        assert_eq!(brush.classify().brush, Some(s(&[1, 2])));
        assert_eq!(
            brush.check_bridge(&"hatB p".parse().unwrap()).unwrap(),
            BridgeCheck::Agrees
        );
        assert_eq!(
            pin().check_bridge(&Formula::Top).unwrap(),
            BridgeCheck::Agrees
        );
        let chain = RelationalModel::new(2, [(0, 1)], Valuation::new()).unwrap();
        assert!(chain.check_bridge(&Formula::Top).is_err());
    }

    #[test]
    fn random_frames_are_belief_frames() {
        for seed in 0..50 {
            let m = random_belief_frame(seed, 1 + (seed as usize % 6), 2).unwrap();
            assert!(m.classify().belief_frame, "seed {seed}");
        }
        assert_eq!(
            random_belief_frame(7, 5, 2).unwrap(),
            random_belief_frame(7, 5, 2).unwrap()
        );
    }
}
