//! Axiom schemes over the metavariables `φ` and `ψ`.
//!
//! A template is an ordinary [`Formula`] whose metavariables are atoms named
//! `φ` and `ψ`. Those names fall outside the atom grammar, so they never
//! collide with an object-language atom.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::Formula;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MetaVar {
    Phi,
    Psi,
}

impl MetaVar {
    pub fn symbol(self) -> &'static str {
        match self {
            MetaVar::Phi => "φ",
            MetaVar::Psi => "ψ",
        }
    }

    fn atom(self) -> Formula {
        Formula::atom(self.symbol())
    }

    fn from_symbol(s: &str) -> Option<MetaVar> {
        match s {
            "φ" => Some(MetaVar::Phi),
            "ψ" => Some(MetaVar::Psi),
            _ => None,
        }
    }
}

pub type Substitution = BTreeMap<MetaVar, Formula>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Modality {
    Know,
    Knowable,
    Believe,
}

impl Modality {
    pub fn apply(self, f: Formula) -> Formula {
        match self {
            Modality::Know => Formula::know(f),
            Modality::Knowable => Formula::knowable(f),
            Modality::Believe => Formula::believe(f),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Modality::Know => "K",
            Modality::Knowable => "box",
            Modality::Believe => "B",
        }
    }
}

/// Names of the axiom schemes the library knows about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SchemeName {
    /// `*(φ -> ψ) -> (*φ -> *ψ)`
    Distribution(Modality),
    /// `*φ -> !*!φ`
    Consistency(Modality),
    /// `*φ -> φ`
    Factivity(Modality),
    /// `*φ -> **φ`
    PositiveIntrospection(Modality),
    /// `!*!*φ -> *!*!φ`
    Directedness(Modality),
    /// `!*φ -> *!*φ`
    NegativeIntrospection(Modality),
    /// `Bφ -> KBφ`
    StrongPositiveIntrospection,
    /// `!Bφ -> K!Bφ`
    StrongNegativeIntrospection,
    /// `Kφ -> Bφ`
    KnowledgeImpliesBelief,
    /// `Bφ -> BKφ`
    FullBelief,
    /// `Bφ -> B box φ`
    ResponsibleBelief,
    /// `Bφ -> dia φ`
    WeakFactivity,
    /// `B(box φ | box !box φ)`
    ConfidentBelief,
    /// `Kφ -> box φ`
    KnowledgeImpliesKnowable,
    /// `Bφ <-> K dia box φ`
    BeliefReduction,
}

impl SchemeName {
    pub fn label(self) -> String {
        use SchemeName::*;
        match self {
            Distribution(m) => format!("K_{}", m.label()),
            Consistency(m) => format!("D_{}", m.label()),
            Factivity(m) => format!("T_{}", m.label()),
            PositiveIntrospection(m) => format!("4_{}", m.label()),
            Directedness(m) => format!(".2_{}", m.label()),
            NegativeIntrospection(m) => format!("5_{}", m.label()),
            StrongPositiveIntrospection => "sPI".into(),
            StrongNegativeIntrospection => "sNI".into(),
            KnowledgeImpliesBelief => "KB".into(),
            FullBelief => "FB".into(),
            ResponsibleBelief => "RB".into(),
            WeakFactivity => "wF".into(),
            ConfidentBelief => "CB".into(),
            KnowledgeImpliesKnowable => "KI".into(),
            BeliefReduction => "EQ".into(),
        }
    }

    /// Inverse of [`SchemeName::label`].
    pub fn from_label(label: &str) -> Option<SchemeName> {
        use SchemeName::*;
        let fixed = [
            StrongPositiveIntrospection,
            StrongNegativeIntrospection,
            KnowledgeImpliesBelief,
            FullBelief,
            ResponsibleBelief,
            WeakFactivity,
            ConfidentBelief,
            KnowledgeImpliesKnowable,
            BeliefReduction,
        ];
        let modal: [fn(Modality) -> SchemeName; 6] = [
            Distribution,
            Consistency,
            Factivity,
            PositiveIntrospection,
            Directedness,
            NegativeIntrospection,
        ];
        let mods = [Modality::Know, Modality::Knowable, Modality::Believe];
        fixed
            .into_iter()
            .chain(modal.iter().flat_map(|c| mods.iter().map(move |m| c(*m))))
            .find(|s| s.label() == label)
    }
}

impl fmt::Display for SchemeName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scheme {
    pub name: SchemeName,
    pub template: Formula,
}

impl Scheme {
    pub fn new(name: SchemeName) -> Scheme {
        use Formula as F;
        use SchemeName::*;
        let phi = MetaVar::Phi.atom();
        let psi = MetaVar::Psi.atom();
        let b = Modality::Believe;
        let template = match name {
            Distribution(m) => F::implies(
                m.apply(F::implies(phi.clone(), psi.clone())),
                F::implies(m.apply(phi), m.apply(psi)),
            ),
            Consistency(m) => F::implies(m.apply(phi.clone()), F::not(m.apply(F::not(phi)))),
            Factivity(m) => F::implies(m.apply(phi.clone()), phi),
            PositiveIntrospection(m) => F::implies(m.apply(phi.clone()), m.apply(m.apply(phi))),
            Directedness(m) => F::implies(
                F::not(m.apply(F::not(m.apply(phi.clone())))),
                m.apply(F::not(m.apply(F::not(phi)))),
            ),
            NegativeIntrospection(m) => {
                F::implies(F::not(m.apply(phi.clone())), m.apply(F::not(m.apply(phi))))
            }
            StrongPositiveIntrospection => F::implies(b.apply(phi.clone()), F::know(b.apply(phi))),
            StrongNegativeIntrospection => {
                F::implies(F::not(b.apply(phi.clone())), F::know(F::not(b.apply(phi))))
            }
            KnowledgeImpliesBelief => F::implies(F::know(phi.clone()), b.apply(phi)),
            FullBelief => F::implies(b.apply(phi.clone()), b.apply(F::know(phi))),
            ResponsibleBelief => F::implies(b.apply(phi.clone()), b.apply(F::knowable(phi))),
            WeakFactivity => F::implies(b.apply(phi.clone()), F::dia(phi)),
            ConfidentBelief => b.apply(F::or(
                F::knowable(phi.clone()),
                F::knowable(F::not(F::knowable(phi))),
            )),
            KnowledgeImpliesKnowable => F::implies(F::know(phi.clone()), F::knowable(phi)),
            BeliefReduction => F::iff(b.apply(phi.clone()), F::know(F::dia(F::knowable(phi)))),
        };
        Scheme { name, template }
    }

    /// Metavariables occurring in the template, in order.
    pub fn metavars(&self) -> Vec<MetaVar> {
        let atoms = self.template.atoms();
        [MetaVar::Phi, MetaVar::Psi]
            .into_iter()
            .filter(|v| atoms.contains(v.symbol()))
            .collect()
    }

    /// Replaces every metavariable by its binding.
    pub fn instantiate(&self, subst: &Substitution) -> Result<Formula> {
        for var in self.metavars() {
            if !subst.contains_key(&var) {
                return Err(Error::MissingBinding {
                    scheme: self.name.label(),
                    var: var.symbol(),
                });
            }
        }
        Ok(substitute(&self.template, subst))
    }

    /// Every instance over `candidates`: one per binding of each metavariable.
    pub fn instances(&self, candidates: &[Formula]) -> Vec<Formula> {
        let vars = self.metavars();
        let mut out = Vec::new();
        let mut subst = Substitution::new();
        fill(self, &vars, candidates, &mut subst, &mut out);
        out
    }
}

fn fill(
    scheme: &Scheme,
    vars: &[MetaVar],
    candidates: &[Formula],
    subst: &mut Substitution,
    out: &mut Vec<Formula>,
) {
    match vars.split_first() {
        None => out.push(substitute(&scheme.template, subst)),
        Some((v, rest)) => {
            for c in candidates {
                subst.insert(*v, c.clone());
                fill(scheme, rest, candidates, subst, out);
            }
            subst.remove(v);
        }
    }
}

fn substitute(f: &Formula, subst: &Substitution) -> Formula {
    if let Formula::Atom(name) = f {
        if let Some(bound) = MetaVar::from_symbol(name).and_then(|v| subst.get(&v)) {
            return bound.clone();
        }
        return f.clone();
    }
    f.map_children(|c| substitute(c, subst))
}
