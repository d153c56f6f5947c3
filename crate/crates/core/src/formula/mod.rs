//! Formulas of the trimodal language of knowledge (`K`), knowability (`box`)
//! and belief (`B`), together with axiom schemes and the translation maps
//! between fragments.
//!
//! The dual operators `hatK`, `dia` and `hatB` are not separate variants: the
//! parser desugars them to `!K!`, `!box!` and `!B!`, and the printer puts the
//! sugar back whenever it sees that pattern.

mod parser;
mod printer;
mod scheme;

use std::collections::BTreeSet;
use std::fmt;

pub use parser::{is_atom_name, parse, ParseError, ParseErrorKind};
pub use printer::to_text;
pub use scheme::{MetaVar, Modality, Scheme, SchemeName, Substitution};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Atom(String),
    Top,
    Bot,
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
    /// `K`: true at every world of the epistemic range.
    Know(Box<Formula>),
    /// `box`: true on some open neighbourhood of the actual world.
    Knowable(Box<Formula>),
    /// `B`
    Believe(Box<Formula>),
}

/// Which operator a translation rewrites.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Translation {
    /// `box` becomes `K`.
    BoxToKnow,
    /// `B phi` becomes `K dia box phi`.
    BeliefToKnowledge,
    /// `B phi` becomes `B dia box phi`.
    AlmostBelief,
}

impl Formula {
    pub fn atom(name: impl Into<String>) -> Self {
        Formula::Atom(name.into())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Self {
        Formula::Not(Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Self {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Self {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Formula, b: Formula) -> Self {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    pub fn iff(a: Formula, b: Formula) -> Self {
        Formula::Iff(Box::new(a), Box::new(b))
    }

    pub fn know(f: Formula) -> Self {
        Formula::Know(Box::new(f))
    }

    pub fn knowable(f: Formula) -> Self {
        Formula::Knowable(Box::new(f))
    }

    pub fn believe(f: Formula) -> Self {
        Formula::Believe(Box::new(f))
    }

    /// `hatK f`, stored as `!K!f`.
    pub fn hat_know(f: Formula) -> Self {
        Formula::not(Formula::know(Formula::not(f)))
    }

    /// `dia f`, stored as `!box!f`.
    pub fn dia(f: Formula) -> Self {
        Formula::not(Formula::knowable(Formula::not(f)))
    }

    /// `hatB f`, stored as `!B!f`.
    pub fn hat_believe(f: Formula) -> Self {
        Formula::not(Formula::believe(Formula::not(f)))
    }

    /// Immediate subformulas, left to right.
    pub fn children(&self) -> Vec<&Formula> {
        use Formula::*;
        match self {
            Atom(_) | Top | Bot => vec![],
            Not(a) | Know(a) | Knowable(a) | Believe(a) => vec![a],
            And(a, b) | Or(a, b) | Implies(a, b) | Iff(a, b) => vec![a, b],
        }
    }

    /// Rebuilds this node with every child replaced by `f(child)`.
    pub fn map_children(&self, mut f: impl FnMut(&Formula) -> Formula) -> Formula {
        use Formula::*;
        let b = |x: Formula| Box::new(x);
        match self {
            Atom(_) | Top | Bot => self.clone(),
            Not(a) => Not(b(f(a))),
            Know(a) => Know(b(f(a))),
            Knowable(a) => Knowable(b(f(a))),
            Believe(a) => Believe(b(f(a))),
            And(x, y) => And(b(f(x)), b(f(y))),
            Or(x, y) => Or(b(f(x)), b(f(y))),
            Implies(x, y) => Implies(b(f(x)), b(f(y))),
            Iff(x, y) => Iff(b(f(x)), b(f(y))),
        }
    }

    /// The formula and all of its descendants, deduplicated structurally.
    pub fn subformulas(&self) -> BTreeSet<Formula> {
        let mut out = BTreeSet::new();
        self.collect_subformulas(&mut out);
        out
    }

    fn collect_subformulas(&self, out: &mut BTreeSet<Formula>) {
        if out.contains(self) {
            return;
        }
        for c in self.children() {
            c.collect_subformulas(out);
        }
        out.insert(self.clone());
    }

    /// Atom names occurring in the formula, sorted.
    pub fn atoms(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.visit(&mut |f| {
            if let Formula::Atom(name) = f {
                out.insert(name.clone());
            }
        });
        out
    }

    /// Pre-order traversal.
    pub fn visit(&self, f: &mut impl FnMut(&Formula)) {
        f(self);
        for c in self.children() {
            c.visit(f);
        }
    }

    /// Number of nodes satisfying `pred`.
    pub fn count(&self, pred: impl Fn(&Formula) -> bool) -> usize {
        let mut n = 0;
        self.visit(&mut |f| {
            if pred(f) {
                n += 1;
            }
        });
        n
    }

    /// Maximum nesting of modal operators.
    pub fn modal_depth(&self) -> usize {
        use Formula::*;
        match self {
            Atom(_) | Top | Bot => 0,
            Not(a) => a.modal_depth(),
            Know(a) | Knowable(a) | Believe(a) => 1 + a.modal_depth(),
            And(a, b) | Or(a, b) | Implies(a, b) | Iff(a, b) => {
                a.modal_depth().max(b.modal_depth())
            }
        }
    }

    pub fn mentions_know(&self) -> bool {
        self.count(|f| matches!(f, Formula::Know(_))) > 0
    }

    pub fn mentions_knowable(&self) -> bool {
        self.count(|f| matches!(f, Formula::Knowable(_))) > 0
    }

    pub fn mentions_belief(&self) -> bool {
        self.count(|f| matches!(f, Formula::Believe(_))) > 0
    }

    /// Structural rewrite of one operator; every other node is preserved.
    pub fn translate(&self, map: Translation) -> Formula {
        match (map, self) {
            (Translation::BoxToKnow, Formula::Knowable(a)) => Formula::know(a.translate(map)),
            (Translation::BeliefToKnowledge, Formula::Believe(a)) => {
                Formula::know(Formula::dia(Formula::knowable(a.translate(map))))
            }
            (Translation::AlmostBelief, Formula::Believe(a)) => {
                Formula::believe(Formula::dia(Formula::knowable(a.translate(map))))
            }
            _ => self.map_children(|c| c.translate(map)),
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&to_text(self))
    }
}

impl fmt::Debug for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "`{}`", to_text(self))
    }
}

impl std::str::FromStr for Formula {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse(s)
    }
}
