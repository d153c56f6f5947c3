//! Finite topological spaces on carriers `0..n`.
//!
//! Opens are stored explicitly, deduplicated and sorted by cardinality and
//! then by bit pattern. Every finite topology is Alexandroff, so each world
//! has a smallest open neighbourhood; those are computed at construction and
//! back the interior operator.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::worlds::{WorldSet, MAX_WORLDS};

/// Largest carrier for exhaustive enumeration.
pub const ENUMERATION_LIMIT: usize = 4;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Topology {
    n: usize,
    opens: Vec<WorldSet>,
    neighbourhoods: Vec<WorldSet>,
}

/// The first closure condition a family of subsets fails.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Violation {
    OutOfRange(WorldSet),
    MissingEmpty,
    MissingCarrier,
    MissingUnion(WorldSet, WorldSet),
    MissingIntersection(WorldSet, WorldSet),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::OutOfRange(s) => write!(f, "{s} is not a subset of the carrier"),
            Violation::MissingEmpty => write!(f, "the empty set is missing"),
            Violation::MissingCarrier => write!(f, "the carrier is missing"),
            Violation::MissingUnion(a, b) => write!(f, "{a} ∪ {b} is missing"),
            Violation::MissingIntersection(a, b) => write!(f, "{a} ∩ {b} is missing"),
        }
    }
}

fn canonical_order(a: &WorldSet, b: &WorldSet) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then(a.bits().cmp(&b.bits()))
}

fn check_carrier(n: usize) -> Result<()> {
    if n > MAX_WORLDS {
        Err(Error::CarrierTooLarge(n))
    } else {
        Ok(())
    }
}

/// Checks the topology conditions on an arbitrary family of subsets of `0..n`.
pub fn verify(n: usize, family: &[WorldSet]) -> Result<(), Violation> {
    if let Some(s) = family.iter().find(|s| !s.within(n)) {
        return Err(Violation::OutOfRange(*s));
    }
    let present: BTreeSet<WorldSet> = family.iter().copied().collect();
    if !present.contains(&WorldSet::EMPTY) {
        return Err(Violation::MissingEmpty);
    }
    if !present.contains(&WorldSet::full(n)) {
        return Err(Violation::MissingCarrier);
    }
    let mut sorted: Vec<WorldSet> = present.iter().copied().collect();
    sorted.sort_by(canonical_order);
    for (i, &a) in sorted.iter().enumerate() {
        for &b in &sorted[i + 1..] {
            if !present.contains(&a.union(b)) {
                return Err(Violation::MissingUnion(a, b));
            }
            if !present.contains(&a.intersection(b)) {
                return Err(Violation::MissingIntersection(a, b));
            }
        }
    }
    Ok(())
}

impl Topology {
    /// Builds a topology from an explicit family of opens, rejecting families
    /// that are not closed.
    pub fn new(n: usize, opens: impl IntoIterator<Item = WorldSet>) -> Result<Topology> {
        check_carrier(n)?;
        let family: Vec<WorldSet> = opens.into_iter().collect();
        verify(n, &family).map_err(|v| Error::Topology(v.to_string()))?;
        Ok(Topology::from_closed_family(n, family))
    }

    fn from_closed_family(n: usize, family: Vec<WorldSet>) -> Topology {
        let mut opens: Vec<WorldSet> = family
            .into_iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        opens.sort_by(canonical_order);
        let neighbourhoods = (0..n)
            .map(|x| {
                opens
                    .iter()
                    .filter(|o| o.contains(x))
                    .fold(WorldSet::full(n), |acc, o| acc.intersection(*o))
            })
            .collect();
        Topology {
            n,
            opens,
            neighbourhoods,
        }
    }

    /// The smallest topology containing `subbasis`.
    pub fn generate_from_subbasis(
        n: usize,
        subbasis: impl IntoIterator<Item = WorldSet>,
    ) -> Result<Topology> {
        check_carrier(n)?;
        let mut family: BTreeSet<WorldSet> = BTreeSet::from([WorldSet::EMPTY, WorldSet::full(n)]);
        for s in subbasis {
            if !s.within(n) {
                return Err(Error::OutOfRange { set: s, n });
            }
            family.insert(s);
        }
        loop {
            let current: Vec<WorldSet> = family.iter().copied().collect();
            let before = family.len();
            for (i, &a) in current.iter().enumerate() {
                for &b in &current[i + 1..] {
                    family.insert(a.union(b));
                    family.insert(a.intersection(b));
                }
            }
            if family.len() == before {
                break;
            }
        }
        Ok(Topology::from_closed_family(
            n,
            family.into_iter().collect(),
        ))
    }

    /// `{∅, X}`.
    pub fn indiscrete(n: usize) -> Result<Topology> {
        Topology::generate_from_subbasis(n, [])
    }

    /// Every subset is open.
    pub fn discrete(n: usize) -> Result<Topology> {
        Topology::generate_from_subbasis(n, (0..n).map(WorldSet::singleton))
    }

    /// The Sierpiński space on two points with `{0}` open.
    pub fn sierpinski() -> Topology {
        Topology::from_closed_family(
            2,
            vec![WorldSet::EMPTY, WorldSet::singleton(0), WorldSet::full(2)],
        )
    }

    /// The Alexandroff topology of a preorder, given as the up-set of each
    /// world. `up[x]` must contain `x` and be closed under the relation.
    pub fn from_preorder(up: &[WorldSet]) -> Result<Topology> {
        let n = up.len();
        check_carrier(n)?;
        let opens = WorldSet::all_subsets(n)
            .filter(|s| s.iter().all(|x| up[x].is_subset(*s)))
            .collect();
        Ok(Topology::from_closed_family(n, opens))
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn carrier(&self) -> WorldSet {
        WorldSet::full(self.n)
    }

    /// Opens in canonical order.
    pub fn opens(&self) -> &[WorldSet] {
        &self.opens
    }

    pub fn is_open(&self, a: WorldSet) -> bool {
        self.opens
            .binary_search_by(|o| canonical_order(o, &a))
            .is_ok()
    }

    /// Position of `a` in the canonical order of opens.
    pub fn open_index(&self, a: WorldSet) -> Option<usize> {
        self.opens.binary_search_by(|o| canonical_order(o, &a)).ok()
    }

    /// Smallest open set containing `x`.
    pub fn neighbourhood(&self, x: usize) -> WorldSet {
        self.neighbourhoods[x]
    }

    /// Re-checks the closure conditions.
    pub fn verify(&self) -> Result<(), Violation> {
        verify(self.n, &self.opens)
    }

    fn check(&self, a: WorldSet) -> Result<()> {
        if a.within(self.n) {
            Ok(())
        } else {
            Err(Error::OutOfRange { set: a, n: self.n })
        }
    }

    /// Largest open subset of `a`. Members of `a` outside the carrier are ignored.
    pub fn interior(&self, a: WorldSet) -> WorldSet {
        (0..self.n)
            .filter(|&x| self.neighbourhoods[x].is_subset(a))
            .collect()
    }

    pub fn try_interior(&self, a: WorldSet) -> Result<WorldSet> {
        self.check(a)?;
        Ok(self.interior(a))
    }

    /// Smallest closed superset of `a`.
    pub fn closure(&self, a: WorldSet) -> WorldSet {
        let x = self.carrier();
        self.interior(a.complement_in(x)).complement_in(x)
    }

    pub fn try_closure(&self, a: WorldSet) -> Result<WorldSet> {
        self.check(a)?;
        Ok(self.closure(a))
    }

    /// `u ⊆ cl(a)`.
    pub fn is_dense_in(&self, a: WorldSet, u: WorldSet) -> bool {
        u.is_subset(self.closure(a))
    }

    /// `int(cl(a)) = ∅`.
    pub fn is_nowhere_dense(&self, a: WorldSet) -> bool {
        self.interior(self.closure(a)).is_empty()
    }

    /// `a ⊆* b`: the part of `a` outside `b` is nowhere dense.
    pub fn almost_subset(&self, a: WorldSet, b: WorldSet) -> bool {
        self.is_nowhere_dense(a.difference(b))
    }
}

impl fmt::Debug for Topology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Topology(n={}, opens=[", self.n)?;
        for (i, o) in self.opens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{o}")?;
        }
        write!(f, "])")
    }
}

/// Every labelled topology on `n` points, each exactly once.
///
/// Works through the reflexive transitive relations on `0..n` and takes the
/// up-set topology of each one.
pub fn enumerate_topologies(n: usize) -> Result<Vec<Topology>> {
    if n > ENUMERATION_LIMIT {
        return Err(Error::EnumerationTooLarge {
            n,
            limit: ENUMERATION_LIMIT,
        });
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (0..n).filter(move |&y| y != x).map(move |y| (x, y)))
        .collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u32..(1 << pairs.len()) {
        let mut up: Vec<WorldSet> = (0..n).map(WorldSet::singleton).collect();
        for (bit, &(x, y)) in pairs.iter().enumerate() {
            if mask & (1 << bit) != 0 {
                up[x] = up[x].with(y);
            }
        }
        let transitive = (0..n).all(|x| up[x].iter().all(|y| up[y].is_subset(up[x])));
        if !transitive {
            continue;
        }
        let t = Topology::from_preorder(&up)?;
        if seen.insert(t.opens.clone()) {
            out.push(t);
        }
    }
    Ok(out)
}
