//! Bit-indexed sets of worlds.

use std::fmt;

/// Largest carrier the library accepts.
pub const MAX_WORLDS: usize = 16;

/// A set of worlds drawn from a carrier `0..n` with `n <= MAX_WORLDS`.
///
/// Bit `i` is set iff world `i` is a member. The carrier size is not stored;
/// callers combine sets from the same carrier only.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WorldSet(u32);

impl WorldSet {
    pub const EMPTY: WorldSet = WorldSet(0);

    pub const fn from_bits(bits: u32) -> Self {
        WorldSet(bits)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    /// The full carrier `{0, .., n-1}`.
    pub const fn full(n: usize) -> Self {
        if n >= 32 {
            WorldSet(u32::MAX)
        } else {
            WorldSet((1u32 << n) - 1)
        }
    }

    pub const fn singleton(x: usize) -> Self {
        WorldSet(1 << x)
    }

    pub fn from_worlds<I: IntoIterator<Item = usize>>(worlds: I) -> Self {
        worlds.into_iter().fold(WorldSet::EMPTY, |s, x| s.with(x))
    }

    pub const fn with(self, x: usize) -> Self {
        WorldSet(self.0 | (1 << x))
    }

    pub const fn contains(self, x: usize) -> bool {
        x < 32 && self.0 & (1 << x) != 0
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn union(self, other: WorldSet) -> Self {
        WorldSet(self.0 | other.0)
    }

    pub const fn intersection(self, other: WorldSet) -> Self {
        WorldSet(self.0 & other.0)
    }

    pub const fn difference(self, other: WorldSet) -> Self {
        WorldSet(self.0 & !other.0)
    }

    /// Complement relative to `within`.
    pub const fn complement_in(self, within: WorldSet) -> Self {
        WorldSet(within.0 & !self.0)
    }

    pub const fn is_subset(self, other: WorldSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn intersects(self, other: WorldSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Smallest member, if any.
    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// True when every member is below `n`.
    pub const fn within(self, n: usize) -> bool {
        self.is_subset(WorldSet::full(n))
    }

    pub fn iter(self) -> Worlds {
        Worlds(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Every subset of the carrier of size `n`, in increasing bit order.
    pub fn all_subsets(n: usize) -> impl Iterator<Item = WorldSet> {
        (0..=WorldSet::full(n).0).map(WorldSet)
    }
}

/// Iterator over the members of a [`WorldSet`] in ascending order.
pub struct Worlds(u32);

impl Iterator for Worlds {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let x = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(x)
    }
}

impl IntoIterator for WorldSet {
    type Item = usize;
    type IntoIter = Worlds;

    fn into_iter(self) -> Worlds {
        self.iter()
    }
}

impl FromIterator<usize> for WorldSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        WorldSet::from_worlds(iter)
    }
}

impl fmt::Debug for WorldSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for WorldSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}
