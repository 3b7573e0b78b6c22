use crate::blocks::floor_log;

/// Dyadic size class `(floor(log h), floor(log w))` of a block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalPair {
    pub a: u32,
    pub b: u32,
}

impl CanonicalPair {
    pub fn new(a: u32, b: u32) -> Self {
        CanonicalPair { a, b }
    }

    pub fn of(h: usize, w: usize) -> Self {
        CanonicalPair { a: floor_log(h), b: floor_log(w) }
    }

    /// Weak dominance: `self <= other` in both coordinates.
    pub fn dominated_by(&self, other: &CanonicalPair) -> bool {
        self.a <= other.a && self.b <= other.b
    }

    /// Dominated and distinct.
    pub fn strictly_dominated_by(&self, other: &CanonicalPair) -> bool {
        self != other && self.dominated_by(other)
    }

    pub fn transposed(&self) -> Self {
        CanonicalPair { a: self.b, b: self.a }
    }
}
