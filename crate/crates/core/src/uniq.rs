//! Saturated counting of optimal objects: one, or more than one.

use std::fmt;

/// Whether an optimum is attained by exactly one object or by several.
///
/// This is the count of optimal covers capped at two; products of counts
/// saturate the same way.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Uniq {
    One,
    Many,
}

impl Uniq {
    /// Count of a disjoint product: unique only if both factors are.
    pub fn times(self, other: Uniq) -> Uniq {
        if self == Uniq::One && other == Uniq::One {
            Uniq::One
        } else {
            Uniq::Many
        }
    }

    /// The numeric value, 1 or 2.
    pub fn value(self) -> u8 {
        match self {
            Uniq::One => 1,
            Uniq::Many => 2,
        }
    }
}

impl fmt::Display for Uniq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}
