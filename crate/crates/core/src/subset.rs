//! Subsets of a small carrier as bitmasks over declaration order.

use std::fmt;

/// Largest carrier for which full subset tables are materialized.
pub const MAX_TABLE_POINTS: usize = 12;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Subset(pub u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn singleton(x: usize) -> Self {
        Subset(1 << x)
    }

    pub fn full(n: usize) -> Self {
        if n == 64 {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << n) - 1)
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(xs: I) -> Self {
        Subset(xs.into_iter().fold(0, |m, x| m | (1 << x)))
    }

    pub fn contains(self, x: usize) -> bool {
        self.0 >> x & 1 == 1
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn complement(self, n: usize) -> Subset {
        Subset(!self.0 & Subset::full(n).0)
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn insert(&mut self, x: usize) {
        self.0 |= 1 << x;
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    /// Every subset of an `n`-point carrier, in mask order.
    pub fn all(n: usize) -> impl Iterator<Item = Subset> {
        assert!(n < 64, "carrier too large to enumerate subsets");
        (0..1u64 << n).map(Subset)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    /// Renders the subset as `{p q}` using the given point names.
    pub fn render(self, points: &[String]) -> String {
        let names: Vec<&str> = self.iter().map(|i| points[i].as_str()).collect();
        format!("{{{}}}", names.join(" "))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
