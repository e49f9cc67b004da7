//! Index subsets of `{0, .., beta-1}` with the sign bookkeeping used by the
//! Pfaffian calculus, and enumeration of even subsets.

use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::Result;

/// A strictly increasing set of 0-based indices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Subset {
    items: Vec<usize>,
}

impl Subset {
    /// Sorts and deduplicates.
    pub fn new(mut items: Vec<usize>) -> Self {
        items.sort_unstable();
        items.dedup();
        Subset { items }
    }

    pub fn empty() -> Self {
        Subset { items: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn is_even(&self) -> bool {
        self.items.len().is_multiple_of(2)
    }

    pub fn members(&self) -> &[usize] {
        &self.items
    }

    pub fn contains(&self, index: usize) -> bool {
        self.items.binary_search(&index).is_ok()
    }

    /// Position of `index` within the sorted members.
    pub fn position(&self, index: usize) -> Option<usize> {
        self.items.binary_search(&index).ok()
    }

    pub fn with(&self, index: usize) -> Self {
        let mut items = self.items.clone();
        if let Err(pos) = items.binary_search(&index) {
            items.insert(pos, index);
        }
        Subset { items }
    }

    pub fn without(&self, index: usize) -> Self {
        let mut items = self.items.clone();
        if let Ok(pos) = items.binary_search(&index) {
            items.remove(pos);
        }
        Subset { items }
    }

    /// `sign_S(k) = (-1)^{#{s in S : s < k}}`; `k` need not lie in the set.
    pub fn sign_at(&self, k: usize) -> i32 {
        let smaller = self.items.iter().take_while(|&&s| s < k).count();
        if smaller % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Indices of `{0..beta-1}` not in the set, ascending.
    pub fn complement(&self, beta: usize) -> Vec<usize> {
        (0..beta).filter(|i| !self.contains(*i)).collect()
    }

    pub fn is_proper_subset_of(&self, other: &Subset) -> bool {
        self.len() < other.len() && self.items.iter().all(|i| other.contains(*i))
    }

    pub fn expect_even(&self) -> Result<()> {
        if self.is_even() {
            Ok(())
        } else {
            Err(Error::ParityMismatch { len: self.len() })
        }
    }

    pub fn expect_odd(&self) -> Result<()> {
        if !self.is_even() {
            Ok(())
        } else {
            Err(Error::ParityMismatch { len: self.len() })
        }
    }
}

impl fmt::Display for Subset {
    /// 1-based, e.g. `{1,3}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, m) in self.items.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", m + 1)?;
        }
        write!(f, "}}")
    }
}

/// All subsets of `{0..beta-1}` with even cardinality, ordered by
/// (cardinality, lexicographic) — which is also a linear extension of
/// inclusion. Enumeration is exponential in `beta`.
pub fn even_subsets(beta: usize) -> Vec<Subset> {
    assert!(beta <= 20, "even-subset enumeration is exponential; beta = {beta} is too large");
    let mut out: Vec<Subset> = (0u64..(1u64 << beta))
        .filter(|mask| mask.count_ones() % 2 == 0)
        .map(|mask| Subset::new((0..beta).filter(|i| mask >> i & 1 == 1).collect()))
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.members().cmp(b.members())));
    out
}

/// All subsets of `{0..beta-1}` with odd cardinality.
pub fn odd_subsets(beta: usize) -> Vec<Subset> {
    assert!(beta <= 20, "odd-subset enumeration is exponential; beta = {beta} is too large");
    let mut out: Vec<Subset> = (0u64..(1u64 << beta))
        .filter(|mask| mask.count_ones() % 2 == 1)
        .map(|mask| Subset::new((0..beta).filter(|i| mask >> i & 1 == 1).collect()))
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.members().cmp(b.members())));
    out
}

/// Even subsets strictly containing `k`.
pub fn proper_even_supersets(beta: usize, k: &Subset) -> Vec<Subset> {
    even_subsets(beta)
        .into_iter()
        .filter(|l| k.is_proper_subset_of(l))
        .collect()
}
