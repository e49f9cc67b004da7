//! Multiindices: tuples of nonnegative exponents with the elementwise
//! partial order and graded-lexicographic total order.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_traits::One;

/// Exponent tuple of fixed arity.
///
/// `Ord` is graded lexicographic: first by total degree, then lexicographic
/// on the entries. This gives canonical iteration and printing order for
/// sparse polynomial maps; no algebraic result depends on it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(exponents: Vec<u32>) -> Self {
        MultiIndex(exponents)
    }

    pub fn zero(arity: usize) -> Self {
        MultiIndex(vec![0; arity])
    }

    /// The `pos`-th unit multiindex.
    pub fn unit(arity: usize, pos: usize) -> Self {
        let mut e = vec![0; arity];
        e[pos] = 1;
        MultiIndex(e)
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn get(&self, pos: usize) -> u32 {
        self.0[pos]
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    /// Total degree `|alpha|`.
    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Elementwise partial order `alpha <= other`.
    pub fn le(&self, other: &MultiIndex) -> bool {
        self.arity() == other.arity() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn bumped(&self, pos: usize) -> Self {
        let mut e = self.0.clone();
        e[pos] += 1;
        MultiIndex(e)
    }

    pub fn decremented(&self, pos: usize) -> Self {
        debug_assert!(self.0[pos] > 0);
        let mut e = self.0.clone();
        e[pos] -= 1;
        MultiIndex(e)
    }

    pub fn plus(&self, other: &MultiIndex) -> Self {
        debug_assert_eq!(self.arity(), other.arity());
        MultiIndex(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Elementwise difference, defined only when `other <= self`.
    pub fn minus(&self, other: &MultiIndex) -> Option<Self> {
        if !other.le(self) {
            return None;
        }
        Some(MultiIndex(
            self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect(),
        ))
    }

    /// `alpha! = prod_j alpha_j!`.
    pub fn factorial(&self) -> BigInt {
        let mut acc = BigInt::one();
        for &e in &self.0 {
            for f in 2..=e {
                acc *= BigInt::from(f);
            }
        }
        acc
    }

    /// `alpha! / (alpha - sub)!` as a product of falling factors; requires
    /// `sub <= alpha`.
    pub fn falling_factorial(&self, sub: &MultiIndex) -> Option<BigInt> {
        if !sub.le(self) {
            return None;
        }
        let mut acc = BigInt::one();
        for (&a, &s) in self.0.iter().zip(&sub.0) {
            for f in (a - s + 1)..=a {
                acc *= BigInt::from(f);
            }
        }
        Some(acc)
    }

    /// All multiindices of the given arity with total degree at most `max`.
    pub fn all_up_to(arity: usize, max: u32) -> Vec<MultiIndex> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; arity];
        fn rec(pos: usize, remaining: u32, cur: &mut Vec<u32>, out: &mut Vec<MultiIndex>) {
            if pos == cur.len() {
                out.push(MultiIndex(cur.clone()));
                return;
            }
            for e in 0..=remaining {
                cur[pos] = e;
                rec(pos + 1, remaining - e, cur, out);
            }
            cur[pos] = 0;
        }
        if arity == 0 {
            out.push(MultiIndex(Vec::new()));
        } else {
            rec(0, max, &mut cur, &mut out);
        }
        out.sort();
        out.dedup();
        out
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total()
            .cmp(&other.total())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_and_factorial() {
        let a = MultiIndex::new(vec![2, 0, 3]);
        assert_eq!(a.total(), 5);
        assert_eq!(a.factorial(), BigInt::from(12));
        assert_eq!(MultiIndex::zero(3).factorial(), BigInt::one());
    }

    #[test]
    fn partial_order_is_elementwise() {
        let a = MultiIndex::new(vec![1, 2]);
        let b = MultiIndex::new(vec![2, 2]);
        let c = MultiIndex::new(vec![0, 3]);
        assert!(a.le(&b));
        assert!(!b.le(&a));
        assert!(!a.le(&c) && !c.le(&a));
    }

    #[test]
    fn graded_lex_ordering() {
        let mut v = vec![
            MultiIndex::new(vec![0, 2]),
            MultiIndex::new(vec![1, 0]),
            MultiIndex::new(vec![2, 0]),
            MultiIndex::new(vec![1, 1]),
        ];
        v.sort();
        assert_eq!(
            v,
            vec![
                MultiIndex::new(vec![1, 0]),
                MultiIndex::new(vec![0, 2]),
                MultiIndex::new(vec![1, 1]),
                MultiIndex::new(vec![2, 0]),
            ]
        );
    }

    #[test]
    fn falling_factorial_matches_ratio() {
        let a = MultiIndex::new(vec![3, 2]);
        let b = MultiIndex::new(vec![1, 2]);
        // 3!/2! * 2!/0! = 3 * 2 = 6
        assert_eq!(a.falling_factorial(&b), Some(BigInt::from(6)));
        assert_eq!(b.falling_factorial(&a), None);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(MultiIndex::all_up_to(2, 3).len(), 10);
        assert_eq!(MultiIndex::all_up_to(0, 5).len(), 1);
    }
}
