//! Bitmask subsets of the ground set `[n] = {1, …, n}`.

use std::fmt;

use crate::{Error, Result};

/// Hard cap on the ground-set size; everything fits in a `u32` mask.
pub const MAX_GROUND_SET: usize = 20;

/// A subset of `[n]`.  Element `i` (1-based) occupies bit `i - 1`.
///
/// The canonical order used throughout the crate sorts first by cardinality,
/// then by mask value, so `{}` < `{1}` < `{2}` < … < `{1,2}` < `{1,3}` < ….
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Subset(u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn full(n: usize) -> Subset {
        debug_assert!(n <= MAX_GROUND_SET);
        Subset(((1u64 << n) - 1) as u32)
    }

    pub fn singleton(i: usize) -> Subset {
        debug_assert!((1..=MAX_GROUND_SET).contains(&i));
        Subset(1 << (i - 1))
    }

    pub fn from_mask(mask: u32) -> Subset {
        Subset(mask)
    }

    /// Builds a subset from 1-based elements, rejecting out-of-range entries.
    pub fn from_elems<I: IntoIterator<Item = usize>>(elems: I) -> Result<Subset> {
        let mut mask = 0u32;
        for e in elems {
            if e == 0 || e > MAX_GROUND_SET {
                return Err(Error::Parse(format!(
                    "element {e} is outside 1..={MAX_GROUND_SET}"
                )));
            }
            mask |= 1 << (e - 1);
        }
        Ok(Subset(mask))
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn card(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        i >= 1 && i <= MAX_GROUND_SET && self.0 & (1 << (i - 1)) != 0
    }

    pub fn with(self, i: usize) -> Subset {
        Subset(self.0 | Subset::singleton(i).0)
    }

    pub fn without(self, i: usize) -> Subset {
        Subset(self.0 & !Subset::singleton(i).0)
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn inter(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn minus(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    pub fn complement(self, n: usize) -> Subset {
        Subset(!self.0 & Subset::full(n).0)
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset_of(self, other: Subset) -> bool {
        self != other && self.is_subset_of(other)
    }

    /// 1-based elements in increasing order.
    pub fn elems(self) -> impl Iterator<Item = usize> {
        let mut mask = self.0;
        std::iter::from_fn(move || {
            if mask == 0 {
                None
            } else {
                let i = mask.trailing_zeros() as usize + 1;
                mask &= mask - 1;
                Some(i)
            }
        })
    }

    /// All subsets of `self`, in increasing mask order (not canonical order).
    pub fn submasks(self) -> impl Iterator<Item = Subset> {
        let m = self.0;
        let mut cur = 0u32;
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let out = Subset(cur);
            if cur == m {
                done = true;
            } else {
                cur = (cur.wrapping_sub(m)) & m;
            }
            Some(out)
        })
    }

    /// Every subset of `[n]` in canonical (cardinality, mask) order.
    pub fn all(n: usize) -> Vec<Subset> {
        let mut v: Vec<Subset> = (0..1u32 << n).map(Subset).collect();
        v.sort();
        v
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.0.count_ones(), self.0).cmp(&(other.0.count_ones(), other.0))
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, e) in self.elems().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order_sorts_by_cardinality_then_mask() {
        let all = Subset::all(3);
        let shown: Vec<String> = all.iter().map(|s| s.to_string()).collect();
        assert_eq!(
            shown,
            vec!["{}", "{1}", "{2}", "{3}", "{1,2}", "{1,3}", "{2,3}", "{1,2,3}"]
        );
    }

    #[test]
    fn set_operations() {
        let a = Subset::from_elems([1, 3]).unwrap();
        let b = Subset::from_elems([3, 4]).unwrap();
        assert_eq!(a.union(b), Subset::from_elems([1, 3, 4]).unwrap());
        assert_eq!(a.inter(b), Subset::singleton(3));
        assert_eq!(a.minus(b), Subset::singleton(1));
        assert_eq!(a.complement(4), Subset::from_elems([2, 4]).unwrap());
        assert!(a.inter(b).is_subset_of(a));
        assert!(!a.is_subset_of(b));
        assert_eq!(a.card(), 2);
        assert_eq!(a.elems().collect::<Vec<_>>(), vec![1, 3]);
    }

    #[test]
    fn submask_enumeration_is_complete() {
        let s = Subset::from_elems([2, 3, 5]).unwrap();
        let subs: Vec<Subset> = s.submasks().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|t| t.is_subset_of(s)));
        let uniq: std::collections::BTreeSet<_> = subs.iter().copied().collect();
        assert_eq!(uniq.len(), 8);
    }

    #[test]
    fn out_of_range_elements_are_rejected() {
        assert!(Subset::from_elems([0]).is_err());
        assert!(Subset::from_elems([21]).is_err());
    }
}
