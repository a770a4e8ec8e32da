//! Flag quasisymmetric functions of graded posets.
//!
//! `F_P` records, for every composition `α` of the rank of `P`, the number
//! of chains from bottom to top whose consecutive rank jumps are `α`.  The
//! map `ϑ` replaces each chain's contribution by the product of the `ν`
//! functional over its consecutive closed intervals.  For the lattice of
//! closed sets of a convex geometry, reversed and with a new bottom
//! adjoined, `ϑ` of the flag function equals twice the flag function of the
//! signed poset `Q` in its join orientation.

use std::collections::BTreeMap;
use std::fmt;

use num::bigint::BigInt;
use num::{One, Zero};

use crate::lattice::{ClosedSetLattice, GradedPoset};
use crate::sphere::QPoset;
use crate::{ConvexGeometry, Result};

/// A composition: an ordered tuple of positive parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Composition {
        assert!(parts.iter().all(|&p| p > 0), "parts must be positive");
        Composition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of the parts.
    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// The composition of `n` whose partial sums are the ranks in `s`
    /// (a strictly increasing sequence inside `1..n`).
    pub fn from_rank_set(n: usize, s: &[usize]) -> Composition {
        assert!(n > 0);
        let mut parts = vec![];
        let mut prev = 0;
        for &r in s {
            assert!(r > prev && r < n, "rank set must increase inside 1..n");
            parts.push(r - prev);
            prev = r;
        }
        parts.push(n - prev);
        Composition(parts)
    }

    /// The proper partial sums, inverse to [`Composition::from_rank_set`].
    pub fn rank_set(&self) -> Vec<usize> {
        let mut out = vec![];
        let mut acc = 0;
        for &p in &self.0[..self.0.len() - 1] {
            acc += p;
            out.push(acc);
        }
        out
    }

    /// The reversed composition.
    pub fn reversed(&self) -> Composition {
        let mut parts = self.0.clone();
        parts.reverse();
        Composition(parts)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ".")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// A homogeneous quasisymmetric function in the monomial basis, with
/// integer coefficients indexed by compositions of `degree`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FlagQSym {
    degree: usize,
    coeffs: BTreeMap<Composition, BigInt>,
}

impl FlagQSym {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeff(&self, alpha: &Composition) -> BigInt {
        self.coeffs.get(alpha).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &BTreeMap<Composition, BigInt> {
        &self.coeffs
    }

    pub fn scaled(&self, k: i64) -> FlagQSym {
        FlagQSym {
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .map(|(a, c)| (a.clone(), c * BigInt::from(k)))
                .collect(),
        }
    }

    /// The flag function of a bounded graded poset: the coefficient of the
    /// monomial function `M_α` counts chains with rank jumps `α`.
    pub fn flag_f(p: &GradedPoset) -> FlagQSym {
        flag_with_weight(p, |_, _| BigInt::one())
    }

    /// The image of the flag function under `ϑ`: each chain is weighted by
    /// the product of `ν` over its consecutive closed intervals.
    pub fn theta_of_flag(p: &GradedPoset) -> FlagQSym {
        let mut cache: BTreeMap<(usize, usize), BigInt> = BTreeMap::new();
        let mut weight = |x: usize, y: usize| -> BigInt {
            cache
                .entry((x, y))
                .or_insert_with(|| p.nu_interval(x, y).expect("comparable pair"))
                .clone()
        };
        flag_with_weight(p, &mut weight)
    }

    /// Sets `x_1 = … = x_m = 1` and all other variables to `0`.  For a flag
    /// function this counts bottom-to-top multichains, so it must agree
    /// with the zeta polynomial of the poset at `m`.
    pub fn specialize_ones(&self, m: usize) -> BigInt {
        let mut total = BigInt::zero();
        for (alpha, c) in &self.coeffs {
            total += c * binomial(m, alpha.len());
        }
        total
    }
}

impl fmt::Display for FlagQSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (alpha, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}·M[{alpha}]")?;
        }
        Ok(())
    }
}

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut out = BigInt::one();
    for i in 0..k {
        out = out * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    out
}

/// Chain counts grouped by rank-jump composition, each chain weighted by
/// the product of `w` over consecutive pairs.
fn flag_with_weight<W: FnMut(usize, usize) -> BigInt>(p: &GradedPoset, mut w: W) -> FlagQSym {
    let top_rank = p.rank(p.top());
    assert!(top_rank > 0, "flag functions need a poset of positive rank");
    let mut coeffs: BTreeMap<Composition, BigInt> = BTreeMap::new();
    let proper_ranks: Vec<usize> = (1..top_rank).collect();
    for mask in 0..(1u64 << proper_ranks.len()) {
        let selected: Vec<usize> = proper_ranks
            .iter()
            .copied()
            .filter(|r| mask >> (r - 1) & 1 == 1)
            .collect();
        // DP along the selected ranks, then into the top
        let mut level: Vec<(usize, BigInt)> = vec![(p.bottom(), BigInt::one())];
        for &r in &selected {
            let mut next = vec![];
            for &e in &p.elements_of_rank(r) {
                let mut acc = BigInt::zero();
                for (prev, ways) in &level {
                    if p.lt(*prev, e) {
                        acc += ways * w(*prev, e);
                    }
                }
                if !acc.is_zero() {
                    next.push((e, acc));
                }
            }
            level = next;
        }
        let mut total = BigInt::zero();
        for (prev, ways) in &level {
            if p.lt(*prev, p.top()) {
                total += ways * w(*prev, p.top());
            }
        }
        if !total.is_zero() {
            let alpha = Composition::from_rank_set(top_rank, &selected);
            coeffs.insert(alpha, total);
        }
    }
    FlagQSym {
        degree: top_rank,
        coeffs,
    }
}

/// The lattice of closed sets under reverse inclusion — a join-distributive
/// lattice with `[n]` at the bottom and `∅` at the top — with a new minimum
/// adjoined below `[n]`.  Element `0` is the new minimum and element
/// `i + 1` is the closed set indexed `i` in the input.
pub fn join_lattice_with_bottom(l: &ClosedSetLattice) -> GradedPoset {
    let m = l.len();
    let mut labels = vec!["0".to_string()];
    labels.extend(l.sets().iter().map(|s| s.to_string()));
    let mut relations = vec![];
    for i in 0..m {
        relations.push((0, i + 1));
        for j in 0..m {
            if i != j && l.set(j).is_proper_subset_of(l.set(i)) {
                relations.push((i + 1, j + 1));
            }
        }
    }
    GradedPoset::from_relations(labels, &relations)
        .expect("reverse inclusion with a new bottom is bounded and graded")
}

/// Checks `2·F_Q = ϑ(F_{L ∪ {0̂}})` for the geometry's closed-set lattice,
/// returning the two sides alongside the verdict.
pub fn verify_main_identity(g: &ConvexGeometry) -> Result<(bool, FlagQSym, FlagQSym)> {
    let lattice = g.closed_sets()?;
    let q = QPoset::from_lattice(lattice.clone())?;
    let lhs = FlagQSym::flag_f(&q.join_oriented()).scaled(2);
    let rhs = FlagQSym::theta_of_flag(&join_lattice_with_bottom(&lattice));
    Ok((lhs == rhs, lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use num::BigRational;

    fn comp(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec())
    }

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn composition_rank_set_roundtrip() {
        let a = Composition::from_rank_set(6, &[2, 3]);
        assert_eq!(a.parts(), &[2, 1, 3]);
        assert_eq!(a.rank_set(), vec![2, 3]);
        assert_eq!(a.to_string(), "2.1.3");
        assert_eq!(a.weight(), 6);
        assert_eq!(Composition::from_rank_set(3, &[]).parts(), &[3]);
        assert_eq!(a.reversed().parts(), &[3, 1, 2]);
    }

    #[test]
    fn boolean_three_flag_function() {
        let l = corpus::boolean(3).closed_sets().unwrap();
        let f = FlagQSym::flag_f(l.poset());
        assert_eq!(f.degree(), 3);
        assert_eq!(f.coeff(&comp(&[3])), big(1));
        assert_eq!(f.coeff(&comp(&[1, 2])), big(3));
        assert_eq!(f.coeff(&comp(&[2, 1])), big(3));
        assert_eq!(f.coeff(&comp(&[1, 1, 1])), big(6));
        assert_eq!(f.coeffs().len(), 4);
    }

    #[test]
    fn dual_reverses_compositions() {
        let g = corpus::collinear(3);
        let p = g.closed_sets().unwrap().poset().clone();
        let f = FlagQSym::flag_f(&p);
        let fd = FlagQSym::flag_f(&p.dual());
        for (alpha, c) in f.coeffs() {
            assert_eq!(fd.coeff(&alpha.reversed()), *c);
        }
        assert_eq!(f.coeffs().len(), fd.coeffs().len());
    }

    #[test]
    fn specialization_matches_zeta_polynomial() {
        for g in corpus::small_sample() {
            let p = g.closed_sets().unwrap().poset().clone();
            let f = FlagQSym::flag_f(&p);
            let z = p.zeta_polynomial();
            for m in 0..5usize {
                let via_flag = BigRational::from(f.specialize_ones(m));
                assert_eq!(z.eval_int(m as i64), via_flag, "m = {m}");
            }
        }
    }

    #[test]
    fn new_bottom_interval_has_nu_two() {
        let l = corpus::collinear(3).closed_sets().unwrap();
        let lj = join_lattice_with_bottom(&l);
        assert_eq!(lj.rank(lj.top()), 4);
        for x in 0..lj.len() {
            if x != lj.bottom() {
                assert_eq!(lj.nu_interval(lj.bottom(), x).unwrap(), big(2));
            }
        }
    }

    #[test]
    fn smallest_geometry_identity_by_hand() {
        let g = corpus::collinear(1);
        let (ok, lhs, rhs) = verify_main_identity(&g).unwrap();
        assert!(ok);
        assert_eq!(lhs.coeff(&comp(&[2])), big(2));
        assert_eq!(lhs.coeff(&comp(&[1, 1])), big(4));
        assert_eq!(lhs.coeffs().len(), 2);
        assert_eq!(rhs, lhs);
    }

    #[test]
    fn main_identity_on_small_sample() {
        for g in corpus::small_sample() {
            if g.n() > 4 {
                continue;
            }
            let (ok, lhs, rhs) = verify_main_identity(&g).unwrap();
            assert!(ok, "identity fails for n = {}: {lhs} vs {rhs}", g.n());
        }
    }

    #[test]
    fn flag_function_of_q_counts_signed_chains() {
        let g = corpus::collinear(2);
        let q = QPoset::new(&g).unwrap();
        let f = FlagQSym::flag_f(&q.join_oriented());
        // maximal chains of Q: |maximal chains of L| × 2^n = 2 × 4
        assert_eq!(f.coeff(&comp(&[1, 1, 1])), big(8));
        // the bottom-to-top chain itself
        assert_eq!(f.coeff(&comp(&[3])), big(1));
    }
}
