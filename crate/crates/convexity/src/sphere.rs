//! The reflected complex `±Δ` and the signed face poset `Q`.
//!
//! Reflecting the order complex `Δ(L \ {0̂})` into all `2^n` sign patterns
//! triangulates the boundary of the `n`-dimensional crosspolytope.  The
//! signed poset `Q` — equivalence classes `(A, ε)` of nonempty closed sets
//! with a sign map on `ext(A)`, plus a bottom `(∅, ∅)` and a formal top —
//! is the face poset of the cell decomposition whose barycentric
//! subdivision is `±Δ`.

use std::collections::BTreeMap;
use std::fmt;

use num::bigint::BigInt;
use num::{One, Zero};

use crate::complex::{order_complex, SimplicialComplex};
use crate::geometry::ConvexGeometry;
use crate::lattice::{ClosedSetLattice, GradedPoset};
use crate::subset::Subset;
use crate::{Error, Result};

/// A vertex of `±Δ`: a nonempty closed set with a sign for each of its
/// extreme points (`neg` lists the negative ones).  Two signed elements are
/// equal when their sets and their signs-on-extreme-points agree; the cached
/// `ext` field never participates in comparisons.
#[derive(Clone, Debug)]
pub struct SignedElement {
    set: Subset,
    ext: Subset,
    neg: Subset,
}

impl SignedElement {
    /// `neg` may mention non-extreme points; only its trace on `ext`
    /// matters and is stored.
    pub fn new(set: Subset, ext: Subset, neg: Subset) -> SignedElement {
        SignedElement {
            set,
            ext,
            neg: neg.inter(ext),
        }
    }

    pub fn set(&self) -> Subset {
        self.set
    }

    pub fn ext(&self) -> Subset {
        self.ext
    }

    /// The extreme points carrying a minus sign.
    pub fn neg(&self) -> Subset {
        self.neg
    }

    /// `+1` or `−1` for extreme points, `None` off `ext`.
    pub fn sign(&self, i: usize) -> Option<i8> {
        if !self.ext.contains(i) {
            None
        } else if self.neg.contains(i) {
            Some(-1)
        } else {
            Some(1)
        }
    }

    /// Signs agree wherever both are defined.
    pub fn compatible(&self, other: &SignedElement) -> bool {
        let common = self.ext.inter(other.ext);
        self.neg.inter(common) == other.neg.inter(common)
    }

    /// `self ≤ other` in the signed poset.
    pub fn leq(&self, other: &SignedElement) -> bool {
        self.set.is_subset_of(other.set) && self.compatible(other)
    }
}

impl PartialEq for SignedElement {
    fn eq(&self, other: &Self) -> bool {
        self.set == other.set && self.neg == other.neg
    }
}
impl Eq for SignedElement {}

impl PartialOrd for SignedElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for SignedElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.set, self.neg).cmp(&(other.set, other.neg))
    }
}

impl std::hash::Hash for SignedElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        (self.set, self.neg).hash(state);
    }
}

impl fmt::Display for SignedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[", self.set)?;
        for (k, i) in self.ext.elems().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}{i}", if self.neg.contains(i) { "-" } else { "+" })?;
        }
        write!(f, "]")
    }
}

/// An element of `Q`: the bottom class `(∅, ∅)`, a proper signed element,
/// or the formal top.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum QNode {
    Bottom,
    Proper(SignedElement),
    Top,
}

impl fmt::Display for QNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QNode::Bottom => write!(f, "0"),
            QNode::Proper(s) => write!(f, "{s}"),
            QNode::Top => write!(f, "1"),
        }
    }
}

/// The signed face poset `Q` of a convex geometry, in the meet orientation:
/// the bottom `(∅, ∅)` has rank 0, a proper element `(A, ε)` has rank
/// `|A|`, and the formal top has rank `n + 1`.
#[derive(Clone, Debug)]
pub struct QPoset {
    n: usize,
    nodes: Vec<QNode>,
    index: BTreeMap<(Subset, Subset), usize>,
    poset: GradedPoset,
    lattice: ClosedSetLattice,
}

impl QPoset {
    pub fn new(g: &ConvexGeometry) -> Result<QPoset> {
        QPoset::from_lattice(g.closed_sets()?)
    }

    pub fn from_lattice(lattice: ClosedSetLattice) -> Result<QPoset> {
        let n = lattice.n_ground();
        let mut nodes = vec![QNode::Bottom];
        for i in 0..lattice.len() {
            let a = lattice.set(i);
            if a.is_empty() {
                continue;
            }
            let ext = lattice.ext(i);
            for neg in ext.submasks() {
                nodes.push(QNode::Proper(SignedElement::new(a, ext, neg)));
            }
        }
        nodes.push(QNode::Top);
        let top = nodes.len() - 1;
        let mut relations = vec![];
        for (i, node) in nodes.iter().enumerate() {
            match node {
                QNode::Bottom => {
                    for j in 1..nodes.len() {
                        relations.push((i, j));
                    }
                }
                QNode::Top => {}
                QNode::Proper(s) => {
                    relations.push((i, top));
                    for (j, other) in nodes.iter().enumerate() {
                        if let QNode::Proper(t) = other {
                            if i != j && s.leq(t) {
                                relations.push((i, j));
                            }
                        }
                    }
                }
            }
        }
        let labels: Vec<String> = nodes.iter().map(QNode::to_string).collect();
        let poset = GradedPoset::from_relations(labels, &relations)?;
        for (i, node) in nodes.iter().enumerate() {
            let expect = match node {
                QNode::Bottom => 0,
                QNode::Proper(s) => s.set().card(),
                QNode::Top => n + 1,
            };
            if poset.rank(i) != expect {
                return Err(Error::NotGraded(format!(
                    "signed poset rank {} ≠ |A| = {expect} at {node}",
                    poset.rank(i)
                )));
            }
        }
        let index = nodes
            .iter()
            .enumerate()
            .filter_map(|(i, node)| match node {
                QNode::Proper(s) => Some(((s.set(), s.neg()), i)),
                _ => None,
            })
            .collect();
        Ok(QPoset {
            n,
            nodes,
            index,
            poset,
            lattice,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn poset(&self) -> &GradedPoset {
        &self.poset
    }

    pub fn lattice(&self) -> &ClosedSetLattice {
        &self.lattice
    }

    pub fn node(&self, i: usize) -> &QNode {
        &self.nodes[i]
    }

    pub fn nodes(&self) -> &[QNode] {
        &self.nodes
    }

    pub fn bottom(&self) -> usize {
        self.poset.bottom()
    }

    pub fn top(&self) -> usize {
        self.poset.top()
    }

    pub fn index_of(&self, node: &QNode) -> Option<usize> {
        match node {
            QNode::Bottom => Some(self.poset.bottom()),
            QNode::Top => Some(self.poset.top()),
            QNode::Proper(s) => self.index.get(&(s.set(), s.neg())).copied(),
        }
    }

    /// The underlying-set map: `z((A, ε)) = A`, with the bottom mapped to
    /// `∅` and the formal top to nothing.
    pub fn z(&self, i: usize) -> Option<Subset> {
        match &self.nodes[i] {
            QNode::Bottom => Some(Subset::EMPTY),
            QNode::Proper(s) => Some(s.set()),
            QNode::Top => None,
        }
    }

    pub fn signed(&self, i: usize) -> Option<&SignedElement> {
        match &self.nodes[i] {
            QNode::Proper(s) => Some(s),
            _ => None,
        }
    }

    /// Indices of the proper elements lying over the closed set `a`.
    pub fn elements_with_set(&self, a: Subset) -> Vec<usize> {
        (0..self.nodes.len())
            .filter(|&i| self.signed(i).map_or(false, |s| s.set() == a))
            .collect()
    }

    /// `Q` for the join-distributive dual lattice: the order-reversed poset.
    pub fn join_oriented(&self) -> GradedPoset {
        self.poset.dual()
    }

    /// Whether every interval of `Q` has Möbius function `(−1)^{length}`.
    pub fn is_eulerian(&self) -> bool {
        self.poset.is_eulerian()
    }

    /// Counts the chains of `Q` that the map `z` sends onto the given chain
    /// of closed sets, by dynamic programming over the constructed order.
    ///
    /// The chain must be strictly decreasing under inclusion and end at `∅`
    /// (it is a chain ending at the top of the join-oriented lattice).
    pub fn fiber_count(&self, chain: &[Subset]) -> Result<BigInt> {
        if chain.last() != Some(&Subset::EMPTY) {
            return Err(Error::ChainMustEndAtTop);
        }
        for w in chain.windows(2) {
            if !w[1].is_proper_subset_of(w[0]) {
                return Err(Error::ChainNotInL(format!(
                    "{} does not strictly contain {}",
                    w[0], w[1]
                )));
            }
        }
        for &a in chain {
            if self.lattice.index_of(a).is_none() {
                return Err(Error::ChainNotInL(format!("{a} is not closed")));
            }
        }
        // walk the chain bottom-up through Q, counting sign-compatible lifts
        let mut level: BTreeMap<usize, BigInt> = BTreeMap::new();
        level.insert(self.bottom(), BigInt::one());
        for &a in chain.iter().rev().skip(1) {
            let mut next: BTreeMap<usize, BigInt> = BTreeMap::new();
            for q in self.elements_with_set(a) {
                let mut ways = BigInt::zero();
                for (&p, w) in &level {
                    if self.poset.lt(p, q) {
                        ways += w;
                    }
                }
                if !ways.is_zero() {
                    next.insert(q, ways);
                }
            }
            level = next;
        }
        Ok(level.values().sum())
    }

    /// The same fiber count via the product `∏ ν([A_{i+1}, A_i])` of the
    /// `ν` functional over consecutive intervals of the join-oriented
    /// lattice of closed sets.
    pub fn fiber_count_by_nu(&self, chain: &[Subset]) -> Result<BigInt> {
        if chain.last() != Some(&Subset::EMPTY) {
            return Err(Error::ChainMustEndAtTop);
        }
        let join_lattice = self.lattice.poset().dual();
        let mut product = BigInt::one();
        for w in chain.windows(2) {
            let (hi, lo) = (w[0], w[1]);
            if !lo.is_proper_subset_of(hi) {
                return Err(Error::ChainNotInL(format!(
                    "{hi} does not strictly contain {lo}"
                )));
            }
            let i = self
                .lattice
                .index_of(hi)
                .ok_or_else(|| Error::ChainNotInL(format!("{hi} is not closed")))?;
            let j = self
                .lattice
                .index_of(lo)
                .ok_or_else(|| Error::ChainNotInL(format!("{lo} is not closed")))?;
            // [A_i, A_{i+1}] in the join orientation is [j-above-i] dualized
            product *= join_lattice.nu_interval(i, j)?;
        }
        Ok(product)
    }

    /// `2^{|ext(A_i) \ ext(A_{i+1})|}` accumulated along the chain: the
    /// closed-form value of the fiber count.
    pub fn fiber_count_by_ext(&self, chain: &[Subset]) -> Result<BigInt> {
        let mut product = BigInt::one();
        for w in chain.windows(2) {
            let i = self
                .lattice
                .index_of(w[0])
                .ok_or_else(|| Error::ChainNotInL(format!("{} is not closed", w[0])))?;
            let j = self
                .lattice
                .index_of(w[1])
                .ok_or_else(|| Error::ChainNotInL(format!("{} is not closed", w[1])))?;
            let diff = self.lattice.ext(i).minus(self.lattice.ext(j)).card();
            product *= BigInt::from(1u64 << diff);
        }
        Ok(product)
    }

    /// The closed cell of a proper element `(A, ε)`: all simplices `τ^γ`
    /// where `τ` is a maximal chain of `(∅, A]` and `γ` agrees with `ε` on
    /// `ext(A)`.  Its facet count is
    /// `(maximal chains of (∅, A]) × 2^{|A| − |ext(A)|}`.
    pub fn cell(&self, q: usize, max_facets: usize) -> Result<SimplicialComplex<SignedElement>> {
        let Some(se) = self.signed(q) else {
            return Err(Error::NotProperElement);
        };
        let a = se.set();
        let l = self.lattice.poset();
        let ai = self.lattice.index_of(a).expect("proper sets are closed");
        let (interval, elems) = l.interval(l.bottom(), ai)?;
        let chains = interval.maximal_chains();
        let free = a.minus(se.ext());
        let total = chains.len() * (1usize << free.card());
        if total > max_facets {
            return Err(Error::ResourceLimit(format!(
                "cell of {se} has {total} facets, above the cap of {max_facets}"
            )));
        }
        let mut facets = vec![];
        for chain in &chains {
            for extra in free.submasks() {
                let negatives = se.neg().union(extra);
                let facet: Vec<SignedElement> = chain
                    .iter()
                    .skip(1) // drop ∅
                    .map(|&k| {
                        let b = self.lattice.set(elems[k]);
                        let ext_b = self.lattice.ext(elems[k]);
                        SignedElement::new(b, ext_b, negatives)
                    })
                    .collect();
                facets.push(facet);
            }
        }
        Ok(SimplicialComplex::from_facets(facets))
    }

    /// Proper elements strictly below `q`: the cells forming the boundary
    /// of the cell of `q`.
    pub fn boundary_cells(&self, q: usize) -> Result<Vec<usize>> {
        if self.signed(q).is_none() {
            return Err(Error::NotProperElement);
        }
        Ok((0..self.len())
            .filter(|&p| self.signed(p).is_some() && self.poset.lt(p, q))
            .collect())
    }

    /// Checks that the boundary sphere of the cell of `q` (the link of its
    /// barycenter vertex) is exactly the union of the cells of the elements
    /// below `q`.
    pub fn boundary_matches_cells(&self, q: usize, max_facets: usize) -> Result<bool> {
        let Some(se) = self.signed(q) else {
            return Err(Error::NotProperElement);
        };
        let a = se.set();
        let l = self.lattice.poset();
        let ai = self.lattice.index_of(a).expect("proper sets are closed");
        let (interval, elems) = l.interval(l.bottom(), ai)?;
        // the link of (A, ε): maximal chains of (∅, A) with all sign maps on
        // A that agree with ε on ext(A)
        let free = a.minus(se.ext());
        let mut link_facets = vec![];
        for chain in interval.maximal_chains() {
            for extra in free.submasks() {
                let negatives = se.neg().union(extra);
                let facet: Vec<SignedElement> = chain
                    .iter()
                    .skip(1)
                    .filter(|&&k| elems[k] != ai)
                    .map(|&k| {
                        let b = self.lattice.set(elems[k]);
                        SignedElement::new(b, self.lattice.ext(elems[k]), negatives)
                    })
                    .collect();
                link_facets.push(facet);
                if link_facets.len() > max_facets {
                    return Err(Error::ResourceLimit(format!(
                        "boundary of cell has more than {max_facets} simplices"
                    )));
                }
            }
        }
        let link = SimplicialComplex::from_facets(link_facets);
        let mut union_facets = vec![];
        for p in self.boundary_cells(q)? {
            let cell = self.cell(p, max_facets)?;
            union_facets.extend(cell.facets().iter().cloned());
            if union_facets.len() > max_facets {
                return Err(Error::ResourceLimit(format!(
                    "boundary union has more than {max_facets} simplices"
                )));
            }
        }
        let union = SimplicialComplex::from_facets(union_facets);
        Ok(link == union)
    }
}

/// The reflected complex `±Δ`: one copy of each maximal chain of
/// `L \ {0̂}` per sign pattern `ε : [n] → {±1}`, with vertices identified
/// along shared sign restrictions.
pub fn reflect(g: &ConvexGeometry, max_facets: usize) -> Result<SimplicialComplex<SignedElement>> {
    let lattice = g.closed_sets()?;
    reflect_of(&lattice, max_facets)
}

pub fn reflect_of(
    lattice: &ClosedSetLattice,
    max_facets: usize,
) -> Result<SimplicialComplex<SignedElement>> {
    let n = lattice.n_ground();
    let p = lattice.poset();
    let chain_count = p.count_maximal_chains();
    let total = chain_count * BigInt::from(1u64 << n);
    if total > BigInt::from(max_facets) {
        return Err(Error::ResourceLimit(format!(
            "reflected complex would have {total} facets, above the cap of {max_facets}"
        )));
    }
    let mut facets = vec![];
    for chain in p.maximal_chains() {
        for negatives in Subset::full(n).submasks() {
            let facet: Vec<SignedElement> = chain
                .iter()
                .skip(1) // drop ∅
                .map(|&k| SignedElement::new(lattice.set(k), lattice.ext(k), negatives))
                .collect();
            facets.push(facet);
        }
    }
    Ok(SimplicialComplex::from_facets(facets))
}

/// The order complex of `Q \ {0̂, 1̂}`, which must coincide with `±Δ`.
pub fn q_order_complex(q: &QPoset, max_facets: usize) -> Result<SimplicialComplex<SignedElement>> {
    let p = q.poset();
    let keep: Vec<bool> = (0..p.len()).map(|i| q.signed(i).is_some()).collect();
    order_complex(
        p,
        &keep,
        |i| q.signed(i).expect("kept elements are proper").clone(),
        max_facets,
    )
}

/// Applies a global sign flip on the coordinates in `mask` to every facet;
/// the reflected complex is invariant under all `2^n` of these.
pub fn flip_complex(
    c: &SimplicialComplex<SignedElement>,
    mask: Subset,
) -> SimplicialComplex<SignedElement> {
    let facets: Vec<Vec<SignedElement>> = c
        .facets()
        .iter()
        .map(|f| {
            f.iter()
                .map(|v| {
                    let flipped = v
                        .neg()
                        .union(mask.inter(v.ext()))
                        .minus(v.neg().inter(mask));
                    SignedElement::new(v.set(), v.ext(), flipped)
                })
                .collect()
        })
        .collect();
    SimplicialComplex::from_facets(facets)
}
