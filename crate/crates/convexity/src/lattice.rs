//! Graded posets and the lattice of closed sets.
//!
//! [`GradedPoset`] is a finite bounded poset whose every maximal chain has
//! the same length; it carries reachability bit-matrices, Möbius rows, the
//! `ν` functional `ν(P) = Σ_t (−1)^{rk(t)} μ(0̂, t)`, meet-/join-
//! distributivity tests, and zeta polynomials.  [`ClosedSetLattice`] wraps
//! the closed sets of a convex geometry (graded by cardinality) together
//! with their extreme-point sets.

use std::collections::BTreeMap;
use std::fmt;

use num::bigint::BigInt;
use num::{One, Zero};

use crate::bits::BitRow;
use crate::geometry::ConvexGeometry;
use crate::poly::Poly;
use crate::subset::Subset;
use crate::{Error, Result};

/// A finite graded poset with a unique minimum and maximum.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedPoset {
    labels: Vec<String>,
    up_covers: Vec<Vec<usize>>,
    down_covers: Vec<Vec<usize>>,
    /// `above[s]` = all `t` with `s ≤ t` (including `s`).
    above: Vec<BitRow>,
    /// `below[t]` = all `s` with `s ≤ t` (including `t`).
    below: Vec<BitRow>,
    rank: Vec<usize>,
    bottom: usize,
    top: usize,
    /// element indices sorted by rank: a linear extension.
    topo: Vec<usize>,
}

impl GradedPoset {
    /// Builds a graded poset from its cover relation, given as pairs
    /// `(lower, upper)` of indices into `labels`.
    ///
    /// Fails with [`Error::No0Hat`]/[`Error::No1Hat`] when the minimum or
    /// maximum is not unique, [`Error::InvalidPoset`] on a cycle, and
    /// [`Error::NotGraded`] when some cover jumps more than one rank level.
    pub fn from_covers(labels: Vec<String>, covers: &[(usize, usize)]) -> Result<GradedPoset> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::InvalidPoset("empty poset".into()));
        }
        let mut up_covers = vec![vec![]; n];
        let mut down_covers = vec![vec![]; n];
        for &(lo, hi) in covers {
            if lo >= n || hi >= n || lo == hi {
                return Err(Error::InvalidPoset(format!("bad cover pair ({lo}, {hi})")));
            }
            if !up_covers[lo].contains(&hi) {
                up_covers[lo].push(hi);
                down_covers[hi].push(lo);
            }
        }
        for list in up_covers.iter_mut().chain(down_covers.iter_mut()) {
            list.sort_unstable();
        }

        // Kahn's algorithm: topological order and cycle detection.
        let mut indeg: Vec<usize> = down_covers.iter().map(Vec::len).collect();
        let mut queue: Vec<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
        let mut order = vec![];
        while let Some(v) = queue.pop() {
            order.push(v);
            for &w in &up_covers[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    queue.push(w);
                }
            }
        }
        if order.len() != n {
            return Err(Error::InvalidPoset("cover relation has a cycle".into()));
        }

        let minimals: Vec<usize> = (0..n).filter(|&i| down_covers[i].is_empty()).collect();
        let maximals: Vec<usize> = (0..n).filter(|&i| up_covers[i].is_empty()).collect();
        let [bottom] = minimals[..] else {
            return Err(Error::No0Hat);
        };
        let [top] = maximals[..] else {
            return Err(Error::No1Hat);
        };

        // longest-path ranks; gradedness = every cover climbs exactly one
        let mut rank = vec![0usize; n];
        for &v in &order {
            for &w in &up_covers[v] {
                rank[w] = rank[w].max(rank[v] + 1);
            }
        }
        for v in 0..n {
            for &w in &up_covers[v] {
                if rank[w] != rank[v] + 1 {
                    return Err(Error::NotGraded(format!(
                        "cover {} < {} spans ranks {} and {}",
                        labels[v], labels[w], rank[v], rank[w]
                    )));
                }
            }
        }

        let mut topo: Vec<usize> = (0..n).collect();
        topo.sort_by_key(|&i| (rank[i], i));

        let mut above = vec![BitRow::new(n); n];
        for &v in topo.iter().rev() {
            above[v].set(v);
            for wi in 0..up_covers[v].len() {
                let w = up_covers[v][wi];
                let row = above[w].clone();
                above[v].or_assign(&row);
            }
        }
        let mut below = vec![BitRow::new(n); n];
        for &v in &topo {
            below[v].set(v);
            for wi in 0..down_covers[v].len() {
                let w = down_covers[v][wi];
                let row = below[w].clone();
                below[v].or_assign(&row);
            }
        }

        Ok(GradedPoset {
            labels,
            up_covers,
            down_covers,
            above,
            below,
            rank,
            bottom,
            top,
            topo,
        })
    }

    /// Builds a graded poset from arbitrary strict relations `(lower, upper)`
    /// by transitive closure followed by transitive reduction.
    pub fn from_relations(
        labels: Vec<String>,
        relations: &[(usize, usize)],
    ) -> Result<GradedPoset> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::InvalidPoset("empty poset".into()));
        }
        let mut reach = vec![BitRow::new(n); n];
        for (i, row) in reach.iter_mut().enumerate() {
            row.set(i);
        }
        for &(lo, hi) in relations {
            if lo >= n || hi >= n {
                return Err(Error::InvalidPoset(format!(
                    "bad relation pair ({lo}, {hi})"
                )));
            }
            if lo != hi {
                reach[lo].set(hi);
            }
        }
        for k in 0..n {
            for i in 0..n {
                if reach[i].get(k) {
                    let row = reach[k].clone();
                    reach[i].or_assign(&row);
                }
            }
        }
        for i in 0..n {
            for j in reach[i].ones() {
                if j != i && reach[j].get(i) {
                    return Err(Error::InvalidPoset(format!(
                        "relation has a cycle through {} and {}",
                        labels[i], labels[j]
                    )));
                }
            }
        }
        // transitive reduction: (i, j) is a cover iff no k strictly between
        let mut covers = vec![];
        for i in 0..n {
            'next: for j in reach[i].ones() {
                if j == i {
                    continue;
                }
                for k in reach[i].ones() {
                    if k != i && k != j && reach[k].get(j) {
                        continue 'next;
                    }
                }
                covers.push((i, j));
            }
        }
        GradedPoset::from_covers(labels, &covers)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn rank(&self, i: usize) -> usize {
        self.rank[i]
    }

    /// The rank of the maximum, i.e. the common length of maximal chains.
    pub fn height(&self) -> usize {
        self.rank[self.top]
    }

    pub fn leq(&self, s: usize, t: usize) -> bool {
        self.above[s].get(t)
    }

    pub fn lt(&self, s: usize, t: usize) -> bool {
        s != t && self.leq(s, t)
    }

    pub fn up_covers(&self, i: usize) -> &[usize] {
        &self.up_covers[i]
    }

    pub fn down_covers(&self, i: usize) -> &[usize] {
        &self.down_covers[i]
    }

    /// All cover pairs `(lower, upper)`, lexicographic.
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = vec![];
        for (lo, ups) in self.up_covers.iter().enumerate() {
            for &hi in ups {
                out.push((lo, hi));
            }
        }
        out
    }

    /// A linear extension: element indices sorted by rank.
    pub fn topo(&self) -> &[usize] {
        &self.topo
    }

    pub fn elements_of_rank(&self, r: usize) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.rank[i] == r).collect()
    }

    /// Number of elements of each rank, indexed `0 ..= height`.
    pub fn rank_counts(&self) -> Vec<usize> {
        let mut counts = vec![0usize; self.height() + 1];
        for &r in &self.rank {
            counts[r] += 1;
        }
        counts
    }

    /// The order-reversed poset, with the same labels and indices.
    pub fn dual(&self) -> GradedPoset {
        let covers: Vec<(usize, usize)> = self
            .cover_pairs()
            .into_iter()
            .map(|(lo, hi)| (hi, lo))
            .collect();
        GradedPoset::from_covers(self.labels.clone(), &covers)
            .expect("the dual of a graded poset is graded")
    }

    /// Elements of the closed interval `[s, t]`, ascending by rank.
    pub fn interval_elements(&self, s: usize, t: usize) -> Result<Vec<usize>> {
        if !self.leq(s, t) {
            return Err(Error::NotComparable);
        }
        let both = self.above[s].and(&self.below[t]);
        let mut elems: Vec<usize> = both.ones().collect();
        elems.sort_by_key(|&i| (self.rank[i], i));
        Ok(elems)
    }

    /// The closed interval `[s, t]` as its own graded poset, together with
    /// the map from interval indices back to indices of `self`.
    pub fn interval(&self, s: usize, t: usize) -> Result<(GradedPoset, Vec<usize>)> {
        let elems = self.interval_elements(s, t)?;
        let mut index: BTreeMap<usize, usize> = BTreeMap::new();
        for (k, &e) in elems.iter().enumerate() {
            index.insert(e, k);
        }
        let labels: Vec<String> = elems.iter().map(|&e| self.labels[e].clone()).collect();
        let mut covers = vec![];
        for (k, &e) in elems.iter().enumerate() {
            for &w in &self.up_covers[e] {
                if let Some(&kw) = index.get(&w) {
                    covers.push((k, kw));
                }
            }
        }
        Ok((GradedPoset::from_covers(labels, &covers)?, elems))
    }

    /// All maximal chains from the minimum to the maximum, each as a list of
    /// element indices; deterministic (depth-first over sorted covers).
    pub fn maximal_chains(&self) -> Vec<Vec<usize>> {
        let mut out = vec![];
        let mut stack = vec![self.bottom];
        self.chains_rec(&mut stack, &mut out);
        out
    }

    fn chains_rec(&self, stack: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let last = *stack.last().unwrap();
        if last == self.top {
            out.push(stack.clone());
            return;
        }
        for &w in &self.up_covers[last] {
            stack.push(w);
            self.chains_rec(stack, out);
            stack.pop();
        }
    }

    /// The number of maximal chains, by dynamic programming.
    pub fn count_maximal_chains(&self) -> BigInt {
        let mut ways = vec![BigInt::zero(); self.len()];
        ways[self.bottom] = BigInt::one();
        for &v in &self.topo {
            if ways[v].is_zero() {
                continue;
            }
            let base = ways[v].clone();
            for &w in &self.up_covers[v] {
                ways[w] += &base;
            }
        }
        ways[self.top].clone()
    }

    /// The Möbius row `t ↦ μ(s, t)`, zero off `{t : s ≤ t}`.
    pub fn mobius_row(&self, s: usize) -> Vec<BigInt> {
        let mut row = vec![BigInt::zero(); self.len()];
        row[s] = BigInt::one();
        for &t in &self.topo {
            if t == s || !self.leq(s, t) {
                continue;
            }
            let strictly_under = self.above[s].and(&self.below[t]);
            let mut sum = BigInt::zero();
            for u in strictly_under.ones() {
                if u != t {
                    sum += &row[u];
                }
            }
            row[t] = -sum;
        }
        row
    }

    /// `μ(s, t)`; errors with [`Error::NotComparable`] unless `s ≤ t`.
    pub fn mobius(&self, s: usize, t: usize) -> Result<BigInt> {
        if !self.leq(s, t) {
            return Err(Error::NotComparable);
        }
        Ok(self.mobius_row(s)[t].clone())
    }

    /// `ν(P) = Σ_{t ∈ P} (−1)^{rk(t)} μ(0̂, t)`.
    pub fn nu(&self) -> BigInt {
        let row = self.mobius_row(self.bottom);
        let mut sum = BigInt::zero();
        for (t, mu) in row.iter().enumerate() {
            if self.rank[t] % 2 == 0 {
                sum += mu;
            } else {
                sum -= mu;
            }
        }
        sum
    }

    /// `ν` of the closed interval `[s, t]`.
    pub fn nu_interval(&self, s: usize, t: usize) -> Result<BigInt> {
        if !self.leq(s, t) {
            return Err(Error::NotComparable);
        }
        let row = self.mobius_row(s);
        let within = self.above[s].and(&self.below[t]);
        let mut sum = BigInt::zero();
        for u in within.ones() {
            if (self.rank[u] - self.rank[s]) % 2 == 0 {
                sum += &row[u];
            } else {
                sum -= &row[u];
            }
        }
        Ok(sum)
    }

    /// Whether `μ(s, t) = (−1)^{rk(t) − rk(s)}` on every interval.
    pub fn is_eulerian(&self) -> bool {
        for s in 0..self.len() {
            let row = self.mobius_row(s);
            for t in self.above[s].ones() {
                let expect = if (self.rank[t] - self.rank[s]) % 2 == 0 {
                    BigInt::one()
                } else {
                    -BigInt::one()
                };
                if row[t] != expect {
                    return false;
                }
            }
        }
        true
    }

    /// The greatest lower bound, if it exists.
    pub fn meet(&self, x: usize, y: usize) -> Result<usize> {
        let common = self.below[x].and(&self.below[y]);
        let best = common
            .ones()
            .max_by_key(|&c| (self.rank[c], c))
            .expect("bottom is always a common lower bound");
        for c in common.ones() {
            if !self.leq(c, best) {
                return Err(Error::NotALattice(format!(
                    "{} and {} have no meet",
                    self.labels[x], self.labels[y]
                )));
            }
        }
        Ok(best)
    }

    /// The least upper bound, if it exists.
    pub fn join(&self, x: usize, y: usize) -> Result<usize> {
        let common = self.above[x].and(&self.above[y]);
        let best = common
            .ones()
            .min_by_key(|&c| (self.rank[c], c))
            .expect("top is always a common upper bound");
        for c in common.ones() {
            if !self.leq(best, c) {
                return Err(Error::NotALattice(format!(
                    "{} and {} have no join",
                    self.labels[x], self.labels[y]
                )));
            }
        }
        Ok(best)
    }

    pub fn is_lattice(&self) -> bool {
        for x in 0..self.len() {
            for y in x + 1..self.len() {
                if self.meet(x, y).is_err() || self.join(x, y).is_err() {
                    return false;
                }
            }
        }
        true
    }

    /// Whether `[m, y]` is a Boolean lattice, where `m` is given and `y`
    /// sits above it.
    fn interval_is_boolean(&self, m: usize, y: usize) -> Result<bool> {
        let r = self.rank[y] - self.rank[m];
        let elems = self.interval_elements(m, y)?;
        if elems.len() != 1usize << r {
            return Ok(false);
        }
        let atoms: Vec<usize> = self.up_covers[m]
            .iter()
            .copied()
            .filter(|&a| self.leq(a, y))
            .collect();
        if atoms.len() != r {
            return Ok(false);
        }
        // joins of atom subsets must exhaust the interval without collision
        let mut seen = std::collections::BTreeSet::new();
        for mask in 0..1u32 << r {
            let mut j = m;
            for (k, &a) in atoms.iter().enumerate() {
                if mask >> k & 1 != 0 {
                    j = self.join(j, a)?;
                }
            }
            if !self.leq(j, y) || !seen.insert(j) {
                return Ok(false);
            }
        }
        Ok(seen.len() == elems.len())
    }

    /// A lattice is meet-distributive when for every element `y` the
    /// interval from the meet of the lower covers of `y` up to `y` is
    /// Boolean.
    pub fn is_meet_distributive(&self) -> Result<bool> {
        for y in 0..self.len() {
            if y == self.bottom {
                continue;
            }
            let mut m = self.down_covers[y][0];
            for &c in &self.down_covers[y][1..] {
                m = self.meet(m, c)?;
            }
            if !self.interval_is_boolean(m, y)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Dual of [`GradedPoset::is_meet_distributive`].
    pub fn is_join_distributive(&self) -> Result<bool> {
        self.dual().is_meet_distributive()
    }

    /// Upper semimodularity via the rank inequality
    /// `rk(x) + rk(y) ≥ rk(x ∧ y) + rk(x ∨ y)`.
    pub fn is_semimodular(&self) -> Result<bool> {
        for x in 0..self.len() {
            for y in x + 1..self.len() {
                let m = self.meet(x, y)?;
                let j = self.join(x, y)?;
                if self.rank[x] + self.rank[y] < self.rank[m] + self.rank[j] {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Elements with exactly one lower cover.
    pub fn join_irreducibles(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.down_covers[i].len() == 1)
            .collect()
    }

    /// `c_j` = number of strict chains `0̂ = t_0 < t_1 < ⋯ < t_j = 1̂`,
    /// for `j = 0 ..= height`.
    pub fn chain_counts(&self) -> Vec<BigInt> {
        self.chain_counts_to(|t| t == self.top)
    }

    fn chain_counts_to(&self, is_end: impl Fn(usize) -> bool) -> Vec<BigInt> {
        let h = self.height();
        let mut ways = vec![vec![BigInt::zero(); h + 1]; self.len()];
        ways[self.bottom][0] = BigInt::one();
        let mut counts = vec![BigInt::zero(); h + 1];
        if is_end(self.bottom) {
            counts[0] = BigInt::one();
        }
        for &t in &self.topo {
            if t == self.bottom {
                continue;
            }
            for s in self.below[t].ones() {
                if s == t {
                    continue;
                }
                for j in 0..h {
                    if !ways[s][j].is_zero() {
                        let add = ways[s][j].clone();
                        ways[t][j + 1] += add;
                    }
                }
            }
            if is_end(t) {
                for j in 0..=h {
                    let add = ways[t][j].clone();
                    counts[j] += add;
                }
            }
        }
        counts
    }

    /// The zeta polynomial: `Z(m)` counts multichains
    /// `0̂ = q_0 ≤ q_1 ≤ ⋯ ≤ q_m = 1̂` for integers `m ≥ 1`.
    pub fn zeta_polynomial(&self) -> Poly {
        let counts = self.chain_counts();
        let mut z = Poly::zero();
        for (j, c) in counts.iter().enumerate() {
            if !c.is_zero() {
                z = z.add(&Poly::binomial_t(j).scale_int(c));
            }
        }
        z
    }

    /// `Z̄(m)` counts multichains `0̂ = q_0 ≤ ⋯ ≤ q_m` ending at a maximal
    /// element of `P \ {1̂}` (a lower cover of the top).
    pub fn zbar_polynomial(&self) -> Poly {
        let counts =
            self.chain_counts_to(|t| t != self.top && self.up_covers[t].contains(&self.top));
        let mut z = Poly::zero();
        for (j, c) in counts.iter().enumerate() {
            if !c.is_zero() {
                z = z.add(&Poly::binomial_t(j).scale_int(c));
            }
        }
        z
    }

    /// Direct multichain count, an independent cross-check of
    /// [`GradedPoset::zeta_polynomial`]: applies the zeta transform `m`
    /// times to the indicator of the minimum and reads off the maximum.
    pub fn count_multichains(&self, m: usize) -> BigInt {
        let mut v = vec![BigInt::zero(); self.len()];
        v[self.bottom] = BigInt::one();
        for _ in 0..m {
            let mut next = vec![BigInt::zero(); self.len()];
            for (t, slot) in next.iter_mut().enumerate() {
                for s in self.below[t].ones() {
                    *slot += &v[s];
                }
            }
            v = next;
        }
        v[self.top].clone()
    }

    /// Number of `k`-element totally ordered subsets of the kept elements,
    /// for `k = 0 ..= height + 1`.  This is the f-vector (shifted by one) of
    /// the order complex on `keep`, computed without expanding faces.
    pub fn chains_by_size(&self, keep: &[bool]) -> Vec<BigInt> {
        assert_eq!(keep.len(), self.len());
        let max_size = self.height() + 2;
        let mut ways = vec![vec![BigInt::zero(); max_size]; self.len()];
        let mut totals = vec![BigInt::zero(); max_size];
        totals[0] = BigInt::one(); // the empty chain
        for &t in &self.topo {
            if !keep[t] {
                continue;
            }
            ways[t][1] = BigInt::one();
            for s in self.below[t].ones() {
                if s == t || !keep[s] {
                    continue;
                }
                for k in 1..max_size - 1 {
                    if !ways[s][k].is_zero() {
                        let add = ways[s][k].clone();
                        ways[t][k + 1] += add;
                    }
                }
            }
            for k in 1..max_size {
                let add = ways[t][k].clone();
                totals[k] += add;
            }
        }
        while totals.len() > 1 && totals.last().map_or(false, Zero::is_zero) {
            totals.pop();
        }
        totals
    }
}

/// The lattice of closed sets of a convex geometry, graded by cardinality,
/// with each closed set's extreme points cached.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClosedSetLattice {
    n_ground: usize,
    sets: Vec<Subset>,
    exts: Vec<Subset>,
    index: BTreeMap<Subset, usize>,
    poset: GradedPoset,
}

impl ClosedSetLattice {
    pub fn from_geometry(g: &ConvexGeometry) -> Result<ClosedSetLattice> {
        let sets = g.closed_set_family();
        let bottom = g.closure(Subset::EMPTY);
        if !bottom.is_empty() {
            return Err(Error::EmptySetNotClosed(bottom));
        }
        let mut index = BTreeMap::new();
        for (i, &s) in sets.iter().enumerate() {
            index.insert(s, i);
        }
        let mut covers = vec![];
        for (i, &a) in sets.iter().enumerate() {
            for (j, &b) in sets.iter().enumerate() {
                if b.card() == a.card() + 1 && a.is_subset_of(b) {
                    covers.push((i, j));
                }
            }
        }
        let labels: Vec<String> = sets.iter().map(Subset::to_string).collect();
        let poset = GradedPoset::from_covers(labels, &covers).map_err(|e| match e {
            Error::No0Hat | Error::No1Hat | Error::NotGraded(_) => Error::InvalidGeometry(
                "closed sets are not graded by cardinality: the one-step \
                 inclusion covers do not form a bounded graded order"
                    .into(),
            ),
            other => other,
        })?;
        // the cardinality-step covers must generate exactly the inclusion
        // order, otherwise the family is not the closed sets of a convex
        // geometry
        for (i, &a) in sets.iter().enumerate() {
            for (j, &b) in sets.iter().enumerate() {
                if poset.leq(i, j) != a.is_subset_of(b) {
                    return Err(Error::InvalidGeometry(format!(
                        "closed sets are not graded by cardinality between {a} and {b}"
                    )));
                }
            }
        }
        for (i, &s) in sets.iter().enumerate() {
            debug_assert_eq!(poset.rank(i), s.card());
        }
        let exts: Vec<Subset> = sets.iter().map(|&s| g.ext(s)).collect();
        Ok(ClosedSetLattice {
            n_ground: g.n(),
            sets,
            exts,
            index,
            poset,
        })
    }

    /// Size of the underlying ground set `[n]`.
    pub fn n_ground(&self) -> usize {
        self.n_ground
    }

    /// Number of closed sets.
    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn set(&self, i: usize) -> Subset {
        self.sets[i]
    }

    pub fn sets(&self) -> &[Subset] {
        &self.sets
    }

    /// Extreme points of the `i`-th closed set.
    pub fn ext(&self, i: usize) -> Subset {
        self.exts[i]
    }

    pub fn index_of(&self, s: Subset) -> Option<usize> {
        self.index.get(&s).copied()
    }

    pub fn poset(&self) -> &GradedPoset {
        &self.poset
    }

    pub fn bottom(&self) -> usize {
        self.poset.bottom()
    }

    pub fn top(&self) -> usize {
        self.poset.top()
    }

    /// The proper part `L \ {0̂}` listed top-down: cardinality descending,
    /// ties by ascending bitmask.  Reversing a linear extension this way
    /// makes every prefix `{A_1, …, A_i}` an up-set of `L \ {0̂}`.
    pub fn reverse_linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).filter(|&i| i != self.bottom()).collect();
        order.sort_by_key(|&i| (std::cmp::Reverse(self.sets[i].card()), self.sets[i].mask()));
        order
    }

    /// Indices of the join-irreducible elements; in a convex geometry these
    /// are exactly the principal closed sets `⟨i⟩`, one per ground element.
    pub fn join_irreducibles(&self) -> Vec<usize> {
        self.poset.join_irreducibles()
    }
}

impl fmt::Display for ClosedSetLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "lattice of {} closed sets on [{}]",
            self.len(),
            self.n_ground
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::geometry::{BasePoset, IdealDirection};

    fn big(i: i64) -> BigInt {
        BigInt::from(i)
    }

    fn ratio(b: BigInt) -> num::BigRational {
        num::BigRational::from_integer(b)
    }

    fn chain_labels(k: usize) -> Vec<String> {
        (0..k).map(|i| format!("c{i}")).collect()
    }

    fn m3() -> GradedPoset {
        GradedPoset::from_covers(
            vec!["0".into(), "a".into(), "b".into(), "c".into(), "1".into()],
            &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)],
        )
        .unwrap()
    }

    #[test]
    fn boolean_lattice_structure() {
        let l = corpus::boolean(3).closed_sets().unwrap();
        assert_eq!(l.len(), 8);
        let p = l.poset();
        assert_eq!(p.height(), 3);
        assert_eq!(p.rank_counts(), vec![1, 3, 3, 1]);
        assert_eq!(p.maximal_chains().len(), 6);
        assert_eq!(p.count_maximal_chains(), big(6));
        // μ(∅, A) = (−1)^|A|
        let row = p.mobius_row(p.bottom());
        for i in 0..l.len() {
            let expect = if l.set(i).card() % 2 == 0 {
                big(1)
            } else {
                big(-1)
            };
            assert_eq!(row[i], expect);
        }
        assert_eq!(p.nu(), big(8));
        assert!(p.is_eulerian());
        assert!(p.is_meet_distributive().unwrap());
        assert!(p.is_join_distributive().unwrap());
        assert!(p.is_semimodular().unwrap());
        assert_eq!(l.join_irreducibles().len(), 3);
    }

    #[test]
    fn three_collinear_lattice() {
        let l = corpus::collinear(3).closed_sets().unwrap();
        assert_eq!(l.len(), 7);
        let p = l.poset();
        assert_eq!(p.nu(), big(6));
        assert!(!p.is_eulerian()); // μ(0̂, 1̂) = 0
        assert_eq!(p.mobius(p.bottom(), p.top()).unwrap(), big(0));
        assert!(p.is_meet_distributive().unwrap());
        assert!(!p.is_join_distributive().unwrap());
        assert!(!p.is_semimodular().unwrap());
        assert!(p.dual().is_semimodular().unwrap());
        assert!(p.dual().is_join_distributive().unwrap());
        // reverse linear extension: {1,2,3}, {1,2}, {2,3}, {1}, {2}, {3}
        let order: Vec<String> = l
            .reverse_linear_extension()
            .iter()
            .map(|&i| l.set(i).to_string())
            .collect();
        assert_eq!(
            order,
            vec!["{1,2,3}", "{1,2}", "{2,3}", "{1}", "{2}", "{3}"]
        );
        // join-irreducibles are the principal sets
        let ji: Vec<Subset> = l.join_irreducibles().iter().map(|&i| l.set(i)).collect();
        assert_eq!(
            ji,
            vec![
                Subset::singleton(1),
                Subset::singleton(2),
                Subset::singleton(3)
            ]
        );
    }

    #[test]
    fn m3_is_a_nondistributive_lattice() {
        let p = m3();
        assert!(p.is_lattice());
        assert!(!p.is_meet_distributive().unwrap());
        assert!(!p.is_join_distributive().unwrap());
        assert!(p.is_semimodular().unwrap());
        assert!(!p.is_eulerian());
        assert_eq!(p.mobius(0, 4).unwrap(), big(2));
        assert_eq!(p.nu(), big(1 + 3 + 2));
    }

    #[test]
    fn pentagon_is_not_graded() {
        let result =
            GradedPoset::from_covers(chain_labels(5), &[(0, 1), (1, 4), (0, 2), (2, 3), (3, 4)]);
        assert!(matches!(result, Err(Error::NotGraded(_))));
    }

    #[test]
    fn bound_uniqueness_is_enforced() {
        let two_min = GradedPoset::from_covers(chain_labels(3), &[(0, 2), (1, 2)]);
        assert!(matches!(two_min, Err(Error::No0Hat)));
        let two_max = GradedPoset::from_covers(chain_labels(3), &[(0, 1), (0, 2)]);
        assert!(matches!(two_max, Err(Error::No1Hat)));
        let cycle = GradedPoset::from_covers(chain_labels(3), &[(0, 1), (1, 2), (2, 0)]);
        assert!(matches!(cycle, Err(Error::InvalidPoset(_))));
    }

    #[test]
    fn from_relations_reduces_transitively() {
        // full order relation of a 4-chain, including redundant pairs
        let p = GradedPoset::from_relations(
            chain_labels(4),
            &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
        )
        .unwrap();
        assert_eq!(p.cover_pairs(), vec![(0, 1), (1, 2), (2, 3)]);
        assert_eq!(p.height(), 3);
    }

    #[test]
    fn interval_and_dual() {
        let l = corpus::boolean(4).closed_sets().unwrap();
        let p = l.poset();
        let s = l.index_of(Subset::singleton(2)).unwrap();
        let t = l.index_of(Subset::from_elems([1, 2, 4]).unwrap()).unwrap();
        let (iv, elems) = p.interval(s, t).unwrap();
        assert_eq!(iv.len(), 4);
        assert_eq!(iv.height(), 2);
        assert_eq!(elems.len(), 4);
        assert!(iv.is_eulerian());
        let d = p.dual();
        assert_eq!(d.rank(d.bottom()), 0);
        assert_eq!(d.bottom(), p.top());
        assert_eq!(d.dual(), *p);
        assert!(matches!(p.interval(t, s), Err(Error::NotComparable)));
    }

    #[test]
    fn zeta_of_diamond_is_m_squared() {
        // single point: L = {∅, {1}}; the signed poset on it is the diamond
        let p = GradedPoset::from_covers(
            vec!["0".into(), "+".into(), "-".into(), "1".into()],
            &[(0, 1), (0, 2), (1, 3), (2, 3)],
        )
        .unwrap();
        let z = p.zeta_polynomial();
        assert_eq!(z, Poly::from_int_coeffs(&[0, 0, 1]));
        for m in 0..6 {
            assert_eq!(z.eval_int(m), ratio(p.count_multichains(m as usize)));
        }
    }

    #[test]
    fn zeta_of_square_face_lattice() {
        // 0̂, four vertices, four edges, 1̂: Z(t) = (4t³ − t)/3
        let mut covers = vec![];
        // vertices 1..=4 in a cycle, edges 5..=8; edge 4+i joins i and i+1
        for i in 0..4 {
            covers.push((0usize, 1 + i));
            covers.push((1 + i, 5 + i));
            covers.push((1 + (i + 1) % 4, 5 + i));
            covers.push((5 + i, 9));
        }
        let p = GradedPoset::from_covers(chain_labels(10), &covers).unwrap();
        let z = p.zeta_polynomial();
        let third = num::BigRational::new(BigInt::one(), BigInt::from(3));
        let expect = Poly::from_int_coeffs(&[0, -1, 0, 4]).scale(&third);
        assert_eq!(z, expect);
        for m in 0..6 {
            assert_eq!(z.eval_int(m), ratio(p.count_multichains(m as usize)));
        }
        assert!(p.is_eulerian());
        // self-reciprocity of an Eulerian face lattice: Z(−t) = −Z(t)
        assert_eq!(z.compose_neg(), z.neg());
    }

    #[test]
    fn zbar_counts_multichains_into_coatoms() {
        let l = corpus::collinear(3).closed_sets().unwrap();
        let p = l.poset();
        let zbar = p.zbar_polynomial();
        for m in 1..6u32 {
            // direct count: multichains ∅ = A_0 ⊆ ⋯ ⊆ A_m with A_m a coatom
            let mut count = BigInt::zero();
            for &q in p.down_covers(p.top()) {
                let (iv, _) = p.interval(p.bottom(), q).unwrap();
                count += iv.count_multichains(m as usize);
            }
            assert_eq!(zbar.eval_int(m.into()), ratio(count));
        }
    }

    #[test]
    fn zeta_matches_multichains_on_corpus() {
        for g in corpus::small_sample() {
            let l = g.closed_sets().unwrap();
            let z = l.poset().zeta_polynomial();
            for m in 0..5 {
                assert_eq!(
                    z.eval_int(m),
                    ratio(l.poset().count_multichains(m as usize)),
                    "zeta mismatch at m = {m} for {l}"
                );
            }
        }
    }

    #[test]
    fn chains_by_size_matches_maximal_chain_expansion() {
        let l = corpus::boolean(3).closed_sets().unwrap();
        let p = l.poset();
        let keep: Vec<bool> = (0..p.len()).map(|i| i != p.bottom()).collect();
        let counts = p.chains_by_size(&keep);
        // Δ(B_3 \ {∅}) has 7 vertices; count chains by brute force
        let mut brute = vec![0usize; counts.len()];
        let subsets: Vec<Subset> = (1..8u32).map(Subset::from_mask).collect();
        for mask in 0..1u32 << 7 {
            let chosen: Vec<Subset> = (0..7)
                .filter(|&i| mask >> i & 1 != 0)
                .map(|i| subsets[i])
                .collect();
            let is_chain = chosen
                .windows(2)
                .all(|w| w[0].is_subset_of(w[1]) || w[1].is_subset_of(w[0]));
            let pairwise = chosen.iter().enumerate().all(|(i, &a)| {
                chosen[i + 1..]
                    .iter()
                    .all(|&b| a.is_subset_of(b) || b.is_subset_of(a))
            });
            if is_chain && pairwise {
                brute[chosen.len()] += 1;
            }
        }
        for (k, c) in counts.iter().enumerate() {
            assert_eq!(*c, big(brute[k] as i64), "size {k}");
        }
    }

    #[test]
    fn graded_by_cardinality_is_required() {
        use crate::geometry::ConvexGeometry;
        let fam = vec![Subset::EMPTY, Subset::singleton(3), Subset::full(3)];
        let g = ConvexGeometry::explicit_family(3, fam).unwrap();
        assert!(matches!(g.closed_sets(), Err(Error::InvalidGeometry(_))));
    }

    #[test]
    fn join_irreducible_count_equals_ground_size() {
        for g in corpus::small_sample() {
            let l = g.closed_sets().unwrap();
            assert_eq!(l.join_irreducibles().len(), g.n());
        }
    }

    #[test]
    fn ideal_lattices_are_distributive_both_ways() {
        for dir in [IdealDirection::Lower, IdealDirection::Upper] {
            let g = crate::geometry::ConvexGeometry::poset_ideal(
                BasePoset::new(4, &[(1, 2), (1, 3), (2, 4), (3, 4)]).unwrap(),
                dir,
            )
            .unwrap();
            let p = g.closed_sets().unwrap();
            assert!(p.poset().is_meet_distributive().unwrap());
            assert!(p.poset().is_join_distributive().unwrap());
        }
    }

    #[test]
    fn meet_distributive_on_corpus_lattices() {
        for g in corpus::small_sample() {
            let l = g.closed_sets().unwrap();
            assert!(
                l.poset().is_meet_distributive().unwrap(),
                "closed sets of a convex geometry must be meet-distributive: {l}"
            );
        }
    }

    #[test]
    fn single_point_lattice() {
        let l = corpus::boolean(1).closed_sets().unwrap();
        let p = l.poset();
        assert_eq!(p.len(), 2);
        assert_eq!(p.zeta_polynomial(), Poly::binomial_t(1));
        assert_eq!(p.nu(), big(2));
        assert!(p.is_eulerian());
    }
}
