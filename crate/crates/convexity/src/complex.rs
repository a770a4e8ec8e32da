//! Simplicial complexes, stellar subdivision, and order complexes.
//!
//! A complex is stored by its facets (inclusion-maximal faces), each a
//! sorted vertex list, the whole family deduplicated, dominance-pruned and
//! canonically ordered, so that two complexes are combinatorially identical
//! exactly when they compare equal.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num::bigint::BigInt;
use num::Zero;

use crate::geometry::ConvexGeometry;
use crate::lattice::{ClosedSetLattice, GradedPoset};
use crate::poly::Poly;
use crate::subset::Subset;
use crate::{Error, Result};

/// A finite abstract simplicial complex with vertices of type `V`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SimplicialComplex<V: Ord + Clone> {
    facets: Vec<Vec<V>>,
}

fn is_sorted_subset<V: Ord>(small: &[V], large: &[V]) -> bool {
    let mut it = large.iter();
    'outer: for s in small {
        for l in it.by_ref() {
            match l.cmp(s) {
                std::cmp::Ordering::Less => continue,
                std::cmp::Ordering::Equal => continue 'outer,
                std::cmp::Ordering::Greater => return false,
            }
        }
        return false;
    }
    true
}

impl<V: Ord + Clone> SimplicialComplex<V> {
    /// Builds a complex from a family of faces: faces are sorted, duplicates
    /// and faces dominated by larger ones are dropped.
    pub fn from_facets<I>(faces: I) -> SimplicialComplex<V>
    where
        I: IntoIterator<Item = Vec<V>>,
    {
        let mut unique: BTreeSet<Vec<V>> = BTreeSet::new();
        for mut f in faces {
            f.sort();
            f.dedup();
            unique.insert(f);
        }
        let mut by_size: Vec<Vec<V>> = unique.into_iter().collect();
        by_size.sort_by_key(|f| std::cmp::Reverse(f.len()));
        let mut kept: Vec<Vec<V>> = vec![];
        'cand: for f in by_size {
            for k in &kept {
                if k.len() > f.len() && is_sorted_subset(&f, k) {
                    continue 'cand;
                }
            }
            kept.push(f);
        }
        kept.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        SimplicialComplex { facets: kept }
    }

    /// The facets, each sorted, in canonical order (by size, then
    /// lexicographic).
    pub fn facets(&self) -> &[Vec<V>] {
        &self.facets
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    /// Sorted list of all vertices.
    pub fn vertices(&self) -> Vec<V> {
        let set: BTreeSet<V> = self.facets.iter().flatten().cloned().collect();
        set.into_iter().collect()
    }

    /// Dimension (largest facet size minus one); `None` for the void
    /// complex that has no faces at all.
    pub fn dim(&self) -> Option<i64> {
        self.facets.iter().map(|f| f.len() as i64 - 1).max()
    }

    /// Whether all facets have the same dimension.
    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    pub fn contains_face(&self, face: &[V]) -> bool {
        let mut f: Vec<V> = face.to_vec();
        f.sort();
        f.dedup();
        self.facets.iter().any(|k| is_sorted_subset(&f, k))
    }

    /// Every face (including the empty face), expanded from the facets.
    /// Errors with [`Error::ResourceLimit`] beyond `max_faces`.
    pub fn faces(&self, max_faces: usize) -> Result<BTreeSet<Vec<V>>> {
        let mut out: BTreeSet<Vec<V>> = BTreeSet::new();
        out.insert(vec![]);
        for f in &self.facets {
            let k = f.len();
            for mask in 1u64..1 << k {
                let face: Vec<V> = (0..k)
                    .filter(|i| mask >> i & 1 != 0)
                    .map(|i| f[i].clone())
                    .collect();
                out.insert(face);
                if out.len() > max_faces {
                    return Err(Error::ResourceLimit(format!(
                        "complex has more than {max_faces} faces"
                    )));
                }
            }
        }
        Ok(out)
    }

    /// Face counts by size: entry `s` is the number of faces with `s`
    /// vertices (entry 0 counts the empty face).
    pub fn f_vector(&self, max_faces: usize) -> Result<Vec<BigInt>> {
        let faces = self.faces(max_faces)?;
        let top = faces.iter().map(Vec::len).max().unwrap_or(0);
        let mut f = vec![BigInt::zero(); top + 1];
        for face in &faces {
            f[face.len()] += 1;
        }
        Ok(f)
    }

    /// Euler characteristic `Σ_s (−1)^{s−1} f_s` over nonempty faces.
    pub fn euler_characteristic(&self, max_faces: usize) -> Result<BigInt> {
        let f = self.f_vector(max_faces)?;
        let mut chi = BigInt::zero();
        for (s, c) in f.iter().enumerate().skip(1) {
            if s % 2 == 1 {
                chi += c;
            } else {
                chi -= c;
            }
        }
        Ok(chi)
    }

    /// A pure complex is a closed pseudomanifold when every ridge (codimension-
    /// one face) lies in exactly two facets.
    pub fn is_closed_pseudomanifold(&self) -> bool {
        if !self.is_pure() {
            return false;
        }
        let Some(d) = self.dim() else { return false };
        if d < 0 {
            return false;
        }
        let mut ridge_count: BTreeMap<Vec<V>, usize> = BTreeMap::new();
        for f in &self.facets {
            for drop in 0..f.len() {
                let mut ridge = f.clone();
                ridge.remove(drop);
                *ridge_count.entry(ridge).or_insert(0) += 1;
            }
        }
        ridge_count.values().all(|&c| c == 2)
    }

    /// Stellar subdivision at `face`: facets not containing `face` survive;
    /// each facet `F ⊇ face` is replaced by the facets
    /// `(F \ {x}) ∪ {new_vertex}` for `x ∈ face`.
    pub fn stellar_subdivision(&self, face: &[V], new_vertex: V) -> Result<SimplicialComplex<V>> {
        let mut sigma: Vec<V> = face.to_vec();
        sigma.sort();
        sigma.dedup();
        if sigma.is_empty() || !self.contains_face(&sigma) {
            return Err(Error::FaceNotInComplex);
        }
        if self
            .facets
            .iter()
            .any(|f| f.binary_search(&new_vertex).is_ok())
        {
            // subdividing a single vertex by itself is the identity: allow it
            if !(sigma.len() == 1 && sigma[0] == new_vertex) {
                return Err(Error::VertexCollision);
            }
            return Ok(self.clone());
        }
        let mut out: Vec<Vec<V>> = vec![];
        for f in &self.facets {
            if !is_sorted_subset(&sigma, f) {
                out.push(f.clone());
                continue;
            }
            for x in &sigma {
                let mut g: Vec<V> = f.iter().filter(|v| *v != x).cloned().collect();
                g.push(new_vertex.clone());
                out.push(g);
            }
        }
        Ok(SimplicialComplex::from_facets(out))
    }
}

impl<V: Ord + Clone + fmt::Display> fmt::Display for SimplicialComplex<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "complex with {} facet(s):", self.facets.len())?;
        for facet in &self.facets {
            write!(f, " {{")?;
            for (i, v) in facet.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, "}}")?;
        }
        Ok(())
    }
}

/// The `h`-polynomial `Σ_i f_{i−1} t^i (1−t)^{d−i}` computed from face
/// counts by size (`f[s]` = number of faces with `s` vertices, `f[0] = 1`).
pub fn h_polynomial(f_by_size: &[BigInt]) -> Poly {
    let d = f_by_size.len() - 1;
    let one_minus_t = Poly::from_int_coeffs(&[1, -1]);
    let mut h = Poly::zero();
    for (i, c) in f_by_size.iter().enumerate() {
        let term = Poly::t()
            .pow(i as u32)
            .mul(&one_minus_t.pow((d - i) as u32));
        h = h.add(&term.scale_int(c));
    }
    h
}

/// The `h`-vector as integers; entries `h_0 ..= h_d`.
pub fn h_vector(f_by_size: &[BigInt]) -> Vec<BigInt> {
    let h = h_polynomial(f_by_size);
    let d = f_by_size.len() - 1;
    (0..=d)
        .map(|k| {
            let c = h.coeff(k);
            debug_assert!(c.is_integer());
            c.to_integer()
        })
        .collect()
}

/// The order complex of the elements of `poset` selected by `keep`: faces
/// are chains, facets are the maximal chains of the induced subposet.
pub fn order_complex<V, F>(
    poset: &GradedPoset,
    keep: &[bool],
    vertex: F,
    max_facets: usize,
) -> Result<SimplicialComplex<V>>
where
    V: Ord + Clone,
    F: Fn(usize) -> V,
{
    assert_eq!(keep.len(), poset.len());
    let kept: Vec<usize> = (0..poset.len()).filter(|&i| keep[i]).collect();
    // induced covers: u < v with no kept element strictly between
    let mut succ: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &u in &kept {
        let mut list = vec![];
        'v: for &v in &kept {
            if !poset.lt(u, v) {
                continue;
            }
            for &w in &kept {
                if w != u && w != v && poset.lt(u, w) && poset.lt(w, v) {
                    continue 'v;
                }
            }
            list.push(v);
        }
        succ.insert(u, list);
    }
    let minimal: Vec<usize> = kept
        .iter()
        .copied()
        .filter(|&v| kept.iter().all(|&u| u == v || !poset.lt(u, v)))
        .collect();
    let mut facets: Vec<Vec<V>> = vec![];
    let mut stack: Vec<usize> = vec![];
    fn dfs<V: Ord + Clone>(
        v: usize,
        succ: &BTreeMap<usize, Vec<usize>>,
        stack: &mut Vec<usize>,
        facets: &mut Vec<Vec<V>>,
        vertex: &impl Fn(usize) -> V,
        max_facets: usize,
    ) -> Result<()> {
        stack.push(v);
        let next = &succ[&v];
        if next.is_empty() {
            if facets.len() >= max_facets {
                return Err(Error::ResourceLimit(format!(
                    "order complex has more than {max_facets} facets"
                )));
            }
            facets.push(stack.iter().map(|&u| vertex(u)).collect());
        } else {
            for &w in next {
                dfs(w, succ, stack, facets, vertex, max_facets)?;
            }
        }
        stack.pop();
        Ok(())
    }
    for &v in &minimal {
        dfs(v, &succ, &mut stack, &mut facets, &vertex, max_facets)?;
    }
    Ok(SimplicialComplex::from_facets(facets))
}

/// One step of the subdivision sequence: the closed set handled, its extreme
/// points, whether the step was a redundant (principal) one, and the facet
/// count afterwards.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SubdivisionStep {
    pub set: Subset,
    pub ext: Subset,
    pub principal: bool,
    pub facets_after: usize,
}

/// The full subdivision run: the starting simplex on the principal closed
/// sets, one step per nonempty closed set in reverse linear-extension
/// order, and the resulting complex.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SubdivisionTrace {
    pub initial: SimplicialComplex<Subset>,
    pub steps: Vec<SubdivisionStep>,
    pub final_complex: SimplicialComplex<Subset>,
}

/// Builds the order complex of `L \ {0̂}` by stellar subdivision, starting
/// from the simplex on the principal closed sets `⟨1⟩, …, ⟨n⟩` and
/// subdividing, for each nonempty closed set `A` taken in reverse linear-
/// extension order, the face `{⟨j⟩ : j ∈ ext(A)}` with new vertex `A`.
/// Principal sets are already vertices, so their steps do nothing.
pub fn build_by_subdivision(g: &ConvexGeometry, max_facets: usize) -> Result<SubdivisionTrace> {
    let lattice = g.closed_sets()?;
    build_by_subdivision_of(g, &lattice, max_facets)
}

pub fn build_by_subdivision_of(
    g: &ConvexGeometry,
    lattice: &ClosedSetLattice,
    max_facets: usize,
) -> Result<SubdivisionTrace> {
    let n = g.n();
    let principal: Vec<Subset> = (1..=n).map(|i| g.principal(i)).collect();
    let initial = SimplicialComplex::from_facets([principal.clone()]);
    let mut current = initial.clone();
    let mut steps = vec![];
    for idx in lattice.reverse_linear_extension() {
        let a = lattice.set(idx);
        let ext = lattice.ext(idx);
        let is_principal = ext.card() == 1;
        if !is_principal {
            let face: Vec<Subset> = ext.elems().map(|j| principal[j - 1]).collect();
            current = current.stellar_subdivision(&face, a)?;
            if current.facet_count() > max_facets {
                return Err(Error::ResourceLimit(format!(
                    "subdivision produced more than {max_facets} facets"
                )));
            }
        }
        steps.push(SubdivisionStep {
            set: a,
            ext,
            principal: is_principal,
            facets_after: current.facet_count(),
        });
    }
    Ok(SubdivisionTrace {
        initial,
        steps,
        final_complex: current,
    })
}

/// The order complex of `L \ {0̂}` (or of `L \ {0̂, 1̂}` when `drop_top`),
/// with closed sets as vertices.
pub fn lattice_order_complex(
    lattice: &ClosedSetLattice,
    drop_top: bool,
    max_facets: usize,
) -> Result<SimplicialComplex<Subset>> {
    let p = lattice.poset();
    let keep: Vec<bool> = (0..p.len())
        .map(|i| i != p.bottom() && !(drop_top && i == p.top()))
        .collect();
    order_complex(p, &keep, |i| lattice.set(i), max_facets)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use num::One;

    const CAP: usize = 1_000_000;

    fn set(elems: &[usize]) -> Subset {
        Subset::from_elems(elems.iter().copied()).unwrap()
    }

    #[test]
    fn from_facets_canonicalizes() {
        let c = SimplicialComplex::from_facets(vec![
            vec![3, 2],
            vec![2, 3],
            vec![1, 2, 3],
            vec![1],
            vec![4],
        ]);
        assert_eq!(c.facets(), &[vec![4], vec![1, 2, 3]]);
        assert_eq!(c.dim(), Some(2));
        assert!(!c.is_pure());
        assert_eq!(c.vertices(), vec![1, 2, 3, 4]);
        assert!(c.contains_face(&[3, 1]));
        assert!(!c.contains_face(&[1, 4]));
    }

    #[test]
    fn f_vector_and_euler_of_octahedron() {
        // boundary of the octahedron: vertices ±1, ±2, ±3 as 1..6
        let mut facets = vec![];
        for a in [1, 4] {
            for b in [2, 5] {
                for c in [3, 6] {
                    facets.push(vec![a, b, c]);
                }
            }
        }
        let c = SimplicialComplex::from_facets(facets);
        assert_eq!(
            c.f_vector(CAP).unwrap(),
            vec![
                BigInt::from(1),
                BigInt::from(6),
                BigInt::from(12),
                BigInt::from(8)
            ]
        );
        assert_eq!(c.euler_characteristic(CAP).unwrap(), BigInt::from(2));
        assert!(c.is_closed_pseudomanifold());
        let h = h_vector(&c.f_vector(CAP).unwrap());
        assert_eq!(h, vec![1.into(), 3.into(), 3.into(), 1.into()]);
    }

    #[test]
    fn stellar_subdivision_of_an_edge() {
        let cycle = SimplicialComplex::from_facets(vec![vec![1, 2], vec![2, 3], vec![1, 3]]);
        let sub = cycle.stellar_subdivision(&[1, 2], 4).unwrap();
        assert_eq!(
            sub.facets(),
            &[vec![1, 3], vec![1, 4], vec![2, 3], vec![2, 4]]
        );
        assert_eq!(
            sub.euler_characteristic(CAP).unwrap(),
            cycle.euler_characteristic(CAP).unwrap()
        );
        assert!(matches!(
            cycle.stellar_subdivision(&[1, 2, 3], 9),
            Err(Error::FaceNotInComplex)
        ));
        assert!(matches!(
            cycle.stellar_subdivision(&[1, 2], 3),
            Err(Error::VertexCollision)
        ));
    }

    #[test]
    fn stellar_subdivision_at_vertex_relabels() {
        let c = SimplicialComplex::from_facets(vec![vec![1, 2, 3], vec![2, 3, 4]]);
        let r = c.stellar_subdivision(&[2], 9).unwrap();
        assert_eq!(r.facets(), &[vec![1, 3, 9], vec![3, 4, 9]]);
    }

    #[test]
    fn order_complex_of_boolean_lattice_minus_bottom() {
        let l = corpus::boolean(3).closed_sets().unwrap();
        let c = lattice_order_complex(&l, false, CAP).unwrap();
        assert_eq!(c.facet_count(), 6); // one per maximal chain
        assert!(c.is_pure());
        assert_eq!(c.dim(), Some(2));
        // f-vector must agree with the chain-count DP
        let p = l.poset();
        let keep: Vec<bool> = (0..p.len()).map(|i| i != p.bottom()).collect();
        assert_eq!(c.f_vector(CAP).unwrap(), p.chains_by_size(&keep));
        // dropping the top leaves the barycentric subdivision of the
        // boundary of a triangle: a six-vertex circle
        let circle = lattice_order_complex(&l, true, CAP).unwrap();
        assert_eq!(circle.euler_characteristic(CAP).unwrap(), BigInt::zero());
        assert_eq!(
            circle.f_vector(CAP).unwrap(),
            vec![BigInt::one(), BigInt::from(6), BigInt::from(6)]
        );
        assert!(circle.is_closed_pseudomanifold());
    }

    #[test]
    fn three_collinear_subdivision_trace() {
        let g = corpus::collinear(3);
        let trace = build_by_subdivision(&g, CAP).unwrap();
        assert_eq!(trace.initial.facet_count(), 1);
        let counts: Vec<usize> = trace.steps.iter().map(|s| s.facets_after).collect();
        assert_eq!(counts, vec![2, 3, 4, 4, 4, 4]);
        let flags: Vec<bool> = trace.steps.iter().map(|s| s.principal).collect();
        assert_eq!(flags, vec![false, false, false, true, true, true]);
        let sets: Vec<String> = trace.steps.iter().map(|s| s.set.to_string()).collect();
        assert_eq!(sets, vec!["{1,2,3}", "{1,2}", "{2,3}", "{1}", "{2}", "{3}"]);
        // the final complex is exactly the order complex of L \ {0̂}
        let l = g.closed_sets().unwrap();
        let oc = lattice_order_complex(&l, false, CAP).unwrap();
        assert_eq!(trace.final_complex, oc);
        assert_eq!(
            trace.final_complex.facets()[0],
            vec![set(&[1]), set(&[1, 2]), set(&[1, 2, 3])]
        );
    }

    #[test]
    fn subdivision_matches_order_complex_on_sample() {
        for g in corpus::small_sample() {
            let trace = build_by_subdivision(&g, CAP).unwrap();
            let l = g.closed_sets().unwrap();
            let oc = lattice_order_complex(&l, false, CAP).unwrap();
            assert_eq!(trace.final_complex, oc, "mismatch for {l}");
        }
    }

    #[test]
    fn boolean_geometry_still_needs_subdivisions() {
        // even for the free (Boolean) geometry the sequence subdivides:
        // the first step splits the whole simplex at its barycenter
        let g = corpus::boolean(2);
        let trace = build_by_subdivision(&g, CAP).unwrap();
        assert_eq!(trace.initial.facet_count(), 1);
        assert_eq!(trace.final_complex.facet_count(), 2);
        assert!(trace.steps.iter().any(|s| !s.principal));
        let l = g.closed_sets().unwrap();
        let oc = lattice_order_complex(&l, false, CAP).unwrap();
        assert_eq!(trace.final_complex, oc);
    }

    #[test]
    fn h_polynomial_of_a_path() {
        // path with 3 vertices, 2 edges: f = (1, 3, 2), d = 2
        let f = vec![BigInt::one(), BigInt::from(3), BigInt::from(2)];
        let h = h_polynomial(&f);
        // (1-t)^2 + 3t(1-t) + 2t^2 = 1 + t
        assert_eq!(h, Poly::from_int_coeffs(&[1, 1]));
    }

    #[test]
    fn face_cap_is_enforced() {
        let c = SimplicialComplex::from_facets(vec![vec![1, 2, 3, 4, 5]]);
        assert!(matches!(c.faces(10), Err(Error::ResourceLimit(_))));
    }
}
