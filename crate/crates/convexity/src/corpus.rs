//! Generated families of geometries and posets shared by tests, examples,
//! and the batch verification command.
//!
//! The corpus covers three sources: order-ideal geometries over every poset
//! on at most five elements (one representative per isomorphism class, both
//! ideal directions), collinear point rows, and a fixed list of exact
//! rational plane configurations.

use num::{BigInt, BigRational};

use crate::geometry::{BasePoset, ConvexGeometry, IdealDirection};
use crate::subset::Subset;

fn rat(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

fn pts_1d(xs: &[i64]) -> ConvexGeometry {
    ConvexGeometry::points_1d(xs.iter().map(|&x| rat(x)).collect())
        .expect("distinct integer points")
}

fn pts_2d(ps: &[(i64, i64)]) -> ConvexGeometry {
    ConvexGeometry::points_2d(ps.iter().map(|&(x, y)| (rat(x), rat(y))).collect())
        .expect("distinct integer points")
}

/// `k` collinear points `1, …, k` in order along a line.
pub fn collinear(k: usize) -> ConvexGeometry {
    let xs: Vec<i64> = (0..k as i64).collect();
    pts_1d(&xs)
}

/// The free geometry on `[n]`: every subset is closed, so the lattice of
/// closed sets is the Boolean lattice `B_n`.
pub fn boolean(n: usize) -> ConvexGeometry {
    assert!(
        n >= 1 && n <= 12,
        "boolean corpus geometry limited to n ≤ 12"
    );
    ConvexGeometry::explicit_family(n, Subset::all(n)).expect("the power set is a geometry")
}

/// Unit square corners `1..=4` (counterclockwise from the origin) plus the
/// center `5`, which lies on both diagonals.
pub fn square_plus_center() -> ConvexGeometry {
    pts_2d(&[(0, 0), (2, 0), (2, 2), (0, 2), (1, 1)])
}

/// Triangle corners `1..=3` plus the centroid `4`, which lies inside the
/// triangle but on none of its edges or vertex-to-vertex segments.
pub fn triangle_plus_centroid() -> ConvexGeometry {
    pts_2d(&[(0, 0), (3, 0), (0, 3), (1, 1)])
}

/// Named exact plane configurations of increasing size.
pub fn plane_configs() -> Vec<(&'static str, ConvexGeometry)> {
    vec![
        ("triangle", pts_2d(&[(0, 0), (1, 0), (0, 1)])),
        ("triangle-plus-centroid", triangle_plus_centroid()),
        ("square", pts_2d(&[(0, 0), (1, 0), (1, 1), (0, 1)])),
        ("square-plus-center", square_plus_center()),
        (
            "collinear-triple-plus-apex",
            pts_2d(&[(0, 0), (1, 0), (2, 0), (1, 1)]),
        ),
        (
            "pentagon",
            pts_2d(&[(0, 0), (4, 0), (5, 4), (2, 6), (-1, 4)]),
        ),
        (
            "hexagon",
            pts_2d(&[(0, 0), (2, 0), (3, 1), (2, 2), (0, 2), (-1, 1)]),
        ),
        (
            "grid-2x3",
            pts_2d(&[(0, 0), (1, 0), (2, 0), (0, 1), (1, 1), (2, 1)]),
        ),
        (
            "square-center-edge-midpoint",
            pts_2d(&[(0, 0), (2, 0), (2, 2), (0, 2), (1, 1), (1, 0)]),
        ),
        (
            "triangle-with-edge-midpoints",
            pts_2d(&[(0, 0), (2, 0), (0, 2), (1, 0), (1, 1), (0, 1)]),
        ),
    ]
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![];
    let mut items: Vec<usize> = (0..n).collect();
    fn rec(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if k == items.len() {
            out.push(items.clone());
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            rec(items, k + 1, out);
            items.swap(k, i);
        }
    }
    rec(&mut items, 0, &mut out);
    out
}

/// One representative per isomorphism class of posets on `n` unlabeled
/// elements (`1 ≤ n ≤ 6`), in a deterministic order.
///
/// Candidates are the transitive subsets of the pairs `{(i, j) : i < j}` —
/// every finite poset admits such a natural labeling — deduplicated by the
/// lexicographically least adjacency matrix over all relabelings.
pub fn posets_up_to_iso(n: usize) -> Vec<BasePoset> {
    assert!(n >= 1 && n <= 6);
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let perms = permutations(n);
    let mut seen = std::collections::BTreeSet::new();
    let mut reps = vec![];
    for mask in 0..1u32 << pairs.len() {
        let mut rel = vec![false; n * n];
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if mask >> k & 1 != 0 {
                rel[i * n + j] = true;
            }
        }
        let transitive = (0..n).all(|a| {
            (0..n).all(|b| !rel[a * n + b] || (0..n).all(|c| !rel[b * n + c] || rel[a * n + c]))
        });
        if !transitive {
            continue;
        }
        let canon = perms
            .iter()
            .map(|p| {
                let mut code = 0u64;
                for a in 0..n {
                    for b in 0..n {
                        if rel[a * n + b] {
                            code |= 1 << (p[a] * n + p[b]);
                        }
                    }
                }
                code
            })
            .min()
            .unwrap();
        if seen.insert(canon) {
            let relations: Vec<(usize, usize)> = (0..n)
                .flat_map(|a| (0..n).map(move |b| (a, b)))
                .filter(|&(a, b)| canon >> (a * n + b) & 1 != 0)
                .map(|(a, b)| (a + 1, b + 1))
                .collect();
            reps.push(BasePoset::new(n, &relations).expect("canonical relation is a poset"));
        }
    }
    reps
}

/// Order-ideal geometries (both directions) over every poset isomorphism
/// class on `1 ..= max_n` elements.
pub fn ideal_geometries(max_n: usize) -> Vec<(String, ConvexGeometry)> {
    let mut out = vec![];
    for n in 1..=max_n {
        for (k, p) in posets_up_to_iso(n).into_iter().enumerate() {
            for (dir, name) in [
                (IdealDirection::Lower, "lower"),
                (IdealDirection::Upper, "upper"),
            ] {
                let g = ConvexGeometry::poset_ideal(p.clone(), dir)
                    .expect("ideal closures are geometries");
                out.push((format!("ideal-{name}-n{n}-{k}"), g));
            }
        }
    }
    out
}

/// The full named corpus: ideal geometries over all posets on ≤ 5 elements,
/// collinear rows up to six points, and the fixed plane configurations.
pub fn corpus_geometries() -> Vec<(String, ConvexGeometry)> {
    let mut out = ideal_geometries(5);
    for k in 1..=6 {
        out.push((format!("collinear-{k}"), collinear(k)));
    }
    for (name, g) in plane_configs() {
        out.push((name.to_string(), g));
    }
    out
}

/// A modest fixed sample with small ground sets, cheap enough for
/// exhaustive (all-subset) property tests.
pub fn small_sample() -> Vec<ConvexGeometry> {
    let v_poset = BasePoset::new(3, &[(1, 3), (2, 3)]).unwrap();
    let two_plus_two = BasePoset::new(4, &[(1, 2), (3, 4)]).unwrap();
    vec![
        collinear(1),
        collinear(2),
        collinear(3),
        collinear(4),
        boolean(2),
        boolean(3),
        square_plus_center(),
        triangle_plus_centroid(),
        ConvexGeometry::poset_ideal(v_poset.clone(), IdealDirection::Lower).unwrap(),
        ConvexGeometry::poset_ideal(v_poset, IdealDirection::Upper).unwrap(),
        ConvexGeometry::poset_ideal(two_plus_two, IdealDirection::Lower).unwrap(),
        pts_2d(&[(0, 0), (1, 0), (2, 0), (1, 1)]),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poset_class_counts_match_the_known_sequence() {
        // unlabeled posets on 1..=5 points
        let expect = [1usize, 2, 5, 16, 63];
        for (n, &count) in expect.iter().enumerate() {
            assert_eq!(posets_up_to_iso(n + 1).len(), count, "n = {}", n + 1);
        }
    }

    #[test]
    fn poset_representatives_are_pairwise_nonisomorphic() {
        // re-canonicalize each representative and check distinctness
        let reps = posets_up_to_iso(4);
        let perms = permutations(4);
        let mut codes = std::collections::BTreeSet::new();
        for p in &reps {
            let code = perms
                .iter()
                .map(|perm| {
                    let mut c = 0u64;
                    for a in 1..=4 {
                        for b in 1..=4 {
                            if a != b && p.leq(a, b) {
                                c |= 1 << (perm[a - 1] * 4 + perm[b - 1]);
                            }
                        }
                    }
                    c
                })
                .min()
                .unwrap();
            assert!(codes.insert(code), "two representatives are isomorphic");
        }
    }

    #[test]
    fn corpus_members_are_valid_geometries() {
        for (name, g) in corpus_geometries() {
            let report = g.validate().unwrap();
            assert!(report.is_valid(), "{name}: {report}");
        }
    }

    #[test]
    fn hexagon_is_free() {
        // convex-position points: every subset is closed
        let hex = plane_configs()
            .into_iter()
            .find(|(name, _)| *name == "hexagon")
            .unwrap()
            .1;
        assert_eq!(hex.closed_set_family().len(), 64);
    }

    #[test]
    fn collinear_closed_set_counts() {
        // k collinear points have 1 + k(k+1)/2 closed sets (intervals + ∅)
        for k in 1..=6 {
            let g = collinear(k);
            assert_eq!(g.closed_set_family().len(), 1 + k * (k + 1) / 2);
        }
    }

    #[test]
    fn grid_closure_fills_rows() {
        let grid = plane_configs()
            .into_iter()
            .find(|(name, _)| *name == "grid-2x3")
            .unwrap()
            .1;
        // bottom row corners close to the whole bottom row
        let corners = Subset::from_elems([1, 3]).unwrap();
        assert_eq!(
            grid.closure(corners),
            Subset::from_elems([1, 2, 3]).unwrap()
        );
        // all four outer corners close to the whole grid
        let outer = Subset::from_elems([1, 3, 4, 6]).unwrap();
        assert_eq!(grid.closure(outer), Subset::full(6));
    }
}
