//! The smallest interesting convex geometry: three collinear points.
//!
//! Prints its closed sets, the extreme points of each, and the basic
//! structure of the closed-set lattice.

use convexity::ConvexGeometry;
use num::BigRational;

fn main() -> convexity::Result<()> {
    let coords: Vec<BigRational> = [0, 1, 2]
        .iter()
        .map(|&x| BigRational::from_integer(x.into()))
        .collect();
    let g = ConvexGeometry::points_1d(coords)?;

    println!("ground set: {}", g.ground_set());
    println!("validation: {:?}\n", g.validate()?.is_valid());

    let l = g.closed_sets()?;
    println!("{} closed sets (convex subsets of the line):", l.len());
    for i in 0..l.len() {
        println!("  {:<8}  extreme points {}", l.set(i).to_string(), l.ext(i));
    }

    // the middle point 2 is in the convex hull of {1, 3}, so it is not
    // extreme in the full set
    println!("\next({{1,2,3}}) = {}", g.ext(convexity::Subset::full(3)));

    let p = l.poset();
    println!("\nlattice facts:");
    println!("  rank counts (by cardinality): {:?}", p.rank_counts());
    println!("  meet-distributive: {}", p.is_meet_distributive()?);
    println!(
        "  join-irreducibles: {:?}",
        l.join_irreducibles()
            .iter()
            .map(|&i| l.set(i).to_string())
            .collect::<Vec<_>>()
    );
    println!("  zeta polynomial:   {}", p.zeta_polynomial());
    Ok(())
}
