//! Polynomial identities around the signed poset.
//!
//! Z(t) counts multichains of signed elements between the bounds; Z̄(t)
//! counts the extremal-function multichains.  Both satisfy a reciprocity
//! law, their generating function is governed by the sphere's h-polynomial,
//! and a one-point extension of the geometry doubles the count.

use convexity::corpus;
use convexity::geometry::{BasePoset, ConvexGeometry, IdealDirection};
use convexity::poly;
use convexity::EnrichedContext;
use num::BigInt;

fn main() -> convexity::Result<()> {
    let g = corpus::collinear(3);
    let ctx = EnrichedContext::new(&g)?;

    println!("three collinear points:");
    println!("  Z(t)  = {}", ctx.zeta());
    println!("  Z̄(t)  = {}", ctx.zbar());
    println!("  h-vector of the sphere: {:?}", ctx.h_vector());
    let (lhs, rhs) = ctx.h_identity_sides();
    println!("  Σ_j c_j t^j (1−t)^(n+1−j) = {lhs}");
    println!("  t · h(t)                  = {rhs}");
    println!(
        "  generating function matches t·h(t)/(1−t)^(n+2): {}",
        ctx.verify_h_identity()
    );
    println!("  reciprocity Z(−t) = ±Z(t): {}", ctx.verify_reciprocity());
    println!("  h-polynomial real-rooted: {}\n", ctx.h_real_rooted()?);

    // adjoining a point whose closure is everything doubles the zeta count
    let extended = g.one_point_extension()?;
    let ext_ctx = EnrichedContext::new(&extended)?;
    println!("one-point extension (n = {}):", extended.n());
    println!("  Z̄'(t) = {}", ext_ctx.zbar());
    println!(
        "  Z̄'(t) == 2·Z(t): {}\n",
        ext_ctx.zbar() == ctx.zeta().scale_int(&BigInt::from(2))
    );

    // the same pipeline starting from an arbitrary poset: its upper ideals
    // form a convex geometry
    let poset = BasePoset::new(5, &[(1, 3), (2, 3), (2, 4), (3, 5)])?;
    let g = ConvexGeometry::poset_ideal(poset, IdealDirection::Upper)?;
    let ctx = EnrichedContext::new(&g)?;
    println!("upper ideals of a five-element poset:");
    println!("  h-vector: {:?}", ctx.h_vector());
    println!("  real-rooted: {}", ctx.h_real_rooted()?);

    // exact root counting on its own
    let p = poly::Poly::from_int_coeffs(&[1, 15, 15, 1]);
    println!(
        "\nSturm root count for 1 + 15t + 15t² + t³: {} real roots",
        poly::real_root_count(&p)?
    );
    Ok(())
}
