//! Reflect the order complex through all 2^n orthants to get a sphere.
//!
//! Each maximal chain of nonempty closed sets, paired with a sign vector in
//! {+, -}^n, spans one facet; vertices glue along shared non-extreme
//! coordinates.  The result is a simplicial (n-1)-sphere whose h-vector is
//! symmetric.

use convexity::complex::h_vector;
use convexity::corpus;
use convexity::sphere::{flip_complex, reflect};
use convexity::Subset;

fn main() -> convexity::Result<()> {
    let cap = 1_000_000;
    for (name, g) in [
        ("single point".to_string(), corpus::collinear(1)),
        ("three collinear points".to_string(), corpus::collinear(3)),
        (
            "square plus center".to_string(),
            corpus::square_plus_center(),
        ),
    ] {
        let pm = reflect(&g, cap)?;
        let f = pm.f_vector(cap)?;
        println!("{name} (n = {}):", g.n());
        println!("  f-vector: {f:?}");
        println!("  h-vector: {:?}", h_vector(&f));
        println!("  Euler characteristic: {}", pm.euler_characteristic(cap)?);
        println!("  closed pseudomanifold: {}", pm.is_closed_pseudomanifold());
        let symmetric = Subset::full(g.n())
            .submasks()
            .all(|mask| flip_complex(&pm, mask) == pm);
        println!("  invariant under all sign flips: {symmetric}\n");
    }

    // a peek at the facets in the smallest case: the two points of S^0
    let pm = reflect(&corpus::collinear(1), cap)?;
    println!("facets for a single point:");
    for facet in pm.facets() {
        let labels: Vec<String> = facet.iter().map(|v| v.to_string()).collect();
        println!("  {}", labels.join(" — "));
    }
    Ok(())
}
