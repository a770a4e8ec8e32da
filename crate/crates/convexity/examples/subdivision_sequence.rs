//! Watch the order complex appear by stellar subdivision.
//!
//! Starting from the simplex on the principal closed sets, each non-principal
//! closed set A (taken in reverse size order) stellarly subdivides the face
//! spanned by the principal sets of its extreme points.  The end result is
//! exactly the order complex of the nonempty closed sets.

use convexity::complex::{build_by_subdivision, lattice_order_complex};
use convexity::corpus;

fn main() -> convexity::Result<()> {
    let g = corpus::square_plus_center();
    println!("geometry: four corners of a square plus its center (n = 5)\n");

    let cap = 1_000_000;
    let trace = build_by_subdivision(&g, cap)?;
    println!(
        "start: simplex on the 5 principal sets, {} facet(s)",
        trace.initial.facet_count()
    );
    for (i, s) in trace.steps.iter().enumerate() {
        let action = if s.principal {
            "principal — nothing to do".to_string()
        } else {
            format!("subdivide the face spanned by ext = {}", s.ext)
        };
        println!(
            "step {:>2}: A = {:<12} {:<45} {:>3} facets",
            i + 1,
            s.set.to_string(),
            action,
            s.facets_after
        );
    }

    let l = g.closed_sets()?;
    let target = lattice_order_complex(&l, false, cap)?;
    println!(
        "\nfinal complex == order complex of the nonempty closed sets: {}",
        trace.final_complex == target
    );
    println!("f-vector: {:?}", trace.final_complex.f_vector(cap)?);
    Ok(())
}
