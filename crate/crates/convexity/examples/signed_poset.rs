//! The signed face poset behind the reflected sphere.
//!
//! Its elements are pairs (A, ε): a nonempty closed set together with a sign
//! vector on its extreme points, plus a bottom and a formal top.  Faces of
//! the sphere correspond to its proper elements, and the whole poset is
//! Eulerian of rank n + 1.

use convexity::corpus;
use convexity::sphere::{q_order_complex, reflect, QPoset};

fn main() -> convexity::Result<()> {
    let g = corpus::collinear(2);
    let q = QPoset::new(&g)?;

    println!(
        "two collinear points: signed poset with {} elements",
        q.len()
    );
    let p = q.poset();
    for rank in 0..=p.rank(q.top()) {
        let row: Vec<String> = p
            .elements_of_rank(rank)
            .iter()
            .map(|&i| q.node(i).to_string())
            .collect();
        println!("  rank {rank}: {}", row.join("  "));
    }
    println!("  Eulerian: {}", q.is_eulerian());

    // the proper part's order complex is another description of the sphere
    let cap = 1_000_000;
    let pm = reflect(&g, cap)?;
    let oc = q_order_complex(&q, cap)?;
    println!(
        "\norder complex of the proper part == reflected sphere: {}",
        pm == oc
    );

    // one closed cell per element: its boundary is the union of the closed
    // cells strictly below it
    let g = corpus::collinear(3);
    let q = QPoset::new(&g)?;
    let top_cells: Vec<usize> = q.poset().down_covers(q.top()).to_vec();
    println!(
        "\nthree collinear points: {} top cells, each an (n-1)-ball of {} facets",
        top_cells.len(),
        q.cell(top_cells[0], cap)?.facet_count()
    );
    let mut all_facets = vec![];
    for &c in &top_cells {
        all_facets.extend(q.cell(c, cap)?.facets().to_vec());
    }
    let union = convexity::SimplicialComplex::from_facets(all_facets);
    println!(
        "their union is the whole sphere: {}",
        union == reflect(&g, cap)?
    );
    Ok(())
}
