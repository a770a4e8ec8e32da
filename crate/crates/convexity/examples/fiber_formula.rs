//! Count the chains of the signed poset over a chain of closed sets.
//!
//! Forgetting signs maps chains of the signed poset onto chains of closed
//! sets.  Over a strictly decreasing chain ending at ∅ the fiber size
//! factors: it is a product of ν-invariants of upper intervals, and also a
//! plain power of two counting the extreme points that disappear at each
//! step.  This example computes all three numbers for every such chain of a
//! small geometry.

use convexity::corpus;
use convexity::sphere::QPoset;
use convexity::Subset;

fn main() -> convexity::Result<()> {
    let g = corpus::collinear(3);
    let l = g.closed_sets()?;
    let q = QPoset::from_lattice(l.clone())?;

    // enumerate every strictly decreasing chain of closed sets ending at ∅
    let sets: Vec<Subset> = l.sets().to_vec();
    let mut chains: Vec<Vec<Subset>> = vec![];
    let mut stack: Vec<Vec<Subset>> = vec![vec![Subset::EMPTY]];
    while let Some(c) = stack.pop() {
        if c.len() >= 2 {
            chains.push(c.clone());
        }
        for &s in &sets {
            if c[0].is_proper_subset_of(s) {
                let mut bigger = vec![s];
                bigger.extend(c.iter().copied());
                stack.push(bigger);
            }
        }
    }
    chains.sort();

    println!(
        "three collinear points: {} decreasing chains ending at ∅\n",
        chains.len()
    );
    println!(
        "{:<34} {:>6} {:>9} {:>6}",
        "chain", "fiber", "ν-product", "2^k"
    );
    for c in &chains {
        let pretty: Vec<String> = c.iter().map(Subset::to_string).collect();
        println!(
            "{:<34} {:>6} {:>9} {:>6}",
            pretty.join(" ⊃ "),
            q.fiber_count(c)?,
            q.fiber_count_by_nu(c)?,
            q.fiber_count_by_ext(c)?
        );
    }
    Ok(())
}
