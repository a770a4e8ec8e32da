//! Enriched extremal functions and their multichain encoding.
//!
//! A function f : [n] → {-1, 1, …, -m, m} (ordered -1 ≺ 1 ≺ -2 ≺ 2 ≺ …) is
//! extremal when every nonempty closed set attains its minimum at an extreme
//! point, and negative values only appear at extreme points of their level
//! set.  These functions biject with multichains of the signed poset, so
//! their number is a polynomial in m.

use convexity::corpus;
use convexity::EnrichedContext;

fn main() -> convexity::Result<()> {
    let cap = 1_000_000;
    let g = corpus::collinear(3);
    let ctx = EnrichedContext::new(&g)?;

    println!("three collinear points, m = 1 (values in {{-1, 1}}):");
    for f in ctx.enumerate_extremal(1, cap)? {
        // walk the bijection: function -> multichain -> function
        let chain = ctx.function_to_multichain(&f, 1)?;
        let labels: Vec<String> = chain.iter().map(|&i| ctx.q().node(i).to_string()).collect();
        let back = ctx.multichain_to_function(&chain)?;
        println!(
            "  {f}  ↔  {}   (round-trip: {})",
            labels.join(" ≥ "),
            back == f
        );
    }

    println!("\ncounts against the order polynomial of the signed poset:");
    println!("  Z̄(t) = {}", ctx.zbar());
    for (m, enumerated, predicted) in ctx.verify_counts(3, cap)? {
        println!("  m = {m}: enumerated {enumerated}, predicted {predicted}");
    }

    // a bigger example: all sign assignments on a 2-d configuration
    let g = corpus::square_plus_center();
    let ctx = EnrichedContext::new(&g)?;
    println!("\nsquare plus center:");
    println!("  Z̄(t) = {}", ctx.zbar());
    for (m, enumerated, predicted) in ctx.verify_counts(2, cap)? {
        println!("  m = {m}: enumerated {enumerated}, predicted {predicted}");
    }
    Ok(())
}
