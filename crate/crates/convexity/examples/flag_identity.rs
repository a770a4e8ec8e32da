//! The flag-function identity: 2·F_Q = ϑ(F_L).
//!
//! F_P records, for each composition α, how many chains of P hit exactly the
//! rank set of α.  Weighting each chain by the ν-invariants of its closed
//! intervals defines ϑ(F_P).  For the join-oriented signed poset Q of a
//! convex geometry, twice its flag function equals ϑ applied to the flag
//! function of the closed sets ordered by reverse inclusion (with a new
//! bottom adjoined).

use convexity::corpus;
use convexity::qsym::{join_lattice_with_bottom, verify_main_identity, FlagQSym};
use convexity::sphere::QPoset;

fn main() -> convexity::Result<()> {
    let g = corpus::collinear(3);
    let l = g.closed_sets()?;

    let q = QPoset::from_lattice(l.clone())?.join_oriented();
    let f_q = FlagQSym::flag_f(&q);
    println!("F of the signed poset (join orientation):\n  {f_q}\n");

    let reversed = join_lattice_with_bottom(&l);
    let f_l = FlagQSym::flag_f(&reversed);
    println!("F of the reversed closed-set order with a new bottom:\n  {f_l}\n");
    println!("ϑ of it:\n  {}\n", FlagQSym::theta_of_flag(&reversed));

    let (holds, lhs, rhs) = verify_main_identity(&g)?;
    println!("2·F_Q          = {lhs}");
    println!("ϑ(F_L)         = {rhs}");
    println!("identity holds = {holds}");

    // and once more over the sample corpus
    println!();
    for g in corpus::small_sample() {
        let (holds, _, _) = verify_main_identity(&g)?;
        println!(
            "n = {}, kind = {:<9} identity holds: {holds}",
            g.n(),
            g.kind()
        );
    }
    Ok(())
}
