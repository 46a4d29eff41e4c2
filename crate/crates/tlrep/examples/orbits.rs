//! Weight sets, critical lines and reflection orbits.
//!
//! Run with: cargo run --example orbits

use tlrep::{AlgebraCtx, Family};

fn main() -> tlrep::Result<()> {
    // the twelve-strand algebras at ell = 4
    for family in [Family::Dtl, Family::Tl] {
        let ctx = AlgebraCtx::new(family, 12, 4)?;
        println!("{} on {} strands, ell = {}:", ctx.family, ctx.n, ctx.ell);
        println!("  weight set  {:?}", ctx.lambda_set());
        for orbit in ctx.all_orbits() {
            if orbit.is_critical() {
                println!("  critical    {:?}", orbit.members());
            } else {
                println!("  orbit       {:?}", orbit.members());
            }
        }
    }

    // neighbour arithmetic is allowed to leave the weight set: reflections
    // through the critical mirrors produce virtual labels that higher layers
    // treat as zero modules
    let ctx = AlgebraCtx::new(Family::Dtl, 12, 4)?;
    println!(
        "\nneighbours of 9 (orbit {:?}):",
        ctx.orbit_of(9)?.members()
    );
    for j in -2..=2 {
        let v = ctx.neighbor(9, j)?;
        let status = if ctx.in_lambda(v) { "" } else { "  (virtual)" };
        println!("  9^({j:+}) = {v}{status}");
    }

    // the degenerate case: beta = 0 on an even number of strands
    let tl6 = AlgebraCtx::new(Family::Tl, 6, 2)?;
    println!(
        "\nTL_6 at ell = 2 is degenerate: {}; irreducibles are labelled by {:?}",
        tl6.degenerate(),
        tl6.lambda0_set()
    );
    Ok(())
}
