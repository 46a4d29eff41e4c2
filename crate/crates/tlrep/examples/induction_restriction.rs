//! Restriction and induction along the tower of algebras.
//!
//! Run with: cargo run --example induction_restriction

use tlrep::{induce, normalize, restrict, AlgebraCtx, AliasSpec, Family};

fn main() -> tlrep::Result<()> {
    let ctx = AlgebraCtx::new(Family::Dtl, 13, 4)?;
    println!("over {} strands, ell = {}:", ctx.n, ctx.ell);
    for alias in [
        AliasSpec::B(2, 3),
        AliasSpec::Stan(7),
        AliasSpec::Proj(12),
        AliasSpec::Cost(2),
    ] {
        let class = normalize(ctx, alias)?.sole_class().unwrap();
        let (down, res) = restrict(&class)?;
        let (up, ind) = induce(&class)?;
        println!("  {alias:<8} = {class}");
        println!("      Res to {:2} strands: {res}", down.n);
        println!("      Ind to {:2} strands: {ind}", up.n);
    }

    // restriction is exact, so composition factors telescope through the
    // restrictions of the individual irreducible factors
    let b = normalize(ctx, AliasSpec::B(2, 3))?.sole_class().unwrap();
    let (_, res) = restrict(&b)?;
    println!(
        "\nfactors of Res {b}: {} (from factors {} of {b})",
        res.composition_factors()?,
        b.composition_factors()?
    );

    // induction usually matches restriction from two strands higher; the one
    // exception lives over TL_2 at beta = 0
    let tl2 = AlgebraCtx::new(Family::Tl, 2, 2)?;
    let stan0 = normalize(tl2, AliasSpec::Stan(0))?.sole_class().unwrap();
    let (_, ind) = induce(&stan0)?;
    let lifted = AlgebraCtx::new(Family::Tl, 4, 2)?;
    let from_above = restrict(&normalize(lifted, AliasSpec::Stan(0))?.sole_class().unwrap())?.1;
    println!("\nTL at beta = 0: Ind S(2,0) = {ind}, while Res S(4,0) = {from_above}");
    Ok(())
}
