//! Hom- and Ext-dimensions, and the modules realising non-trivial
//! extensions by irreducibles.
//!
//! Run with: cargo run --example hom_ext

use tlrep::{
    ext_dim, extension_middle, hom_dim, normalize, separation_vanishes, AlgebraCtx, AliasSpec,
    ExtSide, Family,
};

fn main() -> tlrep::Result<()> {
    // the orbit of 0 over dTL_14 at ell = 3 is 0 < 4 < 6 < 10 < 12
    let ctx = AlgebraCtx::new(Family::Dtl, 14, 3)?;
    let class = |alias| normalize(ctx, alias).map(|s| s.sole_class().unwrap());

    let pairs = [
        (AliasSpec::Stan(6), AliasSpec::Stan(4)),
        (AliasSpec::Proj(6), AliasSpec::Proj(6)),
        (AliasSpec::Irr(6), AliasSpec::B(0, 4)),
        (AliasSpec::B(0, 2), AliasSpec::B(4, 2)),
    ];
    for (m, n) in pairs {
        let (m, n) = (class(m)?, class(n)?);
        println!("Hom({m}, {n}) = {}", hom_dim(&m, &n)?);
    }
    println!();
    for (m, n) in [
        (AliasSpec::Irr(6), AliasSpec::Irr(10)),
        (AliasSpec::Irr(4), AliasSpec::B(0, 2)),
        (AliasSpec::Stan(6), AliasSpec::Stan(0)),
    ] {
        let (m, n) = (class(m)?, class(n)?);
        println!("Ext({m}, {n}) = {}", ext_dim(&m, &n)?);
    }

    // factor supports further than one step apart kill both groups
    let far = (class(AliasSpec::Irr(0))?, class(AliasSpec::Irr(6))?);
    println!(
        "\nIrr(0) and Irr(6) are separated: {}",
        separation_vanishes(&far.0, &far.1)?
    );

    // middle terms of non-split extensions, including a decomposable one
    let b = class(AliasSpec::B(0, 3))?;
    println!("\nextensions of {b}:");
    println!(
        "  by I(12) below: 0 -> I(12) -> {} -> {b} -> 0",
        extension_middle(&b, 12, ExtSide::Sub)?
    );
    println!(
        "  by I(4) above:  0 -> {b} -> {} -> I(4) -> 0",
        extension_middle(&b, 4, ExtSide::Quot)?
    );

    // the degenerate self-extension of TL_2 at beta = 0
    let tl2 = AlgebraCtx::new(Family::Tl, 2, 2)?;
    let irr = normalize(tl2, AliasSpec::Irr(2))?.sole_class().unwrap();
    println!(
        "\nTL_2, beta = 0: Ext(I(2), I(2)) = {} with middle {}",
        ext_dim(&irr, &irr)?,
        extension_middle(&irr, 2, ExtSide::Sub)?
    );
    Ok(())
}
