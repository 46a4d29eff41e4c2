//! The complete list of indecomposables over one algebra, with the
//! structural data of each class.
//!
//! Run with: cargo run --example classify

use tlrep::{normalize, AlgebraCtx, AliasSpec, Family};

fn main() -> tlrep::Result<()> {
    let ctx = AlgebraCtx::new(Family::Dtl, 12, 4)?;
    println!(
        "indecomposables of {} on {} strands, ell = {}:",
        ctx.family, ctx.n, ctx.ell
    );
    for class in tlrep::enumerate_indecomposables(ctx) {
        let layers = class
            .loewy_layers()?
            .iter()
            .map(|layer| format!("[{layer}]"))
            .collect::<Vec<_>>()
            .join(" / ");
        println!(
            "  {class:<8} factors {:<12} loewy {layers:<24} dual {:<8} cover {:<16} hull {}",
            class.composition_factors()?.to_string(),
            class.dual().to_string(),
            class.projective_cover()?.to_string(),
            class.injective_hull()?,
        );
    }

    // the classical families are aliases of the four canonical shapes
    println!("\nalias resolution over the same algebra:");
    for alias in [
        AliasSpec::Irr(2),
        AliasSpec::Stan(10),
        AliasSpec::Cost(2),
        AliasSpec::Proj(2),
        AliasSpec::Inj(2),
        AliasSpec::Stan(7),
    ] {
        println!("  {alias:<6} = {}", normalize(ctx, alias)?);
    }

    // presentations: the kernel of the cover and the cokernel of the hull
    let b = normalize(ctx, AliasSpec::B(2, 2))?.sole_class().unwrap();
    println!(
        "\n{b}: cover {} with kernel {}, hull {} with cokernel {}",
        b.projective_cover()?,
        b.ker_proj()?,
        b.injective_hull()?,
        b.coker_inj()?,
    );
    for (sub, _, quot) in b.exact_sequences()? {
        println!("  0 -> {sub} -> {b} -> {quot} -> 0");
    }
    Ok(())
}
