//! Exhaustive cross-checks over a range of algebras.
//!
//! Run with: cargo run --release --example verify_all

fn main() -> tlrep::Result<()> {
    let (max_n, max_ell) = (12, 6);
    let report = tlrep::verify::run_all(max_n, max_ell)?;
    println!(
        "ran {} checks over both families, n <= {max_n}, ell <= {max_ell}",
        report.checks
    );
    for violation in &report.violations {
        println!("violation: {violation}");
    }
    if report.is_clean() {
        println!("all checks passed");
    }
    std::process::exit(if report.is_clean() { 0 } else { 3 });
}
