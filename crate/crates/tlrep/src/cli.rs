//! Command-line front end. The binary is a thin wrapper around
//! [`main_with_args`].
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 domain error, 3
//! verification failures found. Diagnostics go to stderr; results to stdout.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::algebra::{AlgebraCtx, Family};
use crate::catalog::{normalize, Factors, ModuleSum};
use crate::error::Error;
use crate::functors::{induce_sum, restrict_sum};
use crate::homology::{ext_dim, hom_dim, DimResult};
use crate::parse::parse_module_spec;
use crate::quiver::full_quiver;
use crate::verify::run_all;

#[derive(Debug, Parser)]
#[command(
    name = "tlrep",
    about = "Indecomposable modules, functors and Auslander-Reiten quivers for the (dilute) Temperley-Lieb algebras at a root of unity",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyArg {
    Tl,
    Dtl,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum QuiverFormat {
    Dot,
    Json,
}

#[derive(Debug, Args)]
struct CtxArgs {
    /// Algebra family
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// Number of strands
    #[arg(long)]
    n: i64,
    /// Order of the root of unity (smallest positive with q^(2ℓ) = 1)
    #[arg(long)]
    ell: i64,
    /// Machine-readable output
    #[arg(long)]
    json: bool,
}

impl CtxArgs {
    fn ctx(&self) -> Result<AlgebraCtx, Error> {
        let family = match self.family {
            FamilyArg::Tl => Family::Tl,
            FamilyArg::Dtl => Family::Dtl,
        };
        AlgebraCtx::new(family, self.n, self.ell)
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the critical labels and the reflection orbits of the weight set
    Orbits(CtxArgs),
    /// Resolve a module expression to canonical classes
    Normalize {
        #[command(flatten)]
        ctx: CtxArgs,
        spec: String,
    },
    /// Composition factors of a module expression
    Factors {
        #[command(flatten)]
        ctx: CtxArgs,
        spec: String,
    },
    /// Loewy layers, top layer first
    Loewy {
        #[command(flatten)]
        ctx: CtxArgs,
        spec: String,
    },
    /// Twisted dual
    Dual {
        #[command(flatten)]
        ctx: CtxArgs,
        spec: String,
    },
    /// Projective cover
    Cover {
        #[command(flatten)]
        ctx: CtxArgs,
        spec: String,
    },
    /// Injective hull
    Hull {
        #[command(flatten)]
        ctx: CtxArgs,
        spec: String,
    },
    /// dim Hom(M, N)
    Hom {
        #[command(flatten)]
        ctx: CtxArgs,
        #[arg(value_name = "M")]
        lhs: String,
        #[arg(value_name = "N")]
        rhs: String,
    },
    /// dim Ext¹(M, N)
    Ext {
        #[command(flatten)]
        ctx: CtxArgs,
        #[arg(value_name = "M")]
        lhs: String,
        #[arg(value_name = "N")]
        rhs: String,
    },
    /// Restriction to n−1 strands
    Res {
        #[command(flatten)]
        ctx: CtxArgs,
        spec: String,
    },
    /// Induction to n+1 strands
    Ind {
        #[command(flatten)]
        ctx: CtxArgs,
        spec: String,
    },
    /// Auslander-Reiten quiver of one block or of the whole algebra
    Quiver {
        #[command(flatten)]
        ctx: CtxArgs,
        /// Build the block containing this label
        #[arg(long, conflicts_with = "all")]
        k: Option<i64>,
        /// Build every block
        #[arg(long)]
        all: bool,
        #[arg(long, value_enum, default_value = "dot")]
        format: QuiverFormat,
        /// Include dashed τ edges in DOT output
        #[arg(long)]
        show_tau: bool,
    },
    /// Run the exhaustive verification sweeps
    Verify {
        #[arg(long, default_value_t = 10)]
        max_n: i64,
        #[arg(long, default_value_t = 5)]
        max_ell: i64,
        #[arg(long)]
        json: bool,
    },
}

/// Parse argv and run; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            // help and version are successes, everything else is a usage error
            let code = if err.use_stderr() { 1 } else { 0 };
            let _ = err.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(err @ Error::Parse { .. }) => {
            eprintln!("{err}");
            1
        }
        Err(err) => {
            eprintln!("{err}");
            2
        }
    }
}

fn sum_from_spec(ctx: AlgebraCtx, spec: &str) -> Result<ModuleSum, Error> {
    let aliases = parse_module_spec(spec)?;
    let mut sum = ModuleSum::zero(ctx);
    for (alias, mult) in aliases {
        let normalized = normalize(ctx, alias)?;
        for (class, m) in normalized.terms() {
            sum.add(class.kind, m * mult);
        }
    }
    Ok(sum)
}

fn sum_json(sum: &ModuleSum) -> Value {
    let summands: Vec<Value> = sum
        .terms()
        .map(|(class, mult)| json!({ "class": class.to_string(), "multiplicity": mult }))
        .collect();
    json!({ "summands": summands })
}

fn factors_json(factors: &Factors) -> Value {
    let mut map = Map::new();
    for (&label, &mult) in &factors.0 {
        map.insert(label.to_string(), json!(mult));
    }
    Value::Object(map)
}

fn print_value(value: &Value) {
    println!("{}", serde_json::to_string(value).expect("serialisable"));
}

fn hom_ext(ctx: CtxArgs, m: String, n: String, is_hom: bool) -> Result<i32, Error> {
    let c = ctx.ctx()?;
    let ms = sum_from_spec(c, &m)?;
    let ns = sum_from_spec(c, &n)?;
    // bi-additivity over the summands; Unknown swallows the total
    let mut total = 0u64;
    let mut unknown = false;
    for (a, am) in ms.terms() {
        for (b, bm) in ns.terms() {
            let dim = if is_hom {
                hom_dim(&a, &b)?
            } else {
                ext_dim(&a, &b)?
            };
            match dim {
                DimResult::Known(v) => total += v * am * bm,
                DimResult::Unknown => unknown = true,
            }
        }
    }
    let result = if unknown {
        DimResult::Unknown
    } else {
        DimResult::Known(total)
    };
    if ctx.json {
        match result {
            DimResult::Known(v) => print_value(&json!({ "dim": v })),
            DimResult::Unknown => print_value(&json!({ "dim": Value::Null })),
        }
    } else {
        println!("{result}");
    }
    Ok(0)
}

fn dispatch(command: Command) -> Result<i32, Error> {
    match command {
        Command::Orbits(args) => {
            let ctx = args.ctx()?;
            let mut criticals = Vec::new();
            let mut orbits = Vec::new();
            for orbit in ctx.all_orbits() {
                if orbit.is_critical() {
                    criticals.push(orbit.members()[0]);
                } else {
                    orbits.push(orbit.members().to_vec());
                }
            }
            if args.json {
                print_value(&json!({ "criticals": criticals, "orbits": orbits }));
            } else {
                let join = |v: &[i64]| {
                    v.iter()
                        .map(|k| k.to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                };
                println!("critical: {}", join(&criticals));
                for orbit in &orbits {
                    println!("orbit: {}", join(orbit));
                }
            }
            Ok(0)
        }
        Command::Normalize { ctx, spec } => {
            let c = ctx.ctx()?;
            let sum = sum_from_spec(c, &spec)?;
            if ctx.json {
                print_value(&sum_json(&sum));
            } else {
                println!("{sum}");
            }
            Ok(0)
        }
        Command::Factors { ctx, spec } => {
            let c = ctx.ctx()?;
            let factors = sum_from_spec(c, &spec)?.composition_factors()?;
            if ctx.json {
                print_value(&factors_json(&factors));
            } else {
                println!("{factors}");
            }
            Ok(0)
        }
        Command::Loewy { ctx, spec } => {
            let c = ctx.ctx()?;
            let sum = sum_from_spec(c, &spec)?;
            // align the socle series of the summands from the bottom
            let mut layered: Vec<Factors> = Vec::new();
            for (class, mult) in sum.terms() {
                let mut layers = class.loewy_layers()?;
                layers.reverse();
                for (depth, layer) in layers.into_iter().enumerate() {
                    if layered.len() <= depth {
                        layered.push(Factors::new());
                    }
                    layered[depth].union(&layer.scaled(mult));
                }
            }
            layered.reverse();
            if ctx.json {
                let value: Vec<Value> = layered.iter().map(factors_json).collect();
                print_value(&json!(value));
            } else if layered.is_empty() {
                println!("0");
            } else {
                let text: Vec<String> = layered.iter().map(|layer| format!("[{layer}]")).collect();
                println!("{}", text.join(" / "));
            }
            Ok(0)
        }
        Command::Dual { ctx, spec } => {
            let c = ctx.ctx()?;
            let dual = sum_from_spec(c, &spec)?
                .map_classes(|class| Ok(ModuleSum::singleton(class.dual())))?;
            if ctx.json {
                print_value(&sum_json(&dual));
            } else {
                println!("{dual}");
            }
            Ok(0)
        }
        Command::Cover { ctx, spec } => {
            let c = ctx.ctx()?;
            let cover = sum_from_spec(c, &spec)?.map_classes(|class| class.projective_cover())?;
            if ctx.json {
                print_value(&sum_json(&cover));
            } else {
                println!("{cover}");
            }
            Ok(0)
        }
        Command::Hull { ctx, spec } => {
            let c = ctx.ctx()?;
            let hull = sum_from_spec(c, &spec)?.map_classes(|class| class.injective_hull())?;
            if ctx.json {
                print_value(&sum_json(&hull));
            } else {
                println!("{hull}");
            }
            Ok(0)
        }
        Command::Hom { ctx, lhs, rhs } => hom_ext(ctx, lhs, rhs, true),
        Command::Ext { ctx, lhs, rhs } => hom_ext(ctx, lhs, rhs, false),
        Command::Res { ctx, spec } => {
            let c = ctx.ctx()?;
            let (tgt, res) = restrict_sum(&sum_from_spec(c, &spec)?)?;
            if ctx.json {
                let mut value = sum_json(&res);
                value["n"] = json!(tgt.n);
                print_value(&value);
            } else {
                println!("{res}");
            }
            Ok(0)
        }
        Command::Ind { ctx, spec } => {
            let c = ctx.ctx()?;
            let (tgt, ind) = induce_sum(&sum_from_spec(c, &spec)?)?;
            if ctx.json {
                let mut value = sum_json(&ind);
                value["n"] = json!(tgt.n);
                print_value(&value);
            } else {
                println!("{ind}");
            }
            Ok(0)
        }
        Command::Quiver {
            ctx,
            k,
            all,
            format,
            show_tau,
        } => {
            let c = ctx.ctx()?;
            let quivers = full_quiver(c)?;
            let selected: Vec<_> = match (k, all) {
                (Some(k), _) => {
                    if !c.in_lambda(k) {
                        return Err(Error::Domain(format!("{k} is not in the weight set")));
                    }
                    quivers
                        .into_iter()
                        .filter(|q| q.members.contains(&k))
                        .collect()
                }
                (None, true) => quivers,
                (None, false) => {
                    return Err(Error::Domain(
                        "choose a block with --k <label> or pass --all".to_string(),
                    ))
                }
            };
            match format {
                QuiverFormat::Dot => {
                    let mut parts = Vec::new();
                    for quiver in &selected {
                        parts.push(quiver.dot(show_tau)?);
                    }
                    println!("{}", parts.join("\n"));
                }
                QuiverFormat::Json => {
                    let mut blocks = Vec::new();
                    for quiver in &selected {
                        blocks.push(quiver.json()?);
                    }
                    print_value(&json!(blocks));
                }
            }
            Ok(0)
        }
        Command::Verify {
            max_n,
            max_ell,
            json,
        } => {
            let report = run_all(max_n, max_ell)?;
            if json {
                print_value(&serde_json::json!({
                    "checks": report.checks,
                    "violations": report.violations,
                }));
            } else {
                println!(
                    "ran {} checks over n <= {max_n}, ell <= {max_ell}",
                    report.checks
                );
                for violation in &report.violations {
                    println!("violation: {violation}");
                }
                if report.is_clean() {
                    println!("all checks passed");
                }
            }
            Ok(if report.is_clean() { 0 } else { 3 })
        }
    }
}
