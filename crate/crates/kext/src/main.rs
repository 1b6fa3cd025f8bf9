//! kext: exact scalar extension of module categories on the command line.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use kext::algebra::frobenius::is_frobenius;
use kext::algebra::radical::radical;
use kext::error::{KextError, Result};
use kext::exact::parse::{describe_tower, print_scalar};
use kext::io::{algebra_from_json, algebra_to_json, module_from_json_over, tower_from_json};
use kext::modules::core::ModRef;
use kext::modules::decompose::decompose;
use kext::modules::hom::hom_dim;
use kext::modules::socle::{socle, socle_filtration};
use kext::properties::catalog::{catalog, extension_by_name};
use kext::properties::checks::{run_check, CheckId, PropertyReport};
use kext::scalarext::{extend_algebra, split_simple, TowerInclusion};

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Parser)]
#[command(name = "kext", version, about = "exact scalar-extension engine")]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Summary of an algebra: dimension, field, center, radical
    AlgebraInfo {
        #[arg(long)]
        algebra: String,
    },
    /// Summary of a module: dimension, socle
    ModuleInfo {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        module: String,
    },
    /// dim Hom(source, target)
    Homdim {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        source: String,
        #[arg(long)]
        target: String,
    },
    /// Jacobson radical of an algebra
    Radical {
        #[arg(long)]
        algebra: String,
    },
    /// Socle of a module
    Socle {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        module: String,
    },
    /// Socle filtration and semisimplification layers
    Semisimplify {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        module: String,
    },
    /// Decomposition into simple summands
    Decompose {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        module: String,
    },
    /// Scalar extension of an algebra along a tower inclusion
    Extend {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        extend: String,
    },
    /// How a simple module splits after scalar extension
    Split {
        /// Optional when the module file embeds its algebra
        #[arg(long)]
        algebra: Option<String>,
        #[arg(long)]
        simple: String,
        #[arg(long)]
        extend: String,
    },
    /// Run named proposition checks
    Check {
        /// Comma-separated check ids (e.g. FF_T,IDEAL_LATTICE)
        #[arg(long = "check", value_delimiter = ',')]
        checks: Vec<String>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        trials: usize,
    },
    /// Run the full verification suite
    Suite {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        trials: usize,
    },
}

fn load_json(spec: &str) -> Result<Value> {
    if spec.starts_with("catalog:") {
        return Ok(Value::String(spec.to_string()));
    }
    let text = std::fs::read_to_string(spec)
        .map_err(|e| KextError::BadInput(format!("cannot read {spec}: {e}")))?;
    serde_json::from_str(&text).map_err(|e| KextError::Parse(e.to_string()))
}

fn load_algebra(spec: &str) -> Result<kext::algebra::core::AlgRef> {
    algebra_from_json(&load_json(spec)?)
}

fn load_module(alg: &kext::algebra::core::AlgRef, spec: &str) -> Result<ModRef> {
    module_from_json_over(alg, &load_json(spec)?)
}

/// Extension spec: a catalog extension name, a shorthand alias, or a path
/// to a tower JSON file (taken as the large tower over the algebra's).
fn resolve_extension(spec: &str, small: &kext::exact::tower::Tower) -> Result<TowerInclusion> {
    let alias = match spec {
        "GF4" => Some("GF(2)->GF(4)"),
        "GF16" => Some("GF(2)->GF(16)"),
        "GF9" => Some("GF(3)->GF(9)"),
        "Q(i)" | "Qi" => Some("Q->Q(i)"),
        "Q(w)" | "Qw" => Some("Q->Q(w)"),
        _ => None,
    };
    if let Some(name) = alias {
        return extension_by_name(name);
    }
    if extension_by_name(spec).is_ok() {
        return extension_by_name(spec);
    }
    let large = tower_from_json(&load_json(spec)?)?;
    TowerInclusion::new(small.clone(), large)
}

fn print_value(format: Format, v: &Value) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(v).unwrap()),
        Format::Text => print_text(v, 0),
    }
}

fn print_text(v: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(o) => {
            for (k, val) in o {
                match val {
                    Value::Object(_) | Value::Array(_) => {
                        println!("{pad}{k}:");
                        print_text(val, indent + 1);
                    }
                    _ => println!("{pad}{k}: {val}"),
                }
            }
        }
        Value::Array(a) => {
            for val in a {
                print_text(val, indent);
            }
        }
        _ => println!("{pad}{v}"),
    }
}

fn basis_json(t: &kext::exact::tower::Tower, b: &kext::exact::mat::SubspaceBasis) -> Value {
    Value::Array(
        (0..b.dim())
            .map(|i| {
                Value::Array(
                    b.basis()
                        .row(i)
                        .iter()
                        .map(|e| json!(print_scalar(t, e)))
                        .collect(),
                )
            })
            .collect(),
    )
}

fn report_objects(r: &PropertyReport) -> Vec<Value> {
    let mut out = Vec::new();
    for i in &r.instances {
        out.push(json!({
            "check": r.check,
            "instance": i.instance,
            "pass": i.pass,
            "detail": i.detail,
        }));
    }
    out.push(json!({
        "check": r.check,
        "instance": "SUMMARY",
        "pass": r.pass,
        "instances": r.instances.len(),
        "seed": r.seed,
        "trials": r.trials,
        "counterexample": r.counterexample,
        "wall_ms": r.wall_ms,
    }));
    out
}

fn run_checks(format: Format, ids: &[CheckId], seed: u64, trials: usize) -> Result<u8> {
    let mut all_pass = true;
    for id in ids {
        let r = run_check(*id, seed, trials)?;
        all_pass &= r.pass;
        match format {
            Format::Json => {
                for obj in report_objects(&r) {
                    println!("{}", serde_json::to_string(&obj).unwrap());
                }
            }
            Format::Text => {
                println!(
                    "{} {}: {} instances, {} ms{}",
                    if r.pass { "PASS" } else { "FAIL" },
                    r.check,
                    r.instances.len(),
                    r.wall_ms,
                    r.counterexample
                        .as_deref()
                        .map(|c| format!(" (first counterexample: {c})"))
                        .unwrap_or_default(),
                );
            }
        }
    }
    Ok(if all_pass { 0 } else { 1 })
}

fn run(cli: Cli) -> Result<u8> {
    let format = cli.format;
    match cli.cmd {
        Cmd::AlgebraInfo { algebra } => {
            let a = load_algebra(&algebra)?;
            let rad: Value = match radical(&a) {
                Ok(r) => json!(r.dim()),
                Err(KextError::UnsupportedField(_)) => json!("unsupported"),
                Err(e) => return Err(e),
            };
            print_value(
                format,
                &json!({
                    "name": a.name(),
                    "field": describe_tower(a.tower()),
                    "dim": a.dim(),
                    "commutative": a.is_commutative(),
                    "center_dim": a.center().dim(),
                    "radical_dim": rad,
                    "frobenius": match is_frobenius(&a) {
                        Ok(r) => json!(r.frobenius),
                        Err(_) => json!("undecided"),
                    },
                }),
            );
            Ok(0)
        }
        Cmd::ModuleInfo { algebra, module } => {
            let a = load_algebra(&algebra)?;
            let m = load_module(&a, &module)?;
            let soc: Value = match socle(&m) {
                Ok(s) => json!(s.dim()),
                Err(KextError::UnsupportedField(_)) => json!("unsupported"),
                Err(e) => return Err(e),
            };
            print_value(
                format,
                &json!({
                    "name": m.name(),
                    "algebra": m.algebra().name(),
                    "field": describe_tower(m.tower()),
                    "dim": m.dim(),
                    "socle_dim": soc,
                }),
            );
            Ok(0)
        }
        Cmd::Homdim {
            algebra,
            source,
            target,
        } => {
            let a = load_algebra(&algebra)?;
            let m = load_module(&a, &source)?;
            let n = load_module(&a, &target)?;
            print_value(format, &json!({ "dim": hom_dim(&m, &n)? }));
            Ok(0)
        }
        Cmd::Radical { algebra } => {
            let a = load_algebra(&algebra)?;
            let r = radical(&a)?;
            print_value(
                format,
                &json!({ "dim": r.dim(), "basis": basis_json(a.tower(), &r) }),
            );
            Ok(0)
        }
        Cmd::Socle { algebra, module } => {
            let a = load_algebra(&algebra)?;
            let m = load_module(&a, &module)?;
            let s = socle(&m)?;
            print_value(
                format,
                &json!({ "dim": s.dim(), "basis": basis_json(m.tower(), &s) }),
            );
            Ok(0)
        }
        Cmd::Semisimplify { algebra, module } => {
            let a = load_algebra(&algebra)?;
            let m = load_module(&a, &module)?;
            let f = socle_filtration(&m)?;
            print_value(
                format,
                &json!({
                    "dim": m.dim(),
                    "layers": f.report,
                }),
            );
            Ok(0)
        }
        Cmd::Decompose { algebra, module } => {
            let a = load_algebra(&algebra)?;
            let m = load_module(&a, &module)?;
            let d = decompose(&m)?;
            let dims: Vec<usize> = d.summands.iter().map(|s| s.module.dim()).collect();
            let classes: Vec<Value> = d
                .classes
                .iter()
                .map(|&(rep, mult)| {
                    json!({ "dim": d.summands[rep].module.dim(), "multiplicity": mult })
                })
                .collect();
            print_value(
                format,
                &json!({
                    "semisimple": d.input_semisimple,
                    "summand_dims": dims,
                    "classes": classes,
                }),
            );
            Ok(0)
        }
        Cmd::Extend { algebra, extend } => {
            let a = load_algebra(&algebra)?;
            let inc = resolve_extension(&extend, a.tower())?;
            let e = extend_algebra(&a, &inc)?;
            print_value(format, &algebra_to_json(&e));
            Ok(0)
        }
        Cmd::Split {
            algebra,
            simple,
            extend,
        } => {
            let s = match algebra {
                Some(a) => load_module(&load_algebra(&a)?, &simple)?,
                None => kext::io::module_from_json(&load_json(&simple)?)?,
            };
            let a = s.algebra().clone();
            let inc = resolve_extension(&extend, a.tower())?;
            let r = split_simple(&s, &inc)?;
            print_value(format, &serde_json::to_value(&r).unwrap());
            Ok(if r.pass { 0 } else { 1 })
        }
        Cmd::Check {
            checks,
            seed,
            trials,
        } => {
            if checks.is_empty() {
                return Err(KextError::BadInput("--check requires at least one id".into()));
            }
            let ids = checks
                .iter()
                .map(|s| s.parse())
                .collect::<Result<Vec<CheckId>>>()?;
            run_checks(format, &ids, seed, trials)
        }
        Cmd::Suite { seed, trials } => {
            // touch the catalog early so construction errors surface once
            let _ = catalog();
            run_checks(format, &CheckId::all(), seed, trials)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                KextError::UnsupportedField(_) => 3,
                KextError::BadInput(_) | KextError::Parse(_) | KextError::UnknownCheck(_) => 2,
                _ => 1,
            };
            ExitCode::from(code)
        }
    }
}
