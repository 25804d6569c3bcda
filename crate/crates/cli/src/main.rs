use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use eislat::cusps::{classify_cusps, FamilyId};
use eislat::expr::parse;
use eislat::lattice::Lattice;
use eislat::report::Report;
use eislat::roots::{RootSet, RootSystemType};
use eislat::verify::{run_all, Suite};

#[derive(Parser)]
#[command(name = "eislat", version, about = "Exact lattice checks for Eisenstein K3 lattices")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Tab3,
    Tab4,
    Expl,
    Eis,
    Order4,
    Tschirnhausen,
    Glue,
    Semifan,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Rank, signature, parity, discriminant group and root type.
    Info { expr: String },
    /// Root count and decomposition of a definite lattice.
    Roots { expr: String },
    /// Elementary divisors of the discriminant group.
    Disc { expr: String },
    /// 1-cusps of a family with their embedding witnesses.
    Cusps {
        #[arg(long)]
        family: String,
    },
    /// Run golden-table suites.
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
    },
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn lattice(expr: &str) -> Result<Lattice, ExitCode> {
    parse(expr)
        .and_then(|e| e.to_lattice())
        .map_err(|e| usage(format!("{expr:?}: {e}")))
}

fn emit(format: Format, value: &Value) {
    match format {
        Format::Json => println!("{value}"),
        Format::Text => {
            if let Value::Object(map) = value {
                let width = map.keys().map(String::len).max().unwrap_or(0);
                for (k, v) in map {
                    let v = match v {
                        Value::String(s) => s.clone(),
                        other => other.to_string(),
                    };
                    println!("{k:<width$}  {v}");
                }
            }
        }
    }
}

fn divisors(l: &Lattice) -> Result<Vec<String>, eislat::Error> {
    Ok(l.disc_group()?
        .elementary_divisors
        .iter()
        .map(ToString::to_string)
        .collect())
}

fn info(l: &Lattice) -> Result<Value, eislat::Error> {
    let (p, q) = l.signature()?;
    let root = if p == 0 || q == 0 {
        RootSet::of(l)?.root_type()?.to_string()
    } else {
        "indefinite".to_string()
    };
    Ok(json!({
        "rank": l.rank(),
        "signature": format!("({p},{q})"),
        "parity": if l.is_even() { "even" } else { "odd" },
        "det": l.det().to_string(),
        "unimodular": l.is_unimodular(),
        "disc": divisors(l)?,
        "root_type": root,
    }))
}

fn roots(l: &Lattice) -> Result<Value, eislat::Error> {
    let set = RootSet::of(l)?;
    let t = set.root_type()?;
    Ok(json!({
        "count": set.len(),
        "type": t.to_string(),
        "components": t.components().iter().map(ToString::to_string).collect::<Vec<_>>(),
    }))
}

fn cusps(id: FamilyId) -> Result<Value, eislat::Error> {
    let records: Vec<Value> = classify_cusps(id)?
        .iter()
        .map(|c| {
            let witnesses: Vec<Value> = c
                .witnesses
                .iter()
                .map(|(kind, w)| {
                    let parts: Vec<Value> = w
                        .components
                        .iter()
                        .map(|ci| {
                            json!({
                                "component": ci.component.to_string(),
                                "factors": RootSystemType::new(ci.factors.clone()).to_string(),
                                "complement": ci.complement.to_string(),
                                "quotient_order": ci.quotient_order,
                            })
                        })
                        .collect();
                    json!({
                        "model": kind.to_string(),
                        "components": parts,
                        "quotient_order": w.quotient_order,
                        "weyl_orbits": w.orbit_count,
                    })
                })
                .collect();
            json!({
                "root_type": c.jperp_root.to_string(),
                "starred": c.jperp_root.is_starred(),
                "witnesses": witnesses,
            })
        })
        .collect();
    Ok(json!({ "family": id.to_string(), "genus": id.genus(), "cusps": records }))
}

fn print_cusps(format: Format, v: &Value) {
    if let Format::Json = format {
        println!("{v}");
        return;
    }
    println!("family {} (genus {})", v["family"].as_str().unwrap_or(""), v["genus"]);
    for c in v["cusps"].as_array().into_iter().flatten() {
        println!("{}", c["root_type"].as_str().unwrap_or(""));
        for w in c["witnesses"].as_array().into_iter().flatten() {
            let parts: Vec<String> = w["components"]
                .as_array()
                .into_iter()
                .flatten()
                .map(|p| {
                    format!(
                        "{} in {} -> {} (q={})",
                        p["factors"].as_str().unwrap_or(""),
                        p["component"].as_str().unwrap_or(""),
                        p["complement"].as_str().unwrap_or(""),
                        p["quotient_order"]
                    )
                })
                .collect();
            println!("  {}: {}", w["model"].as_str().unwrap_or(""), parts.join("; "));
        }
    }
}

fn print_report(format: Format, r: &Report) {
    match format {
        Format::Json => println!("{}", r.to_json()),
        Format::Text => print!("{}", r.to_text()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let fail = |e: eislat::Error| {
        eprintln!("error: {e}");
        ExitCode::from(1)
    };
    match cli.command {
        Command::Info { expr } => match lattice(&expr) {
            Ok(l) => match info(&l) {
                Ok(v) => emit(cli.format, &v),
                Err(e) => return fail(e),
            },
            Err(code) => return code,
        },
        Command::Roots { expr } => match lattice(&expr) {
            Ok(l) => match roots(&l) {
                Ok(v) => emit(cli.format, &v),
                Err(e) => return fail(e),
            },
            Err(code) => return code,
        },
        Command::Disc { expr } => match lattice(&expr) {
            Ok(l) => match divisors(&l) {
                Ok(d) => emit(cli.format, &json!({ "elementary_divisors": d })),
                Err(e) => return fail(e),
            },
            Err(code) => return code,
        },
        Command::Cusps { family } => {
            let id: FamilyId = match family.parse() {
                Ok(id) => id,
                Err(e) => return usage(e),
            };
            match cusps(id) {
                Ok(v) => print_cusps(cli.format, &v),
                Err(e) => return fail(e),
            }
        }
        Command::Verify { suite } => {
            let suites: Vec<Suite> = match suite {
                SuiteArg::All => Suite::ALL.to_vec(),
                SuiteArg::Tab3 => vec![Suite::Tab3],
                SuiteArg::Tab4 => vec![Suite::Tab4],
                SuiteArg::Expl => vec![Suite::Expl],
                SuiteArg::Eis => vec![Suite::Eis],
                SuiteArg::Order4 => vec![Suite::Order4],
                SuiteArg::Tschirnhausen => vec![Suite::Tschirnhausen],
                SuiteArg::Glue => vec![Suite::Glue],
                SuiteArg::Semifan => vec![Suite::Semifan],
            };
            let reports = run_all(&suites);
            for r in &reports {
                print_report(cli.format, r);
            }
            if !reports.iter().all(Report::passed) {
                return ExitCode::from(1);
            }
        }
    }
    ExitCode::SUCCESS
}
