//! `tg`: normal forms, memberships, actions on dyadics, renders and verification
//! suites for elements of Thompson's group F.

mod render;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use thompson_core::coloring::{classify_dyadic, MembershipReport, Memberships};
use thompson_core::explore::{orbit_bfs, run_suite, Params};
use thompson_core::expr::{evaluate, ExprError};
use thompson_core::plmap::{act_digits, components_at, pi_ab, to_pl, BinaryWord, Dyadic, PlError};
use thompson_core::subgroup_tools::{e_generators, w_generators};
use thompson_core::trees::TreeDiagram;

#[derive(Parser)]
#[command(
    name = "tg",
    version,
    about = "Thompson's group F: tree diagrams and 3-colorable subgroups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Normal form of an element
    Nf {
        expr: String,
        #[arg(long)]
        json: bool,
    },
    /// Subgroup memberships
    Member {
        expr: String,
        /// Report every predicate (the default)
        #[arg(long, conflicts_with = "sub")]
        all: bool,
        /// A single predicate: F3col, E, Eeven, H, K22, oriented or smallstrip
        #[arg(long)]
        sub: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Image of a dyadic
    Act {
        expr: String,
        dyadic: String,
        /// Treat the argument as a digit word and act on words
        #[arg(long)]
        raw: bool,
        #[arg(long)]
        frac: bool,
        #[arg(long)]
        json: bool,
    },
    /// Log2 slopes at 0 and 1
    Pi {
        expr: String,
        #[arg(long)]
        json: bool,
    },
    /// Weights and classes of a dyadic
    Classify {
        dyadic: String,
        #[arg(long)]
        json: bool,
    },
    /// Dyadics reachable under a generating set
    Orbit {
        dyadic: String,
        #[arg(long, value_enum, default_value = "E")]
        gens: Gens,
        #[arg(long, default_value_t = 6)]
        depth: usize,
        /// Discard points with longer expansions
        #[arg(long, default_value_t = 12)]
        max_len: usize,
        #[arg(long)]
        frac: bool,
        #[arg(long)]
        json: bool,
    },
    /// Draw the diagram with its face colors
    Render {
        expr: String,
        #[arg(long, value_enum, default_value = "ascii")]
        format: Format,
        #[arg(long)]
        json: bool,
    },
    /// Split an element at a fixed dyadic
    Components {
        expr: String,
        alpha: String,
        #[arg(long)]
        json: bool,
    },
    /// Run a verification suite
    Verify {
        #[arg(long, default_value = "paper")]
        suite: String,
        #[arg(long, default_value_t = Params::default().max_leaves)]
        max_leaves: usize,
        #[arg(long, default_value_t = Params::default().max_depth)]
        max_depth: usize,
        /// Write the JSON report to PATH, or print it when no path is given
        #[arg(long, num_args = 0..=1)]
        json: Option<Option<PathBuf>>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Gens {
    #[value(name = "E")]
    E,
    #[value(name = "Eeven")]
    Eeven,
    #[value(name = "F")]
    F,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Dot,
    Ascii,
}

enum Failure {
    Parse(String),
    Domain(String),
}

impl From<ExprError> for Failure {
    fn from(e: ExprError) -> Self {
        Failure::Parse(e.to_string())
    }
}

impl From<PlError> for Failure {
    fn from(e: PlError) -> Self {
        match e {
            PlError::MalformedDyadic(_) => Failure::Parse(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

fn dyadic(s: &str) -> Result<Dyadic, Failure> {
    Ok(s.parse::<Dyadic>()?)
}

fn show(t: Dyadic, frac: bool) -> String {
    if frac {
        t.to_fraction_string()
    } else {
        t.to_string()
    }
}

fn emit(json: bool, value: serde_json::Value, text: impl FnOnce() -> String) {
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&value).expect("json values serialize")
        );
    } else {
        print!("{}", text());
    }
}

fn run(cmd: Command) -> Result<(), Failure> {
    match cmd {
        Command::Nf { expr, json } => {
            let d = evaluate(&expr)?;
            let nf = d.normal_form().to_string();
            emit(
                json,
                json!({"element": expr, "normal_form": nf, "top": d.top().to_string(), "bottom": d.bottom().to_string()}),
                || format!("{nf}\n"),
            );
        }
        Command::Member {
            expr,
            all: _,
            sub,
            json,
        } => {
            let d = evaluate(&expr)?;
            match sub {
                Some(name) => {
                    let m = Memberships::of(&d).get(&name).ok_or_else(|| {
                        Failure::Parse(format!(
                            "unknown subgroup '{name}', expected one of {}",
                            Memberships::NAMES.join(", ")
                        ))
                    })?;
                    emit(
                        json,
                        json!({"element": expr, "sub": name, "member": m}),
                        || format!("{m}\n"),
                    );
                }
                None => {
                    let r = MembershipReport::new(expr, &d);
                    let v = serde_json::to_value(&r).expect("reports serialize");
                    emit(json, v.clone(), || {
                        Memberships::NAMES
                            .iter()
                            .map(|n| format!("{n:<10} {}\n", r.member.get(n).unwrap()))
                            .collect()
                    });
                }
            }
        }
        Command::Act {
            expr,
            dyadic: t,
            raw,
            frac,
            json,
        } => {
            let d = evaluate(&expr)?;
            let (input, output) = if raw {
                let w: BinaryWord = t.parse()?;
                let out = act_digits(&d, &w)?;
                (w.to_string(), out.to_string())
            } else {
                let x = dyadic(&t)?;
                (show(x, frac), show(to_pl(&d).evaluate(x), frac))
            };
            emit(
                json,
                json!({"element": expr, "input": input, "output": output}),
                || format!("{output}\n"),
            );
        }
        Command::Pi { expr, json } => {
            let (a, b) = pi_ab(&evaluate(&expr)?);
            emit(json, json!({"element": expr, "pi": [a, b]}), || {
                format!("({a},{b})\n")
            });
        }
        Command::Classify { dyadic: t, json } => {
            let x = dyadic(&t)?;
            let c = classify_dyadic(x)?;
            let labels: Vec<String> = c.labels().iter().map(|l| l.to_string()).collect();
            let mut v = serde_json::to_value(&c).expect("classes serialize");
            v["dyadic"] = json!(x.to_string());
            v["z"] = json!(format!("Z_{}", c.z_index()));
            v["labels"] = json!(labels);
            emit(json, v, || {
                format!(
                    "ω = {}, ω̃ = {}, |t| = {}\nZ_{}  {}\n",
                    c.omega,
                    c.omega_tilde,
                    c.length,
                    c.z_index(),
                    labels.join(" ")
                )
            });
        }
        Command::Orbit {
            dyadic: t,
            gens,
            depth,
            max_len,
            frac,
            json,
        } => {
            let x = dyadic(&t)?;
            let (name, g): (&str, Vec<TreeDiagram>) = match gens {
                Gens::E => ("E", e_generators(false)),
                Gens::Eeven => ("Eeven", e_generators(true)),
                Gens::F => ("F", w_generators().to_vec()),
            };
            let pts: Vec<String> = orbit_bfs(x, &g, depth, Some(max_len))
                .into_iter()
                .map(|p| show(p, frac))
                .collect();
            emit(
                json,
                json!({"start": show(x, frac), "gens": name, "depth": depth, "max_len": max_len, "points": pts}),
                || pts.iter().map(|p| format!("{p}\n")).collect(),
            );
        }
        Command::Render { expr, format, json } => {
            let d = evaluate(&expr)?;
            let out = match format {
                Format::Dot => render::to_dot(&d),
                Format::Ascii => render::to_ascii(&d),
            };
            let name = if format == Format::Dot {
                "dot"
            } else {
                "ascii"
            };
            emit(
                json,
                json!({"element": expr, "format": name, "output": out}),
                || out.clone(),
            );
        }
        Command::Components { expr, alpha, json } => {
            let d = evaluate(&expr)?;
            let a = dyadic(&alpha)?;
            let (l, r) = components_at(&d, a)?;
            let (l, r) = (l.normal_form().to_string(), r.normal_form().to_string());
            emit(
                json,
                json!({"element": expr, "alpha": a.to_string(), "left": l, "right": r}),
                || format!("{l}\n{r}\n"),
            );
        }
        Command::Verify {
            suite,
            max_leaves,
            max_depth,
            json,
        } => {
            let report = run_suite(
                &suite,
                Params {
                    max_leaves,
                    max_depth,
                },
            )
            .ok_or_else(|| Failure::Parse(format!("unknown suite '{suite}'")))?;
            match json {
                Some(Some(path)) => {
                    fs::write(&path, report.to_json() + "\n")
                        .map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))?;
                    print!("{}", report.summary());
                }
                Some(None) => println!("{}", report.to_json()),
                None => print!("{}", report.summary()),
            }
            if !report.all_passed() {
                return Err(Failure::Domain(format!(
                    "{} claims failed",
                    report.failures().count()
                )));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Parse(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}
