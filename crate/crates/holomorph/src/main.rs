use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use holomorph::expr::{eval_expr, parse_expr};
use holomorph::json;
use holomorph::verify::{reports_to_json, run_all, Fault, Status, VerifyConfig};
use holomorph_core::aut::aut_group;
use holomorph_core::construct::{action_classes, actions, hom_set};
use holomorph_core::iso::{are_isomorphic, identify};
use holomorph_core::search::generating_sequence;
use holomorph_core::GroupTable;

/// Finite groups as Cayley tables.
///
/// GROUP arguments are expressions such as "Z8 x Z2", "D5", "Hol7",
/// "Z8 : Z2 [r^3]" or "(Z2 x Z2) : Z3 [#1]", or @FILE for a Cayley table in
/// JSON.
#[derive(Parser)]
#[command(name = "holomorph", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Order, commutativity, center size and order spectrum.
    Info { group: String },
    /// Size and name of the automorphism group.
    Aut {
        group: String,
        /// Print the automorphism group's Cayley table as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Exit 0 with a witness if the groups are isomorphic, 1 otherwise.
    Iso { first: String, second: String },
    /// Name the group from the built-in catalog.
    Identify { group: String },
    /// Print the Cayley table.
    Table {
        group: String,
        #[arg(long)]
        json: bool,
    },
    /// Count homomorphisms H -> K.
    Homs {
        h: String,
        k: String,
        /// Also partition hom(H, Aut(K)) into classes under Aut(H).
        #[arg(long)]
        actions: bool,
    },
    /// Recompute every tabulated count and structural claim.
    VerifyPaper {
        /// Upper end of the n ranges for the Z_n x Z_2 and dihedral checks.
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        json: bool,
        #[arg(long, hide = true)]
        inject_fault: Option<FaultArg>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FaultArg {
    WrongFormula,
    CorruptedTable,
}

enum Failure {
    Usage(String),
    Cap(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Cap(_) => 3,
        }
    }
}

impl From<holomorph_core::Error> for Failure {
    fn from(e: holomorph_core::Error) -> Self {
        if e.is_cap() {
            Failure::Cap(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

fn load(arg: &str) -> Result<GroupTable, Failure> {
    if let Some(path) = arg.strip_prefix('@') {
        let text =
            std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{path}: {e}")))?;
        return json::from_str(&text).map_err(|e| Failure::Usage(format!("{path}: {e}")));
    }
    let e = parse_expr(arg).map_err(|e| Failure::Usage(format!("{arg:?}: {e}")))?;
    eval_expr(&e).map_err(|e| {
        if e.is_cap() {
            Failure::Cap(e.to_string())
        } else {
            Failure::Usage(format!("{arg:?}: {e}"))
        }
    })
}

fn render_table(g: &GroupTable) -> String {
    let width = g
        .names()
        .iter()
        .map(|n| n.chars().count())
        .max()
        .unwrap_or(1)
        .max(1);
    let mut out = String::new();
    let cell = |s: &str| format!("{s:>width$}");
    let _ = write!(out, "{} |", cell("*"));
    for a in g.elements() {
        let _ = write!(out, " {}", cell(g.name(a)));
    }
    out.push('\n');
    for a in g.elements() {
        let _ = write!(out, "{} |", cell(g.name(a)));
        for b in g.elements() {
            let _ = write!(out, " {}", cell(g.name(g.mul(a, b))));
        }
        out.push('\n');
    }
    out
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Info { group } => {
            let g = load(&group)?;
            let spectrum: Vec<String> = g
                .order_spectrum()
                .iter()
                .map(|(o, c)| format!("{o}:{c}"))
                .collect();
            println!("order: {}", g.order());
            println!("abelian: {}", g.is_abelian());
            println!("center: {}", g.center().len());
            println!("spectrum: {}", spectrum.join(" "));
        }
        Command::Aut { group, json } => {
            let g = load(&group)?;
            let a = aut_group(&g)?;
            if json {
                println!("{}", json::to_string(a.table()));
            } else {
                println!("order: {}", a.len());
                println!("identify: {}", identify(a.table())?);
            }
        }
        Command::Iso { first, second } => {
            let (a, b) = (load(&first)?, load(&second)?);
            match are_isomorphic(&a, &b)? {
                Some(f) => {
                    println!("isomorphic");
                    for x in generating_sequence(&a) {
                        println!("  {} -> {}", a.name(x), b.name(f.apply(x)));
                    }
                }
                None => {
                    println!("not isomorphic");
                    return Ok(1);
                }
            }
        }
        Command::Identify { group } => println!("{}", identify(&load(&group)?)?),
        Command::Table { group, json } => {
            let g = load(&group)?;
            if json {
                println!("{}", json::to_string(&g));
            } else {
                print!("{}", render_table(&g));
            }
        }
        Command::Homs {
            h,
            k,
            actions: with_actions,
        } => {
            let (h, k) = (load(&h)?, load(&k)?);
            println!("homomorphisms: {}", hom_set(&h, &k)?.len());
            if with_actions {
                let all = actions(&h, &k)?;
                let classes = action_classes(&h, &k)?;
                println!("actions: {} in {} classes", all.len(), classes.len());
                for (i, class) in classes.iter().enumerate() {
                    let idx: Vec<String> = class
                        .iter()
                        .map(|psi| {
                            format!(
                                "#{}",
                                all.iter().position(|a| a == psi).expect("class member")
                            )
                        })
                        .collect();
                    println!("  class {i} (size {}): {}", class.len(), idx.join(" "));
                }
            }
        }
        Command::VerifyPaper {
            max_n,
            json,
            inject_fault,
        } => {
            let mut cfg = match max_n {
                Some(n) => VerifyConfig::with_max_n(n),
                None => VerifyConfig::default(),
            };
            cfg.fault = inject_fault.map(|f| match f {
                FaultArg::WrongFormula => Fault::WrongOrderFormula,
                FaultArg::CorruptedTable => Fault::CorruptedTable,
            });
            let (reports, summary) = run_all(&cfg);
            if json {
                println!("{}", reports_to_json(&reports));
            } else {
                for r in &reports {
                    let tag = match &r.status {
                        Status::Pass => "PASS",
                        Status::Fail => "FAIL",
                        Status::Skipped(_) => "SKIP",
                    };
                    println!(
                        "{tag} {} ({:.1} ms)",
                        r.claim,
                        r.elapsed.as_secs_f64() * 1000.0
                    );
                    if !r.passed() {
                        println!("     expected: {}", r.expected);
                        println!("     actual:   {}", r.actual);
                    }
                }
                println!(
                    "{} passed, {} failed, {} skipped in {:.2} s",
                    summary.passed,
                    summary.failed,
                    summary.skipped,
                    summary.elapsed.as_secs_f64()
                );
            }
            if !summary.all_passed() {
                return Ok(1);
            }
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            let (Failure::Usage(msg) | Failure::Cap(msg)) = &f;
            eprintln!("error: {msg}");
            ExitCode::from(f.code())
        }
    }
}
