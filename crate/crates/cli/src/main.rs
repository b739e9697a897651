//! `lexham`: decide, construct, verify and cross-check Hamiltonian properties
//! of generalized lexicographic products `P_m[H_1, .., H_m]`.
//!
//! Exit codes: 0 yes/valid, 1 no/invalid, 2 input error, 3 resource limit.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use lexham::decide::Decision;
use lexham::dot::product_dot;
use lexham::forest::{max_linear_forest_with, ExactLimits};
use lexham::oracle::{brute_ham_connected, brute_hamiltonian, brute_traceable};
use lexham::verify::verify_walk;
use lexham::{
    build_product, construct, decide_spec, Construction, Error, Goal, ProductSpec, ProductVertex, ProductWalk,
    Property, SimpleGraph,
};

#[derive(Parser)]
#[command(
    name = "lexham",
    version,
    about = "Hamiltonicity of generalized lexicographic products of paths"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print pi(H) and a maximum spanning linear forest of a graph file.
    Pi { graph: PathBuf },
    /// Materialize the product of a spec file.
    Product {
        spec: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Decide a property from the layers' pi values.
    Decide {
        spec: PathBuf,
        #[arg(long, value_enum)]
        property: Prop,
    },
    /// Build a Hamiltonian cycle or path, or print the failed ledger.
    Construct {
        spec: PathBuf,
        #[arg(long, value_enum)]
        goal: GoalArg,
        /// First vertex of an xy-path, as layer:inner.
        #[arg(long)]
        x: Option<ProductVertex>,
        /// Last vertex of an xy-path, as layer:inner.
        #[arg(long)]
        y: Option<ProductVertex>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        emit: Format,
        /// Also print the path multiple used, as JSON on stderr.
        #[arg(long)]
        dump_multiple: bool,
    },
    /// Check a witness file against a spec file.
    Verify {
        spec: PathBuf,
        witness: PathBuf,
        /// Required first vertex of an open walk (defaults to the walk's own).
        #[arg(long)]
        x: Option<ProductVertex>,
        /// Required last vertex of an open walk (defaults to the walk's own).
        #[arg(long)]
        y: Option<ProductVertex>,
    },
    /// Brute-force answer for one spec, or a decide/oracle diff over a directory.
    Oracle {
        spec: Option<PathBuf>,
        #[arg(long, value_enum)]
        property: Option<Prop>,
        /// Directory of spec files to diff against the decision procedure.
        #[arg(long, conflicts_with = "spec")]
        corpus: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum Prop {
    Hamiltonian,
    Traceable,
    HamConnected,
}

impl From<Prop> for Property {
    fn from(p: Prop) -> Self {
        match p {
            Prop::Hamiltonian => Property::Hamiltonian,
            Prop::Traceable => Property::Traceable,
            Prop::HamConnected => Property::HamConnected,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum GoalArg {
    Cycle,
    Path,
    XyPath,
}

enum Failure {
    Input(String),
    Limit(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InstanceTooLarge { .. } => Failure::Limit(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

type Outcome = Result<bool, Failure>;

/// Writes to stdout, ignoring a closed pipe.
fn out(text: &str) {
    let _ = io::stdout().lock().write_all(text.as_bytes());
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_spec(path: &Path) -> Result<ProductSpec, Failure> {
    ProductSpec::from_json(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn cmd_pi(path: &Path) -> Outcome {
    let h = SimpleGraph::from_json(&read(path)?)?;
    let forest = max_linear_forest_with(&h, &ExactLimits::from_env())?;
    out(&format!("pi = {}\n", forest.edge_count()));
    let parts: Vec<String> = forest
        .components()
        .iter()
        .map(|c| c.iter().map(usize::to_string).collect::<Vec<_>>().join("-"))
        .collect();
    out(&format!("forest: {}\n", parts.join(" | ")));
    Ok(true)
}

fn cmd_product(path: &Path, format: Format) -> Outcome {
    let spec = load_spec(path)?;
    match format {
        Format::Json => out(&format!("{}\n", build_product(&spec).to_json())),
        Format::Dot => out(&product_dot(&spec, None)),
    }
    Ok(true)
}

fn cmd_decide(path: &Path, property: Property) -> Outcome {
    let d = decide_spec(&load_spec(path)?, property)?;
    out(&format!("{}\n", d.to_json()));
    Ok(d.verdict)
}

fn cmd_construct(
    path: &Path,
    goal: GoalArg,
    x: Option<ProductVertex>,
    y: Option<ProductVertex>,
    emit: Format,
    dump_multiple: bool,
) -> Outcome {
    let spec = load_spec(path)?;
    let goal = match (goal, x, y) {
        (GoalArg::Cycle, None, None) => Goal::Cycle,
        (GoalArg::Path, None, None) => Goal::Path,
        (GoalArg::XyPath, Some(x), Some(y)) => Goal::XyPath { x, y },
        (GoalArg::XyPath, _, _) => return Err(Failure::Input("xy-path needs both --x and --y".into())),
        _ => return Err(Failure::Input("--x/--y only apply to xy-path".into())),
    };
    match construct(&spec, goal)? {
        Construction::Infeasible(d) => {
            out(&format!("{}\n", d.to_json()));
            Ok(false)
        }
        Construction::Witness(w) => {
            if dump_multiple {
                eprintln!("{}", serde_json::to_string(&w.multiple).expect("multiple serializes"));
            }
            match emit {
                Format::Json => out(&format!("{}\n", w.walk.to_json())),
                Format::Dot => out(&product_dot(&spec, Some(&w.walk))),
            }
            Ok(true)
        }
    }
}

fn cmd_verify(spec: &Path, witness: &Path, x: Option<ProductVertex>, y: Option<ProductVertex>) -> Outcome {
    let spec = load_spec(spec)?;
    let walk: ProductWalk =
        serde_json::from_str(&read(witness)?).map_err(|e| Failure::Input(format!("{}: {e}", witness.display())))?;
    let ends = match (x, y, walk.vertices.first(), walk.vertices.last()) {
        (None, None, _, _) => None,
        (x, y, Some(&first), Some(&last)) => Some((x.unwrap_or(first), y.unwrap_or(last))),
        _ => None,
    };
    match verify_walk(&spec, &walk, ends) {
        Ok(()) => {
            out("valid\n");
            Ok(true)
        }
        Err(v) => {
            out(&format!("invalid: {v}\n"));
            Ok(false)
        }
    }
}

fn oracle_verdict(spec: &ProductSpec, property: Property) -> Result<bool, Failure> {
    let g = build_product(spec);
    Ok(match property {
        Property::Hamiltonian => brute_hamiltonian(&g)?,
        Property::Traceable => brute_traceable(&g)?,
        Property::HamConnected => brute_ham_connected(&g)?,
    })
}

fn cmd_oracle(spec: &Path, property: Property) -> Outcome {
    let verdict = oracle_verdict(&load_spec(spec)?, property)?;
    let d = Decision::new(Vec::new(), format!("oracle/{}", property.as_str()));
    let d = Decision { verdict, ..d };
    out(&format!("{}\n", d.to_json()));
    Ok(verdict)
}

fn cmd_corpus(dir: &Path, property: Option<Property>) -> Outcome {
    let mut files: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(|e| Failure::Input(format!("{}: {e}", dir.display())))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    let properties = match property {
        Some(p) => vec![p],
        None => Property::ALL.to_vec(),
    };
    out(&format!(
        "{:<32} {:<14} {:>7} {:>7}  status\n",
        "spec", "property", "decide", "oracle"
    ));
    let mut disagreements = 0;
    for file in &files {
        let spec = load_spec(file)?;
        let name = file.file_name().unwrap().to_string_lossy();
        for &p in &properties {
            let d = decide_spec(&spec, p)?.verdict;
            let (o, status) = match oracle_verdict(&spec, p) {
                Ok(o) if o == d => (o.to_string(), "agree"),
                Ok(o) => {
                    disagreements += 1;
                    (o.to_string(), "DISAGREE")
                }
                Err(Failure::Limit(_)) => ("-".into(), "skipped (too large)"),
                Err(e) => return Err(e),
            };
            out(&format!("{name:<32} {:<14} {d:>7} {o:>7}  {status}\n", p.as_str()));
        }
    }
    out(&format!("{} files, {disagreements} disagreements\n", files.len()));
    Ok(disagreements == 0)
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Pi { graph } => cmd_pi(&graph),
        Command::Product { spec, format } => cmd_product(&spec, format),
        Command::Decide { spec, property } => cmd_decide(&spec, property.into()),
        Command::Construct {
            spec,
            goal,
            x,
            y,
            emit,
            dump_multiple,
        } => cmd_construct(&spec, goal, x, y, emit, dump_multiple),
        Command::Verify { spec, witness, x, y } => cmd_verify(&spec, &witness, x, y),
        Command::Oracle { spec, property, corpus } => match (spec, corpus) {
            (_, Some(dir)) => cmd_corpus(&dir, property.map(Into::into)),
            (Some(spec), None) => match property {
                Some(p) => cmd_oracle(&spec, p.into()),
                None => Err(Failure::Input("--property is required for a single spec".into())),
            },
            (None, None) => Err(Failure::Input("give a spec file or --corpus".into())),
        },
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Limit(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
