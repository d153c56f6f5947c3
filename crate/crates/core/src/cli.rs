//! The `topobelief` command line.
//!
//! Exit status encodes the verdict: 0 when a formula holds, is valid, a
//! suite is clean or a conversion succeeded; 1 when a formula fails or a
//! countermodel was found; 2 on usage or input errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::error::{Error, Result};
use crate::formula::Formula;
use crate::model::{load, Model, Scenario, ScenarioClass, SubsetModel};
use crate::semantics::{
    eval, find_countermodel, valid_in_model_with_budget, SearchConfig, SearchOutcome,
    SemanticsKind, Witness,
};
use crate::suites::{default_instantiations, get_suite, run_suite, Batch};
use crate::topology::enumerate_topologies;

#[derive(Debug, Parser)]
#[command(
    name = "topobelief",
    version,
    about = "Model checking for knowledge, knowability and belief on finite topological subset models"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate a formula at one scenario of a model.
    Eval {
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        scenario: String,
        #[command(flatten)]
        formula: FormulaArgs,
    },
    /// Check validity of a formula over all scenarios of a class in a model.
    Valid {
        #[arg(long)]
        model: PathBuf,
        #[command(flatten)]
        formula: FormulaArgs,
        #[arg(long, default_value = "all")]
        class: String,
        /// Cap on |opens|^2 * n for scenario enumeration.
        #[arg(long, default_value_t = crate::model::DEFAULT_SCENARIO_BUDGET)]
        budget: u64,
    },
    /// Search for a countermodel, exhaustively first and then at random.
    Countermodel {
        #[command(flatten)]
        formula: FormulaArgs,
        #[arg(long, default_value = "all")]
        class: String,
        /// Largest carrier for the exhaustive phase (at most 4).
        #[arg(long, default_value_t = 3)]
        exhaustive: usize,
        /// Number of random models after the exhaustive phase.
        #[arg(long, default_value_t = 0)]
        models: usize,
        /// Largest carrier for random models.
        #[arg(long = "max-n", default_value_t = 6)]
        max_n: usize,
        /// Maximum number of models examined.
        #[arg(long, default_value_t = 100_000)]
        budget: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the countermodel as a model document.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Run a named axiom suite over a batch of models.
    Suite {
        #[arg(long)]
        name: String,
        #[arg(long, default_value_t = 3)]
        exhaustive: usize,
        #[arg(long, default_value_t = 0)]
        models: usize,
        /// Comma-separated carrier sizes for random models.
        #[arg(long, value_delimiter = ',', default_value = "4,5,6")]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Override the suite's own semantics.
        #[arg(long)]
        semantics: Option<String>,
        /// Override the suite's own scenario class.
        #[arg(long)]
        class: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Convert a transitive relational model into its subset model.
    Convert {
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Split a belief frame into brushes.
    Decompose {
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Count or list every topology on up to N points.
    Enumerate {
        #[arg(long = "max-n", default_value_t = 3)]
        max_n: usize,
        /// Print each topology's open sets.
        #[arg(long)]
        list: bool,
    },
}

#[derive(Debug, Args)]
struct FormulaArgs {
    #[arg(long)]
    formula: String,
    #[arg(long, default_value = "strong")]
    semantics: String,
}

impl FormulaArgs {
    fn parse(&self) -> std::result::Result<(Formula, SemanticsKind), Usage> {
        let f = self
            .formula
            .parse()
            .map_err(|e| Usage::flag("--formula", e))?;
        let k = self
            .semantics
            .parse()
            .map_err(|e| Usage::flag("--semantics", e))?;
        Ok((f, k))
    }
}

/// A failure before or during a command, always reported with exit status 2.
struct Usage(String);

impl Usage {
    fn flag(flag: &str, e: impl std::fmt::Display) -> Usage {
        Usage(format!("invalid {flag}: {e}"))
    }
}

impl From<Error> for Usage {
    fn from(e: Error) -> Usage {
        Usage(e.to_string())
    }
}

impl From<std::io::Error> for Usage {
    fn from(e: std::io::Error) -> Usage {
        Usage(e.to_string())
    }
}

fn parse_class(text: &str) -> std::result::Result<ScenarioClass, Usage> {
    text.parse().map_err(|e| Usage::flag("--class", e))
}

fn check_kind_class(k: SemanticsKind, c: ScenarioClass) -> std::result::Result<(), Usage> {
    if k == SemanticsKind::Strong && c != ScenarioClass::All {
        return Err(Usage(format!("conflicting --semantics strong and --class {c}: strong semantics has no doxastic range")));
    }
    Ok(())
}

fn read_model(path: &Path) -> std::result::Result<Model, Usage> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Usage::flag("--model", format!("{}: {e}", path.display())))?;
    load(&text).map_err(|e| Usage::flag("--model", e))
}

fn read_subset(path: &Path) -> std::result::Result<SubsetModel, Usage> {
    Ok(read_model(path)?.into_subset()?)
}

fn write_witness(out: &mut dyn Write, w: &Witness) -> Result<()> {
    writeln!(out, "scenario: {}", w.scenario)?;
    for step in &w.trace {
        writeln!(out, "  {} is {}", step.formula, step.holds)?;
    }
    Ok(())
}

/// Parses `args` (including the program name) and runs the command,
/// returning the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> std::result::Result<i32, Usage> {
    match command {
        Command::Eval {
            model,
            scenario,
            formula,
        } => {
            let (f, k) = formula.parse()?;
            let s: Scenario = scenario.parse().map_err(|e| Usage::flag("--scenario", e))?;
            let m = read_subset(&model)?;
            let holds = eval(&m, &s, &f, k).map_err(|e| Usage::flag("--scenario", e))?;
            writeln!(out, "{holds}")?;
            Ok(if holds { 0 } else { 1 })
        }
        Command::Valid {
            model,
            formula,
            class,
            budget,
        } => {
            let (f, k) = formula.parse()?;
            let c = parse_class(&class)?;
            check_kind_class(k, c)?;
            let m = read_subset(&model)?;
            let verdict = valid_in_model_with_budget(&m, &f, k, c, budget)?;
            match verdict.witness {
                None => {
                    writeln!(out, "valid")?;
                    Ok(0)
                }
                Some(w) => {
                    writeln!(out, "invalid")?;
                    write_witness(out, &w)?;
                    Ok(1)
                }
            }
        }
        Command::Countermodel {
            formula,
            class,
            exhaustive,
            models,
            max_n,
            budget,
            seed,
            out: path,
            json,
        } => {
            let (f, k) = formula.parse()?;
            let c = parse_class(&class)?;
            check_kind_class(k, c)?;
            let config = SearchConfig {
                exhaustive_max_n: exhaustive,
                random_models: models,
                random_max_n: max_n,
                budget,
                seed,
                ..SearchConfig::default()
            };
            match find_countermodel(&f, k, c, &config)? {
                SearchOutcome::Found(cm) => {
                    let doc = cm.model.dump();
                    if let Some(path) = path {
                        std::fs::write(&path, &doc).map_err(|e| Usage::flag("--out", e))?;
                    }
                    if json {
                        let trace: Vec<_> = cm
                            .witness
                            .trace
                            .iter()
                            .map(|s| serde_json::json!({"formula": s.formula.to_string(), "holds": s.holds}))
                            .collect();
                        let value = serde_json::json!({
                            "formula": f.to_string(),
                            "semantics": k,
                            "class": c,
                            "model": cm.model.to_document(),
                            "scenario": cm.witness.scenario.to_string(),
                            "trace": trace,
                        });
                        writeln!(out, "{value}")?;
                    } else {
                        writeln!(out, "countermodel with {} world(s)", cm.model.size())?;
                        write!(out, "model: {doc}")?;
                        write_witness(out, &cm.witness)?;
                    }
                    Ok(1)
                }
                SearchOutcome::Exhausted {
                    models_checked,
                    complete_through,
                } => {
                    match complete_through {
                        Some(n) => writeln!(
                            out,
                            "no countermodel: none on up to {n} world(s); {models_checked} model(s) checked"
                        )?,
                        None => writeln!(out, "no countermodel found; {models_checked} model(s) checked")?,
                    }
                    Ok(0)
                }
            }
        }
        Command::Suite {
            name,
            exhaustive,
            models,
            sizes,
            seed,
            semantics,
            class,
            json,
        } => {
            let mut suite = get_suite(&name).map_err(|e| Usage::flag("--name", e))?;
            if semantics.is_some() || class.is_some() {
                let k = match &semantics {
                    Some(s) => s.parse().map_err(|e| Usage::flag("--semantics", e))?,
                    None => suite.semantics,
                };
                let c = match &class {
                    Some(c) => parse_class(c)?,
                    None => suite.class,
                };
                check_kind_class(k, c)?;
                suite = suite.under(k, c);
            }
            let batch = Batch {
                exhaustive_max_n: exhaustive,
                random_models: models,
                sizes,
                seed,
                ..Batch::default()
            };
            let report = run_suite(&suite, &batch, &default_instantiations())?;
            if json {
                write!(out, "{}", report.to_json())?;
            } else {
                write!(out, "{}", report.to_table())?;
            }
            Ok(if report.is_clean() { 0 } else { 1 })
        }
        Command::Convert { model, out: path } => {
            let Model::Relational(r) = read_model(&model)? else {
                return Err(Usage::flag(
                    "--model",
                    "expected a relational model document",
                ));
            };
            let doc = r.to_subset_model()?.dump();
            match path {
                Some(p) => std::fs::write(&p, &doc).map_err(|e| Usage::flag("--out", e))?,
                None => write!(out, "{doc}")?,
            }
            Ok(0)
        }
        Command::Decompose { model, json } => {
            let Model::Relational(r) = read_model(&model)? else {
                return Err(Usage::flag(
                    "--model",
                    "expected a relational model document",
                ));
            };
            let d = r.decompose()?;
            if json {
                let comps: Vec<_> = d
                    .components
                    .iter()
                    .map(|c| serde_json::json!({"cell": c.cell.to_vec(), "final_cluster": c.final_cluster.to_vec()}))
                    .collect();
                writeln!(out, "{}", serde_json::json!({ "components": comps }))?;
            } else {
                for c in &d.components {
                    writeln!(out, "cell {} final cluster {}", c.cell, c.final_cluster)?;
                }
            }
            Ok(0)
        }
        Command::Enumerate { max_n, list } => {
            for n in 1..=max_n {
                let all = enumerate_topologies(n).map_err(|e| Usage::flag("--max-n", e))?;
                writeln!(out, "n={n}: {} topologies", all.len())?;
                if list {
                    for t in &all {
                        let opens: Vec<String> = t.opens().iter().map(|o| o.to_string()).collect();
                        writeln!(out, "  {}", opens.join(" "))?;
                    }
                }
            }
            Ok(0)
        }
    }
}
