//! Command-line front end for `basesize`.
//!
//! Every command renders its whole output to a string first, so repeated
//! runs with the same inputs print byte-identical text.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use basesize::bases::stabilizer_chain;
use basesize::graphs::{automorphism_group_with, parse_graph, standard_corpus_with};
use basesize::groups::{ActionCatalog, ReflectionReading};
use basesize::perm::parse_generators;
use basesize::verify::{run_paper_suite, SuiteOptions, DEFAULT_CORPUS_SIZE_BUDGET};
use basesize::{min_base, AbstractGroupSpec, Error, DEFAULT_ELEMENT_BUDGET};
use clap::builder::RangedU64ValueParser;
use clap::{Args, Parser, Subcommand, ValueEnum};

pub const DEFAULT_MAX_POINTS: usize = 40;
pub const DEFAULT_VERTEX_BUDGET: usize = basesize::graphs::DEFAULT_VERTEX_BUDGET;

/// Exit status contract.
pub mod exit {
    pub const OK: u8 = 0;
    pub const CLAIM_FAILURE: u8 = 1;
    pub const USAGE: u8 = 2;
    pub const BUDGET: u8 = 3;
}

fn positive() -> RangedU64ValueParser<usize> {
    RangedU64ValueParser::new().range(1..)
}

#[derive(Debug, Parser)]
#[command(name = "basesize", version, about = "Base sizes of group actions and determining numbers of graphs")]
pub struct Cli {
    #[command(flatten)]
    pub config: RunConfig,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Debug, Args)]
pub struct RunConfig {
    /// Largest total degree of the actions enumerated by `bss`.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_POINTS, value_parser = positive())]
    pub max_points: usize,
    /// Largest group the element enumeration may build.
    #[arg(long, global = true, default_value_t = DEFAULT_ELEMENT_BUDGET, value_parser = positive())]
    pub element_budget: usize,
    /// Largest graph `determining-number` accepts.
    #[arg(long, global = true, default_value_t = DEFAULT_VERTEX_BUDGET, value_parser = positive())]
    pub vertex_budget: usize,
    /// Also write the output to this file.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Print only the headline value (or, for `verify`, the non-passing claims).
    #[arg(long, global = true)]
    pub quiet: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            max_points: DEFAULT_MAX_POINTS,
            element_budget: DEFAULT_ELEMENT_BUDGET,
            vertex_budget: DEFAULT_VERTEX_BUDGET,
            out: None,
            quiet: false,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Minimum base size of the group generated by a permutation file.
    BaseSize { file: PathBuf },
    /// Determining number of a graph file.
    DeterminingNumber { file: PathBuf },
    /// Base sizes over all faithful actions of a group (`Z:d1,d2,...` or `D:n`).
    Bss { group: AbstractGroupSpec },
    /// Determining numbers over the built-in graph corpus for a group.
    DssEvidence {
        group: AbstractGroupSpec,
        /// Largest graph admitted to the corpus.
        #[arg(long, default_value_t = DEFAULT_CORPUS_SIZE_BUDGET, value_parser = positive())]
        size_budget: usize,
    },
    /// Run the claim suite.
    Verify {
        suite: Suite,
        /// Reflection formula for the two-orbit D_pq action.
        #[arg(long, value_enum, default_value_t = Reading::Corrected)]
        reading: Reading,
        /// Write the report as JSON to this file.
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Paper,
    Quick,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Reading {
    Corrected,
    Printed,
}

/// A finished command: the text to print and the exit status.
#[derive(Debug)]
pub struct Outcome {
    pub text: String,
    pub status: u8,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) if e.is_budget() => exit::BUDGET,
            CliError::Core(Error::EmptyCorpus(_)) => exit::BUDGET,
            _ => exit::USAGE,
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|source| CliError::Io { path: path.into(), source })
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

/// `label: a b c`, or just `label:` when empty.
fn list_line<T: ToString>(label: &str, items: impl IntoIterator<Item = T>) -> String {
    let body = join(items, " ");
    if body.is_empty() {
        format!("{label}:\n")
    } else {
        format!("{label}: {body}\n")
    }
}

fn set_text<'a>(s: impl IntoIterator<Item = &'a usize>) -> String {
    format!("{{{}}}", join(s, ","))
}

pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let cfg = &cli.config;
    let outcome = match &cli.command {
        Command::BaseSize { file } => base_size(cfg, file)?,
        Command::DeterminingNumber { file } => determining_number(cfg, file)?,
        Command::Bss { group } => bss(cfg, group)?,
        Command::DssEvidence { group, size_budget } => dss_evidence(cfg, group, *size_budget)?,
        Command::Verify { suite, reading, json } => verify(cfg, *suite, *reading, json.as_deref())?,
    };
    if let Some(path) = &cfg.out {
        write(path, &outcome.text)?;
    }
    Ok(outcome)
}

fn base_size(cfg: &RunConfig, file: &Path) -> Result<Outcome, CliError> {
    let g = parse_generators(&read(file)?)?.with_element_budget(cfg.element_budget);
    let base = min_base(&g)?;
    let text = if cfg.quiet {
        format!("{}\n", base.len())
    } else {
        let mut t = String::new();
        writeln!(t, "base size: {}", base.len()).unwrap();
        t.push_str(&list_line("base", &base.points));
        t.push_str(&list_line("stabilizer chain", stabilizer_chain(&g, &base.points)?));
        writeln!(t, "group order: {}", g.order()?).unwrap();
        writeln!(t, "degree: {}", g.degree()).unwrap();
        t
    };
    Ok(Outcome { text, status: exit::OK })
}

fn determining_number(cfg: &RunConfig, file: &Path) -> Result<Outcome, CliError> {
    let graph = parse_graph(&read(file)?)?;
    let aut = automorphism_group_with(&graph, cfg.vertex_budget, cfg.element_budget)?;
    let base = min_base(&aut)?;
    let text = if cfg.quiet {
        format!("{}\n", base.len())
    } else {
        let mut sizes: Vec<usize> = aut.orbits().iter().map(Vec::len).collect();
        sizes.sort_unstable();
        let mut t = String::new();
        writeln!(t, "determining number: {}", base.len()).unwrap();
        t.push_str(&list_line("determining set", &base.points));
        writeln!(t, "automorphism group order: {}", aut.order()?).unwrap();
        t.push_str(&list_line("orbit sizes", &sizes));
        writeln!(t, "vertices: {}", graph.vertex_count()).unwrap();
        t
    };
    Ok(Outcome { text, status: exit::OK })
}

fn bss(cfg: &RunConfig, group: &AbstractGroupSpec) -> Result<Outcome, CliError> {
    let set = ActionCatalog::for_spec(group, cfg.element_budget)?.base_size_set(cfg.max_points)?;
    let text = if cfg.quiet {
        format!("{}\n", set_text(&set.achieved))
    } else {
        let mut t = String::new();
        writeln!(t, "group: {} (order {})", set.group, set.group_order).unwrap();
        writeln!(t, "max points: {}", set.max_points).unwrap();
        writeln!(t, "faithful actions checked: {}", set.actions_checked).unwrap();
        writeln!(t, "base size set: {}", set_text(&set.achieved)).unwrap();
        writeln!(t, "theoretical upper bound: {}", set.upper_bound).unwrap();
        let cert = if set.certified {
            format!("yes, every value in 1..{} occurs", set.upper_bound)
        } else {
            "no, a larger point budget may add values".to_string()
        };
        writeln!(t, "complete: {cert}").unwrap();
        for w in &set.witnesses {
            writeln!(
                t,
                "witness {}: orbits {} base {}",
                w.base_size,
                join(&w.orbit_sizes, "+"),
                join(&w.base.points, " ")
            )
            .unwrap();
        }
        t
    };
    Ok(Outcome { text, status: exit::OK })
}

fn dss_evidence(cfg: &RunConfig, group: &AbstractGroupSpec, size_budget: usize) -> Result<Outcome, CliError> {
    let corpus = standard_corpus_with(group, size_budget, cfg.element_budget)?;
    let numbers = corpus.determining_numbers();
    let text = if cfg.quiet {
        format!("{}\n", set_text(&numbers))
    } else {
        let mut t = String::new();
        writeln!(t, "group: {} (order {})", group, group.order()).unwrap();
        writeln!(t, "size budget: {size_budget}").unwrap();
        writeln!(t, "graphs: {} verified, {} dropped", corpus.entries.len(), corpus.dropped.len()).unwrap();
        writeln!(t, "determining numbers: {}", set_text(&numbers)).unwrap();
        for e in &corpus.entries {
            writeln!(
                t,
                "graph {}: {} vertices, determining number {}, determining set {}",
                e.label,
                e.graph.vertex_count(),
                e.determining_number(),
                join(&e.determining_set.points, " ")
            )
            .unwrap();
        }
        for d in &corpus.dropped {
            writeln!(t, "dropped {d}").unwrap();
        }
        writeln!(t, "note: a finite corpus gives evidence, not the full determining set").unwrap();
        t
    };
    Ok(Outcome { text, status: exit::OK })
}

fn verify(cfg: &RunConfig, suite: Suite, reading: Reading, json: Option<&Path>) -> Result<Outcome, CliError> {
    let options = SuiteOptions {
        quick: suite == Suite::Quick,
        element_budget: cfg.element_budget,
        reflection_reading: match reading {
            Reading::Corrected => ReflectionReading::Corrected,
            Reading::Printed => ReflectionReading::Printed,
        },
        ..SuiteOptions::default()
    };
    let report = run_paper_suite(&options);
    if let Some(path) = json {
        write(path, &report.to_json())?;
    }
    let failed = report.has_failures();
    let text = if cfg.quiet {
        report
            .claims
            .iter()
            .filter(|c| c.status != basesize::verify::ClaimStatus::Pass)
            .map(|c| c.line() + "\n")
            .collect()
    } else {
        report.to_text()
    };
    Ok(Outcome { text, status: if failed { exit::CLAIM_FAILURE } else { exit::OK } })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> Outcome {
        let cli = Cli::try_parse_from(std::iter::once("basesize").chain(args.iter().copied())).unwrap();
        execute(&cli).unwrap()
    }

    #[test]
    fn bss_examples() {
        assert!(run(&["bss", "Z:4", "--max-points", "8"]).text.contains("base size set: {1}\n"));
        assert!(run(&["bss", "Z:2,2", "--max-points", "4"]).text.contains("base size set: {1,2}\n"));
        assert_eq!(run(&["--quiet", "bss", "D:15"]).text, "{1,2,3}\n");
    }

    #[test]
    fn dss_examples() {
        assert_eq!(run(&["--quiet", "dss-evidence", "D:6"]).text, "{1,2,3}\n");
        assert_eq!(run(&["--quiet", "dss-evidence", "D:9"]).text, "{1,2}\n");
    }

    #[test]
    fn bad_arguments_are_usage_errors() {
        assert!(Cli::try_parse_from(["basesize", "verify", "bogus"]).is_err());
        assert!(Cli::try_parse_from(["basesize", "bss", "Q:3"]).is_err());
        assert!(Cli::try_parse_from(["basesize", "--max-points", "0", "bss", "D:3"]).is_err());
    }

    #[test]
    fn budget_errors_map_to_exit_3() {
        let cli = Cli::try_parse_from(["basesize", "--element-budget", "5", "bss", "D:15"]).unwrap();
        assert_eq!(execute(&cli).unwrap_err().exit_code(), exit::BUDGET);
    }
}
