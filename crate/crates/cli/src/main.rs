use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use extremal_core::oracle::{DEFAULT_BUDGET, DEFAULT_MAX_ORDER};
use extremal_core::{
    build_backbone, diameter, enumerate_family, extremality, from_graph6, max_size,
    max_size_bruteforce, sweep, to_dot, to_edge_list, to_graph6, verify_theorem,
    vertex_connectivity, Error, FormulaMode, Graph, OracleConfig, OracleReport, Parameters,
};
use serde_json::json;

const EXIT_USAGE: u8 = 1;
const EXIT_INVALID: u8 = 2;
const EXIT_MISMATCH: u8 = 3;
const EXIT_CAPACITY: u8 = 4;

/// Maximum-size k-connected graphs of given order and diameter.
#[derive(Debug, Parser)]
#[command(name = "extremal", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the closed-form maximum size.
    Formula {
        #[command(flatten)]
        instance: Instance,
        #[arg(long, value_enum, default_value_t = Mode::Corrected)]
        mode: Mode,
    },
    /// Print the backbone sequential join for k and d.
    Backbone {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
    },
    /// Print the extremal family, one graph per record, in canonical order.
    Family {
        #[command(flatten)]
        instance: Instance,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
    },
    /// Measure graph6 lines and classify them against the extremal family.
    Check {
        #[arg(long)]
        k: usize,
        /// File of graph6 lines, or `-` for standard input.
        #[arg(long, default_value = "-")]
        input: String,
    },
    /// Exhaustively compute the maximum size.
    Oracle {
        #[command(flatten)]
        instance: Instance,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        emit_extremal: bool,
        #[command(flatten)]
        limits: Limits,
    },
    /// Compare the exhaustive maximum with the formula and the family.
    Verify {
        #[command(flatten)]
        instance: Instance,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        limits: Limits,
    },
    /// Verify every valid instance up to the given bounds.
    Sweep {
        #[arg(long)]
        n_max: usize,
        /// Defaults to n-max.
        #[arg(long)]
        k_max: Option<usize>,
        /// Defaults to n-max - 1.
        #[arg(long)]
        d_max: Option<usize>,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        limits: Limits,
    },
}

#[derive(Debug, Args)]
struct Instance {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    d: usize,
}

impl Instance {
    fn params(&self) -> Result<Parameters, Error> {
        Parameters::new(self.n, self.k, self.d)
    }
}

#[derive(Debug, Args)]
struct Limits {
    /// Largest order the exhaustive search accepts (at most 10).
    #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
    max_order: usize,
    /// Candidate complements examined before giving up.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
}

impl Limits {
    fn config(&self) -> OracleConfig {
        OracleConfig {
            max_order: self.max_order,
            budget: self.budget,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Mode {
    Corrected,
    PaperLiteral,
}

impl From<Mode> for FormulaMode {
    fn from(mode: Mode) -> Self {
        match mode {
            Mode::Corrected => FormulaMode::Corrected,
            Mode::PaperLiteral => FormulaMode::PaperLiteral,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Edgelist,
    Dot,
}

#[derive(Debug)]
enum CliError {
    Core(Error),
    Io(io::Error),
    Input(String),
    Mismatch,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(Error::Capacity { .. } | Error::Budget { .. }) => EXIT_CAPACITY,
            CliError::Core(_) | CliError::Input(_) => EXIT_INVALID,
            CliError::Io(_) => EXIT_USAGE,
            CliError::Mismatch => EXIT_MISMATCH,
        }
    }
}

fn render(g: &Graph, format: Format) -> Result<String, Error> {
    Ok(match format {
        Format::Graph6 => to_graph6(g)?,
        Format::Edgelist => to_edge_list(g),
        Format::Dot => to_dot(g),
    })
}

fn render_all(graphs: &[Graph], format: Format) -> Result<String, Error> {
    let parts = graphs
        .iter()
        .map(|g| render(g, format))
        .collect::<Result<Vec<_>, _>>()?;
    let sep = match format {
        Format::Graph6 => "\n",
        Format::Edgelist | Format::Dot => "\n\n",
    };
    Ok(parts.join(sep))
}

fn report_line(r: &OracleReport) -> String {
    let max = r
        .max_size
        .map_or_else(|| "infeasible".to_string(), |m| m.to_string());
    format!(
        "n={} k={} d={} max={max} corrected={} paper_literal={} corrected_match={} paper_literal_match={} family_match={} classes={}",
        r.params.n,
        r.params.k,
        r.params.d,
        r.corrected_bound,
        r.paper_literal_bound,
        r.corrected_match,
        r.paper_literal_match,
        r.family_match,
        r.extremal.len()
    )
}

fn emit_report(out: &mut impl Write, r: &OracleReport, as_json: bool) -> Result<(), CliError> {
    if as_json {
        writeln!(
            out,
            "{}",
            serde_json::to_string(r).expect("report serialises")
        )?;
    } else {
        writeln!(out, "{}", report_line(r))?;
    }
    Ok(())
}

fn read_input(input: &str) -> Result<String, CliError> {
    let mut text = String::new();
    if input == "-" {
        io::stdin().read_to_string(&mut text)?;
    } else {
        text = fs::read_to_string(input)?;
    }
    Ok(text)
}

fn check_lines(out: &mut impl Write, text: &str, k: usize) -> Result<(), CliError> {
    writeln!(
        out,
        "graph6\torder\tsize\tdiameter\tkappa\textremal\tverdict"
    )?;
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let g = from_graph6(line.as_bytes())
            .map_err(|e| CliError::Input(format!("line {}: {e}", lineno + 1)))?;
        let (diam, kappa) = if g.order() == 0 {
            ("-".to_string(), "-".to_string())
        } else {
            (
                diameter(&g)?.to_string(),
                vertex_connectivity(&g)?.kappa.to_string(),
            )
        };
        let verdict = extremality(&g, k)?;
        writeln!(
            out,
            "{line}\t{}\t{}\t{diam}\t{kappa}\t{}\t{verdict}",
            g.order(),
            g.size(),
            verdict.is_extremal()
        )?;
    }
    Ok(())
}

fn run(command: Command, out: &mut impl Write) -> Result<(), CliError> {
    match command {
        Command::Formula { instance, mode } => {
            writeln!(out, "{}", max_size(instance.params()?, mode.into()))?;
        }
        Command::Backbone { k, d, format } => {
            let (t, _) = build_backbone(k, d)?;
            writeln!(out, "{}", render(&t, format)?)?;
        }
        Command::Family { instance, format } => {
            let family = enumerate_family(instance.params()?)?;
            writeln!(out, "{}", render_all(&family, format)?)?;
        }
        Command::Check { k, input } => {
            if k == 0 {
                return Err(Error::Domain("k must be at least 1".into()).into());
            }
            let text = read_input(&input)?;
            check_lines(out, &text, k)?;
        }
        Command::Oracle {
            instance,
            json,
            emit_extremal,
            limits,
        } => {
            let result = max_size_bruteforce(instance.params()?, &limits.config())?;
            let extremal: Vec<String> = result.extremal.iter().map(|c| c.to_string()).collect();
            if json {
                let mut doc = json!({
                    "schema_version": 1,
                    "params": result.params,
                    "max_size": result.max_size,
                    "complement_level": result.complement_level,
                    "classes": extremal.len(),
                    "labelled_maximisers": result.labelled_maximisers,
                    "candidates_examined": result.candidates_examined,
                });
                if emit_extremal {
                    doc["extremal"] = json!(extremal);
                }
                writeln!(out, "{doc}")?;
            } else {
                match result.max_size {
                    Some(m) => writeln!(out, "{m}")?,
                    None => writeln!(out, "infeasible")?,
                }
                if emit_extremal {
                    for code in &extremal {
                        writeln!(out, "{code}")?;
                    }
                }
            }
        }
        Command::Verify {
            instance,
            json,
            limits,
        } => {
            let report = verify_theorem(instance.params()?, &limits.config())?;
            emit_report(out, &report, json)?;
            if !report.is_consistent() {
                return Err(CliError::Mismatch);
            }
        }
        Command::Sweep {
            n_max,
            k_max,
            d_max,
            json,
            limits,
        } => {
            let k_max = k_max.unwrap_or(n_max);
            let d_max = d_max.unwrap_or(n_max.saturating_sub(1));
            let reports = sweep(n_max, k_max, d_max, &limits.config())?;
            for r in &reports {
                emit_report(out, r, json)?;
            }
            if !reports.iter().all(OracleReport::is_consistent) {
                return Err(CliError::Mismatch);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli.command, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            let _ = out.flush();
            match &err {
                CliError::Core(e) => eprintln!("error: {e}"),
                CliError::Io(e) => eprintln!("error: {e}"),
                CliError::Input(msg) => eprintln!("error: {msg}"),
                CliError::Mismatch => eprintln!("error: verification mismatch"),
            }
            ExitCode::from(err.exit_code())
        }
    }
}
