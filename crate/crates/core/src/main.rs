use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use statesurf::corpus;
use statesurf::diagram::LinkDiagram;
use statesurf::export;
use statesurf::jones;
use statesurf::report::{self, JonesOutput};
use statesurf::state::{self, KauffmanState};
use statesurf::{Error, DEFAULT_CAP};

const CAP_VAR: &str = "STATESURF_CAP";

const EXIT_FAIL: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_CAP: u8 = 3;
const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(
    name = "statesurf",
    version,
    about = "Fiber detection for state surfaces of link diagrams"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one Kauffman state of a diagram.
    Analyze {
        #[command(flatten)]
        input: Input,
        /// all-a, all-b, seifert, or a literal such as AAB.
        #[arg(long, default_value = "all-a")]
        state: String,
        /// Include the Jones polynomial.
        #[arg(long)]
        jones: bool,
        #[command(flatten)]
        opts: Opts,
    },
    /// Jones polynomial and its extreme coefficients.
    Jones {
        #[command(flatten)]
        input: Input,
        /// Compare the coefficients with the checkerboard fiber verdicts.
        #[arg(long)]
        check_corollary: bool,
        #[command(flatten)]
        opts: Opts,
    },
    /// Export the state graph and its reduction.
    Graph {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "all-a")]
        state: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Check every corpus fixture against its expected values.
    Corpus {
        /// Only fixtures whose name contains this text.
        #[arg(long)]
        filter: Option<String>,
        /// Corpus file to use instead of the bundled one.
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[command(flatten)]
        opts: Opts,
    },
}

#[derive(Args)]
struct Input {
    /// PD code or JSON diagram; read from standard input when absent.
    pd: Option<String>,
    /// Read the diagram from a file.
    #[arg(long, conflicts_with = "pd")]
    file: Option<PathBuf>,
}

#[derive(Args)]
struct Opts {
    /// Human-readable table instead of JSON.
    #[arg(long)]
    pretty: bool,
    /// Largest crossing count for the state sum.
    #[arg(long)]
    cap: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::CapExceeded { .. } => EXIT_CAP,
            Error::Overflow | Error::ZeroPolynomial => EXIT_FAIL,
            _ => EXIT_INPUT,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

fn read_diagram(input: &Input) -> Result<LinkDiagram, Failure> {
    let text = match (&input.pd, &input.file) {
        (Some(pd), _) => pd.clone(),
        (None, Some(path)) => std::fs::read_to_string(path)
            .map_err(|e| fail(EXIT_INPUT, format!("{}: {e}", path.display())))?,
        (None, None) => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| fail(EXIT_INPUT, format!("stdin: {e}")))?;
            s
        }
    };
    Ok(LinkDiagram::parse_any(&text)?)
}

fn cap(opts: &Opts) -> Result<usize, Failure> {
    if let Some(c) = opts.cap {
        return Ok(c);
    }
    match std::env::var(CAP_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| fail(EXIT_USAGE, format!("{CAP_VAR}={v} is not a crossing count"))),
        Err(_) => Ok(DEFAULT_CAP),
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Analyze {
            input,
            state,
            jones,
            opts,
        } => {
            let d = read_diagram(&input)?;
            let sigma = KauffmanState::select(&d, &state)?;
            let jones_cap = if jones { Some(cap(&opts)?) } else { None };
            let r = report::analyze(&d, &sigma, jones_cap)?;
            if opts.pretty {
                print!("{}", r.to_pretty());
            } else {
                println!("{}", r.to_json());
            }
            Ok(0)
        }
        Command::Jones {
            input,
            check_corollary,
            opts,
        } => {
            let d = read_diagram(&input)?;
            let cap = cap(&opts)?;
            let report = jones::extract_coefficients(&jones::jones_polynomial(&d, cap)?)?;
            let corollary = if check_corollary {
                match jones::check_corollary(&d, cap) {
                    Ok(c) => Some(c),
                    Err(Error::Preconditions(why)) => {
                        eprintln!("{why}");
                        None
                    }
                    Err(e) => return Err(e.into()),
                }
            } else {
                None
            };
            let consistent = corollary.as_ref().is_none_or(|c| c.consistent());
            let out = JonesOutput {
                jones: report,
                corollary,
            };
            if opts.pretty {
                print!("{}", out.to_pretty());
            } else {
                println!("{}", out.to_json());
            }
            if !consistent {
                return Err(fail(EXIT_FAIL, "corollary check failed"));
            }
            Ok(0)
        }
        Command::Graph {
            input,
            state,
            format,
        } => {
            let d = read_diagram(&input)?;
            let sigma = KauffmanState::select(&d, &state)?;
            let g = state::state_graph(&d, &sigma)?;
            let reduced = g.reduce();
            match format {
                Format::Dot => {
                    print!("{}", export::state_graph_dot(&g, "G"));
                    print!("{}", export::reduced_graph_dot(&reduced, "G_reduced"));
                }
                Format::Json => println!("{}", export::graphs_json(&g, &reduced)),
            }
            Ok(0)
        }
        Command::Corpus {
            filter,
            corpus: path,
            opts,
        } => {
            let cap = cap(&opts)?;
            let mut fixtures = match &path {
                Some(p) => {
                    let text = std::fs::read_to_string(p)
                        .map_err(|e| fail(EXIT_INPUT, format!("{}: {e}", p.display())))?;
                    corpus::load_corpus_from_str(&text)?
                }
                None => corpus::load_corpus()?,
            };
            if let Some(f) = &filter {
                fixtures.retain(|x| x.name.contains(f.as_str()));
            }
            let report = corpus::run_sweep(&fixtures, cap);
            if opts.pretty {
                for m in &report.mismatches {
                    println!(
                        "MISMATCH {} {}: expected {}, got {}",
                        m.fixture, m.key, m.expected, m.actual
                    );
                }
                println!(
                    "{} fixtures, {} values checked, {} mismatches",
                    report.fixtures,
                    report.checked,
                    report.mismatches.len()
                );
            } else {
                println!(
                    "{}",
                    serde_json::to_string(&report).expect("report serializes")
                );
            }
            Ok(if report.passed() { 0 } else { EXIT_FAIL })
        }
    }
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
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
