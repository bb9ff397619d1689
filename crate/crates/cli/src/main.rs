use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use hyperdeg::format::{
    format_degree_sequence, format_hypergraph, format_tripartite, format_tripartite_sequence,
    parse_degree_text, parse_hypergraph_text, HypergraphInput, SequenceInput,
};
use hyperdeg::gen::{random_general, random_tripartite};
use hyperdeg::tripartite::{self, extreme_spec_for};
use hyperdeg::{
    classify, complement_tripartite, conjectured_constant, oracle_general, oracle_tripartite,
    realize_hypergraph, realize_tripartite, verify_realization, verify_tripartite_realization,
    Budget, Class, Error, Verdict,
};

#[derive(Parser, Debug)]
#[command(
    version,
    about = "Realize degree sequences by simple 3-uniform hypergraphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Realize a general degree sequence (one line, at least 45 vertices).
    Realize {
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Print the phase summary to stderr.
        #[arg(long)]
        explain: bool,
    },
    /// Realize a tripartite degree sequence (lines `A:`, `B:`, `C:`).
    Realize3 {
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Print the flip trace to stderr.
        #[arg(long)]
        trace: bool,
        /// Print the extreme sequence and construction case to stderr.
        #[arg(long)]
        explain: bool,
    },
    /// Check that a hypergraph file realizes a degree file.
    Verify {
        sequence: PathBuf,
        hypergraph: PathBuf,
    },
    /// Decide graphicality by exhaustive search.
    Oracle {
        input: PathBuf,
        /// Write the witness here when the sequence is graphic.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Maximum number of search nodes.
        #[arg(long, default_value_t = 100_000_000)]
        budget: u64,
        /// Wall-clock limit in seconds.
        #[arg(long, default_value_t = 600)]
        seconds: u64,
    },
    /// Complement a tripartite hypergraph inside the complete one.
    Complement {
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Write a random degree file inside a constructor's domain.
    Gen {
        #[arg(value_enum)]
        mode: GenMode,
        /// Class size (tripartite) or vertex count (general).
        #[arg(short, long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print the threshold constant of the conjectured degree window.
    Constant,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum GenMode {
    Tripartite,
    General,
}

/// A failed run: process exit code plus message.
struct Failure {
    code: u8,
    message: String,
}

const INPUT: u8 = 1;
const NOT_GRAPHIC: u8 = 2;
const BUDGET: u8 = 3;
const INTERNAL: u8 = 4;

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if e.is_internal() { INTERNAL } else { INPUT };
        Failure::new(code, e.to_string())
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::new(INPUT, format!("{}: {e}", path.display())))
}

fn read_sequence(path: &Path) -> Result<SequenceInput, Failure> {
    parse_degree_text(&read(path)?)
        .map_err(|e| Failure::new(INPUT, format!("{}: {e}", path.display())))
}

fn write(output: Option<&Path>, text: &str) -> Result<(), Failure> {
    match output {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::new(INPUT, format!("{}: {e}", path.display()))),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::new(INPUT, format!("stdout: {e}"))),
    }
}

/// A constructor's output that fails verification is a bug, not bad input.
fn require_realization(verdict: Result<Verdict, Error>) -> Result<(), Failure> {
    match verdict {
        Ok(Verdict::Realizes) => Ok(()),
        Ok(other) => Err(Failure::new(
            INTERNAL,
            format!("construction failed verification: {other}"),
        )),
        Err(e) => Err(Failure::new(
            INTERNAL,
            format!("construction failed verification: {e}"),
        )),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Realize {
            input,
            output,
            explain,
        } => {
            let SequenceInput::General(d) = read_sequence(&input)? else {
                return Err(Failure::new(
                    INPUT,
                    "realize takes a one-line general sequence; use realize3",
                ));
            };
            let (h, plan) = realize_hypergraph(&d)?;
            require_realization(verify_realization(&h, &d))?;
            if explain {
                eprintln!("{plan}");
            }
            write(output.as_deref(), &format_hypergraph(&h))
        }
        Command::Realize3 {
            input,
            output,
            trace,
            explain,
        } => {
            let SequenceInput::Tripartite(d) = read_sequence(&input)? else {
                return Err(Failure::new(
                    INPUT,
                    "realize3 takes a sequence with lines A:, B:, C:",
                ));
            };
            let (h, flips) = realize_tripartite(&d)?;
            require_realization(verify_tripartite_realization(&h, &d))?;
            if explain {
                let n = tripartite::check_domain(&d)?;
                let spec = extreme_spec_for(d.sums()[0], n)?;
                eprintln!("extreme sequence: {spec}");
                eprintln!("case: {}", classify(&spec));
                for class in Class::TRIPARTITE {
                    eprintln!("flips in class {class}: {}", flips.count_in(class));
                }
            }
            if trace {
                eprint!("{flips}");
            }
            write(output.as_deref(), &format_tripartite(&h))
        }
        Command::Verify {
            sequence,
            hypergraph,
        } => {
            let d = read_sequence(&sequence)?;
            let h = parse_hypergraph_text(&read(&hypergraph)?)
                .map_err(|e| Failure::new(INPUT, format!("{}: {e}", hypergraph.display())))?;
            let verdict = match (&h, &d) {
                (HypergraphInput::General(h), SequenceInput::General(d)) => {
                    verify_realization(h, d)?
                }
                (HypergraphInput::Tripartite(h), SequenceInput::Tripartite(d)) => {
                    verify_tripartite_realization(h, d)?
                }
                _ => return Err(Failure::new(INPUT, "hypergraph and sequence kinds differ")),
            };
            if verdict.is_realization() {
                println!("{verdict}");
                Ok(())
            } else {
                Err(Failure::new(INPUT, verdict.to_string()))
            }
        }
        Command::Oracle {
            input,
            output,
            budget,
            seconds,
        } => {
            let budget = Budget {
                max_nodes: budget,
                max_time: Duration::from_secs(seconds),
            };
            let (graphic, timed_out, nodes, witness) = match read_sequence(&input)? {
                SequenceInput::General(d) => {
                    let r = oracle_general(&d, budget);
                    let w = r.witness.as_ref().map(format_hypergraph);
                    (r.graphic, r.timed_out, r.nodes_explored, w)
                }
                SequenceInput::Tripartite(d) => {
                    let r = oracle_tripartite(&d, budget);
                    let w = r.witness.as_ref().map(format_tripartite);
                    (r.graphic, r.timed_out, r.nodes_explored, w)
                }
            };
            if timed_out {
                return Err(Failure::new(
                    BUDGET,
                    format!("budget exhausted after {nodes} nodes"),
                ));
            }
            if !graphic {
                println!("not graphic ({nodes} nodes)");
                return Err(Failure::new(NOT_GRAPHIC, "not graphic"));
            }
            println!("graphic ({nodes} nodes)");
            if let (Some(path), Some(w)) = (output, witness) {
                write(Some(&path), &w)?;
            }
            Ok(())
        }
        Command::Complement { input, output } => {
            let h = match parse_hypergraph_text(&read(&input)?)
                .map_err(|e| Failure::new(INPUT, format!("{}: {e}", input.display())))?
            {
                HypergraphInput::Tripartite(h) => h,
                HypergraphInput::General(_) => {
                    return Err(Failure::new(
                        INPUT,
                        "complement takes a tripartite hypergraph",
                    ))
                }
            };
            write(
                output.as_deref(),
                &format_tripartite(&complement_tripartite(&h)?),
            )
        }
        Command::Gen {
            mode,
            n,
            seed,
            output,
        } => {
            let text = match mode {
                GenMode::Tripartite => format_tripartite_sequence(&random_tripartite(n, seed)?),
                GenMode::General => format_degree_sequence(&random_general(n, seed)?),
            };
            write(output.as_deref(), &text)
        }
        Command::Constant => {
            println!("{:.9}", conjectured_constant());
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
