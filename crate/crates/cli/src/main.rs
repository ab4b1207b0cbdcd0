//! Command-line front end: completion, involutivity checking, the
//! benchmark harness, randomized axiom verification, and Hilbert data.
//!
//! Exit codes: 0 success, 1 usage or input errors, 2 cap exceeded,
//! 3 benchmark mismatch under --strict.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use involutive::completion::{
    complete, default_completion_order, first_failing_prolongation, Limits,
};
use involutive::division::{axiom_check, DivisionKind, SubsetMode};
use involutive::hilbert::HilbertData;
use involutive::monomial::{parse_monomial_set, MonomialSet, OrderingKind};
use involutive::random::{random_monomial_set, SetBounds};
use involutive_cli::{render_csv, render_json, render_markdown, run_bench};

#[derive(Parser)]
#[command(name = "involutive", version, about = "Minimal involutive bases of monomial ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    /// The division's natural completion ordering.
    Auto,
    Lex,
    Deglex,
    Degrevlex,
}

impl OrderArg {
    fn resolve(self, kind: DivisionKind) -> OrderingKind {
        match self {
            OrderArg::Auto => default_completion_order(kind),
            OrderArg::Lex => OrderingKind::Lex,
            OrderArg::Deglex => OrderingKind::DegLex,
            OrderArg::Degrevlex => OrderingKind::DegRevLex,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum TextFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Markdown,
    Csv,
    Json,
}

#[derive(Args)]
struct DivisionArg {
    /// Involutive division: thomas, janet, pommaret, div1, div2, ind-lex,
    /// ind-deglex, ind-degrevlex.
    #[arg(long, value_parser = DivisionKind::from_str)]
    division: DivisionKind,
}

#[derive(Args)]
struct LimitArgs {
    /// Degree cap; default is twice the maximal input degree plus the arity.
    #[arg(long)]
    max_degree: Option<u32>,
    /// Element cap; default 50000.
    #[arg(long)]
    max_elements: Option<usize>,
}

impl LimitArgs {
    fn to_limits(&self) -> Limits {
        Limits::new(self.max_degree, self.max_elements)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Complete a monomial set to its minimal involutive basis.
    Complete {
        /// Input file in the text monomial format.
        input: PathBuf,
        #[command(flatten)]
        division: DivisionArg,
        #[arg(long, value_enum, default_value_t = OrderArg::Auto)]
        order: OrderArg,
        #[command(flatten)]
        limits: LimitArgs,
        #[arg(long, value_enum, default_value_t = TextFormat::Text)]
        format: TextFormat,
        /// Write the result here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide whether a monomial set is already involutive.
    Check {
        input: PathBuf,
        #[command(flatten)]
        division: DivisionArg,
    },
    /// Run the embedded benchmark fixtures and compare with the reference
    /// table.
    Bench {
        /// Comma-separated fixture names (default: all).
        #[arg(long, value_delimiter = ',')]
        fixtures: Option<Vec<String>>,
        /// Comma-separated division names (default: all eight).
        #[arg(long = "division", value_delimiter = ',', value_parser = DivisionKind::from_str)]
        divisions: Option<Vec<DivisionKind>>,
        #[arg(long, value_enum, default_value_t = TableFormat::Markdown)]
        format: TableFormat,
        /// Exit with status 3 when a basis length deviates from the table.
        #[arg(long)]
        strict: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify the involutive-division axioms on random monomial sets.
    Axioms {
        #[command(flatten)]
        division: DivisionArg,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        max_vars: usize,
        #[arg(long, default_value_t = 12)]
        max_size: usize,
        #[arg(long, default_value_t = 6)]
        max_degree: u32,
        /// Random subsets drawn per set for condition (d).
        #[arg(long, default_value_t = 16)]
        subset_samples: usize,
    },
    /// Complete the input and print its Hilbert function, Hilbert
    /// polynomial, and index of regularity.
    Hilbert {
        input: PathBuf,
        #[command(flatten)]
        division: DivisionArg,
        /// Largest degree tabulated.
        #[arg(long, default_value_t = 10)]
        degree_bound: u32,
        #[command(flatten)]
        limits: LimitArgs,
        #[arg(long, value_enum, default_value_t = TextFormat::Text)]
        format: TextFormat,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // --help and --version are not errors.
            if err.use_stderr() {
                eprintln!("{err}");
                return ExitCode::from(1);
            }
            print!("{err}");
            return ExitCode::SUCCESS;
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}

fn read_input(path: &PathBuf) -> anyhow::Result<MonomialSet> {
    let text = fs::read_to_string(path)
        .map_err(|e| anyhow::anyhow!("cannot read {}: {e}", path.display()))?;
    parse_monomial_set(&text, OrderingKind::Lex)
        .map_err(|e| anyhow::anyhow!("{}: {e}", path.display()))
}

fn emit(out: Option<&PathBuf>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| anyhow::anyhow!("cannot write {}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Complete { input, division, order, limits, format, out } => {
            let set = read_input(&input)?;
            let order = order.resolve(division.division);
            match complete(&set, division.division, order, limits.to_limits()) {
                Ok(result) => {
                    let text = match format {
                        TextFormat::Json => {
                            let mut s = serde_json::to_string_pretty(&result)?;
                            s.push('\n');
                            s
                        }
                        TextFormat::Text => {
                            let mut s = result.basis.to_string();
                            let st = &result.stats;
                            writeln!(
                                s,
                                "# division: {}, ordering: {}",
                                result.division.cli_name(),
                                result.completion_order
                            )?;
                            writeln!(
                                s,
                                "# examined: {}, reducible: {}, added: {}, elapsed: {:.3}s",
                                st.examined,
                                st.reducible,
                                st.added,
                                st.elapsed.as_secs_f64()
                            )?;
                            s
                        }
                    };
                    emit(out.as_ref(), &text)?;
                    Ok(ExitCode::SUCCESS)
                }
                Err(err) => {
                    eprintln!("error: {err}");
                    Ok(ExitCode::from(2))
                }
            }
        }
        Command::Check { input, division } => {
            let set = read_input(&input)?;
            match first_failing_prolongation(&set, division.division) {
                None => {
                    println!("involutive: yes");
                }
                Some((base, var, prolongation)) => {
                    println!("involutive: no");
                    println!(
                        "first failing prolongation: {prolongation} (= {base} * x{})",
                        var + 1
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Bench { fixtures, divisions, format, strict, out } => {
            let report = run_bench(fixtures.as_deref(), divisions.as_deref())
                .map_err(|e| anyhow::anyhow!(e))?;
            let text = match format {
                TableFormat::Markdown => render_markdown(&report),
                TableFormat::Csv => render_csv(&report),
                TableFormat::Json => {
                    let mut s = render_json(&report);
                    s.push('\n');
                    s
                }
            };
            emit(out.as_ref(), &text)?;
            let mismatches = report.mismatches();
            if !mismatches.is_empty() {
                for cell in &mismatches {
                    eprintln!(
                        "mismatch: {} under {} (expected length {:?})",
                        cell.fixture,
                        cell.division.cli_name(),
                        cell.expected_length
                    );
                }
                if strict {
                    return Ok(ExitCode::from(3));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Axioms {
            division,
            trials,
            seed,
            max_vars,
            max_size,
            max_degree,
            subset_samples,
        } => {
            let bounds = SetBounds { max_vars, max_size, max_degree };
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut passes = 0usize;
            let mut first_failure = None;
            for trial in 0..trials {
                let set = random_monomial_set(&mut rng, bounds, OrderingKind::Lex);
                let report = axiom_check(
                    division.division,
                    &set,
                    SubsetMode::Random { samples: subset_samples, seed: seed ^ trial as u64 },
                );
                if report.pass {
                    passes += 1;
                } else if first_failure.is_none() {
                    first_failure = Some((trial, set.clone(), report));
                }
            }
            println!(
                "division {}: {passes}/{trials} random sets pass conditions (b), (c), (d) [seed {seed}]",
                division.division.cli_name()
            );
            if division.division.is_global() {
                println!("condition (d) is vacuous: the division ignores the ambient set");
            }
            match first_failure {
                None => Ok(ExitCode::SUCCESS),
                Some((trial, set, report)) => {
                    println!("first counterexample at trial {trial}:");
                    println!("{set}");
                    println!("{}", serde_json::to_string_pretty(&report)?);
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Hilbert { input, division, degree_bound, limits, format } => {
            let set = read_input(&input)?;
            let order = default_completion_order(division.division);
            match complete(&set, division.division, order, limits.to_limits()) {
                Ok(result) => {
                    let data = HilbertData::from_result(&result);
                    let values = data.table(degree_bound);
                    let (poly, regularity) = data.hilbert_polynomial();
                    let text = match format {
                        TextFormat::Json => {
                            let coeffs: Vec<String> =
                                poly.coeffs.iter().map(|c| c.to_string()).collect();
                            let json = serde_json::json!({
                                "division": result.division.cli_name(),
                                "hilbert_function": values
                                    .iter()
                                    .map(|v| v.to_string())
                                    .collect::<Vec<_>>(),
                                "hilbert_polynomial": poly.to_string(),
                                "coefficients": coeffs,
                                "index_of_regularity": regularity,
                            });
                            let mut s = serde_json::to_string_pretty(&json)?;
                            s.push('\n');
                            s
                        }
                        TextFormat::Text => {
                            let mut s = String::from("s\tHF(s)\n");
                            for (deg, value) in values.iter().enumerate() {
                                writeln!(s, "{deg}\t{value}")?;
                            }
                            writeln!(s, "hilbert polynomial: {poly}")?;
                            let coeffs: Vec<String> =
                                poly.coeffs.iter().map(|c| c.to_string()).collect();
                            writeln!(s, "coefficients (constant first): [{}]", coeffs.join(", "))?;
                            writeln!(s, "index of regularity: {regularity}")?;
                            s
                        }
                    };
                    print!("{text}");
                    Ok(ExitCode::SUCCESS)
                }
                Err(err) => {
                    eprintln!("error: {err}");
                    Ok(ExitCode::from(2))
                }
            }
        }
    }
}
