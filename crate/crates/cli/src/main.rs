use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use pogp::bijections::{
    av123r_to_partition, av31213_to_gpartition, av3123_to_bicolored, av312_to_partition,
    bicolored_to_av3123, gpartition_to_av31213, partition_to_av123r, partition_to_av312,
};
use pogp::enumeration::{avoiders, count_avoiders, count_sequence, max_length, witness_difference};
use pogp::equivalence::{
    brute_equivalent, default_oracle_bound, equivalent, EquivalenceVerdict, Method,
};
use pogp::pattern::count_occurrences;
use pogp::series::{exp_integral, k_sigma_k_counts};
use pogp::{CountSeq, Error, Permutation, Pogp, Result};

mod self_check;

#[derive(Parser)]
#[command(
    name = "pogp",
    version,
    about = "Partially ordered generalized permutation patterns"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Show the structure of a pattern.
    Parse {
        pattern: Pogp,
        #[arg(long)]
        json: bool,
    },
    /// Count occurrences of a pattern in a permutation.
    Occurrences {
        pattern: Pogp,
        permutation: Permutation,
    },
    /// Count (or list) the permutations of length N avoiding every pattern.
    Avoiders {
        #[arg(required = true)]
        patterns: Vec<Pogp>,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        list: bool,
    },
    /// Avoider counts for lengths 0..=N.
    CountSequence {
        #[arg(required = true)]
        patterns: Vec<Pogp>,
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Shortest, lexicographically first permutation avoiding exactly one pattern.
    Witness {
        first: Pogp,
        second: Pogp,
        #[arg(long)]
        max_n: usize,
    },
    /// Avoider counts of k-σ or k-σ-k from those of a contiguous σ.
    Egf {
        #[arg(long)]
        sigma: Pogp,
        #[arg(long, value_enum)]
        shape: Shape,
        #[arg(long)]
        max_n: usize,
        /// Avoider counts of σ for n = 0, 1, ... instead of brute force.
        #[arg(long)]
        f_terms: Option<CountSeq>,
        #[arg(long)]
        json: bool,
    },
    /// Map between combinatorial objects and avoiders.
    Bijection {
        #[arg(value_enum)]
        kind: BijectionKind,
        /// `fwd` maps the object to a permutation, `inv` the reverse.
        #[arg(long, value_enum)]
        direction: Direction,
        input: String,
    },
    /// Apply ψ or its inverse.
    Psi {
        permutation: Permutation,
        #[arg(long)]
        inverse: bool,
    },
    /// Decide whether two patterns have the same avoiders.
    Equiv {
        first: Pogp,
        second: Pogp,
        #[arg(long, value_enum, default_value_t = EquivMethod::Classify)]
        method: EquivMethod,
        /// Oracle bound; defaults to the longer pattern length plus two.
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Expand repeated letters into all tie-breakings.
    Linearize { pattern: Pogp },
    /// Reproduce the reference values and print a pass/fail table.
    #[command(hide = true)]
    SelfCheck,
}

#[derive(Clone, Copy, ValueEnum)]
enum Shape {
    KSigma,
    KSigmaK,
}

#[derive(Clone, Copy, ValueEnum)]
enum BijectionKind {
    #[value(name = "set-312")]
    Set312,
    #[value(name = "set-123r")]
    Set123r,
    #[value(name = "bicolored-3123")]
    Bicolored3123,
    #[value(name = "dowling-31213")]
    Dowling31213,
}

#[derive(Clone, Copy, ValueEnum)]
enum Direction {
    Fwd,
    Inv,
}

#[derive(Clone, Copy, ValueEnum)]
enum EquivMethod {
    Classify,
    Brute,
}

/// `count-sequence --json` and `egf --json` payload.
#[derive(Debug, Serialize, Deserialize, PartialEq)]
struct SequenceReport {
    patterns: Vec<Pogp>,
    terms: CountSeq,
}

#[derive(Serialize)]
struct PatternReport<'a> {
    pattern: &'a Pogp,
    letters: &'a [u32],
    dashes: Vec<usize>,
    segments: Vec<Vec<u32>>,
    canonical: Pogp,
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("report types serialize")
}

fn run(command: Command) -> Result<String> {
    Ok(match command {
        Command::Parse {
            pattern,
            json: as_json,
        } => {
            let report = PatternReport {
                pattern: &pattern,
                letters: pattern.letters(),
                dashes: (1..pattern.len())
                    .filter(|&g| pattern.dashes()[g - 1])
                    .collect(),
                segments: pattern
                    .segments()
                    .into_iter()
                    .map(|r| pattern.letters()[r].to_vec())
                    .collect(),
                canonical: pattern.canonicalize(),
            };
            if as_json {
                json(&report)
            } else {
                let join = |v: &[u32]| v.iter().map(u32::to_string).collect::<Vec<_>>().join(" ");
                format!(
                    "letters {}\ndashes after {}\nsegments {}\ncanonical {}",
                    join(report.letters),
                    report
                        .dashes
                        .iter()
                        .map(usize::to_string)
                        .collect::<Vec<_>>()
                        .join(" "),
                    report
                        .segments
                        .iter()
                        .map(|s| join(s))
                        .collect::<Vec<_>>()
                        .join(" | "),
                    report.canonical
                )
            }
        }
        Command::Occurrences {
            pattern,
            permutation,
        } => count_occurrences(&permutation, &pattern).to_string(),
        Command::Avoiders { patterns, n, list } => {
            if list {
                avoiders(&patterns, n)?
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join("\n")
            } else {
                count_avoiders(&patterns, n)?.to_string()
            }
        }
        Command::CountSequence {
            patterns,
            max_n,
            json: as_json,
        } => {
            let terms = count_sequence(&patterns, max_n)?;
            if as_json {
                json(&SequenceReport { patterns, terms })
            } else {
                terms.to_string()
            }
        }
        Command::Witness {
            first,
            second,
            max_n,
        } => match witness_difference(&first, &second, max_n)? {
            Some(w) => w.to_string(),
            None => "none".into(),
        },
        Command::Egf {
            sigma,
            shape,
            max_n,
            f_terms,
            json: as_json,
        } => {
            let lag = match shape {
                Shape::KSigma => 1,
                Shape::KSigmaK => 2,
            };
            if !sigma.is_contiguous() {
                return Err(Error::Contract(format!(
                    "σ must be contiguous, got {sigma}"
                )));
            }
            // h_n needs f_0..f_{n-lag}
            let needed = (max_n + 1).saturating_sub(lag);
            let f = match f_terms {
                Some(f) if f.len() >= needed => f.truncated(needed),
                Some(f) => {
                    return Err(Error::Contract(format!(
                        "--f-terms has {} terms, {needed} needed for --max-n {max_n}",
                        f.len()
                    )))
                }
                None if needed == 0 => CountSeq::default(),
                None => count_sequence(std::slice::from_ref(&sigma), needed - 1)?,
            };
            let top = sigma.max_letter() + 1;
            let letters = sigma.letters();
            let (terms, shaped) = match shape {
                Shape::KSigma => (
                    exp_integral(&f),
                    Pogp::from_segments(&[&[top][..], letters])?,
                ),
                Shape::KSigmaK => (
                    k_sigma_k_counts(&f),
                    Pogp::from_segments(&[&[top][..], letters, &[top][..]])?,
                ),
            };
            let terms = terms.truncated(max_n + 1);
            if as_json {
                json(&SequenceReport {
                    patterns: vec![shaped],
                    terms,
                })
            } else {
                terms.to_string()
            }
        }
        Command::Bijection {
            kind,
            direction,
            input,
        } => bijection(kind, direction, input.trim())?,
        Command::Psi {
            permutation,
            inverse,
        } => {
            if inverse {
                permutation.psi_inverse().to_string()
            } else {
                permutation.psi().to_string()
            }
        }
        Command::Equiv {
            first,
            second,
            method,
            max_n,
            json: as_json,
        } => {
            let verdict = match method {
                EquivMethod::Classify => equivalent(&first, &second)?,
                EquivMethod::Brute => {
                    let bound = max_n.unwrap_or_else(|| default_oracle_bound(&first, &second));
                    brute_equivalent(&first, &second, bound)?
                }
            };
            if as_json {
                json(&verdict)
            } else {
                render_verdict(&verdict)
            }
        }
        Command::Linearize { pattern } => pattern
            .linearize()
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join("\n"),
        Command::SelfCheck => {
            let (table, failures) = self_check::run();
            if failures > 0 {
                println!("{table}");
                return Err(Error::Domain(format!("{failures} reference checks failed")));
            }
            table
        }
    })
}

fn bijection(kind: BijectionKind, direction: Direction, input: &str) -> Result<String> {
    use BijectionKind::*;
    use Direction::*;
    Ok(match (kind, direction) {
        (Set312, Fwd) => partition_to_av312(&input.parse()?).to_string(),
        (Set312, Inv) => av312_to_partition(&input.parse()?)?.to_string(),
        (Set123r, Fwd) => partition_to_av123r(&input.parse()?).to_string(),
        (Set123r, Inv) => av123r_to_partition(&input.parse()?)?.to_string(),
        (Bicolored3123, Fwd) => bicolored_to_av3123(&input.parse()?).to_string(),
        (Bicolored3123, Inv) => av3123_to_bicolored(&input.parse()?)?.to_string(),
        (Dowling31213, Fwd) => gpartition_to_av31213(&input.parse()?).to_string(),
        (Dowling31213, Inv) => av31213_to_gpartition(&input.parse()?)?.to_string(),
    })
}

fn render_verdict(v: &EquivalenceVerdict) -> String {
    if !v.equivalent {
        let w = v
            .witness
            .as_ref()
            .map_or("none".to_string(), |w| w.to_string());
        return format!("not-equivalent witness={w}");
    }
    let mut out = match v.method {
        Method::Classification => "equivalent".to_string(),
        Method::Oracle { max_n } => format!("equivalent up-to-n={max_n}"),
    };
    for step in &v.case_trace {
        out.push_str(&format!(
            "\n  {} -> {}  gap {}  case {}",
            step.from, step.to, step.gap, step.case
        ));
    }
    out
}

fn exit_code(e: &Error) -> u8 {
    if e.is_domain() {
        1
    } else {
        2
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn"))
        .format_timestamp(None)
        .init();
    let cli = Cli::parse();
    log::debug!("enumeration ceiling {}", max_length());
    match run(cli.command) {
        Ok(out) => {
            if !out.is_empty() {
                println!("{out}");
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
