//! `bruhat`: query double cosets, draw Hasse diagrams and run the
//! classification and tightness sweeps from the command line.
//!
//! Exit status: 0 on success, 1 when a verification finds a failing case,
//! 2 on usage, parse or resource-limit errors.

use std::fmt::Display;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use bruhat_core::bruhat::{self, leq_subword_oracle, DEFAULT_WORD_LENGTH_CAP};
use bruhat_core::parabolic::{max_representatives, min_representatives, DoubleCosetTable};
use bruhat_core::poset::classify_shape;
use bruhat_core::spherical::{verify_theorem_capped, DEFAULT_VERIFY_CAP};
use bruhat_core::symgroup::DEFAULT_DEGREE_CAP;
use bruhat_core::weights::{orbit_poset, tight_scan_capped, tightness_of, DEFAULT_TIGHT_SCAN_CAP};
use bruhat_core::{FinitePoset, GenSet, Permutation, SymmetricGroup, WeightVector};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const DEFAULT_SEED: u64 = 0x5eed_b40a;

#[derive(Parser)]
#[command(
    name = "bruhat",
    version,
    about = "Bruhat order on parabolic double cosets of S_n"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Write output to this file instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,

    /// Largest degree any command will enumerate.
    #[arg(long, global = true, env = "BRUHAT_DEGREE_CAP")]
    degree_cap: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// List the double cosets W_I \ S_n / W_J with their representatives.
    Cosets {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Hasse diagram of the maximal (or minimal) coset representatives.
    Hasse {
        #[command(flatten)]
        pair: PairArgs,
        /// Which representatives to draw.
        #[arg(long, value_enum, default_value_t = Reps::Max)]
        reps: Reps,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
    },
    /// Check every spherical pair against its predicted shape and bottom element.
    Verify {
        /// A degree or an inclusive range such as `4..6`.
        #[arg(long, default_value = "4..6", value_parser = parse_degrees)]
        degrees: (usize, usize),
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Tightness of every dominant weight pattern against the type-A rule.
    Tight {
        #[arg(long)]
        degree: usize,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Compare two permutations in Bruhat order, or spot-check random pairs
    /// against the subword oracle.
    Compare {
        /// Lesser candidate, e.g. "2 1 3".
        #[arg(required_unless_present = "random")]
        u: Option<String>,
        /// Greater candidate, e.g. "3 1 2".
        #[arg(required_unless_present = "random")]
        v: Option<String>,
        /// Number of random pairs to check instead.
        #[arg(long, conflicts_with_all = ["u", "v"], requires = "degree")]
        random: Option<usize>,
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long, env = "BRUHAT_SEED", default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Print a saturated chain witnessing u <= v.
        #[arg(long)]
        witness: bool,
    },
    /// The orbit of a dominant weight under the order <=_B.
    Orbit {
        /// Comma-separated rationals, e.g. "2,1,1,0".
        #[arg(long, allow_hyphen_values = true)]
        theta: String,
        /// Restrict to (W theta)_I for this I.
        #[arg(long)]
        restrict: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
}

/// The pair of parabolic subgroups, given by complements (`--ic`, `--jc`)
/// or directly (`--i`, `--j`).
#[derive(Args)]
struct PairArgs {
    #[arg(long)]
    degree: usize,
    /// Iᶜ, e.g. "{2}".
    #[arg(long, conflicts_with = "i")]
    ic: Option<String>,
    /// Jᶜ, e.g. "{2,4}".
    #[arg(long, conflicts_with = "j")]
    jc: Option<String>,
    /// I itself.
    #[arg(long)]
    i: Option<String>,
    /// J itself.
    #[arg(long)]
    j: Option<String>,
}

impl PairArgs {
    fn resolve(&self) -> Result<(GenSet, GenSet), CliError> {
        if self.degree < 2 {
            return Err(CliError::Usage(format!(
                "degree must be at least 2, got {}",
                self.degree
            )));
        }
        let rank = self.degree - 1;
        let side =
            |complement: &Option<String>, direct: &Option<String>| -> Result<GenSet, CliError> {
                match (complement, direct) {
                    (_, Some(s)) => Ok(GenSet::parse(s, rank)?),
                    (Some(s), None) => Ok(GenSet::parse(s, rank)?.complement()),
                    (None, None) => Err(CliError::Usage("give --ic/--jc or --i/--j".into())),
                }
            };
        Ok((side(&self.ic, &self.i)?, side(&self.jc, &self.j)?))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Dot,
    Json,
    Table,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Reps {
    Max,
    Min,
}

enum CliError {
    Usage(String),
    Failed(String),
}

impl From<bruhat_core::Error> for CliError {
    fn from(e: bruhat_core::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

fn parse_degrees(s: &str) -> Result<(usize, usize), String> {
    let number = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("bad degree {t:?}"))
    };
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (number(a)?, number(b.trim_start_matches('='))?),
        None => {
            let d = number(s)?;
            (d, d)
        }
    };
    if lo > hi || lo < 2 {
        return Err(format!("empty or invalid degree range {s:?}"));
    }
    Ok((lo, hi))
}

fn group(degree: usize, cap: Option<usize>) -> Result<SymmetricGroup, CliError> {
    Ok(SymmetricGroup::with_cap(
        degree,
        cap.unwrap_or(DEFAULT_DEGREE_CAP),
    )?)
}

fn poset_table<T: Display>(p: &FinitePoset<T>) -> String {
    let ranks = p.ranks();
    let mut out = format!("{} elements, {} covers\n", p.len(), p.covers().len());
    for (k, e) in p.elements().iter().enumerate() {
        let ups: Vec<String> = p.upper_covers(k).iter().map(usize::to_string).collect();
        out.push_str(&format!(
            "{k:>4}  rank {:>2}  [{e}]  covered by [{}]\n",
            ranks[k],
            ups.join(",")
        ));
    }
    let shape = classify_shape(p).map_or_else(|| "unrecognized".to_string(), |s| s.to_string());
    out.push_str(&format!("lattice: {}  shape: {shape}\n", p.is_lattice()));
    out
}

fn render_poset<T: Display + serde::Serialize>(p: &FinitePoset<T>, format: Format) -> String {
    match format {
        Format::Dot => p.to_dot(),
        Format::Json => p.to_json() + "\n",
        Format::Table => poset_table(p),
    }
}

fn run(cli: &Cli) -> Result<String, CliError> {
    let cap = cli.degree_cap;
    match &cli.command {
        Command::Cosets { pair, format } => {
            let (i, j) = pair.resolve()?;
            let g = group(pair.degree, cap)?;
            let table = DoubleCosetTable::build(&g, &i, &j)?;
            Ok(match format {
                Format::Json => table.to_json() + "\n",
                Format::Table => table.to_table(),
                Format::Dot => table.order().to_dot(),
            })
        }
        Command::Hasse { pair, reps, format } => {
            let (i, j) = pair.resolve()?;
            let g = group(pair.degree, cap)?;
            let elements = match reps {
                Reps::Max => max_representatives(&g, &i, &j),
                Reps::Min => min_representatives(&g, &i, &j),
            };
            Ok(render_poset(&bruhat::bruhat_poset(elements), *format))
        }
        Command::Verify { degrees, format } => {
            let (lo, hi) = *degrees;
            let cap = cap.unwrap_or(DEFAULT_VERIFY_CAP);
            let mut reports = Vec::new();
            for degree in lo..=hi {
                reports.push(verify_theorem_capped(degree, cap)?);
            }
            let text = match format {
                Format::Json => {
                    let docs: Vec<serde_json::Value> = reports
                        .iter()
                        .map(|r| serde_json::from_str(&r.to_json()).expect("valid JSON"))
                        .collect();
                    serde_json::to_string_pretty(&docs).expect("valid JSON") + "\n"
                }
                _ => reports
                    .iter()
                    .map(|r| r.to_table())
                    .collect::<Vec<_>>()
                    .join("\n"),
            };
            let failed: usize = reports.iter().map(|r| r.summary.failed).sum();
            if failed > 0 {
                return Err(CliError::Failed(
                    text + &format!("{failed} case(s) failed\n"),
                ));
            }
            Ok(text)
        }
        Command::Tight { degree, format } => {
            let report = tight_scan_capped(*degree, cap.unwrap_or(DEFAULT_TIGHT_SCAN_CAP))?;
            let text = match format {
                Format::Json => report.to_json() + "\n",
                _ => report.to_table(),
            };
            if report.all_agree() {
                Ok(text)
            } else {
                Err(CliError::Failed(text))
            }
        }
        Command::Compare {
            u,
            v,
            random,
            degree,
            seed,
            witness,
        } => match random {
            Some(count) => compare_random(*count, degree.unwrap(), *seed, cap),
            None => {
                let u: Permutation = u.as_deref().unwrap().parse()?;
                let v: Permutation = v.as_deref().unwrap().parse()?;
                let mut out = format!("{}\n", bruhat::leq(&u, &v)?);
                if *witness {
                    if let Some(rel) = bruhat::relation(&u, &v)? {
                        for w in &rel.witness {
                            out.push_str(&format!("{w}\n"));
                        }
                    }
                }
                Ok(out)
            }
        },
        Command::Orbit {
            theta,
            restrict,
            format,
        } => {
            let theta: WeightVector = theta.parse()?;
            if theta.degree() < 2 {
                return Err(CliError::Usage(
                    "theta needs at least two coordinates".into(),
                ));
            }
            let restriction = restrict
                .as_deref()
                .map(|s| GenSet::parse(s, theta.degree() - 1))
                .transpose()?;
            let orbit = orbit_poset(&theta, restriction.as_ref())?;
            let mut out = render_poset(orbit.poset(), *format);
            if *format == Format::Table {
                let t = tightness_of(&orbit);
                out.push_str(&format!("tight: {}\n", t.tight));
                if let Some((mu, nu)) = t.witness {
                    out.push_str(&format!(
                        "witness: nu=({nu}) is dominated by mu=({mu}) but mu is not below nu\n"
                    ));
                }
            }
            Ok(out)
        }
    }
}

fn compare_random(
    count: usize,
    degree: usize,
    seed: u64,
    cap: Option<usize>,
) -> Result<String, CliError> {
    let cap = cap.unwrap_or(DEFAULT_DEGREE_CAP);
    if degree > cap {
        return Err(CliError::Usage(format!(
            "degree {degree} exceeds the configured cap {cap}"
        )));
    }
    if degree == 0 {
        return Err(CliError::Usage("degree must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut random_perm = || {
        let mut word: Vec<usize> = (1..=degree).collect();
        word.shuffle(&mut rng);
        Permutation::new(&word).expect("shuffle of 1..=degree")
    };
    let mut mismatches = Vec::new();
    for _ in 0..count {
        let (u, v) = (random_perm(), random_perm());
        if bruhat::leq(&u, &v)? != leq_subword_oracle(&u, &v, DEFAULT_WORD_LENGTH_CAP)? {
            mismatches.push(format!("{u} vs {v}"));
        }
    }
    let mut out = format!(
        "{count} random pairs in degree {degree} (seed {seed}): {} mismatches\n",
        mismatches.len()
    );
    for m in &mismatches {
        out.push_str(&format!("mismatch: {m}\n"));
    }
    if mismatches.is_empty() {
        Ok(out)
    } else {
        Err(CliError::Failed(out))
    }
}

fn emit(cli: &Cli, text: &str) -> std::io::Result<()> {
    match &cli.output {
        Some(path) => std::fs::write(path, text),
        None => std::io::stdout().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (text, code) = match run(&cli) {
        Ok(text) => (text, ExitCode::SUCCESS),
        Err(CliError::Failed(text)) => (text, ExitCode::from(1)),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    if let Err(e) = emit(&cli, &text) {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(2);
    }
    code
}
