//! The `syncomplex` command line.
//!
//! Exit status: 0 on success, 1 when a verification (tables, reversal
//! expectations, oracle cross-checks) disagrees, 2 on usage or input errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::automata::{dfa_from_json, dfa_to_json, minimize, to_dot, Dfa};
use crate::bounds::Family;
use crate::classify::{classify, ruled_out_count_brute};
use crate::error::Error;
use crate::oracle::{periodic_orbit_count, word_bfs_sigma};
use crate::search::{
    reversal_expected, reversal_sizes, search_max_sigma, SearchFamily, SearchTask,
};
use crate::semigroup::{transition_semigroup, witness_words};
use crate::tables::{table_report, TableOptions};
use crate::witnesses::{full_letters, reversal_letters, WitnessSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "syncomplex", version, about = "Syntactic complexity of ideal and closed regular languages")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify a DFA and compute its syntactic complexity.
    Analyze {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Print how many semigroup elements have shortest words of each length.
        #[arg(long)]
        histogram: bool,
        /// Print shortest words for the first K elements.
        #[arg(long, default_value_t = 0)]
        samples: usize,
        /// Give up when the semigroup exceeds N elements.
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Emit a witness automaton.
    Witness {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: usize,
        /// Letter restriction, e.g. `adef`; defaults to the full alphabet.
        #[arg(long)]
        letters: Option<String>,
        /// Final states for the left family, e.g. `1,3`.
        #[arg(long, value_delimiter = ',')]
        finals: Option<Vec<usize>>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Exhaustive search for the largest σ in a class.
    Search {
        #[arg(long)]
        family: SearchFamily,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        no_prune_lemma8: bool,
        #[arg(long)]
        no_canonical: bool,
        #[arg(long)]
        no_dedupe: bool,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        budget: Option<u64>,
        /// How many extremal witnesses to list.
        #[arg(long, default_value_t = 8)]
        witnesses: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Quotient complexity of the reverse of a witness restriction or a DFA file.
    Reverse {
        file: Option<PathBuf>,
        #[arg(long, conflicts_with = "file")]
        family: Option<Family>,
        #[arg(long, requires = "family")]
        n: Option<usize>,
        #[arg(long, requires = "family")]
        letters: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Reproduce a published table and compare cell by cell.
    Tables {
        #[arg(long)]
        id: u32,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Cross-check against the brute-force oracles.
    Oracle {
        /// DFA whose σ is recomputed by plain word enumeration.
        file: Option<PathBuf>,
        /// Count periodic behaviors of all n^n transformations.
        #[arg(long)]
        ruled_out: Option<usize>,
    },
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        // a closed pipe (`| head`) is not an error
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            return Failure {
                code: EXIT_OK,
                message: String::new(),
            };
        }
        Failure {
            code: EXIT_USAGE,
            message: e.to_string(),
        }
    }
}

type Outcome = std::result::Result<i32, Failure>;

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            if !f.message.is_empty() {
                let _ = writeln!(err, "error: {}", f.message);
            }
            f.code
        }
    }
}

fn read_dfa(path: &Path) -> Result<Dfa, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure {
        code: EXIT_USAGE,
        message: format!("{}: {e}", path.display()),
    })?;
    dfa_from_json(&text).map_err(|e| Failure {
        code: EXIT_USAGE,
        message: format!("{}: {e}", path.display()),
    })
}

fn execute(command: Command, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Analyze {
            file,
            format,
            histogram,
            samples,
            cap,
        } => analyze(&read_dfa(&file)?, format, histogram, samples, cap, out),
        Command::Witness {
            family,
            n,
            letters,
            finals,
            format,
        } => {
            let spec = WitnessSpec {
                family,
                n,
                letters: letters.unwrap_or_else(|| full_letters(family).to_string()),
                finals_override: finals,
            };
            let d = spec.build()?;
            match format {
                Format::Dot => write!(out, "{}", to_dot(&d))?,
                _ => writeln!(out, "{}", dfa_to_json(&d))?,
            }
            Ok(EXIT_OK)
        }
        Command::Search {
            family,
            n,
            k,
            no_prune_lemma8,
            no_canonical,
            no_dedupe,
            jobs,
            budget,
            witnesses,
            format,
        } => {
            let mut task = SearchTask::new(family, n, k);
            task.prune.lemma8_filter = !no_prune_lemma8;
            task.prune.canonical_first_letter = !no_canonical;
            task.prune.dedupe_letter_multisets = !no_dedupe;
            task.jobs = jobs;
            task.budget = budget;
            task.max_witnesses = witnesses;
            let r = search_max_sigma(&task)?;
            if format == Format::Json {
                writeln!(out, "{}", serde_json::to_string_pretty(&r).expect("serializable"))?;
            } else {
                writeln!(
                    out,
                    "family={} n={} k={} max_sigma={} exhaustive={} examined={} pruned={} accepted={} extremal={}",
                    r.family,
                    r.n,
                    r.k,
                    r.max_sigma,
                    r.exhaustive,
                    r.candidates_examined,
                    r.candidates_pruned,
                    r.candidates_accepted,
                    r.witness_count
                )?;
                for w in &r.witnesses {
                    writeln!(out, "  {w}")?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Reverse {
            file,
            family,
            n,
            letters,
            format,
        } => {
            let (d, expected) = match (file, family) {
                (Some(path), _) => (read_dfa(&path)?, None),
                (None, Some(family)) => {
                    let n = n.ok_or_else(|| Failure {
                        code: EXIT_USAGE,
                        message: "--n is required with --family".into(),
                    })?;
                    let default = reversal_letters(family);
                    let letters = letters.unwrap_or_else(|| default.to_string());
                    let expected = (sorted(&letters) == default).then(|| reversal_expected(family, n));
                    let spec = WitnessSpec {
                        family,
                        n,
                        letters,
                        finals_override: None,
                    };
                    (spec.build()?, expected)
                }
                (None, None) => {
                    return Err(Failure {
                        code: EXIT_USAGE,
                        message: "give a DFA file or --family and --n".into(),
                    })
                }
            };
            let (nfa, subset, minimal) = reversal_sizes(&d);
            let matches = expected.is_none_or(|e| e == minimal as u64);
            if format == Format::Json {
                let v = json!({
                    "nfa_states": nfa,
                    "subset_states": subset,
                    "minimal_states": minimal,
                    "expected": expected,
                });
                writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("serializable"))?;
            } else {
                writeln!(out, "{minimal}")?;
                writeln!(out, "nfa={nfa} subset={subset} minimal={minimal}")?;
                if let Some(e) = expected {
                    writeln!(out, "expected={e} {}", if matches { "OK" } else { "MISMATCH" })?;
                }
            }
            Ok(if matches { EXIT_OK } else { EXIT_MISMATCH })
        }
        Command::Tables {
            id,
            budget,
            jobs,
            format,
        } => {
            let mut opts = TableOptions::default();
            if let Some(b) = budget {
                opts.budget = b;
            }
            opts.jobs = jobs;
            let report = table_report(id, opts)?;
            if format == Format::Json {
                writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("serializable"))?;
            } else {
                write!(out, "{}", report.render_text())?;
            }
            Ok(if report.ok() { EXIT_OK } else { EXIT_MISMATCH })
        }
        Command::Oracle { file, ruled_out } => {
            if file.is_none() && ruled_out.is_none() {
                return Err(Failure {
                    code: EXIT_USAGE,
                    message: "give a DFA file and/or --ruled-out N".into(),
                });
            }
            let mut agree = true;
            if let Some(path) = file {
                let d = read_dfa(&path)?;
                let brute = word_bfs_sigma(&d)?;
                let engine = transition_semigroup(&minimize(&d), None)?.sigma();
                agree &= brute == engine;
                writeln!(out, "sigma: word-bfs={brute} closure={engine}")?;
            }
            if let Some(n) = ruled_out {
                let orbit = periodic_orbit_count(n)?;
                let brute = ruled_out_count_brute(n)?;
                let formula: u64 = crate::bounds::ruled_out_count_formula(n);
                agree &= orbit == brute && brute == formula;
                writeln!(out, "ruled_out({n}): oracle={orbit} behaviors={brute} formula={formula}")?;
            }
            writeln!(out, "{}", if agree { "OK" } else { "MISMATCH" })?;
            Ok(if agree { EXIT_OK } else { EXIT_MISMATCH })
        }
    }
}

fn sorted(s: &str) -> String {
    let mut v: Vec<char> = s.chars().collect();
    v.sort_unstable();
    v.into_iter().collect()
}

fn analyze(
    d: &Dfa,
    format: Format,
    histogram: bool,
    samples: usize,
    cap: Option<usize>,
    out: &mut dyn Write,
) -> Outcome {
    let min = minimize(d);
    let semigroup = transition_semigroup(&min, cap)?;
    let report = classify(d)?;
    let hist = semigroup.length_histogram();
    let mut sample_words = Vec::new();
    for t in semigroup.elements().iter().take(samples) {
        sample_words.push((t.to_string(), witness_words(&min, &semigroup, t)?));
    }
    if format == Format::Json {
        let mut v = serde_json::to_value(&report).expect("serializable");
        v["kappa"] = json!(min.n());
        v["mu"] = json!(semigroup.mu());
        if histogram {
            v["length_histogram"] = json!(hist);
        }
        if samples > 0 {
            v["samples"] = sample_words
                .iter()
                .map(|(t, w)| json!({"transformation": t, "word": w}))
                .collect();
        }
        writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("serializable"))?;
        return Ok(EXIT_OK);
    }
    writeln!(out, "kappa={}", min.n())?;
    writeln!(out, "sigma={}", semigroup.sigma())?;
    writeln!(out, "mu={}", semigroup.mu())?;
    writeln!(out, "bound={}", report.bound)?;
    for (name, value) in report.flags() {
        writeln!(out, "{name}={value}")?;
    }
    if histogram {
        let shown: Vec<String> = hist.iter().map(|c| c.to_string()).collect();
        writeln!(out, "length_histogram={}", shown.join(","))?;
    }
    for (t, w) in sample_words {
        writeln!(out, "{t} <- {w}")?;
    }
    Ok(EXIT_OK)
}
