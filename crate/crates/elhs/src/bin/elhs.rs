use std::collections::hash_map::RandomState;
use std::fs;
use std::hash::{BuildHasher, Hasher};
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use anyhow::{bail, Context, Result};
use clap::error::ErrorKind;
use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use elhs::design::{self, DesignFormat};
use elhs::format::sig12;
use elhs::parallel::{curve, curve_csv, expand_parallel, threads_from_env};
use elhs::{read_design, ExpansionReport};
use elhs_core::{
    centered_l2, centered_l2_squared, degree, expand, geometric, optimal_expansion, sample_lhs,
    ExpansionConfig, Optimize, RngStream, SampleSet,
};

/// Latin hypercube sampling and LHS-in-LHS expansion.
#[derive(Parser, Debug)]
#[command(name = "elhs", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Draw a Latin hypercube design.
    Sample {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        p: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long)]
        seed: Option<u64>,
        /// Output file (`.json` for JSON); stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Add M samples to an existing design.
    Expand {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value_t = Target::None)]
        optimize: Target,
        #[arg(long, default_value_t = elhs_core::DEFAULT_CANDIDATES,
              value_parser = positive_usize)]
        candidates: usize,
        /// Stop once a candidate reaches this metric value.
        #[arg(long, value_parser = positive_f64)]
        tolerance: Option<f64>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// JSON report path; printed to stderr when omitted.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Print the LHS degree of a design.
    Degree {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Print a uniformity metric of a design.
    Discrepancy {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Metric::Centered)]
        metric: Metric,
        /// Print the squared centered discrepancy instead of its root.
        #[arg(long)]
        squared: bool,
    },
    /// Rank expansion sizes by the degree they would produce.
    Optimal {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        m_min: usize,
        #[arg(long)]
        m_max: usize,
        /// Print every size instead of only the best.
        #[arg(long)]
        verbose: bool,
        /// Perform each expansion and check the measured degree.
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Mean degree versus expansion size over random Latin hypercubes.
    Curve {
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        p: Vec<usize>,
        #[arg(long)]
        m_max: usize,
        #[arg(long, default_value_t = 100, value_parser = positive_usize)]
        realizations: usize,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Target {
    None,
    Centered,
    Geometric,
}

impl Target {
    fn optimize(self) -> Optimize {
        match self {
            Target::None => Optimize::None,
            Target::Centered => Optimize::CenteredDiscrepancy,
            Target::Geometric => Optimize::GeometricDiscrepancy,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Target::None => "none",
            Target::Centered => "centered",
            Target::Geometric => "geometric",
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Metric {
    Centered,
    Geometric,
}

fn positive_usize(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(v) if v > 0 => Ok(v),
        _ => Err(format!("{s:?} is not a positive integer")),
    }
}

fn positive_f64(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v.is_finite() && v > 0.0 => Ok(v),
        _ => Err(format!("{s:?} is not a positive number")),
    }
}

fn usage_error(msg: impl std::fmt::Display) -> ! {
    Cli::command().error(ErrorKind::InvalidValue, msg).exit()
}

/// Seed from `--seed`, or a fresh one from system entropy (announced on
/// stderr so the run can be replayed).
fn resolve_seed(seed: Option<u64>) -> u64 {
    seed.unwrap_or_else(|| {
        let mut h = RandomState::new().build_hasher();
        let nanos = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_nanos())
            .unwrap_or(0);
        h.write_u128(nanos);
        h.write_u32(std::process::id());
        let seed = h.finish();
        eprintln!("seed: {seed}");
        seed
    })
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => {
            fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
        }
        None => io::stdout()
            .write_all(text.as_bytes())
            .context("cannot write to stdout"),
    }
}

fn load(path: &Path) -> Result<SampleSet> {
    read_design(path).with_context(|| format!("reading {}", path.display()))
}

fn write_design(
    set: &SampleSet,
    out: Option<&Path>,
    comments: Vec<String>,
    meta: serde_json::Value,
) -> Result<()> {
    let format = out.map_or(DesignFormat::Csv, DesignFormat::from_path);
    emit(out, &design::render(set, format, &comments, meta))
}

fn threads() -> Result<usize> {
    threads_from_env().map_err(anyhow::Error::msg)
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Sample { p, n, seed, out } => {
            let seed = resolve_seed(seed);
            let set = sample_lhs(p as usize, n as usize, &mut RngStream::new(seed))?;
            write_design(
                &set,
                out.as_deref(),
                vec![format!("elhs sample p={p} n={n} seed={seed}")],
                serde_json::json!({ "seed": seed }),
            )
        }
        Command::Expand {
            input,
            m,
            optimize,
            candidates,
            tolerance,
            seed,
            out,
            report,
        } => {
            let set = load(&input)?;
            let seed = resolve_seed(seed);
            let mut config = ExpansionConfig::new(m, seed)
                .with_optimize(optimize.optimize())
                .with_candidates(candidates);
            config.tolerance = tolerance;
            let result = expand_parallel(&set, &config, threads()?)?;
            let rep = ExpansionReport {
                n: set.n(),
                p: set.p(),
                m,
                degree: result.measured_degree,
                metric: optimize.name().to_string(),
                metric_value: result.metric_value,
                candidates_evaluated: result.candidates_evaluated,
                seed,
                centered_l2: centered_l2(&result.expanded),
            };
            write_design(
                &result.expanded,
                out.as_deref(),
                vec![format!(
                    "elhs expand n={} m={m} optimize={} seed={seed}",
                    set.n(),
                    optimize.name()
                )],
                serde_json::json!({ "seed": seed, "m": m, "optimize": optimize.name() }),
            )?;
            let json = rep.to_json();
            match report {
                Some(path) => fs::write(&path, json)
                    .with_context(|| format!("cannot write {}", path.display())),
                None => {
                    eprint!("{json}");
                    Ok(())
                }
            }
        }
        Command::Degree { input } => {
            let set = load(&input)?;
            println!("{}", sig12(degree(&set)));
            Ok(())
        }
        Command::Discrepancy {
            input,
            metric,
            squared,
        } => {
            let set = load(&input)?;
            let value = match (metric, squared) {
                (Metric::Centered, false) => centered_l2(&set),
                (Metric::Centered, true) => centered_l2_squared(&set),
                (Metric::Geometric, _) => geometric(&set)?,
            };
            println!("{}", sig12(value));
            Ok(())
        }
        Command::Optimal {
            input,
            m_min,
            m_max,
            verbose,
            verify,
            seed,
        } => {
            if m_min > m_max {
                usage_error(format!("--m-min {m_min} is greater than --m-max {m_max}"));
            }
            let set = load(&input)?;
            let ranked = optimal_expansion(&set, m_min..=m_max, verbose)?;
            if verify {
                let seed = resolve_seed(seed);
                let all = optimal_expansion(&set, m_min..=m_max, true)?;
                for &(m, predicted) in &all {
                    let measured = expand(&set, &ExpansionConfig::new(m, seed))?.measured_degree;
                    if measured != predicted {
                        bail!("m={m}: predicted degree {predicted} but expansion measured {measured}");
                    }
                }
                eprintln!("verified {} expansions", all.len());
            }
            let mut text = String::from("m\tdegree\n");
            for (m, d) in ranked {
                text.push_str(&format!("{m}\t{}\n", sig12(d)));
            }
            emit(None, &text)
        }
        Command::Curve {
            n,
            p,
            m_max,
            realizations,
            seed,
            out,
        } => {
            if n.contains(&0) || p.contains(&0) {
                usage_error("--n and --p entries must be positive");
            }
            let seed = resolve_seed(seed);
            let rows = curve(&n, &p, m_max, realizations, seed, threads()?)?;
            emit(out.as_deref(), &curve_csv(&rows))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
