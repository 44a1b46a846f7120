//! `ae` — solve, classify, verify, generate, and play Avoider-Enforcer
//! games from the command line.
//!
//! Exit codes: 0 success / all checks passed, 1 verification violations,
//! 2 malformed input, 3 resource bound exceeded.

mod format;
mod play;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use ae_core::classifier::{classify_with_bound, Basis, CertWitness, Certificate};
use ae_core::harness::{conjecture_search, verify_suite, Bounds, GenSpec, Suite};
use ae_core::{Error as CoreError, Hypergraph, LastPlayer, Player, Solver};

#[derive(Parser)]
#[command(name = "ae", version, about = "Avoider-Enforcer game tools")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum LastArg {
    Avoider,
    Enforcer,
}

impl From<LastArg> for LastPlayer {
    fn from(a: LastArg) -> LastPlayer {
        match a {
            LastArg::Avoider => LastPlayer::AvoiderLast,
            LastArg::Enforcer => LastPlayer::EnforcerLast,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Avoider,
    Enforcer,
}

impl From<SideArg> for Player {
    fn from(a: SideArg) -> Player {
        match a {
            SideArg::Avoider => Player::Avoider,
            SideArg::Enforcer => Player::Enforcer,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Auto,
    Oracle,
    Structural,
}

#[derive(Subcommand)]
enum Cmd {
    /// Winner of one order under perfect play.
    Solve {
        /// Input file, or `-` for standard input.
        file: String,
        /// Who moves last.
        #[arg(long, value_enum)]
        last: LastArg,
        /// Vertex-count cap for the exact solver.
        #[arg(long, default_value_t = ae_core::oracle::DEFAULT_BOUND)]
        bound: usize,
    },
    /// Outcome class A / SL / E with the method used per order.
    Outcome {
        file: String,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
        #[arg(long, default_value_t = ae_core::oracle::DEFAULT_BOUND)]
        bound: usize,
    },
    /// Run a verification suite; exit 0 iff no violations.
    Verify {
        /// Suite name, or `all`.
        #[arg(long)]
        suite: String,
        /// Cap on vertex count for the enumerated population.
        #[arg(long)]
        max_n: Option<usize>,
        /// Number of random instances for the sampled population.
        #[arg(long)]
        samples: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Worker threads.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Emit the full report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Search for second-to-last Avoider wins at a given minimum degree.
    Conjecture {
        #[arg(long, default_value_t = 3)]
        min_degree: usize,
        #[arg(long, default_value_t = 13)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Write an instance of a named family.
    Gen {
        /// Family spec, e.g. `path:4`, `cycle:5`, `bull`, `sunlet3`,
        /// `pseudostar:7:0`, `chain:3`, `nunchaku:4`, `cycle3:4`, `prism`,
        /// `fig7`, `random-graph:8:0.3:1`, `random-linear3:9:6:2`.
        #[arg(long)]
        family: String,
        /// Output file; standard output when omitted.
        #[arg(short, long)]
        out: Option<PathBuf>,
        /// Emit JSON instead of the terse text form.
        #[arg(long)]
        json: bool,
    },
    /// Remove size-3 leaf-edges to a fixed point and print the result.
    Reduce { file: String },
    /// Print the hypergraph of minimal transversals (same vertex names).
    Dual { file: String },
    /// Play against the exact engine.
    Play {
        file: String,
        /// Which side you play.
        #[arg(long = "as", value_enum, default_value_t = SideArg::Avoider)]
        side: SideArg,
        /// Who moves last.
        #[arg(long, value_enum, default_value_t = LastArg::Avoider)]
        last: LastArg,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            let resource = err
                .chain()
                .any(|c| matches!(c.downcast_ref::<CoreError>(), Some(CoreError::ResourceBound(_))));
            ExitCode::from(if resource { 3 } else { 2 })
        }
    }
}

fn read_input(file: &str) -> Result<(Hypergraph, Vec<String>)> {
    let text = if file == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf).context("reading standard input")?;
        buf
    } else {
        std::fs::read_to_string(file).with_context(|| format!("reading {file}"))?
    };
    format::parse(&text).with_context(|| format!("parsing {file}"))
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.cmd {
        Cmd::Solve { file, last, bound } => {
            let (h, _) = read_input(&file)?;
            let started = Instant::now();
            let mut solver = Solver::with_bound(&h, last.into(), bound)?;
            let winner = solver.solve();
            println!("winner: {winner}");
            println!("nodes: {}", solver.nodes);
            println!("elapsed: {:.3} ms", started.elapsed().as_secs_f64() * 1e3);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Outcome { file, method, bound } => {
            let (h, _) = read_input(&file)?;
            match method {
                Method::Oracle => {
                    let o = ae_core::oracle::outcome_with_bound(&h, bound)?;
                    println!("outcome: {o}");
                    println!("method: oracle / oracle");
                }
                Method::Auto | Method::Structural => {
                    let (verdict, cert) = classify_with_bound(&h, bound)?;
                    let strict = matches!(method, Method::Structural);
                    if strict
                        && (verdict.avoider_last.method == Basis::OracleFallback
                            || verdict.enforcer_last.method == Basis::OracleFallback)
                    {
                        bail!(
                            "no structural rule covers this instance \
                             (methods {:?} / {:?}); use --method auto or oracle",
                            verdict.avoider_last.method,
                            verdict.enforcer_last.method
                        );
                    }
                    println!("outcome: {}", verdict.outcome);
                    println!(
                        "method: {:?} / {:?}",
                        verdict.avoider_last.method, verdict.enforcer_last.method
                    );
                    println!("certificate: {}", summarize(&cert));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify { suite, max_n, samples, seed, jobs, json } => {
            let bounds = Bounds { max_n, samples, jobs };
            let suites: Vec<Suite> = if suite == "all" {
                Suite::ALL.to_vec()
            } else {
                vec![suite.parse().map_err(|e: String| anyhow!(e))?]
            };
            let mut failed = false;
            for s in suites {
                let report = verify_suite(s, &bounds, seed);
                failed |= !report.passed();
                if json {
                    println!("{}", serde_json::to_string(&report)?);
                } else {
                    println!(
                        "{}: {} checked, {} violations, {} ms",
                        report.suite, report.checked, report.violation_count, report.wall_ms
                    );
                    for v in &report.violations {
                        println!("  {} — {}", v.instance, v.detail);
                    }
                }
            }
            Ok(if failed { ExitCode::from(1) } else { ExitCode::SUCCESS })
        }
        Cmd::Conjecture { min_degree, max_n, seed, json } => {
            let report = conjecture_search(min_degree, max_n, seed);
            if json {
                println!("{}", serde_json::to_string(&report)?);
            } else {
                println!(
                    "checked {} instances with min degree >= {min_degree}; {} witnesses",
                    report.checked, report.violation_count
                );
                for v in &report.violations {
                    println!("  {} — {}", v.instance, v.detail);
                }
            }
            // witnesses are discoveries, not failures
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Gen { family, out, json } => {
            let spec = parse_family(&family)?;
            let h = ae_core::harness::gen_family(&spec)?;
            let names = format::default_names(h.vertex_count());
            let doc = format::HypergraphDocument::from_hypergraph(&h, &names)?;
            let text = if json { doc.serialize_json() } else { doc.serialize() };
            match out {
                Some(path) => std::fs::write(&path, text)
                    .with_context(|| format!("writing {}", path.display()))?,
                None => print!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Reduce { file } => {
            let (h, mut names) = read_input(&file)?;
            let (reduced, steps) = h.reduce_rank3_traced()?;
            for step in &steps {
                // ids are in the labels current at that step; remove the
                // larger first so the smaller id stays valid
                let (a, b) = step.removed;
                names.remove(a.max(b));
                names.remove(a.min(b));
            }
            print!("{}", format::serialize(&reduced, &names)?);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Dual { file } => {
            let (h, names) = read_input(&file)?;
            let dual = h.transversal_dual()?;
            print!("{}", format::serialize(&dual, &names)?);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Play { file, side, last } => {
            let (h, names) = read_input(&file)?;
            let stdin = std::io::stdin();
            let mut input = stdin.lock();
            let mut out = std::io::stdout();
            let transcript = play::run_play(&h, &names, side.into(), last.into(), &mut input, &mut out)?;
            let replayed = transcript.replay_winner(&h, &names)?;
            if replayed.to_string() != transcript.winner {
                bail!("transcript replay disagrees with the recorded winner");
            }
            println!("{}", serde_json::to_string_pretty(&transcript)?);
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn summarize(cert: &Certificate) -> String {
    match &cert.witness {
        CertWitness::Definitional => format!("{:?} (definitional)", cert.basis),
        CertWitness::Embedding(e) => {
            format!("{:?} embedding of {:?} at {:?}", cert.basis, e.pattern, e.map)
        }
        CertWitness::Pairing(p) => {
            let pairs: Vec<String> =
                p.pairs.iter().map(|(a, b)| format!("({a} {b})")).collect();
            format!("pairing {}", pairs.join(" "))
        }
        CertWitness::Taxonomy { components, .. } => {
            let kinds: Vec<String> =
                components.iter().map(|(_, r)| r.kind.to_string()).collect();
            format!("component taxonomy: {}", kinds.join(", "))
        }
        CertWitness::OneEdge { removed, residual } => {
            let rest = residual
                .as_ref()
                .map(|c| format!("; residue: {}", summarize(c)))
                .unwrap_or_default();
            format!("1-edge removal at {removed:?}{rest}")
        }
        CertWitness::Components(parts) => {
            let inner: Vec<String> =
                parts.iter().map(|(_, c)| summarize(c)).collect();
            format!("union of [{}]", inner.join(" | "))
        }
    }
}

fn parse_family(spec: &str) -> Result<GenSpec> {
    let parts: Vec<&str> = spec.split(':').collect();
    let usize_at = |i: usize| -> Result<usize> {
        parts
            .get(i)
            .ok_or_else(|| anyhow!("family {spec:?} is missing parameter {i}"))?
            .parse()
            .map_err(|_| anyhow!("family {spec:?}: parameter {i} is not an integer"))
    };
    let u64_at = |i: usize| -> Result<u64> {
        parts
            .get(i)
            .ok_or_else(|| anyhow!("family {spec:?} is missing parameter {i}"))?
            .parse()
            .map_err(|_| anyhow!("family {spec:?}: parameter {i} is not an integer"))
    };
    let exact = |k: usize| -> Result<()> {
        if parts.len() != k {
            bail!("family {spec:?}: expected {} parameters", k - 1);
        }
        Ok(())
    };
    let g = match parts[0] {
        "path" => {
            exact(2)?;
            GenSpec::Pn { n: usize_at(1)? }
        }
        "cycle" => {
            exact(2)?;
            GenSpec::Cn { n: usize_at(1)? }
        }
        "bull" => {
            exact(1)?;
            GenSpec::Bull
        }
        "sunlet3" => {
            exact(1)?;
            GenSpec::Sunlet3
        }
        "pseudostar" => {
            exact(3)?;
            GenSpec::PseudoStar { size: usize_at(1)?, seed: u64_at(2)? }
        }
        "chain" => {
            exact(2)?;
            GenSpec::Chain { len: usize_at(1)? }
        }
        "nunchaku" => {
            exact(2)?;
            GenSpec::Nunchaku { len: usize_at(1)? }
        }
        "cycle3" => {
            exact(2)?;
            GenSpec::Cycle3u { len: usize_at(1)? }
        }
        "prism" => {
            exact(1)?;
            GenSpec::Prism
        }
        "fig7" => {
            exact(1)?;
            GenSpec::Fig7
        }
        "random-graph" => {
            exact(4)?;
            let p: f64 = parts[2]
                .parse()
                .map_err(|_| anyhow!("family {spec:?}: probability is not a number"))?;
            GenSpec::RandomGraph { n: usize_at(1)?, p, seed: u64_at(3)? }
        }
        "random-linear3" => {
            exact(4)?;
            GenSpec::RandomLinear3 { n: usize_at(1)?, edges: usize_at(2)?, seed: u64_at(3)? }
        }
        other => bail!(
            "unknown family {other:?}; see `ae gen --help` for the list"
        ),
    };
    Ok(g)
}
