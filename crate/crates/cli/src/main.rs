//! `rotorpath`: generalized ARRIVAL on path multigraphs.
//!
//! Exit codes: 0 success, 1 failed check or mismatch, 2 schema or input
//! error, 3 invalid instance, 4 step budget exceeded.

mod error;
mod instance;
mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use rotorpath_core::engel::EngelMachine;
use rotorpath_core::gen::{random_instances, GenParams};
use rotorpath_core::rotor::{full_route_with_budget, verify_certificate, DEFAULT_STEP_BUDGET};
use rotorpath_core::solver::{enumerate_gr, is_arcmonic_value, DEFAULT_ENUMERATION_CAP};
use rotorpath_core::{solve_11, solve_any, BigInt, PathInstance};
use serde_json::Value;

use error::CliError;
use instance::{Decimal, InstanceFile};
use report::{to_text, Certificate, ClassReport, OracleReport, SolveReport};

#[derive(Parser)]
#[command(name = "rotorpath", version, about = "Rotor walks and generalized ARRIVAL on path multigraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Params {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    x: u64,
    #[arg(long)]
    y: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a path instance from the invariants.
    Solve {
        #[arg(long)]
        instance: PathBuf,
        /// Require x = y = 1 and use the closed form.
        #[arg(long)]
        closed_form_11: bool,
    },
    /// Route every particle by simulation and print a certificate.
    Oracle {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long, default_value_t = DEFAULT_STEP_BUDGET)]
        max_steps: u64,
    },
    /// Stable digit decomposition of V.
    Decompose {
        #[command(flatten)]
        params: Params,
        #[arg(allow_negative_numbers = true, value_parser = parse_big)]
        v: BigInt,
    },
    /// Whether V is the g-value of some rotor configuration.
    Member {
        #[command(flatten)]
        params: Params,
        #[arg(allow_negative_numbers = true, value_parser = parse_big)]
        v: BigInt,
    },
    /// Every g-value, one per line, in increasing order.
    Classes {
        #[command(flatten)]
        params: Params,
        /// Refuse when F exceeds this.
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        cap: u64,
    },
    /// Residues of h(sigma), g(rho) and of the final rotor class mod F.
    ClassOf {
        #[arg(long)]
        instance: PathBuf,
    },
    /// Check a routing-vector certificate (bare, or an oracle output).
    Verify {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long)]
        certificate: PathBuf,
    },
    /// Compare the solver with the simulation on seeded random instances.
    Diff {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 1)]
        n_min: usize,
        #[arg(long, default_value_t = 5)]
        n_max: usize,
        #[arg(long, default_value_t = 6)]
        y_max: u64,
        #[arg(long, default_value_t = 20)]
        sigma_bound: i64,
    },
    /// Solve every `*.json` instance in a directory.
    Batch {
        #[arg(long)]
        dir: PathBuf,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Write seeded random instances as canonical files.
    Generate {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Print an instance in canonical form.
    Canon {
        #[arg(long)]
        instance: PathBuf,
    },
}

fn parse_big(s: &str) -> Result<BigInt, String> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("{s:?} is not a decimal integer"));
    }
    s.parse().map_err(|e| format!("{e}"))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn run(command: Command) -> Result<String, CliError> {
    match command {
        Command::Solve {
            instance,
            closed_form_11,
        } => Ok(to_text(&solve_file(&InstanceFile::read(&instance)?, closed_form_11)?)),
        Command::Oracle {
            instance,
            max_steps,
        } => Ok(to_text(&oracle(&InstanceFile::read(&instance)?, max_steps)?)),
        Command::Decompose { params, v } => {
            let machine = EngelMachine::new(params.n, params.x, params.y)?;
            Ok(format!("{}\n", machine.stable_decompose(&v)))
        }
        Command::Member { params, v } => {
            let inst = PathInstance::from_params(params.n, params.x, params.y)?;
            let answer = if is_arcmonic_value(&inst, &v)? { "yes" } else { "no" };
            Ok(format!("{answer}\n"))
        }
        Command::Classes { params, cap } => {
            let inst = PathInstance::from_params(params.n, params.x, params.y)?;
            Ok(enumerate_gr(&inst, cap)?.iter().map(|v| format!("{v}\n")).collect())
        }
        Command::ClassOf { instance } => {
            let (inst, rotor, particles) = InstanceFile::read(&instance)?.path_instance()?;
            let f = inst.f();
            let residue = |v: BigInt| Decimal(((v % f) + f) % f);
            let h = inst.harmonic_h(&particles)?;
            let g = inst.arcmonic_g(&rotor)?;
            Ok(to_text(&ClassReport {
                f: Decimal(f.clone()),
                final_class: residue(&g - &h),
                h_class: residue(h),
                g_class: residue(g),
            }))
        }
        Command::Verify {
            instance,
            certificate,
        } => {
            let loaded = InstanceFile::read(&instance)?.load()?;
            let cert = read_certificate(&certificate)?;
            let routing = cert.routing_vector(&loaded.graph)?;
            let ok = verify_certificate(&loaded.graph, &loaded.rotor, &loaded.particles, &routing, &cert.claimed());
            Ok(if ok { "yes\n" } else { "no\n" }.to_string())
        }
        Command::Diff {
            seed,
            count,
            n_min,
            n_max,
            y_max,
            sigma_bound,
        } => {
            if n_min > n_max || y_max < 2 || sigma_bound < 0 {
                return Err(CliError::Schema(
                    "need n_min <= n_max, y_max >= 2 and sigma_bound >= 0".into(),
                ));
            }
            let params = GenParams {
                n_min,
                n_max,
                y_max,
                sigma_bound,
            };
            diff(seed, count, &params)
        }
        Command::Batch { dir, jobs } => batch(&dir, jobs),
        Command::Generate { seed, count, out } => {
            std::fs::create_dir_all(&out).map_err(|e| CliError::Schema(format!("{}: {e}", out.display())))?;
            let width = count.saturating_sub(1).to_string().len().max(4);
            for (i, r) in random_instances(seed, count, &GenParams::default()).iter().enumerate() {
                let file = out.join(format!("instance-{i:0width$}.json"));
                let text = InstanceFile::from_path(&r.instance, &r.rotor, &r.particles).to_canonical();
                std::fs::write(&file, text).map_err(|e| CliError::Schema(format!("{}: {e}", file.display())))?;
            }
            Ok(format!("wrote {count} instances to {}\n", out.display()))
        }
        Command::Canon { instance } => Ok(InstanceFile::read(&instance)?.to_canonical()),
    }
}

fn solve_file(file: &InstanceFile, closed_form_11: bool) -> Result<SolveReport, CliError> {
    let (inst, rotor, particles) = file.path_instance()?;
    let solution = if closed_form_11 {
        solve_11(&inst, &rotor, &particles)?
    } else {
        solve_any(&inst, &rotor, &particles)?
    };
    Ok(SolveReport::new(&inst, &rotor, &particles, solution)?)
}

fn oracle(file: &InstanceFile, max_steps: u64) -> Result<OracleReport, CliError> {
    let loaded = file.load()?;
    let outcome = full_route_with_budget(&loaded.graph, &loaded.rotor, &loaded.particles, max_steps)?;
    // A solver-style report only makes sense where the invariants exist.
    let report = match file.path_instance() {
        Ok((inst, rotor, particles)) => Some(SolveReport::from_outcome(&inst, &rotor, &particles, &outcome)?),
        Err(_) => None,
    };
    let graph = &loaded.graph;
    Ok(OracleReport {
        report,
        sinks: graph.sinks().to_vec(),
        sink_counts: graph.sinks().iter().map(|&s| Decimal(outcome.particles[s].clone())).collect(),
        final_rotor: outcome.rotor.non_sink_positions(graph),
        steps: Decimal(outcome.steps.into()),
        certificate: Certificate::from_outcome(graph, &outcome),
    })
}

fn read_certificate(path: &Path) -> Result<Certificate, CliError> {
    let schema = |e: String| CliError::Schema(format!("{}: {e}", path.display()));
    let text = std::fs::read_to_string(path).map_err(|e| schema(e.to_string()))?;
    let mut value: Value = serde_json::from_str(&text).map_err(|e| schema(e.to_string()))?;
    if let Some(inner) = value.get_mut("certificate") {
        value = inner.take();
    }
    serde_json::from_value(value).map_err(|e| schema(e.to_string()))
}

fn diff(seed: u64, count: usize, params: &GenParams) -> Result<String, CliError> {
    let mut out = String::new();
    let mut mismatches = 0;
    for (i, r) in random_instances(seed, count, params).iter().enumerate() {
        let solved = SolveReport::new(
            &r.instance,
            &r.rotor,
            &r.particles,
            solve_any(&r.instance, &r.rotor, &r.particles)?,
        )?;
        let outcome = full_route_with_budget(r.instance.graph(), &r.rotor, &r.particles, DEFAULT_STEP_BUDGET)?;
        let simulated = SolveReport::from_outcome(&r.instance, &r.rotor, &r.particles, &outcome)?;
        if solved != simulated {
            mismatches += 1;
            let file = InstanceFile::from_path(&r.instance, &r.rotor, &r.particles);
            out.push_str(&format!("mismatch at instance {i}:\n{}", file.to_canonical()));
        }
    }
    out.push_str(&format!("{count} instances, {mismatches} mismatches\n"));
    if mismatches > 0 {
        print!("{out}");
        return Err(CliError::Failed(format!("{mismatches} of {count} instances disagree")));
    }
    Ok(out)
}

fn batch(dir: &Path, jobs: usize) -> Result<String, CliError> {
    let io = |e: std::io::Error| CliError::Schema(format!("{}: {e}", dir.display()));
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(io)?
        .map(|entry| entry.map(|e| e.path()))
        .collect::<Result<_, _>>()
        .map_err(io)?;
    files.retain(|p| p.extension().is_some_and(|e| e == "json"));
    files.sort();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| CliError::Failed(e.to_string()))?;
    let results: Vec<(String, Result<SolveReport, CliError>)> = pool.install(|| {
        files
            .par_iter()
            .map(|p| {
                let name = p.file_name().map_or_else(String::new, |n| n.to_string_lossy().into_owned());
                (name, InstanceFile::read(p).and_then(|f| solve_file(&f, false)))
            })
            .collect()
    });
    let mut out = String::new();
    let mut failures = 0;
    for (name, result) in results {
        let line = match result {
            Ok(report) => serde_json::json!({ "file": name, "report": report }),
            Err(e) => {
                failures += 1;
                serde_json::json!({ "file": name, "error": e.to_string() })
            }
        };
        out.push_str(&line.to_string());
        out.push('\n');
    }
    if failures > 0 {
        print!("{out}");
        return Err(CliError::Failed(format!("{failures} of {} instances failed", files.len())));
    }
    Ok(out)
}
