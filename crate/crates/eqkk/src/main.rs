use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use eqkk::report::Status;
use eqkk::{builtin, resolve, verify, HarnessError, Resolution, RunOptions, Scenario, Suite};

#[derive(Parser)]
#[command(name = "eqkk", version, about = "Verify equivariant algebra constructions on finite scenarios")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite and print a summary.
    Verify {
        /// Scenario JSON file, or the name of a shipped scenario.
        #[arg(long)]
        scenario: String,
        /// One of axioms, stability, homotopy, classify, green-julg, ind-res,
        /// baaj-skandalis, all.
        #[arg(long, default_value = "all")]
        suite: Suite,
        #[arg(long)]
        truncation: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        /// Write the JSON report here.
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long, env = "EQKK_JOBS", default_value_t = 1)]
        jobs: usize,
    },
    /// List the shipped scenarios.
    Scenarios,
    /// Print dimensions, gradings and the coset table of a scenario.
    Describe {
        #[arg(long)]
        scenario: String,
    },
}

fn load(arg: &str) -> Result<Scenario, HarnessError> {
    let path = Path::new(arg);
    if path.exists() {
        return Scenario::from_json(&std::fs::read_to_string(path)?);
    }
    builtin::load(arg).unwrap_or_else(|| {
        Err(HarnessError::BadScenario {
            path: arg.to_string(),
            message: "no such file or shipped scenario".to_string(),
        })
    })
}

fn exit_for(err: &HarnessError) -> ExitCode {
    eprintln!("error: {err}");
    match err {
        HarnessError::BadScenario { .. } | HarnessError::UnknownSuite(_) | HarnessError::Json(_) => {
            ExitCode::from(2)
        }
        _ => ExitCode::from(3),
    }
}

fn run_verify(scenario: &str, options: RunOptions, report_path: Option<PathBuf>) -> Result<bool, HarnessError> {
    let scenario = load(scenario)?;
    let start = Instant::now();
    let report = verify(&scenario, &options)?;
    let elapsed = start.elapsed();
    for r in &report.records {
        match r.status {
            Status::Pass => {}
            Status::Skipped => {
                println!("skip  {} {} [{}]: {}", r.suite, r.anchor, r.instance, r.detail.as_deref().unwrap_or(""))
            }
            Status::Fail | Status::Expected => {
                let tag = if r.status == Status::Fail { "FAIL" } else { "xfail" };
                let kind = r.kind.as_deref().map(|k| format!(" {k}")).unwrap_or_default();
                println!(
                    "{tag} {} {} [{}]{kind}: {}",
                    r.suite,
                    r.anchor,
                    r.instance,
                    r.witness.as_deref().unwrap_or("")
                );
            }
        }
    }
    let s = &report.summary;
    println!(
        "{} / {}: {} checks, {} passed, {} failed, {} expected failures, {} skipped in {:.2}s",
        report.scenario,
        report.suite,
        s.total,
        s.pass,
        s.fail,
        s.expected,
        s.skipped,
        elapsed.as_secs_f64()
    );
    if let Some(path) = report_path {
        std::fs::write(path, report.to_json())?;
    }
    Ok(report.is_success())
}

fn describe(arg: &str) -> Result<(), HarnessError> {
    let scenario = load(arg)?;
    println!("scenario {}", scenario.name);
    if let Some(d) = &scenario.description {
        println!("  {d}");
    }
    let resolved = match resolve(&scenario)? {
        Resolution::Ready(r) => r,
        Resolution::BrokenGroup(e) => {
            println!("group table is not a group: {e}");
            return Ok(());
        }
    };
    let g = &resolved.group;
    println!("scalars {}", resolved.ring);
    println!("group of order {}: {}", g.order(), g.names().join(", "));
    if let Some(cosets) = &resolved.cosets {
        println!("cosets of H (index {}):", cosets.len());
        for (c, members) in cosets.cosets().iter().enumerate() {
            let names: Vec<&str> = members.iter().map(|&x| g.name(x)).collect();
            println!("  {:<8} rep {:<6} {{{}}}", cosets.label(c), g.name(cosets.rep(c)), names.join(", "));
        }
    }
    for a in &resolved.algebras {
        match &a.built {
            Err(e) => println!("algebra {}: invalid ({}): {e}", a.name, e.kind()),
            Ok(alg) => {
                let action = match alg.action() {
                    None => "none",
                    Some(act) if act.is_trivial() => "trivial",
                    Some(_) => "nontrivial",
                };
                println!("algebra {}: dim {}, action {action}", a.name, alg.dim());
                match alg.grading() {
                    None => println!("  ungraded"),
                    Some(gr) => {
                        let degrees: Vec<String> = (0..alg.dim())
                            .map(|i| format!("{}:{}", alg.label(i), g.name(gr.degree(i))))
                            .collect();
                        println!("  degrees {}", degrees.join(" "));
                    }
                }
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify { scenario, suite, truncation, seed, report, jobs } => {
            let options = RunOptions { suite, truncation, seed, jobs };
            match run_verify(&scenario, options, report) {
                Ok(true) => ExitCode::SUCCESS,
                Ok(false) => ExitCode::FAILURE,
                Err(e) => exit_for(&e),
            }
        }
        Command::Scenarios => {
            for name in builtin::names() {
                let s = builtin::load(name).expect("listed").expect("shipped scenario parses");
                println!("{name:<22} {}", s.description.as_deref().unwrap_or(""));
            }
            ExitCode::SUCCESS
        }
        Command::Describe { scenario } => match describe(&scenario) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => exit_for(&e),
        },
    }
}
