//! Runs the twelve reproducibility experiments, one line each, and fails if
//! any check fails or any experiment exceeds its time limit.

use std::process::ExitCode;

use synchro::verify::EXPERIMENTS;

fn main() -> ExitCode {
    let seed = std::env::var("SYNCHRO_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(0);
    let mut failed = 0;
    for experiment in &EXPERIMENTS {
        let report = experiment.run(seed);
        println!("{report}");
        if !report.passed {
            failed += 1;
        }
    }
    println!(
        "acceptance: {}/{} criteria passed (seed {seed})",
        EXPERIMENTS.len() - failed,
        EXPERIMENTS.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
