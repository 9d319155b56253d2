mod args;
mod commands;
mod io;
mod report;

use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use serde_json::json;

use ramsey_core::Error;

use args::{Cli, Command, Construct, Verify};
use commands::Run;
use io::Artifacts;
use report::{RunReport, Status};

const USAGE_ERROR: u8 = 3;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(USAGE_ERROR)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(status) => ExitCode::from(status as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(USAGE_ERROR)
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Params { .. } => "params",
        Command::Arrows { .. } => "arrows",
        Command::Construct(Construct::Hypergraph { .. }) => "construct-hypergraph",
        Command::Construct(Construct::Blowup { .. }) => "construct-blowup",
        Command::Construct(Construct::Tower { .. }) => "construct-tower",
        Command::Construct(Construct::Theorem8 { .. }) => "construct-theorem8",
        Command::Verify(Verify::Lemma3 { .. }) => "verify-lemma3",
        Command::Verify(Verify::Lemma5 { .. }) => "verify-lemma5",
        Command::Verify(Verify::Focus { .. }) => "verify-focus",
        Command::Verify(Verify::Claim { .. }) => "verify-claim",
        Command::Verify(Verify::Pprofile { .. }) => "verify-pprofile",
        Command::Verify(Verify::Theorem8 { .. }) => "verify-theorem8",
        Command::Separate { .. } => "separate",
    }
}

fn run(cli: Cli) -> anyhow::Result<Status> {
    let name = command_name(&cli.command);
    let mut run = Run {
        name: name.to_string(),
        artifacts: Artifacts::new(&cli.global.out_dir, cli.global.format)?,
        global: cli.global,
        inputs: Vec::new(),
        parameters: json!({}),
        seed: None,
    };
    let start = Instant::now();
    let result = match &cli.command {
        Command::Params { graph } => commands::params(&mut run, graph),
        Command::Arrows { host, pattern } => commands::arrows(&mut run, host, pattern),
        Command::Construct(c) => commands::construct(&mut run, c),
        Command::Verify(v) => commands::verify(&mut run, v),
        Command::Separate { g, h, n_max } => commands::separate(&mut run, g, h, *n_max),
    };
    // budget failures that escaped a command are still reported as unknown
    let (status, outcome) = match result {
        Ok(o) => o,
        Err(e) => match e.downcast_ref::<Error>() {
            Some(
                inner @ (Error::BudgetExhausted { .. }
                | Error::SearchExhausted { .. }
                | Error::SizeBudgetExceeded { .. }),
            ) => {
                println!("unknown: {inner}");
                (Status::Unknown, json!({ "error": inner.to_string() }))
            }
            _ => return Err(e),
        },
    };
    let elapsed = start.elapsed();
    let report_name = format!("{}-report.json", run.name);
    let mut artifacts = run.artifacts.written.clone();
    artifacts.push(report_name.clone());
    let report = RunReport {
        command: run.name.clone(),
        inputs: run.inputs,
        parameters: run.parameters,
        seed: run.seed,
        status: status.label(),
        outcome,
        artifacts,
    };
    // through Value so keys are sorted, as a re-parsed report would be
    run.artifacts
        .write_json(&report_name, &serde_json::to_value(&report)?)?;
    println!(
        "{}: {} in {:.3}s (report {report_name})",
        run.name,
        status.label(),
        elapsed.as_secs_f64()
    );
    Ok(status)
}
