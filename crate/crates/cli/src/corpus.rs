use rayon::prelude::*;
use serde_json::{json, Value};

use crate::commands::Command;
use crate::problem::parse_problem;
use crate::{run, CliError, Overrides};

const FIXTURES: &[(&str, &str)] = &[
    ("ex92", include_str!("../fixtures/ex92.json")),
    ("ex93", include_str!("../fixtures/ex93.json")),
    ("exb", include_str!("../fixtures/exb.json")),
    ("slh2", include_str!("../fixtures/slh2.json")),
    ("so35", include_str!("../fixtures/so35.json")),
    ("so7", include_str!("../fixtures/so7.json")),
    ("sp2_empty", include_str!("../fixtures/sp2_empty.json")),
];

/// A golden problem with the values each command must produce.
#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: String,
    pub problem: Value,
    pub commands: Vec<Command>,
    /// `command` → list of (JSON pointer into `result`, expected value).
    pub expect: Vec<(Command, String, Value)>,
    pub known_deviations: Vec<String>,
}

fn parse_command(s: &str) -> Option<Command> {
    use clap::ValueEnum;
    Command::from_str(s, true).ok()
}

fn load(name: &str, text: &str) -> Result<Fixture, CliError> {
    let bad = |m: &str| CliError::Usage(format!("fixture {name}: {m}"));
    let doc: Value = serde_json::from_str(text).map_err(|e| bad(&e.to_string()))?;
    let commands = doc["commands"]
        .as_array()
        .ok_or_else(|| bad("commands"))?
        .iter()
        .map(|c| c.as_str().and_then(parse_command).ok_or_else(|| bad("command name")))
        .collect::<Result<Vec<_>, _>>()?;
    let mut expect = Vec::new();
    for (cmd, table) in doc["expect"].as_object().ok_or_else(|| bad("expect"))? {
        let cmd = parse_command(cmd).ok_or_else(|| bad("expect command"))?;
        for (ptr, value) in table.as_object().ok_or_else(|| bad("expect table"))? {
            expect.push((cmd, ptr.clone(), value.clone()));
        }
    }
    let known_deviations = doc["known_deviations"]
        .as_array()
        .map(|a| a.iter().filter_map(|s| s.as_str().map(str::to_string)).collect())
        .unwrap_or_default();
    Ok(Fixture { name: name.to_string(), problem: doc["problem"].clone(), commands, expect, known_deviations })
}

pub fn fixtures() -> Result<Vec<Fixture>, CliError> {
    FIXTURES.iter().map(|(n, t)| load(n, t)).collect()
}

fn check(f: &Fixture, overrides: Overrides) -> Value {
    let mut mismatches = Vec::new();
    let mut errors = Vec::new();
    for &cmd in &f.commands {
        let outcome = parse_problem(&f.problem.to_string()).and_then(|p| run(cmd, p, overrides));
        match outcome {
            Ok(report) => {
                for (_, ptr, want) in f.expect.iter().filter(|(c, _, _)| *c == cmd) {
                    let got = report["result"].pointer(ptr).cloned().unwrap_or(Value::Null);
                    if &got != want {
                        mismatches
                            .push(json!({"command": cmd.name(), "pointer": ptr, "expected": want, "actual": got}));
                    }
                }
            }
            Err(e) => errors.push(json!({"command": cmd.name(), "error": e.to_string()})),
        }
    }
    let passed = mismatches.is_empty() && errors.is_empty();
    json!({
        "name": f.name,
        "passed": passed,
        "checks": f.expect.len(),
        "mismatches": mismatches,
        "errors": errors,
        "known_deviations": f.known_deviations,
    })
}

/// Runs every fixture; the flag is false if any check failed.
pub fn run_corpus(overrides: Overrides, jobs: usize) -> Result<(Value, bool), CliError> {
    let all = fixtures()?;
    let pool =
        rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build().map_err(|e| CliError::Usage(e.to_string()))?;
    let results: Vec<Value> = pool.install(|| all.par_iter().map(|f| check(f, overrides)).collect());
    let ok = results.iter().all(|r| r["passed"] == json!(true));
    let passed = results.iter().filter(|r| r["passed"] == json!(true)).count();
    Ok((crate::canonical(json!({"command": "corpus", "fixtures": results, "passed": passed, "total": all.len()})), ok))
}
