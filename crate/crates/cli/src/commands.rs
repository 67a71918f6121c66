use crate::report::Run;
use crate::{BuildKind, Command, SamplesAction};
use std::fs;
use std::io::Write;
use std::path::Path;
use thiserror::Error;
use zic_core::arith::Integer;
use zic_core::free::{FreeWord, TupleWord};
use zic_core::io::{
    instance_to_json, matrix_from_rows, parse_instance, parse_presentation, search_instance,
    MatrixRows,
};
use zic_core::presentation::{samples, Presentation};
use zic_core::reductions::{build_stabilizer, build_ulcp_for, build_urcp, ProblemInstance};
use zic_core::schottky::{hyperbolicity_scan, SchottkyError, SchottkyPair};
use zic_core::search::{Outcome, Predicate};
use zic_core::validate::{run_all, run_suite, SuiteOptions, ValidateError};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("invariant failure: {0}")]
    Invariant(String),
    #[error("{path}: {source}")]
    File {
        path: String,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::File { .. } => 2,
            CliError::Invariant(_) => 5,
        }
    }
}

fn usage(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

fn read(run: &mut Run, path: &Path) -> Result<String, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::File {
        path: path.display().to_string(),
        source,
    })?;
    run.input(&path.display().to_string(), text.as_bytes());
    Ok(text)
}

/// Writes `text` plus a newline to `out`, or to standard output.
fn emit(run: &mut Run, out: Option<&Path>, text: &str) -> Result<(), CliError> {
    let body = format!("{text}\n");
    match out {
        Some(path) => {
            fs::write(path, &body).map_err(|source| CliError::File {
                path: path.display().to_string(),
                source,
            })?;
            run.output(&path.display().to_string(), body.as_bytes());
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(body.as_bytes())
                .map_err(|source| CliError::File {
                    path: "stdout".into(),
                    source,
                })?;
            run.output("stdout", body.as_bytes());
        }
    }
    Ok(())
}

fn pretty(v: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(v).expect("plain data serializes")
}

pub fn dispatch(cmd: &Command, run: &mut Run) -> Result<u8, CliError> {
    match cmd {
        Command::CertifyFree { depth, pair } => certify_free(run, *depth, pair.as_deref()),
        Command::Build {
            kind,
            presentation,
            query,
            pair,
            out,
        } => build(
            run,
            *kind,
            presentation,
            query,
            pair.as_deref(),
            out.as_deref(),
        ),
        Command::Search {
            instance,
            depth,
            budget,
            predicate,
        } => search(run, instance, *depth, *budget, predicate.as_deref()),
        Command::Validate {
            suite,
            depth,
            seed,
            budget,
        } => validate(
            run,
            suite,
            SuiteOptions {
                depth: *depth,
                seed: *seed,
                budget: *budget,
            },
        ),
        Command::Samples { action } => samples_cmd(run, action),
        Command::ConvertCorner { instance, out } => convert_corner(run, instance, out.as_deref()),
    }
}

fn load_pair(run: &mut Run, path: Option<&Path>) -> Result<SchottkyPair, CliError> {
    let Some(path) = path else {
        return Ok(SchottkyPair::canonical());
    };
    let rows: [MatrixRows; 2] = serde_json::from_str(&read(run, path)?).map_err(usage)?;
    let s1 = matrix_from_rows::<Integer>(&rows[0]).map_err(usage)?;
    let s2 = matrix_from_rows::<Integer>(&rows[1]).map_err(usage)?;
    SchottkyPair::new(s1, s2).map_err(|e| match e {
        SchottkyError::NotHyperbolic(..) | SchottkyError::CommutatorTrace(_) => {
            CliError::Invariant(e.to_string())
        }
        _ => usage(e),
    })
}

fn certify_free(run: &mut Run, depth: usize, pair: Option<&Path>) -> Result<u8, CliError> {
    if depth == 0 {
        return Err(usage("--depth must be at least 1"));
    }
    let pair = load_pair(run, pair)?;
    let report = hyperbolicity_scan(&pair, depth);
    let trace = pair.commutator_trace();
    let passed = report.violations.is_empty() && trace < Integer::from(-2);
    let mut json = serde_json::to_value(&report).expect("plain data serializes");
    let trace_json = trace.to_string().parse::<i64>().map_or_else(
        |_| serde_json::Value::from(trace.to_string()),
        serde_json::Value::from,
    );
    json["commutator_trace"] = trace_json;
    json["depth"] = depth.into();
    json["passed"] = passed.into();
    emit(run, None, &pretty(&json))?;
    Ok(if passed { 0 } else { 5 })
}

fn load_presentation(run: &mut Run, name_or_path: &str) -> Result<Presentation, CliError> {
    if samples::source(name_or_path).is_some() {
        return samples::sample(name_or_path).map_err(usage);
    }
    let path = Path::new(name_or_path);
    if !path.exists() {
        return Err(usage(format!(
            "{name_or_path:?} is neither a sample ({}) nor a file",
            samples::names().join(", ")
        )));
    }
    parse_presentation(&read(run, path)?).map_err(usage)
}

fn build(
    run: &mut Run,
    kind: BuildKind,
    presentation: &str,
    query: &str,
    pair: Option<&Path>,
    out: Option<&Path>,
) -> Result<u8, CliError> {
    let p = load_presentation(run, presentation)?;
    let pair = load_pair(run, pair)?;
    let inst = match kind {
        BuildKind::Ulcp => {
            let g = TupleWord::parse(2, query).map_err(usage)?;
            ProblemInstance::External(build_ulcp_for(&p, &g, &pair).map_err(usage)?)
        }
        BuildKind::Urcp => {
            let w = TupleWord::parse(2, query).map_err(usage)?;
            ProblemInstance::Internal(build_urcp(&p, &w, &pair).map_err(usage)?)
        }
        BuildKind::Stabilizer => {
            let w = FreeWord::parse(2, query).map_err(usage)?;
            ProblemInstance::Stabilizer(build_stabilizer(&p, &w, &pair).map_err(usage)?)
        }
    };
    emit(run, out, &instance_to_json(&inst))?;
    Ok(0)
}

fn search(
    run: &mut Run,
    instance: &Path,
    depth: usize,
    budget: u64,
    predicate: Option<&str>,
) -> Result<u8, CliError> {
    let inst = parse_instance(&read(run, instance)?).map_err(usage)?;
    let predicate = predicate
        .map(str::parse::<Predicate>)
        .transpose()
        .map_err(usage)?;
    let cert = search_instance(&inst, predicate, depth, budget).map_err(usage)?;
    emit(run, None, &pretty(&cert))?;
    let outcome: Outcome = cert.outcome.parse().map_err(CliError::Invariant)?;
    Ok(match outcome {
        Outcome::Found => 0,
        Outcome::Exhausted => 3,
        Outcome::Truncated => 4,
    })
}

fn validate(run: &mut Run, suite: &str, opts: SuiteOptions) -> Result<u8, CliError> {
    let reports = if suite == "all" {
        run_all(&opts)
    } else {
        vec![run_suite(suite, &opts).map_err(|e| match e {
            ValidateError::UnknownSuite(_) => usage(format!(
                "{e}; known suites: all, {}",
                zic_core::validate::suites().join(", ")
            )),
        })?]
    };
    emit(run, None, &pretty(&reports))?;
    let mut code = 0;
    for r in reports.iter().filter(|r| !r.passed) {
        eprintln!(
            "suite {} failed: {}",
            r.suite,
            r.failure.as_deref().unwrap_or("no datum")
        );
        code = 5;
    }
    Ok(code)
}

fn samples_cmd(run: &mut Run, action: &SamplesAction) -> Result<u8, CliError> {
    match action {
        SamplesAction::List => {
            let mut lines = Vec::new();
            for name in samples::names() {
                let p = samples::sample(name).map_err(usage)?;
                let oracle = p.oracle().map_or("none", |o| o.kind());
                lines.push(format!(
                    "{name}\t{} generators\t{} relators\t{oracle}",
                    p.generators(),
                    p.relators().len()
                ));
            }
            emit(run, None, &lines.join("\n"))?;
        }
        SamplesAction::Export { name, dir } => {
            let names = match name {
                Some(n) if samples::source(n).is_none() => {
                    return Err(usage(format!("unknown sample {n:?}")))
                }
                Some(n) => vec![n.as_str()],
                None => samples::names(),
            };
            match dir {
                Some(dir) => {
                    fs::create_dir_all(dir).map_err(|source| CliError::File {
                        path: dir.display().to_string(),
                        source,
                    })?;
                    for n in names {
                        let text = samples::source(n).expect("checked above").trim_end();
                        emit(run, Some(&dir.join(format!("{n}.json"))), text)?;
                    }
                }
                None if names.len() == 1 => emit(
                    run,
                    None,
                    samples::source(names[0]).expect("checked").trim_end(),
                )?,
                None => return Err(usage("export without --dir needs --name")),
            }
        }
    }
    Ok(0)
}

fn convert_corner(run: &mut Run, instance: &Path, out: Option<&Path>) -> Result<u8, CliError> {
    let inst = parse_instance(&read(run, instance)?).map_err(usage)?;
    let corner = inst.to_corner().map_err(usage)?;
    emit(run, out, &instance_to_json(&corner))?;
    Ok(0)
}
