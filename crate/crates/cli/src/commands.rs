use std::fs;
use std::path::Path;
use std::process::ExitCode;

use gasep_core::factory::rep_json;
use gasep_core::orbit::Oracle;
use gasep_core::verify::{self, check_counts, Check, Evaluator, Status, VerifyConfig};
use gasep_core::{build_separating_set, Point, Polynomial, RepSpec, SeparatingSet};
use serde_json::json;

use crate::{Command, Format};

pub struct Failure {
    pub code: u8,
    pub message: String,
}

/// Bad input: exit 2.
fn usage(e: impl ToString) -> Failure {
    Failure { code: 2, message: e.to_string() }
}

/// A claim did not hold: exit 1.
fn hard(message: String) -> Failure {
    Failure { code: 1, message }
}

type Outcome = Result<ExitCode, Failure>;

fn print_json(value: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

fn header(rep: &RepSpec) -> String {
    format!("rep {} canonical {:?} permutation {:?}", rep.label(), rep.summands(), rep.permutation())
}

fn read_point(rep: &RepSpec, path: &Path) -> Result<Point, Failure> {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    Point::from_json(rep, &text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn build(rep: &RepSpec, dedup: crate::Dedup, exec: gasep_core::Execution) -> Result<SeparatingSet, Failure> {
    build_separating_set(rep, dedup.into(), exec).map_err(|e| hard(e.to_string()))
}

pub fn run(command: Command) -> Outcome {
    match command {
        Command::Build { rep, format, dedup } => {
            let set = build(&rep.rep, dedup, rep.exec())?;
            match format {
                Format::Json => print_json(&set.to_json()),
                Format::Text => {
                    println!("{}", header(&set.rep));
                    println!(
                        "size {} (raw {}, dedup {})",
                        set.len(),
                        set.raw_total(),
                        json!(set.mode).as_str().unwrap_or("")
                    );
                    for e in &set.elements {
                        println!("{} = {}", e.label(), e.poly);
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { rep, checks, trials, seed, bounds, dedup, format, timings, output } => {
            let config = VerifyConfig {
                checks: Check::parse_list(&checks).map_err(usage)?,
                trials,
                seed,
                bounds,
                dedup: dedup.into(),
                exec: rep.exec(),
                timings,
            };
            let report = verify::verify(&rep.rep, &config).map_err(|e| hard(e.to_string()))?;
            let text = report.to_json_pretty();
            if let Some(path) = output {
                fs::write(&path, format!("{text}\n")).map_err(|e| usage(format!("{}: {e}", path.display())))?;
            }
            match format {
                Format::Json => println!("{text}"),
                Format::Text => {
                    println!("{}", header(&rep.rep));
                    println!("seed {seed} trials {trials} bounds {bounds} size {}", report.size);
                    for c in &report.checks {
                        let status = match c.status {
                            Status::Pass => "pass",
                            Status::Fail => "FAIL",
                            Status::Flagged => "flagged",
                        };
                        println!("{:<11} {status}", c.name.name());
                    }
                }
            }
            if report.passed() {
                Ok(ExitCode::SUCCESS)
            } else {
                Err(hard(format!("verification failed for {}", rep.rep.label())))
            }
        }
        Command::Count { rep, format, dedup } => {
            let set = build(&rep.rep, dedup, rep.exec())?;
            let report = check_counts(&set);
            match format {
                Format::Json => print_json(&json!({
                    "rep": rep_json(&set.rep),
                    "dedup": set.mode,
                    "status": report.status,
                    "details": report.details,
                    "witnesses": report.witnesses,
                })),
                Format::Text => {
                    println!("{}", header(&set.rep));
                    let d = &report.details;
                    for (family, raw) in d["raw_counts"].as_object().expect("object") {
                        println!("{family:<15} raw {raw:>4} kept {:>4}", d["counts"][family]);
                    }
                    println!("size {} raw {} bound 3n^2 = {}", d["size"], d["raw_total"], d["growth_bound"]);
                    let e = &d["expected"];
                    if !e["table"].is_null() {
                        println!("table {}", e["table"]);
                    }
                    if let Some(f) = e["formula"].as_array() {
                        println!("formula {} = {}", f[0].as_str().unwrap_or(""), f[1]);
                    }
                    println!("status {}", json!(report.status).as_str().unwrap_or(""));
                }
            }
            if report.status == Status::Fail {
                Err(hard(format!("count check failed for {}", rep.rep.label())))
            } else {
                Ok(ExitCode::SUCCESS)
            }
        }
        Command::Oracle { rep, v, w, format } => {
            let v = read_point(&rep.rep, &v)?;
            let w = read_point(&rep.rep, &w)?;
            let set = build(&rep.rep, crate::Dedup::Scalar, rep.exec())?;
            let decision = Oracle::new(&rep.rep).decide(&v, &w);
            let eval = Evaluator::new(&set).map_err(|e| hard(e.to_string()))?;
            let diff = eval.first_difference(&v, &w).map_err(|e| hard(e.to_string()))?;
            let verdict = if decision.equivalent { "equivalent" } else { "separated" };
            let witness = diff.as_ref().map(|(e, a, b)| (e.label(), a.to_string(), b.to_string()));
            match format {
                Format::Json => print_json(&json!({
                    "verdict": verdict,
                    "branch": decision.branch.name(),
                    "witness": witness.as_ref().map(|(l, a, b)| json!({ "element": l, "v": a, "w": b })),
                })),
                Format::Text => {
                    println!("{verdict}");
                    if let (false, Some((l, a, b))) = (decision.equivalent, &witness) {
                        println!("witness {l}: {a} vs {b}");
                    }
                }
            }
            match (decision.equivalent, witness) {
                (true, Some((l, _, _))) => Err(hard(format!("oracle says equivalent but {l} separates"))),
                (false, None) => Err(hard("oracle says separated but no element of T separates".into())),
                _ => Ok(ExitCode::SUCCESS),
            }
        }
        Command::Eval { rep, point, poly, format } => {
            let p = read_point(&rep.rep, &point)?;
            let rows: Vec<(String, String)> = match poly {
                Some(text) => {
                    let f: Polynomial = text.parse().map_err(usage)?;
                    vec![(f.to_string(), f.evaluate(&p).map_err(usage)?.to_string())]
                }
                None => {
                    let set = build(&rep.rep, crate::Dedup::Scalar, rep.exec())?;
                    let values = Evaluator::new(&set).and_then(|e| e.values(&p)).map_err(|e| hard(e.to_string()))?;
                    set.elements.iter().zip(values).map(|(e, v)| (e.label(), v.to_string())).collect()
                }
            };
            match format {
                Format::Json => print_json(&rows.iter().map(|(l, v)| json!({ "name": l, "value": v })).collect()),
                Format::Text => {
                    for (l, v) in rows {
                        println!("{l} = {v}");
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
