//! Acceptance run: one PASS/FAIL line per criterion, from the seeded
//! suites at their default sizes. Exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use ratmap_cli::suites::{run_suite, SuiteReport, DEFAULT_SEED, SUITES};

/// Wall-clock limits stated with the criteria (checked as part of them).
fn time_limit(name: &str) -> Option<Duration> {
    match name {
        "nu-table" => Some(Duration::from_secs(1)),
        "dynatomic" => Some(Duration::from_secs(60)),
        _ => None,
    }
}

fn detail(r: &SuiteReport) -> String {
    let mut parts: Vec<String> = r
        .properties
        .iter()
        .map(|p| {
            let mut s = format!("{} {} checked", p.name, p.checked);
            if p.skipped > 0 {
                s += &format!(" ({} skipped)", p.skipped);
            }
            if !p.passed {
                s += &format!(" FAILED ({} counterexample(s))", p.counterexamples.len());
            }
            s
        })
        .collect();
    for key in ["c", "c(z^2)", "c(z^2-2)", "max relative error", "tolerance"] {
        if let Some(v) = r.notes.get(key) {
            parts.push(format!("{key} = {v}"));
        }
    }
    parts.join("; ")
}

fn main() -> ExitCode {
    let seed = std::env::var("RATMAP_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(DEFAULT_SEED);
    println!("acceptance run, seed {seed}");
    let total = Instant::now();
    let mut failed = 0;
    for suite in SUITES {
        let start = Instant::now();
        let report = match run_suite(suite.name, seed, None) {
            Ok(r) => r,
            Err(e) => {
                println!("FAIL {}: {e}", suite.name);
                failed += 1;
                continue;
            }
        };
        let elapsed = start.elapsed();
        let in_time = time_limit(suite.name).is_none_or(|limit| elapsed <= limit);
        let ok = report.passed && in_time;
        failed += usize::from(!ok);
        let label = match suite.criterion {
            Some(k) => format!("criterion {k:>2}"),
            None => "supplementary".to_string(),
        };
        println!(
            "{} {label} [{}] {} — {} ({:.1} s{})",
            if ok { "PASS" } else { "FAIL" },
            suite.name,
            suite.summary,
            detail(&report),
            elapsed.as_secs_f64(),
            if in_time { "" } else { ", over the time limit" }
        );
        if !report.passed {
            for p in report.properties.iter().filter(|p| !p.passed) {
                for c in &p.counterexamples {
                    println!("    {}: {c}", p.name);
                }
            }
        }
    }
    let elapsed = total.elapsed();
    let in_time = elapsed <= Duration::from_secs(300);
    failed += usize::from(!in_time);
    println!("{} total runtime {:.1} s (limit 300 s)", if in_time { "PASS" } else { "FAIL" }, elapsed.as_secs_f64());
    if failed == 0 {
        println!("all acceptance criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("{failed} acceptance check(s) failed");
        ExitCode::FAILURE
    }
}
