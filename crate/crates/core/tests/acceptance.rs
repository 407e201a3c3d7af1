//! Acceptance criteria. Prints one line per criterion and exits nonzero if any
//! fails. Every comparison is exact; the time bounds are wall clock.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use kfpoly::verify::{run_suite, Suite, SuiteParams, VerifySuiteReport};

struct Criterion {
    id: u8,
    title: &'static str,
    limit: Duration,
    runs: Vec<(Suite, SuiteParams)>,
}

fn params(n: usize, max_size: i64, max_entry: i64) -> SuiteParams {
    SuiteParams { n, max_size, max_entry }
}

fn criteria() -> Vec<Criterion> {
    let secs = Duration::from_secs;
    vec![
        Criterion {
            id: 1,
            title: "worked example for (1,0,0), (1,1,1)",
            limit: secs(1),
            runs: vec![(Suite::WorkedExample, params(3, 3, 3))],
        },
        Criterion {
            id: 2,
            title: "u = K~^D and U = K~^C at hatted pairs, n <= 3, entries <= 3",
            limit: secs(60),
            runs: vec![(Suite::DualitiesHat, params(3, 9, 3))],
        },
        Criterion {
            id: 3,
            title: "K~ = K after translation by k0 and k0 + 1, B/C/D, n <= 3, sizes <= 6",
            limit: secs(120),
            runs: vec![(Suite::KtildeTranslation, params(3, 6, 3))],
        },
        Criterion {
            id: 4,
            title: "decompositions of K~, u, U and positivity, n <= 3, sizes <= 6",
            limit: secs(300),
            runs: vec![(Suite::Decompositions, params(3, 6, 3))],
        },
        Criterion {
            id: 5,
            title: "u(lambda, 1^n) = q^{(n - |lambda|)/2} X, n <= 6",
            limit: secs(120),
            runs: vec![(Suite::XEqualsU, params(6, 6, 3))],
        },
        Criterion {
            id: 6,
            title: "U(lambda, 1^n) = q^{n - |lambda|} X, n <= 6",
            limit: secs(120),
            runs: vec![(Suite::XEqualsBigU, params(6, 6, 3))],
        },
        Criterion {
            id: 7,
            title: "charge oracle for |lambda| = |mu| <= 6 and conjugation for n <= 6",
            limit: secs(120),
            runs: vec![(Suite::ChargeOracle, params(6, 6, 3))],
        },
        Criterion {
            id: 8,
            title: "structural suites: partition functions, crystals, branching, LR, conjugation duality",
            limit: secs(600),
            runs: vec![
                (Suite::PartitionFnOracle, params(3, 6, 3)),
                (Suite::CrystalIdentities, params(6, 6, 3)),
                (Suite::Branching, params(3, 4, 3)),
                (Suite::ConjDuality, params(6, 6, 3)),
            ],
        },
    ]
}

fn main() -> ExitCode {
    let mut all_ok = true;
    for c in criteria() {
        let start = Instant::now();
        let reports: Vec<VerifySuiteReport> = c
            .runs
            .iter()
            .map(|(s, p)| run_suite(*s, *p).expect("suite runs"))
            .collect();
        let elapsed = start.elapsed();
        let checks: usize = reports.iter().map(|r| r.checks).sum();
        let failures: Vec<_> = reports.iter().flat_map(|r| r.failures.iter()).collect();
        let in_time = elapsed <= c.limit;
        let ok = failures.is_empty() && in_time && checks > 0;
        all_ok &= ok;
        println!(
            "criterion {}: {} | {} | {} checks, {} failures, {:.3}s (limit {}s)",
            c.id,
            if ok { "PASS" } else { "FAIL" },
            c.title,
            checks,
            failures.len(),
            elapsed.as_secs_f64(),
            c.limit.as_secs()
        );
        for f in failures.iter().take(5) {
            println!("    {} at {}: {} != {}", f.identity, f.inputs, f.lhs, f.rhs);
        }
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
