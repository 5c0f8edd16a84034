//! Runs the invariant suite over every pargraph on at most `LIMIT` vertices.
//!
//!     cargo run --release --example corpus_sweep -- 5

use pargraph::corpus::{run_suite, SuiteOptions};

fn main() {
    let limit = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(4);
    let summary = run_suite(&SuiteOptions { limit, ..SuiteOptions::default() });
    println!("{} pargraphs on at most {limit} vertices", summary.instances);
    for (check, t) in &summary.checks {
        println!("  {check:<11} {:>6} passed {:>3} failed", t.passed, t.failed);
    }
    if let Some(c) = &summary.first_counterexample {
        println!("first counterexample ({}): {}\n{}", c.check, c.message, c.document);
        std::process::exit(1);
    }
}
