//! Soundness runs: every axiom system under its own semantics, over all
//! small models and a handful of random ones.

use topobelief::suites::{default_instantiations, matrix};
use topobelief::{run_suite, Batch};

fn main() -> topobelief::Result<()> {
    let batch = Batch {
        exhaustive_max_n: 3,
        random_models: 30,
        ..Batch::default()
    };
    for suite in matrix() {
        let report = run_suite(&suite, &batch, &default_instantiations())?;
        println!(
            "{:<12} {:<6} {:<10} {:>5} instances  {}",
            report.suite,
            report.semantics,
            report.class,
            report.results.len(),
            if report.is_clean() {
                "clean".to_string()
            } else {
                format!("{} countermodels", report.countermodels())
            }
        );
    }
    Ok(())
}
