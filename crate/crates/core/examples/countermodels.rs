//! Exhaustive countermodel search for the registered non-theorems.

use topobelief::semantics::explain;
use topobelief::{expected_failures, find_countermodel, SearchConfig, SearchOutcome};

fn main() -> topobelief::Result<()> {
    for e in expected_failures() {
        let config = SearchConfig {
            exhaustive_max_n: e.max_size,
            ..SearchConfig::default()
        };
        match find_countermodel(&e.formula, e.semantics, e.class, &config)? {
            SearchOutcome::Found(cm) => {
                let failing = &cm.witness.trace.last().expect("nonempty trace").formula;
                println!(
                    "{:<18} {}/{}: {} world(s) at {}, failing `{failing}`",
                    e.label,
                    e.semantics,
                    e.class,
                    cm.model.size(),
                    cm.witness.scenario
                );
                println!("{:<18} {}", "", cm.model.dump().trim_end());
            }
            SearchOutcome::Exhausted { .. } => println!("{:<18} no countermodel found", e.label),
        }
        let trace = explain(&e.model, &e.scenario, &e.formula, e.semantics)?;
        println!("{:<18} stored witness fails: {}", "", !trace[0].holds);
    }
    Ok(())
}
