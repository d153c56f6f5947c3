//! Strong belief on the Sierpinski space: a false belief that is still
//! weakly factive, and the reduction of belief to knowledge and knowability.

use topobelief::model::Valuation;
use topobelief::semantics::extension;
use topobelief::{
    eval, valid_in_model, Formula, Scenario, ScenarioClass, SemanticsKind, SubsetModel, Topology,
    WorldSet,
};

fn main() -> topobelief::Result<()> {
    let m = SubsetModel::new(
        Topology::sierpinski(),
        Valuation::from([("p".into(), WorldSet::singleton(0))]),
    )?;
    let x = WorldSet::full(2);
    let s = Scenario::epistemic(1, x);
    let k = SemanticsKind::Strong;

    for text in [
        "p",
        "K p",
        "B p",
        "B p & !p",
        "B p -> dia p",
        "box p",
        "dia p",
    ] {
        let f: Formula = text.parse()?;
        println!(
            "{s}  {text:<14} {:<5}  extension {}",
            eval(&m, &s, &f, k)?,
            extension(&m, x, None, &f, k)?
        );
    }

    let eq: Formula = "B p <-> K dia box p".parse()?;
    println!(
        "{eq} valid: {}",
        valid_in_model(&m, &eq, k, ScenarioClass::All)?.valid
    );

    let bad: Formula = "B p -> p".parse()?;
    let verdict = valid_in_model(&m, &bad, k, ScenarioClass::All)?;
    if let Some(w) = verdict.witness {
        println!("{bad} fails at {}", w.scenario);
    }
    Ok(())
}
