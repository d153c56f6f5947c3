//! Belief relative to a doxastic range V inside the epistemic range U,
//! read strictly (V inside the extension) and almost everywhere.

use topobelief::model::Valuation;
use topobelief::{
    eval, valid_in_model, Formula, Scenario, ScenarioClass, SemanticsKind, SubsetModel, Topology,
    WorldSet,
};

fn main() -> topobelief::Result<()> {
    let set = |xs: &[usize]| WorldSet::from_worlds(xs.iter().copied());
    let t = Topology::generate_from_subbasis(3, [set(&[0]), set(&[1])])?;
    let m = SubsetModel::new(t, Valuation::from([("p".into(), set(&[0, 2]))]))?;
    let x = set(&[0, 1, 2]);
    let cb: Formula = "B (box p | box !box p)".parse()?;

    let s = Scenario::ed(0, x, x);
    println!(
        "{s}: CB under ed = {}",
        eval(&m, &s, &cb, SemanticsKind::Ed)?
    );
    println!(
        "{s}: CB under ae = {}",
        eval(&m, &s, &cb, SemanticsKind::Ae)?
    );

    let vacuous = Scenario::ed(0, x, WorldSet::EMPTY);
    println!(
        "{vacuous}: B false under ed = {}",
        eval(&m, &vacuous, &"B false".parse()?, SemanticsKind::Ed)?
    );

    let db: Formula = "B p -> !B !p".parse()?;
    for class in [ScenarioClass::All, ScenarioClass::Consistent] {
        let v = valid_in_model(&m, &db, SemanticsKind::Ed, class)?;
        println!(
            "D_B over {class} scenarios: {}",
            if v.valid { "valid" } else { "fails" }
        );
    }
    Ok(())
}
