//! Belief frames, their brush decomposition, and agreement with strong
//! belief on the generated Alexandroff topology.

use topobelief::model::Valuation;
use topobelief::relational::BridgeCheck;
use topobelief::{random_belief_frame, Formula, RelationalModel, WorldSet};

fn main() -> topobelief::Result<()> {
    let pin = RelationalModel::new(
        2,
        [(0, 1), (1, 1)],
        Valuation::from([("p".into(), WorldSet::singleton(1))]),
    )?;
    println!("pin: {:?}", pin.classify());
    let b_p: Formula = "B p & !p".parse()?;
    println!("B p & !p at 0: {}", pin.eval(0, &b_p)?);
    println!("subset model: {}", pin.to_subset_model()?.dump().trim_end());

    let corpus: Vec<Formula> = [
        "B p",
        "hatB p",
        "B !B q",
        "B (p -> q) -> B p -> B q",
        "!B false",
    ]
    .iter()
    .map(|t| t.parse())
    .collect::<Result<_, _>>()?;
    let mut agreements = 0;
    for seed in 0..50 {
        let frame = random_belief_frame(seed, 1 + (seed as usize % 6), 2)?;
        let d = frame.decompose()?;
        assert_eq!(
            d.reconstruct(frame.size()),
            (0..frame.size())
                .map(|x| frame.successors(x))
                .collect::<Vec<_>>()
        );
        for f in &corpus {
            if frame.check_bridge(f)? == BridgeCheck::Agrees {
                agreements += 1;
            }
        }
    }
    println!(
        "relational and topological belief agree in {agreements} of {} checks",
        50 * corpus.len()
    );
    Ok(())
}
