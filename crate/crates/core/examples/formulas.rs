//! Parsing, printing, scheme instantiation and the three translations.

use topobelief::formula::{MetaVar, Substitution};
use topobelief::{Formula, Scheme, SchemeName, Translation};

fn main() -> topobelief::Result<()> {
    let f: Formula = "B p <-> K dia box p".parse()?;
    println!("parsed:      {f}");
    println!("debug:       {f:?}");
    println!("depth:       {}", f.modal_depth());
    println!("subformulas: {}", f.subformulas().len());

    let nested: Formula = "B B p".parse()?;
    println!(
        "e-map:       {}",
        nested.translate(Translation::BeliefToKnowledge)
    );
    println!(
        "alpha-map:   {}",
        nested.translate(Translation::AlmostBelief)
    );
    println!(
        "t-map:       {}",
        "box K p"
            .parse::<Formula>()?
            .translate(Translation::BoxToKnow)
    );

    let cb = Scheme::new(SchemeName::ConfidentBelief);
    let subst = Substitution::from([(MetaVar::Phi, Formula::atom("p"))]);
    println!("CB instance: {}", cb.instantiate(&subst)?);

    match "p &".parse::<Formula>() {
        Ok(_) => unreachable!(),
        Err(e) => println!("rejected:    {e}"),
    }
    Ok(())
}
