//! Enumerating finite topologies and checking the interior/closure laws.

use topobelief::{enumerate_topologies, Topology, WorldSet};

fn main() -> topobelief::Result<()> {
    for n in 1..=4 {
        println!(
            "{n} point(s): {} topologies",
            enumerate_topologies(n)?.len()
        );
    }

    let t = Topology::generate_from_subbasis(3, [WorldSet::singleton(0), WorldSet::singleton(1)])?;
    let opens: Vec<String> = t.opens().iter().map(|o| o.to_string()).collect();
    println!("generated from {{0}}, {{1}}: {}", opens.join(" "));

    let a = WorldSet::from_worlds([1, 2]);
    println!("int{a} = {}, cl{a} = {}", t.interior(a), t.closure(a));

    let mut checked = 0;
    for t in enumerate_topologies(3)? {
        let x = t.carrier();
        for a in WorldSet::all_subsets(3) {
            assert_eq!(t.interior(t.interior(a)), t.interior(a));
            assert_eq!(
                t.closure(a),
                t.interior(a.complement_in(x)).complement_in(x)
            );
            for b in WorldSet::all_subsets(3) {
                assert_eq!(
                    t.interior(a.intersection(b)),
                    t.interior(a).intersection(t.interior(b))
                );
                if t.is_open(a) {
                    assert_eq!(t.almost_subset(a, b), a.is_subset(t.closure(t.interior(b))));
                }
                checked += 1;
            }
        }
    }
    println!("laws hold on {checked} subset pairs over 3 points");
    Ok(())
}
