//! Independent reference implementations used as test oracles. Nothing here
//! calls the library's topology operators or evaluators; sets are plain `u32`
//! bit patterns.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use topobelief::{Formula, SemanticsKind};

pub fn full(n: usize) -> u32 {
    (1u32 << n) - 1
}

fn subset(a: u32, b: u32) -> bool {
    a & !b == 0
}

/// Topologies on `n` points as sorted open families, via reflexive relations:
/// keep the transitive ones and collect their up-set families.
pub fn topologies_from_preorders(n: usize) -> BTreeSet<Vec<u32>> {
    let off: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|(i, j)| i != j)
        .collect();
    let mut out = BTreeSet::new();
    for mask in 0u64..(1 << off.len()) {
        let mut r = vec![vec![false; n]; n];
        for (i, row) in r.iter_mut().enumerate() {
            row[i] = true;
        }
        for (k, &(i, j)) in off.iter().enumerate() {
            if mask >> k & 1 == 1 {
                r[i][j] = true;
            }
        }
        let transitive =
            (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| !(r[a][b] && r[b][c]) || r[a][c])));
        if !transitive {
            continue;
        }
        let mut opens: Vec<u32> = (0..1u32 << n)
            .filter(|&s| {
                (0..n).all(|a| s >> a & 1 == 0 || (0..n).all(|b| !r[a][b] || s >> b & 1 == 1))
            })
            .collect();
        opens.sort();
        out.insert(opens);
    }
    out
}

/// Topologies on `n` points by brute force over all families containing the
/// empty set and the carrier, keeping those closed under union and intersection.
pub fn topologies_from_families(n: usize) -> BTreeSet<Vec<u32>> {
    let inner: Vec<u32> = (1..full(n)).collect();
    let mut out = BTreeSet::new();
    for mask in 0u64..(1 << inner.len()) {
        let mut fam = vec![0, full(n)];
        fam.extend(
            inner
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &s)| s),
        );
        let set: BTreeSet<u32> = fam.iter().copied().collect();
        if fam.iter().all(|&a| {
            fam.iter()
                .all(|&b| set.contains(&(a | b)) && set.contains(&(a & b)))
        }) {
            out.insert(set.into_iter().collect());
        }
    }
    out
}

/// Union of every open inside `a`.
pub fn interior(opens: &[u32], a: u32) -> u32 {
    opens
        .iter()
        .filter(|&&o| subset(o, a))
        .fold(0, |acc, &o| acc | o)
}

/// Points all of whose open neighbourhoods meet `a`.
pub fn closure(opens: &[u32], n: usize, a: u32) -> u32 {
    (0..n)
        .filter(|&x| {
            opens
                .iter()
                .filter(|&&o| o >> x & 1 == 1)
                .all(|&o| o & a != 0)
        })
        .fold(0, |acc, x| acc | 1 << x)
}

pub fn nowhere_dense(opens: &[u32], n: usize, a: u32) -> bool {
    interior(opens, closure(opens, n, a)) == 0
}

/// A subset model in oracle form.
#[derive(Clone, Debug)]
pub struct Space {
    pub n: usize,
    pub opens: Vec<u32>,
    pub val: BTreeMap<String, u32>,
}

impl Space {
    pub fn from_model(m: &topobelief::SubsetModel) -> Space {
        Space {
            n: m.size(),
            opens: m.topology().opens().iter().map(|o| o.bits()).collect(),
            val: m
                .valuation()
                .iter()
                .map(|(k, v)| (k.clone(), v.bits()))
                .collect(),
        }
    }

    /// Extension of `f` under ranges `u` and `v`, computed clause by clause.
    pub fn ext(&self, u: u32, v: Option<u32>, f: &Formula, k: SemanticsKind) -> u32 {
        let e = |g: &Formula| self.ext(u, v, g, k);
        match f {
            Formula::Atom(p) => self.val.get(p).copied().unwrap_or(0) & u,
            Formula::Top => u,
            Formula::Bot => 0,
            Formula::Not(a) => u & !e(a),
            Formula::And(a, b) => e(a) & e(b),
            Formula::Or(a, b) => e(a) | e(b),
            Formula::Implies(a, b) => (u & !e(a)) | e(b),
            Formula::Iff(a, b) => {
                let (x, y) = (e(a), e(b));
                u & !(x ^ y)
            }
            Formula::Know(a) => {
                if e(a) == u {
                    u
                } else {
                    0
                }
            }
            Formula::Knowable(a) => {
                let inner = e(a);
                (0..self.n)
                    .filter(|&x| {
                        self.opens
                            .iter()
                            .any(|&o| o >> x & 1 == 1 && subset(o, inner))
                    })
                    .fold(0, |acc, x| acc | 1 << x)
            }
            Formula::Believe(a) => {
                let inner = e(a);
                let holds = match k {
                    SemanticsKind::Strong => subset(
                        u,
                        closure(&self.opens, self.n, interior(&self.opens, inner)),
                    ),
                    SemanticsKind::Ed => subset(v.expect("doxastic range"), inner),
                    SemanticsKind::Ae => {
                        nowhere_dense(&self.opens, self.n, v.expect("doxastic range") & !inner)
                    }
                };
                if holds {
                    u
                } else {
                    0
                }
            }
        }
    }

    pub fn holds(&self, x: usize, u: u32, v: Option<u32>, f: &Formula, k: SemanticsKind) -> bool {
        self.ext(u, v, f, k) >> x & 1 == 1
    }

    pub fn nonempty_opens(&self) -> impl Iterator<Item = u32> + '_ {
        self.opens.iter().copied().filter(|&o| o != 0)
    }
}

/// Plain Kripke evaluation of the belief-only fragment.
pub fn kripke(succ: &[u32], val: &BTreeMap<String, u32>, x: usize, f: &Formula) -> bool {
    let n = succ.len();
    let h = |y: usize, g: &Formula| kripke(succ, val, y, g);
    match f {
        Formula::Atom(p) => val.get(p).is_some_and(|s| s >> x & 1 == 1),
        Formula::Top => true,
        Formula::Bot => false,
        Formula::Not(a) => !h(x, a),
        Formula::And(a, b) => h(x, a) && h(x, b),
        Formula::Or(a, b) => h(x, a) || h(x, b),
        Formula::Implies(a, b) => !h(x, a) || h(x, b),
        Formula::Iff(a, b) => h(x, a) == h(x, b),
        Formula::Believe(a) => (0..n).filter(|&y| succ[x] >> y & 1 == 1).all(|y| h(y, a)),
        _ => panic!("not in the belief fragment"),
    }
}

/// Classes of "shares a successor".
pub fn cells(succ: &[u32]) -> Vec<u32> {
    let n = succ.len();
    (0..n)
        .map(|x| {
            (0..n)
                .filter(|&y| succ[x] & succ[y] != 0)
                .fold(0, |acc, y| acc | 1 << y)
        })
        .collect()
}

fn random_formula(rng: &mut ChaCha8Rng, depth: usize, size: usize, belief_only: bool) -> Formula {
    let atom = |rng: &mut ChaCha8Rng| Formula::atom(if rng.gen_bool(0.5) { "p" } else { "q" });
    if size == 0 {
        return match rng.gen_range(0..10) {
            0 => Formula::Top,
            1 => Formula::Bot,
            _ => atom(rng),
        };
    }
    let modal = if belief_only { 1 } else { 6 };
    let choice = rng.gen_range(0..5 + if depth > 0 { modal } else { 0 });
    let sub = |rng: &mut ChaCha8Rng, d: usize| random_formula(rng, d, size - 1, belief_only);
    match choice {
        0 => Formula::not(sub(rng, depth)),
        1 => Formula::and(sub(rng, depth), sub(rng, depth)),
        2 => Formula::or(sub(rng, depth), sub(rng, depth)),
        3 => Formula::implies(sub(rng, depth), sub(rng, depth)),
        4 => Formula::iff(sub(rng, depth), sub(rng, depth)),
        _ if belief_only => Formula::believe(sub(rng, depth - 1)),
        5 => Formula::know(sub(rng, depth - 1)),
        6 => Formula::knowable(sub(rng, depth - 1)),
        7 => Formula::believe(sub(rng, depth - 1)),
        8 => Formula::dia(sub(rng, depth - 1)),
        9 => Formula::hat_know(sub(rng, depth - 1)),
        _ => Formula::hat_believe(sub(rng, depth - 1)),
    }
}

fn corpus_from(fixed: &[&str], seed: u64, count: usize, belief_only: bool) -> Vec<Formula> {
    let mut seen: BTreeSet<Formula> = BTreeSet::new();
    let mut out = Vec::new();
    for t in fixed {
        let f: Formula = t.parse().expect("fixed corpus formula parses");
        if seen.insert(f.clone()) {
            out.push(f);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    while out.len() < count {
        let size = rng.gen_range(1..=5);
        let f = random_formula(&mut rng, 3, size, belief_only);
        if f.modal_depth() <= 3 && seen.insert(f.clone()) {
            out.push(f);
        }
    }
    out
}

/// Formulas over `p`, `q` of modal depth at most 3 using every operator.
pub fn corpus() -> Vec<Formula> {
    corpus_from(
        &[
            "p",
            "q",
            "true",
            "false",
            "B p",
            "K p",
            "box p",
            "dia p",
            "B !p",
            "B B p",
            "B box p",
            "B dia p",
            "B K p",
            "K B p",
            "box B p",
            "B (p -> q)",
            "B (box p | box !box p)",
            "B dia box p",
            "hatB (p & q)",
            "hatK box q",
            "B (K p | !q)",
            "K dia box B q",
        ],
        17,
        160,
        false,
    )
}

/// Formulas of the belief-only fragment over `p`, `q`, modal depth at most 3.
pub fn belief_corpus() -> Vec<Formula> {
    corpus_from(
        &[
            "true",
            "p",
            "B p",
            "hatB p",
            "B false",
            "B B p",
            "B !B q",
            "B (p -> q) -> B p -> B q",
            "!B p -> B !B p",
        ],
        23,
        80,
        true,
    )
}
