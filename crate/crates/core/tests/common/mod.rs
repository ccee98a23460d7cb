//! Seeded generators and brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use fmkit::autgroup::{is_automorphism, Permutation};
use fmkit::fologic::formula::{self, Formula};
use fmkit::structures::{Graph, Signature, Structure};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random structure: each possible tuple of each symbol is present with probability `density`.
pub fn random_structure(rng: &mut impl Rng, sig: &Signature, size: usize, density: f64) -> Structure {
    let mut rels: Vec<(String, Vec<Vec<usize>>)> = Vec::new();
    for sym in sig.symbols() {
        let tuples = (0..sym.arity)
            .map(|_| 0..size)
            .multi_cartesian_product()
            .filter(|_| rng.gen_bool(density))
            .collect();
        rels.push((sym.name.clone(), tuples));
    }
    Structure::new(sig.clone(), size, rels).unwrap()
}

/// As [`random_structure`] with `skip` left empty.
pub fn random_structure_without(
    rng: &mut impl Rng,
    sig: &Signature,
    size: usize,
    density: f64,
    skip: &str,
) -> Structure {
    let full = random_structure(rng, sig, size, density);
    let rels: Vec<(String, Vec<Vec<usize>>)> = sig
        .symbols()
        .iter()
        .filter(|s| s.name != skip)
        .map(|s| (s.name.clone(), full.relation(&s.name).unwrap().iter().cloned().collect()))
        .collect();
    Structure::new(sig.clone(), size, rels).unwrap()
}

pub fn random_graph(rng: &mut impl Rng, n: usize, density: f64) -> Graph {
    let edges: Vec<(usize, usize)> =
        (0..n).tuple_combinations().filter(|_| rng.gen_bool(density)).collect();
    Graph::new(n, edges).unwrap()
}

/// Every automorphism, by filtering all `n!` permutations.
pub fn brute_force_automorphisms(s: &Structure) -> BTreeSet<Permutation> {
    (0..s.size())
        .permutations(s.size())
        .map(|image| Permutation::new(image).unwrap())
        .filter(|p| is_automorphism(s, p).unwrap())
        .collect()
}

/// Orbits from a full automorphism list, as sorted blocks ordered by least element.
pub fn orbits_from(n: usize, autos: &BTreeSet<Permutation>) -> Vec<Vec<usize>> {
    let mut seen = vec![false; n];
    let mut blocks = Vec::new();
    for x in 0..n {
        if seen[x] {
            continue;
        }
        let block: BTreeSet<usize> = autos.iter().map(|p| p.apply(x)).collect();
        for &y in &block {
            seen[y] = true;
        }
        blocks.push(block.into_iter().collect());
    }
    blocks
}

/// Connectivity by repeated edge relaxation (independent of the BFS in the library).
pub fn connected_oracle(g: &Graph) -> bool {
    let n = g.vertex_count();
    if n <= 1 {
        return true;
    }
    let mut reach = vec![false; n];
    reach[0] = true;
    loop {
        let mut changed = false;
        for (u, v) in g.edges() {
            if reach[u] != reach[v] {
                reach[u] = true;
                reach[v] = true;
                changed = true;
            }
        }
        if !changed {
            return reach.iter().all(|&r| r);
        }
    }
}

/// Random formula of quantifier rank at most `rank`, free variables among `bound`.
pub fn random_formula(rng: &mut impl Rng, sig: &Signature, bound: &mut Vec<String>, rank: usize, size: usize, with_p: bool) -> Formula {
    let leaf = size <= 1 || (rank == 0 && bound.is_empty());
    if leaf || rng.gen_bool(0.15) {
        if bound.is_empty() || (with_p && rng.gen_bool(0.3)) {
            return if with_p { Formula::P } else { formula::top() };
        }
        if rng.gen_bool(0.25) {
            let x = bound.choose(rng).unwrap().clone();
            let y = bound.choose(rng).unwrap().clone();
            return formula::eq(&x, &y);
        }
        let sym = sig.symbols().choose(rng).unwrap();
        let args: Vec<String> = (0..sym.arity).map(|_| bound.choose(rng).unwrap().clone()).collect();
        return formula::atom(&sym.name, args);
    }
    let choice = rng.gen_range(0..7);
    match choice {
        0 => formula::not(random_formula(rng, sig, bound, rank, size - 1, with_p)),
        1..=4 => {
            let left = rng.gen_range(1..size.max(2));
            let a = random_formula(rng, sig, bound, rank, left, with_p);
            let b = random_formula(rng, sig, bound, rank, size.saturating_sub(left).max(1), with_p);
            match choice {
                1 => formula::and(a, b),
                2 => formula::or(a, b),
                3 => formula::implies(a, b),
                _ => formula::iff(a, b),
            }
        }
        _ if rank > 0 => {
            let x = fmkit::fologic::bound_var(bound.len());
            bound.push(x.clone());
            let body = random_formula(rng, sig, bound, rank - 1, size - 1, with_p);
            bound.pop();
            if rng.gen_bool(0.5) {
                formula::exists(&x, body)
            } else {
                formula::forall(&x, body)
            }
        }
        _ => formula::not(random_formula(rng, sig, bound, rank, size - 1, with_p)),
    }
}

pub fn random_sentence(rng: &mut impl Rng, sig: &Signature, rank: usize, size: usize, with_p: bool) -> Formula {
    random_formula(rng, sig, &mut Vec::new(), rank, size, with_p)
}

/// Rejection-samples a rigid connected structure on `size` elements with `skip` empty.
pub fn rigid_connected_structure(rng: &mut impl Rng, sig: &Signature, size: usize, skip: &str) -> Structure {
    loop {
        let s = random_structure_without(rng, sig, size, 0.35, skip);
        if s.is_connected() && brute_force_automorphisms(&s).len() == 1 {
            return s;
        }
    }
}

/// FO truth of each group of level-`m` sentences on `tag_Q ⊔ g`, ordered as
/// (no short cycles, degrees 4 or 5, enough degree 4, degree-4 far apart).
pub fn sentence_flags(g: &Graph, m: usize, tag: &Structure) -> [bool; 4] {
    use fmkit::fologic::{graph_condition_sentences, Evaluator, Property};
    use fmkit::structures::{disjoint_union, r_graph_from_graph};
    let sig = tag.signature().clone();
    let encoded = r_graph_from_graph(g, &sig, "R").unwrap();
    let tagged = tag.add_q_diagonal("Q").unwrap();
    let union = disjoint_union(&[&tagged, &encoded]).unwrap().structure;
    let mut ev = Evaluator::new(&union);
    let mut flags = [true; 4];
    for t in graph_condition_sentences(&sig, "Q", "R", m).unwrap() {
        let slot = match t.property {
            Property::NoCycle(_) => 0,
            Property::Degrees45 => 1,
            Property::EnoughDegree4 => 2,
            Property::Degree4FarApart(_) => 3,
            other => panic!("unexpected {other}"),
        };
        flags[slot] &= ev.evaluate_sentence(&t.formula).unwrap();
    }
    flags
}

/// A random graph biased towards degrees 4 and 5: `n` in 1..=8, edge density 0.3..0.95.
pub fn dense_random_graph(rng: &mut impl Rng) -> Graph {
    let n = rng.gen_range(1..=8);
    let density = rng.gen_range(0.3..0.95);
    random_graph(rng, n, density)
}
