//! Automorphism groups of finite structures: enumeration, order, rigidity,
//! orbits and supports.
//!
//! Everything runs on one search engine that refines
//! colourings and backtracks over the smallest ambiguous cell. Enumeration
//! order is deterministic and the identity always comes first.

mod permutation;
mod search;

use std::fmt;

use thiserror::Error;

pub use permutation::Permutation;
use search::Engine;

use crate::structures::{r_graph_from_graph, Graph, Signature, Structure};

/// Default cap on the number of automorphisms [`support_spectrum`] will enumerate.
pub const DEFAULT_SPECTRUM_BUDGET: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AutError {
    #[error("size mismatch: expected {expected} points, found {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("more than {budget} automorphisms")]
    BudgetExceeded { budget: usize },
}

/// Orbits of the automorphism group, each sorted, ordered by least element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitPartition {
    blocks: Vec<Vec<usize>>,
}

impl OrbitPartition {
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn block_of(&self, x: usize) -> Option<&[usize]> {
        self.blocks.iter().find(|b| b.binary_search(&x).is_ok()).map(|b| b.as_slice())
    }

    pub fn is_discrete(&self) -> bool {
        self.blocks.iter().all(|b| b.len() == 1)
    }
}

impl fmt::Display for OrbitPartition {
    /// One block per line as `{0,2}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.blocks {
            let body: Vec<String> = b.iter().map(|x| x.to_string()).collect();
            writeln!(f, "{{{}}}", body.join(","))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrbitStatistics {
    pub orbit_count: usize,
    /// Equal to `orbit_count` on finite structures.
    pub finite_orbit_count: usize,
    pub max_orbit_size: usize,
    /// Orbits with more than one element.
    pub nontrivial_orbit_count: usize,
}

pub fn is_automorphism(s: &Structure, p: &Permutation) -> Result<bool, AutError> {
    if p.len() != s.size() {
        return Err(AutError::SizeMismatch { expected: s.size(), found: p.len() });
    }
    Ok(Engine::new(s).is_automorphism(p.image()))
}

/// All automorphisms, or the first `limit` in search order.
pub fn automorphisms(s: &Structure, limit: Option<usize>) -> Vec<Permutation> {
    let limit = limit.unwrap_or(usize::MAX);
    let mut out = Vec::new();
    if limit == 0 {
        return out;
    }
    let engine = Engine::new(s);
    let base = engine.initial();
    engine.search(&base, &base, &mut |p| {
        out.push(p);
        out.len() < limit
    });
    out
}

pub fn group_order(s: &Structure) -> u64 {
    let engine = Engine::new(s);
    let base = engine.initial();
    let mut count = 0u64;
    engine.search(&base, &base, &mut |_| {
        count += 1;
        true
    });
    count
}

/// Stops at the first non-identity automorphism.
pub fn is_rigid(s: &Structure) -> bool {
    let engine = Engine::new(s);
    let base = engine.initial();
    let mut rigid = true;
    engine.search(&base, &base, &mut |p| {
        rigid = p.is_identity();
        rigid
    });
    rigid
}

pub fn orbits(s: &Structure) -> OrbitPartition {
    OrbitPartition { blocks: Engine::new(s).orbit_blocks() }
}

pub fn orbit_statistics(s: &Structure) -> OrbitStatistics {
    let o = orbits(s);
    OrbitStatistics {
        orbit_count: o.len(),
        finite_orbit_count: o.len(),
        max_orbit_size: o.blocks.iter().map(Vec::len).max().unwrap_or(0),
        nontrivial_orbit_count: o.blocks.iter().filter(|b| b.len() > 1).count(),
    }
}

/// Support sizes over the whole group, ascending.
pub fn support_spectrum(s: &Structure) -> Result<Vec<usize>, AutError> {
    support_spectrum_with_budget(s, DEFAULT_SPECTRUM_BUDGET)
}

pub fn support_spectrum_with_budget(s: &Structure, budget: usize) -> Result<Vec<usize>, AutError> {
    let engine = Engine::new(s);
    let base = engine.initial();
    let mut sizes = Vec::new();
    let complete = engine.search(&base, &base, &mut |p| {
        if sizes.len() == budget {
            return false;
        }
        sizes.push(p.support().len());
        true
    });
    if !complete {
        return Err(AutError::BudgetExceeded { budget });
    }
    sizes.sort_unstable();
    Ok(sizes)
}

/// The graph as an R-graph over a single binary symbol `R`.
pub fn graph_structure(g: &Graph) -> Structure {
    let sig = Signature::new([("R", 2)]).expect("valid signature");
    r_graph_from_graph(g, &sig, "R").expect("binary R")
}

pub fn graph_is_rigid(g: &Graph) -> bool {
    is_rigid(&graph_structure(g))
}

pub fn graph_group_order(g: &Graph) -> u64 {
    group_order(&graph_structure(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::disjoint_union;
    use std::collections::BTreeSet;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Structure {
        graph_structure(&Graph::new(n, edges.iter().copied()).unwrap())
    }

    fn brute_force(s: &Structure) -> BTreeSet<Permutation> {
        fn rec(s: &Structure, image: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut BTreeSet<Permutation>) {
            if image.len() == s.size() {
                let p = Permutation::new(image.clone()).unwrap();
                if is_automorphism(s, &p).unwrap() {
                    out.insert(p);
                }
                return;
            }
            for x in 0..s.size() {
                if !used[x] {
                    used[x] = true;
                    image.push(x);
                    rec(s, image, used, out);
                    image.pop();
                    used[x] = false;
                }
            }
        }
        let mut out = BTreeSet::new();
        rec(s, &mut Vec::new(), &mut vec![false; s.size()], &mut out);
        out
    }

    #[test]
    fn is_automorphism_examples() {
        let s = graph(3, &[(0, 1)]);
        assert!(is_automorphism(&s, &Permutation::identity(3)).unwrap());
        assert!(is_automorphism(&s, &Permutation::transposition(3, 0, 1).unwrap()).unwrap());
        assert!(!is_automorphism(&s, &Permutation::transposition(3, 1, 2).unwrap()).unwrap());
        assert!(is_automorphism(&s, &Permutation::identity(2)).is_err());
    }

    #[test]
    fn small_groups() {
        assert_eq!(automorphisms(&graph(1, &[]), None), vec![Permutation::identity(1)]);
        assert_eq!(group_order(&graph(0, &[])), 1);
        let path = graph(3, &[(0, 1), (1, 2)]);
        assert_eq!(group_order(&path), 2);
        assert_eq!(orbits(&path).blocks(), &[vec![0, 2], vec![1]]);
        assert_eq!(
            orbit_statistics(&path),
            OrbitStatistics { orbit_count: 2, finite_orbit_count: 2, max_orbit_size: 2, nontrivial_orbit_count: 1 }
        );
        let two_edges = graph(4, &[(0, 1), (2, 3)]);
        assert_eq!(group_order(&two_edges), 8);
        assert_eq!(orbits(&two_edges).blocks(), &[vec![0, 1, 2, 3]]);
        assert_eq!(support_spectrum(&two_edges).unwrap(), vec![0, 2, 2, 4, 4, 4, 4, 4]);
        let square = graph(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        assert_eq!(group_order(&square), 8);
        assert_eq!(support_spectrum(&square).unwrap(), vec![0, 2, 2, 4, 4, 4, 4, 4]);
        assert_eq!(support_spectrum(&graph(2, &[(0, 1)])).unwrap(), vec![0, 2]);
        assert!(matches!(
            support_spectrum_with_budget(&square, 5),
            Err(AutError::BudgetExceeded { budget: 5 })
        ));
    }

    #[test]
    fn identity_first_and_limit() {
        let k4 = graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let all = automorphisms(&k4, None);
        assert_eq!(all.len(), 24);
        assert!(all[0].is_identity());
        assert_eq!(automorphisms(&k4, Some(5)), all[..5]);
        assert!(automorphisms(&k4, Some(0)).is_empty());
    }

    #[test]
    fn rigidity() {
        assert!(is_rigid(&graph(1, &[])));
        assert!(!is_rigid(&graph(2, &[(0, 1)])));
        // Checked against the brute-force group.
        let asym = graph(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (2, 5), (2, 4)]);
        assert_eq!(is_rigid(&asym), brute_force(&asym).len() == 1);
    }

    #[test]
    fn matches_brute_force_on_mixed_signatures() {
        let sig: Signature = "R/2 S/1 T/3".parse().unwrap();
        let s = Structure::new(
            sig,
            5,
            [
                ("R", vec![vec![0, 1], vec![1, 0], vec![2, 3], vec![3, 2]]),
                ("S", vec![vec![4]]),
                ("T", vec![vec![0, 2, 4], vec![1, 3, 4]]),
            ],
        )
        .unwrap();
        let oracle = brute_force(&s);
        let found: BTreeSet<Permutation> = automorphisms(&s, None).into_iter().collect();
        assert_eq!(found, oracle);
        assert_eq!(group_order(&s), oracle.len() as u64);
    }

    #[test]
    fn q_tag_separates_parts() {
        let sig: Signature = "R/2 Q/1".parse().unwrap();
        let m = Structure::new(sig.clone(), 3, [("R", vec![vec![0, 1], vec![1, 0]])]).unwrap();
        let n = Structure::new(sig.clone(), 1, Vec::<(&str, Vec<Vec<usize>>)>::new()).unwrap();
        let u = disjoint_union(&[&m.add_q_diagonal("Q").unwrap(), &n]).unwrap();
        assert_eq!(group_order(&u.structure), group_order(&m));
        assert_eq!(orbits(&u.structure).len(), orbits(&m).len() + 1);
    }
}
