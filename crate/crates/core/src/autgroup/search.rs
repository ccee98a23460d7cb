//! Colour refinement with individualization and backtracking.
//!
//! Colours are canonical ranks: each round hashes an element's colour with
//! the sorted multiset of (symbol, position, tuple colours) over the tuples
//! it occurs in, and renumbers by sorted hash. Two colourings that differ by
//! an automorphism therefore refine in lockstep, and the per-round hashes
//! form a trace that both sides of a branch must share.
//!
//! The search keeps the left colouring on a fixed path (always individualizing
//! the least element of the chosen cell) and tries every matching image on
//! the right. Each automorphism is reached at exactly one leaf, and every leaf
//! is verified against the relations before it is reported.

use std::collections::BTreeSet;

use super::permutation::Permutation;
use crate::structures::Structure;

const SEED: u64 = 0x9e37_79b9_7f4a_7c15;

fn mix(mut h: u64, x: u64) -> u64 {
    h ^= x.wrapping_add(SEED).wrapping_add(h << 6).wrapping_add(h >> 2);
    h = (h ^ (h >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    h = (h ^ (h >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    h ^ (h >> 31)
}

#[derive(Debug, Clone)]
pub(crate) struct Colouring {
    colour: Vec<u32>,
    classes: usize,
    trace: Vec<u64>,
}

impl Colouring {
    fn is_discrete(&self) -> bool {
        self.classes == self.colour.len()
    }

    pub(crate) fn cells(&self) -> Vec<Vec<usize>> {
        let mut cells = vec![Vec::new(); self.classes];
        for (v, &c) in self.colour.iter().enumerate() {
            cells[c as usize].push(v);
        }
        cells
    }
}

pub(crate) struct Engine<'a> {
    s: &'a Structure,
    tuples: Vec<(u32, &'a [usize])>,
    /// For each element, the (tuple, position) pairs it occurs at.
    occurs: Vec<Vec<(u32, u32)>>,
}

impl<'a> Engine<'a> {
    pub(crate) fn new(s: &'a Structure) -> Self {
        let mut tuples = Vec::new();
        let mut occurs = vec![Vec::new(); s.size()];
        for idx in 0..s.signature().len() {
            for t in s.relation_at(idx) {
                let id = tuples.len() as u32;
                tuples.push((idx as u32, t.as_slice()));
                for (pos, &x) in t.iter().enumerate() {
                    occurs[x].push((id, pos as u32));
                }
            }
        }
        Engine { s, tuples, occurs }
    }

    pub(crate) fn size(&self) -> usize {
        self.s.size()
    }

    /// Refines `colour` to the coarsest stable colouring below it.
    fn refine(&self, mut colour: Vec<u32>, mut classes: usize, mut trace: Vec<u64>) -> Colouring {
        let n = colour.len();
        let mut tuple_hash = vec![0u64; self.tuples.len()];
        let mut keys = vec![0u64; n];
        let mut scratch = Vec::new();
        loop {
            for (h, (sym, t)) in tuple_hash.iter_mut().zip(&self.tuples) {
                *h = t.iter().fold(mix(0, *sym as u64), |acc, &x| mix(acc, colour[x] as u64));
            }
            for v in 0..n {
                scratch.clear();
                scratch.extend(self.occurs[v].iter().map(|&(t, pos)| mix(tuple_hash[t as usize], pos as u64)));
                scratch.sort_unstable();
                keys[v] = scratch.iter().fold(mix(1, colour[v] as u64), |acc, &x| mix(acc, x));
            }
            let mut sorted = keys.clone();
            sorted.sort_unstable();
            trace.push(sorted.iter().fold(n as u64, |acc, &x| mix(acc, x)));
            sorted.dedup();
            for v in 0..n {
                colour[v] = sorted.binary_search(&keys[v]).unwrap() as u32;
            }
            let before = classes;
            classes = sorted.len();
            if classes <= before {
                return Colouring { colour, classes, trace };
            }
        }
    }

    pub(crate) fn initial(&self) -> Colouring {
        let n = self.size();
        self.refine(vec![0; n], usize::from(n > 0), Vec::new())
    }

    pub(crate) fn individualize(&self, c: &Colouring, v: usize) -> Colouring {
        let mut colour = c.colour.clone();
        colour[v] = c.classes as u32;
        self.refine(colour, c.classes + 1, c.trace.clone())
    }

    /// The least colour among the smallest non-singleton cells.
    fn target_cell(c: &Colouring) -> Option<u32> {
        let mut count = vec![0usize; c.classes];
        for &x in &c.colour {
            count[x as usize] += 1;
        }
        (0..c.classes).filter(|&k| count[k] > 1).min_by_key(|&k| (count[k], k)).map(|k| k as u32)
    }

    pub(crate) fn is_automorphism(&self, image: &[usize]) -> bool {
        (0..self.s.signature().len()).all(|idx| {
            let rel = self.s.relation_at(idx);
            rel.iter().all(|t| {
                let mapped: Vec<usize> = t.iter().map(|&x| image[x]).collect();
                rel.contains(&mapped)
            })
        })
    }

    /// Visits every automorphism mapping `left` onto `right`; stops when `visit` returns false.
    /// Returns false if stopped early.
    pub(crate) fn search(
        &self,
        left: &Colouring,
        right: &Colouring,
        visit: &mut dyn FnMut(Permutation) -> bool,
    ) -> bool {
        if left.trace != right.trace || left.classes != right.classes {
            return true;
        }
        let Some(cell) = Self::target_cell(left) else {
            let mut by_colour = vec![0usize; right.colour.len()];
            for (w, &c) in right.colour.iter().enumerate() {
                by_colour[c as usize] = w;
            }
            let image: Vec<usize> = left.colour.iter().map(|&c| by_colour[c as usize]).collect();
            if !self.is_automorphism(&image) {
                return true;
            }
            return visit(Permutation::from_vec_unchecked(image));
        };
        let v = left.colour.iter().position(|&c| c == cell).unwrap();
        let next_left = self.individualize(left, v);
        for w in (0..right.colour.len()).filter(|&w| right.colour[w] == cell) {
            let next_right = self.individualize(right, w);
            if !self.search(&next_left, &next_right, visit) {
                return false;
            }
        }
        true
    }

    /// Some automorphism sending `a` to `b`, if one exists.
    pub(crate) fn witness(&self, base: &Colouring, a: usize, b: usize) -> Option<Permutation> {
        if base.colour[a] != base.colour[b] {
            return None;
        }
        let left = self.individualize(base, a);
        let right = self.individualize(base, b);
        let mut found = None;
        self.search(&left, &right, &mut |p| {
            found = Some(p);
            false
        });
        found
    }

    pub(crate) fn orbit_blocks(&self) -> Vec<Vec<usize>> {
        let n = self.size();
        let base = self.initial();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        if !base.is_discrete() {
            for cell in base.cells() {
                let mut reps: Vec<usize> = Vec::new();
                for &w in &cell {
                    let rw = find(&mut parent, w);
                    if reps.iter().any(|&r| find(&mut parent, r) == rw) {
                        continue;
                    }
                    let mut merged = false;
                    for &r in &reps {
                        if let Some(g) = self.witness(&base, r, w) {
                            for x in 0..n {
                                let (a, b) = (find(&mut parent, x), find(&mut parent, g.apply(x)));
                                if a != b {
                                    parent[a.max(b)] = a.min(b);
                                }
                            }
                            merged = true;
                            break;
                        }
                    }
                    if !merged {
                        reps.push(w);
                    }
                }
            }
        }
        let mut blocks: Vec<BTreeSet<usize>> = Vec::new();
        let mut slot = vec![usize::MAX; n];
        for x in 0..n {
            let r = find(&mut parent, x);
            if slot[r] == usize::MAX {
                slot[r] = blocks.len();
                blocks.push(BTreeSet::new());
            }
            blocks[slot[r]].insert(x);
        }
        blocks.into_iter().map(|b| b.into_iter().collect()).collect()
    }
}
