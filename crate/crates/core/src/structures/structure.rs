use std::collections::BTreeSet;

use super::graph::{self, Adjacency, Distance};
use super::{Signature, StructureError};

pub type Tuple = Vec<usize>;

/// A finite σ-structure on the universe `0..size`.
///
/// Relations are stored per signature symbol, in signature order, as sorted
/// tuple sets. The Gaifman adjacency (distinct elements sharing a tuple) is
/// computed once at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Structure {
    signature: Signature,
    size: usize,
    relations: Vec<BTreeSet<Tuple>>,
    neighbors: Vec<Vec<usize>>,
}

impl Structure {
    /// Structure with every relation empty.
    pub fn empty(signature: Signature, size: usize) -> Self {
        let relations = vec![BTreeSet::new(); signature.len()];
        Structure { signature, size, relations, neighbors: vec![Vec::new(); size] }
    }

    /// Builds and validates a structure. Relations not mentioned are empty;
    /// a symbol may be mentioned more than once (tuple sets are merged).
    pub fn new<I, S, T>(signature: Signature, size: usize, relations: I) -> Result<Self, StructureError>
    where
        I: IntoIterator<Item = (S, T)>,
        S: AsRef<str>,
        T: IntoIterator<Item = Tuple>,
    {
        let mut rels = vec![BTreeSet::new(); signature.len()];
        for (name, tuples) in relations {
            let name = name.as_ref();
            let idx = signature
                .index_of(name)
                .ok_or_else(|| StructureError::UnknownSymbol(name.to_string()))?;
            let arity = signature.symbols()[idx].arity;
            for t in tuples {
                if t.len() != arity {
                    return Err(StructureError::ArityMismatch {
                        symbol: name.to_string(),
                        expected: arity,
                        found: t.len(),
                    });
                }
                if let Some(&bad) = t.iter().find(|&&e| e >= size) {
                    return Err(StructureError::ElementOutOfRange { element: bad, size });
                }
                rels[idx].insert(t);
            }
        }
        Ok(Self::from_parts(signature, size, rels))
    }

    /// Caller guarantees tuples are in range and of the right arity.
    pub(crate) fn from_parts(signature: Signature, size: usize, relations: Vec<BTreeSet<Tuple>>) -> Self {
        let mut neighbors: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); size];
        for rel in &relations {
            for t in rel {
                for &a in t {
                    for &b in t {
                        if a != b {
                            neighbors[a].insert(b);
                        }
                    }
                }
            }
        }
        let neighbors = neighbors.into_iter().map(|s| s.into_iter().collect()).collect();
        Structure { signature, size, relations, neighbors }
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Tuple set of the symbol at signature position `idx`.
    pub fn relation_at(&self, idx: usize) -> &BTreeSet<Tuple> {
        &self.relations[idx]
    }

    pub fn relation(&self, name: &str) -> Result<&BTreeSet<Tuple>, StructureError> {
        self.signature
            .index_of(name)
            .map(|i| &self.relations[i])
            .ok_or_else(|| StructureError::UnknownSymbol(name.to_string()))
    }

    pub fn holds(&self, name: &str, tuple: &[usize]) -> Result<bool, StructureError> {
        Ok(self.relation(name)?.contains(tuple))
    }

    fn check(&self, a: usize) -> Result<(), StructureError> {
        if a < self.size {
            Ok(())
        } else {
            Err(StructureError::ElementOutOfRange { element: a, size: self.size })
        }
    }

    pub fn adjacent(&self, a: usize, b: usize) -> Result<bool, StructureError> {
        self.check(a)?;
        self.check(b)?;
        Ok(a != b && self.neighbors[a].binary_search(&b).is_ok())
    }

    pub fn degree(&self, a: usize) -> Result<usize, StructureError> {
        self.check(a)?;
        Ok(self.neighbors[a].len())
    }

    pub fn distance(&self, a: usize, b: usize) -> Result<Distance, StructureError> {
        self.check(a)?;
        self.check(b)?;
        Ok(graph::distance(self, a, b))
    }

    pub fn is_connected(&self) -> bool {
        graph::is_connected(self)
    }

    pub fn is_r_connected(&self, r: usize) -> Result<bool, StructureError> {
        if r == 0 {
            return Err(StructureError::InvalidParameter("r must be at least 1".into()));
        }
        Ok(graph::is_r_connected(self, r))
    }

    pub fn component_count(&self) -> usize {
        graph::component_count(self)
    }

    /// Cycle of length `k` in the sense `a_1, ..., a_k` with `a_1 = a_k`, so it
    /// visits `k - 1` distinct elements. Back-and-forth along a single edge
    /// (`k = 3`) is not counted as a cycle.
    pub fn has_k_cycle(&self, k: usize) -> Result<bool, StructureError> {
        if k < 3 {
            return Err(StructureError::InvalidParameter(format!("cycle length must be >= 3, got {k}")));
        }
        Ok(graph::has_simple_cycle_of_size(self, k - 1))
    }

    /// Cycle through exactly `c` distinct elements (conventional reading).
    pub fn has_simple_cycle_of_size(&self, c: usize) -> bool {
        graph::has_simple_cycle_of_size(self, c)
    }

    /// A copy with `q` set to the diagonal `{(a, ..., a)}`.
    pub fn add_q_diagonal(&self, q: &str) -> Result<Structure, StructureError> {
        let idx = self
            .signature
            .index_of(q)
            .ok_or_else(|| StructureError::UnknownSymbol(q.to_string()))?;
        if !self.relations[idx].is_empty() {
            return Err(StructureError::QNotEmpty(q.to_string()));
        }
        let arity = self.signature.symbols()[idx].arity;
        let mut relations = self.relations.clone();
        relations[idx] = (0..self.size).map(|a| vec![a; arity]).collect();
        // Diagonal tuples never make distinct elements adjacent.
        Ok(Structure {
            signature: self.signature.clone(),
            size: self.size,
            relations,
            neighbors: self.neighbors.clone(),
        })
    }

    /// Elements that satisfy `Q(a, ..., a)`.
    pub fn q_tagged(&self, q: &str) -> Result<Vec<bool>, StructureError> {
        let rel = self.relation(q)?;
        let arity = self.signature.arity(q).unwrap();
        Ok((0..self.size).map(|a| rel.contains(&vec![a; arity])).collect())
    }
}

impl Adjacency for Structure {
    fn order(&self) -> usize {
        self.size
    }

    fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }
}

/// Result of [`disjoint_union`]: the union plus, per part, the map from the
/// part's element ids to ids in the union.
#[derive(Debug, Clone)]
pub struct DisjointUnion {
    pub structure: Structure,
    pub maps: Vec<Vec<usize>>,
}

/// Disjoint sum of structures over one signature. Part `i` occupies a
/// contiguous block of ids following the parts before it.
pub fn disjoint_union(parts: &[&Structure]) -> Result<DisjointUnion, StructureError> {
    let Some(first) = parts.first() else {
        return Err(StructureError::InvalidParameter("disjoint union of no parts".into()));
    };
    let signature = first.signature.clone();
    let mut relations = vec![BTreeSet::new(); signature.len()];
    let mut maps = Vec::with_capacity(parts.len());
    let mut offset = 0;
    for part in parts {
        if part.signature != signature {
            return Err(StructureError::SignatureMismatch);
        }
        for (dst, src) in relations.iter_mut().zip(&part.relations) {
            dst.extend(src.iter().map(|t| t.iter().map(|&a| a + offset).collect::<Tuple>()));
        }
        maps.push((offset..offset + part.size).collect());
        offset += part.size;
    }
    Ok(DisjointUnion { structure: Structure::from_parts(signature, offset, relations), maps })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(s: &str) -> Signature {
        s.parse().unwrap()
    }

    #[test]
    fn adjacency_examples() {
        let s = Structure::new(sig("R/3"), 4, [("R", vec![vec![0, 1, 1]])]).unwrap();
        assert!(s.adjacent(0, 1).unwrap());
        assert!(!s.adjacent(0, 0).unwrap());
        let s = Structure::new(sig("R/3"), 4, [("R", vec![vec![0, 1, 1], vec![2, 3, 3]])]).unwrap();
        assert!(!s.adjacent(1, 2).unwrap());
        assert!(s.adjacent(9, 0).is_err());
    }

    #[test]
    fn degree_examples() {
        let s = Structure::empty(sig("R/2"), 3);
        assert_eq!(s.degree(0).unwrap(), 0);
        let star = Structure::new(
            sig("R/2"),
            4,
            [("R", vec![vec![0, 1], vec![1, 0], vec![0, 2], vec![2, 0], vec![0, 3], vec![3, 0]])],
        )
        .unwrap();
        assert_eq!(star.degree(0).unwrap(), 3);
        assert_eq!(star.degree(3).unwrap(), 1);
        assert!(star.degree(4).is_err());
    }

    #[test]
    fn validation() {
        assert!(matches!(
            Structure::new(sig("R/2"), 2, [("S", vec![vec![0, 1]])]),
            Err(StructureError::UnknownSymbol(_))
        ));
        assert!(matches!(
            Structure::new(sig("R/2"), 2, [("R", vec![vec![0]])]),
            Err(StructureError::ArityMismatch { .. })
        ));
        assert!(matches!(
            Structure::new(sig("R/2"), 2, [("R", vec![vec![0, 2]])]),
            Err(StructureError::ElementOutOfRange { .. })
        ));
    }

    #[test]
    fn q_diagonal() {
        let s = Structure::new(sig("R/2 Q/2"), 2, [("R", vec![vec![0, 1]])]).unwrap();
        let t = s.add_q_diagonal("Q").unwrap();
        let q: Vec<_> = t.relation("Q").unwrap().iter().cloned().collect();
        assert_eq!(q, vec![vec![0, 0], vec![1, 1]]);
        assert_eq!(t.relation("R").unwrap(), s.relation("R").unwrap());
        assert!(matches!(t.add_q_diagonal("Q"), Err(StructureError::QNotEmpty(_))));
        assert!(t.q_tagged("Q").unwrap().iter().all(|&b| b));
    }

    #[test]
    fn union_sizes() {
        let e = Structure::new(sig("R/2"), 2, [("R", vec![vec![0, 1], vec![1, 0]])]).unwrap();
        let u = disjoint_union(&[&e, &e]).unwrap();
        assert_eq!(u.structure.size(), 4);
        assert_eq!(u.structure.relation("R").unwrap().len(), 4);
        assert_eq!(u.maps, vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(u.structure.component_count(), 2);
        let other = Structure::empty(sig("S/2"), 1);
        assert!(matches!(disjoint_union(&[&e, &other]), Err(StructureError::SignatureMismatch)));
    }

    #[test]
    fn k_cycles_follow_the_repeated_endpoint_convention() {
        let tri = Structure::new(
            sig("R/2"),
            3,
            [("R", vec![vec![0, 1], vec![1, 0], vec![1, 2], vec![2, 1], vec![0, 2], vec![2, 0]])],
        )
        .unwrap();
        assert!(tri.has_k_cycle(4).unwrap());
        assert!(!tri.has_k_cycle(3).unwrap());
        assert!(!tri.has_k_cycle(5).unwrap());
        assert!(tri.has_k_cycle(2).is_err());
    }
}
