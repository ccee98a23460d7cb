//! Encoding undirected graphs in a relation `R` of arity `r >= 2` via tuples
//! `(a, b, ..., b)` present in both orientations.

use std::collections::BTreeSet;

use super::{Graph, Signature, Structure, StructureError, Tuple};

fn r_arity(sig: &Signature, r_symbol: &str) -> Result<usize, StructureError> {
    let arity = sig
        .arity(r_symbol)
        .ok_or_else(|| StructureError::UnknownSymbol(r_symbol.to_string()))?;
    if arity < 2 {
        return Err(StructureError::RArityTooSmall { symbol: r_symbol.to_string(), arity });
    }
    Ok(arity)
}

fn oriented(a: usize, b: usize, arity: usize) -> Tuple {
    let mut t = vec![b; arity];
    t[0] = a;
    t
}

pub fn r_graph_from_graph(g: &Graph, sig: &Signature, r_symbol: &str) -> Result<Structure, StructureError> {
    let arity = r_arity(sig, r_symbol)?;
    let idx = sig.index_of(r_symbol).unwrap();
    let mut relations = vec![BTreeSet::new(); sig.len()];
    for (u, v) in g.edges() {
        relations[idx].insert(oriented(u, v, arity));
        relations[idx].insert(oriented(v, u, arity));
    }
    Ok(Structure::from_parts(sig.clone(), g.vertex_count(), relations))
}

pub fn validate_r_graph(s: &Structure, r_symbol: &str) -> bool {
    let Some(idx) = s.signature().index_of(r_symbol) else {
        return false;
    };
    let arity = s.signature().symbols()[idx].arity;
    if arity < 2 {
        return false;
    }
    for (i, _) in s.signature().symbols().iter().enumerate() {
        if i != idx && !s.relation_at(i).is_empty() {
            return false;
        }
    }
    let rel = s.relation_at(idx);
    rel.iter().all(|t| {
        t[0] != t[1] && t[2..].iter().all(|&x| x == t[1]) && rel.contains(&oriented(t[1], t[0], arity))
    })
}

pub fn graph_from_r_graph(s: &Structure, r_symbol: &str) -> Result<Graph, StructureError> {
    r_arity(s.signature(), r_symbol)?;
    if !validate_r_graph(s, r_symbol) {
        return Err(StructureError::NotAnRGraph(r_symbol.to_string()));
    }
    let edges = s
        .relation(r_symbol)?
        .iter()
        .filter(|t| t[0] < t[1])
        .map(|t| (t[0], t[1]))
        .collect();
    Ok(Graph::from_edge_set(s.size(), edges))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ternary_encoding_of_one_edge() {
        let sig: Signature = "R/3 Q/1".parse().unwrap();
        let g = Graph::new(2, [(0, 1)]).unwrap();
        let s = r_graph_from_graph(&g, &sig, "R").unwrap();
        let r: Vec<_> = s.relation("R").unwrap().iter().cloned().collect();
        assert_eq!(r, vec![vec![0, 1, 1], vec![1, 0, 0]]);
        assert!(s.relation("Q").unwrap().is_empty());
        assert!(validate_r_graph(&s, "R"));
        assert_eq!(graph_from_r_graph(&s, "R").unwrap(), g);
    }

    #[test]
    fn empty_graph_gives_empty_relations() {
        let sig: Signature = "R/2 S/2".parse().unwrap();
        let s = r_graph_from_graph(&Graph::empty(3), &sig, "R").unwrap();
        assert!(s.signature().symbols().iter().all(|sym| s.relation(&sym.name).unwrap().is_empty()));
    }

    #[test]
    fn rejects_unary_r() {
        let sig: Signature = "R/1".parse().unwrap();
        assert!(matches!(
            r_graph_from_graph(&Graph::empty(1), &sig, "R"),
            Err(StructureError::RArityTooSmall { .. })
        ));
    }

    #[test]
    fn validation_failures() {
        let sig: Signature = "R/3 Q/1".parse().unwrap();
        let missing_swap = Structure::new(sig.clone(), 2, [("R", vec![vec![0, 1, 1]])]).unwrap();
        assert!(!validate_r_graph(&missing_swap, "R"));
        let with_q = Structure::new(
            sig.clone(),
            2,
            [("R", vec![vec![0, 1, 1], vec![1, 0, 0]]), ("Q", vec![vec![0]])],
        )
        .unwrap();
        assert!(!validate_r_graph(&with_q, "R"));
        assert!(matches!(graph_from_r_graph(&with_q, "R"), Err(StructureError::NotAnRGraph(_))));
        let uneven = Structure::new(sig.clone(), 3, [("R", vec![vec![0, 1, 2]])]).unwrap();
        assert!(!validate_r_graph(&uneven, "R"));
        let loop_ = Structure::new(sig, 1, [("R", vec![vec![0, 0, 0]])]).unwrap();
        assert!(!validate_r_graph(&loop_, "R"));
    }

    #[test]
    fn round_trip_on_all_graphs_up_to_five_vertices() {
        let sig: Signature = "R/3 Q/2".parse().unwrap();
        for n in 0..=5usize {
            let pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            for mask in 0u32..(1 << pairs.len()) {
                let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
                let g = Graph::new(n, edges).unwrap();
                let s = r_graph_from_graph(&g, &sig, "R").unwrap();
                assert!(validate_r_graph(&s, "R"));
                assert_eq!(s.relation("R").unwrap().len(), 2 * g.edge_count());
                let back = graph_from_r_graph(&s, "R").unwrap();
                assert_eq!(back, g);
                assert_eq!(r_graph_from_graph(&back, &sig, "R").unwrap(), s);
            }
        }
    }
}
