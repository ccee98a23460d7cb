//! Generators for the finite sentence sets that pin down the Q-tag discipline
//! (`tag_sentences`) and the degree-4/5 acyclic graph conditions at level
//! `m` (`graph_condition_sentences`).
//!
//! Adjacency is not a symbol, so it is expanded as a disjunction over every
//! relation symbol and every ordered pair of distinct argument positions,
//! with the remaining positions existentially quantified.

use std::fmt;

use super::formula::{self, and, atom, conj, disj, eq, exists, forall, implies, not, or, Formula};
use super::transform::diagonal_atom;
use super::LogicError;
use crate::structures::Signature;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Property {
    /// `Q` holds only on constant tuples.
    QDiagonal,
    /// no Q-element is adjacent to a non-Q-element.
    NoCrossAdjacency,
    /// the non-Q part carries no tuples of the given non-R symbol (index into the signature).
    EmptyOffR(usize),
    /// the non-Q part is an R-graph.
    RGraphAxiom,
    /// no cycle through exactly this many distinct non-Q vertices.
    NoCycle(usize),
    /// every non-Q vertex has exactly 4 or exactly 5 non-Q neighbors.
    Degrees45,
    /// at least `m` non-Q vertices of degree 4.
    EnoughDegree4,
    /// no path on this many distinct vertices joins two degree-4 vertices.
    Degree4FarApart(usize),
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Property::QDiagonal => f.write_str("Q is diagonal"),
            Property::NoCrossAdjacency => f.write_str("no adjacency across the Q boundary"),
            Property::EmptyOffR(i) => write!(f, "symbol #{i} empty on the non-Q part"),
            Property::RGraphAxiom => f.write_str("non-Q part is an R-graph"),
            Property::NoCycle(c) => write!(f, "no cycle on {c} distinct vertices"),
            Property::Degrees45 => f.write_str("degrees are 4 or 5"),
            Property::EnoughDegree4 => f.write_str("enough degree-4 vertices"),
            Property::Degree4FarApart(k) => write!(f, "no {k}-path between degree-4 vertices"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TaggedSentence {
    pub property: Property,
    pub formula: Formula,
}

struct Builder<'a> {
    sig: &'a Signature,
    q: &'a str,
    q_arity: usize,
    counter: usize,
}

impl<'a> Builder<'a> {
    fn new(sig: &'a Signature, q: &'a str, r: &str) -> Result<Self, LogicError> {
        let q_arity = sig.arity(q).ok_or_else(|| LogicError::UnknownSymbol(q.to_string()))?;
        let r_arity = sig.arity(r).ok_or_else(|| LogicError::UnknownSymbol(r.to_string()))?;
        if q == r {
            return Err(LogicError::InvalidParameter("Q and R must be different symbols".into()));
        }
        if r_arity < 2 {
            return Err(LogicError::InvalidParameter(format!("{r} has arity {r_arity}; need >= 2")));
        }
        Ok(Builder { sig, q, q_arity, counter: 0 })
    }

    fn fresh(&mut self) -> String {
        self.counter += 1;
        format!("v{}", self.counter)
    }

    fn fresh_n(&mut self, k: usize) -> Vec<String> {
        (0..k).map(|_| self.fresh()).collect()
    }

    fn q(&self, x: &str) -> Formula {
        diagonal_atom(self.q, self.q_arity, x)
    }

    fn nq(&self, x: &str) -> Formula {
        not(self.q(x))
    }

    /// `x` and `y` are distinct and share a tuple of some relation.
    fn adj(&mut self, x: &str, y: &str) -> Formula {
        let mut options = Vec::new();
        for sym in self.sig.symbols().to_vec() {
            for i in 0..sym.arity {
                for j in 0..sym.arity {
                    if i == j {
                        continue;
                    }
                    let mut args = Vec::with_capacity(sym.arity);
                    let mut extra = Vec::new();
                    for p in 0..sym.arity {
                        if p == i {
                            args.push(x.to_string());
                        } else if p == j {
                            args.push(y.to_string());
                        } else {
                            let z = self.fresh();
                            extra.push(z.clone());
                            args.push(z);
                        }
                    }
                    let body = atom(&sym.name, args);
                    options.push(extra.iter().rev().fold(body, |acc, z| exists(z, acc)));
                }
            }
        }
        and(not(eq(x, y)), disj(options))
    }

    /// `exists v (!Q(v) & body)`.
    fn ex_nq(&self, v: &str, body: Formula) -> Formula {
        exists(v, and(self.nq(v), body))
    }

    fn all_nq(&self, v: &str, body: Formula) -> Formula {
        forall(v, implies(self.nq(v), body))
    }

    fn distinct_from(&self, v: &str, earlier: &[String]) -> Formula {
        conj(earlier.iter().map(|u| not(eq(v, u))))
    }

    /// At least `d` distinct non-Q neighbors of `x`.
    fn at_least(&mut self, x: &str, d: usize) -> Formula {
        let ys = self.fresh_n(d);
        let mut body = formula::top();
        for i in (0..d).rev() {
            let adj = self.adj(x, &ys[i]);
            let inner = if i == d - 1 { adj } else { and(adj, body) };
            let inner = if i == 0 { inner } else { and(self.distinct_from(&ys[i], &ys[..i]), inner) };
            body = self.ex_nq(&ys[i], inner);
        }
        body
    }

    fn exactly(&mut self, x: &str, d: usize) -> Formula {
        and(self.at_least(x, d), not(self.at_least(x, d + 1)))
    }

    /// `exists v1..vk` over non-Q elements, pairwise distinct, consecutive
    /// ones adjacent, and `tail(v1.., self)` holding at the innermost level.
    fn exists_path(&mut self, k: usize, tail: &mut dyn FnMut(&mut Self, &[String]) -> Formula) -> Formula {
        let vs = self.fresh_n(k);
        let mut body = tail(self, &vs);
        for i in (0..k).rev() {
            let mut guard = Vec::new();
            if i > 0 {
                guard.push(self.adj(&vs[i - 1], &vs[i]));
                guard.push(self.distinct_from(&vs[i], &vs[..i]));
            }
            guard.push(body);
            body = self.ex_nq(&vs[i], conj(guard));
        }
        body
    }
}

/// Sentences saying `Q` is a diagonal tag, nothing is adjacent across the tag
/// boundary, and the untagged part is an `r`-graph with every other symbol empty.
pub fn tag_sentences(sig: &Signature, q: &str, r: &str) -> Result<Vec<TaggedSentence>, LogicError> {
    let mut b = Builder::new(sig, q, r)?;
    let mut out = Vec::new();

    let xs = b.fresh_n(b.q_arity);
    let diag = if xs.len() == 1 { eq(&xs[0], &xs[0]) } else { conj(xs[1..].iter().map(|x| eq(&xs[0], x))) };
    let body = implies(atom(q, xs.clone()), diag);
    out.push(TaggedSentence {
        property: Property::QDiagonal,
        formula: xs.iter().rev().fold(body, |acc, x| forall(x, acc)),
    });

    let (x, y) = (b.fresh(), b.fresh());
    let adj = b.adj(&x, &y);
    out.push(TaggedSentence {
        property: Property::NoCrossAdjacency,
        formula: forall(&x, forall(&y, implies(and(b.q(&x), b.nq(&y)), not(adj)))),
    });

    for (i, sym) in sig.symbols().iter().enumerate() {
        let vars = b.fresh_n(sym.arity);
        let all_nq = conj(vars.iter().map(|v| b.nq(v)));
        let tuple = atom(&sym.name, vars.clone());
        let (property, body) = if sym.name == r {
            let mut swapped = vec![vars[1].clone()];
            swapped.extend(std::iter::repeat_n(vars[0].clone(), sym.arity - 1));
            let shape = conj(
                std::iter::once(not(eq(&vars[0], &vars[1])))
                    .chain(vars[2..].iter().map(|v| eq(&vars[1], v)))
                    .chain(std::iter::once(atom(r, swapped))),
            );
            (Property::RGraphAxiom, implies(and(all_nq, tuple), shape))
        } else {
            (Property::EmptyOffR(i), implies(all_nq, not(tuple)))
        };
        out.push(TaggedSentence { property, formula: vars.iter().rev().fold(body, |acc, v| forall(v, acc)) });
    }
    Ok(out)
}

/// Level-`m` graph conditions on the untagged part: no short cycles, degrees
/// 4 or 5, at least `m` degree-4 vertices, and degree-4 vertices far apart.
///
/// A closed walk of length `k` repeats its first element, so forbidding them
/// for `3 <= k <= m` means no cycle through `c = k - 1` distinct vertices;
/// `c = 2` would be an edge traversed twice, leaving `3 <= c <= m - 1`.
/// Separation uses paths with distinct endpoints on `2 <= k <= m` vertices.
pub fn graph_condition_sentences(sig: &Signature, q: &str, r: &str, m: usize) -> Result<Vec<TaggedSentence>, LogicError> {
    if m < 3 {
        return Err(LogicError::InvalidParameter(format!("m must be >= 3, got {m}")));
    }
    let mut b = Builder::new(sig, q, r)?;
    let mut out = Vec::new();

    for c in 3..m {
        let cyc = b.exists_path(c, &mut |b, vs| b.adj(&vs[vs.len() - 1], &vs[0]));
        out.push(TaggedSentence { property: Property::NoCycle(c), formula: not(cyc) });
    }

    let x = b.fresh();
    let four = b.exactly(&x, 4);
    let five = b.exactly(&x, 5);
    out.push(TaggedSentence { property: Property::Degrees45, formula: b.all_nq(&x, or(four, five)) });

    let xs = b.fresh_n(m);
    let mut body = formula::top();
    for i in (0..m).rev() {
        let deg4 = b.exactly(&xs[i], 4);
        let inner = if i == m - 1 { deg4 } else { and(deg4, body) };
        let inner = if i == 0 { inner } else { and(b.distinct_from(&xs[i], &xs[..i]), inner) };
        body = b.ex_nq(&xs[i], inner);
    }
    out.push(TaggedSentence { property: Property::EnoughDegree4, formula: body });

    for k in 2..=m {
        let path = b.exists_path(k, &mut |b, vs| {
            let first = b.exactly(&vs[0], 4);
            let last = b.exactly(&vs[vs.len() - 1], 4);
            and(first, last)
        });
        out.push(TaggedSentence { property: Property::Degree4FarApart(k), formula: not(path) });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fologic::{evaluate, parse, Assignment};
    use crate::structures::{disjoint_union, r_graph_from_graph, Graph, Structure};

    fn sig() -> Signature {
        "R/2 Q/1 S/3".parse().unwrap()
    }

    fn holds(s: &Structure, f: &Formula) -> bool {
        evaluate(s, f, &Assignment::new()).unwrap()
    }

    #[test]
    fn all_outputs_are_sentences_that_reparse() {
        let sig = sig();
        let mut all = tag_sentences(&sig, "Q", "R").unwrap();
        all.extend(graph_condition_sentences(&sig, "Q", "R", 4).unwrap());
        for t in &all {
            assert!(t.formula.is_sentence(), "{}", t.property);
            assert_eq!(parse(&t.formula.to_string(), &sig).unwrap(), t.formula);
        }
        let props: Vec<_> = graph_condition_sentences(&sig, "Q", "R", 4).unwrap().into_iter().map(|t| t.property).collect();
        assert_eq!(
            props,
            vec![
                Property::NoCycle(3),
                Property::Degrees45,
                Property::EnoughDegree4,
                Property::Degree4FarApart(2),
                Property::Degree4FarApart(3),
                Property::Degree4FarApart(4),
            ]
        );
    }

    #[test]
    fn parameter_errors() {
        let sig = sig();
        assert!(tag_sentences(&sig, "Q", "Q").is_err());
        assert!(tag_sentences(&sig, "Q", "Z").is_err());
        assert!(tag_sentences(&"R/2 Q/1 U/1".parse().unwrap(), "Q", "U").is_err());
        assert!(graph_condition_sentences(&sig, "Q", "R", 2).is_err());
    }

    #[test]
    fn tagged_union_satisfies_gamma0() {
        let sig = sig();
        let m = Structure::new(
            sig.clone(),
            3,
            [("R", vec![vec![0, 0], vec![0, 1]]), ("S", vec![vec![2, 1, 0]])],
        )
        .unwrap()
        .add_q_diagonal("Q")
        .unwrap();
        let n = r_graph_from_graph(&Graph::new(3, [(0, 1), (1, 2)]).unwrap(), &sig, "R").unwrap();
        let u = disjoint_union(&[&m, &n]).unwrap().structure;
        for t in tag_sentences(&sig, "Q", "R").unwrap() {
            assert!(holds(&u, &t.formula), "{}", t.property);
        }
    }

    #[test]
    fn cross_adjacency_witness_falsifies_4() {
        let sig = sig();
        // 0 is Q-tagged, 1 is not, and they share an R-tuple.
        let s = Structure::new(sig.clone(), 2, [("Q", vec![vec![0]]), ("R", vec![vec![0, 1], vec![1, 0]])]).unwrap();
        let g0 = tag_sentences(&sig, "Q", "R").unwrap();
        for t in &g0 {
            let expected = t.property != Property::NoCrossAdjacency;
            assert_eq!(holds(&s, &t.formula), expected, "{}", t.property);
        }
    }

    #[test]
    fn five_regular_graph_fails_enough_degree4() {
        // K6 is 5-regular.
        let sig: Signature = "R/2 Q/1".parse().unwrap();
        let edges = (0..6).flat_map(|u| (u + 1..6).map(move |v| (u, v)));
        let s = r_graph_from_graph(&Graph::new(6, edges).unwrap(), &sig, "R").unwrap();
        for t in graph_condition_sentences(&sig, "Q", "R", 3).unwrap() {
            let expected = t.property != Property::EnoughDegree4;
            assert_eq!(holds(&s, &t.formula), expected, "{}", t.property);
        }
    }
}
