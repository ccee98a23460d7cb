//! Tarski semantics over finite structures.
//!
//! Formulas are compiled to a node array with one slot per variable name.
//! Each quantifier node caches its truth value keyed by the values of its own
//! free variables, so repeated subformulas (adjacency, degree counting) are
//! evaluated once per relevant assignment. The cache lives for one call.

use std::collections::{BTreeMap, HashMap, HashSet};

use super::formula::Formula;
use super::LogicError;
use crate::structures::Structure;

/// Values for free variables.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Assignment(BTreeMap<String, usize>);

impl Assignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, var: &str, value: usize) -> Self {
        self.0.insert(var.to_string(), value);
        self
    }

    pub fn insert(&mut self, var: &str, value: usize) {
        self.0.insert(var.to_string(), value);
    }

    pub fn get(&self, var: &str) -> Option<usize> {
        self.0.get(var).copied()
    }
}

const DENSE_LIMIT: usize = 1 << 22;
const MEMO_DENSE_LIMIT: usize = 1 << 18;

enum RelIndex {
    Dense { bits: Vec<bool>, n: usize },
    Sparse(HashSet<Vec<usize>>),
}

impl RelIndex {
    fn build(s: &Structure, idx: usize) -> Self {
        let arity = s.signature().symbols()[idx].arity;
        let n = s.size();
        match n.checked_pow(arity as u32).filter(|&c| c <= DENSE_LIMIT) {
            Some(cells) => {
                let mut bits = vec![false; cells];
                for t in s.relation_at(idx) {
                    bits[t.iter().fold(0, |acc, &a| acc * n + a)] = true;
                }
                RelIndex::Dense { bits, n }
            }
            None => RelIndex::Sparse(s.relation_at(idx).iter().cloned().collect()),
        }
    }

    fn contains(&self, vals: &[usize], slots: &[usize]) -> bool {
        match self {
            RelIndex::Dense { bits, n } => bits[slots.iter().fold(0, |acc, &s| acc * n + vals[s])],
            RelIndex::Sparse(set) => set.contains(&slots.iter().map(|&s| vals[s]).collect::<Vec<_>>()),
        }
    }
}

enum Memo {
    /// Allocated on first store; 0 = unknown, 1 = false, 2 = true.
    Dense(Vec<u8>, usize),
    Sparse(HashMap<Vec<usize>, bool>),
}

enum Node {
    Atom { rel: usize, slots: Vec<usize> },
    Eq(usize, usize),
    Const(bool),
    Not(usize),
    And(usize, usize),
    Or(usize, usize),
    Implies(usize, usize),
    Iff(usize, usize),
    Quant { universal: bool, slot: usize, body: usize, free: Vec<usize>, memo: usize },
}

struct Compiler<'a> {
    s: &'a Structure,
    p_value: Option<bool>,
    nodes: Vec<Node>,
    slots: HashMap<String, usize>,
    rel_used: Vec<bool>,
    memo_shapes: Vec<usize>,
}

impl Compiler<'_> {
    fn slot(&mut self, v: &str) -> usize {
        let next = self.slots.len();
        *self.slots.entry(v.to_string()).or_insert(next)
    }

    fn push(&mut self, node: Node) -> usize {
        self.nodes.push(node);
        self.nodes.len() - 1
    }

    fn compile(&mut self, f: &Formula) -> Result<usize, LogicError> {
        Ok(match f {
            Formula::Atom { symbol, args } => {
                let sig = self.s.signature();
                let rel = sig.index_of(symbol).ok_or_else(|| LogicError::UnknownSymbol(symbol.clone()))?;
                let arity = sig.symbols()[rel].arity;
                if arity != args.len() {
                    return Err(LogicError::Arity { symbol: symbol.clone(), expected: arity, found: args.len() });
                }
                self.rel_used[rel] = true;
                let slots = args.iter().map(|a| self.slot(a)).collect();
                self.push(Node::Atom { rel, slots })
            }
            Formula::Equal(x, y) => {
                let (a, b) = (self.slot(x), self.slot(y));
                self.push(Node::Eq(a, b))
            }
            Formula::P => match self.p_value {
                Some(v) => self.push(Node::Const(v)),
                None => return Err(LogicError::PAtomPresent),
            },
            Formula::Not(g) => {
                let g = self.compile(g)?;
                self.push(Node::Not(g))
            }
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) | Formula::Iff(a, b) => {
                let (x, y) = (self.compile(a)?, self.compile(b)?);
                self.push(match f {
                    Formula::And(..) => Node::And(x, y),
                    Formula::Or(..) => Node::Or(x, y),
                    Formula::Implies(..) => Node::Implies(x, y),
                    _ => Node::Iff(x, y),
                })
            }
            Formula::Exists(x, g) | Formula::Forall(x, g) => {
                let slot = self.slot(x);
                let body = self.compile(g)?;
                let free: Vec<usize> = f.free_vars().iter().map(|v| self.slot(v)).collect();
                let memo = self.memo_shapes.len();
                self.memo_shapes.push(free.len());
                self.push(Node::Quant { universal: matches!(f, Formula::Forall(..)), slot, body, free, memo })
            }
        })
    }
}

/// Reusable model checker for one structure.
pub struct Evaluator<'a> {
    s: &'a Structure,
    rels: Vec<Option<RelIndex>>,
}

struct Run<'e> {
    n: usize,
    nodes: &'e [Node],
    rels: &'e [Option<RelIndex>],
    memos: Vec<Memo>,
    vals: Vec<usize>,
}

impl Run<'_> {
    fn eval(&mut self, id: usize) -> bool {
        match &self.nodes[id] {
            Node::Atom { rel, slots } => self.rels[*rel].as_ref().unwrap().contains(&self.vals, slots),
            Node::Eq(a, b) => self.vals[*a] == self.vals[*b],
            Node::Const(v) => *v,
            Node::Not(g) => !self.eval(*g),
            Node::And(a, b) => self.eval(*a) && self.eval(*b),
            Node::Or(a, b) => self.eval(*a) || self.eval(*b),
            Node::Implies(a, b) => !self.eval(*a) || self.eval(*b),
            Node::Iff(a, b) => self.eval(*a) == self.eval(*b),
            Node::Quant { universal, slot, body, free, memo } => {
                let (universal, slot, body, memo) = (*universal, *slot, *body, *memo);
                let key = self.memo_key(free);
                if let Some(v) = self.lookup(memo, &key) {
                    return v;
                }
                let saved = self.vals[slot];
                let mut result = universal;
                for a in 0..self.n {
                    self.vals[slot] = a;
                    if self.eval(body) != universal {
                        result = !universal;
                        break;
                    }
                }
                self.vals[slot] = saved;
                self.store(memo, key, result);
                result
            }
        }
    }

    fn memo_key(&self, free: &[usize]) -> Key {
        match self.dense_index(free) {
            Some(i) => Key::Dense(i),
            None => Key::Sparse(free.iter().map(|&s| self.vals[s]).collect()),
        }
    }

    fn dense_index(&self, free: &[usize]) -> Option<usize> {
        self.n.checked_pow(free.len() as u32).filter(|&c| c <= MEMO_DENSE_LIMIT)?;
        Some(free.iter().fold(0, |acc, &s| acc * self.n + self.vals[s]))
    }

    fn lookup(&self, memo: usize, key: &Key) -> Option<bool> {
        match (&self.memos[memo], key) {
            (Memo::Dense(v, _), Key::Dense(i)) => match v.get(*i) {
                None | Some(0) => None,
                Some(&x) => Some(x == 2),
            },
            (Memo::Sparse(m), Key::Sparse(k)) => m.get(k).copied(),
            _ => unreachable!(),
        }
    }

    fn store(&mut self, memo: usize, key: Key, value: bool) {
        match (&mut self.memos[memo], key) {
            (Memo::Dense(v, cells), Key::Dense(i)) => {
                if v.is_empty() {
                    v.resize(*cells, 0);
                }
                v[i] = 1 + value as u8;
            }
            (Memo::Sparse(m), Key::Sparse(k)) => {
                m.insert(k, value);
            }
            _ => unreachable!(),
        }
    }
}

enum Key {
    Dense(usize),
    Sparse(Vec<usize>),
}

impl<'a> Evaluator<'a> {
    pub fn new(s: &'a Structure) -> Self {
        Evaluator { s, rels: (0..s.signature().len()).map(|_| None).collect() }
    }

    pub fn structure(&self) -> &Structure {
        self.s
    }

    fn run(&mut self, f: &Formula, a: &Assignment, p_value: Option<bool>) -> Result<bool, LogicError> {
        let mut c = Compiler {
            s: self.s,
            p_value,
            nodes: Vec::new(),
            slots: HashMap::new(),
            rel_used: vec![false; self.s.signature().len()],
            memo_shapes: Vec::new(),
        };
        let root = c.compile(f)?;
        let mut vals = vec![usize::MAX; c.slots.len()];
        for v in f.free_vars() {
            let value = a.get(&v).ok_or_else(|| LogicError::UnboundVariable(v.clone()))?;
            if value >= self.s.size() {
                return Err(LogicError::ValueOutOfRange { var: v, value, size: self.s.size() });
            }
            vals[c.slots[&v]] = value;
        }
        for (i, used) in c.rel_used.iter().enumerate() {
            if *used && self.rels[i].is_none() {
                self.rels[i] = Some(RelIndex::build(self.s, i));
            }
        }
        let n = self.s.size();
        let memos = c
            .memo_shapes
            .iter()
            .map(|&k| match n.checked_pow(k as u32).filter(|&c| c <= MEMO_DENSE_LIMIT) {
                Some(cells) => Memo::Dense(Vec::new(), cells),
                None => Memo::Sparse(HashMap::new()),
            })
            .collect();
        let mut run = Run { n, nodes: &c.nodes, rels: &self.rels, memos, vals };
        Ok(run.eval(root))
    }

    /// Truth of `f` under `a`. Fails if `f` contains `P`.
    pub fn evaluate(&mut self, f: &Formula, a: &Assignment) -> Result<bool, LogicError> {
        self.run(f, a, None)
    }

    pub fn evaluate_sentence(&mut self, f: &Formula) -> Result<bool, LogicError> {
        self.run(f, &Assignment::new(), None)
    }

    /// Truth of a sentence with `P` interpreted as `p_value`.
    pub fn evaluate_with_p(&mut self, f: &Formula, p_value: bool) -> Result<bool, LogicError> {
        self.run(f, &Assignment::new(), Some(p_value))
    }
}

pub fn evaluate(s: &Structure, f: &Formula, a: &Assignment) -> Result<bool, LogicError> {
    Evaluator::new(s).evaluate(f, a)
}

/// `P` holds in every finite structure (its automorphism group is finite),
/// so `evaluate_with_p(s, f, true)` is the faithful reading; `false` is
/// available for exercising the other branch.
pub fn evaluate_with_p(s: &Structure, f: &Formula, p_value: bool) -> Result<bool, LogicError> {
    Evaluator::new(s).evaluate_with_p(f, p_value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fologic::formula::*;
    use crate::fologic::Formula::P;
    use crate::fologic::parse;
    use crate::structures::{r_graph_from_graph, Graph, Signature};

    fn path3_binary() -> Structure {
        let sig: Signature = "R/2".parse().unwrap();
        r_graph_from_graph(&Graph::new(3, [(0, 1), (1, 2)]).unwrap(), &sig, "R").unwrap()
    }

    #[test]
    fn spec_examples() {
        let s = path3_binary();
        assert!(evaluate(&s, &top(), &Assignment::new()).unwrap());
        let f = parse("forall x exists y R(x,y)", s.signature()).unwrap();
        assert!(evaluate(&s, &f, &Assignment::new()).unwrap());

        let sig: Signature = "R/3".parse().unwrap();
        let edge = r_graph_from_graph(&Graph::new(2, [(0, 1)]).unwrap(), &sig, "R").unwrap();
        let f = parse("exists x exists y R(x,y,y)", &sig).unwrap();
        assert!(evaluate(&edge, &f, &Assignment::new()).unwrap());
    }

    #[test]
    fn free_variables_need_values() {
        let s = path3_binary();
        let f = parse("R(x,y)", s.signature()).unwrap();
        assert!(matches!(evaluate(&s, &f, &Assignment::new()), Err(LogicError::UnboundVariable(_))));
        assert!(evaluate(&s, &f, &Assignment::new().with("x", 0).with("y", 1)).unwrap());
        assert!(!evaluate(&s, &f, &Assignment::new().with("x", 0).with("y", 2)).unwrap());
        assert!(matches!(
            evaluate(&s, &f, &Assignment::new().with("x", 0).with("y", 7)),
            Err(LogicError::ValueOutOfRange { .. })
        ));
    }

    #[test]
    fn p_handling() {
        let s = path3_binary();
        assert!(matches!(evaluate(&s, &P, &Assignment::new()), Err(LogicError::PAtomPresent)));
        assert!(evaluate_with_p(&s, &P, true).unwrap());
        assert!(!evaluate_with_p(&s, &P, false).unwrap());
        let phi = parse("exists x R(x,x)", s.signature()).unwrap();
        assert_eq!(
            evaluate_with_p(&s, &and(P, phi.clone()), true).unwrap(),
            evaluate(&s, &phi, &Assignment::new()).unwrap()
        );
    }

    #[test]
    fn empty_universe() {
        let s = Structure::empty("R/2".parse().unwrap(), 0);
        assert!(evaluate(&s, &top(), &Assignment::new()).unwrap());
        assert!(!evaluate(&s, &bottom(), &Assignment::new()).unwrap());
        assert!(!evaluate(&s, &exists("x", eq("x", "x")), &Assignment::new()).unwrap());
    }

    #[test]
    fn shadowing_restores_outer_binding() {
        let s = path3_binary();
        // x = 0 outside; inner exists x rebinds it, then the outer x is used again.
        let f = and(exists("x", atom("R", ["x", "y"])), eq("x", "y"));
        let a = Assignment::new().with("x", 1).with("y", 1);
        assert!(evaluate(&s, &f, &a).unwrap());
        let a = Assignment::new().with("x", 0).with("y", 1);
        assert!(!evaluate(&s, &f, &a).unwrap());
    }

    #[test]
    fn unknown_symbol_in_structure() {
        let s = path3_binary();
        assert!(matches!(
            evaluate(&s, &atom("S", ["x"]), &Assignment::new().with("x", 0)),
            Err(LogicError::UnknownSymbol(_))
        ));
    }
}
