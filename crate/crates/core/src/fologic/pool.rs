//! A finite, canonically ordered pool of sentences standing in for the full
//! theory of a structure.
//!
//! Bound variables are named by nesting depth (`x`, `y`, `z`, `w`, then
//! `x4`, `x5`, ...), so every sentence is enumerated once up to the choice of
//! names. Sentences are produced by increasing AST size, and within a size in
//! a fixed constructor order. Double negations are skipped and conjunctions
//! and disjunctions take their operands in nondecreasing enumeration order.

use std::collections::{BTreeSet, HashMap};

use super::formula::{self, Formula};
use super::transform::relativize_q;
use super::{Evaluator, LogicError};
use crate::structures::{Signature, Structure};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PoolConfig {
    /// Maximum quantifier rank.
    pub max_rank: usize,
    /// Maximum number of AST nodes.
    pub max_size: usize,
    /// Truncate after this many sentences.
    pub max_count: usize,
}

impl Default for PoolConfig {
    fn default() -> Self {
        PoolConfig { max_rank: 3, max_size: 5, max_count: 2000 }
    }
}

pub fn bound_var(depth: usize) -> String {
    match depth {
        0 => "x".into(),
        1 => "y".into(),
        2 => "z".into(),
        3 => "w".into(),
        d => format!("x{d}"),
    }
}

struct Enumerator<'a> {
    sig: &'a Signature,
    max_rank: usize,
    table: HashMap<(usize, usize), Vec<Formula>>,
}

impl Enumerator<'_> {
    fn atoms(&self, depth: usize) -> Vec<Formula> {
        let vars: Vec<String> = (0..depth).map(bound_var).collect();
        let mut out = Vec::new();
        for i in 0..depth {
            for j in i..depth {
                out.push(formula::eq(&vars[i], &vars[j]));
            }
        }
        for sym in self.sig.symbols() {
            let total = depth.pow(sym.arity as u32);
            for mut code in 0..total {
                let mut args = vec![String::new(); sym.arity];
                for slot in args.iter_mut().rev() {
                    *slot = vars[code % depth].clone();
                    code /= depth;
                }
                out.push(formula::atom(&sym.name, args));
            }
        }
        out
    }

    /// Formulas of exactly `size` nodes whose free variables are among the first `depth` bound names.
    fn level(&mut self, size: usize, depth: usize) -> Vec<Formula> {
        if let Some(v) = self.table.get(&(size, depth)) {
            return v.clone();
        }
        let mut out = Vec::new();
        if size == 1 {
            if depth > 0 {
                out = self.atoms(depth);
            }
        } else {
            for g in self.level(size - 1, depth) {
                if !matches!(g, Formula::Not(_)) {
                    out.push(formula::not(g));
                }
            }
            for left in 1..=(size - 2) / 2 {
                let right = size - 1 - left;
                let ls = self.level(left, depth);
                let rs = self.level(right, depth);
                for (i, a) in ls.iter().enumerate() {
                    let start = if left == right { i } else { 0 };
                    for b in &rs[start..] {
                        out.push(formula::and(a.clone(), b.clone()));
                        out.push(formula::or(a.clone(), b.clone()));
                    }
                }
            }
            if depth < self.max_rank {
                let x = bound_var(depth);
                for body in self.level(size - 1, depth + 1) {
                    out.push(formula::exists(&x, body.clone()));
                    out.push(formula::forall(&x, body));
                }
            }
        }
        self.table.insert((size, depth), out.clone());
        out
    }
}

/// Canonical pool of sentences over `sig`, deduplicated by printed form.
pub fn sentence_pool(sig: &Signature, cfg: &PoolConfig) -> Vec<Formula> {
    let mut e = Enumerator { sig, max_rank: cfg.max_rank, table: HashMap::new() };
    let mut seen = BTreeSet::new();
    let mut out = vec![formula::top()];
    seen.insert(formula::top().to_string());
    for size in 1..=cfg.max_size {
        for f in e.level(size, 0) {
            if out.len() >= cfg.max_count {
                return out;
            }
            if seen.insert(f.to_string()) {
                out.push(f);
            }
        }
    }
    out.truncate(cfg.max_count);
    out
}

/// Relativizations `φ_Q` of the pool sentences over `σ \ {Q}` that hold in `s`.
pub fn relativized_theory(s: &Structure, q: &str, cfg: &PoolConfig) -> Result<Vec<Formula>, LogicError> {
    let sig = s.signature();
    if !sig.contains(q) {
        return Err(LogicError::UnknownSymbol(q.to_string()));
    }
    if !s.relation(q).map_err(|e| LogicError::InvalidParameter(e.to_string()))?.is_empty() {
        return Err(LogicError::InvalidParameter(format!("relation {q} must be empty")));
    }
    let reduced = sig.without(q);
    let mut ev = Evaluator::new(s);
    let mut out = Vec::new();
    for phi in sentence_pool(&reduced, cfg) {
        if ev.evaluate_sentence(&phi)? {
            out.push(relativize_q(&phi, sig, q)?);
        }
    }
    Ok(out)
}
