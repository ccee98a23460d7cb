use std::collections::BTreeSet;
use std::fmt;

use super::LogicError;
use crate::structures::Signature;

/// First-order formulas over a relational signature, extended with the
/// nullary atom `P`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Atom { symbol: String, args: Vec<String> },
    Equal(String, String),
    P,
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
    Exists(String, Box<Formula>),
    Forall(String, Box<Formula>),
}

use Formula::*;

pub fn atom<S: Into<String>>(symbol: &str, args: impl IntoIterator<Item = S>) -> Formula {
    Atom { symbol: symbol.to_string(), args: args.into_iter().map(Into::into).collect() }
}

pub fn eq(x: &str, y: &str) -> Formula {
    Equal(x.to_string(), y.to_string())
}

#[allow(clippy::should_implement_trait)]
pub fn not(f: Formula) -> Formula {
    Not(Box::new(f))
}

pub fn and(f: Formula, g: Formula) -> Formula {
    And(Box::new(f), Box::new(g))
}

pub fn or(f: Formula, g: Formula) -> Formula {
    Or(Box::new(f), Box::new(g))
}

pub fn implies(f: Formula, g: Formula) -> Formula {
    Implies(Box::new(f), Box::new(g))
}

pub fn iff(f: Formula, g: Formula) -> Formula {
    Iff(Box::new(f), Box::new(g))
}

pub fn exists(x: &str, f: Formula) -> Formula {
    Exists(x.to_string(), Box::new(f))
}

pub fn forall(x: &str, f: Formula) -> Formula {
    Forall(x.to_string(), Box::new(f))
}

/// `forall x (x = x)`: true in every structure, including the empty one.
pub fn top() -> Formula {
    forall("x", eq("x", "x"))
}

/// `!forall x (x = x)`: false in every structure.
pub fn bottom() -> Formula {
    not(top())
}

/// Left-nested conjunction; `top()` when empty.
pub fn conj(parts: impl IntoIterator<Item = Formula>) -> Formula {
    parts.into_iter().reduce(and).unwrap_or_else(top)
}

/// Left-nested disjunction; `bottom()` when empty.
pub fn disj(parts: impl IntoIterator<Item = Formula>) -> Formula {
    parts.into_iter().reduce(or).unwrap_or_else(bottom)
}

impl Formula {
    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    fn collect_free(&self, bound: &mut Vec<String>, out: &mut BTreeSet<String>) {
        let mut note = |v: &String, bound: &Vec<String>| {
            if !bound.contains(v) {
                out.insert(v.clone());
            }
        };
        match self {
            Atom { args, .. } => args.iter().for_each(|v| note(v, bound)),
            Equal(x, y) => {
                note(x, bound);
                note(y, bound);
            }
            P => {}
            Not(f) => f.collect_free(bound, out),
            And(f, g) | Or(f, g) | Implies(f, g) | Iff(f, g) => {
                f.collect_free(bound, out);
                g.collect_free(bound, out);
            }
            Exists(x, f) | Forall(x, f) => {
                bound.push(x.clone());
                f.collect_free(bound, out);
                bound.pop();
            }
        }
    }

    pub fn is_sentence(&self) -> bool {
        self.free_vars().is_empty()
    }

    pub fn contains_p(&self) -> bool {
        match self {
            P => true,
            Atom { .. } | Equal(..) => false,
            Not(f) | Exists(_, f) | Forall(_, f) => f.contains_p(),
            And(f, g) | Or(f, g) | Implies(f, g) | Iff(f, g) => f.contains_p() || g.contains_p(),
        }
    }

    pub fn mentions(&self, symbol: &str) -> bool {
        match self {
            Atom { symbol: s, .. } => s == symbol,
            Equal(..) | P => false,
            Not(f) | Exists(_, f) | Forall(_, f) => f.mentions(symbol),
            And(f, g) | Or(f, g) | Implies(f, g) | Iff(f, g) => f.mentions(symbol) || g.mentions(symbol),
        }
    }

    pub fn quantifier_rank(&self) -> usize {
        match self {
            Atom { .. } | Equal(..) | P => 0,
            Not(f) => f.quantifier_rank(),
            And(f, g) | Or(f, g) | Implies(f, g) | Iff(f, g) => f.quantifier_rank().max(g.quantifier_rank()),
            Exists(_, f) | Forall(_, f) => 1 + f.quantifier_rank(),
        }
    }

    /// Number of AST nodes.
    pub fn size(&self) -> usize {
        match self {
            Atom { .. } | Equal(..) | P => 1,
            Not(f) | Exists(_, f) | Forall(_, f) => 1 + f.size(),
            And(f, g) | Or(f, g) | Implies(f, g) | Iff(f, g) => 1 + f.size() + g.size(),
        }
    }

    /// Every atom names a symbol of `sig` with the right number of arguments.
    pub fn check_signature(&self, sig: &Signature) -> Result<(), LogicError> {
        match self {
            Atom { symbol, args } => match sig.arity(symbol) {
                None => Err(LogicError::UnknownSymbol(symbol.clone())),
                Some(a) if a != args.len() => {
                    Err(LogicError::Arity { symbol: symbol.clone(), expected: a, found: args.len() })
                }
                Some(_) => Ok(()),
            },
            Equal(..) | P => Ok(()),
            Not(f) | Exists(_, f) | Forall(_, f) => f.check_signature(sig),
            And(f, g) | Or(f, g) | Implies(f, g) | Iff(f, g) => {
                f.check_signature(sig)?;
                g.check_signature(sig)
            }
        }
    }

    fn is_binary(&self) -> bool {
        matches!(self, And(..) | Or(..) | Implies(..) | Iff(..))
    }
}

struct Operand<'a>(&'a Formula);

impl fmt::Display for Operand<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_binary() {
            write!(f, "({})", self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

/// Canonical concrete syntax: binary operands are parenthesized when they are
/// themselves binary, quantifier bodies are always parenthesized. The output
/// re-parses to the same tree.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom { symbol, args } => write!(f, "{symbol}({})", args.join(",")),
            Equal(x, y) => write!(f, "{x} = {y}"),
            P => f.write_str("P"),
            Not(g) => write!(f, "!{}", Operand(g)),
            And(a, b) => write!(f, "{} & {}", Operand(a), Operand(b)),
            Or(a, b) => write!(f, "{} | {}", Operand(a), Operand(b)),
            Implies(a, b) => write!(f, "{} -> {}", Operand(a), Operand(b)),
            Iff(a, b) => write!(f, "{} <-> {}", Operand(a), Operand(b)),
            Exists(x, g) => write!(f, "exists {x} ({g})"),
            Forall(x, g) => write!(f, "forall {x} ({g})"),
        }
    }
}
