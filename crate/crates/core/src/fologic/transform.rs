//! Syntactic rewrites: relativization to the Q-tagged part and the two
//! `P`-elimination transforms.

use super::formula::{self, Formula};
use super::LogicError;
use crate::structures::Signature;

/// Bounds every quantifier by `guard(x)`: `forall x (guard -> body)` and
/// `exists x (guard & body)`.
pub fn relativize_with(f: &Formula, guard: &dyn Fn(&str) -> Formula) -> Formula {
    use Formula::*;
    match f {
        Atom { .. } | Equal(..) | P => f.clone(),
        Not(g) => formula::not(relativize_with(g, guard)),
        And(a, b) => formula::and(relativize_with(a, guard), relativize_with(b, guard)),
        Or(a, b) => formula::or(relativize_with(a, guard), relativize_with(b, guard)),
        Implies(a, b) => formula::implies(relativize_with(a, guard), relativize_with(b, guard)),
        Iff(a, b) => formula::iff(relativize_with(a, guard), relativize_with(b, guard)),
        Forall(x, g) => formula::forall(x, formula::implies(guard(x), relativize_with(g, guard))),
        Exists(x, g) => formula::exists(x, formula::and(guard(x), relativize_with(g, guard))),
    }
}

/// `Q(x, ..., x)` with `x` repeated `arity` times.
pub fn diagonal_atom(q: &str, arity: usize, x: &str) -> Formula {
    formula::atom(q, std::iter::repeat_n(x, arity))
}

fn q_arity(sig: &Signature, q: &str) -> Result<usize, LogicError> {
    sig.arity(q).ok_or_else(|| LogicError::UnknownSymbol(q.to_string()))
}

/// The relativization `φ_Q`: quantifiers range over elements with `Q(x, ..., x)`.
pub fn relativize_q(f: &Formula, sig: &Signature, q: &str) -> Result<Formula, LogicError> {
    let arity = q_arity(sig, q)?;
    if f.mentions(q) {
        return Err(LogicError::SymbolOccurs(q.to_string()));
    }
    Ok(relativize_with(f, &|x| diagonal_atom(q, arity, x)))
}

/// Relativization to the complement `!Q(x, ..., x)`.
pub fn relativize_not_q(f: &Formula, sig: &Signature, q: &str) -> Result<Formula, LogicError> {
    let arity = q_arity(sig, q)?;
    Ok(relativize_with(f, &|x| formula::not(diagonal_atom(q, arity, x))))
}

fn replace_p(f: &Formula, with: &Formula) -> Formula {
    use Formula::*;
    match f {
        P => with.clone(),
        Atom { .. } | Equal(..) => f.clone(),
        Not(g) => formula::not(replace_p(g, with)),
        And(a, b) => formula::and(replace_p(a, with), replace_p(b, with)),
        Or(a, b) => formula::or(replace_p(a, with), replace_p(b, with)),
        Implies(a, b) => formula::implies(replace_p(a, with), replace_p(b, with)),
        Iff(a, b) => formula::iff(replace_p(a, with), replace_p(b, with)),
        Exists(x, g) => formula::exists(x, replace_p(g, with)),
        Forall(x, g) => formula::forall(x, replace_p(g, with)),
    }
}

/// `P` becomes `forall x (x = x)`; everything else is copied.
pub fn prime_transform(f: &Formula) -> Formula {
    replace_p(f, &formula::top())
}

/// `P` becomes `!forall x (x = x)`; everything else is copied.
pub fn double_prime_transform(f: &Formula) -> Formula {
    replace_p(f, &formula::bottom())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fologic::{evaluate, parse, Assignment};
    use crate::structures::Structure;

    fn sig() -> Signature {
        "R/2 Q/2".parse().unwrap()
    }

    #[test]
    fn relativize_examples() {
        let f = parse("forall x R(x,x)", &sig()).unwrap();
        let g = relativize_q(&f, &sig(), "Q").unwrap();
        assert_eq!(g.to_string(), "forall x (Q(x,x) -> R(x,x))");

        let qf = parse("R(x,y) & !x = y", &sig()).unwrap();
        assert_eq!(relativize_q(&qf, &sig(), "Q").unwrap(), qf);

        let nested = parse("forall x exists y R(x,y)", &sig()).unwrap();
        assert_eq!(
            relativize_q(&nested, &sig(), "Q").unwrap().to_string(),
            "forall x (Q(x,x) -> exists y (Q(y,y) & R(x,y)))"
        );
    }

    #[test]
    fn relativize_errors() {
        let f = parse("exists x Q(x,x)", &sig()).unwrap();
        assert!(matches!(relativize_q(&f, &sig(), "Q"), Err(LogicError::SymbolOccurs(_))));
        assert!(matches!(relativize_q(&formula::top(), &sig(), "Z"), Err(LogicError::UnknownSymbol(_))));
    }

    #[test]
    fn p_transforms() {
        assert_eq!(prime_transform(&Formula::P).to_string(), "forall x (x = x)");
        assert_eq!(double_prime_transform(&Formula::P).to_string(), "!forall x (x = x)");
        assert_eq!(prime_transform(&formula::not(Formula::P)).to_string(), "!forall x (x = x)");
        let p_free = parse("forall x exists y (R(x,y) | x = y)", &sig()).unwrap();
        assert_eq!(prime_transform(&p_free), p_free);
        assert_eq!(double_prime_transform(&p_free), p_free);

        let s = Structure::empty(sig(), 2);
        assert!(!evaluate(&s, &double_prime_transform(&Formula::P), &Assignment::new()).unwrap());
        assert!(evaluate(&s, &prime_transform(&Formula::P), &Assignment::new()).unwrap());
    }
}
