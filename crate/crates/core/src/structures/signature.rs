use std::fmt;
use std::str::FromStr;

use super::StructureError;

/// A relation symbol together with its arity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Symbol {
    pub name: String,
    pub arity: usize,
}

/// An ordered, finite relational signature.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Signature {
    symbols: Vec<Symbol>,
}

impl Signature {
    pub fn new<I, S>(symbols: I) -> Result<Self, StructureError>
    where
        I: IntoIterator<Item = (S, usize)>,
        S: Into<String>,
    {
        let mut out: Vec<Symbol> = Vec::new();
        for (name, arity) in symbols {
            let name = name.into();
            if name.is_empty() || name.chars().any(|c| c.is_whitespace() || c == '/') {
                return Err(StructureError::InvalidSymbolName(name));
            }
            if arity == 0 {
                return Err(StructureError::ZeroArity(name));
            }
            if out.iter().any(|s| s.name == name) {
                return Err(StructureError::DuplicateSymbol(name));
            }
            out.push(Symbol { name, arity });
        }
        Ok(Signature { symbols: out })
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.symbols.iter().position(|s| s.name == name)
    }

    pub fn arity(&self, name: &str) -> Option<usize> {
        self.symbols.iter().find(|s| s.name == name).map(|s| s.arity)
    }

    pub fn contains(&self, name: &str) -> bool {
        self.index_of(name).is_some()
    }

    /// The same signature with `name` removed (order of the rest preserved).
    pub fn without(&self, name: &str) -> Signature {
        Signature {
            symbols: self.symbols.iter().filter(|s| s.name != name).cloned().collect(),
        }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.symbols.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}/{}", s.name, s.arity)?;
        }
        Ok(())
    }
}

/// Parses `"R/2 Q/1"` (whitespace or comma separated).
impl FromStr for Signature {
    type Err = StructureError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut symbols = Vec::new();
        for tok in s.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
            let (name, arity) = tok
                .split_once('/')
                .ok_or_else(|| StructureError::BadSignatureToken(tok.to_string()))?;
            let arity: usize = arity
                .parse()
                .map_err(|_| StructureError::BadSignatureToken(tok.to_string()))?;
            symbols.push((name.to_string(), arity));
        }
        Signature::new(symbols)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let sig: Signature = "R/2 Q/1".parse().unwrap();
        assert_eq!(sig.len(), 2);
        assert_eq!(sig.arity("R"), Some(2));
        assert_eq!(sig.index_of("Q"), Some(1));
        assert_eq!(sig.to_string(), "R/2 Q/1");
        assert_eq!(sig.without("R").to_string(), "Q/1");
    }

    #[test]
    fn rejects_bad_symbols() {
        assert!(matches!(Signature::new([("R", 0)]), Err(StructureError::ZeroArity(_))));
        assert!(matches!(
            Signature::new([("R", 2), ("R", 3)]),
            Err(StructureError::DuplicateSymbol(_))
        ));
        assert!(matches!(
            Signature::new([("A B", 2)]),
            Err(StructureError::InvalidSymbolName(_))
        ));
        assert!(matches!(Signature::new([("", 2)]), Err(StructureError::InvalidSymbolName(_))));
        assert!("R2".parse::<Signature>().is_err());
        assert!("R/x".parse::<Signature>().is_err());
    }
}
