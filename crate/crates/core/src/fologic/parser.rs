//! Recursive-descent parser for the ASCII formula syntax.
//!
//! Precedence, tightest first: `!` and quantifiers, `&`, `|`, `->` (right
//! associative), `<->`. A quantifier scopes over a single unary formula, so
//! binary bodies need parentheses: `forall x (R(x,x) -> S(x))`.

use super::formula::{self, Formula};
use super::LogicError;
use crate::structures::Signature;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Var(String),
    Sym(String),
    Forall,
    Exists,
    LParen,
    RParen,
    Comma,
    Eq,
    Bang,
    Amp,
    Pipe,
    Arrow,
    DArrow,
    End,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Var(v) => format!("variable `{v}`"),
        Tok::Sym(s) => format!("symbol `{s}`"),
        Tok::Forall => "`forall`".into(),
        Tok::Exists => "`exists`".into(),
        Tok::LParen => "`(`".into(),
        Tok::RParen => "`)`".into(),
        Tok::Comma => "`,`".into(),
        Tok::Eq => "`=`".into(),
        Tok::Bang => "`!`".into(),
        Tok::Amp => "`&`".into(),
        Tok::Pipe => "`|`".into(),
        Tok::Arrow => "`->`".into(),
        Tok::DArrow => "`<->`".into(),
        Tok::End => "end of input".into(),
    }
}

fn syntax(pos: usize, message: impl Into<String>) -> LogicError {
    LogicError::Syntax { pos, message: message.into() }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, LogicError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b',' => Tok::Comma,
            b'=' => Tok::Eq,
            b'!' => Tok::Bang,
            b'&' => Tok::Amp,
            b'|' => Tok::Pipe,
            b'-' if bytes.get(i + 1) == Some(&b'>') => {
                i += 1;
                Tok::Arrow
            }
            b'<' if bytes.get(i + 1) == Some(&b'-') && bytes.get(i + 2) == Some(&b'>') => {
                i += 2;
                Tok::DArrow
            }
            b'a'..=b'z' | b'A'..=b'Z' => {
                while i + 1 < bytes.len() && (bytes[i + 1].is_ascii_alphanumeric() || bytes[i + 1] == b'_') {
                    i += 1;
                }
                let word = &text[start..=i];
                if c.is_ascii_uppercase() {
                    Tok::Sym(word.to_string())
                } else if word.bytes().any(|b| b.is_ascii_uppercase()) {
                    return Err(syntax(start, format!("variable `{word}` contains uppercase letters")));
                } else {
                    match word {
                        "forall" => Tok::Forall,
                        "exists" => Tok::Exists,
                        _ => Tok::Var(word.to_string()),
                    }
                }
            }
            _ => {
                let ch = text[i..].chars().next().unwrap();
                return Err(syntax(start, format!("unexpected character `{ch}`")));
            }
        };
        out.push((tok, start));
        i += 1;
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    at: usize,
    sig: &'a Signature,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if t != Tok::End {
            self.at += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok) -> Result<(), LogicError> {
        if *self.peek() == want {
            self.bump();
            Ok(())
        } else {
            Err(syntax(self.pos(), format!("expected {}, found {}", describe(&want), describe(self.peek()))))
        }
    }

    fn var(&mut self) -> Result<String, LogicError> {
        match self.peek().clone() {
            Tok::Var(v) => {
                self.bump();
                Ok(v)
            }
            other => Err(syntax(self.pos(), format!("expected variable, found {}", describe(&other)))),
        }
    }

    fn iff(&mut self) -> Result<Formula, LogicError> {
        let mut lhs = self.implication()?;
        while *self.peek() == Tok::DArrow {
            self.bump();
            lhs = formula::iff(lhs, self.implication()?);
        }
        Ok(lhs)
    }

    fn implication(&mut self) -> Result<Formula, LogicError> {
        let lhs = self.disjunction()?;
        if *self.peek() == Tok::Arrow {
            self.bump();
            return Ok(formula::implies(lhs, self.implication()?));
        }
        Ok(lhs)
    }

    fn disjunction(&mut self) -> Result<Formula, LogicError> {
        let mut lhs = self.conjunction()?;
        while *self.peek() == Tok::Pipe {
            self.bump();
            lhs = formula::or(lhs, self.conjunction()?);
        }
        Ok(lhs)
    }

    fn conjunction(&mut self) -> Result<Formula, LogicError> {
        let mut lhs = self.unary()?;
        while *self.peek() == Tok::Amp {
            self.bump();
            lhs = formula::and(lhs, self.unary()?);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula, LogicError> {
        match self.peek() {
            Tok::Bang => {
                self.bump();
                Ok(formula::not(self.unary()?))
            }
            Tok::Forall | Tok::Exists => {
                let universal = self.bump() == Tok::Forall;
                let x = self.var()?;
                let body = self.unary()?;
                Ok(if universal { formula::forall(&x, body) } else { formula::exists(&x, body) })
            }
            _ => self.primary(),
        }
    }

    fn primary(&mut self) -> Result<Formula, LogicError> {
        let pos = self.pos();
        match self.bump() {
            Tok::LParen => {
                let f = self.iff()?;
                self.expect(Tok::RParen)?;
                Ok(f)
            }
            Tok::Sym(s) if s == "P" && *self.peek() != Tok::LParen => Ok(Formula::P),
            Tok::Sym(s) => {
                self.expect(Tok::LParen)?;
                let mut args = vec![self.var()?];
                while *self.peek() == Tok::Comma {
                    self.bump();
                    args.push(self.var()?);
                }
                self.expect(Tok::RParen)?;
                let expected = self.sig.arity(&s).ok_or_else(|| LogicError::UnknownSymbol(s.clone()))?;
                if expected != args.len() {
                    return Err(LogicError::Arity { symbol: s, expected, found: args.len() });
                }
                Ok(Formula::Atom { symbol: s, args })
            }
            Tok::Var(x) => {
                self.expect(Tok::Eq)?;
                let y = self.var()?;
                Ok(Formula::Equal(x, y))
            }
            other => Err(syntax(pos, format!("expected a formula, found {}", describe(&other)))),
        }
    }
}

/// Parses one formula, checking atoms against `sig`.
pub fn parse(text: &str, sig: &Signature) -> Result<Formula, LogicError> {
    let mut p = Parser { toks: lex(text)?, at: 0, sig };
    let f = p.iff()?;
    if *p.peek() != Tok::End {
        return Err(syntax(p.pos(), format!("unexpected {}", describe(p.peek()))));
    }
    Ok(f)
}

/// One formula per non-blank line; `#` starts a comment.
pub fn parse_theory(text: &str, sig: &Signature) -> Result<Vec<Formula>, LogicError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        out.push(parse(line, sig).map_err(|e| LogicError::Line { line: i + 1, source: Box::new(e) })?);
    }
    Ok(out)
}
