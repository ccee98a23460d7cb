//! Line-based structure files.
//!
//! ```text
//! signature R/3 Q/1
//! universe 3
//! rel R: (0,1,1) (1,0,0)
//! ```
//!
//! `#` starts a comment. Relations that are not listed are empty. Output is
//! canonical: symbols in signature order, tuples sorted, empty relations omitted.

use std::fmt;
use std::str::FromStr;

use super::{Signature, Structure, StructureError, Tuple};

impl fmt::Display for Structure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sig = self.signature();
        if sig.is_empty() {
            writeln!(f, "signature")?;
        } else {
            writeln!(f, "signature {sig}")?;
        }
        writeln!(f, "universe {}", self.size())?;
        for (i, sym) in sig.symbols().iter().enumerate() {
            let rel = self.relation_at(i);
            if rel.is_empty() {
                continue;
            }
            write!(f, "rel {}:", sym.name)?;
            for t in rel {
                f.write_str(" (")?;
                for (j, a) in t.iter().enumerate() {
                    if j > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> StructureError {
    StructureError::Parse { line, message: message.into() }
}

fn parse_tuples(body: &str, line: usize) -> Result<Vec<Tuple>, StructureError> {
    let mut out = Vec::new();
    let mut rest = body.trim_start();
    while !rest.is_empty() {
        let inner = rest
            .strip_prefix('(')
            .ok_or_else(|| parse_err(line, format!("expected '(' at `{rest}`")))?;
        let close = inner.find(')').ok_or_else(|| parse_err(line, "unclosed tuple"))?;
        let tuple = inner[..close]
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<usize>()
                    .map_err(|_| parse_err(line, format!("bad element id `{}`", x.trim())))
            })
            .collect::<Result<Tuple, _>>()?;
        out.push(tuple);
        rest = inner[close + 1..].trim_start();
    }
    Ok(out)
}

impl FromStr for Structure {
    type Err = StructureError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut signature: Option<Signature> = None;
        let mut universe: Option<usize> = None;
        let mut relations: Vec<(String, Vec<Tuple>)> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let lineno = i + 1;
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let (head, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            match head {
                "signature" => {
                    if signature.is_some() {
                        return Err(parse_err(lineno, "duplicate signature line"));
                    }
                    signature = Some(rest.parse().map_err(|e: StructureError| parse_err(lineno, e.to_string()))?);
                }
                "universe" => {
                    if signature.is_none() {
                        return Err(parse_err(lineno, "universe before signature"));
                    }
                    if universe.is_some() {
                        return Err(parse_err(lineno, "duplicate universe line"));
                    }
                    universe = Some(
                        rest.trim()
                            .parse()
                            .map_err(|_| parse_err(lineno, format!("bad universe size `{}`", rest.trim())))?,
                    );
                }
                _ if head.starts_with("rel") => {
                    if universe.is_none() {
                        return Err(parse_err(lineno, "relation before universe"));
                    }
                    let body = line["rel".len()..].trim_start();
                    let (name, tuples) =
                        body.split_once(':').ok_or_else(|| parse_err(lineno, "expected `rel NAME: ...`"))?;
                    relations.push((name.trim().to_string(), parse_tuples(tuples, lineno)?));
                }
                _ => return Err(parse_err(lineno, format!("unknown directive `{head}`"))),
            }
        }
        let signature = signature.ok_or_else(|| parse_err(0, "missing signature line"))?;
        let universe = universe.ok_or_else(|| parse_err(0, "missing universe line"))?;
        Structure::new(signature, universe, relations)
    }
}
