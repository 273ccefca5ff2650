//! Named graph families and a small constructor-expression language.
//!
//! Expressions look like `cycle(5)`, `complete_bipartite(2,3)`, or
//! `disjoint_union(complete(3), complete(2))`. The infix form
//! `complete(3) + complete(2)` is accepted as sugar for `disjoint_union`.

use crate::graph::{Graph, GraphError, MAX_ORDER};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// A constructor expression describing a graph family member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    /// `complete(n)` = K_n.
    Complete(usize),
    /// `path(n)` = P_n.
    Path(usize),
    /// `cycle(n)` = C_n, n >= 3.
    Cycle(usize),
    /// `star(t)` = K_{1,t}, on t+1 vertices.
    Star(usize),
    /// `complete_bipartite(m, n)` = K_{m,n}.
    CompleteBipartite(usize, usize),
    /// `empty(r)` = r isolated vertices.
    Empty(usize),
    /// `disjoint_union(a, b, ...)`: blocks laid out in order.
    DisjointUnion(Vec<FamilySpec>),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("family size parameter must be at least 1")]
    ZeroSize,
    #[error("cycle requires order at least 3, found {0}")]
    CycleTooShort(usize),
    #[error("family order {0} exceeds the supported maximum {MAX_ORDER}")]
    OrderTooLarge(usize),
    #[error("empty disjoint union")]
    EmptyUnion,
}

impl FamilySpec {
    /// Total number of vertices this expression describes.
    pub fn order(&self) -> usize {
        match self {
            FamilySpec::Complete(n)
            | FamilySpec::Path(n)
            | FamilySpec::Cycle(n)
            | FamilySpec::Empty(n) => *n,
            FamilySpec::Star(t) => t + 1,
            FamilySpec::CompleteBipartite(m, n) => m + n,
            FamilySpec::DisjointUnion(parts) => parts.iter().map(FamilySpec::order).sum(),
        }
    }

    fn validate(&self) -> Result<(), FamilyError> {
        match self {
            FamilySpec::Complete(n)
            | FamilySpec::Path(n)
            | FamilySpec::Star(n)
            | FamilySpec::Empty(n) => {
                if *n == 0 {
                    return Err(FamilyError::ZeroSize);
                }
            }
            FamilySpec::Cycle(n) => {
                if *n == 0 {
                    return Err(FamilyError::ZeroSize);
                }
                if *n < 3 {
                    return Err(FamilyError::CycleTooShort(*n));
                }
            }
            FamilySpec::CompleteBipartite(m, n) => {
                if *m == 0 || *n == 0 {
                    return Err(FamilyError::ZeroSize);
                }
            }
            FamilySpec::DisjointUnion(parts) => {
                if parts.is_empty() {
                    return Err(FamilyError::EmptyUnion);
                }
                for part in parts {
                    part.validate()?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Complete(n) => write!(f, "complete({n})"),
            FamilySpec::Path(n) => write!(f, "path({n})"),
            FamilySpec::Cycle(n) => write!(f, "cycle({n})"),
            FamilySpec::Star(t) => write!(f, "star({t})"),
            FamilySpec::CompleteBipartite(m, n) => write!(f, "complete_bipartite({m},{n})"),
            FamilySpec::Empty(r) => write!(f, "empty({r})"),
            FamilySpec::DisjointUnion(parts) => {
                write!(f, "disjoint_union(")?;
                for (i, part) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{part}")?;
                }
                write!(f, ")")
            }
        }
    }
}

/// Builds the graph a [`FamilySpec`] describes, vertices labeled
/// block-by-block in spec order.
pub fn build_family(spec: &FamilySpec) -> Result<Graph, FamilyError> {
    spec.validate()?;
    let order = spec.order();
    if order > MAX_ORDER {
        return Err(FamilyError::OrderTooLarge(order));
    }
    let mut edges = Vec::new();
    collect_edges(spec, 0, &mut edges);
    match Graph::from_edges(order, &edges) {
        Ok(g) => Ok(g),
        Err(GraphError::OrderTooLarge(n)) => Err(FamilyError::OrderTooLarge(n)),
        Err(e) => unreachable!("family edges are simple by construction: {e}"),
    }
}

/// Appends the edges of `spec` shifted by `base`, returning the block width.
fn collect_edges(spec: &FamilySpec, base: usize, edges: &mut Vec<(usize, usize)>) -> usize {
    match spec {
        FamilySpec::Complete(n) => {
            for v in 0..*n {
                for u in 0..v {
                    edges.push((base + u, base + v));
                }
            }
            *n
        }
        FamilySpec::Path(n) => {
            for v in 1..*n {
                edges.push((base + v - 1, base + v));
            }
            *n
        }
        FamilySpec::Cycle(n) => {
            for v in 1..*n {
                edges.push((base + v - 1, base + v));
            }
            edges.push((base + n - 1, base));
            *n
        }
        FamilySpec::Star(t) => {
            // Center first, then the t leaves.
            for leaf in 1..=*t {
                edges.push((base, base + leaf));
            }
            t + 1
        }
        FamilySpec::CompleteBipartite(m, n) => {
            for a in 0..*m {
                for b in 0..*n {
                    edges.push((base + a, base + m + b));
                }
            }
            m + n
        }
        FamilySpec::Empty(r) => *r,
        FamilySpec::DisjointUnion(parts) => {
            let mut offset = base;
            for part in parts {
                offset += collect_edges(part, offset, edges);
            }
            offset - base
        }
    }
}

// ---------------------------------------------------------------------------
// Expression parsing
// ---------------------------------------------------------------------------

#[derive(Debug, Error, PartialEq, Eq)]
#[error("family expression error at byte {position}: {message}")]
pub struct FamilyParseError {
    pub position: usize,
    pub message: String,
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser { text, pos: 0 }
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, FamilyParseError> {
        Err(FamilyParseError {
            position: self.pos,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.text[self.pos..].starts_with(|c: char| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text[self.pos..].chars().next()
    }

    fn eat(&mut self, expected: char) -> Result<(), FamilyParseError> {
        match self.peek() {
            Some(c) if c == expected => {
                self.pos += c.len_utf8();
                Ok(())
            }
            Some(c) => self.error(format!("expected '{expected}', found '{c}'")),
            None => self.error(format!("expected '{expected}', found end of input")),
        }
    }

    fn ident(&mut self) -> Result<&'a str, FamilyParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.text[self.pos..]
            .starts_with(|c: char| c.is_ascii_alphanumeric() || c == '_')
        {
            self.pos += 1;
        }
        if self.pos == start {
            return self.error("expected a family name");
        }
        Ok(&self.text[start..self.pos])
    }

    fn number(&mut self) -> Result<usize, FamilyParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.text[self.pos..].starts_with(|c: char| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return self.error("expected a size parameter");
        }
        match self.text[start..self.pos].parse() {
            Ok(value) => Ok(value),
            Err(_) => self.error("size parameter out of range"),
        }
    }

    /// expr := term ('+' term)*
    fn expr(&mut self) -> Result<FamilySpec, FamilyParseError> {
        let first = self.term()?;
        let mut parts = vec![first];
        while self.peek() == Some('+') {
            self.eat('+')?;
            parts.push(self.term()?);
        }
        if parts.len() == 1 {
            Ok(parts.pop().expect("one element"))
        } else {
            Ok(FamilySpec::DisjointUnion(parts))
        }
    }

    /// term := name '(' args ')'
    fn term(&mut self) -> Result<FamilySpec, FamilyParseError> {
        let name = self.ident()?;
        self.eat('(')?;
        let spec = match name {
            "complete" => FamilySpec::Complete(self.number()?),
            "path" => FamilySpec::Path(self.number()?),
            "cycle" => FamilySpec::Cycle(self.number()?),
            "star" => FamilySpec::Star(self.number()?),
            "empty" => FamilySpec::Empty(self.number()?),
            "complete_bipartite" => {
                let m = self.number()?;
                self.eat(',')?;
                let n = self.number()?;
                FamilySpec::CompleteBipartite(m, n)
            }
            "disjoint_union" => {
                let mut parts = vec![self.expr()?];
                while self.peek() == Some(',') {
                    self.eat(',')?;
                    parts.push(self.expr()?);
                }
                FamilySpec::DisjointUnion(parts)
            }
            other => return self.error(format!("unknown family constructor '{other}'")),
        };
        self.eat(')')?;
        Ok(spec)
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parser = Parser::new(s);
        let spec = parser.expr()?;
        if parser.peek().is_some() {
            return parser.error("trailing input after family expression");
        }
        Ok(spec)
    }
}
