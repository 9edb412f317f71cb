//! A small expression language for the graph families used in the catalog.
//!
//! ```text
//! expr  := call | atom [ "(" slot { "," slot } ")" ]
//! call  := "complement" "(" expr ")"
//!        | ("union" | "join" | "sum") "(" expr "," expr ")"
//!        | "minus_matching" "(" expr "," (int | "perfect") ")"
//! atom  := "K" int | "K" "{" int "," int "}" | "P" int | "C" int | "W" int | "F" int
//! slot  := "0" | [int] "P" int
//! ```
//!
//! Whitespace between tokens is ignored; family letters are case-sensitive.
//! `sum` is an alias of `join`. `C4(P2,2P3,P4,P3)` hangs one P2 on vertex 0,
//! two P3 on vertex 1 and so on; the slot count must equal the atom's order.

use std::fmt;

use thiserror::Error;

use crate::graph::{self, Graph, GraphError, Matching, PendantPaths};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Atom {
    Complete(usize),
    CompleteBipartite(usize, usize),
    Path(usize),
    Cycle(usize),
    Wheel(usize),
    Friendship(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatchingSize {
    Edges(usize),
    Perfect,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Slot {
    Empty,
    /// `count` copies of `P_length`; `count >= 1`.
    Paths {
        count: usize,
        length: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyExpr {
    Atom(Atom),
    Attach(Atom, Vec<Slot>),
    Complement(Box<FamilyExpr>),
    Union(Box<FamilyExpr>, Box<FamilyExpr>),
    Join(Box<FamilyExpr>, Box<FamilyExpr>),
    MinusMatching(Box<FamilyExpr>, MatchingSize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("{func} takes {expected} argument(s), got {got} (byte {offset})")]
    Arity {
        func: String,
        expected: usize,
        got: usize,
        offset: usize,
    },
    #[error("{atom} has {expected} vertices but {got} slots were given")]
    SlotCount {
        atom: String,
        expected: usize,
        got: usize,
    },
    #[error("no perfect matching: {0} vertices")]
    NoPerfectMatching(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub fn parse_family(text: &str) -> Result<FamilyExpr, FamilyError> {
    let tokens = lex(text)?;
    let mut p = Parser {
        tokens,
        pos: 0,
        end: text.len(),
    };
    let e = p.expr()?;
    if let Some(t) = p.peek() {
        return Err(p.syntax(t.offset, format!("unexpected trailing {}", t.kind)));
    }
    Ok(e)
}

/// Parses and evaluates in one step.
pub fn build_family(text: &str) -> Result<Graph, FamilyError> {
    parse_family(text)?.eval()
}

impl Atom {
    pub fn order(&self) -> usize {
        match *self {
            Atom::Complete(n) | Atom::Path(n) | Atom::Cycle(n) | Atom::Wheel(n) => n,
            Atom::CompleteBipartite(m, n) => m + n,
            Atom::Friendship(n) => 2 * n + 1,
        }
    }

    pub fn build(&self) -> Result<Graph, GraphError> {
        match *self {
            Atom::Complete(n) => graph::complete(n),
            Atom::CompleteBipartite(m, n) => graph::complete_bipartite(m, n),
            Atom::Path(n) => graph::path(n),
            Atom::Cycle(n) => graph::cycle(n),
            Atom::Wheel(n) => graph::wheel(n),
            Atom::Friendship(n) => graph::friendship(n),
        }
    }
}

impl FamilyExpr {
    pub fn eval(&self) -> Result<Graph, FamilyError> {
        Ok(match self {
            FamilyExpr::Atom(a) => a.build()?,
            FamilyExpr::Attach(a, slots) => {
                let base = a.build()?;
                if slots.len() != base.n() {
                    return Err(FamilyError::SlotCount {
                        atom: a.to_string(),
                        expected: base.n(),
                        got: slots.len(),
                    });
                }
                let attachments: Vec<PendantPaths> = slots
                    .iter()
                    .enumerate()
                    .filter_map(|(vertex, s)| match *s {
                        Slot::Empty => None,
                        Slot::Paths { count, length } => Some(PendantPaths {
                            vertex,
                            multiplicity: count,
                            path_length: length,
                        }),
                    })
                    .collect();
                graph::attach_pendant_paths(&base, &attachments)?
            }
            FamilyExpr::Complement(e) => graph::complement(&e.eval()?),
            FamilyExpr::Union(a, b) => graph::disjoint_union(&a.eval()?, &b.eval()?)?,
            FamilyExpr::Join(a, b) => graph::join(&a.eval()?, &b.eval()?)?,
            FamilyExpr::MinusMatching(e, size) => {
                let g = e.eval()?;
                let edges = match *size {
                    MatchingSize::Edges(k) => k,
                    MatchingSize::Perfect if g.n() % 2 == 0 => g.n() / 2,
                    MatchingSize::Perfect => return Err(FamilyError::NoPerfectMatching(g.n())),
                };
                graph::remove_matching(&g, &Matching::first_of_size(edges)?)?
            }
        })
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Complete(n) => write!(f, "K{n}"),
            Atom::CompleteBipartite(m, n) => write!(f, "K{{{m},{n}}}"),
            Atom::Path(n) => write!(f, "P{n}"),
            Atom::Cycle(n) => write!(f, "C{n}"),
            Atom::Wheel(n) => write!(f, "W{n}"),
            Atom::Friendship(n) => write!(f, "F{n}"),
        }
    }
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slot::Empty => write!(f, "0"),
            Slot::Paths { count: 1, length } => write!(f, "P{length}"),
            Slot::Paths { count, length } => write!(f, "{count}P{length}"),
        }
    }
}

impl fmt::Display for FamilyExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyExpr::Atom(a) => write!(f, "{a}"),
            FamilyExpr::Attach(a, slots) => {
                write!(f, "{a}(")?;
                for (i, s) in slots.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{s}")?;
                }
                write!(f, ")")
            }
            FamilyExpr::Complement(e) => write!(f, "complement({e})"),
            FamilyExpr::Union(a, b) => write!(f, "union({a},{b})"),
            FamilyExpr::Join(a, b) => write!(f, "join({a},{b})"),
            FamilyExpr::MinusMatching(e, MatchingSize::Perfect) => {
                write!(f, "minus_matching({e},perfect)")
            }
            FamilyExpr::MinusMatching(e, MatchingSize::Edges(k)) => {
                write!(f, "minus_matching({e},{k})")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Kind {
    Ident(String),
    Int(usize),
    LParen,
    RParen,
    LBrace,
    RBrace,
    Comma,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kind::Ident(s) => write!(f, "identifier {s:?}"),
            Kind::Int(n) => write!(f, "integer {n}"),
            Kind::LParen => write!(f, "'('"),
            Kind::RParen => write!(f, "')'"),
            Kind::LBrace => write!(f, "'{{'"),
            Kind::RBrace => write!(f, "'}}'"),
            Kind::Comma => write!(f, "','"),
        }
    }
}

#[derive(Debug, Clone)]
struct Token {
    kind: Kind,
    offset: usize,
}

fn lex(text: &str) -> Result<Vec<Token>, FamilyError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let kind = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'(' => Kind::LParen,
            b')' => Kind::RParen,
            b'{' => Kind::LBrace,
            b'}' => Kind::RBrace,
            b',' => Kind::Comma,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n = text[start..i].parse().map_err(|_| FamilyError::Syntax {
                    offset: start,
                    message: "integer too large".into(),
                })?;
                out.push(Token {
                    kind: Kind::Int(n),
                    offset: start,
                });
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphabetic() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push(Token {
                    kind: Kind::Ident(text[start..i].to_string()),
                    offset: start,
                });
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().unwrap_or('?');
                return Err(FamilyError::Syntax {
                    offset: start,
                    message: format!("unexpected character {ch:?}"),
                });
            }
        };
        out.push(Token {
            kind,
            offset: start,
        });
        i += 1;
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn offset(&self) -> usize {
        self.peek().map_or(self.end, |t| t.offset)
    }

    fn syntax(&self, offset: usize, message: String) -> FamilyError {
        FamilyError::Syntax { offset, message }
    }

    fn next(&mut self, what: &str) -> Result<Token, FamilyError> {
        let t = self.tokens.get(self.pos).cloned().ok_or_else(|| {
            self.syntax(
                self.end,
                format!("unexpected end of input, expected {what}"),
            )
        })?;
        self.pos += 1;
        Ok(t)
    }

    fn expect(&mut self, kind: Kind) -> Result<(), FamilyError> {
        let t = self.next(&kind.to_string())?;
        if t.kind == kind {
            Ok(())
        } else {
            Err(self.syntax(t.offset, format!("expected {kind}, found {}", t.kind)))
        }
    }

    fn int(&mut self) -> Result<usize, FamilyError> {
        let t = self.next("an integer")?;
        match t.kind {
            Kind::Int(n) => Ok(n),
            k => Err(self.syntax(t.offset, format!("expected an integer, found {k}"))),
        }
    }

    fn eat(&mut self, kind: &Kind) -> bool {
        if self.peek().is_some_and(|t| &t.kind == kind) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<FamilyExpr, FamilyError> {
        let t = self.next("an expression")?;
        let name = match &t.kind {
            Kind::Ident(s) => s.clone(),
            k => {
                return Err(self.syntax(
                    t.offset,
                    format!("expected a family or function, found {k}"),
                ))
            }
        };
        match name.as_str() {
            "complement" | "union" | "join" | "sum" => {
                let args = self.expr_args(&name, t.offset)?;
                let want = if name == "complement" { 1 } else { 2 };
                if args.len() != want {
                    return Err(FamilyError::Arity {
                        func: name,
                        expected: want,
                        got: args.len(),
                        offset: t.offset,
                    });
                }
                let mut args = args.into_iter().map(Box::new);
                let a = args.next().expect("arity checked");
                Ok(match name.as_str() {
                    "complement" => FamilyExpr::Complement(a),
                    "union" => FamilyExpr::Union(a, args.next().expect("arity checked")),
                    _ => FamilyExpr::Join(a, args.next().expect("arity checked")),
                })
            }
            "minus_matching" => {
                self.expect(Kind::LParen)?;
                let e = self.expr()?;
                if !self.eat(&Kind::Comma) {
                    return Err(FamilyError::Arity {
                        func: name,
                        expected: 2,
                        got: 1,
                        offset: t.offset,
                    });
                }
                let arg = self.next("a matching size or 'perfect'")?;
                let size = match arg.kind {
                    Kind::Int(k) => MatchingSize::Edges(k),
                    Kind::Ident(ref s) if s == "perfect" => MatchingSize::Perfect,
                    k => {
                        return Err(self.syntax(
                            arg.offset,
                            format!("expected a matching size or 'perfect', found {k}"),
                        ))
                    }
                };
                if self.peek().is_some_and(|t| t.kind == Kind::Comma) {
                    return Err(FamilyError::Arity {
                        func: name,
                        expected: 2,
                        got: 3,
                        offset: t.offset,
                    });
                }
                self.expect(Kind::RParen)?;
                Ok(FamilyExpr::MinusMatching(Box::new(e), size))
            }
            _ => {
                let atom = self.atom(&name, t.offset)?;
                if self.eat(&Kind::LParen) {
                    let mut slots = vec![self.slot()?];
                    while self.eat(&Kind::Comma) {
                        slots.push(self.slot()?);
                    }
                    self.expect(Kind::RParen)?;
                    Ok(FamilyExpr::Attach(atom, slots))
                } else {
                    Ok(FamilyExpr::Atom(atom))
                }
            }
        }
    }

    fn expr_args(&mut self, func: &str, offset: usize) -> Result<Vec<FamilyExpr>, FamilyError> {
        if !self.eat(&Kind::LParen) {
            return Err(self.syntax(
                self.offset(),
                format!("expected '(' after {func} at byte {offset}"),
            ));
        }
        let mut args = vec![self.expr()?];
        while self.eat(&Kind::Comma) {
            args.push(self.expr()?);
        }
        self.expect(Kind::RParen)?;
        Ok(args)
    }

    fn atom(&mut self, name: &str, offset: usize) -> Result<Atom, FamilyError> {
        Ok(match name {
            "K" if self.eat(&Kind::LBrace) => {
                let m = self.int()?;
                self.expect(Kind::Comma)?;
                let n = self.int()?;
                self.expect(Kind::RBrace)?;
                Atom::CompleteBipartite(m, n)
            }
            "K" => Atom::Complete(self.int()?),
            "P" => Atom::Path(self.int()?),
            "C" => Atom::Cycle(self.int()?),
            "W" => Atom::Wheel(self.int()?),
            "F" => Atom::Friendship(self.int()?),
            other => {
                return Err(self.syntax(offset, format!("unknown family or function {other:?}")))
            }
        })
    }

    fn slot(&mut self) -> Result<Slot, FamilyError> {
        let t = self.next("a slot")?;
        match t.kind {
            Kind::Int(count) => {
                if self
                    .peek()
                    .is_some_and(|t| t.kind == Kind::Ident("P".into()))
                {
                    self.pos += 1;
                    let length = self.int()?;
                    Ok(if count == 0 {
                        Slot::Empty
                    } else {
                        Slot::Paths { count, length }
                    })
                } else if count == 0 {
                    Ok(Slot::Empty)
                } else {
                    Err(self.syntax(
                        self.offset(),
                        format!("expected 'P' after slot count {count}"),
                    ))
                }
            }
            Kind::Ident(ref s) if s == "P" => Ok(Slot::Paths {
                count: 1,
                length: self.int()?,
            }),
            k => Err(self.syntax(
                t.offset,
                format!("expected a slot (\"0\" or \"[m]Pl\"), found {k}"),
            )),
        }
    }
}
