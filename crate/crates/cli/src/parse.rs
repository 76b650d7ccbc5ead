//! Text format for cycle systems.
//!
//! ```text
//! (a; b+2a, b)            # inline form
//! boundary: a             # key-value form
//! cycles: b+2a, b
//! ```
//!
//! A curve is `0`, a sum of terms `[int](a|b)`, or a raw pair `(p, q)`.
//! Whitespace is insignificant and `#` starts a comment.

use std::fmt;

use blf_core::{Curve, CycleSystem};
use num_bigint::BigInt;
use num_traits::Zero;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("{pos}: expected {}, found {found}", expected.join(" or "))]
    Syntax {
        pos: Pos,
        expected: Vec<&'static str>,
        found: String,
    },
    #[error("{pos}: ({p}, {q}) is not primitive, so it is not a simple closed curve")]
    NonPrimitive { pos: Pos, p: BigInt, q: BigInt },
    #[error("{pos}: the boundary curve must be essential")]
    TrivialBoundary { pos: Pos },
}

impl ParseError {
    pub fn pos(&self) -> Pos {
        match self {
            ParseError::Syntax { pos, .. }
            | ParseError::NonPrimitive { pos, .. }
            | ParseError::TrivialBoundary { pos } => *pos,
        }
    }

    /// True for malformed text, false for well-formed text naming an
    /// invalid curve or system.
    pub fn is_syntax(&self) -> bool {
        matches!(self, ParseError::Syntax { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Open,
    Close,
    Semi,
    Comma,
    Colon,
    Plus,
    Minus,
    Int(BigInt),
    Word(String),
    Other(char),
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Open => f.write_str("'('"),
            Tok::Close => f.write_str("')'"),
            Tok::Semi => f.write_str("';'"),
            Tok::Comma => f.write_str("','"),
            Tok::Colon => f.write_str("':'"),
            Tok::Plus => f.write_str("'+'"),
            Tok::Minus => f.write_str("'-'"),
            Tok::Int(n) => write!(f, "integer {n}"),
            Tok::Word(w) => write!(f, "'{w}'"),
            Tok::Other(c) => write!(f, "{c:?}"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

fn lex(text: &str) -> Vec<(Tok, Pos)> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let mut pos = Pos { line: 1, column: 1 };
    let advance = |c: char, pos: &mut Pos| {
        if c == '\n' {
            pos.line += 1;
            pos.column = 1;
        } else {
            pos.column += 1;
        }
    };
    while let Some(&c) = chars.peek() {
        let start = pos;
        if c == '#' {
            while let Some(&c) = chars.peek() {
                if c == '\n' {
                    break;
                }
                chars.next();
                advance(c, &mut pos);
            }
            continue;
        }
        if c.is_whitespace() {
            chars.next();
            advance(c, &mut pos);
            continue;
        }
        if c.is_ascii_digit() || c.is_ascii_alphabetic() {
            let digits = c.is_ascii_digit();
            let mut s = String::new();
            while let Some(&d) = chars.peek() {
                let same = if digits {
                    d.is_ascii_digit()
                } else {
                    d.is_ascii_alphabetic() || d == '_'
                };
                if !same {
                    break;
                }
                s.push(d);
                chars.next();
                advance(d, &mut pos);
            }
            let tok = if digits {
                Tok::Int(s.parse().expect("decimal digits"))
            } else {
                Tok::Word(s)
            };
            out.push((tok, start));
            continue;
        }
        chars.next();
        advance(c, &mut pos);
        let tok = match c {
            '(' => Tok::Open,
            ')' => Tok::Close,
            ';' => Tok::Semi,
            ',' => Tok::Comma,
            ':' => Tok::Colon,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            _ => Tok::Other(c),
        };
        out.push((tok, start));
    }
    out.push((Tok::End, pos));
    out
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
}

type PResult<T> = Result<T, ParseError>;

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if t != Tok::End {
            self.at += 1;
        }
        t
    }

    fn fail<T>(&self, expected: &[&'static str]) -> PResult<T> {
        Err(ParseError::Syntax {
            pos: self.pos(),
            expected: expected.to_vec(),
            found: self.peek().to_string(),
        })
    }

    fn expect(&mut self, tok: Tok, name: &'static str) -> PResult<()> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            self.fail(&[name])
        }
    }

    fn is_word(&self, w: &str) -> bool {
        matches!(self.peek(), Tok::Word(x) if x == w)
    }

    fn document(&mut self) -> PResult<(CycleSystem, Vec<Pos>)> {
        let (boundary, cycles) = match self.peek() {
            Tok::Open => {
                self.bump();
                let boundary = self.curve()?;
                self.expect(Tok::Semi, "';'")?;
                let cycles = if *self.peek() == Tok::Close {
                    Vec::new()
                } else {
                    self.curve_list()?
                };
                self.expect(Tok::Close, "')'")?;
                (boundary, cycles)
            }
            Tok::Word(w) if w == "boundary" => {
                self.bump();
                self.expect(Tok::Colon, "':'")?;
                let boundary = self.curve()?;
                if !self.is_word("cycles") {
                    return self.fail(&["'cycles:'"]);
                }
                self.bump();
                self.expect(Tok::Colon, "':'")?;
                let cycles = if *self.peek() == Tok::End {
                    Vec::new()
                } else {
                    self.curve_list()?
                };
                (boundary, cycles)
            }
            _ => return self.fail(&["'('", "'boundary:'"]),
        };
        if *self.peek() != Tok::End {
            return self.fail(&["end of input"]);
        }
        let (bpos, boundary) = boundary;
        if boundary.is_trivial() {
            return Err(ParseError::TrivialBoundary { pos: bpos });
        }
        let mut positions = vec![bpos];
        positions.extend(cycles.iter().map(|(p, _)| *p));
        let cycles = cycles.into_iter().map(|(_, c)| c).collect();
        let system = CycleSystem::new(boundary, cycles).expect("boundary checked");
        Ok((system, positions))
    }

    fn curve_list(&mut self) -> PResult<Vec<(Pos, Curve)>> {
        let mut out = vec![self.curve()?];
        while *self.peek() == Tok::Comma {
            self.bump();
            out.push(self.curve()?);
        }
        Ok(out)
    }

    fn signed_int(&mut self) -> PResult<BigInt> {
        let neg = match self.peek() {
            Tok::Minus => {
                self.bump();
                true
            }
            Tok::Plus => {
                self.bump();
                false
            }
            _ => false,
        };
        match self.bump() {
            Tok::Int(n) => Ok(if neg { -n } else { n }),
            _ => {
                self.at -= 1;
                self.fail(&["integer"])
            }
        }
    }

    fn curve(&mut self) -> PResult<(Pos, Curve)> {
        let start = self.pos();
        let (p, q) = if *self.peek() == Tok::Open {
            self.bump();
            let p = self.signed_int()?;
            self.expect(Tok::Comma, "','")?;
            let q = self.signed_int()?;
            self.expect(Tok::Close, "')'")?;
            (p, q)
        } else {
            self.sum()?
        };
        let curve = Curve::new(p.clone(), q.clone())
            .map_err(|_| ParseError::NonPrimitive { pos: start, p, q })?;
        Ok((start, curve))
    }

    fn sum(&mut self) -> PResult<(BigInt, BigInt)> {
        let (mut p, mut q) = (BigInt::zero(), BigInt::zero());
        let mut first = true;
        loop {
            let sign = match self.peek() {
                Tok::Plus => {
                    self.bump();
                    1
                }
                Tok::Minus => {
                    self.bump();
                    -1
                }
                _ if first => 1,
                _ => break,
            };
            let coeff = match self.peek() {
                Tok::Int(n) => {
                    let n = n.clone();
                    self.bump();
                    Some(n)
                }
                _ => None,
            };
            let var = if self.is_word("a") {
                Some(false)
            } else if self.is_word("b") {
                Some(true)
            } else {
                None
            };
            match (var, coeff) {
                (Some(is_b), coeff) => {
                    self.bump();
                    let c = coeff.unwrap_or_else(|| BigInt::from(1)) * sign;
                    if is_b {
                        q += c;
                    } else {
                        p += c;
                    }
                }
                // a lone 0 is the null-homotopic curve
                (None, Some(n)) if first && sign == 1 && n.is_zero() => return Ok((p, q)),
                (None, Some(_)) => return self.fail(&["'a'", "'b'"]),
                (None, None) if first && sign == 1 => {
                    return self.fail(&["'0'", "'a'", "'b'", "integer", "'('"])
                }
                (None, None) => return self.fail(&["integer", "'a'", "'b'"]),
            }
            first = false;
        }
        Ok((p, q))
    }
}

/// Parsed text with the position of the boundary curve followed by those
/// of the cycles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SystemDocument {
    pub source: String,
    pub system: CycleSystem,
    pub positions: Vec<Pos>,
}

pub fn parse_document(text: &str) -> Result<SystemDocument, ParseError> {
    let mut parser = Parser {
        toks: lex(text),
        at: 0,
    };
    let (system, positions) = parser.document()?;
    Ok(SystemDocument {
        source: text.to_string(),
        system,
        positions,
    })
}

pub fn parse(text: &str) -> Result<CycleSystem, ParseError> {
    parse_document(text).map(|d| d.system)
}

/// Canonical inline text: `b+ka` for curves crossing `a` once, raw pairs
/// otherwise.
pub fn serialize(s: &CycleSystem) -> String {
    s.to_string()
}
