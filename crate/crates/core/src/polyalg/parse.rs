//! Recursive-descent parser for polynomial input.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := ('+' | '-') factor | power
//! power  := atom ('^' integer)?
//! atom   := integer ('/' integer)? | identifier | '(' expr ')'
//! ```
//!
//! `^` binds tighter than `*`, which binds tighter than `+`/`-`. There is no
//! implicit multiplication: `xy` is a single identifier and `2x` is an error.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use super::{Polynomial, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown variable `{name}` at byte {offset}")]
    UnknownVariable { name: String, offset: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("number `{n}`"),
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        let start = i;
        let tok = match b {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = text[start..i].parse().expect("ascii digits");
                out.push((start, Tok::Int(n)));
                continue;
            }
            b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().unwrap_or('?');
                return Err(ParseError::Syntax {
                    offset: start,
                    message: format!("unexpected character `{ch}`"),
                });
            }
        };
        out.push((start, tok));
        i += 1;
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    vars: Arc<[String]>,
    names: &'a [String],
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> (usize, Tok) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax { offset: self.offset(), message: message.into() })
    }

    fn constant(&self, c: Rational) -> Polynomial {
        let mut p = Polynomial::with_shared_vars(self.vars.clone());
        p.add_term(super::ExponentVector::one(self.vars.len()), c);
        p
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        while *self.peek() == Tok::Star {
            self.bump();
            acc = &acc * &self.factor()?;
        }
        match self.peek() {
            Tok::Int(_) | Tok::Ident(_) | Tok::LParen => {
                self.error("implicit multiplication is not allowed; use `*`")
            }
            _ => Ok(acc),
        }
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        match self.peek() {
            Tok::Minus => {
                self.bump();
                Ok(-&self.factor()?)
            }
            Tok::Plus => {
                self.bump();
                self.factor()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let (off, tok) = self.bump();
        let Tok::Int(n) = tok else {
            return Err(ParseError::Syntax {
                offset: off,
                message: format!(
                    "expected a nonnegative integer exponent, found {}",
                    tok.describe()
                ),
            });
        };
        let exp: u32 = n.try_into().map_err(|_| ParseError::Syntax {
            offset: off,
            message: "exponent too large".into(),
        })?;
        if *self.peek() == Tok::Caret {
            return self.error("chained exponents are ambiguous; use parentheses");
        }
        Ok(base.pow(exp))
    }

    fn atom(&mut self) -> Result<Polynomial, ParseError> {
        let (off, tok) = self.bump();
        match tok {
            Tok::Int(num) => {
                if *self.peek() != Tok::Slash {
                    return Ok(self.constant(Rational::from_integer(num)));
                }
                self.bump();
                let (doff, dtok) = self.bump();
                match dtok {
                    Tok::Int(den) if den.is_zero() => Err(ParseError::Syntax {
                        offset: doff,
                        message: "zero denominator".into(),
                    }),
                    Tok::Int(den) => Ok(self.constant(Rational::new(num, den))),
                    other => Err(ParseError::Syntax {
                        offset: doff,
                        message: format!(
                            "`/` only forms rational literals; expected an integer denominator, found {}",
                            other.describe()
                        ),
                    }),
                }
            }
            Tok::Ident(name) => match self.names.iter().position(|v| *v == name) {
                Some(i) => {
                    let mut p = Polynomial::with_shared_vars(self.vars.clone());
                    p.add_term(
                        super::ExponentVector::pure_power(self.vars.len(), i, 1),
                        Rational::one(),
                    );
                    Ok(p)
                }
                None => Err(ParseError::UnknownVariable { name, offset: off }),
            },
            Tok::LParen => {
                let inner = self.expr()?;
                match self.bump() {
                    (_, Tok::RParen) => Ok(inner),
                    (o, t) => Err(ParseError::Syntax {
                        offset: o,
                        message: format!("expected `)`, found {}", t.describe()),
                    }),
                }
            }
            Tok::Slash => Err(ParseError::Syntax {
                offset: off,
                message: "`/` only forms rational literals such as `3/4`".into(),
            }),
            other => Err(ParseError::Syntax {
                offset: off,
                message: format!("expected a number, variable or `(`, found {}", other.describe()),
            }),
        }
    }
}

/// Parses `text` into canonical sparse form over the ordered variable list.
pub fn parse_polynomial(text: &str, variables: &[String]) -> Result<Polynomial, ParseError> {
    let mut parser =
        Parser { toks: tokenize(text)?, pos: 0, vars: variables.into(), names: variables };
    let p = parser.expr()?;
    match parser.peek() {
        Tok::End => Ok(p),
        Tok::Slash => parser.error("`/` only forms rational literals such as `3/4`"),
        t => {
            let msg = format!("unexpected {}", t.describe());
            parser.error(msg)
        }
    }
}
