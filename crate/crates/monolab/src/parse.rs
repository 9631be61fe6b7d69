//! Polynomials in `x` and `y` from text.
//!
//! ```text
//! expr   := ['+' | '-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := base ('^' nat)?
//! base   := rational | 'x' | 'y' | '(' expr ')'
//! ```
//!
//! Rationals are written `a` or `a/b`. Multiplication is always explicit.

use monolab_core::algebra::{MPoly, Rat};
use num_traits::Zero;
use thiserror::Error;

/// Largest accepted exponent.
pub const MAX_EXPONENT: u32 = 1000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at offset {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("UnknownVariable at offset {pos}: '{name}' (only x and y are allowed)")]
    UnknownVariable { pos: usize, name: String },
}

impl ParseError {
    /// Zero-based byte offset of the problem.
    pub fn position(&self) -> usize {
        match self {
            ParseError::Syntax { pos, .. } | ParseError::UnknownVariable { pos, .. } => *pos,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Num(String),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut out = Vec::new();
    let mut it = s.char_indices().peekable();
    while let Some(&(i, c)) = it.peek() {
        if c.is_whitespace() {
            it.next();
        } else if c.is_ascii_digit() {
            let mut t = String::new();
            while let Some(&(_, d)) = it.peek().filter(|(_, d)| d.is_ascii_digit()) {
                t.push(d);
                it.next();
            }
            out.push((i, Tok::Num(t)));
        } else if c.is_alphabetic() || c == '_' {
            let mut t = String::new();
            while let Some(&(_, d)) = it.peek().filter(|(_, d)| d.is_alphanumeric() || *d == '_') {
                t.push(d);
                it.next();
            }
            out.push((i, Tok::Ident(t)));
        } else if "+-*/^()".contains(c) {
            out.push((i, Tok::Op(c)));
            it.next();
        } else {
            return Err(ParseError::Syntax {
                pos: i,
                msg: format!("unexpected character '{}'", c),
            });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<MPoly, ParseError> {
        let neg = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let first = self.term()?;
        let mut acc = if neg { -first } else { first };
        loop {
            if self.eat('+') {
                acc = acc + self.term()?;
            } else if self.eat('-') {
                acc = acc - self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<MPoly, ParseError> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<MPoly, ParseError> {
        let b = self.base()?;
        if !self.eat('^') {
            return Ok(b);
        }
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                let e = n.parse::<u32>().ok().filter(|e| *e <= MAX_EXPONENT);
                let Some(e) = e else {
                    return self.err(format!("exponent {} is larger than {}", n, MAX_EXPONENT));
                };
                self.at += 1;
                Ok(b.pow(e))
            }
            _ => self.err("exponent must be a nonnegative integer literal"),
        }
    }

    fn base(&mut self) -> Result<MPoly, ParseError> {
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Num(a)) => {
                self.at += 1;
                let mut r: Rat = Rat::from_integer(a.parse().expect("digits"));
                if self.eat('/') {
                    match self.peek().cloned() {
                        Some(Tok::Num(b)) => {
                            let d: Rat = Rat::from_integer(b.parse().expect("digits"));
                            if d.is_zero() {
                                return self.err("division by zero");
                            }
                            self.at += 1;
                            r /= d;
                        }
                        _ => return self.err("expected a denominator"),
                    }
                }
                Ok(MPoly::constant(2, r))
            }
            Some(Tok::Ident(name)) => {
                self.at += 1;
                match name.as_str() {
                    "x" => Ok(MPoly::var(2, 0)),
                    "y" => Ok(MPoly::var(2, 1)),
                    _ => Err(ParseError::UnknownVariable { pos, name }),
                }
            }
            Some(Tok::Op('(')) => {
                self.at += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected ')'");
                }
                Ok(e)
            }
            Some(t) => self.err(format!("unexpected {}", describe(&t))),
            None => self.err("unexpected end of input"),
        }
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Num(n) => format!("number {}", n),
        Tok::Ident(s) => format!("name {}", s),
        Tok::Op(c) => format!("'{}'", c),
    }
}

pub fn parse_poly(text: &str) -> Result<MPoly, ParseError> {
    let mut p = Parser {
        toks: tokenize(text)?,
        at: 0,
        end: text.len(),
    };
    let f = p.expr()?;
    if let Some(t) = p.peek().cloned() {
        let msg = match t {
            Tok::Op(_) => format!("unexpected {}", describe(&t)),
            _ => format!("unexpected {}; multiplication needs an explicit '*'", describe(&t)),
        };
        return p.err(msg);
    }
    Ok(f)
}

/// Canonical text form, which `parse_poly` reads back to the same value.
pub fn print_poly(f: &MPoly) -> String {
    f.to_string_with(&["x", "y"])
}

/// A rational number `a` or `a/b`, possibly negative.
pub fn parse_rat(text: &str) -> Result<Rat, ParseError> {
    let f = parse_poly(text)?;
    if !f.is_constant() {
        return Err(ParseError::Syntax {
            pos: 0,
            msg: format!("'{}' is not a number", text),
        });
    }
    Ok(f.constant_term())
}
