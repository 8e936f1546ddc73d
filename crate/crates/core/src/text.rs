//! The `.poly` text format.
//!
//! ```text
//! poly  := sterm (('+' | '-') sterm)*
//! sterm := [coeff] ['*' mono] | mono
//! mono  := var ['^' exp] ('*' var ['^' exp])*
//! exp   := integer | '(' rational ')'
//! ```
//!
//! Variables are `x1 .. xn`; `x, y, z, w` alias `x1 .. x4`. Coefficients may
//! be integers, finite decimals (converted exactly) or parenthesized
//! rationals such as `(19/2)`. `#` starts a comment that runs to the end of
//! the line. The ambient dimension is the largest variable index used
//! (at least one).

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use crate::signomial::{ExponentVector, Signomial, Term};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    End,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(input: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    for (li, line) in input.lines().enumerate() {
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let column = i + 1;
            let push = |out: &mut Vec<Token>, tok| {
                out.push(Token {
                    tok,
                    line: li + 1,
                    column,
                })
            };
            match c {
                '#' => break,
                c if c.is_whitespace() => {
                    i += 1;
                    continue;
                }
                '+' => push(&mut out, Tok::Plus),
                '-' => push(&mut out, Tok::Minus),
                '*' => push(&mut out, Tok::Star),
                '^' => push(&mut out, Tok::Caret),
                '/' => push(&mut out, Tok::Slash),
                '(' => push(&mut out, Tok::LParen),
                ')' => push(&mut out, Tok::RParen),
                c if c.is_ascii_digit() || c == '.' => {
                    let start = i;
                    while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.') {
                        i += 1;
                    }
                    push(&mut out, Tok::Num(chars[start..i].iter().collect()));
                    continue;
                }
                c if c.is_ascii_alphabetic() => {
                    let start = i;
                    while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                        i += 1;
                    }
                    push(&mut out, Tok::Ident(chars[start..i].iter().collect()));
                    continue;
                }
                other => {
                    return Err(Error::Parse {
                        line: li + 1,
                        column,
                        message: format!("unexpected character {other:?}"),
                    })
                }
            }
            i += 1;
        }
    }
    let (line, column) = match input.lines().enumerate().last() {
        Some((l, s)) => (l + 1, s.chars().count() + 1),
        None => (1, 1),
    };
    out.push(Token {
        tok: Tok::End,
        line,
        column,
    });
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

/// A term before the ambient dimension is known: (coefficient, [(var index, exponent)]).
type RawTerm = (Rational, Vec<(usize, Rational)>);

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn next(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        let t = &self.toks[self.pos];
        Err(Error::Parse {
            line: t.line,
            column: t.column,
            message: message.into(),
        })
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<()> {
        if *self.peek() == tok {
            self.next();
            Ok(())
        } else {
            self.err(format!("expected {what}"))
        }
    }

    fn number(&mut self) -> Result<Rational> {
        match self.peek().clone() {
            Tok::Num(s) => match rational::parse(&s) {
                Some(q) => {
                    self.next();
                    Ok(q)
                }
                None => self.err(format!("malformed number {s:?}")),
            },
            _ => self.err("expected a number"),
        }
    }

    /// `'(' ['-'|'+'] number ['/' number] ')'`, with the opening paren already consumed.
    fn paren_rational(&mut self) -> Result<Rational> {
        let negative = match self.peek() {
            Tok::Minus => {
                self.next();
                true
            }
            Tok::Plus => {
                self.next();
                false
            }
            _ => false,
        };
        let mut q = self.number()?;
        if *self.peek() == Tok::Slash {
            self.next();
            let d = self.number()?;
            if d.is_zero() {
                return self.err("division by zero");
            }
            q /= d;
        }
        self.expect(Tok::RParen, "')'")?;
        Ok(if negative { -q } else { q })
    }

    fn variable(&mut self) -> Result<usize> {
        let Tok::Ident(name) = self.peek().clone() else {
            return self.err("expected a variable");
        };
        let idx = match name.as_str() {
            "x" => 0,
            "y" => 1,
            "z" => 2,
            "w" => 3,
            s if s.len() > 1 && s.starts_with('x') => match s[1..].parse::<usize>() {
                Ok(k) if k >= 1 => k - 1,
                _ => return self.err(format!("unknown variable {name:?}")),
            },
            _ => return self.err(format!("unknown variable {name:?}")),
        };
        self.next();
        Ok(idx)
    }

    fn factor(&mut self) -> Result<(usize, Rational)> {
        let var = self.variable()?;
        if *self.peek() != Tok::Caret {
            return Ok((var, Rational::one()));
        }
        self.next();
        let e = match self.peek() {
            Tok::LParen => {
                self.next();
                self.paren_rational()?
            }
            Tok::Num(s) if s.chars().all(|c| c.is_ascii_digit()) => self.number()?,
            _ => return self.err("exponent must be an integer or a parenthesized rational"),
        };
        Ok((var, e))
    }

    fn mono(&mut self, factors: &mut Vec<(usize, Rational)>) -> Result<()> {
        factors.push(self.factor()?);
        while *self.peek() == Tok::Star {
            self.next();
            factors.push(self.factor()?);
        }
        Ok(())
    }

    fn sterm(&mut self) -> Result<RawTerm> {
        let mut factors = Vec::new();
        let coeff = match self.peek().clone() {
            Tok::Num(_) => Some(self.number()?),
            Tok::LParen => {
                self.next();
                Some(self.paren_rational()?)
            }
            Tok::Ident(_) => None,
            _ => return self.err("expected a term"),
        };
        match coeff {
            Some(c) => {
                if *self.peek() == Tok::Star {
                    self.next();
                    self.mono(&mut factors)?;
                }
                Ok((c, factors))
            }
            None => {
                self.mono(&mut factors)?;
                Ok((Rational::one(), factors))
            }
        }
    }

    fn poly(&mut self) -> Result<Vec<RawTerm>> {
        let mut terms = Vec::new();
        let mut sign = Rational::one();
        match self.peek() {
            Tok::Minus => {
                self.next();
                sign = -sign;
            }
            Tok::Plus => {
                self.next();
            }
            Tok::End => return self.err("empty polynomial"),
            _ => {}
        }
        loop {
            let (c, f) = self.sterm()?;
            terms.push((sign.clone() * c, f));
            match self.peek() {
                Tok::Plus => {
                    self.next();
                    sign = Rational::one();
                }
                Tok::Minus => {
                    self.next();
                    sign = -Rational::one();
                }
                Tok::End => break,
                _ => return self.err("expected '+', '-' or end of input"),
            }
        }
        Ok(terms)
    }
}

/// Parses a polynomial, inferring the dimension from the variables used.
pub fn parse_signomial(input: &str) -> Result<Signomial> {
    parse_signomial_with_dim(input, None)
}

/// Parses a polynomial. With `dimension = Some(n)` the ambient dimension is
/// fixed to `n` and larger variable indices are rejected.
pub fn parse_signomial_with_dim(input: &str, dimension: Option<usize>) -> Result<Signomial> {
    let mut p = Parser {
        toks: lex(input)?,
        pos: 0,
    };
    let raw = p.poly()?;
    let used = raw
        .iter()
        .flat_map(|(_, f)| f.iter().map(|(i, _)| i + 1))
        .max()
        .unwrap_or(1);
    let n = match dimension {
        Some(n) if n < used => {
            return Err(Error::Parse {
                line: 1,
                column: 1,
                message: format!("variable x{used} exceeds declared dimension {n}"),
            })
        }
        Some(n) => n,
        None => used,
    };
    let terms = raw.into_iter().map(|(c, factors)| {
        let mut e = vec![Rational::zero(); n];
        for (i, q) in factors {
            e[i] += q;
        }
        Term {
            coefficient: c,
            exponent: ExponentVector::new(e),
        }
    });
    Signomial::new(n, terms)
}
