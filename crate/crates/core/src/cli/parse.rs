//! Tokenizer and recursive-descent parser for polynomial text.
//!
//! Grammar (no implicit multiplication):
//!
//! ```text
//! expr   := [+|-] term { (+|-) term }
//! term   := factor { * factor | / INT }
//! factor := atom [ ^ INT ]
//! atom   := INT | IDENT | ( expr )
//! ```

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::{Polynomial, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Tok {
    Ident(String),
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Semi,
    Eq,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Int(n) => format!("integer `{n}`"),
            Tok::Eof => "end of input".to_string(),
            other => format!("`{}`", other.symbol()),
        }
    }

    fn symbol(&self) -> &'static str {
        match self {
            Tok::Plus => "+",
            Tok::Minus => "-",
            Tok::Star => "*",
            Tok::Slash => "/",
            Tok::Caret => "^",
            Tok::LParen => "(",
            Tok::RParen => ")",
            Tok::LBracket => "[",
            Tok::RBracket => "]",
            Tok::Comma => ",",
            Tok::Semi => ";",
            Tok::Eq => "=",
            _ => "?",
        }
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Spanned {
    pub tok: Tok,
    pub line: usize,
    pub column: usize,
}

pub(crate) fn tokenize(text: &str) -> Result<Vec<Spanned>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut i, mut line, mut col) = (0usize, 1usize, 1usize);
    while i < chars.len() {
        let c = chars[i];
        let (start_line, start_col) = (line, col);
        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        if c == '#' {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
            continue;
        }
        let tok = if c.is_ascii_digit() {
            let mut s = String::new();
            while i < chars.len() && chars[i].is_ascii_digit() {
                s.push(chars[i]);
                i += 1;
                col += 1;
            }
            Tok::Int(s.parse().expect("digits"))
        } else if c.is_alphabetic() || c == '_' {
            let mut s = String::new();
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                s.push(chars[i]);
                i += 1;
                col += 1;
            }
            Tok::Ident(s)
        } else {
            let t = match c {
                '+' => Tok::Plus,
                '-' | '−' => Tok::Minus,
                '*' => Tok::Star,
                '/' => Tok::Slash,
                '^' => Tok::Caret,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                '[' => Tok::LBracket,
                ']' => Tok::RBracket,
                ',' => Tok::Comma,
                ';' => Tok::Semi,
                '=' => Tok::Eq,
                other => {
                    return Err(Error::Syntax {
                        line,
                        column: col,
                        message: format!("unexpected character `{other}`"),
                    })
                }
            };
            i += 1;
            col += 1;
            t
        };
        out.push(Spanned {
            tok,
            line: start_line,
            column: start_col,
        });
    }
    out.push(Spanned {
        tok: Tok::Eof,
        line,
        column: col,
    });
    Ok(out)
}

/// Resolves identifiers that are not ring variables (e.g. named polynomials).
pub(crate) trait Names {
    fn variable(&self, name: &str) -> Option<usize>;
    fn polynomial(&self, _name: &str) -> Option<Polynomial> {
        None
    }
    fn nvars(&self) -> usize;
}

struct VarNames<'a>(&'a [String]);

impl Names for VarNames<'_> {
    fn variable(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }
    fn nvars(&self) -> usize {
        self.0.len()
    }
}

pub(crate) struct Cursor {
    toks: Vec<Spanned>,
    pos: usize,
}

impl Cursor {
    pub fn new(toks: Vec<Spanned>) -> Self {
        Cursor { toks, pos: 0 }
    }

    pub fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    pub fn peek_at(&self, k: usize) -> &Tok {
        let i = (self.pos + k).min(self.toks.len() - 1);
        &self.toks[i].tok
    }

    pub fn next(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    pub fn error(&self, message: impl Into<String>) -> Error {
        let s = &self.toks[self.pos];
        Error::Syntax {
            line: s.line,
            column: s.column,
            message: message.into(),
        }
    }

    pub fn unexpected(&self, wanted: &str) -> Error {
        self.error(format!("expected {wanted}, found {}", self.peek().describe()))
    }

    pub fn expect(&mut self, tok: Tok) -> Result<()> {
        if *self.peek() == tok {
            self.next();
            Ok(())
        } else {
            Err(self.unexpected(&format!("`{}`", tok.symbol())))
        }
    }

    pub fn ident(&mut self) -> Result<String> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                self.next();
                Ok(s)
            }
            _ => Err(self.unexpected("an identifier")),
        }
    }

    pub fn integer(&mut self) -> Result<BigInt> {
        let neg = if *self.peek() == Tok::Minus {
            self.next();
            true
        } else {
            false
        };
        match self.peek().clone() {
            Tok::Int(n) => {
                self.next();
                Ok(if neg { -n } else { n })
            }
            _ => Err(self.unexpected("an integer")),
        }
    }

    pub fn small_integer(&mut self) -> Result<u32> {
        let n = self.integer()?;
        n.to_u32()
            .ok_or_else(|| self.error(format!("integer {n} out of range")))
    }

    pub fn at_eof(&self) -> bool {
        *self.peek() == Tok::Eof
    }

    pub fn expr(&mut self, names: &dyn Names) -> Result<Polynomial> {
        let mut acc = match self.peek() {
            Tok::Minus => {
                self.next();
                -&self.term(names)?
            }
            Tok::Plus => {
                self.next();
                self.term(names)?
            }
            _ => self.term(names)?,
        };
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.next();
                    acc = &acc + &self.term(names)?;
                }
                Tok::Minus => {
                    self.next();
                    acc = &acc - &self.term(names)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self, names: &dyn Names) -> Result<Polynomial> {
        let mut acc = self.factor(names)?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.next();
                    let f = self.factor(names)?;
                    acc = acc.checked_mul(&f)?;
                }
                Tok::Slash => {
                    self.next();
                    let d = match self.peek().clone() {
                        Tok::Int(n) => n,
                        _ => return Err(self.unexpected("an integer denominator")),
                    };
                    if d.is_zero() {
                        return Err(self.error("division by zero"));
                    }
                    self.next();
                    acc = acc.scale(&Rational::new(1.into(), d));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self, names: &dyn Names) -> Result<Polynomial> {
        let base = self.atom(names)?;
        if *self.peek() == Tok::Caret {
            self.next();
            let e = match self.peek().clone() {
                Tok::Int(n) => n,
                _ => return Err(self.unexpected("a nonnegative integer exponent")),
            };
            let e = e.to_u32().ok_or_else(|| self.error("exponent out of range"))?;
            self.next();
            return base.checked_pow(e);
        }
        Ok(base)
    }

    fn atom(&mut self, names: &dyn Names) -> Result<Polynomial> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.next();
                Ok(Polynomial::constant(names.nvars(), Rational::from_integer(n)))
            }
            Tok::Ident(s) => {
                self.next();
                if let Some(i) = names.variable(&s) {
                    Ok(Polynomial::var(names.nvars(), i))
                } else if let Some(p) = names.polynomial(&s) {
                    Ok(p)
                } else {
                    Err(Error::UnknownVariable(s))
                }
            }
            Tok::LParen => {
                self.next();
                let e = self.expr(names)?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            _ => Err(self.unexpected("a number, variable or `(`")),
        }
    }
}

/// Parses a polynomial in the ring with the given variable names.
pub fn parse_polynomial(text: &str, vars: &[String]) -> Result<Polynomial> {
    let mut cur = Cursor::new(tokenize(text)?);
    let p = cur.expr(&VarNames(vars))?;
    if !cur.at_eof() {
        return Err(cur.unexpected("end of input"));
    }
    Ok(p)
}

/// Variable names of a polynomial string in order of first appearance.
pub fn collect_identifiers(text: &str) -> Result<Vec<String>> {
    let mut out: Vec<String> = Vec::new();
    for t in tokenize(text)? {
        if let Tok::Ident(s) = t.tok {
            if !out.contains(&s) {
                out.push(s);
            }
        }
    }
    Ok(out)
}
