//! Recursive-descent parser for the concrete formula syntax.
//!
//! Precedence, loosest first: `->` (right-associative), `|`, `&`, `!`.
//! Quantifier bodies extend as far right as possible. In terms, `+` is
//! looser than `*`, which is looser than prefix `-`.

use alloc::boxed::Box;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::{is_reserved, Formula, MacroName, Term};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Num(usize),
    Exists,
    Forall,
    LParen,
    RParen,
    Comma,
    Dot,
    Bang,
    Amp,
    Bar,
    Arrow,
    Leq,
    EqSign,
    Neq,
    Star,
    Plus,
    Minus,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Ident(s) => alloc::format!("identifier `{s}`"),
        Tok::Num(n) => alloc::format!("number {n}"),
        other => alloc::format!("{other:?}"),
    }
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let err = |position: usize, message: &str| Error::Parse {
        position,
        message: message.to_string(),
    };
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b',' => Tok::Comma,
            b'.' => Tok::Dot,
            b'&' => Tok::Amp,
            b'|' => Tok::Bar,
            b'*' => Tok::Star,
            b'+' => Tok::Plus,
            b'=' => Tok::EqSign,
            b'E' => Tok::Exists,
            b'A' => Tok::Forall,
            b'!' if bytes.get(i + 1) == Some(&b'=') => {
                i += 1;
                Tok::Neq
            }
            b'!' => Tok::Bang,
            b'-' if bytes.get(i + 1) == Some(&b'>') => {
                i += 1;
                Tok::Arrow
            }
            b'-' => Tok::Minus,
            b'<' if bytes.get(i + 1) == Some(&b'=') => {
                i += 1;
                Tok::Leq
            }
            b'0'..=b'9' => {
                while i + 1 < bytes.len() && bytes[i + 1].is_ascii_digit() {
                    i += 1;
                }
                let n = src[start..=i].parse().map_err(|_| err(start, "number too large"))?;
                Tok::Num(n)
            }
            b'a'..=b'z' => {
                while i + 1 < bytes.len()
                    && (bytes[i + 1].is_ascii_lowercase() || bytes[i + 1].is_ascii_digit() || bytes[i + 1] == b'_')
                {
                    i += 1;
                }
                Tok::Ident(src[start..=i].to_string())
            }
            _ => return Err(err(start, "unexpected character")),
        };
        i += 1;
        out.push((start, tok));
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            position: self.offset(),
            message: message.into(),
        }
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, t: &Tok) -> Result<()> {
        if self.eat(t) {
            Ok(())
        } else {
            Err(self.error(match self.peek() {
                Some(found) => alloc::format!("expected {}, found {}", describe(t), describe(found)),
                None => alloc::format!("expected {}, found end of input", describe(t)),
            }))
        }
    }

    fn formula(&mut self) -> Result<Formula> {
        let lhs = self.disjunction()?;
        if self.eat(&Tok::Arrow) {
            let rhs = self.formula()?;
            return Ok(Formula::Implies(Box::new(lhs), Box::new(rhs)));
        }
        Ok(lhs)
    }

    fn disjunction(&mut self) -> Result<Formula> {
        let mut f = self.conjunction()?;
        while self.eat(&Tok::Bar) {
            f = f.or(self.conjunction()?);
        }
        Ok(f)
    }

    fn conjunction(&mut self) -> Result<Formula> {
        let mut f = self.unary()?;
        while self.eat(&Tok::Amp) {
            f = f.and(self.unary()?);
        }
        Ok(f)
    }

    fn unary(&mut self) -> Result<Formula> {
        match self.peek() {
            Some(Tok::Bang) => {
                self.pos += 1;
                Ok(self.unary()?.not())
            }
            Some(Tok::Exists) | Some(Tok::Forall) => {
                let universal = self.peek() == Some(&Tok::Forall);
                self.pos += 1;
                let var = self.variable()?;
                self.expect(&Tok::Dot)?;
                let body = Box::new(self.formula()?);
                Ok(if universal {
                    Formula::Forall(var, body)
                } else {
                    Formula::Exists(var, body)
                })
            }
            _ => self.atom(),
        }
    }

    fn variable(&mut self) -> Result<String> {
        match self.peek().cloned() {
            Some(Tok::Ident(name)) if !is_reserved(&name) => {
                self.pos += 1;
                Ok(name)
            }
            Some(Tok::Ident(name)) => Err(self.error(alloc::format!("`{name}` is reserved"))),
            _ => Err(self.error("expected a variable")),
        }
    }

    fn atom(&mut self) -> Result<Formula> {
        if let Some(Tok::Ident(name)) = self.peek().cloned() {
            if name == "conv" {
                self.pos += 1;
                self.expect(&Tok::LParen)?;
                let t = self.term()?;
                self.expect(&Tok::RParen)?;
                return Ok(Formula::Conv(t));
            }
            if name == "helly" {
                self.pos += 1;
                self.expect(&Tok::LParen)?;
                let dim = self.number()?;
                self.expect(&Tok::Comma)?;
                let count = self.number()?;
                self.expect(&Tok::RParen)?;
                return Ok(Formula::Helly { dim, count });
            }
            if let Some(m) = MacroName::from_name(&name) {
                self.pos += 1;
                return self.macro_call(m);
            }
        }
        let start = self.pos;
        match self.comparison() {
            Ok(f) => Ok(f),
            Err(term_error) => {
                let term_pos = self.pos;
                self.pos = start;
                if self.eat(&Tok::LParen) {
                    let f = self.formula()?;
                    self.expect(&Tok::RParen)?;
                    Ok(f)
                } else {
                    self.pos = term_pos;
                    Err(term_error)
                }
            }
        }
    }

    fn number(&mut self) -> Result<usize> {
        match self.peek() {
            Some(Tok::Num(n)) => {
                let n = *n;
                self.pos += 1;
                Ok(n)
            }
            _ => Err(self.error("expected a number")),
        }
    }

    fn macro_call(&mut self, m: MacroName) -> Result<Formula> {
        self.expect(&Tok::LParen)?;
        let mut args = alloc::vec![self.term()?];
        while self.eat(&Tok::Comma) {
            args.push(self.term()?);
        }
        let close = self.offset();
        self.expect(&Tok::RParen)?;
        if let Some(n) = m.arity() {
            if args.len() != n {
                return Err(Error::Parse {
                    position: close,
                    message: alloc::format!("`{}` takes {n} arguments, found {}", m.name(), args.len()),
                });
            }
        }
        Ok(Formula::Macro(m, args))
    }

    fn comparison(&mut self) -> Result<Formula> {
        let lhs = self.term()?;
        let f = match self.peek() {
            Some(Tok::Leq) => Formula::Leq,
            Some(Tok::EqSign) => Formula::Eq,
            Some(Tok::Neq) => |a, b| Formula::neq(a, b),
            _ => return Err(self.error("expected `<=`, `=` or `!=`")),
        };
        self.pos += 1;
        let rhs = self.term()?;
        Ok(f(lhs, rhs))
    }

    fn term(&mut self) -> Result<Term> {
        let mut t = self.product()?;
        while self.eat(&Tok::Plus) {
            t = t.add(self.product()?);
        }
        Ok(t)
    }

    fn product(&mut self) -> Result<Term> {
        let mut t = self.negation()?;
        while self.eat(&Tok::Star) {
            t = t.mul(self.negation()?);
        }
        Ok(t)
    }

    fn negation(&mut self) -> Result<Term> {
        if self.eat(&Tok::Minus) {
            return Ok(self.negation()?.neg());
        }
        match self.peek().cloned() {
            Some(Tok::Num(0)) => {
                self.pos += 1;
                Ok(Term::Zero)
            }
            Some(Tok::Num(1)) => {
                self.pos += 1;
                Ok(Term::One)
            }
            Some(Tok::Num(_)) => Err(self.error("only 0 and 1 are constants")),
            Some(Tok::LParen) => {
                self.pos += 1;
                let t = self.term()?;
                self.expect(&Tok::RParen)?;
                Ok(t)
            }
            _ => Ok(Term::Var(self.variable()?)),
        }
    }
}

/// Parses one formula; the whole input must be consumed.
pub fn parse(text: &str) -> Result<Formula> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
        end: text.len(),
    };
    let f = p.formula()?;
    if p.pos != p.toks.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(f)
}
