//! Concrete syntax.
//!
//! ```text
//! sentence := iff
//! iff      := imp ("<->" imp)*
//! imp      := or ("->" imp)?
//! or       := and ("|" and)*
//! and      := unary ("&" unary)*
//! unary    := "!" unary | atom
//! atom     := "T(" nat ")" | "exists x. T(x)" | "forall x. T(x)"
//!           | "[" formula "]" | "(" sentence ")" | bare-base
//! ```
//!
//! Base formulas use the same operators plus `forall vN.` / `exists vN.`,
//! `=`, relation atoms `R(t, …)`, constants and element numerals. A base
//! atom or quantified base formula may appear without brackets
//! (`bare-base`); its quantifier body then extends as far right as possible.
//! The printer always brackets base sentences.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::model::Signature;
use crate::syntax::{is_variable_name, Formula, Sentence, Term};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Bang,
    Bar,
    Amp,
    Arrow,
    DoubleArrow,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Dot,
    Comma,
    Equals,
    Num(String),
    Ident(String),
    Eof,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Num(n) => format!("numeral `{n}`"),
        Tok::Ident(s) => format!("`{s}`"),
        Tok::Eof => "end of input".into(),
        other => format!("`{}`", symbol(other)),
    }
}

fn symbol(t: &Tok) -> &'static str {
    match t {
        Tok::Bang => "!",
        Tok::Bar => "|",
        Tok::Amp => "&",
        Tok::Arrow => "->",
        Tok::DoubleArrow => "<->",
        Tok::LParen => "(",
        Tok::RParen => ")",
        Tok::LBracket => "[",
        Tok::RBracket => "]",
        Tok::Dot => ".",
        Tok::Comma => ",",
        Tok::Equals => "=",
        _ => "",
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let single = match c {
            b'!' => Some(Tok::Bang),
            b'|' => Some(Tok::Bar),
            b'&' => Some(Tok::Amp),
            b'(' => Some(Tok::LParen),
            b')' => Some(Tok::RParen),
            b'[' => Some(Tok::LBracket),
            b']' => Some(Tok::RBracket),
            b'.' => Some(Tok::Dot),
            b',' => Some(Tok::Comma),
            b'=' => Some(Tok::Equals),
            _ => None,
        };
        if let Some(tok) = single {
            out.push((tok, start));
            i += 1;
        } else if c.is_ascii_whitespace() {
            i += 1;
        } else if text[i..].starts_with("<->") {
            out.push((Tok::DoubleArrow, start));
            i += 3;
        } else if text[i..].starts_with("->") {
            out.push((Tok::Arrow, start));
            i += 2;
        } else if c.is_ascii_digit() {
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            out.push((Tok::Num(text[start..i].to_string()), start));
        } else if c.is_ascii_alphabetic() || c == b'_' {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((Tok::Ident(text[start..i].to_string()), start));
        } else {
            let ch = text[i..].chars().next().unwrap_or('?');
            return Err(Error::Syntax {
                pos: start,
                msg: format!("unexpected character `{ch}`"),
            });
        }
    }
    out.push((Tok::Eof, text.len()));
    Ok(out)
}

fn error_at<T>(pos: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Syntax { pos, msg: msg.into() })
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    at: usize,
    sig: &'a Signature,
}

impl<'a> Parser<'a> {
    fn new(text: &str, sig: &'a Signature) -> Result<Self> {
        Ok(Parser {
            toks: lex(text)?,
            at: 0,
            sig,
        })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn peek_at(&self, k: usize) -> &Tok {
        let idx = (self.at + k).min(self.toks.len() - 1);
        &self.toks[idx].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == t {
            self.bump();
            true
        } else {
            false
        }
    }

    fn error<T>(&self, msg: impl Into<String>) -> Result<T> {
        error_at(self.pos(), msg)
    }

    fn expect(&mut self, t: &Tok) -> Result<()> {
        if self.eat(t) {
            Ok(())
        } else {
            self.error(format!("expected {}, found {}", describe(t), describe(self.peek())))
        }
    }

    fn expect_ident(&mut self, word: &str) -> Result<()> {
        self.expect(&Tok::Ident(word.into()))
    }

    fn finish(&mut self) -> Result<()> {
        if *self.peek() == Tok::Eof {
            Ok(())
        } else {
            self.error(format!("unexpected {}", describe(self.peek())))
        }
    }

    // ---- sentences ----

    fn sentence(&mut self) -> Result<Sentence> {
        let mut lhs = self.s_imp()?;
        while self.eat(&Tok::DoubleArrow) {
            lhs = Sentence::iff(lhs, self.s_imp()?);
        }
        Ok(lhs)
    }

    fn s_imp(&mut self) -> Result<Sentence> {
        let lhs = self.s_or()?;
        if self.eat(&Tok::Arrow) {
            return Ok(Sentence::imp(lhs, self.s_imp()?));
        }
        Ok(lhs)
    }

    fn s_or(&mut self) -> Result<Sentence> {
        let mut lhs = self.s_and()?;
        while self.eat(&Tok::Bar) {
            lhs = Sentence::or(lhs, self.s_and()?);
        }
        Ok(lhs)
    }

    fn s_and(&mut self) -> Result<Sentence> {
        let mut lhs = self.s_unary()?;
        while self.eat(&Tok::Amp) {
            lhs = Sentence::and(lhs, self.s_unary()?);
        }
        Ok(lhs)
    }

    fn s_unary(&mut self) -> Result<Sentence> {
        if self.eat(&Tok::Bang) {
            return Ok(Sentence::not(self.s_unary()?));
        }
        self.s_atom()
    }

    fn s_atom(&mut self) -> Result<Sentence> {
        match self.peek().clone() {
            Tok::LParen => {
                self.bump();
                let s = self.sentence()?;
                self.expect(&Tok::RParen)?;
                Ok(s)
            }
            Tok::LBracket => {
                self.bump();
                let f = self.formula()?;
                self.expect(&Tok::RBracket)?;
                self.closed(f)
            }
            Tok::Ident(w) if w == "T" => {
                self.bump();
                self.expect(&Tok::LParen)?;
                let at = self.pos();
                let n = match self.bump() {
                    Tok::Num(digits) => BigUint::parse_bytes(digits.as_bytes(), 10).expect("lexed digits"),
                    other => return error_at(at, format!("expected a numeral in T(…), found {}", describe(&other))),
                };
                self.expect(&Tok::RParen)?;
                Ok(Sentence::TApp(n))
            }
            Tok::Ident(w) if (w == "exists" || w == "forall") && *self.peek_at(1) == Tok::Ident("x".into()) => {
                self.bump();
                self.bump();
                self.expect(&Tok::Dot)?;
                self.expect_ident("T")?;
                self.expect(&Tok::LParen)?;
                self.expect_ident("x")?;
                self.expect(&Tok::RParen)?;
                Ok(if w == "exists" { Sentence::ExistsT } else { Sentence::ForallT })
            }
            Tok::Ident(_) | Tok::Num(_) => {
                let f = self.f_bare()?;
                self.closed(f)
            }
            other => self.error(format!("expected a sentence, found {}", describe(&other))),
        }
    }

    fn closed(&self, f: Formula) -> Result<Sentence> {
        self.sig.check_formula(&f)?;
        Ok(Sentence::Base(f))
    }

    // ---- base formulas ----

    fn formula(&mut self) -> Result<Formula> {
        let mut lhs = self.f_imp()?;
        while self.eat(&Tok::DoubleArrow) {
            lhs = Formula::iff(lhs, self.f_imp()?);
        }
        Ok(lhs)
    }

    fn f_imp(&mut self) -> Result<Formula> {
        let lhs = self.f_or()?;
        if self.eat(&Tok::Arrow) {
            return Ok(Formula::imp(lhs, self.f_imp()?));
        }
        Ok(lhs)
    }

    fn f_or(&mut self) -> Result<Formula> {
        let mut lhs = self.f_and()?;
        while self.eat(&Tok::Bar) {
            lhs = Formula::or(lhs, self.f_and()?);
        }
        Ok(lhs)
    }

    fn f_and(&mut self) -> Result<Formula> {
        let mut lhs = self.f_unary()?;
        while self.eat(&Tok::Amp) {
            lhs = Formula::and(lhs, self.f_unary()?);
        }
        Ok(lhs)
    }

    fn f_unary(&mut self) -> Result<Formula> {
        if self.eat(&Tok::Bang) {
            return Ok(Formula::not(self.f_unary()?));
        }
        if *self.peek() == Tok::LParen {
            self.bump();
            let f = self.formula()?;
            self.expect(&Tok::RParen)?;
            return Ok(f);
        }
        self.f_bare()
    }

    /// Quantified formula or atom; shared with the bare form in sentences.
    fn f_bare(&mut self) -> Result<Formula> {
        if let Tok::Ident(w) = self.peek().clone() {
            if w == "forall" || w == "exists" {
                self.bump();
                let at = self.pos();
                let v = match self.bump() {
                    Tok::Ident(name) if is_variable_name(&name) => var_index(&name, at)?,
                    other => return error_at(at, format!("expected a variable `vN`, found {}", describe(&other))),
                };
                self.expect(&Tok::Dot)?;
                let body = self.formula()?;
                return Ok(if w == "forall" { Formula::forall(v, body) } else { Formula::exists(v, body) });
            }
            if *self.peek_at(1) == Tok::LParen {
                self.bump();
                self.bump();
                let mut args = Vec::new();
                if !self.eat(&Tok::RParen) {
                    loop {
                        args.push(self.term()?);
                        if self.eat(&Tok::RParen) {
                            break;
                        }
                        self.expect(&Tok::Comma)?;
                    }
                }
                return Ok(Formula::Rel(w, args));
            }
        }
        let lhs = self.term()?;
        self.expect(&Tok::Equals)?;
        let rhs = self.term()?;
        Ok(Formula::Eq(lhs, rhs))
    }

    fn term(&mut self) -> Result<Term> {
        let at = self.pos();
        match self.bump() {
            Tok::Num(digits) => match digits.parse() {
                Ok(k) => Ok(Term::Elem(k)),
                Err(_) => error_at(at, format!("element numeral {digits} is too large")),
            },
            Tok::Ident(name) if is_variable_name(&name) => Ok(Term::Var(var_index(&name, at)?)),
            Tok::Ident(name) => Ok(Term::Const(name)),
            other => error_at(at, format!("expected a term, found {}", describe(&other))),
        }
    }
}

fn var_index(name: &str, at: usize) -> Result<u64> {
    name[1..]
        .parse()
        .or_else(|_| error_at(at, format!("variable index in `{name}` is too large")))
}

/// Parses a sentence of the augmented language over `sig`.
pub fn parse_sentence(text: &str, sig: &Signature) -> Result<Sentence> {
    let mut p = Parser::new(text, sig)?;
    let s = p.sentence()?;
    p.finish()?;
    Ok(s)
}

/// Parses a closed base formula over `sig`.
pub fn parse_formula(text: &str, sig: &Signature) -> Result<Formula> {
    let mut p = Parser::new(text, sig)?;
    let f = p.formula()?;
    p.finish()?;
    sig.check_formula(&f)?;
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    fn sig() -> Signature {
        Signature {
            relations: BTreeMap::from([("P".to_string(), 1), ("R".to_string(), 2)]),
            constants: ["c".to_string()].into_iter().collect(),
        }
    }

    fn parse(text: &str) -> Result<Sentence> {
        parse_sentence(text, &sig())
    }

    #[test]
    fn atomic_productions() {
        assert_eq!(parse("T(702)").unwrap(), Sentence::t(702u32));
        assert_eq!(parse("exists x. T(x)").unwrap(), Sentence::ExistsT);
        assert_eq!(parse("forall x. T(x)").unwrap(), Sentence::ForallT);
        assert_eq!(parse("[forall v0. v0 = v0]").unwrap(), Sentence::base(Formula::identity()));
    }

    #[test]
    fn bare_base_sentence_inside_connectives() {
        let expected = Sentence::not(Sentence::or(Sentence::t(0u32), Sentence::base(Formula::identity())));
        assert_eq!(parse("!(T(0) | forall v0. v0 = v0)").unwrap(), expected);
        assert_eq!(parse(&expected.to_string()).unwrap(), expected);
        assert_eq!(expected.to_string(), "!(T(0) | [forall v0. v0 = v0])");
    }

    #[test]
    fn precedence_and_associativity() {
        let (a, b, c) = (Sentence::t(1u32), Sentence::t(2u32), Sentence::t(3u32));
        assert_eq!(
            parse("T(1) | T(2) & T(3)").unwrap(),
            Sentence::or(a.clone(), Sentence::and(b.clone(), c.clone()))
        );
        assert_eq!(
            parse("T(1) -> T(2) -> T(3)").unwrap(),
            Sentence::imp(a.clone(), Sentence::imp(b.clone(), c.clone()))
        );
        assert_eq!(
            parse("T(1) <-> T(2) -> T(3)").unwrap(),
            Sentence::iff(a.clone(), Sentence::imp(b, c))
        );
        assert_eq!(parse("!!T(1)").unwrap(), Sentence::not(Sentence::not(a)));
    }

    #[test]
    fn base_formulas() {
        let f = parse_formula("forall v0. exists v1. R(v0, v1) & !P(c) | 0 = c", &sig()).unwrap();
        let body = Formula::or(
            Formula::and(
                Formula::Rel("R".into(), vec![Term::Var(0), Term::Var(1)]),
                Formula::not(Formula::Rel("P".into(), vec![Term::Const("c".into())])),
            ),
            Formula::Eq(Term::Elem(0), Term::Const("c".into())),
        );
        assert_eq!(f, Formula::forall(0, Formula::exists(1, body)));
    }

    #[test]
    fn errors() {
        assert!(matches!(parse("T(x)"), Err(Error::Syntax { pos: 2, .. })));
        assert!(matches!(parse("T(1) |"), Err(Error::Syntax { pos: 6, .. })));
        assert!(matches!(parse("T(1) T(2)"), Err(Error::Syntax { pos: 5, .. })));
        assert!(matches!(parse("[Q(c)]"), Err(Error::UnknownSymbol(s)) if s == "Q"));
        assert!(matches!(parse("[P(d)]"), Err(Error::UnknownSymbol(s)) if s == "d"));
        assert!(matches!(parse("[R(c)]"), Err(Error::Arity { expected: 2, got: 1, .. })));
        assert!(matches!(parse("[P(v3)]"), Err(Error::FreeVariable(3))));
        assert!(matches!(parse("P(v0)"), Err(Error::FreeVariable(0))));
        assert!(matches!(parse("[T(3)]"), Err(Error::UnknownSymbol(s)) if s == "T"));
        assert!(matches!(parse("T(1) # T(2)"), Err(Error::Syntax { pos: 5, .. })));
    }
}
