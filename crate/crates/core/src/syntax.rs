//! Abstract syntax of the base language and of its truth-augmented extension.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;

/// A term of the base language. Function symbols are not part of the syntax.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    /// Variable `vN`.
    Var(u64),
    /// Named constant symbol.
    Const(String),
    /// Numeral naming a domain element.
    Elem(u64),
}

/// A first-order formula over relation and constant symbols, with equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Eq(Term, Term),
    Rel(String, Vec<Term>),
    Not(Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Imp(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
    Exists(u64, Box<Formula>),
    Forall(u64, Box<Formula>),
}

/// A sentence of the augmented language.
///
/// `T(n)` takes the numeral's value directly. The only quantified
/// T-sentences are the two atoms `exists x. T(x)` and `forall x. T(x)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sentence {
    Base(Formula),
    TApp(BigUint),
    Not(Box<Sentence>),
    Or(Box<Sentence>, Box<Sentence>),
    And(Box<Sentence>, Box<Sentence>),
    Imp(Box<Sentence>, Box<Sentence>),
    Iff(Box<Sentence>, Box<Sentence>),
    ExistsT,
    ForallT,
}

/// Words that cannot be used as relation or constant names.
pub const RESERVED: [&str; 3] = ["T", "forall", "exists"];

/// Whether `name` may name a relation or constant: an identifier that is not
/// reserved and does not have the shape of a variable (`v` followed by digits).
pub fn is_valid_symbol(name: &str) -> bool {
    let mut chars = name.chars();
    let head_ok = matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_');
    head_ok
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
        && !RESERVED.contains(&name)
        && !is_variable_name(name)
}

pub(crate) fn is_variable_name(name: &str) -> bool {
    name.len() > 1 && name.starts_with('v') && name[1..].bytes().all(|b| b.is_ascii_digit())
}

impl Formula {
    #[allow(clippy::should_implement_trait)]
    pub fn not(a: Formula) -> Formula {
        Formula::Not(Box::new(a))
    }
    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }
    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }
    pub fn imp(a: Formula, b: Formula) -> Formula {
        Formula::Imp(Box::new(a), Box::new(b))
    }
    pub fn iff(a: Formula, b: Formula) -> Formula {
        Formula::Iff(Box::new(a), Box::new(b))
    }
    pub fn exists(v: u64, body: Formula) -> Formula {
        Formula::Exists(v, Box::new(body))
    }
    pub fn forall(v: u64, body: Formula) -> Formula {
        Formula::Forall(v, Box::new(body))
    }

    /// `forall v0. v0 = v0`, true in every nonempty structure.
    pub fn identity() -> Formula {
        Formula::forall(0, Formula::Eq(Term::Var(0), Term::Var(0)))
    }

    /// `exists v0. !(v0 = v0)`, false in every structure.
    pub fn absurdity() -> Formula {
        Formula::exists(0, Formula::not(Formula::Eq(Term::Var(0), Term::Var(0))))
    }

    pub fn free_vars(&self) -> BTreeSet<u64> {
        let mut out = BTreeSet::new();
        let mut bound = Vec::new();
        self.collect_free(&mut bound, &mut out);
        out
    }

    fn collect_free(&self, bound: &mut Vec<u64>, out: &mut BTreeSet<u64>) {
        let mut term = |t: &Term, bound: &Vec<u64>| {
            if let Term::Var(v) = t {
                if !bound.contains(v) {
                    out.insert(*v);
                }
            }
        };
        match self {
            Formula::Eq(a, b) => {
                term(a, bound);
                term(b, bound);
            }
            Formula::Rel(_, args) => args.iter().for_each(|t| term(t, bound)),
            Formula::Not(a) => a.collect_free(bound, out),
            Formula::Or(a, b) | Formula::And(a, b) | Formula::Imp(a, b) | Formula::Iff(a, b) => {
                a.collect_free(bound, out);
                b.collect_free(bound, out);
            }
            Formula::Exists(v, body) | Formula::Forall(v, body) => {
                bound.push(*v);
                body.collect_free(bound, out);
                bound.pop();
            }
        }
    }

    pub fn is_closed(&self) -> bool {
        self.free_vars().is_empty()
    }
}

impl Sentence {
    pub fn base(f: Formula) -> Sentence {
        Sentence::Base(f)
    }
    pub fn t(n: impl Into<BigUint>) -> Sentence {
        Sentence::TApp(n.into())
    }
    #[allow(clippy::should_implement_trait)]
    pub fn not(a: Sentence) -> Sentence {
        Sentence::Not(Box::new(a))
    }
    pub fn or(a: Sentence, b: Sentence) -> Sentence {
        Sentence::Or(Box::new(a), Box::new(b))
    }
    pub fn and(a: Sentence, b: Sentence) -> Sentence {
        Sentence::And(Box::new(a), Box::new(b))
    }
    pub fn imp(a: Sentence, b: Sentence) -> Sentence {
        Sentence::Imp(Box::new(a), Box::new(b))
    }
    pub fn iff(a: Sentence, b: Sentence) -> Sentence {
        Sentence::Iff(Box::new(a), Box::new(b))
    }

    /// Immediate subsentences.
    pub fn children(&self) -> Vec<&Sentence> {
        match self {
            Sentence::Not(a) => vec![a],
            Sentence::Or(a, b) | Sentence::And(a, b) | Sentence::Imp(a, b) | Sentence::Iff(a, b) => {
                vec![a, b]
            }
            Sentence::Base(_) | Sentence::TApp(_) | Sentence::ExistsT | Sentence::ForallT => vec![],
        }
    }

    /// Numerals of every `T(n)` occurring in the sentence.
    pub fn numerals(&self) -> Vec<&BigUint> {
        let mut out = Vec::new();
        let mut stack = vec![self];
        while let Some(s) = stack.pop() {
            if let Sentence::TApp(n) = s {
                out.push(n);
            }
            stack.extend(s.children());
        }
        out
    }

    pub fn is_base(&self) -> bool {
        matches!(self, Sentence::Base(_))
    }

    /// Number of nodes in the sentence tree.
    pub fn size(&self) -> usize {
        1 + self.children().iter().map(|c| c.size()).sum::<usize>()
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) => write!(f, "v{v}"),
            Term::Const(c) => write!(f, "{c}"),
            Term::Elem(k) => write!(f, "{k}"),
        }
    }
}

fn binary_op(f: &Formula) -> Option<(&Formula, &str, &Formula)> {
    match f {
        Formula::Or(a, b) => Some((a, "|", b)),
        Formula::And(a, b) => Some((a, "&", b)),
        Formula::Imp(a, b) => Some((a, "->", b)),
        Formula::Iff(a, b) => Some((a, "<->", b)),
        _ => None,
    }
}

// Quantifier bodies extend as far right as possible when parsed, so a
// quantified formula is parenthesized whenever it is an operand.
fn write_formula(f: &Formula, out: &mut fmt::Formatter<'_>, operand: bool) -> fmt::Result {
    if let Some((a, op, b)) = binary_op(f) {
        write!(out, "(")?;
        write_formula(a, out, true)?;
        write!(out, " {op} ")?;
        write_formula(b, out, true)?;
        return write!(out, ")");
    }
    match f {
        Formula::Eq(a, b) => write!(out, "{a} = {b}"),
        Formula::Rel(name, args) => {
            write!(out, "{name}(")?;
            for (i, t) in args.iter().enumerate() {
                if i > 0 {
                    write!(out, ", ")?;
                }
                write!(out, "{t}")?;
            }
            write!(out, ")")
        }
        Formula::Not(a) => {
            write!(out, "!")?;
            write_formula(a, out, true)
        }
        Formula::Exists(v, body) | Formula::Forall(v, body) => {
            let q = if matches!(f, Formula::Exists(..)) { "exists" } else { "forall" };
            if operand {
                write!(out, "(")?;
            }
            write!(out, "{q} v{v}. ")?;
            write_formula(body, out, false)?;
            if operand {
                write!(out, ")")?;
            }
            Ok(())
        }
        _ => unreachable!("binary connectives handled above"),
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_formula(self, f, false)
    }
}

impl fmt::Display for Sentence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bin = |f: &mut fmt::Formatter<'_>, a: &Sentence, op: &str, b: &Sentence| {
            write!(f, "({a} {op} {b})")
        };
        match self {
            Sentence::Base(phi) => write!(f, "[{phi}]"),
            Sentence::TApp(n) => write!(f, "T({n})"),
            Sentence::Not(a) => write!(f, "!{a}"),
            Sentence::Or(a, b) => bin(f, a, "|", b),
            Sentence::And(a, b) => bin(f, a, "&", b),
            Sentence::Imp(a, b) => bin(f, a, "->", b),
            Sentence::Iff(a, b) => bin(f, a, "<->", b),
            Sentence::ExistsT => write!(f, "exists x. T(x)"),
            Sentence::ForallT => write!(f, "forall x. T(x)"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prints_canonical_forms() {
        assert_eq!(Sentence::t(0u32).to_string(), "T(0)");
        assert_eq!(Sentence::ForallT.to_string(), "forall x. T(x)");
        assert_eq!(Sentence::ExistsT.to_string(), "exists x. T(x)");
        let s = Sentence::iff(Sentence::t(1u32), Sentence::not(Sentence::t(1u32)));
        assert_eq!(s.to_string(), "(T(1) <-> !T(1))");
        assert_eq!(Sentence::base(Formula::identity()).to_string(), "[forall v0. v0 = v0]");
    }

    #[test]
    fn quantified_operands_are_parenthesized() {
        let f = Formula::or(
            Formula::forall(0, Formula::Rel("P".into(), vec![Term::Var(0)])),
            Formula::Rel("P".into(), vec![Term::Const("c".into())]),
        );
        assert_eq!(f.to_string(), "((forall v0. P(v0)) | P(c))");
    }

    #[test]
    fn free_variables() {
        assert!(Formula::identity().is_closed());
        let open = Formula::exists(1, Formula::Eq(Term::Var(0), Term::Var(1)));
        assert_eq!(open.free_vars().into_iter().collect::<Vec<_>>(), vec![0]);
    }
}
