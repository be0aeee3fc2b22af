//! Structural Gödel numbering.
//!
//! Every node is coded as `π(tag, payload)` with the Cantor pairing `π`.
//!
//! | sentence     | code                 |
//! |--------------|----------------------|
//! | `[φ]`        | `π(0, ⌜φ⌝)`          |
//! | `T(n)`       | `π(1, n)`            |
//! | `!A`         | `π(2, #A)`           |
//! | `A ∘ B`      | `π(3..=6, π(#A, #B))` for `|`, `&`, `->`, `<->` |
//! | `exists x. T(x)` | `π(7, 0)` = 28   |
//! | `forall x. T(x)` | `π(8, 0)` = 36   |
//!
//! Base formulas use the same layout: `=` is tag 0 over a pair of term codes,
//! a relation atom is tag 1 over `π(name, args)`, connectives are tags 2–6
//! and `exists vN.` / `forall vN.` are tags 7 / 8 over `π(N, body)`. Terms are
//! `π(0, var)`, `π(1, name)` and `π(2, element)`. Symbol names are coded as
//! the big-endian integer of their bytes, and argument lists fold right onto
//! `0` with `cons(t, rest) = π(t, rest) + 1`, so codes do not depend on any
//! signature.
//!
//! The numbering is injective but not surjective: tag 9 and above, malformed
//! payloads and open formulas decode to nothing.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::pairing::{pair, pair_u64, unpair};
use crate::syntax::{is_valid_symbol, Formula, Sentence, Term};

/// Code of a sentence; serialized as a decimal string.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GodelCode(pub BigUint);

impl GodelCode {
    pub fn value(&self) -> &BigUint {
        &self.0
    }
}

impl From<u64> for GodelCode {
    fn from(v: u64) -> Self {
        GodelCode(BigUint::from(v))
    }
}

impl From<BigUint> for GodelCode {
    fn from(v: BigUint) -> Self {
        GodelCode(v)
    }
}

impl fmt::Display for GodelCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for GodelCode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(format!("`{s}` is not a decimal natural"));
        }
        BigUint::parse_bytes(s.as_bytes(), 10)
            .map(GodelCode)
            .ok_or_else(|| format!("`{s}` is not a decimal natural"))
    }
}

impl Serialize for GodelCode {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for GodelCode {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

fn name_code(name: &str) -> BigUint {
    BigUint::from_bytes_be(name.as_bytes())
}

fn name_decode(code: &BigUint) -> Option<String> {
    if code.is_zero() {
        return None;
    }
    let name = String::from_utf8(code.to_bytes_be()).ok()?;
    is_valid_symbol(&name).then_some(name)
}

fn encode_term(t: &Term) -> BigUint {
    match t {
        Term::Var(i) => pair_u64(0, &BigUint::from(*i)),
        Term::Const(c) => pair_u64(1, &name_code(c)),
        Term::Elem(k) => pair_u64(2, &BigUint::from(*k)),
    }
}

fn decode_term(c: &BigUint) -> Option<Term> {
    let (tag, payload) = unpair(c);
    match tag.to_u64()? {
        0 => Some(Term::Var(payload.to_u64()?)),
        1 => Some(Term::Const(name_decode(&payload)?)),
        2 => Some(Term::Elem(payload.to_u64()?)),
        _ => None,
    }
}

/// Code of a base formula (open or closed).
pub fn encode_formula(f: &Formula) -> BigUint {
    let bin = |tag: u64, a: &Formula, b: &Formula| {
        pair_u64(tag, &pair(&encode_formula(a), &encode_formula(b)))
    };
    match f {
        Formula::Eq(a, b) => pair_u64(0, &pair(&encode_term(a), &encode_term(b))),
        Formula::Rel(name, args) => {
            let list = args
                .iter()
                .rev()
                .fold(BigUint::zero(), |rest, t| pair(&encode_term(t), &rest) + 1u32);
            pair_u64(1, &pair(&name_code(name), &list))
        }
        Formula::Not(a) => pair_u64(2, &encode_formula(a)),
        Formula::Or(a, b) => bin(3, a, b),
        Formula::And(a, b) => bin(4, a, b),
        Formula::Imp(a, b) => bin(5, a, b),
        Formula::Iff(a, b) => bin(6, a, b),
        Formula::Exists(v, body) => pair_u64(7, &pair(&BigUint::from(*v), &encode_formula(body))),
        Formula::Forall(v, body) => pair_u64(8, &pair(&BigUint::from(*v), &encode_formula(body))),
    }
}

/// Inverse of [`encode_formula`]; open formulas are accepted here.
pub fn decode_formula(c: &BigUint) -> Option<Formula> {
    let (tag, payload) = unpair(c);
    let bin = |ctor: fn(Box<Formula>, Box<Formula>) -> Formula| {
        let (a, b) = unpair(&payload);
        Some(ctor(Box::new(decode_formula(&a)?), Box::new(decode_formula(&b)?)))
    };
    match tag.to_u64()? {
        0 => {
            let (a, b) = unpair(&payload);
            Some(Formula::Eq(decode_term(&a)?, decode_term(&b)?))
        }
        1 => {
            let (name, mut list) = unpair(&payload);
            let name = name_decode(&name)?;
            let mut args = Vec::new();
            while !list.is_zero() {
                let (head, rest) = unpair(&(list - 1u32));
                args.push(decode_term(&head)?);
                list = rest;
            }
            Some(Formula::Rel(name, args))
        }
        2 => Some(Formula::Not(Box::new(decode_formula(&payload)?))),
        3 => bin(Formula::Or),
        4 => bin(Formula::And),
        5 => bin(Formula::Imp),
        6 => bin(Formula::Iff),
        7 | 8 => {
            let (v, body) = unpair(&payload);
            let v = v.to_u64()?;
            let body = Box::new(decode_formula(&body)?);
            Some(if tag == BigUint::from(7u32) {
                Formula::Exists(v, body)
            } else {
                Formula::Forall(v, body)
            })
        }
        _ => None,
    }
}

fn encode_raw(s: &Sentence) -> BigUint {
    let bin = |tag: u64, a: &Sentence, b: &Sentence| pair_u64(tag, &pair(&encode_raw(a), &encode_raw(b)));
    match s {
        Sentence::Base(phi) => pair_u64(0, &encode_formula(phi)),
        Sentence::TApp(n) => pair_u64(1, n),
        Sentence::Not(a) => pair_u64(2, &encode_raw(a)),
        Sentence::Or(a, b) => bin(3, a, b),
        Sentence::And(a, b) => bin(4, a, b),
        Sentence::Imp(a, b) => bin(5, a, b),
        Sentence::Iff(a, b) => bin(6, a, b),
        Sentence::ExistsT => pair_u64(7, &BigUint::zero()),
        Sentence::ForallT => pair_u64(8, &BigUint::zero()),
    }
}

/// The Gödel number `#s`.
pub fn encode(s: &Sentence) -> GodelCode {
    GodelCode(encode_raw(s))
}

fn decode_raw(c: &BigUint) -> Option<Sentence> {
    let (tag, payload) = unpair(c);
    let bin = |ctor: fn(Box<Sentence>, Box<Sentence>) -> Sentence| {
        let (a, b) = unpair(&payload);
        Some(ctor(Box::new(decode_raw(&a)?), Box::new(decode_raw(&b)?)))
    };
    match tag.to_u64()? {
        0 => {
            let phi = decode_formula(&payload)?;
            phi.is_closed().then_some(Sentence::Base(phi))
        }
        1 => Some(Sentence::TApp(payload)),
        2 => Some(Sentence::Not(Box::new(decode_raw(&payload)?))),
        3 => bin(Sentence::Or),
        4 => bin(Sentence::And),
        5 => bin(Sentence::Imp),
        6 => bin(Sentence::Iff),
        7 => payload.is_zero().then_some(Sentence::ExistsT),
        8 => payload.is_zero().then_some(Sentence::ForallT),
        _ => None,
    }
}

/// The sentence coded by `c`, or `None` when `c` lies outside the image of
/// [`encode`].
///
/// This is purely syntactic. Whether the sentence belongs to the language of
/// a particular model is decided by [`crate::FiniteModel::decode_sentence`].
pub fn decode(c: &GodelCode) -> Option<Sentence> {
    decode_raw(&c.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pairing::pair;

    fn n(v: u64) -> BigUint {
        BigUint::from(v)
    }

    // Independent pairing calculator on u128, used to freeze expected codes.
    fn pi(a: u128, b: u128) -> u128 {
        (a + b) * (a + b + 1) / 2 + b
    }

    #[test]
    fn anchor_codes() {
        assert_eq!(pi(1, 0), 1);
        assert_eq!(pi(7, 0), 28);
        assert_eq!(pi(8, 0), 36);
        // ∀v0. v0 = v0: body π(0, π(π(0,0), π(0,0))) = 0, b = π(8, π(0, 0)) = 36.
        let b = pi(8, pi(0, pi(0, pi(pi(0, 0), pi(0, 0)))));
        assert_eq!(b, 36);
        assert_eq!(pi(0, b), 702);

        assert_eq!(encode(&Sentence::t(0u32)), GodelCode::from(1));
        assert_eq!(encode(&Sentence::ExistsT), GodelCode::from(28));
        assert_eq!(encode(&Sentence::ForallT), GodelCode::from(36));
        assert_eq!(encode(&Sentence::base(Formula::identity())), GodelCode::from(702));
        assert_eq!(encode(&Sentence::t(702u32)), GodelCode::from(pi(1, 702) as u64));
    }

    #[test]
    fn decode_anchors() {
        assert_eq!(decode(&GodelCode::from(1)), Some(Sentence::t(0u32)));
        assert_eq!(decode(&GodelCode::from(702)), Some(Sentence::base(Formula::identity())));
        assert_eq!(decode(&GodelCode::from(28)), Some(Sentence::ExistsT));
        assert_eq!(decode(&GodelCode::from(36)), Some(Sentence::ForallT));
    }

    #[test]
    fn non_coding_numerals() {
        // 45 = π(9, 0): tag 9 is unassigned.
        assert_eq!(pair(&n(9), &n(0)), n(45));
        assert_eq!(decode(&GodelCode::from(45)), None);
        // 0 = π(0, 0): base payload 0 is `v0 = v0`, which is open.
        assert_eq!(decode_formula(&n(0)), Some(Formula::Eq(Term::Var(0), Term::Var(0))));
        assert_eq!(decode(&GodelCode::from(0)), None);
        // π(7, 1): the quantified T-atoms carry payload 0 only.
        assert_eq!(decode(&GodelCode(pair(&n(7), &n(1)))), None);
    }

    #[test]
    fn relation_atoms_round_trip() {
        let f = Formula::forall(
            3,
            Formula::Rel(
                "Edge".into(),
                vec![Term::Var(3), Term::Const("c".into()), Term::Elem(0), Term::Var(0)],
            ),
        );
        let s = Sentence::base(Formula::forall(0, f));
        assert_eq!(decode(&encode(&s)), Some(s));
        let zero_ary = Sentence::base(Formula::Rel("P".into(), vec![]));
        assert_eq!(decode(&encode(&zero_ary)), Some(zero_ary));
    }

    #[test]
    fn bad_symbol_names_do_not_decode() {
        // A constant term whose name bytes spell a variable or reserved word.
        for bad in ["v1", "T", "", "9x"] {
            let term = pair(&n(1), &BigUint::from_bytes_be(bad.as_bytes()));
            let eq = pair(&n(0), &pair(&term, &term));
            assert_eq!(decode(&GodelCode(pair(&n(0), &eq))), None, "{bad:?}");
        }
    }

    #[test]
    fn codes_serialize_as_decimal_strings() {
        let c = GodelCode::from(248158);
        assert_eq!(serde_json::to_string(&c).unwrap(), "\"248158\"");
        let back: GodelCode = serde_json::from_str("\"248158\"").unwrap();
        assert_eq!(back, c);
        assert!("12a".parse::<GodelCode>().is_err());
    }
}
