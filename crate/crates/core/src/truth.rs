//! Valuation of the fixed-point language and the checks that come with it.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fixpoint::FixpointResult;
use crate::godel::{encode, GodelCode};
use crate::model::FiniteModel;
use crate::operator::judge;
use crate::syntax::Sentence;

/// Truth value of a sentence at a fixed point `U`: true iff `#A ∈ G(U)`,
/// false iff `#A ∈ F(U)`. Undetermined sentences lie outside `L_U`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Valuation {
    True,
    False,
    Undetermined,
}

impl Valuation {
    pub fn is_determinate(self) -> bool {
        self != Valuation::Undetermined
    }

    pub fn as_bool(self) -> Option<bool> {
        match self {
            Valuation::True => Some(true),
            Valuation::False => Some(false),
            Valuation::Undetermined => None,
        }
    }
}

impl From<bool> for Valuation {
    fn from(b: bool) -> Self {
        if b {
            Valuation::True
        } else {
            Valuation::False
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Valuation::True => "true",
            Valuation::False => "false",
            Valuation::Undetermined => "undetermined",
        })
    }
}

/// Sentences referred to by `T(n)` inside `s` that the universe lacks.
fn missing_referents(s: &Sentence, fp: &FixpointResult) -> Vec<Sentence> {
    let mut missing: Vec<Sentence> = s
        .numerals()
        .into_iter()
        .filter_map(|n| fp.model.decode_sentence(&GodelCode(n.clone())))
        .filter(|a| !fp.universe.contains(a))
        .collect();
    missing.sort();
    missing.dedup();
    missing
}

/// Valuation at the computed fixed point.
///
/// Every sentence whose `T`-atoms refer only to universe members (or to
/// nothing) is accepted, including sentences built on the fly from members.
pub fn valuation(s: &Sentence, fp: &FixpointResult) -> Result<Valuation> {
    let missing = missing_referents(s, fp);
    if !missing.is_empty() {
        return Err(Error::MissingReferents(missing.iter().map(|s| s.to_string()).collect()));
    }
    Ok(valuation_unchecked(s, fp))
}

fn valuation_unchecked(s: &Sentence, fp: &FixpointResult) -> Valuation {
    match judge(s, &fp.set, &fp.model) {
        (true, false) => Valuation::True,
        (false, true) => Valuation::False,
        (false, false) => Valuation::Undetermined,
        (true, true) => unreachable!("G(U) and F(U) overlap at a consistent fixed point"),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub sentence: String,
    pub expected: String,
    pub got: String,
}

/// Outcome of a batch of checks.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub checked: usize,
    pub failures: Vec<Failure>,
    pub pass: bool,
}

impl VerificationReport {
    pub fn new() -> VerificationReport {
        VerificationReport {
            checked: 0,
            failures: Vec::new(),
            pass: true,
        }
    }

    /// Records one check; a mismatch between `expected` and `got` is a failure.
    pub fn check<T: PartialEq + fmt::Display>(&mut self, sentence: impl fmt::Display, expected: T, got: T) {
        self.checked += 1;
        if expected != got {
            self.failures.push(Failure {
                sentence: sentence.to_string(),
                expected: expected.to_string(),
                got: got.to_string(),
            });
            self.pass = false;
        }
    }

    pub fn merge(&mut self, other: VerificationReport) {
        self.checked += other.checked;
        self.pass &= other.pass;
        self.failures.extend(other.failures);
    }
}

/// `A <-> T(⌈A⌉)` is true and `A <-> !T(⌈A⌉)` is false for every member `A`
/// with a determinate value.
pub fn verify_biconditionals(fp: &FixpointResult) -> VerificationReport {
    let mut report = VerificationReport::new();
    for (code, a) in fp.universe.iter() {
        if !valuation_unchecked(a, fp).is_determinate() {
            continue;
        }
        let quoted = Sentence::TApp(code.0.clone());
        let positive = Sentence::iff(a.clone(), quoted.clone());
        let negative = Sentence::iff(a.clone(), Sentence::not(quoted));
        report.check(&positive, Valuation::True, valuation_unchecked(&positive, fp));
        report.check(&negative, Valuation::False, valuation_unchecked(&negative, fp));
    }
    report
}

/// For every base member `A`: `A` is true in the model iff `A` is true iff
/// `T(⌈A⌉)` is true, and likewise for false.
pub fn verify_base_agreement(fp: &FixpointResult, m: &FiniteModel) -> VerificationReport {
    let mut report = VerificationReport::new();
    for (code, a) in fp.universe.iter() {
        let Sentence::Base(phi) = a else { continue };
        let expected = match m.eval(phi) {
            Ok(v) => Valuation::from(v),
            Err(e) => {
                report.check(a, "evaluable".to_string(), e.to_string());
                continue;
            }
        };
        report.check(a, expected, valuation_unchecked(a, fp));
        let quoted = Sentence::TApp(code.0.clone());
        report.check(&quoted, expected, valuation_unchecked(&quoted, fp));
    }
    report
}

fn classical(op: usize, a: bool, b: bool) -> bool {
    match op {
        0 => a || b,
        1 => a && b,
        2 => !a || b,
        _ => a == b,
    }
}

fn compose(op: usize, a: &Sentence, b: &Sentence) -> Sentence {
    let (a, b) = (a.clone(), b.clone());
    match op {
        0 => Sentence::or(a, b),
        1 => Sentence::and(a, b),
        2 => Sentence::imp(a, b),
        _ => Sentence::iff(a, b),
    }
}

/// Classical truth tables for `!`, `|`, `&`, `->`, `<->` over determinate
/// members. At most `max_pairs` ordered pairs are examined.
pub fn verify_truth_tables(fp: &FixpointResult, max_pairs: usize) -> VerificationReport {
    let mut report = VerificationReport::new();
    let determinate: Vec<(&Sentence, bool)> = fp
        .universe
        .sentences()
        .filter_map(|s| valuation_unchecked(s, fp).as_bool().map(|v| (s, v)))
        .collect();
    for &(a, va) in &determinate {
        let neg = Sentence::not(a.clone());
        report.check(&neg, Valuation::from(!va), valuation_unchecked(&neg, fp));
    }
    let pairs = determinate
        .iter()
        .flat_map(|x| determinate.iter().map(move |y| (x, y)))
        .take(max_pairs);
    for (&(a, va), &(b, vb)) in pairs {
        for op in 0..4 {
            let s = compose(op, a, b);
            report.check(&s, Valuation::from(classical(op, va, vb)), valuation_unchecked(&s, fp));
        }
    }
    report
}

/// Result of the demand-driven grounded evaluator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Grounded {
    True,
    False,
    Ungrounded,
}

impl Grounded {
    pub fn as_valuation(self) -> Valuation {
        match self {
            Grounded::True => Valuation::True,
            Grounded::False => Valuation::False,
            Grounded::Ungrounded => Valuation::Undetermined,
        }
    }
}

impl fmt::Display for Grounded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Grounded::True => "true",
            Grounded::False => "false",
            Grounded::Ungrounded => "ungrounded",
        })
    }
}

/// Grounded classification by direct recursion, without stage sets.
///
/// `T(n)` inherits the classification of the sentence `n` codes, which has a
/// strictly smaller code, so the recursion terminates. Results for
/// dereferenced numerals are memoized.
pub struct GroundedEvaluator<'m> {
    model: &'m FiniteModel,
    memo: HashMap<BigUint, Grounded>,
}

impl<'m> GroundedEvaluator<'m> {
    pub fn new(model: &'m FiniteModel) -> Self {
        GroundedEvaluator {
            model,
            memo: HashMap::new(),
        }
    }

    pub fn classify(&mut self, s: &Sentence) -> Grounded {
        use Grounded::*;
        match s {
            Sentence::Base(phi) => match self.model.eval(phi) {
                Ok(true) => True,
                Ok(false) => False,
                Err(_) => Ungrounded,
            },
            Sentence::TApp(n) => {
                if let Some(&g) = self.memo.get(n) {
                    return g;
                }
                let g = match self.model.decode_sentence(&GodelCode(n.clone())) {
                    Some(a) => self.classify(&a),
                    None => Ungrounded,
                };
                self.memo.insert(n.clone(), g);
                g
            }
            Sentence::Not(a) => match self.classify(a) {
                True => False,
                False => True,
                Ungrounded => Ungrounded,
            },
            Sentence::Or(a, b) => match (self.classify(a), self.classify(b)) {
                (True, _) | (_, True) => True,
                (False, False) => False,
                _ => Ungrounded,
            },
            Sentence::And(a, b) => match (self.classify(a), self.classify(b)) {
                (False, _) | (_, False) => False,
                (True, True) => True,
                _ => Ungrounded,
            },
            Sentence::Imp(a, b) => match (self.classify(a), self.classify(b)) {
                (False, _) | (_, True) => True,
                (True, False) => False,
                _ => Ungrounded,
            },
            Sentence::Iff(a, b) => match (self.classify(a), self.classify(b)) {
                (Ungrounded, _) | (_, Ungrounded) => Ungrounded,
                (x, y) => {
                    if x == y {
                        True
                    } else {
                        False
                    }
                }
            },
            // Some sentence is grounded true and infinitely many numerals code
            // nothing, so the existential atom is true and the universal one false.
            Sentence::ExistsT => True,
            Sentence::ForallT => False,
        }
    }
}

pub fn classify_grounded(s: &Sentence, m: &FiniteModel) -> Grounded {
    GroundedEvaluator::new(m).classify(s)
}

/// The grounded evaluator agrees with the stagewise valuation on every member
/// and on the negation of every member.
pub fn verify_grounded_agreement(fp: &FixpointResult) -> VerificationReport {
    let mut report = VerificationReport::new();
    let mut eval = GroundedEvaluator::new(&fp.model);
    for s in fp.universe.pool().values() {
        report.check(s, valuation_unchecked(s, fp), eval.classify(s).as_valuation());
    }
    report
}

/// Valuations of all universe members, ascending by code.
pub fn valuate_universe(fp: &FixpointResult) -> Vec<(GodelCode, Sentence, Valuation)> {
    fp.universe
        .iter()
        .map(|(c, s)| (c.clone(), s.clone(), valuation_unchecked(s, fp)))
        .collect()
}

/// Code of `T(⌈A⌉)` for a sentence `A`.
pub fn quote(a: &Sentence) -> Sentence {
    Sentence::TApp(encode(a).0)
}
