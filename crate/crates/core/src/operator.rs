//! The operator `U ↦ (G(U), F(U))`.
//!
//! A stage set is represented by [`SymbolicCodeSet`]: a finite set of
//! explicit codes plus a flag recording that the set includes all of `G(∅)`.
//! `G(∅)` is infinite (every true base sentence lies in it) but decidable,
//! and every stage `G^k(∅)` with `k ≥ 1` includes it.
//!
//! `T` ranges over all numerals, infinitely many of which code no sentence.
//! Hence `exists x. T(x)` is in `G(U)` exactly when `U` is nonempty and never
//! in `F(U)`, and `forall x. T(x)` is never in `G(U)` and is in `F(U)` exactly
//! when `U` holds the code of some negation `!A`.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::godel::{encode, GodelCode};
use crate::model::FiniteModel;
use crate::pairing::{pair_u64, unpair};
use crate::syntax::Sentence;

/// A set of codes: the explicit part, plus all of `G(∅)` when `flag` is set.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolicCodeSet {
    pub explicit: BTreeSet<GodelCode>,
    pub flag: bool,
}

fn is_negation_code(c: &GodelCode) -> bool {
    unpair(&c.0).0.to_u64() == Some(2)
}

fn negation_code(c: &BigUint) -> GodelCode {
    GodelCode(pair_u64(2, c))
}

impl SymbolicCodeSet {
    pub fn empty() -> SymbolicCodeSet {
        SymbolicCodeSet::default()
    }

    pub fn new(explicit: impl IntoIterator<Item = GodelCode>, flag: bool) -> SymbolicCodeSet {
        SymbolicCodeSet {
            explicit: explicit.into_iter().collect(),
            flag,
        }
    }

    pub fn is_nonempty(&self) -> bool {
        self.flag || !self.explicit.is_empty()
    }

    /// Whether some `#!A` is a member. `G(∅)` holds `!(exists v0. !(v0 = v0))`.
    pub fn has_negation(&self) -> bool {
        self.flag || self.explicit.iter().any(is_negation_code)
    }

    /// Membership of `code`, where `sentence` is the sentence it codes.
    pub fn contains_sentence(&self, code: &GodelCode, sentence: &Sentence, m: &FiniteModel) -> bool {
        self.explicit.contains(code) || (self.flag && in_g(sentence, &SymbolicCodeSet::empty(), m))
    }

    pub fn contains(&self, code: &GodelCode, m: &FiniteModel) -> bool {
        if self.explicit.contains(code) {
            return true;
        }
        self.flag
            && m.decode_sentence(code)
                .is_some_and(|s| in_g(&s, &SymbolicCodeSet::empty(), m))
    }

    pub fn union(&self, other: &SymbolicCodeSet) -> SymbolicCodeSet {
        SymbolicCodeSet {
            explicit: self.explicit.union(&other.explicit).cloned().collect(),
            flag: self.flag || other.flag,
        }
    }

    /// `self ⊆ other`. A flagged set is never inside an unflagged one since
    /// `G(∅)` is infinite.
    pub fn is_subset(&self, other: &SymbolicCodeSet, m: &FiniteModel) -> bool {
        (!self.flag || other.flag) && self.explicit.iter().all(|c| other.contains(c, m))
    }
}

/// Where a sentence stands relative to `G(U)` and `F(U)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum MembershipVerdict {
    InG,
    InF,
    Neither,
    /// Only reachable when `U` is inconsistent.
    Both,
}

impl MembershipVerdict {
    fn from_pair((g, f): (bool, bool)) -> MembershipVerdict {
        match (g, f) {
            (true, false) => MembershipVerdict::InG,
            (false, true) => MembershipVerdict::InF,
            (false, false) => MembershipVerdict::Neither,
            (true, true) => MembershipVerdict::Both,
        }
    }
}

// (in G(U), in F(U)) in one structural pass.
pub(crate) fn judge(s: &Sentence, u: &SymbolicCodeSet, m: &FiniteModel) -> (bool, bool) {
    match s {
        Sentence::Base(phi) => match m.eval(phi) {
            Ok(v) => (v, !v),
            Err(_) => (false, false),
        },
        Sentence::TApp(n) => {
            let code = GodelCode(n.clone());
            match m.decode_sentence(&code) {
                Some(a) => {
                    let g = u.contains_sentence(&code, &a, m);
                    let neg = negation_code(n);
                    let f = u.explicit.contains(&neg) || (u.flag && judge(&a, &SymbolicCodeSet::empty(), m).1);
                    (g, f)
                }
                None => (false, false),
            }
        }
        Sentence::Not(a) => {
            let (g, f) = judge(a, u, m);
            (f, g)
        }
        Sentence::Or(a, b) => {
            let (ga, fa) = judge(a, u, m);
            let (gb, fb) = judge(b, u, m);
            (ga || gb, fa && fb)
        }
        Sentence::And(a, b) => {
            let (ga, fa) = judge(a, u, m);
            let (gb, fb) = judge(b, u, m);
            (ga && gb, fa || fb)
        }
        Sentence::Imp(a, b) => {
            let (ga, fa) = judge(a, u, m);
            let (gb, fb) = judge(b, u, m);
            (fa || gb, ga && fb)
        }
        Sentence::Iff(a, b) => {
            let (ga, fa) = judge(a, u, m);
            let (gb, fb) = judge(b, u, m);
            ((ga && gb) || (fa && fb), (ga && fb) || (fa && gb))
        }
        Sentence::ExistsT => (u.is_nonempty(), false),
        Sentence::ForallT => (false, u.has_negation()),
    }
}

/// `#s ∈ G(U)`.
pub fn in_g(s: &Sentence, u: &SymbolicCodeSet, m: &FiniteModel) -> bool {
    judge(s, u, m).0
}

/// `#s ∈ F(U)`.
pub fn in_f(s: &Sentence, u: &SymbolicCodeSet, m: &FiniteModel) -> bool {
    judge(s, u, m).1
}

pub fn verdict(s: &Sentence, u: &SymbolicCodeSet, m: &FiniteModel) -> MembershipVerdict {
    MembershipVerdict::from_pair(judge(s, u, m))
}

/// Whether `!s` (as an augmented-language negation) is in `U`.
pub fn contains_negation_of(u: &SymbolicCodeSet, s: &Sentence, m: &FiniteModel) -> bool {
    let neg = Sentence::not(s.clone());
    u.contains_sentence(&encode(&neg), &neg, m)
}
