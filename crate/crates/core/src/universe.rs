//! Finite, referentially closed carriers of sentences.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::godel::{encode, GodelCode};
use crate::model::FiniteModel;
use crate::syntax::Sentence;

pub const DEFAULT_CLOSURE_CAP: usize = 10_000;

/// A finite set of sentences closed under immediate subsentences and under
/// dereferencing `T(n)` when `n` codes a sentence of the model's language.
///
/// Members are ordered by code. Subsentences and referents always have
/// smaller codes than the sentences mentioning them, so this order is also a
/// dependency order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Universe {
    by_code: BTreeMap<GodelCode, Sentence>,
    by_sentence: HashMap<Sentence, GodelCode>,
}

impl Universe {
    pub fn empty() -> Universe {
        Universe::default()
    }

    /// Smallest closed superset of `seed`. Fails if it would exceed `cap`
    /// sentences or if a seed sentence is not over the model's signature.
    pub fn closure<'a, I>(seed: I, model: &FiniteModel, cap: usize) -> Result<Universe>
    where
        I: IntoIterator<Item = &'a Sentence>,
    {
        let mut u = Universe::empty();
        let mut work: Vec<Sentence> = Vec::new();
        for s in seed {
            model.check_sentence(s)?;
            work.push(s.clone());
        }
        while let Some(s) = work.pop() {
            if u.by_sentence.contains_key(&s) {
                continue;
            }
            if u.len() == cap {
                return Err(Error::ClosureCap(cap));
            }
            work.extend(s.children().into_iter().cloned());
            if let Sentence::TApp(n) = &s {
                if let Some(referent) = model.decode_sentence(&GodelCode(n.clone())) {
                    work.push(referent);
                }
            }
            let code = encode(&s);
            u.by_code.insert(code.clone(), s.clone());
            u.by_sentence.insert(s, code);
        }
        Ok(u)
    }

    pub fn len(&self) -> usize {
        self.by_code.len()
    }

    pub fn is_empty(&self) -> bool {
        self.by_code.is_empty()
    }

    pub fn contains(&self, s: &Sentence) -> bool {
        self.by_sentence.contains_key(s)
    }

    pub fn contains_code(&self, c: &GodelCode) -> bool {
        self.by_code.contains_key(c)
    }

    pub fn get(&self, c: &GodelCode) -> Option<&Sentence> {
        self.by_code.get(c)
    }

    pub fn code_of(&self, s: &Sentence) -> Option<&GodelCode> {
        self.by_sentence.get(s)
    }

    /// Members in ascending code order.
    pub fn iter(&self) -> impl Iterator<Item = (&GodelCode, &Sentence)> {
        self.by_code.iter()
    }

    pub fn sentences(&self) -> impl Iterator<Item = &Sentence> {
        self.by_code.values()
    }

    pub fn codes(&self) -> impl Iterator<Item = &GodelCode> {
        self.by_code.keys()
    }

    /// Members together with their negations `!A`, ascending by code. Stage
    /// sets are tracked exactly on this pool: `T(⌈A⌉)` is decided by whether
    /// `#A` or `#!A` is in the stage.
    pub fn pool(&self) -> BTreeMap<GodelCode, Sentence> {
        let mut pool = self.by_code.clone();
        for s in self.by_code.values() {
            let neg = Sentence::not(s.clone());
            pool.insert(encode(&neg), neg);
        }
        pool
    }

    pub fn is_subset(&self, other: &Universe) -> bool {
        self.by_code.keys().all(|c| other.contains_code(c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::Formula;

    fn close(seed: &[Sentence]) -> Universe {
        Universe::closure(seed, &FiniteModel::trivial(), 100).unwrap()
    }

    #[test]
    fn dereferences_coding_numerals() {
        let u = close(&[Sentence::t(702u32)]);
        let members: Vec<_> = u.sentences().cloned().collect();
        assert_eq!(members, vec![Sentence::base(Formula::identity()), Sentence::t(702u32)]);
    }

    #[test]
    fn atomic_quantifier_has_no_references() {
        let u = close(&[Sentence::ExistsT]);
        assert_eq!(u.len(), 1);
    }

    #[test]
    fn non_coding_referent_is_dropped() {
        // 1 codes T(0); 0 codes nothing.
        let top = Sentence::iff(Sentence::t(1u32), Sentence::t(1u32));
        let u = close(std::slice::from_ref(&top));
        let members: Vec<_> = u.sentences().cloned().collect();
        assert_eq!(members, vec![Sentence::t(0u32), Sentence::t(1u32), top]);
    }

    #[test]
    fn referents_outside_the_signature_are_not_followed() {
        let rel = Sentence::base(Formula::Rel("P".into(), vec![crate::syntax::Term::Elem(0)]));
        let n = encode(&rel).0;
        let u = close(&[Sentence::TApp(n)]);
        assert_eq!(u.len(), 1);
    }

    #[test]
    fn cap_is_enforced() {
        let seed = [Sentence::and(Sentence::t(702u32), Sentence::ExistsT)];
        let err = Universe::closure(&seed, &FiniteModel::trivial(), 3).unwrap_err();
        assert!(matches!(err, Error::ClosureCap(3)));
        assert_eq!(Universe::closure(&seed, &FiniteModel::trivial(), 4).unwrap().len(), 4);
    }

    #[test]
    fn pool_adds_negations() {
        let u = close(&[Sentence::t(702u32)]);
        let pool = u.pool();
        assert_eq!(pool.len(), 4);
        assert!(pool.values().any(|s| *s == Sentence::not(Sentence::t(702u32))));
    }
}
