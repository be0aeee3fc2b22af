//! Seeded random generation of models, sentences, universes and stage sets.

use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::Error;
use crate::fixpoint::is_consistent;
use crate::godel::encode;
use crate::model::{EntryList, FiniteModel, ModelDescription, RelationDescription, Signature};
use crate::operator::SymbolicCodeSet;
use crate::syntax::{Formula, Sentence, Term};
use crate::universe::Universe;

/// A model with domain size 1–3, relations `P/1` and `R/2`, constants `c`, `d`.
pub fn random_model<R: Rng>(rng: &mut R) -> FiniteModel {
    let n = rng.gen_range(1..=3u64);
    let mut p = Vec::new();
    let mut r = Vec::new();
    for a in 0..n {
        if rng.gen_bool(0.5) {
            p.push(vec![a]);
        }
        for b in 0..n {
            if rng.gen_bool(0.4) {
                r.push(vec![a, b]);
            }
        }
    }
    let desc = ModelDescription {
        domain_size: n,
        relations: EntryList(vec![
            ("P".into(), RelationDescription { arity: 1, tuples: p }),
            ("R".into(), RelationDescription { arity: 2, tuples: r }),
        ]),
        constants: EntryList(vec![("c".into(), rng.gen_range(0..n)), ("d".into(), rng.gen_range(0..n))]),
    };
    FiniteModel::validate(&desc).expect("generated model is valid")
}

fn random_term<R: Rng>(rng: &mut R, sig: &Signature, elements: u64, bound: &[u64]) -> Term {
    let consts: Vec<&String> = sig.constants.iter().collect();
    match rng.gen_range(0..3) {
        0 if !bound.is_empty() => Term::Var(*bound.choose(rng).unwrap()),
        1 if !consts.is_empty() => Term::Const(consts.choose(rng).unwrap().to_string()),
        _ => Term::Elem(rng.gen_range(0..elements.max(1))),
    }
}

/// A closed formula over `sig` whose element numerals are below `elements`.
pub fn random_formula<R: Rng>(rng: &mut R, sig: &Signature, elements: u64, depth: u32) -> Formula {
    let mut bound = Vec::new();
    formula_in(rng, sig, elements, depth, &mut bound)
}

fn formula_in<R: Rng>(rng: &mut R, sig: &Signature, elements: u64, depth: u32, bound: &mut Vec<u64>) -> Formula {
    let leaf = depth == 0 || rng.gen_bool(0.3);
    if leaf {
        let rels: Vec<(&String, &usize)> = sig.relations.iter().collect();
        if !rels.is_empty() && rng.gen_bool(0.6) {
            let (name, &arity) = *rels.choose(rng).unwrap();
            let args = (0..arity).map(|_| random_term(rng, sig, elements, bound)).collect();
            return Formula::Rel(name.clone(), args);
        }
        return Formula::Eq(
            random_term(rng, sig, elements, bound),
            random_term(rng, sig, elements, bound),
        );
    }
    let sub = |rng: &mut R, bound: &mut Vec<u64>| formula_in(rng, sig, elements, depth - 1, bound);
    match rng.gen_range(0..7) {
        0 => Formula::not(sub(rng, bound)),
        1 => Formula::or(sub(rng, bound), sub(rng, bound)),
        2 => Formula::and(sub(rng, bound), sub(rng, bound)),
        3 => Formula::imp(sub(rng, bound), sub(rng, bound)),
        4 => Formula::iff(sub(rng, bound), sub(rng, bound)),
        k => {
            let v = rng.gen_range(0..3);
            bound.push(v);
            let body = sub(rng, bound);
            bound.pop();
            if k == 5 {
                Formula::exists(v, body)
            } else {
                Formula::forall(v, body)
            }
        }
    }
}

/// Shape parameters for random sentences.
#[derive(Clone, Debug)]
pub struct SentenceShape {
    pub depth: u32,
    pub base_depth: u32,
    /// Numerals drawn for `T(n)` besides those in `known`.
    pub wild_numerals: bool,
}

impl Default for SentenceShape {
    fn default() -> Self {
        SentenceShape {
            depth: 3,
            base_depth: 2,
            wild_numerals: false,
        }
    }
}

/// A sentence whose `T`-atoms either quote one of `known`, quote a fresh
/// base sentence, or use a small numeral (which usually codes nothing).
pub fn random_sentence<R: Rng>(
    rng: &mut R,
    model: &FiniteModel,
    shape: &SentenceShape,
    known: &[Sentence],
) -> Sentence {
    sentence_in(rng, model, shape, known, shape.depth)
}

fn sentence_in<R: Rng>(
    rng: &mut R,
    model: &FiniteModel,
    shape: &SentenceShape,
    known: &[Sentence],
    depth: u32,
) -> Sentence {
    let sig = model.signature();
    let n = model.domain_size();
    if depth == 0 || rng.gen_bool(0.35) {
        return match rng.gen_range(0..10) {
            0..=2 => Sentence::Base(random_formula(rng, sig, n, shape.base_depth)),
            3 | 4 if !known.is_empty() => Sentence::TApp(encode(known.choose(rng).unwrap()).0),
            3..=5 => Sentence::TApp(encode(&Sentence::Base(random_formula(rng, sig, n, 1))).0),
            6 if shape.wild_numerals => {
                let bytes: Vec<u8> = (0..rng.gen_range(1..24)).map(|_| rng.gen()).collect();
                Sentence::TApp(BigUint::from_bytes_be(&bytes))
            }
            6 | 7 => Sentence::TApp(BigUint::from(rng.gen_range(0..100u32))),
            8 => Sentence::ExistsT,
            _ => Sentence::ForallT,
        };
    }
    let sub = |rng: &mut R| sentence_in(rng, model, shape, known, depth - 1);
    match rng.gen_range(0..5) {
        0 => Sentence::not(sub(rng)),
        1 => Sentence::or(sub(rng), sub(rng)),
        2 => Sentence::and(sub(rng), sub(rng)),
        3 => Sentence::imp(sub(rng), sub(rng)),
        _ => Sentence::iff(sub(rng), sub(rng)),
    }
}

/// Quotation roughly squares a code, so deep quoting chains are cut off here.
pub const MAX_CODE_BITS: u64 = 4096;

/// A referentially closed universe of at most `max_size` sentences, grown
/// from random seeds that may quote one another. Universes holding a code
/// above [`MAX_CODE_BITS`] bits are redrawn.
pub fn random_universe<R: Rng>(rng: &mut R, model: &FiniteModel, max_size: usize) -> Universe {
    loop {
        let shape = SentenceShape {
            depth: rng.gen_range(0..=3),
            base_depth: 1,
            wild_numerals: false,
        };
        let mut seeds: Vec<Sentence> = Vec::new();
        for _ in 0..rng.gen_range(1..=3) {
            let known: Vec<Sentence> = seeds
                .iter()
                .flat_map(all_subsentences)
                .filter(|s| encode(s).0.bits() <= MAX_CODE_BITS / 8)
                .collect();
            seeds.push(random_sentence(rng, model, &shape, &known));
        }
        match Universe::closure(&seeds, model, max_size) {
            Ok(u) if u.codes().all(|c| c.0.bits() <= MAX_CODE_BITS) => return u,
            Ok(_) => continue,
            Err(Error::ClosureCap(_)) => continue,
            Err(e) => panic!("generated seeds are over the model's signature: {e}"),
        }
    }
}

fn all_subsentences(s: &Sentence) -> Vec<Sentence> {
    let mut out = vec![s.clone()];
    for c in s.children() {
        out.extend(all_subsentences(c));
    }
    out
}

/// A consistent set whose explicit part is drawn from the universe's pool.
pub fn random_consistent_set<R: Rng>(rng: &mut R, universe: &Universe, model: &FiniteModel) -> SymbolicCodeSet {
    let pool = universe.pool();
    let density = rng.gen_range(0.0..0.7);
    let explicit: Vec<_> = pool.keys().filter(|_| rng.gen_bool(density)).cloned().collect();
    let mut u = SymbolicCodeSet::new(explicit, rng.gen_bool(0.5));
    // Dropping explicit members never creates a clash, so this terminates.
    while !is_consistent(&u, model) {
        let members: Vec<_> = u.explicit.iter().cloned().collect();
        let victim = members.choose(rng).expect("an inconsistent set has explicit members").clone();
        u.explicit.remove(&victim);
    }
    u
}

/// A random subset of `u`: explicit members kept independently, flag kept
/// or dropped.
pub fn random_subset<R: Rng>(rng: &mut R, u: &SymbolicCodeSet) -> SymbolicCodeSet {
    let explicit: Vec<_> = u.explicit.iter().filter(|_| rng.gen_bool(0.5)).cloned().collect();
    SymbolicCodeSet::new(explicit, u.flag && rng.gen_bool(0.7))
}
