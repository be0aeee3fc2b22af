//! Consistency, soundness and the iteration `U_{n+1} = G(U_n)` to the least
//! consistent fixed point over a finite universe.
//!
//! Stages are tracked exactly on the universe's pool (members and their
//! negations), which is every code the operator consults when deciding a
//! member. A strict step newly decides at least one member, so from `∅` the
//! iteration stabilizes within `|universe| + 1` steps.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::godel::GodelCode;
use crate::model::FiniteModel;
use crate::operator::{contains_negation_of, in_g, judge, SymbolicCodeSet};
use crate::pairing::pair_u64;
use crate::syntax::Sentence;
use crate::universe::Universe;

/// No sentence `A` has both `#A` and `#!A` in `U`.
///
/// Only explicit members need checking: the flagged part `G(∅)` is
/// consistent on its own because base evaluation is total.
pub fn is_consistent(u: &SymbolicCodeSet, m: &FiniteModel) -> bool {
    u.explicit.iter().all(|c| {
        if u.explicit.contains(&GodelCode(pair_u64(2, &c.0))) {
            return false;
        }
        if !u.flag {
            return true;
        }
        let Some(s) = m.decode_sentence(c) else {
            return true;
        };
        if contains_negation_of(u, &s, m) {
            return false;
        }
        match &s {
            Sentence::Not(inner) => !u.contains_sentence(&crate::godel::encode(inner), inner, m),
            _ => true,
        }
    })
}

/// `U ⊆ G(U)`, with the flagged part tested on the universe's pool.
pub fn is_sound(u: &SymbolicCodeSet, m: &FiniteModel, universe: &Universe) -> bool {
    let explicit_ok = u.explicit.iter().all(|c| match m.decode_sentence(c) {
        Some(s) => in_g(&s, u, m),
        None => false,
    });
    let ground = SymbolicCodeSet::empty();
    let flagged_ok = !u.flag
        || universe
            .pool()
            .values()
            .filter(|s| in_g(s, &ground, m))
            .all(|s| in_g(s, u, m));
    explicit_ok && flagged_ok
}

/// One application of `G`, restricted to the universe's pool. The result
/// always carries the flag: every `G(U)` includes `G(∅)`.
pub fn step(u: &SymbolicCodeSet, m: &FiniteModel, universe: &Universe) -> SymbolicCodeSet {
    let mut out = SymbolicCodeSet::new([], true);
    for (code, s) in universe.iter() {
        let (g, f) = judge(s, u, m);
        if g {
            out.explicit.insert(code.clone());
        }
        if f {
            out.explicit.insert(crate::godel::encode(&Sentence::not(s.clone())));
        }
    }
    out
}

/// Stage sets `U_0 ⊆ U_1 ⊆ … ⊆ U_k*` with `U_k* = G(U_k*)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StageTrace {
    pub stages: Vec<SymbolicCodeSet>,
    pub stabilized_at: usize,
}

#[derive(Serialize, Deserialize)]
struct StageJson {
    index: usize,
    explicit: Vec<GodelCode>,
    flag: bool,
    added: Vec<GodelCode>,
}

#[derive(Serialize, Deserialize)]
struct TraceJson {
    stages: Vec<StageJson>,
    stabilized_at: usize,
}

impl StageTrace {
    /// Codes in stage `i` that are not in stage `i − 1`.
    pub fn added(&self, i: usize) -> Vec<GodelCode> {
        match i.checked_sub(1) {
            None => self.stages[0].explicit.iter().cloned().collect(),
            Some(prev) => self.stages[i]
                .explicit
                .difference(&self.stages[prev].explicit)
                .cloned()
                .collect(),
        }
    }

    pub fn final_set(&self) -> &SymbolicCodeSet {
        &self.stages[self.stabilized_at]
    }

    pub fn to_json(&self) -> serde_json::Value {
        let stages = self
            .stages
            .iter()
            .enumerate()
            .map(|(index, s)| StageJson {
                index,
                explicit: s.explicit.iter().cloned().collect(),
                flag: s.flag,
                added: self.added(index),
            })
            .collect();
        serde_json::to_value(TraceJson {
            stages,
            stabilized_at: self.stabilized_at,
        })
        .expect("trace serializes")
    }
}

/// A consistent fixed point reached by iteration, with its provenance.
#[derive(Clone, Debug)]
pub struct FixpointResult {
    pub universe: Universe,
    pub model: FiniteModel,
    pub set: SymbolicCodeSet,
    pub trace: StageTrace,
}

/// Iterates `G` from `seed` until two consecutive stages agree.
pub fn iterate_from(
    seed: SymbolicCodeSet,
    universe: &Universe,
    m: &FiniteModel,
    budget: usize,
) -> Result<FixpointResult> {
    let mut stages = vec![seed];
    for k in 0..budget {
        let next = step(&stages[k], m, universe);
        if next == stages[k] {
            let trace = StageTrace {
                stages,
                stabilized_at: k,
            };
            return Ok(FixpointResult {
                universe: universe.clone(),
                model: m.clone(),
                set: trace.final_set().clone(),
                trace,
            });
        }
        stages.push(next);
    }
    Err(Error::IterationBudget(budget))
}

/// The least consistent fixed point of `G` on `universe`, from `U_0 = ∅`.
pub fn least_fixed_point(universe: &Universe, m: &FiniteModel) -> Result<FixpointResult> {
    iterate_from(SymbolicCodeSet::empty(), universe, m, universe.len() + 2)
}

/// Consistency of the union of a chain. Fails if the sets are not pairwise
/// comparable under inclusion.
pub fn check_chain_union(chain: &[SymbolicCodeSet], m: &FiniteModel) -> Result<bool> {
    for (i, a) in chain.iter().enumerate() {
        for b in &chain[i + 1..] {
            if !a.is_subset(b, m) && !b.is_subset(a, m) {
                return Err(Error::NotAChain);
            }
        }
    }
    let union = chain.iter().fold(SymbolicCodeSet::empty(), |acc, u| acc.union(u));
    Ok(is_consistent(&union, m))
}

/// Every consistent fixed point of `step` whose explicit part lies in the
/// universe's pool. Exponential in the pool size; intended for universes of
/// at most a handful of sentences.
pub fn exhaustive_fixed_points(universe: &Universe, m: &FiniteModel) -> Vec<SymbolicCodeSet> {
    let pool: Vec<GodelCode> = universe.pool().into_keys().collect();
    assert!(pool.len() <= 20, "exhaustive search over {} codes", pool.len());
    let mut out = Vec::new();
    for mask in 0u32..(1 << pool.len()) {
        for flag in [false, true] {
            let explicit = pool
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, c)| c.clone());
            let u = SymbolicCodeSet::new(explicit, flag);
            if is_consistent(&u, m) && step(&u, m, universe) == u {
                out.push(u);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::godel::encode;
    use crate::syntax::Formula;

    fn m() -> FiniteModel {
        FiniteModel::trivial()
    }

    fn id() -> Sentence {
        Sentence::base(Formula::identity())
    }

    fn codes(vals: &[u64]) -> Vec<GodelCode> {
        vals.iter().map(|&v| GodelCode::from(v)).collect()
    }

    fn worked_universe() -> Universe {
        Universe::closure(&[Sentence::t(702u32)], &m(), 100).unwrap()
    }

    #[test]
    fn consistency_examples() {
        assert!(is_consistent(&SymbolicCodeSet::empty(), &m()));
        let both = SymbolicCodeSet::new([encode(&id()), encode(&Sentence::not(id()))], false);
        assert!(!is_consistent(&both, &m()));
        assert!(is_consistent(&SymbolicCodeSet::new(codes(&[702]), true), &m()));
        // The flag supplies `!(exists v0. !(v0 = v0))`; adding its negand clashes.
        let absurd = encode(&Sentence::base(Formula::absurdity()));
        assert!(!is_consistent(&SymbolicCodeSet::new([absurd], true), &m()));
    }

    #[test]
    fn soundness_examples() {
        let u = worked_universe();
        assert!(is_sound(&SymbolicCodeSet::empty(), &m(), &u));
        assert!(is_sound(&SymbolicCodeSet::new(codes(&[702]), false), &m(), &u));
        assert!(!is_sound(&SymbolicCodeSet::new([encode(&Sentence::t(702u32))], false), &m(), &u));
    }

    #[test]
    fn step_examples() {
        let u = worked_universe();
        let s1 = step(&SymbolicCodeSet::empty(), &m(), &u);
        assert_eq!(s1, SymbolicCodeSet::new(codes(&[702]), true));
        let s2 = step(&s1, &m(), &u);
        assert_eq!(s2, SymbolicCodeSet::new(codes(&[702, 248158]), true));
        assert_eq!(step(&s2, &m(), &u), s2);
    }

    #[test]
    fn worked_iteration() {
        let fp = least_fixed_point(&worked_universe(), &m()).unwrap();
        assert_eq!(fp.trace.stabilized_at, 2);
        assert_eq!(fp.trace.stages[0], SymbolicCodeSet::empty());
        assert_eq!(fp.set, SymbolicCodeSet::new(codes(&[702, 248158]), true));
        assert_eq!(fp.trace.added(2), codes(&[248158]));
        let json = fp.trace.to_json();
        assert_eq!(json["stabilized_at"], 2);
        assert_eq!(json["stages"][2]["explicit"], serde_json::json!(["702", "248158"]));
        assert_eq!(json["stages"][1]["flag"], true);
    }

    #[test]
    fn quantified_atoms_in_the_fixed_point() {
        let u = Universe::closure(&[Sentence::ExistsT, Sentence::ForallT, id()], &m(), 100).unwrap();
        let fp = least_fixed_point(&u, &m()).unwrap();
        let exists = encode(&Sentence::ExistsT);
        assert!(!fp.trace.stages[1].explicit.contains(&exists));
        assert!(fp.trace.stages[2].explicit.contains(&exists));
        assert!(fp.set.explicit.contains(&encode(&Sentence::not(Sentence::ForallT))));
        assert!(!fp.set.explicit.contains(&encode(&Sentence::ForallT)));
    }

    #[test]
    fn empty_universe_stabilizes_at_one() {
        let fp = least_fixed_point(&Universe::empty(), &m()).unwrap();
        assert_eq!(fp.trace.stabilized_at, 1);
        assert_eq!(fp.set, SymbolicCodeSet::new([], true));
    }

    #[test]
    fn chain_unions() {
        let fp = least_fixed_point(&worked_universe(), &m()).unwrap();
        assert!(check_chain_union(&fp.trace.stages, &m()).unwrap());
        let a = SymbolicCodeSet::new([encode(&id())], false);
        let b = SymbolicCodeSet::new([encode(&Sentence::not(id()))], false);
        assert!(check_chain_union(&[SymbolicCodeSet::empty(), a.clone()], &m()).unwrap());
        assert!(matches!(check_chain_union(&[a, b], &m()), Err(Error::NotAChain)));
    }

    #[test]
    fn least_among_all_fixed_points() {
        let u = worked_universe();
        let lfp = least_fixed_point(&u, &m()).unwrap().set;
        let all = exhaustive_fixed_points(&u, &m());
        assert!(all.contains(&lfp));
        assert!(all.iter().all(|fp| lfp.is_subset(fp, &m())));
    }
}
