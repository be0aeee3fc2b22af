//! The regress `… F_i, …, F_1, F_0` with `F_i: i < β for every β ∈ Z`,
//! for a nonempty `Z ⊆ ω ∪ {ω}`.
//!
//! `F_i` holds exactly when `i < min Z`, so a candidate `Z` is reduced to
//! its minimum (the pivot) and a "possible world" is a pivot in
//! `ℕ ∪ {ω}`. For statements mentioning indices up to `k`, the pivots
//! `0, …, k` and `ω` already exhaust the distinguishable worlds, which makes
//! entailment decidable by enumeration.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};

/// `min Z`: a natural number or the top element `ω`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Pivot {
    Nat(u64),
    Omega,
}

impl Pivot {
    /// Whether `F_i` holds in this world, i.e. `i < pivot`.
    pub fn satisfies(self, i: u64) -> bool {
        Pivot::Nat(i) < self
    }
}

impl fmt::Display for Pivot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pivot::Nat(n) => write!(f, "{n}"),
            Pivot::Omega => f.write_str("omega"),
        }
    }
}

impl Serialize for Pivot {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Pivot::Nat(n) => s.serialize_u64(*n),
            Pivot::Omega => s.serialize_str("omega"),
        }
    }
}

/// A nonempty subset of `ω ∪ {ω}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OmegaSet {
    naturals: BTreeSet<u64>,
    has_omega: bool,
}

impl OmegaSet {
    pub fn new(naturals: impl IntoIterator<Item = u64>, has_omega: bool) -> Result<OmegaSet> {
        let naturals: BTreeSet<u64> = naturals.into_iter().collect();
        if naturals.is_empty() && !has_omega {
            return Err(Error::Regress("Z must be nonempty".into()));
        }
        Ok(OmegaSet { naturals, has_omega })
    }

    /// `{ω}`.
    pub fn omega() -> OmegaSet {
        OmegaSet {
            naturals: BTreeSet::new(),
            has_omega: true,
        }
    }

    /// Parses a comma-separated list of naturals such as `"3,7"`.
    pub fn parse(list: &str, has_omega: bool) -> Result<OmegaSet> {
        let naturals = list
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<u64>()
                    .map_err(|_| Error::Regress(format!("`{t}` is not a natural number")))
            })
            .collect::<Result<Vec<_>>>()?;
        OmegaSet::new(naturals, has_omega)
    }

    pub fn naturals(&self) -> &BTreeSet<u64> {
        &self.naturals
    }

    pub fn has_omega(&self) -> bool {
        self.has_omega
    }

    pub fn pivot(&self) -> Pivot {
        self.naturals.first().map_or(Pivot::Omega, |&n| Pivot::Nat(n))
    }

    /// Whether this is exactly `{ω}`.
    pub fn is_omega_singleton(&self) -> bool {
        self.naturals.is_empty() && self.has_omega
    }
}

/// Truth of `F_i` under `Z`.
pub fn f_truth(i: u64, z: &OmegaSet) -> bool {
    z.pivot().satisfies(i)
}

/// A statement built from the `F_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Statement {
    F(u64),
    Not(Box<Statement>),
    Or(Vec<Statement>),
    Imp(Box<Statement>, Box<Statement>),
    Iff(Box<Statement>, Box<Statement>),
}

impl Statement {
    /// `F_0 ∨ … ∨ F_{i−1}`.
    pub fn disjunction_below(i: u64) -> Statement {
        Statement::Or((0..i).map(Statement::F).collect())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(a: Statement) -> Statement {
        Statement::Not(Box::new(a))
    }

    pub fn imp(a: Statement, b: Statement) -> Statement {
        Statement::Imp(Box::new(a), Box::new(b))
    }

    pub fn iff(a: Statement, b: Statement) -> Statement {
        Statement::Iff(Box::new(a), Box::new(b))
    }

    pub fn holds_in(&self, world: Pivot) -> bool {
        match self {
            Statement::F(i) => world.satisfies(*i),
            Statement::Not(a) => !a.holds_in(world),
            Statement::Or(xs) => xs.iter().any(|x| x.holds_in(world)),
            Statement::Imp(a, b) => !a.holds_in(world) || b.holds_in(world),
            Statement::Iff(a, b) => a.holds_in(world) == b.holds_in(world),
        }
    }

    pub fn holds(&self, z: &OmegaSet) -> bool {
        self.holds_in(z.pivot())
    }

    /// Largest `F` index mentioned, if any.
    pub fn max_index(&self) -> Option<u64> {
        match self {
            Statement::F(i) => Some(*i),
            Statement::Not(a) => a.max_index(),
            Statement::Or(xs) => xs.iter().filter_map(Statement::max_index).max(),
            Statement::Imp(a, b) | Statement::Iff(a, b) => a.max_index().max(b.max_index()),
        }
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Statement::F(i) => write!(f, "F_{i}"),
            Statement::Not(a) => write!(f, "!{a}"),
            Statement::Or(xs) if xs.is_empty() => f.write_str("false"),
            Statement::Or(xs) => {
                let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
                write!(f, "({})", parts.join(" | "))
            }
            Statement::Imp(a, b) => write!(f, "({a} -> {b})"),
            Statement::Iff(a, b) => write!(f, "({a} <-> {b})"),
        }
    }
}

/// Worlds `0, …, horizon` and `ω`.
pub fn worlds(horizon: u64) -> impl Iterator<Item = Pivot> {
    (0..=horizon).map(Pivot::Nat).chain(std::iter::once(Pivot::Omega))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entailment {
    pub holds: bool,
    /// A world where the antecedent is true and the consequent false.
    pub witness: Option<Pivot>,
}

/// `a` entails `b`: no world makes `a` true and `b` false. The horizon must
/// reach every index mentioned.
pub fn entails(a: &Statement, b: &Statement, horizon: u64) -> Result<Entailment> {
    let needed = a.max_index().max(b.max_index()).unwrap_or(0);
    if needed > horizon {
        return Err(Error::Regress(format!(
            "horizon {horizon} does not reach index {needed}"
        )));
    }
    let witness = worlds(horizon).find(|&w| a.holds_in(w) && !b.holds_in(w));
    Ok(Entailment {
        holds: witness.is_none(),
        witness,
    })
}

fn entails_exact(a: &Statement, b: &Statement) -> bool {
    let horizon = a.max_index().max(b.max_index()).unwrap_or(0);
    entails(a, b, horizon).expect("horizon covers both").holds
}

/// `a` justifies `b` in `world` by one of two clauses:
/// `a` entails `b` and `a` is true, or `a <-> !b` is true and `a` is false.
pub fn justifies_in(a: &Statement, b: &Statement, world: Pivot) -> bool {
    let a_true = a.holds_in(world);
    let modus_ponens = a_true && entails_exact(a, b);
    let contraposed = !a_true && Statement::iff(a.clone(), Statement::not(b.clone())).holds_in(world);
    modus_ponens || contraposed
}

pub fn justifies(a: &Statement, b: &Statement, z: &OmegaSet) -> bool {
    justifies_in(a, b, z.pivot())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClauseCheck {
    Holds,
    Vacuous,
    Violated,
}

impl ClauseCheck {
    fn from_bool(ok: bool) -> ClauseCheck {
        if ok {
            ClauseCheck::Holds
        } else {
            ClauseCheck::Violated
        }
    }

    pub fn is_ok(self) -> bool {
        self != ClauseCheck::Violated
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaClauses {
    /// `F_1` false ⇒ every `F_i` (i > 0) false, and `F_0` justified iff `F_0 <-> !F_1`.
    pub a: ClauseCheck,
    /// `F_n` true ⇒ `F_0 … F_n` true, checked at the largest such `n` in range.
    pub b: ClauseCheck,
    pub b_witness: Option<u64>,
    /// Saturated iff every `F_i` (i > 0) is true, and then `F_0` is justified.
    pub c: ClauseCheck,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Conditions {
    /// `F_i` entails `F_{i−1}` for `1 ≤ i ≤ N`.
    pub entails_predecessor: bool,
    /// `F_0 ∨ … ∨ F_{i−1}` does not entail `F_i`; one counter-world per `i`.
    pub disjunction_not_entailing: bool,
    pub non_entailment_witnesses: Vec<Pivot>,
    /// `F_0 ∨ … ∨ F_{i−1}` does not justify `F_i` under `Z`.
    pub disjunction_not_justifying: bool,
    /// Each `F_i` justifies `F_{i−1}` for `1 ≤ i ≤ N`.
    pub chain_justified_in_window: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegressReport {
    pub horizon: u64,
    pub z: OmegaSet,
    pub pivot: Pivot,
    /// Truth of `F_0, …, F_N`.
    pub truth: Vec<bool>,
    pub conditions: Conditions,
    /// Decided exactly: the justification chain is checked far enough past
    /// a finite pivot to see it break.
    pub saturated: bool,
    pub f0_contingent: bool,
    pub f0_justified: bool,
    pub lemma: LemmaClauses,
}

impl RegressReport {
    /// Every condition and lemma clause came out as the theory predicts.
    pub fn consistent_with_theory(&self) -> bool {
        self.conditions.entails_predecessor
            && self.conditions.disjunction_not_entailing
            && self.conditions.disjunction_not_justifying
            && self.f0_contingent
            && self.lemma.a.is_ok()
            && self.lemma.b.is_ok()
            && self.lemma.c.is_ok()
            && self.saturated == self.z.is_omega_singleton()
    }
}

fn chain_justified(z: &OmegaSet, upto: u64) -> bool {
    (1..=upto).all(|i| justifies(&Statement::F(i), &Statement::F(i - 1), z))
}

pub fn analyze_regress(z: &OmegaSet, horizon: u64) -> Result<RegressReport> {
    if horizon < 2 {
        return Err(Error::Regress(format!("horizon must be at least 2, got {horizon}")));
    }
    let pivot = z.pivot();
    let truth: Vec<bool> = (0..=horizon).map(|i| f_truth(i, z)).collect();

    let mut entails_predecessor = true;
    let mut disjunction_not_entailing = true;
    let mut disjunction_not_justifying = true;
    let mut witnesses = Vec::new();
    for i in 1..=horizon {
        let fi = Statement::F(i);
        let below = Statement::disjunction_below(i);
        entails_predecessor &= entails(&fi, &Statement::F(i - 1), horizon)?.holds;
        let e = entails(&below, &fi, horizon)?;
        disjunction_not_entailing &= !e.holds;
        witnesses.extend(e.witness);
        disjunction_not_justifying &= !justifies(&below, &fi, z);
    }

    // Far enough to reach i = pivot + 1, where a finite pivot breaks the chain.
    let reach = match pivot {
        Pivot::Nat(p) => horizon.max(p + 1),
        Pivot::Omega => horizon,
    };
    let saturated = chain_justified(z, reach);
    let all_true = (1..=reach).all(|i| f_truth(i, z));

    let (f0, f1) = (Statement::F(0), Statement::F(1));
    let f0_justified = justifies(&f1, &f0, z);
    let f0_contingent = worlds(0).any(|w| f0.holds_in(w)) && worlds(0).any(|w| !f0.holds_in(w));

    let a = if truth[1] {
        ClauseCheck::Vacuous
    } else {
        let all_false = truth[1..].iter().all(|t| !t);
        let iff = Statement::iff(f0.clone(), Statement::not(f1.clone())).holds(z);
        ClauseCheck::from_bool(all_false && f0_justified == iff)
    };
    let b_witness = (1..=horizon).rev().find(|&n| truth[n as usize]);
    let b = match b_witness {
        None => ClauseCheck::Vacuous,
        Some(n) => ClauseCheck::from_bool(truth[..=n as usize].iter().all(|&t| t)),
    };
    let c = ClauseCheck::from_bool(saturated == all_true && (!saturated || f0_justified));

    Ok(RegressReport {
        horizon,
        z: z.clone(),
        pivot,
        truth,
        conditions: Conditions {
            entails_predecessor,
            disjunction_not_entailing,
            non_entailment_witnesses: witnesses,
            disjunction_not_justifying,
            chain_justified_in_window: chain_justified(z, horizon),
        },
        saturated,
        f0_contingent,
        f0_justified,
        lemma: LemmaClauses { a, b, b_witness, c },
    })
}
