//! Property suites over concrete configurations, shared by the command line
//! and the test targets.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::fixpoint::{check_chain_union, exhaustive_fixed_points, is_consistent, is_sound, least_fixed_point, step};
use crate::gen::{random_consistent_set, random_model, random_subset, random_universe};
use crate::model::FiniteModel;
use crate::operator::{judge, SymbolicCodeSet};
use crate::regress::{analyze_regress, f_truth, justifies_in, worlds, OmegaSet, Pivot, Statement};
use crate::truth::{
    verify_base_agreement, verify_biconditionals, verify_grounded_agreement, verify_truth_tables,
    VerificationReport,
};
use crate::universe::Universe;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Consistency,
    Monotone,
    Chain,
    Fixpoint,
    Leastness,
    Biconditional,
    Agreement,
    Tables,
    Grounded,
    Regress,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Consistency,
        Suite::Monotone,
        Suite::Chain,
        Suite::Fixpoint,
        Suite::Leastness,
        Suite::Biconditional,
        Suite::Agreement,
        Suite::Tables,
        Suite::Grounded,
        Suite::Regress,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Consistency => "consistency",
            Suite::Monotone => "monotone",
            Suite::Chain => "chain",
            Suite::Fixpoint => "fixpoint",
            Suite::Leastness => "leastness",
            Suite::Biconditional => "biconditional",
            Suite::Agreement => "agreement",
            Suite::Tables => "tables",
            Suite::Grounded => "grounded",
            Suite::Regress => "regress",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

/// A model together with a universe over it.
#[derive(Clone, Debug)]
pub struct Config {
    pub model: FiniteModel,
    pub universe: Universe,
}

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    /// Random stage sets drawn per configuration.
    pub samples: usize,
    pub rng_seed: u64,
    /// Ordered pairs examined per configuration by the truth-table suite.
    pub table_pairs: usize,
    /// Universes larger than this are skipped by the exhaustive search.
    pub leastness_max: usize,
    pub regress_max_natural: u64,
    pub regress_horizon: u64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            samples: 20,
            rng_seed: 0,
            table_pairs: 400,
            leastness_max: 4,
            regress_max_natural: 6,
            regress_horizon: 10,
        }
    }
}

/// `count` random configurations with universes of at most `max_size` sentences.
pub fn random_configs(rng_seed: u64, count: usize, max_size: usize) -> Vec<Config> {
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    (0..count)
        .map(|_| {
            let model = random_model(&mut rng);
            let universe = random_universe(&mut rng, &model, max_size);
            Config { model, universe }
        })
        .collect()
}

fn show(u: &SymbolicCodeSet) -> String {
    let codes: Vec<String> = u.explicit.iter().map(|c| c.to_string()).collect();
    format!("U = {{{}}}{}", codes.join(", "), if u.flag { " + G(∅)" } else { "" })
}

/// `G(U)` stays consistent and never overlaps `F(U)` on the pool, for random
/// consistent `U`.
pub fn consistency(cfg: &Config, rng: &mut impl Rng, samples: usize) -> VerificationReport {
    let mut report = VerificationReport::new();
    let (m, univ) = (&cfg.model, &cfg.universe);
    let pool = univ.pool();
    for _ in 0..samples {
        let u = random_consistent_set(rng, univ, m);
        let next = step(&u, m, univ);
        report.check(show(&u), "G(U) consistent", if is_consistent(&next, m) { "G(U) consistent" } else { "G(U) inconsistent" });
        for s in pool.values() {
            let (g, f) = judge(s, &u, m);
            report.check(format!("{s} under {}", show(&u)), false, g && f);
        }
    }
    report
}

/// `U ⊆ V` implies `G(U) ⊆ G(V)` and pointwise monotone verdicts.
pub fn monotone(cfg: &Config, rng: &mut impl Rng, samples: usize) -> VerificationReport {
    let mut report = VerificationReport::new();
    let (m, univ) = (&cfg.model, &cfg.universe);
    let pool = univ.pool();
    for _ in 0..samples {
        let v = random_consistent_set(rng, univ, m);
        let u = random_subset(rng, &v);
        let ok = step(&u, m, univ).is_subset(&step(&v, m, univ), m);
        report.check(format!("{} ⊆ {}", show(&u), show(&v)), true, ok);
        for s in pool.values() {
            let (gu, fu) = judge(s, &u, m);
            let (gv, fv) = judge(s, &v, m);
            report.check(format!("{s}"), true, (!gu || gv) && (!fu || fv));
        }
    }
    report
}

/// Unions of every prefix of the stage trace are consistent.
pub fn chain(cfg: &Config) -> Result<VerificationReport> {
    let fp = least_fixed_point(&cfg.universe, &cfg.model)?;
    let mut report = VerificationReport::new();
    for k in 0..fp.trace.stages.len() {
        let ok = check_chain_union(&fp.trace.stages[..=k], &cfg.model)?;
        report.check(format!("stages 0..={k}"), true, ok);
    }
    Ok(report)
}

/// Stabilization bound, soundness and strict growth of every stage, and the
/// fixed-point property of the result.
pub fn fixpoint(cfg: &Config) -> Result<VerificationReport> {
    let (m, univ) = (&cfg.model, &cfg.universe);
    let fp = least_fixed_point(univ, m)?;
    let mut report = VerificationReport::new();
    let bound = univ.len() + 1;
    report.check("stabilization index", true, fp.trace.stabilized_at <= bound);
    for (i, stage) in fp.trace.stages.iter().enumerate() {
        let next = step(stage, m, univ);
        report.check(format!("U_{i} sound"), true, stage.is_subset(&next, m) && is_sound(stage, m, univ));
        if i < fp.trace.stabilized_at {
            report.check(format!("U_{i} ⊊ U_{}", i + 1), true, next != *stage);
        }
    }
    report.check("lfp consistent", true, is_consistent(&fp.set, m));
    report.check("lfp = G(lfp)", true, step(&fp.set, m, univ) == fp.set);
    Ok(report)
}

/// The computed fixed point lies below every consistent fixed point found by
/// exhaustive search. Universes above `max_size` are skipped.
pub fn leastness(cfg: &Config, max_size: usize) -> Result<VerificationReport> {
    let mut report = VerificationReport::new();
    if cfg.universe.len() > max_size {
        return Ok(report);
    }
    let lfp = least_fixed_point(&cfg.universe, &cfg.model)?.set;
    let all = exhaustive_fixed_points(&cfg.universe, &cfg.model);
    report.check(show(&lfp), true, all.contains(&lfp));
    for other in &all {
        report.check(format!("{} ⊆ {}", show(&lfp), show(other)), true, lfp.is_subset(other, &cfg.model));
    }
    Ok(report)
}

/// Entailment and justification conditions on the regress, the lemma
/// clauses, saturation exactly at `{ω}`, and the pivot reduction, over every
/// `Z` with naturals in `{0, …, max_natural}`.
pub fn regress_family(max_natural: u64, horizon: u64) -> Result<VerificationReport> {
    let mut report = VerificationReport::new();
    let width = max_natural + 1;
    for mask in 0u64..(1 << width) {
        for has_omega in [false, true] {
            let naturals: Vec<u64> = (0..width).filter(|i| mask & (1 << i) != 0).collect();
            let Ok(z) = OmegaSet::new(naturals.iter().copied(), has_omega) else {
                continue;
            };
            let label = format!("Z = {naturals:?}{}", if has_omega { " ∪ {ω}" } else { "" });
            let r = analyze_regress(&z, horizon)?;
            report.check(&label, true, r.conditions.entails_predecessor);
            report.check(&label, true, r.conditions.disjunction_not_entailing);
            report.check(&label, true, r.conditions.disjunction_not_justifying);
            report.check(&label, true, r.lemma.a.is_ok() && r.lemma.b.is_ok() && r.lemma.c.is_ok());
            report.check(&label, z.is_omega_singleton(), r.saturated);
            report.check(&label, true, r.f0_contingent);
            for i in 0..=horizon {
                // Direct enumeration of Z's listed members; ω exceeds every natural.
                let direct = naturals.iter().all(|&beta| i < beta);
                report.check(format!("F_{i} under {label}"), direct, f_truth(i, &z));
            }
        }
    }
    // Lower disjunctions justify nothing in any world, not only under the sampled Z.
    for i in 1..=horizon {
        let below = Statement::disjunction_below(i);
        let none = worlds(horizon).all(|w: Pivot| !justifies_in(&below, &Statement::F(i), w));
        report.check(format!("F_0 ∨ … ∨ F_{} does not justify F_{i}", i - 1), true, none);
    }
    Ok(report)
}

/// Runs `suite` over every configuration and merges the reports.
pub fn run(suite: Suite, configs: &[Config], opts: &SuiteOptions) -> Result<VerificationReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.rng_seed ^ (suite as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    let mut report = VerificationReport::new();
    if suite == Suite::Regress {
        return regress_family(opts.regress_max_natural, opts.regress_horizon);
    }
    for cfg in configs {
        let part = match suite {
            Suite::Consistency => consistency(cfg, &mut rng, opts.samples),
            Suite::Monotone => monotone(cfg, &mut rng, opts.samples),
            Suite::Chain => chain(cfg)?,
            Suite::Fixpoint => fixpoint(cfg)?,
            Suite::Leastness => leastness(cfg, opts.leastness_max)?,
            Suite::Biconditional => verify_biconditionals(&least_fixed_point(&cfg.universe, &cfg.model)?),
            Suite::Agreement => verify_base_agreement(&least_fixed_point(&cfg.universe, &cfg.model)?, &cfg.model),
            Suite::Tables => verify_truth_tables(&least_fixed_point(&cfg.universe, &cfg.model)?, opts.table_pairs),
            Suite::Grounded => verify_grounded_agreement(&least_fixed_point(&cfg.universe, &cfg.model)?),
            Suite::Regress => unreachable!(),
        };
        report.merge(part);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_pass_on_a_few_random_configs() {
        let configs = random_configs(11, 8, 8);
        let opts = SuiteOptions {
            samples: 5,
            ..SuiteOptions::default()
        };
        for suite in Suite::ALL {
            if suite == Suite::Regress {
                continue;
            }
            let r = run(suite, &configs, &opts).unwrap();
            assert!(r.pass, "{suite}: {:?}", r.failures.first());
        }
    }

    #[test]
    fn regress_family_small() {
        let r = regress_family(3, 6).unwrap();
        assert!(r.pass, "{:?}", r.failures.first());
        assert!(r.checked > 0);
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("everything".parse::<Suite>().is_err());
    }
}
