//! One line per criterion. Exits non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use veritas::gen::{random_model, random_sentence, random_universe, SentenceShape};
use veritas::suites::{self, random_configs, Config, Suite, SuiteOptions};
use veritas::truth::valuate_universe;
use veritas::universe::DEFAULT_CLOSURE_CAP;
use veritas::{
    decode, encode, least_fixed_point, parse_sentence, FiniteModel, Formula, GodelCode, Sentence, Universe,
    Valuation, VerificationReport,
};

const RNG_SEED: u64 = 20_240_601;

fn pi(a: u128, b: u128) -> u128 {
    (a + b) * (a + b + 1) / 2 + b
}

fn roundtrip() -> VerificationReport {
    let mut report = VerificationReport::new();
    let code = |n: u128| GodelCode(BigUint::from(n));
    report.check("T(0)", code(pi(1, 0)), encode(&Sentence::t(0u32)));
    report.check("exists x. T(x)", code(pi(7, 0)), encode(&Sentence::ExistsT));
    report.check("forall x. T(x)", code(pi(8, 0)), encode(&Sentence::ForallT));
    let id = Sentence::base(Formula::identity());
    let v0 = pi(0, 0);
    report.check("[forall v0. v0 = v0]", code(pi(0, pi(8, pi(0, pi(0, pi(v0, v0)))))), encode(&id));
    report.check("702", code(702), encode(&id));

    let mut rng = ChaCha8Rng::seed_from_u64(RNG_SEED);
    let mut model = random_model(&mut rng);
    for i in 0..10_000 {
        if i % 100 == 0 {
            model = random_model(&mut rng);
        }
        // Codes roughly square per nesting level, so depth stays moderate.
        let shape = SentenceShape {
            depth: rng.gen_range(0..=3),
            base_depth: rng.gen_range(1..=2),
            wild_numerals: true,
        };
        let s = random_sentence(&mut rng, &model, &shape, &[]);
        let back = decode(&encode(&s));
        report.check(format!("decode(encode({s}))"), true, back.as_ref() == Some(&s));
        let printed = s.to_string();
        let reparsed = parse_sentence(&printed, model.signature()).ok();
        report.check(format!("parse(print({s}))"), true, reparsed.as_ref() == Some(&s));
    }
    report
}

fn worked_config() -> Config {
    let model = FiniteModel::trivial();
    let seeds = [Sentence::t(702u32), Sentence::base(Formula::identity())];
    let universe = Universe::closure(&seeds, &model, DEFAULT_CLOSURE_CAP).expect("worked universe closes");
    Config { model, universe }
}

// The worked universe plus 199 random ones of at most 12 sentences.
fn main_configs() -> Vec<Config> {
    let mut configs = vec![worked_config()];
    configs.extend(random_configs(RNG_SEED, 199, 12));
    configs
}

// Universes of at most 4 sentences for the exhaustive search.
fn small_configs() -> Vec<Config> {
    random_configs(RNG_SEED + 1, 300, 4)
}

// Universes that always hold both quantified atoms.
fn quantified_configs() -> Vec<Config> {
    let mut rng = ChaCha8Rng::seed_from_u64(RNG_SEED + 2);
    (0..200)
        .map(|_| {
            let model = random_model(&mut rng);
            let extra = random_universe(&mut rng, &model, 10);
            let mut seeds: Vec<Sentence> = extra.sentences().cloned().collect();
            seeds.push(Sentence::ExistsT);
            seeds.push(Sentence::ForallT);
            if rng.gen_bool(0.5) {
                seeds.push(Sentence::not(Sentence::t(encode(&Sentence::ForallT).0)));
            }
            let universe = Universe::closure(&seeds, &model, DEFAULT_CLOSURE_CAP).expect("closes");
            Config { model, universe }
        })
        .collect()
}

fn quantified_closed_forms(configs: &[Config]) -> VerificationReport {
    let mut report = VerificationReport::new();
    for cfg in configs {
        let fp = least_fixed_point(&cfg.universe, &cfg.model).expect("lfp");
        // Direct reading of the rules: some code is in the fixed point, and
        // some negation-rooted code is in it.
        let some_member = fp.set.is_nonempty();
        let some_negation = fp.set.has_negation();
        report.check("lfp nonempty", true, some_member);
        report.check("lfp holds a negation", true, some_negation);
        for (_, s, v) in valuate_universe(&fp) {
            match s {
                Sentence::ExistsT => report.check(&s, Valuation::True, v),
                Sentence::ForallT => report.check(&s, Valuation::False, v),
                _ => {}
            }
        }
    }
    report
}

fn suite(which: Suite, configs: &[Config], opts: &SuiteOptions) -> VerificationReport {
    suites::run(which, configs, opts).unwrap_or_else(|e| {
        let mut r = VerificationReport::new();
        r.check(format!("{which} raised"), String::new(), e.to_string());
        r
    })
}

fn main() -> ExitCode {
    let main = main_configs();
    let small = small_configs();
    let quantified = quantified_configs();
    // 200 configurations × 5 draws = 1,000 sets (or pairs) per suite.
    let opts = SuiteOptions {
        samples: 5,
        rng_seed: RNG_SEED,
        table_pairs: 400,
        leastness_max: 4,
        regress_max_natural: 6,
        regress_horizon: 10,
    };

    type Criterion<'a> = (&'a str, Box<dyn Fn() -> VerificationReport + 'a>);
    let criteria: Vec<Criterion> = vec![
        ("numbering round trip and anchors", Box::new(roundtrip)),
        ("consistency preservation", Box::new(|| suite(Suite::Consistency, &main, &opts))),
        ("monotonicity", Box::new(|| suite(Suite::Monotone, &main, &opts))),
        ("chain unions", Box::new(|| suite(Suite::Chain, &main, &opts))),
        (
            "fixed point and least-ness",
            Box::new(|| {
                let mut r = suite(Suite::Fixpoint, &main, &opts);
                r.merge(suite(Suite::Fixpoint, &small, &opts));
                r.merge(suite(Suite::Leastness, &small, &opts));
                r.merge(suite(Suite::Leastness, &main, &opts));
                r
            }),
        ),
        ("T-biconditionals", Box::new(|| suite(Suite::Biconditional, &main, &opts))),
        ("base agreement", Box::new(|| suite(Suite::Agreement, &main, &opts))),
        (
            "grounded evaluator cross-validation",
            Box::new(|| {
                let mut r = suite(Suite::Grounded, &main, &opts);
                r.merge(suite(Suite::Grounded, &quantified, &opts));
                r
            }),
        ),
        ("classical truth tables", Box::new(|| suite(Suite::Tables, &main, &opts))),
        ("regress family", Box::new(|| suite(Suite::Regress, &[], &opts))),
        ("quantified T closed forms", Box::new(|| quantified_closed_forms(&quantified))),
    ];

    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let report = run();
        let status = if report.pass && report.checked > 0 { "PASS" } else { "FAIL" };
        println!(
            "{status} {:>2} {name}: {} checks, {} failures ({:.2?})",
            i + 1,
            report.checked,
            report.failures.len(),
            start.elapsed()
        );
        for f in report.failures.iter().take(5) {
            println!("       {}: expected {}, got {}", f.sentence, f.expected, f.got);
        }
        if status == "FAIL" {
            failed += 1;
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
