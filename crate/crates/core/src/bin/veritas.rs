use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use veritas::fixpoint::iterate_from;
use veritas::regress::{analyze_regress, OmegaSet};
use veritas::suites::{random_configs, run, Config, Suite, SuiteOptions};
use veritas::truth::{valuate_universe, GroundedEvaluator};
use veritas::universe::DEFAULT_CLOSURE_CAP;
use veritas::{
    decode, encode, parse_formula, parse_sentence, Error, FiniteModel, GodelCode, Sentence, SymbolicCodeSet,
    Universe, VerificationReport,
};

#[derive(Parser)]
#[command(name = "veritas", version, about = "Least fixed-point truth predicates over finite models")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a closed base formula in the model.
    EvalBase {
        formula: String,
        #[command(flatten)]
        common: Common,
    },
    /// Print the code of a sentence.
    Encode {
        sentence: String,
        #[command(flatten)]
        common: Common,
    },
    /// Print the sentence coded by a decimal numeral.
    Decode {
        code: String,
        #[command(flatten)]
        common: Common,
    },
    /// Least fixed point over the closure of the seeds, with its stage trace.
    Lfp {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        seeds: Seeds,
        /// Maximum number of iteration steps.
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Grounded classification and fixed-point valuation of every universe member.
    Eval {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        seeds: Seeds,
    },
    /// Run a property suite.
    Verify {
        /// consistency, monotone, chain, fixpoint, leastness, biconditional,
        /// agreement, tables, grounded, regress or all
        suite: String,
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        seeds: Seeds,
        #[arg(long, default_value_t = 0)]
        rng_seed: u64,
        /// Random configurations used when no seeds are given.
        #[arg(long, default_value_t = 200)]
        configs: usize,
        #[arg(long, default_value_t = 10)]
        horizon: u64,
    },
    /// Analyze the regress F_0, F_1, … under a set Z of naturals and ω.
    Regress {
        /// Comma-separated naturals.
        #[arg(long, default_value = "")]
        z: String,
        /// Include ω in Z.
        #[arg(long)]
        omega: bool,
        #[arg(long, default_value_t = 10)]
        horizon: u64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct Common {
    /// Model description (JSON). Defaults to the one-element model with no symbols.
    #[arg(long)]
    model: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct Seeds {
    #[arg(long = "seed", num_args = 1..)]
    seed: Vec<String>,
    /// One sentence per line; blank lines and lines starting with `#` are skipped.
    #[arg(long)]
    seed_file: Option<PathBuf>,
    #[arg(long = "seed-code", num_args = 1..)]
    seed_code: Vec<String>,
    #[arg(long, default_value_t = DEFAULT_CLOSURE_CAP)]
    cap: usize,
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn load_model(common: &Common) -> Result<FiniteModel, Failure> {
    match &common.model {
        None => Ok(FiniteModel::trivial()),
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            FiniteModel::from_json(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
        }
    }
}

fn seed_sentences(seeds: &Seeds, model: &FiniteModel) -> Result<Vec<Sentence>, Failure> {
    let sig = model.signature();
    let mut out = Vec::new();
    for text in &seeds.seed {
        out.push(parse_sentence(text, sig)?);
    }
    if let Some(path) = &seeds.seed_file {
        let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
        for (n, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let s = parse_sentence(line, sig)
                .map_err(|e| Failure::Usage(format!("{}:{}: {e}", path.display(), n + 1)))?;
            out.push(s);
        }
    }
    for text in &seeds.seed_code {
        let code = parse_code(text)?;
        let s = model
            .decode_sentence(&code)
            .ok_or_else(|| Failure::Usage(format!("{code} is not the code of a sentence of this language")))?;
        out.push(s);
    }
    if seeds.cap < out.len() {
        return Err(Failure::Usage(format!("closure cap {} is below the seed count {}", seeds.cap, out.len())));
    }
    Ok(out)
}

fn parse_code(text: &str) -> Result<GodelCode, Failure> {
    text.trim()
        .parse::<GodelCode>()
        .map_err(|_| Failure::Usage(format!("`{text}` is not a decimal numeral")))
}

fn print_json(value: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("JSON output"));
}

fn report_outcome(name: &str, report: &VerificationReport, json: bool) -> serde_json::Value {
    if !json {
        let status = if report.pass { "PASS" } else { "FAIL" };
        println!("{status} {name}: {} checks, {} failures", report.checked, report.failures.len());
        for f in report.failures.iter().take(10) {
            println!("  {}: expected {}, got {}", f.sentence, f.expected, f.got);
        }
    }
    json!({ "suite": name, "report": report })
}

fn execute(command: Command) -> Outcome {
    match command {
        Command::EvalBase { formula, common } => {
            let m = load_model(&common)?;
            let f = parse_formula(&formula, m.signature())?;
            let value = m.eval(&f)?;
            if common.json {
                print_json(&json!({ "formula": f.to_string(), "value": value }));
            } else {
                println!("{value}");
            }
        }
        Command::Encode { sentence, common } => {
            let m = load_model(&common)?;
            let s = parse_sentence(&sentence, m.signature())?;
            let code = encode(&s);
            if common.json {
                print_json(&json!({ "sentence": s.to_string(), "code": code }));
            } else {
                println!("{code}");
            }
        }
        Command::Decode { code, common } => {
            let code = parse_code(&code)?;
            let s = match &common.model {
                None => decode(&code),
                Some(_) => load_model(&common)?.decode_sentence(&code),
            }
            .ok_or_else(|| Failure::Usage(format!("{code} is not the code of a sentence")))?;
            if common.json {
                print_json(&json!({ "code": code, "sentence": s.to_string() }));
            } else {
                println!("{s}");
            }
        }
        Command::Lfp { common, seeds, budget } => {
            let m = load_model(&common)?;
            let universe = Universe::closure(&seed_sentences(&seeds, &m)?, &m, seeds.cap)?;
            let budget = budget.unwrap_or(universe.len() + 2);
            if budget == 0 {
                return Err(Failure::Usage("budget must be at least 1".into()));
            }
            let fp = iterate_from(SymbolicCodeSet::empty(), &universe, &m, budget)?;
            if common.json {
                print_json(&fp.trace.to_json());
            } else {
                for (i, stage) in fp.trace.stages.iter().enumerate() {
                    let added: Vec<String> = fp.trace.added(i).iter().map(|c| c.to_string()).collect();
                    println!("U_{i}: {} codes{}, added {{{}}}", stage.explicit.len(), if stage.flag { " + G(∅)" } else { "" }, added.join(", "));
                }
                println!("stabilized at {}", fp.trace.stabilized_at);
                for (code, s, v) in valuate_universe(&fp) {
                    println!("{:>12}  {code}  {s}", v.to_string());
                }
            }
        }
        Command::Eval { common, seeds } => {
            let m = load_model(&common)?;
            let universe = Universe::closure(&seed_sentences(&seeds, &m)?, &m, seeds.cap)?;
            let fp = veritas::least_fixed_point(&universe, &m)?;
            let mut grounded = GroundedEvaluator::new(&m);
            let rows: Vec<_> = valuate_universe(&fp)
                .into_iter()
                .map(|(code, s, v)| (code, grounded.classify(&s), v, s))
                .collect();
            if common.json {
                let items: Vec<_> = rows
                    .iter()
                    .map(|(code, g, v, s)| json!({ "code": code, "sentence": s.to_string(), "grounded": g.as_valuation(), "valuation": v }))
                    .collect();
                print_json(&json!({ "sentences": items }));
            } else {
                for (code, g, v, s) in &rows {
                    println!("{:>12}  {:>12}  {code}  {s}", g.as_valuation().to_string(), v.to_string());
                }
            }
        }
        Command::Verify { suite, common, seeds, rng_seed, configs, horizon } => {
            let selected: Vec<Suite> = if suite == "all" {
                Suite::ALL.to_vec()
            } else {
                vec![suite.parse::<Suite>().map_err(Failure::Usage)?]
            };
            let m = load_model(&common)?;
            let given = seed_sentences(&seeds, &m)?;
            let configs = if given.is_empty() && common.model.is_none() {
                random_configs(rng_seed, configs, 12)
            } else {
                let universe = Universe::closure(&given, &m, seeds.cap)?;
                vec![Config { model: m, universe }]
            };
            let opts = SuiteOptions {
                rng_seed,
                regress_horizon: horizon,
                ..SuiteOptions::default()
            };
            let mut all_pass = true;
            let mut outputs = Vec::new();
            for s in selected {
                let report = run(s, &configs, &opts)?;
                all_pass &= report.pass;
                outputs.push(report_outcome(s.name(), &report, common.json));
            }
            if common.json {
                print_json(&json!({ "pass": all_pass, "suites": outputs }));
            }
            if !all_pass {
                return Err(Failure::Verification("verification failed".into()));
            }
        }
        Command::Regress { z, omega, horizon, json } => {
            let z = OmegaSet::parse(&z, omega)?;
            let report = analyze_regress(&z, horizon)?;
            if json {
                print_json(&serde_json::to_value(&report).expect("report serializes"));
            } else {
                println!("pivot: {}", report.pivot);
                let truth: Vec<String> = report
                    .truth
                    .iter()
                    .enumerate()
                    .map(|(i, t)| format!("F_{i}={}", if *t { "T" } else { "F" }))
                    .collect();
                println!("{}", truth.join(" "));
                println!("each F_i entails F_(i-1): {}", report.conditions.entails_predecessor);
                println!("no lower disjunction entails F_i: {}", report.conditions.disjunction_not_entailing);
                println!("no lower disjunction justifies F_i: {}", report.conditions.disjunction_not_justifying);
                println!("lemma clauses: a {:?}, b {:?}, c {:?}", report.lemma.a, report.lemma.b, report.lemma.c);
                println!("saturated: {}", report.saturated);
                println!("F_0 contingent: {}, justified by F_1: {}", report.f0_contingent, report.f0_justified);
            }
            if !report.consistent_with_theory() {
                return Err(Failure::Verification("regress report disagrees with the theory".into()));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("veritas: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("veritas: {msg}");
            ExitCode::from(2)
        }
    }
}
