//! The truth predicate of the least fixed point: T-biconditionals, agreement
//! with the base model, and the classical connectives on determinate sentences.

use veritas::truth::{quote, verify_base_agreement, verify_biconditionals, verify_truth_tables};
use veritas::universe::DEFAULT_CLOSURE_CAP;
use veritas::{least_fixed_point, parse_sentence, valuation, FiniteModel, Sentence, Universe};

fn main() -> veritas::Result<()> {
    let model = FiniteModel::from_json(r#"{"domain_size": 2, "relations": {"P": {"arity": 1, "tuples": [[1]]}}, "constants": {"a": 0, "b": 1}}"#)?;
    let sig = model.signature();
    let base = [parse_sentence("[P(b)]", sig)?, parse_sentence("[P(a)]", sig)?];
    let mut seeds: Vec<Sentence> = base.to_vec();
    for s in &base {
        seeds.push(quote(s));
        seeds.push(Sentence::iff(s.clone(), quote(s)));
        seeds.push(Sentence::iff(s.clone(), Sentence::not(quote(s))));
    }
    seeds.push(Sentence::t(0u32));
    seeds.push(Sentence::or(Sentence::t(0u32), quote(&base[0])));
    let universe = Universe::closure(&seeds, &model, DEFAULT_CLOSURE_CAP)?;
    let fp = least_fixed_point(&universe, &model)?;

    for s in universe.sentences() {
        println!("{:>12}  {s}", valuation(s, &fp)?.to_string());
    }
    for (name, report) in [
        ("biconditionals", verify_biconditionals(&fp)),
        ("base agreement", verify_base_agreement(&fp, &model)),
        ("truth tables", verify_truth_tables(&fp, 1000)),
    ] {
        println!("{name}: {} checks, pass = {}", report.checked, report.pass);
    }
    Ok(())
}
