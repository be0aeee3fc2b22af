//! A direct recursive evaluator for groundedness, compared with the valuation
//! read off the fixed point.

use veritas::truth::{valuate_universe, GroundedEvaluator};
use veritas::universe::DEFAULT_CLOSURE_CAP;
use veritas::{encode, least_fixed_point, FiniteModel, Formula, Sentence, Universe};

fn main() -> veritas::Result<()> {
    let model = FiniteModel::trivial();
    let truth = Sentence::base(Formula::identity());
    let falsity = Sentence::base(Formula::absurdity());
    // T(1) asks about T(0), which asks about the non-sentence 0.
    let seeds = vec![
        Sentence::t(encode(&truth).0),
        Sentence::not(Sentence::t(encode(&falsity).0)),
        Sentence::t(1u32),
        Sentence::or(Sentence::t(1u32), truth.clone()),
        Sentence::and(Sentence::t(1u32), falsity.clone()),
        Sentence::imp(Sentence::ExistsT, Sentence::ForallT),
    ];
    let universe = Universe::closure(&seeds, &model, DEFAULT_CLOSURE_CAP)?;
    let fp = least_fixed_point(&universe, &model)?;

    let mut grounded = GroundedEvaluator::new(&model);
    let mut disagreements = 0;
    for (_, s, v) in valuate_universe(&fp) {
        let g = grounded.classify(&s).as_valuation();
        if g != v {
            disagreements += 1;
        }
        println!("{:>12}  {:>12}  {s}", g.to_string(), v.to_string());
    }
    println!("disagreements: {disagreements}");
    Ok(())
}
