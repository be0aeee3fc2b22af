//! Iterating `U ↦ G(U)` from the empty set and printing each stage.

use veritas::truth::valuate_universe;
use veritas::universe::DEFAULT_CLOSURE_CAP;
use veritas::{least_fixed_point, parse_sentence, FiniteModel, Universe};

fn main() -> veritas::Result<()> {
    let model = FiniteModel::trivial();
    let seeds = ["T(702)", "T(248158) & exists x. T(x)", "forall x. T(x) | T(0)"]
        .iter()
        .map(|t| parse_sentence(t, model.signature()))
        .collect::<veritas::Result<Vec<_>>>()?;
    let universe = Universe::closure(&seeds, &model, DEFAULT_CLOSURE_CAP)?;
    println!("universe of {} sentences", universe.len());

    let fp = least_fixed_point(&universe, &model)?;
    for (i, stage) in fp.trace.stages.iter().enumerate() {
        let added: Vec<String> = fp.trace.added(i).iter().map(ToString::to_string).collect();
        println!("U_{i}: {} explicit codes, added {{{}}}", stage.explicit.len(), added.join(", "));
    }
    println!("stabilized at {}", fp.trace.stabilized_at);

    for (code, s, v) in valuate_universe(&fp) {
        println!("{:>12}  {code}  {s}", v.to_string());
    }
    println!("{}", serde_json::to_string(&fp.trace.to_json()).expect("json"));
    Ok(())
}
