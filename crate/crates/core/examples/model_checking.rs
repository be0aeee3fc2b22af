//! Closed first-order formulas evaluated in a finite structure read from JSON.

use veritas::{parse_formula, FiniteModel};

const MODEL: &str = r#"{
  "domain_size": 4,
  "relations": {
    "Edge": { "arity": 2, "tuples": [[0, 1], [1, 2], [2, 3], [3, 0]] },
    "Even": { "arity": 1, "tuples": [[0], [2]] }
  },
  "constants": { "zero": 0, "one": 1 }
}"#;

fn main() -> veritas::Result<()> {
    let model = FiniteModel::from_json(MODEL)?;
    let formulas = [
        "Edge(zero, one)",
        "forall v0. exists v1. Edge(v0, v1)",
        "forall v0. Even(v0) -> exists v1. Edge(v0, v1) & !Even(v1)",
        "exists v0. Edge(v0, v0)",
        "forall v0. forall v1. Edge(v0, v1) -> !(v0 = v1)",
    ];
    for text in formulas {
        let f = parse_formula(text, model.signature())?;
        println!("{:5}  {f}", model.eval(&f)?);
    }

    // Symbols outside the signature are rejected before evaluation.
    match parse_formula("Loop(zero)", model.signature()) {
        Ok(_) => unreachable!(),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
