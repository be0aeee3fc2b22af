//! The regress F_0, F_1, … where F_i holds iff i is below the least element
//! of Z ⊆ ω ∪ {ω}.

use veritas::regress::{analyze_regress, OmegaSet};

fn main() -> veritas::Result<()> {
    let cases = [
        OmegaSet::new([3], false)?,
        OmegaSet::new([0, 5], true)?,
        OmegaSet::new([12], false)?,
        OmegaSet::omega(),
    ];
    for z in &cases {
        let r = analyze_regress(z, 10)?;
        let truth: String = r.truth.iter().map(|&t| if t { 'T' } else { 'F' }).collect();
        println!(
            "pivot {:>5}  F_0..F_10 = {truth}  saturated = {:5}  F_0 justified = {:5}  lemma = {:?}/{:?}/{:?}",
            r.pivot.to_string(),
            r.saturated,
            r.f0_justified,
            r.lemma.a,
            r.lemma.b,
            r.lemma.c
        );
        assert!(r.consistent_with_theory());
    }
    assert!(OmegaSet::new([], false).is_err());
    Ok(())
}
