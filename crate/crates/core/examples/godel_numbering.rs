//! Codes for sentences and the sentences behind numerals.

use veritas::{decode, encode, parse_sentence, FiniteModel, GodelCode, Sentence};

fn main() -> veritas::Result<()> {
    let model = FiniteModel::trivial();
    for text in ["T(0)", "exists x. T(x)", "forall x. T(x)", "forall v0. v0 = v0", "T(702)", "!T(702) | T(1)"] {
        let s = parse_sentence(text, model.signature())?;
        let code = encode(&s);
        assert_eq!(decode(&code), Some(s.clone()));
        println!("{:>42}  {s}", code.to_string());
    }

    // Not every numeral codes a sentence.
    for n in [0u64, 1, 45, 702] {
        let shown = decode(&GodelCode::from(n)).map_or("-".to_string(), |s| s.to_string());
        println!("{n:>6} -> {shown}");
    }

    // Quotation grows codes fast.
    let mut s = Sentence::ExistsT;
    for depth in 0..5 {
        println!("depth {depth}: {} bits", encode(&s).0.bits());
        s = Sentence::t(encode(&s).0);
    }
    Ok(())
}
