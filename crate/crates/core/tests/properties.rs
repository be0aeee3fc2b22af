use num_bigint::BigUint;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use veritas::fixpoint::{is_consistent, is_sound, step};
use veritas::gen::{random_model, random_sentence, random_universe, SentenceShape};
use veritas::pairing::{pair, unpair};
use veritas::truth::{quote, valuate_universe};
use veritas::universe::DEFAULT_CLOSURE_CAP;
use veritas::{decode, encode, least_fixed_point, parse_sentence, valuation, Sentence, Universe, Valuation};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pairing_is_a_bijection(a in proptest::collection::vec(any::<u8>(), 0..40), b in proptest::collection::vec(any::<u8>(), 0..40)) {
        let (a, b) = (BigUint::from_bytes_be(&a), BigUint::from_bytes_be(&b));
        let z = pair(&a, &b);
        prop_assert_eq!(unpair(&z), (a, b));
        prop_assert_eq!(pair(&unpair(&z).0, &unpair(&z).1), z);
    }

    #[test]
    fn sentences_survive_coding_and_printing(seed in any::<u64>()) {
        let mut r = rng(seed);
        let model = random_model(&mut r);
        let shape = SentenceShape { depth: 2, base_depth: 2, wild_numerals: true };
        let s = random_sentence(&mut r, &model, &shape, &[]);
        prop_assert_eq!(decode(&encode(&s)), Some(s.clone()));
        prop_assert_eq!(parse_sentence(&s.to_string(), model.signature()).unwrap(), s);
    }

    #[test]
    fn closure_is_idempotent_and_monotone(seed in any::<u64>()) {
        let mut r = rng(seed);
        let model = random_model(&mut r);
        let a = random_universe(&mut r, &model, 10);
        let b = random_universe(&mut r, &model, 10);
        let again = Universe::closure(a.sentences(), &model, DEFAULT_CLOSURE_CAP).unwrap();
        prop_assert_eq!(again.codes().collect::<Vec<_>>(), a.codes().collect::<Vec<_>>());
        let both = Universe::closure(a.sentences().chain(b.sentences()), &model, DEFAULT_CLOSURE_CAP).unwrap();
        prop_assert!(a.is_subset(&both));
        prop_assert!(b.is_subset(&both));
    }

    #[test]
    fn least_fixed_point_is_a_sound_consistent_fixed_point(seed in any::<u64>()) {
        let mut r = rng(seed);
        let model = random_model(&mut r);
        let universe = random_universe(&mut r, &model, 12);
        let fp = least_fixed_point(&universe, &model).unwrap();
        prop_assert!(is_consistent(&fp.set, &model));
        prop_assert!(is_sound(&fp.set, &model, &universe));
        prop_assert_eq!(step(&fp.set, &model, &universe), fp.set.clone());
        prop_assert!(fp.trace.stabilized_at <= universe.len() + 1);
    }

    #[test]
    fn negation_flips_and_quotation_agrees(seed in any::<u64>()) {
        let mut r = rng(seed);
        let model = random_model(&mut r);
        let base = random_universe(&mut r, &model, 8);
        // Add the negation and the quotation of every member.
        let extra: Vec<Sentence> = base
            .sentences()
            .flat_map(|s| [Sentence::not(s.clone()), quote(s)])
            .collect();
        let universe = Universe::closure(base.sentences().chain(extra.iter()), &model, DEFAULT_CLOSURE_CAP).unwrap();
        let fp = least_fixed_point(&universe, &model).unwrap();
        for (_, s, v) in valuate_universe(&fp) {
            let flipped = match v {
                Valuation::True => Valuation::False,
                Valuation::False => Valuation::True,
                Valuation::Undetermined => Valuation::Undetermined,
            };
            prop_assert_eq!(valuation(&Sentence::not(s.clone()), &fp).unwrap(), flipped);
            prop_assert_eq!(valuation(&quote(&s), &fp).unwrap(), v);
        }
    }
}
