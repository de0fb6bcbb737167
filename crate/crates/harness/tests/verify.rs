use absorb_harness::verify::smaller_variants;
use absorb_harness::{lookup, verify, Bounds, Corpus, Verdict, VerificationReport, VerifyOptions, THEOREMS};
use proptest::prelude::*;

fn small() -> Corpus {
    Corpus::new(vec!["self(zn(4))".into(), "self(zn(6))".into(), "freemod(zn(2),2)".into()])
}

#[test]
fn corpus_text_round_trips() {
    let c = Corpus::standard(Bounds::default());
    assert_eq!(Corpus::parse(&c.to_text()).unwrap(), c);
}

#[test]
fn report_json_round_trips() {
    let r = verify("theo6", &small(), &VerifyOptions::default()).unwrap();
    assert_eq!(r.verdict, Verdict::Fail);
    let back: VerificationReport = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(back, r);
    assert!(r.counterexamples.iter().all(|c| c.revalidated));
}

#[test]
fn empty_corpus_is_vacuous_with_hint() {
    let r = verify("theo5", &Corpus::new(Vec::new()), &VerifyOptions::default()).unwrap();
    assert_eq!(r.verdict, Verdict::Vacuous);
    assert!(!r.notes.is_empty());
}

#[test]
fn every_id_runs_on_a_small_corpus() {
    for t in THEOREMS {
        let r = verify(t.id, &small(), &VerifyOptions::default()).unwrap();
        if r.verdict == Verdict::Fail {
            assert!(lookup(t.id).unwrap().known_false.is_some(), "{}", r.summary());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn fuzz_is_seed_deterministic_and_bounded(seed in any::<u64>(), count in 1usize..6) {
        let b = Bounds { max_ring: 12, max_module: 16 };
        let a = Corpus::new(Vec::new()).with_fuzz(seed, count, b);
        let c = Corpus::new(Vec::new()).with_fuzz(seed, count, b);
        prop_assert_eq!(&a, &c);
        let mut kept = a.clone();
        kept.retain_within(b);
        prop_assert_eq!(kept, a.clone());
        prop_assert!(a.elaborate().is_ok());
    }

    #[test]
    fn shrink_candidates_are_distinct(n in 2u32..30) {
        let e = format!("self(zn({n}))");
        let v = smaller_variants(&e);
        prop_assert!(v.iter().all(|s| s != &e));
    }
}
