//! Acceptance criteria; prints one PASS / FAIL / FAIL-EXPLAINED line each.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use absorb_core::classify::{find_quadruple_zeros, is_phi_classical_1abs, QuadrupleZero, Witness};
use absorb_core::construct::{localize, MultSet};
use absorb_core::expr::{parse_module, parse_submodule};
use absorb_core::phi::phi_leq_witness;
use absorb_core::{Bits, FiniteModule, Phi};
use absorb_harness::{verify, verify_modules, Bounds, Corpus, Verdict, VerifyOptions, THEOREMS};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Status {
    Pass,
    Fail,
    Explained,
}

struct Outcome {
    status: Status,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome { status: Status::Pass, detail: detail.into() }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome { status: Status::Fail, detail: detail.into() }
}

fn report(n: usize, name: &str, o: &Outcome) {
    let tag = match o.status {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
        Status::Explained => "FAIL-EXPLAINED",
    };
    println!("criterion {n} [{name}]: {tag}: {}", o.detail);
}

fn modules(corpus: &Corpus) -> Vec<FiniteModule> {
    corpus.elaborate().expect("standard corpus elaborates")
}

fn characterization(mods: &[FiniteModule]) -> Outcome {
    let start = Instant::now();
    let r = verify_modules("theo5", mods, &VerifyOptions::default()).unwrap();
    let elapsed = start.elapsed();
    let detail = format!(
        "{} non-vacuous instances over {} modules, {} failures, {:.1}s",
        r.instances,
        mods.len(),
        r.failures,
        elapsed.as_secs_f64()
    );
    if r.verdict == Verdict::Pass && r.instances >= 500 && elapsed < Duration::from_secs(300) {
        pass(detail)
    } else {
        fail(detail)
    }
}

fn colon_union(mods: &[FiniteModule]) -> Outcome {
    let r = verify_modules("theo4", mods, &VerifyOptions::default()).unwrap();
    let detail = format!("{} phi-classical instances, {} failures", r.instances, r.failures);
    if r.verdict == Verdict::Pass {
        pass(detail)
    } else {
        fail(detail)
    }
}

fn chain_and_monotonicity(mods: &[FiniteModule]) -> Outcome {
    let cat = Phi::standard_catalog();
    let mut pairs = 0;
    for m in mods {
        for w in cat.windows(2) {
            if let Some(n) = phi_leq_witness(&w[0], &w[1], m).unwrap() {
                return fail(format!("{} <= {} fails on {} at {}", w[0].name(), w[1].name(), m.name(), n.display()));
            }
        }
        for n in m.submodules().unwrap().iter().filter(|s| s.is_proper()) {
            let mut prev = false;
            for p in &cat {
                let v = is_phi_classical_1abs(n, p).unwrap().verdict;
                if prev && !v {
                    return fail(format!("verdict drops at {} on {} in {}", p.name(), n.display(), m.name()));
                }
                prev = v;
                pairs += 1;
            }
        }
    }
    pass(format!("chain pointwise on {} modules, {pairs} monotone verdicts", mods.len()))
}

fn fixtures() -> Outcome {
    let m = parse_module("self(zn(8))").unwrap();
    let four = parse_submodule(&m, "gen:4").unwrap();
    let zero = parse_submodule(&m, "zero").unwrap();
    let a = is_phi_classical_1abs(&four, &Phi::empty()).unwrap();
    let b = is_phi_classical_1abs(&zero, &Phi::empty()).unwrap();
    let c = is_phi_classical_1abs(&zero, &Phi::zero()).unwrap();
    let zeros = find_quadruple_zeros(&zero, &Phi::zero()).unwrap();
    let ok = a.verdict
        && !b.verdict
        && b.witness == Some(Witness::Quadruple(2, 2, 2, 1))
        && c.verdict
        && zeros.contains(&QuadrupleZero { a: 2, b: 2, c: 2, m: 1 });
    let detail = format!(
        "4Z_8/empty={}, 0/empty={} witness {:?}, 0/zero={} with {} quadruple-zeros",
        a.verdict,
        b.verdict,
        b.witness.map(|w| w.to_vec()),
        c.verdict,
        zeros.len()
    );
    if ok {
        pass(detail)
    } else {
        fail(detail)
    }
}

/// Every registered id: pass or vacuous with a note, or a documented failure.
fn theorem_survey(corpus: &Corpus) -> Outcome {
    let opts = VerifyOptions::default();
    let mut unexplained = Vec::new();
    let mut explained = Vec::new();
    for t in THEOREMS {
        let r = verify(t.id, corpus, &opts).unwrap();
        let tag = match (r.verdict, t.known_false) {
            (Verdict::Fail, Some(_)) => {
                explained.push(t.id);
                "FAIL-EXPLAINED"
            }
            (Verdict::Fail, None) => {
                unexplained.push(t.id);
                "FAIL"
            }
            (Verdict::Vacuous, _) if r.notes.is_empty() => {
                unexplained.push(t.id);
                "FAIL"
            }
            _ => "PASS",
        };
        println!("    {tag:<15} {}", r.summary());
        if r.verdict == Verdict::Fail {
            if let Some(c) = r.counterexamples.first() {
                println!("        e.g. {} | {} | {}", c.spec, c.instance, c.detail);
            }
        }
    }
    let detail = format!(
        "{} ids, {} documented literal failures ({}), unexplained: [{}]",
        THEOREMS.len(),
        explained.len(),
        explained.join(","),
        unexplained.join(",")
    );
    if !unexplained.is_empty() {
        fail(detail)
    } else if !explained.is_empty() {
        Outcome { status: Status::Explained, detail }
    } else {
        pass(detail)
    }
}

fn guarded_theo7(mods: &[FiniteModule]) -> Outcome {
    let r = verify_modules("theo7", mods, &VerifyOptions::default()).unwrap();
    for s in &r.skipped {
        println!("    skipped {} x{}: {}", s.spec, s.count, s.reason);
    }
    let detail = format!("{} guarded instances, {} skipped, {} failures", r.instances, r.skipped_total(), r.failures);
    if r.verdict == Verdict::Pass {
        pass(detail)
    } else {
        fail(detail)
    }
}

fn determinism(corpus: &Corpus) -> Outcome {
    let run = |jobs| {
        let opts = VerifyOptions { jobs: Some(jobs), ..Default::default() };
        ["theo5", "theo6", "theo13"].iter().map(|id| verify(id, corpus, &opts).unwrap().to_json()).collect::<String>()
    };
    let a = run(1);
    let b = run(4);
    if a == b {
        pass(format!("{} identical bytes for 1 and 4 workers", a.len()))
    } else {
        fail("reports differ between runs")
    }
}

fn localization(mods: &[FiniteModule]) -> Outcome {
    let mut pairs = 0;
    for m in mods {
        let ring = m.ring();
        let mut seen = Vec::new();
        for s in ring.elements() {
            let set = MultSet::generated(ring, &[s]);
            if seen.contains(&set.elements()) {
                continue;
            }
            seen.push(set.elements());
            let loc = localize(m, &set).unwrap();
            if !loc.units_act_bijectively() {
                return fail(format!("S = <{}> does not act bijectively on localize({})", ring.label(s), m.name()));
            }
            pairs += 1;
        }
    }
    let z12 = parse_module("self(zn(12))").unwrap();
    let set = MultSet::new(z12.ring(), Bits::from_iter([1, 4])).unwrap();
    let loc = localize(&z12, &set).unwrap();
    let order = loc.target().map(|t| t.size());
    let torsion = loc.torsion();
    let detail = format!("{pairs} (M, S) pairs bijective; S={{1,4}} on Z_12 gives order {order:?}, torsion {:?}", torsion.to_vec());
    if order == Some(3) && torsion == Bits::from_iter([0, 3, 6, 9]) {
        pass(detail)
    } else {
        fail(detail)
    }
}

fn main() -> ExitCode {
    let corpus = Corpus::standard(Bounds::default());
    let mods = modules(&corpus);
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome>)> = vec![
        ("characterization agrees", Box::new(|| characterization(&mods))),
        ("colon union", Box::new(|| colon_union(&mods))),
        ("phi chain and monotonicity", Box::new(|| chain_and_monotonicity(&mods))),
        ("fixtures", Box::new(fixtures)),
        ("theorem survey", Box::new(|| theorem_survey(&corpus))),
        ("guarded equivalences", Box::new(|| guarded_theo7(&mods))),
        ("determinism", Box::new(|| determinism(&corpus))),
        ("localization", Box::new(|| localization(&mods))),
    ];
    let mut failed = false;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let o = f();
        report(i + 1, name, &o);
        failed |= o.status == Status::Fail;
    }
    if failed {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
