//! Parallel verification with deterministic merging and counterexample shrinking.

use std::time::Instant;

use absorb_core::expr::parse_module;
use absorb_core::{FiniteModule, Phi};
use rayon::prelude::*;

use crate::checks::{run, Tally};
use crate::corpus::Corpus;
use crate::error::{HarnessError, Result};
use crate::registry;
use crate::report::{Counterexample, SkipEntry, VerificationReport, Verdict};

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub phis: Vec<Phi>,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
    pub timing: bool,
    pub max_counterexamples: usize,
    pub shrink: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            phis: Phi::standard_catalog(),
            jobs: None,
            timing: false,
            max_counterexamples: 5,
            shrink: true,
        }
    }
}

pub fn verify(id: &str, corpus: &Corpus, opts: &VerifyOptions) -> Result<VerificationReport> {
    let modules = corpus.elaborate()?;
    verify_modules(id, &modules, opts)
}

pub fn verify_modules(id: &str, modules: &[FiniteModule], opts: &VerifyOptions) -> Result<VerificationReport> {
    let info = registry::lookup(id).ok_or_else(|| HarnessError::UnknownTheorem(id.to_string()))?;
    let start = Instant::now();
    let work = || -> Result<Vec<Tally>> { modules.par_iter().map(|m| run(id, m, &opts.phis)).collect() };
    let tallies = match opts.jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .map_err(|e| HarnessError::Pool(e.to_string()))?
            .install(work)?,
        None => work()?,
    };

    let mut instances = 0;
    let mut failures = 0;
    let mut skipped = Vec::new();
    let mut counterexamples = Vec::new();
    for (m, t) in modules.iter().zip(&tallies) {
        instances += t.checked;
        failures += t.failure_count;
        for (reason, count) in &t.skipped {
            skipped.push(SkipEntry { spec: m.name().to_string(), reason: reason.clone(), count: *count });
        }
        for f in &t.failures {
            if counterexamples.len() < opts.max_counterexamples {
                counterexamples.push(Counterexample {
                    spec: m.name().to_string(),
                    instance: f.instance.clone(),
                    detail: f.detail.clone(),
                    shrunk_from: None,
                    revalidated: false,
                });
            }
        }
    }
    for c in counterexamples.iter_mut() {
        revalidate(id, c, &opts.phis)?;
    }
    if opts.shrink {
        if let Some(first) = counterexamples.first().cloned() {
            if let Some(small) = shrink(id, &first, &opts.phis)? {
                counterexamples.insert(0, small);
            }
        }
    }

    let verdict = if failures > 0 {
        Verdict::Fail
    } else if instances == 0 {
        Verdict::Vacuous
    } else {
        Verdict::Pass
    };
    let mut notes: Vec<String> = info.notes.iter().map(|s| s.to_string()).collect();
    if verdict == Verdict::Vacuous {
        notes.push(format!("corpus extension: {}", info.extension_hint));
    }
    if verdict == Verdict::Fail {
        if let Some(k) = info.known_false {
            notes.push(format!("explained: {k}"));
        }
    }
    Ok(VerificationReport {
        theorem: id.to_string(),
        instances,
        skipped,
        verdict,
        failures,
        counterexamples,
        millis: if opts.timing { start.elapsed().as_millis() as u64 } else { 0 },
        notes,
    })
}

/// Reruns the check on `c.spec` and marks whether the same instance fails.
fn revalidate(id: &str, c: &mut Counterexample, phis: &[Phi]) -> Result<()> {
    let m = parse_module(&c.spec)?;
    let t = run(id, &m, phis)?;
    c.revalidated = t.failures.iter().any(|f| f.instance == c.instance);
    Ok(())
}

/// Expressions obtained by lowering one integer literal outside `{..}`.
pub fn smaller_variants(expr: &str) -> Vec<String> {
    let bytes = expr.as_bytes();
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut i = 0;
    while i < bytes.len() {
        match bytes[i] {
            b'{' => depth += 1,
            b'}' => depth = depth.saturating_sub(1),
            b'0'..=b'9' if depth == 0 => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let value: usize = expr[start..i].parse().unwrap_or(0);
                for v in 1..value {
                    out.push(format!("{}{}{}", &expr[..start], v, &expr[i..]));
                }
                continue;
            }
            _ => {}
        }
        i += 1;
    }
    out
}

/// Greedily moves a failure to strictly smaller modules obtained by lowering
/// integer parameters; `None` when no smaller module fails.
pub fn shrink(id: &str, c: &Counterexample, phis: &[Phi]) -> Result<Option<Counterexample>> {
    let mut current = parse_module(&c.spec)?;
    let mut found: Option<Counterexample> = None;
    'outer: loop {
        let mut candidates: Vec<FiniteModule> = smaller_variants(current.name())
            .iter()
            .filter_map(|e| parse_module(e).ok())
            .filter(|m| m.size() < current.size())
            .collect();
        candidates.sort_by_key(|m| (m.size(), m.ring().size()));
        for m in candidates {
            let t = run(id, &m, phis)?;
            if let Some(f) = t.failures.first() {
                found = Some(Counterexample {
                    spec: m.name().to_string(),
                    instance: f.instance.clone(),
                    detail: f.detail.clone(),
                    shrunk_from: Some(c.spec.clone()),
                    revalidated: false,
                });
                current = m;
                continue 'outer;
            }
        }
        break;
    }
    if let Some(f) = found.as_mut() {
        revalidate(id, f, phis)?;
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn variants_skip_set_literals() {
        let v = smaller_variants("cyc(zn(4),{2})");
        assert_eq!(v, vec!["cyc(zn(1),{2})", "cyc(zn(2),{2})", "cyc(zn(3),{2})"]);
    }

    #[test]
    fn shrink_reaches_z4_for_theo6() {
        let c = Counterexample {
            spec: "self(zn(16))".into(),
            instance: String::new(),
            detail: String::new(),
            shrunk_from: None,
            revalidated: false,
        };
        let s = shrink("theo6", &c, &[Phi::empty()]).unwrap().unwrap();
        assert_eq!(s.spec, "self(zn(4))");
        assert!(s.revalidated);
    }

    #[test]
    fn reports_are_deterministic() {
        let corpus = Corpus::new(vec!["self(zn(8))".into(), "self(zn(12))".into()]);
        let a = verify("theo4", &corpus, &VerifyOptions { jobs: Some(1), ..Default::default() }).unwrap();
        let b = verify("theo4", &corpus, &VerifyOptions { jobs: Some(3), ..Default::default() }).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.verdict, Verdict::Pass);
    }
}
