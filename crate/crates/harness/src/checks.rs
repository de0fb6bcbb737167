//! Per-module checks, one per registered theorem id.

use std::collections::HashMap;

use absorb_core::characterize::{colon_union_witness, union_guard};
use absorb_core::classify::{
    find_quadruple_zeros, is_n_potent_classical_1abs, is_phi_classical_1abs, is_phi_classical_1abs_at,
    QuadrupleZero,
};
use absorb_core::construct::{build_product_instance, power_bits, product_side_condition, tensor_free};
use absorb_core::ideal::psi_1absorbing_witness;
use absorb_core::multiplication::{is_multiplication, submodule_power};
use absorb_core::primes::m_radical;
use absorb_core::{
    characterization_check, is_phi_1abs_prime, localize, Bits, Condition, FiniteModule, FiniteRing, Ideal,
    ModuleOrigin, MultSet, Phi, PhiValue, Submodule,
};

use crate::error::{HarnessError, Result};

/// Failures kept per module; the total is counted separately.
const KEEP: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub instance: String,
    pub detail: String,
}

/// Outcome counts of one theorem on one module.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub checked: u64,
    /// `(reason, count)` in first-seen order.
    pub skipped: Vec<(String, u64)>,
    pub failures: Vec<Failure>,
    pub failure_count: u64,
}

impl Tally {
    fn skip(&mut self, reason: &str) {
        self.skip_n(reason, 1);
    }

    fn skip_n(&mut self, reason: &str, n: u64) {
        if n == 0 {
            return;
        }
        match self.skipped.iter_mut().find(|e| e.0 == reason) {
            Some(e) => e.1 += n,
            None => self.skipped.push((reason.to_string(), n)),
        }
    }

    fn check(&mut self, ok: bool, instance: impl FnOnce() -> String, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failure_count += 1;
            if self.failures.len() < KEEP {
                self.failures.push(Failure { instance: instance(), detail: detail() });
            }
        }
    }
}

/// Runs theorem `id` on one module.
pub fn run(id: &str, m: &FiniteModule, phis: &[Phi]) -> Result<Tally> {
    let mut t = Tally::default();
    match id {
        "theo4" => theo4(m, phis, &mut t)?,
        "theo5" => conditions(m, phis, &Condition::THEO5, false, &mut t)?,
        "theo1" => theo1(m, phis, &mut t)?,
        "theo2" => theo2(m, phis, &mut t)?,
        "prop2" => prop2(m, &mut t)?,
        "prop3" => prop3(m, phis, &mut t)?,
        "theo3" => theo3(m, phis, &mut t)?,
        "theo6" => mult_conditions(m, phis, &[Condition::T6_2], false, &mut t)?,
        "theo6-proper" => {
            if faithful(m, &mut t) {
                mult_conditions(m, phis, &[Condition::T6_2Proper], false, &mut t)?
            }
        }
        "theo7" => conditions(m, phis, &Condition::THEO7, true, &mut t)?,
        "theo9" => mult_conditions(m, phis, &[Condition::T9_2], true, &mut t)?,
        "theo9-faithful" => {
            if faithful(m, &mut t) {
                mult_conditions(m, phis, &[Condition::T9_2], true, &mut t)?
            }
        }
        "theo10" => theo10(m, phis, &mut t)?,
        "theo12" => theo12(m, &mut t)?,
        "theo13" => theo13(m, phis, &mut t)?,
        "theo11" => theo11(m, phis, &mut t)?,
        "cor5" => cor5(m, phis, false, &mut t)?,
        "cor5-proper" => cor5(m, phis, true, &mut t)?,
        "theo14" => theo14(m, phis, Part14::Main, &mut t)?,
        "theo14.3-a" => theo14(m, phis, Part14::ThreeA, &mut t)?,
        "theo14.3-b" => theo14(m, phis, Part14::ThreeB, &mut t)?,
        "theo15-a" => theo15(m, phis, false, &mut t)?,
        "theo15-b" => theo15(m, phis, true, &mut t)?,
        "cor6" => cor6(m, phis, &mut t)?,
        "cor7" => cor7(m, &mut t)?,
        "cor8" => cor8(m, phis, false, &mut t)?,
        "cor8-b" => cor8(m, phis, true, &mut t)?,
        "theo16" => theo16(m, phis, false, &mut t)?,
        "theo16-b" => theo16(m, phis, true, &mut t)?,
        "theo17" => theo17(m, phis, false, &mut t)?,
        "theo17-b" => theo17(m, phis, true, &mut t)?,
        "theo18" => theo18(m, phis, &mut t)?,
        "theo19" => product_ring(m, phis, ProductCase::Nineteen, &mut t)?,
        "theo20" => product_ring(m, phis, ProductCase::Twenty, &mut t)?,
        "theo21" => product_ring(m, phis, ProductCase::TwentyOne, &mut t)?,
        other => return Err(HarnessError::UnknownTheorem(other.to_string())),
    }
    Ok(t)
}

/// Proper submodules with phi values and verdicts for every catalog entry.
struct Grid {
    subs: Vec<Submodule>,
    values: Vec<Vec<PhiValue>>,
    verdicts: Vec<Vec<bool>>,
    /// Verdict for `phi = empty`.
    classical: Vec<bool>,
}

impl Grid {
    fn new(m: &FiniteModule, phis: &[Phi]) -> Result<Grid> {
        let subs: Vec<Submodule> = m.submodules()?.into_iter().filter(|s| s.is_proper()).collect();
        let mut values = Vec::with_capacity(subs.len());
        let mut verdicts = Vec::with_capacity(subs.len());
        let mut classical = Vec::with_capacity(subs.len());
        for n in &subs {
            let vals: Vec<PhiValue> = phis.iter().map(|p| p.eval(n)).collect::<absorb_core::Result<_>>()?;
            let vs = vals
                .iter()
                .map(|v| Ok(is_phi_classical_1abs_at(n, v)?.verdict))
                .collect::<absorb_core::Result<Vec<bool>>>()?;
            classical.push(is_phi_classical_1abs(n, &Phi::empty())?.verdict);
            values.push(vals);
            verdicts.push(vs);
        }
        Ok(Grid { subs, values, verdicts, classical })
    }
}

fn desc(n: &Submodule, phi: &Phi) -> String {
    format!("N={} phi={}", n.display(), phi.name())
}

fn rl(ring: &FiniteRing, r: usize) -> String {
    ring.label(r).to_string()
}

fn quad(m: &FiniteModule, q: &QuadrupleZero) -> String {
    let r = m.ring();
    format!("(a,b,c,m)=({},{},{},{})", rl(r, q.a), rl(r, q.b), rl(r, q.c), m.label(q.m))
}

fn bits_display(m: &FiniteModule, xs: Bits) -> String {
    let labels: Vec<&str> = xs.iter().map(|x| m.label(x)).collect();
    format!("{{{}}}", labels.join(","))
}

/// `{ r x : x in I }`.
fn scale(ring: &FiniteRing, r: usize, ideal: Bits) -> Bits {
    Bits::from_iter(ideal.iter().map(|x| ring.mul(r, x)))
}

/// `I J` as a set of ring elements, closed under addition.
fn ideal_product(ring: &FiniteRing, i: Bits, j: Bits) -> Bits {
    let mut gens = Bits::EMPTY;
    for a in i {
        for b in j {
            gens.insert(ring.mul(a, b));
        }
    }
    ring.additive_closure(gens)
}

/// `X <= phi(N)`, false for a nonempty `X` when `phi(N)` is empty.
fn inside(x: Bits, value: &PhiValue) -> bool {
    x.is_subset(value.bits())
}

fn theo4(m: &FiniteModule, phis: &[Phi], t: &mut Tally) -> Result<()> {
    let g = Grid::new(m, phis)?;
    let ring = m.ring();
    for (i, n) in g.subs.iter().enumerate() {
        for (j, phi) in phis.iter().enumerate() {
            if !g.verdicts[i][j] {
                t.skip("N not phi-classical");
                continue;
            }
            let w = colon_union_witness(n, phi)?;
            t.check(
                w.is_none(),
                || desc(n, phi),
                || {
                    let (a, b, c, x) = w.unwrap();
                    format!("colon union fails at a={} b={} c={} m={}", rl(ring, a), rl(ring, b), rl(ring, c), m.label(x))
                },
            );
        }
    }
    Ok(())
}

fn conditions(m: &FiniteModule, phis: &[Phi], conds: &[Condition], guarded: bool, t: &mut Tally) -> Result<()> {
    let g = Grid::new(m, phis)?;
    for (i, n) in g.subs.iter().enumerate() {
        for (j, phi) in phis.iter().enumerate() {
            if guarded && !union_guard(n, phi)? {
                t.skip("union-collapse guard fails");
                continue;
            }
            let v = g.verdicts[i][j];
            let mut bad = Vec::new();
            for &c in conds {
                if characterization_check(n, phi, c)? != v {
                    bad.push(c.id());
                }
            }
            t.check(
                bad.is_empty(),
                || desc(n, phi),
                || format!("condition {} disagrees with classifier verdict {v}", bad.join(",")),
            );
        }
    }
    Ok(())
}

/// Skips non-faithful modules; true when `(0:_R M) = 0`.
fn faithful(m: &FiniteModule, t: &mut Tally) -> bool {
    let ok = m.colon_ring_bits(Bits::single(0), m.all()) == Bits::single(0);
    if !ok {
        t.skip("M is not faithful");
    }
    ok
}

/// Some quadruple-zero `(a, b, c, m)` has `acm` and `bcm` outside `N`.
fn supported_cube(n: &Submodule, phi: &Phi) -> Result<bool> {
    let m = n.module();
    Ok(find_quadruple_zeros(n, phi)?.iter().any(|q| {
        let cm = m.act(q.c, q.m);
        !n.contains(m.act(q.a, cm)) && !n.contains(m.act(q.b, cm))
    }))
}

fn mult_conditions(m: &FiniteModule, phis: &[Phi], conds: &[Condition], guarded: bool, t: &mut Tally) -> Result<()> {
    if !is_multiplication(m)? {
        t.skip("M is not a multiplication module");
        return Ok(());
    }
    conditions(m, phis, conds, guarded, t)
}

fn theo1(m: &FiniteModule, phis: &[Phi], t: &mut Tally) -> Result<()> {
    let g = Grid::new(m, phis)?;
    // Part 5 does not involve K.
    for (i, n) in g.subs.iter().enumerate() {
        for (j, phi) in phis.iter().enumerate() {
            let v = &g.values[i][j];
            match v.submodule() {
                Some(p) if g.verdicts[i][j] && is_phi_classical_1abs(p, &Phi::empty())?.verdict => {
                    t.check(g.classical[i], || desc(n, phi), || "part 5: N is not classical".into())
                }
                _ => t.skip("part 5: hypotheses fail"),
            }
        }
    }
    for (ki, k) in g.subs.iter().enumerate() {
        let (q, proj) = m.quotient(k)?;
        let map: Vec<usize> = m.elements().map(|x| proj.apply(x)).collect();
        let pushed: Vec<Phi> = phis.iter().map(|p| Phi::pushforward(p, m, &q, map.clone(), "K")).collect();
        for (i, n) in g.subs.iter().enumerate() {
            if !k.is_subset(n) {
                continue;
            }
            let nk = proj.image(n)?;
            let weakly = is_phi_classical_1abs(&nk, &Phi::zero())?.verdict;
            for (j, phi) in phis.iter().enumerate() {
                let v = g.verdicts[i][j];
                let value = &g.values[i][j];
                let vk = is_phi_classical_1abs(&nk, &pushed[j])?.verdict;
                let inst = || format!("{} K={}", desc(n, phi), k.display());
                if v {
                    t.check(vk, inst, || "part 1: N/K is not phi_K-classical".into());
                } else {
                    t.skip("part 1: N not phi-classical");
                }
                if !value.is_empty_set() && k.elements().is_subset(value.bits()) && vk {
                    t.check(v, inst, || "part 2: N is not phi-classical".into());
                } else {
                    t.skip("part 2: hypotheses fail");
                }
                if value.bits().is_subset(k.elements()) && v {
                    t.check(weakly, inst, || "part 3: N/K is not weakly classical".into());
                } else {
                    t.skip("part 3: hypotheses fail");
                }
                if g.values[ki][j].is_subset(value) && g.verdicts[ki][j] && weakly {
                    t.check(v, inst, || "part 4: N is not phi-classical".into());
                } else {
                    t.skip("part 4: hypotheses fail");
                }
            }
        }
    }
    Ok(())
}

fn theo2(m: &FiniteModule, phis: &[Phi], t: &mut Tally) -> Result<()> {
    let g = Grid::new(m, phis)?;
    let ring = m.ring();
    let reg = FiniteModule::regular(ring);
    // (ideal bits, psi index) -> (psi(I) bits, I psi-1-absorbing prime)
    let mut cache: HashMap<(u128, usize), (Bits, bool)> = HashMap::new();
    let mut ideal_data = |ideal: Bits, k: usize| -> Result<(Bits, bool)> {
        if let Some(&hit) = cache.get(&(ideal.0, k)) {
            return Ok(hit);
        }
        let value = phis[k].eval(&Submodule::new(&reg, ideal)?)?;
        let psi_ideal = match &value {
            PhiValue::Empty => None,
            PhiValue::Sub(s) => Some(Ideal::new(ring, s.elements())?),
        };
        let absorbs = psi_1absorbing_witness(&Ideal::new(ring, ideal)?, psi_ideal.as_ref())?.is_none();
        let out = (value.bits(), absorbs);
        cache.insert((ideal.0, k), out);
        Ok(out)
    };
    for (i, n) in g.subs.iter().enumerate() {
        let outside: Vec<usize> = m.all().difference(n.elements()).to_vec();
        let colons: Vec<Bits> = outside.iter().map(|&x| m.colon_ring_bits(n.elements(), Bits::single(x))).collect();
        for (j, phi) in phis.iter().enumerate() {
            let v = g.verdicts[i][j];
            let pb = g.values[i][j].bits();
            let phi_colons: Vec<Bits> = outside.iter().map(|&x| m.colon_ring_bits(pb, Bits::single(x))).collect();
            for (k, psi) in phis.iter().enumerate() {
                let inst = || format!("{} psi={}", desc(n, phi), psi.name());
                let mut uniform = true;
                for (x, (&ideal, &phc)) in colons.iter().zip(&phi_colons).enumerate() {
                    let (psi_bits, absorbs) = ideal_data(ideal, k)?;
                    if v && phc.is_subset(psi_bits) {
                        t.check(
                            absorbs,
                            || format!("{} m={}", inst(), m.label(outside[x])),
                            || "part 1: (N:_R m) is not psi-1-absorbing prime".into(),
                        );
                    } else {
                        t.skip("part 1: hypotheses fail");
                    }
                    uniform &= psi_bits.is_subset(phc) && absorbs;
                }
                if uniform {
                    t.check(v, inst, || "part 2: N is not phi-classical".into());
                } else {
                    t.skip("part 2: hypothesis fails for some m outside N");
                }
            }
        }
    }
    Ok(())
}

fn prop2(m: &FiniteModule, t: &mut Tally) -> Result<()> {
    if !is_multiplication(m)? {
        t.skip("M is not a multiplication module");
        return Ok(());
    }
    for n in m.submodules()?.iter().filter(|s| s.is_proper()) {
        let classical = is_phi_classical_1abs(n, &Phi::empty())?.verdict;
        for k_n in 2..=4u32 {
            let almost = is_phi_classical_1abs(n, &Phi::n_almost(k_n)?)?.verdict;
            for k in 2..=k_n {
                if almost && is_n_potent_classical_1abs(n, k)?.verdict {
                    t.check(
                        classical,
                        || format!("N={} n={k_n} k={k}", n.display()),
                        || "N is not classical".into(),
                    );
                } else {
                    t.skip("N not n-almost and k-potent");
                }
            }
        }
    }
    Ok(())
}

fn prop3(m: &FiniteModule, phis: &[Phi], t: &mut Tally) -> Result<()> {
    if !m.is_cyclic() {
        t.skip("M is not cyclic");
        return Ok(());
    }
    let g = Grid::new(m, phis)?;
    for (i, n) in g.subs.iter().enumerate() {
        for (j, phi) in phis.iter().enumerate() {
            let a = is_phi_1abs_prime(n, phi)?.verdict;
            t.check(
                a == g.verdicts[i][j],
                || desc(n, phi),
                || format!("phi-1-absorbing prime is {a}, phi-classical is {}", g.verdicts[i][j]),
            );
        }
    }
    Ok(())
}

fn theo3(m: &FiniteModule, phis: &[Phi], t: &mut Tally) -> Result<()> {
    use absorb_core::construct::{transfer_image, transfer_preimage};
    let subs: Vec<Submodule> = m.submodules()?.into_iter().filter(|s| s.is_proper()).collect();
    for k in &subs {
        let (q, proj) = m.quotient(k)?;
        let qsubs: Vec<Submodule> = q.submodules()?.into_iter().filter(|s| s.is_proper()).collect();
        for phi in phis {
            for np in &qsubs {
                let o = transfer_preimage(&proj, np, phi, phi)?;
                if !o.compatible {
                    t.skip("part 1: phi compatibility fails");
                } else if !o.target_verdict {
                    t.skip("part 1: N' not phi'-classical");
                } else {
                    t.check(
                        o.source_verdict,
                        || format!("K={} N'={} phi={}", k.display(), np.display(), phi.name()),
                        || "part 1: preimage is not phi-classical".into(),
                    );
                }
            }
            for n in &subs {
                match transfer_image(&proj, n, phi, phi)? {
                    None => t.skip("part 2: Ker f not inside N"),
                    Some(o) if !o.compatible => t.skip("part 2: phi compatibility fails"),
                    Some(o) if !o.source_verdict => t.skip("part 2: N not phi-classical"),
                    Some(o) => t.check(
                        o.target_verdict,
                        || format!("K={} {}", k.display(), desc(n, phi)),
                        || "part 2: image is not phi'-classical".into(),
                    ),
                }
            }
        }
    }
    Ok(())
}

const TENSOR_LIMIT: usize = 64;

fn theo10(m: &FiniteModule, phis: &[Phi], t: &mut Tally) -> Result<()> {
    let g = Grid::new(m, phis)?;
    for k in 1..=2usize {
        if m.size().pow(k as u32) > TENSOR_LIMIT {
            t.skip_n("M^k exceeds 64 elements", (g.subs.len() * phis.len()) as u64);
            continue;
        }
        for (i, n) in g.subs.iter().enumerate() {
            let (_, nk) = tensor_free(m, k, n)?;
            for (j, phi) in phis.iter().enumerate() {
                let value = &g.values[i][j];
                let lifted = phi.eval(&nk)?;
                let compatible = match (value, &lifted) {
                    (PhiValue::Empty, PhiValue::Empty) => true,
                    (PhiValue::Sub(a), PhiValue::Sub(b)) => power_bits(a.elements(), m.size(), k) == b.elements(),
                    _ => false,
                };
                if !compatible {
                    t.skip("phi compatibility fails");
                    continue;
                }
                if !union_guard(n, phi)? || !union_guard(&nk, phi)? {
                    t.skip("union-collapse guard fails");
                    continue;
                }
                let v = g.verdicts[i][j];
                let vk = is_phi_classical_1abs_at(&nk, &lifted)?.verdict;
                let inst = || format!("{} k={k}", desc(n, phi));
                if v {
                    t.check(vk, inst, || "part 1: F(x)N is not phi-classical".into());
                } else {
                    t.skip("part 1: N not phi-classical");
                }
                t.check(v == vk, inst, || format!("part 2: N gives {v}, F(x)N gives {vk}"));
            }
        }
    }
    Ok(())
}

fn theo12(m: &FiniteModule, t: &mut Tally) -> Result<()> {
    let ring = m.ring();
    for a in ring.elements() {
        let am = m.act_set(Bits::single(a), m.all());
        if am == m.all() {
            t.skip("aM = M");
            continue;
        }
        let ann = Bits::from_iter(m.elements().filter(|&x| m.act(a, x) == 0));
        if !ann.is_subset(am) {
            t.skip("(0:_M a) not inside aM");
            continue;
        }
        let n = Submodule::new(m, am)?;
        let almost = is_phi_classical_1abs(&n, &Phi::almost())?.verdict;
        let classical = is_phi_classical_1abs(&n, &Phi::empty())?.verdict;
        t.check(
            almost == classical,
            || format!("a={} aM={}", rl(ring, a), n.display()),
            || format!("almost is {almost}, classical is {classical}"),
        );
    }
    Ok(())
}

fn theo13(m: &FiniteModule, phis: &[Phi], t: &mut Tally) -> Result<()> {
    let g = Grid::new(m, phis)?;
    let ring = m.ring();
    let mut seen = Vec::new();
    for s in ring.elements() {
        let set = MultSet::generated(ring, &[s]);
        if seen.contains(&set.elements()) {
            continue;
        }
        seen.push(set.elements());
        let pairs = (g.subs.len() * phis.len()) as u64;
        if set.contains_zero() {
            t.skip_n("0 in S", pairs);
            continue;
        }
        let loc = localize(m, &set)?;
        for (i, n) in g.subs.iter().enumerate() {
            if set.meets(&n.colon()) {
                t.skip_n("(N:_R M) meets S", phis.len() as u64);
                continue;
            }
            let ln = loc.image(n)?;
            for (j, phi) in phis.iter().enumerate() {
                if !g.verdicts[i][j] {
                    t.skip("N not phi-classical");
                    continue;
                }
                let inst = || format!("{} S={}", desc(n, phi), bits_display_ring(ring, set.elements()));
                if !ln.is_proper() {
                    t.check(false, inst, || "S^-1 N is not proper".into());
                    continue;
                }
                let value = match &g.values[i][j] {
                    PhiValue::Empty => PhiValue::Empty,
                    PhiValue::Sub(p) => PhiValue::Sub(loc.image(p)?),
                };
                let ok = is_phi_classical_1abs_at(&ln, &value)?.verdict;
                t.check(ok, inst, || format!("S^-1 N = {} is not phi_S-classical", ln.display()));
            }
        }
    }
    Ok(())
}

fn bits_display_ring(ring: &FiniteRing, xs: Bits) -> String {
    let labels: Vec<&str> = xs.iter().map(|x| ring.label(x)).collect();
    format!("{{{}}}", labels.join(","))
}

/// Quadruple-zeros grouped by `(a, b, c)` as sets of `m`.
fn zero_table(zeros: &[QuadrupleZero]) -> HashMap<(usize, usize, usize), Bits> {
    let mut out: HashMap<(usize, usize, usize), Bits> = HashMap::new();
    for q in zeros {
        out.entry((q.a, q.b, q.c)).or_default().insert(q.m);
    }
    out
}

fn theo11(m: &FiniteModule, phis: &[Phi], t: &mut Tally) -> Result<()> {
    let g = Grid::new(m, phis)?;
    let ring = m.ring();
    let all_subs = m.submodule_bits()?.to_vec();
    let nu = ring.nonunits();
    for (i, n) in g.subs.iter().enumerate() {
        let nb = n.elements();
        for (j, phi) in phis.iter().enumerate() {
            if !g.verdicts[i][j] {
                t.skip("N not phi-classical");
                continue;
            }
            let zeros = zero_table(&find_quadruple_zeros(n, phi)?);
            for a in nu {
                for b in nu {
                    let ab = ring.mul(a, b);
                    for c in nu {
                        let abc = ring.mul(ab, c);
                        let qz = zeros.get(&(a, b, c)).copied().unwrap_or(Bits::EMPTY);
                        for &k in &all_subs {
                            if !m.act_set(Bits::single(abc), k).is_subset(nb) {
                                t.skip("abcK not inside N");
                            } else if !qz.intersection(k).is_empty() {
                                t.skip("quadruple-zero with m in K");
                            } else {
                                let ok = m.act_set(Bits::single(ab), k).is_subset(nb)
                                    || m.act_set(Bits::single(c), k).is_subset(nb);
                                t.check(
                                    ok,
                                    || format!("{} a={} b={} c={} K={}", desc(n, phi), rl(ring, a), rl(ring, b), rl(ring, c), bits_display(m, k)),
                                    || "neither abK nor cK lies in N".into(),
                                );
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

fn cor5(m: &FiniteModule, phis: &[Phi], proper_only: bool, t: &mut Tally) -> Result<()> {
    let g = Grid::new(m, phis)?;
    let ring = m.ring();
    let ideals: Vec<Bits> = ring
        .ideals()
        .into_iter()
        .filter(|i| !proper_only || i.is_proper())
        .map(|i| i.elements())
        .collect();
    let all_subs = m.submodule_bits()?.to_vec();
    let mut products: HashMap<(u128, u128), Bits> = HashMap::new();
    let mut product = |x: Bits, y: Bits| *products.entry((x.0, y.0)).or_insert_with(|| ideal_product(ring, x, y));
    for (i, n) in g.subs.iter().enumerate() {
        let nb = n.elements();
        for (j, phi) in phis.iter().enumerate() {
            if !g.verdicts[i][j] {
                t.skip("N not phi-classical");
                continue;
            }
            let zeros = find_quadruple_zeros(n, phi)?;
            for &h in &ideals {
                for &ii in &ideals {
                    let hi = product(h, ii);
                    for &jj in &ideals {
                        let hij = product(hi, jj);
                        for &k in &all_subs {
                            if !m.ideal_times_bits(hij, k).is_subset(nb) {
                                t.skip("HIJK not inside N");
                                continue;
                            }
                            let free = !zeros
                                .iter()
                                .any(|q| h.contains(q.a) && ii.contains(q.b) && jj.contains(q.c) && k.contains(q.m));
                            if !free {
                                t.skip("not quadruple-zero free");
                                continue;
                            }
                            let ok = m.ideal_times_bits(hi, k).is_subset(nb) || m.ideal_times_bits(jj, k).is_subset(nb);
                            t.check(
                                ok,
                                || {
                                    format!(
                                        "{} H={} I={} J={} K={}",
                                        desc(n, phi),
                                        bits_display_ring(ring, h),
                                        bits_display_ring(ring, ii),
                                        bits_display_ring(ring, jj),
                                        bits_display(m, k)
                                    )
                                },
                                || "neither HIK nor JK lies in N".into(),
                            );
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Part14 {
    Main,
    ThreeA,
    ThreeB,
}

fn theo14(m: &FiniteModule, phis: &[Phi], part: Part14, t: &mut Tally) -> Result<()> {
    let g = Grid::new(m, phis)?;
    let ring = m.ring();
    for (i, n) in g.subs.iter().enumerate() {
        let nb = n.elements();
        let colon = n.colon().elements();
        let colon2 = ideal_product(ring, colon, colon);
        let colon3 = ideal_product(ring, colon2, colon);
        for (j, phi) in phis.iter().enumerate() {
            if !g.verdicts[i][j] {
                t.skip("N not phi-classical");
                continue;
            }
            let value = &g.values[i][j];
            let zeros = find_quadruple_zeros(n, phi)?;
            if zeros.is_empty() {
                t.skip("no quadruple-zero");
            }
            for q in &zeros {
                let one = Bits::single(q.m);
                let ab = ring.mul(q.a, q.b);
                let ac = ring.mul(q.a, q.c);
                let bc = ring.mul(q.b, q.c);
                let gated = !nb.contains(m.act(ac, q.m)) && !nb.contains(m.act(bc, q.m));
                let inst = || format!("{} {}", desc(n, phi), quad(m, q));
                match part {
                    Part14::Main => {
                        let abc = ring.mul(ab, q.c);
                        t.check(inside(m.act_set(Bits::single(abc), nb), value), inst, || "part 1: abcN not inside phi(N)".into());
                        t.check(inside(m.act_set(scale(ring, ab, colon), one), value), inst, || "part 2: ab(N:M)m not inside phi(N)".into());
                        if !gated {
                            t.skip_n("parts 4-5: a or b in (N:cm)", 2);
                            continue;
                        }
                        let four = [q.a, q.b, q.c].iter().all(|&x| inside(m.act_set(scale(ring, x, colon2), one), value));
                        t.check(four, inst, || "part 4: x(N:M)^2 m not inside phi(N)".into());
                        t.check(inside(m.act_set(colon3, one), value), inst, || "part 5: (N:M)^3 m not inside phi(N)".into());
                    }
                    Part14::ThreeA | Part14::ThreeB => {
                        if !gated {
                            t.skip("a or b in (N:cm)");
                            continue;
                        }
                        let first = inside(m.act_set(scale(ring, ac, colon), one), value);
                        let second_target = if part == Part14::ThreeA { one } else { m.all() };
                        let second = inside(m.act_set(scale(ring, bc, colon), second_target), value);
                        t.check(first && second, inst, || {
                            if first {
                                "bc(N:M) clause fails".into()
                            } else {
                                "ac(N:M)m not inside phi(N)".into()
                            }
                        });
                    }
                }
            }
        }
    }
    Ok(())
}

/// `(N:M)^(n-1) N`.
fn colon_power_times(n: &Submodule, e: u32) -> Result<Bits> {
    Ok(Phi::n_almost(e)?.eval(n)?.bits())
}

fn theo15(m: &FiniteModule, phis: &[Phi], by_cm: bool, t: &mut Tally) -> Result<()> {
    let g = Grid::new(m, phis)?;
    for (i, n) in g.subs.iter().enumerate() {
        let nb = n.elements();
        let colon = n.colon();
        let cube = colon_power_times(n, 4)?;
        for (j, phi) in phis.iter().enumerate() {
            if !g.verdicts[i][j] || g.classical[i] {
                t.skip("N not phi-classical or N classical");
                continue;
            }
            let zeros = find_quadruple_zeros(n, phi)?;
            t.check(!zeros.is_empty(), || desc(n, phi), || "no quadruple-zero exists".into());
            let value = &g.values[i][j];
            for q in &zeros {
                let ok_gate = if by_cm {
                    let cm = m.act(q.c, q.m);
                    !nb.contains(m.act(q.a, cm)) && !nb.contains(m.act(q.b, cm))
                } else {
                    !colon.contains(q.a) && !colon.contains(q.b)
                };
                if !ok_gate {
                    t.skip("reading hypothesis on a,b fails");
                    continue;
                }
                t.check(
                    inside(cube, value),
                    || format!("{} {}", desc(n, phi), quad(m, q)),
                    || format!("(N:M)^3 N = {} not inside phi(N)", bits_display(m, cube)),
                );
            }
        }
    }
    Ok(())
}

fn cor6(m: &FiniteModule, phis: &[Phi], t: &mut Tally) -> Result<()> {
    let g = Grid::new(m, phis)?;
    for (i, n) in g.subs.iter().enumerate() {
        let fourth = colon_power_times(n, 5)?;
        let omega = is_phi_classical_1abs(n, &Phi::omega())?.verdict;
        for (j, phi) in phis.iter().enumerate() {
            if !g.verdicts[i][j] {
                t.skip("N not phi-classical");
            } else if g.classical[i] {
                t.skip("N classical");
            } else if !g.values[i][j].bits().is_subset(fourth) {
                t.skip("phi(N) not inside (N:M)^4 N");
            } else {
                t.check(omega, || desc(n, phi), || "N is not omega-classical".into());
            }
        }
    }
    Ok(())
}

fn cor7(m: &FiniteModule, t: &mut Tally) -> Result<()> {
    for n in m.submodules()?.iter().filter(|s| s.is_proper()) {
        if is_phi_classical_1abs(n, &Phi::empty())?.verdict {
            t.skip_n("N classical", 3);
            continue;
        }
        let cube = colon_power_times(n, 4)?;
        for k in 4..=6u32 {
            if !is_phi_classical_1abs(n, &Phi::n_almost(k)?)?.verdict {
                t.skip("N not n-almost classical");
                continue;
            }
            let other = colon_power_times(n, k)?;
            t.check(
                cube == other,
                || format!("N={} n={k}", n.display()),
                || format!("(N:M)^3 N = {} but (N:M)^(n-1) N = {}", bits_display(m, cube), bits_display(m, other)),
            );
        }
    }
    Ok(())
}

fn cor8(m: &FiniteModule, phis: &[Phi], supported: bool, t: &mut Tally) -> Result<()> {
    if !is_multiplication(m)? {
        t.skip("M is not a multiplication module");
        return Ok(());
    }
    let g = Grid::new(m, phis)?;
    for (i, n) in g.subs.iter().enumerate() {
        if g.classical[i] {
            t.skip_n("N classical", phis.len() as u64 + 3);
            continue;
        }
        let n4 = submodule_power(n, 4)?.elements();
        for (j, phi) in phis.iter().enumerate() {
            if !g.verdicts[i][j] {
                t.skip("N not phi-classical");
                continue;
            }
            if supported && !supported_cube(n, phi)? {
                t.skip("no quadruple-zero with a,b not in (N:cm)");
                continue;
            }
            t.check(inside(n4, &g.values[i][j]), || desc(n, phi), || "part 1: N^4 not inside phi(N)".into());
        }
        for k in 4..=6u32 {
            let phi_k = Phi::n_almost(k)?;
            if !is_phi_classical_1abs(n, &phi_k)?.verdict {
                t.skip("N not n-almost classical");
                continue;
            }
            if supported && !supported_cube(n, &phi_k)? {
                t.skip("no quadruple-zero with a,b not in (N:cm)");
                continue;
            }
            let nk = submodule_power(n, k)?.elements();
            t.check(
                n4.is_subset(nk),
                || format!("N={} n={k}", n.display()),
                || "part 2: N^4 not inside N^n".into(),
            );
        }
    }
    Ok(())
}

fn theo16(m: &FiniteModule, phis: &[Phi], supported: bool, t: &mut Tally) -> Result<()> {
    let g = Grid::new(m, phis)?;
    let mult = is_multiplication(m)?;
    for (i, n) in g.subs.iter().enumerate() {
        let rad = n.colon().radical().elements();
        for (j, phi) in phis.iter().enumerate() {
            if !g.verdicts[i][j] || g.classical[i] {
                t.skip("N not phi-classical or N classical");
                continue;
            }
            let Some(p) = g.values[i][j].submodule() else {
                t.skip("phi(N) empty");
                continue;
            };
            if supported && !supported_cube(n, phi)? {
                t.skip("no quadruple-zero with a,b not in (N:cm)");
                continue;
            }
            let prad = p.colon().radical().elements();
            t.check(rad == prad, || desc(n, phi), || "part 1: sqrt((N:M)) != sqrt((phi(N):M))".into());
            if mult {
                let a = m_radical(n)?.elements();
                let b = m_radical(p)?.elements();
                t.check(a == b, || desc(n, phi), || "part 2: M-rad(N) != M-rad(phi(N))".into());
            } else {
                t.skip("part 2: M is not a multiplication module");
            }
        }
    }
    Ok(())
}

fn theo17(m: &FiniteModule, phis: &[Phi], supported: bool, t: &mut Tally) -> Result<()> {
    let g = Grid::new(m, phis)?;
    let ring = m.ring();
    for (j, phi) in phis.iter().enumerate() {
        let mut picks = Vec::new();
        for i in 0..g.subs.len() {
            if g.verdicts[i][j] && !g.classical[i] && (!supported || supported_cube(&g.subs[i], phi)?) {
                picks.push(i);
            }
        }
        let skipped = g.subs.len() * g.subs.len() - picks.len() * picks.len();
        t.skip_n("N1 or N2 outside the hypotheses", skipped as u64);
        for &x in &picks {
            for &y in &picks {
                let (n1, n2) = (&g.subs[x], &g.subs[y]);
                let (v1, v2) = (&g.values[x][j], &g.values[y][j]);
                let inst = || format!("N1={} N2={} phi={}", n1.display(), n2.display(), phi.name());
                if x <= y {
                    let lhs = ring.additive_closure(n1.colon().elements().union(n2.colon().elements()));
                    let lhs = Ideal::new(ring, lhs)?.radical().elements();
                    let colon_of = |v: &PhiValue| v.submodule().map(|s| s.colon().elements()).unwrap_or(Bits::EMPTY);
                    let rhs = ring.additive_closure(colon_of(v1).union(colon_of(v2)));
                    let rhs = if rhs.is_empty() { Bits::EMPTY } else { Ideal::new(ring, rhs)?.radical().elements() };
                    t.check(lhs == rhs, inst, || "part 1: radicals of the colon sums differ".into());
                }
                let sum = n1.sum(n2)?;
                if !sum.is_proper() {
                    t.skip("part 2: N1+N2 = M");
                    continue;
                }
                let vs = phi.eval(&sum)?;
                if !(v1.bits().is_subset(n2.elements()) && v2.is_subset(&vs)) {
                    t.skip("part 2: phi(N1) <= N2 or phi(N2) <= phi(N1+N2) fails");
                    continue;
                }
                let ok = is_phi_classical_1abs_at(&sum, &vs)?.verdict;
                t.check(ok, inst, || format!("part 2: N1+N2 = {} is not phi-classical", sum.display()));
            }
        }
    }
    Ok(())
}

fn product_factors(m: &FiniteModule, over_ring_product: bool) -> Option<(FiniteModule, FiniteModule)> {
    match m.origin() {
        ModuleOrigin::Product { left, right, over_ring_product: o } if *o == over_ring_product => {
            Some((left.clone(), right.clone()))
        }
        _ => None,
    }
}

fn theo18(m: &FiniteModule, phis: &[Phi], t: &mut Tally) -> Result<()> {
    let Some((m1, m2)) = product_factors(m, false) else {
        t.skip("M is not a product over a common ring");
        return Ok(());
    };
    let whole2 = Submodule::whole(&m2);
    for n1 in m1.submodules()?.iter().filter(|s| s.is_proper()) {
        for psi1 in phis {
            let c1 = is_phi_classical_1abs(n1, psi1)?.verdict;
            for psi2 in phis {
                let inst = build_product_instance(m, n1, &whole2, psi1, psi2)?;
                let lhs = is_phi_classical_1abs(&inst.submodule, &inst.phi)?.verdict;
                let rhs = c1 && product_side_condition(n1, psi1, &m2, psi2)?;
                t.check(
                    lhs == rhs,
                    || format!("N1={} psi1={} psi2={}", n1.display(), psi1.name(), psi2.name()),
                    || format!("N is phi-classical: {lhs}; N1 condition and side condition: {rhs}"),
                );
            }
        }
    }
    Ok(())
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum ProductCase {
    Nineteen,
    Twenty,
    TwentyOne,
}

fn product_ring(m: &FiniteModule, phis: &[Phi], case: ProductCase, t: &mut Tally) -> Result<()> {
    let Some((m1, m2)) = product_factors(m, true) else {
        t.skip("M is not a product over a product ring");
        return Ok(());
    };
    let whole2 = Submodule::whole(&m2);
    let subs1: Vec<Submodule> = m1.submodules()?.into_iter().filter(|s| s.is_proper()).collect();
    match case {
        ProductCase::Nineteen | ProductCase::Twenty => {
            for n1 in &subs1 {
                let classical1 = is_phi_classical_1abs(n1, &Phi::empty())?.verdict;
                for psi1 in phis {
                    let c1 = is_phi_classical_1abs(n1, psi1)?.verdict;
                    for psi2 in phis {
                        let full = psi2.eval(&whole2)?.bits() == m2.all();
                        if full != (case == ProductCase::Twenty) {
                            t.skip(if full { "psi2(M2) = M2" } else { "psi2(M2) != M2" });
                            continue;
                        }
                        let inst = build_product_instance(m, n1, &whole2, psi1, psi2)?;
                        let cn = is_phi_classical_1abs(&inst.submodule, &inst.phi)?.verdict;
                        let label = || format!("N1={} psi1={} psi2={}", n1.display(), psi1.name(), psi2.name());
                        if case == ProductCase::Twenty {
                            t.check(c1 == cn, label, || format!("N1 psi1-classical: {c1}; N phi-classical: {cn}"));
                        } else {
                            let classical = is_phi_classical_1abs(&inst.submodule, &Phi::empty())?.verdict;
                            t.check(
                                classical1 == classical && classical == cn,
                                label,
                                || format!("N1 classical: {classical1}; N classical: {classical}; N phi-classical: {cn}"),
                            );
                        }
                    }
                }
            }
        }
        ProductCase::TwentyOne => {
            let subs2: Vec<Submodule> = m2.submodules()?.into_iter().filter(|s| s.is_proper()).collect();
            for n1 in &subs1 {
                for n2 in &subs2 {
                    for psi1 in phis {
                        for psi2 in phis {
                            let inst = build_product_instance(m, n1, n2, psi1, psi2)?;
                            if !is_phi_classical_1abs(&inst.submodule, &inst.phi)?.verdict {
                                t.skip("N not phi-classical");
                                continue;
                            }
                            let a = is_phi_classical_1abs(n1, psi1)?.verdict;
                            let b = is_phi_classical_1abs(n2, psi2)?.verdict;
                            t.check(
                                a && b,
                                || format!("N1={} N2={} psi1={} psi2={}", n1.display(), n2.display(), psi1.name(), psi2.name()),
                                || format!("N1 psi1-classical: {a}; N2 psi2-classical: {b}"),
                            );
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use absorb_core::expr::parse_module;

    #[test]
    fn theo6_literal_fails_on_z8() {
        let m = parse_module("self(zn(8))").unwrap();
        let t = run("theo6", &m, &[Phi::empty()]).unwrap();
        assert!(t.failure_count > 0);
        let t = run("theo6-proper", &m, &[Phi::empty()]).unwrap();
        assert_eq!(t.failure_count, 0);
    }

    #[test]
    fn product_checks_skip_non_products() {
        let m = parse_module("self(zn(6))").unwrap();
        let t = run("theo18", &m, &Phi::standard_catalog()).unwrap();
        assert_eq!(t.checked, 0);
        assert_eq!(t.skipped.len(), 1);
    }

    #[test]
    fn unknown_id_is_rejected() {
        let m = parse_module("self(zn(6))").unwrap();
        assert!(matches!(run("theo99", &m, &[]), Err(HarnessError::UnknownTheorem(_))));
    }

    #[test]
    fn theo5_checks_every_pair() {
        let m = parse_module("self(zn(8))").unwrap();
        let cat = Phi::standard_catalog();
        let t = run("theo5", &m, &cat).unwrap();
        assert_eq!(t.checked, 3 * cat.len() as u64);
        assert_eq!(t.failure_count, 0);
    }
}
