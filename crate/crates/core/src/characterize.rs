//! Literal evaluation of the equivalent conditions for phi-classical
//! 1-absorbing prime submodules, the colon-union identity, and the
//! union-collapse guard.
//!
//! Each condition is an independent enumeration; none of them calls the
//! definitional classifier. A violation is reported as a short text naming
//! the falsifying tuple.

use std::fmt;
use std::str::FromStr;

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::module::{FiniteModule, Submodule};
use crate::multiplication::is_multiplication;
use crate::phi::Phi;
use crate::primes::union_collapse_bits;
use crate::ring::FiniteRing;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Condition {
    T5_2,
    T5_3,
    T5_4,
    T5_5,
    T5_6,
    T5_7,
    T5_8,
    T6_2,
    /// `T6.2` with `N1, N2, N3` restricted to proper submodules.
    T6_2Proper,
    T7_2,
    T7_3,
    T7_4,
    T7_5,
    T7_6,
    T7_7,
    T7_8,
    T9_2,
}

impl Condition {
    pub const THEO5: [Condition; 7] = [
        Condition::T5_2,
        Condition::T5_3,
        Condition::T5_4,
        Condition::T5_5,
        Condition::T5_6,
        Condition::T5_7,
        Condition::T5_8,
    ];

    pub const THEO7: [Condition; 7] = [
        Condition::T7_2,
        Condition::T7_3,
        Condition::T7_4,
        Condition::T7_5,
        Condition::T7_6,
        Condition::T7_7,
        Condition::T7_8,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Condition::T5_2 => "T5.2",
            Condition::T5_3 => "T5.3",
            Condition::T5_4 => "T5.4",
            Condition::T5_5 => "T5.5",
            Condition::T5_6 => "T5.6",
            Condition::T5_7 => "T5.7",
            Condition::T5_8 => "T5.8",
            Condition::T6_2 => "T6.2",
            Condition::T6_2Proper => "T6.2p",
            Condition::T7_2 => "T7.2",
            Condition::T7_3 => "T7.3",
            Condition::T7_4 => "T7.4",
            Condition::T7_5 => "T7.5",
            Condition::T7_6 => "T7.6",
            Condition::T7_7 => "T7.7",
            Condition::T7_8 => "T7.8",
            Condition::T9_2 => "T9.2",
        }
    }

    pub fn needs_multiplication(self) -> bool {
        matches!(self, Condition::T6_2 | Condition::T6_2Proper | Condition::T9_2)
    }

    pub fn all() -> Vec<Condition> {
        let mut v = Condition::THEO5.to_vec();
        v.push(Condition::T6_2);
        v.push(Condition::T6_2Proper);
        v.extend(Condition::THEO7);
        v.push(Condition::T9_2);
        v
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Condition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Condition> {
        Condition::all()
            .into_iter()
            .find(|c| c.id().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Parse { line: 1, column: 1, message: format!("unknown condition `{s}`") })
    }
}

/// Shared data for one `(N, phi)` pair.
struct Ctx<'a> {
    module: &'a FiniteModule,
    ring: &'a FiniteRing,
    n: Bits,
    phi: Bits,
}

impl Ctx<'_> {
    fn rl(&self, r: usize) -> &str {
        self.ring.label(r)
    }

    fn ml(&self, m: usize) -> &str {
        self.module.label(m)
    }

    /// `X <= N` and `X not <= phi(N)`.
    fn in_n_not_phi(&self, x: Bits) -> bool {
        x.is_subset(self.n) && !x.is_subset(self.phi)
    }

    fn scalar_times(&self, s: usize, xs: Bits) -> Bits {
        self.module.act_set(Bits::single(s), xs)
    }

    /// `(target :_R X)`.
    fn colon_r(&self, target: Bits, xs: Bits) -> Bits {
        self.module.colon_ring_bits(target, xs)
    }

    /// `(target :_M s)`.
    fn colon_m(&self, target: Bits, s: usize) -> Bits {
        self.module.colon_module_bits(target, Bits::single(s))
    }

    fn ideal_display(&self, i: Bits) -> String {
        let v: Vec<_> = i.iter().map(|x| self.rl(x).to_string()).collect();
        format!("{{{}}}", v.join(","))
    }

    fn sub_display(&self, s: Bits) -> String {
        let v: Vec<_> = s.iter().map(|x| self.ml(x).to_string()).collect();
        format!("{{{}}}", v.join(","))
    }
}

/// `I J` as a raw ideal.
fn ideal_product(ring: &FiniteRing, i: Bits, j: Bits) -> Bits {
    let mut gens = Bits::EMPTY;
    for x in i {
        for y in j {
            gens.insert(ring.mul(x, y));
        }
    }
    ring.additive_closure(gens)
}

fn proper_ideals(ring: &FiniteRing) -> Vec<Bits> {
    ring.ideals().into_iter().filter(|i| i.is_proper()).map(|i| i.elements()).collect()
}

fn all_ideals(ring: &FiniteRing) -> Vec<Bits> {
    ring.ideals().into_iter().map(|i| i.elements()).collect()
}

/// `true` iff the condition holds for `(N, phi)`.
pub fn characterization_check(n: &Submodule, phi: &Phi, condition: Condition) -> Result<bool> {
    Ok(characterization_witness(n, phi, condition)?.is_none())
}

/// The first falsifying tuple for the condition, or `None` when it holds.
pub fn characterization_witness(n: &Submodule, phi: &Phi, condition: Condition) -> Result<Option<String>> {
    if !n.is_proper() {
        return Err(Error::ImproperSubmodule);
    }
    let module = n.module();
    if condition.needs_multiplication() && !is_multiplication(module)? {
        return Err(Error::NotMultiplication);
    }
    let ctx = Ctx { module, ring: module.ring(), n: n.elements(), phi: phi.eval(n)?.bits() };
    match condition {
        Condition::T5_2 => Ok(t5_2(&ctx)),
        Condition::T5_3 => Ok(t5_34(&ctx, false)),
        Condition::T5_4 => Ok(t5_34(&ctx, true)),
        Condition::T5_5 => Ok(t5_5(&ctx)),
        Condition::T5_6 => Ok(t5_6(&ctx)),
        Condition::T5_7 => Ok(t5_7(&ctx)),
        Condition::T5_8 => Ok(t5_8(&ctx)),
        Condition::T6_2 => t6_2(&ctx, false),
        Condition::T6_2Proper => t6_2(&ctx, true),
        Condition::T7_2 => Ok(t7_2(&ctx)),
        Condition::T7_3 => t7_3(&ctx),
        Condition::T7_4 => t7_4(&ctx),
        Condition::T7_5 => t7_5(&ctx),
        Condition::T7_6 => t7_6(&ctx),
        Condition::T7_7 => t7_7(&ctx),
        Condition::T7_8 => t7_8(&ctx),
        Condition::T9_2 => t9_2(&ctx),
    }
}

/// `(N:_M abc) = (phi(N):_M abc) u (N:_M ab) u (N:_M c)`.
fn t5_2(c: &Ctx) -> Option<String> {
    let nu = c.ring.nonunits();
    for a in nu {
        for b in nu {
            let ab = c.ring.mul(a, b);
            for z in nu {
                let abc = c.ring.mul(ab, z);
                let lhs = c.colon_m(c.n, abc);
                let rhs = c.colon_m(c.phi, abc).union(c.colon_m(c.n, ab)).union(c.colon_m(c.n, z));
                if lhs != rhs {
                    return Some(format!("a={} b={} c={}", c.rl(a), c.rl(b), c.rl(z)));
                }
            }
        }
    }
    None
}

/// For `abm not in N`: `(N:_R abm)` is the union (T5.3) or one of
/// (T5.4) `(phi(N):_R abm)` and `(N:_R m)`.
fn t5_34(c: &Ctx, either: bool) -> Option<String> {
    let nu = c.ring.nonunits();
    for a in nu {
        for b in nu {
            let ab = c.ring.mul(a, b);
            for m in c.module.elements() {
                let x = c.module.act(ab, m);
                if c.n.contains(x) {
                    continue;
                }
                let lhs = c.colon_r(c.n, Bits::single(x));
                let p = c.colon_r(c.phi, Bits::single(x));
                let q = c.colon_r(c.n, Bits::single(m));
                let ok = if either { lhs == p || lhs == q } else { lhs == p.union(q) };
                if !ok {
                    return Some(format!("a={} b={} m={}", c.rl(a), c.rl(b), c.ml(m)));
                }
            }
        }
    }
    None
}

/// `abIm <= N`, `abIm not <= phi(N)` imply `abm in N` or `Im <= N`.
fn t5_5(c: &Ctx) -> Option<String> {
    let nu = c.ring.nonunits();
    let ideals = all_ideals(c.ring);
    for a in nu {
        for b in nu {
            let ab = c.ring.mul(a, b);
            for &i in &ideals {
                for m in c.module.elements() {
                    let abm = c.module.act(ab, m);
                    let x = c.module.act_set(i, Bits::single(abm));
                    if c.in_n_not_phi(x)
                        && !c.n.contains(abm)
                        && !c.module.act_set(i, Bits::single(m)).is_subset(c.n)
                    {
                        return Some(format!(
                            "a={} b={} I={} m={}",
                            c.rl(a),
                            c.rl(b),
                            c.ideal_display(i),
                            c.ml(m)
                        ));
                    }
                }
            }
        }
    }
    None
}

/// Proper `I`: `abIm <= N`, `abIm not <= phi(N)` imply `aIm <= N` or `bm in N`.
fn t5_6(c: &Ctx) -> Option<String> {
    let nu = c.ring.nonunits();
    let ideals = proper_ideals(c.ring);
    for a in nu {
        for b in nu {
            let ab = c.ring.mul(a, b);
            for &i in &ideals {
                for m in c.module.elements() {
                    let x = c.module.act_set(i, Bits::single(c.module.act(ab, m)));
                    if c.in_n_not_phi(x)
                        && !c.module.act_set(i, Bits::single(c.module.act(a, m))).is_subset(c.n)
                        && !c.n.contains(c.module.act(b, m))
                    {
                        return Some(format!(
                            "a={} b={} I={} m={}",
                            c.rl(a),
                            c.rl(b),
                            c.ideal_display(i),
                            c.ml(m)
                        ));
                    }
                }
            }
        }
    }
    None
}

/// Proper `I`, nonunit `a`, `aIm not <= N`: `(N:_R aIm)` equals
/// `(phi(N):_R aIm)` or `(N:_R m)`.
fn t5_7(c: &Ctx) -> Option<String> {
    let ideals = proper_ideals(c.ring);
    for a in c.ring.nonunits() {
        for &i in &ideals {
            for m in c.module.elements() {
                let x = c.module.act_set(i, Bits::single(c.module.act(a, m)));
                if x.is_subset(c.n) {
                    continue;
                }
                let lhs = c.colon_r(c.n, x);
                if lhs != c.colon_r(c.phi, x) && lhs != c.colon_r(c.n, Bits::single(m)) {
                    return Some(format!("a={} I={} m={}", c.rl(a), c.ideal_display(i), c.ml(m)));
                }
            }
        }
    }
    None
}

/// Proper `I, J, K`: `IJKm <= N`, `IJKm not <= phi(N)` imply `IJm <= N` or `Km <= N`.
fn t5_8(c: &Ctx) -> Option<String> {
    let ideals = proper_ideals(c.ring);
    for &i in &ideals {
        for &j in &ideals {
            let ij = ideal_product(c.ring, i, j);
            for &k in &ideals {
                let ijk = ideal_product(c.ring, ij, k);
                for m in c.module.elements() {
                    let one = Bits::single(m);
                    if c.in_n_not_phi(c.module.act_set(ijk, one))
                        && !c.module.act_set(ij, one).is_subset(c.n)
                        && !c.module.act_set(k, one).is_subset(c.n)
                    {
                        return Some(format!(
                            "I={} J={} K={} m={}",
                            c.ideal_display(i),
                            c.ideal_display(j),
                            c.ideal_display(k),
                            c.ml(m)
                        ));
                    }
                }
            }
        }
    }
    None
}

/// Submodules `N_1, N_2, N_3`, element `m`, with `N_i m := (N_i:M) m`.
fn t6_2(c: &Ctx, proper_only: bool) -> Result<Option<String>> {
    let subs = c.module.submodule_bits()?;
    let all = c.module.all();
    let colons: Vec<Bits> = subs.iter().map(|&s| c.colon_r(s, all)).collect();
    let allowed = |i: usize| !proper_only || subs[i] != all;
    for (x, &i1) in colons.iter().enumerate().filter(|(i, _)| allowed(*i)) {
        for (y, &i2) in colons.iter().enumerate().filter(|(i, _)| allowed(*i)) {
            let i12 = ideal_product(c.ring, i1, i2);
            for (z, &i3) in colons.iter().enumerate().filter(|(i, _)| allowed(*i)) {
                let i123 = ideal_product(c.ring, i12, i3);
                for m in c.module.elements() {
                    let one = Bits::single(m);
                    if c.in_n_not_phi(c.module.act_set(i123, one))
                        && !c.module.act_set(i12, one).is_subset(c.n)
                        && !c.module.act_set(i3, one).is_subset(c.n)
                    {
                        return Ok(Some(format!(
                            "N1={} N2={} N3={} m={}",
                            c.sub_display(subs[x]),
                            c.sub_display(subs[y]),
                            c.sub_display(subs[z]),
                            c.ml(m)
                        )));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// `(N:_M abc)` equals one of `(phi(N):_M abc)`, `(N:_M ab)`, `(N:_M c)`.
fn t7_2(c: &Ctx) -> Option<String> {
    let nu = c.ring.nonunits();
    for a in nu {
        for b in nu {
            let ab = c.ring.mul(a, b);
            for z in nu {
                let abc = c.ring.mul(ab, z);
                let lhs = c.colon_m(c.n, abc);
                if lhs != c.colon_m(c.phi, abc) && lhs != c.colon_m(c.n, ab) && lhs != c.colon_m(c.n, z) {
                    return Some(format!("a={} b={} c={}", c.rl(a), c.rl(b), c.rl(z)));
                }
            }
        }
    }
    None
}

/// `abcL <= N`, `abcL not <= phi(N)` imply `abL <= N` or `cL <= N`.
fn t7_3(c: &Ctx) -> Result<Option<String>> {
    let nu = c.ring.nonunits();
    let subs = c.module.submodule_bits()?;
    for a in nu {
        for b in nu {
            let ab = c.ring.mul(a, b);
            for z in nu {
                let abc = c.ring.mul(ab, z);
                for &l in subs {
                    if c.in_n_not_phi(c.scalar_times(abc, l))
                        && !c.scalar_times(ab, l).is_subset(c.n)
                        && !c.scalar_times(z, l).is_subset(c.n)
                    {
                        return Ok(Some(format!(
                            "a={} b={} c={} L={}",
                            c.rl(a),
                            c.rl(b),
                            c.rl(z),
                            c.sub_display(l)
                        )));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// `abL not <= N`: `(N:_R abL)` equals `(phi(N):_R abL)` or `(N:_R L)`.
fn t7_4(c: &Ctx) -> Result<Option<String>> {
    let nu = c.ring.nonunits();
    let subs = c.module.submodule_bits()?;
    for a in nu {
        for b in nu {
            let ab = c.ring.mul(a, b);
            for &l in subs {
                let x = c.scalar_times(ab, l);
                if x.is_subset(c.n) {
                    continue;
                }
                let lhs = c.colon_r(c.n, x);
                if lhs != c.colon_r(c.phi, x) && lhs != c.colon_r(c.n, l) {
                    return Ok(Some(format!("a={} b={} L={}", c.rl(a), c.rl(b), c.sub_display(l))));
                }
            }
        }
    }
    Ok(None)
}

/// Every ideal `J`: `abJL <= N`, `abJL not <= phi(N)` imply `abL <= N` or `JL <= N`.
fn t7_5(c: &Ctx) -> Result<Option<String>> {
    let nu = c.ring.nonunits();
    let subs = c.module.submodule_bits()?;
    let ideals = all_ideals(c.ring);
    for a in nu {
        for b in nu {
            let ab = c.ring.mul(a, b);
            for &j in &ideals {
                for &l in subs {
                    let abl = c.scalar_times(ab, l);
                    if c.in_n_not_phi(c.module.ideal_times_bits(j, abl))
                        && !abl.is_subset(c.n)
                        && !c.module.ideal_times_bits(j, l).is_subset(c.n)
                    {
                        return Ok(Some(format!(
                            "a={} b={} J={} L={}",
                            c.rl(a),
                            c.rl(b),
                            c.ideal_display(j),
                            c.sub_display(l)
                        )));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Proper `I, J`: `aIJL <= N`, `aIJL not <= phi(N)` imply `aIL <= N` or `JL <= N`.
fn t7_6(c: &Ctx) -> Result<Option<String>> {
    let nu = c.ring.nonunits();
    let subs = c.module.submodule_bits()?;
    let ideals = proper_ideals(c.ring);
    for a in nu {
        for &i in &ideals {
            for &j in &ideals {
                let ij = ideal_product(c.ring, i, j);
                for &l in subs {
                    let al = c.scalar_times(a, l);
                    if c.in_n_not_phi(c.module.ideal_times_bits(ij, al))
                        && !c.module.ideal_times_bits(i, al).is_subset(c.n)
                        && !c.module.ideal_times_bits(j, l).is_subset(c.n)
                    {
                        return Ok(Some(format!(
                            "a={} I={} J={} L={}",
                            c.rl(a),
                            c.ideal_display(i),
                            c.ideal_display(j),
                            c.sub_display(l)
                        )));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Proper `I, J`, `IJL not <= N`: `(N:_R IJL)` equals `(phi(N):_R IJL)` or `(N:_R L)`.
fn t7_7(c: &Ctx) -> Result<Option<String>> {
    let subs = c.module.submodule_bits()?;
    let ideals = proper_ideals(c.ring);
    for &i in &ideals {
        for &j in &ideals {
            let ij = ideal_product(c.ring, i, j);
            for &l in subs {
                let x = c.module.ideal_times_bits(ij, l);
                if x.is_subset(c.n) {
                    continue;
                }
                let lhs = c.colon_r(c.n, x);
                if lhs != c.colon_r(c.phi, x) && lhs != c.colon_r(c.n, l) {
                    return Ok(Some(format!(
                        "I={} J={} L={}",
                        c.ideal_display(i),
                        c.ideal_display(j),
                        c.sub_display(l)
                    )));
                }
            }
        }
    }
    Ok(None)
}

/// Proper `I, J, K`: `IJKL <= N`, `IJKL not <= phi(N)` imply `IJL <= N` or `KL <= N`.
fn t7_8(c: &Ctx) -> Result<Option<String>> {
    let subs = c.module.submodule_bits()?;
    let ideals = proper_ideals(c.ring);
    for &i in &ideals {
        for &j in &ideals {
            let ij = ideal_product(c.ring, i, j);
            for &k in &ideals {
                let ijk = ideal_product(c.ring, ij, k);
                for &l in subs {
                    if c.in_n_not_phi(c.module.ideal_times_bits(ijk, l))
                        && !c.module.ideal_times_bits(ij, l).is_subset(c.n)
                        && !c.module.ideal_times_bits(k, l).is_subset(c.n)
                    {
                        return Ok(Some(format!(
                            "I={} J={} K={} L={}",
                            c.ideal_display(i),
                            c.ideal_display(j),
                            c.ideal_display(k),
                            c.sub_display(l)
                        )));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Proper `N_1, N_2, N_3`, any `N_4`, with products `(N_1:M)(N_2:M)(N_3:M) N_4`.
fn t9_2(c: &Ctx) -> Result<Option<String>> {
    let subs = c.module.submodule_bits()?;
    let all = c.module.all();
    let proper: Vec<(Bits, Bits)> =
        subs.iter().filter(|&&s| s != all).map(|&s| (s, c.colon_r(s, all))).collect();
    for &(s1, i1) in &proper {
        for &(s2, i2) in &proper {
            let i12 = ideal_product(c.ring, i1, i2);
            for &(s3, i3) in &proper {
                let i123 = ideal_product(c.ring, i12, i3);
                for &l in subs {
                    if c.in_n_not_phi(c.module.ideal_times_bits(i123, l))
                        && !c.module.ideal_times_bits(i12, l).is_subset(c.n)
                        && !c.module.ideal_times_bits(i3, l).is_subset(c.n)
                    {
                        return Ok(Some(format!(
                            "N1={} N2={} N3={} N4={}",
                            c.sub_display(s1),
                            c.sub_display(s2),
                            c.sub_display(s3),
                            c.sub_display(l)
                        )));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// For all nonunits `a, b, c`, `(N:_M abc)` is not covered by the parts
/// `(phi(N):_M abc)` (when nonempty), `(N:_M ab)`, `(N:_M c)` without lying
/// inside one of them. Returns the first `(a, b, c)` where that fails.
pub fn union_guard_witness(n: &Submodule, phi: &Phi) -> Result<Option<(usize, usize, usize)>> {
    let module = n.module();
    let ring = module.ring();
    let nb = n.elements();
    let pb = phi.eval(n)?.bits();
    let nu = ring.nonunits();
    for a in nu {
        for b in nu {
            let ab = ring.mul(a, b);
            for z in nu {
                let abc = ring.mul(ab, z);
                let target = module.colon_module_bits(nb, Bits::single(abc));
                let mut parts = Vec::with_capacity(3);
                let p = module.colon_module_bits(pb, Bits::single(abc));
                if !p.is_empty() {
                    parts.push(p);
                }
                parts.push(module.colon_module_bits(nb, Bits::single(ab)));
                parts.push(module.colon_module_bits(nb, Bits::single(z)));
                if !union_collapse_bits(target, &parts) {
                    return Ok(Some((a, b, z)));
                }
            }
        }
    }
    Ok(None)
}

pub fn union_guard(n: &Submodule, phi: &Phi) -> Result<bool> {
    Ok(union_guard_witness(n, phi)?.is_none())
}

/// First `(a, b, c, m)` violating
/// `(N:_R abcm) = (phi(N):_R abcm) u (N:_R abm) u (N:_R cm)`.
pub fn colon_union_witness(n: &Submodule, phi: &Phi) -> Result<Option<(usize, usize, usize, usize)>> {
    let module = n.module();
    let ring = module.ring();
    let nb = n.elements();
    let pb = phi.eval(n)?.bits();
    let nu = ring.nonunits();
    let colon = |target: Bits, x: usize| module.colon_ring_bits(target, Bits::single(x));
    for a in nu {
        for b in nu {
            let ab = ring.mul(a, b);
            for z in nu {
                let abc = ring.mul(ab, z);
                for m in module.elements() {
                    let x = module.act(abc, m);
                    let lhs = colon(nb, x);
                    let rhs = colon(pb, x).union(colon(nb, module.act(ab, m))).union(colon(nb, module.act(z, m)));
                    if lhs != rhs {
                        return Ok(Some((a, b, z, m)));
                    }
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::is_phi_classical_1abs;

    fn z8() -> FiniteModule {
        FiniteModule::regular(&FiniteRing::zn(8).unwrap())
    }

    #[test]
    fn condition_ids_round_trip() {
        for c in Condition::all() {
            assert_eq!(c.id().parse::<Condition>().unwrap(), c);
        }
        assert!("T5.9".parse::<Condition>().is_err());
    }

    #[test]
    fn z8_examples() {
        let m = z8();
        let four = Submodule::generated(&m, &[4]);
        assert!(characterization_check(&four, &Phi::zero(), Condition::T5_2).unwrap());
        assert!(characterization_check(&four, &Phi::zero(), Condition::T5_4).unwrap());
    }

    #[test]
    fn theo5_agrees_on_z8_and_z12() {
        for n in [8, 12] {
            let m = FiniteModule::regular(&FiniteRing::zn(n).unwrap());
            for sub in m.submodules().unwrap().into_iter().filter(|s| s.is_proper()) {
                for phi in Phi::standard_catalog() {
                    let base = is_phi_classical_1abs(&sub, &phi).unwrap().verdict;
                    for c in Condition::THEO5 {
                        assert_eq!(
                            characterization_check(&sub, &phi, c).unwrap(),
                            base,
                            "{c} on {} with {}",
                            sub.display(),
                            phi.name()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn colon_union_holds_for_classical() {
        let m = z8();
        for sub in m.submodules().unwrap().into_iter().filter(|s| s.is_proper()) {
            for phi in Phi::standard_catalog() {
                if is_phi_classical_1abs(&sub, &phi).unwrap().verdict {
                    assert_eq!(colon_union_witness(&sub, &phi).unwrap(), None);
                }
            }
        }
    }

    #[test]
    fn multiplication_conditions_need_multiplication() {
        let v = FiniteModule::free(&FiniteRing::zn(2).unwrap(), 2).unwrap();
        let n = Submodule::zero(&v);
        assert_eq!(
            characterization_check(&n, &Phi::empty(), Condition::T9_2).unwrap_err(),
            Error::NotMultiplication
        );
        assert!(characterization_check(&n, &Phi::empty(), Condition::T7_3).is_ok());
    }

    #[test]
    fn guard_on_cyclic_chain() {
        // Submodules of Z_8 form a chain, so no union can collapse badly.
        let m = z8();
        for sub in m.submodules().unwrap().into_iter().filter(|s| s.is_proper()) {
            assert!(union_guard(&sub, &Phi::empty()).unwrap());
        }
    }
}
