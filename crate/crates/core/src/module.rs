//! Finite unital modules over finite rings, and their submodules.

use std::cmp::Ordering;
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::bits::{Bits, MAX_CARRIER};
use crate::error::{Error, Result};
use crate::hom::ModuleHom;
use crate::ideal::Ideal;
use crate::ring::{additive_closure, closure_under_sums, cosets, find_label, FiniteRing};

/// Largest module whose submodule lattice is enumerated unless a caller
/// passes an explicit bound.
pub const DEFAULT_ENUMERATION_BOUND: usize = 64;

/// A finite unital module over a [`FiniteRing`].
///
/// Elements are `0..size()`, with `0` the zero element.
#[derive(Clone)]
pub struct FiniteModule(Arc<ModuleData>);

struct ModuleData {
    ring: FiniteRing,
    size: usize,
    add: Vec<u8>,
    neg: Vec<u8>,
    act: Vec<u8>,
    labels: Vec<String>,
    name: String,
    origin: ModuleOrigin,
    lattice: OnceLock<std::result::Result<Vec<Bits>, Error>>,
    multiplication: OnceLock<bool>,
}

#[derive(Clone)]
pub enum ModuleOrigin {
    Table,
    /// `R` as a module over itself.
    Regular,
    /// `R / I`, generated by the class of `1`.
    Cyclic { ideal: Ideal },
    /// `M1 x M2`; `over_ring_product` is set when the ring is `R1 x R2`.
    Product { left: FiniteModule, right: FiniteModule, over_ring_product: bool },
    /// `M^k` with componentwise action.
    Power { base: FiniteModule, rank: usize },
    /// `M / K`; `projection[m]` is the coset of `m`.
    Quotient { base: FiniteModule, kernel: Bits, projection: Vec<usize> },
    /// `M / K` viewed over the quotient ring `R / J` where `J M` lies in `K`.
    ScalarQuotient {
        base: FiniteModule,
        kernel: Bits,
        projection: Vec<usize>,
        ring_projection: Vec<usize>,
    },
}

impl FiniteModule {
    /// Builds a module from raw tables and checks every module axiom.
    ///
    /// `add` is `size * size`, `act` is `|R| * size` with `act[r * size + m] = r m`.
    pub fn from_tables(
        ring: &FiniteRing,
        add: Vec<usize>,
        act: Vec<usize>,
        labels: Vec<String>,
        name: impl Into<String>,
    ) -> Result<FiniteModule> {
        Self::build(ring.clone(), add, act, labels, name.into(), ModuleOrigin::Table)
    }

    fn build(
        ring: FiniteRing,
        add: Vec<usize>,
        act: Vec<usize>,
        labels: Vec<String>,
        name: String,
        origin: ModuleOrigin,
    ) -> Result<FiniteModule> {
        let n = labels.len();
        let rn = ring.size();
        if n == 0 {
            return Err(Error::ModuleAxiom("empty carrier".into()));
        }
        if n > MAX_CARRIER {
            return Err(Error::SizeBound { size: n, bound: MAX_CARRIER });
        }
        if add.len() != n * n || act.len() != rn * n {
            return Err(Error::ModuleAxiom("table dimensions do not match carrier".into()));
        }
        if add.iter().chain(act.iter()).any(|&x| x >= n) {
            return Err(Error::ModuleAxiom("table entry outside the carrier".into()));
        }
        let sum = |a: usize, b: usize| add[a * n + b];
        let mul = |r: usize, m: usize| act[r * n + m];

        let mut neg = vec![0u8; n];
        for a in 0..n {
            if sum(0, a) != a {
                return Err(Error::ModuleAxiom(format!("0 is not an identity at {a}")));
            }
            match (0..n).find(|&b| sum(a, b) == 0) {
                Some(b) => neg[a] = b as u8,
                None => return Err(Error::ModuleAxiom(format!("{a} has no inverse"))),
            }
            if mul(ring.one(), a) != a {
                return Err(Error::ModuleAxiom(format!("1 m != m at {a}")));
            }
            for b in 0..n {
                if sum(a, b) != sum(b, a) {
                    return Err(Error::ModuleAxiom(format!("addition not commutative at ({a},{b})")));
                }
                for c in 0..n {
                    if sum(sum(a, b), c) != sum(a, sum(b, c)) {
                        return Err(Error::ModuleAxiom(format!(
                            "addition not associative at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        for r in 0..rn {
            for a in 0..n {
                for b in 0..n {
                    if mul(r, sum(a, b)) != sum(mul(r, a), mul(r, b)) {
                        return Err(Error::ModuleAxiom(format!("r(a+b) != ra+rb at ({r},{a},{b})")));
                    }
                }
                for s in 0..rn {
                    if mul(ring.add(r, s), a) != sum(mul(r, a), mul(s, a)) {
                        return Err(Error::ModuleAxiom(format!("(r+s)a != ra+sa at ({r},{s},{a})")));
                    }
                    if mul(ring.mul(r, s), a) != mul(r, mul(s, a)) {
                        return Err(Error::ModuleAxiom(format!("(rs)a != r(sa) at ({r},{s},{a})")));
                    }
                }
            }
        }
        Ok(FiniteModule(Arc::new(ModuleData {
            ring,
            size: n,
            add: add.into_iter().map(|x| x as u8).collect(),
            neg,
            act: act.into_iter().map(|x| x as u8).collect(),
            labels,
            name,
            origin,
            lattice: OnceLock::new(),
            multiplication: OnceLock::new(),
        })))
    }

    /// `R` as a module over itself.
    pub fn regular(ring: &FiniteRing) -> FiniteModule {
        let n = ring.size();
        let add = (0..n * n).map(|i| ring.add(i / n, i % n)).collect();
        let act = (0..n * n).map(|i| ring.mul(i / n, i % n)).collect();
        let labels = ring.elements().map(|a| ring.label(a).to_string()).collect();
        Self::build(ring.clone(), add, act, labels, format!("self({})", ring.name()), ModuleOrigin::Regular)
            .expect("a ring is a module over itself")
    }

    /// The cyclic module `R / I` with `r (x + I) = rx + I`.
    pub fn cyclic(ring: &FiniteRing, ideal: &Ideal) -> Result<FiniteModule> {
        if ideal.ring() != ring {
            return Err(Error::RingMismatch);
        }
        if !ideal.is_proper() {
            return Err(Error::ImproperIdeal);
        }
        let (reps, proj) = cosets(ring.size(), ideal.elements(), |a, b| ring.add(a, b));
        let q = reps.len();
        let add = (0..q * q).map(|i| proj[ring.add(reps[i / q], reps[i % q])]).collect();
        let act = (0..ring.size() * q).map(|i| proj[ring.mul(i / q, reps[i % q])]).collect();
        let trivial = ideal.len() == 1;
        let labels = reps
            .iter()
            .map(|&r| if trivial { ring.label(r).to_string() } else { format!("[{}]", ring.label(r)) })
            .collect();
        let gens: Vec<_> = ideal.generators().iter().map(|&g| ring.label(g).to_string()).collect();
        let name = format!("cyc({},{{{}}})", ring.name(), gens.join(","));
        Self::build(ring.clone(), add, act, labels, name, ModuleOrigin::Cyclic { ideal: ideal.clone() })
    }

    /// `M1 x M2`. Over a common ring the action is componentwise; when the
    /// rings differ the product is taken over `R1 x R2`.
    pub fn product(m1: &FiniteModule, m2: &FiniteModule) -> Result<FiniteModule> {
        if m1.ring() == m2.ring() {
            Self::product_same_ring(m1, m2)
        } else {
            Self::product_over_ring_product(m1, m2)
        }
    }

    pub fn product_same_ring(m1: &FiniteModule, m2: &FiniteModule) -> Result<FiniteModule> {
        if m1.ring() != m2.ring() {
            return Err(Error::RingMismatch);
        }
        let ring = m1.ring().clone();
        let (n1, n2) = (m1.size(), m2.size());
        let n = n1 * n2;
        if n > MAX_CARRIER {
            return Err(Error::SizeBound { size: n, bound: MAX_CARRIER });
        }
        let add = (0..n * n)
            .map(|i| {
                let (x, y) = (i / n, i % n);
                m1.add(x / n2, y / n2) * n2 + m2.add(x % n2, y % n2)
            })
            .collect();
        let act = (0..ring.size() * n)
            .map(|i| {
                let (r, x) = (i / n, i % n);
                m1.act(r, x / n2) * n2 + m2.act(r, x % n2)
            })
            .collect();
        let labels = (0..n).map(|x| format!("({},{})", m1.label(x / n2), m2.label(x % n2))).collect();
        let name = format!("prodmod({},{})", m1.name(), m2.name());
        Self::build(
            ring,
            add,
            act,
            labels,
            name,
            ModuleOrigin::Product { left: m1.clone(), right: m2.clone(), over_ring_product: false },
        )
    }

    /// `M1 x M2` as a module over `R1 x R2` with `(r1,r2)(m1,m2) = (r1 m1, r2 m2)`.
    pub fn product_over_ring_product(m1: &FiniteModule, m2: &FiniteModule) -> Result<FiniteModule> {
        let ring = FiniteRing::product(m1.ring(), m2.ring())?;
        let (n1, n2) = (m1.size(), m2.size());
        let n = n1 * n2;
        if n > MAX_CARRIER {
            return Err(Error::SizeBound { size: n, bound: MAX_CARRIER });
        }
        let add = (0..n * n)
            .map(|i| {
                let (x, y) = (i / n, i % n);
                m1.add(x / n2, y / n2) * n2 + m2.add(x % n2, y % n2)
            })
            .collect();
        let act = (0..ring.size() * n)
            .map(|i| {
                let (r, x) = (i / n, i % n);
                let (r1, r2) = ring.split(r).expect("product ring");
                m1.act(r1, x / n2) * n2 + m2.act(r2, x % n2)
            })
            .collect();
        let labels = (0..n).map(|x| format!("({},{})", m1.label(x / n2), m2.label(x % n2))).collect();
        let name = format!("extprod({},{})", m1.name(), m2.name());
        Self::build(
            ring,
            add,
            act,
            labels,
            name,
            ModuleOrigin::Product { left: m1.clone(), right: m2.clone(), over_ring_product: true },
        )
    }

    /// `M^k` with componentwise structure; `R^k` is `power(&regular(R), k)`.
    pub fn power(base: &FiniteModule, rank: usize) -> Result<FiniteModule> {
        if rank == 0 {
            return Err(Error::Precondition("rank must be at least 1".into()));
        }
        let b = base.size();
        let n = b.checked_pow(rank as u32).filter(|&n| n <= MAX_CARRIER).ok_or(Error::SizeBound {
            size: b.saturating_pow(rank as u32),
            bound: MAX_CARRIER,
        })?;
        let digits = |mut x: usize| {
            let mut d = vec![0; rank];
            for slot in d.iter_mut().rev() {
                *slot = x % b;
                x /= b;
            }
            d
        };
        let undigits = |d: &[usize]| d.iter().fold(0, |acc, &v| acc * b + v);
        let add = (0..n * n)
            .map(|i| {
                let (x, y) = (digits(i / n), digits(i % n));
                let z: Vec<_> = x.iter().zip(&y).map(|(&p, &q)| base.add(p, q)).collect();
                undigits(&z)
            })
            .collect();
        let act = (0..base.ring().size() * n)
            .map(|i| {
                let r = i / n;
                let z: Vec<_> = digits(i % n).iter().map(|&p| base.act(r, p)).collect();
                undigits(&z)
            })
            .collect();
        let labels = (0..n)
            .map(|x| {
                if rank == 1 {
                    base.label(x).to_string()
                } else {
                    let parts: Vec<_> = digits(x).iter().map(|&p| base.label(p).to_string()).collect();
                    format!("({})", parts.join(","))
                }
            })
            .collect();
        let name = match base.origin() {
            ModuleOrigin::Regular => format!("freemod({},{rank})", base.ring().name()),
            _ => format!("tensorfree({},{rank})", base.name()),
        };
        Self::build(
            base.ring().clone(),
            add,
            act,
            labels,
            name,
            ModuleOrigin::Power { base: base.clone(), rank },
        )
    }

    /// `R^k`.
    pub fn free(ring: &FiniteRing, rank: usize) -> Result<FiniteModule> {
        Self::power(&Self::regular(ring), rank)
    }

    /// The quotient `M / K` together with its projection.
    pub fn quotient(&self, k: &Submodule) -> Result<(FiniteModule, ModuleHom)> {
        if k.module() != self {
            return Err(Error::ModuleMismatch);
        }
        if !k.is_proper() {
            return Err(Error::ImproperSubmodule);
        }
        let (reps, projection) = cosets(self.size(), k.elements(), |a, b| self.add(a, b));
        let q = reps.len();
        let add = (0..q * q).map(|i| projection[self.add(reps[i / q], reps[i % q])]).collect();
        let act = (0..self.ring().size() * q).map(|i| projection[self.act(i / q, reps[i % q])]).collect();
        let trivial = k.len() == 1;
        let labels = reps
            .iter()
            .map(|&r| if trivial { self.label(r).to_string() } else { format!("[{}]", self.label(r)) })
            .collect();
        let gens: Vec<_> = k.generators().iter().map(|&g| self.label(g).to_string()).collect();
        let name = format!("quotmod({},{{{}}})", self.name(), gens.join(","));
        let quotient = Self::build(
            self.ring().clone(),
            add,
            act,
            labels,
            name,
            ModuleOrigin::Quotient { base: self.clone(), kernel: k.elements(), projection: projection.clone() },
        )?;
        let hom = ModuleHom::new(self, &quotient, projection)?;
        Ok((quotient, hom))
    }

    /// `M / K` as a module over `R / J`, where `ring_projection` is the
    /// projection `R -> R / J` onto `quotient_ring` and `J M` lies in `K`.
    pub(crate) fn scalar_quotient(
        &self,
        kernel: Bits,
        quotient_ring: &FiniteRing,
        ring_projection: Vec<usize>,
        name: String,
    ) -> Result<FiniteModule> {
        let (reps, projection) = cosets(self.size(), kernel, |a, b| self.add(a, b));
        // A representative in R for every element of R / J.
        let mut ring_reps = vec![usize::MAX; quotient_ring.size()];
        for r in self.ring().elements().rev() {
            ring_reps[ring_projection[r]] = r;
        }
        let q = reps.len();
        let add = (0..q * q).map(|i| projection[self.add(reps[i / q], reps[i % q])]).collect();
        let act = (0..quotient_ring.size() * q)
            .map(|i| projection[self.act(ring_reps[i / q], reps[i % q])])
            .collect();
        let trivial = kernel.len() == 1;
        let labels = reps
            .iter()
            .map(|&r| if trivial { self.label(r).to_string() } else { format!("[{}]", self.label(r)) })
            .collect();
        Self::build(
            quotient_ring.clone(),
            add,
            act,
            labels,
            name,
            ModuleOrigin::ScalarQuotient { base: self.clone(), kernel, projection, ring_projection },
        )
    }

    #[inline]
    pub fn ring(&self) -> &FiniteRing {
        &self.0.ring
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.0.size
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.0.add[a * self.0.size + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.0.neg[a] as usize
    }

    #[inline]
    pub fn act(&self, r: usize, m: usize) -> usize {
        self.0.act[r * self.0.size + m] as usize
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size()
    }

    pub fn all(&self) -> Bits {
        Bits::full(self.size())
    }

    pub fn label(&self, m: usize) -> &str {
        &self.0.labels[m]
    }

    pub fn element(&self, label: &str) -> Result<usize> {
        find_label(&self.0.labels, label)
    }

    pub fn name(&self) -> &str {
        &self.0.name
    }

    pub fn origin(&self) -> &ModuleOrigin {
        &self.0.origin
    }

    /// `{ r x | r in S, x in X }` as a raw set.
    pub fn act_set(&self, scalars: Bits, xs: Bits) -> Bits {
        let mut out = Bits::EMPTY;
        for r in scalars {
            for x in xs {
                out.insert(self.act(r, x));
            }
        }
        out
    }

    /// The submodule generated by `xs`.
    pub fn span(&self, xs: Bits) -> Bits {
        additive_closure(self.act_set(self.ring().all(), xs), |a, b| self.add(a, b))
    }

    /// The submodule `I X` generated by all `r x` with `r` in `ideal`, `x` in `xs`.
    pub fn ideal_times_bits(&self, ideal: Bits, xs: Bits) -> Bits {
        additive_closure(self.act_set(ideal, xs), |a, b| self.add(a, b))
    }

    pub fn ideal_times(&self, ideal: &Ideal, n: &Submodule) -> Result<Submodule> {
        if ideal.ring() != self.ring() {
            return Err(Error::RingMismatch);
        }
        if n.module() != self {
            return Err(Error::ModuleMismatch);
        }
        Ok(Submodule::from_bits_unchecked(self.clone(), self.ideal_times_bits(ideal.elements(), n.elements())))
    }

    /// `{ r in R | r x in target for all x in xs }`. An empty `target` stands
    /// for the empty set, so the result is then empty too.
    pub fn colon_ring_bits(&self, target: Bits, xs: Bits) -> Bits {
        let mut out = Bits::EMPTY;
        'r: for r in self.ring().elements() {
            for x in xs {
                if !target.contains(self.act(r, x)) {
                    continue 'r;
                }
            }
            out.insert(r);
        }
        out
    }

    /// `{ m in M | s m in target for all s in scalars }`.
    pub fn colon_module_bits(&self, target: Bits, scalars: Bits) -> Bits {
        let mut out = Bits::EMPTY;
        'm: for m in self.elements() {
            for s in scalars {
                if !target.contains(self.act(s, m)) {
                    continue 'm;
                }
            }
            out.insert(m);
        }
        out
    }

    /// `(N :_R X)` as an ideal.
    pub fn colon_ring(&self, n: &Submodule, xs: Bits) -> Result<Ideal> {
        if n.module() != self {
            return Err(Error::ModuleMismatch);
        }
        if xs.is_empty() {
            return Err(Error::EmptySet);
        }
        if !xs.is_subset(self.all()) {
            return Err(Error::Precondition("element outside the module".into()));
        }
        Ok(Ideal::from_bits_unchecked(self.ring().clone(), self.colon_ring_bits(n.elements(), xs)))
    }

    /// `(N :_M S)` as a submodule.
    pub fn colon_module(&self, n: &Submodule, scalars: Bits) -> Result<Submodule> {
        if n.module() != self {
            return Err(Error::ModuleMismatch);
        }
        if scalars.is_empty() {
            return Err(Error::EmptySet);
        }
        if !scalars.is_subset(self.ring().all()) {
            return Err(Error::Precondition("scalar outside the ring".into()));
        }
        Ok(Submodule::from_bits_unchecked(self.clone(), self.colon_module_bits(n.elements(), scalars)))
    }

    /// `(N :_R M)`.
    pub fn colon_whole(&self, n: &Submodule) -> Ideal {
        Ideal::from_bits_unchecked(self.ring().clone(), self.colon_ring_bits(n.elements(), self.all()))
    }

    /// Every submodule, canonically ordered by size then bit pattern.
    pub fn submodules(&self) -> Result<Vec<Submodule>> {
        Ok(self
            .submodule_bits()?
            .iter()
            .map(|&b| Submodule::from_bits_unchecked(self.clone(), b))
            .collect())
    }

    /// Like [`submodules`](Self::submodules) with an explicit size bound.
    pub fn enumerate_submodules(&self, bound: usize) -> Result<Vec<Submodule>> {
        if self.size() > bound {
            return Err(Error::SizeBound { size: self.size(), bound });
        }
        self.submodules()
    }

    /// Raw submodule lattice, cached after the first call.
    pub fn submodule_bits(&self) -> Result<&[Bits]> {
        self.0
            .lattice
            .get_or_init(|| {
                if self.size() > DEFAULT_ENUMERATION_BOUND {
                    return Err(Error::SizeBound { size: self.size(), bound: DEFAULT_ENUMERATION_BOUND });
                }
                let mut cyclic: Vec<Bits> = self.elements().map(|m| self.span(Bits::single(m))).collect();
                cyclic.sort_by_key(|b| (b.len(), b.0));
                cyclic.dedup();
                Ok(closure_under_sums(cyclic, |x, y| additive_closure(x.union(y), |a, b| self.add(a, b))))
            })
            .as_ref()
            .map(|v| v.as_slice())
            .map_err(|e| e.clone())
    }

    /// A generator `m` with `Rm = M`, if the module is cyclic.
    pub fn cyclic_generator(&self) -> Option<usize> {
        self.elements().find(|&m| self.span(Bits::single(m)) == self.all())
    }

    pub fn is_cyclic(&self) -> bool {
        self.cyclic_generator().is_some()
    }

    pub(crate) fn multiplication_cache(&self) -> &OnceLock<bool> {
        &self.0.multiplication
    }

    /// Components of an element of a product module.
    pub fn split(&self, x: usize) -> Option<(usize, usize)> {
        match self.origin() {
            ModuleOrigin::Product { right, .. } => Some((x / right.size(), x % right.size())),
            _ => None,
        }
    }

    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        match self.origin() {
            ModuleOrigin::Product { right, .. } => Some(a * right.size() + b),
            _ => None,
        }
    }

    /// Factors of a product module.
    pub fn factors(&self) -> Option<(&FiniteModule, &FiniteModule)> {
        match self.origin() {
            ModuleOrigin::Product { left, right, .. } => Some((left, right)),
            _ => None,
        }
    }
}

impl PartialEq for FiniteModule {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.size == other.0.size
                && self.0.ring == other.0.ring
                && self.0.add == other.0.add
                && self.0.act == other.0.act)
    }
}

impl Eq for FiniteModule {}

impl fmt::Debug for FiniteModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (order {})", self.name(), self.size())
    }
}

/// A submodule of a [`FiniteModule`].
#[derive(Clone, PartialEq, Eq)]
pub struct Submodule {
    module: FiniteModule,
    elems: Bits,
}

impl Submodule {
    /// Validates closure under addition and scalar action.
    pub fn new(module: &FiniteModule, elems: Bits) -> Result<Submodule> {
        if !elems.is_subset(module.all()) {
            return Err(Error::NotASubmodule("element outside the carrier".into()));
        }
        if !elems.contains(0) {
            return Err(Error::NotASubmodule("missing zero".into()));
        }
        for x in elems {
            for y in elems {
                if !elems.contains(module.add(x, y)) {
                    return Err(Error::NotASubmodule(format!(
                        "not closed under addition at ({}, {})",
                        module.label(x),
                        module.label(y)
                    )));
                }
            }
            for r in module.ring().elements() {
                if !elems.contains(module.act(r, x)) {
                    return Err(Error::NotASubmodule(format!(
                        "not closed under the action at ({}, {})",
                        module.ring().label(r),
                        module.label(x)
                    )));
                }
            }
        }
        Ok(Submodule { module: module.clone(), elems })
    }

    pub(crate) fn from_bits_unchecked(module: FiniteModule, elems: Bits) -> Submodule {
        debug_assert!(Submodule::new(&module, elems).is_ok(), "not a submodule: {elems:?}");
        Submodule { module, elems }
    }

    pub fn generated(module: &FiniteModule, gens: &[usize]) -> Submodule {
        Submodule { module: module.clone(), elems: module.span(Bits::from_iter(gens.iter().copied())) }
    }

    pub fn zero(module: &FiniteModule) -> Submodule {
        Submodule { module: module.clone(), elems: Bits::single(0) }
    }

    pub fn whole(module: &FiniteModule) -> Submodule {
        Submodule { module: module.clone(), elems: module.all() }
    }

    pub fn module(&self) -> &FiniteModule {
        &self.module
    }

    pub fn elements(&self) -> Bits {
        self.elems
    }

    pub fn contains(&self, m: usize) -> bool {
        self.elems.contains(m)
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_proper(&self) -> bool {
        self.elems != self.module.all()
    }

    pub fn is_subset(&self, other: &Submodule) -> bool {
        self.elems.is_subset(other.elems)
    }

    pub fn sum(&self, other: &Submodule) -> Result<Submodule> {
        if self.module != other.module {
            return Err(Error::ModuleMismatch);
        }
        let elems = additive_closure(self.elems.union(other.elems), |a, b| self.module.add(a, b));
        Ok(Submodule { module: self.module.clone(), elems })
    }

    pub fn intersection(&self, other: &Submodule) -> Result<Submodule> {
        if self.module != other.module {
            return Err(Error::ModuleMismatch);
        }
        Ok(Submodule { module: self.module.clone(), elems: self.elems.intersection(other.elems) })
    }

    /// `(N :_R M)`.
    pub fn colon(&self) -> Ideal {
        self.module.colon_whole(self)
    }

    /// A small generating set, picked greedily in element order.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = Bits::single(0);
        for x in self.elems {
            if !span.contains(x) {
                gens.push(x);
                span = self.module.span(Bits::from_iter(gens.iter().copied()));
            }
        }
        gens
    }

    pub fn display(&self) -> String {
        let items: Vec<_> = self.elems.iter().map(|x| self.module.label(x)).collect();
        format!("{{{}}}", items.join(","))
    }
}

impl PartialOrd for Submodule {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Submodule {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.elems.len(), self.elems.0).cmp(&(other.elems.len(), other.elems.0))
    }
}

impl fmt::Debug for Submodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self.display(), self.module.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: usize) -> FiniteRing {
        FiniteRing::zn(n).unwrap()
    }

    #[test]
    fn cyclic_modules() {
        let z8 = z(8);
        let m = FiniteModule::cyclic(&z8, &Ideal::zero(&z8)).unwrap();
        assert_eq!(m, FiniteModule::regular(&z8));
        let z12 = z(12);
        let m = FiniteModule::cyclic(&z12, &Ideal::generated(&z12, &[4])).unwrap();
        assert_eq!(m.size(), 4);
        let z2 = z(2);
        assert_eq!(FiniteModule::cyclic(&z2, &Ideal::zero(&z2)).unwrap().size(), 2);
        assert_eq!(FiniteModule::cyclic(&z2, &Ideal::unit(&z2)).unwrap_err(), Error::ImproperIdeal);
    }

    #[test]
    fn product_modules() {
        let z2 = z(2);
        let r2 = FiniteModule::regular(&z2);
        let v = FiniteModule::product(&r2, &r2).unwrap();
        assert_eq!(v.size(), 4);
        assert_eq!(v.ring(), &z2);

        let z3 = z(3);
        let r3 = FiniteModule::regular(&z3);
        let w = FiniteModule::product(&r2, &r3).unwrap();
        assert_eq!(w.size(), 6);
        assert_eq!(w.ring().size(), 6);
        assert!(FiniteModule::product_same_ring(&r2, &r3).is_err());
    }

    #[test]
    fn submodule_counts() {
        assert_eq!(FiniteModule::regular(&z(12)).submodules().unwrap().len(), 6);
        assert_eq!(FiniteModule::regular(&z(7)).submodules().unwrap().len(), 2);
        let r2 = FiniteModule::regular(&z(2));
        let v = FiniteModule::product(&r2, &r2).unwrap();
        assert_eq!(v.submodules().unwrap().len(), 5);
    }

    #[test]
    fn enumeration_bound() {
        let m = FiniteModule::free(&z(2), 4).unwrap();
        assert_eq!(m.enumerate_submodules(8).unwrap_err(), Error::SizeBound { size: 16, bound: 8 });
        assert_eq!(m.enumerate_submodules(16).unwrap().len(), 67);
    }

    #[test]
    fn colon_examples() {
        let z12 = z(12);
        let m = FiniteModule::regular(&z12);
        let n = Submodule::generated(&m, &[4]);
        assert_eq!(m.colon_ring(&n, m.all()).unwrap().elements().to_vec(), vec![0, 4, 8]);
        let whole = Submodule::whole(&m);
        assert_eq!(m.colon_ring(&whole, m.all()).unwrap(), Ideal::unit(&z12));

        let z8 = z(8);
        let m8 = FiniteModule::regular(&z8);
        let zero = Submodule::zero(&m8);
        assert_eq!(m8.colon_ring(&zero, Bits::single(1)).unwrap(), Ideal::zero(&z8));
        assert_eq!(m8.colon_ring(&zero, Bits::EMPTY).unwrap_err(), Error::EmptySet);

        let six = Submodule::generated(&m, &[6]);
        assert_eq!(m.colon_module(&six, Bits::single(2)).unwrap().elements().to_vec(), vec![0, 3, 6, 9]);
        assert_eq!(m.colon_module(&six, Bits::single(1)).unwrap(), six);
        assert_eq!(m.colon_module(&six, Bits::single(0)).unwrap(), Submodule::whole(&m));
        assert_eq!(m.colon_module(&six, Bits::EMPTY).unwrap_err(), Error::EmptySet);
    }

    #[test]
    fn quotients() {
        let z8 = z(8);
        let m = FiniteModule::regular(&z8);
        let k = Submodule::generated(&m, &[4]);
        let (q, _) = m.quotient(&k).unwrap();
        assert_eq!(q.size(), 4);
        let (q0, _) = m.quotient(&Submodule::zero(&m)).unwrap();
        assert_eq!(q0, m);
        assert_eq!(m.quotient(&Submodule::whole(&m)).unwrap_err(), Error::ImproperSubmodule);

        let r2 = FiniteModule::regular(&z(2));
        let v = FiniteModule::product(&r2, &r2).unwrap();
        let diag = Submodule::generated(&v, &[v.element("(1,1)").unwrap()]);
        assert_eq!(v.quotient(&diag).unwrap().0.size(), 2);
    }

    #[test]
    fn invalid_submodule_rejected() {
        let m = FiniteModule::regular(&z(8));
        assert!(Submodule::new(&m, Bits::from_iter([0, 2])).is_err());
        assert!(Submodule::new(&m, Bits::from_iter([0, 2, 4, 6])).is_ok());
    }

    #[test]
    fn power_labels_and_order() {
        let m = FiniteModule::free(&z(3), 2).unwrap();
        assert_eq!(m.size(), 9);
        assert_eq!(m.label(5), "(1,2)");
        assert!(m.name().starts_with("freemod("));
    }
}
