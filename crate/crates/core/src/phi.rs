//! Functions `phi : S(M) -> S(M) u {empty}` and the standard catalog.
//!
//! The empty set is kept as its own [`PhiValue::Empty`] variant. It is never
//! confused with the zero submodule: `x in empty` is false for every `x`,
//! while the zero submodule contains `0`.

use std::fmt;
use std::sync::Arc;

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::module::{FiniteModule, ModuleOrigin, Submodule};
use crate::multiplication::submodule_power;

#[derive(Clone, PartialEq, Eq)]
pub enum PhiValue {
    Empty,
    Sub(Submodule),
}

impl PhiValue {
    /// Raw element set; the empty set has no bits, the zero submodule has bit 0.
    pub fn bits(&self) -> Bits {
        match self {
            PhiValue::Empty => Bits::EMPTY,
            PhiValue::Sub(s) => s.elements(),
        }
    }

    pub fn is_empty_set(&self) -> bool {
        matches!(self, PhiValue::Empty)
    }

    pub fn contains(&self, m: usize) -> bool {
        self.bits().contains(m)
    }

    pub fn submodule(&self) -> Option<&Submodule> {
        match self {
            PhiValue::Empty => None,
            PhiValue::Sub(s) => Some(s),
        }
    }

    /// Containment where the empty set lies inside everything.
    pub fn is_subset(&self, other: &PhiValue) -> bool {
        match (self, other) {
            (PhiValue::Empty, _) => true,
            (PhiValue::Sub(_), PhiValue::Empty) => false,
            (PhiValue::Sub(a), PhiValue::Sub(b)) => a.is_subset(b),
        }
    }

    pub fn display(&self) -> String {
        match self {
            PhiValue::Empty => "empty".into(),
            PhiValue::Sub(s) => s.display(),
        }
    }
}

impl fmt::Debug for PhiValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display())
    }
}

/// A function on the submodule lattice of a module.
#[derive(Clone)]
pub struct Phi {
    kind: PhiKind,
}

#[derive(Clone)]
enum PhiKind {
    Empty,
    Zero,
    One,
    /// `(N:M)^{n-1} N`; `n = 2` is the almost case.
    NAlmost(u32),
    /// Stable value of the decreasing chain `(N:M)^n N`.
    Omega,
    /// `N^n` on multiplication modules.
    Power(u32),
    /// Finite lookup table keyed by the element set of `N`.
    Table { name: String, entries: Arc<Vec<(Bits, Option<Bits>)>> },
    Normalized(Box<Phi>),
    /// Evaluates `inner` on the preimage of the argument and pushes the
    /// result forward along `map`.
    Pushforward { inner: Box<Phi>, source: FiniteModule, target: FiniteModule, map: Arc<Vec<usize>>, tag: &'static str },
    /// `psi_1 x psi_2` on a product module.
    Product(Box<Phi>, Box<Phi>),
}

impl Phi {
    pub fn empty() -> Phi {
        Phi { kind: PhiKind::Empty }
    }

    pub fn zero() -> Phi {
        Phi { kind: PhiKind::Zero }
    }

    pub fn one() -> Phi {
        Phi { kind: PhiKind::One }
    }

    pub fn almost() -> Phi {
        Phi { kind: PhiKind::NAlmost(2) }
    }

    pub fn n_almost(n: u32) -> Result<Phi> {
        if n < 2 {
            return Err(Error::Exponent { min: 2, got: n });
        }
        Ok(Phi { kind: PhiKind::NAlmost(n) })
    }

    pub fn omega() -> Phi {
        Phi { kind: PhiKind::Omega }
    }

    /// `N -> N^n`, defined on multiplication modules only.
    pub fn power(n: u32) -> Result<Phi> {
        if n < 1 {
            return Err(Error::Exponent { min: 1, got: n });
        }
        Ok(Phi { kind: PhiKind::Power(n) })
    }

    /// A lookup table `N -> phi(N)` with `None` meaning the empty set.
    pub fn table(name: impl Into<String>, entries: Vec<(Bits, Option<Bits>)>) -> Phi {
        Phi { kind: PhiKind::Table { name: name.into(), entries: Arc::new(entries) } }
    }

    /// Parses `empty | zero | one | almost | nalmost:<n> | omega | pow:<n>`.
    pub fn parse(text: &str) -> Result<Phi> {
        let t = text.trim();
        let number = |s: &str| {
            s.trim().parse::<u32>().map_err(|_| Error::Parse {
                line: 1,
                column: t.find(':').map(|i| i + 2).unwrap_or(1),
                message: format!("expected a number in `{t}`"),
            })
        };
        match t {
            "empty" => Ok(Phi::empty()),
            "zero" => Ok(Phi::zero()),
            "one" => Ok(Phi::one()),
            "almost" => Ok(Phi::almost()),
            "omega" => Ok(Phi::omega()),
            _ => {
                if let Some(n) = t.strip_prefix("nalmost:") {
                    Phi::n_almost(number(n)?)
                } else if let Some(n) = t.strip_prefix("pow:") {
                    Phi::power(number(n)?)
                } else {
                    Err(Error::Parse { line: 1, column: 1, message: format!("unknown phi `{t}`") })
                }
            }
        }
    }

    /// The seven catalog functions used by the default corpus, from the
    /// smallest to the largest.
    pub fn standard_catalog() -> Vec<Phi> {
        vec![
            Phi::empty(),
            Phi::zero(),
            Phi::omega(),
            Phi { kind: PhiKind::NAlmost(4) },
            Phi { kind: PhiKind::NAlmost(3) },
            Phi::almost(),
            Phi::one(),
        ]
    }

    pub fn name(&self) -> String {
        match &self.kind {
            PhiKind::Empty => "empty".into(),
            PhiKind::Zero => "zero".into(),
            PhiKind::One => "one".into(),
            PhiKind::NAlmost(2) => "almost".into(),
            PhiKind::NAlmost(n) => format!("nalmost:{n}"),
            PhiKind::Omega => "omega".into(),
            PhiKind::Power(n) => format!("pow:{n}"),
            PhiKind::Table { name, .. } => name.clone(),
            PhiKind::Normalized(inner) => format!("normalize({})", inner.name()),
            PhiKind::Pushforward { inner, tag, .. } => format!("{}_{tag}", inner.name()),
            PhiKind::Product(a, b) => format!("{}x{}", a.name(), b.name()),
        }
    }

    /// `Some(n)` when this is the `n`-almost catalog entry.
    pub fn n_almost_index(&self) -> Option<u32> {
        match self.kind {
            PhiKind::NAlmost(n) => Some(n),
            _ => None,
        }
    }

    pub fn is_empty_function(&self) -> bool {
        matches!(self.kind, PhiKind::Empty)
    }

    pub fn eval(&self, n: &Submodule) -> Result<PhiValue> {
        let module = n.module();
        match &self.kind {
            PhiKind::Empty => Ok(PhiValue::Empty),
            PhiKind::Zero => Ok(PhiValue::Sub(Submodule::zero(module))),
            PhiKind::One => Ok(PhiValue::Sub(n.clone())),
            PhiKind::NAlmost(k) => {
                let colon = n.colon();
                let mut acc = n.elements();
                for _ in 1..*k {
                    acc = module.ideal_times_bits(colon.elements(), acc);
                }
                Ok(PhiValue::Sub(Submodule::new(module, acc)?))
            }
            PhiKind::Omega => Ok(PhiValue::Sub(Submodule::new(module, omega_bits(n))?)),
            PhiKind::Power(k) => Ok(PhiValue::Sub(submodule_power(n, *k)?)),
            PhiKind::Table { name, entries } => {
                let hit = entries.iter().find(|(k, _)| *k == n.elements()).ok_or_else(|| {
                    Error::PhiDomain(format!("table `{name}` has no entry for {}", n.display()))
                })?;
                match hit.1 {
                    None => Ok(PhiValue::Empty),
                    Some(b) => Ok(PhiValue::Sub(Submodule::new(module, b)?)),
                }
            }
            PhiKind::Normalized(inner) => match inner.eval(n)? {
                PhiValue::Empty => Ok(PhiValue::Empty),
                PhiValue::Sub(s) => Ok(PhiValue::Sub(s.intersection(n)?)),
            },
            PhiKind::Pushforward { inner, source, target, map, .. } => {
                if module != target {
                    return Err(Error::PhiDomain(format!(
                        "argument lives in {} rather than {}",
                        module.name(),
                        target.name()
                    )));
                }
                let pre = Bits::from_iter(source.elements().filter(|&x| n.contains(map[x])));
                let pre = Submodule::new(source, pre)?;
                match inner.eval(&pre)? {
                    PhiValue::Empty => Ok(PhiValue::Empty),
                    PhiValue::Sub(s) => {
                        let img = Bits::from_iter(s.elements().iter().map(|x| map[x]));
                        Ok(PhiValue::Sub(Submodule::new(target, img)?))
                    }
                }
            }
            PhiKind::Product(left, right) => {
                let (m1, m2) = module.factors().ok_or_else(|| {
                    Error::PhiDomain(format!("{} is not a product module", module.name()))
                })?;
                let (n1, n2) = split_product(n).ok_or_else(|| {
                    Error::PhiDomain(format!("{} is not a product submodule", n.display()))
                })?;
                let v1 = left.eval(&Submodule::new(m1, n1)?)?;
                let v2 = right.eval(&Submodule::new(m2, n2)?)?;
                match (v1, v2) {
                    (PhiValue::Sub(a), PhiValue::Sub(b)) => {
                        let mut out = Bits::EMPTY;
                        for x in a.elements() {
                            for y in b.elements() {
                                out.insert(module.join(x, y).expect("product module"));
                            }
                        }
                        Ok(PhiValue::Sub(Submodule::new(module, out)?))
                    }
                    _ => Ok(PhiValue::Empty),
                }
            }
        }
    }

    /// Evaluates on an ideal `I`, viewing it as a submodule of `R` over itself.
    pub fn eval_ideal(&self, ideal: &Ideal) -> Result<Option<Ideal>> {
        let regular = FiniteModule::regular(ideal.ring());
        let n = Submodule::new(&regular, ideal.elements())?;
        match self.eval(&n)? {
            PhiValue::Empty => Ok(None),
            PhiValue::Sub(s) => Ok(Some(Ideal::new(ideal.ring(), s.elements())?)),
        }
    }

    /// `phi'(N) = phi(N) n N`. Catalog functions already satisfy
    /// `phi(N) <= N` and are returned unchanged.
    pub fn normalize(&self) -> Phi {
        match &self.kind {
            PhiKind::Table { .. } | PhiKind::Pushforward { .. } | PhiKind::Product(..) => {
                Phi { kind: PhiKind::Normalized(Box::new(self.clone())) }
            }
            _ => self.clone(),
        }
    }

    /// `phi(f^{-1}(L))` pushed along the surjection `map: source -> target`.
    pub fn pushforward(
        inner: &Phi,
        source: &FiniteModule,
        target: &FiniteModule,
        map: Vec<usize>,
        tag: &'static str,
    ) -> Phi {
        Phi {
            kind: PhiKind::Pushforward {
                inner: Box::new(inner.clone()),
                source: source.clone(),
                target: target.clone(),
                map: Arc::new(map),
                tag,
            },
        }
    }

    /// `phi_K(N/K) = (phi(N) + K)/K` on `M/K`, empty when `phi(N)` is.
    pub fn quotient(&self, module: &FiniteModule, k: &Submodule) -> Result<(FiniteModule, Phi)> {
        let (q, proj) = module.quotient(k)?;
        let map = module.elements().map(|x| proj.apply(x)).collect();
        Ok((q.clone(), Phi::pushforward(self, module, &q, map, "K")))
    }

    /// `psi_1 x psi_2`, evaluated on submodules of the form `N_1 x N_2`.
    pub fn product(left: &Phi, right: &Phi) -> Phi {
        Phi { kind: PhiKind::Product(Box::new(left.clone()), Box::new(right.clone())) }
    }
}

impl fmt::Debug for Phi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Phi({})", self.name())
    }
}

/// Stable value of `(N:M)^n N`, n = 1, 2, ...
fn omega_bits(n: &Submodule) -> Bits {
    let module = n.module();
    let colon = n.colon().elements();
    let mut cur = module.ideal_times_bits(colon, n.elements());
    loop {
        let next = module.ideal_times_bits(colon, cur);
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

/// Splits a submodule of a product module into `(N_1, N_2)` when it is
/// exactly `N_1 x N_2`.
pub fn split_product(n: &Submodule) -> Option<(Bits, Bits)> {
    let module = n.module();
    if !matches!(module.origin(), ModuleOrigin::Product { .. }) {
        return None;
    }
    let mut left = Bits::EMPTY;
    let mut right = Bits::EMPTY;
    for x in n.elements() {
        let (a, b) = module.split(x)?;
        left.insert(a);
        right.insert(b);
    }
    let size = left.len() * right.len();
    (size == n.len()).then_some((left, right))
}

/// Pointwise `psi_1 <= psi_2` over every submodule of `M`.
pub fn phi_leq(psi1: &Phi, psi2: &Phi, module: &FiniteModule) -> Result<bool> {
    Ok(phi_leq_witness(psi1, psi2, module)?.is_none())
}

/// The first submodule where `psi_1(N)` is not inside `psi_2(N)`.
pub fn phi_leq_witness(psi1: &Phi, psi2: &Phi, module: &FiniteModule) -> Result<Option<Submodule>> {
    for n in module.submodules()? {
        if !psi1.eval(&n)?.is_subset(&psi2.eval(&n)?) {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::FiniteRing;

    fn z8() -> (FiniteModule, Submodule) {
        let r = FiniteRing::zn(8).unwrap();
        let m = FiniteModule::regular(&r);
        let n = Submodule::generated(&m, &[4]);
        (m, n)
    }

    #[test]
    fn catalog_on_4z8() {
        let (m, n) = z8();
        let zero = PhiValue::Sub(Submodule::zero(&m));
        assert_eq!(Phi::almost().eval(&n).unwrap(), zero);
        assert_eq!(Phi::zero().eval(&n).unwrap(), zero);
        assert_eq!(Phi::omega().eval(&n).unwrap(), zero);
        assert_eq!(Phi::empty().eval(&n).unwrap(), PhiValue::Empty);
        assert_eq!(Phi::one().eval(&n).unwrap(), PhiValue::Sub(n.clone()));
    }

    #[test]
    fn empty_is_not_zero() {
        let (m, _) = z8();
        let zero = PhiValue::Sub(Submodule::zero(&m));
        assert_ne!(PhiValue::Empty, zero);
        assert!(!PhiValue::Empty.contains(0));
        assert!(zero.contains(0));
        assert!(PhiValue::Empty.is_subset(&zero));
        assert!(!zero.is_subset(&PhiValue::Empty));
    }

    #[test]
    fn n_almost_bounds() {
        assert_eq!(Phi::n_almost(1).unwrap_err(), Error::Exponent { min: 2, got: 1 });
        assert_eq!(Phi::n_almost(3).unwrap().name(), "nalmost:3");
    }

    #[test]
    fn parse_names() {
        for name in ["empty", "zero", "one", "almost", "nalmost:3", "omega", "pow:2"] {
            assert_eq!(Phi::parse(name).unwrap().name(), name);
        }
        assert!(Phi::parse("nalmost:x").is_err());
        assert!(Phi::parse("nalmost:1").is_err());
        assert!(Phi::parse("bogus").is_err());
    }

    #[test]
    fn leq_examples() {
        let (m, _) = z8();
        assert!(phi_leq(&Phi::empty(), &Phi::zero(), &m).unwrap());
        assert!(phi_leq(&Phi::zero(), &Phi::omega(), &m).unwrap());
        let w = phi_leq_witness(&Phi::one(), &Phi::almost(), &m).unwrap().unwrap();
        // The first failing submodule in canonical order is 4Z_8.
        assert_eq!(w.display(), "{0,4}");
    }

    #[test]
    fn normalize_examples() {
        let (m, n) = z8();
        assert_eq!(Phi::one().normalize().name(), "one");
        let whole: Vec<_> = m.submodules().unwrap().iter().map(|s| (s.elements(), Some(m.all()))).collect();
        let constant = Phi::table("const-M", whole);
        assert_eq!(constant.normalize().eval(&n).unwrap(), PhiValue::Sub(n.clone()));
        let twice = constant.normalize().normalize();
        assert_eq!(twice.eval(&n).unwrap(), constant.normalize().eval(&n).unwrap());
    }

    #[test]
    fn quotient_phi() {
        let (m, n) = z8();
        let (q, phi_k) = Phi::zero().quotient(&m, &n).unwrap();
        let target = Submodule::zero(&q);
        assert_eq!(phi_k.eval(&target).unwrap(), PhiValue::Sub(Submodule::zero(&q)));
        let (_, empty_k) = Phi::empty().quotient(&m, &n).unwrap();
        assert_eq!(empty_k.eval(&target).unwrap(), PhiValue::Empty);
        // Wrong module.
        assert!(phi_k.eval(&n).is_err());
        // K = 0 gives back phi.
        let (same, phi0) = Phi::almost().quotient(&m, &Submodule::zero(&m)).unwrap();
        for s in same.submodules().unwrap() {
            let orig = Submodule::new(&m, s.elements()).unwrap();
            assert_eq!(phi0.eval(&s).unwrap().bits(), Phi::almost().eval(&orig).unwrap().bits());
        }
    }

    #[test]
    fn product_phi() {
        let z8 = FiniteRing::zn(8).unwrap();
        let z2 = FiniteRing::zn(2).unwrap();
        let m1 = FiniteModule::regular(&z8);
        let m2 = FiniteModule::regular(&z2);
        let m = FiniteModule::product(&m1, &m2).unwrap();
        let n1 = Submodule::generated(&m1, &[4]);
        let n = Submodule::new(
            &m,
            Bits::from_iter(n1.elements().iter().flat_map(|a| (0..2).map(move |b| a * 2 + b))),
        )
        .unwrap();
        let phi = Phi::product(&Phi::zero(), &Phi::zero());
        assert_eq!(phi.eval(&n).unwrap(), PhiValue::Sub(Submodule::zero(&m)));
        let phi = Phi::product(&Phi::almost(), &Phi::one());
        // (N1:M1) N1 = 4Z_8 * 4Z_8... = {0}, times all of Z_2.
        assert_eq!(phi.eval(&n).unwrap().bits(), Bits::from_iter([0, 1]));
        let r2 = FiniteModule::regular(&z2);
        let v = FiniteModule::product(&r2, &r2).unwrap();
        let diag = Submodule::generated(&v, &[v.element("(1,1)").unwrap()]);
        assert!(phi.eval(&diag).is_err());
    }
}
