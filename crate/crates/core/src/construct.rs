//! Structure transfers: localization, epimorphism transfer, free-module
//! tensoring, and cartesian-product instances.

use crate::bits::Bits;
use crate::classify::is_phi_classical_1abs;
use crate::error::{Error, Result};
use crate::hom::ModuleHom;
use crate::ideal::Ideal;
use crate::module::{FiniteModule, Submodule};
use crate::phi::{Phi, PhiValue};
use crate::ring::FiniteRing;

/// A multiplicatively closed subset of `R` containing `1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultSet {
    ring: FiniteRing,
    elems: Bits,
}

impl MultSet {
    pub fn new(ring: &FiniteRing, elems: Bits) -> Result<MultSet> {
        if !elems.is_subset(ring.all()) || !elems.contains(ring.one()) {
            return Err(Error::NotMultiplicativelyClosed);
        }
        for a in elems {
            for b in elems {
                if !elems.contains(ring.mul(a, b)) {
                    return Err(Error::NotMultiplicativelyClosed);
                }
            }
        }
        Ok(MultSet { ring: ring.clone(), elems })
    }

    /// The smallest multiplicatively closed set containing `gens`.
    pub fn generated(ring: &FiniteRing, gens: &[usize]) -> MultSet {
        let mut elems = Bits::single(ring.one());
        loop {
            let mut next = elems;
            for a in elems {
                for &g in gens {
                    next.insert(ring.mul(a, g));
                }
            }
            if next == elems {
                return MultSet { ring: ring.clone(), elems };
            }
            elems = next;
        }
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn elements(&self) -> Bits {
        self.elems
    }

    pub fn contains(&self, r: usize) -> bool {
        self.elems.contains(r)
    }

    pub fn contains_zero(&self) -> bool {
        self.elems.contains(self.ring.zero())
    }

    pub fn meets(&self, ideal: &Ideal) -> bool {
        !self.elems.intersection(ideal.elements()).is_empty()
    }
}

/// `M -> S^{-1} M`, realized as `M -> M / tor_S(M)` over `R / tor_S(R)`.
/// `target` is `None` when `0 in S`, where the localization is the zero module.
#[derive(Clone, Debug)]
pub struct LocalizationMap {
    source: FiniteModule,
    target: Option<FiniteModule>,
    map: Vec<usize>,
    torsion: Bits,
    ring_torsion: Bits,
    ring_map: Vec<usize>,
    set: MultSet,
}

pub fn localize(module: &FiniteModule, set: &MultSet) -> Result<LocalizationMap> {
    let ring = module.ring();
    if set.ring() != ring {
        return Err(Error::RingMismatch);
    }
    let torsion = Bits::from_iter(module.elements().filter(|&m| set.elements().iter().any(|s| module.act(s, m) == 0)));
    let ring_torsion =
        Bits::from_iter(ring.elements().filter(|&r| set.elements().iter().any(|s| ring.mul(s, r) == 0)));
    let base = LocalizationMap {
        source: module.clone(),
        target: None,
        map: Vec::new(),
        torsion,
        ring_torsion,
        ring_map: Vec::new(),
        set: set.clone(),
    };
    if set.contains_zero() {
        return Ok(base);
    }
    if ring_torsion.len() == 1 {
        debug_assert_eq!(torsion.len(), 1);
        return Ok(LocalizationMap {
            target: Some(module.clone()),
            map: module.elements().collect(),
            ring_map: ring.elements().collect(),
            ..base
        });
    }
    let ideal = Ideal::new(ring, ring_torsion)?;
    let quotient_ring = ring.quotient(&ideal)?;
    let ring_map = match quotient_ring.origin() {
        crate::ring::RingOrigin::Quotient { projection, .. } => projection.clone(),
        _ => unreachable!("quotient ring records its projection"),
    };
    let gens: Vec<_> = set.elements().iter().map(|s| ring.label(s).to_string()).collect();
    let name = format!("localize({},{{{}}})", module.name(), gens.join(","));
    let target = module.scalar_quotient(torsion, &quotient_ring, ring_map.clone(), name)?;
    let map = match target.origin() {
        crate::module::ModuleOrigin::ScalarQuotient { projection, .. } => projection.clone(),
        _ => unreachable!("scalar quotient records its projection"),
    };
    Ok(LocalizationMap { target: Some(target), map, ring_map, ..base })
}

impl LocalizationMap {
    pub fn source(&self) -> &FiniteModule {
        &self.source
    }

    pub fn target(&self) -> Option<&FiniteModule> {
        self.target.as_ref()
    }

    /// `true` when `0 in S` and the localization collapses.
    pub fn is_degenerate(&self) -> bool {
        self.target.is_none()
    }

    pub fn torsion(&self) -> Bits {
        self.torsion
    }

    pub fn ring_torsion(&self) -> Bits {
        self.ring_torsion
    }

    pub fn set(&self) -> &MultSet {
        &self.set
    }

    pub fn apply(&self, m: usize) -> Option<usize> {
        self.map.get(m).copied()
    }

    /// Image of `r` in `S^{-1} R`.
    pub fn apply_ring(&self, r: usize) -> Option<usize> {
        self.ring_map.get(r).copied()
    }

    fn require_target(&self) -> Result<&FiniteModule> {
        self.target.as_ref().ok_or_else(|| Error::Precondition("0 lies in S; the localization is zero".into()))
    }

    /// `S^{-1} N`.
    pub fn image(&self, n: &Submodule) -> Result<Submodule> {
        let target = self.require_target()?;
        if n.module() != &self.source {
            return Err(Error::ModuleMismatch);
        }
        Submodule::new(target, Bits::from_iter(n.elements().iter().map(|x| self.map[x])))
    }

    /// The largest `N` with `S^{-1} N = L`.
    pub fn saturation(&self, l: &Submodule) -> Result<Submodule> {
        let target = self.require_target()?;
        if l.module() != target {
            return Err(Error::ModuleMismatch);
        }
        Submodule::new(&self.source, Bits::from_iter(self.source.elements().filter(|&x| l.contains(self.map[x]))))
    }

    /// Every `s in S` acts bijectively on the target.
    pub fn units_act_bijectively(&self) -> bool {
        let Some(target) = &self.target else { return true };
        self.set.elements().iter().all(|s| {
            let s = self.ring_map[s];
            Bits::from_iter(target.elements().map(|m| target.act(s, m))) == target.all()
        })
    }

    /// `phi_S(S^{-1} N) = S^{-1} phi(N)`, with `N` the saturation of the argument.
    pub fn phi(&self, phi: &Phi) -> Result<Phi> {
        let target = self.require_target()?;
        Ok(Phi::pushforward(phi, &self.source, target, self.map.clone(), "S"))
    }
}

/// Classifications of both sides of an epimorphism transfer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TransferOutcome {
    /// Whether the stated phi-compatibility equality holds on the instance.
    pub compatible: bool,
    pub source_verdict: bool,
    pub target_verdict: bool,
}

fn preimage_value(f: &ModuleHom, v: &PhiValue) -> Result<PhiValue> {
    match v {
        PhiValue::Empty => Ok(PhiValue::Empty),
        PhiValue::Sub(s) => Ok(PhiValue::Sub(f.preimage(s)?)),
    }
}

fn image_value(f: &ModuleHom, v: &PhiValue) -> Result<PhiValue> {
    match v {
        PhiValue::Empty => Ok(PhiValue::Empty),
        PhiValue::Sub(s) => Ok(PhiValue::Sub(f.image(s)?)),
    }
}

/// Pulls `N'` back along `f`; compatibility is `phi(f^{-1}(N')) = f^{-1}(phi'(N'))`.
pub fn transfer_preimage(f: &ModuleHom, n_prime: &Submodule, phi: &Phi, phi_prime: &Phi) -> Result<TransferOutcome> {
    if !f.is_surjective() {
        return Err(Error::NotHomomorphism("map is not surjective".into()));
    }
    let n = f.preimage(n_prime)?;
    let compatible = phi.eval(&n)? == preimage_value(f, &phi_prime.eval(n_prime)?)?;
    Ok(TransferOutcome {
        compatible,
        source_verdict: is_phi_classical_1abs(&n, phi)?.verdict,
        target_verdict: is_phi_classical_1abs(n_prime, phi_prime)?.verdict,
    })
}

/// Pushes `N` forward along `f`; `None` when `Ker(f)` is not inside `N`.
/// Compatibility is `phi'(f(N)) = f(phi(N))`.
pub fn transfer_image(f: &ModuleHom, n: &Submodule, phi: &Phi, phi_prime: &Phi) -> Result<Option<TransferOutcome>> {
    if !f.is_surjective() {
        return Err(Error::NotHomomorphism("map is not surjective".into()));
    }
    if !f.kernel().is_subset(n) {
        return Ok(None);
    }
    let image = f.image(n)?;
    let compatible = phi_prime.eval(&image)? == image_value(f, &phi.eval(n)?)?;
    Ok(Some(TransferOutcome {
        compatible,
        source_verdict: is_phi_classical_1abs(n, phi)?.verdict,
        target_verdict: is_phi_classical_1abs(&image, phi_prime)?.verdict,
    }))
}

/// `F (x) M` for `F = R^k`, realized as `M^k`, with `F (x) N = N^k`.
pub fn tensor_free(module: &FiniteModule, k: usize, n: &Submodule) -> Result<(FiniteModule, Submodule)> {
    if n.module() != module {
        return Err(Error::ModuleMismatch);
    }
    if k == 1 {
        return Ok((module.clone(), n.clone()));
    }
    let big = FiniteModule::power(module, k)?;
    let sub = Submodule::new(&big, power_bits(n.elements(), module.size(), k))?;
    Ok((big, sub))
}

/// `X^k` inside `M^k` where `M` has `size` elements.
pub fn power_bits(xs: Bits, size: usize, k: usize) -> Bits {
    let mut acc = vec![0usize];
    for _ in 0..k {
        acc = acc.iter().flat_map(|&p| xs.iter().map(move |x| p * size + x)).collect();
    }
    Bits::from_iter(acc)
}

/// `(N^k :_{M^k} a) = (N :_M a)^k`, checked tuple by tuple so that `M^k`
/// may exceed the carrier bound.
pub fn tensor_colon_identity(module: &FiniteModule, n: &Submodule, k: usize, a: usize) -> Result<bool> {
    if n.module() != module {
        return Err(Error::ModuleMismatch);
    }
    if k == 0 {
        return Err(Error::Precondition("rank must be at least 1".into()));
    }
    let size = module.size();
    let small = module.colon_module_bits(n.elements(), Bits::single(a));
    let total = size.checked_pow(k as u32).ok_or(Error::SizeBound { size: usize::MAX, bound: MAX_TUPLES })?;
    if total > MAX_TUPLES {
        return Err(Error::SizeBound { size: total, bound: MAX_TUPLES });
    }
    let mut tuple = vec![0usize; k];
    for mut code in 0..total {
        for slot in tuple.iter_mut().rev() {
            *slot = code % size;
            code /= size;
        }
        let in_lhs = tuple.iter().all(|&x| n.contains(module.act(a, x)));
        let in_rhs = tuple.iter().all(|&x| small.contains(x));
        if in_lhs != in_rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

const MAX_TUPLES: usize = 1 << 20;

/// A product submodule `N_1 x N_2` and `phi = psi_1 x psi_2`.
#[derive(Clone, Debug)]
pub struct ProductInstance {
    pub module: FiniteModule,
    pub submodule: Submodule,
    pub phi: Phi,
}

/// `module` must be a product whose factors are the modules of `n1`, `n2`.
pub fn build_product_instance(
    module: &FiniteModule,
    n1: &Submodule,
    n2: &Submodule,
    psi1: &Phi,
    psi2: &Phi,
) -> Result<ProductInstance> {
    let (m1, m2) = module.factors().ok_or(Error::ModuleMismatch)?;
    if n1.module() != m1 || n2.module() != m2 {
        return Err(Error::ModuleMismatch);
    }
    let mut bits = Bits::EMPTY;
    for a in n1.elements() {
        for b in n2.elements() {
            bits.insert(module.join(a, b).expect("product module"));
        }
    }
    Ok(ProductInstance {
        module: module.clone(),
        submodule: Submodule::new(module, bits)?,
        phi: Phi::product(psi1, psi2),
    })
}

/// The side condition on a common ring: for nonunits `r, s, t` and
/// `m_1 in M_1`, `rstm_1 in psi_1(N_1)`, `rsm_1 not in N_1`,
/// `tm_1 not in N_1` imply `rst in (psi_2(M_2) :_R M_2)`.
pub fn product_side_condition(n1: &Submodule, psi1: &Phi, m2: &FiniteModule, psi2: &Phi) -> Result<bool> {
    let m1 = n1.module();
    let ring = m1.ring();
    if m2.ring() != ring {
        return Err(Error::RingMismatch);
    }
    let inner = psi1.eval(n1)?.bits();
    let whole2 = psi2.eval(&Submodule::whole(m2))?.bits();
    let colon2 = m2.colon_ring_bits(whole2, m2.all());
    let nu = ring.nonunits();
    for r in nu {
        for s in nu {
            let rs = ring.mul(r, s);
            for t in nu {
                let rst = ring.mul(rs, t);
                if colon2.contains(rst) {
                    continue;
                }
                for m in m1.elements() {
                    if inner.contains(m1.act(rst, m))
                        && !n1.contains(m1.act(rs, m))
                        && !n1.contains(m1.act(t, m))
                    {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mult_set_validation() {
        let r = FiniteRing::zn(12).unwrap();
        assert!(MultSet::new(&r, Bits::from_iter([1, 4])).is_ok());
        assert_eq!(MultSet::new(&r, Bits::from_iter([1, 2])).unwrap_err(), Error::NotMultiplicativelyClosed);
        assert_eq!(MultSet::new(&r, Bits::from_iter([4])).unwrap_err(), Error::NotMultiplicativelyClosed);
        assert_eq!(MultSet::generated(&r, &[2]).elements(), Bits::from_iter([1, 2, 4, 8]));
    }

    #[test]
    fn localize_z12_at_4() {
        let r = FiniteRing::zn(12).unwrap();
        let m = FiniteModule::regular(&r);
        let loc = localize(&m, &MultSet::new(&r, Bits::from_iter([1, 4])).unwrap()).unwrap();
        assert_eq!(loc.target().unwrap().size(), 3);
        assert_eq!(loc.torsion(), Bits::from_iter([0, 3, 6, 9]));
        assert!(loc.units_act_bijectively());
    }

    #[test]
    fn localize_identity_and_zero() {
        let r = FiniteRing::zn(12).unwrap();
        let m = FiniteModule::regular(&r);
        let id = localize(&m, &MultSet::generated(&r, &[])).unwrap();
        assert_eq!(id.target().unwrap(), &m);
        let zero = localize(&m, &MultSet::generated(&r, &[0])).unwrap();
        assert!(zero.is_degenerate());
        assert!(zero.image(&Submodule::zero(&m)).is_err());
    }

    #[test]
    fn localized_phi_matches_image() {
        let r = FiniteRing::zn(12).unwrap();
        let m = FiniteModule::regular(&r);
        let loc = localize(&m, &MultSet::generated(&r, &[4])).unwrap();
        let n = Submodule::generated(&m, &[2]);
        let phi_s = loc.phi(&Phi::almost()).unwrap();
        let image = loc.image(&n).unwrap();
        let expected = loc.image(Phi::almost().eval(&loc.saturation(&image).unwrap()).unwrap().submodule().unwrap());
        assert_eq!(phi_s.eval(&image).unwrap(), PhiValue::Sub(expected.unwrap()));
    }

    #[test]
    fn tensor_examples() {
        let r = FiniteRing::zn(12).unwrap();
        let m = FiniteModule::regular(&r);
        let n = Submodule::generated(&m, &[6]);
        assert!(tensor_colon_identity(&m, &n, 2, 2).unwrap());
        let (same, sub) = tensor_free(&m, 1, &n).unwrap();
        assert_eq!((same, sub), (m.clone(), n.clone()));
        let z8 = FiniteModule::regular(&FiniteRing::zn(8).unwrap());
        let four = Submodule::generated(&z8, &[4]);
        let (big, nk) = tensor_free(&z8, 2, &four).unwrap();
        assert_eq!(big.size(), 64);
        assert_eq!(nk.len(), 4);
        assert_eq!(
            is_phi_classical_1abs(&nk, &Phi::zero()).unwrap().verdict,
            is_phi_classical_1abs(&four, &Phi::zero()).unwrap().verdict
        );
    }

    #[test]
    fn epimorphism_transfer_identity() {
        let m = FiniteModule::regular(&FiniteRing::zn(8).unwrap());
        let f = ModuleHom::identity(&m);
        let n = Submodule::generated(&m, &[4]);
        let out = transfer_preimage(&f, &n, &Phi::zero(), &Phi::zero()).unwrap();
        assert!(out.compatible);
        assert_eq!(out.source_verdict, out.target_verdict);
        let (_, proj) = m.quotient(&n).unwrap();
        assert!(transfer_image(&proj, &Submodule::zero(&m), &Phi::zero(), &Phi::zero()).unwrap().is_none());
    }

    #[test]
    fn product_instance() {
        let z8 = FiniteRing::zn(8).unwrap();
        let z2 = FiniteRing::zn(2).unwrap();
        let m1 = FiniteModule::regular(&z8);
        let m2 = FiniteModule::regular(&z2);
        let m = FiniteModule::product(&m1, &m2).unwrap();
        let inst = build_product_instance(
            &m,
            &Submodule::generated(&m1, &[4]),
            &Submodule::whole(&m2),
            &Phi::empty(),
            &Phi::one(),
        )
        .unwrap();
        assert_eq!(inst.submodule.len(), 4);
        assert!(build_product_instance(&m1, &Submodule::zero(&m1), &Submodule::zero(&m2), &Phi::one(), &Phi::one())
            .is_err());
    }
}
