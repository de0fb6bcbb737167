//! Definitional decision procedures. Every scan enumerates nonunits
//! (including 0) and module elements in canonical order and returns the
//! first falsifying tuple.

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::ideal::{psi_1absorbing_witness, Ideal};
use crate::module::Submodule;
use crate::multiplication::submodule_power;
use crate::phi::{Phi, PhiValue};

/// A falsifying tuple: `(a, b, c, m)` for classical scans, `(a, b, m)` otherwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Witness {
    Triple(usize, usize, usize),
    Quadruple(usize, usize, usize, usize),
}

impl Witness {
    pub fn to_vec(self) -> Vec<usize> {
        match self {
            Witness::Triple(a, b, m) => vec![a, b, m],
            Witness::Quadruple(a, b, c, m) => vec![a, b, c, m],
        }
    }
}

/// `verdict == false` iff `witness` is present.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationResult {
    pub verdict: bool,
    pub witness: Option<Witness>,
    pub checked_count: u64,
}

impl ClassificationResult {
    fn from_scan(witness: Option<Witness>, checked_count: u64) -> Self {
        ClassificationResult { verdict: witness.is_none(), witness, checked_count }
    }
}

/// `(a, b, c, m)` with `abcm in phi(N)`, `abm not in N`, `cm not in N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct QuadrupleZero {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub m: usize,
}

fn require_proper(n: &Submodule) -> Result<()> {
    if n.is_proper() {
        Ok(())
    } else {
        Err(Error::ImproperSubmodule)
    }
}

/// Scans `abcm in N \ excluded => abm in N or cm in N`.
fn classical_scan(n: &Submodule, excluded: Bits) -> ClassificationResult {
    let module = n.module();
    let ring = module.ring();
    let nonunits = ring.nonunits();
    let mut count = 0u64;
    for a in nonunits {
        for b in nonunits {
            let ab = ring.mul(a, b);
            for c in nonunits {
                let abc = ring.mul(ab, c);
                for m in module.elements() {
                    count += 1;
                    let x = module.act(abc, m);
                    if n.contains(x)
                        && !excluded.contains(x)
                        && !n.contains(module.act(ab, m))
                        && !n.contains(module.act(c, m))
                    {
                        return ClassificationResult::from_scan(Some(Witness::Quadruple(a, b, c, m)), count);
                    }
                }
            }
        }
    }
    ClassificationResult::from_scan(None, count)
}

/// Only `N n phi(N)` matters, so the value is intersected with `N`.
fn excluded_set(n: &Submodule, value: &PhiValue) -> Bits {
    value.bits().intersection(n.elements())
}

pub fn is_phi_classical_1abs(n: &Submodule, phi: &Phi) -> Result<ClassificationResult> {
    require_proper(n)?;
    let value = phi.eval(n)?;
    Ok(classical_scan(n, excluded_set(n, &value)))
}

/// As [`is_phi_classical_1abs`] with `phi(N)` already evaluated.
pub fn is_phi_classical_1abs_at(n: &Submodule, value: &PhiValue) -> Result<ClassificationResult> {
    require_proper(n)?;
    Ok(classical_scan(n, excluded_set(n, value)))
}

/// Scans `abm in N \ phi(N) => m in N or ab in (N:M)`.
pub fn is_phi_1abs_prime(n: &Submodule, phi: &Phi) -> Result<ClassificationResult> {
    require_proper(n)?;
    let value = phi.eval(n)?;
    let excluded = excluded_set(n, &value);
    let module = n.module();
    let ring = module.ring();
    let colon = n.colon();
    let nonunits = ring.nonunits();
    let mut count = 0u64;
    for a in nonunits {
        for b in nonunits {
            let ab = ring.mul(a, b);
            let ab_in_colon = colon.contains(ab);
            for m in module.elements() {
                count += 1;
                let x = module.act(ab, m);
                if n.contains(x) && !excluded.contains(x) && !n.contains(m) && !ab_in_colon {
                    return Ok(ClassificationResult::from_scan(Some(Witness::Triple(a, b, m)), count));
                }
            }
        }
    }
    Ok(ClassificationResult::from_scan(None, count))
}

pub fn is_1abs_prime(n: &Submodule) -> Result<ClassificationResult> {
    is_phi_1abs_prime(n, &Phi::empty())
}

pub fn is_classical_1abs(n: &Submodule) -> Result<ClassificationResult> {
    is_phi_classical_1abs(n, &Phi::empty())
}

pub fn is_weakly_classical_1abs(n: &Submodule) -> Result<ClassificationResult> {
    is_phi_classical_1abs(n, &Phi::zero())
}

pub fn is_almost_classical_1abs(n: &Submodule) -> Result<ClassificationResult> {
    is_phi_classical_1abs(n, &Phi::almost())
}

pub fn is_n_almost_classical_1abs(n: &Submodule, k: u32) -> Result<ClassificationResult> {
    is_phi_classical_1abs(n, &Phi::n_almost(k)?)
}

pub fn is_omega_classical_1abs(n: &Submodule) -> Result<ClassificationResult> {
    is_phi_classical_1abs(n, &Phi::omega())
}

/// Scans `abcm in N^k => abm in N or cm in N`; needs a multiplication module.
pub fn is_n_potent_classical_1abs(n: &Submodule, k: u32) -> Result<ClassificationResult> {
    require_proper(n)?;
    if k < 2 {
        return Err(Error::Exponent { min: 2, got: k });
    }
    let power = submodule_power(n, k)?;
    let module = n.module();
    let ring = module.ring();
    let nonunits = ring.nonunits();
    let mut count = 0u64;
    for a in nonunits {
        for b in nonunits {
            let ab = ring.mul(a, b);
            for c in nonunits {
                let abc = ring.mul(ab, c);
                for m in module.elements() {
                    count += 1;
                    if power.contains(module.act(abc, m))
                        && !n.contains(module.act(ab, m))
                        && !n.contains(module.act(c, m))
                    {
                        return Ok(ClassificationResult::from_scan(Some(Witness::Quadruple(a, b, c, m)), count));
                    }
                }
            }
        }
    }
    Ok(ClassificationResult::from_scan(None, count))
}

/// Every quadruple-zero of a phi-classical 1-absorbing prime `N`, in
/// canonical order.
pub fn find_quadruple_zeros(n: &Submodule, phi: &Phi) -> Result<Vec<QuadrupleZero>> {
    require_proper(n)?;
    let value = phi.eval(n)?;
    if !is_phi_classical_1abs_at(n, &value)?.verdict {
        return Err(Error::NotPhiClassical);
    }
    let inner = value.bits();
    let module = n.module();
    let ring = module.ring();
    let nonunits = ring.nonunits();
    let mut out = Vec::new();
    if inner.is_empty() {
        return Ok(out);
    }
    for a in nonunits {
        for b in nonunits {
            let ab = ring.mul(a, b);
            for c in nonunits {
                let abc = ring.mul(ab, c);
                for m in module.elements() {
                    if inner.contains(module.act(abc, m))
                        && !n.contains(module.act(ab, m))
                        && !n.contains(module.act(c, m))
                    {
                        out.push(QuadrupleZero { a, b, c, m });
                    }
                }
            }
        }
    }
    Ok(out)
}

/// True iff no `(a, b, c, k)` in `H x I x J x K` is a quadruple-zero of `N`.
/// Requires `HIJK <= N` and `N` phi-classical 1-absorbing prime.
pub fn is_free_quadruple_zero(
    n: &Submodule,
    phi: &Phi,
    h: &Ideal,
    i: &Ideal,
    j: &Ideal,
    k: &Submodule,
) -> Result<bool> {
    let module = n.module();
    if k.module() != module {
        return Err(Error::ModuleMismatch);
    }
    let ring = module.ring();
    if h.ring() != ring || i.ring() != ring || j.ring() != ring {
        return Err(Error::RingMismatch);
    }
    let hij = h.product(i)?.product(j)?;
    if !module.ideal_times_bits(hij.elements(), k.elements()).is_subset(n.elements()) {
        return Err(Error::Precondition("HIJK is not contained in N".into()));
    }
    let zeros = find_quadruple_zeros(n, phi)?;
    Ok(!zeros
        .iter()
        .any(|q| h.contains(q.a) && i.contains(q.b) && j.contains(q.c) && k.contains(q.m)))
}

/// `I` is psi-1-absorbing prime: `abc in I \ psi(I) => ab in I or c in I`.
pub fn is_psi_1abs_prime_ideal(ideal: &Ideal, psi: &Phi) -> Result<ClassificationResult> {
    let value = psi.eval_ideal(ideal)?;
    let witness = psi_1absorbing_witness(ideal, value.as_ref())?;
    Ok(ClassificationResult::from_scan(
        witness.map(|(a, b, c)| Witness::Triple(a, b, c)),
        0,
    ))
}

/// Re-checks a classical witness against the raw definition.
pub fn witness_falsifies_classical(n: &Submodule, value: &PhiValue, w: Witness) -> bool {
    let Witness::Quadruple(a, b, c, m) = w else { return false };
    let module = n.module();
    let ring = module.ring();
    if ring.is_unit(a) || ring.is_unit(b) || ring.is_unit(c) {
        return false;
    }
    let ab = ring.mul(a, b);
    let x = module.act(ring.mul(ab, c), m);
    n.contains(x) && !value.contains(x) && !n.contains(module.act(ab, m)) && !n.contains(module.act(c, m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::FiniteModule;
    use crate::ring::FiniteRing;

    fn z8() -> FiniteModule {
        FiniteModule::regular(&FiniteRing::zn(8).unwrap())
    }

    #[test]
    fn pinned_z8_fixtures() {
        let m = z8();
        let four = Submodule::generated(&m, &[4]);
        let zero = Submodule::zero(&m);
        assert!(is_phi_classical_1abs(&four, &Phi::empty()).unwrap().verdict);
        let r = is_phi_classical_1abs(&zero, &Phi::empty()).unwrap();
        assert!(!r.verdict);
        assert_eq!(r.witness, Some(Witness::Quadruple(2, 2, 2, 1)));
        assert!(witness_falsifies_classical(&zero, &PhiValue::Empty, r.witness.unwrap()));
        assert!(is_phi_classical_1abs(&zero, &Phi::zero()).unwrap().verdict);
        let zeros = find_quadruple_zeros(&zero, &Phi::zero()).unwrap();
        assert!(zeros.contains(&QuadrupleZero { a: 2, b: 2, c: 2, m: 1 }));
        assert!(find_quadruple_zeros(&four, &Phi::zero()).unwrap().is_empty());
        assert!(find_quadruple_zeros(&four, &Phi::empty()).unwrap().is_empty());
    }

    #[test]
    fn one_is_trivial_and_whole_rejected() {
        let m = z8();
        for n in m.submodules().unwrap().into_iter().filter(|n| n.is_proper()) {
            assert!(is_phi_classical_1abs(&n, &Phi::one()).unwrap().verdict);
        }
        assert_eq!(
            is_phi_classical_1abs(&Submodule::whole(&m), &Phi::empty()).unwrap_err(),
            Error::ImproperSubmodule
        );
    }

    #[test]
    fn one_absorbing_examples() {
        let m = z8();
        assert!(is_phi_1abs_prime(&Submodule::generated(&m, &[4]), &Phi::empty()).unwrap().verdict);
        assert!(is_phi_1abs_prime(&Submodule::zero(&m), &Phi::zero()).unwrap().verdict);
    }

    #[test]
    fn named_variants_delegate() {
        let m = z8();
        for n in m.submodules().unwrap().into_iter().filter(|n| n.is_proper()) {
            assert_eq!(is_almost_classical_1abs(&n).unwrap(), is_phi_classical_1abs(&n, &Phi::almost()).unwrap());
            assert_eq!(
                is_n_almost_classical_1abs(&n, 4).unwrap(),
                is_phi_classical_1abs(&n, &Phi::n_almost(4).unwrap()).unwrap()
            );
            assert!(is_weakly_classical_1abs(&Submodule::zero(&m)).unwrap().verdict);
        }
    }

    #[test]
    fn n_potent() {
        let m = z8();
        let two = Submodule::generated(&m, &[2]);
        let r = is_n_potent_classical_1abs(&two, 2).unwrap();
        // 2*2*1*1 = 4 lies in (2Z_8)^2 while 2*2 = 4 and 1 lie in 2Z_8 only when ...
        assert_eq!(r.verdict, r.witness.is_none());
        let v = FiniteModule::free(&FiniteRing::zn(2).unwrap(), 2).unwrap();
        assert_eq!(
            is_n_potent_classical_1abs(&Submodule::zero(&v), 2).unwrap_err(),
            Error::NotMultiplication
        );
    }

    #[test]
    fn free_quadruple_zero() {
        let m = z8();
        let zero = Submodule::zero(&m);
        let r = m.ring();
        let two = Ideal::generated(r, &[2]);
        let z = Ideal::zero(r);
        assert!(is_free_quadruple_zero(&zero, &Phi::empty(), &z, &z, &z, &zero).is_err());
        let four = Submodule::generated(&m, &[4]);
        assert!(is_free_quadruple_zero(&four, &Phi::empty(), &two, &two, &two, &Submodule::whole(&m)).unwrap());
        assert!(!is_free_quadruple_zero(&zero, &Phi::zero(), &two, &two, &two, &Submodule::whole(&m)).unwrap());
    }

    #[test]
    fn ideal_wrapper_matches_module_scan() {
        let r = FiniteRing::zn(12).unwrap();
        let regular = FiniteModule::regular(&r);
        for i in r.ideals().into_iter().filter(|i| i.is_proper()) {
            let n = Submodule::new(&regular, i.elements()).unwrap();
            for phi in Phi::standard_catalog() {
                assert_eq!(
                    is_psi_1abs_prime_ideal(&i, &phi).unwrap().verdict,
                    is_phi_classical_1abs(&n, &phi).unwrap().verdict
                );
            }
        }
    }
}
