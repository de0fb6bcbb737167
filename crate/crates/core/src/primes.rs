//! Prime and classical prime submodules, the M-radical, and the
//! finite-union collapse check.

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::module::Submodule;

fn require_proper(n: &Submodule) -> Result<()> {
    if n.is_proper() {
        Ok(())
    } else {
        Err(Error::ImproperSubmodule)
    }
}

/// First `(a, m)` with `am in N`, `m not in N`, `a not in (N:M)`.
pub fn prime_witness(n: &Submodule) -> Result<Option<(usize, usize)>> {
    require_proper(n)?;
    let module = n.module();
    let colon = n.colon();
    for a in module.ring().elements() {
        if colon.contains(a) {
            continue;
        }
        for m in module.elements() {
            if !n.contains(m) && n.contains(module.act(a, m)) {
                return Ok(Some((a, m)));
            }
        }
    }
    Ok(None)
}

pub fn is_prime_submodule(n: &Submodule) -> Result<bool> {
    Ok(prime_witness(n)?.is_none())
}

/// First `(a, b, m)` with `abm in N`, `am not in N`, `bm not in N`.
pub fn classical_prime_witness(n: &Submodule) -> Result<Option<(usize, usize, usize)>> {
    require_proper(n)?;
    let module = n.module();
    let ring = module.ring();
    for a in ring.elements() {
        for b in ring.elements() {
            let ab = ring.mul(a, b);
            for m in module.elements() {
                if n.contains(module.act(ab, m))
                    && !n.contains(module.act(a, m))
                    && !n.contains(module.act(b, m))
                {
                    return Ok(Some((a, b, m)));
                }
            }
        }
    }
    Ok(None)
}

pub fn is_classical_prime(n: &Submodule) -> Result<bool> {
    Ok(classical_prime_witness(n)?.is_none())
}

/// Intersection of all prime submodules containing `N`, or `M` when there is none.
pub fn m_radical(n: &Submodule) -> Result<Submodule> {
    require_proper(n)?;
    let module = n.module();
    let mut acc = module.all();
    for p in module.submodules()? {
        if p.is_proper() && n.is_subset(&p) && is_prime_submodule(&p)? {
            acc = acc.intersection(p.elements());
        }
    }
    Submodule::new(module, acc)
}

/// `sqrt((N:M)) M`, which agrees with [`m_radical`] on multiplication modules.
pub fn m_radical_by_colon(n: &Submodule) -> Submodule {
    let module = n.module();
    let rad = n.colon().radical();
    Submodule::new(module, module.ideal_times_bits(rad.elements(), module.all()))
        .expect("ideal times module is a submodule")
}

/// True unless `A` is covered by the union of `parts` without lying inside
/// any single part. Works on raw sets so that empty parts are allowed.
pub fn union_collapse_bits(a: Bits, parts: &[Bits]) -> bool {
    let union = parts.iter().fold(Bits::EMPTY, |acc, &p| acc.union(p));
    !a.is_subset(union) || parts.iter().any(|&p| a.is_subset(p))
}

pub fn union_collapse_holds(a: &Submodule, parts: &[Submodule]) -> Result<bool> {
    if parts.is_empty() {
        return Err(Error::EmptySet);
    }
    if parts.iter().any(|p| p.module() != a.module()) {
        return Err(Error::ModuleMismatch);
    }
    let raw: Vec<Bits> = parts.iter().map(|p| p.elements()).collect();
    Ok(union_collapse_bits(a.elements(), &raw))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::FiniteModule;
    use crate::ring::FiniteRing;

    #[test]
    fn prime_examples() {
        let z8 = FiniteRing::zn(8).unwrap();
        let m = FiniteModule::regular(&z8);
        assert!(is_prime_submodule(&Submodule::generated(&m, &[2])).unwrap());
        let four = Submodule::generated(&m, &[4]);
        assert_eq!(prime_witness(&four).unwrap(), Some((2, 2)));
        let z5 = FiniteRing::zn(5).unwrap();
        assert!(is_prime_submodule(&Submodule::zero(&FiniteModule::regular(&z5))).unwrap());
        assert_eq!(is_prime_submodule(&Submodule::whole(&m)).unwrap_err(), Error::ImproperSubmodule);
    }

    #[test]
    fn radical_examples() {
        let z12 = FiniteRing::zn(12).unwrap();
        let m = FiniteModule::regular(&z12);
        let four = Submodule::generated(&m, &[4]);
        assert_eq!(m_radical(&four).unwrap(), Submodule::generated(&m, &[2]));
        let two = Submodule::generated(&m, &[2]);
        assert_eq!(m_radical(&two).unwrap(), two);
        for n in m.submodules().unwrap().into_iter().filter(|n| n.is_proper()) {
            assert_eq!(m_radical(&n).unwrap(), m_radical_by_colon(&n));
        }
    }

    #[test]
    fn union_collapse_examples() {
        let z2 = FiniteRing::zn(2).unwrap();
        let v = FiniteModule::free(&z2, 2).unwrap();
        let lines: Vec<_> = v.submodules().unwrap().into_iter().filter(|s| s.len() == 2).collect();
        assert_eq!(lines.len(), 3);
        assert!(!union_collapse_holds(&Submodule::whole(&v), &lines).unwrap());
        assert!(union_collapse_holds(&lines[0], &[lines[0].clone(), lines[1].clone()]).unwrap());
        assert_eq!(union_collapse_holds(&lines[0], &[]).unwrap_err(), Error::EmptySet);
    }
}
