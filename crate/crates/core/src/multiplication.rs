//! Multiplication modules and the submodule product `NK = (N:M)(K:M)M`.

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::module::{FiniteModule, Submodule};

/// Decides whether every submodule `N` satisfies `N = (N :_R M) M`.
pub fn is_multiplication(module: &FiniteModule) -> Result<bool> {
    if let Some(&v) = module.multiplication_cache().get() {
        return Ok(v);
    }
    let v = multiplication_witness(module)?.is_none();
    Ok(*module.multiplication_cache().get_or_init(|| v))
}

/// The first submodule `N` (canonical order) with `(N :_R M) M != N`.
pub fn multiplication_witness(module: &FiniteModule) -> Result<Option<Submodule>> {
    for n in module.submodules()? {
        let colon = module.colon_ring_bits(n.elements(), module.all());
        if module.ideal_times_bits(colon, module.all()) != n.elements() {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

fn require_multiplication(module: &FiniteModule) -> Result<()> {
    if is_multiplication(module)? {
        Ok(())
    } else {
        Err(Error::NotMultiplication)
    }
}

/// `NK = (N:M)(K:M) M` on a multiplication module.
pub fn submodule_product(n: &Submodule, k: &Submodule) -> Result<Submodule> {
    let module = n.module();
    if k.module() != module {
        return Err(Error::ModuleMismatch);
    }
    require_multiplication(module)?;
    let ideal = n.colon().product(&k.colon())?;
    module.ideal_times(&ideal, &Submodule::whole(module))
}

/// `N^n = (N:M)^n M` on a multiplication module.
pub fn submodule_power(n: &Submodule, exponent: u32) -> Result<Submodule> {
    let module = n.module();
    require_multiplication(module)?;
    let ideal = n.colon().power(exponent)?;
    module.ideal_times(&ideal, &Submodule::whole(module))
}

/// Product of several submodules, `N_1 N_2 ... N_k = (N_1:M)...(N_k:M) M`.
pub fn submodule_product_all(parts: &[&Submodule]) -> Result<Submodule> {
    let first = parts.first().ok_or(Error::EmptySet)?;
    let module = first.module();
    require_multiplication(module)?;
    let mut ideal = Ideal::unit(module.ring());
    for p in parts {
        if p.module() != module {
            return Err(Error::ModuleMismatch);
        }
        ideal = ideal.product(&p.colon())?;
    }
    module.ideal_times(&ideal, &Submodule::whole(module))
}

/// All ideals `I` with `I M = N`; used to check that products do not
/// depend on the chosen presentation.
pub fn presentations(n: &Submodule) -> Vec<Ideal> {
    let module = n.module();
    module
        .ring()
        .ideals()
        .into_iter()
        .filter(|i| module.ideal_times_bits(i.elements(), module.all()) == n.elements())
        .collect()
}

/// `K m := (K:M) m`, the submodule generated by `{ r m | r in (K:M) }`.
pub fn submodule_times_element(k: &Submodule, m: usize) -> Bits {
    let module = k.module();
    module.ideal_times_bits(k.colon().elements(), Bits::single(m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::FiniteRing;

    #[test]
    fn multiplication_examples() {
        let z12 = FiniteRing::zn(12).unwrap();
        assert!(is_multiplication(&FiniteModule::regular(&z12)).unwrap());

        let z2 = FiniteRing::zn(2).unwrap();
        let r2 = FiniteModule::regular(&z2);
        let v = FiniteModule::product(&r2, &r2).unwrap();
        assert!(!is_multiplication(&v).unwrap());
        let w = multiplication_witness(&v).unwrap().unwrap();
        assert_eq!(w.display(), "{(0,0),(0,1)}");
    }

    #[test]
    fn product_examples() {
        let z12 = FiniteRing::zn(12).unwrap();
        let m = FiniteModule::regular(&z12);
        let four = Submodule::generated(&m, &[4]);
        let six = Submodule::generated(&m, &[6]);
        assert_eq!(submodule_product(&four, &six).unwrap(), Submodule::zero(&m));
        assert_eq!(submodule_product(&four, &Submodule::whole(&m)).unwrap(), four);
        assert_eq!(submodule_product(&Submodule::zero(&m), &six).unwrap(), Submodule::zero(&m));
    }

    #[test]
    fn product_requires_multiplication() {
        let z2 = FiniteRing::zn(2).unwrap();
        let v = FiniteModule::free(&z2, 2).unwrap();
        let n = Submodule::zero(&v);
        assert_eq!(submodule_product(&n, &n).unwrap_err(), Error::NotMultiplication);
    }

    #[test]
    fn power_of_2z8() {
        let z8 = FiniteRing::zn(8).unwrap();
        let m = FiniteModule::regular(&z8);
        let two = Submodule::generated(&m, &[2]);
        assert_eq!(submodule_power(&two, 2).unwrap(), Submodule::generated(&m, &[4]));
        assert_eq!(submodule_power(&two, 3).unwrap(), Submodule::zero(&m));
    }
}
