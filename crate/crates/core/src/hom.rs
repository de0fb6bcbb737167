//! R-linear maps between finite modules.

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::module::{FiniteModule, Submodule};

#[derive(Clone, Debug)]
pub struct ModuleHom {
    source: FiniteModule,
    target: FiniteModule,
    map: Vec<usize>,
    surjective: bool,
}

impl ModuleHom {
    /// Checks additivity and R-linearity exhaustively.
    pub fn new(source: &FiniteModule, target: &FiniteModule, map: Vec<usize>) -> Result<ModuleHom> {
        if source.ring() != target.ring() {
            return Err(Error::RingMismatch);
        }
        if map.len() != source.size() || map.iter().any(|&y| y >= target.size()) {
            return Err(Error::NotHomomorphism("map does not cover the source".into()));
        }
        for a in source.elements() {
            for b in source.elements() {
                if map[source.add(a, b)] != target.add(map[a], map[b]) {
                    return Err(Error::NotHomomorphism(format!(
                        "not additive at ({}, {})",
                        source.label(a),
                        source.label(b)
                    )));
                }
            }
            for r in source.ring().elements() {
                if map[source.act(r, a)] != target.act(r, map[a]) {
                    return Err(Error::NotHomomorphism(format!(
                        "not linear at ({}, {})",
                        source.ring().label(r),
                        source.label(a)
                    )));
                }
            }
        }
        let surjective = Bits::from_iter(map.iter().copied()) == target.all();
        Ok(ModuleHom { source: source.clone(), target: target.clone(), map, surjective })
    }

    pub fn identity(module: &FiniteModule) -> ModuleHom {
        ModuleHom {
            source: module.clone(),
            target: module.clone(),
            map: module.elements().collect(),
            surjective: true,
        }
    }

    pub fn source(&self) -> &FiniteModule {
        &self.source
    }

    pub fn target(&self) -> &FiniteModule {
        &self.target
    }

    pub fn apply(&self, m: usize) -> usize {
        self.map[m]
    }

    pub fn is_surjective(&self) -> bool {
        self.surjective
    }

    pub fn image_bits(&self, xs: Bits) -> Bits {
        Bits::from_iter(xs.iter().map(|x| self.map[x]))
    }

    pub fn preimage_bits(&self, ys: Bits) -> Bits {
        Bits::from_iter(self.source.elements().filter(|&x| ys.contains(self.map[x])))
    }

    pub fn kernel(&self) -> Submodule {
        Submodule::new(&self.source, self.preimage_bits(Bits::single(0)))
            .expect("kernel of a homomorphism is a submodule")
    }

    /// `f(N)`.
    pub fn image(&self, n: &Submodule) -> Result<Submodule> {
        if n.module() != &self.source {
            return Err(Error::ModuleMismatch);
        }
        Submodule::new(&self.target, self.image_bits(n.elements()))
    }

    /// `f^{-1}(N')`.
    pub fn preimage(&self, n: &Submodule) -> Result<Submodule> {
        if n.module() != &self.target {
            return Err(Error::ModuleMismatch);
        }
        Submodule::new(&self.source, self.preimage_bits(n.elements()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::FiniteRing;

    #[test]
    fn projection_images() {
        let z8 = FiniteRing::zn(8).unwrap();
        let m = FiniteModule::regular(&z8);
        let k = Submodule::generated(&m, &[4]);
        let (q, f) = m.quotient(&k).unwrap();
        assert!(f.is_surjective());
        assert_eq!(f.image(&Submodule::zero(&m)).unwrap(), Submodule::zero(&q));
        assert_eq!(f.preimage(&Submodule::zero(&q)).unwrap(), f.kernel());
        assert_eq!(f.kernel(), k);
        let two = Submodule::generated(&m, &[2]);
        let img = f.image(&two).unwrap();
        assert_eq!(img.len(), 2);
        assert!(img.contains(q.element("[2]").unwrap()));
    }

    #[test]
    fn foreign_submodule_rejected() {
        let z8 = FiniteRing::zn(8).unwrap();
        let m = FiniteModule::regular(&z8);
        let other = FiniteModule::free(&z8, 2).unwrap();
        let f = ModuleHom::identity(&m);
        assert_eq!(f.image(&Submodule::zero(&other)).unwrap_err(), Error::ModuleMismatch);
        assert_eq!(f.preimage(&Submodule::zero(&other)).unwrap_err(), Error::ModuleMismatch);
    }

    #[test]
    fn non_linear_map_rejected() {
        let z4 = FiniteRing::zn(4).unwrap();
        let m = FiniteModule::regular(&z4);
        // x -> x + 1 is not additive.
        let map = (0..4).map(|x| (x + 1) % 4).collect();
        assert!(ModuleHom::new(&m, &m, map).is_err());
    }
}
