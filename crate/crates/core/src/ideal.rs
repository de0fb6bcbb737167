//! Ideals of a finite ring and their arithmetic.

use std::fmt;

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::ring::FiniteRing;

#[derive(Clone, PartialEq, Eq)]
pub struct Ideal {
    ring: FiniteRing,
    elems: Bits,
}

impl Ideal {
    /// Validates that `elems` is an ideal of `ring`.
    pub fn new(ring: &FiniteRing, elems: Bits) -> Result<Ideal> {
        if !elems.is_subset(ring.all()) {
            return Err(Error::NotAnIdeal("element outside the carrier".into()));
        }
        if !elems.contains(0) {
            return Err(Error::NotAnIdeal("missing zero".into()));
        }
        for x in elems {
            for y in elems {
                if !elems.contains(ring.add(x, y)) {
                    return Err(Error::NotAnIdeal(format!(
                        "not closed under addition at ({}, {})",
                        ring.label(x),
                        ring.label(y)
                    )));
                }
            }
            for r in ring.elements() {
                if !elems.contains(ring.mul(r, x)) {
                    return Err(Error::NotAnIdeal(format!(
                        "not absorbing at ({}, {})",
                        ring.label(r),
                        ring.label(x)
                    )));
                }
            }
        }
        Ok(Ideal { ring: ring.clone(), elems })
    }

    pub(crate) fn from_bits_unchecked(ring: FiniteRing, elems: Bits) -> Ideal {
        debug_assert!(Ideal::new(&ring, elems).is_ok());
        Ideal { ring, elems }
    }

    /// Smallest ideal containing `gens`.
    pub fn generated(ring: &FiniteRing, gens: &[usize]) -> Ideal {
        let multiples = gens
            .iter()
            .flat_map(|&g| ring.elements().map(move |r| ring.mul(r, g)))
            .collect::<Vec<_>>();
        let elems = ring.additive_closure(Bits::from_iter(multiples));
        Ideal { ring: ring.clone(), elems }
    }

    pub fn zero(ring: &FiniteRing) -> Ideal {
        Ideal { ring: ring.clone(), elems: Bits::single(0) }
    }

    pub fn unit(ring: &FiniteRing) -> Ideal {
        Ideal { ring: ring.clone(), elems: ring.all() }
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

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// A proper ideal contains no unit.
    pub fn is_proper(&self) -> bool {
        self.elems.intersection(self.ring.units()).is_empty()
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.elems.is_subset(other.elems)
    }

    /// A small generating set, picked greedily in element order.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = Bits::single(0);
        for x in self.elems {
            if !span.contains(x) {
                gens.push(x);
                span = Ideal::generated(&self.ring, &gens).elems;
            }
        }
        gens
    }

    fn check_same(&self, other: &Ideal) -> Result<()> {
        if self.ring != other.ring {
            Err(Error::RingMismatch)
        } else {
            Ok(())
        }
    }

    /// The ideal generated by all products `xy` with `x` in `self`, `y` in `other`.
    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check_same(other)?;
        let mut prods = Bits::EMPTY;
        for x in self.elems {
            for y in other.elems {
                prods.insert(self.ring.mul(x, y));
            }
        }
        Ok(Ideal { ring: self.ring.clone(), elems: self.ring.additive_closure(prods) })
    }

    pub fn power(&self, n: u32) -> Result<Ideal> {
        if n == 0 {
            return Err(Error::Exponent { min: 1, got: 0 });
        }
        let mut acc = self.clone();
        for _ in 1..n {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// `{ r | r^k in I for some k <= |R| }`.
    pub fn radical(&self) -> Ideal {
        let n = self.ring.size();
        let mut elems = Bits::EMPTY;
        for r in self.ring.elements() {
            let mut p = r;
            for _ in 0..n {
                if self.elems.contains(p) {
                    elems.insert(r);
                    break;
                }
                p = self.ring.mul(p, r);
            }
        }
        Ideal { ring: self.ring.clone(), elems }
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check_same(other)?;
        let mut elems = Bits::EMPTY;
        for x in self.elems {
            for y in other.elems {
                elems.insert(self.ring.add(x, y));
            }
        }
        Ok(Ideal { ring: self.ring.clone(), elems })
    }

    pub fn intersection(&self, other: &Ideal) -> Result<Ideal> {
        self.check_same(other)?;
        Ok(Ideal { ring: self.ring.clone(), elems: self.elems.intersection(other.elems) })
    }

    /// Display form such as `{0,4}`.
    pub fn display(&self) -> String {
        let items: Vec<_> = self.elems.iter().map(|x| self.ring.label(x)).collect();
        format!("{{{}}}", items.join(","))
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{} of {}", self.display(), self.ring.name())
    }
}

/// Checks the psi-1-absorbing prime condition for a proper ideal `I` against a
/// precomputed value `psi_value` of psi at `I` (`None` is the empty set).
///
/// Returns the first nonunit triple `(a, b, c)` with `abc` in `I \ psi(I)`,
/// `ab` not in `I` and `c` not in `I`, or `None` when there is none.
pub fn psi_1absorbing_witness(
    ideal: &Ideal,
    psi_value: Option<&Ideal>,
) -> Result<Option<(usize, usize, usize)>> {
    if !ideal.is_proper() {
        return Err(Error::ImproperIdeal);
    }
    let ring = ideal.ring();
    let excluded = psi_value.map(|p| p.elements()).unwrap_or(Bits::EMPTY);
    let nonunits = ring.nonunits();
    for a in nonunits {
        for b in nonunits {
            let ab = ring.mul(a, b);
            if ideal.contains(ab) {
                continue;
            }
            for c in nonunits {
                if ideal.contains(c) {
                    continue;
                }
                let abc = ring.mul(ab, c);
                if ideal.contains(abc) && !excluded.contains(abc) {
                    return Ok(Some((a, b, c)));
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: usize) -> FiniteRing {
        FiniteRing::zn(n).unwrap()
    }

    #[test]
    fn products_and_powers() {
        let z8 = z(8);
        let i = Ideal::generated(&z8, &[2]);
        assert_eq!(i.product(&i).unwrap().elements().to_vec(), vec![0, 4]);
        assert_eq!(i.power(2).unwrap().elements().to_vec(), vec![0, 4]);
        assert_eq!(i.power(3).unwrap().elements().to_vec(), vec![0]);
        assert_eq!(i.power(1).unwrap(), i);
        assert_eq!(i.product(&Ideal::unit(&z8)).unwrap(), i);
        assert_eq!(i.product(&Ideal::zero(&z8)).unwrap(), Ideal::zero(&z8));
        assert_eq!(i.power(0).unwrap_err(), Error::Exponent { min: 1, got: 0 });
    }

    #[test]
    fn radicals() {
        let z12 = z(12);
        assert_eq!(Ideal::zero(&z12).radical().elements().to_vec(), vec![0, 6]);
        let four = Ideal::generated(&z12, &[4]);
        assert_eq!(four.radical().elements().to_vec(), vec![0, 2, 4, 6, 8, 10]);
        assert_eq!(Ideal::unit(&z12).radical(), Ideal::unit(&z12));
    }

    #[test]
    fn sums() {
        let z12 = z(12);
        let a = Ideal::generated(&z12, &[4]);
        let b = Ideal::generated(&z12, &[6]);
        assert_eq!(a.sum(&b).unwrap(), Ideal::generated(&z12, &[2]));
        assert_eq!(a.sum(&Ideal::zero(&z12)).unwrap(), a);
        assert_eq!(a.sum(&Ideal::unit(&z12)).unwrap(), Ideal::unit(&z12));
    }

    #[test]
    fn mismatched_rings_rejected() {
        let a = Ideal::zero(&z(4));
        let b = Ideal::zero(&z(6));
        assert_eq!(a.product(&b).unwrap_err(), Error::RingMismatch);
        assert_eq!(a.sum(&b).unwrap_err(), Error::RingMismatch);
    }

    #[test]
    fn validation() {
        let z8 = z(8);
        assert!(Ideal::new(&z8, Bits::from_iter([0, 4])).is_ok());
        assert!(Ideal::new(&z8, Bits::from_iter([0, 3])).is_err());
        assert!(Ideal::new(&z8, Bits::from_iter([4])).is_err());
    }

    #[test]
    fn psi_1absorbing_examples() {
        let z8 = z(8);
        let four = Ideal::generated(&z8, &[4]);
        // psi = empty
        assert_eq!(psi_1absorbing_witness(&four, None).unwrap(), None);
        let zero = Ideal::zero(&z8);
        // psi = zero: I \ psi(I) is empty
        assert_eq!(psi_1absorbing_witness(&zero, Some(&zero)).unwrap(), None);
        assert_eq!(psi_1absorbing_witness(&zero, None).unwrap(), Some((2, 2, 2)));
        assert_eq!(
            psi_1absorbing_witness(&Ideal::unit(&z8), None).unwrap_err(),
            Error::ImproperIdeal
        );
    }
}
