//! Finite commutative rings with identity, stored as operation tables.

use std::fmt;
use std::sync::Arc;

use crate::bits::{Bits, MAX_CARRIER};
use crate::error::{Error, Result};
use crate::ideal::Ideal;

/// A finite commutative ring with nonzero identity.
///
/// Elements are the integers `0..size()`; element `0` is always the additive
/// identity. Values are cheap to clone and immutable.
#[derive(Clone)]
pub struct FiniteRing(Arc<RingData>);

struct RingData {
    size: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    one: usize,
    units: Bits,
    labels: Vec<String>,
    name: String,
    origin: RingOrigin,
}

/// How a ring was built. Products remember their factors and quotients their
/// projection, so elements can be traced back through the constructors.
#[derive(Clone)]
pub enum RingOrigin {
    Table,
    Zn(usize),
    Product(FiniteRing, FiniteRing),
    Quotient { base: FiniteRing, projection: Vec<usize> },
}

impl FiniteRing {
    /// Builds a ring from raw tables, checking every ring axiom exhaustively.
    ///
    /// `add` and `mul` are row-major `size * size` tables. Element `0` must be
    /// the additive identity.
    pub fn from_tables(
        add: Vec<usize>,
        mul: Vec<usize>,
        one: usize,
        labels: Vec<String>,
        name: impl Into<String>,
    ) -> Result<FiniteRing> {
        Self::build(add, mul, one, labels, name.into(), RingOrigin::Table)
    }

    fn build(
        add: Vec<usize>,
        mul: Vec<usize>,
        one: usize,
        labels: Vec<String>,
        name: String,
        origin: RingOrigin,
    ) -> Result<FiniteRing> {
        let n = labels.len();
        if n < 2 {
            return Err(Error::RingAxiom(
                "the zero ring is excluded; need at least two elements".into(),
            ));
        }
        if n > MAX_CARRIER {
            return Err(Error::SizeBound { size: n, bound: MAX_CARRIER });
        }
        if add.len() != n * n || mul.len() != n * n {
            return Err(Error::RingAxiom("table dimensions do not match carrier".into()));
        }
        if add.iter().chain(mul.iter()).any(|&x| x >= n) || one >= n {
            return Err(Error::RingAxiom("table entry outside the carrier".into()));
        }
        let at = |t: &[usize], a: usize, b: usize| t[a * n + b];

        let mut neg = vec![0u8; n];
        for a in 0..n {
            if at(&add, 0, a) != a {
                return Err(Error::RingAxiom(format!("0 is not an additive identity at {a}")));
            }
            match (0..n).find(|&b| at(&add, a, b) == 0) {
                Some(b) => neg[a] = b as u8,
                None => return Err(Error::RingAxiom(format!("{a} has no additive inverse"))),
            }
            if at(&mul, one, a) != a {
                return Err(Error::RingAxiom(format!("1 is not a multiplicative identity at {a}")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                if at(&add, a, b) != at(&add, b, a) {
                    return Err(Error::RingAxiom(format!("addition not commutative at ({a},{b})")));
                }
                if at(&mul, a, b) != at(&mul, b, a) {
                    return Err(Error::RingAxiom(format!(
                        "multiplication not commutative at ({a},{b})"
                    )));
                }
                for c in 0..n {
                    if at(&add, at(&add, a, b), c) != at(&add, a, at(&add, b, c)) {
                        return Err(Error::RingAxiom(format!(
                            "addition not associative at ({a},{b},{c})"
                        )));
                    }
                    if at(&mul, at(&mul, a, b), c) != at(&mul, a, at(&mul, b, c)) {
                        return Err(Error::RingAxiom(format!(
                            "multiplication not associative at ({a},{b},{c})"
                        )));
                    }
                    if at(&mul, a, at(&add, b, c)) != at(&add, at(&mul, a, b), at(&mul, a, c)) {
                        return Err(Error::RingAxiom(format!(
                            "distributivity fails at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }

        let mut units = Bits::EMPTY;
        for u in 0..n {
            if (0..n).any(|v| at(&mul, u, v) == one) {
                units.insert(u);
            }
        }
        Ok(FiniteRing(Arc::new(RingData {
            size: n,
            add: add.into_iter().map(|x| x as u8).collect(),
            mul: mul.into_iter().map(|x| x as u8).collect(),
            neg,
            one,
            units,
            labels,
            name,
            origin,
        })))
    }

    /// The ring of integers modulo `n`. Element `i` is the residue `i`.
    pub fn zn(n: usize) -> Result<FiniteRing> {
        if n < 2 {
            return Err(Error::ModulusTooSmall(n));
        }
        if n > MAX_CARRIER {
            return Err(Error::SizeBound { size: n, bound: MAX_CARRIER });
        }
        let mut add = Vec::with_capacity(n * n);
        let mut mul = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                add.push((a + b) % n);
                mul.push((a * b) % n);
            }
        }
        let labels = (0..n).map(|i| i.to_string()).collect();
        Self::build(add, mul, 1, labels, format!("zn({n})"), RingOrigin::Zn(n))
    }

    /// Componentwise product `R1 x R2`. The pair `(a, b)` has id `a * |R2| + b`.
    pub fn product(r1: &FiniteRing, r2: &FiniteRing) -> Result<FiniteRing> {
        let (n1, n2) = (r1.size(), r2.size());
        if n1 < 2 || n2 < 2 {
            return Err(Error::DegenerateFactor);
        }
        let n = n1 * n2;
        if n > MAX_CARRIER {
            return Err(Error::SizeBound { size: n, bound: MAX_CARRIER });
        }
        let pair = |x: usize| (x / n2, x % n2);
        let mut add = Vec::with_capacity(n * n);
        let mut mul = Vec::with_capacity(n * n);
        for x in 0..n {
            let (a1, a2) = pair(x);
            for y in 0..n {
                let (b1, b2) = pair(y);
                add.push(r1.add(a1, b1) * n2 + r2.add(a2, b2));
                mul.push(r1.mul(a1, b1) * n2 + r2.mul(a2, b2));
            }
        }
        let labels = (0..n)
            .map(|x| {
                let (a, b) = pair(x);
                format!("({},{})", r1.label(a), r2.label(b))
            })
            .collect();
        let one = r1.one() * n2 + r2.one();
        Self::build(
            add,
            mul,
            one,
            labels,
            format!("prod({},{})", r1.name(), r2.name()),
            RingOrigin::Product(r1.clone(), r2.clone()),
        )
    }

    /// The quotient `R / I`. Cosets are numbered by their smallest member.
    pub fn quotient(&self, ideal: &Ideal) -> Result<FiniteRing> {
        if ideal.ring() != self {
            return Err(Error::RingMismatch);
        }
        if !ideal.is_proper() {
            return Err(Error::ImproperIdeal);
        }
        let (reps, projection) = cosets(self.size(), ideal.elements(), |a, b| self.add(a, b));
        let q = reps.len();
        let mut add = Vec::with_capacity(q * q);
        let mut mul = Vec::with_capacity(q * q);
        for &a in &reps {
            for &b in &reps {
                add.push(projection[self.add(a, b)]);
                mul.push(projection[self.mul(a, b)]);
            }
        }
        let labels = reps
            .iter()
            .map(|&r| {
                if ideal.elements().len() == 1 {
                    self.label(r).to_string()
                } else {
                    format!("[{}]", self.label(r))
                }
            })
            .collect();
        let gens = ideal.generators();
        let name = format!(
            "quot({},{{{}}})",
            self.name(),
            gens.iter().map(|&g| self.label(g)).collect::<Vec<_>>().join(",")
        );
        Self::build(
            add,
            mul,
            projection[self.one()],
            labels,
            name,
            RingOrigin::Quotient { base: self.clone(), projection },
        )
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.0.size
    }

    #[inline]
    pub fn zero(&self) -> usize {
        0
    }

    #[inline]
    pub fn one(&self) -> usize {
        self.0.one
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.0.add[a * self.0.size + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.0.mul[a * self.0.size + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.0.neg[a] as usize
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn mul3(&self, a: usize, b: usize, c: usize) -> usize {
        self.mul(self.mul(a, b), c)
    }

    pub fn pow(&self, a: usize, k: u32) -> usize {
        (0..k).fold(self.one(), |acc, _| self.mul(acc, a))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size()
    }

    pub fn all(&self) -> Bits {
        Bits::full(self.size())
    }

    pub fn units(&self) -> Bits {
        self.0.units
    }

    /// All non-invertible elements; always contains `0`.
    pub fn nonunits(&self) -> Bits {
        self.all().difference(self.0.units)
    }

    #[inline]
    pub fn is_unit(&self, a: usize) -> bool {
        self.0.units.contains(a)
    }

    pub fn label(&self, a: usize) -> &str {
        &self.0.labels[a]
    }

    /// Looks up an element by its display label, ignoring whitespace.
    pub fn element(&self, label: &str) -> Result<usize> {
        find_label(&self.0.labels, label)
    }

    /// The constructor expression this ring was built from.
    pub fn name(&self) -> &str {
        &self.0.name
    }

    pub fn origin(&self) -> &RingOrigin {
        &self.0.origin
    }

    /// The factors when this ring was built as a product.
    pub fn factors(&self) -> Option<(&FiniteRing, &FiniteRing)> {
        match &self.0.origin {
            RingOrigin::Product(a, b) => Some((a, b)),
            _ => None,
        }
    }

    /// Splits a product-ring element into its components.
    pub fn split(&self, x: usize) -> Option<(usize, usize)> {
        self.factors().map(|(_, r2)| (x / r2.size(), x % r2.size()))
    }

    /// Joins components into a product-ring element.
    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        self.factors().map(|(_, r2)| a * r2.size() + b)
    }

    /// Checks all ring axioms again by exhaustive scan.
    pub fn check_axioms(&self) -> Result<()> {
        let n = self.size();
        let add = (0..n * n).map(|i| self.0.add[i] as usize).collect();
        let mul = (0..n * n).map(|i| self.0.mul[i] as usize).collect();
        Self::from_tables(add, mul, self.one(), self.0.labels.clone(), self.name()).map(|_| ())
    }

    /// Additive subgroup generated by `gens`.
    pub fn additive_closure(&self, gens: Bits) -> Bits {
        additive_closure(gens, |a, b| self.add(a, b))
    }

    /// Every ideal of the ring, in canonical order (by size, then bit pattern).
    pub fn ideals(&self) -> Vec<Ideal> {
        let mut principal: Vec<Bits> = self
            .elements()
            .map(|a| Bits::from_iter(self.elements().map(|r| self.mul(r, a))))
            .collect();
        principal.sort_by_key(|b| (b.len(), b.0));
        principal.dedup();
        let all = closure_under_sums(principal, |x, y| self.additive_closure(x.union(y)));
        all.into_iter().map(|b| Ideal::from_bits_unchecked(self.clone(), b)).collect()
    }
}

impl PartialEq for FiniteRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.size == other.0.size
                && self.0.one == other.0.one
                && self.0.add == other.0.add
                && self.0.mul == other.0.mul)
    }
}

impl Eq for FiniteRing {}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (order {})", self.name(), self.size())
    }
}

pub(crate) fn find_label(labels: &[String], label: &str) -> Result<usize> {
    let want: String = label.chars().filter(|c| !c.is_whitespace()).collect();
    labels
        .iter()
        .position(|l| *l == want)
        .or_else(|| {
            // Cosets print as `[x]`; accept the bare representative too.
            labels.iter().position(|l| l.trim_start_matches('[').trim_end_matches(']') == want)
        })
        .ok_or(Error::UnknownElement(label.to_string()))
}

/// Subgroup of a finite abelian group generated by `gens`.
pub(crate) fn additive_closure(gens: Bits, add: impl Fn(usize, usize) -> usize) -> Bits {
    let mut cur = Bits::single(0);
    loop {
        let mut next = cur;
        for x in cur {
            for g in gens {
                next.insert(add(x, g));
            }
        }
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

/// Partitions `0..n` into cosets of the subgroup `sub`. Returns the sorted
/// coset representatives (smallest members) and the map element -> coset id.
pub(crate) fn cosets(
    n: usize,
    sub: Bits,
    add: impl Fn(usize, usize) -> usize,
) -> (Vec<usize>, Vec<usize>) {
    let mut projection = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for x in 0..n {
        if projection[x] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(x);
        for k in sub {
            projection[add(x, k)] = id;
        }
    }
    (reps, projection)
}

/// Closes a family of subgroups under pairwise sums until a fixed point, and
/// returns the result sorted canonically. `sum` computes the join of two members.
pub(crate) fn closure_under_sums(seed: Vec<Bits>, sum: impl Fn(Bits, Bits) -> Bits) -> Vec<Bits> {
    use std::collections::HashSet;
    let mut seen: HashSet<u128> = seed.iter().map(|b| b.0).collect();
    let mut all = seed.clone();
    let mut frontier = seed.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &f in &frontier {
            for &s in &seed {
                let j = sum(f, s);
                if seen.insert(j.0) {
                    next.push(j);
                    all.push(j);
                }
            }
        }
        frontier = next;
    }
    all.sort_by_key(|b| (b.len(), b.0));
    all
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zn_units() {
        let z2 = FiniteRing::zn(2).unwrap();
        assert_eq!(z2.size(), 2);
        assert_eq!(z2.units().to_vec(), vec![1]);
        let z8 = FiniteRing::zn(8).unwrap();
        assert_eq!(z8.units().to_vec(), vec![1, 3, 5, 7]);
        let z12 = FiniteRing::zn(12).unwrap();
        assert_eq!(z12.units().to_vec(), vec![1, 5, 7, 11]);
    }

    #[test]
    fn zn_rejects_small_modulus() {
        assert_eq!(FiniteRing::zn(1).unwrap_err(), Error::ModulusTooSmall(1));
        assert_eq!(FiniteRing::zn(0).unwrap_err(), Error::ModulusTooSmall(0));
    }

    #[test]
    fn product_units() {
        let z2 = FiniteRing::zn(2).unwrap();
        let z3 = FiniteRing::zn(3).unwrap();
        let r = FiniteRing::product(&z2, &z3).unwrap();
        assert_eq!(r.size(), 6);
        let units: Vec<_> = r.units().iter().map(|u| r.label(u).to_string()).collect();
        assert_eq!(units, vec!["(1,1)", "(1,2)"]);
        let r = FiniteRing::product(&z2, &z2).unwrap();
        let units: Vec<_> = r.units().iter().map(|u| r.label(u).to_string()).collect();
        assert_eq!(units, vec!["(1,1)"]);
    }

    #[test]
    fn order_one_ring_rejected() {
        let err = FiniteRing::from_tables(vec![0], vec![0], 0, vec!["0".into()], "zero");
        assert!(matches!(err, Err(Error::RingAxiom(_))));
    }

    #[test]
    fn quotients() {
        let z12 = FiniteRing::zn(12).unwrap();
        let i = Ideal::generated(&z12, &[4]);
        let q = z12.quotient(&i).unwrap();
        assert_eq!(q.size(), 4);
        // Z_12 / 4Z_12 behaves like Z_4: the class of 1 has additive order 4.
        let one = q.one();
        let mut x = one;
        let mut order = 1;
        while x != 0 {
            x = q.add(x, one);
            order += 1;
        }
        assert_eq!(order, 4);

        let zero = Ideal::zero(&z12);
        let same = z12.quotient(&zero).unwrap();
        assert_eq!(same, z12);

        let z8 = FiniteRing::zn(8).unwrap();
        assert_eq!(z8.quotient(&Ideal::generated(&z8, &[2])).unwrap().size(), 2);
        assert_eq!(z8.quotient(&Ideal::unit(&z8)).unwrap_err(), Error::ImproperIdeal);
    }

    #[test]
    fn bad_tables_rejected() {
        // Z_3 addition with a non-associative multiplication table.
        let add: Vec<usize> = (0..9).map(|i| (i / 3 + i % 3) % 3).collect();
        let mut mul: Vec<usize> = (0..9).map(|i| (i / 3 * (i % 3)) % 3).collect();
        mul[2 * 3 + 2] = 2;
        let labels = (0..3).map(|i| i.to_string()).collect();
        assert!(FiniteRing::from_tables(add, mul, 1, labels, "bad").is_err());
    }

    #[test]
    fn ideal_lattice_of_z12() {
        let z12 = FiniteRing::zn(12).unwrap();
        assert_eq!(z12.ideals().len(), 6);
        let z2 = FiniteRing::zn(2).unwrap();
        let r = FiniteRing::product(&z2, &z2).unwrap();
        assert_eq!(r.ideals().len(), 4);
    }
}
