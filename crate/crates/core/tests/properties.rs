use absorb_core::classify::{is_classical_1abs, is_phi_1abs_prime, is_phi_classical_1abs, witness_falsifies_classical};
use absorb_core::construct::{localize, MultSet};
use absorb_core::phi::{phi_leq, Phi};
use absorb_core::primes::{is_classical_prime, is_prime_submodule};
use absorb_core::{Bits, FiniteModule, FiniteRing, Submodule};
use proptest::prelude::*;

fn small_module() -> impl Strategy<Value = FiniteModule> {
    prop_oneof![
        (2usize..=24).prop_map(|n| FiniteModule::regular(&FiniteRing::zn(n).unwrap())),
        (2usize..=4, 2usize..=4).prop_map(|(a, b)| {
            let r = FiniteRing::product(&FiniteRing::zn(a).unwrap(), &FiniteRing::zn(b).unwrap()).unwrap();
            FiniteModule::regular(&r)
        }),
        (2usize..=3, 2usize..=2).prop_map(|(p, k)| FiniteModule::free(&FiniteRing::zn(p).unwrap(), k).unwrap()),
    ]
}

fn proper(m: &FiniteModule) -> Vec<Submodule> {
    m.submodules().unwrap().into_iter().filter(|s| s.is_proper()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn constructed_rings_satisfy_axioms(a in 2usize..=6, b in 2usize..=4, g in 0usize..6) {
        let r = FiniteRing::product(&FiniteRing::zn(a).unwrap(), &FiniteRing::zn(b).unwrap()).unwrap();
        prop_assert!(r.check_axioms().is_ok());
        let i = absorb_core::Ideal::generated(&r, &[g % r.size()]);
        if i.is_proper() {
            prop_assert!(r.quotient(&i).unwrap().check_axioms().is_ok());
        }
    }

    #[test]
    fn catalog_chain_is_pointwise(m in small_module()) {
        let cat = Phi::standard_catalog();
        for w in cat.windows(2) {
            prop_assert!(phi_leq(&w[0], &w[1], &m).unwrap(), "{} <= {}", w[0].name(), w[1].name());
        }
    }

    #[test]
    fn monotone_and_hierarchical(m in small_module()) {
        let cat = Phi::standard_catalog();
        for n in proper(&m) {
            let verdicts: Vec<bool> =
                cat.iter().map(|p| is_phi_classical_1abs(&n, p).unwrap().verdict).collect();
            for w in verdicts.windows(2) {
                prop_assert!(!w[0] || w[1]);
            }
            for (p, &classical) in cat.iter().zip(&verdicts) {
                if is_phi_1abs_prime(&n, p).unwrap().verdict {
                    prop_assert!(classical);
                }
            }
            if is_prime_submodule(&n).unwrap() {
                prop_assert!(is_classical_prime(&n).unwrap());
            }
            if is_classical_prime(&n).unwrap() {
                prop_assert!(is_classical_1abs(&n).unwrap().verdict);
            }
        }
    }

    #[test]
    fn witnesses_revalidate(m in small_module()) {
        for n in proper(&m) {
            for p in Phi::standard_catalog() {
                let r = is_phi_classical_1abs(&n, &p).unwrap();
                prop_assert_eq!(r.verdict, r.witness.is_none());
                if let Some(w) = r.witness {
                    prop_assert!(witness_falsifies_classical(&n, &p.eval(&n).unwrap(), w));
                }
            }
        }
    }

    #[test]
    fn cyclic_modules_collapse_definitions(n in 2usize..=16, g in 0usize..16) {
        let r = FiniteRing::zn(n).unwrap();
        let i = absorb_core::Ideal::generated(&r, &[g % n]);
        prop_assume!(i.is_proper());
        let m = FiniteModule::cyclic(&r, &i).unwrap();
        for s in proper(&m) {
            for p in Phi::standard_catalog() {
                prop_assert_eq!(
                    is_phi_1abs_prime(&s, &p).unwrap().verdict,
                    is_phi_classical_1abs(&s, &p).unwrap().verdict
                );
            }
        }
    }

    #[test]
    fn localization_inverts_s(n in 2usize..=24, s in 0usize..24) {
        let r = FiniteRing::zn(n).unwrap();
        let m = FiniteModule::regular(&r);
        let set = MultSet::generated(&r, &[s % n]);
        let loc = localize(&m, &set).unwrap();
        prop_assert_eq!(loc.is_degenerate(), set.contains_zero());
        prop_assert!(loc.units_act_bijectively());
        if let Some(t) = loc.target() {
            // Localizing again at the image of S changes nothing.
            let gens: Vec<usize> = set.elements().iter().map(|x| loc.apply_ring(x).unwrap()).collect();
            let again = localize(t, &MultSet::generated(t.ring(), &gens)).unwrap();
            prop_assert_eq!(again.target().unwrap().size(), t.size());
            prop_assert_eq!(again.torsion(), Bits::single(0));
        }
    }
}

#[test]
fn empty_phi_is_not_zero_phi() {
    let m = FiniteModule::regular(&FiniteRing::zn(8).unwrap());
    let zero = Submodule::zero(&m);
    assert!(!is_phi_classical_1abs(&zero, &Phi::empty()).unwrap().verdict);
    assert!(is_phi_classical_1abs(&zero, &Phi::zero()).unwrap().verdict);
}
