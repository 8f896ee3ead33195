use ideallab::theorems::{construct_pm, construct_xm};
use ideallab::transfer::{check_hom_hypotheses, image_ideal, localize, preimage_ideal, LocalizationSpec, RingHom};
use ideallab::{
    is_one_absorbing_primary, verify_theorem, Element, Error, Ideal, RingHandle, Scope, Status, TheoremId,
};
use proptest::prelude::*;

fn ring(s: &str) -> RingHandle {
    s.parse().unwrap()
}

fn ideal(r: &str, i: &str) -> Ideal {
    Ideal::parse(&ring(r), i).unwrap()
}

fn quotient(a: &str, b: &str) -> RingHom {
    RingHom::quotient(&ring(a), &ring(b)).unwrap()
}

fn is_prime_power(n: u64) -> bool {
    let p = (2..=n).find(|d| n % d == 0).unwrap();
    let mut m = n;
    while m % p == 0 {
        m /= p;
    }
    m == 1
}

#[test]
fn hypothesis_checker() {
    let h = check_hom_hypotheses(&quotient("Z", "Z/9"));
    assert!(h.identity_ok);
    assert!(!h.nonunit_preserving);
    assert_eq!(h.witness, Some(Element::int(2)));
    assert!(!h.notes.is_empty());

    let h = check_hom_hypotheses(&quotient("Z/8", "Z/4"));
    assert!(h.identity_ok && h.nonunit_preserving);

    for r in ["Z/12", "Z", "Z/4xZ/9", "Zloc:3", "kxy"] {
        let h = check_hom_hypotheses(&RingHom::identity(&ring(r)));
        assert!(h.identity_ok && h.nonunit_preserving, "{r}");
    }
}

#[test]
fn preimages_and_images() {
    assert_eq!(preimage_ideal(&quotient("Z/8", "Z/4"), &ideal("Z/4", "(2)")).unwrap(), ideal("Z/8", "(2)"));
    assert_eq!(preimage_ideal(&quotient("Z", "Z/12"), &ideal("Z/12", "(0)")).unwrap(), ideal("Z", "(12)"));
    let proj = RingHom::projection(&ring("Z/4xZ/9"), 1).unwrap();
    assert_eq!(preimage_ideal(&proj, &ideal("Z/4", "(2)")).unwrap(), ideal("Z/4xZ/9", "(2)x(1)"));

    assert_eq!(image_ideal(&quotient("Z/8", "Z/4"), &ideal("Z/8", "(2)")).unwrap(), ideal("Z/4", "(2)"));
    assert!(image_ideal(&quotient("Z", "Z/12"), &ideal("Z", "(24)")).is_err());
    assert_eq!(image_ideal(&quotient("Z", "Z/12"), &ideal("Z", "(6)")).unwrap(), ideal("Z/12", "(6)"));
}

#[test]
fn localizations() {
    let z = RingHandle::Int;
    let l = localize(&LocalizationSpec::powers_of(2).unwrap(), &Ideal::modulus(&z, 24).unwrap()).unwrap();
    assert_eq!(l.extended, ideal("Zinv:2", "(3)"));
    assert!(l.disjoint);
    let l = localize(&LocalizationSpec::powers_of(5).unwrap(), &Ideal::modulus(&z, 9).unwrap()).unwrap();
    assert_eq!(l.extended, ideal("Zinv:5", "(9)"));
    assert!(l.zdiv_disjoint);
    let l = localize(&LocalizationSpec::complement_of(5).unwrap(), &Ideal::modulus(&z, 25).unwrap()).unwrap();
    assert_eq!(l.extended, ideal("Zloc:5", "p^2"));
}

#[test]
fn constructions() {
    let kxy = ring("kxy");
    let c = construct_xm(&kxy, &kxy.parse_element("x").unwrap()).unwrap();
    assert_eq!(c.ideal, ideal("kxy", "x^2,x*y"));
    let primary = c.primary.expect("primary refutation");
    assert_eq!(primary.status, Status::Refuted);
    let w: Vec<String> = primary.witness_elements().iter().map(|e| e.to_string()).collect();
    assert_eq!(w, ["x", "y"]);

    let dvr = ring("Zloc:5");
    assert!(matches!(construct_xm(&dvr, &dvr.parse_element("p").unwrap()), Err(Error::GeneratesMaximal(_))));
    let z8 = ring("Z/8");
    assert!(matches!(construct_xm(&z8, &z8.parse_element("2").unwrap()), Err(Error::GeneratesMaximal(_))));

    assert_eq!(construct_pm(&kxy, &ideal("kxy", "x")).unwrap().ideal, ideal("kxy", "x^2,x*y"));
    let m2 = construct_pm(&kxy, &ideal("kxy", "x,y")).unwrap();
    assert_eq!(m2.ideal, ideal("kxy", "x^2,x*y,y^2"));
    assert!(m2.one_absorbing_primary.is_proven());
    let z9 = construct_pm(&ring("Z/9"), &ideal("Z/9", "(3)")).unwrap();
    assert_eq!(z9.ideal, ideal("Z/9", "(0)"));
    assert!(z9.one_absorbing_primary.is_proven());
}

#[test]
fn verifier_examples() {
    let off = Scope { zmod_max: 0, prod_max: 0, int_max: 0, monloc_degree: 0, mutation: None };
    let r = verify_theorem(TheoremId::PrincipalIdealDomains, &Scope { int_max: 300, ..off.clone() }).unwrap();
    assert!(r.passed());
    assert_eq!(r.instances_checked, 299);

    let r = verify_theorem(TheoremId::ProductExample, &Scope::default()).unwrap();
    assert!(r.passed());

    let r = verify_theorem(TheoremId::IdealTriples, &Scope { zmod_max: 12, ..off }).unwrap();
    assert!(r.passed());
    assert!(r.instances_checked > 0);

    assert!(matches!("T99".parse::<TheoremId>(), Err(Error::UnknownTheorem(_))));
    let r = verify_theorem(TheoremId::PrincipalIdealDomains, &Scope::default().with_max_n(1_000_000));
    assert!(matches!(r, Err(Error::ScopeTooLarge(_))));
}

proptest! {
    #[test]
    fn integer_moduli_are_one_absorbing_exactly_at_prime_powers(n in 2u64..600) {
        let v = is_one_absorbing_primary(&Ideal::modulus(&RingHandle::Int, n).unwrap()).unwrap();
        prop_assert_eq!(v.is_proven(), is_prime_power(n));
    }

    #[test]
    fn preimage_along_reduction_is_the_divisor(n in 2u64..120, k in 0usize..64) {
        let divisors: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
        let e = divisors[k % divisors.len()];
        let target = RingHandle::zmod(n).unwrap();
        let f = RingHom::quotient(&RingHandle::Int, &target).unwrap();
        let j = Ideal::modulus(&target, e % n).unwrap();
        prop_assert_eq!(preimage_ideal(&f, &j).unwrap(), Ideal::modulus(&RingHandle::Int, e).unwrap());
    }
}
