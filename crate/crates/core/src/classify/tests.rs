use super::*;
use crate::ring::RingHandle;

fn ring(s: &str) -> RingHandle {
    s.parse().unwrap()
}

fn ideal(r: &str, s: &str) -> Ideal {
    Ideal::parse(&ring(r), s).unwrap()
}

fn show(v: &Verdict) -> String {
    v.to_string()
}

#[test]
fn integer_twelve() {
    let i = ideal("Z", "(12)");
    let r = classify_report(&RingHandle::Int, &i).unwrap();
    assert_eq!(r.radical, "(6)");
    assert_eq!(show(&r.properties.primary), "refuted (3, 4)");
    let one = &r.properties.one_absorbing_primary;
    assert_eq!(show(one), "refuted (13, 3, 4)");
    assert_eq!(one.witness.as_ref().unwrap().residues.as_deref(), Some(&["1".to_string(), "3".into(), "4".into()][..]));
    assert!(r.properties.two_absorbing_primary.is_proven());
    assert!(r.agreement);
    // The hand-picked triple (2, 2, 3) violates as well.
    let w = [2, 2, 3].map(Element::int);
    assert!(witness_violates(&i, Property::OneAbsorbingPrimary, &w).unwrap());
}

#[test]
fn small_integer_examples() {
    assert_eq!(show(&is_prime_ideal(&ideal("Z", "(6)")).unwrap()), "refuted (2, 3)");
    assert!(is_primary(&ideal("Z", "(9)")).unwrap().is_proven());
    assert!(is_one_absorbing_primary(&ideal("Z", "(8)")).unwrap().is_proven());
    assert!(is_two_absorbing_primary(&ideal("Z", "(30)")).unwrap().is_refuted());
    let r = classify_report(&RingHandle::Int, &ideal("Z", "(7)")).unwrap();
    assert!(r.verdicts().iter().all(|(_, v)| v.is_proven()));
}

#[test]
fn zmod_twelve_zero() {
    let v = is_one_absorbing_primary(&ideal("Z/12", "(0)")).unwrap();
    assert_eq!(show(&v), "refuted (2, 2, 3)");
    let two = ideal("Z/12", "(2)");
    assert!(is_prime_ideal(&two).unwrap().is_proven());
    assert!(is_maximal_ideal(&two).unwrap().is_proven());
    assert_eq!(show(&is_maximal_ideal(&ideal("Z/12", "(4)")).unwrap()), "refuted (2)");
}

#[test]
fn monomial_example() {
    let i = ideal("kxy", "x^2,x*y");
    let r = classify_report(&RingHandle::MonLoc, &i).unwrap();
    assert_eq!(r.radical, "x");
    assert_eq!(show(&r.properties.primary), "refuted (x, y)");
    let one = &r.properties.one_absorbing_primary;
    assert_eq!(one.status, Status::Proven);
    assert_eq!(one.method, Method::Certificate);
    assert!(one.bound.as_deref().unwrap().contains("degree 4"));
    assert!(is_prime_ideal(&ideal("kxy", "x")).unwrap().is_proven());
    assert!(is_maximal_ideal(&ideal("kxy", "x,y")).unwrap().is_proven());
}

#[test]
fn monomial_searches_find_counterexamples() {
    let v = is_one_absorbing_primary(&ideal("kxy", "x*y")).unwrap();
    assert!(v.is_refuted());
    assert!(witness_violates(&ideal("kxy", "x*y"), Property::OneAbsorbingPrimary, v.witness_elements()).unwrap());
    let v = is_two_absorbing(&ideal("kxy", "x^3")).unwrap();
    assert_eq!(show(&v), "refuted (x, x, x)");
}

#[test]
fn fast_path_examples() {
    assert!(fast_one_absorbing(&ideal("Z", "(125)")).unwrap().is_proven());
    assert!(fast_one_absorbing(&ideal("ZxZ", "(4)x(9)")).unwrap().is_refuted());
    assert!(fast_one_absorbing(&ideal("ZxZ", "(4)x(1)")).unwrap().is_proven());
    assert!(fast_one_absorbing(&ideal("Zloc:5", "p^3")).unwrap().is_proven());
    assert!(fast_one_absorbing(&ideal("Z/12", "(0)")).is_err());
}

#[test]
fn improper_ideals() {
    let whole = ideal("Z", "(1)");
    let v = is_prime_ideal(&whole).unwrap();
    assert!(v.is_refuted() && v.witness_elements().is_empty());
    assert!(matches!(is_primary(&whole), Err(Error::NotProper(_))));
    assert!(classify_report(&RingHandle::Int, &whole).is_err());
}

#[test]
fn zero_ideals_of_domains_are_certified() {
    for (r, lit) in [("Z", "(0)"), ("Zloc:3", "(0)"), ("Zinv:6", "(0)")] {
        let rep = classify_report(&ring(r), &ideal(r, lit)).unwrap();
        assert!(rep.properties.prime.is_proven());
        assert!(rep.properties.two_absorbing.is_proven());
        let m = &rep.properties.maximal;
        assert!(m.is_refuted());
        assert!(witness_violates(&ideal(r, lit), Property::Maximal, m.witness_elements()).unwrap());
    }
}

#[test]
fn local_ring_scans() {
    let i = ideal("Zloc:2", "p^3");
    assert!(is_one_absorbing_primary(&i).unwrap().is_proven());
    let v = is_two_absorbing(&i).unwrap();
    assert!(v.is_refuted());
    assert!(witness_violates(&i, Property::TwoAbsorbing, v.witness_elements()).unwrap());
}

fn check_family(r: &RingHandle, bounds: FamilyBounds) {
    let family = IdealFamily::new(r.clone(), bounds);
    for i in enumerate_ideals(&family).unwrap().into_iter().filter(|i| i.is_proper()) {
        let rep = Classifier::default().report(&i).unwrap();
        for (prop, (_, v)) in Property::ALL.into_iter().zip(rep.verdicts()) {
            if v.is_refuted() {
                assert!(witness_violates(&i, prop, v.witness_elements()).unwrap(), "{r} {i} {prop:?} {v}");
            }
        }
        let p = &rep.properties;
        // prime ⇒ primary ⇒ 1-absorbing primary ⇒ 2-absorbing primary; prime ⇒ 2-absorbing
        assert!(!p.prime.is_proven() || p.primary.is_proven());
        assert!(!p.primary.is_proven() || p.one_absorbing_primary.is_proven());
        assert!(!p.one_absorbing_primary.is_proven() || p.two_absorbing_primary.is_proven());
        assert!(!p.two_absorbing.is_proven() || p.two_absorbing_primary.is_proven());
        assert!(rep.agreement, "{r} {i}");
    }
}

#[test]
fn witnesses_reverify_across_backends() {
    check_family(&ring("Z/72"), FamilyBounds::Exhaustive);
    check_family(&ring("Z/6xZ/4"), FamilyBounds::Exhaustive);
    check_family(&ring("ZxZ"), FamilyBounds::Moduli(0..=6));
    check_family(&ring("Z/4xZ"), FamilyBounds::Moduli(0..=8));
    check_family(&RingHandle::Int, FamilyBounds::Moduli(0..=120));
    check_family(&ring("Zinv:10"), FamilyBounds::Moduli(0..=60));
    check_family(&ring("Zloc:3"), FamilyBounds::Exponents(5));
    check_family(&RingHandle::MonLoc, FamilyBounds::Degree(2));
}

#[test]
fn componentwise_rules_match_product_scans() {
    // Exhaustive scans on Z/n × Z/m against the componentwise closed forms.
    for n in 2..=8u64 {
        for m in 2..=8u64 {
            let r = RingHandle::prod(RingHandle::ZMod(n), RingHandle::ZMod(m)).unwrap();
            let family = IdealFamily::new(r.clone(), FamilyBounds::Exhaustive);
            for i in enumerate_ideals(&family).unwrap().into_iter().filter(|i| i.is_proper()) {
                let scanned = Prepared::new(Classifier::default(), &i).unwrap();
                let closed = Prepared { ideal: i.clone(), classifier: Classifier::default(), engine: Engine::Closed, cache: Default::default() };
                for prop in Property::ALL {
                    let a = scanned.decide(prop).unwrap();
                    let b = closed.decide(prop).unwrap();
                    assert_eq!(a.status, b.status, "{r} {i} {prop:?}");
                    if b.is_refuted() {
                        assert!(witness_violates(&i, prop, b.witness_elements()).unwrap(), "{r} {i} {prop:?} {b}");
                    }
                }
            }
        }
    }
}

#[test]
fn integer_products_with_zero_components() {
    let r = ring("ZxZ");
    let i = Ideal::parse(&r, "(0)x(1)").unwrap();
    let rep = Classifier::default().report(&i).unwrap();
    assert!(rep.properties.prime.is_proven());
    assert_eq!(rep.properties.one_absorbing_primary.method, Method::FastPath);
    let i = Ideal::parse(&r, "(0)x(6)").unwrap();
    let rep = Classifier::default().report(&i).unwrap();
    assert!(rep.properties.two_absorbing.is_refuted());
    assert!(rep.properties.two_absorbing_primary.is_refuted());
    let i = Ideal::parse(&r, "(0)x(5)").unwrap();
    assert!(is_two_absorbing(&i).unwrap().is_proven());
}

#[test]
fn witnesses_are_independent_of_thread_count() {
    let i = ideal("Z", "(360)");
    let run = |threads| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| Classifier::default().report(&i).unwrap())
    };
    assert_eq!(run(1), run(8));
}
