//! The two constructions over every admissible input in scope, and exact
//! reproductions of the worked examples.

use super::construct::{construct_pm, construct_xm};
use super::general::plane_polynomials;
use super::lattice::{prime_power_chain, SMALL_PRIMES};
use super::tally::{witness_strings, Tally};
use super::Scope;
use crate::classify::{is_prime_ideal, witness_violates, Classifier, Method, Property, Status};
use crate::error::{Error, Result};
use crate::ideal::{enumerate_ideals, FamilyBounds, Ideal, IdealFamily};
use crate::poly::Poly;
use crate::ring::{Element, RingHandle};

const LOCAL_ELEMENTS: i64 = 30;

const ELEMENT_RINGS_MAX: u64 = 125;

fn quasilocal_rings() -> Vec<RingHandle> {
    let mut out: Vec<RingHandle> = prime_power_chain().into_iter().map(RingHandle::ZMod).collect();
    out.extend(SMALL_PRIMES.iter().map(|&p| RingHandle::IntLoc(p)));
    out.push(RingHandle::MonLoc);
    out
}

fn element_candidates(ring: &RingHandle) -> Result<Vec<Element>> {
    Ok(match ring {
        RingHandle::ZMod(n) => (0..*n).map(Element::Residue).collect(),
        RingHandle::IntLoc(_) => (0..=LOCAL_ELEMENTS).map(|k| ring.from_i64(k)).collect(),
        RingHandle::MonLoc => {
            let unit = ring.add(&ring.one(), &Element::poly(Poly::x()))?;
            let mut out = plane_polynomials(2);
            for f in plane_polynomials(1) {
                out.push(ring.mul(&f, &unit)?);
            }
            let mut seen = std::collections::HashSet::new();
            out.retain(|e| seen.insert(e.to_string()));
            out
        }
        _ => unreachable!("quasilocal backends"),
    })
}

fn rejected(e: &Error) -> bool {
    matches!(e, Error::NotPrimeElement(_) | Error::GeneratesMaximal(_) | Error::Unsupported(_))
}

/// Every admissible `x` yields `xM` that the classifier does not refute as
/// 1-absorbing primary and does refute as primary, with the certified pair
/// violating primariness.
pub(super) fn element_times_maximal(scope: &Scope) -> Result<(String, Tally)> {
    let classifier = scope.classifier();
    let mut t = Tally::default();
    let mut built = Vec::new();
    let mut refused = 0;
    let rings = quasilocal_rings().into_iter().filter(|r| r.cardinality().is_none_or(|n| n <= ELEMENT_RINGS_MAX));
    for ring in rings {
        for x in element_candidates(&ring)? {
            let c = match construct_xm(&ring, &x) {
                Ok(c) => c,
                Err(e) if rejected(&e) => {
                    refused += 1;
                    continue;
                }
                Err(e) => return Err(e),
            };
            t.instances += 1;
            built.push(format!("{ring} {x} -> {}", c.ideal));
            let at = || format!("{ring}: xM for x = {x} is {}", c.ideal);
            let one = classifier.decide(&c.ideal, Property::OneAbsorbingPrimary)?;
            t.expect(!one.is_refuted(), || format!("{} but not 1-absorbing primary", at()), || witness_strings(&one));
            let certified = c.primary.clone().expect("xM carries a primary refutation");
            let primary = classifier.decide(&c.ideal, Property::Primary)?;
            let violates = witness_violates(&c.ideal, Property::Primary, certified.witness_elements())?;
            t.expect(
                primary.is_refuted() && violates,
                || format!("{}: primary {:?}, certified pair violates {violates}", at(), primary.status),
                || witness_strings(&certified),
            );
        }
    }
    t.note(format!("{} constructions: {}", built.len(), built.join("; ")));
    t.note(format!("{refused} candidates rejected: not prime, or xR equals the maximal ideal"));
    let text = "x in Z/p^k (p in {2,3,5}, p^k <= 125), x = 0..30 in Zloc:p (p in {2,3,5,7}), kxy polynomials of degree <= 2";
    Ok((text.into(), t))
}

fn prime_candidates(ring: &RingHandle) -> Result<Vec<Ideal>> {
    let bounds = match ring {
        RingHandle::ZMod(_) => FamilyBounds::Exhaustive,
        RingHandle::IntLoc(_) => FamilyBounds::Exponents(2),
        RingHandle::MonLoc => FamilyBounds::Degree(2),
        _ => unreachable!("quasilocal backends"),
    };
    let mut out = enumerate_ideals(&IdealFamily::new(ring.clone(), bounds))?;
    if *ring == RingHandle::MonLoc {
        out.insert(0, Ideal::zero(ring));
    }
    let mut primes = Vec::new();
    for i in out {
        if i.is_proper() && is_prime_ideal(&i)?.is_proven() {
            primes.push(i);
        }
    }
    Ok(primes)
}

/// `PM` is 1-absorbing primary with radical `P` for every prime `P`.
pub(super) fn prime_times_maximal(scope: &Scope) -> Result<(String, Tally)> {
    let classifier = scope.classifier();
    let mut t = Tally::default();
    for ring in quasilocal_rings() {
        for p in prime_candidates(&ring)? {
            t.instances += 1;
            let c = construct_pm(&ring, &p)?;
            let one = classifier.decide(&c.ideal, Property::OneAbsorbingPrimary)?;
            t.expect(
                !one.is_refuted() && c.ideal.radical() == p,
                || format!("{ring}: PM for P = {p} is {} with radical {}", c.ideal, c.ideal.radical()),
                || witness_strings(&one),
            );
        }
    }
    let text = "prime ideals of Z/p^k (p in {2,3,5}, k <= 5), Zloc:p (p in {2,3,5,7}) and kxy";
    Ok((text.into(), t))
}

fn check_text(t: &mut Tally, what: &str, got: String, want: &str) {
    t.instances += 1;
    t.expect(got == want, || format!("{what}: got {got}, expected {want}"), Vec::new);
}

fn parsed(ring: &str, ideal: &str) -> Result<(RingHandle, Ideal)> {
    let ring: RingHandle = ring.parse()?;
    let ideal = Ideal::parse(&ring, ideal)?;
    Ok((ring, ideal))
}

pub(super) fn monomial_example(scope: &Scope) -> Result<(String, Tally)> {
    let classifier = Classifier::new(crate::classify::MonomialBounds {
        degree: scope.monloc_degree.max(4),
        ..Default::default()
    });
    let mut t = Tally::default();
    let (ring, i) = parsed("kxy", "x^2,x*y")?;
    check_text(&mut t, "radical", i.radical().to_string(), "x");
    let primary = classifier.decide(&i, Property::Primary)?;
    check_text(&mut t, "primary", primary.to_string(), "refuted (x, y)");
    t.instances += 1;
    t.expect(witness_violates(&i, Property::Primary, primary.witness_elements())?, || "primary witness does not violate".into(), Vec::new);
    let one = classifier.decide(&i, Property::OneAbsorbingPrimary)?;
    t.instances += 1;
    t.expect(
        one.status == Status::Proven && one.method == Method::Certificate,
        || format!("1-absorbing primary: {one}"),
        || witness_strings(&one),
    );
    let x = ring.parse_element("x")?;
    check_text(&mut t, "xM", construct_xm(&ring, &x)?.ideal.to_string(), "x^2,x*y");
    t.note(format!("1-absorbing primary {one} by certificate, no counterexample in the bounded search"));
    Ok(("x^2,x*y in kxy".into(), t))
}

pub(super) fn integer_example(_: &Scope) -> Result<(String, Tally)> {
    let classifier = Classifier::default();
    let mut t = Tally::default();
    let (_, i) = parsed("Z", "(12)")?;
    check_text(&mut t, "radical", i.radical().to_string(), "(6)");
    check_text(&mut t, "primary", classifier.decide(&i, Property::Primary)?.to_string(), "refuted (3, 4)");
    let one = classifier.decide(&i, Property::OneAbsorbingPrimary)?;
    check_text(&mut t, "1-absorbing primary", one.to_string(), "refuted (13, 3, 4)");
    let residues = one.witness.as_ref().and_then(|w| w.residues.clone()).unwrap_or_default();
    check_text(&mut t, "witness residues", residues.join(","), "1,3,4");
    t.instances += 1;
    let hand = [2, 2, 3].map(Element::int);
    t.expect(
        witness_violates(&i, Property::OneAbsorbingPrimary, &hand)?,
        || "the triple (2, 2, 3) does not violate".into(),
        Vec::new,
    );
    let two = classifier.decide(&i, Property::TwoAbsorbingPrimary)?;
    check_text(&mut t, "2-absorbing primary", format!("{:?}", two.status), "Proven");
    Ok(("12Z in Z".into(), t))
}

pub(super) fn product_example(_: &Scope) -> Result<(String, Tally)> {
    let classifier = Classifier::default();
    let mut t = Tally::default();
    let (_, i1) = parsed("ZxZ", "(4)x(1)")?;
    let (_, i2) = parsed("ZxZ", "(1)x(9)")?;
    let meet = i1.intersect(&i2)?;
    check_text(&mut t, "intersection", meet.to_string(), "(4)x(9)");
    for (name, i, want) in [("4Z x Z", &i1, Status::Proven), ("Z x 9Z", &i2, Status::Proven), ("4Z x 9Z", &meet, Status::Refuted)] {
        let oracle = classifier.decide(i, Property::OneAbsorbingPrimary)?;
        let fast = classifier.fast_one_absorbing(i)?;
        t.instances += 1;
        t.expect(
            oracle.status == want && fast.status == want,
            || format!("{name}: oracle {:?}, fast path {:?}, expected {want:?}", oracle.status, fast.status),
            || witness_strings(&oracle),
        );
        if oracle.is_refuted() {
            t.instances += 1;
            t.expect(
                witness_violates(i, Property::OneAbsorbingPrimary, oracle.witness_elements())?,
                || format!("{name}: witness does not violate"),
                || witness_strings(&oracle),
            );
        }
    }
    Ok(("4Z x Z, Z x 9Z and their intersection in ZxZ".into(), t))
}
