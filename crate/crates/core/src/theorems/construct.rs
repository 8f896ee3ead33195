//! Certified constructions of 1-absorbing primary ideals in quasilocal
//! rings: `xM` for a prime element `x` with `xR ≠ M`, and `PM` for a prime
//! ideal `P`.

use serde::Serialize;

use crate::arith;
use crate::classify::{is_prime_ideal, Method, Verdict, Witness};
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::poly::{Monomial, Poly};
use crate::ring::{is_prime_element, is_quasilocal, Element, RingHandle};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConstructionKind {
    ElementTimesMaximal,
    PrimeTimesMaximal,
}

/// A constructed ideal with the verdicts its construction certifies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Construction {
    pub kind: ConstructionKind,
    pub ideal: Ideal,
    pub radical: Ideal,
    pub one_absorbing_primary: Verdict,
    /// Refuted with the pair `(x, m)`, `m ∈ M ∖ xR`; only for `xM`.
    pub primary: Option<Verdict>,
}

/// The maximal ideal of a quasilocal ring, with generators.
pub fn maximal_ideal(ring: &RingHandle) -> Result<(Ideal, Vec<Element>)> {
    if !is_quasilocal(ring) {
        return Err(Error::NotQuasilocal(ring.to_string()));
    }
    Ok(match ring {
        RingHandle::ZMod(n) => {
            let p = arith::smallest_prime_factor(*n).expect("n >= 2");
            (Ideal::modulus(ring, p)?, vec![Element::Residue(p)])
        }
        RingHandle::IntLoc(p) => (Ideal::valuation(ring, Some(1))?, vec![ring.from_i64(*p as i64)]),
        RingHandle::MonLoc => (
            Ideal::monomial(vec![Monomial::X, Monomial::Y]),
            vec![Element::poly(Poly::x()), Element::poly(Poly::y())],
        ),
        _ => unreachable!("quasilocal backends"),
    })
}

fn prime_element(ring: &RingHandle, x: &Element) -> Result<Ideal> {
    let not_prime = || Error::NotPrimeElement(x.to_string());
    match is_prime_element(ring, x) {
        Ok(v) if v.is_proven() => Ideal::principal(ring, x),
        Ok(_) | Err(Error::ZeroOrUnit(_)) => Err(not_prime()),
        Err(e) => Err(e),
    }
}

/// `xM` for a nonzero prime element `x` with `xR ≠ M`: 1-absorbing primary
/// and not primary.
pub fn construct_xm(ring: &RingHandle, x: &Element) -> Result<Construction> {
    ring.check(x)?;
    let (m, gens) = maximal_ideal(ring)?;
    let xr = prime_element(ring, x)?;
    if xr == m {
        return Err(Error::GeneratesMaximal(x.to_string()));
    }
    let ideal = xr.product(&m)?;
    let outside = gens
        .into_iter()
        .find(|g| !xr.contains(g).unwrap_or(true))
        .expect("M is not contained in xR");
    let primary = Verdict::refuted(Method::Certificate, Witness::new(vec![x.clone(), outside]));
    Ok(Construction {
        kind: ConstructionKind::ElementTimesMaximal,
        radical: ideal.radical(),
        ideal,
        one_absorbing_primary: Verdict::proven(Method::Certificate),
        primary: Some(primary),
    })
}

/// `PM` for a prime ideal `P`: 1-absorbing primary with radical `P`.
pub fn construct_pm(ring: &RingHandle, p: &Ideal) -> Result<Construction> {
    ring.expect_same(p.ring())?;
    let (m, _) = maximal_ideal(ring)?;
    if !is_prime_ideal(p)?.is_proven() {
        return Err(Error::NotPrimeIdeal(p.to_string()));
    }
    if !m.contains_ideal(p)? {
        return Err(Error::NotInMaximal(p.to_string()));
    }
    let ideal = p.product(&m)?;
    let radical = ideal.radical();
    assert_eq!(radical, *p, "radical of PM is P");
    Ok(Construction {
        kind: ConstructionKind::PrimeTimesMaximal,
        ideal,
        radical,
        one_absorbing_primary: Verdict::proven(Method::Certificate),
        primary: None,
    })
}
