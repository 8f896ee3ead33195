//! Decision procedures for prime, maximal, primary, 1-absorbing primary,
//! 2-absorbing primary and 2-absorbing ideals.
//!
//! Residue-decidable ideals are scanned exhaustively (`Method::Oracle`).
//! Ideals without a usable residue system fall back to closed forms from
//! factorization or componentwise product structure (`Method::FastPath`).
//! Monomial ideals of `kxy` use exact generator criteria, certificates and
//! bounded searches.

mod closed;
mod monomial;
mod report;
pub(crate) mod scan;
mod verdict;

use std::sync::OnceLock;

pub use monomial::MonomialBounds;
pub use report::{ClassificationReport, Properties};
pub use verdict::{Method, Status, Verdict, Witness};

use crate::arith;
use crate::error::{Error, Result};
use crate::ideal::{enumerate_ideals, FamilyBounds, Ideal, IdealFamily};
use crate::poly::{Monomial, Poly};
use crate::ring::{Element, RingHandle};
use monomial::MonomialSearch;
use scan::ScanTables;

/// The ideal classes decided here.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Property {
    Prime,
    Maximal,
    Primary,
    OneAbsorbingPrimary,
    TwoAbsorbingPrimary,
    TwoAbsorbing,
}

impl Property {
    pub const ALL: [Property; 6] = [
        Property::Prime,
        Property::Maximal,
        Property::Primary,
        Property::OneAbsorbingPrimary,
        Property::TwoAbsorbingPrimary,
        Property::TwoAbsorbing,
    ];
}

/// Decision procedures with configurable `kxy` search bounds.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Classifier {
    pub bounds: MonomialBounds,
}

enum Engine {
    Improper,
    DomainZero,
    Monomial(MonomialSearch),
    Scan(ScanTables),
    Closed,
}

/// An ideal with whatever tables its decisions need, built once and shared
/// across the six properties.
pub(crate) struct Prepared {
    ideal: Ideal,
    classifier: Classifier,
    engine: Engine,
    cache: [OnceLock<Verdict>; 6],
}

fn is_domain_zero(ideal: &Ideal) -> bool {
    matches!(ideal.ring(), RingHandle::Int | RingHandle::IntInv(_) | RingHandle::IntLoc(_))
        && ideal.is_zero_ideal()
}

fn poly(m: Monomial) -> Element {
    Element::poly(Poly::monomial(m))
}

fn prop_index(p: Property) -> usize {
    Property::ALL.iter().position(|q| *q == p).expect("listed")
}

impl Prepared {
    pub fn new(classifier: Classifier, ideal: &Ideal) -> Result<Self> {
        let engine = if !ideal.is_proper() {
            Engine::Improper
        } else if *ideal.ring() == RingHandle::MonLoc {
            Engine::Monomial(MonomialSearch::new(ideal, classifier.bounds))
        } else if is_domain_zero(ideal) {
            Engine::DomainZero
        } else {
            match ScanTables::new(ideal) {
                Ok(t) => Engine::Scan(t),
                Err(Error::ScanTooLarge(..) | Error::Unsupported(_) | Error::Overflow(_)) => Engine::Closed,
                Err(e) => return Err(e),
            }
        };
        Ok(Prepared { ideal: ideal.clone(), classifier, engine, cache: Default::default() })
    }

    pub fn decide(&self, prop: Property) -> Result<Verdict> {
        if let Some(v) = self.cache[prop_index(prop)].get() {
            return Ok(v.clone());
        }
        let v = self.compute(prop)?;
        Ok(self.cache[prop_index(prop)].get_or_init(|| v).clone())
    }

    fn compute(&self, prop: Property) -> Result<Verdict> {
        let ring = self.ideal.ring();
        match &self.engine {
            Engine::Improper => match prop {
                Property::Prime | Property::Maximal => {
                    Ok(Verdict::refuted(Method::Oracle, Witness::new(vec![])))
                }
                _ => Err(Error::NotProper(self.ideal.to_string())),
            },
            Engine::DomainZero => Ok(closed::domain_zero(ring, prop)),
            Engine::Monomial(search) => self.monomial(search, prop),
            Engine::Scan(t) => Ok(match prop {
                Property::Maximal => self.maximal()?,
                _ => {
                    let found = match prop {
                        Property::Prime => t.prime_witness().map(|w| w.to_vec()),
                        Property::Primary => t.primary_witness().map(|w| w.to_vec()),
                        Property::OneAbsorbingPrimary => t.one_absorbing_witness().map(|w| w.to_vec()),
                        Property::TwoAbsorbingPrimary => {
                            t.two_absorbing_primary_witness().map(|w| w.to_vec())
                        }
                        Property::TwoAbsorbing => t.two_absorbing_witness().map(|w| w.to_vec()),
                        Property::Maximal => unreachable!(),
                    };
                    match found {
                        Some(idx) => Verdict::refuted(Method::Oracle, t.witness(&idx)),
                        None => Verdict::proven(Method::Oracle),
                    }
                }
            }),
            Engine::Closed => self.closed(prop),
        }
    }

    fn monomial(&self, search: &MonomialSearch, prop: Property) -> Result<Verdict> {
        let gens = self.ideal.monomial_generators().expect("kxy");
        Ok(match prop {
            Property::Prime => monomial::prime(gens),
            Property::Maximal => {
                if gens == [Monomial::X, Monomial::Y] {
                    Verdict::proven(Method::Oracle)
                } else {
                    let v = if self.ideal.contains(&poly(Monomial::X))? { Monomial::Y } else { Monomial::X };
                    Verdict::refuted(Method::Oracle, Witness::new(vec![poly(v)]))
                }
            }
            Property::Primary => monomial::primary(gens),
            Property::OneAbsorbingPrimary => {
                let certified = self.decide(Property::Primary)?.is_proven()
                    || monomial::is_prime_times_maximal(&self.ideal);
                let searched = search.one_absorbing();
                if certified && !searched.is_refuted() {
                    Verdict::proven(Method::Certificate).with_bound(self.classifier.bounds.describe())
                } else {
                    searched
                }
            }
            Property::TwoAbsorbingPrimary => {
                if self.decide(Property::OneAbsorbingPrimary)?.is_proven() {
                    Verdict::proven(Method::Certificate)
                } else {
                    search.two_absorbing_primary()
                }
            }
            Property::TwoAbsorbing => {
                if self.decide(Property::Prime)?.is_proven() {
                    Verdict::proven(Method::Certificate)
                } else {
                    search.two_absorbing()
                }
            }
        })
    }

    fn maximal(&self) -> Result<Verdict> {
        let ring = self.ideal.ring();
        if !ring.is_finite() {
            return self.closed(Property::Maximal);
        }
        let family = IdealFamily::new(ring.clone(), FamilyBounds::Exhaustive);
        for j in enumerate_ideals(&family)? {
            if j != self.ideal && j.is_proper() && j.contains_ideal(&self.ideal)? {
                return Ok(Verdict::refuted(Method::Oracle, Witness::new(vec![generator(&j)])));
            }
        }
        Ok(Verdict::proven(Method::Oracle))
    }

    fn closed(&self, prop: Property) -> Result<Verdict> {
        let ring = self.ideal.ring();
        match ring {
            RingHandle::Int | RingHandle::IntInv(_) | RingHandle::ZMod(_) => {
                let m = self.ideal.generator().expect("modulus ideal");
                let m = match ring {
                    RingHandle::ZMod(n) if m == *n => *n,
                    _ => m,
                };
                Ok(closed::principal(ring, m, prop))
            }
            RingHandle::IntLoc(p) => {
                let k = self.ideal.exponent().flatten().expect("nonzero proper");
                Ok(closed::valuation(ring, *p, k, prop))
            }
            RingHandle::Prod(..) => self.componentwise(prop),
            RingHandle::MonLoc => unreachable!("monomial engine"),
        }
    }

    fn component(&self, ideal: &Ideal, prop: Property) -> Result<Verdict> {
        Prepared::new(self.classifier, ideal)?.decide(prop)
    }

    /// Ideals of `R₁ × R₂` are `I₁ × I₂`. A property holding for a product
    /// with one whole factor reduces to the other factor; with both factors
    /// proper, prime/primary/maximal/1-absorbing primary fail, 2-absorbing
    /// primary needs both factors primary and 2-absorbing needs both prime.
    fn componentwise(&self, prop: Property) -> Result<Verdict> {
        let ring = self.ideal.ring();
        let (l, r) = ring.components().expect("product");
        let (i1, i2) = self.ideal.components().expect("product");
        let lift_right = |e: &Element| Element::pair(l.one(), e.clone());
        let lift_left = |e: &Element| Element::pair(e.clone(), r.one());
        let one_zero = Element::pair(l.one(), r.zero());
        let zero_one = Element::pair(l.zero(), r.one());
        let done = |w: Vec<Element>| Ok(Verdict::refuted(Method::FastPath, Witness::new(w)));

        if !i1.is_proper() || !i2.is_proper() {
            let left_whole = !i1.is_proper();
            let (inner, lift): (&Ideal, &dyn Fn(&Element) -> Element) =
                if left_whole { (&i2, &lift_right) } else { (&i1, &lift_left) };
            let base = if prop == Property::OneAbsorbingPrimary { Property::Primary } else { prop };
            let v = self.component(inner, base)?;
            if v.is_proven() {
                return Ok(Verdict::proven(Method::FastPath));
            }
            let w = v.witness_elements();
            if prop == Property::OneAbsorbingPrimary {
                let pad = if left_whole { zero_one } else { one_zero };
                return done(vec![pad, lift(&w[0]), lift(&w[1])]);
            }
            return done(w.iter().map(lift).collect());
        }

        match prop {
            Property::Prime | Property::Primary => done(vec![one_zero, zero_one]),
            Property::Maximal => done(vec![one_zero]),
            Property::OneAbsorbingPrimary => done(vec![one_zero.clone(), one_zero, zero_one]),
            Property::TwoAbsorbingPrimary | Property::TwoAbsorbing => {
                let base = if prop == Property::TwoAbsorbing { Property::Prime } else { Property::Primary };
                let v1 = self.component(&i1, base)?;
                if !v1.is_proven() {
                    let w = v1.witness_elements();
                    return done(vec![lift_left(&w[0]), one_zero, lift_left(&w[1])]);
                }
                let v2 = self.component(&i2, base)?;
                if !v2.is_proven() {
                    let w = v2.witness_elements();
                    return done(vec![lift_right(&w[0]), zero_one, lift_right(&w[1])]);
                }
                Ok(Verdict::proven(Method::FastPath))
            }
        }
    }
}

/// A generator of an ideal of a finite ring.
fn generator(ideal: &Ideal) -> Element {
    match ideal.ring() {
        RingHandle::ZMod(n) => {
            let d = ideal.generator().expect("modulus");
            Element::Residue(d % n)
        }
        RingHandle::Prod(..) => {
            let (a, b) = ideal.components().expect("pair");
            Element::pair(generator(&a), generator(&b))
        }
        _ => unreachable!("finite ring"),
    }
}

impl Classifier {
    pub fn new(bounds: MonomialBounds) -> Self {
        Classifier { bounds }
    }

    pub fn decide(&self, ideal: &Ideal, prop: Property) -> Result<Verdict> {
        Prepared::new(*self, ideal)?.decide(prop)
    }

    /// Theorem-backed shortcut for 1-absorbing primary on `Z`, `Z[1/s]`,
    /// `Zloc:p` and products: prime-power moduli, every proper ideal of a
    /// DVR, and the componentwise form `I₁ × R₂` / `R₁ × I₂` with the
    /// proper factor primary.
    pub fn fast_one_absorbing(&self, ideal: &Ideal) -> Result<Verdict> {
        ideal.require_proper()?;
        let ring = ideal.ring();
        match ring {
            RingHandle::Int | RingHandle::IntInv(_) => match ideal.generator().expect("modulus") {
                0 => Ok(Verdict::proven(Method::FastPath)),
                m => Ok(closed::principal(ring, m, Property::OneAbsorbingPrimary)),
            },
            RingHandle::IntLoc(_) => Ok(Verdict::proven(Method::FastPath)),
            RingHandle::Prod(..) => {
                let prepared = Prepared {
                    ideal: ideal.clone(),
                    classifier: *self,
                    engine: Engine::Closed,
                    cache: Default::default(),
                };
                prepared.componentwise(Property::OneAbsorbingPrimary)
            }
            _ => Err(Error::Unsupported(format!("fast path on {ring}"))),
        }
    }

    pub fn report(&self, ideal: &Ideal) -> Result<ClassificationReport> {
        ideal.require_proper()?;
        let prepared = Prepared::new(*self, ideal)?;
        let mut verdicts = Vec::with_capacity(6);
        for prop in Property::ALL {
            verdicts.push(prepared.decide(prop)?);
        }
        let one_abs = &verdicts[prop_index(Property::OneAbsorbingPrimary)];
        let agreement = match self.fast_one_absorbing(ideal) {
            Ok(fast) if one_abs.method == Method::Oracle => fast.status == one_abs.status,
            _ => true,
        };
        Ok(ClassificationReport::new(ideal, verdicts, agreement))
    }
}

pub fn is_prime_ideal(ideal: &Ideal) -> Result<Verdict> {
    Classifier::default().decide(ideal, Property::Prime)
}

pub fn is_maximal_ideal(ideal: &Ideal) -> Result<Verdict> {
    Classifier::default().decide(ideal, Property::Maximal)
}

pub fn is_primary(ideal: &Ideal) -> Result<Verdict> {
    ideal.require_proper()?;
    Classifier::default().decide(ideal, Property::Primary)
}

pub fn is_one_absorbing_primary(ideal: &Ideal) -> Result<Verdict> {
    Classifier::default().decide(ideal, Property::OneAbsorbingPrimary)
}

pub fn is_two_absorbing_primary(ideal: &Ideal) -> Result<Verdict> {
    Classifier::default().decide(ideal, Property::TwoAbsorbingPrimary)
}

pub fn is_two_absorbing(ideal: &Ideal) -> Result<Verdict> {
    Classifier::default().decide(ideal, Property::TwoAbsorbing)
}

pub fn fast_one_absorbing(ideal: &Ideal) -> Result<Verdict> {
    Classifier::default().fast_one_absorbing(ideal)
}

pub fn classify_report(ring: &RingHandle, ideal: &Ideal) -> Result<ClassificationReport> {
    ring.expect_same(ideal.ring())?;
    Classifier::default().report(ideal)
}

/// Re-checks a refutation witness against raw membership and radical
/// membership. `true` means the witness really violates `prop`.
pub fn witness_violates(ideal: &Ideal, prop: Property, w: &[Element]) -> Result<bool> {
    let ring = ideal.ring();
    if !ideal.is_proper() {
        return Ok(matches!(prop, Property::Prime | Property::Maximal) && w.is_empty());
    }
    let inside = |x: &Element| ideal.contains(x);
    let rad = |x: &Element| ideal.radical_contains(x);
    let mul = |a: &Element, b: &Element| ring.mul(a, b);
    Ok(match (prop, w) {
        (Property::Prime, [a, b]) => inside(&mul(a, b)?)? && !inside(a)? && !inside(b)?,
        (Property::Maximal, [a]) => {
            !inside(a)? && ideal.sum(&Ideal::principal(ring, a)?)?.is_proper()
        }
        (Property::Primary, [a, b]) => inside(&mul(a, b)?)? && !inside(a)? && !rad(b)?,
        (Property::OneAbsorbingPrimary, [a, b, c]) => {
            let ab = mul(a, b)?;
            !ring.is_unit(a)?
                && !ring.is_unit(b)?
                && !ring.is_unit(c)?
                && inside(&mul(&ab, c)?)?
                && !inside(&ab)?
                && !rad(c)?
        }
        (Property::TwoAbsorbingPrimary, [a, b, c]) => {
            let ab = mul(a, b)?;
            inside(&mul(&ab, c)?)? && !inside(&ab)? && !rad(&mul(a, c)?)? && !rad(&mul(b, c)?)?
        }
        (Property::TwoAbsorbing, [a, b, c]) => {
            let ab = mul(a, b)?;
            inside(&mul(&ab, c)?)? && !inside(&ab)? && !inside(&mul(a, c)?)? && !inside(&mul(b, c)?)?
        }
        _ => false,
    })
}

/// Whether `n` is a prime power `p^k`, `k ≥ 1`.
pub fn is_prime_power(n: u64) -> bool {
    arith::prime_power(n).is_some()
}

#[cfg(test)]
mod tests;
