//! Ring-level predicates: quasilocal, divided, chained, and element-level
//! irreducibility and primality.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{residue::MAX_CLASSES, Element, ResidueSystem, RingHandle};
use crate::arith;
use crate::classify::{self, Method, Verdict, Witness};
use crate::error::{Error, Result};
use crate::ideal::{enumerate_ideals, FamilyBounds, Ideal, IdealFamily};

fn small_finite(ring: &RingHandle) -> Option<ResidueSystem> {
    match ring.cardinality() {
        Some(n) if n <= MAX_CLASSES as u64 => ResidueSystem::of_finite_ring(ring).ok(),
        _ => None,
    }
}

fn is_prime_power(n: u64) -> bool {
    arith::prime_power(n).is_some()
}

/// True iff the ring has exactly one maximal ideal. Finite rings are
/// scanned: every nonunit plus every unit must be a unit.
pub fn is_quasilocal(ring: &RingHandle) -> bool {
    if let Some(sys) = small_finite(ring) {
        let units: Vec<usize> = (0..sys.len()).filter(|&i| !sys.is_nonunit(i)).collect();
        return sys
            .nonunits()
            .ones()
            .all(|w| units.iter().all(|&u| !sys.is_nonunit(sys.add(w, u))));
    }
    match ring {
        RingHandle::ZMod(n) => is_prime_power(*n),
        RingHandle::IntLoc(_) | RingHandle::MonLoc => true,
        _ => false,
    }
}

/// Whether the nonunits of a finite ring are closed under addition;
/// `None` for rings too large or infinite.
pub fn nonunits_closed_under_addition(ring: &RingHandle) -> Option<bool> {
    let sys = small_finite(ring)?;
    let nonunits: Vec<usize> = sys.nonunits().ones().collect();
    Some(
        nonunits
            .iter()
            .all(|&a| nonunits.iter().all(|&b| sys.is_nonunit(sys.add(a, b)))),
    )
}

/// `x | y` in a finite ring, via `gcd(x, n) | y` per component.
pub(crate) fn divides(ring: &RingHandle, x: &Element, y: &Element) -> Result<bool> {
    ring.check(x)?;
    ring.check(y)?;
    Ok(match (ring, x, y) {
        (RingHandle::ZMod(n), Element::Residue(a), Element::Residue(b)) => b % arith::gcd(*a, *n) == 0,
        (RingHandle::Prod(l, r), Element::Pair(a1, a2), Element::Pair(b1, b2)) => {
            divides(l, a1, b1)? && divides(r, a2, b2)?
        }
        _ => return Err(Error::Unsupported(format!("divisibility test in {ring}"))),
    })
}

/// Divided: for every prime `P` and `x ∉ P`, `x` divides every element of `P`.
pub fn is_divided(ring: &RingHandle) -> bool {
    if let Some(sys) = small_finite(ring) {
        let family = IdealFamily::new(ring.clone(), FamilyBounds::Exhaustive);
        let ideals = enumerate_ideals(&family).expect("finite family");
        for p in ideals {
            if !classify::is_prime_ideal(&p).expect("finite scan").is_proven() {
                continue;
            }
            let members = sys.members(&p).expect("same ring");
            for x in (0..sys.len()).filter(|&i| !members.contains(i)) {
                for y in members.ones() {
                    if !divides(ring, sys.lift(x), sys.lift(y)).expect("finite ring") {
                        return false;
                    }
                }
            }
        }
        return true;
    }
    match ring {
        RingHandle::ZMod(n) => is_prime_power(*n),
        RingHandle::IntLoc(_) => true,
        _ => false,
    }
}

/// Chained: any two elements are comparable under divisibility.
pub fn is_chained(ring: &RingHandle) -> bool {
    if let Some(sys) = small_finite(ring) {
        for a in 0..sys.len() {
            for b in a + 1..sys.len() {
                let (x, y) = (sys.lift(a), sys.lift(b));
                if !divides(ring, x, y).expect("finite") && !divides(ring, y, x).expect("finite") {
                    return false;
                }
            }
        }
        return true;
    }
    match ring {
        RingHandle::ZMod(n) => is_prime_power(*n),
        RingHandle::IntLoc(_) => true,
        _ => false,
    }
}

fn require_nonzero_nonunit(ring: &RingHandle, x: &Element) -> Result<()> {
    if ring.is_zero(x)? || ring.is_unit(x)? {
        return Err(Error::ZeroOrUnit(x.to_string()));
    }
    Ok(())
}

// Refutes irreducibility of `x` by splitting off the prime `p` dividing its
// numerator, when the cofactor is still a nonunit.
fn split_rational(ring: &RingHandle, x: &Element, p: u64) -> Result<Verdict> {
    let Element::Rational(q) = x else { unreachable!("rational backend") };
    let rest = Element::Rational(q / BigRational::from_integer(BigInt::from(p)));
    let w = Witness::new(vec![ring.from_i64(p as i64), rest]);
    Ok(Verdict::refuted(Method::Oracle, w))
}

fn integer_irreducible(x: &BigInt) -> Result<Verdict> {
    let n = super::abs_u64(x)?;
    match arith::smallest_prime_factor(n) {
        Some(p) if p != n => {
            let rest = x / BigInt::from(p);
            Ok(Verdict::refuted(
                Method::Oracle,
                Witness::new(vec![Element::Integer(BigInt::from(p)), Element::Integer(rest)]),
            ))
        }
        _ => Ok(Verdict::proven(Method::Oracle)),
    }
}

/// Irreducible: every factorization `x = x₁x₂` has a unit factor.
/// Exact on every backend except `kxy`, where factorizations are searched
/// among bounded polynomial candidates.
pub fn is_irreducible_element(ring: &RingHandle, x: &Element) -> Result<Verdict> {
    require_nonzero_nonunit(ring, x)?;
    if let Some(sys) = small_finite(ring) {
        let target = sys.index_of(x)?;
        for a in sys.nonunits().ones() {
            for b in sys.nonunits().ones() {
                if sys.mul(a, b) == target {
                    let w = Witness::new(vec![sys.lift(a).clone(), sys.lift(b).clone()]);
                    return Ok(Verdict::refuted(Method::Oracle, w));
                }
            }
        }
        return Ok(Verdict::proven(Method::Oracle));
    }
    match (ring, x) {
        (RingHandle::ZMod(_), _) => {
            Err(Error::ScanTooLarge(format!("factorizations in {ring}"), MAX_CLASSES))
        }
        (RingHandle::Int, Element::Integer(n)) => integer_irreducible(n),
        (RingHandle::IntLoc(p), Element::Rational(q)) => {
            let num = super::abs_u64(q.numer())?;
            if arith::valuation(num, *p) == 1 {
                Ok(Verdict::proven(Method::Oracle))
            } else {
                split_rational(ring, x, *p)
            }
        }
        (RingHandle::IntInv(s), Element::Rational(q)) => {
            let core = arith::strip_factors_of(super::abs_u64(q.numer())?, *s);
            match arith::smallest_prime_factor(core) {
                Some(p) if p != core => split_rational(ring, x, p),
                _ => Ok(Verdict::proven(Method::Oracle)),
            }
        }
        (RingHandle::Prod(l, r), Element::Pair(a, b)) => {
            let (ua, ub) = (l.is_unit(a)?, r.is_unit(b)?);
            let (one_l, one_r) = (l.one(), r.one());
            let w = if !ua && !ub {
                vec![Element::pair((**a).clone(), one_r), Element::pair(one_l, (**b).clone())]
            } else if ua && r.is_zero(b)? {
                vec![Element::pair((**a).clone(), r.zero()), Element::pair(one_l, r.zero())]
            } else if ub && l.is_zero(a)? {
                vec![Element::pair(l.zero(), (**b).clone()), Element::pair(l.zero(), one_r)]
            } else if ua {
                let v = is_irreducible_element(r, b)?;
                let Some(wit) = v.witness.clone() else { return Ok(v) };
                let [b1, b2] = [&wit.elements[0], &wit.elements[1]];
                vec![Element::pair((**a).clone(), b1.clone()), Element::pair(one_l, b2.clone())]
            } else {
                let v = is_irreducible_element(l, a)?;
                let Some(wit) = v.witness.clone() else { return Ok(v) };
                let [a1, a2] = [&wit.elements[0], &wit.elements[1]];
                vec![Element::pair(a1.clone(), (**b).clone()), Element::pair(a2.clone(), one_r)]
            };
            Ok(Verdict::refuted(Method::Oracle, Witness::new(w)))
        }
        (RingHandle::MonLoc, Element::Fraction(f, g)) => {
            let bound = classify::MonomialBounds::default();
            for d in bound.candidates() {
                if let Some(q) = f.div_exact(&d) {
                    if !q.is_zero() && q.constant_term().is_zero() {
                        let w = vec![Element::poly(d.clone()), ring.mul(&Element::poly(q), &ring.inverse(&Element::poly(g.clone()))?)?];
                        return Ok(Verdict::refuted(Method::Oracle, Witness::new(w)));
                    }
                }
            }
            Ok(Verdict::unfalsified(format!("degree {}", bound.degree)))
        }
        _ => unreachable!("checked element"),
    }
}

/// Prime element: `xR` is a prime ideal.
pub fn is_prime_element(ring: &RingHandle, x: &Element) -> Result<Verdict> {
    require_nonzero_nonunit(ring, x)?;
    classify::is_prime_ideal(&Ideal::principal(ring, x)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::Status;

    fn ring(s: &str) -> RingHandle {
        s.parse().unwrap()
    }

    #[test]
    fn quasilocal_examples() {
        assert!(is_quasilocal(&ring("Z/8")));
        assert!(!is_quasilocal(&ring("Z/12")));
        assert!(!is_quasilocal(&RingHandle::Int));
        assert!(is_quasilocal(&ring("Zloc:5")));
        assert!(is_quasilocal(&RingHandle::MonLoc));
        assert!(!is_quasilocal(&ring("Z/4xZ/9")));
        assert!(!is_quasilocal(&ring("Zinv:2")));
    }

    #[test]
    fn quasilocal_matches_nonunit_closure() {
        let mut rings: Vec<RingHandle> = (2..=64).map(RingHandle::ZMod).collect();
        rings.push(ring("Z/2xZ/2"));
        rings.push(ring("Z/4xZ/3"));
        for r in rings {
            assert_eq!(Some(is_quasilocal(&r)), nonunits_closed_under_addition(&r), "{r}");
        }
    }

    #[test]
    fn divided_and_chained_examples() {
        assert!(is_divided(&ring("Z/8")) && is_chained(&ring("Z/8")));
        assert!(!is_divided(&ring("Z/12")) && !is_chained(&ring("Z/12")));
        assert!(is_divided(&ring("Zloc:5")) && is_chained(&ring("Zloc:5")));
        assert!(!is_divided(&RingHandle::Int) && !is_chained(&RingHandle::Int));
        for n in 2..=40u64 {
            let r = RingHandle::ZMod(n);
            assert_eq!(is_chained(&r), is_prime_power(n), "{n}");
            // chained ⇒ divided ⇒ quasilocal
            assert!(!is_chained(&r) || is_divided(&r));
            assert!(!is_divided(&r) || is_quasilocal(&r));
        }
    }

    #[test]
    fn divisibility_rule_matches_search() {
        for n in [12u64, 18, 16, 30] {
            let r = RingHandle::ZMod(n);
            for a in 0..n {
                for b in 0..n {
                    let brute = (0..n).any(|z| arith::mul_mod(a, z, n) == b);
                    let (x, y) = (Element::Residue(a), Element::Residue(b));
                    assert_eq!(divides(&r, &x, &y).unwrap(), brute);
                }
            }
        }
    }

    #[test]
    fn irreducible_examples() {
        let z = RingHandle::Int;
        assert!(is_irreducible_element(&z, &Element::int(7)).unwrap().is_proven());
        assert_eq!(is_irreducible_element(&z, &Element::int(-12)).unwrap().to_string(), "refuted (2, -6)");
        let z12 = ring("Z/12");
        assert_eq!(is_irreducible_element(&z12, &Element::Residue(4)).unwrap().to_string(), "refuted (2, 2)");
        let kxy = RingHandle::MonLoc;
        let v = is_irreducible_element(&kxy, &kxy.parse_element("x").unwrap()).unwrap();
        assert_eq!(v.status, Status::Unfalsified);
        assert_eq!(v.bound.as_deref(), Some("degree 4"));
        let v = is_irreducible_element(&kxy, &kxy.parse_element("x^2 + x*y").unwrap()).unwrap();
        assert_eq!(v.to_string(), "refuted (x, x + y)");
        let loc = ring("Zloc:3");
        assert!(is_irreducible_element(&loc, &loc.parse_element("6/5").unwrap()).unwrap().is_proven());
        assert!(is_irreducible_element(&loc, &loc.parse_element("9").unwrap()).unwrap().is_refuted());
        let inv = ring("Zinv:2");
        assert!(is_irreducible_element(&inv, &inv.parse_element("12").unwrap()).unwrap().is_proven());
        assert_eq!(is_irreducible_element(&inv, &inv.parse_element("15/2").unwrap()).unwrap().to_string(), "refuted (3, 5/2)");
        assert!(matches!(is_irreducible_element(&z, &Element::int(1)), Err(Error::ZeroOrUnit(_))));
        assert!(is_irreducible_element(&z, &Element::int(0)).is_err());
    }

    #[test]
    fn product_irreducibles_match_exhaustive_scan() {
        let r = ring("Z/4xZ/9");
        let sys = ResidueSystem::of_finite_ring(&r).unwrap();
        let zz = ring("ZxZ");
        for i in sys.nonunits().ones().filter(|&i| i != 0) {
            let x = sys.lift(i);
            let exhaustive = is_irreducible_element(&r, x).unwrap();
            if let Some(w) = &exhaustive.witness {
                assert_eq!(r.mul(&w.elements[0], &w.elements[1]).unwrap(), *x);
            }
        }
        let v = is_irreducible_element(&zz, &zz.parse_element("(1, 6)").unwrap()).unwrap();
        assert_eq!(v.to_string(), "refuted ((1,2), (1,3))");
        assert!(is_irreducible_element(&zz, &zz.parse_element("(-1, 5)").unwrap()).unwrap().is_proven());
        assert!(is_irreducible_element(&zz, &zz.parse_element("(2, 3)").unwrap()).unwrap().is_refuted());
    }

    #[test]
    fn prime_element_examples() {
        assert!(is_prime_element(&RingHandle::Int, &Element::int(5)).unwrap().is_proven());
        assert!(is_prime_element(&ring("Z/12"), &Element::Residue(2)).unwrap().is_proven());
        let kxy = RingHandle::MonLoc;
        assert!(is_prime_element(&kxy, &kxy.parse_element("x").unwrap()).unwrap().is_proven());
    }

    #[test]
    fn prime_elements_of_local_rings_are_irreducible() {
        for n in 2..=128u64 {
            let r = RingHandle::ZMod(n);
            if !is_quasilocal(&r) {
                continue;
            }
            for x in 1..n {
                let x = Element::Residue(x);
                if r.is_unit(&x).unwrap() {
                    continue;
                }
                if is_prime_element(&r, &x).unwrap().is_proven() {
                    assert!(is_irreducible_element(&r, &x).unwrap().is_proven(), "{n} {x}");
                }
            }
        }
    }
}
