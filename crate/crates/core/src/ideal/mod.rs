//! Ideals of every backend in canonical form, with membership, radical,
//! colon, arithmetic, containment and the set `Z_I(R)` of zero divisors
//! modulo an ideal.
//!
//! Representations:
//! - `Z/n`: the divisor `d | n` generating `dZ/nZ` (`d = n` is the zero ideal).
//! - `Z` and `Z[1/s]`: a nonnegative generator `m` (`0` zero, `1` whole ring);
//!   for `Z[1/s]` the generator carries no prime factor of `s`.
//! - `Zloc:p`: the exponent `k` of `p^k`, or `None` for the zero ideal.
//! - `kxy`: a minimal set of monomial generators (`{1}` whole, `{}` zero).
//! - products: a pair of component ideals.

mod family;
mod parse;

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

pub use family::{enumerate_ideals, FamilyBounds, IdealFamily};

use crate::arith;
use crate::error::{Error, Result};
use crate::poly::{Monomial, Poly};
use crate::ring::{Element, ResidueSystem, RingHandle};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) enum Repr {
    Modulus(u64),
    Valuation(Option<u32>),
    Monomials(Vec<Monomial>),
    Pair(Box<Repr>, Box<Repr>),
}

/// An ideal of a concrete ring, in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ideal {
    ring: RingHandle,
    repr: Repr,
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort();
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(g)) {
            out.push(g);
        }
    }
    out
}

fn residue_u64(x: &BigInt, m: u64) -> u64 {
    x.mod_floor(&BigInt::from(m)).to_u64().expect("residue fits")
}

fn big_valuation(x: &BigInt, p: u64) -> u32 {
    debug_assert!(!x.is_zero());
    let p = BigInt::from(p);
    let mut x = x.clone();
    let mut v = 0;
    while (&x % &p).is_zero() {
        x /= &p;
        v += 1;
    }
    v
}

/// `x = m * u` with `m` a monomial and `u` a polynomial with nonzero
/// constant term; returns `m`. `None` for zero or non-monomial `x`.
pub(crate) fn monomial_part(f: &Poly) -> Option<Monomial> {
    let m = f.monomial_gcd()?;
    let rest = f.div_monomial(m)?;
    (!rest.constant_term().is_zero()).then_some(m)
}

impl Ideal {
    // ----- construction -----

    /// The ideal generated by the integer `m` in `Z/n`, `Z` or `Z[1/s]`.
    pub fn modulus(ring: &RingHandle, m: u64) -> Result<Ideal> {
        let repr = match ring {
            RingHandle::ZMod(n) => Repr::Modulus(if m == 0 { *n } else { arith::gcd(m, *n) }),
            RingHandle::Int => Repr::Modulus(m),
            RingHandle::IntInv(s) => Repr::Modulus(arith::strip_factors_of(m, *s)),
            RingHandle::IntLoc(p) => Repr::Valuation((m != 0).then(|| arith::valuation(m, *p))),
            _ => return Err(Error::Unsupported(format!("modulus ideal in {ring}"))),
        };
        Ok(Ideal { ring: ring.clone(), repr })
    }

    /// `p^k` in `Zloc:p`; `None` is the zero ideal.
    pub fn valuation(ring: &RingHandle, k: Option<u32>) -> Result<Ideal> {
        match ring {
            RingHandle::IntLoc(_) => Ok(Ideal { ring: ring.clone(), repr: Repr::Valuation(k) }),
            _ => Err(Error::Unsupported(format!("valuation ideal in {ring}"))),
        }
    }

    /// Monomial ideal of `kxy` generated by `gens` (minimalized).
    pub fn monomial(gens: Vec<Monomial>) -> Ideal {
        Ideal { ring: RingHandle::MonLoc, repr: Repr::Monomials(minimalize(gens)) }
    }

    pub fn pair(ring: &RingHandle, left: Ideal, right: Ideal) -> Result<Ideal> {
        let (l, r) = ring
            .components()
            .ok_or_else(|| Error::Unsupported(format!("pair ideal in {ring}")))?;
        l.expect_same(&left.ring)?;
        r.expect_same(&right.ring)?;
        Ok(Ideal {
            ring: ring.clone(),
            repr: Repr::Pair(Box::new(left.repr), Box::new(right.repr)),
        })
    }

    pub fn zero(ring: &RingHandle) -> Ideal {
        match ring {
            RingHandle::MonLoc => Ideal::monomial(vec![]),
            RingHandle::IntLoc(_) => Ideal { ring: ring.clone(), repr: Repr::Valuation(None) },
            RingHandle::Prod(l, r) => Ideal::pair(ring, Ideal::zero(l), Ideal::zero(r)).expect("components"),
            _ => Ideal::modulus(ring, 0).expect("modulus backend"),
        }
    }

    pub fn whole(ring: &RingHandle) -> Ideal {
        match ring {
            RingHandle::MonLoc => Ideal::monomial(vec![Monomial::ONE]),
            RingHandle::IntLoc(_) => Ideal { ring: ring.clone(), repr: Repr::Valuation(Some(0)) },
            RingHandle::Prod(l, r) => Ideal::pair(ring, Ideal::whole(l), Ideal::whole(r)).expect("components"),
            _ => Ideal::modulus(ring, 1).expect("modulus backend"),
        }
    }

    /// The principal ideal `xR`.
    pub fn principal(ring: &RingHandle, x: &Element) -> Result<Ideal> {
        ring.check(x)?;
        match (ring, x) {
            (RingHandle::ZMod(_), Element::Residue(r)) => Ideal::modulus(ring, *r),
            (RingHandle::Int, Element::Integer(n)) => {
                Ideal::modulus(ring, crate::ring::abs_u64(n)?)
            }
            (RingHandle::IntInv(_), Element::Rational(q)) => {
                Ideal::modulus(ring, crate::ring::abs_u64(q.numer())?)
            }
            (RingHandle::IntLoc(p), Element::Rational(q)) => {
                let k = (!q.is_zero()).then(|| big_valuation(q.numer(), *p));
                Ideal::valuation(ring, k)
            }
            (RingHandle::Prod(l, r), Element::Pair(a, b)) => {
                Ideal::pair(ring, Ideal::principal(l, a)?, Ideal::principal(r, b)?)
            }
            (RingHandle::MonLoc, Element::Fraction(f, _)) => {
                if f.is_zero() {
                    return Ok(Ideal::zero(ring));
                }
                let m = monomial_part(f).ok_or_else(|| {
                    Error::Unsupported(format!("principal ideal of {x} is not monomial"))
                })?;
                Ok(Ideal::monomial(vec![m]))
            }
            _ => unreachable!("checked element"),
        }
    }

    /// Parses an ideal literal: `(12)`, `(4)x(9)`, `x^2,x*y`, `p^3`, `(0)`.
    pub fn parse(ring: &RingHandle, s: &str) -> Result<Ideal> {
        parse::parse_ideal(ring, s)
    }

    // ----- accessors -----

    pub fn ring(&self) -> &RingHandle {
        &self.ring
    }

    /// Generator for `Z/n`, `Z`, `Z[1/s]` ideals.
    pub fn generator(&self) -> Option<u64> {
        match self.repr {
            Repr::Modulus(m) => Some(m),
            _ => None,
        }
    }

    /// Exponent `k` of `p^k` in `Zloc:p`; `Some(None)` is the zero ideal.
    pub fn exponent(&self) -> Option<Option<u32>> {
        match self.repr {
            Repr::Valuation(k) => Some(k),
            _ => None,
        }
    }

    pub fn monomial_generators(&self) -> Option<&[Monomial]> {
        match &self.repr {
            Repr::Monomials(g) => Some(g),
            _ => None,
        }
    }

    pub fn components(&self) -> Option<(Ideal, Ideal)> {
        match (&self.ring, &self.repr) {
            (RingHandle::Prod(l, r), Repr::Pair(a, b)) => Some((
                Ideal { ring: (**l).clone(), repr: (**a).clone() },
                Ideal { ring: (**r).clone(), repr: (**b).clone() },
            )),
            _ => None,
        }
    }

    pub fn is_proper(&self) -> bool {
        match (&self.ring, &self.repr) {
            (RingHandle::Prod(..), _) => {
                let (a, b) = self.components().expect("pair");
                a.is_proper() || b.is_proper()
            }
            (RingHandle::ZMod(_), Repr::Modulus(d)) => *d != 1,
            (_, Repr::Modulus(m)) => *m != 1,
            (_, Repr::Valuation(k)) => *k != Some(0),
            (_, Repr::Monomials(g)) => !g.contains(&Monomial::ONE),
            _ => unreachable!(),
        }
    }

    pub fn is_zero_ideal(&self) -> bool {
        *self == Ideal::zero(&self.ring)
    }

    pub fn require_proper(&self) -> Result<()> {
        if self.is_proper() {
            Ok(())
        } else {
            Err(Error::NotProper(self.to_string()))
        }
    }

    fn same_ring(&self, other: &Ideal) -> Result<()> {
        self.ring.expect_same(&other.ring)
    }

    fn rebuild(&self, repr: Repr) -> Ideal {
        Ideal { ring: self.ring.clone(), repr }
    }

    fn zip(&self, other: &Ideal, f: impl Fn(&Ideal, &Ideal) -> Result<Ideal>) -> Result<Ideal> {
        let (a1, b1) = self.components().expect("pair");
        let (a2, b2) = other.components().expect("pair");
        Ideal::pair(&self.ring, f(&a1, &a2)?, f(&b1, &b2)?)
    }

    fn map_pair(&self, f: impl Fn(&Ideal) -> Result<Ideal>) -> Result<Ideal> {
        let (a, b) = self.components().expect("pair");
        Ideal::pair(&self.ring, f(&a)?, f(&b)?)
    }

    // ----- membership -----

    /// Exact membership `x ∈ I`.
    pub fn contains(&self, x: &Element) -> Result<bool> {
        self.ring.check(x)?;
        Ok(match (&self.ring, &self.repr, x) {
            (RingHandle::ZMod(_), Repr::Modulus(d), Element::Residue(r)) => r % d == 0,
            (RingHandle::Int, Repr::Modulus(m), Element::Integer(n)) => match m {
                0 => n.is_zero(),
                m => (n % BigInt::from(*m)).is_zero(),
            },
            (RingHandle::IntInv(_), Repr::Modulus(m), Element::Rational(q)) => match m {
                0 => q.is_zero(),
                m => (q.numer() % BigInt::from(*m)).is_zero(),
            },
            (RingHandle::IntLoc(p), Repr::Valuation(k), Element::Rational(q)) => match (k, q.is_zero()) {
                (_, true) => true,
                (None, false) => false,
                (Some(k), false) => big_valuation(q.numer(), *p) >= *k,
            },
            (RingHandle::Prod(..), Repr::Pair(..), Element::Pair(a, b)) => {
                let (ia, ib) = self.components().expect("pair");
                ia.contains(a)? && ib.contains(b)?
            }
            (RingHandle::MonLoc, Repr::Monomials(gens), Element::Fraction(f, _)) => {
                f.support().all(|t| gens.iter().any(|g| g.divides(t)))
            }
            _ => unreachable!("checked element"),
        })
    }

    /// `J ⊆ I` for `J = other`.
    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        self.same_ring(other)?;
        Ok(match (&self.ring, &self.repr, &other.repr) {
            (RingHandle::Prod(..), ..) => {
                let (a1, b1) = self.components().expect("pair");
                let (a2, b2) = other.components().expect("pair");
                a1.contains_ideal(&a2)? && b1.contains_ideal(&b2)?
            }
            (RingHandle::ZMod(_), Repr::Modulus(d), Repr::Modulus(e)) => e % d == 0,
            (_, Repr::Modulus(m), Repr::Modulus(j)) => match (m, j) {
                (_, 0) => true,
                (0, _) => false,
                (m, j) => j % m == 0,
            },
            (_, Repr::Valuation(k), Repr::Valuation(j)) => match (k, j) {
                (_, None) => true,
                (None, Some(_)) => false,
                (Some(k), Some(j)) => j >= k,
            },
            (_, Repr::Monomials(gi), Repr::Monomials(gj)) => {
                gj.iter().all(|t| gi.iter().any(|g| g.divides(*t)))
            }
            _ => unreachable!("same ring"),
        })
    }

    // ----- radical and colon -----

    /// `√I` in closed form.
    pub fn radical(&self) -> Ideal {
        match &self.repr {
            Repr::Modulus(m) => self.rebuild(Repr::Modulus(arith::squarefree_kernel(*m))),
            Repr::Valuation(k) => self.rebuild(Repr::Valuation(k.map(|k| k.min(1)))),
            Repr::Monomials(g) => Ideal::monomial(g.iter().map(|m| m.squarefree()).collect()),
            Repr::Pair(..) => self.map_pair(|c| Ok(c.radical())).expect("pair"),
        }
    }

    pub fn radical_contains(&self, x: &Element) -> Result<bool> {
        self.radical().contains(x)
    }

    /// `(I : c) = { x | cx ∈ I }`. On `kxy` the divisor must be a monomial
    /// times a unit.
    pub fn colon(&self, c: &Element) -> Result<Ideal> {
        self.ring.check(c)?;
        Ok(match (&self.ring, &self.repr, c) {
            (RingHandle::ZMod(_), Repr::Modulus(d), Element::Residue(r)) => {
                self.rebuild(Repr::Modulus(d / arith::gcd(*d, *r)))
            }
            (RingHandle::Int, Repr::Modulus(m), Element::Integer(n)) => {
                self.rebuild(Repr::Modulus(colon_modulus(*m, n)))
            }
            (RingHandle::IntInv(_), Repr::Modulus(m), Element::Rational(q)) => {
                self.rebuild(Repr::Modulus(colon_modulus(*m, q.numer())))
            }
            (RingHandle::IntLoc(p), Repr::Valuation(k), Element::Rational(q)) => {
                let k = if q.is_zero() {
                    Some(0)
                } else {
                    k.map(|k| k.saturating_sub(big_valuation(q.numer(), *p)))
                };
                self.rebuild(Repr::Valuation(k))
            }
            (RingHandle::Prod(l, r), Repr::Pair(..), Element::Pair(a, b)) => {
                let (ia, ib) = self.components().expect("pair");
                let _ = (l, r);
                Ideal::pair(&self.ring, ia.colon(a)?, ib.colon(b)?)?
            }
            (RingHandle::MonLoc, Repr::Monomials(gens), Element::Fraction(f, _)) => {
                if f.is_zero() {
                    return Ok(Ideal::whole(&self.ring));
                }
                let m = monomial_part(f).ok_or_else(|| Error::UnsupportedColon(c.to_string()))?;
                Ideal::monomial(gens.iter().map(|g| g.colon(m)).collect())
            }
            _ => unreachable!("checked element"),
        })
    }

    // ----- arithmetic -----

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        Ok(match (&self.ring, &self.repr, &other.repr) {
            (RingHandle::Prod(..), ..) => self.zip(other, |a, b| a.product(b))?,
            (RingHandle::ZMod(n), Repr::Modulus(d), Repr::Modulus(e)) => {
                let prod = arith::mul_mod(*d, *e, *n);
                self.rebuild(Repr::Modulus(if prod == 0 { *n } else { arith::gcd(prod, *n) }))
            }
            (_, Repr::Modulus(m), Repr::Modulus(j)) => self.rebuild(Repr::Modulus(
                m.checked_mul(*j)
                    .ok_or_else(|| Error::Overflow(format!("({m})({j})")))?,
            )),
            (_, Repr::Valuation(k), Repr::Valuation(j)) => {
                self.rebuild(Repr::Valuation(k.zip(*j).map(|(k, j)| k + j)))
            }
            (_, Repr::Monomials(a), Repr::Monomials(b)) => {
                Ideal::monomial(a.iter().flat_map(|g| b.iter().map(move |h| *g * *h)).collect())
            }
            _ => unreachable!("same ring"),
        })
    }

    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        Ok(match (&self.ring, &self.repr, &other.repr) {
            (RingHandle::Prod(..), ..) => self.zip(other, |a, b| a.intersect(b))?,
            (_, Repr::Modulus(m), Repr::Modulus(j)) => self.rebuild(Repr::Modulus(
                arith::lcm(*m, *j).ok_or_else(|| Error::Overflow(format!("lcm({m}, {j})")))?,
            )),
            (_, Repr::Valuation(k), Repr::Valuation(j)) => {
                self.rebuild(Repr::Valuation(k.zip(*j).map(|(k, j)| k.max(j))))
            }
            (_, Repr::Monomials(a), Repr::Monomials(b)) => {
                Ideal::monomial(a.iter().flat_map(|g| b.iter().map(move |h| g.lcm(*h))).collect())
            }
            _ => unreachable!("same ring"),
        })
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        Ok(match (&self.ring, &self.repr, &other.repr) {
            (RingHandle::Prod(..), ..) => self.zip(other, |a, b| a.sum(b))?,
            (_, Repr::Modulus(m), Repr::Modulus(j)) => self.rebuild(Repr::Modulus(arith::gcd(*m, *j))),
            (_, Repr::Valuation(k), Repr::Valuation(j)) => self.rebuild(Repr::Valuation(match (k, j) {
                (None, x) | (x, None) => *x,
                (Some(k), Some(j)) => Some(*k.min(j)),
            })),
            (_, Repr::Monomials(a), Repr::Monomials(b)) => {
                Ideal::monomial(a.iter().chain(b.iter()).copied().collect())
            }
            _ => unreachable!("same ring"),
        })
    }

    /// `I^n`, `n ≥ 1`.
    pub fn power(&self, n: u32) -> Result<Ideal> {
        if n == 0 {
            return Err(Error::Unsupported("ideal power needs n >= 1".into()));
        }
        let mut acc = self.clone();
        for _ in 1..n {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    // ----- zero divisors modulo I -----

    /// `r ∈ Z_I(R) = { r | rs ∈ I for some s ∉ I }`.
    pub fn in_zdiv(&self, r: &Element) -> Result<bool> {
        self.require_proper()?;
        self.ring.check(r)?;
        if self.ring.is_finite() {
            let sys = ResidueSystem::of_finite_ring(&self.ring)?;
            for s in 0..sys.len() {
                let s = sys.lift(s);
                if !self.contains(s)? && self.contains(&self.ring.mul(r, s)?)? {
                    return Ok(true);
                }
            }
            return Ok(false);
        }
        Ok(match (&self.ring, &self.repr, r) {
            (RingHandle::Int, Repr::Modulus(m), Element::Integer(n)) => match m {
                0 => n.is_zero(),
                m => arith::gcd(residue_u64(n, *m), *m) > 1,
            },
            (RingHandle::IntInv(_), Repr::Modulus(m), Element::Rational(q)) => match m {
                0 => q.is_zero(),
                m => arith::gcd(residue_u64(q.numer(), *m), *m) > 1,
            },
            (RingHandle::IntLoc(p), Repr::Valuation(k), Element::Rational(q)) => match k {
                None => q.is_zero(),
                Some(_) => q.is_zero() || big_valuation(q.numer(), *p) >= 1,
            },
            (RingHandle::Prod(..), Repr::Pair(..), Element::Pair(a, b)) => {
                let (ia, ib) = self.components().expect("pair");
                (ia.is_proper() && ia.in_zdiv(a)?) || (ib.is_proper() && ib.in_zdiv(b)?)
            }
            (RingHandle::MonLoc, ..) => {
                return Err(Error::Unsupported("Z_I(R) on kxy".into()));
            }
            _ => unreachable!("checked element"),
        })
    }
}

fn colon_modulus(m: u64, c: &BigInt) -> u64 {
    if m == 0 {
        return if c.is_zero() { 1 } else { 0 };
    }
    m / arith::gcd(m, residue_u64(c, m))
}

impl Repr {
    fn cmp_canonical(&self, other: &Repr) -> Ordering {
        match (self, other) {
            (Repr::Modulus(a), Repr::Modulus(b)) => a.cmp(b),
            (Repr::Valuation(a), Repr::Valuation(b)) => match (a, b) {
                (None, None) => Ordering::Equal,
                (None, Some(_)) => Ordering::Greater,
                (Some(_), None) => Ordering::Less,
                (Some(a), Some(b)) => a.cmp(b),
            },
            (Repr::Monomials(a), Repr::Monomials(b)) => a.len().cmp(&b.len()).then_with(|| a.cmp(b)),
            (Repr::Pair(a1, b1), Repr::Pair(a2, b2)) => {
                a1.cmp_canonical(a2).then_with(|| b1.cmp_canonical(b2))
            }
            _ => Ordering::Equal,
        }
    }
}

impl Ord for Ideal {
    /// Canonical enumeration order: by generator/modulus, then generator
    /// lists (shorter first).
    fn cmp(&self, other: &Self) -> Ordering {
        self.repr.cmp_canonical(&other.repr)
    }
}

impl PartialOrd for Ideal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.ring, &self.repr) {
            (RingHandle::ZMod(n), Repr::Modulus(d)) if d == n => write!(f, "(0)"),
            (_, Repr::Modulus(m)) => write!(f, "({m})"),
            (_, Repr::Valuation(None)) => write!(f, "(0)"),
            (_, Repr::Valuation(Some(0))) => write!(f, "(1)"),
            (_, Repr::Valuation(Some(k))) => write!(f, "p^{k}"),
            (_, Repr::Monomials(g)) if g.is_empty() => write!(f, "(0)"),
            (_, Repr::Monomials(g)) if g.contains(&Monomial::ONE) => write!(f, "(1)"),
            (_, Repr::Monomials(g)) => {
                let parts: Vec<String> = g.iter().map(|m| m.to_string()).collect();
                write!(f, "{}", parts.join(","))
            }
            (_, Repr::Pair(..)) => {
                let (a, b) = self.components().expect("pair");
                write!(f, "{a}x{b}")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ring(s: &str) -> RingHandle {
        s.parse().unwrap()
    }

    fn ideal(r: &str, s: &str) -> Ideal {
        Ideal::parse(&ring(r), s).unwrap()
    }

    fn elem(r: &str, s: &str) -> Element {
        ring(r).parse_element(s).unwrap()
    }

    #[test]
    fn membership_examples() {
        assert!(ideal("Z", "(12)").contains(&elem("Z", "24")).unwrap());
        let e1 = ideal("kxy", "x^2,x*y");
        assert!(e1.contains(&elem("kxy", "xy/(1+y)")).unwrap());
        assert!(!e1.contains(&elem("kxy", "x")).unwrap());
        assert!(!e1.contains(&elem("kxy", "x + x^2")).unwrap());
        assert!(ideal("Zloc:5", "p^2").contains(&elem("Zloc:5", "50/3")).unwrap());
        assert!(!ideal("Zloc:5", "p^2").contains(&elem("Zloc:5", "10/3")).unwrap());
        assert!(ideal("Zinv:2", "(3)").contains(&elem("Zinv:2", "3/4")).unwrap());
        assert!(ideal("Z/4xZ/9", "(2)x(3)").contains(&elem("Z/4xZ/9", "(2,6)")).unwrap());
    }

    #[test]
    fn radical_examples() {
        assert_eq!(ideal("Z", "(12)").radical(), ideal("Z", "(6)"));
        assert_eq!(ideal("kxy", "x^2,x*y").radical(), ideal("kxy", "x"));
        assert_eq!(ideal("Z/12", "(0)").radical(), ideal("Z/12", "(6)"));
        assert_eq!(ideal("Z", "(0)").radical(), ideal("Z", "(0)"));
        assert_eq!(ideal("Zloc:3", "p^4").radical(), ideal("Zloc:3", "p"));
    }

    #[test]
    fn colon_examples() {
        let e1 = ideal("kxy", "x^2,x*y");
        assert_eq!(e1.colon(&elem("kxy", "x")).unwrap(), ideal("kxy", "x,y"));
        assert_eq!(e1.colon(&elem("kxy", "x*(1+y)")).unwrap(), ideal("kxy", "x,y"));
        assert!(matches!(e1.colon(&elem("kxy", "x+y")), Err(Error::UnsupportedColon(_))));
        assert_eq!(ideal("Z", "(12)").colon(&elem("Z", "2")).unwrap(), ideal("Z", "(6)"));
        assert!(!ideal("Z", "(12)").colon(&elem("Z", "12")).unwrap().is_proper());
        assert_eq!(ideal("Z", "(0)").colon(&elem("Z", "5")).unwrap(), ideal("Z", "(0)"));
    }

    #[test]
    fn arithmetic_examples() {
        let zz = ring("ZxZ");
        let i1 = Ideal::parse(&zz, "(4)x(1)").unwrap();
        let i2 = Ideal::parse(&zz, "(1)x(9)").unwrap();
        assert_eq!(i1.intersect(&i2).unwrap(), Ideal::parse(&zz, "(4)x(9)").unwrap());
        let m = ideal("kxy", "x,y");
        assert_eq!(m.power(2).unwrap(), ideal("kxy", "x^2,x*y,y^2"));
        assert_eq!(ideal("kxy", "x").product(&m).unwrap(), ideal("kxy", "x^2,x*y"));
        assert_eq!(ideal("Z/12", "(2)").product(&ideal("Z/12", "(6)")).unwrap(), ideal("Z/12", "(0)"));
        assert_eq!(ideal("Z/12", "(4)").sum(&ideal("Z/12", "(6)")).unwrap(), ideal("Z/12", "(2)"));
        assert_eq!(ideal("kxy", "x^2").intersect(&ideal("kxy", "y")).unwrap(), ideal("kxy", "x^2*y"));
        assert!(ideal("Z", "(4)").product(&ideal("Z/4", "(2)")).is_err());
    }

    #[test]
    fn zdiv_examples() {
        assert!(ideal("Z", "(12)").in_zdiv(&elem("Z", "2")).unwrap());
        assert!(!ideal("Z", "(12)").in_zdiv(&elem("Z", "5")).unwrap());
        assert!(ideal("Z/12", "(0)").in_zdiv(&elem("Z/12", "4")).unwrap());
        assert!(ideal("Z", "(1)").in_zdiv(&elem("Z", "5")).is_err());
    }

    #[test]
    fn zdiv_gcd_rule_matches_residue_search() {
        for m in 2..60u64 {
            let i = Ideal::modulus(&RingHandle::Int, m).unwrap();
            for r in -70i64..70 {
                // s ranges over a full residue system; s ∉ mZ means s mod m ≠ 0.
                let brute = (1..m).any(|s| ((r as i128 * s as i128).rem_euclid(m as i128)) == 0);
                assert_eq!(i.in_zdiv(&Element::int(r)).unwrap(), brute, "m={m} r={r}");
            }
        }
    }

    #[test]
    fn monomial_localization_is_faithful() {
        // Contracting I·A_M back to A reproduces I: unit multiples of members
        // stay members and unit multiples of non-members stay out.
        let kxy = RingHandle::MonLoc;
        let family = IdealFamily::new(kxy.clone(), FamilyBounds::Degree(3));
        let units = ["1+x", "1+y", "1+x+y^2", "2-x*y"].map(|u| kxy.parse_element(u).unwrap());
        for i in enumerate_ideals(&family).unwrap() {
            let gens = i.monomial_generators().unwrap().to_vec();
            for g in &gens {
                for u in &units {
                    let gu = kxy.mul(&Element::poly(Poly::monomial(*g)), u).unwrap();
                    assert!(i.contains(&gu).unwrap());
                    let g_over_u = kxy.mul(&Element::poly(Poly::monomial(*g)), &kxy.inverse(u).unwrap()).unwrap();
                    assert!(i.contains(&g_over_u).unwrap());
                }
            }
            for m in Monomial::up_to_degree(0, 4) {
                let inside = gens.iter().any(|g| g.divides(m));
                for u in &units {
                    let mu = kxy.mul(&Element::poly(Poly::monomial(m)), u).unwrap();
                    assert_eq!(i.contains(&mu).unwrap(), inside, "{i} {m} {u}");
                }
            }
            let minimal = minimalize(gens.clone());
            assert_eq!(minimal, gens, "generators stay minimal");
        }
    }

    #[test]
    fn power_search_radical_matches_closed_form() {
        for n in 2..=60u64 {
            let r = RingHandle::ZMod(n);
            for i in enumerate_ideals(&IdealFamily::new(r.clone(), FamilyBounds::Exhaustive)).unwrap() {
                let rad = i.radical();
                for x in 0..n {
                    let x = Element::Residue(x);
                    let mut power = x.clone();
                    let mut found = false;
                    for _ in 0..=n {
                        if i.contains(&power).unwrap() {
                            found = true;
                            break;
                        }
                        power = r.mul(&power, &x).unwrap();
                    }
                    assert_eq!(rad.contains(&x).unwrap(), found, "n={n} I={i} x={x}");
                }
            }
        }
    }

    #[test]
    fn finite_families_are_closed_under_operations() {
        for r in ["Z/12", "Z/36", "Z/4xZ/6", "Z/8"] {
            let r = ring(r);
            let ideals = enumerate_ideals(&IdealFamily::new(r.clone(), FamilyBounds::Exhaustive)).unwrap();
            for a in &ideals {
                for b in &ideals {
                    for c in [a.sum(b).unwrap(), a.product(b).unwrap(), a.intersect(b).unwrap()] {
                        assert!(ideals.contains(&c), "{c} missing in {r}");
                    }
                }
            }
        }
    }

    #[test]
    fn properness_agrees_with_unit_membership() {
        for r in ["Z/12", "Z/4xZ/9", "ZxZ", "Z", "Zloc:3", "Zinv:6", "kxy"] {
            let r = ring(r);
            let bounds = match r {
                RingHandle::MonLoc => FamilyBounds::Degree(2),
                RingHandle::IntLoc(_) => FamilyBounds::Exponents(3),
                _ if r.is_finite() => FamilyBounds::Exhaustive,
                _ => FamilyBounds::Moduli(0..=20),
            };
            for i in enumerate_ideals(&IdealFamily::new(r.clone(), bounds)).unwrap() {
                assert_eq!(i.is_proper(), !i.contains(&r.one()).unwrap(), "{i} in {r}");
            }
        }
    }

    proptest! {
        #[test]
        fn integer_ideal_laws(m in 0u64..400, j in 0u64..400, c in -500i64..500) {
            let z = RingHandle::Int;
            let i = Ideal::modulus(&z, m).unwrap();
            let k = Ideal::modulus(&z, j).unwrap();
            // I ⊆ √I, √√I = √I, √(I ∩ J) = √I ∩ √J
            prop_assert!(i.radical().contains_ideal(&i).unwrap());
            prop_assert_eq!(i.radical().radical(), i.radical());
            prop_assert_eq!(i.intersect(&k).unwrap().radical(), i.radical().intersect(&k.radical()).unwrap());
            // I ⊆ (I : c); c ∈ I gives the whole ring.
            let c = Element::int(c);
            let col = i.colon(&c).unwrap();
            prop_assert!(col.contains_ideal(&i).unwrap());
            if i.contains(&c).unwrap() {
                prop_assert!(!col.is_proper());
            }
        }

        #[test]
        fn monomial_colon_is_membership_defined(gx in prop::collection::vec((0u32..4, 0u32..4), 1..4), cx in 0u32..3, cy in 0u32..3) {
            let i = Ideal::monomial(gx.iter().map(|&(a, b)| Monomial::new(a, b)).collect());
            let c = Monomial::new(cx, cy);
            let col = i.colon(&Element::poly(Poly::monomial(c))).unwrap();
            for t in Monomial::up_to_degree(0, 6) {
                let in_col = col.contains(&Element::poly(Poly::monomial(t))).unwrap();
                let direct = i.contains(&Element::poly(Poly::monomial(t * c))).unwrap();
                prop_assert_eq!(in_col, direct);
            }
        }
    }
}
