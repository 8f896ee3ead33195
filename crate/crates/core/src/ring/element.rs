use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::RingHandle;
use crate::arith;
use crate::error::{Error, Result};
use crate::poly::Poly;

/// A ring element in canonical form. Which variant is valid depends on the
/// ring; [`RingHandle::check`] enforces the pairing.
#[derive(Clone, Debug)]
pub enum Element {
    /// Residue in `[0, n)` for `Z/n`.
    Residue(u64),
    /// Ordered pair for a product ring.
    Pair(Box<Element>, Box<Element>),
    /// An integer.
    Integer(BigInt),
    /// Reduced rational for `Zloc:p` (denominator prime to `p`) and `Zinv:s`
    /// (denominator built from primes of `s`).
    Rational(BigRational),
    /// Numerator over a denominator with nonzero constant term, for `kxy`.
    Fraction(Poly, Poly),
}

impl Element {
    pub fn pair(a: Element, b: Element) -> Element {
        Element::Pair(Box::new(a), Box::new(b))
    }

    pub fn int(n: i64) -> Element {
        Element::Integer(BigInt::from(n))
    }

    pub fn poly(f: Poly) -> Element {
        Element::Fraction(f, Poly::one())
    }

    pub(crate) fn fraction(num: Poly, den: Poly) -> Element {
        debug_assert!(!den.constant_term().is_zero());
        let mut num = num;
        let mut den = den;
        if den.constant_term().is_negative() {
            num = -&num;
            den = -&den;
        }
        let g = num.content().gcd(&den.content());
        if !g.is_zero() && !g.is_one() {
            num = num.div_scalar(&g);
            den = den.div_scalar(&g);
        }
        Element::Fraction(num, den)
    }

    fn kind(&self) -> &'static str {
        match self {
            Element::Residue(_) => "residue",
            Element::Pair(..) => "pair",
            Element::Integer(_) => "integer",
            Element::Rational(_) => "rational",
            Element::Fraction(..) => "polynomial fraction",
        }
    }
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Element::Residue(a), Element::Residue(b)) => a == b,
            (Element::Pair(a1, b1), Element::Pair(a2, b2)) => a1 == a2 && b1 == b2,
            (Element::Integer(a), Element::Integer(b)) => a == b,
            (Element::Rational(a), Element::Rational(b)) => a == b,
            (Element::Fraction(f1, g1), Element::Fraction(f2, g2)) => &(f1 * g2) == &(f2 * g1),
            _ => false,
        }
    }
}

impl Eq for Element {}

fn fmt_rational(q: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if q.denom().is_one() {
        write!(f, "{}", q.numer())
    } else {
        write!(f, "{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Residue(r) => write!(f, "{r}"),
            Element::Pair(a, b) => write!(f, "({a},{b})"),
            Element::Integer(n) => write!(f, "{n}"),
            Element::Rational(q) => fmt_rational(q, f),
            Element::Fraction(num, den) if den.is_one() => write!(f, "{num}"),
            Element::Fraction(num, den) => {
                let wrap = |p: &Poly| {
                    if p.len() > 1 || p.terms().any(|(_, c)| c.is_negative()) {
                        format!("({p})")
                    } else {
                        p.to_string()
                    }
                };
                write!(f, "{}/{}", wrap(num), wrap(den))
            }
        }
    }
}

fn residue_of(n: &BigInt, m: u64) -> u64 {
    n.mod_floor(&BigInt::from(m)).to_u64().expect("residue fits in u64")
}

/// `|n|` as `u64`, or an overflow error.
pub(crate) fn abs_u64(n: &BigInt) -> Result<u64> {
    n.abs()
        .to_u64()
        .ok_or_else(|| Error::Overflow(format!("{n} exceeds 64 bits")))
}

impl RingHandle {
    pub fn zero(&self) -> Element {
        self.from_int(&BigInt::zero())
    }

    pub fn one(&self) -> Element {
        self.from_int(&BigInt::one())
    }

    /// Image of an integer under the unique ring map from `Z`.
    pub fn from_int(&self, n: &BigInt) -> Element {
        match self {
            RingHandle::ZMod(m) => Element::Residue(residue_of(n, *m)),
            RingHandle::Prod(l, r) => Element::pair(l.from_int(n), r.from_int(n)),
            RingHandle::Int => Element::Integer(n.clone()),
            RingHandle::IntLoc(_) | RingHandle::IntInv(_) => {
                Element::Rational(BigRational::from_integer(n.clone()))
            }
            RingHandle::MonLoc => Element::poly(Poly::constant(n.clone())),
        }
    }

    pub fn from_i64(&self, n: i64) -> Element {
        self.from_int(&BigInt::from(n))
    }

    /// Checks that `x` is a canonical element of this ring.
    pub fn check(&self, x: &Element) -> Result<()> {
        let ok = match (self, x) {
            (RingHandle::ZMod(n), Element::Residue(r)) => r < n,
            (RingHandle::Prod(l, r), Element::Pair(a, b)) => {
                l.check(a)?;
                r.check(b)?;
                true
            }
            (RingHandle::Int, Element::Integer(_)) => true,
            (RingHandle::IntLoc(p), Element::Rational(q)) => {
                !(q.denom() % BigInt::from(*p)).is_zero() || q.denom().is_one()
            }
            (RingHandle::IntInv(s), Element::Rational(q)) => {
                abs_u64(q.denom()).is_ok_and(|d| arith::is_smooth_over(d, *s))
            }
            (RingHandle::MonLoc, Element::Fraction(_, den)) => !den.constant_term().is_zero(),
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(self.mismatch(format!("{} {x}", x.kind())))
        }
    }

    pub fn is_zero(&self, x: &Element) -> Result<bool> {
        self.check(x)?;
        Ok(match x {
            Element::Residue(r) => *r == 0,
            Element::Pair(a, b) => {
                let (l, r) = self.components().expect("checked pair");
                l.is_zero(a)? && r.is_zero(b)?
            }
            Element::Integer(n) => n.is_zero(),
            Element::Rational(q) => q.is_zero(),
            Element::Fraction(num, _) => num.is_zero(),
        })
    }

    pub fn add(&self, a: &Element, b: &Element) -> Result<Element> {
        self.check(a)?;
        self.check(b)?;
        Ok(match (self, a, b) {
            (RingHandle::ZMod(n), Element::Residue(x), Element::Residue(y)) => {
                Element::Residue(((*x as u128 + *y as u128) % *n as u128) as u64)
            }
            (RingHandle::Prod(l, r), Element::Pair(a1, a2), Element::Pair(b1, b2)) => {
                Element::pair(l.add(a1, b1)?, r.add(a2, b2)?)
            }
            (_, Element::Integer(x), Element::Integer(y)) => Element::Integer(x + y),
            (_, Element::Rational(x), Element::Rational(y)) => Element::Rational(x + y),
            (_, Element::Fraction(f1, g1), Element::Fraction(f2, g2)) => {
                Element::fraction(&(f1 * g2) + &(f2 * g1), g1 * g2)
            }
            _ => unreachable!("checked elements"),
        })
    }

    pub fn neg(&self, a: &Element) -> Result<Element> {
        self.check(a)?;
        Ok(match (self, a) {
            (RingHandle::ZMod(n), Element::Residue(x)) => Element::Residue((n - x) % n),
            (RingHandle::Prod(l, r), Element::Pair(a1, a2)) => Element::pair(l.neg(a1)?, r.neg(a2)?),
            (_, Element::Integer(x)) => Element::Integer(-x),
            (_, Element::Rational(x)) => Element::Rational(-x),
            (_, Element::Fraction(f, g)) => Element::fraction(-f, g.clone()),
            _ => unreachable!("checked elements"),
        })
    }

    pub fn sub(&self, a: &Element, b: &Element) -> Result<Element> {
        self.add(a, &self.neg(b)?)
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Result<Element> {
        self.check(a)?;
        self.check(b)?;
        Ok(match (self, a, b) {
            (RingHandle::ZMod(n), Element::Residue(x), Element::Residue(y)) => {
                Element::Residue(arith::mul_mod(*x, *y, *n))
            }
            (RingHandle::Prod(l, r), Element::Pair(a1, a2), Element::Pair(b1, b2)) => {
                Element::pair(l.mul(a1, b1)?, r.mul(a2, b2)?)
            }
            (_, Element::Integer(x), Element::Integer(y)) => Element::Integer(x * y),
            (_, Element::Rational(x), Element::Rational(y)) => Element::Rational(x * y),
            (_, Element::Fraction(f1, g1), Element::Fraction(f2, g2)) => {
                Element::fraction(f1 * f2, g1 * g2)
            }
            _ => unreachable!("checked elements"),
        })
    }

    pub fn pow(&self, a: &Element, e: u32) -> Result<Element> {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, a)?;
        }
        Ok(acc)
    }

    /// True iff `x` is invertible in this ring.
    pub fn is_unit(&self, x: &Element) -> Result<bool> {
        self.check(x)?;
        Ok(match (self, x) {
            (RingHandle::ZMod(n), Element::Residue(r)) => arith::gcd(*r, *n) == 1,
            (RingHandle::Prod(l, r), Element::Pair(a, b)) => l.is_unit(a)? && r.is_unit(b)?,
            (RingHandle::Int, Element::Integer(n)) => n.abs().is_one(),
            (RingHandle::IntLoc(p), Element::Rational(q)) => {
                !q.is_zero() && !(q.numer() % BigInt::from(*p)).is_zero()
            }
            (RingHandle::IntInv(s), Element::Rational(q)) => {
                !q.is_zero() && is_smooth_big(q.numer(), *s)
            }
            (RingHandle::MonLoc, Element::Fraction(num, _)) => !num.constant_term().is_zero(),
            _ => unreachable!("checked elements"),
        })
    }

    /// Multiplicative inverse of a unit.
    pub fn inverse(&self, x: &Element) -> Result<Element> {
        if !self.is_unit(x)? {
            return Err(Error::Unsupported(format!("{x} is not a unit of {self}")));
        }
        Ok(match (self, x) {
            (RingHandle::ZMod(n), Element::Residue(r)) => {
                let e = BigInt::from(*r).extended_gcd(&BigInt::from(*n));
                Element::Residue(residue_of(&e.x, *n))
            }
            (RingHandle::Prod(l, r), Element::Pair(a, b)) => {
                Element::pair(l.inverse(a)?, r.inverse(b)?)
            }
            (RingHandle::Int, Element::Integer(n)) => Element::Integer(n.clone()),
            (_, Element::Rational(q)) => Element::Rational(q.recip()),
            (_, Element::Fraction(f, g)) => Element::fraction(g.clone(), f.clone()),
            _ => unreachable!("checked elements"),
        })
    }

    /// Builds the element `num / den` of `Zloc:p` or `Zinv:s`, checking the
    /// denominator is allowed.
    pub fn rational(&self, num: BigInt, den: BigInt) -> Result<Element> {
        if den.is_zero() {
            return Err(Error::Unsupported("zero denominator".into()));
        }
        let x = Element::Rational(BigRational::new(num, den));
        self.check(&x)?;
        Ok(x)
    }

    /// Parses an element literal: integers, pairs `(a,b)`, rationals `a/b`,
    /// polynomials in `x, y` with `+ - * ^ /`, and `p` for the prime of
    /// `Zloc:p`.
    pub fn parse_element(&self, s: &str) -> Result<Element> {
        super::parse::parse_element(self, s)
    }
}

fn is_smooth_big(n: &BigInt, s: u64) -> bool {
    if n.sign() == Sign::NoSign {
        return false;
    }
    let mut n = n.abs();
    for (p, _) in arith::factorize(s) {
        let p = BigInt::from(p);
        while (&n % &p).is_zero() {
            n /= &p;
        }
    }
    n.is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> RingHandle {
        s.parse().unwrap()
    }

    #[test]
    fn unit_examples() {
        let z12 = r("Z/12");
        assert!(z12.is_unit(&Element::Residue(5)).unwrap());
        assert!(!z12.is_unit(&Element::Residue(4)).unwrap());
        assert!(!RingHandle::Int.is_unit(&Element::int(2)).unwrap());
        assert!(RingHandle::Int.is_unit(&Element::int(-1)).unwrap());
        let kxy = RingHandle::MonLoc;
        let one_plus_x = kxy.parse_element("1+x").unwrap();
        assert!(kxy.is_unit(&one_plus_x).unwrap());
        assert!(!kxy.is_unit(&kxy.parse_element("x").unwrap()).unwrap());
        let inv2 = r("Zinv:2");
        assert!(inv2.is_unit(&inv2.parse_element("-8").unwrap()).unwrap());
        assert!(!inv2.is_unit(&inv2.parse_element("6").unwrap()).unwrap());
        let loc5 = r("Zloc:5");
        assert!(loc5.is_unit(&loc5.parse_element("3/7").unwrap()).unwrap());
        assert!(!loc5.is_unit(&loc5.parse_element("10/7").unwrap()).unwrap());
    }

    #[test]
    fn backend_mismatch_is_an_error() {
        assert!(matches!(
            RingHandle::Int.is_unit(&Element::Residue(1)),
            Err(Error::BackendMismatch { .. })
        ));
        assert!(r("Z/5").check(&Element::Residue(5)).is_err());
        assert!(r("Zloc:5").rational(BigInt::from(1), BigInt::from(5)).is_err());
        assert!(r("Zinv:2").rational(BigInt::from(1), BigInt::from(3)).is_err());
        assert!(r("Zinv:6").rational(BigInt::from(1), BigInt::from(4)).is_ok());
    }

    #[test]
    fn fraction_equality_cross_multiplies() {
        let kxy = RingHandle::MonLoc;
        let a = kxy.parse_element("(x + x*y)/(1 + y)").unwrap();
        let b = kxy.parse_element("x").unwrap();
        assert_eq!(a, b);
        let c = kxy.parse_element("x/(1+x)").unwrap();
        assert_ne!(b, c);
    }

    #[test]
    fn unit_group_closure_on_finite_rings() {
        for ring in [r("Z/12"), r("Z/8"), r("Z/4xZ/9")] {
            let n = ring.cardinality().unwrap();
            let elems: Vec<Element> = match &ring {
                RingHandle::ZMod(_) => (0..n).map(Element::Residue).collect(),
                _ => (0..4)
                    .flat_map(|a| (0..9).map(move |b| Element::pair(Element::Residue(a), Element::Residue(b))))
                    .collect(),
            };
            for a in &elems {
                for b in &elems {
                    let ua = ring.is_unit(a).unwrap();
                    let ub = ring.is_unit(b).unwrap();
                    let uab = ring.is_unit(&ring.mul(a, b).unwrap()).unwrap();
                    assert_eq!(uab, ua && ub, "{a} * {b} in {ring}");
                }
            }
        }
    }

    #[test]
    fn inverses() {
        let z12 = r("Z/12");
        assert_eq!(z12.inverse(&Element::Residue(5)).unwrap(), Element::Residue(5));
        let kxy = RingHandle::MonLoc;
        let u = kxy.parse_element("1+y").unwrap();
        let prod = kxy.mul(&u, &kxy.inverse(&u).unwrap()).unwrap();
        assert_eq!(prod, kxy.one());
        assert!(z12.inverse(&Element::Residue(4)).is_err());
    }
}
