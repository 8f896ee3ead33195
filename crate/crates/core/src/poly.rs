//! Bivariate polynomials over the integers, used as numerators and
//! denominators of elements of the local ring `k[x,y]` at `(x,y)`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// `x^a y^b`.
///
/// Ordered by total degree, then by descending `x` exponent, so the
/// degree-one monomials come out as `x, y`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial {
    pub x: u32,
    pub y: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { x: 0, y: 0 };
    pub const X: Monomial = Monomial { x: 1, y: 0 };
    pub const Y: Monomial = Monomial { x: 0, y: 1 };

    pub fn new(x: u32, y: u32) -> Self {
        Monomial { x, y }
    }

    pub fn degree(self) -> u32 {
        self.x + self.y
    }

    pub fn is_one(self) -> bool {
        self == Self::ONE
    }

    pub fn divides(self, other: Monomial) -> bool {
        self.x <= other.x && self.y <= other.y
    }

    pub fn lcm(self, other: Monomial) -> Monomial {
        Monomial::new(self.x.max(other.x), self.y.max(other.y))
    }

    pub fn gcd(self, other: Monomial) -> Monomial {
        Monomial::new(self.x.min(other.x), self.y.min(other.y))
    }

    /// `self / other`, defined only when `other` divides `self`.
    pub fn checked_div(self, other: Monomial) -> Option<Monomial> {
        other
            .divides(self)
            .then(|| Monomial::new(self.x - other.x, self.y - other.y))
    }

    /// Quotient by the gcd: the colon `(self) : (other)` as a monomial.
    pub fn colon(self, other: Monomial) -> Monomial {
        let g = self.gcd(other);
        Monomial::new(self.x - g.x, self.y - g.y)
    }

    pub fn squarefree(self) -> Monomial {
        Monomial::new(self.x.min(1), self.y.min(1))
    }

    /// Pure power of a single variable (not the constant monomial).
    pub fn is_pure_power(self) -> bool {
        (self.x == 0) != (self.y == 0)
    }

    /// All monomials of total degree `lo..=hi`, in monomial order.
    pub fn up_to_degree(lo: u32, hi: u32) -> Vec<Monomial> {
        (lo..=hi)
            .flat_map(|d| (0..=d).rev().map(move |a| Monomial::new(a, d - a)))
            .collect()
    }
}

impl Mul for Monomial {
    type Output = Monomial;
    fn mul(self, rhs: Monomial) -> Monomial {
        Monomial::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.x.cmp(&self.x))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let var = |f: &mut fmt::Formatter<'_>, name: &str, e: u32| match e {
            1 => write!(f, "{name}"),
            _ => write!(f, "{name}^{e}"),
        };
        match (self.x, self.y) {
            (0, 0) => write!(f, "1"),
            (a, 0) => var(f, "x", a),
            (0, b) => var(f, "y", b),
            (a, b) => {
                var(f, "x", a)?;
                write!(f, "*")?;
                var(f, "y", b)
            }
        }
    }
}

/// Polynomial in `x, y` with integer coefficients. Zero coefficients are
/// never stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Poly::term(Monomial::ONE, c)
    }

    pub fn term(m: Monomial, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn monomial(m: Monomial) -> Self {
        Poly::term(m, BigInt::one())
    }

    pub fn x() -> Self {
        Poly::monomial(Monomial::X)
    }

    pub fn y() -> Self {
        Poly::monomial(Monomial::Y)
    }

    /// Sum of the given monomials, each with coefficient one.
    pub fn sum_of(monomials: &[Monomial]) -> Self {
        monomials
            .iter()
            .fold(Poly::zero(), |acc, &m| &acc + &Poly::monomial(m))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Monomial::ONE).is_some_and(|c| c.is_one())
    }

    pub fn constant_term(&self) -> BigInt {
        self.terms
            .get(&Monomial::ONE)
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = Monomial> + '_ {
        self.terms.keys().copied()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// Greatest term in monomial order.
    pub fn leading(&self) -> Option<(Monomial, &BigInt)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c))
    }

    /// The single monomial when `self` has exactly one term.
    pub fn as_monomial(&self) -> Option<(Monomial, &BigInt)> {
        match self.terms.len() {
            1 => self.leading(),
            _ => None,
        }
    }

    /// gcd of all coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.terms
            .values()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Componentwise-min exponent over the support: the largest monomial
    /// dividing every term.
    pub fn monomial_gcd(&self) -> Option<Monomial> {
        self.terms.keys().copied().reduce(Monomial::gcd)
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    /// Exact division by an integer dividing every coefficient.
    pub fn div_scalar(&self, c: &BigInt) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, v)| (*m, v / c)).collect(),
        }
    }

    /// Divides every term by the monomial `m`, which must divide each one.
    pub fn div_monomial(&self, m: Monomial) -> Option<Poly> {
        let mut terms = BTreeMap::new();
        for (t, c) in &self.terms {
            terms.insert(t.checked_div(m)?, c.clone());
        }
        Some(Poly { terms })
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact quotient `self / divisor` over the integers, or `None` when the
    /// divisor does not divide. A single divisor is its own Gröbner basis, so
    /// a leading term that cannot be cancelled proves non-divisibility.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        let (lead_m, lead_c) = divisor.leading()?;
        let lead_c = lead_c.clone();
        let mut rest = self.clone();
        let mut quotient = Poly::zero();
        while let Some((m, c)) = rest.leading() {
            let qm = m.checked_div(lead_m)?;
            let (qc, r) = c.div_rem(&lead_c);
            if !r.is_zero() {
                return None;
            }
            let t = Poly::term(qm, qc);
            rest = &rest - &(&t * divisor);
            quotient = &quotient + &t;
        }
        Some(quotient)
    }

    fn insert_add(terms: &mut BTreeMap<Monomial, BigInt>, m: Monomial, c: BigInt) {
        let slot = terms.entry(m).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            terms.remove(&m);
        }
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            Poly::insert_add(&mut terms, *m, c.clone());
        }
        Poly { terms }
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut terms = BTreeMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                Poly::insert_add(&mut terms, *a * *b, ca * cb);
            }
        }
        Poly { terms }
    }
}

impl From<Monomial> for Poly {
    fn from(m: Monomial) -> Poly {
        Poly::monomial(m)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // Highest degree first; within a degree, higher powers of x first.
        let mut terms: Vec<(&Monomial, &BigInt)> = self.terms.iter().collect();
        terms.sort_by_key(|(m, _)| std::cmp::Reverse((m.degree(), m.x)));
        for (i, (m, c)) in terms.into_iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}
