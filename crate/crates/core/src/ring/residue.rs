//! Finite residue systems `R/I` used to decide ideal predicates exactly.
//!
//! Classes are indexed in mixed radix with the last component varying
//! fastest, so index order is the lexicographic order of residue tuples.
//! Every class carries a representative lifted back to `R`; when the class
//! contains a nonunit, the lift is a nonunit.

use fixedbitset::FixedBitSet;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

use super::{Element, RingHandle};
use crate::arith;
use crate::error::{Error, Result};
use crate::ideal::Ideal;

/// Largest number of classes a residue system may have.
pub const MAX_CLASSES: usize = 5000;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Kind {
    /// A whole finite ring `Z/n`.
    Full,
    /// `Z` reduced modulo `m`.
    Integer,
    /// `Zloc:p` reduced modulo `p^k`.
    Local(u64),
    /// `Z[1/s]` reduced modulo `m`.
    Inverted(u64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Axis {
    modulus: u64,
    kind: Kind,
}

impl Axis {
    fn lift(&self, r: u64) -> Element {
        match self.kind {
            Kind::Full => Element::Residue(r),
            Kind::Integer => {
                let v = if r == 1 && self.modulus > 1 { self.modulus + 1 } else { r };
                Element::Integer(BigInt::from(v))
            }
            Kind::Local(_) => Element::Rational(BigRational::from_integer(r.into())),
            Kind::Inverted(s) => {
                let mut t = r;
                while t != 0 && arith::is_smooth_over(t, s) {
                    t += self.modulus;
                }
                Element::Rational(BigRational::from_integer(t.into()))
            }
        }
    }

    fn reduce_int(&self, n: &BigInt) -> u64 {
        n.mod_floor(&BigInt::from(self.modulus)).to_u64().expect("residue fits")
    }

    fn reduce(&self, x: &Element) -> Result<u64> {
        match (&self.kind, x) {
            (Kind::Full, Element::Residue(r)) => Ok(r % self.modulus),
            (Kind::Integer, Element::Integer(n)) => Ok(self.reduce_int(n)),
            (Kind::Local(_) | Kind::Inverted(_), Element::Rational(q)) => {
                let m = BigInt::from(self.modulus);
                let e = q.denom().extended_gcd(&m);
                if !e.gcd.abs().to_u64().is_some_and(|g| g == 1 || self.modulus == 1) {
                    return Err(Error::Unsupported(format!("{x} has no residue mod {}", self.modulus)));
                }
                Ok(self.reduce_int(&(q.numer() * e.x)))
            }
            _ => Err(Error::BackendMismatch {
                expected: format!("{:?}", self.kind),
                found: x.to_string(),
            }),
        }
    }
}

/// The residue classes of a ring modulo an ideal (or of a whole finite ring).
#[derive(Clone, Debug)]
pub struct ResidueSystem {
    ring: RingHandle,
    axes: Vec<Axis>,
    lifts: Vec<Element>,
    nonunit: FixedBitSet,
}

fn axis_for(ring: &RingHandle, ideal: Option<&Ideal>) -> Result<Axis> {
    let not_scannable = || Error::Unsupported(format!("no finite residue system for {ring}"));
    Ok(match ring {
        RingHandle::ZMod(n) => Axis { modulus: *n, kind: Kind::Full },
        RingHandle::Int | RingHandle::IntInv(_) => {
            let m = ideal.and_then(|i| i.generator()).ok_or_else(not_scannable)?;
            if m == 0 {
                return Err(Error::Unsupported(format!("zero ideal of {ring} has no finite residue system")));
            }
            let kind = match ring {
                RingHandle::IntInv(s) => Kind::Inverted(*s),
                _ => Kind::Integer,
            };
            Axis { modulus: m, kind }
        }
        RingHandle::IntLoc(p) => {
            let k = ideal.and_then(|i| i.exponent()).ok_or_else(not_scannable)?;
            let k = k.ok_or_else(|| {
                Error::Unsupported(format!("zero ideal of {ring} has no finite residue system"))
            })?;
            let modulus = p
                .checked_pow(k)
                .ok_or_else(|| Error::Overflow(format!("{p}^{k}")))?;
            Axis { modulus, kind: Kind::Local(*p) }
        }
        _ => return Err(not_scannable()),
    })
}

impl ResidueSystem {
    fn build(ring: &RingHandle, axes: Vec<Axis>) -> Result<ResidueSystem> {
        let len = axes
            .iter()
            .try_fold(1u64, |acc, a| acc.checked_mul(a.modulus))
            .filter(|&n| n <= MAX_CLASSES as u64)
            .ok_or_else(|| {
                let size = axes.iter().map(|a| a.modulus as u128).product::<u128>();
                Error::ScanTooLarge(format!("{ring}: {size} residue classes"), MAX_CLASSES)
            })? as usize;
        let mut sys = ResidueSystem {
            ring: ring.clone(),
            axes,
            lifts: Vec::with_capacity(len),
            nonunit: FixedBitSet::with_capacity(len),
        };
        for i in 0..len {
            let digits = sys.residues(i);
            let lift = match sys.axes.as_slice() {
                [a] => a.lift(digits[0]),
                [a, b] => Element::pair(a.lift(digits[0]), b.lift(digits[1])),
                _ => unreachable!("one or two axes"),
            };
            sys.nonunit.set(i, !ring.is_unit(&lift)?);
            sys.lifts.push(lift);
        }
        Ok(sys)
    }

    /// All elements of a finite ring.
    pub fn of_finite_ring(ring: &RingHandle) -> Result<ResidueSystem> {
        let axes = match ring {
            RingHandle::ZMod(_) => vec![axis_for(ring, None)?],
            RingHandle::Prod(l, r) if ring.is_finite() => vec![axis_for(l, None)?, axis_for(r, None)?],
            _ => return Err(Error::Unsupported(format!("{ring} is not finite"))),
        };
        ResidueSystem::build(ring, axes)
    }

    /// A residue system on which membership in `I` and `√I` depends only on
    /// the class. Finite components are taken whole.
    pub fn for_ideal(ideal: &Ideal) -> Result<ResidueSystem> {
        let ring = ideal.ring();
        let axes = match ring {
            RingHandle::Prod(l, r) => {
                let (a, b) = ideal.components().expect("pair");
                vec![axis_for(l, Some(&a))?, axis_for(r, Some(&b))?]
            }
            RingHandle::MonLoc => {
                return Err(Error::Unsupported("kxy has no finite residue system".into()))
            }
            _ => vec![axis_for(ring, Some(ideal))?],
        };
        ResidueSystem::build(ring, axes)
    }

    pub fn ring(&self) -> &RingHandle {
        &self.ring
    }

    pub fn len(&self) -> usize {
        self.lifts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lifts.is_empty()
    }

    pub fn moduli(&self) -> Vec<u64> {
        self.axes.iter().map(|a| a.modulus).collect()
    }

    /// True when the system enumerates the ring itself rather than a quotient.
    pub fn is_whole_ring(&self) -> bool {
        self.axes.iter().all(|a| a.kind == Kind::Full)
    }

    /// The canonical representative of class `i`.
    pub fn lift(&self, i: usize) -> &Element {
        &self.lifts[i]
    }

    /// Classes whose representative is a nonunit. For quotients this is
    /// every class containing some nonunit.
    pub fn nonunits(&self) -> &FixedBitSet {
        &self.nonunit
    }

    pub fn is_nonunit(&self, i: usize) -> bool {
        self.nonunit.contains(i)
    }

    /// Residue digits of class `i`, one per component.
    pub fn residues(&self, i: usize) -> Vec<u64> {
        let mut digits = vec![0; self.axes.len()];
        let mut rest = i as u64;
        for (d, a) in digits.iter_mut().zip(&self.axes).rev() {
            *d = rest % a.modulus;
            rest /= a.modulus;
        }
        digits
    }

    /// Class `i` written as a residue, e.g. `5` or `(1,3)`.
    pub fn label(&self, i: usize) -> String {
        match self.residues(i).as_slice() {
            [r] => r.to_string(),
            [a, b] => format!("({a},{b})"),
            _ => unreachable!("one or two axes"),
        }
    }

    fn index_of_digits(&self, digits: &[u64]) -> usize {
        digits
            .iter()
            .zip(&self.axes)
            .fold(0u64, |acc, (d, a)| acc * a.modulus + d) as usize
    }

    /// The class of an element.
    pub fn index_of(&self, x: &Element) -> Result<usize> {
        self.ring.check(x)?;
        let digits = match (self.axes.as_slice(), x) {
            ([a], _) => vec![a.reduce(x)?],
            ([a, b], Element::Pair(u, v)) => vec![a.reduce(u)?, b.reduce(v)?],
            _ => unreachable!("checked element"),
        };
        Ok(self.index_of_digits(&digits))
    }

    fn combine(&self, i: usize, j: usize, f: impl Fn(u64, u64, u64) -> u64) -> usize {
        if let [a] = self.axes.as_slice() {
            return f(i as u64, j as u64, a.modulus) as usize;
        }
        let (di, dj) = (self.residues(i), self.residues(j));
        let digits: Vec<u64> = di
            .iter()
            .zip(&dj)
            .zip(&self.axes)
            .map(|((x, y), a)| f(*x, *y, a.modulus))
            .collect();
        self.index_of_digits(&digits)
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.combine(i, j, arith::mul_mod)
    }

    pub fn add(&self, i: usize, j: usize) -> usize {
        self.combine(i, j, |x, y, m| ((x as u128 + y as u128) % m as u128) as u64)
    }

    pub fn zero(&self) -> usize {
        0
    }

    /// Bitset of the classes lying in `ideal`.
    pub fn members(&self, ideal: &Ideal) -> Result<FixedBitSet> {
        let mut set = FixedBitSet::with_capacity(self.len());
        for (i, x) in self.lifts.iter().enumerate() {
            set.set(i, ideal.contains(x)?);
        }
        Ok(set)
    }
}
