use std::ops::RangeInclusive;

use super::Ideal;
use crate::arith;
use crate::error::{Error, Result};
use crate::poly::Monomial;
use crate::ring::RingHandle;

/// Bounds that make an ideal family finite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyBounds {
    /// Every ideal of a finite ring.
    Exhaustive,
    /// Generators `m` in the range, for `Z`, `Z[1/s]` and product components.
    Moduli(RangeInclusive<u64>),
    /// `p^0 ..= p^k` and the zero ideal of `Zloc:p`.
    Exponents(u32),
    /// Monomial ideals of `kxy` generated in degrees `1..=d`, plus the whole ring.
    Degree(u32),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealFamily {
    pub ring: RingHandle,
    pub bounds: FamilyBounds,
}

impl IdealFamily {
    pub fn new(ring: RingHandle, bounds: FamilyBounds) -> Self {
        IdealFamily { ring, bounds }
    }
}

fn antichains(monomials: &[Monomial], start: usize, current: &mut Vec<Monomial>, out: &mut Vec<Vec<Monomial>>) {
    for i in start..monomials.len() {
        let m = monomials[i];
        if current.iter().any(|g| g.divides(m) || m.divides(*g)) {
            continue;
        }
        current.push(m);
        out.push(current.clone());
        antichains(monomials, i + 1, current, out);
        current.pop();
    }
}

fn unbounded(ring: &RingHandle, bounds: &FamilyBounds) -> Error {
    Error::Unbounded(format!("{ring} with bounds {bounds:?}"))
}

fn family_of(ring: &RingHandle, bounds: &FamilyBounds) -> Result<Vec<Ideal>> {
    match (ring, bounds) {
        (RingHandle::ZMod(n), _) => arith::divisors(*n)
            .into_iter()
            .map(|d| Ideal::modulus(ring, d))
            .collect(),
        (RingHandle::Int | RingHandle::IntInv(_), FamilyBounds::Moduli(range)) => {
            range.clone().map(|m| Ideal::modulus(ring, m)).collect()
        }
        (RingHandle::IntLoc(_), FamilyBounds::Exponents(k)) => (0..=*k)
            .map(Some)
            .chain([None])
            .map(|k| Ideal::valuation(ring, k))
            .collect(),
        (RingHandle::MonLoc, FamilyBounds::Degree(d)) => {
            let monomials = Monomial::up_to_degree(1, *d);
            let mut sets = Vec::new();
            antichains(&monomials, 0, &mut Vec::new(), &mut sets);
            let mut out = vec![Ideal::whole(ring)];
            out.extend(sets.into_iter().map(Ideal::monomial));
            Ok(out)
        }
        (RingHandle::Prod(l, r), _) => {
            let left = family_of(l, bounds)?;
            let right = family_of(r, bounds)?;
            let mut out = Vec::with_capacity(left.len() * right.len());
            for a in &left {
                for b in &right {
                    out.push(Ideal::pair(ring, a.clone(), b.clone())?);
                }
            }
            Ok(out)
        }
        _ => Err(unbounded(ring, bounds)),
    }
}

/// Every ideal of the family, deduplicated, in canonical order.
pub fn enumerate_ideals(family: &IdealFamily) -> Result<Vec<Ideal>> {
    let mut ideals = family_of(&family.ring, &family.bounds)?;
    ideals.sort();
    ideals.dedup();
    Ok(ideals)
}
