//! Instance families and the ideal lattice of a finite ring.

use std::collections::HashMap;

use super::Scope;
use crate::classify::{Prepared, Property, Verdict};
use crate::error::Result;
use crate::ideal::{enumerate_ideals, FamilyBounds, Ideal, IdealFamily};
use crate::ring::RingHandle;

pub(crate) const SMALL_PRIMES: [u64; 4] = [2, 3, 5, 7];
pub(crate) const LOCAL_EXPONENTS: u32 = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Family {
    /// `Z/n`, `2 ≤ n ≤ zmod_max`.
    Residues,
    /// `Z/n × Z/m`, `2 ≤ n, m ≤ prod_max`.
    Products,
    /// `mZ`, `0 ≤ m ≤ int_max`.
    Integers,
    /// `Z[1/s]`, `s ∈ {2,3,5,7}`, generators up to `int_max`.
    Inverted,
    /// `Zloc:p`, `p ∈ {2,3,5,7}`, exponents up to 6.
    Local,
    /// Monomial ideals of `kxy`.
    Plane,
}

pub(crate) fn residue_rings(scope: &Scope) -> Vec<RingHandle> {
    (2..=scope.zmod_max).map(RingHandle::ZMod).collect()
}

pub(crate) fn product_rings(scope: &Scope) -> Vec<RingHandle> {
    let mut out = Vec::new();
    for n in 2..=scope.prod_max {
        for m in 2..=scope.prod_max {
            out.push(RingHandle::Prod(Box::new(RingHandle::ZMod(n)), Box::new(RingHandle::ZMod(m))));
        }
    }
    out
}

pub(crate) fn finite_rings(scope: &Scope) -> Vec<RingHandle> {
    let mut out = residue_rings(scope);
    out.extend(product_rings(scope));
    out
}

/// `(ring, ideals)` groups. Infinite rings are split one ideal per group so
/// the work spreads across threads.
pub(crate) fn groups(scope: &Scope, families: &[Family]) -> Result<Vec<(RingHandle, Vec<Ideal>)>> {
    let mut out = Vec::new();
    let singletons = |ring: RingHandle, bounds: FamilyBounds, out: &mut Vec<(RingHandle, Vec<Ideal>)>| -> Result<()> {
        for i in enumerate_ideals(&IdealFamily::new(ring.clone(), bounds))? {
            out.push((ring.clone(), vec![i]));
        }
        Ok(())
    };
    for family in families {
        match family {
            Family::Residues | Family::Products => {
                let rings = if *family == Family::Residues { residue_rings(scope) } else { product_rings(scope) };
                for ring in rings {
                    let ideals = enumerate_ideals(&IdealFamily::new(ring.clone(), FamilyBounds::Exhaustive))?;
                    out.push((ring, ideals));
                }
            }
            Family::Integers if scope.int_max >= 2 => {
                singletons(RingHandle::Int, FamilyBounds::Moduli(0..=scope.int_max), &mut out)?
            }
            Family::Inverted if scope.int_max >= 2 => {
                for s in SMALL_PRIMES {
                    singletons(RingHandle::IntInv(s), FamilyBounds::Moduli(0..=scope.int_max), &mut out)?;
                }
            }
            Family::Local => {
                for p in SMALL_PRIMES {
                    singletons(RingHandle::IntLoc(p), FamilyBounds::Exponents(LOCAL_EXPONENTS), &mut out)?;
                }
            }
            Family::Plane if scope.monloc_degree > 0 => {
                singletons(RingHandle::MonLoc, FamilyBounds::Degree(scope.monloc_family_degree()), &mut out)?
            }
            _ => {}
        }
    }
    Ok(out)
}

pub(crate) fn describe(scope: &Scope, families: &[Family]) -> String {
    let parts: Vec<String> = families
        .iter()
        .filter_map(|f| match f {
            Family::Residues if scope.zmod_max >= 2 => Some(format!("Z/n for n <= {}", scope.zmod_max)),
            Family::Products if scope.prod_max >= 2 => {
                Some(format!("Z/n x Z/m for n, m <= {}", scope.prod_max))
            }
            Family::Integers if scope.int_max >= 2 => Some(format!("mZ for m <= {}", scope.int_max)),
            Family::Inverted if scope.int_max >= 2 => {
                Some(format!("Zinv:s for s in {{2,3,5,7}}, generators <= {}", scope.int_max))
            }
            Family::Local => Some(format!("Zloc:p for p in {{2,3,5,7}}, exponents <= {LOCAL_EXPONENTS}")),
            Family::Plane if scope.monloc_degree > 0 => Some(format!(
                "kxy monomial ideals generated in degree <= {}, search degree {}",
                scope.monloc_family_degree(),
                scope.monloc_degree
            )),
            _ => None,
        })
        .collect();
    if parts.is_empty() {
        "empty".into()
    } else {
        parts.join("; ")
    }
}

/// Prime powers `p^k` with `p ∈ {2,3,5}`, `k ≤ 5`.
pub(crate) fn prime_power_chain() -> Vec<u64> {
    let mut out = Vec::new();
    for p in [2u64, 3, 5] {
        for k in 1..=5 {
            out.push(p.pow(k));
        }
    }
    out
}

/// All ideals of a finite ring with their products, containments,
/// radicals and cached verdicts, addressed by index.
pub(crate) struct Lattice {
    pub ring: RingHandle,
    pub ideals: Vec<Ideal>,
    judged: Vec<Prepared>,
    index: HashMap<Ideal, usize>,
    product: Vec<usize>,
    // contains[i * k + j]: ideal i contains ideal j
    contains: Vec<bool>,
    radical: Vec<usize>,
}

impl Lattice {
    pub fn new(scope: &Scope, ring: &RingHandle) -> Result<Lattice> {
        let ideals = enumerate_ideals(&IdealFamily::new(ring.clone(), FamilyBounds::Exhaustive))?;
        let k = ideals.len();
        let index: HashMap<Ideal, usize> = ideals.iter().cloned().enumerate().map(|(i, x)| (x, i)).collect();
        let mut product = Vec::with_capacity(k * k);
        let mut contains = Vec::with_capacity(k * k);
        for a in &ideals {
            for b in &ideals {
                product.push(index[&a.product(b)?]);
                contains.push(a.contains_ideal(b)?);
            }
        }
        let radical = ideals.iter().map(|i| index[&i.radical()]).collect();
        let classifier = scope.classifier();
        let judged = ideals.iter().map(|i| Prepared::new(classifier, i)).collect::<Result<_>>()?;
        Ok(Lattice { ring: ring.clone(), ideals, judged, index, product, contains, radical })
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn index_of(&self, ideal: &Ideal) -> usize {
        self.index[ideal]
    }

    pub fn product(&self, a: usize, b: usize) -> usize {
        self.product[a * self.len() + b]
    }

    /// `ideals[b] ⊆ ideals[a]`.
    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.contains[a * self.len() + b]
    }

    pub fn radical(&self, a: usize) -> usize {
        self.radical[a]
    }

    pub fn is_proper(&self, a: usize) -> bool {
        self.ideals[a].is_proper()
    }

    pub fn proper(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(|&i| self.is_proper(i))
    }

    pub fn decide(&self, a: usize, prop: Property) -> Result<Verdict> {
        self.judged[a].decide(prop)
    }
}
