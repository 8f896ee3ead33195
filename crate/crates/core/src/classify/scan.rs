//! Exhaustive residue-class scans. Every search walks its first coordinate
//! in parallel with `find_map_first`, so the reported witness is the
//! lexicographically least one regardless of thread count.

use std::sync::OnceLock;

use fixedbitset::{Block, FixedBitSet};
use rayon::prelude::*;

use super::Witness;
use crate::error::Result;
use crate::ideal::Ideal;
use crate::ring::ResidueSystem;

const BITS: usize = Block::BITS as usize;

pub(crate) struct ScanTables {
    sys: ResidueSystem,
    in_ideal: FixedBitSet,
    in_radical: FixedBitSet,
    // colon[x] = { c : xc ∈ I }, rad_colon[a] = { c : ac ∈ √I }
    colon: Vec<OnceLock<FixedBitSet>>,
    rad_colon: Vec<OnceLock<FixedBitSet>>,
    // least nonunit c ∉ √I with xc ∈ I, per class x
    least_bad_c: Vec<OnceLock<Option<usize>>>,
}

// First index set in `a & !b & !c`.
fn first_and_not2(a: &FixedBitSet, b: &FixedBitSet, c: &FixedBitSet) -> Option<usize> {
    let (a, b, c) = (a.as_slice(), b.as_slice(), c.as_slice());
    for w in 0..a.len() {
        let bits = a[w] & !b[w] & !c[w];
        if bits != 0 {
            return Some(w * BITS + bits.trailing_zeros() as usize);
        }
    }
    None
}

// First index set in `a & !b`.
fn first_and_not(a: &FixedBitSet, b: &FixedBitSet) -> Option<usize> {
    let (a, b) = (a.as_slice(), b.as_slice());
    for w in 0..a.len() {
        let bits = a[w] & !b[w];
        if bits != 0 {
            return Some(w * BITS + bits.trailing_zeros() as usize);
        }
    }
    None
}

impl ScanTables {
    pub fn new(ideal: &Ideal) -> Result<ScanTables> {
        let sys = ResidueSystem::for_ideal(ideal)?;
        let in_ideal = sys.members(ideal)?;
        let in_radical = sys.members(&ideal.radical())?;
        let n = sys.len();
        Ok(ScanTables {
            sys,
            in_ideal,
            in_radical,
            colon: (0..n).map(|_| OnceLock::new()).collect(),
            rad_colon: (0..n).map(|_| OnceLock::new()).collect(),
            least_bad_c: (0..n).map(|_| OnceLock::new()).collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.sys.len()
    }

    fn preimage(&self, x: usize, target: &FixedBitSet) -> FixedBitSet {
        let mut set = FixedBitSet::with_capacity(self.len());
        for c in 0..self.len() {
            if target.contains(self.sys.mul(x, c)) {
                set.insert(c);
            }
        }
        set
    }

    fn colon(&self, x: usize) -> &FixedBitSet {
        self.colon[x].get_or_init(|| self.preimage(x, &self.in_ideal))
    }

    fn rad_colon(&self, a: usize) -> &FixedBitSet {
        self.rad_colon[a].get_or_init(|| self.preimage(a, &self.in_radical))
    }

    fn least_bad_c(&self, x: usize) -> Option<usize> {
        *self.least_bad_c[x].get_or_init(|| {
            self.colon(x)
                .ones()
                .find(|&c| self.sys.is_nonunit(c) && !self.in_radical.contains(c))
        })
    }

    pub fn witness(&self, classes: &[usize]) -> Witness {
        let elements = classes.iter().map(|&i| self.sys.lift(i).clone()).collect();
        if self.sys.is_whole_ring() {
            Witness::new(elements)
        } else {
            Witness::with_residues(elements, classes.iter().map(|&i| self.sys.label(i)).collect())
        }
    }

    /// `(a, b)` with `ab ∈ I`, `a ∉ I`, `b ∉ I`.
    pub fn prime_witness(&self) -> Option<[usize; 2]> {
        (0..self.len())
            .into_par_iter()
            .filter(|&a| !self.in_ideal.contains(a))
            .find_map_first(|a| first_and_not(self.colon(a), &self.in_ideal).map(|b| [a, b]))
    }

    /// `(a, b)` with `ab ∈ I`, `a ∉ I`, `b ∉ √I`.
    pub fn primary_witness(&self) -> Option<[usize; 2]> {
        (0..self.len())
            .into_par_iter()
            .filter(|&a| !self.in_ideal.contains(a))
            .find_map_first(|a| first_and_not(self.colon(a), &self.in_radical).map(|b| [a, b]))
    }

    /// Nonunit `(a, b, c)` with `abc ∈ I`, `ab ∉ I`, `c ∉ √I`.
    pub fn one_absorbing_witness(&self) -> Option<[usize; 3]> {
        let nonunits: Vec<usize> = self.sys.nonunits().ones().collect();
        nonunits.par_iter().find_map_first(|&a| {
            nonunits.iter().find_map(|&b| {
                let x = self.sys.mul(a, b);
                if self.in_ideal.contains(x) {
                    return None;
                }
                self.least_bad_c(x).map(|c| [a, b, c])
            })
        })
    }

    /// `(a, b, c)` with `abc ∈ I` and `ab ∉ I`, `ac ∉ √I`, `bc ∉ √I`.
    pub fn two_absorbing_primary_witness(&self) -> Option<[usize; 3]> {
        (0..self.len())
            .into_par_iter()
            .filter(|&a| !self.in_radical.contains(a))
            .find_map_first(|a| {
                (0..self.len()).filter(|&b| !self.in_radical.contains(b)).find_map(|b| {
                    let x = self.sys.mul(a, b);
                    if self.in_ideal.contains(x) {
                        return None;
                    }
                    first_and_not2(self.colon(x), self.rad_colon(a), self.rad_colon(b))
                        .map(|c| [a, b, c])
                })
            })
    }

    /// `(a, b, c)` with `abc ∈ I` and none of `ab, ac, bc` in `I`.
    pub fn two_absorbing_witness(&self) -> Option<[usize; 3]> {
        (0..self.len())
            .into_par_iter()
            .filter(|&a| !self.in_ideal.contains(a))
            .find_map_first(|a| {
                (0..self.len()).filter(|&b| !self.in_ideal.contains(b)).find_map(|b| {
                    let x = self.sys.mul(a, b);
                    if self.in_ideal.contains(x) {
                        return None;
                    }
                    first_and_not2(self.colon(x), self.colon(a), self.colon(b)).map(|c| [a, b, c])
                })
            })
    }
}
