//! Concrete ring backends, their elements, and ring-level predicates.
//!
//! Every backend is either finite (`ZMod`, products of `ZMod`s) or an
//! infinite ring whose ideal questions reduce exactly to a finite residue
//! system (`Int`, `IntLoc`, `IntInv`, products involving `Int`), except
//! `MonLoc`, the local ring `k[x,y]` at `(x,y)`, which only carries monomial
//! ideals.

mod element;
mod parse;
pub mod residue;
pub mod structure;

use std::fmt;
use std::str::FromStr;

pub use element::Element;
pub(crate) use element::abs_u64;
pub use residue::ResidueSystem;
pub use structure::{
    is_chained, is_divided, is_irreducible_element, is_prime_element, is_quasilocal,
};

use crate::arith;
use crate::error::{Error, Result};

/// A concrete commutative ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RingHandle {
    /// `Z/nZ`, `n ≥ 2`.
    ZMod(u64),
    /// Binary product; each component is `ZMod` or `Int`.
    Prod(Box<RingHandle>, Box<RingHandle>),
    /// The integers.
    Int,
    /// `Z` localized at the prime `p`: a discrete valuation ring.
    IntLoc(u64),
    /// `Z[1/s]`, `s ≥ 2`.
    IntInv(u64),
    /// `Q[x,y]` localized at `(x,y)`.
    MonLoc,
}

/// Largest modulus accepted for `ZMod` so that products of residues fit in
/// a `u128` intermediate.
pub const MAX_MODULUS: u64 = 1 << 62;

impl RingHandle {
    pub fn zmod(n: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidRing(format!("Z/{n} needs modulus at least 2")));
        }
        if n > MAX_MODULUS {
            return Err(Error::InvalidRing(format!("Z/{n} modulus too large")));
        }
        Ok(RingHandle::ZMod(n))
    }

    pub fn prod(left: RingHandle, right: RingHandle) -> Result<Self> {
        for side in [&left, &right] {
            if !matches!(side, RingHandle::ZMod(_) | RingHandle::Int) {
                return Err(Error::InvalidRing(format!(
                    "product components must be Z or Z/n, got {side}"
                )));
            }
        }
        Ok(RingHandle::Prod(Box::new(left), Box::new(right)))
    }

    pub fn int_loc(p: u64) -> Result<Self> {
        if !arith::is_prime(p) {
            return Err(Error::InvalidRing(format!("Zloc:{p} needs a prime")));
        }
        Ok(RingHandle::IntLoc(p))
    }

    pub fn int_inv(s: u64) -> Result<Self> {
        if s < 2 {
            return Err(Error::InvalidRing(format!("Zinv:{s} needs s at least 2")));
        }
        Ok(RingHandle::IntInv(s))
    }

    pub fn is_finite(&self) -> bool {
        match self {
            RingHandle::ZMod(_) => true,
            RingHandle::Prod(l, r) => l.is_finite() && r.is_finite(),
            _ => false,
        }
    }

    pub fn cardinality(&self) -> Option<u64> {
        match self {
            RingHandle::ZMod(n) => Some(*n),
            RingHandle::Prod(l, r) => l.cardinality()?.checked_mul(r.cardinality()?),
            _ => None,
        }
    }

    /// Known integral domains among the backends (finite ones by primality).
    pub fn is_domain(&self) -> bool {
        match self {
            RingHandle::ZMod(n) => arith::is_prime(*n),
            RingHandle::Prod(..) => false,
            _ => true,
        }
    }

    pub fn components(&self) -> Option<(&RingHandle, &RingHandle)> {
        match self {
            RingHandle::Prod(l, r) => Some((l, r)),
            _ => None,
        }
    }

    pub(crate) fn mismatch(&self, found: impl fmt::Display) -> Error {
        Error::BackendMismatch {
            expected: self.to_string(),
            found: found.to_string(),
        }
    }

    pub(crate) fn expect_same(&self, other: &RingHandle) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(self.mismatch(other))
        }
    }
}

impl fmt::Display for RingHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingHandle::ZMod(n) => write!(f, "Z/{n}"),
            RingHandle::Prod(l, r) => write!(f, "{l}x{r}"),
            RingHandle::Int => write!(f, "Z"),
            RingHandle::IntLoc(p) => write!(f, "Zloc:{p}"),
            RingHandle::IntInv(s) => write!(f, "Zinv:{s}"),
            RingHandle::MonLoc => write!(f, "kxy"),
        }
    }
}

fn parse_u64(token: &str, what: &str) -> Result<u64> {
    token
        .parse::<u64>()
        .map_err(|_| crate::error::parse_err(token, format!("expected {what}")))
}

fn parse_simple_ring(s: &str) -> Result<RingHandle> {
    let bad = |m: &str| crate::error::parse_err(s, m);
    if s == "Z" {
        return Ok(RingHandle::Int);
    }
    if s == "kxy" {
        return Ok(RingHandle::MonLoc);
    }
    if let Some(n) = s.strip_prefix("Z/") {
        return RingHandle::zmod(parse_u64(n, "a modulus")?).map_err(|e| bad(&e.to_string()));
    }
    if let Some(p) = s.strip_prefix("Zloc:") {
        return RingHandle::int_loc(parse_u64(p, "a prime")?).map_err(|e| bad(&e.to_string()));
    }
    if let Some(q) = s.strip_prefix("Zinv:") {
        return RingHandle::int_inv(parse_u64(q, "an integer s >= 2")?)
            .map_err(|e| bad(&e.to_string()));
    }
    Err(bad("unknown ring; expected Z, Z/n, Zloc:p, Zinv:s, kxy or a product AxB"))
}

impl FromStr for RingHandle {
    type Err = Error;

    /// `Z`, `Z/12`, `Z/4xZ/9`, `ZxZ`, `Zloc:5`, `Zinv:2`, `kxy`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "kxy" {
            return Ok(RingHandle::MonLoc);
        }
        let parts: Vec<&str> = s.split('x').collect();
        match parts.as_slice() {
            [single] => parse_simple_ring(single),
            [l, r] => {
                let left = parse_simple_ring(l)?;
                let right = parse_simple_ring(r)?;
                RingHandle::prod(left, right).map_err(|e| crate::error::parse_err(s, e.to_string()))
            }
            _ => Err(crate::error::parse_err(s, "at most two product components")),
        }
    }
}
