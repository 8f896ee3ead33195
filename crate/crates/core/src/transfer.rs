//! Ring homomorphisms from a fixed catalogue (quotient maps, projections,
//! identities), contraction and extension of ideals along them, and
//! localizations of `Z`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;

use crate::arith;
use crate::error::{parse_err, Error, Result};
use crate::ideal::Ideal;
use crate::ring::{is_quasilocal, Element, RingHandle};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum HomKind {
    /// `Z -> Z/n` or `Z/n -> Z/d` with `d | n`.
    Quotient,
    /// `R1 x R2 -> R1` (`index` 1) or `-> R2` (`index` 2).
    Projection { index: u8 },
    Identity,
}

/// A ring homomorphism from the catalogue. Arbitrary maps are not accepted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingHom {
    source: RingHandle,
    target: RingHandle,
    kind: HomKind,
    kernel: Ideal,
}

impl RingHom {
    pub fn quotient(source: &RingHandle, target: &RingHandle) -> Result<RingHom> {
        let modulus = match (source, target) {
            (RingHandle::Int, RingHandle::ZMod(n)) => *n,
            (RingHandle::ZMod(n), RingHandle::ZMod(d)) if n % d == 0 => *d,
            _ => {
                return Err(Error::InvalidHom(format!(
                    "no quotient map {source} -> {target}; expected Z -> Z/n or Z/n -> Z/d with d | n"
                )))
            }
        };
        Ok(RingHom {
            source: source.clone(),
            target: target.clone(),
            kind: HomKind::Quotient,
            kernel: Ideal::modulus(source, modulus)?,
        })
    }

    pub fn projection(source: &RingHandle, index: u8) -> Result<RingHom> {
        let (l, r) = source
            .components()
            .ok_or_else(|| Error::InvalidHom(format!("{source} is not a product")))?;
        let (target, kernel) = match index {
            1 => (l.clone(), Ideal::pair(source, Ideal::zero(l), Ideal::whole(r))?),
            2 => (r.clone(), Ideal::pair(source, Ideal::whole(l), Ideal::zero(r))?),
            _ => return Err(Error::InvalidHom(format!("projection index {index}"))),
        };
        Ok(RingHom { source: source.clone(), target, kind: HomKind::Projection { index }, kernel })
    }

    pub fn identity(ring: &RingHandle) -> RingHom {
        RingHom {
            source: ring.clone(),
            target: ring.clone(),
            kind: HomKind::Identity,
            kernel: Ideal::zero(ring),
        }
    }

    pub fn source(&self) -> &RingHandle {
        &self.source
    }

    pub fn target(&self) -> &RingHandle {
        &self.target
    }

    pub fn kind(&self) -> HomKind {
        self.kind
    }

    pub fn kernel(&self) -> &Ideal {
        &self.kernel
    }

    /// Every catalogue map is onto.
    pub fn is_surjective(&self) -> bool {
        true
    }

    pub fn apply(&self, x: &Element) -> Result<Element> {
        self.source.check(x)?;
        Ok(match (self.kind, x) {
            (HomKind::Identity, _) => x.clone(),
            (HomKind::Quotient, Element::Integer(n)) => self.target.from_int(n),
            (HomKind::Quotient, Element::Residue(r)) => self.target.from_int(&BigInt::from(*r)),
            (HomKind::Projection { index }, Element::Pair(a, b)) => {
                if index == 1 { (**a).clone() } else { (**b).clone() }
            }
            _ => unreachable!("checked element"),
        })
    }
}

impl fmt::Display for RingHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            HomKind::Quotient => write!(f, "q:{}->{}", self.source, self.target),
            HomKind::Projection { index } => write!(f, "proj{index}:{}", self.source),
            HomKind::Identity => write!(f, "id:{}", self.source),
        }
    }
}

impl FromStr for RingHom {
    type Err = Error;

    /// `q:Z->Z/12`, `q:Z/8->Z/4`, `proj1:Z/4xZ/9`, `proj2:ZxZ`, `id:Z/8`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (head, body) = s
            .split_once(':')
            .ok_or_else(|| parse_err(s, "expected q:A->B, projN:AxB or id:A"))?;
        match head {
            "q" => {
                let (a, b) = body.split_once("->").ok_or_else(|| parse_err(body, "expected A->B"))?;
                RingHom::quotient(&a.parse()?, &b.parse()?)
            }
            "proj1" => RingHom::projection(&body.parse()?, 1),
            "proj2" => RingHom::projection(&body.parse()?, 2),
            "id" => Ok(RingHom::identity(&body.parse()?)),
            _ => Err(parse_err(head, "unknown homomorphism kind; expected q, proj1, proj2 or id")),
        }
    }
}

/// Which case of the transfer argument applies to a map.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum HypothesisBranch {
    /// The target is quasilocal, so nonunit preservation is required.
    QuasilocalTarget,
    /// The target is not quasilocal: 1-absorbing primary ideals there are
    /// the primary ones, whose contractions are primary.
    PrimaryRoute,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomHypotheses {
    pub identity_ok: bool,
    pub nonunit_preserving: bool,
    /// Least source nonunit mapped to a unit, if any.
    pub witness: Option<Element>,
    pub branch: HypothesisBranch,
    pub notes: Vec<String>,
}

impl HomHypotheses {
    /// Whether the map meets the hypotheses of its branch.
    pub fn holds(&self) -> bool {
        self.identity_ok && (self.nonunit_preserving || self.branch == HypothesisBranch::PrimaryRoute)
    }
}

// Least nonunit of the source (ascending canonical representative) whose
// image is a unit.
fn nonunit_to_unit(f: &RingHom) -> Option<Element> {
    match (&f.source, &f.target, f.kind) {
        (_, _, HomKind::Identity) => None,
        (RingHandle::Int, RingHandle::ZMod(n), _) => {
            // Classes mod n in ascending order of their least nonunit lift.
            (0..=*n + 1)
                .filter(|&x| x != 1)
                .find(|&x| arith::gcd(x % n, *n) == 1)
                .map(|x| Element::int(x as i64))
        }
        (RingHandle::ZMod(n), RingHandle::ZMod(d), _) => {
            if arith::factorize(*n).iter().all(|(p, _)| d % p == 0) {
                return None;
            }
            (0..*n)
                .find(|&x| arith::gcd(x, *n) > 1 && arith::gcd(x % d, *d) == 1)
                .map(Element::Residue)
        }
        (RingHandle::Prod(l, r), _, HomKind::Projection { index }) => Some(if index == 1 {
            Element::pair(l.one(), r.zero())
        } else {
            Element::pair(l.zero(), r.one())
        }),
        _ => unreachable!("catalogue map"),
    }
}

/// Checks `f(1) = 1` and whether `f` sends nonunits to nonunits, and
/// records which branch of the transfer argument applies.
pub fn check_hom_hypotheses(f: &RingHom) -> HomHypotheses {
    let one = f.apply(&f.source.one()).expect("source element");
    let identity_ok = one == f.target.one();
    let witness = nonunit_to_unit(f);
    let branch = if is_quasilocal(&f.target) {
        HypothesisBranch::QuasilocalTarget
    } else {
        HypothesisBranch::PrimaryRoute
    };
    let mut notes = Vec::new();
    if !identity_ok {
        notes.push(format!("f(1) = {one} is not the identity of {}", f.target));
    }
    if let Some(w) = &witness {
        let image = f.apply(w).expect("source element");
        notes.push(format!(
            "{w} is a nonunit of {} mapping to the unit {image} of {}",
            f.source, f.target
        ));
    }
    if branch == HypothesisBranch::PrimaryRoute {
        notes.push(format!(
            "{} is not quasilocal: nonunit preservation is not required and the conclusion follows from primary contraction",
            f.target
        ));
    }
    HomHypotheses { identity_ok, nonunit_preserving: witness.is_none(), witness, branch, notes }
}

fn expect_ring(ideal: &Ideal, ring: &RingHandle) -> Result<()> {
    ring.expect_same(ideal.ring())
}

/// The contraction `f⁻¹(J)`.
pub fn preimage_ideal(f: &RingHom, j: &Ideal) -> Result<Ideal> {
    expect_ring(j, &f.target)?;
    match f.kind {
        HomKind::Identity => Ok(j.clone()),
        HomKind::Quotient => Ideal::modulus(&f.source, j.generator().expect("modulus ideal")),
        HomKind::Projection { index } => {
            let (l, r) = f.source.components().expect("product");
            if index == 1 {
                Ideal::pair(&f.source, j.clone(), Ideal::whole(r))
            } else {
                Ideal::pair(&f.source, Ideal::whole(l), j.clone())
            }
        }
    }
}

/// The image `f(I)`, defined here when `f` is onto and `Ker(f) ⊆ I`.
pub fn image_ideal(f: &RingHom, i: &Ideal) -> Result<Ideal> {
    expect_ring(i, &f.source)?;
    if !f.is_surjective() {
        return Err(Error::NotSurjective(f.to_string()));
    }
    if !i.contains_ideal(&f.kernel)? {
        return Err(Error::KernelNotContained { kernel: f.kernel.to_string(), ideal: i.to_string() });
    }
    match f.kind {
        HomKind::Identity => Ok(i.clone()),
        HomKind::Quotient => Ideal::modulus(&f.target, i.generator().expect("modulus ideal")),
        HomKind::Projection { index } => {
            let (a, b) = i.components().expect("product ideal");
            Ok(if index == 1 { a } else { b })
        }
    }
}

/// A multiplicative subset of `Z` with its localization.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LocalizationSpec {
    /// `{1, s, s², ...}`, giving `Z[1/s]`.
    PowersOf(u64),
    /// `Z ∖ pZ`, giving `Z` localized at `p`.
    ComplementOf(u64),
}

impl LocalizationSpec {
    pub fn powers_of(s: u64) -> Result<Self> {
        RingHandle::int_inv(s)?;
        Ok(LocalizationSpec::PowersOf(s))
    }

    pub fn complement_of(p: u64) -> Result<Self> {
        RingHandle::int_loc(p)?;
        Ok(LocalizationSpec::ComplementOf(p))
    }

    pub fn target(&self) -> RingHandle {
        match *self {
            LocalizationSpec::PowersOf(s) => RingHandle::IntInv(s),
            LocalizationSpec::ComplementOf(p) => RingHandle::IntLoc(p),
        }
    }

    /// Whether `n ∈ S`.
    pub fn contains(&self, n: &BigInt) -> bool {
        match *self {
            LocalizationSpec::PowersOf(s) => {
                let s = BigInt::from(s);
                let mut power = BigInt::from(1);
                while power.magnitude() <= n.magnitude() {
                    if power == *n {
                        return true;
                    }
                    power *= &s;
                }
                false
            }
            LocalizationSpec::ComplementOf(p) => n % BigInt::from(p) != BigInt::from(0),
        }
    }
}

impl fmt::Display for LocalizationSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LocalizationSpec::PowersOf(s) => write!(f, "S={s}^k"),
            LocalizationSpec::ComplementOf(p) => write!(f, "S=comp({p})"),
        }
    }
}

impl FromStr for LocalizationSpec {
    type Err = Error;

    /// `S=2^k` or `S=comp(5)`.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().strip_prefix("S=").ok_or_else(|| parse_err(s, "expected S=s^k or S=comp(p)"))?;
        let number = |t: &str| t.parse::<u64>().map_err(|_| parse_err(t, "expected a positive integer"));
        if let Some(base) = body.strip_suffix("^k") {
            return LocalizationSpec::powers_of(number(base)?).map_err(|e| parse_err(s, e.to_string()));
        }
        if let Some(p) = body.strip_prefix("comp(").and_then(|t| t.strip_suffix(')')) {
            return LocalizationSpec::complement_of(number(p)?).map_err(|e| parse_err(s, e.to_string()));
        }
        Err(parse_err(body, "expected s^k or comp(p)"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Localization {
    pub extended: Ideal,
    /// `I ∩ S = ∅`.
    pub disjoint: bool,
    /// `S ∩ Z_I(Z) = ∅`.
    pub zdiv_disjoint: bool,
}

/// Extends a proper ideal `mZ` to `S⁻¹Z`.
pub fn localize(spec: &LocalizationSpec, i: &Ideal) -> Result<Localization> {
    expect_ring(i, &RingHandle::Int)?;
    i.require_proper()?;
    let m = i.generator().expect("modulus ideal");
    let extended = Ideal::modulus(&spec.target(), m)?;
    let (disjoint, zdiv_disjoint) = match *spec {
        LocalizationSpec::PowersOf(s) => {
            // s ∈ Z_I iff every power of s is.
            let disjoint = m == 0 || !arith::is_smooth_over(m, s);
            (disjoint, !i.in_zdiv(&Element::int(s as i64))?)
        }
        LocalizationSpec::ComplementOf(p) => {
            // S is generated by -1 and the primes other than p; only primes
            // dividing m can lie in Z_I.
            let mut zdiv_disjoint = true;
            if m != 0 {
                for (q, _) in arith::factorize(m).into_iter().filter(|(q, _)| *q != p) {
                    if i.in_zdiv(&Element::int(q as i64))? {
                        zdiv_disjoint = false;
                    }
                }
            }
            (m == 0 || m % p == 0, zdiv_disjoint)
        }
    };
    Ok(Localization { extended, disjoint, zdiv_disjoint })
}
