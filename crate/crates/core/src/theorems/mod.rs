//! Executable checks of the theory over enumerated instance families, and
//! the two certified constructions.
//!
//! Each verifier instantiates a result's hypothesis over its families and
//! checks the conclusion. An implication counts as violated only when its
//! hypothesis is proven and its conclusion refuted; instances left open by
//! bounded `kxy` searches are counted in the notes.

mod construct;
mod domains;
mod examples;
mod general;
mod lattice;
mod tally;
mod transfers;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Serialize, Serializer};

pub use construct::{construct_pm, construct_xm, maximal_ideal, Construction, ConstructionKind};

use crate::classify::{Classifier, MonomialBounds};
use crate::error::{Error, Result};

macro_rules! theorem_ids {
    ($($variant:ident => $id:literal),* $(,)?) => {
        /// Identifier of one executable check.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum TheoremId { $($variant),* }

        impl TheoremId {
            pub const ALL: &'static [TheoremId] = &[$(TheoremId::$variant),*];

            pub fn as_str(self) -> &'static str {
                match self { $(TheoremId::$variant => $id),* }
            }
        }
    };
}

theorem_ids! {
    ImplicationChain => "CHAIN",
    RadicalIsPrime => "T-1",
    NonPrimaryForcesLocal => "T0",
    NonLocalCollapse => "T1",
    ProductRings => "T1.5",
    ElementTimesMaximal => "T2",
    IrreducibleWitness => "T3",
    PrimeTimesMaximal => "T4",
    ColonIsPrimary => "T5",
    DividedRings => "T6",
    PrimePowers => "T8",
    ValuationDomains => "T9",
    PruferDomains => "T10",
    DedekindRadicals => "T11",
    DedekindPowers => "T12i",
    PrincipalIdealDomains => "C1",
    QuotientRings => "C2",
    SameRadicalIntersections => "T13",
    Homomorphisms => "T14",
    Localizations => "T15",
    IdealAbsorption => "T16",
    IdealTriples => "T17",
    MonomialExample => "EX-e1",
    IntegerExample => "EX-e2",
    ProductExample => "EX-prod",
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .iter()
            .copied()
            .find(|id| id.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

impl Serialize for TheoremId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// Deliberately false claims used to check that the harness can fail.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mutation {
    /// Replaces "1-absorbing primary ⇒ 2-absorbing primary" by its converse.
    TwoAbsorbingImpliesOneAbsorbing,
}

impl FromStr for Mutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "2abs-implies-1abs" => Ok(Mutation::TwoAbsorbingImpliesOneAbsorbing),
            _ => Err(crate::error::parse_err(s, "unknown mutation; expected 2abs-implies-1abs")),
        }
    }
}

/// Instance families for the verifiers. A bound below 2 (or a zero
/// degree) switches the corresponding family off.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scope {
    /// `Z/n` for `2 ≤ n ≤ zmod_max`.
    pub zmod_max: u64,
    /// `Z/n × Z/m` for `2 ≤ n, m ≤ prod_max`.
    pub prod_max: u64,
    /// Ideals `mZ` (and of `Z[1/s]`) for `m ≤ int_max`.
    pub int_max: u64,
    /// Search degree for `kxy`; its ideal family uses generators of degree
    /// at most `min(monloc_degree, 3)`.
    pub monloc_degree: u32,
    pub mutation: Option<Mutation>,
}

impl Default for Scope {
    fn default() -> Self {
        Scope { zmod_max: 100, prod_max: 12, int_max: 500, monloc_degree: 4, mutation: None }
    }
}

/// Largest bounds the residue scans accept.
const MAX_ZMOD: u64 = 5000;
const MAX_PROD: u64 = 70;
const MAX_DEGREE: u32 = 6;

impl Scope {
    /// Overrides both the `Z/n` and the integer modulus bounds.
    pub fn with_max_n(mut self, n: u64) -> Self {
        self.zmod_max = n;
        self.int_max = n;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let too_large = |what: String| Err(Error::ScopeTooLarge(what));
        if self.zmod_max > MAX_ZMOD {
            return too_large(format!("Z/n with n up to {} (limit {MAX_ZMOD})", self.zmod_max));
        }
        if self.int_max > MAX_ZMOD {
            return too_large(format!("integer moduli up to {} (limit {MAX_ZMOD})", self.int_max));
        }
        if self.prod_max > MAX_PROD {
            return too_large(format!("product components up to {} (limit {MAX_PROD})", self.prod_max));
        }
        if self.monloc_degree > MAX_DEGREE {
            return too_large(format!("kxy degree {} (limit {MAX_DEGREE})", self.monloc_degree));
        }
        Ok(())
    }

    pub(crate) fn classifier(&self) -> Classifier {
        Classifier::new(MonomialBounds { degree: self.monloc_degree.max(1), ..MonomialBounds::default() })
    }

    pub(crate) fn monloc_family_degree(&self) -> u32 {
        self.monloc_degree.min(3)
    }
}

/// A reported counterexample to a checked statement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub instance: String,
    pub witness: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub theorem: TheoremId,
    pub scope: String,
    pub instances_checked: u64,
    pub violations: Vec<Violation>,
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}: {} instances, {} violations [{}]",
            self.theorem,
            if self.passed() { "ok" } else { "FAILED" },
            self.instances_checked,
            self.violations.len(),
            self.scope
        )?;
        if let Some(ms) = self.elapsed_ms {
            write!(f, " {ms} ms")?;
        }
        Ok(())
    }
}

/// Runs one verifier over `scope`.
pub fn verify_theorem(id: TheoremId, scope: &Scope) -> Result<VerificationReport> {
    scope.validate()?;
    let start = Instant::now();
    let (description, tally) = match id {
        TheoremId::ImplicationChain => general::chain(scope)?,
        TheoremId::RadicalIsPrime => general::radical_is_prime(scope)?,
        TheoremId::NonPrimaryForcesLocal => general::non_primary_forces_local(scope)?,
        TheoremId::NonLocalCollapse => general::non_local_collapse(scope)?,
        TheoremId::ProductRings => general::product_rings(scope)?,
        TheoremId::ElementTimesMaximal => examples::element_times_maximal(scope)?,
        TheoremId::IrreducibleWitness => general::irreducible_witness(scope)?,
        TheoremId::PrimeTimesMaximal => examples::prime_times_maximal(scope)?,
        TheoremId::ColonIsPrimary => general::colon_is_primary(scope)?,
        TheoremId::DividedRings => domains::divided_rings(scope)?,
        TheoremId::PrimePowers => domains::prime_powers(scope)?,
        TheoremId::ValuationDomains => domains::valuation_domains(scope)?,
        TheoremId::PruferDomains => domains::prufer_domains(scope)?,
        TheoremId::DedekindRadicals => domains::dedekind_radicals(scope)?,
        TheoremId::DedekindPowers => domains::dedekind_powers(scope)?,
        TheoremId::PrincipalIdealDomains => domains::principal_ideal_domains(scope)?,
        TheoremId::QuotientRings => transfers::quotient_rings(scope)?,
        TheoremId::SameRadicalIntersections => general::same_radical_intersections(scope)?,
        TheoremId::Homomorphisms => transfers::homomorphisms(scope)?,
        TheoremId::Localizations => transfers::localizations(scope)?,
        TheoremId::IdealAbsorption => general::ideal_absorption(scope)?,
        TheoremId::IdealTriples => general::ideal_triples(scope)?,
        TheoremId::MonomialExample => examples::monomial_example(scope)?,
        TheoremId::IntegerExample => examples::integer_example(scope)?,
        TheoremId::ProductExample => examples::product_example(scope)?,
    };
    Ok(VerificationReport {
        theorem: id,
        scope: description,
        instances_checked: tally.instances,
        violations: tally.violations,
        notes: tally.notes,
        elapsed_ms: Some(start.elapsed().as_millis() as u64),
    })
}

/// Runs every verifier in id order.
pub fn verify_all(scope: &Scope) -> Result<Vec<VerificationReport>> {
    TheoremId::ALL.iter().map(|&id| verify_theorem(id, scope)).collect()
}
