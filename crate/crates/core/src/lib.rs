//! Exact decision procedures for prime, primary, 1-absorbing primary,
//! 2-absorbing primary and 2-absorbing ideals over concrete commutative
//! rings, with executable checks of the surrounding theory.

pub mod arith;
pub mod classify;
pub mod error;
pub mod ideal;
pub mod poly;
pub mod ring;
pub mod theorems;
pub mod transfer;

pub use classify::{
    classify_report, fast_one_absorbing, is_maximal_ideal, is_one_absorbing_primary, is_primary,
    is_prime_ideal, is_two_absorbing, is_two_absorbing_primary, ClassificationReport, Classifier,
    Method, MonomialBounds, Property, Status, Verdict, Witness,
};
pub use error::{Error, Result};
pub use ideal::{enumerate_ideals, FamilyBounds, Ideal, IdealFamily};
pub use ring::{Element, ResidueSystem, RingHandle};
pub use theorems::{verify_all, verify_theorem, Scope, TheoremId, VerificationReport};
