//! Counting instances and collecting violations.

use rayon::prelude::*;

use super::Violation;
use crate::classify::{Status, Verdict};
use crate::error::Result;

#[derive(Debug, Default)]
pub(crate) struct Tally {
    pub instances: u64,
    pub violations: Vec<Violation>,
    pub notes: Vec<String>,
    /// Implications whose hypothesis or conclusion stayed unfalsified.
    pub open: u64,
}

pub(crate) fn witness_strings(v: &Verdict) -> Vec<String> {
    v.witness_elements().iter().map(|e| e.to_string()).collect()
}

impl Tally {
    pub fn violation(&mut self, instance: impl Into<String>, witness: Vec<String>) {
        self.violations.push(Violation { instance: instance.into(), witness });
    }

    /// Records a violation unless `ok`.
    pub fn expect(&mut self, ok: bool, instance: impl FnOnce() -> String, witness: impl FnOnce() -> Vec<String>) {
        if !ok {
            self.violation(instance(), witness());
        }
    }

    /// `a ⇒ b`: violated when `a` is proven and `b` refuted, with `b`'s
    /// witness.
    pub fn implies(&mut self, a: &Verdict, b: &Verdict, instance: impl FnOnce() -> String) {
        match (a.status, b.status) {
            (Status::Proven, Status::Refuted) => self.violation(instance(), witness_strings(b)),
            (Status::Unfalsified, _) | (Status::Proven, Status::Unfalsified) => self.open += 1,
            _ => {}
        }
    }

    /// `a ⇔ b` on decided verdicts.
    pub fn equivalent(&mut self, a: &Verdict, b: &Verdict, instance: impl Fn() -> String) {
        self.implies(a, b, &instance);
        self.implies(b, a, &instance);
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    pub fn merge(&mut self, other: Tally) {
        self.instances += other.instances;
        self.violations.extend(other.violations);
        self.notes.extend(other.notes);
        self.open += other.open;
    }

    /// Appends the open count, if any, to the notes.
    pub fn finish(mut self) -> Tally {
        if self.open > 0 {
            let open = self.open;
            self.note(format!("{open} implications left open by the bounded kxy search"));
        }
        self
    }
}

/// Runs `f` over `items` in parallel and merges the tallies in item order.
pub(crate) fn par_tally<T: Sync>(items: &[T], f: impl Fn(&T) -> Result<Tally> + Sync + Send) -> Result<Tally> {
    let parts: Vec<Result<Tally>> = items.par_iter().map(&f).collect();
    let mut total = Tally::default();
    for part in parts {
        total.merge(part?);
    }
    Ok(total)
}
