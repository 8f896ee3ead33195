//! Checks over arbitrary rings: the implication chain, radicals,
//! quasilocality, products, colon ideals, intersections and the ideal-form
//! characterizations.

use std::collections::HashMap;

use super::lattice::{describe, finite_rings, groups, Family, Lattice};
use super::tally::{par_tally, witness_strings, Tally};
use super::{Mutation, Scope};
use crate::classify::{MonomialBounds, Prepared, Property, Verdict};
use crate::error::Result;
use crate::ideal::{enumerate_ideals, FamilyBounds, Ideal, IdealFamily};
use crate::poly::{Monomial, Poly};
use crate::ring::{is_irreducible_element, is_quasilocal, Element, ResidueSystem, RingHandle};

const ALL: [Family; 6] =
    [Family::Residues, Family::Products, Family::Integers, Family::Inverted, Family::Local, Family::Plane];

type Check<'a> = dyn Fn(&RingHandle, &Ideal, &Prepared, &mut Tally) -> Result<()> + Sync + 'a;

/// Runs `f` on every proper ideal of the kept rings; improper ideals count
/// as vacuous instances.
pub(super) fn per_ideal(scope: &Scope, families: &[Family], keep: &(dyn Fn(&RingHandle) -> bool + Sync), f: &Check) -> Result<Tally> {
    let classifier = scope.classifier();
    let groups = groups(scope, families)?;
    par_tally(&groups, |(ring, ideals)| {
        let mut t = Tally::default();
        if !keep(ring) {
            return Ok(t);
        }
        for i in ideals {
            t.instances += 1;
            if i.is_proper() {
                f(ring, i, &Prepared::new(classifier, i)?, &mut t)?;
            }
        }
        Ok(t)
    })
    .map(Tally::finish)
}

pub(super) fn all_rings(_: &RingHandle) -> bool {
    true
}

pub(super) fn label(ring: &RingHandle, ideal: &Ideal) -> String {
    format!("{ring} {ideal}")
}

pub(super) fn chain(scope: &Scope) -> Result<(String, Tally)> {
    match scope.mutation {
        None => {
            let t = per_ideal(scope, &ALL, &all_rings, &|ring, i, p, t| {
                let primary = p.decide(Property::Primary)?;
                let one = p.decide(Property::OneAbsorbingPrimary)?;
                let two = p.decide(Property::TwoAbsorbingPrimary)?;
                t.implies(&primary, &one, || format!("{}: primary but not 1-absorbing primary", label(ring, i)));
                t.implies(&one, &two, || {
                    format!("{}: 1-absorbing primary but not 2-absorbing primary", label(ring, i))
                });
                Ok(())
            })?;
            Ok((describe(scope, &ALL), t))
        }
        Some(Mutation::TwoAbsorbingImpliesOneAbsorbing) => {
            let families = [Family::Integers];
            let mut t = per_ideal(scope, &families, &all_rings, &|ring, i, p, t| {
                let primary = p.decide(Property::Primary)?;
                let one = p.decide(Property::OneAbsorbingPrimary)?;
                let two = p.decide(Property::TwoAbsorbingPrimary)?;
                t.implies(&primary, &one, || format!("{}: primary but not 1-absorbing primary", label(ring, i)));
                t.implies(&two, &one, || {
                    format!("{}: 2-absorbing primary but not 1-absorbing primary", label(ring, i))
                });
                Ok(())
            })?;
            t.note("mutated: checks the false converse 2-absorbing primary => 1-absorbing primary");
            Ok((describe(scope, &families), t))
        }
    }
}

pub(super) fn radical_is_prime(scope: &Scope) -> Result<(String, Tally)> {
    let classifier = scope.classifier();
    let t = per_ideal(scope, &ALL, &all_rings, &|ring, i, p, t| {
        let one = p.decide(Property::OneAbsorbingPrimary)?;
        if one.is_refuted() {
            return Ok(());
        }
        let rad = i.radical();
        let prime = classifier.decide(&rad, Property::Prime)?;
        t.implies(&one, &prime, || format!("{}: radical {rad} is not prime", label(ring, i)));
        Ok(())
    })?;
    Ok((describe(scope, &ALL), t))
}

pub(super) fn non_primary_forces_local(scope: &Scope) -> Result<(String, Tally)> {
    let mut found = Vec::new();
    let t = per_ideal(scope, &ALL, &all_rings, &|ring, i, p, t| {
        let one = p.decide(Property::OneAbsorbingPrimary)?;
        let primary = p.decide(Property::Primary)?;
        if one.is_proven() && primary.is_refuted() {
            t.note(format!("{}: 1-absorbing primary, not primary", label(ring, i)));
            t.expect(is_quasilocal(ring), || format!("{ring} is not quasilocal"), || witness_strings(&primary));
        }
        Ok(())
    })?;
    // Keep the notes short: count the examples, show the first few.
    let mut t = t;
    let examples = std::mem::take(&mut t.notes);
    let (witnesses, rest): (Vec<String>, Vec<String>) =
        examples.into_iter().partition(|n| n.contains("1-absorbing primary, not primary"));
    found.extend(witnesses);
    t.notes = rest;
    if !found.is_empty() {
        let shown: Vec<&str> = found.iter().take(3).map(|s| s.as_str()).collect();
        t.note(format!("{} non-primary 1-absorbing primary ideals, e.g. {}", found.len(), shown.join("; ")));
    }
    Ok((describe(scope, &ALL), t))
}

pub(super) fn non_local_collapse(scope: &Scope) -> Result<(String, Tally)> {
    let families = [Family::Residues, Family::Products, Family::Integers, Family::Inverted];
    let t = per_ideal(scope, &families, &|r| !is_quasilocal(r), &|ring, i, p, t| {
        let one = p.decide(Property::OneAbsorbingPrimary)?;
        let primary = p.decide(Property::Primary)?;
        t.equivalent(&one, &primary, || format!("{}: 1-absorbing primary differs from primary", label(ring, i)));
        Ok(())
    })?;
    Ok((format!("non-quasilocal rings among {}", describe(scope, &families)), t))
}

fn mixed_products() -> Vec<RingHandle> {
    let z = || Box::new(RingHandle::Int);
    vec![
        RingHandle::Prod(z(), z()),
        RingHandle::Prod(Box::new(RingHandle::ZMod(4)), z()),
        RingHandle::Prod(z(), Box::new(RingHandle::ZMod(6))),
    ]
}

const MIXED_MODULI: u64 = 12;

pub(super) fn product_rings(scope: &Scope) -> Result<(String, Tally)> {
    let classifier = scope.classifier();
    let mut items: Vec<(RingHandle, Ideal)> = Vec::new();
    for ring in super::lattice::product_rings(scope) {
        for i in enumerate_ideals(&IdealFamily::new(ring.clone(), FamilyBounds::Exhaustive))? {
            items.push((ring.clone(), i));
        }
    }
    for ring in mixed_products() {
        for i in enumerate_ideals(&IdealFamily::new(ring.clone(), FamilyBounds::Moduli(0..=MIXED_MODULI)))? {
            items.push((ring.clone(), i));
        }
    }
    let t = par_tally(&items, |(ring, j)| {
        let mut t = Tally { instances: 1, ..Tally::default() };
        if !j.is_proper() {
            return Ok(t);
        }
        let p = Prepared::new(classifier, j)?;
        let one = p.decide(Property::OneAbsorbingPrimary)?;
        let primary = p.decide(Property::Primary)?;
        t.equivalent(&one, &primary, || format!("{}: 1-absorbing primary differs from primary", label(ring, j)));
        let (a, b) = j.components().expect("product ideal");
        let form = (!b.is_proper() && classifier.decide(&a, Property::Primary)?.is_proven())
            || (!a.is_proper() && classifier.decide(&b, Property::Primary)?.is_proven());
        t.expect(
            form == primary.is_proven(),
            || format!("{}: primary is {:?} but the componentwise form gives {form}", label(ring, j), primary.status),
            || witness_strings(&primary),
        );
        Ok(t)
    })?;
    let scope_text = format!(
        "{}; ZxZ, Z/4xZ, ZxZ/6 with generators <= {MIXED_MODULI}",
        describe(scope, &[Family::Products])
    );
    Ok((scope_text, t.finish()))
}

/// Nonunit elements to quantify over in `ideal`'s ring: every nonunit of a
/// finite ring, one nonunit lift per residue class modulo a nonzero ideal of
/// `Z` or `Z[1/s]`, `p^j` and `p^j·u` in `Zloc:p`, small integers for zero
/// ideals, bounded polynomials in `kxy`.
pub(super) fn nonunit_candidates(ideal: &Ideal, kxy: &[Element]) -> Result<Vec<Element>> {
    let ring = ideal.ring();
    if *ring == RingHandle::MonLoc {
        return Ok(kxy.to_vec());
    }
    if let (RingHandle::IntLoc(p), Some(Some(k))) = (ring, ideal.exponent()) {
        // Nonunits are p^j·u; membership and colons depend only on j.
        let u = if *p == 2 { 3 } else { 2 };
        let mut out = Vec::new();
        for j in 1..=k.max(1) {
            let pj = (*p as i64).pow(j);
            out.push(ring.from_i64(pj));
            out.push(ring.from_i64(pj * u));
        }
        return Ok(out);
    }
    let sys = if ring.is_finite() {
        ResidueSystem::of_finite_ring(ring)?
    } else if ideal.is_zero_ideal() {
        let mut out = Vec::new();
        for k in 2..=12 {
            let x = ring.from_i64(k);
            if !ring.is_unit(&x)? {
                out.push(x);
            }
        }
        return Ok(out);
    } else {
        ResidueSystem::for_ideal(ideal)?
    };
    Ok(sys.nonunits().ones().map(|i| sys.lift(i).clone()).collect())
}

pub(super) fn plane_polynomials(degree: u32) -> Vec<Element> {
    MonomialBounds { degree, terms: 2 }.candidates().into_iter().map(Element::poly).collect()
}

fn plane_monomials(degree: u32) -> Vec<Element> {
    Monomial::up_to_degree(1, degree).into_iter().map(|m| Element::poly(Poly::monomial(m))).collect()
}

pub(super) fn irreducible_witness(scope: &Scope) -> Result<(String, Tally)> {
    let families = [Family::Residues, Family::Products, Family::Integers, Family::Local, Family::Plane];
    let degree = scope.monloc_degree.min(3);
    let kxy = plane_polynomials(degree);
    let t = per_ideal(scope, &families, &all_rings, &|ring, i, p, t| {
        let one = p.decide(Property::OneAbsorbingPrimary)?;
        let primary = p.decide(Property::Primary)?;
        if !(one.is_proven() && primary.is_refuted()) {
            return Ok(());
        }
        let candidates = nonunit_candidates(i, &kxy)?;
        let mut irreducible: HashMap<usize, Verdict> = HashMap::new();
        let mut pairs = 0u64;
        for (ai, a) in candidates.iter().enumerate() {
            if i.contains(a)? {
                continue;
            }
            for b in &candidates {
                if i.radical_contains(b)? || !i.contains(&ring.mul(a, b)?)? {
                    continue;
                }
                pairs += 1;
                if !irreducible.contains_key(&ai) {
                    irreducible.insert(ai, is_irreducible_element(ring, a)?);
                }
                let v = &irreducible[&ai];
                if v.is_refuted() {
                    t.violation(
                        format!("{}: {a}*{b} in I with {a} not in I, {b} not in the radical, but {a} = {}", label(ring, i), witness_strings(v).join("*")),
                        vec![a.to_string(), b.to_string()],
                    );
                } else if !v.is_proven() {
                    t.open += 1;
                }
            }
        }
        t.note(format!("{}: {pairs} primary-refuting pairs, first coordinates irreducible", label(ring, i)));
        Ok(())
    })?;
    Ok((format!("{}; kxy pairs of degree <= {degree} with at most 2 terms", describe(scope, &families)), t))
}

pub(super) fn colon_is_primary(scope: &Scope) -> Result<(String, Tally)> {
    let families = [Family::Residues, Family::Products, Family::Integers, Family::Local, Family::Plane];
    let classifier = scope.classifier();
    let kxy = plane_monomials(scope.monloc_degree);
    let groups = groups(scope, &families)?;
    let t = par_tally(&groups, |(ring, ideals)| {
        let mut t = Tally::default();
        let mut primary: HashMap<Ideal, Verdict> = HashMap::new();
        for i in ideals.iter().filter(|i| i.is_proper()) {
            let one = Prepared::new(classifier, i)?.decide(Property::OneAbsorbingPrimary)?;
            if one.is_refuted() {
                continue;
            }
            for c in nonunit_candidates(i, &kxy)? {
                if i.contains(&c)? {
                    continue;
                }
                t.instances += 1;
                let colon = i.colon(&c)?;
                if !primary.contains_key(&colon) {
                    primary.insert(colon.clone(), classifier.decide(&colon, Property::Primary)?);
                }
                let v = &primary[&colon];
                let at = || format!("{}: ({} : {c}) = {colon}", label(ring, i), i);
                t.implies(&one, v, || format!("{} is not primary", at()));
                if one.is_proven() {
                    if i.radical_contains(&c)? {
                        // c ∈ √I ∖ I forces I ⊊ (I : c)
                        t.expect(colon != *i, || format!("{} does not grow", at()), || vec![c.to_string()]);
                    } else {
                        t.expect(
                            colon.radical() == i.radical(),
                            || format!("{} has radical {}", at(), colon.radical()),
                            || vec![c.to_string()],
                        );
                    }
                }
            }
        }
        Ok(t)
    })?;
    let text = format!("{}; colons by kxy monomials of degree <= {}", describe(scope, &families), scope.monloc_degree);
    Ok((text, t.finish()))
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

const MAX_SUBSET: usize = 3;

/// Intersections of up to three 1-absorbing primary ideals sharing a
/// radical `P` are 1-absorbing primary with radical `P`.
pub(super) fn same_radical_intersections(scope: &Scope) -> Result<(String, Tally)> {
    let families = [Family::Residues, Family::Products, Family::Plane];
    let classifier = scope.classifier();
    let groups: Vec<(RingHandle, Vec<Ideal>)> = {
        let mut merged: Vec<(RingHandle, Vec<Ideal>)> = Vec::new();
        for (ring, ideals) in groups(scope, &families)? {
            match merged.last_mut() {
                Some((r, v)) if *r == ring => v.extend(ideals),
                _ => merged.push((ring, ideals)),
            }
        }
        merged
    };
    let t = par_tally(&groups, |(ring, ideals)| {
        let mut t = Tally::default();
        let mut by_radical: Vec<(Ideal, Vec<Ideal>)> = Vec::new();
        for i in ideals.iter().filter(|i| i.is_proper()) {
            if !classifier.decide(i, Property::OneAbsorbingPrimary)?.is_proven() {
                continue;
            }
            let rad = i.radical();
            match by_radical.iter_mut().find(|(r, _)| *r == rad) {
                Some((_, v)) => v.push(i.clone()),
                None => by_radical.push((rad, vec![i.clone()])),
            }
        }
        let mut verdicts: HashMap<Ideal, Verdict> = HashMap::new();
        for (rad, members) in &by_radical {
            for k in 1..=MAX_SUBSET.min(members.len()) {
                for subset in combinations(members.len(), k) {
                    t.instances += 1;
                    let mut meet = members[subset[0]].clone();
                    for &j in &subset[1..] {
                        meet = meet.intersect(&members[j])?;
                    }
                    let names = || subset.iter().map(|&j| members[j].to_string()).collect::<Vec<_>>().join(" & ");
                    t.expect(
                        meet.radical() == *rad,
                        || format!("{ring}: radical of {} is {}, not {rad}", names(), meet.radical()),
                        Vec::new,
                    );
                    if !verdicts.contains_key(&meet) {
                        verdicts.insert(meet.clone(), classifier.decide(&meet, Property::OneAbsorbingPrimary)?);
                    }
                    let v = &verdicts[&meet];
                    if v.is_refuted() {
                        t.violation(
                            format!("{ring}: intersection {meet} of {} is not 1-absorbing primary", names()),
                            witness_strings(v),
                        );
                    } else if !v.is_proven() {
                        t.open += 1;
                    }
                }
            }
        }
        Ok(t)
    })?;
    Ok((format!("subsets of size <= {MAX_SUBSET} over {}", describe(scope, &families)), t.finish()))
}

/// Per finite ring: for each principal ideal `q`, how many nonunit pairs
/// `(a, b)` have `abR = q`, with one such pair.
fn nonunit_products(lattice: &Lattice) -> Result<Vec<(usize, u64, (Element, Element))>> {
    let sys = ResidueSystem::of_finite_ring(&lattice.ring)?;
    let principal: Vec<usize> = (0..sys.len())
        .map(|x| Ok(lattice.index_of(&Ideal::principal(&lattice.ring, sys.lift(x))?)))
        .collect::<Result<_>>()?;
    let mut counts: Vec<Option<(u64, (usize, usize))>> = vec![None; lattice.len()];
    let nonunits: Vec<usize> = sys.nonunits().ones().collect();
    for &a in &nonunits {
        for &b in &nonunits {
            let q = principal[sys.mul(a, b)];
            match &mut counts[q] {
                Some((n, _)) => *n += 1,
                slot => *slot = Some((1, (a, b))),
            }
        }
    }
    Ok(counts
        .into_iter()
        .enumerate()
        .filter_map(|(q, c)| c.map(|(n, (a, b))| (q, n, (sys.lift(a).clone(), sys.lift(b).clone()))))
        .collect())
}

fn finite_lattices(scope: &Scope) -> Vec<RingHandle> {
    finite_rings(scope)
}

/// `abJ ⊆ I` for nonunits `a, b` and proper `J` forces `ab ∈ I` or
/// `J ⊆ √I`. Both sides depend on `(a, b)` only through `abR`, so pairs are
/// grouped by that principal ideal and each `(a, b, J)` triple is counted.
pub(super) fn ideal_absorption(scope: &Scope) -> Result<(String, Tally)> {
    let rings = finite_lattices(scope);
    let t = par_tally(&rings, |ring| {
        let mut t = Tally::default();
        let l = Lattice::new(scope, ring)?;
        let products = nonunit_products(&l)?;
        let proper: Vec<usize> = l.proper().collect();
        for &i in &proper {
            if !l.decide(i, Property::OneAbsorbingPrimary)?.is_proven() {
                continue;
            }
            let rad = l.radical(i);
            for (q, count, (a, b)) in &products {
                for &j in &proper {
                    t.instances += count;
                    let holds = !l.contains(i, l.product(*q, j)) || l.contains(i, *q) || l.contains(rad, j);
                    t.expect(
                        holds,
                        || format!("{ring} {}: ab J in I with ab, J = {} outside", l.ideals[i], l.ideals[j]),
                        || vec![a.to_string(), b.to_string()],
                    );
                }
            }
        }
        Ok(t)
    })?;
    Ok((describe(scope, &[Family::Residues, Family::Products]), t))
}

/// `I` is 1-absorbing primary iff for all proper `I₁, I₂, I₃`,
/// `I₁I₂I₃ ⊆ I` implies `I₁I₂ ⊆ I` or `I₃ ⊆ √I`; checked against the
/// element-level verdict.
pub(super) fn ideal_triples(scope: &Scope) -> Result<(String, Tally)> {
    let rings = finite_lattices(scope);
    let t = par_tally(&rings, |ring| {
        let mut t = Tally::default();
        let l = Lattice::new(scope, ring)?;
        let proper: Vec<usize> = l.proper().collect();
        for &i in &proper {
            let rad = l.radical(i);
            let mut failure = None;
            for &a in &proper {
                for &b in &proper {
                    let ab = l.product(a, b);
                    for &c in &proper {
                        t.instances += 1;
                        let inside = l.contains(i, l.product(ab, c));
                        if failure.is_none() && inside && !l.contains(i, ab) && !l.contains(rad, c) {
                            failure = Some([a, b, c]);
                        }
                    }
                }
            }
            let one = l.decide(i, Property::OneAbsorbingPrimary)?;
            let ideal_form = failure.is_none();
            t.expect(
                ideal_form == one.is_proven(),
                || {
                    format!(
                        "{ring} {}: ideal-triple condition {ideal_form}, element-level verdict {:?}",
                        l.ideals[i], one.status
                    )
                },
                || match failure {
                    Some(f) => f.iter().map(|&k| l.ideals[k].to_string()).collect(),
                    None => witness_strings(&one),
                },
            );
        }
        Ok(t)
    })?;
    Ok((format!("proper ideal triples over {}", describe(scope, &[Family::Residues, Family::Products])), t))
}
