//! Transfer along quotient maps, projections and localizations of `Z`.

use std::collections::HashMap;

use super::lattice::{prime_power_chain, product_rings, SMALL_PRIMES};
use super::tally::{par_tally, Tally};
use super::Scope;
use crate::arith;
use crate::classify::{Classifier, Property, Verdict};
use crate::error::Result;
use crate::ideal::{enumerate_ideals, FamilyBounds, Ideal, IdealFamily};
use crate::ring::{Element, RingHandle};
use crate::transfer::{check_hom_hypotheses, image_ideal, localize, preimage_ideal, LocalizationSpec, RingHom};

fn one_abs(classifier: Classifier, i: &Ideal) -> Result<Verdict> {
    classifier.decide(i, Property::OneAbsorbingPrimary)
}

/// Ideals of the source of `f` that contain its kernel.
fn ideals_over_kernel(f: &RingHom) -> Result<Vec<Ideal>> {
    let source = f.source();
    let all = match source {
        RingHandle::Int => {
            let n = f.kernel().generator().expect("modulus kernel");
            arith::divisors(n).into_iter().map(|d| Ideal::modulus(source, d)).collect::<Result<Vec<_>>>()?
        }
        _ => enumerate_ideals(&IdealFamily::new(source.clone(), FamilyBounds::Exhaustive))?,
    };
    let mut out = Vec::new();
    for i in all {
        if i.contains_ideal(f.kernel())? {
            out.push(i);
        }
    }
    Ok(out)
}

/// Quotient chains `Z/p^k → Z/p^j`, reductions `Z/n → Z/d`, `Z → Z/n`,
/// projections of products and identities.
fn catalogue(scope: &Scope) -> Result<Vec<RingHom>> {
    let mut maps = Vec::new();
    let chain = prime_power_chain();
    for &n in &chain {
        for &d in &chain {
            if d <= n && n % d == 0 {
                maps.push(RingHom::quotient(&RingHandle::ZMod(n), &RingHandle::ZMod(d))?);
            }
        }
    }
    for n in 2..=scope.zmod_max {
        let source = RingHandle::ZMod(n);
        for d in arith::divisors(n).into_iter().filter(|&d| d > 1 && d < n) {
            maps.push(RingHom::quotient(&source, &RingHandle::ZMod(d))?);
        }
        maps.push(RingHom::quotient(&RingHandle::Int, &source)?);
        maps.push(RingHom::identity(&source));
    }
    for ring in product_rings(scope) {
        maps.push(RingHom::projection(&ring, 1)?);
        maps.push(RingHom::projection(&ring, 2)?);
    }
    Ok(maps)
}

pub(super) fn homomorphisms(scope: &Scope) -> Result<(String, Tally)> {
    let classifier = scope.classifier();
    let maps = catalogue(scope)?;
    let mut t = par_tally(&maps, |f| {
        let mut t = Tally::default();
        let h = check_hom_hypotheses(f);
        if !h.holds() {
            return Ok(t);
        }
        let targets = enumerate_ideals(&IdealFamily::new(f.target().clone(), FamilyBounds::Exhaustive))?;
        for j in targets.iter().filter(|j| j.is_proper()) {
            t.instances += 1;
            let pre = preimage_ideal(f, j)?;
            t.implies(&one_abs(classifier, j)?, &one_abs(classifier, &pre)?, || {
                format!("{f}: preimage {pre} of {j} is not 1-absorbing primary")
            });
        }
        for i in ideals_over_kernel(f)?.iter().filter(|i| i.is_proper()) {
            t.instances += 1;
            let image = image_ideal(f, i)?;
            t.implies(&one_abs(classifier, i)?, &one_abs(classifier, &image)?, || {
                format!("{f}: image {image} of {i} is not 1-absorbing primary")
            });
        }
        Ok(t)
    })?;
    let skipped = maps.iter().filter(|f| !check_hom_hypotheses(f).holds()).count();
    t.note(format!("{} maps, {skipped} failing the nonunit hypothesis", maps.len()));

    if scope.zmod_max >= 9 {
        let f = RingHom::quotient(&RingHandle::Int, &RingHandle::ZMod(9))?;
        let h = check_hom_hypotheses(&f);
        t.instances += 1;
        t.expect(
            !h.nonunit_preserving && h.witness == Some(Element::int(2)),
            || format!("{f}: hypothesis checker did not flag the nonunit 2"),
            || h.witness.iter().map(|w| w.to_string()).collect(),
        );
        t.notes.extend(h.notes);
    }
    let text = format!(
        "quotients Z/p^k -> Z/p^j (p in {{2,3,5}}, k <= 5), Z/n -> Z/d and Z -> Z/n (n <= {}), identities, projections of Z/n x Z/m (n, m <= {})",
        scope.zmod_max, scope.prod_max
    );
    Ok((text, t.finish()))
}

/// `J` against `J/I` along `R → R/I`, for nested proper `I ⊆ J`.
fn nested(classifier: Classifier, source: &RingHandle, i: &Ideal, t: &mut Tally) -> Result<()> {
    let m = i.generator().expect("modulus ideal");
    let f = RingHom::quotient(source, &RingHandle::ZMod(m))?;
    if !check_hom_hypotheses(&f).holds() {
        return Ok(());
    }
    for j in ideals_over_kernel(&f)?.iter().filter(|j| j.is_proper()) {
        t.instances += 1;
        let quotient = image_ideal(&f, j)?;
        t.equivalent(&one_abs(classifier, j)?, &one_abs(classifier, &quotient)?, || {
            format!("{source}: {j} against {quotient} in {}", f.target())
        });
    }
    Ok(())
}

pub(super) fn quotient_rings(scope: &Scope) -> Result<(String, Tally)> {
    let classifier = scope.classifier();
    let mut rings: Vec<u64> = prime_power_chain();
    rings.extend(2..=scope.zmod_max);
    rings.sort_unstable();
    rings.dedup();
    let mut t = par_tally(&rings, |&n| {
        let mut t = Tally::default();
        let ring = RingHandle::ZMod(n);
        for i in enumerate_ideals(&IdealFamily::new(ring.clone(), FamilyBounds::Exhaustive))? {
            if i.is_proper() {
                nested(classifier, &ring, &i, &mut t)?;
            }
        }
        Ok(t)
    })?;
    let moduli: Vec<u64> = (2..=scope.int_max).collect();
    t.merge(par_tally(&moduli, |&n| {
        let mut t = Tally::default();
        nested(classifier, &RingHandle::Int, &Ideal::modulus(&RingHandle::Int, n)?, &mut t)?;
        Ok(t)
    })?);
    t.note("pairs whose quotient fails the nonunit hypothesis are skipped");
    let text = format!(
        "nested ideals of Z/n (n <= {} and Z/p^k, p in {{2,3,5}}, k <= 5) and over nZ in Z (n <= {})",
        scope.zmod_max, scope.int_max
    );
    Ok((text, t.finish()))
}

fn specs() -> Vec<LocalizationSpec> {
    let mut out: Vec<LocalizationSpec> = SMALL_PRIMES.iter().map(|&s| LocalizationSpec::PowersOf(s)).collect();
    out.extend(SMALL_PRIMES.iter().map(|&p| LocalizationSpec::ComplementOf(p)));
    out
}

fn localization_examples(t: &mut Tally) -> Result<()> {
    let int = RingHandle::Int;
    let cases: [(LocalizationSpec, u64, Ideal, bool, bool); 3] = [
        (LocalizationSpec::PowersOf(2), 24, Ideal::modulus(&RingHandle::IntInv(2), 3)?, true, false),
        (LocalizationSpec::PowersOf(5), 9, Ideal::modulus(&RingHandle::IntInv(5), 9)?, false, true),
        (LocalizationSpec::ComplementOf(5), 25, Ideal::valuation(&RingHandle::IntLoc(5), Some(2))?, false, false),
    ];
    for (spec, m, expected, disjoint, zdiv) in cases {
        t.instances += 1;
        let loc = localize(&spec, &Ideal::modulus(&int, m)?)?;
        t.expect(
            loc.extended == expected && (!disjoint || loc.disjoint) && (!zdiv || loc.zdiv_disjoint),
            || format!("{spec}, {m}Z: extended {} (expected {expected})", loc.extended),
            Vec::new,
        );
    }
    Ok(())
}

pub(super) fn localizations(scope: &Scope) -> Result<(String, Tally)> {
    let classifier = scope.classifier();
    let int = RingHandle::Int;
    let mut moduli = vec![0u64];
    moduli.extend(2..=scope.int_max);
    let verdicts: HashMap<u64, Verdict> = par_tally_map(&moduli, |&m| one_abs(classifier, &Ideal::modulus(&int, m)?))?;
    let pairs: Vec<(LocalizationSpec, u64)> =
        specs().into_iter().flat_map(|s| moduli.iter().map(move |&m| (s, m))).collect();
    let mut t = par_tally(&pairs, |&(spec, m)| {
        let mut t = Tally { instances: 1, ..Tally::default() };
        let i = Ideal::modulus(&int, m)?;
        let loc = localize(&spec, &i)?;
        let base = &verdicts[&m];
        let extended = loc.extended.is_proper().then(|| one_abs(classifier, &loc.extended)).transpose()?;
        let at = || format!("{spec}, {m}Z -> {}", loc.extended);
        if loc.disjoint {
            match &extended {
                Some(e) => t.implies(base, e, || format!("{}: extension not 1-absorbing primary", at())),
                None => t.violation(format!("{}: disjoint from S but extends to the whole ring", at()), Vec::new()),
            }
        }
        if let (Some(e), true) = (&extended, loc.zdiv_disjoint) {
            t.implies(e, base, || format!("{}: contraction not 1-absorbing primary", at()));
        }
        Ok(t)
    })?;
    localization_examples(&mut t)?;
    let text = format!("mZ for m in {{0}} and 2..={}, S = s^k and S = Z minus pZ for s, p in {{2,3,5,7}}", scope.int_max);
    Ok((text, t.finish()))
}

fn par_tally_map<T: Sync + Copy + Eq + std::hash::Hash + Send, V: Send>(
    items: &[T],
    f: impl Fn(&T) -> Result<V> + Sync,
) -> Result<HashMap<T, V>> {
    use rayon::prelude::*;
    items.par_iter().map(|x| Ok((*x, f(x)?))).collect()
}
