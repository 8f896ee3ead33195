//! Closed-form verdicts from factorization, used when no finite residue
//! system is available or it would be too large.

use super::{Method, Property, Verdict, Witness};
use crate::arith;
use crate::ring::{Element, RingHandle};

fn elems(ring: &RingHandle, values: &[u64]) -> Witness {
    Witness::new(values.iter().map(|&v| ring.from_i64(v as i64)).collect())
}

fn refuted(ring: &RingHandle, values: &[u64]) -> Verdict {
    Verdict::refuted(Method::FastPath, elems(ring, values))
}

/// The ideal `(m)`, `m ≥ 2`, of a principal ideal ring whose quotient by it
/// is `Z/m`: `Z`, `Z[1/s]` with `gcd(m, s) = 1`, or `Z/n` with `m | n`.
pub(crate) fn principal(ring: &RingHandle, m: u64, prop: Property) -> Verdict {
    debug_assert!(m >= 2);
    let f = arith::factorize(m);
    let proven = Verdict::proven(Method::FastPath);
    let (p, v) = f[0];
    let pv = p.pow(v);
    match prop {
        Property::Prime | Property::Maximal => {
            if f.len() == 1 && v == 1 {
                proven
            } else if prop == Property::Maximal {
                refuted(ring, &[p])
            } else {
                refuted(ring, &[p, m / p])
            }
        }
        Property::Primary if f.len() == 1 => proven,
        Property::Primary => refuted(ring, &[pv, m / pv]),
        Property::OneAbsorbingPrimary if f.len() == 1 => proven,
        Property::OneAbsorbingPrimary => {
            let r = m / pv;
            refuted(ring, &[r, r, pv])
        }
        Property::TwoAbsorbingPrimary if f.len() <= 2 => proven,
        Property::TwoAbsorbingPrimary => {
            let qb = f[1].0.pow(f[1].1);
            refuted(ring, &[pv, qb, m / (pv * qb)])
        }
        Property::TwoAbsorbing => {
            let total: u32 = f.iter().map(|(_, e)| e).sum();
            if total <= 2 {
                proven
            } else if f.len() >= 3 {
                let qb = f[1].0.pow(f[1].1);
                refuted(ring, &[pv, qb, m / (pv * qb)])
            } else if f.len() == 1 {
                refuted(ring, &[p, p, p.pow(v - 2)])
            } else {
                let (p, a) = *f.iter().find(|(_, e)| *e >= 2).expect("total above two");
                let rest = m / p.pow(a);
                refuted(ring, &[p, p.pow(a - 1), rest])
            }
        }
    }
}

/// The ideal `p^k`, `k ≥ 1`, of `Zloc:p`.
pub(crate) fn valuation(ring: &RingHandle, p: u64, k: u32, prop: Property) -> Verdict {
    let proven = Verdict::proven(Method::FastPath);
    let pk = |e: u32| -> Element { ring.pow(&ring.from_i64(p as i64), e).expect("same ring") };
    match prop {
        Property::Prime | Property::Maximal if k == 1 => proven,
        Property::Maximal => Verdict::refuted(Method::FastPath, Witness::new(vec![pk(1)])),
        Property::Prime => Verdict::refuted(Method::FastPath, Witness::new(vec![pk(1), pk(k - 1)])),
        Property::Primary | Property::OneAbsorbingPrimary | Property::TwoAbsorbingPrimary => proven,
        Property::TwoAbsorbing if k <= 2 => proven,
        Property::TwoAbsorbing => {
            Verdict::refuted(Method::FastPath, Witness::new(vec![pk(1), pk(1), pk(k - 2)]))
        }
    }
}

/// The zero ideal of a domain is prime, so every class holds; it is not
/// maximal since the backends here are not fields.
pub(crate) fn domain_zero(ring: &RingHandle, prop: Property) -> Verdict {
    if prop != Property::Maximal {
        return Verdict::proven(Method::Certificate);
    }
    let w = match ring {
        RingHandle::IntLoc(p) => *p,
        RingHandle::IntInv(s) => (2..).find(|q| arith::is_prime(*q) && s % q != 0).expect("infinite primes"),
        _ => 2,
    };
    Verdict::refuted(Method::Certificate, elems(ring, &[w]))
}
