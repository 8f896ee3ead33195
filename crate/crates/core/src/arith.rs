//! Machine-word number theory: gcd, primality, factorization and the
//! squarefree kernel.
//!
//! Factorization is deterministic: trial division up to [`TRIAL_LIMIT`],
//! then Brent's variant of Pollard rho started from a fixed seed. The
//! primality test is Miller-Rabin with a base set that is exact on `u64`.

pub use num_integer::Integer;

/// Trial division covers every prime factor below this bound.
pub const TRIAL_LIMIT: u64 = 1_000_000;

const RHO_SEED: u64 = 2;

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

/// Least common multiple with `lcm(0, x) = 0`; `None` on overflow.
pub fn lcm(a: u64, b: u64) -> Option<u64> {
    if a == 0 || b == 0 {
        return Some(0);
    }
    (a / gcd(a, b)).checked_mul(b)
}

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin, exact for all `u64`.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &BASES {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

// Brent's cycle detection with batched gcds. Returns a nontrivial factor of
// the odd composite `n`.
fn pollard_brent(n: u64) -> u64 {
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let mut y = RHO_SEED;
        let mut r = 1u64;
        let mut q = 1u64;
        let mut g = 1u64;
        let mut x = y;
        let mut ys = y;
        const BATCH: u64 = 128;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..BATCH.min(r - k) {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = gcd(q, n);
                k += BATCH;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = f(ys);
                g = gcd(x.abs_diff(ys), n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
        c += 1;
    }
}

fn split_large(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    let d = pollard_brent(n);
    split_large(d, out);
    split_large(n / d, out);
}

/// Prime factorization of `n ≥ 1` as ascending `(prime, exponent)` pairs.
/// `factorize(1)` is empty; `factorize(0)` panics.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    assert!(n != 0, "factorize(0) is undefined");
    let mut out: Vec<(u64, u32)> = Vec::new();
    let push = |p: u64, out: &mut Vec<(u64, u32)>| match out.last_mut() {
        Some((q, e)) if *q == p => *e += 1,
        _ => out.push((p, 1)),
    };
    while n % 2 == 0 {
        push(2, &mut out);
        n /= 2;
    }
    let mut d = 3u64;
    while d <= TRIAL_LIMIT && d.saturating_mul(d) <= n {
        while n % d == 0 {
            push(d, &mut out);
            n /= d;
        }
        d += 2;
    }
    if n > 1 {
        let mut big = Vec::new();
        if d.saturating_mul(d) > n {
            big.push(n);
        } else {
            split_large(n, &mut big);
        }
        big.sort_unstable();
        for p in big {
            push(p, &mut out);
        }
    }
    out
}

pub fn smallest_prime_factor(n: u64) -> Option<u64> {
    if n < 2 {
        return None;
    }
    factorize(n).first().map(|&(p, _)| p)
}

/// Product of the distinct prime factors; `radical(0) = 0`, `radical(1) = 1`.
pub fn squarefree_kernel(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    factorize(n).iter().map(|&(p, _)| p).product()
}

/// `Some((p, k))` when `n = p^k` with `k ≥ 1`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    match factorize(n).as_slice() {
        [(p, k)] => Some((*p, *k)),
        _ => None,
    }
}

/// Exponent of `p` in `n`; `n` must be nonzero.
pub fn valuation(mut n: u64, p: u64) -> u32 {
    debug_assert!(n != 0 && p >= 2);
    let mut v = 0;
    while n % p == 0 {
        n /= p;
        v += 1;
    }
    v
}

/// Ascending divisors of `n ≥ 1`.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut divs = vec![1u64];
    for (p, k) in factorize(n) {
        let current = divs.clone();
        let mut pk = 1u64;
        for _ in 0..k {
            pk *= p;
            divs.extend(current.iter().map(|d| d * pk));
        }
    }
    divs.sort_unstable();
    divs
}

/// Removes from `m` every prime factor of `s`.
pub fn strip_factors_of(mut m: u64, s: u64) -> u64 {
    if m == 0 {
        return 0;
    }
    for (p, _) in factorize(s) {
        while m % p == 0 {
            m /= p;
        }
    }
    m
}

/// True when every prime factor of `n ≥ 1` divides `s`.
pub fn is_smooth_over(n: u64, s: u64) -> bool {
    n != 0 && strip_factors_of(n, s) == 1
}
