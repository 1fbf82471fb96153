//! Small number theory: primality, prime powers and primitive prime divisors.

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest `q` accepted by [`zsigmondy`].
pub const ZSIGMONDY_MAX_Q: u64 = 1 << 16;
/// Largest `e` accepted by [`zsigmondy`].
pub const ZSIGMONDY_MAX_E: u32 = 40;

/// Trial-division budget when searching for a primitive prime.
const TRIAL_BUDGET: u64 = 200_000_000;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn is_prime_u128(n: u128) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d: u128 = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// `Some((p, k))` when `n = p^k` with `p` prime and `k ≥ 1`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    let f = factorize(n);
    match f.as_slice() {
        [(p, k)] => Some((*p, *k)),
        _ => None,
    }
}

/// Prime factorisation by trial division, primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            let mut k = 0;
            while n % d == 0 {
                n /= d;
                k += 1;
            }
            out.push((d, k));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Distinct primes dividing `n`, ascending.
pub fn prime_divisors(mut n: u128) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d: u128 = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d as u64);
            while n % d == 0 {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n as u64);
    }
    out
}

fn mul_mod(a: u128, b: u128, m: u128) -> u128 {
    if m <= u64::MAX as u128 {
        return a * b % m;
    }
    let (mut a, mut b, mut acc) = (a % m, b, 0u128);
    while b > 0 {
        if b & 1 == 1 {
            acc = add_mod(acc, a, m);
        }
        a = add_mod(a, a, m);
        b >>= 1;
    }
    acc
}

fn add_mod(a: u128, b: u128, m: u128) -> u128 {
    if a >= m - b {
        a - (m - b)
    } else {
        a + b
    }
}

pub fn pow_mod(base: u128, mut exp: u64, m: u128) -> u128 {
    if m == 1 {
        return 0;
    }
    let mut b = base % m;
    let mut acc = 1u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        exp >>= 1;
    }
    acc
}

/// Multiplicative order of `q` modulo `m`, searched up to `limit`.
pub fn multiplicative_order(q: u64, m: u128, limit: u64) -> Option<u64> {
    if m < 2 {
        return None;
    }
    let q = q as u128 % m;
    let mut acc = q;
    for k in 1..=limit {
        if acc == 1 {
            return Some(k);
        }
        acc = mul_mod(acc, q, m);
    }
    None
}

/// Integer coefficients of the cyclotomic polynomial `Φ_n`, constant term first.
pub fn cyclotomic_coefficients(n: u32) -> Vec<i64> {
    // x^n - 1 divided by Φ_d for every proper divisor d.
    let mut poly = vec![0i64; n as usize + 1];
    poly[0] = -1;
    poly[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            poly = poly_div_exact(&poly, &cyclotomic_coefficients(d));
        }
    }
    poly
}

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dn = den.len() - 1;
    let qn = rem.len() - 1 - dn;
    let mut quot = vec![0i64; qn + 1];
    let lead = *den.last().unwrap();
    for k in (0..=qn).rev() {
        let c = rem[k + dn] / lead;
        quot[k] = c;
        for (j, &dc) in den.iter().enumerate() {
            rem[k + j] -= c * dc;
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    quot
}

/// `Φ_e(q)`, or `None` if it does not fit in 127 bits.
pub fn cyclotomic_value(e: u32, q: u64) -> Option<u128> {
    let coeffs = cyclotomic_coefficients(e);
    let mut acc: i128 = 0;
    for &c in coeffs.iter().rev() {
        acc = acc.checked_mul(q as i128)?.checked_add(c as i128)?;
    }
    u128::try_from(acc).ok()
}

fn largest_prime_factor(n: u64) -> u64 {
    factorize(n).last().map(|&(p, _)| p).unwrap_or(1)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZsigmondyResult {
    pub q: u64,
    pub e: u32,
    /// Smallest primitive prime divisor of `q^e - 1`, if any.
    pub ell: Option<u128>,
}

/// Whether `ell` is a primitive prime divisor of `q^e - 1` with `ell ≥ e + 1`.
pub fn is_primitive_prime_divisor(q: u64, e: u32, ell: u128) -> bool {
    ell >= e as u128 + 1
        && pow_mod(q as u128, e as u64, ell) == 1
        && (1..e).all(|f| pow_mod(q as u128, f as u64, ell) != 1)
}

/// Smallest primitive prime divisor `ℓ` of `q^e − 1` with `ℓ ≥ e + 1`.
///
/// Every prime factor of `Φ_e(q)` other than the largest prime factor of `e`
/// is primitive, so the search trial-divides `Φ_e(q)` with that factor removed.
pub fn zsigmondy(q: u64, e: u32) -> Result<Option<u128>> {
    if e <= 2 {
        return Err(Error::DomainError(format!("exponent e = {e} must exceed 2")));
    }
    if prime_power(q).is_none() {
        return Err(Error::DomainError(format!("q = {q} is not a prime power")));
    }
    if q > ZSIGMONDY_MAX_Q || e > ZSIGMONDY_MAX_E {
        return Err(Error::DomainError(format!(
            "(q, e) = ({q}, {e}) outside q ≤ {ZSIGMONDY_MAX_Q}, e ≤ {ZSIGMONDY_MAX_E}"
        )));
    }
    let step = e as u128;
    let ell = match cyclotomic_value(e, q) {
        Some(mut m) => {
            let r = largest_prime_factor(e as u64) as u128;
            while m % r == 0 {
                m /= r;
            }
            if m == 1 {
                return Ok(None);
            }
            let mut found = m;
            let mut cand = 1 + step;
            let mut tried = 0u64;
            while cand * cand <= m {
                if m % cand == 0 {
                    found = cand;
                    break;
                }
                cand += step;
                tried += 1;
                if tried > TRIAL_BUDGET {
                    return Err(Error::cap("zsigmondy trial division", TRIAL_BUDGET as u128));
                }
            }
            found
        }
        None => {
            // Φ_e(q) exceeds 2^127, so it has a primitive prime factor; find
            // the smallest by scanning ℓ ≡ 1 (mod e).
            let mut cand = 1 + step;
            let mut tried = 0u64;
            loop {
                if is_prime_u128(cand) && is_primitive_prime_divisor(q, e, cand) {
                    break cand;
                }
                cand += step;
                tried += 1;
                if tried > TRIAL_BUDGET {
                    return Err(Error::cap("zsigmondy prime scan", TRIAL_BUDGET as u128));
                }
            }
        }
    };
    debug_assert!(is_primitive_prime_divisor(q, e, ell));
    Ok(Some(ell))
}

pub fn zsigmondy_result(q: u64, e: u32) -> Result<ZsigmondyResult> {
    Ok(ZsigmondyResult {
        q,
        e,
        ell: zsigmondy(q, e)?,
    })
}

/// Prime powers in `2..=bound`, ascending.
pub fn prime_powers_up_to(bound: u64) -> Vec<u64> {
    (2..=bound).filter(|&n| prime_power(n).is_some()).collect()
}
