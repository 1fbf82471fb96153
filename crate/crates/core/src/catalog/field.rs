//! Finite fields of order at most a few dozen, by lookup tables.
//!
//! Elements are integers `0..q`; for `q = p^k` an element `Σ c_i p^i` stands
//! for the polynomial `Σ c_i x^i` modulo a fixed irreducible polynomial.

use crate::arith::prime_power;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct FiniteField {
    pub p: usize,
    pub q: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
    neg: Vec<usize>,
    inv: Vec<usize>,
}

/// Monic irreducible polynomials (low coefficient first, leading 1 omitted).
fn modulus(p: usize, k: u32) -> Option<Vec<usize>> {
    match (p, k) {
        (_, 1) => Some(vec![0]),
        (2, 2) => Some(vec![1, 1]),    // x^2 + x + 1
        (2, 3) => Some(vec![1, 1, 0]), // x^3 + x + 1
        (3, 2) => Some(vec![1, 0]),    // x^2 + 1
        (5, 2) => Some(vec![2, 0]),    // x^2 + 2
        _ => None,
    }
}

impl FiniteField {
    pub fn new(q: usize) -> Result<Self> {
        let (p, k) = prime_power(q as u64)
            .ok_or_else(|| Error::DomainError(format!("{q} is not a prime power")))?;
        let p = p as usize;
        let m = modulus(p, k)
            .ok_or_else(|| Error::DomainError(format!("no field table for q = {q}")))?;
        let k = k as usize;
        let digits = |mut a: usize| -> Vec<usize> {
            (0..k)
                .map(|_| {
                    let d = a % p;
                    a /= p;
                    d
                })
                .collect()
        };
        let undigits = |d: &[usize]| d.iter().rev().fold(0, |acc, &c| acc * p + c);
        let mut add = vec![0; q * q];
        let mut mul = vec![0; q * q];
        for a in 0..q {
            for b in 0..q {
                let (da, db) = (digits(a), digits(b));
                let sum: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a * q + b] = undigits(&sum);
                // schoolbook product, then reduce x^j for j ≥ k using x^k = -m(x)
                let mut prod = vec![0usize; 2 * k];
                for (i, x) in da.iter().enumerate() {
                    for (j, y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                for j in (k..2 * k).rev() {
                    let c = prod[j];
                    if c == 0 {
                        continue;
                    }
                    prod[j] = 0;
                    for (i, mi) in m.iter().enumerate() {
                        prod[j - k + i] = (prod[j - k + i] + (p - mi % p) % p * c) % p;
                    }
                }
                mul[a * q + b] = undigits(&prod[..k]);
            }
        }
        let neg = (0..q)
            .map(|a| (0..q).find(|&b| add[a * q + b] == 0).unwrap())
            .collect();
        let inv = (0..q)
            .map(|a| {
                if a == 0 {
                    0
                } else {
                    (1..q).find(|&b| mul[a * q + b] == 1).unwrap_or(0)
                }
            })
            .collect::<Vec<_>>();
        if inv[1..].iter().any(|&x| x == 0) {
            return Err(Error::DomainError(format!("table for q = {q} is not a field")));
        }
        Ok(FiniteField {
            p,
            q,
            add,
            mul,
            neg,
            inv,
        })
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.q + b]
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q + b]
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn pow(&self, a: usize, e: usize) -> usize {
        (0..e).fold(1, |acc, _| self.mul(acc, a))
    }

    pub fn multiplicative_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 1 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Smallest generator of the multiplicative group.
    pub fn primitive_element(&self) -> usize {
        (2..self.q)
            .find(|&a| self.multiplicative_order(a) == self.q - 1)
            .unwrap_or(1)
    }

    pub fn frobenius(&self, a: usize) -> usize {
        self.pow(a, self.p)
    }

    /// `1, x, …, x^{k-1}`: an additive basis over the prime field.
    pub fn prime_field_basis(&self) -> Vec<usize> {
        let mut basis = vec![1];
        while basis.last().unwrap() * self.p < self.q {
            basis.push(basis.last().unwrap() * self.p);
        }
        basis
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms_hold() {
        for q in [2, 3, 4, 5, 7, 8, 9, 11, 25] {
            let f = FiniteField::new(q).unwrap();
            for a in 0..q {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a)), 1);
                }
                for b in 0..q {
                    for c in 0..q {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    }
                }
            }
            assert_eq!(f.multiplicative_order(f.primitive_element()), q - 1);
        }
        assert!(FiniteField::new(6).is_err());
        assert!(FiniteField::new(16).is_err());
    }
}
