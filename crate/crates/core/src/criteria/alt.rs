//! Cyclic subgroups of `A_n` that normalise no non-trivial `p`-subgroup.

use serde::Serialize;

use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AltCase {
    /// `n` even, `p | n − 1`: `(1,2)(3,…,n)`.
    EvenDividesNMinusOne,
    /// `n` even, `p ∤ n − 1`: `(2,…,n)`.
    EvenCoprime,
    /// `n` a power of two and `p = 2`: `(1,2,3)(4,…,n)`.
    EvenPowerOfTwo,
    /// `n` odd, `p | n`: `(3,…,n)`.
    OddDividesN,
    /// `n` odd, `p ∤ n`: `(1,…,n)`.
    OddCoprime,
}

impl AltCase {
    pub fn witness(self, n: usize) -> Permutation {
        let range = |lo: usize| (lo..n).collect::<Vec<_>>();
        let cycles = match self {
            AltCase::EvenDividesNMinusOne => vec![vec![0, 1], range(2)],
            AltCase::EvenCoprime => vec![range(1)],
            AltCase::EvenPowerOfTwo => vec![vec![0, 1, 2], range(3)],
            AltCase::OddDividesN => vec![range(2)],
            AltCase::OddCoprime => vec![range(0)],
        };
        Permutation::from_cycles(n, &cycles).expect("disjoint cycles")
    }
}

pub fn alt_case(n: usize, p: u64) -> Result<AltCase> {
    if n < 7 {
        return Err(Error::UnsupportedCase(format!("n = {n} < 7")));
    }
    if !is_prime(p) || p as usize > n {
        return Err(Error::DomainError(format!("{p} is not a prime dividing |A_{n}|")));
    }
    let p = p as usize;
    Ok(match (n % 2 == 0, p) {
        (true, _) if (n - 1) % p == 0 => AltCase::EvenDividesNMinusOne,
        (true, 2) if n.is_power_of_two() => AltCase::EvenPowerOfTwo,
        (true, _) => AltCase::EvenCoprime,
        (false, _) if n % p == 0 => AltCase::OddDividesN,
        (false, _) => AltCase::OddCoprime,
    })
}

/// The cycle `x` for `(n, p)`; `⟨x⟩` has order prime to `p`.
pub fn alt_witness(n: usize, p: u64) -> Result<Permutation> {
    let x = alt_case(n, p)?.witness(n);
    debug_assert!(x.is_even());
    debug_assert!(x.order() % p != 0);
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cases() {
        assert_eq!(alt_witness(8, 7).unwrap().to_cycles(), "(1,2)(3,4,5,6,7,8)");
        assert_eq!(alt_witness(8, 3).unwrap().to_cycles(), "(2,3,4,5,6,7,8)");
        assert_eq!(alt_witness(9, 3).unwrap().to_cycles(), "(3,4,5,6,7,8,9)");
        assert_eq!(alt_witness(9, 5).unwrap().to_cycles(), "(1,2,3,4,5,6,7,8,9)");
        assert_eq!(alt_case(8, 2).unwrap(), AltCase::EvenPowerOfTwo);
        assert_eq!(alt_witness(8, 2).unwrap().to_cycles(), "(1,2,3)(4,5,6,7,8)");
        assert_eq!(alt_case(10, 2).unwrap(), AltCase::EvenCoprime);
        assert!(matches!(alt_witness(6, 5), Err(Error::UnsupportedCase(_))));
        assert!(alt_witness(8, 11).is_err());
        for n in 7..=12 {
            for p in [2, 3, 5, 7, 11].into_iter().filter(|&p| p as usize <= n) {
                let x = alt_witness(n, p).unwrap();
                assert!(x.is_even());
                assert_ne!(x.order() % p, 0, "n={n} p={p}");
            }
        }
    }
}
