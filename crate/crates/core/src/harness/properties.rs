//! Properties every `p`-subgroup witness normalised by `X` must have.

use crate::error::Result;
use crate::group::PermGroup;
use crate::perm::gcd;
use crate::structure::{center, centralizer_in, commutator_of, join};

/// For each `X`-orbit `O` that `E` maps to itself and moves, `p` divides `|O|`.
pub fn orbit_divisibility_holds(e: &PermGroup, x: &PermGroup, p: u64) -> bool {
    x.orbits().iter().all(|orbit| {
        let invariant = e
            .generators()
            .iter()
            .all(|g| orbit.iter().all(|&pt| orbit.binary_search(&g.image(pt)).is_ok()));
        let moved = e.generators().iter().any(|g| orbit.iter().any(|&pt| !g.fixes(pt)));
        !(invariant && moved) || orbit.len() as u64 % p == 0
    })
}

/// The subgroup generated by the order-`p` elements of `Z(E)` is non-trivial,
/// elementary abelian and normalised by `X`.
pub fn elementary_center_normalized(e: &PermGroup, x: &PermGroup, p: u64) -> Result<bool> {
    let z = center(e)?;
    let omega: Vec<_> = z
        .elements()?
        .iter()
        .filter(|y| y.order() == p)
        .cloned()
        .collect();
    let omega = PermGroup::new(e.degree(), omega)?;
    if omega.is_trivial() || !omega.is_abelian() {
        return Ok(false);
    }
    let exponent_p = omega.elements()?.iter().all(|y| y.is_identity() || y.order() == p);
    Ok(exponent_p && omega.is_normalized_by(x))
}

/// `E = [E, X] C_E(X)` when `|E|` and `|X|` are coprime; vacuous otherwise.
pub fn coprime_action_holds(e: &PermGroup, x: &PermGroup) -> Result<bool> {
    if gcd_u128(e.order(), x.order()) != 1 {
        return Ok(true);
    }
    let comm = commutator_of(e, x)?;
    let cent = centralizer_in(e, x.generators())?;
    Ok(join(e.degree(), &[&comm, &cent])?.order() == e.order())
}

fn gcd_u128(a: u128, b: u128) -> u128 {
    if a <= u64::MAX as u128 && b <= u64::MAX as u128 {
        return gcd(a as u64, b as u64) as u128;
    }
    if b == 0 {
        a
    } else {
        gcd_u128(b, a % b)
    }
}
