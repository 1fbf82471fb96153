//! Groups acting on the projective line over a small field.
//!
//! The field element `z` is point `z`, and `∞` is point `q`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::Permutation;

use super::field::FiniteField;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Flavor {
    #[serde(rename = "PSL")]
    Psl,
    #[serde(rename = "PGL")]
    Pgl,
    #[serde(rename = "PGammaL")]
    PGammaL,
    M10,
}

pub(crate) const SUPPORTED_Q: [usize; 6] = [4, 5, 7, 8, 9, 11];

fn point_map(f: &FiniteField, map: impl Fn(Option<usize>) -> Option<usize>) -> Permutation {
    let q = f.q;
    let images = (0..=q)
        .map(|pt| {
            let z = (pt < q).then_some(pt);
            map(z).unwrap_or(q)
        })
        .collect();
    Permutation::from_images(images).expect("projective map is a bijection")
}

/// `z ↦ (az + b) / (cz + d)`.
fn mobius(f: &FiniteField, a: usize, b: usize, c: usize, d: usize) -> Permutation {
    point_map(f, |z| match z {
        Some(z) => {
            let den = f.add(f.mul(c, z), d);
            (den != 0).then(|| f.mul(f.add(f.mul(a, z), b), f.inv(den)))
        }
        None => (c != 0).then(|| f.mul(a, f.inv(c))),
    })
}

fn semilinear(f: &FiniteField, scalar: usize) -> Permutation {
    point_map(f, |z| z.map(|z| f.mul(scalar, f.frobenius(z))))
}

pub(crate) struct Projective {
    pub generators: Vec<Permutation>,
    pub socle_generators: Vec<Permutation>,
    pub expected_order: u128,
    pub socle_order: u128,
}

pub(crate) fn build(q: usize, flavor: Flavor) -> Result<Projective> {
    if !SUPPORTED_Q.contains(&q) {
        return Err(Error::DomainError(format!("q = {q} not in {SUPPORTED_Q:?}")));
    }
    if matches!(flavor, Flavor::PGammaL | Flavor::M10) && q != 9 {
        return Err(Error::DomainError(format!("{flavor:?} is only built for q = 9")));
    }
    let f = FiniteField::new(q)?;
    let qq = q as u128;
    let pgl_order = qq * (qq * qq - 1);
    let psl_order = pgl_order / if q % 2 == 0 { 1 } else { 2 };
    // upper and lower unipotents over an additive basis
    let mut socle = Vec::new();
    for beta in f.prime_field_basis() {
        socle.push(mobius(&f, 1, beta, 0, 1));
    }
    for beta in f.prime_field_basis() {
        socle.push(mobius(&f, 1, 0, beta, 1));
    }
    let omega = f.primitive_element();
    let mut gens = socle.clone();
    let expected_order = match flavor {
        Flavor::Psl => psl_order,
        Flavor::Pgl => {
            gens.push(mobius(&f, omega, 0, 0, 1));
            pgl_order
        }
        Flavor::PGammaL => {
            gens.push(mobius(&f, omega, 0, 0, 1));
            gens.push(semilinear(&f, 1));
            pgl_order * 2
        }
        Flavor::M10 => {
            gens.push(semilinear(&f, omega));
            pgl_order
        }
    };
    Ok(Projective {
        generators: gens,
        socle_generators: socle,
        expected_order,
        socle_order: psl_order,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::PermGroup;

    #[test]
    fn orders() {
        for q in SUPPORTED_Q {
            for flavor in [Flavor::Psl, Flavor::Pgl] {
                let built = build(q, flavor).unwrap();
                let g = PermGroup::new(q + 1, built.generators).unwrap();
                assert_eq!(g.order(), built.expected_order, "q={q} {flavor:?}");
                let s = PermGroup::new(q + 1, built.socle_generators).unwrap();
                assert_eq!(s.order(), built.socle_order);
            }
        }
        for flavor in [Flavor::PGammaL, Flavor::M10] {
            let built = build(9, flavor).unwrap();
            let g = PermGroup::new(10, built.generators).unwrap();
            assert_eq!(g.order(), built.expected_order);
        }
        assert!(build(7, Flavor::M10).is_err());
        assert!(build(13, Flavor::Psl).is_err());
    }
}
