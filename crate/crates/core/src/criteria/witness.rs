//! Non-trivial `p`-subgroups normalised by a given subgroup `X`.
//!
//! Any non-trivial `X`-invariant `p`-subgroup `E` contains an order-`p`
//! subgroup `⟨z⟩` (or a conjugate `B` of `A`), and then `⟨⟨z⟩^X⟩ ≤ E` is
//! itself an `X`-invariant `p`-group. So it suffices to close each seed under
//! `X`-conjugation and test the result.

use std::ops::ControlFlow;

use serde::Serialize;

use crate::arith::is_prime;
use crate::config;
use crate::conjugacy::ClassTable;
use crate::error::{Error, Result};
use crate::group::{is_power_of, PermGroup, SubgroupHandle, SubgroupOrbit};
use crate::par;
use crate::perm::{gcd, Permutation};
use crate::structure::closure_under;

use super::enumerate::{canonical_order_p_count, is_canonical_generator, CanonicalCycles};

#[derive(Clone, Debug)]
pub struct NgaWitness {
    pub e: SubgroupHandle,
    pub seed_conjugate: SubgroupHandle,
    pub p: u64,
}

#[derive(Serialize)]
struct WitnessJson {
    p: u64,
    order: String,
    generators: Vec<Permutation>,
    seed: Vec<Permutation>,
}

impl NgaWitness {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(WitnessJson {
            p: self.p,
            order: self.e.order().to_string(),
            generators: self.e.generators().to_vec(),
            seed: self.seed_conjugate.generators().to_vec(),
        })
        .expect("plain data serializes")
    }
}

fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::DomainError(format!("{p} is not prime")))
    }
}

/// Every `x ∈ X` sends `z` into a group with `z`; so `z · z^x` must be a `p`-element.
fn passes_product_test(z: &Permutation, xs: &[Permutation], p: u64) -> bool {
    xs.iter()
        .all(|x| is_power_of(z.mul_unchecked(&z.conj_unchecked(x)).order() as u128, p as u128))
}

fn close_seed(seed: &PermGroup, xs: &[Permutation], p: u64) -> Result<Option<PermGroup>> {
    Ok(closure_under(seed, xs, Some(p))?.filter(|e| !e.is_trivial()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum SeedRoute {
    /// Members of the order-`p` classes of `G`.
    Classes,
    /// Order-`p` elements of the symmetric group, filtered by membership.
    Symmetric,
}

impl SeedRoute {
    fn for_group(g: &PermGroup) -> Self {
        if g.order() <= config::max_enumerable_order() as u128 {
            SeedRoute::Classes
        } else {
            SeedRoute::Symmetric
        }
    }
}

/// Runs `test` over canonical generators of the order-`p` subgroups of `g` in a
/// fixed order and returns the first hit.
fn first_order_p_seed<R, F>(g: &PermGroup, p: u64, route: SeedRoute, test: F) -> Result<Option<R>>
where
    R: Send,
    F: Fn(&Permutation) -> Result<Option<R>> + Sync + Send,
{
    if g.order() % p as u128 != 0 {
        return Ok(None);
    }
    if route == SeedRoute::Classes {
        let table = ClassTable::new(g)?;
        let seeds: Vec<Permutation> = table
            .elements_of_order(p)
            .into_iter()
            .flat_map(|c| table.members(c).filter(is_canonical_generator).collect::<Vec<_>>())
            .collect();
        return par::find_map_first(&seeds, |z| test(z).transpose()).transpose();
    }
    let n = g.degree();
    let count = canonical_order_p_count(n, p as usize);
    let cap = config::max_candidates();
    if count > cap as u128 {
        return Err(Error::cap("order-p seed candidates", cap as u128));
    }
    let cycles = CanonicalCycles::new(n, p as usize);
    let prefixes = cycles.prefixes();
    par::find_map_first(&prefixes, |prefix| {
        let mut found = None;
        let _ = cycles.for_each(prefix, &mut |z| {
            if !g.has(z) {
                return ControlFlow::Continue(());
            }
            match test(z) {
                Ok(None) => ControlFlow::Continue(()),
                Ok(Some(r)) => {
                    found = Some(Ok(r));
                    ControlFlow::Break(())
                }
                Err(e) => {
                    found = Some(Err(e));
                    ControlFlow::Break(())
                }
            }
        });
        found
    })
    .transpose()
}

/// A non-trivial `p`-subgroup of `G` normalised by `X`, or `None` if there is none.
pub fn ngxp_witness(g: &PermGroup, x: &SubgroupHandle, p: u64) -> Result<Option<NgaWitness>> {
    ngxp_by_route(g, x, p, SeedRoute::for_group(g))
}

pub(crate) fn ngxp_by_route(
    g: &PermGroup,
    x: &SubgroupHandle,
    p: u64,
    route: SeedRoute,
) -> Result<Option<NgaWitness>> {
    require_prime(p)?;
    if !x.group().is_subgroup_of(g) {
        return Err(Error::NotASubgroup("X is not contained in G".into()));
    }
    let xs = x.generators().to_vec();
    first_order_p_seed(g, p, route, |z| {
        if !passes_product_test(z, &xs, p) {
            return Ok(None);
        }
        let seed = PermGroup::new(g.degree(), vec![z.clone()])?;
        Ok(close_seed(&seed, &xs, p)?.map(|e| NgaWitness {
            e: SubgroupHandle::unchecked(g, e),
            seed_conjugate: SubgroupHandle::unchecked(g, seed),
            p,
        }))
    })
}

fn first_in_orbit(
    g: &PermGroup,
    orbit: &SubgroupOrbit,
    x: &PermGroup,
    p: u64,
) -> Result<Option<NgaWitness>> {
    let xs = x.generators().to_vec();
    par::find_map_first(&orbit.members, |b| {
        close_seed(b, &xs, p)
            .map(|e| {
                e.map(|e| NgaWitness {
                    e: SubgroupHandle::unchecked(g, e),
                    seed_conjugate: SubgroupHandle::unchecked(g, b.clone()),
                    p,
                })
            })
            .transpose()
    })
    .transpose()
}

fn require_p_subgroup(g: &PermGroup, a: &SubgroupHandle, p: u64) -> Result<()> {
    require_prime(p)?;
    if a.is_trivial() || !a.is_p_group(p) {
        return Err(Error::DomainError(format!("A is not a non-trivial {p}-subgroup")));
    }
    if !a.group().is_subgroup_of(g) {
        return Err(Error::NotASubgroup("A is not contained in G".into()));
    }
    Ok(())
}

/// A `p`-subgroup generated by `G`-conjugates of `A` and normalised by `X`.
pub fn ngaxp_witness(
    g: &PermGroup,
    a: &SubgroupHandle,
    x: &SubgroupHandle,
    p: u64,
) -> Result<Option<NgaWitness>> {
    require_p_subgroup(g, a, p)?;
    if !x.group().is_subgroup_of(g) {
        return Err(Error::NotASubgroup("X is not contained in G".into()));
    }
    let orbit = SubgroupOrbit::compute(g, a.group())?;
    first_in_orbit(g, &orbit, x.group(), p)
}

#[derive(Clone, Debug)]
pub struct TheoremCOutcome {
    /// First cyclic `X ≤ S` with no witness.
    pub x: Option<SubgroupHandle>,
    /// Cyclic subgroup classes tried, including the successful one.
    pub tried: usize,
    /// Cyclic `p′`-subgroup classes of `S` available.
    pub candidates: usize,
}

/// Cyclic `p′`-subgroups of `S` up to `S`-conjugacy, prime orders first,
/// then by increasing order.
fn cyclic_candidates(s: &PermGroup, p: u64) -> Result<Vec<Permutation>> {
    let table = ClassTable::new(s)?;
    let mut out: Vec<(bool, u64, usize, Permutation)> = table
        .cyclic_subgroup_representatives(|k| gcd(k, p) == 1)
        .into_iter()
        .map(|(i, x)| (!is_prime(x.order()), x.order(), i, x))
        .collect();
    out.sort_by(|a, b| (a.0, a.1, a.2).cmp(&(b.0, b.1, b.2)));
    Ok(out.into_iter().map(|t| t.3).collect())
}

/// Searches cyclic `p′`-subgroups `X ≤ S` for one with no `p`-subgroup of `G`
/// generated by conjugates of `A` and normalised by `X`.
pub fn theorem_c_search(
    g: &PermGroup,
    s: &SubgroupHandle,
    a: &SubgroupHandle,
    p: u64,
) -> Result<TheoremCOutcome> {
    if p == 2 {
        return Err(Error::DomainError("p must be odd".into()));
    }
    require_p_subgroup(g, a, p)?;
    if a.order() != p as u128 {
        return Err(Error::DomainError(format!("A must have order {p}")));
    }
    if !s.group().is_subgroup_of(g) || !s.group().is_normalized_by(g) {
        return Err(Error::NotASubgroup("S is not a normal subgroup of G".into()));
    }
    let candidates = cyclic_candidates(s.group(), p)?;
    let orbit = SubgroupOrbit::compute(g, a.group())?;
    for (i, x) in candidates.iter().enumerate() {
        let xg = PermGroup::new(g.degree(), vec![x.clone()])?;
        if first_in_orbit(g, &orbit, &xg, p)?.is_none() {
            return Ok(TheoremCOutcome {
                x: Some(SubgroupHandle::unchecked(g, xg)),
                tried: i + 1,
                candidates: candidates.len(),
            });
        }
    }
    Ok(TheoremCOutcome {
        x: None,
        tried: candidates.len(),
        candidates: candidates.len(),
    })
}

/// The `X` found by [`theorem_c_search`], or `None` when every candidate fails.
pub fn theorem_c_witness(
    g: &PermGroup,
    s: &SubgroupHandle,
    a: &SubgroupHandle,
    p: u64,
) -> Result<Option<SubgroupHandle>> {
    Ok(theorem_c_search(g, s, a, p)?.x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(s, n).unwrap()
    }

    fn group(n: usize, gens: &[&str]) -> PermGroup {
        PermGroup::new(n, gens.iter().map(|s| p(s, n)).collect()).unwrap()
    }

    fn sub(g: &PermGroup, gens: &[&str]) -> SubgroupHandle {
        SubgroupHandle::new(g, gens.iter().map(|s| p(s, g.degree())).collect()).unwrap()
    }

    #[test]
    fn a4_examples() {
        let a4 = group(4, &["(1,2,3)", "(2,3,4)"]);
        let x = sub(&a4, &["(1,2)(3,4)"]);
        assert!(ngxp_witness(&a4, &x, 3).unwrap().is_none());
        let a = sub(&a4, &["(1,2,3)"]);
        assert!(ngaxp_witness(&a4, &a, &x, 3).unwrap().is_none());
        let y = sub(&a4, &["(1,2,3)"]);
        let w = ngxp_witness(&a4, &y, 2).unwrap().unwrap();
        assert_eq!(w.e.order(), 4);
        assert!(w.e.is_normalized_by(y.group()));
    }

    #[test]
    fn core_gives_witness() {
        let s4 = group(4, &["(1,2)", "(1,2,3,4)"]);
        let a = sub(&s4, &["(1,2)(3,4)"]);
        let x = sub(&s4, &["(1,2,3)"]);
        let w = ngaxp_witness(&s4, &a, &x, 2).unwrap().unwrap();
        assert!(w.e.is_p_group(2) && w.e.is_normalized_by(x.group()));
        assert!(ngaxp_witness(&s4, &x, &a, 2).is_err());
    }

    #[test]
    fn theorem_c_on_a5() {
        let a5 = group(5, &["(1,2,3)", "(1,2,3,4,5)"]);
        let s = a5.as_subgroup();
        for a in ["(1,2,3)", "(1,2,3,4,5)"] {
            let a = sub(&a5, &[a]);
            let p = a.order() as u64;
            let x = theorem_c_witness(&a5, &s, &a, p).unwrap().unwrap();
            assert_ne!(x.order() % p as u128, 0);
            let xh = SubgroupHandle::new(&a5, x.generators().to_vec()).unwrap();
            assert!(ngaxp_witness(&a5, &a, &xh, p).unwrap().is_none());
        }
    }

    #[test]
    fn large_group_seed_route_matches_table_route() {
        let s7 = group(7, &["(1,2)", "(1,2,3,4,5,6,7)"]);
        let x = sub(&s7, &["(1,2,3,4,5,6,7)"]);
        let y = sub(&s7, &["(1,2,3)"]);
        let run = |route| {
            (
                ngxp_by_route(&s7, &x, 2, route).unwrap().is_some(),
                ngxp_by_route(&s7, &y, 5, route).unwrap().is_some(),
                ngxp_by_route(&s7, &y, 2, route).unwrap().map(|w| {
                    w.e.is_p_group(2) && w.e.is_normalized_by(y.group())
                }),
            )
        };
        let table_route = run(SeedRoute::Classes);
        assert_eq!(table_route, run(SeedRoute::Symmetric));
        assert_eq!(table_route, (false, false, Some(true)));
    }
}
