//! Subnormality, conditions (*) and (**), Wielandt's criteria and the
//! p-subgroup witness searches.

mod alt;
mod enumerate;
mod witness;

use serde::Serialize;

use crate::conjugacy::ClassTable;
use crate::error::{Error, Result};
use crate::group::{PermGroup, SubgroupHandle, SubgroupOrbit};
use crate::par;
use crate::perm::Permutation;
use crate::structure::{normal_closure_group, SeriesKind, SeriesRecord};

pub use alt::{alt_case, alt_witness, AltCase};
pub use witness::{
    ngaxp_witness, ngxp_witness, theorem_c_search, theorem_c_witness, NgaWitness,
    TheoremCOutcome,
};


/// `K_0 = H`, `K_{i+1} = ⟨A^{K_i}⟩`, stopping at the first repeat.
pub fn wielandt_series(h: &PermGroup, a: &SubgroupHandle) -> Result<SeriesRecord> {
    if !a.group().is_subgroup_of(h) {
        return Err(Error::NotASubgroup("A is not contained in H".into()));
    }
    let mut terms = vec![SubgroupHandle::unchecked(h, h.clone())];
    loop {
        let k = terms.last().unwrap().group().clone();
        let next = normal_closure_group(&k, a.group())?;
        if next.order() == k.order() {
            break;
        }
        terms.push(SubgroupHandle::unchecked(h, next));
    }
    Ok(SeriesRecord {
        terms,
        kind: SeriesKind::Wielandt,
    })
}

/// Length of a subnormal chain from the series, or `None` if `A` is not subnormal.
pub fn subnormal_defect(series: &SeriesRecord, a: &PermGroup) -> Option<usize> {
    (series.last().order() == a.order()).then(|| series.terms.len() - 1)
}

pub fn is_subnormal(a: &SubgroupHandle, h: &PermGroup) -> Result<bool> {
    if !a.group().is_subgroup_of(h) {
        return Err(Error::NotASubgroup("A is not contained in H".into()));
    }
    subnormal_in(a.group(), h)
}

fn smallest_prime_factor(n: u128) -> Option<u128> {
    if n < 2 {
        return None;
    }
    let mut d = 2u128;
    while d * d <= n {
        if n % d == 0 {
            return Some(d);
        }
        d += 1;
    }
    Some(n)
}

/// Subnormality of `a ≤ h` by the Wielandt series, with `a ≤ h` assumed.
pub(crate) fn subnormal_in(a: &PermGroup, h: &PermGroup) -> Result<bool> {
    let mut k = h.clone();
    loop {
        if k.order() == a.order() {
            return Ok(true);
        }
        // every subgroup of a p-group is subnormal
        if let Some(p) = smallest_prime_factor(k.order()) {
            if crate::group::is_power_of(k.order(), p) {
                return Ok(true);
            }
        }
        let next = normal_closure_group(&k, a)?;
        if next.order() == k.order() {
            return Ok(false);
        }
        k = next;
    }
}

/// `A sn ⟨A, g⟩`.
fn sn_with_element(a: &PermGroup, g: &Permutation) -> Result<bool> {
    if a.has(g) {
        return Ok(true);
    }
    subnormal_in(a, &a.extend(std::slice::from_ref(g))?)
}

/// `A sn ⟨A, A^g⟩`.
fn sn_with_conjugate(a: &PermGroup, g: &Permutation) -> Result<bool> {
    let extra: Vec<Permutation> = a
        .generators()
        .iter()
        .map(|x| x.conj_unchecked(g))
        .filter(|y| !a.has(y))
        .collect();
    if extra.is_empty() {
        return Ok(true);
    }
    subnormal_in(a, &a.extend(&extra)?)
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ClassWitness {
    pub class: usize,
    pub witness: Option<Permutation>,
    /// Candidates examined up to and including the witness.
    pub scanned: usize,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct StarReport {
    pub holds: bool,
    pub per_class: Vec<ClassWitness>,
}

impl StarReport {
    /// First class without a witness.
    pub fn first_failure(&self) -> Option<usize> {
        self.per_class
            .iter()
            .find(|c| c.witness.is_none())
            .map(|c| c.class)
    }
}

#[derive(Clone, Copy)]
enum Condition {
    Star,
    StarStar,
}

impl Condition {
    fn test(self, a: &PermGroup, g: &Permutation) -> Result<bool> {
        match self {
            Condition::Star => sn_with_element(a, g),
            Condition::StarStar => sn_with_conjugate(a, g),
        }
    }
}

/// First index in `0..n` where `test` holds, propagating the first error.
fn first_hit<F>(n: usize, test: F) -> Result<Option<usize>>
where
    F: Fn(usize) -> Result<bool> + Sync + Send,
{
    par::find_map_first_index(n, |i| match test(i) {
        Ok(true) => Some(Ok(i)),
        Ok(false) => None,
        Err(e) => Some(Err(e)),
    })
    .transpose()
}

fn scan(g: &PermGroup, a: &SubgroupHandle, cond: Condition) -> Result<StarReport> {
    if !a.group().is_subgroup_of(g) {
        return Err(Error::NotASubgroup("A is not contained in G".into()));
    }
    let table = ClassTable::new(g)?;
    let orbit = SubgroupOrbit::compute(g, a.group())?;
    let indices: Vec<usize> = (0..table.len()).collect();
    let per_class = par::map(&indices, |&i| -> Result<ClassWitness> {
        let info = table.class(i);
        if info.size <= orbit.len() {
            let members: Vec<Permutation> = table.members(i).collect();
            let hit = first_hit(members.len(), |j| cond.test(a.group(), &members[j]))?;
            Ok(ClassWitness {
                class: i,
                witness: hit.map(|j| members[j].clone()),
                scanned: hit.map_or(members.len(), |j| j + 1),
            })
        } else {
            // A^t = B: A sn ⟨A, c^{t⁻¹}⟩ ⇔ B sn ⟨B, c⟩
            let c = &info.representative;
            let hit = first_hit(orbit.len(), |j| cond.test(&orbit.members[j], c))?;
            Ok(ClassWitness {
                class: i,
                witness: hit.map(|j| c.conj_unchecked(&orbit.transporters[j].inverse())),
                scanned: hit.map_or(orbit.len(), |j| j + 1),
            })
        }
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    Ok(StarReport {
        holds: per_class.iter().all(|c| c.witness.is_some()),
        per_class,
    })
}

/// Every class `C` has `g ∈ C` with `A sn ⟨A, g⟩`.
pub fn check_star(g: &PermGroup, a: &SubgroupHandle) -> Result<StarReport> {
    scan(g, a, Condition::Star)
}

/// Every class `C` has `g ∈ C` with `A sn ⟨A, A^g⟩`.
pub fn check_starstar(g: &PermGroup, a: &SubgroupHandle) -> Result<StarReport> {
    scan(g, a, Condition::StarStar)
}

#[derive(Clone, Copy, Debug, Serialize, PartialEq, Eq)]
pub struct WielandtReport {
    /// `A sn ⟨A, g⟩` for all `g ∈ G`.
    pub ii: bool,
    /// `A sn ⟨A, A^g⟩` for all `g ∈ G`.
    pub iii: bool,
    /// `A sn ⟨A, A^{a^g}⟩` for all `a ∈ A`, `g ∈ G`.
    pub iv: bool,
}

/// Exhaustive evaluation of Wielandt's conditions.
///
/// Condition (iii) depends on `g` only through `A^g`, so it runs over the
/// conjugates of `A`; condition (iv) runs over the union of the classes
/// meeting `A`.
pub fn check_wielandt(g: &PermGroup, a: &SubgroupHandle) -> Result<WielandtReport> {
    if !a.group().is_subgroup_of(g) {
        return Err(Error::NotASubgroup("A is not contained in G".into()));
    }
    let a = a.group();
    let elements = g.elements()?;
    let all = |n: usize, test: &(dyn Fn(usize) -> Result<bool> + Sync)| -> Result<bool> {
        let miss = par::find_map_first_index(n, |i| match test(i) {
            Ok(true) => None,
            Ok(false) => Some(Ok(())),
            Err(e) => Some(Err(e)),
        });
        match miss {
            None => Ok(true),
            Some(Ok(())) => Ok(false),
            Some(Err(e)) => Err(e),
        }
    };
    let ii = all(elements.len(), &|i| sn_with_element(a, &elements[i]))?;
    let orbit = SubgroupOrbit::compute(g, a)?;
    let iii = all(orbit.len(), &|i| {
        let b = &orbit.members[i];
        let extra: Vec<Permutation> = b.generators().iter().filter(|y| !a.has(y)).cloned().collect();
        if extra.is_empty() {
            return Ok(true);
        }
        subnormal_in(a, &a.extend(&extra)?)
    })?;
    let table = ClassTable::new(g)?;
    let mut classes: Vec<usize> = a
        .elements()?
        .iter()
        .map(|x| table.class_of(x).expect("A ≤ G"))
        .collect();
    classes.sort_unstable();
    classes.dedup();
    let ys: Vec<Permutation> = classes.iter().flat_map(|&c| table.members(c)).collect();
    let iv = all(ys.len(), &|i| sn_with_conjugate(a, &ys[i]))?;
    Ok(WielandtReport { ii, iii, iv })
}
