//! Orbits of subgroups under conjugation.

use std::collections::HashMap;

use crate::config;
use crate::error::{Error, Result};
use crate::perm::Permutation;

use super::{PermGroup, SubgroupHandle};

/// Subgroups up to this order are keyed by their full element set.
const EXACT_KEY_ORDER: u128 = 512;

/// Hashable stand-in for subgroup equality.
///
/// Small subgroups are keyed exactly by their sorted elements; larger ones by
/// their point-orbit partition, with ties settled by [`PermGroup::same_group`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub(crate) enum SubgroupKey {
    Elements(Vec<Permutation>),
    Orbits(u128, Vec<Vec<usize>>),
}

impl SubgroupKey {
    pub fn of(h: &PermGroup) -> Self {
        if h.order() <= EXACT_KEY_ORDER {
            let mut elems = h.elements().expect("small group").as_ref().clone();
            elems.sort_unstable();
            SubgroupKey::Elements(elems)
        } else {
            SubgroupKey::Orbits(h.order(), h.orbits())
        }
    }

    fn is_exact(&self) -> bool {
        matches!(self, SubgroupKey::Elements(_))
    }
}

/// Deduplicating set of subgroups.
#[derive(Default)]
pub(crate) struct SubgroupIndex {
    buckets: HashMap<SubgroupKey, Vec<usize>>,
}

impl SubgroupIndex {
    /// Looks up `h` among `members`; on a miss, records it at index `members.len()`.
    pub fn find_or_insert(&mut self, h: &PermGroup, members: &[PermGroup]) -> (usize, bool) {
        let key = SubgroupKey::of(h);
        let exact = key.is_exact();
        let bucket = self.buckets.entry(key).or_default();
        for &i in bucket.iter() {
            if exact || members[i].same_group(h) {
                return (i, false);
            }
        }
        bucket.push(members.len());
        (members.len(), true)
    }
}

/// Conjugates of a subgroup, found by BFS from it over the generators of the
/// acting group.
pub struct SubgroupOrbit {
    /// `members[0]` is the starting subgroup.
    pub members: Vec<PermGroup>,
    /// `members[0]^transporters[i] = members[i]`
    pub transporters: Vec<Permutation>,
    /// `edges[i][s]` is the index of `members[i]^{gens[s]}`.
    pub edges: Vec<Vec<usize>>,
}

impl SubgroupOrbit {
    pub fn compute(g: &PermGroup, a: &PermGroup) -> Result<Self> {
        let cap = config::max_enumerable_order();
        let mut members = vec![a.clone()];
        let mut transporters = vec![g.identity()];
        let mut edges: Vec<Vec<usize>> = Vec::new();
        let mut index = SubgroupIndex::default();
        index.find_or_insert(a, &[]);
        let mut head = 0;
        while head < members.len() {
            let mut row = Vec::with_capacity(g.generators().len());
            for s in g.generators() {
                let image = members[head].conjugate_by(s);
                let (k, fresh) = index.find_or_insert(&image, &members);
                if fresh {
                    if members.len() as u64 >= cap {
                        return Err(Error::cap("subgroup orbit length", cap as u128));
                    }
                    members.push(image);
                    transporters.push(transporters[head].mul_unchecked(s));
                }
                row.push(k);
            }
            edges.push(row);
            head += 1;
        }
        Ok(SubgroupOrbit {
            members,
            transporters,
            edges,
        })
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// All distinct conjugates `A^g`, `g ∈ G`, in BFS order starting at `A`.
pub fn subgroup_orbit(g: &PermGroup, a: &SubgroupHandle) -> Result<Vec<SubgroupHandle>> {
    if !a.group().is_subgroup_of(g) {
        return Err(Error::NotASubgroup("subgroup".into()));
    }
    let orbit = SubgroupOrbit::compute(g, a.group())?;
    Ok(orbit
        .members
        .into_iter()
        .map(|m| SubgroupHandle::unchecked(g, m))
        .collect())
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

    #[test]
    fn orbit_lengths() {
        let s3 = group(3, &["(1,2)", "(1,2,3)"]);
        let s4 = group(4, &["(1,2)", "(1,2,3,4)"]);
        let a = s3.subgroup(vec![p("(1,2,3)", 3)]).unwrap();
        assert_eq!(subgroup_orbit(&s3, &a).unwrap().len(), 1);
        let a = s4.subgroup(vec![p("(1,2,3)", 4)]).unwrap();
        assert_eq!(subgroup_orbit(&s4, &a).unwrap().len(), 4);
        let a = s4.subgroup(vec![p("(1,2)(3,4)", 4)]).unwrap();
        assert_eq!(subgroup_orbit(&s4, &a).unwrap().len(), 3);
    }

    #[test]
    fn transporters_are_correct() {
        let s5 = group(5, &["(1,2)", "(1,2,3,4,5)"]);
        let a = group(5, &["(1,2,3)", "(1,2)"]);
        let orbit = SubgroupOrbit::compute(&s5, &a).unwrap();
        assert_eq!(orbit.len(), 10);
        for (m, t) in orbit.members.iter().zip(&orbit.transporters) {
            assert!(a.conjugate_by(t).same_group(m));
        }
    }
}
