//! Permutation groups backed by a stabilizer chain.

mod chain;
pub mod file;
mod orbit;

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Deref;
use std::sync::{Arc, OnceLock};

use rand::Rng;

use crate::config;
use crate::conjugacy::ClassData;
use crate::error::{Error, Result};
use crate::perm::Permutation;

use chain::{sift, ChainBuilder, Level};

pub use orbit::{subgroup_orbit, SubgroupOrbit};

/// A permutation group given by generators, with a complete stabilizer chain.
///
/// Cloning is cheap; the chain and any cached element list are shared.
#[derive(Clone)]
pub struct PermGroup {
    inner: Arc<Inner>,
}

struct Inner {
    degree: usize,
    generators: Vec<Permutation>,
    levels: Vec<Level>,
    order: u128,
    elements: OnceLock<Arc<Vec<Permutation>>>,
    classes: OnceLock<Arc<ClassData>>,
}

impl PermGroup {
    /// Builds the group generated by `gens` on `degree` points.
    pub fn new(degree: usize, gens: Vec<Permutation>) -> Result<Self> {
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let mut builder = ChainBuilder::new(degree);
        for g in &gens {
            builder.add_generator(g);
        }
        Self::from_parts(degree, gens, builder.levels)
    }

    pub fn trivial(degree: usize) -> Self {
        Self::from_parts(degree, Vec::new(), Vec::new()).expect("trivial group")
    }

    fn from_parts(degree: usize, generators: Vec<Permutation>, levels: Vec<Level>) -> Result<Self> {
        let mut order: u128 = 1;
        for level in &levels {
            order = order
                .checked_mul(level.orbit.len() as u128)
                .ok_or_else(|| Error::cap("group order overflows 128 bits", u128::MAX))?;
        }
        Ok(PermGroup {
            inner: Arc::new(Inner {
                degree,
                generators,
                levels,
                order,
                elements: OnceLock::new(),
                classes: OnceLock::new(),
            }),
        })
    }

    /// The group generated by `self` together with `extra`, reusing this chain.
    pub fn extend(&self, extra: &[Permutation]) -> Result<PermGroup> {
        let mut builder = ChainBuilder::from_levels(self.degree(), self.inner.levels.clone());
        let mut gens = self.inner.generators.clone();
        for g in extra {
            if g.degree() != self.degree() {
                return Err(Error::DegreeMismatch {
                    expected: self.degree(),
                    found: g.degree(),
                });
            }
            gens.push(g.clone());
            builder.add_generator(g);
        }
        Self::from_parts(self.degree(), gens, builder.levels)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.inner.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.inner.generators
    }

    #[inline]
    pub fn order(&self) -> u128 {
        self.inner.order
    }

    pub fn is_trivial(&self) -> bool {
        self.inner.order == 1
    }

    /// Base points (0-indexed).
    pub fn base(&self) -> Vec<usize> {
        self.inner.levels.iter().map(|l| l.base).collect()
    }

    pub fn basic_orbit_lengths(&self) -> Vec<usize> {
        self.inner.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn strong_generators(&self) -> Vec<Permutation> {
        match self.inner.levels.first() {
            Some(l) => l.gens.clone(),
            None => Vec::new(),
        }
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree())
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        if p.degree() != self.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.degree(),
                found: p.degree(),
            });
        }
        Ok(self.has(p))
    }

    /// Membership for a permutation already known to have the right degree.
    #[inline]
    pub(crate) fn has(&self, p: &Permutation) -> bool {
        let (h, j) = sift(&self.inner.levels, p, 0);
        j == self.inner.levels.len() && h.is_identity()
    }

    /// Position of `p` in the transversal-product enumeration order.
    pub fn rank(&self, p: &Permutation) -> Option<u64> {
        if p.degree() != self.degree() {
            return None;
        }
        let mut h = p.clone();
        let mut rank: u64 = 0;
        for level in &self.inner.levels {
            let k = level.index_of(h.image(level.base))?;
            rank = rank * level.orbit.len() as u64 + k as u64;
            if k != 0 {
                h = h.mul_unchecked(&level.inv_transversal[k]);
            }
        }
        h.is_identity().then_some(rank)
    }

    /// Inverse of [`PermGroup::rank`].
    pub fn element_at(&self, mut rank: u64) -> Option<Permutation> {
        if (rank as u128) >= self.order() {
            return None;
        }
        let mut idx = vec![0usize; self.inner.levels.len()];
        for (l, level) in self.inner.levels.iter().enumerate().rev() {
            let len = level.orbit.len() as u64;
            idx[l] = (rank % len) as usize;
            rank /= len;
        }
        let mut g = self.identity();
        for (l, level) in self.inner.levels.iter().enumerate().rev() {
            if idx[l] != 0 {
                g = g.mul_unchecked(&level.transversal[idx[l]]);
            }
        }
        Some(g)
    }

    /// All elements in rank order. Cached after the first call.
    pub fn elements(&self) -> Result<Arc<Vec<Permutation>>> {
        if let Some(e) = self.inner.elements.get() {
            return Ok(e.clone());
        }
        let cap = config::max_enumerable_order();
        if self.order() > cap as u128 {
            return Err(Error::cap(
                format!("enumerating a group of order {}", self.order()),
                cap as u128,
            ));
        }
        let mut elems = vec![self.identity()];
        for level in self.inner.levels.iter().rev() {
            let mut next = Vec::with_capacity(elems.len() * level.orbit.len());
            for u in &level.transversal {
                for e in &elems {
                    next.push(e.mul_unchecked(u));
                }
            }
            elems = next;
        }
        let elems = Arc::new(elems);
        Ok(self.inner.elements.get_or_init(|| elems).clone())
    }

    pub(crate) fn class_cache(&self) -> &OnceLock<Arc<ClassData>> {
        &self.inner.classes
    }

    /// A uniformly random element.
    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Permutation {
        let mut g = self.identity();
        for level in self.inner.levels.iter().rev() {
            let k = rng.gen_range(0..level.orbit.len());
            if k != 0 {
                g = g.mul_unchecked(&level.transversal[k]);
            }
        }
        g
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree() == other.degree()
            && other.order() % self.order() == 0
            && self.generators().iter().all(|g| other.has(g))
    }

    /// Equal order and mutual generator containment.
    pub fn same_group(&self, other: &PermGroup) -> bool {
        self.order() == other.order() && self.is_subgroup_of(other)
    }

    /// Whether `self` is normalised by every generator of `by`.
    pub fn is_normalized_by(&self, by: &PermGroup) -> bool {
        by.generators().iter().all(|g| {
            self.generators()
                .iter()
                .all(|x| self.has(&x.conj_unchecked(g)))
        })
    }

    pub fn is_p_group(&self, p: u64) -> bool {
        is_power_of(self.order(), p as u128)
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generators();
        gens.iter().enumerate().all(|(i, a)| {
            gens[i + 1..]
                .iter()
                .all(|b| a.mul_unchecked(b) == b.mul_unchecked(a))
        })
    }

    /// The subgroup generated by the conjugates of the generators by `g`.
    pub fn conjugate_by(&self, g: &Permutation) -> PermGroup {
        let gens = self.generators().iter().map(|x| x.conj_unchecked(g)).collect();
        PermGroup::new(self.degree(), gens).expect("degrees already match")
    }

    /// Orbits on points (0-indexed), each sorted, ordered by smallest point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut orbit = vec![start];
            let mut head = 0;
            while head < orbit.len() {
                let pt = orbit[head];
                for g in self.generators() {
                    let im = g.image(pt);
                    if !seen[im] {
                        seen[im] = true;
                        orbit.push(im);
                    }
                }
                head += 1;
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }

    /// Builds the subgroup of `self` generated by `gens`.
    pub fn subgroup(&self, gens: Vec<Permutation>) -> Result<SubgroupHandle> {
        SubgroupHandle::new(self, gens)
    }

    /// `self` viewed as a subgroup of itself.
    pub fn as_subgroup(&self) -> SubgroupHandle {
        SubgroupHandle {
            group: self.clone(),
            parent: self.clone(),
        }
    }

    /// Set of element orders occurring in the group (requires enumeration).
    pub fn element_orders(&self) -> Result<BTreeSet<u64>> {
        Ok(self.elements()?.iter().map(Permutation::order).collect())
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree())
            .field("order", &self.order())
            .field("generators", &self.generators())
            .finish()
    }
}

pub(crate) fn is_power_of(mut n: u128, p: u128) -> bool {
    if p < 2 {
        return n == 1;
    }
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

/// A group together with the group it was built inside.
#[derive(Clone, Debug)]
pub struct SubgroupHandle {
    group: PermGroup,
    parent: PermGroup,
}

impl SubgroupHandle {
    /// Checks that every generator lies in `parent`.
    pub fn new(parent: &PermGroup, gens: Vec<Permutation>) -> Result<Self> {
        for g in &gens {
            if !parent.contains(g)? {
                return Err(Error::NotASubgroup(g.to_cycles()));
            }
        }
        Ok(SubgroupHandle {
            group: PermGroup::new(parent.degree(), gens)?,
            parent: parent.clone(),
        })
    }

    pub fn from_group(parent: &PermGroup, group: PermGroup) -> Result<Self> {
        if group.degree() != parent.degree() {
            return Err(Error::DegreeMismatch {
                expected: parent.degree(),
                found: group.degree(),
            });
        }
        if let Some(g) = group.generators().iter().find(|g| !parent.has(g)) {
            return Err(Error::NotASubgroup(g.to_cycles()));
        }
        Ok(SubgroupHandle {
            group,
            parent: parent.clone(),
        })
    }

    pub(crate) fn unchecked(parent: &PermGroup, group: PermGroup) -> Self {
        debug_assert!(group.is_subgroup_of(parent));
        SubgroupHandle {
            group,
            parent: parent.clone(),
        }
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn parent(&self) -> &PermGroup {
        &self.parent
    }

    pub fn into_group(self) -> PermGroup {
        self.group
    }
}

impl Deref for SubgroupHandle {
    type Target = PermGroup;

    fn deref(&self) -> &PermGroup {
        &self.group
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(s, n).unwrap()
    }

    fn group(n: usize, gens: &[&str]) -> PermGroup {
        PermGroup::new(n, gens.iter().map(|s| p(s, n)).collect()).unwrap()
    }

    /// Brute-force closure under right multiplication by generators.
    fn closure(n: usize, gens: &[Permutation]) -> HashSet<Permutation> {
        let mut seen = HashSet::new();
        let id = Permutation::identity(n);
        let mut queue = vec![id.clone()];
        seen.insert(id);
        while let Some(x) = queue.pop() {
            for g in gens {
                let y = &x * g;
                if seen.insert(y.clone()) {
                    queue.push(y);
                }
            }
        }
        seen
    }

    #[test]
    fn order_matches_closure() {
        let cases: Vec<(usize, Vec<&str>)> = vec![
            (5, vec!["(1,2)", "(1,2,3,4,5)"]),
            (4, vec!["(1,2,3)", "(2,3,4)"]),
            (6, vec!["(1,2,3)", "(1,2)", "(4,5,6)", "(4,5)"]),
            (7, vec!["(1,2,3,4,5,6,7)", "(2,3,5)(4,7,6)"]),
            (8, vec!["(1,2,3,4,5,6,7,8)", "(1,8)(2,7)(3,6)(4,5)"]),
            (6, vec!["(1,2,3,4,5,6)", "(1,2)"]),
            (3, vec![]),
        ];
        for (n, gens) in cases {
            let g = group(n, &gens);
            let perms: Vec<_> = gens.iter().map(|s| p(s, n)).collect();
            assert_eq!(g.order(), closure(n, &perms).len() as u128, "{gens:?}");
        }
    }

    #[test]
    fn s5_and_trivial() {
        assert_eq!(group(5, &["(1,2)", "(1,2,3,4,5)"]).order(), 120);
        let t = group(5, &[]);
        assert_eq!(t.order(), 1);
        assert!(t.contains(&Permutation::identity(5)).unwrap());
        assert_eq!(t.elements().unwrap().len(), 1);
    }

    #[test]
    fn membership() {
        let a4 = group(4, &["(1,2,3)", "(2,3,4)"]);
        assert!(!a4.contains(&p("(1,2)", 4)).unwrap());
        assert!(a4.contains(&p("(1,2)(3,4)", 4)).unwrap());
        assert!(a4.contains(&Permutation::identity(4)).unwrap());
        assert!(matches!(
            a4.contains(&p("(1,2)", 5)),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn elements_are_distinct_and_ranked() {
        let s4 = group(4, &["(1,2)", "(1,2,3,4)"]);
        let elems = s4.elements().unwrap();
        assert_eq!(elems.len(), 24);
        let set: HashSet<_> = elems.iter().cloned().collect();
        assert_eq!(set.len(), 24);
        for (r, e) in elems.iter().enumerate() {
            assert_eq!(s4.rank(e), Some(r as u64));
            assert_eq!(s4.element_at(r as u64).as_ref(), Some(e));
        }
        assert_eq!(s4.rank(&p("(1,2)", 5)), None);
    }

    #[test]
    fn base_points_are_smallest_moved() {
        let g = group(6, &["(3,4,5)", "(4,5,6)"]);
        assert_eq!(g.base()[0], 2);
        assert_eq!(g.order(), 12);
    }

    #[test]
    fn extend_matches_fresh_build() {
        let a4 = group(4, &["(1,2,3)", "(2,3,4)"]);
        let s4 = a4.extend(&[p("(1,2)", 4)]).unwrap();
        assert_eq!(s4.order(), 24);
        assert_eq!(s4.generators().len(), 3);
    }

    #[test]
    fn subgroup_handle_checks_membership() {
        let a4 = group(4, &["(1,2,3)", "(2,3,4)"]);
        assert!(a4.subgroup(vec![p("(1,2)(3,4)", 4)]).is_ok());
        assert!(matches!(
            a4.subgroup(vec![p("(1,2)", 4)]),
            Err(Error::NotASubgroup(_))
        ));
    }

    #[test]
    fn large_symmetric_group_builds() {
        let s16 = group(
            16,
            &["(1,2)", "(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16)"],
        );
        assert_eq!(s16.order(), (1..=16u128).product());
        assert!(s16.elements().is_err());
    }
}
