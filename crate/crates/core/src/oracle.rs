//! Brute-force subgroup lattice for groups of order at most 200.
//!
//! Everything here works from a multiplication table built by closing the
//! generators under multiplication, so it shares no code with the stabilizer
//! chain. It exists to certify the fast paths.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::group::{PermGroup, SubgroupHandle};
use crate::perm::Permutation;

pub const ORACLE_MAX_ORDER: usize = 200;

const WORDS: usize = ORACLE_MAX_ORDER.div_ceil(64);

/// Element subset as a bitset over element indices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Bits([u64; WORDS]);

impl Bits {
    fn empty() -> Self {
        Bits([0; WORDS])
    }

    fn insert(&mut self, i: usize) -> bool {
        let (w, b) = (i / 64, 1u64 << (i % 64));
        let fresh = self.0[w] & b == 0;
        self.0[w] |= b;
        fresh
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_subset(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }

    fn and(&self, other: &Bits) -> Bits {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(&other.0) {
            *a &= b;
        }
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..WORDS * 64).filter(|&i| self.contains(i))
    }
}

pub struct SubgroupLattice {
    group: PermGroup,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    mul: Vec<u16>,
    inv: Vec<usize>,
    subgroups: Vec<Bits>,
    gens: Vec<Vec<usize>>,
}

impl SubgroupLattice {
    pub fn new(group: &PermGroup) -> Result<Self> {
        let identity = group.identity();
        let mut elements = vec![identity.clone()];
        let mut index = HashMap::from([(identity, 0usize)]);
        let mut head = 0;
        while head < elements.len() {
            for s in group.generators() {
                let y = elements[head].mul_unchecked(s);
                if !index.contains_key(&y) {
                    if elements.len() == ORACLE_MAX_ORDER {
                        return Err(Error::cap("oracle group order", ORACLE_MAX_ORDER as u128));
                    }
                    index.insert(y.clone(), elements.len());
                    elements.push(y);
                }
            }
            head += 1;
        }
        let n = elements.len();
        let mut mul = vec![0u16; n * n];
        for i in 0..n {
            for j in 0..n {
                mul[i * n + j] = index[&elements[i].mul_unchecked(&elements[j])] as u16;
            }
        }
        let inv = (0..n)
            .map(|i| (0..n).find(|&j| mul[i * n + j] == 0).expect("group element has an inverse"))
            .collect();
        let mut lattice = SubgroupLattice {
            group: group.clone(),
            elements,
            index,
            mul,
            inv,
            subgroups: Vec::new(),
            gens: Vec::new(),
        };
        lattice.enumerate();
        Ok(lattice)
    }

    fn m(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.elements.len() + b] as usize
    }

    /// `g⁻¹ x g` on indices.
    fn conj(&self, x: usize, g: usize) -> usize {
        self.m(self.m(self.inv[g], x), g)
    }

    fn closure(&self, gens: &[usize]) -> Bits {
        let mut bits = Bits::empty();
        bits.insert(0);
        let mut queue = vec![0usize];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            for &s in gens {
                let y = self.m(x, s);
                if bits.insert(y) {
                    queue.push(y);
                }
            }
            head += 1;
        }
        bits
    }

    /// Cyclic subgroups, then joins with cyclic subgroups until nothing new appears.
    fn enumerate(&mut self) {
        let mut seen: HashMap<Bits, usize> = HashMap::new();
        let mut push = |this: &mut Self, bits: Bits, gens: Vec<usize>| {
            if let std::collections::hash_map::Entry::Vacant(e) = seen.entry(bits) {
                e.insert(this.subgroups.len());
                this.subgroups.push(bits);
                this.gens.push(gens);
            }
        };
        for x in 0..self.elements.len() {
            let bits = self.closure(&[x]);
            push(self, bits, vec![x]);
        }
        let cyclic = self.subgroups.len();
        let mut i = 0;
        while i < self.subgroups.len() {
            for c in 0..cyclic {
                if self.subgroups[c].is_subset(&self.subgroups[i]) {
                    continue;
                }
                let mut gens = self.gens[i].clone();
                gens.extend(&self.gens[c]);
                let bits = self.closure(&gens);
                push(self, bits, gens);
            }
            i += 1;
        }
        let mut order: Vec<usize> = (0..self.subgroups.len()).collect();
        order.sort_by_key(|&k| (self.subgroups[k].len(), self.subgroups[k]));
        self.subgroups = order.iter().map(|&k| self.subgroups[k]).collect();
        self.gens = order.iter().map(|&k| self.gens[k].clone()).collect();
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Number of subgroups.
    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn bits(&self, i: usize) -> &Bits {
        &self.subgroups[i]
    }

    pub fn subgroup_order(&self, i: usize) -> usize {
        self.subgroups[i].len()
    }

    pub fn whole(&self) -> usize {
        self.subgroups.len() - 1
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn find(&self, bits: &Bits) -> Option<usize> {
        self.subgroups.iter().position(|b| b == bits)
    }

    /// Index of the subgroup with the same elements as `h`.
    pub fn index_of(&self, h: &PermGroup) -> Option<usize> {
        let mut gens = Vec::new();
        for x in h.generators() {
            gens.push(*self.index.get(x)?);
        }
        self.find(&self.closure(&gens))
    }

    pub fn to_group(&self, i: usize) -> Result<SubgroupHandle> {
        let gens = self.gens[i].iter().map(|&x| self.elements[x].clone()).collect();
        SubgroupHandle::new(&self.group, gens)
    }

    /// Whether subgroup `i` is normal in subgroup `j` (and contained in it).
    pub fn is_normal_in(&self, i: usize, j: usize) -> bool {
        let (a, b) = (&self.subgroups[i], &self.subgroups[j]);
        a.is_subset(b) && self.gens[j].iter().all(|&g| a.iter().all(|x| a.contains(self.conj(x, g))))
    }

    pub fn is_normal(&self, i: usize) -> bool {
        self.is_normal_in(i, self.whole())
    }

    /// Subnormality as reachability from the whole group along normal inclusions.
    pub fn is_subnormal(&self, a: usize) -> bool {
        let target = self.subgroups[a];
        let mut reached = vec![false; self.len()];
        let mut stack = vec![self.whole()];
        reached[self.whole()] = true;
        while let Some(k) = stack.pop() {
            if k == a {
                return true;
            }
            for j in 0..self.len() {
                if !reached[j] && target.is_subset(&self.subgroups[j]) && self.is_normal_in(j, k) {
                    reached[j] = true;
                    stack.push(j);
                }
            }
        }
        false
    }

    /// Intersection of all normal subgroups containing subgroup `a`.
    pub fn smallest_normal_containing(&self, a: usize) -> usize {
        let mut acc = self.subgroups[self.whole()];
        for j in 0..self.len() {
            if self.subgroups[a].is_subset(&self.subgroups[j]) && self.is_normal(j) {
                acc = acc.and(&self.subgroups[j]);
            }
        }
        self.find(&acc).expect("intersection of subgroups is a subgroup")
    }

    fn is_p_subgroup(&self, i: usize, p: usize) -> bool {
        let mut n = self.subgroups[i].len();
        while n % p == 0 {
            n /= p;
        }
        n == 1
    }

    /// Intersection of all Sylow `p`-subgroups.
    pub fn sylow_intersection(&self, p: usize) -> usize {
        let mut sylow = self.order();
        while sylow % p == 0 {
            sylow /= p;
        }
        let sylow_order = self.order() / sylow;
        let mut acc = self.subgroups[self.whole()];
        for j in 0..self.len() {
            if self.subgroups[j].len() == sylow_order {
                acc = acc.and(&self.subgroups[j]);
            }
        }
        self.find(&acc).expect("intersection of subgroups is a subgroup")
    }

    /// Minimal non-trivial normal subgroups.
    pub fn minimal_normal(&self) -> Vec<usize> {
        let normals: Vec<usize> = (1..self.len()).filter(|&j| self.is_normal(j)).collect();
        normals
            .iter()
            .copied()
            .filter(|&j| {
                !normals
                    .iter()
                    .any(|&k| k != j && self.subgroups[k].is_subset(&self.subgroups[j]))
            })
            .collect()
    }

    fn normalized_by(&self, e: usize, x: usize) -> bool {
        let bits = &self.subgroups[e];
        self.gens[x].iter().all(|&g| bits.iter().all(|y| bits.contains(self.conj(y, g))))
    }

    /// Non-trivial `p`-subgroups normalised by subgroup `x`.
    pub fn invariant_p_subgroups(&self, x: usize, p: usize) -> Vec<usize> {
        (1..self.len())
            .filter(|&e| self.is_p_subgroup(e, p) && self.normalized_by(e, x))
            .collect()
    }

    /// Conjugates of subgroup `a`.
    pub fn conjugates(&self, a: usize) -> Vec<usize> {
        let mut out: Vec<usize> = (0..self.order())
            .map(|g| {
                let mut bits = Bits::empty();
                for x in self.subgroups[a].iter() {
                    bits.insert(self.conj(x, g));
                }
                self.find(&bits).expect("conjugate of a subgroup is a subgroup")
            })
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// `x`-invariant `p`-subgroups generated by the conjugates of `a` they contain.
    pub fn invariant_p_subgroups_from(&self, a: usize, x: usize, p: usize) -> Vec<usize> {
        let conj = self.conjugates(a);
        self.invariant_p_subgroups(x, p)
            .into_iter()
            .filter(|&e| {
                let inside: Vec<usize> = conj
                    .iter()
                    .copied()
                    .filter(|&b| self.subgroups[b].is_subset(&self.subgroups[e]))
                    .collect();
                let gens: Vec<usize> = inside.iter().flat_map(|&b| self.gens[b].clone()).collect();
                !inside.is_empty() && self.closure(&gens) == self.subgroups[e]
            })
            .collect()
    }

    /// One subgroup from each conjugacy class, smallest index first.
    pub fn class_representatives(&self) -> Vec<usize> {
        let mut covered = vec![false; self.len()];
        let mut reps = Vec::new();
        for i in 0..self.len() {
            if covered[i] {
                continue;
            }
            reps.push(i);
            for j in self.conjugates(i) {
                covered[j] = true;
            }
        }
        reps
    }

    pub fn is_cyclic(&self, i: usize) -> bool {
        let n = self.subgroups[i].len() as u64;
        self.subgroups[i].iter().any(|x| self.elements[x].order() == n)
    }
}

/// Every subgroup of `g`, by brute force; `g` must have order at most 200.
pub fn all_subgroups(g: &PermGroup) -> Result<Vec<SubgroupHandle>> {
    let lattice = SubgroupLattice::new(g)?;
    (0..lattice.len()).map(|i| lattice.to_group(i)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(n: usize, gens: &[&str]) -> PermGroup {
        PermGroup::new(
            n,
            gens.iter().map(|s| Permutation::parse_cycles(s, n).unwrap()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn subgroup_counts() {
        let s4 = group(4, &["(1,2)", "(1,2,3,4)"]);
        assert_eq!(all_subgroups(&s4).unwrap().len(), 30);
        let c6 = group(6, &["(1,2,3,4,5,6)"]);
        assert_eq!(all_subgroups(&c6).unwrap().len(), 4);
        let a5 = group(5, &["(1,2,3)", "(1,2,3,4,5)"]);
        assert_eq!(all_subgroups(&a5).unwrap().len(), 59);
        let s5 = group(5, &["(1,2)", "(1,2,3,4,5)"]);
        assert!(SubgroupLattice::new(&s5).is_ok());
        let s6 = group(6, &["(1,2)", "(1,2,3,4,5,6)"]);
        assert!(SubgroupLattice::new(&s6).map(|_| ()).unwrap_err().is_resource_cap());
    }

    #[test]
    fn lattice_queries_on_s4() {
        let s4 = group(4, &["(1,2)", "(1,2,3,4)"]);
        let l = SubgroupLattice::new(&s4).unwrap();
        let klein = l.sylow_intersection(2);
        assert_eq!(l.subgroup_order(klein), 4);
        assert_eq!(l.subgroup_order(l.sylow_intersection(3)), 1);
        assert_eq!(l.minimal_normal(), vec![klein]);
        let v = l.index_of(&group(4, &["(1,2)(3,4)"])).unwrap();
        assert!(l.is_subnormal(v));
        let t = l.index_of(&group(4, &["(1,2,3)"])).unwrap();
        assert!(!l.is_subnormal(t));
        assert_eq!(l.conjugates(t).len(), 4);
        assert_eq!(l.subgroup_order(l.smallest_normal_containing(v)), 4);
        assert_eq!(l.class_representatives().len(), 11);
    }
}
