//! Conjugacy classes by full element enumeration.
//!
//! Classes are the orbits of the conjugation action of the generators on the
//! element list. They are numbered by first appearance in rank order, and each
//! representative is the lowest-ranked member of its class.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::{gcd, Permutation};

const UNASSIGNED: u32 = u32::MAX;

#[derive(Clone, Debug)]
pub struct ClassInfo {
    pub representative: Permutation,
    pub size: usize,
    pub element_order: u64,
    /// Ranks of the members, representative first.
    members: Vec<u64>,
}

/// Class data cached on the group it was computed for.
pub struct ClassData {
    classes: Vec<ClassInfo>,
    class_of_rank: Vec<u32>,
    order_index: BTreeMap<u64, Vec<usize>>,
}

#[derive(Clone)]
pub struct ClassTable {
    group: PermGroup,
    data: Arc<ClassData>,
}

/// Per-class line of a serialized class table.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ClassSummary {
    pub representative: String,
    pub size: usize,
    pub element_order: u64,
}

impl ClassTable {
    pub fn new(group: &PermGroup) -> Result<Self> {
        if let Some(data) = group.class_cache().get() {
            return Ok(ClassTable {
                group: group.clone(),
                data: data.clone(),
            });
        }
        let data = Arc::new(compute(group)?);
        let data = group.class_cache().get_or_init(|| data).clone();
        Ok(ClassTable {
            group: group.clone(),
            data,
        })
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.data.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.classes.is_empty()
    }

    pub fn classes(&self) -> &[ClassInfo] {
        &self.data.classes
    }

    pub fn class(&self, i: usize) -> &ClassInfo {
        &self.data.classes[i]
    }

    /// Members of class `i`, starting at the representative.
    pub fn members(&self, i: usize) -> impl ExactSizeIterator<Item = Permutation> + '_ {
        let elems = self.group.elements().expect("class table implies enumerable group");
        self.data.classes[i]
            .members
            .iter()
            .map(move |&r| elems[r as usize].clone())
    }

    /// Index of the class containing `p`, or `None` if `p ∉ G`.
    pub fn class_of(&self, p: &Permutation) -> Option<usize> {
        let r = self.group.rank(p)?;
        Some(self.data.class_of_rank[r as usize] as usize)
    }

    /// Classes whose elements have order `k`.
    pub fn elements_of_order(&self, k: u64) -> Vec<usize> {
        self.data.order_index.get(&k).cloned().unwrap_or_default()
    }

    /// A generator for each conjugacy class of non-trivial cyclic subgroups
    /// whose order satisfies `keep`, paired with the class it was taken from.
    ///
    /// Two element classes give the same subgroup class exactly when one holds
    /// a generating power of the other, so classes are grouped by the set of
    /// classes their generating powers fall in.
    pub fn cyclic_subgroup_representatives(
        &self,
        keep: impl Fn(u64) -> bool,
    ) -> Vec<(usize, Permutation)> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for (i, class) in self.data.classes.iter().enumerate() {
            let k = class.element_order;
            if k == 1 || !keep(k) {
                continue;
            }
            let x = &class.representative;
            let mut signature: Vec<usize> = (1..k)
                .filter(|&j| gcd(j, k) == 1)
                .map(|j| self.class_of(&x.pow(j as i64)).expect("power stays in the group"))
                .collect();
            signature.sort_unstable();
            signature.dedup();
            if seen.insert(signature) {
                out.push((i, x.clone()));
            }
        }
        out
    }

    pub fn summaries(&self) -> Vec<ClassSummary> {
        self.data
            .classes
            .iter()
            .map(|c| ClassSummary {
                representative: c.representative.to_cycles(),
                size: c.size,
                element_order: c.element_order,
            })
            .collect()
    }
}

pub fn class_table(g: &PermGroup) -> Result<ClassTable> {
    ClassTable::new(g)
}

pub fn class_members(t: &ClassTable, i: usize) -> impl Iterator<Item = Permutation> + '_ {
    t.members(i)
}

pub fn elements_of_order(t: &ClassTable, k: u64) -> Vec<usize> {
    t.elements_of_order(k)
}

fn compute(g: &PermGroup) -> Result<ClassData> {
    let elems = g.elements()?;
    let n = elems.len();
    if n >= UNASSIGNED as usize {
        return Err(Error::cap("class table size", UNASSIGNED as u128));
    }
    let gens = g.generators();
    let mut class_of_rank = vec![UNASSIGNED; n];
    let mut classes = Vec::new();
    for start in 0..n {
        if class_of_rank[start] != UNASSIGNED {
            continue;
        }
        let id = classes.len() as u32;
        class_of_rank[start] = id;
        let mut members = vec![start as u64];
        let mut head = 0;
        while head < members.len() {
            let x = &elems[members[head] as usize];
            for s in gens {
                let y = x.conj_unchecked(s);
                let r = g.rank(&y).expect("conjugate stays in the group") as usize;
                if class_of_rank[r] == UNASSIGNED {
                    class_of_rank[r] = id;
                    members.push(r as u64);
                }
            }
            head += 1;
        }
        let rep = elems[start].clone();
        classes.push(ClassInfo {
            element_order: rep.order(),
            representative: rep,
            size: members.len(),
            members,
        });
    }
    let mut order_index: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
    for (i, c) in classes.iter().enumerate() {
        order_index.entry(c.element_order).or_default().push(i);
    }
    Ok(ClassData {
        classes,
        class_of_rank,
        order_index,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(s, n).unwrap()
    }

    fn symmetric(n: usize) -> PermGroup {
        let cycle: Vec<usize> = (0..n).collect();
        PermGroup::new(
            n,
            vec![
                Permutation::from_cycles(n, &[vec![0, 1]]).unwrap(),
                Permutation::from_cycles(n, &[cycle]).unwrap(),
            ],
        )
        .unwrap()
    }

    /// Number of integer partitions of `n`, by the standard recurrence.
    fn partitions(n: usize) -> usize {
        let mut ways = vec![0usize; n + 1];
        ways[0] = 1;
        for part in 1..=n {
            for total in part..=n {
                ways[total] += ways[total - part];
            }
        }
        ways[n]
    }

    #[test]
    fn symmetric_class_counts_are_partition_numbers() {
        for n in 2..=7 {
            let t = ClassTable::new(&symmetric(n)).unwrap();
            assert_eq!(t.len(), partitions(n), "S{n}");
        }
    }

    #[test]
    fn s4_table() {
        let s4 = symmetric(4);
        let t = ClassTable::new(&s4).unwrap();
        assert_eq!(t.len(), 5);
        assert_eq!(t.classes().iter().map(|c| c.size).sum::<usize>(), 24);
        let fours = t.elements_of_order(4);
        assert_eq!(fours.len(), 1);
        assert_eq!(t.class(fours[0]).size, 6);
        let ones = t.elements_of_order(1);
        assert_eq!(ones, vec![0]);
        assert_eq!(t.members(0).collect::<Vec<_>>(), vec![Permutation::identity(4)]);
        let transp = t.class_of(&p("(1,2)", 4)).unwrap();
        assert_eq!(t.members(transp).count(), 6);
        assert!(t.elements_of_order(5).is_empty());
    }

    #[test]
    fn members_are_conjugate_to_representative() {
        let s5 = symmetric(5);
        let t = ClassTable::new(&s5).unwrap();
        let elems = s5.elements().unwrap();
        for i in 0..t.len() {
            let rep = &t.class(i).representative;
            let members: Vec<_> = t.members(i).collect();
            assert_eq!(&members[0], rep);
            for m in &members {
                assert!(elems.iter().any(|g| &rep.conj_unchecked(g) == m));
            }
            assert_eq!(120 % members.len(), 0);
        }
    }

    #[test]
    fn cyclic_subgroup_classes() {
        let t = ClassTable::new(&symmetric(4)).unwrap();
        let orders: Vec<u64> = t
            .cyclic_subgroup_representatives(|_| true)
            .iter()
            .map(|(_, x)| x.order())
            .collect();
        assert_eq!(orders.len(), 4);
        assert_eq!(orders.iter().filter(|&&k| k == 2).count(), 2);
        let a5 = PermGroup::new(5, vec![p("(1,2,3)", 5), p("(1,2,3,4,5)", 5)]).unwrap();
        let t = ClassTable::new(&a5).unwrap();
        // the two classes of 5-cycles generate conjugate subgroups
        assert_eq!(t.elements_of_order(5).len(), 2);
        assert_eq!(t.cyclic_subgroup_representatives(|k| k == 5).len(), 1);
        assert_eq!(t.cyclic_subgroup_representatives(|k| k % 2 == 1).len(), 2);
    }
}
