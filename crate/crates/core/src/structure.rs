//! Normal closures, series, centralizers, normalizers and the p-core.

use std::collections::HashMap;

use serde::Serialize;

use crate::config::{self, Fault};
use crate::conjugacy::ClassTable;
use crate::error::{Error, Result};
use crate::group::{PermGroup, SubgroupHandle, SubgroupOrbit};
use crate::perm::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SeriesKind {
    Derived,
    LowerCentral,
    Wielandt,
}

/// A descending chain of subgroups; each term contains the next.
#[derive(Clone, Debug)]
pub struct SeriesRecord {
    pub terms: Vec<SubgroupHandle>,
    pub kind: SeriesKind,
}

impl SeriesRecord {
    pub fn last(&self) -> &SubgroupHandle {
        self.terms.last().expect("series has at least one term")
    }

    pub fn orders(&self) -> Vec<u128> {
        self.terms.iter().map(|t| t.order()).collect()
    }
}

/// Smallest subgroup containing `seed` and normalised by every element of `conj_by`.
///
/// With `p_bound = Some(p)` the computation gives up (returning `None`) as soon
/// as the subgroup stops being a `p`-group.
pub(crate) fn closure_under(
    seed: &PermGroup,
    conj_by: &[Permutation],
    p_bound: Option<u64>,
) -> Result<Option<PermGroup>> {
    let mut n = seed.clone();
    if let Some(p) = p_bound {
        if !n.is_p_group(p) {
            return Ok(None);
        }
    }
    let mut i = 0;
    while i < n.generators().len() {
        let x = n.generators()[i].clone();
        for s in conj_by {
            let c = x.conj_unchecked(s);
            if !n.has(&c) {
                n = n.extend(&[c])?;
                if let Some(p) = p_bound {
                    if !n.is_p_group(p) {
                        return Ok(None);
                    }
                }
            }
        }
        i += 1;
    }
    Ok(Some(n))
}

pub(crate) fn normal_closure_group(g: &PermGroup, a: &PermGroup) -> Result<PermGroup> {
    if config::fault() == Fault::IdleNormalClosure {
        return Ok(a.clone());
    }
    Ok(closure_under(a, g.generators(), None)?.expect("unbounded closure always succeeds"))
}

/// `⟨A^G⟩`, the smallest normal subgroup of `G` containing `A`.
pub fn normal_closure(g: &PermGroup, a: &SubgroupHandle) -> Result<SubgroupHandle> {
    Ok(SubgroupHandle::unchecked(g, normal_closure_group(g, a.group())?))
}

/// Group generated by the union of generator lists.
pub(crate) fn join(degree: usize, groups: &[&PermGroup]) -> Result<PermGroup> {
    let mut acc = PermGroup::trivial(degree);
    for h in groups {
        let missing: Vec<_> = h.generators().iter().filter(|x| !acc.has(x)).cloned().collect();
        if !missing.is_empty() {
            acc = acc.extend(&missing)?;
        }
    }
    Ok(acc)
}

/// Group generated by `elems`, adding each only when not already present.
pub(crate) fn generated_by<'a>(
    degree: usize,
    elems: impl IntoIterator<Item = &'a Permutation>,
) -> Result<PermGroup> {
    let mut acc = PermGroup::trivial(degree);
    for x in elems {
        if !acc.has(x) {
            acc = acc.extend(std::slice::from_ref(x))?;
        }
    }
    Ok(acc)
}

pub fn is_p_group(h: &PermGroup, p: u64) -> bool {
    h.is_p_group(p)
}

/// `O_p(G)`: join of the normal closures `⟨⟨x⟩^G⟩` of class representatives that are p-groups.
pub fn p_core(g: &PermGroup, p: u64) -> Result<SubgroupHandle> {
    let table = ClassTable::new(g)?;
    let mut core = PermGroup::trivial(g.degree());
    for class in table.classes() {
        let x = &class.representative;
        if class.element_order == 1 || !crate::group::is_power_of(class.element_order as u128, p as u128) {
            continue;
        }
        if core.has(x) {
            continue;
        }
        let cyclic = PermGroup::new(g.degree(), vec![x.clone()])?;
        let closure = normal_closure_group(g, &cyclic)?;
        if closure.is_p_group(p) {
            core = join(g.degree(), &[&core, &closure])?;
        }
    }
    Ok(SubgroupHandle::unchecked(g, core))
}

/// Orbit of `start` under `act` with transporters, then the stabilizer from
/// Schreier generators.
fn orbit_stabilizer<T, F>(g: &PermGroup, start: T, act: F) -> Result<(usize, PermGroup)>
where
    T: std::hash::Hash + Eq + Clone,
    F: Fn(&T, &Permutation) -> T,
{
    let cap = config::max_enumerable_order();
    let gens = g.generators();
    let mut index: HashMap<T, usize> = HashMap::new();
    let mut points = vec![start.clone()];
    let mut transporters = vec![g.identity()];
    let mut edges: Vec<usize> = Vec::new();
    index.insert(start, 0);
    let mut head = 0;
    while head < points.len() {
        for s in gens {
            let image = act(&points[head], s);
            let k = match index.get(&image) {
                Some(&k) => k,
                None => {
                    if points.len() as u64 >= cap {
                        return Err(Error::cap("orbit length", cap as u128));
                    }
                    let k = points.len();
                    index.insert(image.clone(), k);
                    points.push(image);
                    transporters.push(transporters[head].mul_unchecked(s));
                    k
                }
            };
            edges.push(k);
        }
        head += 1;
    }
    let stab = schreier_stabilizer(g, &transporters, &edges)?;
    Ok((points.len(), stab))
}

/// Stabilizer of orbit point 0 given transporters and the `point × generator`
/// edge table (row-major).
fn schreier_stabilizer(g: &PermGroup, transporters: &[Permutation], edges: &[usize]) -> Result<PermGroup> {
    let gens = g.generators();
    let len = transporters.len() as u128;
    let target = g.order() / len;
    let mut stab = PermGroup::trivial(g.degree());
    'outer: for (i, t) in transporters.iter().enumerate() {
        for (j, s) in gens.iter().enumerate() {
            if stab.order() == target {
                break 'outer;
            }
            let k = edges[i * gens.len() + j];
            let ts = t.mul_unchecked(s);
            if ts == transporters[k] {
                continue;
            }
            let x = ts.mul_unchecked(&transporters[k].inverse());
            if !stab.has(&x) {
                stab = stab.extend(&[x])?;
            }
        }
    }
    debug_assert_eq!(stab.order(), target);
    Ok(stab)
}

/// `C_G(x)` via orbit–stabilizer on the conjugation action.
pub fn centralizer_of_element(g: &PermGroup, x: &Permutation) -> Result<SubgroupHandle> {
    if !g.contains(x)? {
        return Err(Error::NotASubgroup(x.to_cycles()));
    }
    let (_, stab) = orbit_stabilizer(g, x.clone(), |y, s| y.conj_unchecked(s))?;
    Ok(SubgroupHandle::unchecked(g, stab))
}

/// `N_G(H)` as the stabilizer of `H` in its conjugation orbit.
pub fn normalizer(g: &PermGroup, h: &SubgroupHandle) -> Result<SubgroupHandle> {
    if !h.group().is_subgroup_of(g) {
        return Err(Error::NotASubgroup("subgroup".into()));
    }
    let orbit = SubgroupOrbit::compute(g, h.group())?;
    let edges: Vec<usize> = orbit.edges.iter().flatten().copied().collect();
    let stab = schreier_stabilizer(g, &orbit.transporters, &edges)?;
    Ok(SubgroupHandle::unchecked(g, stab))
}

/// Elements of `h` commuting with every element of `with` (enumerates `h`).
pub fn centralizer_in(h: &PermGroup, with: &[Permutation]) -> Result<PermGroup> {
    let elems = h.elements()?;
    let commuting = elems
        .iter()
        .filter(|e| with.iter().all(|x| e.mul_unchecked(x) == x.mul_unchecked(e)));
    generated_by(h.degree(), commuting)
}

pub fn center(g: &PermGroup) -> Result<SubgroupHandle> {
    Ok(SubgroupHandle::unchecked(g, centralizer_in(g, g.generators())?))
}

/// `[K, K]` for `K = ⟨X⟩`: normal closure in `K` of the generator commutators.
fn commutator_subgroup(k: &PermGroup) -> Result<PermGroup> {
    let gens = k.generators();
    let mut comms = Vec::new();
    for (i, a) in gens.iter().enumerate() {
        for b in &gens[i + 1..] {
            let c = a.commutator(b)?;
            if !c.is_identity() {
                comms.push(c);
            }
        }
    }
    let seed = generated_by(k.degree(), &comms)?;
    normal_closure_group(k, &seed)
}

pub fn derived_series(g: &PermGroup) -> Result<SeriesRecord> {
    let mut terms = vec![g.as_subgroup()];
    loop {
        let current = terms.last().unwrap().group().clone();
        let next = commutator_subgroup(&current)?;
        if next.order() == current.order() {
            break;
        }
        let done = next.is_trivial();
        terms.push(SubgroupHandle::unchecked(g, next));
        if done {
            break;
        }
    }
    Ok(SeriesRecord {
        terms,
        kind: SeriesKind::Derived,
    })
}

pub fn is_solvable(g: &PermGroup) -> Result<bool> {
    Ok(derived_series(g)?.last().is_trivial())
}

pub fn lower_central_series(g: &PermGroup) -> Result<SeriesRecord> {
    let mut terms = vec![g.as_subgroup()];
    loop {
        let current = terms.last().unwrap().group().clone();
        let mut comms = Vec::new();
        for a in current.generators() {
            for x in g.generators() {
                let c = a.commutator(x)?;
                if !c.is_identity() {
                    comms.push(c);
                }
            }
        }
        let seed = generated_by(g.degree(), &comms)?;
        let next = normal_closure_group(g, &seed)?;
        if next.order() == current.order() {
            break;
        }
        let done = next.is_trivial();
        terms.push(SubgroupHandle::unchecked(g, next));
        if done {
            break;
        }
    }
    Ok(SeriesRecord {
        terms,
        kind: SeriesKind::LowerCentral,
    })
}

pub fn is_nilpotent(g: &PermGroup) -> Result<bool> {
    Ok(lower_central_series(g)?.last().is_trivial())
}

/// Distinct normal closures of non-identity class representatives, in class order.
pub(crate) fn class_closures(g: &PermGroup) -> Result<Vec<PermGroup>> {
    let table = ClassTable::new(g)?;
    let mut out: Vec<PermGroup> = Vec::new();
    for class in table.classes().iter().skip(1) {
        let cyclic = PermGroup::new(g.degree(), vec![class.representative.clone()])?;
        let n = normal_closure_group(g, &cyclic)?;
        if !out.iter().any(|m| m.same_group(&n)) {
            out.push(n);
        }
    }
    Ok(out)
}

pub fn minimal_normal_subgroups(g: &PermGroup) -> Result<Vec<SubgroupHandle>> {
    let closures = class_closures(g)?;
    let minimal = closures
        .iter()
        .filter(|n| {
            !closures
                .iter()
                .any(|m| m.order() < n.order() && m.is_subgroup_of(n))
        })
        .map(|n| SubgroupHandle::unchecked(g, n.clone()))
        .collect();
    Ok(minimal)
}

/// `[E, X] = ⟨[e, x] : e ∈ E, x ∈ X⟩` by enumeration of both groups.
pub fn commutator_of(e: &PermGroup, x: &PermGroup) -> Result<PermGroup> {
    let xs = x.elements()?;
    let es = e.elements()?;
    let mut comms = Vec::new();
    for a in es.iter() {
        for b in xs.iter() {
            comms.push(a.commutator(b)?);
        }
    }
    generated_by(e.degree(), &comms)
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

    fn s4() -> PermGroup {
        group(4, &["(1,2)", "(1,2,3,4)"])
    }

    fn a4() -> PermGroup {
        group(4, &["(1,2,3)", "(2,3,4)"])
    }

    fn a5() -> PermGroup {
        group(5, &["(1,2,3)", "(1,2,3,4,5)"])
    }

    #[test]
    fn normal_closures() {
        let s4 = s4();
        let a = s4.subgroup(vec![p("(1,2)(3,4)", 4)]).unwrap();
        assert_eq!(normal_closure(&s4, &a).unwrap().order(), 4);
        let a4 = a4();
        let a = a4.subgroup(vec![p("(1,2,3)", 4)]).unwrap();
        assert_eq!(normal_closure(&a4, &a).unwrap().order(), 12);
        let v = a4.subgroup(vec![p("(1,2)(3,4)", 4), p("(1,3)(2,4)", 4)]).unwrap();
        assert!(normal_closure(&a4, &v).unwrap().same_group(&v));
    }

    #[test]
    fn p_cores() {
        let o2 = p_core(&s4(), 2).unwrap();
        assert_eq!(o2.order(), 4);
        assert!(o2.is_normalized_by(&s4()));
        assert_eq!(p_core(&s4(), 3).unwrap().order(), 1);
        for q in [2, 3, 5] {
            assert!(p_core(&a5(), q).unwrap().is_trivial());
        }
    }

    #[test]
    fn centralizers_and_normalizers() {
        let a5 = a5();
        let c = centralizer_of_element(&a5, &p("(1,2,3,4,5)", 5)).unwrap();
        assert_eq!(c.order(), 5);
        assert_eq!(centralizer_of_element(&a5, &a5.identity()).unwrap().order(), 60);
        let s4 = s4();
        let h = s4.subgroup(vec![p("(1,2,3)", 4)]).unwrap();
        assert_eq!(normalizer(&s4, &h).unwrap().order(), 6);
        let v = s4.subgroup(vec![p("(1,2)(3,4)", 4), p("(1,3)(2,4)", 4)]).unwrap();
        assert_eq!(normalizer(&s4, &v).unwrap().order(), 24);
    }

    #[test]
    fn class_equation_on_s5() {
        let s5 = group(5, &["(1,2)", "(1,2,3,4,5)"]);
        let t = ClassTable::new(&s5).unwrap();
        for c in t.classes() {
            let cent = centralizer_of_element(&s5, &c.representative).unwrap();
            assert_eq!(cent.order() * c.size as u128, 120);
        }
    }

    #[test]
    fn solvability_and_nilpotency() {
        assert!(is_solvable(&s4()).unwrap());
        assert!(!is_nilpotent(&s4()).unwrap());
        assert!(!is_solvable(&a5()).unwrap());
        let d8 = group(4, &["(1,2,3,4)", "(1,3)"]);
        assert!(is_nilpotent(&d8).unwrap());
        assert_eq!(derived_series(&s4()).unwrap().orders(), vec![24, 12, 4, 1]);
        assert_eq!(lower_central_series(&s4()).unwrap().orders(), vec![24, 12]);
    }

    #[test]
    fn minimal_normals() {
        let m = minimal_normal_subgroups(&s4()).unwrap();
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].order(), 4);
        let m = minimal_normal_subgroups(&a5()).unwrap();
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].order(), 60);
    }

    #[test]
    fn p_groups() {
        assert!(is_p_group(&PermGroup::trivial(3), 7));
        let v = group(4, &["(1,2)(3,4)", "(1,3)(2,4)"]);
        assert!(is_p_group(&v, 2));
        assert!(!is_p_group(&v, 3));
        assert!(!is_p_group(&group(4, &["(1,2,3)", "(1,4,2)"]), 3));
    }

    #[test]
    fn center_of_d8() {
        let d8 = group(4, &["(1,2,3,4)", "(1,3)"]);
        let z = center(&d8).unwrap();
        assert_eq!(z.order(), 2);
        assert!(z.has(&p("(1,3)(2,4)", 4)));
    }
}
