//! Named groups with asserted metadata.

mod field;
mod linear;
mod projective;

use std::collections::BTreeSet;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{PermGroup, SubgroupHandle};
use crate::perm::Permutation;

pub use field::FiniteField;
pub use projective::Flavor;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Tag {
    Simple,
    AlmostSimple,
    Solvable,
    PaperExample,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub group: PermGroup,
    pub socle: Option<SubgroupHandle>,
    pub expected_order: u128,
    pub tags: BTreeSet<Tag>,
}

impl CatalogEntry {
    fn new(
        name: impl Into<String>,
        degree: usize,
        gens: Vec<Permutation>,
        expected_order: u128,
        tags: &[Tag],
    ) -> Result<Self> {
        let name = name.into();
        let group = PermGroup::new(degree, gens)?;
        if group.order() != expected_order {
            return Err(Error::ConstructionMismatch {
                name,
                expected: expected_order,
                found: group.order(),
            });
        }
        let tags: BTreeSet<Tag> = tags.iter().copied().collect();
        let socle = tags
            .contains(&Tag::Simple)
            .then(|| group.as_subgroup());
        Ok(CatalogEntry {
            name,
            group,
            socle,
            expected_order,
            tags,
        })
    }

    fn with_socle(mut self, gens: Vec<Permutation>, expected: u128) -> Result<Self> {
        let socle = SubgroupHandle::new(&self.group, gens)?;
        if socle.order() != expected {
            return Err(Error::ConstructionMismatch {
                name: format!("socle of {}", self.name),
                expected,
                found: socle.order(),
            });
        }
        if !socle.group().is_normalized_by(&self.group) {
            return Err(Error::DomainError(format!("socle of {} is not normal", self.name)));
        }
        self.socle = Some(socle);
        Ok(self)
    }

    pub fn has_tag(&self, tag: Tag) -> bool {
        self.tags.contains(&tag)
    }
}

fn perm(degree: usize, text: &str) -> Permutation {
    Permutation::parse_cycles(text, degree).expect("embedded generator")
}

fn cycle(degree: usize, points: std::ops::Range<usize>) -> Permutation {
    Permutation::from_cycles(degree, &[points.collect()]).expect("cycle")
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

const MAX_NATURAL_DEGREE: usize = 16;

fn check_degree(n: usize, min: usize) -> Result<()> {
    if n < min || n > MAX_NATURAL_DEGREE {
        return Err(Error::DomainError(format!(
            "degree {n} outside {min}..={MAX_NATURAL_DEGREE}"
        )));
    }
    Ok(())
}

pub fn symmetric(n: usize) -> Result<CatalogEntry> {
    check_degree(n, 1)?;
    let gens = if n == 1 {
        vec![]
    } else {
        vec![cycle(n, 0..2), cycle(n, 0..n)]
    };
    let tags: &[Tag] = if n >= 5 {
        &[Tag::AlmostSimple]
    } else {
        &[Tag::Solvable]
    };
    let mut entry = CatalogEntry::new(format!("S{n}"), n, gens, factorial(n), tags)?;
    if n == 8 {
        entry.tags.insert(Tag::PaperExample);
    }
    if n >= 5 {
        let socle = alternating(n)?;
        entry = entry.with_socle(socle.group.generators().to_vec(), factorial(n) / 2)?;
    }
    Ok(entry)
}

pub fn alternating(n: usize) -> Result<CatalogEntry> {
    check_degree(n, 1)?;
    let gens = if n < 3 {
        vec![]
    } else if n % 2 == 1 {
        vec![cycle(n, 0..3), cycle(n, 0..n)]
    } else {
        vec![cycle(n, 0..3), cycle(n, 1..n)]
    };
    let order = if n < 2 { 1 } else { factorial(n) / 2 };
    let tags: &[Tag] = if n >= 5 {
        &[Tag::Simple, Tag::AlmostSimple]
    } else {
        &[Tag::Solvable]
    };
    CatalogEntry::new(format!("A{n}"), n, gens, order, tags)
}

pub fn cyclic(n: usize) -> Result<CatalogEntry> {
    check_degree(n, 1)?;
    let gens = if n == 1 { vec![] } else { vec![cycle(n, 0..n)] };
    CatalogEntry::new(format!("C{n}"), n, gens, n as u128, &[Tag::Solvable])
}

/// Dihedral group of the given order `2n` on `n` points.
pub fn dihedral(order: usize) -> Result<CatalogEntry> {
    if order % 2 == 1 {
        return Err(Error::DomainError(format!("dihedral order {order} is odd")));
    }
    let n = order / 2;
    check_degree(n, 3)?;
    let reflection =
        Permutation::from_images((0..n).map(|i| (n - i) % n).collect()).expect("reflection");
    CatalogEntry::new(
        format!("D{order}"),
        n,
        vec![cycle(n, 0..n), reflection],
        order as u128,
        &[Tag::Solvable],
    )
}

pub fn projective_group(q: usize, flavor: Flavor) -> Result<CatalogEntry> {
    let built = projective::build(q, flavor)?;
    let name = match flavor {
        Flavor::Psl => format!("PSL2({q})"),
        Flavor::Pgl => format!("PGL2({q})"),
        Flavor::PGammaL => format!("PGammaL2({q})"),
        Flavor::M10 => "M10".to_string(),
    };
    let mut tags = vec![Tag::AlmostSimple];
    if flavor == Flavor::Psl {
        tags.push(Tag::Simple);
    }
    if q == 9 && flavor != Flavor::Psl {
        tags.push(Tag::PaperExample);
    }
    let entry = CatalogEntry::new(name, q + 1, built.generators, built.expected_order, &tags)?;
    if flavor == Flavor::Psl {
        Ok(entry)
    } else {
        entry.with_socle(built.socle_generators, built.socle_order)
    }
}

/// Components of the affine group of order 144 on the plane over `F_3`.
#[derive(Clone, Debug)]
pub struct Affine144 {
    pub entry: CatalogEntry,
    /// Stabilizer of the zero vector (point 1), semidihedral of order 16.
    pub point_stabilizer: SubgroupHandle,
    /// Translations, elementary abelian of order 9.
    pub translations: SubgroupHandle,
    /// The involution `s` with `s r s = r^3`; it is not central in the stabilizer.
    pub involution: Permutation,
}

pub fn paper144_parts() -> Result<Affine144> {
    let (r, s) = linear::semidihedral_generators();
    let t1 = linear::affine(&linear::IDENTITY, (1, 0));
    let t2 = linear::affine(&linear::IDENTITY, (0, 1));
    let rp = linear::affine(&r, (0, 0));
    let sp = linear::affine(&s, (0, 0));
    let entry = CatalogEntry::new(
        "paper144",
        9,
        vec![t1.clone(), t2.clone(), rp.clone(), sp.clone()],
        144,
        &[Tag::Solvable, Tag::PaperExample],
    )?;
    let point_stabilizer = SubgroupHandle::new(&entry.group, vec![rp, sp.clone()])?;
    if point_stabilizer.order() != 16 {
        return Err(Error::ConstructionMismatch {
            name: "paper144 point stabilizer".into(),
            expected: 16,
            found: point_stabilizer.order(),
        });
    }
    let translations = SubgroupHandle::new(&entry.group, vec![t1, t2])?;
    Ok(Affine144 {
        entry,
        point_stabilizer,
        translations,
        involution: sp,
    })
}

pub fn paper144() -> Result<CatalogEntry> {
    Ok(paper144_parts()?.entry)
}

/// Semidihedral group of order 16 on the 8 non-zero vectors.
pub fn semidihedral16() -> Result<CatalogEntry> {
    let (r, s) = linear::semidihedral_generators();
    CatalogEntry::new(
        "SD16",
        8,
        vec![linear::on_nonzero_vectors(&r), linear::on_nonzero_vectors(&s)],
        16,
        &[Tag::Solvable],
    )
}

pub fn general_linear_2_3() -> Result<CatalogEntry> {
    let gens = [[2, 0, 0, 1], [1, 1, 0, 1], [0, 1, 1, 0]];
    CatalogEntry::new(
        "GL2(3)",
        8,
        gens.iter().map(linear::on_nonzero_vectors).collect(),
        48,
        &[Tag::Solvable],
    )
}

pub fn special_linear_2_3() -> Result<CatalogEntry> {
    let gens = [[1, 1, 0, 1], [1, 0, 1, 1]];
    CatalogEntry::new(
        "SL2(3)",
        8,
        gens.iter().map(linear::on_nonzero_vectors).collect(),
        24,
        &[Tag::Solvable],
    )
}

pub fn frobenius21() -> Result<CatalogEntry> {
    CatalogEntry::new(
        "F21",
        7,
        vec![perm(7, "(1,2,3,4,5,6,7)"), perm(7, "(2,3,5)(4,7,6)")],
        21,
        &[Tag::Solvable],
    )
}

pub fn s3_times_s3() -> Result<CatalogEntry> {
    CatalogEntry::new(
        "S3xS3",
        6,
        ["(1,2)", "(1,2,3)", "(4,5)", "(4,5,6)"]
            .iter()
            .map(|s| perm(6, s))
            .collect(),
        36,
        &[Tag::Solvable],
    )
}

const M11_GENS: [&str; 2] = ["(1,2,3,4,5,6,7,8,9,10,11)", "(3,7,11,8)(4,10,5,6)"];
const M12_EXTRA: &str = "(1,12)(2,11)(3,6)(4,8)(5,9)(7,10)";

/// `M12:2` on 24 points: the stabilizer in `M24` of a dodecad and its
/// complement. The first two generators generate the socle `M12`.
const M12_2_GENS: [&str; 3] = [
    "(1,20,9,12,3,13,11,4)(2,21,6,10,23,18,22,7)(5,14)(8,16,15,19)",
    "(1,5,9,4,17,11,12,24)(2,19,6,18,10,8,23,16)(3,14)(7,15,22,21)",
    "(1,6,3,22,20,23,9,16,14,15,11,7)(2,5,10,12,21,13,8,24,18,4,19,17)",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mathieu {
    M11,
    M12,
    M12_2,
}

pub fn mathieu(which: Mathieu) -> Result<CatalogEntry> {
    match which {
        Mathieu::M11 => CatalogEntry::new(
            "M11",
            11,
            M11_GENS.iter().map(|s| perm(11, s)).collect(),
            7920,
            &[Tag::Simple, Tag::AlmostSimple],
        ),
        Mathieu::M12 => CatalogEntry::new(
            "M12",
            12,
            M11_GENS
                .iter()
                .chain(std::iter::once(&M12_EXTRA))
                .map(|s| perm(12, s))
                .collect(),
            95040,
            &[Tag::Simple, Tag::AlmostSimple],
        ),
        Mathieu::M12_2 => {
            let gens: Vec<Permutation> = M12_2_GENS.iter().map(|s| perm(24, s)).collect();
            CatalogEntry::new("M12_2", 24, gens.clone(), 190080, &[Tag::AlmostSimple])?
                .with_socle(gens[..2].to_vec(), 95040)
        }
    }
}

/// Names of the standard entries, solvable groups first.
pub const STANDARD_NAMES: [&str; 33] = [
    "C6", "D8", "D10", "S3", "A4", "S4", "SD16", "F21", "SL2(3)", "GL2(3)", "S3xS3",
    "paper144", "A5", "S5", "A6", "S6", "A7", "S7", "A8", "S8", "PSL2(7)", "PGL2(7)",
    "PSL2(8)", "PSL2(11)", "PGL2(11)", "PSL2(9)", "PGL2(9)", "M10", "PGammaL2(9)", "M11",
    "M12", "M12_2", "PGL2(5)",
];

fn parse_arg(s: &str, prefix: &str) -> Option<usize> {
    let inner = s.strip_prefix(prefix)?.strip_prefix('(')?.strip_suffix(')')?;
    inner.parse().ok()
}

fn build(name: &str) -> Result<CatalogEntry> {
    let key: String = name
        .chars()
        .filter(|c| !c.is_whitespace())
        .collect::<String>()
        .to_ascii_uppercase()
        .replace(':', "_");
    let number = |prefix: &str| -> Option<usize> { key.strip_prefix(prefix)?.parse().ok() };
    let unknown = || Error::UnknownGroup(name.to_string());
    match key.as_str() {
        "PAPER144" => return paper144(),
        "SD16" => return semidihedral16(),
        "GL2(3)" => return general_linear_2_3(),
        "SL2(3)" => return special_linear_2_3(),
        "F21" => return frobenius21(),
        "S3XS3" => return s3_times_s3(),
        "M10" => return projective_group(9, Flavor::M10),
        "M11" => return mathieu(Mathieu::M11),
        "M12" => return mathieu(Mathieu::M12),
        "M12_2" => return mathieu(Mathieu::M12_2),
        "AUT(A6)" => return projective_group(9, Flavor::PGammaL),
        _ => {}
    }
    if let Some(q) = parse_arg(&key, "PSL2") {
        return projective_group(q, Flavor::Psl);
    }
    if let Some(q) = parse_arg(&key, "PGL2") {
        return projective_group(q, Flavor::Pgl);
    }
    if let Some(q) = parse_arg(&key, "PGAMMAL2") {
        return projective_group(q, Flavor::PGammaL);
    }
    if let Some(n) = number("S") {
        return symmetric(n);
    }
    if let Some(n) = number("A") {
        return alternating(n);
    }
    if let Some(n) = number("C") {
        return cyclic(n);
    }
    if let Some(n) = number("D") {
        return dihedral(n);
    }
    Err(unknown())
}

fn standard_cache() -> &'static Result<Vec<CatalogEntry>> {
    static CACHE: OnceLock<Result<Vec<CatalogEntry>>> = OnceLock::new();
    CACHE.get_or_init(|| STANDARD_NAMES.iter().map(|n| build(n)).collect())
}

/// The standard entries, built once and shared.
pub fn standard() -> Result<&'static [CatalogEntry]> {
    match standard_cache() {
        Ok(v) => Ok(v),
        Err(e) => Err(e.clone()),
    }
}

/// An entry by name (case-insensitive); standard entries share cached data.
pub fn lookup(name: &str) -> Result<CatalogEntry> {
    let fresh = build(name)?;
    if let Ok(entries) = standard() {
        if let Some(e) = entries.iter().find(|e| e.name == fresh.name) {
            return Ok(e.clone());
        }
    }
    Ok(fresh)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conjugacy::ClassTable;
    use crate::structure::{is_solvable, minimal_normal_subgroups, p_core};

    #[test]
    fn standard_entries_load() {
        let entries = standard().unwrap();
        assert_eq!(entries.len(), STANDARD_NAMES.len());
        for e in entries {
            assert_eq!(e.group.order(), e.expected_order, "{}", e.name);
            if let Some(s) = &e.socle {
                assert!(s.group().is_normalized_by(&e.group));
            }
            assert_eq!(e.has_tag(Tag::Simple) || e.has_tag(Tag::AlmostSimple), e.socle.is_some());
        }
    }

    #[test]
    fn lookup_names() {
        assert_eq!(lookup("s8").unwrap().group.order(), 40320);
        assert_eq!(lookup("M12:2").unwrap().name, "M12_2");
        assert_eq!(lookup("Aut(A6)").unwrap().name, "PGammaL2(9)");
        assert_eq!(lookup("D12").unwrap().group.order(), 12);
        assert_eq!(lookup("C7").unwrap().group.order(), 7);
        assert!(matches!(lookup("Q8"), Err(Error::UnknownGroup(_))));
        assert!(lookup("S17").is_err());
    }

    #[test]
    fn solvable_tags_are_correct() {
        for e in standard().unwrap().iter().filter(|e| e.group.order() <= 50_000) {
            assert_eq!(is_solvable(&e.group).unwrap(), e.has_tag(Tag::Solvable), "{}", e.name);
        }
    }

    #[test]
    fn small_simple_tags_verified() {
        for name in ["A5", "A6", "PSL2(7)", "PSL2(8)", "PSL2(11)", "M11"] {
            let e = lookup(name).unwrap();
            let mins = minimal_normal_subgroups(&e.group).unwrap();
            assert_eq!(mins.len(), 1, "{name}");
            assert_eq!(mins[0].order(), e.group.order(), "{name}");
        }
        for name in ["S5", "PGL2(9)", "M10", "PGammaL2(9)"] {
            let e = lookup(name).unwrap();
            let mins = minimal_normal_subgroups(&e.group).unwrap();
            assert_eq!(mins.len(), 1, "{name}");
            assert!(mins[0].same_group(e.socle.as_ref().unwrap().group()), "{name}");
        }
    }

    #[test]
    fn m10_has_no_elements_of_order_ten() {
        let m10 = lookup("M10").unwrap();
        let t = ClassTable::new(&m10.group).unwrap();
        assert!(t.elements_of_order(10).is_empty());
        assert!(!t.elements_of_order(8).is_empty());
        let pgl = lookup("PGL2(9)").unwrap();
        assert!(!ClassTable::new(&pgl.group).unwrap().elements_of_order(10).is_empty());
    }

    #[test]
    fn paper144_structure() {
        let parts = paper144_parts().unwrap();
        let g = &parts.entry.group;
        assert_eq!(g.order(), 144);
        assert!(p_core(g, 2).unwrap().is_trivial());
        let mins = minimal_normal_subgroups(g).unwrap();
        assert_eq!(mins.len(), 1);
        assert!(mins[0].same_group(parts.translations.group()));
        let a = &parts.involution;
        assert_eq!(a.order(), 2);
        assert!(parts.point_stabilizer.generators().iter().any(|h| h.mul_unchecked(a) != a.mul_unchecked(h)));
        assert!(parts.point_stabilizer.group().orbits().iter().any(|o| o == &vec![0]));
    }

    #[test]
    fn semidihedral_has_unique_cyclic_subgroup_of_order_eight() {
        let sd = semidihedral16().unwrap();
        let t = ClassTable::new(&sd.group).unwrap();
        let eights: Vec<Permutation> = t
            .elements_of_order(8)
            .into_iter()
            .flat_map(|c| t.members(c).collect::<Vec<_>>())
            .collect();
        assert_eq!(eights.len(), 4);
        let first = PermGroup::new(8, vec![eights[0].clone()]).unwrap();
        assert!(eights.iter().all(|x| first.has(x)));
    }

    #[test]
    fn mathieu_facts() {
        let m11 = lookup("M11").unwrap();
        assert_eq!(ClassTable::new(&m11.group).unwrap().len(), 10);
        let m12_2 = lookup("M12_2").unwrap();
        assert_eq!(m12_2.group.order() / m12_2.socle.as_ref().unwrap().order(), 2);
    }
}
