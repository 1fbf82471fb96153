use std::collections::BTreeSet;

use serde_json::{json, Value};

use crate::arith::{factorize, is_prime, multiplicative_order, prime_divisors, prime_powers_up_to, zsigmondy};
use crate::catalog::{self, CatalogEntry, Tag};
use crate::conjugacy::ClassTable;
use crate::criteria::{
    alt_case, check_star, check_starstar, check_wielandt, is_subnormal, ngaxp_witness,
    ngxp_witness, theorem_c_search, wielandt_series, NgaWitness,
};
use crate::error::{Error, Result};
use crate::group::{is_power_of, PermGroup, SubgroupHandle};
use crate::oracle::SubgroupLattice;
use crate::par;
use crate::perm::Permutation;
use crate::structure::{minimal_normal_subgroups, normal_closure, p_core};

use super::properties::{coprime_action_holds, elementary_center_normalized, orbit_divisibility_holds};
use super::{coverage, cyclic_subgroup_reps, order_p_reps, run_check, Check, Outcome};

type Task<'a> = (&'a CatalogEntry, u64, Permutation);

fn odd_primes(g: &PermGroup) -> Vec<u64> {
    prime_divisors(g.order()).into_iter().filter(|&p| p != 2).collect()
}

fn cyclic(g: &PermGroup, x: &Permutation) -> Result<SubgroupHandle> {
    SubgroupHandle::new(g, vec![x.clone()])
}

fn gens_json(h: &PermGroup) -> Value {
    json!(h.generators().iter().map(Permutation::to_cycles).collect::<Vec<_>>())
}

/// `(G, p, A)` triples with `A` of order `p` up to conjugacy; entries whose
/// class table is out of reach produce a skipped check instead.
fn order_p_tasks<'a>(
    entries: &[&'a CatalogEntry],
    primes: impl Fn(&PermGroup) -> Vec<u64> + Sync + Send,
    suite: &str,
) -> (Vec<Task<'a>>, Vec<Check>) {
    let per_entry = par::map(entries, |entry| {
        let g = &entry.group;
        let mut tasks = Vec::new();
        for p in primes(g) {
            match order_p_reps(g, p) {
                Ok(reps) => tasks.extend(reps.into_iter().map(|x| (*entry, p, x))),
                Err(e) => {
                    return (
                        Vec::new(),
                        Some(run_check(format!("{suite}/{}/classes", entry.name), || Err(e))),
                    )
                }
            }
        }
        (tasks, None)
    });
    let mut tasks = Vec::new();
    let mut skipped = Vec::new();
    for (t, s) in per_entry {
        tasks.extend(t);
        skipped.extend(s);
    }
    (tasks, skipped)
}

fn task_id(suite: &str, (entry, p, x): &Task<'_>) -> String {
    format!("{suite}/{}/p={p}/A={}", entry.name, x.to_cycles())
}

/// Checks that `O_p(G)` is a normal `p`-subgroup, then that `holds` forces `A ≤ O_p(G)`.
fn core_implication(
    g: &PermGroup,
    a: &SubgroupHandle,
    p: u64,
    holds: bool,
    label: &str,
) -> Result<Outcome> {
    let core = p_core(g, p)?;
    let core_ok = core.is_p_group(p) && core.is_normalized_by(g);
    let inside = a.is_subgroup_of(core.group());
    let pass = core_ok && (!holds || inside);
    let detail = if !core_ok {
        format!("computed O_{p} (order {}) is not a normal {p}-subgroup", core.order())
    } else {
        format!(
            "{label} {}, |O_{p}(G)| = {}, A in O_{p}(G): {inside}",
            if holds { "holds" } else { "fails" },
            core.order()
        )
    };
    Ok(Outcome::new(pass, detail))
}

fn implication_suite(
    suite: &str,
    entries: &[&CatalogEntry],
    primes: impl Fn(&PermGroup) -> Vec<u64> + Sync + Send,
    criterion: fn(&PermGroup, &SubgroupHandle) -> Result<crate::criteria::StarReport>,
    label: &str,
    min: usize,
) -> Vec<Check> {
    let (tasks, mut checks) = order_p_tasks(entries, primes, suite);
    checks.extend(par::map(&tasks, |task| {
        let (entry, p, x) = task;
        run_check(task_id(suite, task), || {
            let g = &entry.group;
            let a = cyclic(g, x)?;
            let report = criterion(g, &a)?;
            let outcome = core_implication(g, &a, *p, report.holds, label)?;
            Ok(match report.first_failure() {
                Some(class) if !report.holds => {
                    outcome.with_witness(json!({ "class_without_witness": class }))
                }
                _ => outcome,
            })
        })
    }));
    let triples = tasks.len();
    let cov = coverage(suite, &checks, min, &format!(", {triples} (G, p, A) triples"));
    checks.push(cov);
    checks
}

fn standard_entries() -> Result<Vec<&'static CatalogEntry>> {
    Ok(catalog::standard()?.iter().collect())
}

pub(super) fn theorem_a_small() -> Result<Vec<Check>> {
    let entries = standard_entries()?;
    Ok(implication_suite("theorem_a_small", &entries, odd_primes, check_star, "(*)", 50))
}

pub(super) fn theorem_41_solvable() -> Result<Vec<Check>> {
    let suite = "theorem_41_solvable";
    let entries: Vec<_> = standard_entries()?
        .into_iter()
        .filter(|e| e.has_tag(Tag::Solvable))
        .collect();
    let mut checks = implication_suite(suite, &entries, odd_primes, check_starstar, "(**)", 10);
    let cov = checks.pop().expect("coverage check present");
    // at p = 2 the implication fails
    checks.push(run_check(format!("{suite}/paper144/p=2/boundary"), || {
        let parts = catalog::paper144_parts()?;
        let g = &parts.entry.group;
        let a = cyclic(g, &parts.involution)?;
        let holds = check_starstar(g, &a)?.holds;
        let core = p_core(g, 2)?;
        let inside = a.is_subgroup_of(core.group());
        Ok(Outcome::new(
            holds && !inside,
            format!("(**) holds: {holds}, |O_2(G)| = {}, A in O_2(G): {inside}", core.order()),
        ))
    }));
    checks.push(cov);
    Ok(checks)
}

pub(super) fn corollary_b() -> Result<Vec<Check>> {
    let suite = "corollary_b";
    let entries = standard_entries()?;
    let per_entry = par::map(&entries, |entry| {
        ClassTable::new(&entry.group).map(|t| {
            cyclic_subgroup_reps(&t, |k| k % 2 == 1 && (3..=45).contains(&k))
                .into_iter()
                .map(|x| (*entry, x))
                .collect::<Vec<_>>()
        })
    });
    let mut tasks = Vec::new();
    let mut checks = Vec::new();
    for (entry, r) in entries.iter().zip(per_entry) {
        match r {
            Ok(t) => tasks.extend(t),
            Err(e) => checks.push(run_check(format!("{suite}/{}/classes", entry.name), || Err(e))),
        }
    }
    checks.extend(par::map(&tasks, |(entry, x)| {
        run_check(format!("{suite}/{}/A={}", entry.name, x.to_cycles()), || {
            let g = &entry.group;
            let a = cyclic(g, x)?;
            let star = check_star(g, &a)?.holds;
            let sn = is_subnormal(&a, g)?;
            Ok(Outcome::new(
                !star || sn,
                format!("|A| = {}, (*) holds: {star}, subnormal: {sn}", x.order()),
            ))
        })
    }));
    let cov = coverage(suite, &checks, 30, "");
    checks.push(cov);
    Ok(checks)
}

pub(super) fn counterexample_p2() -> Result<Vec<Check>> {
    let suite = "counterexample_p2";
    let parts = catalog::paper144_parts()?;
    let g = &parts.entry.group;
    let h = parts.point_stabilizer.group();
    let s = &parts.involution;
    let a = cyclic(g, s)?;
    let id = |name: &str| format!("{suite}/{name}");
    let mut checks = vec![
        run_check(id("order"), || Ok(Outcome::new(g.order() == 144, format!("|G| = {}", g.order())))),
        run_check(id("o2_trivial"), || {
            let core = p_core(g, 2)?;
            Ok(Outcome::new(core.is_trivial(), format!("|O_2(G)| = {}", core.order())))
        }),
        run_check(id("noncentral_involution"), || {
            let central = h.generators().iter().all(|y| y.mul_unchecked(s) == s.mul_unchecked(y));
            Ok(Outcome::new(
                s.order() == 2 && h.has(s) && !central,
                format!("order {}, in H: {}, central in H: {central}", s.order(), h.has(s)),
            )
            .with_witness(json!(s.to_cycles())))
        }),
        run_check(id("star"), || {
            let report = check_star(g, &a)?;
            let n = report.per_class.len();
            Ok(Outcome::new(report.holds, format!("(*) witnessed in {} of {n} classes", n - report.per_class.iter().filter(|c| c.witness.is_none()).count()))
                .with_witness(serde_json::to_value(&report.per_class).expect("plain data")))
        }),
        run_check(id("not_subnormal"), || {
            let series = wielandt_series(g, &a)?;
            let sn = is_subnormal(&a, g)?;
            Ok(Outcome::new(!sn, format!("subnormal: {sn}, series orders {:?}", series.orders())))
        }),
        run_check(id("minimal_normal"), || {
            let mins = minimal_normal_subgroups(g)?;
            let unique = mins.len() == 1
                && mins[0].order() == 9
                && mins[0].group().same_group(parts.translations.group());
            Ok(Outcome::new(
                unique,
                format!("minimal normal orders {:?}", mins.iter().map(|m| m.order()).collect::<Vec<_>>()),
            ))
        }),
        run_check(id("covering"), || {
            let conjugates: Vec<Permutation> =
                h.elements()?.iter().map(|x| s.conj_unchecked(x)).collect();
            let m = parts.translations.group().elements()?;
            let uncovered: Vec<String> = m
                .iter()
                .filter(|e| !conjugates.iter().any(|c| c.mul_unchecked(e) == e.mul_unchecked(c)))
                .map(Permutation::to_cycles)
                .collect();
            Ok(Outcome::new(
                uncovered.is_empty(),
                format!("{} of {} elements of M centralise a conjugate a^x, x in H", m.len() - uncovered.len(), m.len()),
            )
            .with_witness(json!({ "uncovered": uncovered })))
        }),
    ];
    let cov = coverage(suite, &checks, 7, "");
    checks.push(cov);
    Ok(checks)
}

pub(super) fn starstar_s8() -> Result<Vec<Check>> {
    let suite = "starstar_s8";
    let entry = catalog::lookup("S8")?;
    let g = &entry.group;
    let a = cyclic(g, &Permutation::parse_cycles("(1,2,3)", 8)?)?;
    let id = |name: &str| format!("{suite}/{name}");
    let mut checks = vec![
        run_check(id("classes"), || {
            let n = ClassTable::new(g)?.len();
            Ok(Outcome::new(n == 22, format!("{n} conjugacy classes")))
        }),
        run_check(id("starstar"), || {
            let report = check_starstar(g, &a)?;
            let n = report.per_class.len();
            let hit = report.per_class.iter().filter(|c| c.witness.is_some()).count();
            Ok(Outcome::new(report.holds && n == 22, format!("(**) witnessed in {hit} of {n} classes"))
                .with_witness(serde_json::to_value(&report.per_class).expect("plain data")))
        }),
        run_check(id("not_subnormal"), || {
            let series = wielandt_series(g, &a)?;
            let sn = is_subnormal(&a, g)?;
            Ok(Outcome::new(!sn, format!("subnormal: {sn}, series orders {:?}", series.orders())))
        }),
        run_check(id("o3_trivial"), || {
            let core = p_core(g, 3)?;
            Ok(Outcome::new(core.is_trivial(), format!("|O_3(S8)| = {}", core.order())))
        }),
    ];
    let cov = coverage(suite, &checks, 4, "");
    checks.push(cov);
    Ok(checks)
}

fn witness_properties(w: &NgaWitness, x: &PermGroup) -> Result<(bool, String)> {
    let e = w.e.group();
    let divisibility = orbit_divisibility_holds(e, x, w.p);
    let center = elementary_center_normalized(e, x, w.p)?;
    let coprime = coprime_action_holds(e, x)?;
    let ok = e.is_p_group(w.p) && !e.is_trivial() && e.is_normalized_by(x) && divisibility && center && coprime;
    Ok((
        ok,
        format!(
            "|E| = {}, orbit divisibility: {divisibility}, elementary centre normalised: {center}, coprime action: {coprime}",
            e.order()
        ),
    ))
}

pub(super) fn prop26_alt() -> Result<Vec<Check>> {
    let suite = "prop26_alt";
    let mut tasks: Vec<(String, u64, usize)> = Vec::new();
    for n in 7..=12usize {
        let order: u128 = (3..=n as u128).product();
        for p in prime_divisors(order) {
            if alt_case(n, p).is_ok() {
                for name in [format!("A{n}"), format!("S{n}")] {
                    tasks.push((name, p, n));
                }
            }
        }
    }
    let mut checks = par::map(&tasks, |(name, p, n)| {
        let witness = crate::criteria::alt_witness(*n, *p).expect("case checked above");
        run_check(format!("{suite}/{name}/p={p}/X={}", witness.to_cycles()), || {
            let entry = catalog::lookup(name)?;
            let g = &entry.group;
            let x = cyclic(g, &witness)?;
            let coprime = x.order() % *p as u128 != 0;
            let found = ngxp_witness(g, &x, *p)?;
            let mut outcome = Outcome::new(
                coprime && found.is_none(),
                format!(
                    "{:?}, |X| = {}, non-trivial X-invariant {p}-subgroup: {}",
                    alt_case(*n, *p)?,
                    x.order(),
                    found.is_some()
                ),
            );
            if let Some(w) = found {
                outcome = outcome.with_witness(w.to_json());
            }
            Ok(outcome)
        })
    });

    let m10 = catalog::lookup("M10")?;
    checks.push(run_check(format!("{suite}/M10/no_order_10"), || {
        let t = ClassTable::new(&m10.group)?;
        let n = t.elements_of_order(10).len();
        Ok(Outcome::new(n == 0, format!("{n} classes of elements of order 10")))
    }));
    let m10_reps = order_p_reps(&m10.group, 5)?;
    for x in &m10_reps {
        checks.push(run_check(format!("{suite}/M10/p=2/X={}", x.to_cycles()), || {
            let found = ngxp_witness(&m10.group, &cyclic(&m10.group, x)?, 2)?;
            Ok(Outcome::new(
                found.is_none(),
                format!("non-trivial X-invariant 2-subgroup: {}", found.is_some()),
            ))
        }));
    }

    for name in ["PGL2(9)", "PGammaL2(9)"] {
        let entry = catalog::lookup(name)?;
        let g = &entry.group;
        let reps = cyclic_subgroup_reps(&ClassTable::new(g)?, |k| k % 2 == 1);
        checks.extend(par::map(&reps, |x| {
            run_check(format!("{suite}/{name}/p=2/X={}", x.to_cycles()), || {
                let xs = cyclic(g, x)?;
                match ngxp_witness(g, &xs, 2)? {
                    None => Ok(Outcome::new(false, format!("|X| = {}: no X-invariant 2-subgroup", x.order()))),
                    Some(w) => {
                        let (ok, detail) = witness_properties(&w, xs.group())?;
                        Ok(Outcome::new(ok, format!("|X| = {}, {detail}", x.order())).with_witness(w.to_json()))
                    }
                }
            })
        }));
    }
    let cov = coverage(suite, &checks, 40, "");
    checks.push(cov);
    Ok(checks)
}

pub(super) fn table1_mathieu() -> Result<Vec<Check>> {
    let suite = "table1_mathieu";
    let mut tasks: Vec<(&'static CatalogEntry, u64, u64, Permutation)> = Vec::new();
    for entry in standard_entries()? {
        if !["M11", "M12", "M12_2"].contains(&entry.name.as_str()) {
            continue;
        }
        let socle = entry
            .socle
            .as_ref()
            .ok_or_else(|| Error::DomainError(format!("{} has no socle", entry.name)))?;
        for x in order_p_reps(socle.group(), 11)? {
            for p in prime_divisors(entry.group.order()) {
                if p != 11 {
                    tasks.push((entry, 11, p, x.clone()));
                }
            }
        }
        for x in order_p_reps(socle.group(), 3)? {
            tasks.push((entry, 3, 11, x));
        }
    }
    let mut checks = par::map(&tasks, |(entry, q, p, x)| {
        run_check(format!("{suite}/{}/q={q}/p={p}/X={}", entry.name, x.to_cycles()), || {
            let g = &entry.group;
            let found = ngxp_witness(g, &cyclic(g, x)?, *p)?;
            let outcome = Outcome::new(
                found.is_none(),
                format!("non-trivial X-invariant {p}-subgroup: {}", found.is_some()),
            );
            Ok(match found {
                Some(w) => outcome.with_witness(w.to_json()),
                None => outcome,
            })
        })
    });
    let cov = coverage(suite, &checks, 12, "");
    checks.push(cov);
    Ok(checks)
}

pub(super) fn theorem_c_catalog() -> Result<Vec<Check>> {
    let suite = "theorem_c_catalog";
    let entries: Vec<_> = standard_entries()?
        .into_iter()
        .filter(|e| e.has_tag(Tag::AlmostSimple))
        .collect();
    let (tasks, mut checks) = order_p_tasks(&entries, odd_primes, suite);
    checks.extend(par::map(&tasks, |task| {
        let (entry, p, a) = task;
        run_check(task_id(suite, task), || {
            let g = &entry.group;
            let s = entry
                .socle
                .as_ref()
                .ok_or_else(|| Error::DomainError(format!("{} has no socle", entry.name)))?;
            let outcome = theorem_c_search(g, s, &cyclic(g, a)?, *p)?;
            Ok(match outcome.x {
                Some(x) => Outcome::new(
                    true,
                    format!(
                        "X of order {} after {} of {} cyclic {p}'-classes of S",
                        x.order(),
                        outcome.tried,
                        outcome.candidates
                    ),
                )
                .with_witness(json!({ "x": gens_json(x.group()) })),
                None => {
                    eprintln!(
                        "COUNTEREXAMPLE: {} p={p} A={}: every cyclic {p}'-subgroup of the socle has a witness",
                        entry.name,
                        a.to_cycles()
                    );
                    Outcome::new(
                        false,
                        format!(
                            "COUNTEREXAMPLE: all {} cyclic {p}'-classes of S admit a {p}-subgroup generated by conjugates of A",
                            outcome.candidates
                        ),
                    )
                }
            })
        })
    }));
    let triples = tasks.len();
    let cov = coverage(suite, &checks, 30, &format!(", {triples} (G, p, A) triples"));
    checks.push(cov);
    Ok(checks)
}

pub(super) fn zsigmondy_range() -> Result<Vec<Check>> {
    let suite = "zsigmondy_range";
    let mut checks = Vec::new();
    let mut none_cases = Vec::new();
    for q in prime_powers_up_to(32) {
        for e in 3..=12u32 {
            checks.push(run_check(format!("{suite}/q={q}/e={e}"), || {
                let r = zsigmondy(q, e)?;
                let exceptional = (q, e) == (2, 6);
                Ok(match r {
                    Some(ell) => {
                        let order = multiplicative_order(q, ell, e as u64);
                        let ok = !exceptional
                            && ell <= u64::MAX as u128
                            && is_prime(ell as u64)
                            && order == Some(e as u64)
                            && ell > e as u128;
                        Outcome::new(ok, format!("ell = {ell}, order of q mod ell = {order:?}"))
                            .with_witness(json!(ell.to_string()))
                    }
                    None => {
                        none_cases.push((q, e));
                        // independent confirmation: no prime factor of q^e - 1 is primitive
                        let n = (q as u128).pow(e) - 1;
                        let primitive: Vec<u64> = factorize(n as u64)
                            .into_iter()
                            .map(|(l, _)| l)
                            .filter(|&l| l > e as u64 && multiplicative_order(q, l as u128, e as u64) == Some(e as u64))
                            .collect();
                        Outcome::new(
                            exceptional && primitive.is_empty(),
                            format!("no primitive prime divisor; factors of q^e - 1: {:?}", factorize(n as u64)),
                        )
                    }
                })
            }));
        }
    }
    checks.push(run_check(format!("{suite}/exceptions"), || {
        Ok(Outcome::new(
            none_cases == [(2, 6)],
            format!("cases without a primitive prime: {none_cases:?}"),
        ))
    }));
    let cov = coverage(suite, &checks, 100, "");
    checks.push(cov);
    Ok(checks)
}

fn lattice_checks(entry: &CatalogEntry) -> Vec<Check> {
    let suite = "oracle_crosschecks";
    let name = &entry.name;
    let lattice = match SubgroupLattice::new(&entry.group) {
        Ok(l) => l,
        Err(e) => return vec![run_check(format!("{suite}/{name}/lattice"), || Err(e))],
    };
    let l = &lattice;
    let g = l.group();
    let reps: Vec<usize> = l.class_representatives().into_iter().filter(|&i| l.subgroup_order(i) > 1).collect();
    let primes = prime_divisors(g.order());
    let id = |what: &str| format!("{suite}/{name}/{what}");
    let p_subgroup = |i: usize, p: u64| is_power_of(l.subgroup_order(i) as u128, p as u128);
    let mut checks = Vec::new();

    checks.push(run_check(id("subnormality"), || {
        let mut bad = Vec::new();
        let mut wielandt_bad = Vec::new();
        for &i in &reps {
            let a = l.to_group(i)?;
            let sn = is_subnormal(&a, g)?;
            if sn != l.is_subnormal(i) {
                bad.push(gens_json(a.group()));
            }
            let w = check_wielandt(g, &a)?;
            if !(w.ii == sn && w.iii == sn && w.iv == sn) {
                wielandt_bad.push(gens_json(a.group()));
            }
        }
        Ok(Outcome::new(
            bad.is_empty() && wielandt_bad.is_empty(),
            format!(
                "{} subgroup classes; series vs lattice mismatches {}, criteria disagreements {}",
                reps.len(),
                bad.len(),
                wielandt_bad.len()
            ),
        )
        .with_witness(json!({ "lattice": bad, "criteria": wielandt_bad })))
    }));

    checks.push(run_check(id("normal_closure"), || {
        let mut bad = 0;
        for &i in &reps {
            let a = l.to_group(i)?;
            let c = normal_closure(g, &a)?;
            if l.index_of(c.group()) != Some(l.smallest_normal_containing(i)) {
                bad += 1;
            }
        }
        Ok(Outcome::new(bad == 0, format!("{} subgroup classes, {bad} mismatches", reps.len())))
    }));

    checks.push(run_check(id("star_implies_starstar"), || {
        let mut star_count = 0;
        let mut bad = 0;
        for &i in &reps {
            let a = l.to_group(i)?;
            let star = check_star(g, &a)?.holds;
            star_count += star as usize;
            if star && !check_starstar(g, &a)?.holds {
                bad += 1;
            }
        }
        Ok(Outcome::new(bad == 0, format!("(*) holds for {star_count} of {} classes, {bad} without (**)", reps.len())))
    }));

    checks.push(run_check(id("p_core"), || {
        let mut out = Vec::new();
        for &p in &primes {
            let core = p_core(g, p)?;
            let expected = l.sylow_intersection(p as usize);
            if l.index_of(core.group()) != Some(expected) {
                return Ok(Outcome::new(false, format!("O_{p} has order {} but the Sylow intersection has order {}", core.order(), l.subgroup_order(expected))));
            }
            out.push(format!("|O_{p}| = {}", core.order()));
        }
        Ok(Outcome::new(true, out.join(", ")))
    }));

    checks.push(run_check(id("minimal_normal"), || {
        let mut got: Vec<usize> = minimal_normal_subgroups(g)?
            .iter()
            .map(|m| l.index_of(m.group()).expect("subgroup in lattice"))
            .collect();
        got.sort_unstable();
        let mut expected = l.minimal_normal();
        expected.sort_unstable();
        Ok(Outcome::new(got == expected, format!("{} minimal normal subgroups, oracle {}", got.len(), expected.len())))
    }));

    checks.push(run_check(id("class_equation"), || {
        let t = ClassTable::new(g)?;
        let total: u128 = t.classes().iter().map(|c| c.size as u128).sum();
        let divides = t.classes().iter().all(|c| g.order() % c.size as u128 == 0);
        Ok(Outcome::new(total == g.order() && divides, format!("{} classes, sizes sum to {total}", t.len())))
    }));

    let cyclic_reps: Vec<usize> = reps.iter().copied().filter(|&i| l.is_cyclic(i)).collect();
    checks.push(run_check(id("ngxp"), || {
        let mut compared = 0;
        for &x in &cyclic_reps {
            let xs = l.to_group(x)?;
            for &p in &primes {
                let expected = l.invariant_p_subgroups(x, p as usize);
                let found = ngxp_witness(g, &xs, p)?;
                compared += 1;
                let ok = match &found {
                    None => expected.is_empty(),
                    Some(w) => l.index_of(w.e.group()).is_some_and(|e| expected.contains(&e)),
                };
                if !ok {
                    return Ok(Outcome::new(false, format!("X = {}, p = {p}: witness {}, oracle count {}", gens_json(xs.group()), found.is_some(), expected.len())));
                }
            }
        }
        Ok(Outcome::new(true, format!("{compared} (X, p) pairs agree with exhaustive enumeration")))
    }));

    checks.push(run_check(id("ngaxp"), || {
        let mut compared = 0;
        for &p in &primes {
            for &a in reps.iter().filter(|&&a| p_subgroup(a, p)) {
                let ag = l.to_group(a)?;
                for &x in &cyclic_reps {
                    let xs = l.to_group(x)?;
                    let expected = l.invariant_p_subgroups_from(a, x, p as usize);
                    let found = ngaxp_witness(g, &ag, &xs, p)?;
                    compared += 1;
                    let ok = match &found {
                        None => expected.is_empty(),
                        Some(w) => l.index_of(w.e.group()).is_some_and(|e| expected.contains(&e)),
                    };
                    if !ok {
                        return Ok(Outcome::new(false, format!("A = {}, X = {}, p = {p}: witness {}, oracle count {}", gens_json(ag.group()), gens_json(xs.group()), found.is_some(), expected.len())));
                    }
                }
            }
        }
        Ok(Outcome::new(true, format!("{compared} (A, X, p) triples agree with exhaustive enumeration")))
    }));

    checks
}

pub(super) fn oracle_crosschecks() -> Result<Vec<Check>> {
    let suite = "oracle_crosschecks";
    let entries: Vec<_> = standard_entries()?
        .into_iter()
        .filter(|e| e.group.order() <= crate::oracle::ORACLE_MAX_ORDER as u128)
        .collect();
    let names: BTreeSet<&str> = entries.iter().map(|e| e.name.as_str()).collect();
    let mut checks: Vec<Check> = par::map(&entries, |e| lattice_checks(e)).into_iter().flatten().collect();
    let cov = coverage(suite, &checks, 8 * 10, &format!(", groups {names:?}"));
    checks.push(cov);
    Ok(checks)
}
