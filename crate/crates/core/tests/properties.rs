use std::collections::HashSet;

use proptest::prelude::*;
use subnormal::criteria::{check_star, check_starstar, is_subnormal, wielandt_series};
use subnormal::oracle::SubgroupLattice;
use subnormal::{PermGroup, Permutation, SubgroupHandle};

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

fn triple(n: usize) -> impl Strategy<Value = (Permutation, Permutation, Permutation)> {
    (perm(n), perm(n), perm(n))
}

fn small_group() -> impl Strategy<Value = (usize, Vec<Permutation>)> {
    (3usize..=6).prop_flat_map(|n| (Just(n), prop::collection::vec(perm(n), 1..=2)))
}

fn mul(a: &Permutation, b: &Permutation) -> Permutation {
    a.compose(b).unwrap()
}

/// Element set by breadth-first closure under right multiplication.
fn brute_closure(n: usize, gens: &[Permutation]) -> HashSet<Vec<usize>> {
    let id = Permutation::identity(n);
    let mut seen: HashSet<Vec<usize>> = HashSet::from([id.images()]);
    let mut frontier = vec![id];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = mul(&x, g);
            if seen.insert(y.images()) {
                frontier.push(y);
            }
        }
    }
    seen
}

proptest! {
    #[test]
    fn composition_is_associative((a, b, c) in triple(9)) {
        prop_assert_eq!(mul(&mul(&a, &b), &c), mul(&a, &mul(&b, &c)));
    }

    #[test]
    fn right_action((a, b, _c) in triple(8), i in 0usize..8) {
        prop_assert_eq!(mul(&a, &b).image(i), b.image(a.image(i)));
    }

    #[test]
    fn inverse_and_identity(a in perm(10)) {
        let id = Permutation::identity(10);
        prop_assert_eq!(mul(&a, &a.inverse()), id.clone());
        prop_assert_eq!(mul(&id, &a), a.clone());
        prop_assert_eq!(a.pow(a.order() as i64), id);
    }

    #[test]
    fn conjugation_is_an_automorphism((x, y, g) in triple(8)) {
        let xg = x.conjugate(&g).unwrap();
        prop_assert_eq!(xg.clone(), mul(&mul(&g.inverse(), &x), &g));
        prop_assert_eq!(mul(&x, &y).conjugate(&g).unwrap(), mul(&xg, &y.conjugate(&g).unwrap()));
        // x^(gh) = (x^g)^h
        prop_assert_eq!(x.conjugate(&mul(&g, &y)).unwrap(), xg.conjugate(&y).unwrap());
    }

    #[test]
    fn conjugation_preserves_cycle_type(x in perm(12), g in perm(12)) {
        let sorted = |p: &Permutation| {
            let mut lens: Vec<usize> = p.cycles().iter().map(Vec::len).collect();
            lens.sort_unstable();
            lens
        };
        prop_assert_eq!(sorted(&x), sorted(&x.conjugate(&g).unwrap()));
        prop_assert_eq!(x.cycle_type(), x.conjugate(&g).unwrap().cycle_type());
    }

    #[test]
    fn order_is_lcm_of_cycle_lengths(x in perm(12)) {
        let lcm = x.cycles().iter().map(Vec::len).fold(1u64, |acc, l| {
            let l = l as u64;
            let (mut a, mut b) = (acc, l);
            while b != 0 { (a, b) = (b, a % b); }
            acc / a * l
        });
        prop_assert_eq!(x.order(), lcm);
    }

    #[test]
    fn cycle_notation_round_trips(x in perm(11)) {
        prop_assert_eq!(Permutation::parse_cycles(&x.to_cycles(), 11).unwrap(), x);
    }

    #[test]
    fn products_of_generators_are_members(word in prop::collection::vec(0usize..2, 0..40)) {
        let gens = vec![
            Permutation::parse_cycles("(1,2)", 5).unwrap(),
            Permutation::parse_cycles("(1,2,3,4,5)", 5).unwrap(),
        ];
        let s5 = PermGroup::new(5, gens.clone()).unwrap();
        let x = word.iter().fold(Permutation::identity(5), |acc, &i| mul(&acc, &gens[i]));
        prop_assert!(s5.contains(&x).unwrap());
        let a5 = PermGroup::new(5, vec![
            Permutation::parse_cycles("(1,2,3)", 5).unwrap(),
            Permutation::parse_cycles("(1,2,3,4,5)", 5).unwrap(),
        ]).unwrap();
        prop_assert_eq!(a5.contains(&x).unwrap(), x.is_even());
    }

    #[test]
    fn order_matches_brute_force((n, gens) in small_group()) {
        let g = PermGroup::new(n, gens.clone()).unwrap();
        let elems = brute_closure(n, &gens);
        prop_assert_eq!(g.order(), elems.len() as u128);
        for e in &elems {
            prop_assert!(g.contains(&Permutation::from_images(e.clone()).unwrap()).unwrap());
        }
    }

    #[test]
    fn wielandt_series_descends((n, gens) in small_group(), a in perm(6)) {
        let g = PermGroup::new(n, gens).unwrap();
        let a = g.element_at(a.images().iter().sum::<usize>() as u64 % g.order() as u64).unwrap();
        let sub = SubgroupHandle::new(&g, vec![a]).unwrap();
        let series = wielandt_series(&g, &sub).unwrap();
        let orders = series.orders();
        prop_assert!(orders.windows(2).all(|w| w[0] > w[1]));
        prop_assert!(series.terms.windows(2).all(|w| w[1].is_subgroup_of(w[0].group())));
        prop_assert_eq!(is_subnormal(&sub, &g).unwrap(), series.last().order() == sub.order());
    }

    #[test]
    fn subnormality_matches_lattice((n, gens) in small_group(), pick in any::<u64>()) {
        let g = PermGroup::new(n, gens).unwrap();
        prop_assume!(g.order() <= 200);
        let lattice = SubgroupLattice::new(&g).unwrap();
        let i = (pick % lattice.len() as u64) as usize;
        let a = lattice.to_group(i).unwrap();
        prop_assert_eq!(is_subnormal(&a, lattice.group()).unwrap(), lattice.is_subnormal(i));
        if check_star(lattice.group(), &a).unwrap().holds {
            prop_assert!(check_starstar(lattice.group(), &a).unwrap().holds);
        }
    }
}
