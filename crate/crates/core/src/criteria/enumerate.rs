//! Canonical generators of the order-`p` subgroups of `S_n`.
//!
//! An order-`p` element `z` is canonical when, with `a` its smallest moved
//! point, `z(a)` is the smallest other point of the cycle through `a`. Each
//! subgroup of order `p` has exactly one canonical generator.

use std::ops::ControlFlow;

use crate::perm::Permutation;

pub(crate) fn is_canonical_generator(z: &Permutation) -> bool {
    let Some(a) = z.first_moved_point() else {
        return false;
    };
    let first = z.image(a);
    let mut x = z.image(first);
    while x != a {
        if x < first {
            return false;
        }
        x = z.image(x);
    }
    true
}

/// Number of order-`p` subgroups of `S_n`.
pub(crate) fn canonical_order_p_count(n: usize, p: usize) -> u128 {
    let fact = |k: usize| (1..=k as u128).product::<u128>();
    let mut total = 0u128;
    let mut k = 1;
    while p * k <= n {
        total += fact(n) / (fact(n - p * k) * (p as u128).pow(k as u32) * fact(k));
        k += 1;
    }
    total / (p as u128 - 1)
}

pub(crate) struct CanonicalCycles {
    n: usize,
    p: usize,
}

struct State {
    used: Vec<bool>,
    images: Vec<usize>,
}

impl CanonicalCycles {
    pub fn new(n: usize, p: usize) -> Self {
        CanonicalCycles { n, p }
    }

    /// Starting segments of the cycle through the smallest moved point, in
    /// enumeration order; the full enumeration is their concatenation.
    pub fn prefixes(&self) -> Vec<Vec<usize>> {
        let depth = self.p.min(3);
        let mut out = Vec::new();
        if self.p > self.n {
            return out;
        }
        let mut stack = Vec::new();
        for a in 0..=self.n - self.p {
            stack.push(a);
            self.extend_prefix(&mut stack, depth, &mut out);
            stack.pop();
        }
        out
    }

    fn extend_prefix(&self, cycle: &mut Vec<usize>, depth: usize, out: &mut Vec<Vec<usize>>) {
        if cycle.len() == depth {
            out.push(cycle.clone());
            return;
        }
        for x in self.first_cycle_choices(cycle) {
            cycle.push(x);
            self.extend_prefix(cycle, depth, out);
            cycle.pop();
        }
    }

    fn first_cycle_choices(&self, cycle: &[usize]) -> Vec<usize> {
        let lo = if cycle.len() >= 2 { cycle[1] } else { cycle[0] };
        (lo + 1..self.n).filter(|x| !cycle.contains(x)).collect()
    }

    /// Calls `f` on every canonical element whose first cycle starts with `prefix`.
    pub fn for_each<F>(&self, prefix: &[usize], f: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&Permutation) -> ControlFlow<()>,
    {
        let mut st = State {
            used: vec![false; self.n],
            images: (0..self.n).collect(),
        };
        for u in 0..prefix[0] {
            st.used[u] = true;
        }
        for &x in prefix {
            st.used[x] = true;
        }
        let mut cycle = prefix.to_vec();
        self.finish_first(&mut cycle, &mut st, f)
    }

    fn finish_first<F>(&self, cycle: &mut Vec<usize>, st: &mut State, f: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&Permutation) -> ControlFlow<()>,
    {
        if cycle.len() == self.p {
            return self.close_cycle(cycle, st, f);
        }
        for x in self.first_cycle_choices(cycle) {
            if st.used[x] {
                continue;
            }
            st.used[x] = true;
            cycle.push(x);
            let r = self.finish_first(cycle, st, f);
            cycle.pop();
            st.used[x] = false;
            r?;
        }
        ControlFlow::Continue(())
    }

    fn close_cycle<F>(&self, cycle: &[usize], st: &mut State, f: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&Permutation) -> ControlFlow<()>,
    {
        for (i, &x) in cycle.iter().enumerate() {
            st.images[x] = cycle[(i + 1) % cycle.len()];
        }
        let r = self.rest(cycle[0] + 1, st, f);
        for &x in cycle {
            st.images[x] = x;
        }
        r
    }

    fn rest<F>(&self, mut u: usize, st: &mut State, f: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&Permutation) -> ControlFlow<()>,
    {
        while u < self.n && st.used[u] {
            u += 1;
        }
        if u == self.n {
            let z = Permutation::from_images(st.images.clone()).expect("bijection");
            return f(&z);
        }
        st.used[u] = true;
        let r = self.rest(u + 1, st, f);
        if r.is_continue() {
            let mut cycle = vec![u];
            let r = self.later_cycle(&mut cycle, st, f);
            st.used[u] = false;
            return r;
        }
        st.used[u] = false;
        r
    }

    fn later_cycle<F>(&self, cycle: &mut Vec<usize>, st: &mut State, f: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&Permutation) -> ControlFlow<()>,
    {
        if cycle.len() == self.p {
            return self.close_cycle(cycle, st, f);
        }
        for x in cycle[0] + 1..self.n {
            if st.used[x] {
                continue;
            }
            st.used[x] = true;
            cycle.push(x);
            let r = self.later_cycle(cycle, st, f);
            cycle.pop();
            st.used[x] = false;
            r?;
        }
        ControlFlow::Continue(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn collect(n: usize, p: usize) -> Vec<Permutation> {
        let e = CanonicalCycles::new(n, p);
        let mut out = Vec::new();
        for prefix in e.prefixes() {
            let _ = e.for_each(&prefix, &mut |z| {
                out.push(z.clone());
                ControlFlow::Continue(())
            });
        }
        out
    }

    /// All permutations of `0..n` by Heap's algorithm.
    fn all_perms(n: usize) -> Vec<Permutation> {
        let mut a: Vec<usize> = (0..n).collect();
        let mut c = vec![0; n];
        let mut out = vec![Permutation::from_images(a.clone()).unwrap()];
        let mut i = 0;
        while i < n {
            if c[i] < i {
                if i % 2 == 0 {
                    a.swap(0, i);
                } else {
                    a.swap(c[i], i);
                }
                out.push(Permutation::from_images(a.clone()).unwrap());
                c[i] += 1;
                i = 0;
            } else {
                c[i] = 0;
                i += 1;
            }
        }
        out
    }

    #[test]
    fn matches_brute_force() {
        for n in 2..=7 {
            let perms = all_perms(n);
            for p in [2usize, 3, 5, 7].into_iter().filter(|&p| p <= n) {
                let expected: BTreeSet<Permutation> = perms
                    .iter()
                    .filter(|z| z.order() == p as u64 && is_canonical_generator(z))
                    .cloned()
                    .collect();
                let got = collect(n, p);
                assert_eq!(got.len(), expected.len(), "n={n} p={p}");
                assert_eq!(got.iter().cloned().collect::<BTreeSet<_>>(), expected);
                assert_eq!(canonical_order_p_count(n, p), expected.len() as u128);
            }
        }
    }

    #[test]
    fn one_canonical_generator_per_subgroup() {
        let z = Permutation::from_cycles(7, &[vec![0, 3, 1], vec![2, 5, 4]]).unwrap();
        let canon: Vec<_> = (1..3).map(|k| z.pow(k)).filter(is_canonical_generator).collect();
        assert_eq!(canon.len(), 1);
        assert!(!is_canonical_generator(&Permutation::identity(4)));
    }
}
