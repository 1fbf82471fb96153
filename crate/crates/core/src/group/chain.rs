//! Deterministic Schreier–Sims.
//!
//! Level `l` stores the strong generators fixing `base[0..l]`, the orbit of
//! `base[l]` under them in BFS order, and one coset representative per orbit
//! point. New base points are always the smallest point moved by the element
//! that forced them.

use crate::perm::Permutation;

const NOT_IN_ORBIT: u32 = u32::MAX;

#[derive(Clone, Debug)]
pub(crate) struct Level {
    pub base: usize,
    pub gens: Vec<Permutation>,
    pub orbit: Vec<u16>,
    /// point -> index into `orbit`, or `NOT_IN_ORBIT`
    pub position: Vec<u32>,
    /// `base^transversal[k] = orbit[k]`
    pub transversal: Vec<Permutation>,
    pub inv_transversal: Vec<Permutation>,
}

impl Level {
    fn new(degree: usize, base: usize) -> Self {
        let mut level = Level {
            base,
            gens: Vec::new(),
            orbit: Vec::new(),
            position: Vec::new(),
            transversal: Vec::new(),
            inv_transversal: Vec::new(),
        };
        level.rebuild_orbit(degree);
        level
    }

    fn rebuild_orbit(&mut self, degree: usize) {
        let id = Permutation::identity(degree);
        self.position = vec![NOT_IN_ORBIT; degree];
        self.orbit = vec![self.base as u16];
        self.position[self.base] = 0;
        self.transversal = vec![id.clone()];
        self.inv_transversal = vec![id];
        let mut head = 0;
        while head < self.orbit.len() {
            let pt = self.orbit[head] as usize;
            for g in &self.gens {
                let im = g.image(pt);
                if self.position[im] == NOT_IN_ORBIT {
                    self.position[im] = self.orbit.len() as u32;
                    self.orbit.push(im as u16);
                    let u = self.transversal[head].mul_unchecked(g);
                    self.inv_transversal.push(u.inverse());
                    self.transversal.push(u);
                }
            }
            head += 1;
        }
    }

    #[inline]
    pub fn index_of(&self, point: usize) -> Option<usize> {
        match self.position[point] {
            NOT_IN_ORBIT => None,
            k => Some(k as usize),
        }
    }
}

/// Divides `g` by transversal elements starting at level `from`.
///
/// Returns the residue and the level at which sifting stopped (equal to
/// `levels.len()` when every level was passed).
pub(crate) fn sift(levels: &[Level], g: &Permutation, from: usize) -> (Permutation, usize) {
    let mut h = g.clone();
    for (l, level) in levels.iter().enumerate().skip(from) {
        let b = h.image(level.base);
        match level.index_of(b) {
            None => return (h, l),
            Some(k) => {
                if k != 0 {
                    h = h.mul_unchecked(&level.inv_transversal[k]);
                }
            }
        }
    }
    (h, levels.len())
}

pub(crate) struct ChainBuilder {
    degree: usize,
    pub levels: Vec<Level>,
}

impl ChainBuilder {
    pub fn new(degree: usize) -> Self {
        ChainBuilder {
            degree,
            levels: Vec::new(),
        }
    }

    pub fn from_levels(degree: usize, levels: Vec<Level>) -> Self {
        ChainBuilder { degree, levels }
    }

    /// Adds one generator and restores completeness of the chain.
    pub fn add_generator(&mut self, g: &Permutation) {
        let (h, j) = sift(&self.levels, g, 0);
        if h.is_identity() {
            return;
        }
        self.install(h, 0, j);
        self.complete_from(j);
    }

    /// Puts `h` into the generator lists of levels `from..=to`, creating a new
    /// level when `to` is one past the end.
    fn install(&mut self, h: Permutation, from: usize, to: usize) {
        if to == self.levels.len() {
            let b = h
                .first_moved_point()
                .expect("identity residues are never installed");
            self.levels.push(Level::new(self.degree, b));
        }
        for l in from..=to {
            self.levels[l].gens.push(h.clone());
            self.levels[l].rebuild_orbit(self.degree);
        }
    }

    fn complete_from(&mut self, start: usize) {
        let mut i = start as isize;
        while i >= 0 {
            let lvl = i as usize;
            match self.find_bad_schreier_generator(lvl) {
                Some((h, j)) => {
                    self.install(h, lvl + 1, j);
                    i = j as isize;
                }
                None => i -= 1,
            }
        }
    }

    fn find_bad_schreier_generator(&self, lvl: usize) -> Option<(Permutation, usize)> {
        let level = &self.levels[lvl];
        for (k, &pt) in level.orbit.iter().enumerate() {
            for s in &level.gens {
                let target = level.position[s.image(pt as usize)] as usize;
                let us = level.transversal[k].mul_unchecked(s);
                if us == level.transversal[target] {
                    continue;
                }
                let schreier = us.mul_unchecked(&level.inv_transversal[target]);
                let (h, j) = sift(&self.levels, &schreier, lvl + 1);
                if !h.is_identity() {
                    return Some((h, j));
                }
            }
        }
        None
    }
}
