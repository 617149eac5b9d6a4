//! Deterministic Schreier–Sims.
//!
//! Base points are chosen smallest-moved-point first after an optional
//! caller-supplied prefix. Transversals hold explicit coset representatives
//! and their inverses; the groups handled here have small orbits.

use num_bigint::BigUint;

use crate::perm::Permutation;

const NONE: u32 = u32::MAX;

#[derive(Debug, Clone)]
pub(crate) struct Level {
    pub base_point: u32,
    pub gens: Vec<Permutation>,
    pub orbit: Vec<u32>,
    /// `pos[point]` is the index into `orbit`/`reps`, or `NONE`.
    pos: Vec<u32>,
    /// `reps[i]` maps the base point to `orbit[i]`.
    pub reps: Vec<Permutation>,
    inv_reps: Vec<Permutation>,
}

impl Level {
    fn new(base_point: u32, degree: usize) -> Self {
        let mut level = Level {
            base_point,
            gens: Vec::new(),
            orbit: Vec::new(),
            pos: vec![NONE; degree],
            reps: Vec::new(),
            inv_reps: Vec::new(),
        };
        level.rebuild(degree);
        level
    }

    fn rebuild(&mut self, degree: usize) {
        self.pos.iter_mut().for_each(|p| *p = NONE);
        self.orbit.clear();
        self.reps.clear();
        self.inv_reps.clear();
        let id = Permutation::identity(degree);
        self.pos[self.base_point as usize] = 0;
        self.orbit.push(self.base_point);
        self.reps.push(id.clone());
        self.inv_reps.push(id);
        let mut head = 0;
        while head < self.orbit.len() {
            let beta = self.orbit[head];
            for g in &self.gens {
                let gamma = g.image(beta);
                if self.pos[gamma as usize] == NONE {
                    let rep = self.reps[head].then(g);
                    self.pos[gamma as usize] = self.orbit.len() as u32;
                    self.orbit.push(gamma);
                    self.inv_reps.push(rep.inverse());
                    self.reps.push(rep);
                }
            }
            head += 1;
        }
    }

    #[inline]
    pub fn index_of(&self, point: u32) -> Option<usize> {
        match self.pos[point as usize] {
            NONE => None,
            i => Some(i as usize),
        }
    }

    #[inline]
    pub fn inv_rep(&self, idx: usize) -> &Permutation {
        &self.inv_reps[idx]
    }
}

/// Base and strong generating set.
#[derive(Debug, Clone)]
pub(crate) struct Bsgs {
    pub degree: usize,
    pub levels: Vec<Level>,
}

impl Bsgs {
    pub fn new(degree: usize, gens: &[Permutation], base_prefix: &[u32]) -> Self {
        let mut bsgs = Bsgs {
            degree,
            levels: base_prefix.iter().map(|&b| Level::new(b, degree)).collect(),
        };
        let gens: Vec<_> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        for g in &gens {
            bsgs.insert_strong(g.clone());
        }
        bsgs.complete();
        bsgs
    }

    /// Builds the chain for a stabilizer from the levels below `depth`.
    pub fn tail(&self, depth: usize) -> Bsgs {
        Bsgs {
            degree: self.degree,
            levels: self.levels[depth.min(self.levels.len())..].to_vec(),
        }
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::from(1u32), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    pub fn strong_generators(&self) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = Vec::new();
        for level in &self.levels {
            for g in &level.gens {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out
    }

    /// Sifts `g` through the levels starting at `from`. Returns the residue
    /// and the level at which it dropped out (`levels.len()` if it passed
    /// every level).
    pub fn sift(&self, g: &Permutation, from: usize) -> (Permutation, usize) {
        let mut h = g.clone();
        for (l, level) in self.levels.iter().enumerate().skip(from) {
            let beta = h.image(level.base_point);
            match level.index_of(beta) {
                None => return (h, l),
                Some(idx) => {
                    if idx != 0 {
                        h = h.then(level.inv_rep(idx));
                    }
                }
            }
        }
        (h, self.levels.len())
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        let (h, drop) = self.sift(g, 0);
        drop == self.levels.len() && h.is_identity()
    }

    /// Adds `g` as a strong generator at every level whose base prefix it
    /// fixes, extending the base if `g` fixes all base points.
    fn insert_strong(&mut self, g: Permutation) {
        let mut depth = 0;
        while depth < self.levels.len() && g.image(self.levels[depth].base_point) == self.levels[depth].base_point {
            depth += 1;
        }
        if depth == self.levels.len() {
            let moved = g.first_moved_point().expect("identity is never inserted");
            self.levels.push(Level::new(moved, self.degree));
        }
        for level in self.levels.iter_mut().take(depth + 1) {
            level.gens.push(g.clone());
            level.rebuild(self.degree);
        }
    }

    /// Adds a new generator and restores the strong generating property.
    pub fn extend(&mut self, g: &Permutation) {
        if self.contains(g) {
            return;
        }
        self.insert_strong(g.clone());
        self.complete();
    }

    /// Schreier–Sims main loop: checks every Schreier generator from the
    /// deepest level upward, jumping back down whenever a residue is added.
    fn complete(&mut self) {
        let mut i = self.levels.len() as isize - 1;
        'outer: while i >= 0 {
            let l = i as usize;
            let level = &self.levels[l];
            let n_orbit = level.orbit.len();
            let n_gens = level.gens.len();
            for a in 0..n_orbit {
                for s in 0..n_gens {
                    let level = &self.levels[l];
                    let beta = level.orbit[a];
                    let gen = &level.gens[s];
                    let gamma = gen.image(beta);
                    let gamma_idx = level.index_of(gamma).expect("orbit is closed");
                    let schreier = level.reps[a].then(gen).then(level.inv_rep(gamma_idx));
                    if schreier.is_identity() {
                        continue;
                    }
                    let (residue, drop) = self.sift(&schreier, l + 1);
                    if drop < self.levels.len() || !residue.is_identity() {
                        if drop == self.levels.len() {
                            let moved = residue.first_moved_point().expect("nontrivial residue");
                            self.levels.push(Level::new(moved, self.degree));
                        }
                        for level in &mut self.levels[l + 1..=drop] {
                            level.gens.push(residue.clone());
                            level.rebuild(self.degree);
                        }
                        i = drop as isize;
                        continue 'outer;
                    }
                }
            }
            i -= 1;
        }
    }

    /// Visits every element exactly once: `r_{k-1} * ... * r_0`.
    pub fn for_each_element(&self, mut f: impl FnMut(&Permutation)) {
        let id = Permutation::identity(self.degree);
        let mut stack: Vec<(usize, Permutation)> = vec![(self.levels.len(), id)];
        // every element factors uniquely as r_{k-1} ... r_1 r_0
        while let Some((depth, acc)) = stack.pop() {
            if depth == 0 {
                f(&acc);
                continue;
            }
            let level = &self.levels[depth - 1];
            for rep in level.reps.iter().rev() {
                stack.push((depth - 1, acc.then(rep)));
            }
        }
    }
}
