//! Deterministic Schreier–Sims: a base and strong generating set for a
//! permutation group given by generators.

use num_bigint::BigUint;

use super::perm::Permutation;

#[derive(Debug, Clone)]
struct Level {
    point: usize,
    gens: Vec<Permutation>,
    /// `slot[x]` indexes `reps` when `x` is in the basic orbit.
    slot: Vec<Option<usize>>,
    orbit: Vec<usize>,
    /// `(u, u^-1)` with `u` mapping the base point to the orbit point.
    reps: Vec<(Permutation, Permutation)>,
}

impl Level {
    fn new(point: usize, n: usize) -> Self {
        let mut level =
            Level { point, gens: Vec::new(), slot: vec![None; n], orbit: Vec::new(), reps: Vec::new() };
        level.rebuild();
        level
    }

    fn rebuild(&mut self) {
        let n = self.slot.len();
        self.slot.iter_mut().for_each(|s| *s = None);
        self.orbit.clear();
        self.reps.clear();
        let id = Permutation::identity(n);
        self.slot[self.point] = Some(0);
        self.orbit.push(self.point);
        self.reps.push((id.clone(), id));
        let mut k = 0;
        while k < self.orbit.len() {
            let x = self.orbit[k];
            let u = self.reps[k].0.clone();
            k += 1;
            for s in &self.gens {
                let y = s.apply(x);
                if self.slot[y].is_none() {
                    let uy = u.then(s);
                    self.slot[y] = Some(self.reps.len());
                    self.orbit.push(y);
                    let inv = uy.inverse();
                    self.reps.push((uy, inv));
                }
            }
        }
    }

    fn rep(&self, x: usize) -> Option<&(Permutation, Permutation)> {
        self.slot[x].map(|i| &self.reps[i])
    }
}

/// Stabilizer chain `G = G^(0) >= G^(1) >= ... >= 1` with `G^(i)` the
/// pointwise stabilizer of the first `i` base points.
#[derive(Debug, Clone)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

/// A point of the longest cycle of `h`, smallest label among those.
fn new_base_point(h: &Permutation) -> usize {
    h.cycles().into_iter().max_by(|a, b| a.len().cmp(&b.len()).then(b[0].cmp(&a[0]))).unwrap()[0]
}

impl StabChain {
    /// Builds the chain for the group generated by `gens`, starting from
    /// `base` and extending it as needed.
    pub fn new(degree: usize, base: &[usize], gens: &[Permutation]) -> Self {
        let mut base: Vec<usize> = base.to_vec();
        let gens: Vec<&Permutation> = gens.iter().filter(|g| !g.is_identity()).collect();
        for g in &gens {
            assert_eq!(g.degree(), degree, "generator degree");
            if g.fixes_all(&base) {
                base.push(new_base_point(g));
            }
        }
        let mut levels: Vec<Level> = base.iter().map(|&b| Level::new(b, degree)).collect();
        for (i, level) in levels.iter_mut().enumerate() {
            level.gens = gens.iter().filter(|g| g.fixes_all(&base[..i])).map(|&g| g.clone()).collect();
            level.rebuild();
        }
        let mut chain = StabChain { degree, levels };
        chain.complete();
        chain
    }

    fn complete(&mut self) {
        let mut i = self.levels.len();
        'levels: while i > 0 {
            let lvl = i - 1;
            let level = &self.levels[lvl];
            for (k, &beta) in level.orbit.iter().enumerate() {
                let u = &level.reps[k].0;
                for s in &level.gens {
                    let gamma = s.apply(beta);
                    let us = u.then(s);
                    let (ug, ug_inv) = level.rep(gamma).unwrap();
                    if us == *ug {
                        continue;
                    }
                    let (h, j) = self.sift(us.then(ug_inv), lvl + 1);
                    if j == self.levels.len() && h.is_identity() {
                        continue;
                    }
                    if j == self.levels.len() {
                        self.levels.push(Level::new(new_base_point(&h), self.degree));
                    }
                    for l in lvl + 1..=j {
                        self.levels[l].gens.push(h.clone());
                        self.levels[l].rebuild();
                    }
                    i = j + 1;
                    continue 'levels;
                }
            }
            i -= 1;
        }
    }

    /// Strips `h` through the levels from `from` on. Returns the residue and
    /// the level where stripping stopped (`depth()` when it went through).
    fn sift(&self, mut h: Permutation, from: usize) -> (Permutation, usize) {
        for (j, level) in self.levels.iter().enumerate().skip(from) {
            let b = h.apply(level.point);
            match level.rep(b) {
                Some((_, inv)) => h = h.then(inv),
                None => return (h, j),
            }
        }
        (h, self.levels.len())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.point).collect()
    }

    pub fn orbit(&self, level: usize) -> &[usize] {
        &self.levels[level].orbit
    }

    /// Strong generators fixing the first `level` base points.
    pub fn level_generators(&self, level: usize) -> &[Permutation] {
        self.levels.get(level).map_or(&[], |l| &l.gens)
    }

    /// Coset representative mapping base point `level` to `x`.
    pub fn transversal(&self, level: usize, x: usize) -> Option<&Permutation> {
        self.levels[level].rep(x).map(|(u, _)| u)
    }

    pub fn order(&self) -> BigUint {
        self.levels.iter().map(|l| BigUint::from(l.orbit.len())).product()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        if p.degree() != self.degree {
            return false;
        }
        let (h, j) = self.sift(p.clone(), 0);
        j == self.levels.len() && h.is_identity()
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

    /// The same group with `prefix` as the leading base points.
    pub fn with_base_prefix(&self, prefix: &[usize]) -> StabChain {
        let mut base = prefix.to_vec();
        for b in self.base() {
            if !base.contains(&b) {
                base.push(b);
            }
        }
        StabChain::new(self.degree, &base, &self.strong_generators())
    }
}
