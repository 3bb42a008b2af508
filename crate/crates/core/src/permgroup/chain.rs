//! Base and strong generating set.
//!
//! Level `l` holds the base point `b_l`, the strong generators fixing
//! `b_0, …, b_{l-1}`, and a transversal: for each point `β` of the basic
//! orbit, an element `u` with `b_l^u = β` together with its inverse.
//! Every element factors uniquely as `u_{k-1} · … · u_1 · u_0` (left to
//! right), which gives both membership by sifting and a mixed-radix
//! element numbering.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::perm::Permutation;

#[derive(Clone, Debug)]
pub(crate) struct Level {
    pub base: usize,
    pub gens: Vec<Permutation>,
    pub orbit: Vec<usize>,
    pub transversal: Vec<Option<(Permutation, Permutation)>>,
}

impl Level {
    fn new(base: usize, degree: usize) -> Self {
        let mut level = Level {
            base,
            gens: Vec::new(),
            orbit: Vec::new(),
            transversal: vec![None; degree],
        };
        level.rebuild_orbit();
        level
    }

    fn rebuild_orbit(&mut self) {
        if self.orbit.is_empty() {
            let id = Permutation::identity(self.transversal.len());
            self.transversal[self.base] = Some((id.clone(), id));
            self.orbit.push(self.base);
        }
        // Existing transversal entries are kept; every orbit point is revisited
        // so that newly added generators are applied to all of them.
        let mut head = 0;
        while head < self.orbit.len() {
            let pt = self.orbit[head];
            head += 1;
            for g in &self.gens {
                let img = g.apply(pt);
                if self.transversal[img].is_none() {
                    let u = self.transversal[pt].as_ref().unwrap().0.then(g);
                    let uinv = u.inverse();
                    self.transversal[img] = Some((u, uinv));
                    self.orbit.push(img);
                }
            }
        }
    }

    pub fn rep(&self, point: usize) -> Option<&Permutation> {
        self.transversal[point].as_ref().map(|(u, _)| u)
    }
}

#[derive(Clone, Debug)]
pub(crate) struct StabChain {
    pub degree: usize,
    pub levels: Vec<Level>,
}

impl StabChain {
    pub fn trivial(degree: usize) -> Self {
        StabChain {
            degree,
            levels: Vec::new(),
        }
    }

    pub fn order(&self) -> u128 {
        self.levels
            .iter()
            .fold(1u128, |acc, l| acc.saturating_mul(l.orbit.len() as u128))
    }

    /// Strips `g` through the levels starting at `from`. Returns the residue
    /// and the level at which sifting stopped (`levels.len()` if it passed all).
    pub fn sift_from(&self, g: &Permutation, from: usize) -> (Permutation, usize) {
        let mut h = g.clone();
        for (l, level) in self.levels.iter().enumerate().skip(from) {
            let beta = h.apply(level.base);
            match &level.transversal[beta] {
                None => return (h, l),
                Some((_, uinv)) => h = h.then(uinv),
            }
        }
        (h, self.levels.len())
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (res, l) = self.sift_from(g, 0);
        l == self.levels.len() && res.is_identity()
    }

    /// Orbit positions of `g`'s factorization, outermost level first; `None` if not a member.
    pub fn digits(&self, g: &Permutation) -> Option<Vec<usize>> {
        let mut h = g.clone();
        let mut out = Vec::with_capacity(self.levels.len());
        for level in &self.levels {
            let beta = h.apply(level.base);
            let (_, uinv) = level.transversal[beta].as_ref()?;
            out.push(level.orbit.iter().position(|&x| x == beta).unwrap());
            h = h.then(uinv);
        }
        h.is_identity().then_some(out)
    }

    pub fn element_from_digits(&self, digits: &[usize]) -> Permutation {
        let mut g = Permutation::identity(self.degree);
        for (level, &d) in self.levels.iter().zip(digits).rev() {
            g = g.then(level.rep(level.orbit[d]).unwrap());
        }
        g
    }

    pub fn random_element(&self, rng: &mut ChaCha8Rng) -> Permutation {
        let digits: Vec<usize> = self
            .levels
            .iter()
            .map(|l| rng.gen_range(0..l.orbit.len()))
            .collect();
        self.element_from_digits(&digits)
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn strong_generators(&self) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = Vec::new();
        for l in &self.levels {
            for g in &l.gens {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out
    }

    fn push_level_moved_by(&mut self, h: &Permutation) {
        let base = h.first_moved().expect("nontrivial residue");
        self.levels.push(Level::new(base, self.degree));
    }

    /// Adds a residue that stopped at level `j` to levels `lo..=j`.
    fn add_residue(&mut self, h: Permutation, lo: usize, j: usize) {
        if j == self.levels.len() {
            self.push_level_moved_by(&h);
        }
        for l in lo..=j {
            self.levels[l].gens.push(h.clone());
            self.levels[l].rebuild_orbit();
        }
    }

    /// Deterministic Schreier–Sims.
    pub fn schreier_sims(degree: usize, gens: &[Permutation]) -> Self {
        let mut chain = StabChain::trivial(degree);
        let gens: Vec<Permutation> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        for g in &gens {
            if chain.levels.iter().all(|l| g.fixes(l.base)) {
                chain.push_level_moved_by(g);
            }
        }
        for l in 0..chain.levels.len() {
            let prefix: Vec<usize> = chain.levels[..l].iter().map(|x| x.base).collect();
            chain.levels[l].gens = gens
                .iter()
                .filter(|g| prefix.iter().all(|&b| g.fixes(b)))
                .cloned()
                .collect();
            chain.levels[l].rebuild_orbit();
        }
        let mut i = chain.levels.len() as isize - 1;
        while i >= 0 {
            let iu = i as usize;
            match chain.find_nonsifting_schreier_generator(iu) {
                Some((h, j)) => {
                    chain.add_residue(h, iu + 1, j);
                    i = j as isize;
                }
                None => i -= 1,
            }
        }
        chain
    }

    fn find_nonsifting_schreier_generator(&self, i: usize) -> Option<(Permutation, usize)> {
        let level = &self.levels[i];
        for &beta in &level.orbit {
            let u = level.rep(beta).unwrap();
            for s in &level.gens {
                let img = s.apply(beta);
                let uinv = &level.transversal[img].as_ref().unwrap().1;
                let h = u.then(s).then(uinv);
                if h.is_identity() {
                    continue;
                }
                let (res, j) = self.sift_from(&h, i + 1);
                if j < self.levels.len() || !res.is_identity() {
                    return Some((res, j));
                }
            }
        }
        None
    }

    /// Randomized Schreier–Sims that stops once the chain certifies `target`.
    ///
    /// Basic orbits computed from genuine group elements are subsets of the
    /// true basic orbits, so the product of their lengths never exceeds the
    /// group order: reaching `target` proves `|⟨gens⟩| ≥ target`. Returns
    /// `None` after `max_stall` consecutive trivial sifts.
    pub fn random_with_target(
        degree: usize,
        gens: &[Permutation],
        target: u128,
        rng: &mut ChaCha8Rng,
        max_stall: usize,
    ) -> Option<Self> {
        let mut chain = StabChain::trivial(degree);
        let gens: Vec<Permutation> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        for g in &gens {
            let (res, j) = chain.sift_from(g, 0);
            if j < chain.levels.len() || !res.is_identity() {
                chain.add_residue(res, 0, j);
            }
        }
        if chain.order() >= target {
            return Some(chain);
        }
        if gens.is_empty() {
            return None;
        }
        let mut walker = ProductReplacement::new(&gens, degree, rng);
        let mut stall = 0;
        while stall < max_stall {
            let g = walker.next(rng);
            let (res, j) = chain.sift_from(&g, 0);
            if j == chain.levels.len() && res.is_identity() {
                stall += 1;
                continue;
            }
            stall = 0;
            chain.add_residue(res, 0, j);
            if chain.order() >= target {
                return Some(chain);
            }
        }
        None
    }
}

/// Product-replacement random walk on a generating tuple.
pub(crate) struct ProductReplacement {
    state: Vec<Permutation>,
    acc: Permutation,
}

impl ProductReplacement {
    pub fn new(gens: &[Permutation], degree: usize, rng: &mut ChaCha8Rng) -> Self {
        let len = gens.len().max(10);
        let state: Vec<Permutation> = (0..len).map(|k| gens[k % gens.len()].clone()).collect();
        let mut walker = ProductReplacement {
            state,
            acc: Permutation::identity(degree),
        };
        for _ in 0..50 {
            walker.next(rng);
        }
        walker
    }

    pub fn next(&mut self, rng: &mut ChaCha8Rng) -> Permutation {
        let n = self.state.len();
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        self.state[i] = if rng.gen_bool(0.5) {
            self.state[i].then(&self.state[j])
        } else {
            self.state[j].then(&self.state[i])
        };
        self.acc = self.acc.then(&self.state[i]);
        self.acc.clone()
    }
}
