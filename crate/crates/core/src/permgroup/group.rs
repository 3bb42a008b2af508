use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::chain::StabChain;
use super::perm::Permutation;
use crate::error::{Error, Result};

/// Default cap on explicit element enumeration.
pub const DEFAULT_ELEMENT_CAP: u128 = 10_000_000;

const SEED: u64 = 0x5eed_c0de;

/// A permutation group given by generators, certified by a stabilizer chain.
///
/// Immutable after construction; safe to share across threads.
#[derive(Clone)]
pub struct GeneratedGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: StabChain,
}

impl fmt::Debug for GeneratedGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GeneratedGroup")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

fn check_degrees(degree: usize, gens: &[Permutation]) -> Result<()> {
    for g in gens {
        if g.degree() != degree {
            return Err(Error::DegreeMismatch(degree, g.degree()));
        }
    }
    Ok(())
}

impl GeneratedGroup {
    /// Builds a group with the deterministic Schreier–Sims algorithm.
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        check_degrees(degree, &generators)?;
        let chain = StabChain::schreier_sims(degree, &generators);
        Ok(GeneratedGroup {
            degree,
            generators,
            chain,
        })
    }

    /// `build_group`: the degree is taken from the generators.
    pub fn from_generators(generators: Vec<Permutation>) -> Result<Self> {
        let degree = generators
            .first()
            .map(|g| g.degree())
            .ok_or_else(|| Error::InvalidParameters("empty generator list".into()))?;
        Self::new(degree, generators)
    }

    /// Builds a group whose order is known in advance. The randomized chain is
    /// accepted only if it certifies `order`; otherwise the deterministic
    /// algorithm runs and its order must match.
    pub fn with_known_order(degree: usize, generators: Vec<Permutation>, order: u128) -> Result<Self> {
        check_degrees(degree, &generators)?;
        let mut rng = ChaCha8Rng::seed_from_u64(SEED);
        let chain = match StabChain::random_with_target(degree, &generators, order, &mut rng, 64) {
            Some(c) if c.order() == order => c,
            _ => StabChain::schreier_sims(degree, &generators),
        };
        if chain.order() != order {
            return Err(Error::InvalidParameters(format!(
                "generators give order {} not {}",
                chain.order(),
                order
            )));
        }
        Ok(GeneratedGroup {
            degree,
            generators,
            chain,
        })
    }

    pub fn trivial(degree: usize) -> Self {
        GeneratedGroup {
            degree,
            generators: Vec::new(),
            chain: StabChain::trivial(degree),
        }
    }

    pub fn symmetric(n: usize) -> Self {
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(Permutation::cycle(n, &(0..n).collect::<Vec<_>>()).unwrap());
            gens.push(Permutation::cycle(n, &[0, 1]).unwrap());
        }
        Self::new(n, gens).unwrap()
    }

    pub fn alternating(n: usize) -> Self {
        let mut gens = Vec::new();
        if n >= 3 {
            gens.push(Permutation::cycle(n, &[0, 1, 2]).unwrap());
            if n >= 4 {
                let long: Vec<usize> = if n % 2 == 1 { (0..n).collect() } else { (1..n).collect() };
                gens.push(Permutation::cycle(n, &long).unwrap());
            }
        }
        Self::new(n, gens).unwrap()
    }

    pub fn cyclic(n: usize) -> Self {
        let gens = if n >= 2 {
            vec![Permutation::cycle(n, &(0..n).collect::<Vec<_>>()).unwrap()]
        } else {
            Vec::new()
        };
        Self::new(n.max(1), gens).unwrap()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn order(&self) -> u128 {
        self.chain.order()
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    pub fn base(&self) -> Vec<usize> {
        self.chain.base()
    }

    pub fn strong_generators(&self) -> Vec<Permutation> {
        self.chain.strong_generators()
    }

    /// Lengths of the basic orbits; their product is the order.
    pub fn basic_orbit_lengths(&self) -> Vec<usize> {
        self.chain.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.chain.contains(g)
    }

    /// A fresh deterministic RNG for randomized routines on this group.
    pub(crate) fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(SEED ^ self.order() as u64)
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().enumerate().all(|(i, a)| {
            self.generators[i + 1..]
                .iter()
                .all(|b| a.then(b) == b.then(a))
        })
    }

    /// `⟨gens⟩` as a subgroup; every generator must lie in `self`.
    pub fn subgroup(&self, gens: &[Permutation]) -> Result<GeneratedGroup> {
        for g in gens {
            if g.degree() != self.degree {
                return Err(Error::DegreeMismatch(self.degree, g.degree()));
            }
            if !self.contains(g) {
                return Err(Error::NotAMember(g.to_string()));
            }
        }
        GeneratedGroup::new(self.degree, gens.to_vec())
    }

    /// Decides `⟨gens⟩ = self` for `gens ⊆ self` (membership is assumed, not checked).
    ///
    /// Cheap rejection by orbits, then a randomized chain that can only
    /// certify equality, then the deterministic order as the fallback.
    pub fn is_generated_by(&self, gens: &[Permutation]) -> bool {
        let target = self.order();
        if target == 1 {
            return true;
        }
        let own = super::blocks::orbits_of(self.degree, &self.generators);
        let sub = super::blocks::orbits_of(self.degree, gens);
        if own.len() != sub.len() {
            return false;
        }
        let mut rng = self.rng();
        if let Some(c) = StabChain::random_with_target(self.degree, gens, target, &mut rng, 40) {
            return c.order() == target;
        }
        StabChain::schreier_sims(self.degree, gens).order() == target
    }

    /// Uniformly random element from the chain.
    pub fn random_element(&self, rng: &mut ChaCha8Rng) -> Permutation {
        self.chain.random_element(rng)
    }

    /// Position of `g` in the enumeration order of [`elements`](Self::elements).
    pub fn element_index(&self, g: &Permutation) -> Option<u128> {
        let digits = self.chain.digits(g)?;
        let mut idx = 0u128;
        for (level, d) in self.chain.levels.iter().zip(digits) {
            idx = idx * level.orbit.len() as u128 + d as u128;
        }
        Some(idx)
    }

    /// Streams every element exactly once, in stabilizer-chain order.
    pub fn elements(&self, cap: u128) -> Result<Elements<'_>> {
        let n = self.order();
        if n > cap {
            return Err(Error::CapExceeded {
                what: "element enumeration",
                needed: n,
                cap,
            });
        }
        Ok(Elements {
            chain: &self.chain,
            digits: vec![0; self.chain.levels.len()],
            done: false,
        })
    }

    pub fn element_vec(&self, cap: u128) -> Result<Vec<Permutation>> {
        Ok(self.elements(cap)?.collect())
    }

    pub fn orbits(&self) -> Vec<Vec<usize>> {
        super::blocks::orbits_of(self.degree, &self.generators)
    }

    pub fn is_transitive(&self) -> bool {
        self.orbits().len() == 1
    }

    /// Whether `N` is normalized by every generator of `self`.
    pub fn normalizes(&self, n: &GeneratedGroup) -> bool {
        self.generators.iter().all(|g| {
            n.generators()
                .iter()
                .all(|x| n.contains(&x.conjugate_by(g)))
        })
    }

    pub fn conjugate_subgroup(&self, g: &Permutation) -> GeneratedGroup {
        let gens: Vec<Permutation> = self.generators.iter().map(|x| x.conjugate_by(g)).collect();
        GeneratedGroup::with_known_order(self.degree, gens, self.order()).unwrap()
    }
}

pub struct Elements<'a> {
    chain: &'a StabChain,
    digits: Vec<usize>,
    done: bool,
}

impl Iterator for Elements<'_> {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        let g = self.chain.element_from_digits(&self.digits);
        // advance the mixed-radix counter, last level fastest
        let mut k = self.digits.len();
        loop {
            if k == 0 {
                self.done = true;
                break;
            }
            k -= 1;
            self.digits[k] += 1;
            if self.digits[k] < self.chain.levels[k].orbit.len() {
                break;
            }
            self.digits[k] = 0;
        }
        Some(g)
    }
}

pub fn build_group(generators: Vec<Permutation>) -> Result<GeneratedGroup> {
    GeneratedGroup::from_generators(generators)
}

pub fn subgroup_generated(ambient: &GeneratedGroup, gens: &[Permutation]) -> Result<GeneratedGroup> {
    ambient.subgroup(gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn p(n: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(n, s).unwrap()
    }

    /// Closure under multiplication by generators.
    fn brute_elements(degree: usize, gens: &[Permutation]) -> HashSet<Permutation> {
        let mut seen = HashSet::new();
        let id = Permutation::identity(degree);
        seen.insert(id.clone());
        let mut stack = vec![id];
        while let Some(x) = stack.pop() {
            for g in gens {
                let y = x.then(g);
                if seen.insert(y.clone()) {
                    stack.push(y);
                }
            }
        }
        seen
    }

    #[test]
    fn a5_from_five_and_three_cycle() {
        let gens = vec![p(5, "(0 1 2 3 4)"), p(5, "(0 1 2)")];
        let g = build_group(gens.clone()).unwrap();
        assert_eq!(g.order(), 60);
        assert_eq!(brute_elements(5, &gens).len(), 60);
        assert_eq!(build_group(vec![Permutation::identity(4)]).unwrap().order(), 1);
    }

    #[test]
    fn m11_order_matches_enumeration() {
        let g = crate::data::m11();
        assert_eq!(g.order(), 7920);
        assert_eq!(brute_elements(11, g.generators()).len(), 7920);
    }

    #[test]
    fn enumeration_is_exact_and_indexed() {
        let g = GeneratedGroup::symmetric(5);
        let els = g.element_vec(DEFAULT_ELEMENT_CAP).unwrap();
        assert_eq!(els.len(), 120);
        let set: HashSet<_> = els.iter().cloned().collect();
        assert_eq!(set.len(), 120);
        for (i, e) in els.iter().enumerate() {
            assert_eq!(g.element_index(e), Some(i as u128));
        }
        assert!(matches!(
            GeneratedGroup::symmetric(12).elements(1000),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn subgroup_generated_checks_membership() {
        let a5 = GeneratedGroup::alternating(5);
        let c5 = subgroup_generated(&a5, &[p(5, "(0 1 2 3 4)")]).unwrap();
        assert_eq!(c5.order(), 5);
        let whole = subgroup_generated(&a5, &[p(5, "(0 1 2 3 4)"), p(5, "(0 1 2)")]).unwrap();
        assert_eq!(whole.order(), a5.order());
        assert!(subgroup_generated(&a5, &[p(5, "(0 1)")]).is_err());
        assert_eq!(subgroup_generated(&a5, &[]).unwrap().order(), 1);
    }

    #[test]
    fn known_order_and_generation() {
        let a12 = GeneratedGroup::alternating(12);
        assert_eq!(a12.order(), 239_500_800);
        let gens = a12.generators().to_vec();
        let again = GeneratedGroup::with_known_order(12, gens.clone(), 239_500_800).unwrap();
        assert_eq!(again.order(), 239_500_800);
        assert!(GeneratedGroup::with_known_order(12, gens, 1000).is_err());
        assert!(a12.is_generated_by(a12.generators()));
        assert!(!a12.is_generated_by(&[a12.generators()[0].clone()]));
    }

    #[test]
    fn alternating_and_symmetric_orders() {
        let mut fact = 1u128;
        for n in 1..=10 {
            fact *= n as u128;
            assert_eq!(GeneratedGroup::symmetric(n).order(), fact);
            if n >= 2 {
                assert_eq!(GeneratedGroup::alternating(n).order(), fact / 2);
            }
        }
    }
}
