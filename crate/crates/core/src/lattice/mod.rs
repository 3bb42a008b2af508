//! Subgroup lattices of small groups, the coset poset and Brown's subposet,
//! and the Möbius function of the subgroup lattice.
//!
//! Elements of the ambient group are indexed in lexicographic order of their
//! image tuples, so the canonical representative of a coset is simply its
//! least element index. Products compose left to right as everywhere else in
//! the crate, and cosets are right cosets `Hx = {h·x}`.

mod bitset;

use std::collections::HashMap;

use serde::Serialize;

pub use bitset::BitSet;

use crate::error::{Error, Result};
use crate::homology::Poset;
use crate::permgroup::{GeneratedGroup, Permutation};
use crate::report::ser_perm;

/// Default cap on the group order for lattice computations.
pub const DEFAULT_LATTICE_CAP: u128 = 2000;

/// A group small enough for a full Cayley table.
#[derive(Clone, Debug)]
pub struct IndexedGroup {
    elements: Vec<Permutation>,
    index: HashMap<Permutation, u32>,
    mul: Vec<u32>,
    inv: Vec<u32>,
    generators: Vec<usize>,
}

impl IndexedGroup {
    pub fn new(g: &GeneratedGroup, cap: u128) -> Result<Self> {
        if g.order() > cap {
            return Err(Error::CapExceeded {
                what: "lattice group order",
                needed: g.order(),
                cap,
            });
        }
        let mut elements = g.element_vec(cap)?;
        elements.sort();
        let n = elements.len();
        let index: HashMap<Permutation, u32> = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i as u32))
            .collect();
        let mut mul = vec![0u32; n * n];
        for (a, x) in elements.iter().enumerate() {
            for (b, y) in elements.iter().enumerate() {
                mul[a * n + b] = index[&x.then(y)];
            }
        }
        let inv = elements.iter().map(|x| index[&x.inverse()]).collect();
        let generators = g.generators().iter().map(|x| index[x] as usize).collect();
        Ok(IndexedGroup {
            elements,
            index,
            mul,
            inv,
            generators,
        })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn degree(&self) -> usize {
        self.elements[0].degree()
    }

    /// The identity is the lexicographically least permutation.
    pub fn identity(&self) -> usize {
        0
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).map(|&i| i as usize)
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// `a` then `b`.
    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order() + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// `a^g = g⁻¹·a·g`.
    #[inline]
    pub fn conj(&self, a: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), a), g)
    }

    /// Elements of `⟨gens⟩`, by closing `{1}` under right multiplication.
    pub fn closure(&self, gens: &[usize]) -> BitSet {
        let mut bits = BitSet::new(self.order());
        bits.insert(0);
        let mut queue = vec![0usize];
        while let Some(x) = queue.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if bits.insert(y) {
                    queue.push(y);
                }
            }
        }
        bits
    }
}

#[derive(Clone, Debug)]
pub struct Subgroup {
    pub elements: BitSet,
    pub order: usize,
    /// A generating set, as element indices.
    pub generators: Vec<usize>,
}

/// Every subgroup of a small group, sorted by order, then by element set.
///
/// Index 0 is the trivial subgroup and the last index is the whole group.
#[derive(Clone, Debug)]
pub struct SubgroupLattice {
    group: IndexedGroup,
    subgroups: Vec<Subgroup>,
    lookup: HashMap<BitSet, usize>,
    normal: Vec<bool>,
    /// `coset_of[h][x]`: number of the right coset `H_h·x`, numbering cosets by
    /// their least element.
    coset_of: Vec<Vec<u32>>,
    /// `coset_reps[h][c]`: least element of coset `c` of `H_h`.
    coset_reps: Vec<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MobiusTable {
    /// `μ(H, G)` indexed like the lattice.
    pub values: Vec<i64>,
}

impl SubgroupLattice {
    /// `all_subgroups` with the default cap.
    pub fn new(g: &GeneratedGroup) -> Result<Self> {
        Self::with_cap(g, DEFAULT_LATTICE_CAP)
    }

    /// All cyclic subgroups, then closure under joins with cyclic subgroups.
    pub fn with_cap(g: &GeneratedGroup, cap: u128) -> Result<Self> {
        let group = IndexedGroup::new(g, cap)?;
        let n = group.order();

        let mut cyclic: Vec<Subgroup> = Vec::new();
        let mut lookup: HashMap<BitSet, usize> = HashMap::new();
        let mut seen_elt = BitSet::new(n);
        for x in 0..n {
            if seen_elt.contains(x) {
                continue;
            }
            let bits = group.closure(&[x]);
            if !lookup.contains_key(&bits) {
                // generators of the same cyclic group are all skipped once seen
                lookup.insert(bits.clone(), cyclic.len());
                cyclic.push(Subgroup {
                    order: bits.count(),
                    elements: bits,
                    generators: if x == 0 { Vec::new() } else { vec![x] },
                });
            }
            seen_elt.insert(x);
        }

        let mut subgroups = cyclic.clone();
        let mut i = 0;
        while i < subgroups.len() {
            for c in &cyclic {
                if c.elements.is_subset(&subgroups[i].elements) {
                    continue;
                }
                let mut gens = subgroups[i].generators.clone();
                gens.extend_from_slice(&c.generators);
                let bits = group.closure(&gens);
                if !lookup.contains_key(&bits) {
                    lookup.insert(bits.clone(), subgroups.len());
                    subgroups.push(Subgroup {
                        order: bits.count(),
                        elements: bits,
                        generators: gens,
                    });
                }
            }
            i += 1;
        }

        subgroups.sort_by(|a, b| a.order.cmp(&b.order).then_with(|| b.elements.cmp(&a.elements)));
        let lookup = subgroups
            .iter()
            .enumerate()
            .map(|(i, s)| (s.elements.clone(), i))
            .collect();
        let normal = subgroups
            .iter()
            .map(|s| {
                group.generators().iter().all(|&g| {
                    s.generators.iter().all(|&h| s.elements.contains(group.conj(h, g)))
                })
            })
            .collect();

        let mut coset_of = Vec::with_capacity(subgroups.len());
        let mut coset_reps = Vec::with_capacity(subgroups.len());
        for s in &subgroups {
            let members: Vec<usize> = s.elements.iter().collect();
            let mut label = vec![u32::MAX; n];
            let mut reps = Vec::new();
            for x in 0..n {
                if label[x] != u32::MAX {
                    continue;
                }
                let c = reps.len() as u32;
                reps.push(x as u32);
                for &h in &members {
                    label[group.mul(h, x)] = c;
                }
            }
            coset_of.push(label);
            coset_reps.push(reps);
        }

        Ok(SubgroupLattice {
            group,
            subgroups,
            lookup,
            normal,
            coset_of,
            coset_reps,
        })
    }

    pub fn group(&self) -> &IndexedGroup {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn subgroup(&self, i: usize) -> &Subgroup {
        &self.subgroups[i]
    }

    pub fn trivial(&self) -> usize {
        0
    }

    pub fn whole(&self) -> usize {
        self.subgroups.len() - 1
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    /// `H_a ≤ H_b`.
    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.subgroups[a].order <= self.subgroups[b].order
            && self.subgroups[b].order % self.subgroups[a].order == 0
            && self.subgroups[a].elements.is_subset(&self.subgroups[b].elements)
    }

    pub fn is_normal(&self, i: usize) -> bool {
        self.normal[i]
    }

    pub fn index_of_bits(&self, bits: &BitSet) -> Option<usize> {
        self.lookup.get(bits).copied()
    }

    /// The lattice index of `⟨gens⟩`; the generators must lie in the group.
    pub fn subgroup_generated(&self, gens: &[Permutation]) -> Result<usize> {
        let idx = gens
            .iter()
            .map(|p| {
                self.group
                    .index_of(p)
                    .ok_or_else(|| Error::NotAMember(p.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(self.lookup[&self.group.closure(&idx)])
    }

    /// Lattice index of the join `⟨H_a, H_b⟩`.
    pub fn join(&self, a: usize, b: usize) -> usize {
        let mut gens = self.subgroups[a].generators.clone();
        gens.extend_from_slice(&self.subgroups[b].generators);
        self.lookup[&self.group.closure(&gens)]
    }

    /// Lattice index of `H^g`, for `g` an element index.
    pub fn conjugate(&self, h: usize, g: usize) -> usize {
        let bits = BitSet::from_indices(
            self.order(),
            self.subgroups[h].elements.iter().map(|x| self.group.conj(x, g)),
        );
        self.lookup[&bits]
    }

    /// Number of the right coset `H_h·x` among the cosets of `H_h`.
    pub fn coset_number(&self, h: usize, x: usize) -> usize {
        self.coset_of[h][x] as usize
    }

    /// Least element of coset `c` of `H_h`.
    pub fn coset_representative(&self, h: usize, c: usize) -> usize {
        self.coset_reps[h][c] as usize
    }

    pub fn index(&self, h: usize) -> usize {
        self.order() / self.subgroups[h].order
    }

    /// Order of `H_a ∩ H_b`.
    pub fn intersection_order(&self, a: usize, b: usize) -> usize {
        self.subgroups[a].elements.intersection_count(&self.subgroups[b].elements)
    }

    pub fn normal_subgroups(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.normal[i]).collect()
    }

    /// Nontrivial normal subgroups containing no other nontrivial normal subgroup.
    pub fn minimal_normal_subgroups(&self) -> Vec<usize> {
        let normal: Vec<usize> = self.normal_subgroups().into_iter().filter(|&i| i != 0).collect();
        normal
            .iter()
            .copied()
            .filter(|&m| !normal.iter().any(|&k| k != m && self.contains(k, m)))
            .collect()
    }

    pub fn is_abelian(&self, h: usize) -> bool {
        let gens = &self.subgroups[h].generators;
        gens.iter()
            .all(|&a| gens.iter().all(|&b| self.group.mul(a, b) == self.group.mul(b, a)))
    }

    /// `μ(H, G)` from the defining recursion, top down.
    pub fn mobius(&self) -> MobiusTable {
        let s = self.len();
        let mut values = vec![0i64; s];
        values[s - 1] = 1;
        for h in (0..s - 1).rev() {
            values[h] = -((h + 1)..s)
                .filter(|&k| self.contains(h, k))
                .map(|k| values[k])
                .sum::<i64>();
        }
        MobiusTable { values }
    }

    /// `P(G, -1) = Σ_H μ(H, G)·[G : H]`. Brown's formula gives
    /// `χ̃(Δ𝒞(G)) = -P(G, -1)`.
    pub fn zeta_at_minus_one(&self) -> i128 {
        let mu = self.mobius();
        (0..self.len())
            .map(|h| mu.values[h] as i128 * self.index(h) as i128)
            .sum()
    }

    /// The coset poset of all right cosets of proper subgroups.
    pub fn coset_poset(&self) -> CosetPoset {
        let proper: Vec<usize> = (0..self.whole()).collect();
        CosetPoset::build(self, &proper, "coset poset")
    }

    /// Brown's subposet `𝒞(G, N)`: cosets `Hx` with `H` proper and `HN = G`.
    pub fn brown_subposet(&self, n: usize) -> Result<CosetPoset> {
        if !self.normal[n] {
            return Err(Error::NotNormal);
        }
        let g = self.order();
        let nord = self.subgroups[n].order;
        let hs: Vec<usize> = (0..self.whole())
            .filter(|&h| self.subgroups[h].order * nord == g * self.intersection_order(h, n))
            .collect();
        Ok(CosetPoset::build(self, &hs, "Brown subposet"))
    }

    /// `G/N` acting on the right cosets of `N`.
    pub fn quotient(&self, n: usize) -> Result<GeneratedGroup> {
        if !self.normal[n] {
            return Err(Error::NotNormal);
        }
        let k = self.index(n);
        let gens = self
            .group
            .generators()
            .iter()
            .map(|&g| {
                Permutation::from_images((0..k).map(|c| {
                    let x = self.coset_representative(n, c);
                    self.coset_number(n, self.group.mul(x, g))
                }))
            })
            .collect::<Result<Vec<_>>>()?;
        GeneratedGroup::with_known_order(k, gens, k as u128)
    }

    /// Checks every structural claim: closure, cyclic subgroups present,
    /// closed under pairwise join. Quadratic in the number of subgroups.
    pub fn verify(&self) -> bool {
        let g = &self.group;
        let closed = self.subgroups.iter().all(|s| {
            s.elements.iter().all(|a| {
                s.elements.contains(g.inv(a)) && s.elements.iter().all(|b| s.elements.contains(g.mul(a, b)))
            })
        });
        let cyclic = (0..g.order()).all(|x| self.lookup.contains_key(&g.closure(&[x])));
        let joins = (0..self.len()).all(|a| (a..self.len()).all(|b| {
            let mut gens = self.subgroups[a].generators.clone();
            gens.extend_from_slice(&self.subgroups[b].generators);
            self.lookup.contains_key(&g.closure(&gens))
        }));
        let ends = self.subgroups[0].order == 1 && self.subgroups[self.whole()].order == g.order();
        closed && cyclic && joins && ends
    }
}

/// One poset element `Hx`.
#[derive(Clone, Debug, Serialize)]
pub struct Coset {
    pub subgroup: usize,
    pub subgroup_order: usize,
    /// Least element index of the coset.
    pub representative: usize,
    /// The same element as a permutation.
    #[serde(serialize_with = "ser_perm")]
    pub representative_perm: Permutation,
}

/// Cosets of a set of proper subgroups, ordered by inclusion. Elements are
/// sorted by subgroup order, so the labelling is a linear extension.
#[derive(Clone, Debug)]
pub struct CosetPoset {
    pub cosets: Vec<Coset>,
    pub poset: Poset,
    /// `position[h][c]`: poset index of coset `c` of `H_h`, if present.
    position: HashMap<usize, Vec<u32>>,
}

impl CosetPoset {
    fn build(lat: &SubgroupLattice, hs: &[usize], _what: &str) -> Self {
        let mut hs = hs.to_vec();
        hs.sort_by_key(|&h| (lat.subgroups[h].order, h));
        let mut cosets = Vec::new();
        let mut position = HashMap::new();
        for &h in &hs {
            let reps = &lat.coset_reps[h];
            let mut pos = Vec::with_capacity(reps.len());
            for &r in reps {
                pos.push(cosets.len() as u32);
                cosets.push(Coset {
                    subgroup: h,
                    subgroup_order: lat.subgroups[h].order,
                    representative: r as usize,
                    representative_perm: lat.group.element(r as usize).clone(),
                });
            }
            position.insert(h, pos);
        }
        // Hx < Ky iff H < K and x ∈ Ky
        let supers: HashMap<usize, Vec<usize>> = hs
            .iter()
            .map(|&h| {
                (
                    h,
                    hs.iter()
                        .copied()
                        .filter(|&k| k != h && lat.contains(h, k))
                        .collect(),
                )
            })
            .collect();
        let above = cosets
            .iter()
            .map(|c| {
                let mut up: Vec<u32> = supers[&c.subgroup]
                    .iter()
                    .map(|&k| position[&k][lat.coset_number(k, c.representative)])
                    .collect();
                up.sort_unstable();
                up
            })
            .collect();
        let poset = Poset::from_upper_sets(above).expect("coset inclusion is a naturally labelled order");
        CosetPoset {
            cosets,
            poset,
            position,
        }
    }

    pub fn len(&self) -> usize {
        self.cosets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cosets.is_empty()
    }

    /// Poset index of the coset `H_h·x`, if `H_h` contributes to this poset.
    pub fn locate(&self, lat: &SubgroupLattice, h: usize, x: usize) -> Option<usize> {
        self.position
            .get(&h)
            .map(|pos| pos[lat.coset_number(h, x)] as usize)
    }

    /// Subgroups contributing cosets, in poset order.
    pub fn subgroups(&self) -> Vec<usize> {
        let mut out: Vec<usize> = Vec::new();
        for c in &self.cosets {
            if out.last() != Some(&c.subgroup) {
                out.push(c.subgroup);
            }
        }
        out
    }

    /// The elements of coset `i` as a bitset.
    pub fn coset_elements(&self, lat: &SubgroupLattice, i: usize) -> BitSet {
        let c = &self.cosets[i];
        BitSet::from_indices(
            lat.order(),
            lat.subgroups[c.subgroup]
                .elements
                .iter()
                .map(|h| lat.group.mul(h, c.representative)),
        )
    }

    /// Graphviz rendering of the Hasse diagram.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph coset_poset {\n  rankdir=BT;\n");
        for (i, c) in self.cosets.iter().enumerate() {
            out.push_str(&format!(
                "  n{i} [label=\"H{}·{}\"];\n",
                c.subgroup, c.representative_perm
            ));
        }
        for a in 0..self.len() {
            let up = self.poset.above(a);
            for &b in up {
                // cover relation: nothing strictly between
                if !up.iter().any(|&m| m != b && self.poset.less(m as usize, b as usize)) {
                    out.push_str(&format!("  n{a} -> n{b};\n"));
                }
            }
        }
        out.push_str("}\n");
        out
    }
}
