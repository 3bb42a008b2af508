//! The small-group corpus: every group of order below 24, plus `S4`,
//! `A4 x C2`, the dihedral group `D12` of order 24 and `SL(2,3)`.
//!
//! Groups without a convenient small permutation representation are built
//! from a multiplication law and taken in their right regular representation.
//! Dihedral groups are named by the polygon, so `D4` has order 8.

use std::collections::HashMap;
use std::hash::Hash;

use crate::error::{Error, Result};
use crate::lattice::SubgroupLattice;
use crate::permgroup::{conjugacy_classes, GeneratedGroup, Permutation};

#[derive(Clone, Debug)]
pub struct CorpusGroup {
    pub name: String,
    pub group: GeneratedGroup,
}

impl CorpusGroup {
    fn new(name: impl Into<String>, group: GeneratedGroup) -> Self {
        CorpusGroup {
            name: name.into(),
            group,
        }
    }

    pub fn order(&self) -> u128 {
        self.group.order()
    }
}

/// Right regular representation of the group with the given elements and law.
/// The first element must be the identity.
pub fn from_law<T, F>(elements: Vec<T>, mul: F) -> Result<GeneratedGroup>
where
    T: Clone + Eq + Hash,
    F: Fn(&T, &T) -> T,
{
    let n = elements.len();
    let index: HashMap<T, usize> = elements.iter().enumerate().map(|(i, x)| (x.clone(), i)).collect();
    let table: Vec<Vec<usize>> = elements
        .iter()
        .map(|x| {
            elements
                .iter()
                .map(|y| {
                    index
                        .get(&mul(x, y))
                        .copied()
                        .ok_or_else(|| Error::InvalidParameters("law is not closed".into()))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    // greedy generating set
    let mut reached = vec![false; n];
    reached[0] = true;
    let mut gens_idx: Vec<usize> = Vec::new();
    for g in 0..n {
        if reached[g] {
            continue;
        }
        gens_idx.push(g);
        let mut stack: Vec<usize> = (0..n).filter(|&x| reached[x]).collect();
        while let Some(x) = stack.pop() {
            for &s in &gens_idx {
                let y = table[x][s];
                if !reached[y] {
                    reached[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    let gens = gens_idx
        .iter()
        .map(|&g| Permutation::from_images((0..n).map(|x| table[x][g])))
        .collect::<Result<Vec<_>>>()?;
    let g = GeneratedGroup::new(n.max(1), gens)?;
    if g.order() != n as u128 {
        return Err(Error::InvalidParameters("law is not a group".into()));
    }
    Ok(g)
}

/// Direct product on disjoint point sets.
pub fn direct_product(factors: &[GeneratedGroup]) -> GeneratedGroup {
    let total: usize = factors.iter().map(|f| f.degree()).sum();
    let mut gens = Vec::new();
    let mut offset = 0;
    for f in factors {
        gens.extend(f.generators().iter().map(|x| x.shifted(offset, total)));
        offset += f.degree();
    }
    let order = factors.iter().map(|f| f.order()).product();
    GeneratedGroup::with_known_order(total, gens, order).expect("direct product order")
}

/// Abelian group `Z_{m_1} x ... x Z_{m_k}` on disjoint cycles.
pub fn abelian(mods: &[usize]) -> GeneratedGroup {
    let factors: Vec<GeneratedGroup> = mods.iter().map(|&m| GeneratedGroup::cyclic(m)).collect();
    direct_product(&factors)
}

/// Dihedral group of the `n`-gon, order `2n`, on `n` points (`n ≥ 3`).
pub fn dihedral(n: usize) -> GeneratedGroup {
    let r = Permutation::cycle(n, &(0..n).collect::<Vec<_>>()).unwrap();
    let s = Permutation::from_images((0..n).map(|i| (n - i) % n)).unwrap();
    GeneratedGroup::with_known_order(n, vec![r, s], 2 * n as u128).unwrap()
}

/// `A ⋊ Z_n` for abelian `A = ⊕ Z_{mods[i]}`, where the generator of `Z_n`
/// acts by the integer matrix `phi` (column `j` is the image of basis vector `j`).
pub fn semidirect(mods: &[u32], phi: &[Vec<u32>], n: u32) -> Result<GeneratedGroup> {
    let k = mods.len();
    let apply = |v: &[u32], times: u32| -> Vec<u32> {
        let mut v = v.to_vec();
        for _ in 0..times {
            v = (0..k)
                .map(|i| (0..k).map(|j| phi[i][j] * v[j]).sum::<u32>() % mods[i])
                .collect();
        }
        v
    };
    let mut elements: Vec<(Vec<u32>, u32)> = Vec::new();
    let mut vs: Vec<Vec<u32>> = vec![Vec::new()];
    for &m in mods {
        vs = vs
            .into_iter()
            .flat_map(|v| (0..m).map(move |a| {
                let mut w = v.clone();
                w.push(a);
                w
            }))
            .collect();
    }
    for b in 0..n {
        for v in &vs {
            elements.push((v.clone(), b));
        }
    }
    from_law(elements, |(v1, b1), (v2, b2)| {
        let w = apply(v2, *b1);
        let sum: Vec<u32> = (0..k).map(|i| (v1[i] + w[i]) % mods[i]).collect();
        (sum, (b1 + b2) % n)
    })
}

/// `Z_m ⋊ Z_n` with the generator acting as multiplication by `r`.
pub fn metacyclic(m: u32, n: u32, r: u32) -> Result<GeneratedGroup> {
    semidirect(&[m], &[vec![r]], n)
}

/// Dicyclic group of order `4n`: `⟨a, x | a^{2n}, x² = a^n, a^x = a⁻¹⟩`.
/// `n = 2` is the quaternion group and `n = 4` the generalized quaternion
/// group of order 16.
pub fn dicyclic(n: u32) -> Result<GeneratedGroup> {
    let m = 2 * n;
    let elements: Vec<(u32, u32)> = (0..2).flat_map(|e| (0..m).map(move |k| (k, e))).collect();
    from_law(elements, |&(k, e), &(l, f)| match (e, f) {
        (0, _) => ((k + l) % m, f),
        (_, 0) => ((k + m - l) % m, 1),
        _ => ((k + m - l + n) % m, 0),
    })
}

/// `C4 ∘ D8`: the Pauli group `⟨X, Z, iI⟩`, elements `i^k X^a Z^b`.
pub fn pauli() -> Result<GeneratedGroup> {
    let mut elements = Vec::new();
    for k in 0..4u32 {
        for a in 0..2u32 {
            for b in 0..2u32 {
                elements.push((k, a, b));
            }
        }
    }
    // Z^b X^c = (-1)^{bc} X^c Z^b
    from_law(elements, |&(k1, a1, b1), &(k2, a2, b2)| {
        ((k1 + k2 + 2 * b1 * a2) % 4, (a1 + a2) % 2, (b1 + b2) % 2)
    })
}

/// `SL(2,3)` on the eight nonzero vectors of `F_3²`.
pub fn sl2_3() -> GeneratedGroup {
    let vecs: Vec<(u32, u32)> = (0..9).map(|i| (i / 3, i % 3)).filter(|&v| v != (0, 0)).collect();
    let act = |m: [[u32; 2]; 2]| {
        Permutation::from_images(vecs.iter().map(|&(x, y)| {
            let img = ((m[0][0] * x + m[0][1] * y) % 3, (m[1][0] * x + m[1][1] * y) % 3);
            vecs.iter().position(|&v| v == img).unwrap()
        }))
        .unwrap()
    };
    GeneratedGroup::with_known_order(8, vec![act([[1, 1], [0, 1]]), act([[1, 0], [1, 1]])], 24).unwrap()
}

fn law(g: Result<GeneratedGroup>) -> GeneratedGroup {
    g.expect("corpus law is a group")
}

/// The bundled corpus, ordered by group order.
pub fn corpus() -> Vec<CorpusGroup> {
    let c = |n: usize| GeneratedGroup::cyclic(n);
    let mut out = vec![CorpusGroup::new("C1", GeneratedGroup::trivial(1))];
    for n in 2..24 {
        out.push(CorpusGroup::new(format!("C{n}"), c(n)));
    }
    let more: Vec<(&str, GeneratedGroup)> = vec![
        ("C2xC2", abelian(&[2, 2])),
        ("S3", GeneratedGroup::symmetric(3)),
        ("C4xC2", abelian(&[4, 2])),
        ("C2xC2xC2", abelian(&[2, 2, 2])),
        ("D4", dihedral(4)),
        ("Q8", law(dicyclic(2))),
        ("C3xC3", abelian(&[3, 3])),
        ("D5", dihedral(5)),
        ("C6xC2", abelian(&[6, 2])),
        ("A4", GeneratedGroup::alternating(4)),
        ("D6", dihedral(6)),
        ("Dic3", law(dicyclic(3))),
        ("D7", dihedral(7)),
        ("C4xC4", abelian(&[4, 4])),
        ("(C4xC2):C2", law(semidirect(&[4, 2], &[vec![1, 0], vec![1, 1]], 2))),
        ("C4:C4", law(metacyclic(4, 4, 3))),
        ("C8xC2", abelian(&[8, 2])),
        ("M16", law(metacyclic(8, 2, 5))),
        ("D8", dihedral(8)),
        ("SD16", law(metacyclic(8, 2, 3))),
        ("Q16", law(dicyclic(4))),
        ("C4xC2xC2", abelian(&[4, 2, 2])),
        ("C2xD4", direct_product(&[c(2), dihedral(4)])),
        ("C2xQ8", direct_product(&[c(2), law(dicyclic(2))])),
        ("C4oD4", law(pauli())),
        ("C2^4", abelian(&[2, 2, 2, 2])),
        ("C6xC3", abelian(&[6, 3])),
        ("D9", dihedral(9)),
        ("S3xC3", direct_product(&[GeneratedGroup::symmetric(3), c(3)])),
        ("(C3xC3):C2", law(semidirect(&[3, 3], &[vec![2, 0], vec![0, 2]], 2))),
        ("C10xC2", abelian(&[10, 2])),
        ("D10", dihedral(10)),
        ("Dic5", law(dicyclic(5))),
        ("F20", law(metacyclic(5, 4, 2))),
        ("C7:C3", law(metacyclic(7, 3, 2))),
        ("D11", dihedral(11)),
        ("S4", GeneratedGroup::symmetric(4)),
        ("A4xC2", direct_product(&[GeneratedGroup::alternating(4), c(2)])),
        ("D12", dihedral(12)),
        ("SL(2,3)", sl2_3()),
    ];
    out.extend(more.into_iter().map(|(n, g)| CorpusGroup::new(n, g)));
    out.sort_by_key(|g| g.order());
    out
}

/// A corpus group by name, or one of `An`, `Sn`, `Cn`, `Dn` for any `n`.
pub fn named(name: &str) -> Option<GeneratedGroup> {
    if let Some(g) = corpus().into_iter().find(|g| g.name.eq_ignore_ascii_case(name)) {
        return Some(g.group);
    }
    let (head, tail) = name.split_at(1);
    let n: usize = tail.parse().ok()?;
    match head {
        "A" | "a" if n >= 1 => Some(GeneratedGroup::alternating(n)),
        "S" | "s" if n >= 1 => Some(GeneratedGroup::symmetric(n)),
        "C" | "c" if n >= 1 => Some(GeneratedGroup::cyclic(n)),
        "D" | "d" if n >= 3 => Some(dihedral(n)),
        _ => None,
    }
}

/// Isomorphism invariants: order, element-order profile, class count,
/// centre order, subgroup and normal-subgroup counts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fingerprint {
    pub order: u128,
    pub element_orders: Vec<(u64, usize)>,
    pub classes: usize,
    pub center: usize,
    pub subgroups: usize,
    pub normal_subgroups: usize,
}

pub fn fingerprint(g: &GeneratedGroup) -> Result<Fingerprint> {
    let classes = conjugacy_classes(g, 1 << 20)?;
    let mut orders: HashMap<u64, usize> = HashMap::new();
    for c in &classes {
        *orders.entry(c.element_order).or_insert(0) += c.size as usize;
    }
    let mut element_orders: Vec<(u64, usize)> = orders.into_iter().collect();
    element_orders.sort_unstable();
    let center = classes.iter().filter(|c| c.size == 1).count();
    let lat = SubgroupLattice::new(g)?;
    Ok(Fingerprint {
        order: g.order(),
        element_orders,
        classes: classes.len(),
        center,
        subgroups: lat.len(),
        normal_subgroups: lat.normal_subgroups().len(),
    })
}
