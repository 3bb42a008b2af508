//! Group actions on coset posets and the fixed-point checks of Smith theory.
//!
//! `G × G` acts on the coset poset by `(Hx)^{(g,k)} = g⁻¹Hxk = H^g·g⁻¹xk`.
//! Actions are stored as permutations of poset indices, one per generator, so
//! the checks here never look at group internals once an action is built.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::homology::{checked_rational_betti, order_complex, CheckedBetti, Poset, SimplicialComplex};
use crate::lattice::{BitSet, CosetPoset, SubgroupLattice};
use crate::permgroup::{GeneratedGroup, Permutation};

/// A group acting on `0..n` through the listed generator permutations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointAction {
    pub n_points: usize,
    pub generators: Vec<Vec<usize>>,
}

impl PointAction {
    pub fn trivial(n: usize) -> Self {
        PointAction {
            n_points: n,
            generators: Vec::new(),
        }
    }

    /// Points fixed by every generator, hence by the whole group.
    pub fn fixed_points(&self) -> Vec<bool> {
        (0..self.n_points)
            .map(|a| self.generators.iter().all(|m| m[a] == a))
            .collect()
    }

    /// Order of the permutation group generated on the points.
    pub fn image_order(&self) -> Result<u128> {
        if self.n_points == 0 || self.generators.is_empty() {
            return Ok(1);
        }
        let gens = self
            .generators
            .iter()
            .map(|m| Permutation::from_images(m.iter().copied()))
            .collect::<Result<Vec<_>>>()?;
        Ok(GeneratedGroup::new(self.n_points, gens)?.order())
    }

    /// Every generator must be an automorphism of `p`.
    pub fn check_order_preserving(&self, p: &Poset) -> Result<()> {
        for m in &self.generators {
            if let Some((a, _)) = p.first_order_violation(m) {
                return Err(Error::NotOrderPreserving(a));
            }
            if !p.is_automorphism(m) {
                return Err(Error::NotOrderPreserving(0));
            }
        }
        Ok(())
    }
}

/// `(Hx)^{(g,k)}` as a map on poset indices, for element indices `g`, `k`.
/// Fails if some image leaves the poset.
pub fn coset_map(lat: &SubgroupLattice, cp: &CosetPoset, g: usize, k: usize) -> Result<Vec<usize>> {
    let grp = lat.group();
    let ginv = grp.inv(g);
    cp.cosets
        .iter()
        .map(|c| {
            let h = lat.conjugate(c.subgroup, g);
            let x = grp.mul(grp.mul(ginv, c.representative), k);
            cp.locate(lat, h, x)
                .ok_or_else(|| Error::InvalidParameters("action does not preserve the poset".into()))
        })
        .collect()
}

/// The action of `C × P` with generators `(c, 1)` and `(1, k)`, checked to be
/// order preserving.
pub fn two_sided_action(
    lat: &SubgroupLattice,
    cp: &CosetPoset,
    c_gens: &[Permutation],
    p_gens: &[Permutation],
) -> Result<PointAction> {
    let idx = |p: &Permutation| {
        lat.group()
            .index_of(p)
            .ok_or_else(|| Error::NotAMember(p.to_string()))
    };
    let one = lat.group().identity();
    let mut generators = Vec::new();
    for c in c_gens {
        generators.push(coset_map(lat, cp, idx(c)?, one)?);
    }
    for k in p_gens {
        generators.push(coset_map(lat, cp, one, idx(k)?)?);
    }
    let action = PointAction {
        n_points: cp.len(),
        generators,
    };
    action.check_order_preserving(&cp.poset)?;
    Ok(action)
}

/// The fixed subposet with the map back to original labels.
pub fn fixed_subposet(p: &Poset, action: &PointAction) -> Result<(Poset, Vec<usize>)> {
    action.check_order_preserving(p)?;
    Ok(p.induced(&action.fixed_points()))
}

/// Independent description of the fixed cosets of `C × P`: those `Hx` with
/// `⟨C, P^{x⁻¹}⟩ ≤ H`. Returns poset indices.
pub fn fixed_cosets_by_subgroups(lat: &SubgroupLattice, cp: &CosetPoset, c: usize, p: usize) -> Vec<usize> {
    let grp = lat.group();
    (0..cp.len())
        .filter(|&i| {
            let coset = &cp.cosets[i];
            let pc = lat.conjugate(p, grp.inv(coset.representative));
            lat.contains(lat.join(c, pc), coset.subgroup)
        })
        .collect()
}

/// Whether `⟨C, P^g⟩ = N` for every `g` in the ambient group, scanning the
/// distinct conjugates of `P` by brute force.
#[derive(Clone, Debug, Serialize)]
pub struct ConjugateScan {
    pub holds: bool,
    pub conjugates_checked: usize,
    #[serde(serialize_with = "crate::report::ser_opt_perm")]
    pub witness: Option<Permutation>,
}

pub fn scan_conjugates(lat: &SubgroupLattice, n: usize, c_gens: &[usize], p_gens: &[usize]) -> ConjugateScan {
    let grp = lat.group();
    let target = &lat.subgroup(n).elements;
    let p_elems = grp.closure(p_gens);
    let mut seen: HashSet<BitSet> = HashSet::new();
    for g in 0..grp.order() {
        let conj = BitSet::from_indices(grp.order(), p_elems.iter().map(|x| grp.conj(x, g)));
        if !seen.insert(conj) {
            continue;
        }
        let mut gens = c_gens.to_vec();
        gens.extend(p_gens.iter().map(|&x| grp.conj(x, g)));
        if &grp.closure(&gens) != target {
            return ConjugateScan {
                holds: false,
                conjugates_checked: seen.len(),
                witness: Some(grp.element(g).clone()),
            };
        }
    }
    ConjugateScan {
        holds: true,
        conjugates_checked: seen.len(),
        witness: None,
    }
}

/// Outcome of checking that `C × P` has no fixed point on `𝒞(G, N)`.
#[derive(Clone, Debug, Serialize)]
pub struct FpfCheck {
    pub hypothesis: ConjugateScan,
    pub poset_size: usize,
    pub fixed_points: usize,
    /// Fixed points of the action equal the `⟨C, P^{x⁻¹}⟩ ≤ H` description.
    pub fixed_sets_agree: bool,
    /// The hypothesis fails, or the fixed subposet is empty.
    pub holds: bool,
}

pub fn verify_corollary_fpf(
    lat: &SubgroupLattice,
    n: usize,
    c_gens: &[Permutation],
    p_gens: &[Permutation],
) -> Result<FpfCheck> {
    if !lat.is_normal(n) {
        return Err(Error::NotNormal);
    }
    let grp = lat.group();
    let to_idx = |gens: &[Permutation]| -> Result<Vec<usize>> {
        gens.iter()
            .map(|p| {
                let i = grp.index_of(p).ok_or_else(|| Error::NotAMember(p.to_string()))?;
                if !lat.subgroup(n).elements.contains(i) {
                    return Err(Error::NotAMember(format!("{p} is not in N")));
                }
                Ok(i)
            })
            .collect()
    };
    let (ci, pi) = (to_idx(c_gens)?, to_idx(p_gens)?);
    let hypothesis = scan_conjugates(lat, n, &ci, &pi);
    let brown = lat.brown_subposet(n)?;
    let action = two_sided_action(lat, &brown, c_gens, p_gens)?;
    let fixed: Vec<usize> = action
        .fixed_points()
        .iter()
        .enumerate()
        .filter(|(_, &f)| f)
        .map(|(i, _)| i)
        .collect();
    let c = lat.index_of_bits(&grp.closure(&ci)).expect("lattice is complete");
    let p = lat.index_of_bits(&grp.closure(&pi)).expect("lattice is complete");
    let by_subgroups = fixed_cosets_by_subgroups(lat, &brown, c, p);
    Ok(FpfCheck {
        holds: !hypothesis.holds || fixed.is_empty(),
        hypothesis,
        poset_size: brown.len(),
        fixed_points: fixed.len(),
        fixed_sets_agree: fixed == by_subgroups,
    })
}

/// Fixed faces of a simplicial action. Errors if a face is fixed as a set
/// but not pointwise, since then the fixed faces are not a subcomplex.
pub fn fixed_subcomplex(k: &SimplicialComplex, action: &PointAction) -> Result<SimplicialComplex> {
    if action.n_points != k.n_vertices() {
        return Err(Error::InvalidParameters("action and complex disagree on vertices".into()));
    }
    for d in 0..(k.dimension() + 1) as usize {
        for f in k.faces(d) {
            let mut setwise = true;
            for m in &action.generators {
                let mut img: Vec<u32> = f.iter().map(|&v| m[v as usize] as u32).collect();
                img.sort_unstable();
                if !k.contains_face(&img) {
                    return Err(Error::InvalidParameters("map is not simplicial".into()));
                }
                setwise &= img == f;
            }
            if setwise && !f.iter().all(|&v| action.generators.iter().all(|m| m[v as usize] == v as usize)) {
                return Err(Error::FixedSetNotSubcomplex);
            }
        }
    }
    Ok(k.induced(&action.fixed_points()))
}

#[derive(Clone, Debug, Serialize)]
pub struct EulerCongruence {
    pub p: u64,
    pub group_order: u128,
    pub euler: i128,
    pub fixed_euler: i128,
    pub holds: bool,
}

/// `χ̃(K) ≡ χ̃(K^Q) mod p` for a `p`-group `Q` acting simplicially.
pub fn euler_congruence_check(k: &SimplicialComplex, action: &PointAction, p: u64) -> Result<EulerCongruence> {
    let order = action.image_order()?;
    let mut m = order;
    while m % p as u128 == 0 {
        m /= p as u128;
    }
    if m != 1 {
        return Err(Error::NotPGroup(p));
    }
    let fixed = fixed_subcomplex(k, action)?;
    let euler = k.reduced_euler_characteristic();
    let fixed_euler = fixed.reduced_euler_characteristic();
    Ok(EulerCongruence {
        p,
        group_order: order,
        euler,
        fixed_euler,
        holds: (euler - fixed_euler).rem_euclid(p as i128) == 0,
    })
}

/// `N = L^t` on `t` disjoint copies of `L`'s points, with `P = Q^t` and `C`
/// the diagonal copy of `D`.
#[derive(Clone, Debug, Serialize)]
pub struct DiagonalCP {
    #[serde(skip)]
    pub n: GeneratedGroup,
    #[serde(serialize_with = "ser_perm_vec")]
    pub c: Vec<Permutation>,
    #[serde(serialize_with = "ser_perm_vec")]
    pub p: Vec<Permutation>,
}

fn ser_perm_vec<S: serde::Serializer>(v: &[Permutation], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

pub fn diagonal_cp(l: &GeneratedGroup, t: usize, d: &[Permutation], q: &[Permutation]) -> Result<DiagonalCP> {
    if t == 0 {
        return Err(Error::InvalidParameters("t must be at least 1".into()));
    }
    for x in d.iter().chain(q) {
        if !l.contains(x) {
            return Err(Error::NotAMember(x.to_string()));
        }
    }
    let deg = l.degree();
    let total = deg * t;
    let n_gens: Vec<Permutation> = (0..t)
        .flat_map(|i| l.generators().iter().map(move |x| x.shifted(i * deg, total)))
        .collect();
    let n = GeneratedGroup::with_known_order(total, n_gens, l.order().pow(t as u32))?;
    let p = (0..t)
        .flat_map(|i| q.iter().map(move |x| x.shifted(i * deg, total)))
        .collect();
    let c = d
        .iter()
        .map(|x| (0..t).fold(Permutation::identity(total), |acc, i| acc.then(&x.shifted(i * deg, total))))
        .collect();
    Ok(DiagonalCP { n, c, p })
}

/// `⟨C, P^g⟩ = N` for all `g ∈ N`, over the distinct conjugates of `P`,
/// using stabilizer chains rather than a Cayley table.
pub fn diagonal_generates(cp: &DiagonalCP, cap: u128) -> Result<ConjugateScan> {
    let p_group = cp.n.subgroup(&cp.p)?;
    let p_elems = p_group.element_vec(cap)?;
    let mut seen: HashSet<Vec<Permutation>> = HashSet::new();
    for g in cp.n.elements(cap)? {
        let mut key: Vec<Permutation> = p_elems.iter().map(|x| x.conjugate_by(&g)).collect();
        key.sort();
        if !seen.insert(key) {
            continue;
        }
        let mut gens = cp.c.clone();
        gens.extend(cp.p.iter().map(|x| x.conjugate_by(&g)));
        if !cp.n.is_generated_by(&gens) {
            return Ok(ConjugateScan {
                holds: false,
                conjugates_checked: seen.len(),
                witness: Some(g),
            });
        }
    }
    Ok(ConjugateScan {
        holds: true,
        conjugates_checked: seen.len(),
        witness: None,
    })
}

/// The whole argument on one instance: no fixed point of `C × P` on
/// `𝒞(G, N)`, and nonzero reduced rational homology of `Δ𝒞(G, N)`, computed
/// separately.
#[derive(Clone, Debug, Serialize)]
pub struct PipelineReport {
    pub fpf: FpfCheck,
    pub homology: CheckedBetti,
    pub nontrivial_homology: bool,
    pub holds: bool,
}

pub fn fixed_point_pipeline(
    lat: &SubgroupLattice,
    n: usize,
    c_gens: &[Permutation],
    p_gens: &[Permutation],
    face_cap: u128,
) -> Result<PipelineReport> {
    let fpf = verify_corollary_fpf(lat, n, c_gens, p_gens)?;
    let brown = lat.brown_subposet(n)?;
    let k = order_complex(&brown.poset, face_cap)?;
    let homology = checked_rational_betti(&k, 0x5eed);
    let nontrivial = !homology.profile.is_zero();
    Ok(PipelineReport {
        holds: fpf.hypothesis.holds && fpf.fixed_points == 0 && fpf.fixed_sets_agree && nontrivial && homology.agree,
        fpf,
        homology,
        nontrivial_homology: nontrivial,
    })
}
