//! Invariable generation.
//!
//! `S` and `T` generate `G` invariably when `⟨S^g, T^h⟩ = G` for all
//! `g, h`. Since `⟨S^g, T^h⟩ = ⟨S, T^{hg⁻¹}⟩^g`, only `T` needs to move, and
//! only through its conjugation orbit: conjugates `T^g = T^{g'}` give the
//! same subgroup. Conjugating by elements of `⟨S⟩` fixes `⟨S⟩` and permutes
//! the orbit, so one representative per `⟨S⟩`-orbit suffices.

use std::collections::HashMap;

use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::permgroup::classes::orbit_with_transversal;
use crate::permgroup::{
    class_of, conjugacy_classes, sylow_subgroup, ConjugacyClass, GeneratedGroup, Permutation,
    DEFAULT_ELEMENT_CAP,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ScanMode {
    /// Scan the conjugation orbit of the tuple `T`.
    Elements,
    /// Scan the conjugation orbit of the subgroup `⟨T⟩` (smaller).
    Subgroups,
}

#[derive(Clone, Debug)]
pub struct ScanOptions {
    pub mode: ScanMode,
    pub cap: u128,
    /// Worker threads; 1 scans sequentially. The verdict and the reported
    /// witness do not depend on this value.
    pub jobs: usize,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            mode: ScanMode::Subgroups,
            cap: DEFAULT_ELEMENT_CAP,
            jobs: 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvGenVerdict {
    pub holds: bool,
    /// `g` with `⟨S, T^g⟩ ≠ G`; present exactly when `holds` is false.
    #[serde(serialize_with = "crate::report::ser_opt_perm")]
    pub witness: Option<Permutation>,
    /// Number of conjugates tested.
    pub scanned: u64,
}

#[derive(Clone, Debug)]
pub struct InvGenQuery {
    pub group: GeneratedGroup,
    pub left: Vec<Permutation>,
    pub right: Vec<Permutation>,
    pub mode: ScanMode,
}

impl InvGenQuery {
    pub fn run(&self, opts: &ScanOptions) -> Result<InvGenVerdict> {
        let opts = ScanOptions {
            mode: self.mode,
            ..opts.clone()
        };
        invariably_generates_with(&self.group, &self.left, &self.right, &opts)
    }
}

/// Least generator of the cyclic group `⟨y⟩` in lexicographic order.
pub fn canonical_cyclic_generator(y: &Permutation) -> Permutation {
    let o = y.order();
    let mut best = y.clone();
    let mut pw = y.clone();
    for k in 2..o {
        pw = pw.then(y);
        if k.gcd(&o) == 1 && pw < best {
            best = pw.clone();
        }
    }
    best
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum OrbitKey {
    Cyclic(Permutation),
    Set(Vec<Permutation>),
    Tuple(Vec<Permutation>),
}

impl OrbitKey {
    fn conj(&self, s: &Permutation) -> OrbitKey {
        match self {
            OrbitKey::Cyclic(y) => OrbitKey::Cyclic(canonical_cyclic_generator(&y.conjugate_by(s))),
            OrbitKey::Set(els) => {
                let mut v: Vec<Permutation> = els.iter().map(|e| e.conjugate_by(s)).collect();
                v.sort();
                OrbitKey::Set(v)
            }
            OrbitKey::Tuple(els) => OrbitKey::Tuple(els.iter().map(|e| e.conjugate_by(s)).collect()),
        }
    }
}

fn seed_key(g: &GeneratedGroup, t: &[Permutation], mode: ScanMode, cap: u128) -> Result<OrbitKey> {
    let nontrivial: Vec<Permutation> = t.iter().filter(|x| !x.is_identity()).cloned().collect();
    Ok(match mode {
        ScanMode::Elements => OrbitKey::Tuple(t.to_vec()),
        ScanMode::Subgroups if nontrivial.len() <= 1 => OrbitKey::Cyclic(
            nontrivial
                .first()
                .map(canonical_cyclic_generator)
                .unwrap_or_else(|| g.identity()),
        ),
        ScanMode::Subgroups => {
            let h = GeneratedGroup::new(g.degree(), nontrivial)?;
            let mut els = h.element_vec(cap)?;
            els.sort();
            OrbitKey::Set(els)
        }
    })
}

fn check_members(g: &GeneratedGroup, xs: &[Permutation]) -> Result<()> {
    for x in xs {
        if x.degree() != g.degree() {
            return Err(Error::DegreeMismatch(g.degree(), x.degree()));
        }
        if !g.contains(x) {
            return Err(Error::NotAMember(x.to_string()));
        }
    }
    Ok(())
}

fn generates_with_conjugate(g: &GeneratedGroup, s: &[Permutation], t: &[Permutation], c: &Permutation) -> bool {
    let mut gens = s.to_vec();
    gens.extend(t.iter().map(|x| x.conjugate_by(c)));
    g.is_generated_by(&gens)
}

pub fn invariably_generates(g: &GeneratedGroup, s: &[Permutation], t: &[Permutation]) -> Result<InvGenVerdict> {
    invariably_generates_with(g, s, t, &ScanOptions::default())
}

/// Conjugators `c` such that every `⟨T⟩^g` equals `⟨T⟩^{c a}` for some listed
/// `c` and some `a ∈ ⟨S⟩`. The identity comes first.
fn orbit_representatives(
    g: &GeneratedGroup,
    s: &[Permutation],
    t: &[Permutation],
    opts: &ScanOptions,
) -> Result<Vec<Permutation>> {
    let seed = seed_key(g, t, opts.mode, opts.cap)?;
    let orbit = orbit_with_transversal(g, seed, |k, x| k.conj(x), opts.cap)?;
    let n = orbit.points.len();
    let mut visited = vec![false; n];
    let mut reps = Vec::new();
    let s_nontrivial: Vec<&Permutation> = s.iter().filter(|x| !x.is_identity()).collect();
    for start in 0..n {
        if visited[start] {
            continue;
        }
        reps.push(orbit.conjugators[start].clone());
        visited[start] = true;
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for a in &s_nontrivial {
                let j = orbit.index[&orbit.points[i].conj(a)];
                if !visited[j] {
                    visited[j] = true;
                    stack.push(j);
                }
            }
        }
    }
    Ok(reps)
}

pub fn invariably_generates_with(
    g: &GeneratedGroup,
    s: &[Permutation],
    t: &[Permutation],
    opts: &ScanOptions,
) -> Result<InvGenVerdict> {
    check_members(g, s)?;
    check_members(g, t)?;
    let reps = orbit_representatives(g, s, t, opts)?;
    let test = |(i, c): (usize, &Permutation)| (!generates_with_conjugate(g, s, t, c)).then(|| (i, c.clone()));
    let failure = if opts.jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .map_err(|e| Error::InvalidParameters(e.to_string()))?;
        pool.install(|| reps.par_iter().enumerate().find_map_first(test))
    } else {
        reps.iter().enumerate().find_map(test)
    };
    Ok(match failure {
        Some((i, c)) => InvGenVerdict {
            holds: false,
            witness: Some(c),
            scanned: i as u64 + 1,
        },
        None => InvGenVerdict {
            holds: true,
            witness: None,
            scanned: reps.len() as u64,
        },
    })
}

/// Reference scan over every `g ∈ G`, with no orbit reduction.
pub fn invariably_generates_full(
    g: &GeneratedGroup,
    s: &[Permutation],
    t: &[Permutation],
    cap: u128,
) -> Result<InvGenVerdict> {
    check_members(g, s)?;
    check_members(g, t)?;
    let mut scanned = 0;
    for c in g.elements(cap)? {
        scanned += 1;
        if !generates_with_conjugate(g, s, t, &c) {
            return Ok(InvGenVerdict {
                holds: false,
                witness: Some(c),
                scanned,
            });
        }
    }
    Ok(InvGenVerdict {
        holds: true,
        witness: None,
        scanned,
    })
}

/// A Sylow `p`-subgroup and `⟨c⟩`. Any Sylow representative suffices
/// because all Sylow `p`-subgroups are conjugate.
pub fn sylow_cyclic_invgen(g: &GeneratedGroup, p: u64, c: &Permutation, opts: &ScanOptions) -> Result<InvGenVerdict> {
    check_members(g, std::slice::from_ref(c))?;
    let sylow = sylow_subgroup(g, p, opts.cap)?;
    invariably_generates_with(g, sylow.generators(), std::slice::from_ref(c), opts)
}

/// Conjugacy classes whose representatives generate conjugate cyclic
/// subgroups, merged into one entry.
#[derive(Clone, Debug, Serialize)]
pub struct CoalescedClass {
    /// ATLAS-style labels of the merged classes, e.g. `["11A", "11B"]`.
    pub labels: Vec<String>,
    pub element_order: u64,
    #[serde(serialize_with = "crate::report::ser_perm")]
    pub representative: Permutation,
    pub sizes: Vec<u128>,
}

impl CoalescedClass {
    pub fn label(&self) -> String {
        if self.labels.len() == 1 {
            return self.labels[0].clone();
        }
        let order = self.element_order.to_string();
        let letters: String = self.labels.iter().map(|l| l.trim_start_matches(&order)).collect();
        format!("{order}{letters}")
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassPairTable {
    pub classes: Vec<CoalescedClass>,
    /// Symmetric; entry `(i, j)` for the representative pair.
    pub verdicts: Vec<Vec<InvGenVerdict>>,
}

impl ClassPairTable {
    pub fn any_holds(&self) -> bool {
        self.verdicts.iter().flatten().any(|v| v.holds)
    }

    pub fn holding_pairs(&self) -> Vec<(String, String)> {
        let mut out = Vec::new();
        for i in 0..self.classes.len() {
            for j in i..self.classes.len() {
                if self.verdicts[i][j].holds {
                    out.push((self.classes[i].label(), self.classes[j].label()));
                }
            }
        }
        out
    }
}

fn letter(k: usize) -> String {
    let mut s = String::new();
    let mut k = k;
    loop {
        s.insert(0, (b'A' + (k % 26) as u8) as char);
        if k < 26 {
            break;
        }
        k = k / 26 - 1;
    }
    s
}

/// Classes labelled by element order and a letter, letters assigned by
/// increasing class size then representative.
pub fn labelled_classes(g: &GeneratedGroup, cap: u128) -> Result<Vec<(String, ConjugacyClass)>> {
    let mut classes = conjugacy_classes(g, cap)?;
    classes.sort_by(|a, b| (a.element_order, a.size, &a.representative).cmp(&(b.element_order, b.size, &b.representative)));
    let mut out = Vec::new();
    let mut k = 0;
    for (i, c) in classes.iter().enumerate() {
        if i > 0 && classes[i - 1].element_order == c.element_order {
            k += 1;
        } else {
            k = 0;
        }
        out.push((format!("{}{}", c.element_order, letter(k)), c.clone()));
    }
    Ok(out)
}

/// Pairwise invariable generation over nontrivial classes whose element
/// order satisfies `restrict`, merging power-related classes.
pub fn class_pair_table<F>(g: &GeneratedGroup, restrict: F, opts: &ScanOptions) -> Result<ClassPairTable>
where
    F: Fn(u64) -> bool,
{
    let labelled: Vec<(String, ConjugacyClass)> = labelled_classes(g, opts.cap)?
        .into_iter()
        .filter(|(_, c)| c.element_order > 1 && restrict(c.element_order))
        .collect();
    let mut class_index: HashMap<Permutation, usize> = HashMap::new();
    for (i, (_, c)) in labelled.iter().enumerate() {
        for x in class_of(g, &c.representative, opts.cap)? {
            class_index.insert(x, i);
        }
    }
    let mut merged_into: Vec<Option<usize>> = vec![None; labelled.len()];
    let mut classes: Vec<CoalescedClass> = Vec::new();
    for (i, (label, c)) in labelled.iter().enumerate() {
        if merged_into[i].is_some() {
            continue;
        }
        let slot = classes.len();
        let mut entry = CoalescedClass {
            labels: vec![label.clone()],
            element_order: c.element_order,
            representative: c.representative.clone(),
            sizes: vec![c.size],
        };
        merged_into[i] = Some(slot);
        let o = c.element_order;
        for k in 2..o {
            if k.gcd(&o) != 1 {
                continue;
            }
            let j = class_index[&c.representative.pow(k as i64)];
            if merged_into[j].is_none() {
                merged_into[j] = Some(slot);
                entry.labels.push(labelled[j].0.clone());
                entry.sizes.push(labelled[j].1.size);
            }
        }
        classes.push(entry);
    }
    let m = classes.len();
    let placeholder = InvGenVerdict {
        holds: false,
        witness: None,
        scanned: 0,
    };
    let mut verdicts = vec![vec![placeholder; m]; m];
    for i in 0..m {
        for j in i..m {
            let v = invariably_generates_with(
                g,
                std::slice::from_ref(&classes[i].representative),
                std::slice::from_ref(&classes[j].representative),
                opts,
            )?;
            verdicts[i][j] = v.clone();
            verdicts[j][i] = v;
        }
    }
    Ok(ClassPairTable { classes, verdicts })
}

#[derive(Clone, Debug, Serialize)]
pub struct AlternatingCheck {
    pub n: usize,
    /// Order of the prime-order element `y`.
    pub p: u64,
    #[serde(serialize_with = "crate::report::ser_perm")]
    pub x: Permutation,
    #[serde(serialize_with = "crate::report::ser_perm")]
    pub y: Permutation,
    pub verdict: InvGenVerdict,
}

fn is_prime(n: u64) -> bool {
    crate::permgroup::classes::is_prime(n)
}

/// The pair used for `A_n`: for `n > 7`, a prime `p` with `n/2 < p < n-2`
/// (the least such), `y` a `p`-cycle, and `x` an `n`-cycle (odd `n`) or two
/// disjoint `n/2`-cycles (even `n`). For `n = 5, 6, 7` the pairs are
/// (5-cycle, 3-cycle), ((4,2), 5-cycle) and (7-cycle, 5-cycle).
pub fn alternating_pair(n: usize) -> Result<(Permutation, Permutation, u64)> {
    if n < 5 {
        return Err(Error::InvalidParameters(format!("n = {n} < 5")));
    }
    let cycle = |pts: Vec<usize>| Permutation::cycle(n, &pts).unwrap();
    Ok(match n {
        5 => (cycle((0..5).collect()), cycle(vec![0, 1, 2]), 3),
        6 => (
            Permutation::from_cycles(6, &[vec![0, 1, 2, 3], vec![4, 5]]).unwrap(),
            cycle((0..5).collect()),
            5,
        ),
        7 => (cycle((0..7).collect()), cycle((0..5).collect()), 5),
        _ => {
            let p = (n / 2 + 1..n - 2)
                .find(|&p| 2 * p > n && is_prime(p as u64))
                .expect("Bertrand's postulate");
            let x = if n % 2 == 1 {
                cycle((0..n).collect())
            } else {
                Permutation::from_cycles(n, &[(0..n / 2).collect(), (n / 2..n).collect()]).unwrap()
            };
            (x, cycle((0..p).collect()), p as u64)
        }
    })
}

pub fn check_alternating(n: usize, opts: &ScanOptions) -> Result<AlternatingCheck> {
    let (x, y, p) = alternating_pair(n)?;
    let g = GeneratedGroup::alternating(n);
    let verdict = invariably_generates_with(&g, std::slice::from_ref(&x), std::slice::from_ref(&y), opts)?;
    Ok(AlternatingCheck { n, p, x, y, verdict })
}

/// First class representative of the given element order in the
/// deterministic class ordering.
pub fn first_element_of_order(g: &GeneratedGroup, order: u64, cap: u128) -> Result<Option<Permutation>> {
    Ok(conjugacy_classes(g, cap)?
        .into_iter()
        .find(|c| c.element_order == order)
        .map(|c| c.representative))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(n, s).unwrap()
    }

    #[test]
    fn a5_five_and_three_cycle() {
        let a5 = GeneratedGroup::alternating(5);
        let v = invariably_generates(&a5, &[p(5, "(0 1 2 3 4)")], &[p(5, "(0 1 2)")]).unwrap();
        assert!(v.holds);
        assert!(v.witness.is_none());
        let full = invariably_generates_full(&a5, &[p(5, "(0 1 2 3 4)")], &[p(5, "(0 1 2)")], 1000).unwrap();
        assert!(full.holds);
        assert_eq!(full.scanned, 60);
    }

    #[test]
    fn a6_five_cycle_and_four_two() {
        let a6 = GeneratedGroup::alternating(6);
        let v = invariably_generates(&a6, &[p(6, "(0 1 2 3 4)")], &[p(6, "(0 1 2 3)(4 5)")]).unwrap();
        assert!(v.holds);
    }

    #[test]
    fn s3_transpositions_fail_with_witness() {
        let s3 = GeneratedGroup::symmetric(3);
        let x = p(3, "(0 1)");
        let y = p(3, "(0 2)");
        let v = invariably_generates(&s3, &[x.clone()], &[y.clone()]).unwrap();
        assert!(!v.holds);
        let w = v.witness.unwrap();
        assert_eq!(y.conjugate_by(&w), x);
        // brute force over all six conjugators agrees
        let full = invariably_generates_full(&s3, &[x], &[y], 100).unwrap();
        assert!(!full.holds);
    }

    #[test]
    fn proper_pair_fails_with_identity_witness() {
        let a5 = GeneratedGroup::alternating(5);
        let v = invariably_generates(&a5, &[p(5, "(0 1 2)")], &[p(5, "(0 1)(3 4)")]).unwrap();
        assert!(!v.holds);
        assert!(v.witness.unwrap().is_identity());
    }

    #[test]
    fn membership_is_checked() {
        let a5 = GeneratedGroup::alternating(5);
        assert!(matches!(
            invariably_generates(&a5, &[p(5, "(0 1)")], &[p(5, "(0 1 2)")]),
            Err(Error::NotAMember(_))
        ));
    }

    #[test]
    fn canonical_generator_is_least_power() {
        let y = p(5, "(0 2 4 1 3)");
        let c = canonical_cyclic_generator(&y);
        let powers: Vec<Permutation> = (1..5).map(|k| y.pow(k)).collect();
        assert_eq!(&c, powers.iter().min().unwrap());
    }

    #[test]
    fn alternating_pairs() {
        let (x, y, pr) = alternating_pair(8).unwrap();
        assert_eq!(pr, 5);
        assert_eq!(x.cycle_type(), vec![4, 4]);
        assert_eq!(y.cycle_type()[0], 5);
        let (x, _, pr) = alternating_pair(9).unwrap();
        assert_eq!(pr, 5);
        assert_eq!(x.cycle_type(), vec![9]);
        for n in 8..=40 {
            let (_, _, pr) = alternating_pair(n).unwrap();
            assert!(2 * pr as usize > n && (pr as usize) < n - 2);
        }
        assert!(alternating_pair(4).is_err());
    }

    #[test]
    fn small_alternating_checks() {
        for n in 5..=9 {
            let c = check_alternating(n, &ScanOptions::default()).unwrap();
            assert!(c.verdict.holds, "A_{n}");
        }
    }

    #[test]
    fn elements_mode_agrees_with_subgroups_mode() {
        let a6 = GeneratedGroup::alternating(6);
        let s = [p(6, "(0 1 2 3 4)")];
        for t in ["(0 1 2 3)(4 5)", "(0 1 2)", "(0 1)(2 3)", "(0 1 2)(3 4 5)"] {
            let t = [p(6, t)];
            let a = invariably_generates_with(&a6, &s, &t, &ScanOptions::default()).unwrap();
            let b = invariably_generates_with(
                &a6,
                &s,
                &t,
                &ScanOptions {
                    mode: ScanMode::Elements,
                    ..Default::default()
                },
            )
            .unwrap();
            assert_eq!(a.holds, b.holds);
        }
    }

    #[test]
    fn parallel_scan_reports_same_verdict_and_witness() {
        let a6 = GeneratedGroup::alternating(6);
        let s = [p(6, "(0 1 2 3 4)")];
        let t = [p(6, "(0 1 2)")];
        let one = invariably_generates_with(&a6, &s, &t, &ScanOptions::default()).unwrap();
        let four = invariably_generates_with(&a6, &s, &t, &ScanOptions { jobs: 4, ..Default::default() }).unwrap();
        assert_eq!(one, four);
    }

    #[test]
    fn cyclic_six_sylow_two_and_order_three() {
        let c6 = GeneratedGroup::cyclic(6);
        let c = c6.generators()[0].pow(2);
        let v = sylow_cyclic_invgen(&c6, 2, &c, &ScanOptions::default()).unwrap();
        assert!(v.holds);
    }

    #[test]
    fn class_labels() {
        let a5 = GeneratedGroup::alternating(5);
        let labels: Vec<String> = labelled_classes(&a5, 1000).unwrap().into_iter().map(|(l, _)| l).collect();
        assert_eq!(labels, vec!["1A", "2A", "3A", "5A", "5B"]);
        assert_eq!(letter(26), "AA");
    }

    #[test]
    fn a5_prime_class_table_merges_fives() {
        let a5 = GeneratedGroup::alternating(5);
        let t = class_pair_table(&a5, |_| true, &ScanOptions::default()).unwrap();
        let labels: Vec<String> = t.classes.iter().map(|c| c.label()).collect();
        assert_eq!(labels, vec!["2A", "3A", "5AB"]);
        // (2,5): an involution and a 5-cycle can lie in a common D10
        assert_eq!(t.holding_pairs(), vec![("3A".to_string(), "5AB".to_string())]);
    }
}
