use cosetkit::corpus::{corpus, named};
use cosetkit::homology::*;
use cosetkit::lattice::SubgroupLattice;
use cosetkit::permgroup::{sylow_subgroup, GeneratedGroup, Permutation};
use cosetkit::smiththeory::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn perm(n: usize, s: &str) -> Permutation {
    Permutation::parse_cycles(n, s).unwrap()
}

fn primes_dividing(mut n: u128) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while n > 1 {
        if n % p == 0 {
            out.push(p as u64);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    out
}

#[test]
fn translations_preserve_the_coset_order() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for g in corpus().into_iter().filter(|g| g.order() <= 16) {
        let lat = SubgroupLattice::new(&g.group).unwrap();
        let cp = lat.coset_poset();
        for _ in 0..6 {
            let (a, b) = (rng.gen_range(0..lat.order()), rng.gen_range(0..lat.order()));
            let action = PointAction {
                n_points: cp.len(),
                generators: vec![coset_map(&lat, &cp, a, b).unwrap()],
            };
            assert!(action.check_order_preserving(&cp.poset).is_ok(), "{}", g.name);
        }
    }
}

#[test]
fn fixed_cosets_match_subgroup_description() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut checked = 0;
    for g in corpus() {
        let lat = SubgroupLattice::new(&g.group).unwrap();
        let grp = lat.group();
        for n in lat.normal_subgroups() {
            let cp = lat.brown_subposet(n).unwrap();
            for _ in 0..3 {
                let c = grp.element(rng.gen_range(0..lat.order())).clone();
                let k = grp.element(rng.gen_range(0..lat.order())).clone();
                let action = two_sided_action(&lat, &cp, std::slice::from_ref(&c), std::slice::from_ref(&k)).unwrap();
                let fixed: Vec<usize> = (0..cp.len()).filter(|&i| action.fixed_points()[i]).collect();
                let ci = lat.subgroup_generated(&[c]).unwrap();
                let ki = lat.subgroup_generated(&[k]).unwrap();
                assert_eq!(fixed, fixed_cosets_by_subgroups(&lat, &cp, ci, ki), "{}", g.name);
                checked += 1;
            }
        }
    }
    assert!(checked > 300);
}

#[test]
fn euler_congruence_for_sylow_translations() {
    let mut actions = 0;
    for g in corpus().into_iter().filter(|g| g.order() <= 12) {
        let lat = SubgroupLattice::new(&g.group).unwrap();
        let cp = lat.coset_poset();
        let k = order_complex(&cp.poset, DEFAULT_FACE_CAP).unwrap();
        for p in primes_dividing(g.order() as u128) {
            let sylow = sylow_subgroup(&g.group, p, 1_000_000).unwrap();
            let gens = sylow.generators().to_vec();
            for (left, right) in [(&gens[..], &[][..]), (&[][..], &gens[..]), (&gens[..], &gens[..])] {
                let action = two_sided_action(&lat, &cp, left, right).unwrap();
                let e = euler_congruence_check(&k, &action, p).unwrap();
                assert!(e.holds, "{} p={p}: {} vs {}", g.name, e.euler, e.fixed_euler);
                actions += 1;
            }
        }
    }
    assert!(actions >= 10, "{actions}");
}

#[test]
fn euler_congruence_rejects_non_p_groups() {
    let lat = SubgroupLattice::new(&GeneratedGroup::cyclic(6)).unwrap();
    let cp = lat.coset_poset();
    let k = order_complex(&cp.poset, DEFAULT_FACE_CAP).unwrap();
    let a = two_sided_action(&lat, &cp, &[], &[perm(6, "(0 1 2 3 4 5)")]).unwrap();
    assert!(matches!(euler_congruence_check(&k, &a, 2), Err(cosetkit::Error::NotPGroup(2))));
}

fn a5_pair() -> (Vec<Permutation>, Vec<Permutation>) {
    let a5 = GeneratedGroup::alternating(5);
    let d = [perm(5, "(0 1 2 3 4)")];
    let q = [perm(5, "(0 1)(2 3)"), perm(5, "(0 2)(1 3)")];
    let cp = diagonal_cp(&a5, 1, &d, &q).unwrap();
    (cp.c, cp.p)
}

#[test]
fn pipeline_on_a5() {
    let lat = SubgroupLattice::new(&GeneratedGroup::alternating(5)).unwrap();
    let (c, p) = a5_pair();
    let r = fixed_point_pipeline(&lat, lat.whole(), &c, &p, DEFAULT_FACE_CAP as u128).unwrap();
    assert!(r.fpf.hypothesis.holds);
    assert_eq!(r.fpf.fixed_points, 0);
    assert!(r.fpf.fixed_sets_agree);
    assert_eq!(r.homology.profile.betti, vec![0, 0, 0, 1560]);
    assert!(r.holds);
}

#[test]
fn pipeline_on_s5_over_a5() {
    let lat = SubgroupLattice::new(&GeneratedGroup::symmetric(5)).unwrap();
    let n = lat.minimal_normal_subgroups()[0];
    let (c, p) = a5_pair();
    let r = fixed_point_pipeline(&lat, n, &c, &p, DEFAULT_FACE_CAP as u128).unwrap();
    assert_eq!(r.fpf.poset_size, 2286);
    assert_eq!(r.fpf.fixed_points, 0);
    assert_eq!(r.homology.profile.betti, vec![0, 0, 864, 2424]);
    assert!(r.holds);
}

#[test]
fn failing_hypothesis_is_reported() {
    // ⟨(0 1 2)⟩ and a conjugate of V4 can generate only A4
    let lat = SubgroupLattice::new(&GeneratedGroup::alternating(5)).unwrap();
    let c = [perm(5, "(0 1 2)")];
    let p = [perm(5, "(0 1)(2 3)"), perm(5, "(0 2)(1 3)")];
    let r = verify_corollary_fpf(&lat, lat.whole(), &c, &p).unwrap();
    assert!(!r.hypothesis.holds);
    assert!(r.hypothesis.witness.is_some());
    assert!(r.fixed_points > 0);
    assert!(r.fixed_sets_agree);
}

#[test]
fn diagonal_construction_in_a5_squared() {
    let a5 = GeneratedGroup::alternating(5);
    let d = [perm(5, "(0 1 2 3 4)")];
    let q = [perm(5, "(0 1)(2 3)"), perm(5, "(0 2)(1 3)")];
    let cp = diagonal_cp(&a5, 2, &d, &q).unwrap();
    assert_eq!(cp.n.order(), 3600);
    assert_eq!(cp.n.subgroup(&cp.c).unwrap().order(), 5);
    assert_eq!(cp.n.subgroup(&cp.p).unwrap().order(), 16);
    let scan = diagonal_generates(&cp, 10_000).unwrap();
    assert!(scan.holds);
    // N_N(P) = A4 × A4, so P has 3600 / 144 conjugates
    assert_eq!(scan.conjugates_checked, 25);
}

#[test]
fn abelian_minimal_normal_has_fixed_points() {
    // C6 with N = C2: C × P fixes a complement coset whenever ⟨C, P^g⟩ < N
    let lat = SubgroupLattice::new(&named("C6").unwrap()).unwrap();
    let n = lat.minimal_normal_subgroups().into_iter().find(|&n| lat.subgroup(n).order == 2).unwrap();
    let brown = lat.brown_subposet(n).unwrap();
    assert!(brown.poset.is_antichain());
    let r = verify_corollary_fpf(&lat, n, &[], &[]).unwrap();
    assert!(!r.hypothesis.holds);
    assert_eq!(r.fixed_points, brown.len());
    assert!(r.holds);
}

/// Barycentric subdivision of the full simplex on `m` vertices: the order
/// complex of its nonempty faces, with a vertex permutation acting on faces.
fn subdivided_simplex(m: usize, vertex_perms: &[Permutation]) -> (SimplicialComplex, PointAction) {
    let mut masks: Vec<u32> = (1..1u32 << m).collect();
    masks.sort_by_key(|x| (x.count_ones(), *x));
    let poset = Poset::from_fn(masks.len(), |a, b| masks[a] != masks[b] && masks[a] & masks[b] == masks[a]).unwrap();
    let pos = |mask: u32| masks.iter().position(|&x| x == mask).unwrap();
    let generators = vertex_perms
        .iter()
        .map(|g| {
            masks
                .iter()
                .map(|&mask| pos((0..m).filter(|&v| mask >> v & 1 == 1).fold(0, |acc, v| acc | 1 << g.apply(v))))
                .collect()
        })
        .collect();
    let action = PointAction {
        n_points: masks.len(),
        generators,
    };
    action.check_order_preserving(&poset).unwrap();
    (order_complex(&poset, DEFAULT_FACE_CAP).unwrap(), action)
}

#[test]
fn acyclic_complexes_have_acyclic_p_fixed_sets() {
    for (m, p, gens) in [
        (4, 2, vec![perm(4, "(0 1)(2 3)")]),
        (4, 2, vec![perm(4, "(0 1 2 3)")]),
        (6, 3, vec![perm(6, "(0 1 2)(3 4 5)")]),
        (5, 2, vec![perm(5, "(0 1)"), perm(5, "(2 3)")]),
    ] {
        let (k, action) = subdivided_simplex(m, &gens);
        assert!(is_acyclic(&k, Field::Prime(p)));
        let fixed = fixed_subcomplex(&k, &action).unwrap();
        assert!(fixed.total_faces() > 1);
        assert!(is_acyclic(&fixed, Field::Prime(p)), "m={m} p={p}");
    }
}

#[test]
fn cyclic_fixed_sets_of_rational_acyclic_complexes_have_zero_euler() {
    for (m, g) in [
        (6, perm(6, "(0 1 2 3 4 5)")),
        (5, perm(5, "(0 1)(2 3 4)")),
        (4, perm(4, "(0 1 2)")),
    ] {
        let (k, action) = subdivided_simplex(m, std::slice::from_ref(&g));
        assert!(is_acyclic(&k, Field::Rational));
        assert_eq!(euler_characteristic(&fixed_subcomplex(&k, &action).unwrap()), 0);
    }
    // cone over a hexagon, rotated by two steps; the apex is the only fixed vertex
    let hexagon = SimplicialComplex::from_facets(6, &(0..6).map(|i| vec![i, (i + 1) % 6]).collect::<Vec<_>>()).unwrap();
    let cone = hexagon.cone();
    let action = PointAction {
        n_points: 7,
        generators: vec![vec![2, 3, 4, 5, 0, 1, 6]],
    };
    assert!(is_acyclic(&cone, Field::Rational));
    let fixed = fixed_subcomplex(&cone, &action).unwrap();
    assert_eq!(fixed.total_faces(), 2);
    assert_eq!(euler_characteristic(&fixed), 0);
}

#[test]
fn setwise_fixed_faces_are_rejected() {
    let edge = SimplicialComplex::simplex(2);
    let flip = PointAction {
        n_points: 2,
        generators: vec![vec![1, 0]],
    };
    assert!(matches!(
        fixed_subcomplex(&edge, &flip),
        Err(cosetkit::Error::FixedSetNotSubcomplex)
    ));
}
