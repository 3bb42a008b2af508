use cosetkit::corpus::corpus;
use cosetkit::homology::*;
use cosetkit::lattice::SubgroupLattice;
use cosetkit::permgroup::GeneratedGroup;
use num_bigint::BigInt;
use num_traits::Zero;

/// Dense Bareiss elimination; exact rank over the rationals.
fn bareiss_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..rows {
            for k in c + 1..cols {
                m[r][k] = (&m[rank][c] * &m[r][k] - &m[r][c] * &m[rank][k]) / &prev;
            }
            m[r][c] = BigInt::zero();
        }
        prev = m[rank][c].clone();
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

fn dense_betti(k: &SimplicialComplex) -> Vec<u64> {
    let cc = ChainComplex::new(k);
    let ranks: Vec<usize> = cc
        .boundaries
        .iter()
        .enumerate()
        .map(|(i, cols)| {
            let mut m = vec![vec![BigInt::zero(); cols.len()]; cc.dims[i]];
            for (c, col) in cols.iter().enumerate() {
                for &(r, v) in col {
                    m[r as usize][c] = BigInt::from(v);
                }
            }
            bareiss_rank(m)
        })
        .collect();
    let mut b: Vec<u64> = (0..cc.dims.len())
        .map(|i| {
            let out = if i == 0 { 0 } else { ranks[i - 1] };
            (cc.dims[i] - out - ranks.get(i).copied().unwrap_or(0)) as u64
        })
        .collect();
    while b.len() > 1 && b.last() == Some(&0) {
        b.pop();
    }
    b
}

fn coset_complex(g: &GeneratedGroup) -> SimplicialComplex {
    let lat = SubgroupLattice::new(g).unwrap();
    order_complex(&lat.coset_poset().poset, DEFAULT_FACE_CAP).unwrap()
}

#[test]
fn sparse_rank_matches_dense_oracle() {
    for g in corpus().into_iter().filter(|g| g.order() <= 10) {
        let k = coset_complex(&g.group);
        assert_eq!(reduced_betti(&k, Field::Rational).betti, dense_betti(&k), "{}", g.name);
    }
}

#[test]
fn boundaries_square_to_zero() {
    for g in corpus().into_iter().filter(|g| g.order() <= 12) {
        assert!(ChainComplex::new(&coset_complex(&g.group)).boundary_squares_to_zero(), "{}", g.name);
    }
}

#[test]
fn euler_characteristic_is_alternating_betti_sum() {
    for g in corpus().into_iter().filter(|g| g.order() <= 16) {
        let k = coset_complex(&g.group);
        let chi = euler_characteristic(&k);
        for f in [Field::Rational, Field::Prime(2), Field::Prime(3)] {
            assert_eq!(reduced_betti(&k, f).euler_characteristic(), chi, "{} over {f}", g.name);
        }
    }
}

#[test]
fn exact_and_modular_ranks_agree_on_corpus() {
    for g in corpus() {
        let c = checked_rational_betti(&coset_complex(&g.group), 0xc0ffee);
        assert!(c.agree, "{}: {:?} vs {:?}", g.name, c.exact_ranks, c.modular_ranks);
    }
}

#[test]
fn rational_homology_forces_mod_two_homology() {
    for g in corpus() {
        let k = coset_complex(&g.group);
        let q = reduced_betti(&k, Field::Rational);
        let f2 = reduced_betti(&k, Field::Prime(2));
        if !q.is_zero() {
            assert!(!f2.is_zero(), "{}", g.name);
        }
    }
}

#[test]
fn kunneth_for_brown_decomposition() {
    // Δ𝒞(G) ≃ Δ𝒞(G,N) * Δ𝒞(G/N), so rational Betti numbers convolve
    for g in corpus() {
        let lat = SubgroupLattice::new(&g.group).unwrap();
        let whole = reduced_betti(&order_complex(&lat.coset_poset().poset, DEFAULT_FACE_CAP).unwrap(), Field::Rational);
        for n in lat.minimal_normal_subgroups() {
            let brown = reduced_betti(
                &order_complex(&lat.brown_subposet(n).unwrap().poset, DEFAULT_FACE_CAP).unwrap(),
                Field::Rational,
            );
            let quotient = reduced_betti(&coset_complex(&lat.quotient(n).unwrap()), Field::Rational);
            assert_eq!(kunneth_betti(&brown, &quotient).unwrap(), whole, "{}", g.name);
        }
    }
}

#[test]
fn join_betti_matches_kunneth() {
    let s3 = coset_complex(&GeneratedGroup::symmetric(3));
    let c3 = coset_complex(&GeneratedGroup::cyclic(3));
    let joined = s3.join(&c3, DEFAULT_FACE_CAP).unwrap();
    for f in [Field::Rational, Field::Prime(2)] {
        let want = kunneth_betti(&reduced_betti(&s3, f), &reduced_betti(&c3, f)).unwrap();
        assert_eq!(reduced_betti(&joined, f), want);
    }
}

#[test]
fn small_coset_complexes() {
    let c2 = coset_complex(&GeneratedGroup::cyclic(2));
    assert_eq!(reduced_betti(&c2, Field::Rational).betti, vec![0, 1]);
    let s3 = coset_complex(&GeneratedGroup::symmetric(3));
    assert_eq!(s3.n_vertices(), 17);
    assert_eq!(euler_characteristic(&s3), -8);
    let trivial = coset_complex(&GeneratedGroup::trivial(1));
    assert_eq!(reduced_betti(&trivial, Field::Rational).betti, vec![1]);
}

#[test]
fn face_cap_is_loud() {
    let lat = SubgroupLattice::new(&GeneratedGroup::symmetric(4)).unwrap();
    assert!(matches!(
        order_complex(&lat.coset_poset().poset, 1000),
        Err(cosetkit::Error::CapExceeded { .. })
    ));
}
