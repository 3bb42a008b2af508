use std::collections::{BTreeMap, HashSet};

use num_bigint::BigUint;
use serde_json::json;

use super::zsigmondy::is_prime_power;
use crate::error::{Error, Result};
use crate::report::{ClaimReport, Status};

/// `|P_k| = q^{n(n-1)/2} ∏_{j≤k}(q^j - 1) ∏_{j≤n-k}(q^j - 1)`, the stabilizer
/// of a `k`-space in `GL_n(q)`.
pub fn gl_parabolic_order(n: u32, q: u64, k: u32) -> Result<BigUint> {
    if k == 0 || k >= n {
        return Err(Error::InvalidParameters(format!("k = {k} not in 1..{n}")));
    }
    let q = BigUint::from(q);
    let mut out = q.pow(n * (n - 1) / 2);
    for j in (1..=k).chain(1..=n - k) {
        out *= q.pow(j) - 1u32;
    }
    Ok(out)
}

pub fn gl_order(n: u32, q: u64) -> BigUint {
    let q = BigUint::from(q);
    let mut out = q.pow(n * (n - 1) / 2);
    for j in 1..=n {
        out *= q.pow(j) - 1u32;
    }
    out
}

/// Number of `k`-subspaces of `F_q^n`.
pub fn gaussian_binomial(n: u32, k: u32, q: u64) -> BigUint {
    let q = BigUint::from(q);
    let mut num = BigUint::from(1u32);
    let mut den = BigUint::from(1u32);
    for i in 0..k {
        num *= q.pow(n - i) - 1u32;
        den *= q.pow(i + 1) - 1u32;
    }
    num / den
}

/// For a Mersenne prime `p ≥ 7`, the Borel subgroup `Z_p : Z_{(p-1)/2}` of
/// `L_2(p)` has odd order while `|L_2(p)|` is even, so an involution lies
/// in no parabolic subgroup.
pub fn mersenne_borel_check(p: u64) -> Result<ClaimReport> {
    let prime = is_prime_power(p).is_some_and(|(b, k)| b == p && k == 1);
    if !prime || !(p + 1).is_power_of_two() {
        return Err(Error::InvalidParameters(format!("{p} is not a Mersenne prime")));
    }
    if p < 7 {
        return Err(Error::InvalidParameters(format!("L_2({p}) is not simple")));
    }
    Ok(ClaimReport::run(format!("mersenne.L2({p})"), || {
        let order = p as u128 * (p as u128 * p as u128 - 1) / 2;
        let borel = p as u128 * (p as u128 - 1) / 2;
        (
            Status::from_bool(order % 2 == 0 && borel % 2 == 1),
            json!({"p": p, "group_order": order.to_string(), "borel_order": borel.to_string()}),
        )
    }))
}

/// Square matrix over `F_2` of dimension at most 16, rows as bit masks.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct F2Matrix {
    dim: usize,
    rows: Vec<u16>,
}

impl F2Matrix {
    pub fn identity(dim: usize) -> Self {
        assert!(dim <= 16);
        F2Matrix {
            dim,
            rows: (0..dim).map(|i| 1 << i).collect(),
        }
    }

    /// Entry `(i, j)` is bit `j` of `rows[i]`.
    pub fn from_rows(dim: usize, rows: Vec<u16>) -> Self {
        assert!(dim <= 16 && rows.len() == dim);
        F2Matrix { dim, rows }
    }

    /// Companion matrix of the monic polynomial whose low coefficients are the
    /// bits of `low` (degree `dim`): `e_j ↦ e_{j+1}`, `e_{d-1} ↦ Σ c_i e_i`.
    pub fn companion(dim: usize, low: u16) -> Self {
        let mut rows = vec![0u16; dim];
        for j in 0..dim - 1 {
            rows[j + 1] |= 1 << j;
        }
        for (i, row) in rows.iter_mut().enumerate() {
            if low >> i & 1 == 1 {
                *row |= 1 << (dim - 1);
            }
        }
        F2Matrix { dim, rows }
    }

    pub fn block_diagonal(blocks: &[F2Matrix]) -> Self {
        let dim = blocks.iter().map(|b| b.dim).sum();
        let mut rows = Vec::with_capacity(dim);
        let mut offset = 0;
        for b in blocks {
            rows.extend(b.rows.iter().map(|r| r << offset));
            offset += b.dim;
        }
        F2Matrix::from_rows(dim, rows)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `M v` for a column vector `v` given as a bit mask.
    pub fn apply(&self, v: u16) -> u16 {
        self.rows
            .iter()
            .enumerate()
            .fold(0, |acc, (i, r)| acc | (((r & v).count_ones() as u16 & 1) << i))
    }

    pub fn mul(&self, other: &F2Matrix) -> F2Matrix {
        // column j of the product is self applied to column j of other
        let mut rows = vec![0u16; self.dim];
        for j in 0..self.dim {
            let col = (0..self.dim).fold(0u16, |acc, i| acc | ((other.rows[i] >> j & 1) << i));
            let img = self.apply(col);
            for (i, row) in rows.iter_mut().enumerate() {
                *row |= (img >> i & 1) << j;
            }
        }
        F2Matrix::from_rows(self.dim, rows)
    }

    /// Multiplicative order, or `None` if singular.
    pub fn order(&self) -> Option<u64> {
        let id = Self::identity(self.dim);
        let mut x = self.clone();
        let mut k = 1;
        let bound = 1u64 << self.dim;
        while x != id {
            x = x.mul(self);
            k += 1;
            if k > bound * bound {
                return None;
            }
        }
        Some(k)
    }
}

/// Every subspace of `F_2^d` for `d ≤ 6`, each as the bit mask of its
/// member vectors.
pub fn all_subspaces(dim: usize) -> Vec<u64> {
    assert!(dim <= 6);
    let n = 1usize << dim;
    let mut seen: HashSet<u64> = HashSet::from([1]);
    let mut stack = vec![1u64];
    while let Some(s) = stack.pop() {
        for v in 0..n {
            if s >> v & 1 == 1 {
                continue;
            }
            let mut t = s;
            for w in 0..n {
                if s >> w & 1 == 1 {
                    t |= 1 << (w ^ v);
                }
            }
            if seen.insert(t) {
                stack.push(t);
            }
        }
    }
    let mut out: Vec<u64> = seen.into_iter().collect();
    out.sort_by_key(|s| (s.count_ones(), *s));
    out
}

pub fn is_invariant(g: &F2Matrix, subspace: u64) -> bool {
    (0..1u16 << g.dim()).all(|v| subspace >> v & 1 == 0 || subspace >> g.apply(v) & 1 == 1)
}

/// Certificate for `L_6(2) = GL_6(2)`: only the stabilizers of 1- and
/// 5-spaces among the maximal parabolics have order divisible by 31, and a
/// block-diagonal element of order 7 built from the companion matrix of
/// `x^3 + x + 1` fixes subspaces of dimensions 0, 3 and 6 only.
pub fn lemma6_certificate() -> ClaimReport {
    ClaimReport::run("lemma6.L6(2)", || {
        let thirty_one = BigUint::from(31u32);
        let divisible: Vec<u32> = (1..=5)
            .filter(|&k| gl_parabolic_order(6, 2, k).unwrap() % &thirty_one == BigUint::from(0u32))
            .collect();
        let c = F2Matrix::companion(3, 0b011);
        let g = F2Matrix::block_diagonal(&[c.clone(), c]);
        let order = g.order();
        let subspaces = all_subspaces(6);
        let mut invariant_dims: BTreeMap<u32, usize> = BTreeMap::new();
        for s in &subspaces {
            if is_invariant(&g, *s) {
                *invariant_dims.entry(s.count_ones().trailing_zeros()).or_insert(0) += 1;
            }
        }
        let group_order = gl_order(6, 2);
        let ok = divisible == [1, 5]
            && order == Some(7)
            && invariant_dims.keys().all(|d| [0, 3, 6].contains(d))
            && &group_order % (BigUint::from(31u32 * 7)) == BigUint::from(0u32);
        (
            Status::from_bool(ok),
            json!({
                "group_order": group_order.to_string(),
                "parabolics_divisible_by_31": divisible,
                "element_order": order,
                "subspaces": subspaces.len(),
                "invariant_subspaces_by_dimension": invariant_dims,
            }),
        )
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parabolic_orders() {
        assert_eq!(gl_parabolic_order(6, 2, 1).unwrap(), BigUint::from(319979520u64));
        assert_eq!(gl_order(6, 2) / 63u32, BigUint::from(319979520u64));
        for q in [2u64, 3, 4, 5, 7] {
            assert_eq!(gl_parabolic_order(2, q, 1).unwrap(), BigUint::from(q * (q - 1) * (q - 1)));
        }
        for n in 2..=7 {
            for k in 1..n {
                assert_eq!(gl_parabolic_order(n, 3, k).unwrap(), gl_parabolic_order(n, 3, n - k).unwrap());
                // orbit-stabilizer: index = number of k-spaces
                assert_eq!(gl_order(n, 3), gl_parabolic_order(n, 3, k).unwrap() * gaussian_binomial(n, k, 3));
            }
        }
        assert!(gl_parabolic_order(6, 2, 6).is_err());
    }

    #[test]
    fn companion_matrix() {
        let c = F2Matrix::companion(3, 0b011);
        assert_eq!(c.order(), Some(7));
        // x^3 + x^2 + 1 is also irreducible; x^3 + 1 is not and gives order 3
        assert_eq!(F2Matrix::companion(3, 0b101).order(), Some(7));
        assert_eq!(F2Matrix::companion(3, 0b001).order(), Some(3));
        assert_eq!(F2Matrix::from_rows(2, vec![0, 0]).order(), None);
    }

    #[test]
    fn subspace_count() {
        assert_eq!(all_subspaces(6).len(), 2825);
        assert_eq!(all_subspaces(3).len(), 16);
    }

    #[test]
    fn lemma6() {
        let r = lemma6_certificate();
        assert_eq!(r.status, Status::Pass, "{}", r.details);
        assert_eq!(r.details["invariant_subspaces_by_dimension"]["3"], 9);
        assert_eq!(r.details["invariant_subspaces_by_dimension"]["0"], 1);
    }

    #[test]
    fn mersenne() {
        let r = mersenne_borel_check(7).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert_eq!(r.details["borel_order"], "21");
        assert_eq!(mersenne_borel_check(31).unwrap().details["borel_order"], "465");
        assert!(mersenne_borel_check(3).is_err());
        assert!(mersenne_borel_check(15).is_err());
    }
}
