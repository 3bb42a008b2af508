//! Posets, order complexes and exact reduced homology.
//!
//! Every chain complex is augmented: the empty face sits in dimension −1 and
//! `{∅}` has `β̃_{−1} = 1`.

mod complex;
mod poset;
pub mod rank;

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

pub use complex::{order_complex, FaceCounts, SimplicialComplex, DEFAULT_FACE_CAP};
pub use poset::Poset;

use crate::error::{Error, Result};
use rank::Column;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => *p,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F{p}"),
        }
    }
}

impl Serialize for Field {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// Accepts `Q`, `F2`, `F7`, `Fp:7`.
impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("q") {
            return Ok(Field::Rational);
        }
        let digits = t
            .strip_prefix("Fp:")
            .or_else(|| t.strip_prefix("fp:"))
            .or_else(|| t.strip_prefix('F'))
            .or_else(|| t.strip_prefix('f'))
            .ok_or_else(|| Error::InvalidParameters(format!("unknown field {s}")))?;
        let p: u64 = digits
            .parse()
            .map_err(|_| Error::InvalidParameters(format!("unknown field {s}")))?;
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p >= 1 << 62 {
            return Err(Error::InvalidParameters(format!("characteristic {p} too large")));
        }
        Ok(Field::Prime(p))
    }
}

/// Reduced Betti numbers; `betti[0]` is `β̃_{−1}`, `betti[d + 1]` is `β̃_d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiProfile {
    pub field: Field,
    pub betti: Vec<u64>,
}

impl BettiProfile {
    /// `β̃_d` for `d ≥ −1`.
    pub fn get(&self, d: isize) -> u64 {
        self.betti.get((d + 1) as usize).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.betti.iter().all(|&b| b == 0)
    }

    pub fn euler_characteristic(&self) -> i128 {
        self.betti
            .iter()
            .enumerate()
            .map(|(i, &b)| if i % 2 == 0 { -(b as i128) } else { b as i128 })
            .sum()
    }

    /// Dimensions `d` with `β̃_d ≠ 0`.
    pub fn nonzero_degrees(&self) -> Vec<isize> {
        (0..self.betti.len())
            .filter(|&i| self.betti[i] != 0)
            .map(|i| i as isize - 1)
            .collect()
    }

    fn trimmed(mut self) -> Self {
        while self.betti.len() > 1 && self.betti.last() == Some(&0) {
            self.betti.pop();
        }
        self
    }
}

impl fmt::Display for BettiProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .betti
            .iter()
            .enumerate()
            .filter(|(_, &b)| b != 0)
            .map(|(i, b)| format!("b{}={b}", i as isize - 1))
            .collect();
        if parts.is_empty() {
            write!(f, "acyclic over {}", self.field)
        } else {
            write!(f, "{} over {}", parts.join(" "), self.field)
        }
    }
}

/// The augmented chain complex of `K` with boundary entries `±1`.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    /// `dims[i]`: rank of the chain group in dimension `i − 1`.
    pub dims: Vec<usize>,
    /// `boundaries[i]`: columns of `∂` from dimension `i` to `i − 1`, so
    /// `boundaries[0]` is the augmentation.
    pub boundaries: Vec<Vec<Column<i64>>>,
}

impl ChainComplex {
    pub fn new(k: &SimplicialComplex) -> Self {
        let top = (k.dimension() + 1) as usize;
        let mut dims = vec![1usize];
        dims.extend((0..top).map(|d| k.face_count(d)));
        let boundaries = (0..top)
            .map(|d| {
                k.faces(d)
                    .map(|f| {
                        if d == 0 {
                            return vec![(0u32, 1i64)];
                        }
                        let mut col: Column<i64> = (0..=d)
                            .map(|skip| {
                                let sub: Vec<u32> = f
                                    .iter()
                                    .enumerate()
                                    .filter(|&(i, _)| i != skip)
                                    .map(|(_, &v)| v)
                                    .collect();
                                let row = k.face_index(&sub).expect("complex is closed") as u32;
                                (row, if skip % 2 == 0 { 1 } else { -1 })
                            })
                            .collect();
                        col.sort_unstable_by_key(|e| e.0);
                        col
                    })
                    .collect()
            })
            .collect();
        ChainComplex { dims, boundaries }
    }

    /// Checks `∂∂ = 0` exactly.
    pub fn boundary_squares_to_zero(&self) -> bool {
        (1..self.boundaries.len()).all(|i| {
            let lower = &self.boundaries[i - 1];
            self.boundaries[i].iter().all(|col| {
                let mut acc = vec![0i64; self.dims[i - 1]];
                for &(r, v) in col {
                    for &(r2, w) in &lower[r as usize] {
                        acc[r2 as usize] += v * w;
                    }
                }
                acc.iter().all(|&x| x == 0)
            })
        })
    }

    /// Ranks of every boundary map, top dimension first so that pivots of
    /// `∂_{d+1}` clear columns of `∂_d`.
    fn ranks(&self, rank_of: impl Fn(usize, &[Column<i64>], &[bool]) -> rank::Reduction) -> Vec<usize> {
        let n = self.boundaries.len();
        let mut ranks = vec![0; n];
        let mut skip: Vec<bool> = Vec::new();
        for i in (0..n).rev() {
            let rows = self.dims[i];
            let red = rank_of(rows, &self.boundaries[i], &skip);
            let mut next = vec![false; rows];
            for &r in &red.pivot_rows {
                next[r as usize] = true;
            }
            ranks[i] = red.rank;
            skip = next;
        }
        ranks
    }

    /// Ranks for each map with the given field.
    pub fn boundary_ranks(&self, field: Field) -> Vec<usize> {
        match field {
            Field::Rational => self.ranks(rank::rational_rank),
            Field::Prime(p) => self.ranks(|r, c, s| rank::modular_rank(p, r, c, s)),
        }
    }

    pub fn betti(&self, field: Field) -> BettiProfile {
        betti_from_ranks(field, &self.dims, &self.boundary_ranks(field))
    }
}

fn betti_from_ranks(field: Field, dims: &[usize], ranks: &[usize]) -> BettiProfile {
    // β̃_{i−1} = dim C_{i−1} − rank ∂ out of it − rank ∂ into it
    let betti = (0..dims.len())
        .map(|i| {
            let out = if i == 0 { 0 } else { ranks[i - 1] };
            let into = ranks.get(i).copied().unwrap_or(0);
            (dims[i] - out - into) as u64
        })
        .collect();
    BettiProfile { field, betti }.trimmed()
}

pub fn reduced_betti(k: &SimplicialComplex, field: Field) -> BettiProfile {
    ChainComplex::new(k).betti(field)
}

pub fn euler_characteristic(k: &SimplicialComplex) -> i128 {
    k.reduced_euler_characteristic()
}

pub fn is_acyclic(k: &SimplicialComplex, field: Field) -> bool {
    reduced_betti(k, field).is_zero()
}

/// Künneth for joins over a field: `β̃_k(K*L) = Σ_{i+j=k−1} β̃_i(K)·β̃_j(L)`,
/// which with the shifted indexing is a plain convolution.
pub fn kunneth_betti(a: &BettiProfile, b: &BettiProfile) -> Result<BettiProfile> {
    if a.field != b.field {
        return Err(Error::InvalidParameters(format!("fields differ: {} vs {}", a.field, b.field)));
    }
    let mut out = vec![0u64; a.betti.len() + b.betti.len()];
    for (i, &x) in a.betti.iter().enumerate() {
        for (j, &y) in b.betti.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    Ok(BettiProfile {
        field: a.field,
        betti: out,
    }
    .trimmed())
}

/// Two 30-bit primes drawn from a fixed seed.
pub fn check_primes(seed: u64) -> [u64; 2] {
    use rand::Rng;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draw = || loop {
        let c: u64 = rng.gen_range((1u64 << 29)..(1u64 << 30)) | 1;
        if is_prime(c) {
            return c;
        }
    };
    [draw(), draw()]
}

/// Rational Betti numbers with the modular fast path as a cross-check:
/// ranks modulo two random 30-bit primes must both equal the exact ranks.
#[derive(Clone, Debug, Serialize)]
pub struct CheckedBetti {
    pub profile: BettiProfile,
    pub exact_ranks: Vec<usize>,
    pub primes: [u64; 2],
    pub modular_ranks: [Vec<usize>; 2],
    pub agree: bool,
}

pub fn checked_rational_betti(k: &SimplicialComplex, seed: u64) -> CheckedBetti {
    let cc = ChainComplex::new(k);
    let primes = check_primes(seed);
    let (exact_ranks, (m0, m1)) = rayon::join(
        || cc.boundary_ranks(Field::Rational),
        || {
            rayon::join(
                || cc.boundary_ranks(Field::Prime(primes[0])),
                || cc.boundary_ranks(Field::Prime(primes[1])),
            )
        },
    );
    let agree = exact_ranks == m0 && exact_ranks == m1;
    CheckedBetti {
        profile: betti_from_ranks(Field::Rational, &cc.dims, &exact_ranks),
        exact_ranks,
        primes,
        modular_ranks: [m0, m1],
        agree,
    }
}

/// Betti profiles over several fields at once.
pub fn betti_over(k: &SimplicialComplex, fields: &[Field]) -> Vec<BettiProfile> {
    let cc = ChainComplex::new(k);
    fields.par_iter().map(|&f| cc.betti(f)).collect()
}

/// JSON payload for the `homology` commands.
#[derive(Clone, Debug, Serialize)]
pub struct HomologySummary {
    pub field: Field,
    pub betti: Vec<u64>,
    pub euler: i128,
    pub faces_per_dim: Vec<u128>,
}

impl HomologySummary {
    pub fn new(k: &SimplicialComplex, field: Field) -> Self {
        let b = reduced_betti(k, field);
        HomologySummary {
            field,
            betti: b.betti,
            euler: k.reduced_euler_characteristic(),
            faces_per_dim: k.face_counts().counts,
        }
    }
}
