use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// `q^a · (q-1)^t · ∏ (q^b - 1)^{m_b}` as exponent data.
///
/// Multiplicities are signed so that `q^b + 1 = (q^{2b}-1)/(q^b-1)` fits; a
/// complete group or parabolic order always evaluates to a positive integer.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct OrderPolynomial {
    pub p_part_exponent: u32,
    /// Exponent `b ≥ 2` to multiplicity of `q^b - 1`.
    pub cyclic_factors: BTreeMap<u32, i32>,
    /// Multiplicity of `q - 1`.
    pub torus_rank: i32,
}

impl OrderPolynomial {
    pub fn one() -> Self {
        Self::default()
    }

    /// `q^b - 1`.
    pub fn cyc(b: u32) -> Self {
        let mut p = Self::one();
        p.add_factor(b, 1);
        p
    }

    /// `q^b + 1`.
    pub fn cyc_plus(b: u32) -> Self {
        let mut p = Self::one();
        p.add_factor(2 * b, 1);
        p.add_factor(b, -1);
        p
    }

    pub fn q_power(a: u32) -> Self {
        OrderPolynomial {
            p_part_exponent: a,
            ..Self::one()
        }
    }

    fn add_factor(&mut self, b: u32, m: i32) {
        assert!(b >= 1);
        if b == 1 {
            self.torus_rank += m;
            return;
        }
        let e = self.cyclic_factors.entry(b).or_insert(0);
        *e += m;
        if *e == 0 {
            self.cyclic_factors.remove(&b);
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.p_part_exponent += other.p_part_exponent;
        out.torus_rank += other.torus_rank;
        for (&b, &m) in &other.cyclic_factors {
            out.add_factor(b, m);
        }
        out
    }

    /// Divides the `q'`-part; the `p`-part of `other` must be zero.
    pub fn div(&self, other: &Self) -> Self {
        assert_eq!(other.p_part_exponent, 0, "dividing a p-part");
        let mut out = self.clone();
        out.torus_rank -= other.torus_rank;
        for (&b, &m) in &other.cyclic_factors {
            out.add_factor(b, -m);
        }
        out
    }

    /// Substitutes `q^m` for `q`.
    pub fn field_power(&self, m: u32) -> Self {
        let mut out = Self::q_power(self.p_part_exponent * m);
        out.add_factor(m, self.torus_rank);
        for (&b, &mult) in &self.cyclic_factors {
            out.add_factor(b * m, mult);
        }
        out
    }

    pub fn p_prime_part(&self) -> Self {
        OrderPolynomial {
            p_part_exponent: 0,
            ..self.clone()
        }
    }

    /// All `(b, multiplicity)` pairs including `b = 1`.
    pub fn factors(&self) -> impl Iterator<Item = (u32, i32)> + '_ {
        std::iter::once((1, self.torus_rank))
            .filter(|&(_, m)| m != 0)
            .chain(self.cyclic_factors.iter().map(|(&b, &m)| (b, m)))
    }

    pub fn max_exponent(&self) -> u32 {
        self.factors().map(|(b, _)| b).max().unwrap_or(1)
    }

    /// `Σ_{e | b} m_b`. If `r` is a Zsigmondy prime for `(q, e)` and every `b`
    /// with `e | b` is below `e·r`, then `v_r(order) = v_r(q^e - 1) · (this)`,
    /// since `v_r(q^b - 1) = v_r(q^e - 1) + v_r(b/e)` for `e | b` and zero
    /// otherwise.
    pub fn zsigmondy_multiplicity(&self, e: u32) -> i32 {
        self.factors().filter(|&(b, _)| b % e == 0).map(|(_, m)| m).sum()
    }

    pub fn evaluate(&self, q: u64) -> Result<BigUint> {
        let q = BigUint::from(q);
        let mut num = q.pow(self.p_part_exponent);
        let mut den = BigUint::one();
        for (b, m) in self.factors() {
            let f = q.pow(b) - 1u32;
            let k = m.unsigned_abs();
            if m > 0 {
                num *= f.pow(k);
            } else {
                den *= f.pow(k);
            }
        }
        if den.is_zero() {
            return Err(Error::InvalidParameters(format!("{self} vanishes at q = {q}")));
        }
        let (quot, rem) = num.div_rem(&den);
        if !rem.is_zero() {
            return Err(Error::InvalidParameters(format!("{self} is not integral at q = {q}")));
        }
        Ok(quot)
    }

    /// Exact `r`-adic valuation at `q` for a prime `r ∤ q`.
    pub fn valuation(&self, q: u64, r: &BigUint) -> i64 {
        let q = BigUint::from(q);
        self.factors()
            .map(|(b, m)| m as i64 * valuation(&(q.pow(b) - 1u32), r) as i64)
            .sum()
    }
}

pub(crate) fn valuation(n: &BigUint, r: &BigUint) -> u32 {
    let mut n = n.clone();
    let mut v = 0;
    if n.is_zero() {
        return u32::MAX;
    }
    loop {
        let (quot, rem) = n.div_rem(r);
        if !rem.is_zero() {
            return v;
        }
        n = quot;
        v += 1;
    }
}

impl fmt::Display for OrderPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut m: BTreeMap<u32, i32> = self.factors().collect();
        let mut plus: BTreeMap<u32, i32> = BTreeMap::new();
        let bs: Vec<u32> = m.keys().copied().collect();
        for b in bs {
            while m.get(&b).copied().unwrap_or(0) < 0 && m.get(&(2 * b)).copied().unwrap_or(0) > 0 {
                *m.get_mut(&b).unwrap() += 1;
                *m.get_mut(&(2 * b)).unwrap() -= 1;
                *plus.entry(b).or_insert(0) += 1;
            }
        }
        let mut parts: Vec<(u32, String)> = Vec::new();
        let term = |b: u32, sign: char| {
            if b == 1 {
                format!("(q{sign}1)")
            } else {
                format!("(q^{b}{sign}1)")
            }
        };
        let pw = |s: String, k: i32| if k == 1 { s } else { format!("{s}^{k}") };
        for (&b, &k) in &m {
            if k > 0 {
                parts.push((b, pw(term(b, '-'), k)));
            }
        }
        for (&b, &k) in &plus {
            parts.push((b, pw(term(b, '+'), k)));
        }
        parts.sort_by(|a, b| b.0.cmp(&a.0));
        let mut out = String::new();
        if self.p_part_exponent > 0 {
            out.push_str(&format!("q^{}", self.p_part_exponent));
        }
        for (_, s) in parts {
            if !out.is_empty() {
                out.push(' ');
            }
            out.push_str(&s);
        }
        if out.is_empty() {
            out.push('1');
        }
        for (&b, &k) in &m {
            if k < 0 {
                out.push_str(&format!(" / {}", pw(term(b, '-'), -k)));
            }
        }
        f.write_str(&out)
    }
}

/// Universal order of the named component, possibly of rank `r`.
pub fn universal_order(name: &str, r: u32) -> Result<OrderPolynomial> {
    let c = OrderPolynomial::cyc;
    let cp = OrderPolynomial::cyc_plus;
    let prod = |a: u32, fs: Vec<OrderPolynomial>| {
        fs.iter().fold(OrderPolynomial::q_power(a), |acc, x| acc.mul(x))
    };
    let tri = r * (r + 1) / 2;
    Ok(match name {
        "A" => prod(tri, (2..=r + 1).map(c).collect()),
        "2A" => prod(tri, (2..=r + 1).map(|i| if i % 2 == 0 { c(i) } else { cp(i) }).collect()),
        "B" | "C" => prod(r * r, (1..=r).map(|i| c(2 * i)).collect()),
        "D" | "2D" => {
            let mut fs: Vec<OrderPolynomial> = (1..r).map(|i| c(2 * i)).collect();
            if r > 0 {
                fs.push(if name == "D" { c(r) } else { cp(r) });
            }
            prod(r * r.saturating_sub(1), fs)
        }
        "GL" => prod(r * r.saturating_sub(1) / 2, (1..=r).map(c).collect()),
        "GU" => prod(
            r * r.saturating_sub(1) / 2,
            (1..=r).map(|i| if i % 2 == 0 { c(i) } else { cp(i) }).collect(),
        ),
        "G2" => prod(6, vec![c(6), c(2)]),
        "F4" => prod(24, vec![c(12), c(8), c(6), c(2)]),
        "E6" => prod(36, vec![c(12), c(9), c(8), c(6), c(5), c(2)]),
        "2E6" => prod(36, vec![c(12), cp(9), c(8), c(6), cp(5), c(2)]),
        "E7" => prod(63, vec![c(18), c(14), c(12), c(10), c(8), c(6), c(2)]),
        "E8" => prod(120, vec![c(30), c(24), c(20), c(18), c(14), c(12), c(8), c(2)]),
        // q^8 + q^4 + 1 = (q^12 - 1)/(q^4 - 1)
        "3D4" => prod(12, vec![c(12).div(&c(4)), c(6), c(2)]),
        "2B2" => prod(2, vec![cp(2), c(1)]),
        "2G2" => prod(3, vec![cp(3), c(1)]),
        "2F4" => prod(12, vec![cp(6), c(4), cp(3), c(1)]),
        "c" => c(r),
        "c+" => cp(r),
        _ => return Err(Error::UnknownName(name.to_string())),
    })
}
