use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

/// A permutation of `{0, …, degree-1}` stored as its image array.
///
/// Products compose left to right: `p.then(&q)` applies `p` first. Ordering
/// is lexicographic on the image tuple, which is what canonical
/// representatives throughout the crate rely on.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u16>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u16).collect(),
        }
    }

    pub fn from_images<I: IntoIterator<Item = usize>>(images: I) -> Result<Self> {
        let images: Vec<usize> = images.into_iter().collect();
        let n = images.len();
        if n > u16::MAX as usize {
            return Err(Error::NotAPermutation(format!("degree {n} too large")));
        }
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::NotAPermutation(format!("{images:?}")));
            }
            seen[i] = true;
        }
        Ok(Permutation {
            images: images.into_iter().map(|i| i as u16).collect(),
        })
    }

    /// Builds a permutation from disjoint cycles; `(a b c)` sends a to b, b to c, c to a.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                if a >= degree || touched[a] {
                    return Err(Error::NotAPermutation(format!("bad cycle {cycle:?}")));
                }
                touched[a] = true;
                images[a] = cycle[(k + 1) % cycle.len()];
            }
        }
        Self::from_images(images)
    }

    /// Parses disjoint-cycle notation such as `(0 1 2)(3 4)`; `()` is the identity.
    pub fn parse_cycles(degree: usize, text: &str) -> Result<Self> {
        let text = text.trim();
        let mut cycles = Vec::new();
        let mut rest = text;
        while !rest.is_empty() {
            let open = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::NotAPermutation(text.to_string()))?;
            let close = open
                .find(')')
                .ok_or_else(|| Error::NotAPermutation(text.to_string()))?;
            let body = &open[..close];
            let cycle = body
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<usize>()
                        .map_err(|_| Error::NotAPermutation(text.to_string()))
                })
                .collect::<Result<Vec<_>>>()?;
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            rest = open[close + 1..].trim_start();
        }
        Self::from_cycles(degree, &cycles)
    }

    /// A single cycle on the given points.
    pub fn cycle(degree: usize, points: &[usize]) -> Result<Self> {
        Self::from_cycles(degree, &[points.to_vec()])
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().map(|&i| i as usize)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j as usize)
    }

    /// Apply `self`, then `other`. Panics on a degree mismatch; use [`compose`]
    /// for the checked form.
    #[inline]
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation {
            images: self
                .images
                .iter()
                .map(|&i| other.images[i as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u16; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u16;
        }
        Permutation { images: inv }
    }

    /// `g⁻¹·self·g`, i.e. `self^g`. Relabels every point `i` as `g(i)`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        assert_eq!(self.degree(), g.degree(), "degree mismatch");
        let mut images = vec![0u16; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[g.images[i] as usize] = g.images[j as usize];
        }
        Permutation { images }
    }

    pub fn pow(&self, exp: i64) -> Permutation {
        let base = if exp < 0 { self.inverse() } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = Permutation::identity(self.degree());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.then(&sq);
            }
            sq = sq.then(&sq);
            e >>= 1;
        }
        acc
    }

    /// Disjoint cycles of length at least two, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cyc.push(x);
                x = self.apply(x);
            }
            if cyc.len() > 1 {
                out.push(cyc);
            }
        }
        out
    }

    /// Cycle lengths in non-increasing order, fixed points included; sums to the degree.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut lens = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                len += 1;
                x = self.apply(x);
            }
            lens.push(len);
        }
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    pub fn order(&self) -> u64 {
        self.cycle_type()
            .into_iter()
            .fold(1u64, |acc, l| acc.lcm(&(l as u64)))
    }

    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }

    pub fn fixes(&self, point: usize) -> bool {
        self.apply(point) == point
    }

    /// Least moved point, if any.
    pub fn first_moved(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|(i, &j)| *i != j as usize)
            .map(|(i, _)| i)
    }

    /// Places `self` on points `offset..offset+degree` of a permutation of degree `total`.
    pub fn shifted(&self, offset: usize, total: usize) -> Permutation {
        assert!(offset + self.degree() <= total);
        let mut images: Vec<u16> = (0..total as u16).collect();
        for (i, &j) in self.images.iter().enumerate() {
            images[offset + i] = (offset + j as usize) as u16;
        }
        Permutation { images }
    }
}

pub fn compose(p: &Permutation, q: &Permutation) -> Result<Permutation> {
    if p.degree() != q.degree() {
        return Err(Error::DegreeMismatch(p.degree(), q.degree()));
    }
    Ok(p.then(q))
}

pub fn conjugate(x: &Permutation, g: &Permutation) -> Result<Permutation> {
    if x.degree() != g.degree() {
        return Err(Error::DegreeMismatch(x.degree(), g.degree()));
    }
    Ok(x.conjugate_by(g))
}

pub fn cycle_type(p: &Permutation) -> Vec<usize> {
    p.cycle_type()
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (k, x) in c.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(n, s).unwrap()
    }

    #[test]
    fn compose_applies_left_first() {
        // (0 1 2) then (0 1): 0->1->0, 1->2->2, 2->0->1
        let r = compose(&cyc(3, "(0 1 2)"), &cyc(3, "(0 1)")).unwrap();
        assert_eq!(r, cyc(3, "(1 2)"));
        let p = cyc(5, "(0 3)(1 4 2)");
        assert_eq!(compose(&Permutation::identity(5), &p).unwrap(), p);
        assert!(compose(&p, &p.inverse()).unwrap().is_identity());
    }

    #[test]
    fn compose_rejects_degree_mismatch() {
        assert_eq!(
            compose(&Permutation::identity(3), &Permutation::identity(4)),
            Err(Error::DegreeMismatch(3, 4))
        );
    }

    #[test]
    fn conjugation_relabels_cycles() {
        // (0 1) relabelled by 0->2 is (2 1)
        let x = cyc(3, "(0 1)");
        let g = cyc(3, "(0 2)");
        assert_eq!(conjugate(&x, &g).unwrap(), cyc(3, "(1 2)"));
        // matches g^-1 x g with left-to-right products
        assert_eq!(x.conjugate_by(&g), g.inverse().then(&x).then(&g));
        assert_eq!(x.conjugate_by(&Permutation::identity(3)), x);
    }

    #[test]
    fn cycle_type_and_order() {
        let p = cyc(6, "(0 1 2 3)(4 5)");
        assert_eq!(p.cycle_type(), vec![4, 2]);
        assert_eq!(p.order(), 4);
        assert_eq!(cyc(7, "(0 1 2)").cycle_type(), vec![3, 1, 1, 1, 1]);
        assert_eq!(format!("{}", Permutation::identity(4)), "()");
        assert_eq!(format!("{}", cyc(5, "(3 4)(0 2 1)")), "(0 2 1)(3 4)");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(Permutation::parse_cycles(3, "(0 1 5)").is_err());
        assert!(Permutation::parse_cycles(3, "(0 1)(1 2)").is_err());
        assert!(Permutation::parse_cycles(3, "0 1").is_err());
        assert!(Permutation::parse_cycles(3, "()").unwrap().is_identity());
    }

    #[test]
    fn pow_matches_repeated_products() {
        let p = cyc(7, "(0 1 2 3 4)(5 6)");
        let mut acc = Permutation::identity(7);
        for k in 0..12 {
            assert_eq!(p.pow(k), acc);
            acc = acc.then(&p);
        }
        assert_eq!(p.pow(-1), p.inverse());
    }
}
