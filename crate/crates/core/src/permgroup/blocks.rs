use super::group::GeneratedGroup;
use super::perm::Permutation;
use crate::error::{Error, Result};

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut y = x;
        while self.parent[y] != r {
            let next = self.parent[y];
            self.parent[y] = r;
            y = next;
        }
        r
    }

    /// Returns false if already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }

    fn classes(&mut self) -> Vec<Vec<usize>> {
        let n = self.parent.len();
        let mut by_root: Vec<Vec<usize>> = vec![Vec::new(); n];
        for x in 0..n {
            let r = self.find(x);
            by_root[r].push(x);
        }
        by_root.into_iter().filter(|c| !c.is_empty()).collect()
    }
}

/// Orbits of `⟨gens⟩`, each sorted, ordered by least point.
pub fn orbits_of(degree: usize, gens: &[Permutation]) -> Vec<Vec<usize>> {
    let mut uf = UnionFind::new(degree);
    for g in gens {
        for i in 0..degree {
            uf.union(i, g.apply(i));
        }
    }
    uf.classes()
}

pub fn orbits(g: &GeneratedGroup) -> Vec<Vec<usize>> {
    g.orbits()
}

pub fn is_transitive(g: &GeneratedGroup) -> bool {
    g.is_transitive()
}

/// Finest block system in which `a` and `b` share a block (Atkinson).
fn block_system_joining(degree: usize, gens: &[Permutation], a: usize, b: usize) -> Vec<Vec<usize>> {
    let mut uf = UnionFind::new(degree);
    uf.union(a, b);
    let mut queue = vec![(a, b)];
    while let Some((x, y)) = queue.pop() {
        for g in gens {
            let (gx, gy) = (g.apply(x), g.apply(y));
            let (rx, ry) = (uf.find(gx), uf.find(gy));
            if rx != ry {
                uf.union(rx, ry);
                queue.push((rx, ry));
            }
        }
    }
    uf.classes()
}

/// The distinct minimal nontrivial block systems of a transitive group.
///
/// Every nontrivial block containing 0 contains a block generated by `{0, b}`,
/// so minimal systems appear among the systems joining 0 with each other point.
pub fn minimal_blocks(g: &GeneratedGroup) -> Result<Vec<Vec<Vec<usize>>>> {
    if !g.is_transitive() {
        return Err(Error::Intransitive);
    }
    let n = g.degree();
    let mut systems: Vec<Vec<Vec<usize>>> = Vec::new();
    for b in 1..n {
        let sys = block_system_joining(n, g.generators(), 0, b);
        if sys.len() > 1 && !systems.contains(&sys) {
            systems.push(sys);
        }
    }
    let block_of_zero = |s: &Vec<Vec<usize>>| s.iter().find(|blk| blk.contains(&0)).unwrap().clone();
    let minimal: Vec<Vec<Vec<usize>>> = systems
        .iter()
        .filter(|s| {
            let mine = block_of_zero(s);
            !systems.iter().any(|t| {
                let other = block_of_zero(t);
                other.len() < mine.len() && other.iter().all(|x| mine.contains(x))
            })
        })
        .cloned()
        .collect();
    Ok(minimal)
}

pub fn is_primitive(g: &GeneratedGroup) -> Result<bool> {
    Ok(minimal_blocks(g)?.is_empty())
}
