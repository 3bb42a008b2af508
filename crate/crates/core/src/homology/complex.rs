use serde::Serialize;

use super::poset::Poset;
use crate::error::{Error, Result};

/// Default cap on the total number of materialized faces.
pub const DEFAULT_FACE_CAP: u128 = 10_000_000;

/// An abstract simplicial complex with faces stored per dimension as a flat,
/// lexicographically sorted array of sorted vertex tuples. The empty face is
/// implicit and always present.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    n_vertices: usize,
    /// `faces[d]` holds the d-faces, `d + 1` vertices each.
    faces: Vec<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FaceCounts {
    /// `counts[0]` is the empty face, `counts[d + 1]` the d-faces.
    pub counts: Vec<u128>,
}

impl FaceCounts {
    /// `χ̃ = Σ_{d ≥ -1} (-1)^d f_d`.
    pub fn reduced_euler_characteristic(&self) -> i128 {
        self.counts
            .iter()
            .enumerate()
            .map(|(i, &c)| if i % 2 == 0 { -(c as i128) } else { c as i128 })
            .sum()
    }
}

impl SimplicialComplex {
    /// The complex `{∅}`.
    pub fn empty() -> Self {
        SimplicialComplex {
            n_vertices: 0,
            faces: Vec::new(),
        }
    }

    /// Downward closure of the given facets on vertices `0..n_vertices`.
    pub fn from_facets(n_vertices: usize, facets: &[Vec<usize>]) -> Result<Self> {
        let mut by_dim: Vec<std::collections::BTreeSet<Vec<u32>>> = Vec::new();
        for f in facets {
            let mut f: Vec<u32> = f.iter().map(|&v| v as u32).collect();
            f.sort_unstable();
            f.dedup();
            if f.iter().any(|&v| v as usize >= n_vertices) {
                return Err(Error::InvalidParameters(format!("facet {f:?} has a vertex out of range")));
            }
            let k = f.len();
            if k > 25 {
                return Err(Error::InvalidParameters("facet too large to close".into()));
            }
            for mask in 1u32..(1 << k) {
                let sub: Vec<u32> = (0..k).filter(|&i| mask >> i & 1 == 1).map(|i| f[i]).collect();
                let d = sub.len() - 1;
                while by_dim.len() <= d {
                    by_dim.push(Default::default());
                }
                by_dim[d].insert(sub);
            }
        }
        Ok(SimplicialComplex {
            n_vertices,
            faces: by_dim.into_iter().map(|s| s.into_iter().flatten().collect()).collect(),
        })
    }

    /// The full simplex on `n` vertices.
    pub fn simplex(n: usize) -> Self {
        if n == 0 {
            return Self::empty();
        }
        Self::from_facets(n, &[(0..n).collect()]).expect("simplex")
    }

    /// The boundary of the simplex on `n` vertices, a sphere of dimension `n - 2`.
    pub fn simplex_boundary(n: usize) -> Self {
        let facets: Vec<Vec<usize>> = (0..n).map(|skip| (0..n).filter(|&v| v != skip).collect()).collect();
        Self::from_facets(n, &facets).expect("sphere")
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    /// Top dimension, or -1 for `{∅}`.
    pub fn dimension(&self) -> isize {
        self.faces.len() as isize - 1
    }

    pub fn face_count(&self, d: usize) -> usize {
        self.faces.get(d).map_or(0, |f| f.len() / (d + 1))
    }

    pub fn face_counts(&self) -> FaceCounts {
        let mut counts = vec![1u128];
        counts.extend((0..self.faces.len()).map(|d| self.face_count(d) as u128));
        FaceCounts { counts }
    }

    pub fn total_faces(&self) -> u128 {
        self.face_counts().counts.iter().sum()
    }

    pub fn reduced_euler_characteristic(&self) -> i128 {
        self.face_counts().reduced_euler_characteristic()
    }

    pub fn face(&self, d: usize, i: usize) -> &[u32] {
        &self.faces[d][i * (d + 1)..(i + 1) * (d + 1)]
    }

    pub fn faces(&self, d: usize) -> impl Iterator<Item = &[u32]> {
        self.faces
            .get(d)
            .map(|f| f.chunks_exact(d + 1))
            .into_iter()
            .flatten()
    }

    /// Index of a sorted d-face, by binary search.
    pub fn face_index(&self, face: &[u32]) -> Option<usize> {
        let d = face.len().checked_sub(1)?;
        let flat = self.faces.get(d)?;
        let n = flat.len() / (d + 1);
        let (mut lo, mut hi) = (0, n);
        while lo < hi {
            let mid = (lo + hi) / 2;
            match flat[mid * (d + 1)..(mid + 1) * (d + 1)].cmp(face) {
                std::cmp::Ordering::Less => lo = mid + 1,
                std::cmp::Ordering::Greater => hi = mid,
                std::cmp::Ordering::Equal => return Some(mid),
            }
        }
        None
    }

    pub fn contains_face(&self, face: &[u32]) -> bool {
        face.is_empty() || self.face_index(face).is_some()
    }

    /// Whether every face's codimension-one faces are present.
    pub fn is_closed(&self) -> bool {
        (1..self.faces.len()).all(|d| {
            self.faces(d).all(|f| {
                (0..=d).all(|skip| {
                    let sub: Vec<u32> = f.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).collect();
                    self.face_index(&sub).is_some()
                })
            })
        })
    }

    /// The subcomplex of faces all of whose vertices satisfy `keep`,
    /// relabelled in increasing order.
    pub fn induced(&self, keep: &[bool]) -> SimplicialComplex {
        let mut label = vec![u32::MAX; self.n_vertices];
        let mut n = 0;
        for (v, &k) in keep.iter().enumerate() {
            if k {
                label[v] = n;
                n += 1;
            }
        }
        let mut faces = Vec::new();
        for d in 0..self.faces.len() {
            let flat: Vec<u32> = self
                .faces(d)
                .filter(|f| f.iter().all(|&v| keep[v as usize]))
                .flat_map(|f| f.iter().map(|&v| label[v as usize]).collect::<Vec<_>>())
                .collect();
            if flat.is_empty() {
                break;
            }
            faces.push(flat);
        }
        SimplicialComplex {
            n_vertices: n as usize,
            faces,
        }
    }

    /// The simplicial join, with `other`'s vertices shifted past ours.
    pub fn join(&self, other: &SimplicialComplex, cap: u128) -> Result<SimplicialComplex> {
        let a = self.face_counts().counts;
        let b = other.face_counts().counts;
        let total: u128 = a.iter().map(|x| x * b.iter().sum::<u128>()).sum();
        if total > cap {
            return Err(Error::CapExceeded {
                what: "join faces",
                needed: total,
                cap,
            });
        }
        let shift = self.n_vertices as u32;
        let mut by_dim: Vec<Vec<Vec<u32>>> = vec![Vec::new(); self.faces.len() + other.faces.len()];
        let left: Vec<Vec<u32>> = std::iter::once(Vec::new())
            .chain((0..self.faces.len()).flat_map(|d| self.faces(d).map(<[u32]>::to_vec)))
            .collect();
        let right: Vec<Vec<u32>> = std::iter::once(Vec::new())
            .chain((0..other.faces.len()).flat_map(|d| other.faces(d).map(|f| f.iter().map(|v| v + shift).collect())))
            .collect();
        for s in &left {
            for t in &right {
                if s.is_empty() && t.is_empty() {
                    continue;
                }
                let mut f = s.clone();
                f.extend_from_slice(t);
                by_dim[f.len() - 1].push(f);
            }
        }
        let faces = by_dim
            .into_iter()
            .filter(|v| !v.is_empty())
            .map(|mut v| {
                v.sort_unstable();
                v.into_iter().flatten().collect()
            })
            .collect();
        Ok(SimplicialComplex {
            n_vertices: self.n_vertices + other.n_vertices,
            faces,
        })
    }

    /// The cone with apex as a new last vertex.
    pub fn cone(&self) -> SimplicialComplex {
        self.join(&SimplicialComplex::simplex(1), u128::MAX).expect("no cap")
    }
}

/// The order complex: one d-face per chain of cardinality `d + 1`.
pub fn order_complex(p: &Poset, cap: u128) -> Result<SimplicialComplex> {
    let counts = p.chain_counts();
    let total: u128 = counts.iter().sum::<u128>() + 1;
    if total > cap {
        return Err(Error::CapExceeded {
            what: "order complex faces",
            needed: total,
            cap,
        });
    }
    let mut faces: Vec<Vec<u32>> = counts.iter().enumerate().map(|(d, &c)| Vec::with_capacity(c as usize * (d + 1))).collect();
    // depth-first over chains; since labels extend the order, each chain is
    // produced as a sorted tuple and each dimension comes out in lex order
    let mut chain: Vec<u32> = Vec::new();
    let mut stack: Vec<(u32, usize)> = Vec::new();
    for start in 0..p.len() as u32 {
        chain.push(start);
        faces[0].push(start);
        stack.push((start, 0));
        while let Some(&mut (v, ref mut next)) = stack.last_mut() {
            let up = p.above(v as usize);
            if *next < up.len() {
                let w = up[*next];
                *next += 1;
                chain.push(w);
                faces[chain.len() - 1].extend_from_slice(&chain);
                stack.push((w, 0));
            } else {
                stack.pop();
                chain.pop();
            }
        }
    }
    Ok(SimplicialComplex {
        n_vertices: p.len(),
        faces,
    })
}
