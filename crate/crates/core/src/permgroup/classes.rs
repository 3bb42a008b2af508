use std::collections::hash_map::DefaultHasher;
use std::collections::{HashMap, HashSet};
use std::hash::{Hash, Hasher};

use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::group::GeneratedGroup;
use super::perm::Permutation;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjugacyClass {
    /// Lexicographically least element of the class.
    #[serde(serialize_with = "crate::report::ser_perm")]
    pub representative: Permutation,
    pub size: u128,
    pub element_order: u64,
}

/// An orbit of `G` under some right action, with a transversal of conjugators.
pub(crate) struct Orbit<K> {
    pub points: Vec<K>,
    pub index: HashMap<K, usize>,
    /// `conjugators[i]` maps the seed to `points[i]`.
    pub conjugators: Vec<Permutation>,
}

pub(crate) fn orbit_with_transversal<K, F>(
    g: &GeneratedGroup,
    seed: K,
    act: F,
    cap: u128,
) -> Result<Orbit<K>>
where
    K: Hash + Eq + Clone,
    F: Fn(&K, &Permutation) -> K,
{
    let mut orbit = Orbit {
        points: vec![seed.clone()],
        index: HashMap::from([(seed, 0)]),
        conjugators: vec![g.identity()],
    };
    let mut head = 0;
    while head < orbit.points.len() {
        let pt = orbit.points[head].clone();
        let c = orbit.conjugators[head].clone();
        head += 1;
        for s in g.generators() {
            let img = act(&pt, s);
            if !orbit.index.contains_key(&img) {
                if orbit.points.len() as u128 >= cap {
                    return Err(Error::CapExceeded {
                        what: "orbit",
                        needed: orbit.points.len() as u128 + 1,
                        cap,
                    });
                }
                orbit.index.insert(img.clone(), orbit.points.len());
                orbit.points.push(img);
                orbit.conjugators.push(c.then(s));
            }
        }
    }
    Ok(orbit)
}

/// Stabilizer of the orbit's seed from Schreier generators, stopping as soon as
/// the order reaches `|G| / |orbit|`.
pub(crate) fn stabilizer<K, F>(
    g: &GeneratedGroup,
    orbit: &Orbit<K>,
    act: F,
    known: Vec<Permutation>,
) -> GeneratedGroup
where
    K: Hash + Eq + Clone,
    F: Fn(&K, &Permutation) -> K,
{
    let target = g.order() / orbit.points.len() as u128;
    let degree = g.degree();
    let mut gens: Vec<Permutation> = known.into_iter().filter(|x| !x.is_identity()).collect();
    let mut current = GeneratedGroup::new(degree, gens.clone()).unwrap();
    if current.order() == target {
        return current;
    }
    for (i, pt) in orbit.points.iter().enumerate() {
        for s in g.generators() {
            let j = orbit.index[&act(pt, s)];
            let h = orbit.conjugators[i]
                .then(s)
                .then(&orbit.conjugators[j].inverse());
            if h.is_identity() || current.contains(&h) {
                continue;
            }
            gens.push(h);
            current = GeneratedGroup::new(degree, gens.clone()).unwrap();
            if current.order() == target {
                return current;
            }
        }
    }
    debug_assert_eq!(current.order(), target, "Schreier generators exhausted");
    current
}

/// Elements of the conjugacy class of `x`.
pub fn class_of(g: &GeneratedGroup, x: &Permutation, cap: u128) -> Result<Vec<Permutation>> {
    Ok(orbit_with_transversal(g, x.clone(), |y, s| y.conjugate_by(s), cap)?.points)
}

pub fn conjugacy_classes(g: &GeneratedGroup, cap: u128) -> Result<Vec<ConjugacyClass>> {
    let order = g.order();
    if order > cap {
        return Err(Error::CapExceeded {
            what: "conjugacy classes",
            needed: order,
            cap,
        });
    }
    let mut seen: HashSet<Permutation> = HashSet::new();
    let mut classes = Vec::new();
    let mut total = 0u128;
    for e in g.elements(cap)? {
        if total == order {
            break;
        }
        if seen.contains(&e) {
            continue;
        }
        let class = class_of(g, &e, cap)?;
        let rep = class.iter().min().unwrap().clone();
        total += class.len() as u128;
        classes.push(ConjugacyClass {
            element_order: rep.order(),
            size: class.len() as u128,
            representative: rep,
        });
        seen.extend(class);
    }
    debug_assert_eq!(total, order);
    classes.sort_by(|a, b| {
        (a.element_order, &a.representative).cmp(&(b.element_order, &b.representative))
    });
    Ok(classes)
}

pub fn centralizer(g: &GeneratedGroup, x: &Permutation, cap: u128) -> Result<GeneratedGroup> {
    if !g.contains(x) {
        return Err(Error::NotAMember(x.to_string()));
    }
    let act = |y: &Permutation, s: &Permutation| y.conjugate_by(s);
    let orbit = orbit_with_transversal(g, x.clone(), act, cap)?;
    Ok(stabilizer(g, &orbit, act, vec![x.clone()]))
}

/// Sorted element list of a subgroup, hashed to 128 bits.
fn subgroup_fingerprint(elements: &[Permutation]) -> u128 {
    let mut sorted: Vec<&Permutation> = elements.iter().collect();
    sorted.sort();
    let mut lo = DefaultHasher::new();
    let mut hi = DefaultHasher::new();
    0xa5u8.hash(&mut hi);
    for e in sorted {
        e.hash(&mut lo);
        e.hash(&mut hi);
    }
    ((hi.finish() as u128) << 64) | lo.finish() as u128
}

/// `N_G(H)` via the conjugation orbit of `H`.
pub fn normalizer(g: &GeneratedGroup, h: &GeneratedGroup, cap: u128) -> Result<GeneratedGroup> {
    let elements = h.element_vec(cap)?;
    let seed = subgroup_fingerprint(&elements);
    // The orbit is tracked by fingerprints; conjugates are rebuilt from the
    // transversal so that only one element list is alive at a time.
    let mut points = vec![seed];
    let mut index = HashMap::from([(seed, 0usize)]);
    let mut conjugators = vec![g.identity()];
    let mut edges: Vec<(usize, usize, usize)> = Vec::new();
    let mut head = 0;
    while head < points.len() {
        let c = conjugators[head].clone();
        for (si, s) in g.generators().iter().enumerate() {
            let cs = c.then(s);
            let img: Vec<Permutation> = elements.iter().map(|e| e.conjugate_by(&cs)).collect();
            let key = subgroup_fingerprint(&img);
            let j = match index.get(&key) {
                Some(&j) => j,
                None => {
                    if points.len() as u128 >= cap {
                        return Err(Error::CapExceeded {
                            what: "subgroup orbit",
                            needed: points.len() as u128 + 1,
                            cap,
                        });
                    }
                    index.insert(key, points.len());
                    points.push(key);
                    conjugators.push(cs);
                    points.len() - 1
                }
            };
            edges.push((head, si, j));
        }
        head += 1;
    }
    let target = g.order() / points.len() as u128;
    let mut gens: Vec<Permutation> = h.generators().to_vec();
    let mut current = h.clone();
    for (i, si, j) in edges {
        if current.order() == target {
            break;
        }
        let x = conjugators[i]
            .then(&g.generators()[si])
            .then(&conjugators[j].inverse());
        if x.is_identity() || current.contains(&x) {
            continue;
        }
        gens.push(x);
        current = GeneratedGroup::new(g.degree(), gens.clone())?;
    }
    if current.order() != target {
        return Err(Error::InvalidParameters("normalizer orbit fingerprint collision".into()));
    }
    Ok(current)
}

fn p_part(mut n: u128, p: u128) -> u128 {
    let mut out = 1;
    while n % p == 0 {
        n /= p;
        out *= p;
    }
    out
}

fn is_power_of(mut n: u128, p: u128) -> bool {
    while n > 1 && n % p == 0 {
        n /= p;
    }
    n == 1
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// `x` raised to the p'-part of its order.
fn p_part_of_element(x: &Permutation, p: u64) -> Permutation {
    let o = x.order();
    let mut m = o;
    while m % p == 0 {
        m /= p;
    }
    x.pow(m as i64)
}

fn random_p_element_outside(
    n: &GeneratedGroup,
    p: u64,
    inside: &GeneratedGroup,
    rng: &mut ChaCha8Rng,
) -> Option<Permutation> {
    for _ in 0..20_000 {
        let y = p_part_of_element(&n.random_element(rng), p);
        if !y.is_identity() && !inside.contains(&y) {
            return Some(y);
        }
    }
    None
}

/// Sylow `p`-subgroup by growth inside normalizers: a p-subgroup that is not
/// Sylow is properly contained in a p-subgroup of its normalizer.
pub fn sylow_subgroup(g: &GeneratedGroup, p: u64, cap: u128) -> Result<GeneratedGroup> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let target = p_part(g.order(), p as u128);
    if target == 1 {
        return Err(Error::PrimeDoesNotDivide { p, order: g.order() });
    }
    let mut rng = g.rng();
    let mut sylow = GeneratedGroup::trivial(g.degree());
    while sylow.order() < target {
        let norm = if sylow.order() == 1 {
            g.clone()
        } else {
            normalizer(g, &sylow, cap)?
        };
        let y = random_p_element_outside(&norm, p, &sylow, &mut rng)
            .ok_or_else(|| Error::InvalidParameters("no p-element found in normalizer".into()))?;
        let mut gens = sylow.generators().to_vec();
        gens.push(y);
        let grown = GeneratedGroup::new(g.degree(), gens)?;
        debug_assert!(is_power_of(grown.order(), p as u128));
        sylow = grown;
    }
    Ok(sylow)
}
