//! Bundled permutation representations.

use crate::permgroup::io::parse_generators;
use crate::permgroup::GeneratedGroup;

pub const M11: &str = include_str!("../data/m11.grp");
pub const M12: &str = include_str!("../data/m12.grp");
pub const M24: &str = include_str!("../data/m24.grp");
pub const SP6_2: &str = include_str!("../data/sp6_2.grp");
pub const U4_2: &str = include_str!("../data/u4_2.grp");
pub const S3: &str = include_str!("../data/s3.grp");

fn load(text: &str, order: u128) -> GeneratedGroup {
    let (degree, gens) = parse_generators(text).expect("bundled data parses");
    GeneratedGroup::with_known_order(degree, gens, order).expect("bundled data certifies its order")
}

pub fn m11() -> GeneratedGroup {
    load(M11, 7920)
}

pub fn m12() -> GeneratedGroup {
    load(M12, 95040)
}

pub fn m24() -> GeneratedGroup {
    load(M24, 244_823_040)
}

/// Sp6(2) on the 63 nonzero vectors of F2^6.
pub fn sp6_2() -> GeneratedGroup {
    load(SP6_2, 1_451_520)
}

/// U4(2) ≅ PSp4(3) on the 40 points of PG(3,3).
pub fn u4_2() -> GeneratedGroup {
    load(U4_2, 25_920)
}

/// Looks up a bundled group by name.
pub fn by_name(name: &str) -> Option<GeneratedGroup> {
    Some(match name.to_ascii_lowercase().as_str() {
        "m11" => m11(),
        "m12" => m12(),
        "m24" => m24(),
        "sp6_2" | "sp6(2)" => sp6_2(),
        "u4_2" | "u4(2)" => u4_2(),
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_orders_are_deterministic() {
        // with_known_order falls back to the deterministic chain; both must agree
        for (text, order) in [(M11, 7920u128), (M12, 95040), (U4_2, 25920), (SP6_2, 1_451_520)] {
            let (d, gens) = parse_generators(text).unwrap();
            assert_eq!(GeneratedGroup::new(d, gens).unwrap().order(), order);
        }
    }
}
