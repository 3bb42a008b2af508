//! Maximal subgroup orders of sporadic groups and the divisibility check
//! behind invariable generation by elements of two given orders.
//!
//! If `pr` divides `|S|` but no maximal subgroup order, then no proper
//! subgroup contains elements of both orders, so any such pair generates
//! `S` invariably. Orders are transcribed from the ATLAS of Finite Groups
//! with later corrections; see the source column of the data file.

use num_bigint::BigUint;
use num_traits::Zero;
use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::invgen::first_element_of_order;
use crate::report::{ClaimReport, Status};

pub const SPORADIC_MAXIMALS: &str = include_str!("../data/sporadic_maximals.txt");

/// Pairs `(S, p, r)` with `pr` dividing `|S|` and no maximal subgroup order.
pub const TABLE1: [(&str, u64, u64); 20] = [
    ("M11", 11, 8),
    ("M22", 11, 7),
    ("M23", 23, 7),
    ("J1", 19, 11),
    ("J2", 7, 5),
    ("J3", 19, 17),
    ("J4", 43, 37),
    ("Co1", 23, 13),
    ("Fi22", 13, 11),
    ("Fi23", 23, 17),
    ("Fi24'", 29, 23),
    ("He", 17, 7),
    ("Ru", 29, 13),
    ("Suz", 13, 11),
    ("ON", 31, 19),
    ("HN", 19, 11),
    ("Ly", 67, 37),
    ("Th", 31, 19),
    ("B", 47, 31),
    ("M", 71, 59),
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SporadicRecord {
    pub name: String,
    #[serde(serialize_with = "ser_big")]
    pub order: BigUint,
    /// One entry per conjugacy class of maximal subgroups. Empty when the
    /// list has not been transcribed.
    #[serde(serialize_with = "ser_big_vec")]
    pub maximal_subgroup_orders: Vec<BigUint>,
    pub source: String,
}

fn ser_big<S: serde::Serializer>(x: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

fn ser_big_vec<S: serde::Serializer>(v: &[BigUint], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

impl SporadicRecord {
    pub fn is_complete(&self) -> bool {
        !self.maximal_subgroup_orders.is_empty()
    }

    /// Maximal orders that do not divide the group order.
    pub fn sanity_violations(&self) -> Vec<&BigUint> {
        self.maximal_subgroup_orders
            .iter()
            .filter(|m| m.is_zero() || !(&self.order % *m).is_zero())
            .collect()
    }
}

/// Parses `name | order | m1,m2,... | source` records; `#` starts a comment.
pub fn parse_records(text: &str) -> Result<Vec<SporadicRecord>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: &str| Error::Parse {
            line: i + 1,
            msg: msg.to_string(),
        };
        let fields: Vec<&str> = line.split('|').map(str::trim).collect();
        if fields.len() != 4 {
            return Err(err("expected four |-separated fields"));
        }
        let num = |s: &str| s.parse::<BigUint>().map_err(|_| err(&format!("bad integer {s:?}")));
        let maximal_subgroup_orders = if fields[2].is_empty() {
            Vec::new()
        } else {
            fields[2].split(',').map(|s| num(s.trim())).collect::<Result<_>>()?
        };
        out.push(SporadicRecord {
            name: fields[0].to_string(),
            order: num(fields[1])?,
            maximal_subgroup_orders,
            source: fields[3].to_string(),
        });
    }
    Ok(out)
}

pub fn records() -> Vec<SporadicRecord> {
    parse_records(SPORADIC_MAXIMALS).expect("bundled data parses")
}

pub fn record(name: &str) -> Option<SporadicRecord> {
    records().into_iter().find(|r| r.name.eq_ignore_ascii_case(name))
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// How an element of order `k` is known to exist.
fn element_evidence(name: &str, k: u64) -> Option<String> {
    if is_prime(k) {
        return Some("Cauchy".into());
    }
    let g = crate::data::by_name(name)?;
    let x = first_element_of_order(&g, k, crate::permgroup::DEFAULT_ELEMENT_CAP).ok()??;
    Some(format!("bundled representation: {x}"))
}

/// Divisibility check for one row against `records`.
pub fn verify_row_in(records: &[SporadicRecord], name: &str, p: u64, r: u64) -> ClaimReport {
    ClaimReport::run(format!("table1.{name}"), || {
        let Some(rec) = records.iter().find(|x| x.name.eq_ignore_ascii_case(name)) else {
            return (Status::Skip, json!({"reason": format!("no record for {name}")}));
        };
        if !rec.is_complete() {
            return (Status::Skip, json!({"reason": "maximal subgroup list incomplete"}));
        }
        let pr = BigUint::from(p) * BigUint::from(r);
        let divides_order = (&rec.order % &pr).is_zero();
        let offending: Vec<String> = rec
            .maximal_subgroup_orders
            .iter()
            .filter(|m| (*m % &pr).is_zero())
            .map(|m| m.to_string())
            .collect();
        let evidence = [element_evidence(name, p), element_evidence(name, r)];
        let elements_exist = evidence.iter().all(Option::is_some);
        let insane = rec.sanity_violations();
        let status = if !insane.is_empty() {
            Status::Fail
        } else if !elements_exist {
            Status::Skip
        } else {
            Status::from_bool(divides_order && offending.is_empty())
        };
        (
            status,
            json!({
                "p": p,
                "r": r,
                "order": rec.order.to_string(),
                "pr_divides_order": divides_order,
                "maximal_classes": rec.maximal_subgroup_orders.len(),
                "maximal_orders_divisible_by_pr": offending,
                "element_evidence": evidence,
                "data_sanity_violations": insane.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
                "source": rec.source,
            }),
        )
    })
}

pub fn verify_table1_row(name: &str, p: u64, r: u64) -> ClaimReport {
    verify_row_in(&records(), name, p, r)
}

pub fn verify_table1() -> Vec<ClaimReport> {
    let recs = records();
    TABLE1.iter().map(|&(n, p, r)| verify_row_in(&recs, n, p, r)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_records_are_sane() {
        let recs = records();
        assert_eq!(recs.len(), 20);
        for r in &recs {
            assert!(r.is_complete(), "{}", r.name);
            assert!(r.sanity_violations().is_empty(), "{}", r.name);
        }
        assert_eq!(record("J1").unwrap().order, BigUint::from(175_560u32));
    }

    #[test]
    fn j1_row() {
        let rep = verify_table1_row("J1", 19, 11);
        assert_eq!(rep.status, Status::Pass);
        assert_eq!(rep.details["maximal_classes"], 7);
    }

    #[test]
    fn wrong_pair_fails() {
        // 11·5 divides |L2(11)| < J1
        let rep = verify_table1_row("J1", 11, 5);
        assert_eq!(rep.status, Status::Fail);
        assert_eq!(rep.details["maximal_orders_divisible_by_pr"][0], "660");
    }

    #[test]
    fn incomplete_records_skip() {
        let recs = parse_records("X | 60 |  | none\n").unwrap();
        assert_eq!(verify_row_in(&recs, "X", 5, 3).status, Status::Skip);
        assert_eq!(verify_row_in(&recs, "Y", 5, 3).status, Status::Skip);
        let recs = parse_records("X | 60 | 7 | bad\n").unwrap();
        assert_eq!(verify_row_in(&recs, "X", 5, 3).status, Status::Fail);
        assert!(parse_records("X | 60 | 1").is_err());
    }

    #[test]
    fn m11_order_eight_is_certified() {
        let rep = verify_table1_row("M11", 11, 8);
        assert_eq!(rep.status, Status::Pass);
        assert!(rep.details["element_evidence"][1].as_str().unwrap().starts_with("bundled"));
    }
}
