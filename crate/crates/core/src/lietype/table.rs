use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_integer::Integer;
use serde::{Serialize, Serializer};
use serde_json::json;

use super::order::{universal_order, OrderPolynomial};
use super::zsigmondy::{is_prime_power, zsigmondy_primes};
use crate::error::{Error, Result};
use crate::report::{ClaimReport, Status};

pub const FAMILY_TABLE: &str = include_str!("../../data/lie_families.txt");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LieFamily {
    APlus,
    AMinus,
    B,
    C,
    DPlus,
    DMinus,
    TrialityD4,
    G2,
    F4,
    E6Plus,
    E6Minus,
    E7,
    E8,
    SuzukiB2,
    ReeF4,
    ReeG2,
}

impl LieFamily {
    pub const ALL: [LieFamily; 16] = [
        LieFamily::APlus,
        LieFamily::AMinus,
        LieFamily::B,
        LieFamily::C,
        LieFamily::DPlus,
        LieFamily::DMinus,
        LieFamily::TrialityD4,
        LieFamily::G2,
        LieFamily::F4,
        LieFamily::E6Plus,
        LieFamily::E6Minus,
        LieFamily::E7,
        LieFamily::E8,
        LieFamily::SuzukiB2,
        LieFamily::ReeF4,
        LieFamily::ReeG2,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            LieFamily::APlus => "A+",
            LieFamily::AMinus => "A-",
            LieFamily::B => "B",
            LieFamily::C => "C",
            LieFamily::DPlus => "D+",
            LieFamily::DMinus => "D-",
            LieFamily::TrialityD4 => "3D4",
            LieFamily::G2 => "G2",
            LieFamily::F4 => "F4",
            LieFamily::E6Plus => "E6+",
            LieFamily::E6Minus => "E6-",
            LieFamily::E7 => "E7",
            LieFamily::E8 => "E8",
            LieFamily::SuzukiB2 => "2B2",
            LieFamily::ReeF4 => "2F4",
            LieFamily::ReeG2 => "2G2",
        }
    }

    pub fn is_classical(self) -> bool {
        matches!(
            self,
            LieFamily::APlus | LieFamily::AMinus | LieFamily::B | LieFamily::C | LieFamily::DPlus | LieFamily::DMinus
        )
    }
}

impl fmt::Display for LieFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for LieFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        LieFamily::ALL
            .into_iter()
            .find(|f| f.tag().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

impl Serialize for LieFamily {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.tag())
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Expr {
    Num(i64),
    N,
    K,
    Bin(char, Box<Expr>, Box<Expr>),
}

impl Expr {
    fn eval(&self, n: i64, k: i64) -> i64 {
        match self {
            Expr::Num(x) => *x,
            Expr::N => n,
            Expr::K => k,
            Expr::Bin(op, a, b) => {
                let (a, b) = (a.eval(n, k), b.eval(n, k));
                match op {
                    '+' => a + b,
                    '-' => a - b,
                    '*' => a * b,
                    _ => a.div_euclid(b),
                }
            }
        }
    }

    fn parse(text: &str) -> Result<Expr> {
        let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0;
        let e = Self::sum(&chars, &mut pos)?;
        if pos != chars.len() {
            return Err(bad_expr(text));
        }
        Ok(e)
    }

    fn sum(c: &[char], pos: &mut usize) -> Result<Expr> {
        let mut acc = Self::product(c, pos)?;
        while *pos < c.len() && (c[*pos] == '+' || c[*pos] == '-') {
            let op = c[*pos];
            *pos += 1;
            acc = Expr::Bin(op, Box::new(acc), Box::new(Self::product(c, pos)?));
        }
        Ok(acc)
    }

    fn product(c: &[char], pos: &mut usize) -> Result<Expr> {
        let mut acc = Self::atom(c, pos)?;
        loop {
            if *pos < c.len() && (c[*pos] == '*' || c[*pos] == '/') {
                let op = c[*pos];
                *pos += 1;
                acc = Expr::Bin(op, Box::new(acc), Box::new(Self::atom(c, pos)?));
            } else if *pos < c.len() && (c[*pos] == 'n' || c[*pos] == 'k' || c[*pos] == '(') {
                // implicit product such as 2n
                acc = Expr::Bin('*', Box::new(acc), Box::new(Self::atom(c, pos)?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn atom(c: &[char], pos: &mut usize) -> Result<Expr> {
        let text: String = c.iter().collect();
        match c.get(*pos) {
            Some('n') => {
                *pos += 1;
                Ok(Expr::N)
            }
            Some('k') => {
                *pos += 1;
                Ok(Expr::K)
            }
            Some('(') => {
                *pos += 1;
                let e = Self::sum(c, pos)?;
                if c.get(*pos) != Some(&')') {
                    return Err(bad_expr(&text));
                }
                *pos += 1;
                Ok(e)
            }
            Some(d) if d.is_ascii_digit() => {
                let start = *pos;
                while *pos < c.len() && c[*pos].is_ascii_digit() {
                    *pos += 1;
                }
                let s: String = c[start..*pos].iter().collect();
                Ok(Expr::Num(s.parse().map_err(|_| bad_expr(&text))?))
            }
            _ => Err(bad_expr(&text)),
        }
    }
}

fn bad_expr(text: &str) -> Error {
    Error::Parse {
        line: 0,
        msg: format!("bad expression `{text}`"),
    }
}

#[derive(Clone, Debug)]
struct RankCond {
    min: u32,
    exact: bool,
    parity: Option<u32>,
}

impl RankCond {
    fn parse(text: &str) -> Result<Self> {
        let mut words = text.split_whitespace();
        let head = words.next().unwrap_or("");
        let parity = match words.next() {
            None => None,
            Some("even") => Some(0),
            Some("odd") => Some(1),
            Some(w) => return Err(Error::InvalidParameters(format!("bad rank condition `{w}`"))),
        };
        let (exact, num) = if let Some(v) = head.strip_prefix("n>=") {
            (false, v)
        } else if let Some(v) = head.strip_prefix("n=") {
            (true, v)
        } else {
            return Err(Error::InvalidParameters(format!("bad rank condition `{text}`")));
        };
        let min = num
            .parse()
            .map_err(|_| Error::InvalidParameters(format!("bad rank `{num}`")))?;
        Ok(RankCond { min, exact, parity })
    }

    fn admits(&self, n: u32) -> bool {
        let size = if self.exact { n == self.min } else { n >= self.min };
        size && self.parity.is_none_or(|p| n % 2 == p)
    }

    fn describe(&self) -> String {
        let head = if self.exact {
            format!("n={}", self.min)
        } else {
            format!("n>={}", self.min)
        };
        match self.parity {
            Some(0) => format!("{head} even"),
            Some(_) => format!("{head} odd"),
            None => head,
        }
    }
}

/// Field sizes allowed for a family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QCondition {
    Any,
    /// `q = p^(2m+1)` with `q ≥ min`.
    OddPowerOf { p: u64, min: u64 },
}

impl QCondition {
    fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text == "any" {
            return Ok(QCondition::Any);
        }
        let bad = || Error::InvalidParameters(format!("bad q condition `{text}`"));
        let (base, rest) = text.split_once("^odd").ok_or_else(bad)?;
        let p = base.parse().map_err(|_| bad())?;
        let min = match rest.strip_prefix(">=") {
            Some(m) => m.parse().map_err(|_| bad())?,
            None if rest.is_empty() => p,
            None => return Err(bad()),
        };
        Ok(QCondition::OddPowerOf { p, min })
    }

    pub fn admits(&self, q: u64) -> bool {
        let Some((p, k)) = is_prime_power(q) else {
            return false;
        };
        match *self {
            QCondition::Any => true,
            QCondition::OddPowerOf { p: base, min } => p == base && k % 2 == 1 && q >= min,
        }
    }
}

#[derive(Clone, Debug)]
struct Component {
    name: String,
    rank: Option<Expr>,
    field_power: u32,
    inverse: bool,
}

impl Component {
    fn parse(token: &str) -> Result<Self> {
        let bad = || Error::InvalidParameters(format!("bad Levi component `{token}`"));
        let (inverse, body) = match token.strip_prefix('/') {
            Some(b) => (true, b),
            None => (false, token),
        };
        let (body, field_power) = match body.split_once('@') {
            Some((b, m)) => (b, m.parse().map_err(|_| bad())?),
            None => (body, 1),
        };
        let (name, rank) = match body.split_once('(') {
            Some((name, rest)) => {
                let inner = rest.strip_suffix(')').ok_or_else(bad)?;
                (name.to_string(), Some(Expr::parse(inner)?))
            }
            None => (body.to_string(), None),
        };
        universal_order(&name, 1)?;
        Ok(Component {
            name,
            rank,
            field_power,
            inverse,
        })
    }

    fn evaluate(&self, n: i64, k: i64) -> Result<(OrderPolynomial, Option<String>)> {
        let r = match &self.rank {
            Some(e) => {
                let v = e.eval(n, k);
                if v < 0 {
                    return Err(Error::InvalidParameters(format!("negative rank in {}", self.name)));
                }
                Some(v as u32)
            }
            None => None,
        };
        let poly = universal_order(&self.name, r.unwrap_or(0))?.field_power(self.field_power);
        let trivial = matches!(self.name.as_str(), "A" | "2A" | "B" | "C" | "D" | "2D" | "GL" | "GU") && r == Some(0);
        let label = (!trivial).then(|| {
            let mut s = String::new();
            if self.inverse {
                s.push('/');
            }
            s.push_str(&self.name);
            if let Some(r) = r {
                s.push_str(&format!("({r})"));
            }
            if self.field_power != 1 {
                s.push_str(&format!("@{}", self.field_power));
            }
            s
        });
        Ok((poly, label))
    }
}

#[derive(Clone, Debug)]
struct LeviSpec {
    k_range: Option<(Expr, Expr)>,
    components: Vec<Component>,
}

impl LeviSpec {
    fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        let (k_range, rest) = match text.strip_prefix("k=") {
            Some(r) => {
                let (range, rest) = r
                    .split_once(':')
                    .ok_or_else(|| Error::InvalidParameters(format!("bad k range in `{text}`")))?;
                let (lo, hi) = range
                    .split_once("..")
                    .ok_or_else(|| Error::InvalidParameters(format!("bad k range in `{text}`")))?;
                (Some((Expr::parse(lo)?, Expr::parse(hi)?)), rest)
            }
            None => (None, text),
        };
        let components = rest.split_whitespace().map(Component::parse).collect::<Result<Vec<_>>>()?;
        Ok(LeviSpec { k_range, components })
    }
}

fn product(components: &[Component], n: i64, k: i64, keep_p_part: bool) -> Result<(OrderPolynomial, String)> {
    let mut acc = OrderPolynomial::one();
    let mut labels = Vec::new();
    for c in components {
        let (mut poly, label) = c.evaluate(n, k)?;
        if !keep_p_part {
            poly = poly.p_prime_part();
        }
        acc = if c.inverse { acc.div(&poly) } else { acc.mul(&poly) };
        labels.extend(label);
    }
    Ok((acc, labels.join(" ")))
}

#[derive(Clone, Debug)]
pub struct FamilyRow {
    pub family: LieFamily,
    ranks: RankCond,
    pub q_condition: QCondition,
    e: Expr,
    order: Vec<Component>,
    parabolics: Vec<LeviSpec>,
    pub source: String,
}

impl FamilyRow {
    pub fn admits_rank(&self, n: u32) -> bool {
        self.ranks.admits(n)
    }

    pub fn min_rank(&self) -> u32 {
        self.ranks.min
    }

    pub fn is_fixed_rank(&self) -> bool {
        self.ranks.exact
    }

    pub fn rank_condition(&self) -> String {
        self.ranks.describe()
    }
}

/// A maximal parabolic subgroup given by its Levi factor.
#[derive(Clone, Debug, Serialize)]
pub struct Parabolic {
    pub levi: String,
    pub order: OrderPolynomial,
}

#[derive(Clone, Debug)]
pub struct LieTable {
    pub rows: Vec<FamilyRow>,
}

impl LieTable {
    pub fn parse(text: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let at = |e: Error| Error::Parse {
                line: i + 1,
                msg: e.to_string(),
            };
            let cols: Vec<&str> = line.split('|').map(str::trim).collect();
            if cols.len() != 7 {
                return Err(Error::Parse {
                    line: i + 1,
                    msg: format!("expected 7 columns, found {}", cols.len()),
                });
            }
            let order = cols[4]
                .split_whitespace()
                .map(Component::parse)
                .collect::<Result<Vec<_>>>()
                .map_err(at)?;
            let parabolics = cols[5]
                .split(';')
                .map(LeviSpec::parse)
                .collect::<Result<Vec<_>>>()
                .map_err(at)?;
            rows.push(FamilyRow {
                family: cols[0].parse().map_err(at)?,
                ranks: RankCond::parse(cols[1]).map_err(at)?,
                q_condition: QCondition::parse(cols[2]).map_err(at)?,
                e: Expr::parse(cols[3]).map_err(at)?,
                order,
                parabolics,
                source: cols[6].to_string(),
            });
        }
        Ok(LieTable { rows })
    }

    pub fn bundled() -> &'static LieTable {
        static TABLE: OnceLock<LieTable> = OnceLock::new();
        TABLE.get_or_init(|| LieTable::parse(FAMILY_TABLE).expect("bundled Lie family table parses"))
    }

    pub fn row(&self, family: LieFamily, n: u32) -> Result<&FamilyRow> {
        self.rows
            .iter()
            .find(|r| r.family == family && r.ranks.admits(n))
            .ok_or_else(|| Error::InvalidParameters(format!("{family} has no row for rank {n}")))
    }

    pub fn zsigmondy_exponent(&self, family: LieFamily, n: u32) -> Result<u32> {
        Ok(self.row(family, n)?.e.eval(n as i64, 0) as u32)
    }

    pub fn order_polynomial(&self, family: LieFamily, n: u32) -> Result<OrderPolynomial> {
        Ok(product(&self.row(family, n)?.order, n as i64, 0, true)?.0)
    }

    pub fn maximal_parabolics(&self, family: LieFamily, n: u32) -> Result<Vec<Parabolic>> {
        let row = self.row(family, n)?;
        let group = self.order_polynomial(family, n)?;
        let p_part = OrderPolynomial::q_power(group.p_part_exponent);
        let mut out = Vec::new();
        for par in &row.parabolics {
            let ks: Vec<i64> = match &par.k_range {
                Some((lo, hi)) => (lo.eval(n as i64, 0)..=hi.eval(n as i64, 0)).collect(),
                None => vec![0],
            };
            for k in ks {
                let (levi, label) = product(&par.components, n as i64, k, false)?;
                out.push(Parabolic {
                    levi: label,
                    order: p_part.mul(&levi),
                });
            }
        }
        Ok(out)
    }
}

fn check_q(row: &FamilyRow, q: u64) -> Result<()> {
    if !row.q_condition.admits(q) {
        return Err(Error::InvalidParameters(format!("q = {q} is not allowed for {}", row.family)));
    }
    Ok(())
}

pub fn zsigmondy_exponent(family: LieFamily, n: u32) -> Result<u32> {
    LieTable::bundled().zsigmondy_exponent(family, n)
}

pub fn order_polynomial(family: LieFamily, n: u32) -> Result<OrderPolynomial> {
    LieTable::bundled().order_polynomial(family, n)
}

/// Order of the universal group, with its polynomial.
pub fn group_order(family: LieFamily, n: u32, q: u64) -> Result<(BigUint, OrderPolynomial)> {
    let table = LieTable::bundled();
    check_q(table.row(family, n)?, q)?;
    let poly = table.order_polynomial(family, n)?;
    Ok((poly.evaluate(q)?, poly))
}

pub fn maximal_parabolic_orders(family: LieFamily, n: u32) -> Result<Vec<Parabolic>> {
    LieTable::bundled().maximal_parabolics(family, n)
}

fn pow_mod4(q: u64, n: u64) -> u64 {
    (0..n).fold(1, |acc, _| acc * (q % 4) % 4)
}

/// Order of the centre of the universal group.
pub fn center_order(family: LieFamily, n: u32, q: u64) -> u64 {
    let n = n as u64;
    match family {
        LieFamily::APlus => (n + 1).gcd(&(q - 1)),
        LieFamily::AMinus => (n + 1).gcd(&(q + 1)),
        LieFamily::B | LieFamily::C | LieFamily::E7 => 2u64.gcd(&(q - 1)),
        LieFamily::DPlus => 4u64.gcd(&((pow_mod4(q, n) + 3) % 4)),
        LieFamily::DMinus => 4u64.gcd(&((pow_mod4(q, n) + 1) % 4)),
        LieFamily::E6Plus => 3u64.gcd(&(q - 1)),
        LieFamily::E6Minus => 3u64.gcd(&(q + 1)),
        _ => 1,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct ExceptionCase {
    pub family: LieFamily,
    pub n: u32,
    pub q: u64,
    pub e: u32,
}

impl fmt::Display for ExceptionCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}({})", self.family, self.n, self.q)
    }
}

/// The smallest rank for which the family gives a simple group in the
/// scan; `A+` starts at 1 but needs `q ≥ 4` there.
fn scan_admits(family: LieFamily, n: u32, q: u64) -> bool {
    !(family == LieFamily::APlus && n == 1 && q < 4)
}

/// Every `(family, n, q)` with `n ≤ n_max`, `q ≤ q_max` and `e ≤ e_max` for
/// which `(q, e)` has no Zsigmondy prime.
pub fn exception_scan(q_max: u64, n_max: u32, e_max: u32) -> Vec<ExceptionCase> {
    let table = LieTable::bundled();
    let mut out = Vec::new();
    for row in &table.rows {
        let ranks: Vec<u32> = (row.ranks.min..=n_max).filter(|&n| row.ranks.admits(n)).collect();
        for n in ranks {
            let e = row.e.eval(n as i64, 0) as u32;
            if e > e_max {
                continue;
            }
            for q in 2..=q_max {
                if !row.q_condition.admits(q) || !scan_admits(row.family, n, q) {
                    continue;
                }
                if !super::zsigmondy::has_zsigmondy_prime(q, e) {
                    out.push(ExceptionCase {
                        family: row.family,
                        n,
                        q,
                        e,
                    });
                }
            }
        }
    }
    out.sort();
    out
}

/// Checks that a Zsigmondy prime `r` for `(q, e)` divides `|K|` and no
/// maximal parabolic order, both by the exponent criterion and by exact
/// valuations. Zsigmondy exceptions are reported as SKIP.
pub fn verify_table2_row(family: LieFamily, n: u32, q: u64) -> Result<ClaimReport> {
    let table = LieTable::bundled();
    let row = table.row(family, n)?;
    check_q(row, q)?;
    let e = table.zsigmondy_exponent(family, n)?;
    let id = format!("table2.{family}.{n}.{q}");
    let group = table.order_polynomial(family, n)?;
    let parabolics = table.maximal_parabolics(family, n)?;
    Ok(ClaimReport::run(id, || {
        let zs = zsigmondy_primes(q, e);
        let Some(r) = zs.smallest().cloned().or_else(|| zs.unfactored.first().cloned()) else {
            return (
                Status::Skip,
                json!({"family": family, "n": n, "q": q, "e": e, "reason": "no Zsigmondy prime for (q, e)"}),
            );
        };
        let criterion_valid = parabolics
            .iter()
            .map(|p| &p.order)
            .chain(std::iter::once(&group))
            .all(|p| (p.max_exponent() as u64) < e as u64 * (e as u64 + 1));
        let g_mult = group.zsigmondy_multiplicity(e);
        let g_val = group.valuation(q, &r);
        let center = center_order(family, n, q);
        let center_ok = BigUint::from(center) % &r != BigUint::from(0u32);
        let mut all_ok = g_mult > 0 && g_val > 0 && center_ok;
        let mut rows = Vec::new();
        for p in &parabolics {
            let m = p.order.zsigmondy_multiplicity(e);
            let v = p.order.valuation(q, &r);
            let ok = v == 0 && (m == 0 || !criterion_valid);
            all_ok &= ok;
            rows.push(json!({"levi": p.levi, "order": p.order.to_string(), "multiplicity": m, "valuation": v}));
        }
        (
            Status::from_bool(all_ok),
            json!({
                "family": family, "n": n, "q": q, "e": e,
                "r": r.to_string(),
                "group_order": group.to_string(),
                "group_multiplicity": g_mult,
                "group_valuation": g_val,
                "center_order": center,
                "parabolics": rows,
            }),
        )
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expressions() {
        let e = Expr::parse("2n+2").unwrap();
        assert_eq!(e.eval(3, 0), 8);
        assert_eq!(Expr::parse("(n+1)/2").unwrap().eval(5, 0), 3);
        assert_eq!(Expr::parse("n+1-2k").unwrap().eval(5, 2), 2);
        assert!(Expr::parse("n+").is_err());
    }

    #[test]
    fn table_parses_every_family() {
        let t = LieTable::bundled();
        for f in LieFamily::ALL {
            assert!(t.rows.iter().any(|r| r.family == f), "{f}");
        }
    }

    #[test]
    fn table2_exponents() {
        use LieFamily::*;
        let cases = [
            (APlus, 4, 5),
            (AMinus, 4, 10),
            (AMinus, 5, 10),
            (B, 3, 6),
            (C, 5, 10),
            (DPlus, 5, 8),
            (DMinus, 4, 8),
            (TrialityD4, 4, 12),
            (G2, 2, 6),
            (F4, 4, 12),
            (E6Plus, 6, 12),
            (E6Minus, 6, 12),
            (E7, 7, 18),
            (E8, 8, 30),
            (SuzukiB2, 2, 4),
            (ReeF4, 4, 12),
            (ReeG2, 2, 6),
        ];
        for (f, n, e) in cases {
            assert_eq!(zsigmondy_exponent(f, n).unwrap(), e, "{f}_{n}");
        }
        assert!(zsigmondy_exponent(B, 2).is_err());
    }

    #[test]
    fn e8_data() {
        let g = order_polynomial(LieFamily::E8, 8).unwrap();
        assert_eq!(g.p_part_exponent, 120);
        let bs: Vec<u32> = g.factors().map(|(b, _)| b).collect();
        assert_eq!(bs, vec![2, 8, 12, 14, 18, 20, 24, 30]);
        let levis: Vec<String> = maximal_parabolic_orders(LieFamily::E8, 8)
            .unwrap()
            .into_iter()
            .map(|p| p.levi)
            .collect();
        for listed in ["D(7)", "A(1) A(6)", "A(2) A(1) A(4)", "A(4) A(3)", "D(5) A(2)", "E6 A(1)", "E7"] {
            assert!(levis.iter().any(|l| l == &format!("c(1) {listed}")), "{listed}");
        }
        assert_eq!(levis.len(), 8);
    }

    #[test]
    fn q_conditions() {
        let t = LieTable::bundled();
        let sz = t.row(LieFamily::SuzukiB2, 2).unwrap();
        assert!(sz.q_condition.admits(8) && sz.q_condition.admits(32));
        assert!(!sz.q_condition.admits(2) && !sz.q_condition.admits(4));
        let f4 = t.row(LieFamily::ReeF4, 4).unwrap();
        assert!(f4.q_condition.admits(2));
        assert!(group_order(LieFamily::APlus, 2, 6).is_err());
    }

    #[test]
    fn center_orders() {
        assert_eq!(center_order(LieFamily::DPlus, 4, 3), 4);
        assert_eq!(center_order(LieFamily::DPlus, 5, 3), 2);
        assert_eq!(center_order(LieFamily::DPlus, 5, 5), 4);
        assert_eq!(center_order(LieFamily::DMinus, 5, 3), 4);
        assert_eq!(center_order(LieFamily::DMinus, 4, 3), 2);
        assert_eq!(center_order(LieFamily::DMinus, 4, 2), 1);
        for (f, n, q) in [(LieFamily::DPlus, 5u32, 7u64), (LieFamily::DMinus, 6, 9), (LieFamily::DPlus, 6, 5)] {
            let direct = if f == LieFamily::DPlus { q.pow(n) - 1 } else { q.pow(n) + 1 };
            assert_eq!(center_order(f, n, q), 4u64.gcd(&direct));
        }
    }
}
