use std::io::Write;
use std::path::Path;
use std::process::ExitCode;

use clap::builder::BoolishValueParser;
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use cosetkit::acceptance::{run_criterion, AcceptanceOptions, CriterionReport, TITLES};
use cosetkit::homology::{
    checked_rational_betti, euler_characteristic, kunneth_betti, order_complex, reduced_betti, Field,
    SimplicialComplex, DEFAULT_FACE_CAP,
};
use cosetkit::invgen::{check_alternating, invariably_generates_with, ScanMode, ScanOptions};
use cosetkit::lattice::{SubgroupLattice, DEFAULT_LATTICE_CAP};
use cosetkit::lietype::zsigmondy::is_zsigmondy_exception;
use cosetkit::lietype::{lemma6_certificate, verify_table2_row, zsigmondy_primes, LieFamily};
use cosetkit::permgroup::io::parse_group;
use cosetkit::permgroup::{GeneratedGroup, Permutation, DEFAULT_ELEMENT_CAP};
use cosetkit::report::{combine, ClaimReport, Status};
use cosetkit::smiththeory::fixed_point_pipeline;
use cosetkit::{atlasdata, corpus, data, Error};

#[derive(Parser)]
#[command(name = "cosetkit", version, about = "Checks invariable generation and coset poset homology claims")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Global {
    /// Group: a file in `degree n` format, a corpus name, a bundled name
    /// (m11, m12, m24, u4_2, sp6_2), or An, Sn, Cn, Dn.
    #[arg(long, global = true, env = "COSETKIT_GROUP")]
    group: Option<String>,
    /// Coefficient field: Q, F2, F3, ... or Fp:7.
    #[arg(long, global = true, env = "COSETKIT_FIELD", default_value = "Q")]
    field: Field,
    /// Largest group or orbit enumerated in full.
    #[arg(long, global = true, env = "COSETKIT_CAP_ELEMENTS", default_value_t = DEFAULT_ELEMENT_CAP)]
    cap_elements: u128,
    /// Largest order complex, counted in faces.
    #[arg(long, global = true, env = "COSETKIT_CAP_FACES", default_value_t = DEFAULT_FACE_CAP)]
    cap_faces: u128,
    /// Largest group order for subgroup lattices.
    #[arg(long, global = true, env = "COSETKIT_CAP_LATTICE", default_value_t = DEFAULT_LATTICE_CAP)]
    cap_lattice: u128,
    /// Worker threads. Results do not depend on this.
    #[arg(long, global = true, env = "COSETKIT_JOBS", default_value_t = 1)]
    jobs: usize,
    /// Print JSON instead of text.
    #[arg(long, global = true, env = "COSETKIT_JSON", value_parser = BoolishValueParser::new())]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Whether `S` and `T` generate the group invariably.
    Invgen {
        /// Elements of S in cycle notation, separated by `;`.
        #[arg(long)]
        left: String,
        /// Elements of T in cycle notation, separated by `;`.
        #[arg(long)]
        right: String,
        /// Scan conjugates of the tuple T instead of the subgroup ⟨T⟩.
        #[arg(long)]
        elements: bool,
    },
    /// The standard pair for A_n, for each n in a range such as 5..12.
    Alternating {
        #[arg(long, default_value = "5..12")]
        n: String,
    },
    /// M11 and M12 claims, positive and negative.
    Mathieu,
    /// Size statistics of the coset poset, optionally as Graphviz DOT.
    CosetPoset {
        /// Print DOT (posets of at most 500 elements).
        #[arg(long)]
        dot: bool,
    },
    /// Reduced Betti numbers of a complex given by facets, one per line.
    Homology {
        #[arg(long)]
        facets: String,
    },
    /// Reduced Betti numbers of the order complex of the coset poset.
    CosetHomology {
        /// Restrict to the cosets of subgroups supplementing the normal
        /// subgroup of this order.
        #[arg(long)]
        normal_order: Option<usize>,
    },
    /// Join decomposition over each minimal normal subgroup.
    BrownEuler,
    /// Fixed point pipeline for C × P acting on the cosets supplementing N.
    SmithCheck {
        /// Generators of C, separated by `;`. Defaults to (0 1 2 3 4).
        #[arg(long)]
        c: Option<String>,
        /// Generators of P, separated by `;`. Defaults to (0 1)(2 3);(0 2)(1 3).
        #[arg(long)]
        p: Option<String>,
        /// Order of N. Defaults to the first minimal normal subgroup.
        #[arg(long)]
        normal_order: Option<usize>,
    },
    /// Zsigmondy primes for (q, e).
    Zsigmondy {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        e: u32,
    },
    /// Parabolic divisibility check for one group of Lie type.
    Table2 {
        /// Family tag: A+, A-, B, C, D+, D-, 3D4, G2, F4, E6+, E6-, E7, E8, 2B2, 2G2, 2F4.
        #[arg(long, allow_hyphen_values = true)]
        family: LieFamily,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        q: u64,
    },
    /// Sporadic group divisibility checks; all rows unless a name is given.
    Table1 {
        #[arg(long)]
        name: Option<String>,
        #[arg(long, requires = "name")]
        p: Option<u64>,
        #[arg(long, requires = "name")]
        r: Option<u64>,
    },
    /// The GL6(2) certificate.
    Lemma6,
    /// The full acceptance suite, or selected criteria.
    Corpus {
        /// Criteria to run, e.g. 1,4,7. Defaults to all.
        #[arg(long, value_delimiter = ',')]
        criteria: Vec<u8>,
    },
}

enum Output {
    Claims(Vec<ClaimReport>),
    Criteria(Vec<CriterionReport>),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => emit(&out, cli.global.json),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn emit(out: &Output, as_json: bool) -> ExitCode {
    let status = match out {
        Output::Claims(c) => combine(c.iter().map(|c| c.status)),
        Output::Criteria(c) => combine(c.iter().map(|c| c.status)),
    };
    let mut text = String::new();
    if as_json {
        let v = match out {
            Output::Claims(c) => serde_json::to_value(c),
            Output::Criteria(c) => serde_json::to_value(c),
        }
        .expect("reports serialize");
        text = serde_json::to_string_pretty(&v).expect("json") + "\n";
    } else {
        match out {
            Output::Claims(claims) => {
                for c in claims {
                    text += &format!("{}\n  {}\n", c.line(), c.details);
                }
            }
            Output::Criteria(crit) => {
                for r in crit {
                    text += &format!("{}\n", r.line());
                    for c in r.claims.iter().filter(|c| c.status != Status::Pass) {
                        text += &format!("  {} {}\n", c.line(), c.details);
                    }
                }
            }
        }
    }
    // a closed pipe (e.g. `| head`) is not an error worth reporting
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
    match status {
        Status::Fail => ExitCode::from(1),
        _ => ExitCode::SUCCESS,
    }
}

fn load_group(arg: Option<&str>) -> Result<GeneratedGroup, Error> {
    let arg = arg.ok_or_else(|| Error::InvalidParameters("--group is required".into()))?;
    if Path::new(arg).is_file() {
        let text = std::fs::read_to_string(arg).map_err(|e| Error::InvalidParameters(format!("{arg}: {e}")))?;
        return parse_group(&text);
    }
    data::by_name(arg)
        .or_else(|| corpus::named(arg))
        .ok_or_else(|| Error::UnknownName(arg.to_string()))
}

fn parse_perms(degree: usize, text: &str) -> Result<Vec<Permutation>, Error> {
    text.split(';')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| Permutation::parse_cycles(degree, s))
        .collect()
}

fn parse_range(s: &str) -> Result<Vec<usize>, Error> {
    let bad = || Error::InvalidParameters(format!("bad range {s:?}"));
    match s.split_once("..") {
        Some((a, b)) => {
            let a: usize = a.trim().parse().map_err(|_| bad())?;
            let b: usize = b.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
            Ok((a..=b).collect())
        }
        None => Ok(vec![s.trim().parse().map_err(|_| bad())?]),
    }
}

fn scan_options(g: &Global) -> ScanOptions {
    ScanOptions {
        mode: ScanMode::Subgroups,
        cap: g.cap_elements,
        jobs: g.jobs.max(1),
    }
}

fn acceptance_options(g: &Global) -> AcceptanceOptions {
    AcceptanceOptions {
        scan: scan_options(g),
        face_cap: g.cap_faces,
        lattice_cap: g.cap_lattice,
        ..AcceptanceOptions::default()
    }
}

/// Runs `f`, turning an error into a FAIL claim carrying the message.
fn claim<F>(id: impl Into<String>, f: F) -> ClaimReport
where
    F: FnOnce() -> Result<(Status, Value), Error>,
{
    ClaimReport::run(id, || f().unwrap_or_else(|e| (Status::Fail, json!({"error": e.to_string()}))))
}

fn run(cli: &Cli) -> Result<Output, Error> {
    let g = &cli.global;
    let one = |c: ClaimReport| Ok(Output::Claims(vec![c]));
    match &cli.command {
        Command::Invgen { left, right, elements } => {
            let grp = load_group(g.group.as_deref())?;
            let (s, t) = (parse_perms(grp.degree(), left)?, parse_perms(grp.degree(), right)?);
            let mut opts = scan_options(g);
            if *elements {
                opts.mode = ScanMode::Elements;
            }
            one(claim("invgen", || {
                let v = invariably_generates_with(&grp, &s, &t, &opts)?;
                Ok((
                    Status::from_bool(v.holds),
                    json!({"group_order": grp.order().to_string(), "verdict": v}),
                ))
            }))
        }
        Command::Alternating { n } => {
            let opts = scan_options(g);
            let ns = parse_range(n)?;
            if ns.iter().any(|&n| n < 5) {
                return Err(Error::InvalidParameters("n must be at least 5".into()));
            }
            Ok(Output::Claims(
                ns.into_iter()
                    .map(|n| {
                        claim(format!("alternating.A{n}"), || {
                            let c = check_alternating(n, &opts)?;
                            Ok((Status::from_bool(c.verdict.holds), serde_json::to_value(&c).unwrap()))
                        })
                    })
                    .collect(),
            ))
        }
        Command::Mathieu => Ok(Output::Claims(run_criterion(2, &acceptance_options(g)).claims)),
        Command::CosetPoset { dot } => {
            let grp = load_group(g.group.as_deref())?;
            let lat = SubgroupLattice::with_cap(&grp, g.cap_lattice)?;
            let cp = lat.coset_poset();
            if *dot {
                if cp.len() > 500 {
                    return Err(Error::CapExceeded {
                        what: "DOT output",
                        needed: cp.len() as u128,
                        cap: 500,
                    });
                }
                let _ = std::io::stdout().lock().write_all(cp.to_dot().as_bytes());
                return Ok(Output::Claims(Vec::new()));
            }
            let chains = cp.poset.chain_counts();
            one(ClaimReport::run("coset-poset", || {
                (
                    Status::Pass,
                    json!({
                        "group_order": lat.order(),
                        "subgroups": lat.len(),
                        "cosets": cp.len(),
                        "relations": cp.poset.relation_count(),
                        "chains_by_length": chains.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                        "euler": cp.poset.reduced_euler_characteristic().to_string(),
                    }),
                )
            }))
        }
        Command::Homology { facets } => {
            let text = std::fs::read_to_string(facets).map_err(|e| Error::InvalidParameters(format!("{facets}: {e}")))?;
            let k = parse_facets(&text)?;
            one(homology_claim("homology", &k, g.field))
        }
        Command::CosetHomology { normal_order } => {
            let grp = load_group(g.group.as_deref())?;
            let lat = SubgroupLattice::with_cap(&grp, g.cap_lattice)?;
            let (cp, label) = match normal_order {
                None => (lat.coset_poset(), "coset-homology".to_string()),
                Some(k) => {
                    let n = normal_of_order(&lat, *k)?;
                    (lat.brown_subposet(n)?, format!("coset-homology.N{k}"))
                }
            };
            let k = order_complex(&cp.poset, g.cap_faces)?;
            let mut rep = homology_claim(&label, &k, g.field);
            if normal_order.is_none() {
                // the Euler characteristic must match -P(G,-1)
                let minus_p = -lat.zeta_at_minus_one();
                let chi = euler_characteristic(&k);
                rep.details["minus_p_at_minus_one"] = json!(minus_p.to_string());
                if chi != minus_p {
                    rep.status = Status::Fail;
                }
            }
            one(rep)
        }
        Command::BrownEuler => {
            let grp = load_group(g.group.as_deref())?;
            let lat = SubgroupLattice::with_cap(&grp, g.cap_lattice)?;
            let whole = reduced_betti(&order_complex(&lat.coset_poset().poset, g.cap_faces)?, g.field);
            let mut claims = Vec::new();
            for n in lat.minimal_normal_subgroups() {
                let order = lat.subgroup(n).order;
                claims.push(claim(format!("brown-euler.N{order}"), || {
                    let brown = reduced_betti(&order_complex(&lat.brown_subposet(n)?.poset, g.cap_faces)?, g.field);
                    let q = lat.quotient(n)?;
                    let ql = SubgroupLattice::with_cap(&q, g.cap_lattice)?;
                    let quot = reduced_betti(&order_complex(&ql.coset_poset().poset, g.cap_faces)?, g.field);
                    let joined = kunneth_betti(&brown, &quot)?;
                    let (eb, eq, ew) = (brown.euler_characteristic(), quot.euler_characteristic(), whole.euler_characteristic());
                    Ok((
                        Status::from_bool(joined == whole && ew == -eb * eq),
                        json!({
                            "field": g.field.to_string(),
                            "whole": whole.betti,
                            "brown": brown.betti,
                            "quotient": quot.betti,
                            "euler": {"whole": ew.to_string(), "brown": eb.to_string(), "quotient": eq.to_string()},
                        }),
                    ))
                }));
            }
            Ok(Output::Claims(claims))
        }
        Command::SmithCheck { c, p, normal_order } => {
            let grp = load_group(g.group.as_deref())?;
            let lat = SubgroupLattice::with_cap(&grp, g.cap_lattice)?;
            let n = match normal_order {
                Some(k) => normal_of_order(&lat, *k)?,
                None => lat.minimal_normal_subgroups()[0],
            };
            let c = parse_perms(grp.degree(), c.as_deref().unwrap_or("(0 1 2 3 4)"))?;
            let p = parse_perms(grp.degree(), p.as_deref().unwrap_or("(0 1)(2 3);(0 2)(1 3)"))?;
            one(claim("smith-check", || {
                let r = fixed_point_pipeline(&lat, n, &c, &p, g.cap_faces)?;
                Ok((Status::from_bool(r.holds), serde_json::to_value(&r).unwrap()))
            }))
        }
        Command::Zsigmondy { q, e } => {
            if *q < 2 || *e < 1 {
                return Err(Error::InvalidParameters("need q >= 2 and e >= 1".into()));
            }
            let z = zsigmondy_primes(*q, *e);
            let exception = is_zsigmondy_exception(*q, *e);
            one(ClaimReport::run(format!("zsigmondy.{q}.{e}"), || {
                (
                    Status::from_bool(z.is_empty() == exception),
                    json!({"primes": z.primes.iter().map(|r| r.to_string()).collect::<Vec<_>>(), "exception": exception}),
                )
            }))
        }
        Command::Table2 { family, n, q } => one(verify_table2_row(*family, *n, *q)?),
        Command::Table1 { name, p, r } => match name {
            None => Ok(Output::Claims(atlasdata::verify_table1())),
            Some(name) => {
                let (p, r) = match (p, r) {
                    (Some(p), Some(r)) => (*p, *r),
                    _ => atlasdata::TABLE1
                        .iter()
                        .find(|row| row.0.eq_ignore_ascii_case(name))
                        .map(|row| (row.1, row.2))
                        .ok_or_else(|| Error::UnknownName(name.clone()))?,
                };
                one(atlasdata::verify_table1_row(name, p, r))
            }
        },
        Command::Lemma6 => one(lemma6_certificate()),
        Command::Corpus { criteria } => {
            let wanted: Vec<u8> = if criteria.is_empty() {
                (1..=TITLES.len() as u8).collect()
            } else {
                criteria.clone()
            };
            if let Some(bad) = wanted.iter().find(|&&n| n == 0 || n as usize > TITLES.len()) {
                return Err(Error::InvalidParameters(format!("no criterion {bad}")));
            }
            let opts = acceptance_options(g);
            Ok(Output::Criteria(wanted.into_iter().map(|n| run_criterion(n, &opts)).collect()))
        }
    }
}

fn normal_of_order(lat: &SubgroupLattice, k: usize) -> Result<usize, Error> {
    lat.normal_subgroups()
        .into_iter()
        .find(|&n| lat.subgroup(n).order == k)
        .ok_or_else(|| Error::InvalidParameters(format!("no normal subgroup of order {k}")))
}

fn parse_facets(text: &str) -> Result<SimplicialComplex, Error> {
    let mut facets = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let f = line
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| Error::Parse {
                line: i + 1,
                msg: e.to_string(),
            })?;
        facets.push(f);
    }
    let n = facets.iter().flatten().max().map_or(0, |m| m + 1);
    SimplicialComplex::from_facets(n, &facets)
}

fn homology_claim(id: &str, k: &SimplicialComplex, field: Field) -> ClaimReport {
    ClaimReport::run(id, || {
        let faces: Vec<String> = k.face_counts().counts.iter().map(|c| c.to_string()).collect();
        let euler = euler_characteristic(k);
        match field {
            Field::Rational => {
                let c = checked_rational_betti(k, 0x5eed);
                let ok = c.agree && c.profile.euler_characteristic() == euler;
                (
                    Status::from_bool(ok),
                    json!({"field": "Q", "betti": c.profile.betti, "euler": euler.to_string(), "faces": faces, "modular_check": c.agree}),
                )
            }
            f => {
                let b = reduced_betti(k, f);
                (
                    Status::from_bool(b.euler_characteristic() == euler),
                    json!({"field": f.to_string(), "betti": b.betti, "euler": euler.to_string(), "faces": faces}),
                )
            }
        }
    })
}
