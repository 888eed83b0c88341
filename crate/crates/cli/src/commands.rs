use std::fmt::Write as _;
use std::io::Write;

use esd_core::check::{CheckReport, Suite};
use esd_core::complex::f_from_h;
use esd_core::edgewise::esd_simplex;
use esd_core::smirnov::{
    enumerate_words, hop_class, local_h_via_operator, local_h_via_words, xi_coefficients, XiMethod,
};
use esd_core::triangulation::TriangulationJson;
use esd_core::{Int, IntGammaVector, IntPolynomial, SmirnovWord};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::render::{columns, tuple, Format, Rendered, Table};
use crate::{CliError, Ctx, GammaMethod, LocalMethod};

pub const MAX_N: usize = 7;
pub const MAX_R: usize = 6;
/// Upper bound on `(r-1)^(n-1)`, roughly the number of words visited.
const MAX_WORDS: u64 = 20_000_000;

pub fn guard_lattice(ctx: &Ctx, n: usize, r: usize) -> Result<(), CliError> {
    if !ctx.unsafe_large && (n > MAX_N || r > MAX_R) {
        return Err(CliError::Usage(format!(
            "n = {n}, r = {r} exceeds the caps n <= {MAX_N}, r <= {MAX_R} for commands that build the face \
             lattice; pass --unsafe-large to override"
        )));
    }
    Ok(())
}

pub fn guard_words(ctx: &Ctx, n: usize, r: usize) -> Result<(), CliError> {
    let estimate = (r.saturating_sub(1) as u64).checked_pow(n.saturating_sub(1) as u32);
    if !ctx.unsafe_large && estimate.is_none_or(|e| e > MAX_WORDS) {
        return Err(CliError::Usage(format!(
            "enumerating Smirnov words for n = {n}, r = {r} visits more than {MAX_WORDS} words; \
             pass --unsafe-large to override"
        )));
    }
    Ok(())
}

fn poly_json(p: &IntPolynomial) -> Value {
    serde_json::to_value(p).expect("polynomials serialize")
}

fn xi_tuple(g: &IntGammaVector) -> String {
    tuple(&g.xi)
}

pub fn esd(ctx: &Ctx, n: usize, r: usize) -> Result<Rendered, CliError> {
    guard_lattice(ctx, n, r)?;
    let t = esd_simplex(n, r)?;
    let c = t.complex();
    let f = c.f_vector()?;
    let h = c.h_polynomial()?;
    let ell = t.local_h();
    let flag = c.is_flag();

    let mut json =
        serde_json::to_value(TriangulationJson::from_triangulation(&t)).expect("serializable");
    let obj = json.as_object_mut().expect("object");
    obj.insert("n".into(), json!(n));
    obj.insert("r".into(), json!(r));
    obj.insert("f_vector".into(), json!(f.0));
    obj.insert("h".into(), poly_json(&h));
    obj.insert("local_h".into(), poly_json(&ell));
    obj.insert("flag".into(), json!(flag));

    let mut table = Table::new(&["vertex", "composition", "carrier"]);
    for (v, carrier) in t.carriers() {
        table.push(vec![v.to_string(), c.label(*v), tuple(carrier.vertices())]);
    }

    let pretty = columns(&[
        vec![
            "edgewise subdivision".into(),
            format!("esd_{r} of the simplex on {n} vertices"),
        ],
        vec!["vertices".into(), t.carriers().len().to_string()],
        vec!["facets".into(), c.facets().len().to_string()],
        vec!["f-vector".into(), tuple(&f.0)],
        vec!["h".into(), h.to_string()],
        vec!["local h".into(), ell.to_string()],
        vec!["flag".into(), ctx.style.flag(flag)],
    ]);
    Ok(Rendered {
        json,
        table,
        pretty,
        ok: true,
    })
}

pub fn local_h(ctx: &Ctx, n: usize, r: usize, method: LocalMethod) -> Result<Rendered, CliError> {
    let methods: Vec<LocalMethod> = match method {
        LocalMethod::All => vec![
            LocalMethod::Definitional,
            LocalMethod::Operator,
            LocalMethod::Words,
        ],
        m => vec![m],
    };
    let mut results = Vec::new();
    for m in &methods {
        let p = match m {
            LocalMethod::Definitional => {
                guard_lattice(ctx, n, r)?;
                esd_simplex(n, r)?.local_h()
            }
            LocalMethod::Operator => local_h_via_operator(n, r)?,
            LocalMethod::Words => {
                guard_words(ctx, n, r)?;
                local_h_via_words(n, r)?
            }
            LocalMethod::All => unreachable!(),
        };
        results.push((m.name(), p));
    }
    let agree = results.windows(2).all(|w| w[0].1 == w[1].1);

    let json = json!({
        "n": n,
        "r": r,
        "results": results.iter().map(|(m, p)| json!({"method": m, "local_h": poly_json(p)})).collect::<Vec<_>>(),
        "agree": agree,
    });
    let mut table = Table::new(&["n", "r", "method", "local_h", "agree"]);
    for (m, p) in &results {
        table.push(vec![
            n.to_string(),
            r.to_string(),
            (*m).into(),
            p.to_string(),
            agree.to_string(),
        ]);
    }
    let mut rows: Vec<Vec<String>> = results
        .iter()
        .map(|(m, p)| vec![format!("{m}:"), p.to_string()])
        .collect();
    rows.push(vec!["agree:".into(), ctx.style.flag(agree)]);
    Ok(Rendered {
        json,
        table,
        pretty: columns(&rows),
        ok: agree,
    })
}

pub fn gamma(ctx: &Ctx, n: usize, r: usize, method: GammaMethod) -> Result<Rendered, CliError> {
    let methods: Vec<(&str, XiMethod)> = match method {
        GammaMethod::Words => vec![("words", XiMethod::Words)],
        GammaMethod::Expand => vec![("expand", XiMethod::GammaExpand)],
        GammaMethod::Both => vec![
            ("words", XiMethod::Words),
            ("expand", XiMethod::GammaExpand),
        ],
    };
    let mut results = Vec::new();
    for (name, m) in methods {
        if m == XiMethod::Words {
            guard_words(ctx, n, r)?;
        }
        results.push((name, xi_coefficients(n, r, m)?));
    }
    let agree = results.windows(2).all(|w| w[0].1 == w[1].1);
    let nonnegative = results.iter().all(|(_, g)| g.is_nonnegative());

    let json = json!({
        "n": n,
        "r": r,
        "gamma": serde_json::to_value(&results[0].1).expect("serializable"),
        "results": results
            .iter()
            .map(|(m, g)| json!({"method": m, "gamma": serde_json::to_value(g).expect("serializable")}))
            .collect::<Vec<_>>(),
        "agree": agree,
        "nonnegative": nonnegative,
    });
    let mut table = Table::new(&["method", "i", "xi"]);
    for (m, g) in &results {
        for (i, x) in g.xi.iter().enumerate() {
            table.push(vec![(*m).into(), i.to_string(), x.to_string()]);
        }
    }
    let mut rows: Vec<Vec<String>> = results
        .iter()
        .map(|(m, g)| vec![format!("xi ({m}):"), xi_tuple(g)])
        .collect();
    rows.push(vec!["agree:".into(), ctx.style.flag(agree)]);
    rows.push(vec!["nonnegative:".into(), ctx.style.flag(nonnegative)]);
    Ok(Rendered {
        json,
        table,
        pretty: columns(&rows),
        ok: agree,
    })
}

pub fn words(
    ctx: &Ctx,
    n: usize,
    r: usize,
    canonical_only: bool,
    stats: bool,
) -> Result<Rendered, CliError> {
    guard_words(ctx, n, r)?;
    let words: Vec<SmirnovWord> = enumerate_words(n, r)?
        .into_iter()
        .filter(|w| !canonical_only || w.is_canonical())
        .collect();

    let header: &[&str] = if stats {
        &[
            "word",
            "asc",
            "des",
            "double_ascents",
            "double_descents",
            "matches",
            "canonical",
        ]
    } else {
        &["word", "asc", "des"]
    };
    let mut table = Table::new(header);
    let mut json_rows = Vec::new();
    let mut by_asc = vec![0usize; n + 1];
    for w in &words {
        let s = w.stats();
        by_asc[s.asc] += 1;
        let mut row = vec![w.to_string(), s.asc.to_string(), s.des.to_string()];
        let mut obj = json!({"word": w.entries(), "asc": s.asc, "des": s.des});
        if stats {
            let matches = w.match_count();
            let canonical = w.is_canonical();
            row.extend([
                tuple(&s.double_ascents),
                tuple(&s.double_descents),
                matches.to_string(),
                canonical.to_string(),
            ]);
            let o = obj.as_object_mut().expect("object");
            o.insert("double_ascents".into(), json!(s.double_ascents));
            o.insert("double_descents".into(), json!(s.double_descents));
            o.insert("matches".into(), json!(matches));
            o.insert("canonical".into(), json!(canonical));
        }
        table.push(row);
        json_rows.push(obj);
    }

    let mut pretty_rows = vec![header.iter().map(|h| h.to_string()).collect::<Vec<_>>()];
    pretty_rows.extend(table.rows.iter().cloned());
    let mut pretty = columns(&pretty_rows);
    let _ = writeln!(pretty, "{} words", words.len());
    if stats {
        let dist: Vec<String> = by_asc
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(a, c)| format!("{a}:{c}"))
            .collect();
        let _ = writeln!(pretty, "ascent distribution {{{}}}", dist.join(", "));
    }
    Ok(Rendered {
        json: json!({"n": n, "r": r, "words": json_rows}),
        table,
        pretty,
        ok: true,
    })
}

pub fn hop(ctx: &Ctx, word: &SmirnovWord) -> Result<Rendered, CliError> {
    let class = hop_class(word)?;
    let poly = class.polynomial();
    let closed = class.closed_form();
    let ok = poly == closed && class.len() == 1 << class.m;

    let json = json!({
        "word": word.entries(),
        "canonical": class.canonical.entries(),
        "m": class.m,
        "members": class.members.iter().map(|u| json!({"word": u.entries(), "asc": u.asc()})).collect::<Vec<_>>(),
        "polynomial": poly_json(&poly),
        "closed_form": poly_json(&closed),
        "agree": ok,
    });
    let mut table = Table::new(&["word", "asc", "canonical"]);
    for u in &class.members {
        table.push(vec![
            u.to_string(),
            u.asc().to_string(),
            (*u == class.canonical).to_string(),
        ]);
    }
    let mut rows = vec![
        vec!["canonical".into(), class.canonical.to_string()],
        vec!["m".into(), class.m.to_string()],
        vec!["size".into(), class.len().to_string()],
        vec!["polynomial".into(), poly.to_string()],
        vec!["x^asc (1+x)^m".into(), closed.to_string()],
    ];
    for u in &class.members {
        rows.push(vec!["member".into(), format!("{u}  asc {}", u.asc())]);
    }
    rows.push(vec!["agree".into(), ctx.style.flag(ok)]);
    Ok(Rendered {
        json,
        table,
        pretty: columns(&rows),
        ok,
    })
}

/// `1,1,1` and `(1, 1, 1)` both become `(1,1,1)`.
fn normalize_label(s: &str) -> String {
    let inner: String = s
        .chars()
        .filter(|c| !c.is_whitespace() && *c != '(' && *c != ')')
        .collect();
    format!("({inner})")
}

pub fn interior_lifts(
    ctx: &Ctx,
    n: usize,
    r: usize,
    p: Option<&str>,
) -> Result<Rendered, CliError> {
    // the lift adds one base vertex
    guard_lattice(ctx, n + 1, r)?;
    let t = esd_simplex(n, r)?;
    let targets: Vec<usize> = match p {
        Some(label) => {
            let want = normalize_label(label);
            let v = t
                .carriers()
                .keys()
                .copied()
                .find(|&v| t.complex().label(v) == want)
                .ok_or_else(|| {
                    CliError::Usage(format!("{want} is not a vertex of esd_{r} on {n} vertices"))
                })?;
            vec![v]
        }
        None => t.interior_vertices().into_iter().collect(),
    };

    let mut results = Vec::new();
    for v in targets {
        let lifted = t.lift_interior_vertex(v)?;
        let ell = lifted.local_h();
        let expected = t.lifted_link_h(v)?;
        let flag = !t.complex().is_flag() || lifted.complex().is_flag();
        results.push((t.complex().label(v), ell, expected, flag));
    }
    let ok = results
        .iter()
        .all(|(_, ell, expected, flag)| ell == expected && *flag);

    let json = json!({
        "n": n,
        "r": r,
        "results": results
            .iter()
            .map(|(p, ell, expected, flag)| json!({
                "p": p,
                "local_h": poly_json(ell),
                "x_h_link": poly_json(expected),
                "agree": ell == expected,
                "flag_preserved": flag,
            }))
            .collect::<Vec<_>>(),
        "agree": ok,
    });
    let mut table = Table::new(&["p", "local_h", "x_h_link", "agree", "flag_preserved"]);
    let mut rows = vec![vec![
        "p".into(),
        "local h of lift".into(),
        "x h(link)".into(),
        "agree".into(),
    ]];
    for (p, ell, expected, flag) in &results {
        table.push(vec![
            p.clone(),
            ell.to_string(),
            expected.to_string(),
            (ell == expected).to_string(),
            flag.to_string(),
        ]);
        rows.push(vec![
            p.clone(),
            ell.to_string(),
            expected.to_string(),
            ctx.style.flag(ell == expected && *flag),
        ]);
    }
    let mut pretty = columns(&rows);
    if results.is_empty() {
        let _ = writeln!(pretty, "esd_{r} on {n} vertices has no interior vertices");
    }
    Ok(Rendered {
        json,
        table,
        pretty,
        ok,
    })
}

pub fn check(
    ctx: &Ctx,
    suite: Option<Suite>,
    n_max: Option<usize>,
    r_max: Option<usize>,
) -> Result<Rendered, CliError> {
    let mut suites: Vec<Suite> = suite.map_or_else(|| Suite::ALL.to_vec(), |s| vec![s]);
    for s in &suites {
        let (dn, dr) = s.default_grid();
        let (n, r) = (n_max.unwrap_or(dn), r_max.unwrap_or(dr));
        match s {
            Suite::LocalH | Suite::HPolynomial | Suite::Lift | Suite::Structure => {
                guard_lattice(ctx, n + usize::from(matches!(s, Suite::Lift)), r)?
            }
            Suite::Gamma | Suite::Hopping => guard_words(ctx, n, r)?,
            _ => {}
        }
    }
    if let Some(seed) = ctx.seed {
        suites.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    }
    let mut reports: Vec<(Suite, CheckReport)> = suites
        .into_iter()
        .map(|s| (s, s.run(n_max, r_max)))
        .collect();
    reports.sort_by_key(|(s, _)| *s);
    let ok = reports.iter().all(|(_, r)| r.passed());

    let json = json!({
        "passed": ok,
        "reports": reports.iter().map(|(_, r)| serde_json::to_value(r).expect("serializable")).collect::<Vec<_>>(),
    });
    let mut table = Table::new(&["check", "params", "status", "witness"]);
    let mut pretty = String::new();
    for (_, report) in &reports {
        for cell in &report.cells {
            let status = if cell.passed() { "pass" } else { "fail" };
            table.push(vec![
                report.check_name.clone(),
                cell.params.clone(),
                status.into(),
                cell.witness().unwrap_or("").into(),
            ]);
        }
        let _ = writeln!(
            pretty,
            "{:<15}  {}  {} cells  [{}]",
            report.check_name,
            ctx.style.pass_fail(report.passed()),
            report.cells.len(),
            report.parameter_grid
        );
        for cell in report.failures() {
            let _ = writeln!(
                pretty,
                "    {}: {}",
                cell.params,
                cell.witness().unwrap_or("")
            );
        }
    }
    let failing: usize = reports.iter().map(|(_, r)| r.failures().count()).sum();
    if ok {
        let _ = writeln!(pretty, "all checks passed");
    } else {
        let _ = writeln!(pretty, "{failing} failing cells");
    }
    Ok(Rendered {
        json,
        table,
        pretty,
        ok,
    })
}

pub fn roots(ctx: &Ctx, p: IntPolynomial) -> Result<Rendered, CliError> {
    let real_rooted = p.is_real_rooted();
    let count = p.real_roots().ok();
    let json = json!({
        "polynomial": poly_json(&p),
        "real_rooted": real_rooted,
        "degree": count.as_ref().map(|c| c.degree),
        "distinct_real_roots": count.as_ref().map(|c| c.distinct),
        "real_roots_with_multiplicity": count.as_ref().map(|c| c.with_multiplicity),
    });
    let opt = |x: Option<usize>| x.map_or_else(String::new, |v| v.to_string());
    let mut table = Table::new(&[
        "polynomial",
        "real_rooted",
        "degree",
        "distinct_real_roots",
        "real_roots_with_multiplicity",
    ]);
    table.push(vec![
        p.to_string(),
        real_rooted.to_string(),
        opt(count.as_ref().map(|c| c.degree)),
        opt(count.as_ref().map(|c| c.distinct)),
        opt(count.as_ref().map(|c| c.with_multiplicity)),
    ]);
    let pretty = format!(
        "real-rooted: {}, polynomial {p}\n",
        ctx.style.flag(real_rooted)
    );
    Ok(Rendered {
        json,
        table,
        pretty,
        ok: true,
    })
}

pub fn parse_polynomial(s: &str) -> Result<IntPolynomial, CliError> {
    let coeffs = s
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<Int>()
                .map_err(|_| CliError::Usage(format!("not an integer coefficient: {t:?}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(IntPolynomial::new(coeffs))
}

struct StatsRow {
    n: usize,
    r: usize,
    f: Vec<Int>,
    h: IntPolynomial,
    ell: IntPolynomial,
    xi: IntGammaVector,
    real_rooted: bool,
}

const ROW_HEADER: [&str; 7] = ["n", "r", "f_vector", "h", "local_h", "xi", "real_rooted"];

impl StatsRow {
    fn cells(&self) -> Vec<String> {
        vec![
            self.n.to_string(),
            self.r.to_string(),
            tuple(&self.f),
            self.h.to_string(),
            self.ell.to_string(),
            xi_tuple(&self.xi),
            self.real_rooted.to_string(),
        ]
    }

    fn json(&self) -> Value {
        json!({
            "n": self.n,
            "r": self.r,
            "f_vector": self.f.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "h": poly_json(&self.h),
            "local_h": poly_json(&self.ell),
            "xi": serde_json::to_value(&self.xi).expect("serializable"),
            "real_rooted": self.real_rooted,
        })
    }
}

fn row_from_lattice(n: usize, r: usize) -> Result<StatsRow, CliError> {
    let t = esd_simplex(n, r)?;
    let f = t.complex().f_vector()?;
    let ell = t.local_h();
    Ok(StatsRow {
        n,
        r,
        f: f.0.iter().map(|&x| Int::from(x)).collect(),
        h: f.h_polynomial(),
        xi: ell.gamma_expand(n)?,
        real_rooted: ell.is_real_rooted(),
        ell,
    })
}

/// The same row from closed forms, without building the complex.
fn row_from_formulas(n: usize, r: usize) -> Result<StatsRow, CliError> {
    let h = IntPolynomial::ones_range(0, r - 1)
        .pow(n as u32)
        .e_operator(r);
    let ell = local_h_via_operator(n, r)?;
    Ok(StatsRow {
        n,
        r,
        f: f_from_h(&h, n),
        h,
        xi: ell.gamma_expand(n)?,
        real_rooted: ell.is_real_rooted(),
        ell,
    })
}

pub fn table(
    ctx: &Ctx,
    ns: &[usize],
    rs: &[usize],
    max_cells: usize,
) -> Result<Rendered, CliError> {
    let cells = ns.len() * rs.len();
    if cells > max_cells {
        return Err(CliError::Usage(format!(
            "grid has {cells} cells, limit {max_cells}; use the streaming esd-stats command for large grids"
        )));
    }
    for &n in ns {
        for &r in rs {
            guard_lattice(ctx, n, r).map_err(|e| match e {
                CliError::Usage(m) => {
                    CliError::Usage(format!("{m}, or use the streaming esd-stats command"))
                }
                other => other,
            })?;
        }
    }
    let mut rows = Vec::new();
    for &n in ns {
        for &r in rs {
            rows.push(row_from_lattice(n, r)?);
        }
    }
    let mut table = Table::new(&ROW_HEADER);
    for row in &rows {
        table.push(row.cells());
    }
    let mut pretty_rows = vec![ROW_HEADER.iter().map(|h| h.to_string()).collect::<Vec<_>>()];
    pretty_rows.extend(table.rows.iter().cloned());
    Ok(Rendered {
        json: Value::Array(rows.iter().map(StatsRow::json).collect()),
        table,
        pretty: columns(&pretty_rows),
        ok: true,
    })
}

/// Streams one row per `(n, r)` as soon as it is computed.
pub fn esd_stats(
    format: Format,
    out: &mut impl Write,
    n_max: usize,
    r_max: usize,
) -> Result<(), CliError> {
    let cells = (1..=n_max).flat_map(|n| (1..=r_max).map(move |r| (n, r)));
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(ROW_HEADER)?;
            w.flush()?;
            for (n, r) in cells {
                w.write_record(row_from_formulas(n, r)?.cells())?;
                w.flush()?;
            }
        }
        Format::Json => {
            for (n, r) in cells {
                serde_json::to_writer(&mut *out, &row_from_formulas(n, r)?.json())?;
                writeln!(out)?;
                out.flush()?;
            }
        }
        Format::Pretty => {
            for (n, r) in cells {
                let c = row_from_formulas(n, r)?.cells();
                writeln!(
                    out,
                    "n={} r={}  f={}  h={}  local h={}  xi={}  real-rooted={}",
                    c[0], c[1], c[2], c[3], c[4], c[5], c[6]
                )?;
                out.flush()?;
            }
        }
    }
    Ok(())
}

impl LocalMethod {
    fn name(self) -> &'static str {
        match self {
            LocalMethod::Definitional => "definitional",
            LocalMethod::Operator => "operator",
            LocalMethod::Words => "words",
            LocalMethod::All => "all",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_normalize() {
        assert_eq!(normalize_label("1,1,1"), "(1,1,1)");
        assert_eq!(normalize_label(" (1, 2,0) "), "(1,2,0)");
    }

    #[test]
    fn formula_rows_match_lattice_rows() {
        for n in 1..=4 {
            for r in 1..=4 {
                let a = row_from_lattice(n, r).unwrap();
                let b = row_from_formulas(n, r).unwrap();
                assert_eq!(a.cells(), b.cells(), "n={n} r={r}");
            }
        }
    }
}
