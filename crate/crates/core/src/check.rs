//! Property-check suites over parameter grids.
//!
//! Each suite evaluates a family of exact identities cell by cell and
//! collects the outcomes in a [`CheckReport`]. A failing cell always carries
//! a witness: the word, vertex, or polynomials that disagree.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::edgewise::{esd_complex, esd_simplex};
use crate::smirnov::{
    binomial_series_check, enumerate_words, h_via_words, hop_classes, local_h_via_operator,
    local_h_via_words, xi_coefficients, XiMethod,
};
use crate::{Error, Face, IntPolynomial, Result, SimplicialComplex, TriangulatedSimplex};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail { witness: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cell {
    pub params: String,
    #[serde(flatten)]
    pub outcome: Outcome,
}

impl Cell {
    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }

    pub fn witness(&self) -> Option<&str> {
        match &self.outcome {
            Outcome::Pass => None,
            Outcome::Fail { witness } => Some(witness),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub check_name: String,
    pub parameter_grid: String,
    pub cells: Vec<Cell>,
}

impl CheckReport {
    fn new(check_name: &str, parameter_grid: String) -> Self {
        Self {
            check_name: check_name.to_owned(),
            parameter_grid,
            cells: Vec::new(),
        }
    }

    /// Runs `body`; `Ok(None)` passes, `Ok(Some(w))` fails with witness `w`,
    /// and an error fails with the error message as witness.
    fn cell(&mut self, params: impl Into<String>, body: impl FnOnce() -> Result<Option<String>>) {
        let outcome = match body() {
            Ok(None) => Outcome::Pass,
            Ok(Some(witness)) => Outcome::Fail { witness },
            Err(e) => Outcome::Fail {
                witness: format!("error: {e}"),
            },
        };
        self.cells.push(Cell {
            params: params.into(),
            outcome,
        });
    }

    pub fn passed(&self) -> bool {
        self.cells.iter().all(Cell::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Cell> {
        self.cells.iter().filter(|c| !c.passed())
    }

    /// Folds the cells of `other` into `self`, prefixing their parameters.
    pub fn absorb(&mut self, other: CheckReport) {
        for mut c in other.cells {
            c.params = format!("{}: {}", other.check_name, c.params);
            self.cells.push(c);
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    LocalH,
    HPolynomial,
    Complexes,
    Gamma,
    Hopping,
    BinomialSeries,
    Lift,
    Structure,
    Roots,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::LocalH,
        Suite::HPolynomial,
        Suite::Complexes,
        Suite::Gamma,
        Suite::Hopping,
        Suite::BinomialSeries,
        Suite::Lift,
        Suite::Structure,
        Suite::Roots,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::LocalH => "local-h",
            Suite::HPolynomial => "h-polynomial",
            Suite::Complexes => "complexes",
            Suite::Gamma => "gamma",
            Suite::Hopping => "hopping",
            Suite::BinomialSeries => "binomial-series",
            Suite::Lift => "lift",
            Suite::Structure => "structure",
            Suite::Roots => "roots",
        }
    }

    /// Default `(n_max, r_max)`.
    pub fn default_grid(self) -> (usize, usize) {
        match self {
            Suite::LocalH | Suite::HPolynomial => (6, 5),
            Suite::Complexes => (0, 3),
            Suite::Gamma => (10, 4),
            Suite::Hopping => (8, 4),
            Suite::BinomialSeries | Suite::Lift => (4, 4),
            Suite::Structure => (6, 4),
            Suite::Roots => (8, 5),
        }
    }

    /// Runs the suite; `None` selects the default bound.
    pub fn run(self, n_max: Option<usize>, r_max: Option<usize>) -> CheckReport {
        let (dn, dr) = self.default_grid();
        let (n, r) = (n_max.unwrap_or(dn), r_max.unwrap_or(dr));
        match self {
            Suite::LocalH => local_h_routes(n, r),
            Suite::HPolynomial => h_routes(n, r),
            Suite::Complexes => general_complexes(r),
            Suite::Gamma => gamma_words(n, r),
            Suite::Hopping => hopping(n, r),
            Suite::BinomialSeries => binomial_series(n, r, 8),
            Suite::Lift => interior_lifts(n, r),
            Suite::Structure => structure(n, r),
            Suite::Roots => roots(n, r),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    /// Also accepts `theorem1` for `local-h` and `lemma41` for `lift`.
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "theorem1" => return Ok(Suite::LocalH),
            "lemma41" => return Ok(Suite::Lift),
            _ => {}
        }
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

fn grid(
    n_lo: usize,
    n_max: usize,
    r_lo: usize,
    r_max: usize,
) -> impl Iterator<Item = (usize, usize)> {
    (n_lo..=n_max).flat_map(move |n| (r_lo..=r_max).map(move |r| (n, r)))
}

fn nr(n: usize, r: usize) -> String {
    format!("n={n} r={r}")
}

/// `(1 + x + ... + x^{r-1})^d · h`, then `E_r`.
fn esd_h_formula(h: &IntPolynomial, d: usize, r: usize) -> IntPolynomial {
    (&IntPolynomial::ones_range(0, r - 1).pow(d as u32) * h).e_operator(r)
}

/// Local h-polynomial of `esd_r(2^V)` three ways.
pub fn local_h_routes(n_max: usize, r_max: usize) -> CheckReport {
    let mut report = CheckReport::new(
        Suite::LocalH.name(),
        format!("1<=n<={n_max}, 1<=r<={r_max}"),
    );
    for (n, r) in grid(1, n_max, 1, r_max) {
        report.cell(nr(n, r), || {
            let definitional = esd_simplex(n, r)?.local_h();
            let operator = local_h_via_operator(n, r)?;
            let words = local_h_via_words(n, r)?;
            Ok((definitional != operator || operator != words).then(|| {
                format!("definitional {definitional}; operator {operator}; words {words}")
            }))
        });
    }
    report
}

/// h-polynomial of `esd_r(2^V)` three ways.
pub fn h_routes(n_max: usize, r_max: usize) -> CheckReport {
    let mut report = CheckReport::new(
        Suite::HPolynomial.name(),
        format!("1<=n<={n_max}, 1<=r<={r_max}"),
    );
    for (n, r) in grid(1, n_max, 1, r_max) {
        report.cell(nr(n, r), || {
            let complex = esd_simplex(n, r)?.complex().h_polynomial()?;
            let operator = esd_h_formula(&IntPolynomial::one(), n, r);
            let words = h_via_words(n, r)?;
            Ok((complex != operator || operator != words)
                .then(|| format!("complex {complex}; operator {operator}; words {words}")))
        });
    }
    report
}

/// The complexes used for the general h-polynomial identity.
pub fn sample_complexes() -> Result<Vec<(&'static str, SimplicialComplex)>> {
    let triangle = SimplicialComplex::from_facets([[0, 1], [1, 2], [0, 2]]);
    let pendant = SimplicialComplex::from_facets([[0, 1], [1, 2], [0, 2], [2, 3]]);
    let sd = SimplicialComplex::simplex(0..3).barycentric_subdivision()?;
    Ok(vec![
        ("3-cycle", triangle),
        ("3-cycle+pendant", pendant),
        ("sd(2-simplex)", sd),
    ])
}

/// `h(esd_r(Δ)) = E_r((1 + ... + x^{r-1})^d h(Δ))` with `d = dim Δ + 1`.
pub fn general_complexes(r_max: usize) -> CheckReport {
    let mut report = CheckReport::new(
        Suite::Complexes.name(),
        format!("3 complexes, 2<=r<={r_max}"),
    );
    let samples = match sample_complexes() {
        Ok(s) => s,
        Err(e) => {
            report.cell("construction", || Err(e));
            return report;
        }
    };
    for (name, delta) in &samples {
        for r in 2..=r_max {
            report.cell(format!("{name} r={r}"), || {
                let d = (delta.dimension().unwrap_or(-1) + 1) as usize;
                let actual = esd_complex(delta, r)?.h_polynomial()?;
                let expected = esd_h_formula(&delta.h_polynomial()?, d, r);
                Ok((actual != expected)
                    .then(|| format!("h(esd) = {actual}, formula gives {expected}")))
            });
        }
    }
    report
}

/// Gamma-coefficients from canonical words agree with the gamma-expansion,
/// re-sum to the local h-polynomial, are nonnegative, and give `ℓ(-1)`.
pub fn gamma_words(n_max: usize, r_max: usize) -> CheckReport {
    let mut report = CheckReport::new(Suite::Gamma.name(), format!("1<=n<={n_max}, 1<=r<={r_max}"));
    for (n, r) in grid(1, n_max, 1, r_max) {
        report.cell(nr(n, r), || {
            let by_words = xi_coefficients(n, r, XiMethod::Words)?;
            let by_expand = xi_coefficients(n, r, XiMethod::GammaExpand)?;
            let ell = local_h_via_operator(n, r)?;
            let fmt_xi = |g: &crate::IntGammaVector| {
                g.xi.iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(",")
            };
            if by_words != by_expand {
                return Ok(Some(format!(
                    "words ({}) vs expansion ({})",
                    fmt_xi(&by_words),
                    fmt_xi(&by_expand)
                )));
            }
            let resum = by_words.expand();
            if resum != ell {
                return Ok(Some(format!("re-sum {resum} differs from {ell}")));
            }
            if !by_words.is_nonnegative() {
                return Ok(Some(format!(
                    "negative coefficient in ({})",
                    fmt_xi(&by_words)
                )));
            }
            let at_minus_one = ell.eval(&BigInt::from(-1));
            let expected = if n % 2 == 0 {
                let top = by_words.xi[n / 2].clone();
                if (n / 2) % 2 == 0 {
                    top
                } else {
                    -top
                }
            } else {
                BigInt::zero()
            };
            Ok((at_minus_one != expected)
                .then(|| format!("ℓ(-1) = {at_minus_one}, expected {expected}")))
        });
    }
    report
}

/// Hop classes partition the words, have size `2^m`, a single canonical
/// member with `m = n - 2 asc = des - asc`, and class polynomial
/// `x^{asc}(1+x)^m`.
pub fn hopping(n_max: usize, r_max: usize) -> CheckReport {
    let mut report = CheckReport::new(
        Suite::Hopping.name(),
        format!("1<=n<={n_max}, 1<=r<={r_max}"),
    );
    for (n, r) in grid(1, n_max, 1, r_max) {
        report.cell(nr(n, r), || {
            let words = enumerate_words(n, r)?;
            let classes = hop_classes(n, r)?;
            let mut seen = BTreeSet::new();
            for class in &classes {
                let c = &class.canonical;
                for u in &class.members {
                    if !seen.insert(u.clone()) {
                        return Ok(Some(format!("{u} lies in two classes")));
                    }
                }
                if class.len() != 1 << class.m {
                    return Ok(Some(format!(
                        "class of {c} has {} members, m = {}",
                        class.len(),
                        class.m
                    )));
                }
                if !c.is_canonical() {
                    return Ok(Some(format!(
                        "{c} has no right match but fails the structural condition"
                    )));
                }
                if let Some(u) = class.members.iter().find(|u| *u != c && u.is_canonical()) {
                    return Ok(Some(format!(
                        "class of {c} has a second canonical member {u}"
                    )));
                }
                let s = c.stats();
                if class.m + 2 * s.asc != n || class.m + s.asc != s.des {
                    return Ok(Some(format!(
                        "{c}: m = {}, asc = {}, des = {}",
                        class.m, s.asc, s.des
                    )));
                }
                if class.polynomial() != class.closed_form() {
                    return Ok(Some(format!(
                        "class of {c} has polynomial {}",
                        class.polynomial()
                    )));
                }
            }
            Ok((seen.len() != words.len())
                .then(|| format!("classes cover {} of {} words", seen.len(), words.len())))
        });
    }
    report
}

/// Truncated-series form of the binomial identity for unrestricted words.
pub fn binomial_series(n_max: usize, r_max: usize, order: usize) -> CheckReport {
    let mut report = CheckReport::new(
        Suite::BinomialSeries.name(),
        format!("0<=n<={n_max}, 1<=r<={r_max}, M={order}"),
    );
    for (n, r) in grid(0, n_max, 1, r_max) {
        report.cell(nr(n, r), || {
            Ok((!binomial_series_check(n, r, order)?)
                .then(|| format!("series disagree through x^{order}")))
        });
    }
    report
}

/// The vertex whose label is `label`.
fn vertex_labelled(t: &TriangulatedSimplex, label: &str) -> Option<crate::Vertex> {
    t.complex()
        .labels()
        .iter()
        .find(|(_, l)| l.as_str() == label)
        .map(|(v, _)| *v)
}

/// Lifting an interior vertex `p` gives local h-polynomial
/// `x · h(link(p))`; flagness and dimension behave as expected.
pub fn interior_lifts(n_max: usize, r_max: usize) -> CheckReport {
    let mut report = CheckReport::new(
        Suite::Lift.name(),
        format!("golden (3,3); 1<=n<={n_max}, n<=r<={r_max}"),
    );
    report.cell("golden n=3 r=3 p=(1,1,1)", || {
        let t = esd_simplex(3, 3)?;
        let p = vertex_labelled(&t, "(1,1,1)")
            .ok_or_else(|| Error::Invariant("no vertex (1,1,1)".into()))?;
        let lifted = t.lift_interior_vertex(p)?.local_h();
        let hexagon =
            SimplicialComplex::from_facets([[0, 1], [1, 2], [2, 3], [3, 4], [4, 5], [0, 5]]);
        let expected = IntPolynomial::from_i64s(&[0, 1, 4, 1]);
        let via_hexagon = hexagon.h_polynomial()?.shift(1);
        Ok((lifted != expected || via_hexagon != expected)
            .then(|| format!("ℓ = {lifted}, x·h(6-cycle) = {via_hexagon}")))
    });
    for (n, r) in grid(1, n_max, 1, r_max).filter(|(n, r)| r >= n) {
        let t = match esd_simplex(n, r) {
            Ok(t) => t,
            Err(e) => {
                report.cell(nr(n, r), || Err(e));
                continue;
            }
        };
        for p in t.interior_vertices() {
            report.cell(format!("{} p={}", nr(n, r), t.complex().label(p)), || {
                let lifted = t.lift_interior_vertex(p)?;
                let ell = lifted.local_h();
                let expected = t.lifted_link_h(p)?;
                if ell != expected {
                    return Ok(Some(format!("ℓ = {ell}, x·h(link) = {expected}")));
                }
                if lifted.complex().dimension() != t.complex().dimension().map(|d| d + 1) {
                    return Ok(Some("dimension did not grow by one".into()));
                }
                if t.complex().is_flag() && !lifted.complex().is_flag() {
                    return Ok(Some("flagness lost".into()));
                }
                Ok(structural_witness(&lifted))
            });
        }
    }
    report
}

/// Palindromic for the base size, nonnegative, and of degree below it.
pub fn structural_witness(t: &TriangulatedSimplex) -> Option<String> {
    let n = t.n();
    let ell = t.local_h();
    if !ell.is_palindromic(n) {
        return Some(format!("ℓ = {ell} is not palindromic for n = {n}"));
    }
    if ell.coeffs().iter().any(Signed::is_negative) {
        return Some(format!("ℓ = {ell} has a negative coefficient"));
    }
    if n >= 1 && ell.degree().is_some_and(|d| d + 1 > n) {
        return Some(format!("ℓ = {ell} has degree at least n = {n}"));
    }
    None
}

/// Structural properties of edgewise subdivisions, their cones, and their
/// stellar subdivisions on edges.
pub fn structure(n_max: usize, r_max: usize) -> CheckReport {
    let mut report = CheckReport::new(
        Suite::Structure.name(),
        format!("1<=n<={n_max}, 1<=r<={r_max}"),
    );
    for (n, r) in grid(1, n_max, 1, r_max) {
        let t = match esd_simplex(n, r) {
            Ok(t) => t,
            Err(e) => {
                report.cell(nr(n, r), || Err(e));
                continue;
            }
        };
        report.cell(format!("esd {}", nr(n, r)), || {
            if !t.complex().is_flag() {
                return Ok(Some("edgewise subdivision is not flag".into()));
            }
            Ok(structural_witness(&t))
        });
        if n < n_max {
            report.cell(format!("cone {}", nr(n, r)), || {
                let cone = t.cone(n)?;
                let ell = cone.local_h();
                if !ell.is_zero() {
                    return Ok(Some(format!("ℓ(cone) = {ell}")));
                }
                if !cone.complex().is_flag() {
                    return Ok(Some("cone is not flag".into()));
                }
                Ok(structural_witness(&cone))
            });
        }
        if n <= 3 && r <= 3 {
            let fresh = t.complex().vertices().last().map_or(0, |v| v + 1);
            let edges: Vec<Face> = t
                .complex()
                .faces()
                .iter()
                .filter(|f| f.len() == 2)
                .cloned()
                .collect();
            for edge in edges {
                report.cell(format!("stellar {} edge {:?}", nr(n, r), edge), || {
                    let lifted = t.stellar_lift(&edge, fresh)?;
                    if !lifted.complex().is_flag() {
                        return Ok(Some("stellar subdivision is not flag".into()));
                    }
                    Ok(structural_witness(&lifted))
                });
            }
        }
    }
    report
}

/// Real-rootedness of the local h-polynomial, plus a negative control.
pub fn roots(n_max: usize, r_max: usize) -> CheckReport {
    let mut report = CheckReport::new(
        Suite::Roots.name(),
        format!("2<=n<={n_max}, 2<=r<={r_max}; control 1+x+x^2"),
    );
    report.cell("control 1 + x + x^2", || {
        let control = IntPolynomial::from_i64s(&[1, 1, 1]);
        Ok(control
            .is_real_rooted()
            .then(|| "1 + x + x^2 reported real-rooted".into()))
    });
    for (n, r) in grid(2, n_max, 2, r_max) {
        report.cell(nr(n, r), || {
            let ell = local_h_via_operator(n, r)?;
            if ell.is_real_rooted() {
                return Ok(None);
            }
            let count = ell.real_roots()?;
            Ok(Some(format!(
                "{ell}: {} real roots with multiplicity, degree {}",
                count.with_multiplicity, count.degree
            )))
        });
    }
    report
}
