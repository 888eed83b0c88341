//! The `r`-fold edgewise subdivision.
//!
//! Vertices of `esd_r(2^V)` are the compositions of `r` into `n` nonnegative
//! parts. Writing `ι(u)` for the vector of prefix sums of `u`, a set of
//! vertices is a face when every two members have `ι`-difference in
//! `{0,1}^n` (in one direction or the other). Geometrically this is the
//! dissection of the dilated simplex by the hyperplanes
//! `x_i + ... + x_j = k`; no coordinates are computed here.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::{Error, Face, Result, SimplicialComplex, TriangulatedSimplex, Vertex};

/// A composition `(i_1, ..., i_n)` of `r`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeVertex {
    parts: Vec<u32>,
}

impl LatticeVertex {
    pub fn new(parts: Vec<u32>) -> Self {
        Self { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.len()
    }

    pub fn r(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Prefix sums `(a_1, a_1 + a_2, ..., a_1 + ... + a_n)`.
    pub fn iota(&self) -> Vec<u32> {
        self.parts
            .iter()
            .scan(0, |s, &a| {
                *s += a;
                Some(*s)
            })
            .collect()
    }

    /// Coordinates with a positive part.
    pub fn support(&self) -> Vec<usize> {
        (0..self.parts.len())
            .filter(|&j| self.parts[j] > 0)
            .collect()
    }

    fn from_iota(iota: &[u32]) -> Self {
        let mut prev = 0;
        Self::new(
            iota.iter()
                .map(|&b| {
                    let a = b - prev;
                    prev = b;
                    a
                })
                .collect(),
        )
    }
}

impl fmt::Debug for LatticeVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for LatticeVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

fn check_params(n: usize, r: usize) -> Result<()> {
    if n == 0 || r == 0 {
        return Err(Error::InvalidParameter(format!(
            "need n >= 1 and r >= 1, got n = {n}, r = {r}"
        )));
    }
    Ok(())
}

/// All compositions of `r` into `n` nonnegative parts, in lexicographic order.
pub fn omega_vertices(n: usize, r: usize) -> Result<Vec<LatticeVertex>> {
    check_params(n, r)?;
    fn go(n: usize, left: u32, prefix: &mut Vec<u32>, out: &mut Vec<LatticeVertex>) {
        if prefix.len() + 1 == n {
            prefix.push(left);
            out.push(LatticeVertex::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for a in 0..=left {
            prefix.push(a);
            go(n, left - a, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, r as u32, &mut Vec::with_capacity(n), &mut out);
    Ok(out)
}

fn is_unit_step(lo: &[u32], hi: &[u32]) -> bool {
    lo.iter().zip(hi).all(|(a, b)| *b == *a || *b == *a + 1)
}

/// Whether every pair of vertices has `ι`-difference in `{0,1}^n` in one of
/// the two directions.
pub fn is_esd_face(vertices: &[LatticeVertex]) -> bool {
    let iotas: Vec<Vec<u32>> = vertices.iter().map(LatticeVertex::iota).collect();
    iotas.iter().enumerate().all(|(i, a)| {
        iotas[i + 1..]
            .iter()
            .all(|b| is_unit_step(a, b) || is_unit_step(b, a))
    })
}

/// Facets of `esd_r(2^V)` for `|V| = n`, as lists of compositions.
///
/// A facet is a chain `ι(u_1) < ... < ι(u_n)` in which each step adds one
/// unit vector, each of the first `n - 1` coordinates exactly once (the last
/// coordinate is always `r`). Each facet is generated once, from its bottom
/// vertex, by choosing the order of the steps while keeping prefix sums
/// weakly increasing.
pub fn esd_facets(n: usize, r: usize) -> Result<Vec<Vec<LatticeVertex>>> {
    let bottoms = omega_vertices(n, r)?;
    let mut out = Vec::new();
    for s in &bottoms {
        let mut chain = vec![s.iota()];
        grow(n, &mut chain, &mut vec![false; n - 1], &mut out);
    }
    Ok(out)
}

fn grow(n: usize, chain: &mut Vec<Vec<u32>>, used: &mut [bool], out: &mut Vec<Vec<LatticeVertex>>) {
    if chain.len() == n {
        out.push(chain.iter().map(|b| LatticeVertex::from_iota(b)).collect());
        return;
    }
    let cur = chain.last().unwrap().clone();
    for i in 0..n - 1 {
        if used[i] || cur[i] + 1 > cur[i + 1] {
            continue;
        }
        let mut step = cur.clone();
        step[i] += 1;
        used[i] = true;
        chain.push(step);
        grow(n, chain, used, out);
        chain.pop();
        used[i] = false;
    }
}

/// `esd_r(2^V)` on base vertices `0..n`. Vertex `k` of the complex is the
/// `k`-th composition in lexicographic order; its carrier is its support.
pub fn esd_simplex(n: usize, r: usize) -> Result<TriangulatedSimplex> {
    let omega = omega_vertices(n, r)?;
    let index: HashMap<&LatticeVertex, Vertex> =
        omega.iter().enumerate().map(|(i, u)| (u, i)).collect();
    let facets = esd_facets(n, r)?
        .into_iter()
        .map(|f| f.iter().map(|u| index[u]).collect::<Face>());
    let labels = omega
        .iter()
        .enumerate()
        .map(|(i, u)| (i, u.to_string()))
        .collect();
    let complex = SimplicialComplex::from_facets(facets).with_labels(labels);
    let carriers = omega
        .iter()
        .enumerate()
        .map(|(i, u)| (i, Face::new(u.support())))
        .collect();
    TriangulatedSimplex::new(Face::new(0..n), complex, carriers)
}

/// Position of each composition in the lexicographic listing of `Ω_r`.
pub fn omega_index(n: usize, r: usize) -> Result<HashMap<LatticeVertex, Vertex>> {
    Ok(omega_vertices(n, r)?
        .into_iter()
        .enumerate()
        .map(|(i, u)| (u, i))
        .collect())
}

/// Edgewise subdivision of an arbitrary complex whose vertices are ordered
/// by id.
///
/// With `n` vertices in total, the vertices of the result are the
/// compositions `u` of `r` into `n` parts whose support is a face of `Δ`,
/// and a set is a face when the union of the supports is a face of `Δ` and
/// the `ι` condition holds. Restricted to a face `F` of `Δ` this is a copy
/// of `esd_r(2^F)`. Vertex ids follow the lexicographic order of the used
/// compositions; the returned map sends each vertex to its carrier, a face
/// of `Δ`.
pub fn esd_complex_with_carriers(
    delta: &SimplicialComplex,
    r: usize,
) -> Result<(SimplicialComplex, BTreeMap<Vertex, Face>)> {
    if delta.is_void() {
        return Err(Error::VoidComplex);
    }
    let order: Vec<Vertex> = delta.vertices().into_iter().collect();
    let n = order.len();
    let pos: HashMap<Vertex, usize> = order.iter().enumerate().map(|(i, &v)| (v, i)).collect();

    let mut facets: Vec<Vec<LatticeVertex>> = Vec::new();
    for facet in delta.facets().iter().filter(|f| !f.is_empty()) {
        let coords: Vec<usize> = facet.vertices().iter().map(|v| pos[v]).collect();
        for local in esd_facets(coords.len(), r)? {
            facets.push(
                local
                    .iter()
                    .map(|u| {
                        let mut parts = vec![0; n];
                        for (k, &c) in coords.iter().enumerate() {
                            parts[c] = u.parts()[k];
                        }
                        LatticeVertex::new(parts)
                    })
                    .collect(),
            );
        }
    }
    if facets.is_empty() {
        return Ok((SimplicialComplex::empty(), BTreeMap::new()));
    }

    let mut used: Vec<&LatticeVertex> = facets.iter().flatten().collect();
    used.sort_unstable();
    used.dedup();
    let index: HashMap<&LatticeVertex, Vertex> =
        used.iter().enumerate().map(|(i, u)| (*u, i)).collect();
    let labels = used
        .iter()
        .enumerate()
        .map(|(i, u)| (i, u.to_string()))
        .collect();
    let carriers = used
        .iter()
        .enumerate()
        .map(|(i, u)| (i, u.support().into_iter().map(|c| order[c]).collect()))
        .collect();
    let complex = SimplicialComplex::from_facets(
        facets
            .iter()
            .map(|f| f.iter().map(|u| index[u]).collect::<Face>()),
    )
    .with_labels(labels);
    Ok((complex, carriers))
}

pub fn esd_complex(delta: &SimplicialComplex, r: usize) -> Result<SimplicialComplex> {
    Ok(esd_complex_with_carriers(delta, r)?.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::FVector;
    use crate::IntPolynomial;
    use num_integer::binomial;

    fn lv(p: &[u32]) -> LatticeVertex {
        LatticeVertex::new(p.to_vec())
    }

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn omega_examples() {
        assert_eq!(omega_vertices(3, 4).unwrap().len(), 15);
        assert_eq!(omega_vertices(1, 5).unwrap(), vec![lv(&[5])]);
        assert_eq!(
            omega_vertices(2, 2).unwrap(),
            vec![lv(&[0, 2]), lv(&[1, 1]), lv(&[2, 0])]
        );
        assert!(omega_vertices(0, 2).is_err());
        assert!(omega_vertices(2, 0).is_err());
    }

    #[test]
    fn omega_size_is_binomial() {
        for n in 1..=8usize {
            for r in 1..=8usize {
                let expected = binomial(n + r - 1, n - 1);
                let omega = omega_vertices(n, r).unwrap();
                assert_eq!(omega.len(), expected, "n={n} r={r}");
                assert!(omega.windows(2).all(|w| w[0] < w[1]));
                assert!(omega.iter().all(|u| u.r() as usize == r));
            }
        }
    }

    #[test]
    fn iota_examples() {
        assert_eq!(lv(&[4, 0, 0]).iota(), vec![4, 4, 4]);
        assert_eq!(lv(&[1, 1, 1]).iota(), vec![1, 2, 3]);
        assert_eq!(lv(&[0, 2, 1]).iota(), vec![0, 2, 3]);
    }

    #[test]
    fn face_predicate_examples() {
        assert!(is_esd_face(&[lv(&[4, 0, 0]), lv(&[3, 1, 0])]));
        assert!(!is_esd_face(&[lv(&[4, 0, 0]), lv(&[2, 2, 0])]));
        assert!(is_esd_face(&[lv(&[1, 2, 1])]));
        assert!(is_esd_face(&[]));
    }

    #[test]
    fn triangle_subdivided_four_times() {
        let t = esd_simplex(3, 4).unwrap();
        assert_eq!(
            t.complex().f_vector().unwrap(),
            FVector(vec![1, 15, 30, 16])
        );
        assert_eq!(t.complex().h_polynomial().unwrap(), p(&[1, 12, 3]));
    }

    #[test]
    fn r_one_is_the_trivial_triangulation() {
        for n in 1..6 {
            let t = esd_simplex(n, 1).unwrap();
            assert_eq!(t.complex().facets().len(), 1);
            assert_eq!(t.complex().vertices().len(), n);
            assert!(t.carriers().values().all(|c| c.len() == 1));
        }
    }

    #[test]
    fn subdivided_segment() {
        let t = esd_simplex(2, 3).unwrap();
        assert_eq!(t.complex().f_vector().unwrap(), FVector(vec![1, 4, 3]));
    }

    /// Brute force over all vertex subsets of size at most `n`.
    fn facets_by_filtering(n: usize, r: usize) -> Vec<Face> {
        let omega = omega_vertices(n, r).unwrap();
        let m = omega.len();
        let faces: Vec<Face> = (0u32..1 << m)
            .filter(|mask| mask.count_ones() as usize <= n)
            .map(|mask| (0..m).filter(|i| mask >> i & 1 == 1).collect::<Face>())
            .filter(|f| {
                is_esd_face(
                    &f.vertices()
                        .iter()
                        .map(|&i| omega[i].clone())
                        .collect::<Vec<_>>(),
                )
            })
            .collect();
        SimplicialComplex::from_facets(faces).facets().to_vec()
    }

    #[test]
    fn direct_facets_match_filtering() {
        for (n, r) in [(2, 3), (3, 2), (3, 3), (3, 4), (4, 2), (4, 3)] {
            let t = esd_simplex(n, r).unwrap();
            assert_eq!(
                t.complex().facets(),
                facets_by_filtering(n, r).as_slice(),
                "n={n} r={r}"
            );
        }
    }

    #[test]
    fn facets_are_pure_and_counted() {
        for n in 1..=5usize {
            for r in 1..=5usize {
                let t = esd_simplex(n, r).unwrap();
                let facets = t.complex().facets();
                assert_eq!(facets.len(), r.pow(n as u32 - 1), "n={n} r={r}");
                assert!(facets.iter().all(|f| f.len() == n));
            }
        }
    }

    #[test]
    fn flag_for_small_parameters() {
        for n in 1..=4 {
            for r in 1..=4 {
                assert!(
                    esd_simplex(n, r).unwrap().complex().is_flag(),
                    "n={n} r={r}"
                );
            }
        }
    }

    #[test]
    fn h_polynomial_matches_operator_formula() {
        for n in 1..=5usize {
            for r in 1..=4usize {
                let h = esd_simplex(n, r).unwrap().complex().h_polynomial().unwrap();
                let formula = IntPolynomial::ones_range(0, r - 1)
                    .pow(n as u32)
                    .e_operator(r);
                assert_eq!(h, formula, "n={n} r={r}");
            }
        }
    }

    /// Deleting the coordinates outside `F` maps the restriction onto
    /// `esd_r(2^F)`.
    #[test]
    fn restrictions_are_smaller_subdivisions() {
        for n in 1..=4usize {
            for r in 1..=3usize {
                let t = esd_simplex(n, r).unwrap();
                let omega = omega_vertices(n, r).unwrap();
                for mask in 1u32..1 << n {
                    let face: Face = (0..n).filter(|i| mask >> i & 1 == 1).collect();
                    let k = face.len();
                    let small_index = omega_index(k, r).unwrap();
                    let restricted = t.restrict(&face).unwrap();
                    let mapped = SimplicialComplex::from_facets(
                        restricted.complex().facets().iter().map(|f| {
                            f.vertices()
                                .iter()
                                .map(|&v| {
                                    let parts = face
                                        .vertices()
                                        .iter()
                                        .map(|&c| omega[v].parts()[c])
                                        .collect();
                                    small_index[&LatticeVertex::new(parts)]
                                })
                                .collect::<Face>()
                        }),
                    );
                    let small = esd_simplex(k, r).unwrap();
                    assert_eq!(&mapped, small.complex(), "n={n} r={r} F={face:?}");
                    let top = restricted.complex().f_vector().unwrap();
                    assert_eq!(top.get(k as isize - 1), (r as u64).pow(k as u32 - 1));
                }
            }
        }
    }

    #[test]
    fn full_simplex_complex_matches_esd_simplex() {
        for (n, r) in [(2, 2), (3, 3), (4, 2)] {
            let c = esd_complex(&SimplicialComplex::simplex(0..n), r).unwrap();
            assert_eq!(&c, esd_simplex(n, r).unwrap().complex());
        }
    }

    fn cycle(n: usize) -> SimplicialComplex {
        SimplicialComplex::from_facets((0..n).map(|i| vec![i, (i + 1) % n]))
    }

    #[test]
    fn subdivided_triangle_boundary() {
        let c = esd_complex(&cycle(3), 2).unwrap();
        assert_eq!(c.f_vector().unwrap(), FVector(vec![1, 6, 6]));
        assert_eq!(c.h_polynomial().unwrap(), p(&[1, 4, 1]));
        let formula = (&IntPolynomial::ones_range(0, 1).pow(2) * &p(&[1, 1, 1])).e_operator(2);
        assert_eq!(formula, p(&[1, 4, 1]));
        // a 6-cycle: every vertex has degree two
        assert!(c.neighbors().values().all(|nb| nb.len() == 2));
    }

    #[test]
    fn carriers_of_general_complex() {
        let delta = SimplicialComplex::from_facets([vec![10, 20], vec![20, 30]]);
        let (c, carriers) = esd_complex_with_carriers(&delta, 2).unwrap();
        assert_eq!(c.vertices().len(), 5);
        assert!(carriers.values().all(|f| delta.contains_face(f)));
        assert!(!carriers.values().any(|f| *f == Face::from([10, 30])));
        assert_eq!(
            esd_complex(&SimplicialComplex::void(), 2),
            Err(Error::VoidComplex)
        );
    }
}
