//! Triangulations of a simplex with explicit carriers.
//!
//! The carrier of a vertex of the triangulation is the smallest face of the
//! base simplex containing it. Carriers are all that is needed to restrict a
//! triangulation to a face of the simplex, and hence to compute local
//! h-polynomials, without any geometry.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::complex::{ComplexJson, FVector};
use crate::{Error, Face, IntPolynomial, Result, SimplicialComplex, Vertex};

/// A triangulation `Γ` of the simplex `2^V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangulatedSimplex {
    base: Face,
    complex: SimplicialComplex,
    carriers: BTreeMap<Vertex, Face>,
}

impl TriangulatedSimplex {
    /// Checks that every vertex has a nonempty carrier inside `base` and that
    /// each base vertex is the carrier of exactly one vertex.
    pub fn new(
        base: Face,
        complex: SimplicialComplex,
        carriers: BTreeMap<Vertex, Face>,
    ) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidTriangulation(msg));
        let verts = complex.vertices();
        if verts.len() != carriers.len() || !carriers.keys().all(|v| verts.contains(v)) {
            return bad("carrier map must cover exactly the vertices of the complex".into());
        }
        if complex.is_void() {
            return bad("the void complex triangulates nothing".into());
        }
        for (v, c) in &carriers {
            if c.is_empty() || !c.is_subset(&base) {
                return bad(format!(
                    "carrier {c:?} of vertex {v} is not a nonempty subset of {base:?}"
                ));
            }
        }
        for &u in base.vertices() {
            let n = carriers.values().filter(|c| c.vertices() == [u]).count();
            if n != 1 {
                return bad(format!("base vertex {u} is the carrier of {n} vertices"));
            }
        }
        Ok(Self {
            base,
            complex,
            carriers,
        })
    }

    /// `2^V` triangulated by itself.
    pub fn trivial(base: Face) -> Result<Self> {
        if base.is_empty() {
            return Err(Error::InvalidParameter(
                "base vertex set must be nonempty".into(),
            ));
        }
        let carriers = base
            .vertices()
            .iter()
            .map(|&u| (u, Face::from([u])))
            .collect();
        Self::new(
            base.clone(),
            SimplicialComplex::from_facets([base]),
            carriers,
        )
    }

    pub fn base(&self) -> &Face {
        &self.base
    }

    /// `n = |V|`
    pub fn n(&self) -> usize {
        self.base.len()
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn carriers(&self) -> &BTreeMap<Vertex, Face> {
        &self.carriers
    }

    pub fn carrier(&self, v: Vertex) -> Option<&Face> {
        self.carriers.get(&v)
    }

    /// The subcomplex on vertices carried by `face`, as a triangulation of
    /// `2^face`. Restricting to `∅` gives `{∅}` over the empty base.
    pub fn restrict(&self, face: &Face) -> Result<Self> {
        if !face.is_subset(&self.base) {
            return Err(Error::InvalidParameter(format!(
                "{face:?} is not a subset of the base {:?}",
                self.base
            )));
        }
        let complex = self.restricted_complex(face);
        let carriers = self
            .carriers
            .iter()
            .filter(|(_, c)| c.is_subset(face))
            .map(|(v, c)| (*v, c.clone()))
            .collect();
        Self::new(face.clone(), complex, carriers)
    }

    /// `Γ_F` as a plain complex; `{∅}` for `F = ∅`.
    pub fn restricted_complex(&self, face: &Face) -> SimplicialComplex {
        let keep: BTreeSet<Vertex> = self
            .carriers
            .iter()
            .filter(|(_, c)| c.is_subset(face))
            .map(|(v, _)| *v)
            .collect();
        self.complex.induced(&keep)
    }

    /// Bitmask of a carrier over the positions of `base`.
    fn carrier_mask(&self, positions: &HashMap<Vertex, usize>, face: &Face) -> u64 {
        face.vertices().iter().fold(0, |m, u| m | 1 << positions[u])
    }

    /// f-vectors of all `2^n` restrictions, indexed by subset bitmask over
    /// the positions of the base vertices.
    ///
    /// A face of `Γ` belongs to `Γ_F` exactly when the union of the carriers
    /// of its vertices lies in `F`, so one pass over the faces of `Γ` tallies
    /// every restriction.
    pub fn restriction_f_vectors(&self) -> Vec<FVector> {
        let n = self.n();
        assert!(n < 24, "too many base vertices to enumerate restrictions");
        let positions: HashMap<Vertex, usize> = self
            .base
            .vertices()
            .iter()
            .enumerate()
            .map(|(i, &u)| (u, i))
            .collect();
        let masks: HashMap<Vertex, u64> = self
            .carriers
            .iter()
            .map(|(v, c)| (*v, self.carrier_mask(&positions, c)))
            .collect();
        let top = self.complex.dimension().map_or(0, |d| (d + 2) as usize);

        let mut tally: HashMap<u64, Vec<u64>> = HashMap::new();
        for face in self.complex.faces() {
            let m = face.vertices().iter().fold(0, |m, v| m | masks[v]);
            tally.entry(m).or_insert_with(|| vec![0; top])[face.len()] += 1;
        }

        (0u64..1 << n)
            .map(|subset| {
                let mut counts = vec![0u64; top];
                for (m, c) in &tally {
                    if m & !subset == 0 {
                        for (acc, x) in counts.iter_mut().zip(c) {
                            *acc += x;
                        }
                    }
                }
                while counts.len() > 1 && counts.last() == Some(&0) {
                    counts.pop();
                }
                FVector(counts)
            })
            .collect()
    }

    /// `ℓ_V(Γ, x) = Σ_{F ⊆ V} (-1)^{n-|F|} h(Γ_F, x)`, summed over all `2^n`
    /// restrictions.
    pub fn local_h(&self) -> IntPolynomial {
        let n = self.n();
        self.restriction_f_vectors()
            .iter()
            .enumerate()
            .map(|(subset, f)| {
                let h = f.h_polynomial();
                if (n - (subset as u64).count_ones() as usize).is_multiple_of(2) {
                    h
                } else {
                    -h
                }
            })
            .sum()
    }

    /// Cone over a new apex carried by the new base vertex `v`.
    pub fn cone(&self, v: Vertex) -> Result<Self> {
        if self.base.contains(v) {
            return Err(Error::VertexExists(v));
        }
        let apex = self.fresh_vertex();
        let complex = self.complex.cone(apex)?;
        let mut carriers = self.carriers.clone();
        carriers.insert(apex, Face::from([v]));
        Self::new(self.base.with(v), complex, carriers)
    }

    /// Stellar subdivision of `Γ` on an edge; the new vertex `w` is carried
    /// by the union of the carriers of the edge's endpoints.
    pub fn stellar_lift(&self, edge: &Face, w: Vertex) -> Result<Self> {
        let complex = self.complex.stellar_subdivide_edge(edge, w)?;
        let carrier = edge
            .vertices()
            .iter()
            .map(|v| &self.carriers[v])
            .fold(Face::empty(), |acc, c| acc.union(c));
        let mut carriers = self.carriers.clone();
        carriers.insert(w, carrier);
        Self::new(self.base.clone(), complex, carriers)
    }

    /// Vertices carried by the whole base simplex.
    pub fn interior_vertices(&self) -> BTreeSet<Vertex> {
        self.carriers
            .iter()
            .filter(|(_, c)| **c == self.base)
            .map(|(v, _)| *v)
            .collect()
    }

    /// Cones `Γ` over a new base vertex and then subdivides the edge joining
    /// the apex to the interior vertex `p`. The result triangulates a simplex
    /// one dimension up and its local h-polynomial is `x · h(link_Γ(p), x)`.
    pub fn lift_interior_vertex(&self, p: Vertex) -> Result<Self> {
        if !self.interior_vertices().contains(&p) {
            return Err(Error::NotInterior(p));
        }
        let v = self.base.vertices().last().map_or(0, |m| m + 1);
        let coned = self.cone(v)?;
        let apex = self.fresh_vertex();
        coned.stellar_lift(&Face::from([apex, p]), coned.fresh_vertex())
    }

    /// `x · h(link_Γ(p), x)`
    pub fn lifted_link_h(&self, p: Vertex) -> Result<IntPolynomial> {
        let link = self.complex.link(&Face::from([p]))?;
        Ok(link.h_polynomial()?.shift(1))
    }

    fn fresh_vertex(&self) -> Vertex {
        self.carriers.keys().last().map_or(0, |m| m + 1)
    }
}

/// JSON form: the complex format plus the base vertex ids and a carrier map
/// from vertex index to base vertex ids.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangulationJson {
    #[serde(flatten)]
    pub complex: ComplexJson,
    pub base: Vec<Vertex>,
    pub carrier: BTreeMap<usize, Vec<Vertex>>,
}

impl TriangulationJson {
    pub fn from_triangulation(t: &TriangulatedSimplex) -> Self {
        Self {
            complex: ComplexJson::from_complex(&t.complex),
            base: t.base.vertices().to_vec(),
            carrier: t
                .carriers
                .values()
                .enumerate()
                .map(|(i, c)| (i, c.vertices().to_vec()))
                .collect(),
        }
    }

    pub fn to_triangulation(&self) -> Result<TriangulatedSimplex> {
        let complex = self.complex.to_complex()?;
        let carriers = self
            .carrier
            .iter()
            .map(|(i, c)| (*i, Face::new(c.iter().copied())))
            .collect();
        TriangulatedSimplex::new(Face::new(self.base.iter().copied()), complex, carriers)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    /// `Σ_k (-1)^{n-k} C(n,k)`.
    fn alternating_binomial_sum(n: usize) -> BigInt {
        (0..=n)
            .map(|k| {
                let c: BigInt = num_integer::binomial(BigInt::from(n), BigInt::from(k));
                if (n - k).is_multiple_of(2) {
                    c
                } else {
                    -c
                }
            })
            .sum()
    }

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    fn trivial(n: usize) -> TriangulatedSimplex {
        TriangulatedSimplex::trivial(Face::new(0..n)).unwrap()
    }

    #[test]
    fn trivial_triangulations() {
        assert_eq!(trivial(1).local_h(), IntPolynomial::zero());
        assert_eq!(trivial(3).complex().facets(), &[Face::from([0, 1, 2])]);
        for n in 1..7 {
            let t = trivial(n);
            assert_eq!(t.complex().h_polynomial().unwrap(), p(&[1]));
            assert_eq!(
                t.local_h(),
                IntPolynomial::constant(alternating_binomial_sum(n))
            );
            assert!(t.local_h().is_zero());
            assert!(t.interior_vertices().is_empty() || n == 1);
        }
        assert!(TriangulatedSimplex::trivial(Face::empty()).is_err());
    }

    #[test]
    fn restriction_to_whole_base_and_to_empty() {
        let t = trivial(3);
        assert_eq!(t.restrict(t.base()).unwrap(), t);
        assert_eq!(
            t.restricted_complex(&Face::empty()),
            SimplicialComplex::empty()
        );
        let e = t.restrict(&Face::empty()).unwrap();
        assert_eq!(e.complex().h_polynomial().unwrap(), p(&[1]));
        assert!(t.restrict(&Face::from([7])).is_err());
    }

    #[test]
    fn subdivided_segment() {
        let t = trivial(2).stellar_lift(&Face::from([0, 1]), 5).unwrap();
        assert_eq!(t.carrier(5), Some(&Face::from([0, 1])));
        assert_eq!(t.interior_vertices(), BTreeSet::from([5]));
        assert_eq!(t.local_h(), p(&[0, 1]));
        assert!(t.complex().is_flag());
    }

    #[test]
    fn cone_of_trivial_is_trivial() {
        let t = trivial(2).cone(2).unwrap();
        assert_eq!(t.complex(), trivial(3).complex());
        assert_eq!(t.carrier(2), Some(&Face::from([2])));
        assert_eq!(t.local_h(), IntPolynomial::zero());
        assert_eq!(trivial(2).cone(1), Err(Error::VertexExists(1)));
    }

    #[test]
    fn invalid_carriers_rejected() {
        let c = SimplicialComplex::simplex([0, 1]);
        let dup = BTreeMap::from([(0, Face::from([0])), (1, Face::from([0]))]);
        assert!(TriangulatedSimplex::new(Face::from([0, 1]), c.clone(), dup).is_err());
        let outside = BTreeMap::from([(0, Face::from([0])), (1, Face::from([5]))]);
        assert!(TriangulatedSimplex::new(Face::from([0, 1]), c, outside).is_err());
    }

    #[test]
    fn lift_requires_interior_vertex() {
        assert_eq!(
            trivial(3).lift_interior_vertex(0),
            Err(Error::NotInterior(0))
        );
    }

    #[test]
    fn lifted_segment() {
        // segment split at an interior point p: link of p is two points, h = 1 + x
        let t = trivial(2).stellar_lift(&Face::from([0, 1]), 2).unwrap();
        let lifted = t.lift_interior_vertex(2).unwrap();
        assert_eq!(lifted.n(), 3);
        assert_eq!(lifted.complex().dimension(), Some(2));
        assert_eq!(lifted.local_h(), t.lifted_link_h(2).unwrap());
        assert_eq!(lifted.local_h(), p(&[0, 1, 1]));
        assert!(lifted.complex().is_flag());
    }

    #[test]
    fn restriction_f_vectors_match_restrict() {
        let t = trivial(3)
            .stellar_lift(&Face::from([0, 1]), 3)
            .unwrap()
            .stellar_lift(&Face::from([2, 3]), 4)
            .unwrap();
        let fvs = t.restriction_f_vectors();
        for (mask, fv) in fvs.iter().enumerate() {
            let face: Face = (0..3).filter(|i| mask >> i & 1 == 1).collect();
            assert_eq!(
                &t.restricted_complex(&face).f_vector().unwrap(),
                fv,
                "subset {face:?}"
            );
        }
    }

    #[test]
    fn json_round_trip() {
        let t = trivial(2).stellar_lift(&Face::from([0, 1]), 2).unwrap();
        let j = TriangulationJson::from_triangulation(&t);
        let text = serde_json::to_string(&j).unwrap();
        assert!(
            text.contains(r#""carrier":{"0":[0],"1":[1],"2":[0,1]}"#),
            "{text}"
        );
        let back: TriangulationJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_triangulation().unwrap(), t);
    }
}
