//! Abstract simplicial complexes stored by their facets.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::{Error, IntPolynomial, Result};

pub type Vertex = usize;

/// A finite set of vertices, kept sorted and free of duplicates.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "Vec<Vertex>", into = "Vec<Vertex>")]
pub struct Face(Vec<Vertex>);

impl Face {
    pub fn new(vertices: impl IntoIterator<Item = Vertex>) -> Self {
        let mut v: Vec<_> = vertices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Face(v)
    }

    pub fn empty() -> Self {
        Face(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset(&self, other: &Face) -> bool {
        if self.len() > other.len() {
            return false;
        }
        let mut it = other.0.iter();
        self.0.iter().all(|v| it.by_ref().any(|w| w == v))
    }

    pub fn union(&self, other: &Face) -> Face {
        Face::new(self.0.iter().chain(&other.0).copied())
    }

    pub fn difference(&self, other: &Face) -> Face {
        Face(
            self.0
                .iter()
                .copied()
                .filter(|v| !other.contains(*v))
                .collect(),
        )
    }

    pub fn with(&self, v: Vertex) -> Face {
        Face::new(self.0.iter().copied().chain([v]))
    }

    pub fn without(&self, v: Vertex) -> Face {
        Face(self.0.iter().copied().filter(|&w| w != v).collect())
    }

    /// All `2^len` subsets, including the empty face and the face itself.
    pub fn subsets(&self) -> impl Iterator<Item = Face> + '_ {
        assert!(self.len() < 32, "face too large to enumerate subsets");
        (0u32..1 << self.len()).map(move |mask| {
            Face(
                self.0
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, v)| *v)
                    .collect(),
            )
        })
    }
}

impl From<Vec<Vertex>> for Face {
    fn from(v: Vec<Vertex>) -> Self {
        Face::new(v)
    }
}

impl From<Face> for Vec<Vertex> {
    fn from(f: Face) -> Self {
        f.0
    }
}

impl<const N: usize> From<[Vertex; N]> for Face {
    fn from(v: [Vertex; N]) -> Self {
        Face::new(v)
    }
}

impl FromIterator<Vertex> for Face {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        Face::new(iter)
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(&self.0).finish()
    }
}

/// Face counts `(f_{-1}, f_0, ..., f_{d-1})`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FVector(pub Vec<u64>);

impl FVector {
    /// Number of faces of dimension `i`, for `i >= -1`.
    pub fn get(&self, i: isize) -> u64 {
        usize::try_from(i + 1)
            .ok()
            .and_then(|k| self.0.get(k).copied())
            .unwrap_or(0)
    }

    /// `d`, one more than the dimension.
    pub fn rank(&self) -> usize {
        self.0.len() - 1
    }

    /// `h(x) = Σ f_{i-1} x^i (1-x)^{d-i}`
    pub fn h_polynomial(&self) -> IntPolynomial {
        let d = self.rank();
        let one_minus_x = IntPolynomial::from_i64s(&[1, -1]);
        self.0
            .iter()
            .enumerate()
            .map(|(i, &f)| {
                one_minus_x
                    .pow((d - i) as u32)
                    .shift(i)
                    .scale(&BigInt::from(f))
            })
            .sum()
    }
}

/// Inverts [`FVector::h_polynomial`] for rank `d`:
/// `f_{k-1} = Σ_{i <= k} h_i C(d-i, k-i)`, returned as `(f_{-1}, ..., f_{d-1})`.
pub fn f_from_h(h: &IntPolynomial, d: usize) -> Vec<BigInt> {
    (0..=d)
        .map(|k| {
            (0..=k)
                .map(|i| {
                    h.coeff(i) * num_integer::binomial(BigInt::from(d - i), BigInt::from(k - i))
                })
                .sum()
        })
        .collect()
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// A finite abstract simplicial complex.
///
/// Only the facets are stored; every subset of a facet is a face. The void
/// complex (no faces at all) has no facets, while the empty complex `{∅}`
/// has the single facet `∅`.
#[derive(Clone)]
pub struct SimplicialComplex {
    facets: Vec<Face>,
    labels: BTreeMap<Vertex, String>,
    faces: OnceLock<Vec<Face>>,
}

impl SimplicialComplex {
    /// Canonicalizes to the inclusion-maximal antichain of the given sets.
    pub fn from_facets<I, F>(facets: I) -> Self
    where
        I: IntoIterator<Item = F>,
        F: Into<Face>,
    {
        let mut fs: Vec<Face> = facets.into_iter().map(Into::into).collect();
        fs.sort_unstable();
        fs.dedup();
        let facets = maximal_elements(fs);
        Self {
            facets,
            labels: BTreeMap::new(),
            faces: OnceLock::new(),
        }
    }

    pub fn void() -> Self {
        Self::from_facets(Vec::<Face>::new())
    }

    /// The complex `{∅}`.
    pub fn empty() -> Self {
        Self::from_facets([Face::empty()])
    }

    /// The full simplex `2^V`.
    pub fn simplex(vertices: impl IntoIterator<Item = Vertex>) -> Self {
        Self::from_facets([Face::new(vertices)])
    }

    /// Attaches display labels; vertices without a label display their id.
    pub fn with_labels(mut self, labels: BTreeMap<Vertex, String>) -> Self {
        self.labels = labels;
        self
    }

    pub fn label(&self, v: Vertex) -> String {
        self.labels
            .get(&v)
            .cloned()
            .unwrap_or_else(|| v.to_string())
    }

    pub fn labels(&self) -> &BTreeMap<Vertex, String> {
        &self.labels
    }

    /// Facets in sorted order.
    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn vertices(&self) -> BTreeSet<Vertex> {
        self.facets
            .iter()
            .flat_map(|f| f.vertices().iter().copied())
            .collect()
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// `None` for the void complex, `-1` for `{∅}`.
    pub fn dimension(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.len() as isize - 1).max()
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    pub fn contains_face(&self, face: &Face) -> bool {
        self.facets.iter().any(|f| face.is_subset(f))
    }

    /// Every face, sorted by size and then lexicographically. Computed once
    /// on first use.
    pub fn faces(&self) -> &[Face] {
        self.faces.get_or_init(|| {
            let mut seen: HashSet<Face> = HashSet::new();
            for f in &self.facets {
                seen.extend(f.subsets());
            }
            let mut all: Vec<Face> = seen.into_iter().collect();
            all.sort_unstable_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
            all
        })
    }

    pub fn f_vector(&self) -> Result<FVector> {
        let dim = self.dimension().ok_or(Error::VoidComplex)?;
        let mut counts = vec![0u64; (dim + 2) as usize];
        for f in self.faces() {
            counts[f.len()] += 1;
        }
        Ok(FVector(counts))
    }

    pub fn h_polynomial(&self) -> Result<IntPolynomial> {
        Ok(self.f_vector()?.h_polynomial())
    }

    /// Vertices joined to `v` by an edge.
    pub fn neighbors(&self) -> HashMap<Vertex, BTreeSet<Vertex>> {
        let mut adj: HashMap<Vertex, BTreeSet<Vertex>> = HashMap::new();
        for f in &self.facets {
            for &a in f.vertices() {
                let entry = adj.entry(a).or_default();
                entry.extend(f.vertices().iter().copied().filter(|&b| b != a));
            }
        }
        adj
    }

    /// Whether every minimal non-face has exactly two elements.
    ///
    /// A minimal non-face with three or more elements has the form `F ∪ {v}`
    /// where `F` is a face and `v` is adjacent to every vertex of `F`.
    /// Conversely, if such an `F ∪ {v}` is never a non-face, every clique of
    /// the 1-skeleton is a face by induction on its size. So it suffices to
    /// check faces against their common neighbours.
    pub fn is_flag(&self) -> bool {
        let faces: HashSet<&Face> = self.faces().iter().collect();
        let adj = self.neighbors();
        self.faces().iter().filter(|f| f.len() >= 2).all(|f| {
            let verts = f.vertices();
            adj[&verts[0]]
                .iter()
                .filter(|&&v| !f.contains(v))
                .filter(|&&v| verts[1..].iter().all(|u| adj[u].contains(&v)))
                .all(|&v| faces.contains(&f.with(v)))
        })
    }

    /// `Δ ∪ {F ∪ {apex} : F ∈ Δ}`
    pub fn cone(&self, apex: Vertex) -> Result<Self> {
        if self.facets.iter().any(|f| f.contains(apex)) {
            return Err(Error::VertexExists(apex));
        }
        Ok(self.derived(self.facets.iter().map(|f| f.with(apex))))
    }

    /// `{G \ F : G ∈ Δ, F ⊆ G}`
    pub fn link(&self, face: &Face) -> Result<Self> {
        if !self.contains_face(face) {
            return Err(Error::NotAFace(face.vertices().to_vec()));
        }
        Ok(self.derived(
            self.facets
                .iter()
                .filter(|g| face.is_subset(g))
                .map(|g| g.difference(face)),
        ))
    }

    /// Subcomplex of faces contained in `vertices`.
    pub fn induced(&self, vertices: &BTreeSet<Vertex>) -> Self {
        if self.is_void() {
            return Self::void();
        }
        self.derived(self.facets.iter().map(|g| {
            g.vertices()
                .iter()
                .copied()
                .filter(|v| vertices.contains(v))
                .collect::<Face>()
        }))
    }

    /// Stellar subdivision on the edge `{a, b}` with new vertex `v`: faces
    /// containing the edge are removed and `F ∪ {v}`, `F ∪ {v, a}`,
    /// `F ∪ {v, b}` are added for every `F` in the link of the edge.
    pub fn stellar_subdivide_edge(&self, edge: &Face, v: Vertex) -> Result<Self> {
        if edge.len() != 2 || !self.contains_face(edge) {
            return Err(Error::NotAnEdge(edge.vertices().to_vec()));
        }
        if self.facets.iter().any(|f| f.contains(v)) {
            return Err(Error::VertexExists(v));
        }
        let (a, b) = (edge.vertices()[0], edge.vertices()[1]);
        let mut out = Vec::with_capacity(self.facets.len() + 1);
        for g in &self.facets {
            if edge.is_subset(g) {
                let rest = g.difference(edge).with(v);
                out.push(rest.with(a));
                out.push(rest.with(b));
            } else {
                out.push(g.clone());
            }
        }
        Ok(self.derived(out))
    }

    /// The order complex of the poset of nonempty faces. Vertex `i` of the
    /// result is the `i`-th nonempty face in [`faces`](Self::faces) order.
    pub fn barycentric_subdivision(&self) -> Result<Self> {
        if self.is_void() {
            return Err(Error::VoidComplex);
        }
        let nonempty: Vec<&Face> = self.faces().iter().filter(|f| !f.is_empty()).collect();
        let index: HashMap<&Face, Vertex> =
            nonempty.iter().enumerate().map(|(i, f)| (*f, i)).collect();
        let mut chains = Vec::new();
        for facet in &self.facets {
            for order in permutations(facet.vertices()) {
                let mut prefix = Face::empty();
                let mut chain = Vec::with_capacity(order.len());
                for v in order {
                    prefix = prefix.with(v);
                    chain.push(index[&prefix]);
                }
                chains.push(Face::new(chain));
            }
        }
        let labels = nonempty
            .iter()
            .enumerate()
            .map(|(i, f)| {
                let names: Vec<String> = f.vertices().iter().map(|&v| self.label(v)).collect();
                (i, format!("{{{}}}", names.join(",")))
            })
            .collect();
        Ok(Self::from_facets(chains).with_labels(labels))
    }

    /// Builds a complex on (a subset of) this complex's vertices, keeping the
    /// labels that still apply.
    fn derived(&self, facets: impl IntoIterator<Item = Face>) -> Self {
        let c = Self::from_facets(facets);
        let verts = c.vertices();
        let labels = self
            .labels
            .iter()
            .filter(|(v, _)| verts.contains(v))
            .map(|(v, l)| (*v, l.clone()))
            .collect();
        c.with_labels(labels)
    }
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.facets == other.facets
    }
}

impl Eq for SimplicialComplex {}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialComplex")
            .field("facets", &self.facets)
            .finish()
    }
}

/// Drops every set strictly contained in another. Input must be deduplicated.
fn maximal_elements(mut fs: Vec<Face>) -> Vec<Face> {
    let uniform = fs.windows(2).all(|w| w[0].len() == w[1].len());
    if !uniform {
        let mut by_vertex: HashMap<Vertex, Vec<usize>> = HashMap::new();
        for (i, f) in fs.iter().enumerate() {
            for &v in f.vertices() {
                by_vertex.entry(v).or_default().push(i);
            }
        }
        let keep: Vec<bool> = fs
            .iter()
            .map(|f| {
                let Some(&first) = f.vertices().first() else {
                    // ∅ is maximal only in {∅}
                    return fs.len() == 1;
                };
                !by_vertex[&first]
                    .iter()
                    .any(|&j| fs[j].len() > f.len() && f.is_subset(&fs[j]))
            })
            .collect();
        fs = fs
            .into_iter()
            .zip(keep)
            .filter_map(|(f, k)| k.then_some(f))
            .collect();
    }
    fs
}

fn permutations(items: &[Vertex]) -> Vec<Vec<Vertex>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// JSON form: `{"vertices": [labels...], "facets": [[indices...]...]}`,
/// where facet entries index into `vertices`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub vertices: Vec<String>,
    pub facets: Vec<Vec<usize>>,
}

impl ComplexJson {
    /// Vertices are listed in increasing id order.
    pub fn from_complex(c: &SimplicialComplex) -> Self {
        let verts: Vec<Vertex> = c.vertices().into_iter().collect();
        let pos: HashMap<Vertex, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        Self {
            vertices: verts.iter().map(|&v| c.label(v)).collect(),
            facets: c
                .facets()
                .iter()
                .map(|f| f.vertices().iter().map(|v| pos[v]).collect())
                .collect(),
        }
    }

    /// Vertex `i` of the result is the `i`-th entry of `vertices`.
    pub fn to_complex(&self) -> Result<SimplicialComplex> {
        for f in &self.facets {
            if let Some(&bad) = f.iter().find(|&&i| i >= self.vertices.len()) {
                return Err(Error::Parse(format!(
                    "facet index {bad} out of range for {} vertices",
                    self.vertices.len()
                )));
            }
        }
        let labels = self.vertices.iter().cloned().enumerate().collect();
        Ok(
            SimplicialComplex::from_facets(self.facets.iter().cloned().map(Face::from))
                .with_labels(labels),
        )
    }
}
