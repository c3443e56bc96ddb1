//! Regular simplicial complexes specified by their maximal simplices.
//!
//! A complex stores its maximal simplices together with a derived face index
//! (every nonempty face of every maximal simplex, mapped to the maximal
//! simplices containing it) and per-vertex adjacency. Vertices are dense
//! integers `0..V` after a top-level build; complexes derived from a parent
//! (links, stars, full subcomplexes) keep the parent's numbering and name
//! table so that witnesses remain meaningful in the parent.
//!
//! All edges of a regular complex have unit length, and the dihedral angle of
//! a regular tetrahedron at an edge is `arccos(1/3)`; that constant is the
//! edge length used in metric edge links.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock};

/// Dihedral angle of a regular tetrahedron at an edge: `arccos(1/3)`.
pub fn dihedral_angle_tet() -> f64 {
    (1.0f64 / 3.0).acos()
}

/// Dihedral angle of a regular n-simplex at a codimension-2 face: `arccos(1/n)`.
pub fn dihedral_angle(n: u32) -> f64 {
    (1.0f64 / n as f64).acos()
}

/// Tolerance used when comparing sums of symbolic angle constants.
pub const ANGLE_TOL: f64 = 1e-12;

/// A vertex of a complex. Ids are dense `0..V` after a top-level build.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VertexId(pub u32);

impl VertexId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A simplex, identified with its vertex set. Vertices are kept strictly
/// increasing; the dimension is one less than the vertex count.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Simplex {
    vertices: Vec<VertexId>,
}

impl Simplex {
    pub fn new(mut vertices: Vec<VertexId>) -> Result<Self, ComplexError> {
        if vertices.is_empty() {
            return Err(ComplexError::EmptySimplex);
        }
        vertices.sort();
        for pair in vertices.windows(2) {
            if pair[0] == pair[1] {
                return Err(ComplexError::DuplicateVertexInSimplex(pair[0]));
            }
        }
        Ok(Simplex { vertices })
    }

    pub fn vertex(v: VertexId) -> Self {
        Simplex { vertices: vec![v] }
    }

    pub fn edge(u: VertexId, v: VertexId) -> Result<Self, ComplexError> {
        Simplex::new(vec![u, v])
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn is_face_of(&self, other: &Simplex) -> bool {
        self.vertices.iter().all(|v| other.contains(*v))
    }

    /// All nonempty subsets, i.e. the faces of this simplex including itself.
    pub fn faces(&self) -> Vec<Simplex> {
        let n = self.vertices.len();
        let mut out = Vec::with_capacity((1usize << n) - 1);
        for mask in 1u32..(1u32 << n) {
            let vs: Vec<VertexId> = (0..n)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| self.vertices[i])
                .collect();
            out.push(Simplex { vertices: vs });
        }
        out
    }

    /// The vertices of `self` not in `other`; empty result is `None`.
    pub fn difference(&self, other: &Simplex) -> Option<Simplex> {
        let vs: Vec<VertexId> = self
            .vertices
            .iter()
            .copied()
            .filter(|v| !other.contains(*v))
            .collect();
        if vs.is_empty() {
            None
        } else {
            Some(Simplex { vertices: vs })
        }
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Errors from complex construction and queries.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ComplexError {
    EmptyInput,
    EmptySimplex,
    DuplicateVertexInSimplex(VertexId),
    DisconnectedComplex,
    UnknownVertex(String),
    SimplexNotInComplex(String),
    EmptyOrDisconnectedResult,
    NotAnEdge(String),
    DimensionTooHigh { dim: usize, max: usize },
    NotABijection,
    NotSimplicial(String),
}

impl fmt::Display for ComplexError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComplexError::EmptyInput => write!(f, "no maximal simplices given"),
            ComplexError::EmptySimplex => write!(f, "simplex has no vertices"),
            ComplexError::DuplicateVertexInSimplex(v) => {
                write!(f, "vertex {v} repeated within a simplex")
            }
            ComplexError::DisconnectedComplex => write!(f, "1-skeleton is not connected"),
            ComplexError::UnknownVertex(n) => write!(f, "unknown vertex `{n}`"),
            ComplexError::SimplexNotInComplex(s) => write!(f, "simplex {s} is not in the complex"),
            ComplexError::EmptyOrDisconnectedResult => {
                write!(f, "full subcomplex is empty or disconnected")
            }
            ComplexError::NotAnEdge(s) => write!(f, "{s} is not an edge of the complex"),
            ComplexError::DimensionTooHigh { dim, max } => {
                write!(f, "complex has dimension {dim}, operation requires at most {max}")
            }
            ComplexError::NotABijection => write!(f, "map is not a bijection on the vertex set"),
            ComplexError::NotSimplicial(s) => {
                write!(f, "permutation does not preserve maximal simplices: image of {s} absent")
            }
        }
    }
}

impl std::error::Error for ComplexError {}

/// A finite simplicial complex, immutable after construction.
pub struct SimplicialComplex {
    /// Name table indexed by raw vertex id. Shared with derived subcomplexes.
    names: Arc<Vec<String>>,
    /// Present vertices, sorted. Dense `0..V` for top-level builds only.
    vertices: Vec<VertexId>,
    /// Maximal simplices, sorted.
    maximal: Vec<Simplex>,
    /// Every nonempty face of every maximal simplex, mapped to the (sorted)
    /// indices into `maximal` of the maximal simplices containing it.
    faces: HashMap<Simplex, Vec<u32>>,
    /// Sorted neighbor lists indexed by raw vertex id.
    neighbors: Vec<Vec<VertexId>>,
    dim: usize,
    dist: OnceLock<Vec<Vec<u32>>>,
}

impl Clone for SimplicialComplex {
    fn clone(&self) -> Self {
        SimplicialComplex {
            names: Arc::clone(&self.names),
            vertices: self.vertices.clone(),
            maximal: self.maximal.clone(),
            faces: self.faces.clone(),
            neighbors: self.neighbors.clone(),
            dim: self.dim,
            dist: OnceLock::new(),
        }
    }
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices
            && self.maximal == other.maximal
            && *self.names == *other.names
    }
}

impl Eq for SimplicialComplex {}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialComplex")
            .field("vertices", &self.vertices.len())
            .field("dim", &self.dim)
            .field("maximal", &self.maximal)
            .finish()
    }
}

pub const UNREACHABLE: u32 = u32::MAX;

impl SimplicialComplex {
    /// Builds a complex from maximal simplices over dense vertex ids `0..V`
    /// with the given name table. Redundant (non-maximal) input simplices are
    /// absorbed; the 1-skeleton must be connected and every id `0..V` must
    /// occur.
    pub fn build(maximal: Vec<Simplex>, names: Vec<String>) -> Result<Self, ComplexError> {
        if maximal.is_empty() {
            return Err(ComplexError::EmptyInput);
        }
        let vcount = names.len();
        for s in &maximal {
            for v in s.vertices() {
                if v.index() >= vcount {
                    return Err(ComplexError::UnknownVertex(format!("{v}")));
                }
            }
        }
        let mut seen = vec![false; vcount];
        for s in &maximal {
            for v in s.vertices() {
                seen[v.index()] = true;
            }
        }
        if !seen.iter().all(|&b| b) {
            let missing = seen.iter().position(|&b| !b).unwrap();
            return Err(ComplexError::UnknownVertex(names[missing].clone()));
        }
        let complex = Self::assemble(maximal, Arc::new(names))?;
        if !complex.is_connected() {
            return Err(ComplexError::DisconnectedComplex);
        }
        Ok(complex)
    }

    /// Builds a complex from vertex-name lists, interning names in order of
    /// first appearance. Convenience entry point for tests and generators.
    pub fn from_named(maximal: &[&[&str]]) -> Result<Self, ComplexError> {
        let mut names: Vec<String> = Vec::new();
        let mut index: BTreeMap<String, VertexId> = BTreeMap::new();
        let mut sims = Vec::new();
        for group in maximal {
            let mut vs = Vec::with_capacity(group.len());
            for name in *group {
                let id = *index.entry((*name).to_string()).or_insert_with(|| {
                    let id = VertexId(names.len() as u32);
                    names.push((*name).to_string());
                    id
                });
                vs.push(id);
            }
            sims.push(Simplex::new(vs)?);
        }
        Self::build(sims, names)
    }

    /// Shared assembly: face closure, absorption of non-maximal inputs,
    /// adjacency. Does not require connectivity or dense numbering; used for
    /// derived subcomplexes as well as top-level builds.
    fn assemble(mut input: Vec<Simplex>, names: Arc<Vec<String>>) -> Result<Self, ComplexError> {
        input.sort();
        input.dedup();
        // Drop simplices that are faces of other input simplices.
        let mut maximal: Vec<Simplex> = Vec::new();
        for s in &input {
            if !input.iter().any(|t| t != s && s.is_face_of(t)) {
                maximal.push(s.clone());
            }
        }
        let mut faces: HashMap<Simplex, Vec<u32>> = HashMap::new();
        for (i, m) in maximal.iter().enumerate() {
            for face in m.faces() {
                faces.entry(face).or_default().push(i as u32);
            }
        }
        let mut vertices: Vec<VertexId> = faces
            .keys()
            .filter(|s| s.dim() == 0)
            .map(|s| s.vertices()[0])
            .collect();
        vertices.sort();
        let size = names.len().max(
            vertices
                .last()
                .map(|v| v.index() + 1)
                .unwrap_or(0),
        );
        let mut neighbor_sets: Vec<BTreeSet<VertexId>> = vec![BTreeSet::new(); size];
        for s in faces.keys().filter(|s| s.dim() == 1) {
            let (u, v) = (s.vertices()[0], s.vertices()[1]);
            neighbor_sets[u.index()].insert(v);
            neighbor_sets[v.index()].insert(u);
        }
        let neighbors = neighbor_sets
            .into_iter()
            .map(|s| s.into_iter().collect())
            .collect();
        let dim = maximal.iter().map(|s| s.dim()).max().unwrap_or(0);
        Ok(SimplicialComplex {
            names,
            vertices,
            maximal,
            faces,
            neighbors,
            dim,
            dist: OnceLock::new(),
        })
    }

    /// Derived complex over the same name table; may be empty or disconnected.
    fn derived(&self, maximal: Vec<Simplex>) -> SimplicialComplex {
        if maximal.is_empty() {
            return SimplicialComplex {
                names: Arc::clone(&self.names),
                vertices: Vec::new(),
                maximal: Vec::new(),
                faces: HashMap::new(),
                neighbors: vec![Vec::new(); self.names.len()],
                dim: 0,
                dist: OnceLock::new(),
            };
        }
        Self::assemble(maximal, Arc::clone(&self.names)).expect("derived simplices are valid")
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn maximal_simplices(&self) -> &[Simplex] {
        &self.maximal
    }

    pub fn name(&self, v: VertexId) -> &str {
        &self.names[v.index()]
    }

    pub fn names(&self) -> &Arc<Vec<String>> {
        &self.names
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<VertexId> {
        self.vertices
            .iter()
            .copied()
            .find(|v| self.names[v.index()] == name)
    }

    pub fn has_vertex(&self, v: VertexId) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn has_simplex(&self, s: &Simplex) -> bool {
        self.faces.contains_key(s)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u != v
            && u.index() < self.neighbors.len()
            && self.neighbors[u.index()].binary_search(&v).is_ok()
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.neighbors[v.index()]
    }

    /// Edges as ordered pairs `u < v`, sorted.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::new();
        for &u in &self.vertices {
            for &v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// All simplices of the complex, sorted by dimension then lexicographically.
    pub fn all_simplices(&self) -> Vec<Simplex> {
        let mut out: Vec<Simplex> = self.faces.keys().cloned().collect();
        out.sort_by(|a, b| a.dim().cmp(&b.dim()).then_with(|| a.cmp(b)));
        out
    }

    pub fn simplex_count_by_dim(&self, dim: usize) -> usize {
        self.faces.keys().filter(|s| s.dim() == dim).count()
    }

    /// Maximal simplices containing `s`, as indices into `maximal_simplices`.
    pub fn maximal_containing(&self, s: &Simplex) -> &[u32] {
        self.faces.get(s).map(|v| v.as_slice()).unwrap_or(&[])
    }

    pub fn is_connected(&self) -> bool {
        if self.vertices.is_empty() {
            return true;
        }
        let start = self.vertices[0];
        let mut seen: BTreeSet<VertexId> = BTreeSet::new();
        let mut stack = vec![start];
        seen.insert(start);
        while let Some(v) = stack.pop() {
            for &w in self.neighbors(v) {
                if seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen.len() == self.vertices.len()
    }

    fn distance_matrix(&self) -> &Vec<Vec<u32>> {
        self.dist.get_or_init(|| {
            let size = self.neighbors.len();
            let mut all = vec![Vec::new(); size];
            for &src in &self.vertices {
                let mut d = vec![UNREACHABLE; size];
                d[src.index()] = 0;
                let mut queue = std::collections::VecDeque::new();
                queue.push_back(src);
                while let Some(v) = queue.pop_front() {
                    let dv = d[v.index()];
                    for &w in self.neighbors(v) {
                        if d[w.index()] == UNREACHABLE {
                            d[w.index()] = dv + 1;
                            queue.push_back(w);
                        }
                    }
                }
                all[src.index()] = d;
            }
            all
        })
    }

    /// Combinatorial distance in the 1-skeleton.
    pub fn distance(&self, u: VertexId, v: VertexId) -> Result<u32, ComplexError> {
        if !self.has_vertex(u) {
            return Err(ComplexError::UnknownVertex(self.name_or_id(u)));
        }
        if !self.has_vertex(v) {
            return Err(ComplexError::UnknownVertex(self.name_or_id(v)));
        }
        Ok(self.distance_matrix()[u.index()][v.index()])
    }

    fn name_or_id(&self, v: VertexId) -> String {
        if v.index() < self.names.len() {
            self.names[v.index()].clone()
        } else {
            format!("#{v}")
        }
    }

    /// Closed star and combinatorial link of a simplex.
    ///
    /// The closed star is the union of all maximal simplices containing
    /// `s`, with their faces; the link is every simplex `t` such that the
    /// join `s * t` is a simplex of the complex.
    pub fn local_structure(
        &self,
        s: &Simplex,
    ) -> Result<(SimplicialComplex, SimplicialComplex), ComplexError> {
        if !self.has_simplex(s) {
            return Err(ComplexError::SimplexNotInComplex(format!("{s}")));
        }
        let containing = self.maximal_containing(s);
        let star: Vec<Simplex> = containing
            .iter()
            .map(|&i| self.maximal[i as usize].clone())
            .collect();
        let link: Vec<Simplex> = containing
            .iter()
            .filter_map(|&i| self.maximal[i as usize].difference(s))
            .collect();
        Ok((self.derived(star), self.derived(link)))
    }

    /// The combinatorial link alone; empty complex if `s` is a maximal simplex.
    pub fn link(&self, s: &Simplex) -> Result<SimplicialComplex, ComplexError> {
        Ok(self.local_structure(s)?.1)
    }

    /// The maximal subcomplex with vertices contained in `keep`. Always full
    /// in the ambient complex; may be empty or disconnected.
    pub fn induced(&self, keep: &BTreeSet<VertexId>) -> SimplicialComplex {
        let mut parts = Vec::new();
        for m in &self.maximal {
            let vs: Vec<VertexId> = m
                .vertices()
                .iter()
                .copied()
                .filter(|v| keep.contains(v))
                .collect();
            if !vs.is_empty() {
                parts.push(Simplex { vertices: vs });
            }
        }
        self.derived(parts)
    }

    /// Full subcomplex on a vertex set. Errors when the result is empty or
    /// disconnected; use [`SimplicialComplex::induced`] when those are fine.
    pub fn full_subcomplex(&self, keep: &[VertexId]) -> Result<SimplicialComplex, ComplexError> {
        if keep.is_empty() {
            return Err(ComplexError::EmptyOrDisconnectedResult);
        }
        for &v in keep {
            if !self.has_vertex(v) {
                return Err(ComplexError::UnknownVertex(self.name_or_id(v)));
            }
        }
        let set: BTreeSet<VertexId> = keep.iter().copied().collect();
        let sub = self.induced(&set);
        if sub.is_empty() || !sub.is_connected() || sub.vertex_count() != set.len() {
            return Err(ComplexError::EmptyOrDisconnectedResult);
        }
        Ok(sub)
    }

    /// Metric link of an edge in a complex of dimension at most three: one
    /// metric edge of length `arccos(1/3)` per tetrahedron containing the
    /// edge. Link vertices coming only from triangles are isolated.
    pub fn edge_metric_link(&self, e: &Simplex) -> Result<MetricGraph, ComplexError> {
        if e.dim() != 1 || !self.has_simplex(e) {
            return Err(ComplexError::NotAnEdge(format!("{e}")));
        }
        if self.dim > 3 {
            return Err(ComplexError::DimensionTooHigh { dim: self.dim, max: 3 });
        }
        let link = self.link(e)?;
        let mut edges = Vec::new();
        for m in link.maximal_simplices() {
            if m.dim() == 1 {
                edges.push((m.vertices()[0], m.vertices()[1], dihedral_angle_tet()));
            }
        }
        Ok(MetricGraph { vertices: link.vertices().to_vec(), edges })
    }

    /// Checks that a permutation of the vertex set maps maximal simplices
    /// onto maximal simplices and wraps it as an automorphism.
    pub fn validate_automorphism(&self, perm: &[u32]) -> Result<Automorphism, ComplexError> {
        let n = self.vertex_count();
        if perm.len() != n {
            return Err(ComplexError::NotABijection);
        }
        let mut hit = vec![false; n];
        for &img in perm {
            let i = img as usize;
            if i >= n || hit[i] {
                return Err(ComplexError::NotABijection);
            }
            hit[i] = true;
        }
        for m in &self.maximal {
            let image = Simplex::new(
                m.vertices()
                    .iter()
                    .map(|v| VertexId(perm[v.index()]))
                    .collect(),
            )?;
            if !self.maximal.binary_search(&image).is_ok() {
                return Err(ComplexError::NotSimplicial(format!("{m}")));
            }
        }
        Ok(Automorphism { perm: perm.to_vec() })
    }
}

/// A graph with positive edge lengths in radians, as arises from the metric
/// link of an edge.
#[derive(Clone, PartialEq, Debug)]
pub struct MetricGraph {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<(VertexId, VertexId, f64)>,
}

impl MetricGraph {
    /// Combinatorial girth: the number of edges in a shortest cycle, or
    /// `None` for a forest. Computed by per-edge BFS with the edge removed.
    pub fn girth_edges(&self) -> Option<u32> {
        let mut adj: BTreeMap<VertexId, Vec<(usize, VertexId)>> = BTreeMap::new();
        for (i, &(u, v, _)) in self.edges.iter().enumerate() {
            adj.entry(u).or_default().push((i, v));
            adj.entry(v).or_default().push((i, u));
        }
        let mut best: Option<u32> = None;
        for (i, &(u, v, _)) in self.edges.iter().enumerate() {
            // shortest u-v path avoiding edge i
            let mut dist: BTreeMap<VertexId, u32> = BTreeMap::new();
            dist.insert(u, 0);
            let mut queue = std::collections::VecDeque::new();
            queue.push_back(u);
            while let Some(x) = queue.pop_front() {
                let dx = dist[&x];
                if x == v {
                    break;
                }
                if let Some(nbrs) = adj.get(&x) {
                    for &(j, y) in nbrs {
                        if j != i && !dist.contains_key(&y) {
                            dist.insert(y, dx + 1);
                            queue.push_back(y);
                        }
                    }
                }
            }
            if let Some(&d) = dist.get(&v) {
                let cycle = d + 1;
                best = Some(best.map_or(cycle, |b| b.min(cycle)));
            }
        }
        best
    }

    /// Total length of a shortest cycle in radians, or `None` for a forest.
    /// All edges of an edge link have equal length, so the unweighted girth
    /// scales by the common length.
    pub fn girth_length(&self) -> Option<f64> {
        self.girth_edges()
            .map(|g| g as f64 * self.edges.first().map(|e| e.2).unwrap_or(0.0))
    }
}

/// A simplicial automorphism, stored as a permutation of dense vertex ids.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Automorphism {
    perm: Vec<u32>,
}

impl Automorphism {
    pub fn identity(n: usize) -> Self {
        Automorphism { perm: (0..n as u32).collect() }
    }

    pub fn perm(&self) -> &[u32] {
        &self.perm
    }

    pub fn apply(&self, v: VertexId) -> VertexId {
        VertexId(self.perm[v.index()])
    }

    pub fn apply_simplex(&self, s: &Simplex) -> Simplex {
        Simplex::new(s.vertices().iter().map(|v| self.apply(*v)).collect())
            .expect("permutation preserves distinctness")
    }

    pub fn apply_sequence(&self, vs: &[VertexId]) -> Vec<VertexId> {
        vs.iter().map(|v| self.apply(*v)).collect()
    }

    /// `self` after `other`: applies `other` first.
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        Automorphism {
            perm: other.perm.iter().map(|&v| self.perm[v as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Automorphism {
        let mut inv = vec![0u32; self.perm.len()];
        for (i, &img) in self.perm.iter().enumerate() {
            inv[img as usize] = i as u32;
        }
        Automorphism { perm: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &v)| i as u32 == v)
    }

    /// Closure of a generating set under composition, by breadth-first
    /// multiplication. Capped; generating sets of desk-scale symmetry groups
    /// stay far below the cap.
    pub fn closure(generators: &[Automorphism], cap: usize) -> Vec<Automorphism> {
        if generators.is_empty() {
            return Vec::new();
        }
        let n = generators[0].perm.len();
        let mut seen: BTreeSet<Vec<u32>> = BTreeSet::new();
        let mut out = Vec::new();
        let mut queue = std::collections::VecDeque::new();
        let id = Automorphism::identity(n);
        seen.insert(id.perm.clone());
        queue.push_back(id.clone());
        out.push(id);
        while let Some(g) = queue.pop_front() {
            for gen in generators {
                let h = gen.compose(&g);
                if seen.insert(h.perm.clone()) {
                    out.push(h.clone());
                    queue.push_back(h);
                    if out.len() >= cap {
                        return out;
                    }
                }
            }
        }
        out
    }
}
