//! Triangulated disk diagrams and the minimal spanning-disk search.
//!
//! A disk diagram is a contractible planar 2-complex with triangular faces,
//! carried here as: a local vertex table with labels into a complex, a
//! triangle list, and the boundary walk (clockwise). Degenerate diagrams are
//! allowed — a backtracking boundary is spanned by bare edges ("spines") —
//! and `validate` reports whether the diagram is nonsingular (homeomorphic to
//! the closed disk) together with its cut points.
//!
//! The spanning-disk search runs iterative deepening on combinatorial area.
//! At each bound it reduces the boundary word of the unfilled hole: gluing a
//! triangle across two consecutive hole edges, gluing a triangle along one
//! hole edge (fresh third vertex), or folding two consecutive hole edges that
//! carry the same labels. Moves are anchored at the canonically least
//! rotation of the hole word, failed (word, budget) states are memoized, and
//! finished diagrams are deduplicated up to label-preserving isomorphism
//! fixing the boundary parameterization.

use crate::complex::{Simplex, SimplicialComplex, VertexId};
use crate::paths::CombinatorialPath;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum DiskError {
    NotADisk(String),
    LabelNotAFace(String),
    SingularDisk,
    NotClosed,
    NoDiskWithinBound { max_area: usize },
    TooManyDisks { limit: usize },
    LabelMismatchOnGamma,
    UnresolvableVertex(String),
    InvalidInput(String),
}

impl fmt::Display for DiskError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiskError::NotADisk(m) => write!(f, "not a disk diagram: {m}"),
            DiskError::LabelNotAFace(m) => write!(f, "label is not a face: {m}"),
            DiskError::SingularDisk => write!(f, "disk is singular"),
            DiskError::NotClosed => write!(f, "boundary path is not closed"),
            DiskError::NoDiskWithinBound { max_area } => {
                write!(f, "no spanning disk within area bound {max_area}")
            }
            DiskError::TooManyDisks { limit } => {
                write!(f, "more than {limit} minimal disks; raise the limit")
            }
            DiskError::LabelMismatchOnGamma => {
                write!(f, "shared geodesic does not match both boundaries")
            }
            DiskError::UnresolvableVertex(m) => {
                write!(f, "cannot resolve interior vertex: {m}")
            }
            DiskError::InvalidInput(m) => write!(f, "{m}"),
        }
    }
}

impl std::error::Error for DiskError {}

/// A disk diagram over local vertices `0..labels.len()`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DiskDiagram {
    /// Local vertex -> vertex of the target complex.
    labels: Vec<VertexId>,
    /// Triangles over local ids, each sorted, list sorted.
    triangles: Vec<[usize; 3]>,
    /// Boundary walk of local ids, cyclic (first vertex not repeated).
    boundary: Vec<usize>,
    /// Optional doubly-based structure: (start, end) as walk positions.
    basepoints: Option<(usize, usize)>,
}

/// Outcome of structural validation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DiskValidation {
    pub nonsingular: bool,
    /// Local ids whose removal disconnects the diagram (boundary revisits).
    pub cut_points: Vec<usize>,
    /// Edges lying on no triangle.
    pub spine_edges: Vec<(usize, usize)>,
}

/// Sign of a boundary vertex: `4 - degree` positive, zero, or negative.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Sign {
    /// Defect `4 - deg` in 1..=3; class alpha_k admits the k-th basic move.
    Positive(u8),
    Zero,
    Negative,
}

pub fn sign_of_defect(defect: i64) -> Sign {
    match defect {
        d if d > 0 => Sign::Positive(d.min(3) as u8),
        0 => Sign::Zero,
        _ => Sign::Negative,
    }
}

/// Boundary and interior degrees of a nonsingular disk.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SignClassification {
    /// One entry per boundary walk position: (local id, degree, defect 4-deg).
    pub boundary: Vec<(usize, usize, i64)>,
    /// Interior vertices with their degrees.
    pub interior: Vec<(usize, usize)>,
}

impl SignClassification {
    pub fn sign_at(&self, position: usize) -> Sign {
        sign_of_defect(self.boundary[position].2)
    }
}

impl DiskDiagram {
    pub fn new(
        labels: Vec<VertexId>,
        mut triangles: Vec<[usize; 3]>,
        boundary: Vec<usize>,
        basepoints: Option<(usize, usize)>,
    ) -> Result<Self, DiskError> {
        let n = labels.len();
        if boundary.is_empty() {
            return Err(DiskError::NotADisk("empty boundary walk".into()));
        }
        for t in &mut triangles {
            t.sort_unstable();
            if t[0] == t[1] || t[1] == t[2] {
                return Err(DiskError::NotADisk(format!("degenerate triangle {t:?}")));
            }
            if t[2] >= n {
                return Err(DiskError::NotADisk("triangle vertex out of range".into()));
            }
            let (a, b, c) = (labels[t[0]], labels[t[1]], labels[t[2]]);
            if a == b || b == c || a == c {
                return Err(DiskError::NotADisk(format!(
                    "triangle {t:?} has repeated labels"
                )));
            }
        }
        triangles.sort_unstable();
        for w in triangles.windows(2) {
            if w[0] == w[1] {
                return Err(DiskError::NotADisk(format!("triangle {:?} repeated", w[0])));
            }
        }
        if boundary.iter().any(|&v| v >= n) {
            return Err(DiskError::NotADisk("boundary vertex out of range".into()));
        }
        Ok(DiskDiagram { labels, triangles, boundary, basepoints })
    }

    /// A single labeled triangle with boundary read `a b c`.
    pub fn triangle(a: VertexId, b: VertexId, c: VertexId) -> Self {
        DiskDiagram {
            labels: vec![a, b, c],
            triangles: vec![[0, 1, 2]],
            boundary: vec![0, 1, 2],
            basepoints: None,
        }
    }

    pub fn labels(&self) -> &[VertexId] {
        &self.labels
    }

    pub fn label(&self, local: usize) -> VertexId {
        self.labels[local]
    }

    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    /// Combinatorial area: the number of triangles.
    pub fn area(&self) -> usize {
        self.triangles.len()
    }

    /// Boundary walk of local ids (cyclic; first vertex not repeated).
    pub fn boundary_walk(&self) -> &[usize] {
        &self.boundary
    }

    /// Number of edges in the boundary walk.
    pub fn boundary_len(&self) -> usize {
        if self.boundary.len() <= 1 {
            0
        } else {
            self.boundary.len()
        }
    }

    pub fn basepoints(&self) -> Option<(usize, usize)> {
        self.basepoints
    }

    pub fn with_basepoints(mut self, start: usize, end: usize) -> Self {
        self.basepoints = Some((start, end));
        self
    }

    /// Boundary walk as complex vertices.
    pub fn boundary_labels(&self) -> Vec<VertexId> {
        self.boundary.iter().map(|&v| self.labels[v]).collect()
    }

    /// All edges (unordered local pairs): triangle edges plus walk edges.
    pub fn edge_set(&self) -> BTreeSet<(usize, usize)> {
        let mut edges = BTreeSet::new();
        for t in &self.triangles {
            edges.insert((t[0], t[1]));
            edges.insert((t[0], t[2]));
            edges.insert((t[1], t[2]));
        }
        let b = &self.boundary;
        if b.len() > 1 {
            for i in 0..b.len() {
                let (u, v) = (b[i], b[(i + 1) % b.len()]);
                edges.insert((u.min(v), u.max(v)));
            }
        }
        edges
    }

    /// Degree of a local vertex: the number of edges at it.
    pub fn degree(&self, local: usize) -> usize {
        self.edge_set()
            .iter()
            .filter(|&&(a, b)| a == local || b == local)
            .count()
    }

    fn boundary_multiplicity(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &v in &self.boundary {
            *m.entry(v).or_insert(0) += 1;
        }
        m
    }

    /// Interior vertices: local ids not on the boundary walk.
    pub fn interior_vertices(&self) -> Vec<usize> {
        let on_walk: BTreeSet<usize> = self.boundary.iter().copied().collect();
        (0..self.labels.len()).filter(|v| !on_walk.contains(v)).collect()
    }

    /// Structural validation. Checks that the diagram is a connected,
    /// contractible planar complex whose every edge carries two sides
    /// (triangles or boundary walk traversals), then classifies it as
    /// nonsingular or singular with cut points and spine edges.
    pub fn validate(&self) -> Result<DiskValidation, DiskError> {
        let n = self.labels.len();
        let edges = self.edge_set();
        // every local vertex must occur somewhere
        let mut used = vec![false; n];
        for &(a, b) in &edges {
            used[a] = true;
            used[b] = true;
        }
        if self.boundary.len() == 1 {
            used[self.boundary[0]] = true;
        }
        if !used.iter().all(|&u| u) {
            return Err(DiskError::NotADisk("unused local vertex".into()));
        }
        // labels of adjacent locals must differ
        for &(a, b) in &edges {
            if self.labels[a] == self.labels[b] {
                return Err(DiskError::NotADisk(format!(
                    "edge ({a},{b}) has equal labels"
                )));
            }
        }
        // each edge has exactly two sides: triangle incidences plus walk traversals
        let mut sides: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for t in &self.triangles {
            for e in [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])] {
                *sides.entry(e).or_insert(0) += 1;
            }
        }
        let b = &self.boundary;
        if b.len() > 1 {
            for i in 0..b.len() {
                let (u, v) = (b[i], b[(i + 1) % b.len()]);
                *sides.entry((u.min(v), u.max(v))).or_insert(0) += 1;
            }
        }
        let mut spine_edges = Vec::new();
        for (&e, &count) in &sides {
            if count != 2 {
                return Err(DiskError::NotADisk(format!(
                    "edge {e:?} has {count} sides, expected 2"
                )));
            }
            let on_triangle = self
                .triangles
                .iter()
                .any(|t| [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])].contains(&e));
            if !on_triangle {
                spine_edges.push(e);
            }
        }
        // Euler characteristic of a contractible complex
        let euler = n as i64 - edges.len() as i64 + self.triangles.len() as i64;
        if euler != 1 {
            return Err(DiskError::NotADisk(format!(
                "Euler characteristic {euler}, expected 1"
            )));
        }
        if !self.edge_connected(&edges) {
            return Err(DiskError::NotADisk("diagram is disconnected".into()));
        }
        // fan condition at every vertex
        let mult = self.boundary_multiplicity();
        let mut cut_points: Vec<usize> = mult
            .iter()
            .filter(|&(_, &m)| m >= 2)
            .map(|(&v, _)| v)
            .collect();
        for v in 0..n {
            if !self.vertex_fan_ok(v, &edges, &mult) && !cut_points.contains(&v) {
                cut_points.push(v);
            }
        }
        cut_points.sort_unstable();
        let nonsingular = self.area() >= 1 && spine_edges.is_empty() && cut_points.is_empty();
        Ok(DiskValidation { nonsingular, cut_points, spine_edges })
    }

    fn edge_connected(&self, edges: &BTreeSet<(usize, usize)>) -> bool {
        let n = self.labels.len();
        if n <= 1 {
            return true;
        }
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    }

    /// The triangles at `v` must form a single fan: a closed cycle for an
    /// interior vertex, a single arc for a boundary vertex.
    fn vertex_fan_ok(
        &self,
        v: usize,
        edges: &BTreeSet<(usize, usize)>,
        mult: &BTreeMap<usize, usize>,
    ) -> bool {
        let incident: Vec<&[usize; 3]> =
            self.triangles.iter().filter(|t| t.contains(&v)).collect();
        let deg = edges.iter().filter(|&&(a, b)| a == v || b == v).count();
        if incident.is_empty() {
            return true; // bare vertex on spines; singularity shows elsewhere
        }
        // components of the triangle fan via shared edges at v
        let m = incident.len();
        let mut comp: Vec<usize> = (0..m).collect();
        fn find(comp: &mut Vec<usize>, i: usize) -> usize {
            if comp[i] != i {
                let r = find(comp, comp[i]);
                comp[i] = r;
                r
            } else {
                i
            }
        }
        for i in 0..m {
            for j in i + 1..m {
                let shared = incident[i]
                    .iter()
                    .filter(|x| **x != v && incident[j].contains(x))
                    .count();
                if shared >= 1 {
                    let (a, b) = (find(&mut comp, i), find(&mut comp, j));
                    if a != b {
                        comp[a] = b;
                    }
                }
            }
        }
        let components: BTreeSet<usize> = (0..m).map(|i| find(&mut comp, i)).collect();
        if components.len() != 1 {
            return false;
        }
        let on_boundary = mult.contains_key(&v);
        if on_boundary {
            // single arc: one more edge than triangles at v
            deg == m + 1
        } else {
            // closed fan
            deg == m
        }
    }

    /// Checks the simplicial map into `k`: triangles to faces, edges to edges.
    pub fn check_labels(&self, k: &SimplicialComplex) -> Result<(), DiskError> {
        for t in &self.triangles {
            let s = Simplex::new(vec![self.labels[t[0]], self.labels[t[1]], self.labels[t[2]]])
                .map_err(|e| DiskError::LabelNotAFace(e.to_string()))?;
            if !k.has_simplex(&s) {
                return Err(DiskError::LabelNotAFace(format!("{s}")));
            }
        }
        for &(a, b) in &self.edge_set() {
            if !k.has_edge(self.labels[a], self.labels[b]) {
                return Err(DiskError::LabelNotAFace(format!(
                    "{{{},{}}}",
                    self.labels[a], self.labels[b]
                )));
            }
        }
        Ok(())
    }

    /// Splits a diagram into its nonsingular pieces by cutting at cut points
    /// and dropping spine edges. Each piece keeps its labels and inherits the
    /// orientation of the parent boundary.
    pub fn nonsingular_pieces(&self) -> Vec<DiskDiagram> {
        if self.triangles.is_empty() {
            return Vec::new();
        }
        // components of triangles via shared edges
        let m = self.triangles.len();
        let mut comp: Vec<usize> = (0..m).collect();
        fn find(comp: &mut Vec<usize>, i: usize) -> usize {
            if comp[i] != i {
                let r = find(comp, comp[i]);
                comp[i] = r;
                r
            } else {
                i
            }
        }
        for i in 0..m {
            for j in i + 1..m {
                let shared = self.triangles[i]
                    .iter()
                    .filter(|x| self.triangles[j].contains(x))
                    .count();
                if shared >= 2 {
                    let (a, b) = (find(&mut comp, i), find(&mut comp, j));
                    if a != b {
                        comp[a] = b;
                    }
                }
            }
        }
        let mut groups: BTreeMap<usize, Vec<[usize; 3]>> = BTreeMap::new();
        for i in 0..m {
            let r = find(&mut comp, i);
            groups.entry(r).or_default().push(self.triangles[i]);
        }
        let mut out = Vec::new();
        for (_, tris) in groups {
            // boundary of the piece: edges on exactly one triangle, walked
            let mut edge_count: BTreeMap<(usize, usize), usize> = BTreeMap::new();
            for t in &tris {
                for e in [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])] {
                    *edge_count.entry(e).or_insert(0) += 1;
                }
            }
            let border: BTreeSet<(usize, usize)> = edge_count
                .iter()
                .filter(|&(_, &c)| c == 1)
                .map(|(&e, _)| e)
                .collect();
            let walk = walk_cycle(&border);
            let walk = orient_like_parent(&self.boundary, walk);
            let mut locals: Vec<usize> = tris.iter().flatten().copied().collect();
            locals.sort_unstable();
            locals.dedup();
            let remap: BTreeMap<usize, usize> =
                locals.iter().enumerate().map(|(i, &v)| (v, i)).collect();
            let labels: Vec<VertexId> = locals.iter().map(|&v| self.labels[v]).collect();
            let tris: Vec<[usize; 3]> = tris
                .iter()
                .map(|t| {
                    let mut t = [remap[&t[0]], remap[&t[1]], remap[&t[2]]];
                    t.sort_unstable();
                    t
                })
                .collect();
            let walk: Vec<usize> = walk.into_iter().map(|v| remap[&v]).collect();
            if let Ok(d) = DiskDiagram::new(labels, tris, walk, None) {
                out.push(d);
            }
        }
        out
    }

    /// Per-vertex degrees split by boundary walk position and interior.
    pub fn classify_boundary(&self) -> Result<SignClassification, DiskError> {
        let validation = self.validate()?;
        if !validation.nonsingular {
            return Err(DiskError::SingularDisk);
        }
        let edges = self.edge_set();
        let degree = |v: usize| edges.iter().filter(|&&(a, b)| a == v || b == v).count();
        let boundary = self
            .boundary
            .iter()
            .map(|&v| {
                let d = degree(v);
                (v, d, 4 - d as i64)
            })
            .collect();
        let interior = self
            .interior_vertices()
            .into_iter()
            .map(|v| (v, degree(v)))
            .collect();
        Ok(SignClassification { boundary, interior })
    }

    /// Combinatorial Gauss-Bonnet sum: boundary defects `4 - deg` plus
    /// interior defects `6 - deg`. Equals 6 for every triangulated disk.
    pub fn gauss_bonnet_sum(&self) -> Result<i64, DiskError> {
        let c = self.classify_boundary()?;
        let boundary: i64 = c.boundary.iter().map(|&(_, _, d)| d).sum();
        let interior: i64 = c.interior.iter().map(|&(_, d)| 6 - d as i64).sum();
        Ok(boundary + interior)
    }

    /// A disk is CAT(0) exactly when every interior vertex lies on at least
    /// six triangles.
    pub fn is_cat0_disk(&self) -> bool {
        let edges = self.edge_set();
        self.interior_vertices()
            .iter()
            .all(|&v| edges.iter().filter(|&&(a, b)| a == v || b == v).count() >= 6)
    }

    /// Canonical form under label-preserving isomorphism fixing the boundary
    /// parameterization: boundary locals are renumbered in walk order and
    /// interior locals minimized over permutations of same-label groups.
    fn canonical_key(&self) -> (Vec<VertexId>, Vec<[usize; 3]>, Vec<usize>) {
        let n = self.labels.len();
        let mut order: Vec<usize> = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        for &v in &self.boundary {
            if !seen[v] {
                seen[v] = true;
                order.push(v);
            }
        }
        let interior: Vec<usize> = (0..n).filter(|&v| !seen[v]).collect();
        // group interior by label; only same-label vertices are interchangeable
        let mut groups: BTreeMap<VertexId, Vec<usize>> = BTreeMap::new();
        for &v in &interior {
            groups.entry(self.labels[v]).or_default().push(v);
        }
        let group_list: Vec<Vec<usize>> = groups.into_values().collect();
        let mut best: Option<(Vec<VertexId>, Vec<[usize; 3]>, Vec<usize>)> = None;
        let mut assignment: Vec<Vec<usize>> = group_list.clone();
        permute_groups(&group_list, 0, &mut assignment, &mut |assigned| {
            let mut map = vec![usize::MAX; n];
            for (i, &v) in order.iter().enumerate() {
                map[v] = i;
            }
            let mut next = order.len();
            for group in assigned {
                for &v in group {
                    map[v] = next;
                    next += 1;
                }
            }
            let mut labels = vec![VertexId(0); n];
            for v in 0..n {
                labels[map[v]] = self.labels[v];
            }
            let mut tris: Vec<[usize; 3]> = self
                .triangles
                .iter()
                .map(|t| {
                    let mut t = [map[t[0]], map[t[1]], map[t[2]]];
                    t.sort_unstable();
                    t
                })
                .collect();
            tris.sort_unstable();
            let walk: Vec<usize> = self.boundary.iter().map(|&v| map[v]).collect();
            let key = (labels, tris, walk);
            if best.as_ref().map_or(true, |b| key < *b) {
                best = Some(key);
            }
        });
        best.expect("at least the identity assignment")
    }

    /// Rebuilds the diagram in canonical numbering.
    pub fn canonicalized(&self) -> DiskDiagram {
        let (labels, triangles, boundary) = self.canonical_key();
        DiskDiagram { labels, triangles, boundary, basepoints: self.basepoints }
    }
}

fn permute_groups(
    groups: &[Vec<usize>],
    idx: usize,
    current: &mut Vec<Vec<usize>>,
    f: &mut impl FnMut(&[Vec<usize>]),
) {
    if idx == groups.len() {
        f(current);
        return;
    }
    let mut perm = groups[idx].clone();
    heap_permutations(&mut perm, 0, &mut |p| {
        current[idx] = p.to_vec();
        permute_groups(groups, idx + 1, current, f);
    });
}

fn heap_permutations(arr: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == arr.len() {
        f(arr);
        return;
    }
    for i in k..arr.len() {
        arr.swap(k, i);
        heap_permutations(arr, k + 1, f);
        arr.swap(k, i);
    }
}

/// Walks a set of border edges into a single cycle; edges must form one cycle.
fn walk_cycle(border: &BTreeSet<(usize, usize)>) -> Vec<usize> {
    let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &(a, b) in border {
        adj.entry(a).or_default().push(b);
        adj.entry(b).or_default().push(a);
    }
    let start = *adj.keys().next().expect("nonempty border");
    let mut walk = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let nexts = &adj[&cur];
        let next = if nexts[0] != prev { nexts[0] } else { nexts[1] };
        if next == start {
            break;
        }
        walk.push(next);
        prev = cur;
        cur = next;
    }
    walk
}

/// Chooses the direction of `walk` that follows the parent walk where they
/// share an edge, so pieces keep the clockwise convention.
fn orient_like_parent(parent: &[usize], walk: Vec<usize>) -> Vec<usize> {
    if parent.len() < 2 {
        return walk;
    }
    let parent_steps: BTreeSet<(usize, usize)> = (0..parent.len())
        .map(|i| (parent[i], parent[(i + 1) % parent.len()]))
        .collect();
    let forward = (0..walk.len())
        .filter(|&i| parent_steps.contains(&(walk[i], walk[(i + 1) % walk.len()])))
        .count();
    let backward = (0..walk.len())
        .filter(|&i| parent_steps.contains(&(walk[(i + 1) % walk.len()], walk[i])))
        .count();
    if backward > forward {
        let mut w = walk;
        w.reverse();
        w
    } else {
        walk
    }
}

// ---------------------------------------------------------------------------
// Minimal spanning-disk search
// ---------------------------------------------------------------------------

pub const DEFAULT_DISK_LIMIT: usize = 10_000;

#[derive(Clone)]
struct SearchState {
    word_labels: Vec<VertexId>,
    word_locals: Vec<usize>,
    locals: Vec<VertexId>,
    merges: Vec<(usize, usize)>,
    triangles: Vec<[usize; 3]>,
}

impl SearchState {
    fn rotate(&mut self, offset: usize) {
        self.word_labels.rotate_left(offset);
        self.word_locals.rotate_left(offset);
    }
}

fn least_rotation(word: &[VertexId]) -> usize {
    if word.len() <= 1 {
        return 0;
    }
    let mut best = 0;
    for i in 1..word.len() {
        for j in 0..word.len() {
            let a = word[(i + j) % word.len()];
            let b = word[(best + j) % word.len()];
            if a < b {
                best = i;
                break;
            }
            if a > b {
                break;
            }
        }
    }
    best
}

fn canonical_word(word: &[VertexId]) -> Vec<VertexId> {
    let r = least_rotation(word);
    let mut w = word.to_vec();
    w.rotate_left(r);
    w
}

struct DiskSearch<'a> {
    k: &'a SimplicialComplex,
    boundary_locals: Vec<usize>,
    limit: usize,
    /// canonical word -> highest budget known to fail
    failed: HashMap<Vec<VertexId>, usize>,
    found: Vec<DiskDiagram>,
    keys: BTreeSet<(Vec<VertexId>, Vec<[usize; 3]>, Vec<usize>)>,
}

impl<'a> DiskSearch<'a> {
    /// Explores all fillings of the hole in `state` using at most `budget`
    /// more triangles. Returns how many diagrams were emitted below this node.
    fn dfs(&mut self, mut state: SearchState, budget: usize) -> Result<usize, DiskError> {
        let m = state.word_labels.len();
        if m == 0 {
            self.emit(&state)?;
            return Ok(1);
        }
        if m == 2 {
            // bigon: sew the two parallel hole edges together
            state.word_labels.clear();
            state.word_locals.clear();
            return self.dfs(state, budget);
        }
        debug_assert!(m >= 3);
        let key = canonical_word(&state.word_labels);
        if let Some(&b) = self.failed.get(&key) {
            if budget <= b {
                return Ok(0);
            }
        }
        // anchor all moves at the canonical rotation
        let offset = least_rotation(&state.word_labels);
        state.rotate(offset);
        let mut emitted = 0;

        let face = |a: VertexId, b: VertexId, c: VertexId| -> bool {
            a != b
                && b != c
                && a != c
                && Simplex::new(vec![a, b, c])
                    .map(|s| self.k.has_simplex(&s))
                    .unwrap_or(false)
        };

        if budget >= 1 {
            let (w0, w1) = (state.word_labels[0], state.word_labels[1]);
            if m == 3 {
                // close the triangular hole
                if face(w0, w1, state.word_labels[2]) {
                    let mut next = state.clone();
                    let t = [next.word_locals[0], next.word_locals[1], next.word_locals[2]];
                    next.triangles.push(t);
                    next.word_labels.clear();
                    next.word_locals.clear();
                    emitted += self.dfs(next, budget - 1)?;
                }
            } else {
                // corner fill across hole edges (0,1)
                if face(w0, w1, state.word_labels[2]) {
                    let mut next = state.clone();
                    let t = [next.word_locals[0], next.word_locals[1], next.word_locals[2]];
                    next.triangles.push(t);
                    next.word_labels.remove(1);
                    next.word_locals.remove(1);
                    emitted += self.dfs(next, budget - 1)?;
                }
                // corner fill across hole edges (m-1,0)
                if face(state.word_labels[m - 1], w0, w1) {
                    let mut next = state.clone();
                    let t = [
                        next.word_locals[m - 1],
                        next.word_locals[0],
                        next.word_locals[1],
                    ];
                    next.triangles.push(t);
                    next.word_labels.remove(0);
                    next.word_locals.remove(0);
                    emitted += self.dfs(next, budget - 1)?;
                }
            }
            // edge fill along hole edge (0,1) with a fresh local vertex
            let mut thirds: Vec<VertexId> = self
                .k
                .neighbors(w0)
                .iter()
                .copied()
                .filter(|&x| face(w0, x, w1))
                .collect();
            thirds.sort();
            for x in thirds {
                let mut next = state.clone();
                let fresh = next.locals.len();
                next.locals.push(x);
                let t = [next.word_locals[0], fresh, next.word_locals[1]];
                next.triangles.push(t);
                next.word_labels.insert(1, x);
                next.word_locals.insert(1, fresh);
                emitted += self.dfs(next, budget - 1)?;
            }
        }
        if m >= 4 {
            // fold hole edges (0,1): requires matching labels at 0 and 2
            if state.word_labels[0] == state.word_labels[2] {
                let mut next = state.clone();
                let keep = next.word_locals[0];
                let gone = next.word_locals[2];
                if keep != gone {
                    next.merges.push((keep, gone));
                }
                next.word_labels.drain(1..3);
                next.word_locals.drain(1..3);
                emitted += self.dfs(next, budget)?;
            }
            // fold hole edges (m-1,0): requires matching labels at m-1 and 1
            if state.word_labels[m - 1] == state.word_labels[1] {
                let mut next = state.clone();
                let keep = next.word_locals[1];
                let gone = next.word_locals[m - 1];
                if keep != gone {
                    next.merges.push((keep, gone));
                }
                next.word_labels.remove(m - 1);
                next.word_labels.remove(0);
                next.word_locals.remove(m - 1);
                next.word_locals.remove(0);
                emitted += self.dfs(next, budget)?;
            }
        }
        if emitted == 0 {
            let entry = self.failed.entry(key).or_insert(0);
            *entry = (*entry).max(budget);
        }
        Ok(emitted)
    }

    fn emit(&mut self, state: &SearchState) -> Result<(), DiskError> {
        // resolve fold identifications
        let n = state.locals.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut Vec<usize>, i: usize) -> usize {
            if parent[i] != i {
                let r = find(parent, parent[i]);
                parent[i] = r;
                r
            } else {
                i
            }
        }
        for &(a, b) in &state.merges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                let (lo, hi) = (ra.min(rb), ra.max(rb));
                parent[hi] = lo;
            }
        }
        let mut rep_to_dense: BTreeMap<usize, usize> = BTreeMap::new();
        let mut labels = Vec::new();
        let mut dense = vec![usize::MAX; n];
        for i in 0..n {
            let r = find(&mut parent, i);
            let d = *rep_to_dense.entry(r).or_insert_with(|| {
                labels.push(state.locals[r]);
                labels.len() - 1
            });
            dense[i] = d;
        }
        let mut triangles = Vec::with_capacity(state.triangles.len());
        for t in &state.triangles {
            let mut t = [dense[t[0]], dense[t[1]], dense[t[2]]];
            t.sort_unstable();
            if t[0] == t[1] || t[1] == t[2] {
                return Ok(()); // a fold collapsed this candidate; discard
            }
            triangles.push(t);
        }
        triangles.sort_unstable();
        if triangles.windows(2).any(|w| w[0] == w[1]) {
            return Ok(()); // two disk triangles collapsed together; discard
        }
        let boundary: Vec<usize> = self.boundary_locals.iter().map(|&v| dense[v]).collect();
        let disk = match DiskDiagram::new(labels, triangles, boundary, None) {
            Ok(d) => d,
            Err(_) => return Ok(()),
        };
        if disk.validate().is_err() {
            return Ok(());
        }
        let key = disk.canonical_key();
        if self.keys.insert(key) {
            if self.found.len() >= self.limit {
                return Err(DiskError::TooManyDisks { limit: self.limit });
            }
            self.found.push(disk.canonicalized());
        }
        Ok(())
    }
}

/// All minimal-area disk diagrams spanning the closed path `boundary`,
/// deduplicated up to label-preserving isomorphism fixing the boundary
/// parameterization. Iterative deepening guarantees minimality; the default
/// area bound is the square of the boundary length.
pub fn minimal_spanning_disk(
    k: &SimplicialComplex,
    boundary: &CombinatorialPath,
    max_area: Option<usize>,
) -> Result<Vec<DiskDiagram>, DiskError> {
    minimal_spanning_disk_limited(k, boundary, max_area, DEFAULT_DISK_LIMIT)
}

pub fn minimal_spanning_disk_limited(
    k: &SimplicialComplex,
    boundary: &CombinatorialPath,
    max_area: Option<usize>,
    limit: usize,
) -> Result<Vec<DiskDiagram>, DiskError> {
    if !boundary.is_closed() {
        return Err(DiskError::NotClosed);
    }
    let b = boundary.len();
    if b == 0 {
        let v = boundary.start();
        return Ok(vec![DiskDiagram {
            labels: vec![v],
            triangles: Vec::new(),
            boundary: vec![0],
            basepoints: None,
        }]);
    }
    let word: Vec<VertexId> = boundary.vertices()[..b].to_vec();
    let max_area = max_area.unwrap_or_else(|| (b * b).max(1));
    let mut search = DiskSearch {
        k,
        boundary_locals: (0..b).collect(),
        limit,
        failed: HashMap::new(),
        found: Vec::new(),
        keys: BTreeSet::new(),
    };
    let mut area = b % 2;
    while area <= max_area {
        let state = SearchState {
            word_labels: word.clone(),
            word_locals: (0..b).collect(),
            locals: word.clone(),
            merges: Vec::new(),
            triangles: Vec::new(),
        };
        search.failed.clear();
        search.dfs(state, area)?;
        if !search.found.is_empty() {
            let min_area = search.found.iter().map(|d| d.area()).min().unwrap();
            let mut out: Vec<DiskDiagram> =
                search.found.into_iter().filter(|d| d.area() == min_area).collect();
            out.sort_by(|x, y| {
                (x.labels(), x.triangles(), x.boundary_walk()).cmp(&(
                    y.labels(),
                    y.triangles(),
                    y.boundary_walk(),
                ))
            });
            return Ok(out);
        }
        area += 2;
    }
    Err(DiskError::NoDiskWithinBound { max_area })
}

// ---------------------------------------------------------------------------
// Disk union along a shared geodesic
// ---------------------------------------------------------------------------

/// Result of merging two disks along a shared boundary geodesic.
#[derive(Clone, Debug)]
pub struct MergedDisk {
    pub disk: DiskDiagram,
    /// Image of the shared geodesic after resolution, as local ids of `disk`.
    pub gamma_image: Vec<usize>,
    /// Side (1 or 2) of each triangle of `disk`, tracking which input disk
    /// the triangle descends from.
    pub sides: Vec<u8>,
    pub moves_applied: usize,
}

impl MergedDisk {
    /// Degree of a local vertex within one side's subdiagram.
    pub fn side_degree(&self, local: usize, side: u8) -> usize {
        let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
        for (t, &s) in self.disk.triangles().iter().zip(&self.sides) {
            if s == side {
                for e in [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])] {
                    edges.insert(e);
                }
            }
        }
        edges.iter().filter(|&&(a, b)| a == local || b == local).count()
    }
}

struct Scratch {
    labels: Vec<VertexId>,
    triangles: Vec<[usize; 3]>,
    sides: Vec<u8>,
    boundary: Vec<usize>,
    gamma: Vec<usize>,
}

impl Scratch {
    fn edges(&self) -> BTreeSet<(usize, usize)> {
        let mut edges = BTreeSet::new();
        for t in &self.triangles {
            edges.insert((t[0], t[1]));
            edges.insert((t[0], t[2]));
            edges.insert((t[1], t[2]));
        }
        for i in 0..self.boundary.len() {
            let (u, v) = (
                self.boundary[i],
                self.boundary[(i + 1) % self.boundary.len()],
            );
            edges.insert((u.min(v), u.max(v)));
        }
        edges
    }

    fn degree(&self, v: usize) -> usize {
        self.edges().iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// Neighbors of an interior vertex in fan (rotation) order.
    fn link_cycle(&self, v: usize) -> Vec<usize> {
        let incident: Vec<[usize; 3]> = self
            .triangles
            .iter()
            .copied()
            .filter(|t| t.contains(&v))
            .collect();
        let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for t in &incident {
            let others: Vec<usize> = t.iter().copied().filter(|&x| x != v).collect();
            adj.entry(others[0]).or_default().push(others[1]);
            adj.entry(others[1]).or_default().push(others[0]);
        }
        let start = *adj.keys().next().expect("nonempty link");
        let mut cycle = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        loop {
            let nexts = &adj[&cur];
            let next = if nexts[0] != prev { nexts[0] } else { nexts[1] };
            if next == start {
                break;
            }
            cycle.push(next);
            prev = cur;
            cur = next;
        }
        cycle
    }
}

/// Glues two nonsingular disks along a geodesic shared by their boundaries
/// and reduces interior vertices of degree four and five that the gluing
/// creates along the geodesic, by the square-swap and pentagon-fill moves.
/// The result has all interior degrees at least six when both inputs are
/// minimal and the complex has no empty squares or pentagons.
pub fn merge_disks(
    k: &SimplicialComplex,
    d1: &DiskDiagram,
    d2: &DiskDiagram,
    gamma: &CombinatorialPath,
) -> Result<MergedDisk, DiskError> {
    for d in [d1, d2] {
        let v = d.validate()?;
        if !v.nonsingular {
            return Err(DiskError::SingularDisk);
        }
        d.check_labels(k)?;
    }
    if gamma.is_empty() {
        return Err(DiskError::InvalidInput("shared geodesic has no edges".into()));
    }
    let g: Vec<VertexId> = gamma.vertices().to_vec();
    let pos1 = find_subwalk(&d1.boundary_labels(), &g).ok_or(DiskError::LabelMismatchOnGamma)?;
    let g_rev: Vec<VertexId> = g.iter().rev().copied().collect();
    let pos2 =
        find_subwalk(&d2.boundary_labels(), &g_rev).ok_or(DiskError::LabelMismatchOnGamma)?;

    // assemble the union: d2 locals shifted, gamma locals identified
    let shift = d1.labels().len();
    let b1 = d1.boundary_walk();
    let b2 = d2.boundary_walk();
    let lg = gamma.len();
    let mut ident: BTreeMap<usize, usize> = BTreeMap::new();
    for i in 0..=lg {
        let v1 = b1[(pos1 + i) % b1.len()];
        let v2 = b2[(pos2 + lg - i) % b2.len()];
        ident.insert(v2 + shift, v1);
    }
    let map2 = |v: usize| -> usize {
        let shifted = v + shift;
        *ident.get(&shifted).unwrap_or(&shifted)
    };
    let mut labels: Vec<VertexId> = d1.labels().to_vec();
    labels.extend(d2.labels().iter().copied());
    let mut triangles: Vec<[usize; 3]> = d1.triangles().to_vec();
    let mut sides: Vec<u8> = vec![1; triangles.len()];
    for t in d2.triangles() {
        let mut t = [map2(t[0]), map2(t[1]), map2(t[2])];
        t.sort_unstable();
        if triangles.contains(&t) {
            return Err(DiskError::InvalidInput(
                "disks overlap along the shared geodesic".into(),
            ));
        }
        triangles.push(t);
        sides.push(2);
    }
    // merged boundary: d1's walk minus gamma's interior, then d2's complement
    let mut boundary: Vec<usize> = Vec::new();
    for i in 0..(b1.len() - lg) {
        boundary.push(b1[(pos1 + lg + i) % b1.len()]);
    }
    for i in 0..(b2.len() - lg) {
        boundary.push(map2(b2[(pos2 + lg + i) % b2.len()]));
    }
    let gamma_locals: Vec<usize> = (0..=lg).map(|i| b1[(pos1 + i) % b1.len()]).collect();
    let mut scratch = Scratch {
        labels,
        triangles,
        sides,
        boundary,
        gamma: gamma_locals,
    };

    // resolve low-degree interior vertices along gamma, front to back,
    // restarting after each move
    let mut moves_applied = 0usize;
    loop {
        let on_boundary: BTreeSet<usize> = scratch.boundary.iter().copied().collect();
        let position = (1..scratch.gamma.len().saturating_sub(1)).find(|&i| {
            let v = scratch.gamma[i];
            !on_boundary.contains(&v) && scratch.degree(v) < 6
        });
        let Some(i) = position else { break };
        let v = scratch.gamma[i];
        match scratch.degree(v) {
            4 => resolve_degree_four(k, &mut scratch, i)?,
            5 => resolve_degree_five(k, &mut scratch, i)?,
            d => {
                return Err(DiskError::InvalidInput(format!(
                    "interior vertex of degree {d} on the shared geodesic; \
                     the geodesic precondition fails"
                )))
            }
        }
        moves_applied += 1;
        if moves_applied > scratch.labels.len() * scratch.labels.len() {
            return Err(DiskError::InvalidInput("resolution did not terminate".into()));
        }
    }

    // compact to a DiskDiagram
    let used: BTreeSet<usize> = scratch
        .triangles
        .iter()
        .flatten()
        .copied()
        .chain(scratch.boundary.iter().copied())
        .collect();
    let remap: BTreeMap<usize, usize> = used.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let labels: Vec<VertexId> = used.iter().map(|&v| scratch.labels[v]).collect();
    let mut tris: Vec<([usize; 3], u8)> = scratch
        .triangles
        .iter()
        .zip(&scratch.sides)
        .map(|(t, &s)| {
            let mut t = [remap[&t[0]], remap[&t[1]], remap[&t[2]]];
            t.sort_unstable();
            (t, s)
        })
        .collect();
    tris.sort_unstable();
    let boundary: Vec<usize> = scratch.boundary.iter().map(|&v| remap[&v]).collect();
    let gamma_image: Vec<usize> = scratch.gamma.iter().map(|&v| remap[&v]).collect();
    let disk = DiskDiagram::new(
        labels,
        tris.iter().map(|&(t, _)| t).collect(),
        boundary,
        None,
    )?;
    disk.check_labels(k)?;
    Ok(MergedDisk {
        disk,
        gamma_image,
        sides: tris.iter().map(|&(_, s)| s).collect(),
        moves_applied,
    })
}

fn find_subwalk(walk: &[VertexId], pattern: &[VertexId]) -> Option<usize> {
    if pattern.is_empty() || pattern.len() > walk.len() + 1 {
        return None;
    }
    (0..walk.len())
        .find(|&s| (0..pattern.len()).all(|i| walk[(s + i) % walk.len()] == pattern[i]))
}

fn side_of_vertex(scratch: &Scratch, v: usize) -> u8 {
    for (t, &s) in scratch.triangles.iter().zip(&scratch.sides) {
        if t.contains(&v) {
            return s;
        }
    }
    1
}

fn remove_star(scratch: &mut Scratch, v: usize) {
    let mut i = 0;
    while i < scratch.triangles.len() {
        if scratch.triangles[i].contains(&v) {
            scratch.triangles.remove(i);
            scratch.sides.remove(i);
        } else {
            i += 1;
        }
    }
}

fn push_triangle(scratch: &mut Scratch, mut t: [usize; 3], side: u8) {
    t.sort_unstable();
    scratch.triangles.push(t);
    scratch.sides.push(side);
}

/// Square swap: an interior degree-4 vertex on gamma has link cycle
/// `[prev, x1, next, x2]`; the square `prev x1 next x2` must be filled
/// through the diagonal `x1 x2`, and the star of `v` is replaced by the two
/// triangles on that diagonal. Gamma is rerouted through the lesser-labeled
/// diagonal endpoint.
fn resolve_degree_four(
    k: &SimplicialComplex,
    scratch: &mut Scratch,
    i: usize,
) -> Result<(), DiskError> {
    let v = scratch.gamma[i];
    let prev = scratch.gamma[i - 1];
    let next = scratch.gamma[i + 1];
    let cycle = scratch.link_cycle(v);
    if cycle.len() != 4 {
        return Err(DiskError::InvalidInput("degree-4 vertex with broken link".into()));
    }
    let p = cycle
        .iter()
        .position(|&x| x == prev)
        .ok_or_else(|| DiskError::InvalidInput("gamma neighbor missing from link".into()))?;
    if cycle[(p + 2) % 4] != next {
        return Err(DiskError::InvalidInput(
            "gamma does not cross the degree-4 star".into(),
        ));
    }
    let x1 = cycle[(p + 1) % 4];
    let x2 = cycle[(p + 3) % 4];
    let (la, lb) = (scratch.labels[x1], scratch.labels[x2]);
    let (lp, ln) = (scratch.labels[prev], scratch.labels[next]);
    let t1 = Simplex::new(vec![lp, la, lb]).map_err(|e| DiskError::InvalidInput(e.to_string()))?;
    let t2 = Simplex::new(vec![ln, la, lb]).map_err(|e| DiskError::InvalidInput(e.to_string()))?;
    if !k.has_edge(la, lb) || !k.has_simplex(&t1) || !k.has_simplex(&t2) {
        return Err(DiskError::UnresolvableVertex(format!(
            "square {lp} {la} {ln} {lb} has no filled diagonal; \
             the complex has an empty square"
        )));
    }
    let target = if scratch.labels[x1] <= scratch.labels[x2] { x1 } else { x2 };
    let target_side = side_of_vertex(scratch, target);
    let new_side = 3 - target_side;
    remove_star(scratch, v);
    push_triangle(scratch, [prev, x1, x2], new_side);
    push_triangle(scratch, [next, x1, x2], new_side);
    scratch.gamma[i] = target;
    Ok(())
}

/// Pentagon fill: an interior degree-5 vertex on gamma has link cycle
/// `[x1, prev, x2, x3, next]` with one triangle pair on one side of gamma and
/// three on the other. One of the three fan triangulations avoiding the
/// `prev next` diagonal must consist of faces; the star of `v` is replaced by
/// that fan and gamma is rerouted through its apex.
fn resolve_degree_five(
    k: &SimplicialComplex,
    scratch: &mut Scratch,
    i: usize,
) -> Result<(), DiskError> {
    let v = scratch.gamma[i];
    let prev = scratch.gamma[i - 1];
    let next = scratch.gamma[i + 1];
    let cycle = scratch.link_cycle(v);
    if cycle.len() != 5 {
        return Err(DiskError::InvalidInput("degree-5 vertex with broken link".into()));
    }
    let p = cycle
        .iter()
        .position(|&x| x == prev)
        .ok_or_else(|| DiskError::InvalidInput("gamma neighbor missing from link".into()))?;
    // orient the cycle so it reads [x1, prev, x2, x3, next]
    let rotated: Vec<usize> = if cycle[(p + 3) % 5] == next {
        (0..5).map(|j| cycle[(p + 4 + j) % 5]).collect()
    } else if cycle[(p + 2) % 5] == next {
        // mirror: reverse the cycle so two triangles sit past prev
        let rev: Vec<usize> = cycle.iter().rev().copied().collect();
        let rp = rev.iter().position(|&x| x == prev).unwrap();
        (0..5).map(|j| rev[(rp + 4 + j) % 5]).collect()
    } else {
        return Err(DiskError::InvalidInput(
            "gamma does not cross the degree-5 star".into(),
        ));
    };
    let (x1, x2, x3) = (rotated[0], rotated[2], rotated[3]);
    debug_assert_eq!(rotated[1], prev);
    debug_assert_eq!(rotated[4], next);
    let lab = |x: usize| scratch.labels[x];
    // fan triangulations in the order the union argument checks them
    let fans: [(usize, [[VertexId; 3]; 3]); 3] = [
        (
            x1,
            [
                [lab(x1), lab(prev), lab(x2)],
                [lab(x1), lab(x2), lab(x3)],
                [lab(x1), lab(x3), lab(next)],
            ],
        ),
        (
            x3,
            [
                [lab(x3), lab(next), lab(x1)],
                [lab(x3), lab(x1), lab(prev)],
                [lab(x3), lab(prev), lab(x2)],
            ],
        ),
        (
            x2,
            [
                [lab(x2), lab(x3), lab(next)],
                [lab(x2), lab(next), lab(x1)],
                [lab(x2), lab(x1), lab(prev)],
            ],
        ),
    ];
    for (apex, tris) in fans {
        let all_faces = tris
            .iter()
            .all(|t| Simplex::new(t.to_vec()).map(|s| k.has_simplex(&s)).unwrap_or(false));
        if !all_faces {
            continue;
        }
        let corners = [x1, x2, x3, prev, next];
        let corner_labels: Vec<VertexId> = corners.iter().map(|&x| scratch.labels[x]).collect();
        let local = |l: VertexId| -> usize {
            corners[corner_labels
                .iter()
                .position(|&cl| cl == l)
                .expect("fan vertices are link vertices")]
        };
        let new_tris: Vec<[usize; 3]> = tris
            .iter()
            .map(|t| [local(t[0]), local(t[1]), local(t[2])])
            .collect();
        let apex_side = side_of_vertex(scratch, apex);
        let new_side = 3 - apex_side;
        remove_star(scratch, v);
        for t in new_tris {
            push_triangle(scratch, t, new_side);
        }
        scratch.gamma[i] = apex;
        return Ok(());
    }
    Err(DiskError::UnresolvableVertex(format!(
        "pentagon {} {} {} {} {} has no filled fan; the complex has an empty pentagon",
        lab(x1),
        lab(prev),
        lab(x2),
        lab(x3),
        lab(next)
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn tetrahedron() -> SimplicialComplex {
        SimplicialComplex::from_named(&[&["a", "b", "c", "d"]]).unwrap()
    }

    fn path(k: &SimplicialComplex, names: &[&str]) -> CombinatorialPath {
        CombinatorialPath::from_names(k, names).unwrap()
    }

    fn hex_disk_diagram() -> DiskDiagram {
        // ring locals 0..6, center local 6
        let labels: Vec<VertexId> = (0..7).map(VertexId).collect();
        let triangles: Vec<[usize; 3]> = (0..6).map(|i| [i, (i + 1) % 6, 6]).collect();
        DiskDiagram::new(labels, triangles, (0..6).collect(), None).unwrap()
    }

    #[test]
    fn single_triangle_is_nonsingular() {
        let d = DiskDiagram::triangle(VertexId(0), VertexId(1), VertexId(2));
        let v = d.validate().unwrap();
        assert!(v.nonsingular);
        assert!(v.cut_points.is_empty());
        assert_eq!(d.area(), 1);
        assert_eq!(d.boundary_len(), 3);
    }

    #[test]
    fn wedge_of_two_triangles_is_singular() {
        // two triangles sharing only local vertex 0
        let labels: Vec<VertexId> = (0..5).map(VertexId).collect();
        let d = DiskDiagram::new(
            labels,
            vec![[0, 1, 2], [0, 3, 4]],
            vec![0, 1, 2, 0, 3, 4],
            None,
        )
        .unwrap();
        let v = d.validate().unwrap();
        assert!(!v.nonsingular);
        assert_eq!(v.cut_points, vec![0]);
        let pieces = d.nonsingular_pieces();
        assert_eq!(pieces.len(), 2);
        assert!(pieces.iter().all(|p| p.validate().unwrap().nonsingular));
    }

    #[test]
    fn hex_disk_diagram_valid() {
        let d = hex_disk_diagram();
        let v = d.validate().unwrap();
        assert!(v.nonsingular);
        assert_eq!(d.boundary_len(), 6);
        assert_eq!(d.interior_vertices(), vec![6]);
        assert_eq!(d.degree(6), 6);
    }

    #[test]
    fn classify_boundary_examples() {
        let t = DiskDiagram::triangle(VertexId(0), VertexId(1), VertexId(2));
        let c = t.classify_boundary().unwrap();
        assert!(c.boundary.iter().all(|&(_, d, defect)| d == 2 && defect == 2));
        assert!(matches!(c.sign_at(0), Sign::Positive(2)));

        // two triangles sharing an edge: defects 1,2,1,2 around the square
        let d = DiskDiagram::new(
            (0..4).map(VertexId).collect(),
            vec![[0, 1, 2], [0, 2, 3]],
            vec![0, 1, 2, 3],
            None,
        )
        .unwrap();
        let c = d.classify_boundary().unwrap();
        let defects: Vec<i64> = c.boundary.iter().map(|&(_, _, d)| d).collect();
        assert_eq!(defects, vec![1, 2, 1, 2]);

        let hex = hex_disk_diagram();
        let c = hex.classify_boundary().unwrap();
        assert!(c.boundary.iter().all(|&(_, d, defect)| d == 3 && defect == 1));
        assert_eq!(c.interior, vec![(6, 6)]);
    }

    #[test]
    fn gauss_bonnet_examples() {
        let t = DiskDiagram::triangle(VertexId(0), VertexId(1), VertexId(2));
        assert_eq!(t.gauss_bonnet_sum().unwrap(), 6);
        assert_eq!(hex_disk_diagram().gauss_bonnet_sum().unwrap(), 6);
    }

    #[test]
    fn cat0_disk_examples() {
        assert!(hex_disk_diagram().is_cat0_disk());
        let t = DiskDiagram::triangle(VertexId(0), VertexId(1), VertexId(2));
        assert!(t.is_cat0_disk()); // no interior vertices
        // pentagon wheel: interior degree 5
        let labels: Vec<VertexId> = (0..6).map(VertexId).collect();
        let wheel = DiskDiagram::new(
            labels,
            (0..5).map(|i| [i, (i + 1) % 5, 5]).collect(),
            (0..5).collect(),
            None,
        )
        .unwrap();
        assert!(!wheel.is_cat0_disk());
    }

    #[test]
    fn span_triangle_in_tetrahedron() {
        let k = tetrahedron();
        let alpha = path(&k, &["a", "b", "c", "a"]);
        let disks = minimal_spanning_disk(&k, &alpha, None).unwrap();
        assert_eq!(disks.len(), 1);
        assert_eq!(disks[0].area(), 1);
        disks[0].check_labels(&k).unwrap();
    }

    #[test]
    fn span_square_of_two_triangles() {
        let k = SimplicialComplex::from_named(&[&["a", "b", "c"], &["b", "c", "d"]]).unwrap();
        let alpha = path(&k, &["a", "c", "d", "b", "a"]);
        let disks = minimal_spanning_disk(&k, &alpha, None).unwrap();
        assert_eq!(disks.len(), 1);
        assert_eq!(disks[0].area(), 2);
        assert!(disks[0].validate().unwrap().nonsingular);
    }

    #[test]
    fn span_backtrack_is_a_spine() {
        let k = tetrahedron();
        let alpha = path(&k, &["a", "b", "a"]);
        let disks = minimal_spanning_disk(&k, &alpha, None).unwrap();
        assert_eq!(disks.len(), 1);
        assert_eq!(disks[0].area(), 0);
        let v = disks[0].validate().unwrap();
        assert!(!v.nonsingular);
        assert_eq!(v.spine_edges.len(), 1);
    }

    #[test]
    fn span_pentagon_of_pentagon_join_4() {
        let (k, _) = fixtures::pentagon_join(4).unwrap();
        let alpha = path(&k, &["v0", "v1", "v2", "v3", "v4", "v0"]);
        let disks = minimal_spanning_disk(&k, &alpha, None).unwrap();
        assert_eq!(disks.len(), 3);
        for d in &disks {
            assert_eq!(d.area(), 5);
            let interior = d.interior_vertices();
            assert_eq!(interior.len(), 1);
            assert_eq!(d.degree(interior[0]), 5);
            d.check_labels(&k).unwrap();
        }
        // one fan through each core vertex
        let mut apexes: Vec<String> = disks
            .iter()
            .map(|d| k.name(d.label(d.interior_vertices()[0])).to_string())
            .collect();
        apexes.sort();
        assert_eq!(apexes, vec!["s0", "s1", "s2"]);
    }

    #[test]
    fn area_respects_parity() {
        let (k, _) = fixtures::hex_disk().unwrap();
        let alpha = path(&k, &["v0", "v1", "v2", "v3", "v4", "v5", "v0"]);
        let disks = minimal_spanning_disk(&k, &alpha, None).unwrap();
        for d in &disks {
            let b = d.boundary_len();
            let i = d.interior_vertices().len();
            assert_eq!(d.area(), b + 2 * i - 2);
        }
        assert_eq!(disks.len(), 1);
        assert_eq!(disks[0].area(), 6);
    }

    #[test]
    fn no_disk_within_bound() {
        // hollow triangle: the 3-cycle has no filling at all
        let k = SimplicialComplex::from_named(&[&["a", "b"], &["b", "c"], &["c", "a"]]).unwrap();
        let alpha = path(&k, &["a", "b", "c", "a"]);
        let err = minimal_spanning_disk(&k, &alpha, Some(9)).unwrap_err();
        assert_eq!(err, DiskError::NoDiskWithinBound { max_area: 9 });
    }

    #[test]
    fn merge_two_triangles_into_square() {
        let k = tetrahedron();
        let a = k.vertex_by_name("a").unwrap();
        let b = k.vertex_by_name("b").unwrap();
        let c = k.vertex_by_name("c").unwrap();
        let d = k.vertex_by_name("d").unwrap();
        // shared geodesic a -> b on both boundaries (d2 walks it backward)
        let d1 = DiskDiagram::new(vec![a, b, c], vec![[0, 1, 2]], vec![0, 1, 2], None).unwrap();
        let d2 = DiskDiagram::new(vec![a, b, d], vec![[0, 1, 2]], vec![0, 2, 1], None).unwrap();
        let gamma = path(&k, &["a", "b"]);
        let merged = merge_disks(&k, &d1, &d2, &gamma).unwrap();
        assert_eq!(merged.disk.area(), 2);
        assert_eq!(merged.moves_applied, 0);
        assert!(merged.disk.validate().unwrap().nonsingular);
        assert_eq!(merged.disk.boundary_len(), 4);
        assert_eq!(merged.disk.interior_vertices().len(), 0);
    }

    #[test]
    fn disk_dedup_is_label_sensitive() {
        // square with both diagonals filled: two distinct minimal disks
        let k = SimplicialComplex::from_named(&[
            &["a", "b", "c"],
            &["a", "c", "d"],
            &["a", "b", "d"],
            &["b", "c", "d"],
        ])
        .unwrap();
        let alpha = path(&k, &["a", "b", "c", "d", "a"]);
        let disks = minimal_spanning_disk(&k, &alpha, None).unwrap();
        assert_eq!(disks.len(), 2);
        assert!(disks.iter().all(|d| d.area() == 2));
    }
}
