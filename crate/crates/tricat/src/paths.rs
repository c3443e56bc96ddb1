//! Combinatorial paths in the 1-skeleton: validation, tightness,
//! parameterization, distances, and geodesic enumeration.
//!
//! A path is a vertex sequence whose consecutive pairs span edges. Paths are
//! parameterized by arc length: `evaluate(t)` clamps below 0 and above the
//! length and moves at unit speed along edges in between.
//!
//! Path distance compares two paths at equal times. The fellow-traveling
//! statements this crate verifies are integer bounds, and both paths sit on
//! vertices at integer times, so the distance is computed as the maximum over
//! integer times of the combinatorial distance between the two positions.
//! (Evaluating between vertices with any mid-edge convention overshoots the
//! integer bounds; see `evaluate` for fractional positions.)

use crate::complex::{ComplexError, SimplicialComplex, VertexId};
use std::collections::VecDeque;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PathError {
    Empty,
    InvalidStep { position: usize, from: String, to: String },
    UnknownVertex(String),
    TooManyGeodesics { limit: usize },
    EndpointMismatch,
}

impl fmt::Display for PathError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PathError::Empty => write!(f, "path has no vertices"),
            PathError::InvalidStep { position, from, to } => {
                write!(f, "step {position}: `{from} {to}` is not an edge")
            }
            PathError::UnknownVertex(n) => write!(f, "unknown vertex `{n}`"),
            PathError::TooManyGeodesics { limit } => {
                write!(f, "geodesic count exceeds the limit of {limit}")
            }
            PathError::EndpointMismatch => write!(f, "paths do not share endpoints"),
        }
    }
}

impl std::error::Error for PathError {}

impl From<ComplexError> for PathError {
    fn from(e: ComplexError) -> Self {
        match e {
            ComplexError::UnknownVertex(n) => PathError::UnknownVertex(n),
            other => PathError::UnknownVertex(other.to_string()),
        }
    }
}

/// A combinatorial path: a nonempty vertex sequence with every consecutive
/// pair an edge of the complex it was validated against. The constant path
/// (a single vertex) has length zero.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CombinatorialPath {
    vertices: Vec<VertexId>,
}

impl CombinatorialPath {
    pub fn new(k: &SimplicialComplex, vertices: Vec<VertexId>) -> Result<Self, PathError> {
        if vertices.is_empty() {
            return Err(PathError::Empty);
        }
        for &v in &vertices {
            if !k.has_vertex(v) {
                return Err(PathError::UnknownVertex(format!("{v}")));
            }
        }
        for (i, pair) in vertices.windows(2).enumerate() {
            if !k.has_edge(pair[0], pair[1]) {
                return Err(PathError::InvalidStep {
                    position: i,
                    from: k.name(pair[0]).to_string(),
                    to: k.name(pair[1]).to_string(),
                });
            }
        }
        Ok(CombinatorialPath { vertices })
    }

    /// Builds a path from whitespace-separated vertex names.
    pub fn from_names(k: &SimplicialComplex, names: &[&str]) -> Result<Self, PathError> {
        let mut vs = Vec::with_capacity(names.len());
        for n in names {
            vs.push(
                k.vertex_by_name(n)
                    .ok_or_else(|| PathError::UnknownVertex((*n).to_string()))?,
            );
        }
        Self::new(k, vs)
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn start(&self) -> VertexId {
        self.vertices[0]
    }

    pub fn end(&self) -> VertexId {
        *self.vertices.last().unwrap()
    }

    pub fn is_closed(&self) -> bool {
        self.start() == self.end()
    }

    /// Tight: no unordered edge is crossed twice.
    pub fn is_tight(&self) -> bool {
        let mut edges: Vec<(VertexId, VertexId)> = self
            .vertices
            .windows(2)
            .map(|p| if p[0] < p[1] { (p[0], p[1]) } else { (p[1], p[0]) })
            .collect();
        edges.sort();
        edges.windows(2).all(|w| w[0] != w[1])
    }

    pub fn reversed(&self) -> CombinatorialPath {
        let mut vs = self.vertices.clone();
        vs.reverse();
        CombinatorialPath { vertices: vs }
    }

    /// Vertex at integer time `t`, clamped to the endpoints.
    pub fn vertex_at(&self, t: usize) -> VertexId {
        self.vertices[t.min(self.len())]
    }

    pub fn display(&self, k: &SimplicialComplex) -> String {
        self.vertices
            .iter()
            .map(|v| k.name(*v))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// The four facts reported for a vertex sequence.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PathProperties {
    pub valid: bool,
    pub tight: bool,
    pub closed: bool,
    pub length: usize,
}

/// Validates a vertex sequence and reports its properties. An invalid step
/// surfaces as an error carrying its position.
pub fn path_properties(
    k: &SimplicialComplex,
    vertices: &[VertexId],
) -> Result<PathProperties, PathError> {
    let p = CombinatorialPath::new(k, vertices.to_vec())?;
    Ok(PathProperties {
        valid: true,
        tight: p.is_tight(),
        closed: p.is_closed(),
        length: p.len(),
    })
}

/// A point of the 1-skeleton: a vertex or a position strictly inside an edge.
#[derive(Clone, Copy, PartialEq, Debug)]
pub enum PathPoint {
    Vertex(VertexId),
    /// `offset` in (0,1) measured from `from` toward `to`.
    Interior { from: VertexId, to: VertexId, offset: f64 },
}

/// The point `t` units from the start: the start for `t <= 0`, the end for
/// `t >= len`, and the unit-speed position along the path in between.
pub fn evaluate(path: &CombinatorialPath, t: f64) -> PathPoint {
    if t <= 0.0 {
        return PathPoint::Vertex(path.start());
    }
    let len = path.len() as f64;
    if t >= len {
        return PathPoint::Vertex(path.end());
    }
    let i = t.floor() as usize;
    let offset = t - i as f64;
    if offset == 0.0 {
        PathPoint::Vertex(path.vertices()[i])
    } else {
        PathPoint::Interior {
            from: path.vertices()[i],
            to: path.vertices()[i + 1],
            offset,
        }
    }
}

/// BFS distance in the 1-skeleton.
pub fn combinatorial_distance(
    k: &SimplicialComplex,
    v: VertexId,
    w: VertexId,
) -> Result<u32, PathError> {
    Ok(k.distance(v, w)?)
}

pub fn is_geodesic(k: &SimplicialComplex, path: &CombinatorialPath) -> bool {
    match k.distance(path.start(), path.end()) {
        Ok(d) => path.len() as u32 == d,
        Err(_) => false,
    }
}

pub const DEFAULT_GEODESIC_LIMIT: usize = 1_000_000;

/// All geodesics from `v` to `w`: depth-first search down the BFS levels
/// toward `w`, which visits each geodesic exactly once. Fails loudly when the
/// count exceeds `limit`.
pub fn enumerate_geodesics(
    k: &SimplicialComplex,
    v: VertexId,
    w: VertexId,
    limit: usize,
) -> Result<Vec<CombinatorialPath>, PathError> {
    let d = k.distance(v, w)?;
    if d == crate::complex::UNREACHABLE {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut current = vec![v];
    descend(k, w, d, &mut current, &mut out, limit)?;
    Ok(out)
}

fn descend(
    k: &SimplicialComplex,
    w: VertexId,
    remaining: u32,
    current: &mut Vec<VertexId>,
    out: &mut Vec<CombinatorialPath>,
    limit: usize,
) -> Result<(), PathError> {
    if remaining == 0 {
        if out.len() >= limit {
            return Err(PathError::TooManyGeodesics { limit });
        }
        out.push(CombinatorialPath { vertices: current.clone() });
        return Ok(());
    }
    let last = *current.last().unwrap();
    for &n in k.neighbors(last) {
        if k.distance(n, w).unwrap_or(crate::complex::UNREACHABLE) == remaining - 1 {
            current.push(n);
            descend(k, w, remaining - 1, current, out, limit)?;
            current.pop();
        }
    }
    Ok(())
}

/// Path distance: the maximum over integer times `t` of the combinatorial
/// distance between the two positions (both of which are vertices at integer
/// times, with clamping past the ends).
pub fn path_distance(
    k: &SimplicialComplex,
    a: &CombinatorialPath,
    b: &CombinatorialPath,
) -> u32 {
    let horizon = a.len().max(b.len());
    let mut worst = 0;
    for t in 0..=horizon {
        let d = k
            .distance(a.vertex_at(t), b.vertex_at(t))
            .unwrap_or(crate::complex::UNREACHABLE);
        worst = worst.max(d);
    }
    worst
}

/// All paths from `v` to `w` of length at most `max_len`, by bounded DFS.
/// Exhaustive; used by oracles and the falsification search.
pub fn enumerate_paths_up_to(
    k: &SimplicialComplex,
    v: VertexId,
    w: VertexId,
    max_len: usize,
) -> Vec<CombinatorialPath> {
    let mut out = Vec::new();
    let mut current = vec![v];
    fn go(
        k: &SimplicialComplex,
        w: VertexId,
        max_len: usize,
        current: &mut Vec<VertexId>,
        out: &mut Vec<CombinatorialPath>,
    ) {
        let last = *current.last().unwrap();
        if last == w {
            out.push(CombinatorialPath { vertices: current.clone() });
        }
        if current.len() > max_len {
            return;
        }
        for &n in k.neighbors(last) {
            current.push(n);
            go(k, w, max_len, current, out);
            current.pop();
        }
    }
    go(k, w, max_len, &mut current, &mut out);
    out
}

/// All walks of length at most `max_len` from every vertex, in vertex order.
pub fn enumerate_all_paths_up_to(
    k: &SimplicialComplex,
    max_len: usize,
) -> Vec<CombinatorialPath> {
    let mut out = Vec::new();
    for &v in k.vertices() {
        let mut frontier: VecDeque<Vec<VertexId>> = VecDeque::new();
        frontier.push_back(vec![v]);
        while let Some(p) = frontier.pop_front() {
            out.push(CombinatorialPath { vertices: p.clone() });
            if p.len() <= max_len {
                let last = *p.last().unwrap();
                for &n in k.neighbors(last) {
                    let mut q = p.clone();
                    q.push(n);
                    frontier.push_back(q);
                }
            }
        }
    }
    out.retain(|p| p.len() <= max_len);
    out
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

    #[test]
    fn properties_of_closed_triangle() {
        let k = tetrahedron();
        let a = k.vertex_by_name("a").unwrap();
        let b = k.vertex_by_name("b").unwrap();
        let c = k.vertex_by_name("c").unwrap();
        let p = path_properties(&k, &[a, b, c, a]).unwrap();
        assert!(p.valid && p.tight && p.closed);
        assert_eq!(p.length, 3);
    }

    #[test]
    fn backtrack_is_not_tight() {
        let k = tetrahedron();
        let a = k.vertex_by_name("a").unwrap();
        let b = k.vertex_by_name("b").unwrap();
        let p = path_properties(&k, &[a, b, a]).unwrap();
        assert!(p.valid && !p.tight && p.closed);
        assert_eq!(p.length, 2);
    }

    #[test]
    fn invalid_step_reported() {
        let k = SimplicialComplex::from_named(&[&["a", "b", "c"], &["b", "c", "d"]]).unwrap();
        let a = k.vertex_by_name("a").unwrap();
        let d = k.vertex_by_name("d").unwrap();
        let err = path_properties(&k, &[a, d]).unwrap_err();
        assert!(matches!(err, PathError::InvalidStep { position: 0, .. }));
    }

    #[test]
    fn evaluate_clamps_and_interpolates() {
        let k = tetrahedron();
        let p = path(&k, &["a", "b", "c"]);
        let a = k.vertex_by_name("a").unwrap();
        let b = k.vertex_by_name("b").unwrap();
        let c = k.vertex_by_name("c").unwrap();
        assert_eq!(evaluate(&p, -1.0), PathPoint::Vertex(a));
        assert_eq!(evaluate(&p, 1.0), PathPoint::Vertex(b));
        assert_eq!(evaluate(&p, 5.0), PathPoint::Vertex(c));
        match evaluate(&p, 1.5) {
            PathPoint::Interior { from, to, offset } => {
                assert_eq!((from, to), (b, c));
                assert!((offset - 0.5).abs() < 1e-12);
            }
            other => panic!("expected interior point, got {other:?}"),
        }
    }

    #[test]
    fn distances_on_hex_disk() {
        let (k, _) = fixtures::hex_disk().unwrap();
        let v0 = k.vertex_by_name("v0").unwrap();
        let v3 = k.vertex_by_name("v3").unwrap();
        assert_eq!(combinatorial_distance(&k, v0, v3).unwrap(), 2);
        assert_eq!(combinatorial_distance(&k, v0, v0).unwrap(), 0);
    }

    #[test]
    fn geodesics_on_tetrahedron() {
        let k = tetrahedron();
        let a = k.vertex_by_name("a").unwrap();
        let b = k.vertex_by_name("b").unwrap();
        let gs = enumerate_geodesics(&k, a, b, 1000).unwrap();
        assert_eq!(gs.len(), 1);
        assert_eq!(gs[0].vertices(), &[a, b]);
    }

    #[test]
    fn geodesics_on_hex_disk() {
        let (k, _) = fixtures::hex_disk().unwrap();
        let v0 = k.vertex_by_name("v0").unwrap();
        let v2 = k.vertex_by_name("v2").unwrap();
        let gs = enumerate_geodesics(&k, v0, v2, 1000).unwrap();
        let shown: Vec<String> = gs.iter().map(|g| g.display(&k)).collect();
        assert_eq!(gs.len(), 2);
        assert!(shown.contains(&"v0 v1 v2".to_string()));
        assert!(shown.contains(&"v0 o v2".to_string()));
    }

    #[test]
    fn geodesics_on_octahedron_antipodes() {
        // independent oracle: filter the exhaustive bounded path enumeration
        let (k, _) = fixtures::octahedron().unwrap();
        let xp = k.vertex_by_name("xp").unwrap();
        let xm = k.vertex_by_name("xm").unwrap();
        let d = combinatorial_distance(&k, xp, xm).unwrap();
        assert_eq!(d, 2);
        let brute: Vec<_> = enumerate_paths_up_to(&k, xp, xm, d as usize)
            .into_iter()
            .filter(|p| p.len() as u32 == d)
            .collect();
        assert_eq!(brute.len(), 4);
        let fast = enumerate_geodesics(&k, xp, xm, 1000).unwrap();
        let mut fast_sorted = fast.clone();
        fast_sorted.sort();
        let mut brute_sorted = brute.clone();
        brute_sorted.sort();
        assert_eq!(fast_sorted, brute_sorted);
    }

    #[test]
    fn geodesic_limit_overflows_loudly() {
        let (k, _) = fixtures::octahedron().unwrap();
        let xp = k.vertex_by_name("xp").unwrap();
        let xm = k.vertex_by_name("xm").unwrap();
        let err = enumerate_geodesics(&k, xp, xm, 3).unwrap_err();
        assert_eq!(err, PathError::TooManyGeodesics { limit: 3 });
    }

    #[test]
    fn path_distance_examples() {
        let (hex, _) = fixtures::hex_disk().unwrap();
        let a = path(&hex, &["v0", "o", "v3"]);
        let b = path(&hex, &["v0", "v1", "v2", "v3"]);
        assert_eq!(path_distance(&hex, &a, &a), 0);
        assert_eq!(path_distance(&hex, &a, &b), 1);

        let tet = tetrahedron();
        let p = path(&tet, &["a", "b"]);
        let q = path(&tet, &["a", "c", "b"]);
        assert_eq!(path_distance(&tet, &p, &q), 1);
    }

    #[test]
    fn path_distance_is_pseudometric_on_samples() {
        let (k, _) = fixtures::hex_disk().unwrap();
        let paths: Vec<CombinatorialPath> = enumerate_all_paths_up_to(&k, 3)
            .into_iter()
            .filter(|p| p.start() == k.vertex_by_name("v0").unwrap())
            .collect();
        for a in paths.iter().take(20) {
            for b in paths.iter().take(20) {
                assert_eq!(path_distance(&k, a, b), path_distance(&k, b, a));
                for c in paths.iter().take(10) {
                    let ab = path_distance(&k, a, b);
                    let bc = path_distance(&k, b, c);
                    let ac = path_distance(&k, a, c);
                    assert!(ac <= ab + bc);
                }
            }
        }
    }

    #[test]
    fn geodesics_are_tight_with_geodesic_subpaths() {
        let (k, _) = fixtures::octahedron().unwrap();
        for &v in k.vertices() {
            for &w in k.vertices() {
                for g in enumerate_geodesics(&k, v, w, 10_000).unwrap() {
                    assert!(g.is_tight());
                    assert!(is_geodesic(&k, &g));
                    for i in 0..g.vertices().len() {
                        for j in i..g.vertices().len() {
                            let sub =
                                CombinatorialPath::new(&k, g.vertices()[i..=j].to_vec()).unwrap();
                            assert!(is_geodesic(&k, &sub));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn triangle_inequality_of_combinatorial_distance() {
        let (k, _) = fixtures::stacked_tets(6).unwrap();
        let vs = k.vertices();
        for &u in vs {
            for &v in vs {
                assert_eq!(k.distance(u, v).unwrap(), k.distance(v, u).unwrap());
                for &w in vs {
                    assert!(
                        k.distance(u, w).unwrap()
                            <= k.distance(u, v).unwrap() + k.distance(v, w).unwrap()
                    );
                }
            }
        }
    }
}
