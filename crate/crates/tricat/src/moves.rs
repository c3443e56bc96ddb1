//! The basic-move calculus on combinatorial paths.
//!
//! Three moves rewrite a path across a small doubly-based disk: the trivial
//! move erases a backtrack `[x,y,x] -> [x]` (length -2), the triangle move
//! cuts a corner `[x,y,z] -> [x,z]` across a face (length -1), and the
//! triangle-triangle move swaps a diagonal `[x,y,z] -> [x,w,z]` across two
//! faces sharing the edge `{y,w}` (length 0).
//!
//! `straighten` reduces any path to a geodesic (or connects it to a given
//! geodesic target) through these moves; `shorter_fellow` finds, for a
//! non-geodesic path, a strictly shorter path staying within path distance
//! one. Both searches are exhaustive at desk scale.

use crate::complex::{Simplex, SimplicialComplex, VertexId};
use crate::disks::DiskDiagram;
use crate::paths::{self, CombinatorialPath, PathError};
use std::collections::{HashMap, VecDeque};
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum MoveKind {
    Trivial,
    Triangle,
    TriangleTriangle,
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MoveKind::Trivial => write!(f, "trivial"),
            MoveKind::Triangle => write!(f, "triangle"),
            MoveKind::TriangleTriangle => write!(f, "triangle-triangle"),
        }
    }
}

/// A basic move matched against a host path at `position`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Move {
    pub kind: MoveKind,
    /// Index into the host path where `old_segment` starts.
    pub position: usize,
    pub old_segment: Vec<VertexId>,
    pub new_segment: Vec<VertexId>,
    /// Faces (or the backtracked edge) of the complex realizing the move.
    pub witness: Vec<Simplex>,
}

impl Move {
    pub fn length_delta(&self) -> i64 {
        self.new_segment.len() as i64 - self.old_segment.len() as i64
    }

    pub fn render(&self, k: &SimplicialComplex) -> String {
        let names = |vs: &[VertexId]| -> String {
            vs.iter().map(|v| k.name(*v)).collect::<Vec<_>>().join(" ")
        };
        format!(
            "{}@{}: {} -> {}",
            self.kind,
            self.position,
            names(&self.old_segment),
            names(&self.new_segment)
        )
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MoveError {
    MoveMismatch,
    TargetNotGeodesic,
    EndpointMismatch,
    TargetNotReachable,
    NoShorterFellow,
    SearchExhausted { visited: usize },
    Path(PathError),
}

impl fmt::Display for MoveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MoveError::MoveMismatch => write!(f, "move does not match the path at its position"),
            MoveError::TargetNotGeodesic => write!(f, "target path is not a geodesic"),
            MoveError::EndpointMismatch => write!(f, "paths do not share endpoints"),
            MoveError::TargetNotReachable => {
                write!(f, "no basic-move sequence reaches the target")
            }
            MoveError::NoShorterFellow => {
                write!(f, "no strictly shorter path within path distance one")
            }
            MoveError::SearchExhausted { visited } => {
                write!(f, "move search exceeded {visited} visited paths")
            }
            MoveError::Path(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for MoveError {}

impl From<PathError> for MoveError {
    fn from(e: PathError) -> Self {
        MoveError::Path(e)
    }
}

/// All basic moves whose old segment matches a directed subpath of `path`,
/// with every witness in the complex. Sorted by position, then kind, then
/// the diagonal vertex.
pub fn enumerate_moves(k: &SimplicialComplex, path: &CombinatorialPath) -> Vec<Move> {
    let vs = path.vertices();
    let mut out = Vec::new();
    if vs.len() < 3 {
        return out;
    }
    for i in 0..vs.len() - 2 {
        let (x, y, z) = (vs[i], vs[i + 1], vs[i + 2]);
        if x == z {
            out.push(Move {
                kind: MoveKind::Trivial,
                position: i,
                old_segment: vec![x, y, x],
                new_segment: vec![x],
                witness: vec![Simplex::edge(x, y).expect("path edge")],
            });
            continue;
        }
        if let Ok(face) = Simplex::new(vec![x, y, z]) {
            if k.has_simplex(&face) {
                out.push(Move {
                    kind: MoveKind::Triangle,
                    position: i,
                    old_segment: vec![x, y, z],
                    new_segment: vec![x, z],
                    witness: vec![face],
                });
            }
        }
        // diagonal swaps: two distinct faces sharing the edge {y,w}
        let mut diagonals: Vec<VertexId> = k
            .neighbors(y)
            .iter()
            .copied()
            .filter(|&w| w != x && w != z)
            .filter(|&w| {
                let left = Simplex::new(vec![x, y, w]).expect("distinct");
                let right = Simplex::new(vec![y, z, w]).expect("distinct");
                k.has_simplex(&left) && k.has_simplex(&right)
            })
            .collect();
        diagonals.sort();
        for w in diagonals {
            out.push(Move {
                kind: MoveKind::TriangleTriangle,
                position: i,
                old_segment: vec![x, y, z],
                new_segment: vec![x, w, z],
                witness: vec![
                    Simplex::new(vec![x, y, w]).expect("distinct"),
                    Simplex::new(vec![y, z, w]).expect("distinct"),
                ],
            });
        }
    }
    out
}

/// Applies a move, preserving endpoints. The old segment must match the path
/// at the move's position.
pub fn apply_move(
    k: &SimplicialComplex,
    path: &CombinatorialPath,
    m: &Move,
) -> Result<CombinatorialPath, MoveError> {
    let vs = path.vertices();
    let end = m.position + m.old_segment.len();
    if end > vs.len() || vs[m.position..end] != m.old_segment[..] {
        return Err(MoveError::MoveMismatch);
    }
    let mut next = vs[..m.position].to_vec();
    next.extend_from_slice(&m.new_segment);
    next.extend_from_slice(&vs[end..]);
    Ok(CombinatorialPath::new(k, next)?)
}

/// A chain shortening read off a disk: triangle-triangle moves pushing a
/// positive vertex along a run of zero vertices into a second positive
/// vertex, closed by one triangle move. Returns the move sequence that
/// shortens `gamma` by one, or `None` when no two positive vertices of
/// `gamma` on the disk are separated only by zero vertices.
pub fn find_chain_shortening(disk: &DiskDiagram, gamma: &CombinatorialPath) -> Option<Vec<Move>> {
    let validation = disk.validate().ok()?;
    if !validation.nonsingular {
        return None;
    }
    let walk = disk.boundary_walk();
    let b = walk.len();
    let n = gamma.len();
    if n < 2 || n > b {
        return None;
    }
    // locate gamma along the boundary walk
    let start = (0..b)
        .find(|&s| (0..=n).all(|i| disk.label(walk[(s + i) % b]) == gamma.vertices()[i]))?;
    let locals: Vec<usize> = (0..=n).map(|i| walk[(start + i) % b]).collect();
    // interior positions by sign: positive deg <= 3, zero deg == 4
    let signs: Vec<i64> = locals.iter().map(|&l| 4 - disk.degree(l) as i64).collect();
    let mut first_positive: Option<usize> = None;
    let mut pair: Option<(usize, usize)> = None;
    for i in 1..n {
        if signs[i] > 0 {
            if let Some(p) = first_positive {
                pair = Some((p, i));
                break;
            }
            first_positive = Some(i);
        } else if signs[i] < 0 {
            first_positive = None;
        }
    }
    let (i, j) = pair?;
    // cascade: triangle-triangle moves from i toward j, then a triangle move
    let mut tris: Vec<[usize; 3]> = disk.triangles().to_vec();
    let mut cur = locals;
    let mut moves = Vec::new();
    let mut q = i;
    loop {
        let v = cur[q];
        let at_v: Vec<[usize; 3]> = tris.iter().copied().filter(|t| t.contains(&v)).collect();
        let (prev, next) = (cur[q - 1], cur[q + 1]);
        match at_v.len() {
            1 => {
                let t = at_v[0];
                if !(t.contains(&prev) && t.contains(&next)) {
                    return None;
                }
                moves.push(Move {
                    kind: MoveKind::Triangle,
                    position: q - 1,
                    old_segment: vec![disk.label(prev), disk.label(v), disk.label(next)],
                    new_segment: vec![disk.label(prev), disk.label(next)],
                    witness: vec![Simplex::new(vec![
                        disk.label(t[0]),
                        disk.label(t[1]),
                        disk.label(t[2]),
                    ])
                    .expect("disk triangle")],
                });
                return Some(moves);
            }
            2 => {
                // the two triangles share edge {v, w}
                let w = at_v[0]
                    .iter()
                    .copied()
                    .find(|&x| x != v && at_v[1].contains(&x))?;
                if !(at_v.iter().any(|t| t.contains(&prev))
                    && at_v.iter().any(|t| t.contains(&next)))
                {
                    return None;
                }
                moves.push(Move {
                    kind: MoveKind::TriangleTriangle,
                    position: q - 1,
                    old_segment: vec![disk.label(prev), disk.label(v), disk.label(next)],
                    new_segment: vec![disk.label(prev), disk.label(w), disk.label(next)],
                    witness: vec![
                        Simplex::new(vec![disk.label(prev), disk.label(v), disk.label(w)])
                            .expect("disk triangle"),
                        Simplex::new(vec![disk.label(v), disk.label(next), disk.label(w)])
                            .expect("disk triangle"),
                    ],
                });
                tris.retain(|t| !t.contains(&v));
                cur[q] = w;
                q += 1;
                if q > j {
                    return None;
                }
            }
            _ => return None,
        }
    }
}

pub const DEFAULT_SEARCH_CAP: usize = 1_000_000;

/// Straightens a path by basic moves.
///
/// With no target: repeatedly walks the triangle-triangle closure of the
/// current path breadth-first until a length-reducing move appears, applies
/// the chain, and repeats; returns a geodesic and the move sequence.
///
/// With a geodesic target: breadth-first search in the move graph from the
/// path to the target; all moves are length non-increasing, and when both
/// paths are geodesics every move in the sequence is length preserving.
pub fn straighten(
    k: &SimplicialComplex,
    path: &CombinatorialPath,
    target: Option<&CombinatorialPath>,
) -> Result<(CombinatorialPath, Vec<Move>), MoveError> {
    match target {
        Some(t) => straighten_to(k, path, t),
        None => straighten_free(k, path),
    }
}

fn straighten_free(
    k: &SimplicialComplex,
    path: &CombinatorialPath,
) -> Result<(CombinatorialPath, Vec<Move>), MoveError> {
    let mut current = path.clone();
    let mut all_moves: Vec<Move> = Vec::new();
    loop {
        if paths::is_geodesic(k, &current) {
            return Ok((current, all_moves));
        }
        // breadth-first over the length-preserving closure, looking for the
        // first reachable length-reducing move
        let mut queue: VecDeque<CombinatorialPath> = VecDeque::new();
        let mut parents: HashMap<Vec<VertexId>, (Vec<VertexId>, Move)> = HashMap::new();
        queue.push_back(current.clone());
        parents.insert(current.vertices().to_vec(), (Vec::new(), dummy_move()));
        let mut reduction: Option<(CombinatorialPath, Move)> = None;
        'bfs: while let Some(p) = queue.pop_front() {
            let moves = enumerate_moves(k, &p);
            for m in &moves {
                if m.length_delta() < 0 {
                    reduction = Some((p.clone(), m.clone()));
                    break 'bfs;
                }
            }
            for m in moves {
                if m.kind == MoveKind::TriangleTriangle {
                    let q = apply_move(k, &p, &m)?;
                    if !parents.contains_key(q.vertices()) {
                        parents.insert(q.vertices().to_vec(), (p.vertices().to_vec(), m));
                        queue.push_back(q);
                    }
                }
            }
            if parents.len() > DEFAULT_SEARCH_CAP {
                return Err(MoveError::SearchExhausted { visited: parents.len() });
            }
        }
        let Some((host, reducing)) = reduction else {
            // not geodesic, yet no reduction is reachable
            return Err(MoveError::TargetNotReachable);
        };
        // replay the chain from `current` to `host`, then the reduction
        let chain = unwind(&parents, current.vertices(), host.vertices());
        for m in &chain {
            current = apply_move(k, &current, m)?;
        }
        all_moves.extend(chain);
        current = apply_move(k, &current, &reducing)?;
        all_moves.push(reducing);
    }
}

fn straighten_to(
    k: &SimplicialComplex,
    path: &CombinatorialPath,
    target: &CombinatorialPath,
) -> Result<(CombinatorialPath, Vec<Move>), MoveError> {
    if path.start() != target.start() || path.end() != target.end() {
        return Err(MoveError::EndpointMismatch);
    }
    if !paths::is_geodesic(k, target) {
        return Err(MoveError::TargetNotGeodesic);
    }
    if path == target {
        return Ok((target.clone(), Vec::new()));
    }
    let mut queue: VecDeque<CombinatorialPath> = VecDeque::new();
    let mut parents: HashMap<Vec<VertexId>, (Vec<VertexId>, Move)> = HashMap::new();
    queue.push_back(path.clone());
    parents.insert(path.vertices().to_vec(), (Vec::new(), dummy_move()));
    while let Some(p) = queue.pop_front() {
        for m in enumerate_moves(k, &p) {
            let q = apply_move(k, &p, &m)?;
            if parents.contains_key(q.vertices()) {
                continue;
            }
            parents.insert(q.vertices().to_vec(), (p.vertices().to_vec(), m));
            if q == *target {
                let moves = unwind(&parents, path.vertices(), target.vertices());
                return Ok((target.clone(), moves));
            }
            queue.push_back(q);
        }
        if parents.len() > DEFAULT_SEARCH_CAP {
            return Err(MoveError::SearchExhausted { visited: parents.len() });
        }
    }
    Err(MoveError::TargetNotReachable)
}

fn dummy_move() -> Move {
    Move {
        kind: MoveKind::Trivial,
        position: 0,
        old_segment: Vec::new(),
        new_segment: Vec::new(),
        witness: Vec::new(),
    }
}

fn unwind(
    parents: &HashMap<Vec<VertexId>, (Vec<VertexId>, Move)>,
    from: &[VertexId],
    to: &[VertexId],
) -> Vec<Move> {
    let mut moves = Vec::new();
    let mut cur = to.to_vec();
    while cur != from {
        let (prev, m) = parents.get(&cur).expect("unwind through visited states");
        moves.push(m.clone());
        cur = prev.clone();
    }
    moves.reverse();
    moves
}

/// Falsification by fellow traveller: for a non-geodesic path, a strictly
/// shorter path with the same endpoints at path distance at most one.
/// Returns `Ok(None)` exactly when the path is geodesic. The search walks
/// candidate shorter paths inside the distance-one corridor of the input, in
/// order of increasing length.
///
/// Every tight non-geodesic path has such a fellow: corner cuts and chain
/// shortenings shift the tail by one position, landing on adjacent vertices.
/// A path with a backtrack mid-path may not: erasing `[x,y,x]` shifts the
/// tail by two, and only distance two is achievable in general (see
/// [`shorter_fellow_within`]). Failure at distance one is reported as an
/// error rather than `None`, which is reserved for geodesics.
pub fn shorter_fellow(
    k: &SimplicialComplex,
    path: &CombinatorialPath,
) -> Result<Option<CombinatorialPath>, MoveError> {
    shorter_fellow_within(k, path, 1)
}

/// As [`shorter_fellow`], with the corridor widened to `max_distance`.
pub fn shorter_fellow_within(
    k: &SimplicialComplex,
    path: &CombinatorialPath,
    max_distance: u32,
) -> Result<Option<CombinatorialPath>, MoveError> {
    if paths::is_geodesic(k, path) {
        return Ok(None);
    }
    let (u, w) = (path.start(), path.end());
    let d0 = k.distance(u, w).map_err(PathError::from)?;
    for dist in 1..=max_distance {
        for len in d0 as usize..path.len() {
            if let Some(found) = corridor_dfs(k, path, u, w, len, dist) {
                return Ok(Some(found));
            }
        }
    }
    Err(MoveError::NoShorterFellow)
}

/// First path of exactly `len` edges from `u` to `w` staying within
/// combinatorial distance `dist` of `path` at every integer time, including
/// the clamped tail.
fn corridor_dfs(
    k: &SimplicialComplex,
    path: &CombinatorialPath,
    u: VertexId,
    w: VertexId,
    len: usize,
    dist: u32,
) -> Option<CombinatorialPath> {
    fn go(
        k: &SimplicialComplex,
        path: &CombinatorialPath,
        w: VertexId,
        len: usize,
        dist: u32,
        current: &mut Vec<VertexId>,
    ) -> bool {
        let t = current.len() - 1;
        let cur = *current.last().unwrap();
        if k.distance(cur, path.vertex_at(t)).unwrap_or(u32::MAX) > dist {
            return false;
        }
        if t == len {
            if cur != w {
                return false;
            }
            // clamped tail of the shorter path against the rest of `path`
            return (len..=path.len())
                .all(|s| k.distance(w, path.vertex_at(s)).unwrap_or(u32::MAX) <= dist);
        }
        let remaining = (len - t) as u32;
        for &n in k.neighbors(cur) {
            if k.distance(n, w).unwrap_or(u32::MAX) + 1 <= remaining {
                current.push(n);
                if go(k, path, w, len, dist, current) {
                    return true;
                }
                current.pop();
            }
        }
        false
    }
    let mut current = vec![u];
    if go(k, path, w, len, dist, &mut current) {
        Some(CombinatorialPath::new(k, current).expect("steps along edges"))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::VertexId;
    use crate::fixtures;
    use crate::paths::path_distance;

    fn tetrahedron() -> SimplicialComplex {
        SimplicialComplex::from_named(&[&["a", "b", "c", "d"]]).unwrap()
    }

    fn path(k: &SimplicialComplex, names: &[&str]) -> CombinatorialPath {
        CombinatorialPath::from_names(k, names).unwrap()
    }

    #[test]
    fn moves_on_tetrahedron_path() {
        let k = tetrahedron();
        let p = path(&k, &["a", "b", "c"]);
        let moves = enumerate_moves(&k, &p);
        let kinds: Vec<MoveKind> = moves.iter().map(|m| m.kind).collect();
        assert_eq!(kinds, vec![MoveKind::Triangle, MoveKind::TriangleTriangle]);
        // the diagonal swap goes through d
        let d = k.vertex_by_name("d").unwrap();
        assert_eq!(moves[1].new_segment[1], d);
    }

    #[test]
    fn backtrack_has_only_trivial_move() {
        let k = tetrahedron();
        let p = path(&k, &["a", "b", "a"]);
        let moves = enumerate_moves(&k, &p);
        assert_eq!(moves.len(), 1);
        assert_eq!(moves[0].kind, MoveKind::Trivial);
        let q = apply_move(&k, &p, &moves[0]).unwrap();
        assert_eq!(q.display(&k), "a");
    }

    #[test]
    fn hex_disk_swap_goes_through_center_only() {
        let (k, _) = fixtures::hex_disk().unwrap();
        let p = path(&k, &["v0", "v1", "v2"]);
        let moves = enumerate_moves(&k, &p);
        assert_eq!(moves.len(), 1);
        assert_eq!(moves[0].kind, MoveKind::TriangleTriangle);
        let q = apply_move(&k, &p, &moves[0]).unwrap();
        assert_eq!(q.display(&k), "v0 o v2");
    }

    #[test]
    fn move_deltas_and_endpoints() {
        let (k, _) = fixtures::hex_disk().unwrap();
        for p in crate::paths::enumerate_all_paths_up_to(&k, 4) {
            for m in enumerate_moves(&k, &p) {
                let delta = m.length_delta();
                assert!(delta == -2 || delta == -1 || delta == 0);
                let q = apply_move(&k, &p, &m).unwrap();
                assert_eq!(q.start(), p.start());
                assert_eq!(q.end(), p.end());
                assert_eq!(q.len() as i64, p.len() as i64 + delta);
            }
        }
    }

    #[test]
    fn mismatched_move_rejected() {
        let k = tetrahedron();
        let p = path(&k, &["a", "b", "c"]);
        let mut m = enumerate_moves(&k, &p)[0].clone();
        m.position = 1;
        assert_eq!(apply_move(&k, &p, &m).unwrap_err(), MoveError::MoveMismatch);
    }

    #[test]
    fn straighten_backtrack() {
        let k = tetrahedron();
        let p = path(&k, &["a", "b", "a"]);
        let (geo, moves) = straighten(&k, &p, None).unwrap();
        assert_eq!(geo.display(&k), "a");
        assert_eq!(moves.len(), 1);
        assert_eq!(moves[0].kind, MoveKind::Trivial);
    }

    #[test]
    fn straighten_to_target_single_swap() {
        // two faces over the diagonal c-d; a and b are not adjacent, so both
        // two-edge routes are geodesics
        let k = SimplicialComplex::from_named(&[&["a", "c", "d"], &["c", "b", "d"]]).unwrap();
        let alpha = path(&k, &["a", "c", "b"]);
        let beta = path(&k, &["a", "d", "b"]);
        let (end, moves) = straighten(&k, &alpha, Some(&beta)).unwrap();
        assert_eq!(end, beta);
        assert_eq!(moves.len(), 1);
        assert_eq!(moves[0].kind, MoveKind::TriangleTriangle);
        assert_eq!(moves[0].position, 0);
        let d = k.vertex_by_name("d").unwrap();
        assert_eq!(moves[0].new_segment[1], d);
    }

    #[test]
    fn straighten_to_target_inside_tetrahedron_rejects_non_geodesic() {
        // in the full tetrahedron a and b are adjacent, so two-edge routes
        // between them are not geodesics and cannot serve as targets
        let k = tetrahedron();
        let alpha = path(&k, &["a", "c", "b"]);
        let beta = path(&k, &["a", "d", "b"]);
        assert_eq!(
            straighten(&k, &alpha, Some(&beta)).unwrap_err(),
            MoveError::TargetNotGeodesic
        );
    }

    #[test]
    fn straighten_hex_path_to_center_route() {
        let (k, _) = fixtures::hex_disk().unwrap();
        let alpha = path(&k, &["v0", "v1", "v2", "v3"]);
        let beta = path(&k, &["v0", "o", "v3"]);
        let (end, moves) = straighten(&k, &alpha, Some(&beta)).unwrap();
        assert_eq!(end, beta);
        assert!(!moves.is_empty());
        // replay and confirm
        let mut p = alpha;
        for m in &moves {
            p = apply_move(&k, &p, m).unwrap();
        }
        assert_eq!(p, beta);
        // free straightening also reaches a geodesic of length 2
        let alpha = path(&k, &["v0", "v1", "v2", "v3"]);
        let (geo, _) = straighten(&k, &alpha, None).unwrap();
        assert_eq!(geo.len(), 2);
        assert!(crate::paths::is_geodesic(&k, &geo));
    }

    #[test]
    fn straighten_rejects_bad_target() {
        let (k, _) = fixtures::hex_disk().unwrap();
        let alpha = path(&k, &["v0", "v1", "v2", "v3"]);
        let longer = path(&k, &["v0", "v1", "v2", "v3"]);
        assert_eq!(
            straighten(&k, &alpha, Some(&longer)).unwrap_err(),
            MoveError::TargetNotGeodesic
        );
        let other = path(&k, &["v0", "o", "v2"]);
        assert_eq!(
            straighten(&k, &alpha, Some(&other)).unwrap_err(),
            MoveError::EndpointMismatch
        );
    }

    #[test]
    fn geodesics_connected_by_length_preserving_moves() {
        let (k, _) = fixtures::octahedron().unwrap();
        let a = path(&k, &["xp", "yp", "xm"]);
        let b = path(&k, &["xp", "zm", "xm"]);
        let (_, moves) = straighten(&k, &a, Some(&b)).unwrap();
        assert!(moves.iter().all(|m| m.length_delta() == 0));
    }

    #[test]
    fn shorter_fellow_examples() {
        let k = tetrahedron();
        let geo = path(&k, &["a", "b"]);
        assert_eq!(shorter_fellow(&k, &geo).unwrap(), None);

        let back = path(&k, &["a", "b", "a"]);
        let f = shorter_fellow(&k, &back).unwrap().unwrap();
        assert_eq!(f.display(&k), "a");
        assert!(path_distance(&k, &back, &f) <= 1);

        let (hex, _) = fixtures::hex_disk().unwrap();
        let p = path(&hex, &["v0", "v1", "v2", "v3"]);
        let f = shorter_fellow(&hex, &p).unwrap().unwrap();
        assert_eq!(f.len(), 2);
        assert!(path_distance(&hex, &p, &f) <= 1);
    }

    #[test]
    fn shorter_fellow_exhaustive_on_hex_disk_short_paths() {
        // every tight non-geodesic of length <= 4 has a distance-one fellow;
        // every non-geodesic has one within distance two
        let (k, _) = fixtures::hex_disk().unwrap();
        for p in crate::paths::enumerate_all_paths_up_to(&k, 4) {
            if p.is_tight() {
                match shorter_fellow(&k, &p).unwrap() {
                    None => assert!(crate::paths::is_geodesic(&k, &p)),
                    Some(f) => {
                        assert!(!crate::paths::is_geodesic(&k, &p));
                        assert!(f.len() < p.len());
                        assert_eq!(f.start(), p.start());
                        assert_eq!(f.end(), p.end());
                        assert!(path_distance(&k, &p, &f) <= 1);
                    }
                }
            } else {
                match shorter_fellow_within(&k, &p, 2).unwrap() {
                    None => assert!(crate::paths::is_geodesic(&k, &p)),
                    Some(f) => {
                        assert!(f.len() < p.len());
                        assert!(path_distance(&k, &p, &f) <= 2);
                    }
                }
            }
        }
    }

    #[test]
    fn backtrack_with_tail_needs_distance_two() {
        // erasing the backtrack shifts the tail by two edges, and no shorter
        // route stays within distance one of the detour
        let (k, _) = fixtures::hex_disk().unwrap();
        let p = path(&k, &["o", "v0", "o", "v3"]);
        assert_eq!(shorter_fellow(&k, &p).unwrap_err(), MoveError::NoShorterFellow);
        let f = shorter_fellow_within(&k, &p, 2).unwrap().unwrap();
        assert!(f.len() < p.len());
        assert_eq!(path_distance(&k, &p, &f), 2);
    }

    #[test]
    fn chain_shortening_on_two_row_strip() {
        // four-triangle strip whose top path u a b w runs over the fan at c
        // with two adjacent degree-3 vertices a and b
        let k = SimplicialComplex::from_named(&[
            &["u", "a", "c"],
            &["a", "b", "c"],
            &["b", "w", "c"],
            &["u", "e", "c"],
        ])
        .unwrap();
        let u = k.vertex_by_name("u").unwrap();
        let a = k.vertex_by_name("a").unwrap();
        let b = k.vertex_by_name("b").unwrap();
        let w = k.vertex_by_name("w").unwrap();
        let c = k.vertex_by_name("c").unwrap();
        let e = k.vertex_by_name("e").unwrap();
        let disk = DiskDiagram::new(
            vec![u, a, b, w, c, e],
            vec![[0, 1, 4], [1, 2, 4], [2, 3, 4], [0, 5, 4]],
            vec![0, 1, 2, 3, 4, 5],
            None,
        )
        .unwrap();
        disk.check_labels(&k).unwrap();
        assert!(disk.validate().unwrap().nonsingular);
        let gamma = path(&k, &["u", "a", "b", "w"]);
        let moves = find_chain_shortening(&disk, &gamma).unwrap();
        assert_eq!(moves.len(), 2);
        assert_eq!(moves[0].kind, MoveKind::TriangleTriangle);
        assert_eq!(moves[1].kind, MoveKind::Triangle);
        let mut p = gamma.clone();
        for m in &moves {
            p = apply_move(&k, &p, m).unwrap();
        }
        assert_eq!(p.len(), gamma.len() - 1);
        assert!(path_distance(&k, &gamma, &p) <= 1);
    }

    #[test]
    fn chain_shortening_needs_an_unseparated_pair() {
        let (k, _) = fixtures::hex_disk().unwrap();
        let o = k.vertex_by_name("o").unwrap();
        let labels: Vec<VertexId> = (0..6)
            .map(|i| k.vertex_by_name(&format!("v{i}")).unwrap())
            .chain([o])
            .collect();
        let disk = DiskDiagram::new(
            labels,
            (0..6).map(|i| [i, (i + 1) % 6, 6]).collect(),
            (0..6).collect(),
            None,
        )
        .unwrap();
        // a single interior path vertex: no pair
        let two = path(&k, &["v0", "v1", "v2"]);
        assert_eq!(find_chain_shortening(&disk, &two), None);
        // two interior positives with nothing between them: a chain
        let three = path(&k, &["v0", "v1", "v2", "v3"]);
        let moves = find_chain_shortening(&disk, &three).unwrap();
        assert_eq!(moves.len(), 2);
        assert_eq!(moves[0].kind, MoveKind::TriangleTriangle);
        assert_eq!(moves[1].kind, MoveKind::Triangle);
    }
}
