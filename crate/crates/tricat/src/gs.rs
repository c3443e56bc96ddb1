//! Gersten-Short geodesics: the diagonal condition on witness disks, bad
//! pairs and their resolution, and the fellow-travel and invariance checks
//! for path systems.
//!
//! A geodesic satisfies the diagonal condition when, on every witness disk,
//! a positive vertex is always preceded by a negative one. The operational
//! family of witness disks for a geodesic is: for every companion geodesic
//! with the same endpoints, every minimal disk spanning the closed loop the
//! two bound, split at shared vertices into nonsingular pieces. A bad pair is
//! a position `i` with `v_i` positive and `v_{i-1}` zero on some witness
//! disk; geodesics without bad pairs are GS-geodesics.
//!
//! Resolving a bad pair applies the triangle-triangle move at its positive
//! vertex, read off the witness disk. Repeating from the leftmost bad pair
//! terminates (the geodesics between two vertices are finite in number), and
//! on complexes passing the curvature battery it produces a GS-geodesic.

use crate::complex::{Automorphism, Simplex, SimplicialComplex, VertexId};
use crate::disks::{self, DiskDiagram, DiskError};
use crate::moves::{self, Move, MoveError, MoveKind};
use crate::paths::{self, CombinatorialPath, PathError};
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GsError {
    NotGeodesic,
    TooManyCompanions { limit: usize },
    NoGsGeodesic,
    NonTermination { bound: usize },
    Path(PathError),
    Disk(DiskError),
    Move(MoveError),
}

impl fmt::Display for GsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GsError::NotGeodesic => write!(f, "path is not a combinatorial geodesic"),
            GsError::TooManyCompanions { limit } => {
                write!(f, "more than {limit} companion geodesics")
            }
            GsError::NoGsGeodesic => {
                write!(f, "no GS-geodesic is reachable by triangle-triangle moves")
            }
            GsError::NonTermination { bound } => {
                write!(f, "bad-pair resolution exceeded {bound} steps")
            }
            GsError::Path(e) => write!(f, "{e}"),
            GsError::Disk(e) => write!(f, "{e}"),
            GsError::Move(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for GsError {}

impl From<PathError> for GsError {
    fn from(e: PathError) -> Self {
        GsError::Path(e)
    }
}

impl From<DiskError> for GsError {
    fn from(e: DiskError) -> Self {
        GsError::Disk(e)
    }
}

impl From<MoveError> for GsError {
    fn from(e: MoveError) -> Self {
        GsError::Move(e)
    }
}

pub const DEFAULT_COMPANION_LIMIT: usize = 10_000;

/// A minimal disk witnessing part of the loop a geodesic bounds with one of
/// its companions. `gamma_position[p]` gives, for boundary walk position `p`
/// of the disk, the index into the geodesic it carries, if any.
#[derive(Clone, Debug)]
pub struct WitnessDisk {
    pub disk: DiskDiagram,
    pub companion: CombinatorialPath,
    pub gamma_position: Vec<Option<usize>>,
}

impl WitnessDisk {
    /// Degree on this disk of the geodesic vertex with index `i`, if present.
    pub fn gamma_degree(&self, i: usize) -> Option<usize> {
        let p = self.gamma_position.iter().position(|&g| g == Some(i))?;
        Some(self.disk.degree(self.disk.boundary_walk()[p]))
    }
}

/// A bad pair: `v_i` positive and `v_{i-1}` zero on a witness disk.
#[derive(Clone, Debug)]
pub struct BadPair {
    /// Index `i` of the positive vertex along the geodesic.
    pub index: usize,
    pub degree: usize,
    pub prev_degree: usize,
    pub disk: DiskDiagram,
    pub companion: CombinatorialPath,
    /// The diagonal vertex of the triangle-triangle move resolving the pair.
    pub diagonal: VertexId,
}

/// Tagged loop position: which geodesic index (if any) a loop vertex carries.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
struct Tagged {
    vertex: VertexId,
    gamma_index: Option<usize>,
}

/// Splits a closed tagged walk into simple cycles, erasing backtracks.
fn split_loop(walk: Vec<Tagged>) -> Vec<Vec<Tagged>> {
    let mut pieces = Vec::new();
    let mut stack = vec![walk];
    while let Some(mut w) = stack.pop() {
        // erase [.., x, y, x, ..] backtracks (cyclically) until none remain
        let mut changed = true;
        while changed && w.len() >= 3 {
            changed = false;
            let n = w.len();
            for i in 0..n {
                if w[i].vertex == w[(i + 2) % n].vertex {
                    let drop_a = (i + 1) % n;
                    let drop_b = (i + 2) % n;
                    let keep: Vec<Tagged> = w
                        .iter()
                        .enumerate()
                        .filter(|&(j, _)| j != drop_a && j != drop_b)
                        .map(|(_, t)| *t)
                        .collect();
                    w = keep;
                    changed = true;
                    break;
                }
            }
        }
        if w.len() < 3 {
            continue;
        }
        // find a repeated vertex; with none, the piece is a simple cycle
        let mut seen: BTreeMap<VertexId, usize> = BTreeMap::new();
        let mut split_at: Option<(usize, usize)> = None;
        for (i, t) in w.iter().enumerate() {
            if let Some(&j) = seen.get(&t.vertex) {
                split_at = Some((j, i));
                break;
            }
            seen.insert(t.vertex, i);
        }
        match split_at {
            None => pieces.push(w),
            Some((j, i)) => {
                let inner: Vec<Tagged> = w[j..i].to_vec();
                let mut outer: Vec<Tagged> = w[..j].to_vec();
                outer.extend_from_slice(&w[i..]);
                stack.push(inner);
                stack.push(outer);
            }
        }
    }
    pieces
}

/// The operational family of witness disks for a geodesic: all minimal disks
/// spanning the loops it bounds with each companion geodesic, split into
/// nonsingular pieces at shared vertices.
pub fn witness_disks(
    k: &SimplicialComplex,
    gamma: &CombinatorialPath,
    companion_limit: usize,
) -> Result<Vec<WitnessDisk>, GsError> {
    if !paths::is_geodesic(k, gamma) {
        return Err(GsError::NotGeodesic);
    }
    let companions = paths::enumerate_geodesics(k, gamma.start(), gamma.end(), companion_limit)
        .map_err(|e| match e {
            PathError::TooManyGeodesics { limit } => GsError::TooManyCompanions { limit },
            other => GsError::Path(other),
        })?;
    let n = gamma.len();
    let mut out = Vec::new();
    for delta in &companions {
        if delta == gamma {
            continue;
        }
        // tagged loop gamma . delta^{-1}
        let mut walk: Vec<Tagged> = gamma
            .vertices()
            .iter()
            .enumerate()
            .map(|(i, &v)| Tagged { vertex: v, gamma_index: Some(i) })
            .collect();
        let dv = delta.vertices();
        for j in (1..n).rev() {
            walk.push(Tagged { vertex: dv[j], gamma_index: None });
        }
        for piece in split_loop(walk) {
            let mut vertices: Vec<VertexId> = piece.iter().map(|t| t.vertex).collect();
            vertices.push(piece[0].vertex);
            let cycle = CombinatorialPath::new(k, vertices)?;
            for disk in disks::minimal_spanning_disk(k, &cycle, None)? {
                if !disk.validate()?.nonsingular {
                    continue;
                }
                let gamma_position: Vec<Option<usize>> =
                    piece.iter().map(|t| t.gamma_index).collect();
                out.push(WitnessDisk { disk, companion: delta.clone(), gamma_position });
            }
        }
    }
    Ok(out)
}

/// Scans every witness disk for positions where a positive geodesic vertex
/// follows a zero one. Bad pairs are reported in order of the positive
/// vertex's index.
pub fn find_bad_pairs(
    k: &SimplicialComplex,
    gamma: &CombinatorialPath,
) -> Result<Vec<BadPair>, GsError> {
    find_bad_pairs_limited(k, gamma, DEFAULT_COMPANION_LIMIT)
}

pub fn find_bad_pairs_limited(
    k: &SimplicialComplex,
    gamma: &CombinatorialPath,
    companion_limit: usize,
) -> Result<Vec<BadPair>, GsError> {
    let witnesses = witness_disks(k, gamma, companion_limit)?;
    let n = gamma.len();
    let mut out: Vec<BadPair> = Vec::new();
    for w in &witnesses {
        let walk = w.disk.boundary_walk();
        let b = walk.len();
        for p in 0..b {
            let Some(i) = w.gamma_position[p] else { continue };
            if i == 0 || i >= n {
                continue;
            }
            // v_i must ride the disk with both of its geodesic edges: the
            // walk positions around p carry i-1 and i+1 (a vertex where the
            // geodesic leaves the piece is an endpoint of its segment there)
            let prev_pos = (p + b - 1) % b;
            let next_pos = (p + 1) % b;
            if w.gamma_position[prev_pos] != Some(i - 1)
                || w.gamma_position[next_pos] != Some(i + 1)
            {
                continue;
            }
            let deg = w.disk.degree(walk[p]);
            let prev_deg = w.disk.degree(walk[prev_pos]);
            debug_assert!(deg >= 3, "degree-2 interior vertex on a geodesic segment");
            if 4 - (deg as i64) > 0 && prev_deg == 4 {
                if let Some(diagonal) = tri_tri_diagonal(&w.disk, walk[p]) {
                    out.push(BadPair {
                        index: i,
                        degree: deg,
                        prev_degree: prev_deg,
                        disk: w.disk.clone(),
                        companion: w.companion.clone(),
                        diagonal,
                    });
                }
            }
        }
    }
    out.sort_by_key(|p| (p.index, p.diagonal));
    Ok(out)
}

/// For a degree-3 boundary vertex, the opposite vertex of its two triangles.
fn tri_tri_diagonal(disk: &DiskDiagram, local: usize) -> Option<VertexId> {
    let at: Vec<&[usize; 3]> =
        disk.triangles().iter().filter(|t| t.contains(&local)).collect();
    if at.len() != 2 {
        return None;
    }
    let shared = at[0].iter().copied().find(|&x| x != local && at[1].contains(&x))?;
    Some(disk.label(shared))
}

/// A geodesic with no bad pairs on any witness disk.
pub fn is_gs(k: &SimplicialComplex, path: &CombinatorialPath) -> Result<bool, GsError> {
    if !paths::is_geodesic(k, path) {
        return Ok(false);
    }
    Ok(find_bad_pairs(k, path)?.is_empty())
}

/// Resolves bad pairs by triangle-triangle moves, leftmost pair first,
/// rescanning after each move. If the deterministic walk revisits a geodesic
/// it falls back to a breadth-first search of the triangle-triangle move
/// graph for the nearest bad-pair-free geodesic.
pub fn resolve_bad_pairs(
    k: &SimplicialComplex,
    gamma: &CombinatorialPath,
) -> Result<(CombinatorialPath, Vec<Move>), GsError> {
    if !paths::is_geodesic(k, gamma) {
        return Err(GsError::NotGeodesic);
    }
    let geodesic_count =
        paths::enumerate_geodesics(k, gamma.start(), gamma.end(), DEFAULT_COMPANION_LIMIT)?.len();
    let mut current = gamma.clone();
    let mut applied: Vec<Move> = Vec::new();
    let mut visited: BTreeSet<Vec<VertexId>> = BTreeSet::new();
    visited.insert(current.vertices().to_vec());
    for _ in 0..=geodesic_count {
        let pairs = find_bad_pairs(k, &current)?;
        let Some(first) = pairs.first() else {
            return Ok((current, applied));
        };
        let i = first.index;
        let diagonal = pairs
            .iter()
            .take_while(|p| p.index == i)
            .map(|p| p.diagonal)
            .min()
            .expect("nonempty run");
        let vs = current.vertices();
        let m = Move {
            kind: MoveKind::TriangleTriangle,
            position: i - 1,
            old_segment: vec![vs[i - 1], vs[i], vs[i + 1]],
            new_segment: vec![vs[i - 1], diagonal, vs[i + 1]],
            witness: vec![
                Simplex::new(vec![vs[i - 1], vs[i], diagonal]).expect("distinct vertices"),
                Simplex::new(vec![vs[i], vs[i + 1], diagonal]).expect("distinct vertices"),
            ],
        };
        let next = moves::apply_move(k, &current, &m)?;
        if !visited.insert(next.vertices().to_vec()) {
            return resolve_by_search(k, gamma, geodesic_count);
        }
        applied.push(m);
        current = next;
    }
    Err(GsError::NonTermination { bound: geodesic_count })
}

/// Breadth-first search over triangle-triangle moves for the nearest
/// GS-geodesic. All geodesics between two vertices are connected by these
/// moves, so this succeeds whenever a GS-geodesic exists at all.
fn resolve_by_search(
    k: &SimplicialComplex,
    gamma: &CombinatorialPath,
    bound: usize,
) -> Result<(CombinatorialPath, Vec<Move>), GsError> {
    let mut queue: VecDeque<CombinatorialPath> = VecDeque::new();
    let mut parents: BTreeMap<Vec<VertexId>, (Vec<VertexId>, Move)> = BTreeMap::new();
    queue.push_back(gamma.clone());
    parents.insert(gamma.vertices().to_vec(), (Vec::new(), dummy_move()));
    let mut scanned = 0usize;
    while let Some(p) = queue.pop_front() {
        scanned += 1;
        if scanned > bound + 1 {
            return Err(GsError::NonTermination { bound });
        }
        if find_bad_pairs(k, &p)?.is_empty() {
            let mut seq = Vec::new();
            let mut cur = p.vertices().to_vec();
            while cur != gamma.vertices() {
                let (prev, m) = parents.get(&cur).expect("visited");
                seq.push(m.clone());
                cur = prev.clone();
            }
            seq.reverse();
            return Ok((p, seq));
        }
        for m in moves::enumerate_moves(k, &p) {
            if m.kind != MoveKind::TriangleTriangle {
                continue;
            }
            let q = moves::apply_move(k, &p, &m)?;
            if !parents.contains_key(q.vertices()) {
                parents.insert(q.vertices().to_vec(), (p.vertices().to_vec(), m));
                queue.push_back(q);
            }
        }
    }
    Err(GsError::NoGsGeodesic)
}

fn dummy_move() -> Move {
    Move {
        kind: MoveKind::TriangleTriangle,
        position: 0,
        old_segment: Vec::new(),
        new_segment: Vec::new(),
        witness: Vec::new(),
    }
}

// ---------------------------------------------------------------------------
// Path systems
// ---------------------------------------------------------------------------

/// A finite path system: an explicit member list with membership testing.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PathSystem {
    pub label: String,
    members: Vec<CombinatorialPath>,
}

impl PathSystem {
    pub fn new(label: impl Into<String>, mut members: Vec<CombinatorialPath>) -> Self {
        members.sort();
        members.dedup();
        PathSystem { label: label.into(), members }
    }

    pub fn members(&self) -> &[CombinatorialPath] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, path: &CombinatorialPath) -> bool {
        self.members.binary_search(path).is_ok()
    }
}

/// All geodesics between ordered pairs of basepoints (constant paths
/// included).
pub fn geodesic_system(
    k: &SimplicialComplex,
    basepoints: &[VertexId],
) -> Result<PathSystem, GsError> {
    let mut members = Vec::new();
    for &u in basepoints {
        for &w in basepoints {
            members.extend(paths::enumerate_geodesics(k, u, w, paths::DEFAULT_GEODESIC_LIMIT)?);
        }
    }
    Ok(PathSystem::new("geodesic", members))
}

/// The GS-geodesics between ordered pairs of basepoints: the geodesic system
/// filtered by the diagonal condition.
pub fn gs_system(k: &SimplicialComplex, basepoints: &[VertexId]) -> Result<PathSystem, GsError> {
    let all = geodesic_system(k, basepoints)?;
    let mut members = Vec::new();
    for p in all.members() {
        if is_gs(k, p)? {
            members.push(p.clone());
        }
    }
    Ok(PathSystem::new("gs", members))
}

/// Result of a fellow-travel scan.
#[derive(Clone, Debug)]
pub struct FellowTravelReport {
    pub ok: bool,
    pub max_distance: u32,
    pub witness: Option<(CombinatorialPath, CombinatorialPath)>,
    pub pairs_checked: usize,
}

/// Checks the (k,l) fellow-traveller property: every pair of member paths
/// whose start vertices and end vertices are at most `l` apart stays within
/// path distance `k`. Returns the maximizing pair.
pub fn check_fellow_travel(
    k: &SimplicialComplex,
    system: &PathSystem,
    k_bound: u32,
    l_bound: u32,
) -> FellowTravelReport {
    let mut max_distance = 0;
    let mut witness = None;
    let mut pairs_checked = 0;
    let members = system.members();
    for (a_idx, a) in members.iter().enumerate() {
        for b in &members[a_idx..] {
            let starts = k.distance(a.start(), b.start()).unwrap_or(u32::MAX);
            let ends = k.distance(a.end(), b.end()).unwrap_or(u32::MAX);
            if starts > l_bound || ends > l_bound {
                continue;
            }
            pairs_checked += 1;
            let d = paths::path_distance(k, a, b);
            if d > max_distance {
                max_distance = d;
                witness = Some((a.clone(), b.clone()));
            }
        }
    }
    FellowTravelReport { ok: max_distance <= k_bound, max_distance, witness, pairs_checked }
}

/// Checks that the image of every member under every automorphism is a
/// member; returns the first violation.
pub fn check_g_invariance(
    k: &SimplicialComplex,
    system: &PathSystem,
    autos: &[Automorphism],
) -> Result<(), (CombinatorialPath, usize)> {
    for (gi, g) in autos.iter().enumerate() {
        for p in system.members() {
            let image = CombinatorialPath::new(k, g.apply_sequence(p.vertices()))
                .expect("automorphisms preserve edges");
            if !system.contains(&image) {
                return Err((p.clone(), gi));
            }
        }
    }
    Ok(())
}

/// The forbidden windows of a complex: short geodesic subpaths that already
/// exhibit a bad pair on their own witness disks. Returned as (pattern,
/// anchored) where anchored patterns match only at the start of a word.
/// Interior bad pairs sit mid-window in a four-vertex geodesic; a bad pair at
/// the second vertex of a path has no left context and anchors at the start.
pub fn bad_windows(k: &SimplicialComplex) -> Result<Vec<(CombinatorialPath, bool)>, GsError> {
    let mut out = Vec::new();
    // four-vertex geodesic windows, bad pair in the middle
    for &u in k.vertices() {
        for &w in k.vertices() {
            if k.distance(u, w).map_err(PathError::from)? != 3 {
                continue;
            }
            for window in paths::enumerate_geodesics(k, u, w, paths::DEFAULT_GEODESIC_LIMIT)? {
                let bad = find_bad_pairs(k, &window)?;
                if bad.iter().any(|p| p.index == 2) {
                    out.push((window, false));
                }
            }
        }
    }
    // three-vertex geodesic prefixes, bad pair at the start
    for &u in k.vertices() {
        for &w in k.vertices() {
            if k.distance(u, w).map_err(PathError::from)? != 2 {
                continue;
            }
            for window in paths::enumerate_geodesics(k, u, w, paths::DEFAULT_GEODESIC_LIMIT)? {
                let bad = find_bad_pairs(k, &window)?;
                if bad.iter().any(|p| p.index == 1) {
                    out.push((window, true));
                }
            }
        }
    }
    Ok(out)
}
