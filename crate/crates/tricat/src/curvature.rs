//! The curvature battery: flagness, empty n-gon detection, the systolic
//! check, and edge-link girth. Together these are the checkable necessary
//! conditions for a regular simplicial 3-complex to be CAT(0).
//!
//! An empty n-gon is a tight n-cycle whose minimal spanning disk has an
//! interior vertex. Operationally: an empty triangle is a 3-cycle not spanned
//! by a face, an empty square is a 4-cycle not spanned by two faces sharing a
//! diagonal, and an empty pentagon is a 5-cycle no fan triangulation of which
//! consists of faces.
//!
//! The battery is necessary, not sufficient: detecting short locally geodesic
//! loops in 2-dimensional vertex links is out of scope, so a complex passing
//! every check is not thereby certified CAT(0).

use crate::complex::{dihedral_angle_tet, Simplex, SimplicialComplex, VertexId, ANGLE_TOL};
use std::collections::BTreeSet;
use std::f64::consts::PI;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CurvatureError {
    UnsupportedN(usize),
    DimensionTooHigh { dim: usize },
}

impl fmt::Display for CurvatureError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurvatureError::UnsupportedN(n) => {
                write!(f, "empty n-gon search supports n in {{3,4,5}}, got {n}")
            }
            CurvatureError::DimensionTooHigh { dim } => {
                write!(f, "edge-link check requires dimension <= 3, complex has dimension {dim}")
            }
        }
    }
}

impl std::error::Error for CurvatureError {}

/// Result of the flag test: `Ok` or a minimal non-spanning clique.
pub fn is_flag(k: &SimplicialComplex) -> Result<(), Vec<VertexId>> {
    match find_non_spanning_clique(k) {
        None => Ok(()),
        Some(witness) => Err(witness),
    }
}

/// Smallest clique of the 1-skeleton that spans no simplex, if any.
/// Searches cliques by increasing size; all smaller cliques span, so the
/// returned witness is minimal. Cliques larger than `dim + 1` cannot span
/// and are reported as witnesses directly.
fn find_non_spanning_clique(k: &SimplicialComplex) -> Option<Vec<VertexId>> {
    let max_spanning = k.dim() + 1;
    for size in 3..=(max_spanning + 1) {
        let mut witness = None;
        let mut clique: Vec<VertexId> = Vec::with_capacity(size);
        for &v in k.vertices() {
            clique.push(v);
            extend_cliques(k, size, &mut clique, &mut |c| {
                if witness.is_none() && !k.has_simplex(&Simplex::new(c.to_vec()).unwrap()) {
                    witness = Some(c.to_vec());
                }
            });
            clique.pop();
            if witness.is_some() {
                return witness;
            }
        }
    }
    None
}

fn extend_cliques(
    k: &SimplicialComplex,
    size: usize,
    clique: &mut Vec<VertexId>,
    found: &mut impl FnMut(&[VertexId]),
) {
    if clique.len() == size {
        found(clique);
        return;
    }
    let last = *clique.last().unwrap();
    let candidates: Vec<VertexId> = k
        .neighbors(last)
        .iter()
        .copied()
        .filter(|&n| n > last && clique.iter().all(|&c| k.has_edge(c, n)))
        .collect();
    for n in candidates {
        clique.push(n);
        extend_cliques(k, size, clique, found);
        clique.pop();
    }
}

/// Enumerates tight n-cycles for n in {3,4,5} in canonical form (least vertex
/// first, smaller neighbor second), each exactly once.
fn tight_cycles(k: &SimplicialComplex, n: usize) -> Vec<Vec<VertexId>> {
    let mut out = Vec::new();
    let mut path: Vec<VertexId> = Vec::with_capacity(n);
    for &v in k.vertices() {
        path.push(v);
        cycle_dfs(k, n, &mut path, &mut out);
        path.pop();
    }
    out
}

fn cycle_dfs(k: &SimplicialComplex, n: usize, path: &mut Vec<VertexId>, out: &mut Vec<Vec<VertexId>>) {
    let root = path[0];
    if path.len() == n {
        // close the cycle; canonical direction: second vertex < last vertex
        if k.has_edge(*path.last().unwrap(), root) && path[1] < path[n - 1] {
            out.push(path.clone());
        }
        return;
    }
    let last = *path.last().unwrap();
    for &next in k.neighbors(last) {
        if next > root && !path.contains(&next) {
            path.push(next);
            cycle_dfs(k, n, path, out);
            path.pop();
        }
    }
}

fn is_empty_ngon(k: &SimplicialComplex, cycle: &[VertexId]) -> bool {
    match cycle.len() {
        3 => !k.has_simplex(&Simplex::new(cycle.to_vec()).unwrap()),
        4 => {
            // non-empty iff some diagonal carries both triangles
            !(diagonal_filled(k, cycle, 0) || diagonal_filled(k, cycle, 1))
        }
        5 => {
            // non-empty iff some fan triangulation consists of faces
            !(0..5).any(|apex| fan_filled(k, cycle, apex))
        }
        _ => false,
    }
}

fn diagonal_filled(k: &SimplicialComplex, c: &[VertexId], which: usize) -> bool {
    let (a, b, x, y) = if which == 0 {
        (c[0], c[2], c[1], c[3])
    } else {
        (c[1], c[3], c[2], c[0])
    };
    k.has_edge(a, b)
        && k.has_simplex(&Simplex::new(vec![a, b, x]).unwrap())
        && k.has_simplex(&Simplex::new(vec![a, b, y]).unwrap())
}

fn fan_filled(k: &SimplicialComplex, c: &[VertexId], apex: usize) -> bool {
    (0..3).all(|i| {
        let t = Simplex::new(vec![c[apex], c[(apex + i + 1) % 5], c[(apex + i + 2) % 5]]).unwrap();
        k.has_simplex(&t)
    })
}

/// Exhaustive search for an empty n-gon, n in {3,4,5}. Returns a witness
/// cycle in canonical form, preferring the lexicographically least.
pub fn find_empty_ngon(
    k: &SimplicialComplex,
    n: usize,
) -> Result<Option<Vec<VertexId>>, CurvatureError> {
    if !(3..=5).contains(&n) {
        return Err(CurvatureError::UnsupportedN(n));
    }
    let mut cycles = tight_cycles(k, n);
    cycles.sort();
    Ok(cycles.into_iter().find(|c| is_empty_ngon(k, c)))
}

/// Why a link fails 6-largeness.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum LargenessFailure {
    NotFlag(Vec<VertexId>),
    EmptyNgon { n: usize, cycle: Vec<VertexId> },
}

/// A simplex whose combinatorial link fails 6-largeness. `simplex` is `None`
/// when the failing "link" is the complex itself (the link of the empty
/// simplex).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SystolicWitness {
    pub simplex: Option<Simplex>,
    pub failure: LargenessFailure,
}

fn six_large(k: &SimplicialComplex) -> Result<(), LargenessFailure> {
    if let Err(clique) = is_flag(k) {
        return Err(LargenessFailure::NotFlag(clique));
    }
    for n in [3, 4, 5] {
        if let Some(cycle) = find_empty_ngon(k, n).expect("n is in range") {
            return Err(LargenessFailure::EmptyNgon { n, cycle });
        }
    }
    Ok(())
}

/// Simplicial nonpositive curvature: the complex and the combinatorial link
/// of every simplex are 6-large (flag with no empty 3-, 4-, or 5-gons).
/// Links are scanned by decreasing dimension, the complex itself last; the
/// first failure is the witness.
pub fn check_systolic(k: &SimplicialComplex) -> Result<(), SystolicWitness> {
    let mut simplices = k.all_simplices();
    simplices.sort_by(|a, b| b.dim().cmp(&a.dim()).then_with(|| a.cmp(b)));
    for s in simplices {
        let link = k.link(&s).expect("enumerated simplices are present");
        if link.is_empty() {
            continue;
        }
        if let Err(failure) = six_large(&link) {
            return Err(SystolicWitness { simplex: Some(s), failure });
        }
    }
    six_large(k).map_err(|failure| SystolicWitness { simplex: None, failure })
}

/// Worst edge of the edge-link check: the edge whose metric link has the
/// shortest cycle, with the cycle length in radians.
#[derive(Clone, PartialEq, Debug)]
pub struct EdgeLinkReport {
    pub ok: bool,
    /// Edge realizing the shortest link cycle, with (edge count, radians).
    pub worst: Option<(Simplex, u32, f64)>,
}

/// Checks that every edge link has no cycle shorter than `2*pi`: the girth of
/// the metric link of each edge, times `arccos(1/3)`, must reach `2*pi`.
/// Equivalently the combinatorial girth must be at least six. Comparisons
/// use the symbolic edge count and a `1e-12` interval.
pub fn check_edge_links(k: &SimplicialComplex) -> Result<EdgeLinkReport, CurvatureError> {
    if k.dim() > 3 {
        return Err(CurvatureError::DimensionTooHigh { dim: k.dim() });
    }
    let mut worst: Option<(Simplex, u32, f64)> = None;
    for (u, v) in k.edges() {
        let e = Simplex::edge(u, v).expect("distinct endpoints");
        let link = k.edge_metric_link(&e).expect("edges of the complex");
        if let Some(g) = link.girth_edges() {
            let length = g as f64 * dihedral_angle_tet();
            if worst.as_ref().map_or(true, |w| g < w.1) {
                worst = Some((e, g, length));
            }
        }
    }
    let ok = match &worst {
        None => true,
        Some((_, g, length)) => {
            let (g, length) = (*g, *length);
            let numeric = length >= 2.0 * PI - ANGLE_TOL;
            // the numeric comparison and the combinatorial threshold agree
            debug_assert_eq!(numeric, g >= 6);
            numeric
        }
    };
    Ok(EdgeLinkReport { ok, worst })
}

/// Combined curvature report. `passes` means every check that applies passed;
/// the edge-link check is skipped (reported as `None`) above dimension three,
/// where its threshold carries no meaning.
#[derive(Clone, PartialEq, Debug)]
pub struct CurvatureReport {
    pub flag: Result<(), Vec<VertexId>>,
    pub empty_ngon_witnesses: [(usize, Option<Vec<VertexId>>); 3],
    pub systolic: Result<(), SystolicWitness>,
    pub edge_links: Option<EdgeLinkReport>,
    pub passes: bool,
}

impl CurvatureReport {
    pub fn render(&self, k: &SimplicialComplex) -> String {
        let names = |vs: &[VertexId]| -> String {
            vs.iter().map(|v| k.name(*v)).collect::<Vec<_>>().join(" ")
        };
        let mut out = String::new();
        match &self.flag {
            Ok(()) => out.push_str("flag: true\n"),
            Err(w) => out.push_str(&format!("flag: false\nflag-witness: {}\n", names(w))),
        }
        for (n, witness) in &self.empty_ngon_witnesses {
            match witness {
                None => out.push_str(&format!("empty-{n}-gon: none\n")),
                Some(c) => out.push_str(&format!("empty-{n}-gon: {}\n", names(c))),
            }
        }
        match &self.systolic {
            Ok(()) => out.push_str("systolic: true\n"),
            Err(w) => {
                out.push_str("systolic: false\n");
                let place = match &w.simplex {
                    Some(s) => {
                        let vs: Vec<&str> = s.vertices().iter().map(|v| k.name(*v)).collect();
                        format!("link of {{{}}}", vs.join(" "))
                    }
                    None => "the complex itself".to_string(),
                };
                match &w.failure {
                    LargenessFailure::NotFlag(c) => out.push_str(&format!(
                        "systolic-witness: {place} is not flag at {}\n",
                        names(c)
                    )),
                    LargenessFailure::EmptyNgon { n, cycle } => out.push_str(&format!(
                        "systolic-witness: {place} has an empty {n}-gon {}\n",
                        names(cycle)
                    )),
                }
            }
        }
        match &self.edge_links {
            None => out.push_str("edge-links: skipped (dimension > 3)\n"),
            Some(r) => {
                out.push_str(&format!("edge-links: {}\n", r.ok));
                if let Some((e, g, len)) = &r.worst {
                    let vs: Vec<&str> = e.vertices().iter().map(|v| k.name(*v)).collect();
                    out.push_str(&format!(
                        "edge-links-worst: {{{}}} girth {} length {:.9}\n",
                        vs.join(" "),
                        g,
                        len
                    ));
                }
            }
        }
        out.push_str(&format!("passes: {}\n", self.passes));
        out
    }
}

/// Runs the whole battery. This is a necessary battery for CAT(0)-ness of a
/// regular simplicial 3-complex, not a certificate.
pub fn certify_cat0_necessary(k: &SimplicialComplex) -> CurvatureReport {
    let flag = is_flag(k);
    let empty_ngon_witnesses = [
        (3, find_empty_ngon(k, 3).expect("3 is in range")),
        (4, find_empty_ngon(k, 4).expect("4 is in range")),
        (5, find_empty_ngon(k, 5).expect("5 is in range")),
    ];
    let systolic = check_systolic(k);
    let edge_links = if k.dim() <= 3 {
        Some(check_edge_links(k).expect("dimension checked"))
    } else {
        None
    };
    let passes = flag.is_ok()
        && empty_ngon_witnesses.iter().all(|(_, w)| w.is_none())
        && systolic.is_ok()
        && edge_links.as_ref().map_or(true, |r| r.ok);
    CurvatureReport { flag, empty_ngon_witnesses, systolic, edge_links, passes }
}

/// Helper for heredity tests: vertex sets of all full subcomplexes of size
/// `size` (as sorted vertex lists).
pub fn vertex_subsets(k: &SimplicialComplex, size: usize) -> Vec<Vec<VertexId>> {
    let vs = k.vertices();
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..size).collect();
    if size > vs.len() {
        return out;
    }
    loop {
        out.push(idx.iter().map(|&i| vs[i]).collect());
        // next combination
        let mut i = size;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + vs.len() - size {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..size {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Empty n-gon search on an induced full subcomplex, for heredity checks.
pub fn empty_ngon_in_induced(
    k: &SimplicialComplex,
    keep: &[VertexId],
    n: usize,
) -> Result<Option<Vec<VertexId>>, CurvatureError> {
    let set: BTreeSet<VertexId> = keep.iter().copied().collect();
    find_empty_ngon(&k.induced(&set), n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn tetrahedron() -> SimplicialComplex {
        SimplicialComplex::from_named(&[&["a", "b", "c", "d"]]).unwrap()
    }

    fn hollow_triangle() -> SimplicialComplex {
        SimplicialComplex::from_named(&[&["a", "b"], &["b", "c"], &["c", "a"]]).unwrap()
    }

    #[test]
    fn tetrahedron_is_flag() {
        assert!(is_flag(&tetrahedron()).is_ok());
    }

    #[test]
    fn hollow_triangle_is_not_flag() {
        let k = hollow_triangle();
        let witness = is_flag(&k).unwrap_err();
        assert_eq!(witness.len(), 3);
    }

    #[test]
    fn octahedron_is_flag() {
        let (k, _) = fixtures::octahedron().unwrap();
        assert!(is_flag(&k).is_ok());
    }

    #[test]
    fn empty_ngon_examples() {
        let tet = tetrahedron();
        assert_eq!(find_empty_ngon(&tet, 3).unwrap(), None);
        let hollow = hollow_triangle();
        let w = find_empty_ngon(&hollow, 3).unwrap().unwrap();
        assert_eq!(w.len(), 3);
        assert!(find_empty_ngon(&tet, 6).is_err());
    }

    #[test]
    fn pentagon_join_4_has_empty_pentagon() {
        let (k, _) = fixtures::pentagon_join(4).unwrap();
        let w = find_empty_ngon(&k, 5).unwrap().unwrap();
        let names: Vec<&str> = w.iter().map(|v| k.name(*v)).collect();
        let mut sorted = names.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec!["v0", "v1", "v2", "v3", "v4"]);
        // flag and no empty squares: the failure is exactly the pentagon
        assert!(is_flag(&k).is_ok());
        assert_eq!(find_empty_ngon(&k, 3).unwrap(), None);
        assert_eq!(find_empty_ngon(&k, 4).unwrap(), None);
    }

    #[test]
    fn octahedron_has_empty_squares() {
        let (k, _) = fixtures::octahedron().unwrap();
        // equatorial squares have no diagonals
        assert!(find_empty_ngon(&k, 4).unwrap().is_some());
    }

    #[test]
    fn tetrahedron_is_systolic() {
        assert!(check_systolic(&tetrahedron()).is_ok());
    }

    #[test]
    fn pentagon_join_3_fails_systolic_at_interior_edge() {
        let (k, _) = fixtures::pentagon_join(3).unwrap();
        let w = check_systolic(&k).unwrap_err();
        let s = w.simplex.expect("failing link of a simplex");
        let names: Vec<&str> = s.vertices().iter().map(|v| k.name(*v)).collect();
        assert_eq!(names, vec!["s0", "s1"]);
        match w.failure {
            LargenessFailure::EmptyNgon { n, .. } => assert_eq!(n, 5),
            other => panic!("expected empty pentagon, got {other:?}"),
        }
    }

    #[test]
    fn interior_edge_link_of_pentagon_join_is_five_cycle() {
        let (k, _) = fixtures::pentagon_join(3).unwrap();
        let s0 = k.vertex_by_name("s0").unwrap();
        let s1 = k.vertex_by_name("s1").unwrap();
        let link = k.link(&Simplex::edge(s0, s1).unwrap()).unwrap();
        assert_eq!(link.vertex_count(), 5);
        assert_eq!(link.maximal_simplices().len(), 5);
        assert!(link.maximal_simplices().iter().all(|s| s.dim() == 1));
        let g = k.edge_metric_link(&Simplex::edge(s0, s1).unwrap()).unwrap();
        assert_eq!(g.girth_edges(), Some(5));
        let len = g.girth_length().unwrap();
        assert!((len - 5.0 * dihedral_angle_tet()).abs() < ANGLE_TOL);
        assert!(len < 2.0 * PI);
    }

    #[test]
    fn stacked_tets_edge_links() {
        let (k3, _) = fixtures::stacked_tets(3).unwrap();
        let r3 = check_edge_links(&k3).unwrap();
        assert!(!r3.ok);
        let (e, g, len) = r3.worst.unwrap();
        assert_eq!(g, 3);
        assert!((len - 3.0 * dihedral_angle_tet()).abs() < ANGLE_TOL);
        let names: Vec<&str> = e.vertices().iter().map(|v| k3.name(*v)).collect();
        assert_eq!(names, vec!["a", "b"]);

        let (k6, _) = fixtures::stacked_tets(6).unwrap();
        let r6 = check_edge_links(&k6).unwrap();
        assert!(r6.ok);
        let (_, g, len) = r6.worst.unwrap();
        assert_eq!(g, 6);
        assert!(len >= 2.0 * PI);
    }

    #[test]
    fn edge_links_reject_high_dimension() {
        let (k, _) = fixtures::pentagon_join(4).unwrap();
        assert!(matches!(
            check_edge_links(&k),
            Err(CurvatureError::DimensionTooHigh { dim: 4 })
        ));
    }

    #[test]
    fn certify_examples() {
        assert!(certify_cat0_necessary(&tetrahedron()).passes);
        let (p4, _) = fixtures::pentagon_join(4).unwrap();
        let report = certify_cat0_necessary(&p4);
        assert!(!report.passes);
        assert!(report.empty_ngon_witnesses[2].1.is_some());
        assert!(report.edge_links.is_none());
        let hollow = hollow_triangle();
        let report = certify_cat0_necessary(&hollow);
        assert!(!report.passes);
        assert!(report.flag.is_err());
    }

    #[test]
    fn declared_cat0_fixtures_pass_battery() {
        for spec in ["hex_disk", "strip:4", "stacked_tets:6"] {
            let (k, meta) = fixtures::generate_fixture(spec).unwrap();
            assert_eq!(meta.declared_cat0, Some(true), "{spec}");
            assert!(certify_cat0_necessary(&k).passes, "{spec}");
        }
    }

    #[test]
    fn systolic_implies_flag_and_no_small_empty_ngons() {
        for spec in ["hex_disk", "strip:4", "stacked_tets:6", "octahedron", "pentagon_join:3"] {
            let (k, _) = fixtures::generate_fixture(spec).unwrap();
            if check_systolic(&k).is_ok() {
                assert!(is_flag(&k).is_ok());
                for n in [3, 4, 5] {
                    assert_eq!(find_empty_ngon(&k, n).unwrap(), None);
                }
            }
        }
    }

    #[test]
    fn full_subcomplexes_inherit_no_empty_ngons() {
        // heredity on every vertex subset of moderate size
        for spec in ["hex_disk", "stacked_tets:6", "strip:4"] {
            let (k, _) = fixtures::generate_fixture(spec).unwrap();
            for n in [3, 4, 5] {
                assert_eq!(find_empty_ngon(&k, n).unwrap(), None, "{spec}");
            }
            for size in 3..=k.vertex_count().min(6) {
                for subset in vertex_subsets(&k, size) {
                    for n in [3, 4, 5] {
                        assert_eq!(
                            empty_ngon_in_induced(&k, &subset, n).unwrap(),
                            None,
                            "{spec} subset {subset:?}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn link_fullness_on_flag_fixtures() {
        // for flag complexes the link equals the full subcomplex on its vertices
        for spec in ["hex_disk", "stacked_tets:6", "octahedron", "strip:3"] {
            let (k, _) = fixtures::generate_fixture(spec).unwrap();
            assert!(is_flag(&k).is_ok());
            for s in k.all_simplices() {
                let link = k.link(&s).unwrap();
                if link.is_empty() {
                    continue;
                }
                let keep: BTreeSet<VertexId> = link.vertices().iter().copied().collect();
                assert_eq!(k.induced(&keep), link, "{spec}: link of {s}");
            }
        }
    }

    #[test]
    fn links_of_full_subcomplexes_are_full_in_links() {
        // walk every vertex subset of the hex disk, take the induced (full)
        // subcomplex L, and compare lk_L(v) with the induced subcomplex of
        // lk_K(v) on its vertices
        let (k, _) = fixtures::hex_disk().unwrap();
        for size in 2..=5 {
            for subset in vertex_subsets(&k, size) {
                let set: BTreeSet<VertexId> = subset.iter().copied().collect();
                let l = k.induced(&set);
                for &v in l.vertices() {
                    let s = Simplex::vertex(v);
                    let link_in_l = l.link(&s).unwrap();
                    let link_in_k = k.link(&s).unwrap();
                    let keep: BTreeSet<VertexId> =
                        link_in_l.vertices().iter().copied().collect();
                    assert_eq!(link_in_k.induced(&keep), link_in_l);
                }
            }
        }
    }
}
