//! Generators for the bundled example complexes.
//!
//! Each generator returns the complex together with document metadata; the
//! `declared-cat0` flag is set exactly on the fixtures that model CAT(0)
//! complexes of dimension at most three (the flag is the trust boundary for
//! the CAT(0)-conditional machinery, and the curvature battery cross-checks
//! it).

use crate::complex::{ComplexError, SimplicialComplex};
use crate::io::DocumentMeta;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FixtureError {
    UnknownFixture(String),
    BadParams(String),
    Complex(ComplexError),
}

impl fmt::Display for FixtureError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FixtureError::UnknownFixture(n) => write!(f, "unknown fixture `{n}`"),
            FixtureError::BadParams(m) => write!(f, "bad fixture parameters: {m}"),
            FixtureError::Complex(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for FixtureError {}

impl From<ComplexError> for FixtureError {
    fn from(e: ComplexError) -> Self {
        FixtureError::Complex(e)
    }
}

/// Names of the available fixtures, with parameter syntax.
pub const FIXTURE_NAMES: &[&str] = &[
    "pentagon_join:n (n >= 3)",
    "narwhal:n (n >= 3)",
    "hex_disk",
    "stacked_tets:k (k >= 3)",
    "octahedron",
    "strip:k (k >= 1)",
];

/// Builds a fixture from a `name` or `name:params` spec string.
pub fn generate_fixture(spec: &str) -> Result<(SimplicialComplex, DocumentMeta), FixtureError> {
    let (name, param) = match spec.split_once(':') {
        Some((n, p)) => (n, Some(p)),
        None => (spec, None),
    };
    let usize_param = |what: &str, min: usize| -> Result<usize, FixtureError> {
        let p = param.ok_or_else(|| {
            FixtureError::BadParams(format!("{name} requires a parameter `{what}`"))
        })?;
        let v: usize = p
            .parse()
            .map_err(|_| FixtureError::BadParams(format!("`{p}` is not a number")))?;
        if v < min {
            return Err(FixtureError::BadParams(format!("{what} must be at least {min}")));
        }
        Ok(v)
    };
    match name {
        "pentagon_join" => pentagon_join(usize_param("n", 3)?),
        "narwhal" => narwhal(usize_param("n", 3)?),
        "hex_disk" => {
            no_param(name, param)?;
            hex_disk()
        }
        "stacked_tets" => stacked_tets(usize_param("k", 3)?),
        "octahedron" => {
            no_param(name, param)?;
            octahedron()
        }
        "strip" => strip(usize_param("k", 1)?),
        other => Err(FixtureError::UnknownFixture(other.to_string())),
    }
}

fn no_param(name: &str, param: Option<&str>) -> Result<(), FixtureError> {
    match param {
        None => Ok(()),
        Some(p) => Err(FixtureError::BadParams(format!("{name} takes no parameter, got `{p}`"))),
    }
}

/// Join of an (n-2)-simplex with a 5-cycle: five n-simplices arranged
/// cyclically around the core simplex. The pentagon `v0..v4` has no chords,
/// so for n >= 4 the complex has an empty pentagon while remaining flag.
pub fn pentagon_join(n: usize) -> Result<(SimplicialComplex, DocumentMeta), FixtureError> {
    if n < 3 {
        return Err(FixtureError::BadParams("pentagon_join needs n >= 3".into()));
    }
    let core: Vec<String> = (0..n - 1).map(|i| format!("s{i}")).collect();
    let ring: Vec<String> = (0..5).map(|i| format!("v{i}")).collect();
    let mut maximal: Vec<Vec<&str>> = Vec::new();
    for i in 0..5 {
        let mut cell: Vec<&str> = core.iter().map(String::as_str).collect();
        cell.push(&ring[i]);
        cell.push(&ring[(i + 1) % 5]);
        maximal.push(cell);
    }
    let refs: Vec<&[&str]> = maximal.iter().map(Vec::as_slice).collect();
    let k = SimplicialComplex::from_named(&refs)?;
    let meta = DocumentMeta {
        declared_cat0: Some(false),
        dim_unrestricted: n > 3,
    };
    Ok((k, meta))
}

/// The pentagon join with one extra triangle `{v2, v3, u}` hung on the lower
/// edge of the pentagon.
pub fn narwhal(n: usize) -> Result<(SimplicialComplex, DocumentMeta), FixtureError> {
    if n < 3 {
        return Err(FixtureError::BadParams("narwhal needs n >= 3".into()));
    }
    let core: Vec<String> = (0..n - 1).map(|i| format!("s{i}")).collect();
    let ring: Vec<String> = (0..5).map(|i| format!("v{i}")).collect();
    let mut maximal: Vec<Vec<&str>> = Vec::new();
    for i in 0..5 {
        let mut cell: Vec<&str> = core.iter().map(String::as_str).collect();
        cell.push(&ring[i]);
        cell.push(&ring[(i + 1) % 5]);
        maximal.push(cell);
    }
    maximal.push(vec!["v2", "v3", "u"]);
    let refs: Vec<&[&str]> = maximal.iter().map(Vec::as_slice).collect();
    let k = SimplicialComplex::from_named(&refs)?;
    let meta = DocumentMeta {
        declared_cat0: Some(false),
        dim_unrestricted: n > 3,
    };
    Ok((k, meta))
}

/// Six triangles around a center vertex `o` with ring `v0..v5`.
pub fn hex_disk() -> Result<(SimplicialComplex, DocumentMeta), FixtureError> {
    let ring: Vec<String> = (0..6).map(|i| format!("v{i}")).collect();
    let mut maximal: Vec<Vec<&str>> = Vec::new();
    for i in 0..6 {
        maximal.push(vec!["o", &ring[i], &ring[(i + 1) % 6]]);
    }
    let refs: Vec<&[&str]> = maximal.iter().map(Vec::as_slice).collect();
    let k = SimplicialComplex::from_named(&refs)?;
    Ok((k, DocumentMeta { declared_cat0: Some(true), dim_unrestricted: false }))
}

/// `k` tetrahedra stacked cyclically around a common edge `{a, b}`, with ring
/// vertices `c0..c(k-1)`. The metric link of the shared edge is a k-cycle of
/// edges of length `arccos(1/3)`, so the complex passes the edge-link check
/// exactly when `k >= 6`.
pub fn stacked_tets(k: usize) -> Result<(SimplicialComplex, DocumentMeta), FixtureError> {
    if k < 3 {
        return Err(FixtureError::BadParams("stacked_tets needs k >= 3".into()));
    }
    let ring: Vec<String> = (0..k).map(|i| format!("c{i}")).collect();
    let mut maximal: Vec<Vec<&str>> = Vec::new();
    for i in 0..k {
        maximal.push(vec!["a", "b", &ring[i], &ring[(i + 1) % k]]);
    }
    let refs: Vec<&[&str]> = maximal.iter().map(Vec::as_slice).collect();
    let complex = SimplicialComplex::from_named(&refs)?;
    let meta = DocumentMeta { declared_cat0: Some(k >= 6), dim_unrestricted: false };
    Ok((complex, meta))
}

/// Boundary of the octahedron: eight triangles on vertices `xp, xm, yp, ym,
/// zp, zm` (one vertex from each antipodal pair per face). A 2-sphere, so not
/// CAT(0), but it has the richest symmetry of the bundled fixtures.
pub fn octahedron() -> Result<(SimplicialComplex, DocumentMeta), FixtureError> {
    let mut maximal: Vec<Vec<&str>> = Vec::new();
    for x in ["xp", "xm"] {
        for y in ["yp", "ym"] {
            for z in ["zp", "zm"] {
                maximal.push(vec![x, y, z]);
            }
        }
    }
    let refs: Vec<&[&str]> = maximal.iter().map(Vec::as_slice).collect();
    let k = SimplicialComplex::from_named(&refs)?;
    Ok((k, DocumentMeta { declared_cat0: Some(false), dim_unrestricted: false }))
}

/// A strip of `k` triangles `{p_i, p_{i+1}, p_{i+2}}` on `k + 2` vertices.
pub fn strip(k: usize) -> Result<(SimplicialComplex, DocumentMeta), FixtureError> {
    if k < 1 {
        return Err(FixtureError::BadParams("strip needs k >= 1".into()));
    }
    let names: Vec<String> = (0..k + 2).map(|i| format!("p{i}")).collect();
    let mut maximal: Vec<Vec<&str>> = Vec::new();
    for i in 0..k {
        maximal.push(vec![&names[i], &names[i + 1], &names[i + 2]]);
    }
    let refs: Vec<&[&str]> = maximal.iter().map(Vec::as_slice).collect();
    let complex = SimplicialComplex::from_named(&refs)?;
    Ok((complex, DocumentMeta { declared_cat0: Some(true), dim_unrestricted: false }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pentagon_join_3_shape() {
        let (k, meta) = pentagon_join(3).unwrap();
        assert_eq!(k.vertex_count(), 7);
        assert_eq!(k.maximal_simplices().len(), 5);
        assert!(k.maximal_simplices().iter().all(|s| s.dim() == 3));
        assert_eq!(meta.declared_cat0, Some(false));
    }

    #[test]
    fn pentagon_join_4_is_4_dimensional() {
        let (k, _) = pentagon_join(4).unwrap();
        assert_eq!(k.vertex_count(), 8);
        assert_eq!(k.dim(), 4);
        // pentagon has no chords
        let v0 = k.vertex_by_name("v0").unwrap();
        let v2 = k.vertex_by_name("v2").unwrap();
        assert!(!k.has_edge(v0, v2));
    }

    #[test]
    fn narwhal_attaches_one_triangle() {
        let (k, _) = narwhal(4).unwrap();
        assert_eq!(k.vertex_count(), 9);
        let u = k.vertex_by_name("u").unwrap();
        assert_eq!(k.neighbors(u).len(), 2);
    }

    #[test]
    fn hex_disk_shape() {
        let (k, meta) = hex_disk().unwrap();
        assert_eq!(k.vertex_count(), 7);
        assert_eq!(k.simplex_count_by_dim(2), 6);
        let o = k.vertex_by_name("o").unwrap();
        assert_eq!(k.neighbors(o).len(), 6);
        assert_eq!(meta.declared_cat0, Some(true));
    }

    #[test]
    fn stacked_tets_counts() {
        let (k3, m3) = stacked_tets(3).unwrap();
        assert_eq!(k3.vertex_count(), 5);
        assert_eq!(k3.maximal_simplices().len(), 3);
        assert_eq!(m3.declared_cat0, Some(false));
        let (k6, m6) = stacked_tets(6).unwrap();
        assert_eq!(k6.vertex_count(), 8);
        assert_eq!(m6.declared_cat0, Some(true));
    }

    #[test]
    fn octahedron_shape() {
        let (k, _) = octahedron().unwrap();
        assert_eq!(k.vertex_count(), 6);
        assert_eq!(k.simplex_count_by_dim(2), 8);
        assert_eq!(k.simplex_count_by_dim(1), 12);
        let xp = k.vertex_by_name("xp").unwrap();
        let xm = k.vertex_by_name("xm").unwrap();
        assert!(!k.has_edge(xp, xm));
    }

    #[test]
    fn strip_shape() {
        let (k, _) = strip(4).unwrap();
        assert_eq!(k.vertex_count(), 6);
        assert_eq!(k.simplex_count_by_dim(2), 4);
    }

    #[test]
    fn spec_strings() {
        assert!(generate_fixture("hex_disk").is_ok());
        assert!(generate_fixture("pentagon_join:4").is_ok());
        assert!(matches!(
            generate_fixture("pentagon_join:2"),
            Err(FixtureError::BadParams(_))
        ));
        assert!(matches!(
            generate_fixture("wedge"),
            Err(FixtureError::UnknownFixture(_))
        ));
        assert!(matches!(
            generate_fixture("hex_disk:3"),
            Err(FixtureError::BadParams(_))
        ));
    }
}
