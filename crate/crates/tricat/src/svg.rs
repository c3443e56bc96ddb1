//! Planar rendering of nonsingular disk diagrams.
//!
//! The boundary walk is pinned to a regular polygon and interior vertices are
//! placed by a Tutte embedding: each at the barycenter of its neighbors,
//! solved by fixed-point iteration. For a disk triangulation this produces a
//! planar straight-line drawing. Output is deterministic for a given input:
//! fixed iteration schedule, coordinates rounded to two decimals.

use crate::complex::SimplicialComplex;
use crate::disks::{DiskDiagram, DiskError};
use std::fmt::Write as _;

const SIZE: f64 = 420.0;
const MARGIN: f64 = 40.0;
const ITERATIONS: usize = 400;

/// Planar straight-line coordinates: boundary on a regular polygon, interior
/// at neighbor barycenters.
pub fn tutte_layout(disk: &DiskDiagram) -> Result<Vec<(f64, f64)>, DiskError> {
    let validation = disk.validate()?;
    if !validation.nonsingular {
        return Err(DiskError::SingularDisk);
    }
    let n = disk.labels().len();
    let walk = disk.boundary_walk();
    let radius = (SIZE - 2.0 * MARGIN) / 2.0;
    let center = SIZE / 2.0;
    let mut pos = vec![(center, center); n];
    let b = walk.len();
    for (i, &v) in walk.iter().enumerate() {
        // clockwise from the top, matching the boundary orientation
        let angle = -std::f64::consts::FRAC_PI_2 + 2.0 * std::f64::consts::PI * i as f64 / b as f64;
        pos[v] = (center + radius * angle.cos(), center + radius * angle.sin());
    }
    let interior = disk.interior_vertices();
    if interior.is_empty() {
        return Ok(pos);
    }
    let edges = disk.edge_set();
    let mut neighbors: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(a, c) in &edges {
        neighbors[a].push(c);
        neighbors[c].push(a);
    }
    for _ in 0..ITERATIONS {
        for &v in &interior {
            let (mut x, mut y) = (0.0, 0.0);
            for &u in &neighbors[v] {
                x += pos[u].0;
                y += pos[u].1;
            }
            let d = neighbors[v].len() as f64;
            pos[v] = (x / d, y / d);
        }
    }
    Ok(pos)
}

/// Renders a nonsingular disk as an SVG document: filled faces, edges, the
/// boundary highlighted, and vertices labeled by their complex names.
pub fn export_disk_svg(disk: &DiskDiagram, k: &SimplicialComplex) -> Result<String, DiskError> {
    disk.check_labels(k)?;
    let pos = tutte_layout(disk)?;
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {SIZE} {SIZE}\" \
         width=\"{SIZE}\" height=\"{SIZE}\">"
    );
    let _ = writeln!(svg, "  <rect width=\"{SIZE}\" height=\"{SIZE}\" fill=\"white\"/>");
    for t in disk.triangles() {
        let points: Vec<String> = t
            .iter()
            .map(|&v| format!("{:.2},{:.2}", pos[v].0, pos[v].1))
            .collect();
        let _ = writeln!(
            svg,
            "  <polygon points=\"{}\" fill=\"#dbe9f6\" stroke=\"none\"/>",
            points.join(" ")
        );
    }
    for &(a, b) in &disk.edge_set() {
        let _ = writeln!(
            svg,
            "  <line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" \
             stroke=\"#555555\" stroke-width=\"1\"/>",
            pos[a].0, pos[a].1, pos[b].0, pos[b].1
        );
    }
    let walk = disk.boundary_walk();
    if walk.len() > 1 {
        let points: Vec<String> = walk
            .iter()
            .chain(std::iter::once(&walk[0]))
            .map(|&v| format!("{:.2},{:.2}", pos[v].0, pos[v].1))
            .collect();
        let _ = writeln!(
            svg,
            "  <polyline points=\"{}\" fill=\"none\" stroke=\"#1f4e88\" stroke-width=\"2.5\"/>",
            points.join(" ")
        );
    }
    for (v, &(x, y)) in pos.iter().enumerate() {
        let interior = !walk.contains(&v);
        let fill = if interior { "#c0392b" } else { "#1f4e88" };
        let _ = writeln!(svg, "  <circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"4\" fill=\"{fill}\"/>");
        let _ = writeln!(
            svg,
            "  <text x=\"{:.2}\" y=\"{:.2}\" font-size=\"13\" font-family=\"monospace\" \
             fill=\"#222222\">{}</text>",
            x + 6.0,
            y - 6.0,
            k.name(disk.label(v))
        );
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::disks::minimal_spanning_disk;
    use crate::fixtures;
    use crate::paths::CombinatorialPath;

    #[test]
    fn single_triangle_renders() {
        let k = SimplicialComplex::from_named(&[&["a", "b", "c"]]).unwrap();
        let alpha = CombinatorialPath::from_names(&k, &["a", "b", "c", "a"]).unwrap();
        let disks = minimal_spanning_disk(&k, &alpha, None).unwrap();
        let svg = export_disk_svg(&disks[0], &k).unwrap();
        assert_eq!(svg.matches("<circle").count(), 3);
        assert_eq!(svg.matches("<polygon").count(), 1);
        assert!(svg.contains(">a</text>"));
    }

    #[test]
    fn hex_disk_renders_with_interior_center() {
        let (k, _) = fixtures::hex_disk().unwrap();
        let alpha =
            CombinatorialPath::from_names(&k, &["v0", "v1", "v2", "v3", "v4", "v5", "v0"])
                .unwrap();
        let disks = minimal_spanning_disk(&k, &alpha, None).unwrap();
        let svg = export_disk_svg(&disks[0], &k).unwrap();
        assert_eq!(svg.matches("<circle").count(), 7);
        assert_eq!(svg.matches("<polygon").count(), 6);
        // the center lands mid-canvas by symmetry
        let layout = tutte_layout(&disks[0]).unwrap();
        let center = disks[0].interior_vertices()[0];
        assert!((layout[center].0 - SIZE / 2.0).abs() < 1.0);
        assert!((layout[center].1 - SIZE / 2.0).abs() < 1.0);
    }

    #[test]
    fn deterministic_output() {
        let (k, _) = fixtures::pentagon_join(4).unwrap();
        let alpha =
            CombinatorialPath::from_names(&k, &["v0", "v1", "v2", "v3", "v4", "v0"]).unwrap();
        let disks = minimal_spanning_disk(&k, &alpha, None).unwrap();
        assert_eq!(disks.len(), 3);
        let one = export_disk_svg(&disks[0], &k).unwrap();
        let two = export_disk_svg(&disks[0], &k).unwrap();
        assert_eq!(one, two);
        // 5 boundary + 1 interior vertex
        assert_eq!(one.matches("<circle").count(), 6);
    }

    #[test]
    fn singular_disk_rejected() {
        let k = SimplicialComplex::from_named(&[&["a", "b", "c", "d"]]).unwrap();
        let alpha = CombinatorialPath::from_names(&k, &["a", "b", "a"]).unwrap();
        let disks = minimal_spanning_disk(&k, &alpha, None).unwrap();
        assert!(matches!(
            export_disk_svg(&disks[0], &k),
            Err(DiskError::SingularDisk)
        ));
    }
}
