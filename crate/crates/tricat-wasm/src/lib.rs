//! Browser bindings for the tricat toolkit: a small interactive surface over
//! the curvature battery, the minimal spanning-disk search, and the
//! geodesic/GS machinery, for the static demo page in `www/`.
//!
//! A complex source is either a `.cplx` document or `fixture:NAME[:params]`.

use tricat::automata;
use tricat::complex::SimplicialComplex;
use tricat::curvature;
use tricat::disks;
use tricat::fixtures;
use tricat::gs;
use tricat::io::{self, DocumentMeta};
use tricat::paths::{self, CombinatorialPath};
use tricat::svg;
use wasm_bindgen::prelude::*;

fn load(source: &str) -> Result<(SimplicialComplex, DocumentMeta), String> {
    let trimmed = source.trim();
    if let Some(spec) = trimmed.strip_prefix("fixture:") {
        fixtures::generate_fixture(spec.trim()).map_err(|e| e.to_string())
    } else {
        io::parse_complex(trimmed).map_err(|e| e.to_string())
    }
}

fn parse_loop(k: &SimplicialComplex, names: &str) -> Result<CombinatorialPath, String> {
    let parts: Vec<&str> = names.split_whitespace().collect();
    if parts.is_empty() {
        return Err("give the path as whitespace-separated vertex names".into());
    }
    CombinatorialPath::from_names(k, &parts).map_err(|e| e.to_string())
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// The available fixture specs, one per line.
#[wasm_bindgen]
pub fn fixture_list() -> String {
    fixtures::FIXTURE_NAMES.join("\n")
}

/// Canonical `.cplx` text of a fixture, for seeding the editor.
#[wasm_bindgen]
pub fn fixture_source(spec: &str) -> String {
    match fixtures::generate_fixture(spec) {
        Ok((k, meta)) => io::serialize_complex(&k, &meta),
        Err(e) => format!("error: {e}"),
    }
}

/// Runs the curvature battery and renders the report as plain text.
#[wasm_bindgen]
pub fn curvature_report(source: &str) -> String {
    match load(source) {
        Ok((k, meta)) => {
            let report = curvature::certify_cat0_necessary(&k);
            let mut out = format!(
                "vertices: {}\ndimension: {}\n{}",
                k.vertex_count(),
                k.dim(),
                report.render(&k)
            );
            if meta.declared_cat0 == Some(true) && !report.passes {
                out.push_str("declared-cat0-contradiction: document declares CAT(0), battery fails\n");
            }
            out
        }
        Err(e) => format!("error: {e}"),
    }
}

/// Searches for all minimal disks spanning a closed path and renders each as
/// an inline SVG with a summary header, as an HTML fragment.
#[wasm_bindgen]
pub fn span_disks_html(source: &str, loop_spec: &str) -> String {
    let go = || -> Result<String, String> {
        let (k, _) = load(source)?;
        let alpha = parse_loop(&k, loop_spec)?;
        let found = disks::minimal_spanning_disk(&k, &alpha, None).map_err(|e| e.to_string())?;
        let mut html = format!("<p>{} minimal disk(s)</p>\n", found.len());
        for (i, d) in found.iter().enumerate() {
            html.push_str(&format!(
                "<div class=\"disk\"><p>disk {i}: area {}, boundary {}, interior vertices {}, \
                 Gauss-Bonnet {}</p>\n",
                d.area(),
                d.boundary_len(),
                d.interior_vertices().len(),
                d.gauss_bonnet_sum().map(|s| s.to_string()).unwrap_or_else(|_| "-".into())
            ));
            match svg::export_disk_svg(d, &k) {
                Ok(image) => html.push_str(&image),
                Err(e) => html.push_str(&format!("<p>(not drawable: {})</p>", escape(&e.to_string()))),
            }
            html.push_str("</div>\n");
        }
        Ok(html)
    };
    match go() {
        Ok(html) => html,
        Err(e) => format!("<p class=\"error\">{}</p>", escape(&e)),
    }
}

/// Geodesics between two vertices with the GS verdict, bad pairs, and a
/// resolution for the first non-GS geodesic, as plain text.
#[wasm_bindgen]
pub fn geodesic_report(source: &str, from: &str, to: &str) -> String {
    let go = || -> Result<String, String> {
        let (k, _) = load(source)?;
        let u = k
            .vertex_by_name(from.trim())
            .ok_or_else(|| format!("unknown vertex `{from}`"))?;
        let w = k
            .vertex_by_name(to.trim())
            .ok_or_else(|| format!("unknown vertex `{to}`"))?;
        let d = paths::combinatorial_distance(&k, u, w).map_err(|e| e.to_string())?;
        let all = paths::enumerate_geodesics(&k, u, w, 10_000).map_err(|e| e.to_string())?;
        let mut out = format!("distance: {d}\ngeodesics: {}\n", all.len());
        let mut first_bad: Option<CombinatorialPath> = None;
        for g in &all {
            let pairs = gs::find_bad_pairs(&k, g).map_err(|e| e.to_string())?;
            if pairs.is_empty() {
                out.push_str(&format!("  {}   [GS]\n", g.display(&k)));
            } else {
                let spots: Vec<String> = pairs
                    .iter()
                    .map(|p| format!("{}@{}", k.name(g.vertices()[p.index]), p.index))
                    .collect();
                out.push_str(&format!(
                    "  {}   [bad pairs at {}]\n",
                    g.display(&k),
                    spots.join(", ")
                ));
                if first_bad.is_none() {
                    first_bad = Some(g.clone());
                }
            }
        }
        if let Some(bad) = first_bad {
            match gs::resolve_bad_pairs(&k, &bad) {
                Ok((resolved, seq)) => {
                    out.push_str(&format!(
                        "resolving {}: {} diagonal move(s) -> {}\n",
                        bad.display(&k),
                        seq.len(),
                        resolved.display(&k)
                    ));
                }
                Err(gs::GsError::NoGsGeodesic) => {
                    out.push_str("no GS-geodesic is reachable for this pair\n");
                }
                Err(e) => return Err(e.to_string()),
            }
        }
        Ok(out)
    };
    match go() {
        Ok(text) => text,
        Err(e) => format!("error: {e}"),
    }
}

/// The geodesic or GS acceptor in Graphviz form, for the machine view.
#[wasm_bindgen]
pub fn acceptor_dot(source: &str, kind: &str) -> String {
    let go = || -> Result<String, String> {
        let (k, _) = load(source)?;
        let machine = match kind {
            "gs" => automata::gs_fsa(&k, k.vertices(), &[]).map_err(|e| e.to_string())?,
            _ => automata::geodesic_fsa(&k, k.vertices()).map_err(|e| e.to_string())?,
        };
        Ok(format!(
            "states: {}\n\n{}",
            machine.state_count(),
            machine.to_dot(&k)
        ))
    };
    match go() {
        Ok(text) => text,
        Err(e) => format!("error: {e}"),
    }
}
