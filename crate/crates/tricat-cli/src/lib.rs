//! Command-line interface over the tricat library.
//!
//! Exit codes: 0 for success or a passing verification, 1 for a failing
//! verification, 2 for usage or parse errors.

use std::collections::BTreeMap;
use std::fs;

use tricat::automata;
use tricat::complex::SimplicialComplex;
use tricat::curvature;
use tricat::disks;
use tricat::fixtures;
use tricat::gs;
use tricat::io::{self, DocumentMeta};
use tricat::moves;
use tricat::paths::{self, CombinatorialPath};
use tricat::svg;

pub const USAGE: &str = "\
usage: tricat <command> [arguments] (--complex PATH | --fixture NAME[:params]) [options]

commands:
  validate                         complex statistics
  curvature                        run the curvature battery (exit 1 on failure)
  distance U W                     combinatorial distance between two vertices
  geodesics U W                    every geodesic between two vertices
  span-disk V0 V1 .. V0            all minimal disks spanning a closed path
  straighten V0 V1 .. [--target \"U .. W\"]
                                   reduce a path to a geodesic by basic moves
  gs-geodesic U W                  produce a GS-geodesic with its move sequence
  verify-gs                        check the GS battery on the whole complex
  fellow-travel K L [--system gs|geodesic]
                                   exhaustive (K,L) fellow-travel scan
  fsa [--kind geodesic|gs|validity] [--format adjacency|dot]
                                   export a path-system acceptor
  export-svg V0 V1 .. V0 [--index I] [--out PATH]
                                   render a minimal spanning disk
  generate NAME[:params]           print a fixture as a .cplx document

fixtures: pentagon_join:n, narwhal:n, hex_disk, stacked_tets:k, octahedron, strip:k

options:
  --complex PATH     read the complex from a .cplx file
  --fixture SPEC     build a bundled fixture
  --max-area N       cap the disk search area
  --limit N          cap enumerations
  --system NAME      path system for fellow-travel (default gs)
  --kind NAME        machine kind for fsa (default geodesic)
  --format NAME      fsa output format (default adjacency)
  --index I          which minimal disk to render (default 0)
  --out PATH         write output to a file instead of stdout
";

struct Parsed {
    positional: Vec<String>,
    options: BTreeMap<String, String>,
}

fn parse_args(args: &[String]) -> Result<Parsed, String> {
    let mut positional = Vec::new();
    let mut options = BTreeMap::new();
    let mut it = args.iter();
    while let Some(a) = it.next() {
        if let Some(name) = a.strip_prefix("--") {
            let value = it
                .next()
                .ok_or_else(|| format!("option --{name} needs a value"))?;
            options.insert(name.to_string(), value.clone());
        } else {
            positional.push(a.clone());
        }
    }
    Ok(Parsed { positional, options })
}

fn load_complex(p: &Parsed) -> Result<(SimplicialComplex, DocumentMeta), String> {
    match (p.options.get("complex"), p.options.get("fixture")) {
        (Some(path), None) => {
            let text = fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
            io::parse_complex(&text).map_err(|e| format!("{path}: {e}"))
        }
        (None, Some(spec)) => fixtures::generate_fixture(spec).map_err(|e| e.to_string()),
        (Some(_), Some(_)) => Err("give either --complex or --fixture, not both".into()),
        (None, None) => Err("a complex is required: --complex PATH or --fixture NAME".into()),
    }
}

fn vertex(k: &SimplicialComplex, name: &str) -> Result<tricat::VertexId, String> {
    k.vertex_by_name(name)
        .ok_or_else(|| format!("unknown vertex `{name}`"))
}

fn parse_path(k: &SimplicialComplex, names: &[String]) -> Result<CombinatorialPath, String> {
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    CombinatorialPath::from_names(k, &refs).map_err(|e| e.to_string())
}

fn emit(p: &Parsed, content: &str) -> Result<(), String> {
    match p.options.get("out") {
        Some(path) => fs::write(path, content).map_err(|e| format!("{path}: {e}")),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

/// Runs a command line; returns the process exit code.
pub fn run(args: &[String]) -> i32 {
    let Some(command) = args.first() else {
        eprint!("{USAGE}");
        return 2;
    };
    if command == "--help" || command == "-h" || command == "help" {
        print!("{USAGE}");
        return 0;
    }
    let parsed = match parse_args(&args[1..]) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let result = match command.as_str() {
        "validate" => cmd_validate(&parsed),
        "curvature" => cmd_curvature(&parsed),
        "distance" => cmd_distance(&parsed),
        "geodesics" => cmd_geodesics(&parsed),
        "span-disk" => cmd_span_disk(&parsed),
        "straighten" => cmd_straighten(&parsed),
        "gs-geodesic" => cmd_gs_geodesic(&parsed),
        "verify-gs" => cmd_verify_gs(&parsed),
        "fellow-travel" => cmd_fellow_travel(&parsed),
        "fsa" => cmd_fsa(&parsed),
        "export-svg" => cmd_export_svg(&parsed),
        "generate" => cmd_generate(&parsed),
        other => {
            eprintln!("error: unknown command `{other}`");
            eprint!("{USAGE}");
            return 2;
        }
    };
    match result {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            2
        }
    }
}

fn cmd_validate(p: &Parsed) -> Result<i32, String> {
    let (k, meta) = load_complex(p)?;
    let mut out = String::new();
    out.push_str(&format!("vertices: {}\n", k.vertex_count()));
    out.push_str(&format!("dimension: {}\n", k.dim()));
    for d in 0..=k.dim() {
        out.push_str(&format!("simplices-dim-{d}: {}\n", k.simplex_count_by_dim(d)));
    }
    out.push_str(&format!("maximal-simplices: {}\n", k.maximal_simplices().len()));
    out.push_str(&format!("connected: {}\n", k.is_connected()));
    if let Some(flag) = meta.declared_cat0 {
        out.push_str(&format!("declared-cat0: {flag}\n"));
    }
    emit(p, &out)?;
    Ok(0)
}

fn cmd_curvature(p: &Parsed) -> Result<i32, String> {
    let (k, meta) = load_complex(p)?;
    let report = curvature::certify_cat0_necessary(&k);
    let mut out = report.render(&k);
    let mut code = if report.passes { 0 } else { 1 };
    if meta.declared_cat0 == Some(true) && !report.passes {
        out.push_str(
            "declared-cat0-contradiction: the document declares CAT(0) but the battery fails\n",
        );
        code = 1;
    }
    emit(p, &out)?;
    Ok(code)
}

fn cmd_distance(p: &Parsed) -> Result<i32, String> {
    let (k, _) = load_complex(p)?;
    let [u, w] = two_names(&p.positional)?;
    let d = paths::combinatorial_distance(&k, vertex(&k, u)?, vertex(&k, w)?)
        .map_err(|e| e.to_string())?;
    emit(p, &format!("distance: {d}\n"))?;
    Ok(0)
}

fn cmd_geodesics(p: &Parsed) -> Result<i32, String> {
    let (k, _) = load_complex(p)?;
    let [u, w] = two_names(&p.positional)?;
    let limit = opt_usize(p, "limit", paths::DEFAULT_GEODESIC_LIMIT)?;
    let gs = paths::enumerate_geodesics(&k, vertex(&k, u)?, vertex(&k, w)?, limit)
        .map_err(|e| e.to_string())?;
    let mut out = format!("count: {}\n", gs.len());
    for g in &gs {
        out.push_str(&format!("geodesic: {}\n", g.display(&k)));
    }
    emit(p, &out)?;
    Ok(0)
}

fn cmd_span_disk(p: &Parsed) -> Result<i32, String> {
    let (k, meta) = load_complex(p)?;
    if p.positional.is_empty() {
        return Err("span-disk needs the closed path as vertex names".into());
    }
    let alpha = parse_path(&k, &p.positional)?;
    let max_area = match p.options.get("max-area") {
        Some(v) => Some(v.parse::<usize>().map_err(|_| "bad --max-area")?),
        None => None,
    };
    let found = disks::minimal_spanning_disk(&k, &alpha, max_area).map_err(|e| e.to_string())?;
    let mut out = format!("disks: {}\n", found.len());
    for (i, d) in found.iter().enumerate() {
        out.push_str(&format!(
            "disk {i}: area {} boundary {} interior {}\n",
            d.area(),
            d.boundary_len(),
            d.interior_vertices().len()
        ));
        for t in d.triangles() {
            out.push_str(&format!(
                "  triangle: {} {} {}\n",
                k.name(d.label(t[0])),
                k.name(d.label(t[1])),
                k.name(d.label(t[2]))
            ));
        }
        if meta.declared_cat0 == Some(true) && !d.is_cat0_disk() {
            out.push_str(
                "  warning: interior vertex of degree < 6 in a declared-CAT(0) complex\n",
            );
        }
    }
    emit(p, &out)?;
    Ok(0)
}

fn cmd_straighten(p: &Parsed) -> Result<i32, String> {
    let (k, _) = load_complex(p)?;
    if p.positional.is_empty() {
        return Err("straighten needs a path as vertex names".into());
    }
    let alpha = parse_path(&k, &p.positional)?;
    let target = match p.options.get("target") {
        Some(t) => {
            let names: Vec<String> = t.split_whitespace().map(str::to_string).collect();
            Some(parse_path(&k, &names)?)
        }
        None => None,
    };
    let (end, seq) = moves::straighten(&k, &alpha, target.as_ref()).map_err(|e| e.to_string())?;
    let mut out = String::new();
    for m in &seq {
        out.push_str(&format!("{}\n", m.render(&k)));
    }
    out.push_str(&format!("result: {}\n", end.display(&k)));
    out.push_str(&format!("length: {}\n", end.len()));
    emit(p, &out)?;
    Ok(0)
}

fn cmd_gs_geodesic(p: &Parsed) -> Result<i32, String> {
    let (k, _) = load_complex(p)?;
    let [u, w] = two_names(&p.positional)?;
    let geodesics = paths::enumerate_geodesics(&k, vertex(&k, u)?, vertex(&k, w)?, 100_000)
        .map_err(|e| e.to_string())?;
    let Some(first) = geodesics.first() else {
        return Err("vertices are not connected".into());
    };
    match gs::resolve_bad_pairs(&k, first) {
        Ok((g, seq)) => {
            let mut out = String::new();
            out.push_str(&format!("start: {}\n", first.display(&k)));
            for m in &seq {
                out.push_str(&format!("{}\n", m.render(&k)));
            }
            out.push_str(&format!("gs-geodesic: {}\n", g.display(&k)));
            emit(p, &out)?;
            Ok(0)
        }
        Err(gs::GsError::NoGsGeodesic) => {
            emit(p, "gs-geodesic: none (every geodesic carries a bad pair)\n")?;
            Ok(1)
        }
        Err(e) => Err(e.to_string()),
    }
}

fn cmd_verify_gs(p: &Parsed) -> Result<i32, String> {
    let (k, _) = load_complex(p)?;
    let mut out = String::new();
    let mut pass = true;
    // every vertex pair admits a GS-geodesic
    let mut pairs_without = 0usize;
    for &u in k.vertices() {
        for &w in k.vertices() {
            let geodesics =
                paths::enumerate_geodesics(&k, u, w, 100_000).map_err(|e| e.to_string())?;
            let mut any_gs = false;
            for g in &geodesics {
                if gs::is_gs(&k, g).map_err(|e| e.to_string())? {
                    any_gs = true;
                    break;
                }
            }
            if !any_gs {
                pairs_without += 1;
                if pairs_without <= 5 {
                    out.push_str(&format!("missing-gs-pair: {} {}\n", k.name(u), k.name(w)));
                }
            }
        }
    }
    out.push_str(&format!("pairs-without-gs: {pairs_without}\n"));
    pass &= pairs_without == 0;
    // the GS acceptor recognizes exactly the brute-force GS set
    let machine = automata::gs_fsa(&k, k.vertices(), &[]).map_err(|e| e.to_string())?;
    let brute = gs::gs_system(&k, k.vertices()).map_err(|e| e.to_string())?;
    let words: Vec<Vec<automata::Letter>> =
        brute.members().iter().map(automata::word_of_path).collect();
    let trie = automata::Fsa::from_words(automata::directed_edge_alphabet(&k), &words);
    let equal = machine.language_equal(&trie).map_err(|e| e.to_string())?;
    out.push_str(&format!("gs-system-size: {}\n", brute.len()));
    out.push_str(&format!("fsa-language-matches: {equal}\n"));
    pass &= equal;
    out.push_str(&format!("verify-gs: {}\n", if pass { "pass" } else { "fail" }));
    emit(p, &out)?;
    Ok(if pass { 0 } else { 1 })
}

fn cmd_fellow_travel(p: &Parsed) -> Result<i32, String> {
    let (k, _) = load_complex(p)?;
    let [ks, ls] = two_names(&p.positional)?;
    let k_bound: u32 = ks.parse().map_err(|_| "K must be a number")?;
    let l_bound: u32 = ls.parse().map_err(|_| "L must be a number")?;
    let system_name = p.options.get("system").map(String::as_str).unwrap_or("gs");
    let system = match system_name {
        "gs" => gs::gs_system(&k, k.vertices()).map_err(|e| e.to_string())?,
        "geodesic" => gs::geodesic_system(&k, k.vertices()).map_err(|e| e.to_string())?,
        other => return Err(format!("unknown system `{other}`")),
    };
    let report = gs::check_fellow_travel(&k, &system, k_bound, l_bound);
    let mut out = String::new();
    out.push_str(&format!("system: {system_name} ({} paths)\n", system.len()));
    out.push_str(&format!("pairs-checked: {}\n", report.pairs_checked));
    out.push_str(&format!("max-path-distance: {}\n", report.max_distance));
    if let Some((a, b)) = &report.witness {
        out.push_str(&format!("witness: {} | {}\n", a.display(&k), b.display(&k)));
    }
    out.push_str(&format!(
        "fellow-travel-{k_bound}-{l_bound}: {}\n",
        if report.ok { "pass" } else { "fail" }
    ));
    emit(p, &out)?;
    Ok(if report.ok { 0 } else { 1 })
}

fn cmd_fsa(p: &Parsed) -> Result<i32, String> {
    let (k, _) = load_complex(p)?;
    let kind = p.options.get("kind").map(String::as_str).unwrap_or("geodesic");
    let machine = match kind {
        "geodesic" => automata::geodesic_fsa(&k, k.vertices()).map_err(|e| e.to_string())?,
        "gs" => automata::gs_fsa(&k, k.vertices(), &[]).map_err(|e| e.to_string())?,
        "validity" => automata::path_validity_fsa(&k),
        other => return Err(format!("unknown machine kind `{other}`")),
    };
    let format = p.options.get("format").map(String::as_str).unwrap_or("adjacency");
    let text = match format {
        "adjacency" => machine.to_adjacency_text(&k),
        "dot" => machine.to_dot(&k),
        other => return Err(format!("unknown format `{other}`")),
    };
    emit(p, &text)?;
    Ok(0)
}

fn cmd_export_svg(p: &Parsed) -> Result<i32, String> {
    let (k, _) = load_complex(p)?;
    if p.positional.is_empty() {
        return Err("export-svg needs the closed path as vertex names".into());
    }
    let alpha = parse_path(&k, &p.positional)?;
    let found = disks::minimal_spanning_disk(&k, &alpha, None).map_err(|e| e.to_string())?;
    let index = opt_usize(p, "index", 0)?;
    let disk = found
        .get(index)
        .ok_or_else(|| format!("disk index {index} out of range ({} found)", found.len()))?;
    let text = svg::export_disk_svg(disk, &k).map_err(|e| e.to_string())?;
    emit(p, &text)?;
    Ok(0)
}

fn cmd_generate(p: &Parsed) -> Result<i32, String> {
    let Some(spec) = p.positional.first() else {
        return Err("generate needs a fixture name".into());
    };
    let (k, meta) = fixtures::generate_fixture(spec).map_err(|e| e.to_string())?;
    emit(p, &io::serialize_complex(&k, &meta))?;
    Ok(0)
}

fn two_names(positional: &[String]) -> Result<[&String; 2], String> {
    if positional.len() != 2 {
        return Err(format!("expected two arguments, got {}", positional.len()));
    }
    Ok([&positional[0], &positional[1]])
}

fn opt_usize(p: &Parsed, name: &str, default: usize) -> Result<usize, String> {
    match p.options.get(name) {
        Some(v) => v.parse().map_err(|_| format!("--{name} must be a number")),
        None => Ok(default),
    }
}
