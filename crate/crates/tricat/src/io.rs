//! The `.cplx` text format for complexes.
//!
//! Grammar, one directive per line:
//!
//! ```text
//! # comment
//! version 1
//! declared-cat0 true
//! dim-unrestricted true
//! simplex a b c d
//! ```
//!
//! `simplex` lines list the vertex names of a maximal simplex (1 to 5 names,
//! more only under `dim-unrestricted true`). Names are matched
//! case-sensitively. Vertices are interned to dense ids in order of first
//! appearance; the name table is preserved for round-tripping.
//!
//! Canonical serialization sorts names within a simplex and simplex lines
//! lexicographically, so `serialize(parse(doc))` is a fixed point.

use crate::complex::{ComplexError, Simplex, SimplicialComplex, VertexId};
use std::collections::BTreeMap;
use std::fmt;

/// Header metadata carried alongside a parsed complex.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct DocumentMeta {
    /// Author assertion that the complex is CAT(0). Enables the
    /// CAT(0)-conditional assertions downstream; cross-checked against the
    /// curvature battery by consumers.
    pub declared_cat0: Option<bool>,
    /// Permits maximal simplices on more than five vertices.
    pub dim_unrestricted: bool,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ParseError {
    Syntax { line: usize, message: String },
    TooHighDimension { line: usize, vertices: usize },
    Complex(ComplexError),
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Syntax { line, message } => write!(f, "line {line}: {message}"),
            ParseError::TooHighDimension { line, vertices } => write!(
                f,
                "line {line}: simplex on {vertices} vertices; set `dim-unrestricted true` to allow"
            ),
            ParseError::Complex(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for ParseError {}

impl From<ComplexError> for ParseError {
    fn from(e: ComplexError) -> Self {
        ParseError::Complex(e)
    }
}

/// Maximum simplex vertex count without the `dim-unrestricted` override.
pub const MAX_CORE_SIMPLEX_VERTICES: usize = 5;

/// Parses a `.cplx` document.
pub fn parse_complex(text: &str) -> Result<(SimplicialComplex, DocumentMeta), ParseError> {
    let mut meta = DocumentMeta::default();
    let mut version_seen = false;
    let mut names: Vec<String> = Vec::new();
    let mut index: BTreeMap<String, VertexId> = BTreeMap::new();
    let mut pending: Vec<(usize, Vec<String>)> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let mut toks = line.split_whitespace();
        let Some(head) = toks.next() else { continue };
        match head {
            "version" => {
                let v = toks.next().ok_or_else(|| ParseError::Syntax {
                    line: lineno,
                    message: "expected a version number".into(),
                })?;
                if v != "1" {
                    return Err(ParseError::Syntax {
                        line: lineno,
                        message: format!("unsupported version `{v}`"),
                    });
                }
                version_seen = true;
            }
            "declared-cat0" => {
                meta.declared_cat0 = Some(parse_bool(lineno, toks.next())?);
            }
            "dim-unrestricted" => {
                meta.dim_unrestricted = parse_bool(lineno, toks.next())?;
            }
            "simplex" => {
                let vs: Vec<String> = toks.by_ref().map(str::to_string).collect();
                if vs.is_empty() {
                    return Err(ParseError::Syntax {
                        line: lineno,
                        message: "simplex line lists no vertices".into(),
                    });
                }
                pending.push((lineno, vs));
            }
            other => {
                return Err(ParseError::Syntax {
                    line: lineno,
                    message: format!("unknown directive `{other}`"),
                });
            }
        }
        if toks.next().is_some() && head != "simplex" {
            return Err(ParseError::Syntax {
                line: lineno,
                message: "trailing tokens".into(),
            });
        }
    }
    if !version_seen && pending.is_empty() {
        return Err(ParseError::Syntax {
            line: 1,
            message: "empty document".into(),
        });
    }

    let mut maximal = Vec::with_capacity(pending.len());
    for (lineno, vs) in pending {
        if vs.len() > MAX_CORE_SIMPLEX_VERTICES && !meta.dim_unrestricted {
            return Err(ParseError::TooHighDimension { line: lineno, vertices: vs.len() });
        }
        let mut ids = Vec::with_capacity(vs.len());
        for name in vs {
            let id = *index.entry(name.clone()).or_insert_with(|| {
                let id = VertexId(names.len() as u32);
                names.push(name);
                id
            });
            ids.push(id);
        }
        maximal.push(Simplex::new(ids).map_err(|e| match e {
            ComplexError::DuplicateVertexInSimplex(_) => ParseError::Syntax {
                line: lineno,
                message: "vertex repeated within a simplex".into(),
            },
            other => ParseError::Complex(other),
        })?);
    }
    let complex = SimplicialComplex::build(maximal, names)?;
    Ok((complex, meta))
}

fn parse_bool(line: usize, tok: Option<&str>) -> Result<bool, ParseError> {
    match tok {
        Some("true") => Ok(true),
        Some("false") => Ok(false),
        other => Err(ParseError::Syntax {
            line,
            message: format!("expected `true` or `false`, got `{}`", other.unwrap_or("")),
        }),
    }
}

/// Canonical serialization: header, then simplex lines sorted by name.
pub fn serialize_complex(k: &SimplicialComplex, meta: &DocumentMeta) -> String {
    let mut out = String::from("version 1\n");
    if let Some(flag) = meta.declared_cat0 {
        out.push_str(&format!("declared-cat0 {flag}\n"));
    }
    if meta.dim_unrestricted {
        out.push_str("dim-unrestricted true\n");
    }
    let mut lines: Vec<String> = k
        .maximal_simplices()
        .iter()
        .map(|s| {
            let mut names: Vec<&str> = s.vertices().iter().map(|v| k.name(*v)).collect();
            names.sort_unstable();
            format!("simplex {}", names.join(" "))
        })
        .collect();
    lines.sort_unstable();
    for line in lines {
        out.push_str(&line);
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_single_tetrahedron() {
        let (k, meta) = parse_complex("version 1\nsimplex a b c d\n").unwrap();
        assert_eq!(k.vertex_count(), 4);
        assert_eq!(k.dim(), 3);
        assert_eq!(meta.declared_cat0, None);
    }

    #[test]
    fn parse_disconnected_fails() {
        let err = parse_complex("version 1\nsimplex a b\nsimplex c d\n").unwrap_err();
        assert_eq!(err, ParseError::Complex(ComplexError::DisconnectedComplex));
    }

    #[test]
    fn parse_reports_line_numbers() {
        let err = parse_complex("version 1\nwhat now\n").unwrap_err();
        match err {
            ParseError::Syntax { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn high_dimension_needs_override() {
        let doc = "version 1\nsimplex a b c d e f\n";
        let err = parse_complex(doc).unwrap_err();
        assert!(matches!(err, ParseError::TooHighDimension { line: 2, vertices: 6 }));
        let doc = "version 1\ndim-unrestricted true\nsimplex a b c d e f\n";
        let (k, meta) = parse_complex(doc).unwrap();
        assert_eq!(k.dim(), 5);
        assert!(meta.dim_unrestricted);
    }

    #[test]
    fn comments_and_flags() {
        let doc = "# a header comment\nversion 1\ndeclared-cat0 true # trailing\nsimplex a b\n";
        let (_, meta) = parse_complex(doc).unwrap();
        assert_eq!(meta.declared_cat0, Some(true));
    }

    #[test]
    fn round_trip_is_canonical_fixed_point() {
        let doc = "version 1\nsimplex b a\nsimplex c b\n";
        let (k, meta) = parse_complex(doc).unwrap();
        let canon = serialize_complex(&k, &meta);
        assert_eq!(canon, "version 1\nsimplex a b\nsimplex b c\n");
        let (k2, meta2) = parse_complex(&canon).unwrap();
        assert_eq!(serialize_complex(&k2, &meta2), canon);
    }
}
