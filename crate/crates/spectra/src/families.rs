//! Turning a command-line graph argument into a graph.
//!
//! Accepted forms: `johnson:N:D[:J]`, `hamming:D:N[:J]`, `kneser:N:D`,
//! `cycle:N`, `complete:N`, a bundle name such as `heawood` (or
//! `heawood.g6` when no such file exists), a path to a graph6 or JSON
//! file, or `-` for standard input.

use std::io::Read;
use std::path::Path;

use serde::{Deserialize, Serialize};
use spectra_core::hamming::{hamming_graph, hypercube_signing};
use spectra_core::johnson::{johnson_graph, kneser_graph, signed_adjacency_a};
use spectra_core::{ExactMatrix, Graph};

use crate::bundle::Bundle;
use crate::formats::{GraphJson, MatrixJson};
use crate::graph6::load_graph6_lines;
use crate::Error;

/// A graph document: the adjacency export plus an optional name and an
/// optional matrix with the graph's pattern.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GraphDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(flatten)]
    pub graph: GraphJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<MatrixJson>,
}

#[derive(Clone, Debug)]
pub struct Resolved {
    pub id: String,
    pub graph: Graph,
    /// Candidate matrices that come with the graph.
    pub matrices: Vec<(String, ExactMatrix)>,
}

fn num(field: &str, spec: &str) -> Result<usize, Error> {
    field.parse().map_err(|_| Error::Usage(format!("{:?} in {:?} is not a number", field, spec)))
}

/// `Some` when `spec` names a parametrized family.
pub fn family(spec: &str) -> Result<Option<Resolved>, Error> {
    let parts: Vec<&str> = spec.split(':').collect();
    let args: Vec<usize> = match parts.len() {
        1 => return Ok(None),
        _ => parts[1..].iter().map(|p| num(p, spec)).collect::<Result<_, _>>()?,
    };
    let arity = |lo: usize, hi: usize| {
        if args.len() < lo || args.len() > hi {
            Err(Error::Usage(format!("{:?} takes {} to {} parameters", parts[0], lo, hi)))
        } else {
            Ok(())
        }
    };
    let mut matrices = Vec::new();
    let graph = match parts[0] {
        "johnson" => {
            arity(2, 3)?;
            let j = args.get(2).copied().unwrap_or(1);
            if j == 1 {
                matrices.push((format!("A_{{{},{}}}", args[0], args[1]), signed_adjacency_a(args[0], args[1])?));
            }
            johnson_graph(args[0], args[1], j)?
        }
        "hamming" => {
            arity(2, 3)?;
            let j = args.get(2).copied().unwrap_or(1);
            if j == 1 && args[1] == 2 {
                matrices.push((format!("M_{}", args[0]), hypercube_signing(args[0])?));
            }
            hamming_graph(args[0], args[1], j)?
        }
        "kneser" => {
            arity(2, 2)?;
            kneser_graph(args[0], args[1])?
        }
        "cycle" => {
            arity(1, 1)?;
            let n = args[0];
            if n < 3 {
                return Err(Error::Usage("a cycle needs at least 3 vertices".into()));
            }
            Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))?
        }
        "complete" => {
            arity(1, 1)?;
            Graph::from_fn(args[0], |_, _| true)
        }
        other => return Err(Error::Usage(format!("unknown family {:?}", other))),
    };
    Ok(Some(Resolved { id: spec.to_string(), graph, matrices }))
}

/// Graph6 (first graph) or a JSON graph document.
pub fn parse_graph_text(id: &str, bytes: &[u8]) -> Result<Resolved, Error> {
    let trimmed = bytes.iter().position(|b| !b.is_ascii_whitespace()).map_or(&bytes[..0], |k| &bytes[k..]);
    if trimmed.first() == Some(&b'{') {
        let doc: GraphDoc = serde_json::from_slice(trimmed).map_err(|e| Error::Format(format!("graph document: {}", e)))?;
        let graph = doc.graph.to_graph()?;
        let mut matrices = Vec::new();
        if let Some(m) = doc.matrix {
            matrices.push(("supplied matrix".to_string(), m.to_matrix()?));
        }
        return Ok(Resolved { id: doc.name.unwrap_or_else(|| id.to_string()), graph, matrices });
    }
    let mut graphs = load_graph6_lines(trimmed)?;
    if graphs.is_empty() {
        return Err(Error::Format("no graph in input".into()));
    }
    Ok(Resolved { id: id.to_string(), graph: graphs.swap_remove(0), matrices: Vec::new() })
}

pub fn read_stdin() -> Result<Vec<u8>, Error> {
    let mut buf = Vec::new();
    std::io::stdin().read_to_end(&mut buf).map_err(|e| Error::Io(format!("stdin: {}", e)))?;
    Ok(buf)
}

/// Bundle graphs bring their bundled signing, if any.
pub fn from_bundle(bundle: &Bundle, name: &str) -> Result<Resolved, Error> {
    let graph = bundle.graph(name)?;
    let mut matrices = Vec::new();
    let signing = format!("{}.signing", name);
    if bundle.contains(&signing) {
        matrices.push((format!("bundled {}", signing), bundle.matrix(&signing)?));
    }
    Ok(Resolved { id: name.to_string(), graph, matrices })
}

pub fn resolve(spec: &str, bundle: &Bundle) -> Result<Resolved, Error> {
    if spec == "-" {
        return parse_graph_text("stdin", &read_stdin()?);
    }
    if let Some(r) = family(spec)? {
        return Ok(r);
    }
    let path = Path::new(spec);
    if path.is_file() {
        let bytes = std::fs::read(path).map_err(|e| Error::Io(format!("{}: {}", spec, e)))?;
        let id = path.file_stem().map_or(spec.to_string(), |s| s.to_string_lossy().into_owned());
        return parse_graph_text(&id, &bytes);
    }
    let name = spec.strip_suffix(".g6").unwrap_or(spec);
    if bundle.contains(name) {
        return from_bundle(bundle, name);
    }
    Err(Error::Usage(format!("{:?} is not a family, a file or a bundle entry", spec)))
}
