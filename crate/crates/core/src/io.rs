//! Text and JSON formats used by the command-line tool.
//!
//! * Instances: one fingerprint per line over `0`, `1`, `N`. Blank lines and
//!   lines starting with `#` are ignored.
//! * Cubic graphs: a header line `n m` followed by `m` lines `u v` with
//!   0-based vertex ids; `#` comments and blank lines are ignored.
//! * Partitions: a JSON object with `clusters` (sorted `members` and a 0/1
//!   `witness` string) and an `evaluation` block.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fingerprint::{Fingerprint, Instance, ResolvedVector, Symbol};
use crate::gen::{CubicGraph, GadgetCertificate};
use crate::objectives::{Evaluation, Objective};
use crate::partition::{Cluster, Partition};

fn data_lines(text: &str) -> impl Iterator<Item = (usize, usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let trimmed = raw.trim_start();
        let offset = raw.len() - trimmed.len();
        let line = trimmed.trim_end();
        if line.is_empty() || line.starts_with('#') {
            None
        } else {
            Some((i + 1, offset, line))
        }
    })
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    let mut fps = Vec::new();
    let mut width = None;
    for (line, offset, data) in data_lines(text) {
        let mut symbols = Vec::with_capacity(data.len());
        for (col, c) in data.chars().enumerate() {
            let sym = Symbol::from_char(c).ok_or_else(|| Error::Parse {
                line,
                column: offset + col + 1,
                message: format!("illegal character {c:?}, expected 0, 1 or N"),
            })?;
            symbols.push(sym);
        }
        let expected = *width.get_or_insert(symbols.len());
        if symbols.len() != expected {
            return Err(Error::Parse {
                line,
                column: offset + 1,
                message: format!("fingerprint has length {}, expected {expected}", symbols.len()),
            });
        }
        fps.push(Fingerprint::from_symbols(&symbols));
    }
    Instance::new(fps)
}

pub fn format_instance(inst: &Instance) -> String {
    let mut out = String::new();
    if let Some(name) = inst.name() {
        out.push_str(&format!("# {name}\n"));
    }
    for f in inst.fingerprints() {
        out.push_str(&f.to_string());
        out.push('\n');
    }
    out
}

fn parse_pair(line: usize, data: &str) -> Result<(usize, usize)> {
    let mut parts = data.split_whitespace();
    let mut next = |what: &str| -> Result<usize> {
        let tok = parts.next().ok_or_else(|| Error::Parse {
            line,
            column: 1,
            message: format!("missing {what}"),
        })?;
        tok.parse().map_err(|_| Error::Parse {
            line,
            column: 1,
            message: format!("{what} {tok:?} is not a non-negative integer"),
        })
    };
    let pair = (next("first number")?, next("second number")?);
    if parts.next().is_some() {
        return Err(Error::Parse {
            line,
            column: 1,
            message: "expected exactly two numbers".into(),
        });
    }
    Ok(pair)
}

pub fn parse_cubic_graph(text: &str) -> Result<CubicGraph> {
    let mut lines = data_lines(text);
    let (line, _, header) = lines.next().ok_or_else(|| Error::Parse {
        line: 1,
        column: 1,
        message: "missing header line \"n m\"".into(),
    })?;
    let (n, m) = parse_pair(line, header)?;
    let mut edges = Vec::with_capacity(m);
    let mut last_line = line;
    for (line, _, data) in lines {
        if edges.len() == m {
            return Err(Error::Parse {
                line,
                column: 1,
                message: format!("more than the declared {m} edges"),
            });
        }
        edges.push(parse_pair(line, data)?);
        last_line = line;
    }
    if edges.len() != m {
        return Err(Error::Parse {
            line: last_line,
            column: 1,
            message: format!("declared {m} edges, found {}", edges.len()),
        });
    }
    CubicGraph::new(n, &edges)
}

pub fn format_cubic_graph(g: &CubicGraph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[derive(Serialize)]
struct ClusterOut<'a> {
    members: &'a [usize],
    witness: String,
}

#[derive(Serialize)]
struct PartitionOut<'a> {
    clusters: Vec<ClusterOut<'a>>,
    evaluation: &'a Evaluation,
}

#[derive(Deserialize)]
struct ClusterIn {
    members: Vec<usize>,
    witness: String,
}

#[derive(Deserialize)]
struct PartitionIn {
    clusters: Vec<ClusterIn>,
    #[serde(default)]
    evaluation: Option<Evaluation>,
}

/// Canonical JSON for a partition and its evaluation, newline terminated.
pub fn emit_partition(part: &Partition, eval: &Evaluation) -> String {
    let doc = PartitionOut {
        clusters: part
            .clusters()
            .iter()
            .map(|c| ClusterOut {
                members: &c.members,
                witness: c.witness.to_string(),
            })
            .collect(),
        evaluation: eval,
    };
    let mut s = serde_json::to_string(&doc).expect("partition documents always serialize");
    s.push('\n');
    s
}

/// Reads a partition document; the `evaluation` block is optional.
pub fn parse_partition(text: &str) -> Result<(Partition, Option<Evaluation>)> {
    let doc: PartitionIn = serde_json::from_str(text)?;
    let clusters = doc
        .clusters
        .into_iter()
        .map(|c| {
            Ok(Cluster {
                members: c.members,
                witness: c.witness.parse::<ResolvedVector>()?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((Partition::new(clusters), doc.evaluation))
}

/// JSON description of a gadget instance: vertices with vectors, and the
/// gadget edge behind each fingerprint.
pub fn emit_certificate(cert: &GadgetCertificate) -> String {
    let vertices: Vec<serde_json::Value> = cert
        .gadget_vertices
        .iter()
        .enumerate()
        .map(|(id, (v, r))| serde_json::json!({"id": id, "label": v.label(), "vector": r.to_string()}))
        .collect();
    let docking: Vec<serde_json::Value> = cert
        .docking
        .iter()
        .map(|(&(v, e), s)| serde_json::json!({"vertex": v, "edge": e, "slot": s.label()}))
        .collect();
    let doc = serde_json::json!({
        "n": cert.graph.vertex_count(),
        "m": cert.graph.edge_count(),
        "gadget_vertices": vertices,
        "gadget_edges": cert.gadget_edges,
        "docking": docking,
    });
    let mut s = serde_json::to_string(&doc).expect("certificate serializes");
    s.push('\n');
    s
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InstanceMeta {
    pub name: Option<String>,
    pub n: usize,
    pub l: usize,
    pub p: usize,
}

impl From<&Instance> for InstanceMeta {
    fn from(inst: &Instance) -> Self {
        InstanceMeta {
            name: inst.name().map(str::to_string),
            n: inst.size(),
            l: inst.length(),
            p: inst.p(),
        }
    }
}

/// One line of output from `greedy`, `exact` and `bench`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub instance: InstanceMeta,
    pub algorithm: String,
    pub objective: Objective,
    pub value: u64,
    pub optimum: Option<u64>,
    /// Set only together with `optimum`.
    pub ratio: Option<f64>,
    pub wall_time_ms: f64,
    pub config: BTreeMap<String, String>,
}

impl RunReport {
    pub fn to_json_line(&self) -> String {
        let mut s = serde_json::to_string(self).expect("reports serialize");
        s.push('\n');
        s
    }
}

/// Writes through a temporary file in the same directory and renames it into
/// place, so a failed run never leaves a partial file behind.
pub fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents.as_bytes())?;
    tmp.flush()?;
    tmp.persist(path).map_err(|e| Error::Io(e.error))?;
    Ok(())
}
