//! Fingerprint instances built from cubic graphs, in which the minimum
//! number of clusters equals the minimum vertex cover of a gadget graph.
//!
//! Every graph vertex `i` owns a 7-position chunk and a five-vertex path
//! gadget `c4 - c2 - c1 - c3 - c5`; `c1`, `c4` and `c5` are docking vertices.
//! Every graph edge `(i, j)` gets four more gadget vertices forming two paths
//! `x - e1 - e2 - y` and `x - e3 - e4 - y` between a docking vertex `x` of
//! `i` and a docking vertex `y` of `j`. Each gadget vertex carries a resolved
//! vector; adjacent gadget vertices differ in exactly two positions and all
//! other pairs in at least three. Each gadget edge becomes one fingerprint,
//! equal to its endpoints where they agree and `N` where they differ.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::fingerprint::{Fingerprint, Instance, ResolvedVector, Symbol};
use crate::partition::{Cluster, Partition};

use super::cubic::CubicGraph;

const CHUNK: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Slot {
    C1,
    C2,
    C3,
    C4,
    C5,
}

impl Slot {
    const ALL: [Slot; 5] = [Slot::C1, Slot::C2, Slot::C3, Slot::C4, Slot::C5];
    const DOCKING: [Slot; 3] = [Slot::C1, Slot::C4, Slot::C5];

    fn index(self) -> usize {
        self as usize
    }

    /// Ones of this slot's chunk.
    fn chunk(self) -> &'static [usize] {
        match self {
            Slot::C1 => &[0, 1, 2],       // 1110000
            Slot::C2 => &[0, 1, 2, 3, 4], // 1111100
            Slot::C3 => &[0, 1, 2, 5, 6], // 1110011
            Slot::C4 => &[0, 3, 4],       // 1001100
            Slot::C5 => &[0, 5, 6],       // 1000011
        }
    }

    /// The two non-leading ones of a docking chunk.
    fn docking_pair(self) -> (usize, usize) {
        let c = self.chunk();
        debug_assert_eq!(c.len(), 3, "{self:?} is not a docking slot");
        (c[1], c[2])
    }

    pub fn label(self) -> &'static str {
        match self {
            Slot::C1 => "c1",
            Slot::C2 => "c2",
            Slot::C3 => "c3",
            Slot::C4 => "c4",
            Slot::C5 => "c5",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GadgetVertex {
    /// Vertex of the gadget of graph vertex `vertex`.
    Vertex { vertex: usize, slot: Slot },
    /// Interior vertex `e1..e4` (`part` in 1..=4) of the gadget of graph
    /// edge `edge`.
    Edge { edge: usize, part: u8 },
}

impl GadgetVertex {
    pub fn label(&self) -> String {
        match self {
            GadgetVertex::Vertex { vertex, slot } => format!("v{vertex}.{}", slot.label()),
            GadgetVertex::Edge { edge, part } => format!("e{edge}.{part}"),
        }
    }
}

/// Links a cubic graph to the instance generated from it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetCertificate {
    pub graph: CubicGraph,
    /// Gadget vertices with their resolved vectors. Ids are positions in
    /// this list: `5 i + slot` for vertex gadgets, then `5 n + 4 e + part - 1`
    /// for edge gadgets.
    pub gadget_vertices: Vec<(GadgetVertex, ResolvedVector)>,
    /// Endpoints of the gadget edge behind each fingerprint, by index.
    pub gadget_edges: Vec<(usize, usize)>,
    /// Docking slot used by each `(graph vertex, graph edge)` incidence.
    pub docking: BTreeMap<(usize, usize), Slot>,
}

impl GadgetCertificate {
    /// Gadget vertex cover size obtained from a graph cover of size `k`:
    /// `3k + 2(n - k) + 2m`.
    pub fn formula(&self, k: usize) -> usize {
        let n = self.graph.vertex_count();
        let m = self.graph.edge_count();
        3 * k + 2 * (n - k) + 2 * m
    }

    pub fn vertex_id(&self, vertex: usize, slot: Slot) -> usize {
        5 * vertex + slot.index()
    }

    pub fn edge_vertex_id(&self, edge: usize, part: u8) -> usize {
        debug_assert!((1..=4).contains(&part));
        5 * self.graph.vertex_count() + 4 * edge + usize::from(part - 1)
    }

    pub fn vector(&self, id: usize) -> &ResolvedVector {
        &self.gadget_vertices[id].1
    }
}

fn vector(len: usize, ones: impl IntoIterator<Item = usize>) -> ResolvedVector {
    let mut r = ResolvedVector::zeros(len);
    for pos in ones {
        r.set(pos, true);
    }
    r
}

fn edge_fingerprint(a: &ResolvedVector, b: &ResolvedVector) -> Fingerprint {
    let symbols: Vec<Symbol> = (0..a.len())
        .map(|i| match (a.get(i), b.get(i)) {
            (x, y) if x != y => Symbol::Missing,
            (true, _) => Symbol::One,
            (false, _) => Symbol::Zero,
        })
        .collect();
    Fingerprint::from_symbols(&symbols)
}

/// Builds the fingerprint instance of `graph` with its certificate.
///
/// Fingerprints are emitted vertex gadgets first (`c4c2, c2c1, c1c3, c3c5`
/// per vertex), then edge gadgets (`x e1, e1 e2, e2 y, x e3, e3 e4, e4 y` per
/// edge), `4n + 6m` in total, each with exactly two `N`s.
pub fn gen_gadget(graph: &CubicGraph) -> (Instance, GadgetCertificate) {
    let n = graph.vertex_count();
    let len = CHUNK * n;

    let mut docking = BTreeMap::new();
    for v in 0..n {
        for (e, slot) in graph.incident(v).into_iter().zip(Slot::DOCKING) {
            docking.insert((v, e), slot);
        }
    }

    let mut gadget_vertices = Vec::with_capacity(5 * n + 4 * graph.edge_count());
    for v in 0..n {
        for slot in Slot::ALL {
            let r = vector(len, slot.chunk().iter().map(|p| CHUNK * v + p));
            gadget_vertices.push((GadgetVertex::Vertex { vertex: v, slot }, r));
        }
    }
    for (e, &(i, j)) in graph.edges().iter().enumerate() {
        let (a, b) = docking[&(i, e)].docking_pair();
        let (a2, b2) = docking[&(j, e)].docking_pair();
        let (oi, oj) = (CHUNK * i, CHUNK * j);
        let parts = [
            vec![oi, oi + a, oj + a2],
            vec![oi + a, oj, oj + a2],
            vec![oi, oi + b, oj + b2],
            vec![oi + b, oj, oj + b2],
        ];
        for (k, ones) in parts.into_iter().enumerate() {
            let part = k as u8 + 1;
            gadget_vertices.push((GadgetVertex::Edge { edge: e, part }, vector(len, ones)));
        }
    }

    let mut cert = GadgetCertificate {
        graph: graph.clone(),
        gadget_vertices,
        gadget_edges: Vec::new(),
        docking,
    };

    let mut gadget_edges = Vec::with_capacity(4 * n + 6 * graph.edge_count());
    for v in 0..n {
        let id = |s| cert.vertex_id(v, s);
        gadget_edges.extend([
            (id(Slot::C4), id(Slot::C2)),
            (id(Slot::C2), id(Slot::C1)),
            (id(Slot::C1), id(Slot::C3)),
            (id(Slot::C3), id(Slot::C5)),
        ]);
    }
    for (e, &(i, j)) in graph.edges().iter().enumerate() {
        let x = cert.vertex_id(i, cert.docking[&(i, e)]);
        let y = cert.vertex_id(j, cert.docking[&(j, e)]);
        let p = |k| cert.edge_vertex_id(e, k);
        gadget_edges.extend([
            (x, p(1)),
            (p(1), p(2)),
            (p(2), y),
            (x, p(3)),
            (p(3), p(4)),
            (p(4), y),
        ]);
    }

    let fingerprints = gadget_edges
        .iter()
        .map(|&(a, b)| edge_fingerprint(cert.vector(a), cert.vector(b)))
        .collect();
    cert.gadget_edges = gadget_edges;
    let inst = Instance::new(fingerprints)
        .expect("all gadget vectors share one length")
        .with_name(format!("gadget-n{n}-m{}", graph.edge_count()));
    (inst, cert)
}

/// Partition induced by a vertex cover of the graph.
///
/// Covered vertices take the docking cover `{c1, c4, c5}` of their gadget,
/// the others `{c2, c3}`; each edge gadget adds `{e2, e4}` when its lower
/// endpoint is covered and `{e1, e3}` otherwise. That gadget cover has
/// `formula(k)` vertices. Every fingerprint joins the cluster of its first
/// covered endpoint, and clusters nothing joined are dropped.
pub fn cover_to_partition(cert: &GadgetCertificate, cover: &[usize]) -> Result<Partition> {
    let graph = &cert.graph;
    if let Some(&v) = cover.iter().find(|&&v| v >= graph.vertex_count()) {
        return Err(Error::InvalidParameter(format!(
            "cover vertex {v} outside 0..{}",
            graph.vertex_count()
        )));
    }
    if let Some((u, v)) = graph.uncovered_edge(cover) {
        return Err(Error::NotACover { u, v });
    }
    let mut in_cover = vec![false; graph.vertex_count()];
    for &v in cover {
        in_cover[v] = true;
    }

    let mut gadget_cover = vec![false; cert.gadget_vertices.len()];
    for v in 0..graph.vertex_count() {
        let slots: &[Slot] = if in_cover[v] {
            &Slot::DOCKING
        } else {
            &[Slot::C2, Slot::C3]
        };
        for &s in slots {
            gadget_cover[cert.vertex_id(v, s)] = true;
        }
    }
    for (e, &(i, _)) in graph.edges().iter().enumerate() {
        let parts = if in_cover[i] { [2, 4] } else { [1, 3] };
        for part in parts {
            gadget_cover[cert.edge_vertex_id(e, part)] = true;
        }
    }

    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (f, &(a, b)) in cert.gadget_edges.iter().enumerate() {
        let owner = if gadget_cover[a] { a } else { b };
        debug_assert!(gadget_cover[owner], "gadget edge {f} left uncovered");
        groups.entry(owner).or_default().push(f);
    }
    let clusters = groups
        .into_iter()
        .map(|(id, members)| Cluster {
            members,
            witness: cert.vector(id).clone(),
        })
        .collect();
    Ok(Partition::new(clusters))
}
