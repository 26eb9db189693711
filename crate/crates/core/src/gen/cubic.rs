use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// A simple 3-regular graph. Edges are stored as `(u, v)` with `u < v`,
/// sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubicGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl CubicGraph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut norm = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::NotCubic(format!(
                    "edge ({u}, {v}) references a vertex outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::NotCubic(format!("self-loop at vertex {u}")));
            }
            norm.push((u.min(v), u.max(v)));
        }
        norm.sort_unstable();
        if let Some(w) = norm.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::NotCubic(format!(
                "duplicate edge ({}, {})",
                w[0].0, w[0].1
            )));
        }
        let mut degree = vec![0usize; n];
        for &(u, v) in &norm {
            degree[u] += 1;
            degree[v] += 1;
        }
        if let Some((v, d)) = degree.iter().enumerate().find(|(_, &d)| d != 3) {
            return Err(Error::NotCubic(format!("vertex {v} has degree {d}")));
        }
        Ok(CubicGraph { n, edges: norm })
    }

    /// Complete graph on four vertices.
    pub fn k4() -> Self {
        CubicGraph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
            .expect("K4 is cubic")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Incident edge indices of `v`, ordered by the neighbour's id.
    pub fn incident(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<(usize, usize)> = self
            .edges
            .iter()
            .enumerate()
            .filter_map(|(e, &(a, b))| {
                if a == v {
                    Some((b, e))
                } else if b == v {
                    Some((a, e))
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out.into_iter().map(|(_, e)| e).collect()
    }

    pub fn is_vertex_cover(&self, cover: &[usize]) -> bool {
        self.uncovered_edge(cover).is_none()
    }

    pub(crate) fn uncovered_edge(&self, cover: &[usize]) -> Option<(usize, usize)> {
        let mut inside = vec![false; self.n];
        for &v in cover {
            if v < self.n {
                inside[v] = true;
            }
        }
        self.edges
            .iter()
            .copied()
            .find(|&(u, v)| !inside[u] && !inside[v])
    }
}

/// Random cubic graph on `n` vertices from the configuration (pairing)
/// model, resampling until the pairing has no loops or parallel edges.
pub fn random_cubic(n: usize, seed: u64) -> Result<CubicGraph> {
    if n < 4 || n % 2 == 1 {
        return Err(Error::InvalidParameter(format!(
            "a cubic graph needs an even vertex count of at least 4, got {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<usize> = (0..3 * n).map(|p| p / 3).collect();
    for _ in 0..10_000 {
        points.shuffle(&mut rng);
        let edges: Vec<(usize, usize)> = points.chunks(2).map(|c| (c[0], c[1])).collect();
        if let Ok(g) = CubicGraph::new(n, &edges) {
            return Ok(g);
        }
    }
    Err(Error::InvalidParameter(format!(
        "no simple pairing found for n = {n}"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert_eq!(CubicGraph::k4().edge_count(), 6);
        assert!(matches!(
            CubicGraph::new(3, &[(0, 1), (1, 2)]),
            Err(Error::NotCubic(_))
        ));
        let dup = [(0, 1), (1, 0), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        assert!(CubicGraph::new(4, &dup).is_err());
        assert!(CubicGraph::new(4, &[(0, 4)]).is_err());
        assert!(CubicGraph::new(4, &[(2, 2)]).is_err());
    }

    #[test]
    fn incident_order() {
        let g = CubicGraph::k4();
        // Edges: 0:(0,1) 1:(0,2) 2:(0,3) 3:(1,2) 4:(1,3) 5:(2,3)
        assert_eq!(g.incident(2), [1, 3, 5]);
        assert!(g.is_vertex_cover(&[0, 1, 2]));
        assert!(!g.is_vertex_cover(&[0, 1]));
    }

    #[test]
    fn random_graphs_are_cubic() {
        for seed in 0..10 {
            let g = random_cubic(20, seed).unwrap();
            assert_eq!(g.vertex_count(), 20);
            assert_eq!(g.edge_count(), 30);
        }
        assert_eq!(random_cubic(12, 3).unwrap(), random_cubic(12, 3).unwrap());
        assert!(random_cubic(5, 0).is_err());
    }
}
