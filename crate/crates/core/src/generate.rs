//! Seeded instances with a planted twin cover.

use rand::{Rng, SeedableRng};
use rand::seq::SliceRandom;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::twin::TwinCover;

/// `count` twin-cliques of `size` vertices, each adjacent to exactly the
/// cover vertices listed in `neighborhood` (indices `0..t`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeCount {
    #[serde(rename = "S")]
    pub neighborhood: Vec<usize>,
    #[serde(rename = "s")]
    pub size: usize,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GeneratorSpec {
    pub t: usize,
    pub clique_type_counts: Vec<TypeCount>,
    #[serde(default)]
    pub seed: u64,
    /// Chance of each edge inside the cover.
    #[serde(default)]
    pub core_edge_probability: f64,
    /// Randomly relabel vertices after construction.
    #[serde(default)]
    pub shuffle: bool,
}

/// Builds the graph: cover vertices `0..t` first, then the cliques in the
/// order listed. Cover components are chained together with extra cover
/// edges when needed, which keeps the cover a twin cover.
pub fn generate_instance(spec: &GeneratorSpec) -> Result<(Graph, TwinCover)> {
    if !(0.0..=1.0).contains(&spec.core_edge_probability) {
        return Err(Error::Input("core_edge_probability must lie in [0, 1]".into()));
    }
    for tc in &spec.clique_type_counts {
        if tc.size == 0 {
            return Err(Error::Input("twin-clique size must be at least 1".into()));
        }
        let mut s = tc.neighborhood.clone();
        s.sort_unstable();
        s.dedup();
        if s.len() != tc.neighborhood.len() || s.last().is_some_and(|&x| x >= spec.t) {
            return Err(Error::Input(format!("neighborhood {:?} is not a subset of 0..{}", tc.neighborhood, spec.t)));
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let t = spec.t;
    let mut edges = Vec::new();
    for i in 0..t {
        for j in i + 1..t {
            if rng.random_bool(spec.core_edge_probability) {
                edges.push((i, j));
            }
        }
    }
    let mut n = t;
    for tc in &spec.clique_type_counts {
        for _ in 0..tc.count {
            let members: Vec<usize> = (n..n + tc.size).collect();
            for (a, &u) in members.iter().enumerate() {
                for &v in &members[a + 1..] {
                    edges.push((u, v));
                }
                for &x in &tc.neighborhood {
                    edges.push((x, u));
                }
            }
            n += tc.size;
        }
    }
    if n == 0 {
        return Err(Error::Input("the generated graph would be empty".into()));
    }

    let g = Graph::from_edges(n, &edges)?;
    let components = g.components();
    if components.iter().any(|c| c[0] >= t) && components.len() > 1 {
        return Err(Error::Input(
            "a twin-clique with empty neighborhood cannot be connected to the rest of the graph".into(),
        ));
    }
    // Every component now contains a cover vertex; its smallest vertex is one.
    for pair in components.windows(2) {
        edges.push((pair[0][0], pair[1][0]));
    }

    let mut labels: Vec<usize> = (0..n).collect();
    if spec.shuffle {
        labels.shuffle(&mut rng);
    }
    let edges: Vec<_> = edges.into_iter().map(|(u, v)| (labels[u], labels[v])).collect();
    let g = Graph::from_edges(n, &edges)?;
    let cover = TwinCover::new(&g, labels[..t].to_vec())?;
    Ok((g, cover))
}
