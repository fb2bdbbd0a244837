//! Kernelization by bounding the number of twin-cliques of each type.
//!
//! For a valid instance `(G, k, X)` with `t = |X|`, at most `(t+1)·C(k, s)`
//! twin-cliques of each type `(S, s)` are ever needed: beyond that, a
//! clique can be deleted without changing whether `svcfc(G) <= k`. A twin-clique
//! larger than `k` makes the instance a no-instance outright, since every
//! strong CFVC coloring is proper.

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexMap};
use crate::twin::{approx_twin_cover, decompose_twin_cliques, exact_twin_cover, CliqueType, TwinCover};

/// `(G, k, X)`, checked to be connected with `X` a twin cover and `k >= 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnotatedInstance {
    graph: Graph,
    k: usize,
    cover: TwinCover,
}

impl AnnotatedInstance {
    pub fn new(graph: Graph, k: usize, cover: Vec<usize>) -> Result<Self> {
        if k == 0 {
            return Err(Error::Input("the color budget k must be at least 1".into()));
        }
        if graph.n() == 0 {
            return Err(Error::Validity("the graph has no vertices".into()));
        }
        if !graph.is_connected() {
            return Err(Error::Validity("the graph is disconnected".into()));
        }
        let cover = TwinCover::new(&graph, cover)?;
        Ok(AnnotatedInstance { graph, k, cover })
    }

    /// The fixed no-instance `(K_2, 1, {0, 1})`.
    pub fn fixed_no_instance() -> Self {
        AnnotatedInstance::new(Graph::complete(2), 1, vec![0, 1]).expect("K_2 is a valid instance")
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn cover(&self) -> &TwinCover {
        &self.cover
    }

    /// The parameter `k + |X|`.
    pub fn kappa(&self) -> usize {
        self.k + self.cover.len()
    }
}

/// One twin-clique removed by the reduction rule, in the input's labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Deletion {
    pub clique_type: CliqueType,
    pub vertices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelReport {
    pub n_before: usize,
    pub reduced: AnnotatedInstance,
    /// Deletions in the order they were applied.
    pub deletions: Vec<Deletion>,
    /// `max{2, t + (t+1) k 2^(t+k-1)}` for the input's `t` and `k`.
    pub bound: BigUint,
    pub realized: usize,
    pub no_instance_shortcut: bool,
    /// Input labels to reduced labels; `None` when the shortcut fired.
    pub map: Option<VertexMap>,
}

/// `max{2, t + (t+1) k 2^(t+k-1)}`, exactly.
pub fn kernel_bound(t: usize, k: usize) -> BigUint {
    assert!(k >= 1, "kernel bound needs k >= 1");
    let t_big = BigUint::from(t);
    let value = &t_big + (&t_big + 1u32) * BigUint::from(k) * (BigUint::one() << (t + k - 1));
    value.max(BigUint::from(2u32))
}

pub fn binomial(n: usize, r: usize) -> BigUint {
    if r > n {
        return BigUint::ZERO;
    }
    let r = r.min(n - r);
    // Each prefix product is itself a binomial coefficient, so the division is exact.
    (0..r).fold(BigUint::one(), |acc, i| acc * BigUint::from(n - i) / BigUint::from(i + 1))
}

/// How many twin-cliques of size `s` the rule keeps per neighborhood: `(t+1)·C(k, s)`.
pub fn type_budget(t: usize, k: usize, s: usize) -> BigUint {
    BigUint::from(t + 1) * binomial(k, s)
}

/// Applies the reduction rule exhaustively to a valid annotated instance.
///
/// Within each type the cliques with the smallest minimum vertex are kept;
/// the rest are deleted, largest minimum vertex first.
pub fn kernelize_annotated(inst: &AnnotatedInstance) -> Result<KernelReport> {
    let g = inst.graph();
    let (t, k) = (inst.cover().len(), inst.k());
    let decomposition = decompose_twin_cliques(g, inst.cover())?;
    let bound = kernel_bound(t, k);

    if decomposition.largest_clique() > k {
        let reduced = AnnotatedInstance::fixed_no_instance();
        return Ok(KernelReport {
            n_before: g.n(),
            realized: reduced.graph().n(),
            reduced,
            deletions: Vec::new(),
            bound,
            no_instance_shortcut: true,
            map: None,
        });
    }

    let mut deletions = Vec::new();
    for (ty, members) in decomposition.types() {
        let budget = type_budget(t, k, ty.size);
        let keep = if BigUint::from(members.len()) > budget {
            // budget < members.len() fits in usize here.
            usize::try_from(&budget).expect("budget below a usize count")
        } else {
            members.len()
        };
        for &i in members[keep..].iter().rev() {
            deletions.push(Deletion {
                clique_type: ty.clone(),
                vertices: decomposition.cliques()[i].vertices.clone(),
            });
        }
    }

    let doomed: Vec<usize> = deletions.iter().flat_map(|d| d.vertices.iter().copied()).collect();
    let (reduced_graph, map) = g.delete_vertices(&doomed);
    let cover = inst
        .cover()
        .vertices()
        .iter()
        .map(|&x| map.new_label(x).expect("cover vertices are never deleted"))
        .collect();
    let reduced = AnnotatedInstance::new(reduced_graph, k, cover)?;
    Ok(KernelReport {
        n_before: g.n(),
        realized: reduced.graph().n(),
        reduced,
        deletions,
        bound,
        no_instance_shortcut: false,
        map: Some(map),
    })
}

/// Unannotated kernel: annotate with the greedy-matching twin cover (at most `2 tc(G)`), then reduce.
pub fn kernelize(g: &Graph, k: usize) -> Result<KernelReport> {
    if !g.is_connected() {
        return Err(Error::Validity("the graph is disconnected".into()));
    }
    let y = approx_twin_cover(g);
    kernelize_annotated(&AnnotatedInstance::new(g.clone(), k, y.vertices().to_vec())?)
}

/// Like [`kernelize`] but annotates with a minimum twin cover.
pub fn kernelize_with_exact_cover(g: &Graph, k: usize, budget: Option<u64>) -> Result<KernelReport> {
    if !g.is_connected() {
        return Err(Error::Validity("the graph is disconnected".into()));
    }
    let x = exact_twin_cover(g, budget)?;
    kernelize_annotated(&AnnotatedInstance::new(g.clone(), k, x.vertices().to_vec())?)
}

/// Replays the deletion log one clique at a time and checks, after every step,
/// that the graph stays connected, the cover stays a twin cover, and distances
/// between surviving vertices are unchanged. Also checks the replay ends at
/// the reported graph.
pub fn verify_deletions(inst: &AnnotatedInstance, report: &KernelReport) -> Result<()> {
    if report.no_instance_shortcut {
        return Ok(());
    }
    let mut graph = inst.graph().clone();
    let mut map = VertexMap::identity(graph.n());
    let mut dist = graph.distance_matrix();
    for (step, deletion) in report.deletions.iter().enumerate() {
        let current: Vec<usize> = deletion
            .vertices
            .iter()
            .map(|&v| {
                map.new_label(v)
                    .ok_or_else(|| Error::Structural(format!("step {step}: vertex {v} deleted twice")))
            })
            .collect::<Result<_>>()?;
        let (next, step_map) = graph.delete_vertices(&current);
        if !next.is_connected() {
            return Err(Error::Structural(format!("step {step}: graph disconnected")));
        }
        let next_dist = next.distance_matrix();
        for (a, row) in next_dist.iter().enumerate() {
            for (b, d) in row.iter().enumerate() {
                if *d != dist[step_map.old_label(a)][step_map.old_label(b)] {
                    return Err(Error::Structural(format!("step {step}: distance changed")));
                }
            }
        }
        map = map.then(&step_map);
        let cover: Vec<usize> = inst.cover().vertices().iter().filter_map(|&x| map.new_label(x)).collect();
        if cover.len() != inst.cover().len() {
            return Err(Error::Structural(format!("step {step}: a cover vertex was deleted")));
        }
        TwinCover::new(&next, cover).map_err(|e| Error::Structural(format!("step {step}: {e}")))?;
        graph = next;
        dist = next_dist;
    }
    if &graph != report.reduced.graph() {
        return Err(Error::Structural("replayed deletions do not reproduce the kernel".into()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bound_examples() {
        assert_eq!(kernel_bound(0, 1), BigUint::from(2u32));
        assert_eq!(kernel_bound(1, 1), BigUint::from(5u32));
        assert_eq!(kernel_bound(2, 2), BigUint::from(50u32));
        // Far past u64 without overflow.
        assert_eq!(kernel_bound(40, 40).bits(), 90);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigUint::from(10u32));
        assert_eq!(binomial(3, 4), BigUint::ZERO);
        assert_eq!(binomial(60, 30), BigUint::from(118_264_581_564_861_424u64));
    }

    #[test]
    fn star_with_five_leaves() {
        let inst = AnnotatedInstance::new(Graph::star(5), 1, vec![0]).unwrap();
        let report = kernelize_annotated(&inst).unwrap();
        assert_eq!(report.reduced.graph(), &Graph::star(2));
        assert_eq!(report.realized, 3);
        assert_eq!(report.bound, BigUint::from(5u32));
        assert!(!report.no_instance_shortcut);
        let deleted: Vec<_> = report.deletions.iter().map(|d| d.vertices.clone()).collect();
        assert_eq!(deleted, vec![vec![5], vec![4], vec![3]]);
        assert_eq!(report.reduced.cover().vertices(), &[0]);
        verify_deletions(&inst, &report).unwrap();
    }

    #[test]
    fn oversized_clique_shortcut() {
        // Triangle {1,2,3} hanging off cover vertex 0, with k = 2.
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let inst = AnnotatedInstance::new(g, 2, vec![0]).unwrap();
        let report = kernelize_annotated(&inst).unwrap();
        assert!(report.no_instance_shortcut);
        assert_eq!(report.reduced, AnnotatedInstance::fixed_no_instance());
        assert_eq!(report.reduced.k(), 1);
        assert_eq!(report.reduced.cover().vertices(), &[0, 1]);
    }

    #[test]
    fn small_instance_untouched() {
        let inst = AnnotatedInstance::new(Graph::path(4), 3, vec![1, 2]).unwrap();
        let report = kernelize_annotated(&inst).unwrap();
        assert!(report.deletions.is_empty());
        assert_eq!(&report.reduced, &inst);
    }

    #[test]
    fn unannotated_examples() {
        let k5 = Graph::complete(5);
        let r = kernelize(&k5, 5).unwrap();
        assert_eq!(r.reduced.graph(), &k5);
        assert!(!r.no_instance_shortcut);
        assert!(kernelize(&k5, 4).unwrap().no_instance_shortcut);

        // Greedy matching on the star picks edge 0-1, so Y = {0, 1} and t = 2.
        let r = kernelize(&Graph::star(5), 2).unwrap();
        assert_eq!(r.reduced.cover().vertices(), &[0, 1]);
        assert_eq!(r.bound, kernel_bound(2, 2));
        // Type ({0}, 1) holds the four leaves 2..=5, budget (2+1)·C(2,1) = 6: nothing to delete.
        assert!(r.deletions.is_empty());
    }

    #[test]
    fn invalid_instances() {
        assert!(matches!(AnnotatedInstance::new(Graph::empty(2), 1, vec![]), Err(Error::Validity(_))));
        assert!(matches!(AnnotatedInstance::new(Graph::path(3), 1, vec![]), Err(Error::Validity(_))));
        assert!(matches!(AnnotatedInstance::new(Graph::path(3), 0, vec![1]), Err(Error::Input(_))));
        assert!(matches!(kernelize(&Graph::empty(3), 1), Err(Error::Validity(_))));
    }

    #[test]
    fn kappa() {
        let inst = AnnotatedInstance::new(Graph::path(4), 2, vec![1, 2]).unwrap();
        assert_eq!(inst.kappa(), 4);
    }
}
