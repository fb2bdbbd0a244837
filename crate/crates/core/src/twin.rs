//! True twins, twin covers and the twin-clique decomposition.
//!
//! Given a twin cover `X`, every component of `G - X` is a clique whose
//! vertices share one neighborhood `S` inside `X`. The pair `(S, |C|)` is the
//! clique's type; cliques of equal type are interchangeable by an automorphism
//! of `G`, which is what the kernel and the coloring formulas exploit.

use std::collections::BTreeMap;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, NodeBudget, Result};
use crate::graph::Graph;

/// Whether `u` and `v` have equal closed neighborhoods (so in particular are adjacent).
pub fn are_true_twins(g: &Graph, u: usize, v: usize) -> Result<bool> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(Error::Input(format!("true-twin test needs two distinct vertices, got {u} twice")));
    }
    Ok(true_twins(g, u, v))
}

pub(crate) fn true_twins(g: &Graph, u: usize, v: usize) -> bool {
    if g.degree(u) != g.degree(v) || !g.has_edge(u, v) {
        return false;
    }
    let nu = g.neighbors(u).iter().filter(|&&w| w != v);
    let nv = g.neighbors(v).iter().filter(|&&w| w != u);
    nu.eq(nv)
}

/// First edge of `G - X` (lexicographically) whose endpoints are not true twins.
fn first_non_twin_edge(g: &Graph, in_x: &[bool]) -> Option<(usize, usize)> {
    g.edges()
        .filter(|&(u, v)| !in_x[u] && !in_x[v])
        .find(|&(u, v)| !true_twins(g, u, v))
}

fn membership(g: &Graph, x: &[usize]) -> Result<Vec<bool>> {
    let mut in_x = vec![false; g.n()];
    for &v in x {
        g.check_vertex(v)?;
        if std::mem::replace(&mut in_x[v], true) {
            return Err(Error::Input(format!("vertex {v} listed twice in the twin cover")));
        }
    }
    Ok(in_x)
}

/// Whether every edge of `G - X` is a twin edge.
pub fn is_twin_cover(g: &Graph, x: &[usize]) -> bool {
    match membership(g, x) {
        Ok(in_x) => first_non_twin_edge(g, &in_x).is_none(),
        Err(_) => false,
    }
}

/// A vertex set verified to be a twin cover of some graph. Stored sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct TwinCover(Vec<usize>);

impl TwinCover {
    /// Validates `vertices` against `g`; the error names the first offending edge.
    pub fn new(g: &Graph, mut vertices: Vec<usize>) -> Result<Self> {
        let in_x = membership(g, &vertices)?;
        if let Some((u, v)) = first_non_twin_edge(g, &in_x) {
            return Err(Error::Validity(format!(
                "not a twin cover: edge {u}-{v} lies outside the cover and {u}, {v} are not true twins"
            )));
        }
        vertices.sort_unstable();
        Ok(TwinCover(vertices))
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }
}

/// Type of a twin-clique: its neighborhood inside the cover and its size.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CliqueType {
    #[serde(rename = "S")]
    pub neighborhood: Vec<usize>,
    #[serde(rename = "s")]
    pub size: usize,
}

/// A component of `G - X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwinClique {
    /// Sorted, nonempty.
    pub vertices: Vec<usize>,
    /// `N_X(C)`, sorted.
    pub neighborhood: Vec<usize>,
}

impl TwinClique {
    pub fn size(&self) -> usize {
        self.vertices.len()
    }

    pub fn min_vertex(&self) -> usize {
        self.vertices[0]
    }

    pub fn clique_type(&self) -> CliqueType {
        CliqueType { neighborhood: self.neighborhood.clone(), size: self.size() }
    }
}

/// Twin-cliques of `G - X`, ordered by smallest vertex and grouped by type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    cover: TwinCover,
    cliques: Vec<TwinClique>,
    by_type: BTreeMap<CliqueType, Vec<usize>>,
}

impl Decomposition {
    pub fn cover(&self) -> &TwinCover {
        &self.cover
    }

    pub fn cliques(&self) -> &[TwinClique] {
        &self.cliques
    }

    /// Types in sorted order with the indices (into [`Self::cliques`]) of their members.
    pub fn types(&self) -> impl Iterator<Item = (&CliqueType, &[usize])> {
        self.by_type.iter().map(|(t, members)| (t, members.as_slice()))
    }

    /// Cliques of the given type, ordered by smallest vertex.
    pub fn class(&self, ty: &CliqueType) -> Vec<&TwinClique> {
        self.by_type
            .get(ty)
            .map(|idx| idx.iter().map(|&i| &self.cliques[i]).collect())
            .unwrap_or_default()
    }

    /// `m(S)`: the largest twin-clique with cover-neighborhood exactly `s_set`, or 0.
    pub fn m(&self, s_set: &[usize]) -> usize {
        let mut key: Vec<usize> = s_set.to_vec();
        key.sort_unstable();
        self.cliques
            .iter()
            .filter(|c| c.neighborhood == key)
            .map(TwinClique::size)
            .max()
            .unwrap_or(0)
    }

    /// Distinct neighborhoods `N_X(C)` with their `m` value, sorted by neighborhood.
    pub fn neighborhoods(&self) -> Vec<(Vec<usize>, usize)> {
        let mut best: BTreeMap<&[usize], usize> = BTreeMap::new();
        for c in &self.cliques {
            let e = best.entry(&c.neighborhood).or_default();
            *e = (*e).max(c.size());
        }
        best.into_iter().map(|(s, m)| (s.to_vec(), m)).collect()
    }

    pub fn largest_clique(&self) -> usize {
        self.cliques.iter().map(TwinClique::size).max().unwrap_or(0)
    }
}

/// Splits `V - X` into twin-cliques, re-checking the clique and uniform-neighborhood structure.
pub fn decompose_twin_cliques(g: &Graph, x: &TwinCover) -> Result<Decomposition> {
    let in_x = membership(g, x.vertices())?;
    if let Some((u, v)) = first_non_twin_edge(g, &in_x) {
        return Err(Error::Validity(format!(
            "not a twin cover of this graph: edge {u}-{v} outside the cover is not a twin edge"
        )));
    }
    let keep: Vec<bool> = in_x.iter().map(|&b| !b).collect();
    let (rest, map) = g.induced(&keep);

    let mut cliques = Vec::new();
    for comp in rest.components() {
        let vertices: Vec<usize> = comp.iter().map(|&v| map.old_label(v)).collect();
        let neighborhood: Vec<usize> =
            g.neighbors(vertices[0]).iter().copied().filter(|&w| in_x[w]).collect();
        for &v in &vertices[1..] {
            let nv = g.neighbors(v).iter().copied().filter(|&w| in_x[w]);
            if !nv.eq(neighborhood.iter().copied()) {
                return Err(Error::Validity(format!(
                    "twin-clique containing {} and {v} has non-uniform neighborhood in the cover",
                    vertices[0]
                )));
            }
        }
        for (a, b) in vertices.iter().tuple_combinations() {
            if !g.has_edge(*a, *b) {
                return Err(Error::Validity(format!("component of G - X is not a clique: {a}, {b} nonadjacent")));
            }
        }
        cliques.push(TwinClique { vertices, neighborhood });
    }
    // components() orders by smallest vertex already.
    let mut by_type: BTreeMap<CliqueType, Vec<usize>> = BTreeMap::new();
    for (i, c) in cliques.iter().enumerate() {
        by_type.entry(c.clique_type()).or_default().push(i);
    }
    Ok(Decomposition { cover: x.clone(), cliques, by_type })
}

/// `G†`: the graph with every twin edge removed.
pub fn twin_core_graph(g: &Graph) -> Graph {
    let edges: Vec<_> = g.edges().filter(|&(u, v)| !true_twins(g, u, v)).collect();
    Graph::from_edges(g.n(), &edges).expect("subset of a simple graph's edges")
}

/// Endpoints of a greedy maximal matching of `G†`, scanning edges lexicographically.
///
/// Any vertex cover of `G†` is a twin cover of `G`, and `vc(G†) = tc(G)`, so
/// the result has at most `2 tc(G)` vertices.
pub fn approx_twin_cover(g: &Graph) -> TwinCover {
    let core = twin_core_graph(g);
    let mut matched = vec![false; g.n()];
    for (u, v) in core.edges() {
        if !matched[u] && !matched[v] {
            matched[u] = true;
            matched[v] = true;
        }
    }
    let y: Vec<usize> = (0..g.n()).filter(|&v| matched[v]).collect();
    TwinCover::new(g, y).expect("a vertex cover of G† is a twin cover")
}

/// Minimum twin cover: the first vertex cover of `G†` among subsets in order of
/// size, then lexicographically. `budget` bounds the number of subsets tried.
pub fn exact_twin_cover(g: &Graph, budget: Option<u64>) -> Result<TwinCover> {
    let core = twin_core_graph(g);
    let edges: Vec<_> = core.edges().collect();
    let mut nodes = NodeBudget::new(budget);
    let mut in_set = vec![false; g.n()];
    for size in 0..=g.n() {
        for subset in (0..g.n()).combinations(size) {
            nodes.tick()?;
            for &v in &subset {
                in_set[v] = true;
            }
            let covers = edges.iter().all(|&(u, v)| in_set[u] || in_set[v]);
            for &v in &subset {
                in_set[v] = false;
            }
            if covers {
                return TwinCover::new(g, subset);
            }
        }
    }
    unreachable!("the full vertex set covers every edge")
}

/// The permutation exchanging two twin-cliques along `bijection` and fixing everything else.
///
/// `bijection[i]` is the image of `c.vertices[i]` in `d`.
pub fn swap_permutation(n: usize, c: &TwinClique, d: &TwinClique, bijection: &[usize]) -> Result<Vec<usize>> {
    if c.size() != d.size() || bijection.len() != c.size() {
        return Err(Error::Input("swap needs two cliques of equal size and a full bijection".into()));
    }
    let mut image = bijection.to_vec();
    image.sort_unstable();
    if image != d.vertices {
        return Err(Error::Input("bijection does not map onto the second clique".into()));
    }
    let mut perm: Vec<usize> = (0..n).collect();
    for (&a, &b) in c.vertices.iter().zip(bijection) {
        perm[a] = b;
        perm[b] = a;
    }
    Ok(perm)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cover(g: &Graph, x: &[usize]) -> TwinCover {
        TwinCover::new(g, x.to_vec()).unwrap()
    }

    #[test]
    fn true_twin_examples() {
        let k3 = Graph::complete(3);
        assert!(are_true_twins(&k3, 0, 1).unwrap());
        assert!(are_true_twins(&k3, 1, 2).unwrap());
        assert!(!are_true_twins(&Graph::path(3), 0, 2).unwrap());
        assert!(!are_true_twins(&Graph::star(3), 1, 2).unwrap());
        assert!(matches!(are_true_twins(&k3, 1, 1), Err(Error::Input(_))));
    }

    #[test]
    fn twin_cover_examples() {
        let p3 = Graph::path(3);
        assert!(is_twin_cover(&p3, &[1]));
        // N[0] = {0,1} differs from N[1] = {0,1,2}.
        assert!(!is_twin_cover(&p3, &[]));
        assert!(is_twin_cover(&Graph::complete(4), &[]));
        assert!(!is_twin_cover(&p3, &[1, 1]));
        let err = TwinCover::new(&p3, vec![]).unwrap_err();
        assert!(err.to_string().contains("edge 0-1"), "{err}");
    }

    #[test]
    fn decomposition_examples() {
        let p3 = Graph::path(3);
        let d = decompose_twin_cliques(&p3, &cover(&p3, &[1])).unwrap();
        let got: Vec<_> = d.cliques().iter().map(|c| (c.vertices.clone(), c.clique_type())).collect();
        let ty = CliqueType { neighborhood: vec![1], size: 1 };
        assert_eq!(got, vec![(vec![0], ty.clone()), (vec![2], ty.clone())]);
        assert_eq!(d.types().count(), 1);

        let k4 = Graph::complete(4);
        let d = decompose_twin_cliques(&k4, &cover(&k4, &[])).unwrap();
        assert_eq!(d.cliques().len(), 1);
        assert_eq!(d.cliques()[0].clique_type(), CliqueType { neighborhood: vec![], size: 4 });

        let star = Graph::star(3);
        let d = decompose_twin_cliques(&star, &cover(&star, &[0])).unwrap();
        assert_eq!(d.class(&CliqueType { neighborhood: vec![0], size: 1 }).len(), 3);
    }

    #[test]
    fn decomposition_rejects_foreign_cover() {
        let star = Graph::star(3);
        let x = cover(&star, &[0]);
        let p4 = Graph::path(4);
        assert!(matches!(decompose_twin_cliques(&p4, &x), Err(Error::Validity(_))));
    }

    #[test]
    fn core_graph_examples() {
        assert_eq!(twin_core_graph(&Graph::complete(5)), Graph::empty(5));
        assert_eq!(twin_core_graph(&Graph::path(4)), Graph::path(4));
        assert_eq!(twin_core_graph(&Graph::star(3)), Graph::star(3));
    }

    #[test]
    fn approx_examples() {
        assert!(approx_twin_cover(&Graph::complete(5)).is_empty());
        assert_eq!(approx_twin_cover(&Graph::path(4)).vertices(), &[0, 1, 2, 3]);
        assert_eq!(approx_twin_cover(&Graph::star(3)).vertices(), &[0, 1]);
    }

    #[test]
    fn exact_examples() {
        assert!(exact_twin_cover(&Graph::complete(5), None).unwrap().is_empty());
        // {0,2} is the lexicographically first minimum vertex cover of P_4.
        assert_eq!(exact_twin_cover(&Graph::path(4), None).unwrap().vertices(), &[0, 2]);
        assert_eq!(exact_twin_cover(&Graph::star(3), None).unwrap().vertices(), &[0]);
        assert!(matches!(exact_twin_cover(&Graph::path(8), Some(10)), Err(Error::Budget(10))));
    }

    #[test]
    fn m_examples() {
        let star = Graph::star(3);
        let d = decompose_twin_cliques(&star, &cover(&star, &[0])).unwrap();
        assert_eq!(d.m(&[0]), 1);
        assert_eq!(d.m(&[]), 0);
        let k4 = Graph::complete(4);
        let d = decompose_twin_cliques(&k4, &cover(&k4, &[])).unwrap();
        assert_eq!(d.m(&[]), 4);
    }

    #[test]
    fn swapping_same_type_cliques() {
        // Two triangles hanging off the edge 0-1: vertices {2,3} and {4,5}.
        let g = Graph::from_edges(
            6,
            &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (0, 5), (1, 4), (1, 5), (4, 5)],
        )
        .unwrap();
        let d = decompose_twin_cliques(&g, &cover(&g, &[0, 1])).unwrap();
        let [c, e] = d.cliques() else { panic!("expected two cliques") };
        for bij in [[4, 5], [5, 4]] {
            let perm = swap_permutation(6, c, e, &bij).unwrap();
            assert!(g.is_automorphism(&perm));
        }
        assert!(swap_permutation(6, c, e, &[4, 4]).is_err());
    }
}
