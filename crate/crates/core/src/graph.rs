//! Simple undirected graphs on the vertex set `0..n`.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// A finite simple undirected graph with vertices `0..n`.
///
/// Neighbor lists are kept sorted, so every traversal in this crate is
/// deterministic and edges come out in lexicographic order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

/// A simple path, stored as its vertex sequence.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path(pub Vec<usize>);

impl Path {
    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    /// Number of edges on the path.
    pub fn len(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }
}

/// Result of [`Graph::shortest_paths`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShortestPaths {
    /// Lexicographically ordered, at most `cap` of them.
    pub paths: Vec<Path>,
    /// Set when more than `cap` shortest paths exist.
    pub overflowed: bool,
}

/// Relabeling produced by [`Graph::delete_vertices`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexMap {
    old_to_new: Vec<Option<usize>>,
    new_to_old: Vec<usize>,
}

impl VertexMap {
    pub fn identity(n: usize) -> Self {
        VertexMap {
            old_to_new: (0..n).map(Some).collect(),
            new_to_old: (0..n).collect(),
        }
    }

    /// New label of an old vertex, `None` if it was deleted.
    pub fn new_label(&self, old: usize) -> Option<usize> {
        self.old_to_new.get(old).copied().flatten()
    }

    pub fn old_label(&self, new: usize) -> usize {
        self.new_to_old[new]
    }

    pub fn survivors(&self) -> &[usize] {
        &self.new_to_old
    }

    /// Composes `self` (old -> mid) with `next` (mid -> new).
    pub fn then(&self, next: &VertexMap) -> VertexMap {
        let old_to_new = self
            .old_to_new
            .iter()
            .map(|mid| mid.and_then(|mid| next.new_label(mid)))
            .collect();
        let new_to_old = next.new_to_old.iter().map(|&mid| self.new_to_old[mid]).collect();
        VertexMap { old_to_new, new_to_old }
    }
}

impl Graph {
    /// Builds a graph, rejecting loops, duplicate edges and out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Input(format!("edge {u}-{v} has an endpoint outside 0..{n}")));
            }
            if u == v {
                return Err(Error::Input(format!("self-loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let (a, b) = (v.min(w[0]), v.max(w[0]));
                return Err(Error::Input(format!("duplicate edge {a}-{b}")));
            }
        }
        Ok(Graph { adj, m: edges.len() })
    }

    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], m: 0 }
    }

    pub fn complete(n: usize) -> Self {
        let adj = (0..n).map(|v| (0..n).filter(|&w| w != v).collect()).collect();
        Graph { adj, m: n * n.saturating_sub(1) / 2 }
    }

    /// The path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges).expect("path edges are valid")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((0, n - 1));
        Graph::from_edges(n, &edges).expect("cycle edges are valid")
    }

    /// Star with center 0 and leaves `1..=leaves`.
    pub fn star(leaves: usize) -> Self {
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Graph::from_edges(leaves + 1, &edges).expect("star edges are valid")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::Input(format!("vertex {v} out of range 0..{}", self.n())))
        }
    }

    /// Breadth-first distances from `source`; `None` marks unreachable vertices.
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(x) = queue.pop_front() {
            let dx = dist[x].unwrap();
            for &w in &self.adj[x] {
                if dist[w].is_none() {
                    dist[w] = Some(dx + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// All-pairs distance matrix, `None` for unreachable pairs.
    pub fn distance_matrix(&self) -> Vec<Vec<Option<usize>>> {
        (0..self.n()).map(|v| self.bfs_distances(v)).collect()
    }

    /// The empty graph and the single vertex both count as connected.
    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.bfs_distances(0).iter().all(Option::is_some)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for start in 0..self.n() {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut i = 0;
            while i < comp.len() {
                let x = comp[i];
                i += 1;
                for &w in &self.adj[x] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Graph distance between `u` and `v`; `Ok(None)` when they are disconnected.
    pub fn distance(&self, u: usize, v: usize) -> Result<Option<usize>> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.bfs_distances(u)[v])
    }

    /// Enumerates shortest `u`-`v` paths in lexicographic order, stopping after `cap`.
    ///
    /// The search walks the BFS layer DAG rooted at `u`, restricted to vertices
    /// that lie on some shortest path to `v`, so every branch produces a path.
    pub fn shortest_paths(&self, u: usize, v: usize, cap: usize) -> Result<ShortestPaths> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if cap == 0 {
            return Err(Error::Input("path cap must be positive".into()));
        }
        if u == v {
            return Err(Error::Input(format!("shortest paths need distinct endpoints, got {u} twice")));
        }
        let from_u = self.bfs_distances(u);
        let from_v = self.bfs_distances(v);
        let Some(d) = from_u[v] else {
            return Err(Error::Validity(format!("vertices {u} and {v} are disconnected")));
        };
        let on_dag = |w: usize| matches!((from_u[w], from_v[w]), (Some(a), Some(b)) if a + b == d);

        let mut out = ShortestPaths { paths: Vec::new(), overflowed: false };
        let mut stack = vec![u];
        // Depth-first over the layer DAG; `cursor[i]` indexes the next neighbor to try at depth i.
        let mut cursor = vec![0usize];
        while let Some(&x) = stack.last() {
            if x == v {
                if out.paths.len() == cap {
                    out.overflowed = true;
                    break;
                }
                out.paths.push(Path(stack.clone()));
                stack.pop();
                cursor.pop();
                continue;
            }
            let depth = stack.len() - 1;
            let next = self.adj[x][cursor[depth]..]
                .iter()
                .position(|&w| from_u[w] == Some(depth + 1) && on_dag(w));
            match next {
                Some(offset) => {
                    let w = self.adj[x][cursor[depth] + offset];
                    cursor[depth] += offset + 1;
                    stack.push(w);
                    cursor.push(0);
                }
                None => {
                    stack.pop();
                    cursor.pop();
                }
            }
        }
        Ok(out)
    }

    /// Induced subgraph on the vertices not in `deleted`, relabeled compactly in increasing order.
    pub fn delete_vertices(&self, deleted: &[usize]) -> (Graph, VertexMap) {
        let mut keep = vec![true; self.n()];
        for &v in deleted {
            keep[v] = false;
        }
        self.induced(&keep)
    }

    /// Induced subgraph on the vertices flagged in `keep`.
    pub fn induced(&self, keep: &[bool]) -> (Graph, VertexMap) {
        let mut old_to_new = vec![None; self.n()];
        let mut new_to_old = Vec::new();
        for v in 0..self.n() {
            if keep[v] {
                old_to_new[v] = Some(new_to_old.len());
                new_to_old.push(v);
            }
        }
        let mut m = 0;
        let adj: Vec<Vec<usize>> = new_to_old
            .iter()
            .map(|&old| {
                let list: Vec<usize> = self.adj[old].iter().filter_map(|&w| old_to_new[w]).collect();
                m += list.len();
                list
            })
            .collect();
        let map = VertexMap { old_to_new, new_to_old };
        (Graph { adj, m: m / 2 }, map)
    }

    /// Whether the vertex permutation `perm` maps edges to edges and non-edges to non-edges.
    pub fn is_automorphism(&self, perm: &[usize]) -> bool {
        if perm.len() != self.n() {
            return false;
        }
        let mut hit = vec![false; self.n()];
        for &p in perm {
            if p >= self.n() || std::mem::replace(&mut hit[p], true) {
                return false;
            }
        }
        // Bijective and edge-count preserving, so edge -> edge suffices.
        self.edges().all(|(u, v)| self.has_edge(perm[u], perm[v]))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges().collect::<Vec<_>>())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn paths_of(sp: &ShortestPaths) -> Vec<Vec<usize>> {
        sp.paths.iter().map(|p| p.0.clone()).collect()
    }

    #[test]
    fn rejects_loops_duplicates_and_range() {
        assert!(Graph::from_edges(2, &[(0, 0)]).is_err());
        assert!(Graph::from_edges(2, &[(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(2, &[(0, 2)]).is_err());
    }

    #[test]
    fn connectivity() {
        assert!(Graph::complete(3).is_connected());
        assert!(!Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap().is_connected());
        assert!(Graph::empty(1).is_connected());
    }

    #[test]
    fn distances() {
        let p4 = Graph::path(4);
        assert_eq!(p4.distance(0, 3).unwrap(), Some(3));
        assert_eq!(p4.distance(2, 2).unwrap(), Some(0));
        assert_eq!(Graph::cycle(4).distance(0, 2).unwrap(), Some(2));
        assert_eq!(Graph::empty(2).distance(0, 1).unwrap(), None);
        assert!(matches!(p4.distance(0, 9), Err(Error::Input(_))));
    }

    #[test]
    fn shortest_paths_examples() {
        let c4 = Graph::cycle(4);
        let sp = c4.shortest_paths(0, 2, 10).unwrap();
        assert_eq!(paths_of(&sp), vec![vec![0, 1, 2], vec![0, 3, 2]]);
        assert!(!sp.overflowed);

        let k2 = Graph::complete(2);
        assert_eq!(paths_of(&k2.shortest_paths(0, 1, 10).unwrap()), vec![vec![0, 1]]);

        // K_4 minus the edge 0-1.
        let g = Graph::from_edges(4, &[(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let sp = g.shortest_paths(0, 1, 10).unwrap();
        assert_eq!(paths_of(&sp), vec![vec![0, 2, 1], vec![0, 3, 1]]);
    }

    #[test]
    fn shortest_paths_errors_and_overflow() {
        let c4 = Graph::cycle(4);
        assert!(matches!(c4.shortest_paths(0, 2, 0), Err(Error::Input(_))));
        assert!(matches!(c4.shortest_paths(1, 1, 3), Err(Error::Input(_))));
        let two = Graph::empty(2);
        assert!(matches!(two.shortest_paths(0, 1, 3), Err(Error::Validity(_))));

        let sp = c4.shortest_paths(0, 2, 1).unwrap();
        assert_eq!(paths_of(&sp), vec![vec![0, 1, 2]]);
        assert!(sp.overflowed);
        // Exactly `cap` paths is not an overflow.
        assert!(!c4.shortest_paths(0, 2, 2).unwrap().overflowed);
    }

    #[test]
    fn deletion_examples() {
        let (g, map) = Graph::complete(3).delete_vertices(&[1]);
        assert_eq!(g, Graph::complete(2));
        assert_eq!(map.survivors(), &[0, 2]);

        let p4 = Graph::path(4);
        let (same, map) = p4.delete_vertices(&[]);
        assert_eq!(same, p4);
        assert_eq!(map, VertexMap::identity(4));

        let (g, map) = p4.delete_vertices(&[1]);
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(1, 2)]);
        assert_eq!((map.old_label(1), map.old_label(2)), (2, 3));
        assert_eq!(map.new_label(1), None);
    }

    #[test]
    fn map_composition() {
        let g = Graph::path(5);
        let (g1, a) = g.delete_vertices(&[1]);
        let (_, b) = g1.delete_vertices(&[2]);
        let both = a.then(&b);
        assert_eq!(both.survivors(), &[0, 2, 4]);
        assert_eq!(both.new_label(3), None);
        assert_eq!(both.new_label(4), Some(2));
    }

    #[test]
    fn automorphisms() {
        let c4 = Graph::cycle(4);
        assert!(c4.is_automorphism(&[1, 2, 3, 0]));
        assert!(!c4.is_automorphism(&[0, 2, 1, 3]));
        assert!(!c4.is_automorphism(&[0, 0, 1, 2]));
    }
}
