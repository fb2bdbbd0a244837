//! Exact strong CFVC decision and optimization for small graphs.
//!
//! A coloring is a strong CFVC coloring when every pair of distinct vertices
//! is joined by a shortest path on which some color occurs exactly once. The
//! search here is exhaustive and deliberately independent of the twin-cover
//! machinery, so it can serve as the reference answer for the kernel.

use std::collections::{BTreeMap, VecDeque};

use serde::Serialize;

use crate::coloring::{check_total, chromatic_number_exact, Coloring};
use crate::error::{Error, NodeBudget, Result};
use crate::graph::{Graph, Path};

/// Shortest paths enumerated per vertex pair before giving up on that pair.
pub const DEFAULT_PATH_CAP: usize = 100_000;

/// Some color appears on exactly one vertex of `p`.
pub fn path_is_conflict_free(c: &Coloring, p: &Path) -> bool {
    conflict_free(p.vertices().iter().map(|&v| c.color(v)))
}

fn conflict_free(colors: impl Iterator<Item = usize>) -> bool {
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for c in colors {
        *counts.entry(c).or_default() += 1;
    }
    counts.values().any(|&n| n == 1)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CfvcVerdict {
    pub is_strong: bool,
    /// Lexicographically first pair without a conflict-free shortest path.
    pub violating_pair: Option<(usize, usize)>,
    /// Some pair had more than `cap` shortest paths. Only pairs whose
    /// enumeration was cut short can be reported as false violations.
    pub paths_overflowed: bool,
}

/// Checks every pair of distinct vertices for a conflict-free shortest path.
pub fn is_strong_cfvc_coloring(g: &Graph, c: &Coloring, cap: usize) -> Result<CfvcVerdict> {
    check_total(g, c)?;
    if !g.is_connected() {
        return Err(Error::Validity("the graph is disconnected".into()));
    }
    let mut overflowed = false;
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            let sp = g.shortest_paths(u, v, cap)?;
            overflowed |= sp.overflowed;
            if !sp.paths.iter().any(|p| path_is_conflict_free(c, p)) {
                return Ok(CfvcVerdict { is_strong: false, violating_pair: Some((u, v)), paths_overflowed: overflowed });
            }
        }
    }
    Ok(CfvcVerdict { is_strong: true, violating_pair: None, paths_overflowed: overflowed })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decision {
    pub answer: bool,
    pub witness: Option<Coloring>,
    /// A `false` answer may be wrong when this is set.
    pub paths_overflowed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Optimum {
    pub svcfc: usize,
    pub witness: Coloring,
    pub paths_overflowed: bool,
}

/// Is `svcfc(G) <= k`? Returns the first witness in canonical search order.
pub fn svcfc_decide(g: &Graph, k: usize, cap: usize, budget: Option<u64>) -> Result<Decision> {
    if k == 0 {
        return Err(Error::Input("k must be at least 1".into()));
    }
    let searcher = Searcher::new(g, cap)?;
    let mut nodes = NodeBudget::new(budget);
    searcher.decide(k, &mut nodes)
}

/// `svcfc(G)`, searching upward from `χ(G)`.
pub fn svcfc_exact(g: &Graph, cap: usize, budget: Option<u64>) -> Result<Optimum> {
    let searcher = Searcher::new(g, cap)?;
    let (chi, _) = chromatic_number_exact(g, budget)?;
    let mut nodes = NodeBudget::new(budget);
    for k in chi.max(1)..=g.n() {
        let d = searcher.decide(k, &mut nodes)?;
        if let Some(witness) = d.witness {
            return Ok(Optimum { svcfc: k, witness, paths_overflowed: d.paths_overflowed });
        }
    }
    // n distinct colors make every path conflict-free; only an overflowed
    // enumeration could lose that.
    Err(Error::Structural("no strong CFVC coloring found with n colors; path cap too small".into()))
}

/// Plain enumeration of all `k^n` colorings, each checked from scratch.
///
/// No properness pruning and no symmetry breaking; meant for graphs with a
/// handful of vertices as a reference for [`svcfc_decide`].
pub fn svcfc_decide_unpruned(g: &Graph, k: usize, cap: usize) -> Result<bool> {
    let n = g.n();
    let total = (k as u64).checked_pow(n as u32).filter(|&t| t <= 50_000_000);
    let Some(total) = total else {
        return Err(Error::Budget(50_000_000));
    };
    let mut colors = vec![1; n];
    for _ in 0..total {
        let c = Coloring::new(colors.clone())?;
        if is_strong_cfvc_coloring(g, &c, cap)?.is_strong {
            return Ok(true);
        }
        // Odometer increment.
        for slot in colors.iter_mut() {
            if *slot < k {
                *slot += 1;
                break;
            }
            *slot = 1;
        }
    }
    Ok(false)
}

/// Precomputed search state for one graph, reusable across values of `k`.
///
/// Vertices are colored in BFS order from vertex 0, with each class of true
/// twins kept contiguous. Besides first-occurrence color canonicity, the
/// search only visits colorings that are lexicographically least under two
/// kinds of automorphism: permuting true twins, and exchanging two twin
/// classes of equal size with equal outside neighborhoods. Both kinds map
/// strong CFVC colorings to strong CFVC colorings, so each orbit keeps its
/// least member and the first witness found is the same as without them.
struct Searcher<'g> {
    g: &'g Graph,
    order: Vec<usize>,
    position: Vec<usize>,
    /// For position `i`, the position where its twin class starts.
    class_start: Vec<usize>,
    /// For position `i` closing a class, the start of the previous class with
    /// the same size and outside neighborhood.
    previous_peer: Vec<Option<usize>>,
    /// Pairs at distance >= 3 whose last path vertex is colored at position `i`.
    ready: Vec<Vec<usize>>,
    /// Per pair, ranges into `path_bounds`; per path, ranges into `path_vertices`.
    pair_paths: Vec<(usize, usize)>,
    path_bounds: Vec<(usize, usize)>,
    path_vertices: Vec<usize>,
    overflowed: bool,
}

impl<'g> Searcher<'g> {
    fn new(g: &'g Graph, cap: usize) -> Result<Self> {
        let n = g.n();
        if n == 0 {
            return Err(Error::Validity("the graph has no vertices".into()));
        }
        if !g.is_connected() {
            return Err(Error::Validity("the graph is disconnected".into()));
        }
        if cap == 0 {
            return Err(Error::Input("path cap must be positive".into()));
        }

        // True-twin classes keyed by closed neighborhood.
        let mut classes: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
        for v in 0..n {
            let mut closed = g.neighbors(v).to_vec();
            closed.push(v);
            closed.sort_unstable();
            classes.entry(closed).or_default().push(v);
        }
        let mut class_of = vec![0; n];
        let class_members: Vec<Vec<usize>> = classes.into_values().collect();
        for (i, members) in class_members.iter().enumerate() {
            for &v in members {
                class_of[v] = i;
            }
        }

        let mut order = Vec::with_capacity(n);
        let mut ordered = vec![false; n];
        let mut placed = vec![false; n];
        let mut queue = VecDeque::from([0]);
        placed[0] = true;
        while let Some(x) = queue.pop_front() {
            if ordered[x] {
                continue;
            }
            // x heads its class in the order; its twins follow immediately.
            for &v in std::iter::once(&x).chain(class_members[class_of[x]].iter().filter(|&&v| v != x)) {
                placed[v] = true;
                ordered[v] = true;
                order.push(v);
                for &w in g.neighbors(v) {
                    if !placed[w] {
                        placed[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        let mut position = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }

        let mut class_start = vec![0; n];
        let mut previous_peer = vec![None; n];
        let mut last_peer: BTreeMap<(usize, Vec<usize>), usize> = BTreeMap::new();
        let mut i = 0;
        while i < n {
            let members = &class_members[class_of[order[i]]];
            let end = i + members.len();
            for slot in &mut class_start[i..end] {
                *slot = i;
            }
            let mut outside: Vec<usize> =
                g.neighbors(members[0]).iter().copied().filter(|w| !members.contains(w)).collect();
            outside.sort_unstable();
            if let Some(prev) = last_peer.insert((members.len(), outside), i) {
                previous_peer[end - 1] = Some(prev);
            }
            i = end;
        }

        let mut ready = vec![Vec::new(); n];
        let mut pair_paths = Vec::new();
        let mut path_bounds = Vec::new();
        let mut path_vertices = Vec::new();
        let mut overflowed = false;
        let dist = g.distance_matrix();
        for (u, row) in dist.iter().enumerate() {
            for (v, d) in row.iter().enumerate().skip(u + 1) {
                // Distance 1 and 2 pairs are settled by properness alone: the
                // edge, or the middle vertex of u-w-v, carries a unique color.
                if d.expect("connected") < 3 {
                    continue;
                }
                let sp = g.shortest_paths(u, v, cap)?;
                overflowed |= sp.overflowed;
                let first = path_bounds.len();
                let mut last_pos = 0;
                for p in &sp.paths {
                    let start = path_vertices.len();
                    path_vertices.extend_from_slice(p.vertices());
                    path_bounds.push((start, path_vertices.len()));
                    last_pos = p.vertices().iter().map(|&w| position[w]).fold(last_pos, usize::max);
                }
                ready[last_pos].push(pair_paths.len());
                pair_paths.push((first, path_bounds.len()));
            }
        }

        Ok(Searcher {
            g,
            order,
            position,
            class_start,
            previous_peer,
            ready,
            pair_paths,
            path_bounds,
            path_vertices,
            overflowed,
        })
    }

    fn decide(&self, k: usize, nodes: &mut NodeBudget) -> Result<Decision> {
        let mut colors = vec![0; self.g.n()];
        let mut counts = vec![0u32; k + 1];
        let found = self.extend(0, 0, k, &mut colors, &mut counts, nodes)?;
        Ok(Decision {
            answer: found,
            witness: found.then(|| Coloring::new(colors).expect("search assigns colors from 1")),
            paths_overflowed: self.overflowed,
        })
    }

    fn pair_ok(&self, pair: usize, colors: &[usize], counts: &mut [u32]) -> bool {
        let (a, b) = self.pair_paths[pair];
        self.path_bounds[a..b].iter().any(|&(s, e)| {
            let path = &self.path_vertices[s..e];
            for &v in path {
                counts[colors[v]] += 1;
            }
            let ok = path.iter().any(|&v| counts[colors[v]] == 1);
            for &v in path {
                counts[colors[v]] = 0;
            }
            ok
        })
    }

    fn extend(
        &self,
        pos: usize,
        max_used: usize,
        k: usize,
        colors: &mut [usize],
        counts: &mut [u32],
        nodes: &mut NodeBudget,
    ) -> Result<bool> {
        if pos == self.order.len() {
            return Ok(true);
        }
        nodes.tick()?;
        let v = self.order[pos];
        let start = self.class_start[pos];
        // Twins take increasing colors in search order.
        let lowest = if pos > start { colors[self.order[pos - 1]] + 1 } else { 1 };
        'colors: for c in lowest..=k.min(max_used + 1) {
            if self.g.neighbors(v).iter().any(|&w| self.position[w] < pos && colors[w] == c) {
                continue;
            }
            colors[v] = c;
            if let Some(peer) = self.previous_peer[pos] {
                let mine = self.order[start..=pos].iter().map(|&w| colors[w]);
                let theirs = self.order[peer..peer + (pos - start + 1)].iter().map(|&w| colors[w]);
                if mine.lt(theirs) {
                    continue;
                }
            }
            for &pair in &self.ready[pos] {
                if !self.pair_ok(pair, colors, counts) {
                    continue 'colors;
                }
            }
            if self.extend(pos + 1, max_used.max(c), k, colors, counts, nodes)? {
                return Ok(true);
            }
        }
        colors[v] = 0;
        Ok(false)
    }
}
