//! Test corpora and brute-force oracles shared by the integration suites.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use svcfc_core::generate::{GeneratorSpec, TypeCount};
use svcfc_core::graph::Graph;
use svcfc_core::kernel::type_budget;

/// Upper-triangle adjacency code of `g` under `perm` (new position -> old vertex).
fn code(g: &Graph, perm: &[usize]) -> u64 {
    let mut c = 0u64;
    for j in 1..perm.len() {
        for i in 0..j {
            c = c << 1 | g.has_edge(perm[i], perm[j]) as u64;
        }
    }
    c
}

/// Canonical code: the largest code over vertex orders sorted by decreasing degree.
fn canonical(g: &Graph) -> u64 {
    let n = g.n();
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for (_, grp) in &(0..n).sorted_by_key(|&v| std::cmp::Reverse(g.degree(v))).chunk_by(|&v| g.degree(v)) {
        groups.push(grp.collect());
    }
    groups
        .iter()
        .map(|grp| grp.iter().copied().permutations(grp.len()).collect::<Vec<_>>())
        .multi_cartesian_product()
        .map(|parts| code(g, &parts.concat()))
        .max()
        .unwrap_or(0)
}

fn from_code(n: usize, c: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = n * n.saturating_sub(1) / 2;
    for j in 1..n {
        for i in 0..j {
            bit -= 1;
            if c >> bit & 1 == 1 {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// One representative of every isomorphism class of graphs on `n <= 7` vertices.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 7, "canonical search is only meant for tiny graphs");
    let mut level = vec![Graph::empty(1)];
    for size in 2..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            for mask in 0u32..1 << (size - 1) {
                let mut edges: Vec<_> = g.edges().collect();
                edges.extend((0..size - 1).filter(|v| mask >> v & 1 == 1).map(|v| (v, size - 1)));
                let h = Graph::from_edges(size, &edges).unwrap();
                let c = canonical(&h);
                if seen.insert(c) {
                    next.push(from_code(size, c));
                }
            }
        }
        level = next;
    }
    if n == 0 {
        return vec![Graph::empty(0)];
    }
    level
}

/// All connected graphs on `1..=max_n` vertices up to isomorphism.
pub fn connected_graphs_up_to(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(all_graphs).filter(Graph::is_connected).collect()
}

/// Seeded random connected graphs on exactly `n` vertices.
pub fn random_connected_graphs(n: usize, count: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let p: f64 = rng.random_range(0.2..0.85);
        let edges: Vec<_> = (0..n).tuple_combinations().filter(|_| rng.random_bool(p)).collect();
        let g = Graph::from_edges(n, &edges).unwrap();
        if g.is_connected() {
            out.push(g);
        }
    }
    out
}

/// Every simple `u`-`v` path, by exhaustive depth-first search.
pub fn all_simple_paths(g: &Graph, u: usize, v: usize) -> Vec<Vec<usize>> {
    fn go(g: &Graph, v: usize, stack: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let x = *stack.last().unwrap();
        if x == v {
            out.push(stack.clone());
            return;
        }
        for &w in g.neighbors(x) {
            if !stack.contains(&w) {
                stack.push(w);
                go(g, v, stack, out);
                stack.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(g, v, &mut vec![u], &mut out);
    out
}

/// Shortest paths as the minimum-length simple paths, sorted.
pub fn brute_shortest_paths(g: &Graph, u: usize, v: usize) -> Vec<Vec<usize>> {
    let all = all_simple_paths(g, u, v);
    let best = all.iter().map(Vec::len).min().unwrap();
    let mut out: Vec<_> = all.into_iter().filter(|p| p.len() == best).collect();
    out.sort();
    out
}

/// Every inclusion-minimal twin cover, by subset enumeration.
pub fn minimal_twin_covers(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let covers: Vec<u32> = (0u32..1 << n)
        .filter(|&m| {
            let x: Vec<usize> = (0..n).filter(|v| m >> v & 1 == 1).collect();
            svcfc_core::twin::is_twin_cover(g, &x)
        })
        .collect();
    covers
        .iter()
        .filter(|&&m| !covers.iter().any(|&o| o != m && o & m == o))
        .map(|&m| (0..n).filter(|v| m >> v & 1 == 1).collect())
        .collect()
}

/// Fewest colors in any proper coloring of `g` that agrees with `phi` on `x`,
/// by enumerating colorings of the other vertices over `phi`'s colors plus
/// fresh ones (fresh colors introduced in order).
pub fn brute_min_extension(g: &Graph, x: &[usize], phi: &[usize]) -> usize {
    let n = g.n();
    let mut colors = vec![0usize; n];
    for (&v, &c) in x.iter().zip(phi) {
        colors[v] = c;
    }
    let rest: Vec<usize> = (0..n).filter(|v| !x.contains(v)).collect();
    let base: BTreeSet<usize> = phi.iter().copied().collect();
    let first_fresh = base.iter().max().copied().unwrap_or(0) + 1;
    let mut best = usize::MAX;
    #[allow(clippy::too_many_arguments)]
    fn go(
        g: &Graph,
        rest: &[usize],
        i: usize,
        fresh_used: usize,
        first_fresh: usize,
        base: &BTreeSet<usize>,
        colors: &mut Vec<usize>,
        best: &mut usize,
    ) {
        if i == rest.len() {
            let used = colors.iter().collect::<BTreeSet<_>>().len();
            *best = (*best).min(used);
            return;
        }
        let v = rest[i];
        let options: Vec<usize> = base.iter().copied().chain(first_fresh..first_fresh + fresh_used + 1).collect();
        for c in options {
            if g.neighbors(v).iter().any(|&w| colors[w] == c) {
                continue;
            }
            colors[v] = c;
            let fresh = if c >= first_fresh + fresh_used { fresh_used + 1 } else { fresh_used };
            go(g, rest, i + 1, fresh, first_fresh, base, colors, best);
            colors[v] = 0;
        }
    }
    go(g, &rest, 0, 0, first_fresh, &base, &mut colors, &mut best);
    best
}

/// All proper colorings of `G[x]` in canonical (first-occurrence) form.
pub fn canonical_proper_colorings(g: &Graph, x: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn go(g: &Graph, x: &[usize], phi: &mut Vec<usize>, max: usize, out: &mut Vec<Vec<usize>>) {
        let i = phi.len();
        if i == x.len() {
            out.push(phi.clone());
            return;
        }
        for c in 1..=max + 1 {
            if (0..i).any(|j| phi[j] == c && g.has_edge(x[i], x[j])) {
                continue;
            }
            phi.push(c);
            go(g, x, phi, max.max(c), out);
            phi.pop();
        }
    }
    go(g, x, &mut Vec::new(), 0, &mut out);
    out
}

/// A random planted instance for kernel testing: `t <= 3`, `k <= 3`, at most
/// 30 twin-cliques and 40 vertices. Roughly half the specs overload one type
/// beyond its `(t+1)·C(k,s)` budget; a few contain an oversized clique.
pub fn random_kernel_spec(rng: &mut ChaCha8Rng) -> (GeneratorSpec, usize) {
    let t = rng.random_range(1..=3usize);
    let k = rng.random_range(1..=3usize);
    let mut types: Vec<TypeCount> = Vec::new();
    let mut cliques = 0;
    let mut n = t;
    let n_types = rng.random_range(1..=4);
    for i in 0..n_types {
        let mask = rng.random_range(1..1u32 << t);
        let neighborhood: Vec<usize> = (0..t).filter(|b| mask >> b & 1 == 1).collect();
        let size = if rng.random_bool(0.08) { k + 1 } else { rng.random_range(1..=k) };
        let budget = usize::try_from(&type_budget(t, k, size)).unwrap_or(usize::MAX);
        let heavy = i == 0 && rng.random_bool(0.6);
        let wanted = if heavy { budget + rng.random_range(1..=4) } else { rng.random_range(1..=4) };
        let room = (30 - cliques).min((40 - n) / size);
        let count = wanted.min(room);
        if count == 0 {
            continue;
        }
        cliques += count;
        n += count * size;
        types.push(TypeCount { neighborhood, size, count });
    }
    if types.is_empty() {
        types.push(TypeCount { neighborhood: vec![0], size: 1, count: 1 });
    }
    let spec = GeneratorSpec {
        t,
        clique_type_counts: types,
        seed: rng.random(),
        core_edge_probability: [0.0, 0.5, 1.0][rng.random_range(0..3)],
        shuffle: true,
    };
    (spec, k)
}
