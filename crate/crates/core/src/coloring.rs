//! Proper colorings, exact chromatic number, and the colorings built from a twin cover.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, NodeBudget, Result};
use crate::graph::{Graph, Path};
use crate::twin::{decompose_twin_cliques, Decomposition, TwinCover};

/// A total vertex coloring with positive integer colors, indexed by vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Coloring(Vec<usize>);

impl Coloring {
    pub fn new(colors: Vec<usize>) -> Result<Self> {
        if let Some(v) = colors.iter().position(|&c| c == 0) {
            return Err(Error::Input(format!("vertex {v} has color 0; colors start at 1")));
        }
        Ok(Coloring(colors))
    }

    pub fn color(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `c(U) = {c(u) : u in U}`.
    pub fn color_set(&self, vertices: &[usize]) -> BTreeSet<usize> {
        vertices.iter().map(|&v| self.0[v]).collect()
    }

    pub fn palette(&self) -> BTreeSet<usize> {
        self.0.iter().copied().collect()
    }

    pub fn num_colors(&self) -> usize {
        self.palette().len()
    }
}

pub(crate) fn check_total(g: &Graph, c: &Coloring) -> Result<()> {
    if c.len() != g.n() {
        return Err(Error::Input(format!("coloring covers {} vertices, graph has {}", c.len(), g.n())));
    }
    Ok(())
}

/// No edge is monochromatic.
pub fn is_proper(g: &Graph, c: &Coloring) -> Result<bool> {
    check_total(g, c)?;
    Ok(g.edges().all(|(u, v)| c.color(u) != c.color(v)))
}

/// Exact `χ(G)` with a witness, by backtracking over canonical colorings
/// (vertex 0 gets color 1 and each vertex opens at most one new color).
pub fn chromatic_number_exact(g: &Graph, budget: Option<u64>) -> Result<(usize, Coloring)> {
    if g.n() == 0 {
        return Ok((0, Coloring(Vec::new())));
    }
    let mut nodes = NodeBudget::new(budget);
    let mut colors = vec![0; g.n()];
    for k in 1..=g.n() {
        if extend_proper(g, k, 0, 0, &mut colors, &mut nodes)? {
            return Ok((k, Coloring(colors)));
        }
    }
    unreachable!("n colors always suffice")
}

fn extend_proper(
    g: &Graph,
    k: usize,
    v: usize,
    max_used: usize,
    colors: &mut [usize],
    nodes: &mut NodeBudget,
) -> Result<bool> {
    if v == colors.len() {
        return Ok(true);
    }
    nodes.tick()?;
    for c in 1..=k.min(max_used + 1) {
        if g.neighbors(v).iter().any(|&w| w < v && colors[w] == c) {
            continue;
        }
        colors[v] = c;
        if extend_proper(g, k, v + 1, max_used.max(c), colors, nodes)? {
            return Ok(true);
        }
    }
    colors[v] = 0;
    Ok(false)
}

/// Minimum proper extension of a coloring `φ` of `G[X]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtensionReport {
    /// Colors of the cover vertices, in the cover's sorted order.
    pub phi: Vec<usize>,
    /// `K_φ = max over S ⊆ X of |φ(S)| + m(S)`.
    pub k_phi: usize,
    pub witness_s: Vec<usize>,
    /// Proper coloring of `G` agreeing with `φ` on `X` and using exactly `k_phi` colors.
    pub extension: Coloring,
}

fn check_phi(g: &Graph, cover: &TwinCover, phi: &[usize]) -> Result<()> {
    let x = cover.vertices();
    if phi.len() != x.len() {
        return Err(Error::Input(format!("φ colors {} vertices, the cover has {}", phi.len(), x.len())));
    }
    if phi.contains(&0) {
        return Err(Error::Input("φ uses color 0; colors start at 1".into()));
    }
    for (i, &a) in x.iter().enumerate() {
        for (j, &b) in x.iter().enumerate().skip(i + 1) {
            if phi[i] == phi[j] && g.has_edge(a, b) {
                return Err(Error::Input(format!("φ is not proper on G[X]: edge {a}-{b} has color {}", phi[i])));
            }
        }
    }
    Ok(())
}

/// `|φ(S)|` for `S` given as cover vertices.
fn distinct_on(cover: &TwinCover, phi: &[usize], s_set: &[usize]) -> usize {
    s_set
        .iter()
        .map(|&x| phi[cover.vertices().binary_search(&x).expect("S is inside the cover")])
        .collect::<BTreeSet<_>>()
        .len()
}

/// `K_φ` and a lexicographically smallest maximizing `S`.
///
/// Only the realized neighborhoods `N_X(C)` and `X` itself are evaluated: any
/// other `S` has `m(S) = 0` and `|φ(S)| <= |φ(X)|`.
fn k_phi_of(decomp: &Decomposition, neighborhoods: &[(Vec<usize>, usize)], phi: &[usize]) -> (usize, Vec<usize>) {
    let cover = decomp.cover();
    let full = cover.vertices().to_vec();
    let mut best = (distinct_on(cover, phi, &full) + decomp.m(&full), full);
    for (s_set, m) in neighborhoods {
        let value = distinct_on(cover, phi, s_set) + m;
        if value > best.0 || (value == best.0 && *s_set < best.1) {
            best = (value, s_set.clone());
        }
    }
    best
}

/// Computes `K_φ` and builds a proper `K_φ`-coloring of `G` extending `φ`.
///
/// The palette is `φ(X)` topped up with the smallest unused positive colors;
/// each twin-clique with neighborhood `S` takes the smallest palette colors
/// outside `φ(S)`.
pub fn extension_number(g: &Graph, cover: &TwinCover, phi: &[usize]) -> Result<ExtensionReport> {
    check_phi(g, cover, phi)?;
    let decomp = decompose_twin_cliques(g, cover)?;
    Ok(extend_with(g, &decomp, &decomp.neighborhoods(), phi))
}

fn extend_with(g: &Graph, decomp: &Decomposition, neighborhoods: &[(Vec<usize>, usize)], phi: &[usize]) -> ExtensionReport {
    let cover = decomp.cover();
    let (k_phi, witness_s) = k_phi_of(decomp, neighborhoods, phi);

    let mut palette: BTreeSet<usize> = phi.iter().copied().collect();
    let mut next = 1;
    while palette.len() < k_phi {
        palette.insert(next);
        next += 1;
    }
    let mut colors = vec![0; g.n()];
    for (&x, &c) in cover.vertices().iter().zip(phi) {
        colors[x] = c;
    }
    for clique in decomp.cliques() {
        let blocked: BTreeSet<usize> = clique.neighborhood.iter().map(|&x| colors[x]).collect();
        let free = palette.iter().filter(|c| !blocked.contains(c));
        for (&v, &c) in clique.vertices.iter().zip(free) {
            colors[v] = c;
        }
    }
    ExtensionReport { phi: phi.to_vec(), k_phi, witness_s, extension: Coloring(colors) }
}

/// `K_φ` by brute force over all `2^t` subsets of the cover, for cross-checking.
pub fn extension_number_all_subsets(g: &Graph, cover: &TwinCover, phi: &[usize]) -> Result<usize> {
    check_phi(g, cover, phi)?;
    let decomp = decompose_twin_cliques(g, cover)?;
    let x = cover.vertices();
    if x.len() >= usize::BITS as usize {
        return Err(Error::Input("cover too large for subset enumeration".into()));
    }
    Ok((0usize..1 << x.len())
        .map(|mask| {
            let s_set: Vec<usize> = (0..x.len()).filter(|i| mask >> i & 1 == 1).map(|i| x[i]).collect();
            distinct_on(cover, phi, &s_set) + decomp.m(&s_set)
        })
        .max()
        .unwrap_or(0))
}

/// `χ(G)` as the minimum of `K_φ` over proper colorings `φ` of `G[X]`.
///
/// Colorings of `G[X]` are enumerated in canonical form only, since `K_φ`
/// depends on `φ` only through its color classes. Returns the minimizing
/// report, whose extension is a `χ(G)`-coloring.
pub fn chi_via_twin_cover(g: &Graph, cover: &TwinCover, budget: Option<u64>) -> Result<(usize, ExtensionReport)> {
    let decomp = decompose_twin_cliques(g, cover)?;
    let neighborhoods = decomp.neighborhoods();
    let x = cover.vertices();
    let mut nodes = NodeBudget::new(budget);
    let mut phi = vec![0; x.len()];
    let mut best: Option<(usize, Vec<usize>)> = None;
    each_canonical_proper(g, x, 0, 0, &mut phi, &mut nodes, &mut |phi| {
        let (value, _) = k_phi_of(&decomp, &neighborhoods, phi);
        if best.as_ref().is_none_or(|(b, _)| value < *b) {
            best = Some((value, phi.to_vec()));
        }
    })?;
    let (chi, phi) = best.expect("at least one proper coloring of G[X] exists");
    Ok((chi, extend_with(g, &decomp, &neighborhoods, &phi)))
}

fn each_canonical_proper(
    g: &Graph,
    x: &[usize],
    i: usize,
    max_used: usize,
    phi: &mut [usize],
    nodes: &mut NodeBudget,
    visit: &mut dyn FnMut(&[usize]),
) -> Result<()> {
    nodes.tick()?;
    if i == x.len() {
        visit(phi);
        return Ok(());
    }
    for c in 1..=max_used + 1 {
        if (0..i).any(|j| phi[j] == c && g.has_edge(x[i], x[j])) {
            continue;
        }
        phi[i] = c;
        each_canonical_proper(g, x, i + 1, max_used.max(c), phi, nodes, visit)?;
    }
    phi[i] = 0;
    Ok(())
}

/// A shortest path of length at least 3 with no vertex in `y`, if one exists.
///
/// Such a path exists exactly when some pair outside `y` has the same distance
/// in `G - y` as in `G`, with that distance at least 3.
pub fn long_shortest_path_avoiding(g: &Graph, y: &[usize]) -> Option<Path> {
    let (rest, map) = g.delete_vertices(y);
    for a in 0..rest.n() {
        let outer = g.bfs_distances(map.old_label(a));
        let inner = rest.bfs_distances(a);
        for b in a + 1..rest.n() {
            match (outer[map.old_label(b)], inner[b]) {
                (Some(d), Some(e)) if d >= 3 && d == e => {
                    let p = &rest.shortest_paths(a, b, 1).expect("connected pair").paths[0];
                    return Some(Path(p.vertices().iter().map(|&v| map.old_label(v)).collect()));
                }
                _ => {}
            }
        }
    }
    None
}

/// A strong CFVC coloring with at most `χ(G) + |y|` colors.
///
/// Starts from a minimum proper coloring and recolors each vertex of `y` with
/// its own fresh color `χ+1, χ+2, ...` in vertex order. Requires `y ⊆ X` and
/// that `y` meets every shortest path of length at least 3.
pub fn svcfc_upper_coloring(g: &Graph, cover: &TwinCover, y: &[usize], budget: Option<u64>) -> Result<Coloring> {
    let mut y = y.to_vec();
    y.sort_unstable();
    y.dedup();
    if let Some(&v) = y.iter().find(|&&v| !cover.contains(v)) {
        return Err(Error::Input(format!("vertex {v} of Y is not in the twin cover")));
    }
    if let Some(path) = long_shortest_path_avoiding(g, &y) {
        return Err(Error::Structural(format!("shortest path {:?} of length {} avoids Y", path.vertices(), path.len())));
    }
    let (chi, base) = chromatic_number_exact(g, budget)?;
    let mut colors = base.0;
    for (i, &v) in y.iter().enumerate() {
        colors[v] = chi + 1 + i;
    }
    Ok(Coloring(colors))
}
