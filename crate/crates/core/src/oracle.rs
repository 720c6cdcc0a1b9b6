//! Ground truth that does not rely on the closed formula.
//!
//! [`count_vector_gamma`] searches per-part count vectors of a complete
//! multipartite graph. [`exact_gamma_generic`] works on an arbitrary
//! [`Graph`] using nothing but the definition of p-domination.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::parts::PartSizes;
use crate::witness::WitnessCounts;

/// Caps for the exhaustive routines. Exceeding one is an error, never a
/// silent truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest graph [`expand_graph`] will build.
    pub max_vertices: u64,
    /// Largest number of count vectors [`count_vector_gamma`] will visit.
    pub max_states: u128,
    /// Largest graph the generic solvers accept.
    pub max_generic_vertices: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_vertices: 10_000,
            max_states: 100_000_000,
            max_generic_vertices: 24,
        }
    }
}

/// Vertex limit of the bitmask-based generic solvers.
pub const GENERIC_HARD_LIMIT: usize = 64;

/// Simple undirected graph with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list. Self-loops, duplicate edges and out
    /// of range endpoints are rejected.
    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); vertex_count];
        for (idx, &(u, v)) in edges.iter().enumerate() {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::invalid(format!(
                    "edge {idx} ({u}, {v}) has an endpoint >= {vertex_count}"
                )));
            }
            if u == v {
                return Err(Error::invalid(format!("edge {idx} is a self-loop on {u}")));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for (u, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::invalid(format!("duplicate edge ({u}, {})", w[0])));
            }
        }
        Ok(Graph { adjacency })
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, l)| l.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    fn masks(&self) -> Vec<u64> {
        self.adjacency
            .iter()
            .map(|l| l.iter().fold(0u64, |m, &v| m | 1 << v))
            .collect()
    }
}

/// A set of vertex ids, sorted ascending without duplicates.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<usize>", into = "Vec<usize>")]
pub struct VertexSet {
    members: Vec<usize>,
}

impl VertexSet {
    pub fn new(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        VertexSet { members }
    }

    fn from_mask(mask: u64) -> Self {
        VertexSet {
            members: (0..64).filter(|&v| mask >> v & 1 == 1).collect(),
        }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(members: Vec<usize>) -> Self {
        VertexSet::new(members)
    }
}

impl From<VertexSet> for Vec<usize> {
    fn from(set: VertexSet) -> Self {
        set.members
    }
}

/// The complete multipartite graph `K(parts)` on blockwise vertex ids.
pub fn expand_graph(parts: &PartSizes, limits: &Limits) -> Result<Graph> {
    let n = parts.total();
    if n > limits.max_vertices {
        return Err(Error::limit(
            "expanded vertex count",
            n as u128,
            limits.max_vertices as u128,
        ));
    }
    let n = n as usize;
    let mut part_of = Vec::with_capacity(n);
    for (i, &size) in parts.sizes().iter().enumerate() {
        part_of.extend(std::iter::repeat_n(i, size as usize));
    }
    let adjacency = (0..n)
        .map(|u| (0..n).filter(|&v| part_of[v] != part_of[u]).collect())
        .collect();
    Ok(Graph { adjacency })
}

fn check_members(g: &Graph, set: &VertexSet) -> Result<()> {
    match set.members.last() {
        Some(&v) if v >= g.vertex_count() => Err(Error::invalid(format!(
            "vertex {v} out of range for {} vertices",
            g.vertex_count()
        ))),
        _ => Ok(()),
    }
}

/// First vertex outside `set` with fewer than `p` neighbours in it, with
/// that neighbour count.
pub fn first_violation(g: &Graph, set: &VertexSet, p: u64) -> Result<Option<(usize, u64)>> {
    check_members(g, set)?;
    let mut inside = vec![false; g.vertex_count()];
    for &v in set.members() {
        inside[v] = true;
    }
    for v in 0..g.vertex_count() {
        if inside[v] {
            continue;
        }
        let seen = g.neighbors(v).iter().filter(|&&u| inside[u]).count() as u64;
        if seen < p {
            return Ok(Some((v, seen)));
        }
    }
    Ok(None)
}

/// Whether every vertex outside `set` has at least `p` neighbours in it.
pub fn is_p_dominating(g: &Graph, set: &VertexSet, p: u64) -> Result<bool> {
    Ok(first_violation(g, set, p)?.is_none())
}

/// Exhaustive minimum over count vectors `0 <= c_i <= n_i`.
///
/// Returns the minimum and the lexicographically smallest optimal vector.
pub fn count_vector_gamma(
    parts: &PartSizes,
    p: u64,
    limits: &Limits,
) -> Result<(u64, WitnessCounts)> {
    if p == 0 {
        return Err(Error::invalid("p must be at least 1"));
    }
    let states = parts
        .sizes()
        .iter()
        .try_fold(1u128, |acc, &n| acc.checked_mul(n as u128 + 1))
        .unwrap_or(u128::MAX);
    if states > limits.max_states {
        return Err(Error::limit("count vectors", states, limits.max_states));
    }

    let sizes = parts.sizes();
    let t = sizes.len();
    let mut counts = vec![0u64; t];
    let mut total = 0u64;
    let mut best: Option<(u64, Vec<u64>)> = None;
    loop {
        if best.as_ref().is_none_or(|(b, _)| total < *b)
            && counts
                .iter()
                .zip(sizes)
                .all(|(&c, &n)| c == n || total - c >= p)
        {
            best = Some((total, counts.clone()));
        }
        // odometer, last position fastest: lexicographic order
        let mut i = t;
        loop {
            if i == 0 {
                let (value, counts) = best.expect("selecting every vertex always works");
                return Ok((value, WitnessCounts::from_vec(counts)));
            }
            i -= 1;
            if counts[i] < sizes[i] {
                counts[i] += 1;
                total += 1;
                break;
            }
            total -= counts[i];
            counts[i] = 0;
        }
    }
}

/// Solver strategy for [`solve_generic`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GenericMode {
    /// Increasing cardinality, lexicographic within a cardinality. The
    /// witness is the lexicographically least minimum set.
    #[default]
    Canonical,
    /// Depth-first branch and bound. Same value, witness not canonical.
    BranchAndBound,
}

/// Exact `gamma_p` of an arbitrary graph with the canonical witness.
pub fn exact_gamma_generic(g: &Graph, p: u64, limits: &Limits) -> Result<(u64, VertexSet)> {
    solve_generic(g, p, GenericMode::Canonical, limits)
}

pub fn solve_generic(
    g: &Graph,
    p: u64,
    mode: GenericMode,
    limits: &Limits,
) -> Result<(u64, VertexSet)> {
    if p == 0 {
        return Err(Error::invalid("p must be at least 1"));
    }
    let n = g.vertex_count();
    let cap = limits.max_generic_vertices.min(GENERIC_HARD_LIMIT);
    if n > cap {
        return Err(Error::limit("generic solver vertices", n as u128, cap as u128));
    }
    let adj = g.masks();
    // vertices of degree < p belong to every p-dominating set
    let forced = (0..n)
        .filter(|&v| (g.degree(v) as u64) < p)
        .fold(0u64, |m, v| m | 1 << v);
    let mask = match mode {
        GenericMode::Canonical => canonical_search(&adj, p, forced),
        GenericMode::BranchAndBound => {
            let mut search = Bnb {
                adj: &adj,
                p,
                best: full_mask(n),
            };
            search.run(0, forced, 0);
            search.best
        }
    };
    Ok((mask.count_ones() as u64, VertexSet::from_mask(mask)))
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn dominates_mask(adj: &[u64], set: u64, p: u64) -> bool {
    adj.iter()
        .enumerate()
        .all(|(v, &nb)| set >> v & 1 == 1 || (nb & set).count_ones() as u64 >= p)
}

fn canonical_search(adj: &[u64], p: u64, forced: u64) -> u64 {
    let free: Vec<usize> = (0..adj.len()).filter(|&v| forced >> v & 1 == 0).collect();
    for k in 0..=free.len() {
        // positions into `free`, advanced in lexicographic order
        let mut pos: Vec<usize> = (0..k).collect();
        loop {
            let set = pos.iter().fold(forced, |m, &i| m | 1 << free[i]);
            if dominates_mask(adj, set, p) {
                return set;
            }
            let Some(i) = (0..k).rev().find(|&i| pos[i] < free.len() - k + i) else {
                break;
            };
            pos[i] += 1;
            for j in i + 1..k {
                pos[j] = pos[j - 1] + 1;
            }
        }
    }
    unreachable!("the full vertex set is p-dominating")
}

struct Bnb<'a> {
    adj: &'a [u64],
    p: u64,
    best: u64,
}

impl Bnb<'_> {
    fn run(&mut self, next: usize, included: u64, excluded: u64) {
        let size = included.count_ones();
        if size >= self.best.count_ones() {
            return;
        }
        let n = self.adj.len();
        let undecided = full_mask(n) & !included & !excluded;
        let mut pending = excluded;
        while pending != 0 {
            let v = pending.trailing_zeros() as usize;
            pending &= pending - 1;
            if ((self.adj[v] & (included | undecided)).count_ones() as u64) < self.p {
                return;
            }
        }
        if dominates_mask(self.adj, included, self.p) {
            self.best = included;
            return;
        }
        let Some(v) = (next..n).find(|&v| undecided >> v & 1 == 1) else {
            return;
        };
        self.run(v + 1, included, excluded | 1 << v);
        self.run(v + 1, included | 1 << v, excluded);
    }
}
