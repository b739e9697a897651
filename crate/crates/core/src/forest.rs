//! Exact maximum spanning linear forests, i.e. `pi(H)`, and the budgeted
//! forests the witness builder substitutes into Euler trails.
//!
//! `pi(H) = n - (minimum number of vertex-disjoint paths covering H)`, so the
//! problem is as hard as Hamiltonian path detection. Every connected
//! component is solved separately: a subset dynamic program for components
//! of order at most [`ExactLimits::dp_max_order`], branch-and-bound over edge
//! subsets for slightly larger sparse components, and a refusal beyond that.

use crate::error::{Error, Result};
use crate::graph::{LinearForest, SimpleGraph};

/// Size limits of the exact search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExactLimits {
    /// Largest component order handled by the subset dynamic program.
    pub dp_max_order: usize,
    /// Largest component order handled by branch-and-bound.
    pub search_max_order: usize,
    /// Largest component edge count handled by branch-and-bound.
    pub search_max_edges: usize,
    /// Search-tree node budget for branch-and-bound.
    pub search_node_budget: u64,
}

/// Hard ceiling for the dynamic program (its tables have `2^order` entries).
pub const DP_HARD_LIMIT: usize = 26;

impl Default for ExactLimits {
    fn default() -> Self {
        ExactLimits {
            dp_max_order: 20,
            search_max_order: 24,
            search_max_edges: 48,
            search_node_budget: 50_000_000,
        }
    }
}

impl ExactLimits {
    /// Defaults overridden by `LEXHAM_DP_MAX_ORDER`, `LEXHAM_SEARCH_MAX_ORDER`
    /// and `LEXHAM_SEARCH_MAX_EDGES` when set.
    pub fn from_env() -> Self {
        fn var(name: &str) -> Option<usize> {
            std::env::var(name).ok()?.trim().parse().ok()
        }
        let mut limits = ExactLimits::default();
        if let Some(v) = var("LEXHAM_DP_MAX_ORDER") {
            limits.dp_max_order = v.min(DP_HARD_LIMIT);
        }
        if let Some(v) = var("LEXHAM_SEARCH_MAX_ORDER") {
            limits.search_max_order = v;
        }
        if let Some(v) = var("LEXHAM_SEARCH_MAX_EDGES") {
            limits.search_max_edges = v;
        }
        limits
    }
}

/// A maximum spanning linear forest of `h` under the default limits.
pub fn max_linear_forest(h: &SimpleGraph) -> Result<LinearForest> {
    max_linear_forest_with(h, &ExactLimits::default())
}

pub fn max_linear_forest_with(h: &SimpleGraph, limits: &ExactLimits) -> Result<LinearForest> {
    let mut edges = Vec::new();
    for comp in h.components() {
        if comp.len() == 1 {
            continue;
        }
        let sub = h.induced(&comp);
        let local = if sub.order() <= limits.dp_max_order.min(DP_HARD_LIMIT) {
            subset_dp_forest(&sub)
        } else if sub.order() <= limits.search_max_order && sub.size() <= limits.search_max_edges {
            branch_and_bound_forest(&sub, limits.search_node_budget)?
        } else {
            return Err(Error::InstanceTooLarge {
                what: format!(
                    "connected component with {} vertices and {} edges",
                    sub.order(),
                    sub.size()
                ),
                limit: if sub.order() <= limits.search_max_order {
                    limits.search_max_edges
                } else {
                    limits.search_max_order
                },
            });
        };
        edges.extend(local.into_iter().map(|(u, v)| (comp[u], comp[v])));
    }
    LinearForest::from_edges(h.order(), &edges)
}

/// `pi(h)`: edge count of a maximum spanning linear forest.
pub fn pi(h: &SimpleGraph) -> Result<usize> {
    Ok(max_linear_forest(h)?.edge_count())
}

pub fn pi_with(h: &SimpleGraph, limits: &ExactLimits) -> Result<usize> {
    Ok(max_linear_forest_with(h, limits)?.edge_count())
}

/// Minimum path cover over vertex subsets.
///
/// `cover[S]` is the fewest paths covering `H[S]`; `ends[S]` is the set of
/// vertices that are a path endpoint in at least one optimal cover of `S`.
/// Peeling an endpoint `u` off `S` either leaves it as a singleton path or
/// attaches it to an endpoint of an optimal cover of `S - u`.
fn subset_dp_forest(h: &SimpleGraph) -> Vec<(usize, usize)> {
    let n = h.order();
    let adj: Vec<u32> = h
        .adjacency_masks()
        .expect("dp order is below 64")
        .into_iter()
        .map(|m| m as u32)
        .collect();
    let size = 1usize << n;
    let mut cover = vec![0u8; size];
    let mut ends = vec![0u32; size];
    for mask in 1..size {
        let mut best = u8::MAX;
        let mut set = 0u32;
        let mut bits = mask as u32;
        while bits != 0 {
            let u = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let rest = mask ^ (1 << u);
            let g = cover[rest] + u8::from(adj[u] & ends[rest] == 0);
            if g < best {
                best = g;
                set = 1 << u;
            } else if g == best {
                set |= 1 << u;
            }
        }
        cover[mask] = best;
        ends[mask] = set;
    }

    let mut edges = Vec::with_capacity(n);
    let mut mask = size - 1;
    let mut required: Option<usize> = None;
    while mask != 0 {
        let u = required.unwrap_or_else(|| ends[mask].trailing_zeros() as usize);
        let rest = mask ^ (1 << u);
        let attach = adj[u] & ends[rest];
        if attach != 0 {
            let w = attach.trailing_zeros() as usize;
            edges.push((u.min(w), u.max(w)));
            required = Some(w);
        } else {
            required = None;
        }
        mask = rest;
    }
    edges
}

struct EdgeSearch {
    edges: Vec<(usize, usize)>,
    target: usize,
    degree: Vec<usize>,
    open_incident: Vec<usize>,
    parent: Vec<usize>,
    rank: Vec<usize>,
    chosen: Vec<usize>,
    best: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl EdgeSearch {
    fn find(&self, mut v: usize) -> usize {
        while self.parent[v] != v {
            v = self.parent[v];
        }
        v
    }

    fn upper_bound(&self) -> usize {
        let slots: usize = (0..self.degree.len())
            .map(|v| (2 - self.degree[v]).min(self.open_incident[v]))
            .sum();
        self.chosen.len() + (slots / 2).min(self.target - self.chosen.len())
    }

    fn run(&mut self, idx: usize) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::InstanceTooLarge {
                what: "branch-and-bound node budget exhausted".into(),
                limit: self.budget as usize,
            });
        }
        if self.chosen.len() > self.best.len() {
            self.best = self.chosen.clone();
        }
        if self.best.len() == self.target || idx == self.edges.len() {
            return Ok(());
        }
        if self.upper_bound() <= self.best.len() {
            return Ok(());
        }
        let (u, v) = self.edges[idx];
        self.open_incident[u] -= 1;
        self.open_incident[v] -= 1;
        if self.degree[u] < 2 && self.degree[v] < 2 {
            let (ru, rv) = (self.find(u), self.find(v));
            if ru != rv {
                let (hi, lo) = if self.rank[ru] >= self.rank[rv] {
                    (ru, rv)
                } else {
                    (rv, ru)
                };
                let bumped = self.rank[hi] == self.rank[lo];
                self.parent[lo] = hi;
                if bumped {
                    self.rank[hi] += 1;
                }
                self.degree[u] += 1;
                self.degree[v] += 1;
                self.chosen.push(idx);
                let res = self.run(idx + 1);
                self.chosen.pop();
                self.degree[u] -= 1;
                self.degree[v] -= 1;
                if bumped {
                    self.rank[hi] -= 1;
                }
                self.parent[lo] = lo;
                res?;
            }
        }
        if self.best.len() < self.target {
            self.run(idx + 1)?;
        }
        self.open_incident[u] += 1;
        self.open_incident[v] += 1;
        Ok(())
    }
}

fn branch_and_bound_forest(h: &SimpleGraph, budget: u64) -> Result<Vec<(usize, usize)>> {
    let n = h.order();
    let edges: Vec<_> = h.edges().collect();
    let mut search = EdgeSearch {
        target: n - 1,
        degree: vec![0; n],
        open_incident: (0..n).map(|v| h.neighbors(v).len()).collect(),
        parent: (0..n).collect(),
        rank: vec![0; n],
        chosen: Vec::new(),
        best: Vec::new(),
        nodes: 0,
        budget,
        edges,
    };
    search.run(0)?;
    Ok(search.best.iter().map(|&i| search.edges[i]).collect())
}

/// Requirements on a budgeted forest.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ForestConstraints {
    /// Required number of forest edges.
    pub exact_edges: usize,
    /// Vertices that must have forest degree at most 1.
    pub terminal_vertices: Vec<usize>,
    /// Two vertices that must end up in different components.
    pub separated_pair: Option<(usize, usize)>,
}

/// A spanning linear forest of `h` with exactly `c.exact_edges` edges that
/// satisfies the terminal and separation constraints.
///
/// Starts from the maximum forest, cuts the fewest edges needed for the
/// separation and terminal constraints, then removes end edges of the largest
/// components until the edge count matches.
pub fn constrained_forest(h: &SimpleGraph, c: &ForestConstraints) -> Result<LinearForest> {
    check_constraint_vertices(h, &c.terminal_vertices, c.separated_pair)?;
    let base = max_linear_forest(h)?;
    let cut = cut_for_constraints(&base, &c.terminal_vertices, c.separated_pair);
    if cut.edge_count() < c.exact_edges {
        return Err(Error::InfeasibleConstraints(format!(
            "{} edges requested, at most {} available under the constraints (pi = {})",
            c.exact_edges,
            cut.edge_count(),
            base.edge_count()
        )));
    }
    Ok(trim_to_edge_count(&cut, c.exact_edges))
}

/// Largest edge count [`constrained_forest`] can deliver for these constraints.
pub fn constrained_capacity(
    h: &SimpleGraph,
    terminal_vertices: &[usize],
    separated_pair: Option<(usize, usize)>,
) -> Result<usize> {
    check_constraint_vertices(h, terminal_vertices, separated_pair)?;
    let base = max_linear_forest(h)?;
    Ok(cut_for_constraints(&base, terminal_vertices, separated_pair).edge_count())
}

fn check_constraint_vertices(h: &SimpleGraph, terminals: &[usize], pair: Option<(usize, usize)>) -> Result<()> {
    for &v in terminals {
        h.check_vertex(v)?;
    }
    if let Some((x, y)) = pair {
        h.check_vertex(x)?;
        h.check_vertex(y)?;
        if x == y {
            return Err(Error::InfeasibleConstraints(format!(
                "vertex {x} cannot be separated from itself"
            )));
        }
    }
    Ok(())
}

/// Applies the separation cut, then one cut per terminal vertex of forest degree 2.
pub fn cut_for_constraints(forest: &LinearForest, terminals: &[usize], pair: Option<(usize, usize)>) -> LinearForest {
    let mut comps: Vec<Vec<usize>> = forest.components().to_vec();
    if let Some((x, y)) = pair {
        if let Some(ci) = comps.iter().position(|c| c.contains(&x) && c.contains(&y)) {
            let comp = comps.swap_remove(ci);
            let px = comp.iter().position(|&v| v == x).unwrap();
            let py = comp.iter().position(|&v| v == y).unwrap();
            let (i, j, need_i, need_j) = if px < py {
                (px, py, terminals.contains(&x), terminals.contains(&y))
            } else {
                (py, px, terminals.contains(&y), terminals.contains(&x))
            };
            let last = comp.len() - 1;
            // Cutting after position t leaves p_i in p_0..p_t and p_j in p_{t+1}..p_last.
            let single = (i..j).find(|&t| (!need_i || i == 0 || i == t) && (!need_j || j == last || j == t + 1));
            let cuts: Vec<usize> = match single {
                Some(t) => vec![t],
                None => vec![i, j - 1],
            };
            let mut start = 0;
            for t in cuts {
                comps.push(comp[start..=t].to_vec());
                start = t + 1;
            }
            comps.push(comp[start..].to_vec());
        }
    }
    for &v in terminals {
        let Some(ci) = comps.iter().position(|c| c.contains(&v)) else {
            continue;
        };
        let pos = comps[ci].iter().position(|&w| w == v).unwrap();
        if pos > 0 && pos + 1 < comps[ci].len() {
            let tail = comps[ci].split_off(pos + 1);
            comps.push(tail);
        }
    }
    LinearForest::new(forest.host_order(), comps).expect("cuts preserve the partition")
}

/// Removes end edges, always from the largest component (lowest index on
/// ties, last edge first), until `exact_edges` remain.
pub fn trim_to_edge_count(forest: &LinearForest, exact_edges: usize) -> LinearForest {
    let mut current = forest.clone();
    while current.edge_count() > exact_edges {
        let mut comps = current.components().to_vec();
        let longest = comps.iter().map(Vec::len).max().unwrap_or(0);
        let ci = comps.iter().position(|c| c.len() == longest).unwrap();
        let tail = comps[ci].pop().unwrap();
        comps.push(vec![tail]);
        current = LinearForest::new(current.host_order(), comps).expect("trimming preserves the partition");
    }
    current
}
