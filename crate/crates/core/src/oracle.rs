//! Brute-force ground truth for small graphs, sharing no code with the
//! constructive side.
//!
//! Hamiltonian cycles and paths are searched by a pruned depth-first search
//! under a node budget; when the budget runs out on graphs of at most
//! [`OracleLimits::dp_max_order`] vertices a Held-Karp bitset dynamic program
//! settles the question exactly. Larger graphs additionally get a seeded
//! rotation-extension search for cycles and paths; a negative answer there is
//! reported as [`Error::InstanceTooLarge`].

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleLimits {
    /// Largest order handled by the exact dynamic program.
    pub dp_max_order: usize,
    /// Largest order for the all-pairs connectivity check.
    pub connected_max_order: usize,
    /// Nodes the search may expand before falling back to the dynamic program.
    pub search_budget_small: u64,
    /// Nodes the search may expand on graphs beyond the dynamic program.
    pub search_budget_large: u64,
    /// Rotation-extension restarts and steps per restart.
    pub rotation_restarts: u64,
    pub rotation_steps: u64,
    /// `brute_pi` accepts graphs with at most this many vertices ...
    pub pi_max_order: usize,
    /// ... or at most this many edges.
    pub pi_max_edges: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            dp_max_order: 22,
            connected_max_order: 16,
            search_budget_small: 20_000,
            search_budget_large: 2_000_000,
            rotation_restarts: 64,
            rotation_steps: 200_000,
            pi_max_order: 14,
            pi_max_edges: 28,
        }
    }
}

/// `pi(h)` by include/exclude enumeration of edges.
pub fn brute_pi(h: &SimpleGraph) -> Result<usize> {
    let limits = OracleLimits::default();
    if h.order() > limits.pi_max_order && h.size() > limits.pi_max_edges {
        return Err(Error::InstanceTooLarge {
            what: format!("brute pi on {} vertices and {} edges", h.order(), h.size()),
            limit: limits.pi_max_edges,
        });
    }
    let n = h.order();
    let mut e = EdgeEnum {
        edges: h.edges().collect(),
        deg: vec![0; n],
        other_end: (0..n).collect(),
        best: 0,
        cap: n - 1,
    };
    e.go(0, 0);
    Ok(e.best)
}

struct EdgeEnum {
    edges: Vec<(usize, usize)>,
    deg: Vec<u8>,
    /// For a path end `v`, the opposite end of its path (itself when isolated).
    other_end: Vec<usize>,
    best: usize,
    cap: usize,
}

impl EdgeEnum {
    fn go(&mut self, i: usize, taken: usize) {
        if taken > self.best {
            self.best = taken;
        }
        if self.best == self.cap || i == self.edges.len() || taken + (self.edges.len() - i) <= self.best {
            return;
        }
        let (u, v) = self.edges[i];
        if self.deg[u] < 2 && self.deg[v] < 2 && self.other_end[u] != v {
            let (a, b) = (self.other_end[u], self.other_end[v]);
            self.deg[u] += 1;
            self.deg[v] += 1;
            self.other_end[a] = b;
            self.other_end[b] = a;
            self.go(i + 1, taken + 1);
            self.other_end[a] = u;
            self.other_end[b] = v;
            // Restore the ends' own pointers when u or v was isolated.
            self.other_end[u] = a;
            self.other_end[v] = b;
            self.deg[u] -= 1;
            self.deg[v] -= 1;
        }
        self.go(i + 1, taken);
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Shape {
    Cycle,
    Path,
    Between(usize, usize),
}

fn masks(g: &SimpleGraph) -> Result<Vec<u64>> {
    g.adjacency_masks().ok_or(Error::InstanceTooLarge {
        what: format!("oracle search on {} vertices", g.order()),
        limit: 64,
    })
}

pub fn brute_hamiltonian(g: &SimpleGraph) -> Result<bool> {
    if g.order() < 3 {
        return Ok(false);
    }
    solve(g, Shape::Cycle, &OracleLimits::default())
}

pub fn brute_traceable(g: &SimpleGraph) -> Result<bool> {
    if g.order() == 1 {
        return Ok(true);
    }
    solve(g, Shape::Path, &OracleLimits::default())
}

/// A Hamiltonian path from `x` to `y`.
pub fn brute_xy_path(g: &SimpleGraph, x: usize, y: usize) -> Result<bool> {
    g.check_vertex(x)?;
    g.check_vertex(y)?;
    if x == y {
        return Ok(g.order() == 1);
    }
    solve(g, Shape::Between(x, y), &OracleLimits::default())
}

/// Every pair of distinct vertices is joined by a Hamiltonian path.
///
/// Beyond [`OracleLimits::connected_max_order`] vertices only a negative
/// answer (via a missing Hamiltonian cycle) can be given.
pub fn brute_ham_connected(g: &SimpleGraph) -> Result<bool> {
    let limits = OracleLimits::default();
    let n = g.order();
    if n > limits.connected_max_order {
        // With at least 3 vertices, a u-v path for an edge uv closes into a cycle.
        if !brute_hamiltonian(g)? {
            return Ok(false);
        }
        return Err(Error::InstanceTooLarge {
            what: format!("all-pairs search on {n} vertices"),
            limit: limits.connected_max_order,
        });
    }
    let adj = masks(g)?;
    for x in 0..n {
        let dp = held_karp(&adj, Some(x));
        let full = (1usize << n) - 1;
        let reach = dp[full];
        let others = ((1u64 << n) - 1) & !(1 << x);
        if reach & others != others {
            return Ok(false);
        }
    }
    Ok(true)
}

fn solve(g: &SimpleGraph, shape: Shape, limits: &OracleLimits) -> Result<bool> {
    let n = g.order();
    let adj = masks(g)?;
    let budget = if n <= limits.dp_max_order {
        limits.search_budget_small
    } else {
        limits.search_budget_large
    };
    if let Some(found) = Search::run(&adj, shape, budget) {
        return Ok(found);
    }
    if n > limits.dp_max_order {
        if shape != Shape::Cycle && shape != Shape::Path {
            return Err(Error::InstanceTooLarge {
                what: format!("search budget exhausted on {n} vertices"),
                limit: limits.dp_max_order,
            });
        }
        if (0..limits.rotation_restarts).any(|seed| rotate_extend(&adj, shape, seed, limits.rotation_steps)) {
            return Ok(true);
        }
        return Err(Error::InstanceTooLarge {
            what: format!("search budget exhausted on {n} vertices"),
            limit: limits.dp_max_order,
        });
    }
    let full = (1usize << n) - 1;
    Ok(match shape {
        Shape::Cycle => held_karp(&adj, Some(0))[full] & adj[0] != 0,
        Shape::Path => held_karp(&adj, None)[full] != 0,
        Shape::Between(x, y) => held_karp(&adj, Some(x))[full] >> y & 1 == 1,
    })
}

/// Posa-style search: extend the path from its tail when possible, otherwise
/// rotate it around a random tail neighbour. Only ever proves existence.
fn rotate_extend(adj: &[u64], shape: Shape, seed: u64, steps: u64) -> bool {
    let n = adj.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let first = match shape {
        Shape::Cycle => 0,
        _ => rng.gen_range(0..n),
    };
    let mut path = vec![first];
    let mut visited = 1u64 << first;
    let neighbours = |v: usize| -> Vec<usize> { (0..n).filter(|&u| adj[v] >> u & 1 == 1).collect() };
    for _ in 0..steps {
        let tail = *path.last().unwrap();
        if path.len() == n && (shape == Shape::Path || adj[tail] >> path[0] & 1 == 1) {
            return true;
        }
        let fresh: Vec<usize> = neighbours(tail)
            .into_iter()
            .filter(|&u| visited >> u & 1 == 0)
            .collect();
        if let Some(&u) = fresh.choose(&mut rng) {
            path.push(u);
            visited |= 1 << u;
            continue;
        }
        // Tail neighbour path[i] (not the predecessor): reverse path[i+1..].
        let len = path.len();
        let pivots: Vec<usize> = (0..len.saturating_sub(2))
            .filter(|&i| adj[tail] >> path[i] & 1 == 1)
            .collect();
        match pivots.choose(&mut rng) {
            Some(&i) => path[i + 1..].reverse(),
            None => return false,
        }
    }
    false
}

/// `dp[S]`: vertices `v` such that some path covering exactly `S` ends at `v`
/// (and starts at `start`, when given).
fn held_karp(adj: &[u64], start: Option<usize>) -> Vec<u64> {
    let n = adj.len();
    let mut dp = vec![0u64; 1 << n];
    match start {
        Some(s) => dp[1 << s] = 1 << s,
        None => (0..n).for_each(|v| dp[1 << v] = 1 << v),
    }
    for mask in 1usize..1 << n {
        if mask.is_power_of_two() {
            continue;
        }
        if let Some(s) = start {
            if mask >> s & 1 == 0 {
                continue;
            }
        }
        let mut ends = 0u64;
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if Some(v) != start && adj[v] & dp[mask ^ (1 << v)] != 0 {
                ends |= 1 << v;
            }
        }
        dp[mask] = ends;
    }
    dp
}

struct Search<'a> {
    adj: &'a [u64],
    shape: Shape,
    start: usize,
    full: u64,
    nodes: u64,
    budget: u64,
}

impl<'a> Search<'a> {
    /// `Some(answer)` when settled within the budget.
    fn run(adj: &'a [u64], shape: Shape, budget: u64) -> Option<bool> {
        let n = adj.len();
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let mut s = Search {
            adj,
            shape,
            start: 0,
            full,
            nodes: 0,
            budget,
        };
        let starts: Vec<usize> = match shape {
            Shape::Cycle => vec![0],
            Shape::Between(x, _) => vec![x],
            Shape::Path => (0..n).collect(),
        };
        for v in starts {
            s.start = v;
            match s.dfs(v, 1 << v) {
                Some(true) => return Some(true),
                Some(false) => {}
                None => return None,
            }
        }
        Some(false)
    }

    fn dfs(&mut self, cur: usize, visited: u64) -> Option<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return None;
        }
        let unvisited = self.full & !visited;
        if unvisited == 0 {
            return Some(match self.shape {
                Shape::Cycle => self.adj[cur] >> self.start & 1 == 1,
                Shape::Path => true,
                Shape::Between(_, y) => cur == y,
            });
        }
        if !self.viable(cur, unvisited) {
            return Some(false);
        }
        let mut next = self.adj[cur] & unvisited;
        if let Shape::Between(_, y) = self.shape {
            if unvisited != 1 << y {
                next &= !(1 << y);
            }
        }
        let mut order: Vec<(u32, usize)> = Vec::new();
        while next != 0 {
            let v = next.trailing_zeros() as usize;
            next &= next - 1;
            order.push(((self.adj[v] & unvisited).count_ones(), v));
        }
        order.sort_unstable();
        for (_, v) in order {
            if self.dfs(v, visited | 1 << v)? {
                return Some(true);
            }
        }
        Some(false)
    }

    /// Degree and connectivity pruning on the unvisited remainder.
    fn viable(&self, cur: usize, unvisited: u64) -> bool {
        let closing = match self.shape {
            Shape::Cycle => 1u64 << self.start,
            _ => 0,
        };
        let end = match self.shape {
            Shape::Between(_, y) => Some(y),
            _ => None,
        };
        let mut weak = 0;
        let mut rest = unvisited;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let avail = (self.adj[v] & (unvisited | 1 << cur | closing)).count_ones();
            if avail == 0 {
                return false;
            }
            if avail < 2 && Some(v) != end {
                weak += 1;
            }
        }
        let allowed_weak = match self.shape {
            Shape::Path => 1,
            _ => 0,
        };
        if weak > allowed_weak {
            return false;
        }
        // The remainder plus the current vertex must be connected.
        let region = unvisited | 1 << cur;
        let mut seen = 1u64 << cur;
        let mut frontier = seen;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = self.adj[v] & region & !seen;
            seen |= fresh;
            frontier |= fresh;
        }
        seen == region
    }
}
