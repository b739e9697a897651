//! Value types shared by every other module: simple graphs, multiples of a
//! path, linear forests and walks in a product.
//!
//! Path vertices are 1-indexed (`u_1..u_m`), layer graphs are 0-indexed.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Undirected loopless graph on the vertices `0..order`.
///
/// Equality is equality of the vertex-labelled edge set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    adj: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl SimpleGraph {
    pub fn new(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if order == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut adj = vec![Vec::new(); order];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= order {
                    return Err(Error::VertexOutOfRange { vertex: w, order });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if adj[u].contains(&v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(SimpleGraph { adj })
    }

    /// `nK_1`.
    pub fn empty(order: usize) -> Self {
        SimpleGraph {
            adj: vec![Vec::new(); order.max(1)],
        }
    }

    /// `P_n` on `0-1-...-(n-1)`.
    pub fn path(order: usize) -> Self {
        let edges: Vec<_> = (1..order).map(|v| (v - 1, v)).collect();
        Self::new(order.max(1), &edges).expect("path edges are valid")
    }

    /// `C_n`, `n >= 3`.
    pub fn cycle(order: usize) -> Self {
        assert!(order >= 3, "a cycle needs at least 3 vertices");
        let mut edges: Vec<_> = (1..order).map(|v| (v - 1, v)).collect();
        edges.push((0, order - 1));
        Self::new(order, &edges).expect("cycle edges are valid")
    }

    /// `K_n`.
    pub fn complete(order: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..order {
            for v in u + 1..order {
                edges.push((u, v));
            }
        }
        Self::new(order.max(1), &edges).expect("complete graph edges are valid")
    }

    /// `K_{1,leaves}` with centre 0.
    pub fn star(leaves: usize) -> Self {
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Self::new(leaves + 1, &edges).expect("star edges are valid")
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adj[v].len())
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            })
        }
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// A copy of this graph with the edge `uv` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        let mut edges: Vec<_> = self.edges().collect();
        edges.push((u, v));
        Self::new(self.order(), &edges)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.order() {
            return Err(Error::Precondition("permutation length differs from order".into()));
        }
        let edges: Vec<_> = self.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        Self::new(self.order(), &edges)
    }

    /// Neighbourhood bitmasks, available for graphs of order at most 64.
    pub fn adjacency_masks(&self) -> Option<Vec<u64>> {
        if self.order() > 64 {
            return None;
        }
        Some(
            self.adj
                .iter()
                .map(|list| list.iter().fold(0u64, |m, &v| m | (1 << v)))
                .collect(),
        )
    }

    /// Connected components, each as a sorted vertex list, ordered by lowest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order()];
        let mut out = Vec::new();
        for s in 0..self.order() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for &w in &self.adj[v] {
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

    /// Subgraph induced by `vertices`; vertex `vertices[i]` becomes `i`.
    pub fn induced(&self, vertices: &[usize]) -> Self {
        let mut index = vec![usize::MAX; self.order()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges: Vec<_> = self
            .edges()
            .filter(|&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|(u, v)| (index[u], index[v]))
            .collect();
        Self::new(vertices.len(), &edges).expect("induced subgraph is simple")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

/// `g1 + g2`: vertices of `g2` are shifted by `g1.order()`.
pub fn disjoint_union(g1: &SimpleGraph, g2: &SimpleGraph) -> SimpleGraph {
    let shift = g1.order();
    let edges: Vec<_> = g1
        .edges()
        .chain(g2.edges().map(|(u, v)| (u + shift, v + shift)))
        .collect();
    SimpleGraph::new(g1.order() + g2.order(), &edges).expect("disjoint union is simple")
}

impl Serialize for SimpleGraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphJson {
            n: self.order(),
            edges: self.edges().map(|(u, v)| [u, v]).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SimpleGraph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = GraphJson::deserialize(d)?;
        let edges: Vec<_> = raw.edges.iter().map(|e| (e[0], e[1])).collect();
        SimpleGraph::new(raw.n, &edges).map_err(serde::de::Error::custom)
    }
}

/// A multiple of the path `u_1 u_2 ... u_m`: edge multiplicities along the
/// path plus loop counts at every vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "MultipleJson")]
pub struct PathMultigraph {
    mult: Vec<usize>,
    loops: Vec<usize>,
}

#[derive(Deserialize)]
struct MultipleJson {
    mult: Vec<usize>,
    loops: Vec<usize>,
}

impl TryFrom<MultipleJson> for PathMultigraph {
    type Error = Error;
    fn try_from(raw: MultipleJson) -> Result<Self> {
        PathMultigraph::new(raw.mult, raw.loops)
    }
}

impl PathMultigraph {
    /// `mult[j]` is the multiplicity of `e_{j+1} = u_{j+1} u_{j+2}`, `loops[i]`
    /// the loop count at `u_{i+1}`.
    pub fn new(mult: Vec<usize>, loops: Vec<usize>) -> Result<Self> {
        if loops.is_empty() {
            return Err(Error::Precondition("a path multiple needs at least one vertex".into()));
        }
        if mult.len() + 1 != loops.len() {
            return Err(Error::Precondition(format!(
                "{} multiplicities for {} path vertices",
                mult.len(),
                loops.len()
            )));
        }
        Ok(PathMultigraph { mult, loops })
    }

    pub fn m(&self) -> usize {
        self.loops.len()
    }

    pub fn mult(&self) -> &[usize] {
        &self.mult
    }

    pub fn loops(&self) -> &[usize] {
        &self.loops
    }

    /// Multiplicity of `e_j`, 1-based.
    pub fn edge_mult(&self, j: usize) -> usize {
        self.mult[j - 1]
    }

    /// Loop count at `u_i`, 1-based.
    pub fn loops_at(&self, i: usize) -> usize {
        self.loops[i - 1]
    }

    /// `d(u_i) = m(e_{i-1}) + m(e_i) + 2 l(u_i)`.
    pub fn degree(&self, i: usize) -> Result<usize> {
        if i == 0 || i > self.m() {
            return Err(Error::LayerOutOfRange { index: i, m: self.m() });
        }
        Ok(self.loopless_degree(i) + 2 * self.loops[i - 1])
    }

    /// Degree once all loops are removed.
    pub fn loopless_degree(&self, i: usize) -> usize {
        let left = if i >= 2 { self.mult[i - 2] } else { 0 };
        let right = if i < self.m() { self.mult[i - 1] } else { 0 };
        left + right
    }

    pub fn is_connected(&self) -> bool {
        self.mult.iter().all(|&c| c >= 1)
    }

    pub fn total_mult(&self) -> usize {
        self.mult.iter().sum()
    }

    pub fn total_loops(&self) -> usize {
        self.loops.iter().sum()
    }

    /// Same multiple with `u_i` relabelled `u_{m+1-i}`.
    pub fn reflected(&self) -> Self {
        let mut mult = self.mult.clone();
        let mut loops = self.loops.clone();
        mult.reverse();
        loops.reverse();
        PathMultigraph { mult, loops }
    }
}

/// Spanning linear forest of a graph on `0..host_order`.
///
/// Components are stored canonically: each oriented so that its first vertex
/// is the smaller endpoint, and the list sorted by lowest vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearForest {
    host_order: usize,
    components: Vec<Vec<usize>>,
}

impl LinearForest {
    pub fn new(host_order: usize, components: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; host_order];
        for comp in &components {
            if comp.is_empty() {
                return Err(Error::InvalidForest("empty component".into()));
            }
            for &v in comp {
                if v >= host_order {
                    return Err(Error::VertexOutOfRange {
                        vertex: v,
                        order: host_order,
                    });
                }
                if seen[v] {
                    return Err(Error::InvalidForest(format!("vertex {v} covered twice")));
                }
                seen[v] = true;
            }
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(Error::InvalidForest(format!("vertex {v} not covered")));
        }
        let mut components: Vec<Vec<usize>> = components
            .into_iter()
            .map(|mut c| {
                if c.last() < c.first() {
                    c.reverse();
                }
                c
            })
            .collect();
        components.sort_by_key(|c| *c.iter().min().expect("non-empty"));
        Ok(LinearForest { host_order, components })
    }

    /// `nK_1`: every vertex its own component.
    pub fn singletons(host_order: usize) -> Self {
        LinearForest {
            host_order,
            components: (0..host_order).map(|v| vec![v]).collect(),
        }
    }

    /// Builds the forest spanned by `edges`; fails if they do not form a linear forest.
    pub fn from_edges(host_order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut nbrs = vec![Vec::with_capacity(2); host_order];
        for &(u, v) in edges {
            if u >= host_order || v >= host_order {
                return Err(Error::VertexOutOfRange {
                    vertex: u.max(v),
                    order: host_order,
                });
            }
            nbrs[u].push(v);
            nbrs[v].push(u);
            if nbrs[u].len() > 2 || nbrs[v].len() > 2 {
                return Err(Error::InvalidForest("vertex of degree 3".into()));
            }
        }
        let mut seen = vec![false; host_order];
        let mut components = Vec::new();
        for s in 0..host_order {
            if seen[s] || nbrs[s].len() == 2 {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let (mut prev, mut cur) = (usize::MAX, s);
            while let Some(&next) = nbrs[cur].iter().find(|&&w| w != prev) {
                if seen[next] {
                    break;
                }
                seen[next] = true;
                comp.push(next);
                prev = cur;
                cur = next;
            }
            components.push(comp);
        }
        if seen.iter().any(|&s| !s) {
            return Err(Error::InvalidForest("edges contain a cycle".into()));
        }
        Self::new(host_order, components)
    }

    pub fn host_order(&self) -> usize {
        self.host_order
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn edge_count(&self) -> usize {
        self.host_order - self.components.len()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<_> = self
            .components
            .iter()
            .flat_map(|c| c.windows(2).map(|w| (w[0].min(w[1]), w[0].max(w[1]))))
            .collect();
        out.sort_unstable();
        out
    }

    /// Index of the component containing `v`.
    pub fn component_of(&self, v: usize) -> Option<usize> {
        self.components.iter().position(|c| c.contains(&v))
    }

    /// Number of forest edges at `v`.
    pub fn forest_degree(&self, v: usize) -> usize {
        self.components
            .iter()
            .find_map(|c| {
                let pos = c.iter().position(|&w| w == v)?;
                Some(usize::from(pos > 0) + usize::from(pos + 1 < c.len()))
            })
            .unwrap_or(0)
    }

    /// Every forest edge is an edge of `h` and the host orders agree.
    pub fn is_subgraph_of(&self, h: &SimpleGraph) -> bool {
        self.host_order == h.order() && self.edges().iter().all(|&(u, v)| h.has_edge(u, v))
    }
}

/// Vertex `(u_layer, inner)` of the product; `layer` is 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[usize; 2]", into = "[usize; 2]")]
pub struct ProductVertex {
    pub layer: usize,
    pub inner: usize,
}

impl ProductVertex {
    pub fn new(layer: usize, inner: usize) -> Self {
        ProductVertex { layer, inner }
    }
}

impl From<[usize; 2]> for ProductVertex {
    fn from(p: [usize; 2]) -> Self {
        ProductVertex::new(p[0], p[1])
    }
}

impl From<ProductVertex> for [usize; 2] {
    fn from(p: ProductVertex) -> Self {
        [p.layer, p.inner]
    }
}

impl fmt::Display for ProductVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.layer, self.inner)
    }
}

/// Parses `"layer:inner"`.
impl FromStr for ProductVertex {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (l, i) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected layer:inner, got {s:?}")))?;
        let layer = l
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad layer in {s:?}")))?;
        let inner = i
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad inner vertex in {s:?}")))?;
        Ok(ProductVertex { layer, inner })
    }
}

/// Candidate Hamiltonian cycle (`closed`) or path in a product.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductWalk {
    pub closed: bool,
    #[serde(rename = "walk")]
    pub vertices: Vec<ProductVertex>,
}

impl ProductWalk {
    pub fn new(vertices: Vec<ProductVertex>, closed: bool) -> Self {
        ProductWalk { closed, vertices }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn reversed(&self) -> Self {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        ProductWalk {
            closed: self.closed,
            vertices,
        }
    }

    /// Consecutive pairs, including the wrap-around pair of a closed walk.
    pub fn steps(&self) -> impl Iterator<Item = (ProductVertex, ProductVertex)> + '_ {
        let wrap =
            (self.closed && self.vertices.len() >= 2).then(|| (*self.vertices.last().unwrap(), self.vertices[0]));
        self.vertices.windows(2).map(|w| (w[0], w[1])).chain(wrap)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("walk serialization cannot fail")
    }
}
