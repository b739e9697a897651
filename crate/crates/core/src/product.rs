//! The generalized lexicographic product `P_m[H_1, ..., H_m]`.
//!
//! Product vertex `(i, h)` (layer `i` in `1..=m`, inner vertex `h` in `0..n`)
//! has the row-major flat index `(i - 1) * n + h`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{ProductVertex, SimpleGraph};

/// Path length plus one equal-order layer graph per path vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SpecJson", into = "SpecJson")]
pub struct ProductSpec {
    layers: Vec<SimpleGraph>,
}

/// `{"m": .., "layers": [..]}` or the uniform shorthand `{"m": .., "layer": ..}`.
#[derive(Serialize, Deserialize)]
struct SpecJson {
    m: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    layers: Option<Vec<SimpleGraph>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    layer: Option<SimpleGraph>,
}

impl TryFrom<SpecJson> for ProductSpec {
    type Error = Error;
    fn try_from(raw: SpecJson) -> Result<Self> {
        match (raw.layers, raw.layer) {
            (Some(layers), None) => {
                if layers.len() != raw.m {
                    return Err(Error::Parse(format!("m = {} but {} layers given", raw.m, layers.len())));
                }
                ProductSpec::new(layers)
            }
            (None, Some(layer)) => ProductSpec::uniform(raw.m, layer),
            _ => Err(Error::Parse(
                "exactly one of \"layers\" or \"layer\" is required".into(),
            )),
        }
    }
}

impl From<ProductSpec> for SpecJson {
    fn from(spec: ProductSpec) -> Self {
        SpecJson {
            m: spec.m(),
            layers: Some(spec.layers),
            layer: None,
        }
    }
}

impl ProductSpec {
    pub fn new(layers: Vec<SimpleGraph>) -> Result<Self> {
        let Some(first) = layers.first() else {
            return Err(Error::Precondition("the path needs at least one vertex".into()));
        };
        let n = first.order();
        if let Some((i, h)) = layers.iter().enumerate().find(|(_, h)| h.order() != n) {
            return Err(Error::UnequalLayerOrders {
                layer: i + 1,
                expected: n,
                found: h.order(),
            });
        }
        Ok(ProductSpec { layers })
    }

    /// `P_m[H]`: every layer equal to `h`.
    pub fn uniform(m: usize, h: SimpleGraph) -> Result<Self> {
        Self::new(vec![h; m])
    }

    pub fn m(&self) -> usize {
        self.layers.len()
    }

    /// Common layer order.
    pub fn n(&self) -> usize {
        self.layers[0].order()
    }

    pub fn layers(&self) -> &[SimpleGraph] {
        &self.layers
    }

    /// `H_i`, 1-based.
    pub fn layer(&self, i: usize) -> &SimpleGraph {
        &self.layers[i - 1]
    }

    pub fn vertex_count(&self) -> usize {
        self.m() * self.n()
    }

    pub fn contains(&self, v: ProductVertex) -> bool {
        (1..=self.m()).contains(&v.layer) && v.inner < self.n()
    }

    pub fn check_vertex(&self, v: ProductVertex) -> Result<()> {
        if v.layer == 0 || v.layer > self.m() {
            return Err(Error::LayerOutOfRange {
                index: v.layer,
                m: self.m(),
            });
        }
        self.layer(v.layer).check_vertex(v.inner)
    }

    /// Adjacency in the product: consecutive layers are completely joined,
    /// vertices of one layer are adjacent as in that layer's graph.
    pub fn adjacent(&self, a: ProductVertex, b: ProductVertex) -> bool {
        if !self.contains(a) || !self.contains(b) {
            return false;
        }
        a.layer.abs_diff(b.layer) == 1 || (a.layer == b.layer && self.layer(a.layer).has_edge(a.inner, b.inner))
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

pub fn flatten(v: ProductVertex, n: usize) -> Result<usize> {
    if v.layer == 0 {
        return Err(Error::LayerOutOfRange { index: 0, m: 0 });
    }
    if v.inner >= n {
        return Err(Error::VertexOutOfRange {
            vertex: v.inner,
            order: n,
        });
    }
    Ok((v.layer - 1) * n + v.inner)
}

pub fn unflatten(idx: usize, n: usize) -> Result<ProductVertex> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    Ok(ProductVertex::new(idx / n + 1, idx % n))
}

/// Materializes the product as a graph on `m * n` vertices.
pub fn build_product(spec: &ProductSpec) -> SimpleGraph {
    let n = spec.n();
    let mut edges =
        Vec::with_capacity(spec.layers().iter().map(SimpleGraph::size).sum::<usize>() + (spec.m() - 1) * n * n);
    for (i, h) in spec.layers().iter().enumerate() {
        let base = i * n;
        edges.extend(h.edges().map(|(u, v)| (base + u, base + v)));
        if i + 1 < spec.m() {
            for u in 0..n {
                for v in 0..n {
                    edges.push((base + u, base + n + v));
                }
            }
        }
    }
    SimpleGraph::new(spec.vertex_count(), &edges).expect("product edges are simple")
}
