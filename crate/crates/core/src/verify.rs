//! Independent checks of everything the builders emit. Nothing here trusts
//! builder metadata; only raw graphs, walks and multiplicities are inspected.

use std::fmt;

use serde::Serialize;

use crate::graph::{PathMultigraph, ProductVertex, ProductWalk, SimpleGraph};
use crate::product::{flatten, ProductSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViolationCode {
    ExpectedClosed,
    ExpectedOpen,
    WrongLength,
    VertexOutOfRange,
    RepeatedVertex,
    NotAdjacent,
    WrongStart,
    WrongEnd,
    LayerJump,
    CrossingCount,
    WithinLayerCount,
    LayerCountMismatch,
    ZeroMultiplicity,
    DegreeMismatch,
}

impl ViolationCode {
    pub fn as_str(self) -> &'static str {
        match self {
            ViolationCode::ExpectedClosed => "expected-closed",
            ViolationCode::ExpectedOpen => "expected-open",
            ViolationCode::WrongLength => "wrong-length",
            ViolationCode::VertexOutOfRange => "vertex-out-of-range",
            ViolationCode::RepeatedVertex => "repeated-vertex",
            ViolationCode::NotAdjacent => "not-adjacent",
            ViolationCode::WrongStart => "wrong-start",
            ViolationCode::WrongEnd => "wrong-end",
            ViolationCode::LayerJump => "layer-jump",
            ViolationCode::CrossingCount => "crossing-count",
            ViolationCode::WithinLayerCount => "within-layer-count",
            ViolationCode::LayerCountMismatch => "layer-count-mismatch",
            ViolationCode::ZeroMultiplicity => "zero-multiplicity",
            ViolationCode::DegreeMismatch => "degree-mismatch",
        }
    }
}

/// First failing check: reason code, the index it failed at, and a message.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub code: ViolationCode,
    pub index: Option<usize>,
    pub detail: String,
}

impl Violation {
    fn new(code: ViolationCode, index: Option<usize>, detail: impl Into<String>) -> Self {
        Violation {
            code,
            index,
            detail: detail.into(),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.index {
            Some(i) => write!(f, "{} at {}: {}", self.code.as_str(), i, self.detail),
            None => write!(f, "{}: {}", self.code.as_str(), self.detail),
        }
    }
}

pub type Verdict = Result<(), Violation>;

fn check_spanning_sequence(g: &SimpleGraph, seq: &[usize], closed: bool) -> Verdict {
    if seq.len() != g.order() {
        return Err(Violation::new(
            ViolationCode::WrongLength,
            None,
            format!("{} vertices in walk, graph has {}", seq.len(), g.order()),
        ));
    }
    let mut seen = vec![false; g.order()];
    for (i, &v) in seq.iter().enumerate() {
        if v >= g.order() {
            return Err(Violation::new(
                ViolationCode::VertexOutOfRange,
                Some(i),
                format!("vertex {v}"),
            ));
        }
        if seen[v] {
            return Err(Violation::new(
                ViolationCode::RepeatedVertex,
                Some(i),
                format!("vertex {v}"),
            ));
        }
        seen[v] = true;
    }
    for (i, w) in seq.windows(2).enumerate() {
        if !g.has_edge(w[0], w[1]) {
            return Err(Violation::new(
                ViolationCode::NotAdjacent,
                Some(i),
                format!("{} - {} is not an edge", w[0], w[1]),
            ));
        }
    }
    if closed {
        if seq.len() < 3 {
            return Err(Violation::new(
                ViolationCode::WrongLength,
                None,
                "a cycle needs at least 3 vertices",
            ));
        }
        let (last, first) = (seq[seq.len() - 1], seq[0]);
        if !g.has_edge(last, first) {
            return Err(Violation::new(
                ViolationCode::NotAdjacent,
                Some(seq.len() - 1),
                format!("closing pair {last} - {first} is not an edge"),
            ));
        }
    }
    Ok(())
}

/// Hamiltonian cycle check on a plain vertex sequence.
pub fn verify_cycle(g: &SimpleGraph, seq: &[usize]) -> Verdict {
    check_spanning_sequence(g, seq, true)
}

/// Hamiltonian `x`-`y` path check on a plain vertex sequence.
pub fn verify_path(g: &SimpleGraph, seq: &[usize], x: usize, y: usize) -> Verdict {
    check_spanning_sequence(g, seq, false)?;
    if seq.first() != Some(&x) {
        return Err(Violation::new(
            ViolationCode::WrongStart,
            Some(0),
            format!("expected {x}"),
        ));
    }
    if seq.last() != Some(&y) {
        return Err(Violation::new(
            ViolationCode::WrongEnd,
            Some(seq.len() - 1),
            format!("expected {y}"),
        ));
    }
    Ok(())
}

fn flat_sequence(walk: &ProductWalk, n: usize) -> Result<Vec<usize>, Violation> {
    walk.vertices
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            flatten(v, n).map_err(|_| Violation::new(ViolationCode::VertexOutOfRange, Some(i), format!("vertex {v}")))
        })
        .collect()
}

/// `walk` is a closed Hamiltonian cycle of `product`, whose layers have order `n`.
pub fn verify_ham_cycle(product: &SimpleGraph, n: usize, walk: &ProductWalk) -> Verdict {
    if !walk.closed {
        return Err(Violation::new(ViolationCode::ExpectedClosed, None, "walk is open"));
    }
    verify_cycle(product, &flat_sequence(walk, n)?)
}

/// `walk` is an open Hamiltonian path of `product` from `x` to `y`.
pub fn verify_ham_path(
    product: &SimpleGraph,
    n: usize,
    walk: &ProductWalk,
    x: ProductVertex,
    y: ProductVertex,
) -> Verdict {
    if walk.closed {
        return Err(Violation::new(ViolationCode::ExpectedOpen, None, "walk is closed"));
    }
    let (fx, fy) = match (flatten(x, n), flatten(y, n)) {
        (Ok(fx), Ok(fy)) => (fx, fy),
        _ => {
            return Err(Violation::new(
                ViolationCode::VertexOutOfRange,
                None,
                "declared endpoint out of range",
            ))
        }
    };
    verify_path(product, &flat_sequence(walk, n)?, fx, fy)
}

/// Convenience over [`verify_ham_cycle`] / [`verify_ham_path`] that builds the
/// product and uses the walk's own ends when no endpoints are declared.
pub fn verify_walk(
    spec: &ProductSpec,
    walk: &ProductWalk,
    endpoints: Option<(ProductVertex, ProductVertex)>,
) -> Verdict {
    let product = crate::product::build_product(spec);
    if walk.closed {
        return verify_ham_cycle(&product, spec.n(), walk);
    }
    let (x, y) = match endpoints {
        Some(e) => e,
        None => match (walk.vertices.first(), walk.vertices.last()) {
            (Some(&x), Some(&y)) => (x, y),
            _ => return Err(Violation::new(ViolationCode::WrongLength, None, "empty walk")),
        },
    };
    verify_ham_path(&product, spec.n(), walk, x, y)
}

/// The walk uses exactly `mult[j]` edges between layers `j` and `j + 1` and
/// exactly `loops[i]` edges inside layer `i`.
pub fn verify_edge_profile(walk: &ProductWalk, gm: &PathMultigraph) -> Verdict {
    let m = gm.m();
    let mut crossing = vec![0usize; m.saturating_sub(1)];
    let mut within = vec![0usize; m];
    for (i, (a, b)) in walk.steps().enumerate() {
        for v in [a, b] {
            if v.layer == 0 || v.layer > m {
                return Err(Violation::new(
                    ViolationCode::VertexOutOfRange,
                    Some(i),
                    format!("vertex {v}"),
                ));
            }
        }
        match a.layer.abs_diff(b.layer) {
            0 => within[a.layer - 1] += 1,
            1 => crossing[a.layer.min(b.layer) - 1] += 1,
            _ => {
                return Err(Violation::new(
                    ViolationCode::LayerJump,
                    Some(i),
                    format!("{a} - {b} skips a layer"),
                ))
            }
        }
    }
    for i in 0..m {
        if within[i] != gm.loops()[i] {
            return Err(Violation::new(
                ViolationCode::WithinLayerCount,
                Some(i + 1),
                format!(
                    "layer {} has {} walk edges, expected {}",
                    i + 1,
                    within[i],
                    gm.loops()[i]
                ),
            ));
        }
        if i + 1 < m && crossing[i] != gm.mult()[i] {
            return Err(Violation::new(
                ViolationCode::CrossingCount,
                Some(i + 1),
                format!(
                    "{} walk edges between layers {} and {}, expected {}",
                    crossing[i],
                    i + 1,
                    i + 2,
                    gm.mult()[i]
                ),
            ));
        }
    }
    Ok(())
}

/// Required degree pattern of a multiple.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegreeProfile {
    /// `2n` everywhere.
    Cycle,
    /// `2n - 1` at `u_a` and `u_b`, or `2n - 2` at `u_a` when `a = b`; `2n` elsewhere.
    Open { a: usize, b: usize },
}

pub fn verify_multiple(gm: &PathMultigraph, n: usize, profile: DegreeProfile) -> Verdict {
    if let Some(j) = gm.mult().iter().position(|&c| c == 0) {
        return Err(Violation::new(
            ViolationCode::ZeroMultiplicity,
            Some(j + 1),
            format!("edge e_{} is missing", j + 1),
        ));
    }
    for i in 1..=gm.m() {
        let deficit = match profile {
            DegreeProfile::Cycle => 0,
            DegreeProfile::Open { a, b } => usize::from(i == a) + usize::from(i == b),
        };
        let expected = (2 * n).checked_sub(deficit);
        let actual = gm.degree(i).expect("index in range");
        if expected != Some(actual) {
            return Err(Violation::new(
                ViolationCode::DegreeMismatch,
                Some(i),
                format!("d(u_{i}) = {actual}, expected {}", 2 * n as i64 - deficit as i64),
            ));
        }
    }
    Ok(())
}
