//! Hamiltonian cycles and paths in `P_m[H_1, .., H_m]` built from a multiple
//! of the path, one of its Euler trails, and one linear forest per layer.
//!
//! Layer `i` appears `n - loops[i]` times in the trail; its forest has exactly
//! that many components, and the `t`-th occurrence of `u_i` is replaced by the
//! `t`-th component. Consecutive layers are completely joined, so the result
//! is a walk in the product that visits every vertex once.

use std::fmt;

use serde::Serialize;

use crate::decide::{decide, Condition, Decision, Property};
use crate::error::{Error, Result};
use crate::forest::{cut_for_constraints, max_linear_forest_with, trim_to_edge_count, ExactLimits};
use crate::graph::{LinearForest, PathMultigraph, ProductVertex, ProductWalk};
use crate::multiple::{
    build_cycle_multiple_odd, build_even_cycle_multiple, build_even_hamcon_multiple, build_lemma_multiple, plan_loops,
    IndicatorPair, LemmaCase,
};
use crate::product::ProductSpec;

/// Sequence of path vertices (1-based) traversing each `e_j` exactly
/// `mult[j]` times. A closed trail does not repeat its first vertex at the end.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EulerTrail {
    pub m: usize,
    pub layers: Vec<usize>,
    pub closed: bool,
}

impl EulerTrail {
    /// Number of traversed edges.
    pub fn edge_len(&self) -> usize {
        if self.closed {
            self.layers.len()
        } else {
            self.layers.len().saturating_sub(1)
        }
    }

    pub fn steps(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let wrap = self
            .closed
            .then(|| (*self.layers.last().unwrap(), self.layers[0]))
            .filter(|_| self.layers.len() > 1);
        self.layers.windows(2).map(|w| (w[0], w[1])).chain(wrap)
    }

    /// Times each `e_j` is traversed.
    pub fn edge_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.m.saturating_sub(1)];
        for (a, b) in self.steps() {
            counts[a.min(b) - 1] += 1;
        }
        counts
    }
}

/// Hierholzer's algorithm on the loopless part of `gm`, always leaving a
/// vertex through its lower-indexed edge first.
///
/// * `start = None, end = None`: closed trail from `u_1`;
/// * `start = Some(s), end = None`: closed trail from `u_s`;
/// * `start = Some(s), end = Some(t)`, `s != t`: open trail from `u_s` to `u_t`;
/// * `start = end = Some(s)`: closed trail cut open at `u_s`, so `u_s` is
///   both its first and last entry.
pub fn euler_trail(gm: &PathMultigraph, start: Option<usize>, end: Option<usize>) -> Result<EulerTrail> {
    let m = gm.m();
    if let Some(j) = gm.mult().iter().position(|&c| c == 0) {
        return Err(Error::Disconnected(j + 1));
    }
    for t in start.iter().chain(end.iter()) {
        if *t == 0 || *t > m {
            return Err(Error::LayerOutOfRange { index: *t, m });
        }
    }
    let odd: Vec<usize> = (1..=m).filter(|&i| gm.loopless_degree(i) % 2 == 1).collect();
    let (from, open_to) = match (start, end) {
        (None, None) => (1, None),
        (Some(s), None) => (s, None),
        (Some(s), Some(t)) => (s, Some(t)),
        (None, Some(_)) => {
            return Err(Error::Precondition("an end vertex needs a start vertex".into()));
        }
    };
    let expected_odd: Vec<usize> = match open_to {
        Some(t) if t != from => {
            let mut v = vec![from, t];
            v.sort_unstable();
            v
        }
        _ => Vec::new(),
    };
    if odd != expected_odd {
        return Err(Error::Parity(format!(
            "odd-degree vertices {odd:?}, expected {expected_odd:?}"
        )));
    }

    let mut left = gm.mult().to_vec();
    let mut stack = vec![from];
    let mut circuit = Vec::with_capacity(left.iter().sum::<usize>() + 1);
    while let Some(&v) = stack.last() {
        if v > 1 && left[v - 2] > 0 {
            left[v - 2] -= 1;
            stack.push(v - 1);
        } else if v < m && left[v - 1] > 0 {
            left[v - 1] -= 1;
            stack.push(v + 1);
        } else {
            circuit.push(stack.pop().unwrap());
        }
    }
    circuit.reverse();
    match open_to {
        Some(_) => Ok(EulerTrail {
            m,
            layers: circuit,
            closed: false,
        }),
        None => {
            if circuit.len() > 1 {
                circuit.pop();
            }
            Ok(EulerTrail {
                m,
                layers: circuit,
                closed: true,
            })
        }
    }
}

/// Occurrences of each `u_i` in the trail, indexed `i - 1`.
pub fn occurrence_counts(trail: &EulerTrail) -> Vec<usize> {
    let mut counts = vec![0; trail.m];
    for &i in &trail.layers {
        counts[i - 1] += 1;
    }
    counts
}

/// Substitutes forest components for trail occurrences.
///
/// Components are taken in their canonical order (sorted by lowest vertex,
/// lower endpoint first), except that the component holding `x` goes to the
/// first occurrence of its layer with `x` leading, and the one holding `y` to
/// the last occurrence of its layer with `y` trailing.
pub fn assemble(
    trail: &EulerTrail,
    forests: &[LinearForest],
    x: Option<ProductVertex>,
    y: Option<ProductVertex>,
) -> Result<ProductWalk> {
    let m = trail.m;
    if forests.len() != m {
        return Err(Error::Precondition(format!("{} forests for {m} layers", forests.len())));
    }
    let n = forests[0].host_order();
    if let Some(i) = forests.iter().position(|f| f.host_order() != n) {
        return Err(Error::UnequalLayerOrders {
            layer: i + 1,
            expected: n,
            found: forests[i].host_order(),
        });
    }
    let counts = occurrence_counts(trail);
    for (i, f) in forests.iter().enumerate() {
        if f.component_count() != counts[i] {
            return Err(Error::ComponentCountMismatch {
                layer: i + 1,
                components: f.component_count(),
                occurrences: counts[i],
            });
        }
    }
    if (x.is_some() || y.is_some()) && trail.closed {
        return Err(Error::EndpointConstraint("endpoints given for a closed trail".into()));
    }

    let pin = |v: ProductVertex, pos: usize, role: &str| -> Result<usize> {
        if v.layer == 0 || v.layer > m {
            return Err(Error::LayerOutOfRange { index: v.layer, m });
        }
        let f = &forests[v.layer - 1];
        let comp = f.component_of(v.inner).ok_or(Error::VertexOutOfRange {
            vertex: v.inner,
            order: n,
        })?;
        if f.forest_degree(v.inner) > 1 {
            return Err(Error::EndpointConstraint(format!("{role} {v} is inside a forest path")));
        }
        if trail.layers[pos] != v.layer {
            return Err(Error::EndpointConstraint(format!(
                "{role} {v} is not in the trail's {} layer u_{}",
                if pos == 0 { "first" } else { "last" },
                trail.layers[pos]
            )));
        }
        Ok(comp)
    };
    let last = trail.layers.len() - 1;
    let x_comp = x.map(|v| pin(v, 0, "x")).transpose()?;
    let y_comp = y.map(|v| pin(v, last, "y")).transpose()?;
    if let (Some(xv), Some(yv), Some(cx), Some(cy)) = (x, y, x_comp, y_comp) {
        if xv.layer == yv.layer && cx == cy {
            return Err(Error::EndpointConstraint(format!("{xv} and {yv} share a forest path")));
        }
    }

    // Remaining components per layer, in canonical order.
    let mut queues: Vec<std::collections::VecDeque<usize>> = (0..m)
        .map(|i| {
            (0..forests[i].component_count())
                .filter(|&c| {
                    !(x.is_some_and(|v| v.layer == i + 1) && x_comp == Some(c))
                        && !(y.is_some_and(|v| v.layer == i + 1) && y_comp == Some(c))
                })
                .collect()
        })
        .collect();

    let mut walk = Vec::with_capacity(n * m);
    for (pos, &layer) in trail.layers.iter().enumerate() {
        let f = &forests[layer - 1];
        let mut orient_first = None;
        let mut orient_last = None;
        let comp = match (x, y) {
            (Some(xv), _) if pos == 0 => {
                orient_first = Some(xv.inner);
                x_comp.unwrap()
            }
            (_, Some(yv)) if pos == last => {
                orient_last = Some(yv.inner);
                y_comp.unwrap()
            }
            _ => queues[layer - 1].pop_front().expect("counts match components"),
        };
        let mut seq = f.components()[comp].clone();
        if orient_first.is_some_and(|v| seq[0] != v) || orient_last.is_some_and(|v| *seq.last().unwrap() != v) {
            seq.reverse();
        }
        walk.extend(seq.into_iter().map(|h| ProductVertex::new(layer, h)));
    }
    Ok(ProductWalk::new(walk, trail.closed))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Goal {
    Cycle,
    Path,
    XyPath { x: ProductVertex, y: ProductVertex },
}

/// How a witness was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// `2n`-regular multiple of an odd path.
    OddCycleMultiple,
    /// Open-trail multiple of an odd path for the given endpoint-parity case.
    OddPathMultiple(LemmaCase),
    /// `2n`-regular multiple of an even path.
    EvenCycleMultiple,
    /// Open-trail multiple of an even path with `k > 1`.
    EvenPathMultiple,
    /// Alternating walk through `H_1` and `H_2`.
    TwoLayerZigzag,
    /// `m = 2`, both ends in one layer, one edge of the other layer used.
    TwoLayerSameSide,
    /// Alternating walk through the layer pairs `(1, 2), (3, 4), ..`.
    PairedZigzag,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::OddCycleMultiple => f.write_str("odd-cycle-multiple"),
            Method::OddPathMultiple(c) => write!(f, "odd-path-multiple ({c:?})"),
            Method::EvenCycleMultiple => f.write_str("even-cycle-multiple"),
            Method::EvenPathMultiple => f.write_str("even-path-multiple"),
            Method::TwoLayerZigzag => f.write_str("two-layer-zigzag"),
            Method::TwoLayerSameSide => f.write_str("two-layer-same-side"),
            Method::PairedZigzag => f.write_str("paired-zigzag"),
        }
    }
}

/// A constructed walk together with the multiple whose edge profile it realizes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub walk: ProductWalk,
    /// For direct constructions this is the profile the walk is built to have.
    pub multiple: PathMultigraph,
    pub trail: Option<EulerTrail>,
    pub forests: Vec<LinearForest>,
    pub method: Method,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Construction {
    Witness(Box<Witness>),
    Infeasible(Decision),
}

impl Construction {
    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Construction::Witness(w) => Some(w),
            Construction::Infeasible(_) => None,
        }
    }
}

struct Layers<'a> {
    spec: &'a ProductSpec,
    max: Vec<LinearForest>,
    pis: Vec<usize>,
}

impl Layers<'_> {
    fn m(&self) -> usize {
        self.spec.m()
    }

    fn n(&self) -> usize {
        self.spec.n()
    }

    fn singletons(&self) -> LinearForest {
        LinearForest::singletons(self.n())
    }

    /// Maximum forest of `H_i` after the cuts that free `x`/`y` in that layer.
    fn cut(&self, i: usize, x: ProductVertex, y: ProductVertex) -> LinearForest {
        let mut terms = Vec::new();
        for v in [x, y] {
            if v.layer == i {
                terms.push(v.inner);
            }
        }
        let pair = (x.layer == i && y.layer == i).then_some((x.inner, y.inner));
        cut_for_constraints(&self.max[i - 1], &terms, pair)
    }
}

/// Builds a witness for `goal` when the corresponding condition holds, or
/// returns the failed ledger.
///
/// For `XyPath` the ledger lists the conditions of the construction used for
/// the layers of `x` and `y`; they are sufficient for that pair and all
/// satisfied whenever the product is hamiltonian connected.
pub fn construct(spec: &ProductSpec, goal: Goal) -> Result<Construction> {
    let m = spec.m();
    if m < 2 {
        return Err(Error::Precondition(format!(
            "m = {m}, the path needs at least 2 vertices"
        )));
    }
    let limits = ExactLimits::from_env();
    let max = spec
        .layers()
        .iter()
        .map(|h| max_linear_forest_with(h, &limits))
        .collect::<Result<Vec<_>>>()?;
    let pis = max.iter().map(LinearForest::edge_count).collect();
    let layers = Layers { spec, max, pis };
    match goal {
        Goal::Cycle => construct_cycle(&layers),
        Goal::Path => construct_path(&layers),
        Goal::XyPath { x, y } => {
            spec.check_vertex(x)?;
            spec.check_vertex(y)?;
            if x == y {
                return Err(Error::Precondition(format!("x = y = {x}")));
            }
            if m == 2 {
                Ok(two_layer_xy(&layers, x, y))
            } else if m % 2 == 1 {
                odd_xy(&layers, x, y)
            } else {
                even_xy(&layers, x, y)
            }
        }
    }
}

fn from_multiple(
    gm: PathMultigraph,
    forests: Vec<LinearForest>,
    trail: EulerTrail,
    x: Option<ProductVertex>,
    y: Option<ProductVertex>,
    method: Method,
) -> Result<Construction> {
    let walk = assemble(&trail, &forests, x, y)?;
    Ok(Construction::Witness(Box::new(Witness {
        walk,
        multiple: gm,
        trail: Some(trail),
        forests,
        method,
    })))
}

fn construct_cycle(l: &Layers) -> Result<Construction> {
    let (m, n) = (l.m(), l.n());
    let decision = decide(Property::Hamiltonian, m, &l.pis, n)?;
    if !decision.verdict {
        return Ok(Construction::Infeasible(decision));
    }
    if m == 2 {
        let walk = (0..n)
            .flat_map(|h| [ProductVertex::new(1, h), ProductVertex::new(2, h)])
            .collect();
        return Ok(Construction::Witness(Box::new(Witness {
            walk: ProductWalk::new(walk, true),
            multiple: PathMultigraph::new(vec![2 * n], vec![0, 0])?,
            trail: None,
            forests: vec![l.singletons(); 2],
            method: Method::TwoLayerZigzag,
        })));
    }
    let (gm, method) = if m % 2 == 1 {
        let plan = plan_loops(&l.pis, n, (1, 1))?;
        (build_cycle_multiple_odd(n, m / 2, &plan)?, Method::OddCycleMultiple)
    } else {
        (build_even_cycle_multiple(n, m / 2)?, Method::EvenCycleMultiple)
    };
    let forests = (1..=m)
        .map(|i| trim_to_edge_count(&l.max[i - 1], gm.loops_at(i)))
        .collect();
    let trail = euler_trail(&gm, None, None)?;
    from_multiple(gm, forests, trail, None, None, method)
}

fn construct_path(l: &Layers) -> Result<Construction> {
    let (m, n) = (l.m(), l.n());
    let decision = decide(Property::Traceable, m, &l.pis, n)?;
    if !decision.verdict {
        return Ok(Construction::Infeasible(decision));
    }
    if m % 2 == 0 {
        let mut walk = Vec::with_capacity(m * n);
        for p in (1..m).step_by(2) {
            for h in 0..n {
                walk.push(ProductVertex::new(p, h));
                walk.push(ProductVertex::new(p + 1, h));
            }
        }
        let mult = (1..m).map(|j| if j % 2 == 1 { 2 * n - 1 } else { 1 }).collect();
        return Ok(Construction::Witness(Box::new(Witness {
            walk: ProductWalk::new(walk, false),
            multiple: PathMultigraph::new(mult, vec![0; m])?,
            trail: None,
            forests: vec![l.singletons(); m],
            method: Method::PairedZigzag,
        })));
    }
    let case = LemmaCase::III;
    let plan = plan_loops(&l.pis, case.target_sum(n), case.minima(m, 1, m))?;
    let gm = build_lemma_multiple(case, n, m / 2, IndicatorPair::new(1, m), &plan)?;
    let forests = (1..=m)
        .map(|i| trim_to_edge_count(&l.max[i - 1], gm.loops_at(i)))
        .collect();
    let trail = euler_trail(&gm, Some(1), Some(m))?;
    from_multiple(gm, forests, trail, None, None, Method::OddPathMultiple(case))
}

fn two_layer_xy(l: &Layers, x: ProductVertex, y: ProductVertex) -> Construction {
    let n = l.n();
    let singletons = l.singletons();
    if x.layer != y.layer {
        // x's layer in order x, rest; y's layer in order rest, y; alternate.
        let first: Vec<usize> = std::iter::once(x.inner)
            .chain((0..n).filter(|&h| h != x.inner))
            .collect();
        let second: Vec<usize> = (0..n)
            .filter(|&h| h != y.inner)
            .chain(std::iter::once(y.inner))
            .collect();
        let walk = first
            .iter()
            .zip(&second)
            .flat_map(|(&a, &b)| [ProductVertex::new(x.layer, a), ProductVertex::new(y.layer, b)])
            .collect();
        return Construction::Witness(Box::new(Witness {
            walk: ProductWalk::new(walk, false),
            multiple: PathMultigraph::new(vec![2 * n - 1], vec![0, 0]).expect("two entries"),
            trail: None,
            forests: vec![singletons.clone(), singletons],
            method: Method::TwoLayerZigzag,
        }));
    }
    let (p, q) = (x.layer, 3 - x.layer);
    let other = l.spec.layer(q);
    let Some((u, v)) = other.edges().next() else {
        let cond = Condition::at_least(format!("pi(H_{q})"), 1, l.pis[q - 1]);
        return Construction::Infeasible(Decision::new(vec![cond], "two-layer/xy-path/same-layer"));
    };
    let mut comps = vec![vec![u, v]];
    comps.extend((0..n).filter(|&h| h != u && h != v).map(|h| vec![h]));
    let q_forest = LinearForest::new(n, comps).expect("edge plus singletons partition the layer");
    let ends: Vec<usize> = std::iter::once(x.inner)
        .chain((0..n).filter(|&h| h != x.inner && h != y.inner))
        .chain(std::iter::once(y.inner))
        .collect();
    let mut walk = Vec::with_capacity(2 * n);
    for (t, &h) in ends.iter().enumerate() {
        walk.push(ProductVertex::new(p, h));
        if let Some(c) = q_forest.components().get(t) {
            walk.extend(c.iter().map(|&g| ProductVertex::new(q, g)));
        }
    }
    let mut loops = vec![0, 0];
    loops[q - 1] = 1;
    let mut forests = vec![singletons.clone(), singletons];
    forests[q - 1] = q_forest;
    Construction::Witness(Box::new(Witness {
        walk: ProductWalk::new(walk, false),
        multiple: PathMultigraph::new(vec![2 * n - 2], loops).expect("two entries"),
        trail: None,
        forests,
        method: Method::TwoLayerSameSide,
    }))
}

fn odd_xy(l: &Layers, x: ProductVertex, y: ProductVertex) -> Result<Construction> {
    let (m, n) = (l.m(), l.n());
    // Case II needs the odd end first; the walk is reversed afterwards.
    let flipped = x.layer.is_multiple_of(2) && y.layer % 2 == 1;
    let (x, y) = if flipped { (y, x) } else { (x, y) };
    let (a, b) = (x.layer, y.layer);
    let case = LemmaCase::for_endpoints(a, b).expect("parities normalized");
    let target = case.target_sum(n);
    let minima = case.minima(m, a, b);

    let cut: Vec<LinearForest> = (1..=m).map(|i| l.cut(i, x, y)).collect();
    let caps: Vec<usize> = cut.iter().map(LinearForest::edge_count).collect();
    let tag = if x.layer == y.layer { " with x, y separated" } else { "" };
    // The loop total n + d must leave room for both end minima.
    let min_n = (minima.0 + minima.1 + n).saturating_sub(target).max(1);
    let ledger = vec![
        Condition::at_least("n", min_n, n),
        Condition::at_least(format!("usable pi(H_1){tag}"), minima.0, caps[0]),
        Condition::at_least(format!("usable pi(H_{m}){tag}"), minima.1, caps[m - 1]),
        Condition::at_least("sum of usable pi(H_i) over odd i", target, caps.iter().step_by(2).sum()),
    ];
    let decision = Decision::new(ledger, format!("odd-path/xy-path/case-{case:?}"));
    if !decision.verdict {
        return Ok(Construction::Infeasible(decision));
    }
    let plan = plan_loops(&caps, target, minima)?;
    let gm = build_lemma_multiple(case, n, m / 2, IndicatorPair::new(a, b), &plan)?;
    let forests = (1..=m)
        .map(|i| trim_to_edge_count(&cut[i - 1], gm.loops_at(i)))
        .collect();
    let trail = euler_trail(&gm, Some(a), Some(b))?;
    let mut built = from_multiple(gm, forests, trail, Some(x), Some(y), Method::OddPathMultiple(case))?;
    if flipped {
        if let Construction::Witness(w) = &mut built {
            w.walk = w.walk.reversed();
        }
    }
    Ok(built)
}

fn even_xy(l: &Layers, x: ProductVertex, y: ProductVertex) -> Result<Construction> {
    let (m, n) = (l.m(), l.n());
    let (a, b) = (x.layer, y.layer);
    let (lo, hi) = (a.min(b), a.max(b));
    let odd_gap = (hi - lo) % 2 == 1;
    let need = if odd_gap {
        (1, 1)
    } else if lo % 2 == 1 {
        (1, 2)
    } else {
        (2, 1)
    };
    let cut_first = l.cut(1, x, y);
    let cut_last = l.cut(m, x, y);
    let mut ledger = Vec::new();
    if !odd_gap {
        ledger.push(Condition::at_least("n", 3, n));
    }
    ledger.push(Condition::at_least("usable pi(H_1)", need.0, cut_first.edge_count()));
    ledger.push(Condition::at_least(
        format!("usable pi(H_{m})"),
        need.1,
        cut_last.edge_count(),
    ));
    let parity = if odd_gap { "odd" } else { "even" };
    let decision = Decision::new(ledger, format!("even-path/xy-path/{parity}-gap"));
    if !decision.verdict {
        return Ok(Construction::Infeasible(decision));
    }
    let gm = build_even_hamcon_multiple(n, m / 2, a, b)?;
    let mut forests = vec![l.singletons(); m];
    forests[0] = trim_to_edge_count(&cut_first, gm.loops_at(1));
    forests[m - 1] = trim_to_edge_count(&cut_last, gm.loops_at(m));
    let trail = euler_trail(&gm, Some(a), Some(b))?;
    from_multiple(gm, forests, trail, Some(x), Some(y), Method::EvenPathMultiple)
}
