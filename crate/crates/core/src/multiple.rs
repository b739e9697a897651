//! Multiples of a path whose degree profile makes an Euler trail exist.
//!
//! For an odd path `u_1 .. u_{2k+1}` the loop counts sit on odd vertices and
//! the edge multiplicities follow the prefix sums of those loops:
//!
//! ```text
//! m(e_{2i})   = 2 * (l(u_1) + l(u_3) + .. + l(u_{2i-1}))  + sA*A(2i)   + sB*B(2i)
//! m(e_{2i-1}) = 2n - 2 * (l(u_1) + .. + l(u_{2i-1}))      - sA*A(2i-1) - sB*B(2i-1)
//! ```
//!
//! with `(sA, sB)` equal to `(0, 0)` for the cycle multiple and to
//! `(-1, -1)`, `(+1, -1)`, `(+1, +1)` for the three endpoint-parity cases.
//! Even paths use the 1-factor constructions in [`build_even_cycle_multiple`]
//! and [`build_even_hamcon_multiple`].

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::PathMultigraph;

/// Loop counts for a multiple of an odd path.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LoopPlan {
    /// `loops[i - 1]` is the loop count at `u_i`.
    pub loops: Vec<usize>,
    /// Lower bounds at `u_1` and `u_m`.
    pub minima: (usize, usize),
    /// Required total over odd vertices.
    pub target_sum: usize,
}

impl LoopPlan {
    pub fn m(&self) -> usize {
        self.loops.len()
    }

    pub fn odd_sum(&self) -> usize {
        self.loops.iter().step_by(2).sum()
    }
}

/// Endpoint layers `a` and `b` with their step functions `A(t) = [t >= a]`,
/// `B(t) = [t >= b]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IndicatorPair {
    pub a: usize,
    pub b: usize,
}

impl IndicatorPair {
    pub fn new(a: usize, b: usize) -> Self {
        IndicatorPair { a, b }
    }

    pub fn a_at(&self, t: usize) -> i64 {
        i64::from(t >= self.a)
    }

    pub fn b_at(&self, t: usize) -> i64 {
        i64::from(t >= self.b)
    }
}

/// Endpoint-parity cases of the open-trail multiple on an odd path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum LemmaCase {
    /// `a`, `b` both even.
    I,
    /// `a` odd, `b` even.
    II,
    /// `a`, `b` both odd.
    III,
}

impl LemmaCase {
    /// The case for endpoint layers `a`, `b`, or `None` when `a` is even and
    /// `b` odd (swap them first).
    pub fn for_endpoints(a: usize, b: usize) -> Option<Self> {
        match (a % 2, b % 2) {
            (0, 0) => Some(LemmaCase::I),
            (1, 0) => Some(LemmaCase::II),
            (1, 1) => Some(LemmaCase::III),
            _ => None,
        }
    }

    /// Required total loop count on odd vertices for layer order `n`.
    pub fn target_sum(self, n: usize) -> usize {
        match self {
            LemmaCase::I => n + 1,
            LemmaCase::II => n,
            LemmaCase::III => n.saturating_sub(1),
        }
    }

    /// Loop minima at `(u_1, u_m)` for endpoints `a`, `b` on a path of `m` vertices.
    pub fn minima(self, m: usize, a: usize, b: usize) -> (usize, usize) {
        match self {
            LemmaCase::I => (2, 2),
            LemmaCase::II => (1, 1),
            LemmaCase::III if (a, b) == (1, m) || (a, b) == (m, 1) => (0, 0),
            LemmaCase::III => (1, 1),
        }
    }

    fn signs(self) -> (i64, i64) {
        match self {
            LemmaCase::I => (-1, -1),
            LemmaCase::II => (1, -1),
            LemmaCase::III => (1, 1),
        }
    }
}

/// Chooses loop counts for an odd path: every odd vertex starts at its budget
/// `pis[i]`, then loops are removed from `u_3, u_5, .., u_m` in ascending
/// order (down to 0, or to `minima.1` at `u_m`) and finally from `u_1` (down
/// to `minima.0`) until the odd total equals `target_sum`.
///
/// `pis` holds one budget per path vertex; even positions are ignored.
pub fn plan_loops(pis: &[usize], target_sum: usize, minima: (usize, usize)) -> Result<LoopPlan> {
    let m = pis.len();
    if m < 3 || m.is_multiple_of(2) {
        return Err(Error::Precondition(format!(
            "loop plans are defined on odd paths with at least 3 vertices, got m = {m}"
        )));
    }
    if minima.0 > pis[0] || minima.1 > pis[m - 1] {
        return Err(Error::InfeasibleBudget(format!(
            "end minima {minima:?} exceed budgets ({}, {})",
            pis[0],
            pis[m - 1]
        )));
    }
    if target_sum < minima.0 + minima.1 {
        return Err(Error::InfeasibleBudget(format!(
            "target {target_sum} is below the end minima {minima:?}"
        )));
    }
    let mut loops = vec![0; m];
    for i in (0..m).step_by(2) {
        loops[i] = pis[i];
    }
    let total: usize = loops.iter().sum();
    if total < target_sum {
        return Err(Error::InfeasibleBudget(format!(
            "odd-layer budget {total} is below the target {target_sum}"
        )));
    }
    let mut excess = total - target_sum;
    let order = (2..m).step_by(2).chain(std::iter::once(0));
    for i in order {
        let floor = match i {
            0 => minima.0,
            _ if i == m - 1 => minima.1,
            _ => 0,
        };
        let take = excess.min(loops[i] - floor);
        loops[i] -= take;
        excess -= take;
    }
    debug_assert_eq!(excess, 0);
    Ok(LoopPlan {
        loops,
        minima,
        target_sum,
    })
}

fn check_plan_shape(n: usize, k: usize, plan: &LoopPlan, target: usize, minima: (usize, usize)) -> Result<()> {
    let m = 2 * k + 1;
    if k == 0 || plan.m() != m {
        return Err(Error::Precondition(format!(
            "plan covers {} vertices, expected 2k+1 = {m} with k >= 1",
            plan.m()
        )));
    }
    if let Some(i) = (1..m).step_by(2).find(|&i| plan.loops[i] != 0) {
        return Err(Error::Precondition(format!("even vertex u_{} carries loops", i + 1)));
    }
    if plan.odd_sum() != target {
        return Err(Error::InfeasibleBudget(format!(
            "odd loop total {} differs from the required {target} (n = {n})",
            plan.odd_sum()
        )));
    }
    if plan.loops[0] < minima.0 || plan.loops[m - 1] < minima.1 {
        return Err(Error::InfeasibleBudget(format!(
            "end loops ({}, {}) below the minima {minima:?}",
            plan.loops[0],
            plan.loops[m - 1]
        )));
    }
    Ok(())
}

/// Evaluates the prefix-sum multiplicity formulas with indicator signs.
fn odd_path_multiplicities(n: usize, plan: &LoopPlan, pair: IndicatorPair, signs: (i64, i64)) -> Result<Vec<usize>> {
    let m = plan.m();
    let n = n as i64;
    let mut mult = Vec::with_capacity(m - 1);
    let mut prefix = 0i64;
    for j in 1..m {
        let value = if j % 2 == 1 {
            prefix += plan.loops[j - 1] as i64;
            2 * n - 2 * prefix - signs.0 * pair.a_at(j) - signs.1 * pair.b_at(j)
        } else {
            2 * prefix + signs.0 * pair.a_at(j) + signs.1 * pair.b_at(j)
        };
        if value < 1 {
            return Err(Error::InfeasibleBudget(format!(
                "edge e_{j} would get multiplicity {value}"
            )));
        }
        mult.push(value as usize);
    }
    Ok(mult)
}

/// Connected `2n`-regular multiple of `P_{2k+1}` from a plan with `n` loops
/// on odd vertices and at least one loop at each end.
pub fn build_cycle_multiple_odd(n: usize, k: usize, plan: &LoopPlan) -> Result<PathMultigraph> {
    check_plan_shape(n, k, plan, n, (1, 1))?;
    let mult = odd_path_multiplicities(n, plan, IndicatorPair::new(usize::MAX, usize::MAX), (0, 0))?;
    PathMultigraph::new(mult, plan.loops.clone())
}

/// Connected multiple of `P_{2k+1}` with `d(u_a) = d(u_b) = 2n - 1` (or
/// `d(u_a) = 2n - 2` when `a = b`) and `2n` elsewhere.
pub fn build_lemma_multiple(
    case: LemmaCase,
    n: usize,
    k: usize,
    pair: IndicatorPair,
    plan: &LoopPlan,
) -> Result<PathMultigraph> {
    let m = 2 * k + 1;
    for t in [pair.a, pair.b] {
        if t == 0 || t > m {
            return Err(Error::LayerOutOfRange { index: t, m });
        }
    }
    if LemmaCase::for_endpoints(pair.a, pair.b) != Some(case) {
        return Err(Error::Parity(format!(
            "endpoints (a, b) = ({}, {}) do not match case {case:?}",
            pair.a, pair.b
        )));
    }
    check_plan_shape(n, k, plan, case.target_sum(n), case.minima(m, pair.a, pair.b))?;
    let mult = odd_path_multiplicities(n, plan, pair, case.signs())?;
    PathMultigraph::new(mult, plan.loops.clone())
}

/// `2n`-regular multiple of `P_{2k}`: one loop at each end, multiplicities
/// alternating `2n - 2` on the 1-factor and `2` elsewhere.
pub fn build_even_cycle_multiple(n: usize, k: usize) -> Result<PathMultigraph> {
    if n < 2 {
        return Err(Error::Precondition(format!("n = {n}, need n >= 2")));
    }
    if k == 0 {
        return Err(Error::Precondition("k must be at least 1".into()));
    }
    let m = 2 * k;
    let mult = (1..m).map(|j| if j % 2 == 1 { 2 * n - 2 } else { 2 }).collect();
    let mut loops = vec![0; m];
    loops[0] = 1;
    loops[m - 1] = 1;
    PathMultigraph::new(mult, loops)
}

/// Multiple of `P_{2k}`, `k > 1`, with odd degree (or degree `2n - 2`) only at
/// `u_a` and `u_b`.
///
/// With `F` the 1-factor `{e_1, e_3, .., e_{2k-1}}`, `S_1`/`S_2` single loops
/// at `u_1`/`u_{2k}` and `P'` the subpath `u_a .. u_b`:
/// * `b - a` odd: `2P + (2n-4)F + S_1 + S_2 - F_1 + F_2`, with `F_1` the
///   1-factor of `P'` and `F_2 = P' - F_1`;
/// * `b - a` even: relabel so that `a` is odd, then
///   `2P + (2n-4)F + S_1 + 2S_2 - F_1 + F_2 - 2F_3 + 2F_4`, with `F_1`, `F_2`
///   the 1-factors of `P' - u_b`, `P' - u_a`, and `F_3`, `F_4 = P'' - F_3`
///   on the subpath `P'' = u_b .. u_{2k}`.
pub fn build_even_hamcon_multiple(n: usize, k: usize, a: usize, b: usize) -> Result<PathMultigraph> {
    if k < 2 {
        return Err(Error::Precondition("the 1-factor construction needs k > 1".into()));
    }
    let m = 2 * k;
    for t in [a, b] {
        if t == 0 || t > m {
            return Err(Error::LayerOutOfRange { index: t, m });
        }
    }
    let (a, b) = (a.min(b), a.max(b));
    if (b - a) % 2 == 1 {
        if n < 2 {
            return Err(Error::Precondition(format!("n = {n}, need n >= 2")));
        }
        let mut mult = base_even_mult(n, m);
        // e_j for j in a..b: odd offset from a is in F_1, even offset in F_2.
        for j in a..b {
            if (j - a) % 2 == 0 {
                mult[j - 1] -= 1;
            } else {
                mult[j - 1] += 1;
            }
        }
        let mut loops = vec![0; m];
        loops[0] = 1;
        loops[m - 1] = 1;
        return to_multiple(mult, loops);
    }
    if n < 3 {
        return Err(Error::Precondition(format!(
            "n = {n}, the even-distance case needs n >= 3"
        )));
    }
    if a % 2 == 0 {
        let (ra, rb) = (m + 1 - b, m + 1 - a);
        return Ok(build_even_hamcon_multiple(n, k, ra, rb)?.reflected());
    }
    let mut mult = base_even_mult(n, m);
    for j in a..b {
        if (j - a) % 2 == 0 {
            mult[j - 1] -= 1; // F_1
        } else {
            mult[j - 1] += 1; // F_2
        }
    }
    for j in b..m {
        if (j - b) % 2 == 0 {
            mult[j - 1] -= 2; // F_3
        } else {
            mult[j - 1] += 2; // F_4
        }
    }
    let mut loops = vec![0; m];
    loops[0] = 1;
    loops[m - 1] = 2;
    to_multiple(mult, loops)
}

fn base_even_mult(n: usize, m: usize) -> Vec<i64> {
    (1..m)
        .map(|j| 2 + if j % 2 == 1 { 2 * n as i64 - 4 } else { 0 })
        .collect()
}

fn to_multiple(mult: Vec<i64>, loops: Vec<usize>) -> Result<PathMultigraph> {
    if let Some(j) = mult.iter().position(|&c| c < 1) {
        return Err(Error::Precondition(format!(
            "edge e_{} would get multiplicity {}",
            j + 1,
            mult[j]
        )));
    }
    PathMultigraph::new(mult.into_iter().map(|c| c as usize).collect(), loops)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn degrees(gm: &PathMultigraph) -> Vec<usize> {
        (1..=gm.m()).map(|i| gm.degree(i).unwrap()).collect()
    }

    #[test]
    fn plan_examples() {
        let plan = plan_loops(&[2, 0, 2, 0, 2], 6, (1, 1)).unwrap();
        assert_eq!(plan.loops, vec![2, 0, 2, 0, 2]);
        let plan = plan_loops(&[1, 0, 1], 2, (1, 1)).unwrap();
        assert_eq!(plan.loops, vec![1, 0, 1]);
        let plan = plan_loops(&[3, 0, 3], 4, (1, 1)).unwrap();
        assert_eq!(plan.loops, vec![3, 0, 1]);
    }

    #[test]
    fn plan_removal_order() {
        // Interior first, then u_m to its minimum, then u_1.
        let plan = plan_loops(&[3, 5, 3, 5, 3], 4, (1, 1)).unwrap();
        assert_eq!(plan.loops, vec![3, 0, 0, 0, 1]);
        let plan = plan_loops(&[3, 0, 3, 0, 3], 2, (1, 1)).unwrap();
        assert_eq!(plan.loops, vec![1, 0, 0, 0, 1]);
        let plan = plan_loops(&[3, 0, 3, 0, 3], 2, (0, 0)).unwrap();
        assert_eq!(plan.loops, vec![2, 0, 0, 0, 0]);
    }

    #[test]
    fn plan_rejects_infeasible_budgets() {
        assert!(matches!(
            plan_loops(&[2, 0, 1], 4, (1, 1)),
            Err(Error::InfeasibleBudget(_))
        ));
        assert!(matches!(
            plan_loops(&[0, 0, 5], 3, (1, 1)),
            Err(Error::InfeasibleBudget(_))
        ));
        assert!(matches!(
            plan_loops(&[1, 0, 1], 1, (1, 1)),
            Err(Error::InfeasibleBudget(_))
        ));
        assert!(plan_loops(&[1, 0], 1, (0, 0)).is_err());
    }

    #[test]
    fn cycle_multiple_examples() {
        let gm = build_cycle_multiple_odd(2, 1, &plan_loops(&[1, 0, 1], 2, (1, 1)).unwrap()).unwrap();
        assert_eq!(gm.mult(), &[2, 2]);
        assert_eq!(degrees(&gm), vec![4, 4, 4]);

        let gm = build_cycle_multiple_odd(6, 2, &plan_loops(&[2, 0, 2, 0, 2], 6, (1, 1)).unwrap()).unwrap();
        assert_eq!(gm.mult(), &[8, 4, 4, 8]);
        assert_eq!(degrees(&gm), vec![12; 5]);
    }

    #[test]
    fn endpoint_case_examples() {
        let plan = LoopPlan {
            loops: vec![2, 0, 3],
            minima: (0, 0),
            target_sum: 5,
        };
        let gm = build_lemma_multiple(LemmaCase::III, 6, 1, IndicatorPair::new(1, 3), &plan).unwrap();
        assert_eq!(gm.mult(), &[7, 5]);
        assert_eq!(degrees(&gm), vec![11, 12, 11]);

        let plan = plan_loops(&[1, 0, 1], 2, (1, 1)).unwrap();
        let gm = build_lemma_multiple(LemmaCase::II, 2, 1, IndicatorPair::new(1, 2), &plan).unwrap();
        assert_eq!(gm.mult(), &[1, 2]);
        assert_eq!(degrees(&gm), vec![3, 3, 4]);

        let plan = plan_loops(&[2, 0, 2], 4, (2, 2)).unwrap();
        let gm = build_lemma_multiple(LemmaCase::I, 3, 1, IndicatorPair::new(2, 2), &plan).unwrap();
        assert_eq!(gm.mult(), &[2, 2]);
        assert_eq!(degrees(&gm), vec![6, 4, 6]);
    }

    #[test]
    fn odd_path_multiple_rejects_wrong_parity_and_budget() {
        let plan = plan_loops(&[1, 0, 1], 2, (1, 1)).unwrap();
        assert!(matches!(
            build_lemma_multiple(LemmaCase::I, 2, 1, IndicatorPair::new(1, 2), &plan),
            Err(Error::Parity(_))
        ));
        assert!(matches!(
            build_lemma_multiple(LemmaCase::III, 2, 1, IndicatorPair::new(1, 1), &plan),
            Err(Error::InfeasibleBudget(_))
        ));
    }

    #[test]
    fn even_cycle_examples() {
        let gm = build_even_cycle_multiple(2, 1).unwrap();
        assert_eq!((gm.mult(), gm.loops()), (&[2][..], &[1, 1][..]));
        assert_eq!(degrees(&gm), vec![4, 4]);
        let gm = build_even_cycle_multiple(3, 2).unwrap();
        assert_eq!((gm.mult(), gm.loops()), (&[4, 2, 4][..], &[1, 0, 0, 1][..]));
        assert_eq!(degrees(&gm), vec![6; 4]);
        let total: usize = degrees(&gm).iter().sum();
        assert_eq!(total, 2 * gm.total_mult() + 2 * gm.total_loops());
        assert!(build_even_cycle_multiple(1, 2).is_err());
    }

    #[test]
    fn even_hamcon_examples() {
        let gm = build_even_hamcon_multiple(3, 2, 1, 2).unwrap();
        assert_eq!((gm.mult(), gm.loops()), (&[3, 2, 4][..], &[1, 0, 0, 1][..]));
        assert_eq!(degrees(&gm), vec![5, 5, 6, 6]);

        let gm = build_even_hamcon_multiple(3, 2, 1, 3).unwrap();
        assert_eq!((gm.mult(), gm.loops()), (&[3, 3, 2][..], &[1, 0, 0, 2][..]));
        assert_eq!(degrees(&gm), vec![5, 6, 5, 6]);

        // a = b goes through the even-distance construction.
        let gm = build_even_hamcon_multiple(3, 2, 2, 2).unwrap();
        assert_eq!(degrees(&gm), vec![6, 4, 6, 6]);
        assert!(gm.is_connected());
        assert!(build_even_hamcon_multiple(2, 2, 1, 3).is_err());
    }
}
