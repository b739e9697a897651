//! Verdicts for `P_m[H_1, .., H_m]` from the layer values `pi(H_i)` alone.
//!
//! Odd `m = 2k + 1`:
//! * hamiltonian iff `pi(H_1) >= 1`, `pi(H_m) >= 1` and the odd-layer sum is at least `n`;
//! * traceable iff the odd-layer sum is at least `n - 1`;
//! * hamiltonian connected iff `pi(H_1) >= 2`, `pi(H_m) >= 2` and the odd-layer sum is at least `n + 1`.
//!
//! Even `m = 2k`:
//! * hamiltonian iff `pi(H_1) >= 1` and `pi(H_m) >= 1` (for `m = 2`: iff `n >= 2`);
//! * always traceable;
//! * hamiltonian connected iff `pi(H_1) >= 1` and `pi(H_2) >= 1` when `k = 1`
//!   (or `n = 1`), and iff `pi(H_1) >= 2` and `pi(H_m) >= 2` when `k > 1`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::forest::{pi_with, ExactLimits};
use crate::product::ProductSpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    Hamiltonian,
    Traceable,
    HamConnected,
}

impl Property {
    pub const ALL: [Property; 3] = [Property::Hamiltonian, Property::Traceable, Property::HamConnected];

    pub fn as_str(self) -> &'static str {
        match self {
            Property::Hamiltonian => "hamiltonian",
            Property::Traceable => "traceable",
            Property::HamConnected => "ham-connected",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Property {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hamiltonian" => Ok(Property::Hamiltonian),
            "traceable" => Ok(Property::Traceable),
            "ham-connected" | "ham_connected" | "hamiltonian-connected" => Ok(Property::HamConnected),
            _ => Err(Error::Parse(format!("unknown property {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = ">=")]
    AtLeast,
    #[serde(rename = "<=")]
    AtMost,
}

/// One ledger line: `actual <relation> required`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Condition {
    pub name: String,
    pub relation: Relation,
    pub required: usize,
    pub actual: usize,
    pub satisfied: bool,
}

impl Condition {
    pub fn at_least(name: impl Into<String>, required: usize, actual: usize) -> Self {
        Condition {
            name: name.into(),
            relation: Relation::AtLeast,
            required,
            actual,
            satisfied: actual >= required,
        }
    }

    pub fn at_most(name: impl Into<String>, required: usize, actual: usize) -> Self {
        Condition {
            name: name.into(),
            relation: Relation::AtMost,
            required,
            actual,
            satisfied: actual <= required,
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (op, neg) = match self.relation {
            Relation::AtLeast => (">=", "<"),
            Relation::AtMost => ("<=", ">"),
        };
        let shown = if self.satisfied { op } else { neg };
        write!(f, "{} {} {} {}", self.name, self.actual, shown, self.required)
    }
}

/// Verdict plus the conditions it was derived from. The verdict is always the
/// conjunction of the `ledger` flags; `advisory` lines are informational.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decision {
    pub verdict: bool,
    pub ledger: Vec<Condition>,
    pub citation: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub advisory: Vec<Condition>,
}

impl Decision {
    pub fn new(ledger: Vec<Condition>, citation: impl Into<String>) -> Self {
        Decision {
            verdict: ledger.iter().all(|c| c.satisfied),
            ledger,
            citation: citation.into(),
            advisory: Vec::new(),
        }
    }

    pub fn with_advisory(mut self, advisory: Vec<Condition>) -> Self {
        self.advisory = advisory;
        self
    }

    /// Ledger lines that failed.
    pub fn failures(&self) -> impl Iterator<Item = &Condition> {
        self.ledger.iter().filter(|c| !c.satisfied)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("decision serializes")
    }
}

fn check_inputs(m: usize, pis: &[usize], n: usize) -> Result<()> {
    if m < 2 {
        return Err(Error::Precondition(format!(
            "m = {m}, the path needs at least 2 vertices"
        )));
    }
    if pis.len() != m {
        return Err(Error::Precondition(format!("{} pi values for m = {m}", pis.len())));
    }
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if let Some(i) = pis.iter().position(|&p| p >= n) {
        return Err(Error::Precondition(format!(
            "pi(H_{}) = {} exceeds n - 1 = {}",
            i + 1,
            pis[i],
            n - 1
        )));
    }
    Ok(())
}

fn odd_sum(pis: &[usize]) -> usize {
    pis.iter().step_by(2).sum()
}

fn sum_name() -> &'static str {
    "sum of pi(H_i) over odd i"
}

fn end_conditions(pis: &[usize], required: usize) -> Vec<Condition> {
    let m = pis.len();
    vec![
        Condition::at_least("pi(H_1)", required, pis[0]),
        Condition::at_least(format!("pi(H_{m})"), required, pis[m - 1]),
    ]
}

pub fn decide_hamiltonian(m: usize, pis: &[usize], n: usize) -> Result<Decision> {
    check_inputs(m, pis, n)?;
    Ok(if m % 2 == 1 {
        let mut ledger = end_conditions(pis, 1);
        ledger.push(Condition::at_least(sum_name(), n, odd_sum(pis)));
        Decision::new(ledger, "odd-path/hamiltonian")
    } else if m == 2 {
        // H_1 and H_2 are joined completely, so K_{n,n} spans the product.
        Decision::new(vec![Condition::at_least("n", 2, n)], "two-layer/hamiltonian")
    } else {
        Decision::new(end_conditions(pis, 1), "even-path/hamiltonian")
    })
}

pub fn decide_traceable(m: usize, pis: &[usize], n: usize) -> Result<Decision> {
    check_inputs(m, pis, n)?;
    Ok(if m % 2 == 1 {
        Decision::new(
            vec![Condition::at_least(sum_name(), n - 1, odd_sum(pis))],
            "odd-path/traceable",
        )
    } else {
        Decision::new(Vec::new(), "even-path/traceable")
    })
}

pub fn decide_ham_connected(m: usize, pis: &[usize], n: usize) -> Result<Decision> {
    check_inputs(m, pis, n)?;
    Ok(if m % 2 == 1 {
        let mut ledger = end_conditions(pis, 2);
        ledger.push(Condition::at_least(sum_name(), n + 1, odd_sum(pis)));
        Decision::new(ledger, "odd-path/ham-connected")
    } else if m == 2 {
        if n == 1 {
            Decision::new(vec![Condition::at_most("n", 1, n)], "two-layer/ham-connected")
        } else {
            Decision::new(end_conditions(pis, 1), "two-layer/ham-connected")
        }
    } else {
        // The statement of this clause is sometimes read with H_2 in place of
        // H_m; that reading is reported without affecting the verdict.
        Decision::new(end_conditions(pis, 2), "even-path/ham-connected")
            .with_advisory(vec![Condition::at_least("pi(H_2)", 2, pis[1])])
    })
}

pub fn decide(property: Property, m: usize, pis: &[usize], n: usize) -> Result<Decision> {
    match property {
        Property::Hamiltonian => decide_hamiltonian(m, pis, n),
        Property::Traceable => decide_traceable(m, pis, n),
        Property::HamConnected => decide_ham_connected(m, pis, n),
    }
}

/// `pi(H_i)` for every layer, using the exact limits from the environment.
pub fn layer_pis(spec: &ProductSpec) -> Result<Vec<usize>> {
    let limits = ExactLimits::from_env();
    spec.layers().iter().map(|h| pi_with(h, &limits)).collect()
}

/// Computes every `pi(H_i)` and then decides.
pub fn decide_spec(spec: &ProductSpec, property: Property) -> Result<Decision> {
    decide(property, spec.m(), &layer_pis(spec)?, spec.n())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(i: usize) -> Self {
        if i.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Lower bound on the odd-layer sum forced by a Hamiltonian path whose ends lie
/// in layers of the given parities on an odd path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RequiredSum {
    NPlusOne,
    N,
    NMinusOne,
}

impl RequiredSum {
    pub fn value(self, n: usize) -> usize {
        match self {
            RequiredSum::NPlusOne => n + 1,
            RequiredSum::N => n,
            RequiredSum::NMinusOne => n.saturating_sub(1),
        }
    }
}

impl fmt::Display for RequiredSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RequiredSum::NPlusOne => "n+1",
            RequiredSum::N => "n",
            RequiredSum::NMinusOne => "n-1",
        })
    }
}

pub fn necessity_bound(a: Parity, b: Parity) -> RequiredSum {
    match (a, b) {
        (Parity::Even, Parity::Even) => RequiredSum::NPlusOne,
        (Parity::Odd, Parity::Odd) => RequiredSum::NMinusOne,
        _ => RequiredSum::N,
    }
}

fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

/// Decision for `P_m[H]` with every layer equal to `H`, `|H| = n`,
/// `pi(H) = pi_h`. Odd `m` with `pi_h >= 1` uses the ceiling forms; every
/// other input goes through the general procedure.
pub fn decide_uniform(m: usize, n: usize, pi_h: usize, property: Property) -> Result<Decision> {
    if m.is_multiple_of(2) || pi_h == 0 {
        return decide(property, m, &vec![pi_h; m], n);
    }
    check_inputs(m, &vec![pi_h; m], n)?;
    let k1 = (m - 1) / 2 + 1;
    let (floor, numerator, name) = match property {
        Property::Hamiltonian => (1, n, "ceil(n / pi(H))"),
        Property::Traceable => (0, n - 1, "ceil((n - 1) / pi(H))"),
        Property::HamConnected => (2, n + 1, "ceil((n + 1) / pi(H))"),
    };
    let mut ledger = Vec::new();
    if floor > 0 {
        ledger.push(Condition::at_least("pi(H)", floor, pi_h));
    }
    ledger.push(Condition::at_most(name, k1, ceil_div(numerator, pi_h)));
    Ok(Decision::new(ledger, format!("uniform-odd-path/{}", property.as_str())))
}
