//! Acceptance run: one PASS/FAIL line per criterion.

mod common;

use std::panic;
use std::time::Instant;

use lexham::decide::{decide, decide_spec, decide_uniform, Property};
use lexham::forest::pi;
use lexham::graph::{disjoint_union, ProductVertex};
use lexham::multiple::{
    build_cycle_multiple_odd, build_even_cycle_multiple, build_even_hamcon_multiple, build_lemma_multiple,
    IndicatorPair, LemmaCase, LoopPlan,
};
use lexham::oracle::{brute_ham_connected, brute_hamiltonian, brute_pi, brute_traceable, brute_xy_path};
use lexham::verify::{verify_edge_profile, verify_multiple, verify_walk, DegreeProfile};
use lexham::witness::{euler_trail, occurrence_counts};
use lexham::{build_product, construct, Construction, Goal, ProductSpec, SimpleGraph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn figure_layer() -> SimpleGraph {
    disjoint_union(&SimpleGraph::path(3), &SimpleGraph::empty(3))
}

fn oracle(spec: &ProductSpec, property: Property) -> bool {
    let g = build_product(spec);
    match property {
        Property::Hamiltonian => brute_hamiltonian(&g),
        Property::Traceable => brute_traceable(&g),
        Property::HamConnected => brute_ham_connected(&g),
    }
    .expect("oracle within limits")
}

fn goal_for(property: Property) -> Option<Goal> {
    match property {
        Property::Hamiltonian => Some(Goal::Cycle),
        Property::Traceable => Some(Goal::Path),
        Property::HamConnected => None,
    }
}

/// Checks a witness for `goal` whenever the decision is positive.
fn check_witness(spec: &ProductSpec, goal: Goal) -> Result<(), String> {
    match construct(spec, goal).map_err(|e| e.to_string())? {
        Construction::Infeasible(d) => Err(format!("construct refused: {:?}", d.failures().collect::<Vec<_>>())),
        Construction::Witness(w) => {
            let ends = match goal {
                Goal::XyPath { x, y } => Some((x, y)),
                _ => None,
            };
            verify_walk(spec, &w.walk, ends).map_err(|v| v.to_string())?;
            verify_edge_profile(&w.walk, &w.multiple).map_err(|v| v.to_string())
        }
    }
}

fn describe(spec: &ProductSpec) -> String {
    let pis: Vec<usize> = spec.layers().iter().map(|h| pi(h).unwrap()).collect();
    format!(
        "m={} n={} pis={pis:?} layers={}",
        spec.m(),
        spec.n(),
        serde_json::to_string(spec).unwrap()
    )
}

/// Decision/oracle agreement over `specs`, with witnesses for positives.
fn agreement(
    specs: &[ProductSpec],
    properties: &[Property],
    connectivity_limit: usize,
) -> Result<(usize, usize), String> {
    let mut checked = 0;
    let mut positives = 0;
    for spec in specs {
        for &p in properties {
            if p == Property::HamConnected && spec.vertex_count() > connectivity_limit {
                continue;
            }
            let d = decide_spec(spec, p).map_err(|e| e.to_string())?;
            let o = oracle(spec, p);
            if d.verdict != o {
                return Err(format!("{p}: decide {} oracle {o} on {}", d.verdict, describe(spec)));
            }
            if d.verdict {
                positives += 1;
                if let Some(goal) = goal_for(p) {
                    check_witness(spec, goal).map_err(|e| format!("{p} witness on {}: {e}", describe(spec)))?;
                }
            }
            checked += 1;
        }
    }
    Ok((checked, positives))
}

fn corpus(ms: &[usize], sample_n4: &[(usize, usize)], seed: u64) -> Vec<ProductSpec> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut specs = Vec::new();
    for &m in ms {
        for n in 1..=3 {
            let graphs: Vec<_> = common::all_graphs(n).into_iter().map(|(_, g)| g).collect();
            specs.extend(common::all_tuples(&graphs, m));
        }
    }
    let four: Vec<_> = common::all_graphs(4).into_iter().map(|(_, g)| g).collect();
    for &(m, count) in sample_n4 {
        if count == usize::MAX {
            specs.extend(common::all_tuples(&four, m));
        } else {
            specs.extend(common::sample_tuples(&mut rng, &four, m, count));
        }
    }
    specs
}

fn criterion_1() -> Outcome {
    let h = figure_layer();
    let p3 = ProductSpec::uniform(3, h.clone()).unwrap();
    let p5 = ProductSpec::uniform(5, h).unwrap();
    let ham3 = decide_spec(&p3, Property::Hamiltonian).unwrap();
    let tr3 = decide_spec(&p3, Property::Traceable).unwrap();
    let ham5 = decide_spec(&p5, Property::Hamiltonian).unwrap();
    if ham3.verdict || tr3.verdict || !ham5.verdict {
        return Err(format!("verdicts {} {} {}", ham3.verdict, tr3.verdict, ham5.verdict));
    }
    check_witness(&p5, Goal::Cycle)?;
    let g3 = build_product(&p3);
    if brute_hamiltonian(&g3).unwrap() || brute_traceable(&g3).unwrap() {
        return Err("oracle found a Hamiltonian cycle or path in P_3[P_3+3K_1]".into());
    }
    let found = brute_hamiltonian(&build_product(&p5)).map_err(|e| e.to_string())?;
    if !found {
        return Err("oracle search found no cycle in P_5[P_3+3K_1]".into());
    }
    Ok("P_3[H] neither hamiltonian nor traceable (decide + 12-vertex exhaustion); P_5[H] cycle built, verified, and found by search".into())
}

fn criterion_2() -> Outcome {
    let specs = corpus(&[3, 5], &[(3, usize::MAX), (5, 150)], 2);
    let (checked, positives) = agreement(&specs, &[Property::Hamiltonian, Property::Traceable], 0)?;
    Ok(format!(
        "{} products, {checked} verdicts agree with the oracle ({positives} positives, all witnessed)",
        specs.len()
    ))
}

fn criterion_3() -> Outcome {
    // 4-vertex layers are used while the product stays within 21 vertices.
    let specs = corpus(&[2, 4, 6], &[(2, usize::MAX), (4, 150)], 3);
    let (checked, positives) = agreement(
        &specs,
        &[Property::Hamiltonian, Property::Traceable, Property::HamConnected],
        12,
    )?;
    Ok(format!(
        "{} products, {checked} verdicts agree with the oracle ({positives} positives, all witnessed)",
        specs.len()
    ))
}

fn criterion_4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut built = 0;
    let mut attempts = 0;
    let mut methods = std::collections::BTreeMap::new();
    while built < 500 {
        attempts += 1;
        if attempts > 20_000 {
            return Err(format!("only {built} feasible instances in {attempts} attempts"));
        }
        let m = rng.gen_range(2..=7);
        let n = rng.gen_range(1..=5);
        let spec = common::random_spec(&mut rng, m, n);
        let goal = match rng.gen_range(0..3) {
            0 => Goal::Cycle,
            1 => Goal::Path,
            _ => {
                let x = ProductVertex::new(rng.gen_range(1..=m), rng.gen_range(0..n));
                let y = ProductVertex::new(rng.gen_range(1..=m), rng.gen_range(0..n));
                if x == y {
                    continue;
                }
                Goal::XyPath { x, y }
            }
        };
        let Construction::Witness(w) = construct(&spec, goal).map_err(|e| e.to_string())? else {
            continue;
        };
        let ends = match goal {
            Goal::XyPath { x, y } => Some((x, y)),
            _ => None,
        };
        verify_walk(&spec, &w.walk, ends).map_err(|v| format!("{goal:?} on {}: {v}", describe(&spec)))?;
        verify_edge_profile(&w.walk, &w.multiple).map_err(|v| format!("{goal:?} on {}: {v}", describe(&spec)))?;
        if let Some(trail) = &w.trail {
            let counts = occurrence_counts(trail);
            let expected: Vec<usize> = w.multiple.loops().iter().map(|l| n - l).collect();
            if counts != expected {
                return Err(format!("occurrences {counts:?} vs n - loops {expected:?}"));
            }
        }
        *methods.entry(w.method.to_string()).or_insert(0) += 1;
        built += 1;
    }
    Ok(format!(
        "{built} witnesses verified ({attempts} attempts); methods {methods:?}"
    ))
}

/// Odd-position loop vectors with entries in `0..n`, the given total and end minima.
fn loop_vectors(m: usize, n: usize, target: usize, minima: (usize, usize)) -> Vec<Vec<usize>> {
    fn rec(
        pos: usize,
        m: usize,
        n: usize,
        left: usize,
        minima: (usize, usize),
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if pos >= m {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let lo = if pos == 0 {
            minima.0
        } else if pos == m - 1 {
            minima.1
        } else {
            0
        };
        for v in lo..n.min(left + 1) {
            cur[pos] = v;
            rec(pos + 2, m, n, left - v, minima, cur, out);
        }
        cur[pos] = 0;
    }
    let mut out = Vec::new();
    rec(0, m, n, target, minima, &mut vec![0; m], &mut out);
    out
}

fn criterion_5() -> Outcome {
    let mut checked = 0;
    for k in 1..=4 {
        let m = 2 * k + 1;
        for n in 2..=6 {
            for loops in loop_vectors(m, n, n, (1, 1)) {
                let plan = LoopPlan {
                    loops,
                    minima: (1, 1),
                    target_sum: n,
                };
                let gm = build_cycle_multiple_odd(n, k, &plan).map_err(|e| e.to_string())?;
                verify_multiple(&gm, n, DegreeProfile::Cycle).map_err(|v| v.to_string())?;
                if gm.mult().iter().any(|&c| c < 2) {
                    return Err(format!("cycle multiple {gm:?} has an edge below 2"));
                }
                checked += 1;
            }
            for a in 1..=m {
                for b in 1..=m {
                    let Some(case) = LemmaCase::for_endpoints(a, b) else {
                        continue;
                    };
                    let minima = case.minima(m, a, b);
                    let special = case == LemmaCase::III && minima == (0, 0);
                    let floor = if matches!(case, LemmaCase::II) || special { 1 } else { 2 };
                    for loops in loop_vectors(m, n, case.target_sum(n), minima) {
                        let plan = LoopPlan {
                            loops,
                            minima,
                            target_sum: case.target_sum(n),
                        };
                        let gm = build_lemma_multiple(case, n, k, IndicatorPair::new(a, b), &plan)
                            .map_err(|e| format!("{case:?} a={a} b={b} n={n} {plan:?}: {e}"))?;
                        verify_multiple(&gm, n, DegreeProfile::Open { a, b })
                            .map_err(|v| format!("{case:?} a={a} b={b}: {v}"))?;
                        if gm.mult().iter().any(|&c| c < floor) {
                            return Err(format!("{case:?} a={a} b={b}: {gm:?} below {floor}"));
                        }
                        euler_trail(&gm, Some(a), Some(b)).map_err(|e| e.to_string())?;
                        checked += 1;
                    }
                }
            }
        }
    }
    for k in 1..=4 {
        let m = 2 * k;
        for n in 2..=6 {
            let gm = build_even_cycle_multiple(n, k).map_err(|e| e.to_string())?;
            verify_multiple(&gm, n, DegreeProfile::Cycle).map_err(|v| v.to_string())?;
            checked += 1;
            if k == 1 {
                continue;
            }
            for a in 1..=m {
                for b in a..=m {
                    if (b - a) % 2 == 0 && n < 3 {
                        continue;
                    }
                    let gm = build_even_hamcon_multiple(n, k, a, b).map_err(|e| e.to_string())?;
                    verify_multiple(&gm, n, DegreeProfile::Open { a, b })
                        .map_err(|v| format!("even k={k} n={n} a={a} b={b}: {v}"))?;
                    checked += 1;
                }
            }
        }
    }
    Ok(format!(
        "{checked} multiples accepted by verify_multiple with the required multiplicity floors"
    ))
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut graphs: Vec<(String, SimpleGraph)> = (0..1000)
        .map(|i| {
            let n = rng.gen_range(1..=8);
            let p = rng.gen_range(0.0..=1.0);
            (format!("random#{i}"), common::random_graph(&mut rng, n, p))
        })
        .collect();
    graphs.extend(common::named_families());
    for (name, g) in &graphs {
        let fast = pi(g).map_err(|e| e.to_string())?;
        let slow = brute_pi(g).map_err(|e| e.to_string())?;
        if fast != slow {
            return Err(format!("{name}: pi {fast} but brute_pi {slow} on {}", g.to_json()));
        }
    }
    Ok(format!("{} graphs, pi == brute_pi on all", graphs.len()))
}

fn criterion_7() -> Outcome {
    let mut checked = 0;
    let mut boundary = 0;
    for m in (3..=15).step_by(2) {
        let k1 = (m - 1) / 2 + 1;
        for n in 1..=10 {
            for p in 0..n {
                for prop in Property::ALL {
                    let uniform = decide_uniform(m, n, p, prop).map_err(|e| e.to_string())?;
                    let general = decide(prop, m, &vec![p; m], n).map_err(|e| e.to_string())?;
                    let num = match prop {
                        Property::Hamiltonian => n,
                        Property::Traceable => n - 1,
                        Property::HamConnected => n + 1,
                    };
                    let ceiling = (p > 0).then(|| num.div_ceil(p));
                    let formula = match (prop, ceiling) {
                        (Property::Hamiltonian, Some(c)) => c <= k1,
                        (Property::Traceable, Some(c)) => c <= k1,
                        (Property::HamConnected, Some(c)) => p >= 2 && c <= k1,
                        (Property::Traceable, None) => n == 1,
                        (_, None) => false,
                    };
                    if uniform.verdict != general.verdict || uniform.verdict != formula {
                        return Err(format!(
                            "m={m} n={n} pi={p} {prop}: uniform {} general {} formula {formula}",
                            uniform.verdict, general.verdict
                        ));
                    }
                    if ceiling == Some(k1) {
                        boundary += 1;
                    }
                    checked += 1;
                }
            }
        }
    }
    Ok(format!(
        "{checked} grid points agree ({boundary} with the ceiling exactly k+1)"
    ))
}

fn criterion_8() -> Outcome {
    let p4 = SimpleGraph::path(4);
    let p3k1 = disjoint_union(&SimpleGraph::path(3), &SimpleGraph::empty(1));
    let k2k1 = disjoint_union(&SimpleGraph::complete(2), &SimpleGraph::empty(2));
    let empty = SimpleGraph::empty(4);
    let v = ProductVertex::new;
    // (class, boundary layers, below layers, x, y, required sum)
    let cases = [
        (
            "even/even",
            [&p4, &empty, &p3k1],
            [&p3k1, &empty, &p3k1],
            v(2, 0),
            v(2, 1),
            5,
        ),
        (
            "odd/even",
            [&p3k1, &empty, &p3k1],
            [&p3k1, &empty, &k2k1],
            v(1, 0),
            v(2, 0),
            4,
        ),
        (
            "odd/odd",
            [&p3k1, &empty, &k2k1],
            [&k2k1, &empty, &k2k1],
            v(1, 0),
            v(3, 0),
            3,
        ),
    ];
    let mut lines = Vec::new();
    for (class, at, below, x, y, required) in cases {
        let spec_at = ProductSpec::new(at.iter().map(|&h| h.clone()).collect()).unwrap();
        let spec_below = ProductSpec::new(below.iter().map(|&h| h.clone()).collect()).unwrap();
        let sum = |s: &ProductSpec| pi(s.layer(1)).unwrap() + pi(s.layer(3)).unwrap();
        if sum(&spec_at) != required || sum(&spec_below) != required - 1 {
            return Err(format!(
                "{class}: instance sums {} / {}",
                sum(&spec_at),
                sum(&spec_below)
            ));
        }
        check_witness(&spec_at, Goal::XyPath { x, y }).map_err(|e| format!("{class}: {e}"))?;
        let g = build_product(&spec_below);
        let (fx, fy) = (
            lexham::product::flatten(x, 4).unwrap(),
            lexham::product::flatten(y, 4).unwrap(),
        );
        if brute_xy_path(&g, fx, fy).unwrap() {
            return Err(format!("{class}: oracle found a path below the bound"));
        }
        lines.push(format!("{class} sum {required} built, {} refuted", required - 1));
    }
    Ok(lines.join("; "))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 8] = [
        ("worked example reproduction", criterion_1),
        ("odd-path two-sided check", criterion_2),
        ("even-path two-sided check", criterion_3),
        ("witness soundness", criterion_4),
        ("multiple degree profiles", criterion_5),
        ("pi exactness", criterion_6),
        ("uniform closed-form identity", criterion_7),
        ("necessity-bound tightness", criterion_8),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = panic::catch_unwind(run).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS criterion {} ({name}): {detail} [{secs:.1}s]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {} ({name}): {detail} [{secs:.1}s]", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
