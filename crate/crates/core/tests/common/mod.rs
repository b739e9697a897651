#![allow(dead_code)]

use lexham::graph::disjoint_union;
use lexham::{ProductSpec, SimpleGraph};
use rand::Rng;

fn g(n: usize, edges: &[(usize, usize)]) -> SimpleGraph {
    SimpleGraph::new(n, edges).unwrap()
}

/// One labelled representative of every isomorphism class on `n <= 4` vertices.
pub fn all_graphs(n: usize) -> Vec<(&'static str, SimpleGraph)> {
    match n {
        1 => vec![("K1", g(1, &[]))],
        2 => vec![("2K1", g(2, &[])), ("K2", g(2, &[(0, 1)]))],
        3 => vec![
            ("3K1", g(3, &[])),
            ("K2+K1", g(3, &[(0, 1)])),
            ("P3", g(3, &[(0, 1), (1, 2)])),
            ("K3", g(3, &[(0, 1), (1, 2), (0, 2)])),
        ],
        4 => vec![
            ("4K1", g(4, &[])),
            ("K2+2K1", g(4, &[(0, 1)])),
            ("2K2", g(4, &[(0, 1), (2, 3)])),
            ("P3+K1", g(4, &[(0, 1), (1, 2)])),
            ("K3+K1", g(4, &[(0, 1), (1, 2), (0, 2)])),
            ("P4", g(4, &[(0, 1), (1, 2), (2, 3)])),
            ("K1,3", g(4, &[(0, 1), (0, 2), (0, 3)])),
            ("C4", g(4, &[(0, 1), (1, 2), (2, 3), (0, 3)])),
            ("paw", g(4, &[(0, 1), (1, 2), (0, 2), (2, 3)])),
            ("diamond", g(4, &[(0, 1), (1, 2), (0, 2), (1, 3), (2, 3)])),
            ("K4", SimpleGraph::complete(4)),
        ],
        _ => panic!("no catalogue for n = {n}"),
    }
}

/// Every layer tuple over `graphs` of length `m`.
pub fn all_tuples(graphs: &[SimpleGraph], m: usize) -> Vec<ProductSpec> {
    let mut out = Vec::new();
    let mut idx = vec![0; m];
    loop {
        out.push(ProductSpec::new(idx.iter().map(|&i| graphs[i].clone()).collect()).unwrap());
        let mut t = 0;
        while t < m {
            idx[t] += 1;
            if idx[t] < graphs.len() {
                break;
            }
            idx[t] = 0;
            t += 1;
        }
        if t == m {
            return out;
        }
    }
}

pub fn sample_tuples<R: Rng>(rng: &mut R, graphs: &[SimpleGraph], m: usize, count: usize) -> Vec<ProductSpec> {
    (0..count)
        .map(|_| ProductSpec::new((0..m).map(|_| graphs[rng.gen_range(0..graphs.len())].clone()).collect()).unwrap())
        .collect()
}

/// Erdos-Renyi graph with edge probability `p`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> SimpleGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    SimpleGraph::new(n, &edges).unwrap()
}

pub fn random_spec<R: Rng>(rng: &mut R, m: usize, n: usize) -> ProductSpec {
    let layers = (0..m)
        .map(|_| {
            let p = rng.gen_range(0.0..=1.0);
            random_graph(rng, n, p)
        })
        .collect();
    ProductSpec::new(layers).unwrap()
}

/// Paths, cycles, stars, complete graphs, edgeless graphs and some unions.
pub fn named_families() -> Vec<(String, SimpleGraph)> {
    let mut out = Vec::new();
    for n in 1..=9 {
        out.push((format!("P{n}"), SimpleGraph::path(n)));
        out.push((format!("{n}K1"), SimpleGraph::empty(n)));
        out.push((format!("K{n}"), SimpleGraph::complete(n)));
        if n >= 3 {
            out.push((format!("C{n}"), SimpleGraph::cycle(n)));
        }
        if n >= 2 {
            out.push((format!("K1,{}", n - 1), SimpleGraph::star(n - 1)));
        }
    }
    let parts = [
        SimpleGraph::path(3),
        SimpleGraph::cycle(3),
        SimpleGraph::star(3),
        SimpleGraph::complete(2),
        SimpleGraph::empty(2),
        SimpleGraph::cycle(4),
    ];
    for (i, a) in parts.iter().enumerate() {
        for b in &parts[i..] {
            let u = disjoint_union(a, b);
            out.push((format!("union{}+{}", a.order(), b.order()), u));
        }
    }
    out.push((
        "P3+3K1".into(),
        disjoint_union(&SimpleGraph::path(3), &SimpleGraph::empty(3)),
    ));
    out
}
