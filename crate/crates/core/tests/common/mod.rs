#![allow(dead_code)]

use std::collections::HashSet;
use std::path::PathBuf;
use std::sync::Arc;

use gainspec_core::{Element, FiniteGroup, GainGraph, SimpleGraph, SwitchingFunction};
use num_bigint::BigUint;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

pub fn fixture(name: &str) -> GainGraph {
    gainspec_core::read_gain_graph(&fixture_path(name)).unwrap()
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn cyclic(m: usize) -> Arc<FiniteGroup> {
    Arc::new(FiniteGroup::cyclic(m).unwrap())
}

pub fn symmetric(n: usize) -> Arc<FiniteGroup> {
    Arc::new(FiniteGroup::symmetric(n).unwrap())
}

/// Random spanning tree plus each remaining pair with probability `p`.
pub fn random_connected_graph(rng: &mut StdRng, n: usize, p: f64) -> SimpleGraph {
    let mut order: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        order.swap(i, rng.random_range(0..=i));
    }
    let mut edges = HashSet::new();
    for i in 1..n {
        let j = rng.random_range(0..i);
        let (a, b) = (order[i], order[j]);
        edges.insert((a.min(b), a.max(b)));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.insert((u, v));
            }
        }
    }
    let edges: Vec<_> = edges.into_iter().collect();
    SimpleGraph::new(n, &edges).unwrap()
}

/// Any simple graph, possibly disconnected.
pub fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> SimpleGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    SimpleGraph::new(n, &edges).unwrap()
}

pub fn random_gains(rng: &mut StdRng, group: &Arc<FiniteGroup>, graph: &SimpleGraph) -> GainGraph {
    let gains = (0..graph.edge_count())
        .map(|_| rng.random_range(0..group.order()))
        .collect();
    GainGraph::with_gains(group.clone(), graph.clone(), gains).unwrap()
}

pub fn random_switching(rng: &mut StdRng, group: &FiniteGroup, n: usize) -> SwitchingFunction {
    SwitchingFunction((0..n).map(|_| rng.random_range(0..group.order())).collect())
}

pub fn random_permutation(rng: &mut StdRng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        p.swap(i, rng.random_range(0..=i));
    }
    p
}

/// Cycle `0 - 1 - … - (n-1) - 0` with independent random gains.
pub fn random_cycle(rng: &mut StdRng, group: &Arc<FiniteGroup>, n: usize) -> GainGraph {
    random_gains(rng, group, &SimpleGraph::cycle(n).unwrap())
}

/// Per-class counts of closed walks of each length up to `hmax`, by
/// enumerating every walk.
pub fn enumerate_closed_walks(g: &GainGraph, hmax: usize) -> Vec<Vec<BigUint>> {
    let grp = g.group();
    let mut counts = vec![vec![BigUint::from(0u32); grp.num_classes()]; hmax + 1];
    for start in 0..g.vertex_count() {
        let mut path = vec![start];
        extend(g, hmax, &mut path, &mut counts);
    }
    counts
}

fn extend(g: &GainGraph, hmax: usize, path: &mut Vec<usize>, counts: &mut [Vec<BigUint>]) {
    let h = path.len() - 1;
    if path[0] == path[h] {
        let gain = g.gain_of_walk(&gainspec_core::Walk(path.clone())).unwrap();
        counts[h][g.group().class_of(gain)] += 1u32;
    }
    if h == hmax {
        return;
    }
    let last = path[h];
    for &(next, _) in g.out_edges(last) {
        path.push(next);
        extend(g, hmax, path, counts);
        path.pop();
    }
}

/// Orbits of `G` on `G^k` under simultaneous conjugation, by union-find.
pub fn brute_force_orbits(group: &FiniteGroup, k: u32) -> usize {
    let order = group.order();
    let total = order.pow(k);
    let decode = |mut idx: usize| -> Vec<Element> {
        (0..k)
            .map(|_| {
                let x = idx % order;
                idx /= order;
                x
            })
            .collect()
    };
    let encode = |t: &[Element]| t.iter().rev().fold(0, |acc, &x| acc * order + x);
    let mut seen = vec![false; total];
    let mut orbits = 0;
    for idx in 0..total {
        if seen[idx] {
            continue;
        }
        orbits += 1;
        let t = decode(idx);
        for x in group.elements() {
            let image: Vec<Element> = t.iter().map(|&a| group.conj(a, x)).collect();
            seen[encode(&image)] = true;
        }
    }
    orbits
}

/// Coefficients (descending) of a product of polynomials.
pub fn poly_mul(a: &[f64], b: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

pub fn poly_product(factors: &[&[f64]]) -> Vec<f64> {
    factors.iter().fold(vec![1.0], |acc, f| poly_mul(&acc, f))
}

/// `Tr(M^h)` for `h = 0..=hmax` of a complex matrix.
pub fn matrix_power_traces(
    m: &nalgebra::DMatrix<gainspec_core::Complex64>,
    hmax: usize,
) -> Vec<gainspec_core::Complex64> {
    let size = m.nrows();
    let mut power = nalgebra::DMatrix::<gainspec_core::Complex64>::identity(size, size);
    let mut out = Vec::with_capacity(hmax + 1);
    for _ in 0..=hmax {
        out.push(power.trace());
        power = &power * m;
    }
    out
}

/// `ξ^i ↦ ξ^{ki}` on every gain of a cyclic-group gain graph.
pub fn galois_twist(g: &GainGraph, k: usize) -> GainGraph {
    let grp = g.group().clone();
    let gains = g.edge_gains().iter().map(|&x| grp.pow(x, k)).collect();
    GainGraph::with_gains(grp, g.underlying().clone(), gains).unwrap()
}
