//! Shared fixtures: bundled specs, seeded random specs and points, and a
//! brute-force submodule oracle working directly on window lattice points.
#![allow(dead_code)]

use std::collections::BTreeMap;

use gwa_duflo::cli::{bundled_config, parse_config};
use gwa_duflo::gwa::Generator;
use gwa_duflo::verma::action_coefficient;
use gwa_duflo::weight::break_positions;
use gwa_duflo::{GaussianRational, GwaSpec, Rational, WeightPoint};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn g(s: &str) -> GaussianRational {
    s.parse().unwrap()
}

pub fn pt(coords: &[&str]) -> WeightPoint {
    WeightPoint::new(coords.iter().map(|c| g(c)).collect())
}

pub fn bundled(name: &str) -> GwaSpec {
    parse_config(bundled_config(name).unwrap()).unwrap().spec
}

pub const BUNDLED: [&str; 5] = [
    "weyl1.cfg",
    "two_breaks.cfg",
    "rank2.cfg",
    "sl2_chi3.cfg",
    "sl2_chi0.cfg",
];

const STEPS: [&str; 7] = ["1", "2", "-1", "1/2", "3/2", "1i", "1+1i"];
const CLASSES: [&str; 4] = ["0", "1/3", "1i", "1/2+1i"];

/// Random spec of the given rank; each `t_i` has `degrees[i]` roots spread
/// over a few lattice classes so that breaks, gaps and off-lattice roots all occur.
pub fn random_spec_with_degrees(rng: &mut impl Rng, degrees: &[usize]) -> GwaSpec {
    let mut steps = Vec::new();
    let mut roots = Vec::new();
    for &d in degrees {
        let b = g(STEPS.choose(rng).unwrap());
        let class_count = rng.gen_range(1..=2);
        let classes: Vec<&str> = CLASSES.choose_multiple(rng, class_count).copied().collect();
        let r: Vec<GaussianRational> = (0..d)
            .map(|_| {
                let c = g(classes.choose(rng).unwrap());
                let k: i64 = rng.gen_range(-4..=4);
                &c + &b.scale(&Rational::from_integer(k))
            })
            .collect();
        steps.push(b);
        roots.push(r);
    }
    GwaSpec::from_roots(steps, roots).unwrap()
}

/// Random spec of rank 1-3 whose length bound stays at most 20 cells.
pub fn random_spec(rng: &mut impl Rng) -> GwaSpec {
    let rank = rng.gen_range(1..=3);
    let degrees: Vec<usize> = match rank {
        1 => vec![rng.gen_range(1..=5)],
        2 => vec![rng.gen_range(1..=3), rng.gen_range(1..=3)],
        _ => vec![1, rng.gen_range(1..=2), 1],
    };
    random_spec_with_degrees(rng, &degrees)
}

/// Random point: a root shifted along the lattice, sometimes pushed off it.
pub fn random_point(spec: &GwaSpec, rng: &mut impl Rng) -> WeightPoint {
    gwa_duflo::primitive::sample_point(spec, rng)
}

/// Submodule lattice of `M(m_a)` computed from scratch on a box containing
/// every break with a margin: strongly connected components of the graph of
/// nonzero generator actions, then all successor-closed unions of components.
pub struct BruteForce {
    pub components: usize,
    pub submodules: usize,
}

pub fn brute_force_submodules(spec: &GwaSpec, a: &WeightPoint) -> BruteForce {
    let n = spec.rank();
    let breaks = break_positions(spec, a);
    let bounds: Vec<(i64, i64)> = (0..n)
        .map(|i| {
            let ks = breaks.offsets(i);
            let lo = ks.first().copied().unwrap_or(0).min(0) - 2;
            let hi = ks.last().copied().unwrap_or(0).max(0) + 3;
            (lo, hi)
        })
        .collect();
    let mut points: Vec<Vec<i64>> = vec![Vec::new()];
    for &(lo, hi) in &bounds {
        points = points
            .into_iter()
            .flat_map(|p| {
                (lo..=hi).map(move |k| {
                    let mut q = p.clone();
                    q.push(k);
                    q
                })
            })
            .collect();
    }
    let index: BTreeMap<Vec<i64>, usize> = points
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, p)| (p, i))
        .collect();
    let mut succ = vec![Vec::new(); points.len()];
    for (u, p) in points.iter().enumerate() {
        for i in 0..n {
            for (gen, d) in [(Generator::X(i), 1), (Generator::Y(i), -1)] {
                let mut q = p.clone();
                q[i] += d;
                if let Some(&v) = index.get(&q) {
                    if !action_coefficient(spec, a, p, gen).is_zero() {
                        succ[u].push(v);
                    }
                }
            }
        }
    }
    let comp = strongly_connected(&succ);
    let count = comp.iter().max().map_or(0, |m| m + 1);
    assert!(count <= 20, "oracle limited to 20 components");
    let mut comp_succ = vec![0u32; count];
    for (u, vs) in succ.iter().enumerate() {
        for &v in vs {
            if comp[u] != comp[v] {
                comp_succ[comp[u]] |= 1 << comp[v];
            }
        }
    }
    let submodules = (0u32..1 << count)
        .filter(|&mask| (0..count).all(|c| mask & (1 << c) == 0 || comp_succ[c] & !mask == 0))
        .count();
    BruteForce {
        components: count,
        submodules,
    }
}

/// Kosaraju's algorithm; returns a component id per vertex.
fn strongly_connected(succ: &[Vec<usize>]) -> Vec<usize> {
    let n = succ.len();
    let mut pred = vec![Vec::new(); n];
    for (u, vs) in succ.iter().enumerate() {
        for &v in vs {
            pred[v].push(u);
        }
    }
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut stack = vec![(s, 0usize)];
        while let Some(&mut (u, ref mut next)) = stack.last_mut() {
            if let Some(&v) = succ[u].get(*next) {
                *next += 1;
                if !seen[v] {
                    seen[v] = true;
                    stack.push((v, 0));
                }
            } else {
                order.push(u);
                stack.pop();
            }
        }
    }
    let mut comp = vec![usize::MAX; n];
    let mut c = 0;
    for &s in order.iter().rev() {
        if comp[s] != usize::MAX {
            continue;
        }
        let mut stack = vec![s];
        comp[s] = c;
        while let Some(u) = stack.pop() {
            for &v in &pred[u] {
                if comp[v] == usize::MAX {
                    comp[v] = c;
                    stack.push(v);
                }
            }
        }
        c += 1;
    }
    comp
}
