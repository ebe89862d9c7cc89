//! Seeded instance generators and small-graph enumeration for test corpora.
//! Every generator is a pure function of its arguments.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::npo::{solve_3dm, ThreeDmInstance, Triple};

/// Attempts before a rejection sampler gives up.
pub const REJECTION_LIMIT: usize = 10_000;

fn check_probability(p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Parameter(format!(
            "edge probability {p} outside [0, 1]"
        )));
    }
    Ok(())
}

fn sample_graph(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("sampled edges are in range")
}

/// `G(n, p)`.
pub fn gen_random_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    check_probability(p)?;
    Ok(sample_graph(n, p, &mut ChaCha8Rng::seed_from_u64(seed)))
}

/// `G(n, p)` conditioned on being connected, by resampling from one stream.
pub fn gen_connected_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    check_probability(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..REJECTION_LIMIT {
        let g = sample_graph(n, p, &mut rng);
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::RejectionLimit(REJECTION_LIMIT))
}

fn random_triple(n: usize, rng: &mut ChaCha8Rng) -> Triple {
    Triple::new(
        rng.gen_range(1..=n),
        rng.gen_range(1..=n),
        rng.gen_range(1..=n),
    )
}

/// A solvable instance with its planted matching: `n` triples from two
/// random permutations plus `extra` distinct random triples, shuffled.
/// The second component holds the planted triples' indices, sorted.
pub fn gen_planted_3dm(n: usize, extra: usize, seed: u64) -> Result<(ThreeDmInstance, Vec<usize>)> {
    if n == 0 {
        return Err(Error::Parameter("n must be at least 1".into()));
    }
    if extra > n.pow(3) - n {
        return Err(Error::Parameter(format!(
            "{extra} extra triples requested, only {} are available",
            n.pow(3) - n
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut b: Vec<usize> = (1..=n).collect();
    let mut y: Vec<usize> = (1..=n).collect();
    b.shuffle(&mut rng);
    y.shuffle(&mut rng);
    let planted: Vec<Triple> = (0..n).map(|i| Triple::new(i + 1, b[i], y[i])).collect();
    let mut seen: HashSet<Triple> = planted.iter().copied().collect();
    let mut triples = planted.clone();
    while triples.len() < n + extra {
        let t = random_triple(n, &mut rng);
        if seen.insert(t) {
            triples.push(t);
        }
    }
    triples.shuffle(&mut rng);
    let mut idx: Vec<usize> = planted
        .iter()
        .map(|p| {
            triples
                .iter()
                .position(|t| t == p)
                .expect("planted triple kept")
        })
        .collect();
    idx.sort_unstable();
    Ok((ThreeDmInstance::new(n, triples), idx))
}

/// `n + extra` distinct triples. With `solvable` a matching is planted;
/// otherwise instances are resampled until the exact solver finds none.
pub fn gen_random_3dm(
    n: usize,
    extra: usize,
    solvable: bool,
    seed: u64,
) -> Result<ThreeDmInstance> {
    if solvable {
        return gen_planted_3dm(n, extra, seed).map(|(inst, _)| inst);
    }
    if n == 0 {
        return Err(Error::Parameter("n must be at least 1".into()));
    }
    let count = n + extra;
    if count > n.pow(3) {
        return Err(Error::Parameter(format!(
            "{count} triples requested, only {} exist",
            n.pow(3)
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..REJECTION_LIMIT {
        let mut seen = HashSet::new();
        let mut triples = Vec::with_capacity(count);
        while triples.len() < count {
            let t = random_triple(n, &mut rng);
            if seen.insert(t) {
                triples.push(t);
            }
        }
        let inst = ThreeDmInstance::new(n, triples);
        if solve_3dm(&inst).is_none() {
            return Ok(inst);
        }
    }
    Err(Error::RejectionLimit(REJECTION_LIMIT))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn rec(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == p.len() {
            out.push(p.clone());
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            rec(k + 1, p, out);
            p.swap(k, i);
        }
    }
    rec(0, &mut p, &mut out);
    out
}

/// One representative of every isomorphism class of connected graphs on
/// exactly `n` vertices, `n <= 7`.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 7, "exhaustive enumeration is limited to 7 vertices");
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let index = |u: usize, v: usize| {
        pairs
            .iter()
            .position(|&p| p == (u.min(v), u.max(v)))
            .unwrap()
    };
    let perms = permutations(n);
    let maps: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| pairs.iter().map(|&(u, v)| index(p[u], p[v])).collect())
        .collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mask in 0u32..(1 << pairs.len()) {
        let canon = maps
            .iter()
            .map(|map| {
                (0..pairs.len())
                    .filter(|&e| mask >> e & 1 == 1)
                    .fold(0u32, |acc, e| acc | 1 << map[e])
            })
            .min()
            .unwrap_or(0);
        if !seen.insert(canon) {
            continue;
        }
        let edges = (0..pairs.len())
            .filter(|&e| canon >> e & 1 == 1)
            .map(|e| pairs[e]);
        let g = Graph::new(n, edges).expect("pairs are in range");
        if g.is_connected() {
            out.push(g);
        }
    }
    out
}
