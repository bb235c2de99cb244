//! Shared helpers for the integration suites: small-graph enumeration up to
//! isomorphism and seeded random instances.

#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tcdkit::graph::Graph;

fn pair_index(n: usize) -> Vec<Vec<usize>> {
    let mut idx = vec![vec![0; n]; n];
    let mut next = 0;
    for u in 0..n {
        for v in u + 1..n {
            idx[u][v] = next;
            idx[v][u] = next;
            next += 1;
        }
    }
    idx
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    fn heap(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == 1 {
            out.push(cur.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, cur, out);
            if k % 2 == 0 {
                cur.swap(i, k - 1);
            } else {
                cur.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut cur, &mut out);
    out
}

pub fn graph_from_mask(n: usize, mask: u32) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> bit & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::new(n, &edges).unwrap()
}

fn mask_connected(n: usize, mask: u32) -> bool {
    if n == 0 {
        return true;
    }
    let idx = pair_index(n);
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for v in 0..n {
            if v != u && !seen[v] && mask >> idx[u][v] & 1 == 1 {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    seen.into_iter().all(|x| x)
}

/// All graphs on exactly `n` vertices, one representative per isomorphism
/// class, optionally restricted to connected graphs. Intended for n ≤ 6.
pub fn graph_classes(n: usize, connected_only: bool) -> Vec<Graph> {
    assert!(n <= 6, "exhaustive enumeration limited to 6 vertices");
    let bits = n * (n - 1) / 2;
    let idx = pair_index(n);
    let perms = permutations(n);
    let mut out = Vec::new();
    'mask: for mask in 0..1u32 << bits {
        if connected_only && !mask_connected(n, mask) {
            continue;
        }
        // keep only the lexicographically smallest relabeling
        for perm in &perms {
            let mut image = 0u32;
            let mut bit = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if mask >> bit & 1 == 1 {
                        image |= 1 << idx[perm[u]][perm[v]];
                    }
                    bit += 1;
                }
            }
            if image < mask {
                continue 'mask;
            }
        }
        out.push(graph_from_mask(n, mask));
    }
    out
}

/// Seeded random connected graph on exactly `n` vertices.
pub fn random_connected(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    loop {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(0.35) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::new(n, &edges).unwrap();
        if g.connected_components().len() == 1 {
            return g;
        }
    }
}

/// Seeded random graph (possibly disconnected).
pub fn random_graph(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
