//! Brute-force oracles and random generators shared by the property suites.
#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::BTreeMap;

use qnet_core::{Edge, Mode, NetworkConfig, NetworkGraph, VertexId};
use rand::seq::SliceRandom;
use rand::Rng;

/// Adjacency matrix of a random simple graph on `2..=max_n` vertices.
pub fn random_simple<R: Rng>(rng: &mut R, max_n: usize) -> Vec<Vec<bool>> {
    let n = rng.random_range(2..=max_n);
    let p = rng.random_range(0.1..0.9);
    let mut adj = vec![vec![false; n]; n];
    for a in 0..n {
        for b in a + 1..n {
            if rng.random_bool(p) {
                adj[a][b] = true;
                adj[b][a] = true;
            }
        }
    }
    adj
}

pub fn pairs_of(adj: &[Vec<bool>]) -> Vec<(usize, usize)> {
    let n = adj.len();
    (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .filter(|&(a, b)| adj[a][b])
        .collect()
}

pub fn brute_triangles(adj: &[Vec<bool>]) -> usize {
    let n = adj.len();
    let mut count = 0;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if adj[a][b] && adj[b][c] && adj[a][c] {
                    count += 1;
                }
            }
        }
    }
    count
}

/// 4-cycles by checking the three cyclic orders of every 4-vertex subset.
pub fn brute_squares(adj: &[Vec<bool>]) -> usize {
    let n = adj.len();
    let cycle = |p: [usize; 4]| (0..4).all(|i| adj[p[i]][p[(i + 1) % 4]]);
    let mut count = 0;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    count += [[a, b, c, d], [a, b, d, c], [a, c, b, d]]
                        .into_iter()
                        .filter(|&p| cycle(p))
                        .count();
                }
            }
        }
    }
    count
}

/// Weights whose products and sums are exact in binary floating point.
pub const EXACT_WEIGHTS: [f64; 8] = [1.0, -1.0, 0.5, -0.5, 2.0, -2.0, 0.25, 3.0];

/// Random multigraph with vertex ids drawn from a sparse range, parallel
/// edges with distinct mode pairs, and exactly representable weights.
pub fn random_multigraph<R: Rng>(
    rng: &mut R,
    max_v: usize,
    max_edges: usize,
    max_mode: Mode,
) -> NetworkGraph {
    let n = rng.random_range(2..=max_v);
    let mut ids: Vec<VertexId> = (0..(3 * max_v) as VertexId).collect();
    ids.shuffle(rng);
    let mut ids: Vec<VertexId> = ids[..n].to_vec();
    ids.sort_unstable();
    let target = rng.random_range(1..=max_edges);
    let mut by_key = BTreeMap::new();
    for _ in 0..target * 3 {
        if by_key.len() >= target {
            break;
        }
        let a = rng.random_range(0..n);
        let b = rng.random_range(0..n);
        if a == b {
            continue;
        }
        let (ma, mb) = (
            rng.random_range(0..=max_mode),
            rng.random_range(0..=max_mode),
        );
        let w = EXACT_WEIGHTS[rng.random_range(0..EXACT_WEIGHTS.len())];
        let e = Edge::new(ids[a], ids[b], ma, mb, w).unwrap();
        by_key.entry(e.key()).or_insert(e);
    }
    if by_key.is_empty() {
        let e = Edge::new(ids[0], ids[1], 0, 0, 1.0).unwrap();
        by_key.insert(e.key(), e);
    }
    NetworkGraph::from_edges(by_key.into_values().collect::<Vec<_>>()).unwrap()
}

/// Perfect matchings by filtering every edge subset of size |V|/2, in
/// ascending subset order, as (edge indices, modes per sorted vertex, product).
pub fn brute_matchings(g: &NetworkGraph) -> Vec<(Vec<usize>, Vec<Mode>, f64)> {
    let n = g.vertex_count();
    let m = g.edge_count();
    if n % 2 == 1 || n == 0 {
        return Vec::new();
    }
    let k = n / 2;
    let mut out = Vec::new();
    let mut combo: Vec<usize> = (0..k).collect();
    if k > m {
        return out;
    }
    loop {
        let mut modes: Vec<Option<Mode>> = vec![None; n];
        let mut ok = true;
        for &i in &combo {
            let e = g.edges()[i];
            for (v, mode) in [(e.v1, e.mode1), (e.v2, e.mode2)] {
                let slot = &mut modes[g.index_of(v).unwrap()];
                if slot.is_some() {
                    ok = false;
                }
                *slot = Some(mode);
            }
        }
        if ok && modes.iter().all(Option::is_some) {
            let amp = combo.iter().map(|&i| g.edges()[i].weight).product();
            out.push((
                combo.clone(),
                modes.into_iter().map(Option::unwrap).collect(),
                amp,
            ));
        }
        // Next k-combination of 0..m in lexicographic order.
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if combo[i] < m - k + i {
                break;
            }
        }
        combo[i] += 1;
        for j in i + 1..k {
            combo[j] = combo[j - 1] + 1;
        }
    }
}

/// Permanent by summing over all permutations.
pub fn permanent(a: &[Vec<u8>]) -> u64 {
    fn rec(a: &[Vec<u8>], row: usize, used: &mut Vec<bool>) -> u64 {
        if row == a.len() {
            return 1;
        }
        let mut total = 0;
        for col in 0..a.len() {
            if !used[col] && a[row][col] == 1 {
                used[col] = true;
                total += rec(a, row + 1, used);
                used[col] = false;
            }
        }
        total
    }
    rec(a, 0, &mut vec![false; a.len()])
}

/// Bipartite unit-weight graph with left vertices `0..n` and right `n..2n`.
pub fn bipartite_graph(a: &[Vec<u8>]) -> Option<NetworkGraph> {
    let n = a.len();
    let edges: Vec<Edge> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| a[i][j] == 1)
        .map(|(i, j)| Edge::new(i as u32, (n + j) as u32, 0, 0, 1.0).unwrap())
        .collect();
    let g = NetworkGraph::from_edges(edges).ok()?;
    (g.vertex_count() == 2 * n).then_some(g)
}

fn random_subset<R: Rng>(rng: &mut R, pool: &[VertexId], p: f64) -> Vec<VertexId> {
    pool.iter()
        .copied()
        .filter(|_| rng.random_bool(p))
        .collect()
}

/// Random role config over the graph's vertices; each key present or absent
/// independently.
pub fn random_config<R: Rng>(rng: &mut R, g: &NetworkGraph) -> NetworkConfig {
    let vs = g.vertices();
    let mut c = NetworkConfig::default();
    if rng.random_bool(0.4) {
        c.single_emitters = Some(random_subset(rng, vs, 0.4));
    }
    if rng.random_bool(0.5) {
        c.out_nodes = Some(random_subset(rng, vs, 0.4));
    }
    if rng.random_bool(0.5) {
        c.anc_detectors = Some(random_subset(rng, vs, 0.3));
    }
    if rng.random_bool(0.5) {
        let len = rng.random_range(1..=vs.len().min(5));
        let kets = rng.random_range(1..=4);
        c.target_state = Some(
            (0..kets)
                .map(|_| {
                    (0..len)
                        .map(|_| char::from(b'0' + rng.random_range(0..3u8)))
                        .collect()
                })
                .collect(),
        );
    }
    c
}
