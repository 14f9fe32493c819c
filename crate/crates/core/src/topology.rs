//! Degree, connectivity and motif statistics.
//!
//! Degrees and the mean degree are multigraph quantities. Everything else
//! (density, clustering, diameter, bipartiteness, tree test, motif counts) is
//! computed on the simple projection, where each adjacent vertex pair counts
//! once regardless of how many parallel edges join it.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{NetworkGraph, VertexId};

/// Simple undirected graph over sorted vertex ids, stored as index adjacency.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SimpleGraph {
    vertices: Vec<VertexId>,
    adj: Vec<Vec<usize>>,
}

impl SimpleGraph {
    /// Builds a simple graph over `vertices` from index pairs. Repeated pairs
    /// and self pairs are ignored.
    pub fn from_index_pairs<I>(vertices: Vec<VertexId>, pairs: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); vertices.len()];
        for (a, b) in pairs {
            if a != b {
                adj[a].push(b);
                adj[b].push(a);
            }
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        SimpleGraph { vertices, adj }
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adj[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].binary_search(&b).is_ok()
    }

    /// Number of distinct adjacent pairs.
    pub fn pair_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Adjacent index pairs `(a, b)` with `a < b`, in ascending order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(a, ns)| ns.iter().filter(move |&&b| b > a).map(move |&b| (a, b)))
    }

    fn bfs(&self, start: usize, dist: &mut [usize]) {
        dist.fill(usize::MAX);
        dist[start] = 0;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
    }

    pub fn component_count(&self) -> usize {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut count = 0;
        for s in 0..n {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        count
    }

    /// Longest shortest path; `None` when disconnected or fewer than two vertices.
    pub fn diameter(&self) -> Option<usize> {
        let n = self.len();
        if n < 2 || self.component_count() != 1 {
            return None;
        }
        let mut dist = vec![0; n];
        let mut best = 0;
        for s in 0..n {
            self.bfs(s, &mut dist);
            best = best.max(dist.iter().copied().max().unwrap_or(0));
        }
        Some(best)
    }

    pub fn is_bipartite(&self) -> bool {
        let n = self.len();
        let mut color: Vec<Option<bool>> = vec![None; n];
        for s in 0..n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap_or(false);
                for &w in &self.adj[u] {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    pub fn is_tree(&self) -> bool {
        let n = self.len();
        n >= 1 && self.pair_count() == n - 1 && self.component_count() == 1
    }

    /// Local clustering of vertex `i`; zero below degree two.
    pub fn local_clustering(&self, i: usize) -> f64 {
        let ns = &self.adj[i];
        let d = ns.len();
        if d < 2 {
            return 0.0;
        }
        let mut links = 0usize;
        for (k, &a) in ns.iter().enumerate() {
            for &b in &ns[k + 1..] {
                if self.has_edge(a, b) {
                    links += 1;
                }
            }
        }
        (2 * links) as f64 / (d * (d - 1)) as f64
    }

    /// Mean local clustering over all vertices, degree < 2 included as zero.
    pub fn average_clustering(&self) -> f64 {
        if self.is_empty() {
            return 0.0;
        }
        let total: f64 = (0..self.len()).map(|i| self.local_clustering(i)).sum();
        total / self.len() as f64
    }
}

/// Collapses parallel edges into one adjacency per vertex pair.
pub fn simple_projection(g: &NetworkGraph) -> SimpleGraph {
    let pairs = g.edges().iter().map(|e| {
        // Endpoints always belong to the derived vertex set.
        let a = g.index_of(e.v1).unwrap_or_default();
        let b = g.index_of(e.v2).unwrap_or_default();
        (a, b)
    });
    SimpleGraph::from_index_pairs(g.vertices().to_vec(), pairs)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Motifs {
    pub triangles: usize,
    /// 4-cycles, each counted once per cyclic vertex set.
    pub squares: usize,
    /// Vertices of simple degree three or more.
    pub stars: usize,
}

/// Counts triangles, 4-cycles and stars.
///
/// 4-cycles use the codegree identity: every 4-cycle has two diagonals and
/// each diagonal pair `(u, v)` with `c` common neighbours closes `C(c, 2)`
/// cycles, so the count is half the sum of `C(codeg(u, v), 2)` over pairs.
pub fn count_motifs(s: &SimpleGraph) -> Motifs {
    let n = s.len();
    let mut triangles = 0;
    for u in 0..n {
        for &v in s.neighbors(u).iter().filter(|&&v| v > u) {
            triangles += s
                .neighbors(v)
                .iter()
                .filter(|&&w| w > v && s.has_edge(u, w))
                .count();
        }
    }

    let mut diagonal_sum = 0usize;
    let mut codeg = vec![0usize; n];
    for u in 0..n {
        codeg.fill(0);
        for &w in s.neighbors(u) {
            for &v in s.neighbors(w) {
                if v > u {
                    codeg[v] += 1;
                }
            }
        }
        diagonal_sum += codeg
            .iter()
            .map(|&c| c * c.saturating_sub(1) / 2)
            .sum::<usize>();
    }

    let stars = (0..n).filter(|&i| s.degree(i) >= 3).count();
    Motifs {
        triangles,
        squares: diagonal_sum / 2,
        stars,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TopologyMetrics {
    /// Multigraph degrees.
    pub vertex_degrees: BTreeMap<VertexId, usize>,
    pub vertex_count: usize,
    pub edge_count: usize,
    /// Distinct adjacent pairs in the simple projection.
    pub pair_count: usize,
    pub mean_degree: f64,
    pub density: f64,
    pub clustering: f64,
    pub diameter: Option<usize>,
    pub component_count: usize,
    pub is_bipartite: bool,
    pub is_tree: bool,
    pub triangles: usize,
    pub squares: usize,
    pub stars: usize,
}

impl TopologyMetrics {
    /// Density as the exact fraction `pairs / C(|V|, 2)`.
    pub fn density_ratio(&self) -> (usize, usize) {
        let n = self.vertex_count;
        (self.pair_count, n * n.saturating_sub(1) / 2)
    }

    pub fn max_degree(&self) -> usize {
        self.vertex_degrees.values().copied().max().unwrap_or(0)
    }
}

pub fn compute_metrics(g: &NetworkGraph) -> TopologyMetrics {
    let simple = simple_projection(g);
    let mut vertex_degrees: BTreeMap<VertexId, usize> =
        g.vertices().iter().map(|&v| (v, 0)).collect();
    for e in g.edges() {
        for v in [e.v1, e.v2] {
            if let Some(d) = vertex_degrees.get_mut(&v) {
                *d += 1;
            }
        }
    }
    let n = g.vertex_count();
    let pair_count = simple.pair_count();
    let possible = n * n.saturating_sub(1) / 2;
    let motifs = count_motifs(&simple);
    TopologyMetrics {
        vertex_degrees,
        vertex_count: n,
        edge_count: g.edge_count(),
        pair_count,
        mean_degree: if n == 0 {
            0.0
        } else {
            (2 * g.edge_count()) as f64 / n as f64
        },
        density: if possible == 0 {
            0.0
        } else {
            pair_count as f64 / possible as f64
        },
        clustering: simple.average_clustering(),
        diameter: simple.diameter(),
        component_count: simple.component_count(),
        is_bipartite: simple.is_bipartite(),
        is_tree: simple.is_tree(),
        triangles: motifs.triangles,
        squares: motifs.squares,
        stars: motifs.stars,
    }
}
