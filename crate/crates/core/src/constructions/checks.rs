use std::collections::VecDeque;

use crate::autgroup::graph_is_rigid;
use crate::structures::{bfs_distances, girth, is_acyclic, is_connected, Adjacency, Graph};

/// Degree 4 count at least `k`, and every vertex within distance `1..=k` of
/// another degree-4 vertex has degree `near`.
fn fragment(g: &Graph, k: usize, near: usize) -> bool {
    if k == 0 || !is_acyclic(g) {
        return false;
    }
    let hubs: Vec<usize> = (0..g.vertex_count()).filter(|&v| g.degree(v) == 4).collect();
    if hubs.len() < k {
        return false;
    }
    let mut dist = vec![usize::MAX; g.vertex_count()];
    let mut touched = Vec::new();
    for &h in &hubs {
        dist[h] = 0;
        touched.push(h);
        let mut queue = VecDeque::from([h]);
        while let Some(u) = queue.pop_front() {
            if dist[u] == k {
                continue;
            }
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    touched.push(w);
                    if g.degree(w) != near {
                        return false;
                    }
                    queue.push_back(w);
                }
            }
        }
        for v in touched.drain(..) {
            dist[v] = usize::MAX;
        }
    }
    true
}

/// Acyclic, at least `k` vertices of degree 4, degree 3 within distance `k` of them.
pub fn check_forest_fragment(g: &Graph, k: usize) -> bool {
    fragment(g, k, 3)
}

/// As [`check_forest_fragment`] with degree 2 near the degree-4 vertices.
pub fn check_connected_fragment(g: &Graph, k: usize) -> bool {
    fragment(g, k, 2)
}

/// The graph conditions of level `m`, one flag each.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GraphConditions {
    /// No cycle on `c` distinct vertices for `3 <= c < m`.
    pub no_short_cycles: bool,
    pub degrees_45: bool,
    /// At least `m` vertices of degree 4.
    pub enough_degree4: bool,
    /// Distinct degree-4 vertices are at distance at least `m`.
    pub degree4_far_apart: bool,
    pub rigid: bool,
    pub connected: bool,
    pub all: bool,
}

/// No cycle on `c` distinct vertices for `3 <= c < m`.
pub fn no_short_cycles(g: &Graph, m: usize) -> bool {
    girth(g).is_none_or(|c| c >= m)
}

pub fn degrees_45(g: &Graph) -> bool {
    (0..g.vertex_count()).all(|v| matches!(g.degree(v), 4 | 5))
}

fn degree4_vertices(g: &Graph) -> Vec<usize> {
    (0..g.vertex_count()).filter(|&v| g.degree(v) == 4).collect()
}

pub fn enough_degree4(g: &Graph, m: usize) -> bool {
    degree4_vertices(g).len() >= m
}

/// No path on at most `m` vertices joins two distinct degree-4 vertices.
pub fn degree4_far_apart(g: &Graph, m: usize) -> bool {
    let hubs = degree4_vertices(g);
    hubs.iter().all(|&h| {
        let d = bfs_distances(g, h);
        hubs.iter().all(|&o| o == h || d[o].is_none_or(|x| x >= m))
    })
}

/// Evaluates the level-`m` graph conditions; `m < 3` is treated as 3.
pub fn check_graph_conditions(g: &Graph, m: usize) -> GraphConditions {
    let m = m.max(3);
    let no_short_cycles = no_short_cycles(g, m);
    let degrees_45 = degrees_45(g);
    let enough_degree4 = enough_degree4(g, m);
    let degree4_far_apart = degree4_far_apart(g, m);
    let rigid = graph_is_rigid(g);
    let connected = is_connected(g);
    GraphConditions {
        no_short_cycles,
        degrees_45,
        enough_degree4,
        degree4_far_apart,
        rigid,
        connected,
        all: no_short_cycles && degrees_45 && enough_degree4 && degree4_far_apart && rigid && connected,
    }
}
