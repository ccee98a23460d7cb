//! Undirected loop-free graphs and the adjacency algorithms shared with
//! [`Structure`](super::Structure).

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use super::StructureError;

/// Anything with a finite vertex set `0..order()` and symmetric neighbor lists.
pub trait Adjacency {
    fn order(&self) -> usize;
    /// Sorted, duplicate-free neighbors of `v`, never containing `v` itself.
    fn neighbors(&self, v: usize) -> &[usize];
}

/// Graph distance. `Infinite` when no path exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(usize),
    Infinite,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], edge_count: 0 }
    }

    /// Builds a graph from unordered pairs. Duplicates (in either orientation) and loops are rejected.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, StructureError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(StructureError::ElementOutOfRange { element: u.max(v), size: n });
            }
            if u == v {
                return Err(StructureError::LoopEdge(u));
            }
            if !set.insert((u.min(v), u.max(v))) {
                return Err(StructureError::DuplicateEdge(u.min(v), u.max(v)));
            }
        }
        Ok(Self::from_edge_set(n, set))
    }

    /// `edges` must be normalized `(min, max)` pairs within range.
    pub(crate) fn from_edge_set(n: usize, edges: BTreeSet<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { adj, edge_count: edges.len() }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }
}

impl Adjacency for Graph {
    fn order(&self) -> usize {
        self.adj.len()
    }

    fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }
}

/// Breadth-first distances from `src`; `None` for unreachable vertices.
pub fn bfs_distances<A: Adjacency + ?Sized>(g: &A, src: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.order()];
    let mut queue = VecDeque::new();
    dist[src] = Some(0);
    queue.push_back(src);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].unwrap();
        for &v in g.neighbors(u) {
            if dist[v].is_none() {
                dist[v] = Some(du + 1);
                queue.push_back(v);
            }
        }
    }
    dist
}

pub fn distance<A: Adjacency + ?Sized>(g: &A, a: usize, b: usize) -> Distance {
    if a == b {
        return Distance::Finite(0);
    }
    match bfs_distances(g, a)[b] {
        Some(d) => Distance::Finite(d),
        None => Distance::Infinite,
    }
}

/// Component id per vertex (ids in order of smallest member), plus the component count.
/// Vertices with `removed[v]` set get `usize::MAX` and are ignored.
pub fn component_labels<A: Adjacency + ?Sized>(g: &A, removed: Option<&[bool]>) -> (Vec<usize>, usize) {
    let n = g.order();
    let gone = |v: usize| removed.is_some_and(|r| r[v]);
    let mut label = vec![usize::MAX; n];
    let mut count = 0;
    let mut stack = Vec::new();
    for s in 0..n {
        if gone(s) || label[s] != usize::MAX {
            continue;
        }
        label[s] = count;
        stack.push(s);
        while let Some(u) = stack.pop() {
            for &v in g.neighbors(u) {
                if !gone(v) && label[v] == usize::MAX {
                    label[v] = count;
                    stack.push(v);
                }
            }
        }
        count += 1;
    }
    (label, count)
}

pub fn component_count<A: Adjacency + ?Sized>(g: &A) -> usize {
    component_labels(g, None).1
}

/// Empty and singleton vertex sets count as connected.
pub fn is_connected<A: Adjacency + ?Sized>(g: &A) -> bool {
    component_count(g) <= 1
}

/// Connected after deleting every choice of at most `r - 1` vertices.
pub fn is_r_connected<A: Adjacency + ?Sized>(g: &A, r: usize) -> bool {
    let n = g.order();
    let mut removed = vec![false; n];
    fn go<A: Adjacency + ?Sized>(g: &A, removed: &mut [bool], start: usize, left: usize) -> bool {
        if component_labels(g, Some(removed)).1 > 1 {
            return false;
        }
        if left == 0 {
            return true;
        }
        for v in start..removed.len() {
            removed[v] = true;
            let ok = go(g, removed, v + 1, left - 1);
            removed[v] = false;
            if !ok {
                return false;
            }
        }
        true
    }
    go(g, &mut removed, 0, r.saturating_sub(1))
}

/// Whether some cycle passes through exactly `c` distinct vertices. Always false for `c < 3`.
pub fn has_simple_cycle_of_size<A: Adjacency + ?Sized>(g: &A, c: usize) -> bool {
    if c < 3 || c > g.order() {
        return false;
    }
    let n = g.order();
    let mut on_path = vec![false; n];
    // Anchor each cycle at its smallest vertex; extend through larger vertices only.
    fn extend<A: Adjacency + ?Sized>(
        g: &A,
        start: usize,
        cur: usize,
        len: usize,
        c: usize,
        on_path: &mut [bool],
    ) -> bool {
        if len == c {
            return g.neighbors(cur).binary_search(&start).is_ok();
        }
        for &v in g.neighbors(cur) {
            if v > start && !on_path[v] {
                on_path[v] = true;
                let found = extend(g, start, v, len + 1, c, on_path);
                on_path[v] = false;
                if found {
                    return true;
                }
            }
        }
        false
    }
    (0..n).any(|s| {
        on_path[s] = true;
        let found = extend(g, s, s, 1, c, &mut on_path);
        on_path[s] = false;
        found
    })
}

/// Length (vertex count) of a shortest cycle, or `None` for forests.
pub fn girth<A: Adjacency + ?Sized>(g: &A) -> Option<usize> {
    let n = g.order();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[s] = 0;
        parent[s] = usize::MAX;
        queue.clear();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            if best.is_some_and(|b| 2 * dist[u] + 1 >= b) {
                break;
            }
            for &v in g.neighbors(u) {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if parent[u] != v {
                    let len = dist[u] + dist[v] + 1;
                    if best.is_none_or(|b| len < b) {
                        best = Some(len);
                    }
                }
            }
        }
    }
    best
}

pub fn is_acyclic<A: Adjacency + ?Sized>(g: &A) -> bool {
    let edges: usize = (0..g.order()).map(|v| g.neighbors(v).len()).sum::<usize>() / 2;
    edges + component_count(g) == g.order()
}
