use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{RandomLabError, SamplerConfig};
use crate::structures::Graph;

/// Largest vertex count [`enumerate_gn`] accepts (21 vertex pairs).
pub const ENUMERATION_LIMIT: usize = 7;

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// Every graph on `0..n` with maximum degree at most `degree_cap`, once each.
///
/// Edge sets are read as bitmasks over the vertex pairs in lexicographic order
/// (`(0,1)` is bit 0) and produced in increasing mask order.
pub fn enumerate_gn(n: usize, degree_cap: usize) -> Result<impl Iterator<Item = Graph>, RandomLabError> {
    if n > ENUMERATION_LIMIT {
        return Err(RandomLabError::Budget { n, limit: ENUMERATION_LIMIT });
    }
    let pairs = pairs(n);
    let total = 1u64 << pairs.len();
    Ok((0..total).filter_map(move |mask| {
        let mut degree = [0usize; ENUMERATION_LIMIT];
        let mut edges = Vec::new();
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                degree[u] += 1;
                degree[v] += 1;
                edges.push((u, v));
            }
        }
        if degree.iter().any(|&d| d > degree_cap) {
            return None;
        }
        Some(Graph::new(n, edges).expect("distinct pairs"))
    }))
}

/// The bitmask of `g` in the order used by [`enumerate_gn`]; `None` above 11 vertices.
pub fn edge_mask(g: &Graph) -> Option<u64> {
    let n = g.vertex_count();
    if n * n.saturating_sub(1) / 2 > 64 {
        return None;
    }
    Some(pairs(n).iter().enumerate().filter(|&(_, &(u, v))| g.has_edge(u, v)).fold(0, |m, (i, _)| m | 1 << i))
}

/// Edge-toggle Metropolis chain on graphs with maximum degree `cap`.
///
/// Each step stays put with probability 1/2, otherwise picks a uniform vertex
/// pair and toggles it unless that would push a degree over the cap.
/// Proposals are symmetric, so the uniform distribution is stationary; the
/// lazy half keeps the chain aperiodic (a bare toggle flips edge-count parity).
#[derive(Debug, Clone)]
pub struct ToggleChain {
    n: usize,
    cap: usize,
    adj: Vec<bool>,
    degree: Vec<usize>,
    rng: ChaCha8Rng,
}

impl ToggleChain {
    /// Starts from the empty graph.
    pub fn new(n: usize, cap: usize, seed: u64) -> Self {
        ToggleChain { n, cap, adj: vec![false; n * n], degree: vec![0; n], rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn step(&mut self) {
        if self.n < 2 || self.rng.gen_bool(0.5) {
            return;
        }
        let u = self.rng.gen_range(0..self.n);
        let mut v = self.rng.gen_range(0..self.n - 1);
        if v >= u {
            v += 1;
        }
        let (i, j) = (u * self.n + v, v * self.n + u);
        if self.adj[i] {
            self.adj[i] = false;
            self.adj[j] = false;
            self.degree[u] -= 1;
            self.degree[v] -= 1;
        } else if self.degree[u] < self.cap && self.degree[v] < self.cap {
            self.adj[i] = true;
            self.adj[j] = true;
            self.degree[u] += 1;
            self.degree[v] += 1;
        }
        debug_assert!(self.degree[u] <= self.cap && self.degree[v] <= self.cap);
    }

    pub fn advance(&mut self, steps: usize) {
        for _ in 0..steps {
            self.step();
        }
    }

    pub fn graph(&self) -> Graph {
        let edges = pairs(self.n).into_iter().filter(|&(u, v)| self.adj[u * self.n + v]);
        Graph::new(self.n, edges).expect("chain state is simple")
    }
}

/// Samples from the chain: the state after burn-in, then every `thinning` steps.
#[derive(Debug, Clone)]
pub struct Sampler {
    chain: ToggleChain,
    thinning: usize,
    started: bool,
    burn_in: usize,
}

impl Sampler {
    pub fn new(cfg: &SamplerConfig) -> Result<Self, RandomLabError> {
        cfg.validate()?;
        Ok(Sampler {
            chain: ToggleChain::new(cfg.n, cfg.degree_cap, cfg.seed),
            thinning: cfg.thinning(),
            started: false,
            burn_in: cfg.burn_in(),
        })
    }
}

impl Iterator for Sampler {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.started {
            self.chain.advance(self.thinning);
        } else {
            self.chain.advance(self.burn_in);
            self.started = true;
        }
        Some(self.chain.graph())
    }
}

pub fn sample_gn(cfg: &SamplerConfig, count: usize) -> Result<Vec<Graph>, RandomLabError> {
    Ok(Sampler::new(cfg)?.take(count).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_gn(0, 5).unwrap().count(), 1);
        assert_eq!(enumerate_gn(3, 5).unwrap().count(), 8);
        assert_eq!(enumerate_gn(4, 1).unwrap().count(), 10);
        assert!(enumerate_gn(8, 5).is_err());
        let first: Vec<u64> = enumerate_gn(3, 5).unwrap().map(|g| edge_mask(&g).unwrap()).collect();
        assert_eq!(first, (0..8).collect::<Vec<_>>());
    }

    #[test]
    fn chain_respects_cap_and_seed() {
        let cfg = SamplerConfig { n: 8, degree_cap: 2, burn_in: Some(50), thinning: Some(7), seed: 3 };
        let a = sample_gn(&cfg, 200).unwrap();
        assert!(a.iter().all(|g| (0..8).all(|v| g.degree(v) <= 2)));
        assert_eq!(a, sample_gn(&cfg, 200).unwrap());
        assert_ne!(a, sample_gn(&SamplerConfig { seed: 4, ..cfg }, 200).unwrap());
    }

    #[test]
    fn single_vertex_chain() {
        let cfg = SamplerConfig::new(1, 0);
        assert!(sample_gn(&cfg, 3).unwrap().iter().all(|g| g.vertex_count() == 1 && g.edge_count() == 0));
    }
}
