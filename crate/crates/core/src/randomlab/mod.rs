//! Random graphs of bounded maximum degree: exhaustive enumeration for tiny
//! vertex counts, a Metropolis sampler beyond that, and proportion estimates
//! with binomial standard errors.
//!
//! Proportions are over labeled graphs on `0..n`.

mod predicate;
mod sampler;

use std::fmt::Write as _;
use std::thread;

use thiserror::Error;

pub use predicate::Predicate;
pub use sampler::{edge_mask, enumerate_gn, sample_gn, Sampler, ToggleChain, ENUMERATION_LIMIT};

/// Largest vertex count for exact (enumerated) proportions.
pub const EXACT_LIMIT: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RandomLabError {
    #[error("invalid sampler configuration: {0}")]
    InvalidConfig(String),
    #[error("enumeration over {n} vertices exceeds the limit {limit}")]
    Budget { n: usize, limit: usize },
    #[error("unknown predicate `{0}`")]
    UnknownPredicate(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SamplerConfig {
    pub n: usize,
    pub degree_cap: usize,
    /// Steps before the first sample; `None` means `10 n^2`.
    pub burn_in: Option<usize>,
    /// Steps between samples; `None` means `n^2`.
    pub thinning: Option<usize>,
    pub seed: u64,
}

impl SamplerConfig {
    pub fn new(n: usize, seed: u64) -> Self {
        SamplerConfig { n, degree_cap: 5, burn_in: None, thinning: None, seed }
    }

    pub fn burn_in(&self) -> usize {
        self.burn_in.unwrap_or(10 * self.n * self.n).max(1)
    }

    pub fn thinning(&self) -> usize {
        self.thinning.unwrap_or(self.n * self.n).max(1)
    }

    pub fn validate(&self) -> Result<(), RandomLabError> {
        let bad = |m: &str| Err(RandomLabError::InvalidConfig(m.to_string()));
        if self.n == 0 {
            return bad("n must be at least 1");
        }
        if self.degree_cap == 0 {
            return bad("degree cap must be at least 1");
        }
        if self.burn_in == Some(0) || self.thinning == Some(0) {
            return bad("burn-in and thinning must be at least 1");
        }
        Ok(())
    }

    /// The same settings for another vertex count.
    pub fn with_n(&self, n: usize) -> Self {
        SamplerConfig { n, ..*self }
    }
}

/// Counts from one or more chains; merging is addition.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Tally {
    pub samples: usize,
    pub hits: usize,
}

impl Tally {
    pub fn merge(self, other: Tally) -> Tally {
        Tally { samples: self.samples + other.samples, hits: self.hits + other.hits }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SampleReport {
    pub n: usize,
    pub predicate: Predicate,
    pub samples: usize,
    pub hits: usize,
    pub proportion: f64,
    /// `sqrt(p(1-p)/samples)`; zero for exact reports.
    pub std_error: f64,
    pub exact: bool,
    /// The sampler settings, absent for exact reports.
    pub config: Option<SamplerConfig>,
}

impl SampleReport {
    fn from_tally(n: usize, predicate: Predicate, t: Tally, config: Option<SamplerConfig>) -> Self {
        let proportion = if t.samples == 0 { 0.0 } else { t.hits as f64 / t.samples as f64 };
        let std_error = match config {
            Some(_) if t.samples > 0 => (proportion * (1.0 - proportion) / t.samples as f64).sqrt(),
            _ => 0.0,
        };
        SampleReport {
            n,
            predicate,
            samples: t.samples,
            hits: t.hits,
            proportion,
            std_error,
            exact: config.is_none(),
            config,
        }
    }

    /// Normal-approximation interval at `z` standard errors, clipped to `[0, 1]`.
    pub fn interval(&self, z: f64) -> (f64, f64) {
        ((self.proportion - z * self.std_error).max(0.0), (self.proportion + z * self.std_error).min(1.0))
    }

    pub const TSV_HEADER: &'static str = "n\tpredicate\tmode\tsamples\thits\tproportion\tstderr";

    pub fn tsv_row(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}\t{:.6}\t{:.6}",
            self.n,
            self.predicate,
            if self.exact { "exact" } else { "mcmc" },
            self.samples,
            self.hits,
            self.proportion,
            self.std_error
        )
    }
}

/// Proportion of all of `G_{n,cap}` satisfying `predicate`.
pub fn exact_proportion(n: usize, degree_cap: usize, predicate: Predicate) -> Result<SampleReport, RandomLabError> {
    if n > EXACT_LIMIT {
        return Err(RandomLabError::Budget { n, limit: EXACT_LIMIT });
    }
    let tally = enumerate_gn(n, degree_cap)?
        .fold(Tally::default(), |t, g| t.merge(Tally { samples: 1, hits: usize::from(predicate.holds(&g)) }));
    Ok(SampleReport::from_tally(n, predicate, tally, None))
}

fn run_chain(cfg: &SamplerConfig, count: usize, predicate: Predicate) -> Result<Tally, RandomLabError> {
    let hits = Sampler::new(cfg)?.take(count).filter(|g| predicate.holds(g)).count();
    Ok(Tally { samples: count, hits })
}

/// Monte Carlo estimate from a single chain.
pub fn estimate_proportion(
    cfg: &SamplerConfig,
    count: usize,
    predicate: Predicate,
) -> Result<SampleReport, RandomLabError> {
    estimate_pooled(cfg, count, predicate, 1)
}

/// Seed of chain `i` when pooling; chain 0 keeps the configured seed.
pub fn chain_seed(seed: u64, i: usize) -> u64 {
    seed ^ (i as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15)
}

/// Splits `count` samples over `chains` independent chains run on separate
/// threads and pools their counts. The result depends only on the arguments.
pub fn estimate_pooled(
    cfg: &SamplerConfig,
    count: usize,
    predicate: Predicate,
    chains: usize,
) -> Result<SampleReport, RandomLabError> {
    cfg.validate()?;
    let chains = chains.clamp(1, count.max(1));
    let share = |i: usize| count / chains + usize::from(i < count % chains);
    let tallies: Vec<Result<Tally, RandomLabError>> = thread::scope(|scope| {
        let handles: Vec<_> = (0..chains)
            .map(|i| {
                let chain_cfg = SamplerConfig { seed: chain_seed(cfg.seed, i), ..*cfg };
                scope.spawn(move || run_chain(&chain_cfg, share(i), predicate))
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("sampler thread panicked")).collect()
    });
    let mut total = Tally::default();
    for t in tallies {
        total = total.merge(t?);
    }
    Ok(SampleReport::from_tally(cfg.n, predicate, total, Some(*cfg)))
}

/// One report per vertex count. With `exact_small`, counts up to
/// [`EXACT_LIMIT`] are enumerated instead of sampled.
pub fn trend_experiment(
    ns: &[usize],
    template: &SamplerConfig,
    count: usize,
    predicate: Predicate,
    exact_small: bool,
) -> Result<Vec<SampleReport>, RandomLabError> {
    ns.iter()
        .map(|&n| {
            if exact_small && n <= EXACT_LIMIT {
                exact_proportion(n, template.degree_cap, predicate)
            } else {
                estimate_proportion(&template.with_n(n), count, predicate)
            }
        })
        .collect()
}

/// Tab-separated table with a header row.
pub fn report_table(reports: &[SampleReport]) -> String {
    let mut out = String::from(SampleReport::TSV_HEADER);
    out.push('\n');
    for r in reports {
        out.push_str(&r.tsv_row());
        out.push('\n');
    }
    out
}

/// Plain-text summary with 95% intervals.
pub fn report_summary(reports: &[SampleReport]) -> String {
    let mut out = String::new();
    for r in reports {
        if r.exact {
            let _ = writeln!(out, "n={:<4} {}: {}/{} = {:.4} (exact)", r.n, r.predicate, r.hits, r.samples, r.proportion);
        } else {
            let (lo, hi) = r.interval(1.96);
            let _ = writeln!(
                out,
                "n={:<4} {}: {:.4} +/- {:.4} (95% CI [{:.4}, {:.4}], {} samples)",
                r.n, r.predicate, r.proportion, r.std_error, lo, hi, r.samples
            );
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_defaults_and_validation() {
        let cfg = SamplerConfig::new(6, 1);
        assert_eq!((cfg.burn_in(), cfg.thinning(), cfg.degree_cap), (360, 36, 5));
        assert!(SamplerConfig::new(0, 1).validate().is_err());
        assert!(SamplerConfig { degree_cap: 0, ..cfg }.validate().is_err());
        assert!(SamplerConfig { thinning: Some(0), ..cfg }.validate().is_err());
    }

    #[test]
    fn exact_small_cases() {
        let r = exact_proportion(1, 5, Predicate::ConnectedAndRigid).unwrap();
        assert_eq!((r.samples, r.hits, r.proportion), (1, 1, 1.0));
        let r = exact_proportion(3, 5, Predicate::Connected).unwrap();
        assert_eq!((r.samples, r.hits), (8, 4));
        assert!(exact_proportion(7, 5, Predicate::Connected).is_err());
    }

    #[test]
    fn pooling_is_reproducible_and_consistent() {
        let cfg = SamplerConfig::new(6, 9);
        let a = estimate_pooled(&cfg, 301, Predicate::Connected, 4).unwrap();
        assert_eq!(a, estimate_pooled(&cfg, 301, Predicate::Connected, 4).unwrap());
        assert_eq!(a.samples, 301);
        assert_eq!(
            estimate_pooled(&cfg, 50, Predicate::Connected, 1).unwrap(),
            estimate_proportion(&cfg, 50, Predicate::Connected).unwrap()
        );
        let se = (a.proportion * (1.0 - a.proportion) / 301.0).sqrt();
        assert!((a.std_error - se).abs() < 1e-15);
    }

    #[test]
    fn tables() {
        let reports = trend_experiment(&[3, 8], &SamplerConfig::new(1, 2), 20, Predicate::Connected, true).unwrap();
        assert!(reports[0].exact && !reports[1].exact);
        let table = report_table(&reports);
        assert_eq!(table.lines().count(), 3);
        assert!(table.lines().nth(1).unwrap().starts_with("3\tconnected\texact\t8\t4\t0.500000"));
        assert_eq!(report_summary(&reports).lines().count(), 2);
    }
}
