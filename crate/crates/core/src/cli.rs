//! The `fmkit` command line.
//!
//! Structures are read and written in the text format of [`Structure`];
//! `-` stands for standard input. Formula arguments name a file (one formula
//! per line) or, if no such file exists, are parsed as a formula.

use std::io::{Read, Write};
use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::autgroup::{automorphisms, is_rigid, orbit_statistics, orbits};
use crate::constructions::{
    binary_tree, check_graph_conditions, connected_model, four_arm_tree, rigid_forest, truncated_tree_45,
};
use crate::error::{Error, Result};
use crate::fologic::{
    double_prime_transform, graph_condition_sentences, parse_theory, prime_transform, relativize_not_q,
    relativize_q, relativized_theory, tag_sentences, Evaluator, Formula, PoolConfig, TaggedSentence,
};
use crate::randomlab::{
    estimate_pooled, exact_proportion, report_summary, report_table, trend_experiment, Predicate, RandomLabError,
    SampleReport, SamplerConfig,
};
use crate::structures::{graph_from_r_graph, r_graph_from_graph, Graph, Signature, Structure};

/// Environment variable holding the default sampler seed.
pub const SEED_ENV: &str = "FMKIT_SEED";

#[derive(Debug, Parser)]
#[command(name = "fmkit", version, about = "Finite model theory workbench")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Family {
    /// Complete binary tree of height N.
    #[value(alias = "bn")]
    Binary,
    /// Four binary trees of height N joined at a centre.
    #[value(alias = "tn")]
    FourArm,
    /// N four-arm trees with distinct-length tails on every leaf.
    #[value(alias = "fn")]
    Forest,
    /// Connected tree with N degree-4 vertices far apart.
    #[value(alias = "conn")]
    Connected,
    /// Ball of depth N in the degree-5 tree (root degree given separately).
    Trunc45,
}

#[derive(Debug, Args)]
struct GraphSig {
    /// Signature used to encode graphs.
    #[arg(long, default_value = "R/2")]
    sig: String,
    /// Edge relation within the signature.
    #[arg(long, default_value = "R")]
    rel: String,
}

#[derive(Debug, Args)]
struct TagArgs {
    #[arg(long, default_value = "R/2 Q/1")]
    sig: String,
    /// Tag symbol.
    #[arg(long, default_value = "Q")]
    q: String,
    /// Edge relation.
    #[arg(long, default_value = "R")]
    r: String,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a construction as a structure.
    Gen {
        family: Family,
        n: usize,
        /// Root degree for trunc45 (4 or 5).
        root_degree: Option<usize>,
        #[command(flatten)]
        encoding: GraphSig,
    },
    /// List automorphisms in cycle notation.
    Autos {
        file: String,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Decide rigidity.
    Rigid { file: String },
    /// Print automorphism orbits, one block per line.
    Orbits {
        file: String,
        /// Also print orbit statistics.
        #[arg(long)]
        stats: bool,
    },
    /// Evaluate sentences in a structure.
    Eval {
        structure: String,
        formulas: String,
        /// Truth value of the atom P, if the sentences use it.
        #[arg(long)]
        p: Option<bool>,
    },
    /// Relativize sentences to the elements tagged by `--q`.
    Relativize {
        formulas: String,
        #[arg(long, default_value = "R/2 Q/1")]
        sig: String,
        #[arg(long, default_value = "Q")]
        q: String,
        /// Relativize to the untagged elements instead.
        #[arg(long)]
        complement: bool,
    },
    /// Replace P by a tautology.
    Prime {
        formulas: String,
        #[arg(long, default_value = "R/2 Q/1")]
        sig: String,
    },
    /// Replace P by a contradiction.
    Doubleprime {
        formulas: String,
        #[arg(long, default_value = "R/2 Q/1")]
        sig: String,
    },
    /// Print the tag-discipline sentences.
    #[command(name = "tag-axioms", alias = "gamma0")]
    TagAxioms {
        #[command(flatten)]
        tag: TagArgs,
    },
    /// Print the level-m graph condition sentences.
    #[command(name = "graph-axioms", alias = "gamma1m")]
    GraphAxioms {
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        tag: TagArgs,
    },
    /// Check the level-m graph conditions semantically.
    #[command(name = "check-graph", alias = "check-gamma")]
    CheckGraph {
        structure: String,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value = "R")]
        rel: String,
    },
    /// Relativized sentences from a canonical pool that hold in a structure.
    Theory {
        structure: String,
        #[arg(long, default_value = "Q")]
        q: String,
        #[arg(long, default_value_t = 2)]
        max_rank: usize,
        #[arg(long, default_value_t = 4)]
        max_size: usize,
        #[arg(long, default_value_t = 200)]
        max_count: usize,
    },
    /// Estimate predicate proportions among bounded-degree graphs.
    Estimate {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[command(flatten)]
        sampler: SamplerArgs,
        /// Predicates, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        predicate: Vec<String>,
        /// Enumerate every graph instead of sampling.
        #[arg(long)]
        exact: bool,
        /// Independent chains to pool.
        #[arg(long, default_value_t = 1)]
        chains: usize,
    },
    /// Estimate one predicate across several vertex counts.
    Trend {
        #[arg(long, value_delimiter = ',', required = true)]
        ns: Vec<usize>,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[command(flatten)]
        sampler: SamplerArgs,
        #[arg(long)]
        predicate: String,
        /// Enumerate small vertex counts exactly.
        #[arg(long)]
        exact_small: bool,
        /// Write the table here instead of standard output.
        #[arg(long)]
        out: Option<String>,
    },
}

#[derive(Debug, Args)]
struct SamplerArgs {
    /// Defaults to the environment variable FMKIT_SEED, then 0.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, default_value_t = 5)]
    degree_cap: usize,
    /// Defaults to 10 n^2.
    #[arg(long)]
    burn_in: Option<usize>,
    /// Defaults to n^2.
    #[arg(long)]
    thinning: Option<usize>,
}

impl SamplerArgs {
    fn config(&self, n: usize, default_seed: u64) -> SamplerConfig {
        SamplerConfig {
            n,
            degree_cap: self.degree_cap,
            burn_in: self.burn_in,
            thinning: self.thinning,
            seed: self.seed.unwrap_or(default_seed),
        }
    }
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
}

impl Io<'_> {
    fn read(&mut self, path: &str) -> Result<String> {
        let io_err = |source| Error::Io { path: path.to_string(), source };
        if path == "-" {
            let mut text = String::new();
            self.stdin.read_to_string(&mut text).map_err(io_err)?;
            Ok(text)
        } else {
            std::fs::read_to_string(path).map_err(io_err)
        }
    }

    fn structure(&mut self, path: &str) -> Result<Structure> {
        Ok(self.read(path)?.parse()?)
    }

    fn formulas(&mut self, arg: &str, sig: &Signature) -> Result<Vec<Formula>> {
        let text = if arg == "-" || Path::new(arg).is_file() { self.read(arg)? } else { arg.to_string() };
        Ok(parse_theory(&text, sig)?)
    }

    fn print(&mut self, text: impl std::fmt::Display) -> Result<()> {
        write!(self.out, "{text}").map_err(|source| Error::Io { path: "<stdout>".into(), source })
    }
}

fn graph_text(g: &Graph, encoding: &GraphSig) -> Result<String> {
    let sig: Signature = encoding.sig.parse()?;
    Ok(r_graph_from_graph(g, &sig, &encoding.rel)?.to_string())
}

fn tagged_lines(sentences: &[TaggedSentence]) -> String {
    sentences.iter().map(|t| format!("# {}\n{}\n", t.property, t.formula)).collect()
}

fn report_block(reports: &[SampleReport]) -> String {
    format!("{}\n{}", report_table(reports), report_summary(reports))
}

fn execute(command: Command, io: &mut Io, default_seed: u64) -> Result<()> {
    match command {
        Command::Gen { family, n, root_degree, encoding } => {
            let g = match family {
                Family::Binary => binary_tree(n)?.graph,
                Family::FourArm => four_arm_tree(n)?.graph,
                Family::Forest => rigid_forest(n)?,
                Family::Connected => connected_model(n)?,
                Family::Trunc45 => truncated_tree_45(n, root_degree.unwrap_or(5))?,
            };
            io.print(graph_text(&g, &encoding)?)
        }
        Command::Autos { file, limit } => {
            let s = io.structure(&file)?;
            let text: String = automorphisms(&s, limit).iter().map(|p| format!("{p}\n")).collect();
            io.print(text)
        }
        Command::Rigid { file } => {
            let s = io.structure(&file)?;
            io.print(format!("rigid: {}\n", is_rigid(&s)))
        }
        Command::Orbits { file, stats } => {
            let s = io.structure(&file)?;
            io.print(orbits(&s))?;
            if stats {
                let st = orbit_statistics(&s);
                io.print(format!(
                    "orbit_count: {}\nfinite_orbit_count: {}\nmax_orbit_size: {}\nnontrivial_orbit_count: {}\n",
                    st.orbit_count, st.finite_orbit_count, st.max_orbit_size, st.nontrivial_orbit_count
                ))?;
            }
            Ok(())
        }
        Command::Eval { structure, formulas, p } => {
            let s = io.structure(&structure)?;
            let fs = io.formulas(&formulas, s.signature())?;
            let mut ev = Evaluator::new(&s);
            let mut text = String::new();
            for f in &fs {
                let value = match p {
                    Some(p) => ev.evaluate_with_p(f, p)?,
                    None => ev.evaluate_sentence(f)?,
                };
                text.push_str(&format!("{value}\n"));
            }
            io.print(text)
        }
        Command::Relativize { formulas, sig, q, complement } => {
            let sig: Signature = sig.parse()?;
            let mut text = String::new();
            for f in io.formulas(&formulas, &sig)? {
                let g = if complement { relativize_not_q(&f, &sig, &q)? } else { relativize_q(&f, &sig, &q)? };
                text.push_str(&format!("{g}\n"));
            }
            io.print(text)
        }
        Command::Prime { formulas, sig } => {
            let sig: Signature = sig.parse()?;
            let text: String = io.formulas(&formulas, &sig)?.iter().map(|f| format!("{}\n", prime_transform(f))).collect();
            io.print(text)
        }
        Command::Doubleprime { formulas, sig } => {
            let sig: Signature = sig.parse()?;
            let text: String =
                io.formulas(&formulas, &sig)?.iter().map(|f| format!("{}\n", double_prime_transform(f))).collect();
            io.print(text)
        }
        Command::TagAxioms { tag } => {
            let sig: Signature = tag.sig.parse()?;
            io.print(tagged_lines(&tag_sentences(&sig, &tag.q, &tag.r)?))
        }
        Command::GraphAxioms { m, tag } => {
            let sig: Signature = tag.sig.parse()?;
            io.print(tagged_lines(&graph_condition_sentences(&sig, &tag.q, &tag.r, m)?))
        }
        Command::CheckGraph { structure, m, rel } => {
            if m < 3 {
                return Err(RandomLabError::InvalidConfig(format!("m must be at least 3, got {m}")).into());
            }
            let g = graph_from_r_graph(&io.structure(&structure)?, &rel)?;
            let f = check_graph_conditions(&g, m);
            io.print(format!(
                "no_short_cycles: {}\ndegrees_45: {}\nenough_degree4: {}\ndegree4_far_apart: {}\nrigid: {}\nconnected: {}\nall: {}\n",
                f.no_short_cycles, f.degrees_45, f.enough_degree4, f.degree4_far_apart, f.rigid, f.connected, f.all
            ))
        }
        Command::Theory { structure, q, max_rank, max_size, max_count } => {
            let s = io.structure(&structure)?;
            let cfg = PoolConfig { max_rank, max_size, max_count };
            let text: String = relativized_theory(&s, &q, &cfg)?.iter().map(|f| format!("{f}\n")).collect();
            io.print(text)
        }
        Command::Estimate { n, samples, sampler, predicate, exact, chains } => {
            let cfg = sampler.config(n, default_seed);
            let mut reports = Vec::new();
            for name in &predicate {
                let p: Predicate = name.parse()?;
                reports.push(if exact {
                    exact_proportion(n, cfg.degree_cap, p)?
                } else {
                    estimate_pooled(&cfg, samples, p, chains)?
                });
            }
            io.print(report_block(&reports))
        }
        Command::Trend { ns, samples, sampler, predicate, exact_small, out } => {
            let template = sampler.config(1, default_seed);
            let p: Predicate = predicate.parse()?;
            let reports = trend_experiment(&ns, &template, samples, p, exact_small)?;
            match out {
                Some(path) => {
                    std::fs::write(&path, report_table(&reports)).map_err(|source| Error::Io { path, source })?;
                    io.print(report_summary(&reports))
                }
                None => io.print(report_block(&reports)),
            }
        }
    }
}

/// Runs the command line and returns the exit code: 0 on success, 1 on a
/// domain error, 2 on a usage error.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let default_seed = match std::env::var(SEED_ENV) {
        Ok(v) => match v.trim().parse::<u64>() {
            Ok(seed) => seed,
            Err(_) => {
                let _ = writeln!(stderr, "error: {SEED_ENV} must be an unsigned integer, got `{v}`");
                return 2;
            }
        },
        Err(_) => 0,
    };
    let mut io = Io { stdin, out: stdout };
    match execute(cli.command, &mut io, default_seed) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            1
        }
    }
}
