//! Hill climbing over adjacency matrices with frozen seed regions.
//!
//! A graph is scored by how many family members it contains. Each step flips
//! one free pair and keeps the flip if the score does not drop. Scores are
//! cached by free-pair pattern for the current restart, and a score
//! computation stops as soon as it cannot reach the current score.

use std::collections::HashMap;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::iso::induced_subgraph_iso;
use crate::search::{order_family, GraphFamily, OrderingStrategy, SearchStats, StrategyKind};
use crate::seed::{derive_seed, rng};
use crate::verify::verify_universal;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TemplateKind {
    /// Clique on `0..k` sharing vertex `k-1` with an independent set on
    /// `k-1..2k-1`.
    CliqueIndep(usize),
    /// Star with centre 0 and leaves `1..k`.
    Star(usize),
}

#[derive(Clone, Debug, PartialEq)]
pub struct SeedTemplate {
    pub order: usize,
    pub frozen_ones: Vec<(usize, usize)>,
    pub frozen_zeros: Vec<(usize, usize)>,
    pub free_pairs: Vec<(usize, usize)>,
    pub init_probability: f64,
}

/// Which pairs `(i, j)`, `i < j`, a template freezes.
type PairRule = Box<dyn Fn(usize, usize) -> bool>;

pub fn make_seed_template(kind: TemplateKind, n: usize) -> Result<SeedTemplate> {
    let (ones, zeros, p): (PairRule, PairRule, f64) = match kind {
        TemplateKind::CliqueIndep(k) => {
            if k == 0 || n < 2 * k - 1 {
                return Err(Error::invalid(format!(
                    "clique-indep template for k = {k} needs at least {} vertices, got {n}",
                    (2 * k).saturating_sub(1).max(1)
                )));
            }
            (
                Box::new(move |_, j| j < k),
                Box::new(move |i, j| i + 1 >= k && j < 2 * k - 1),
                0.5,
            )
        }
        TemplateKind::Star(k) => {
            if k == 0 || n < k {
                return Err(Error::invalid(format!(
                    "star template for k = {k} needs at least {k} vertices, got {n}"
                )));
            }
            (
                Box::new(move |i, j| i == 0 && j < k),
                Box::new(move |i, j| i >= 1 && j < k),
                0.1,
            )
        }
    };
    let mut t = SeedTemplate {
        order: n,
        frozen_ones: Vec::new(),
        frozen_zeros: Vec::new(),
        free_pairs: Vec::new(),
        init_probability: p,
    };
    for j in 1..n {
        for i in 0..j {
            if ones(i, j) {
                t.frozen_ones.push((i, j));
            } else if zeros(i, j) {
                t.frozen_zeros.push((i, j));
            } else {
                t.free_pairs.push((i, j));
            }
        }
    }
    Ok(t)
}

impl SeedTemplate {
    /// Frozen edges only.
    pub fn base_graph(&self) -> Graph {
        let mut g = Graph::empty(self.order);
        for &(i, j) in &self.frozen_ones {
            g.set_edge(i, j, true);
        }
        g
    }

    /// Frozen edges plus each free pair with probability `init_probability`.
    pub fn random_graph(&self, rng: &mut ChaCha8Rng) -> Graph {
        let mut g = self.base_graph();
        for &(i, j) in &self.free_pairs {
            if rng.gen_bool(self.init_probability) {
                g.set_edge(i, j, true);
            }
        }
        g
    }

    /// The free-pair bits of `g`, packed.
    pub fn free_key(&self, g: &Graph) -> Vec<u64> {
        let mut key = vec![0u64; self.free_pairs.len().div_ceil(64)];
        for (idx, &(i, j)) in self.free_pairs.iter().enumerate() {
            if g.has_edge(i, j) {
                key[idx / 64] |= 1u64 << (idx % 64);
            }
        }
        key
    }

    /// Whether every frozen pair of `g` has its frozen value.
    pub fn respects(&self, g: &Graph) -> bool {
        g.order() == self.order
            && self.frozen_ones.iter().all(|&(i, j)| g.has_edge(i, j))
            && self.frozen_zeros.iter().all(|&(i, j)| !g.has_edge(i, j))
    }
}

/// Number of members contained in `g`, or `-1` as soon as that number is
/// known to be below `floor`.
pub fn score(g: &Graph, family: &GraphFamily, floor: i64) -> i64 {
    score_counted(g, family, floor, &mut SearchStats::default())
}

pub fn score_counted(g: &Graph, family: &GraphFamily, floor: i64, stats: &mut SearchStats) -> i64 {
    let mut count = family.len() as i64;
    for h in &family.members {
        stats.subiso_calls += 1;
        if !induced_subgraph_iso(h, g) {
            count -= 1;
            if count < floor {
                return -1;
            }
        }
    }
    count
}

/// Flips per restart: 1000 for families of order up to 6, 10000 above.
pub fn default_max_iter(k: usize) -> u64 {
    if k <= 6 {
        1000
    } else {
        10_000
    }
}

#[derive(Clone, Debug)]
pub struct ClimbConfig {
    pub template: SeedTemplate,
    pub family: GraphFamily,
    pub max_iter: u64,
    pub time_limit: Option<Duration>,
    pub seed: u64,
    /// Independent climbers, worker `w` seeded with `derive_seed(seed, w)`.
    pub jobs: usize,
    /// Stop each worker after this many restarts.
    pub max_restarts: Option<u64>,
}

impl ClimbConfig {
    pub fn new(template: SeedTemplate, family: GraphFamily, seed: u64) -> Self {
        let k = family.k.unwrap_or_else(|| family.max_order());
        ClimbConfig {
            template,
            family,
            max_iter: default_max_iter(k),
            time_limit: None,
            seed,
            jobs: 1,
            max_restarts: None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct ClimbOutcome {
    /// A certified universal graph, if one was found.
    pub graph: Option<Graph>,
    pub stats: SearchStats,
    pub restarts: u64,
    pub flips: u64,
    pub cache_hits: u64,
    /// Seed of the worker that succeeded.
    pub winning_seed: Option<u64>,
    pub elapsed: Duration,
}

struct Worker<'a> {
    config: &'a ClimbConfig,
    family: &'a GraphFamily,
    cancel: &'a AtomicBool,
    start: Instant,
    stats: SearchStats,
    restarts: u64,
    flips: u64,
    cache_hits: u64,
}

impl Worker<'_> {
    fn out_of_time(&self) -> bool {
        self.cancel.load(Ordering::Relaxed)
            || self
                .config
                .time_limit
                .is_some_and(|t| self.start.elapsed() >= t)
    }

    fn run(&mut self, seed: u64) -> Option<Graph> {
        let target = self.family.len() as i64;
        let template = &self.config.template;
        let mut rng = rng(seed);
        let mut cache: HashMap<Vec<u64>, i64> = HashMap::new();
        loop {
            if self.config.max_restarts.is_some_and(|m| self.restarts >= m) || self.out_of_time() {
                return None;
            }
            self.restarts += 1;
            cache.clear();
            let mut g = template.random_graph(&mut rng);
            let mut s = score_counted(&g, self.family, 0, &mut self.stats);
            cache.insert(template.free_key(&g), s);
            if s == target {
                return Some(g);
            }
            if template.free_pairs.is_empty() {
                continue;
            }
            for _ in 0..self.config.max_iter {
                if self.out_of_time() {
                    return None;
                }
                let (v, w) = template.free_pairs[rng.gen_range(0..template.free_pairs.len())];
                let next = g.flip_edge(v, w).expect("free pairs are valid");
                self.flips += 1;
                let key = template.free_key(&next);
                let ns = match cache.get(&key) {
                    Some(&cached) => {
                        self.cache_hits += 1;
                        cached
                    }
                    None => {
                        let fresh = score_counted(&next, self.family, s, &mut self.stats);
                        cache.insert(key, fresh);
                        fresh
                    }
                };
                if ns >= s {
                    g = next;
                    s = ns;
                    if s == target {
                        return Some(g);
                    }
                }
            }
        }
    }
}

/// Runs `config.jobs` independent climbers until one finds a universal
/// graph, all give up, or time runs out. Success is re-checked with the
/// independent verifier before it is reported.
pub fn hill_climb(config: &ClimbConfig) -> Result<ClimbOutcome> {
    let start = Instant::now();
    let family = order_family(
        &config.family,
        &OrderingStrategy::new(StrategyKind::Automorphisms, config.seed),
    )?;
    let cancel = AtomicBool::new(false);
    let winner: Mutex<Option<(usize, Graph, u64)>> = Mutex::new(None);
    let totals = Mutex::new((SearchStats::default(), 0u64, 0u64, 0u64));
    let jobs = config.jobs.max(1);
    std::thread::scope(|scope| {
        for w in 0..jobs {
            let (family, cancel, winner, totals) = (&family, &cancel, &winner, &totals);
            scope.spawn(move || {
                let seed = derive_seed(config.seed, w as u64);
                let mut worker = Worker {
                    config,
                    family,
                    cancel,
                    start,
                    stats: SearchStats::default(),
                    restarts: 0,
                    flips: 0,
                    cache_hits: 0,
                };
                if let Some(g) = worker.run(seed) {
                    let mut slot = winner.lock().unwrap();
                    // lowest worker index wins if several finish together
                    if slot.as_ref().is_none_or(|(idx, _, _)| w < *idx) {
                        *slot = Some((w, g, seed));
                    }
                    cancel.store(true, Ordering::Relaxed);
                }
                let mut t = totals.lock().unwrap();
                t.0.merge(&worker.stats);
                t.1 += worker.restarts;
                t.2 += worker.flips;
                t.3 += worker.cache_hits;
            });
        }
    });
    let (mut stats, restarts, flips, cache_hits) = totals.into_inner().unwrap();
    let found = winner.into_inner().unwrap();
    if let Some((_, g, _)) = &found {
        let cert = verify_universal(g, &config.family);
        if !cert.valid {
            return Err(Error::invalid(format!(
                "climber reported {} as universal but verification failed",
                g.to_graph6()
            )));
        }
        stats.universal_found = 1;
    }
    Ok(ClimbOutcome {
        winning_seed: found.as_ref().map(|(_, _, s)| *s),
        graph: found.map(|(_, g, _)| g),
        stats,
        restarts,
        flips,
        cache_hits,
        elapsed: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::naive_induced_iso;

    #[test]
    fn template_sizes() {
        let t = make_seed_template(TemplateKind::CliqueIndep(6), 14).unwrap();
        assert_eq!(
            (
                t.frozen_ones.len(),
                t.frozen_zeros.len(),
                t.free_pairs.len()
            ),
            (15, 15, 61)
        );
        let t = make_seed_template(TemplateKind::Star(6), 9).unwrap();
        assert_eq!(
            (
                t.frozen_ones.len(),
                t.frozen_zeros.len(),
                t.free_pairs.len()
            ),
            (5, 10, 21)
        );
        assert_eq!(t.init_probability, 0.1);
        assert!(make_seed_template(TemplateKind::CliqueIndep(6), 10).is_err());
        assert!(make_seed_template(TemplateKind::Star(6), 5).is_err());
    }

    #[test]
    fn templates_hold_their_seed_structures() {
        let t = make_seed_template(TemplateKind::CliqueIndep(4), 9).unwrap();
        let mut r = rng(5);
        for _ in 0..20 {
            let g = t.random_graph(&mut r);
            assert!(t.respects(&g));
            let clique = crate::graph::VertexSet::from_vertices(0..4);
            let indep = crate::graph::VertexSet::from_vertices(3..7);
            assert_eq!(g.induced_subgraph(clique), Graph::complete(4));
            assert_eq!(g.induced_subgraph(indep), Graph::empty(4));
        }
    }

    #[test]
    fn score_examples() {
        let f3 = GraphFamily::all_graphs(3).unwrap();
        let fig1a = Graph::from_edges(5, &[(0, 3), (0, 4), (1, 4), (3, 4)]).unwrap();
        assert_eq!(score(&fig1a, &f3, 0), 4);
        assert_eq!(score(&Graph::empty(6), &f3, 0), 1);
        assert_eq!(score(&Graph::complete(5), &f3, 4), -1);
        assert_eq!(score(&Graph::complete(5), &f3, 0), 1);
    }

    #[test]
    fn score_matches_naive_count() {
        let f4 = GraphFamily::all_graphs(4).unwrap();
        let t = make_seed_template(TemplateKind::CliqueIndep(3), 7).unwrap();
        let mut r = rng(11);
        for _ in 0..30 {
            let g = t.random_graph(&mut r);
            let naive = f4
                .members
                .iter()
                .filter(|h| naive_induced_iso(h, &g))
                .count();
            assert_eq!(score(&g, &f4, 0), naive as i64);
        }
    }

    #[test]
    fn empty_family_succeeds_at_once() {
        let t = make_seed_template(TemplateKind::Star(3), 4).unwrap();
        let cfg = ClimbConfig::new(t, GraphFamily::custom("none", vec![]), 1);
        let out = hill_climb(&cfg).unwrap();
        assert!(out.graph.is_some());
        assert_eq!(out.flips, 0);
        assert_eq!(out.stats.subiso_calls, 0);
    }

    #[test]
    fn finds_seven_vertex_graph_for_five_vertex_trees() {
        let t = make_seed_template(TemplateKind::Star(5), 7).unwrap();
        let mut cfg = ClimbConfig::new(t.clone(), GraphFamily::trees(5).unwrap(), 3);
        cfg.max_restarts = Some(200);
        let out = hill_climb(&cfg).unwrap();
        let g = out.graph.expect("universal graph");
        assert!(t.respects(&g));
        assert!(verify_universal(&g, &cfg.family).valid);
    }

    #[test]
    fn same_seed_same_run() {
        let t = make_seed_template(TemplateKind::CliqueIndep(4), 8).unwrap();
        let mut cfg = ClimbConfig::new(t, GraphFamily::all_graphs(4).unwrap(), 21);
        cfg.max_restarts = Some(3);
        cfg.max_iter = 200;
        let a = hill_climb(&cfg).unwrap();
        let b = hill_climb(&cfg).unwrap();
        assert_eq!(a.graph, b.graph);
        assert_eq!(a.stats, b.stats);
        assert_eq!((a.flips, a.restarts), (b.flips, b.restarts));
    }
}
