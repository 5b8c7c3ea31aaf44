//! Exhaustive universal-graph search over a candidate stream, the four
//! family orderings, and the ordering experiment.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::enumerate::{all_graphs, all_trees, GraphStream};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::iso::{automorphism_count, induced_subgraph_iso};
use crate::seed::{derive_seed, rng};

/// Where a family came from; decides the lower bound used by
/// [`minimal_universal_search`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyKind {
    AllGraphs,
    Trees,
    Custom,
}

#[derive(Clone, Debug)]
pub struct GraphFamily {
    pub members: Vec<Graph>,
    pub label: String,
    pub kind: FamilyKind,
    /// Common member order, if the family was generated for one.
    pub k: Option<usize>,
}

impl GraphFamily {
    /// Every graph on `k ≤ 8` vertices.
    pub fn all_graphs(k: usize) -> Result<Self> {
        Ok(GraphFamily {
            members: all_graphs(k)?.into_vec()?,
            label: format!("all:{k}"),
            kind: FamilyKind::AllGraphs,
            k: Some(k),
        })
    }

    /// Every free tree on `k ≤ 10` vertices.
    pub fn trees(k: usize) -> Result<Self> {
        Ok(GraphFamily {
            members: all_trees(k)?,
            label: format!("trees:{k}"),
            kind: FamilyKind::Trees,
            k: Some(k),
        })
    }

    /// An arbitrary list, assumed pairwise non-isomorphic.
    pub fn custom(label: impl Into<String>, members: Vec<Graph>) -> Self {
        GraphFamily {
            members,
            label: label.into(),
            kind: FamilyKind::Custom,
            k: None,
        }
    }

    /// Parses `all:K`, `trees:K` or `file:PATH`.
    pub fn from_descriptor(desc: &str) -> Result<Self> {
        let (kind, arg) = desc.split_once(':').ok_or_else(|| {
            Error::invalid(format!(
                "family `{desc}`: expected all:K, trees:K or file:PATH"
            ))
        })?;
        let k = || {
            arg.parse::<usize>()
                .map_err(|_| Error::invalid(format!("family `{desc}`: bad order `{arg}`")))
        };
        match kind {
            "all" => Self::all_graphs(k()?),
            "trees" => Self::trees(k()?),
            "file" => {
                let members = read_graph6_list(arg)?;
                Ok(Self::custom(desc, members))
            }
            _ => Err(Error::invalid(format!(
                "family `{desc}`: unknown kind `{kind}`"
            ))),
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn max_order(&self) -> usize {
        self.members.iter().map(Graph::order).max().unwrap_or(0)
    }
}

/// Reads every graph6 line of a file, whatever the orders.
fn read_graph6_list(path: &str) -> Result<Vec<Graph>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            Graph::from_graph6(l.trim()).map_err(|e| Error::GraphFile {
                path: path.into(),
                line: i + 1,
                reason: e.to_string(),
            })
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StrategyKind {
    /// Descending automorphism group size.
    Automorphisms,
    /// Descending `|2|E| - C(k,2)|`.
    Edges,
    /// Shuffle, then `K_k` and `I_k` to the front.
    AlmostRandom,
    Random,
}

impl StrategyKind {
    pub const ALL: [StrategyKind; 4] = [
        StrategyKind::Automorphisms,
        StrategyKind::Edges,
        StrategyKind::AlmostRandom,
        StrategyKind::Random,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StrategyKind::Automorphisms => "automorphisms",
            StrategyKind::Edges => "edges",
            StrategyKind::AlmostRandom => "almost-random",
            StrategyKind::Random => "random",
        }
    }
}

impl fmt::Display for StrategyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for StrategyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        StrategyKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::invalid(format!("unknown strategy `{s}`")))
    }
}

/// A strategy plus the seed that drives its shuffle.
///
/// With `random_ties` off, equal sort keys are ordered by graph6 string.
/// With it on, the family is shuffled with `seed` first and then stably
/// sorted, so ties fall in random order; a sorted strategy whose keys are
/// all equal then orders exactly like `Random` with the same seed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderingStrategy {
    pub kind: StrategyKind,
    pub seed: u64,
    pub random_ties: bool,
}

impl OrderingStrategy {
    pub fn new(kind: StrategyKind, seed: u64) -> Self {
        OrderingStrategy {
            kind,
            seed,
            random_ties: false,
        }
    }

    pub fn with_random_ties(mut self) -> Self {
        self.random_ties = true;
        self
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub subiso_calls: u64,
    pub candidates_tested: u64,
    pub universal_found: u64,
}

impl SearchStats {
    pub fn merge(&mut self, other: &SearchStats) {
        self.subiso_calls += other.subiso_calls;
        self.candidates_tested += other.candidates_tested;
        self.universal_found += other.universal_found;
    }
}

/// Reorders `family` by `strategy`. Fails only if automorphism counting is
/// needed for members above its order limit.
pub fn order_family(family: &GraphFamily, strategy: &OrderingStrategy) -> Result<GraphFamily> {
    let mut members = family.members.clone();
    let shuffle = |m: &mut Vec<Graph>| m.shuffle(&mut rng(strategy.seed));
    match strategy.kind {
        StrategyKind::Random => shuffle(&mut members),
        StrategyKind::AlmostRandom => {
            shuffle(&mut members);
            let k = family.max_order();
            for special in [Graph::empty(k), Graph::complete(k)] {
                if let Some(pos) = members.iter().position(|g| *g == special) {
                    let g = members.remove(pos);
                    members.insert(0, g);
                }
            }
        }
        StrategyKind::Automorphisms | StrategyKind::Edges => {
            let mut keyed = members
                .into_iter()
                .map(|g| {
                    let key = match strategy.kind {
                        StrategyKind::Automorphisms => automorphism_count(&g)?,
                        _ => g.edge_extremeness() as u64,
                    };
                    Ok((key, g))
                })
                .collect::<Result<Vec<_>>>()?;
            if strategy.random_ties {
                keyed.shuffle(&mut rng(strategy.seed));
                keyed.sort_by_key(|(key, _)| std::cmp::Reverse(*key));
            } else {
                keyed.sort_by_cached_key(|(key, g)| (std::cmp::Reverse(*key), g.to_graph6()));
            }
            members = keyed.into_iter().map(|(_, g)| g).collect();
        }
    }
    Ok(GraphFamily {
        members,
        label: family.label.clone(),
        kind: family.kind,
        k: family.k,
    })
}

/// Whether every member of `family` is an induced subgraph of `g`, checked
/// in family order and stopping at the first miss.
pub fn is_induced_universal(family: &GraphFamily, g: &Graph, stats: &mut SearchStats) -> bool {
    for h in &family.members {
        stats.subiso_calls += 1;
        if !induced_subgraph_iso(h, g) {
            return false;
        }
    }
    true
}

const CHUNK: usize = 1 << 14;

/// A pool of `jobs` threads (all cores when `None`).
pub(crate) fn pool(jobs: Option<usize>) -> Result<rayon::ThreadPool> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        builder = builder.num_threads(j.max(1));
    }
    builder
        .build()
        .map_err(|e| Error::invalid(format!("thread pool: {e}")))
}

/// Every universal candidate, sorted by graph6 string, with call counts
/// summed over all workers.
pub fn all_induced_universal_graphs(
    family: &GraphFamily,
    candidates: impl Iterator<Item = Result<Graph>>,
    jobs: Option<usize>,
) -> Result<(Vec<Graph>, SearchStats)> {
    scan(family, candidates, &pool(jobs)?)
}

fn scan(
    family: &GraphFamily,
    mut candidates: impl Iterator<Item = Result<Graph>>,
    pool: &rayon::ThreadPool,
) -> Result<(Vec<Graph>, SearchStats)> {
    let mut found = Vec::new();
    let mut stats = SearchStats::default();
    let mut order = None;
    loop {
        let chunk: Vec<Graph> = candidates.by_ref().take(CHUNK).collect::<Result<_>>()?;
        if chunk.is_empty() {
            break;
        }
        for g in &chunk {
            match order {
                None => order = Some(g.order()),
                Some(n) if n != g.order() => {
                    return Err(Error::invalid(format!(
                        "candidate stream mixes orders {n} and {}",
                        g.order()
                    )))
                }
                _ => {}
            }
        }
        let (hits, local) = pool.install(|| {
            chunk
                .par_iter()
                .fold(
                    || (Vec::new(), SearchStats::default()),
                    |(mut hits, mut st), g| {
                        st.candidates_tested += 1;
                        if is_induced_universal(family, g, &mut st) {
                            st.universal_found += 1;
                            hits.push(*g);
                        }
                        (hits, st)
                    },
                )
                .reduce(
                    || (Vec::new(), SearchStats::default()),
                    |(mut a, mut sa), (b, sb)| {
                        a.extend(b);
                        sa.merge(&sb);
                        (a, sa)
                    },
                )
        });
        found.extend(hits);
        stats.merge(&local);
    }
    found.sort_by_cached_key(Graph::to_graph6);
    Ok((found, stats))
}

/// Smallest order worth searching. All graphs: `2k-1` up to `k = 3`, `2k`
/// for `k = 4, 5`, `2k+2` from `k = 6`. Trees and custom families: the
/// largest member order.
pub fn known_lower_bound(k: usize, kind: FamilyKind) -> usize {
    match kind {
        FamilyKind::AllGraphs => match k {
            0 => 0,
            1..=3 => 2 * k - 1,
            4 | 5 => 2 * k,
            _ => 2 * k + 2,
        },
        FamilyKind::Trees | FamilyKind::Custom => k,
    }
}

#[derive(Clone, Debug)]
pub struct MinimalResult {
    pub order: usize,
    pub graphs: Vec<Graph>,
    pub stats: SearchStats,
}

/// Scans orders upward from the known lower bound until some candidate is
/// universal. `candidates(n)` supplies the order-`n` stream and should fail
/// for orders it cannot provide; `max_order` caps the scan.
pub fn minimal_universal_search(
    family: &GraphFamily,
    mut candidates: impl FnMut(usize) -> Result<GraphStream>,
    max_order: usize,
    jobs: Option<usize>,
) -> Result<MinimalResult> {
    let k = family.k.unwrap_or_else(|| family.max_order());
    let mut stats = SearchStats::default();
    for n in known_lower_bound(k, family.kind)..=max_order {
        let (graphs, st) = all_induced_universal_graphs(family, candidates(n)?, jobs)?;
        stats.merge(&st);
        if !graphs.is_empty() {
            return Ok(MinimalResult {
                order: n,
                graphs,
                stats,
            });
        }
    }
    Err(Error::invalid(format!(
        "no universal graph for {} up to order {max_order}",
        family.label
    )))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExperimentRow {
    pub strategy: StrategyKind,
    pub trial: usize,
    pub seed: u64,
    pub calls: u64,
    pub universal_found: u64,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct ExperimentTable {
    pub rows: Vec<ExperimentRow>,
}

impl ExperimentTable {
    pub fn calls(&self, strategy: StrategyKind) -> Vec<u64> {
        self.rows
            .iter()
            .filter(|r| r.strategy == strategy)
            .map(|r| r.calls)
            .collect()
    }

    pub fn mean_calls(&self, strategy: StrategyKind) -> f64 {
        let c = self.calls(strategy);
        if c.is_empty() {
            return 0.0;
        }
        c.iter().sum::<u64>() as f64 / c.len() as f64
    }

    /// `strategy,trial,seed,calls`, one line per trial, then one
    /// `mean` line per strategy with an empty seed.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("strategy,trial,seed,calls\n");
        let mut seen = Vec::new();
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{}\n",
                r.strategy, r.trial, r.seed, r.calls
            ));
            if !seen.contains(&r.strategy) {
                seen.push(r.strategy);
            }
        }
        for s in seen {
            out.push_str(&format!("{s},mean,,{:.1}\n", self.mean_calls(s)));
        }
        out
    }
}

/// Runs every strategy `trials` times over the same candidates. Trial `t`
/// uses seed `derive_seed(base_seed, t)` for every strategy, so strategies
/// that end up with the same order also report the same counts.
pub fn ordering_experiment(
    family: &GraphFamily,
    candidates: &[Graph],
    strategies: &[StrategyKind],
    trials: usize,
    base_seed: u64,
    random_ties: bool,
    jobs: Option<usize>,
) -> Result<ExperimentTable> {
    if trials == 0 {
        return Err(Error::invalid("trials must be at least 1"));
    }
    let mut table = ExperimentTable::default();
    for &kind in strategies {
        for trial in 0..trials {
            let seed = derive_seed(base_seed, trial as u64);
            let strategy = OrderingStrategy {
                kind,
                seed,
                random_ties,
            };
            let ordered = order_family(family, &strategy)?;
            let (_, stats) =
                all_induced_universal_graphs(&ordered, candidates.iter().copied().map(Ok), jobs)?;
            table.rows.push(ExperimentRow {
                strategy: kind,
                trial,
                seed,
                calls: stats.subiso_calls,
                universal_found: stats.universal_found,
            });
        }
    }
    Ok(table)
}
