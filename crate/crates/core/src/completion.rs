//! Completion search for universal graphs of the order-`k` trees.
//!
//! Every such graph contains the star `K_{1,k-1}`, so the first `k` vertices
//! can be fixed to that star (centre 0). What remains is the `k × (n-k)`
//! block joining the star to the `n-k` tail vertices and the tail itself.
//! Two symmetries are broken:
//!
//! * the tail is one canonical graph per isomorphism class of order `n-k`;
//! * the leaves are interchangeable, so leaf rows are listed in
//!   non-increasing order. The centre row and the first leaf row range freely.
//!
//! A row is an `(n-k)`-bit number whose most significant bit is the first
//! tail vertex.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::enumerate::{small_canonical_matrices, TAIL_LIMIT};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::iso::canonical_form;
use crate::search::{
    is_induced_universal, order_family, pool, GraphFamily, OrderingStrategy, SearchStats,
    StrategyKind,
};

/// Largest number of free bits [`naive_complete_search`] will enumerate.
pub const NAIVE_BIT_LIMIT: usize = 30;

#[derive(Clone, Debug, Default)]
pub struct CompletionResult {
    /// Canonical forms, pairwise non-isomorphic, sorted by graph6 string.
    pub graphs: Vec<Graph>,
    pub matrices_tested: u64,
    pub stats: SearchStats,
}

/// Star on `0..k`, `rows[i]` joining star vertex `i` to the tail, and
/// `tail` on the last `n-k` vertices.
pub fn make_graph(n: usize, k: usize, rows: &[u64], tail: &Graph) -> Result<Graph> {
    if k == 0 || k > n || rows.len() != k || tail.order() != n - k {
        return Err(Error::invalid(format!(
            "make_graph(n = {n}, k = {k}) given {} rows and a tail of order {}",
            rows.len(),
            tail.order()
        )));
    }
    let m = n - k;
    let mut g = Graph::empty(n);
    for leaf in 1..k {
        g.set_edge(0, leaf, true);
    }
    for (i, &x) in rows.iter().enumerate() {
        if m < 64 && x >> m != 0 {
            return Err(Error::invalid(format!(
                "row {i} value {x} has more than {m} bits"
            )));
        }
        for c in 0..m {
            if x >> (m - 1 - c) & 1 == 1 {
                g.set_edge(i, k + c, true);
            }
        }
    }
    for (u, v) in tail.edges() {
        g.set_edge(k + u, k + v, true);
    }
    Ok(g)
}

fn check_dims(n: usize, k: usize) -> Result<()> {
    if k == 0 || k > n {
        return Err(Error::invalid(format!(
            "need 1 ≤ k ≤ n, got n = {n}, k = {k}"
        )));
    }
    if n - k > TAIL_LIMIT {
        return Err(Error::invalid(format!(
            "tail order {} above the supported limit {TAIL_LIMIT}",
            n - k
        )));
    }
    Ok(())
}

fn tree_family(k: usize) -> Result<GraphFamily> {
    order_family(
        &GraphFamily::trees(k)?,
        &OrderingStrategy::new(StrategyKind::Automorphisms, 0),
    )
}

struct Partial {
    hits: Vec<Graph>,
    matrices: u64,
    stats: SearchStats,
}

impl Partial {
    fn new() -> Self {
        Partial {
            hits: Vec::new(),
            matrices: 0,
            stats: SearchStats::default(),
        }
    }

    fn merge(mut self, other: Partial) -> Self {
        self.hits.extend(other.hits);
        self.matrices += other.matrices;
        self.stats.merge(&other.stats);
        self
    }

    fn test(&mut self, family: &GraphFamily, g: Graph) {
        self.matrices += 1;
        self.stats.candidates_tested += 1;
        if is_induced_universal(family, &g, &mut self.stats) {
            self.hits.push(g);
        }
    }
}

fn finish(p: Partial) -> Result<CompletionResult> {
    let mut seen = HashSet::new();
    let mut graphs = Vec::new();
    for g in &p.hits {
        let c = canonical_form(g)?;
        if seen.insert(c.packed_upper()) {
            graphs.push(c);
        }
    }
    graphs.sort_by_cached_key(Graph::to_graph6);
    let mut stats = p.stats;
    stats.universal_found = graphs.len() as u64;
    Ok(CompletionResult {
        graphs,
        matrices_tested: p.matrices,
        stats,
    })
}

/// All order-`n` universal graphs for the order-`k` trees, one per class.
/// Requires `n - k ≤ 5`; `k = n` gives the star itself.
pub fn complete_search(n: usize, k: usize, jobs: Option<usize>) -> Result<CompletionResult> {
    check_dims(n, k)?;
    let m = n - k;
    let family = tree_family(k)?;
    let tails = small_canonical_matrices(m)?;
    let range = 1u64 << m;
    // work units: centre row and, when there is a leaf, the first leaf row
    let prefixes: Vec<Vec<u64>> = if k == 1 {
        (0..range).map(|x| vec![x]).collect()
    } else {
        (0..range)
            .flat_map(|x0| (0..range).map(move |x1| vec![x0, x1]))
            .collect()
    };
    let partial = pool(jobs)?.install(|| {
        prefixes
            .par_iter()
            .map(|prefix| {
                let mut p = Partial::new();
                let mut rows = prefix.clone();
                rows.resize(k, 0);
                extend_rows(n, k, prefix.len(), &mut rows, &tails, &family, &mut p);
                p
            })
            .reduce(Partial::new, Partial::merge)
    });
    finish(partial)
}

fn extend_rows(
    n: usize,
    k: usize,
    filled: usize,
    rows: &mut [u64],
    tails: &[Graph],
    family: &GraphFamily,
    p: &mut Partial,
) {
    if filled == k {
        for tail in tails {
            let g = make_graph(n, k, rows, tail).expect("dimensions checked");
            p.test(family, g);
        }
        return;
    }
    for x in 0..=rows[filled - 1] {
        rows[filled] = x;
        extend_rows(n, k, filled + 1, rows, tails, family, p);
    }
}

/// The same search without symmetry breaking: every row value and every
/// tail edge set. Limited to [`NAIVE_BIT_LIMIT`] free bits.
pub fn naive_complete_search(n: usize, k: usize, jobs: Option<usize>) -> Result<CompletionResult> {
    if k == 0 || k > n {
        return Err(Error::invalid(format!(
            "need 1 ≤ k ≤ n, got n = {n}, k = {k}"
        )));
    }
    let m = n - k;
    let row_bits = k * m;
    let tail_bits = m * m.saturating_sub(1) / 2;
    if row_bits + tail_bits > NAIVE_BIT_LIMIT {
        return Err(Error::invalid(format!(
            "{} free bits exceed the naive limit {NAIVE_BIT_LIMIT}",
            row_bits + tail_bits
        )));
    }
    let family = tree_family(k)?;
    let tail_pairs: Vec<(usize, usize)> =
        (1..m).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let row_mask = (1u64 << m) - 1;
    let partial = pool(jobs)?.install(|| {
        (0u64..1 << tail_bits)
            .into_par_iter()
            .map(|tmask| {
                let mut tail = Graph::empty(m);
                for (b, &(i, j)) in tail_pairs.iter().enumerate() {
                    if tmask >> b & 1 == 1 {
                        tail.set_edge(i, j, true);
                    }
                }
                let mut p = Partial::new();
                for rmask in 0u64..1 << row_bits {
                    let rows: Vec<u64> = (0..k).map(|i| rmask >> (i * m) & row_mask).collect();
                    let g = make_graph(n, k, &rows, &tail).expect("dimensions checked");
                    p.test(&family, g);
                }
                p
            })
            .reduce(Partial::new, Partial::merge)
    });
    finish(partial)
}

/// Upper bound on matrices tested by [`complete_search`]:
/// `2^m · C(2^m + k - 2, k - 1) · tails(m)`.
pub fn completion_bound(n: usize, k: usize) -> Result<u64> {
    check_dims(n, k)?;
    let m = n - k;
    let r = 1u64 << m;
    // multisets of k-1 leaf rows from r values
    let mut multisets = 1u64;
    for i in 0..(k as u64 - 1) {
        multisets = multisets * (r + i) / (i + 1);
    }
    Ok(r * multisets * small_canonical_matrices(m)?.len() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexSet;

    #[test]
    fn make_graph_examples() {
        let s = make_graph(7, 7, &[0; 7], &Graph::empty(0)).unwrap();
        assert_eq!(s, Graph::star(6));
        let g = make_graph(6, 5, &[0; 5], &Graph::empty(1)).unwrap();
        assert_eq!(g, Graph::star(4).with_isolated_vertex());
        let tail = Graph::path(3);
        let g = make_graph(9, 6, &[0b101, 0b011, 0b010, 0, 0b111, 1], &tail).unwrap();
        assert_eq!(g.induced_subgraph(VertexSet::from_vertices(6..9)), tail);
        assert_eq!(
            g.induced_subgraph(VertexSet::from_vertices(0..6)),
            Graph::star(5)
        );
        assert!(g.has_edge(0, 6) && !g.has_edge(0, 7) && g.has_edge(0, 8));
        assert!(make_graph(9, 6, &[0; 5], &tail).is_err());
        assert!(make_graph(9, 6, &[8, 0, 0, 0, 0, 0], &tail).is_err());
    }

    #[test]
    fn smallest_tree_rows() {
        let expected = [(1, 1), (2, 1), (3, 1), (5, 2), (7, 18)];
        for (k, &(t, count)) in (1..=5).zip(&expected) {
            let r = complete_search(t, k, None).unwrap();
            assert_eq!(r.graphs.len(), count, "k = {k}");
            if t > k {
                assert!(complete_search(t - 1, k, None).unwrap().graphs.is_empty());
            }
        }
    }

    #[test]
    fn naive_matches_symmetry_breaking() {
        for (n, k) in [(5, 4), (6, 5), (7, 5)] {
            let fast = complete_search(n, k, None).unwrap();
            let slow = naive_complete_search(n, k, None).unwrap();
            assert_eq!(fast.graphs, slow.graphs, "({n}, {k})");
            assert!(fast.matrices_tested <= completion_bound(n, k).unwrap());
            assert!(fast.matrices_tested < slow.matrices_tested);
        }
        assert_eq!(naive_complete_search(5, 4, None).unwrap().graphs.len(), 2);
        assert!(naive_complete_search(14, 6, None).is_err());
    }

    #[test]
    fn dims_checked() {
        assert!(complete_search(12, 6, None).is_err());
        assert!(complete_search(5, 6, None).is_err());
        assert!(complete_search(5, 0, None).is_err());
    }
}
