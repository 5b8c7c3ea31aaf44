//! Induced subgraph isomorphism via a McSplit-style label-class search.
//!
//! The maximum common induced subgraph search keeps a partition of the
//! still-unmatched vertices of both graphs into label classes: a pattern
//! vertex may only be matched to a target vertex of the same class. Matching
//! `v ↦ w` splits every class by adjacency to `v` and `w`. The usual upper
//! bound is `matched + Σ min(|P_c|, |T_c|)`; for the decision problem we
//! backtrack as soon as that bound drops below the pattern order, which is
//! the same as some class having more pattern than target vertices.

use arrayvec::ArrayVec;

use crate::graph::{full_mask, Bits, Graph, MAX_ORDER};

/// One label class: pattern-vertex mask and target-vertex mask.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LabelClass {
    pub pattern: u64,
    pub target: u64,
}

/// Live label classes during the search. Classes with an empty pattern side
/// are dropped; a class with an empty target side never survives the bound.
pub type LabelClassPartition = ArrayVec<LabelClass, MAX_ORDER>;

struct Solver<'a> {
    pattern: &'a Graph,
    target: &'a Graph,
    pattern_degree: [u8; MAX_ORDER],
    pattern_order: usize,
}

impl<'a> Solver<'a> {
    fn new(pattern: &'a Graph, target: &'a Graph) -> Self {
        let mut pattern_degree = [0u8; MAX_ORDER];
        for (v, d) in pattern_degree.iter_mut().enumerate().take(pattern.order()) {
            *d = pattern.degree(v) as u8;
        }
        Solver {
            pattern,
            target,
            pattern_degree,
            pattern_order: pattern.order(),
        }
    }

    fn initial(&self) -> LabelClassPartition {
        let mut classes = LabelClassPartition::new();
        if self.pattern_order > 0 {
            classes.push(LabelClass {
                pattern: full_mask(self.pattern_order),
                target: full_mask(self.target.order()),
            });
        }
        classes
    }

    /// Picks the class with the fewest target vertices, then its pattern
    /// vertex of highest degree (lowest index on ties).
    #[inline]
    fn select(&self, classes: &LabelClassPartition) -> (usize, usize) {
        let mut best = 0;
        let mut best_size = u32::MAX;
        for (i, c) in classes.iter().enumerate() {
            let size = c.target.count_ones();
            if size < best_size {
                best_size = size;
                best = i;
            }
        }
        let mut v_best = usize::MAX;
        let mut d_best = 0u8;
        for v in Bits(classes[best].pattern) {
            let d = self.pattern_degree[v];
            if v_best == usize::MAX || d > d_best {
                v_best = v;
                d_best = d;
            }
        }
        (best, v_best)
    }

    /// Classes after matching `v ↦ w`, or `None` when the bound fails.
    #[inline]
    fn split(
        &self,
        classes: &LabelClassPartition,
        v: usize,
        w: usize,
    ) -> Option<LabelClassPartition> {
        let pv = self.pattern.neighbours(v);
        let tw = self.target.neighbours(w);
        let vbit = !(1u64 << v);
        let wbit = !(1u64 << w);
        let mut next = LabelClassPartition::new();
        for c in classes {
            let p = c.pattern & vbit;
            if p == 0 {
                continue;
            }
            let t = c.target & wbit;
            let (p_adj, t_adj) = (p & pv, t & tw);
            let (p_non, t_non) = (p & !pv, t & !tw);
            if p_adj != 0 {
                if p_adj.count_ones() > t_adj.count_ones() {
                    return None;
                }
                next.push(LabelClass {
                    pattern: p_adj,
                    target: t_adj,
                });
            }
            if p_non != 0 {
                if p_non.count_ones() > t_non.count_ones() {
                    return None;
                }
                next.push(LabelClass {
                    pattern: p_non,
                    target: t_non,
                });
            }
        }
        Some(next)
    }

    fn decide(&self, classes: &LabelClassPartition) -> bool {
        if classes.is_empty() {
            return true;
        }
        let (ci, v) = self.select(classes);
        for w in Bits(classes[ci].target) {
            if let Some(next) = self.split(classes, v, w) {
                if self.decide(&next) {
                    return true;
                }
            }
        }
        false
    }

    fn witness(&self, classes: &LabelClassPartition, map: &mut [usize]) -> bool {
        if classes.is_empty() {
            return true;
        }
        let (ci, v) = self.select(classes);
        for w in Bits(classes[ci].target) {
            if let Some(next) = self.split(classes, v, w) {
                map[v] = w;
                if self.witness(&next, map) {
                    return true;
                }
            }
        }
        false
    }
}

/// True iff `pattern` is isomorphic to an induced subgraph of `target`.
pub fn induced_subgraph_iso(pattern: &Graph, target: &Graph) -> bool {
    if pattern.order() > target.order() {
        return false;
    }
    let solver = Solver::new(pattern, target);
    let classes = solver.initial();
    solver.decide(&classes)
}

/// One induced embedding of `pattern` into `target`: `map[v]` is the target
/// vertex assigned to pattern vertex `v`. Deterministic for fixed inputs.
pub fn find_embedding(pattern: &Graph, target: &Graph) -> Option<Vec<usize>> {
    if pattern.order() > target.order() {
        return None;
    }
    let solver = Solver::new(pattern, target);
    let classes = solver.initial();
    let mut map = vec![usize::MAX; pattern.order()];
    solver.witness(&classes, &mut map).then_some(map)
}
