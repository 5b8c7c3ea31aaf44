//! Dense undirected simple graphs on at most 64 vertices.
//!
//! Each vertex owns one `u64` row whose set bits are its neighbours, so most
//! set operations used by the solvers are single machine-word operations.

use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};

pub const MAX_ORDER: usize = 64;

/// Bitmask with the low `n` bits set.
#[inline]
pub fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A set of vertex indices of some host graph.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub fn empty() -> Self {
        VertexSet(0)
    }

    pub fn full(n: usize) -> Self {
        VertexSet(full_mask(n))
    }

    pub fn from_vertices(vs: impl IntoIterator<Item = usize>) -> Self {
        VertexSet(vs.into_iter().fold(0u64, |m, v| m | (1u64 << v)))
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> Bits {
        Bits(self.0)
    }
}

/// Iterator over the set bits of a word, lowest first.
#[derive(Clone, Copy, Debug)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Bits {}

#[derive(Clone, Copy)]
pub struct Graph {
    order: usize,
    adj: [u64; MAX_ORDER],
}

impl Graph {
    /// The edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Self {
        assert!(
            order <= MAX_ORDER,
            "graph order {order} exceeds {MAX_ORDER}"
        );
        Graph {
            order,
            adj: [0; MAX_ORDER],
        }
    }

    pub fn complete(order: usize) -> Self {
        let mut g = Graph::empty(order);
        let all = full_mask(order);
        for v in 0..order {
            g.adj[v] = all & !(1u64 << v);
        }
        g
    }

    pub fn cycle(order: usize) -> Self {
        let mut g = Graph::empty(order);
        if order >= 3 {
            for v in 0..order {
                g.set_edge(v, (v + 1) % order, true);
            }
        }
        g
    }

    pub fn path(order: usize) -> Self {
        let mut g = Graph::empty(order);
        for v in 1..order {
            g.set_edge(v - 1, v, true);
        }
        g
    }

    /// The star with centre 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Self {
        let mut g = Graph::empty(leaves + 1);
        for v in 1..=leaves {
            g.set_edge(0, v, true);
        }
        g
    }

    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if order > MAX_ORDER {
            return Err(Error::OrderLimit {
                what: "graphs",
                order,
                limit: MAX_ORDER,
            });
        }
        let mut g = Graph::empty(order);
        for &(u, v) in edges {
            if u >= order || v >= order {
                return Err(Error::invalid(format!(
                    "edge {{{u},{v}}} out of range for order {order}"
                )));
            }
            if u == v {
                return Err(Error::invalid(format!("loop at vertex {u}")));
            }
            g.set_edge(u, v, true);
        }
        Ok(g)
    }

    /// Builds a graph from raw rows, validating symmetry and loop freedom.
    pub fn from_rows(rows: &[u64]) -> Result<Self> {
        let order = rows.len();
        if order > MAX_ORDER {
            return Err(Error::OrderLimit {
                what: "graphs",
                order,
                limit: MAX_ORDER,
            });
        }
        let mut g = Graph::empty(order);
        g.adj[..order].copy_from_slice(rows);
        g.validate()?;
        Ok(g)
    }

    /// Checks the structural invariants: symmetric, loop free, no stray bits.
    pub fn validate(&self) -> Result<()> {
        let mask = full_mask(self.order);
        for v in 0..MAX_ORDER {
            let row = self.adj[v];
            if v >= self.order {
                if row != 0 {
                    return Err(Error::invalid(format!("row {v} beyond order is nonzero")));
                }
                continue;
            }
            if row & !mask != 0 {
                return Err(Error::invalid(format!("row {v} has bits beyond the order")));
            }
            if row >> v & 1 == 1 {
                return Err(Error::invalid(format!("loop at vertex {v}")));
            }
            for w in Bits(row) {
                if self.adj[w] >> v & 1 == 0 {
                    return Err(Error::invalid(format!("asymmetric pair ({v},{w})")));
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.adj[..self.order]
    }

    #[inline]
    pub fn neighbours(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, v: usize, w: usize) -> bool {
        self.adj[v] >> w & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.rows()
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order)
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order)
            .flat_map(move |v| Bits(self.adj[v] & !full_mask(v + 1)).map(move |w| (v, w)))
    }

    #[inline]
    pub(crate) fn set_edge(&mut self, v: usize, w: usize, present: bool) {
        if present {
            self.adj[v] |= 1u64 << w;
            self.adj[w] |= 1u64 << v;
        } else {
            self.adj[v] &= !(1u64 << w);
            self.adj[w] &= !(1u64 << v);
        }
    }

    pub fn complement(&self) -> Graph {
        let mut g = *self;
        let all = full_mask(self.order);
        for v in 0..self.order {
            g.adj[v] = !self.adj[v] & all & !(1u64 << v);
        }
        g
    }

    /// The subgraph induced by `s`, relabelled in ascending vertex order.
    pub fn induced_subgraph(&self, s: VertexSet) -> Graph {
        let s = s.0 & full_mask(self.order);
        let kept: Vec<usize> = Bits(s).collect();
        self.relabelled(&kept)
    }

    /// The graph whose vertex `i` is vertex `order[i]` of `self`.
    ///
    /// `order` must list distinct vertices; it need not cover all of them.
    pub fn relabelled(&self, order: &[usize]) -> Graph {
        let mut g = Graph::empty(order.len());
        for (i, &v) in order.iter().enumerate() {
            let mut row = 0u64;
            for (j, &w) in order.iter().enumerate() {
                if self.has_edge(v, w) {
                    row |= 1u64 << j;
                }
            }
            g.adj[i] = row;
        }
        g
    }

    /// Toggles the pair `{v, w}`.
    pub fn flip_edge(&self, v: usize, w: usize) -> Result<Graph> {
        if v == w {
            return Err(Error::invalid(format!("cannot flip a loop at vertex {v}")));
        }
        if v >= self.order || w >= self.order {
            return Err(Error::invalid(format!(
                "pair {{{v},{w}}} out of range for order {}",
                self.order
            )));
        }
        let mut g = *self;
        g.adj[v] ^= 1u64 << w;
        g.adj[w] ^= 1u64 << v;
        Ok(g)
    }

    /// `|2|E| - C(n, 2)|`: how far the edge count is from half of all pairs.
    pub fn edge_extremeness(&self) -> usize {
        let n = self.order;
        let pairs = n * n.saturating_sub(1) / 2;
        (2 * self.edge_count()).abs_diff(pairs)
    }

    /// Adds one isolated vertex.
    pub fn with_isolated_vertex(&self) -> Graph {
        assert!(self.order < MAX_ORDER);
        let mut g = *self;
        g.order += 1;
        g
    }

    /// Appends a vertex adjacent to exactly `nbrs` (a mask over existing vertices).
    pub fn with_new_vertex(&self, nbrs: u64) -> Graph {
        assert!(self.order < MAX_ORDER);
        let n = self.order;
        let mut g = *self;
        g.order += 1;
        g.adj[n] = nbrs & full_mask(n);
        for w in Bits(g.adj[n]) {
            g.adj[w] |= 1u64 << n;
        }
        g
    }

    /// Removes vertex `v`, shifting higher indices down.
    pub fn without_vertex(&self, v: usize) -> Graph {
        let keep = full_mask(self.order) & !(1u64 << v);
        self.induced_subgraph(VertexSet(keep))
    }

    /// Upper-triangle bits in graph6 (column-major) order, first pair in the
    /// most significant position. Only defined for order ≤ 16.
    pub fn packed_upper(&self) -> u128 {
        debug_assert!(self.order <= 16);
        let mut key = 0u128;
        for j in 1..self.order {
            for i in 0..j {
                key = key << 1 | (self.adj[i] >> j & 1) as u128;
            }
        }
        key
    }

    pub fn to_graph6(&self) -> String {
        crate::graph6::encode(self)
    }

    pub fn from_graph6(text: &str) -> Result<Graph> {
        crate::graph6::decode(text)
    }

    /// Rows of space-separated 0/1 tokens, one line per vertex.
    pub fn to_matrix_text(&self) -> String {
        let mut out = String::with_capacity(self.order * self.order * 2);
        for v in 0..self.order {
            for w in 0..self.order {
                if w > 0 {
                    out.push(' ');
                }
                out.push(if self.has_edge(v, w) { '1' } else { '0' });
            }
            out.push('\n');
        }
        out
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.rows() == other.rows()
    }
}

impl Eq for Graph {}

impl Hash for Graph {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.order.hash(state);
        self.rows().hash(state);
    }
}

impl PartialOrd for Graph {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Graph {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.order
            .cmp(&other.order)
            .then_with(|| self.rows().cmp(other.rows()))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({})", self.to_graph6())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_graph6())
    }
}
