//! Canonical forms and automorphism counting.
//!
//! Vertices are first split into an ordered equitable partition (iterated
//! degree refinement). A labelling is admissible when it lists the cells in
//! order. The canonical form is the admissible relabelling whose graph6 bit
//! string (upper triangle, column by column) is lexicographically smallest.
//! Because the partition and its cell order depend only on structure, two
//! graphs get the same canonical form exactly when they are isomorphic.
//!
//! The column-major bit order makes the search prefix-friendly: placing
//! position `p` appends exactly the bits `(0,p) .. (p-1,p)`, so at every
//! depth only candidates with the smallest new column need to be tried.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::graph::{Bits, Graph};

/// Largest order accepted by [`canonical_form`].
pub const CANON_LIMIT: usize = 16;
/// Largest order accepted by [`automorphism_count`].
pub const AUTOMORPHISM_LIMIT: usize = 10;

/// Ordered equitable partition: `cell[v]` is the rank of `v`'s cell.
fn equitable_cells(g: &Graph) -> (Vec<u8>, usize) {
    let n = g.order();
    let mut cell = vec![0u8; n];
    let mut cells = usize::from(n > 0);
    loop {
        let mut keys: Vec<(u128, usize)> = (0..n)
            .map(|v| {
                let mut counts = [0u8; 16];
                for w in Bits(g.neighbours(v)) {
                    counts[cell[w] as usize] += 1;
                }
                let packed = counts
                    .iter()
                    .take(cells)
                    .fold(0u128, |acc, &c| acc << 5 | c as u128);
                ((cell[v] as u128) << 96 | packed, v)
            })
            .collect();
        keys.sort_unstable();
        let mut next = vec![0u8; n];
        let mut rank = 0u8;
        for i in 0..n {
            if i > 0 && keys[i].0 != keys[i - 1].0 {
                rank += 1;
            }
            next[keys[i].1] = rank;
        }
        let next_cells = if n == 0 { 0 } else { rank as usize + 1 };
        cell = next;
        if next_cells == cells {
            return (cell, cells);
        }
        cells = next_cells;
    }
}

struct CanonSearch<'a> {
    g: &'a Graph,
    n: usize,
    /// cell rank required at each position
    slot_cell: Vec<u8>,
    cell: Vec<u8>,
    path: Vec<usize>,
    path_cols: Vec<u32>,
    best: Vec<usize>,
    best_cols: Vec<u32>,
}

impl CanonSearch<'_> {
    fn prefix_cmp(&self, len: usize) -> Ordering {
        if self.best.is_empty() {
            return Ordering::Less;
        }
        self.path_cols[..len].cmp(&self.best_cols[..len])
    }

    fn search(&mut self, depth: usize, placed: u64) {
        if depth == self.n {
            if self.prefix_cmp(self.n) == Ordering::Less {
                self.best.clone_from(&self.path);
                self.best_cols.clone_from(&self.path_cols);
            }
            return;
        }
        let want = self.slot_cell[depth];
        let mut min_col = u32::MAX;
        let mut ties = 0u64;
        for v in 0..self.n {
            if placed >> v & 1 == 1 || self.cell[v] != want {
                continue;
            }
            let mut col = 0u32;
            for &u in &self.path {
                col = col << 1 | self.g.has_edge(u, v) as u32;
            }
            match col.cmp(&min_col) {
                Ordering::Less => {
                    min_col = col;
                    ties = 1u64 << v;
                }
                Ordering::Equal => ties |= 1u64 << v,
                Ordering::Greater => {}
            }
        }
        self.path_cols.push(min_col);
        let mut tried = 0u64;
        for v in Bits(ties) {
            if self.prefix_cmp(depth + 1) == Ordering::Greater {
                break;
            }
            // swapping two unplaced twins is an automorphism fixing the path
            let twin = Bits(tried).any(|u| {
                let mask = !(1u64 << u | 1u64 << v);
                (self.g.neighbours(u) ^ self.g.neighbours(v)) & mask == 0
            });
            if twin {
                continue;
            }
            tried |= 1u64 << v;
            self.path.push(v);
            self.search(depth + 1, placed | 1u64 << v);
            self.path.pop();
        }
        self.path_cols.pop();
    }
}

/// Canonical labelling: entry `p` is the vertex placed at position `p`.
pub fn canonical_labelling(g: &Graph) -> Result<Vec<usize>> {
    let n = g.order();
    if n > CANON_LIMIT {
        return Err(Error::OrderLimit {
            what: "canonical forms",
            order: n,
            limit: CANON_LIMIT,
        });
    }
    let (cell, _) = equitable_cells(g);
    let mut slot_cell = cell.clone();
    slot_cell.sort_unstable();
    let mut s = CanonSearch {
        g,
        n,
        slot_cell,
        cell,
        path: Vec::with_capacity(n),
        path_cols: Vec::with_capacity(n),
        best: Vec::new(),
        best_cols: Vec::new(),
    };
    s.search(0, 0);
    Ok(s.best)
}

/// The canonical representative of `g`'s isomorphism class.
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    Ok(g.relabelled(&canonical_labelling(g)?))
}

/// Number of adjacency-preserving permutations of `g`.
pub fn automorphism_count(g: &Graph) -> Result<u64> {
    let n = g.order();
    if n > AUTOMORPHISM_LIMIT {
        return Err(Error::OrderLimit {
            what: "automorphism counting",
            order: n,
            limit: AUTOMORPHISM_LIMIT,
        });
    }
    // automorphisms preserve the equitable partition
    let (cell, _) = equitable_cells(g);
    let mut image = vec![0usize; n];
    Ok(count_maps(g, &cell, 0, 0, &mut image))
}

fn count_maps(g: &Graph, cell: &[u8], v: usize, used: u64, image: &mut [usize]) -> u64 {
    let n = g.order();
    if v == n {
        return 1;
    }
    let mut total = 0;
    for w in 0..n {
        if used >> w & 1 == 1 || cell[w] != cell[v] {
            continue;
        }
        if (0..v).all(|u| g.has_edge(u, v) == g.has_edge(image[u], w)) {
            image[v] = w;
            total += count_maps(g, cell, v + 1, used | 1u64 << w, image);
        }
    }
    total
}

/// `a ≅ b`, decided by the induced subgraph solver on equal orders.
pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order() && a.edge_count() == b.edge_count() && super::induced_subgraph_iso(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Every permutation of `0..n`, by Heap's algorithm.
    fn permutations(n: usize) -> Vec<Vec<usize>> {
        fn heap(k: usize, a: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if k <= 1 {
                out.push(a.clone());
                return;
            }
            for i in 0..k {
                heap(k - 1, a, out);
                if k.is_multiple_of(2) {
                    a.swap(i, k - 1);
                } else {
                    a.swap(0, k - 1);
                }
            }
        }
        let mut out = Vec::new();
        heap(n, &mut (0..n).collect(), &mut out);
        out
    }

    #[test]
    fn c5_is_self_complementary_by_exhaustion() {
        let c5 = Graph::cycle(5);
        let comp = c5.complement();
        let witnesses = permutations(5)
            .into_iter()
            .filter(|p| c5.relabelled(p) == comp)
            .count();
        assert!(witnesses > 0);
        assert!(is_isomorphic(&c5, &comp));
        assert_eq!(canonical_form(&c5).unwrap(), canonical_form(&comp).unwrap());
    }

    #[test]
    fn isomorphism_examples() {
        let star = Graph::star(3);
        assert!(!is_isomorphic(&Graph::path(4), &star));
        assert!(is_isomorphic(&star, &star));
        assert_eq!(canonical_form(&Graph::empty(3)).unwrap(), Graph::empty(3));
    }

    #[test]
    fn automorphism_examples() {
        assert_eq!(automorphism_count(&Graph::complete(5)).unwrap(), 120);
        assert_eq!(automorphism_count(&Graph::cycle(5)).unwrap(), 10);
        for n in 0..=8u64 {
            let fact: u64 = (1..=n).product();
            assert_eq!(
                automorphism_count(&Graph::complete(n as usize)).unwrap(),
                fact
            );
        }
        assert!(automorphism_count(&Graph::empty(11)).is_err());
    }

    #[test]
    fn canonical_form_respects_limit() {
        assert!(canonical_form(&Graph::empty(17)).is_err());
        assert!(canonical_form(&Graph::cycle(16)).is_ok());
    }
}
