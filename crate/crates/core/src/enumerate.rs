//! Isomorph-free generation of graphs and trees, and graph6 file streams.
//!
//! Graphs of order `n + 1` are grown from canonical graphs of order `n` by
//! adding one vertex with every possible neighbourhood. A child is kept only
//! if deleting its distinguished vertex (the highest-degree vertex that comes
//! last in the canonical labelling) gives back the parent, so each class has
//! a single parent class. Children of one parent are deduplicated by
//! canonical form. Everything emitted is in canonical form.

use std::collections::HashSet;
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Lines, Write};
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::iso::{canonical_form, canonical_labelling};

/// Largest order generated internally; bigger orders are read from files.
pub const INTERNAL_LIMIT: usize = 8;
/// Largest tree order supported by [`all_trees`].
pub const TREE_LIMIT: usize = 10;
/// Largest tail order supported by [`small_canonical_matrices`].
pub const TAIL_LIMIT: usize = 5;

/// A sequence of same-order graphs, generated in memory or read lazily from
/// a graph6 file.
pub struct GraphStream {
    order: usize,
    source: Source,
}

enum Source {
    Memory(std::vec::IntoIter<Graph>),
    File {
        path: PathBuf,
        lines: Lines<BufReader<File>>,
        line: usize,
    },
}

impl GraphStream {
    pub fn from_graphs(order: usize, graphs: Vec<Graph>) -> Result<Self> {
        if let Some(g) = graphs.iter().find(|g| g.order() != order) {
            return Err(Error::invalid(format!(
                "stream of order {order} given a graph of order {}",
                g.order()
            )));
        }
        Ok(GraphStream {
            order,
            source: Source::Memory(graphs.into_iter()),
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Drains the stream, stopping at the first bad line.
    pub fn into_vec(self) -> Result<Vec<Graph>> {
        self.collect()
    }
}

impl Iterator for GraphStream {
    type Item = Result<Graph>;

    fn next(&mut self) -> Option<Result<Graph>> {
        match &mut self.source {
            Source::Memory(it) => it.next().map(Ok),
            Source::File { path, lines, line } => loop {
                *line += 1;
                let text = match lines.next()? {
                    Ok(t) => t,
                    Err(e) => return Some(Err(Error::io(path.clone(), e))),
                };
                if text.trim().is_empty() {
                    continue;
                }
                let err = |reason: String| Error::GraphFile {
                    path: path.clone(),
                    line: *line,
                    reason,
                };
                return Some(match Graph::from_graph6(text.trim()) {
                    Err(e) => Err(err(e.to_string())),
                    Ok(g) if g.order() != self.order => Err(err(format!(
                        "expected order {}, found {}",
                        self.order,
                        g.order()
                    ))),
                    Ok(g) => Ok(g),
                });
            },
        }
    }
}

/// One representative of every graph of order `n ≤ 8`, each in canonical form.
pub fn all_graphs(n: usize) -> Result<GraphStream> {
    if n > INTERNAL_LIMIT {
        return Err(Error::invalid(format!(
            "order {n} is above the internal generation limit {INTERNAL_LIMIT}; \
             supply a graph6 file (see `iug enumerate --extend`)"
        )));
    }
    GraphStream::from_graphs(n, generate(n))
}

fn generate(n: usize) -> Vec<Graph> {
    let mut level = vec![Graph::empty(0)];
    for _ in 0..n {
        level = Augment::new(level.into_iter()).collect();
    }
    level
}

/// Streams graph6 lines from `path`, checking that each has `expected_order`
/// vertices. Blank lines are skipped.
pub fn graphs_from_file(path: impl AsRef<Path>, expected_order: usize) -> Result<GraphStream> {
    let path = path.as_ref().to_path_buf();
    let file = File::open(&path).map_err(|e| Error::io(path.clone(), e))?;
    Ok(GraphStream {
        order: expected_order,
        source: Source::File {
            path,
            lines: BufReader::new(file).lines(),
            line: 0,
        },
    })
}

/// Writes one graph6 line per graph and returns how many were written.
pub fn write_graph6_file<'a>(
    path: impl AsRef<Path>,
    graphs: impl IntoIterator<Item = &'a Graph>,
) -> Result<usize> {
    let path = path.as_ref();
    let file = File::create(path).map_err(|e| Error::io(path, e))?;
    let mut w = BufWriter::new(file);
    let mut count = 0;
    for g in graphs {
        writeln!(w, "{}", g.to_graph6()).map_err(|e| Error::io(path, e))?;
        count += 1;
    }
    w.flush().map_err(|e| Error::io(path, e))?;
    Ok(count)
}

/// Children of order `n + 1` for a sequence of order-`n` parents: together
/// one canonical representative per class, provided the parents are one per
/// class. Parents need not be canonical themselves.
pub struct Augment<I> {
    parents: I,
    pending: std::vec::IntoIter<Graph>,
}

impl<I: Iterator<Item = Graph>> Augment<I> {
    pub fn new(parents: I) -> Self {
        Augment {
            parents,
            pending: Vec::new().into_iter(),
        }
    }
}

impl<I: Iterator<Item = Graph>> Iterator for Augment<I> {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        loop {
            if let Some(g) = self.pending.next() {
                return Some(g);
            }
            let parent = self.parents.next()?;
            self.pending = children(&parent).into_iter();
        }
    }
}

/// Accepted children of one parent, in ascending neighbourhood-mask order.
pub fn children(parent: &Graph) -> Vec<Graph> {
    let parent = canonical_form(parent).expect("parent order within canonical limit");
    let n = parent.order();
    let degrees: Vec<usize> = (0..n).map(|v| parent.degree(v)).collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mask in 0..1u64 << n {
        let d = mask.count_ones() as usize;
        // the new vertex must have maximum degree in the child
        if (0..n).any(|u| degrees[u] + (mask >> u & 1) as usize > d) {
            continue;
        }
        let child = parent.with_new_vertex(mask);
        let lab = canonical_labelling(&child).expect("child order within canonical limit");
        let w = *lab
            .iter()
            .rev()
            .find(|&&x| child.degree(x) == d)
            .expect("new vertex has maximum degree");
        let accept =
            w == n || canonical_form(&child.without_vertex(w)).expect("within limit") == parent;
        if !accept {
            continue;
        }
        let canon = child.relabelled(&lab);
        if seen.insert(canon.packed_upper()) {
            out.push(canon);
        }
    }
    out
}

/// All free trees on `k` vertices, canonical, sorted by graph6 string.
pub fn all_trees(k: usize) -> Result<Vec<Graph>> {
    if !(1..=TREE_LIMIT).contains(&k) {
        return Err(Error::invalid(format!(
            "tree order {k} outside 1..={TREE_LIMIT}"
        )));
    }
    let mut level = vec![Graph::empty(1)];
    for _ in 1..k {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for t in &level {
            for u in 0..t.order() {
                let g = canonical_form(&t.with_new_vertex(1u64 << u))?;
                if seen.insert(g.packed_upper()) {
                    next.push(g);
                }
            }
        }
        level = next;
    }
    level.sort_by_cached_key(Graph::to_graph6);
    Ok(level)
}

/// Canonical adjacency matrices for every graph of order `m ≤ 5`.
pub fn small_canonical_matrices(m: usize) -> Result<Vec<Graph>> {
    if m > TAIL_LIMIT {
        return Err(Error::invalid(format!(
            "tail order {m} above the supported limit {TAIL_LIMIT}"
        )));
    }
    all_graphs(m)?.into_vec()
}
