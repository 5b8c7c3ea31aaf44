//! Plain backtracking over injective maps, used as a second opinion.
//!
//! Pattern vertices are assigned in index order to every unused target
//! vertex, checking adjacency and non-adjacency against the vertices already
//! placed. No label classes, no bounds, no shared code with the main solver.

use crate::graph::Graph;

fn extend(pattern: &Graph, target: &Graph, map: &mut Vec<usize>, used: &mut [bool]) -> bool {
    let v = map.len();
    if v == pattern.order() {
        return true;
    }
    for w in 0..target.order() {
        if used[w] {
            continue;
        }
        let consistent = map
            .iter()
            .enumerate()
            .all(|(u, &x)| pattern.has_edge(u, v) == target.has_edge(x, w));
        if !consistent {
            continue;
        }
        used[w] = true;
        map.push(w);
        if extend(pattern, target, map, used) {
            return true;
        }
        map.pop();
        used[w] = false;
    }
    false
}

/// An induced embedding found by exhaustive backtracking, if any.
pub fn naive_embedding(pattern: &Graph, target: &Graph) -> Option<Vec<usize>> {
    if pattern.order() > target.order() {
        return None;
    }
    let mut map = Vec::with_capacity(pattern.order());
    let mut used = vec![false; target.order()];
    extend(pattern, target, &mut map, &mut used).then_some(map)
}

pub fn naive_induced_iso(pattern: &Graph, target: &Graph) -> bool {
    naive_embedding(pattern, target).is_some()
}

/// Checks that `map` is an injective, adjacency- and non-adjacency-preserving
/// map from `pattern` into `target`.
pub fn is_valid_embedding(pattern: &Graph, target: &Graph, map: &[usize]) -> bool {
    if map.len() != pattern.order() {
        return false;
    }
    let mut seen = vec![false; target.order()];
    for &x in map {
        if x >= target.order() || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    for u in 0..map.len() {
        for v in u + 1..map.len() {
            if pattern.has_edge(u, v) != target.has_edge(map[u], map[v]) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_examples_as_main_solver() {
        assert!(naive_induced_iso(&Graph::path(3), &Graph::cycle(4)));
        assert!(!naive_induced_iso(&Graph::complete(3), &Graph::cycle(4)));
        // the split graph K3 + three pendant vertices cannot host C4
        let split =
            Graph::from_edges(6, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)]).unwrap();
        assert!(!naive_induced_iso(&Graph::cycle(4), &split));
    }

    #[test]
    fn embedding_validation() {
        let c4 = Graph::cycle(4);
        let map = naive_embedding(&Graph::path(3), &c4).unwrap();
        assert!(is_valid_embedding(&Graph::path(3), &c4, &map));
        assert!(!is_valid_embedding(&Graph::path(3), &c4, &[0, 1, 1]));
        assert!(!is_valid_embedding(&Graph::path(3), &c4, &[0, 2, 1]));
        assert!(!is_valid_embedding(&Graph::path(3), &c4, &[0, 1]));
        assert!(!is_valid_embedding(&Graph::path(3), &c4, &[0, 1, 9]));
    }
}
