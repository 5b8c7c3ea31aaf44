//! Smallest universal graphs for trees by the completion search.
//!
//! cargo run --release --example tree_completion [-- N K]

use std::time::Instant;

use induced_universal::completion::{complete_search, completion_bound};

fn main() -> induced_universal::Result<()> {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("orders are integers"))
        .collect();
    let cases = match args.as_slice() {
        [n, k] => vec![(*n, *k)],
        _ => vec![(1, 1), (2, 2), (3, 3), (5, 4), (7, 5), (9, 6)],
    };
    for (n, k) in cases {
        let t = Instant::now();
        let r = complete_search(n, k, None)?;
        println!(
            "n = {n:>2}, k = {k}: {:>4} graphs, {} matrices (bound {}), {} solver calls, {:.2?}",
            r.graphs.len(),
            r.matrices_tested,
            completion_bound(n, k)?,
            r.stats.subiso_calls,
            t.elapsed()
        );
    }
    Ok(())
}
