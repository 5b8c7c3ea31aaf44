//! Exhaustive search for the smallest universal graphs of small families.
//!
//! cargo run --release --example exact_search [-- K]

use std::time::Instant;

use induced_universal::enumerate::all_graphs;
use induced_universal::search::{minimal_universal_search, GraphFamily};

fn main() -> induced_universal::Result<()> {
    let ks: Vec<usize> = match std::env::args().nth(1) {
        Some(k) => vec![k.parse().expect("K is an integer")],
        None => (0..=4).collect(),
    };
    for k in ks {
        let t = Instant::now();
        let family = GraphFamily::all_graphs(k)?;
        let r = minimal_universal_search(&family, all_graphs, 8, None)?;
        println!(
            "k = {k}: smallest order {}, {} graphs, {} solver calls, {:.2?}",
            r.order,
            r.graphs.len(),
            r.stats.subiso_calls,
            t.elapsed()
        );
        for g in r.graphs.iter().take(5) {
            println!("  {g}");
        }
    }

    let trees = GraphFamily::trees(5)?;
    let r = minimal_universal_search(&trees, all_graphs, 8, None)?;
    println!(
        "trees on 5 vertices: order {}, {} graphs",
        r.order,
        r.graphs.len()
    );
    Ok(())
}
