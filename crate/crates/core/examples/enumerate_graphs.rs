//! Counts graph classes by order, then grows order 9 from order 8.
//!
//! cargo run --release --example enumerate_graphs [-- OUT.g6]

use std::time::Instant;

use induced_universal::enumerate::{all_graphs, all_trees, write_graph6_file, Augment};

fn main() -> induced_universal::Result<()> {
    for n in 0..=8 {
        let t = Instant::now();
        let count = all_graphs(n)?.count();
        println!("order {n}: {count:>6} graphs ({:.2?})", t.elapsed());
    }
    for k in 1..=10 {
        println!("order {k}: {:>6} trees", all_trees(k)?.len());
    }

    let t = Instant::now();
    let eight = all_graphs(8)?.into_vec()?;
    let nine: Vec<_> = Augment::new(eight.into_iter()).collect();
    println!("order 9: {} graphs ({:.2?})", nine.len(), t.elapsed());
    if let Some(out) = std::env::args().nth(1) {
        write_graph6_file(&out, &nine)?;
        println!("wrote {out}");
    }
    Ok(())
}
