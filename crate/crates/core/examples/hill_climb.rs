//! Hill climbing towards a 14-vertex universal graph for the six-vertex
//! graphs, seeded with a clique and an independent set.
//!
//! cargo run --release --example hill_climb [-- SEED]

use std::time::Duration;

use induced_universal::heuristic::{hill_climb, make_seed_template, ClimbConfig, TemplateKind};
use induced_universal::search::GraphFamily;

fn main() -> induced_universal::Result<()> {
    let seed = std::env::args()
        .nth(1)
        .map_or(1, |s| s.parse().expect("SEED is an integer"));
    let template = make_seed_template(TemplateKind::CliqueIndep(6), 14)?;
    println!(
        "{} frozen edges, {} frozen non-edges, {} free pairs",
        template.frozen_ones.len(),
        template.frozen_zeros.len(),
        template.free_pairs.len()
    );
    let mut config = ClimbConfig::new(template, GraphFamily::all_graphs(6)?, seed);
    config.time_limit = Some(Duration::from_secs(120));
    config.jobs = std::thread::available_parallelism().map_or(1, |n| n.get());
    let out = hill_climb(&config)?;
    match out.graph {
        Some(g) => {
            println!("found {g} after {:.2?}", out.elapsed);
            print!("{}", g.to_matrix_text());
        }
        None => println!("nothing within the time limit"),
    }
    println!(
        "{} restarts, {} flips, {} cache hits, {} solver calls",
        out.restarts, out.flips, out.cache_hits, out.stats.subiso_calls
    );
    Ok(())
}
