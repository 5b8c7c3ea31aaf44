//! Solver calls under the four family orderings.
//!
//! cargo run --release --example ordering_experiment [-- TRIALS]

use induced_universal::enumerate::all_graphs;
use induced_universal::search::{ordering_experiment, GraphFamily, StrategyKind};

fn main() -> induced_universal::Result<()> {
    let trials = std::env::args()
        .nth(1)
        .map_or(10, |t| t.parse().expect("TRIALS is an integer"));
    let family = GraphFamily::all_graphs(4)?;
    let candidates = all_graphs(8)?.into_vec()?;
    let table = ordering_experiment(
        &family,
        &candidates,
        &StrategyKind::ALL,
        trials,
        7,
        true,
        None,
    )?;
    for kind in StrategyKind::ALL {
        println!(
            "{kind:>14}: {:>10.1} calls on average",
            table.mean_calls(kind)
        );
    }
    print!(
        "{}",
        table
            .to_csv()
            .lines()
            .take(4)
            .map(|l| l.to_string() + "\n")
            .collect::<String>()
    );
    Ok(())
}
