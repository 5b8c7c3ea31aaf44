//! Finding an induced copy of one graph inside another.
//!
//! cargo run --example embedding_witness [-- PATTERN_G6 TARGET_G6]

use induced_universal::iso::{find_embedding, is_valid_embedding};
use induced_universal::Graph;

fn main() -> induced_universal::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (pattern, target) = match args.as_slice() {
        [p, t] => (Graph::from_graph6(p)?, Graph::from_graph6(t)?),
        _ => (Graph::path(4), Graph::cycle(6)),
    };
    println!("pattern {pattern}, target {target}");
    match find_embedding(&pattern, &target) {
        Some(map) => {
            assert!(is_valid_embedding(&pattern, &target, &map));
            for (v, w) in map.iter().enumerate() {
                println!("  {v} -> {w}");
            }
        }
        None => println!("  no induced copy"),
    }
    // C4 is a subgraph of K4 but not an induced one
    let induced = find_embedding(&Graph::cycle(4), &Graph::complete(4));
    println!("C4 induced in K4: {}", induced.is_some());
    Ok(())
}
