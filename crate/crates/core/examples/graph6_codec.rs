//! Encoding and decoding graph6 strings.
//!
//! cargo run --example graph6_codec [-- G6 ...]

use induced_universal::iso::{automorphism_count, canonical_form};
use induced_universal::Graph;

fn main() -> induced_universal::Result<()> {
    let mut inputs: Vec<String> = std::env::args().skip(1).collect();
    if inputs.is_empty() {
        let c5 = Graph::cycle(5);
        println!("C5 encodes as {}", c5.to_graph6());
        inputs = vec![c5.to_graph6(), "DCs".into(), "D?{".into(), "E~~w".into()];
    }
    for s in &inputs {
        let g = Graph::from_graph6(s)?;
        let canon = canonical_form(&g)?;
        println!(
            "{s}: {} vertices, {} edges, canonical {}, {} automorphisms",
            g.order(),
            g.edge_count(),
            canon.to_graph6(),
            automorphism_count(&g)?
        );
        print!("{}", g.to_matrix_text());
    }
    // decoding reports where the input went wrong
    if let Err(e) = Graph::from_graph6("D~") {
        println!("bad input: {e}");
    }
    Ok(())
}
