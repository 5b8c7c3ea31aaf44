//! Checking the bundled universal graphs with the naive checker.
//!
//! cargo run --release --example verify_certificate [-- MATRIX_FILE K]

use std::path::Path;

use induced_universal::search::GraphFamily;
use induced_universal::verify::{parse_matrix_text, verify_universal};

fn main() -> induced_universal::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
    let cases: Vec<(String, usize)> = match args.as_slice() {
        [file, k] => vec![(file.clone(), k.parse().expect("K is an integer"))],
        _ => vec![
            (data.join("universal14_all6.txt").display().to_string(), 6),
            (data.join("universal18_all7.txt").display().to_string(), 7),
        ],
    };
    for (file, k) in cases {
        let text =
            std::fs::read_to_string(&file).map_err(|e| induced_universal::Error::io(&file, e))?;
        let g = parse_matrix_text(&text)?;
        let cert = verify_universal(&g, &GraphFamily::all_graphs(k)?);
        println!("{file}");
        print!(
            "{}",
            cert.to_text()
                .lines()
                .take(6)
                .map(|l| format!("  {l}\n"))
                .collect::<String>()
        );
    }
    Ok(())
}
