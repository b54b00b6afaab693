//! Classify one graph given on the command line.
//!
//! `cargo run --example analyze_graph -- 12 1 4`

use quartic_circulant::{classify, nullity, nullspace_basis, QuarticCirculant};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<i64> = std::env::args()
        .skip(1)
        .map(|a| a.parse())
        .collect::<Result<_, _>>()?;
    let (n, p, q) = match args[..] {
        [n, p, q] => (n, p, q),
        _ => (12, 1, 4),
    };
    let g = QuarticCirculant::new(n, p, q)?;
    let b = nullity(&g);
    let c = classify(&g);
    println!("{g}");
    println!("  eta1 = {}, eta2 = {}, eta3 = {}", b.eta1, b.eta2, b.eta3);
    println!("  case {} gives nullity {}", b.case.as_str(), b.nullity);
    println!(
        "  singular {}, nut {}, connected {}",
        c.singular, c.nut, c.connected
    );
    let d = nullspace_basis(&g);
    println!("  null space: {} with {} vectors", d.kind, d.dimension());
    for v in &d.basis {
        println!("    {v:?}");
    }
    Ok(())
}
