//! Exact kernel of an adjacency matrix by fraction-free elimination, with a
//! randomized pivot order as a cross-check.

use quartic_circulant::oracle::{full_vector_in_span, kernel, kernel_with, same_span, PivotOrder};
use quartic_circulant::QuarticCirculant;

fn main() -> quartic_circulant::Result<()> {
    let g = QuarticCirculant::new(24, 3, 9)?;
    let a = g.adjacency_matrix();
    let k = kernel(&a);
    println!("{g}: rank {}, kernel dimension {}", k.rank, k.dimension);
    let basis = k.integer_basis();
    for v in &basis {
        println!("  {v:?}");
    }
    let shuffled = kernel_with(&a, PivotOrder::Shuffled(7));
    println!(
        "shuffled pivots agree: {}",
        same_span(&basis, &shuffled.integer_basis())
    );
    if let Some(full) = full_vector_in_span(&basis, 1, 50) {
        println!("full kernel vector: {full:?}");
    }
    Ok(())
}
