//! List the nut graphs up to a given order and confirm each kernel vector
//! is full by exact elimination.

use quartic_circulant::oracle::kernel;
use quartic_circulant::{graphs_of_order, is_nut};

fn main() {
    let max: u64 = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(20);
    for n in 5..=max {
        let nuts: Vec<_> = graphs_of_order(n).filter(is_nut).collect();
        if nuts.is_empty() {
            continue;
        }
        let all_full = nuts.iter().all(|g| {
            let k = kernel(&g.adjacency_matrix());
            k.dimension == 1 && k.basis[0].is_full()
        });
        let pairs: Vec<String> = nuts
            .iter()
            .map(|g| format!("({},{})", g.p(), g.q()))
            .collect();
        println!("n = {n:>3}: {} (kernel full: {all_full})", pairs.join(" "));
    }
}
