//! Tabulate the closed-form nullity for every graph of one order and show
//! which case of the formula each graph falls into.

use quartic_circulant::{graphs_of_order, nullity};

fn main() {
    let n: u64 = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(24);
    println!(
        "{:>4} {:>4} {:>6} {:>6} {:>6}  {:<14} nullity",
        "p", "q", "eta1", "eta2", "eta3", "case"
    );
    for g in graphs_of_order(n) {
        let b = nullity(&g);
        println!(
            "{:>4} {:>4} {:>6} {:>6} {:>6}  {:<14} {}",
            g.p(),
            g.q(),
            b.eta1,
            b.eta2,
            b.eta3,
            b.case.as_str(),
            b.nullity
        );
    }
}
