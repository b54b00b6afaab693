//! Run the self-verification sweeps up to a chosen order.

use quartic_circulant::verify::{verify, VerifyMode};

fn main() -> quartic_circulant::Result<()> {
    let n_max: i64 = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(40);
    let report = verify(n_max, VerifyMode::All)?;
    for c in &report.checks {
        println!("{c}");
    }
    println!("passed: {}", report.passed());
    Ok(())
}
