//! Minimum and maximum nullity over a range of orders, for all graphs and
//! for connected graphs only.

use quartic_circulant::{extremal::extremal_report, ExtremumMode, GraphClass};

fn main() -> quartic_circulant::Result<()> {
    println!(
        "{:>4}  {:>7} {:>7}  {:>7} {:>7}",
        "n", "min", "min(c)", "max", "max(c)"
    );
    for n in 5..=32 {
        let mut cells = Vec::new();
        for mode in ExtremumMode::ALL {
            for class in GraphClass::ALL {
                cells.push(extremal_report(n, class, mode)?.value);
            }
        }
        println!(
            "{n:>4}  {:>7} {:>7}  {:>7} {:>7}",
            cells[0], cells[1], cells[2], cells[3]
        );
    }
    let r = extremal_report(24, GraphClass::All, ExtremumMode::Max)?;
    println!(
        "\nn = 24 maximum {} at {:?} ({:?} row)",
        r.value, r.attaining, r.table_row
    );
    Ok(())
}
