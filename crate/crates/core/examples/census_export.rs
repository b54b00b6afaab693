//! Write a census of all graphs in an order range as CSV and JSON.
//!
//! `cargo run --example census_export -- 5 30 /tmp/census`

use std::path::PathBuf;

use quartic_circulant::census;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let lo: i64 = args.next().map(|a| a.parse()).transpose()?.unwrap_or(5);
    let hi: i64 = args.next().map(|a| a.parse()).transpose()?.unwrap_or(30);
    let dir = args
        .next()
        .map(PathBuf::from)
        .unwrap_or_else(std::env::temp_dir);

    let records = census::census(lo, hi)?;
    let csv_path = dir.join(format!("census-{lo}-{hi}.csv"));
    let json_path = dir.join(format!("census-{lo}-{hi}.json"));
    std::fs::write(&csv_path, census::to_csv(&records))?;
    std::fs::write(&json_path, census::to_json(&records))?;

    let singular = records.iter().filter(|r| r.singular).count();
    let nut = records.iter().filter(|r| r.nut).count();
    println!("{} graphs, {singular} singular, {nut} nut", records.len());
    println!("wrote {} and {}", csv_path.display(), json_path.display());
    Ok(())
}
