//! One record per graph over a range of orders, with CSV and JSON output.

use std::io::Write;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::circulant::{graphs_of_order, QuarticCirculant};
use crate::error::{Error, Result};
use crate::extremal::{ExtremumMode, GraphClass, TableRow};
use crate::nullity::{classify, nullity, NullityCase};

/// Field order here is the CSV column order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CensusRecord {
    pub n: u64,
    pub p: u64,
    pub q: u64,
    pub nullity: u64,
    pub singular: bool,
    pub core: bool,
    pub nut: bool,
    pub connected: bool,
    pub case: NullityCase,
    /// Attains the minimum nullity over all graphs of order `n`.
    pub extremal_min: bool,
    /// Attains the maximum nullity over all graphs of order `n`.
    pub extremal_max: bool,
}

pub const CSV_HEADER: &str =
    "n,p,q,nullity,singular,core,nut,connected,case,extremal_min,extremal_max";

impl CensusRecord {
    pub fn of(g: &QuarticCirculant) -> Self {
        let class = classify(g);
        let attains =
            |mode| TableRow::select(g.n(), GraphClass::All, mode).characterizes(g, GraphClass::All);
        Self {
            n: g.n(),
            p: g.p(),
            q: g.q(),
            nullity: class.nullity,
            singular: class.singular,
            core: class.core,
            nut: class.nut,
            connected: class.connected,
            case: nullity(g).case,
            extremal_min: attains(ExtremumMode::Min),
            extremal_max: attains(ExtremumMode::Max),
        }
    }
}

fn check_range(n_min: i64, n_max: i64) -> Result<()> {
    if n_min < 5 {
        return Err(Error::OrderTooSmall { n: n_min });
    }
    if n_min > n_max {
        return Err(Error::Domain(format!(
            "empty order range {n_min}..={n_max}"
        )));
    }
    Ok(())
}

/// Records for every valid triple with `n_min <= n <= n_max`, sorted by `(n, p, q)`.
/// Runs on the current rayon pool; output order never depends on it.
pub fn census(n_min: i64, n_max: i64) -> Result<Vec<CensusRecord>> {
    check_range(n_min, n_max)?;
    let graphs: Vec<QuarticCirculant> = (n_min as u64..=n_max as u64)
        .flat_map(graphs_of_order)
        .collect();
    Ok(graphs.par_iter().map(CensusRecord::of).collect())
}

/// `census` on a dedicated pool with `threads` workers.
pub fn census_with_threads(n_min: i64, n_max: i64, threads: usize) -> Result<Vec<CensusRecord>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::Domain(format!("cannot build thread pool: {e}")))?;
    pool.install(|| census(n_min, n_max))
}

pub fn write_csv<W: Write>(records: &[CensusRecord], out: W) -> csv::Result<()> {
    let mut writer = csv::Writer::from_writer(out);
    if records.is_empty() {
        writer.write_record(CSV_HEADER.split(','))?;
    }
    for r in records {
        writer.serialize(r)?;
    }
    writer.flush()?;
    Ok(())
}

pub fn to_csv(records: &[CensusRecord]) -> String {
    let mut buf = Vec::new();
    write_csv(records, &mut buf).expect("writing to memory cannot fail");
    String::from_utf8(buf).expect("csv output is utf-8")
}

pub fn to_json(records: &[CensusRecord]) -> String {
    let mut s = serde_json::to_string_pretty(records).expect("records serialize");
    s.push('\n');
    s
}

pub fn from_json(text: &str) -> serde_json::Result<Vec<CensusRecord>> {
    serde_json::from_str(text)
}

pub fn from_csv(text: &str) -> csv::Result<Vec<CensusRecord>> {
    csv::Reader::from_reader(text.as_bytes())
        .deserialize()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ranges() {
        let rows = census(5, 6).unwrap();
        assert_eq!(rows.len(), 2);
        assert_eq!(
            (rows[0].n, rows[0].p, rows[0].q, rows[0].nullity),
            (5, 1, 2, 0)
        );
        assert_eq!(
            (rows[1].n, rows[1].p, rows[1].q, rows[1].nullity),
            (6, 1, 2, 3)
        );

        let rows = census(8, 8).unwrap();
        let pairs: Vec<_> = rows.iter().map(|r| (r.p, r.q)).collect();
        assert_eq!(pairs, vec![(1, 2), (1, 3), (2, 3)]);
        let max: Vec<_> = rows
            .iter()
            .filter(|r| r.extremal_max)
            .map(|r| (r.p, r.q))
            .collect();
        assert_eq!(max, vec![(1, 3)]);

        let rows = census(7, 7).unwrap();
        assert_eq!(rows.len(), 3);
        assert!(rows
            .iter()
            .all(|r| r.nullity == 0 && r.extremal_min && r.extremal_max));
    }

    #[test]
    fn csv_layout() {
        let csv = to_csv(&census(5, 6).unwrap());
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], CSV_HEADER);
        assert_eq!(lines[1], "5,1,2,0,false,false,false,true,zero,true,true");
        assert_eq!(
            lines[2],
            "6,1,2,3,true,true,false,true,sum_minus_gcd,true,true"
        );
        assert_eq!(to_csv(&[]).trim_end(), CSV_HEADER);
    }

    #[test]
    fn bad_ranges() {
        assert_eq!(census(4, 10), Err(Error::OrderTooSmall { n: 4 }));
        assert!(matches!(census(10, 9), Err(Error::Domain(_))));
    }
}
