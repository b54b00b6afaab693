//! Exact nullity analysis of quartic circulant graphs `Circ(n, {p, q})`.
//!
//! * [`circulant`] validates graphs and builds adjacency matrices.
//! * [`arithmetic`] holds the 2-adic valuation and root-of-unity counts.
//! * [`nullity`] gives the closed-form nullity and the singular/core/nut tests.
//! * [`extremal`] solves the minimum and maximum nullity problems per order.
//! * [`oracle`] is the independent exact elimination used to check all of the above.
//! * [`census`], [`verify`] and [`cli`] drive sweeps and the `circnull` binary.
//!
//! ```
//! use quartic_circulant::{classify, nullity, QuarticCirculant};
//!
//! let g = QuarticCirculant::new(8, 1, 2)?;
//! assert_eq!(nullity(&g).nullity, 1);
//! assert!(classify(&g).nut);
//! # Ok::<(), quartic_circulant::Error>(())
//! ```

pub mod arithmetic;
pub mod census;
pub mod circulant;
pub mod cli;
pub mod error;
pub mod extremal;
pub mod nullity;
pub mod oracle;
pub mod verify;

pub use arithmetic::{v2, Valuation};
pub use census::CensusRecord;
pub use circulant::{
    graphs_of_order, valid_pairs, IntegerMatrix, QuarticCirculant, RootEigenvalue,
};
pub use error::{Error, Result};
pub use extremal::{
    attaining_pairs, max_nullity_report, min_nullity_report, nullspace_basis, ExtremalReport,
    ExtremumMode, GraphClass, NullSpaceDescriptor, NullSpaceKind, TableRow,
};
pub use nullity::{
    classify, is_nut, is_singular, nullity, Classification, NullityBreakdown, NullityCase,
};
pub use oracle::{kernel, KernelResult, RationalVector};
