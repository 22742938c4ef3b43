//! Exact counts of Feynman diagrams in the fermionic many-body perturbation
//! series.
//!
//! * [`counting`]: `(2m+1)!` total and `(2m)!` vacuum diagrams, the connected
//!   counts `4, 80, 3552, 271104, ...` by three independent routes, and the
//!   distinct connected diagrams `2, 10, 74, 706, ...`.
//! * [`compositions`]: ordered compositions, the index sums behind the
//!   closed forms.
//! * [`oracle`]: brute-force Wick contractions with connectivity and orbit
//!   classification, for cross-checking the formulas at small order.
//! * [`verify`]: the identity and oracle suites used by `feyncount verify`.
//!
//! ```
//! use feyncount::counting::{connected_recurrence, distinct_connected};
//!
//! assert_eq!(connected_recurrence(3), 3552u32);
//! assert_eq!(distinct_connected(4).unwrap(), 706u32);
//! ```

pub mod cli;
pub mod compositions;
pub mod count;
pub mod counting;
pub mod oracle;
pub mod report;
pub mod verify;

pub use count::Count;
pub use report::{Check, VerificationReport};

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Count(#[from] counting::CountError),
    #[error(transparent)]
    Oracle(#[from] oracle::OracleError),
    #[error(transparent)]
    Composition(#[from] compositions::CompositionError),
    #[error("{0}")]
    Usage(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}
