//! Brute-force Wick-contraction oracle for small orders.
//!
//! Every full contraction of `H_1 ... H_m psi(x) psi^dagger(y)` is a
//! bijection from the `2m + 1` annihilation slots to the `2m + 1` creation
//! slots. Each contraction becomes an edge of a multigraph on the nodes
//! `X`, `Y`, `v1..vm`; a matching is connected when that graph is a single
//! component. Connected matchings are then grouped into orbits of the
//! `(2m)!!`-element symmetry group by canonical form.
//!
//! Enumeration cost grows as `(2m+1)!`: orders up to 4 run by default,
//! order 5 needs [`OracleCap::allow_order_five`], and the orbit census
//! stops at 4.

mod dot;
mod enumerate;
mod slots;
mod symmetry;

use thiserror::Error;

use crate::count::Count;
use crate::counting::factorial::factorial;

pub use dot::export_diagram;
pub use enumerate::{
    enumerate_matchings, enumerate_matchings_with, enumerate_vacuum_matchings, for_each_matching,
    MatchingCensus,
};
pub use slots::{DiagramGraph, Node, SlotModel, WickMatching};
pub use symmetry::{canonical_form, orbit_census, CanonicalDiagram, OrbitCensus, SymmetryGroup};

/// Highest order enumerated without an override.
pub const DEFAULT_CAP: u32 = 4;
/// Highest order enumerated at all.
pub const OVERRIDE_CAP: u32 = 5;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct OracleCap {
    pub allow_order_five: bool,
}

impl OracleCap {
    pub fn max_order(self) -> u32 {
        if self.allow_order_five {
            OVERRIDE_CAP
        } else {
            DEFAULT_CAP
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("the oracle needs order >= 1")]
    OrderZero,
    #[error(
        "refusing order {order}: enumeration would visit {slots}! = {matchings} matchings (limit is order {limit}{hint})"
    )]
    OverCap {
        order: u32,
        slots: u32,
        matchings: Count,
        limit: u32,
        hint: &'static str,
    },
    #[error("invalid matching: {0}")]
    InvalidMatching(String),
}

pub(crate) fn check_cap(m: u32, cap: OracleCap) -> Result<(), OracleError> {
    if m == 0 {
        return Err(OracleError::OrderZero);
    }
    let limit = cap.max_order();
    if m > limit {
        let slots = 2 * m + 1;
        let hint = if limit < OVERRIDE_CAP && m == OVERRIDE_CAP {
            "; order 5 needs the override"
        } else {
            ""
        };
        return Err(OracleError::OverCap {
            order: m,
            slots,
            matchings: factorial(slots).into(),
            limit,
            hint,
        });
    }
    Ok(())
}

/// The orbit census never goes past the default cap.
pub(crate) fn check_census_cap(m: u32) -> Result<(), OracleError> {
    check_cap(m, OracleCap::default()).map_err(|e| match e {
        OracleError::OverCap {
            order,
            slots,
            matchings,
            limit,
            ..
        } => OracleError::OverCap {
            order,
            slots,
            matchings,
            limit,
            hint: "; the orbit census has no override",
        },
        other => other,
    })
}
