//! Exact big-integer evaluation of the diagram counting formulas.
//!
//! Three independent routes give the number of connected diagrams `N_c(m)`:
//!
//! * the convolution recurrence (the default, `O(m^2)` big-integer ops),
//! * the closed form `sum_n C(n, m) (N_n - N_d(n))` over signed coefficients,
//! * `(2m)!!` times the rooted-map sum over compositions of `m + 1`.
//!
//! The last two sum `2^(m-1)` and `2^m` composition terms respectively and
//! are guarded by a [`TermBudget`].

pub mod factorial;
mod formulas;
mod identities;
mod table;

use std::fmt;

use thiserror::Error;

use crate::compositions::CompositionError;
use crate::count::Count;

pub use formulas::{
    arques_walsh, arques_walsh_with, bubble_diagrams, closed_form_breakdown, coefficient,
    coefficient_term_count, connected_closed_form, connected_closed_form_with,
    connected_recurrence, connected_sequence, distinct_connected, double_factorial,
    order_double_factorial, total_diagrams, ClosedFormTerm,
};
pub use identities::{
    verify_coefficient_recursion, verify_coefficient_recursion_with, verify_convolution,
    verify_divisibility, verify_rewrite_identities, verify_three_paths,
};
pub use table::{CountRow, CountTable};

/// Perturbation order.
pub type Order = u32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, clap::ValueEnum)]
pub enum Method {
    Recurrence,
    ClosedForm,
    ArquesWalsh,
    All,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Recurrence => "recurrence",
            Method::ClosedForm => "closed-form",
            Method::ArquesWalsh => "arques-walsh",
            Method::All => "all",
        })
    }
}

/// Upper bound on the number of composition terms an exponential-cost
/// route may sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TermBudget(pub u64);

impl TermBudget {
    pub const DEFAULT: TermBudget = TermBudget(1 << 20);

    pub fn allows(self, log2_terms: u32) -> bool {
        log2_terms < 64 && (1u64 << log2_terms) <= self.0
    }

    pub(crate) fn check(
        self,
        method: Method,
        order: Order,
        log2_terms: u32,
    ) -> Result<(), CountError> {
        if self.allows(log2_terms) {
            Ok(())
        } else {
            Err(CountError::OverBudget {
                method,
                order,
                log2_terms,
                budget: self.0,
            })
        }
    }
}

impl Default for TermBudget {
    fn default() -> Self {
        Self::DEFAULT
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CountError {
    #[error("double factorial is only defined here for even arguments, got {k}")]
    OddDoubleFactorial { k: u32 },
    #[error("coefficient C({n}, {m}) needs 1 <= n <= m")]
    CoefficientDomain { n: u32, m: u32 },
    #[error("order must be at least {min}, got {order}")]
    OrderTooSmall { order: Order, min: Order },
    #[error(
        "{method} at order {order} needs 2^{log2_terms} terms, over the term budget of {budget}"
    )]
    OverBudget {
        method: Method,
        order: Order,
        log2_terms: u32,
        budget: u64,
    },
    #[error("{what} at order {order}: {dividend} is not divisible by {divisor}")]
    InexactDivision {
        what: &'static str,
        order: Order,
        dividend: Count,
        divisor: Count,
    },
    #[error("methods disagree at order {order}: {}", render_values(.values))]
    Disagreement {
        order: Order,
        values: Vec<(Method, Count)>,
    },
    #[error(transparent)]
    Composition(#[from] CompositionError),
}

fn render_values(values: &[(Method, Count)]) -> String {
    values
        .iter()
        .map(|(m, c)| format!("{m} = {c}"))
        .collect::<Vec<_>>()
        .join(", ")
}
