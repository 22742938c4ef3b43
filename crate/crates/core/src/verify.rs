//! The composite verification suite behind `feyncount verify`.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;

use crate::compositions::{count_compositions, enumerate_compositions, multiset_multiplicity};
use crate::count::Count;
use crate::counting::{
    self, bubble_diagrams, connected_recurrence, distinct_connected, order_double_factorial,
    total_diagrams, CountError, Order, TermBudget,
};
use crate::oracle::{self, OracleCap};
use crate::report::VerificationReport;
use crate::Error;

/// Composition-count checks stop here.
pub const COMPOSITION_COUNT_LIMIT: u32 = 16;
/// Multiset-grouping checks stop here.
pub const MULTISET_LIMIT: u32 = 10;

#[derive(Clone, Copy, Debug)]
pub struct SuiteOptions {
    pub max_order: Order,
    pub budget: TermBudget,
    pub oracle_cap: OracleCap,
}

#[derive(Clone, Debug)]
pub struct SuiteOutcome {
    pub report: VerificationReport,
    /// Ranges that were narrowed, for the error stream.
    pub notes: Vec<String>,
}

/// Largest order whose rooted-map sum (`2^m` terms) fits the budget.
pub fn exponential_limit(budget: TermBudget) -> Order {
    (0..64)
        .take_while(|&m| budget.allows(m))
        .last()
        .unwrap_or(0)
}

/// `2^(n-1)` compositions by enumeration for `1 <= n <= n_max`.
pub fn verify_composition_counts(n_max: u32) -> Result<VerificationReport, Error> {
    let mut report = VerificationReport::new();
    for n in 1..=n_max {
        let seen = enumerate_compositions(n)?.count();
        report.compare(
            "composition_count",
            format!("n={n}"),
            count_compositions(n),
            seen,
        );
    }
    Ok(report)
}

/// Grouping the compositions of `n` by part multiset: each group has the
/// multinomial size, and the sizes add back up to `2^(n-1)`.
pub fn verify_multiset_grouping(n_max: u32) -> Result<VerificationReport, Error> {
    let mut report = VerificationReport::new();
    for n in 1..=n_max {
        let mut groups = HashMap::new();
        for c in enumerate_compositions(n)? {
            *groups.entry(c.multiset()).or_insert(0u64) += 1;
        }
        let mut sum = BigInt::from(0);
        let mut mismatched = 0;
        for (ms, seen) in &groups {
            let mult = multiset_multiplicity(ms);
            if mult != *seen {
                mismatched += 1;
            }
            sum += mult.into_bigint();
        }
        report.compare("multiset_group_sizes", format!("n={n}"), 0, mismatched);
        report.compare("multiset_sum", format!("n={n}"), count_compositions(n), sum);
    }
    Ok(report)
}

fn render_sizes(sizes: &BTreeMap<u64, u64>) -> String {
    sizes
        .iter()
        .map(|(size, freq)| format!("{size}:{freq}"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Oracle cross-checks for one order: totals, vacuum and connected counts,
/// and (up to the default cap) the orbit census.
pub fn verify_oracle_order(m: Order, cap: OracleCap) -> Result<VerificationReport, Error> {
    let mut report = VerificationReport::new();
    let params = format!("m={m}");
    let census = oracle::enumerate_matchings(m, cap)?;
    report.compare("oracle_total", &params, total_diagrams(m), &census.total);
    report.compare(
        "oracle_connected",
        &params,
        connected_recurrence(m),
        &census.connected,
    );
    let vacuum = oracle::enumerate_vacuum_matchings(m, cap)?;
    report.compare("oracle_vacuum", &params, bubble_diagrams(m), vacuum);
    if m <= oracle::DEFAULT_CAP {
        let orbits = oracle::orbit_census(m, false)?;
        let distinct = distinct_connected(m)?;
        report.compare(
            "oracle_orbit_count",
            &params,
            &distinct,
            &orbits.orbit_count,
        );
        let full = BTreeMap::from([(
            Count::from(order_double_factorial(m))
                .to_u64()
                .expect("small order"),
            distinct.to_u64().expect("small order"),
        )]);
        report.compare(
            "oracle_orbit_sizes",
            &params,
            render_sizes(&full),
            render_sizes(&orbits.orbit_sizes),
        );
    }
    Ok(report)
}

pub fn run_suite(opts: SuiteOptions) -> Result<SuiteOutcome, Error> {
    let max = opts.max_order;
    if max == 0 {
        return Err(CountError::OrderTooSmall { order: 0, min: 1 }.into());
    }
    let mut notes = Vec::new();
    let mut report = VerificationReport::new();

    report.append(counting::verify_convolution(max)?);
    report.append(counting::verify_divisibility(max)?);
    report.append(counting::verify_rewrite_identities(max)?);

    let exp_max = max.min(exponential_limit(opts.budget));
    if exp_max < max {
        notes.push(format!(
            "three-path and coefficient-recursion checks limited to order {exp_max} by the term budget of {}",
            opts.budget.0
        ));
    }
    if exp_max >= 1 {
        report.append(counting::verify_three_paths(exp_max, opts.budget)?);
        report.append(counting::verify_coefficient_recursion_with(
            exp_max,
            opts.budget,
        )?);
    }

    report.append(verify_composition_counts(max.min(COMPOSITION_COUNT_LIMIT))?);
    report.append(verify_multiset_grouping(max.min(MULTISET_LIMIT))?);

    let oracle_max = max.min(opts.oracle_cap.max_order());
    if oracle_max < max {
        notes.push(format!("oracle checks limited to order {oracle_max}"));
    }
    for m in 1..=oracle_max {
        report.append(verify_oracle_order(m, opts.oracle_cap)?);
    }
    Ok(SuiteOutcome { report, notes })
}
