//! Exhaustive numeric checks of the identities relating the counting routes.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::Zero;

use super::factorial::{binomial, factorials};
use super::formulas::{
    arques_walsh_with, coefficient, connected_closed_form_with, connected_sequence,
    order_double_factorial,
};
use super::{CountError, Order, TermBudget};
use crate::report::VerificationReport;

fn require_positive(m_max: Order) -> Result<(), CountError> {
    if m_max == 0 {
        Err(CountError::OrderTooSmall { order: 0, min: 1 })
    } else {
        Ok(())
    }
}

fn pos(v: num_bigint::BigUint) -> BigInt {
    BigInt::from_biguint(Sign::Plus, v)
}

/// `C(s, m+1) = -sum_{n=s..m} binom(m+1, m-n+1) N_d(m-n+1) C(s, n)` for all
/// `1 <= s <= m <= m_max`, each side evaluated independently.
pub fn verify_coefficient_recursion(m_max: Order) -> Result<VerificationReport, CountError> {
    verify_coefficient_recursion_with(m_max, TermBudget::DEFAULT)
}

pub fn verify_coefficient_recursion_with(
    m_max: Order,
    budget: TermBudget,
) -> Result<VerificationReport, CountError> {
    require_positive(m_max)?;
    budget.check(super::Method::ClosedForm, m_max + 1, m_max - 1)?;
    let top = m_max + 1;
    // coeffs[n][s] = C(s, n)
    let mut coeffs: Vec<Vec<BigInt>> = vec![Vec::new(); top as usize + 1];
    for n in 1..=top {
        coeffs[n as usize] = std::iter::once(BigInt::zero())
            .chain(
                (1..=n)
                    .map(|s| coefficient(s, n).map(BigInt::from))
                    .collect::<Result<Vec<_>, _>>()?,
            )
            .collect();
    }
    let t = factorials(2 * top);
    let mut report = VerificationReport::new();
    for m in 1..=m_max {
        for s in 1..=m {
            let mut rhs = BigInt::zero();
            for n in s..=m {
                let k = m - n + 1;
                let weight = pos(binomial(m + 1, k) * &t[(2 * k) as usize]);
                rhs -= weight * &coeffs[n as usize][s as usize];
            }
            report.compare(
                "coefficient_recursion",
                format!("s={s} m={m}"),
                &coeffs[(m + 1) as usize][s as usize],
                rhs,
            );
        }
    }
    Ok(report)
}

/// `N_n = (n!/2) N_d(n+1) / (n+1)!` and `N_d(n) = N_d(1) N_d(n) / 2` for
/// `1 <= n <= m_max`.
pub fn verify_rewrite_identities(m_max: Order) -> Result<VerificationReport, CountError> {
    require_positive(m_max)?;
    let t = factorials(2 * m_max + 2);
    let mut report = VerificationReport::new();
    for n in 1..=m_max {
        let total = &t[(2 * n + 1) as usize];
        let numer = &t[n as usize] * &t[(2 * n + 2) as usize];
        let denom = &t[(n + 1) as usize] * 2u32;
        let (q, r) = numer.div_rem(&denom);
        let actual = if r.is_zero() {
            q.to_string()
        } else {
            format!("{numer}/{denom}")
        };
        report.compare("rewrite_total", format!("n={n}"), total, actual);

        let bubble = &t[(2 * n) as usize];
        let (q, r) = (&t[2] * bubble).div_rem(&2u32.into());
        let actual = if r.is_zero() {
            q.to_string()
        } else {
            format!("{}/2", &t[2] * bubble)
        };
        report.compare("rewrite_bubble", format!("n={n}"), bubble, actual);
    }
    Ok(report)
}

/// `(2m+1)! = sum_{n=0..m} binom(m, n) (2n)! N_c(m-n)` for `1 <= m <= m_max`.
pub fn verify_convolution(m_max: Order) -> Result<VerificationReport, CountError> {
    require_positive(m_max)?;
    let nc = connected_sequence(m_max);
    let t = factorials(2 * m_max + 1);
    let mut report = VerificationReport::new();
    for m in 1..=m_max {
        let sum: BigInt = (0..=m)
            .map(|n| pos(binomial(m, n) * &t[(2 * n) as usize]) * &nc[(m - n) as usize])
            .sum();
        report.compare(
            "convolution",
            format!("m={m}"),
            &t[(2 * m + 1) as usize],
            sum,
        );
    }
    Ok(report)
}

/// `(2m)!!` divides `N_c(m)` exactly: the recorded remainder must be 0.
pub fn verify_divisibility(m_max: Order) -> Result<VerificationReport, CountError> {
    require_positive(m_max)?;
    let nc = connected_sequence(m_max);
    let mut report = VerificationReport::new();
    for m in 1..=m_max {
        let group = pos(order_double_factorial(m));
        let r = nc[m as usize].mod_floor(&group);
        report.compare("divisibility", format!("m={m}"), 0, r);
    }
    Ok(report)
}

/// Recurrence against the closed form and against `(2m)!!` times the
/// rooted-map sum, for `1 <= m <= m_max`.
pub fn verify_three_paths(
    m_max: Order,
    budget: TermBudget,
) -> Result<VerificationReport, CountError> {
    require_positive(m_max)?;
    let nc = connected_sequence(m_max);
    let mut report = VerificationReport::new();
    for m in 1..=m_max {
        let closed = connected_closed_form_with(m, budget)?;
        report.compare(
            "closed_form_vs_recurrence",
            format!("m={m}"),
            &nc[m as usize],
            closed,
        );
        let rooted = arques_walsh_with(m, budget)?.into_bigint() * pos(order_double_factorial(m));
        report.compare(
            "rooted_map_vs_recurrence",
            format!("m={m}"),
            &nc[m as usize],
            rooted,
        );
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recursion_smallest_case() {
        let r = verify_coefficient_recursion(1).unwrap();
        assert_eq!(r.len(), 1);
        assert!(r.overall());
        assert_eq!(r.checks()[0].expected, "-4");
    }

    #[test]
    fn recursion_up_to_ten() {
        let r = verify_coefficient_recursion(10).unwrap();
        assert_eq!(r.len(), 55);
        assert!(r.overall(), "{:?}", r.failures().collect::<Vec<_>>());
    }

    #[test]
    fn rewrite_examples() {
        let r = verify_rewrite_identities(3).unwrap();
        assert!(r.overall());
        let firsts: Vec<&str> = r
            .checks()
            .iter()
            .filter(|c| c.name == "rewrite_total")
            .map(|c| c.actual.as_str())
            .collect();
        assert_eq!(firsts, ["6", "120", "5040"]);
        assert_eq!(r.checks()[5].actual, "720");
    }

    #[test]
    fn zero_order_rejected() {
        assert!(verify_convolution(0).is_err());
        assert!(verify_coefficient_recursion(0).is_err());
        assert!(verify_rewrite_identities(0).is_err());
    }

    #[test]
    fn small_suites_pass() {
        assert!(verify_convolution(12).unwrap().overall());
        assert!(verify_divisibility(12).unwrap().overall());
        assert!(verify_three_paths(8, TermBudget::DEFAULT)
            .unwrap()
            .overall());
    }
}
