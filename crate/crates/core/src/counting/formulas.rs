use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use super::factorial::{binomial, factorials};
use super::{CountError, Method, Order, TermBudget};
use crate::compositions::Compositions;
use crate::count::Count;

const CHUNK: u64 = 1 << 12;

fn signed(v: BigUint) -> BigInt {
    BigInt::from_biguint(Sign::Plus, v)
}

/// Sums `term` over every composition of `n`. Mask ranges are summed in
/// parallel; exact addition makes the split irrelevant to the result.
fn sum_over_compositions<F>(n: u32, term: F) -> Result<BigInt, CountError>
where
    F: Fn(&[u32]) -> BigInt + Sync,
{
    let masks = Compositions::mask_count(n)?;
    let chunks = masks.div_ceil(CHUNK);
    let total = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let start = c * CHUNK;
            let end = (start + CHUNK).min(masks);
            let mut acc = BigInt::zero();
            Compositions::with_masks(n, start..end)
                .expect("mask range within bounds")
                .for_each_parts(|parts| acc += term(parts));
            acc
        })
        .reduce(BigInt::zero, |a, b| a + b);
    Ok(total)
}

/// All `m`-order diagrams, `(2m+1)!`.
pub fn total_diagrams(m: Order) -> Count {
    Count::from(factorials(2 * m + 1)[(2 * m + 1) as usize].clone())
}

/// Vacuum (bubble) diagrams, `(2m)!`.
pub fn bubble_diagrams(m: Order) -> Count {
    Count::from(factorials(2 * m)[(2 * m) as usize].clone())
}

/// `k!! = 2 * 4 * ... * k` for even `k`.
pub fn double_factorial(k: u32) -> Result<Count, CountError> {
    if k % 2 == 1 {
        return Err(CountError::OddDoubleFactorial { k });
    }
    Ok(Count::from(order_double_factorial(k / 2)))
}

/// `(2m)!! = 2^m m!`, the size of the diagram symmetry group at order `m`.
pub fn order_double_factorial(m: Order) -> BigUint {
    factorials(m)[m as usize].clone() << m as usize
}

/// `N_c(0..=m_max)` from the convolution recurrence
/// `N_c(m) = (2m+1)! - sum_{n=1..m} binom(m, n) (2n)! N_c(m-n)`.
pub fn connected_sequence(m_max: Order) -> Vec<BigInt> {
    let t = factorials(2 * m_max + 1);
    let mut seq: Vec<BigInt> = Vec::with_capacity(m_max as usize + 1);
    seq.push(BigInt::one());
    for m in 1..=m_max {
        let mut value = signed(t[(2 * m + 1) as usize].clone());
        for n in 1..=m {
            let weight = binomial(m, n) * &t[(2 * n) as usize];
            value -= signed(weight) * &seq[(m - n) as usize];
        }
        debug_assert!(!value.is_negative());
        seq.push(value);
    }
    seq
}

/// Connected diagrams at order `m` via the recurrence.
pub fn connected_recurrence(m: Order) -> Count {
    Count::from(
        connected_sequence(m)
            .pop()
            .expect("sequence has m + 1 entries"),
    )
}

/// Number of composition terms summed for `C(n, m)`: `2^(m-n-1)` for
/// `n < m`, and the single empty-composition term for `n = m`.
pub fn coefficient_term_count(n: u32, m: Order) -> Result<u64, CountError> {
    if n < 1 || n > m {
        return Err(CountError::CoefficientDomain { n, m });
    }
    Ok(Compositions::mask_count(m - n)?)
}

fn coefficient_bigint(n: u32, m: Order) -> Result<BigInt, CountError> {
    if n < 1 || n > m {
        return Err(CountError::CoefficientDomain { n, m });
    }
    let t = factorials(2 * m);
    let m_fact = &t[m as usize];
    let n_fact = &t[n as usize];
    // Each composition (a_1..a_i) of m - n contributes
    // (-1)^i * prod (2a_j)! * m! / (a_1! ... a_i! n!).
    sum_over_compositions(m - n, |parts| {
        let mut bubbles = BigUint::one();
        let mut denom = n_fact.clone();
        for &a in parts {
            bubbles *= &t[(2 * a) as usize];
            denom *= &t[a as usize];
        }
        let (multinomial, rem) = m_fact.div_rem(&denom);
        debug_assert!(rem.is_zero());
        let term = signed(bubbles * multinomial);
        if parts.len() % 2 == 1 {
            -term
        } else {
            term
        }
    })
}

/// The signed coefficient `C(n, m)` of the closed form, `1 <= n <= m`.
/// `C(m, m) = 1`.
pub fn coefficient(n: u32, m: Order) -> Result<Count, CountError> {
    coefficient_bigint(n, m).map(Count::from)
}

/// One summand `C(n, m) * (N_n - N_d(n))` of the closed form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedFormTerm {
    pub n: u32,
    pub coefficient: Count,
    pub difference: Count,
    pub contribution: Count,
}

/// The closed-form summands for order `m >= 1`, from `n = m` down to `n = 1`.
pub fn closed_form_breakdown(
    m: Order,
    budget: TermBudget,
) -> Result<Vec<ClosedFormTerm>, CountError> {
    if m == 0 {
        return Err(CountError::OrderTooSmall { order: 0, min: 1 });
    }
    budget.check(Method::ClosedForm, m, m - 1)?;
    let t = factorials(2 * m + 1);
    (1..=m)
        .rev()
        .map(|n| {
            let c = coefficient_bigint(n, m)?;
            let diff = signed(&t[(2 * n + 1) as usize] - &t[(2 * n) as usize]);
            let contribution = &c * &diff;
            Ok(ClosedFormTerm {
                n,
                coefficient: c.into(),
                difference: diff.into(),
                contribution: contribution.into(),
            })
        })
        .collect()
}

/// `N_c(m) = sum_{n=1..m} C(n, m) (N_n - N_d(n))` under the default budget.
pub fn connected_closed_form(m: Order) -> Result<Count, CountError> {
    connected_closed_form_with(m, TermBudget::DEFAULT)
}

pub fn connected_closed_form_with(m: Order, budget: TermBudget) -> Result<Count, CountError> {
    if m == 0 {
        return Ok(Count::from(1u32));
    }
    let total: BigInt = closed_form_breakdown(m, budget)?
        .into_iter()
        .map(|t| t.contribution.into_bigint())
        .sum();
    assert!(
        !total.is_negative(),
        "closed form produced a negative count at order {m}"
    );
    Ok(Count::from(total))
}

/// The rooted-map sequence `1, 2, 10, 74, 706, ...` under the default budget.
pub fn arques_walsh(m: Order) -> Result<Count, CountError> {
    arques_walsh_with(m, TermBudget::DEFAULT)
}

/// `2^-(m+1) * sum over compositions (a_1..a_k) of m + 1 of
/// (-1)^(k-1) prod (2a_j)!/a_j!`.
pub fn arques_walsh_with(m: Order, budget: TermBudget) -> Result<Count, CountError> {
    budget.check(Method::ArquesWalsh, m, m)?;
    let t = factorials(2 * m + 2);
    let weights: Vec<BigUint> = (0..=m + 1)
        .map(|a| &t[(2 * a) as usize] / &t[a as usize])
        .collect();
    let sum = sum_over_compositions(m + 1, |parts| {
        let mut prod = BigUint::one();
        for &a in parts {
            prod *= &weights[a as usize];
        }
        let term = signed(prod);
        if parts.len() % 2 == 0 {
            -term
        } else {
            term
        }
    })?;
    let divisor = BigInt::one() << (m + 1) as usize;
    let (q, r) = sum.div_rem(&divisor);
    if !r.is_zero() {
        return Err(CountError::InexactDivision {
            what: "rooted-map sum",
            order: m,
            dividend: sum.into(),
            divisor: divisor.into(),
        });
    }
    assert!(!q.is_negative(), "rooted-map sum negative at order {m}");
    Ok(Count::from(q))
}

/// Distinct connected diagrams, `N_c(m) / (2m)!!`.
pub fn distinct_connected(m: Order) -> Result<Count, CountError> {
    let connected = connected_sequence(m).pop().expect("non-empty");
    let group = signed(order_double_factorial(m));
    let (q, r) = connected.div_rem(&group);
    if !r.is_zero() {
        return Err(CountError::InexactDivision {
            what: "distinct connected diagrams",
            order: m,
            dividend: connected.into(),
            divisor: group.into(),
        });
    }
    Ok(Count::from(q))
}
