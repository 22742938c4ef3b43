use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use super::formulas::{
    arques_walsh_with, bubble_diagrams, connected_closed_form_with, connected_sequence,
    order_double_factorial, total_diagrams,
};
use super::{CountError, Method, Order, TermBudget};
use crate::count::Count;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountRow {
    pub m: Order,
    pub total: Count,
    pub bubble: Count,
    pub connected: Count,
    pub distinct: Count,
}

/// Rows `m = 0..=max_order`, with `distinct * (2m)!! == connected` in each.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountTable {
    pub rows: Vec<CountRow>,
}

impl CountTable {
    pub fn compute(
        max_order: Order,
        method: Method,
        budget: TermBudget,
    ) -> Result<Self, CountError> {
        let recurrence = connected_sequence(max_order);
        let mut rows = Vec::with_capacity(recurrence.len());
        for (m, rec) in (0..=max_order).zip(recurrence) {
            let group = BigInt::from_biguint(Sign::Plus, order_double_factorial(m));
            let connected = match method {
                Method::Recurrence => rec,
                Method::ClosedForm => connected_closed_form_with(m, budget)?.into_bigint(),
                Method::ArquesWalsh => arques_walsh_with(m, budget)?.into_bigint() * &group,
                Method::All => {
                    let closed = connected_closed_form_with(m, budget)?;
                    let rooted = Count::from(arques_walsh_with(m, budget)?.into_bigint() * &group);
                    if closed.as_bigint() != &rec || rooted.as_bigint() != &rec {
                        return Err(CountError::Disagreement {
                            order: m,
                            values: vec![
                                (Method::Recurrence, Count::from(rec)),
                                (Method::ClosedForm, closed),
                                (Method::ArquesWalsh, rooted),
                            ],
                        });
                    }
                    rec
                }
            };
            let (distinct, r) = connected.div_rem(&group);
            if !r.is_zero() {
                return Err(CountError::InexactDivision {
                    what: "distinct connected diagrams",
                    order: m,
                    dividend: connected.into(),
                    divisor: group.into(),
                });
            }
            rows.push(CountRow {
                m,
                total: total_diagrams(m),
                bubble: bubble_diagrams(m),
                connected: connected.into(),
                distinct: distinct.into(),
            });
        }
        Ok(CountTable { rows })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn methods_produce_identical_tables() {
        let rec = CountTable::compute(9, Method::Recurrence, TermBudget::DEFAULT).unwrap();
        for method in [Method::ClosedForm, Method::ArquesWalsh, Method::All] {
            assert_eq!(
                CountTable::compute(9, method, TermBudget::DEFAULT).unwrap(),
                rec
            );
        }
        let distinct: Vec<String> = rec
            .rows
            .iter()
            .take(5)
            .map(|r| r.distinct.to_string())
            .collect();
        assert_eq!(distinct, ["1", "2", "10", "74", "706"]);
    }

    #[test]
    fn budget_error_names_the_budget() {
        let err = CountTable::compute(12, Method::ArquesWalsh, TermBudget(1000)).unwrap_err();
        assert!(matches!(err, CountError::OverBudget { budget: 1000, .. }));
        // The recurrence ignores the budget.
        assert!(CountTable::compute(40, Method::Recurrence, TermBudget(1)).is_ok());
    }
}
