//! Process-wide factorial table.
//!
//! The table only grows. Readers take a cheap `Arc` snapshot; a writer that
//! finds the table too short extends it under the write lock, and concurrent
//! extensions to the same length produce identical contents.

use std::sync::{Arc, LazyLock, RwLock};

use num_bigint::BigUint;
use num_traits::One;

static TABLE: LazyLock<RwLock<Arc<Vec<BigUint>>>> =
    LazyLock::new(|| RwLock::new(Arc::new(vec![BigUint::one()])));

/// Snapshot holding at least `0!..=n!`.
pub fn factorials(n: u32) -> Arc<Vec<BigUint>> {
    let want = n as usize + 1;
    {
        let snap = TABLE.read().unwrap_or_else(|e| e.into_inner());
        if snap.len() >= want {
            return Arc::clone(&snap);
        }
    }
    let mut guard = TABLE.write().unwrap_or_else(|e| e.into_inner());
    if guard.len() < want {
        let mut grown: Vec<BigUint> = guard.as_ref().clone();
        grown.reserve(want - grown.len());
        while grown.len() < want {
            let k = grown.len();
            let next = &grown[k - 1] * BigUint::from(k);
            grown.push(next);
        }
        *guard = Arc::new(grown);
    }
    Arc::clone(&guard)
}

pub fn factorial(n: u32) -> BigUint {
    factorials(n)[n as usize].clone()
}

/// `n choose k`, zero when `k > n`.
pub fn binomial(n: u32, k: u32) -> BigUint {
    if k > n {
        return BigUint::ZERO;
    }
    let t = factorials(n);
    &t[n as usize] / (&t[k as usize] * &t[(n - k) as usize])
}
