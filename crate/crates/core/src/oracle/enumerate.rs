use rayon::prelude::*;
use serde::Serialize;

use super::slots::{reach_from_x, SlotModel};
use super::{check_cap, OracleCap, OracleError};
use crate::count::Count;

/// Advances `a` to its lexicographic successor. Returns `false` (leaving
/// `a` sorted ascending) once the last permutation has been passed.
pub(crate) fn next_permutation(a: &mut [u8]) -> bool {
    let n = a.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        a.reverse();
        return false;
    }
    let mut j = n - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// Visits every pairing of shard `first` (annihilation slot 0 contracted
/// with creation slot `first`) in lexicographic order.
pub(crate) fn for_each_in_shard<F: FnMut(&[u8])>(slots: usize, first: u8, mut f: F) {
    let mut pairing: Vec<u8> = std::iter::once(first)
        .chain((0..slots as u8).filter(|&c| c != first))
        .collect();
    loop {
        f(&pairing);
        if !next_permutation(&mut pairing[1..]) {
            break;
        }
    }
}

/// Visits all `(2m+1)!` pairings of the order-`m` propagator in
/// lexicographic order.
pub fn for_each_matching<F: FnMut(&[u8])>(
    m: u32,
    cap: OracleCap,
    mut f: F,
) -> Result<(), OracleError> {
    check_cap(m, cap)?;
    let slots = SlotModel::propagator(m).slot_count();
    for first in 0..slots as u8 {
        for_each_in_shard(slots, first, &mut f);
    }
    Ok(())
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct MatchingCensus {
    pub total: Count,
    pub connected: Count,
}

#[derive(Clone, Copy, Default)]
struct ShardCounts {
    total: u64,
    connected: u64,
}

fn count_shard(m: u32, first: u8) -> ShardCounts {
    let slots = SlotModel::propagator(m).slot_count();
    let all = (1u32 << (m + 2)) - 1;
    let y = 1u32 << 1;
    let mut counts = ShardCounts::default();
    for_each_in_shard(slots, first, |pairing| {
        let reach = reach_from_x(m, pairing);
        // The fermion line leaving X can only end at Y.
        assert!(reach & y != 0, "X and Y disconnected in {pairing:?}");
        counts.total += 1;
        if reach == all {
            counts.connected += 1;
        }
    });
    counts
}

/// Enumerates every full contraction of the order-`m` propagator string
/// and counts those whose diagram is connected.
pub fn enumerate_matchings(m: u32, cap: OracleCap) -> Result<MatchingCensus, OracleError> {
    enumerate_matchings_with(m, cap, true)
}

/// As [`enumerate_matchings`]; `parallel` selects whether the `2m + 1`
/// shards run on the rayon pool or sequentially.
pub fn enumerate_matchings_with(
    m: u32,
    cap: OracleCap,
    parallel: bool,
) -> Result<MatchingCensus, OracleError> {
    check_cap(m, cap)?;
    let shards = SlotModel::propagator(m).slot_count() as u8;
    let merge = |a: ShardCounts, b: ShardCounts| ShardCounts {
        total: a.total + b.total,
        connected: a.connected + b.connected,
    };
    let counts = if parallel {
        (0..shards)
            .into_par_iter()
            .map(|first| count_shard(m, first))
            .reduce(ShardCounts::default, merge)
    } else {
        (0..shards)
            .map(|first| count_shard(m, first))
            .fold(ShardCounts::default(), merge)
    };
    Ok(MatchingCensus {
        total: counts.total.into(),
        connected: counts.connected.into(),
    })
}

/// Counts the full contractions of `H_1 ... H_m` with no external legs.
pub fn enumerate_vacuum_matchings(m: u32, cap: OracleCap) -> Result<Count, OracleError> {
    check_cap(m, cap)?;
    let mut pairing: Vec<u8> = (0..SlotModel::vacuum(m).slot_count() as u8).collect();
    let mut n = 0u64;
    loop {
        n += 1;
        if !next_permutation(&mut pairing) {
            break;
        }
    }
    Ok(n.into())
}
