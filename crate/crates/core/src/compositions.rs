//! Ordered compositions of a positive integer.
//!
//! A composition of `n` with `k` parts corresponds to a choice of `k - 1` cut
//! positions among the `n - 1` gaps between `n` units. Bit `j` of an
//! `(n - 1)`-bit mask marks a cut after unit `j + 1`, and compositions are
//! produced in ascending mask order:
//!
//! ```text
//! n = 3:  mask 00 -> [3]   mask 01 -> [1, 2]   mask 10 -> [2, 1]   mask 11 -> [1, 1, 1]
//! ```
//!
//! `n = 0` has exactly one composition, the empty one.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Range;

use num_bigint::BigUint;
use num_traits::One;
use thiserror::Error;

use crate::count::Count;
use crate::counting::factorial;

/// Largest `n` whose compositions can be enumerated (masks are `u64`).
pub const MAX_ENUMERABLE: u32 = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CompositionError {
    #[error("composition parts must be positive")]
    ZeroPart,
    #[error("part {part} has zero multiplicity")]
    ZeroMultiplicity { part: u32 },
    #[error("a part multiset needs at least one part")]
    EmptyMultiset,
    #[error("cannot enumerate compositions of {n}: at most {MAX_ENUMERABLE} is supported")]
    TooLarge { n: u32 },
    #[error("mask range {start}..{end} exceeds the {count} compositions of {n}")]
    MaskRange {
        n: u32,
        start: u64,
        end: u64,
        count: u64,
    },
}

/// An ordered sequence of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition {
    parts: Vec<u32>,
    total: u32,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self, CompositionError> {
        if parts.contains(&0) {
            return Err(CompositionError::ZeroPart);
        }
        let total = parts.iter().sum();
        Ok(Composition { parts, total })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn total(&self) -> u32 {
        self.total
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn multiset(&self) -> PartMultiset {
        let mut entries = BTreeMap::new();
        for &p in &self.parts {
            *entries.entry(p).or_insert(0) += 1;
        }
        PartMultiset { entries }
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Number of compositions of `n` (the number of `(n - 1)`-bit masks).
fn mask_count(n: u32) -> Result<u64, CompositionError> {
    match n {
        0 => Ok(1),
        n if n <= MAX_ENUMERABLE => Ok(1u64 << (n - 1)),
        n => Err(CompositionError::TooLarge { n }),
    }
}

/// Writes the parts encoded by `mask` into `buf`.
fn decode_mask(n: u32, mask: u64, buf: &mut Vec<u32>) {
    buf.clear();
    if n == 0 {
        return;
    }
    let mut run = 1;
    for gap in 0..n - 1 {
        if mask >> gap & 1 == 1 {
            buf.push(run);
            run = 1;
        } else {
            run += 1;
        }
    }
    buf.push(run);
}

/// Lazy stream of the compositions of `n` in ascending mask order.
///
/// A single stream is single-consumer; disjoint mask ranges (see
/// [`Compositions::with_masks`]) can be consumed independently.
#[derive(Clone, Debug)]
pub struct Compositions {
    n: u32,
    next: u64,
    end: u64,
}

impl Compositions {
    pub fn new(n: u32) -> Result<Self, CompositionError> {
        let end = mask_count(n)?;
        Ok(Compositions { n, next: 0, end })
    }

    /// Compositions whose mask lies in `masks`, in ascending order.
    pub fn with_masks(n: u32, masks: Range<u64>) -> Result<Self, CompositionError> {
        let count = mask_count(n)?;
        if masks.start > masks.end || masks.end > count {
            return Err(CompositionError::MaskRange {
                n,
                start: masks.start,
                end: masks.end,
                count,
            });
        }
        Ok(Compositions {
            n,
            next: masks.start,
            end: masks.end,
        })
    }

    /// Total number of masks for `n`, i.e. `2^(n-1)` (or 1 for `n = 0`).
    pub fn mask_count(n: u32) -> Result<u64, CompositionError> {
        mask_count(n)
    }

    /// Visits the remaining compositions as borrowed part slices without
    /// allocating one vector per composition.
    pub fn for_each_parts<F: FnMut(&[u32])>(self, mut f: F) {
        let mut buf = Vec::with_capacity(self.n as usize);
        for mask in self.next..self.end {
            decode_mask(self.n, mask, &mut buf);
            f(&buf);
        }
    }
}

impl Iterator for Compositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        if self.next >= self.end {
            return None;
        }
        let mut parts = Vec::new();
        decode_mask(self.n, self.next, &mut parts);
        self.next += 1;
        Some(Composition {
            parts,
            total: self.n,
        })
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = self.end - self.next;
        match usize::try_from(left) {
            Ok(l) => (l, Some(l)),
            Err(_) => (usize::MAX, None),
        }
    }
}

/// All compositions of `n`, lazily, in ascending mask order.
pub fn enumerate_compositions(n: u32) -> Result<Compositions, CompositionError> {
    Compositions::new(n)
}

/// `2^(n-1)` for `n >= 1`; 1 for `n = 0`.
pub fn count_compositions(n: u32) -> Count {
    if n == 0 {
        return Count::from(1u32);
    }
    Count::from(BigUint::one() << (n - 1) as usize)
}

/// Part values with their multiplicities, e.g. `{3: 1, 1: 2}` for `3+1+1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartMultiset {
    entries: BTreeMap<u32, u32>,
}

impl PartMultiset {
    /// Builds a multiset from `(part, multiplicity)` pairs. Repeated parts
    /// accumulate their multiplicities.
    pub fn new<I>(entries: I) -> Result<Self, CompositionError>
    where
        I: IntoIterator<Item = (u32, u32)>,
    {
        let mut map = BTreeMap::new();
        for (part, mult) in entries {
            if part == 0 {
                return Err(CompositionError::ZeroPart);
            }
            if mult == 0 {
                return Err(CompositionError::ZeroMultiplicity { part });
            }
            *map.entry(part).or_insert(0) += mult;
        }
        if map.is_empty() {
            return Err(CompositionError::EmptyMultiset);
        }
        Ok(PartMultiset { entries: map })
    }

    pub fn entries(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.entries.iter().map(|(&p, &m)| (p, m))
    }

    /// The represented total `sum(part * multiplicity)`.
    pub fn total(&self) -> u64 {
        self.entries
            .iter()
            .map(|(&p, &m)| u64::from(p) * u64::from(m))
            .sum()
    }

    /// Number of parts counted with multiplicity.
    pub fn part_count(&self) -> u32 {
        self.entries.values().sum()
    }
}

/// How many distinct orderings a multiset of parts has:
/// `(M_1 + ... + M_l)! / (M_1! ... M_l!)`.
pub fn multiset_multiplicity(ms: &PartMultiset) -> Count {
    let n = ms.part_count();
    let table = factorial::factorials(n);
    let mut denom = BigUint::one();
    for (_, m) in ms.entries() {
        denom *= &table[m as usize];
    }
    Count::from(&table[n as usize] / denom)
}
