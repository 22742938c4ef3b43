use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use super::enumerate::{for_each_in_shard, next_permutation};
use super::slots::{reach_from_x, DiagramGraph, SlotModel, WickMatching};
use super::{check_census_cap, OracleError};
use crate::count::Count;

/// Vertex relabelings combined with per-vertex swaps of the two points of
/// an interaction line; `2^m m! = (2m)!!` elements acting on slot indices.
/// The external slot `2m` is fixed. Element 0 is the identity.
#[derive(Clone, Debug)]
pub struct SymmetryGroup {
    m: u32,
    elements: Vec<Vec<u8>>,
}

impl SymmetryGroup {
    pub fn new(m: u32) -> Self {
        let slots = SlotModel::propagator(m).slot_count();
        let mut elements = Vec::new();
        let mut relabel: Vec<u8> = (0..m as u8).collect();
        loop {
            for flips in 0..1u32 << m {
                let mut g = vec![0u8; slots];
                for (s, image) in g.iter_mut().enumerate().take(2 * m as usize) {
                    let v = s / 2;
                    let point = (s % 2) as u8 ^ (flips >> v & 1) as u8;
                    *image = 2 * relabel[v] + point;
                }
                g[slots - 1] = (slots - 1) as u8;
                elements.push(g);
            }
            if !next_permutation(&mut relabel) {
                break;
            }
        }
        SymmetryGroup { m, elements }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Vec<u8>] {
        &self.elements
    }

    /// Writes `g . pairing`, i.e. `out[g(a)] = g(pairing[a])`.
    pub fn act(&self, g: usize, pairing: &[u8], out: &mut [u8]) {
        let g = &self.elements[g];
        for (a, &c) in pairing.iter().enumerate() {
            out[g[a] as usize] = g[c as usize];
        }
    }

    /// Lexicographically smallest image of `pairing` over the group.
    fn minimize(&self, pairing: &[u8], scratch: &mut [u8], best: &mut [u8]) {
        best.copy_from_slice(pairing);
        for g in 1..self.elements.len() {
            self.act(g, pairing, scratch);
            if *scratch < *best {
                best.copy_from_slice(scratch);
            }
        }
    }
}

/// Orbit representative of a matching: its lexicographically minimal image
/// under the diagram symmetry group.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalDiagram {
    matching: WickMatching,
}

impl CanonicalDiagram {
    pub fn order(&self) -> u32 {
        self.matching.order()
    }

    pub fn matching(&self) -> &WickMatching {
        &self.matching
    }

    pub fn graph(&self) -> DiagramGraph {
        self.matching.graph()
    }
}

pub fn canonical_form(matching: &WickMatching) -> CanonicalDiagram {
    let group = SymmetryGroup::new(matching.order());
    canonical_form_in(&group, matching)
}

fn canonical_form_in(group: &SymmetryGroup, matching: &WickMatching) -> CanonicalDiagram {
    debug_assert_eq!(group.m, matching.order());
    let n = matching.pairing().len();
    let mut scratch = vec![0; n];
    let mut best = vec![0; n];
    group.minimize(matching.pairing(), &mut scratch, &mut best);
    CanonicalDiagram {
        matching: WickMatching::from_raw(matching.order(), best),
    }
}

/// Connected matchings grouped into orbits of the symmetry group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitCensus {
    pub order: u32,
    pub connected: Count,
    pub orbit_count: Count,
    /// Orbit size to number of orbits of that size.
    pub orbit_sizes: BTreeMap<u64, u64>,
    /// Canonical representatives in ascending lexicographic order.
    pub representatives: Option<Vec<CanonicalDiagram>>,
}

impl OrbitCensus {
    /// Every orbit has the full group size `(2m)!!`.
    pub fn all_orbits_full(&self) -> bool {
        let full = SymmetryGroup::new(self.order).order() as u64;
        self.orbit_sizes.keys().all(|&s| s == full)
    }
}

fn pack(pairing: &[u8]) -> u64 {
    pairing.iter().fold(0, |k, &v| k << 4 | u64::from(v))
}

fn unpack(key: u64, n: usize) -> Vec<u8> {
    (0..n).rev().map(|i| (key >> (4 * i) & 0xf) as u8).collect()
}

/// Orbit census of the connected order-`m` matchings, `1 <= m <= 4`.
pub fn orbit_census(m: u32, with_representatives: bool) -> Result<OrbitCensus, OracleError> {
    check_census_cap(m)?;
    let group = SymmetryGroup::new(m);
    let slots = SlotModel::propagator(m).slot_count();
    let all = (1u32 << (m + 2)) - 1;

    let merged = (0..slots as u8)
        .into_par_iter()
        .map(|first| {
            let mut orbits: HashMap<u64, u64> = HashMap::new();
            let mut scratch = vec![0; slots];
            let mut best = vec![0; slots];
            for_each_in_shard(slots, first, |pairing| {
                if reach_from_x(m, pairing) == all {
                    group.minimize(pairing, &mut scratch, &mut best);
                    *orbits.entry(pack(&best)).or_default() += 1;
                }
            });
            orbits
        })
        .reduce(HashMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_default() += v;
            }
            a
        });

    let mut orbit_sizes = BTreeMap::new();
    let mut connected = 0u64;
    for &size in merged.values() {
        *orbit_sizes.entry(size).or_default() += 1;
        connected += size;
    }
    let representatives = with_representatives.then(|| {
        let mut keys: Vec<u64> = merged.keys().copied().collect();
        keys.sort_unstable();
        keys.into_iter()
            .map(|k| CanonicalDiagram {
                matching: WickMatching::from_raw(m, unpack(k, slots)),
            })
            .collect()
    });
    Ok(OrbitCensus {
        order: m,
        connected: connected.into(),
        orbit_count: (merged.len() as u64).into(),
        orbit_sizes,
        representatives,
    })
}
