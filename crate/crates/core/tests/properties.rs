use std::collections::HashSet;

use proptest::prelude::*;

use feyncount::compositions::{enumerate_compositions, Compositions};
use feyncount::counting::{arques_walsh, coefficient, connected_closed_form};
use feyncount::oracle::{canonical_form, SymmetryGroup, WickMatching};

fn matching(m: u32) -> impl Strategy<Value = WickMatching> {
    Just((0..(2 * m + 1) as u8).collect::<Vec<u8>>())
        .prop_shuffle()
        .prop_map(move |p| WickMatching::new(m, p).unwrap())
}

proptest! {
    #[test]
    fn mask_ranges_concatenate(n in 1u32..=14, cuts in prop::collection::vec(0u64..8192, 0..6)) {
        let total = Compositions::mask_count(n).unwrap();
        let mut bounds: Vec<u64> = cuts.into_iter().map(|c| c % (total + 1)).collect();
        bounds.push(0);
        bounds.push(total);
        bounds.sort_unstable();
        let pieces: Vec<_> = bounds
            .windows(2)
            .flat_map(|w| Compositions::with_masks(n, w[0]..w[1]).unwrap())
            .collect();
        let whole: Vec<_> = enumerate_compositions(n).unwrap().collect();
        prop_assert_eq!(pieces, whole);
    }

    #[test]
    fn compositions_are_valid_and_distinct(n in 1u32..=13) {
        let mut seen = HashSet::new();
        for c in enumerate_compositions(n).unwrap() {
            prop_assert!(c.parts().iter().all(|&p| p >= 1));
            prop_assert_eq!(c.parts().iter().sum::<u32>(), n);
            prop_assert!(seen.insert(c.parts().to_vec()));
        }
        prop_assert_eq!(seen.len() as u64, 1u64 << (n - 1));
    }

    #[test]
    fn canonical_form_is_orbit_invariant(
        (w, g) in (1u32..=3).prop_flat_map(|m| (matching(m), any::<prop::sample::Index>()))
    ) {
        let group = SymmetryGroup::new(w.order());
        let mut image = vec![0; w.pairing().len()];
        group.act(g.index(group.order()), w.pairing(), &mut image);
        let moved = WickMatching::new(w.order(), image).unwrap();
        prop_assert_eq!(canonical_form(&w), canonical_form(&moved));
        prop_assert_eq!(w.graph().is_connected(), moved.graph().is_connected());
    }

    #[test]
    fn canonical_form_is_minimal(w in (1u32..=3).prop_flat_map(matching)) {
        let form = canonical_form(&w);
        prop_assert!(form.matching() <= &w);
        prop_assert_eq!(canonical_form(form.matching()), form.clone());
    }
}

#[test]
fn results_do_not_depend_on_thread_count() {
    let serial = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap();
    let wide = rayon::ThreadPoolBuilder::new()
        .num_threads(7)
        .build()
        .unwrap();
    let run = || {
        (
            connected_closed_form(16).unwrap(),
            arques_walsh(17).unwrap(),
            coefficient(1, 15).unwrap(),
            feyncount::oracle::orbit_census(3, true).unwrap(),
        )
    };
    assert_eq!(serial.install(run), wide.install(run));
}
