mod common;

use hbg::girth::verify_cycle;
use hbg::search::{canonical_form, transform};
use hbg::{
    build_graph, expand_indices, girth_oracle, girth_symmetric, search, ChordIndexSpec, SearchTask, Verdict,
};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn spec_strategy(max_b: usize, max_order: usize) -> impl Strategy<Value = ChordIndexSpec> {
    any::<u64>().prop_map(move |seed| common::random_spec(&mut StdRng::seed_from_u64(seed), max_b, max_order))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn symmetric_girth_equals_oracle(spec in spec_strategy(8, 200)) {
        let g = girth_symmetric(&spec).unwrap();
        let graph = build_graph(&spec).unwrap();
        prop_assert_eq!(g.girth, girth_oracle(&graph).unwrap());
        prop_assert_eq!(g.witness.len(), g.girth + 1);
        verify_cycle(&graph, &g.witness).unwrap();
    }

    #[test]
    fn cubic_bipartite_hamiltonian(spec in spec_strategy(8, 200)) {
        let g = build_graph(&spec).unwrap();
        let n = g.order();
        for x in 1..=n {
            let nb = g.neighbors(x);
            prop_assert!(nb[0] < nb[1] && nb[1] < nb[2], "{:?}", nb);
            for y in nb {
                prop_assert!(g.is_adjacent(y, x));
                prop_assert_ne!(x % 2, y % 2);
            }
            prop_assert!(g.is_adjacent(x, x % n + 1));
            prop_assert_eq!(g.chord(g.chord(x)), x);
            prop_assert_ne!(g.chord(x), x);
        }
        prop_assert_eq!(g.edges().len(), 3 * n / 2);
    }

    #[test]
    fn rotation_by_period_is_automorphism(spec in spec_strategy(8, 200)) {
        let g = build_graph(&spec).unwrap();
        let n = g.order();
        let shift = |x: usize| (x - 1 + 2 * spec.sym_factor()) % n + 1;
        for (a, b) in g.edges() {
            prop_assert!(g.is_adjacent(shift(a), shift(b)));
        }
    }

    #[test]
    fn expansion_round_trip(spec in spec_strategy(8, 200)) {
        let full = expand_indices(&spec).unwrap();
        prop_assert_eq!(full.len(), spec.m());
        let again = ChordIndexSpec::from_full(spec.order(), full.clone());
        prop_assert_eq!(build_graph(&again).unwrap(), build_graph(&spec).unwrap());
        prop_assert_eq!(expand_indices(&again).unwrap(), full);
    }

    #[test]
    fn relabelings_preserve_girth(spec in spec_strategy(6, 120), shift in 0usize..12, reflect in any::<bool>()) {
        let shift = shift % (2 * spec.sym_factor());
        let img = transform(spec.chords(), spec.order(), reflect, shift);
        let img = ChordIndexSpec::new(spec.order(), spec.sym_factor(), img);
        prop_assert!(hbg::validate_spec(&img).is_valid());
        prop_assert_eq!(girth_symmetric(&img).unwrap().girth, girth_symmetric(&spec).unwrap().girth);
        prop_assert_eq!(
            canonical_form(img.chords(), spec.order()),
            canonical_form(spec.chords(), spec.order())
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    /// Pruning never discards a solution: a spec of girth `g` is itself a
    /// candidate, so the least witness is at most it.
    #[test]
    fn search_finds_at_most_any_known_solution(spec in spec_strategy(4, 48)) {
        let g = girth_symmetric(&spec).unwrap().girth;
        prop_assume!(g >= 6);
        for canonical in [true, false] {
            let task = SearchTask::new(g, spec.order(), spec.sym_factor()).with_canonical(canonical);
            let o = search(&task).unwrap();
            prop_assert_eq!(o.verdict, Verdict::Exists);
            let w = o.witness.unwrap();
            prop_assert!(w.chords() <= spec.chords());
            prop_assert!(girth_symmetric(&w).unwrap().girth >= g);
        }
    }
}
