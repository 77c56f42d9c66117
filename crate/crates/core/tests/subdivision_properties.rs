mod common;

use cyclespan_core::generators;
use cyclespan_core::subdivision::{
    construct_balanced_subdivision_expander, find_balanced_subdivision, find_tk2_skewed, validate_subdivision,
    ConstructParams,
};
use cyclespan_core::Outcome;
use proptest::prelude::*;

#[test]
fn search_matches_naive_enumerator_on_small_corpus() {
    let corpus: Vec<_> = common::spectrum_corpus().into_iter().filter(|(_, g)| g.n() <= 9).collect();
    assert!(corpus.len() >= 40);
    for (name, g) in corpus {
        for ell in 1..=3 {
            let naive = common::naive_tk3(&g, ell);
            let found = find_balanced_subdivision(&g, 3, (ell, ell), u64::MAX).unwrap();
            assert!(!found.is_unknown());
            assert_eq!(found.is_found(), naive, "{name} ell={ell}");
            if let Outcome::Found(s) = found {
                assert!(validate_subdivision(&g, &s).valid, "{name}");
            }
        }
    }
}

#[test]
fn search_reports_minimal_ell() {
    let g = generators::cycle(9);
    let s = find_balanced_subdivision(&g, 3, (1, 5), u64::MAX).unwrap().found().unwrap();
    assert_eq!(s.ell, 3);
}

#[test]
fn tiny_budget_is_unknown() {
    let g = generators::petersen();
    assert!(find_balanced_subdivision(&g, 4, (1, 3), 10).unwrap().is_unknown());
}

#[test]
fn skewed_preconditions_are_rejected() {
    let (g, u, w) = common::skewed_instance(3, 2, 1);
    assert!(find_tk2_skewed(&g, &u[..8], &w, 2).is_err());
    let k39 = generators::complete_bipartite(3, 9);
    let edges: Vec<_> = k39.edges().filter(|&e| e != (0, 3)).collect();
    let thin = cyclespan_core::Graph::from_edges(12, &edges).unwrap();
    let err = find_tk2_skewed(&thin, &(3..12).collect::<Vec<_>>(), &[0, 1, 2], 3).unwrap_err();
    assert!(err.to_string().contains("vertex 3"));
    let mut overlap = u.clone();
    overlap.push(w[0]);
    assert!(find_tk2_skewed(&g, &overlap, &w, 2).is_err());
}

#[test]
fn construction_validates_and_avoids() {
    let g = generators::complete_bipartite(30, 30);
    for ell in [2, 4, 6] {
        let rep = construct_balanced_subdivision_expander(&g, 3, ell, &ConstructParams::default())
            .unwrap()
            .found()
            .unwrap();
        assert!(validate_subdivision(&g, &rep.subdivision).valid);
        assert!(rep.avoidance_rechecked);
        assert_eq!(rep.subdivision.ell, ell);
    }
    let g = generators::hypercube(5);
    if let Outcome::Found(rep) =
        construct_balanced_subdivision_expander(&g, 3, 6, &ConstructParams::default()).unwrap()
    {
        assert!(validate_subdivision(&g, &rep.subdivision).valid);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn skewed_output_validates(w in 2usize..=6, dd in 0usize..5, seed in any::<u64>()) {
        let d = 2 + dd % (w - 1);
        let (g, u, ws) = common::skewed_instance(w, d, seed);
        let s = find_tk2_skewed(&g, &u, &ws, d).unwrap();
        prop_assert!(validate_subdivision(&g, &s).valid);
        prop_assert!(s.branch_vertices.iter().all(|b| ws.contains(b)));
        prop_assert!(s.paths.iter().all(|p| p.interior().iter().all(|x| u.contains(x))));
        prop_assert_eq!(s.k, d);
    }

    #[test]
    fn search_agrees_on_random_graphs(g in common::arb_graph(3, 8, 0.4), ell in 1usize..=3) {
        let found = find_balanced_subdivision(&g, 3, (ell, ell), u64::MAX).unwrap();
        prop_assert_eq!(found.is_found(), common::naive_tk3(&g, ell));
    }
}
