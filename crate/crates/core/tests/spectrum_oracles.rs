mod common;

use std::collections::BTreeSet;

use cyclespan_core::generators;
use cyclespan_core::spectrum::{
    cycle_spectrum_exact, cycle_spectrum_lower, even_interval_report, harmonic_sum, hits_sequence, property_p_check,
    residue_spectrum, SequenceSpec,
};
use proptest::prelude::*;

#[test]
fn petersen_preregistered() {
    let g = generators::petersen();
    let expected: BTreeSet<usize> = [5, 6, 8, 9].into_iter().collect();
    assert_eq!(common::naive_cycle_lengths(&g), expected);
    let s = cycle_spectrum_exact(&g).unwrap();
    assert_eq!(s.lengths, expected.into_iter().collect::<Vec<_>>());
}

#[test]
fn dp_agrees_with_naive_enumeration() {
    for (name, g) in common::spectrum_corpus() {
        let naive: Vec<usize> = common::naive_cycle_lengths(&g).into_iter().collect();
        let s = cycle_spectrum_exact(&g).unwrap();
        assert_eq!(s.lengths, naive, "{name}");
        assert!(s.revalidate(&g).is_ok(), "{name}");
    }
}

#[test]
fn lower_bound_is_a_witnessed_subset() {
    for (name, g) in common::spectrum_corpus() {
        let exact = cycle_spectrum_exact(&g).unwrap();
        let lower = cycle_spectrum_lower(&g, 200_000, 5);
        assert!(lower.lengths.iter().all(|l| exact.contains(*l)), "{name}");
        assert!(lower.revalidate(&g).is_ok(), "{name}");
    }
}

#[test]
fn complete_bipartite_harmonic_identity() {
    for d in 2..=11 {
        let s = cycle_spectrum_exact(&generators::complete_bipartite(d, d)).unwrap();
        let expected: Vec<usize> = (4..=2 * d).step_by(2).collect();
        assert_eq!(s.lengths, expected);
        let h = harmonic_sum(&s.lengths);
        assert!((h - 0.5 * (common::harmonic_number(d) - 1.0)).abs() < 1e-12);
    }
}

#[test]
fn half_harmonic_overtakes_point_four_five_log_at_64() {
    let holds = |d: usize| {
        let even: Vec<usize> = (4..=2 * d).step_by(2).collect();
        harmonic_sum(&even) >= 0.45 * (d as f64).ln()
    };
    assert!((8..64).all(|d| !holds(d)));
    assert!((64..=512).all(holds));
}

#[test]
fn pow2_hit_is_least_power_in_spectrum() {
    for (name, g) in common::spectrum_corpus() {
        let s = cycle_spectrum_exact(&g).unwrap();
        let direct = s.lengths.iter().copied().filter(|l| l.is_power_of_two() && *l >= 4).min();
        let hit = hits_sequence(&s, &SequenceSpec::parse("pow2").unwrap()).unwrap();
        assert_eq!(hit.hit, direct, "{name}");
        assert_eq!(hit.miss_is_exact, direct.is_none(), "{name}");
    }
}

#[test]
fn residues_reconstruct_spectrum() {
    for (_, g) in common::spectrum_corpus() {
        let s = cycle_spectrum_exact(&g).unwrap();
        for b in 1..=5 {
            let mut all: Vec<usize> = (0..b).flat_map(|a| residue_spectrum(&s, a, b).unwrap()).collect();
            all.sort_unstable();
            assert_eq!(all, s.lengths);
        }
    }
    let s = cycle_spectrum_exact(&generators::cycle(5)).unwrap();
    assert!(residue_spectrum(&s, 0, 0).is_err());
}

#[test]
fn interval_report_flags_small_scale() {
    let s = cycle_spectrum_exact(&generators::complete_bipartite(6, 6)).unwrap();
    let r = even_interval_report(&s);
    assert!(r.holds);
    assert!(r.guarantee_vacuous);
}

#[test]
fn property_p_matches_path_enumeration() {
    for (name, g) in common::named_small() {
        if g.n() > 10 || !common::is_connected(&g) || common::two_colouring(&g).is_none() || g.n() < 2 {
            continue;
        }
        let col = common::two_colouring(&g).unwrap();
        let (lo, hi) = (2, 7);
        let expected = (0..g.n()).all(|u| {
            (u + 1..g.n()).all(|v| {
                let have = common::path_lengths(&g, u, v);
                let par = usize::from(col[u] != col[v]);
                (lo..=hi).filter(|t| t % 2 == par).all(|t| have.contains(&t))
            })
        });
        let r = property_p_check(&g, lo, hi).unwrap();
        assert_eq!(r.holds, expected, "{name}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn dp_agrees_on_random_graphs(g in common::arb_graph(3, 10, 0.4)) {
        let naive: Vec<usize> = common::naive_cycle_lengths(&g).into_iter().collect();
        let s = cycle_spectrum_exact(&g).unwrap();
        prop_assert_eq!(&s.lengths, &naive);
        prop_assert!(s.revalidate(&g).is_ok());
    }

    #[test]
    fn harmonic_sum_monotone(mut a in proptest::collection::btree_set(3usize..200, 0..30), extra in proptest::collection::btree_set(3usize..200, 0..10)) {
        let small: Vec<usize> = a.iter().copied().collect();
        a.extend(extra);
        let big: Vec<usize> = a.into_iter().collect();
        prop_assert!(harmonic_sum(&big) + 1e-15 >= harmonic_sum(&small));
    }
}
