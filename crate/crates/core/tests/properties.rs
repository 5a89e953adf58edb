mod common;

use std::collections::BTreeMap;

use common::*;
use gainspec_core::switching::{verify_switching, SpanningTreeFrame};
use gainspec_core::*;
use rand::Rng;

fn builtin_reps(group: &std::sync::Arc<FiniteGroup>) -> Vec<Representation> {
    let mut reps = vec![
        Representation::trivial(group.clone()),
        Representation::regular(group.clone()),
    ];
    match group.kind() {
        GroupKind::Cyclic(m) => reps
            .extend((0..m).map(|j| Representation::cyclic_irrep_over(group.clone(), j).unwrap())),
        GroupKind::Symmetric(4) => {
            reps.push(Representation::s4_standard().unwrap());
            reps.push(Representation::s4_standard_alt().unwrap());
        }
        _ => {}
    }
    reps
}

#[test]
fn parsed_adjacency_is_self_adjoint() {
    let mut rng = rng(1);
    for group in [cyclic(5), symmetric(4)] {
        for _ in 0..20 {
            let n = rng.random_range(1..=7);
            let graph = random_graph(&mut rng, n, 0.5);
            let g = random_gains(&mut rng, &group, &graph);
            let parsed = parse_gain_graph(&g.to_text()).unwrap();
            let a = parsed.adjacency_matrix();
            assert_eq!(a.star(&group), a);
            assert_eq!(parsed, g);
        }
    }
}

#[test]
fn fig3_adjacency_matches_the_displayed_matrix() {
    let g = fixture("s4_fig3.gg");
    let grp = g.group().clone();
    let e = "e";
    let rows: [[&str; 9]; 9] = [
        ["0", "(34)", "0", "(12)", "0", "0", "0", "0", "0"],
        ["(34)", "0", "(12)", "0", e, "0", "0", "0", "0"],
        ["0", "(12)", "0", "(34)", e, "0", "0", "0", "0"],
        ["(12)", "0", "(34)", "0", e, "0", "0", "0", "0"],
        ["0", e, e, e, "0", e, "0", "0", "0"],
        ["0", "0", "0", "0", e, "0", e, "0", "(12)(34)"],
        ["0", "0", "0", "0", "0", e, "0", "(12)(34)", "0"],
        ["0", "0", "0", "0", "0", "0", "(12)(34)", "0", e],
        ["0", "0", "0", "0", "0", "(12)(34)", "0", e, "0"],
    ];
    let a = g.adjacency_matrix();
    for (i, row) in rows.iter().enumerate() {
        for (j, entry) in row.iter().enumerate() {
            let expected = if *entry == "0" {
                GroupAlgebraElement::zero(&grp)
            } else {
                GroupAlgebraElement::basis(&grp, grp.parse_element(entry).unwrap())
            };
            assert_eq!(a.get(i, j), &expected, "entry ({}, {})", i + 1, j + 1);
        }
    }
}

#[test]
fn random_switchings_have_verified_witnesses() {
    let mut rng = rng(2);
    for group in [cyclic(6), symmetric(3), symmetric(4)] {
        for _ in 0..30 {
            let n = rng.random_range(2..=7);
            let graph = random_graph(&mut rng, n, 0.5);
            let g = random_gains(&mut rng, &group, &graph);
            let h = g.apply_switching(&random_switching(&mut rng, &group, n));
            let w = switching_equivalent(&g, &h)
                .unwrap()
                .expect("switched graph is equivalent");
            assert!(verify_switching(&g, &h, &w));
            assert_eq!(g.apply_switching(&w), h);
        }
    }
}

/// Multiset of conjugacy classes of closed-walk gains at `v`, walks of
/// length at most `hmax`.
fn rooted_class_multiset(g: &GainGraph, v: usize, hmax: usize) -> BTreeMap<(usize, usize), usize> {
    fn go(
        g: &GainGraph,
        hmax: usize,
        path: &mut Vec<usize>,
        acc: &mut BTreeMap<(usize, usize), usize>,
    ) {
        let h = path.len() - 1;
        if h > 0 && path[0] == path[h] {
            let gain = g.gain_of_walk(&Walk(path.clone())).unwrap();
            *acc.entry((h, g.group().class_of(gain))).or_default() += 1;
        }
        if h == hmax {
            return;
        }
        for &(w, _) in g.out_edges(path[h]) {
            path.push(w);
            go(g, hmax, path, acc);
            path.pop();
        }
    }
    let mut acc = BTreeMap::new();
    go(g, hmax, &mut vec![v], &mut acc);
    acc
}

#[test]
fn switching_preserves_rooted_walk_classes() {
    let mut rng = rng(3);
    let grp = symmetric(4);
    for _ in 0..15 {
        let n = rng.random_range(2..=5);
        let graph = random_connected_graph(&mut rng, n, 0.5);
        let g = random_gains(&mut rng, &grp, &graph);
        let h = g.apply_switching(&random_switching(&mut rng, &grp, n));
        for v in 0..n {
            assert_eq!(
                rooted_class_multiset(&g, v, 5),
                rooted_class_multiset(&h, v, 5)
            );
        }
    }
}

#[test]
fn balanced_fundamental_gains_are_trivial_for_any_tree() {
    let mut rng = rng(4);
    let grp = symmetric(4);
    for _ in 0..20 {
        let n = rng.random_range(2..=7);
        let graph = random_connected_graph(&mut rng, n, 0.5);
        let g = GainGraph::trivial(grp.clone(), graph)
            .apply_switching(&random_switching(&mut rng, &grp, n));
        let relabelled = g.relabel(&random_permutation(&mut rng, n)).unwrap();
        for candidate in [&g, &relabelled] {
            for root in 0..n {
                let frame = SpanningTreeFrame::bfs(candidate.underlying(), root).unwrap();
                assert!(fundamental_gains(candidate, &frame)
                    .iter()
                    .all(|&x| x == grp.identity()));
            }
        }
    }
}

#[test]
fn switching_equivalence_is_an_equivalence() {
    let mut rng = rng(5);
    let grp = symmetric(4);
    for _ in 0..20 {
        let n = rng.random_range(3..=6);
        let graph = random_connected_graph(&mut rng, n, 0.5);
        let a = random_gains(&mut rng, &grp, &graph);
        let b = a.apply_switching(&random_switching(&mut rng, &grp, n));
        let c = b.apply_switching(&random_switching(&mut rng, &grp, n));
        assert!(switching_equivalent(&a, &a).unwrap().is_some());
        let ab = switching_equivalent(&a, &b).unwrap().unwrap();
        let ba = switching_equivalent(&b, &a).unwrap().unwrap();
        let bc = switching_equivalent(&b, &c).unwrap().unwrap();
        let ac = switching_equivalent(&a, &c).unwrap().unwrap();
        assert_eq!(a.apply_switching(&ab.then(&bc, &grp)), c);
        assert_eq!(b.apply_switching(&ba), a);
        assert!(verify_switching(&a, &c, &ac));
        let other = random_gains(&mut rng, &grp, &graph);
        let forward = switching_equivalent(&a, &other).unwrap().is_some();
        let backward = switching_equivalent(&other, &a).unwrap().is_some();
        assert_eq!(forward, backward);
    }
}

#[test]
fn cycle_isomorphism_up_to_inversion() {
    let mut rng = rng(6);
    for group in [cyclic(5), cyclic(6), symmetric(3)] {
        for _ in 0..40 {
            let n = rng.random_range(3..=6);
            let a = random_cycle(&mut rng, &group, n);
            let b = random_cycle(&mut rng, &group, n);
            let (ra, rb) = (cycle_classify(&a).unwrap(), cycle_classify(&b).unwrap());
            let expected = ra.class == rb.class || ra.class == rb.inverse_class;
            let w = switching_isomorphic(&a, &b).unwrap();
            assert_eq!(w.is_some(), expected);
            if let Some(w) = w {
                assert!(w.validate(&a, &b));
            }
        }
    }
}

#[test]
fn profile_traces_match_floating_matrix_powers() {
    let mut rng = rng(7);
    for group in [cyclic(5), symmetric(4)] {
        for _ in 0..6 {
            let n = rng.random_range(2..=5);
            let graph = random_connected_graph(&mut rng, n, 0.5);
            let g = random_gains(&mut rng, &group, &graph);
            let profile = walk_class_profile(&g, 8);
            for rep in builtin_reps(&group) {
                let chi = rep.character().unwrap();
                let m = rep.fourier_transform(&g.adjacency_matrix()).unwrap();
                let traces = matrix_power_traces(&m.entries, 8);
                for (h, t) in traces.iter().enumerate() {
                    let expected = profile.character_sum(h, chi.values());
                    assert!(
                        (t - expected).norm() <= 1e-6,
                        "{} h={h}: {t} vs {expected}",
                        rep.name()
                    );
                }
            }
        }
    }
}

#[test]
fn direct_sum_spectrum_is_the_union() {
    let mut rng = rng(8);
    let grp = symmetric(4);
    let st = Representation::s4_standard().unwrap();
    let sta = Representation::s4_standard_alt().unwrap();
    let sum = st.direct_sum(&sta).unwrap();
    let named = Representation::from_name("s4-standard+trivial", &grp).unwrap();
    for _ in 0..10 {
        let n = rng.random_range(2..=6);
        let graph = random_graph(&mut rng, n, 0.5);
        let g = random_gains(&mut rng, &grp, &graph);
        let union = pi_spectrum(&g, &st)
            .unwrap()
            .union(&pi_spectrum(&g, &sta).unwrap());
        assert!(pi_spectrum(&g, &sum).unwrap().distance(&union).unwrap() <= 1e-8);
        let union = pi_spectrum(&g, &st)
            .unwrap()
            .union(&pi_spectrum(&g, &Representation::trivial(grp.clone())).unwrap());
        assert!(pi_spectrum(&g, &named).unwrap().distance(&union).unwrap() <= 1e-8);
    }
}

#[test]
fn g_cospectrality_is_every_cyclic_irrep() {
    let mut rng = rng(9);
    let mut positives = 0;
    for m in [4usize, 5, 6] {
        let group = cyclic(m);
        let irreps: Vec<Representation> = (0..m)
            .map(|j| Representation::cyclic_irrep_over(group.clone(), j).unwrap())
            .collect();
        for i in 0..30 {
            let n = rng.random_range(3..=5);
            let graph = random_connected_graph(&mut rng, n, 0.5);
            let a = random_gains(&mut rng, &group, &graph);
            let b = match i % 3 {
                0 => random_gains(&mut rng, &group, &graph),
                1 => galois_twist(&a, m - 1)
                    .relabel(&random_permutation(&mut rng, n))
                    .unwrap(),
                _ => galois_twist(&a, if m == 5 { 2 } else { 1 }),
            };
            let g = g_cospectral(&a, &b).unwrap();
            let all = irreps
                .iter()
                .all(|p| pi_cospectral(&a, &b, p, 1e-8).unwrap());
            assert_eq!(g, all, "T{m} pair {i}");
            positives += usize::from(g);
        }
    }
    assert!(positives > 0);
}

#[test]
fn g_cospectral_implies_lambda_cospectral() {
    let mut rng = rng(10);
    let mut both = 0;
    for group in [cyclic(5), symmetric(3)] {
        for i in 0..40 {
            let n = rng.random_range(3..=5);
            let graph = random_connected_graph(&mut rng, n, 0.5);
            let a = random_gains(&mut rng, &group, &graph);
            let b = if i % 2 == 0 {
                a.relabel(&random_permutation(&mut rng, n)).unwrap()
            } else {
                random_gains(&mut rng, &group, &graph)
            };
            let g = g_cospectral(&a, &b).unwrap();
            let l = lambda_cospectral(&a, &b).unwrap();
            assert!(!g || l);
            both += usize::from(g);
        }
    }
    assert!(both > 0);
    // the converse fails on cycles whose walk gains have equal order
    let grp = cyclic(5);
    let a = GainGraph::new(
        grp.clone(),
        4,
        &[(0, 1, 1), (1, 2, 0), (2, 3, 0), (3, 0, 0)],
    )
    .unwrap();
    let b = GainGraph::new(grp, 4, &[(0, 1, 2), (1, 2, 0), (2, 3, 0), (3, 0, 0)]).unwrap();
    assert!(lambda_cospectral(&a, &b).unwrap());
    assert!(!g_cospectral(&a, &b).unwrap());
}

#[test]
fn trivial_rep_sees_the_underlying_graph() {
    let mut rng = rng(11);
    let grp = symmetric(3);
    for _ in 0..20 {
        let n = rng.random_range(2..=6);
        let graph = random_graph(&mut rng, n, 0.5);
        let a = random_gains(&mut rng, &grp, &graph);
        let graph = random_graph(&mut rng, n, 0.5);
        let b = random_gains(&mut rng, &grp, &graph);
        let spec = |g: &GainGraph| {
            Spectrum::new(
                g.underlying()
                    .adjacency_matrix()
                    .symmetric_eigen()
                    .eigenvalues
                    .iter()
                    .copied()
                    .collect(),
            )
        };
        let underlying = spec(&a).distance(&spec(&b)).unwrap() <= 1e-8;
        let trivial = Representation::trivial(grp.clone());
        assert_eq!(pi_cospectral(&a, &b, &trivial, 1e-8).unwrap(), underlying);
        assert!(
            pi_spectrum(&a, &trivial)
                .unwrap()
                .distance(&spec(&a))
                .unwrap()
                <= 1e-9
        );
    }
}

#[test]
fn cycle_spectra_under_the_regular_rep() {
    use std::f64::consts::PI;
    let grp = cyclic(5);
    let regular = Representation::regular(grp.clone());
    for n in 3..=7 {
        let balanced = GainGraph::trivial(grp.clone(), SimpleGraph::cycle(n).unwrap());
        let expected = Spectrum::new(
            (0..n)
                .flat_map(|j| std::iter::repeat_n(2.0 * (2.0 * PI * j as f64 / n as f64).cos(), 5))
                .collect(),
        );
        assert!(
            pi_spectrum(&balanced, &regular)
                .unwrap()
                .distance(&expected)
                .unwrap()
                <= 1e-9
        );
        let grouped = pi_spectrum(&balanced, &regular).unwrap().grouped();
        assert!(grouped.iter().all(|e| e.multiplicity % 5 == 0));

        let mut gains = balanced.edge_gains().to_vec();
        gains[0] = 3;
        let unbalanced =
            GainGraph::with_gains(grp.clone(), SimpleGraph::cycle(n).unwrap(), gains).unwrap();
        let expected = Spectrum::new(
            (0..5 * n)
                .map(|j| 2.0 * (2.0 * PI * j as f64 / (5 * n) as f64).cos())
                .collect(),
        );
        assert!(
            pi_spectrum(&unbalanced, &regular)
                .unwrap()
                .distance(&expected)
                .unwrap()
                <= 1e-9
        );
        let cover = cover_graph(&unbalanced).unwrap().graph;
        assert!(cover.is_cycle() && cover.vertex_count() == 5 * n);
    }
}

#[test]
fn unbalanced_triangle_example() {
    let grp = cyclic(5);
    let g = GainGraph::new(grp.clone(), 3, &[(0, 1, 1), (1, 2, 0), (2, 0, 0)]).unwrap();
    assert!(!is_balanced(&g));
    assert_eq!(g.gain_of_walk(&Walk(vec![0, 1, 2, 0])).unwrap(), 1);
    assert_eq!(g.gain_of_walk(&Walk(vec![0, 2, 1, 0])).unwrap(), 4);
    assert!(is_balanced(&GainGraph::trivial(
        grp,
        SimpleGraph::complete(5)
    )));
    assert!(is_balanced(&fixture("tree.gg")));
}

#[test]
fn switching_class_counts_on_signed_and_cycle_graphs() {
    let mut rng = rng(12);
    let c2 = cyclic(2);
    let s4 = symmetric(4);
    for _ in 0..10 {
        let n = rng.random_range(2..=7);
        let graph = random_connected_graph(&mut rng, n, 0.4);
        let rank = (graph.edge_count() + 1 - n) as u32;
        assert_eq!(
            count_switching_classes(&graph, &c2).unwrap(),
            num_bigint::BigUint::from(2u32).pow(rank)
        );
    }
    for n in 3..=8 {
        let cycle = SimpleGraph::cycle(n).unwrap();
        assert_eq!(
            count_switching_classes(&cycle, &s4).unwrap(),
            num_bigint::BigUint::from(5u32)
        );
    }
}

#[test]
fn every_fixture_parses() {
    let dir = fixture_path("");
    let mut seen = 0;
    for entry in std::fs::read_dir(dir).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().is_some_and(|e| e == "gg") {
            let g = read_gain_graph(&path).unwrap();
            assert_eq!(g.adjacency_matrix().star(g.group()), g.adjacency_matrix());
            seen += 1;
        }
    }
    assert!(seen >= 10);
}

#[test]
fn fixture_expectations_agree_with_walk_enumeration() {
    let mut seen = 0;
    for entry in std::fs::read_dir(fixture_path("")).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().is_none_or(|e| e != "gg") {
            continue;
        }
        let g = read_gain_graph(&path).unwrap();
        let text = std::fs::read_to_string(path.with_extension("expected.json")).unwrap();
        let record: spectral::ProfileRecord = serde_json::from_str(&text).unwrap();
        let stored = ClassProfile::from_record(&record, g.group().clone()).unwrap();
        assert_eq!(
            stored.counts(),
            enumerate_closed_walks(&g, record.hmax).as_slice(),
            "{}",
            path.display()
        );
        seen += 1;
    }
    assert!(seen >= 10);
}
