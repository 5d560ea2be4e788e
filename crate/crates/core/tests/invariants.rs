//! Cross-module invariants: enumeration closure, canonical-code properties
//! under relabeling, oracle agreement on small instances, and fuzzed
//! rejection of corrupted rotation tables.

use std::sync::OnceLock;

use proptest::prelude::*;

use trisphere::canonical::{canonical_code, degree_filter, is_isomorphic};
use trisphere::generator::{
    enumerate, enumerate_polygons, enumerate_with, insert_in_polygon, EnumerationConfig,
};
use trisphere::oracle::{
    brute_force_coloring_count, brute_force_isomorphic, brute_force_polygon_scan,
};
use trisphere::plane_map::PlaneTriangulation;
use trisphere::tricolor::{class_summary, count_colorings, enumerate_colorings, Color};

fn reps_up_to_7() -> &'static Vec<PlaneTriangulation> {
    static REPS: OnceLock<Vec<PlaneTriangulation>> = OnceLock::new();
    REPS.get_or_init(|| {
        let result = enumerate(7).unwrap();
        result
            .levels()
            .flat_map(|(_, reps)| reps.iter().map(|r| r.triangulation.clone()))
            .collect()
    })
}

#[test]
fn eight_vertex_closure_and_the_equal_degree_pair() {
    let result = enumerate(8).unwrap();
    assert_eq!(
        result.counts().into_iter().collect::<Vec<_>>(),
        vec![(4, 1), (5, 1), (6, 2), (7, 5), (8, 14)]
    );
    let eights = result.representatives(8);
    let pair: Vec<_> = eights
        .iter()
        .filter(|r| r.triangulation.degree_multiset() == vec![3, 3, 4, 4, 5, 5, 6, 6])
        .collect();
    assert_eq!(pair.len(), 2, "exactly two share the degree multiset");
    let (a, b) = (&pair[0].triangulation, &pair[1].triangulation);
    assert!(degree_filter(a, b));
    assert!(!is_isomorphic(a, b));
    assert_eq!(brute_force_isomorphic(a, b), Ok(false));
}

#[test]
fn face_and_edge_insertions_alone_reach_all_fourteen() {
    // procedure (3) is not needed below 12 vertices in the
    // expand-every-site strategy; the recorded count at n=8 is also 14
    let mut config = EnumerationConfig::new(8);
    config.use_polygon_insertion = false;
    let partial = enumerate_with(&config).unwrap();
    assert_eq!(partial.counts()[&8], 14);

    let full = enumerate(8).unwrap();
    let codes = |r: &trisphere::EnumerationResult| {
        r.representatives(8)
            .iter()
            .map(|rep| rep.code.clone())
            .collect::<Vec<_>>()
    };
    assert_eq!(codes(&partial), codes(&full));
}

#[test]
fn expansion_order_does_not_change_the_code_sets() {
    let baseline = enumerate(7).unwrap();
    for seed in [7u64, 191] {
        let mut config = EnumerationConfig::new(7);
        config.shuffle_seed = Some(seed);
        let shuffled = enumerate_with(&config).unwrap();
        for (n, reps) in baseline.levels() {
            let a: Vec<_> = reps.iter().map(|r| r.code.hex()).collect();
            let b: Vec<_> = shuffled
                .representatives(n)
                .iter()
                .map(|r| r.code.hex())
                .collect();
            assert_eq!(a, b, "code set differs at n={n} for seed {seed}");
        }
    }
}

#[test]
fn canonical_agrees_with_brute_force_up_to_7() {
    let reps = reps_up_to_7();
    for (i, a) in reps.iter().enumerate() {
        for b in &reps[i..] {
            if a.n() != b.n() {
                continue;
            }
            assert_eq!(
                is_isomorphic(a, b),
                brute_force_isomorphic(a, b).unwrap(),
                "disagreement on a pair with n={}",
                a.n()
            );
        }
    }
}

#[test]
fn total_coloring_counts_are_six_times_the_class_counts() {
    for t in reps_up_to_7() {
        let total = brute_force_coloring_count(t).unwrap();
        assert_eq!(total, 6 * count_colorings(t) as u64);
    }
}

#[test]
fn polygon_scan_agrees_on_all_small_representatives() {
    for t in reps_up_to_7() {
        for max_len in 4..=t.n().min(6) {
            assert_eq!(
                enumerate_polygons(t, max_len),
                brute_force_polygon_scan(t, max_len).unwrap(),
                "polygon sets differ on n={} max_len={max_len}",
                t.n()
            );
        }
    }
}

#[test]
fn every_emitted_coloring_is_valid_and_summarized() {
    for t in reps_up_to_7() {
        for coloring in enumerate_colorings(t) {
            assert_eq!(trisphere::tricolor::validate(t, &coloring), Ok(true));
            let summary = class_summary(t, &coloring).unwrap();
            assert_eq!(summary.total_edges(), t.edges().len());
        }
    }
}

// ---------------------------------------------------------------------
// proptest fuzzing
// ---------------------------------------------------------------------

#[derive(Clone, Debug)]
enum Corruption {
    SwapEntries {
        vertex: usize,
        i: usize,
        j: usize,
    },
    Retarget {
        vertex: usize,
        i: usize,
        to: usize,
    },
    DeleteEntry {
        vertex: usize,
        i: usize,
    },
    DuplicateEntry {
        vertex: usize,
        i: usize,
    },
}

fn corruption_strategy() -> impl Strategy<Value = (usize, Corruption)> {
    let rep = 0..reps_up_to_7().len();
    let kind = prop_oneof![
        (any::<usize>(), any::<usize>(), any::<usize>())
            .prop_map(|(v, i, j)| Corruption::SwapEntries { vertex: v, i, j }),
        (any::<usize>(), any::<usize>(), any::<usize>())
            .prop_map(|(v, i, to)| Corruption::Retarget { vertex: v, i, to }),
        (any::<usize>(), any::<usize>()).prop_map(|(v, i)| Corruption::DeleteEntry {
            vertex: v,
            i
        }),
        (any::<usize>(), any::<usize>()).prop_map(|(v, i)| Corruption::DuplicateEntry {
            vertex: v,
            i
        }),
    ];
    (rep, kind)
}

proptest! {
    /// Every non-trivial corruption of a valid rotation table is rejected.
    #[test]
    fn corrupted_tables_are_rejected((rep, corruption) in corruption_strategy()) {
        let t = &reps_up_to_7()[rep];
        let mut table = t.rotation_table();
        let n = table.len();
        let applied = match corruption {
            Corruption::SwapEntries { vertex, i, j } => {
                let v = vertex % n;
                let d = table[v].len();
                let (i, j) = (i % d, j % d);
                if i == j {
                    false
                } else {
                    table[v].swap(i, j);
                    true
                }
            }
            Corruption::Retarget { vertex, i, to } => {
                let v = vertex % n;
                let d = table[v].len();
                let i = i % d;
                let to = to % n;
                if to == table[v][i] {
                    false
                } else {
                    table[v][i] = to;
                    true
                }
            }
            Corruption::DeleteEntry { vertex, i } => {
                let v = vertex % n;
                let d = table[v].len();
                table[v].remove(i % d);
                true
            }
            Corruption::DuplicateEntry { vertex, i } => {
                let v = vertex % n;
                let d = table[v].len();
                let entry = table[v][i % d];
                table[v].push(entry);
                true
            }
        };
        prop_assume!(applied);
        prop_assert!(
            PlaneTriangulation::build(table).is_err(),
            "corruption {corruption:?} was accepted on n={}",
            t.n()
        );
    }

    /// Canonical codes ignore vertex labels and reflection.
    #[test]
    fn code_is_invariant_under_relabeling(rep in 0..9usize, seed in any::<u64>()) {
        let t = &reps_up_to_7()[rep];
        let n = t.n();
        // seeded Fisher-Yates permutation
        let mut perm: Vec<usize> = (0..n).collect();
        let mut state = seed | 1;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let j = (state >> 33) as usize % (i + 1);
            perm.swap(i, j);
        }
        let mut table = vec![Vec::new(); n];
        for (v, nbrs) in t.rotation_table().into_iter().enumerate() {
            table[perm[v]] = nbrs.into_iter().map(|u| perm[u]).collect();
        }
        let relabeled = PlaneTriangulation::build(table).unwrap();
        prop_assert_eq!(canonical_code(&relabeled), canonical_code(t));
        prop_assert_eq!(canonical_code(&relabeled.mirror()), canonical_code(t));
        prop_assert_eq!(relabeled.degree_multiset(), t.degree_multiset());
    }

    /// Polygon insertion grows any valid site by one vertex and three edges.
    #[test]
    fn polygon_insertion_is_monotone(rep in 0..9usize, pick in any::<usize>()) {
        let t = &reps_up_to_7()[rep];
        let polys = enumerate_polygons(t, t.n().min(6));
        prop_assume!(!polys.is_empty());
        let p = &polys[pick % polys.len()];
        let child = insert_in_polygon(t, p).unwrap();
        prop_assert_eq!(child.n(), t.n() + 1);
        prop_assert_eq!(child.edges().len(), t.edges().len() + 3);
        let new_vertex = trisphere::VertexId(t.n());
        prop_assert_eq!(child.degree(new_vertex), p.boundary_len());
    }

    /// Color renaming never breaks validity or the unordered summary.
    #[test]
    fn renaming_is_a_symmetry_of_colorings(rep in 0..9usize, perm_pick in 0..6usize) {
        let t = &reps_up_to_7()[rep];
        let perms: [[Color; 3]; 6] = [
            [Color::Red, Color::Green, Color::Blue],
            [Color::Red, Color::Blue, Color::Green],
            [Color::Green, Color::Red, Color::Blue],
            [Color::Green, Color::Blue, Color::Red],
            [Color::Blue, Color::Red, Color::Green],
            [Color::Blue, Color::Green, Color::Red],
        ];
        let perm = perms[perm_pick];
        for coloring in enumerate_colorings(t) {
            let renamed = coloring.renamed(perm);
            prop_assert_eq!(trisphere::tricolor::validate(t, &renamed), Ok(true));
            prop_assert_eq!(
                class_summary(t, &renamed).unwrap().unordered(),
                class_summary(t, &coloring).unwrap().unordered()
            );
        }
    }
}
