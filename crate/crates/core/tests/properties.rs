//! Property tests: word-level algebra via proptest plus exhaustive sweeps
//! of the structural invariants over all small parameter sets.

use std::collections::BTreeSet;

use proptest::prelude::*;

use aograph::coloring::{
    chromatic_number_exact_oracle, recursive_coloring, recursive_palette, theorem3_coloring,
    verify_coloring,
};
use aograph::domination::{
    domination_number_exact_oracle, dominating_set_construct, verify_dominating,
};
use aograph::graph::{
    ao_matrix_graph, edge_count_enumerated, edge_count_formula_s1, materialize, reduced_embedding,
};
use aograph::hamiltonian::{
    directed_degrees, eulerian_hamiltonian, grid_hamiltonian, insertion_hamiltonian, verify_cycle,
};
use aograph::words::{enumerate_words, overlap_adjacent, prefix_tag, rotate_left, suffix_tag};
use aograph::{AOParams, GridParams, SizeGuard, Word};

fn guard() -> SizeGuard {
    SizeGuard::default()
}

/// All valid parameter triples with at most `max` vertices.
fn small_params(max: u128) -> Vec<AOParams> {
    let mut out = Vec::new();
    for k in 2..=10usize {
        for d in 1..=6usize {
            match (d as u128).checked_pow(k as u32) {
                Some(c) if c <= max => {}
                _ => continue,
            }
            for s in 1..k {
                out.push(AOParams::new(k, d, s).unwrap());
            }
        }
    }
    out
}

fn word_strategy() -> impl Strategy<Value = (Word, usize)> {
    (1usize..=4, 1usize..=6).prop_flat_map(|(d, len)| {
        proptest::collection::vec(0u8..d as u8, len)
            .prop_map(move |letters| (Word::new(letters, d).unwrap(), d))
    })
}

proptest! {
    #[test]
    fn rotation_by_length_is_identity((w, _d) in word_strategy()) {
        prop_assert_eq!(rotate_left(&w, w.len()), w);
    }

    #[test]
    fn render_parse_round_trip((w, d) in word_strategy()) {
        let letter_form = w.render(d);
        prop_assert_eq!(Word::parse(&letter_form, d).unwrap(), w.clone());
        // comma form needs at least one comma to be recognized when d <= 26
        if w.len() > 1 {
            let numeric: Vec<String> = w.letters().iter().map(|c| c.to_string()).collect();
            prop_assert_eq!(Word::parse(&numeric.join(","), d).unwrap(), w);
        }
    }

    #[test]
    fn adjacency_symmetric_irreflexive(
        (k, d, s) in (2usize..=5, 2usize..=3, 1usize..=4),
        seed_a in 0u64..10_000,
        seed_b in 0u64..10_000,
    ) {
        prop_assume!(s < k);
        let p = AOParams::new(k, d, s).unwrap();
        let n = p.vertex_count();
        let a = Word::unrank(seed_a as u128 % n, k, d);
        let b = Word::unrank(seed_b as u128 % n, k, d);
        prop_assert!(!overlap_adjacent(&a, &a, &p).unwrap());
        let ab = overlap_adjacent(&a, &b, &p).unwrap();
        prop_assert_eq!(ab, overlap_adjacent(&b, &a, &p).unwrap());
        let resliced = a != b
            && (suffix_tag(&a, &p) == prefix_tag(&b, &p)
                || suffix_tag(&b, &p) == prefix_tag(&a, &p));
        prop_assert_eq!(ab, resliced);
    }

    #[test]
    fn rotation_composes((w, _d) in word_strategy(), r in 0usize..12, q in 0usize..12) {
        prop_assert_eq!(
            rotate_left(&rotate_left(&w, r), q),
            rotate_left(&w, (r + q) % w.len().max(1))
        );
    }
}

#[test]
fn enumeration_is_complete_and_sorted() {
    for d in 1..=4usize {
        for len in 1..=6usize {
            let count = (d as u128).pow(len as u32);
            if count > 1 << 12 {
                continue;
            }
            let words: Vec<Word> = enumerate_words(len, d, &guard()).unwrap().collect();
            assert_eq!(words.len() as u128, count);
            assert!(words.windows(2).all(|w| w[0] < w[1]));
        }
    }
}

#[test]
fn edge_formula_matches_enumeration() {
    for p in small_params(1024) {
        if p.s() != 1 {
            continue;
        }
        assert_eq!(
            edge_count_enumerated(&p, &guard()).unwrap(),
            edge_count_formula_s1(p.k(), p.d()),
            "mismatch at ({},{},1)",
            p.k(),
            p.d()
        );
    }
}

#[test]
fn matrix_graph_is_regular() {
    for n in 2..=8usize {
        let g = ao_matrix_graph(n).unwrap();
        assert!(g.degrees().iter().all(|&deg| deg == 2 * n - 3));
    }
}

#[test]
fn reduced_embedding_injective_and_faithful() {
    for p in small_params(1024) {
        if p.short_tags() || p.d() < 2 {
            continue;
        }
        let image_params = AOParams::new(2 * p.t(), p.d(), p.t()).unwrap();
        let words: Vec<Word> = enumerate_words(p.k(), p.d(), &guard()).unwrap().collect();
        let images: Vec<Word> = words
            .iter()
            .map(|w| reduced_embedding(w, &p).unwrap())
            .collect();
        let distinct: BTreeSet<&Word> = images.iter().collect();
        assert_eq!(distinct.len(), images.len());
        for (i, a) in words.iter().enumerate() {
            for (j, b) in words.iter().enumerate().skip(i + 1) {
                assert_eq!(
                    overlap_adjacent(a, b, &p).unwrap(),
                    overlap_adjacent(&images[i], &images[j], &image_params).unwrap()
                );
            }
        }
    }
}

#[test]
fn insertion_valid_and_deterministic() {
    for p in small_params(512) {
        let first = insertion_hamiltonian(&p, &guard()).unwrap();
        assert!(verify_cycle(&first).is_pass(), "invalid at {:?}", p);
        let second = insertion_hamiltonian(&p, &guard()).unwrap();
        assert_eq!(first.vertices, second.vertices);
    }
}

#[test]
fn eulerian_valid_same_vertex_set_balanced() {
    for p in small_params(512) {
        if 2 * p.s() > p.k() || p.d() < 2 {
            continue;
        }
        let eul = eulerian_hamiltonian(&p, &guard()).unwrap();
        assert!(verify_cycle(&eul).is_pass(), "invalid at {:?}", p);
        let all: BTreeSet<Word> = enumerate_words(p.k(), p.d(), &guard()).unwrap().collect();
        let got: BTreeSet<Word> = eul.vertices.iter().cloned().collect();
        assert_eq!(all, got);
        let expected = (p.d() as u128).pow(p.s() as u32);
        for (indeg, outdeg) in directed_degrees(&p, &guard()).unwrap() {
            assert_eq!(indeg, expected);
            assert_eq!(outdeg, expected);
        }
    }
}

#[test]
fn cycle_verifier_rejects_perturbations() {
    let p = AOParams::new(3, 2, 1).unwrap();
    let cert = insertion_hamiltonian(&p, &guard()).unwrap();

    let mut truncated = cert.clone();
    truncated.vertices.pop();
    assert!(!verify_cycle(&truncated).is_pass());

    let mut duplicated = cert.clone();
    let head = duplicated.vertices[0].clone();
    let last = duplicated.vertices.len() - 1;
    duplicated.vertices[last] = head;
    assert!(!verify_cycle(&duplicated).is_pass());

    let mut swapped = cert;
    swapped.vertices.swap(1, 5);
    assert!(!verify_cycle(&swapped).is_pass());
}

#[test]
fn grid_succeeds_iff_even_side() {
    for d in 2..=6usize {
        for k in 2..=6usize {
            match (d as u128).checked_pow(k as u32) {
                Some(c) if c <= 4096 => {}
                _ => continue,
            }
            let g = GridParams::new(d, k).unwrap();
            let result = grid_hamiltonian(&g, &guard()).unwrap();
            if d % 2 == 0 {
                let cert = result.expect("even side must give a cycle");
                assert!(verify_cycle(&cert).is_pass());
            } else {
                assert!(result.is_err(), "odd side must refuse ({},{})", d, k);
            }
        }
    }
}

/// The closed-form value d^(k-2t) + d^t is always an upper bound (the
/// construction realizes it) and is the exact chromatic number whenever the
/// middle word is non-empty (2t < k). At k = 2t the bound stops being tight
/// once d >= 5: chi(G(2,5,1)) = 5 and chi(G(2,6,1)) = 5, not 6 and 7.
#[test]
fn short_tag_chromatic_formula() {
    let mut params = small_params(32);
    params.push(AOParams::new(2, 5, 1).unwrap());
    params.push(AOParams::new(2, 6, 1).unwrap());
    for p in params {
        if !p.short_tags() || p.d() < 2 {
            continue;
        }
        let t = p.t();
        let bound = (p.d() as u128).pow((p.k() - 2 * t) as u32) + (p.d() as u128).pow(t as u32);
        let g = materialize(&p, &guard()).unwrap();
        let chi = chromatic_number_exact_oracle(&g, 64).unwrap() as u128;
        assert!(chi <= bound, "oracle above the bound at {:?}", p);
        if 2 * t < p.k() || p.d() <= 4 {
            assert_eq!(chi, bound, "bound not tight at {:?}", p);
        }
        let c = theorem3_coloring(&p, &guard()).unwrap();
        assert_eq!(c.palette as u128, bound);
        assert!(verify_coloring(&c, &guard()).unwrap().is_pass());
    }
}

#[test]
fn long_tag_chromatic_bounds() {
    for p in small_params(32) {
        if p.short_tags() || p.d() < 2 {
            continue;
        }
        let f = recursive_palette(p.k(), p.d(), p.s());
        let naive = 1 + (p.d() as u128).pow(p.t() as u32);
        assert!(f <= naive);
        let g = materialize(&p, &guard()).unwrap();
        let chi = chromatic_number_exact_oracle(&g, 64).unwrap() as u128;
        assert!(chi <= f, "oracle {} exceeds bound {} at {:?}", chi, f, p);
    }
}

#[test]
fn recursive_coloring_always_proper() {
    for p in small_params(1024) {
        if p.short_tags() || p.d() < 2 {
            continue;
        }
        let c = recursive_coloring(&p, &guard()).unwrap();
        assert!(
            verify_coloring(&c, &guard()).unwrap().is_pass(),
            "improper at {:?}",
            p
        );
        assert!(c.assignment.values().all(|&col| col < c.palette));
    }
}

#[test]
fn chromatic_monotone_in_alphabet() {
    for (k, s) in [(2usize, 1usize), (3, 2), (3, 1)] {
        let mut prev = 0usize;
        for d in 2..=3usize {
            let p = AOParams::new(k, d, s).unwrap();
            let g = materialize(&p, &guard()).unwrap();
            let chi = chromatic_number_exact_oracle(&g, 64).unwrap();
            assert!(chi >= prev, "not monotone at ({},{},{})", k, d, s);
            prev = chi;
        }
    }
}

/// The tag-count value d^t is always achieved by the construction and is
/// the exact minimum whenever the middle word is non-empty (2t < k); at
/// k = 2t a single word can cover several tags at once, so the oracle may
/// return less.
#[test]
fn domination_construction_and_oracle() {
    for p in small_params(32) {
        if !p.short_tags() {
            continue;
        }
        let dt = (p.d() as u128).pow(p.t() as u32);
        for anchor_rank in 0..(p.d() as u128).pow(p.s() as u32).min(4) {
            let anchor = Word::unrank(anchor_rank, p.s(), p.d());
            let ds = dominating_set_construct(&p, &anchor, &guard()).unwrap();
            assert_eq!(ds.members.len() as u128, dt);
            assert!(verify_dominating(&ds, &guard()).unwrap().is_pass());
        }
        let g = materialize(&p, &guard()).unwrap();
        let gamma = domination_number_exact_oracle(&g, 32).unwrap() as u128;
        if 2 * p.t() < p.k() || p.d() == 1 {
            assert_eq!(gamma, dt, "gamma mismatch at {:?}", p);
        } else {
            assert!(gamma <= dt, "gamma above the construction at {:?}", p);
        }
    }
}

#[test]
fn domination_monotone_under_edge_addition() {
    let labels: Vec<String> = (0..6).map(|i| i.to_string()).collect();
    let sparse = aograph::ExplicitGraph::new(labels.clone(), vec![(0, 1), (2, 3), (4, 5)]);
    let mut edges = vec![(0, 1), (2, 3), (4, 5)];
    edges.extend([(1, 2), (3, 4)]);
    let dense = aograph::ExplicitGraph::new(labels, edges);
    let a = domination_number_exact_oracle(&sparse, 32).unwrap();
    let b = domination_number_exact_oracle(&dense, 32).unwrap();
    assert!(b <= a);
}
