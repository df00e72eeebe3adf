//! Acceptance suite. Each criterion is one test that prints a single
//! `[PASS]` or `[FAIL]` line (run with `--nocapture` to see them all).

use std::collections::{BTreeSet, HashSet};

use aograph::coloring::{
    ao_matrix_coloring, chromatic_number_exact_oracle, recursive_coloring, theorem3_coloring,
    verify_coloring,
};
use aograph::domination::{
    domination_number_exact_oracle, dominating_set_construct, verify_dominating,
};
use aograph::graph::{
    edge_count_enumerated, edge_count_formula_s1, materialize, AOMatrixGraph,
};
use aograph::hamiltonian::{
    eulerian_hamiltonian, grid_hamiltonian, insertion_hamiltonian, verify_cycle,
};
use aograph::planarity::{classify_planarity, verify_embedding, verify_witness, PlanarityVerdict};
use aograph::{AOParams, GridParams, SizeGuard, Word};

fn report(number: usize, name: &str, failures: Vec<String>) {
    if failures.is_empty() {
        println!("[PASS] criterion {}: {}", number, name);
    } else {
        println!(
            "[FAIL] criterion {}: {} ({})",
            number,
            name,
            failures.join("; ")
        );
        panic!("criterion {} failed: {}", number, failures.join("; "));
    }
}

fn guard() -> SizeGuard {
    SizeGuard::default()
}

#[test]
fn criterion_01_golden_cycle() {
    let mut failures = Vec::new();
    let p = AOParams::new(3, 2, 1).unwrap();
    let expected = ["aaa", "aab", "abb", "bbb", "bba", "bab", "aba", "baa"];
    let first = insertion_hamiltonian(&p, &guard()).unwrap();
    let got: Vec<String> = first.vertices.iter().map(|w| w.render(2)).collect();
    if got != expected {
        failures.push(format!("expected {:?}, got {:?}", expected, got));
    }
    let second = insertion_hamiltonian(&p, &guard()).unwrap();
    if second.vertices != first.vertices {
        failures.push("output not identical across runs".into());
    }
    report(1, "golden cycle for (k,d,s)=(3,2,1)", failures);
}

#[test]
fn criterion_02_sequence_windows() {
    let mut failures = Vec::new();
    let seq: Vec<u8> = "0000101001101111".bytes().map(|b| b - b'0').collect();
    let p = AOParams::new(4, 2, 1).unwrap();
    let vertices: Vec<Word> = (0..seq.len())
        .map(|i| {
            let letters: Vec<u8> = (0..4).map(|j| seq[(i + j) % seq.len()]).collect();
            Word::new(letters, 2).unwrap()
        })
        .collect();
    let cert = aograph::hamiltonian::CycleCertificate {
        kind: aograph::CycleKind::Ao(p),
        vertices,
    };
    let verdict = verify_cycle(&cert);
    if !verdict.is_pass() {
        failures.push(format!(
            "windows rejected: {}",
            verdict.reason().unwrap_or("")
        ));
    }
    report(2, "published binary sequence is a valid cycle", failures);
}

#[test]
fn criterion_03_hamiltonicity_sweep() {
    let mut failures = Vec::new();
    for k in 2..=7usize {
        for d in 2..=4usize {
            if (d as u128).pow(k as u32) > 2048 {
                continue;
            }
            for s in 1..k {
                let p = AOParams::new(k, d, s).unwrap();
                let ins = match insertion_hamiltonian(&p, &guard()) {
                    Ok(c) => c,
                    Err(e) => {
                        failures.push(format!("insertion ({},{},{}): {}", k, d, s, e));
                        continue;
                    }
                };
                if let Some(r) = verify_cycle(&ins).reason() {
                    failures.push(format!("insertion ({},{},{}) invalid: {}", k, d, s, r));
                }
                if 2 * s <= k {
                    let eul = match eulerian_hamiltonian(&p, &guard()) {
                        Ok(c) => c,
                        Err(e) => {
                            failures.push(format!("eulerian ({},{},{}): {}", k, d, s, e));
                            continue;
                        }
                    };
                    if let Some(r) = verify_cycle(&eul).reason() {
                        failures.push(format!("eulerian ({},{},{}) invalid: {}", k, d, s, r));
                    }
                    let a: BTreeSet<_> = ins.vertices.iter().collect();
                    let b: BTreeSet<_> = eul.vertices.iter().collect();
                    if a != b {
                        failures.push(format!("vertex sets differ at ({},{},{})", k, d, s));
                    }
                }
            }
        }
    }
    report(3, "Hamiltonicity sweep, both constructions", failures);
}

#[test]
fn criterion_04_exact_chromatic_numbers() {
    let mut failures = Vec::new();
    let cases = [(2, 2, 1, 3), (3, 2, 2, 4), (4, 2, 2, 5), (2, 3, 1, 4), (3, 3, 2, 6)];
    for (k, d, s, chi) in cases {
        let p = AOParams::new(k, d, s).unwrap();
        let t = p.t();
        let palette = (d as u128).pow((k - 2 * t) as u32) + (d as u128).pow(t as u32);
        if palette != chi as u128 {
            failures.push(format!("formula mismatch at ({},{},{})", k, d, s));
        }
        let g = materialize(&p, &guard()).unwrap();
        match chromatic_number_exact_oracle(&g, 64) {
            Ok(x) if x == chi => {}
            Ok(x) => failures.push(format!("oracle ({},{},{}) = {}, want {}", k, d, s, x, chi)),
            Err(e) => failures.push(format!("oracle ({},{},{}): {}", k, d, s, e)),
        }
        let c = theorem3_coloring(&p, &guard()).unwrap();
        if c.palette != chi {
            failures.push(format!(
                "construction palette ({},{},{}) = {}, want {}",
                k, d, s, c.palette, chi
            ));
        }
        if let Some(r) = verify_coloring(&c, &guard()).unwrap().reason() {
            failures.push(format!("construction ({},{},{}) improper: {}", k, d, s, r));
        }
    }
    report(4, "exact chromatic numbers, short-tag regime", failures);
}

/// Every proper n-coloring of the order-n matrix graph, enumerated up to
/// color permutation (the checked property is permutation invariant).
fn minimal_matrix_colorings_all_mono(n: usize) -> Result<(), String> {
    let m = AOMatrixGraph::new(n).unwrap();
    let verts = m.vertices();
    let mut color = vec![usize::MAX; verts.len()];
    let mut stack = vec![0usize];
    let mut checked = 0u64;
    // iterative backtracking: canonical colorings cap each new color at
    // max_used + 1
    fn rec(
        idx: usize,
        verts: &[(usize, usize)],
        m: &AOMatrixGraph,
        color: &mut Vec<usize>,
        n: usize,
        checked: &mut u64,
    ) -> Result<(), String> {
        if idx == verts.len() {
            *checked += 1;
            let cols_mono = (1..=n).all(|j| {
                let cs: HashSet<usize> = verts
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| v.1 == j)
                    .map(|(i, _)| color[i])
                    .collect();
                cs.len() <= 1
            });
            let rows_mono = (1..=n).all(|i| {
                let cs: HashSet<usize> = verts
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| v.0 == i)
                    .map(|(vi, _)| color[vi])
                    .collect();
                cs.len() <= 1
            });
            if !cols_mono && !rows_mono {
                return Err(format!("non-monochromatic minimal coloring {:?}", color));
            }
            return Ok(());
        }
        let max_used = color[..idx].iter().copied().max().map_or(0, |c| c + 1);
        for c in 0..n.min(max_used + 1) {
            if (0..idx).any(|j| color[j] == c && m.adjacent(verts[j], verts[idx])) {
                continue;
            }
            color[idx] = c;
            rec(idx + 1, verts, m, color, n, checked)?;
            color[idx] = usize::MAX;
        }
        Ok(())
    }
    stack.clear();
    rec(0, &verts, &m, &mut color, n, &mut checked)?;
    if checked == 0 {
        return Err(format!("no proper {}-coloring found for order {}", n, n));
    }
    Ok(())
}

#[test]
fn criterion_05_ao_matrix_graphs() {
    let mut failures = Vec::new();
    for n in 3..=5usize {
        let g = AOMatrixGraph::new(n).unwrap().to_explicit();
        match chromatic_number_exact_oracle(&g, 64) {
            Ok(x) if x == n => {}
            Ok(x) => failures.push(format!("order {} oracle chi = {}, want {}", n, x, n)),
            Err(e) => failures.push(format!("order {} oracle: {}", n, e)),
        }
        let c = ao_matrix_coloring(n).unwrap();
        if let Some(r) = verify_coloring(&c, &guard()).unwrap().reason() {
            failures.push(format!("order {} column coloring improper: {}", n, r));
        }
    }
    for n in 3..=4usize {
        if let Err(e) = minimal_matrix_colorings_all_mono(n) {
            failures.push(format!("order {}: {}", n, e));
        }
    }
    report(5, "matrix graph chromatic numbers and minimal colorings", failures);
}

#[test]
fn criterion_06_recursive_bound() {
    let mut failures = Vec::new();
    let p = AOParams::new(5, 2, 2).unwrap();
    let c = recursive_coloring(&p, &guard()).unwrap();
    let used: HashSet<usize> = c.assignment.values().copied().collect();
    if used.len() != 5 {
        failures.push(format!("used {} colors, want exactly 5", used.len()));
    }
    if let Some(r) = verify_coloring(&c, &guard()).unwrap().reason() {
        failures.push(format!("improper: {}", r));
    }
    let g = materialize(&p, &guard()).unwrap();
    match chromatic_number_exact_oracle(&g, 64) {
        Ok(x) if x <= 5 => {}
        Ok(x) => failures.push(format!("oracle chi = {} exceeds the 5-color bound", x)),
        Err(e) => failures.push(format!("oracle: {}", e)),
    }
    report(6, "recursive 5-coloring of (5,2,2)", failures);
}

#[test]
fn criterion_07_domination() {
    let mut failures = Vec::new();
    let cases = [(2, 2, 1, 2usize), (3, 2, 2, 2), (4, 2, 2, 4)];
    for (k, d, s, want) in cases {
        let p = AOParams::new(k, d, s).unwrap();
        let g = materialize(&p, &guard()).unwrap();
        match domination_number_exact_oracle(&g, 32) {
            Ok(x) if x == want => {}
            Ok(x) => failures.push(format!("oracle ({},{},{}) = {}, want {}", k, d, s, x, want)),
            Err(e) => failures.push(format!("oracle ({},{},{}): {}", k, d, s, e)),
        }
        let ds = dominating_set_construct(&p, &Word::zeros(s), &guard()).unwrap();
        let dt = (d as u128).pow(p.t() as u32);
        if ds.members.len() as u128 != dt {
            failures.push(format!(
                "construction ({},{},{}) size {}, want {}",
                k,
                d,
                s,
                ds.members.len(),
                dt
            ));
        }
        if let Some(r) = verify_dominating(&ds, &guard()).unwrap().reason() {
            failures.push(format!("construction ({},{},{}) invalid: {}", k, d, s, r));
        }
    }
    report(7, "domination numbers match the tag-count formula", failures);
}

#[test]
fn criterion_08_planarity() {
    let mut failures = Vec::new();
    for (k, d) in [(2usize, 2usize), (2, 3)] {
        let p = AOParams::new(k, d, 1).unwrap();
        match classify_planarity(&p, &guard()).unwrap() {
            PlanarityVerdict::Planar { graph, embedding } => {
                if let Some(r) = verify_embedding(&graph, &embedding).reason() {
                    failures.push(format!("({},{},1) embedding: {}", k, d, r));
                }
            }
            other => failures.push(format!("({},{},1) not Planar: {:?}", k, d, other)),
        }
    }
    let p = AOParams::new(3, 2, 2).unwrap();
    match classify_planarity(&p, &guard()).unwrap() {
        PlanarityVerdict::NonPlanar { witness } => {
            if let Some(r) = verify_witness(&witness).reason() {
                failures.push(format!("(3,2,2) witness: {}", r));
            }
            let left: BTreeSet<String> = witness.left.iter().map(|w| w.render(2)).collect();
            let right: BTreeSet<String> = witness.right.iter().map(|w| w.render(2)).collect();
            let want_left: BTreeSet<String> =
                ["bab", "bbb", "aba", "aaa"].iter().map(|s| s.to_string()).collect();
            let want_right: BTreeSet<String> =
                ["bba", "baa", "aab", "abb"].iter().map(|s| s.to_string()).collect();
            if !(left == want_left && right == want_right)
                && !(left == want_right && right == want_left)
            {
                failures.push(format!("(3,2,2) classes {:?} / {:?}", left, right));
            }
        }
        other => failures.push(format!("(3,2,2) not NonPlanar: {:?}", other)),
    }
    let p = AOParams::new(4, 2, 2).unwrap();
    match classify_planarity(&p, &guard()).unwrap() {
        PlanarityVerdict::NonPlanar { witness } => {
            if witness.left.len() != 3 || witness.right.len() != 3 {
                failures.push(format!(
                    "(4,2,2) witness sides {}x{}, want 3x3",
                    witness.left.len(),
                    witness.right.len()
                ));
            }
            if let Some(r) = verify_witness(&witness).reason() {
                failures.push(format!("(4,2,2) witness: {}", r));
            }
        }
        other => failures.push(format!("(4,2,2) not NonPlanar: {:?}", other)),
    }
    report(8, "planarity classification with certificates", failures);
}

#[test]
fn criterion_09_edge_count_formula() {
    let mut failures = Vec::new();
    for k in 2..=12usize {
        for d in 1..=64usize {
            let count = (d as u128).checked_pow(k as u32);
            match count {
                Some(c) if c <= 4096 => {}
                _ => continue,
            }
            let p = AOParams::new(k, d, 1).unwrap();
            let enumerated = edge_count_enumerated(&p, &guard()).unwrap();
            let formula = edge_count_formula_s1(k, d);
            if enumerated != formula {
                failures.push(format!(
                    "({},{}): formula {} vs enumerated {}",
                    k, d, formula, enumerated
                ));
            }
        }
    }
    let p = AOParams::new(3, 2, 1).unwrap();
    if edge_count_enumerated(&p, &guard()).unwrap() != 13 {
        failures.push("(3,2,1) does not have 13 edges".into());
    }
    report(9, "closed-form edge count for s = 1", failures);
}

#[test]
fn criterion_10_grid() {
    let mut failures = Vec::new();
    for (d, dim) in [(2usize, 2usize), (2, 3), (2, 4), (4, 2)] {
        let g = GridParams::new(d, dim).unwrap();
        match grid_hamiltonian(&g, &guard()).unwrap() {
            Ok(cert) => {
                if let Some(r) = verify_cycle(&cert).reason() {
                    failures.push(format!("grid ({},{}) invalid: {}", d, dim, r));
                }
            }
            Err(_) => failures.push(format!("grid ({},{}) refused, expected a cycle", d, dim)),
        }
    }
    for (d, dim) in [(3usize, 2usize), (3, 3), (5, 2)] {
        let g = GridParams::new(d, dim).unwrap();
        match grid_hamiltonian(&g, &guard()).unwrap() {
            Err(refusal) => {
                if refusal.reason.is_empty() {
                    failures.push(format!("grid ({},{}) refusal without a reason", d, dim));
                }
            }
            Ok(_) => failures.push(format!("grid ({},{}) produced a cycle, expected refusal", d, dim)),
        }
    }
    report(10, "grid cycles and parity refusals", failures);
}
