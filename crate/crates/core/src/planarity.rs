//! Planarity classification of AO graphs with short tags: stored rotation
//! systems certify the two non-trivial planar cases via Euler's formula,
//! and complete-bipartite witnesses certify every non-planar case.

use crate::error::{AoError, SizeGuard, Verdict};
use crate::graph::{materialize, ExplicitGraph};
use crate::words::{overlap_adjacent, AOParams, Word};
use std::collections::{BTreeMap, HashSet};

/// A complete bipartite subgraph witnessing non-planarity (K_{3,3} or
/// the shape used when fewer than four tags exist).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteWitness {
    pub left: Vec<Word>,
    pub right: Vec<Word>,
    pub params: AOParams,
}

/// Cyclic neighbor order at each vertex, keyed by vertex label.
pub type RotationSystem = BTreeMap<String, Vec<String>>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PlanarityVerdict {
    Planar {
        graph: ExplicitGraph,
        embedding: RotationSystem,
    },
    NonPlanar {
        witness: BipartiteWitness,
    },
    /// Long tags are outside the classified regime.
    Unknown,
}

/// The K_{3,3} witness available whenever there are at least four tags:
/// with the four lex-smallest tags a < b < c < e and the all-zero middle
/// word w, the sides {awb, awc, awe} and {bwa, cwa, ewa}.
pub fn k33_witness(p: &AOParams) -> Result<BipartiteWitness, AoError> {
    if !p.short_tags() {
        return Err(AoError::Precondition(format!(
            "witness construction needs t <= k/2, got t={} k={}",
            p.t(),
            p.k()
        )));
    }
    if p.tag_count() < 4 {
        return Err(AoError::Precondition(format!(
            "K33 witness needs at least 4 tags, G has {}",
            p.tag_count()
        )));
    }
    let t = p.t();
    let middle = Word::zeros(p.k() - 2 * t);
    let tags: Vec<Word> = (0..4).map(|r| Word::unrank(r, t, p.d())).collect();
    let alpha = &tags[0];
    let left = tags[1..]
        .iter()
        .map(|tag| alpha.concat(&middle).concat(tag))
        .collect();
    let right = tags[1..]
        .iter()
        .map(|tag| tag.concat(&middle).concat(alpha))
        .collect();
    Ok(BipartiteWitness {
        left,
        right,
        params: *p,
    })
}

/// The 4+4 witness for t = 1 and d in {2,3}: two words for each
/// (first, last) letter profile (0,0), (1,1) on the left and (1,0), (0,1)
/// on the right. For G(3,2,2) this is exactly the K_{4,4} split into
/// {000,010,101,111} and {001,011,100,110}.
fn k44_witness(p: &AOParams) -> Result<BipartiteWitness, AoError> {
    if p.t() != 1 || p.k() < 3 {
        return Err(AoError::Precondition(format!(
            "4+4 witness needs t=1 and k>=3, got t={} k={}",
            p.t(),
            p.k()
        )));
    }
    let k = p.k();
    let two_smallest = |first: u8, last: u8| -> Vec<Word> {
        // lex-smallest middles: all zeros, then ...001
        let mut a = vec![0u8; k];
        a[0] = first;
        a[k - 1] = last;
        let mut b = a.clone();
        b[k - 2] = 1;
        vec![Word::from_raw(a), Word::from_raw(b)]
    };
    let mut left = two_smallest(0, 0);
    left.extend(two_smallest(1, 1));
    let mut right = two_smallest(0, 1);
    right.extend(two_smallest(1, 0));
    Ok(BipartiteWitness {
        left,
        right,
        params: *p,
    })
}

/// Witness check: all left-right pairs adjacent, all vertices distinct,
/// side sizes 3 or 4.
pub fn verify_witness(w: &BipartiteWitness) -> Verdict {
    let p = &w.params;
    if !matches!(w.left.len(), 3 | 4) || !matches!(w.right.len(), 3 | 4) {
        return Verdict::fail(format!(
            "side sizes {} and {} are not in {{3,4}}",
            w.left.len(),
            w.right.len()
        ));
    }
    let mut seen = HashSet::new();
    for v in w.left.iter().chain(&w.right) {
        if let Err(e) = p.check_word(v) {
            return Verdict::fail(e.to_string());
        }
        if !seen.insert(v.clone()) {
            return Verdict::fail(format!("vertex {} appears twice", v.render(p.d())));
        }
    }
    for a in &w.left {
        for b in &w.right {
            match overlap_adjacent(a, b, p) {
                Ok(true) => {}
                Ok(false) => {
                    return Verdict::fail(format!(
                        "pair {} -- {} is not adjacent",
                        a.render(p.d()),
                        b.render(p.d())
                    ));
                }
                Err(e) => return Verdict::fail(e.to_string()),
            }
        }
    }
    Verdict::Pass
}

/// Counts faces by dart traversal of the rotation system and checks
/// V - E + F = 2 on the sphere of each connected component.
pub fn verify_embedding(g: &ExplicitGraph, rotation: &RotationSystem) -> Verdict {
    let n = g.vertex_count();
    let adj = g.adjacency();
    // rotation must list exactly the neighbors of each vertex
    let mut rot_idx: Vec<Vec<usize>> = Vec::with_capacity(n);
    for (v, label) in g.labels.iter().enumerate() {
        let Some(order) = rotation.get(label) else {
            return Verdict::fail(format!("vertex {label} missing from the rotation system"));
        };
        let mut indices = Vec::with_capacity(order.len());
        for nb in order {
            match g.index_of(nb) {
                Some(i) => indices.push(i),
                None => return Verdict::fail(format!("unknown neighbor {nb} at vertex {label}")),
            }
        }
        let mut sorted = indices.clone();
        sorted.sort_unstable();
        if sorted != adj[v] {
            return Verdict::fail(format!(
                "rotation at {label} does not list its neighbor set exactly once each"
            ));
        }
        rot_idx.push(indices);
    }

    // connected components
    let mut component = vec![usize::MAX; n];
    let mut n_components = 0;
    for start in 0..n {
        if component[start] != usize::MAX {
            continue;
        }
        let c = n_components;
        n_components += 1;
        let mut stack = vec![start];
        component[start] = c;
        while let Some(v) = stack.pop() {
            for &u in &adj[v] {
                if component[u] == usize::MAX {
                    component[u] = c;
                    stack.push(u);
                }
            }
        }
    }

    // face traversal: the dart after (u -> v) leaves v toward the neighbor
    // preceding u in v's rotation
    let mut faces = vec![0usize; n_components];
    let mut seen: HashSet<(usize, usize)> = HashSet::new();
    let mut darts: Vec<(usize, usize)> = Vec::new();
    for &(u, v) in &g.edges {
        darts.push((u, v));
        darts.push((v, u));
    }
    darts.sort_unstable();
    for &start in &darts {
        if seen.contains(&start) {
            continue;
        }
        faces[component[start.0]] += 1;
        let mut cur = start;
        loop {
            if !seen.insert(cur) {
                break;
            }
            let (u, v) = cur;
            let order = &rot_idx[v];
            let pos = order.iter().position(|&x| x == u).unwrap();
            let next = order[(pos + order.len() - 1) % order.len()];
            cur = (v, next);
            if cur == start {
                break;
            }
        }
    }

    let mut vtx = vec![0usize; n_components];
    let mut edg = vec![0usize; n_components];
    for v in 0..n {
        vtx[component[v]] += 1;
    }
    for &(u, _) in &g.edges {
        edg[component[u]] += 1;
    }
    for c in 0..n_components {
        // an edgeless component is one vertex on a sphere with a single face
        let f = if edg[c] == 0 { 1 } else { faces[c] };
        if vtx[c] as i64 - edg[c] as i64 + f as i64 != 2 {
            return Verdict::fail(format!(
                "component {c}: V={} E={} F={f} violates Euler's formula",
                vtx[c], edg[c]
            ));
        }
    }
    Verdict::Pass
}

fn fixture_rotation(pairs: &[(&str, &[&str])]) -> RotationSystem {
    pairs
        .iter()
        .map(|(v, order)| (v.to_string(), order.iter().map(|s| s.to_string()).collect()))
        .collect()
}

/// Planar rotation system for G(2,2,1) (the square plus one diagonal).
pub fn embedding_g221() -> RotationSystem {
    fixture_rotation(&[
        ("aa", &["ab", "ba"]),
        ("ab", &["aa", "ba", "bb"]),
        ("ba", &["ab", "aa", "bb"]),
        ("bb", &["ba", "ab"]),
    ])
}

/// Planar rotation system for G(2,3,1), a 9-vertex triangulation with
/// 21 edges and 14 faces.
pub fn embedding_g231() -> RotationSystem {
    fixture_rotation(&[
        ("aa", &["ab", "ca", "ac", "ba"]),
        ("ab", &["aa", "ba", "bb", "bc", "ca"]),
        ("ac", &["ba", "aa", "ca", "cc", "cb"]),
        ("ba", &["ab", "aa", "ac", "cb", "bb"]),
        ("bb", &["bc", "ab", "ba", "cb"]),
        ("bc", &["ca", "ab", "bb", "cb", "cc"]),
        ("ca", &["ac", "aa", "ab", "bc", "cc"]),
        ("cb", &["bb", "ba", "ac", "cc", "bc"]),
        ("cc", &["cb", "ac", "ca", "bc"]),
    ])
}

/// Classification per the short-tag planarity theorem: only G(2,2,1) and
/// G(2,3,1) are non-trivially planar; every other short-tag graph gets a
/// verified bipartite witness. Long tags are out of scope (Unknown).
pub fn classify_planarity(p: &AOParams, guard: &SizeGuard) -> Result<PlanarityVerdict, AoError> {
    if p.d() == 1 {
        let g = ExplicitGraph::new(vec![Word::zeros(p.k()).render(1)], vec![]);
        return Ok(PlanarityVerdict::Planar {
            graph: g,
            embedding: RotationSystem::new(),
        });
    }
    if !p.short_tags() {
        return Ok(PlanarityVerdict::Unknown);
    }
    let triple = (p.k(), p.d(), p.s());
    if triple == (2, 2, 1) || triple == (2, 3, 1) {
        let graph = materialize(p, guard)?;
        let embedding = if triple == (2, 2, 1) {
            embedding_g221()
        } else {
            embedding_g231()
        };
        match verify_embedding(&graph, &embedding) {
            Verdict::Pass => return Ok(PlanarityVerdict::Planar { graph, embedding }),
            Verdict::Fail(r) => return Err(AoError::ConstructionFailed(r)),
        }
    }
    let witness = if p.tag_count() >= 4 {
        k33_witness(p)?
    } else {
        k44_witness(p)?
    };
    match verify_witness(&witness) {
        Verdict::Pass => Ok(PlanarityVerdict::NonPlanar { witness }),
        Verdict::Fail(r) => Err(AoError::ConstructionFailed(r)),
    }
}
