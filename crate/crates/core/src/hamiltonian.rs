//! Hamiltonian cycle construction: the inductive insertion algorithm, the
//! Eulerian-circuit route through the directed overlap graph, grid cycles,
//! and certificate verification.
//!
//! Constructors never return an unverified certificate: every cycle is
//! re-checked by [`verify_cycle`] before it leaves this module.

use crate::error::{AoError, SizeGuard, Verdict};
use crate::words::{
    enumerate_words, overlap_adjacent, prefix_tag, rotate_left, suffix_tag, AOParams, Word,
};
use std::collections::{BTreeMap, HashMap, HashSet};

/// Parameters of the grid {0,..,d-1}^k with unit-step adjacency.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridParams {
    d: usize,
    k: usize,
}

impl GridParams {
    pub fn new(d: usize, k: usize) -> Result<Self, AoError> {
        if d < 2 {
            return Err(AoError::InvalidParams(format!("grid side d={d} must be >= 2")));
        }
        if k < 2 {
            return Err(AoError::InvalidParams(format!(
                "grid dimension k={k} must be >= 2"
            )));
        }
        if d > crate::words::MAX_ALPHABET {
            return Err(AoError::InvalidParams(format!(
                "grid side d={d} exceeds {}",
                crate::words::MAX_ALPHABET
            )));
        }
        Ok(GridParams { d, k })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn vertex_count(&self) -> u128 {
        (self.d as u128).pow(self.k as u32)
    }
}

/// Adjacency in the grid: unit step in exactly one coordinate.
pub fn grid_adjacent(v: &Word, w: &Word, g: &GridParams) -> bool {
    if v.len() != g.k || w.len() != g.k {
        return false;
    }
    let mut diff = 0usize;
    for (&a, &b) in v.letters().iter().zip(w.letters()) {
        if a != b {
            if a.abs_diff(b) != 1 {
                return false;
            }
            diff += 1;
        }
    }
    diff == 1
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CycleKind {
    Ao(AOParams),
    Grid(GridParams),
}

/// An ordered vertex sequence claimed to be a Hamiltonian cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleCertificate {
    pub kind: CycleKind,
    pub vertices: Vec<Word>,
}

impl CycleCertificate {
    pub fn alphabet(&self) -> usize {
        match &self.kind {
            CycleKind::Ao(p) => p.d(),
            CycleKind::Grid(g) => g.d(),
        }
    }

    /// The de Bruijn string of an s=1 certificate: first letters of the
    /// cycle vertices, whose length-k windows spell the cycle back out.
    pub fn de_bruijn_sequence(&self) -> Result<Word, AoError> {
        match &self.kind {
            CycleKind::Ao(p) if p.s() == 1 => Ok(Word::from_raw(
                self.vertices.iter().map(|v| v.letters()[0]).collect(),
            )),
            _ => Err(AoError::Precondition(
                "circular sequence export requires an AO certificate with s=1".into(),
            )),
        }
    }
}

/// Refusal carrying the parity argument for odd-sided grids: a cycle must
/// take equally many +1 and -1 taxicab steps, impossible when d^k is odd.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityRefusal {
    pub params: GridParams,
    pub reason: String,
}

/// Accepts iff the vertices are pairwise distinct, cover the whole vertex
/// set, and every cyclically consecutive pair is adjacent under the
/// certificate's adjacency rule.
pub fn verify_cycle(cert: &CycleCertificate) -> Verdict {
    let (expected, d, k): (u128, usize, usize) = match &cert.kind {
        CycleKind::Ao(p) => (p.vertex_count(), p.d(), p.k()),
        CycleKind::Grid(g) => (g.vertex_count(), g.d(), g.k()),
    };
    if cert.vertices.len() as u128 != expected {
        return Verdict::fail(format!(
            "cycle has {} vertices, graph has {expected}",
            cert.vertices.len()
        ));
    }
    let mut seen = HashSet::with_capacity(cert.vertices.len());
    for v in &cert.vertices {
        if v.len() != k || v.letters().iter().any(|&c| c as usize >= d) {
            return Verdict::fail(format!("vertex {} is not in the graph", v.render(d)));
        }
        if !seen.insert(v.clone()) {
            return Verdict::fail(format!("duplicate vertex {}", v.render(d)));
        }
    }
    // distinct + correct count + in-range letters => full coverage
    if cert.vertices.len() == 1 {
        return Verdict::Pass;
    }
    let n = cert.vertices.len();
    for i in 0..n {
        let v = &cert.vertices[i];
        let w = &cert.vertices[(i + 1) % n];
        let adjacent = match &cert.kind {
            CycleKind::Ao(p) => match overlap_adjacent(v, w, p) {
                Ok(a) => a,
                Err(e) => return Verdict::fail(e.to_string()),
            },
            CycleKind::Grid(g) => grid_adjacent(v, w, g),
        };
        if !adjacent {
            return Verdict::fail(format!(
                "consecutive vertices {} and {} (positions {i}, {}) are not adjacent",
                v.render(d),
                w.render(d),
                (i + 1) % n
            ));
        }
    }
    Verdict::Pass
}

/// Orbit of `w` under repeated left rotation by `s`, in chain order,
/// stopping at the first repeat.
fn rotation_chain(w: &Word, s: usize) -> Vec<Word> {
    let mut chain = vec![w.clone()];
    let mut cur = rotate_left(w, s);
    while cur != *w {
        chain.push(cur.clone());
        cur = rotate_left(&cur, s);
    }
    chain
}

/// Hamiltonian cycle by induction on the alphabet size: each stage inserts
/// the rotation chains of the words that use the newest letter, anchored
/// after the vertex that is all first-letters except for the tag agreeing
/// with the chain head.
pub fn insertion_hamiltonian(p: &AOParams, guard: &SizeGuard) -> Result<CycleCertificate, AoError> {
    guard.check(p.vertex_count())?;
    let k = p.k();
    let s = p.s();
    let start = Word::zeros(k);

    // cyclic successor map; starts as the single-vertex cycle of G(k,1,s)
    let mut next: HashMap<Word, Word> = HashMap::new();
    next.insert(start.clone(), start.clone());

    for m in 2..=p.d() {
        let new_letter = (m - 1) as u8;
        // stage c: words over the m-letter alphabet with exactly c new letters
        let mut by_count: Vec<BTreeMap<Word, Vec<Word>>> = vec![BTreeMap::new(); k + 1];
        for w in enumerate_words(k, m, &SizeGuard::unlimited())? {
            let c = w.letters().iter().filter(|&&x| x == new_letter).count();
            if c == 0 {
                continue;
            }
            // qualifying representative: new letter within the last s positions
            if !w.letters()[k - s..].contains(&new_letter) {
                continue;
            }
            let chain = rotation_chain(&w, s);
            let canonical = chain.iter().min().unwrap().clone();
            let entry = by_count[c].entry(canonical).or_default();
            // lex-smallest qualifying member wins as representative
            if entry.is_empty() || w < entry[0] {
                *entry = chain;
            }
        }
        for classes in by_count.iter().skip(1) {
            for chain in classes.values() {
                let rep = &chain[0];
                let mut anchor = Word::zeros(s);
                anchor = anchor.concat(&prefix_tag(rep, p));
                let after = next.get(&anchor).cloned().ok_or_else(|| {
                    AoError::ConstructionFailed(format!(
                        "anchor {} for chain head {} is not in the list yet",
                        anchor.render(m),
                        rep.render(m)
                    ))
                })?;
                // splice the chain between the anchor and its old successor
                let mut prev = anchor;
                for link in chain {
                    next.insert(prev, link.clone());
                    prev = link.clone();
                }
                next.insert(prev, after);
            }
        }
    }

    // walk the cycle out of the successor map
    let mut vertices = Vec::with_capacity(p.vertex_count() as usize);
    let mut cur = start.clone();
    loop {
        vertices.push(cur.clone());
        cur = next
            .get(&cur)
            .cloned()
            .ok_or_else(|| AoError::ConstructionFailed("successor chain broke".into()))?;
        if cur == start {
            break;
        }
        if vertices.len() as u128 > p.vertex_count() {
            return Err(AoError::ConstructionFailed(
                "successor walk exceeded the vertex count".into(),
            ));
        }
    }

    let cert = CycleCertificate {
        kind: CycleKind::Ao(*p),
        vertices,
    };
    match verify_cycle(&cert) {
        Verdict::Pass => Ok(cert),
        Verdict::Fail(r) => Err(AoError::ConstructionFailed(r)),
    }
}

/// Hamiltonian cycle via an Eulerian circuit of the directed multigraph on
/// (k-s)-words with one edge per k-word. Hierholzer's method with
/// lex-smallest-unused-edge selection, starting at the all-zero vertex.
pub fn eulerian_hamiltonian(p: &AOParams, guard: &SizeGuard) -> Result<CycleCertificate, AoError> {
    if 2 * p.s() > p.k() {
        return Err(AoError::Precondition(format!(
            "eulerian construction needs s <= floor(k/2), got s={} k={}",
            p.s(),
            p.k()
        )));
    }
    if p.d() < 2 {
        return Err(AoError::Precondition("eulerian construction needs d >= 2".into()));
    }
    guard.check(p.vertex_count())?;
    let d = p.d();
    let t = p.t();
    let n_dir = (d as u128).pow(t as u32) as usize;

    // out-edges per directed vertex, each edge a k-word label; lex-sorted
    // because edges out of (a_1..a_t) are labels (a_1..a_t)+suffix.
    let mut out: Vec<Vec<Word>> = vec![Vec::new(); n_dir];
    for label in enumerate_words(p.k(), d, guard)? {
        let from = prefix_tag(&label, p).rank(d) as usize;
        out[from].push(label);
    }

    let mut next_edge = vec![0usize; n_dir];
    let mut circuit: Vec<Word> = Vec::with_capacity(p.vertex_count() as usize);
    let mut stack: Vec<(usize, Option<Word>)> = vec![(0, None)];
    while let Some(&(v, _)) = stack.last() {
        if next_edge[v] < out[v].len() {
            let label = out[v][next_edge[v]].clone();
            next_edge[v] += 1;
            let to = suffix_tag(&label, p).rank(d) as usize;
            stack.push((to, Some(label)));
        } else {
            let (_, label) = stack.pop().unwrap();
            if let Some(l) = label {
                circuit.push(l);
            }
        }
    }
    circuit.reverse();
    if circuit.len() as u128 != p.vertex_count() {
        return Err(AoError::ConstructionFailed(format!(
            "eulerian circuit used {} of {} edges; directed graph not connected",
            circuit.len(),
            p.vertex_count()
        )));
    }
    let cert = CycleCertificate {
        kind: CycleKind::Ao(*p),
        vertices: circuit,
    };
    match verify_cycle(&cert) {
        Verdict::Pass => Ok(cert),
        Verdict::Fail(r) => Err(AoError::ConstructionFailed(r)),
    }
}

/// In- and out-degrees of the directed multigraph used by
/// [`eulerian_hamiltonian`]; both equal d^s at every vertex.
pub fn directed_degrees(p: &AOParams, guard: &SizeGuard) -> Result<Vec<(u128, u128)>, AoError> {
    if 2 * p.s() > p.k() {
        return Err(AoError::Precondition(format!(
            "directed construction needs s <= floor(k/2), got s={} k={}",
            p.s(),
            p.k()
        )));
    }
    guard.check(p.vertex_count())?;
    let d = p.d();
    let n_dir = (d as u128).pow(p.t() as u32) as usize;
    let mut degs = vec![(0u128, 0u128); n_dir];
    for label in enumerate_words(p.k(), d, guard)? {
        let from = prefix_tag(&label, p).rank(d) as usize;
        let to = suffix_tag(&label, p).rank(d) as usize;
        degs[from].1 += 1;
        degs[to].0 += 1;
    }
    Ok(degs)
}

fn base_grid_cycle(d: usize) -> Vec<Word> {
    // d x d, d even: snake over columns 1..d-1, return up column 0
    let mut cycle = Vec::with_capacity(d * d);
    cycle.push(Word::from_raw(vec![0, 0]));
    for c in 1..d {
        cycle.push(Word::from_raw(vec![0, c as u8]));
    }
    for r in 1..d {
        let cols: Vec<usize> = if r % 2 == 1 {
            (1..d).rev().collect()
        } else {
            (1..d).collect()
        };
        for c in cols {
            cycle.push(Word::from_raw(vec![r as u8, c as u8]));
        }
    }
    for r in (1..d).rev() {
        cycle.push(Word::from_raw(vec![r as u8, 0]));
    }
    cycle
}

/// The inductive boustrophedon Hamiltonian cycle of the d^k grid when d is
/// even; the parity refusal otherwise.
pub fn grid_hamiltonian(
    g: &GridParams,
    guard: &SizeGuard,
) -> Result<Result<CycleCertificate, ParityRefusal>, AoError> {
    if g.d() % 2 == 1 {
        return Ok(Err(ParityRefusal {
            params: *g,
            reason: format!(
                "the {}^{} grid has an odd number of vertices; a Hamiltonian cycle \
                 takes equally many +1 and -1 taxicab steps, so its length is even",
                g.d(),
                g.k()
            ),
        }));
    }
    guard.check(g.vertex_count())?;
    let d = g.d();
    let mut cycle = base_grid_cycle(d);
    for _ in 3..=g.k() {
        // extend each vertex v_i with the path coordinate, alternating direction
        let mut bigger = Vec::with_capacity(cycle.len() * d);
        for (i, v) in cycle.iter().enumerate() {
            let coords: Vec<usize> = if i % 2 == 0 {
                (0..d).collect()
            } else {
                (0..d).rev().collect()
            };
            for w in coords {
                let mut letters = v.letters().to_vec();
                letters.push(w as u8);
                bigger.push(Word::from_raw(letters));
            }
        }
        cycle = bigger;
    }
    let cert = CycleCertificate {
        kind: CycleKind::Grid(*g),
        vertices: cycle,
    };
    match verify_cycle(&cert) {
        Verdict::Pass => Ok(Ok(cert)),
        Verdict::Fail(r) => Err(AoError::ConstructionFailed(r)),
    }
}
