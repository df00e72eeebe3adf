//! Implicit AO graph model: neighbor oracle, degree/edge counts, AO matrix
//! graphs, the tag-doubling embedding, and explicit materialization with
//! DOT / edge-list / JSON export.

use crate::error::{AoError, SizeGuard};
use crate::words::{enumerate_words, AOParams, Word};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// Exact neighbor set of `v` in G(k,d,s), sorted lexicographically.
///
/// Candidates are the words extending v's suffix tag on the right and the
/// words extending v's prefix tag on the left; there are at most 2*d^s.
pub fn neighbors(v: &Word, p: &AOParams) -> Result<Vec<Word>, AoError> {
    p.check_word(v)?;
    let t = p.t();
    let s = p.s();
    let mut out = BTreeSet::new();
    let guard = SizeGuard::unlimited();
    for ext in enumerate_words(s, p.d(), &guard)? {
        // suffix_t(v) = prefix_t(w): w = v[s..] . ext
        let w = Word::from_raw(
            v.letters()[s..]
                .iter()
                .chain(ext.letters())
                .copied()
                .collect(),
        );
        if w != *v {
            out.insert(w);
        }
        // prefix_t(v) = suffix_t(w): w = ext . v[..t]
        let w = Word::from_raw(
            ext.letters()
                .iter()
                .chain(&v.letters()[..t])
                .copied()
                .collect(),
        );
        if w != *v {
            out.insert(w);
        }
    }
    Ok(out.into_iter().collect())
}

/// |E| computed the slow way: sum all degrees via the oracle and halve.
pub fn edge_count_enumerated(p: &AOParams, guard: &SizeGuard) -> Result<u128, AoError> {
    guard.check(p.vertex_count())?;
    let mut degree_sum: u128 = 0;
    for v in enumerate_words(p.k(), p.d(), guard)? {
        degree_sum += neighbors(&v, p)?.len() as u128;
    }
    Ok(degree_sum / 2)
}

/// Closed form for the edge count of G(k,d,1), k >= 2, d >= 2.
pub fn edge_count_formula_s1(k: usize, d: usize) -> u128 {
    let d = d as u128;
    let dk = d.pow(k as u32);
    (2 * d * (dk - d - d * (d - 1)) + (2 * d - 1) * d * (d - 1) + (2 * d - 2) * d) / 2
}

/// Explicit vertex/edge list; the materialization target for oracles and export.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExplicitGraph {
    pub labels: Vec<String>,
    /// Simple undirected edges, smaller index first, sorted.
    pub edges: Vec<(usize, usize)>,
    pub params: Option<AOParams>,
}

impl ExplicitGraph {
    pub fn new(labels: Vec<String>, mut edges: Vec<(usize, usize)>) -> Self {
        for e in edges.iter_mut() {
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        edges.sort_unstable();
        edges.dedup();
        edges.retain(|e| e.0 != e.1);
        ExplicitGraph {
            labels,
            edges,
            params: None,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.labels.len()];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in adj.iter_mut() {
            list.sort_unstable();
        }
        adj
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.labels.len()];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

/// The AO matrix graph of order n: vertices v_ij (i != j, 1-based), with an
/// edge between v_ij and v_xy iff x = j or i = y. Isomorphic to G(2,n,1)
/// minus nothing: the off-diagonal words of length 2 over an n-letter
/// alphabet under v_ij <-> (i-1, j-1).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AOMatrixGraph {
    n: usize,
}

impl AOMatrixGraph {
    pub fn new(n: usize) -> Result<Self, AoError> {
        if n < 2 || n > crate::words::MAX_ALPHABET {
            return Err(AoError::InvalidParams(format!(
                "AO matrix graph order n={n} must be in 2..={}",
                crate::words::MAX_ALPHABET
            )));
        }
        Ok(AOMatrixGraph { n })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Vertices as 1-based (i, j) pairs with i != j, row-major.
    pub fn vertices(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.n * (self.n - 1));
        for i in 1..=self.n {
            for j in 1..=self.n {
                if i != j {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn adjacent(&self, a: (usize, usize), b: (usize, usize)) -> bool {
        a != b && (b.0 == a.1 || a.0 == b.1)
    }

    /// The vertex v_ij as the word (i-1, j-1) over an n-letter alphabet.
    pub fn vertex_word(&self, (i, j): (usize, usize)) -> Word {
        Word::from_raw(vec![(i - 1) as u8, (j - 1) as u8])
    }

    pub fn to_explicit(&self) -> ExplicitGraph {
        let verts = self.vertices();
        let labels: Vec<String> = verts
            .iter()
            .map(|&v| self.vertex_word(v).render(self.n))
            .collect();
        let mut edges = Vec::new();
        for (a, &va) in verts.iter().enumerate() {
            for (b, &vb) in verts.iter().enumerate().skip(a + 1) {
                if self.adjacent(va, vb) {
                    edges.push((a, b));
                }
            }
        }
        ExplicitGraph::new(labels, edges)
    }
}

/// Builds the AO matrix graph of order n as an explicit graph.
pub fn ao_matrix_graph(n: usize) -> Result<ExplicitGraph, AoError> {
    Ok(AOMatrixGraph::new(n)?.to_explicit())
}

/// The tag-doubling map xmz -> xmmz embedding G(k,d,s) into G(2t,d,t) when
/// t > k/2. Injective and adjacency-preserving in both directions.
pub fn reduced_embedding(v: &Word, p: &AOParams) -> Result<Word, AoError> {
    if p.short_tags() {
        return Err(AoError::Precondition(format!(
            "reduced embedding needs t > k/2, got t={} k={}",
            p.t(),
            p.k()
        )));
    }
    p.check_word(v)?;
    let s = p.s(); // = k - t
    let t = p.t();
    let x = v.slice(0, s);
    let m = v.slice(s, t);
    let z = v.slice(t, p.k());
    Ok(x.concat(&m).concat(&m).concat(&z))
}

/// Materializes G(k,d,s) as an explicit graph with rendered-word labels.
pub fn materialize(p: &AOParams, guard: &SizeGuard) -> Result<ExplicitGraph, AoError> {
    guard.check(p.vertex_count())?;
    let words: Vec<Word> = enumerate_words(p.k(), p.d(), guard)?.collect();
    let labels: Vec<String> = words.iter().map(|w| w.render(p.d())).collect();
    let mut edges = Vec::new();
    for (i, v) in words.iter().enumerate() {
        for nb in neighbors(v, p)? {
            let j = nb.rank(p.d()) as usize;
            if i < j {
                edges.push((i, j));
            }
        }
    }
    let mut g = ExplicitGraph::new(labels, edges);
    g.params = Some(*p);
    Ok(g)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    EdgeList,
    Json,
}

/// Serializes an explicit graph. JSON output can be read back by
/// [`parse_graph_json`]; DOT and edge-list are one-way.
pub fn export(g: &ExplicitGraph, format: ExportFormat) -> String {
    match format {
        ExportFormat::Dot => {
            let mut out = String::from("graph G {\n");
            for label in &g.labels {
                out.push_str(&format!("  \"{label}\";\n"));
            }
            for &(u, v) in &g.edges {
                out.push_str(&format!("  \"{}\" -- \"{}\";\n", g.labels[u], g.labels[v]));
            }
            out.push_str("}\n");
            out
        }
        ExportFormat::EdgeList => {
            let mut out = String::new();
            for &(u, v) in &g.edges {
                out.push_str(&format!("{} {}\n", g.labels[u], g.labels[v]));
            }
            out
        }
        ExportFormat::Json => {
            let doc = serde_json::json!({
                "schema": 1,
                "params": g.params,
                "vertices": g.labels,
                "edges": g.edges.iter().map(|&(u, v)| [u, v]).collect::<Vec<_>>(),
            });
            format!("{}\n", serde_json::to_string_pretty(&doc).unwrap())
        }
    }
}

pub fn parse_graph_json(text: &str) -> Result<ExplicitGraph, AoError> {
    let doc: serde_json::Value =
        serde_json::from_str(text).map_err(|e| AoError::Parse(e.to_string()))?;
    let labels: Vec<String> = serde_json::from_value(
        doc.get("vertices")
            .cloned()
            .ok_or_else(|| AoError::Parse("missing vertices".into()))?,
    )
    .map_err(|e| AoError::Parse(e.to_string()))?;
    let edges: Vec<(usize, usize)> = serde_json::from_value(
        doc.get("edges")
            .cloned()
            .ok_or_else(|| AoError::Parse("missing edges".into()))?,
    )
    .map_err(|e| AoError::Parse(e.to_string()))?;
    if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| u >= labels.len() || v >= labels.len()) {
        return Err(AoError::Parse(format!(
            "edge ({u},{v}) out of range for {} vertices",
            labels.len()
        )));
    }
    let mut g = ExplicitGraph::new(labels, edges);
    if let Some(p) = doc.get("params") {
        if !p.is_null() {
            g.params = Some(
                serde_json::from_value(p.clone()).map_err(|e| AoError::Parse(e.to_string()))?,
            );
        }
    }
    Ok(g)
}
