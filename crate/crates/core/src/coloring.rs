//! Proper colorings of alphabet overlap graphs: the exact construction for
//! short tags, the column coloring of AO matrix graphs, the recursive
//! upper-bound coloring for long tags, verification, and an exact
//! branch-and-bound chromatic oracle for desk-scale graphs.

use crate::error::{AoError, SizeGuard, Verdict};
use crate::graph::{neighbors, AOMatrixGraph, ExplicitGraph};
use crate::words::{enumerate_words, prefix_tag, suffix_tag, AOParams, Word};
use std::collections::BTreeMap;

/// Default cap for the exact chromatic oracle.
pub const CHROMATIC_ORACLE_MAX_VERTICES: usize = 64;

/// Which graph a coloring is defined over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ColoringDomain {
    Ao(AOParams),
    /// AO matrix graph of the given order; vertices are the off-diagonal
    /// length-2 words (i-1, j-1).
    Matrix(usize),
}

/// A total color assignment with its palette size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    pub assignment: BTreeMap<Word, usize>,
    pub palette: usize,
    pub domain: ColoringDomain,
}

impl Coloring {
    pub fn alphabet(&self) -> usize {
        match self.domain {
            ColoringDomain::Ao(p) => p.d(),
            ColoringDomain::Matrix(n) => n,
        }
    }
}

/// The exact coloring for t <= k/2: d^t column colors indexed by the
/// suffix tag, plus d^(k-2t) clique colors (offset by d^t) for the words
/// whose leading and trailing tags agree.
pub fn theorem3_coloring(p: &AOParams, guard: &SizeGuard) -> Result<Coloring, AoError> {
    if !p.short_tags() {
        return Err(AoError::Precondition(format!(
            "exact coloring needs t <= k/2, got t={} k={}",
            p.t(),
            p.k()
        )));
    }
    guard.check(p.vertex_count())?;
    let d = p.d();
    let t = p.t();
    let column_colors = (d as u128).pow(t as u32) as usize;
    let clique_colors = (d as u128).pow((p.k() - 2 * t) as u32) as usize;
    let mut assignment = BTreeMap::new();
    for w in enumerate_words(p.k(), d, guard)? {
        let lead = prefix_tag(&w, p);
        let trail = suffix_tag(&w, p);
        let color = if lead == trail {
            let middle = w.slice(t, p.k() - t);
            column_colors + middle.rank(d) as usize
        } else {
            trail.rank(d) as usize
        };
        assignment.insert(w, color);
    }
    Ok(Coloring {
        assignment,
        palette: column_colors + clique_colors,
        domain: ColoringDomain::Ao(*p),
    })
}

/// Column coloring of the AO matrix graph: v_ij gets color j. Proper
/// because no two vertices in one column are adjacent; palette n.
pub fn ao_matrix_coloring(n: usize) -> Result<Coloring, AoError> {
    let m = AOMatrixGraph::new(n)?;
    let mut assignment = BTreeMap::new();
    for v in m.vertices() {
        assignment.insert(m.vertex_word(v), v.1 - 1);
    }
    Ok(Coloring {
        assignment,
        palette: n,
        domain: ColoringDomain::Matrix(n),
    })
}

/// Palette size of [`recursive_coloring`]:
/// f(k,t) = d^(k-2t) + d^t when t <= k/2, else 1 + f(t, 2t-k).
pub fn recursive_palette(k: usize, d: usize, s: usize) -> u128 {
    let t = k - s;
    if 2 * t <= k {
        (d as u128).pow((k - 2 * t) as u32) + (d as u128).pow(t as u32)
    } else {
        // the column colors come from G(t,d,k-t), same shift s
        1 + recursive_palette(t, d, s)
    }
}

/// The recursive upper-bound coloring for long tags: one fresh color for
/// the words whose doubled-tag image is diagonal, and column colors pulled
/// back through a recursive coloring of G(t,d,k-t), which columns may share
/// exactly when their tags are non-adjacent there.
pub fn recursive_coloring(p: &AOParams, guard: &SizeGuard) -> Result<Coloring, AoError> {
    guard.check(p.vertex_count())?;
    if p.short_tags() {
        return theorem3_coloring(p, guard);
    }
    // G(t,d,k-t): word length t, shift k-t = s
    let inner_params = AOParams::new(p.t(), p.d(), p.s())?;
    let inner = recursive_coloring(&inner_params, guard)?;
    let mut assignment = BTreeMap::new();
    for w in enumerate_words(p.k(), p.d(), guard)? {
        let lead = prefix_tag(&w, p);
        let trail = suffix_tag(&w, p);
        let color = if lead == trail {
            0
        } else {
            1 + inner.assignment[&trail]
        };
        assignment.insert(w, color);
    }
    Ok(Coloring {
        assignment,
        palette: 1 + inner.palette,
        domain: ColoringDomain::Ao(*p),
    })
}

/// Accepts iff the assignment covers every vertex and no edge joins two
/// same-colored vertices; reports the first offending vertex or edge.
pub fn verify_coloring(c: &Coloring, guard: &SizeGuard) -> Result<Verdict, AoError> {
    match c.domain {
        ColoringDomain::Ao(p) => {
            guard.check(p.vertex_count())?;
            for w in enumerate_words(p.k(), p.d(), guard)? {
                let Some(&color) = c.assignment.get(&w) else {
                    return Ok(Verdict::fail(format!("vertex {} has no color", w.render(p.d()))));
                };
                if color >= c.palette {
                    return Ok(Verdict::fail(format!(
                        "vertex {} has color {color} outside palette {}",
                        w.render(p.d()),
                        c.palette
                    )));
                }
                for nb in neighbors(&w, &p)? {
                    if c.assignment.get(&nb) == Some(&color) {
                        return Ok(Verdict::fail(format!(
                            "edge {} -- {} is monochromatic in color {color}",
                            w.render(p.d()),
                            nb.render(p.d())
                        )));
                    }
                }
            }
            Ok(Verdict::Pass)
        }
        ColoringDomain::Matrix(n) => {
            let m = AOMatrixGraph::new(n)?;
            let verts = m.vertices();
            for &v in &verts {
                let word = m.vertex_word(v);
                let Some(&color) = c.assignment.get(&word) else {
                    return Ok(Verdict::fail(format!("vertex v{}_{} has no color", v.0, v.1)));
                };
                if color >= c.palette {
                    return Ok(Verdict::fail(format!(
                        "vertex v{}_{} has color {color} outside palette {}",
                        v.0, v.1, c.palette
                    )));
                }
            }
            for &a in &verts {
                for &b in &verts {
                    if a < b
                        && m.adjacent(a, b)
                        && c.assignment[&m.vertex_word(a)] == c.assignment[&m.vertex_word(b)]
                    {
                        return Ok(Verdict::fail(format!(
                            "edge v{}_{} -- v{}_{} is monochromatic",
                            a.0, a.1, b.0, b.1
                        )));
                    }
                }
            }
            Ok(Verdict::Pass)
        }
    }
}

/// Greedy clique grown from each vertex in degree order; a deterministic
/// lower bound used to seed the oracle.
fn greedy_clique(adj: &[Vec<bool>], order: &[usize]) -> Vec<usize> {
    let mut best: Vec<usize> = Vec::new();
    for &start in order {
        let mut clique = vec![start];
        for &cand in order {
            if cand != start && clique.iter().all(|&m| adj[m][cand]) {
                clique.push(cand);
            }
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best
}

/// Bounded max-clique search (branch and bound, node budget); the result is
/// always a valid clique, hence a valid chromatic lower bound.
pub fn max_clique_bounded(g: &ExplicitGraph, node_budget: usize) -> Vec<usize> {
    let n = g.vertex_count();
    if n == 0 {
        return Vec::new();
    }
    let adj = adjacency_matrix(g);
    let mut order: Vec<usize> = (0..n).collect();
    let deg = g.degrees();
    order.sort_by_key(|&v| (std::cmp::Reverse(deg[v]), v));
    let mut best = greedy_clique(&adj, &order);
    let mut budget = node_budget;
    let mut current = Vec::new();
    let cands: Vec<usize> = order.clone();
    fn expand(
        adj: &[Vec<bool>],
        cands: &[usize],
        current: &mut Vec<usize>,
        best: &mut Vec<usize>,
        budget: &mut usize,
    ) {
        if *budget == 0 {
            return;
        }
        *budget -= 1;
        if current.len() > best.len() {
            *best = current.clone();
        }
        if current.len() + cands.len() <= best.len() {
            return;
        }
        for (i, &v) in cands.iter().enumerate() {
            if current.len() + (cands.len() - i) <= best.len() {
                return;
            }
            current.push(v);
            let rest: Vec<usize> = cands[i + 1..]
                .iter()
                .copied()
                .filter(|&u| adj[v][u])
                .collect();
            expand(adj, &rest, current, best, budget);
            current.pop();
        }
    }
    expand(&adj, &cands, &mut current, &mut best, &mut budget);
    best
}

fn adjacency_matrix(g: &ExplicitGraph) -> Vec<Vec<bool>> {
    let n = g.vertex_count();
    let mut adj = vec![vec![false; n]; n];
    for &(u, v) in &g.edges {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    adj
}

fn can_color(
    adj: &[Vec<bool>],
    order: &[usize],
    num_colors: usize,
    colors: &mut Vec<usize>,
    pos: usize,
) -> bool {
    if pos == order.len() {
        return true;
    }
    let v = order[pos];
    let max_used = order[..pos].iter().map(|&u| colors[u] + 1).max().unwrap_or(0);
    // first-unused-color symmetry cap: trying more than one fresh color is
    // equivalent up to renaming
    let limit = num_colors.min(max_used + 1);
    for color in 0..limit {
        if order[..pos]
            .iter()
            .all(|&u| !adj[v][u] || colors[u] != color)
        {
            colors[v] = color;
            if can_color(adj, order, num_colors, colors, pos + 1) {
                return true;
            }
        }
    }
    false
}

/// Exact chromatic number by branch and bound: vertices in descending
/// degree order, colors tried in index order, seeded by a greedy clique.
pub fn chromatic_number_exact_oracle(
    g: &ExplicitGraph,
    max_vertices: usize,
) -> Result<usize, AoError> {
    let n = g.vertex_count();
    if n > max_vertices {
        return Err(AoError::SizeGuard {
            needed: n as u128,
            limit: max_vertices as u128,
        });
    }
    if n == 0 {
        return Ok(0);
    }
    let adj = adjacency_matrix(g);
    let deg = g.degrees();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(deg[v]), v));
    let clique = greedy_clique(&adj, &order);
    // put the seed clique first: it pins its colors immediately
    let mut rest: Vec<usize> = order.iter().copied().filter(|v| !clique.contains(v)).collect();
    let mut order = clique.clone();
    order.append(&mut rest);
    let mut colors = vec![0usize; n];
    for target in clique.len()..=n {
        if can_color(&adj, &order, target, &mut colors, 0) {
            return Ok(target);
        }
    }
    unreachable!("n colors always suffice")
}

/// An optimal proper coloring found by the same search as the oracle.
pub fn optimal_coloring_oracle(
    g: &ExplicitGraph,
    max_vertices: usize,
) -> Result<(usize, Vec<usize>), AoError> {
    let chi = chromatic_number_exact_oracle(g, max_vertices)?;
    let n = g.vertex_count();
    let adj = adjacency_matrix(g);
    let deg = g.degrees();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(deg[v]), v));
    let mut colors = vec![0usize; n];
    if n > 0 {
        assert!(can_color(&adj, &order, chi, &mut colors, 0));
    }
    Ok((chi, colors))
}

/// Exact value, or certified bounds, for the chromatic number of G(k,d,s).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChromaticReport {
    pub exact: Option<u128>,
    pub lower: u128,
    pub upper: u128,
    pub notes: Vec<String>,
}

/// For short tags the exact value d^(k-2t) + d^t; for long tags the best
/// constructive upper bound together with a clique (or oracle) lower bound.
pub fn chromatic_report(
    p: &AOParams,
    use_oracle: bool,
    guard: &SizeGuard,
) -> Result<ChromaticReport, AoError> {
    let d = p.d() as u128;
    let t = p.t() as u32;
    if p.short_tags() {
        let exact = d.pow((p.k() - 2 * p.t()) as u32) + d.pow(t);
        return Ok(ChromaticReport {
            exact: Some(exact),
            lower: exact,
            upper: exact,
            notes: vec![format!("exact for t <= k/2: d^(k-2t) + d^t = {exact}")],
        });
    }
    let single_step = 1 + d.pow(t);
    let recursive = recursive_palette(p.k(), p.d(), p.s());
    let mut upper = single_step.min(recursive);
    let mut notes = vec![
        format!("single tag-doubling step bound: 1 + d^t = {single_step}"),
        format!("recursive bound: {recursive}"),
    ];
    let mut lower = if p.d() >= 2 { 2 } else { 1 };
    let mut exact = None;
    if use_oracle {
        let g = crate::graph::materialize(p, guard)?;
        let chi = chromatic_number_exact_oracle(&g, CHROMATIC_ORACLE_MAX_VERTICES)? as u128;
        notes.push(format!("exact oracle: chi = {chi}"));
        lower = chi;
        upper = chi;
        exact = Some(chi);
    } else if p.vertex_count() <= 4096 {
        let g = crate::graph::materialize(p, guard)?;
        let clique = max_clique_bounded(&g, 200_000);
        if clique.len() as u128 > lower {
            lower = clique.len() as u128;
        }
        notes.push(format!("clique lower bound: {}", clique.len()));
        if lower == upper {
            exact = Some(lower);
        }
    }
    Ok(ChromaticReport {
        exact,
        lower,
        upper,
        notes,
    })
}
