//! Dominating sets of G(k,d,s) for short tags: the tag-times-anchor
//! construction of size d^t, a verifier, and an exact exhaustive oracle.

use crate::error::{AoError, SizeGuard, Verdict};
use crate::graph::{neighbors, ExplicitGraph};
use crate::words::{enumerate_words, AOParams, Word};
use std::collections::BTreeSet;

/// Default cap for the exact domination oracle.
pub const DOMINATION_ORACLE_MAX_VERTICES: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominatingSet {
    pub members: BTreeSet<Word>,
    pub params: AOParams,
}

/// The set { tag . x : all d^t tags } for a fixed anchor x of length s.
/// Dominates the whole graph when t <= k/2; cardinality exactly d^t.
pub fn dominating_set_construct(
    p: &AOParams,
    anchor: &Word,
    guard: &SizeGuard,
) -> Result<DominatingSet, AoError> {
    // d = 1 is a single vertex; the construction is trivially valid there
    if !p.short_tags() && p.d() > 1 {
        return Err(AoError::Precondition(format!(
            "domination construction needs t <= k/2, got t={} k={}",
            p.t(),
            p.k()
        )));
    }
    if anchor.len() != p.s() {
        return Err(AoError::Precondition(format!(
            "anchor length {} must equal s={}",
            anchor.len(),
            p.s()
        )));
    }
    if let Some(&bad) = anchor.letters().iter().find(|&&c| c as usize >= p.d()) {
        return Err(AoError::InvalidWord(format!(
            "anchor letter {bad} not below alphabet size {}",
            p.d()
        )));
    }
    guard.check(p.tag_count())?;
    let members: BTreeSet<Word> = enumerate_words(p.t(), p.d(), guard)?
        .map(|tag| tag.concat(anchor))
        .collect();
    Ok(DominatingSet {
        members,
        params: *p,
    })
}

/// Accepts iff every vertex is in the set or adjacent to a member; reports
/// the first uncovered vertex otherwise.
pub fn verify_dominating(ds: &DominatingSet, guard: &SizeGuard) -> Result<Verdict, AoError> {
    let p = &ds.params;
    guard.check(p.vertex_count())?;
    for m in &ds.members {
        p.check_word(m)?;
    }
    for v in enumerate_words(p.k(), p.d(), guard)? {
        if ds.members.contains(&v) {
            continue;
        }
        if !neighbors(&v, p)?.iter().any(|nb| ds.members.contains(nb)) {
            return Ok(Verdict::fail(format!(
                "vertex {} is neither in the set nor adjacent to it",
                v.render(p.d())
            )));
        }
    }
    Ok(Verdict::Pass)
}

/// Visits the r-subsets of {0,..,n-1} in colexicographic order until the
/// callback returns true; reports whether any subset was accepted.
fn any_subset_colex(n: usize, r: usize, accept: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    // subsets with maximum `top` come before all subsets with a larger maximum
    fn rec(n: usize, r: usize, accept: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if r == 0 {
            return accept(&[]);
        }
        for top in (r - 1)..n {
            let mut with_top = |sub: &[usize]| {
                let mut full = sub.to_vec();
                full.push(top);
                accept(&full)
            };
            if rec(top, r - 1, &mut with_top) {
                return true;
            }
        }
        false
    }
    rec(n, r, accept)
}

/// Minimum dominating set size by exhaustive search in increasing
/// cardinality, subsets visited in colex order within each size.
pub fn domination_number_exact_oracle(
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
    let adj = g.adjacency();
    for size in 1..=n {
        let mut found = false;
        any_subset_colex(n, size, &mut |subset| {
            let mut covered = vec![false; n];
            for &v in subset {
                covered[v] = true;
                for &u in &adj[v] {
                    covered[u] = true;
                }
            }
            if covered.iter().all(|&c| c) {
                found = true;
                true
            } else {
                false
            }
        });
        if found {
            return Ok(size);
        }
    }
    unreachable!("the full vertex set always dominates")
}
