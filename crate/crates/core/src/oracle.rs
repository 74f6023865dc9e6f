//! Exhaustive ground truth for small graphs: every minimal dominating set,
//! the upper domination number, and the independence number.
//!
//! Vertex sets are `u32` bitmasks here, which caps these routines at
//! [`ORACLE_MAX_VERTICES`] vertices.

use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::model::{GammaCertificate, Provenance};

pub const ORACLE_MAX_VERTICES: usize = 24;

fn check_size(g: &Graph, limit: usize) -> Result<()> {
    if g.n() > limit.min(ORACLE_MAX_VERTICES) {
        Err(Error::TooLarge {
            n: g.n(),
            limit: limit.min(ORACLE_MAX_VERTICES),
        })
    } else {
        Ok(())
    }
}

fn closed_masks(g: &Graph) -> Vec<u32> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(1u32 << v, |m, &w| m | 1 << w))
        .collect()
}

struct MdsSearch<'a, F> {
    closed: &'a [u32],
    visit: F,
}

impl<F: FnMut(u32) -> ControlFlow<()>> MdsSearch<'_, F> {
    /// Vertices `0..next` are decided; `chosen` holds the ones taken.
    fn extend(&mut self, next: usize, chosen: u32) -> ControlFlow<()> {
        let n = self.closed.len();
        let open = if next >= 32 { 0 } else { !0u32 << next } & low_mask(n);
        // someone can no longer be dominated
        if self.closed.iter().any(|&nb| nb & (chosen | open) == 0) {
            return ControlFlow::Continue(());
        }
        // a chosen vertex has lost every private neighbor; adding more only
        // shrinks private neighborhoods
        let mut rest = chosen;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let mut nb = self.closed[v];
            let mut has_private = false;
            while nb != 0 {
                let w = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                if self.closed[w] & chosen == 1 << v {
                    has_private = true;
                    break;
                }
            }
            if !has_private {
                return ControlFlow::Continue(());
            }
        }
        if next == n {
            return (self.visit)(chosen);
        }
        self.extend(next + 1, chosen)?;
        self.extend(next + 1, chosen | 1 << next)
    }
}

fn low_mask(n: usize) -> u32 {
    if n >= 32 {
        !0
    } else {
        (1u32 << n) - 1
    }
}

/// Calls `visit` with the bitmask of each minimal dominating set, in no
/// particular order, until it breaks.
pub fn for_each_minimal_dominating(
    g: &Graph,
    visit: impl FnMut(u32) -> ControlFlow<()>,
) -> Result<()> {
    check_size(g, ORACLE_MAX_VERTICES)?;
    let closed = closed_masks(g);
    let mut search = MdsSearch {
        closed: &closed,
        visit,
    };
    let _ = search.extend(0, 0);
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumeration {
    /// Sorted by size, then lexicographically.
    pub sets: Vec<VertexSet>,
    /// True when `cap` stopped the search early.
    pub truncated: bool,
}

/// Every minimal dominating set of `g`, at most `cap` of them.
pub fn enumerate_minimal_dominating(g: &Graph, cap: usize) -> Result<Enumeration> {
    let mut sets = Vec::new();
    let mut truncated = false;
    for_each_minimal_dominating(g, |mask| {
        if sets.len() == cap {
            truncated = true;
            return ControlFlow::Break(());
        }
        sets.push(VertexSet::from_mask(u64::from(mask)));
        ControlFlow::Continue(())
    })?;
    sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(Enumeration { sets, truncated })
}

/// Largest minimal dominating set; ties go to the lexicographically smallest.
pub fn gamma_oracle(g: &Graph) -> Result<GammaCertificate> {
    let mut best: Option<VertexSet> = None;
    for_each_minimal_dominating(g, |mask| {
        let size = mask.count_ones() as usize;
        let keep = match &best {
            None => true,
            Some(b) if size > b.len() => true,
            Some(b) if size == b.len() => VertexSet::from_mask(u64::from(mask)) < *b,
            _ => false,
        };
        if keep {
            best = Some(VertexSet::from_mask(u64::from(mask)));
        }
        ControlFlow::Continue(())
    })?;
    let witness = best.expect("every graph has a minimal dominating set");
    GammaCertificate::new(g, witness, Provenance::Oracle)
}

/// Independence number by branching on a vertex of maximum remaining degree.
pub fn alpha_oracle(g: &Graph) -> Result<usize> {
    check_size(g, ORACLE_MAX_VERTICES)?;
    let open: Vec<u32> = closed_masks(g)
        .iter()
        .enumerate()
        .map(|(v, &m)| m & !(1 << v))
        .collect();
    Ok(max_independent(&open, low_mask(g.n())))
}

fn max_independent(open: &[u32], candidates: u32) -> usize {
    if candidates == 0 {
        return 0;
    }
    let mut pick = 0;
    let mut pick_deg = 0;
    let mut rest = candidates;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let deg = (open[v] & candidates).count_ones();
        if deg <= 1 {
            // taking a vertex of degree <= 1 is always safe
            return 1 + max_independent(open, candidates & !(open[v] | 1 << v));
        }
        if deg > pick_deg {
            pick = v;
            pick_deg = deg;
        }
    }
    let with = 1 + max_independent(open, candidates & !(open[pick] | 1 << pick));
    let without = max_independent(open, candidates & !(1 << pick));
    with.max(without)
}

/// Minimal dominating set found by dropping vertices from `V` in id order
/// while the rest still dominates. Works at any size.
pub fn greedy_minimal_dominating(g: &Graph) -> VertexSet {
    let n = g.n();
    let mut count: Vec<usize> = (0..n).map(|v| g.degree(v) + 1).collect();
    let mut keep = vec![true; n];
    for (v, kept) in keep.iter_mut().enumerate() {
        let closed = g.closed_neighbors(v);
        if closed.iter().all(|&w| count[w] >= 2) {
            *kept = false;
            for w in closed {
                count[w] -= 1;
            }
        }
    }
    (0..n).filter(|&v| keep[v]).collect()
}
