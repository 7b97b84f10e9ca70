//! Exact alpha-domination: every vertex outside S must see at least an
//! alpha fraction of its neighborhood inside S.
//!
//! Unlike beta-packing sets, alpha-dominating sets need not be proper
//! (S = V always dominates), and the family is upward closed, which makes
//! the branch-and-bound prune sound.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::packing::{
    adjacency_masks, beta_pack_number, full_mask, Method, PackingSolveResult, MASK_LIMIT,
};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DominationSolveResult {
    pub value: usize,
    pub witness: VertexSet,
    pub alpha: Rational,
}

fn check_alpha(alpha: Rational) -> Result<()> {
    if alpha.in_unit_interval() {
        Ok(())
    } else {
        Err(Error::AlphaOutOfRange(alpha))
    }
}

/// Does S alpha-dominate G? Degree-0 vertices outside S satisfy vacuously.
pub fn satisfies_alpha_domination(g: &Graph, s: &VertexSet, alpha: Rational) -> Result<bool> {
    check_alpha(alpha)?;
    let n = g.n();
    if let Some(v) = s.iter().find(|&v| v >= n) {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    let (num, den) = (alpha.num() as u128, alpha.den() as u128);
    for v in 0..n {
        if s.contains(v) {
            continue;
        }
        let deg = g.degree(v) as u128;
        let cnt = g.neighbors(v).filter(|u| s.contains(*u)).count() as u128;
        if cnt * den < num * deg {
            return Ok(false);
        }
    }
    Ok(true)
}

struct DomSearch<'a> {
    n: usize,
    adj: &'a [u64],
    need: &'a [u32],     // ceil(alpha * deg(v))
    counts: Vec<u32>,    // included neighbors of v among decided vertices
    undecided: Vec<u32>, // neighbors of v not yet decided
    best_size: usize,
    best_mask: u64,
}

impl DomSearch<'_> {
    /// Include-first depth-first search; among equal-cardinality dominating
    /// sets the lexicographically smallest completes first, so the incumbent
    /// is only replaced on a strict improvement.
    fn run(&mut self, idx: usize, s: u64, size: usize, out: u64) {
        if size >= self.best_size {
            return;
        }
        if idx == self.n {
            // Feasibility was enforced as the last neighbor of each outside
            // vertex was decided, so this is a valid dominating set.
            self.best_size = size;
            self.best_mask = s;
            return;
        }

        for include in [true, false] {
            let mut feasible = true;
            let mut nbrs = self.adj[idx];
            while nbrs != 0 {
                let v = nbrs.trailing_zeros() as usize;
                nbrs &= nbrs - 1;
                self.undecided[v] -= 1;
                if include {
                    self.counts[v] += 1;
                }
                // An already-excluded neighbor that can no longer reach its
                // quota kills the branch (upward closure: inclusions only
                // help, and they are all counted in `undecided`).
                if out >> v & 1 == 1 && self.counts[v] + self.undecided[v] < self.need[v] {
                    feasible = false;
                }
            }
            if include {
                if feasible {
                    self.run(idx + 1, s | 1 << idx, size + 1, out);
                }
            } else {
                // idx itself is now outside and must still be reachable.
                if feasible && self.counts[idx] + self.undecided[idx] >= self.need[idx] {
                    self.run(idx + 1, s, size, out | 1 << idx);
                }
            }
            let mut nbrs = self.adj[idx];
            while nbrs != 0 {
                let v = nbrs.trailing_zeros() as usize;
                nbrs &= nbrs - 1;
                self.undecided[v] += 1;
                if include {
                    self.counts[v] -= 1;
                }
            }
        }
    }
}

/// gamma_alpha(G): the minimum cardinality of an alpha-dominating set, with
/// the lexicographically smallest witness of that cardinality. S = V is
/// allowed, so a solution always exists.
pub fn alpha_domination_number(g: &Graph, alpha: Rational) -> Result<DominationSolveResult> {
    check_alpha(alpha)?;
    let n = g.n();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > MASK_LIMIT {
        return Err(Error::CapExceeded { n, cap: MASK_LIMIT });
    }
    let adj = adjacency_masks(g);
    let need: Vec<u32> = (0..n).map(|v| alpha.ceil_mul(g.degree(v)) as u32).collect();
    let undecided: Vec<u32> = (0..n).map(|v| g.degree(v) as u32).collect();
    let mut search = DomSearch {
        n,
        adj: &adj,
        need: &need,
        counts: vec![0; n],
        undecided,
        best_size: n + 1,
        best_mask: full_mask(n),
    };
    search.run(0, 0, 0, 0);
    // V itself dominates, so the search always finds something <= n.
    debug_assert!(search.best_size <= n);
    Ok(DominationSolveResult {
        value: search.best_size,
        witness: VertexSet::from_mask(search.best_mask),
        alpha,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ComparisonVerdict {
    Less,
    Equal,
    Greater,
}

impl ComparisonVerdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            ComparisonVerdict::Less => "less",
            ComparisonVerdict::Equal => "equal",
            ComparisonVerdict::Greater => "greater",
        }
    }
}

/// Side-by-side comparison of gamma_alpha and beta-pack at alpha = beta.
/// The verdict reads pack relative to gamma: Less means pack < gamma.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParameterComparison {
    pub value: Rational,
    pub gamma: DominationSolveResult,
    pub pack: PackingSolveResult,
    pub verdict: ComparisonVerdict,
}

pub fn compare_parameters(g: &Graph, value: Rational) -> Result<ParameterComparison> {
    let gamma = alpha_domination_number(g, value)?;
    let pack = beta_pack_number(g, value, Method::BranchAndBound)?;
    let verdict = match pack.value.cmp(&gamma.value) {
        std::cmp::Ordering::Less => ComparisonVerdict::Less,
        std::cmp::Ordering::Equal => ComparisonVerdict::Equal,
        std::cmp::Ordering::Greater => ComparisonVerdict::Greater,
    };
    Ok(ParameterComparison {
        value,
        gamma,
        pack,
        verdict,
    })
}
