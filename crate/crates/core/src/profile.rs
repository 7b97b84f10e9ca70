//! The beta-pack value as a step function of beta.
//!
//! As beta sweeps (0, 1] the value can only jump at ratios k/d where d is a
//! vertex degree; `interesting_betas` lists those candidates and
//! `packing_profile` computes the exact step function in one subset sweep.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::packing::{adjacency_masks, full_mask, SWEEP_LIMIT};
use crate::rational::Rational;

/// All candidate jump points: { k/d : d a vertex degree, 1 <= k <= d }
/// united with {1}, reduced and deduplicated, ascending.
///
/// An edgeless graph yields just {1}.
pub fn interesting_betas(g: &Graph) -> Result<Vec<Rational>> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut set = std::collections::BTreeSet::new();
    set.insert(Rational::one());
    for d in g.distinct_degrees() {
        for k in 1..=d {
            set.insert(Rational::new(k as u64, d as u64).expect("d > 0"));
        }
    }
    Ok(set.into_iter().collect())
}

/// Right-continuous step function beta -> beta-pack(G, beta) on (0, 1],
/// stored as its jump points only.
///
/// The value at beta is the value of the largest breakpoint <= beta, and 0
/// below the first breakpoint. A breakpoint at 0 occurs exactly when some
/// nonempty proper set has threshold 0 (disconnected graphs); the value-0
/// segment is otherwise implicit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PackingProfile {
    breakpoints: Vec<Rational>,
    values: Vec<usize>,
}

impl PackingProfile {
    pub fn breakpoints(&self) -> &[Rational] {
        &self.breakpoints
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn value_at(&self, beta: Rational) -> usize {
        let idx = self.breakpoints.partition_point(|b| *b <= beta);
        if idx == 0 {
            0
        } else {
            self.values[idx - 1]
        }
    }

    pub fn is_empty(&self) -> bool {
        self.breakpoints.is_empty()
    }
}

/// Computes the full profile by one sweep over proper subsets: t_k is the
/// minimum threshold over |S| = k, and the value at beta is the largest k
/// whose suffix-minimum threshold is <= beta.
pub fn packing_profile(g: &Graph, cap: usize) -> Result<PackingProfile> {
    let n = g.n();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let limit = cap.min(SWEEP_LIMIT);
    if n > limit {
        return Err(Error::CapExceeded { n, cap: limit });
    }

    let adj = adjacency_masks(g);
    let degs: Vec<u64> = (0..n).map(|v| g.degree(v) as u64).collect();
    let full = full_mask(n);

    // t[k] = min over proper |S| = k of max ratio (cnt/deg), as (num, den).
    let mut t: Vec<Option<(u64, u64)>> = vec![None; n];
    for s in 0..full {
        let k = s.count_ones() as usize;
        let mut th = (0u64, 1u64);
        for v in 0..n {
            if s >> v & 1 == 1 || degs[v] == 0 {
                continue;
            }
            let cnt = (adj[v] & s).count_ones() as u64;
            if cnt as u128 * th.1 as u128 > th.0 as u128 * degs[v] as u128 {
                th = (cnt, degs[v]);
            }
        }
        let better = match t[k] {
            None => true,
            Some(cur) => (th.0 as u128 * cur.1 as u128) < (cur.0 as u128 * th.1 as u128),
        };
        if better {
            t[k] = Some(th);
        }
    }

    // suffix minimum: e[k] = least beta at which some |S| >= k succeeds.
    let mut e: Vec<Rational> = t
        .iter()
        .map(|o| {
            let (p, q) = o.expect("every cardinality 0..n-1 has a proper subset");
            Rational::new(p, q).expect("deg > 0")
        })
        .collect();
    for k in (0..n - 1).rev() {
        if e[k + 1] < e[k] {
            e[k] = e[k + 1];
        }
    }

    let mut breakpoints: Vec<Rational> = Vec::new();
    let mut values: Vec<usize> = Vec::new();
    for (k, ek) in e.iter().enumerate().skip(1) {
        if breakpoints.last() == Some(ek) {
            *values.last_mut().unwrap() = k;
        } else {
            breakpoints.push(*ek);
            values.push(k);
        }
    }
    Ok(PackingProfile {
        breakpoints,
        values,
    })
}
