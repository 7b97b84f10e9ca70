//! The beta-packing property and its exact solvers.
//!
//! A proper set S has the property at beta iff every vertex v outside S has
//! |N(v) & S| <= beta * |N(v)|, compared exactly on integers. A beta-packing
//! set is additionally maximal: no U with S < S+U < V keeps the property.
//! The property family is neither upward nor downward closed, so maximality
//! genuinely requires the full subset search; extending by several vertices
//! at once can work where every single-vertex extension fails.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::rational::Rational;

use serde::{Deserialize, Serialize};

/// Default bound on the vertex count for the exponential searches.
pub const DEFAULT_EXHAUSTIVE_CAP: usize = 20;

/// Hard bound for the full 2^n subset sweeps (enumeration, profiles,
/// maximality checks); the bit tables grow as 2^n.
pub(crate) const SWEEP_LIMIT: usize = 26;

/// Hard bound for the bitmask solvers.
pub(crate) const MASK_LIMIT: usize = 63;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    BruteForce,
    BranchAndBound,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::BruteForce => "brute_force",
            Method::BranchAndBound => "branch_and_bound",
        }
    }
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PackingSolveResult {
    pub value: usize,
    pub witness: VertexSet,
    pub beta: Rational,
    pub method: Method,
}

fn check_beta(beta: Rational) -> Result<()> {
    if beta.in_unit_interval() {
        Ok(())
    } else {
        Err(Error::BetaOutOfRange(beta))
    }
}

fn check_members(g: &Graph, s: &VertexSet) -> Result<()> {
    let n = g.n();
    match s.iter().find(|&v| v >= n) {
        Some(v) => Err(Error::VertexOutOfRange { vertex: v, n }),
        None => Ok(()),
    }
}

/// Does S satisfy the beta-packing property? Properness is not checked here.
///
/// Vertices of degree 0 outside S satisfy vacuously (0 <= beta * 0).
pub fn satisfies_packing(g: &Graph, s: &VertexSet, beta: Rational) -> Result<bool> {
    check_beta(beta)?;
    check_members(g, s)?;
    let (num, den) = (beta.num() as u128, beta.den() as u128);
    for v in 0..g.n() {
        if s.contains(v) {
            continue;
        }
        let deg = g.degree(v) as u128;
        let cnt = g.neighbors(v).filter(|u| s.contains(*u)).count() as u128;
        if cnt * den > num * deg {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The least beta at which S satisfies the property: the maximum ratio
/// |N(v) & S| / |N(v)| over vertices outside S with positive degree, as a
/// reduced fraction; 0 when every intersection is empty.
pub fn threshold(g: &Graph, s: &VertexSet) -> Result<Rational> {
    check_members(g, s)?;
    if s.len() == g.n() {
        return Err(Error::NotProper);
    }
    let mut best = Rational::zero();
    for v in 0..g.n() {
        if s.contains(v) {
            continue;
        }
        let deg = g.degree(v);
        if deg == 0 {
            continue;
        }
        let cnt = g.neighbors(v).filter(|u| s.contains(*u)).count();
        let ratio = Rational::new(cnt as u64, deg as u64).expect("deg > 0");
        if ratio > best {
            best = ratio;
        }
    }
    Ok(best)
}

/// Per-vertex data for the bitmask solvers: neighbor masks and the largest
/// admissible |N(v) & S| for an outside vertex, floor(beta * deg(v)).
pub(crate) struct MaskContext {
    pub n: usize,
    pub full: u64,
    pub adj: Vec<u64>,
    pub cap: Vec<u32>,
}

pub(crate) fn adjacency_masks(g: &Graph) -> Vec<u64> {
    debug_assert!(g.n() <= MASK_LIMIT);
    (0..g.n())
        .map(|v| g.neighbors(v).fold(0u64, |m, u| m | 1 << u))
        .collect()
}

impl MaskContext {
    fn new(g: &Graph, beta: Rational) -> Self {
        let n = g.n();
        MaskContext {
            n,
            full: full_mask(n),
            adj: adjacency_masks(g),
            cap: (0..n).map(|v| beta.floor_mul(g.degree(v)) as u32).collect(),
        }
    }

    /// Property check for S as a bitmask (properness not included).
    fn property(&self, s: u64) -> bool {
        for v in 0..self.n {
            if s >> v & 1 == 1 {
                continue;
            }
            if (self.adj[v] & s).count_ones() > self.cap[v] {
                return false;
            }
        }
        true
    }
}

pub(crate) fn full_mask(n: usize) -> u64 {
    debug_assert!(n <= MASK_LIMIT);
    (1u64 << n) - 1
}

/// For equal-cardinality sets, "a before b as sorted index sequences" is
/// equivalent to: a contains the lowest differing index.
fn lex_less(a: u64, b: u64) -> bool {
    if a == b {
        return false;
    }
    let diff = a ^ b;
    a & (diff & diff.wrapping_neg()) != 0
}

/// Is S a beta-packing set: proper, property, and maximal under extension by
/// arbitrary subsets of V - S?
///
/// A disconnected complement is rejected immediately (adding one whole
/// component of V - S always preserves the property and keeps S proper);
/// otherwise every nonempty U with S + U proper is tried.
pub fn is_packing_set(g: &Graph, s: &VertexSet, beta: Rational) -> Result<bool> {
    check_beta(beta)?;
    check_members(g, s)?;
    let n = g.n();
    if s.len() >= n {
        return Ok(false); // not proper (or n = 0)
    }
    if !satisfies_packing(g, s, beta)? {
        return Ok(false);
    }
    let complement = s.complement_in(n);
    if !g.is_connected_induced(&complement)? {
        return Ok(false);
    }
    let r = complement.len();
    if r > SWEEP_LIMIT {
        return Err(Error::CapExceeded {
            n,
            cap: SWEEP_LIMIT,
        });
    }
    if n > MASK_LIMIT {
        return Err(Error::CapExceeded { n, cap: MASK_LIMIT });
    }

    let ctx = MaskContext::new(g, beta);
    let s_mask = s.mask();
    let comp_mask = complement.mask();
    // Submask enumeration over U <= comp, skipping U = comp (improper) and
    // U = 0 (no extension).
    let mut u = (comp_mask - 1) & comp_mask;
    while u != 0 {
        if ctx.property(s_mask | u) {
            return Ok(false);
        }
        u = (u - 1) & comp_mask;
    }
    Ok(true)
}

/// beta-pack(G): the maximum cardinality of a proper property set, with the
/// lexicographically smallest witness of that cardinality.
///
/// Maximality never needs checking here: a maximum-cardinality proper
/// property set is automatically maximal (any proper strict superset with
/// the property would have larger cardinality).
pub fn beta_pack_number(g: &Graph, beta: Rational, method: Method) -> Result<PackingSolveResult> {
    check_beta(beta)?;
    let n = g.n();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > MASK_LIMIT {
        return Err(Error::CapExceeded { n, cap: MASK_LIMIT });
    }
    let ctx = MaskContext::new(g, beta);
    let (value, mask) = match method {
        Method::BruteForce => pack_brute_force(&ctx),
        Method::BranchAndBound => pack_branch_and_bound(&ctx),
    };
    Ok(PackingSolveResult {
        value,
        witness: VertexSet::from_mask(mask),
        beta,
        method,
    })
}

fn pack_brute_force(ctx: &MaskContext) -> (usize, u64) {
    let mut best_size = 0usize;
    let mut best_mask = 0u64;
    for s in 0..ctx.full {
        let size = s.count_ones() as usize;
        if size < best_size || (size == best_size && !lex_less(s, best_mask)) {
            continue;
        }
        if ctx.property(s) {
            best_size = size;
            best_mask = s;
        }
    }
    (best_size, best_mask)
}

struct PackSearch<'a> {
    ctx: &'a MaskContext,
    counts: Vec<u32>, // |N(v) & S| for the current partial S
    best_size: usize,
    best_mask: u64,
}

impl PackSearch<'_> {
    /// Depth-first over vertices in index order, include branch first, so
    /// among equal-cardinality property sets the lexicographically smallest
    /// is reached first; the best is therefore only replaced on a strict
    /// cardinality improvement.
    fn run(&mut self, idx: usize, s: u64, size: usize, out: u64) {
        let n = self.ctx.n;
        if size + (n - idx) <= self.best_size {
            return; // cannot beat the incumbent
        }
        if idx == n {
            if s != self.ctx.full && size > self.best_size {
                self.best_size = size;
                self.best_mask = s;
            }
            return;
        }

        // include idx: counts of its neighbors grow; any decided-out
        // neighbor pushed over its cap kills the branch (|N(v) & S| is
        // monotone under later inclusions, so the check is a sound prune).
        let mut feasible = true;
        let mut nbrs = self.ctx.adj[idx];
        while nbrs != 0 {
            let v = nbrs.trailing_zeros() as usize;
            nbrs &= nbrs - 1;
            self.counts[v] += 1;
            if out >> v & 1 == 1 && self.counts[v] > self.ctx.cap[v] {
                feasible = false;
            }
        }
        if feasible {
            self.run(idx + 1, s | 1 << idx, size + 1, out);
        }
        let mut nbrs = self.ctx.adj[idx];
        while nbrs != 0 {
            let v = nbrs.trailing_zeros() as usize;
            nbrs &= nbrs - 1;
            self.counts[v] -= 1;
        }

        // exclude idx: it now needs its own cap respected.
        if self.counts[idx] <= self.ctx.cap[idx] {
            self.run(idx + 1, s, size, out | 1 << idx);
        }
    }
}

fn pack_branch_and_bound(ctx: &MaskContext) -> (usize, u64) {
    let mut search = PackSearch {
        ctx,
        counts: vec![0; ctx.n],
        best_size: 0,
        best_mask: 0,
    };
    search.run(0, 0, 0, 0);
    (search.best_size, search.best_mask)
}

/// Bit-per-subset table used by the enumeration sweep.
struct SubsetBits(Vec<u64>);

impl SubsetBits {
    fn new(len: u64) -> Self {
        SubsetBits(vec![0; len.div_ceil(64) as usize])
    }
    #[inline]
    fn get(&self, i: u64) -> bool {
        self.0[(i / 64) as usize] >> (i % 64) & 1 == 1
    }
    #[inline]
    fn set(&mut self, i: u64) {
        self.0[(i / 64) as usize] |= 1 << (i % 64);
    }
}

/// Every maximal beta-packing set of G, each exactly once, sorted by
/// cardinality descending then lexicographically ascending.
///
/// When no nonempty proper set has the property, the empty set is itself
/// maximal and the result is `[{}]`.
pub fn enumerate_maximal_packings(g: &Graph, beta: Rational, cap: usize) -> Result<Vec<VertexSet>> {
    check_beta(beta)?;
    let n = g.n();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let limit = cap.min(SWEEP_LIMIT);
    if n > limit {
        return Err(Error::CapExceeded { n, cap: limit });
    }

    let ctx = MaskContext::new(g, beta);
    let full = ctx.full;
    let total = 1u64 << n;

    // proper property sets
    let mut pp = SubsetBits::new(total);
    for s in 0..full {
        if ctx.property(s) {
            pp.set(s);
        }
    }

    // has_sup[m] = some proper property T >= m exists (including T = m);
    // filled by descending sweep so all strict supersets are ready.
    let mut has_sup = SubsetBits::new(total);
    for m in (0..total).rev() {
        if pp.get(m) {
            has_sup.set(m);
            continue;
        }
        for b in 0..n {
            if m >> b & 1 == 0 && has_sup.get(m | 1 << b) {
                has_sup.set(m);
                break;
            }
        }
    }

    let mut out: Vec<VertexSet> = Vec::new();
    for m in 0..full {
        if !pp.get(m) {
            continue;
        }
        let extendable = (0..n).any(|b| m >> b & 1 == 0 && has_sup.get(m | 1 << b));
        if !extendable {
            out.push(VertexSet::from_mask(m));
        }
    }
    out.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    Ok(out)
}
