//! Simple undirected graphs with dense 0-based vertex indices, plus the two
//! input formats: whitespace edge lists and graph6 lines.
//!
//! Graphs are immutable once built by a parser or generator; all solver code
//! shares them by reference.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Undirected simple graph: `adj[v]` is the open neighborhood N(v).
///
/// Invariants (checked by constructors and [`Graph::validate`]): no
/// self-loops, symmetric adjacency, all indices below `n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<BTreeSet<usize>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![BTreeSet::new(); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop { vertex: u });
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn neighbor_set(&self, v: usize) -> &BTreeSet<usize> {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(&v)
    }

    /// All edges as (u, v) with u < v, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Delta(G); None for the empty graph.
    pub fn max_degree(&self) -> Option<usize> {
        self.adj.iter().map(|s| s.len()).max()
    }

    /// Sorted support of the degree multiset, d_1 < ... < d_t.
    pub fn distinct_degrees(&self) -> Vec<usize> {
        let set: BTreeSet<usize> = self.adj.iter().map(|s| s.len()).collect();
        set.into_iter().collect()
    }

    /// Re-checks the representation invariants; used by tests on every
    /// generated and parsed graph.
    pub fn validate(&self) -> Result<()> {
        let n = self.n();
        for v in 0..n {
            if self.adj[v].contains(&v) {
                return Err(Error::SelfLoop { vertex: v });
            }
            for &u in &self.adj[v] {
                if u >= n {
                    return Err(Error::VertexOutOfRange { vertex: u, n });
                }
                if !self.adj[u].contains(&v) {
                    return Err(Error::AsymmetricAdjacency { u: v, v: u });
                }
            }
        }
        Ok(())
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_induced(&(0..self.n()).collect())
            .expect("full vertex set is in range")
    }

    /// True iff the subgraph induced by `w` is connected; vacuously true for
    /// |w| <= 1 (including the empty set).
    pub fn is_connected_induced(&self, w: &VertexSet) -> Result<bool> {
        let n = self.n();
        for v in w.iter() {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
        }
        if w.len() <= 1 {
            return Ok(true);
        }
        let start = w.iter().next().unwrap();
        let mut seen = BTreeSet::new();
        let mut stack = vec![start];
        seen.insert(start);
        while let Some(v) = stack.pop() {
            for u in self.neighbors(v) {
                if w.contains(u) && seen.insert(u) {
                    stack.push(u);
                }
            }
        }
        Ok(seen.len() == w.len())
    }

    /// Serializes to the edge-list format accepted by [`parse_edge_list`]:
    /// a vertex-count header, then one "u v" line per edge.
    pub fn edge_list_string(&self) -> String {
        let mut out = format!("{}\n", self.n());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}

/// A subset of the vertices of some graph, iterated in ascending order.
///
/// The derived `Ord` compares member sequences lexicographically, which is
/// exactly the witness tie-break order used by the solvers.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet {
    members: BTreeSet<usize>,
}

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, v: usize) -> bool {
        self.members.insert(v)
    }

    pub fn remove(&mut self, v: usize) -> bool {
        self.members.remove(&v)
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.contains(&v)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.iter().chain(other.iter()).collect()
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        self.iter().filter(|v| !other.contains(*v)).collect()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.members.is_subset(&other.members)
    }

    /// V - self for a graph on `n` vertices.
    pub fn complement_in(&self, n: usize) -> VertexSet {
        (0..n).filter(|v| !self.contains(*v)).collect()
    }

    /// Bitmask form; solver-internal, valid only for indices below 64.
    pub(crate) fn mask(&self) -> u64 {
        let mut m = 0u64;
        for v in self.iter() {
            debug_assert!(v < 64);
            m |= 1 << v;
        }
        m
    }

    pub(crate) fn from_mask(mut mask: u64) -> VertexSet {
        let mut set = VertexSet::new();
        while mask != 0 {
            let v = mask.trailing_zeros() as usize;
            set.insert(v);
            mask &= mask - 1;
        }
        set
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet {
            members: iter.into_iter().collect(),
        }
    }
}

impl From<&[usize]> for VertexSet {
    fn from(slice: &[usize]) -> Self {
        slice.iter().copied().collect()
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(arr: [usize; N]) -> Self {
        arr.into_iter().collect()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let v: Vec<usize> = Vec::deserialize(deserializer)?;
        Ok(v.into_iter().collect())
    }
}

/// Parses a whitespace edge list: one "u v" pair per line, 0-indexed.
///
/// An optional first content line holding a single integer fixes the vertex
/// count; otherwise n = max index + 1. Blank lines and lines starting with
/// '#' are ignored. Duplicate edges collapse.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut header: Option<usize> = None;
    let mut first_content = true;
    let mut edges: Vec<(usize, usize, usize)> = Vec::new(); // (line, u, v)
    let mut max_idx: Option<usize> = None;

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let parse = |tok: &str| -> Result<usize> {
            tok.parse().map_err(|_| Error::EdgeList {
                line: lineno,
                reason: format!("non-numeric token '{tok}'"),
            })
        };
        if first_content && tokens.len() == 1 {
            header = Some(parse(tokens[0])?);
            first_content = false;
            continue;
        }
        first_content = false;
        if tokens.len() != 2 {
            return Err(Error::EdgeList {
                line: lineno,
                reason: format!("expected 'u v', found {} tokens", tokens.len()),
            });
        }
        let (u, v) = (parse(tokens[0])?, parse(tokens[1])?);
        if u == v {
            return Err(Error::EdgeList {
                line: lineno,
                reason: format!("self-loop at vertex {u}"),
            });
        }
        max_idx = Some(max_idx.unwrap_or(0).max(u).max(v));
        edges.push((lineno, u, v));
    }

    let n = match header {
        Some(n) => n,
        None => max_idx.map_or(0, |m| m + 1),
    };
    let mut g = Graph::new(n);
    for (lineno, u, v) in edges {
        if u >= n || v >= n {
            return Err(Error::EdgeList {
                line: lineno,
                reason: format!("vertex index {} >= declared n = {n}", u.max(v)),
            });
        }
        g.add_edge(u, v)?;
    }
    Ok(g)
}

const GRAPH6_HEADER: &str = ">>graph6<<";
const GRAPH6_MAX_N: usize = 100_000;

/// Decodes one graph6 line (optionally prefixed with ">>graph6<<").
///
/// Bits of the upper triangle are read in the standard column order:
/// (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let s = line.trim();
    let s = s.strip_prefix(GRAPH6_HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty input".into()));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::Graph6(format!(
                "byte {:#04x} at position {i} outside the printable range 63..=126",
                b
            )));
        }
    }

    // N(n): 1 byte for n <= 62, '~' + 3 bytes, or '~~' + 6 bytes.
    let (n, header_len) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, 1)
    } else if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(Error::Graph6("truncated order field".into()));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, 4)
    } else {
        if bytes.len() < 8 {
            return Err(Error::Graph6("truncated order field".into()));
        }
        let n = bytes[2..8]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, 8)
    };
    if n > GRAPH6_MAX_N {
        return Err(Error::Graph6(format!(
            "order {n} exceeds the supported maximum {GRAPH6_MAX_N}"
        )));
    }

    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    let payload = &bytes[header_len..];
    if payload.len() < need {
        return Err(Error::Graph6(format!(
            "truncated bit payload: need {need} bytes for n = {n}, found {}",
            payload.len()
        )));
    }
    if payload.len() > need {
        return Err(Error::Graph6(format!(
            "trailing data: expected {need} payload bytes for n = {n}, found {}",
            payload.len()
        )));
    }

    let mut g = Graph::new(n);
    let mut pos = 0usize;
    for j in 1..n {
        for i in 0..j {
            let bit = (payload[pos / 6] - 63) >> (5 - pos % 6) & 1;
            if bit == 1 {
                g.add_edge(i, j)?;
            }
            pos += 1;
        }
    }
    Ok(g)
}
