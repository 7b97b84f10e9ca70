//! Generators for the named graph classes, with canonical vertex numbering:
//! paths and cycles are numbered along the walk, complete bipartite graphs
//! number the first part first, multipartite graphs number parts
//! consecutively.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphClass {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Star(usize),
    CompleteBipartite(usize, usize),
    CompleteMultipartite(Vec<usize>),
}

impl GraphClass {
    pub fn generate(&self) -> Result<Graph> {
        let invalid = |reason: &str| Error::ClassSpec {
            input: self.to_string(),
            reason: reason.to_string(),
        };
        match self {
            GraphClass::Path(n) => {
                if *n < 1 {
                    return Err(invalid("path order must be >= 1"));
                }
                let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
                Graph::from_edges(*n, &edges)
            }
            GraphClass::Cycle(n) => {
                if *n < 3 {
                    return Err(invalid("cycle order must be >= 3"));
                }
                let edges: Vec<_> = (0..*n).map(|i| (i, (i + 1) % n)).collect();
                Graph::from_edges(*n, &edges)
            }
            GraphClass::Complete(n) => {
                if *n < 1 {
                    return Err(invalid("complete graph order must be >= 1"));
                }
                let mut edges = Vec::new();
                for u in 0..*n {
                    for v in (u + 1)..*n {
                        edges.push((u, v));
                    }
                }
                Graph::from_edges(*n, &edges)
            }
            GraphClass::Star(k) => {
                if *k < 1 {
                    return Err(invalid("star must have at least one leaf"));
                }
                GraphClass::CompleteBipartite(1, *k).generate()
            }
            GraphClass::CompleteBipartite(m, n) => {
                if *m < 1 || *n < 1 {
                    return Err(invalid("both parts must be nonempty"));
                }
                let mut edges = Vec::new();
                for u in 0..*m {
                    for v in 0..*n {
                        edges.push((u, m + v));
                    }
                }
                Graph::from_edges(m + n, &edges)
            }
            GraphClass::CompleteMultipartite(parts) => {
                if parts.len() < 2 {
                    return Err(invalid("need at least two parts"));
                }
                if parts.iter().any(|&p| p < 1) {
                    return Err(invalid("every part must be nonempty"));
                }
                let n: usize = parts.iter().sum();
                let mut start = Vec::with_capacity(parts.len());
                let mut acc = 0;
                for &p in parts {
                    start.push(acc);
                    acc += p;
                }
                let mut edges = Vec::new();
                for i in 0..parts.len() {
                    for j in (i + 1)..parts.len() {
                        for a in start[i]..start[i] + parts[i] {
                            for b in start[j]..start[j] + parts[j] {
                                edges.push((a, b));
                            }
                        }
                    }
                }
                Graph::from_edges(n, &edges)
            }
        }
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphClass::Path(n) => write!(f, "path:{n}"),
            GraphClass::Cycle(n) => write!(f, "cycle:{n}"),
            GraphClass::Complete(n) => write!(f, "complete:{n}"),
            GraphClass::Star(k) => write!(f, "star:{k}"),
            GraphClass::CompleteBipartite(m, n) => write!(f, "complete_bipartite:{m},{n}"),
            GraphClass::CompleteMultipartite(parts) => {
                write!(f, "complete_multipartite:")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for GraphClass {
    type Err = Error;

    /// Parses "kind:params" specs such as `path:6`, `complete_bipartite:4,5`
    /// or `complete_multipartite:3,3,3,3`.
    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: &str| Error::ClassSpec {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let (kind, params) = s
            .split_once(':')
            .ok_or_else(|| err("expected kind:params, e.g. path:6"))?;
        let nums: Vec<usize> = params
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| err("parameters must be positive integers"))?;
        let one = |nums: &[usize]| -> Result<usize> {
            if nums.len() == 1 {
                Ok(nums[0])
            } else {
                Err(err("expected exactly one parameter"))
            }
        };
        match kind.trim() {
            "path" => Ok(GraphClass::Path(one(&nums)?)),
            "cycle" => Ok(GraphClass::Cycle(one(&nums)?)),
            "complete" => Ok(GraphClass::Complete(one(&nums)?)),
            "star" => Ok(GraphClass::Star(one(&nums)?)),
            "complete_bipartite" => {
                if nums.len() != 2 {
                    return Err(err("expected two parameters, e.g. complete_bipartite:4,5"));
                }
                Ok(GraphClass::CompleteBipartite(nums[0], nums[1]))
            }
            "complete_multipartite" => {
                if nums.len() < 2 {
                    return Err(err("expected at least two parts"));
                }
                Ok(GraphClass::CompleteMultipartite(nums))
            }
            other => Err(err(&format!("unknown class '{other}'"))),
        }
    }
}
