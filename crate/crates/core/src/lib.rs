//! Exact solvers for two fractional-neighborhood graph parameters on small
//! graphs.
//!
//! A proper vertex set S is a *beta-packing set* if every vertex outside S
//! has at most a beta fraction of its neighbors inside S and S is maximal
//! under extension by arbitrary vertex subsets; beta-pack(G) is the largest
//! cardinality of such a set. Flipping the inequality (at least an alpha
//! fraction, minimum cardinality, properness not required) gives the
//! *alpha-domination number* gamma_alpha(G).
//!
//! The crate provides the property checks, exhaustive and branch-and-bound
//! solvers, enumeration of all maximal beta-packing sets, the full value
//! profile over beta with its breakpoints, closed forms for paths, cycles,
//! complete bipartite and complete multipartite graphs, and graph input via
//! edge lists, graph6 lines, and class generators. All beta/alpha arithmetic
//! is exact rational; no floating point enters any decision.

pub mod classes;
pub mod closed_form;
pub mod domination;
pub mod error;
pub mod graph;
pub mod packing;
pub mod profile;
pub mod rational;

pub use classes::GraphClass;
pub use closed_form::{
    complete_bipartite_formula, cycle_formula, multipartite_beta1_formula, path_formula,
    ClosedFormResult, FormulaId,
};
pub use domination::{
    alpha_domination_number, compare_parameters, satisfies_alpha_domination, ComparisonVerdict,
    DominationSolveResult, ParameterComparison,
};
pub use error::{Error, Result};
pub use graph::{parse_edge_list, parse_graph6, Graph, VertexSet};
pub use packing::{
    beta_pack_number, enumerate_maximal_packings, is_packing_set, satisfies_packing, threshold,
    Method, PackingSolveResult, DEFAULT_EXHAUSTIVE_CAP,
};
pub use profile::{interesting_betas, packing_profile, PackingProfile};
pub use rational::Rational;
