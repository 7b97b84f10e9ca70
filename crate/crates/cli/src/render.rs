//! Report rendering: table for humans, JSON for machines, DOT mirroring the
//! usual diagram convention (witness vertices filled black, every outside
//! vertex labeled with its neighborhood ratio).

use std::fmt::Write as _;

use serde::Serialize;

use betapack_core::{
    DominationSolveResult, Graph, PackingProfile, PackingSolveResult, ParameterComparison,
    Rational, VertexSet,
};

use crate::{CliError, FormatArg};

fn print_json<T: Serialize>(value: &T) -> Result<(), CliError> {
    let line = serde_json::to_string(value)
        .map_err(|e| CliError::Internal(format!("serialization failed: {e}")))?;
    println!("{line}");
    Ok(())
}

fn ratio_label(g: &Graph, witness: &VertexSet, v: usize) -> Rational {
    let deg = g.degree(v);
    if deg == 0 {
        return Rational::zero();
    }
    let cnt = g.neighbors(v).filter(|u| witness.contains(*u)).count();
    Rational::new(cnt as u64, deg as u64).expect("deg > 0")
}

/// One DOT graph; witness filled black, outside vertices labeled "v: ratio".
pub fn dot_graph(g: &Graph, witness: &VertexSet, name: &str) -> String {
    let mut out = String::new();
    writeln!(out, "graph {name} {{").unwrap();
    writeln!(out, "  node [shape=circle];").unwrap();
    for v in 0..g.n() {
        if witness.contains(v) {
            writeln!(
                out,
                "  {v} [style=filled, fillcolor=black, fontcolor=white];"
            )
            .unwrap();
        } else {
            writeln!(
                out,
                "  {v} [label=\"{v}: {}\"];",
                ratio_label(g, witness, v)
            )
            .unwrap();
        }
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    writeln!(out, "}}").unwrap();
    out
}

#[derive(Serialize)]
struct PackJson<'a> {
    n: usize,
    beta: Rational,
    value: usize,
    witness: &'a VertexSet,
    method: betapack_core::Method,
}

pub fn pack_report(
    g: &Graph,
    id: &str,
    res: &PackingSolveResult,
    format: FormatArg,
) -> Result<(), CliError> {
    match format {
        FormatArg::Json => print_json(&PackJson {
            n: g.n(),
            beta: res.beta,
            value: res.value,
            witness: &res.witness,
            method: res.method,
        }),
        FormatArg::Table => {
            println!("graph: {id} (n = {}, m = {})", g.n(), g.edge_count());
            println!("beta: {}", res.beta);
            println!("beta-pack: {}", res.value);
            println!("witness: {}", res.witness);
            println!("method: {}", res.method);
            Ok(())
        }
        FormatArg::Dot => {
            print!("{}", dot_graph(g, &res.witness, "G"));
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct ProfileJson<'a> {
    n: usize,
    breakpoints: &'a [Rational],
    values: &'a [usize],
    interesting_betas: &'a [Rational],
}

pub fn profile_report(
    g: &Graph,
    id: &str,
    profile: &PackingProfile,
    candidates: &[Rational],
    format: FormatArg,
) -> Result<(), CliError> {
    match format {
        FormatArg::Json => print_json(&ProfileJson {
            n: g.n(),
            breakpoints: profile.breakpoints(),
            values: profile.values(),
            interesting_betas: candidates,
        }),
        FormatArg::Table => {
            println!("graph: {id} (n = {}, m = {})", g.n(), g.edge_count());
            let cands: Vec<String> = candidates.iter().map(|b| b.to_string()).collect();
            println!("interesting betas: {}", cands.join(", "));
            println!("profile:");
            let bps = profile.breakpoints();
            let vals = profile.values();
            if bps.is_empty() {
                println!("  0 < beta <= 1  ->  0");
                return Ok(());
            }
            if !bps[0].is_zero() {
                println!("  0 < beta < {}  ->  0", bps[0]);
            }
            for i in 0..bps.len() {
                // a breakpoint at 0 covers (0, next) since beta = 0 itself
                // is not admissible
                let lower = if bps[i].is_zero() {
                    "0 <".to_string()
                } else {
                    format!("{} <=", bps[i])
                };
                if i + 1 < bps.len() {
                    println!("  {lower} beta < {}  ->  {}", bps[i + 1], vals[i]);
                } else if bps[i].is_one() {
                    println!("  beta = 1  ->  {}", vals[i]);
                } else {
                    println!("  {lower} beta <= 1  ->  {}", vals[i]);
                }
            }
            Ok(())
        }
        FormatArg::Dot => Err(CliError::Input(
            "dot output is not defined for profiles; use table or json".into(),
        )),
    }
}

#[derive(Serialize)]
struct MaximalJson<'a> {
    n: usize,
    beta: Rational,
    count: usize,
    sets: &'a [VertexSet],
}

pub fn maximal_report(
    g: &Graph,
    id: &str,
    beta: Rational,
    family: &[VertexSet],
    format: FormatArg,
) -> Result<(), CliError> {
    match format {
        FormatArg::Json => print_json(&MaximalJson {
            n: g.n(),
            beta,
            count: family.len(),
            sets: family,
        }),
        FormatArg::Table => {
            println!("graph: {id} (n = {}, m = {})", g.n(), g.edge_count());
            println!("beta: {beta}");
            println!("maximal beta-packing sets ({}):", family.len());
            for s in family {
                println!("  {s}");
            }
            Ok(())
        }
        FormatArg::Dot => {
            for (i, s) in family.iter().enumerate() {
                print!("{}", dot_graph(g, s, &format!("S{i}")));
            }
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct DominateJson<'a> {
    n: usize,
    alpha: Rational,
    value: usize,
    witness: &'a VertexSet,
}

pub fn dominate_report(
    g: &Graph,
    id: &str,
    res: &DominationSolveResult,
    format: FormatArg,
) -> Result<(), CliError> {
    match format {
        FormatArg::Json => print_json(&DominateJson {
            n: g.n(),
            alpha: res.alpha,
            value: res.value,
            witness: &res.witness,
        }),
        FormatArg::Table => {
            println!("graph: {id} (n = {}, m = {})", g.n(), g.edge_count());
            println!("alpha: {}", res.alpha);
            println!("gamma_alpha: {}", res.value);
            println!("witness: {}", res.witness);
            Ok(())
        }
        FormatArg::Dot => {
            print!("{}", dot_graph(g, &res.witness, "G"));
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct CompareJson<'a> {
    n: usize,
    value: Rational,
    gamma: usize,
    pack: usize,
    verdict: betapack_core::ComparisonVerdict,
    gamma_witness: &'a VertexSet,
    pack_witness: &'a VertexSet,
}

pub fn compare_report(
    g: &Graph,
    id: &str,
    cmp: &ParameterComparison,
    format: FormatArg,
) -> Result<(), CliError> {
    match format {
        FormatArg::Json => print_json(&CompareJson {
            n: g.n(),
            value: cmp.value,
            gamma: cmp.gamma.value,
            pack: cmp.pack.value,
            verdict: cmp.verdict,
            gamma_witness: &cmp.gamma.witness,
            pack_witness: &cmp.pack.witness,
        }),
        FormatArg::Table => {
            println!("graph: {id} (n = {}, m = {})", g.n(), g.edge_count());
            println!("value: {}", cmp.value);
            println!(
                "gamma_alpha: {}  witness {}",
                cmp.gamma.value, cmp.gamma.witness
            );
            println!(
                "beta-pack: {}  witness {}",
                cmp.pack.value, cmp.pack.witness
            );
            let sign = match cmp.verdict {
                betapack_core::ComparisonVerdict::Less => "<",
                betapack_core::ComparisonVerdict::Equal => "=",
                betapack_core::ComparisonVerdict::Greater => ">",
            };
            println!("verdict: pack {sign} gamma");
            Ok(())
        }
        FormatArg::Dot => Err(CliError::Input(
            "dot output is not defined for compare; use table or json".into(),
        )),
    }
}
