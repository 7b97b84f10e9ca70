//! Closed-form beta-pack values for the solved graph classes. Each formula
//! reports `None` outside its stated hypotheses instead of guessing; the
//! exact solvers cross-validate every applicable case in the test suite.

use serde::Serialize;

use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FormulaId {
    Path,
    Cycle,
    CompleteBipartite,
    MultipartiteBeta1,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClosedFormResult {
    pub formula: FormulaId,
    /// None when the class/beta combination is outside the formula's
    /// hypotheses.
    pub value: Option<usize>,
}

impl ClosedFormResult {
    pub fn applicable(&self) -> bool {
        self.value.is_some()
    }
}

fn half() -> Rational {
    Rational::new(1, 2).expect("constant")
}

/// Path/cycle case split: 0 below 1/2, order - 2 on [1/2, 1), order - 1 at 1.
fn path_like(n: usize, beta: Rational) -> Option<usize> {
    if !beta.in_unit_interval() {
        return None;
    }
    Some(if beta < half() {
        0
    } else if beta.is_one() {
        n - 1
    } else {
        n - 2
    })
}

/// beta-pack(P_n) for n >= 2.
pub fn path_formula(n: usize, beta: Rational) -> ClosedFormResult {
    ClosedFormResult {
        formula: FormulaId::Path,
        value: if n >= 2 { path_like(n, beta) } else { None },
    }
}

/// beta-pack(C_n) for n >= 3; the same case split as paths.
pub fn cycle_formula(n: usize, beta: Rational) -> ClosedFormResult {
    ClosedFormResult {
        formula: FormulaId::Cycle,
        value: if n >= 3 { path_like(n, beta) } else { None },
    }
}

/// beta-pack(K_{m,n}): floor(beta*m) + floor(beta*n) for beta < 1, and
/// m + n - 1 at beta = 1.
pub fn complete_bipartite_formula(m: usize, n: usize, beta: Rational) -> ClosedFormResult {
    let value = if m >= 1 && n >= 1 && beta.in_unit_interval() {
        Some(if beta.is_one() {
            m + n - 1
        } else {
            beta.floor_mul(m) + beta.floor_mul(n)
        })
    } else {
        None
    };
    ClosedFormResult {
        formula: FormulaId::CompleteBipartite,
        value,
    }
}

/// beta-pack of a complete multipartite graph at beta = 1: order - 1.
/// The floor-sum shape of the bipartite formula does not carry over below
/// beta = 1 (K_{3,3,3,3} at 1/2 is the standard counterexample).
pub fn multipartite_beta1_formula(parts: &[usize]) -> ClosedFormResult {
    let value = if parts.len() >= 2 && parts.iter().all(|&p| p >= 1) {
        Some(parts.iter().sum::<usize>() - 1)
    } else {
        None
    };
    ClosedFormResult {
        formula: FormulaId::MultipartiteBeta1,
        value,
    }
}
