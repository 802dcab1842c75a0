#![allow(clippy::needless_range_loop)] // tableau and grid math reads better indexed

//! Dense exact-rational simplex with Bland's anti-cycling rule.
//!
//! Small two-phase tableau solver for the linear programs behind Core
//! feasibility and the lexicographic excess minimisation. Everything runs in
//! arbitrary-precision rationals: feasibility and optimality are decided
//! exactly, and row duals are read off the artificial columns so callers can
//! identify binding constraints without tolerances.

use crate::numeric::Rat;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConstraintKind {
    Eq,
    Ge,
}

/// One row `coeffs . x (=|>=) rhs` over nonnegative variables.
#[derive(Clone, Debug)]
pub struct Constraint {
    pub coeffs: Vec<Rat>,
    pub kind: ConstraintKind,
    pub rhs: Rat,
}

impl Constraint {
    pub fn eq(coeffs: Vec<Rat>, rhs: Rat) -> Constraint {
        Constraint {
            coeffs,
            kind: ConstraintKind::Eq,
            rhs,
        }
    }

    pub fn ge(coeffs: Vec<Rat>, rhs: Rat) -> Constraint {
        Constraint {
            coeffs,
            kind: ConstraintKind::Ge,
            rhs,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

/// Solver output. `primal` holds the structural variables only. `duals` holds
/// one multiplier per constraint, oriented for the rows as given: a `Ge` row's
/// dual is nonnegative at optimality, and a positive dual certifies that the
/// row is tight in every optimal solution.
#[derive(Clone, Debug)]
pub struct LpSolution {
    pub status: LpStatus,
    pub objective: Rat,
    pub primal: Vec<Rat>,
    pub duals: Vec<Rat>,
}

/// Minimises `objective . x` subject to `constraints` over `x >= 0`.
pub fn solve(num_vars: usize, constraints: &[Constraint], objective: &[Rat]) -> LpSolution {
    assert_eq!(objective.len(), num_vars);
    let m = constraints.len();
    let num_slacks = constraints
        .iter()
        .filter(|c| c.kind == ConstraintKind::Ge)
        .count();
    let total_cols = num_vars + num_slacks + m;

    // Tableau rows in equational form with rhs in the last position. Rows with
    // a negative rhs are negated so the artificial basis starts feasible;
    // `row_sign` remembers the orientation for dual extraction.
    let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(m);
    let mut row_sign: Vec<Rat> = Vec::with_capacity(m);
    let mut slack_index = 0usize;
    for (r, c) in constraints.iter().enumerate() {
        assert_eq!(c.coeffs.len(), num_vars);
        let mut row = vec![Rat::zero(); total_cols + 1];
        let flip = c.rhs.is_negative();
        let sign = if flip { -Rat::one() } else { Rat::one() };
        for (j, a) in c.coeffs.iter().enumerate() {
            row[j] = a * &sign;
        }
        if c.kind == ConstraintKind::Ge {
            row[num_vars + slack_index] = -&sign;
            slack_index += 1;
        }
        row[num_vars + num_slacks + r] = Rat::one();
        row[total_cols] = &c.rhs * &sign;
        rows.push(row);
        row_sign.push(sign);
    }

    let mut basis: Vec<usize> = (0..m).map(|r| num_vars + num_slacks + r).collect();
    let artificial_start = num_vars + num_slacks;

    // Phase 1: minimise the sum of artificials. Reduced costs start as the
    // negated column sums because every artificial is basic with cost one.
    let mut reduced = vec![Rat::zero(); total_cols + 1];
    for row in &rows {
        for j in 0..=total_cols {
            reduced[j] -= &row[j];
        }
    }
    for j in artificial_start..total_cols {
        reduced[j] += Rat::one();
    }
    if run_simplex(&mut rows, &mut reduced, &mut basis, total_cols, |_| true) == LpStatus::Unbounded
    {
        unreachable!("phase-1 objective is bounded below by zero");
    }
    if reduced[total_cols].is_negative() {
        // Positive residual infeasibility (the stored value is -objective).
        return LpSolution {
            status: LpStatus::Infeasible,
            objective: Rat::zero(),
            primal: vec![Rat::zero(); num_vars],
            duals: vec![Rat::zero(); m],
        };
    }

    // Drive leftover artificials out of the basis; a row where that is
    // impossible is redundant and harmlessly keeps its artificial at zero.
    for r in 0..m {
        if basis[r] >= artificial_start {
            if let Some(j) = (0..artificial_start).find(|&j| !rows[r][j].is_zero()) {
                pivot(&mut rows, &mut reduced, &mut basis, r, j, total_cols);
            }
        }
    }

    // Phase 2: real objective. Reduced costs are rebuilt from scratch with
    // artificial columns kept (cost zero) but barred from entering, so their
    // final reduced costs expose the row duals.
    let mut reduced = vec![Rat::zero(); total_cols + 1];
    for (j, c) in objective.iter().enumerate() {
        reduced[j] = c.clone();
    }
    let snapshot: Vec<Vec<Rat>> = rows.clone();
    for (r, &b) in basis.iter().enumerate() {
        if !reduced[b].is_zero() {
            let factor = reduced[b].clone();
            for j in 0..=total_cols {
                let delta = &snapshot[r][j] * &factor;
                reduced[j] -= delta;
            }
        }
    }
    let status = run_simplex(&mut rows, &mut reduced, &mut basis, total_cols, |j| {
        j < artificial_start
    });

    let mut primal = vec![Rat::zero(); num_vars];
    for (r, &b) in basis.iter().enumerate() {
        if b < num_vars {
            primal[b] = rows[r][total_cols].clone();
        }
    }
    // Dual of row r: the artificial column for r carries B^-1 e_r, so its
    // phase-2 reduced cost is -y_r (cost zero minus the priced column).
    let duals = (0..m)
        .map(|r| -&reduced[artificial_start + r] * &row_sign[r])
        .collect();

    LpSolution {
        status,
        objective: -reduced[total_cols].clone(),
        primal,
        duals,
    }
}

/// Bland-rule iterations on the tableau. `allowed` filters entering columns.
fn run_simplex(
    rows: &mut [Vec<Rat>],
    reduced: &mut [Rat],
    basis: &mut [usize],
    total_cols: usize,
    allowed: impl Fn(usize) -> bool,
) -> LpStatus {
    loop {
        let entering = (0..total_cols).find(|&j| allowed(j) && reduced[j].is_negative());
        let Some(enter) = entering else {
            return LpStatus::Optimal;
        };
        let mut leave: Option<usize> = None;
        let mut best: Option<Rat> = None;
        for (r, row) in rows.iter().enumerate() {
            if row[enter].is_positive() {
                let ratio = &row[total_cols] / &row[enter];
                let better = match &best {
                    None => true,
                    Some(b) => ratio < *b || (ratio == *b && basis[r] < basis[leave.unwrap()]),
                };
                if better {
                    best = Some(ratio);
                    leave = Some(r);
                }
            }
        }
        let Some(leave) = leave else {
            return LpStatus::Unbounded;
        };
        pivot(rows, reduced, basis, leave, enter, total_cols);
    }
}

fn pivot(
    rows: &mut [Vec<Rat>],
    reduced: &mut [Rat],
    basis: &mut [usize],
    r: usize,
    c: usize,
    total_cols: usize,
) {
    let pivot_value = rows[r][c].clone();
    for j in 0..=total_cols {
        rows[r][j] /= &pivot_value;
    }
    for i in 0..rows.len() {
        if i != r && !rows[i][c].is_zero() {
            let factor = rows[i][c].clone();
            for j in 0..=total_cols {
                let delta = &rows[r][j] * &factor;
                rows[i][j] -= delta;
            }
        }
    }
    if !reduced[c].is_zero() {
        let factor = reduced[c].clone();
        for j in 0..=total_cols {
            let delta = &rows[r][j] * &factor;
            reduced[j] -= delta;
        }
    }
    basis[r] = c;
}
