#![allow(clippy::needless_range_loop)] // tableau and grid math reads better indexed

//! Lexicographic excess minimisation over the imputation set, by the standard
//! scheme of iterated exact linear programs: minimise the maximum excess,
//! freeze the coalitions a positive dual proves tight in every optimum, and
//! recurse until the frozen equalities pin the payoff vector.

use std::collections::BTreeMap;

use crate::allocation::Allocation;
use crate::coalition::Coalition;
use crate::error::{Error, Result};
use crate::game::Game;
use crate::numeric::Rat;
use crate::simplex::{solve, Constraint, LpStatus};
use num_traits::{One, Signed, Zero};

/// Player cap for the dense per-coalition constraint matrix.
pub const NUCLEOLUS_MAX_PLAYERS: usize = 8;

/// The nucleolus, exact. Requires a nonempty imputation set.
pub fn nucleolus(game: &Game) -> Result<Allocation> {
    let n = game.n();
    if n > NUCLEOLUS_MAX_PLAYERS {
        return Err(Error::PlayerCountOutOfRange(n));
    }
    let singles = game.individual_worths();
    let surplus = game.surplus();
    if surplus.is_negative() {
        return Err(Error::EmptyImputationSet);
    }

    // Work in gain space: x_i = v_i + y_i with y_i >= 0 bakes individual
    // rationality into the variable bounds. Variables: y_0..y_{n-1}, then the
    // split epsilon = e_plus - e_minus.
    let num_vars = n + 2;
    let proper: Vec<Coalition> = Coalition::proper_nonempty(n).collect();
    let rhs_of = |s: Coalition| -> Rat {
        game.worth(s) - s.members().map(|i| singles[i].clone()).sum::<Rat>()
    };

    // Coalitions already pinned at an earlier excess level: S -> forced y(S).
    let mut fixed: BTreeMap<Coalition, Rat> = BTreeMap::new();

    loop {
        let mut constraints = Vec::with_capacity(1 + proper.len());
        // Efficiency.
        let mut eff = vec![Rat::one(); n];
        eff.extend([Rat::zero(), Rat::zero()]);
        constraints.push(Constraint::eq(eff, surplus.clone()));

        let mut unfixed_rows: Vec<(usize, Coalition)> = Vec::new();
        for &s in &proper {
            let mut coeffs = vec![Rat::zero(); num_vars];
            for i in s.members() {
                coeffs[i] = Rat::one();
            }
            match fixed.get(&s) {
                Some(level) => {
                    constraints.push(Constraint::eq(coeffs, level.clone()));
                }
                None => {
                    // y(S) + epsilon >= rhs(S), i.e. excess(S) <= epsilon.
                    coeffs[n] = Rat::one();
                    coeffs[n + 1] = -Rat::one();
                    unfixed_rows.push((constraints.len(), s));
                    constraints.push(Constraint::ge(coeffs, rhs_of(s)));
                }
            }
        }

        let mut objective = vec![Rat::zero(); num_vars];
        objective[n] = Rat::one();
        objective[n + 1] = -Rat::one();
        let solution = solve(num_vars, &constraints, &objective);
        assert_eq!(
            solution.status,
            LpStatus::Optimal,
            "excess minimisation stays feasible and bounded over a nonempty imputation set"
        );
        let level = solution.objective.clone();

        // A positive dual certifies the row is tight in every optimal
        // solution; at least one such row exists at every stage.
        let mut newly_fixed = 0;
        for &(row, s) in &unfixed_rows {
            if solution.duals[row].is_positive() {
                fixed.insert(s, rhs_of(s) - &level);
                newly_fixed += 1;
            }
        }
        assert!(newly_fixed > 0, "each stage must pin at least one coalition");

        if let Some(gains) = forced_point(n, &fixed, &surplus) {
            let payoffs = (0..n).map(|i| &singles[i] + &gains[i]).collect();
            return Ok(Allocation::Exact(payoffs));
        }
    }
}

/// Solves the frozen equality system (fixed coalition totals plus efficiency)
/// when it has full rank; `None` while degrees of freedom remain.
fn forced_point(n: usize, fixed: &BTreeMap<Coalition, Rat>, surplus: &Rat) -> Option<Vec<Rat>> {
    let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(fixed.len() + 1);
    let mut grand = vec![Rat::one(); n];
    grand.push(surplus.clone());
    rows.push(grand);
    for (s, level) in fixed {
        let mut row: Vec<Rat> = (0..n)
            .map(|i| if s.contains(i) { Rat::one() } else { Rat::zero() })
            .collect();
        row.push(level.clone());
        rows.push(row);
    }

    // Gauss-Jordan over the rationals.
    let mut pivot_row = 0;
    let mut pivot_cols = Vec::new();
    for col in 0..n {
        let Some(r) = (pivot_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, r);
        let p = rows[pivot_row][col].clone();
        for entry in rows[pivot_row].iter_mut() {
            *entry /= &p;
        }
        for r in 0..rows.len() {
            if r != pivot_row && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                for c in 0..=n {
                    let delta = &rows[pivot_row][c] * &f;
                    rows[r][c] -= delta;
                }
            }
        }
        pivot_cols.push(col);
        pivot_row += 1;
        if pivot_row == rows.len() {
            break;
        }
    }
    if pivot_cols.len() < n {
        return None;
    }
    let mut gains = vec![Rat::zero(); n];
    for (r, &col) in pivot_cols.iter().enumerate() {
        gains[col] = rows[r][n].clone();
    }
    Some(gains)
}
