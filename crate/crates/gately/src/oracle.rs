#![allow(clippy::needless_range_loop)] // tableau and grid math reads better indexed

//! Independent numerical oracles for the balance and aggregate
//! characterisations of the weighted value family. Both minimise over the
//! imputation set by nested grid refinement, deliberately sharing no code
//! path with the closed forms they are used to confirm.

use crate::allocation::Allocation;
use crate::error::{Error, Result};
use crate::game::Game;
use crate::numeric::to_f64;

/// Player cap: grid refinement over the imputation simplex is exponential in
/// the player count, and the oracle exists only to cross-check closed forms.
pub const ORACLE_MAX_PLAYERS: usize = 6;

const REFINEMENT_ROUNDS: usize = 16;
const BOX_SHRINK: f64 = 0.25;

/// Minimises the largest weighted propensity to disrupt over the imputation
/// set. Agrees with the weighted value at exponent `1/beta` on regular games.
pub fn minimax_oracle(game: &Game, beta: f64) -> Result<Allocation> {
    if !(beta.is_finite() && beta > 0.0) {
        return Err(Error::InvalidAlpha);
    }
    grid_minimise(game, beta, Objective::Max)
}

/// Minimises the total weighted propensity to disrupt with `beta` derived
/// from `alpha` in `(0, 1)` as `(1 - alpha) / alpha`. Agrees with the
/// weighted value at exponent `alpha`. `alpha = 1` would give `beta = 0` and
/// a constant objective, so it is rejected as degenerate.
pub fn aggregate_min_oracle(game: &Game, alpha: f64) -> Result<Allocation> {
    if alpha == 1.0 {
        return Err(Error::BetaZeroDegenerate);
    }
    if !(alpha.is_finite() && alpha > 0.0 && alpha < 1.0) {
        return Err(Error::InvalidAlpha);
    }
    let beta = (1.0 - alpha) / alpha;
    grid_minimise(game, beta, Objective::Sum)
}

#[derive(Clone, Copy)]
enum Objective {
    Max,
    Sum,
}

fn grid_minimise(game: &Game, beta: f64, objective: Objective) -> Result<Allocation> {
    if game.n() > ORACLE_MAX_PLAYERS {
        return Err(Error::PlayerCountOutOfRange(game.n()));
    }
    if !game.classify().regular {
        return Err(Error::NotRegular);
    }
    let n = game.n();
    let singles: Vec<f64> = game.individual_worths().iter().map(to_f64).collect();
    let nets: Vec<f64> = game
        .marginal_contributions()
        .iter()
        .zip(game.individual_worths().iter())
        .map(|(m, v)| to_f64(&(m - v)))
        .collect();
    let surplus = to_f64(game.grand_worth()) - singles.iter().sum::<f64>();
    if surplus <= 0.0 {
        // Regularity with zero surplus pins the single imputation.
        return Ok(Allocation::Float(singles));
    }

    // Shares s on the simplex parameterise imputations x = v + s * surplus.
    let evaluate = |shares: &[f64]| -> f64 {
        let mut acc: f64 = 0.0;
        for i in 0..n {
            if nets[i] == 0.0 {
                continue;
            }
            let gain = shares[i] * surplus;
            let term = if gain <= 0.0 {
                f64::INFINITY
            } else {
                nets[i] / gain.powf(beta)
            };
            match objective {
                Objective::Max => acc = acc.max(term),
                Objective::Sum => acc += term,
            }
            if acc.is_infinite() {
                return f64::INFINITY;
            }
        }
        acc
    };

    let free = n - 1;
    let mut lo = vec![0.0f64; free];
    let mut hi = vec![1.0f64; free];
    let divisions = match n {
        2 | 3 => 32,
        4 => 16,
        5 => 12,
        _ => 8,
    };

    let mut best_shares = vec![1.0 / n as f64; n];
    let mut best_value = evaluate(&best_shares);

    for _ in 0..REFINEMENT_ROUNDS {
        let mut point = vec![0.0f64; n];
        let mut index = vec![0usize; free];
        'sweep: loop {
            let mut total = 0.0;
            for d in 0..free {
                point[d] = lo[d] + (hi[d] - lo[d]) * index[d] as f64 / divisions as f64;
                total += point[d];
            }
            if total <= 1.0 + 1e-12 {
                point[free] = (1.0 - total).max(0.0);
                let value = evaluate(&point);
                if value < best_value {
                    best_value = value;
                    best_shares.copy_from_slice(&point);
                }
            }
            // Odometer increment over the free coordinates.
            for d in 0..free {
                index[d] += 1;
                if index[d] <= divisions {
                    continue 'sweep;
                }
                index[d] = 0;
            }
            break;
        }

        for d in 0..free {
            let width = (hi[d] - lo[d]) * BOX_SHRINK;
            lo[d] = (best_shares[d] - width / 2.0).max(0.0);
            hi[d] = (lo[d] + width).min(1.0);
        }
    }

    let payoffs = (0..n)
        .map(|i| singles[i] + best_shares[i] * surplus)
        .collect();
    Ok(Allocation::Float(payoffs))
}
