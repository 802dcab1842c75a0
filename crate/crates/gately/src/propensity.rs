//! Propensities to disrupt: how much the rest of the table loses, relative to
//! the deserter's own loss, when a player or coalition walks away.

use crate::allocation::Allocation;
use crate::coalition::Coalition;
use crate::error::{Error, Result};
use crate::game::Game;
use crate::numeric::{pow_u32, to_f64, Rat};
use num_traits::{Signed, Zero};

/// A propensity value. A player held exactly at her individual worth has an
/// infinite propensity to disrupt; a zero-over-zero ratio is reported as
/// `Indeterminate` rather than an error.
#[derive(Clone, Debug, PartialEq)]
pub enum ExtendedReal {
    Exact(Rat),
    Float(f64),
    PosInfinity,
    NegInfinity,
    Indeterminate,
}

impl ExtendedReal {
    pub fn to_f64(&self) -> f64 {
        match self {
            ExtendedReal::Exact(r) => to_f64(r),
            ExtendedReal::Float(x) => *x,
            ExtendedReal::PosInfinity => f64::INFINITY,
            ExtendedReal::NegInfinity => f64::NEG_INFINITY,
            ExtendedReal::Indeterminate => f64::NAN,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtendedReal::Exact(_) | ExtendedReal::Float(_))
    }

    fn from_ratio_exact(numerator: Rat, denominator: Rat) -> ExtendedReal {
        if denominator.is_zero() {
            if numerator.is_zero() {
                ExtendedReal::Indeterminate
            } else if numerator.is_positive() {
                ExtendedReal::PosInfinity
            } else {
                ExtendedReal::NegInfinity
            }
        } else {
            ExtendedReal::Exact(numerator / denominator)
        }
    }

    fn from_ratio_f64(numerator: f64, denominator: f64) -> ExtendedReal {
        if denominator == 0.0 {
            if numerator == 0.0 {
                ExtendedReal::Indeterminate
            } else if numerator > 0.0 {
                ExtendedReal::PosInfinity
            } else {
                ExtendedReal::NegInfinity
            }
        } else {
            ExtendedReal::Float(numerator / denominator)
        }
    }
}

/// Per-player propensity values together with the exponent they were computed
/// under (`None` for the original unweighted ratio).
#[derive(Clone, Debug, PartialEq)]
pub struct PropensityProfile {
    pub entries: Vec<ExtendedReal>,
    pub beta: Option<f64>,
}

/// Propensity to disrupt of the coalition `s` at allocation `x`: the loss the
/// complement suffers divided by the loss `s` itself suffers.
pub fn propensity_coalition(game: &Game, x: &Allocation, s: Coalition) -> Result<ExtendedReal> {
    let n = game.n();
    if s.is_empty() || s == game.grand() {
        return Err(Error::BadCoalition);
    }
    check_length(game, x)?;
    let complement = s.complement(n);
    match x {
        Allocation::Exact(_) => {
            let num = x.coalition_total_exact(complement).unwrap() - game.worth(complement);
            let den = x.coalition_total_exact(s).unwrap() - game.worth(s);
            Ok(ExtendedReal::from_ratio_exact(num, den))
        }
        Allocation::Float(_) => {
            let num = x.coalition_total_f64(complement) - to_f64(game.worth(complement));
            let den = x.coalition_total_f64(s) - to_f64(game.worth(s));
            Ok(ExtendedReal::from_ratio_f64(num, den))
        }
    }
}

/// Propensity to disrupt of player `i`: `(M_i(v) - x_i) / (x_i - v_i)`.
pub fn propensity_player(game: &Game, x: &Allocation, i: usize) -> Result<ExtendedReal> {
    if i >= game.n() {
        return Err(Error::PlayerOutOfRange(i));
    }
    check_length(game, x)?;
    let marginal = &game.marginal_contributions()[i];
    let single = game.worth(Coalition::singleton(i));
    match x {
        Allocation::Exact(v) => Ok(ExtendedReal::from_ratio_exact(
            marginal - &v[i],
            &v[i] - single,
        )),
        Allocation::Float(v) => Ok(ExtendedReal::from_ratio_f64(
            to_f64(marginal) - v[i],
            v[i] - to_f64(single),
        )),
    }
}

/// The original per-player propensity profile `d_i(x)`.
pub fn disruption_profile(game: &Game, x: &Allocation) -> Result<PropensityProfile> {
    let entries = (0..game.n())
        .map(|i| propensity_player(game, x, i))
        .collect::<Result<Vec<_>>>()?;
    Ok(PropensityProfile {
        entries,
        beta: None,
    })
}

/// Weighted propensity to disrupt of player `i` at imputation `x`:
/// `(M_i(v) - v_i) / (x_i - v_i)^beta`.
///
/// Zero whenever `M_i(v) = v_i` (including at `x_i = v_i`); positive infinity
/// when `x_i = v_i` while `M_i(v) > v_i`.
pub fn generalized_propensity(
    game: &Game,
    x: &Allocation,
    i: usize,
    beta: f64,
) -> Result<ExtendedReal> {
    if i >= game.n() {
        return Err(Error::PlayerOutOfRange(i));
    }
    if !(beta.is_finite() && beta > 0.0) {
        return Err(Error::InvalidAlpha);
    }
    if !crate::analysis::is_imputation(game, x) {
        return Err(Error::NonImputation);
    }
    let net = &game.marginal_contributions()[i] - game.worth(Coalition::singleton(i));
    if net.is_zero() {
        return Ok(match x {
            Allocation::Exact(_) => ExtendedReal::Exact(Rat::zero()),
            Allocation::Float(_) => ExtendedReal::Float(0.0),
        });
    }
    let integral_beta = (beta.fract() == 0.0 && beta <= u32::MAX as f64).then_some(beta as u32);
    match (x, integral_beta) {
        (Allocation::Exact(v), Some(k)) => {
            let gain = &v[i] - game.worth(Coalition::singleton(i));
            Ok(ExtendedReal::from_ratio_exact(net, pow_u32(&gain, k)))
        }
        _ => {
            let gain = x.component_f64(i) - to_f64(game.worth(Coalition::singleton(i)));
            // Imputations keep the base nonnegative; clamp float dust.
            let gain = gain.max(0.0);
            Ok(ExtendedReal::from_ratio_f64(to_f64(&net), gain.powf(beta)))
        }
    }
}

/// The full weighted profile at imputation `x`.
pub fn beta_propensity_profile(game: &Game, x: &Allocation, beta: f64) -> Result<PropensityProfile> {
    let entries = (0..game.n())
        .map(|i| generalized_propensity(game, x, i, beta))
        .collect::<Result<Vec<_>>>()?;
    Ok(PropensityProfile {
        entries,
        beta: Some(beta),
    })
}

fn check_length(game: &Game, x: &Allocation) -> Result<()> {
    if x.len() != game.n() {
        return Err(Error::WrongAllocationLength {
            expected: game.n(),
            got: x.len(),
        });
    }
    Ok(())
}
