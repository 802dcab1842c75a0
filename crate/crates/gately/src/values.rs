//! Value maps: the balanced-disruption (Gately) value, its exponent-weighted
//! family, duals, the Shapley value and the flat division rule.

use crate::allocation::Allocation;
use crate::dividends::harsanyi_dividends;
use crate::error::{Error, Result};
use crate::game::Game;
use crate::numeric::{pow_u32, rat, to_f64, Rat};
use num_traits::{Signed, Zero};

/// Exponent parameter for the weighted value family. Positive integers run in
/// exact rational arithmetic; any other positive real runs in float mode.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Alpha {
    Int(u32),
    Real(f64),
}

impl Alpha {
    pub const ONE: Alpha = Alpha::Int(1);

    pub fn value(self) -> f64 {
        match self {
            Alpha::Int(k) => k as f64,
            Alpha::Real(a) => a,
        }
    }

    pub fn as_int(self) -> Option<u32> {
        match self {
            Alpha::Int(k) => Some(k),
            Alpha::Real(_) => None,
        }
    }

    pub fn validate(self) -> Result<Alpha> {
        match self {
            Alpha::Int(0) => Err(Error::InvalidAlpha),
            Alpha::Real(a) if !(a.is_finite() && a > 0.0) => Err(Error::InvalidAlpha),
            ok => Ok(ok),
        }
    }

    /// Parses a decimal literal. Pure integer literals select the exact path;
    /// anything fractional selects float mode.
    pub fn parse(text: &str) -> Option<Alpha> {
        if let Ok(k) = text.parse::<u32>() {
            return Some(Alpha::Int(k));
        }
        text.parse::<f64>().ok().map(Alpha::Real)
    }
}

/// Net marginal contributions `M_i(v) - v_i`, the weights every member of the
/// value family shares the surplus by.
fn net_marginals(game: &Game) -> (Vec<Rat>, Vec<Rat>) {
    let singles = game.individual_worths();
    let marginals = game.marginal_contributions();
    let nets = marginals
        .iter()
        .zip(&singles)
        .map(|(m, v)| m - v)
        .collect();
    (singles, nets)
}

/// The balanced-disruption value: each player receives her individual worth
/// plus a share of the surplus proportional to her net marginal contribution.
///
/// Defined whenever the net marginal contributions have a nonzero sum. When
/// they are all zero the imputation set is a single point and that point is
/// returned; otherwise the balance equations admit no unique solution and
/// `NotStandard` is raised (this covers games with a continuum of balanced
/// allocations).
pub fn gately_value(game: &Game) -> Result<Allocation> {
    alpha_gately_value(game, Alpha::ONE)
}

/// The exponent-weighted value: surplus shares proportional to
/// `(M_i(v) - v_i)^alpha`.
///
/// Integer `alpha` runs exactly. Non-integer `alpha` needs every net marginal
/// contribution nonnegative (`NotSemiStandard` otherwise) and runs in floats.
pub fn alpha_gately_value(game: &Game, alpha: Alpha) -> Result<Allocation> {
    let alpha = alpha.validate()?;
    let (singles, nets) = net_marginals(game);
    let surplus = game.surplus();

    if nets.iter().all(Rat::is_zero) {
        // The imputation set is {v_1, ..., v_n} when the surplus vanishes too.
        return if surplus.is_zero() {
            Ok(Allocation::Exact(singles))
        } else {
            Err(Error::NotStandard)
        };
    }

    match alpha {
        Alpha::Int(k) => {
            let powers: Vec<Rat> = nets.iter().map(|b| pow_u32(b, k)).collect();
            let total: Rat = powers.iter().sum();
            if total.is_zero() {
                return Err(Error::NotStandard);
            }
            let payoffs = singles
                .iter()
                .zip(&powers)
                .map(|(v, p)| v + p / &total * &surplus)
                .collect();
            Ok(Allocation::Exact(payoffs))
        }
        Alpha::Real(a) => {
            if nets.iter().any(Rat::is_negative) {
                return Err(Error::NotSemiStandard);
            }
            // Normalise by the largest base so extreme exponents cannot
            // overflow or flush the whole denominator to zero.
            let bases: Vec<f64> = nets.iter().map(to_f64).collect();
            let top = bases.iter().cloned().fold(0.0, f64::max);
            let powers: Vec<f64> = bases.iter().map(|b| (b / top).powf(a)).collect();
            let total: f64 = powers.iter().sum();
            let surplus = to_f64(&surplus);
            let payoffs = singles
                .iter()
                .zip(&powers)
                .map(|(v, p)| to_f64(v) + p / total * surplus)
                .collect();
            Ok(Allocation::Float(payoffs))
        }
    }
}

/// Endpoint selector for [`alpha_limit_value`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Limit {
    /// Exponent tending to zero: the surplus splits equally over every player
    /// with a strictly positive net marginal contribution.
    Zero,
    /// Exponent tending to infinity: the surplus splits equally over the
    /// players with the largest net marginal contribution.
    Infinity,
}

/// Exact endpoint of the weighted family as the exponent tends to zero or to
/// infinity. Players outside the receiving set keep their individual worths.
pub fn alpha_limit_value(game: &Game, which: Limit) -> Result<Allocation> {
    let (singles, nets) = net_marginals(game);
    if nets.iter().any(Rat::is_negative) {
        return Err(Error::NotSemiStandard);
    }
    let surplus = game.surplus();
    if nets.iter().all(Rat::is_zero) {
        return if surplus.is_zero() {
            Ok(Allocation::Exact(singles))
        } else {
            Err(Error::NotStandard)
        };
    }
    let receivers: Vec<usize> = match which {
        Limit::Zero => (0..game.n()).filter(|&i| nets[i].is_positive()).collect(),
        Limit::Infinity => {
            let top = nets.iter().max().cloned().unwrap();
            (0..game.n()).filter(|&i| nets[i] == top).collect()
        }
    };
    let share = surplus / rat(receivers.len() as i64);
    let payoffs = (0..game.n())
        .map(|i| {
            if receivers.contains(&i) {
                &singles[i] + &share
            } else {
                singles[i].clone()
            }
        })
        .collect();
    Ok(Allocation::Exact(payoffs))
}

/// The weighted value of the dual game, restricted to integer exponents: the
/// dual game's net marginal contributions are the negated originals, and only
/// integer powers keep that sign factor algebraically removable.
pub fn dual_alpha_gately(game: &Game, alpha: u32) -> Result<Allocation> {
    if alpha == 0 {
        return Err(Error::InvalidAlpha);
    }
    alpha_gately_value(&game.dual(), Alpha::Int(alpha))
}

/// Closed form of [`dual_alpha_gately`] evaluated on the original game:
/// `M_i(v) - (M_i - v_i)^alpha / sum_j (M_j - v_j)^alpha * (sum_j M_j(v) - v(N))`.
/// Kept as an independent route so tests can confirm the two agree exactly.
pub fn dual_alpha_gately_closed_form(game: &Game, alpha: u32) -> Result<Allocation> {
    if alpha == 0 {
        return Err(Error::InvalidAlpha);
    }
    let (_, nets) = net_marginals(game);
    let marginals = game.marginal_contributions();
    let excess: Rat = marginals.iter().sum::<Rat>() - game.grand_worth();
    if nets.iter().all(Rat::is_zero) {
        return if excess.is_zero() {
            Ok(Allocation::Exact(marginals))
        } else {
            Err(Error::NotStandard)
        };
    }
    let powers: Vec<Rat> = nets.iter().map(|b| pow_u32(b, alpha)).collect();
    let total: Rat = powers.iter().sum();
    if total.is_zero() {
        return Err(Error::NotStandard);
    }
    let payoffs = marginals
        .iter()
        .zip(&powers)
        .map(|(m, p)| m - p / &total * &excess)
        .collect();
    Ok(Allocation::Exact(payoffs))
}

/// The Shapley value, computed exactly from the Harsanyi dividends: each
/// carrier coalition splits its dividend equally among its members.
pub fn shapley_value(game: &Game) -> Allocation {
    let decomposition = harsanyi_dividends(game);
    let mut payoffs = vec![Rat::zero(); game.n()];
    for (s, dividend) in decomposition.entries() {
        let share = dividend / rat(s.size() as i64);
        for i in s.members() {
            payoffs[i] += &share;
        }
    }
    Allocation::Exact(payoffs)
}

/// Equal division of the grand-coalition worth.
pub fn equal_division(game: &Game) -> Allocation {
    let share = game.grand_worth() / rat(game.n() as i64);
    Allocation::Exact(vec![share; game.n()])
}

/// The compromise coefficient: the fraction of the way from the individual
/// worth vector towards the marginal contribution vector the balanced value
/// sits at, `(v(N) - sum v_i) / sum (M_i(v) - v_i)`.
pub fn compromise_coefficient(game: &Game) -> Result<Rat> {
    let (_, nets) = net_marginals(game);
    let total: Rat = nets.iter().sum();
    if total.is_zero() {
        return Err(Error::NotStandard);
    }
    Ok(game.surplus() / total)
}

/// Convenience used by oracles and reports: the weighted value converted to
/// floats regardless of its computation mode.
pub fn alpha_gately_f64(game: &Game, alpha: Alpha) -> Result<Vec<f64>> {
    Ok(alpha_gately_value(game, alpha)?.to_f64_vec())
}

impl std::str::FromStr for Alpha {
    type Err = Error;

    fn from_str(s: &str) -> Result<Alpha> {
        Alpha::parse(s).ok_or(Error::InvalidAlpha)?.validate()
    }
}
