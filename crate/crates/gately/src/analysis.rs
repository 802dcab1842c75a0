//! Core geometry and the structural checkers: membership certificates,
//! exact nonemptiness, top dominance, exponent-range search and the
//! structural equalities between value maps.

use crate::allocation::Allocation;
use crate::coalition::Coalition;
use crate::dividends::{harsanyi_dividends, DividendDecomposition};
use crate::error::{Error, Result};
use crate::game::Game;
use crate::numeric::{pow_u32, rat, to_f64, Rat, ScalarValue, FLOAT_TOL};
use crate::simplex::{solve, Constraint, LpStatus};
use crate::values::{alpha_gately_value, gately_value, shapley_value, Alpha};
use num_traits::{Signed, Zero};

/// Efficiency: the payoffs sum to the grand-coalition worth, exactly in exact
/// mode and within `1e-9 * max(1, |v(N)|)` in float mode.
pub fn is_efficient(game: &Game, x: &Allocation) -> bool {
    if x.len() != game.n() {
        return false;
    }
    match x {
        Allocation::Exact(_) => {
            x.coalition_total_exact(game.grand()).unwrap() == *game.grand_worth()
        }
        Allocation::Float(_) => {
            let total = x.coalition_total_f64(game.grand());
            let target = to_f64(game.grand_worth());
            (total - target).abs() <= FLOAT_TOL * target.abs().max(1.0)
        }
    }
}

/// Efficiency plus individual rationality.
pub fn is_imputation(game: &Game, x: &Allocation) -> bool {
    if !is_efficient(game, x) {
        return false;
    }
    match x {
        Allocation::Exact(v) => (0..game.n()).all(|i| v[i] >= *game.worth(Coalition::singleton(i))),
        Allocation::Float(v) => {
            (0..game.n()).all(|i| v[i] >= to_f64(game.worth(Coalition::singleton(i))) - FLOAT_TOL)
        }
    }
}

/// One violated Core constraint: the coalition and how much it falls short.
#[derive(Clone, Debug, PartialEq)]
pub struct CoreViolation {
    pub coalition: Coalition,
    pub deficit: ScalarValue,
}

/// Outcome of checking every coalition constraint. The grand coalition is
/// checked as an equality (efficiency); every other nonempty coalition as
/// `x(S) >= v(S)`.
#[derive(Clone, Debug, PartialEq)]
pub struct CoreCertificate {
    pub member: bool,
    pub violated_coalitions: Vec<CoreViolation>,
}

pub fn core_membership(game: &Game, x: &Allocation) -> CoreCertificate {
    let n = game.n();
    let mut violations = Vec::new();
    if x.len() != n {
        return CoreCertificate {
            member: false,
            violated_coalitions: vec![CoreViolation {
                coalition: game.grand(),
                deficit: ScalarValue::Float(f64::NAN),
            }],
        };
    }
    let grand = game.grand();
    for s in Coalition::nonempty(n) {
        match x {
            Allocation::Exact(_) => {
                let deficit = game.worth(s) - x.coalition_total_exact(s).unwrap();
                let violated = if s == grand {
                    !deficit.is_zero()
                } else {
                    deficit.is_positive()
                };
                if violated {
                    violations.push(CoreViolation {
                        coalition: s,
                        deficit: ScalarValue::Exact(deficit),
                    });
                }
            }
            Allocation::Float(_) => {
                let deficit = to_f64(game.worth(s)) - x.coalition_total_f64(s);
                let violated = if s == grand {
                    deficit.abs() > FLOAT_TOL * to_f64(game.worth(s)).abs().max(1.0)
                } else {
                    deficit > FLOAT_TOL
                };
                if violated {
                    violations.push(CoreViolation {
                        coalition: s,
                        deficit: ScalarValue::Float(deficit),
                    });
                }
            }
        }
    }
    CoreCertificate {
        member: violations.is_empty(),
        violated_coalitions: violations,
    }
}

/// Exact Core nonemptiness with a witness.
#[derive(Clone, Debug, PartialEq)]
pub struct CoreExistence {
    pub nonempty: bool,
    pub witness: Option<Allocation>,
}

/// Decides Core nonemptiness exactly via the balancedness linear program:
/// nonnegative weights on proper coalitions covering every player exactly
/// once, maximising the weighted worth. The Core is nonempty iff that
/// optimum is at most `v(N)`; the equality rows' duals then assemble a
/// witness imputation.
pub fn core_nonempty(game: &Game) -> CoreExistence {
    let n = game.n();
    let proper: Vec<Coalition> = Coalition::proper_nonempty(n).collect();
    let num_vars = proper.len();

    let mut constraints = Vec::with_capacity(n);
    for i in 0..n {
        let coeffs = proper
            .iter()
            .map(|s| if s.contains(i) { rat(1) } else { Rat::zero() })
            .collect();
        constraints.push(Constraint::eq(coeffs, rat(1)));
    }
    let objective: Vec<Rat> = proper.iter().map(|s| -game.worth(*s)).collect();
    let solution = solve(num_vars, &constraints, &objective);
    assert_eq!(
        solution.status,
        LpStatus::Optimal,
        "balancedness program is always feasible and bounded"
    );

    // Minimal total payoff that satisfies every coalition constraint.
    let min_total = -&solution.objective;
    if min_total > *game.grand_worth() {
        return CoreExistence {
            nonempty: false,
            witness: None,
        };
    }
    let slack = (game.grand_worth() - &min_total) / rat(n as i64);
    let witness: Vec<Rat> = solution.duals.iter().map(|u| -u + &slack).collect();
    debug_assert!(core_membership(game, &Allocation::Exact(witness.clone())).member);
    CoreExistence {
        nonempty: true,
        witness: Some(Allocation::Exact(witness)),
    }
}

/// Outcome of the per-coalition dominance inequality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopDominance {
    pub holds: bool,
    pub first_failing: Option<Coalition>,
}

/// Checks, for every coalition `S`, that the surplus of `S` weighted by the
/// total exponentiated net marginal contributions stays below the grand
/// surplus weighted by `S`'s own share of those contributions. Exact for
/// integer exponents.
pub fn alpha_top_dominance(game: &Game, alpha: Alpha) -> Result<TopDominance> {
    let alpha = alpha.validate()?;
    let n = game.n();
    let singles = game.individual_worths();
    let nets: Vec<Rat> = game
        .marginal_contributions()
        .iter()
        .zip(&singles)
        .map(|(m, v)| m - v)
        .collect();
    if nets.iter().any(Rat::is_negative) {
        return Err(Error::NotSemiStandard);
    }
    if nets.iter().all(Rat::is_zero) {
        // Both sides of every inequality vanish.
        return Ok(TopDominance {
            holds: true,
            first_failing: None,
        });
    }
    let surplus = game.surplus();

    match alpha {
        Alpha::Int(k) => {
            let powers: Vec<Rat> = nets.iter().map(|b| pow_u32(b, k)).collect();
            let total: Rat = powers.iter().sum();
            for s in Coalition::all(n) {
                let coalition_surplus =
                    game.worth(s) - s.members().map(|i| singles[i].clone()).sum::<Rat>();
                let share: Rat = s.members().map(|i| powers[i].clone()).sum();
                if coalition_surplus * &total > &surplus * share {
                    return Ok(TopDominance {
                        holds: false,
                        first_failing: Some(s),
                    });
                }
            }
        }
        Alpha::Real(a) => {
            let bases: Vec<f64> = nets.iter().map(to_f64).collect();
            let top = bases.iter().cloned().fold(0.0, f64::max);
            let powers: Vec<f64> = bases.iter().map(|b| (b / top).powf(a)).collect();
            let total: f64 = powers.iter().sum();
            let surplus = to_f64(&surplus);
            for s in Coalition::all(n) {
                let coalition_surplus = to_f64(game.worth(s))
                    - s.members().map(|i| to_f64(&singles[i])).sum::<f64>();
                let share: f64 = s.members().map(|i| powers[i]).sum();
                let lhs = coalition_surplus * total;
                let rhs = surplus * share;
                if lhs > rhs + FLOAT_TOL * lhs.abs().max(rhs.abs()).max(1.0) {
                    return Ok(TopDominance {
                        holds: false,
                        first_failing: Some(s),
                    });
                }
            }
        }
    }
    Ok(TopDominance {
        holds: true,
        first_failing: None,
    })
}

/// The dominance property and Core membership of the weighted value decide
/// each other; this evaluates both routes and reports whether they agree.
pub fn check_maincore_iff(game: &Game, alpha: Alpha) -> Result<bool> {
    let dominance = alpha_top_dominance(game, alpha)?;
    let value = alpha_gately_value(game, alpha)?;
    let membership = core_membership(game, &value);
    Ok(dominance.holds == membership.member)
}

/// If the dominance inequality holds at `alpha`, the game must be regular and
/// partitionally superadditive; returns whether that implication is satisfied.
pub fn check_topdominance_implications(game: &Game, alpha: Alpha) -> Result<bool> {
    let dominance = alpha_top_dominance(game, alpha)?;
    if !dominance.holds {
        return Ok(true);
    }
    let report = game.classify();
    Ok(report.regular && report.partitionally_superadditive)
}

/// A closed stretch of exponent values whose weighted value stays in the Core.
/// Degenerate intervals collapse to a single point. `*_exact` marks endpoints
/// confirmed by an exact integer-exponent membership check; the rest carry
/// float tolerances and are approximate.
#[derive(Clone, Debug, PartialEq)]
pub struct AlphaInterval {
    pub lo: f64,
    pub hi: f64,
    pub lo_closed: bool,
    pub hi_closed: bool,
    pub lo_exact: bool,
    pub hi_exact: bool,
}

impl AlphaInterval {
    pub fn is_degenerate(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, alpha: f64) -> bool {
        alpha >= self.lo && alpha <= self.hi
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct AlphaRange {
    pub intervals: Vec<AlphaInterval>,
    pub probe_grid: Vec<f64>,
}

pub const ALPHA_PROBE_MIN: f64 = 1e-3;
pub const ALPHA_PROBE_MAX: f64 = 1e3;

fn alpha_from_f64(a: f64) -> Alpha {
    if a.fract() == 0.0 && (1.0..=1e6).contains(&a) {
        Alpha::Int(a as u32)
    } else {
        Alpha::Real(a)
    }
}

/// Probes Core membership of the weighted value on a log grid over
/// `[1e-3, 1e3]` and bisects every membership flip down to `refine_tol`.
/// Interval endpoints found within `refine_tol` of an integer are re-checked
/// exactly at that integer and snapped onto it when the exact check passes.
pub fn alpha_core_range(game: &Game, grid_points: usize, refine_tol: f64) -> Result<AlphaRange> {
    if !game.classify().standard {
        return Err(Error::NotStandard);
    }
    let points = grid_points.max(3) | 1; // odd, so the grid hits 1.0 exactly
    let mid = (points - 1) / 2;
    let step = 6.0 / (points - 1) as f64;
    let grid: Vec<f64> = (0..points)
        .map(|i| 10f64.powf((i as f64 - mid as f64) * step))
        .collect();

    let member = |a: f64| -> bool {
        let value = alpha_gately_value(game, alpha_from_f64(a))
            .expect("standard game: weighted value defined for every positive exponent");
        core_membership(game, &value).member
    };
    let member_exact_at_int = |a: f64| -> bool {
        let rounded = a.round();
        if (a - rounded).abs() <= refine_tol && (1.0..=1e6).contains(&rounded) {
            let value = alpha_gately_value(game, Alpha::Int(rounded as u32)).unwrap();
            core_membership(game, &value).member
        } else {
            false
        }
    };

    let verdicts: Vec<bool> = grid.iter().map(|&a| member(a)).collect();

    // Bisect between an outside point and an inside point; returns the
    // refined inside endpoint.
    let refine = |mut outside: f64, mut inside: f64| -> f64 {
        while (outside - inside).abs() > refine_tol {
            let midpoint = 0.5 * (outside + inside);
            if member(midpoint) {
                inside = midpoint;
            } else {
                outside = midpoint;
            }
        }
        inside
    };

    let mut intervals = Vec::new();
    let mut i = 0;
    while i < verdicts.len() {
        if !verdicts[i] {
            i += 1;
            continue;
        }
        let run_start = i;
        while i < verdicts.len() && verdicts[i] {
            i += 1;
        }
        let run_end = i - 1;

        let mut lo = if run_start == 0 {
            grid[0]
        } else {
            refine(grid[run_start - 1], grid[run_start])
        };
        let mut hi = if run_end + 1 == verdicts.len() {
            grid[run_end]
        } else {
            refine(grid[run_end + 1], grid[run_end])
        };

        let mut lo_exact = false;
        let mut hi_exact = false;
        if member_exact_at_int(lo) {
            lo = lo.round();
            lo_exact = true;
        }
        if member_exact_at_int(hi) {
            hi = hi.round();
            hi_exact = true;
        }
        if hi - lo <= refine_tol {
            // Collapse to the best witness point inside the run.
            let point = if lo_exact {
                lo
            } else if hi_exact {
                hi
            } else {
                grid[run_start]
            };
            let exact = lo_exact || hi_exact || point.fract() == 0.0;
            intervals.push(AlphaInterval {
                lo: point,
                hi: point,
                lo_closed: true,
                hi_closed: true,
                lo_exact: exact,
                hi_exact: exact,
            });
        } else {
            intervals.push(AlphaInterval {
                lo,
                hi,
                lo_closed: true,
                hi_closed: true,
                lo_exact,
                hi_exact,
            });
        }
    }

    Ok(AlphaRange {
        intervals,
        probe_grid: grid,
    })
}

/// The three facts the three-player Core theorem ties together.
/// `gately_in_core` is `None` when the value map is undefined for the game.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreePlayerCoreCheck {
    pub semi_regular: bool,
    pub core_nonempty: bool,
    pub gately_in_core: Option<bool>,
}

impl ThreePlayerCoreCheck {
    /// Semi-regularity forces a nonempty Core containing the balanced value,
    /// and a nonempty Core forces semi-regularity.
    pub fn implications_hold(&self) -> bool {
        let forward =
            !self.semi_regular || (self.core_nonempty && self.gately_in_core == Some(true));
        let backward = !self.core_nonempty || self.semi_regular;
        forward && backward
    }
}

pub fn three_player_core_check(game: &Game) -> Result<ThreePlayerCoreCheck> {
    if game.n() != 3 {
        return Err(Error::WrongPlayerCount {
            expected: 3,
            got: game.n(),
        });
    }
    let report = game.classify();
    let existence = core_nonempty(game);
    let gately_in_core = match gately_value(game) {
        Ok(x) => Some(core_membership(game, &x).member),
        Err(_) => None,
    };
    Ok(ThreePlayerCoreCheck {
        semi_regular: report.semi_regular,
        core_nonempty: existence.nonempty,
        gately_in_core,
    })
}

/// Carrier-shape summary: whether every coalition with a nonzero dividend has
/// the same size `k` with `2 <= k <= n-1` on a regular game.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KGameStructure {
    pub is_k_game: bool,
    pub k: Option<usize>,
    pub carrier: Vec<Coalition>,
}

pub fn kgame_structure(game: &Game) -> KGameStructure {
    let decomposition = harsanyi_dividends(game);
    let carrier: Vec<Coalition> = decomposition.carrier().collect();
    let uniform_size = match carrier.first() {
        None => None,
        Some(first) => {
            let k = first.size();
            carrier.iter().all(|s| s.size() == k).then_some(k)
        }
    };
    let qualifies = uniform_size
        .map(|k| k >= 2 && k < game.n() && game.classify().regular)
        .unwrap_or(false);
    KGameStructure {
        is_k_game: qualifies,
        k: if qualifies { uniform_size } else { None },
        carrier,
    }
}

/// Exact equality test between the balanced value and the Shapley value.
pub fn check_gately_equals_shapley(game: &Game) -> Result<bool> {
    let gately = gately_value(game)?;
    Ok(gately == shapley_value(game))
}

/// Outcome of the balanced-externalities identity on a 2-game: each player's
/// payoff equals the total payoff change the others suffer when that player's
/// coalitions are deleted. Players whose reduced game has no defined value are
/// skipped and listed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalancedExternalities {
    pub holds: bool,
    pub skipped: Vec<usize>,
    pub failing: Vec<usize>,
}

pub fn balanced_externalities_check(game: &Game) -> Result<BalancedExternalities> {
    let structure = kgame_structure(game);
    if structure.k != Some(2) {
        return Err(Error::NotTwoGame);
    }
    let decomposition = harsanyi_dividends(game);
    let full_value = gately_value(game)?;
    let full = full_value.exact().expect("2-game values are exact");

    let mut skipped = Vec::new();
    let mut failing = Vec::new();
    for i in 0..game.n() {
        let reduced_entries = decomposition
            .entries()
            .filter(|(s, _)| !s.contains(i))
            .map(|(s, d)| (s, d.clone()));
        let reduced = DividendDecomposition::from_entries(game.n(), reduced_entries)?
            .to_game()?;
        let reduced_value = match gately_value(&reduced) {
            Ok(v) => v,
            Err(_) => {
                skipped.push(i);
                continue;
            }
        };
        let reduced = reduced_value.exact().unwrap();
        let rhs: Rat = (0..game.n())
            .filter(|&j| j != i)
            .map(|j| &full[j] - &reduced[j])
            .sum();
        if rhs != full[i] {
            failing.push(i);
        }
    }
    Ok(BalancedExternalities {
        holds: failing.is_empty(),
        skipped,
        failing,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::ratio;

    fn game3(worths: [i64; 8]) -> Game {
        Game::new(3, worths.iter().map(|&w| rat(w)).collect()).unwrap()
    }

    fn trade_game() -> Game {
        game3([0, 1, 0, 3, 0, 2, 0, 3])
    }

    fn singleton_core3() -> Game {
        game3([0, 0, 0, 5, 0, 6, 7, 9])
    }

    fn empty_core3() -> Game {
        game3([0, 5, 0, 1, 0, 1, 5, 6])
    }

    fn topdom_nonsuper3() -> Game {
        game3([0, 0, 0, -1, 0, -1, 0, 1])
    }

    #[test]
    fn imputation_predicate_on_trade_game() {
        let g = trade_game();
        assert!(is_imputation(
            &g,
            &Allocation::Exact(vec![ratio(7, 3), ratio(2, 3), rat(0)])
        ));
        // Individual rationality fails for the seller.
        assert!(!is_imputation(
            &g,
            &Allocation::Exact(vec![rat(0), rat(3), rat(0)])
        ));
        // Inefficient: sums to two, not three.
        assert!(!is_imputation(
            &g,
            &Allocation::Exact(vec![rat(1), rat(1), rat(0)])
        ));
    }

    #[test]
    fn trade_value_is_a_core_member() {
        let g = trade_game();
        let x = gately_value(&g).unwrap();
        let cert = core_membership(&g, &x);
        assert!(cert.member);
        assert!(cert.violated_coalitions.is_empty());
    }

    #[test]
    fn exact_membership_on_core_faces() {
        // The balanced value of this game sits on three Core faces at once;
        // exact arithmetic must report membership, not violation.
        let g = singleton_core3();
        let x = gately_value(&g).unwrap();
        assert_eq!(x, Allocation::Exact(vec![rat(2), rat(3), rat(4)]));
        assert!(core_membership(&g, &x).member);
    }

    #[test]
    fn empty_core_is_detected_exactly() {
        let existence = core_nonempty(&empty_core3());
        assert!(!existence.nonempty);
        assert!(existence.witness.is_none());
    }

    #[test]
    fn singleton_core_witness_is_the_unique_point() {
        let existence = core_nonempty(&singleton_core3());
        assert!(existence.nonempty);
        assert_eq!(
            existence.witness.unwrap(),
            Allocation::Exact(vec![rat(2), rat(3), rat(4)])
        );
    }

    #[test]
    fn trade_core_witness_verifies() {
        let g = trade_game();
        let existence = core_nonempty(&g);
        assert!(existence.nonempty);
        assert!(core_membership(&g, &existence.witness.unwrap()).member);
    }

    #[test]
    fn topdom_game_dominant_for_small_exponents() {
        let g = topdom_nonsuper3();
        for alpha in [Alpha::Int(1), Alpha::Int(2), Alpha::Int(3)] {
            let td = alpha_top_dominance(&g, alpha).unwrap();
            assert!(td.holds, "alpha = {alpha:?}");
        }
        // Negative coalition surplus keeps the constraint slack at any
        // non-integer exponent too.
        assert!(alpha_top_dominance(&g, Alpha::Real(0.37)).unwrap().holds);
    }

    #[test]
    fn topdominance_fails_on_standard_nonessential_game() {
        // Standard but not essential: the grand worth is negative while every
        // singleton is worth zero, so the first singleton already fails.
        let g = game3([0, 0, 0, -2, 0, -2, -2, -1]);
        assert!(g.classify().standard);
        assert!(!g.classify().essential);
        let td = alpha_top_dominance(&g, Alpha::Int(1)).unwrap();
        assert!(!td.holds);
        assert_eq!(td.first_failing, Some(Coalition::singleton(0)));
    }

    #[test]
    fn topdominance_boundary_pair_holds_with_equality() {
        // Pair {0,1} worth five against a grand surplus of five: both sides
        // of the dominance inequality agree exactly and membership sits on
        // the Core face.
        let g = game3([0, 0, 0, 5, 0, 1, 1, 5]);
        let td = alpha_top_dominance(&g, Alpha::Int(1)).unwrap();
        assert!(td.holds);
        assert!(check_maincore_iff(&g, Alpha::Int(1)).unwrap());
    }

    #[test]
    fn non_semi_standard_games_are_rejected_by_dominance() {
        assert_eq!(
            alpha_top_dominance(&empty_core3(), Alpha::Int(1)).unwrap_err(),
            Error::NotSemiStandard
        );
    }

    #[test]
    fn maincore_iff_on_named_games() {
        for alpha in [Alpha::Real(0.5), Alpha::Int(1), Alpha::Int(2)] {
            assert!(check_maincore_iff(&trade_game(), alpha).unwrap());
            assert!(check_maincore_iff(&singleton_core3(), alpha).unwrap());
            assert!(check_maincore_iff(&topdom_nonsuper3(), alpha).unwrap());
        }
    }

    #[test]
    fn three_player_check_rows() {
        let trade = three_player_core_check(&trade_game()).unwrap();
        assert_eq!(
            trade,
            ThreePlayerCoreCheck {
                semi_regular: true,
                core_nonempty: true,
                gately_in_core: Some(true),
            }
        );
        assert!(trade.implications_hold());

        let empty = three_player_core_check(&empty_core3()).unwrap();
        assert!(!empty.semi_regular);
        assert!(!empty.core_nonempty);
        assert!(empty.implications_hold());

        assert_eq!(
            three_player_core_check(&Game::zero(4).unwrap()).unwrap_err(),
            Error::WrongPlayerCount {
                expected: 3,
                got: 4
            }
        );
    }

    #[test]
    fn kgame_detection() {
        // Sum of the three pair unanimity games.
        let pairs = [(0, 1), (0, 2), (1, 2)];
        let mut g = Game::zero(3).unwrap();
        for (a, b) in pairs {
            g = g
                .add(&Game::unanimity(Coalition::from_members(&[a, b]), 3).unwrap())
                .unwrap();
        }
        let structure = kgame_structure(&g);
        assert!(structure.is_k_game);
        assert_eq!(structure.k, Some(2));
        assert_eq!(structure.carrier.len(), 3);

        // Mixed carrier sizes disqualify.
        let five = DividendDecomposition::from_entries(
            5,
            [
                (Coalition::from_members(&[0, 1]), rat(1)),
                (Coalition::from_members(&[2, 3, 4]), rat(3)),
            ],
        )
        .unwrap()
        .to_game()
        .unwrap();
        assert!(!kgame_structure(&five).is_k_game);

        // Grand-coalition carrier is out of the allowed size band.
        let u = Game::unanimity(Coalition::grand(3), 3).unwrap();
        assert!(!kgame_structure(&u).is_k_game);
    }

    #[test]
    fn balanced_externalities_on_the_pair_triangle() {
        let mut g = Game::zero(3).unwrap();
        for (a, b) in [(0, 1), (0, 2), (1, 2)] {
            g = g
                .add(&Game::unanimity(Coalition::from_members(&[a, b]), 3).unwrap())
                .unwrap();
        }
        let outcome = balanced_externalities_check(&g).unwrap();
        assert!(outcome.holds);
        assert!(outcome.skipped.is_empty());

        // A 3-uniform carrier is not a 2-game.
        let u = Game::unanimity(Coalition::grand(4), 4).unwrap();
        assert_eq!(
            balanced_externalities_check(&u).unwrap_err(),
            Error::NotTwoGame
        );
    }

    #[test]
    fn gately_equals_shapley_on_pair_triangle_only() {
        let mut triangle = Game::zero(3).unwrap();
        for (a, b) in [(0, 1), (0, 2), (1, 2)] {
            triangle = triangle
                .add(&Game::unanimity(Coalition::from_members(&[a, b]), 3).unwrap())
                .unwrap();
        }
        assert!(check_gately_equals_shapley(&triangle).unwrap());
        assert!(!check_gately_equals_shapley(&trade_game()).unwrap());
    }

    #[test]
    fn implications_of_dominance() {
        assert!(check_topdominance_implications(&topdom_nonsuper3(), Alpha::Int(1)).unwrap());
        assert!(check_topdominance_implications(&topdom_nonsuper3(), Alpha::Int(2)).unwrap());
        // Vacuous when dominance fails.
        let g = game3([0, 0, 0, 5, 0, 1, 1, 5]);
        assert!(check_topdominance_implications(&g, Alpha::Int(1)).unwrap());
    }

    #[test]
    fn float_mode_membership_tolerates_rounding() {
        let g = trade_game();
        let x = Allocation::Float(vec![7.0 / 3.0 + 2e-10, 2.0 / 3.0 - 2e-10, 0.0]);
        assert!(core_membership(&g, &x).member);
        let x = Allocation::Float(vec![7.0 / 3.0, 2.0 / 3.0 - 1e-6, 1e-6]);
        let cert = core_membership(&g, &x);
        assert!(!cert.member);
        assert_eq!(
            cert.violated_coalitions[0].coalition,
            Coalition::from_members(&[0, 1])
        );
    }
}
