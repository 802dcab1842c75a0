//! Acceptance gate: one test per criterion, each printing a pass line.
//! Desk scale throughout; run with `cargo test --test acceptance`.

use gately::analysis::{
    alpha_core_range, alpha_top_dominance, balanced_externalities_check,
    check_gately_equals_shapley, check_maincore_iff, check_topdominance_implications,
    core_membership, core_nonempty, three_player_core_check,
};
use gately::coalition::Coalition;
use gately::dividends::DividendDecomposition;
use gately::error::Error;
use gately::game::Game;
use gately::generator::{fixture, generate, example_fixtures, ClassTarget, GeneratorConfig};
use gately::numeric::{rat, ratio, to_f64, Rat, ScalarValue};
use gately::oracle::{aggregate_min_oracle, minimax_oracle};
use gately::simplex::{solve, Constraint, LpStatus};
use gately::values::{alpha_gately_value, dual_alpha_gately, gately_value, shapley_value, Alpha};
use gately::{nucleolus, Allocation};

fn exact(parts: &[(i64, i64)]) -> Allocation {
    Allocation::Exact(parts.iter().map(|&(p, q)| ratio(p, q)).collect())
}

fn game(name: &str) -> Game {
    fixture(name).unwrap().game
}

fn pass(number: u32, what: &str) {
    println!("criterion {number} ({what}): PASS");
}

#[test]
fn criterion_1_named_game_values() {
    let trade = game("trade");
    assert_eq!(gately_value(&trade).unwrap(), exact(&[(7, 3), (2, 3), (0, 1)]));
    assert_eq!(shapley_value(&trade), exact(&[(13, 6), (2, 3), (1, 6)]));
    assert_eq!(nucleolus(&trade).unwrap(), exact(&[(5, 2), (1, 2), (0, 1)]));

    let emptycore = game("emptycore3");
    assert_eq!(
        gately_value(&emptycore).unwrap(),
        exact(&[(13, 3), (5, 6), (5, 6)])
    );
    assert_eq!(
        shapley_value(&emptycore),
        exact(&[(7, 3), (11, 6), (11, 6)])
    );

    let fourplayer = game("fourplayer_core_miss");
    assert_eq!(
        gately_value(&fourplayer).unwrap(),
        exact(&[(24, 7), (24, 7), (18, 7), (18, 7)])
    );
    assert_eq!(
        shapley_value(&fourplayer),
        exact(&[(15, 4), (15, 4), (9, 4), (9, 4)])
    );

    let fiveplayer = game("fiveplayer_unanimity");
    assert_eq!(
        gately_value(&fiveplayer).unwrap(),
        exact(&[(4, 11), (4, 11), (12, 11), (12, 11), (12, 11)])
    );
    assert_eq!(
        shapley_value(&fiveplayer),
        exact(&[(1, 2), (1, 2), (1, 1), (1, 1), (1, 1)])
    );

    let singleton = game("singleton_core3");
    let point = exact(&[(2, 1), (3, 1), (4, 1)]);
    assert_eq!(gately_value(&singleton).unwrap(), point);
    assert_eq!(nucleolus(&singleton).unwrap(), point);
    let existence = core_nonempty(&singleton);
    assert!(existence.nonempty);
    assert_eq!(existence.witness.unwrap(), point);
    assert!(core_membership(&singleton, &point).member);
    // Uniqueness: the Core-constrained extremes of every coordinate agree.
    for i in 0..3 {
        let (lo, hi) = coordinate_extremes_over_core(&singleton, i);
        assert_eq!(lo, hi, "core coordinate {i} is pinned");
        assert_eq!(lo, [rat(2), rat(3), rat(4)][i].clone());
    }

    pass(1, "worked-example values reproduced exactly");
}

/// Min and max of `x_i` over the Core, exact. The fixture is zero-normalised
/// so the Core sits inside the nonnegative orthant.
fn coordinate_extremes_over_core(game: &Game, i: usize) -> (Rat, Rat) {
    let n = game.n();
    let mut constraints = vec![Constraint::eq(
        vec![rat(1); n],
        game.grand_worth().clone(),
    )];
    for s in Coalition::proper_nonempty(n) {
        let coeffs = (0..n)
            .map(|j| if s.contains(j) { rat(1) } else { rat(0) })
            .collect();
        constraints.push(Constraint::ge(coeffs, game.worth(s).clone()));
    }
    let mut objective = vec![rat(0); n];
    objective[i] = rat(1);
    let min = solve(n, &constraints, &objective);
    assert_eq!(min.status, LpStatus::Optimal);
    objective[i] = rat(-1);
    let max = solve(n, &constraints, &objective);
    assert_eq!(max.status, LpStatus::Optimal);
    (min.objective, -max.objective)
}

#[test]
fn criterion_2_minimax_oracle_equivalence() {
    let alphas = [
        Alpha::Real(1.0 / 3.0),
        Alpha::Real(0.5),
        Alpha::Int(1),
        Alpha::Int(2),
        Alpha::Int(3),
    ];
    let aggregate_alphas = [1.0 / 3.0, 0.5, 2.0 / 3.0];
    let mut checked = 0;
    for fx in example_fixtures() {
        let g = &fx.game;
        if !g.classify().regular || g.n() > 5 {
            continue;
        }
        for &alpha in &alphas {
            let closed = alpha_gately_value(g, alpha).unwrap();
            let oracle = minimax_oracle(g, 1.0 / alpha.value()).unwrap();
            let distance = closed.max_component_distance(&oracle);
            assert!(
                distance <= 1e-5,
                "{}: minimax oracle off by {distance} at alpha {:?}",
                fx.name,
                alpha
            );
            checked += 1;
        }
        for &alpha in &aggregate_alphas {
            let closed = alpha_gately_value(g, Alpha::Real(alpha)).unwrap();
            let oracle = aggregate_min_oracle(g, alpha).unwrap();
            let distance = closed.max_component_distance(&oracle);
            assert!(
                distance <= 1e-5,
                "{}: aggregate oracle off by {distance} at alpha {alpha}",
                fx.name
            );
            checked += 1;
        }
    }
    assert!(checked >= 7 * 8, "expected every regular fixture covered");
    pass(2, "minimax and aggregate oracles match closed forms within 1e-5");
}

#[test]
fn criterion_3_maincore_iff_suite() {
    let alphas = [Alpha::Real(0.5), Alpha::Int(1), Alpha::Int(2)];
    for fx in example_fixtures() {
        if !fx.game.classify().standard {
            continue;
        }
        for &alpha in &alphas {
            assert!(
                check_maincore_iff(&fx.game, alpha).unwrap(),
                "iff failed on fixture {} at {:?}",
                fx.name,
                alpha
            );
        }
    }
    for i in 0..1000u64 {
        let g = generate(&GeneratorConfig {
            seed: 0x3000 + i,
            n: 3 + (i % 3) as usize,
            worth_bound: 5,
            class_target: ClassTarget::Standard,
        })
        .unwrap();
        for &alpha in &alphas {
            assert!(
                check_maincore_iff(&g, alpha).unwrap(),
                "iff failed at seed {i} alpha {alpha:?}"
            );
        }
    }
    pass(3, "top dominance decides Core membership on 1000 games, zero violations");
}

#[test]
fn criterion_4_three_player_core_equivalence() {
    for i in 0..1000u64 {
        // Half arbitrary games, half steered to semi-regularity so the
        // non-vacuous side of the implication is exercised heavily.
        let target = if i % 2 == 0 {
            ClassTarget::Any
        } else {
            ClassTarget::SemiRegular
        };
        let g = generate(&GeneratorConfig {
            seed: 0x4000 + i,
            n: 3,
            worth_bound: 5,
            class_target: target,
        })
        .unwrap();
        let check = three_player_core_check(&g).unwrap();
        assert!(
            check.implications_hold(),
            "three-player implications violated at seed {i}: {check:?}"
        );
    }
    pass(4, "semi-regular <=> nonempty Core with balanced value inside, 1000 games");
}

#[test]
fn criterion_5_axiomatisation_properties() {
    use gately::values::compromise_coefficient;
    for i in 0..1000u64 {
        let g = generate(&GeneratorConfig {
            seed: 0x5000 + i,
            n: 3 + (i % 3) as usize,
            worth_bound: 5,
            class_target: ClassTarget::Regular,
        })
        .unwrap();
        let value = gately_value(&g).unwrap();
        let payoffs = value.exact().unwrap();

        // Efficiency, exact.
        let total: Rat = payoffs.iter().cloned().sum();
        assert_eq!(total, *g.grand_worth(), "efficiency at seed {i}");

        // Compromise with the individual worth vector.
        let normalised = g.zero_normalise();
        let shifted = gately_value(&normalised).unwrap();
        let shifted = shifted.exact().unwrap();
        let singles = g.individual_worths();
        for j in 0..g.n() {
            assert_eq!(payoffs[j], &singles[j] + &shifted[j], "compromise at seed {i}");
        }

        // Restricted proportionality on the zero-normalisation.
        let gamma = compromise_coefficient(&normalised).unwrap();
        let marginals = normalised.marginal_contributions();
        for j in 0..g.n() {
            assert_eq!(shifted[j], &gamma * &marginals[j], "proportionality at seed {i}");
        }

        // Self-duality of the exponent-one value.
        assert_eq!(dual_alpha_gately(&g, 1).unwrap(), value, "self-duality at seed {i}");
    }
    pass(5, "efficiency, compromise, proportionality and self-duality, exact on 1000 games");
}

#[test]
fn criterion_6_gately_equals_shapley() {
    // Uniform-carrier games.
    for k in [2usize, 3] {
        for i in 0..200u64 {
            let n = 4 + (i % 3) as usize;
            let g = generate(&GeneratorConfig {
                seed: 0x6000 + 1000 * k as u64 + i,
                n,
                worth_bound: 4,
                class_target: ClassTarget::KGame(k),
            })
            .unwrap();
            assert!(
                check_gately_equals_shapley(&g).unwrap(),
                "k-game equality failed at k={k} seed {i}"
            );
        }
    }

    // Crossed-partition games with a shared dividend.
    for i in 0..50u64 {
        let g = generate(&GeneratorConfig {
            seed: 0x6800 + i,
            n: 6,
            worth_bound: 5,
            class_target: ClassTarget::PartitionGame(2, 3),
        })
        .unwrap();
        assert!(
            check_gately_equals_shapley(&g).unwrap(),
            "partition-game equality failed at seed {i}"
        );
    }
    // The unit-dividend instance: every player in one pair and one triple.
    let entries = [
        (&[0usize, 1][..], rat(1)),
        (&[2, 3][..], rat(1)),
        (&[4, 5][..], rat(1)),
        (&[0, 2, 4][..], rat(1)),
        (&[1, 3, 5][..], rat(1)),
    ];
    let g = DividendDecomposition::from_entries(
        6,
        entries
            .iter()
            .map(|(m, d)| (Coalition::from_members(m), d.clone())),
    )
    .unwrap()
    .to_game()
    .unwrap();
    assert_eq!(
        gately_value(&g).unwrap(),
        Allocation::Exact(vec![ratio(5, 6); 6])
    );
    assert!(check_gately_equals_shapley(&g).unwrap());

    // A mixed-carrier game where the equality genuinely fails.
    assert!(!check_gately_equals_shapley(&game("fiveplayer_unanimity")).unwrap());

    // Balanced externalities on pair games with positive dividends.
    let mut passing = 0;
    let mut seed = 0x6900u64;
    while passing < 100 {
        seed += 1;
        let n = 4 + (seed % 3) as usize;
        let Ok(g) = positive_two_game(seed, n) else {
            continue;
        };
        let outcome = balanced_externalities_check(&g).unwrap();
        assert!(
            outcome.holds,
            "balanced externalities failed at seed {seed}: {outcome:?}"
        );
        passing += 1;
    }
    pass(6, "balanced value equals Shapley on uniform-carrier and crossed-partition games");
}

/// A 2-game with strictly positive dividends on a random nonempty set of pairs.
fn positive_two_game(seed: u64, n: usize) -> Result<Game, Error> {
    let mut rng = gately::Xorshift64Star::new(seed);
    let mut entries = Vec::new();
    for s in Coalition::nonempty(n) {
        if s.size() == 2 && rng.below(2) == 0 {
            entries.push((s, rng.positive_rational(4)));
        }
    }
    if entries.is_empty() {
        return Err(Error::TargetUnreachable);
    }
    let g = DividendDecomposition::from_entries(n, entries)?.to_game()?;
    if !g.classify().regular {
        return Err(Error::TargetUnreachable);
    }
    Ok(g)
}

#[test]
fn criterion_7_topdominance_implications() {
    let fx = game("topdom_nonsuper3");
    for alpha in [Alpha::Int(1), Alpha::Int(2), Alpha::Int(3)] {
        assert!(alpha_top_dominance(&fx, alpha).unwrap().holds);
    }
    let report = fx.classify();
    assert!(report.regular && report.partitionally_superadditive);
    // Yet plainly not superadditive: two disjoint singletons beat their pair.
    assert!(*fx.worth(Coalition::from_members(&[0, 1])) < rat(0));

    for i in 0..1000u64 {
        let g = generate(&GeneratorConfig {
            seed: 0x7000 + i,
            n: 3 + (i % 3) as usize,
            worth_bound: 5,
            class_target: ClassTarget::Standard,
        })
        .unwrap();
        for alpha in [Alpha::Int(1), Alpha::Int(2)] {
            assert!(
                check_topdominance_implications(&g, alpha).unwrap(),
                "implication violated at seed {i} alpha {alpha:?}"
            );
        }
    }
    pass(7, "top dominance forces regularity and partitional superadditivity, 1000 games");
}

#[test]
fn criterion_8_alpha_range_analysis() {
    // Singleton-Core game: the exponent-one value is the only Core selector.
    let singleton = game("singleton_core3");
    let range = alpha_core_range(&singleton, 241, 1e-4).unwrap();
    assert_eq!(range.intervals.len(), 1, "exactly one interval");
    let iv = &range.intervals[0];
    assert!(iv.is_degenerate(), "degenerate interval, got {iv:?}");
    assert_eq!(iv.lo, 1.0);
    assert!(iv.lo_exact);

    // Top-dominant game: membership across the whole probed window.
    let topdom = game("topdom_nonsuper3");
    let range = alpha_core_range(&topdom, 241, 1e-4).unwrap();
    assert_eq!(range.intervals.len(), 1);
    let iv = &range.intervals[0];
    assert_eq!(iv.lo, *range.probe_grid.first().unwrap());
    assert_eq!(iv.hi, *range.probe_grid.last().unwrap());

    // Limit endpoints approached at extreme exponents, relative 1e-4 per
    // component (the zero-end deviation is linear in alpha with a slope just
    // above one, so the absolute reading is unattainable by construction).
    let close = |x: &Allocation, expected: &[f64]| {
        for (i, e) in expected.iter().enumerate() {
            let tolerance = 1e-4 * e.abs().max(1.0);
            let actual = x.component_f64(i);
            assert!(
                (actual - e).abs() <= tolerance,
                "component {i}: {actual} vs {e}"
            );
        }
    };
    close(
        &alpha_gately_value(&singleton, Alpha::Real(1e-4)).unwrap(),
        &[3.0, 3.0, 3.0],
    );
    close(
        &alpha_gately_value(&singleton, Alpha::Real(1e4)).unwrap(),
        &[0.0, 0.0, 9.0],
    );

    // Reported interior points re-verify, including on the reconstructed
    // interval of the zero-normalised three-player example: the weighted
    // value enters the Core at exactly one half and never leaves.
    let interval3 = game("alpha_interval3");
    let range = alpha_core_range(&interval3, 241, 1e-4).unwrap();
    assert_eq!(range.intervals.len(), 1);
    let iv = &range.intervals[0];
    assert!(
        (iv.lo - 0.5).abs() <= 2e-4,
        "derived lower endpoint 1/2, got {}",
        iv.lo
    );
    assert_eq!(iv.hi, *range.probe_grid.last().unwrap());
    for probe in [iv.lo, (iv.lo * iv.hi).sqrt(), iv.hi] {
        let x = alpha_gately_value(&interval3, Alpha::Real(probe)).unwrap();
        assert!(core_membership(&interval3, &x).member, "re-check at {probe}");
    }

    pass(8, "exponent-range search: degenerate point, full window, limit endpoints");
}

#[test]
fn criterion_9_error_paths() {
    let continuum = game("continuum3");
    assert_eq!(gately_value(&continuum).unwrap_err(), Error::NotStandard);

    let emptycore = game("emptycore3");
    assert!(!core_nonempty(&emptycore).nonempty);

    let trade = game("trade");
    assert_eq!(
        aggregate_min_oracle(&trade, 1.0).unwrap_err(),
        Error::BetaZeroDegenerate
    );
    pass(9, "undefined value, empty Core and degenerate exponent all reported");
}

#[test]
fn fixture_deficits_match_the_printed_core_misses() {
    // The two Core misses come with exact deficits at the pair {1,2}.
    let fourplayer = game("fourplayer_core_miss");
    let cert = core_membership(&fourplayer, &gately_value(&fourplayer).unwrap());
    assert!(!cert.member);
    let violation = &cert.violated_coalitions[0];
    assert_eq!(violation.coalition, Coalition::from_members(&[0, 1]));
    assert_eq!(violation.deficit, ScalarValue::Exact(ratio(8, 7)));
    // Core nonempty regardless, with a verified witness.
    let existence = core_nonempty(&fourplayer);
    assert!(existence.nonempty);
    assert!(core_membership(&fourplayer, &existence.witness.unwrap()).member);
    // Dominance fails first at the same pair.
    let td = alpha_top_dominance(&fourplayer, Alpha::Int(1)).unwrap();
    assert!(!td.holds);
    assert_eq!(td.first_failing, Some(Coalition::from_members(&[0, 1])));

    let fiveplayer = game("fiveplayer_unanimity");
    let cert = core_membership(&fiveplayer, &gately_value(&fiveplayer).unwrap());
    assert!(!cert.member);
    let violation = &cert.violated_coalitions[0];
    assert_eq!(violation.coalition, Coalition::from_members(&[0, 1]));
    assert_eq!(violation.deficit, ScalarValue::Exact(ratio(3, 11)));
    // The Shapley value of the same game is a Core member.
    assert!(core_membership(&fiveplayer, &shapley_value(&fiveplayer)).member);
    assert!(to_f64(&ratio(3, 11)) > 0.0);
}
