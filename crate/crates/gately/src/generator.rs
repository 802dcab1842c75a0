//! Deterministic fixture generation: a portable PRNG, rejection and
//! constructive samplers for the game classes the property suites quantify
//! over, and the named corpus of worked example games.

use crate::coalition::Coalition;
use crate::dividends::DividendDecomposition;
use crate::error::{Error, Result};
use crate::game::Game;
use crate::numeric::{rat, ratio, Rat};
use num_traits::Zero;

/// Marsaglia xorshift64* generator. The recurrence, applied to a nonzero
/// 64-bit state, is
///
/// ```text
/// x ^= x >> 12;  x ^= x << 25;  x ^= x >> 27;  output = x * 0x2545F4914F6CDD1D
/// ```
///
/// with wrapping multiplication. A zero seed is replaced by a fixed nonzero
/// constant. All operations are exact on `u64`, so streams are identical on
/// every platform and straightforward to reproduce in other languages.
#[derive(Clone, Debug)]
pub struct Xorshift64Star {
    state: u64,
}

impl Xorshift64Star {
    pub fn new(seed: u64) -> Xorshift64Star {
        Xorshift64Star {
            state: if seed == 0 { 0x9E3779B97F4A7C15 } else { seed },
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.state;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.state = x;
        x.wrapping_mul(0x2545F4914F6CDD1D)
    }

    /// Uniform-ish draw from `0..bound` by reduction; bias is irrelevant at
    /// the tiny bounds used here and keeps the stream easy to replicate.
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }

    /// A rational with numerator in `[-bound, bound]` and denominator in
    /// `[1, bound]`.
    pub fn rational(&mut self, bound: u32) -> Rat {
        let span = 2 * bound as i64 + 1;
        let numerator = self.below(span as u64) as i64 - bound as i64;
        let denominator = 1 + self.below(bound as u64) as i64;
        ratio(numerator, denominator)
    }

    /// A nonzero rational, same ranges.
    pub fn nonzero_rational(&mut self, bound: u32) -> Rat {
        loop {
            let r = self.rational(bound);
            if r != rat(0) {
                return r;
            }
        }
    }

    /// A strictly positive rational with numerator in `[1, bound]`.
    pub fn positive_rational(&mut self, bound: u32) -> Rat {
        let numerator = 1 + self.below(bound as u64) as i64;
        let denominator = 1 + self.below(bound as u64) as i64;
        ratio(numerator, denominator)
    }
}

/// Class the generator must hit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassTarget {
    Any,
    Standard,
    Regular,
    SemiRegular,
    ZeroNormalisedRegular,
    KGame(usize),
    PartitionGame(usize, usize),
}

#[derive(Clone, Debug)]
pub struct GeneratorConfig {
    pub seed: u64,
    pub n: usize,
    pub worth_bound: u32,
    pub class_target: ClassTarget,
}

const RETRY_BUDGET: usize = 10_000;

/// Draws a game matching the target class. Identical configurations yield
/// bit-identical games. Class membership is re-checked with `classify`
/// before returning; the retry budget guards rejection sampling.
pub fn generate(cfg: &GeneratorConfig) -> Result<Game> {
    let mut rng = Xorshift64Star::new(cfg.seed);
    let bound = cfg.worth_bound.max(1);
    match cfg.class_target {
        ClassTarget::KGame(k) => {
            if k < 2 || k + 1 > cfg.n {
                return Err(Error::TargetUnreachable);
            }
        }
        ClassTarget::PartitionGame(k, m) if k < 2 || m < 2 || k == m || k * m != cfg.n => {
            return Err(Error::TargetUnreachable);
        }
        _ => {}
    }

    for _ in 0..RETRY_BUDGET {
        let candidate = match cfg.class_target {
            ClassTarget::Any | ClassTarget::Standard | ClassTarget::Regular
            | ClassTarget::SemiRegular => random_game(&mut rng, cfg.n, bound)?,
            ClassTarget::ZeroNormalisedRegular => {
                let mut game = random_game(&mut rng, cfg.n, bound)?;
                game = game.zero_normalise();
                game
            }
            ClassTarget::KGame(k) => random_k_game(&mut rng, cfg.n, k, bound)?,
            ClassTarget::PartitionGame(k, m) => random_partition_game(&mut rng, cfg.n, k, m, bound)?,
        };
        let report = candidate.classify();
        let accept = match cfg.class_target {
            ClassTarget::Any => true,
            ClassTarget::Standard => report.standard,
            ClassTarget::Regular => report.regular,
            ClassTarget::SemiRegular => report.semi_regular,
            ClassTarget::ZeroNormalisedRegular => report.regular && report.zero_normalised,
            ClassTarget::KGame(k) => {
                let s = crate::analysis::kgame_structure(&candidate);
                s.is_k_game && s.k == Some(k)
            }
            ClassTarget::PartitionGame(..) => report.regular,
        };
        if accept {
            return Ok(candidate);
        }
    }
    Err(Error::TargetUnreachable)
}

fn random_game(rng: &mut Xorshift64Star, n: usize, bound: u32) -> Result<Game> {
    Game::from_fn(n, |_| rng.rational(bound))
}

fn random_k_game(rng: &mut Xorshift64Star, n: usize, k: usize, bound: u32) -> Result<Game> {
    // Constructive draw: every size-k coalition gets a dividend, most of them
    // positive so regularity is reachable, with an occasional negative one.
    let mut entries = Vec::new();
    for s in Coalition::nonempty(n) {
        if s.size() != k {
            continue;
        }
        match rng.below(4) {
            0 => {}
            3 => entries.push((s, -rng.positive_rational(bound) / rat(4))),
            _ => entries.push((s, rng.positive_rational(bound))),
        }
    }
    DividendDecomposition::from_entries(n, entries)?.to_game()
}

fn random_partition_game(
    rng: &mut Xorshift64Star,
    n: usize,
    k: usize,
    m: usize,
    bound: u32,
) -> Result<Game> {
    // One partition into blocks of size k (consecutive runs) and one into
    // blocks of size m (arithmetic progressions with stride k); every player
    // sits in exactly one block of each. A single positive dividend is shared
    // by all carrier coalitions.
    let dividend = rng.positive_rational(bound);
    let mut entries = Vec::new();
    for block in 0..m {
        let members: Vec<usize> = (block * k..(block + 1) * k).collect();
        entries.push((Coalition::from_members(&members), dividend.clone()));
    }
    for residue in 0..k {
        let members: Vec<usize> = (0..m).map(|j| residue + j * k).collect();
        entries.push((Coalition::from_members(&members), dividend.clone()));
    }
    DividendDecomposition::from_entries(n, entries)?.to_game()
}

/// A named worked-example game with display labels.
#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: &'static str,
    pub description: &'static str,
    pub labels: Vec<String>,
    pub game: Game,
}

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

fn numbered_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

fn game_from(n: usize, entries: &[(&[usize], i64)]) -> Game {
    let mut table = vec![Rat::zero(); 1 << n];
    for (members, worth) in entries {
        table[Coalition::from_members(members).index()] = rat(*worth);
    }
    Game::new(n, table).unwrap()
}

/// The worked-example corpus under stable names.
pub fn example_fixtures() -> Vec<Fixture> {
    let trade = game_from(
        3,
        &[(&[0], 1), (&[0, 1], 3), (&[0, 2], 2), (&[0, 1, 2], 3)],
    );
    let continuum3 = game_from(
        3,
        &[
            (&[0], 2),
            (&[1], 1),
            (&[0, 1], 4),
            (&[0, 2], 4),
            (&[1, 2], 4),
            (&[0, 1, 2], 5),
        ],
    );
    let emptycore3 = game_from(
        3,
        &[
            (&[0], 5),
            (&[0, 1], 1),
            (&[0, 2], 1),
            (&[1, 2], 5),
            (&[0, 1, 2], 6),
        ],
    );
    let alpha_interval3 = game_from(
        3,
        &[
            (&[0, 1], 12),
            (&[0, 2], 7),
            (&[1, 2], 7),
            (&[0, 1, 2], 16),
        ],
    );
    let singleton_core3 = game_from(
        3,
        &[
            (&[0, 1], 5),
            (&[0, 2], 6),
            (&[1, 2], 7),
            (&[0, 1, 2], 9),
        ],
    );
    // Four-player game with marginal contribution vector (4, 4, 3, 3); the
    // triple worths are forced by those marginals and the grand worth.
    let fourplayer = game_from(
        4,
        &[
            (&[0, 1], 8),
            (&[0, 2], 1),
            (&[0, 3], 1),
            (&[1, 2], 1),
            (&[1, 3], 1),
            (&[2, 3], 1),
            (&[0, 1, 2], 9),
            (&[0, 1, 3], 9),
            (&[0, 2, 3], 8),
            (&[1, 2, 3], 8),
            (&[0, 1, 2, 3], 12),
        ],
    );
    let topdom_nonsuper3 = game_from(
        3,
        &[(&[0, 1], -1), (&[0, 2], -1), (&[0, 1, 2], 1)],
    );
    let fiveplayer = DividendDecomposition::from_entries(
        5,
        [
            (Coalition::from_members(&[0, 1]), rat(1)),
            (Coalition::from_members(&[2, 3, 4]), rat(3)),
        ],
    )
    .unwrap()
    .to_game()
    .unwrap();
    let kgame_demo = DividendDecomposition::from_entries(
        3,
        [
            (Coalition::from_members(&[0, 1]), rat(1)),
            (Coalition::from_members(&[0, 2]), rat(1)),
            (Coalition::from_members(&[1, 2]), rat(1)),
        ],
    )
    .unwrap()
    .to_game()
    .unwrap();

    vec![
        Fixture {
            name: "trade",
            description: "One seller and two buyers bargaining over a single object",
            labels: labels(&["S", "B1", "B2"]),
            game: trade,
        },
        Fixture {
            name: "continuum3",
            description: "Non-essential game with a continuum of balanced allocations",
            labels: numbered_labels(3),
            game: continuum3,
        },
        Fixture {
            name: "emptycore3",
            description: "Essential game with an empty Core but a unique balanced point",
            labels: numbered_labels(3),
            game: emptycore3,
        },
        Fixture {
            name: "alpha_interval3",
            description: "Zero-normalised game whose weighted values enter the Core on an exponent interval",
            labels: numbered_labels(3),
            game: alpha_interval3,
        },
        Fixture {
            name: "singleton_core3",
            description: "Game whose Core is the single point of marginal contributions",
            labels: numbered_labels(3),
            game: singleton_core3,
        },
        Fixture {
            name: "fourplayer_core_miss",
            description: "Four-player game with a nonempty Core missed by the balanced value",
            labels: numbered_labels(4),
            game: fourplayer,
        },
        Fixture {
            name: "topdom_nonsuper3",
            description: "Top-dominant regular game that is not superadditive",
            labels: numbered_labels(3),
            game: topdom_nonsuper3,
        },
        Fixture {
            name: "fiveplayer_unanimity",
            description: "Convex sum of a pair and a triple unanimity game",
            labels: numbered_labels(5),
            game: fiveplayer,
        },
        Fixture {
            name: "kgame_demo",
            description: "Sum of all pair unanimity games on three players",
            labels: numbered_labels(3),
            game: kgame_demo,
        },
    ]
}

/// Fixture lookup by stable name.
pub fn fixture(name: &str) -> Option<Fixture> {
    example_fixtures().into_iter().find(|f| f.name == name)
}
