//! Transferable-utility games over a dense, exact worth table.

use crate::coalition::Coalition;
use crate::error::{Error, Result};
use crate::numeric::Rat;
use num_traits::Zero;

pub const MIN_PLAYERS: usize = 2;
pub const MAX_PLAYERS: usize = 16;

/// A cooperative game with transferable utility: a player count `n` and one
/// exact rational worth per coalition, indexed by the coalition encoding.
///
/// Games are immutable after construction; every operation on them is a pure
/// function, safe to call concurrently.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Game {
    n: usize,
    worths: Vec<Rat>,
}

impl Game {
    /// Builds a game from a dense worth table of length `2^n`.
    pub fn new(n: usize, worths: Vec<Rat>) -> Result<Game> {
        if !(MIN_PLAYERS..=MAX_PLAYERS).contains(&n) {
            return Err(Error::PlayerCountOutOfRange(n));
        }
        let expected = 1usize << n;
        if worths.len() != expected {
            return Err(Error::WrongTableLength {
                expected,
                got: worths.len(),
            });
        }
        if !worths[0].is_zero() {
            return Err(Error::NonzeroEmptyWorth);
        }
        Ok(Game { n, worths })
    }

    /// Builds a game by evaluating `worth` on every coalition. The empty
    /// coalition is forced to zero.
    pub fn from_fn(n: usize, mut worth: impl FnMut(Coalition) -> Rat) -> Result<Game> {
        if !(MIN_PLAYERS..=MAX_PLAYERS).contains(&n) {
            return Err(Error::PlayerCountOutOfRange(n));
        }
        let table: Vec<Rat> = Coalition::all(n)
            .map(|s| if s.is_empty() { Rat::zero() } else { worth(s) })
            .collect();
        Game::new(n, table)
    }

    /// The zero game on `n` players.
    pub fn zero(n: usize) -> Result<Game> {
        Game::from_fn(n, |_| Rat::zero())
    }

    /// The unanimity game of the nonempty coalition `s`: worth one on every
    /// superset of `s`, zero elsewhere.
    pub fn unanimity(s: Coalition, n: usize) -> Result<Game> {
        if s.is_empty() {
            return Err(Error::EmptyCoalition);
        }
        if !s.is_subset_of(Coalition::grand(n)) {
            return Err(Error::PlayerOutOfRange(s.members().last().unwrap_or(0)));
        }
        Game::from_fn(n, |t| {
            if s.is_subset_of(t) {
                Rat::from_integer(1.into())
            } else {
                Rat::zero()
            }
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn grand(&self) -> Coalition {
        Coalition::grand(self.n)
    }

    /// Worth of coalition `s`.
    pub fn worth(&self, s: Coalition) -> &Rat {
        &self.worths[s.index()]
    }

    pub fn worth_table(&self) -> &[Rat] {
        &self.worths
    }

    /// Grand-coalition worth `v(N)`.
    pub fn grand_worth(&self) -> &Rat {
        &self.worths[self.grand().index()]
    }

    /// Individual worth vector: component `i` is `v({i})`.
    pub fn individual_worths(&self) -> Vec<Rat> {
        (0..self.n)
            .map(|i| self.worth(Coalition::singleton(i)).clone())
            .collect()
    }

    /// Marginal contribution vector: component `i` is `v(N) - v(N - i)`.
    pub fn marginal_contributions(&self) -> Vec<Rat> {
        let grand = self.grand();
        (0..self.n)
            .map(|i| self.grand_worth() - self.worth(grand.without(i)))
            .collect()
    }

    /// `v(N) - sum of individual worths`, the surplus shared by a value map.
    pub fn surplus(&self) -> Rat {
        self.grand_worth() - self.individual_worths().iter().sum::<Rat>()
    }

    /// Subtracts each member's individual worth from every coalition,
    /// producing an equivalent game with zero individual worths. Idempotent.
    pub fn zero_normalise(&self) -> Game {
        let singles = self.individual_worths();
        let table: Vec<Rat> = Coalition::all(self.n)
            .map(|s| {
                let shift: Rat = s.members().map(|i| singles[i].clone()).sum();
                self.worth(s) - shift
            })
            .collect();
        Game {
            n: self.n,
            worths: table,
        }
    }

    /// The dual game `v*(S) = v(N) - v(N \ S)`, the worth the grand coalition
    /// loses when `S` leaves. An involution: the dual of the dual is `v`.
    pub fn dual(&self) -> Game {
        let table: Vec<Rat> = Coalition::all(self.n)
            .map(|s| {
                if s.is_empty() {
                    Rat::zero()
                } else {
                    self.grand_worth() - self.worth(s.complement(self.n))
                }
            })
            .collect();
        Game {
            n: self.n,
            worths: table,
        }
    }

    /// Pointwise sum of two games on the same player set.
    pub fn add(&self, other: &Game) -> Result<Game> {
        if self.n != other.n {
            return Err(Error::WrongPlayerCount {
                expected: self.n,
                got: other.n,
            });
        }
        let table = self
            .worths
            .iter()
            .zip(&other.worths)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Game {
            n: self.n,
            worths: table,
        })
    }

    /// Scales every worth by `c`.
    pub fn scale(&self, c: &Rat) -> Game {
        Game {
            n: self.n,
            worths: self.worths.iter().map(|w| w * c).collect(),
        }
    }

    /// Evaluates every class predicate from the worth table.
    pub fn classify(&self) -> GameClassReport {
        let singles = self.individual_worths();
        let marginals = self.marginal_contributions();
        let total = self.grand_worth();

        let sum_singles: Rat = singles.iter().sum();
        let sum_marginals: Rat = marginals.iter().sum();
        let essential = sum_singles <= *total && *total <= sum_marginals;
        let semi_standard = singles.iter().zip(&marginals).all(|(v, m)| v <= m);
        let strict_somewhere = singles.iter().zip(&marginals).any(|(v, m)| v < m);
        let standard = semi_standard && strict_somewhere;
        let zero_normalised = singles.iter().all(|v| v.is_zero());

        let mut partitionally_superadditive = true;
        for s in Coalition::all(self.n) {
            if self.worth(s) + self.worth(s.complement(self.n)) > *total {
                partitionally_superadditive = false;
                break;
            }
        }

        GameClassReport {
            essential,
            semi_standard,
            semi_regular: essential && semi_standard,
            standard,
            regular: essential && standard,
            zero_normalised,
            partitionally_superadditive,
            individual_worths: singles,
            marginal_contributions: marginals,
        }
    }
}

/// Outcome of [`Game::classify`]: every class predicate plus the two vectors
/// they are computed from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GameClassReport {
    pub essential: bool,
    pub semi_standard: bool,
    pub semi_regular: bool,
    pub standard: bool,
    pub regular: bool,
    pub zero_normalised: bool,
    pub partitionally_superadditive: bool,
    pub individual_worths: Vec<Rat>,
    pub marginal_contributions: Vec<Rat>,
}
