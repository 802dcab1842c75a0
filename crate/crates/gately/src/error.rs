//! Error type shared by the solver operations.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The net marginal-contribution weights sum to zero, so the requested
    /// value map has no unique solution (or none at all).
    #[error("NotStandard: the game has no unique balanced solution (net marginal contribution weights sum to zero)")]
    NotStandard,

    /// A player has a negative net marginal contribution, which cannot be
    /// raised to a non-integer power.
    #[error("NotSemiStandard: a player has a negative net marginal contribution; non-integer exponents are undefined here")]
    NotSemiStandard,

    /// The operation is only defined on regular games.
    #[error("NotRegular: the game is not regular (essential and standard)")]
    NotRegular,

    /// The supplied payoff vector is not an imputation.
    #[error("NonImputation: the payoff vector is not an efficient, individually rational imputation")]
    NonImputation,

    /// A coalition argument must be a proper nonempty subset of the player set.
    #[error("BadCoalition: coalition must be nonempty and distinct from the grand coalition")]
    BadCoalition,

    /// A coalition argument must be nonempty.
    #[error("EmptyCoalition: coalition must be nonempty")]
    EmptyCoalition,

    /// Player counts outside the supported dense-table range.
    #[error("PlayerCountOutOfRange: {0} players outside the supported range 2..=16")]
    PlayerCountOutOfRange(usize),

    /// An operation pinned to a specific player count received another.
    #[error("WrongPlayerCount: expected {expected} players, got {got}")]
    WrongPlayerCount { expected: usize, got: usize },

    /// The worth table length does not match 2^n.
    #[error("WrongTableLength: expected {expected} worths, got {got}")]
    WrongTableLength { expected: usize, got: usize },

    /// The empty coalition must have worth zero.
    #[error("NonzeroEmptyWorth: the empty coalition must have worth zero")]
    NonzeroEmptyWorth,

    /// Player index out of range.
    #[error("PlayerOutOfRange: player index {0} out of range")]
    PlayerOutOfRange(usize),

    /// A payoff vector has the wrong length for the game.
    #[error("WrongAllocationLength: expected {expected} payoffs, got {got}")]
    WrongAllocationLength { expected: usize, got: usize },

    /// The individual worths already exceed the grand-coalition worth.
    #[error("EmptyImputationSet: individual worths exceed the grand-coalition worth")]
    EmptyImputationSet,

    /// The carrier contains coalitions of size other than two.
    #[error("NotTwoGame: the carrier is not built from two-player coalitions only")]
    NotTwoGame,

    /// Exponent parameters must be positive (and finite).
    #[error("InvalidAlpha: exponent parameter must be positive and finite")]
    InvalidAlpha,

    /// beta = 0 makes the aggregate propensity constant in the allocation, so
    /// the minimisation has a continuum of solutions.
    #[error("BetaZeroDegenerate: beta = 0 gives a constant aggregate propensity; the minimiser is degenerate")]
    BetaZeroDegenerate,

    /// The fixture generator exhausted its retry budget.
    #[error("TargetUnreachable: generator could not reach the target class within the retry budget")]
    TargetUnreachable,
}

pub type Result<T> = std::result::Result<T, Error>;
