//! Exact-arithmetic solver for transferable-utility cooperative games.
//!
//! The library computes the Gately value — the imputation balancing every
//! player's propensity to disrupt — together with its exponent-weighted
//! family, dual values, the Shapley value, and the nucleolus; certifies Core
//! membership and decides Core nonemptiness exactly; evaluates the game-class
//! predicates (essential, standard, regular, top dominant, partitionally
//! superadditive, uniform-carrier structure); and ships deterministic fixture
//! generators, a JSON game-file format, and a command-line front end.
//!
//! Worths are arbitrary-precision rationals. Every operation with a rational
//! closed form runs exactly; only irrational exponents fall back to floats,
//! and those results are flagged as approximate throughout.
//!
//! Games are immutable and all operations are pure functions, so everything
//! here is safe to drive from multiple threads.

pub mod allocation;
pub mod analysis;
pub mod coalition;
pub mod dividends;
pub mod document;
pub mod error;
pub mod game;
pub mod generator;
pub mod nucleolus;
pub mod numeric;
pub mod oracle;
pub mod propensity;
pub mod simplex;
pub mod values;

pub use allocation::Allocation;
pub use analysis::{
    alpha_core_range, alpha_top_dominance, balanced_externalities_check, check_gately_equals_shapley,
    check_maincore_iff, check_topdominance_implications, core_membership, core_nonempty,
    is_efficient, is_imputation, kgame_structure, three_player_core_check, AlphaInterval,
    AlphaRange, CoreCertificate, CoreExistence, KGameStructure, ThreePlayerCoreCheck,
};
pub use coalition::Coalition;
pub use dividends::{harsanyi_dividends, DividendDecomposition};
pub use error::{Error, Result};
pub use game::{Game, GameClassReport};
pub use generator::{
    generate, example_fixtures, ClassTarget, Fixture, GeneratorConfig, Xorshift64Star,
};
pub use nucleolus::nucleolus;
pub use numeric::{Rat, ScalarValue};
pub use oracle::{aggregate_min_oracle, minimax_oracle};
pub use propensity::{
    beta_propensity_profile, disruption_profile, generalized_propensity, propensity_coalition,
    propensity_player, ExtendedReal, PropensityProfile,
};
pub use values::{
    alpha_gately_value, alpha_limit_value, compromise_coefficient, dual_alpha_gately,
    dual_alpha_gately_closed_form, equal_division, gately_value, shapley_value, Alpha, Limit,
};
