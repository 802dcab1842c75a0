//! Harsanyi dividends: the coordinates of a game in the unanimity basis.

use std::collections::BTreeMap;

use crate::coalition::Coalition;
use crate::error::{Error, Result};
use crate::game::Game;
use crate::numeric::Rat;
use num_traits::Zero;

/// The dividend of every coalition with a nonzero one. Coalitions carrying a
/// nonzero dividend form the carrier of the game.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DividendDecomposition {
    n: usize,
    entries: BTreeMap<Coalition, Rat>,
}

impl DividendDecomposition {
    /// Builds a decomposition from explicit entries; zero entries are dropped
    /// and the empty coalition is rejected.
    pub fn from_entries(
        n: usize,
        entries: impl IntoIterator<Item = (Coalition, Rat)>,
    ) -> Result<DividendDecomposition> {
        let grand = Coalition::grand(n);
        let mut map = BTreeMap::new();
        for (s, d) in entries {
            if s.is_empty() {
                return Err(Error::EmptyCoalition);
            }
            if !s.is_subset_of(grand) {
                return Err(Error::PlayerOutOfRange(s.members().last().unwrap_or(0)));
            }
            if !d.is_zero() {
                map.insert(s, d);
            }
        }
        Ok(DividendDecomposition { n, entries: map })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Dividend of `s`; zero when `s` is outside the carrier.
    pub fn dividend(&self, s: Coalition) -> Rat {
        self.entries.get(&s).cloned().unwrap_or_else(Rat::zero)
    }

    /// Carrier coalitions in increasing encoding.
    pub fn carrier(&self) -> impl Iterator<Item = Coalition> + '_ {
        self.entries.keys().copied()
    }

    pub fn entries(&self) -> impl Iterator<Item = (Coalition, &Rat)> {
        self.entries.iter().map(|(s, d)| (*s, d))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Reassembles the game as the dividend-weighted sum of unanimity games.
    /// Exact inverse of [`harsanyi_dividends`].
    pub fn to_game(&self) -> Result<Game> {
        let size = 1usize << self.n;
        let mut table = vec![Rat::zero(); size];
        for (s, d) in &self.entries {
            table[s.index()] = d.clone();
        }
        // Zeta transform: v(T) = sum of dividends over subsets of T.
        for i in 0..self.n {
            for t in 0..size {
                if t >> i & 1 == 1 {
                    let lower = table[t & !(1 << i)].clone();
                    table[t] += lower;
                }
            }
        }
        Game::new(self.n, table)
    }
}

/// Möbius inversion of the worth table: the dividend of `S` is the alternating
/// subset sum `sum_{T subset of S} (-1)^{|S|-|T|} v(T)`.
pub fn harsanyi_dividends(game: &Game) -> DividendDecomposition {
    let n = game.n();
    let size = 1usize << n;
    let mut table = game.worth_table().to_vec();
    for i in 0..n {
        for t in 0..size {
            if t >> i & 1 == 1 {
                let lower = table[t & !(1 << i)].clone();
                table[t] -= lower;
            }
        }
    }
    let entries = table
        .into_iter()
        .enumerate()
        .filter(|(_, d)| !d.is_zero())
        .map(|(idx, d)| (Coalition::from_index(idx), d));
    DividendDecomposition {
        n,
        entries: entries.collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat;

    fn trade_game() -> Game {
        Game::new(3, [0, 1, 0, 3, 0, 2, 0, 3].iter().map(|&w| rat(w)).collect()).unwrap()
    }

    #[test]
    fn unanimity_game_has_indicator_dividends() {
        let s = Coalition::from_members(&[0, 2]);
        let u = Game::unanimity(s, 3).unwrap();
        let d = harsanyi_dividends(&u);
        assert_eq!(d.carrier().collect::<Vec<_>>(), vec![s]);
        assert_eq!(d.dividend(s), rat(1));
    }

    #[test]
    fn trade_game_dividends_match_brute_force() {
        let g = trade_game();
        let d = harsanyi_dividends(&g);

        // Independent oracle: evaluate the alternating sum directly.
        for s in Coalition::nonempty(3) {
            let mut expected = Rat::zero();
            for t in Coalition::all(3) {
                if t.is_subset_of(s) {
                    let sign = if (s.size() - t.size()) % 2 == 0 { 1 } else { -1 };
                    expected += g.worth(t) * rat(sign);
                }
            }
            assert_eq!(d.dividend(s), expected, "dividend of {s:?}");
        }

        assert_eq!(d.dividend(Coalition::singleton(0)), rat(1));
        assert_eq!(d.dividend(Coalition::from_members(&[0, 1])), rat(2));
        assert_eq!(d.dividend(Coalition::from_members(&[0, 2])), rat(1));
        assert_eq!(d.dividend(Coalition::grand(3)), rat(-1));
        assert_eq!(d.carrier().count(), 4);
    }

    #[test]
    fn five_player_two_term_expansion() {
        let d = DividendDecomposition::from_entries(
            5,
            [
                (Coalition::from_members(&[0, 1]), rat(1)),
                (Coalition::from_members(&[2, 3, 4]), rat(3)),
            ],
        )
        .unwrap();
        let g = d.to_game().unwrap();
        assert_eq!(*g.grand_worth(), rat(4));
        assert_eq!(g.marginal_contributions(), vec![rat(1), rat(1), rat(3), rat(3), rat(3)]);
        let back = harsanyi_dividends(&g);
        assert_eq!(back, d);
    }

    #[test]
    fn round_trip_on_trade_game() {
        let g = trade_game();
        assert_eq!(harsanyi_dividends(&g).to_game().unwrap(), g);
    }

    #[test]
    fn empty_coalition_rejected() {
        let err = DividendDecomposition::from_entries(3, [(Coalition::EMPTY, rat(1))]).unwrap_err();
        assert_eq!(err, Error::EmptyCoalition);
    }
}
