//! Coalitions as bitmasks over player indices `0..n`.

/// A coalition of players. Player `i` is a member iff bit `i` is set.
///
/// The encoding doubles as the index into a game's dense worth table, so the
/// canonical enumeration order is the increasing integer encoding.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Coalition(u32);

impl Coalition {
    pub const EMPTY: Coalition = Coalition(0);

    /// Coalition from an explicit member list.
    pub fn from_members(members: &[usize]) -> Coalition {
        let mut mask = 0u32;
        for &i in members {
            assert!(i < 32, "player index {i} out of range");
            mask |= 1 << i;
        }
        Coalition(mask)
    }

    pub fn singleton(i: usize) -> Coalition {
        Coalition(1 << i)
    }

    /// The grand coalition on `n` players.
    pub fn grand(n: usize) -> Coalition {
        Coalition(((1u64 << n) - 1) as u32)
    }

    pub fn from_index(index: usize) -> Coalition {
        Coalition(index as u32)
    }

    /// Index into a dense worth table.
    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn with(self, i: usize) -> Coalition {
        Coalition(self.0 | 1 << i)
    }

    pub fn without(self, i: usize) -> Coalition {
        Coalition(self.0 & !(1 << i))
    }

    pub fn union(self, other: Coalition) -> Coalition {
        Coalition(self.0 | other.0)
    }

    pub fn intersection(self, other: Coalition) -> Coalition {
        Coalition(self.0 & other.0)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn size(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_subset_of(self, other: Coalition) -> bool {
        self.0 & !other.0 == 0
    }

    /// Complement within the player set `0..n`.
    pub fn complement(self, n: usize) -> Coalition {
        Coalition(!self.0 & Self::grand(n).0)
    }

    /// Member indices in increasing order.
    pub fn members(self) -> impl Iterator<Item = usize> {
        let mask = self.0;
        (0..32).filter(move |i| mask >> i & 1 == 1)
    }

    /// All `2^n` coalitions in increasing encoding, the empty one first.
    pub fn all(n: usize) -> impl Iterator<Item = Coalition> {
        (0..1usize << n).map(Coalition::from_index)
    }

    /// All coalitions except the empty one and the grand coalition.
    pub fn proper_nonempty(n: usize) -> impl Iterator<Item = Coalition> {
        (1..(1usize << n) - 1).map(Coalition::from_index)
    }

    /// All nonempty coalitions, the grand coalition last.
    pub fn nonempty(n: usize) -> impl Iterator<Item = Coalition> {
        (1..1usize << n).map(Coalition::from_index)
    }

    /// Renders members through a label table, e.g. `{S,B1}`.
    pub fn label_string(self, labels: &[String]) -> String {
        let parts: Vec<&str> = self
            .members()
            .filter(|&i| i < labels.len())
            .map(|i| labels[i].as_str())
            .collect();
        format!("{{{}}}", parts.join(","))
    }
}
