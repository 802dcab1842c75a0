//! Payoff vectors in exact or float mode.

use crate::coalition::Coalition;
use crate::numeric::{to_f64, Rat};

/// A payoff vector. Value maps produce `Exact` payoffs whenever the exponent
/// parameter allows it and `Float` payoffs otherwise; user-supplied points may
/// be either. Efficiency and rationality are checked by the analysis
/// predicates, not enforced by the type, because several named games produce
/// well-defined values that fail individual rationality.
#[derive(Clone, Debug, PartialEq)]
pub enum Allocation {
    Exact(Vec<Rat>),
    Float(Vec<f64>),
}

impl Allocation {
    pub fn len(&self) -> usize {
        match self {
            Allocation::Exact(v) => v.len(),
            Allocation::Float(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Allocation::Exact(_))
    }

    pub fn exact(&self) -> Option<&[Rat]> {
        match self {
            Allocation::Exact(v) => Some(v),
            Allocation::Float(_) => None,
        }
    }

    pub fn component_f64(&self, i: usize) -> f64 {
        match self {
            Allocation::Exact(v) => to_f64(&v[i]),
            Allocation::Float(v) => v[i],
        }
    }

    pub fn to_f64_vec(&self) -> Vec<f64> {
        match self {
            Allocation::Exact(v) => v.iter().map(to_f64).collect(),
            Allocation::Float(v) => v.clone(),
        }
    }

    /// Total payoff of a coalition, in the vector's own mode.
    pub fn coalition_total_f64(&self, s: Coalition) -> f64 {
        s.members().map(|i| self.component_f64(i)).sum()
    }

    /// Exact coalition total; `None` in float mode.
    pub fn coalition_total_exact(&self, s: Coalition) -> Option<Rat> {
        self.exact().map(|v| s.members().map(|i| v[i].clone()).sum())
    }

    /// Componentwise distance to another vector, via `f64`.
    pub fn max_component_distance(&self, other: &Allocation) -> f64 {
        assert_eq!(self.len(), other.len());
        (0..self.len())
            .map(|i| (self.component_f64(i) - other.component_f64(i)).abs())
            .fold(0.0, f64::max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{rat, ratio};

    #[test]
    fn coalition_totals() {
        let a = Allocation::Exact(vec![ratio(7, 3), ratio(2, 3), rat(0)]);
        assert_eq!(
            a.coalition_total_exact(Coalition::from_members(&[0, 1])),
            Some(rat(3))
        );
        let f = Allocation::Float(vec![2.5, 0.5, 0.0]);
        assert_eq!(f.coalition_total_f64(Coalition::from_members(&[0, 2])), 2.5);
        assert_eq!(f.coalition_total_exact(Coalition::grand(3)), None);
    }
}
