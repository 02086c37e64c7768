//! Chief series and the nilpotent radicals.

use serde::{Deserialize, Serialize};

use super::{SubgroupId, SubgroupLattice};
use crate::error::{Error, Result};
use crate::util;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChiefFactor {
    pub lower: SubgroupId,
    pub upper: SubgroupId,
    pub order: usize,
    /// `Some(p)` when the factor is a `p`-group.
    pub prime: Option<usize>,
    pub is_prime_order: bool,
    /// `C_G(upper/lower)`.
    pub centralizer: SubgroupId,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChiefSeries {
    /// Ascending normal subgroups from the trivial subgroup to the group.
    pub chain: Vec<SubgroupId>,
    pub factors: Vec<ChiefFactor>,
}

impl ChiefSeries {
    pub fn factor_orders(&self) -> Vec<usize> {
        self.factors.iter().map(|f| f.order).collect()
    }
}

/// Tie-break among the minimal normal steps above the current member.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepChoice {
    LowestId,
    HighestId,
}

impl SubgroupLattice {
    /// Normal subgroups `n` with `k < n` and no normal subgroup strictly
    /// between.
    pub fn normal_covers(&self, k: SubgroupId) -> Vec<SubgroupId> {
        let above: Vec<SubgroupId> = self
            .normal
            .ones()
            .filter(|&n| n != k && self.leq(k, n))
            .collect();
        above
            .iter()
            .copied()
            .filter(|&n| !above.iter().any(|&m| m != n && self.leq(m, n)))
            .collect()
    }

    pub fn chief_series(&self) -> Result<ChiefSeries> {
        self.chief_series_with(StepChoice::LowestId)
    }

    pub fn chief_series_with(&self, choice: StepChoice) -> Result<ChiefSeries> {
        let mut chain = vec![self.bottom()];
        let mut factors = Vec::new();
        let mut current = self.bottom();
        while current != self.top() {
            let steps = self.normal_covers(current);
            let next = match choice {
                StepChoice::LowestId => steps.first(),
                StepChoice::HighestId => steps.last(),
            }
            .copied()
            .expect("the whole group is normal");
            let order = self.order(next) / self.order(current);
            factors.push(ChiefFactor {
                lower: current,
                upper: next,
                order,
                prime: util::prime_power_base(order),
                is_prime_order: util::is_prime(order),
                centralizer: self.centralizer_of_factor(next, current)?,
            });
            chain.push(next);
            current = next;
        }
        Ok(ChiefSeries { chain, factors })
    }

    /// Join of all normal nilpotent subgroups.
    pub fn fitting(&self) -> Result<SubgroupId> {
        let f = self
            .normal
            .ones()
            .filter(|&n| self.is_nilpotent_subgroup(n))
            .fold(self.bottom(), |acc, n| self.join(acc, n));
        if !self.is_nilpotent_subgroup(f) {
            return Err(Error::Consistency("Fitting subgroup is not nilpotent".into()));
        }
        Ok(f)
    }

    /// Join of all normal `p`-nilpotent subgroups.
    pub fn p_nilpotent_radical(&self, p: usize) -> Result<SubgroupId> {
        let f = self
            .normal
            .ones()
            .filter(|&n| self.is_p_nilpotent_subgroup(n, p))
            .fold(self.bottom(), |acc, n| self.join(acc, n));
        if !self.is_p_nilpotent_subgroup(f, p) {
            return Err(Error::Consistency(format!(
                "{p}-nilpotent radical is not {p}-nilpotent"
            )));
        }
        Ok(f)
    }
}
