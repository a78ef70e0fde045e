use std::collections::BTreeSet;
use std::fmt;

use super::ChainComplexSpec;
use crate::error::Result;
use crate::jh::{JhContext, JhFactor};

/// Multiplicities of one factor `D` along `C_*`: `levels[j][k]` is
/// `[V^G_B(w) : D]` for the `k`-th element of level `j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DistributionType {
    pub factor: JhFactor,
    pub levels: Vec<Vec<u64>>,
}

impl DistributionType {
    pub fn flattened(&self) -> Vec<u64> {
        self.levels.iter().flatten().copied().collect()
    }

    pub fn level_totals(&self) -> Vec<u64> {
        self.levels.iter().map(|l| l.iter().sum()).collect()
    }

    /// `(1, 0, ..., 0)`: the factor occurs only in the level-0 term, once.
    pub fn is_bottom(&self) -> bool {
        let flat = self.flattened();
        flat[0] == 1 && flat[1..].iter().all(|&n| n == 0)
    }

    /// The vector as nested level lists, e.g. `({2},{2,1},{1})`.
    pub fn shape(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for DistributionType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .levels
            .iter()
            .map(|l| format!("{{{}}}", l.iter().map(u64::to_string).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Distribution types of every factor occurring in some term of `C_*`,
/// in factor order.
pub fn distribution_types(ctx: &JhContext, complex: &ChainComplexSpec) -> Result<Vec<DistributionType>> {
    let mut keys = BTreeSet::new();
    for w in complex.elements() {
        keys.extend(ctx.jh_factors(w)?.entries.into_iter().map(|(f, _)| f));
    }
    keys.into_iter()
        .map(|factor| {
            let levels = complex
                .levels
                .iter()
                .map(|level| {
                    level
                        .iter()
                        .map(|&w| ctx.jh_multiplicity(w, factor.v, factor.j).map(|m| u64::try_from(m).expect("multiplicities are nonnegative")))
                        .collect::<Result<Vec<u64>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(DistributionType { factor, levels })
        })
        .collect()
}
