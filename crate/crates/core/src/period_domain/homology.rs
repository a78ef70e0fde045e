//! Interval bounds on `[H_i(C_*) : D]` for each Jordan–Hölder factor `D`.
//!
//! For a factor with per-level totals `n_j` the unknowns are
//! `k_j = [Ker d_j : D]`, with `i_j = n_j - k_j = [Im d_j : D]` and
//! `h_j = k_j - i_{j-1}`. The constraints used are:
//!
//! 1. `0 <= k_j <= n_j`, and `k_L = n_L` at the last level;
//! 2. `i_{j-1} <= k_j` (`Im d_{j-1} ⊆ Ker d_j`);
//! 3. `i_j >= n_{j+1,t}` for every target summand `t`: the projection of
//!    `d_j` to `V^G_B(t)` is onto, since every `p_{a,t}` with `a <= t` is;
//! 4. `i_j >= sum_{t in T} n_{j+1,t}` whenever `d_j` followed by the projection
//!    onto the summands in `T` is onto. This is certified by peeling: a source
//!    whose only neighbour left in `T` is `t` hits `V^G_B(t)` alone, so `t`
//!    can be removed, and if all of `T` is peeled the projection is onto.
//!
//! All four are sound, so the reported intervals always contain the true
//! value. Nothing guarantees that they pin it.

use std::fmt;

use super::{ChainComplexSpec, DistributionType};
use crate::error::{Error, Result};
use crate::jh::{JhContext, JhFactor};
use crate::weyl::{WeylElement, WeylGroup};

/// Largest number of summands at one level for which every subset is tried
/// when looking for a surjective projection.
const EXHAUSTIVE_TARGETS: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lo: u64,
    pub hi: u64,
}

impl Interval {
    pub fn pinned(self) -> bool {
        self.lo == self.hi
    }

    pub fn value(self) -> Option<u64> {
        self.pinned().then_some(self.lo)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pinned() {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "[{}, {}]", self.lo, self.hi)
        }
    }
}

/// Solver output for one factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorHomology {
    pub dist: DistributionType,
    pub kernel: Vec<Interval>,
    /// Certified lower bound on `i_j` for each `j < L`.
    pub image_bounds: Vec<u64>,
    /// `h_j` per level; level `j` is degree `i0 - j`.
    pub homology: Vec<Interval>,
    pub trace: Vec<String>,
}

impl FactorHomology {
    pub fn factor(&self) -> JhFactor {
        self.dist.factor
    }

    pub fn pinned(&self) -> bool {
        self.homology.iter().all(|h| h.pinned())
    }

    /// `sum_j (-1)^j n_j - sum_j (-1)^j h_j`, defined once everything is pinned.
    pub fn euler_defect(&self) -> Option<i64> {
        if !self.pinned() {
            return None;
        }
        let alt = |xs: &mut dyn Iterator<Item = u64>| {
            xs.enumerate().map(|(j, x)| if j % 2 == 0 { x as i64 } else { -(x as i64) }).sum::<i64>()
        };
        let chain = alt(&mut self.dist.level_totals().into_iter());
        let hom = alt(&mut self.homology.iter().map(|h| h.lo));
        Some(chain - hom)
    }
}

/// Factors with possibly nonzero multiplicity in one homology degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeSummary {
    pub degree: i64,
    pub entries: Vec<(JhFactor, Interval)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyReport {
    pub i0: i64,
    pub factors: Vec<FactorHomology>,
}

impl HomologyReport {
    pub fn all_pinned(&self) -> bool {
        self.factors.iter().all(FactorHomology::pinned)
    }

    pub fn undetermined(&self) -> impl Iterator<Item = &FactorHomology> {
        self.factors.iter().filter(|f| !f.pinned())
    }

    pub fn get(&self, factor: &JhFactor) -> Option<&FactorHomology> {
        self.factors.iter().find(|f| f.dist.factor == *factor)
    }

    /// One summary per level of the complex, highest degree first.
    pub fn by_degree(&self) -> Vec<DegreeSummary> {
        let levels = self.factors.first().map_or(0, |f| f.homology.len());
        (0..levels)
            .map(|j| DegreeSummary {
                degree: self.i0 - j as i64,
                entries: self
                    .factors
                    .iter()
                    .filter(|f| f.homology[j].hi > 0)
                    .map(|f| (f.dist.factor, f.homology[j]))
                    .collect(),
            })
            .collect()
    }
}

/// Covering relations between two consecutive levels.
struct Incidence {
    /// `edges[a]` lists the targets `t` with `source a <= t`.
    edges: Vec<Vec<usize>>,
    targets: usize,
}

impl Incidence {
    fn new(g: &WeylGroup, sources: &[WeylElement], targets: &[WeylElement]) -> Self {
        let edges = sources
            .iter()
            .map(|&a| (0..targets.len()).filter(|&t| g.bruhat_leq(a, targets[t])).collect())
            .collect();
        Incidence { edges, targets: targets.len() }
    }

    fn has_source(&self, t: usize) -> bool {
        self.edges.iter().any(|e| e.contains(&t))
    }

    /// Whether the targets in `mask` can be peeled off one at a time.
    fn peels(&self, mut mask: u64) -> bool {
        while mask != 0 {
            let next = self.edges.iter().find_map(|e| {
                let mut hit = e.iter().filter(|&&t| mask & (1 << t) != 0);
                match (hit.next(), hit.next()) {
                    (Some(&t), None) => Some(t),
                    _ => None,
                }
            });
            match next {
                Some(t) => mask &= !(1 << t),
                None => return false,
            }
        }
        true
    }
}

fn image_bound(inc: &Incidence, counts: &[u64], trace: &mut Vec<String>, j: usize) -> u64 {
    let mut best = (0..inc.targets).filter(|&t| inc.has_source(t)).map(|t| counts[t]).max().unwrap_or(0);
    if best > 0 {
        trace.push(format!("i_{j} >= {best} (single summand)"));
    }
    if inc.targets > EXHAUSTIVE_TARGETS {
        trace.push(format!("level {}: {} summands, subset search skipped", j + 1, inc.targets));
        return best;
    }
    for mask in 1u64..(1 << inc.targets) {
        let total: u64 = (0..inc.targets).filter(|&t| mask & (1 << t) != 0).map(|t| counts[t]).sum();
        if total > best && inc.peels(mask) {
            best = total;
            trace.push(format!("i_{j} >= {best} (onto summands {mask:#b})"));
        }
    }
    best
}

fn infeasible(dist: &DistributionType, trace: &[String], what: String) -> Error {
    Error::Infeasible(format!("factor {:?} with type {dist}: {what}; trace: {}", dist.factor, trace.join("; ")))
}

fn solve(g: &WeylGroup, complex: &ChainComplexSpec, dist: DistributionType) -> Result<FactorHomology> {
    let top = complex.top_level();
    let n = dist.level_totals();
    let mut trace = Vec::new();

    let mut image_bounds = Vec::with_capacity(top);
    for j in 0..top {
        let inc = Incidence::new(g, &complex.levels[j], &complex.levels[j + 1]);
        image_bounds.push(image_bound(&inc, &dist.levels[j + 1], &mut trace, j));
    }

    let mut lo = vec![0u64; top + 1];
    let mut hi = n.clone();
    lo[top] = n[top];
    for j in 0..top {
        if image_bounds[j] > n[j] {
            return Err(infeasible(&dist, &trace, format!("image bound {} exceeds n_{j} = {}", image_bounds[j], n[j])));
        }
        hi[j] = n[j] - image_bounds[j];
    }

    loop {
        let mut changed = false;
        for j in 1..=top {
            let need = n[j - 1];
            let lo_j = need.saturating_sub(hi[j - 1]);
            if lo_j > lo[j] {
                lo[j] = lo_j;
                trace.push(format!("k_{j} >= {lo_j}"));
                changed = true;
            }
            let lo_prev = need.saturating_sub(hi[j]);
            if lo_prev > lo[j - 1] {
                lo[j - 1] = lo_prev;
                trace.push(format!("k_{} >= {lo_prev}", j - 1));
                changed = true;
            }
        }
        if let Some(j) = (0..=top).find(|&j| lo[j] > hi[j]) {
            return Err(infeasible(&dist, &trace, format!("k_{j} in [{}, {}]", lo[j], hi[j])));
        }
        if !changed {
            break;
        }
    }

    let kernel: Vec<Interval> = (0..=top).map(|j| Interval { lo: lo[j], hi: hi[j] }).collect();
    let homology = (0..=top)
        .map(|j| {
            if j == 0 {
                kernel[0]
            } else {
                let base = n[j - 1];
                Interval {
                    lo: (lo[j] + lo[j - 1]).saturating_sub(base),
                    hi: hi[j] + hi[j - 1] - base,
                }
            }
        })
        .collect();
    Ok(FactorHomology { dist, kernel, image_bounds, homology, trace })
}

/// Bounds `[H_{i0 - j}(C_*) : D]` for every factor `D` occurring in `C_*`.
pub fn homology_bounds(ctx: &JhContext, complex: &ChainComplexSpec) -> Result<HomologyReport> {
    let g = ctx.group();
    let factors = super::distribution_types(ctx, complex)?
        .into_iter()
        .map(|d| solve(g, complex, d))
        .collect::<Result<Vec<_>>>()?;
    Ok(HomologyReport { i0: complex.i0, factors })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subset::SimpleSubset;

    fn spec(g: &WeylGroup, levels: &[&[&str]]) -> ChainComplexSpec {
        ChainComplexSpec {
            mu: crate::root_datum::Coweight::from_integers(&[1, 1, 1]),
            i0: 3,
            levels: levels.iter().map(|l| l.iter().map(|w| g.parse_element(w).unwrap()).collect()).collect(),
        }
    }

    fn dist(g: &WeylGroup, levels: &[&[u64]]) -> DistributionType {
        let e = g.identity();
        DistributionType {
            factor: JhFactor { v: e, i: g.simple_roots(), j: SimpleSubset::empty() },
            levels: levels.iter().map(|l| l.to_vec()).collect(),
        }
    }

    #[test]
    fn chase_from_worked_computation() {
        let g = WeylGroup::from_label("A3").unwrap();
        let c = spec(&g, &[&["e"], &["s1", "s2"], &["s1*s2", "s2*s1"], &["s1*s2*s1"]]);
        let r = solve(&g, &c, dist(&g, &[&[2], &[2, 1], &[1, 1], &[1]])).unwrap();
        assert!(r.pinned());
        assert!(r.homology.iter().all(|h| h.lo == 0));
        assert_eq!(r.kernel.iter().map(|k| k.lo).collect::<Vec<_>>(), [0, 2, 1, 1]);
        assert_eq!(r.euler_defect(), Some(0));
    }

    #[test]
    fn peeling_needs_a_private_neighbour() {
        let g = WeylGroup::from_label("A3").unwrap();
        let [s1, s2, s3] = ["s1", "s2", "s3"].map(|w| g.parse_element(w).unwrap());
        let [s1s3, s2s3] = ["s1*s3", "s2*s3"].map(|w| g.parse_element(w).unwrap());
        let inc = Incidence::new(&g, &[s1, s2, s3], &[s1s3, s2s3]);
        assert!(inc.peels(0b11));
        let inc = Incidence::new(&g, &[s3], &[s1s3, s2s3]);
        assert!(!inc.peels(0b11));
        assert!(inc.peels(0b01));
    }

    #[test]
    fn bottom_type_is_pinned_at_one() {
        let g = WeylGroup::from_label("A3").unwrap();
        let c = spec(&g, &[&["e"], &["s1", "s2"], &["s2*s1"]]);
        let r = solve(&g, &c, dist(&g, &[&[1], &[0, 0], &[0]])).unwrap();
        assert_eq!(r.homology, [Interval { lo: 1, hi: 1 }, Interval { lo: 0, hi: 0 }, Interval { lo: 0, hi: 0 }]);
    }

    #[test]
    fn inconsistent_counts_are_infeasible() {
        let g = WeylGroup::from_label("A3").unwrap();
        let c = spec(&g, &[&["e"], &["s1"]]);
        let err = solve(&g, &c, dist(&g, &[&[1], &[3]])).unwrap_err();
        assert!(matches!(err, Error::Infeasible(_)));
    }
}
