//! Index combinatorics of the period domain attached to a strictly dominant
//! coweight `mu`.
//!
//! Everything here is a finite computation in the Weyl group:
//!
//! * `Omega_I`: the elements `w` with `w mu` strictly positive on every
//!   fundamental weight outside `I`; these index the Schubert cells of `Y_I`.
//! * [`ChainComplexSpec`]: the complex `C_*` whose level `j` is the direct sum
//!   of `V^G_B(w)` over `w` in `Omega_{emptyset}` of length `j`, placed in
//!   degree `i0 - j`.
//! * [`distribution_types`] and [`homology_bounds`]: per Jordan–Hölder factor
//!   multiplicities along `C_*` and interval bounds on its homology.
//!
//! The homology of `C_*` computes the dual of the cohomology of the period
//! domain only under the hypothesis on the group used to construct it; the
//! computation here is unconditional.

mod distribution;
mod homology;

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::root_datum::Coweight;
use crate::subset::SimpleSubset;
use crate::weyl::{WeylElement, WeylGroup};

pub use distribution::{distribution_types, DistributionType};
pub use homology::{homology_bounds, DegreeSummary, FactorHomology, HomologyReport, Interval};

/// `Omega_I` in enumeration order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaSet {
    pub i: SimpleSubset,
    pub mu: Coweight,
    pub elements: Vec<WeylElement>,
}

impl OmegaSet {
    pub fn contains(&self, w: WeylElement) -> bool {
        self.elements.binary_search(&w).is_ok()
    }
}

/// True iff every coroot coordinate of `w mu` outside `i` is positive.
pub fn in_omega(g: &WeylGroup, mu: &Coweight, i: SimpleSubset, w: WeylElement) -> Result<bool> {
    let moved = g.act_coweight(w, mu)?;
    Ok(moved
        .coords()
        .iter()
        .enumerate()
        .all(|(a, c)| i.contains(a) || num_traits::Signed::is_positive(c)))
}

/// `Omega_I` for a strictly dominant `mu`.
pub fn omega(g: &WeylGroup, mu: &Coweight, i: SimpleSubset) -> Result<OmegaSet> {
    g.datum().require_dominant(mu)?;
    check_subset(g, i)?;
    let mut elements = Vec::new();
    for w in g.elements() {
        if in_omega(g, mu, i, w)? {
            elements.push(w);
        }
    }
    Ok(OmegaSet { i, mu: mu.clone(), elements })
}

fn check_subset(g: &WeylGroup, i: SimpleSubset) -> Result<()> {
    match i.iter().find(|&a| a >= g.rank()) {
        Some(a) => Err(Error::IndexOutOfRange { index: a + 1, rank: g.rank() }),
        None => Ok(()),
    }
}

fn check_proper(g: &WeylGroup, i: SimpleSubset) -> Result<()> {
    check_subset(g, i)?;
    if i == g.simple_roots() {
        Err(Error::FullSubset)
    } else {
        Ok(())
    }
}

/// `r_I = |Phi_I^+|`, the dimension of `P_I / B`.
pub fn parabolic_dimension(g: &WeylGroup, i: SimpleSubset) -> usize {
    g.datum()
        .positive_roots()
        .iter()
        .filter(|r| r.iter().enumerate().all(|(a, &c)| c == 0 || i.contains(a)))
        .count()
}

/// Schubert cells `C_I(w)`, `w` in `W^I ∩ Omega_I`, of the closed subvariety `Y_I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YSpaceStructure {
    pub i: SimpleSubset,
    /// `(w, dim C_I(w) = l(w) + r_I)`.
    pub cells: Vec<(WeylElement, usize)>,
    pub r_i: usize,
    pub d_i: usize,
}

pub fn y_structure(g: &WeylGroup, mu: &Coweight, i: SimpleSubset) -> Result<YSpaceStructure> {
    check_proper(g, i)?;
    let om = omega(g, mu, i)?;
    let r_i = parabolic_dimension(g, i);
    let cells: Vec<(WeylElement, usize)> = om
        .elements
        .iter()
        .filter(|&&w| i.is_subset(g.upper_set(w)))
        .map(|&w| (w, g.length(w) + r_i))
        .collect();
    let d_i = cells.iter().map(|&(_, d)| d).max().unwrap_or(r_i);
    Ok(YSpaceStructure { i, cells, r_i, d_i })
}

/// Object layout of the complex computing local cohomology with support in `Y_I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParabolicComplexLayout {
    pub i: SimpleSubset,
    pub r_i: usize,
    pub d_i: usize,
    /// Column `j` holds the cells of length `d_I - r_I - j`.
    pub columns: Vec<Vec<WeylElement>>,
    pub start_degree: i64,
}

impl ParabolicComplexLayout {
    /// `M_I(w·λ)`.
    pub fn object_label(&self, g: &WeylGroup, w: WeylElement) -> String {
        let idx: Vec<String> = self.i.iter().map(|a| (a + 1).to_string()).collect();
        let sub = if idx.is_empty() { "B".to_string() } else { format!("{{{}}}", idx.join(",")) };
        let word = dot_word(g, w);
        if word.is_empty() {
            format!("M_{sub}(λ)")
        } else {
            format!("M_{sub}({word}·λ)")
        }
    }
}

pub fn parabolic_complex_layout(g: &WeylGroup, mu: &Coweight, i: SimpleSubset) -> Result<ParabolicComplexLayout> {
    let y = y_structure(g, mu, i)?;
    let top = y.d_i - y.r_i;
    let columns = (0..=top)
        .map(|j| y.cells.iter().filter(|&&(w, _)| g.length(w) == top - j).map(|&(w, _)| w).collect())
        .collect();
    let n = g.datum().num_positive_roots() as i64;
    Ok(ParabolicComplexLayout {
        i,
        r_i: y.r_i,
        d_i: y.d_i,
        columns,
        start_degree: n + y.r_i as i64 - y.d_i as i64,
    })
}

/// `w` as a concatenated word (`s1s2`), or empty for the identity.
pub(crate) fn dot_word(g: &WeylGroup, w: WeylElement) -> String {
    g.reduced_word(w).iter().map(|s| format!("s{}", s + 1)).collect()
}

/// The complex `C_*`: level `j` lists `{w in Omega_emptyset : l(w) = j}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplexSpec {
    pub mu: Coweight,
    /// `|Phi^+| - |Delta|`.
    pub i0: i64,
    pub levels: Vec<Vec<WeylElement>>,
}

impl ChainComplexSpec {
    pub fn degree_of_level(&self, j: usize) -> i64 {
        self.i0 - j as i64
    }

    /// `dim Y_emptyset`, the index of the last level.
    pub fn top_level(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn level_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    /// `Omega_emptyset` flattened level by level.
    pub fn elements(&self) -> impl Iterator<Item = WeylElement> + '_ {
        self.levels.iter().flatten().copied()
    }

    /// Levels placed in negative degree. The construction says nothing about
    /// them, so they are reported rather than dropped.
    pub fn warnings(&self) -> Vec<String> {
        (0..self.levels.len())
            .filter(|&j| self.degree_of_level(j) < 0)
            .map(|j| format!("level {j} sits in negative degree {}", self.degree_of_level(j)))
            .collect()
    }
}

pub fn build_complex(g: &WeylGroup, mu: &Coweight) -> Result<ChainComplexSpec> {
    let om = omega(g, mu, SimpleSubset::empty())?;
    let top = om.elements.iter().map(|&w| g.length(w)).max().unwrap_or(0);
    let mut levels = vec![Vec::new(); top + 1];
    for &w in &om.elements {
        levels[g.length(w)].push(w);
    }
    let i0 = g.datum().num_positive_roots() as i64 - g.rank() as i64;
    Ok(ChainComplexSpec { mu: mu.clone(), i0, levels })
}

/// Second-quadrant double complex: `(p, q) = (-|Delta \ I|, n - l(w))` over
/// all `I ⊆ Delta` and `w in W^I ∩ Omega_I`. For `I = Delta` the condition
/// on `Omega` is vacuous and only `e` survives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleComplexLayout {
    pub n: usize,
    pub entries: BTreeMap<(i64, i64), Vec<(SimpleSubset, WeylElement)>>,
}

pub fn double_complex_layout(g: &WeylGroup, mu: &Coweight) -> Result<DoubleComplexLayout> {
    g.datum().require_dominant(mu)?;
    let delta = g.simple_roots();
    let n = g.datum().num_positive_roots();
    let mut entries: BTreeMap<(i64, i64), Vec<(SimpleSubset, WeylElement)>> = BTreeMap::new();
    for i in delta.subsets() {
        let p = -(delta.difference(i).len() as i64);
        for w in omega(g, mu, i)?.elements {
            if i.is_subset(g.upper_set(w)) {
                let q = (n - g.length(w)) as i64;
                entries.entry((p, q)).or_default().push((i, w));
            }
        }
    }
    Ok(DoubleComplexLayout { n, entries })
}
