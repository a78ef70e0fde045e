//! Serializable views of library results. Elements are written in the
//! `s1*s2` word syntax (`e` for the identity) and subsets as label lists.

use serde::{Deserialize, Serialize};

use crate::jh::{FactorTable, JhFactor};
use crate::kl::KlPolynomial;
use crate::period_domain::{
    ChainComplexSpec, DistributionType, DoubleComplexLayout, HomologyReport, OmegaSet, ParabolicComplexLayout,
    YSpaceStructure,
};
use crate::weyl::{WeylElement, WeylGroup};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorEntry {
    pub v: String,
    #[serde(rename = "I")]
    pub i: Vec<String>,
    #[serde(rename = "J")]
    pub j: Vec<String>,
    pub mult: u64,
}

impl FactorEntry {
    pub fn new(g: &WeylGroup, f: &JhFactor, mult: u64) -> Self {
        FactorEntry { v: g.format(f.v), i: f.i.labels(), j: f.j.labels(), mult }
    }
}

pub fn factor_table(g: &WeylGroup, table: &FactorTable) -> Vec<FactorEntry> {
    table.entries.iter().map(|(f, m)| FactorEntry::new(g, f, *m)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyFactor {
    pub v: String,
    #[serde(rename = "I")]
    pub i: Vec<String>,
    #[serde(rename = "J")]
    pub j: Vec<String>,
    pub mult_lo: u64,
    pub mult_hi: u64,
    pub pinned: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyDegree {
    pub degree: i64,
    pub factors: Vec<HomologyFactor>,
}

pub fn homology(g: &WeylGroup, report: &HomologyReport) -> Vec<HomologyDegree> {
    report
        .by_degree()
        .into_iter()
        .map(|d| HomologyDegree {
            degree: d.degree,
            factors: d
                .entries
                .iter()
                .map(|(f, h)| HomologyFactor {
                    v: g.format(f.v),
                    i: f.i.labels(),
                    j: f.j.labels(),
                    mult_lo: h.lo,
                    mult_hi: h.hi,
                    pinned: h.pinned(),
                })
                .collect(),
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OmegaJson {
    #[serde(rename = "I")]
    pub i: Vec<String>,
    pub elements: Vec<String>,
}

pub fn omega(g: &WeylGroup, om: &OmegaSet) -> OmegaJson {
    OmegaJson { i: om.i.labels(), elements: words(g, &om.elements) }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub i0: i64,
    pub levels: Vec<Vec<String>>,
    pub degrees: Vec<i64>,
    pub warnings: Vec<String>,
}

pub fn complex(g: &WeylGroup, c: &ChainComplexSpec) -> ComplexJson {
    ComplexJson {
        i0: c.i0,
        levels: c.levels.iter().map(|l| words(g, l)).collect(),
        degrees: (0..c.levels.len()).map(|j| c.degree_of_level(j)).collect(),
        warnings: c.warnings(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellJson {
    pub w: String,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct YSpaceJson {
    #[serde(rename = "I")]
    pub i: Vec<String>,
    pub r_i: usize,
    pub d_i: usize,
    pub cells: Vec<CellJson>,
    pub start_degree: i64,
    pub columns: Vec<Vec<String>>,
}

pub fn yspace(g: &WeylGroup, y: &YSpaceStructure, layout: &ParabolicComplexLayout) -> YSpaceJson {
    YSpaceJson {
        i: y.i.labels(),
        r_i: y.r_i,
        d_i: y.d_i,
        cells: y.cells.iter().map(|&(w, dim)| CellJson { w: g.format(w), dim }).collect(),
        start_degree: layout.start_degree,
        columns: layout.columns.iter().map(|c| words(g, c)).collect(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KlJson {
    pub x: String,
    pub w: String,
    pub polynomial: String,
    pub coeffs: Vec<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub verma: Option<u64>,
}

pub fn kl(g: &WeylGroup, x: WeylElement, w: WeylElement, p: &KlPolynomial, verma: Option<u64>) -> KlJson {
    KlJson { x: g.format(x), w: g.format(w), polynomial: p.to_string(), coeffs: p.coeffs().to_vec(), verma }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LayoutCell {
    #[serde(rename = "I")]
    pub i: Vec<String>,
    pub w: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LayoutEntry {
    pub p: i64,
    pub q: i64,
    pub cells: Vec<LayoutCell>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DoubleLayoutJson {
    pub n: usize,
    pub entries: Vec<LayoutEntry>,
}

pub fn double_layout(g: &WeylGroup, d: &DoubleComplexLayout) -> DoubleLayoutJson {
    DoubleLayoutJson {
        n: d.n,
        entries: d
            .entries
            .iter()
            .map(|(&(p, q), cells)| LayoutEntry {
                p,
                q,
                cells: cells.iter().map(|&(i, w)| LayoutCell { i: i.labels(), w: g.format(w) }).collect(),
            })
            .collect(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistributionJson {
    pub factor: FactorEntry,
    pub levels: Vec<Vec<u64>>,
}

pub fn distribution(g: &WeylGroup, d: &DistributionType) -> DistributionJson {
    DistributionJson { factor: FactorEntry::new(g, &d.factor, d.levels[0][0]), levels: d.levels.clone() }
}

fn words(g: &WeylGroup, ws: &[WeylElement]) -> Vec<String> {
    ws.iter().map(|&w| g.format(w)).collect()
}
