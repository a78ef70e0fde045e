//! Jordan–Hölder multiplicities of the twisted generalized Steinberg
//! representations `V^G_B(w)`.
//!
//! A simple constituent is labelled by `(v, I, J)` with `I = I(v)` and
//! `J ⊆ I`; it stands for `F^G_{P_I}(L(v·λ), v^{P_I}_{P_J})`. The dominant
//! weight `λ` never enters: all multiplicities are Weyl-group combinatorics
//! at the trivial infinitesimal character.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::kl::KlTable;
use crate::subset::SimpleSubset;
use crate::weyl::{WeylElement, WeylGroup};

/// Label `(v, I(v), J)` of an irreducible constituent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct JhFactor {
    pub v: WeylElement,
    pub i: SimpleSubset,
    pub j: SimpleSubset,
}

/// All constituents of `V^G_B(w)` with their multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorTable {
    pub source_w: WeylElement,
    pub entries: Vec<(JhFactor, u64)>,
}

impl FactorTable {
    pub fn count(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, factor: &JhFactor) -> Option<u64> {
        self.entries.iter().find(|(f, _)| f == factor).map(|&(_, m)| m)
    }
}

/// Evaluates multiplicity formulas over a shared KL table.
#[derive(Debug)]
pub struct JhContext {
    kl: Arc<KlTable>,
    /// Elements grouped by exact support.
    by_support: HashMap<SimpleSubset, Vec<WeylElement>>,
}

impl JhContext {
    pub fn new(kl: Arc<KlTable>) -> Self {
        let g = kl.group();
        let mut by_support: HashMap<SimpleSubset, Vec<WeylElement>> = HashMap::new();
        for w in g.elements() {
            by_support.entry(g.support(w)).or_default().push(w);
        }
        JhContext { kl, by_support }
    }

    pub fn for_group(group: Arc<WeylGroup>) -> Self {
        Self::new(Arc::new(KlTable::new(group)))
    }

    pub fn group(&self) -> &WeylGroup {
        self.kl.group()
    }

    pub fn kl(&self) -> &KlTable {
        &self.kl
    }

    fn check_j(&self, v: WeylElement, j: SimpleSubset) -> Result<SimpleSubset> {
        let iv = self.group().upper_set(v);
        if j.is_subset(iv) {
            Ok(iv)
        } else {
            Err(Error::NotSubset { j: j.to_string(), i: iv.to_string() })
        }
    }

    /// `[V^G_B(w) : (v, I(v), J)]`:
    /// the sum over `w'` with `supp(w') = J ∩ I(w)` of
    /// `(-1)^{l(w') + |J ∩ I(w)|} m(w'w, v)`.
    pub fn jh_multiplicity(&self, w: WeylElement, v: WeylElement, j: SimpleSubset) -> Result<i64> {
        self.group().check(&[w, v])?;
        self.check_j(v, j)?;
        Ok(self.multiplicity_unchecked(w, v, j))
    }

    fn multiplicity_unchecked(&self, w: WeylElement, v: WeylElement, j: SimpleSubset) -> i64 {
        let g = self.group();
        let m = j.intersection(g.upper_set(w));
        let Some(candidates) = self.by_support.get(&m) else {
            return 0;
        };
        let mut total = 0i64;
        for &wp in candidates {
            let u = g.multiply(wp, w);
            // m(u, v) vanishes unless u <= v.
            if !g.bruhat_leq(u, v) {
                continue;
            }
            let sign = if (g.length(wp) + m.len()).is_multiple_of(2) { 1 } else { -1 };
            total += sign * self.kl.verma_unchecked(u, v) as i64;
        }
        total
    }

    /// The unsimplified inclusion–exclusion
    /// `sum_{K ⊆ J ∩ I(w)} (-1)^{|K|} sum_{w' in W_K} (-1)^{l(w')} m(w'w, v)`,
    /// evaluated without any Bruhat pruning. Used to cross-check
    /// [`jh_multiplicity`](Self::jh_multiplicity).
    pub fn jh_multiplicity_oracle(&self, w: WeylElement, v: WeylElement, j: SimpleSubset) -> Result<i64> {
        let g = self.group();
        g.check(&[w, v])?;
        self.check_j(v, j)?;
        let m = j.intersection(g.upper_set(w));
        let mut total = 0i64;
        for k in m.subsets() {
            let inner: i64 = g
                .elements()
                .filter(|&wp| g.support(wp).is_subset(k))
                .map(|wp| {
                    let sign = if g.length(wp).is_multiple_of(2) { 1 } else { -1 };
                    sign * self.kl.verma_unchecked(g.multiply(wp, w), v) as i64
                })
                .sum();
            total += if k.len() % 2 == 0 { inner } else { -inner };
        }
        Ok(total)
    }

    /// Every `(v, J)` with nonzero multiplicity in `V^G_B(w)`, ordered by `v`
    /// (enumeration order) and then `J` (size, then lexicographic).
    pub fn jh_factors(&self, w: WeylElement) -> Result<FactorTable> {
        let g = self.group();
        g.check(&[w])?;
        let mut entries = Vec::new();
        for v in g.elements() {
            let iv = g.upper_set(v);
            for j in iv.subsets() {
                let m = self.multiplicity_unchecked(w, v, j);
                if m != 0 {
                    assert!(m > 0, "negative Jordan–Hölder multiplicity {m}");
                    entries.push((JhFactor { v, i: iv, j }, m as u64));
                }
            }
        }
        Ok(FactorTable { source_w: w, entries })
    }

    /// Text line `[v, I, J, mult]` with `1` for the identity.
    pub fn table_line(&self, factor: &JhFactor, mult: u64) -> String {
        let g = self.group();
        let v = if g.length(factor.v) == 0 { "1".to_string() } else { g.format(factor.v) };
        format!("[{v}, {}, {}, {mult}]", factor.i, factor.j)
    }

    /// Representation-theoretic name, e.g. `F^G_{P_{1,3}}(L(s2s3·λ), v^{P_{1,3}}_{P_{3}})`.
    pub fn factor_label(&self, factor: &JhFactor) -> String {
        FactorLabel { group: self.group(), factor }.to_string()
    }
}

struct FactorLabel<'a> {
    group: &'a WeylGroup,
    factor: &'a JhFactor,
}

fn parabolic_name(set: SimpleSubset, rank: usize) -> String {
    if set.len() == rank {
        "G".to_string()
    } else if set.is_empty() {
        "B".to_string()
    } else {
        let idx: Vec<String> = set.iter().map(|i| (i + 1).to_string()).collect();
        format!("P_{{{}}}", idx.join(","))
    }
}

fn braced(name: String) -> String {
    if name.len() == 1 {
        name
    } else {
        format!("{{{name}}}")
    }
}

impl fmt::Display for FactorLabel<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = self.group;
        let d = g.rank();
        let JhFactor { v, i, j } = *self.factor;
        let weight = if g.length(v) == 0 {
            "λ".to_string()
        } else {
            let word: String = g.reduced_word(v).iter().map(|s| format!("s{}", s + 1)).collect();
            format!("{word}·λ")
        };
        let outer = braced(parabolic_name(i, d));
        if i.len() == d && j.is_empty() && g.length(v) == 0 {
            return write!(f, "v^G_B({weight})");
        }
        let smooth = if j == i {
            "1".to_string()
        } else {
            format!("v^{outer}_{}", braced(parabolic_name(j, d)))
        };
        write!(f, "F^G_{outer}(L({weight}), {smooth})")
    }
}
