//! Finite root data built from Cartan matrices.
//!
//! Conventions: the Cartan matrix entry `C[j][i]` is `<alpha_i, alpha_j^vee>`,
//! so row `j` lists the pairings of all simple roots with the coroot
//! `alpha_j^vee`. Roots and weights are stored in the simple-root basis,
//! coweights in the simple-coroot basis. Everything is exact.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::{IntMatrix, RatMatrix};

/// Largest rank for which the principal-minor check is run exhaustively.
const MAX_RANK: usize = 16;

/// A named (or custom) Cartan matrix that passed the finite-type checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanType {
    label: String,
    matrix: IntMatrix,
}

impl CartanType {
    /// Parses labels such as `A3`, `b2`, `G2` or products like `A1xA2`.
    pub fn from_label(label: &str) -> Result<Self> {
        let trimmed = label.trim();
        let parts: Vec<&str> = trimmed.split(['x', 'X']).collect();
        let blocks = parts
            .iter()
            .map(|p| irreducible_matrix(p.trim()))
            .collect::<Result<Vec<_>>>()?;
        let dim: usize = blocks.iter().map(|b| b.dim()).sum();
        let mut matrix = IntMatrix::identity(dim);
        let mut offset = 0;
        for b in &blocks {
            for r in 0..b.dim() {
                for c in 0..b.dim() {
                    matrix.set(offset + r, offset + c, b.get(r, c));
                }
            }
            offset += b.dim();
        }
        let label = parts
            .iter()
            .map(|p| p.trim().to_ascii_uppercase())
            .collect::<Vec<_>>()
            .join("x");
        Self::from_matrix(label, matrix)
    }

    /// Validates an explicit matrix.
    pub fn from_matrix(label: impl Into<String>, matrix: IntMatrix) -> Result<Self> {
        validate_cartan(&matrix)?;
        Ok(CartanType { label: label.into(), matrix })
    }

    /// Reads the plain-text format: first line `d`, then `d` rows of `d`
    /// whitespace-separated integers.
    pub fn parse_matrix_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let d: usize = lines
            .next()
            .ok_or_else(|| Error::Parse("empty Cartan matrix file".into()))?
            .parse()
            .map_err(|e| Error::Parse(format!("bad dimension line: {e}")))?;
        let mut rows = Vec::with_capacity(d);
        for r in 0..d {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse(format!("expected {d} rows, found {r}")))?;
            let row = line
                .split_whitespace()
                .map(|t| t.parse::<i64>().map_err(|e| Error::Parse(format!("bad entry {t:?}: {e}"))))
                .collect::<Result<Vec<_>>>()?;
            if row.len() != d {
                return Err(Error::Parse(format!("row {} has {} entries, expected {d}", r + 1, row.len())));
            }
            rows.push(row);
        }
        if lines.next().is_some() {
            return Err(Error::Parse("trailing data after Cartan matrix".into()));
        }
        Self::from_matrix("custom", IntMatrix::from_rows(&rows))
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn rank(&self) -> usize {
        self.matrix.dim()
    }

    /// True when the Dynkin diagram is connected.
    pub fn is_irreducible(&self) -> bool {
        let d = self.rank();
        if d == 0 {
            return false;
        }
        let mut seen = vec![false; d];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for (j, s) in seen.iter_mut().enumerate() {
                if !*s && self.matrix.get(i, j) != 0 {
                    *s = true;
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CartanType::from_label(s)
    }
}

fn irreducible_matrix(label: &str) -> Result<IntMatrix> {
    let mut chars = label.chars();
    let family = chars
        .next()
        .ok_or_else(|| Error::Parse("empty Cartan type".into()))?
        .to_ascii_uppercase();
    let n: usize = chars
        .as_str()
        .parse()
        .map_err(|_| Error::Parse(format!("bad Cartan type {label:?}: expected letter + rank")))?;
    let bad = || Error::Parse(format!("no Cartan type {family}{n}"));
    let mut m = IntMatrix::identity(n);
    for i in 0..n {
        m.set(i, i, 2);
    }
    let mut link = |i: usize, j: usize| {
        m.set(i, j, -1);
        m.set(j, i, -1);
    };
    match family {
        'A' if n >= 1 => (0..n - 1).for_each(|i| link(i, i + 1)),
        'B' | 'C' if n >= 2 => (0..n - 1).for_each(|i| link(i, i + 1)),
        'D' if n >= 4 => {
            (0..n - 2).for_each(|i| link(i, i + 1));
            link(n - 3, n - 1);
        }
        'E' if (6..=8).contains(&n) => {
            link(0, 2);
            link(1, 3);
            (2..n - 1).for_each(|i| link(i, i + 1));
        }
        'F' if n == 4 => (0..3).for_each(|i| link(i, i + 1)),
        'G' if n == 2 => link(0, 1),
        _ => return Err(bad()),
    }
    // Non-simply-laced bonds: row j holds pairings with alpha_j^vee.
    match family {
        'B' => m.set(n - 1, n - 2, -2),
        'C' => m.set(n - 2, n - 1, -2),
        'F' => m.set(2, 1, -2),
        'G' => m.set(1, 0, -3),
        _ => {}
    }
    Ok(m)
}

fn validate_cartan(m: &IntMatrix) -> Result<()> {
    let d = m.dim();
    if d == 0 {
        return Err(Error::InvalidCartan("rank must be at least 1".into()));
    }
    if d > MAX_RANK {
        return Err(Error::InvalidCartan(format!("rank {d} exceeds supported maximum {MAX_RANK}")));
    }
    for i in 0..d {
        if m.get(i, i) != 2 {
            return Err(Error::InvalidCartan(format!(
                "diagonal entry ({},{}) is {}, expected 2",
                i + 1,
                i + 1,
                m.get(i, i)
            )));
        }
        for j in 0..d {
            if i == j {
                continue;
            }
            if m.get(i, j) > 0 {
                return Err(Error::InvalidCartan(format!(
                    "off-diagonal entry ({},{}) is positive",
                    i + 1,
                    j + 1
                )));
            }
            if (m.get(i, j) == 0) != (m.get(j, i) == 0) {
                return Err(Error::InvalidCartan(format!(
                    "entry ({},{}) is zero but ({},{}) is not",
                    i + 1,
                    j + 1,
                    j + 1,
                    i + 1
                )));
            }
        }
    }
    for mask in 1u32..(1u32 << d) {
        let idx: Vec<usize> = (0..d).filter(|i| mask & (1 << i) != 0).collect();
        if !m.principal(&idx).determinant().is_positive() {
            let shown: Vec<String> = idx.iter().map(|i| (i + 1).to_string()).collect();
            return Err(Error::InvalidCartan(format!(
                "not of finite type: principal minor on {{{}}} is not positive",
                shown.join(",")
            )));
        }
    }
    Ok(())
}

/// Rational vector in the simple-root basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Weight(pub Vec<BigRational>);

/// Rational vector in the simple-coroot basis: `mu = sum n_alpha alpha^vee`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coweight(pub Vec<BigRational>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![BigRational::zero(); rank])
    }

    pub fn from_integers(coords: &[i64]) -> Self {
        Weight(coords.iter().map(|&c| int(c)).collect())
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.0
    }
}

impl Coweight {
    pub fn from_integers(coords: &[i64]) -> Self {
        Coweight(coords.iter().map(|&c| int(c)).collect())
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }
}

impl fmt::Display for Coweight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub(crate) fn int(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// Outcome of the open-chamber test `<alpha_i, mu> > 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChamberReport {
    pub dominant: bool,
    /// `<alpha_i, mu>` for every simple root.
    pub simple_pairings: Vec<BigRational>,
    /// First simple root (0-based) where the test fails.
    pub first_violation: Option<usize>,
}

/// A finite root system with its positive roots, rho and inverse Cartan matrix.
#[derive(Clone, Debug)]
pub struct RootDatum {
    cartan: CartanType,
    positive_roots: Vec<Vec<i64>>,
    root_index: HashMap<Vec<i64>, usize>,
    rho: Weight,
    inverse_cartan: RatMatrix,
}

impl RootDatum {
    pub fn new(cartan: CartanType) -> Result<Self> {
        let d = cartan.rank();
        let c = cartan.matrix().clone();
        let simple: Vec<Vec<i64>> = (0..d)
            .map(|i| (0..d).map(|k| i64::from(k == i)).collect())
            .collect();
        let mut positive_roots = simple.clone();
        let mut root_index: HashMap<Vec<i64>, usize> =
            simple.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        let mut queue: VecDeque<usize> = (0..d).collect();
        while let Some(k) = queue.pop_front() {
            for i in 0..d {
                let image = reflect_root(&c, i, &positive_roots[k]);
                if image.iter().all(|&x| x >= 0) && !root_index.contains_key(&image) {
                    if positive_roots.len() > 10_000 {
                        return Err(Error::InvalidCartan("root system is not finite".into()));
                    }
                    root_index.insert(image.clone(), positive_roots.len());
                    queue.push_back(positive_roots.len());
                    positive_roots.push(image);
                }
            }
        }
        // Stable order: by height, then coordinates.
        positive_roots.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        root_index = positive_roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();

        let two = int(2);
        let rho = Weight(
            (0..d)
                .map(|k| positive_roots.iter().map(|r| int(r[k])).sum::<BigRational>() / &two)
                .collect(),
        );
        let inverse_cartan = c
            .inverse_rational()
            .ok_or_else(|| Error::InvalidCartan("singular Cartan matrix".into()))?;
        Ok(RootDatum { cartan, positive_roots, root_index, rho, inverse_cartan })
    }

    pub fn from_label(label: &str) -> Result<Self> {
        Self::new(CartanType::from_label(label)?)
    }

    pub fn cartan(&self) -> &CartanType {
        &self.cartan
    }

    pub fn cartan_matrix(&self) -> &IntMatrix {
        self.cartan.matrix()
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn positive_root_index(&self, root: &[i64]) -> Option<usize> {
        self.root_index.get(root).copied()
    }

    /// Whether `v` is a root (positive or negative).
    pub fn is_root(&self, v: &[i64]) -> bool {
        if self.root_index.contains_key(v) {
            return true;
        }
        let neg: Vec<i64> = v.iter().map(|x| -x).collect();
        self.root_index.contains_key(&neg)
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    pub fn inverse_cartan(&self) -> &RatMatrix {
        &self.inverse_cartan
    }

    /// Fundamental weight dual to `alpha_i^vee`, in the simple-root basis.
    pub fn fundamental_weight(&self, i: usize) -> Weight {
        Weight(self.inverse_cartan.column(i))
    }

    /// `s_i` applied to an integral vector in the simple-root basis.
    pub fn reflect_root(&self, i: usize, v: &[i64]) -> Vec<i64> {
        reflect_root(self.cartan_matrix(), i, v)
    }

    pub fn check_rank(&self, len: usize) -> Result<()> {
        if len == self.rank() {
            Ok(())
        } else {
            Err(Error::RankMismatch { expected: self.rank(), actual: len })
        }
    }

    /// `<lambda, mu>`.
    pub fn pairing(&self, lam: &Weight, mu: &Coweight) -> Result<BigRational> {
        self.check_rank(lam.0.len())?;
        self.check_rank(mu.0.len())?;
        let c = self.cartan_matrix();
        let d = self.rank();
        let mut acc = BigRational::zero();
        for j in 0..d {
            if mu.0[j].is_zero() {
                continue;
            }
            for i in 0..d {
                let e = c.get(j, i);
                if e != 0 {
                    acc += &lam.0[i] * &mu.0[j] * int(e);
                }
            }
        }
        Ok(acc)
    }

    /// `<alpha_i, mu>` for every simple root.
    pub fn simple_pairings(&self, mu: &Coweight) -> Result<Vec<BigRational>> {
        self.check_rank(mu.0.len())?;
        let c = self.cartan_matrix();
        let d = self.rank();
        Ok((0..d)
            .map(|i| (0..d).fold(BigRational::zero(), |acc, j| acc + &mu.0[j] * int(c.get(j, i))))
            .collect())
    }

    /// Coordinates `<lambda, alpha_j^vee>` in the fundamental-weight basis.
    pub fn to_fundamental(&self, lam: &Weight) -> Result<Vec<BigRational>> {
        self.check_rank(lam.0.len())?;
        Ok(self.cartan_matrix().apply_rational(&lam.0))
    }

    pub fn from_fundamental(&self, coords: &[BigRational]) -> Result<Weight> {
        self.check_rank(coords.len())?;
        Ok(Weight(self.inverse_cartan.apply(coords)))
    }

    /// The open-chamber test; when it passes, every coroot coordinate of `mu`
    /// is also positive.
    pub fn validate_mu_positive_chamber(&self, mu: &Coweight) -> Result<ChamberReport> {
        let simple_pairings = self.simple_pairings(mu)?;
        let first_violation = simple_pairings.iter().position(|p| !p.is_positive());
        let dominant = first_violation.is_none();
        if dominant {
            debug_assert!(mu.0.iter().all(|n| n.is_positive()), "positive chamber with non-positive coroot coordinate");
        }
        Ok(ChamberReport { dominant, simple_pairings, first_violation })
    }

    /// Errors with [`Error::NotDominant`] unless `mu` is in the open chamber.
    pub fn require_dominant(&self, mu: &Coweight) -> Result<()> {
        let report = self.validate_mu_positive_chamber(mu)?;
        match report.first_violation {
            None => Ok(()),
            Some(i) => Err(Error::NotDominant {
                index: i + 1,
                value: report.simple_pairings[i].to_string(),
            }),
        }
    }
}

fn reflect_root(c: &IntMatrix, i: usize, v: &[i64]) -> Vec<i64> {
    let pairing: i64 = (0..v.len()).map(|k| c.get(i, k) * v[k]).sum();
    let mut out = v.to_vec();
    out[i] -= pairing;
    out
}

/// Type `A_{n-1}` coweight from GL_n coordinates `(x_1, ..., x_n)`:
/// coroot coordinates are the partial sums `x_1 + ... + x_i`, `i < n`.
pub fn coweight_from_gln(x: &[BigRational]) -> Result<Coweight> {
    if x.len() < 2 {
        return Err(Error::GlnTooSmall(x.len()));
    }
    let sum: BigRational = x.iter().sum();
    if !sum.is_zero() {
        return Err(Error::NonzeroSum { sum: sum.to_string() });
    }
    let mut acc = BigRational::zero();
    let coords = x[..x.len() - 1]
        .iter()
        .map(|xi| {
            acc += xi;
            acc.clone()
        })
        .collect();
    Ok(Coweight(coords))
}

/// Subtracts the mean so the coordinates sum to zero.
pub fn recenter_gln(x: &[BigRational]) -> Vec<BigRational> {
    if x.is_empty() {
        return Vec::new();
    }
    let mean = x.iter().sum::<BigRational>() / int(x.len() as i64);
    x.iter().map(|xi| xi - &mean).collect()
}

/// Parses a comma-separated list of integers or fractions `p/q`.
pub fn parse_rational_list(text: &str) -> Result<Vec<BigRational>> {
    text.split(',')
        .map(|t| {
            let t = t.trim();
            if t.is_empty() {
                return Err(Error::Parse("empty entry in list".into()));
            }
            let r: BigRational = t.parse().map_err(|_| Error::Parse(format!("bad rational {t:?}")))?;
            Ok(r)
        })
        .collect()
}
