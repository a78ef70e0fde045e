//! Kazhdan–Lusztig polynomials `P_{x,w}` and the Verma multiplicities
//! `m(u, v)` derived from them.
//!
//! Polynomials are computed a column at a time (all `x` for a fixed `w`) with
//! the classical left-descent recursion. Columns are memoized; a column only
//! ever depends on columns of strictly shorter elements.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Sub};
use std::sync::{Arc, RwLock};

use crate::error::Result;
use crate::weyl::{WeylElement, WeylGroup};

/// Integer polynomial in `q`, coefficients in ascending degree, no trailing zeros.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct KlPolynomial {
    coeffs: Vec<i64>,
}

impl KlPolynomial {
    pub fn zero() -> Self {
        KlPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        KlPolynomial { coeffs: vec![1] }
    }

    pub fn from_coeffs(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        KlPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval_at_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// Multiplies by `c * q^k`.
    pub fn scale_shift(&self, c: i64, k: usize) -> Self {
        if c == 0 || self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend(self.coeffs.iter().map(|a| a * c));
        Self::from_coeffs(coeffs)
    }

    fn combine(&self, other: &Self, sign: i64) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs((0..n).map(|k| self.coeff(k) + sign * other.coeff(k)).collect())
    }
}

impl Add for &KlPolynomial {
    type Output = KlPolynomial;
    fn add(self, rhs: &KlPolynomial) -> KlPolynomial {
        self.combine(rhs, 1)
    }
}

impl Sub for &KlPolynomial {
    type Output = KlPolynomial;
    fn sub(self, rhs: &KlPolynomial) -> KlPolynomial {
        self.combine(rhs, -1)
    }
}

/// Prints ascending powers: `1 + 2*q + q^2`.
impl fmt::Display for KlPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mag = c.unsigned_abs();
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            }
            first = false;
            let mono = match k {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{k}"),
            };
            match (k, mag) {
                (0, m) => write!(f, "{m}")?,
                (_, 1) => f.write_str(&mono)?,
                (_, m) => write!(f, "{m}*{mono}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for KlPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "KlPolynomial({self})")
    }
}

type Column = Arc<Vec<KlPolynomial>>;

/// Memoized Kazhdan–Lusztig polynomials of one Weyl group.
///
/// Safe to share between threads; concurrent computations of the same column
/// produce identical values, so a lost insert race is harmless.
pub struct KlTable {
    group: Arc<WeylGroup>,
    columns: RwLock<HashMap<u32, Column>>,
}

impl fmt::Debug for KlTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("KlTable").field("group", &self.group).finish_non_exhaustive()
    }
}

impl KlTable {
    pub fn new(group: Arc<WeylGroup>) -> Self {
        KlTable { group, columns: RwLock::new(HashMap::new()) }
    }

    pub fn group(&self) -> &WeylGroup {
        &self.group
    }

    pub fn group_arc(&self) -> Arc<WeylGroup> {
        Arc::clone(&self.group)
    }

    /// `P_{x,w}`.
    pub fn kl_polynomial(&self, x: WeylElement, w: WeylElement) -> Result<KlPolynomial> {
        self.group.check(&[x, w])?;
        Ok(self.column(w)[x.index()].clone())
    }

    /// `m(u, v) = P_{w0 u w0, w0 v w0}(1)`: the multiplicity of `L(v.0)` in
    /// `M(u.0)`, nonzero exactly when `u <= v`.
    pub fn verma_multiplicity(&self, u: WeylElement, v: WeylElement) -> Result<u64> {
        self.group.check(&[u, v])?;
        Ok(self.verma_unchecked(u, v))
    }

    pub(crate) fn verma_unchecked(&self, u: WeylElement, v: WeylElement) -> u64 {
        let g = &*self.group;
        let w0 = g.longest_element();
        let cu = g.multiply(g.multiply(w0, u), w0);
        let cv = g.multiply(g.multiply(w0, v), w0);
        let value = self.column(cv)[cu.index()].eval_at_one();
        u64::try_from(value).expect("KL polynomials have nonnegative value at 1")
    }

    /// `mu(z, v)`: coefficient of `q^{(l(v)-l(z)-1)/2}` in `P_{z,v}`.
    pub fn mu(&self, z: WeylElement, v: WeylElement) -> i64 {
        let (lz, lv) = (self.group.length(z), self.group.length(v));
        if lz >= lv || (lv - lz) % 2 == 0 {
            return 0;
        }
        self.column(v)[z.index()].coeff((lv - lz - 1) / 2)
    }

    fn column(&self, w: WeylElement) -> Column {
        let key = w.index() as u32;
        if let Some(c) = self.columns.read().expect("kl memo poisoned").get(&key) {
            return Arc::clone(c);
        }
        let col = Arc::new(self.compute_column(w));
        self.columns.write().expect("kl memo poisoned").entry(key).or_insert(col).clone()
    }

    fn compute_column(&self, w: WeylElement) -> Vec<KlPolynomial> {
        let g = &*self.group;
        let n = g.order();
        let e = g.identity();
        if w == e {
            let mut col = vec![KlPolynomial::zero(); n];
            col[0] = KlPolynomial::one();
            return col;
        }
        let s = g.left_descents(w).iter().next().expect("w != e has a left descent");
        let v = g.left_mul(s, w);
        let col_v = self.column(v);
        let lw = g.length(w);

        // Correction terms: z < v with s z < z and mu(z, v) != 0.
        let corrections: Vec<(usize, i64, Column)> = g
            .elements()
            .filter(|&z| g.length(z) < g.length(v) && g.left_descents(z).contains(s))
            .filter_map(|z| {
                let m = self.mu(z, v);
                (m != 0).then(|| ((lw - g.length(z)) / 2, m, self.column(z)))
            })
            .collect();

        g.elements()
            .map(|x| {
                if !g.bruhat_leq(x, w) {
                    return KlPolynomial::zero();
                }
                let sx = g.left_mul(s, x);
                let c = usize::from(g.length(sx) < g.length(x));
                let mut p = &col_v[sx.index()].scale_shift(1, 1 - c) + &col_v[x.index()].scale_shift(1, c);
                for (shift, m, col_z) in &corrections {
                    let term = col_z[x.index()].scale_shift(*m, *shift);
                    if !term.is_zero() {
                        p = &p - &term;
                    }
                }
                p
            })
            .collect()
    }
}
