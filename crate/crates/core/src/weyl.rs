//! Weyl group arithmetic on a fully enumerated finite group.
//!
//! Elements are keyed by their action matrix on the root lattice (simple-root
//! basis). The group is enumerated once, sorted by `(length, canonical word)`,
//! and elements are handed out as small [`WeylElement`] handles indexing that
//! table. The canonical reduced word of `w` is obtained by repeatedly
//! stripping the smallest left descent.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};
use std::sync::{Arc, RwLock};

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::root_datum::{int, Coweight, RootDatum, Weight};
use crate::subset::SimpleSubset;

/// Default cap on `|W|` for enumeration.
pub const DEFAULT_ORDER_BOUND: usize = 1_000_000;

static NEXT_GROUP_ID: AtomicU64 = AtomicU64::new(1);

/// Handle to an element of a specific [`WeylGroup`].
///
/// Handles compare by position in the enumeration order, which is
/// `(length, canonical reduced word)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    group: u64,
    index: u32,
}

impl WeylElement {
    /// Position in [`WeylGroup::elements`].
    pub fn index(self) -> usize {
        self.index as usize
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylElement(#{})", self.index)
    }
}

#[derive(Debug)]
struct ElementData {
    action: IntMatrix,
    length: usize,
    word: Vec<usize>,
    support: SimpleSubset,
    left_descents: SimpleSubset,
}

/// A finite Weyl group with multiplication tables and a memoized Bruhat order.
pub struct WeylGroup {
    id: u64,
    datum: Arc<RootDatum>,
    generators: Vec<IntMatrix>,
    elements: Vec<ElementData>,
    index: HashMap<IntMatrix, u32>,
    /// `left[s][w] = s_s * w`
    left: Vec<Vec<u32>>,
    /// `right[s][w] = w * s_s`
    right: Vec<Vec<u32>>,
    inverse: Vec<u32>,
    longest: u32,
    bruhat_memo: RwLock<HashMap<(u32, u32), bool>>,
}

impl fmt::Debug for WeylGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("WeylGroup")
            .field("type", &self.datum.cartan().label())
            .field("order", &self.order())
            .finish()
    }
}

impl WeylGroup {
    pub fn new(datum: Arc<RootDatum>) -> Result<Self> {
        Self::with_bound(datum, DEFAULT_ORDER_BOUND)
    }

    pub fn from_label(label: &str) -> Result<Self> {
        Self::new(Arc::new(RootDatum::from_label(label)?))
    }

    /// Enumerates the group, failing with [`Error::GroupTooLarge`] once more
    /// than `bound` elements are found.
    pub fn with_bound(datum: Arc<RootDatum>, bound: usize) -> Result<Self> {
        let d = datum.rank();
        let generators: Vec<IntMatrix> = (0..d).map(|i| simple_reflection_matrix(&datum, i)).collect();

        // Breadth-first search over the Cayley graph; BFS depth is the length.
        let mut actions = vec![IntMatrix::identity(d)];
        let mut lengths = vec![0usize];
        let mut seen: HashMap<IntMatrix, usize> = HashMap::from([(IntMatrix::identity(d), 0)]);
        let mut left_raw: Vec<Vec<usize>> = vec![Vec::new(); d];
        let mut queue = VecDeque::from([0usize]);
        while let Some(w) = queue.pop_front() {
            for (s, g) in generators.iter().enumerate() {
                let prod = g.mul(&actions[w]);
                let target = match seen.get(&prod) {
                    Some(&t) => t,
                    None => {
                        if actions.len() >= bound {
                            return Err(Error::GroupTooLarge { bound });
                        }
                        let t = actions.len();
                        seen.insert(prod.clone(), t);
                        actions.push(prod);
                        lengths.push(lengths[w] + 1);
                        queue.push_back(t);
                        t
                    }
                };
                if left_raw[s].len() <= w {
                    left_raw[s].resize(w + 1, usize::MAX);
                }
                left_raw[s][w] = target;
            }
        }
        let n = actions.len();

        // Canonical words in order of length: smallest left descent first.
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&w| lengths[w]);
        let mut words: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &w in &order {
            if lengths[w] == 0 {
                continue;
            }
            let s = (0..d)
                .find(|&s| lengths[left_raw[s][w]] < lengths[w])
                .expect("non-identity element has a left descent");
            let mut word = vec![s];
            word.extend_from_slice(&words[left_raw[s][w]]);
            words[w] = word;
        }
        order.sort_by(|&a, &b| lengths[a].cmp(&lengths[b]).then_with(|| words[a].cmp(&words[b])));
        let mut new_index = vec![0u32; n];
        for (pos, &old) in order.iter().enumerate() {
            new_index[old] = pos as u32;
        }

        let mut elements = Vec::with_capacity(n);
        let mut index = HashMap::with_capacity(n);
        let mut left = vec![vec![0u32; n]; d];
        for (pos, &old) in order.iter().enumerate() {
            let word = std::mem::take(&mut words[old]);
            let support = SimpleSubset::from_indices(word.iter().copied());
            let mut left_descents = SimpleSubset::empty();
            for s in 0..d {
                let t = left_raw[s][old];
                left[s][pos] = new_index[t];
                if lengths[t] < lengths[old] {
                    left_descents.insert(s);
                }
            }
            index.insert(actions[old].clone(), pos as u32);
            elements.push(ElementData {
                action: std::mem::replace(&mut actions[old], IntMatrix::identity(0)),
                length: lengths[old],
                word,
                support,
                left_descents,
            });
        }

        let mut right = vec![vec![0u32; n]; d];
        let mut inverse = vec![0u32; n];
        for (w, e) in elements.iter().enumerate() {
            for (s, g) in generators.iter().enumerate() {
                right[s][w] = index[&e.action.mul(g)];
            }
            // w = s_a1 ... s_ak, so left-multiplying a1, ..., ak onto e yields w^{-1}.
            let mut acc = 0u32;
            for &s in &e.word {
                acc = left[s][acc as usize];
            }
            inverse[w] = acc;
        }
        let longest = (n - 1) as u32;
        debug_assert_eq!(elements[longest as usize].length, datum.num_positive_roots());

        Ok(WeylGroup {
            id: NEXT_GROUP_ID.fetch_add(1, AtomicOrdering::Relaxed),
            datum,
            generators,
            elements,
            index,
            left,
            right,
            inverse,
            longest,
            bruhat_memo: RwLock::new(HashMap::new()),
        })
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn datum_arc(&self) -> Arc<RootDatum> {
        Arc::clone(&self.datum)
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn simple_roots(&self) -> SimpleSubset {
        SimpleSubset::full(self.rank())
    }

    fn handle(&self, index: u32) -> WeylElement {
        WeylElement { group: self.id, index }
    }

    fn data(&self, w: WeylElement) -> &ElementData {
        debug_assert_eq!(w.group, self.id, "element from another group");
        &self.elements[w.index as usize]
    }

    /// Checks that the handles were issued by this group.
    pub fn check(&self, elems: &[WeylElement]) -> Result<()> {
        if elems.iter().all(|w| w.group == self.id) {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }

    /// Element at a position of the enumeration order.
    pub fn element(&self, index: usize) -> WeylElement {
        assert!(index < self.order());
        self.handle(index as u32)
    }

    /// All elements, each once, in `(length, canonical word)` order.
    pub fn elements(&self) -> impl ExactSizeIterator<Item = WeylElement> + '_ {
        (0..self.elements.len() as u32).map(move |i| self.handle(i))
    }

    pub fn enumerate_group(&self) -> Vec<WeylElement> {
        self.elements().collect()
    }

    pub fn identity(&self) -> WeylElement {
        self.handle(0)
    }

    /// `s_i` for a 0-based index.
    pub fn simple_reflection(&self, i: usize) -> Result<WeylElement> {
        if i >= self.rank() {
            return Err(Error::IndexOutOfRange { index: i, rank: self.rank() });
        }
        Ok(self.handle(self.left[i][0]))
    }

    pub fn longest_element(&self) -> WeylElement {
        self.handle(self.longest)
    }

    pub fn multiply(&self, a: WeylElement, b: WeylElement) -> WeylElement {
        let mut acc = a.index;
        for &s in &self.data(b).word {
            acc = self.right[s][acc as usize];
        }
        self.handle(acc)
    }

    pub fn inverse(&self, a: WeylElement) -> WeylElement {
        self.handle(self.inverse[a.index()])
    }

    /// `s_i * w`.
    pub fn left_mul(&self, i: usize, w: WeylElement) -> WeylElement {
        self.handle(self.left[i][w.index()])
    }

    /// `w * s_i`.
    pub fn right_mul(&self, w: WeylElement, i: usize) -> WeylElement {
        self.handle(self.right[i][w.index()])
    }

    pub fn from_word(&self, word: &[usize]) -> Result<WeylElement> {
        let mut acc = 0u32;
        for &s in word {
            if s >= self.rank() {
                return Err(Error::IndexOutOfRange { index: s, rank: self.rank() });
            }
            acc = self.right[s][acc as usize];
        }
        Ok(self.handle(acc))
    }

    /// Looks up the element acting by the given matrix.
    pub fn from_action(&self, action: &IntMatrix) -> Option<WeylElement> {
        self.index.get(action).map(|&i| self.handle(i))
    }

    pub fn action(&self, w: WeylElement) -> &IntMatrix {
        &self.data(w).action
    }

    pub fn length(&self, w: WeylElement) -> usize {
        self.data(w).length
    }

    /// Canonical reduced word (0-based letters).
    pub fn reduced_word(&self, w: WeylElement) -> &[usize] {
        &self.data(w).word
    }

    /// Simple reflections occurring in any reduced expression.
    pub fn support(&self, w: WeylElement) -> SimpleSubset {
        self.data(w).support
    }

    /// `{i : l(s_i w) < l(w)}`.
    pub fn left_descents(&self, w: WeylElement) -> SimpleSubset {
        self.data(w).left_descents
    }

    /// `{i : l(w s_i) < l(w)}`.
    pub fn right_descents(&self, w: WeylElement) -> SimpleSubset {
        self.left_descents(self.inverse(w))
    }

    /// `I(w) = {i : l(s_i w) > l(w)}`, the largest `I` with `w` in `W^I`.
    pub fn upper_set(&self, w: WeylElement) -> SimpleSubset {
        self.left_descents(w).complement(self.rank())
    }

    /// Number of positive roots sent to negative roots.
    pub fn inversion_count(&self, w: WeylElement) -> usize {
        let a = self.action(w);
        self.datum
            .positive_roots()
            .iter()
            .filter(|r| a.apply(r).iter().any(|&x| x < 0))
            .count()
    }

    /// Every reduced word of `w`.
    pub fn reduced_words(&self, w: WeylElement) -> Vec<Vec<usize>> {
        if self.length(w) == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for s in self.left_descents(w).iter() {
            for mut tail in self.reduced_words(self.left_mul(s, w)) {
                tail.insert(0, s);
                out.push(tail);
            }
        }
        out
    }

    /// Bruhat order by the descent recursion: for a left descent `s` of `w`,
    /// `x <= w` iff `min(x, sx) <= sw`.
    pub fn bruhat_leq(&self, x: WeylElement, w: WeylElement) -> bool {
        self.bruhat_leq_idx(x.index, w.index)
    }

    fn bruhat_leq_idx(&self, x: u32, w: u32) -> bool {
        if x == w || x == 0 {
            return true;
        }
        let (lx, lw) = (self.elements[x as usize].length, self.elements[w as usize].length);
        if lx >= lw {
            return false;
        }
        if let Some(&hit) = self.bruhat_memo.read().expect("bruhat memo poisoned").get(&(x, w)) {
            return hit;
        }
        let s = self.elements[w as usize]
            .left_descents
            .iter()
            .next()
            .expect("w != e has a descent");
        let sw = self.left[s][w as usize];
        let sx = self.left[s][x as usize];
        let result = if self.elements[sx as usize].length < lx {
            self.bruhat_leq_idx(sx, sw)
        } else {
            self.bruhat_leq_idx(x, sw)
        };
        self.bruhat_memo.write().expect("bruhat memo poisoned").insert((x, w), result);
        result
    }

    /// `{t : x <= t <= w}` in enumeration order.
    pub fn bruhat_interval(&self, x: WeylElement, w: WeylElement) -> Vec<WeylElement> {
        if !self.bruhat_leq(x, w) {
            return Vec::new();
        }
        let (lx, lw) = (self.length(x), self.length(w));
        self.elements()
            .filter(|&t| {
                let lt = self.length(t);
                lt >= lx && lt <= lw && self.bruhat_leq(x, t) && self.bruhat_leq(t, w)
            })
            .collect()
    }

    /// Elements of the parabolic subgroup `W_K`.
    pub fn parabolic_subgroup(&self, k: SimpleSubset) -> Vec<WeylElement> {
        self.elements().filter(|&w| self.support(w).is_subset(k)).collect()
    }

    /// Minimal-length representatives `W^I = {w : l(s_a w) > l(w), a in I}`.
    pub fn kostant_reps(&self, i: SimpleSubset) -> Vec<WeylElement> {
        self.elements().filter(|&w| i.is_subset(self.upper_set(w))).collect()
    }

    /// Root-theoretic test for `w` in `W^I`: `w^{-1} alpha` is positive for
    /// every `alpha` in `I`.
    pub fn is_kostant_rep_by_roots(&self, w: WeylElement, i: SimpleSubset) -> bool {
        let inv = self.action(self.inverse(w));
        i.iter().all(|a| inv.column(a).iter().all(|&x| x >= 0))
    }

    /// Dot action `w . lambda = w(lambda + rho) - rho`.
    pub fn dot_action(&self, w: WeylElement, lam: &Weight) -> Result<Weight> {
        self.datum.check_rank(lam.0.len())?;
        let rho = self.datum.rho();
        let shifted: Vec<BigRational> = lam.0.iter().zip(&rho.0).map(|(a, b)| a + b).collect();
        let moved = self.action(w).apply_rational(&shifted);
        Ok(Weight(moved.iter().zip(&rho.0).map(|(a, b)| a - b).collect()))
    }

    /// Linear action on coweights, `s_i(mu) = mu - <alpha_i, mu> alpha_i^vee`.
    pub fn act_coweight(&self, w: WeylElement, mu: &Coweight) -> Result<Coweight> {
        self.datum.check_rank(mu.0.len())?;
        let c = self.datum.cartan_matrix();
        let d = self.rank();
        let mut v = mu.0.clone();
        for &s in self.reduced_word(w).iter().rev() {
            let p = (0..d).fold(BigRational::zero(), |acc, j| acc + &v[j] * int(c.get(j, s)));
            v[s] -= p;
        }
        Ok(Coweight(v))
    }

    /// Formats `w` as `s1*s2*...`, with `e` for the identity.
    pub fn format(&self, w: WeylElement) -> String {
        format_word(self.reduced_word(w))
    }

    /// Parses the `s<i>*...` grammar (`e` or `1` is the identity).
    pub fn parse_element(&self, text: &str) -> Result<WeylElement> {
        let word = parse_word(text)?;
        self.from_word(&word).map_err(|e| match e {
            Error::IndexOutOfRange { index, rank } => Error::IndexOutOfRange { index: index + 1, rank },
            other => other,
        })
    }

    /// Generator matrix of `s_i` on the root lattice.
    pub fn generator(&self, i: usize) -> &IntMatrix {
        &self.generators[i]
    }
}

fn simple_reflection_matrix(datum: &RootDatum, i: usize) -> IntMatrix {
    let d = datum.rank();
    let mut m = IntMatrix::identity(d);
    for k in 0..d {
        let col: Vec<i64> = (0..d).map(|r| i64::from(r == k)).collect();
        let img = datum.reflect_root(i, &col);
        for (r, &x) in img.iter().enumerate() {
            m.set(r, k, x);
        }
    }
    m
}

/// `s1*s2*...` with 1-based labels; the empty word prints as `e`.
pub fn format_word(word: &[usize]) -> String {
    if word.is_empty() {
        return "e".to_string();
    }
    word.iter().map(|s| format!("s{}", s + 1)).collect::<Vec<_>>().join("*")
}

/// Parses `e`, `1`, or `s<i>(*s<i>)*` into 0-based letters.
pub fn parse_word(text: &str) -> Result<Vec<usize>> {
    let t = text.trim();
    if t == "e" || t == "1" {
        return Ok(Vec::new());
    }
    t.split('*')
        .map(|tok| {
            let tok = tok.trim();
            let digits = tok
                .strip_prefix('s')
                .ok_or_else(|| Error::Parse(format!("expected s<i>, found {tok:?}")))?;
            match digits.parse::<usize>() {
                Ok(i) if i >= 1 => Ok(i - 1),
                _ => Err(Error::Parse(format!("bad reflection index in {tok:?}"))),
            }
        })
        .collect()
}
