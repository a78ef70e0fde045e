#![allow(dead_code)]

use std::collections::{BTreeMap, HashSet};
use std::path::PathBuf;

use steinberg_core::{coweight_from_gln, Coweight, SimpleSubset, WeylElement, WeylGroup};

pub fn mu_gln(x: &[i64]) -> Coweight {
    let q: Vec<_> = x.iter().map(|&v| num_rational::BigRational::from_integer(v.into())).collect();
    coweight_from_gln(&q).unwrap()
}

pub const EXAMPLE_A: [i64; 4] = [3, 2, 1, -6];
pub const EXAMPLE_B: [i64; 4] = [2, 1, 0, -3];
pub const EXAMPLE_C: [i64; 4] = [5, 1, -2, -4];

// ---------------------------------------------------------------------------
// Golden listings

/// One parsed listing: entries keyed by `(v, J)` plus the printed count.
pub struct Listing {
    pub entries: BTreeMap<(WeylElement, SimpleSubset), (SimpleSubset, u64)>,
    pub lines: usize,
    pub count: usize,
}

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

/// Golden file names with the source element of each listing.
pub const LISTINGS: [(&str, &str, usize); 10] = [
    ("a3_e.txt", "e", 48),
    ("a3_s1.txt", "s1", 35),
    ("a3_s2.txt", "s2", 33),
    ("a3_s1s2.txt", "s1*s2", 19),
    ("a3_s2s1.txt", "s2*s1", 17),
    ("a3_s1s2s1.txt", "s1*s2*s1", 12),
    ("a3_s3.txt", "s3", 35),
    ("a3_s1s3.txt", "s1*s3", 27),
    ("a3_s2s3.txt", "s2*s3", 17),
    ("a3_s3s2.txt", "s3*s2", 19),
];

fn parse_set(text: &str, rank: usize) -> SimpleSubset {
    SimpleSubset::parse(text, rank).unwrap()
}

pub fn read_listing(g: &WeylGroup, name: &str) -> Listing {
    let text = std::fs::read_to_string(golden_path(name)).unwrap();
    let mut entries = BTreeMap::new();
    let mut lines = 0;
    let mut count = None;
    for raw in text.lines() {
        let line = raw.trim().trim_start_matches("([").trim_start_matches('[');
        if let Some(n) = line.strip_suffix(')') {
            count = Some(n.trim().parse().unwrap());
            continue;
        }
        if line.is_empty() {
            continue;
        }
        let body = line.trim_end_matches(',').trim_end_matches(']').trim_end_matches(']');
        let (v, rest) = body.split_once(", {").unwrap();
        let (i, rest) = rest.split_once("}, {").unwrap();
        let (j, m) = rest.split_once("}, ").unwrap();
        let v = g.parse_element(v).unwrap();
        let key = (v, parse_set(j, g.rank()));
        let prev = entries.insert(key, (parse_set(i, g.rank()), m.parse().unwrap()));
        assert!(prev.is_none(), "duplicate key in {name}: {raw}");
        lines += 1;
    }
    Listing { entries, lines, count: count.expect("listing ends with its count") }
}

// ---------------------------------------------------------------------------
// Bruhat order by subwords of one reduced word

pub fn subword_lower_set(g: &WeylGroup, w: WeylElement) -> HashSet<WeylElement> {
    let word = g.reduced_word(w).to_vec();
    (0u32..(1 << word.len()))
        .map(|mask| {
            let sub: Vec<usize> = (0..word.len()).filter(|k| mask & (1 << k) != 0).map(|k| word[k]).collect();
            g.from_word(&sub).unwrap()
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Kazhdan–Lusztig polynomials through R-polynomials

pub type Poly = Vec<i64>;

fn trim(mut p: Poly) -> Poly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn add_into(acc: &mut Poly, p: &[i64], scale: i64, shift: usize) {
    if acc.len() < p.len() + shift {
        acc.resize(p.len() + shift, 0);
    }
    for (k, c) in p.iter().enumerate() {
        acc[k + shift] += scale * c;
    }
}

fn mul(a: &[i64], b: &[i64]) -> Poly {
    let mut out = vec![0; (a.len() + b.len()).saturating_sub(1)];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

/// `r[w][x] = R_{x,w}`, using the largest left descent at each step.
pub fn r_polynomials(g: &WeylGroup) -> Vec<Vec<Poly>> {
    let n = g.order();
    let mut r: Vec<Vec<Poly>> = Vec::with_capacity(n);
    for w in g.elements() {
        let col = if g.length(w) == 0 {
            (0..n).map(|x| if x == 0 { vec![1] } else { vec![] }).collect()
        } else {
            let s = (0..g.rank()).rev().find(|&s| g.length(g.left_mul(s, w)) < g.length(w)).unwrap();
            let sw = g.left_mul(s, w).index();
            g.elements()
                .map(|x| {
                    let sx = g.left_mul(s, x);
                    if g.length(sx) < g.length(x) {
                        r[sw][sx.index()].clone()
                    } else {
                        let mut acc = Vec::new();
                        add_into(&mut acc, &r[sw][x.index()], 1, 1);
                        add_into(&mut acc, &r[sw][x.index()], -1, 0);
                        add_into(&mut acc, &r[sw][sx.index()], 1, 1);
                        trim(acc)
                    }
                })
                .collect()
        };
        r.push(col);
    }
    r
}

/// `p[w][x] = P_{x,w}` from the inversion formula
/// `q^{l(w)-l(x)} P_{x,w}(q^{-1}) - P_{x,w}(q) = sum_{y != x} R_{x,y} P_{y,w}`,
/// never consulting a Bruhat order.
pub fn kl_oracle(g: &WeylGroup) -> Vec<Vec<Poly>> {
    let r = r_polynomials(g);
    let n = g.order();
    let mut by_length: Vec<WeylElement> = g.elements().collect();
    by_length.sort_by_key(|&x| std::cmp::Reverse(g.length(x)));
    g.elements()
        .map(|w| {
            let lw = g.length(w);
            let mut col: Vec<Poly> = vec![Vec::new(); n];
            col[w.index()] = vec![1];
            for &x in &by_length {
                let lx = g.length(x);
                if lx >= lw {
                    continue;
                }
                let mut q = Vec::new();
                for y in g.elements() {
                    if y != x && !col[y.index()].is_empty() {
                        let term = mul(&r[y.index()][x.index()], &col[y.index()]);
                        add_into(&mut q, &term, 1, 0);
                    }
                }
                let bound = (lw - lx - 1) / 2;
                let low: Poly = q.iter().take(bound + 1).map(|c| -c).collect();
                col[x.index()] = trim(low);
            }
            col
        })
        .collect()
}
