//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits nonzero if any failed.

mod common;

use std::collections::{BTreeSet, HashSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use steinberg_core::period_domain::{self, ChainComplexSpec, HomologyReport};
use steinberg_core::root_datum::recenter_gln;
use steinberg_core::{coweight_from_gln, Coweight, JhContext, JhFactor, KlTable, SimpleSubset, WeylElement, WeylGroup};

use common::*;

fn a3() -> Arc<WeylGroup> {
    Arc::new(WeylGroup::from_label("A3").unwrap())
}

fn subset(ix: &[usize]) -> SimpleSubset {
    SimpleSubset::from_indices(ix.iter().map(|i| i - 1))
}

fn names(g: &WeylGroup, ws: &[WeylElement]) -> Vec<String> {
    ws.iter().map(|&w| g.format(w)).collect()
}

// Criterion 1 -----------------------------------------------------------------

fn factor_tables() {
    let g = a3();
    let ctx = JhContext::for_group(g.clone());
    for (file, source, count) in LISTINGS {
        let listing = read_listing(&g, file);
        assert_eq!(listing.count, count, "{file}: printed count");
        assert_eq!(listing.lines, count, "{file}: number of listed entries");
        let w = g.parse_element(source).unwrap();
        let table = ctx.jh_factors(w).unwrap();
        assert_eq!(table.count(), count, "count for {source}");
        let ours: BTreeSet<_> = table.entries.iter().map(|(f, m)| ((f.v, f.j), (f.i, *m))).collect();
        let theirs: BTreeSet<_> = listing.entries.iter().map(|(k, v)| (*k, *v)).collect();
        assert_eq!(ours, theirs, "entries for {source}");
    }
}

// Criterion 2 -----------------------------------------------------------------

/// `w` acting on a GL_4 tuple, `s_i` swapping positions `i` and `i + 1`.
fn permute(g: &WeylGroup, w: WeylElement, x: &[i64]) -> Vec<i64> {
    let mut y = x.to_vec();
    for &s in g.reduced_word(w).iter().rev() {
        y.swap(s, s + 1);
    }
    y
}

fn omega_regimes() {
    let g = a3();
    let expected: [(&[i64; 4], &[&str]); 3] = [
        (&EXAMPLE_A, &["e", "s1", "s2", "s1*s2", "s2*s1", "s1*s2*s1"]),
        (&EXAMPLE_B, &["e", "s1", "s2", "s2*s1"]),
        (&EXAMPLE_C, &["e", "s1", "s2", "s3", "s1*s3", "s2*s3"]),
    ];
    for (x, want) in expected {
        let om = period_domain::omega(&g, &mu_gln(x), SimpleSubset::empty()).unwrap();
        assert_eq!(names(&g, &om.elements), want, "Omega for {x:?}");

        let mut brute = Vec::new();
        let mut tuples = HashSet::new();
        for w in g.elements() {
            let y = permute(&g, w, x);
            assert!(tuples.insert(y.clone()), "permutations of {x:?} are distinct");
            let positive = (1..4).all(|k| y[..k].iter().sum::<i64>() > 0);
            if positive {
                brute.push(w);
            }
            let moved = g.act_coweight(w, &mu_gln(x)).unwrap();
            assert_eq!(moved, mu_gln(&y), "w mu as a permuted tuple");
        }
        assert_eq!(tuples.len(), 24);
        assert_eq!(brute, om.elements, "partial-sum test for {x:?}");
    }
}

// Criterion 3 -----------------------------------------------------------------

fn complex(g: &WeylGroup, x: &[i64]) -> ChainComplexSpec {
    period_domain::build_complex(g, &mu_gln(x)).unwrap()
}

const TYPES_A: [&str; 8] = [
    "({2},{2,1},{1,1},{1})",
    "({2},{1,2},{1,1},{1})",
    "({1},{1,1},{1,1},{1})",
    "({1},{1,1},{1,0},{0})",
    "({1},{1,1},{0,1},{0})",
    "({1},{1,0},{0,0},{0})",
    "({1},{0,1},{0,0},{0})",
    "({1},{0,0},{0,0},{0})",
];

const TYPES_B: [&str; 7] = [
    "({2},{2,1},{1})",
    "({2},{1,2},{1})",
    "({1},{1,1},{1})",
    "({1},{1,1},{0})",
    "({1},{1,0},{0})",
    "({1},{0,1},{0})",
    "({1},{0,0},{0})",
];

const TYPES_C: [&str; 12] = [
    "({2},{2,1,2},{2,1})",
    "({2},{1,2,1},{1,1})",
    "({1},{1,1,1},{1,1})",
    "({1},{1,1,1},{1,0})",
    "({1},{1,0,1},{1,0})",
    "({1},{0,1,1},{0,1})",
    "({1},{1,1,0},{0,0})",
    "({1},{0,1,1},{0,0})",
    "({1},{1,0,0},{0,0})",
    "({1},{0,1,0},{0,0})",
    "({1},{0,0,1},{0,0})",
    "({1},{0,0,0},{0,0})",
];

fn distribution_types() {
    let g = a3();
    let ctx = JhContext::for_group(g.clone());
    let bottom_keys: BTreeSet<JhFactor> =
        ctx.jh_factors(g.identity()).unwrap().entries.into_iter().map(|(f, _)| f).collect();
    for (x, want) in [(&EXAMPLE_A, &TYPES_A[..]), (&EXAMPLE_B, &TYPES_B[..]), (&EXAMPLE_C, &TYPES_C[..])] {
        let types = period_domain::distribution_types(&ctx, &complex(&g, x)).unwrap();
        let keys: BTreeSet<JhFactor> = types.iter().map(|d| d.factor).collect();
        assert_eq!(keys, bottom_keys, "factors of C_* for {x:?}");
        let shapes: BTreeSet<String> = types.iter().map(|d| d.to_string()).collect();
        let want: BTreeSet<String> = want.iter().map(|s| s.to_string()).collect();
        assert_eq!(shapes, want, "distribution types for {x:?}");
    }
}

// Criterion 4 -----------------------------------------------------------------

type Expected = &'static [(&'static str, &'static [usize], &'static [usize])];

type HomologyCase = (&'static [i64; 4], &'static [(i64, Expected)]);

/// `(v, I, J)` with `v` read left to right as a product of simple reflections.
const H3_AB: Expected = &[("e", &[1, 2, 3], &[]), ("s3", &[1, 2], &[]), ("s2*s3", &[1, 3], &[3]), ("s1*s2*s3", &[2, 3], &[2, 3])];

const H2_B: Expected = &[
    ("s1*s2", &[2, 3], &[]),
    ("s1*s2*s3", &[2, 3], &[]),
    ("s3*s1*s2", &[2], &[]),
    ("s1*s2*s3*s2", &[2], &[]),
    ("s2*s3*s1*s2", &[1, 3], &[1, 3]),
    ("s2*s3*s1*s2", &[1, 3], &[3]),
    ("s1*s2*s3*s1*s2", &[3], &[3]),
];

const H3_C: Expected = &[("e", &[1, 2, 3], &[])];

const H2_C: Expected = &[
    ("s1*s2", &[2, 3], &[]),
    ("s2*s1", &[1, 3], &[]),
    ("s3*s2", &[1, 2], &[]),
    ("s1*s2*s1", &[3], &[]),
    ("s3*s2*s1", &[1, 2], &[]),
    ("s3*s2*s1", &[1, 2], &[2]),
    ("s3*s1*s2", &[2], &[]),
    ("s2*s3*s1*s2", &[1, 3], &[1, 3]),
    ("s2*s3*s1*s2", &[1, 3], &[1]),
    ("s3*s1*s2*s1", &[2], &[2]),
    ("s3*s1*s2*s1", &[2], &[]),
    ("s2*s3*s1*s2*s1", &[1], &[1]),
];

fn expected_set(g: &WeylGroup, list: Expected) -> BTreeSet<JhFactor> {
    list.iter()
        .map(|&(v, i, j)| {
            let v = g.parse_element(v).unwrap();
            assert_eq!(g.upper_set(v), subset(i), "I({v:?}) as printed");
            JhFactor { v, i: subset(i), j: subset(j) }
        })
        .collect()
}

fn check_homology(g: &WeylGroup, report: &HomologyReport, want: &[(i64, Expected)]) {
    assert!(report.all_pinned(), "undetermined factors: {:?}", report.undetermined().map(|f| f.factor()).collect::<Vec<_>>());
    for summary in report.by_degree() {
        let expected = want.iter().find(|(d, _)| *d == summary.degree).map_or_else(BTreeSet::new, |(_, l)| expected_set(g, l));
        let got: BTreeSet<JhFactor> = summary.entries.iter().map(|(f, _)| *f).collect();
        assert_eq!(got, expected, "H_{}", summary.degree);
        assert!(summary.entries.iter().all(|(_, h)| h.lo == 1), "multiplicity one in H_{}", summary.degree);
    }
}

fn homology() {
    let g = a3();
    let ctx = JhContext::for_group(g.clone());
    let cases: [HomologyCase; 3] = [
        (&EXAMPLE_A, &[(3, H3_AB)]),
        (&EXAMPLE_B, &[(3, H3_AB), (2, H2_B)]),
        (&EXAMPLE_C, &[(3, H3_C), (2, H2_C)]),
    ];
    for (x, want) in cases {
        let report = period_domain::homology_bounds(&ctx, &complex(&g, x)).unwrap();
        check_homology(&g, &report, want);
    }
}

// Criterion 5 -----------------------------------------------------------------

fn kl_properties() {
    for label in ["A2", "A3", "B2"] {
        let g = Arc::new(WeylGroup::from_label(label).unwrap());
        let table = KlTable::new(g.clone());
        let oracle = kl_oracle(&g);
        for w in g.elements() {
            let below = subword_lower_set(&g, w);
            for x in g.elements() {
                let p = table.kl_polynomial(x, w).unwrap();
                assert_eq!(p.coeffs(), &oracle[w.index()][x.index()][..], "{label}: P_{{{x:?},{w:?}}} vs oracle");
                if x == w {
                    assert_eq!(p.coeffs(), [1]);
                }
                assert_eq!(p.is_zero(), !below.contains(&x), "{label}: support of P_{{{x:?},{w:?}}}");
                if !p.is_zero() {
                    assert_eq!(p.coeff(0), 1, "constant term");
                    if x != w {
                        let bound = (g.length(w) - g.length(x) - 1) / 2;
                        assert!(p.degree().unwrap() <= bound, "degree bound");
                    }
                }
                let inv = table.kl_polynomial(g.inverse(x), g.inverse(w)).unwrap();
                assert_eq!(p, inv, "inversion symmetry");
                if label == "A2" && !p.is_zero() {
                    assert_eq!(p.coeffs(), [1]);
                }
            }
        }
    }
}

// Criterion 6 -----------------------------------------------------------------

fn multiplicity_oracle() {
    let g = a3();
    let ctx = JhContext::for_group(g.clone());
    for source in ["e", "s1", "s3", "s1*s3"] {
        let w = g.parse_element(source).unwrap();
        for v in g.elements() {
            for j in g.upper_set(v).subsets() {
                let fast = ctx.jh_multiplicity(w, v, j).unwrap();
                let slow = ctx.jh_multiplicity_oracle(w, v, j).unwrap();
                assert_eq!(fast, slow, "w = {source}, v = {v:?}, J = {j}");
            }
        }
    }
}

// Criterion 7 -----------------------------------------------------------------

fn random_dominant(rng: &mut ChaCha8Rng) -> Coweight {
    let mut x: Vec<BigRational> = Vec::new();
    let mut cur = BigRational::from_integer(BigInt::from(rng.gen_range(-20..20)));
    for _ in 0..4 {
        x.push(cur.clone());
        let step = BigRational::new(BigInt::from(rng.gen_range(1..40)), BigInt::from(rng.gen_range(1..9)));
        cur -= step;
    }
    coweight_from_gln(&recenter_gln(&x)).unwrap()
}

fn structural_invariants() {
    let g = a3();
    let mut mus: Vec<Coweight> = [EXAMPLE_A, EXAMPLE_B, EXAMPLE_C].iter().map(|x| mu_gln(x)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    mus.extend((0..100).map(|_| random_dominant(&mut rng)));
    let e = SimpleSubset::empty();
    for mu in &mus {
        let base = period_domain::omega(&g, mu, e).unwrap();
        for &w in &base.elements {
            for v in g.elements() {
                if g.bruhat_leq(v, w) {
                    assert!(base.contains(v), "lower closure at {v:?} <= {w:?} for {mu}");
                }
            }
        }
        for i in g.simple_roots().subsets() {
            let om = period_domain::omega(&g, mu, i).unwrap();
            assert!(om.contains(g.identity()), "e in Omega_{i}");
            for &w in &om.elements {
                if i.is_subset(g.upper_set(w)) {
                    assert!(base.contains(w), "W^I ∩ Omega_I ⊆ Omega for I = {i}, w = {w:?}, mu = {mu}");
                }
            }
        }
    }
}

// Criterion 8 -----------------------------------------------------------------

fn bottom_factor() {
    let g = a3();
    let ctx = JhContext::for_group(g.clone());
    let steinberg = JhFactor { v: g.identity(), i: g.simple_roots(), j: SimpleSubset::empty() };
    for x in [&EXAMPLE_A, &EXAMPLE_B, &EXAMPLE_C] {
        let report = period_domain::homology_bounds(&ctx, &complex(&g, x)).unwrap();
        let bottoms: Vec<_> = report.factors.iter().filter(|f| f.dist.is_bottom()).collect();
        assert!(!bottoms.is_empty(), "some factor has type (1,0,...,0)");
        assert!(bottoms.iter().any(|f| f.factor() == steinberg), "v^G_B(λ) has type (1,0,...,0)");
        for f in bottoms {
            assert_eq!(f.homology[0].value(), Some(1), "h at degree i0 for {:?}", f.factor());
        }
    }
}

// -----------------------------------------------------------------------------

fn run(index: usize, name: &str, budget: Duration, f: fn()) -> bool {
    let start = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(f));
    let elapsed = start.elapsed();
    let ok = outcome.is_ok() && elapsed <= budget;
    let note = match (&outcome, elapsed <= budget) {
        (Err(_), _) => " (assertion failed, see above)".to_string(),
        (Ok(()), false) => format!(" (over budget {budget:?})"),
        _ => String::new(),
    };
    println!("criterion {index}: {} {name} [{:.2?}]{note}", if ok { "PASS" } else { "FAIL" }, elapsed);
    ok
}

fn main() {
    let criteria: [(&str, u64, fn()); 8] = [
        ("Jordan-Hölder tables for A3", 10, factor_tables),
        ("Omega_emptyset for the three GL_4 regimes", 1, omega_regimes),
        ("distribution types of the three examples", 10, distribution_types),
        ("homology pinned and equal to the three reference results", 10, homology),
        ("Kazhdan-Lusztig properties and R-polynomial oracle on A2, A3, B2", 30, kl_properties),
        ("multiplicity formula against its unsimplified sum", 30, multiplicity_oracle),
        ("Omega structural invariants, fixed and random mu", 10, structural_invariants),
        ("bottom distribution type pinned at degree i0", 1, bottom_factor),
    ];
    let mut failed = 0;
    for (k, (name, secs, f)) in criteria.into_iter().enumerate() {
        if !run(k + 1, name, Duration::from_secs(secs), f) {
            failed += 1;
        }
    }
    println!("{} of 8 criteria passed", 8 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
