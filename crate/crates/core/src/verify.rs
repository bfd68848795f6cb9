//! Headless runner for the identity grids and golden values.
//!
//! Every check returns the first counterexample it finds, so a failing
//! line carries enough context to reproduce it.

use std::time::Instant;

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bounds::{
    adim_family, adim_upper_mult1, family_conditions_check, lower_certificate, report_mult1,
    DimensionStatus,
};
use crate::classify::{scan, Verdict};
use crate::exactmath::{polybinom, ExactInt};
use crate::hilbert::{conditions_fat_flat, s_formula, vdim_recursive, vdim_reference, FatFlatScheme};
use crate::oracle::{adim_rank_oracle, OracleConfig};
use crate::veneroni::{family_source, veneroni_pullback, LinearSystem};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Largest `n` and `s` in the recursion-versus-closed-form grid. The
    /// closed-form recurrence grid uses `max(grid_max, 12)`.
    pub grid_max: u32,
    /// Run the probabilistic rank-oracle spot checks.
    pub oracle: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            grid_max: 9,
            oracle: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub millis: u128,
}

type Check = fn(&VerifyConfig) -> Result<String, String>;

const CHECKS: &[(&str, Check)] = &[
    ("polybinom-pascal", check_pascal),
    ("sformula-recurrence", check_recurrence),
    ("recursion-equals-closed-form", check_equivalence),
    ("single-flat-conditions", check_single_flat),
    ("peel-order-invariance", check_peel_order),
    ("fat-flat-degree-one", check_degree_one),
    ("vdim-polynomial-in-t", check_polynomiality),
    ("golden-closed-form", check_golden_closed_form),
    ("golden-recursion", check_golden_recursion),
    ("golden-large-scale", check_golden_large),
    ("sandwich", check_sandwich),
    ("upper-bound-grid", check_upper_bound_grid),
    ("family-conditions", check_family_conditions),
    ("veneroni", check_veneroni),
    ("scan-tables", check_scans),
    ("oracle-spot-checks", check_oracle),
];

/// Names of every check, in execution order.
pub fn check_names() -> impl Iterator<Item = &'static str> {
    CHECKS.iter().map(|(name, _)| *name)
}

pub fn run_all(cfg: &VerifyConfig) -> Vec<CheckOutcome> {
    CHECKS
        .iter()
        .map(|&(name, check)| {
            let start = Instant::now();
            let result = check(cfg);
            let millis = start.elapsed().as_millis();
            match result {
                Ok(detail) => CheckOutcome {
                    name,
                    passed: true,
                    detail,
                    millis,
                },
                Err(detail) => CheckOutcome {
                    name,
                    passed: false,
                    detail,
                    millis,
                },
            }
        })
        .collect()
}

/// The published verdict for row `n` of the `k` scan, for `k = 3..=6` and
/// `n = 3..=50`.
pub fn published_verdict(k: i64, n: u32) -> Option<Verdict> {
    use Verdict::{MissingExpected as M, Unexpected as U};
    if !(3..=50).contains(&n) {
        return None;
    }
    let v = match k {
        3 => U,
        4 if n <= 20 => U,
        4 => M,
        5 if n <= 17 || n >= 42 => U,
        5 => M,
        6 if n <= 15 || n >= 37 => U,
        6 => M,
        _ => return None,
    };
    Some(v)
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(what: String, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, want {want:?}"))
    }
}

fn int(v: i64) -> ExactInt {
    ExactInt::from(v)
}

fn vdim(n: u32, mults: &[u32], t: i64) -> ExactInt {
    vdim_recursive(&FatFlatScheme::new(n, mults.iter().copied()).expect("n >= 2"), t)
}

fn check_pascal(_: &VerifyConfig) -> Result<String, String> {
    let mut count = 0;
    for x in -20..=60 {
        for m in 1..=30 {
            expect_eq(
                format!("binom({x},{m})"),
                polybinom(x, m),
                polybinom(x - 1, m) + polybinom(x - 1, m - 1),
            )?;
            if (0..i64::from(m)).contains(&x) {
                expect_eq(format!("binom({x},{m})"), polybinom(x, m), int(0))?;
            }
            count += 1;
        }
    }
    Ok(format!("{count} points"))
}

fn check_recurrence(cfg: &VerifyConfig) -> Result<String, String> {
    let max = cfg.grid_max.max(12);
    let mut count = 0;
    for n in 2..=max {
        for s in 1..=max {
            for t in -5..=30 {
                expect_eq(
                    format!("S({n},{s},{t})"),
                    s_formula(n, s, t),
                    s_formula(n, s - 1, t - 1) + s_formula(n - 1, s - 1, t - 1),
                )?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} triples"))
}

fn check_equivalence(cfg: &VerifyConfig) -> Result<String, String> {
    let max = cfg.grid_max.max(2);
    let mut count = 0;
    for n in 2..=max {
        for s in 0..=max {
            let scheme = FatFlatScheme::uniform(n, 1, s as usize).expect("n >= 2");
            for t in 0..=20 {
                expect_eq(
                    format!("vdim_{n}({s} flats, {t})"),
                    vdim_recursive(&scheme, t),
                    s_formula(n, s, t),
                )?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} triples"))
}

fn check_single_flat(_: &VerifyConfig) -> Result<String, String> {
    for n in 2..=8u32 {
        for m in 1..=5u32 {
            for t in 0..=15 {
                let conds = conditions_fat_flat(n, 2, m, t).map_err(|e| e.to_string())?;
                expect_eq(
                    format!("vdim_{n}({m}Π, {t})"),
                    vdim(n, &[m], t),
                    polybinom(t + i64::from(n), n) - conds,
                )?;
            }
        }
    }
    Ok("n<=8, m<=5, t<=15".into())
}

/// Every ordered multiplicity list of length `0..=max_len` with entries
/// in `1..=max_mult`.
fn ordered_lists(max_len: usize, max_mult: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    let mut frontier = vec![vec![]];
    for _ in 0..max_len {
        frontier = frontier
            .iter()
            .flat_map(|l: &Vec<u32>| {
                (1..=max_mult).map(move |m| {
                    let mut next = l.clone();
                    next.push(m);
                    next
                })
            })
            .collect();
        out.extend(frontier.iter().cloned());
    }
    out
}

fn check_peel_order(_: &VerifyConfig) -> Result<String, String> {
    let mut count = 0;
    for mults in ordered_lists(4, 3) {
        for n in 2..=5u32 {
            for t in 0..=12 {
                let canonical = vdim(n, &mults, t);
                let first = vdim_reference(n, &mults, t, &mut |_| 0);
                let largest = vdim_reference(n, &mults, t, &mut |l: &[u32]| {
                    (0..l.len()).max_by_key(|&i| (l[i], i)).unwrap()
                });
                expect_eq(format!("first-index peel {mults:?} n={n} t={t}"), first, canonical.clone())?;
                expect_eq(format!("largest peel {mults:?} n={n} t={t}"), largest, canonical)?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} schemes"))
}

fn check_degree_one(_: &VerifyConfig) -> Result<String, String> {
    for n in 3..=30u32 {
        for k in 3..=n {
            expect_eq(format!("vdim_{n}({k}Π, 1)"), vdim(n, &[k], 1), int(0))?;
        }
    }
    Ok("3<=k<=n<=30".into())
}

fn check_polynomiality(_: &VerifyConfig) -> Result<String, String> {
    let mut count = 0;
    for n in 2..=5u32 {
        for mults in ordered_lists(3, 3).into_iter().filter(|l| l.is_sorted_by(|a, b| a >= b)) {
            let order = n as usize + 1;
            let mut values: Vec<ExactInt> =
                (0..=(order as i64 + 5)).map(|t| vdim(n, &mults, t)).collect();
            for _ in 0..order {
                values = values.windows(2).map(|w| &w[1] - &w[0]).collect();
            }
            if let Some(v) = values.iter().find(|v| !v.is_zero()) {
                return Err(format!("order-{order} difference of vdim_{n}({mults:?}, t) is {v}"));
            }
            count += 1;
        }
    }
    Ok(format!("{count} schemes"))
}

fn check_golden_closed_form(_: &VerifyConfig) -> Result<String, String> {
    for (n, s, t, want) in [(4, 5, 7, 160), (3, 4, 6, 56), (2, 11, 2, -5), (4, 12, 2, 9)] {
        expect_eq(format!("S({n},{s},{t})"), s_formula(n, s, t), int(want))?;
    }
    Ok("4 values".into())
}

fn check_golden_recursion(_: &VerifyConfig) -> Result<String, String> {
    let cases: &[(u32, u32, usize, i64, i64)] = &[
        (4, 3, 5, 13, 135),
        (3, 3, 4, 10, 54),
        (3, 3, 3, 7, 0),
        (3, 3, 2, 4, -9),
        (2, 3, 3, 7, 18),
        (2, 3, 2, 4, 3),
        (2, 3, 1, 1, -3),
        (6, 3, 7, 19, 0),
        (6, 3, 6, 16, -729),
        (6, 3, 5, 13, -243),
        (6, 3, 4, 10, 0),
        (6, 3, 3, 7, 0),
        (6, 3, 2, 4, 0),
    ];
    for &(n, m, count, t, want) in cases {
        let scheme = FatFlatScheme::uniform(n, m, count).expect("n >= 2");
        expect_eq(
            format!("vdim_{n}({count} x {m}Π, {t})"),
            vdim_recursive(&scheme, t),
            int(want),
        )?;
    }
    Ok(format!("{} values", cases.len()))
}

fn check_golden_large(_: &VerifyConfig) -> Result<String, String> {
    let scheme = FatFlatScheme::uniform(21, 4, 22).expect("n >= 2");
    for (t, want) in [
        (85, "12094627905536"),
        (86, "-157230162771968"),
        (87, "96757023244288"),
        (88, "2366593604971209"),
    ] {
        let want: ExactInt = want.parse().expect("literal");
        expect_eq(format!("vdim_21(22 x 4Π, {t})"), vdim_recursive(&scheme, t), want)?;
    }
    expect_eq(
        "adim_family(21, 4)".into(),
        adim_family(21, 4).map_err(|e| e.to_string())?,
        int(1_337_982_976),
    )?;
    Ok("5 values".into())
}

fn check_sandwich(_: &VerifyConfig) -> Result<String, String> {
    let r = report_mult1(4, 5, 7).map_err(|e| e.to_string())?;
    expect_eq(
        "report(4,5,7)".into(),
        (r.vdim, r.adim_upper, r.lower_certified, r.adim_exact),
        (int(160), int(160), true, Some(int(160))),
    )?;
    let r = report_mult1(4, 12, 2).map_err(|e| e.to_string())?;
    expect_eq(
        "report(4,12,2)".into(),
        (r.adim_upper, r.lower_certified),
        (int(0), false),
    )?;
    for n in 3..=12u32 {
        for k in 3..=6 {
            let t = i64::from(n) + k;
            let r = report_mult1(n, n + 1, t).map_err(|e| e.to_string())?;
            let want = s_formula(n, n + 1, t);
            if !want.is_positive() {
                return Err(format!("S({n},{},{t}) = {want} not positive", n + 1));
            }
            expect_eq(
                format!("report({n},{},{t})", n + 1),
                (r.status, r.adim_exact),
                (DimensionStatus::ExactKnown, Some(want)),
            )?;
        }
    }
    Ok("family closes for 3<=n<=12, 3<=k<=6".into())
}

fn check_upper_bound_grid(_: &VerifyConfig) -> Result<String, String> {
    for n in 2..=6u32 {
        for s in 0..=8u32 {
            for t in 0..=12 {
                let u = adim_upper_mult1(n, s, t).map_err(|e| e.to_string())?;
                if u.is_negative() {
                    return Err(format!("U({n},{s},{t}) = {u} negative"));
                }
                if s >= 1 {
                    let prev = adim_upper_mult1(n, s - 1, t).map_err(|e| e.to_string())?;
                    if u > prev {
                        return Err(format!("U({n},{s},{t}) = {u} > U({n},{},{t}) = {prev}", s - 1));
                    }
                }
                if lower_certificate(n, s, t) {
                    let v = s_formula(n, s, t);
                    if v.is_positive() && u < v {
                        return Err(format!("U({n},{s},{t}) = {u} < S = {v} while certified"));
                    }
                }
            }
        }
    }
    Ok("n<=6, s<=8, t<=12".into())
}

fn check_family_conditions(_: &VerifyConfig) -> Result<String, String> {
    for n in 2..=40u32 {
        for k in 3..=6 {
            if !family_conditions_check(n, k) {
                return Err(format!("family conditions fail at n={n} k={k}"));
            }
        }
    }
    Ok("2<=n<=40, 3<=k<=6".into())
}

fn check_veneroni(_: &VerifyConfig) -> Result<String, String> {
    let pull = |sys: &LinearSystem| veneroni_pullback(sys).map_err(|e| e.to_string());
    let sys = |n: u32, d: i64, m: Vec<i64>| LinearSystem::new(n, d, m).map_err(|e| e.to_string());
    expect_eq("v(4,7,1^5)".into(), pull(&sys(4, 7, vec![1; 5])?)?, sys(4, 13, vec![3; 5])?)?;
    expect_eq("v(21,25,1^22)".into(), pull(&sys(21, 25, vec![1; 22])?)?, sys(21, 85, vec![4; 22])?)?;
    for n in 2..=30u32 {
        for k in 0..=8 {
            let image = pull(&family_source(n, k).map_err(|e| e.to_string())?)?;
            expect_eq(
                format!("family image n={n} k={k}"),
                image,
                sys(n, k * i64::from(n) + 1, vec![k; n as usize + 1])?,
            )?;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..500 {
        let n = rng.gen_range(2..=10u32);
        let s = sys(
            n,
            rng.gen_range(-5..=20),
            (0..=n).map(|_| rng.gen_range(-5..=20)).collect(),
        )?;
        expect_eq(format!("involution on {s}"), pull(&pull(&s)?)?, s.clone())?;
    }
    Ok("goldens, family identity, 500 involutions".into())
}

fn check_scans(_: &VerifyConfig) -> Result<String, String> {
    for k in 3..=6 {
        let rows = scan(k, 3, 50).map_err(|e| e.to_string())?;
        for r in &rows {
            let want = published_verdict(k, r.n).expect("in table");
            expect_eq(format!("verdict k={k} n={}", r.n), r.verdict, want)?;
            if k == 3 && r.n >= 6 && r.vdim.is_positive() {
                return Err(format!("vdim at k=3 n={} is {} > 0", r.n, r.vdim));
            }
        }
    }
    Ok("k=3..6, n=3..50".into())
}

fn check_oracle(cfg: &VerifyConfig) -> Result<String, String> {
    if !cfg.oracle {
        return Ok("skipped".into());
    }
    let cases: &[(u32, &[u32], i64, i64)] = &[
        (4, &[1; 5], 7, 160),
        (4, &[1; 12], 2, 0),
        (3, &[1, 1], 2, 4),
        // The doubled line through two points is a conic singular at both.
        (2, &[2, 2], 2, 1),
        (2, &[2], 2, 3),
    ];
    for &(n, mults, t, want) in cases {
        for seed in 0..5 {
            let got = adim_rank_oracle(n, mults, t, &OracleConfig::with_seed(seed))
                .map_err(|e| e.to_string())?;
            expect_eq(format!("oracle({n}, {mults:?}, {t}) seed {seed}"), got, int(want))?;
        }
    }
    Ok(format!("{} cases x 5 seeds", cases.len()))
}
