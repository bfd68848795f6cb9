//! Actual-dimension bounds for schemes of simple (multiplicity-1) flats.
//!
//! The upper bound comes from repeatedly applying the Castelnuovo
//! inequality with a hyperplane through one flat; the lower bound is an
//! inclusion-exclusion construction that succeeds when every intermediate
//! count stays positive. Where the two meet we know `adim` exactly.

use std::collections::HashMap;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{decimal, polybinom, ExactInt};
use crate::hilbert::{cap_index, s_formula};

/// Upper bound `U(n, s, t)` on the actual dimension of `s` general simple
/// flats in `P^n` in degree `t`.
///
/// Base cases, in order: `t < 0` gives 0; `t = 0` gives 1 only for the
/// empty scheme; no flats gives every form; one flat, points in the plane
/// and lines in `P^3` (Hartshorne-Hirschowitz) are exact at
/// `max(vdim, 0)`. Otherwise peel one flat:
/// `U(n, s, t) = U(n, s-1, t-1) + U(n-1, s-1, t-1)`.
pub fn adim_upper_mult1(n: u32, s: u32, t: i64) -> Result<ExactInt> {
    if n < 2 {
        return Err(Error::AmbientDimension { min: 2, got: n });
    }
    let mut memo = HashMap::new();
    Ok(upper(n, s, t, &mut memo))
}

fn upper(n: u32, s: u32, t: i64, memo: &mut HashMap<(u32, u32, i64), ExactInt>) -> ExactInt {
    let clamp = |v: ExactInt| if v.is_negative() { ExactInt::zero() } else { v };
    if t < 0 {
        return ExactInt::zero();
    }
    if t == 0 {
        return ExactInt::from(u8::from(s == 0));
    }
    if s == 0 {
        return polybinom(t + i64::from(n), n);
    }
    if s == 1 {
        return clamp(s_formula(n, 1, t));
    }
    if n == 2 {
        return clamp(polybinom(t + 2, 2) - s);
    }
    if n == 3 {
        return clamp(s_formula(3, s, t));
    }
    if let Some(v) = memo.get(&(n, s, t)) {
        return v.clone();
    }
    let v = upper(n, s - 1, t - 1, memo) + upper(n - 1, s - 1, t - 1, memo);
    memo.insert((n, s, t), v.clone());
    v
}

/// True when `S(n - 2p, s - p, t) > 0` for every `p` in
/// `1..=cap_index(n, s) - 1`, which guarantees `adim >= vdim` for `s`
/// general simple flats. Vacuously true when the range is empty.
pub fn lower_certificate(n: u32, s: u32, t: i64) -> bool {
    (1..cap_index(n, s)).all(|p| s_formula(n - 2 * p, s - p, t).is_positive())
}

/// Positivity of `S(n - 2p, n + 1 - p, n + k)` for `p = 0..floor(n/2) - 1`,
/// the hypotheses that make the sandwich close on `n + 1` simple flats in
/// degree `n + k`. Holds for every `k >= 3`.
pub fn family_conditions_check(n: u32, k: i64) -> bool {
    (0..n / 2).all(|p| s_formula(n - 2 * p, n + 1 - p, i64::from(n) + k).is_positive())
}

/// Exact actual dimension of `n + 1` general simple flats in degree `n + k`,
/// and hence (through the Veneroni map) of `n + 1` flats of multiplicity
/// `k` in degree `kn + 1`.
pub fn adim_family(n: u32, k: i64) -> Result<ExactInt> {
    if k < 3 {
        return Err(Error::FamilyParameter(k));
    }
    if n < 3 {
        return Err(Error::AmbientDimension { min: 3, got: n });
    }
    Ok(s_formula(n, n + 1, i64::from(n) + k))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DimensionStatus {
    ExactKnown,
    BoundedOnly,
}

/// Everything known about `adim` and `vdim` for `s` simple flats in `P^n`
/// in degree `t`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionReport {
    pub ambient_dim: u32,
    pub count: u32,
    pub degree: i64,
    #[serde(with = "decimal")]
    pub vdim: ExactInt,
    #[serde(with = "decimal")]
    pub adim_upper: ExactInt,
    pub lower_certified: bool,
    #[serde(with = "decimal::option")]
    pub adim_exact: Option<ExactInt>,
    pub status: DimensionStatus,
}

pub fn report_mult1(n: u32, s: u32, t: i64) -> Result<DimensionReport> {
    let vdim = s_formula(n, s, t);
    let adim_upper = adim_upper_mult1(n, s, t)?;
    let lower_certified = lower_certificate(n, s, t);
    let adim_exact =
        (lower_certified && adim_upper == vdim && vdim.is_positive()).then(|| vdim.clone());
    let status = if adim_exact.is_some() {
        DimensionStatus::ExactKnown
    } else {
        DimensionStatus::BoundedOnly
    };
    Ok(DimensionReport {
        ambient_dim: n,
        count: s,
        degree: t,
        vdim,
        adim_upper,
        lower_certified,
        adim_exact,
        status,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> ExactInt {
        ExactInt::from(v)
    }

    #[test]
    fn upper_bound_values() {
        assert_eq!(adim_upper_mult1(4, 5, 7).unwrap(), int(160));
        assert_eq!(adim_upper_mult1(4, 12, 2).unwrap(), int(0));
        assert_eq!(adim_upper_mult1(3, 4, 6).unwrap(), int(56));
        for n in 2..10 {
            assert_eq!(adim_upper_mult1(n, 0, 3).unwrap(), polybinom(3 + i64::from(n), n));
        }
        assert!(adim_upper_mult1(1, 2, 3).is_err());
    }

    #[test]
    fn upper_bound_chain() {
        // Each peel adds the trace bound in P^3: 56 + 38 + 25 + 16, then the
        // single plane in degree 3 contributes 25.
        assert_eq!(s_formula(3, 3, 5), int(38));
        assert_eq!(s_formula(3, 2, 4), int(25));
        assert_eq!(s_formula(3, 1, 3), int(16));
        assert_eq!(adim_upper_mult1(4, 1, 3).unwrap(), int(25));
        assert_eq!(adim_upper_mult1(4, 4, 6).unwrap(), int(160 - 56));
    }

    #[test]
    fn certificates() {
        // Only p = 1 is checked: S(2, 4, 7) = binom(9, 2) - 4 = 32.
        assert_eq!(s_formula(2, 4, 7), int(32));
        assert!(lower_certificate(4, 5, 7));
        assert!(!lower_certificate(4, 12, 2));
        assert!(lower_certificate(3, 4, 6));
    }

    #[test]
    fn family_conditions() {
        assert!(family_conditions_check(4, 3));
        assert!(family_conditions_check(21, 4));
        for n in 2..=40 {
            for k in 3..=6 {
                assert!(family_conditions_check(n, k), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn family_adim() {
        assert_eq!(adim_family(21, 4).unwrap(), int(1_337_982_976));
        assert_eq!(adim_family(4, 3).unwrap(), int(160));
        assert_eq!(adim_family(3, 3).unwrap(), int(56));
        assert_eq!(adim_family(5, 2), Err(Error::FamilyParameter(2)));
        assert!(matches!(adim_family(2, 4), Err(Error::AmbientDimension { .. })));
    }

    #[test]
    fn reports() {
        let r = report_mult1(4, 5, 7).unwrap();
        assert_eq!(
            (r.vdim.clone(), r.adim_upper.clone(), r.lower_certified, r.adim_exact.clone()),
            (int(160), int(160), true, Some(int(160)))
        );
        assert_eq!(r.status, DimensionStatus::ExactKnown);

        let r = report_mult1(4, 12, 2).unwrap();
        assert_eq!(r.vdim, int(9));
        assert_eq!(r.adim_upper, int(0));
        assert!(!r.lower_certified);
        assert_eq!(r.adim_exact, None);
        assert_eq!(r.status, DimensionStatus::BoundedOnly);

        let r = report_mult1(2, 3, 5).unwrap();
        assert_eq!(r.adim_exact, Some(int(18)));
        assert_eq!(r.adim_upper, int(18));
    }

    #[test]
    fn sandwich_closes_on_family() {
        for n in 3..=12u32 {
            for k in 3..=6 {
                let r = report_mult1(n, n + 1, i64::from(n) + k).unwrap();
                assert_eq!(r.status, DimensionStatus::ExactKnown, "n={n} k={k}");
                let expected = s_formula(n, n + 1, i64::from(n) + k);
                assert!(expected.is_positive());
                assert_eq!(r.adim_exact, Some(expected));
            }
        }
    }

    #[test]
    fn upper_bound_grid_properties() {
        for n in 2..=6u32 {
            for s in 0..=8u32 {
                for t in 0..=12 {
                    let u = adim_upper_mult1(n, s, t).unwrap();
                    assert!(!u.is_negative());
                    if s >= 1 {
                        assert!(u <= adim_upper_mult1(n, s - 1, t).unwrap(), "n={n} s={s} t={t}");
                    }
                    if lower_certificate(n, s, t) {
                        let v = s_formula(n, s, t);
                        let floor = if v.is_negative() { int(0) } else { v };
                        assert!(u >= floor, "n={n} s={s} t={t}");
                    }
                }
            }
        }
    }
}
