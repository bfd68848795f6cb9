//! Virtual dimensions of schemes supported on general codimension-2 flats.
//!
//! Two independent engines live here:
//!
//! * [`s_formula`], the inclusion-exclusion count over all intersections of
//!   `s` simple flats, and
//! * [`vdim_recursive`], which peels one flat at a time with a hyperplane
//!   through it. Peeling flat `i` of multiplicity `m` splits the scheme into
//!   the residual (multiplicity `m - 1`, degree `t - 1`) and the trace in the
//!   hyperplane with flat `i` removed as a fixed component (ambient dimension
//!   `n - 1`, degree `t - m`). The recursion bottoms out at the empty scheme
//!   and at points in the plane.
//!
//! All values are evaluations of polynomials in `t`, so negative degrees are
//! legal arguments.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{polybinom, ExactInt};

/// `X = m_1 Π_1 + ... + m_s Π_s` in `P^n`.
///
/// Multiplicities are kept sorted in non-increasing order with zeros
/// dropped, so two schemes with the same multiset compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FatFlatScheme {
    ambient_dim: u32,
    multiplicities: Vec<u32>,
}

impl FatFlatScheme {
    pub fn new(ambient_dim: u32, multiplicities: impl IntoIterator<Item = u32>) -> Result<Self> {
        if ambient_dim < 2 {
            return Err(Error::AmbientDimension {
                min: 2,
                got: ambient_dim,
            });
        }
        let mut multiplicities: Vec<u32> =
            multiplicities.into_iter().filter(|&m| m > 0).collect();
        multiplicities.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self {
            ambient_dim,
            multiplicities,
        })
    }

    /// `count` flats, each of multiplicity `mult`.
    pub fn uniform(ambient_dim: u32, mult: u32, count: usize) -> Result<Self> {
        Self::new(ambient_dim, std::iter::repeat_n(mult, count))
    }

    pub fn ambient_dim(&self) -> u32 {
        self.ambient_dim
    }

    /// Multiplicities in non-increasing order.
    pub fn multiplicities(&self) -> &[u32] {
        &self.multiplicities
    }

    pub fn flat_count(&self) -> usize {
        self.multiplicities.len()
    }

    pub fn is_empty(&self) -> bool {
        self.multiplicities.is_empty()
    }
}

/// Upper summation index `min(floor(n/2), s)` of the inclusion-exclusion
/// sum: deeper intersections of flats are empty.
pub fn cap_index(n: u32, s: u32) -> u32 {
    (n / 2).min(s)
}

/// Inclusion-exclusion count for `s` general simple flats in `P^n`:
///
/// `S(n, s, t) = sum_{i=0}^{N(n,s)} (-1)^i binom(s, i) binom(t + n - 2i, n - 2i)`,
/// where `N(n, s)` is [`cap_index`]. Total in `n`; the recursion identity
/// `S(n,s,t) = S(n,s-1,t-1) + S(n-1,s-1,t-1)` holds for `n >= 2`.
pub fn s_formula(n: u32, s: u32, t: i64) -> ExactInt {
    let mut total = ExactInt::zero();
    for i in 0..=cap_index(n, s) {
        let dim = n - 2 * i;
        let term = polybinom(i64::from(s), i) * polybinom(t + i64::from(dim), dim);
        if i % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Number of conditions imposed on degree-`t` forms in `P^n` by vanishing
/// to order `m` along a linear subspace of codimension `k`:
///
/// `c(n, k, m, t) = sum_{i=0}^{m-1} binom(i + k - 1, k - 1) binom(t - i + n - k, n - k)`.
///
/// This is the Hilbert polynomial of the fat subspace; it agrees with the
/// Hilbert function only for `t >= m`.
pub fn conditions_fat_flat(n: u32, k: u32, m: u32, t: i64) -> Result<ExactInt> {
    if n < 2 {
        return Err(Error::AmbientDimension { min: 2, got: n });
    }
    if k < 1 || k > n {
        return Err(Error::Codimension {
            codim: k,
            ambient: n,
        });
    }
    if m < 1 {
        return Err(Error::Multiplicity(i64::from(m)));
    }
    let rest = n - k;
    Ok((0..m)
        .map(|i| {
            polybinom(i64::from(i + k - 1), k - 1) * polybinom(t - i64::from(i) + i64::from(rest), rest)
        })
        .sum())
}

type Table = HashMap<(u32, i64), HashMap<Vec<u32>, ExactInt>>;

/// Cache for [`VdimMemo::vdim`], keyed by `(n, t)` and then by the
/// canonical multiplicity list.
#[derive(Debug, Default)]
pub struct VdimMemo {
    table: Mutex<Table>,
}

impl VdimMemo {
    pub fn new() -> Self {
        Self::default()
    }

    /// Process-wide instance used by [`vdim_recursive`].
    pub fn global() -> &'static VdimMemo {
        static GLOBAL: OnceLock<VdimMemo> = OnceLock::new();
        GLOBAL.get_or_init(VdimMemo::new)
    }

    /// Number of cached states.
    pub fn len(&self) -> usize {
        self.lock().values().map(HashMap::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn clear(&self) {
        self.lock().clear();
    }

    fn lock(&self) -> std::sync::MutexGuard<'_, Table> {
        // A panic while holding the lock cannot leave a partial entry.
        self.table.lock().unwrap_or_else(|e| e.into_inner())
    }

    pub fn vdim(&self, scheme: &FatFlatScheme, t: i64) -> ExactInt {
        self.eval(scheme.ambient_dim, &scheme.multiplicities, t)
    }

    // `mults` is non-increasing, so the last entry is the minimum and
    // decrementing it keeps the order.
    fn eval(&self, n: u32, mults: &[u32], t: i64) -> ExactInt {
        let Some((&last, rest)) = mults.split_last() else {
            return polybinom(t + i64::from(n), n);
        };
        if n == 2 {
            return points_in_plane(mults, t);
        }
        if let Some(v) = self.lock().get(&(n, t)).and_then(|m| m.get(mults)) {
            return v.clone();
        }

        let residual = if last == 1 {
            self.eval(n, rest, t - 1)
        } else {
            let mut reduced = mults.to_vec();
            *reduced.last_mut().unwrap() -= 1;
            self.eval(n, &reduced, t - 1)
        };
        let trace = self.eval(n - 1, rest, t - i64::from(last));
        let value = residual + trace;

        self.lock()
            .entry((n, t))
            .or_default()
            .insert(mults.to_vec(), value.clone());
        value
    }
}

fn points_in_plane(mults: &[u32], t: i64) -> ExactInt {
    let imposed: ExactInt = mults
        .iter()
        .map(|&m| polybinom(i64::from(m) + 1, 2))
        .sum();
    polybinom(t + 2, 2) - imposed
}

/// Virtual dimension `vdim_n(X, t)`, memoized process-wide.
pub fn vdim_recursive(scheme: &FatFlatScheme, t: i64) -> ExactInt {
    VdimMemo::global().vdim(scheme, t)
}

/// Value at `t` of the Hilbert polynomial of the scheme.
pub fn hilbert_poly_value(scheme: &FatFlatScheme, t: i64) -> ExactInt {
    let n = scheme.ambient_dim;
    polybinom(t + i64::from(n), n) - vdim_recursive(scheme, t)
}

/// Unmemoized peeling recursion on an arbitrary multiplicity list, peeling
/// whichever index `pick` returns at each step.
///
/// Exists to check that the virtual dimension depends only on the multiset
/// and not on the peeling order. Exponential; keep inputs small.
pub fn vdim_reference<F>(n: u32, mults: &[u32], t: i64, pick: &mut F) -> ExactInt
where
    F: FnMut(&[u32]) -> usize,
{
    assert!(n >= 2, "ambient dimension below 2");
    assert!(mults.iter().all(|&m| m > 0), "zero multiplicity");
    if mults.is_empty() {
        return polybinom(t + i64::from(n), n);
    }
    if n == 2 {
        return points_in_plane(mults, t);
    }
    let i = pick(mults);
    let m = mults[i];
    let mut residual = mults.to_vec();
    if m == 1 {
        residual.remove(i);
    } else {
        residual[i] -= 1;
    }
    let mut trace = mults.to_vec();
    trace.remove(i);
    vdim_reference(n, &residual, t - 1, pick) + vdim_reference(n - 1, &trace, t - i64::from(m), pick)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> ExactInt {
        ExactInt::from(v)
    }

    fn vdim(n: u32, mults: &[u32], t: i64) -> ExactInt {
        vdim_recursive(&FatFlatScheme::new(n, mults.iter().copied()).unwrap(), t)
    }

    #[test]
    fn scheme_is_canonical() {
        let a = FatFlatScheme::new(4, [1, 3, 0, 2]).unwrap();
        let b = FatFlatScheme::new(4, [2, 1, 3]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.multiplicities(), &[3, 2, 1]);
        assert_eq!(a.flat_count(), 3);
        assert!(FatFlatScheme::new(4, [0, 0]).unwrap().is_empty());
    }

    #[test]
    fn rejects_small_ambient_dimension() {
        assert_eq!(
            FatFlatScheme::new(1, [1]),
            Err(Error::AmbientDimension { min: 2, got: 1 })
        );
    }

    #[test]
    fn cap_index_values() {
        assert_eq!(cap_index(4, 5), 2);
        assert_eq!(cap_index(3, 4), 1);
        assert_eq!(cap_index(10, 0), 0);
    }

    #[test]
    fn s_formula_values() {
        assert_eq!(s_formula(4, 5, 7), int(160));
        assert_eq!(s_formula(3, 4, 6), int(56));
        assert_eq!(s_formula(2, 11, 2), int(-5));
        assert_eq!(s_formula(4, 12, 2), int(9));
        for n in 2..8 {
            for t in -4..10 {
                assert_eq!(s_formula(n, 0, t), polybinom(t + i64::from(n), n));
            }
        }
    }

    #[test]
    fn conditions_values() {
        assert_eq!(conditions_fat_flat(4, 2, 1, 7).unwrap(), int(36));
        assert_eq!(conditions_fat_flat(6, 2, 3, 1).unwrap(), int(7));
        for n in 2..9u32 {
            for k in 1..=n {
                for t in -3..12 {
                    assert_eq!(
                        conditions_fat_flat(n, k, 1, t).unwrap(),
                        polybinom(t + i64::from(n - k), n - k)
                    );
                }
            }
        }
    }

    #[test]
    fn conditions_reject_bad_input() {
        assert!(matches!(
            conditions_fat_flat(4, 0, 1, 3),
            Err(Error::Codimension { .. })
        ));
        assert!(matches!(
            conditions_fat_flat(4, 5, 1, 3),
            Err(Error::Codimension { .. })
        ));
        assert_eq!(conditions_fat_flat(4, 2, 0, 3), Err(Error::Multiplicity(0)));
    }

    #[test]
    fn point_conditions_in_plane() {
        // A point of multiplicity m in P^2 imposes binom(m+1, 2) conditions.
        for m in 1..6 {
            assert_eq!(
                conditions_fat_flat(2, 2, m, 10).unwrap(),
                polybinom(i64::from(m) + 1, 2)
            );
        }
    }

    #[test]
    fn vdim_golden_values() {
        assert_eq!(vdim(4, &[3; 5], 13), int(135));
        assert_eq!(vdim(3, &[3; 4], 10), int(54));
        assert_eq!(vdim(3, &[3; 3], 7), int(0));
        assert_eq!(vdim(3, &[3; 2], 4), int(-9));
        assert_eq!(vdim(6, &[3; 6], 16), int(-729));
        assert_eq!(vdim(5, &[], 2), int(21));
        assert_eq!(vdim(2, &[3; 3], 7), int(18));
        assert_eq!(vdim(2, &[3; 2], 4), int(3));
        assert_eq!(vdim(2, &[3], 1), int(-3));
    }

    #[test]
    fn hilbert_poly_values() {
        let plane = FatFlatScheme::new(4, [1]).unwrap();
        assert_eq!(hilbert_poly_value(&plane, 7), int(36));
        let triple_point = FatFlatScheme::new(2, [3]).unwrap();
        assert_eq!(hilbert_poly_value(&triple_point, 5), int(6));
        let empty = FatFlatScheme::new(6, []).unwrap();
        for t in -3..8 {
            assert_eq!(hilbert_poly_value(&empty, t), int(0));
        }
    }

    #[test]
    fn single_flat_matches_conditions() {
        for n in 2..=8u32 {
            for m in 1..=5u32 {
                for t in 0..=15 {
                    assert_eq!(
                        vdim(n, &[m], t),
                        polybinom(t + i64::from(n), n) - conditions_fat_flat(n, 2, m, t).unwrap(),
                        "n={n} m={m} t={t}"
                    );
                }
            }
        }
    }

    #[test]
    fn fat_flat_vanishes_in_degree_one() {
        for n in 3..=30u32 {
            for k in 3..=n {
                assert_eq!(vdim(n, &[k], 1), int(0), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn reference_agrees_on_first_index_peeling() {
        let mut first = |_: &[u32]| 0usize;
        assert_eq!(vdim_reference(4, &[3; 5], 13, &mut first), int(135));
        assert_eq!(vdim_reference(3, &[1, 2, 3], 6, &mut first), vdim(3, &[3, 2, 1], 6));
    }

    #[test]
    fn private_memo_matches_global() {
        let memo = VdimMemo::new();
        let scheme = FatFlatScheme::uniform(6, 3, 7).unwrap();
        assert_eq!(memo.vdim(&scheme, 19), int(0));
        assert!(!memo.is_empty());
        let cached = memo.len();
        assert_eq!(memo.vdim(&scheme, 19), vdim_recursive(&scheme, 19));
        assert_eq!(memo.len(), cached);
        memo.clear();
        assert!(memo.is_empty());
    }
}
