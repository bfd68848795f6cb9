//! Linear systems `dH - m_1 Π_1 - ... - m_s Π_s` and their pullback under
//! the Veneroni map of `P^n` defined by `n + 1` general codimension-2 flats.
//!
//! The map pulls back a hyperplane to `nH - ΣΠ` and the dual flat `Π'_j`
//! to `(n-1)H - ΣΠ + Π_j`. By linearity a system `dH' - Σ m_j Π'_j` pulls
//! back to degree `nd - (n-1)M` with multiplicities `d - (M - m_i)`, where
//! `M = Σ m_j`. Applying the formula twice is the identity.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A formal linear system. Degree and multiplicities may be negative after
/// a transform; [`LinearSystem::is_valid`] reports whether the system is an
/// honest one.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LinearSystem {
    pub ambient_dim: u32,
    pub degree: i64,
    /// Positional: entry `i` belongs to flat `i`.
    pub multiplicities: Vec<i64>,
}

impl LinearSystem {
    pub fn new(ambient_dim: u32, degree: i64, multiplicities: Vec<i64>) -> Result<Self> {
        if ambient_dim < 2 {
            return Err(Error::AmbientDimension {
                min: 2,
                got: ambient_dim,
            });
        }
        Ok(Self {
            ambient_dim,
            degree,
            multiplicities,
        })
    }

    pub fn is_valid(&self) -> bool {
        self.degree >= 0 && self.multiplicities.iter().all(|&m| m >= 0)
    }
}

impl fmt::Display for LinearSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}H", self.degree)?;
        for (i, m) in self.multiplicities.iter().enumerate() {
            if *m >= 0 {
                write!(f, " - {}P{}", m, i + 1)?;
            } else {
                write!(f, " + {}P{}", -m, i + 1)?;
            }
        }
        Ok(())
    }
}

pub fn veneroni_pullback(sys: &LinearSystem) -> Result<LinearSystem> {
    let n = sys.ambient_dim;
    let expected = n as usize + 1;
    if sys.multiplicities.len() != expected {
        return Err(Error::FlatCount {
            ambient: n,
            expected,
            got: sys.multiplicities.len(),
        });
    }
    let n = i64::from(n);
    let total: i64 = sys.multiplicities.iter().sum();
    Ok(LinearSystem {
        ambient_dim: sys.ambient_dim,
        degree: n * sys.degree - (n - 1) * total,
        multiplicities: sys
            .multiplicities
            .iter()
            .map(|&m| sys.degree - (total - m))
            .collect(),
    })
}

/// `(n + k)H - Π_1 - ... - Π_{n+1}`.
pub fn family_source(n: u32, k: i64) -> Result<LinearSystem> {
    LinearSystem::new(n, i64::from(n) + k, vec![1; n as usize + 1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sys(n: u32, d: i64, m: Vec<i64>) -> LinearSystem {
        LinearSystem::new(n, d, m).unwrap()
    }

    #[test]
    fn pullback_examples() {
        assert_eq!(
            veneroni_pullback(&sys(4, 7, vec![1; 5])).unwrap(),
            sys(4, 13, vec![3; 5])
        );
        assert_eq!(
            veneroni_pullback(&sys(21, 25, vec![1; 22])).unwrap(),
            sys(21, 85, vec![4; 22])
        );
        assert_eq!(
            veneroni_pullback(&sys(3, 0, vec![0; 4])).unwrap(),
            sys(3, 0, vec![0; 4])
        );
    }

    #[test]
    fn hyperplane_pulls_back_to_degree_n() {
        // H' itself: d = 1, no multiplicities.
        let image = veneroni_pullback(&sys(5, 1, vec![0; 6])).unwrap();
        assert_eq!(image, sys(5, 5, vec![1; 6]));
    }

    #[test]
    fn wrong_flat_count() {
        assert_eq!(
            veneroni_pullback(&sys(4, 7, vec![1; 4])),
            Err(Error::FlatCount {
                ambient: 4,
                expected: 5,
                got: 4
            })
        );
    }

    #[test]
    fn family_sources() {
        assert_eq!(family_source(4, 3).unwrap(), sys(4, 7, vec![1; 5]));
        assert_eq!(family_source(21, 4).unwrap(), sys(21, 25, vec![1; 22]));
        assert_eq!(family_source(2, 3).unwrap(), sys(2, 5, vec![1; 3]));
    }

    #[test]
    fn family_image() {
        for n in 2..=30u32 {
            for k in 0..=8i64 {
                let image = veneroni_pullback(&family_source(n, k).unwrap()).unwrap();
                assert_eq!(image.degree, k * i64::from(n) + 1);
                assert_eq!(image.multiplicities, vec![k; n as usize + 1]);
            }
        }
    }

    #[test]
    fn validity_and_display() {
        let s = sys(2, 1, vec![2, -1, 0]);
        assert!(!s.is_valid());
        assert_eq!(s.to_string(), "1H - 2P1 + 1P2 - 0P3");
        assert!(sys(2, 0, vec![0, 0, 0]).is_valid());
        assert!(!sys(2, -1, vec![0, 0, 0]).is_valid());
    }

    proptest! {
        #[test]
        fn involution(
            (n, degree, mults) in (2u32..=10).prop_flat_map(|n| (
                Just(n),
                -5i64..=20,
                proptest::collection::vec(-5i64..=20, n as usize + 1),
            ))
        ) {
            let s = sys(n, degree, mults);
            let back = veneroni_pullback(&veneroni_pullback(&s).unwrap()).unwrap();
            prop_assert_eq!(back, s);
        }
    }
}
