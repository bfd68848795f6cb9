//! Classification of the Veneroni family `X' = kΠ_1 + ... + kΠ_{n+1}` in
//! degree `kn + 1` by comparing its actual and virtual dimensions.

use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::adim_family;
use crate::error::{Error, Result};
use crate::exactmath::{decimal, ExactInt};
use crate::hilbert::{vdim_recursive, FatFlatScheme};
use crate::veneroni::{family_source, veneroni_pullback};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    /// `adim > 0` and `adim > vdim`.
    Unexpected,
    /// `vdim > adim > 0`.
    MissingExpected,
    /// `adim = vdim > 0`.
    Equal,
    /// `adim = 0`.
    NoForms,
}

impl Verdict {
    pub fn from_dims(adim: &ExactInt, vdim: &ExactInt) -> Self {
        if !adim.is_positive() {
            Verdict::NoForms
        } else if adim > vdim {
            Verdict::Unexpected
        } else if vdim > adim {
            Verdict::MissingExpected
        } else {
            Verdict::Equal
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Unexpected => "Unexpected",
            Verdict::MissingExpected => "MissingExpected",
            Verdict::Equal => "Equal",
            Verdict::NoForms => "NoForms",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Verdict {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "Unexpected" => Ok(Verdict::Unexpected),
            "MissingExpected" => Ok(Verdict::MissingExpected),
            "Equal" => Ok(Verdict::Equal),
            "NoForms" => Ok(Verdict::NoForms),
            other => Err(format!("unknown verdict {other:?}")),
        }
    }
}

/// One row of a family scan. Field names double as the CSV header
/// `n,k,deg_source,deg_target,adim,vdim,verdict`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationRecord {
    pub n: u32,
    pub k: i64,
    #[serde(rename = "deg_source")]
    pub source_degree: i64,
    #[serde(rename = "deg_target")]
    pub target_degree: i64,
    #[serde(with = "decimal")]
    pub adim: ExactInt,
    #[serde(with = "decimal")]
    pub vdim: ExactInt,
    pub verdict: Verdict,
}

impl ClassificationRecord {
    pub fn difference(&self) -> ExactInt {
        &self.adim - &self.vdim
    }
}

pub fn classify_family(n: u32, k: i64) -> Result<ClassificationRecord> {
    if n < 3 {
        return Err(Error::AmbientDimension { min: 3, got: n });
    }
    let adim = adim_family(n, k)?;
    let source = family_source(n, k)?;
    let target = veneroni_pullback(&source)?;
    let scheme = FatFlatScheme::new(
        n,
        target.multiplicities.iter().map(|&m| m as u32),
    )?;
    let vdim = vdim_recursive(&scheme, target.degree);
    let verdict = Verdict::from_dims(&adim, &vdim);
    debug_assert!(!adim.is_zero());
    Ok(ClassificationRecord {
        n,
        k,
        source_degree: source.degree,
        target_degree: target.degree,
        adim,
        vdim,
        verdict,
    })
}

fn check_range(k: i64, n_min: u32, n_max: u32) -> Result<()> {
    if k < 3 {
        return Err(Error::FamilyParameter(k));
    }
    if n_min < 3 || n_min > n_max {
        return Err(Error::Range(format!(
            "need 3 <= n_min <= n_max, got {n_min}..={n_max}"
        )));
    }
    Ok(())
}

/// One record per `n` in `n_min..=n_max`, ordered by `n`.
pub fn scan(k: i64, n_min: u32, n_max: u32) -> Result<Vec<ClassificationRecord>> {
    check_range(k, n_min, n_max)?;
    (n_min..=n_max).map(|n| classify_family(n, k)).collect()
}

/// [`scan`] with rows evaluated on `jobs` worker threads. Output order and
/// contents are identical to the sequential scan.
pub fn scan_parallel(
    k: i64,
    n_min: u32,
    n_max: u32,
    jobs: usize,
) -> Result<Vec<ClassificationRecord>> {
    check_range(k, n_min, n_max)?;
    if jobs <= 1 {
        return scan(k, n_min, n_max);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .stack_size(16 << 20)
        .build()
        .map_err(|e| Error::Range(format!("cannot start {jobs} workers: {e}")))?;
    pool.install(|| {
        (n_min..=n_max)
            .into_par_iter()
            .map(|n| classify_family(n, k))
            .collect()
    })
}
