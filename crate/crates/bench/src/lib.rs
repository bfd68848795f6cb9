//! Benchmark fixtures shared by the criterion targets in `benches/`.

use fatflat::FatFlatScheme;

/// The family scheme in P^n: n+1 flats of multiplicity k.
pub fn family_scheme(n: u32, k: u32) -> FatFlatScheme {
    FatFlatScheme::uniform(n, k, n as usize + 1).expect("n >= 2")
}

/// Degree of the pulled-back family system in P^n.
pub fn family_degree(n: u32, k: u32) -> i64 {
    i64::from(n) * i64::from(k) + 1
}
