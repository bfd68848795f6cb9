//! Brute-force actual dimensions over `F_p`.
//!
//! Each flat is the span of `n - 1` random vectors in `F_p^{n+1}`. Vanishing
//! to order `m` along it is imposed by requiring every partial derivative of
//! order `< m` to vanish at random points of the flat. The kernel dimension
//! of the resulting condition matrix on degree-`t` monomials is, with high
//! probability, the actual dimension over characteristic 0 for a general
//! configuration. Ranks can only drop modulo `p`, so a wrong answer is
//! always too large.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactmath::ExactInt;

pub const DEFAULT_PRIME: u64 = (1 << 31) - 1;
pub const MAX_AMBIENT_DIM: u32 = 5;
pub const MAX_DEGREE: i64 = 10;
pub const MAX_MULTIPLICITY: u32 = 4;
pub const MAX_MONOMIALS: usize = 5000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    /// Prime modulus, below `2^32` so products fit in `u64`.
    pub prime: u64,
    pub seed: u64,
    /// Points sampled on each flat, as a multiple of the number of
    /// conditions a simple flat imposes in the requested degree.
    pub samples_per_flat: u32,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            prime: DEFAULT_PRIME,
            seed: 0,
            samples_per_flat: 2,
        }
    }
}

impl OracleConfig {
    pub fn with_seed(seed: u64) -> Self {
        Self {
            seed,
            ..Self::default()
        }
    }
}

/// Dimension of degree-`t` forms on `P^n` vanishing to order `mults[i]`
/// along the `i`-th of `mults.len()` random codimension-2 flats.
///
/// Flat `i` depends only on `(seed, i)`, so appending a flat leaves the
/// earlier ones unchanged.
pub fn adim_rank_oracle(n: u32, mults: &[u32], t: i64, cfg: &OracleConfig) -> Result<ExactInt> {
    if !(2..=MAX_AMBIENT_DIM).contains(&n) {
        return Err(Error::DeskScale(format!(
            "ambient dimension {n} outside 2..={MAX_AMBIENT_DIM}"
        )));
    }
    if !(0..=MAX_DEGREE).contains(&t) {
        return Err(Error::DeskScale(format!("degree {t} outside 0..={MAX_DEGREE}")));
    }
    if let Some(&m) = mults.iter().find(|&&m| m == 0 || m > MAX_MULTIPLICITY) {
        return Err(Error::DeskScale(format!(
            "multiplicity {m} outside 1..={MAX_MULTIPLICITY}"
        )));
    }
    let t = t as u32;
    let monomials = exponents(n as usize + 1, t);
    if monomials.len() > MAX_MONOMIALS {
        return Err(Error::DeskScale(format!(
            "{} monomials exceeds {MAX_MONOMIALS}",
            monomials.len()
        )));
    }
    let points_per_flat =
        cfg.samples_per_flat.max(1) as usize * binomial(t as usize + n as usize - 2, n as usize - 2);
    let rows: usize = mults
        .iter()
        .map(|&m| points_per_flat * (0..m).map(|j| binomial(j as usize + n as usize, n as usize)).sum::<usize>())
        .sum();
    check_prime(cfg.prime, rows.max(monomials.len()))?;

    let field = Field(cfg.prime);
    let mut echelon = Echelon::new(monomials.len(), field);
    'flats: for (index, &m) in mults.iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        rng.set_stream(index as u64);
        let basis: Vec<Vec<u64>> = (0..n - 1)
            .map(|_| (0..=n).map(|_| rng.gen_range(0..field.0)).collect())
            .collect();
        let derivatives: Vec<Vec<u32>> = (0..m).flat_map(|j| exponents(n as usize + 1, j)).collect();

        for _ in 0..points_per_flat {
            let point = random_combination(&basis, &mut rng, field);
            let powers = power_table(&point, t, field);
            for d in &derivatives {
                let row: Vec<u64> = monomials
                    .iter()
                    .map(|a| derivative_entry(a, d, &powers, field))
                    .collect();
                echelon.insert(row);
                if echelon.is_full() {
                    break 'flats;
                }
            }
        }
    }
    Ok(ExactInt::from(monomials.len() - echelon.rank()))
}

#[derive(Debug, Clone, Copy)]
struct Field(u64);

impl Field {
    fn add(self, a: u64, b: u64) -> u64 {
        (a + b) % self.0
    }

    fn sub(self, a: u64, b: u64) -> u64 {
        (a + self.0 - b) % self.0
    }

    fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.0
    }

    fn pow(self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    fn inv(self, a: u64) -> u64 {
        self.pow(a, self.0 - 2)
    }
}

/// Row-reduced basis of the rows inserted so far, indexed by pivot column.
struct Echelon {
    pivots: Vec<Option<Vec<u64>>>,
    rank: usize,
    field: Field,
}

impl Echelon {
    fn new(columns: usize, field: Field) -> Self {
        Self {
            pivots: vec![None; columns],
            rank: 0,
            field,
        }
    }

    fn rank(&self) -> usize {
        self.rank
    }

    fn is_full(&self) -> bool {
        self.rank == self.pivots.len()
    }

    fn insert(&mut self, mut row: Vec<u64>) {
        let f = self.field;
        for col in 0..row.len() {
            let c = row[col];
            if c == 0 {
                continue;
            }
            match &self.pivots[col] {
                Some(pivot) => {
                    for j in col..row.len() {
                        if pivot[j] != 0 {
                            row[j] = f.sub(row[j], f.mul(c, pivot[j]));
                        }
                    }
                }
                None => {
                    let inv = f.inv(c);
                    for v in &mut row[col..] {
                        *v = f.mul(*v, inv);
                    }
                    self.pivots[col] = Some(row);
                    self.rank += 1;
                    return;
                }
            }
        }
    }
}

/// All exponent vectors of length `vars` with entries summing to `degree`.
fn exponents(vars: usize, degree: u32) -> Vec<Vec<u32>> {
    fn go(vars: usize, degree: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if vars == 1 {
            prefix.push(degree);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=degree).rev() {
            prefix.push(e);
            go(vars - 1, degree - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(vars, degree, &mut Vec::with_capacity(vars), &mut out);
    out
}

fn binomial(x: usize, m: usize) -> usize {
    if m > x {
        return 0;
    }
    (1..=m).fold(1, |acc, j| acc * (x - m + j) / j)
}

fn check_prime(p: u64, dimension: usize) -> Result<()> {
    let reject = |reason: String| Err(Error::Modulus { prime: p, reason });
    if p >= 1 << 32 {
        return reject("must be below 2^32".into());
    }
    if p < 2 || (2..).take_while(|d| d * d <= p).any(|d| p.is_multiple_of(d)) {
        return reject("not prime".into());
    }
    if p <= dimension as u64 {
        return reject(format!("must exceed the matrix dimension {dimension}"));
    }
    Ok(())
}

fn random_combination(basis: &[Vec<u64>], rng: &mut ChaCha8Rng, f: Field) -> Vec<u64> {
    let mut point = vec![0; basis[0].len()];
    for v in basis {
        let c = rng.gen_range(0..f.0);
        for (p, &x) in point.iter_mut().zip(v) {
            *p = f.add(*p, f.mul(c, x));
        }
    }
    point
}

fn power_table(point: &[u64], t: u32, f: Field) -> Vec<Vec<u64>> {
    point
        .iter()
        .map(|&x| {
            std::iter::successors(Some(1u64), |&acc| Some(f.mul(acc, x)))
                .take(t as usize + 1)
                .collect()
        })
        .collect()
}

/// `∂^d x^a` evaluated at the point whose coordinate powers are `powers`.
fn derivative_entry(a: &[u32], d: &[u32], powers: &[Vec<u64>], f: Field) -> u64 {
    let mut value = 1;
    for (j, (&aj, &dj)) in a.iter().zip(d).enumerate() {
        if dj > aj {
            return 0;
        }
        for i in 0..dj {
            value = f.mul(value, u64::from(aj - i) % f.0);
        }
        value = f.mul(value, powers[j][(aj - dj) as usize]);
    }
    value
}
