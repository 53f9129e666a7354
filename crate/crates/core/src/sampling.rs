//! Seeded pseudo-random inputs for exact identity testing.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::matrix::{Matrix, SkewMatrix};
use crate::symfun::EvalPoint;

/// Largest numerator magnitude and denominator of sampled rationals.
pub const RATIONAL_BOUND: i64 = 13;

pub type SeededRng = ChaCha8Rng;

pub fn seeded_rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A rational `p/q` with `|p| <= 13` and `1 <= q <= 13`.
pub fn small_rational(rng: &mut SeededRng) -> BigRational {
    let p = rng.random_range(-RATIONAL_BOUND..=RATIONAL_BOUND);
    let q = rng.random_range(1..=RATIONAL_BOUND);
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// `count` pairwise distinct small rationals.
pub fn distinct_rationals(rng: &mut SeededRng, count: usize) -> Vec<BigRational> {
    let mut out: Vec<BigRational> = Vec::with_capacity(count);
    while out.len() < count {
        let v = small_rational(rng);
        if !out.contains(&v) {
            out.push(v);
        }
    }
    out
}

/// An evaluation point of `count` distinct small rationals.
pub fn random_points(rng: &mut SeededRng, count: usize) -> EvalPoint<BigRational> {
    EvalPoint::new(distinct_rationals(rng, count))
}

/// The `index`-th of the deterministic point sets for `seed`, each of size `count`.
pub fn point_set(seed: u64, index: u64, count: usize) -> EvalPoint<BigRational> {
    let mut rng = seeded_rng(seed.wrapping_mul(1_000_003).wrapping_add(index));
    random_points(&mut rng, count)
}

pub fn random_int(rng: &mut SeededRng, bound: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(rng.random_range(-bound..=bound)))
}

/// A `rows x cols` matrix with integer entries in `[-bound, bound]`.
pub fn random_matrix(rng: &mut SeededRng, rows: usize, cols: usize, bound: i64) -> Matrix<BigRational> {
    Matrix::from_fn(rows, cols, |_, _| random_int(rng, bound))
}

/// An `n x n` skew-symmetric matrix with integer entries in `[-bound, bound]`.
pub fn random_skew(rng: &mut SeededRng, n: usize, bound: i64) -> SkewMatrix<BigRational> {
    SkewMatrix::from_upper(n, |_, _| random_int(rng, bound))
}
