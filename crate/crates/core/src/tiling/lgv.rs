//! Counting tilings through the midpoints `M_l` on the central diagonal.
//!
//! Every family crosses the diagonal `x - y = (b-c)/2` in `a+1` distinct
//! points `M_l = ((a+b)/2 + i_l, (a+c)/2 + i_l)`, the exceptional path crossing
//! at the centre `i_{k+1} = 0`. Splitting each family there and applying the
//! Lindström–Gessel–Viennot lemma to both halves gives a sum of products of
//! two binomial determinants.

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use super::{count_paths, start_end_points, LatticePoint, PuncturedHexagon};
use crate::error::{Error, Result};
use crate::matrix::{determinant_fraction_free, Matrix};
use crate::symfun::{rab_indices, RabIndex};
use crate::ExactInt;

fn midpoints(h: &PuncturedHexagon, idx: &RabIndex) -> Vec<LatticePoint> {
    let cx = ((h.a() + h.b()) / 2) as i64;
    let cy = ((h.a() + h.c()) / 2) as i64;
    idx.i.iter().map(|&i| LatticePoint::new(cx + i, cy + i)).collect()
}

fn summand(h: &PuncturedHexagon, starts: &[LatticePoint], ends: &[LatticePoint], idx: &RabIndex) -> BigInt {
    let a = h.a();
    let m = midpoints(h, idx);
    // the ordinary paths pass through every midpoint except the centre
    let upper = Matrix::from_fn(a, a, |i, j| {
        let col = if j >= idx.k { j + 1 } else { j };
        count_paths(starts[i], m[col])
    });
    let upper = determinant_fraction_free(&upper).expect("square");
    if upper.is_zero() {
        return upper;
    }
    let lower = Matrix::from_fn(a + 1, a + 1, |i, j| count_paths(m[i], ends[j]));
    upper * determinant_fraction_free(&lower).expect("square")
}

/// Number of tilings of the centrally punctured hexagon as a sum over
/// midpoint configurations of products of path-count determinants.
pub fn count_via_path_determinants(h: &PuncturedHexagon) -> Result<ExactInt> {
    if !h.is_central() || h.a() % 2 != h.b() % 2 {
        return Err(Error::Parity(format!(
            "the midpoint decomposition needs a, b, c of equal parity and a central puncture, got {h}"
        )));
    }
    let (starts, ends) = start_end_points(h);
    let indices = rab_indices(h.a(), h.b())?;
    Ok(indices
        .par_iter()
        .map(|idx| summand(h, &starts[..h.a()], &ends, idx))
        .sum())
}
