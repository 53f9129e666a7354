//! Closed-form tiling counts built from MacMahon's box formula, with a
//! backtracking plane-partition counter as an independent check.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// An `alpha x beta x gamma` box.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BoxDims {
    pub alpha: usize,
    pub beta: usize,
    pub gamma: usize,
}

impl BoxDims {
    pub fn new(alpha: usize, beta: usize, gamma: usize) -> Self {
        BoxDims { alpha, beta, gamma }
    }
}

/// Number of plane partitions inside the box,
/// `prod_{i,j,k} (i+j+k-1)/(i+j+k-2)`, evaluated as one exact fraction.
pub fn macmahon_box(d: BoxDims) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 1..=d.alpha {
        for j in 1..=d.beta {
            for k in 1..=d.gamma {
                num *= i + j + k - 1;
                den *= i + j + k - 2;
            }
        }
    }
    let (q, r) = num.div_rem(&den);
    debug_assert!(r.is_zero(), "box product is not an integer");
    q
}

fn b(alpha: usize, beta: usize, gamma: usize) -> BigInt {
    macmahon_box(BoxDims::new(alpha, beta, gamma))
}

/// Largest box accepted by [`enumerate_plane_partitions`]: `alpha*beta <= 16`, `gamma <= 8`.
pub const PLANE_PARTITION_GUARD: (usize, usize) = (16, 8);

/// Counts `alpha x beta` arrays with entries in `[0, gamma]` that weakly
/// decrease along rows and columns, by backtracking.
pub fn enumerate_plane_partitions(d: BoxDims) -> Result<BigInt> {
    let (cells_max, height_max) = PLANE_PARTITION_GUARD;
    if d.alpha * d.beta > cells_max || d.gamma > height_max {
        return Err(Error::SizeGuard(format!(
            "plane partition enumeration needs alpha*beta <= {cells_max} and gamma <= {height_max}, got {}x{}x{}",
            d.alpha, d.beta, d.gamma
        )));
    }
    if d.alpha == 0 || d.beta == 0 {
        return Ok(BigInt::one());
    }
    fn fill(grid: &mut [usize], cell: usize, d: &BoxDims) -> u64 {
        if cell == grid.len() {
            return 1;
        }
        let (r, c) = (cell / d.beta, cell % d.beta);
        let mut cap = d.gamma;
        if r > 0 {
            cap = cap.min(grid[cell - d.beta]);
        }
        if c > 0 {
            cap = cap.min(grid[cell - 1]);
        }
        let mut total = 0;
        for v in 0..=cap {
            grid[cell] = v;
            total += fill(grid, cell + 1, d);
        }
        total
    }
    let mut grid = vec![0; d.alpha * d.beta];
    Ok(BigInt::from(fill(&mut grid, 0, &d)))
}

fn require_positive(a: usize, b: usize, c: usize) -> Result<()> {
    if a == 0 || b == 0 || c == 0 {
        return Err(Error::Precondition(format!(
            "side lengths must be positive, got ({a},{b},{c})"
        )));
    }
    Ok(())
}

/// Tilings of the hexagon with sides `a, b+1, c, a+1, b, c+1` with its central
/// triangle removed; `a, b, c` must share parity.
pub fn theorem1_count(a: usize, bb: usize, c: usize) -> Result<BigInt> {
    require_positive(a, bb, c)?;
    if a % 2 != bb % 2 || bb % 2 != c % 2 {
        return Err(Error::Parity(format!(
            "a, b, c must all have the same parity, got ({a},{bb},{c})"
        )));
    }
    let (fl, cl) = (|x: usize| x / 2, |x: usize| x.div_ceil(2));
    Ok(b(cl(a), cl(bb), cl(c))
        * b(cl(a + 1), fl(bb), cl(c))
        * b(cl(a), cl(bb + 1), fl(c))
        * b(fl(a), cl(bb), cl(c + 1)))
}

/// Tilings of the hexagon with sides `a, b+1, c, a+1, b, c+1` punctured at the
/// off-centre position used when `a, b` share parity and `c` does not.
pub fn theorem4_count(a: usize, bb: usize, c: usize) -> Result<BigInt> {
    require_positive(a, bb, c)?;
    if a % 2 != bb % 2 || c % 2 == a % 2 {
        return Err(Error::Parity(format!(
            "a and b must share parity and c must differ, got ({a},{bb},{c})"
        )));
    }
    let mid = b((a + 1) / 2, (bb + 1) / 2, (c + 1) / 2);
    Ok(b((a + 2) / 2, bb / 2, (c + 2) / 2) * mid.clone() * mid * b(a / 2, (bb + 2) / 2, c / 2))
}
