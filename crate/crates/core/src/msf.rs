//! The minor summation formula and the Pfaffian evaluation of the sums
//! `Σ_{R(a,b)} s_λ s_μ`.
//!
//! Index sets, in terms of `h = (a+b)/2` and `s = n-b`:
//! `P = {s, ..., s+a+b} \ {s+h}`, `Q = {0, ..., s-1, s+h}`, `R = {0, ..., s-1}`,
//! `Γ = {0, ..., a+b} \ {h}`. Rows and columns of the skew matrix `A` on
//! `Γ ∪ Γ̄` are ordered unbarred ascending, then barred ascending.

use crate::combinat::lex_subsets;
use crate::error::{Error, Result};
use crate::matrix::{determinant, pfaffian, pfaffian_minor, Matrix, SkewMatrix};
use crate::partition::Partition;
use crate::scalar::{pow, sign, Field, Scalar};
use crate::symfun::{generate_rab, schur, vandermonde, EvalPoint};

pub use crate::symfun::moment_matrix;

/// The exponent sets `P, Q, R` and the index set `Γ` for parameters `(a, b, n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexSets {
    pub a: usize,
    pub b: usize,
    pub n: usize,
    pub p: Vec<usize>,
    pub q: Vec<usize>,
    pub r: Vec<usize>,
    pub gamma: Vec<usize>,
}

fn require_same_parity(a: usize, b: usize) -> Result<()> {
    if a % 2 != b % 2 {
        return Err(Error::Parity(format!("a and b must share parity, got ({a},{b})")));
    }
    Ok(())
}

impl IndexSets {
    pub fn new(a: usize, b: usize, n: usize) -> Result<Self> {
        require_same_parity(a, b)?;
        if n < b {
            return Err(Error::Precondition(format!("need n >= b, got n={n}, b={b}")));
        }
        let h = (a + b) / 2;
        let s = n - b;
        let gamma: Vec<usize> = (0..=a + b).filter(|&k| k != h).collect();
        let p = gamma.iter().map(|&k| s + k).collect();
        let r: Vec<usize> = (0..s).collect();
        let mut q = r.clone();
        q.push(s + h);
        Ok(IndexSets { a, b, n, p, q, r, gamma })
    }

    pub fn half(&self) -> usize {
        (self.a + self.b) / 2
    }
}

/// The skew matrix `B` on `Γ` with `B_{k, a+b-k} = 1` for `k < (a+b)/2` and
/// `-1` for `k > (a+b)/2`.
pub fn structured_b<T: Scalar>(a: usize, b: usize) -> Result<SkewMatrix<T>> {
    require_same_parity(a, b)?;
    let h = (a + b) / 2;
    let gamma: Vec<usize> = (0..=a + b).filter(|&k| k != h).collect();
    Ok(SkewMatrix::from_upper(gamma.len(), |i, j| {
        if gamma[i] + gamma[j] == a + b {
            T::one()
        } else {
            T::zero()
        }
    }))
}

/// The skew matrix `A = [[0, B], [B, 0]]` on `Γ ∪ Γ̄`.
pub fn structured_skew<T: Scalar>(a: usize, b: usize) -> Result<SkewMatrix<T>> {
    let bm = structured_b::<T>(a, b)?.into_matrix();
    let z = Matrix::zeros(bm.rows(), bm.cols());
    let full = Matrix::from_blocks(&[vec![z.clone(), bm.clone()], vec![bm, z]])?;
    SkewMatrix::new(full)
}

/// Both sides of the minor summation formula
/// `Σ_K Pf(A_K^K) det(G_K | H) = (-1)^{q(q-1)/2} Pf([[G A Gᵀ, H], [-Hᵀ, 0]])`,
/// where `K` runs over the `(n-q)`-subsets of the columns of `G`.
pub fn minor_summation<T: Field>(g: &Matrix<T>, h: &Matrix<T>, a: &SkewMatrix<T>) -> Result<(T, T)> {
    let (n, p, q) = (g.rows(), g.cols(), h.cols());
    if h.rows() != n || a.dim() != p {
        return Err(Error::Dimension(format!(
            "G is {n}x{p}, H is {}x{q}, A is {}x{}",
            h.rows(),
            a.dim(),
            a.dim()
        )));
    }
    if (n + q) % 2 == 1 || q > n || n - q > p {
        return Err(Error::Precondition(format!(
            "need n+q even and 0 <= n-q <= p, got n={n}, p={p}, q={q}"
        )));
    }
    let mut lhs = T::zero();
    for k in lex_subsets(p, n - q) {
        let pf = pfaffian_minor(a, &k)?;
        if pf.is_zero() {
            continue;
        }
        let gk = g.select_columns(&k);
        lhs = lhs + pf * determinant(&Matrix::hstack(&[&gk, h])?)?;
    }
    let rhs = sign::<T>((q * q.saturating_sub(1) / 2) as i64) * pfaffian(&msf_block(g, h, a)?);
    Ok((lhs, rhs))
}

/// `[[G A Gᵀ, H], [-Hᵀ, 0]]`.
pub fn msf_block<T: Field>(g: &Matrix<T>, h: &Matrix<T>, a: &SkewMatrix<T>) -> Result<SkewMatrix<T>> {
    let gag = g.matmul(a.matrix())?.matmul(&g.transpose())?;
    let zero = Matrix::zeros(h.cols(), h.cols());
    let block = Matrix::from_blocks(&[vec![gag, h.clone()], vec![h.transpose().neg(), zero]])?;
    SkewMatrix::new(block)
}

/// The matrices `G`, `H`, `A` to which the minor summation formula is applied.
#[derive(Debug, Clone, PartialEq)]
pub struct MsfInstance<T> {
    pub sets: IndexSets,
    pub g: Matrix<T>,
    pub h: Matrix<T>,
    pub a: SkewMatrix<T>,
}

/// `G = diag(M_P(X_{n+1}), M_P(X_n))`, `H = diag(M_Q(X_{n+1}), M_R(X_n))`, and `A`.
pub fn build_msf_instance<T: Scalar>(
    a: usize,
    b: usize,
    n: usize,
    pts1: &EvalPoint<T>,
    pts0: &EvalPoint<T>,
) -> Result<MsfInstance<T>> {
    let sets = IndexSets::new(a, b, n)?;
    check_sizes(n, pts1, pts0)?;
    let g = Matrix::block_diag(&moment_matrix(&sets.p, pts1), &moment_matrix(&sets.p, pts0));
    let h = Matrix::block_diag(&moment_matrix(&sets.q, pts1), &moment_matrix(&sets.r, pts0));
    let a = structured_skew(a, b)?;
    Ok(MsfInstance { sets, g, h, a })
}

fn check_sizes<T: Scalar>(n: usize, pts1: &EvalPoint<T>, pts0: &EvalPoint<T>) -> Result<()> {
    if pts1.len() != n + 1 || pts0.len() != n {
        return Err(Error::Dimension(format!(
            "expected {} and {n} points, got {} and {}",
            n + 1,
            pts1.len(),
            pts0.len()
        )));
    }
    if pts1.values()[..n] != *pts0.values() {
        return Err(Error::Precondition("X_n must be the first n points of X_{n+1}".into()));
    }
    Ok(())
}

/// An element of `Γ ∪ Γ̄`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GammaIndex {
    pub value: usize,
    pub barred: bool,
}

impl GammaIndex {
    pub fn plain(value: usize) -> Self {
        GammaIndex { value, barred: false }
    }

    pub fn bar(value: usize) -> Self {
        GammaIndex { value, barred: true }
    }

    /// Row of this element in [`structured_skew`].
    pub fn position(self, a: usize, b: usize) -> Option<usize> {
        let h = (a + b) / 2;
        if self.value > a + b || self.value == h {
            return None;
        }
        let pos = if self.value > h { self.value - 1 } else { self.value };
        Some(if self.barred { pos + a + b } else { pos })
    }
}

/// `Pf(A_K^K)` by the closed form: zero unless `K` consists of `j_1 < ... < j_b`
/// and `j̄'_1 < ... < j̄'_b` with `j_h + j'_{b+1-h} = a+b`, in which case it is
/// `(-1)^{#{h : j_h > (a+b)/2}}`.
pub fn sub_pfaffian_sign(k: &[GammaIndex], a: usize, b: usize) -> i64 {
    let mut plain: Vec<usize> = k.iter().filter(|g| !g.barred).map(|g| g.value).collect();
    let mut barred: Vec<usize> = k.iter().filter(|g| g.barred).map(|g| g.value).collect();
    plain.sort_unstable();
    barred.sort_unstable();
    if plain.len() != barred.len() {
        return 0;
    }
    let m = plain.len();
    if (0..m).any(|h| plain[h] + barred[m - 1 - h] != a + b) {
        return 0;
    }
    let high = plain.iter().filter(|&&j| j > (a + b) / 2).count();
    if high % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Both sides of the bordered determinant factorisation for
/// `Ã = [[A, b], [-cᵀ, d]]`: `det Ã` and `-Pf(A) Pf([[A,b,c],[-bᵀ,0,-d],[-cᵀ,d,0]])`
/// for even dimension, `Pf([[A,b],[-bᵀ,0]]) Pf([[A,c],[-cᵀ,0]])` for odd.
pub fn lemma9_sides<T: Field>(a: &SkewMatrix<T>, bvec: &[T], cvec: &[T], d: T) -> Result<(T, T)> {
    let n = a.dim();
    if bvec.len() != n || cvec.len() != n {
        return Err(Error::Dimension(format!(
            "vectors of length {} and {} for a {n}x{n} matrix",
            bvec.len(),
            cvec.len()
        )));
    }
    let am = a.matrix();
    let tilde = Matrix::from_fn(n + 1, n + 1, |i, j| match (i < n, j < n) {
        (true, true) => am[(i, j)].clone(),
        (true, false) => bvec[i].clone(),
        (false, true) => -cvec[j].clone(),
        (false, false) => d.clone(),
    });
    let lhs = determinant(&tilde)?;
    let border = |cols: &[&[T]], corner: &dyn Fn(usize, usize) -> T| {
        let m = n + cols.len();
        SkewMatrix::from_upper(m, |i, j| {
            if j < n {
                am[(i, j)].clone()
            } else if i < n {
                cols[j - n][i].clone()
            } else {
                corner(i - n, j - n)
            }
        })
    };
    let rhs = if n % 2 == 0 {
        let big = border(&[bvec, cvec], &|_, _| -d.clone());
        -(pfaffian(a) * pfaffian(&big))
    } else {
        pfaffian(&border(&[bvec], &|_, _| T::zero())) * pfaffian(&border(&[cvec], &|_, _| T::zero()))
    };
    Ok((lhs, rhs))
}

pub fn lemma9_check<T: Field>(a: &SkewMatrix<T>, bvec: &[T], cvec: &[T], d: T) -> Result<bool> {
    let (l, r) = lemma9_sides(a, bvec, cvec, d)?;
    Ok(l == r)
}

fn prefix_check<T: Scalar>(n: usize, pts1: &EvalPoint<T>, pts0: &EvalPoint<T>) -> Result<()> {
    check_sizes(n, pts1, pts0)
}

/// `Σ_{(λ,μ) ∈ R(a,b)} s_λ(X_{n+1}) s_μ(X_n)`.
pub fn theorem3_lhs<T: Field>(a: usize, b: usize, n: usize, pts1: &EvalPoint<T>, pts0: &EvalPoint<T>) -> Result<T> {
    prefix_check(n, pts1, pts0)?;
    let pairs = generate_rab(a, b)?;
    Ok(pairs
        .iter()
        .fold(T::zero(), |acc, p| acc + schur(&p.lambda, pts1) * schur(&p.mu, pts0)))
}

fn rect(width: usize, rows: usize) -> Partition {
    Partition::rectangle(width, rows)
}

/// The product of four rectangular Schur functions
/// `s_{(⌈(a+1)/2⌉^{⌊b/2⌋})}(X_n) s_{(⌈a/2⌉^{⌈b/2⌉})}(X_n) s_{(⌈a/2⌉^{⌈b/2⌉})}(X_{n+1}) s_{(⌊a/2⌋^{⌈(b+1)/2⌉})}(X_{n+1})`.
pub fn theorem3_rhs<T: Field>(a: usize, b: usize, n: usize, pts1: &EvalPoint<T>, pts0: &EvalPoint<T>) -> Result<T> {
    require_same_parity(a, b)?;
    prefix_check(n, pts1, pts0)?;
    let (ca, ca1, fa) = (a.div_ceil(2), (a + 1).div_ceil(2), a / 2);
    let (fb, cb, cb1) = (b / 2, b.div_ceil(2), (b + 1).div_ceil(2));
    Ok(schur(&rect(ca1, fb), pts0)
        * schur(&rect(ca, cb), pts0)
        * schur(&rect(ca, cb), pts1)
        * schur(&rect(fa, cb1), pts1))
}

/// `(theorem3_lhs, theorem3_rhs)`.
pub fn theorem3_sides<T: Field>(a: usize, b: usize, n: usize, pts1: &EvalPoint<T>) -> Result<(T, T)> {
    if pts1.len() != n + 1 {
        return Err(Error::Dimension(format!("expected {} points, got {}", n + 1, pts1.len())));
    }
    let pts0 = pts1.prefix(n);
    Ok((theorem3_lhs(a, b, n, pts1, &pts0)?, theorem3_rhs(a, b, n, pts1, &pts0)?))
}

/// Both sides of the conjectured identity at `X_{n+2}`:
/// `Σ s_λ(X_{n+2}) s_μ(X_n)` and
/// `s_{(⌈(a+1)/2⌉^{⌊b/2⌋})}(X_n) s_{(⌈a/2⌉^{⌈b/2⌉})}(X_n ∪ x_{n+1}) s_{(⌈a/2⌉^{⌈b/2⌉})}(X_n ∪ x_{n+2}) s_{(⌊a/2⌋^{⌈(b+1)/2⌉})}(X_{n+2})`.
pub fn conjecture5_sides<T: Field>(a: usize, b: usize, n: usize, pts2: &EvalPoint<T>) -> Result<(T, T)> {
    require_same_parity(a, b)?;
    if pts2.len() != n + 2 {
        return Err(Error::Dimension(format!("expected {} points, got {}", n + 2, pts2.len())));
    }
    let x_n = pts2.prefix(n);
    let with_first = pts2.prefix(n + 1);
    let with_second = x_n.with(pts2.values()[n + 1].clone());
    let lhs = generate_rab(a, b)?
        .iter()
        .fold(T::zero(), |acc, p| acc + schur(&p.lambda, pts2) * schur(&p.mu, &x_n));
    let (ca, ca1, fa) = (a.div_ceil(2), (a + 1).div_ceil(2), a / 2);
    let (fb, cb, cb1) = (b / 2, b.div_ceil(2), (b + 1).div_ceil(2));
    let rhs = schur(&rect(ca1, fb), &x_n)
        * schur(&rect(ca, cb), &with_first)
        * schur(&rect(ca, cb), &with_second)
        * schur(&rect(fa, cb1), pts2);
    Ok((lhs, rhs))
}

pub fn conjecture5_check<T: Field>(a: usize, b: usize, n: usize, pts2: &EvalPoint<T>) -> Result<bool> {
    let (l, r) = conjecture5_sides(a, b, n, pts2)?;
    Ok(l == r)
}

/// Both sides of the Pfaffian evaluation
/// `Σ s_λ(X_{n+1}) s_μ(X_n) = (-1)^{bn+n-b} / (Δ(X_{n+1}) Δ(X_n)) · Pf([[G A Gᵀ, H], [-Hᵀ, 0]])`.
pub fn chain_5_3_sides<T: Field>(a: usize, b: usize, n: usize, pts1: &EvalPoint<T>, pts0: &EvalPoint<T>) -> Result<(T, T)> {
    if !pts1.is_distinct() {
        return Err(Error::RepeatedPoints);
    }
    let inst = build_msf_instance(a, b, n, pts1, pts0)?;
    let lhs = theorem3_lhs(a, b, n, pts1, pts0)?;
    let pf = pfaffian(&msf_block(&inst.g, &inst.h, &inst.a)?);
    let rhs = sign::<T>((b * n + n - b) as i64) * pf / (vandermonde(pts1) * vandermonde(pts0));
    Ok((lhs, rhs))
}

pub fn chain_5_3_check<T: Field>(a: usize, b: usize, n: usize, pts1: &EvalPoint<T>, pts0: &EvalPoint<T>) -> Result<bool> {
    let (l, r) = chain_5_3_sides(a, b, n, pts1, pts0)?;
    Ok(l == r)
}

/// `N(X, Y)_{ij} = x_i^s y_j^s (y_j^h - x_i^h) Σ_{t=0}^{h} y_j^t x_i^{h-t}` with
/// `s = n-b`, `h = (a+b)/2`: the entries of `M_P(X) B M_P(Y)ᵀ` without division.
pub fn n_matrix<T: Scalar>(sets: &IndexSets, xs: &EvalPoint<T>, ys: &EvalPoint<T>) -> Matrix<T> {
    let (s, h) = ((sets.n - sets.b) as u32, sets.half() as u32);
    Matrix::from_fn(xs.len(), ys.len(), |i, j| {
        let (x, y) = (&xs.values()[i], &ys.values()[j]);
        let geometric = (0..=h).fold(T::zero(), |acc, t| acc + pow(y, t) * pow(x, h - t));
        pow(x, s) * pow(y, s) * (pow(y, h) - pow(x, h)) * geometric
    })
}

/// Compares `M_P(X) B M_P(Y)ᵀ` entrywise with
/// `x^{n-b} y^{n-b} (y^h - x^h)(y^{h+1} - x^{h+1}) / (y - x)`.
pub fn n_matrix_entry_check<T: Field>(a: usize, b: usize, n: usize, xs: &EvalPoint<T>, ys: &EvalPoint<T>) -> Result<bool> {
    let sets = IndexSets::new(a, b, n)?;
    if xs.values().iter().any(|x| ys.values().contains(x)) {
        return Err(Error::Precondition("the entry formula needs x_i != y_j".into()));
    }
    let bm = structured_b::<T>(a, b)?;
    let product = moment_matrix(&sets.p, xs)
        .matmul(bm.matrix())?
        .matmul(&moment_matrix(&sets.p, ys).transpose())?;
    let (s, h) = ((n - b) as u32, sets.half() as u32);
    for i in 0..xs.len() {
        for j in 0..ys.len() {
            let (x, y) = (&xs.values()[i], &ys.values()[j]);
            let closed = pow(x, s) * pow(y, s) * (pow(y, h) - pow(x, h)) * (pow(y, h + 1) - pow(x, h + 1))
                / (y.clone() - x.clone());
            if product[(i, j)] != closed {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn interval(lo: i64, hi: i64) -> Vec<usize> {
    (lo..=hi).map(|v| v as usize).collect()
}

fn union(mut lo: Vec<usize>, hi: Vec<usize>) -> Vec<usize> {
    lo.extend(hi);
    lo
}

/// `Pf([[N(X, X), M_I(X)], [-M_I(X)ᵀ, 0]])`.
fn bordered_n_pfaffian<T: Field>(sets: &IndexSets, pts: &EvalPoint<T>, border: &[usize]) -> Result<T> {
    let nn = n_matrix(sets, pts, pts);
    let m = moment_matrix(border, pts);
    let zero = Matrix::zeros(border.len(), border.len());
    let block = Matrix::from_blocks(&[vec![nn, m.clone()], vec![m.transpose().neg(), zero]])?;
    Ok(pfaffian(&SkewMatrix::new(block)?))
}

/// `(-1)^e det(M_{I1}(X)) det(M_{I2}(X)) / Δ(X)`.
fn signed_ratio<T: Field>(e: i64, pts: &EvalPoint<T>, i1: &[usize], i2: &[usize]) -> Result<T> {
    let d1 = determinant(&moment_matrix(i1, pts))?;
    let d2 = determinant(&moment_matrix(i2, pts))?;
    Ok(sign::<T>(e) * d1 * d2 / vandermonde(pts))
}

/// The two Pfaffian evaluations for the parity of `(a, b)`, each as
/// `(direct Pfaffian, closed form)`: first at `X_n`, then at `X_{n+1}`.
///
/// `pts` holds `X_n` or `X_{n+1}`; with `n` points, `x_{n+1}` is taken to be
/// one more than the sum of the absolute values of the others.
pub fn lemma10_sides<T: Field>(a: usize, b: usize, n: usize, pts: &EvalPoint<T>) -> Result<Vec<(T, T)>> {
    let sets = IndexSets::new(a, b, n)?;
    if !pts.is_distinct() {
        return Err(Error::RepeatedPoints);
    }
    let pts1 = match pts.len() {
        l if l == n + 1 => pts.clone(),
        l if l == n => {
            let extra = pts.values().iter().fold(T::one(), |acc, v| acc + v.abs());
            pts.with(extra)
        }
        l => return Err(Error::Dimension(format!("expected {n} or {} points, got {l}", n + 1))),
    };
    let pts0 = pts1.prefix(n);
    let (ni, ai, bi) = (n as i64, a as i64, b as i64);
    let s = ni - bi;
    let mut out = Vec::with_capacity(2);
    if a % 2 == 0 {
        let e = bi * s + s * (s - 1) / 2;
        let i1 = union(interval(0, ni - bi / 2 - 1), interval(ni + ai / 2 - bi / 2, ni + ai / 2 - 1));
        let i2 = union(interval(0, ni - bi / 2 - 1), interval(ni + ai / 2 - bi / 2 + 1, ni + ai / 2));
        out.push((bordered_n_pfaffian(&sets, &pts0, &sets.r)?, signed_ratio(e, &pts0, &i1, &i2)?));

        let e = bi * s + bi / 2 + (s + 1) * s / 2;
        let i1 = union(interval(0, ni - bi / 2), interval(ni + ai / 2 - bi / 2 + 1, ni + ai / 2));
        let i2 = union(interval(0, ni - bi / 2 - 1), interval(ni + ai / 2 - bi / 2, ni + ai / 2));
        out.push((bordered_n_pfaffian(&sets, &pts1, &sets.q)?, signed_ratio(e, &pts1, &i1, &i2)?));
    } else {
        let (bm, bp, ap) = ((bi - 1) / 2, (bi + 1) / 2, (ai + 1) / 2);
        let e = (bi - 1) * s + bm + (s + 1) * s / 2;
        let i1 = union(interval(0, ni - bm - 1), interval(ni + ap - bm, ni + ap - 1));
        let i2 = union(interval(0, ni - bp - 1), interval(ni + ap - bp, ni + ap - 1));
        out.push((bordered_n_pfaffian(&sets, &pts0, &sets.q)?, signed_ratio(e, &pts0, &i1, &i2)?));

        let am = (ai - 1) / 2;
        let e = (bi + 1) * s + s * (s - 1) / 2;
        let i1 = union(interval(0, ni - bp), interval(ni + am - bp + 1, ni + am));
        let i2 = union(interval(0, ni - bp), interval(ni + ap - bp + 1, ni + ap));
        out.push((bordered_n_pfaffian(&sets, &pts1, &sets.r)?, signed_ratio(e, &pts1, &i1, &i2)?));
    }
    Ok(out)
}

pub fn lemma10_check<T: Field>(a: usize, b: usize, n: usize, pts: &EvalPoint<T>) -> Result<bool> {
    Ok(lemma10_sides(a, b, n, pts)?.iter().all(|(l, r)| l == r))
}

/// Both sides of `theorem3_sides` at `x_1 = ... = x_n = 1`, `x_{n+1} = 0` with `n = (b+c+1)/2`,
/// which counts tilings of the hexagon with the off-centre puncture.
pub fn theorem4_specialization<T: Field>(a: usize, b: usize, c: usize) -> Result<(T, T)> {
    require_same_parity(a, b)?;
    if c % 2 == a % 2 {
        return Err(Error::Parity(format!("c must differ in parity from a and b, got ({a},{b},{c})")));
    }
    let n = (b + c + 1) / 2;
    let pts1 = EvalPoint::<T>::all_ones(n).with(T::zero());
    theorem3_sides(a, b, n, &pts1)
}

/// Both sides of `theorem3_sides` at `x_1 = ... = x_{n+1} = 1` with
/// `n = (b+c)/2`, which counts tilings of the centrally punctured hexagon.
pub fn theorem1_specialization<T: Field>(a: usize, b: usize, c: usize) -> Result<(T, T)> {
    if a % 2 != b % 2 || b % 2 != c % 2 {
        return Err(Error::Parity(format!("a, b, c must share parity, got ({a},{b},{c})")));
    }
    let n = (b + c) / 2;
    theorem3_sides(a, b, n, &EvalPoint::all_ones(n + 1))
}
