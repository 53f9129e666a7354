//! Evaluation of symmetric functions at explicit points, and the index family
//! `R(a,b)` of partition pairs that the tiling sums range over.
//!
//! Schur functions are available through two independent determinant
//! formulas: the dual Jacobi–Trudi (Nägelsbach–Kostka) determinant in
//! elementary symmetric functions, [`schur_nk`], which tolerates repeated
//! points, and the bialternant quotient [`schur_bidet`], which needs distinct
//! points.

use crate::combinat::colex_subsets;
use crate::error::{Error, Result};
use crate::matrix::{determinant, Matrix};
use crate::partition::Partition;
use crate::scalar::{pow, Field, Scalar};

/// Values substituted for the variables `x_1, ..., x_n`.
#[derive(Debug, Clone, PartialEq)]
pub struct EvalPoint<T> {
    values: Vec<T>,
}

impl<T: Scalar> EvalPoint<T> {
    /// Any values, repeats allowed.
    pub fn new(values: Vec<T>) -> Self {
        EvalPoint { values }
    }

    /// Values that must be pairwise distinct.
    pub fn distinct(values: Vec<T>) -> Result<Self> {
        let p = EvalPoint { values };
        if p.is_distinct() {
            Ok(p)
        } else {
            Err(Error::RepeatedPoints)
        }
    }

    /// `x_1 = ... = x_n = 1`.
    pub fn all_ones(n: usize) -> Self {
        EvalPoint::new(vec![T::one(); n])
    }

    pub fn from_ints(values: &[i64]) -> Self {
        EvalPoint::new(values.iter().map(|&v| T::from_int(v)).collect())
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn is_distinct(&self) -> bool {
        let v = &self.values;
        (0..v.len()).all(|i| ((i + 1)..v.len()).all(|j| v[i] != v[j]))
    }

    /// The first `n` values.
    pub fn prefix(&self, n: usize) -> EvalPoint<T> {
        EvalPoint::new(self.values[..n].to_vec())
    }

    /// This point set with one more value appended.
    pub fn with(&self, extra: T) -> EvalPoint<T> {
        let mut values = self.values.clone();
        values.push(extra);
        EvalPoint::new(values)
    }
}

/// `e_0, ..., e_n` at `pts`.
pub fn elementary_all<T: Scalar>(pts: &EvalPoint<T>) -> Vec<T> {
    let n = pts.len();
    let mut e = vec![T::zero(); n + 1];
    e[0] = T::one();
    for (done, x) in pts.values().iter().enumerate() {
        for s in (1..=done + 1).rev() {
            e[s] = e[s].clone() + x.clone() * e[s - 1].clone();
        }
    }
    e
}

/// The elementary symmetric function `e_s` at `pts`; zero for `s < 0` or `s > n`.
pub fn elementary_sym<T: Scalar>(s: i64, pts: &EvalPoint<T>) -> T {
    if s < 0 || s as usize > pts.len() {
        return T::zero();
    }
    elementary_all(pts).swap_remove(s as usize)
}

/// Schur function via the dual Jacobi–Trudi determinant
/// `det_{1<=i,j<=m}(e_{λ'_i - i + j})` with `m = max(1, λ_1)`.
pub fn schur_nk<T: Field>(p: &Partition, pts: &EvalPoint<T>) -> T {
    let e = elementary_all(pts);
    let conj = p.conjugate();
    let m = p.largest().max(1);
    let entry = |s: i64| -> T {
        if s < 0 || s as usize >= e.len() {
            T::zero()
        } else {
            e[s as usize].clone()
        }
    };
    let mat = Matrix::from_fn(m, m, |i, j| entry(conj.part(i + 1) as i64 - i as i64 + j as i64));
    determinant(&mat).expect("square by construction")
}

/// The moment matrix `M_I(X)`: rows indexed by points, columns by exponents,
/// entry `x_k^{i_l}`.
pub fn moment_matrix<T: Scalar>(exponents: &[usize], pts: &EvalPoint<T>) -> Matrix<T> {
    let powers: Vec<Vec<T>> = pts
        .values()
        .iter()
        .map(|x| exponents.iter().map(|&e| pow(x, e as u32)).collect())
        .collect();
    Matrix::from_fn(pts.len(), exponents.len(), |r, c| powers[r][c].clone())
}

/// `Δ(X) = prod_{i<j} (x_j - x_i)`, the determinant of `M_{[0,n-1]}(X)`.
pub fn vandermonde<T: Scalar>(pts: &EvalPoint<T>) -> T {
    let v = pts.values();
    let mut acc = T::one();
    for i in 0..v.len() {
        for j in (i + 1)..v.len() {
            acc = acc * (v[j].clone() - v[i].clone());
        }
    }
    acc
}

/// The ascending exponent set `{λ_{n+1-h} + h - 1}` encoding `λ` in `n` variables.
pub fn shifted_exponents(p: &Partition, n: usize) -> Vec<usize> {
    (1..=n).map(|h| p.part(n + 1 - h) + h - 1).collect()
}

/// Schur function as the quotient `det(M_J(X)) / Δ(X)`. Zero when `λ` has
/// more parts than there are variables.
pub fn schur_bidet<T: Field>(p: &Partition, pts: &EvalPoint<T>) -> Result<T> {
    if !pts.is_distinct() {
        return Err(Error::RepeatedPoints);
    }
    let n = pts.len();
    if p.len() > n {
        return Ok(T::zero());
    }
    let num = determinant(&moment_matrix(&shifted_exponents(p, n), pts))?;
    Ok(num / vandermonde(pts))
}

/// Schur function by whichever formula applies: the bialternant for distinct
/// points, the dual Jacobi–Trudi determinant otherwise.
pub fn schur<T: Field>(p: &Partition, pts: &EvalPoint<T>) -> T {
    if pts.is_distinct() {
        schur_bidet(p, pts).expect("points checked distinct")
    } else {
        schur_nk(p, pts)
    }
}

/// Index data `(k; i_1 < ... < i_k < i_{k+1} = 0 < ... < i_{a+1})`, with all
/// entries in `[-(a+b)/2, (a+b)/2]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RabIndex {
    /// Number of negative entries; the zero sits at position `k+1` (1-based).
    pub k: usize,
    pub i: Vec<i64>,
}

impl RabIndex {
    /// `i_l`, 1-based.
    pub fn at(&self, l: usize) -> i64 {
        self.i[l - 1]
    }
}

/// A pair `(λ, μ)` of `R(a,b)` together with the index it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RabPair {
    pub a: usize,
    pub b: usize,
    pub lambda: Partition,
    pub mu: Partition,
    pub source: RabIndex,
}

fn require_same_parity(a: usize, b: usize) -> Result<()> {
    if a % 2 != b % 2 {
        return Err(Error::Parity(format!("a and b must share parity, got ({a},{b})")));
    }
    Ok(())
}

/// Every admissible [`RabIndex`] for `(a, b)`: `k` ascending, then the negative
/// entries as a colex-ordered subset, then the positive entries likewise.
pub fn rab_indices(a: usize, b: usize) -> Result<Vec<RabIndex>> {
    require_same_parity(a, b)?;
    let half = (a + b) / 2;
    let mut out = Vec::new();
    for k in 0..=a {
        let negatives = colex_subsets(half, k);
        let positives = colex_subsets(half, a - k);
        for neg in &negatives {
            for pos in &positives {
                let mut i: Vec<i64> = neg.iter().map(|&t| t as i64 - half as i64).collect();
                i.push(0);
                i.extend(pos.iter().map(|&t| t as i64 + 1));
                out.push(RabIndex { k, i });
            }
        }
    }
    Ok(out)
}

/// Maps an index to its partition pair through the conjugate formulas
/// `λ'_h = (b-a)/2 + i_{a+1-h+[a+1-h >= k+1]} + h` and
/// `μ'_h = (b-a)/2 - i_h + h - 1`.
pub fn rab_pair(a: usize, b: usize, idx: &RabIndex) -> RabPair {
    let shift = (b as i64 - a as i64) / 2;
    let k = idx.k;
    let lambda_conj: Vec<usize> = (1..=a)
        .map(|h| {
            let pos = a + 1 - h;
            let pos = if pos > k { pos + 1 } else { pos };
            let v = shift + idx.at(pos) + h as i64;
            usize::try_from(v).expect("conjugate part is nonnegative")
        })
        .collect();
    let mu_conj: Vec<usize> = (1..=a + 1)
        .map(|h| {
            let v = shift - idx.at(h) + h as i64 - 1;
            usize::try_from(v).expect("conjugate part is nonnegative")
        })
        .collect();
    let lambda_conj = Partition::from_decreasing(&lambda_conj).expect("weakly decreasing");
    let mu_conj = Partition::from_decreasing(&mu_conj).expect("weakly decreasing");
    RabPair {
        a,
        b,
        lambda: lambda_conj.conjugate(),
        mu: mu_conj.conjugate(),
        source: idx.clone(),
    }
}

/// All pairs of `R(a,b)` in [`rab_indices`] order.
pub fn generate_rab(a: usize, b: usize) -> Result<Vec<RabPair>> {
    Ok(rab_indices(a, b)?.iter().map(|idx| rab_pair(a, b, idx)).collect())
}

/// Checks the structural description of a pair through the sets
/// `J = {λ_{b+2-h} + h - 1}` and `J' = {μ_{b+1-h} + h - 1}`: the centre
/// `(a+b)/2` lies in `J`, and `J'` is the reflection `j -> a+b-j` of the rest of `J`.
pub fn lemma8_check(pair: &RabPair) -> bool {
    let (a, b) = (pair.a, pair.b);
    if (a + b) % 2 == 1 || pair.lambda.len() > b + 1 || pair.mu.len() > b {
        return false;
    }
    let centre = ((a + b) / 2) as i64;
    let j: Vec<i64> = (1..=b + 1)
        .map(|h| (pair.lambda.part(b + 2 - h) + h - 1) as i64)
        .collect();
    let j_prime: Vec<i64> = (1..=b).map(|h| (pair.mu.part(b + 1 - h) + h - 1) as i64).collect();
    if !j.contains(&centre) {
        return false;
    }
    let mut reflected: Vec<i64> = j
        .iter()
        .filter(|&&v| v != centre)
        .map(|&v| (a + b) as i64 - v)
        .collect();
    reflected.sort_unstable();
    let mut jp = j_prime;
    jp.sort_unstable();
    reflected == jp
}

/// Partitions `λ` appearing in the expansion of `s_{(s^m)} · s_{(t^n)}` for `m <= n`:
/// `λ_i + λ_{m+n-i+1} = s+t` for `i <= m`, `λ_m >= max(s,t)`, `λ_{m+1..n} = t`.
pub fn rect_product_shapes(s: usize, t: usize, m: usize, n: usize) -> Vec<Partition> {
    assert!(m <= n, "rectangle product shapes need m <= n");
    let lo = s.max(t);
    let hi = s + t;
    let mut out = Vec::new();
    // weakly decreasing heads λ_1..λ_m in [lo, hi]
    fn heads(len: usize, lo: usize, hi: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        let top = cur.last().copied().unwrap_or(hi);
        for v in (lo..=top).rev() {
            cur.push(v);
            heads(len, lo, hi, cur, out);
            cur.pop();
        }
    }
    let mut hs = Vec::new();
    if lo <= hi {
        heads(m, lo, hi, &mut Vec::new(), &mut hs);
    }
    for head in hs {
        let mut parts = vec![0; m + n];
        for (i, &v) in head.iter().enumerate() {
            parts[i] = v;
            parts[m + n - 1 - i] = hi - v;
        }
        for p in parts.iter_mut().take(n).skip(m) {
            *p = t;
        }
        if let Some(p) = Partition::from_decreasing(&parts) {
            out.push(p);
        }
    }
    out
}

/// Evaluates both sides of the rectangular product expansion at `pts`.
pub fn rect_product_sides<T: Field>(
    s: usize,
    t: usize,
    m: usize,
    n: usize,
    pts: &EvalPoint<T>,
) -> Result<(T, T)> {
    if m > n {
        return Err(Error::Precondition(format!("need m <= n, got m={m}, n={n}")));
    }
    let lhs = schur(&Partition::rectangle(s, m), pts) * schur(&Partition::rectangle(t, n), pts);
    let rhs = rect_product_shapes(s, t, m, n)
        .iter()
        .fold(T::zero(), |acc, p| acc + schur(p, pts));
    Ok((lhs, rhs))
}

/// `true` when `s_{(s^m)} · s_{(t^n)}` equals the sum over [`rect_product_shapes`] at `pts`.
pub fn rect_product_decomposition_check<T: Field>(
    s: usize,
    t: usize,
    m: usize,
    n: usize,
    pts: &EvalPoint<T>,
) -> Result<bool> {
    let (lhs, rhs) = rect_product_sides(s, t, m, n, pts)?;
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    type Q = BigRational;

    fn q(v: i64) -> Q {
        Q::from_integer(v.into())
    }

    fn pts(v: &[i64]) -> EvalPoint<Q> {
        EvalPoint::from_ints(v)
    }

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn elementary_examples() {
        assert_eq!(elementary_sym(1, &pts(&[2, 3])), q(5));
        assert_eq!(elementary_sym(2, &EvalPoint::<Q>::all_ones(4)), q(6));
        assert_eq!(elementary_sym(5, &pts(&[1, 2, 3])), q(0));
        assert_eq!(elementary_sym(-1, &pts(&[1, 2, 3])), q(0));
        assert_eq!(elementary_sym(0, &pts(&[])), q(1));
        assert_eq!(elementary_sym(3, &pts(&[2, 3, 5])), q(30));
    }

    /// Semistandard tableaux of shape λ with entries in 1..=n, by brute force.
    fn ssyt_count(p: &Partition, n: usize) -> u64 {
        let cells: Vec<(usize, usize)> = p
            .parts()
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
            .collect();
        fn go(p: &Partition, cells: &[(usize, usize)], idx: usize, fill: &mut Vec<Vec<usize>>, n: usize) -> u64 {
            if idx == cells.len() {
                return 1;
            }
            let (r, c) = cells[idx];
            let mut lo = 1;
            if c > 0 {
                lo = lo.max(fill[r][c - 1]);
            }
            if r > 0 {
                lo = lo.max(fill[r - 1][c] + 1);
            }
            let mut total = 0;
            for v in lo..=n {
                fill[r][c] = v;
                total += go(p, cells, idx + 1, fill, n);
            }
            fill[r][c] = 0;
            total
        }
        let mut fill: Vec<Vec<usize>> = p.parts().iter().map(|&l| vec![0; l]).collect();
        go(p, &cells, 0, &mut fill, n)
    }

    #[test]
    fn schur_nk_examples() {
        assert_eq!(schur_nk(&part(&[1]), &pts(&[2, 3])), q(5));
        assert_eq!(schur_nk(&part(&[2, 1]), &EvalPoint::<Q>::all_ones(3)), q(8));
        assert_eq!(ssyt_count(&part(&[2, 1]), 3), 8);
        assert_eq!(schur_nk(&part(&[]), &pts(&[4, 7])), q(1));
        for shape in [vec![2, 2], vec![3, 1], vec![2, 1, 1], vec![3, 2, 1]] {
            let p = part(&shape);
            for n in 1..=4 {
                assert_eq!(schur_nk(&p, &EvalPoint::<Q>::all_ones(n)), q(ssyt_count(&p, n) as i64), "{p} n={n}");
            }
        }
    }

    #[test]
    fn schur_bidet_examples() {
        assert_eq!(schur_bidet(&part(&[1]), &pts(&[2, 3])).unwrap(), q(5));
        assert_eq!(schur_bidet(&part(&[2]), &pts(&[1, 2])).unwrap(), q(7));
        assert_eq!(schur_bidet(&part(&[]), &pts(&[2, 3, 5])).unwrap(), q(1));
        assert_eq!(schur_bidet(&part(&[1, 1, 1]), &pts(&[2, 3])).unwrap(), q(0));
        assert_eq!(schur_bidet(&part(&[1]), &pts(&[2, 2])), Err(Error::RepeatedPoints));
    }

    #[test]
    fn schur_routes_agree_on_fixed_points() {
        let x = EvalPoint::new(vec![q(2), Q::new(1.into(), 3.into()), q(-5), Q::new((-7).into(), 2.into())]);
        for shape in [vec![1], vec![2, 1], vec![3, 3, 1], vec![4, 2, 2, 1], vec![2, 2, 2, 2]] {
            let p = part(&shape);
            assert_eq!(schur_nk(&p, &x), schur_bidet(&p, &x).unwrap(), "{p}");
        }
    }

    #[test]
    fn generic_over_float() {
        let x = EvalPoint::new(vec![0.5f64, 2.0, 3.0]);
        let a = schur_nk(&part(&[2, 1]), &x);
        let b = schur_bidet(&part(&[2, 1]), &x).unwrap();
        assert!((a - b).abs() < 1e-9);
    }

    #[test]
    fn rab_one_one() {
        let pairs = generate_rab(1, 1).unwrap();
        assert_eq!(pairs.len(), 2);
        assert_eq!((pairs[0].lambda.clone(), pairs[0].mu.clone()), (part(&[1, 1]), part(&[])));
        assert_eq!((pairs[1].lambda.clone(), pairs[1].mu.clone()), (part(&[]), part(&[2])));
        assert_eq!(pairs[0].source, RabIndex { k: 0, i: vec![0, 1] });
        assert_eq!(pairs[1].source, RabIndex { k: 1, i: vec![-1, 0] });
    }

    #[test]
    fn rab_counts() {
        assert_eq!(generate_rab(2, 2).unwrap().len(), 6);
        assert_eq!(generate_rab(3, 5).unwrap().len(), 56);
        assert!(matches!(generate_rab(1, 2), Err(Error::Parity(_))));
        for a in 1..=8usize {
            for b in 1..=8usize {
                if a % 2 != b % 2 {
                    continue;
                }
                let pairs = generate_rab(a, b).unwrap();
                assert_eq!(BigInt::from(pairs.len()), crate::combinat::binomial((a + b) as i64, a as i64));
                let mut seen = std::collections::HashSet::new();
                for p in &pairs {
                    assert!(seen.insert((p.lambda.clone(), p.mu.clone())), "duplicate pair for ({a},{b})");
                    assert!(p.lambda.len() <= b + 1 && p.mu.len() <= b);
                    assert!(p.lambda.largest() <= a && p.mu.largest() <= a + 1);
                }
            }
        }
    }

    #[test]
    fn rab_order_is_deterministic() {
        let idx = rab_indices(2, 2).unwrap();
        let ks: Vec<usize> = idx.iter().map(|r| r.k).collect();
        assert_eq!(ks, vec![0, 1, 1, 1, 1, 2]);
        assert_eq!(idx[0].i, vec![0, 1, 2]);
        assert_eq!(idx[1].i, vec![-2, 0, 1]);
        assert_eq!(idx[2].i, vec![-2, 0, 2]);
        assert_eq!(idx[3].i, vec![-1, 0, 1]);
        assert_eq!(idx[5].i, vec![-2, -1, 0]);
    }

    #[test]
    fn lemma8_holds_on_generated_pairs() {
        for a in 1..=6usize {
            for b in 1..=6usize {
                if a % 2 != b % 2 {
                    continue;
                }
                for pair in generate_rab(a, b).unwrap() {
                    assert!(lemma8_check(&pair), "({a},{b}) {:?}", pair.source);
                }
            }
        }
    }

    #[test]
    fn lemma8_rejects_corrupted_pair() {
        let mut pair = generate_rab(1, 1).unwrap().remove(0);
        pair.lambda = part(&[1]);
        pair.mu = part(&[1]);
        assert!(!lemma8_check(&pair));
    }

    #[test]
    fn rect_products() {
        assert!(rect_product_decomposition_check(1, 1, 1, 1, &pts(&[2, 3])).unwrap());
        let (l, r) = rect_product_sides(1, 1, 1, 1, &pts(&[2, 3])).unwrap();
        assert_eq!((l, r), (q(25), q(25)));
        assert!(rect_product_decomposition_check(2, 1, 1, 2, &pts(&[1, 2, 3])).unwrap());
        assert!(rect_product_decomposition_check(3, 2, 2, 2, &pts(&[7])).unwrap());
        assert!(rect_product_decomposition_check(2, 3, 1, 3, &pts(&[1, -2, 3, 5])).unwrap());
        assert!(rect_product_decomposition_check(2, 2, 2, 3, &EvalPoint::<Q>::all_ones(4)).unwrap());
        assert!(rect_product_decomposition_check(1, 1, 2, 1, &pts(&[1, 2])).is_err());
    }

    #[test]
    fn rect_shapes_small() {
        let shapes = rect_product_shapes(1, 1, 1, 1);
        assert_eq!(shapes, vec![part(&[2]), part(&[1, 1])]);
    }

    #[test]
    fn rectangular_all_ones_counts_boxes() {
        use crate::boxcount::{macmahon_box, BoxDims};
        for w in 0..=3usize {
            for h in 0..=3usize {
                for n in h.max(1)..=6 {
                    let v = schur_nk(&Partition::rectangle(w, h), &EvalPoint::<Q>::all_ones(n));
                    let expect = macmahon_box(BoxDims::new(w, h, n - h));
                    assert_eq!(v, Q::from_integer(expect), "w={w} h={h} n={n}");
                }
            }
        }
    }
}
