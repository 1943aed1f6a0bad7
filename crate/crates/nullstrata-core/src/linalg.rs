//! Exact rational vectors and the small dense linear algebra the engine
//! needs: Gram pairings, Gaussian elimination over `Q`, integer kernels and
//! Smith normal form over `Z`.
//!
//! Everything here is dimension-small (ambient rank at most ~8) so plain
//! `O(n^3)` elimination with arbitrary-precision rationals is the right
//! tool; there is no floating point anywhere in the engine.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Index;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational scalar.
pub type Rat = num_rational::BigRational;
/// Arbitrary-precision integer scalar.
pub type Int = BigInt;

/// Rational from an integer literal.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// Rational `n/d` in lowest terms.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

/// A vector in the ambient rational space `E = Q^r`.
///
/// Characters and cocharacters both live here, identified through the
/// Weyl-invariant inner product carried by [`Gram`].
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct QVec(Vec<Rat>);

impl QVec {
    pub fn new(coords: Vec<Rat>) -> Self {
        QVec(coords)
    }

    pub fn zero(dim: usize) -> Self {
        QVec(vec![Rat::zero(); dim])
    }

    /// Standard basis vector `e_i`.
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = vec![Rat::zero(); dim];
        v[i] = Rat::one();
        QVec(v)
    }

    /// Vector with integer coordinates, mostly for tests and tables.
    pub fn from_ints(coords: &[i64]) -> Self {
        QVec(coords.iter().map(|&c| rat(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rat] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rat::is_zero)
    }

    pub fn add(&self, other: &QVec) -> QVec {
        QVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &QVec) -> QVec {
        QVec(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> QVec {
        QVec(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, c: &Rat) -> QVec {
        QVec(self.0.iter().map(|a| a * c).collect())
    }

    /// All coordinates integral.
    pub fn is_integral(&self) -> bool {
        self.0.iter().all(Rat::is_integer)
    }

    /// The smallest positive scalar multiple with coprime integer
    /// coordinates, i.e. the primitive vector on the ray through `self`
    /// relative to the standard lattice `Z^r`. Returns `None` for zero.
    pub fn primitive_ray(&self) -> Option<QVec> {
        if self.is_zero() {
            return None;
        }
        let mut lcm = Int::one();
        for c in &self.0 {
            lcm = lcm.lcm(c.denom());
        }
        let ints: Vec<Int> = self.0.iter().map(|c| (c * Rat::from_integer(lcm.clone())).to_integer()).collect();
        let mut gcd = Int::zero();
        for c in &ints {
            gcd = gcd.gcd(c);
        }
        Some(QVec(ints.iter().map(|c| Rat::from_integer(c / &gcd)).collect()))
    }
}

impl Index<usize> for QVec {
    type Output = Rat;
    fn index(&self, i: usize) -> &Rat {
        &self.0[i]
    }
}

impl fmt::Display for QVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Symmetric positive-definite bilinear form on the ambient space,
/// normalised so that every short root of every simple component has
/// squared length 2.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Gram {
    dim: usize,
    entries: Vec<Rat>, // row-major, dim x dim
}

impl Gram {
    pub fn new(dim: usize, entries: Vec<Rat>) -> Result<Self> {
        if entries.len() != dim * dim {
            return Err(Error::Internal("gram matrix shape mismatch".to_string()));
        }
        let g = Gram { dim, entries };
        for i in 0..dim {
            for j in 0..i {
                if g.entry(i, j) != g.entry(j, i) {
                    return Err(Error::Internal("gram matrix not symmetric".to_string()));
                }
            }
        }
        Ok(g)
    }

    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![Rat::zero(); dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = Rat::one();
        }
        Gram { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rat {
        &self.entries[i * self.dim + j]
    }

    /// Bilinear pairing `(a, b)`.
    pub fn pair(&self, a: &QVec, b: &QVec) -> Rat {
        let mut acc = Rat::zero();
        for i in 0..self.dim {
            if a[i].is_zero() {
                continue;
            }
            let mut row = Rat::zero();
            for j in 0..self.dim {
                if !b[j].is_zero() {
                    row += self.entry(i, j) * &b[j];
                }
            }
            acc += &a[i] * row;
        }
        acc
    }

    /// Squared norm `(a, a)`.
    pub fn norm_sq(&self, a: &QVec) -> Rat {
        self.pair(a, a)
    }
}

/// Solve the square system `rows * x = rhs` by Gaussian elimination.
/// Returns `None` when the matrix is singular.
pub fn solve_square(rows: &[Vec<Rat>], rhs: &[Rat]) -> Option<Vec<Rat>> {
    let n = rows.len();
    let mut a: Vec<Vec<Rat>> = rows.to_vec();
    let mut b: Vec<Rat> = rhs.to_vec();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = a[col][col].recip();
        for j in col..n {
            a[col][j] = &a[col][j] * &inv;
        }
        b[col] = &b[col] * &inv;
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for j in col..n {
                    a[r][j] = &a[r][j] - &factor * &a[col][j];
                }
                b[r] = &b[r] - &factor * &b[col];
            }
        }
    }
    Some(b)
}

/// Express `target` in the span of `basis` (columns). Returns the unique
/// coefficient vector when `basis` is linearly independent and the system
/// is consistent, `None` when `target` is outside the span.
///
/// Callers only pass independent bases; a dependent basis makes the
/// coefficients non-unique and this routine returns an arbitrary solution.
pub fn in_span(basis: &[QVec], target: &QVec) -> Option<Vec<Rat>> {
    let rows = target.dim();
    let cols = basis.len();
    if cols == 0 {
        return target.is_zero().then(Vec::new);
    }
    // Augmented matrix [basis | target], reduced row echelon form.
    let mut a: Vec<Vec<Rat>> = (0..rows)
        .map(|r| {
            let mut row: Vec<Rat> = basis.iter().map(|v| v[r].clone()).collect();
            row.push(target[r].clone());
            row
        })
        .collect();
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut prow = 0;
    for col in 0..cols {
        let Some(pr) = (prow..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(prow, pr);
        let inv = a[prow][col].recip();
        for j in col..=cols {
            a[prow][j] = &a[prow][j] * &inv;
        }
        for r in 0..rows {
            if r != prow && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for j in col..=cols {
                    a[r][j] = &a[r][j] - &factor * &a[prow][j];
                }
            }
        }
        pivot_cols.push(col);
        prow += 1;
        if prow == rows {
            break;
        }
    }
    // Consistency: no row of the form (0 ... 0 | nonzero).
    for r in prow..rows {
        if !a[r][cols].is_zero() {
            return None;
        }
    }
    let mut x = vec![Rat::zero(); cols];
    for (r, &col) in pivot_cols.iter().enumerate() {
        x[col] = a[r][cols].clone();
    }
    Some(x)
}

/// True when the affine span of `points` has dimension `points.len() - 1`.
pub fn affinely_independent(points: &[QVec], gram_products: &dyn Fn(usize, usize) -> Rat) -> bool {
    // Rank of the bordered Gram matrix [(p_i, p_j) 1; 1 0] equals
    // points.len() + 1 exactly when the points are affinely independent
    // (positive definiteness of the form makes Gram rank = linear rank).
    bordered_gram_solve(points.len(), gram_products).is_some()
}

/// Solve the KKT system for the point of minimal squared norm on the
/// affine hull of `k` points, given their pairwise Gram products.
///
/// Returns the affine coefficients, or `None` when the points are
/// affinely dependent (singular system).
pub fn bordered_gram_solve(k: usize, gram_products: &dyn Fn(usize, usize) -> Rat) -> Option<Vec<Rat>> {
    // [ M   1 ] [c]   [0]
    // [ 1^T 0 ] [v] = [1]
    let n = k + 1;
    let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(n);
    for i in 0..k {
        let mut row: Vec<Rat> = (0..k).map(|j| gram_products(i, j)).collect();
        row.push(Rat::one());
        rows.push(row);
    }
    let mut last = vec![Rat::one(); k];
    last.push(Rat::zero());
    rows.push(last);
    let mut rhs = vec![Rat::zero(); k];
    rhs.push(Rat::one());
    let mut sol = solve_square(&rows, &rhs)?;
    sol.truncate(k);
    Some(sol)
}

/// Basis of the kernel `{ z in Z^m : a . z = 0 }` of one integer row.
///
/// The returned vectors extend to a basis of `Z^m`, so the kernel is a
/// direct summand (saturated sublattice). For `a = 0` the kernel is all of
/// `Z^m`.
pub fn integer_row_kernel(a: &[Int]) -> Vec<Vec<Int>> {
    let m = a.len();
    // Column-operate U (m x m unimodular) so that a * U = (g, 0, ..., 0).
    let mut u: Vec<Vec<Int>> = (0..m)
        .map(|i| (0..m).map(|j| if i == j { Int::one() } else { Int::zero() }).collect())
        .collect();
    let mut w: Vec<Int> = a.to_vec();
    for col in 1..m {
        // Zero w[col] against w[0] by the extended Euclidean algorithm.
        while !w[col].is_zero() {
            if w[0].is_zero() {
                w.swap(0, col);
                for row in u.iter_mut() {
                    row.swap(0, col);
                }
                break;
            }
            let q = &w[col] / &w[0];
            if !q.is_zero() {
                let wq = &w[0] * &q;
                w[col] -= wq;
                for row in u.iter_mut() {
                    let t = &row[0] * &q;
                    row[col] -= t;
                }
            }
            if w[col].is_zero() {
                break;
            }
            w.swap(0, col);
            for row in u.iter_mut() {
                row.swap(0, col);
            }
        }
    }
    if w[0].is_zero() && m > 0 {
        // a was the zero row: the kernel is everything.
        return u;
    }
    (1..m).map(|j| u.iter().map(|row| row[j].clone()).collect()).collect()
}

/// Elementary divisors (Smith normal form diagonal) of an integer matrix.
pub fn elementary_divisors(mat: &[Vec<Int>]) -> Vec<Int> {
    let mut a: Vec<Vec<Int>> = mat.to_vec();
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut divisors = Vec::new();
    let mut top = 0;
    let mut left = 0;
    while top < rows && left < cols {
        // Find a nonzero pivot of minimal absolute value.
        let mut pivot: Option<(usize, usize)> = None;
        for r in top..rows {
            for c in left..cols {
                if !a[r][c].is_zero()
                    && pivot.map_or(true, |(pr, pc)| a[r][c].abs() < a[pr][pc].abs())
                {
                    pivot = Some((r, c));
                }
            }
        }
        let Some((pr, pc)) = pivot else { break };
        a.swap(top, pr);
        for row in a.iter_mut() {
            row.swap(left, pc);
        }
        // Reduce the pivot row and column; repeat until clean.
        loop {
            let mut dirty = false;
            for r in top + 1..rows {
                if !a[r][left].is_zero() {
                    let q = div_round(&a[r][left], &a[top][left]);
                    if !q.is_zero() {
                        for c in left..cols {
                            let t = &a[top][c] * &q;
                            a[r][c] -= t;
                        }
                    }
                    if !a[r][left].is_zero() {
                        a.swap(top, r);
                        dirty = true;
                    }
                }
            }
            for c in left + 1..cols {
                if !a[top][c].is_zero() {
                    let q = div_round(&a[top][c], &a[top][left]);
                    if !q.is_zero() {
                        for row in a.iter_mut().skip(top) {
                            let t = &row[left] * &q;
                            row[c] -= t;
                        }
                    }
                    if !a[top][c].is_zero() {
                        for row in a.iter_mut() {
                            row.swap(left, c);
                        }
                        dirty = true;
                    }
                }
            }
            if !dirty {
                break;
            }
        }
        divisors.push(a[top][left].abs());
        top += 1;
        left += 1;
    }
    // Normalise divisibility d_1 | d_2 | ... by gcd/lcm sweeps.
    let mut changed = true;
    while changed {
        changed = false;
        for i in 1..divisors.len() {
            let (a0, b0) = (divisors[i - 1].clone(), divisors[i].clone());
            if !(&b0 % &a0).is_zero() {
                let g = a0.gcd(&b0);
                let l = a0.lcm(&b0);
                divisors[i - 1] = g;
                divisors[i] = l;
                changed = true;
            }
        }
    }
    divisors
}

fn div_round(a: &Int, b: &Int) -> Int {
    // Nearest-integer quotient, so remainders shrink strictly.
    let (q, r) = a.div_rem(b);
    if &r.abs() * 2 > b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solve_square_small() {
        let rows = vec![vec![rat(2), rat(1)], vec![rat(1), rat(3)]];
        let x = solve_square(&rows, &[rat(5), rat(10)]).unwrap();
        assert_eq!(x, vec![rat(1), rat(3)]);
        let singular = vec![vec![rat(1), rat(2)], vec![rat(2), rat(4)]];
        assert!(solve_square(&singular, &[rat(1), rat(2)]).is_none());
    }

    #[test]
    fn in_span_detects_membership() {
        let b = vec![QVec::from_ints(&[1, 0, 1]), QVec::from_ints(&[0, 1, 1])];
        let t = QVec::from_ints(&[2, 3, 5]);
        assert_eq!(in_span(&b, &t).unwrap(), vec![rat(2), rat(3)]);
        let outside = QVec::from_ints(&[0, 0, 1]);
        assert!(in_span(&b, &outside).is_none());
    }

    #[test]
    fn integer_kernel_is_saturated() {
        let a = vec![Int::from(6), Int::from(10), Int::from(15)];
        let ker = integer_row_kernel(&a);
        assert_eq!(ker.len(), 2);
        for v in &ker {
            let dot: Int = v.iter().zip(&a).map(|(x, y)| x * y).sum();
            assert!(dot.is_zero());
        }
        // Saturation: elementary divisors of the kernel basis are all 1.
        let mat: Vec<Vec<Int>> = ker.clone();
        let div = elementary_divisors(&mat);
        assert!(div.iter().all(|d| d.is_one()));
    }

    #[test]
    fn smith_divisors_classic() {
        let m = vec![
            vec![Int::from(2), Int::from(4), Int::from(4)],
            vec![Int::from(-6), Int::from(6), Int::from(12)],
            vec![Int::from(10), Int::from(4), Int::from(16)],
        ];
        let d = elementary_divisors(&m);
        assert_eq!(d, vec![Int::from(2), Int::from(2), Int::from(156)]);
    }

    #[test]
    fn primitive_ray_examples() {
        let v = QVec::new(vec![ratio(3, 2), ratio(-9, 4)]);
        let p = v.primitive_ray().unwrap();
        assert_eq!(p, QVec::from_ints(&[2, -3]));
        assert!(QVec::zero(3).primitive_ray().is_none());
    }
}
