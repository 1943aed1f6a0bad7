//! Brute-force finite-field verification: ground truth for the counting
//! recursion at desk scale.
//!
//! Fields are built from fixed data with no external algebra system:
//! prime fields by modular arithmetic, and
//! `F_4 = F_2[x]/(x^2+x+1)`, `F_8 = F_2[x]/(x^3+x+1)`,
//! `F_9 = F_3[x]/(x^2+1)` by the stated irreducible polynomials, with
//! elements encoded base-p by coefficient vectors. All operations go
//! through precomputed tables.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::geomopt::min_norm_point;
use crate::linalg::{Gram, QVec};

/// Arithmetic tables for a small finite field.
#[derive(Clone, Debug)]
pub struct Fq {
    q: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>, // inv[0] is unused
}

/// Supported prime powers.
pub const SUPPORTED_Q: [u32; 7] = [2, 3, 4, 5, 7, 8, 9];

impl Fq {
    /// Build the field with `q` elements, `q` in
    /// {2, 3, 4, 5, 7, 8, 9}.
    pub fn new(q: u32) -> Result<Fq> {
        let (p, deg, modulus): (usize, usize, &[u8]) = match q {
            2 => (2, 1, &[]),
            3 => (3, 1, &[]),
            5 => (5, 1, &[]),
            7 => (7, 1, &[]),
            4 => (2, 2, &[1, 1, 1]),  // x^2 + x + 1
            8 => (2, 3, &[1, 1, 0, 1]), // x^3 + x + 1
            9 => (3, 2, &[1, 0, 1]),  // x^2 + 1
            _ => {
                return Err(Error::InvalidInput(format!(
                    "field size {q} not supported (use one of {SUPPORTED_Q:?})"
                )))
            }
        };
        let q = q as usize;
        let digits = |e: usize| -> Vec<usize> {
            let mut v = Vec::with_capacity(deg);
            let mut e = e;
            for _ in 0..deg {
                v.push(e % p);
                e /= p;
            }
            v
        };
        let pack = |v: &[usize]| -> usize {
            v.iter().rev().fold(0, |acc, &c| acc * p + c)
        };
        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        let mut neg = vec![0u8; q];
        for a in 0..q {
            let da = digits(a);
            neg[a] = pack(&da.iter().map(|&c| (p - c) % p).collect::<Vec<_>>()) as u8;
            for b in 0..q {
                let db = digits(b);
                let sum: Vec<usize> = da.iter().zip(&db).map(|(&x, &y)| (x + y) % p).collect();
                add[a * q + b] = pack(&sum) as u8;
                // Polynomial product reduced by the modulus.
                let mut prod = vec![0usize; 2 * deg];
                for (i, &x) in da.iter().enumerate() {
                    for (j, &y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                for i in (deg..2 * deg).rev() {
                    let c = prod[i];
                    if c == 0 {
                        continue;
                    }
                    prod[i] = 0;
                    // x^i = x^{i-deg} * (x^deg) with x^deg = -(low part of
                    // the modulus), coefficientwise.
                    for (k, &mk) in modulus.iter().enumerate().take(deg) {
                        prod[i - deg + k] = (prod[i - deg + k] + c * ((p - mk as usize) % p)) % p;
                    }
                }
                mul[a * q + b] = pack(&prod[..deg]) as u8;
            }
        }
        let mut inv = vec![0u8; q];
        for a in 1..q {
            for b in 1..q {
                if mul[a * q + b] == 1 {
                    inv[a] = b as u8;
                    break;
                }
            }
            if inv[a] == 0 {
                return Err(Error::Internal(format!("no inverse for element {a} in F_{q}")));
            }
        }
        Ok(Fq { q, add, mul, neg, inv })
    }

    pub fn q(&self) -> usize {
        self.q
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn inv(&self, a: u8) -> u8 {
        self.inv[a as usize]
    }
}

/// Result of one brute-force enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FFCount {
    pub q: u32,
    /// Number of field points in the nullcone (the zero element always
    /// counts).
    pub total: u64,
    /// Counts per class label (Jordan type, multiplicity profile, or
    /// support pattern); the class counts sum to `total`.
    pub by_class: BTreeMap<String, u64>,
}

/// Count nilpotent trace-zero `n x n` matrices over `F_q`, classified by
/// Jordan type. Nilpotency of the full matrix algebra element is the
/// closed-form instability test for type A.
pub fn ff_nilpotent_count(n: usize, q: u32) -> Result<FFCount> {
    if !(2..=3).contains(&n) {
        return Err(Error::InvalidInput("matrix size must be 2 or 3".into()));
    }
    if q > 8 {
        return Err(Error::Capacity(format!("field size {q} above the enumeration bound 8")));
    }
    let field = Fq::new(q)?;
    let mut by_class: BTreeMap<String, u64> = BTreeMap::new();
    let mut total = 0u64;
    if n == 2 {
        // Entries (a, b; c, -a).
        for a in 0..field.q as u8 {
            for b in 0..field.q as u8 {
                for c in 0..field.q as u8 {
                    let m = [a, b, c, field.neg(a)];
                    let m2 = mat2_mul(&field, &m, &m);
                    if m2 != [0, 0, 0, 0] {
                        continue;
                    }
                    total += 1;
                    let label = if m == [0, 0, 0, 0] { "1,1" } else { "2" };
                    *by_class.entry(label.into()).or_insert(0) += 1;
                }
            }
        }
    } else {
        // Eight free entries; the last diagonal entry closes the trace.
        let mut e = [0u8; 8];
        loop {
            let m = [
                e[0],
                e[1],
                e[2],
                e[3],
                e[4],
                e[5],
                e[6],
                e[7],
                field.neg(field.add(e[0], e[4])),
            ];
            let m2 = mat3_mul(&field, &m, &m);
            let m3 = mat3_mul(&field, &m2, &m);
            if m3 == [0; 9] {
                total += 1;
                let label = match mat3_rank(&field, &m) {
                    0 => "1,1,1",
                    1 => "2,1",
                    2 => "3",
                    _ => return Err(Error::Internal("nilpotent 3x3 matrix of rank 3".into())),
                };
                *by_class.entry(label.into()).or_insert(0) += 1;
            }
            if !advance(&mut e, field.q as u8) {
                break;
            }
        }
    }
    Ok(FFCount { q, total, by_class })
}

fn mat2_mul(f: &Fq, a: &[u8; 4], b: &[u8; 4]) -> [u8; 4] {
    let mut out = [0u8; 4];
    for i in 0..2 {
        for j in 0..2 {
            let mut acc = 0u8;
            for k in 0..2 {
                acc = f.add(acc, f.mul(a[i * 2 + k], b[k * 2 + j]));
            }
            out[i * 2 + j] = acc;
        }
    }
    out
}

fn mat3_mul(f: &Fq, a: &[u8; 9], b: &[u8; 9]) -> [u8; 9] {
    let mut out = [0u8; 9];
    for i in 0..3 {
        for j in 0..3 {
            let mut acc = 0u8;
            for k in 0..3 {
                acc = f.add(acc, f.mul(a[i * 3 + k], b[k * 3 + j]));
            }
            out[i * 3 + j] = acc;
        }
    }
    out
}

fn mat3_rank(f: &Fq, m: &[u8; 9]) -> usize {
    let mut a = *m;
    let mut rank = 0;
    for col in 0..3 {
        let Some(pivot) = (rank..3).find(|&r| a[r * 3 + col] != 0) else { continue };
        for j in 0..3 {
            a.swap(rank * 3 + j, pivot * 3 + j);
        }
        let inv = f.inv(a[rank * 3 + col]);
        for j in 0..3 {
            a[rank * 3 + j] = f.mul(a[rank * 3 + j], inv);
        }
        for r in 0..3 {
            if r != rank && a[r * 3 + col] != 0 {
                let factor = a[r * 3 + col];
                for j in 0..3 {
                    let t = f.mul(factor, a[rank * 3 + j]);
                    a[r * 3 + j] = f.sub(a[r * 3 + j], t);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn advance(digits: &mut [u8], q: u8) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < q {
            return true;
        }
        *d = 0;
    }
    false
}

/// Count binary forms of degree `d` over `F_q` in the nullcone of the
/// `SL_2` action: a form is a nullform exactly when some linear factor
/// over the algebraic closure has multiplicity above `d/2`. Such a factor
/// satisfies `(deg) * (mult) <= d`, so it is forced to be rational:
/// factoring over `F_q` plus the power of `y` at infinity decides
/// membership.
pub fn ff_binary_form_count(d: usize, q: u32) -> Result<FFCount> {
    if !(2..=4).contains(&d) {
        return Err(Error::InvalidInput("form degree must be 2, 3 or 4".into()));
    }
    if q > 5 {
        return Err(Error::Capacity(format!("field size {q} above the form bound 5")));
    }
    let field = Fq::new(q)?;
    let mut by_class: BTreeMap<String, u64> = BTreeMap::new();
    let mut total = 0u64;
    let mut coeffs = vec![0u8; d + 1]; // a_i x^i y^(d-i)
    loop {
        if let Some(label) = nullform_label(&field, &coeffs, d) {
            total += 1;
            *by_class.entry(label).or_insert(0) += 1;
        }
        if !advance(&mut coeffs, field.q as u8) {
            break;
        }
    }
    Ok(FFCount { q, total, by_class })
}

/// Multiplicity label of the over-half linear factor, if any.
fn nullform_label(f: &Fq, coeffs: &[u8], d: usize) -> Option<String> {
    if coeffs.iter().all(|&c| c == 0) {
        return Some("zero".into());
    }
    // Multiplicity of the factor at infinity: the power of y left after
    // dehomogenising, i.e. d minus the x-degree.
    let x_deg = coeffs.iter().rposition(|&c| c != 0).unwrap();
    let mut best = d - x_deg;
    // Rational roots of the dehomogenised polynomial, by repeated
    // synthetic division.
    for r in 0..f.q as u8 {
        let mut g: Vec<u8> = coeffs[..=x_deg].to_vec();
        let mut mult = 0;
        loop {
            if g.iter().all(|&c| c == 0) || eval_poly(f, &g, r) != 0 {
                break;
            }
            g = synthetic_div(f, &g, r);
            mult += 1;
        }
        best = best.max(mult);
    }
    (2 * best > d).then(|| format!("mult={best}"))
}

fn eval_poly(f: &Fq, g: &[u8], x: u8) -> u8 {
    let mut acc = 0u8;
    for &c in g.iter().rev() {
        acc = f.add(f.mul(acc, x), c);
    }
    acc
}

/// Divide by (x - r), assuming r is a root.
fn synthetic_div(f: &Fq, g: &[u8], r: u8) -> Vec<u8> {
    let mut out = vec![0u8; g.len() - 1];
    let mut carry = 0u8;
    for i in (1..g.len()).rev() {
        carry = f.add(g[i], f.mul(carry, r));
        out[i - 1] = carry;
    }
    out
}

/// Enumerate all vectors of a torus module over `F_q` and classify by
/// support pattern; a vector is unstable exactly when the origin is not
/// in the convex hull of the weights in its support (Hilbert–Mumford for
/// tori). The class labels are support bitstrings, lowest coordinate
/// first.
pub fn ff_torus_count(weights: &[(QVec, u64)], gram: &Gram, q: u32) -> Result<FFCount> {
    if q > 5 {
        return Err(Error::Capacity(format!("field size {q} above the torus bound 5")));
    }
    let field = Fq::new(q)?;
    let mut coord_weights: Vec<QVec> = Vec::new();
    for (w, m) in weights {
        for _ in 0..*m {
            coord_weights.push(w.clone());
        }
    }
    let dim = coord_weights.len();
    if dim > 12 {
        return Err(Error::Capacity(format!("torus module dimension {dim} above the bound 12")));
    }
    // Instability depends only on the support mask; decide each mask once.
    let mut unstable_mask = vec![false; 1 << dim];
    unstable_mask[0] = true; // the origin
    for mask in 1usize..(1 << dim) {
        let support: Vec<QVec> = (0..dim)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| coord_weights[i].clone())
            .collect();
        let distinct: Vec<QVec> = {
            let set: alloc::collections::BTreeSet<QVec> = support.into_iter().collect();
            set.into_iter().collect()
        };
        unstable_mask[mask] = !min_norm_point(&distinct, gram)?.is_zero;
    }
    // Literal enumeration of all q^dim vectors, tracking the mask.
    let mut per_mask = vec![0u64; 1 << dim];
    let mut digits = vec![0u8; dim];
    let mut mask = 0usize;
    loop {
        per_mask[mask] += 1;
        // Odometer with incremental mask maintenance.
        let mut i = 0;
        loop {
            if i == dim {
                break;
            }
            digits[i] += 1;
            if digits[i] == 1 {
                mask |= 1 << i;
            }
            if digits[i] < field.q as u8 {
                break;
            }
            digits[i] = 0;
            mask &= !(1 << i);
            i += 1;
        }
        if i == dim {
            break;
        }
    }
    let mut total = 0u64;
    let mut by_class = BTreeMap::new();
    for (mask, &count) in per_mask.iter().enumerate() {
        if unstable_mask[mask] && count > 0 {
            total += count;
            let label: String =
                (0..dim).map(|i| if mask & (1 << i) != 0 { '1' } else { '0' }).collect();
            by_class.insert(label, count);
        }
    }
    Ok(FFCount { q, total, by_class })
}

/// Map a Jordan type (partition of `n`, not all ones) to its Hesselink
/// stratum label `(lambda, k)` in type `A_{n-1}`: concatenate the strings
/// `p-1, p-3, ..., 1-p` over the parts, sort decreasingly into the
/// dominant chamber, and write half of that diagonal cocharacter as
/// `lambda / k` with `lambda` primitive in the coroot lattice.
///
/// Returns the coordinates of `lambda` in the simple coroot basis,
/// and `k`.
pub fn jordan_to_stratum(partition: &[usize]) -> Result<(Vec<i64>, i64)> {
    let n: usize = partition.iter().sum();
    if n < 2 || partition.iter().any(|&p| p == 0) {
        return Err(Error::InvalidInput("partition must have positive parts summing to >= 2".into()));
    }
    if partition.iter().all(|&p| p == 1) {
        return Err(Error::InvalidInput("the zero orbit carries no stratum label".into()));
    }
    let mut h: Vec<i64> = Vec::with_capacity(n);
    for &p in partition {
        let p = p as i64;
        let mut v = p - 1;
        while v >= 1 - p {
            h.push(v);
            v -= 2;
        }
    }
    h.sort_unstable_by(|a, b| b.cmp(a));
    // Coroot coordinates: partial sums of the diagonal entries.
    let mut coords: Vec<i64> = Vec::with_capacity(n - 1);
    let mut acc = 0i64;
    for &v in h.iter().take(n - 1) {
        acc += v;
        coords.push(acc);
    }
    let g = coords.iter().fold(0i64, |g, &c| g.gcd(&c));
    if g != 1 && g != 2 {
        return Err(Error::Internal(format!(
            "adapted cocharacter gcd {g} outside {{1,2}} for partition {partition:?}"
        )));
    }
    let lambda: Vec<i64> = coords.iter().map(|c| c / g).collect();
    Ok((lambda, 2 / g))
}
