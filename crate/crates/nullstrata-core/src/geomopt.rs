//! Exact convex geometry: minimal-norm points of Newton polytopes,
//! optimal torus cocharacters, and candidate generation for stratum
//! labels.
//!
//! The min-norm kernel is Wolfe's active-set method (Wolfe 1976) run in
//! exact rational arithmetic: every affine minimizer is obtained from a
//! bordered Gram solve, so optimality is a decidable equality, not a
//! tolerance. Input sets are small (at most a few hundred weights), which
//! keeps the corral solves tiny.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{bordered_gram_solve, in_span, Gram, QVec, Rat};
use crate::rootsys::make_dominant_in;

/// Minimal-norm point of a convex hull, with its convexity certificate.
#[derive(Clone, Debug)]
pub struct MinNormResult {
    /// The unique point of minimal norm in the hull.
    pub point: QVec,
    /// Convex coefficients over a supporting subset of the input
    /// (index into the input slice, coefficient). Nonnegative, summing to
    /// one, reproducing `point` exactly.
    pub certificate: Vec<(usize, Rat)>,
    /// Whether the hull contains the origin.
    pub is_zero: bool,
}

impl MinNormResult {
    /// Exact validity: the certificate reconstructs the point and the
    /// first-order optimality inequality `(p, x - p) >= 0` holds for every
    /// input point.
    pub fn check(&self, points: &[QVec], gram: &Gram) -> bool {
        let mut sum = Rat::zero();
        let mut rebuilt = QVec::zero(self.point.dim());
        for (i, c) in &self.certificate {
            if c.is_negative() {
                return false;
            }
            sum += c;
            rebuilt = rebuilt.add(&points[*i].scale(c));
        }
        if !sum.is_one() || rebuilt != self.point {
            return false;
        }
        let pp = gram.norm_sq(&self.point);
        points.iter().all(|x| gram.pair(&self.point, x) >= pp)
    }
}

/// The unique minimal-norm point of `conv(points)` under the given form.
///
/// Wolfe's algorithm: maintain a corral (an affinely independent subset
/// whose affine minimizer lies in its convex hull), alternately add the
/// most violating input point and prune the corral along the segment
/// toward the new affine minimizer. Exact arithmetic makes termination a
/// theorem rather than a tolerance.
pub fn min_norm_point(points: &[QVec], gram: &Gram) -> Result<MinNormResult> {
    if points.is_empty() {
        return Err(Error::InvalidInput("min_norm_point requires a nonempty set".into()));
    }
    let dim = points[0].dim();
    // Fast path: the origin is an input point.
    if let Some(i) = points.iter().position(QVec::is_zero) {
        return Ok(MinNormResult {
            point: QVec::zero(dim),
            certificate: alloc::vec![(i, Rat::one())],
            is_zero: true,
        });
    }

    let products: Vec<Vec<Rat>> = points
        .iter()
        .map(|a| points.iter().map(|b| gram.pair(a, b)).collect())
        .collect();

    // Start from a point of minimal norm.
    let start = (0..points.len())
        .min_by(|&a, &b| products[a][a].cmp(&products[b][b]))
        .unwrap();
    let mut corral: Vec<usize> = alloc::vec![start];
    let mut coeffs: Vec<Rat> = alloc::vec![Rat::one()];
    let mut x = points[start].clone();

    for _ in 0..10_000 {
        let xx = gram.norm_sq(&x);
        // Linear minimization over the inputs.
        let j = (0..points.len())
            .min_by(|&a, &b| gram.pair(&x, &points[a]).cmp(&gram.pair(&x, &points[b])))
            .unwrap();
        if gram.pair(&x, &points[j]) >= xx {
            let certificate: Vec<(usize, Rat)> = corral
                .iter()
                .cloned()
                .zip(coeffs.iter().cloned())
                .filter(|(_, c)| !c.is_zero())
                .collect();
            let result = MinNormResult { is_zero: x.is_zero(), point: x, certificate };
            debug_assert!(result.check(points, gram));
            return Ok(result);
        }
        corral.push(j);
        coeffs.push(Rat::zero());

        // Minor cycles: move to the affine minimizer of the corral,
        // dropping points whose coefficient hits zero on the way.
        loop {
            let b = bordered_gram_solve(corral.len(), &|r, c| {
                products[corral[r]][corral[c]].clone()
            })
            .ok_or_else(|| Error::Internal("corral became affinely dependent".into()))?;
            if b.iter().all(|c| !c.is_negative()) {
                coeffs = b;
                x = combine(points, &corral, &coeffs, dim);
                break;
            }
            // Largest step toward b keeping all coefficients nonnegative.
            let mut theta = Rat::one();
            for (a, bb) in coeffs.iter().zip(&b) {
                if bb < a {
                    let t = a / (a - bb);
                    if t < theta {
                        theta = t;
                    }
                }
            }
            let one_minus = Rat::one() - &theta;
            coeffs = coeffs
                .iter()
                .zip(&b)
                .map(|(a, bb)| a * &one_minus + bb * &theta)
                .collect();
            // Drop every index pinned at zero; affine independence is
            // preserved under removal.
            let mut kept_corral = Vec::with_capacity(corral.len());
            let mut kept_coeffs = Vec::with_capacity(coeffs.len());
            for (idx, c) in corral.iter().zip(coeffs.iter()) {
                if !c.is_zero() {
                    kept_corral.push(*idx);
                    kept_coeffs.push(c.clone());
                }
            }
            corral = kept_corral;
            coeffs = kept_coeffs;
        }
    }
    Err(Error::Internal("min_norm_point failed to converge".into()))
}

fn combine(points: &[QVec], corral: &[usize], coeffs: &[Rat], dim: usize) -> QVec {
    let mut x = QVec::zero(dim);
    for (idx, c) in corral.iter().zip(coeffs) {
        if !c.is_zero() {
            x = x.add(&points[*idx].scale(c));
        }
    }
    x
}

/// Outcome of the torus-level instability test on a weight support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TorusOptimal {
    /// The origin lies in the Newton polytope: no destabilising torus
    /// cocharacter exists.
    Semistable,
    /// The support is uniformly unstable for the torus.
    Unstable {
        /// The unique primitive lattice cocharacter on the min-norm ray.
        lambda: QVec,
        /// `min over the support of (chi, lambda)`.
        m: Rat,
        /// The min-norm point of the Newton polytope.
        mu: QVec,
    },
}

/// Optimal torus cocharacter for a weight support within the given
/// cocharacter sublattice: semistable iff the origin lies in the convex
/// hull, otherwise the primitive lattice vector on the ray of the
/// min-norm point.
pub fn torus_optimal(support: &[QVec], gram: &Gram, sublattice: &[QVec]) -> Result<TorusOptimal> {
    if support.is_empty() {
        return Ok(TorusOptimal::Semistable);
    }
    let mn = min_norm_point(support, gram)?;
    if mn.is_zero {
        return Ok(TorusOptimal::Semistable);
    }
    let lambda = primitive_in_lattice(&mn.point, sublattice)?;
    let m = crate::repchar::m_value(gram, support, &lambda)
        .ok_or_else(|| Error::Internal("nonempty support lost its minimum".into()))?;
    Ok(TorusOptimal::Unstable { lambda, m, mu: mn.point })
}

/// The primitive lattice vector on the positive ray through `v`, in the
/// lattice spanned by `basis`. Internal error if the ray misses the
/// rational span (impossible for inputs produced by the engine).
pub fn primitive_in_lattice(v: &QVec, basis: &[QVec]) -> Result<QVec> {
    let coords = in_span(basis, v).ok_or_else(|| {
        Error::Internal("vector is not in the span of the cocharacter sublattice".into())
    })?;
    let coord_vec = QVec::new(coords);
    let prim = coord_vec
        .primitive_ray()
        .ok_or_else(|| Error::Internal("zero vector has no primitive multiple".into()))?;
    let mut out = QVec::zero(v.dim());
    for (i, b) in basis.iter().enumerate() {
        if !prim[i].is_zero() {
            out = out.add(&b.scale(&prim[i]));
        }
    }
    Ok(out)
}

/// Orthogonal projection `v - ((v,l)/(l,l)) l` away from `l`.
pub fn project_orthogonal(v: &QVec, lambda: &QVec, gram: &Gram) -> QVec {
    let ll = gram.norm_sq(lambda);
    assert!(!ll.is_zero(), "projection direction must be nonzero");
    let c = gram.pair(v, lambda) / ll;
    v.sub(&lambda.scale(&c))
}

/// Candidate stratum directions for a weight support: the projections of
/// the origin onto the affine hulls of all affinely independent subsets
/// of at most `subset_bound` nonzero weights, made dominant for the
/// chamber and primitive in the sublattice.
///
/// This is a guaranteed superset of the genuine stratum directions: every
/// min-norm point of every sub-support lies in the relative interior of a
/// face spanned by at most `rank` affinely independent weights. Spurious
/// candidates are pruned later by the semistability recursion.
pub fn candidate_directions(
    support: &[QVec],
    gram: &Gram,
    chamber: &[QVec],
    sublattice: &[QVec],
    subset_bound: usize,
) -> Result<BTreeSet<QVec>> {
    let mut out = BTreeSet::new();
    let n = support.len();
    if n == 0 || subset_bound == 0 {
        return Ok(out);
    }
    let products: Vec<Vec<Rat>> = support
        .iter()
        .map(|a| support.iter().map(|b| gram.pair(a, b)).collect())
        .collect();
    let bound = subset_bound.min(n);
    let mut subset: Vec<usize> = Vec::with_capacity(bound);
    candidate_rec(
        support, &products, chamber, sublattice, gram, bound, 0, &mut subset, &mut out,
    )?;
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn candidate_rec(
    support: &[QVec],
    products: &[Vec<Rat>],
    chamber: &[QVec],
    sublattice: &[QVec],
    gram: &Gram,
    bound: usize,
    from: usize,
    subset: &mut Vec<usize>,
    out: &mut BTreeSet<QVec>,
) -> Result<()> {
    if !subset.is_empty() {
        if let Some(coeffs) =
            bordered_gram_solve(subset.len(), &|r, c| products[subset[r]][subset[c]].clone())
        {
            let mut p = QVec::zero(support[0].dim());
            for (pos, &idx) in subset.iter().enumerate() {
                if !coeffs[pos].is_zero() {
                    p = p.add(&support[idx].scale(&coeffs[pos]));
                }
            }
            if !p.is_zero() {
                let (dom, _) = make_dominant_in(gram, chamber, &p);
                out.insert(primitive_in_lattice(&dom, sublattice)?);
            }
        } else if subset.len() == 1 {
            return Err(Error::Internal("singleton subset cannot be degenerate".into()));
        }
        // An affinely dependent subset shares its affine hull with a
        // proper subset, so skipping it loses no candidates.
    }
    if subset.len() == bound {
        return Ok(());
    }
    for i in from..support.len() {
        subset.push(i);
        candidate_rec(support, products, chamber, sublattice, gram, bound, i + 1, subset, out)?;
        subset.pop();
    }
    Ok(())
}
