//! Hesselink strata of a module character, by recursion on Levi rank.
//!
//! A stratum is labelled by a pair `(lambda, k)`: a primitive dominant
//! lattice cocharacter and a positive integer. The label is kept exactly
//! when the graded piece `V(lambda, k)` carries semistable vectors for the
//! smaller reductive group generated by the torus orthogonal to `lambda`
//! and the derived Levi — the Kirwan–Ness criterion. Semistability is in
//! turn decided by the recursion itself: semistable vectors exist exactly
//! when the sub-nullcone is a proper subvariety, i.e. when the degree of
//! its count polynomial is less than the dimension of the piece.
//!
//! States carry the chain of orthogonality constraints as plain lattice
//! data: live roots, a saturated cocharacter sublattice, and the inherited
//! chamber. The ambient space and the invariant form never change.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::geomopt::{candidate_directions, project_orthogonal};
use crate::linalg::{in_span, integer_row_kernel, rat, QVec, Rat};
use crate::poly::IntPoly;
use crate::repchar::ModuleCharacter;
use crate::rootsys::{degrees_of_factors, poincare_from_degrees, subsystem_simples, Family, RootDatum};

/// A reductive subgroup of the ambient group cut out by a chain of
/// cocharacter orthogonality constraints, with its root and lattice data.
#[derive(Clone, Debug)]
pub struct GroupState {
    datum: Arc<RootDatum>,
    constraints: Vec<QVec>,
    live_roots: Vec<QVec>,
    live_simples: Vec<QVec>,
    sublattice: Vec<QVec>,
    levi_type: Vec<(Family, usize)>,
}

impl GroupState {
    /// The ambient group itself: no constraints.
    pub fn ambient(datum: Arc<RootDatum>) -> Self {
        let live_roots: Vec<QVec> = datum.roots().to_vec();
        let live_simples = datum.simple_roots().to_vec();
        let sublattice = datum.cochar_basis().to_vec();
        let levi_type = datum.components().iter().map(|c| (c.family, c.rank)).collect();
        GroupState { datum, constraints: Vec::new(), live_roots, live_simples, sublattice, levi_type }
    }

    pub fn datum(&self) -> &Arc<RootDatum> {
        &self.datum
    }

    pub fn constraints(&self) -> &[QVec] {
        &self.constraints
    }

    pub fn live_roots(&self) -> &[QVec] {
        &self.live_roots
    }

    pub fn live_simples(&self) -> &[QVec] {
        &self.live_simples
    }

    pub fn sublattice(&self) -> &[QVec] {
        &self.sublattice
    }

    pub fn levi_type(&self) -> &[(Family, usize)] {
        &self.levi_type
    }

    /// Rank of the current maximal torus.
    pub fn rank(&self) -> usize {
        self.sublattice.len()
    }

    /// `dim = #live roots + rank`.
    pub fn dim_group(&self) -> usize {
        self.live_roots.len() + self.rank()
    }

    /// Coordinates of `v` in the sublattice basis, when `v` lies in the
    /// lattice (all coordinates integral).
    pub fn lattice_coords(&self, v: &QVec) -> Option<Vec<Rat>> {
        let coords = in_span(&self.sublattice, v)?;
        coords.iter().all(Rat::is_integer).then_some(coords)
    }

    /// Append the constraint `lambda`: live roots become those orthogonal
    /// to it, and the sublattice its integer kernel. The rank drops by
    /// exactly one.
    pub fn levi_perp(&self, lambda: &QVec) -> Result<GroupState> {
        if lambda.is_zero() {
            return Err(Error::InvalidInput("levi_perp requires a nonzero cocharacter".into()));
        }
        if self.lattice_coords(lambda).is_none() {
            return Err(Error::InvalidInput(format!(
                "{lambda} is not in the state's cocharacter sublattice"
            )));
        }
        let gram = self.datum.gram();
        let live_roots: Vec<QVec> = self
            .live_roots
            .iter()
            .filter(|alpha| gram.pair(alpha, lambda).is_zero())
            .cloned()
            .collect();

        // Integer kernel of the pairing row (b_i, lambda) over the old
        // basis; scaling clears denominators without changing the kernel.
        let pair_row: Vec<Rat> = self.sublattice.iter().map(|b| gram.pair(b, lambda)).collect();
        let mut lcm = BigInt::one();
        for p in &pair_row {
            lcm = lcm.lcm(p.denom());
        }
        let int_row: Vec<BigInt> =
            pair_row.iter().map(|p| (p * Rat::from_integer(lcm.clone())).to_integer()).collect();
        let kernel = integer_row_kernel(&int_row);
        if kernel.len() + 1 != self.sublattice.len() {
            return Err(Error::Internal("constraint did not drop the rank by one".into()));
        }
        let sublattice: Vec<QVec> = kernel
            .iter()
            .map(|coords| {
                let mut v = QVec::zero(self.datum.rank());
                for (b, c) in self.sublattice.iter().zip(coords) {
                    if !c.is_zero() {
                        v = v.add(&b.scale(&Rat::from_integer(c.clone())));
                    }
                }
                v
            })
            .collect();

        let live_simples = subsystem_simples(&self.datum, &live_roots);
        let levi_type = self.datum.classify_subsystem(&live_roots)?;
        let mut constraints = self.constraints.clone();
        constraints.push(lambda.clone());
        Ok(GroupState {
            datum: self.datum.clone(),
            constraints,
            live_roots,
            live_simples,
            sublattice,
            levi_type,
        })
    }

    /// `#{live roots a : (a, lambda) >= 0} + rank`.
    pub fn parabolic_dimension(&self, lambda: &QVec) -> usize {
        let gram = self.datum.gram();
        let nonneg =
            self.live_roots.iter().filter(|a| !gram.pair(a, lambda).is_negative()).count();
        nonneg + self.rank()
    }

    /// Candidate stratum directions for a character in this state.
    pub fn candidate_directions(
        &self,
        ch: &ModuleCharacter,
        extra_bound: usize,
    ) -> Result<BTreeSet<QVec>> {
        candidate_directions(
            &ch.nonzero_support(),
            self.datum.gram(),
            &self.live_simples,
            &self.sublattice,
            self.rank().max(extra_bound),
        )
    }

    /// `dim G - dim P(lambda) + n + N`, recomputed from the stratum's
    /// stored layer dimensions.
    pub fn stratum_dimension(&self, s: &Stratum) -> usize {
        self.dim_group() - self.parabolic_dimension(&s.lambda) + (s.n + s.n_above) as usize
    }
}

/// Weights of `ch` pairing to exactly `k` with `lambda`, projected
/// orthogonally to `lambda`; the character of the graded piece
/// `V(lambda, k)` as a module for the orthogonal Levi.
pub fn graded_piece(
    ch: &ModuleCharacter,
    lambda: &QVec,
    k: i64,
    datum: &RootDatum,
) -> ModuleCharacter {
    let gram = datum.gram();
    let target = rat(k);
    ModuleCharacter::from_weights(
        ch.weights()
            .iter()
            .filter(|(w, _)| gram.pair(w, lambda) == target)
            .map(|(w, m)| (project_orthogonal(w, lambda, gram), *m))
            .collect(),
    )
}

/// Weights of `ch` pairing at least `k` with `lambda` (not projected):
/// the weight support of the saturation.
pub fn saturation(
    ch: &ModuleCharacter,
    lambda: &QVec,
    k: i64,
    datum: &RootDatum,
) -> Vec<(QVec, u64)> {
    let gram = datum.gram();
    let bound = rat(k);
    ch.weights()
        .iter()
        .filter(|(w, _)| gram.pair(w, lambda) >= bound)
        .cloned()
        .collect()
}

/// One Hesselink stratum with all derived data.
#[derive(Clone, Debug)]
pub struct Stratum {
    /// Primitive dominant cocharacter (ambient coordinates).
    pub lambda: QVec,
    /// `lambda` in the coordinates of the cocharacter lattice basis.
    pub lambda_coords: Vec<BigInt>,
    /// Instability degree `m`.
    pub k: i64,
    /// `lambda / k`, the canonical optimal virtual cocharacter.
    pub blade_label: QVec,
    /// `k lambda / (lambda, lambda)`, the min-norm point of every blade
    /// member's Newton polytope.
    pub mu: QVec,
    /// `dim V(lambda, k)`.
    pub n: u64,
    /// `sum over i > k of dim V(lambda, i)`.
    pub n_above: u64,
    /// Dimension of the parabolic attached to `lambda`.
    pub dim_parabolic: usize,
    /// `dim G - dim P + n + N`.
    pub dim_stratum: usize,
    /// Flag-variety factor `|G^F / P(lambda)^F|` as a polynomial.
    pub f: IntPoly,
    /// Nullcone count of the graded piece for the orthogonal Levi.
    pub sub_poly: IntPoly,
    /// `f * t^N * (t^n - sub_poly)`, the stratum's point count.
    pub contribution: IntPoly,
    /// Squared Hesselink norm invariant `k^2 / (lambda, lambda)`.
    pub hesselink_norm_sq: Rat,
}

/// Engine configuration.
#[derive(Clone, Debug)]
pub struct EngineConfig {
    /// Extra candidate-subset size beyond the state rank (paranoia runs).
    pub subset_bound: usize,
    /// Memoize sub-nullcone polynomials by canonical subproblem form.
    pub memo_enabled: bool,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig { subset_bound: 0, memo_enabled: true }
    }
}

/// Stratification engine with a memo table for isomorphic subproblems.
///
/// The memo key is the canonical form of (Gram matrix, live roots, weight
/// multiset) written in sublattice coordinates, so a hit is only possible
/// when the whole abstract subproblem coincides; the polynomial is an
/// invariant of that data.
#[derive(Debug, Default)]
pub struct Engine {
    config: EngineConfig,
    memo: alloc::collections::BTreeMap<String, IntPoly>,
}

impl Engine {
    pub fn new(config: EngineConfig) -> Self {
        Engine { config, memo: Default::default() }
    }

    pub fn config(&self) -> &EngineConfig {
        &self.config
    }

    /// Number of memoized subproblems.
    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    /// Export the memo table as canonical-key / coefficient pairs.
    pub fn export_memo(&self) -> impl Iterator<Item = (&String, &IntPoly)> {
        self.memo.iter()
    }

    /// Install a previously exported entry.
    pub fn import_memo(&mut self, key: String, poly: IntPoly) {
        self.memo.insert(key, poly);
    }

    /// The nullcone count polynomial `n_V(t)` of a character in a state:
    /// `1 + sum over strata of f * t^N * (t^n - n_sub)`.
    pub fn nullcone_poly(&mut self, state: &GroupState, ch: &ModuleCharacter) -> Result<IntPoly> {
        Ok(self.analyze(state, ch, false)?.0)
    }

    /// The full stratum list, sorted by decreasing dimension, then by
    /// lattice coordinates of `lambda`, then by `k`.
    pub fn enumerate_strata(
        &mut self,
        state: &GroupState,
        ch: &ModuleCharacter,
    ) -> Result<Vec<Stratum>> {
        let (_, mut strata) = self.analyze(state, ch, true)?;
        strata.sort_by(|a, b| {
            b.dim_stratum
                .cmp(&a.dim_stratum)
                .then_with(|| a.lambda_coords.cmp(&b.lambda_coords))
                .then_with(|| a.k.cmp(&b.k))
        });
        // Distinct labels are a structural invariant of the recursion.
        let labels: BTreeSet<(Vec<BigInt>, i64)> =
            strata.iter().map(|s| (s.lambda_coords.clone(), s.k)).collect();
        if labels.len() != strata.len() {
            return Err(Error::Internal("stratum labels are not pairwise distinct".into()));
        }
        Ok(strata)
    }

    fn analyze(
        &mut self,
        state: &GroupState,
        ch: &ModuleCharacter,
        want_strata: bool,
    ) -> Result<(IntPoly, Vec<Stratum>)> {
        let support = ch.nonzero_support();
        if state.rank() == 0 || support.is_empty() {
            // Rank zero means a trivial group: only the origin is
            // unstable. A character with zero weights only is everywhere
            // semistable away from the origin for the same reason.
            return Ok((IntPoly::one(), Vec::new()));
        }
        let key = if self.config.memo_enabled { Some(memo_key(state, ch)?) } else { None };
        if !want_strata {
            if let Some(k) = &key {
                if let Some(p) = self.memo.get(k) {
                    return Ok((p.clone(), Vec::new()));
                }
            }
        }

        let gram = state.datum().gram();
        let candidates = state.candidate_directions(ch, self.config.subset_bound)?;
        let full_degrees = degrees_of_factors(state.levi_type());

        let mut poly = IntPoly::one();
        let mut strata: Vec<Stratum> = Vec::new();
        for lambda in candidates {
            // Attained positive pairing levels; integrality is forced by
            // the character lattice.
            let mut levels: BTreeSet<i64> = BTreeSet::new();
            let mut pairings: Vec<(Rat, u64)> = Vec::with_capacity(ch.weights().len());
            for (w, m) in ch.weights() {
                let p = gram.pair(w, &lambda);
                if p >= Rat::one() {
                    if !p.is_integer() {
                        return Err(Error::Internal(format!(
                            "weight pairing {p} with lattice cocharacter is not integral"
                        )));
                    }
                    let val = p.to_integer().to_i64().ok_or_else(|| {
                        Error::Capacity("weight pairing overflows i64".into())
                    })?;
                    levels.insert(val);
                    pairings.push((p, *m));
                } else {
                    pairings.push((p, *m));
                }
            }
            if levels.is_empty() {
                continue;
            }
            let sub_state = state.levi_perp(&lambda)?;
            let levi_degrees = degrees_of_factors(sub_state.levi_type());
            for k in levels {
                let piece = graded_piece(ch, &lambda, k, state.datum());
                let n = piece.dim();
                let (sub_poly, _) = self.analyze(&sub_state, &piece, false)?;
                // Kirwan–Ness nonemptiness: semistable vectors exist in
                // the piece exactly when its nullcone is proper.
                let proper = sub_poly.degree().is_some_and(|d| (d as u64) < n);
                if !proper {
                    continue;
                }
                let n_above: u64 = pairings
                    .iter()
                    .filter(|(p, _)| *p > rat(k))
                    .map(|(_, m)| m)
                    .sum();
                let f = poincare_from_degrees(&full_degrees, &levi_degrees)?;
                let shifted = &IntPoly::t_pow(n as usize) - &sub_poly;
                let contribution = &(&f * &IntPoly::t_pow(n_above as usize)) * &shifted;
                poly = &poly + &contribution;
                if want_strata {
                    let lambda_norm = gram.norm_sq(&lambda);
                    let k_rat = rat(k);
                    let lambda_coords = state
                        .datum()
                        .cochar_lattice_coords(&lambda)
                        .ok_or_else(|| Error::Internal("stratum label outside the lattice".into()))?;
                    let dim_parabolic = state.parabolic_dimension(&lambda);
                    let dim_stratum =
                        state.dim_group() - dim_parabolic + (n + n_above) as usize;
                    if contribution.degree() != Some(dim_stratum) {
                        return Err(Error::Internal(
                            "stratum contribution degree disagrees with its dimension".into(),
                        ));
                    }
                    strata.push(Stratum {
                        blade_label: lambda.scale(&k_rat.recip()),
                        mu: lambda.scale(&(&k_rat / &lambda_norm)),
                        hesselink_norm_sq: &k_rat * &k_rat / &lambda_norm,
                        lambda: lambda.clone(),
                        lambda_coords,
                        k,
                        n,
                        n_above,
                        dim_parabolic,
                        dim_stratum,
                        f,
                        sub_poly,
                        contribution,
                    });
                }
            }
        }
        // Every contribution vanishes at t = 1 (the bracket does, by
        // induction), so the count of the one-point field is always 1.
        if poly.eval_i64(1) != 1.into() {
            return Err(Error::Internal("nullcone count at t = 1 is not 1".into()));
        }
        if let Some(k) = key {
            self.memo.insert(k, poly.clone());
        }
        Ok((poly, strata))
    }
}

/// Canonical subproblem form: the Gram matrix, live roots and weights of
/// the state written in sublattice coordinates. Two states with equal keys
/// present identical abstract data to the recursion.
fn memo_key(state: &GroupState, ch: &ModuleCharacter) -> Result<String> {
    use core::fmt::Write;
    let gram = state.datum().gram();
    let basis = state.sublattice();
    let mut out = String::from("v1");
    out.push_str("|g:");
    for bi in basis {
        for bj in basis {
            let _ = write!(out, "{},", gram.pair(bi, bj));
        }
    }
    let mut root_coords: Vec<String> = Vec::with_capacity(state.live_roots().len());
    for r in state.live_roots() {
        root_coords.push(span_coords(basis, r)?);
    }
    root_coords.sort_unstable();
    out.push_str("|r:");
    for rc in root_coords {
        out.push_str(&rc);
        out.push(';');
    }
    out.push_str("|w:");
    let mut weight_coords: Vec<String> = Vec::with_capacity(ch.weights().len());
    for (w, m) in ch.weights() {
        let mut s = span_coords(basis, w)?;
        let _ = write!(s, "*{m}");
        weight_coords.push(s);
    }
    weight_coords.sort_unstable();
    for wc in weight_coords {
        out.push_str(&wc);
        out.push(';');
    }
    Ok(out)
}

fn span_coords(basis: &[QVec], v: &QVec) -> Result<String> {
    use core::fmt::Write;
    let coords = in_span(basis, v).ok_or_else(|| {
        Error::Internal("state vector escapes the sublattice span".into())
    })?;
    let mut s = String::new();
    for c in coords {
        let _ = write!(s, "{c},");
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{elementary_divisors, ratio};
    use crate::repchar::{adjoint_character, dual_character};
    use crate::rootsys::{build_root_datum, TypeSpec};
    use alloc::vec;

    fn ambient(family: Family, rank: usize) -> GroupState {
        GroupState::ambient(Arc::new(build_root_datum(&TypeSpec::simple(family, rank)).unwrap()))
    }

    fn theta_vee_a2(state: &GroupState) -> QVec {
        state.datum().coroot(&QVec::from_ints(&[1, 1]))
    }

    #[test]
    fn levi_perp_examples() {
        let a2 = ambient(Family::A, 2);
        // theta^vee kills every root.
        let sub = a2.levi_perp(&theta_vee_a2(&a2)).unwrap();
        assert!(sub.live_roots().is_empty());
        assert_eq!(sub.rank(), 1);
        assert!(sub.levi_type().is_empty());

        // The (2,1) coroot direction leaves an A1.
        let dir = a2.datum().cochar_basis()[0]
            .scale(&rat(2))
            .add(&a2.datum().cochar_basis()[1]);
        let sub = a2.levi_perp(&dir).unwrap();
        assert_eq!(sub.levi_type(), &[(Family::A, 1)]);
        assert_eq!(sub.live_roots().len(), 2);

        // A1 with its coroot: rank-zero state.
        let a1 = ambient(Family::A, 1);
        let sub = a1.levi_perp(&QVec::from_ints(&[1])).unwrap();
        assert_eq!(sub.rank(), 0);
        assert!(sub.live_roots().is_empty());

        assert!(a1.levi_perp(&QVec::zero(1)).is_err());
    }

    #[test]
    fn sublattice_stays_saturated() {
        let b2 = ambient(Family::B, 2);
        let lambda = b2.datum().cochar_basis()[0].clone();
        let sub = b2.levi_perp(&lambda).unwrap();
        // Express the new basis in cochar-lattice coordinates; elementary
        // divisors all one means the sublattice is a direct summand.
        let mat: Vec<Vec<crate::linalg::Int>> = sub
            .sublattice()
            .iter()
            .map(|v| b2.datum().cochar_lattice_coords(v).unwrap())
            .collect();
        let div = elementary_divisors(&mat);
        assert!(div.iter().all(|d| d.is_one()));
        // Every live coroot lies in the sublattice.
        for alpha in sub.live_roots() {
            let covee = b2.datum().coroot(alpha);
            assert!(sub.lattice_coords(&covee).is_some());
        }
    }

    #[test]
    fn graded_piece_examples() {
        let a2 = ambient(Family::A, 2);
        let adj = adjoint_character(a2.datum());
        let tv = theta_vee_a2(&a2);
        let k2 = graded_piece(&adj, &tv, 2, a2.datum());
        assert_eq!(k2.dim(), 1);
        assert_eq!(k2.weights(), &[(QVec::zero(2), 1)]);
        let k1 = graded_piece(&adj, &tv, 1, a2.datum());
        assert_eq!(k1.dim(), 2);
        let expected = ModuleCharacter::from_weights(vec![
            (QVec::new(vec![ratio(1, 2), ratio(-1, 2)]), 1),
            (QVec::new(vec![ratio(-1, 2), ratio(1, 2)]), 1),
        ]);
        assert_eq!(k1, expected);
        assert_eq!(graded_piece(&adj, &tv, 5, a2.datum()).dim(), 0);
    }

    #[test]
    fn saturation_examples() {
        let a2 = ambient(Family::A, 2);
        let adj = adjoint_character(a2.datum());
        let tv = theta_vee_a2(&a2);
        assert_eq!(saturation(&adj, &tv, 1, a2.datum()).len(), 3);
        assert_eq!(saturation(&adj, &tv, 2, a2.datum()).len(), 1);
        assert!(saturation(&adj, &tv, 3, a2.datum()).is_empty());
    }

    #[test]
    fn a1_adjoint_single_stratum() {
        let a1 = ambient(Family::A, 1);
        let adj = adjoint_character(a1.datum());
        let mut engine = Engine::default();
        let strata = engine.enumerate_strata(&a1, &adj).unwrap();
        assert_eq!(strata.len(), 1);
        let s = &strata[0];
        assert_eq!(s.lambda, QVec::from_ints(&[1]));
        assert_eq!(s.k, 2);
        assert_eq!(s.blade_label, QVec::new(vec![ratio(1, 2)]));
        assert_eq!(s.dim_stratum, 2);
        assert_eq!(s.contribution, IntPoly::from_ints(&[-1, 0, 1]));
        assert_eq!(engine.nullcone_poly(&a1, &adj).unwrap(), IntPoly::t_pow(2));
    }

    #[test]
    fn a2_adjoint_two_strata() {
        let a2 = ambient(Family::A, 2);
        let adj = adjoint_character(a2.datum());
        let mut engine = Engine::default();
        let strata = engine.enumerate_strata(&a2, &adj).unwrap();
        assert_eq!(strata.len(), 2);
        let tv = theta_vee_a2(&a2);
        let regular = &strata[0];
        assert_eq!(regular.lambda, tv);
        assert_eq!(regular.k, 1);
        assert_eq!(regular.dim_stratum, 6);
        assert_eq!(regular.contribution, IntPoly::from_ints(&[0, 1, 0, -1, -1, 0, 1]));
        assert_eq!(regular.sub_poly, IntPoly::from_ints(&[-1, 2]));
        let minimal = &strata[1];
        assert_eq!(minimal.lambda, tv);
        assert_eq!(minimal.k, 2);
        assert_eq!(minimal.dim_stratum, 4);
        assert_eq!(minimal.contribution, IntPoly::from_ints(&[-1, -1, 0, 1, 1]));
        assert_eq!(engine.nullcone_poly(&a2, &adj).unwrap(), IntPoly::t_pow(6));
    }

    #[test]
    fn zero_weight_character_has_no_strata() {
        let a2 = ambient(Family::A, 2);
        let ch = ModuleCharacter::from_weights(vec![(QVec::zero(2), 5)]);
        let mut engine = Engine::default();
        assert!(engine.enumerate_strata(&a2, &ch).unwrap().is_empty());
        assert_eq!(engine.nullcone_poly(&a2, &ch).unwrap(), IntPoly::one());
    }

    #[test]
    fn stratum_dimension_formula() {
        let a2 = ambient(Family::A, 2);
        let adj = adjoint_character(a2.datum());
        let mut engine = Engine::default();
        for s in engine.enumerate_strata(&a2, &adj).unwrap() {
            assert_eq!(
                s.dim_stratum,
                a2.dim_group() - s.dim_parabolic + (s.n + s.n_above) as usize
            );
            // mu is the min-norm certificate: |mu|^2 = k^2/(lambda,lambda).
            let gram = a2.datum().gram();
            assert_eq!(gram.norm_sq(&s.mu), s.hesselink_norm_sq);
            // Saturation weights all pair >= |mu|^2 with mu, minimum attained.
            let sat = saturation(&adj, &s.lambda, s.k, a2.datum());
            let min = sat
                .iter()
                .map(|(w, _)| gram.pair(w, &s.mu))
                .min()
                .unwrap();
            assert_eq!(min, s.hesselink_norm_sq);
        }
    }

    #[test]
    fn dual_character_same_strata_for_adjoint() {
        let g2 = ambient(Family::G, 2);
        let adj = adjoint_character(g2.datum());
        let dual = dual_character(&adj);
        let mut engine = Engine::default();
        let a = engine.enumerate_strata(&g2, &adj).unwrap();
        let b = engine.enumerate_strata(&g2, &dual).unwrap();
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.lambda, y.lambda);
            assert_eq!(x.k, y.k);
            assert_eq!(x.dim_stratum, y.dim_stratum);
            assert_eq!(x.contribution, y.contribution);
        }
    }

    #[test]
    fn memo_reuse_changes_nothing() {
        let a3 = ambient(Family::A, 3);
        let adj = adjoint_character(a3.datum());
        let mut with_memo = Engine::default();
        let p1 = with_memo.nullcone_poly(&a3, &adj).unwrap();
        assert!(with_memo.memo_len() > 0);
        let mut without =
            Engine::new(EngineConfig { memo_enabled: false, ..Default::default() });
        let p2 = without.nullcone_poly(&a3, &adj).unwrap();
        assert_eq!(p1, p2);
        assert_eq!(without.memo_len(), 0);
    }

    #[test]
    fn raised_subset_bound_changes_nothing() {
        let b2 = ambient(Family::B, 2);
        let adj = adjoint_character(b2.datum());
        let mut plain = Engine::default();
        let mut paranoid = Engine::new(EngineConfig { subset_bound: 3, ..Default::default() });
        assert_eq!(
            plain.nullcone_poly(&b2, &adj).unwrap(),
            paranoid.nullcone_poly(&b2, &adj).unwrap()
        );
    }
}
