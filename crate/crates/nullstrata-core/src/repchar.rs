//! Module characters: Weyl-invariant weight multisets.
//!
//! The character is the only representation-theoretic input the engine
//! needs — stratification and point counting of the nullcone of an
//! admissible module depend only on the dimensions of its weight spaces.
//! Explicit module vectors appear nowhere outside the finite-field oracle.
//!
//! Irreducible characters are produced by Freudenthal's recursive
//! multiplicity formula over exact rationals, cross-checked against the
//! Weyl dimension formula (the cross-check is mandatory, not optional).

use alloc::collections::BTreeMap;
use alloc::collections::BTreeSet;
use alloc::collections::VecDeque;
use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::{rat, Gram, QVec, Rat};
use crate::rootsys::{reflect, RootDatum};

/// Default cap on computed module dimensions.
pub const DEFAULT_DIM_BOUND: u64 = 100_000;

/// A finite multiset of weights with positive multiplicities, stored
/// sorted for deterministic output.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModuleCharacter {
    weights: Vec<(QVec, u64)>,
    dim: u64,
}

impl ModuleCharacter {
    /// Build from raw (weight, multiplicity) pairs; merges duplicates and
    /// drops zero multiplicities.
    pub fn from_weights(raw: Vec<(QVec, u64)>) -> Self {
        let mut map: BTreeMap<QVec, u64> = BTreeMap::new();
        for (w, m) in raw {
            if m > 0 {
                *map.entry(w).or_insert(0) += m;
            }
        }
        let weights: Vec<(QVec, u64)> = map.into_iter().collect();
        let dim = weights.iter().map(|(_, m)| m).sum();
        ModuleCharacter { weights, dim }
    }

    pub fn weights(&self) -> &[(QVec, u64)] {
        &self.weights
    }

    pub fn dim(&self) -> u64 {
        self.dim
    }

    /// Distinct nonzero weights (the instability analysis never sees the
    /// zero weight: any vector supported there is semistable).
    pub fn nonzero_support(&self) -> Vec<QVec> {
        self.weights.iter().filter(|(w, _)| !w.is_zero()).map(|(w, _)| w.clone()).collect()
    }

    pub fn multiplicity(&self, w: &QVec) -> u64 {
        self.weights
            .binary_search_by(|(v, _)| v.cmp(w))
            .map(|i| self.weights[i].1)
            .unwrap_or(0)
    }

    /// Multiset invariance under every simple reflection.
    pub fn is_weyl_invariant(&self, datum: &RootDatum) -> bool {
        for s in datum.simple_roots() {
            let reflected = ModuleCharacter::from_weights(
                self.weights
                    .iter()
                    .map(|(w, m)| (reflect(datum.gram(), s, w), *m))
                    .collect(),
            );
            if reflected != *self {
                return false;
            }
        }
        true
    }

    /// Every weight pairs integrally with the cocharacter lattice.
    pub fn is_integral(&self, datum: &RootDatum) -> bool {
        self.weights.iter().all(|(w, _)| {
            datum.cochar_basis().iter().all(|y| datum.gram().pair(w, y).is_integer())
        })
    }
}

/// The adjoint character: all roots with multiplicity 1 plus the zero
/// weight with multiplicity `rank`.
pub fn adjoint_character(datum: &RootDatum) -> ModuleCharacter {
    let mut raw: Vec<(QVec, u64)> = datum.roots().iter().map(|r| (r.clone(), 1)).collect();
    raw.push((QVec::zero(datum.rank()), datum.rank() as u64));
    ModuleCharacter::from_weights(raw)
}

/// The dual character: every weight negated, multiplicities kept.
pub fn dual_character(ch: &ModuleCharacter) -> ModuleCharacter {
    ModuleCharacter::from_weights(ch.weights.iter().map(|(w, m)| (w.neg(), *m)).collect())
}

/// Gram pairing of a character vector with a cocharacter vector.
pub fn weight_pairing(gram: &Gram, chi: &QVec, lambda: &QVec) -> Rat {
    gram.pair(chi, lambda)
}

/// `min over the support of (chi, lambda)`; `None` encodes plus infinity
/// (empty support, the distinguished fixed point).
pub fn m_value(gram: &Gram, support: &[QVec], lambda: &QVec) -> Option<Rat> {
    support.iter().map(|chi| gram.pair(chi, lambda)).min()
}

/// Dimension of the irreducible module of highest weight `mu` by the Weyl
/// dimension formula: `prod over a > 0 of (mu + rho, a) / (rho, a)`.
pub fn weyl_dimension(datum: &RootDatum, mu: &QVec) -> Result<BigInt> {
    let rho = half_sum_positive(datum);
    let shifted = mu.add(&rho);
    let mut value = Rat::one();
    for alpha in datum.positive_roots() {
        value *= datum.gram().pair(&shifted, &alpha) / datum.gram().pair(&rho, &alpha);
    }
    if !value.is_integer() {
        return Err(Error::Internal("Weyl dimension is not an integer".into()));
    }
    Ok(value.to_integer())
}

/// Half the sum of the positive roots.
pub fn half_sum_positive(datum: &RootDatum) -> QVec {
    let mut rho = QVec::zero(datum.rank());
    for alpha in datum.positive_roots() {
        rho = rho.add(&alpha);
    }
    rho.scale(&Rat::new(BigInt::one(), BigInt::from(2)))
}

/// Full weight multiset of the irreducible complex module with dominant
/// integral highest weight `mu`, by Freudenthal's formula.
///
/// Fails with a capacity error when the Weyl dimension exceeds
/// `dim_bound`; fails with an internal error if the expanded multiset does
/// not reproduce the Weyl dimension exactly.
pub fn highest_weight_character(
    datum: &RootDatum,
    mu: &QVec,
    dim_bound: u64,
) -> Result<ModuleCharacter> {
    let gram = datum.gram();
    for alpha in datum.simple_roots() {
        if gram.pair(mu, alpha).is_negative() {
            return Err(Error::InvalidInput(format!("highest weight {mu} is not dominant")));
        }
    }
    for y in datum.cochar_basis() {
        if !gram.pair(mu, y).is_integer() {
            return Err(Error::InvalidInput(format!(
                "highest weight {mu} is not integral for the character lattice"
            )));
        }
    }
    let wdim = weyl_dimension(datum, mu)?;
    if wdim > BigInt::from(dim_bound) {
        return Err(Error::Capacity(format!(
            "module dimension {wdim} exceeds the bound {dim_bound}"
        )));
    }

    let simple_rank = datum.simple_roots().len();
    let positives = datum.positive_roots();
    let rho = half_sum_positive(datum);
    let mu_rho_norm = gram.norm_sq(&mu.add(&rho));

    // The lowest weight is w0(mu) = -dominant(-mu); every weight of the
    // module lies between them, which bounds the simple-root coordinates
    // of mu minus the weight by a box.
    let (minus_dual, _) = datum.make_dominant(&mu.neg());
    let span = mu.add(&minus_dual); // mu - w0(mu), nonnegative integer coords
    let mut cmax: Vec<i64> = Vec::with_capacity(simple_rank);
    for i in 0..simple_rank {
        let c = &span[i];
        if !c.is_integer() || c.is_negative() {
            return Err(Error::Internal("weight span is not a nonnegative root sum".into()));
        }
        cmax.push(c.to_integer().to_i64().ok_or_else(|| {
            Error::Capacity("weight box coordinate overflows".into())
        })?);
    }

    // Enumerate dominant weights mu - sum c_i a_i inside the box, ordered
    // by height so Freudenthal sees higher weights first.
    let mut dominants: Vec<(i64, Vec<i64>, QVec)> = Vec::new();
    let mut odometer = vec_zeros(simple_rank);
    let mut steps: u64 = 0;
    loop {
        steps += 1;
        if steps > 10_000_000 {
            return Err(Error::Capacity("weight box enumeration too large".into()));
        }
        let mut w = mu.clone();
        for (i, &c) in odometer.iter().enumerate() {
            if c != 0 {
                w = w.sub(&datum.simple_roots()[i].scale(&rat(c)));
            }
        }
        if datum.simple_roots().iter().all(|a| !gram.pair(a, &w).is_negative()) {
            dominants.push((odometer.iter().sum(), odometer.clone(), w));
        }
        // Advance the odometer.
        let mut i = 0;
        loop {
            if i == simple_rank {
                break;
            }
            odometer[i] += 1;
            if odometer[i] <= cmax[i] {
                break;
            }
            odometer[i] = 0;
            i += 1;
        }
        if i == simple_rank {
            break;
        }
    }
    dominants.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));

    // Freudenthal: m(w) = 2 sum_{a>0} sum_{j>=1} m(w + j a) (w + j a, a)
    //                      / (|mu+rho|^2 - |w+rho|^2).
    let mut mult: BTreeMap<QVec, BigInt> = BTreeMap::new();
    for (height, _coords, w) in &dominants {
        if *height == 0 {
            mult.insert(w.clone(), BigInt::one());
            continue;
        }
        let mut numerator = Rat::zero();
        for alpha in &positives {
            let mut j: i64 = 1;
            loop {
                let nu = w.add(&alpha.scale(&rat(j)));
                // Outside the box means beyond the highest weight.
                let diff = mu.sub(&nu);
                if (0..simple_rank).any(|i| diff[i].is_negative()) {
                    break;
                }
                let (dom, _) = datum.make_dominant(&nu);
                if let Some(m) = mult.get(&dom) {
                    numerator += Rat::from_integer(m.clone()) * gram.pair(&nu, alpha);
                }
                j += 1;
            }
        }
        let denominator = &mu_rho_norm - gram.norm_sq(&w.add(&rho));
        if denominator.is_zero() {
            return Err(Error::Internal("Freudenthal denominator vanished".into()));
        }
        let value = rat(2) * numerator / denominator;
        if !value.is_integer() || value.is_negative() {
            return Err(Error::Internal("Freudenthal multiplicity not a nonnegative integer".into()));
        }
        let m = value.to_integer();
        if !m.is_zero() {
            mult.insert(w.clone(), m);
        }
    }

    // Expand each dominant weight into its Weyl orbit.
    let mut raw: Vec<(QVec, u64)> = Vec::new();
    for (w, m) in &mult {
        let m64 = m.to_u64().ok_or_else(|| Error::Capacity("multiplicity overflows u64".into()))?;
        for orbit_weight in weyl_orbit(datum, w) {
            raw.push((orbit_weight, m64));
        }
    }
    let ch = ModuleCharacter::from_weights(raw);
    if BigInt::from(ch.dim()) != wdim {
        return Err(Error::Internal(format!(
            "Freudenthal dimension {} disagrees with the Weyl dimension formula {}",
            ch.dim(),
            wdim
        )));
    }
    Ok(ch)
}

/// The Weyl orbit of a vector, by closure under simple reflections.
pub fn weyl_orbit(datum: &RootDatum, v: &QVec) -> Vec<QVec> {
    let mut seen: BTreeSet<QVec> = BTreeSet::new();
    seen.insert(v.clone());
    let mut queue: VecDeque<QVec> = VecDeque::new();
    queue.push_back(v.clone());
    while let Some(x) = queue.pop_front() {
        for s in datum.simple_roots() {
            let y = reflect(datum.gram(), s, &x);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen.into_iter().collect()
}

fn vec_zeros(n: usize) -> Vec<i64> {
    let mut v = Vec::with_capacity(n);
    v.resize(n, 0);
    v
}
