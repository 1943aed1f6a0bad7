//! Job specifications: the CLI grammar for group types, modules, and run
//! flags, with a canonical printed form that parses back to itself.

use nullstrata_core::linalg::{QVec, Rat};
use nullstrata_core::repchar::{
    adjoint_character, dual_character, highest_weight_character, ModuleCharacter,
    DEFAULT_DIM_BOUND,
};
use nullstrata_core::rootsys::{Family, RootDatum, TypeSpec};
use nullstrata_core::{Error, Result};

use num_bigint::BigInt;
use num_traits::Zero;

/// Parse a type string such as `A2`, `B2xA1`, or `A1+T1`. Factor tokens
/// are separated by `x` or `+`; `T<d>` adds a central torus block.
pub fn parse_type_spec(input: &str) -> Result<TypeSpec> {
    let mut spec = TypeSpec::default();
    if input.is_empty() {
        return Err(Error::InvalidInput("empty type spec".into()));
    }
    for token in input.split(['x', 'X', '+']) {
        let token = token.trim();
        if token.is_empty() {
            return Err(Error::InvalidInput(format!("empty factor in type spec '{input}'")));
        }
        let (head, digits) = token.split_at(1);
        let rank: usize = digits
            .parse()
            .map_err(|_| Error::InvalidInput(format!("bad rank in factor '{token}'")))?;
        match head {
            "T" | "t" => spec.torus += rank,
            "A" | "a" => spec.factors.push((Family::A, rank)),
            "B" | "b" => spec.factors.push((Family::B, rank)),
            "C" | "c" => spec.factors.push((Family::C, rank)),
            "D" | "d" => spec.factors.push((Family::D, rank)),
            "E" | "e" => spec.factors.push((Family::E, rank)),
            "F" | "f" => spec.factors.push((Family::F, rank)),
            "G" | "g" => spec.factors.push((Family::G, rank)),
            _ => return Err(Error::InvalidInput(format!("unknown family in '{token}'"))),
        }
    }
    Ok(spec)
}

/// Module selector: the adjoint module, its dual, or a highest-weight
/// module given by fundamental-weight coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleSpec {
    Adjoint,
    DualAdjoint,
    /// Coefficient lists per simple factor. A single list applies to the
    /// first factor with zeros elsewhere.
    HighestWeight(Vec<Vec<u32>>),
}

impl ModuleSpec {
    /// Grammar: `adjoint` | `dual-adjoint` | `hw:<c1,c2,...>` |
    /// `hw:<...>/<...>` with one coefficient list per simple factor.
    pub fn parse(input: &str) -> Result<ModuleSpec> {
        match input {
            "adjoint" => Ok(ModuleSpec::Adjoint),
            "dual-adjoint" => Ok(ModuleSpec::DualAdjoint),
            _ => {
                let rest = input.strip_prefix("hw:").ok_or_else(|| {
                    Error::InvalidInput(format!(
                        "unknown module '{input}' (use adjoint, dual-adjoint, or hw:<coeffs>)"
                    ))
                })?;
                let mut lists = Vec::new();
                for part in rest.split('/') {
                    let coeffs: Vec<u32> = part
                        .split(',')
                        .map(|c| {
                            c.trim().parse().map_err(|_| {
                                Error::InvalidInput(format!("bad weight coefficient '{c}'"))
                            })
                        })
                        .collect::<Result<_>>()?;
                    lists.push(coeffs);
                }
                Ok(ModuleSpec::HighestWeight(lists))
            }
        }
    }

    /// Canonical printed form (inverse of `parse`).
    pub fn print(&self) -> String {
        match self {
            ModuleSpec::Adjoint => "adjoint".into(),
            ModuleSpec::DualAdjoint => "dual-adjoint".into(),
            ModuleSpec::HighestWeight(lists) => {
                let parts: Vec<String> = lists
                    .iter()
                    .map(|l| l.iter().map(u32::to_string).collect::<Vec<_>>().join(","))
                    .collect();
                format!("hw:{}", parts.join("/"))
            }
        }
    }

    /// Realize the module character over the datum.
    pub fn character(&self, datum: &RootDatum) -> Result<ModuleCharacter> {
        match self {
            ModuleSpec::Adjoint => Ok(adjoint_character(datum)),
            ModuleSpec::DualAdjoint => Ok(dual_character(&adjoint_character(datum))),
            ModuleSpec::HighestWeight(lists) => {
                let mu = self.highest_weight(datum, lists)?;
                highest_weight_character(datum, &mu, DEFAULT_DIM_BOUND)
            }
        }
    }

    fn highest_weight(&self, datum: &RootDatum, lists: &[Vec<u32>]) -> Result<QVec> {
        let fw = datum.fundamental_weights();
        let factor_ranks: Vec<usize> = datum.components().iter().map(|c| c.rank).collect();
        if lists.len() > factor_ranks.len() {
            return Err(Error::InvalidInput(format!(
                "{} coefficient lists for {} simple factors",
                lists.len(),
                factor_ranks.len()
            )));
        }
        let mut mu = QVec::zero(datum.rank());
        let mut offset = 0;
        for (f, coeffs) in lists.iter().enumerate() {
            if coeffs.len() != factor_ranks[f] {
                return Err(Error::InvalidInput(format!(
                    "factor {} has rank {} but got {} coefficients",
                    f + 1,
                    factor_ranks[f],
                    coeffs.len()
                )));
            }
            for (i, &c) in coeffs.iter().enumerate() {
                if c > 0 {
                    mu = mu.add(&fw[offset + i].scale(&Rat::from_integer(BigInt::from(c))));
                }
            }
            offset += factor_ranks[f];
        }
        Ok(mu)
    }
}

/// Parse a comma-separated list of evaluation points, each a prime power.
pub fn parse_eval_points(input: &str) -> Result<Vec<u64>> {
    let mut out = Vec::new();
    for part in input.split(',') {
        let q: u64 = part
            .trim()
            .parse()
            .map_err(|_| Error::InvalidInput(format!("bad evaluation point '{part}'")))?;
        if !is_prime_power(q) {
            return Err(Error::InvalidInput(format!("{q} is not a prime power")));
        }
        out.push(q);
    }
    Ok(out)
}

fn is_prime_power(mut q: u64) -> bool {
    if q < 2 {
        return false;
    }
    for p in 2..=q {
        if p * p > q {
            return q > 1; // q itself is prime
        }
        if q % p == 0 {
            while q % p == 0 {
                q /= p;
            }
            return q == 1;
        }
    }
    true
}

/// Parse a cocharacter-lattice override: basis rows separated by `;`,
/// rational entries separated by `,`, in coordinates of the default
/// cocharacter basis (simple coroots, then torus units).
pub fn parse_lattice(input: &str, datum: &RootDatum) -> Result<Vec<QVec>> {
    let default = datum.cochar_basis().to_vec();
    let mut basis = Vec::new();
    for row in input.split(';') {
        let entries: Vec<Rat> = row
            .split(',')
            .map(|e| parse_rat(e.trim()))
            .collect::<Result<_>>()?;
        if entries.len() != default.len() {
            return Err(Error::InvalidInput(format!(
                "lattice row '{row}' has {} entries, expected {}",
                entries.len(),
                default.len()
            )));
        }
        let mut v = QVec::zero(datum.rank());
        for (c, b) in entries.iter().zip(&default) {
            if !c.is_zero() {
                v = v.add(&b.scale(c));
            }
        }
        basis.push(v);
    }
    Ok(basis)
}

pub fn parse_rat(s: &str) -> Result<Rat> {
    let bad = || Error::InvalidInput(format!("bad rational '{s}'"));
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.parse().map_err(|_| bad())?;
        let d: BigInt = d.parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        Ok(Rat::new(n, d))
    } else {
        let n: BigInt = s.parse().map_err(|_| bad())?;
        Ok(Rat::from_integer(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use nullstrata_core::rootsys::build_root_datum;

    #[test]
    fn type_spec_roundtrip() {
        for s in ["A2", "B2xA1", "A1+T1", "F4", "A1xA1+T2"] {
            let spec = parse_type_spec(s).unwrap();
            let printed = spec.to_string();
            assert_eq!(parse_type_spec(&printed).unwrap(), spec, "{s} -> {printed}");
        }
        assert!(parse_type_spec("H3").is_err());
        assert!(parse_type_spec("Ax").is_err());
        assert!(parse_type_spec("").is_err());
    }

    #[test]
    fn module_spec_roundtrip() {
        for s in ["adjoint", "dual-adjoint", "hw:1,0", "hw:2", "hw:1,0/0,1"] {
            let m = ModuleSpec::parse(s).unwrap();
            assert_eq!(ModuleSpec::parse(&m.print()).unwrap(), m);
        }
        assert!(ModuleSpec::parse("spin").is_err());
    }

    #[test]
    fn eval_points_validated() {
        assert_eq!(parse_eval_points("2,3,4,9").unwrap(), vec![2, 3, 4, 9]);
        assert!(parse_eval_points("6").is_err());
        assert!(parse_eval_points("1").is_err());
        assert!(parse_eval_points("x").is_err());
    }

    #[test]
    fn hw_character_dimensions() {
        let datum = build_root_datum(&parse_type_spec("A2").unwrap()).unwrap();
        let ch = ModuleSpec::parse("hw:1,0").unwrap().character(&datum).unwrap();
        assert_eq!(ch.dim(), 3);
        let ch = ModuleSpec::parse("hw:1,1").unwrap().character(&datum).unwrap();
        assert_eq!(ch.dim(), 8);
        // Wrong arity is rejected.
        assert!(ModuleSpec::parse("hw:1").unwrap().character(&datum).is_err());
    }
}
