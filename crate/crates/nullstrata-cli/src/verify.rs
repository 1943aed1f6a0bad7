//! Oracle suites: brute-force finite-field counts checked against the
//! counting recursion, case by case.

use std::sync::Arc;

use nullstrata_core::count::stratum_poly;
use nullstrata_core::oracle::{ff_binary_form_count, ff_nilpotent_count, ff_torus_count};
use nullstrata_core::poly::IntPoly;
use nullstrata_core::repchar::adjoint_character;
use nullstrata_core::rootsys::{build_root_datum, Family, TypeSpec};
use nullstrata_core::strata::{graded_piece, Engine, GroupState};
use nullstrata_core::{Error, ModuleCharacter, QVec, Result};

use num_bigint::BigInt;

/// One comparison row.
#[derive(Clone, Debug)]
pub struct VerifyRow {
    pub suite: String,
    pub case: String,
    pub q: u64,
    pub oracle: BigInt,
    pub engine: BigInt,
    pub ok: bool,
}

impl VerifyRow {
    fn new(suite: &str, case: String, q: u64, oracle: BigInt, engine: BigInt) -> Self {
        let ok = oracle == engine;
        VerifyRow { suite: suite.into(), case, q, oracle, engine, ok }
    }
}

pub const SUITES: [&str; 4] = ["sl2", "sl3", "forms", "torus"];

/// Comparison rows plus the raw labeled brute-force counts.
pub struct SuiteReport {
    pub rows: Vec<VerifyRow>,
    pub counts: Vec<(String, nullstrata_core::oracle::FFCount)>,
}

impl SuiteReport {
    fn merge(&mut self, other: SuiteReport) {
        self.rows.extend(other.rows);
        self.counts.extend(other.counts);
    }
}

/// Run one suite (or `all`) at the given field sizes. Sizes outside a
/// suite's enumeration bounds are skipped silently so `--q 2,3,4,5` works
/// across all suites.
pub fn run_suite(engine: &mut Engine, suite: &str, qs: &[u64]) -> Result<SuiteReport> {
    match suite {
        "all" => {
            let mut report = SuiteReport { rows: Vec::new(), counts: Vec::new() };
            for s in SUITES {
                report.merge(run_suite(engine, s, qs)?);
            }
            Ok(report)
        }
        "sl2" => nilpotent_suite(engine, 2, qs),
        "sl3" => nilpotent_suite(engine, 3, qs),
        "forms" => forms_suite(engine, qs),
        "torus" => torus_suite(engine, qs),
        other => Err(Error::InvalidInput(format!(
            "unknown suite '{other}' (use sl2, sl3, forms, torus, or all)"
        ))),
    }
}

/// Jordan types of nilpotent n x n matrices, largest first.
fn partitions(n: usize) -> Vec<Vec<usize>> {
    match n {
        2 => vec![vec![2], vec![1, 1]],
        3 => vec![vec![3], vec![2, 1], vec![1, 1, 1]],
        _ => unreachable!(),
    }
}

fn partition_label(p: &[usize]) -> String {
    p.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

fn nilpotent_suite(engine: &mut Engine, n: usize, qs: &[u64]) -> Result<SuiteReport> {
    let suite = if n == 2 { "sl2" } else { "sl3" };
    let datum = Arc::new(build_root_datum(&TypeSpec::simple(Family::A, n - 1))?);
    let adj = adjoint_character(&datum);
    let state = GroupState::ambient(datum.clone());
    let strata = engine.enumerate_strata(&state, &adj)?;
    let total_poly = strata
        .iter()
        .fold(IntPoly::one(), |acc, s| &acc + &s.contribution);

    let mut report = SuiteReport { rows: Vec::new(), counts: Vec::new() };
    for &q in qs {
        if q > 8 {
            continue;
        }
        let count = ff_nilpotent_count(n, q as u32)?;
        report.rows.push(VerifyRow::new(
            suite,
            "total".into(),
            q,
            BigInt::from(count.total),
            total_poly.eval_i64(q as i64),
        ));
        for partition in partitions(n) {
            let label = partition_label(&partition);
            let oracle = BigInt::from(count.by_class.get(&label).copied().unwrap_or(0));
            let engine_count = if partition.iter().all(|&p| p == 1) {
                // The zero matrix is the complement of all strata.
                BigInt::from(1)
            } else {
                let (coords, k) = nullstrata_core::oracle::jordan_to_stratum(&partition)?;
                let coords: Vec<BigInt> = coords.into_iter().map(BigInt::from).collect();
                let stratum = strata
                    .iter()
                    .find(|s| s.lambda_coords == coords && s.k == k)
                    .ok_or_else(|| {
                        Error::Internal(format!("no stratum for Jordan type [{label}]"))
                    })?;
                stratum_poly(stratum).eval_i64(q as i64)
            };
            report.rows.push(VerifyRow::new(
                suite,
                format!("jordan [{label}]"),
                q,
                oracle,
                engine_count,
            ));
        }
        report.counts.push((format!("{suite} q={q}"), count));
    }
    Ok(report)
}

fn forms_suite(engine: &mut Engine, qs: &[u64]) -> Result<SuiteReport> {
    let datum = Arc::new(build_root_datum(&TypeSpec::simple(Family::A, 1))?);
    let state = GroupState::ambient(datum.clone());
    let fw = &datum.fundamental_weights()[0];
    let mut report = SuiteReport { rows: Vec::new(), counts: Vec::new() };
    for d in 2..=4u32 {
        let mu = fw.scale(&nullstrata_core::linalg::rat(d as i64));
        let ch = nullstrata_core::repchar::highest_weight_character(&datum, &mu, 10_000)?;
        let poly = engine.nullcone_poly(&state, &ch)?;
        for &q in qs {
            if q > 5 {
                continue;
            }
            let count = ff_binary_form_count(d as usize, q as u32)?;
            report.rows.push(VerifyRow::new(
                "forms",
                format!("degree {d}"),
                q,
                BigInt::from(count.total),
                poly.eval_i64(q as i64),
            ));
            report.counts.push((format!("forms d={d} q={q}"), count));
        }
    }
    Ok(report)
}

/// Reuse the exact torus subproblems the recursion produces and check
/// them against literal vector enumeration.
fn torus_suite(engine: &mut Engine, qs: &[u64]) -> Result<SuiteReport> {
    let mut report = SuiteReport { rows: Vec::new(), counts: Vec::new() };
    let mut run_case = |engine: &mut Engine,
                        case: &str,
                        state: &GroupState,
                        ch: &ModuleCharacter|
     -> Result<()> {
        let poly = engine.nullcone_poly(state, ch)?;
        for &q in qs {
            if q > 5 {
                continue;
            }
            let count = ff_torus_count(ch.weights(), state.datum().gram(), q as u32)?;
            report.rows.push(VerifyRow::new(
                "torus",
                case.into(),
                q,
                BigInt::from(count.total),
                poly.eval_i64(q as i64),
            ));
            report.counts.push((format!("{case} q={q}"), count));
        }
        Ok(())
    };

    // The torus subproblem inside the A2 adjoint recursion.
    let a2 = Arc::new(build_root_datum(&TypeSpec::simple(Family::A, 2))?);
    let adj = adjoint_character(&a2);
    let ambient = GroupState::ambient(a2.clone());
    let theta_vee = a2.coroot(&QVec::from_ints(&[1, 1]));
    let sub = ambient.levi_perp(&theta_vee)?;
    let piece = graded_piece(&adj, &theta_vee, 1, &a2);
    run_case(engine, "A2 adjoint layer k=1", &sub, &piece)?;
    let piece2 = graded_piece(&adj, &theta_vee, 2, &a2);
    run_case(engine, "A2 adjoint layer k=2", &sub, &piece2)?;

    // Standalone rank-1 torus modules.
    let t1 = Arc::new(build_root_datum(&TypeSpec { factors: vec![], torus: 1 })?);
    let state = GroupState::ambient(t1.clone());
    let e = QVec::from_ints(&[1]);
    let symmetric =
        ModuleCharacter::from_weights(vec![(e.clone(), 1), (e.neg(), 1)]);
    run_case(engine, "torus weights {1,-1}", &state, &symmetric)?;
    let one_sided = ModuleCharacter::from_weights(vec![(e.clone(), 1), (e.scale(&nullstrata_core::linalg::rat(2)), 1)]);
    run_case(engine, "torus weights {1,2}", &state, &one_sided)?;
    let lopsided = ModuleCharacter::from_weights(vec![(e.clone(), 2), (e.neg(), 1)]);
    run_case(engine, "torus weights {1,1,-1}", &state, &lopsided)?;

    Ok(report)
}
