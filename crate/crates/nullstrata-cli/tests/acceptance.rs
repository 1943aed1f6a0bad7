//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line (run with `--nocapture` to see them). Every tolerance is exact
//! integer or polynomial equality; the only numeric thresholds are the
//! wall-clock budgets on the Steinberg computations.

use std::collections::BTreeMap;
use std::process::Command;
use std::sync::{Arc, Mutex, OnceLock};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use nullstrata_core::count::{count_report, stratum_poly, verify_identities};
use nullstrata_core::geomopt::min_norm_point;
use nullstrata_core::linalg::{bordered_gram_solve, in_span, rat, Gram, QVec, Rat};
use nullstrata_core::oracle::{ff_binary_form_count, ff_nilpotent_count, jordan_to_stratum};
use nullstrata_core::poly::IntPoly;
use nullstrata_core::repchar::{
    adjoint_character, dual_character, highest_weight_character, m_value, weyl_dimension,
};
use nullstrata_core::rootsys::{build_root_datum, Family, RootDatum, TypeSpec};
use nullstrata_core::strata::{Engine, GroupState, Stratum};

const SMALL_TYPES: [(&str, Family, usize); 7] = [
    ("A1", Family::A, 1),
    ("A2", Family::A, 2),
    ("A3", Family::A, 3),
    ("B2", Family::B, 2),
    ("B3", Family::B, 3),
    ("C3", Family::C, 3),
    ("G2", Family::G, 2),
];
const LARGE_TYPES: [(&str, Family, usize); 2] = [("D4", Family::D, 4), ("F4", Family::F, 4)];

struct TypeData {
    datum: Arc<RootDatum>,
    strata: Vec<Stratum>,
    n_v: IntPoly,
    elapsed: Duration,
    engine: Mutex<Engine>,
}

fn adjoint_data(label: &str) -> Arc<TypeData> {
    static CACHE: OnceLock<Mutex<BTreeMap<String, Arc<TypeData>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(BTreeMap::new()));
    let mut guard = cache.lock().unwrap();
    if let Some(data) = guard.get(label) {
        return data.clone();
    }
    let (family, rank) = SMALL_TYPES
        .iter()
        .chain(LARGE_TYPES.iter())
        .find(|(l, _, _)| *l == label)
        .map(|&(_, f, r)| (f, r))
        .expect("known type label");
    let start = Instant::now();
    let datum = Arc::new(build_root_datum(&TypeSpec::simple(family, rank)).unwrap());
    let adj = adjoint_character(&datum);
    let mut engine = Engine::default();
    let strata = engine.enumerate_strata(&GroupState::ambient(datum.clone()), &adj).unwrap();
    let n_v = strata.iter().fold(IntPoly::one(), |acc, s| &acc + &s.contribution);
    let data = Arc::new(TypeData {
        datum,
        strata,
        n_v,
        elapsed: start.elapsed(),
        engine: Mutex::new(engine),
    });
    guard.insert(label.to_string(), data.clone());
    data
}

#[test]
fn criterion_01_steinberg_identity() {
    let mut small_total = Duration::ZERO;
    for (label, _, _) in SMALL_TYPES {
        let data = adjoint_data(label);
        let expected = IntPoly::t_pow(data.datum.dim_group() - data.datum.rank());
        assert_eq!(data.n_v, expected, "{label}: nullcone count is not t^(dim-rank)");
        small_total += data.elapsed;
    }
    assert!(
        small_total < Duration::from_secs(60),
        "small types took {small_total:?}, budget 60s"
    );
    let mut large_total = Duration::ZERO;
    for (label, _, _) in LARGE_TYPES {
        let data = adjoint_data(label);
        let expected = IntPoly::t_pow(data.datum.dim_group() - data.datum.rank());
        assert_eq!(data.n_v, expected, "{label}: nullcone count is not t^(dim-rank)");
        large_total += data.elapsed;
    }
    assert!(
        large_total < Duration::from_secs(600),
        "D4+F4 took {large_total:?}, budget 600s"
    );
    println!(
        "criterion 1 (Steinberg identity): PASS — 7 small types in {small_total:?}, D4+F4 in {large_total:?}"
    );
}

#[test]
fn criterion_02_dual_equality() {
    for (label, _, _) in SMALL_TYPES.iter().chain(LARGE_TYPES.iter()) {
        let data = adjoint_data(label);
        let dual = dual_character(&adjoint_character(&data.datum));
        let mut engine = data.engine.lock().unwrap();
        let dual_strata = engine
            .enumerate_strata(&GroupState::ambient(data.datum.clone()), &dual)
            .unwrap();
        let dual_poly =
            dual_strata.iter().fold(IntPoly::one(), |acc, s| &acc + &s.contribution);
        assert_eq!(dual_poly, data.n_v, "{label}: dual count differs");
        assert_eq!(dual_strata.len(), data.strata.len(), "{label}: stratum counts differ");
        for (a, b) in data.strata.iter().zip(&dual_strata) {
            assert_eq!(a.lambda_coords, b.lambda_coords, "{label}");
            assert_eq!(a.k, b.k, "{label}");
            assert_eq!(a.dim_stratum, b.dim_stratum, "{label}");
            assert_eq!(a.contribution, b.contribution, "{label}");
        }
    }
    println!("criterion 2 (dual equality): PASS — identical polynomials and stratum lists for all 9 types");
}

#[test]
fn criterion_03_a2_worked_decomposition() {
    let data = adjoint_data("A2");
    assert_eq!(data.strata.len(), 2);
    let regular = &data.strata[0];
    let minimal = &data.strata[1];
    assert_eq!(regular.lambda_coords, vec![BigInt::from(1), BigInt::from(1)]);
    assert_eq!(regular.k, 1);
    assert_eq!(regular.dim_stratum, 6);
    assert_eq!(regular.contribution, IntPoly::from_ints(&[0, 1, 0, -1, -1, 0, 1]));
    assert_eq!(minimal.lambda_coords, vec![BigInt::from(1), BigInt::from(1)]);
    assert_eq!(minimal.k, 2);
    assert_eq!(minimal.dim_stratum, 4);
    assert_eq!(minimal.contribution, IntPoly::from_ints(&[-1, -1, 0, 1, 1]));
    // Oracle equality at q = 2.
    let oracle = ff_nilpotent_count(3, 2).unwrap();
    assert_eq!(regular.contribution.eval_i64(2), BigInt::from(42));
    assert_eq!(minimal.contribution.eval_i64(2), BigInt::from(21));
    assert_eq!(oracle.by_class["3"], 42);
    assert_eq!(oracle.by_class["2,1"], 21);
    assert_eq!(oracle.total, 64);
    assert_eq!(data.n_v.eval_i64(2), BigInt::from(64));
    println!("criterion 3 (A2 worked decomposition): PASS — strata (1,1;k=1,dim 6) and (1,1;k=2,dim 4); 42+21+1=64 at q=2");
}

#[test]
fn criterion_04_oracle_suites() {
    let start = Instant::now();
    let mut comparisons = 0;
    for n in [2usize, 3] {
        let label = if n == 2 { "A1" } else { "A2" };
        let data = adjoint_data(label);
        for q in [2u32, 3, 4, 5] {
            let count = ff_nilpotent_count(n, q).unwrap();
            assert_eq!(
                BigInt::from(count.total),
                data.n_v.eval_i64(q as i64),
                "nilpotent total n={n} q={q}"
            );
            comparisons += 1;
            for (jordan_label, parts) in jordan_types(n) {
                let oracle_count = count.by_class.get(&jordan_label).copied().unwrap_or(0);
                let engine_count = if parts.iter().all(|&p| p == 1) {
                    BigInt::from(1)
                } else {
                    let (coords, k) = jordan_to_stratum(&parts).unwrap();
                    let coords: Vec<BigInt> = coords.into_iter().map(BigInt::from).collect();
                    let stratum = data
                        .strata
                        .iter()
                        .find(|s| s.lambda_coords == coords && s.k == k)
                        .unwrap_or_else(|| panic!("no stratum for [{jordan_label}]"));
                    stratum_poly(stratum).eval_i64(q as i64)
                };
                assert_eq!(
                    BigInt::from(oracle_count),
                    engine_count,
                    "Jordan [{jordan_label}] n={n} q={q}"
                );
                comparisons += 1;
            }
        }
    }
    // Binary forms: Sym^d characters of A1.
    let a1 = adjoint_data("A1");
    let fw = &a1.datum.fundamental_weights()[0];
    for d in [2usize, 3, 4] {
        let ch =
            highest_weight_character(&a1.datum, &fw.scale(&rat(d as i64)), 10_000).unwrap();
        let mut engine = a1.engine.lock().unwrap();
        let poly = engine.nullcone_poly(&GroupState::ambient(a1.datum.clone()), &ch).unwrap();
        for q in [2u32, 3, 5] {
            let count = ff_binary_form_count(d, q).unwrap();
            assert_eq!(
                BigInt::from(count.total),
                poly.eval_i64(q as i64),
                "forms d={d} q={q}"
            );
            comparisons += 1;
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(60), "oracle suites took {elapsed:?}");
    println!(
        "criterion 4 (oracle suites): PASS — {comparisons} exact integer comparisons in {elapsed:?}"
    );
}

fn jordan_types(n: usize) -> Vec<(String, Vec<usize>)> {
    let parts: Vec<Vec<usize>> = match n {
        2 => vec![vec![2], vec![1, 1]],
        _ => vec![vec![3], vec![2, 1], vec![1, 1, 1]],
    };
    parts
        .into_iter()
        .map(|p| {
            let label = p.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
            (label, p)
        })
        .collect()
}

/// Modules used by criteria 5 and 7: the nine adjoints plus seeded random
/// highest-weight modules of dimension at most 100.
fn module_battery() -> Vec<(String, Arc<RootDatum>, nullstrata_core::ModuleCharacter)> {
    let mut rng = ChaCha8Rng::seed_from_u64(20_260_810);
    let mut out = Vec::new();
    for (label, _, _) in SMALL_TYPES.iter().chain(LARGE_TYPES.iter()) {
        let data = adjoint_data(label);
        out.push((
            format!("{label} adjoint"),
            data.datum.clone(),
            adjoint_character(&data.datum),
        ));
    }
    for (label, family, rank) in
        [("A1", Family::A, 1), ("A2", Family::A, 2), ("A3", Family::A, 3), ("B2", Family::B, 2), ("G2", Family::G, 2)]
    {
        let datum = Arc::new(build_root_datum(&TypeSpec::simple(family, rank)).unwrap());
        let fw = datum.fundamental_weights();
        let mut found = 0;
        let mut guard = 0;
        while found < 3 && guard < 500 {
            guard += 1;
            let mut mu = QVec::zero(datum.rank());
            for w in &fw {
                let c = rng.gen_range(0..=3);
                if c > 0 {
                    mu = mu.add(&w.scale(&rat(c)));
                }
            }
            if mu.is_zero() || weyl_dimension(&datum, &mu).unwrap() > BigInt::from(100) {
                continue;
            }
            let ch = highest_weight_character(&datum, &mu, 100_000).unwrap();
            out.push((format!("{label} hw dim {}", ch.dim()), datum.clone(), ch));
            found += 1;
        }
        assert_eq!(found, 3, "could not sample 3 modules for {label}");
    }
    out
}

#[test]
fn criterion_05_partition_identity() {
    let battery = module_battery();
    assert!(battery.len() >= 20, "battery has only {} modules", battery.len());
    for (descriptor, datum, ch) in &battery {
        let mut engine = Engine::default();
        let report = count_report(&mut engine, datum, ch, descriptor).unwrap();
        let mut sum = IntPoly::one();
        for s in &report.strata {
            sum = &sum + &stratum_poly(s);
        }
        assert_eq!(sum, report.n_v, "{descriptor}: partition identity failed");
        let checks = verify_identities(&mut engine, datum, ch, &report).unwrap();
        let partition = checks.iter().find(|c| c.name == "partition").unwrap();
        assert!(partition.pass, "{descriptor}");
    }
    println!(
        "criterion 5 (partition identity): PASS — 1 + sum of contributions = n_V on {} modules",
        battery.len()
    );
}

#[test]
fn criterion_06_weighted_dynkin_invariant() {
    for (label, _, _) in SMALL_TYPES.iter().chain(LARGE_TYPES.iter()) {
        let data = adjoint_data(label);
        for s in &data.strata {
            let doubled = s.blade_label.scale(&rat(2));
            for alpha in data.datum.simple_roots() {
                let v = data.datum.gram().pair(alpha, &doubled);
                assert!(
                    v == rat(0) || v == rat(1) || v == rat(2),
                    "{label}: 2*lambda/k pairs to {v} with a simple root"
                );
            }
        }
    }
    for (label, expected) in [("A1", 1usize), ("A2", 2), ("B2", 3), ("G2", 4), ("A3", 4)] {
        let data = adjoint_data(label);
        assert_eq!(data.strata.len(), expected, "{label}: stratum count");
    }
    println!("criterion 6 (weighted Dynkin invariant): PASS — diagram values in {{0,1,2}} for all 9 types; stratum counts A1:1 A2:2 B2:3 G2:4 A3:4");
}

#[test]
fn criterion_07_projective_counts() {
    let battery = module_battery();
    let mut conjecture_failures = Vec::new();
    for (descriptor, datum, ch) in &battery {
        let mut engine = Engine::default();
        let report = count_report(&mut engine, datum, ch, descriptor).unwrap();
        assert_eq!(report.n_v.eval_i64(1), BigInt::from(1), "{descriptor}: n_V(1) != 1");
        let numerator = &report.n_v - &IntPoly::one();
        let quotient = numerator
            .exact_div(&(&IntPoly::t_pow(1) - &IntPoly::one()))
            .unwrap_or_else(|e| panic!("{descriptor}: (t-1) division failed: {e}"));
        assert_eq!(quotient, report.n_prime, "{descriptor}");
        if !report.nonneg_conjecture_holds {
            conjecture_failures.push(descriptor.clone());
        }
    }
    // The nonnegativity of n'_V is a conjecture probe: reported, never
    // asserted.
    println!(
        "criterion 7 (projective counts): PASS — n_V(1)=1 and exact (t-1)-divisibility on {} modules; n'_V nonnegativity holds on {}/{} (failures: {:?})",
        battery.len(),
        battery.len() - conjecture_failures.len(),
        battery.len(),
        conjecture_failures
    );
}

fn oracle_min_norm(points: &[QVec], gram: &Gram) -> QVec {
    let n = points.len();
    let dim = points[0].dim();
    let products: Vec<Vec<Rat>> = points
        .iter()
        .map(|a| points.iter().map(|b| gram.pair(a, b)).collect())
        .collect();
    let mut best: Option<(Rat, QVec)> = None;
    for mask in 1u32..(1 << n) {
        let subset: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        if subset.len() > dim + 1 {
            continue;
        }
        let Some(coeffs) =
            bordered_gram_solve(subset.len(), &|r, c| products[subset[r]][subset[c]].clone())
        else {
            continue;
        };
        if coeffs.iter().any(|c| c.is_negative()) {
            continue;
        }
        let mut p = QVec::zero(dim);
        for (pos, &i) in subset.iter().enumerate() {
            p = p.add(&points[i].scale(&coeffs[pos]));
        }
        let norm = gram.norm_sq(&p);
        if best.as_ref().map_or(true, |(b, _)| norm < *b) {
            best = Some((norm, p));
        }
    }
    best.unwrap().1
}

#[test]
fn criterion_08_min_norm_kernel() {
    let mut rng = ChaCha8Rng::seed_from_u64(808);
    let mut unstable = 0;
    for case in 0..200 {
        let dim = rng.gen_range(1..=4);
        let count = rng.gen_range(1..=8);
        // Random symmetric positive definite form A^T A + I.
        let a: Vec<Vec<i64>> =
            (0..dim).map(|_| (0..dim).map(|_| rng.gen_range(-2..=2)).collect()).collect();
        let mut entries = Vec::new();
        for i in 0..dim {
            for j in 0..dim {
                let mut acc: i64 = (0..dim).map(|k| a[k][i] * a[k][j]).sum();
                if i == j {
                    acc += 1;
                }
                entries.push(rat(acc));
            }
        }
        let gram = Gram::new(dim, entries).unwrap();
        let points: Vec<QVec> = (0..count)
            .map(|_| {
                QVec::new(
                    (0..dim)
                        .map(|_| {
                            Rat::new(
                                BigInt::from(rng.gen_range(-5i64..=5)),
                                BigInt::from(rng.gen_range(1i64..=3)),
                            )
                        })
                        .collect(),
                )
            })
            .collect();
        let fast = min_norm_point(&points, &gram).unwrap();
        assert_eq!(fast.point, oracle_min_norm(&points, &gram), "case {case}");
        assert!(fast.check(&points, &gram), "case {case}: certificate");
        if !fast.is_zero {
            unstable += 1;
            let m = m_value(&gram, &points, &fast.point).unwrap();
            assert_eq!(gram.norm_sq(&fast.point), m, "case {case}: norm identity");
        }
    }
    println!(
        "criterion 8 (min-norm kernel): PASS — 200 random sets agree with the all-faces oracle; norm identity on {unstable} unstable instances"
    );
}

#[test]
fn criterion_09_flag_variety_polynomials() {
    let mut levis = 0;
    for (family, rank) in
        [(Family::A, 1), (Family::A, 2), (Family::A, 3), (Family::B, 2), (Family::G, 2)]
    {
        let datum = build_root_datum(&TypeSpec::simple(family, rank)).unwrap();
        let simples = datum.simple_roots().to_vec();
        for mask in 0u32..(1 << simples.len()) {
            let chosen: Vec<QVec> = (0..simples.len())
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| simples[i].clone())
                .collect();
            let levi_roots: Vec<QVec> = datum
                .roots()
                .iter()
                .filter(|r| {
                    in_span(&chosen, r).is_some_and(|c| c.iter().all(Rat::is_integer))
                })
                .cloned()
                .collect();
            let fast = datum.poincare_quotient(&levi_roots).unwrap();
            let brute = datum.coset_poincare_bruteforce(&levi_roots, 2_000_000).unwrap();
            assert_eq!(fast, brute, "{family}{rank} simple-root mask {mask:b}");
            levis += 1;
        }
    }
    println!(
        "criterion 9 (flag-variety polynomials): PASS — degree-table quotients equal Weyl-group enumeration on {levis} dominant-face Levis"
    );
}

#[test]
fn criterion_10_unipotent_counts() {
    for label in ["A1", "A2", "A3", "B2", "G2"] {
        let out = Command::new(env!("CARGO_BIN_EXE_nullstrata"))
            .args(["unipotent", "--type", label, "--eval", "2,3"])
            .env_remove("NULLSTRATA_MEMO_DIR")
            .output()
            .expect("binary runs");
        assert!(out.status.success(), "{label}: unipotent subcommand failed");
        let v: serde_json::Value =
            serde_json::from_slice(&out.stdout).expect("unipotent output is JSON");
        assert_eq!(v["steinberg_ok"], true, "{label}");
        assert_eq!(v["total"], v["steinberg"], "{label}: total is not t^(dim-rank)");
        // Per-piece polynomials equal the Lie-algebra stratum counts.
        let data = adjoint_data(label);
        let pieces = v["pieces"].as_array().unwrap();
        assert_eq!(pieces.len(), data.strata.len(), "{label}");
        for (piece, s) in pieces.iter().zip(&data.strata) {
            let expected: Vec<serde_json::Value> = s
                .contribution
                .coeffs()
                .iter()
                .map(|c| serde_json::json!(i64::try_from(c).unwrap()))
                .collect();
            assert_eq!(piece["contribution"], serde_json::Value::Array(expected), "{label}");
        }
    }
    println!("criterion 10 (unipotent-variety counts): PASS — group-case totals t^(dim-rank) with pieces equal to the Lie-algebra counts");
}
