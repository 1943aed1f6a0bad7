//! Canonical report rendering: JSON with sorted keys and sorted lists, or
//! TSV rows for easy diffing against literature tables. Rationals are
//! rendered as strings in lowest terms (`"3/2"`, `"2"`); integers use
//! native JSON numbers and fail loudly if a count ever left the exact
//! integer range of JSON.

use nullstrata_core::count::{CheckResult, CountReport, GroupCaseReport};
use nullstrata_core::linalg::{QVec, Rat};
use nullstrata_core::oracle::FFCount;
use nullstrata_core::poly::IntPoly;
use nullstrata_core::repchar::ModuleCharacter;
use nullstrata_core::rootsys::RootDatum;
use nullstrata_core::strata::Stratum;
use nullstrata_core::{Error, Result};

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

pub fn rat_string(r: &Rat) -> String {
    r.to_string()
}

pub fn qvec_value(v: &QVec) -> Value {
    Value::Array(v.coords().iter().map(|c| Value::String(rat_string(c))).collect())
}

fn big_to_value(b: &BigInt) -> Result<Value> {
    b.to_i64()
        .map(|v| json!(v))
        .ok_or_else(|| Error::Capacity(format!("integer {b} exceeds the JSON-safe range")))
}

pub fn poly_value(p: &IntPoly) -> Result<Value> {
    Ok(Value::Array(p.coeffs().iter().map(big_to_value).collect::<Result<_>>()?))
}

pub fn ints_value(ints: &[BigInt]) -> Result<Value> {
    Ok(Value::Array(ints.iter().map(big_to_value).collect::<Result<_>>()?))
}

pub fn stratum_value(s: &Stratum) -> Result<Value> {
    let mut m = Map::new();
    m.insert("lambda".into(), ints_value(&s.lambda_coords)?);
    m.insert("k".into(), json!(s.k));
    m.insert("blade".into(), qvec_value(&s.blade_label));
    m.insert("dim".into(), json!(s.dim_stratum));
    m.insert("n".into(), json!(s.n));
    m.insert("N".into(), json!(s.n_above));
    m.insert("f".into(), poly_value(&s.f)?);
    m.insert("contribution".into(), poly_value(&s.contribution)?);
    m.insert("sub".into(), poly_value(&s.sub_poly)?);
    Ok(Value::Object(m))
}

pub fn strata_value(strata: &[Stratum]) -> Result<Value> {
    Ok(Value::Array(strata.iter().map(stratum_value).collect::<Result<_>>()?))
}

pub fn checks_value(checks: &[CheckResult]) -> Value {
    let mut m = Map::new();
    for c in checks {
        m.insert(c.name.clone(), json!({ "pass": c.pass, "details": c.details }));
    }
    Value::Object(m)
}

pub fn count_report_value(
    type_str: &str,
    module_str: &str,
    report: &CountReport,
    checks: &[CheckResult],
    evals: &[(u64, BigInt)],
) -> Result<Value> {
    let mut m = Map::new();
    m.insert("type".into(), json!(type_str));
    m.insert("module".into(), json!(module_str));
    m.insert("n".into(), poly_value(&report.n_v)?);
    m.insert("n_prime".into(), poly_value(&report.n_prime)?);
    m.insert("strata".into(), strata_value(&report.strata)?);
    m.insert("checks".into(), checks_value(checks));
    m.insert(
        "flags".into(),
        json!({
            "n_at_1_ok": report.n_at_1_ok,
            "degree_ok": report.degree_ok,
            "nonneg_conjecture_holds": report.nonneg_conjecture_holds,
            "group_case_note": report.group_case_note,
        }),
    );
    if !evals.is_empty() {
        let mut ev = Map::new();
        for (q, v) in evals {
            ev.insert(q.to_string(), big_to_value(v)?);
        }
        m.insert("evaluations".into(), Value::Object(ev));
    }
    Ok(Value::Object(m))
}

pub fn character_value(ch: &ModuleCharacter) -> Value {
    let weights: Vec<Value> = ch
        .weights()
        .iter()
        .map(|(w, mult)| json!({ "weight": qvec_value(w), "mult": mult }))
        .collect();
    json!({ "dim": ch.dim(), "weights": weights })
}

pub fn datum_value(datum: &RootDatum) -> Value {
    let gram: Vec<Value> = (0..datum.rank())
        .map(|i| {
            Value::Array(
                (0..datum.rank())
                    .map(|j| Value::String(rat_string(datum.gram().entry(i, j))))
                    .collect(),
            )
        })
        .collect();
    json!({
        "type": datum.type_spec().to_string(),
        "rank": datum.rank(),
        "dim": datum.dim_group(),
        "gram": gram,
        "roots": Value::Array(datum.roots().iter().map(qvec_value).collect()),
        "simple_roots": Value::Array(datum.simple_roots().iter().map(qvec_value).collect()),
        "cochar_basis": Value::Array(datum.cochar_basis().iter().map(qvec_value).collect()),
        "degrees": datum.reflection_degrees(),
    })
}

pub fn ffcount_value(c: &FFCount) -> Value {
    let mut classes = Map::new();
    for (label, count) in &c.by_class {
        classes.insert(label.clone(), json!(count));
    }
    json!({ "q": c.q, "total": c.total, "by_class": Value::Object(classes) })
}

pub fn unipotent_value(
    type_str: &str,
    report: &GroupCaseReport,
    evals: &[(u64, BigInt)],
) -> Result<Value> {
    let mut m = Map::new();
    m.insert("type".into(), json!(type_str));
    m.insert("total".into(), poly_value(&report.total)?);
    m.insert("steinberg".into(), poly_value(&report.steinberg)?);
    m.insert("steinberg_ok".into(), json!(report.steinberg_ok));
    m.insert("pieces".into(), strata_value(&report.pieces)?);
    if !evals.is_empty() {
        let mut ev = Map::new();
        for (q, v) in evals {
            ev.insert(q.to_string(), big_to_value(v)?);
        }
        m.insert("evaluations".into(), Value::Object(ev));
    }
    Ok(Value::Object(m))
}

/// One TSV row per stratum: lambda, k, dim, f, contribution.
pub fn strata_tsv(strata: &[Stratum]) -> String {
    let mut out = String::from("lambda\tk\tdim\tn\tN\tf\tcontribution\n");
    for s in strata {
        let lambda: Vec<String> = s.lambda_coords.iter().map(|c| c.to_string()).collect();
        let f: Vec<String> = s.f.coeffs().iter().map(|c| c.to_string()).collect();
        let contrib: Vec<String> = s.contribution.coeffs().iter().map(|c| c.to_string()).collect();
        out.push_str(&format!(
            "({})\t{}\t{}\t{}\t{}\t[{}]\t[{}]\n",
            lambda.join(","),
            s.k,
            s.dim_stratum,
            s.n,
            s.n_above,
            f.join(","),
            contrib.join(",")
        ));
    }
    out
}

/// Pretty JSON with sorted keys (serde_json maps are ordered), one
/// trailing newline: byte-identical across runs.
pub fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("JSON serialization cannot fail"));
}
