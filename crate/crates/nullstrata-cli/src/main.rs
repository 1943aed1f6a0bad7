//! Command-line driver: build root data and characters, run the
//! stratification engine, emit canonical reports, and run the
//! verification suites.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 invalid input,
//! 3 capacity exceeded.

mod jobspec;
mod memostore;
mod output;
mod verify;

use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::json;

use nullstrata_core::count::{count_report, group_case_counts, verify_identities};
use nullstrata_core::geomopt::{torus_optimal, TorusOptimal};
use nullstrata_core::rootsys::build_root_datum;
use nullstrata_core::strata::{Engine, EngineConfig, GroupState};
use nullstrata_core::{Error, ModuleCharacter, QVec, Result, RootDatum};

use jobspec::{parse_eval_points, parse_lattice, parse_type_spec, ModuleSpec};

#[derive(Parser, Debug, Clone, PartialEq)]
#[command(
    name = "nullstrata",
    version,
    about = "Hesselink stratification of nullcones and exact finite-field point counts"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Toggle {
    On,
    Off,
}

#[derive(Args, Debug, Clone, PartialEq)]
struct CommonArgs {
    /// Group type, e.g. A2, B2xA1, A1+T1.
    #[arg(long = "type")]
    type_spec: String,
    /// Module: adjoint, dual-adjoint, or hw:<coeffs> (per-factor lists
    /// separated by '/').
    #[arg(long, default_value = "adjoint")]
    module: String,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Worker threads. The engine is deterministic: output is
    /// byte-identical for every value.
    #[arg(long, default_value_t = 1)]
    threads: u32,
    /// Memoize sub-nullcone polynomials.
    #[arg(long, value_enum, default_value_t = Toggle::On)]
    memo: Toggle,
    /// Raise the candidate-subset size above the rank (paranoia runs).
    #[arg(long = "subset-bound", default_value_t = 0)]
    subset_bound: usize,
    /// Cocharacter lattice override: basis rows (';'-separated) of
    /// rational coordinates (','-separated) in the default coroot basis.
    #[arg(long)]
    lattice: Option<String>,
}

#[derive(Subcommand, Debug, Clone, PartialEq)]
enum Command {
    /// Dump the root datum.
    Roots {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Print the module character as a weight multiset.
    Character {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Enumerate the Hesselink strata of the module's nullcone.
    Strata {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Full counting report with identity checks; optionally evaluate at
    /// prime powers.
    Count {
        #[command(flatten)]
        common: CommonArgs,
        /// Comma-separated prime powers to evaluate at.
        #[arg(long)]
        eval: Option<String>,
    },
    /// Torus instability analysis of an explicit weight support.
    Blade {
        #[command(flatten)]
        common: CommonArgs,
        /// Comma-separated indices into the character's weight list.
        #[arg(long)]
        support: String,
    },
    /// Run brute-force finite-field suites against the engine; exits 1 on
    /// any mismatch.
    Verify {
        /// Suite: sl2, sl3, forms, torus, or all.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Comma-separated field sizes.
        #[arg(long, default_value = "2,3")]
        q: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Unipotent-variety piece counts of a group (adjoint module reading).
    Unipotent {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long)]
        eval: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("{e}");
            match e {
                Error::Capacity(_) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

struct Job {
    datum: Arc<RootDatum>,
    character: ModuleCharacter,
    engine: Engine,
    type_str: String,
    module_str: String,
    format: Format,
}

fn prepare(common: &CommonArgs) -> Result<Job> {
    if common.threads == 0 {
        return Err(Error::InvalidInput("--threads must be at least 1".into()));
    }
    let spec = parse_type_spec(&common.type_spec)?;
    let mut datum = build_root_datum(&spec)?;
    if let Some(lattice) = &common.lattice {
        let basis = parse_lattice(lattice, &datum)?;
        datum = datum.with_cochar_lattice(basis)?;
    }
    let datum = Arc::new(datum);
    let module = ModuleSpec::parse(&common.module)?;
    let character = module.character(&datum)?;
    if !character.is_integral(&datum) {
        return Err(Error::InvalidInput(
            "module weights do not pair integrally with the cocharacter lattice".into(),
        ));
    }
    let mut engine = Engine::new(EngineConfig {
        subset_bound: common.subset_bound,
        memo_enabled: common.memo == Toggle::On,
    });
    if let Some(dir) = memostore::memo_dir() {
        memostore::load(&mut engine, &dir);
    }
    Ok(Job {
        datum,
        character,
        engine,
        type_str: spec.to_string(),
        module_str: module.print(),
        format: common.format,
    })
}

fn finish(job: &Job) {
    if let Some(dir) = memostore::memo_dir() {
        memostore::save(&job.engine, &dir);
    }
}

fn evaluations(poly: &nullstrata_core::IntPoly, eval: &Option<String>) -> Result<Vec<(u64, BigInt)>> {
    let Some(eval) = eval else { return Ok(Vec::new()) };
    let points = parse_eval_points(eval)?;
    Ok(points.iter().map(|&q| (q, poly.eval_i64(q as i64))).collect())
}

fn run(cli: &Cli) -> Result<ExitCode> {
    match &cli.command {
        Command::Roots { common } => {
            let job = prepare(common)?;
            output::print_json(&output::datum_value(&job.datum));
            Ok(ExitCode::SUCCESS)
        }
        Command::Character { common } => {
            let job = prepare(common)?;
            output::print_json(&output::character_value(&job.character));
            Ok(ExitCode::SUCCESS)
        }
        Command::Strata { common } => {
            let mut job = prepare(common)?;
            let state = GroupState::ambient(job.datum.clone());
            let strata = job.engine.enumerate_strata(&state, &job.character)?;
            match job.format {
                Format::Json => output::print_json(&json!({
                    "type": job.type_str,
                    "module": job.module_str,
                    "strata": output::strata_value(&strata)?,
                })),
                Format::Tsv => print!("{}", output::strata_tsv(&strata)),
            }
            finish(&job);
            Ok(ExitCode::SUCCESS)
        }
        Command::Count { common, eval } => {
            let mut job = prepare(common)?;
            let report =
                count_report(&mut job.engine, &job.datum, &job.character, &job.module_str)?;
            let checks =
                verify_identities(&mut job.engine, &job.datum, &job.character, &report)?;
            let evals = evaluations(&report.n_v, eval)?;
            match job.format {
                Format::Json => output::print_json(&output::count_report_value(
                    &job.type_str,
                    &job.module_str,
                    &report,
                    &checks,
                    &evals,
                )?),
                Format::Tsv => {
                    let coeffs: Vec<String> =
                        report.n_v.coeffs().iter().map(|c| c.to_string()).collect();
                    println!("n\t[{}]", coeffs.join(","));
                    for (q, v) in &evals {
                        println!("eval\t{q}\t{v}");
                    }
                    print!("{}", output::strata_tsv(&report.strata));
                }
            }
            finish(&job);
            let all_pass = checks.iter().all(|c| c.pass);
            Ok(if all_pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Blade { common, support } => {
            let job = prepare(common)?;
            let weights = job.character.weights();
            let mut chosen: Vec<QVec> = Vec::new();
            for part in support.split(',') {
                let idx: usize = part.trim().parse().map_err(|_| {
                    Error::InvalidInput(format!("bad support index '{part}'"))
                })?;
                let (w, _) = weights.get(idx).ok_or_else(|| {
                    Error::InvalidInput(format!(
                        "support index {idx} out of range (character has {} weights)",
                        weights.len()
                    ))
                })?;
                chosen.push(w.clone());
            }
            let verdict =
                torus_optimal(&chosen, job.datum.gram(), job.datum.cochar_basis())?;
            let value = match verdict {
                TorusOptimal::Semistable => json!({ "semistable": true }),
                TorusOptimal::Unstable { lambda, m, mu } => {
                    let coords = job.datum.cochar_lattice_coords(&lambda).ok_or_else(|| {
                        Error::Internal("optimal cocharacter escaped the lattice".into())
                    })?;
                    json!({
                        "semistable": false,
                        "lambda": output::ints_value(&coords)?,
                        "m": output::rat_string(&m),
                        "mu": output::qvec_value(&mu),
                    })
                }
            };
            output::print_json(&value);
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, q, format } => {
            let points = parse_eval_points(q)?;
            let mut engine = Engine::new(EngineConfig::default());
            let report = verify::run_suite(&mut engine, suite, &points)?;
            let all_ok = report.rows.iter().all(|r| r.ok);
            match format {
                Format::Json => {
                    let rows_json: Vec<serde_json::Value> = report
                        .rows
                        .iter()
                        .map(|r| {
                            json!({
                                "suite": r.suite,
                                "case": r.case,
                                "q": r.q,
                                "oracle": r.oracle.to_string(),
                                "engine": r.engine.to_string(),
                                "ok": r.ok,
                            })
                        })
                        .collect();
                    let counts_json: serde_json::Map<String, serde_json::Value> = report
                        .counts
                        .iter()
                        .map(|(label, c)| (label.clone(), output::ffcount_value(c)))
                        .collect();
                    output::print_json(&json!({
                        "rows": rows_json,
                        "counts": counts_json,
                        "all_ok": all_ok,
                    }));
                }
                Format::Tsv => {
                    println!("suite\tcase\tq\toracle\tengine\tok");
                    for r in &report.rows {
                        println!(
                            "{}\t{}\t{}\t{}\t{}\t{}",
                            r.suite, r.case, r.q, r.oracle, r.engine, r.ok
                        );
                    }
                }
            }
            Ok(if all_ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Unipotent { common, eval } => {
            let mut job = prepare(common)?;
            let report =
                count_report(&mut job.engine, &job.datum, &job.character, &job.module_str)?;
            let uni = group_case_counts(&job.datum, &job.character, &report)?;
            let evals = evaluations(&uni.total, eval)?;
            output::print_json(&output::unipotent_value(&job.type_str, &uni, &evals)?);
            finish(&job);
            Ok(if uni.steinberg_ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    /// Canonical argv for a parsed invocation (print side of the
    /// parse -> print -> parse round trip).
    fn to_args(cli: &Cli) -> Vec<String> {
        fn common(c: &CommonArgs, out: &mut Vec<String>) {
            out.extend(["--type".into(), c.type_spec.clone()]);
            out.extend(["--module".into(), c.module.clone()]);
            out.extend([
                "--format".into(),
                match c.format {
                    Format::Json => "json".into(),
                    Format::Tsv => "tsv".into(),
                },
            ]);
            out.extend(["--threads".into(), c.threads.to_string()]);
            out.extend([
                "--memo".into(),
                match c.memo {
                    Toggle::On => "on".into(),
                    Toggle::Off => "off".into(),
                },
            ]);
            out.extend(["--subset-bound".into(), c.subset_bound.to_string()]);
            if let Some(l) = &c.lattice {
                out.extend(["--lattice".into(), l.clone()]);
            }
        }
        let mut out = vec!["nullstrata".to_string()];
        match &cli.command {
            Command::Roots { common: c } => {
                out.push("roots".into());
                common(c, &mut out);
            }
            Command::Character { common: c } => {
                out.push("character".into());
                common(c, &mut out);
            }
            Command::Strata { common: c } => {
                out.push("strata".into());
                common(c, &mut out);
            }
            Command::Count { common: c, eval } => {
                out.push("count".into());
                common(c, &mut out);
                if let Some(e) = eval {
                    out.extend(["--eval".into(), e.clone()]);
                }
            }
            Command::Blade { common: c, support } => {
                out.push("blade".into());
                common(c, &mut out);
                out.extend(["--support".into(), support.clone()]);
            }
            Command::Verify { suite, q, format } => {
                out.push("verify".into());
                out.extend(["--suite".into(), suite.clone()]);
                out.extend(["--q".into(), q.clone()]);
                out.extend([
                    "--format".into(),
                    match format {
                        Format::Json => "json".into(),
                        Format::Tsv => "tsv".into(),
                    },
                ]);
            }
            Command::Unipotent { common: c, eval } => {
                out.push("unipotent".into());
                common(c, &mut out);
                if let Some(e) = eval {
                    out.extend(["--eval".into(), e.clone()]);
                }
            }
        }
        out
    }

    #[test]
    fn jobspec_print_parse_roundtrip() {
        let examples: Vec<Vec<&str>> = vec![
            vec!["nullstrata", "count", "--type", "A1", "--module", "adjoint", "--eval", "2,3"],
            vec!["nullstrata", "strata", "--type", "A2", "--format", "tsv"],
            vec!["nullstrata", "verify", "--suite", "sl3", "--q", "2"],
            vec![
                "nullstrata",
                "count",
                "--type",
                "B2xA1",
                "--module",
                "hw:1,0/1",
                "--memo",
                "off",
                "--subset-bound",
                "3",
            ],
            vec!["nullstrata", "blade", "--type", "A2", "--support", "0,2"],
            vec!["nullstrata", "roots", "--type", "A1+T1", "--lattice", "1,0;0,1"],
        ];
        for argv in examples {
            let parsed = Cli::try_parse_from(&argv).unwrap();
            let printed = to_args(&parsed);
            let reparsed = Cli::try_parse_from(&printed).unwrap();
            assert_eq!(parsed, reparsed, "round trip failed for {argv:?}");
        }
    }
}
