//! Command-line interface for hollow tropical flag positivity.
//!
//! Subcommands wrap the library: flag validation (`check-dressian`),
//! hollow classification (`classify-hollow`), the general necessary
//! conditions (`check-necessary`), Bruhat interval polytopes
//! (`bruhat-polytope`), gammoid evaluation (`gammoid-eval`), realization
//! matrices (`realize`), and a randomized self-test (`selftest`). All
//! input and output is JSON; exit code 0 means the verdict passed, 1 means
//! it failed, 2 means the input could not be processed.

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use std::io::Read;
use std::process::ExitCode;
use std::time::Instant;

use tropflag::bruhat::{q_polytope, q_twisted, twisted_to_untwisted, Permutation};
use tropflag::gammoid::{evaluate_gammoid, recover_tnn_weights, GammoidInstance};
use tropflag::hollow::{build_realization_matrix, classify};
use tropflag::trop::Rat;
use tropflag::{FlagValuatedMatroid, ValuatedMatroid};

#[derive(Parser)]
#[command(name = "tropflag", about = "positivity toolkit for tropical flag varieties of rank (1, n-1)", version)]
struct Cli {
    /// Pretty-print the JSON report.
    #[arg(long, global = true)]
    pretty: bool,
    /// Include wall-clock timings in the report (breaks byte-for-byte
    /// reproducibility).
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Validate a flag valuated matroid against the tropical Plücker and
    /// incidence relations.
    CheckDressian(InputArg),
    /// Classify a hollow flag against every positivity notion.
    ClassifyHollow(InputArg),
    /// Evaluate the necessary positivity conditions of a flag of any rank.
    CheckNecessary(InputArg),
    /// Compute the vertex set of a (twisted) Bruhat interval polytope.
    BruhatPolytope(BruhatArgs),
    /// Evaluate the valuated flag gammoid of a weighted digraph.
    GammoidEval(InputArg),
    /// Build and verify a Puiseux realization matrix for a hollow flag in
    /// the non-negative flag Dressian.
    Realize(InputArg),
    /// Random round-trip checks of the gammoid parametrization.
    Selftest(SelftestArgs),
}

#[derive(Args)]
struct InputArg {
    /// Path to a JSON file, or `-` for stdin.
    path: String,
}

#[derive(Args)]
struct BruhatArgs {
    /// Lower interval bound, one-line notation (e.g. 2134).
    #[arg(long)]
    u: String,
    /// Upper interval bound, one-line notation.
    #[arg(long)]
    v: String,
    /// Rank vector, comma separated (e.g. 1,3).
    #[arg(long)]
    ranks: String,
    /// Compute the twisted polytope instead of the untwisted one.
    #[arg(long)]
    twisted: bool,
    /// Also express the twisted polytope as an untwisted one.
    #[arg(long)]
    untwist: bool,
}

#[derive(Args)]
struct SelftestArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 100)]
    trials: usize,
}

#[derive(Serialize)]
struct Report {
    command: String,
    input_sha256: Option<String>,
    verdict: String,
    data: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<u128>,
}

fn read_input(path: &str) -> Result<String, String> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| format!("stdin: {e}"))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))
    }
}

fn digest(text: &str) -> String {
    let mut h = Sha256::new();
    h.update(text.as_bytes());
    format!("{:x}", h.finalize())
}

fn parse_flag(text: &str) -> Result<FlagValuatedMatroid, String> {
    serde_json::from_str(text).map_err(|e| format!("flag JSON: {e}"))
}

/// verdict, payload
type CmdResult = Result<(bool, Value), String>;

fn cmd_check_dressian(text: &str) -> CmdResult {
    let flag = parse_flag(text)?;
    match flag.validate_flag() {
        Ok(()) => Ok((true, json!({"valid": true}))),
        Err(e) => Ok((false, json!({"valid": false, "witness": e.to_string()}))),
    }
}

fn cmd_classify_hollow(text: &str) -> CmdResult {
    let flag = parse_flag(text)?;
    let c = classify(&flag).map_err(|e| e.to_string())?;
    let verdict = c.tnn;
    Ok((verdict, serde_json::to_value(&c).expect("serializable")))
}

fn cmd_check_necessary(text: &str) -> CmdResult {
    let flag = parse_flag(text)?;
    // The necessary conditions are meaningful even off the Dressian, so
    // Plücker validity is reported as data rather than enforced up front.
    let in_dressian = flag.validate_flag();
    let report = flag.check_necessary();
    let verdict = report.tnn && report.bruhat && report.nonneg;
    let mut data = serde_json::to_value(&report).expect("serializable");
    let obj = data.as_object_mut().expect("report is an object");
    obj.insert("in_dressian".into(), json!(in_dressian.is_ok()));
    if let Err(e) = in_dressian {
        obj.insert("dressian_witness".into(), json!(e.to_string()));
    }
    Ok((verdict, data))
}

fn cmd_bruhat(args: &BruhatArgs) -> CmdResult {
    let u = Permutation::parse(&args.u).map_err(|e| e.to_string())?;
    let v = Permutation::parse(&args.v).map_err(|e| e.to_string())?;
    let ranks: Vec<usize> = args
        .ranks
        .split(',')
        .map(|p| p.trim().parse().map_err(|_| format!("bad rank {p:?}")))
        .collect::<Result<_, _>>()?;
    let verts = if args.twisted {
        q_twisted(&u, &v, &ranks)
    } else {
        q_polytope(&u, &v, &ranks)
    }
    .map_err(|e| e.to_string())?;
    let vert_json: Vec<Vec<String>> = verts
        .iter()
        .map(|p| p.iter().map(Rat::to_string).collect())
        .collect();
    let mut data = json!({
        "u": u.to_string(),
        "v": v.to_string(),
        "ranks": ranks,
        "twisted": args.twisted,
        "vertices": vert_json,
    });
    if args.untwist {
        if !args.twisted {
            return Err("--untwist requires --twisted".into());
        }
        let (a, b) = twisted_to_untwisted(&u, &v, &ranks).map_err(|e| e.to_string())?;
        data["untwisted_interval"] = json!([a.to_string(), b.to_string()]);
    }
    Ok((true, data))
}

fn cmd_gammoid_eval(text: &str) -> CmdResult {
    let inst: GammoidInstance = serde_json::from_str(text).map_err(|e| format!("graph JSON: {e}"))?;
    let flag = evaluate_gammoid(&inst.graph, &inst.sinks).map_err(|e| e.to_string())?;
    let valid = flag.validate_flag().is_ok();
    Ok((valid, serde_json::to_value(&flag).expect("serializable")))
}

fn cmd_realize(text: &str) -> CmdResult {
    let flag = parse_flag(text)?;
    let real = build_realization_matrix(&flag).map_err(|e| e.to_string())?;
    let minors: Vec<Value> = real
        .matrix
        .maximal_minors()
        .map_err(|e| e.to_string())?
        .iter()
        .enumerate()
        .map(|(k, m)| {
            let (val, sign) = m.valuation_and_sign();
            json!({
                "omit_col": k + 1,
                "valuation": serde_json::to_value(val).expect("serializable"),
                "sign": sign.to_string(),
            })
        })
        .collect();
    let mut data = serde_json::to_value(&real).expect("serializable");
    data["minors"] = Value::Array(minors);
    Ok((true, data))
}

fn cmd_selftest(args: &SelftestArgs) -> CmdResult {
    use rand::Rng;
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(args.seed);
    let mut failures = Vec::new();

    // random weighted parametrizing graphs must evaluate to valid tnn flags
    for trial in 0..args.trials {
        let n = rng.gen_range(3..=6);
        let mu_loops: Vec<usize> = (2..n).filter(|_| rng.gen_bool(0.2)).collect();
        let nu_missing: Vec<usize> = (2..n)
            .filter(|i| !mu_loops.contains(i) && rng.gen_bool(0.15))
            .collect();
        let flag = match random_support_flag(n, &mu_loops, &nu_missing) {
            Some(f) => f,
            None => continue,
        };
        let skel = match tropflag::gammoid::gamma_of(&flag) {
            Ok(s) => s,
            Err(_) => continue, // isolated star: not parametrizable
        };
        let (nc, nd) = skel.weight_slots();
        let chain: Vec<Rat> = (0..nc).map(|_| Rat::from_integer(rng.gen_range(-5..=5))).collect();
        let diag: Vec<Rat> = (0..nd).map(|_| Rat::from_integer(rng.gen_range(-5..=5))).collect();
        let graph = match skel.with_weights(&chain, &diag) {
            Ok(g) => g,
            Err(e) => {
                failures.push(format!("trial {trial}: graph build failed: {e}"));
                continue;
            }
        };
        let sinks = match skel.sink_flag() {
            Ok(s) => s,
            Err(_) => continue,
        };
        match evaluate_gammoid(&graph, &sinks) {
            Ok(f) => {
                if f.validate_flag().is_err() {
                    failures.push(format!("trial {trial}: gammoid produced invalid flag"));
                } else if !classify(&f).map(|c| c.tnn).unwrap_or(false) {
                    failures.push(format!("trial {trial}: gammoid flag is not tnn"));
                }
            }
            Err(e) => failures.push(format!("trial {trial}: evaluation failed: {e}")),
        }
    }

    // random tnn lambda vectors must round-trip through weight recovery
    for trial in 0..args.trials {
        let n = rng.gen_range(3..=6);
        let x: Vec<i64> = (0..n - 1).map(|_| rng.gen_range(-5..=5)).collect();
        let lambda: Vec<i64> = (1..=n)
            .map(|i| {
                let left = if i >= 2 { Some(x[i - 2]) } else { None };
                let right = if i <= n - 1 { Some(x[i - 1]) } else { None };
                left.into_iter().chain(right).min().expect("nonempty")
            })
            .collect();
        let flag = match tnn_flag_from_lambda(&lambda) {
            Some(f) => f,
            None => continue,
        };
        let rec = match recover_tnn_weights(&flag) {
            Ok(r) => r,
            Err(e) => {
                failures.push(format!("lambda trial {trial}: recovery failed: {e}"));
                continue;
            }
        };
        let chain = vec![Rat::from_integer(0); rec.skeleton.weight_slots().0];
        let round = rec
            .skeleton
            .with_weights(&chain, &rec.y)
            .and_then(|g| evaluate_gammoid(&g, &rec.skeleton.sink_flag()?));
        match round {
            Ok(f2) => {
                let same = f2
                    .constituents()
                    .iter()
                    .zip(flag.constituents())
                    .all(|(a, b)| {
                        a.proj_vector().proj_equal(&b.proj_vector()).unwrap_or(false)
                    });
                if !same {
                    failures.push(format!("lambda trial {trial}: round trip mismatch"));
                }
            }
            Err(e) => failures.push(format!("lambda trial {trial}: round trip failed: {e}")),
        }
    }

    let pass = failures.is_empty();
    Ok((
        pass,
        json!({"seed": args.seed, "trials": args.trials, "failures": failures}),
    ))
}

/// A trivially valued hollow flag with the given rank-1 loops and missing
/// corank-1 cosingletons; `None` if the support is degenerate.
fn random_support_flag(
    n: usize,
    mu_loops: &[usize],
    nu_missing: &[usize],
) -> Option<FlagValuatedMatroid> {
    use tropflag::matroid::Subset;
    let mu = ValuatedMatroid::trivial_on(
        n,
        1,
        (1..=n)
            .filter(|i| !mu_loops.contains(i))
            .map(|i| Subset::new(vec![i]).expect("singleton")),
    )
    .ok()?;
    let nu = ValuatedMatroid::trivial_on(
        n,
        n - 1,
        (1..=n)
            .filter(|i| !nu_missing.contains(i))
            .map(|i| Subset::new(vec![i]).expect("singleton").complement(n)),
    )
    .ok()?;
    let flag = FlagValuatedMatroid::hollow(mu, nu).ok()?;
    flag.validate_flag().ok()?;
    Some(flag)
}

/// Full-support hollow flag with trivially valued rank-1 part and the
/// given finite lambda vector.
fn tnn_flag_from_lambda(lambda: &[i64]) -> Option<FlagValuatedMatroid> {
    use tropflag::matroid::Subset;
    let n = lambda.len();
    let mu = ValuatedMatroid::uniform_trivial(1, n);
    let nu = ValuatedMatroid::new(
        n,
        n - 1,
        (1..=n)
            .map(|i| {
                (
                    Subset::new(vec![i]).expect("singleton").complement(n),
                    Rat::from_integer(lambda[i - 1]),
                )
            })
            .collect(),
    )
    .ok()?;
    let flag = FlagValuatedMatroid::hollow(mu, nu).ok()?;
    flag.validate_flag().ok()?;
    Some(flag)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let (name, input): (&str, Option<String>) = match &cli.command {
        Cmd::CheckDressian(a) => ("check-dressian", Some(a.path.clone())),
        Cmd::ClassifyHollow(a) => ("classify-hollow", Some(a.path.clone())),
        Cmd::CheckNecessary(a) => ("check-necessary", Some(a.path.clone())),
        Cmd::BruhatPolytope(_) => ("bruhat-polytope", None),
        Cmd::GammoidEval(a) => ("gammoid-eval", Some(a.path.clone())),
        Cmd::Realize(a) => ("realize", Some(a.path.clone())),
        Cmd::Selftest(_) => ("selftest", None),
    };
    let text = match &input {
        Some(path) => match read_input(path) {
            Ok(t) => Some(t),
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
        },
        None => None,
    };
    let outcome = match &cli.command {
        Cmd::CheckDressian(_) => cmd_check_dressian(text.as_deref().expect("input read")),
        Cmd::ClassifyHollow(_) => cmd_classify_hollow(text.as_deref().expect("input read")),
        Cmd::CheckNecessary(_) => cmd_check_necessary(text.as_deref().expect("input read")),
        Cmd::BruhatPolytope(a) => cmd_bruhat(a),
        Cmd::GammoidEval(_) => cmd_gammoid_eval(text.as_deref().expect("input read")),
        Cmd::Realize(_) => cmd_realize(text.as_deref().expect("input read")),
        Cmd::Selftest(a) => cmd_selftest(a),
    };
    match outcome {
        Ok((pass, data)) => {
            let report = Report {
                command: name.to_string(),
                input_sha256: text.as_deref().map(digest),
                verdict: if pass { "pass".into() } else { "fail".into() },
                data,
                elapsed_ms: cli.timings.then(|| start.elapsed().as_millis()),
            };
            let rendered = if cli.pretty {
                serde_json::to_string_pretty(&report)
            } else {
                serde_json::to_string(&report)
            }
            .expect("report serializes");
            println!("{rendered}");
            if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
