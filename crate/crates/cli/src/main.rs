//! Command-line front end.
//!
//! Exit codes form a closed set: 0 success / backdoor found, 1 artifact
//! validation failed, 2 input error, 10 satisfiable, 20 unsatisfiable (or
//! too deep for `detect`), 30 no verdict within the depth budget, 40
//! resource guard exhausted.
//!
//! All JSON written to stdout or artifact files is byte-deterministic for
//! fixed inputs, flags, and seeds; wall-clock timing goes to stderr only.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigUint;
use serde::Serialize;
use sha2::{Digest, Sha256};

use rbdsat::cnf::{parse_dimacs, serialize_dimacs, Formula, ParseOptions};
use rbdsat::detect::{
    find_srb, permissive_solve, validate_obstruction, ObstructionTree, Params, SrbSearch, Verdict,
};
use rbdsat::guard::ResourceGuard;
use rbdsat::instances::{
    enumerate_small, grid_family, random_formula, set_cover_reduction, RandomRoles,
    SetCoverInstance,
};
use rbdsat::oracle::{srbd_exact, truth_table_count, truth_table_sat, wrbd_exact, DepthResult, OracleError, OracleLimits};
use rbdsat::srb::{SplitPolicy, SrbTree};
use rbdsat::wrb::{wrb_solve, WrbOptions, WrbOutcome};

const EXIT_OK: u8 = 0;
const EXIT_INVALID: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_SAT: u8 = 10;
const EXIT_UNSAT: u8 = 20;
const EXIT_TOO_DEEP: u8 = 30;
const EXIT_GUARD: u8 = 40;

#[derive(Parser)]
#[command(name = "rbdsat", version, about = "Recursive backdoors for SAT")]
struct Cli {
    /// Print a machine-readable run report on stdout.
    #[arg(long, global = true)]
    json: bool,
    /// Remove tautological clauses while parsing instead of rejecting them.
    #[arg(long, global = true)]
    sanitize: bool,
    /// Wall-clock budget in seconds.
    #[arg(long, global = true, default_value_t = 900)]
    max_seconds: u64,
    /// Work budget in search nodes.
    #[arg(long, global = true, default_value_t = 500_000_000)]
    max_nodes: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Find a strong recursive backdoor to the empty class, or certify
    /// that none of depth at most k exists.
    Detect {
        file: PathBuf,
        #[arg(short = 'k', long = "depth")]
        depth: u32,
        /// Write the backdoor document here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide satisfiability through backdoor detection.
    Solve {
        file: PathBuf,
        #[arg(short = 'k', long = "depth")]
        depth: u32,
    },
    /// Count models through backdoor detection.
    Count {
        file: PathBuf,
        #[arg(short = 'k', long = "depth")]
        depth: u32,
    },
    /// Exact brute-force measures for small inputs.
    Oracle {
        file: PathBuf,
        #[arg(long, value_parser = ["srbd", "wrbd", "sat", "count"])]
        measure: String,
        /// Depth cap for the srbd/wrbd measures.
        #[arg(long, default_value_t = 12)]
        cap: u32,
    },
    /// Search for a weak recursive backdoor within depth k.
    Wrb {
        file: PathBuf,
        #[arg(short = 'k', long = "depth")]
        depth: u32,
    },
    /// Generate instances.
    Gen {
        #[command(subcommand)]
        family: GenFamily,
    },
    /// Re-check a backdoor or obstruction document against a formula.
    Validate {
        file: PathBuf,
        #[arg(long)]
        artifact: PathBuf,
    },
}

#[derive(Args)]
struct GenOutput {
    /// Write DIMACS here (with a `.roles.json` sidecar) instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum GenFamily {
    /// The grid witness family.
    Grid {
        #[arg(long)]
        size: u32,
        #[command(flatten)]
        output: GenOutput,
    },
    /// The set-cover reduction; sets are comma-separated element lists
    /// joined by semicolons, over the universe 1..=universe.
    Setcover {
        #[arg(long)]
        universe: u32,
        #[arg(long)]
        sets: String,
        #[arg(long)]
        cover_k: u32,
        #[command(flatten)]
        output: GenOutput,
    },
    /// Seeded random CNF.
    Random {
        #[arg(short = 'n', long)]
        vars: u32,
        #[arg(short = 'm', long)]
        clauses: u32,
        #[arg(long)]
        width: u32,
        #[arg(long)]
        seed: u64,
        #[command(flatten)]
        output: GenOutput,
    },
    /// Every formula within the given bounds, as a DIMACS stream separated
    /// by comment lines.
    Enumerate {
        #[arg(long, default_value_t = 4)]
        max_vars: u32,
        #[arg(long, default_value_t = 4)]
        max_clauses: u32,
        #[arg(long, default_value_t = 3)]
        max_width: u32,
    },
}

/// The machine-readable run report. Wall time is deliberately absent:
/// reports must be byte-identical across runs.
#[derive(Serialize)]
struct RunReport {
    format: &'static str,
    command: String,
    input: Option<InputDigest>,
    parameters: serde_json::Value,
    outcome: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    detail: Option<serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    artifact: Option<String>,
    nodes: u64,
}

#[derive(Serialize)]
struct InputDigest {
    path: String,
    sha256: String,
}

struct Ctx {
    json: bool,
    sanitize: bool,
    max_seconds: u64,
    max_nodes: u64,
    started: Instant,
}

impl Ctx {
    fn guard(&self) -> ResourceGuard {
        ResourceGuard::unlimited()
            .with_node_limit(self.max_nodes)
            .with_seconds(self.max_seconds)
    }

    fn read_formula(&self, path: &Path) -> Result<(Formula, InputDigest), CliFailure> {
        let bytes = std::fs::read(path).map_err(|e| {
            CliFailure::input(format!("cannot read {}: {e}", path.display()))
        })?;
        let digest = InputDigest {
            path: path.display().to_string(),
            sha256: hex(&Sha256::digest(&bytes)),
        };
        let text = String::from_utf8(bytes)
            .map_err(|_| CliFailure::input(format!("{} is not UTF-8", path.display())))?;
        let outcome = parse_dimacs(&text, ParseOptions { sanitize: self.sanitize })
            .map_err(|e| CliFailure::input(format!("{}: {e}", path.display())))?;
        for id in &outcome.removed_tautologies {
            eprintln!("warning: removed tautological clause {id}");
        }
        if !outcome.dropped_vars.is_empty() {
            eprintln!(
                "warning: {} declared variable(s) occur in no clause and were dropped",
                outcome.dropped_vars.len()
            );
        }
        Ok((outcome.formula, digest))
    }

    fn finish(&self, completion: Completion) -> u8 {
        let Completion { command, input, parameters, outcome, detail, artifact, nodes, plain, code } =
            completion;
        if self.json {
            let report = RunReport {
                format: "rbdsat.report/1",
                command: command.to_string(),
                input,
                parameters,
                outcome: outcome.to_string(),
                detail,
                artifact,
                nodes,
            };
            println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
        } else if let Some(text) = plain {
            println!("{text}");
        }
        eprintln!(
            "{command}: {outcome} in {:.3}s ({nodes} nodes)",
            self.started.elapsed().as_secs_f64()
        );
        code
    }
}

/// Everything a finished command reports: the machine fields of the run
/// report, the plain-text stdout rendering, and the exit code.
struct Completion {
    command: &'static str,
    input: Option<InputDigest>,
    parameters: serde_json::Value,
    outcome: &'static str,
    detail: Option<serde_json::Value>,
    artifact: Option<String>,
    nodes: u64,
    plain: Option<String>,
    code: u8,
}

struct CliFailure {
    message: String,
    code: u8,
}

impl CliFailure {
    fn input(message: String) -> CliFailure {
        CliFailure { message, code: EXIT_INPUT }
    }

    fn guard(message: String) -> CliFailure {
        CliFailure { message, code: EXIT_GUARD }
    }

    fn internal(message: String) -> CliFailure {
        CliFailure { message, code: EXIT_INVALID }
    }
}

fn hex(bytes: &[u8]) -> String {
    let mut out = String::with_capacity(bytes.len() * 2);
    for b in bytes {
        let _ = write!(out, "{b:02x}");
    }
    out
}

fn detect_failure(err: rbdsat::detect::DetectError) -> CliFailure {
    use rbdsat::detect::DetectError::*;
    match err {
        Guard(e) => CliFailure::guard(e.to_string()),
        Precondition(m) => CliFailure::input(m),
        Internal(m) => CliFailure::internal(m),
    }
}

fn oracle_failure(err: OracleError) -> CliFailure {
    match err {
        OracleError::Budget { .. } => CliFailure::guard(err.to_string()),
        OracleError::TooManyVars { .. } => CliFailure::input(err.to_string()),
    }
}

fn threads_from_env() -> Result<(), CliFailure> {
    // The engine is sequential and deterministic, so any positive cap is
    // honored trivially; the variable is still validated.
    if let Ok(raw) = std::env::var("RBDSAT_THREADS") {
        let parsed: u32 = raw
            .parse()
            .map_err(|_| CliFailure::input(format!("RBDSAT_THREADS must be a positive integer, got '{raw}'")))?;
        if parsed == 0 {
            return Err(CliFailure::input("RBDSAT_THREADS must be at least 1".into()));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = Ctx {
        json: cli.json,
        sanitize: cli.sanitize,
        max_seconds: cli.max_seconds,
        max_nodes: cli.max_nodes,
        started: Instant::now(),
    };
    let result = threads_from_env().and_then(|()| match cli.command {
        Command::Detect { file, depth, out } => cmd_detect(&ctx, &file, depth, out.as_deref()),
        Command::Solve { file, depth } => cmd_solve(&ctx, &file, depth),
        Command::Count { file, depth } => cmd_count(&ctx, &file, depth),
        Command::Oracle { file, measure, cap } => cmd_oracle(&ctx, &file, &measure, cap),
        Command::Wrb { file, depth } => cmd_wrb(&ctx, &file, depth),
        Command::Gen { family } => cmd_gen(&ctx, family),
        Command::Validate { file, artifact } => cmd_validate(&ctx, &file, &artifact),
    });
    match result {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn cmd_detect(ctx: &Ctx, file: &Path, depth: u32, out: Option<&Path>) -> Result<u8, CliFailure> {
    let (formula, digest) = ctx.read_formula(file)?;
    let mut search = SrbSearch::new(ctx.guard());
    let found = find_srb(&formula, depth, &mut search).map_err(detect_failure)?;
    let params = serde_json::json!({ "k": depth });
    match found {
        Some(tree) => {
            let document = tree.to_json();
            let artifact = match out {
                Some(path) => {
                    std::fs::write(path, &document).map_err(|e| {
                        CliFailure::input(format!("cannot write {}: {e}", path.display()))
                    })?;
                    Some(path.display().to_string())
                }
                None => None,
            };
            let plain = match artifact {
                Some(ref path) => format!("backdoor of depth {} written to {path}", tree.depth()),
                None => document,
            };
            let detail = serde_json::json!({ "depth": tree.depth() });
            Ok(ctx.finish(Completion {
                command: "detect",
                input: Some(digest),
                parameters: params,
                outcome: "backdoor",
                detail: Some(detail),
                artifact,
                nodes: search.nodes(),
                plain: Some(plain),
                code: EXIT_OK,
            }))
        }
        None => Ok(ctx.finish(Completion {
            command: "detect",
            input: Some(digest),
            parameters: params,
            outcome: "too-deep",
            detail: None,
            artifact: None,
            nodes: search.nodes(),
            plain: Some("TOO-DEEP".to_string()),
            code: EXIT_UNSAT,
        })),
    }
}

fn cmd_solve(ctx: &Ctx, file: &Path, depth: u32) -> Result<u8, CliFailure> {
    let (formula, digest) = ctx.read_formula(file)?;
    let mut search = SrbSearch::new(ctx.guard());
    let verdict = permissive_solve(&formula, depth, &mut search).map_err(detect_failure)?;
    let (outcome, plain, code) = match verdict {
        Verdict::Sat => ("sat", "SAT", EXIT_SAT),
        Verdict::Unsat => ("unsat", "UNSAT", EXIT_UNSAT),
        Verdict::TooDeep => ("too-deep", "TOO-DEEP", EXIT_TOO_DEEP),
    };
    Ok(ctx.finish(Completion {
        command: "solve",
        input: Some(digest),
        parameters: serde_json::json!({ "k": depth }),
        outcome,
        detail: None,
        artifact: None,
        nodes: search.nodes(),
        plain: Some(plain.to_string()),
        code,
    }))
}

fn cmd_count(ctx: &Ctx, file: &Path, depth: u32) -> Result<u8, CliFailure> {
    let (formula, digest) = ctx.read_formula(file)?;
    let mut search = SrbSearch::new(ctx.guard());
    let found = find_srb(&formula, depth, &mut search).map_err(detect_failure)?;
    let params = serde_json::json!({ "k": depth });
    match found {
        Some(tree) => {
            let count = tree
                .count_models_empty_class(&formula)
                .map_err(|e| CliFailure::internal(format!("produced tree is invalid: {e}")))?;
            let code = if count == BigUint::from(0u8) { EXIT_UNSAT } else { EXIT_SAT };
            let text = count.to_string();
            Ok(ctx.finish(Completion {
                command: "count",
                input: Some(digest),
                parameters: params,
                outcome: "count",
                detail: Some(serde_json::json!({ "models": text })),
                artifact: None,
                nodes: search.nodes(),
                plain: Some(text),
                code,
            }))
        }
        None => Ok(ctx.finish(Completion {
            command: "count",
            input: Some(digest),
            parameters: params,
            outcome: "too-deep",
            detail: None,
            artifact: None,
            nodes: search.nodes(),
            plain: Some("TOO-DEEP".to_string()),
            code: EXIT_TOO_DEEP,
        })),
    }
}

fn depth_result_json(result: DepthResult) -> serde_json::Value {
    match result {
        DepthResult::Finite(v) => serde_json::json!(v),
        DepthResult::Infinite => serde_json::json!("infinite"),
        DepthResult::ExceedsCap(cap) => serde_json::json!({ "exceeds_cap": cap }),
    }
}

fn cmd_oracle(ctx: &Ctx, file: &Path, measure: &str, cap: u32) -> Result<u8, CliFailure> {
    let (formula, digest) = ctx.read_formula(file)?;
    let limits = OracleLimits::default();
    let value = match measure {
        "srbd" => depth_result_json(srbd_exact(&formula, cap, &limits).map_err(oracle_failure)?),
        "wrbd" => depth_result_json(wrbd_exact(&formula, cap, &limits).map_err(oracle_failure)?),
        "sat" => {
            let sat = truth_table_sat(&formula, &limits).map_err(oracle_failure)?;
            serde_json::json!(if sat { "sat" } else { "unsat" })
        }
        "count" => {
            let count = truth_table_count(&formula, &limits).map_err(oracle_failure)?;
            serde_json::json!(count.to_string())
        }
        other => return Err(CliFailure::input(format!("unknown measure '{other}'"))),
    };
    let doc = serde_json::json!({
        "format": "rbdsat.oracle/1",
        "measure": measure,
        "value": value,
        "cap": if measure == "srbd" || measure == "wrbd" { serde_json::json!(cap) } else { serde_json::Value::Null },
    });
    let plain = serde_json::to_string_pretty(&doc).expect("oracle document serializes");
    Ok(ctx.finish(Completion {
        command: "oracle",
        input: Some(digest),
        parameters: serde_json::json!({ "measure": measure, "cap": cap }),
        outcome: "ok",
        detail: Some(doc),
        artifact: None,
        nodes: 0,
        plain: Some(plain),
        code: EXIT_OK,
    }))
}

fn cmd_wrb(ctx: &Ctx, file: &Path, depth: u32) -> Result<u8, CliFailure> {
    let (formula, digest) = ctx.read_formula(file)?;
    let mut guard = ctx.guard();
    let outcome = wrb_solve(&formula, depth, WrbOptions::default(), &mut guard)
        .map_err(|e| CliFailure::guard(e.to_string()))?;
    let params = serde_json::json!({ "k": depth });
    match outcome {
        WrbOutcome::Satisfiable { witness } => {
            let ints = witness.to_ints();
            let doc = serde_json::json!({
                "format": "rbdsat.wrb/1",
                "outcome": "satisfiable",
                "witness": ints,
            });
            let mut plain = String::from("v");
            for lit in &ints {
                let _ = write!(plain, " {lit}");
            }
            plain.push_str(" 0\n");
            plain.push_str(&serde_json::to_string_pretty(&doc).expect("witness serializes"));
            Ok(ctx.finish(Completion {
                command: "wrb",
                input: Some(digest),
                parameters: params,
                outcome: "satisfiable",
                detail: Some(doc),
                artifact: None,
                nodes: guard.nodes(),
                plain: Some(plain),
                code: EXIT_SAT,
            }))
        }
        WrbOutcome::NotWithinDepth => {
            let doc = serde_json::json!({
                "format": "rbdsat.wrb/1",
                "outcome": "not-within-depth",
            });
            let plain = serde_json::to_string_pretty(&doc).expect("outcome serializes");
            Ok(ctx.finish(Completion {
                command: "wrb",
                input: Some(digest),
                parameters: params,
                outcome: "not-within-depth",
                detail: Some(doc),
                artifact: None,
                nodes: guard.nodes(),
                plain: Some(plain),
                code: EXIT_TOO_DEEP,
            }))
        }
    }
}

fn parse_sets(raw: &str) -> Result<Vec<BTreeSet<u32>>, CliFailure> {
    let mut out = Vec::new();
    for (i, part) in raw.split(';').enumerate() {
        let mut set = BTreeSet::new();
        let trimmed = part.trim();
        if trimmed.is_empty() {
            out.push(set);
            continue;
        }
        for item in trimmed.split(',') {
            let element: u32 = item.trim().parse().map_err(|_| {
                CliFailure::input(format!("set {}: '{}' is not an element", i + 1, item.trim()))
            })?;
            set.insert(element);
        }
        out.push(set);
    }
    Ok(out)
}

fn write_generated(
    ctx: &Ctx,
    command: &'static str,
    formula: &Formula,
    roles: serde_json::Value,
    parameters: serde_json::Value,
    output: &GenOutput,
    extra_plain: Option<String>,
) -> Result<u8, CliFailure> {
    let dimacs = serialize_dimacs(formula);
    let sidecar = serde_json::json!({ "format": "rbdsat.roles/1", "roles": roles });
    let (artifact, plain) = match &output.out {
        Some(path) => {
            std::fs::write(path, &dimacs)
                .map_err(|e| CliFailure::input(format!("cannot write {}: {e}", path.display())))?;
            let mut roles_path = path.as_os_str().to_owned();
            roles_path.push(".roles.json");
            let roles_path = PathBuf::from(roles_path);
            std::fs::write(
                &roles_path,
                serde_json::to_string_pretty(&sidecar).expect("sidecar serializes"),
            )
            .map_err(|e| CliFailure::input(format!("cannot write {}: {e}", roles_path.display())))?;
            (
                Some(path.display().to_string()),
                format!(
                    "wrote {} ({} variables, {} clauses) and {}",
                    path.display(),
                    formula.var_count(),
                    formula.clause_count(),
                    roles_path.display()
                ),
            )
        }
        None => (None, dimacs),
    };
    let plain = match extra_plain {
        Some(extra) => format!("{plain}\n{extra}"),
        None => plain,
    };
    Ok(ctx.finish(Completion {
        command,
        input: None,
        parameters,
        outcome: "generated",
        detail: Some(sidecar),
        artifact,
        nodes: 0,
        plain: Some(plain),
        code: EXIT_OK,
    }))
}

fn cmd_gen(ctx: &Ctx, family: GenFamily) -> Result<u8, CliFailure> {
    match family {
        GenFamily::Grid { size, output } => {
            let (formula, roles) =
                grid_family(size).map_err(|e| CliFailure::input(e.to_string()))?;
            write_generated(
                ctx,
                "gen-grid",
                &formula,
                serde_json::to_value(&roles).expect("roles serialize"),
                serde_json::json!({ "family": "grid", "size": size }),
                &output,
                None,
            )
        }
        GenFamily::Setcover { universe, sets, cover_k, output } => {
            let sets = parse_sets(&sets)?;
            let instance = SetCoverInstance::new((1..=universe).collect(), sets, cover_k)
                .map_err(|e| CliFailure::input(e.to_string()))?;
            let (formula, budget, roles) = set_cover_reduction(&instance);
            write_generated(
                ctx,
                "gen-setcover",
                &formula,
                serde_json::json!({
                    "set_cover": serde_json::to_value(&roles).expect("roles serialize"),
                    "budget": budget,
                }),
                serde_json::json!({ "family": "setcover", "universe": universe, "cover_k": cover_k }),
                &output,
                Some(format!("c budget {budget}")),
            )
        }
        GenFamily::Random { vars, clauses, width, seed, output } => {
            let formula = random_formula(vars, clauses, width, seed)
                .map_err(|e| CliFailure::input(e.to_string()))?;
            let roles = RandomRoles { vars, draws: clauses, max_width: width, seed };
            write_generated(
                ctx,
                "gen-random",
                &formula,
                serde_json::to_value(roles).expect("roles serialize"),
                serde_json::json!({
                    "family": "random", "vars": vars, "clauses": clauses,
                    "width": width, "seed": seed,
                }),
                &output,
                None,
            )
        }
        GenFamily::Enumerate { max_vars, max_clauses, max_width } => {
            let stream = enumerate_small(max_vars, max_clauses, max_width, 5_000_000)
                .map_err(|e| CliFailure::input(e.to_string()))?;
            let mut n = 0u64;
            for formula in stream {
                println!("c formula {n}");
                println!("{}", serialize_dimacs(&formula));
                n += 1;
            }
            eprintln!("enumerated {n} formulas");
            Ok(EXIT_OK)
        }
    }
}

fn cmd_validate(ctx: &Ctx, file: &Path, artifact: &Path) -> Result<u8, CliFailure> {
    let (formula, digest) = ctx.read_formula(file)?;
    let text = std::fs::read_to_string(artifact)
        .map_err(|e| CliFailure::input(format!("cannot read {}: {e}", artifact.display())))?;
    let sniff: serde_json::Value = serde_json::from_str(&text)
        .map_err(|e| CliFailure::input(format!("{}: {e}", artifact.display())))?;
    let format = sniff
        .get("format")
        .and_then(|f| f.as_str())
        .ok_or_else(|| CliFailure::input("artifact has no 'format' field".into()))?;

    let violations = match format {
        "rbdsat.srb/1" => {
            let tree = SrbTree::from_json(&text)
                .map_err(|e| CliFailure::input(format!("{}: {e}", artifact.display())))?;
            tree.validate(&formula, SplitPolicy::AllowDeferredSplit)
        }
        "rbdsat.obstruction/1" => {
            let tree = ObstructionTree::from_json(&text)
                .map_err(|e| CliFailure::input(format!("{}: {e}", artifact.display())))?;
            let params = Params {
                level: tree.level(),
                degree: tree.degree(),
                k: tree.param_k(),
            };
            validate_obstruction(&tree, &formula, params)
        }
        other => {
            return Err(CliFailure::input(format!("unknown artifact format '{other}'")));
        }
    };

    let ok = violations.is_empty();
    let listed: Vec<String> = violations.iter().map(|v| v.to_string()).collect();
    let plain = if ok {
        "valid".to_string()
    } else {
        let mut text = format!("{} violation(s)", listed.len());
        for v in &listed {
            let _ = write!(text, "\n  {v}");
        }
        text
    };
    Ok(ctx.finish(Completion {
        command: "validate",
        input: Some(digest),
        parameters: serde_json::json!({ "artifact": artifact.display().to_string(), "kind": format }),
        outcome: if ok { "valid" } else { "invalid" },
        detail: Some(serde_json::json!({ "violations": listed })),
        artifact: None,
        nodes: 0,
        plain: Some(plain),
        code: if ok { EXIT_OK } else { EXIT_INVALID },
    }))
}
