//! `bohrlab` — radius computation, parameter sweeps, verification suites,
//! and sharpness witness reports with machine-readable output.
//!
//! stdout carries JSON (radius/verify/witness) or CSV (sweep); stderr
//! carries progress and diagnostics. Exit codes: 0 all checks passed,
//! 1 mathematical violation beyond certified tails, 2 usage error.

use clap::{Parser, Subcommand};
use serde_json::{json, Map, Value};

use bohrlab_core::radii::{
    classical_bohr_radius, p_family_radius, refined_radius, rstar_bisect, rstar_cardano, solve_r0,
    solve_rg, RadiusResult,
};
use bohrlab_core::subordination::suites::{run_suite, SUITE_NAMES};
use bohrlab_core::subordination::{
    sharpness_witness_thm_b, witness_theorem1, witness_theorem3, WitnessReport,
};

const SCHEMA_VERSION: &str = "1";

#[derive(Parser)]
#[command(name = "bohrlab", version, about = "Bohr-type radii, functional sweeps, and inequality verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a named radius: exact formulas or certified bisection roots.
    Radius {
        /// One of: classical, refined, pfamily, rstar, r0, rg
        #[arg(long)]
        name: String,
        /// Constant-term parameter (refined, pfamily) or distance parameter
        /// of the r0 equation.
        #[arg(long)]
        a0: Option<f64>,
        /// Exponent of the p-family radius (pfamily only).
        #[arg(long)]
        p: Option<f64>,
        /// Bracket width at which bisection stops.
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
    },
    /// Sweep a radius or witness target over a parameter grid; CSV on stdout.
    Sweep {
        /// One of: r0, pfamily, witness_thmB
        #[arg(long)]
        target: String,
        #[arg(long)]
        from: f64,
        #[arg(long)]
        to: f64,
        /// Number of grid points (endpoints included).
        #[arg(long)]
        steps: usize,
        /// Exponent for pfamily and witness_thmB targets.
        #[arg(long)]
        p: Option<f64>,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
    },
    /// Run a named verification suite; exit 1 on any violation.
    Verify {
        /// One of: thmA, thmB, pfamily, thm1, thm2_halfplane, thm3_koebe,
        /// lemma1, lemma2, rogosinski, identities
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 128)]
        order: usize,
    },
    /// Locate a sharpness threshold empirically and compare with the formula.
    Witness {
        /// One of: thmB, thm1, thm3
        #[arg(long)]
        theorem: String,
        /// Moebius parameter (thmB).
        #[arg(long)]
        a: Option<f64>,
        /// Exponent (thmB).
        #[arg(long)]
        p: Option<f64>,
        /// Distance parameter of the r0 equation (thm1).
        #[arg(long)]
        a0: Option<f64>,
    },
}

fn main() {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Radius { name, a0, p, tol } => cmd_radius(&name, a0, p, tol),
        Command::Sweep { target, from, to, steps, p, tol } => cmd_sweep(&target, from, to, steps, p, tol),
        Command::Verify { suite, seed, trials, order } => cmd_verify(&suite, seed, trials, order),
        Command::Witness { theorem, a, p, a0 } => cmd_witness(&theorem, a, p, a0),
    };
    std::process::exit(code);
}

fn usage_error(message: &str) -> i32 {
    eprintln!("error: {}", message);
    eprintln!("run `bohrlab --help` for usage");
    2
}

fn emit(command: &str, inputs: Value, result: Value, pass: Option<bool>) {
    let mut report = Map::new();
    report.insert("schema_version".into(), json!(SCHEMA_VERSION));
    report.insert("command".into(), json!(command));
    report.insert("inputs".into(), inputs);
    report.insert("result".into(), result);
    if let Some(pass) = pass {
        report.insert("pass".into(), json!(pass));
    }
    println!("{}", serde_json::to_string_pretty(&Value::Object(report)).expect("serializable report"));
}

fn solver_json(r: &RadiusResult) -> Value {
    json!({
        "name": r.name,
        "value": r.value,
        "bracket_lo": r.bracket_lo,
        "bracket_hi": r.bracket_hi,
        "residual": r.residual,
        "iterations": r.iterations,
        "uncertainty": 0.5 * (r.bracket_hi - r.bracket_lo),
    })
}

fn formula_json(name: &str, value: f64) -> Value {
    json!({ "name": name, "value": value, "uncertainty": 0.0 })
}

fn cmd_radius(name: &str, a0: Option<f64>, p: Option<f64>, tol: f64) -> i32 {
    let mut inputs = Map::new();
    inputs.insert("name".into(), json!(name));
    if let Some(a0) = a0 {
        inputs.insert("a0".into(), json!(a0));
    }
    if let Some(p) = p {
        inputs.insert("p".into(), json!(p));
    }
    inputs.insert("tol".into(), json!(tol));
    let inputs = Value::Object(inputs);

    let result = match name {
        "classical" => formula_json("classical", classical_bohr_radius()),
        "refined" => {
            let Some(a0) = a0 else {
                return usage_error("radius --name refined requires --a0");
            };
            match refined_radius(a0) {
                Ok(value) => formula_json("refined", value),
                Err(e) => return usage_error(&e.to_string()),
            }
        }
        "pfamily" => {
            let (Some(a0), Some(p)) = (a0, p) else {
                return usage_error("radius --name pfamily requires --a0 and --p");
            };
            match p_family_radius(a0, p) {
                Ok(value) => formula_json("pfamily", value),
                Err(e) => return usage_error(&e.to_string()),
            }
        }
        "rstar" => match rstar_bisect(tol) {
            Ok(root) => {
                let cardano = rstar_cardano();
                let mut obj = solver_json(&root);
                let map = obj.as_object_mut().expect("object");
                map.insert("cardano".into(), json!(cardano));
                map.insert("method_delta".into(), json!((root.value - cardano).abs()));
                obj
            }
            Err(e) => return usage_error(&e.to_string()),
        },
        "r0" => {
            let Some(a0) = a0 else {
                return usage_error("radius --name r0 requires --a0");
            };
            match solve_r0(a0, tol) {
                Ok(root) => solver_json(&root),
                Err(e) => return usage_error(&e.to_string()),
            }
        }
        "rg" => match solve_rg(tol) {
            Ok(root) => solver_json(&root),
            Err(e) => return usage_error(&e.to_string()),
        },
        other => {
            return usage_error(&format!(
                "unknown radius name `{}` (expected classical, refined, pfamily, rstar, r0, rg)",
                other
            ))
        }
    };
    emit("radius", inputs, result, None);
    0
}

/// 17-significant-digit decimal formatting for CSV cells; every swept value
/// lies in (0, 1), so fixed-point keeps full precision.
fn csv_cell(x: f64) -> String {
    format!("{:.17}", x)
}

fn cmd_sweep(target: &str, from: f64, to: f64, steps: usize, p: Option<f64>, tol: f64) -> i32 {
    if steps < 2 {
        return usage_error("sweep requires --steps >= 2");
    }
    if !(from < to) {
        return usage_error("sweep requires --from < --to");
    }
    let grid = |i: usize| {
        let t = i as f64 / (steps - 1) as f64;
        from * (1.0 - t) + to * t
    };
    let mut rows = Vec::with_capacity(steps);
    match target {
        "r0" => {
            if !(from > 0.0 && to < 1.0) {
                return usage_error("sweep r0 requires 0 < from < to < 1");
            }
            for i in 0..steps {
                let param = grid(i);
                let root = match solve_r0(param, tol) {
                    Ok(root) => root,
                    Err(e) => return usage_error(&e.to_string()),
                };
                rows.push(format!("{},{}", csv_cell(param), csv_cell(root.value)));
            }
            print_csv("param,value", &rows);
        }
        "pfamily" => {
            let Some(p) = p else {
                return usage_error("sweep pfamily requires --p");
            };
            if !(from >= 0.0 && to < 1.0) {
                return usage_error("sweep pfamily requires 0 <= from < to < 1");
            }
            for i in 0..steps {
                let param = grid(i);
                let value = match p_family_radius(param, p) {
                    Ok(value) => value,
                    Err(e) => return usage_error(&e.to_string()),
                };
                rows.push(format!("{},{}", csv_cell(param), csv_cell(value)));
            }
            print_csv("param,value", &rows);
        }
        "witness_thmB" => {
            let Some(p) = p else {
                return usage_error("sweep witness_thmB requires --p");
            };
            if !(from > 0.0 && to < 1.0) {
                return usage_error("sweep witness_thmB requires 0 < from < to < 1");
            }
            for i in 0..steps {
                let param = grid(i);
                let witness = match sharpness_witness_thm_b(param, p) {
                    Ok(witness) => witness,
                    Err(e) => return usage_error(&e.to_string()),
                };
                rows.push(format!(
                    "{},{},{}",
                    csv_cell(param),
                    csv_cell(witness.threshold_predicted),
                    csv_cell(witness.threshold_found)
                ));
            }
            print_csv("param,predicted,found", &rows);
        }
        other => {
            return usage_error(&format!(
                "unknown sweep target `{}` (expected r0, pfamily, witness_thmB)",
                other
            ))
        }
    }
    0
}

fn print_csv(header: &str, rows: &[String]) {
    let mut out = String::with_capacity(rows.len() * 40 + header.len() + 1);
    out.push_str(header);
    out.push('\n');
    for row in rows {
        out.push_str(row);
        out.push('\n');
    }
    print!("{}", out);
}

fn cmd_verify(suite: &str, seed: u64, trials: usize, order: usize) -> i32 {
    if trials == 0 {
        return usage_error("verify requires --trials >= 1");
    }
    if order == 0 {
        return usage_error("verify requires --order >= 1");
    }
    eprintln!("running suite {} (seed {}, trials {}, order {})", suite, seed, trials, order);
    let Some(report) = run_suite(suite, seed, trials, order) else {
        return usage_error(&format!(
            "unknown suite `{}` (expected one of {})",
            suite,
            SUITE_NAMES.join(", ")
        ));
    };
    eprintln!(
        "suite {}: {} checks, {} failures, worst margin {:e}",
        report.suite, report.checks, report.failures, report.worst_margin
    );
    let inputs = json!({ "suite": suite, "seed": seed, "trials": trials, "order": order });
    let result = json!({
        "suite": report.suite,
        "trials": report.trials,
        "order": report.order,
        "checks": report.checks,
        "failures": report.failures,
        "worst_margin": report.worst_margin,
        "per_trial_worst_margin": report.per_trial_worst_margin,
    });
    let passed = report.passed();
    emit("verify", inputs, result, Some(passed));
    if passed {
        0
    } else {
        1
    }
}

fn witness_json(w: &WitnessReport) -> Value {
    json!({
        "family": w.family.to_string(),
        "parameter": w.parameter,
        "p": w.p,
        "threshold_predicted": w.threshold_predicted,
        "threshold_found": w.threshold_found,
        "abs_difference": w.discrepancy(),
        "found_uncertainty": w.found_uncertainty,
    })
}

fn cmd_witness(theorem: &str, a: Option<f64>, p: Option<f64>, a0: Option<f64>) -> i32 {
    let witness = match theorem {
        "thmB" => {
            let (Some(a), Some(p)) = (a, p) else {
                return usage_error("witness --theorem thmB requires --a and --p");
            };
            match sharpness_witness_thm_b(a, p) {
                Ok(w) => w,
                Err(e) => return usage_error(&e.to_string()),
            }
        }
        "thm1" => {
            let Some(a0) = a0 else {
                return usage_error("witness --theorem thm1 requires --a0");
            };
            match witness_theorem1(a0) {
                Ok(w) => w,
                Err(e) => return usage_error(&e.to_string()),
            }
        }
        "thm3" => match witness_theorem3() {
            Ok(w) => w,
            Err(e) => return usage_error(&e.to_string()),
        },
        other => {
            return usage_error(&format!(
                "unknown theorem `{}` (expected thmB, thm1, thm3)",
                other
            ))
        }
    };
    let mut inputs = Map::new();
    inputs.insert("theorem".into(), json!(theorem));
    if let Some(a) = a {
        inputs.insert("a".into(), json!(a));
    }
    if let Some(p) = p {
        inputs.insert("p".into(), json!(p));
    }
    if let Some(a0) = a0 {
        inputs.insert("a0".into(), json!(a0));
    }
    // Thresholds agree far tighter than this in practice; the gate only
    // flags a broken bisection or solver.
    let pass = witness.discrepancy() <= 1e-6;
    emit("witness", Value::Object(inputs), witness_json(&witness), Some(pass));
    if pass {
        0
    } else {
        1
    }
}
