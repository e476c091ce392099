//! The `state` subcommand: full analysis report for one state file.

use crate::CliError;
use qpredict::{
    avg_min_bayes_risk_with_n, avg_min_inference_variance, correlations, k_star_opt,
    singular_values, FanoState,
};
use serde::Serialize;
use std::path::Path;
use std::process::ExitCode;

#[derive(Serialize)]
struct StateReport {
    valid: bool,
    singular_values: [f64; 3],
    f2: f64,
    f3: f64,
    f_haar: f64,
    ppt_min_eig: f64,
    horodecki_m: f64,
    bayes_avg: f64,
    bayes_avg_method: &'static str,
    variance_avg: f64,
    variance_avg_method: &'static str,
    k_bb84: f64,
    k_star: f64,
    a1_star: [f64; 3],
    a2_star: [f64; 3],
}

pub fn build(state: &FanoState, quad_n: usize) -> impl Serialize {
    let corr = correlations::report(state);
    let bayes = avg_min_bayes_risk_with_n(state, quad_n);
    let variance = avg_min_inference_variance(state);
    let rates = k_star_opt(state);
    StateReport {
        valid: state.validity().valid,
        singular_values: singular_values(&state.c()),
        f2: corr.f2,
        f3: corr.f3,
        f_haar: corr.f_haar,
        ppt_min_eig: corr.ppt_min_eig,
        horodecki_m: corr.horodecki_m,
        bayes_avg: bayes.value,
        bayes_avg_method: bayes.method.as_str(),
        variance_avg: variance.value,
        variance_avg_method: variance.method.as_str(),
        k_bb84: rates.k_bb84,
        k_star: rates.k_star,
        a1_star: rates.a1_star.vec().as_array(),
        a2_star: rates.a2_star.vec().as_array(),
    }
}

pub fn run(path: &Path, quad_n: usize) -> Result<ExitCode, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(e.to_string()))?;
    let state = FanoState::from_json(&text)?;
    let report = build(&state, quad_n);
    println!(
        "{}",
        serde_json::to_string_pretty(&report).expect("report serializes")
    );
    Ok(ExitCode::SUCCESS)
}
