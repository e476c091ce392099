//! The `sweep` subcommand: evaluate quantities on a family grid and write
//! a deterministic CSV (one row per point, row-major grid order, 17
//! significant digits, trailing flag column).

use crate::{fmt_value, CliError};
use clap::ValueEnum;
use qpredict::{
    adc_state, avg_min_bayes_risk_with_n, avg_min_inference_variance, bell_diagonal, f2_cjwr,
    f3_cjwr, f_haar, horodecki_m, integrated_state, k_bb84, k_star_opt, ppt_min_eigenvalue,
    ttbar_state, Error, FanoState, PhasePoint, DEFAULT_QUAD_N,
};
use rayon::prelude::*;
use serde::Deserialize;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    BellDiagonal,
    Adc,
    Ttbar,
    Integrated,
}

impl Family {
    fn axes(self) -> &'static [&'static str] {
        match self {
            Family::BellDiagonal => &["c1", "c2", "c3"],
            Family::Adc => &["p_a", "p_b"],
            Family::Ttbar => &["beta", "theta", "w_gg"],
            Family::Integrated => &["c_perp", "c_z"],
        }
    }

    fn state_at(self, x: &[f64]) -> Result<FanoState, Error> {
        match self {
            Family::BellDiagonal => bell_diagonal(x[0], x[1], x[2]),
            Family::Adc => {
                for v in x {
                    if !(0.0..=1.0).contains(v) {
                        return Err(Error::DomainError(format!(
                            "damping parameter {v} outside [0, 1]"
                        )));
                    }
                }
                Ok(adc_state(x[0], x[1]))
            }
            Family::Ttbar => ttbar_state(&PhasePoint::new(x[0], x[1], x[2])?),
            Family::Integrated => integrated_state(x[0], x[1]),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Deserialize)]
pub enum Quantity {
    #[value(name = "bayes-avg")]
    #[serde(rename = "bayes-avg")]
    BayesAvg,
    #[value(name = "variance-avg")]
    #[serde(rename = "variance-avg")]
    VarianceAvg,
    #[value(name = "f2")]
    #[serde(rename = "f2")]
    F2,
    #[value(name = "f3")]
    #[serde(rename = "f3")]
    F3,
    #[value(name = "f-haar")]
    #[serde(rename = "f-haar")]
    FHaar,
    #[value(name = "ppt")]
    #[serde(rename = "ppt")]
    Ppt,
    #[value(name = "horodecki")]
    #[serde(rename = "horodecki")]
    Horodecki,
    #[value(name = "k-bb84")]
    #[serde(rename = "k-bb84")]
    KBb84,
    #[value(name = "k-star")]
    #[serde(rename = "k-star")]
    KStar,
}

impl Quantity {
    fn key(self) -> &'static str {
        match self {
            Quantity::BayesAvg => "bayes-avg",
            Quantity::VarianceAvg => "variance-avg",
            Quantity::F2 => "f2",
            Quantity::F3 => "f3",
            Quantity::FHaar => "f-haar",
            Quantity::Ppt => "ppt",
            Quantity::Horodecki => "horodecki",
            Quantity::KBb84 => "k-bb84",
            Quantity::KStar => "k-star",
        }
    }

    fn eval(self, s: &FanoState, quad_n: usize) -> f64 {
        match self {
            Quantity::BayesAvg => avg_min_bayes_risk_with_n(s, quad_n).value,
            Quantity::VarianceAvg => avg_min_inference_variance(s).value,
            Quantity::F2 => f2_cjwr(s),
            Quantity::F3 => f3_cjwr(s),
            Quantity::FHaar => f_haar(s),
            Quantity::Ppt => ppt_min_eigenvalue(s),
            Quantity::Horodecki => horodecki_m(s),
            Quantity::KBb84 => k_bb84(s),
            Quantity::KStar => k_star_opt(s).k_star,
        }
    }
}

#[derive(Clone, Copy, Debug, Deserialize)]
pub struct Axis {
    pub min: f64,
    pub max: f64,
    pub count: usize,
}

impl Axis {
    fn value_at(&self, i: usize) -> f64 {
        self.min + (self.max - self.min) * i as f64 / (self.count - 1) as f64
    }
}

/// Full sweep specification (also the `--spec` JSON schema).
#[derive(Debug, Deserialize)]
pub struct SweepSpec {
    pub family: Family,
    pub grid: Vec<Axis>,
    pub quantities: Vec<Quantity>,
    pub out: PathBuf,
    #[serde(default = "default_quad_n")]
    pub quad_n: usize,
    #[serde(default)]
    pub seed: u64,
}

fn default_quad_n() -> usize {
    DEFAULT_QUAD_N
}

pub struct CliArgs {
    pub family: Option<Family>,
    pub grid: Vec<String>,
    pub quantities: Vec<Quantity>,
    pub out: Option<PathBuf>,
    pub quad_n: Option<usize>,
    pub seed: Option<u64>,
    pub spec: Option<PathBuf>,
}

fn parse_axis(text: &str) -> Result<Axis, CliError> {
    let parts: Vec<&str> = text.split(':').collect();
    if parts.len() != 3 {
        return Err(CliError::Parse(format!(
            "grid axis '{text}' is not min:max:count"
        )));
    }
    let min: f64 = parts[0]
        .parse()
        .map_err(|_| CliError::Parse(format!("bad axis minimum '{}'", parts[0])))?;
    let max: f64 = parts[1]
        .parse()
        .map_err(|_| CliError::Parse(format!("bad axis maximum '{}'", parts[1])))?;
    let count: usize = parts[2]
        .parse()
        .map_err(|_| CliError::Parse(format!("bad axis count '{}'", parts[2])))?;
    Ok(Axis { min, max, count })
}

fn spec_from_args(args: CliArgs) -> Result<SweepSpec, CliError> {
    if let Some(path) = args.spec {
        let text = std::fs::read_to_string(&path).map_err(|e| CliError::Io(e.to_string()))?;
        let spec: SweepSpec =
            serde_json::from_str(&text).map_err(|e| CliError::Parse(e.to_string()))?;
        return Ok(spec);
    }
    let family = args
        .family
        .ok_or_else(|| CliError::Parse("--family is required without --spec".into()))?;
    let out = args
        .out
        .ok_or_else(|| CliError::Parse("--out is required without --spec".into()))?;
    let grid = args
        .grid
        .iter()
        .map(|g| parse_axis(g))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SweepSpec {
        family,
        grid,
        quantities: args.quantities,
        out,
        quad_n: args.quad_n.unwrap_or(DEFAULT_QUAD_N),
        seed: args.seed.unwrap_or(0),
    })
}

fn validate_spec(spec: &SweepSpec) -> Result<(), CliError> {
    let axes = spec.family.axes();
    if spec.grid.len() != axes.len() {
        return Err(CliError::Parse(format!(
            "family needs {} grid axes ({}), got {}",
            axes.len(),
            axes.join(", "),
            spec.grid.len()
        )));
    }
    for axis in &spec.grid {
        if axis.count < 2 {
            return Err(CliError::Parse("axis count must be at least 2".into()));
        }
        if axis.min >= axis.max || axis.min.is_nan() || axis.max.is_nan() {
            return Err(CliError::Parse(format!(
                "axis minimum {} is not below maximum {}",
                axis.min, axis.max
            )));
        }
    }
    if spec.quantities.is_empty() {
        return Err(CliError::Parse("at least one quantity is required".into()));
    }
    Ok(())
}

/// Evaluates the sweep into CSV text. Grid points run in parallel; rows
/// are assembled in row-major grid order regardless of completion order.
pub fn render_csv(spec: &SweepSpec) -> String {
    let axes = spec.family.axes();
    let total: usize = spec.grid.iter().map(|a| a.count).product();
    let strides: Vec<usize> = {
        let mut s = vec![1; spec.grid.len()];
        for d in (0..spec.grid.len().saturating_sub(1)).rev() {
            s[d] = s[d + 1] * spec.grid[d + 1].count;
        }
        s
    };
    let rows: Vec<String> = (0..total)
        .into_par_iter()
        .map(|flat| {
            let coords: Vec<f64> = strides
                .iter()
                .zip(spec.grid.iter())
                .map(|(stride, axis)| axis.value_at((flat / stride) % axis.count))
                .collect();
            let mut fields: Vec<String> = coords.iter().map(|v| fmt_value(*v)).collect();
            match spec.family.state_at(&coords) {
                Ok(state) => {
                    for q in &spec.quantities {
                        fields.push(fmt_value(q.eval(&state, spec.quad_n)));
                    }
                    fields.push("ok".into());
                }
                Err(e) => {
                    for _ in &spec.quantities {
                        fields.push("nan".into());
                    }
                    fields.push(match e {
                        Error::NonPhysical(_) => "nonphysical".into(),
                        _ => "domain-error".to_string(),
                    });
                }
            }
            fields.join(",")
        })
        .collect();

    let mut header: Vec<String> = axes.iter().map(|s| s.to_string()).collect();
    header.extend(spec.quantities.iter().map(|q| q.key().to_string()));
    header.push("flag".into());
    let mut text = header.join(",");
    text.push('\n');
    for row in rows {
        text.push_str(&row);
        text.push('\n');
    }
    text
}

pub fn run(args: CliArgs) -> Result<ExitCode, CliError> {
    let spec = spec_from_args(args)?;
    validate_spec(&spec)?;
    let csv = render_csv(&spec);
    let mut file = std::fs::File::create(&spec.out).map_err(|e| CliError::Io(e.to_string()))?;
    file.write_all(csv.as_bytes())
        .map_err(|e| CliError::Io(e.to_string()))?;
    eprintln!(
        "wrote {} rows to {} (seed {})",
        spec.grid.iter().map(|a| a.count).product::<usize>(),
        spec.out.display(),
        spec.seed
    );
    Ok(ExitCode::SUCCESS)
}
