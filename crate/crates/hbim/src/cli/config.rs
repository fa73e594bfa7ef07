//! Run configuration: defaults, JSON config file, flag overrides.
//!
//! Precedence is flag > config file > built-in default, field by field.
//! The config file is a single flat JSON object whose keys match the
//! long flag names.

use std::path::PathBuf;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::medium::Medium;
use crate::numerics::Tolerance;
use crate::profile::BoundaryProblem;

/// Problem selector as spelled on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum ProblemChoice {
    Pt,
    Pf,
    Overspec,
    Sphere,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum ModeChoice {
    Literal,
    Corrected,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum FormatChoice {
    Csv,
    Json,
}

impl FormatChoice {
    pub fn as_str(self) -> &'static str {
        match self {
            FormatChoice::Csv => "csv",
            FormatChoice::Json => "json",
        }
    }
}

impl ModeChoice {
    pub fn as_str(self) -> &'static str {
        match self {
            ModeChoice::Literal => "literal",
            ModeChoice::Corrected => "corrected",
        }
    }
}

/// The JSON config document. Every field optional; unknown keys are a
/// config error rather than a silent ignore.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub problem: Option<String>,
    pub lambda: Option<f64>,
    pub rho: Option<f64>,
    pub cp: Option<f64>,
    pub alpha: Option<f64>,
    pub ts: Option<f64>,
    pub tinf: Option<f64>,
    pub flux: Option<f64>,
    pub h0: Option<f64>,
    pub r0: Option<f64>,
    pub time: Option<Vec<f64>>,
    pub x: Option<Vec<f64>>,
    pub mode: Option<String>,
    pub n: Option<Vec<f64>>,
    pub rows: Option<String>,
    pub ratio: Option<Vec<f64>>,
    pub derived: Option<bool>,
    pub tol: Option<f64>,
    pub format: Option<String>,
    pub out: Option<String>,
    pub no_metadata: Option<bool>,
    pub threads: Option<usize>,
}

impl FileConfig {
    pub fn load(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| {
            Error::InvalidInput(format!("cannot read config {}: {e}", path.display()))
        })?;
        serde_json::from_str(&text).map_err(|e| {
            Error::InvalidInput(format!("config {}: {e}", path.display()))
        })
    }
}

/// Fully resolved run configuration.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub problem: Option<ProblemChoice>,
    pub medium: Medium,
    pub ts: f64,
    pub tinf: f64,
    pub flux: f64,
    pub h0: f64,
    pub r0: f64,
    pub times: Vec<f64>,
    pub xs: Vec<f64>,
    pub mode: ModeChoice,
    pub ns: Vec<f64>,
    pub reference_rows: bool,
    pub ratio: Option<(f64, f64)>,
    pub derived: bool,
    pub tol: Tolerance,
    pub format: FormatChoice,
    pub out: Option<PathBuf>,
    pub no_metadata: bool,
    pub threads: usize,
}

/// Everything a subcommand may have picked up from flags, prior to
/// merging with the config file. `None` means "not given on the line".
#[derive(Debug, Clone, Default)]
pub struct FlagOverrides {
    pub problem: Option<ProblemChoice>,
    pub lambda: Option<f64>,
    pub rho: Option<f64>,
    pub cp: Option<f64>,
    pub alpha: Option<f64>,
    pub ts: Option<f64>,
    pub tinf: Option<f64>,
    pub flux: Option<f64>,
    pub h0: Option<f64>,
    pub r0: Option<f64>,
    pub times: Option<Vec<f64>>,
    pub xs: Option<Vec<f64>>,
    pub mode: Option<ModeChoice>,
    pub ns: Option<Vec<f64>>,
    pub rows: Option<String>,
    pub ratio: Option<Vec<f64>>,
    pub derived: bool,
    pub tol: Option<f64>,
    pub format: Option<FormatChoice>,
    pub out: Option<PathBuf>,
    pub no_metadata: bool,
    pub threads: Option<usize>,
}

fn parse_problem(s: &str) -> Result<ProblemChoice> {
    match s {
        "pt" => Ok(ProblemChoice::Pt),
        "pf" => Ok(ProblemChoice::Pf),
        "overspec" => Ok(ProblemChoice::Overspec),
        "sphere" => Ok(ProblemChoice::Sphere),
        other => Err(Error::InvalidInput(format!(
            "unknown problem '{other}' (expected pt|pf|overspec|sphere)"
        ))),
    }
}

fn parse_mode(s: &str) -> Result<ModeChoice> {
    match s {
        "literal" => Ok(ModeChoice::Literal),
        "corrected" => Ok(ModeChoice::Corrected),
        other => Err(Error::InvalidInput(format!(
            "unknown mode '{other}' (expected literal|corrected)"
        ))),
    }
}

fn parse_format(s: &str) -> Result<FormatChoice> {
    match s {
        "csv" => Ok(FormatChoice::Csv),
        "json" => Ok(FormatChoice::Json),
        other => Err(Error::InvalidInput(format!(
            "unknown format '{other}' (expected csv|json)"
        ))),
    }
}

fn all_finite(name: &str, values: &[f64]) -> Result<()> {
    for &v in values {
        if !v.is_finite() {
            return Err(Error::InvalidInput(format!(
                "{name} contains a non-finite value"
            )));
        }
    }
    Ok(())
}

/// Merge flags over the config file over defaults and validate.
pub fn resolve(flags: FlagOverrides, file: FileConfig) -> Result<RunConfig> {
    let problem = match flags.problem {
        Some(p) => Some(p),
        None => file.problem.as_deref().map(parse_problem).transpose()?,
    };

    let lambda = flags.lambda.or(file.lambda);
    let rho = flags.rho.or(file.rho).unwrap_or(1.0);
    let cp = flags.cp.or(file.cp).unwrap_or(1.0);
    let alpha = flags.alpha.or(file.alpha);
    // --alpha alone fixes the medium by scaling the conductivity in the
    // lambda = rho = cp = 1 gauge; together with an explicit lambda it is
    // instead checked for consistency.
    let medium = match (alpha, lambda) {
        (Some(a), None) => Medium::new(a * rho * cp, rho, cp)?,
        (Some(a), Some(l)) => Medium::with_diffusivity(l, rho, cp, a)?,
        (None, l) => Medium::new(l.unwrap_or(1.0), rho, cp)?,
    };

    let ts = flags.ts.or(file.ts).unwrap_or(1.0);
    let tinf = flags.tinf.or(file.tinf).unwrap_or(0.0);
    let flux = flags.flux.or(file.flux).unwrap_or(1.0);
    let h0 = flags.h0.or(file.h0).unwrap_or(1.0);
    let r0 = flags.r0.or(file.r0).unwrap_or(1.0);
    for (name, v) in [("ts", ts), ("tinf", tinf), ("flux", flux), ("h0", h0), ("r0", r0)] {
        if !v.is_finite() {
            return Err(Error::InvalidInput(format!("{name} must be finite")));
        }
    }

    let times = flags.times.or(file.time).unwrap_or_else(|| vec![1.0]);
    all_finite("time", &times)?;
    if times.is_empty() {
        return Err(Error::InvalidInput("time list is empty".into()));
    }
    for pair in times.windows(2) {
        if pair[1] <= pair[0] {
            return Err(Error::InvalidInput(format!(
                "time points must be strictly ascending: {} then {}",
                pair[0], pair[1]
            )));
        }
    }
    if times[0] <= 0.0 {
        return Err(Error::InvalidInput(format!(
            "time points must be positive, got {}",
            times[0]
        )));
    }

    let xs = flags.xs.or(file.x).unwrap_or_default();
    all_finite("x", &xs)?;
    for &x in &xs {
        if x < 0.0 {
            return Err(Error::InvalidInput(format!(
                "x points must be nonnegative, got {x}"
            )));
        }
    }

    let mode = match flags.mode {
        Some(m) => m,
        None => file
            .mode
            .as_deref()
            .map(parse_mode)
            .transpose()?
            .unwrap_or(ModeChoice::Literal),
    };

    let ns = flags.ns.or(file.n).unwrap_or_default();
    all_finite("n", &ns)?;

    let rows = flags.rows.or(file.rows);
    let reference_rows = match rows.as_deref() {
        None => false,
        Some("paper") => true,
        Some(other) => {
            return Err(Error::InvalidInput(format!(
                "unknown row set '{other}' (only the published set 'paper' exists)"
            )))
        }
    };

    let ratio = match flags.ratio.or(file.ratio) {
        None => None,
        Some(values) => {
            all_finite("ratio", &values)?;
            match values[..] {
                [a, b] => Some((a, b)),
                _ => {
                    return Err(Error::InvalidInput(
                        "ratio takes exactly two values: a,b".into(),
                    ))
                }
            }
        }
    };

    let derived = flags.derived || file.derived.unwrap_or(false);

    let tol = Tolerance::from_scalar(flags.tol.or(file.tol).unwrap_or(1e-10))?;

    let format = match flags.format {
        Some(f) => f,
        None => file
            .format
            .as_deref()
            .map(parse_format)
            .transpose()?
            .unwrap_or(FormatChoice::Csv),
    };

    let out = flags.out.or_else(|| file.out.map(PathBuf::from));
    let no_metadata = flags.no_metadata || file.no_metadata.unwrap_or(false);

    let threads = match flags.threads.or(file.threads) {
        None => 1,
        Some(0) => return Err(Error::InvalidInput("threads must be at least 1".into())),
        Some(t) => t,
    };

    Ok(RunConfig {
        problem,
        medium,
        ts,
        tinf,
        flux,
        h0,
        r0,
        times,
        xs,
        mode,
        ns,
        reference_rows,
        ratio,
        derived,
        tol,
        format,
        out,
        no_metadata,
        threads,
    })
}

impl RunConfig {
    /// The boundary problem this config describes; requires `problem`.
    pub fn boundary_problem(&self) -> Result<BoundaryProblem> {
        let problem = match self.problem {
            Some(p) => p,
            None => {
                return Err(Error::InvalidInput(
                    "no problem selected (use --problem pt|pf|overspec|sphere)".into(),
                ))
            }
        };
        let bp = match problem {
            ProblemChoice::Pt => BoundaryProblem::PrescribedTemperature {
                surface_temp: self.ts,
                far_temp: self.tinf,
            },
            ProblemChoice::Pf => BoundaryProblem::PrescribedFlux {
                flux: self.flux,
                far_temp: self.tinf,
            },
            ProblemChoice::Overspec => BoundaryProblem::OverSpecified {
                surface_temp: self.ts,
                far_temp: self.tinf,
                flux: self.flux,
                thickness: self.h0,
            },
            ProblemChoice::Sphere => BoundaryProblem::Sphere {
                radius: self.r0,
                surface_temp: self.ts,
                far_temp: self.tinf,
            },
        };
        bp.validate()?;
        Ok(bp)
    }
}
