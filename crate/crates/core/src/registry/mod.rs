//! Identity catalog, verification runner and reports.

mod catalog;
pub mod params;
pub mod report;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::Instant;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::numeric::{decimal_digits, PrecisionCtx, Scalar, DEFAULT_MAX_GEOMETRIC_TERMS, DEFAULT_MAX_TERMS};

pub use catalog::{IdentityCase, Kind, Outcome, Side, CATALOG};
pub use params::{parse_rat, rat_string, ParamKind, ParamSpec, Params};
pub use report::{emit, from_json, render, to_csv, to_json, to_text, Format, Status, VerificationReport, CSV_COLUMNS};

pub fn list_cases() -> &'static [IdentityCase] {
    &CATALOG
}

pub fn find_case(id: &str) -> Result<&'static IdentityCase> {
    CATALOG.iter().find(|c| c.id.eq_ignore_ascii_case(id)).ok_or_else(|| {
        let ids: Vec<&str> = CATALOG.iter().map(|c| c.id).collect();
        Error::Usage(format!("unknown identity '{id}'; valid ids: {}", ids.join(", ")))
    })
}

/// Status from the comparison data. A side whose estimated error already
/// exceeds the tolerance counts as flagged.
pub fn classify(abs_diff: f64, lhs_err: f64, rhs_err: f64, flagged: bool, tol: f64) -> Status {
    if flagged || !(lhs_err + rhs_err <= tol) {
        Status::ToleranceNotReached
    } else if abs_diff <= tol {
        Status::Pass
    } else {
        Status::Fail
    }
}

/// Numeric settings shared by every check of a run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Settings {
    /// Overrides each case's default tolerance.
    pub tol: Option<f64>,
    pub precision_bits: u32,
    pub max_terms: usize,
}

impl Default for Settings {
    fn default() -> Self {
        Settings { tol: None, precision_bits: 256, max_terms: DEFAULT_MAX_TERMS }
    }
}

impl Settings {
    fn tol_for(&self, case: &IdentityCase) -> f64 {
        self.tol.unwrap_or(if case.kind == Kind::Exact { 0.0 } else { case.default_tol })
    }

    fn context(&self, tol: f64) -> Result<PrecisionCtx> {
        // engines aim well below the tolerance so their estimates fit inside it
        let target = if tol > 0.0 { tol / 1000.0 } else { 1e-30 };
        let bits = self.precision_bits.max(crate::numeric::bits_for_error(target));
        if self.precision_bits < 64 {
            return Err(Error::Usage(format!("precision must be at least 64 bits, got {}", self.precision_bits)));
        }
        PrecisionCtx::with_limits(target, bits, self.max_terms, DEFAULT_MAX_GEOMETRIC_TERMS.max(self.max_terms))
    }
}

/// Fills unset parameters from the first default grid point and validates all of them.
pub fn resolve_params(case: &IdentityCase, given: &Params) -> Result<Params> {
    let mut p = case.default_grid().into_iter().next().unwrap_or_default();
    for (k, v) in &given.0 {
        let spec = case.param(k).ok_or_else(|| {
            let names: Vec<&str> = case.params.iter().map(|s| s.name).collect();
            Error::Usage(format!("{} has no parameter '{k}' (parameters: {})", case.id, names.join(", ")))
        })?;
        p.set(k, spec.validate(v)?);
    }
    for (k, v) in p.0.clone() {
        if let Some(spec) = case.param(&k) {
            p.set(&k, spec.validate(&v)?);
        }
    }
    Ok(p)
}

fn fmt_err(e: f64) -> String {
    format!("{e:e}")
}

fn report_from(case: &IdentityCase, p: &Params, tol: f64, bits: u32, ms: f64, out: Outcome) -> VerificationReport {
    let digits = decimal_digits(bits);
    let (abs_diff, status) = match &out.exact_diff {
        Some(d) => {
            let s = if num_traits::Zero::is_zero(d) { Status::Pass } else { Status::Fail };
            (rat_string(d), s)
        }
        None => {
            let d = (out.lhs.value.clone() - &out.rhs.value).abs();
            let flagged = out.lhs.flagged || out.rhs.flagged;
            let s = classify(d.to_f64(), out.lhs.err, out.rhs.err, flagged, tol);
            (d.to_decimal(20), s)
        }
    };
    VerificationReport {
        id: case.id.to_string(),
        params: p.0.clone(),
        lhs: out.lhs.value.to_decimal(digits),
        rhs: out.rhs.value.to_decimal(digits),
        abs_diff,
        lhs_err: fmt_err(out.lhs.err),
        rhs_err: fmt_err(out.rhs.err),
        tol: fmt_err(tol),
        terms_used: (out.lhs.terms + out.rhs.terms).to_string(),
        wall_time_ms: format!("{ms:.3}"),
        status,
        precision_bits: bits.to_string(),
    }
}

fn failed_report(case: &IdentityCase, p: &Params, tol: f64, bits: u32, ms: f64, e: &Error) -> VerificationReport {
    let status = match e {
        Error::ToleranceNotReached(_) => Status::ToleranceNotReached,
        _ => Status::Fail,
    };
    let nan = || "nan".to_string();
    VerificationReport {
        id: case.id.to_string(),
        params: p.0.clone(),
        lhs: nan(),
        rhs: nan(),
        abs_diff: nan(),
        lhs_err: nan(),
        rhs_err: nan(),
        tol: fmt_err(tol),
        terms_used: "0".into(),
        wall_time_ms: format!("{ms:.3}"),
        status,
        precision_bits: bits.to_string(),
    }
}

fn run_one(case: &IdentityCase, p: &Params, settings: &Settings) -> Result<VerificationReport> {
    let tol = settings.tol_for(case);
    let ctx = settings.context(tol)?;
    let start = Instant::now();
    let out = case.evaluate(p, &ctx);
    let ms = start.elapsed().as_secs_f64() * 1e3;
    let bits = ctx.precision_bits();
    match out {
        Ok(o) => Ok(report_from(case, p, tol, bits, ms, o)),
        Err(Error::Domain(m)) | Err(Error::Usage(m)) => Err(Error::Usage(format!("{}: {m}", case.id))),
        Err(e) => Ok(failed_report(case, p, tol, bits, ms, &e)),
    }
}

/// One check. Domain problems with the parameters are usage errors here.
pub fn verify(id: &str, params: &Params, settings: &Settings) -> Result<VerificationReport> {
    let case = find_case(id)?;
    let p = resolve_params(case, params)?;
    run_one(case, &p, settings)
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    /// Empty selects every case.
    pub ids: Vec<String>,
    /// Applied to every selected case that declares the parameter.
    pub overrides: BTreeMap<String, String>,
    pub settings: Settings,
    pub jobs: usize,
    pub format: Format,
    pub out: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            ids: Vec::new(),
            overrides: BTreeMap::new(),
            settings: Settings::default(),
            jobs: 1,
            format: Format::Text,
            out: None,
        }
    }
}

fn parse_num<T: std::str::FromStr>(key: &str, v: &str) -> Result<T> {
    v.trim().parse().map_err(|_| Error::Usage(format!("bad value '{v}' for {key}")))
}

impl RunConfig {
    /// Applies one `key=value` setting; keys mirror the CLI flags.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let value = value.trim();
        match key.trim() {
            "ids" => {
                self.ids = value.split(',').map(str::trim).filter(|s| !s.is_empty()).map(String::from).collect()
            }
            "jobs" => self.jobs = parse_num(key, value)?,
            "format" => self.format = value.parse()?,
            "out" => self.out = if value.is_empty() { None } else { Some(PathBuf::from(value)) },
            "tol" => self.settings.tol = Some(parse_num(key, value)?),
            "prec-bits" | "prec_bits" | "precision_bits" => self.settings.precision_bits = parse_num(key, value)?,
            "max-terms" | "max_terms" => self.settings.max_terms = parse_num(key, value)?,
            k => match k.strip_prefix("param.") {
                Some(name) if !name.is_empty() => {
                    self.overrides.insert(name.to_string(), value.to_string());
                }
                _ => return Err(Error::Usage(format!("unknown config key '{k}'"))),
            },
        }
        Ok(())
    }

    /// Reads flat `key=value` lines; `#` starts a comment.
    pub fn apply_text(&mut self, text: &str) -> Result<()> {
        for (i, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| Error::Usage(format!("config line {}: expected key=value, got '{line}'", i + 1)))?;
            self.set(k, v).map_err(|e| match e {
                Error::Usage(m) => Error::Usage(format!("config line {}: {m}", i + 1)),
                other => other,
            })?;
        }
        Ok(())
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut c = RunConfig::default();
        c.apply_text(text)?;
        Ok(c)
    }

    pub fn validate(&self) -> Result<()> {
        if self.jobs == 0 {
            return Err(Error::Usage("jobs must be at least 1".into()));
        }
        if let Some(t) = self.settings.tol {
            if !(t > 0.0 && t.is_finite()) {
                return Err(Error::Usage(format!("tol must be positive, got {t}")));
            }
        }
        if self.settings.max_terms == 0 {
            return Err(Error::Usage("max-terms must be positive".into()));
        }
        for id in &self.ids {
            find_case(id)?;
        }
        Ok(())
    }

    fn selected(&self) -> Result<Vec<&'static IdentityCase>> {
        if self.ids.is_empty() {
            return Ok(CATALOG.iter().collect());
        }
        let mut out: Vec<&'static IdentityCase> = Vec::new();
        for id in &self.ids {
            let c = find_case(id)?;
            if !out.iter().any(|o| o.id == c.id) {
                out.push(c);
            }
        }
        out.sort_by_key(|c| CATALOG.iter().position(|d| d.id == c.id));
        Ok(out)
    }

    /// Every (case, parameters) pair of the run, in catalog order.
    pub fn tasks(&self) -> Result<Vec<(&'static IdentityCase, Params)>> {
        let mut tasks = Vec::new();
        for case in self.selected()? {
            let mut seen: Vec<Params> = Vec::new();
            for mut p in case.default_grid() {
                for (k, v) in &self.overrides {
                    if let Some(spec) = case.param(k) {
                        p.set(k, spec.validate(v)?);
                    }
                }
                if !seen.contains(&p) {
                    seen.push(p.clone());
                    tasks.push((case, p));
                }
            }
        }
        Ok(tasks)
    }
}

/// Runs every selected case over its grid. Reports come back in catalog
/// order whatever the number of jobs.
pub fn run_suite(config: &RunConfig) -> Result<Vec<VerificationReport>> {
    config.validate()?;
    let tasks = config.tasks()?;
    let settings = config.settings;
    for (case, _) in &tasks {
        settings.context(settings.tol_for(case))?;
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| Error::Usage(format!("cannot start {} workers: {e}", config.jobs)))?;
    let reports = pool.install(|| {
        tasks
            .par_iter()
            .map(|(case, p)| match run_one(case, p, &settings) {
                Ok(r) => r,
                Err(e) => failed_report(case, p, settings.tol_for(case), settings.precision_bits, 0.0, &e),
            })
            .collect::<Vec<_>>()
    });
    Ok(reports)
}
