//! Named case parameters: parsing, validation and exact rational values.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numeric::{Field, Rat, Scalar};
use crate::Real;

/// Parses `3`, `-2/7` or `0.25` as an exact rational.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let bad = || Error::Usage(format!("'{s}' is not a rational number (use 3, 1/3 or 0.25)"));
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(Rat::new(n, d));
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    if int.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    if !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits = format!("{int}{frac}");
    let num: BigInt = digits.parse().map_err(|_| bad())?;
    let den = num_traits::pow(BigInt::from(10), frac.len());
    let q = Rat::new(num, den);
    Ok(if neg { -q } else { q })
}

/// Canonical text of a rational: `n` or `n/d`.
pub fn rat_string(q: &Rat) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum ParamKind {
    /// Integer in `min..=max`.
    Int { min: i64, max: i64 },
    /// Rational strictly between `lo` and `hi` (as `f64` bounds).
    Rational { lo: f64, hi: f64 },
    Choice(&'static [&'static str]),
}

#[derive(Debug, Clone, PartialEq)]
pub struct ParamSpec {
    pub name: &'static str,
    pub kind: ParamKind,
    pub doc: &'static str,
}

impl ParamSpec {
    pub const fn int(name: &'static str, min: i64, max: i64, doc: &'static str) -> Self {
        ParamSpec { name, kind: ParamKind::Int { min, max }, doc }
    }

    pub const fn rational(name: &'static str, lo: f64, hi: f64, doc: &'static str) -> Self {
        ParamSpec { name, kind: ParamKind::Rational { lo, hi }, doc }
    }

    pub const fn choice(name: &'static str, options: &'static [&'static str], doc: &'static str) -> Self {
        ParamSpec { name, kind: ParamKind::Choice(options), doc }
    }

    /// Checks `raw` and returns its canonical spelling.
    pub fn validate(&self, raw: &str) -> Result<String> {
        let name = self.name;
        match &self.kind {
            ParamKind::Int { min, max } => {
                let v: i64 = raw
                    .trim()
                    .parse()
                    .map_err(|_| Error::Usage(format!("parameter {name} must be an integer, got '{raw}'")))?;
                if v < *min || v > *max {
                    return Err(Error::Usage(format!("parameter {name} = {v} outside {min}..={max}")));
                }
                Ok(v.to_string())
            }
            ParamKind::Rational { lo, hi } => {
                let q = parse_rat(raw).map_err(|e| Error::Usage(format!("parameter {name}: {e}")))?;
                let f = Real::from_rat(&q, 64).to_f64();
                if !(f > *lo && f < *hi) {
                    return Err(Error::Usage(format!("parameter {name} = {raw} outside ({lo}, {hi})")));
                }
                Ok(rat_string(&q))
            }
            ParamKind::Choice(options) => {
                let v = raw.trim();
                if options.contains(&v) {
                    Ok(v.to_string())
                } else {
                    Err(Error::Usage(format!("parameter {name} must be one of {}, got '{raw}'", options.join("|"))))
                }
            }
        }
    }

    pub fn range_text(&self) -> String {
        match &self.kind {
            ParamKind::Int { min, max } => format!("integer {min}..={max}"),
            ParamKind::Rational { lo, hi } => format!("rational in ({lo}, {hi})"),
            ParamKind::Choice(options) => options.join("|"),
        }
    }
}

/// Resolved parameter values in canonical text form, keyed by name.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Params(pub BTreeMap<String, String>);

impl Params {
    pub fn new() -> Self {
        Params(BTreeMap::new())
    }

    pub fn from_pairs(pairs: &[(&str, &str)]) -> Self {
        Params(pairs.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect())
    }

    pub fn set(&mut self, name: &str, value: impl Into<String>) {
        self.0.insert(name.to_string(), value.into());
    }

    pub fn get(&self, name: &str) -> Option<&str> {
        self.0.get(name).map(String::as_str)
    }

    fn raw(&self, name: &str) -> Result<&str> {
        self.get(name).ok_or_else(|| Error::Usage(format!("missing parameter {name}")))
    }

    pub fn int(&self, name: &str) -> Result<usize> {
        let v: i64 = self
            .raw(name)?
            .parse()
            .map_err(|_| Error::Usage(format!("parameter {name} must be an integer")))?;
        usize::try_from(v).map_err(|_| Error::Usage(format!("parameter {name} must be nonnegative")))
    }

    pub fn rat(&self, name: &str) -> Result<Rat> {
        parse_rat(self.raw(name)?)
    }

    pub fn real(&self, name: &str, bits: u32) -> Result<Real> {
        Ok(Real::from_rat(&self.rat(name)?, bits))
    }

    pub fn choice(&self, name: &str) -> Result<&str> {
        self.raw(name)
    }

    /// Parses `name=value`.
    pub fn parse_assignment(s: &str) -> Result<(String, String)> {
        match s.split_once('=') {
            Some((k, v)) if !k.trim().is_empty() => Ok((k.trim().to_string(), v.trim().to_string())),
            _ => Err(Error::Usage(format!("expected name=value, got '{s}'"))),
        }
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(k, v)| format!("{k}={v}")).collect();
        f.write_str(&parts.join(";"))
    }
}
