//! The ramification profile `(m; λ₁, …, λᵣ; n)` of a Kummer extension
//! `y^m = f(x)`, its validation and its genus.
//!
//! The first `n` valuations belong to the distinguished places `Q₁, …, Qₙ`;
//! reordering places is the caller's job.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{gcd, is_prime, prime_power};
use crate::error::{Error, Result};

/// Characteristic `p` and size `q` of the constant field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldInfo {
    pub p: u64,
    pub q: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RamificationProfile {
    pub m: i64,
    pub lambdas: Vec<i64>,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, rename = "field", skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldInfo>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Severity {
    Error,
    Warning,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub severity: Severity,
    pub message: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.errors().next().is_none()
    }

    pub fn errors(&self) -> impl Iterator<Item = &Violation> {
        self.violations
            .iter()
            .filter(|v| v.severity == Severity::Error)
    }

    pub fn warnings(&self) -> impl Iterator<Item = &Violation> {
        self.violations
            .iter()
            .filter(|v| v.severity == Severity::Warning)
    }

    fn error(&mut self, message: impl Into<String>) {
        self.violations.push(Violation {
            severity: Severity::Error,
            message: message.into(),
        });
    }

    fn warning(&mut self, message: impl Into<String>) {
        self.violations.push(Violation {
            severity: Severity::Warning,
            message: message.into(),
        });
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.severity {
            Severity::Error => "error",
            Severity::Warning => "warning",
        };
        write!(f, "{tag}: {}", self.message)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "ok");
        }
        for (idx, v) in self.violations.iter().enumerate() {
            if idx > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl RamificationProfile {
    pub fn new(m: i64, lambdas: Vec<i64>, n: usize) -> Self {
        Self {
            m,
            lambdas,
            n,
            labels: None,
            field: None,
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        self.labels = Some(labels);
        self
    }

    pub fn with_field(mut self, p: u64, q: u64) -> Self {
        self.field = Some(FieldInfo { p, q });
        self
    }

    /// Number of zeros and poles `r` of `f`.
    pub fn places(&self) -> usize {
        self.lambdas.len()
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    /// Compact single-line JSON in the field order `m, lambdas, n, labels, field`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("profile serialization is infallible")
    }

    /// Lists every violated hypothesis. The profile is usable downstream iff
    /// the report carries no errors.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        let m = self.m;
        let r = self.lambdas.len();

        if m < 2 {
            report.error(format!("m must be at least 2 (got {m})"));
        }
        if r < 2 {
            report.error(format!("at least 2 zeros/poles required (got {r})"));
        }
        for (k, &l) in self.lambdas.iter().enumerate() {
            if l == 0 {
                report.error(format!("lambda_{} must be nonzero", k + 1));
            }
        }
        let sum: i128 = self.lambdas.iter().map(|&l| i128::from(l)).sum();
        if sum != 0 {
            report.error(format!("sum of lambdas must be 0 (got {sum})"));
        }
        if self.n < 2 || self.n > r {
            report.error(format!(
                "number of distinguished places n must satisfy 2 <= n <= r = {r} (got {})",
                self.n
            ));
        }
        if m >= 2 {
            for (k, &l) in self.lambdas.iter().take(self.n).enumerate() {
                let d = gcd(l, m);
                if l != 0 && d != 1 {
                    report.error(format!(
                        "distinguished place {} is not totally ramified: gcd(lambda_{}, m) = {d}",
                        k + 1,
                        k + 1
                    ));
                }
            }
            let common = self.lambdas.iter().fold(m, |acc, &l| gcd(acc, l));
            if r > 0 && common > 1 {
                report.error(format!(
                    "f is a {common}-th power: {common} divides m and every lambda"
                ));
            }
        }
        if let Some(labels) = &self.labels {
            if labels.len() != r {
                report.error(format!("{} labels given for {r} places", labels.len()));
            }
        }
        if let Some(FieldInfo { p, q }) = self.field {
            if !is_prime(p) {
                report.error(format!("field characteristic {p} is not prime"));
            }
            match prime_power(q) {
                Some((base, _)) if base == p => {}
                _ => report.error(format!("field size {q} is not a power of {p}")),
            }
            if p >= 2 && m >= 2 && (m as u64).is_multiple_of(p) {
                report.error(format!("characteristic {p} divides m = {m}"));
            }
            if (q as u128) < self.n as u128 {
                report.warning(format!(
                    "q = {q} < n = {}: arithmetic results hold but lose their semigroup interpretation",
                    self.n
                ));
            }
        }
        report
    }

    /// Returns `Ok(self)` iff validation reports no errors.
    pub fn validated(self) -> Result<Self> {
        let report = self.validate();
        if report.is_ok() {
            Ok(self)
        } else {
            Err(Error::InvalidProfile(report))
        }
    }

    /// Genus of the Kummer cover by Riemann–Hurwitz:
    /// `2g − 2 = −2m + Σ_k (m − gcd(λ_k, m))`.
    pub fn genus(&self) -> Result<i64> {
        let m = i128::from(self.m);
        let ramification: i128 = self
            .lambdas
            .iter()
            .map(|&l| m - i128::from(gcd(l, self.m)))
            .sum();
        let twice = ramification - 2 * m + 2;
        if twice % 2 != 0 {
            return Err(Error::InconsistentProfile(format!(
                "Riemann-Hurwitz gives odd 2g = {twice}"
            )));
        }
        if twice < 0 {
            return Err(Error::InconsistentProfile(format!(
                "Riemann-Hurwitz gives negative genus {}",
                twice / 2
            )));
        }
        i64::try_from(twice / 2).map_err(|_| Error::Overflow("genus"))
    }
}
