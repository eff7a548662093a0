//! Finite boxes of `ℤⁿ` used to bound enumeration of infinite sets.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Per-coordinate closed intervals `[lo_k, hi_k]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Window {
    bounds: Vec<(i64, i64)>,
}

impl Window {
    pub fn new(bounds: Vec<(i64, i64)>) -> Result<Self> {
        if bounds.is_empty() {
            return Err(Error::BadWindow("window has no coordinates".into()));
        }
        if let Some((k, &(lo, hi))) = bounds.iter().enumerate().find(|(_, b)| b.0 > b.1) {
            return Err(Error::BadWindow(format!(
                "coordinate {}: lower bound {lo} exceeds upper bound {hi}",
                k + 1
            )));
        }
        Ok(Self { bounds })
    }

    /// The cube `[lo, hi]ⁿ`.
    pub fn cube(n: usize, lo: i64, hi: i64) -> Result<Self> {
        Self::new(vec![(lo, hi); n])
    }

    pub fn dim(&self) -> usize {
        self.bounds.len()
    }

    pub fn bounds(&self) -> &[(i64, i64)] {
        &self.bounds
    }

    pub fn contains(&self, point: &[i64]) -> bool {
        point.len() == self.bounds.len()
            && point
                .iter()
                .zip(&self.bounds)
                .all(|(&x, &(lo, hi))| lo <= x && x <= hi)
    }

    /// Number of lattice points, saturating at `u128::MAX`.
    pub fn size(&self) -> u128 {
        self.bounds.iter().fold(1u128, |acc, &(lo, hi)| {
            acc.saturating_mul((i128::from(hi) - i128::from(lo) + 1) as u128)
        })
    }

    /// True when every coordinate range lies in `ℕ₀`.
    pub fn is_nonnegative(&self) -> bool {
        self.bounds.iter().all(|&(lo, _)| lo >= 0)
    }

    /// All lattice points in lexicographic order.
    pub fn points(&self) -> Points<'_> {
        Points {
            bounds: &self.bounds,
            next: Some(self.bounds.iter().map(|b| b.0).collect()),
        }
    }
}

/// Parses `lo:hi,lo:hi,...`.
impl FromStr for Window {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bounds = s
            .split(',')
            .map(|part| {
                let (lo, hi) = part
                    .trim()
                    .split_once(':')
                    .ok_or_else(|| Error::BadWindow(format!("expected lo:hi, got {part:?}")))?;
                let parse = |v: &str| {
                    v.trim()
                        .parse::<i64>()
                        .map_err(|e| Error::BadWindow(format!("{v:?}: {e}")))
                };
                Ok((parse(lo)?, parse(hi)?))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(bounds)
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (lo, hi)) in self.bounds.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{lo}:{hi}")?;
        }
        Ok(())
    }
}

pub struct Points<'a> {
    bounds: &'a [(i64, i64)],
    next: Option<Vec<i64>>,
}

impl Iterator for Points<'_> {
    type Item = Vec<i64>;

    fn next(&mut self) -> Option<Vec<i64>> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        for k in (0..succ.len()).rev() {
            if succ[k] < self.bounds[k].1 {
                succ[k] += 1;
                self.next = Some(succ);
                break;
            }
            succ[k] = self.bounds[k].0;
        }
        Some(current)
    }
}
