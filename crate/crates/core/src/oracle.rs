//! Definitional maximality, decided from the ∇-sets using nothing but the
//! membership test.
//!
//! For `∅ ≠ J ⊊ {1..n}`, `∇_J(α)` is the set of members `β` with `β_j = α_j`
//! on `J` and `β_i < α_i` off `J`. The search for such a `β` is finite: every
//! member has coordinate sum `≥ 0`, since its witnessing function has poles
//! only at the rational places `Q_k` and a principal divisor has degree zero.
//! So each free coordinate is bounded below by
//! `−(Σ_{j∈J} α_j + Σ_{i'∉J, i'≠i} (α_{i'} − 1))`.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::membership::{KummerSemigroup, LatticePoint, MaximalKind};
use crate::window::Window;

/// Default cap on the number of candidate points in one search region.
pub const DEFAULT_BUDGET: u128 = 10_000_000;

/// A ∇-set query: the point `α` and the fixed coordinates `J` (0-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NablaQuery {
    alpha: LatticePoint,
    fixed: Vec<usize>,
}

impl NablaQuery {
    pub fn new(alpha: impl Into<LatticePoint>, fixed: Vec<usize>) -> Result<Self> {
        let alpha = alpha.into();
        let n = alpha.len();
        let mut fixed = fixed;
        fixed.sort_unstable();
        fixed.dedup();
        if fixed.is_empty() || fixed.len() >= n {
            return Err(Error::BadQuery(format!(
                "J must be a nonempty proper subset of the {n} coordinates"
            )));
        }
        if let Some(&bad) = fixed.iter().find(|&&j| j >= n) {
            return Err(Error::IndexNotDistinguished { index: bad, n });
        }
        Ok(Self { alpha, fixed })
    }

    pub fn alpha(&self) -> &LatticePoint {
        &self.alpha
    }

    pub fn fixed(&self) -> &[usize] {
        &self.fixed
    }
}

/// One ∇_J search outcome, kept as evidence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NablaWitness {
    /// 1-based coordinates of `J`.
    pub fixed: Vec<usize>,
    pub witness: Option<LatticePoint>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub point: LatticePoint,
    pub enumerated: bool,
    pub definitional: bool,
    pub member: bool,
    pub per_coordinate_t: Vec<i64>,
    pub unique_t: Option<i64>,
    pub criterion_sum: Option<i128>,
    pub nabla: Vec<NablaWitness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrosscheckReport {
    pub kind: MaximalKind,
    pub window: String,
    pub points_scanned: u128,
    pub enumerated: usize,
    pub definitional: usize,
    pub agree: bool,
    pub mismatches: Vec<Mismatch>,
}

impl fmt::Display for CrosscheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} maximal elements in window {}: {} points scanned, {} enumerated, {} definitional",
            self.kind, self.window, self.points_scanned, self.enumerated, self.definitional
        )?;
        if self.agree {
            return write!(f, "agree");
        }
        write!(f, "DISAGREE: {} mismatches", self.mismatches.len())?;
        for mm in &self.mismatches {
            write!(
                f,
                "\n  {} enumerated={} definitional={} member={} t={:?} unique_t={:?} sum={:?}",
                mm.point,
                mm.enumerated,
                mm.definitional,
                mm.member,
                mm.per_coordinate_t,
                mm.unique_t,
                mm.criterion_sum
            )?;
            for w in &mm.nabla {
                match &w.witness {
                    Some(b) => write!(f, "\n    J={:?}: witness {b}", w.fixed)?,
                    None => write!(f, "\n    J={:?}: empty", w.fixed)?,
                }
            }
        }
        Ok(())
    }
}

/// Brute-force maximality checks over one semigroup.
#[derive(Debug, Clone, Copy)]
pub struct Oracle<'a> {
    semigroup: &'a KummerSemigroup,
    budget: u128,
}

impl<'a> Oracle<'a> {
    pub fn new(semigroup: &'a KummerSemigroup) -> Self {
        Self {
            semigroup,
            budget: DEFAULT_BUDGET,
        }
    }

    pub fn with_budget(mut self, budget: u128) -> Self {
        self.budget = budget;
        self
    }

    pub fn budget(&self) -> u128 {
        self.budget
    }

    /// A member of `∇_J(α)`, if any. Free coordinates are scanned downward
    /// from `α_i − 1`, lexicographically, so the witness is deterministic.
    pub fn nabla_witness(&self, query: &NablaQuery) -> Result<Option<LatticePoint>> {
        let alpha = query.alpha();
        self.semigroup.check_arity(alpha)?;
        let n = alpha.len();
        let free: Vec<usize> = (0..n).filter(|k| !query.fixed().contains(k)).collect();

        let fixed_sum: i128 = query.fixed().iter().map(|&j| i128::from(alpha[j])).sum();
        let tops: Vec<i128> = free.iter().map(|&i| i128::from(alpha[i]) - 1).collect();
        let top_total: i128 = tops.iter().sum();
        let mut region: u128 = 1;
        let mut lows = Vec::with_capacity(free.len());
        for &top in &tops {
            let low = -(fixed_sum + top_total - top);
            if low > top {
                return Ok(None);
            }
            region = region.saturating_mul((top - low + 1) as u128);
            lows.push(low);
        }
        if region > self.budget {
            return Err(Error::BudgetExceeded {
                region,
                budget: self.budget,
            });
        }

        // Remaining maximum contribution of free coordinates after position k.
        let mut rest_max = vec![0i128; free.len() + 1];
        for k in (0..free.len()).rev() {
            rest_max[k] = rest_max[k + 1] + tops[k];
        }
        let mut candidate = alpha.0.clone();
        let found = self.search(&free, &tops, &lows, &rest_max, 0, fixed_sum, &mut candidate);
        Ok(found.then_some(LatticePoint(candidate)))
    }

    #[allow(clippy::too_many_arguments)]
    fn search(
        &self,
        free: &[usize],
        tops: &[i128],
        lows: &[i128],
        rest_max: &[i128],
        depth: usize,
        partial: i128,
        candidate: &mut Vec<i64>,
    ) -> bool {
        if depth == free.len() {
            return self.semigroup.is_member(candidate);
        }
        let mut v = tops[depth];
        while v >= lows[depth] && partial + v + rest_max[depth + 1] >= 0 {
            candidate[free[depth]] = v as i64;
            if self.search(
                free,
                tops,
                lows,
                rest_max,
                depth + 1,
                partial + v,
                candidate,
            ) {
                return true;
            }
            v -= 1;
        }
        false
    }

    pub fn nabla_nonempty(&self, query: &NablaQuery) -> Result<bool> {
        Ok(self.nabla_witness(query)?.is_some())
    }

    fn subsets(&self, n: usize) -> Result<Vec<Vec<usize>>> {
        if n >= 64 || (1u128 << n) > self.budget {
            return Err(Error::BudgetExceeded {
                region: 1u128.checked_shl(n as u32).unwrap_or(u128::MAX),
                budget: self.budget,
            });
        }
        let mut subsets: Vec<Vec<usize>> = (1u64..(1u64 << n) - 1)
            .map(|mask| (0..n).filter(|&k| mask >> k & 1 == 1).collect())
            .collect();
        subsets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(subsets)
    }

    /// Absolute: a member whose every ∇_J is empty. Relative: a member with
    /// every singleton ∇ empty and every ∇_J with `2 ≤ |J| ≤ n − 1` nonempty.
    pub fn is_maximal_definitional(&self, alpha: &[i64], kind: MaximalKind) -> Result<bool> {
        self.semigroup.check_arity(alpha)?;
        if !self.semigroup.is_member(alpha) {
            return Ok(false);
        }
        for fixed in self.subsets(alpha.len())? {
            let single = fixed.len() == 1;
            let query = NablaQuery::new(alpha.to_vec(), fixed)?;
            let nonempty = self.nabla_nonempty(&query)?;
            let wanted_empty = single || kind == MaximalKind::Absolute;
            if nonempty == wanted_empty {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn evidence(&self, alpha: &[i64], enumerated: bool, definitional: bool) -> Result<Mismatch> {
        let sg = self.semigroup;
        let nabla = self
            .subsets(alpha.len())?
            .into_iter()
            .map(|fixed| {
                let query = NablaQuery::new(alpha.to_vec(), fixed.clone())?;
                Ok(NablaWitness {
                    fixed: fixed.iter().map(|k| k + 1).collect(),
                    witness: self.nabla_witness(&query)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let criterion = sg.criterion_sum(alpha);
        Ok(Mismatch {
            point: LatticePoint(alpha.to_vec()),
            enumerated,
            definitional,
            member: sg.is_member(alpha),
            per_coordinate_t: (0..alpha.len())
                .map(|i| sg.per_coordinate_t(i, alpha))
                .collect(),
            unique_t: criterion.map(|c| c.0),
            criterion_sum: criterion.map(|c| c.1),
            nabla,
        })
    }

    /// Compares the definitional scan of `window` with the explicit
    /// enumeration of maximal elements.
    pub fn crosscheck_window(
        &self,
        kind: MaximalKind,
        window: &Window,
    ) -> Result<CrosscheckReport> {
        let size = window.size();
        if size > self.budget {
            return Err(Error::BudgetExceeded {
                region: size,
                budget: self.budget,
            });
        }
        let listed: Vec<LatticePoint> = self
            .semigroup
            .enumerate_maximal_in_window(kind, window)?
            .into_iter()
            .map(|e| e.point)
            .collect();
        let mut listed_sorted = listed.clone();
        listed_sorted.sort();

        let points: Vec<Vec<i64>> = window.points().collect();
        let verdicts = points
            .par_iter()
            .map(|p| self.is_maximal_definitional(p, kind))
            .collect::<Result<Vec<bool>>>()?;

        let mut mismatches = Vec::new();
        let mut definitional = 0;
        for (p, &is_max) in points.iter().zip(&verdicts) {
            definitional += usize::from(is_max);
            let enumerated = listed_sorted
                .binary_search_by(|q| q.0.as_slice().cmp(p))
                .is_ok();
            if enumerated != is_max {
                mismatches.push(self.evidence(p, enumerated, is_max)?);
            }
        }
        Ok(CrosscheckReport {
            kind,
            window: window.to_string(),
            points_scanned: size,
            enumerated: listed.len(),
            definitional,
            agree: mismatches.is_empty(),
            mismatches,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::profile::RamificationProfile;

    fn sg(m: i64, lambdas: &[i64], n: usize) -> KummerSemigroup {
        KummerSemigroup::new(RamificationProfile::new(m, lambdas.to_vec(), n)).unwrap()
    }

    #[test]
    fn nabla_examples() {
        let k1 = sg(3, &[1, 1, -2], 2);
        let oracle = Oracle::new(&k1);
        assert!(!oracle
            .nabla_nonempty(&NablaQuery::new(vec![1, 1], vec![0]).unwrap())
            .unwrap());
        assert!(!oracle
            .nabla_nonempty(&NablaQuery::new(vec![0, 0], vec![0]).unwrap())
            .unwrap());

        let k2 = sg(5, &[1, 1, 1, -3], 3);
        let oracle = Oracle::new(&k2);
        let w = oracle
            .nabla_witness(&NablaQuery::new(vec![2, 2, 2], vec![0, 1]).unwrap())
            .unwrap()
            .unwrap();
        assert_eq!(&w[..2], &[2, 2]);
        assert!(w[2] <= 1);
        assert!(k2.is_member(&w));
    }

    #[test]
    fn query_validation() {
        assert!(NablaQuery::new(vec![1, 1], vec![]).is_err());
        assert!(NablaQuery::new(vec![1, 1], vec![0, 1]).is_err());
        assert!(NablaQuery::new(vec![1, 1, 1], vec![3]).is_err());
        assert_eq!(
            NablaQuery::new(vec![1, 1, 1], vec![2, 0, 2])
                .unwrap()
                .fixed(),
            &[0, 2]
        );
    }

    #[test]
    fn definitional_examples() {
        let k1 = sg(3, &[1, 1, -2], 2);
        let oracle = Oracle::new(&k1);
        assert!(oracle
            .is_maximal_definitional(&[1, 1], MaximalKind::Absolute)
            .unwrap());
        assert!(!oracle
            .is_maximal_definitional(&[2, 2], MaximalKind::Absolute)
            .unwrap());
        assert!(!oracle
            .is_maximal_definitional(&[1, 0], MaximalKind::Absolute)
            .unwrap());

        let k2 = sg(5, &[1, 1, 1, -3], 3);
        let oracle = Oracle::new(&k2);
        assert!(oracle
            .is_maximal_definitional(&[2, 2, 2], MaximalKind::Relative)
            .unwrap());
        assert!(!oracle
            .is_maximal_definitional(&[2, 2, 2], MaximalKind::Absolute)
            .unwrap());
        assert!(oracle
            .is_maximal_definitional(&[1, 1, 1], MaximalKind::Absolute)
            .unwrap());
    }

    #[test]
    fn budget_is_enforced() {
        let k1 = sg(3, &[1, 1, -2], 2);
        let oracle = Oracle::new(&k1).with_budget(10);
        let big = NablaQuery::new(vec![100, 100], vec![0]).unwrap();
        assert!(matches!(
            oracle.nabla_witness(&big),
            Err(Error::BudgetExceeded { .. })
        ));
        let w = Window::cube(2, 0, 10).unwrap();
        assert!(matches!(
            oracle.crosscheck_window(MaximalKind::Absolute, &w),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn small_crosschecks_agree() {
        let k1 = sg(3, &[1, 1, -2], 2);
        let report = Oracle::new(&k1)
            .crosscheck_window(MaximalKind::Absolute, &Window::cube(2, -4, 7).unwrap())
            .unwrap();
        assert!(report.agree, "{report}");
        assert_eq!(report.enumerated, report.definitional);

        let k2 = sg(5, &[1, 1, 1, -3], 2);
        let report = Oracle::new(&k2)
            .crosscheck_window(MaximalKind::Absolute, &Window::cube(2, 0, 12).unwrap())
            .unwrap();
        assert!(report.agree, "{report}");
        assert_eq!(
            report,
            Oracle::new(&k2)
                .crosscheck_window(MaximalKind::Absolute, &Window::cube(2, 0, 12).unwrap())
                .unwrap()
        );
    }

    #[test]
    fn mismatch_evidence_is_complete() {
        let k1 = sg(3, &[1, 1, -2], 2);
        let oracle = Oracle::new(&k1);
        let ev = oracle.evidence(&[2, 2], false, false).unwrap();
        assert_eq!(ev.per_coordinate_t, vec![1, 1]);
        assert_eq!(ev.unique_t, Some(1));
        assert_eq!(ev.criterion_sum, Some(1));
        assert_eq!(ev.nabla.len(), 2);
        assert!(ev.nabla.iter().any(|w| w.witness.is_some()));
    }
}
