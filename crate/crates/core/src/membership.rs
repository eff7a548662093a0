//! Membership in the generalized Weierstrass semigroup `Ĥ(Q)` and everything
//! derived from the ℓ-drop test: gaps, pure gaps, discrepancies and the
//! arithmetic maximality criterion.
//!
//! For `α ∈ ℤⁿ` and a distinguished coordinate `i`, `ℓ(D_α) = ℓ(D_α − Q_i)`
//! exactly when
//!
//! ```text
//! Σ_{k ≤ n} ⌊(α_k + t_i λ_k)/m⌋ + Σ_{k > n} ⌊t_i λ_k/m⌋ < 0,
//! ```
//!
//! where `t_i ∈ {0, …, m−1}` solves `α_i + t_i λ_i ≡ 0 (mod m)`. A point is a
//! member iff no coordinate drops.

use std::fmt;
use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::arith::{ceil_div_wide, floor_div_wide, BetaTable};
use crate::error::{Error, Result};
use crate::profile::RamificationProfile;
use crate::window::Window;

/// A candidate element `α = (α₁, …, αₙ) ∈ ℤⁿ`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LatticePoint(pub Vec<i64>);

impl Deref for LatticePoint {
    type Target = [i64];

    fn deref(&self) -> &[i64] {
        &self.0
    }
}

impl From<Vec<i64>> for LatticePoint {
    fn from(v: Vec<i64>) -> Self {
        Self(v)
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    Member,
    Gap,
    PureGap,
    /// Not a member and outside `ℕ₀ⁿ`, where gaps are not defined.
    NonMemberOutsideBox,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Member => "Member",
            Verdict::Gap => "Gap",
            Verdict::PureGap => "PureGap",
            Verdict::NonMemberOutsideBox => "NonMemberOutsideBox",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub verdict: Verdict,
    /// 0-based coordinates `i` with `ℓ(D_α) = ℓ(D_α − Q_i)`, ascending.
    pub drops: Vec<usize>,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.verdict)?;
        if matches!(self.verdict, Verdict::Gap | Verdict::NonMemberOutsideBox) {
            let ones: Vec<String> = self.drops.iter().map(|i| (i + 1).to_string()).collect();
            write!(f, " drops=[{}]", ones.join(","))?;
        }
        Ok(())
    }
}

/// Absolute (`Γ̂`, `ρ = 0`) or relative (`Λ̂`, `ρ = n − 2`) maximality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MaximalKind {
    Absolute,
    Relative,
}

impl MaximalKind {
    pub fn rho(self, n: usize) -> i64 {
        match self {
            MaximalKind::Absolute => 0,
            MaximalKind::Relative => n as i64 - 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            MaximalKind::Absolute => "absolute",
            MaximalKind::Relative => "relative",
        }
    }
}

impl fmt::Display for MaximalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for MaximalKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "absolute" | "gamma" => Ok(MaximalKind::Absolute),
            "relative" | "lambda" => Ok(MaximalKind::Relative),
            other => Err(format!("unknown maximal kind {other:?}")),
        }
    }
}

/// A validated profile together with its residue tables.
#[derive(Debug, Clone)]
pub struct KummerSemigroup {
    profile: RamificationProfile,
    table: BetaTable,
}

impl KummerSemigroup {
    /// Validates the profile (errors only; warnings are ignored) and builds
    /// the residue tables.
    pub fn new(profile: RamificationProfile) -> Result<Self> {
        let profile = profile.validated()?;
        let table = BetaTable::new(&profile)?;
        Ok(Self { profile, table })
    }

    /// View of the same extension with a single distinguished place, the
    /// `place`-th (0-based) one. The remaining valuations keep their order.
    pub fn single_place(&self, place: usize) -> Result<Self> {
        let n = self.n();
        if place >= n {
            return Err(Error::IndexNotDistinguished { index: place, n });
        }
        let mut lambdas = Vec::with_capacity(self.profile.lambdas.len());
        lambdas.push(self.profile.lambdas[place]);
        lambdas.extend(
            self.profile
                .lambdas
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != place)
                .map(|(_, &l)| l),
        );
        let profile = RamificationProfile::new(self.profile.m, lambdas, 1);
        let table = BetaTable::new(&profile)?;
        Ok(Self { profile, table })
    }

    pub fn profile(&self) -> &RamificationProfile {
        &self.profile
    }

    pub fn table(&self) -> &BetaTable {
        &self.table
    }

    pub fn m(&self) -> i64 {
        self.profile.m
    }

    pub fn n(&self) -> usize {
        self.profile.n
    }

    pub fn check_arity(&self, alpha: &[i64]) -> Result<()> {
        if alpha.len() == self.n() {
            Ok(())
        } else {
            Err(Error::Arity {
                expected: self.n(),
                got: alpha.len(),
            })
        }
    }

    fn assert_arity(&self, alpha: &[i64]) {
        assert_eq!(
            alpha.len(),
            self.n(),
            "lattice point has {} coordinates, profile has {} distinguished places",
            alpha.len(),
            self.n()
        );
    }

    /// `t_i ∈ {0, …, m−1}` with `α_i + t_i λ_i ≡ 0 (mod m)`.
    pub fn per_coordinate_t(&self, i: usize, alpha: &[i64]) -> i64 {
        self.table.per_coordinate_t(i, alpha[i])
    }

    /// Common solution of `α_k + tλ_k ≡ 0 (mod m)` over all coordinates.
    pub fn unique_t(&self, alpha: &[i64]) -> Option<i64> {
        self.assert_arity(alpha);
        self.table.unique_t(alpha)
    }

    /// `Σ_{k ≤ n} ⌊(α_k + tλ_k)/m⌋ + Σ_{k > n} ⌊tλ_k/m⌋` for `t = t_i`.
    pub fn drop_sum(&self, i: usize, alpha: &[i64]) -> i128 {
        self.assert_arity(alpha);
        let t = self.per_coordinate_t(i, alpha);
        let m = i128::from(self.m());
        let head: i128 = alpha
            .iter()
            .zip(self.table.head())
            .map(|(&a, &l)| floor_div_wide(i128::from(a) + i128::from(t) * i128::from(l), m))
            .sum();
        head + i128::from(self.table.tail_floor(t))
    }

    /// True iff `ℓ(D_α) = ℓ(D_α − Q_i)`. Valid for every `α ∈ ℤⁿ`.
    pub fn ell_drop(&self, i: usize, alpha: &[i64]) -> bool {
        self.drop_sum(i, alpha) < 0
    }

    pub fn is_member(&self, alpha: &[i64]) -> bool {
        (0..self.n()).all(|i| !self.ell_drop(i, alpha))
    }

    pub fn classify(&self, alpha: &[i64]) -> Classification {
        let drops: Vec<usize> = (0..self.n()).filter(|&i| self.ell_drop(i, alpha)).collect();
        let verdict = if drops.is_empty() {
            Verdict::Member
        } else if alpha.iter().any(|&a| a < 0) {
            Verdict::NonMemberOutsideBox
        } else if drops.len() == self.n() {
            Verdict::PureGap
        } else {
            Verdict::Gap
        };
        Classification { verdict, drops }
    }

    /// The common `t` and `Σ_k ⌈α_k/m⌉ + Σ_{k=1}^{r} ⌊tλ_k/m⌋`, when `t` exists.
    pub fn criterion_sum(&self, alpha: &[i64]) -> Option<(i64, i128)> {
        let t = self.unique_t(alpha)?;
        let m = i128::from(self.m());
        let ceil: i128 = alpha.iter().map(|&a| ceil_div_wide(i128::from(a), m)).sum();
        Some((t, ceil + i128::from(self.table.full_floor(t))))
    }

    /// `D_α(Q)` is a discrepancy for every pair of distinct places, i.e.
    /// `α ∈ Γ̂(Q)`.
    pub fn is_discrepancy_point(&self, alpha: &[i64]) -> bool {
        self.is_maximal_by_criterion(alpha, MaximalKind::Absolute)
    }

    /// `D_{α−1}(Q) + Q_i + Q_j` is a discrepancy for every pair `i ≠ j`, i.e.
    /// `α ∈ Λ̂(Q)`.
    pub fn is_relative_discrepancy_point(&self, alpha: &[i64]) -> bool {
        self.is_maximal_by_criterion(alpha, MaximalKind::Relative)
    }

    pub fn is_maximal_by_criterion(&self, alpha: &[i64], kind: MaximalKind) -> bool {
        self.criterion_sum(alpha)
            .is_some_and(|(_, sum)| sum == i128::from(kind.rho(self.n())))
    }

    /// Gaps of the Weierstrass semigroup at the `place`-th distinguished place
    /// alone. The scan covers `[0, 2g + m]`, which contains every gap.
    pub fn single_place_gaps(&self, place: usize) -> Result<Vec<i64>> {
        let view = self.single_place(place)?;
        let g = self.profile.genus()?;
        let top = 2 * g + self.m();
        Ok((0..=top).filter(|&a| !view.is_member(&[a])).collect())
    }

    /// Classifies every point of a window inside `ℕ₀ⁿ`, in lexicographic order.
    pub fn classify_box(&self, window: &Window) -> Result<Vec<(LatticePoint, Classification)>> {
        if window.dim() != self.n() {
            return Err(Error::Arity {
                expected: self.n(),
                got: window.dim(),
            });
        }
        if !window.is_nonnegative() {
            return Err(Error::BadWindow(format!(
                "box {window} is not contained in the nonnegative orthant"
            )));
        }
        Ok(window
            .points()
            .map(|p| {
                let c = self.classify(&p);
                (LatticePoint(p), c)
            })
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k1() -> KummerSemigroup {
        KummerSemigroup::new(RamificationProfile::new(3, vec![1, 1, -2], 2)).unwrap()
    }

    fn k2(n: usize) -> KummerSemigroup {
        KummerSemigroup::new(RamificationProfile::new(5, vec![1, 1, 1, -3], n)).unwrap()
    }

    #[test]
    fn ell_drop_examples() {
        let s = k1();
        assert_eq!(s.drop_sum(0, &[1, 0]), -1);
        assert!(s.ell_drop(0, &[1, 0]));
        assert_eq!(s.drop_sum(0, &[1, 1]), 0);
        assert!(!s.ell_drop(0, &[1, 1]));
        for sg in [k1(), k2(2), k2(3)] {
            let zero = vec![0; sg.n()];
            assert!((0..sg.n()).all(|i| !sg.ell_drop(i, &zero)));
        }
    }

    #[test]
    fn classify_examples() {
        let s = k1();
        assert_eq!(s.classify(&[1, 1]).verdict, Verdict::Member);
        let gap = s.classify(&[1, 0]);
        assert_eq!(gap.verdict, Verdict::Gap);
        assert_eq!(gap.drops, vec![0]);
        assert_eq!(gap.to_string(), "Gap drops=[1]");

        let pure = k2(2).classify(&[1, 2]);
        assert_eq!(pure.verdict, Verdict::PureGap);
        assert_eq!(pure.drops, vec![0, 1]);
        assert_eq!(pure.to_string(), "PureGap");
        assert_eq!(k2(2).drop_sum(0, &[1, 2]), -1);
        assert_eq!(k2(2).drop_sum(1, &[1, 2]), -1);
    }

    #[test]
    fn negative_nonmembers_are_not_gaps() {
        let s = k1();
        let c = s.classify(&[-1, 0]);
        assert_eq!(c.verdict, Verdict::NonMemberOutsideBox);
        assert!(!c.drops.is_empty());
        // Members with negative coordinates exist too.
        assert_eq!(s.classify(&[4, -2]).verdict, Verdict::Member);
    }

    #[test]
    fn discrepancy_examples() {
        let s = k1();
        assert!(s.is_discrepancy_point(&[1, 1]));
        assert!(!s.is_discrepancy_point(&[1, 2]));
        assert!(s.is_discrepancy_point(&[0, 0]));
        assert!(s.is_relative_discrepancy_point(&[1, 1]));

        let s3 = k2(3);
        assert_eq!(s3.criterion_sum(&[2, 2, 2]), Some((3, 1)));
        assert!(s3.is_relative_discrepancy_point(&[2, 2, 2]));
        assert!(!s3.is_relative_discrepancy_point(&[0, 0, 0]));
    }

    #[test]
    fn criterion_examples() {
        let s = k1();
        assert!(s.is_maximal_by_criterion(&[1, 1], MaximalKind::Absolute));
        assert!(s.is_maximal_by_criterion(&[4, -2], MaximalKind::Absolute));
        assert_eq!(s.criterion_sum(&[2, 2]), Some((1, 1)));
        assert!(!s.is_maximal_by_criterion(&[2, 2], MaximalKind::Absolute));
    }

    #[test]
    fn single_place_gap_counts_match_genus() {
        assert_eq!(k1().single_place_gaps(0).unwrap(), vec![1]);
        assert_eq!(k2(2).single_place_gaps(0).unwrap(), vec![1, 2, 3, 6]);
        assert_eq!(k2(3).single_place_gaps(2).unwrap().len(), 4);
        assert!(k1().single_place_gaps(2).is_err());
    }

    #[test]
    fn classify_box_rejects_negative_and_wrong_arity() {
        let s = k1();
        assert!(s.classify_box(&"-1:2,0:2".parse().unwrap()).is_err());
        assert!(s.classify_box(&"0:2".parse().unwrap()).is_err());
        let rows = s.classify_box(&"0:2,0:2".parse().unwrap()).unwrap();
        assert_eq!(rows.len(), 9);
        assert_eq!(rows[0].1.verdict, Verdict::Member);
    }

    #[test]
    fn kind_rho() {
        assert_eq!(MaximalKind::Absolute.rho(5), 0);
        assert_eq!(MaximalKind::Relative.rho(5), 3);
        assert_eq!(MaximalKind::Relative.rho(2), 0);
        assert_eq!("Relative".parse::<MaximalKind>(), Ok(MaximalKind::Relative));
    }
}
