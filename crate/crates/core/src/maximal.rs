//! Explicit absolute and relative maximal elements.
//!
//! `Υ̂(Q)` (with `Υ = Γ` for `ρ = 0`, `Υ = Λ` for `ρ = n − 2`) is the union of
//!
//! - `(m j₁ + t₁(i), …, m jₙ + tₙ(i))` for `1 ≤ i ≤ m − 1` and
//!   `j₁ + ⋯ + jₙ = β(i) + 1 − n + ρ`, and
//! - `(m j₁, …, m jₙ)` with `j₁ + ⋯ + jₙ = ρ`.
//!
//! Both families are infinite, so they are enumerated inside a [`Window`].
//! Restricting to `jₖ ≥ 0` in the first family gives the finite set `Υ(Q)`.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::arith::{ceil_div_wide, floor_div_wide, narrow, ResidueIndex};
use crate::error::{Error, Result};
use crate::membership::{KummerSemigroup, LatticePoint, MaximalKind};
use crate::window::Window;

/// Which family of the explicit description produced a point. Multiples of
/// `m` sort first, then residues in increasing order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Branch {
    MultipleOfM,
    Residue(ResidueIndex),
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Branch::MultipleOfM => f.write_str("m-multiple"),
            Branch::Residue(i) => write!(f, "{}", i.get()),
        }
    }
}

impl Serialize for Branch {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Branch::MultipleOfM => s.serialize_str("m-multiple"),
            Branch::Residue(i) => s.serialize_i64(i.get()),
        }
    }
}

/// A maximal element with its provenance `(branch, j₁, …, jₙ)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MaximalElement {
    pub point: LatticePoint,
    pub branch: Branch,
    pub composition: Vec<i64>,
}

/// Integer tuples `j` with `lo_k ≤ j_k ≤ hi_k` and `Σ j_k = sum`, in
/// lexicographic order.
#[derive(Debug, Clone)]
pub struct BoundedCompositions {
    lo: Vec<i64>,
    hi: Vec<i64>,
    sum: i128,
    /// Minimum and maximum attainable sums of each suffix `j_k, …, j_n`.
    suffix_min: Vec<i128>,
    suffix_max: Vec<i128>,
    next: Option<Vec<i64>>,
}

impl BoundedCompositions {
    pub fn new(lo: Vec<i64>, hi: Vec<i64>, sum: i64) -> Self {
        assert_eq!(lo.len(), hi.len());
        assert!(!lo.is_empty());
        let n = lo.len();
        let mut suffix_min = vec![0i128; n + 1];
        let mut suffix_max = vec![0i128; n + 1];
        for k in (0..n).rev() {
            suffix_min[k] = suffix_min[k + 1] + i128::from(lo[k]);
            suffix_max[k] = suffix_max[k + 1] + i128::from(hi[k]);
        }
        let sum = i128::from(sum);
        let empty = lo.iter().zip(&hi).any(|(l, h)| l > h);
        let mut this = Self {
            lo,
            hi,
            sum,
            suffix_min,
            suffix_max,
            next: None,
        };
        if !empty && this.suffix_min[0] <= sum && sum <= this.suffix_max[0] {
            let mut first = vec![0; n];
            this.fill_from(&mut first, 0, sum);
            this.next = Some(first);
        }
        this
    }

    /// Nonnegative compositions of `sum` into `parts` parts.
    pub fn nonnegative(parts: usize, sum: i64) -> Self {
        Self::new(vec![0; parts], vec![sum.max(0); parts], sum)
    }

    /// Smallest completion of `j[from..]` with total `rest`; feasibility is
    /// the caller's invariant.
    fn fill_from(&self, j: &mut [i64], from: usize, mut rest: i128) {
        let n = j.len();
        for (k, slot) in j.iter_mut().enumerate().take(n - 1).skip(from) {
            let v = i128::from(self.lo[k]).max(rest - self.suffix_max[k + 1]);
            *slot = v as i64;
            rest -= v;
        }
        j[n - 1] = rest as i64;
    }
}

impl Iterator for BoundedCompositions {
    type Item = Vec<i64>;

    fn next(&mut self) -> Option<Vec<i64>> {
        let current = self.next.take()?;
        let n = current.len();
        let mut prefix: i128 = current[..n - 1].iter().map(|&x| i128::from(x)).sum();
        for k in (0..n - 1).rev() {
            prefix -= i128::from(current[k]);
            let bumped = i128::from(current[k]) + 1;
            let rest = self.sum - prefix - bumped;
            if bumped <= i128::from(self.hi[k]) && rest >= self.suffix_min[k + 1] {
                let mut succ = current.clone();
                succ[k] = bumped as i64;
                self.fill_from(&mut succ, k + 1, rest);
                self.next = Some(succ);
                break;
            }
        }
        Some(current)
    }
}

/// `C(a, b)`, zero when `a < b` (including negative `a`).
pub fn binomial(a: i64, b: i64) -> Option<u128> {
    if b < 0 || a < b {
        return Some(0);
    }
    let b = b.min(a - b) as u128;
    let a = a as u128;
    let mut acc: u128 = 1;
    for k in 0..b {
        acc = acc.checked_mul(a - k)? / (k + 1);
    }
    Some(acc)
}

impl KummerSemigroup {
    /// `β(i) + 1 − n + ρ`, the required composition sum on the residue branch.
    pub fn branch_sum(&self, i: ResidueIndex, kind: MaximalKind) -> i64 {
        let n = self.n() as i64;
        self.table().beta_at(i) + 1 - n + kind.rho(self.n())
    }

    fn element(&self, branch: Branch, offsets: &[i64], j: Vec<i64>) -> Result<MaximalElement> {
        let m = i128::from(self.m());
        let coords = j
            .iter()
            .zip(offsets)
            .map(|(&jk, &t)| narrow(m * i128::from(jk) + i128::from(t), "coordinate"))
            .collect::<Result<Vec<_>>>()?;
        Ok(MaximalElement {
            point: LatticePoint(coords),
            branch,
            composition: j,
        })
    }

    fn window_branch(
        &self,
        window: &Window,
        branch: Branch,
        offsets: &[i64],
        sum: i64,
    ) -> Result<Vec<MaximalElement>> {
        let m = i128::from(self.m());
        let mut lo = Vec::with_capacity(offsets.len());
        let mut hi = Vec::with_capacity(offsets.len());
        for (&(wlo, whi), &t) in window.bounds().iter().zip(offsets) {
            lo.push(narrow(
                ceil_div_wide(i128::from(wlo) - i128::from(t), m),
                "j range",
            )?);
            hi.push(narrow(
                floor_div_wide(i128::from(whi) - i128::from(t), m),
                "j range",
            )?);
        }
        BoundedCompositions::new(lo, hi, sum)
            .map(|j| self.element(branch, offsets, j))
            .collect()
    }

    /// Every point of `Υ̂(Q)` inside `window`, ordered by branch and then
    /// lexicographically by coordinates.
    pub fn enumerate_maximal_in_window(
        &self,
        kind: MaximalKind,
        window: &Window,
    ) -> Result<Vec<MaximalElement>> {
        let n = self.n();
        if window.dim() != n {
            return Err(Error::Arity {
                expected: n,
                got: window.dim(),
            });
        }
        let rho = kind.rho(n);
        let mut out = self.window_branch(window, Branch::MultipleOfM, &vec![0; n], rho)?;

        let residues: Vec<ResidueIndex> = self.table().residues().collect();
        let per_residue = residues
            .par_iter()
            .map(|&i| {
                let offsets = self.table().offsets(i);
                debug_assert!(offsets.iter().all(|&t| t != 0));
                self.window_branch(
                    window,
                    Branch::Residue(i),
                    &offsets,
                    self.branch_sum(i, kind),
                )
            })
            .collect::<Result<Vec<_>>>()?;
        out.extend(per_residue.into_iter().flatten());
        Ok(out)
    }

    /// The finite set `Υ(Q) = Υ̂(Q) ∩ ℕⁿ`: nonnegative compositions of
    /// `β(i) + 1 − n + ρ` shifted by the offsets `t_k(i)`.
    pub fn enumerate_minimal_generating(&self, kind: MaximalKind) -> Result<Vec<MaximalElement>> {
        let residues: Vec<ResidueIndex> = self.table().residues().collect();
        let per_residue = residues
            .par_iter()
            .map(|&i| {
                let sum = self.branch_sum(i, kind);
                if sum < 0 {
                    return Ok(Vec::new());
                }
                let offsets = self.table().offsets(i);
                BoundedCompositions::nonnegative(self.n(), sum)
                    .map(|j| self.element(Branch::Residue(i), &offsets, j))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(per_residue.into_iter().flatten().collect())
    }

    /// `|Υ(Q)| = Σ_{i=1}^{m−1} C(β(i) + ρ, n − 1)`.
    pub fn cardinality(&self, kind: MaximalKind) -> Result<u128> {
        let rho = kind.rho(self.n());
        let parts = self.n() as i64 - 1;
        self.table()
            .betas()
            .iter()
            .try_fold(0u128, |acc, &b| {
                binomial(b + rho, parts).and_then(|c| acc.checked_add(c))
            })
            .ok_or(Error::Overflow("cardinality"))
    }

    /// `|Υ_{k,0,…,0}| = #{1 ≤ i ≤ m − 1 : β(i) + 1 − n + ρ = k}`.
    pub fn block_count(&self, kind: MaximalKind, k: i64) -> usize {
        self.table()
            .residues()
            .filter(|&i| self.branch_sum(i, kind) == k)
            .count()
    }

    /// All nonzero block counts, keyed by `k ≥ 0`.
    pub fn block_counts(&self, kind: MaximalKind) -> BTreeMap<i64, usize> {
        let mut counts = BTreeMap::new();
        for i in self.table().residues() {
            let k = self.branch_sum(i, kind);
            if k >= 0 {
                *counts.entry(k).or_insert(0) += 1;
            }
        }
        counts
    }
}
