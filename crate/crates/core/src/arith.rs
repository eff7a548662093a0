//! Exact integer helpers: floor/ceil division, modular inverses and the
//! residue tables `t_k(i) = (iλ_k) mod m` and `β(i) = Σ_k ⌈iλ_k/m⌉ − 1`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::profile::RamificationProfile;

/// Largest modulus for which residue tables are materialized.
pub const MAX_MODULUS: i64 = 1 << 26;

/// `⌊a/m⌋`, rounding toward −∞. Requires `m ≥ 1`.
pub fn floor_div(a: i64, m: i64) -> i64 {
    debug_assert!(m >= 1);
    a.div_euclid(m)
}

/// `⌈a/m⌉`. Requires `m ≥ 1`.
pub fn ceil_div(a: i64, m: i64) -> i64 {
    debug_assert!(m >= 1);
    -(-a).div_euclid(m)
}

pub(crate) fn floor_div_wide(a: i128, m: i128) -> i128 {
    a.div_euclid(m)
}

pub(crate) fn ceil_div_wide(a: i128, m: i128) -> i128 {
    -(-a).div_euclid(m)
}

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a as i64
}

/// Inverse of `a` modulo `m` by the extended Euclidean algorithm, or `None`
/// when `gcd(a, m) ≠ 1`. `m` need not be prime.
pub fn mod_inverse(a: i64, m: i64) -> Option<i64> {
    if m == 1 {
        return Some(0);
    }
    let (mut old_r, mut r) = (i128::from(a).rem_euclid(i128::from(m)), i128::from(m));
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(i128::from(m)) as i64)
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Decomposes `q = p^a` with `p` prime and `a ≥ 1`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2u64;
    while p.saturating_mul(p) <= q && !q.is_multiple_of(p) {
        p += 1;
    }
    if !q.is_multiple_of(p) {
        p = q;
    }
    let (mut rest, mut a) = (q, 0u32);
    while rest % p == 0 {
        rest /= p;
        a += 1;
    }
    (rest == 1).then_some((p, a))
}

pub(crate) fn narrow(v: i128, what: &'static str) -> Result<i64> {
    i64::try_from(v).map_err(|_| Error::Overflow(what))
}

/// A validated residue index `1 ≤ i ≤ m − 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ResidueIndex(i64);

impl ResidueIndex {
    pub fn new(i: i64, m: i64) -> Result<Self> {
        if (1..m).contains(&i) {
            Ok(Self(i))
        } else {
            Err(Error::ResidueOutOfRange { i, max: m - 1 })
        }
    }

    pub fn get(self) -> i64 {
        self.0
    }
}

/// Precomputed residue data for one profile, shared read-only by every
/// membership test and enumeration.
#[derive(Debug, Clone)]
pub struct BetaTable {
    m: i64,
    n: usize,
    head: Vec<i64>,
    inverse: Vec<i64>,
    beta: Vec<i64>,
    /// `t_k(i)` stored row-major: `t[k * (m - 1) + (i - 1)]`.
    t: Vec<i64>,
    /// `Σ_{k ≥ n} ⌊tλ_k/m⌋` for `t ∈ 0..m`.
    tail_floor: Vec<i64>,
    /// `Σ_{k} ⌊tλ_k/m⌋` over all `r` places, for `t ∈ 0..m`.
    full_floor: Vec<i64>,
}

impl BetaTable {
    /// Builds the tables. The distinguished valuations must be units mod `m`;
    /// beyond that no profile validation is performed here.
    pub fn new(profile: &RamificationProfile) -> Result<Self> {
        let m = profile.m;
        let n = profile.n;
        if m < 2 {
            return Err(Error::InconsistentProfile(format!("modulus {m} < 2")));
        }
        if m > MAX_MODULUS {
            return Err(Error::InconsistentProfile(format!(
                "modulus {m} exceeds table limit {MAX_MODULUS}"
            )));
        }
        if n == 0 || n > profile.lambdas.len() {
            return Err(Error::InconsistentProfile(format!(
                "{n} distinguished places out of {}",
                profile.lambdas.len()
            )));
        }
        let head = profile.lambdas[..n].to_vec();
        let inverse = head
            .iter()
            .map(|&l| {
                mod_inverse(l, m).ok_or_else(|| {
                    Error::InconsistentProfile(format!(
                        "gcd({l}, {m}) != 1 at a distinguished place"
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()?;

        // β and the floor sums are O(m · distinct λ); presets repeat λ heavily.
        let multiset = |ls: &[i64]| {
            let mut counts = BTreeMap::new();
            for &l in ls {
                *counts.entry(l).or_insert(0i128) += 1;
            }
            counts
        };
        let all = multiset(&profile.lambdas);
        let tail = multiset(&profile.lambdas[n..]);
        let wide_m = i128::from(m);

        let mut beta = Vec::with_capacity((m - 1) as usize);
        for i in 1..m {
            let s: i128 = all
                .iter()
                .map(|(&l, &c)| c * ceil_div_wide(i128::from(i) * i128::from(l), wide_m))
                .sum();
            beta.push(narrow(s - 1, "beta")?);
        }

        let floor_sum = |counts: &BTreeMap<i64, i128>, t: i64| -> Result<i64> {
            let s: i128 = counts
                .iter()
                .map(|(&l, &c)| c * floor_div_wide(i128::from(t) * i128::from(l), wide_m))
                .sum();
            narrow(s, "floor sum")
        };
        let mut tail_floor = Vec::with_capacity(m as usize);
        let mut full_floor = Vec::with_capacity(m as usize);
        for t in 0..m {
            tail_floor.push(floor_sum(&tail, t)?);
            full_floor.push(floor_sum(&all, t)?);
        }

        let mut t = Vec::with_capacity(n * (m - 1) as usize);
        for &l in &head {
            for i in 1..m {
                t.push((i128::from(i) * i128::from(l)).rem_euclid(wide_m) as i64);
            }
        }

        Ok(Self {
            m,
            n,
            head,
            inverse,
            beta,
            t,
            tail_floor,
            full_floor,
        })
    }

    pub fn modulus(&self) -> i64 {
        self.m
    }

    pub fn distinguished(&self) -> usize {
        self.n
    }

    pub fn residues(&self) -> impl Iterator<Item = ResidueIndex> {
        (1..self.m).map(ResidueIndex)
    }

    pub fn residue(&self, i: i64) -> Result<ResidueIndex> {
        ResidueIndex::new(i, self.m)
    }

    /// `β(i)`.
    pub fn beta(&self, i: i64) -> Result<i64> {
        Ok(self.beta_at(self.residue(i)?))
    }

    pub fn beta_at(&self, i: ResidueIndex) -> i64 {
        self.beta[(i.0 - 1) as usize]
    }

    /// `β(1), …, β(m − 1)`.
    pub fn betas(&self) -> &[i64] {
        &self.beta
    }

    /// `t_k(i) = (iλ_k) mod m` for a distinguished place `k` (0-based).
    pub fn t_of(&self, k: usize, i: i64) -> Result<i64> {
        if k >= self.n {
            return Err(Error::IndexNotDistinguished {
                index: k,
                n: self.n,
            });
        }
        Ok(self.t_at(k, self.residue(i)?))
    }

    pub fn t_at(&self, k: usize, i: ResidueIndex) -> i64 {
        self.t[k * (self.m - 1) as usize + (i.0 - 1) as usize]
    }

    /// The offsets `(t_1(i), …, t_n(i))`.
    pub fn offsets(&self, i: ResidueIndex) -> Vec<i64> {
        (0..self.n).map(|k| self.t_at(k, i)).collect()
    }

    /// The unique `t ∈ {0, …, m−1}` with `α_k + tλ_k ≡ 0 (mod m)` at
    /// coordinate `k` (0-based).
    pub fn per_coordinate_t(&self, k: usize, alpha_k: i64) -> i64 {
        let m = i128::from(self.m);
        ((-i128::from(alpha_k)) * i128::from(self.inverse[k])).rem_euclid(m) as i64
    }

    /// The common solution `t` of `α_k + tλ_k ≡ 0 (mod m)` over all
    /// distinguished coordinates, if the per-coordinate solutions agree.
    pub fn unique_t(&self, alpha: &[i64]) -> Option<i64> {
        debug_assert_eq!(alpha.len(), self.n);
        let first = self.per_coordinate_t(0, alpha[0]);
        alpha
            .iter()
            .enumerate()
            .skip(1)
            .all(|(k, &a)| self.per_coordinate_t(k, a) == first)
            .then_some(first)
    }

    pub(crate) fn head(&self) -> &[i64] {
        &self.head
    }

    /// `Σ_{k > n} ⌊tλ_k/m⌋` (places outside the distinguished tuple).
    pub fn tail_floor(&self, t: i64) -> i64 {
        self.tail_floor[t as usize]
    }

    /// `Σ_{k=1}^{r} ⌊tλ_k/m⌋`.
    pub fn full_floor(&self, t: i64) -> i64 {
        self.full_floor[t as usize]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn k1() -> RamificationProfile {
        RamificationProfile::new(3, vec![1, 1, -2], 2)
    }

    fn k2() -> RamificationProfile {
        RamificationProfile::new(5, vec![1, 1, 1, -3], 2)
    }

    #[test]
    fn floor_and_ceil() {
        assert_eq!(floor_div(7, 3), 2);
        assert_eq!(floor_div(-4, 3), -2);
        assert_eq!(floor_div(0, 5), 0);
        assert_eq!(ceil_div(-4, 3), -1);
        assert_eq!(ceil_div(7, 3), 3);
        assert_eq!(ceil_div(6, 3), 2);
    }

    #[test]
    fn t_values() {
        let p = RamificationProfile::new(5, vec![2, 3, -5], 2);
        let table = BetaTable::new(&p).unwrap();
        assert_eq!(table.t_of(0, 3).unwrap(), 1);

        let p = RamificationProfile::new(3, vec![-2, 1, 1], 2);
        let table = BetaTable::new(&p).unwrap();
        assert_eq!(table.t_of(0, 1).unwrap(), 1);
        assert_eq!(table.t_of(1, 2).unwrap(), 2);

        assert_eq!(
            table.t_of(2, 1),
            Err(Error::IndexNotDistinguished { index: 2, n: 2 })
        );
        assert!(matches!(
            table.t_of(0, 3),
            Err(Error::ResidueOutOfRange { .. })
        ));
    }

    #[test]
    fn beta_values() {
        let t1 = BetaTable::new(&k1()).unwrap();
        assert_eq!(t1.beta(1).unwrap(), 1);
        assert_eq!(t1.beta(2).unwrap(), 0);
        assert_eq!(t1.beta(0), Err(Error::ResidueOutOfRange { i: 0, max: 2 }));
        assert!(t1.beta(3).is_err());

        let t2 = BetaTable::new(&k2()).unwrap();
        assert_eq!(t2.betas(), &[2, 1, 1, 0]);
        assert_eq!(t2.beta(4).unwrap(), 0);
    }

    #[test]
    fn unique_and_per_coordinate_t() {
        let t1 = BetaTable::new(&k1()).unwrap();
        assert_eq!(t1.unique_t(&[1, 1]), Some(2));
        assert_eq!(t1.unique_t(&[1, 2]), None);
        assert_eq!(t1.unique_t(&[0, 0]), Some(0));
        assert_eq!(t1.per_coordinate_t(0, 1), 2);
        assert_eq!(t1.per_coordinate_t(1, 0), 0);

        let t2 = BetaTable::new(&k2()).unwrap();
        assert_eq!(t2.per_coordinate_t(1, 2), 3);
    }

    #[test]
    fn primes_and_prime_powers() {
        assert!(is_prime(2) && is_prime(13) && !is_prime(1) && !is_prime(9));
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(7), Some((7, 1)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }

    #[test]
    fn inverse_composite_modulus() {
        assert_eq!(mod_inverse(3, 10), Some(7));
        assert_eq!(mod_inverse(-3, 10), Some(3));
        assert_eq!(mod_inverse(4, 10), None);
        assert_eq!(mod_inverse(5, 1), Some(0));
    }

    #[test]
    fn beta_complement_counts_nonintegral_places() {
        for p in [
            k1(),
            k2(),
            RamificationProfile::new(9, vec![1, 1, 1, 3, -6], 2),
        ] {
            let table = BetaTable::new(&p).unwrap();
            let m = p.m;
            for i in 1..m {
                let nonintegral = p.lambdas.iter().filter(|&&l| (i * l) % m != 0).count() as i64;
                assert_eq!(
                    table.beta(i).unwrap() + table.beta(m - i).unwrap(),
                    nonintegral - 2
                );
            }
        }
    }

    proptest! {
        #[test]
        fn floor_identity(alpha in -500i64..500, lambda in -200i64..200, m in 1i64..=50, i in -300i64..300) {
            prop_assume!(gcd(lambda, m) == 1);
            let inv = mod_inverse(lambda, m).unwrap();
            let t = (-alpha * inv).rem_euclid(m);
            prop_assert_eq!((alpha + t * lambda).rem_euclid(m), 0);
            let lhs = floor_div(alpha + i * lambda, m);
            let shifted = floor_div(alpha - 1 + i * lambda, m);
            if (i - t).rem_euclid(m) == 0 {
                prop_assert_eq!(lhs, shifted + 1);
                prop_assert_eq!(lhs, ceil_div(alpha, m) + floor_div(i * lambda, m));
            } else {
                prop_assert_eq!(lhs, shifted);
            }
        }

        #[test]
        fn ceil_companions(a in -100_000i64..100_000, m in 1i64..1000) {
            prop_assert_eq!(ceil_div(a, m), -floor_div(-a, m));
            prop_assert_eq!(ceil_div(a, m), floor_div(a + m - 1, m));
        }

        #[test]
        fn t_is_bijection(m in 2i64..60, lambda in -100i64..100) {
            prop_assume!(lambda != 0 && gcd(lambda, m) == 1);
            let p = RamificationProfile::new(m, vec![lambda, lambda, -2 * lambda], 2);
            let table = BetaTable::new(&p).unwrap();
            let mut seen: Vec<i64> = (1..m).map(|i| table.t_of(0, i).unwrap()).collect();
            for (i, &t) in seen.iter().enumerate() {
                prop_assert_eq!(t, ((i as i64 + 1) * lambda).rem_euclid(m));
            }
            seen.sort_unstable();
            prop_assert_eq!(seen, (1..m).collect::<Vec<_>>());
        }
    }
}
