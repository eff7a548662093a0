//! Ramification profiles of curve families with known closed forms for `β(i)`.
//!
//! | family | `m` | valuations |
//! |---|---|---|
//! | `y^m = (x − a₁)⋯(x − a_t)` | `m` | `1 × t`, pole `−t` |
//! | `X_{a,b,n,s}` over `F_{q^{2n}}`, `q = p^a`, `d = p^b` | `(q^n + 1)/s` | `1 × q/d`, `(q+1) × q(q−1)/d`, pole `−q³/d` |
//! | `Y_{n,s}` (`d = 1`) | `(q^n + 1)/s` | `1 × q`, `(q+1) × q(q−1)`, pole `−q³` |
//! | Beelen–Montanucci `BM_n` | `q^n + 1` | `1 × (q+1)`, `(q+1) × (q²−q−1)`, pole `−(q³−q)` |
//!
//! Distinguished places are always the first `n` simple zeros.

use serde::Serialize;

use crate::arith::{ceil_div_wide, floor_div_wide, is_prime, prime_power};
use crate::error::{Error, Result};
use crate::profile::RamificationProfile;

/// Presets refuse to materialize more zeros and poles than this.
pub const MAX_PRESET_PLACES: u128 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum PresetKind {
    Separable {
        m: i64,
        t: i64,
    },
    Xabns {
        p: u64,
        a: u32,
        b: u32,
        n_exp: u32,
        s: u64,
    },
    Yns {
        q: u64,
        n_exp: u32,
        s: u64,
    },
    BeelenMontanucci {
        q: u64,
        n_exp: u32,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurvePreset {
    pub kind: PresetKind,
    pub profile: RamificationProfile,
}

fn bad(msg: impl Into<String>) -> Error {
    Error::BadPreset(msg.into())
}

fn pow(base: u64, exp: u32) -> Result<u128> {
    u128::from(base)
        .checked_pow(exp)
        .ok_or_else(|| bad(format!("{base}^{exp} overflows")))
}

fn check_exponent(n_exp: u32) -> Result<()> {
    if n_exp < 3 || n_exp.is_multiple_of(2) {
        return Err(bad(format!(
            "exponent n = {n_exp} must be odd and at least 3"
        )));
    }
    Ok(())
}

fn to_i64(v: u128, what: &str) -> Result<i64> {
    i64::try_from(v).map_err(|_| bad(format!("{what} = {v} does not fit in 64 bits")))
}

/// Valuation list `1 × simple, mult × repeated, −pole`.
fn materialize(simple: u128, mult: u128, repeated: u128, pole: u128) -> Result<Vec<i64>> {
    let r = simple + repeated + 1;
    if r > MAX_PRESET_PLACES {
        return Err(bad(format!(
            "{r} zeros and poles exceed the preset limit {MAX_PRESET_PLACES}"
        )));
    }
    let mult = to_i64(mult, "multiplicity")?;
    let pole = to_i64(pole, "pole order")?;
    let mut lambdas = Vec::with_capacity(r as usize);
    lambdas.extend(std::iter::repeat_n(1, simple as usize));
    lambdas.extend(std::iter::repeat_n(mult, repeated as usize));
    lambdas.push(-pole);
    Ok(lambdas)
}

/// Field `F_{q^{2n}}` of definition, when its size fits in 64 bits.
fn field_of(profile: RamificationProfile, p: u64, q: u64, n_exp: u32) -> RamificationProfile {
    match u64::try_from(pow(q, 2 * n_exp).unwrap_or(u128::MAX)) {
        Ok(size) => profile.with_field(p, size),
        Err(_) => profile,
    }
}

impl CurvePreset {
    fn finish(kind: PresetKind, profile: RamificationProfile) -> Result<Self> {
        let report = profile.validate();
        if !report.is_ok() {
            return Err(bad(format!("derived profile is invalid: {report}")));
        }
        Ok(Self { kind, profile })
    }

    /// `y^m = f(x)` with `f` separable of degree `t`; `gcd(m, t)` is unrestricted.
    pub fn separable(m: i64, t: i64, n: usize) -> Result<Self> {
        if m < 2 {
            return Err(bad(format!("m = {m} must be at least 2")));
        }
        if t < 2 {
            return Err(bad(format!("t = {t} must be at least 2")));
        }
        if n < 2 || n as i64 > t {
            return Err(bad(format!("n = {n} must satisfy 2 <= n <= t = {t}")));
        }
        let lambdas = materialize(t as u128, 1, 0, t as u128)?;
        Self::finish(
            PresetKind::Separable { m, t },
            RamificationProfile::new(m, lambdas, n),
        )
    }

    fn xy(kind: PresetKind, p: u64, q: u64, d: u64, n_exp: u32, s: u64, n: usize) -> Result<Self> {
        check_exponent(n_exp)?;
        let qn1 = pow(q, n_exp)? + 1;
        let q = u128::from(q);
        let quotient = qn1 / (q + 1);
        if s == 0 || quotient % u128::from(s) != 0 {
            return Err(bad(format!(
                "s = {s} must divide (q^n+1)/(q+1) = {quotient}"
            )));
        }
        let m = qn1 / u128::from(s);
        let d = u128::from(d);
        let simple = q / d;
        if n < 2 || n as u128 > simple {
            return Err(bad(format!(
                "n = {n} must satisfy 2 <= n <= q/d = {simple}"
            )));
        }
        let lambdas = materialize(simple, q + 1, q * (q - 1) / d, q * q * q / d)?;
        let profile = RamificationProfile::new(to_i64(m, "m")?, lambdas, n);
        Self::finish(kind, field_of(profile, p, q as u64, n_exp))
    }

    /// The maximal curve `X_{a,b,n,s}` over `F_{q^{2n}}` with `q = p^a`.
    pub fn xabns(p: u64, a: u32, b: u32, n_exp: u32, s: u64, n: usize) -> Result<Self> {
        if !is_prime(p) {
            return Err(bad(format!("p = {p} is not prime")));
        }
        if b == 0 || b >= a || !a.is_multiple_of(b) {
            return Err(bad(format!("need b | a and 1 <= b < a (a = {a}, b = {b})")));
        }
        let q = u64::try_from(pow(p, a)?).map_err(|_| bad("q overflows"))?;
        let d = u64::try_from(pow(p, b)?).map_err(|_| bad("d overflows"))?;
        Self::xy(
            PresetKind::Xabns { p, a, b, n_exp, s },
            p,
            q,
            d,
            n_exp,
            s,
            n,
        )
    }

    /// The maximal curve `Y_{n,s}` over `F_{q^{2n}}`.
    pub fn yns(q: u64, n_exp: u32, s: u64, n: usize) -> Result<Self> {
        let (p, _) = prime_power(q).ok_or_else(|| bad(format!("q = {q} is not a prime power")))?;
        Self::xy(PresetKind::Yns { q, n_exp, s }, p, q, 1, n_exp, s, n)
    }

    /// The Beelen–Montanucci curve `BM_n` over `F_{q^{2n}}`.
    pub fn beelen_montanucci(q: u64, n_exp: u32, n: usize) -> Result<Self> {
        let (p, _) = prime_power(q).ok_or_else(|| bad(format!("q = {q} is not a prime power")))?;
        check_exponent(n_exp)?;
        let m = pow(q, n_exp)? + 1;
        let qq = u128::from(q);
        if n < 2 || n as u128 > qq + 1 {
            return Err(bad(format!(
                "n = {n} must satisfy 2 <= n <= q+1 = {}",
                qq + 1
            )));
        }
        let lambdas = materialize(qq + 1, qq + 1, qq * qq - qq - 1, qq * qq * qq - qq)?;
        let profile = RamificationProfile::new(to_i64(m, "m")?, lambdas, n);
        Self::finish(
            PresetKind::BeelenMontanucci { q, n_exp },
            field_of(profile, p, q, n_exp),
        )
    }

    /// The family-specific closed form of `β(i)`, independent of the generic
    /// sum over all valuations.
    pub fn closed_form_beta(&self, i: i64) -> i128 {
        let i = i128::from(i);
        match self.kind {
            PresetKind::Separable { m, t } => {
                let (m, t) = (i128::from(m), i128::from(t));
                t - 1 - floor_div_wide(t * i, m)
            }
            PresetKind::Xabns { p, a, b, n_exp, s } => {
                let q = u128::from(p).pow(a) as i128;
                let d = u128::from(p).pow(b) as i128;
                xy_closed_form(q, d, n_exp, s, i)
            }
            PresetKind::Yns { q, n_exp, s } => xy_closed_form(i128::from(q), 1, n_exp, s, i),
            PresetKind::BeelenMontanucci { q, n_exp } => {
                let q = i128::from(q);
                let m = q.pow(n_exp) + 1;
                q + 1 + (q * q - q - 1) * ceil_div_wide(i * (q + 1), m)
                    - floor_div_wide(i * (q * q * q - q), m)
                    - 1
            }
        }
    }
}

fn xy_closed_form(q: i128, d: i128, n_exp: u32, s: u64, i: i128) -> i128 {
    let m = (q.pow(n_exp) + 1) / i128::from(s);
    q / d + (q * (q - 1) / d) * ceil_div_wide(i * (q + 1), m)
        - floor_div_wide(i * q * q * q, d * m)
        - 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::BetaTable;

    #[test]
    fn separable_presets() {
        let k1 = CurvePreset::separable(3, 2, 2).unwrap();
        assert_eq!(k1.profile, RamificationProfile::new(3, vec![1, 1, -2], 2));
        let k2 = CurvePreset::separable(5, 3, 2).unwrap();
        assert_eq!(
            k2.profile,
            RamificationProfile::new(5, vec![1, 1, 1, -3], 2)
        );
        let even = CurvePreset::separable(4, 2, 2).unwrap();
        assert_eq!(even.profile, RamificationProfile::new(4, vec![1, 1, -2], 2));

        assert!(CurvePreset::separable(3, 1, 2).is_err());
        assert!(CurvePreset::separable(3, 2, 3).is_err());
        assert!(CurvePreset::separable(1, 2, 2).is_err());
    }

    #[test]
    fn xabns_presets() {
        let x = CurvePreset::xabns(2, 2, 1, 3, 13, 2).unwrap();
        assert_eq!(x.profile.m, 5);
        let mut want = vec![1, 1];
        want.extend([5; 6]);
        want.push(-32);
        assert_eq!(x.profile.lambdas, want);
        let table = BetaTable::new(&x.profile).unwrap();
        assert_eq!(table.betas(), &[1, 1, 0, 0]);

        let big = CurvePreset::xabns(2, 2, 1, 3, 1, 2).unwrap();
        assert_eq!(big.profile.m, 65);
        assert!(big.profile.validate().is_ok());

        assert!(CurvePreset::xabns(2, 2, 2, 3, 1, 2).is_err(), "b < a");
        assert!(CurvePreset::xabns(2, 3, 2, 3, 1, 2).is_err(), "b | a");
        assert!(
            CurvePreset::xabns(2, 2, 1, 4, 1, 2).is_err(),
            "odd exponent"
        );
        assert!(CurvePreset::xabns(2, 2, 1, 3, 5, 2).is_err(), "s divides");
        assert!(CurvePreset::xabns(2, 2, 1, 3, 1, 3).is_err(), "n <= q/d");
        assert!(CurvePreset::xabns(4, 2, 1, 3, 1, 2).is_err(), "p prime");
    }

    #[test]
    fn yns_presets() {
        let y = CurvePreset::yns(2, 3, 3, 2).unwrap();
        assert_eq!(y.profile.m, 3);
        assert_eq!(y.profile.lambdas, vec![1, 1, 3, 3, -8]);
        let table = BetaTable::new(&y.profile).unwrap();
        assert_eq!(table.betas(), &[1, 0]);
        assert_eq!(CurvePreset::yns(2, 3, 1, 2).unwrap().profile.m, 9);
        assert!(CurvePreset::yns(6, 3, 1, 2).is_err());
        assert!(CurvePreset::yns(2, 3, 1, 3).is_err());
    }

    #[test]
    fn beelen_montanucci_presets() {
        let bm = CurvePreset::beelen_montanucci(2, 3, 2).unwrap();
        assert_eq!(bm.profile.m, 9);
        assert_eq!(bm.profile.lambdas, vec![1, 1, 1, 3, -6]);
        let table = BetaTable::new(&bm.profile).unwrap();
        assert_eq!(table.betas(), &[3, 2, 1, 2, 1, 0, 1, 0]);
        assert_eq!(bm.profile.field.unwrap().q, 64);
        assert!(CurvePreset::beelen_montanucci(2, 3, 3).is_ok());
        assert!(CurvePreset::beelen_montanucci(2, 3, 4).is_err());
        assert!(CurvePreset::beelen_montanucci(2, 1, 2).is_err());
    }

    #[test]
    fn closed_forms_match_generic_sum() {
        let presets = [
            CurvePreset::separable(7, 4, 3).unwrap(),
            CurvePreset::xabns(2, 2, 1, 3, 1, 2).unwrap(),
            CurvePreset::yns(3, 3, 7, 3).unwrap(),
            CurvePreset::beelen_montanucci(3, 3, 4).unwrap(),
        ];
        for preset in presets {
            let table = BetaTable::new(&preset.profile).unwrap();
            for i in 1..preset.profile.m {
                assert_eq!(
                    i128::from(table.beta(i).unwrap()),
                    preset.closed_form_beta(i),
                    "{:?} i={i}",
                    preset.kind
                );
            }
        }
    }

    #[test]
    fn preset_size_limit() {
        assert!(matches!(
            CurvePreset::separable(3, 2_000_000, 2),
            Err(Error::BadPreset(_))
        ));
    }
}
