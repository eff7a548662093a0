//! Fixtures shared by the criterion benchmarks.

use kwsg_core::{CurvePreset, KummerSemigroup, RamificationProfile};

pub fn semigroup(m: i64, lambdas: &[i64], n: usize) -> KummerSemigroup {
    KummerSemigroup::new(RamificationProfile::new(m, lambdas.to_vec(), n)).expect("valid profile")
}

pub fn preset(p: kwsg_core::Result<CurvePreset>) -> KummerSemigroup {
    KummerSemigroup::new(p.expect("valid preset").profile).expect("valid profile")
}

/// Small and mid-sized profiles: two toy curves and two preset families.
pub fn fixtures() -> Vec<(&'static str, KummerSemigroup)> {
    vec![
        ("K2", semigroup(5, &[1, 1, 1, -3], 2)),
        ("K2n3", semigroup(5, &[1, 1, 1, -3], 3)),
        ("BM-2-3", preset(CurvePreset::beelen_montanucci(2, 3, 2))),
        ("Y-3-3-7", preset(CurvePreset::yns(3, 3, 7, 2))),
    ]
}
