#![allow(dead_code)]

use kwsg_core::{CurvePreset, KummerSemigroup, RamificationProfile};

pub fn semigroup(m: i64, lambdas: &[i64], n: usize) -> KummerSemigroup {
    KummerSemigroup::new(RamificationProfile::new(m, lambdas.to_vec(), n)).unwrap()
}

pub fn k1() -> KummerSemigroup {
    semigroup(3, &[1, 1, -2], 2)
}

pub fn k2(n: usize) -> KummerSemigroup {
    semigroup(5, &[1, 1, 1, -3], n)
}

pub fn preset(p: CurvePreset) -> KummerSemigroup {
    KummerSemigroup::new(p.profile).unwrap()
}

/// The fixtures every invariant is checked against.
pub fn fixtures() -> Vec<(&'static str, KummerSemigroup)> {
    vec![
        ("K1", k1()),
        ("K2", k2(2)),
        ("K2n3", k2(3)),
        ("sep-4-2", preset(CurvePreset::separable(4, 2, 2).unwrap())),
        (
            "X-2-2-1-3-13",
            preset(CurvePreset::xabns(2, 2, 1, 3, 13, 2).unwrap()),
        ),
        ("Y-2-3-3", preset(CurvePreset::yns(2, 3, 3, 2).unwrap())),
        (
            "BM-2-3",
            preset(CurvePreset::beelen_montanucci(2, 3, 2).unwrap()),
        ),
        (
            "BM-2-3-n3",
            preset(CurvePreset::beelen_montanucci(2, 3, 3).unwrap()),
        ),
    ]
}
