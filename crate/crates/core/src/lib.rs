//! Generalized Weierstrass semigroups at totally ramified places of Kummer
//! extensions `y^m = f(x)` of the rational function field.
//!
//! Everything is computed from the ramification profile `(m; λ₁, …, λᵣ)`
//! alone, in exact integer arithmetic:
//!
//! - [`arith`]: floor/ceil division, the residue functions `t_k(i)` and `β(i)`,
//!   and the common solution `t` of `α_k + tλ_k ≡ 0 (mod m)`.
//! - [`profile`] and [`presets`]: the ramification profile, its validation,
//!   the genus and the curve families with closed-form `β`.
//! - [`membership`]: the ℓ-drop test, semigroup membership, gaps, pure gaps
//!   and the arithmetic maximality criterion.
//! - [`maximal`]: explicit enumeration of absolute and relative maximal
//!   elements, the finite minimal generating sets and their cardinalities.
//! - [`oracle`]: a definitional brute-force check of maximality built only on
//!   membership, used to cross-validate [`maximal`].

pub mod arith;
pub mod error;
pub mod maximal;
pub mod membership;
pub mod oracle;
pub mod presets;
pub mod profile;
pub mod window;

pub use arith::{ceil_div, floor_div, BetaTable, ResidueIndex};
pub use error::{Error, Result};
pub use maximal::{Branch, MaximalElement};
pub use membership::{Classification, KummerSemigroup, LatticePoint, MaximalKind, Verdict};
pub use oracle::{CrosscheckReport, NablaQuery, Oracle, DEFAULT_BUDGET};
pub use presets::{CurvePreset, PresetKind};
pub use profile::{FieldInfo, RamificationProfile, Severity, ValidationReport, Violation};
pub use window::Window;
