//! Class functions on `W_n`, characters of right ideals, induction, the
//! centralizer characters `φ_λ`, the homomorphism `θ_n`, and the
//! verification suite.

pub mod class_function;
pub mod induced;
pub mod phi;
pub mod theta;
pub mod verify;

pub use class_function::ClassFunction;
pub use induced::{induce, right_ideal_character, subgroup_ideal_character};
pub use phi::{centralizer_character, generator_closed_form, CentralizerCharacter};
pub use theta::Theta;
pub use verify::{
    plan_units, run_unit, verify_suite, CheckKind, CheckResult, CheckUnit, Report, VerifyContext,
};
