//! The group algebra `C W_n`, its Mantaci-Reutenauer subalgebra, and the
//! idempotent constructions living inside it.

pub mod constructors;
pub mod element;
pub mod mr_basis;

pub use constructors::{
    arrangements, composition_idempotent, coset_sum, cyclic_projector, eigen_element,
    in_young_subgroup, min_coset_reps, odd_cyclic_projector, ordered_partition_reps,
    partition_idempotent, reutenauer_idempotent, shape_sum, sign_idempotent,
    vazirani_idempotent, vazirani_idempotent_bounded, young_subgroup, young_subgroup_order,
    Sign, SET_PARTITION_BOUND,
};
pub use element::{AlgebraElement, Coefficient, CyclotomicElement, RationalElement};
pub use mr_basis::MrBasis;
