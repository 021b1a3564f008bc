//! The homomorphism `θ_n` from the Mantaci-Reutenauer algebra to class
//! functions: `x_p ↦ Ind_{W_p}^{W_n}(1)`, extended linearly.

use crate::algebra::constructors::in_young_subgroup;
use crate::algebra::element::RationalElement;
use crate::algebra::mr_basis::MrBasis;
use crate::characters::class_function::ClassFunction;
use crate::compositions::SignedComposition;
use crate::error::Result;
use crate::group::{group_elements, standard_cycles, SignedPermutation};
use crate::scalars::{Cyclotomic, Rational};
use num_bigint::BigInt;
use std::collections::HashMap;

/// `θ_n` with its basis data: expressing elements in the `{x_p}` basis
/// and the permutation characters `Ind_{W_p}^{W_n}(1)` (cached per
/// rearrangement class, since conjugate Young subgroups induce equal
/// characters).
pub struct Theta {
    basis: MrBasis,
    elems: Vec<SignedPermutation>,
    permutation_characters: HashMap<SignedComposition, ClassFunction>,
}

impl Theta {
    pub fn new(n: usize) -> Result<Theta> {
        let basis = MrBasis::new(n)?;
        let elems = group_elements(n)?;
        let mut permutation_characters: HashMap<SignedComposition, ClassFunction> =
            HashMap::new();
        for p in basis.compositions() {
            let key = p.rearrange().as_composition().clone();
            if let std::collections::hash_map::Entry::Vacant(slot) =
                permutation_characters.entry(key)
            {
                let chi = permutation_character_direct(n, slot.key(), &elems)?;
                slot.insert(chi);
            }
        }
        Ok(Theta {
            basis,
            elems,
            permutation_characters,
        })
    }

    pub fn rank(&self) -> usize {
        self.basis.rank()
    }

    pub fn basis(&self) -> &MrBasis {
        &self.basis
    }

    /// `θ_n(x_p) = Ind_{W_p}^{W_n}(1)`.
    pub fn permutation_character(&self, p: &SignedComposition) -> &ClassFunction {
        &self.permutation_characters[p.rearrange().as_composition()]
    }

    /// Apply `θ_n` to an element of the Mantaci-Reutenauer algebra.
    pub fn apply(&self, u: &RationalElement) -> Result<ClassFunction> {
        let coords = self.basis.express(u)?;
        let mut acc = ClassFunction::zero(self.rank())?;
        for (p, a) in &coords {
            let chi = self.permutation_character(p);
            acc = acc.add(&chi.scale(&Cyclotomic::from_rational(a.clone())));
        }
        Ok(acc)
    }

    /// The matrix of `θ_n(x_p)` values in the class-indicator basis; used
    /// for the surjectivity rank check.
    pub fn image_matrix(&self) -> Result<Vec<Vec<Rational>>> {
        let partitions = crate::compositions::signed_partitions(self.rank())?;
        let mut rows = Vec::new();
        for p in self.basis.compositions() {
            let chi = self.permutation_character(p);
            let row: Vec<Rational> = partitions
                .iter()
                .map(|mu| {
                    chi.value(mu)
                        .as_rational()
                        .expect("permutation characters are rational-valued")
                })
                .collect();
            rows.push(row);
        }
        Ok(rows)
    }

    pub fn group(&self) -> &[SignedPermutation] {
        &self.elems
    }
}

fn permutation_character_direct(
    n: usize,
    p: &SignedComposition,
    elems: &[SignedPermutation],
) -> Result<ClassFunction> {
    let subgroup_order = crate::algebra::constructors::young_subgroup_order(p);
    ClassFunction::from_fn(n, |mu| {
        let rep = standard_cycles(mu).representative;
        let count = elems
            .iter()
            .filter(|x| in_young_subgroup(&rep.conjugate_by(x), p))
            .count();
        Cyclotomic::from_rational(Rational::new(
            BigInt::from(count),
            BigInt::from(subgroup_order),
        ))
    })
}

/// Exact rank of a rational matrix by Gaussian elimination.
pub fn rational_matrix_rank(mut rows: Vec<Vec<Rational>>) -> usize {
    use num_traits::Zero;
    let mut rank = 0usize;
    let cols = rows.first().map(|r| r.len()).unwrap_or(0);
    let mut col = 0usize;
    while col < cols && rank < rows.len() {
        if let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) {
            rows.swap(rank, pivot);
            let pivot_val = rows[rank][col].clone();
            for r in (rank + 1)..rows.len() {
                if rows[r][col].is_zero() {
                    continue;
                }
                let factor = &rows[r][col] / &pivot_val;
                let (pivot_row, rest) = rows.split_at_mut(rank + 1);
                let pivot_row = &pivot_row[rank];
                let target = &mut rest[r - rank - 1];
                for (t, p) in target[col..cols].iter_mut().zip(&pivot_row[col..cols]) {
                    let sub = p * &factor;
                    *t -= sub;
                }
            }
            rank += 1;
        }
        col += 1;
    }
    rank
}
