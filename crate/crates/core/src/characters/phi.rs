//! The linear character `φ_λ` of the centralizer `Z_{W_n}(w_λ)`, read off
//! from the right scalar action on the eigen-element `ẽ_λ` and
//! cross-checked against its closed form on generators
//! (`φ(c_i) = ω_{|c_i|}`, `φ(d_i) = ω_{|d_i|}`, `φ(w_{0,Λ_i}) = φ(y_i) = 1`).

use crate::algebra::constructors::eigen_element;
use crate::compositions::SignedPartition;
use crate::error::{Error, Result};
use crate::group::{
    centralizer_elements, centralizer_generators, CentralizerGenerator, SignedPermutation,
};
use crate::scalars::{root_of_unity, Cyclotomic};
use num_integer::Integer;
use std::collections::HashMap;

/// The character `φ_λ`, tabulated on every element of the centralizer.
#[derive(Debug, Clone)]
pub struct CentralizerCharacter {
    lambda: SignedPartition,
    subgroup: Vec<SignedPermutation>,
    values: HashMap<SignedPermutation, Cyclotomic>,
    generator_values: Vec<(CentralizerGenerator, SignedPermutation, Cyclotomic)>,
}

impl CentralizerCharacter {
    pub fn lambda(&self) -> &SignedPartition {
        &self.lambda
    }

    /// All centralizer elements (the domain of the character).
    pub fn subgroup(&self) -> &[SignedPermutation] {
        &self.subgroup
    }

    pub fn values(&self) -> &HashMap<SignedPermutation, Cyclotomic> {
        &self.values
    }

    pub fn value(&self, z: &SignedPermutation) -> Option<&Cyclotomic> {
        self.values.get(z)
    }

    /// Values on the standard generators together with their labels and
    /// element orders.
    pub fn generator_values(
        &self,
    ) -> &[(CentralizerGenerator, SignedPermutation, Cyclotomic)] {
        &self.generator_values
    }
}

/// The closed-form value of `φ_λ` on a labelled generator.
pub fn generator_closed_form(lambda: &SignedPartition, label: CentralizerGenerator) -> Cyclotomic {
    match label {
        CentralizerGenerator::BlockCycle(i) => {
            root_of_unity(lambda.parts()[i - 1].unsigned_abs(), 1)
        }
        CentralizerGenerator::NegativeBlockCycle(i) => {
            root_of_unity(2 * lambda.parts()[i - 1].unsigned_abs(), 1)
        }
        CentralizerGenerator::BlockFlip(_) | CentralizerGenerator::BlockSwap(_) => {
            Cyclotomic::one()
        }
    }
}

/// Compute `φ_λ` by letting every centralizer element act on `ẽ_λ` from
/// the right and reading off the scalar.
///
/// Errors with [`Error::ScalarActionFailure`] if some element does not
/// act as a root-of-unity scalar, or if a generator's computed scalar
/// disagrees with the closed form — either would falsify the theorem
/// this library exists to check.
pub fn centralizer_character(lambda: &SignedPartition) -> Result<CentralizerCharacter> {
    let e = eigen_element(lambda)?;
    if e.is_zero() {
        return Err(Error::ZeroEigenElement);
    }
    let subgroup = centralizer_elements(lambda)?;
    // any scalar must be a power of ω_N with N = 2·lcm of the part sizes
    let conductor = 2 * lambda
        .parts()
        .iter()
        .map(|p| p.unsigned_abs())
        .fold(1u64, |a, b| a.lcm(&b));
    let candidates: Vec<Cyclotomic> = (0..conductor)
        .map(|j| root_of_unity(conductor, j as i64))
        .collect();
    let (anchor, anchor_coeff) = e.terms().next().expect("nonzero element");
    let anchor = anchor.clone();
    let anchor_coeff = anchor_coeff.clone();

    let mut values = HashMap::with_capacity(subgroup.len());
    for z in &subgroup {
        let moved = e.right_mul_perm(z);
        let target = moved.coeff(&anchor);
        let scalar = candidates
            .iter()
            .find(|cand| cand.mul(&anchor_coeff) == target)
            .ok_or(Error::ScalarActionFailure)?;
        if moved != e.scale(scalar) {
            return Err(Error::ScalarActionFailure);
        }
        values.insert(z.clone(), scalar.clone());
    }

    let mut generator_values = Vec::new();
    for (label, g) in centralizer_generators(lambda) {
        let computed = values
            .get(&g)
            .ok_or(Error::ScalarActionFailure)?
            .clone();
        if computed != generator_closed_form(lambda, label) {
            return Err(Error::ScalarActionFailure);
        }
        generator_values.push((label, g, computed));
    }

    Ok(CentralizerCharacter {
        lambda: lambda.clone(),
        subgroup,
        values,
        generator_values,
    })
}
