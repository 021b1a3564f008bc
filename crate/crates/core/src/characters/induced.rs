//! Characters of right ideals (Littlewood's formula) and induction of
//! characters from subgroups.

use crate::algebra::element::CyclotomicElement;
use crate::characters::class_function::ClassFunction;
use crate::error::{Error, Result};
use crate::group::{group_elements, standard_cycles, SignedPermutation};
use crate::scalars::{Cyclotomic, Rational};
use num_bigint::BigInt;
use std::collections::{BTreeMap, HashMap, HashSet};

/// The character of the right ideal `e C W_n` of an idempotent
/// `e = Σ γ_g g`, by Littlewood's formula
/// `χ_e(g) = |Z(g)| Σ_{g₁ ~ g} γ_{g₁}`.
///
/// Fails unless `e` is actually idempotent.
pub fn right_ideal_character(e: &CyclotomicElement) -> Result<ClassFunction> {
    if e.mul(e) != *e {
        return Err(Error::NotIdempotent);
    }
    let n = e.rank();
    let mut by_class: BTreeMap<crate::SignedPartition, Cyclotomic> = BTreeMap::new();
    for (w, c) in e.terms() {
        let t = w.cycle_type();
        match by_class.get_mut(&t) {
            Some(acc) => *acc = acc.add(c),
            None => {
                by_class.insert(t, c.clone());
            }
        }
    }
    ClassFunction::from_fn(n, |mu| match by_class.get(mu) {
        Some(sum) => {
            let z = crate::group::centralizer_order(mu);
            sum.scale(&Rational::from_integer(BigInt::from(z)))
        }
        None => Cyclotomic::zero(),
    })
}

/// Littlewood's formula inside a subgroup `H`: the character of `e C H`
/// as a function on the elements of `H` (classes taken within `H`).
pub fn subgroup_ideal_character(
    subgroup: &[SignedPermutation],
    e: &CyclotomicElement,
) -> Result<HashMap<SignedPermutation, Cyclotomic>> {
    if e.mul(e) != *e {
        return Err(Error::NotIdempotent);
    }
    let members: HashSet<&SignedPermutation> = subgroup.iter().collect();
    for (w, _) in e.terms() {
        if !members.contains(w) {
            return Err(Error::SubgroupNotClosed);
        }
    }
    let mut values = HashMap::with_capacity(subgroup.len());
    for h in subgroup {
        let mut class: HashSet<SignedPermutation> = HashSet::new();
        for x in subgroup {
            class.insert(h.conjugate_by(x));
        }
        let centralizer_size = subgroup.len() / class.len();
        let mut sum = Cyclotomic::zero();
        for h1 in &class {
            if let Some(c) = e.coeff_ref(h1) {
                sum = sum.add(c);
            }
        }
        values.insert(
            h.clone(),
            sum.scale(&Rational::from_integer(BigInt::from(centralizer_size as i64))),
        );
    }
    Ok(values)
}

/// Induce a character from a subgroup `H` of `W_n`:
/// `Ind(g) = (1/|H|) Σ_{x ∈ W_n, x⁻¹gx ∈ H} φ(x⁻¹gx)`.
///
/// `phi` must provide a value for every element of `H`; the subgroup is
/// checked for closure under multiplication.
pub fn induce(
    n: usize,
    subgroup: &[SignedPermutation],
    phi: &HashMap<SignedPermutation, Cyclotomic>,
) -> Result<ClassFunction> {
    let members: HashSet<&SignedPermutation> = subgroup.iter().collect();
    for a in subgroup {
        for b in subgroup {
            if !members.contains(&a.compose(b)) {
                return Err(Error::SubgroupNotClosed);
            }
        }
    }
    for h in subgroup {
        if !phi.contains_key(h) {
            return Err(Error::MissingCharacterValue);
        }
    }
    let elems = group_elements(n)?;
    let inv_h = Rational::new(BigInt::from(1), BigInt::from(subgroup.len() as i64));
    ClassFunction::from_fn(n, |mu| {
        let rep = standard_cycles(mu).representative;
        let mut acc = Cyclotomic::zero();
        for x in &elems {
            let conj = rep.conjugate_by(x);
            if members.contains(&conj) {
                acc = acc.add(&phi[&conj]);
            }
        }
        acc.scale(&inv_h)
    })
}
