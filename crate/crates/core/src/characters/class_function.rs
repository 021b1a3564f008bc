//! Class functions on `W_n`, stored as one exact value per conjugacy
//! class (signed partition label).

use crate::compositions::{signed_partitions, SignedPartition};
use crate::error::Result;
use crate::group::{centralizer_order, group_order, standard_cycles, SignedPermutation};
use crate::scalars::{Cyclotomic, Rational};
use num_bigint::BigInt;
use std::collections::BTreeMap;

/// A function on `W_n` constant on conjugacy classes, with pointwise
/// algebra structure; always holds exactly one value per signed partition
/// of `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassFunction {
    n: usize,
    values: BTreeMap<SignedPartition, Cyclotomic>,
}

impl ClassFunction {
    pub fn from_fn<F: FnMut(&SignedPartition) -> Cyclotomic>(
        n: usize,
        mut f: F,
    ) -> Result<ClassFunction> {
        let mut values = BTreeMap::new();
        for lambda in signed_partitions(n)? {
            let v = f(&lambda);
            values.insert(lambda, v);
        }
        Ok(ClassFunction { n, values })
    }

    pub fn zero(n: usize) -> Result<ClassFunction> {
        ClassFunction::from_fn(n, |_| Cyclotomic::zero())
    }

    /// Indicator `u_λ` of the class with cycle type `λ`.
    pub fn class_indicator(lambda: &SignedPartition) -> Result<ClassFunction> {
        ClassFunction::from_fn(lambda.weight(), |mu| {
            if mu == lambda {
                Cyclotomic::one()
            } else {
                Cyclotomic::zero()
            }
        })
    }

    pub fn trivial(n: usize) -> Result<ClassFunction> {
        ClassFunction::from_fn(n, |_| Cyclotomic::one())
    }

    /// The regular character: `|W_n|` at the identity class, zero
    /// elsewhere.
    pub fn regular(n: usize) -> Result<ClassFunction> {
        let identity_type = SignedPermutation::identity(n).cycle_type();
        ClassFunction::from_fn(n, |mu| {
            if *mu == identity_type {
                Cyclotomic::from_integer(group_order(n) as i64)
            } else {
                Cyclotomic::zero()
            }
        })
    }

    /// The sign character `(-1)^{length}`.
    pub fn sign(n: usize) -> Result<ClassFunction> {
        ClassFunction::from_fn(n, |mu| {
            let rep = standard_cycles(mu).representative;
            Cyclotomic::from_integer(if rep.length() % 2 == 0 { 1 } else { -1 })
        })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn value(&self, lambda: &SignedPartition) -> &Cyclotomic {
        &self.values[lambda]
    }

    /// Evaluate at a group element through its cycle type.
    pub fn evaluate(&self, w: &SignedPermutation) -> &Cyclotomic {
        self.value(&w.cycle_type())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&SignedPartition, &Cyclotomic)> {
        self.values.iter()
    }

    pub fn add(&self, other: &ClassFunction) -> ClassFunction {
        assert_eq!(self.n, other.n);
        ClassFunction {
            n: self.n,
            values: self
                .values
                .iter()
                .map(|(l, v)| (l.clone(), v.add(&other.values[l])))
                .collect(),
        }
    }

    pub fn sub(&self, other: &ClassFunction) -> ClassFunction {
        assert_eq!(self.n, other.n);
        ClassFunction {
            n: self.n,
            values: self
                .values
                .iter()
                .map(|(l, v)| (l.clone(), v.sub(&other.values[l])))
                .collect(),
        }
    }

    /// Pointwise product.
    pub fn mul(&self, other: &ClassFunction) -> ClassFunction {
        assert_eq!(self.n, other.n);
        ClassFunction {
            n: self.n,
            values: self
                .values
                .iter()
                .map(|(l, v)| (l.clone(), v.mul(&other.values[l])))
                .collect(),
        }
    }

    pub fn scale(&self, s: &Cyclotomic) -> ClassFunction {
        ClassFunction {
            n: self.n,
            values: self
                .values
                .iter()
                .map(|(l, v)| (l.clone(), v.mul(s)))
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.values.values().all(|v| v.is_zero())
    }

    /// Hermitian inner product `(1/|W_n|) Σ_w χ(w) conj(ψ(w))`, computed
    /// classwise as `Σ_μ χ(μ) conj(ψ(μ)) / |Z(w_μ)|`.
    pub fn inner_product(&self, other: &ClassFunction) -> Cyclotomic {
        assert_eq!(self.n, other.n);
        let mut acc = Cyclotomic::zero();
        for (lambda, v) in &self.values {
            let prod = v.mul(&other.values[lambda].conjugate());
            if prod.is_zero() {
                continue;
            }
            let inv_z = Rational::new(
                BigInt::from(1),
                BigInt::from(centralizer_order(lambda)),
            );
            acc = acc.add(&prod.scale(&inv_z));
        }
        acc
    }

    /// `{"n": n, "values": {"<partition label>": <scalar>}}`; labels are
    /// comma-joined parts like `"3,3,1,-2,-1,-1"`.
    pub fn to_json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        for (lambda, v) in &self.values {
            map.insert(lambda.to_string(), v.to_json());
        }
        serde_json::json!({ "n": self.n, "values": serde_json::Value::Object(map) })
    }
}
