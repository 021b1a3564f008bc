//! Exact coordinates in the `{x_p}` basis of the Mantaci-Reutenauer
//! algebra.
//!
//! An element of `C W_n` lies in the span of the `x_p` exactly when its
//! coefficient function is constant on descent-shape classes
//! `{w : ds(w) = q}`; on those classes the `x_p` become an invertible
//! square 0/1 matrix indexed by signed compositions, which is inverted
//! once per rank and reused for every expression.

use crate::algebra::constructors::coset_sum;
use crate::algebra::element::RationalElement;
use crate::compositions::{signed_compositions, SignedComposition};
use crate::error::{Error, Result};
use crate::group::{group_elements, SignedPermutation};
use crate::scalars::Rational;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, HashMap};

pub struct MrBasis {
    n: usize,
    comps: Vec<SignedComposition>,
    /// descent-shape class index of every group element
    class_of: HashMap<SignedPermutation, usize>,
    class_size: Vec<usize>,
    coset_sums: Vec<RationalElement>,
    /// inverse of the matrix `M[class][comp] = x_comp on class`
    inverse: Vec<Vec<Rational>>,
}

impl MrBasis {
    pub fn new(n: usize) -> Result<Self> {
        let comps = signed_compositions(n)?;
        let comp_index: HashMap<&SignedComposition, usize> =
            comps.iter().enumerate().map(|(i, c)| (c, i)).collect();
        let elems = group_elements(n)?;
        let mut class_of = HashMap::with_capacity(elems.len());
        let mut class_size = vec![0usize; comps.len()];
        for w in &elems {
            let shape = w.descent_shape();
            let idx = *comp_index
                .get(&shape)
                .expect("descent shapes are signed compositions");
            class_size[idx] += 1;
            class_of.insert(w.clone(), idx);
        }
        assert!(
            class_size.iter().all(|&s| s > 0),
            "every signed composition must occur as a descent shape"
        );

        let coset_sums: Vec<RationalElement> = comps
            .iter()
            .map(coset_sum)
            .collect::<Result<_>>()?;

        // matrix rows = descent classes, columns = compositions; each
        // x_p must be constant on every class
        let k = comps.len();
        let mut matrix = vec![vec![Rational::zero(); k]; k];
        for (col, x) in coset_sums.iter().enumerate() {
            let mut seen = vec![0usize; k];
            for (w, c) in x.terms() {
                let row = class_of[w];
                assert!(c.is_one(), "coset sums are 0/1 vectors");
                seen[row] += 1;
            }
            for (row, &count) in seen.iter().enumerate() {
                if count == class_size[row] {
                    matrix[row][col] = Rational::one();
                } else {
                    assert!(
                        count == 0,
                        "x_{} is not constant on the descent class of {}",
                        comps[col],
                        comps[row]
                    );
                }
            }
        }

        let inverse = invert(matrix).expect("the x_p are linearly independent");
        Ok(MrBasis {
            n,
            comps,
            class_of,
            class_size,
            coset_sums,
            inverse,
        })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// The signed compositions of `n` in the fixed enumeration order.
    pub fn compositions(&self) -> &[SignedComposition] {
        &self.comps
    }

    /// The basis element `x_p`.
    pub fn coset_sum(&self, p: &SignedComposition) -> Option<&RationalElement> {
        let idx = self.comps.iter().position(|c| c == p)?;
        Some(&self.coset_sums[idx])
    }

    pub fn coset_sums(&self) -> &[RationalElement] {
        &self.coset_sums
    }

    /// Express `u = Σ a_p x_p`, returning the nonzero coordinates.
    ///
    /// Fails with [`Error::NotInSubalgebra`] when the coefficients of `u`
    /// are not constant on some descent-shape class.
    pub fn express(
        &self,
        u: &RationalElement,
    ) -> Result<BTreeMap<SignedComposition, Rational>> {
        assert_eq!(u.rank(), self.n);
        let k = self.comps.len();
        let mut value: Vec<Option<Rational>> = vec![None; k];
        let mut count = vec![0usize; k];
        for (w, c) in u.terms() {
            let row = self.class_of[w];
            match &value[row] {
                None => value[row] = Some(c.clone()),
                Some(prev) if prev == c => {}
                Some(prev) => {
                    return Err(Error::NotInSubalgebra {
                        reason: format!(
                            "coefficients {} and {} differ on the descent class of {}",
                            crate::scalars::rational_string(prev),
                            crate::scalars::rational_string(c),
                            self.comps[row]
                        ),
                    });
                }
            }
            count[row] += 1;
        }
        let mut gamma = Vec::with_capacity(k);
        for row in 0..k {
            match (&value[row], count[row]) {
                (None, _) => gamma.push(Rational::zero()),
                (Some(v), c) if c == self.class_size[row] => gamma.push(v.clone()),
                (Some(_), _) => {
                    return Err(Error::NotInSubalgebra {
                        reason: format!(
                            "support covers only part of the descent class of {}",
                            self.comps[row]
                        ),
                    });
                }
            }
        }
        let mut out = BTreeMap::new();
        for (i, p) in self.comps.iter().enumerate() {
            let mut acc = Rational::zero();
            for (j, g) in gamma.iter().enumerate() {
                if !g.is_zero() && !self.inverse[i][j].is_zero() {
                    acc += &self.inverse[i][j] * g;
                }
            }
            if !acc.is_zero() {
                out.insert(p.clone(), acc);
            }
        }
        Ok(out)
    }

    /// Rebuild `Σ a_p x_p` from coordinates.
    pub fn combine(&self, coords: &BTreeMap<SignedComposition, Rational>) -> RationalElement {
        let mut acc = RationalElement::zero(self.n);
        for (p, a) in coords {
            let x = self.coset_sum(p).expect("coordinate key is a composition of n");
            acc = acc.add(&x.scale(a));
        }
        acc
    }
}

/// Exact Gauss-Jordan inversion; `None` when singular.
fn invert(mut m: Vec<Vec<Rational>>) -> Option<Vec<Vec<Rational>>> {
    let k = m.len();
    let mut inv: Vec<Vec<Rational>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                .collect()
        })
        .collect();
    for col in 0..k {
        let pivot = (col..k).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        inv.swap(col, pivot);
        let scale = m[col][col].clone();
        for x in m[col].iter_mut() {
            *x /= &scale;
        }
        for x in inv[col].iter_mut() {
            *x /= &scale;
        }
        for row in 0..k {
            if row == col || m[row][col].is_zero() {
                continue;
            }
            let factor = m[row][col].clone();
            for j in 0..k {
                let sub = &m[col][j] * &factor;
                m[row][j] -= sub;
                let sub = &inv[col][j] * &factor;
                inv[row][j] -= sub;
            }
        }
    }
    Some(inv)
}
