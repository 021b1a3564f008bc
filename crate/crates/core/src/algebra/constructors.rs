//! The distinguished elements of the Mantaci-Reutenauer algebra: coset
//! sums `x_p`, descent-shape sums `x_p^v`, the Reutenauer idempotent,
//! sign idempotents, cyclic projectors, the quasi-idempotents `e_p`, the
//! primitive idempotents `E_λ`, the eigen-elements `ẽ_λ`, and the
//! ordered-set-partition construction that rebuilds `e_p` independently.

use crate::algebra::element::{CyclotomicElement, RationalElement};
use crate::compositions::{factorial, SignedComposition, SignedPartition};
use crate::error::{Error, Result};
use crate::group::{group_elements, standard_cycles, SignedPermutation};
use crate::scalars::{root_of_unity, Rational};
use num_bigint::BigInt;

/// Sign attached to a block factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn of_part(part: i64) -> Sign {
        if part > 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

fn block_points(p: &SignedComposition, i: usize) -> Vec<usize> {
    let sums = p.prefix_sums();
    (sums[i] + 1..=sums[i + 1]).collect()
}

/// All permutations of the block `points` fixing the complement
/// pointwise: the factor `W_P` with signs, or `S_P` without.
fn perms_on(n: usize, points: &[usize], with_signs: bool) -> Vec<SignedPermutation> {
    let mut out = Vec::new();
    let mut assignment = vec![0i32; points.len()];
    let mut used = vec![false; points.len()];
    fn rec(
        n: usize,
        points: &[usize],
        pos: usize,
        assignment: &mut Vec<i32>,
        used: &mut Vec<bool>,
        out: &mut Vec<SignedPermutation>,
        with_signs: bool,
    ) {
        if pos == points.len() {
            let mut image: Vec<i32> = (1..=n as i32).collect();
            for (k, &pt) in points.iter().enumerate() {
                image[pt - 1] = assignment[k];
            }
            out.push(SignedPermutation::from_image(image).expect("valid block image"));
            return;
        }
        for (k, &target) in points.iter().enumerate() {
            if used[k] {
                continue;
            }
            used[k] = true;
            let signs: &[i32] = if with_signs { &[1, -1] } else { &[1] };
            for &s in signs {
                assignment[pos] = s * target as i32;
                rec(n, points, pos + 1, assignment, used, out, with_signs);
            }
            used[k] = false;
        }
    }
    rec(n, points, 0, &mut assignment, &mut used, &mut out, with_signs);
    out
}

fn signed_perms_on(n: usize, points: &[usize]) -> Vec<SignedPermutation> {
    perms_on(n, points, true)
}

fn positive_perms_on(n: usize, points: &[usize]) -> Vec<SignedPermutation> {
    perms_on(n, points, false)
}

/// The signed Young subgroup `W_p`: all `w` with `w(P_i) ⊆ ±P_i`, and
/// `w(P_i) ⊆ P_i` whenever `p_i < 0`.
pub fn young_subgroup(p: &SignedComposition) -> Vec<SignedPermutation> {
    let n = p.weight();
    let mut elems = vec![SignedPermutation::identity(n)];
    for (i, &part) in p.parts().iter().enumerate() {
        let points = block_points(p, i);
        let block = if part > 0 {
            signed_perms_on(n, &points)
        } else {
            positive_perms_on(n, &points)
        };
        let mut next = Vec::with_capacity(elems.len() * block.len());
        for w in &elems {
            for b in &block {
                next.push(w.compose(b));
            }
        }
        elems = next;
    }
    elems
}

/// `|W_p| = Π_{p_i>0} 2^{p_i} p_i! · Π_{p_i<0} |p_i|!`.
pub fn young_subgroup_order(p: &SignedComposition) -> u64 {
    p.parts()
        .iter()
        .map(|&part| {
            let s = part.unsigned_abs();
            if part > 0 {
                2u64.pow(s as u32) * factorial(s)
            } else {
                factorial(s)
            }
        })
        .product()
}

/// Membership test for `W_p`, usable on arbitrary elements of `W_n`.
pub fn in_young_subgroup(w: &SignedPermutation, p: &SignedComposition) -> bool {
    let sums = p.prefix_sums();
    for (i, &part) in p.parts().iter().enumerate() {
        for a in sums[i] + 1..=sums[i + 1] {
            let v = w.apply(a as i32);
            let abs = v.unsigned_abs() as usize;
            if abs <= sums[i] || abs > sums[i + 1] {
                return false;
            }
            if part < 0 && v < 0 {
                return false;
            }
        }
    }
    true
}

/// The minimal-length representatives of the left cosets `wW_p`, sorted
/// in canonical order.
///
/// For all-positive `p` the membership criterion (`w(j) > 0` everywhere
/// and `w` increasing on each block) is used; for general signed `p` the
/// cosets are enumerated and minimized directly. Both paths are
/// cross-checked in the test suite.
///
/// Panics if some coset fails to have a unique minimal-length element;
/// that would contradict the general theory and must surface loudly.
pub fn min_coset_reps(p: &SignedComposition) -> Result<Vec<SignedPermutation>> {
    let n = p.weight();
    if p.is_positive() {
        let sums = p.prefix_sums();
        let reps = group_elements(n)?
            .into_iter()
            .filter(|w| {
                w.image().iter().all(|&v| v > 0)
                    && (0..p.len()).all(|i| {
                        (sums[i] + 1..sums[i + 1]).all(|a| w.image()[a - 1] < w.image()[a])
                    })
            })
            .collect();
        return Ok(reps);
    }
    min_coset_reps_general(p)
}

/// Coset enumeration without the positivity shortcut.
pub(crate) fn min_coset_reps_general(p: &SignedComposition) -> Result<Vec<SignedPermutation>> {
    let n = p.weight();
    let subgroup = young_subgroup(p);
    let elems = group_elements(n)?;
    let mut visited = std::collections::HashSet::with_capacity(elems.len());
    let mut reps = Vec::new();
    for w in &elems {
        if visited.contains(w) {
            continue;
        }
        let coset: Vec<SignedPermutation> = subgroup.iter().map(|h| w.compose(h)).collect();
        let min_len = coset.iter().map(|u| u.length()).min().expect("nonempty");
        let minimal: Vec<&SignedPermutation> =
            coset.iter().filter(|u| u.length() == min_len).collect();
        assert!(
            minimal.len() == 1,
            "coset of {w} modulo W_{p} has {} minimal-length elements; \
             minimal-coset-representative uniqueness failed",
            minimal.len()
        );
        reps.push(minimal[0].clone());
        visited.extend(coset);
    }
    reps.sort_unstable();
    Ok(reps)
}

/// `x_p`: the sum of the minimal coset representatives of `W_p`.
pub fn coset_sum(p: &SignedComposition) -> Result<RationalElement> {
    Ok(RationalElement::group_sum(
        p.weight(),
        min_coset_reps(p)?,
    ))
}

/// `x_p^v`: the sum of all `w` whose descent shape coarsens to `p`, i.e.
/// `ds(w) >= p` in the signed refinement order.
pub fn shape_sum(p: &SignedComposition) -> Result<RationalElement> {
    let n = p.weight();
    Ok(RationalElement::group_sum(
        n,
        group_elements(n)?
            .into_iter()
            .filter(|w| p.refines(&w.descent_shape())),
    ))
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// The Reutenauer idempotent `r_P` on a block of consecutive points:
/// `Σ_{A ⊆ [m-1]} ((-1)^{|A|} / (|A|+1)) D_{⊆A}`, supported on `S_P`.
pub fn reutenauer_idempotent(n: usize, block: std::ops::RangeInclusive<usize>) -> RationalElement {
    let points: Vec<usize> = block.collect();
    let m = points.len();
    assert!(m >= 1 && *points.last().unwrap() <= n);
    // the coefficient of w depends only on d = |D(w)|:
    //   Σ_{A ⊇ D(w)} (-1)^{|A|}/(|A|+1)
    //   = Σ_j C(m-1-d, j) (-1)^{d+j}/(d+j+1)
    let coeff_by_descents: Vec<Rational> = (0..m)
        .map(|d| {
            let mut acc = Rational::from_integer(BigInt::from(0));
            for j in 0..=(m - 1 - d) {
                let c = binomial((m - 1 - d) as u64, j as u64);
                let sign = if (d + j) % 2 == 0 { 1 } else { -1 };
                acc += Rational::new(
                    BigInt::from(sign * c as i64),
                    BigInt::from((d + j + 1) as i64),
                );
            }
            acc
        })
        .collect();
    RationalElement::from_terms(
        n,
        positive_perms_on(n, &points).into_iter().map(|w| {
            let d = w
                .classical_descents(&points)
                .expect("block permutations are positive on their block")
                .len();
            let c = coeff_by_descents[d].clone();
            (w, c)
        }),
    )
}

/// The sign idempotent `ε_P^± = (1/2)(δ_id ± δ_{w_{0,P}})`.
pub fn sign_idempotent(
    n: usize,
    block: std::ops::RangeInclusive<usize>,
    sign: Sign,
) -> RationalElement {
    let w0 = SignedPermutation::sign_change_on(n, block);
    let half = crate::scalars::ratio(1, 2);
    let signed_half = match sign {
        Sign::Plus => half.clone(),
        Sign::Minus => -half.clone(),
    };
    RationalElement::from_terms(
        n,
        [
            (SignedPermutation::identity(n), half),
            (w0, signed_half),
        ],
    )
}

/// The projector `ζ_g = (1/m) Σ_{j=1}^m ω_m^{-j} g^j` onto the
/// `ω_m`-eigenspace of right multiplication by `g` (`m` is the order of
/// `g`).
pub fn cyclic_projector(g: &SignedPermutation) -> CyclotomicElement {
    let m = g.order() as u64;
    let inv_m = Rational::new(BigInt::from(1), BigInt::from(m));
    let mut power = SignedPermutation::identity(g.rank());
    let mut terms = Vec::with_capacity(m as usize);
    for j in 1..=m {
        power = g.compose(&power);
        terms.push((
            power.clone(),
            root_of_unity(m, -(j as i64)).scale(&inv_m),
        ));
    }
    CyclotomicElement::from_terms(g.rank(), terms)
}

/// The shifted projector `ζ̃_g = (1/m) Σ_j (ω_m^{(m+1)/2})^{-j} g^j`,
/// defined for elements of odd order.
pub fn odd_cyclic_projector(g: &SignedPermutation) -> Result<CyclotomicElement> {
    let m = g.order() as u64;
    if m % 2 == 0 {
        return Err(Error::EvenOrder { order: m as usize });
    }
    let shift = ((m + 1) / 2) as i64;
    let inv_m = Rational::new(BigInt::from(1), BigInt::from(m));
    let mut power = SignedPermutation::identity(g.rank());
    let mut terms = Vec::with_capacity(m as usize);
    for j in 1..=m {
        power = g.compose(&power);
        terms.push((
            power.clone(),
            root_of_unity(m, -(j as i64) * shift).scale(&inv_m),
        ));
    }
    Ok(CyclotomicElement::from_terms(g.rank(), terms))
}

/// The product of block factors `ε_{P_1}^{ξ_1} r_{P_1} ⋯ ε_{P_k}^{ξ_k} r_{P_k}`.
fn block_factor_product(p: &SignedComposition) -> RationalElement {
    let n = p.weight();
    let sums = p.prefix_sums();
    let mut acc = RationalElement::one(n);
    for (i, &part) in p.parts().iter().enumerate() {
        let range = sums[i] + 1..=sums[i + 1];
        let eps = sign_idempotent(n, range.clone(), Sign::of_part(part));
        let r = reutenauer_idempotent(n, range);
        acc = acc.mul(&eps).mul(&r);
    }
    acc
}

/// The quasi-idempotent `e_p = x_{|p|} ε_{P_1}^{ξ_1} r_{P_1} ⋯
/// ε_{P_k}^{ξ_k} r_{P_k}`, satisfying `e_p² = |Stab(p)| e_p`.
pub fn composition_idempotent(p: &SignedComposition) -> Result<RationalElement> {
    let x = coset_sum(&p.abs())?;
    Ok(x.mul(&block_factor_product(p)))
}

/// All distinct arrangements of the parts of `λ` (the signed compositions
/// rearranging to `λ`), in lexicographic order of part sequences.
pub fn arrangements(lambda: &SignedPartition) -> Vec<SignedComposition> {
    let mut distinct: Vec<i64> = lambda.parts().to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    let mut counts: Vec<(i64, usize)> = distinct
        .iter()
        .map(|&v| (v, lambda.parts().iter().filter(|&&p| p == v).count()))
        .collect();
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(lambda.len());
    fn rec(
        counts: &mut Vec<(i64, usize)>,
        prefix: &mut Vec<i64>,
        total: usize,
        out: &mut Vec<SignedComposition>,
    ) {
        if prefix.len() == total {
            out.push(SignedComposition::new(prefix.clone()).expect("nonzero parts"));
            return;
        }
        for i in 0..counts.len() {
            if counts[i].1 == 0 {
                continue;
            }
            counts[i].1 -= 1;
            prefix.push(counts[i].0);
            rec(counts, prefix, total, out);
            prefix.pop();
            counts[i].1 += 1;
        }
    }
    rec(&mut counts, &mut prefix, lambda.len(), &mut out);
    out
}

/// The primitive idempotent `E_λ = (1/k!) Σ_{←p = λ} e_p`.
pub fn partition_idempotent(lambda: &SignedPartition) -> Result<RationalElement> {
    let n = lambda.weight();
    let mut acc = RationalElement::zero(n);
    for p in arrangements(lambda) {
        acc = acc.add(&composition_idempotent(&p)?);
    }
    let inv_kfact = Rational::new(
        BigInt::from(1),
        BigInt::from(factorial(lambda.len() as u64)),
    );
    Ok(acc.scale(&inv_kfact))
}

/// The eigen-element `ẽ_λ = x_{|λ|} f_1 ⋯ f_{a+b}` with
/// `f_i = ε_{Λ_i}^+ ζ_{c_i}` on positive parts, `ε_{Λ_i}^- ζ̃_{c_i}` on
/// odd negative parts, and `ζ_{d_i}` on even negative parts. The
/// centralizer of `w_λ` acts on it from the right by root-of-unity
/// scalars.
pub fn eigen_element(lambda: &SignedPartition) -> Result<CyclotomicElement> {
    let n = lambda.weight();
    let sums = lambda.prefix_sums();
    let cycles = standard_cycles(lambda);
    let a = lambda.positive_count();
    let mut acc = coset_sum(&lambda.as_composition().abs())?.to_cyclotomic();
    for (i, &part) in lambda.parts().iter().enumerate() {
        let range = sums[i] + 1..=sums[i + 1];
        let factor = if i < a {
            sign_idempotent(n, range, Sign::Plus)
                .to_cyclotomic()
                .mul(&cyclic_projector(&cycles.block_cycles[i]))
        } else if part.abs() % 2 == 1 {
            sign_idempotent(n, range, Sign::Minus)
                .to_cyclotomic()
                .mul(&odd_cyclic_projector(&cycles.block_cycles[i])?)
        } else {
            cyclic_projector(&cycles.negative_block_cycles[i])
        };
        acc = acc.mul(&factor);
    }
    Ok(acc)
}

/// Ordered set partitions of `[n]` with the block sizes of `p`, each
/// encoded as the permutation sending the `l`-th smallest element of
/// `P_i` to the `l`-th smallest element of `J_i`.
pub fn ordered_partition_reps(p: &SignedComposition) -> Vec<SignedPermutation> {
    let n = p.weight();
    let sizes: Vec<usize> = p.parts().iter().map(|q| q.unsigned_abs() as usize).collect();
    let sums = p.prefix_sums();
    let mut out = Vec::new();
    let mut chosen: Vec<Vec<usize>> = Vec::with_capacity(sizes.len());
    let all: Vec<usize> = (1..=n).collect();
    fn rec(
        remaining: &[usize],
        sizes: &[usize],
        sums: &[usize],
        chosen: &mut Vec<Vec<usize>>,
        out: &mut Vec<SignedPermutation>,
        n: usize,
    ) {
        if chosen.len() == sizes.len() {
            let mut image = vec![0i32; n];
            for (i, block) in chosen.iter().enumerate() {
                for (l, &target) in block.iter().enumerate() {
                    image[sums[i] + l] = target as i32;
                }
            }
            out.push(SignedPermutation::from_image(image).expect("set partition image"));
            return;
        }
        let size = sizes[chosen.len()];
        // choose an ascending `size`-subset of the remaining points
        let mut combo = Vec::with_capacity(size);
        fn choose(
            remaining: &[usize],
            start: usize,
            size: usize,
            combo: &mut Vec<usize>,
            cont: &mut dyn FnMut(&Vec<usize>, &[usize]),
        ) {
            if combo.len() == size {
                let rest: Vec<usize> = remaining
                    .iter()
                    .copied()
                    .filter(|x| !combo.contains(x))
                    .collect();
                cont(combo, &rest);
                return;
            }
            for i in start..remaining.len() {
                combo.push(remaining[i]);
                choose(remaining, i + 1, size, combo, cont);
                combo.pop();
            }
        }
        choose(remaining, 0, size, &mut combo, &mut |combo, rest| {
            chosen.push(combo.clone());
            rec(rest, sizes, sums, chosen, out, n);
            chosen.pop();
        });
    }
    rec(&all, &sizes, &sums, &mut chosen, &mut out, n);
    out
}

/// Ranks above which the ordered-set-partition sum is refused by default
/// (the number of summands is the multinomial coefficient of `|p|`).
pub const SET_PARTITION_BOUND: usize = 5;

/// The idempotent built from ordered set partitions: the sum over all
/// `(J_1, ..., J_k)` of `w_{(J_1..J_k)} ε_{P_1}^{ξ_1} r_{P_1} ⋯`.
///
/// This reconstructs `e_p` without using minimal coset representatives,
/// which is exactly what makes it useful as an independent check.
pub fn vazirani_idempotent(p: &SignedComposition) -> Result<RationalElement> {
    vazirani_idempotent_bounded(p, SET_PARTITION_BOUND)
}

pub fn vazirani_idempotent_bounded(
    p: &SignedComposition,
    bound: usize,
) -> Result<RationalElement> {
    let n = p.weight();
    if n > bound {
        return Err(Error::EnumerationBound { n, bound });
    }
    let reps = RationalElement::group_sum(n, ordered_partition_reps(p));
    Ok(reps.mul(&block_factor_product(p)))
}
