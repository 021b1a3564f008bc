//! The hyperoctahedral group `W_n` of signed permutations: arithmetic,
//! cycle structure, descents and descent shapes, Coxeter length, conjugacy
//! classes, and centralizers of the standard class representatives.

use crate::compositions::{factorial, SignedComposition, SignedPartition};
use crate::error::{Error, Result};
use crate::DEFAULT_GROUP_BOUND;
use num_integer::Integer;
use serde::de::{SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::str::FromStr;

/// A signed permutation `w` of `{1, ..., n}`, stored as the image tuple
/// `(w(1), ..., w(n))` and extended to negatives by `w(-a) = -w(a)`.
///
/// The derived ordering (lexicographic on image tuples) is the canonical
/// total order used for map keys and all deterministic output.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedPermutation {
    image: Vec<i32>,
}

/// One cycle in the decomposition of a signed permutation: the underlying
/// orbit on `{1, ..., n}` with its minimal element first, plus the sign of
/// the cycle. A negative `r`-cycle has order `2r` in `W_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedCycle {
    pub support: Vec<usize>,
    pub negative: bool,
}

impl SignedPermutation {
    /// Validate an image tuple: absolute values must be a permutation of
    /// `1..=n`.
    pub fn from_image(image: Vec<i32>) -> Result<Self> {
        let n = image.len();
        if n == 0 {
            return Err(Error::ZeroRank);
        }
        let mut seen = vec![false; n + 1];
        for &v in &image {
            let a = v.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a] {
                return Err(Error::InvalidPermutation(format!(
                    "image {image:?} is not a signed permutation"
                )));
            }
            seen[a] = true;
        }
        Ok(SignedPermutation { image })
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            image: (1..=n as i32).collect(),
        }
    }

    /// The adjacent transposition `s_i = (i, i+1)`, `1 <= i <= n-1`.
    pub fn adjacent_transposition(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n);
        let mut w = Self::identity(n);
        w.image.swap(i - 1, i);
        w
    }

    /// The sign change `t_i = (i)^-`, sending `i` to `-i`.
    pub fn sign_change(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= n);
        let mut w = Self::identity(n);
        w.image[i - 1] = -(i as i32);
        w
    }

    /// `w_{0,P}`: the product of `t_j` over `j` in the given subset.
    pub fn sign_change_on<I: IntoIterator<Item = usize>>(n: usize, subset: I) -> Self {
        let mut w = Self::identity(n);
        for j in subset {
            assert!(j >= 1 && j <= n);
            w.image[j - 1] = -(j as i32);
        }
        w
    }

    /// The longest element `w_{0,n}`, sending every `a` to `-a`.
    pub fn longest_element(n: usize) -> Self {
        Self::sign_change_on(n, 1..=n)
    }

    /// The positive cycle `(a_1 a_2 ... a_r)` on distinct points of `[n]`.
    pub fn positive_cycle(n: usize, points: &[usize]) -> Self {
        let mut w = Self::identity(n);
        for k in 0..points.len() {
            let next = points[(k + 1) % points.len()];
            w.image[points[k] - 1] = next as i32;
        }
        w
    }

    /// The negative cycle `(a_1 a_2 ... a_r)^-`: `a_j -> a_{j+1}` and
    /// `a_r -> -a_1`.
    pub fn negative_cycle(n: usize, points: &[usize]) -> Self {
        let mut w = Self::positive_cycle(n, points);
        let last = points[points.len() - 1];
        w.image[last - 1] = -(points[0] as i32);
        w
    }

    pub fn rank(&self) -> usize {
        self.image.len()
    }

    pub fn image(&self) -> &[i32] {
        &self.image
    }

    /// Evaluate at any point of `{±1, ..., ±n}`.
    pub fn apply(&self, a: i32) -> i32 {
        if a > 0 {
            self.image[(a - 1) as usize]
        } else {
            -self.image[(-a - 1) as usize]
        }
    }

    /// Composition `(self ∘ other)(a) = self(other(a))`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.rank(), other.rank(), "composing mismatched ranks");
        SignedPermutation {
            image: other.image.iter().map(|&v| self.apply(v)).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut image = vec![0; self.image.len()];
        for (i, &v) in self.image.iter().enumerate() {
            let a = v.unsigned_abs() as usize;
            image[a - 1] = if v > 0 {
                (i + 1) as i32
            } else {
                -((i + 1) as i32)
            };
        }
        SignedPermutation { image }
    }

    pub fn is_identity(&self) -> bool {
        self.image
            .iter()
            .enumerate()
            .all(|(i, &v)| v == (i + 1) as i32)
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::identity(self.rank());
        for _ in 0..k {
            acc = self.compose(&acc);
        }
        acc
    }

    /// Conjugate `x^{-1} self x`.
    pub fn conjugate_by(&self, x: &Self) -> Self {
        x.inverse().compose(self).compose(x)
    }

    /// Order as a group element: lcm over cycles of `r` (positive) or `2r`
    /// (negative).
    pub fn order(&self) -> usize {
        self.cycles().iter().fold(1usize, |acc, c| {
            let o = if c.negative {
                2 * c.support.len()
            } else {
                c.support.len()
            };
            acc.lcm(&o)
        })
    }

    /// Disjoint cycle decomposition covering `[n]`, each cycle rotated so
    /// its minimal support element comes first.
    pub fn cycles(&self) -> Vec<SignedCycle> {
        let n = self.rank();
        let mut seen = vec![false; n + 1];
        let mut cycles = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut support = Vec::new();
            let mut negative = false;
            let mut a = start;
            loop {
                seen[a] = true;
                support.push(a);
                let v = self.image[a - 1];
                if v < 0 {
                    negative = !negative;
                }
                a = v.unsigned_abs() as usize;
                if a == start {
                    break;
                }
            }
            cycles.push(SignedCycle { support, negative });
        }
        cycles
    }

    /// The signed cycle type: positive cycle lengths, then negative cycle
    /// lengths, as a signed partition.
    pub fn cycle_type(&self) -> SignedPartition {
        let parts: Vec<i64> = self
            .cycles()
            .iter()
            .map(|c| {
                let len = c.support.len() as i64;
                if c.negative {
                    -len
                } else {
                    len
                }
            })
            .collect();
        SignedPartition::from_parts(parts).expect("cycle lengths are nonzero")
    }

    /// Descents in the Mantaci-Reutenauer sense: `i` is a descent when
    /// `w(i)` and `w(i+1)` share a sign and `|w(i)| > |w(i+1)|`, or have
    /// opposite signs.
    pub fn mr_descents(&self) -> Vec<usize> {
        (1..self.rank())
            .filter(|&i| {
                let x = self.image[i - 1];
                let y = self.image[i];
                if (x > 0) == (y > 0) {
                    x.abs() > y.abs()
                } else {
                    true
                }
            })
            .collect()
    }

    /// The descent shape: the signed composition whose prefix sums are the
    /// descent positions and whose part signs follow the block signs.
    pub fn descent_shape(&self) -> SignedComposition {
        let descents = self.mr_descents();
        let mut parts = Vec::with_capacity(descents.len() + 1);
        let mut prev = 0usize;
        for &d in descents.iter().chain(std::iter::once(&self.rank())) {
            let size = (d - prev) as i64;
            let sign = if self.image[d - 1] > 0 { 1 } else { -1 };
            parts.push(sign * size);
            prev = d;
        }
        SignedComposition::new(parts).expect("descent blocks are nonempty")
    }

    /// Classical descents of a permutation restricted to an ordered block
    /// `P = {z_1 < ... < z_m}`: the positions `i` in `[m-1]` with
    /// `w(z_i) > w(z_{i+1})`.
    ///
    /// Errors unless `w` fixes the complement of `P` pointwise and maps `P`
    /// into `P` positively.
    pub fn classical_descents(&self, block: &[usize]) -> Result<Vec<usize>> {
        debug_assert!(block.windows(2).all(|w| w[0] < w[1]));
        for a in 1..=self.rank() {
            let v = self.image[a - 1];
            if block.contains(&a) {
                if v < 0 || !block.contains(&(v as usize)) {
                    return Err(Error::NotPositiveOnBlock);
                }
            } else if v != a as i32 {
                return Err(Error::NotPositiveOnBlock);
            }
        }
        Ok((1..block.len())
            .filter(|&i| self.image[block[i - 1] - 1] > self.image[block[i] - 1])
            .collect())
    }

    /// Coxeter length with respect to `{t_1, s_1, ..., s_{n-1}}`, by the
    /// closed type-B formula: window inversions plus the sum of `|w(i)|`
    /// over positions with `w(i) < 0`. The test suite validates this
    /// against breadth-first search over the Cayley graph.
    pub fn length(&self) -> usize {
        let mut inv = 0usize;
        for i in 0..self.image.len() {
            for j in (i + 1)..self.image.len() {
                if self.image[i] > self.image[j] {
                    inv += 1;
                }
            }
        }
        let neg: usize = self
            .image
            .iter()
            .filter(|&&v| v < 0)
            .map(|&v| v.unsigned_abs() as usize)
            .sum();
        inv + neg
    }

    /// One-row notation with `-` for negatives, e.g. `"2 3 -1"`.
    pub fn one_row(&self) -> String {
        self.image
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn parse_one_row(s: &str) -> Result<Self> {
        let image: Vec<i32> = s
            .split_whitespace()
            .map(|t| {
                t.parse::<i32>()
                    .map_err(|_| Error::InvalidPermutation(format!("bad entry {t:?}")))
            })
            .collect::<Result<_>>()?;
        Self::from_image(image)
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.one_row())
    }
}

impl FromStr for SignedPermutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse_one_row(s)
    }
}

impl fmt::Display for SignedCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner = self
            .support
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(" ");
        write!(f, "({inner}){}", if self.negative { "-" } else { "" })
    }
}

impl Serialize for SignedPermutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.image.len()))?;
        for v in &self.image {
            seq.serialize_element(v)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for SignedPermutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct ImageVisitor;
        impl<'de> Visitor<'de> for ImageVisitor {
            type Value = Vec<i32>;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an image array of signed integers")
            }
            fn visit_seq<A: SeqAccess<'de>>(
                self,
                mut seq: A,
            ) -> std::result::Result<Self::Value, A::Error> {
                let mut image = Vec::new();
                while let Some(v) = seq.next_element::<i32>()? {
                    image.push(v);
                }
                Ok(image)
            }
        }
        let image = deserializer.deserialize_seq(ImageVisitor)?;
        SignedPermutation::from_image(image).map_err(serde::de::Error::custom)
    }
}

/// `|W_n| = 2^n n!`.
pub fn group_order(n: usize) -> u64 {
    2u64.pow(n as u32) * factorial(n as u64)
}

/// All elements of `W_n` in canonical (lexicographic image) order.
///
/// Guarded by `bound` (the library default is [`DEFAULT_GROUP_BOUND`])
/// since the group has `2^n n!` elements.
pub fn group_elements_bounded(n: usize, bound: usize) -> Result<Vec<SignedPermutation>> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    if n > bound {
        return Err(Error::EnumerationBound { n, bound });
    }
    let mut out = Vec::with_capacity(group_order(n) as usize);
    let mut image = Vec::with_capacity(n);
    let mut used = vec![false; n + 1];
    fill_group(n, &mut image, &mut used, &mut out);
    Ok(out)
}

pub fn group_elements(n: usize) -> Result<Vec<SignedPermutation>> {
    group_elements_bounded(n, DEFAULT_GROUP_BOUND)
}

fn fill_group(
    n: usize,
    image: &mut Vec<i32>,
    used: &mut Vec<bool>,
    out: &mut Vec<SignedPermutation>,
) {
    if image.len() == n {
        out.push(SignedPermutation {
            image: image.clone(),
        });
        return;
    }
    // values in increasing integer order: -n, ..., -1, 1, ..., n
    for v in (-(n as i32)..=n as i32).filter(|&v| v != 0) {
        let a = v.unsigned_abs() as usize;
        if used[a] {
            continue;
        }
        used[a] = true;
        image.push(v);
        fill_group(n, image, used, out);
        image.pop();
        used[a] = false;
    }
}

/// The standard cycles attached to a signed partition: for each block
/// `Λ_i` the increasing positive cycle, the corresponding negative cycle
/// (`c_i w_{0,Λ_i}` for odd parts, the plain negative cycle for even
/// parts), and the class representative `w_λ = c_1...c_a d_{a+1}...d_{a+b}`.
#[derive(Debug, Clone)]
pub struct StandardCycles {
    /// `c_i`, one per part (identity on size-one blocks).
    pub block_cycles: Vec<SignedPermutation>,
    /// `d_i`, one per part.
    pub negative_block_cycles: Vec<SignedPermutation>,
    /// `w_λ`, with signed cycle type `λ`.
    pub representative: SignedPermutation,
}

/// Build the standard cycles of `λ` inside `W_n` for `n = |λ|`.
pub fn standard_cycles(lambda: &SignedPartition) -> StandardCycles {
    let n = lambda.weight();
    let sums = lambda.prefix_sums();
    let mut block_cycles = Vec::with_capacity(lambda.len());
    let mut negative_block_cycles = Vec::with_capacity(lambda.len());
    for (i, &part) in lambda.parts().iter().enumerate() {
        let points: Vec<usize> = (sums[i] + 1..=sums[i + 1]).collect();
        let c = SignedPermutation::positive_cycle(n, &points);
        let d = if part.abs() % 2 == 1 {
            c.compose(&SignedPermutation::sign_change_on(n, points.clone()))
        } else {
            SignedPermutation::negative_cycle(n, &points)
        };
        block_cycles.push(c);
        negative_block_cycles.push(d);
    }
    let a = lambda.positive_count();
    let mut representative = SignedPermutation::identity(n);
    for (i, _) in lambda.parts().iter().enumerate() {
        let factor = if i < a {
            &block_cycles[i]
        } else {
            &negative_block_cycles[i]
        };
        representative = representative.compose(factor);
    }
    StandardCycles {
        block_cycles,
        negative_block_cycles,
        representative,
    }
}

/// `y_i`: the order-preserving swap of the adjacent equal-size blocks
/// `Λ_i` and `Λ_{i+1}` (`i` is 1-based).
pub fn block_swap(lambda: &SignedPartition, i: usize) -> SignedPermutation {
    let sums = lambda.prefix_sums();
    let size = lambda.parts()[i - 1].unsigned_abs() as usize;
    assert_eq!(
        lambda.parts()[i - 1],
        lambda.parts()[i],
        "block swap needs equal adjacent parts"
    );
    let n = lambda.weight();
    let mut image: Vec<i32> = (1..=n as i32).collect();
    for l in sums[i - 1] + 1..=sums[i] {
        image[l - 1] = (l + size) as i32;
    }
    for l in sums[i] + 1..=sums[i + 1] {
        image[l - 1] = (l - size) as i32;
    }
    SignedPermutation { image }
}

/// Labels for the generators of the centralizer of `w_λ`; indices are the
/// 1-based block positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CentralizerGenerator {
    /// `c_i` for a positive part.
    BlockCycle(usize),
    /// `w_{0,Λ_i}` for a positive part.
    BlockFlip(usize),
    /// `d_i` for a negative part.
    NegativeBlockCycle(usize),
    /// `y_i` for adjacent equal parts.
    BlockSwap(usize),
}

impl fmt::Display for CentralizerGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CentralizerGenerator::BlockCycle(i) => write!(f, "c_{i}"),
            CentralizerGenerator::BlockFlip(i) => write!(f, "w0_{i}"),
            CentralizerGenerator::NegativeBlockCycle(i) => write!(f, "d_{i}"),
            CentralizerGenerator::BlockSwap(i) => write!(f, "y_{i}"),
        }
    }
}

/// Generators of the centralizer `Z_{W_n}(w_λ)`.
pub fn centralizer_generators(
    lambda: &SignedPartition,
) -> Vec<(CentralizerGenerator, SignedPermutation)> {
    let cycles = standard_cycles(lambda);
    let sums = lambda.prefix_sums();
    let n = lambda.weight();
    let a = lambda.positive_count();
    let mut gens = Vec::new();
    for i in 1..=lambda.len() {
        if i <= a {
            gens.push((
                CentralizerGenerator::BlockCycle(i),
                cycles.block_cycles[i - 1].clone(),
            ));
            gens.push((
                CentralizerGenerator::BlockFlip(i),
                SignedPermutation::sign_change_on(n, sums[i - 1] + 1..=sums[i]),
            ));
        } else {
            gens.push((
                CentralizerGenerator::NegativeBlockCycle(i),
                cycles.negative_block_cycles[i - 1].clone(),
            ));
        }
    }
    for i in 1..lambda.len() {
        if lambda.parts()[i - 1] == lambda.parts()[i] {
            gens.push((CentralizerGenerator::BlockSwap(i), block_swap(lambda, i)));
        }
    }
    gens
}

/// `|Z_{W_n}(w_λ)| = |Stab(λ)| · 2^k · |λ_1 ... λ_k|`.
pub fn centralizer_order(lambda: &SignedPartition) -> u64 {
    let prod: u64 = lambda
        .parts()
        .iter()
        .map(|p| p.unsigned_abs())
        .product();
    lambda.stab_order() * 2u64.pow(lambda.len() as u32) * prod
}

/// All elements of the centralizer of `w_λ`, by filtering the group.
pub fn centralizer_elements(lambda: &SignedPartition) -> Result<Vec<SignedPermutation>> {
    let w = standard_cycles(lambda).representative;
    let elems = group_elements(lambda.weight())?;
    Ok(elems
        .into_iter()
        .filter(|z| z.compose(&w) == w.compose(z))
        .collect())
}

/// The conjugacy class of `w_λ`: all elements with signed cycle type `λ`.
pub fn conjugacy_class(lambda: &SignedPartition) -> Result<Vec<SignedPermutation>> {
    let elems = group_elements(lambda.weight())?;
    Ok(elems
        .into_iter()
        .filter(|w| &w.cycle_type() == lambda)
        .collect())
}

/// Which standard element is being raised to a power.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PowerKind {
    /// `c^j` for the positive `m`-cycle `c`.
    PositiveCycle,
    /// `w_{0,m} c^j` (the central longest element times a power of `c`).
    FlippedCycle,
    /// `d^j` for the negative `m`-cycle `d`, exponents `j <= 2m`.
    NegativeCycle,
}

impl PowerKind {
    fn name(self) -> &'static str {
        match self {
            PowerKind::PositiveCycle => "c",
            PowerKind::FlippedCycle => "w0c",
            PowerKind::NegativeCycle => "d",
        }
    }
}

/// The signed cycle type of `c^j`, `(w_0 c)^j`, or `d^j` in `W_m`, from
/// the closed case analysis (with `ℓ = gcd(m, j)`, `a = m/ℓ`, `b = j/ℓ`):
/// `c^j` has type `(a^ℓ)`; `w_0 c^j` has type `(a^ℓ)` for even `a` and
/// `(ā^ℓ)` for odd `a`; `d^j` for `j <= m` has type `(a^ℓ)` or `(ā^ℓ)` as
/// `b` is even or odd; and `d^{m+j}` follows the parity of both `a` and
/// `b`.
pub fn power_cycle_type(kind: PowerKind, m: usize, j: usize) -> Result<SignedPartition> {
    let max = match kind {
        PowerKind::NegativeCycle => 2 * m,
        _ => m,
    };
    if m == 0 {
        return Err(Error::ZeroRank);
    }
    if j == 0 || j > max {
        return Err(Error::ExponentRange {
            kind: kind.name(),
            exponent: j,
            size: m,
        });
    }
    let type_of = |count: usize, size: usize, negative: bool| {
        let part = if negative {
            -(size as i64)
        } else {
            size as i64
        };
        SignedPartition::from_parts(vec![part; count]).expect("nonzero parts")
    };
    let reduced = |j: usize| {
        let l = m.gcd(&j);
        (l, m / l, j / l)
    };
    match kind {
        PowerKind::PositiveCycle => {
            let (l, a, _) = reduced(j);
            Ok(type_of(l, a, false))
        }
        PowerKind::FlippedCycle => {
            let (l, a, _) = reduced(j);
            Ok(type_of(l, a, a % 2 == 1))
        }
        PowerKind::NegativeCycle => {
            if j <= m {
                let (l, a, b) = reduced(j);
                Ok(type_of(l, a, b % 2 == 1))
            } else {
                let (l, a, b) = reduced(j - m);
                let negative = if a % 2 == 0 { true } else { b % 2 == 0 };
                Ok(type_of(l, a, negative))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> SignedPermutation {
        SignedPermutation::parse_one_row(s).unwrap()
    }

    fn lambda(parts: &[i64]) -> SignedPartition {
        SignedPartition::from_sorted_parts(parts.to_vec()).unwrap()
    }

    #[test]
    fn composition_conventions() {
        let id = SignedPermutation::identity(2);
        let s1 = SignedPermutation::adjacent_transposition(2, 1);
        let t1 = SignedPermutation::sign_change(2, 1);
        assert_eq!(s1.compose(&id), s1);
        assert_eq!(t1.compose(&t1), id);
        // (s_1 t_1)(1) = s_1(-1) = -2
        assert_eq!(s1.compose(&t1), w("-2 1"));
        assert_eq!(t1.compose(&s1), w("2 -1"));
    }

    #[test]
    fn apply_respects_sign_rule() {
        let u = w("2 3 -1 4 -6 -5");
        assert_eq!(u.apply(1), 2);
        assert_eq!(u.apply(3), -1);
        assert_eq!(u.apply(-3), 1);
        assert_eq!(u.apply(-5), 6);
    }

    #[test]
    fn cycle_decomposition_of_running_example() {
        // 2 3 -1 4 -6 -5 = (1 2 3)^- (4) (5 -6); its type is (2, 1, -3)
        let u = w("2 3 -1 4 -6 -5");
        let cycles = u.cycles();
        assert_eq!(
            cycles,
            vec![
                SignedCycle {
                    support: vec![1, 2, 3],
                    negative: true
                },
                SignedCycle {
                    support: vec![4],
                    negative: false
                },
                SignedCycle {
                    support: vec![5, 6],
                    negative: false
                },
            ]
        );
        assert_eq!(u.cycle_type().parts(), &[2, 1, -3]);
        assert_eq!(
            SignedPermutation::identity(4).cycle_type().parts(),
            &[1, 1, 1, 1]
        );
        assert_eq!(
            SignedPermutation::longest_element(3).cycle_type().parts(),
            &[-1, -1, -1]
        );
    }

    #[test]
    fn negative_cycle_order() {
        for r in 1..=5 {
            let d = SignedPermutation::negative_cycle(r, &(1..=r).collect::<Vec<_>>());
            assert_eq!(d.order(), 2 * r, "negative {r}-cycle");
            let c = SignedPermutation::positive_cycle(r, &(1..=r).collect::<Vec<_>>());
            assert_eq!(c.order(), r);
        }
    }

    #[test]
    fn descent_shape_of_w8_example() {
        let u = w("2 1 -3 -6 -5 4 8 -7");
        assert_eq!(u.mr_descents(), vec![1, 2, 4, 5, 7]);
        assert_eq!(u.descent_shape().parts(), &[1, 1, -2, -1, 2, -1]);
        let id = SignedPermutation::identity(5);
        assert_eq!(id.mr_descents(), Vec::<usize>::new());
        assert_eq!(id.descent_shape().parts(), &[5]);
    }

    #[test]
    fn descent_shape_positive_iff_unsigned() {
        for u in group_elements(4).unwrap() {
            let shape = u.descent_shape();
            let unsigned = u.image().iter().all(|&v| v > 0);
            assert_eq!(shape.is_positive(), unsigned, "{u}");
        }
    }

    #[test]
    fn classical_descents() {
        let n = 3;
        let id = SignedPermutation::identity(n);
        assert_eq!(id.classical_descents(&[1, 2, 3]).unwrap(), Vec::<usize>::new());
        assert_eq!(w("2 1 3").classical_descents(&[1, 2, 3]).unwrap(), vec![1]);
        assert_eq!(
            w("3 2 1").classical_descents(&[1, 2, 3]).unwrap(),
            vec![1, 2]
        );
        assert!(w("-1 2 3").classical_descents(&[1, 2, 3]).is_err());
        assert!(w("2 1 3").classical_descents(&[2, 3]).is_err());
        assert_eq!(w("1 3 2").classical_descents(&[2, 3]).unwrap(), vec![1]);
    }

    #[test]
    fn length_of_generators_and_longest() {
        for n in 1..=4 {
            assert_eq!(SignedPermutation::identity(n).length(), 0);
            assert_eq!(SignedPermutation::sign_change(n, 1).length(), 1);
            for i in 1..n {
                assert_eq!(SignedPermutation::adjacent_transposition(n, i).length(), 1);
            }
            // the longest element has length n^2 in type B
            assert_eq!(SignedPermutation::longest_element(n).length(), n * n);
        }
    }

    #[test]
    fn enumeration_is_sorted_and_complete() {
        for n in 1..=5 {
            let elems = group_elements(n).unwrap();
            assert_eq!(elems.len() as u64, group_order(n));
            assert!(elems.windows(2).all(|p| p[0] < p[1]));
        }
        assert_eq!(group_elements(2).unwrap().len(), 8);
        assert!(matches!(
            group_elements(7),
            Err(Error::EnumerationBound { n: 7, bound: 6 })
        ));
        assert_eq!(group_elements_bounded(7, 7).unwrap().len() as u64, group_order(7));
    }

    #[test]
    fn standard_cycles_of_paper_example() {
        // λ = (2,2,1,-3,-2,-2) in W_12:
        // w = (1 2)(3 4)(5)(6 -7 8)^-(9 10)^-(11 12)^-
        let l = lambda(&[2, 2, 1, -3, -2, -2]);
        let sc = standard_cycles(&l);
        assert_eq!(sc.representative, w("2 1 4 3 5 -7 -8 -6 10 -9 12 -11"));
        assert_eq!(sc.representative.cycle_type(), l);
        assert_eq!(sc.block_cycles[3], w("1 2 3 4 5 7 8 6 9 10 11 12"));
        // d_4 = c_4 w_{0,Λ_4} (odd part), so it negates everything in its block
        assert_eq!(
            sc.negative_block_cycles[3],
            w("1 2 3 4 5 -7 -8 -6 9 10 11 12")
        );
        // even part -2: plain negative cycle
        assert_eq!(
            sc.negative_block_cycles[4],
            w("1 2 3 4 5 6 7 8 10 -9 11 12")
        );
    }

    #[test]
    fn standard_cycles_edge_cases() {
        let full = lambda(&[4]);
        assert_eq!(
            standard_cycles(&full).representative,
            SignedPermutation::positive_cycle(4, &[1, 2, 3, 4])
        );
        let neg_one = lambda(&[-1]);
        assert_eq!(
            standard_cycles(&neg_one).representative,
            SignedPermutation::sign_change(1, 1)
        );
        for n in 1..=6 {
            for l in crate::compositions::signed_partitions(n).unwrap() {
                assert_eq!(standard_cycles(&l).representative.cycle_type(), l);
            }
        }
    }

    #[test]
    fn block_swaps_of_paper_example() {
        let l = lambda(&[2, 2, 1, -3, -2, -2]);
        let y1 = block_swap(&l, 1);
        assert_eq!(y1, w("3 4 1 2 5 6 7 8 9 10 11 12"));
        let y5 = block_swap(&l, 5);
        assert_eq!(y5, w("1 2 3 4 5 6 7 8 11 12 9 10"));
        let gens: Vec<String> = centralizer_generators(&l)
            .iter()
            .map(|(g, _)| g.to_string())
            .collect();
        assert_eq!(
            gens,
            vec!["c_1", "w0_1", "c_2", "w0_2", "c_3", "w0_3", "d_4", "d_5", "d_6", "y_1", "y_5"]
        );
    }

    #[test]
    fn block_swap_conjugation_identities() {
        let l = lambda(&[2, 2, 1, -3, -2, -2]);
        let sc = standard_cycles(&l);
        let y1 = block_swap(&l, 1);
        assert!(y1.compose(&y1).is_identity());
        assert_eq!(
            y1.compose(&sc.block_cycles[0]).compose(&y1),
            sc.block_cycles[1]
        );
        let y5 = block_swap(&l, 5);
        assert_eq!(
            y5.compose(&sc.negative_block_cycles[4]).compose(&y5),
            sc.negative_block_cycles[5]
        );
        let sums = l.prefix_sums();
        let w0_1 = SignedPermutation::sign_change_on(12, sums[0] + 1..=sums[1]);
        let w0_2 = SignedPermutation::sign_change_on(12, sums[1] + 1..=sums[2]);
        assert_eq!(y1.compose(&w0_1).compose(&y1), w0_2);
    }

    #[test]
    fn centralizer_generators_commute_with_representative() {
        for n in 1..=5 {
            for l in crate::compositions::signed_partitions(n).unwrap() {
                let rep = standard_cycles(&l).representative;
                for (label, g) in centralizer_generators(&l) {
                    assert_eq!(
                        g.compose(&rep),
                        rep.compose(&g),
                        "generator {label} of Z(w_{l})"
                    );
                }
            }
        }
    }

    #[test]
    fn centralizer_orders() {
        assert_eq!(centralizer_order(&lambda(&[2, -1])), 8);
        assert_eq!(centralizer_order(&lambda(&[1, 1, 1])), 48); // all of W_3
        for n in 1..=4 {
            for l in crate::compositions::signed_partitions(n).unwrap() {
                let brute = centralizer_elements(&l).unwrap().len() as u64;
                assert_eq!(brute, centralizer_order(&l), "λ={l}");
            }
        }
    }

    #[test]
    fn centralizer_generators_generate_the_centralizer() {
        use std::collections::BTreeSet;
        for n in 1..=5 {
            for l in crate::compositions::signed_partitions(n).unwrap() {
                let gens: Vec<SignedPermutation> = centralizer_generators(&l)
                    .into_iter()
                    .map(|(_, g)| g)
                    .collect();
                let mut set: BTreeSet<SignedPermutation> =
                    [SignedPermutation::identity(n)].into();
                let mut frontier: Vec<SignedPermutation> = set.iter().cloned().collect();
                while let Some(x) = frontier.pop() {
                    for g in &gens {
                        let y = x.compose(g);
                        if set.insert(y.clone()) {
                            frontier.push(y);
                        }
                    }
                }
                assert_eq!(set.len() as u64, centralizer_order(&l), "λ={l}");
            }
        }
    }

    #[test]
    fn class_equation() {
        for n in 1..=6 {
            let total: u64 = crate::compositions::signed_partitions(n)
                .unwrap()
                .iter()
                .map(|l| group_order(n) / centralizer_order(l))
                .sum();
            assert_eq!(total, group_order(n));
        }
        // and by direct bucketing for small n
        for n in 1..=4 {
            for l in crate::compositions::signed_partitions(n).unwrap() {
                let class = conjugacy_class(&l).unwrap();
                assert_eq!(
                    class.len() as u64,
                    group_order(n) / centralizer_order(&l),
                    "λ={l}"
                );
            }
        }
    }

    #[test]
    fn singleton_class_of_longest_element() {
        let l = lambda(&[-1, -1, -1]);
        assert_eq!(
            conjugacy_class(&l).unwrap(),
            vec![SignedPermutation::longest_element(3)]
        );
        let l21 = lambda(&[2, -1]);
        assert_eq!(conjugacy_class(&l21).unwrap().len(), 6); // 48 / 8
    }

    #[test]
    fn power_types_match_direct_exponentiation() {
        for m in 1..=8 {
            let points: Vec<usize> = (1..=m).collect();
            let c = SignedPermutation::positive_cycle(m, &points);
            let w0 = SignedPermutation::longest_element(m);
            let d = SignedPermutation::negative_cycle(m, &points);
            for j in 1..=m {
                assert_eq!(
                    power_cycle_type(PowerKind::PositiveCycle, m, j).unwrap(),
                    c.pow(j).cycle_type(),
                    "c^{j} in W_{m}"
                );
                assert_eq!(
                    power_cycle_type(PowerKind::FlippedCycle, m, j).unwrap(),
                    w0.compose(&c.pow(j)).cycle_type(),
                    "w0 c^{j} in W_{m}"
                );
            }
            for j in 1..=2 * m {
                assert_eq!(
                    power_cycle_type(PowerKind::NegativeCycle, m, j).unwrap(),
                    d.pow(j).cycle_type(),
                    "d^{j} in W_{m}"
                );
            }
        }
    }

    #[test]
    fn power_type_examples_and_errors() {
        assert_eq!(
            power_cycle_type(PowerKind::NegativeCycle, 6, 4)
                .unwrap()
                .parts(),
            &[3, 3]
        );
        assert_eq!(
            power_cycle_type(PowerKind::PositiveCycle, 5, 5)
                .unwrap()
                .parts(),
            &[1, 1, 1, 1, 1]
        );
        assert!(matches!(
            power_cycle_type(PowerKind::PositiveCycle, 4, 5),
            Err(Error::ExponentRange { .. })
        ));
        assert!(power_cycle_type(PowerKind::NegativeCycle, 4, 8).is_ok());
        assert!(power_cycle_type(PowerKind::NegativeCycle, 4, 9).is_err());
    }

    #[test]
    fn one_row_and_json_round_trip() {
        let u = w("2 3 -1 4 -6 -5");
        assert_eq!(u.one_row(), "2 3 -1 4 -6 -5");
        assert_eq!(SignedPermutation::parse_one_row(&u.one_row()).unwrap(), u);
        let json = serde_json::to_string(&u).unwrap();
        assert_eq!(json, "[2,3,-1,4,-6,-5]");
        let back: SignedPermutation = serde_json::from_str(&json).unwrap();
        assert_eq!(back, u);
        assert!(SignedPermutation::parse_one_row("1 1").is_err());
        assert!(SignedPermutation::parse_one_row("3 1").is_err());
    }
}
