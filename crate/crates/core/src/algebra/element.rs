//! Sparse elements of the group algebra `C W_n` and their convolution
//! product.
//!
//! Coefficients are either exact rationals (the idempotent suite never
//! needs anything else) or cyclotomics. Rational convolutions clear
//! denominators and run over integers, with an `i128` fast path and a
//! bigint fallback; products over small groups additionally go through a
//! cached composition table instead of hashing permutations.

use crate::group::{group_order, SignedPermutation};
use crate::scalars::{Cyclotomic, Rational};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, LazyLock, Mutex};

/// Scalar types usable as group-algebra coefficients.
pub trait Coefficient: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_assign(&mut self, other: &Self);
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn from_rational(r: &Rational) -> Self;
    fn to_json(&self) -> serde_json::Value;
    fn pretty(&self) -> String;

    /// Convolution hook; the rational implementation overrides this with
    /// the integer-scaled path.
    fn convolve(
        n: usize,
        u: &BTreeMap<SignedPermutation, Self>,
        v: &BTreeMap<SignedPermutation, Self>,
    ) -> BTreeMap<SignedPermutation, Self> {
        generic_convolve(n, u, v)
    }
}

fn generic_convolve<C: Coefficient>(
    _n: usize,
    u: &BTreeMap<SignedPermutation, C>,
    v: &BTreeMap<SignedPermutation, C>,
) -> BTreeMap<SignedPermutation, C> {
    let mut acc: BTreeMap<SignedPermutation, C> = BTreeMap::new();
    for (p, a) in u {
        for (q, b) in v {
            let prod = a.mul(b);
            if prod.is_zero() {
                continue;
            }
            let key = p.compose(q);
            match acc.get_mut(&key) {
                Some(c) => c.add_assign(&prod),
                None => {
                    acc.insert(key, prod);
                }
            }
        }
    }
    acc.retain(|_, c| !c.is_zero());
    acc
}

impl Coefficient for Rational {
    fn zero() -> Self {
        num_traits::Zero::zero()
    }
    fn one() -> Self {
        num_traits::One::one()
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn add_assign(&mut self, other: &Self) {
        *self += other;
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn to_json(&self) -> serde_json::Value {
        crate::scalars::rational_to_json(self)
    }
    fn pretty(&self) -> String {
        crate::scalars::rational_string(self)
    }

    fn convolve(
        n: usize,
        u: &BTreeMap<SignedPermutation, Self>,
        v: &BTreeMap<SignedPermutation, Self>,
    ) -> BTreeMap<SignedPermutation, Self> {
        rational_convolve(n, u, v)
    }
}

impl Coefficient for Cyclotomic {
    fn zero() -> Self {
        Cyclotomic::zero()
    }
    fn one() -> Self {
        Cyclotomic::one()
    }
    fn is_zero(&self) -> bool {
        Cyclotomic::is_zero(self)
    }
    fn add_assign(&mut self, other: &Self) {
        *self = Cyclotomic::add(self, other);
    }
    fn mul(&self, other: &Self) -> Self {
        Cyclotomic::mul(self, other)
    }
    fn neg(&self) -> Self {
        Cyclotomic::neg(self)
    }
    fn from_rational(r: &Rational) -> Self {
        Cyclotomic::from_rational(r.clone())
    }
    fn to_json(&self) -> serde_json::Value {
        Cyclotomic::to_json(self)
    }
    fn pretty(&self) -> String {
        self.to_string()
    }
}

/// Largest rank for which a full composition table of `W_n` is cached
/// (`|W_5|^2` entries is ~30 MB of `u16`).
const TABLE_MAX_RANK: usize = 5;

/// Term-pair count above which a rational convolution switches to the
/// composition table.
const TABLE_THRESHOLD: usize = 1 << 12;

struct GroupTable {
    elems: Vec<SignedPermutation>,
    index: HashMap<SignedPermutation, u16>,
    table: Vec<u16>,
}

impl GroupTable {
    fn build(n: usize) -> GroupTable {
        let elems = crate::group::group_elements_bounded(n, TABLE_MAX_RANK)
            .expect("table rank is pre-checked");
        let size = elems.len();
        let index: HashMap<SignedPermutation, u16> = elems
            .iter()
            .enumerate()
            .map(|(i, w)| (w.clone(), i as u16))
            .collect();
        let mut table = vec![0u16; size * size];
        for (i, u) in elems.iter().enumerate() {
            for (j, v) in elems.iter().enumerate() {
                table[i * size + j] = index[&u.compose(v)];
            }
        }
        GroupTable {
            elems,
            index,
            table,
        }
    }
}

static TABLES: LazyLock<Mutex<HashMap<usize, Arc<GroupTable>>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

fn group_table(n: usize) -> Option<Arc<GroupTable>> {
    if n == 0 || n > TABLE_MAX_RANK {
        return None;
    }
    let mut cache = TABLES.lock().unwrap();
    Some(
        cache
            .entry(n)
            .or_insert_with(|| Arc::new(GroupTable::build(n)))
            .clone(),
    )
}

/// Clear denominators: returns (common denominator, integer numerators).
fn scaled_integers(
    terms: &BTreeMap<SignedPermutation, Rational>,
) -> (BigInt, Vec<(&SignedPermutation, BigInt)>) {
    let mut denom = BigInt::one();
    for c in terms.values() {
        denom = denom.lcm(c.denom());
    }
    let nums = terms
        .iter()
        .map(|(w, c)| (w, c.numer() * (&denom / c.denom())))
        .collect();
    (denom, nums)
}

fn fits_small(nums: &[(&SignedPermutation, BigInt)]) -> bool {
    // factors below 2^40 keep i128 sums far from overflow
    nums.iter().all(|(_, v)| v.bits() <= 40)
}

fn rational_convolve(
    n: usize,
    u: &BTreeMap<SignedPermutation, Rational>,
    v: &BTreeMap<SignedPermutation, Rational>,
) -> BTreeMap<SignedPermutation, Rational> {
    if u.is_empty() || v.is_empty() {
        return BTreeMap::new();
    }
    let (du, nu) = scaled_integers(u);
    let (dv, nv) = scaled_integers(v);
    let denom = Rational::from_integer(&du * &dv);
    let small = fits_small(&nu) && fits_small(&nv);

    let pairs = nu.len() * nv.len();
    let table = if pairs >= TABLE_THRESHOLD {
        group_table(n)
    } else {
        None
    };

    let mut out = BTreeMap::new();
    if let Some(table) = table {
        let size = table.elems.len();
        debug_assert_eq!(size as u64, group_order(n));
        let iu: Vec<(usize, &BigInt)> = nu
            .iter()
            .map(|(w, c)| (table.index[*w] as usize, c))
            .collect();
        let iv: Vec<(usize, &BigInt)> = nv
            .iter()
            .map(|(w, c)| (table.index[*w] as usize, c))
            .collect();
        if small {
            let su: Vec<(usize, i128)> = iu
                .iter()
                .map(|&(i, c)| (i, i128::try_from(c).unwrap()))
                .collect();
            let sv: Vec<(usize, i128)> = iv
                .iter()
                .map(|&(i, c)| (i, i128::try_from(c).unwrap()))
                .collect();
            let mut acc = vec![0i128; size];
            for &(i, a) in &su {
                let row = &table.table[i * size..(i + 1) * size];
                for &(j, b) in &sv {
                    acc[row[j] as usize] += a * b;
                }
            }
            for (k, val) in acc.into_iter().enumerate() {
                if val != 0 {
                    out.insert(
                        table.elems[k].clone(),
                        Rational::from_integer(BigInt::from(val)) / &denom,
                    );
                }
            }
        } else {
            let mut acc = vec![BigInt::zero(); size];
            for &(i, a) in &iu {
                let row = &table.table[i * size..(i + 1) * size];
                for &(j, b) in &iv {
                    acc[row[j] as usize] += a * b;
                }
            }
            for (k, val) in acc.into_iter().enumerate() {
                if !val.is_zero() {
                    out.insert(
                        table.elems[k].clone(),
                        Rational::from_integer(val) / &denom,
                    );
                }
            }
        }
    } else if small {
        let mut acc: HashMap<SignedPermutation, i128> = HashMap::new();
        for (p, a) in &nu {
            let a = i128::try_from(a).unwrap();
            for (q, b) in &nv {
                let b = i128::try_from(b).unwrap();
                *acc.entry(p.compose(q)).or_insert(0) += a * b;
            }
        }
        for (w, val) in acc {
            if val != 0 {
                out.insert(w, Rational::from_integer(BigInt::from(val)) / &denom);
            }
        }
    } else {
        let mut acc: HashMap<SignedPermutation, BigInt> = HashMap::new();
        for (p, a) in &nu {
            for (q, b) in &nv {
                let prod = a * b;
                *acc.entry(p.compose(q)).or_insert_with(BigInt::zero) += prod;
            }
        }
        for (w, val) in acc {
            if !val.is_zero() {
                out.insert(w, Rational::from_integer(val) / &denom);
            }
        }
    }
    out
}

/// A finitely supported function `W_n -> C` with the convolution product;
/// zero coefficients are never stored and term iteration follows the
/// canonical order on image tuples.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraElement<C: Coefficient> {
    n: usize,
    terms: BTreeMap<SignedPermutation, C>,
}

/// Elements with exact rational coefficients.
pub type RationalElement = AlgebraElement<Rational>;
/// Elements with cyclotomic coefficients.
pub type CyclotomicElement = AlgebraElement<Cyclotomic>;

impl<C: Coefficient> AlgebraElement<C> {
    pub fn zero(n: usize) -> Self {
        AlgebraElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    /// The delta element `δ_w`.
    pub fn delta(w: SignedPermutation) -> Self {
        let n = w.rank();
        let mut terms = BTreeMap::new();
        terms.insert(w, C::one());
        AlgebraElement { n, terms }
    }

    /// The identity of the algebra, `δ_id`.
    pub fn one(n: usize) -> Self {
        AlgebraElement::delta(SignedPermutation::identity(n))
    }

    /// Sum of deltas over a set of permutations.
    pub fn group_sum<I: IntoIterator<Item = SignedPermutation>>(n: usize, ws: I) -> Self {
        let mut terms = BTreeMap::new();
        for w in ws {
            assert_eq!(w.rank(), n);
            terms.insert(w, C::one());
        }
        AlgebraElement { n, terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (SignedPermutation, C)>>(n: usize, iter: I) -> Self {
        let mut terms: BTreeMap<SignedPermutation, C> = BTreeMap::new();
        for (w, c) in iter {
            assert_eq!(w.rank(), n);
            match terms.get_mut(&w) {
                Some(existing) => existing.add_assign(&c),
                None => {
                    terms.insert(w, c);
                }
            }
        }
        terms.retain(|_, c| !c.is_zero());
        AlgebraElement { n, terms }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SignedPermutation, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &SignedPermutation) -> C {
        self.terms.get(w).cloned().unwrap_or_else(C::zero)
    }

    pub fn coeff_ref(&self, w: &SignedPermutation) -> Option<&C> {
        self.terms.get(w)
    }

    /// Sum of all coefficients.
    pub fn coefficient_sum(&self) -> C {
        let mut acc = C::zero();
        for c in self.terms.values() {
            acc.add_assign(c);
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "adding mismatched ranks");
        let mut terms = self.terms.clone();
        for (w, c) in &other.terms {
            match terms.get_mut(w) {
                Some(existing) => existing.add_assign(c),
                None => {
                    terms.insert(w.clone(), c.clone());
                }
            }
        }
        terms.retain(|_, c| !c.is_zero());
        AlgebraElement { n: self.n, terms }
    }

    pub fn neg(&self) -> Self {
        AlgebraElement {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &C) -> Self {
        if s.is_zero() {
            return AlgebraElement::zero(self.n);
        }
        let mut terms = BTreeMap::new();
        for (w, c) in &self.terms {
            let prod = c.mul(s);
            if !prod.is_zero() {
                terms.insert(w.clone(), prod);
            }
        }
        AlgebraElement { n: self.n, terms }
    }

    /// Convolution product.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "multiplying mismatched ranks");
        AlgebraElement {
            n: self.n,
            terms: C::convolve(self.n, &self.terms, &other.terms),
        }
    }

    /// Right translation by a group element: `Σ c_w δ_{wz}`.
    pub fn right_mul_perm(&self, z: &SignedPermutation) -> Self {
        assert_eq!(self.n, z.rank());
        AlgebraElement {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.compose(z), c.clone()))
                .collect(),
        }
    }

    /// Left translation by a group element: `Σ c_w δ_{zw}`.
    pub fn left_mul_perm(&self, z: &SignedPermutation) -> Self {
        assert_eq!(self.n, z.rank());
        AlgebraElement {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (z.compose(w), c.clone()))
                .collect(),
        }
    }

    /// `{"n": n, "terms": [{"perm": [...], "coeff": ...}]}` in canonical
    /// permutation order.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "terms": self
                .terms
                .iter()
                .map(|(w, c)| serde_json::json!({
                    "perm": serde_json::to_value(w).unwrap(),
                    "coeff": c.to_json(),
                }))
                .collect::<Vec<_>>(),
        })
    }
}

impl RationalElement {
    /// View with cyclotomic coefficients (conductor one).
    pub fn to_cyclotomic(&self) -> CyclotomicElement {
        AlgebraElement {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), Cyclotomic::from_rational(c.clone())))
                .collect(),
        }
    }
}

impl CyclotomicElement {
    /// Rational coefficients when every coefficient happens to be rational.
    pub fn to_rational(&self) -> Option<RationalElement> {
        let mut terms = BTreeMap::new();
        for (w, c) in &self.terms {
            terms.insert(w.clone(), c.as_rational()?);
        }
        Some(AlgebraElement { n: self.n, terms })
    }
}

impl<C: Coefficient> std::fmt::Display for AlgebraElement<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| format!("({})·[{}]", c.pretty(), w.one_row()))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
