//! Exact scalar arithmetic: arbitrary-precision rationals and elements of
//! the cyclotomic fields `Q(ω_N)`, kept canonical modulo the `N`-th
//! cyclotomic polynomial.
//!
//! No inverses of cyclotomics are implemented; nothing in this crate needs
//! them. Mixed-conductor operations lift both operands to the least common
//! multiple of their conductors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};
use std::collections::HashMap;
use std::fmt;
use std::sync::{LazyLock, Mutex};

/// Arbitrary-precision rational number, always stored reduced with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Rational from an integer.
pub fn rat(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Rational `num/den`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Euler totient.
pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1);
    let mut result = n;
    let mut m = n;
    let mut d = 2u64;
    while d * d <= m {
        if m % d == 0 {
            while m % d == 0 {
                m /= d;
            }
            result -= result / d;
        }
        d += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

static CYCLOTOMIC_CACHE: LazyLock<Mutex<HashMap<u64, Vec<BigInt>>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// Coefficients of the `n`-th cyclotomic polynomial `Φ_n`, constant term
/// first, monic of degree `φ(n)`.
///
/// Computed by recursive division: `Φ_n = (x^n - 1) / Π_{d|n, d<n} Φ_d`.
pub fn cyclotomic_polynomial(n: u64) -> Vec<BigInt> {
    assert!(n >= 1, "cyclotomic polynomial needs n >= 1");
    if let Some(hit) = CYCLOTOMIC_CACHE.lock().unwrap().get(&n) {
        return hit.clone();
    }
    let result = if n == 1 {
        vec![BigInt::from(-1), BigInt::from(1)]
    } else {
        let mut num = vec![BigInt::zero(); n as usize + 1];
        num[0] = BigInt::from(-1);
        num[n as usize] = BigInt::one();
        for d in 1..n {
            if n % d == 0 {
                num = poly_div_exact(&num, &cyclotomic_polynomial(d));
            }
        }
        num
    };
    debug_assert_eq!(result.len() as u64 - 1, euler_phi(n));
    CYCLOTOMIC_CACHE
        .lock()
        .unwrap()
        .insert(n, result.clone());
    result
}

/// Exact division of integer polynomials with a monic divisor.
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    assert!(den.last().map(|c| c.is_one()).unwrap_or(false));
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let nd = rem.len() - 1;
    assert!(nd >= dd);
    let mut quot = vec![BigInt::zero(); nd - dd + 1];
    for i in (dd..=nd).rev() {
        let c = std::mem::replace(&mut rem[i], BigInt::zero());
        if c.is_zero() {
            continue;
        }
        quot[i - dd] = c.clone();
        for (j, dc) in den.iter().enumerate().take(dd) {
            rem[i - dd + j] -= &c * dc;
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "division was not exact");
    quot
}

/// An element of `Q(ω_N)` where `ω_N = exp(2πi/N)`, stored as the unique
/// polynomial in `ω_N` of degree below `φ(N)`.
#[derive(Debug, Clone)]
pub struct Cyclotomic {
    conductor: u64,
    /// Coefficient of `ω_N^i` at index `i`; length `φ(N)`.
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![Rational::zero()],
        }
    }

    pub fn one() -> Self {
        Cyclotomic::from_rational(Rational::one())
    }

    pub fn from_rational(r: Rational) -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![r],
        }
    }

    pub fn from_integer(v: i64) -> Self {
        Cyclotomic::from_rational(rat(v))
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// The rational value when this element happens to be rational at its
    /// stored conductor.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Build `Σ coeff·ω_N^exps` from monomials, reducing canonically.
    pub fn from_monomials(conductor: u64, monomials: &[(u64, Rational)]) -> Self {
        assert!(conductor >= 1);
        let mut raw = vec![Rational::zero(); conductor as usize];
        for (e, c) in monomials {
            raw[(e % conductor) as usize] += c;
        }
        Cyclotomic::reduce(conductor, raw)
    }

    fn reduce(conductor: u64, mut raw: Vec<Rational>) -> Self {
        let phi = cyclotomic_polynomial(conductor);
        let deg = phi.len() - 1;
        if raw.len() < deg {
            raw.resize(deg, Rational::zero());
        }
        for i in (deg..raw.len()).rev() {
            let c = std::mem::replace(&mut raw[i], Rational::zero());
            if c.is_zero() {
                continue;
            }
            for (j, pc) in phi.iter().enumerate().take(deg) {
                let sub = &c * Rational::from_integer(pc.clone());
                raw[i - deg + j] -= sub;
            }
        }
        raw.truncate(deg);
        Cyclotomic {
            conductor,
            coeffs: raw,
        }
    }

    /// Rewrite at a conductor that is a multiple of the current one.
    pub fn lift_to(&self, conductor: u64) -> Self {
        assert!(conductor % self.conductor == 0);
        if conductor == self.conductor {
            return self.clone();
        }
        let scale = conductor / self.conductor;
        let monomials: Vec<(u64, Rational)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i as u64 * scale, c.clone()))
            .collect();
        Cyclotomic::from_monomials(conductor, &monomials)
    }

    fn common(&self, other: &Self) -> (Self, Self) {
        let l = self.conductor.lcm(&other.conductor);
        (self.lift_to(l), other.lift_to(l))
    }

    pub fn add(&self, other: &Self) -> Self {
        let (mut a, b) = self.common(other);
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs.iter()) {
            *x += y;
        }
        a
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = self.common(other);
        let mut raw = vec![Rational::zero(); a.coeffs.len() + b.coeffs.len()];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                raw[i + j] += x * y;
            }
        }
        Cyclotomic::reduce(a.conductor, raw)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Complex conjugation, i.e. the field automorphism `ω_N ↦ ω_N^{-1}`.
    pub fn conjugate(&self) -> Self {
        let n = self.conductor;
        let monomials: Vec<(u64, Rational)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| ((n - i as u64 % n) % n, c.clone()))
            .collect();
        Cyclotomic::from_monomials(n, &monomials)
    }
}

/// `ω_N^j` in canonical form.
pub fn root_of_unity(conductor: u64, power: i64) -> Cyclotomic {
    assert!(conductor >= 1);
    let e = power.rem_euclid(conductor as i64) as u64;
    Cyclotomic::from_monomials(conductor, &[(e, Rational::one())])
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.common(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

/// Render a rational without a denominator of one.
pub fn rational_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Cyclotomic {
    /// Prints in the ω-power basis, e.g. `1/2 + 1/2·w4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let negative = c.is_negative();
            if first {
                if negative {
                    write!(f, "-")?;
                }
                first = false;
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let coeff_str = rational_string(&mag);
            if i == 0 {
                write!(f, "{coeff_str}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{coeff_str}·")?;
                }
                if i == 1 {
                    write!(f, "w{}", self.conductor)?;
                } else {
                    write!(f, "w{}^{}", self.conductor, i)?;
                }
            }
        }
        Ok(())
    }
}

/// JSON value `[num, den]`; plain numbers when they fit in an `i64`,
/// decimal strings otherwise.
pub fn rational_to_json(r: &Rational) -> serde_json::Value {
    let int_or_string = |v: &BigInt| -> serde_json::Value {
        match i64::try_from(v.clone()) {
            Ok(small) => serde_json::Value::from(small),
            Err(_) => serde_json::Value::from(v.to_string()),
        }
    };
    serde_json::Value::Array(vec![int_or_string(r.numer()), int_or_string(r.denom())])
}

fn rational_from_json(v: &serde_json::Value) -> Option<Rational> {
    let arr = v.as_array()?;
    if arr.len() != 2 {
        return None;
    }
    let parse = |x: &serde_json::Value| -> Option<BigInt> {
        if let Some(i) = x.as_i64() {
            Some(BigInt::from(i))
        } else {
            x.as_str()?.parse().ok()
        }
    };
    let num = parse(&arr[0])?;
    let den = parse(&arr[1])?;
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

impl Cyclotomic {
    /// `{"conductor": N, "coeffs": [[num,den], ...]}`
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "conductor": self.conductor,
            "coeffs": self.coeffs.iter().map(rational_to_json).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Option<Self> {
        let conductor = v.get("conductor")?.as_u64()?;
        if conductor == 0 {
            return None;
        }
        let coeffs: Option<Vec<Rational>> = v
            .get("coeffs")?
            .as_array()?
            .iter()
            .map(rational_from_json)
            .collect();
        let coeffs = coeffs?;
        if coeffs.len() != euler_phi(conductor) as usize {
            return None;
        }
        Some(Cyclotomic { conductor, coeffs })
    }
}

impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(2))?;
        map.serialize_entry("conductor", &self.conductor)?;
        let coeffs: Vec<serde_json::Value> = self.coeffs.iter().map(rational_to_json).collect();
        map.serialize_entry("coeffs", &coeffs)?;
        map.end()
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(deserializer)?;
        Cyclotomic::from_json(&v).ok_or_else(|| serde::de::Error::custom("bad cyclotomic"))
    }
}
