//! The theorem-verification suite: independent check units that
//! re-derive, at a given rank, every identity the library is built
//! around, reporting one pass/fail entry per (check, parameter) with
//! exact witnesses on failure.

use crate::algebra::constructors::{
    composition_idempotent, cyclic_projector, partition_idempotent, sign_idempotent,
    vazirani_idempotent_bounded, Sign,
};
use crate::algebra::element::RationalElement;
use crate::characters::class_function::ClassFunction;
use crate::characters::induced::{induce, right_ideal_character, subgroup_ideal_character};
use crate::characters::phi::{centralizer_character, CentralizerCharacter};
use crate::characters::theta::{rational_matrix_rank, Theta};
use crate::compositions::{
    mobius, signed_compositions, signed_partitions, SignedComposition, SignedPartition,
};
use crate::error::Result;
use crate::group::{
    group_elements, group_order, power_cycle_type, PowerKind, SignedPermutation,
};
use crate::scalars::{rat, ratio, Cyclotomic, Rational};
use num_bigint::BigInt;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// The individual checks of the suite. Codes `a`..`g` follow the
/// report's established lettering; the named checks cover the idempotent
/// laws, the set-partition oracle, the scalar action, and seeded random
/// properties.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CheckKind {
    /// `e_p² = |Stab(p)| e_p`; `E_λ` idempotent, orthogonal, summing to
    /// the identity.
    Idempotents,
    /// The ordered-set-partition construction rebuilds every `e_p`.
    Oracle,
    /// Every centralizer generator acts on `ẽ_λ` by its tabulated scalar.
    ScalarAction,
    /// (a) `χ_{E_λ C W_n} = Ind_{Z(w_λ)}(φ_λ)`.
    InducedModules,
    /// (b) `Σ_λ Ind_{Z(w_λ)}(φ_λ)` is the regular character.
    RegularDecomposition,
    /// (c) power cycle types, the closed form for the two induced
    /// characters on cyclic-type subgroups, and their agreement at even
    /// rank.
    CyclicCharacters,
    /// (d) `<θ(e_p), u_μ> = 2^{-k} |p_1...p_k|^{-1} [μ = ←p']`.
    ThetaQuasi,
    /// (e) `θ(E_λ) = u_{←λ'}` and `θ(E_λ) = |Stab(λ)|^{-1} θ(e_λ)`.
    ThetaPrimitive,
    /// (f) `θ(x_p x_q) = θ(x_p) θ(x_q)` for all basis pairs, plus the
    /// surjectivity rank of the image.
    ThetaMultiplicative,
    /// (g) `E_λ e_λ = e_λ`, `e_λ E_λ = |Stab(λ)| E_λ`, and the dimension
    /// count `rank(E_λ) = |W_n|/|Z(w_λ)|`.
    IdealRanks,
    /// Seeded spot checks: group axioms, multiplicativity of `φ_λ`,
    /// projector eigenvalues.
    RandomProperties,
}

impl CheckKind {
    pub const ALL: [CheckKind; 11] = [
        CheckKind::Idempotents,
        CheckKind::Oracle,
        CheckKind::ScalarAction,
        CheckKind::InducedModules,
        CheckKind::RegularDecomposition,
        CheckKind::CyclicCharacters,
        CheckKind::ThetaQuasi,
        CheckKind::ThetaPrimitive,
        CheckKind::ThetaMultiplicative,
        CheckKind::IdealRanks,
        CheckKind::RandomProperties,
    ];

    pub fn code(self) -> &'static str {
        match self {
            CheckKind::Idempotents => "idem",
            CheckKind::Oracle => "oracle",
            CheckKind::ScalarAction => "scalar",
            CheckKind::InducedModules => "a",
            CheckKind::RegularDecomposition => "b",
            CheckKind::CyclicCharacters => "c",
            CheckKind::ThetaQuasi => "d",
            CheckKind::ThetaPrimitive => "e",
            CheckKind::ThetaMultiplicative => "f",
            CheckKind::IdealRanks => "g",
            CheckKind::RandomProperties => "props",
        }
    }

    pub fn parse(code: &str) -> Option<CheckKind> {
        CheckKind::ALL.iter().copied().find(|k| k.code() == code)
    }
}

/// One pass/fail entry of the report.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub check: &'static str,
    pub params: String,
    pub pass: bool,
    pub witness: Option<serde_json::Value>,
}

impl CheckResult {
    fn pass(check: CheckKind, params: impl Into<String>) -> CheckResult {
        CheckResult {
            check: check.code(),
            params: params.into(),
            pass: true,
            witness: None,
        }
    }

    fn fail(
        check: CheckKind,
        params: impl Into<String>,
        witness: serde_json::Value,
    ) -> CheckResult {
        CheckResult {
            check: check.code(),
            params: params.into(),
            pass: false,
            witness: Some(witness),
        }
    }

    fn of(
        check: CheckKind,
        params: impl Into<String>,
        witness: Option<serde_json::Value>,
    ) -> CheckResult {
        match witness {
            None => CheckResult::pass(check, params),
            Some(w) => CheckResult::fail(check, params, w),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "check": self.check,
            "parameters": self.params,
            "status": if self.pass { "pass" } else { "fail" },
            "witness": self.witness.clone().unwrap_or(serde_json::Value::Null),
        })
    }
}

/// The assembled report.
#[derive(Debug, Clone, Default)]
pub struct Report {
    pub entries: Vec<CheckResult>,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.entries.iter().filter(|e| !e.pass)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.entries.iter().map(CheckResult::to_json).collect())
    }
}

/// Shared, memoized state for one verification run; safe to use from
/// several threads at once, and results never depend on cache state.
pub struct VerifyContext {
    n: usize,
    seed: u64,
    partitions: Vec<SignedPartition>,
    comps: Vec<SignedComposition>,
    theta: OnceLock<Theta>,
    quasi_cache: Mutex<HashMap<SignedComposition, Arc<RationalElement>>>,
    primitive_cache: Mutex<HashMap<SignedPartition, Arc<RationalElement>>>,
    phi_cache: Mutex<HashMap<SignedPartition, Arc<CentralizerCharacter>>>,
}

impl VerifyContext {
    pub fn new(n: usize, seed: u64) -> Result<VerifyContext> {
        Ok(VerifyContext {
            n,
            seed,
            partitions: signed_partitions(n)?,
            comps: signed_compositions(n)?,
            theta: OnceLock::new(),
            quasi_cache: Mutex::new(HashMap::new()),
            primitive_cache: Mutex::new(HashMap::new()),
            phi_cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    fn quasi(&self, p: &SignedComposition) -> Result<Arc<RationalElement>> {
        if let Some(hit) = self.quasi_cache.lock().unwrap().get(p) {
            return Ok(hit.clone());
        }
        let e = Arc::new(composition_idempotent(p)?);
        self.quasi_cache
            .lock()
            .unwrap()
            .insert(p.clone(), e.clone());
        Ok(e)
    }

    fn primitive(&self, lambda: &SignedPartition) -> Result<Arc<RationalElement>> {
        if let Some(hit) = self.primitive_cache.lock().unwrap().get(lambda) {
            return Ok(hit.clone());
        }
        let e = Arc::new(partition_idempotent(lambda)?);
        self.primitive_cache
            .lock()
            .unwrap()
            .insert(lambda.clone(), e.clone());
        Ok(e)
    }

    fn phi(&self, lambda: &SignedPartition) -> Result<Arc<CentralizerCharacter>> {
        if let Some(hit) = self.phi_cache.lock().unwrap().get(lambda) {
            return Ok(hit.clone());
        }
        let phi = Arc::new(centralizer_character(lambda)?);
        self.phi_cache
            .lock()
            .unwrap()
            .insert(lambda.clone(), phi.clone());
        Ok(phi)
    }

    fn theta(&self) -> Result<&Theta> {
        if let Some(t) = self.theta.get() {
            return Ok(t);
        }
        let t = Theta::new(self.n)?;
        Ok(self.theta.get_or_init(|| t))
    }
}

/// One independently runnable slice of the suite.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckUnit {
    pub kind: CheckKind,
    pub index: usize,
}

/// The units making up the selected checks, in deterministic order.
pub fn plan_units(ctx: &VerifyContext, kinds: &[CheckKind]) -> Vec<CheckUnit> {
    let mut units = Vec::new();
    let np = ctx.partitions.len();
    let nc = ctx.comps.len();
    for &kind in kinds {
        let count = match kind {
            CheckKind::Idempotents => nc + np + 1,
            CheckKind::Oracle => nc,
            CheckKind::ScalarAction => np,
            CheckKind::InducedModules => np,
            CheckKind::RegularDecomposition => 1,
            CheckKind::CyclicCharacters => ctx.n,
            CheckKind::ThetaQuasi => nc,
            CheckKind::ThetaPrimitive => np,
            CheckKind::ThetaMultiplicative => nc + 1,
            CheckKind::IdealRanks => np,
            CheckKind::RandomProperties => 1,
        };
        units.extend((0..count).map(|index| CheckUnit { kind, index }));
    }
    units
}

/// Run one unit, producing its report entries.
pub fn run_unit(ctx: &VerifyContext, unit: CheckUnit) -> Result<Vec<CheckResult>> {
    match unit.kind {
        CheckKind::Idempotents => run_idempotents(ctx, unit.index),
        CheckKind::Oracle => run_oracle(ctx, unit.index),
        CheckKind::ScalarAction => run_scalar(ctx, unit.index),
        CheckKind::InducedModules => run_induced(ctx, unit.index),
        CheckKind::RegularDecomposition => run_regular(ctx),
        CheckKind::CyclicCharacters => run_cyclic(ctx, unit.index + 1),
        CheckKind::ThetaQuasi => run_theta_quasi(ctx, unit.index),
        CheckKind::ThetaPrimitive => run_theta_primitive(ctx, unit.index),
        CheckKind::ThetaMultiplicative => run_theta_multiplicative(ctx, unit.index),
        CheckKind::IdealRanks => run_ideal_ranks(ctx, unit.index),
        CheckKind::RandomProperties => run_random_properties(ctx),
    }
}

/// Sequential driver: run every unit of the selected checks.
pub fn verify_suite(n: usize, kinds: &[CheckKind], seed: u64) -> Result<Report> {
    let ctx = VerifyContext::new(n, seed)?;
    let mut entries = Vec::new();
    for unit in plan_units(&ctx, kinds) {
        entries.extend(run_unit(&ctx, unit)?);
    }
    Ok(Report { entries })
}

// ---------------------------------------------------------------------
// witnesses

fn element_diff(
    lhs: &RationalElement,
    rhs: &RationalElement,
) -> Option<serde_json::Value> {
    if lhs == rhs {
        return None;
    }
    let diff = lhs.sub(rhs);
    let (w, _) = diff.terms().next().expect("difference is nonzero");
    Some(serde_json::json!({
        "differing_terms": diff.support_len(),
        "first_perm": serde_json::to_value(w).unwrap(),
        "lhs_coeff": crate::scalars::rational_to_json(&lhs.coeff(w)),
        "rhs_coeff": crate::scalars::rational_to_json(&rhs.coeff(w)),
    }))
}

fn class_function_diff(
    lhs: &ClassFunction,
    rhs: &ClassFunction,
) -> Option<serde_json::Value> {
    for (mu, v) in lhs.iter() {
        let other = rhs.value(mu);
        if v != other {
            return Some(serde_json::json!({
                "class": mu.to_string(),
                "lhs": v.to_json(),
                "rhs": other.to_json(),
            }));
        }
    }
    None
}

fn scalar_diff(
    label: &str,
    lhs: &Cyclotomic,
    rhs: &Cyclotomic,
) -> Option<serde_json::Value> {
    if lhs == rhs {
        None
    } else {
        Some(serde_json::json!({
            "at": label,
            "lhs": lhs.to_json(),
            "rhs": rhs.to_json(),
        }))
    }
}

fn error_witness(err: &crate::Error) -> serde_json::Value {
    serde_json::json!({ "error": err.to_string() })
}

// ---------------------------------------------------------------------
// the checks

fn run_idempotents(ctx: &VerifyContext, index: usize) -> Result<Vec<CheckResult>> {
    let kind = CheckKind::Idempotents;
    let nc = ctx.comps.len();
    let np = ctx.partitions.len();
    if index < nc {
        let p = &ctx.comps[index];
        let e = ctx.quasi(p)?;
        let lhs = e.mul(&e);
        let rhs = e.scale(&rat(p.stab_order() as i64));
        return Ok(vec![CheckResult::of(
            kind,
            format!("e_p^2 = |Stab| e_p, p={p}"),
            element_diff(&lhs, &rhs),
        )]);
    }
    if index < nc + np {
        let lambda = &ctx.partitions[index - nc];
        let e = ctx.primitive(lambda)?;
        let mut entries = vec![CheckResult::of(
            kind,
            format!("E^2 = E, lambda={lambda}"),
            element_diff(&e.mul(&e), &e),
        )];
        for mu in &ctx.partitions {
            if mu == lambda {
                continue;
            }
            let f = ctx.primitive(mu)?;
            let prod = e.mul(&f);
            entries.push(CheckResult::of(
                kind,
                format!("E_lambda E_mu = 0, lambda={lambda}, mu={mu}"),
                element_diff(&prod, &RationalElement::zero(ctx.n)),
            ));
        }
        return Ok(entries);
    }
    // completeness: the idempotents sum to the identity
    let mut total = RationalElement::zero(ctx.n);
    for lambda in &ctx.partitions {
        total = total.add(ctx.primitive(lambda)?.as_ref());
    }
    Ok(vec![CheckResult::of(
        kind,
        "sum of E_lambda = identity".to_string(),
        element_diff(&total, &RationalElement::one(ctx.n)),
    )])
}

fn run_oracle(ctx: &VerifyContext, index: usize) -> Result<Vec<CheckResult>> {
    let p = &ctx.comps[index];
    let oracle = vazirani_idempotent_bounded(p, ctx.n)?;
    let direct = ctx.quasi(p)?;
    Ok(vec![CheckResult::of(
        CheckKind::Oracle,
        format!("set-partition sum = e_p, p={p}"),
        element_diff(&oracle, &direct),
    )])
}

fn run_scalar(ctx: &VerifyContext, index: usize) -> Result<Vec<CheckResult>> {
    let lambda = &ctx.partitions[index];
    let params = format!("scalar action on eigen element, lambda={lambda}");
    // centralizer_character reads the scalar of every centralizer element
    // and matches the generator scalars against the closed form
    match ctx.phi(lambda) {
        Ok(_) => Ok(vec![CheckResult::pass(CheckKind::ScalarAction, params)]),
        Err(
            err @ (crate::Error::ScalarActionFailure | crate::Error::ZeroEigenElement),
        ) => Ok(vec![CheckResult::fail(
            CheckKind::ScalarAction,
            params,
            error_witness(&err),
        )]),
        Err(other) => Err(other),
    }
}

fn run_induced(ctx: &VerifyContext, index: usize) -> Result<Vec<CheckResult>> {
    let lambda = &ctx.partitions[index];
    let e = ctx.primitive(lambda)?;
    let chi = right_ideal_character(&e.to_cyclotomic())?;
    let phi = ctx.phi(lambda)?;
    let induced = induce(ctx.n, phi.subgroup(), phi.values())?;
    Ok(vec![CheckResult::of(
        CheckKind::InducedModules,
        format!("chi(E CW) = Ind(phi), lambda={lambda}"),
        class_function_diff(&chi, &induced),
    )])
}

fn run_regular(ctx: &VerifyContext) -> Result<Vec<CheckResult>> {
    let mut total = ClassFunction::zero(ctx.n)?;
    for lambda in &ctx.partitions {
        let phi = ctx.phi(lambda)?;
        total = total.add(&induce(ctx.n, phi.subgroup(), phi.values())?);
    }
    let regular = ClassFunction::regular(ctx.n)?;
    Ok(vec![CheckResult::of(
        CheckKind::RegularDecomposition,
        "sum of Ind(phi_lambda) = regular character",
        class_function_diff(&total, &regular),
    )])
}

/// The closed-form character of the two cyclic-type induced modules in
/// `W_m`: `±a^{ℓ-1} (ℓ-1)! 2^{ℓ-1} μ(a)` on `(a^ℓ)` / `(ā^ℓ)` with `a`
/// odd, zero elsewhere.
fn cyclic_closed_form(m: usize) -> Result<ClassFunction> {
    ClassFunction::from_fn(m, |mu| {
        let parts = mu.parts();
        let v = parts[0];
        if !parts.iter().all(|&q| q == v) {
            return Cyclotomic::zero();
        }
        let a = v.unsigned_abs();
        if a % 2 == 0 {
            return Cyclotomic::zero();
        }
        let l = parts.len() as u64;
        let mut magnitude = BigInt::from(mobius(a));
        magnitude *= BigInt::from(a).pow(l as u32 - 1);
        magnitude *= (2..l).product::<u64>(); // (l-1)!
        magnitude *= BigInt::from(2).pow(l as u32 - 1);
        if v < 0 {
            magnitude = -magnitude;
        }
        Cyclotomic::from_rational(Rational::from_integer(magnitude))
    })
}

fn run_cyclic(_ctx: &VerifyContext, m: usize) -> Result<Vec<CheckResult>> {
    let kind = CheckKind::CyclicCharacters;
    let mut entries = Vec::new();

    // power cycle types against direct exponentiation
    let points: Vec<usize> = (1..=m).collect();
    let c = SignedPermutation::positive_cycle(m, &points);
    let w0 = SignedPermutation::longest_element(m);
    let d = SignedPermutation::negative_cycle(m, &points);
    let mut power_witness = None;
    for j in 1..=m {
        let direct_c = c.pow(j).cycle_type();
        let closed_c = power_cycle_type(PowerKind::PositiveCycle, m, j)?;
        if direct_c != closed_c {
            power_witness = Some(serde_json::json!({
                "element": format!("c^{j}"),
                "lhs": closed_c.to_string(),
                "rhs": direct_c.to_string(),
            }));
            break;
        }
        let direct_f = w0.compose(&c.pow(j)).cycle_type();
        let closed_f = power_cycle_type(PowerKind::FlippedCycle, m, j)?;
        if direct_f != closed_f {
            power_witness = Some(serde_json::json!({
                "element": format!("w0 c^{j}"),
                "lhs": closed_f.to_string(),
                "rhs": direct_f.to_string(),
            }));
            break;
        }
    }
    if power_witness.is_none() {
        for j in 1..=2 * m {
            let direct = d.pow(j).cycle_type();
            let closed = power_cycle_type(PowerKind::NegativeCycle, m, j)?;
            if direct != closed {
                power_witness = Some(serde_json::json!({
                    "element": format!("d^{j}"),
                    "lhs": closed.to_string(),
                    "rhs": direct.to_string(),
                }));
                break;
            }
        }
    }
    entries.push(CheckResult::of(
        kind,
        format!("power cycle types, m={m}"),
        power_witness,
    ));

    // the subgroup <c, w0> with the idempotent eps^- zeta_c
    let mut pair_group = Vec::with_capacity(2 * m);
    let mut power = SignedPermutation::identity(m);
    for _ in 0..m {
        power = c.compose(&power);
        pair_group.push(power.clone());
        pair_group.push(w0.compose(&power));
    }
    let eps_zeta = sign_idempotent(m, 1..=m, Sign::Minus)
        .to_cyclotomic()
        .mul(&cyclic_projector(&c));
    let phi_pair = subgroup_ideal_character(&pair_group, &eps_zeta)?;
    let ind_pair = induce(m, &pair_group, &phi_pair)?;

    // the subgroup <d> with zeta_d
    let mut cyclic_group = Vec::with_capacity(2 * m);
    let mut power = SignedPermutation::identity(m);
    for _ in 0..2 * m {
        power = d.compose(&power);
        cyclic_group.push(power.clone());
    }
    let zeta_d = cyclic_projector(&d);
    let phi_cyclic = subgroup_ideal_character(&cyclic_group, &zeta_d)?;
    let ind_cyclic = induce(m, &cyclic_group, &phi_cyclic)?;

    let closed = cyclic_closed_form(m)?;
    entries.push(CheckResult::of(
        kind,
        format!("Ind from <c,w0> of chi(eps zeta_c) = closed form, m={m}"),
        class_function_diff(&ind_pair, &closed),
    ));
    entries.push(CheckResult::of(
        kind,
        format!("Ind from <d> of chi(zeta_d) = closed form, m={m}"),
        class_function_diff(&ind_cyclic, &closed),
    ));
    if m % 2 == 0 {
        entries.push(CheckResult::of(
            kind,
            format!("even-rank module isomorphism, m={m}"),
            class_function_diff(&ind_pair, &ind_cyclic),
        ));
    }
    Ok(entries)
}

fn run_theta_quasi(ctx: &VerifyContext, index: usize) -> Result<Vec<CheckResult>> {
    let p = &ctx.comps[index];
    let theta = ctx.theta()?;
    let image = theta.apply(ctx.quasi(p)?.as_ref())?;
    let k = p.len() as u32;
    let prod: i64 = p.parts().iter().map(|q| q.abs()).product();
    let expected_value = Cyclotomic::from_rational(ratio(1, 2i64.pow(k) * prod));
    let target = p.prime().rearrange();
    let mut witness = None;
    for mu in &ctx.partitions {
        let u_mu = ClassFunction::class_indicator(mu)?;
        let pairing = image.inner_product(&u_mu);
        let expected = if *mu == target {
            expected_value.clone()
        } else {
            Cyclotomic::zero()
        };
        if let Some(w) = scalar_diff(&format!("<theta(e_p), u_{mu}>"), &pairing, &expected) {
            witness = Some(w);
            break;
        }
    }
    Ok(vec![CheckResult::of(
        CheckKind::ThetaQuasi,
        format!("theta(e_p) pairing profile, p={p}"),
        witness,
    )])
}

fn run_theta_primitive(ctx: &VerifyContext, index: usize) -> Result<Vec<CheckResult>> {
    let lambda = &ctx.partitions[index];
    let theta = ctx.theta()?;
    let image = theta.apply(ctx.primitive(lambda)?.as_ref())?;
    let target = ClassFunction::class_indicator(&lambda.prime_rearranged())?;
    let mut entries = vec![CheckResult::of(
        CheckKind::ThetaPrimitive,
        format!("theta(E) = class indicator of rearranged prime, lambda={lambda}"),
        class_function_diff(&image, &target),
    )];
    let via_quasi = theta.apply(ctx.quasi(lambda.as_composition())?.as_ref())?;
    let scaled = image.scale(&Cyclotomic::from_integer(lambda.stab_order() as i64));
    entries.push(CheckResult::of(
        CheckKind::ThetaPrimitive,
        format!("|Stab| theta(E) = theta(e), lambda={lambda}"),
        class_function_diff(&scaled, &via_quasi),
    ));
    Ok(entries)
}

fn run_theta_multiplicative(ctx: &VerifyContext, index: usize) -> Result<Vec<CheckResult>> {
    let kind = CheckKind::ThetaMultiplicative;
    let theta = ctx.theta()?;
    if index == ctx.comps.len() {
        // surjectivity: the images of the basis span all class functions
        let rank = rational_matrix_rank(theta.image_matrix()?);
        let full = ctx.partitions.len();
        let witness = if rank == full {
            None
        } else {
            Some(serde_json::json!({ "rank": rank, "expected": full }))
        };
        return Ok(vec![CheckResult::of(
            kind,
            "image of theta spans the class functions",
            witness,
        )]);
    }
    let p = &ctx.comps[index];
    let xp = theta.basis().coset_sum(p).expect("basis composition");
    let chi_p = theta.permutation_character(p);
    let mut witness = None;
    for q in &ctx.comps {
        let xq = theta.basis().coset_sum(q).expect("basis composition");
        let lhs = theta.apply(&xp.mul(xq))?;
        let rhs = chi_p.mul(theta.permutation_character(q));
        if let Some(w) = class_function_diff(&lhs, &rhs) {
            witness = Some(serde_json::json!({ "q": q.to_string(), "diff": w }));
            break;
        }
    }
    Ok(vec![CheckResult::of(
        kind,
        format!("theta(x_p x_q) = theta(x_p) theta(x_q) for all q, p={p}"),
        witness,
    )])
}

fn run_ideal_ranks(ctx: &VerifyContext, index: usize) -> Result<Vec<CheckResult>> {
    let kind = CheckKind::IdealRanks;
    let lambda = &ctx.partitions[index];
    let e = ctx.quasi(lambda.as_composition())?;
    let big = ctx.primitive(lambda)?;
    let stab = rat(lambda.stab_order() as i64);
    let mut entries = vec![
        CheckResult::of(
            kind,
            format!("E e = e, lambda={lambda}"),
            element_diff(&big.mul(&e), &e),
        ),
        CheckResult::of(
            kind,
            format!("e E = |Stab| E, lambda={lambda}"),
            element_diff(&e.mul(&big), &big.scale(&stab)),
        ),
    ];
    let id_coeff = big.coeff(&SignedPermutation::identity(ctx.n));
    let rank = id_coeff * rat(group_order(ctx.n) as i64);
    let expected = rat((group_order(ctx.n) / crate::group::centralizer_order(lambda)) as i64);
    entries.push(CheckResult::of(
        kind,
        format!("rank(E) = |W|/|Z|, lambda={lambda}"),
        if rank == expected {
            None
        } else {
            Some(serde_json::json!({
                "lhs": crate::scalars::rational_to_json(&rank),
                "rhs": crate::scalars::rational_to_json(&expected),
            }))
        },
    ));
    Ok(entries)
}

/// Small deterministic generator for the seeded property subsets.
struct SplitMix(u64);

impl SplitMix {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    fn below(&mut self, bound: usize) -> usize {
        (self.next() % bound as u64) as usize
    }
}

fn run_random_properties(ctx: &VerifyContext) -> Result<Vec<CheckResult>> {
    let kind = CheckKind::RandomProperties;
    let mut rng = SplitMix(ctx.seed ^ 0xd1f3_5c2a_9e47_0b81);
    let elems = group_elements(ctx.n)?;
    let mut entries = Vec::new();

    // group axioms on random triples
    let mut witness = None;
    for _ in 0..50 {
        let u = &elems[rng.below(elems.len())];
        let v = &elems[rng.below(elems.len())];
        let w = &elems[rng.below(elems.len())];
        if u.compose(&v.compose(w)) != u.compose(v).compose(w) {
            witness = Some(serde_json::json!({
                "associativity": [u.one_row(), v.one_row(), w.one_row()]
            }));
            break;
        }
        if !u.compose(&u.inverse()).is_identity() {
            witness = Some(serde_json::json!({ "inverse": u.one_row() }));
            break;
        }
    }
    entries.push(CheckResult::of(kind, "group axioms on random triples", witness));

    // multiplicativity of phi on random centralizer pairs
    let mut witness = None;
    'outer: for lambda in &ctx.partitions {
        let phi = ctx.phi(lambda)?;
        let subgroup = phi.subgroup();
        let pairs = 200.min(subgroup.len() * subgroup.len());
        for _ in 0..pairs {
            let z1 = &subgroup[rng.below(subgroup.len())];
            let z2 = &subgroup[rng.below(subgroup.len())];
            let lhs = phi.value(&z1.compose(z2)).expect("closed subgroup");
            let rhs = phi.value(z1).unwrap().mul(phi.value(z2).unwrap());
            if *lhs != rhs {
                witness = Some(serde_json::json!({
                    "lambda": lambda.to_string(),
                    "z1": z1.one_row(),
                    "z2": z2.one_row(),
                }));
                break 'outer;
            }
        }
    }
    entries.push(CheckResult::of(
        kind,
        "phi is multiplicative on random centralizer pairs",
        witness,
    ));

    // projector eigenvalue on random elements
    let mut witness = None;
    for _ in 0..10 {
        let g = &elems[rng.below(elems.len())];
        let zeta = cyclic_projector(g);
        let expected = zeta.scale(&crate::scalars::root_of_unity(g.order() as u64, 1));
        if zeta.right_mul_perm(g) != expected {
            witness = Some(serde_json::json!({ "element": g.one_row() }));
            break;
        }
    }
    entries.push(CheckResult::of(
        kind,
        "cyclic projector right eigenvalue",
        witness,
    ));
    Ok(entries)
}
