//! Character-level identities: inner products, Littlewood characters,
//! induction, the centralizer characters, and the images of the
//! homomorphism onto class functions.

use hyperoct::algebra::{
    partition_idempotent, reutenauer_idempotent, sign_idempotent, RationalElement, Sign,
};
use hyperoct::characters::theta::rational_matrix_rank;
use hyperoct::characters::{
    centralizer_character, induce, right_ideal_character, verify_suite, CheckKind, ClassFunction,
    Theta,
};
use hyperoct::compositions::signed_partitions;
use hyperoct::group::{
    centralizer_order, group_elements, group_order, CentralizerGenerator, SignedPermutation,
};
use hyperoct::scalars::{ratio, root_of_unity, Cyclotomic};
use hyperoct::Error;
use std::collections::HashMap;

fn sp(s: &str) -> hyperoct::SignedPartition {
    s.parse().unwrap()
}

fn sc(s: &str) -> hyperoct::SignedComposition {
    s.parse().unwrap()
}

#[test]
fn class_indicators_are_orthogonal_idempotents() {
    for n in 1..=4 {
        let lambdas = signed_partitions(n).unwrap();
        for l in &lambdas {
            let u = ClassFunction::class_indicator(l).unwrap();
            let self_pairing = u.inner_product(&u);
            assert_eq!(
                self_pairing,
                Cyclotomic::from_rational(ratio(1, centralizer_order(l) as i64)),
                "<u,u> for {l}"
            );
            for m in &lambdas {
                if l != m {
                    let v = ClassFunction::class_indicator(m).unwrap();
                    assert!(u.inner_product(&v).is_zero());
                }
            }
        }
    }
}

#[test]
fn sign_character_twists_the_full_cycle_indicators() {
    // ε_m · u_(m) = u_(m) for odd m, -u_(m) for even m; the negative
    // full cycle twists oppositely
    for m in 1..=5usize {
        let sign = ClassFunction::sign(m).unwrap();
        let full = sp(&m.to_string());
        let u = ClassFunction::class_indicator(&full).unwrap();
        let expected = if m % 2 == 1 {
            u.clone()
        } else {
            u.scale(&Cyclotomic::from_integer(-1))
        };
        assert_eq!(sign.mul(&u), expected, "m={m}");
        let neg_full = sp(&format!("-{m}"));
        let v = ClassFunction::class_indicator(&neg_full).unwrap();
        let expected = if m % 2 == 0 {
            v.clone()
        } else {
            v.scale(&Cyclotomic::from_integer(-1))
        };
        assert_eq!(sign.mul(&v), expected, "negative m={m}");
    }
}

#[test]
fn littlewood_character_of_delta_and_sign_projector() {
    // δ_id affords the regular character
    for n in 1..=3 {
        let chi = right_ideal_character(&RationalElement::one(n).to_cyclotomic()).unwrap();
        assert_eq!(chi, ClassFunction::regular(n).unwrap());
    }
    // ε_1^- in W_1 affords the sign character
    let chi = right_ideal_character(&sign_idempotent(1, 1..=1, Sign::Minus).to_cyclotomic())
        .unwrap();
    assert_eq!(chi, ClassFunction::sign(1).unwrap());
    // a non-idempotent is rejected
    let not_idem = RationalElement::one(2).scale(&ratio(3, 1));
    assert!(matches!(
        right_ideal_character(&not_idem.to_cyclotomic()),
        Err(Error::NotIdempotent)
    ));
}

#[test]
fn littlewood_degrees_count_ranks() {
    for n in 1..=3 {
        for lambda in signed_partitions(n).unwrap() {
            let e = partition_idempotent(&lambda).unwrap();
            let chi = right_ideal_character(&e.to_cyclotomic()).unwrap();
            let id_type = SignedPermutation::identity(n).cycle_type();
            assert_eq!(
                chi.value(&id_type),
                &Cyclotomic::from_integer((group_order(n) / centralizer_order(&lambda)) as i64),
                "degree of chi for {lambda}"
            );
        }
    }
}

#[test]
fn induction_from_extreme_subgroups() {
    for n in 1..=3 {
        let whole = group_elements(n).unwrap();
        let trivial_values: HashMap<SignedPermutation, Cyclotomic> = whole
            .iter()
            .map(|w| (w.clone(), Cyclotomic::one()))
            .collect();
        assert_eq!(
            induce(n, &whole, &trivial_values).unwrap(),
            ClassFunction::trivial(n).unwrap()
        );
        let identity_only = vec![SignedPermutation::identity(n)];
        let mut phi = HashMap::new();
        phi.insert(SignedPermutation::identity(n), Cyclotomic::one());
        assert_eq!(
            induce(n, &identity_only, &phi).unwrap(),
            ClassFunction::regular(n).unwrap()
        );
    }
}

#[test]
fn induction_rejects_non_subgroups() {
    let s1 = SignedPermutation::adjacent_transposition(3, 1);
    let s2 = SignedPermutation::adjacent_transposition(3, 2);
    let not_closed = vec![SignedPermutation::identity(3), s1.clone(), s2.clone()];
    let phi: HashMap<SignedPermutation, Cyclotomic> = not_closed
        .iter()
        .map(|w| (w.clone(), Cyclotomic::one()))
        .collect();
    assert!(matches!(
        induce(3, &not_closed, &phi),
        Err(Error::SubgroupNotClosed)
    ));
    let closed = vec![SignedPermutation::identity(3), s1];
    let mut phi: HashMap<SignedPermutation, Cyclotomic> = HashMap::new();
    phi.insert(SignedPermutation::identity(3), Cyclotomic::one());
    assert!(matches!(
        induce(3, &closed, &phi),
        Err(Error::MissingCharacterValue)
    ));
}

#[test]
fn induction_degree_formula() {
    // Ind(phi)(id) = [G:H] phi(id)
    for lambda in signed_partitions(3).unwrap() {
        let phi = centralizer_character(&lambda).unwrap();
        let ind = induce(3, phi.subgroup(), phi.values()).unwrap();
        let id_type = SignedPermutation::identity(3).cycle_type();
        let index = group_order(3) / phi.subgroup().len() as u64;
        assert_eq!(
            ind.value(&id_type),
            &Cyclotomic::from_integer(index as i64),
            "degree for {lambda}"
        );
    }
}

#[test]
fn centralizer_character_generator_values() {
    // λ = (n): the block cycle acts by ω_n
    for n in 2..=4usize {
        let phi = centralizer_character(&sp(&n.to_string())).unwrap();
        let cycle_value = phi
            .generator_values()
            .iter()
            .find(|(label, _, _)| matches!(label, CentralizerGenerator::BlockCycle(1)))
            .map(|(_, _, v)| v.clone())
            .unwrap();
        assert_eq!(cycle_value, root_of_unity(n as u64, 1));
    }
    // λ = (-2) in W_2: the negative cycle acts by ω_4
    let phi = centralizer_character(&sp("-2")).unwrap();
    let d_value = phi
        .generator_values()
        .iter()
        .find(|(label, _, _)| matches!(label, CentralizerGenerator::NegativeBlockCycle(1)))
        .map(|(_, _, v)| v.clone())
        .unwrap();
    assert_eq!(d_value, root_of_unity(4, 1));
    // λ = (1,1): the block swap acts trivially
    let phi = centralizer_character(&sp("1,1")).unwrap();
    let y_value = phi
        .generator_values()
        .iter()
        .find(|(label, _, _)| matches!(label, CentralizerGenerator::BlockSwap(1)))
        .map(|(_, _, v)| v.clone())
        .unwrap();
    assert_eq!(y_value, Cyclotomic::one());
    // and the flip inside a positive block acts trivially
    let phi = centralizer_character(&sp("2,1")).unwrap();
    for (label, _, v) in phi.generator_values() {
        if matches!(label, CentralizerGenerator::BlockFlip(_)) {
            assert_eq!(v, &Cyclotomic::one());
        }
    }
}

#[test]
fn theta_sends_the_full_coset_sum_to_the_trivial_character() {
    for n in 1..=3 {
        let theta = Theta::new(n).unwrap();
        let image = theta.permutation_character(&sc(&n.to_string()));
        assert_eq!(image, &ClassFunction::trivial(n).unwrap());
    }
}

#[test]
fn theta_of_the_reutenauer_idempotent() {
    // θ_m(r_m) = u_(m) + u_(m̄)
    for m in 1..=4usize {
        let theta = Theta::new(m).unwrap();
        let r = reutenauer_idempotent(m, 1..=m);
        let image = theta.apply(&r).unwrap();
        let expected = ClassFunction::class_indicator(&sp(&m.to_string()))
            .unwrap()
            .add(&ClassFunction::class_indicator(&sp(&format!("-{m}"))).unwrap());
        assert_eq!(image, expected, "m={m}");
    }
}

#[test]
fn theta_of_signed_reutenauer_products() {
    // θ_m(ε_m^± r_m): the sign of the surviving indicator flips with the
    // parity of m
    for m in 1..=4usize {
        let theta = Theta::new(m).unwrap();
        let r = reutenauer_idempotent(m, 1..=m);
        let plus = theta
            .apply(&sign_idempotent(m, 1..=m, Sign::Plus).mul(&r))
            .unwrap();
        let minus = theta
            .apply(&sign_idempotent(m, 1..=m, Sign::Minus).mul(&r))
            .unwrap();
        let u_pos = ClassFunction::class_indicator(&sp(&m.to_string())).unwrap();
        let u_neg = ClassFunction::class_indicator(&sp(&format!("-{m}"))).unwrap();
        if m % 2 == 1 {
            assert_eq!(plus, u_pos, "odd m={m}");
            assert_eq!(minus, u_neg, "odd m={m}");
        } else {
            assert_eq!(plus, u_neg, "even m={m}");
            assert_eq!(minus, u_pos, "even m={m}");
        }
    }
}

#[test]
fn theta_rejects_elements_outside_the_subalgebra() {
    let theta = Theta::new(2).unwrap();
    let w = SignedPermutation::parse_one_row("-1 2").unwrap();
    assert!(matches!(
        theta.apply(&RationalElement::delta(w)),
        Err(Error::NotInSubalgebra { .. })
    ));
}

#[test]
fn theta_image_spans_all_class_functions() {
    for n in 1..=4 {
        let theta = Theta::new(n).unwrap();
        let rank = rational_matrix_rank(theta.image_matrix().unwrap());
        assert_eq!(rank, signed_partitions(n).unwrap().len(), "n={n}");
    }
}

#[test]
fn suite_passes_at_rank_one_and_two() {
    for n in 1..=2 {
        let report = verify_suite(n, &CheckKind::ALL, 0).unwrap();
        if let Some(failure) = report.failures().next() {
            panic!(
                "n={n}: {} [{}] failed with witness {:?}",
                failure.check, failure.params, failure.witness
            );
        }
        assert!(report.all_pass());
        assert!(!report.entries.is_empty());
    }
}

#[test]
fn cyclic_induction_values_at_rank_two() {
    // at m=2 the two induced characters have degree |W_2|/4 = 2 and take
    // values ±2 on the one-cycle classes, 0 on the two-cycle classes
    let report = verify_suite(2, &[CheckKind::CyclicCharacters], 0).unwrap();
    assert!(report.all_pass());

    let d = SignedPermutation::negative_cycle(2, &[1, 2]);
    let mut subgroup = Vec::new();
    let mut power = SignedPermutation::identity(2);
    for _ in 0..4 {
        power = d.compose(&power);
        subgroup.push(power.clone());
    }
    let zeta = hyperoct::algebra::cyclic_projector(&d);
    let phi = hyperoct::characters::subgroup_ideal_character(&subgroup, &zeta).unwrap();
    let ind = induce(2, &subgroup, &phi).unwrap();
    assert_eq!(ind.value(&sp("1,1")), &Cyclotomic::from_integer(2));
    assert_eq!(ind.value(&sp("-1,-1")), &Cyclotomic::from_integer(-2));
    assert!(ind.value(&sp("2")).is_zero());
    assert!(ind.value(&sp("-2")).is_zero());
    assert!(ind.value(&sp("1,-1")).is_zero());
}

#[test]
fn induced_cyclic_characters_vanish_off_rectangular_classes() {
    // supports lie in {(a^l), (ā^l) : al = m}
    let m = 4usize;
    let d = SignedPermutation::negative_cycle(m, &(1..=m).collect::<Vec<_>>());
    let mut subgroup = Vec::new();
    let mut power = SignedPermutation::identity(m);
    for _ in 0..2 * m {
        power = d.compose(&power);
        subgroup.push(power.clone());
    }
    let zeta = hyperoct::algebra::cyclic_projector(&d);
    let phi = hyperoct::characters::subgroup_ideal_character(&subgroup, &zeta).unwrap();
    let ind = induce(m, &subgroup, &phi).unwrap();
    for (mu, value) in ind.iter() {
        let parts = mu.parts();
        let rectangular = parts.iter().all(|&q| q == parts[0]);
        if !rectangular {
            assert!(value.is_zero(), "value on {mu} should vanish");
        }
    }
}

#[test]
fn class_function_json_labels() {
    let u = ClassFunction::class_indicator(&sp("2,-1")).unwrap();
    let json = u.to_json();
    assert_eq!(json["n"], 3);
    assert_eq!(json["values"]["2,-1"], serde_json::json!({
        "conductor": 1,
        "coeffs": [[1, 1]],
    }));
    assert_eq!(json["values"]["3"]["coeffs"], serde_json::json!([[0, 1]]));
}
