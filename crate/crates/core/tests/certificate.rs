mod common;

use knotconc::blanchfield::{find_isotropic, localize, pairing_from_seifert};
use knotconc::laurent::gcd;
use knotconc::obstruction::{
    anisotropy_certificate, cable_transfer, certify_independence, localization_case, strong_coprimality_bounded,
    verify_certificate, AnisotropyVerdict, CertifyFailure, KnotHypotheses, LocalizationCase,
};
use knotconc::seifert::SeifertMatrix;
use knotconc::twist::{alexander, seifert_matrix, Rho1Table};
use knotconc::{Error, LaurentPoly};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

fn twists(ns: &[i64]) -> Vec<KnotHypotheses> {
    let table = Rho1Table::shipped();
    ns.iter().map(|&n| KnotHypotheses::twist(n, &table).unwrap()).collect()
}

#[test]
fn davis_certificate_round_trips() {
    let fam = twists(&[34, 310, 874]);
    let a = certify_independence(&fam, 3).unwrap().to_canonical_json();
    let b = certify_independence(&fam, 3).unwrap().to_canonical_json();
    assert_eq!(a, b);
    assert_eq!(verify_certificate(&a), Ok(true));
}

#[test]
fn random_leaf_mutations_are_rejected() {
    let json = certify_independence(&twists(&[34, 310, 874]), 3).unwrap().to_canonical_json();
    let doc: Value = serde_json::from_str(&json).unwrap();
    let leaves = common::json_leaves(&doc);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..100 {
        let path = &leaves[rng.gen_range(0..leaves.len())];
        let mut bad = doc.clone();
        common::mutate_leaf(&mut bad, path, rng.gen());
        assert_ne!(bad, doc);
        let verdict = verify_certificate(&serde_json::to_string_pretty(&bad).unwrap());
        assert!(matches!(verdict, Ok(false) | Err(_)), "mutation at {path:?} accepted");
    }
}

#[test]
fn structural_errors_are_malformed() {
    let json = certify_independence(&twists(&[34]), 1).unwrap().to_canonical_json();
    let mut v: Value = serde_json::from_str(&json).unwrap();
    v["family"] = Value::Array(vec![]);
    assert!(matches!(verify_certificate(&v.to_string()), Err(Error::MalformedCertificate(_))));
    assert!(matches!(verify_certificate(&json[..json.len() / 2]), Err(Error::MalformedCertificate(_))));
    assert!(matches!(verify_certificate("[]"), Err(Error::MalformedCertificate(_))));
}

#[test]
fn failures_follow_the_evaluation_order() {
    let err = certify_independence(&twists(&[34, 4]), 3).unwrap_err();
    assert_eq!(err.kind(), "strong_irreducibility");
    assert!(err.to_string().starts_with("strong irreducibility: 4 is a perfect power"));

    let table = Rho1Table::shipped().without(34);
    let fam = vec![KnotHypotheses::twist(34, &table).unwrap()];
    assert_eq!(certify_independence(&fam, 3).unwrap_err(), CertifyFailure::RhoOneUnasserted { label: "K_34".into() });

    // n = 12 = 4·3 is slice: irreducibility fails before anything else
    let err = certify_independence(&twists(&[34, 12]), 1).unwrap_err();
    assert_eq!(err.kind(), "strong_irreducibility");

    // a knot outside the table with an order-two witness: ρ⁽¹⁾ is the first gap
    let err = certify_independence(&twists(&[34, 7]), 2).unwrap_err();
    assert_eq!(err, CertifyFailure::RhoOneUnasserted { label: "K_7".into() });
}

#[test]
fn certification_is_monotone() {
    let fam = twists(&[34, 310, 874]);
    let big = certify_independence(&fam, 3).unwrap();
    for c_max in 1..=2 {
        let small = certify_independence(&fam, c_max).unwrap();
        assert!(small.coprimality.iter().all(|r| big.coprimality.contains(r)));
        assert!(small.localization.iter().all(|r| big.localization.contains(r)));
        assert!(small.anisotropy.iter().all(|r| big.anisotropy.contains(r)));
        assert!(small.irreducibility.iter().all(|r| big.irreducibility.contains(r)));
        assert_eq!(small.rho, big.rho);
    }
}

#[test]
fn seifert_members_use_direct_evidence() {
    let text = std::fs::read_to_string(common::fixtures().join("seifert/twist_34.json")).unwrap();
    let v = SeifertMatrix::from_json(&text).unwrap();
    let s = KnotHypotheses::seifert("S34", v, 2, Some("order two".into()), Some("table entry for 34".into())).unwrap();
    let mut fam = vec![s];
    fam.extend(twists(&[310]));
    let cert = certify_independence(&fam, 2).unwrap();
    assert!(!cert.scope.all_complexities_cited);
    assert_eq!(verify_certificate(&cert.to_canonical_json()), Ok(true));

    let tref = SeifertMatrix::from_json(&std::fs::read_to_string(common::fixtures().join("seifert/trefoil.json")).unwrap()).unwrap();
    let t = KnotHypotheses::seifert("T", tref, 1, Some("asserted".into()), Some("asserted".into())).unwrap();
    assert_eq!(certify_independence(&[t], 1).unwrap_err().kind(), "rho0_nonzero");
}

#[test]
fn davis_cables_certify_at_complexity_one() {
    let base = twists(&[34, 310, 874]);
    let cables: Vec<KnotHypotheses> = base.iter().flat_map(|h| (1..=3).map(move |c| cable_transfer(h, c).unwrap())).collect();
    for (i, a) in cables.iter().enumerate() {
        for b in &cables[i + 1..] {
            assert_ne!(a, b);
            let cert = strong_coprimality_bounded(&a.delta, &b.delta, 4, 4).unwrap();
            let same_base = a.label.split('_').nth(1) == b.label.split('_').nth(1);
            if !same_base {
                assert!(cert.all_coprime, "{} {}", a.label, b.label);
            } else {
                // Δ(t^{ab'}) is shared whenever a·c = b·d
                let bad: Vec<(u32, u32)> = cert.checks.iter().filter(|g| !g.gcd.is_one()).map(|g| (g.c, g.d)).collect();
                assert!(bad.iter().all(|&(c, d)| a.cable * c == b.cable * d), "{bad:?}");
            }
        }
    }
    let cert = certify_independence(&cables, 1).unwrap();
    assert_eq!(verify_certificate(&cert.to_canonical_json()), Ok(true));
}

#[test]
fn cable_module_orders_are_inflations() {
    for n in [3i64, 34, 310] {
        let v = seifert_matrix(n).unwrap();
        for c in 1..=3 {
            let m = pairing_from_seifert(&v, c).unwrap();
            assert_eq!(*m.order(), alexander(n).unwrap().inflate(c).unwrap().normalize());
        }
    }
}

#[test]
fn sufficient_conditions_never_contradict_the_oracle() {
    for n in 1..=30i64 {
        let v = seifert_matrix(n).unwrap();
        let delta = alexander(n).unwrap();
        for c in 1..=2 {
            let Ok(m) = pairing_from_seifert(&v, c) else { continue };
            for p in [delta.inflate(c).unwrap(), alexander(34).unwrap(), delta.clone()] {
                let fast = anisotropy_certificate(&delta, c, &p, None).unwrap();
                let slow = find_isotropic(&localize(&m, &p).unwrap()).unwrap();
                if fast.is_certified() {
                    assert!(slow.is_empty(), "n = {n}, c = {c}, p = {p}");
                }
                let full = anisotropy_certificate(&delta, c, &p, Some(&m)).unwrap();
                assert!(!matches!(full.verdict, AnisotropyVerdict::Unknown { .. }));
                assert_eq!(full.is_certified(), slow.is_empty() || fast.is_certified());
            }
        }
    }
}

fn small_poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec(-5i64..=5, 2..5)
        .prop_map(|cs| LaurentPoly::from_coeffs(0, cs))
        .prop_filter("nonconstant", |p| p.degree_span().is_some_and(|d| d > 0))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn localization_cases_are_sound(d in small_poly(), p in small_poly(), q in small_poly(), c in 1u32..3) {
        // bias towards shared factors
        let p = &p * &q;
        let delta = &d * &q;
        let inflated = delta.inflate(c).unwrap();
        match localization_case(&delta, c, &p).unwrap() {
            LocalizationCase::CaseARho0 => prop_assert!(gcd(&inflated, &p).unwrap().is_one()),
            LocalizationCase::CaseBRho1 => prop_assert_eq!(inflated.normalize(), p.normalize()),
            LocalizationCase::Indeterminate { gcd: g } => {
                prop_assert!(!g.is_one());
                prop_assert!(g.divides(&inflated).unwrap() && g.divides(&p).unwrap());
                prop_assert_ne!(inflated.normalize(), p.normalize());
            }
        }
    }
}
