mod common;

use knotconc::blanchfield::{
    find_isotropic, is_isotropic, localize, pairing_from_seifert, perp, seifert_pairing, submodules, PairedModule, Step,
};
use knotconc::laurent::{factor, rational};
use knotconc::seifert::SeifertMatrix;
use knotconc::twist::seifert_matrix;
use knotconc::LaurentPoly;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn corpus_modules() -> Vec<(String, SeifertMatrix, PairedModule)> {
    let mut out = Vec::new();
    let mut push = |name: String, v: SeifertMatrix| {
        for c in 1..=3 {
            if let Ok(m) = pairing_from_seifert(&v, c) {
                out.push((format!("{name} c={c}"), v.clone(), m));
            }
        }
    };
    for name in ["trefoil.json", "figure_eight.json", "twist_34.json", "twist_4.json"] {
        let text = std::fs::read_to_string(common::fixtures().join("seifert").join(name)).unwrap();
        push(name.into(), SeifertMatrix::from_json(&text).unwrap());
    }
    for n in [1, 2, 3, 6, 9, 16, 310] {
        push(format!("K_{n}"), seifert_matrix(n).unwrap());
    }
    out
}

fn random_poly(rng: &mut ChaCha8Rng) -> LaurentPoly {
    let low = rng.gen_range(-3..=3);
    let len = rng.gen_range(1..=4);
    LaurentPoly::from_coeffs(low, (0..len).map(|_| rng.gen_range(-4i64..=4)))
}

#[test]
fn pairings_are_hermitian_and_sesquilinear() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let modules = corpus_modules();
    assert!(modules.len() >= 20);
    for (name, _, m) in &modules {
        assert!(m.is_hermitian(), "{name}");
        assert!(m.is_nondegenerate(), "{name}");
        for _ in 0..100 {
            let (f1, f2, g, a) = (random_poly(&mut rng), random_poly(&mut rng), random_poly(&mut rng), random_poly(&mut rng));
            assert_eq!(m.pair(&f1, &g), m.pair(&g, &f1).conjugate(), "{name}");
            assert_eq!(m.pair(&(&f1 + &f2), &g), m.pair(&f1, &g).add(&m.pair(&f2, &g)), "{name}");
            assert_eq!(m.pair(&(&a * &f1), &g), m.pair(&f1, &g).mul_poly(&a), "{name}");
            assert_eq!(m.pair(&f1, &(&a * &g)), m.pair(&f1, &g).mul_poly(&a.conjugate()), "{name}");
            // the order kills the module
            assert!(m.pair(&(&f1 * m.order()), &g).is_zero(), "{name}");
        }
    }
}

#[test]
fn matrix_form_is_hermitian_and_sesquilinear() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for (name, v, m) in corpus_modules() {
        if m.provenance().iter().any(|s| matches!(s, Step::Inflated(_))) {
            continue;
        }
        for _ in 0..100 {
            let x: Vec<LaurentPoly> = (0..2).map(|_| random_poly(&mut rng)).collect();
            let y: Vec<LaurentPoly> = (0..2).map(|_| random_poly(&mut rng)).collect();
            let a = random_poly(&mut rng);
            let bxy = seifert_pairing(&v, &x, &y).unwrap();
            assert_eq!(seifert_pairing(&v, &y, &x).unwrap(), bxy.conjugate(), "{name}");
            let ay: Vec<LaurentPoly> = y.iter().map(|p| &a * p).collect();
            assert_eq!(seifert_pairing(&v, &x, &ay).unwrap(), bxy.mul_poly(&a), "{name}");
            let ax: Vec<LaurentPoly> = x.iter().map(|p| &a * p).collect();
            assert_eq!(seifert_pairing(&v, &ax, &y).unwrap(), bxy.mul_poly(&a.conjugate()), "{name}");
        }
    }
}

/// `D | g·ḡ'·N` for `B₀₀ = N/D`, checked by exact division.
fn pairs_to_zero(m: &PairedModule, g: &LaurentPoly, h: &LaurentPoly) -> bool {
    let b = m.generator_pairing();
    let num = &(g * &h.conjugate()) * b.numerator();
    b.denominator().divides(&num).unwrap()
}

fn verdicts(m: &PairedModule) -> Vec<(String, bool, bool)> {
    submodules(m)
        .unwrap()
        .iter()
        .map(|s| (s.generator_divisor().to_string(), is_isotropic(m, s), perp(m, s) == *s))
        .collect()
}

#[test]
fn isotropy_and_perp_match_division_oracle() {
    for (name, _, m) in corpus_modules() {
        let divisors = if m.is_zero_module() { vec![LaurentPoly::one()] } else { factor(m.order()).unwrap().divisors() };
        for s in submodules(&m).unwrap() {
            let g = s.generator_divisor();
            assert_eq!(is_isotropic(&m, &s), pairs_to_zero(&m, g, g), "{name} {g}");
            // perp: generated by the lowest-degree divisor h with g ⟂ h
            let h = divisors
                .iter()
                .filter(|h| pairs_to_zero(&m, g, h))
                .min_by_key(|h| h.degree_span().unwrap())
                .unwrap();
            assert_eq!(perp(&m, &s).generator_divisor(), h, "{name} {g}");
        }
    }
}

#[test]
fn verdicts_are_invariant_under_unit_rescaling() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let modules = corpus_modules();
    for trial in 0..100 {
        let (name, _, m) = &modules[trial % modules.len()];
        let mut q = 0;
        while q == 0 {
            q = rng.gen_range(-9i64..=9);
        }
        let k = rng.gen_range(-3..=3);
        let unit = LaurentPoly::monomial(rational(q), k);
        let r = m.rescaled(&unit).unwrap();
        assert_eq!(verdicts(&r), verdicts(m), "{name} by {unit}");
        if m.is_zero_module() {
            continue;
        }
        let mut targets = vec![m.order().clone()];
        targets.extend(factor(m.order()).unwrap().factors.into_iter().map(|(f, _)| f));
        for p in targets {
            assert_eq!(
                find_isotropic(&localize(&r, &p).unwrap()).unwrap(),
                find_isotropic(&localize(m, &p).unwrap()).unwrap(),
                "{name}"
            );
        }
    }
    let m = pairing_from_seifert(&seifert_matrix(34).unwrap(), 1).unwrap();
    assert!(m.rescaled(&(&LaurentPoly::t() + &LaurentPoly::one())).is_err());
}

#[test]
fn lagrangian_witnesses_for_squares() {
    for n in [4, 9, 16] {
        let m = pairing_from_seifert(&seifert_matrix(n).unwrap(), 2).unwrap();
        let found = find_isotropic(&m).unwrap();
        assert!(found.iter().any(|s| s.lagrangian), "n = {n}");
        let r = (n as f64).sqrt() as i64;
        let w: LaurentPoly = format!("{r}*t^2 + -1*t^1 + {}*t^0", -r).parse().unwrap();
        assert!(found.iter().any(|s| *s.submodule.generator_divisor() == w), "n = {n}");
    }
}
