use knotconc::laurent::is_irreducible;
use knotconc::seifert::{alexander_poly, rho_zero, signature_profile};
use knotconc::twist::{alexander, classify_ac, davis_family, rho_one_status, seifert_matrix, strong_irreducibility};

fn brute_slice(n: u64) -> bool {
    (0..=n + 1).any(|m| m * m.saturating_sub(1) == n)
}

fn brute_order_two(n: u64) -> bool {
    if brute_slice(n) {
        return false;
    }
    for a in 1..=n {
        if a * a - a > n {
            break;
        }
        for b in 1..=n {
            let v = a * a - a + b * b;
            if v == n {
                return true;
            }
            if v > n {
                break;
            }
        }
    }
    false
}

fn brute_power(n: u64) -> bool {
    (2..=n).any(|m| {
        let mut q = m * m;
        while q < n {
            q *= m;
        }
        q == n
    })
}

#[test]
fn classification_matches_brute_force() {
    for n in 0..=2000u64 {
        let c = classify_ac(n as i64).unwrap();
        assert_eq!(c.algebraically_slice, brute_slice(n), "n = {n}");
        assert_eq!(c.order_two, brute_order_two(n), "n = {n}");
        if let Some((a, b)) = c.order_two_witness {
            assert_eq!(a * a - a + b * b, n);
        }
        if n >= 2 {
            assert_eq!(c.perfect_power, brute_power(n), "n = {n}");
            assert_eq!(strong_irreducibility(n as i64).unwrap().criterion_holds, !brute_slice(n) && !brute_power(n));
        }
    }
}

#[test]
fn davis_family_checks() {
    for k in (1..=99i64).step_by(2) {
        let m = davis_family(k).unwrap();
        let n = 36 * k * k - 6 * k + 4;
        assert_eq!(m.n, n);
        assert_eq!(n % 3, 1);
        assert_eq!(n % 2, 0);
        assert_ne!(n % 4, 0);
        assert_eq!(m.checks.witness, (6 * k as u64, 2));
        assert!(m.checks.all_pass(), "k = {k}");
        assert!(brute_order_two(n as u64) && !brute_power(n as u64));
        assert!(rho_one_status(n).is_asserted_nonzero());
    }
    assert!(davis_family(2).is_err());
    assert!(davis_family(0).is_err());
}

#[test]
fn alexander_polynomials_match_seifert_matrices() {
    for n in 0..60 {
        assert_eq!(alexander_poly(&seifert_matrix(n).unwrap()), alexander(n).unwrap(), "n = {n}");
    }
}

#[test]
fn criterion_against_factorization() {
    for n in 2..=120i64 {
        let d = alexander(n).unwrap();
        let holds = strong_irreducibility(n).unwrap().criterion_holds;
        if holds {
            for c in 1..=3 {
                assert!(is_irreducible(&d.inflate(c).unwrap()).unwrap(), "n = {n}, c = {c}");
            }
        } else if brute_slice(n as u64) {
            assert!(!is_irreducible(&d).unwrap(), "n = {n}");
        } else if let Some(m) = (1..=n).find(|m| m * m == n) {
            // Δ_{m²}(t²) = (m t² − t − m)(m t² + t − m)
            let f: knotconc::LaurentPoly = format!("{m}*t^2 + -1*t^1 + {}*t^0", -m).parse().unwrap();
            assert!(f.divides(&d.inflate(2).unwrap()).unwrap(), "n = {n}");
        }
    }
}

#[test]
fn order_two_twists_have_vanishing_rho_zero() {
    for n in [2i64, 3, 7, 34, 310] {
        let v = seifert_matrix(n).unwrap();
        assert!(signature_profile(&v).is_constant());
        assert!(rho_zero(&v).is_exactly_zero());
    }
}
