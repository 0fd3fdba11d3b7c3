//! JSON reports for the subcommands. Every field is a deterministic
//! function of the inputs.

use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use knotconc::blanchfield::{is_isotropic, localize, pairing_from_seifert, perp, submodules, PairedModule};
use knotconc::laurent::{factor, fox_milnor_test, gcd, is_irreducible, squarefree_decomposition};
use knotconc::seifert::{alexander_poly, rho_zero, signature, signature_profile, SeifertMatrix};
use knotconc::twist::{self, Rho1Table};
use knotconc::{LaurentPoly, Result};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// What `analyze` was run on.
pub enum Subject<'a> {
    Twist(i64),
    Seifert { path: &'a str, bytes: &'a [u8] },
}

fn poly(p: &LaurentPoly) -> Value {
    Value::String(p.to_string())
}

pub fn analyze(subject: &Subject<'_>, v: &SeifertMatrix, c_max: u32, table: &Rho1Table) -> Result<Value> {
    let (subject_json, input_hash) = match subject {
        Subject::Twist(n) => (json!({"kind": "twist", "n": n}), sha256_hex(format!("twist:{n}").as_bytes())),
        Subject::Seifert { path, bytes } => (json!({"kind": "seifert", "path": path}), sha256_hex(bytes)),
    };
    let delta = alexander_poly(v);
    let profile = signature_profile(v);
    let rho = rho_zero(v);

    let jumps: Vec<Value> = profile
        .jumps
        .iter()
        .map(|j| {
            json!({
                "location": j.location.to_string(),
                "location_approx": j.location.to_f64(),
                "location_interval": [j.location.lo().to_string(), j.location.hi().to_string()],
                "value_toward_one": j.value_toward_one,
                "value_toward_minus_one": j.value_toward_minus_one,
            })
        })
        .collect();

    let nonconstant = delta.degree_span().is_some_and(|d| d > 0);
    let factorization = if nonconstant {
        let fl = factor(&delta)?;
        Value::Array(fl.factors.iter().map(|(f, m)| json!({"factor": f.to_string(), "multiplicity": m})).collect())
    } else {
        Value::Array(vec![])
    };
    let mut inflations = Vec::new();
    let mut inflation_coprime = Vec::new();
    if nonconstant {
        let inflated: Vec<LaurentPoly> = (1..=c_max).map(|c| delta.inflate(c).map(|d| d.normalize())).collect::<Result<_>>()?;
        for (c, d) in (1..).zip(&inflated) {
            inflations.push(json!({"c": c, "inflated": poly(d), "irreducible": is_irreducible(d)?}));
        }
        for c in 1..=c_max {
            for d in c + 1..=c_max {
                let g = gcd(&inflated[c as usize - 1], &inflated[d as usize - 1])?;
                inflation_coprime.push(json!({"c": c, "d": d, "gcd": poly(&g)}));
            }
        }
    }

    let mut report = json!({
        "tool": "knotconc",
        "version": VERSION,
        "subject": subject_json,
        "input_sha256": input_hash,
        "seifert_size": v.size(),
        "alexander": poly(&delta),
        "signature": signature(v),
        "signature_profile": {
            "base_value": profile.base_value,
            "sigma_at_minus_one": profile.sigma_at_minus_one,
            "total_variation": profile.total_variation(),
            "jumps": jumps,
        },
        "rho_zero": {
            "exact": rho.exact_value().map(|r| r.to_string()),
            "symbolic": rho.exact_form(),
            "numeric": rho.numeric_value,
            "error_bound": rho.error_bound,
        },
        "factorization": factorization,
        "squarefree": !nonconstant || squarefree_decomposition(&delta)?.is_squarefree(),
        "fox_milnor_witness": if nonconstant { fox_milnor_test(&delta)?.map(|f| f.to_string()) } else { None },
        "inflations": inflations,
        "inflation_gcds": inflation_coprime,
    });
    if let Subject::Twist(n) = subject {
        let cls = twist::classify_ac(*n)?;
        let status = table.status(*n);
        report["ac_classification"] = json!({
            "algebraically_slice": cls.algebraically_slice,
            "order_two": cls.order_two,
            "order_two_witness": cls.order_two_witness,
            "square": cls.square,
            "perfect_power": cls.perfect_power,
        });
        report["strong_irreducibility"] = match twist::strong_irreducibility(*n) {
            Ok(si) => json!({"criterion_holds": si.criterion_holds, "reasons": si.reasons}),
            Err(e) => json!({"criterion_holds": false, "reasons": [e.to_string()]}),
        };
        report["rho_one"] = json!({"nonzero": status.nonzero, "source": status.source});
    }
    Ok(report)
}

pub fn family(k_max: i64) -> Result<Value> {
    let mut rows = Vec::new();
    for k in (1..=k_max).step_by(2) {
        let m = twist::davis_family(k)?;
        rows.push(json!({
            "k": m.k,
            "n": m.n,
            "n_mod_3_is_one": m.checks.n_mod_3_is_one,
            "two_adic_valuation_is_one": m.checks.two_adic_valuation_is_one,
            "witness_a": m.checks.witness.0,
            "witness_b": m.checks.witness.1,
            "witness_valid": m.checks.witness_valid,
            "classified_order_two": m.checks.classified_order_two,
            "strongly_irreducible": m.checks.strongly_irreducible,
            "all_pass": m.checks.all_pass(),
        }));
    }
    Ok(json!({"tool": "knotconc", "version": VERSION, "k_max": k_max, "rows": rows}))
}

fn module_json(m: &PairedModule) -> Result<Value> {
    let mut subs = Vec::new();
    for s in submodules(m)? {
        let isotropic = is_isotropic(m, &s);
        subs.push(json!({
            "generator_divisor": poly(s.generator_divisor()),
            "dimension": s.dimension(m),
            "trivial": s.is_trivial(m),
            "isotropic": isotropic,
            "lagrangian": isotropic && perp(m, &s) == s,
        }));
    }
    let lagrangians = subs.iter().filter(|s| s["lagrangian"] == true && s["trivial"] == false).count();
    Ok(json!({
        "order": poly(m.order()),
        "dimension": m.dimension(),
        "zero_module": m.is_zero_module(),
        "generator_pairing": m.generator_pairing().to_string(),
        "nontrivial_lagrangians": lagrangians,
        "submodules": subs,
    }))
}

pub fn blanchfield(n: i64, c: u32, p: Option<&LaurentPoly>) -> Result<Value> {
    let v = twist::seifert_matrix(n)?;
    let module = pairing_from_seifert(&v, c)?;
    let target = match p {
        Some(p) => p.clone(),
        None if module.is_zero_module() => LaurentPoly::one(),
        None => module.order().clone(),
    };
    let local = localize(&module, &target)?;
    Ok(json!({
        "tool": "knotconc",
        "version": VERSION,
        "subject": {"kind": "twist", "n": n},
        "input_sha256": sha256_hex(format!("twist:{n}").as_bytes()),
        "complexity": c,
        "localized_at": poly(&target),
        "module": module_json(&local)?,
    }))
}
