//! JSON documents for every command. Rationals are strings `a` or `a/b`.
//! Each document carries a `kind` so one schema covers all of them.

use std::collections::BTreeMap;

use monolab_core::algebra::{LinForm, Rat, RatFunc1, RatFuncMulti, UPoly, UnityRat};
use monolab_core::lab::{CheckReport, MinLocusReport};
use monolab_core::monodromy::{EigenvalueSet, LctValue};
use monolab_core::padic::{CountSeries, GoodPrimeReport, PadicZeta, VerifyReport};
use monolab_core::resolution::{Base, Kind, ResolutionGraph, Role};
use monolab_core::zeta::{MotivicRat, PoleReport};
use serde_json::{json, Map, Value};

pub fn rat(r: &Rat) -> Value {
    Value::String(r.to_string())
}

fn rats(rs: &[Rat]) -> Value {
    Value::Array(rs.iter().map(rat).collect())
}

fn upoly(p: &UPoly) -> Value {
    rats(p.coeffs())
}

fn point(p: &(Rat, Rat)) -> Value {
    json!([rat(&p.0), rat(&p.1)])
}

fn factor(f: &LinForm, e: u32) -> Value {
    json!({"constant": f.constant, "coeffs": f.coeffs, "exponent": e})
}

pub fn graph(g: &ResolutionGraph) -> Value {
    let base = match &g.base {
        Base::Point(x, y) => json!([rat(x), rat(y)]),
        Base::Global => json!("global"),
    };
    let labels: Vec<Value> = g
        .labels
        .iter()
        .map(|l| {
            json!({
                "name": l.name,
                "multiplicity": l.multiplicity,
                "role": match l.role { Role::Function => "function", Role::Form => "form" },
            })
        })
        .collect();
    let components: Vec<Value> = g
        .components
        .iter()
        .map(|c| {
            let n = g.total_n(c.id);
            json!({
                "id": c.id,
                "kind": match c.kind { Kind::Exceptional => "exceptional", Kind::Strict => "strict" },
                "N": c.n,
                "total_N": n,
                "nu": c.nu,
                "self_int": c.self_int,
                "ratio": (n > 0).then(|| rat(&Rat::new(c.nu.into(), n.into()))),
            })
        })
        .collect();
    let edges: Vec<Value> = g
        .edges
        .iter()
        .map(|e| json!({"a": e.a, "b": e.b, "point": e.point.to_string()}))
        .collect();
    let log: Vec<Value> = g
        .blowup_log
        .iter()
        .map(|r| {
            json!({
                "center": r.center.to_string(),
                "through": r.components_through_center,
                "strict_multiplicity": r.strict_multiplicity_at_center,
                "created": r.created,
            })
        })
        .collect();
    let euler = g.euler.as_ref().map(|e| {
        json!({
            "strict_base_chi": e.strict_base_chi.iter().map(|(k, v)| (k.to_string(), json!(v))).collect::<Map<_, _>>(),
            "overrides": e.overrides.iter().map(|(k, v)| (k.to_string(), json!(v))).collect::<Map<_, _>>(),
        })
    });
    json!({
        "kind": "resolution",
        "base": base,
        "labels": labels,
        "components": components,
        "edges": edges,
        "fiber": g.fiber,
        "blowup_log": log,
        "critical_points": g.critical_points.iter().map(point).collect::<Vec<_>>(),
        "euler": euler,
        "warnings": g.warnings,
    })
}

fn pole_report(r: &PoleReport) -> Value {
    Value::Array(
        r.entries
            .iter()
            .map(|e| {
                json!({
                    "pole": rat(&e.pole),
                    "order": e.order,
                    "coefficient": rat(&e.coefficient),
                    "contributors": e.contributors,
                })
            })
            .collect(),
    )
}

pub fn zeta_top(z: &RatFunc1, poles: &PoleReport, character: u64) -> Value {
    json!({
        "kind": "zeta-top",
        "text": z.to_string(),
        "character": character,
        "numerator": upoly(&z.numerator()),
        "denominator": z.denominator().iter().map(|(f, e)| factor(f, *e)).collect::<Vec<_>>(),
        "poles": pole_report(poles),
    })
}

pub fn zeta_multi(z: &RatFuncMulti, polar: &[LinForm], names: &[String]) -> Value {
    let mut terms: Vec<(&Vec<u32>, &Rat)> = z.numerator().terms().collect();
    terms.sort();
    json!({
        "kind": "zeta-top-multi",
        "text": z.to_string_with(names),
        "variables": names,
        "numerator": terms.iter().map(|(e, c)| json!({"exps": e, "coeff": rat(c)})).collect::<Vec<_>>(),
        "denominator": z.denominator().iter().map(|(f, e)| factor(f, *e)).collect::<Vec<_>>(),
        "polar_locus": polar.iter().map(|f| factor(f, 1)).collect::<Vec<_>>(),
    })
}

pub fn motivic(m: &MotivicRat, topological: &RatFunc1) -> Value {
    let terms: Vec<Value> = m
        .terms
        .iter()
        .map(|t| {
            json!({
                "class": {"L": t.class.0, "one": t.class.1},
                "factors": t.factors.iter().map(|(nu, n)| json!({"nu": nu, "N": n})).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({
        "kind": "zeta-motivic",
        "text": m.to_string(),
        "terms": terms,
        "topological": topological.to_string(),
    })
}

fn good(r: &GoodPrimeReport) -> Value {
    json!({"p": r.p, "good": r.is_good(), "failures": r.failures, "suspects": r.suspects})
}

fn padic_zeta(z: &PadicZeta) -> (Value, Value) {
    let terms: Vec<Value> = z
        .terms
        .iter()
        .map(|t| {
            json!({
                "components": t.comps,
                "count": t.count,
                "factors": t.factors.iter().map(|(nu, n)| json!({"nu": nu, "N": n})).collect::<Vec<_>>(),
            })
        })
        .collect();
    let normalized = json!({
        "numerator": upoly(&z.numerator),
        "factors": z.factors.iter().map(|((nu, n), e)| json!({"nu": nu, "N": n, "exponent": e})).collect::<Vec<_>>(),
        "denominator": z.denominator_string("p"),
        "text": z.to_string(),
    });
    (Value::Array(terms), normalized)
}

pub fn padic(v: &VerifyReport) -> Value {
    let (terms, normalized) = padic_zeta(&v.zeta);
    json!({
        "kind": "zeta-padic",
        "p": v.zeta.p,
        "terms": terms,
        "normalized": normalized,
        "pole_real_parts": rats(&v.zeta.pole_real_parts()),
        "counts": v.counts.counts,
        "predicted": rats(&v.predicted),
        "verified": v.verified,
        "first_mismatch": v.first_mismatch,
        "good_prime": good(&v.good),
    })
}

pub fn counts(c: &CountSeries) -> Value {
    json!({"kind": "count", "p": c.p, "restricted": c.restricted, "counts": c.counts})
}

pub fn lct(l: &LctValue) -> Value {
    json!({"num": l.value.numer().to_string(), "den": l.value.denom().to_string(), "components": l.achieved_by})
}

fn unity(u: &UnityRat) -> Value {
    Value::Object(u.factors().iter().map(|(n, e)| (n.to_string(), json!(e))).collect())
}

pub fn monodromy(z: &UnityRat, p1: Option<&UnityRat>, eig: &EigenvalueSet, l: &LctValue) -> Value {
    let phi: BTreeMap<u64, i64> = z.phi_multiplicities();
    let p1 = p1.map(|p| {
        json!({
            "factors": unity(p),
            "phi_multiplicities": Value::Object(p.phi_multiplicities().iter().map(|(k, v)| (k.to_string(), json!(v))).collect()),
            "degree": p.degree(),
            "text": p.to_string(),
        })
    });
    json!({
        "kind": "monodromy",
        "zeta_factors": unity(z),
        "zeta_text": z.to_string(),
        "phi_multiplicities": Value::Object(phi.iter().map(|(k, v)| (k.to_string(), json!(v))).collect()),
        "p1": p1,
        "eigenvalue_orders": eig.orders(),
        "eigenvalue_sources": Value::Object(eig.provenance.iter().map(|(k, s)| (k.to_string(), json!(s.as_str()))).collect()),
        "lct": lct(l),
    })
}

pub fn lct_doc(l: &LctValue) -> Value {
    json!({"kind": "lct", "value": rat(&l.value), "lct": lct(l)})
}

pub fn check(r: &CheckReport) -> Value {
    let w = |ws: &[monolab_core::lab::Witness]| -> Value {
        ws.iter()
            .map(|w| json!({"subject": w.subject, "claim": w.claim, "holds": w.holds}))
            .collect()
    };
    json!({
        "name": r.name,
        "verdict": r.verdict.as_str(),
        "witnesses": w(&r.witnesses),
        "counterexample": r.counterexample.as_ref().map(|c| json!({
            "input": c.input,
            "resolution": c.resolution,
            "offending": w(&c.offending),
        })),
    })
}

pub fn checks(rs: &[CheckReport], min_locus: Option<&MinLocusReport>) -> Value {
    json!({
        "kind": "checks",
        "reports": rs.iter().map(check).collect::<Vec<_>>(),
        "min_locus": min_locus.map(|m| json!({
            "value": rat(&m.value),
            "locus": m.locus,
            "edges": m.edges,
            "connected": m.connected,
            "shape": m.shape.map(|s| s.as_str()),
            "monotone": m.monotone,
            "order_two_pole": m.order_two.as_ref().map(rat),
        })),
    })
}
