//! One line per acceptance criterion. Exits with a failure status if any
//! criterion fails.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use monolab::core::algebra::{LinForm, Rat, RatFunc1, UPoly, UnityRat};
use monolab::core::lab;
use monolab::core::monodromy::{acampo_zeta, char_poly_p1, lct};
use monolab::core::padic::{denef_zeta, good_prime_check, verify_padic, DEFAULT_COUNT_BUDGET};
use monolab::core::resolution::{resolve_affine, resolve_germ, resolve_germ_with, CurveSystem, Kind, ResolutionGraph, ResolveOptions, SncPoint};
use monolab::core::zeta::{poles, zeta_motivic_local, zeta_top, zeta_top_multi, Locality, ZetaOptions};
use monolab::core::Error;
use monolab::corpus::CORPUS;
use monolab::parse::parse_poly;

type Outcome = Result<String, String>;
type Data = Vec<(u64, u32)>;
type Edges = BTreeSet<(usize, usize)>;
type Criterion = (&'static str, fn() -> Outcome);
type Golden = (&'static str, Data, Vec<(usize, usize)>);

const CUSP: &str = "y^3-x^5";
const SECOND: &str = "(y^2-x^3)^2-x^6*y";

fn r(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

fn germ(text: &str) -> Result<ResolutionGraph, String> {
    let f = parse_poly(text).map_err(|e| e.to_string())?;
    resolve_germ(&CurveSystem::germ(f)).map_err(|e| e.to_string())
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn data_and_edges(g: &ResolutionGraph) -> (Data, Edges) {
    let mut data: Vec<(u64, u32)> = g.exceptional().map(|c| (g.total_n(c.id), c.nu)).collect();
    data.extend(g.strict().map(|c| (g.total_n(c.id), c.nu)));
    let edges = g.edges.iter().map(|e| (e.a.min(e.b), e.a.max(e.b))).collect();
    (data, edges)
}

fn resolution_goldens() -> Outcome {
    let cases: [Golden; 2] = [
        (CUSP, vec![(3, 2), (5, 3), (9, 5), (15, 8), (1, 1)], vec![(0, 4), (1, 3), (2, 4), (3, 4)]),
        (
            SECOND,
            vec![(4, 2), (6, 3), (12, 5), (14, 6), (15, 7), (30, 13), (1, 1)],
            vec![(0, 6), (1, 3), (2, 3), (3, 4), (4, 6), (5, 6)],
        ),
    ];
    let mut times = Vec::new();
    for (f, data, edges) in cases {
        let start = Instant::now();
        let g = germ(f)?;
        let t = start.elapsed();
        let (got, got_edges) = data_and_edges(&g);
        ensure(got == data, || format!("{}: data {:?}", f, got))?;
        let edges: Edges = edges.into_iter().collect();
        ensure(got_edges == edges, || format!("{}: edges {:?}", f, got_edges))?;
        ensure(t < Duration::from_secs(1), || format!("{} took {:?}", f, t))?;
        times.push(format!("{:?}", t));
    }
    Ok(format!("resolution times {}", times.join(", ")))
}

fn zeta_goldens() -> Outcome {
    let want = "(8+7s)/((1+s)(8+15s))";
    let local = zeta_top(&germ(CUSP)?, &ZetaOptions::local()).map_err(|e| e.to_string())?;
    ensure(local.to_string() == want, || format!("local {}", local))?;
    let g = resolve_affine(&CurveSystem::global(parse_poly(CUSP).unwrap())).map_err(|e| e.to_string())?;
    let global = zeta_top(&g, &ZetaOptions::global()).map_err(|e| e.to_string())?;
    ensure(global.to_string() == want, || format!("global {}", global))?;
    let z = zeta_top(&germ(SECOND)?, &ZetaOptions::local()).map_err(|e| e.to_string())?;
    let ps: BTreeSet<Rat> = poles(&z, None).poles().into_iter().collect();
    let want_ps: BTreeSet<Rat> = [r(-1, 1), r(-5, 12), r(-13, 30)].into_iter().collect();
    ensure(ps == want_ps, || format!("poles {:?}", ps))?;
    Ok(format!("Z_top = {}; poles {{-1, -5/12, -13/30}}", local))
}

fn monodromy_goldens() -> Outcome {
    let cusp = germ(CUSP)?;
    let z = acampo_zeta(&cusp, Locality::Local).map_err(|e| e.to_string())?;
    ensure(z == UnityRat::from_pairs([(15, 1), (3, -1), (5, -1)]), || format!("zeta_0 {}", z))?;
    let second = germ(SECOND)?;
    let p1 = char_poly_p1(&second).map_err(|e| e.to_string())?;
    let phi: BTreeMap<u64, i64> = [(6, 1), (10, 1), (12, 1), (30, 1)].into_iter().collect();
    ensure(p1.phi_multiplicities() == phi, || format!("P1 {:?}", p1.phi_multiplicities()))?;
    ensure(p1.degree() == 18, || format!("P1 degree {}", p1.degree()))?;
    let poly = p1.to_polynomial().ok_or_else(|| String::from("P1 is not a polynomial"))?;
    ensure(poly.degree() == Some(18), || format!("P1 has degree {:?}", poly.degree()))?;
    // squarefree, so the 18 zeros are distinct
    ensure(poly.gcd(&poly.derivative()).degree() == Some(0), || String::from("P1 has a repeated zero"))?;
    let l1 = lct(&cusp, Locality::Local).map_err(|e| e.to_string())?.value;
    let l2 = lct(&second, Locality::Local).map_err(|e| e.to_string())?.value;
    ensure(l1 == r(8, 15) && l2 == r(5, 12), || format!("lct {} {}", l1, l2))?;
    Ok(format!("zeta_0 = {}; P1 = Phi30 Phi12 Phi10 Phi6; lct {} and {}", z, l1, l2))
}

fn denef_vs_counts() -> Outcome {
    let mut summary = Vec::new();
    for f in ["x", "x*y", "y^2-x^3", CUSP, SECOND] {
        let poly = parse_poly(f).unwrap();
        let mut verified = Vec::new();
        for p in [5u64, 7, 11, 13] {
            let start = Instant::now();
            match verify_padic(&CurveSystem::germ(poly.clone()), p, 4, DEFAULT_COUNT_BUDGET) {
                Ok(v) => {
                    let t = start.elapsed();
                    ensure(v.verified, || format!("{} at p = {}: mismatch at i = {:?}", f, p, v.first_mismatch))?;
                    ensure(t < Duration::from_secs(60), || format!("{} at p = {} took {:?}", f, p, t))?;
                    verified.push(p);
                }
                Err(Error::BadPrime { .. }) => {}
                Err(e) => return Err(format!("{} at p = {}: {}", f, p, e)),
            }
        }
        ensure(verified.len() >= 2, || format!("{}: only {:?} verified", f, verified))?;
        summary.push(format!("{} {:?}", f, verified));
    }
    Ok(summary.join("; "))
}

fn denef_cancellation() -> Outcome {
    let g = resolve_affine(&CurveSystem::global(parse_poly(CUSP).unwrap())).map_err(|e| e.to_string())?;
    let want = "(p^(1+s)-1)(p^(8+15s)-1)";
    for p in [5, 7, 11, 13] {
        let z = denef_zeta(&g, p, Locality::Global).map_err(|e| e.to_string())?;
        let d = z.denominator_string("p");
        ensure(d == want, || format!("p = {}: {}", p, d))?;
    }
    Ok(format!("global denominator {}", want))
}

fn form_variants() -> Outcome {
    let f = parse_poly(CUSP).unwrap();
    let mut residues = BTreeSet::new();
    for j in 1..=4i64 {
        for k in 1..=2i64 {
            let form = parse_poly(&format!("x^{}*y^{}", j - 1, k - 1)).unwrap();
            let g = resolve_germ(&CurveSystem::germ(f.clone()).with_form(form)).map_err(|e| e.to_string())?;
            let z = zeta_top(&g, &ZetaOptions::local()).map_err(|e| e.to_string())?;
            let a = 3 * j + 5 * k;
            let num = UPoly::new(vec![r(a, j * k), r(a - j * k, j * k)]);
            let want = RatFunc1::new(num, vec![(LinForm::new(1, vec![1]), 1), (LinForm::new(a, vec![15]), 1)])
                .map_err(|e| e.to_string())?
                .normalize();
            ensure(z == want, || format!("(j, k) = ({}, {}): {} against {}", j, k, z, want))?;
            let s = r(-a, 15);
            ensure(poles(&z, None).poles().contains(&s), || format!("{} is not a pole for ({}, {})", s, j, k))?;
            residues.insert(a.rem_euclid(15));
        }
    }
    let units: BTreeSet<i64> = (1..15).filter(|u| u % 3 != 0 && u % 5 != 0).collect();
    ensure(residues == units, || format!("residues {:?}", residues))?;
    Ok(String::from("8 forms; exp(2 pi i s_jk) are the 8 primitive 15th roots of unity"))
}

fn property_suite() -> Outcome {
    let start = Instant::now();
    let mut checks = 0usize;
    for e in CORPUS {
        let name = e.name;
        let single = resolve_germ(&CurveSystem::germ(e.poly().unwrap())).map_err(|x| format!("{}: {}", name, x))?;
        let labelled = resolve_germ(&e.labelled().unwrap()).map_err(|x| format!("{}: {}", name, x))?;
        // relations, inequalities, residues, pole determination, min locus,
        // order-two poles, monodromy and holomorphy
        for rep in lab::check_all(&single, ResolveOptions::default()).map_err(|x| format!("{}: {}", name, x))? {
            ensure(rep.passed(), || format!("{}: {} failed", name, rep.name))?;
            checks += 1;
        }
        let z = zeta_top(&single, &ZetaOptions::local()).unwrap();
        let mut at: Vec<SncPoint> = (0..single.edges.len()).map(SncPoint::Edge).collect();
        at.extend(single.components.iter().filter(|c| c.kind == Kind::Exceptional).map(|c| SncPoint::OnComponent(c.id)));
        for p in at {
            let h = single.blow_up_snc_point(p).unwrap();
            ensure(zeta_top(&h, &ZetaOptions::local()).unwrap() == z, || format!("{}: blow-up at {:?}", name, p))?;
            checks += 1;
        }
        let (zm, _) = zeta_top_multi(&labelled, &ZetaOptions::local()).unwrap();
        let diag = vec![LinForm::new(0, vec![1]); e.factors.len()];
        let z1 = RatFunc1::from_multi(zm.substitute(&diag).unwrap()).unwrap().normalize();
        ensure(z1 == z, || format!("{}: multivariate diagonal {}", name, z1))?;
        let mz = zeta_motivic_local(&single).unwrap();
        ensure(mz.topological().unwrap() == z, || format!("{}: motivic to topological", name))?;
        for p in [5u64, 7, 11, 13].into_iter().filter(|&p| good_prime_check(&single, p).is_good()) {
            let d = denef_zeta(&single, p, Locality::Local).unwrap();
            let l = Rat::from_integer((p as i64).into());
            ensure(mz.series_at(&l, 6).unwrap() == d.series(6).unwrap(), || format!("{}: motivic at L = {}", name, p))?;
        }
        checks += 3;
    }
    let t = start.elapsed();
    ensure(CORPUS.len() >= 20, || format!("corpus has {} germs", CORPUS.len()))?;
    ensure(t < Duration::from_secs(300), || format!("took {:?}", t))?;
    Ok(format!("{} germs, {} checks in {:?}", CORPUS.len(), checks, t))
}

fn negative_paths() -> Outcome {
    match germ("y^2-2*x^2") {
        Err(e) if e.starts_with("NonRationalCenter") => {}
        other => return Err(format!("y^2-2x^2 gave {:?}", other.map(|g| g.components.len()))),
    }
    let f = CurveSystem::germ(parse_poly(CUSP).unwrap());
    match resolve_germ_with(&f, ResolveOptions { budget: 3 }) {
        Err(Error::BudgetExceeded(3)) => {}
        other => return Err(format!("budget 3 gave {:?}", other.map(|g| g.blowup_log.len()))),
    }
    resolve_germ_with(&f, ResolveOptions { budget: 4 }).map_err(|e| e.to_string())?;
    Ok(String::from("NonRationalCenter for y^2-2x^2; budget 3 < 4 blow-ups refused"))
}

fn main() {
    let criteria: &[Criterion] = &[
        ("resolution goldens", resolution_goldens),
        ("zeta goldens", zeta_goldens),
        ("monodromy goldens", monodromy_goldens),
        ("Denef formula against counts", denef_vs_counts),
        ("Denef cancellation", denef_cancellation),
        ("differential form variants", form_variants),
        ("corpus property suite", property_suite),
        ("negative paths", negative_paths),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(f).unwrap_or_else(|_| Err(String::from("panicked")));
        let t = start.elapsed();
        match outcome {
            Ok(detail) => println!("PASS {} {} ({:.2?}): {}", i + 1, name, t, detail),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {} ({:.2?}): {}", i + 1, name, t, why);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
