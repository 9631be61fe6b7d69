use super::*;
use crate::algebra::rat::{int, rat};
use crate::algebra::MPoly;
use crate::resolution::{resolve_affine, resolve_germ, CurveSystem, Kind};
use proptest::prelude::*;

fn poly(terms: &[(i64, u32, u32)]) -> MPoly {
    MPoly::from_terms(2, terms.iter().map(|&(c, a, b)| (alloc::vec![a, b], int(c))))
}

fn cusp35() -> MPoly {
    poly(&[(1, 0, 3), (-1, 5, 0)])
}

fn second_example() -> MPoly {
    let c = poly(&[(1, 0, 2), (-1, 3, 0)]);
    &c * &c - poly(&[(1, 6, 1)])
}

fn germ(f: MPoly) -> ResolutionGraph {
    resolve_germ(&CurveSystem::germ(f)).unwrap()
}

fn phis(pairs: &[(u64, i64)]) -> BTreeMap<u64, i64> {
    pairs.iter().copied().collect()
}

#[test]
fn cusp_zeta_and_p1() {
    let g = germ(cusp35());
    let z = acampo_zeta(&g, Locality::Local).unwrap();
    assert_eq!(z, UnityRat::from_pairs([(15, 1), (3, -1), (5, -1)]));
    let p = char_poly_p1(&g).unwrap();
    assert_eq!(p.degree(), 8);
    assert_eq!(p.phi_multiplicities(), phis(&[(15, 1)]));
    assert_eq!(milnor_number(&g).unwrap(), 8);
}

#[test]
fn second_example_p1() {
    let g = germ(second_example());
    let z = acampo_zeta(&g, Locality::Local).unwrap();
    assert_eq!(z, UnityRat::from_pairs([(30, 1), (12, 1), (15, -1), (6, -1), (4, -1)]));
    let p = char_poly_p1(&g).unwrap();
    assert_eq!(p.phi_multiplicities(), phis(&[(6, 1), (10, 1), (12, 1), (30, 1)]));
    assert_eq!(p.degree(), 18);
}

#[test]
fn normal_crossings() {
    assert!(acampo_zeta(&germ(poly(&[(1, 1, 1)])), Locality::Local).unwrap().is_one());
    let node = germ(poly(&[(1, 0, 2), (-1, 2, 0)]));
    assert!(acampo_zeta(&node, Locality::Local).unwrap().is_one());
    assert_eq!(char_poly_p1(&node).unwrap(), UnityRat::t_minus_one());
    // smooth germ: contractible Milnor fibre
    let smooth = germ(poly(&[(1, 1, 0)]));
    assert_eq!(acampo_zeta(&smooth, Locality::Local).unwrap(), UnityRat::from_pairs([(1, -1)]));
    assert!(char_poly_p1(&smooth).unwrap().is_one());
}

#[test]
fn eigenvalue_orders() {
    let set = |f| eigenvalue_orders_near(&germ(f)).unwrap().orders().into_iter().collect::<Vec<_>>();
    assert_eq!(set(cusp35()), [1, 15]);
    assert_eq!(set(second_example()), [1, 6, 10, 12, 30]);
    let e = eigenvalue_orders_near(&germ(poly(&[(1, 2, 3)]))).unwrap();
    assert_eq!(e.orders().into_iter().collect::<Vec<_>>(), [1, 2, 3]);
    assert_eq!(e.provenance[&3], EigenSource::SmoothPoint);
    let e = eigenvalue_orders_near(&germ(cusp35())).unwrap();
    assert_eq!(e.provenance[&15], EigenSource::ZetaZero);
    assert_eq!(e.provenance[&1], EigenSource::ZetaPole);
}

#[test]
fn log_canonical_thresholds() {
    let l = lct(&germ(cusp35()), Locality::Local).unwrap();
    assert_eq!(l.value, rat(8, 15));
    assert_eq!(l.achieved_by, [4]);
    let l = lct(&germ(second_example()), Locality::Local).unwrap();
    assert_eq!(l.value, rat(5, 12));
    assert_eq!(lct(&germ(poly(&[(1, 1, 0)])), Locality::Local).unwrap().value, int(1));
    let g = resolve_affine(&CurveSystem::global(cusp35())).unwrap();
    assert_eq!(lct(&g, Locality::Global).unwrap().value, rat(8, 15));
    assert!(lct(&g, Locality::Local).is_err());
}

#[test]
fn non_reduced_germs() {
    let c = poly(&[(1, 0, 2), (-1, 3, 0)]);
    let g = germ(&c * &c);
    assert!(matches!(char_poly_p1(&g), Err(Error::NotIsolated(_))));
    let e = eigenvalue_orders_near(&g).unwrap();
    assert!(e.contains(2));
}

#[test]
fn forms_are_rejected() {
    let g = resolve_germ(&CurveSystem::germ(cusp35()).with_form(poly(&[(1, 1, 0)]))).unwrap();
    assert!(acampo_zeta(&g, Locality::Local).is_err());
}

#[test]
fn global_zeta_of_the_cusp() {
    // the strict transform is a line minus one point, so chi = 0
    let g = resolve_affine(&CurveSystem::global(cusp35())).unwrap();
    let z = acampo_zeta(&g, Locality::Global).unwrap();
    assert_eq!(z, acampo_zeta(&germ(cusp35()), Locality::Local).unwrap());
    let mut stripped = g.clone();
    stripped.euler = None;
    assert!(matches!(acampo_zeta(&stripped, Locality::Global), Err(Error::MissingEulerData(_))));
}

#[test]
fn factored_form_matches_expansion() {
    for f in [cusp35(), second_example()] {
        let z = acampo_zeta(&germ(f), Locality::Local).unwrap();
        let (n, d) = z.expand();
        let t = int(2);
        assert_eq!(z.eval(&t).unwrap(), n.eval(&t) / d.eval(&t));
    }
}

/// `delta` from the multiplicity sequence of the blow-ups, plus one for
/// each ordinary double point left as it is.
fn delta(g: &ResolutionGraph) -> u64 {
    let nodes = g.edges.iter().filter(|e| g.components[e.a].kind == Kind::Strict && g.components[e.b].kind == Kind::Strict).count() as u64;
    let blown: u64 = g
        .blowup_log
        .iter()
        .map(|r| u64::from(r.strict_multiplicity_at_center))
        .map(|m| m * m.saturating_sub(1) / 2)
        .sum();
    blown + nodes
}

fn branch_pair() -> impl Strategy<Value = MPoly> {
    let curve = (1u32..4, 1u32..6, prop::sample::select(alloc::vec![-1i64, 1, 2]));
    (curve.clone(), curve).prop_map(|((a, b, c), (d, e, k))| {
        let f1 = poly(&[(1, 0, a), (-c, b, 0)]);
        let f2 = poly(&[(1, 0, d), (-k, e, 0)]);
        &f1 * &f2
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn brieskorn_pham_milnor_numbers(a in 2u32..6, b in 2u32..8) {
        prop_assume!(crate::algebra::rat::gcd_u64(u64::from(a), u64::from(b)) == 1);
        let g = germ(poly(&[(1, 0, a), (-1, b, 0)]));
        let (a, b) = (u64::from(a), u64::from(b));
        prop_assert_eq!(milnor_number(&g).unwrap(), (a - 1) * (b - 1));
        let want = UnityRat::from_pairs([(a * b, 1), (a, -1), (b, -1), (1, 1)]);
        prop_assert_eq!(char_poly_p1(&g).unwrap(), want);
    }

    #[test]
    fn milnor_formula(f in branch_pair()) {
        prop_assume!(crate::algebra::bivariate::is_squarefree(&f));
        let g = resolve_germ(&CurveSystem::germ(f));
        prop_assume!(g.is_ok());
        let g = g.unwrap();
        let r = g.strict().count() as u64;
        prop_assert_eq!(milnor_number(&g).unwrap() + r, 2 * delta(&g) + 1);
    }

    #[test]
    fn lct_is_minus_the_largest_pole(f in branch_pair()) {
        let g = resolve_germ(&CurveSystem::germ(f));
        prop_assume!(g.is_ok());
        let g = g.unwrap();
        let z = crate::zeta::zeta_top(&g, &crate::zeta::ZetaOptions::local()).unwrap();
        let poles = crate::zeta::poles(&z, None).poles();
        let l = lct(&g, Locality::Local).unwrap();
        prop_assert_eq!(-poles.last().unwrap().clone(), l.value);
    }
}
