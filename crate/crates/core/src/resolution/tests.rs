use super::*;
use crate::algebra::rat::int;

fn poly(terms: &[(i64, u32, u32)]) -> MPoly {
    MPoly::from_terms(2, terms.iter().map(|&(c, a, b)| (vec![a, b], int(c))))
}

fn cusp35() -> MPoly {
    poly(&[(1, 0, 3), (-1, 5, 0)])
}

fn second_example() -> MPoly {
    // (y^2 - x^3)^2 - x^6 y
    let c = poly(&[(1, 0, 2), (-1, 3, 0)]);
    &c * &c - poly(&[(1, 6, 1)])
}

fn data(g: &ResolutionGraph) -> Vec<(u64, u32)> {
    g.components.iter().map(|c| (g.total_n(c.id), c.nu)).collect()
}

fn edge_set(g: &ResolutionGraph) -> Vec<(usize, usize)> {
    let mut v: Vec<_> = g.edges.iter().map(|e| (e.a, e.b)).collect();
    v.sort();
    v
}

#[test]
fn multiplicity_examples() {
    assert_eq!(multiplicity_at(&cusp35(), (&int(0), &int(0))), 3);
    assert_eq!(multiplicity_at(&poly(&[(1, 1, 1)]), (&int(0), &int(0))), 2);
    assert_eq!(multiplicity_at(&poly(&[(1, 1, 0), (-1, 0, 0)]), (&int(1), &int(0))), 1);
}

#[test]
fn cusp_3_5() {
    let g = resolve_germ(&CurveSystem::germ(cusp35())).unwrap();
    assert_eq!(data(&g), [(1, 1), (3, 2), (5, 3), (9, 5), (15, 8)]);
    assert_eq!(edge_set(&g), [(0, 4), (1, 3), (2, 4), (3, 4)]);
    let si: Vec<_> = g.exceptional().map(|c| c.self_int.unwrap()).collect();
    assert_eq!(si, [-3, -3, -2, -1]);
    assert_eq!(g.fiber, [1, 2, 3, 4]);
}

#[test]
fn second_example_data() {
    let g = resolve_germ(&CurveSystem::germ(second_example())).unwrap();
    assert_eq!(
        data(&g),
        [(1, 1), (4, 2), (6, 3), (12, 5), (14, 6), (15, 7), (30, 13)]
    );
    assert_eq!(edge_set(&g), [(0, 6), (1, 3), (2, 3), (3, 4), (4, 6), (5, 6)]);
}

#[test]
fn identity_resolutions() {
    let g = resolve_germ(&CurveSystem::germ(poly(&[(1, 1, 1)]))).unwrap();
    assert!(g.blowup_log.is_empty());
    assert_eq!(data(&g), [(1, 1), (1, 1)]);
    assert_eq!(edge_set(&g), [(0, 1)]);
    let g = resolve_germ(&CurveSystem::germ(poly(&[(1, 1, 0)]))).unwrap();
    assert_eq!(data(&g), [(1, 1)]);
    assert!(g.edges.is_empty());
    // a node of an irreducible cubic stays unresolved in germ mode
    let g = resolve_germ(&CurveSystem::germ(poly(&[(1, 0, 2), (-1, 2, 0), (-1, 3, 0)]))).unwrap();
    assert!(g.blowup_log.is_empty());
    assert_eq!(g.strict().count(), 2);
}

#[test]
fn nonreduced_input() {
    let f = poly(&[(1, 2, 3)]);
    let g = resolve_germ(&CurveSystem::germ(f)).unwrap();
    assert_eq!(data(&g), [(2, 1), (3, 1)]);
    let c = poly(&[(1, 0, 2), (-1, 3, 0)]);
    let g = resolve_germ(&CurveSystem::germ(&c * &c)).unwrap();
    assert_eq!(data(&g), [(2, 1), (4, 2), (6, 3), (12, 5)]);
}

#[test]
fn irrational_center_is_an_error() {
    let f = poly(&[(1, 0, 2), (-2, 2, 0)]);
    let e = resolve_germ(&CurveSystem::germ(f)).unwrap_err();
    assert!(matches!(e, Error::NonRationalCenter(_)));
}

#[test]
fn budget_is_honoured() {
    let e = resolve_germ_with(&CurveSystem::germ(cusp35()), ResolveOptions { budget: 2 }).unwrap_err();
    assert_eq!(e, Error::BudgetExceeded(2));
}

#[test]
fn not_a_germ() {
    let f = poly(&[(1, 1, 0), (-1, 0, 0)]);
    assert_eq!(resolve_germ(&CurveSystem::germ(f)).unwrap_err(), Error::NotAGerm);
}

#[test]
fn germ_away_from_origin() {
    // (y - 1)^3 - (x - 2)^5 at (2, 1)
    let x = MPoly::var(2, 0) - MPoly::constant(2, int(2));
    let y = MPoly::var(2, 1) - MPoly::constant(2, int(1));
    let f = y.pow(3) - x.pow(5);
    let g = resolve_germ(&CurveSystem::germ_at(f, int(2), int(1))).unwrap();
    assert_eq!(data(&g), [(1, 1), (3, 2), (5, 3), (9, 5), (15, 8)]);
}

fn chi_map(g: &ResolutionGraph) -> Vec<(Vec<usize>, i64)> {
    g.global_strata().unwrap().into_iter().map(|s| (s.comps, s.chi)).collect()
}

#[test]
fn global_cusp_euler_data() {
    let g = resolve_affine(&CurveSystem::global(cusp35())).unwrap();
    assert_eq!(data(&g), [(1, 1), (3, 2), (5, 3), (9, 5), (15, 8)]);
    let chi = chi_map(&g);
    assert_eq!(chi[0], (vec![], 0));
    assert_eq!(chi[1], (vec![0], 0));
    assert_eq!(chi[4], (vec![3], 0));
}

#[test]
fn global_axes() {
    let g = resolve_affine(&CurveSystem::global(poly(&[(1, 1, 1)]))).unwrap();
    assert_eq!(chi_map(&g), [(vec![], 0), (vec![0], 0), (vec![1], 0), (vec![0, 1], 1)]);
    let g = resolve_affine(&CurveSystem::global(poly(&[(1, 2, 0), (-1, 0, 2)]))).unwrap();
    let chi = chi_map(&g);
    assert_eq!(chi[0].1, 0);
    assert_eq!(g.critical_points, [(int(0), int(0))]);
}

#[test]
fn global_several_singular_points() {
    // (y^2 - x^3) * (y - x): the line passes through the cusp and meets
    // the curve again transversally at (1, 1).
    let f = &poly(&[(1, 0, 2), (-1, 3, 0)]) * &poly(&[(1, 0, 1), (-1, 1, 0)]);
    let g = resolve_affine(&CurveSystem::global(f)).unwrap();
    assert_eq!(g.critical_points, [(int(0), int(0)), (int(1), int(1))]);
    let strata = g.global_strata().unwrap();
    let total: i64 = strata.iter().map(|s| s.chi).sum();
    // chi(Y) = chi(A^2) + number of blow-ups
    assert_eq!(total, 1 + g.blowup_log.len() as i64);
}

#[test]
fn irrational_intersections_are_an_error() {
    // y = 1 meets y^2 = x^3 where x^3 = 1
    let f = &poly(&[(1, 0, 2), (-1, 3, 0)]) * &poly(&[(1, 0, 1), (-1, 0, 0)]);
    let e = resolve_affine(&CurveSystem::global(f)).unwrap_err();
    assert!(matches!(e, Error::NonRationalCenter(_)));
}

#[test]
fn step_override_preserves_relations() {
    let g = resolve_germ(&CurveSystem::germ(cusp35())).unwrap();
    let h = g.blow_up_snc_point(SncPoint::Edge(0)).unwrap();
    assert_eq!(h.components.len(), 6);
    let last = h.components.last().unwrap();
    let (a, b) = (g.edges[0].a, g.edges[0].b);
    assert_eq!(u64::from(last.nu), u64::from(g.components[a].nu + g.components[b].nu));
}

#[test]
fn exceptional_tree() {
    for f in [cusp35(), second_example()] {
        let g = resolve_germ(&CurveSystem::germ(f)).unwrap();
        let exc: Vec<usize> = g.exceptional().map(|c| c.id).collect();
        let inner = g
            .edges
            .iter()
            .filter(|e| exc.contains(&e.a) && exc.contains(&e.b))
            .count();
        assert_eq!(inner + 1, exc.len());
        let first = g.exceptional().next().unwrap();
        assert_eq!(first.nu, 2);
    }
}

#[test]
fn dot_output() {
    let g = resolve_germ(&CurveSystem::germ(cusp35())).unwrap();
    let d = g.to_dot();
    assert_eq!(d.matches("label=").count(), 5);
    assert_eq!(d.matches(" strict\"").count(), 1);
    assert_eq!(d.matches(" -- ").count(), 4);
    assert!(d.contains("E4 (15,8) 8/15 [-1]"));
}

#[test]
fn affine_euler_characteristics() {
    let nodal = poly(&[(1, 0, 2), (-1, 2, 0), (-1, 3, 0)]);
    let cases = [
        (poly(&[(1, 1, 0), (1, 0, 1)]), 1),
        (poly(&[(1, 0, 2), (-1, 3, 0)]), 1),
        (cusp35(), 1),
        (poly(&[(1, 1, 1), (-1, 0, 0)]), 0),
        (poly(&[(1, 2, 0), (1, 0, 2), (-1, 0, 0)]), 0),
        (poly(&[(1, 2, 0), (-2, 0, 2), (-1, 0, 0)]), 0),
        (poly(&[(1, 0, 2), (-1, 3, 0), (-1, 1, 0)]), -1),
        (nodal, 0),
        // four sheets over x, all meeting over 0, one double point over each root of 27x^3 + 256
        (second_example(), -2),
    ];
    for (f, chi) in cases {
        assert_eq!(affine_euler_characteristic(&f).unwrap(), chi, "{}", f.to_string_with(&["x", "y"]));
    }
    assert!(affine_euler_characteristic(&poly(&[(1, 0, 2)])).is_err());
}
