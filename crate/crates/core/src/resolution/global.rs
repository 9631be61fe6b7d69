//! Resolution of a whole affine plane curve: singular and intersection
//! points, germ resolutions there, and Euler characteristics of the strict
//! transforms from the degree-genus formula.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::engine::{Engine, LocalAtom, PointPath, Ref};
use super::{
    check_input, labels_of, BlowupRecord, Component, CurveSystem, Edge, EulerData, Kind, ResolutionGraph,
    ResolveOptions,
};
use crate::algebra::bivariate::{coprime_base, gcd, principal_subresultants_y, resultant_y, specialize_x};
use crate::algebra::roots::upoly_rational_roots;
use crate::algebra::{MPoly, Rat, UPoly};
use crate::error::{Error, Result};

/// Branches and delta invariant of one atom at its points at infinity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InfinityData {
    pub places: u64,
    pub delta: u64,
}

fn small_rationals() -> impl Iterator<Item = Rat> {
    (0i64..).flat_map(|k| [k, -k - 1]).map(|v| Rat::from_integer(v.into()))
}

fn top_form_at(g: &MPoly, a: &Rat) -> Rat {
    let d = g.total_degree().unwrap_or(0);
    g.homogeneous_part(d).eval(&[a.clone(), Rat::one()])
}

/// `g(X + a Y, Y)`
fn shear(g: &MPoly, a: &Rat) -> MPoly {
    let x = MPoly::var(2, 0) + MPoly::var(2, 1).scale(a);
    g.compose(&[x, MPoly::var(2, 1)])
}

fn rational_roots_checked(p: &UPoly, what: &str) -> Result<Vec<Rat>> {
    if p.is_zero() {
        return Err(Error::Invalid(format!("degenerate system while locating {}", what)));
    }
    let roots = upoly_rational_roots(p);
    let sq = p.squarefree_part();
    if roots.len() != sq.degree().unwrap_or(0) {
        return Err(Error::NonRationalCenter(format!("{} are not all rational", what)));
    }
    Ok(roots.into_iter().map(|(r, _)| r).collect())
}

/// Common zeros of `eqs`, where `eqs[0]` is coprime to each of `eqs[1..k]`
/// and the abscissae are read off the gcd of the resultants with those.
fn common_zeros(eqs: &[MPoly], k: usize, what: &str) -> Result<Vec<(Rat, Rat)>> {
    let a = small_rationals()
        .find(|a| eqs[..k].iter().all(|g| g.is_constant() || !top_form_at(g, a).is_zero()))
        .unwrap();
    let sheared: Vec<MPoly> = eqs.iter().map(|g| shear(g, &a)).collect();
    let mut r = UPoly::zero();
    for h in &sheared[1..k] {
        r = r.gcd(&resultant_y(&sheared[0], h));
    }
    let mut out = Vec::new();
    if r.degree() == Some(0) {
        return Ok(out);
    }
    for x0 in rational_roots_checked(&r, what)? {
        let mut g = UPoly::zero();
        for h in &sheared {
            g = g.gcd(&specialize_x(h, &x0));
        }
        if g.degree().unwrap_or(0) == 0 {
            continue;
        }
        for y0 in rational_roots_checked(&g, what)? {
            out.push((&x0 + &a * &y0, y0));
        }
    }
    Ok(out)
}

fn singular_points(g: &MPoly) -> Result<Vec<(Rat, Rat)>> {
    if g.total_degree().unwrap_or(0) < 2 {
        return Ok(Vec::new());
    }
    let gx = g.derivative(0);
    let gy = g.derivative(1);
    let mut eqs = vec![g.clone()];
    // Distinct positive slopes avoid the coincidences that symmetric
    // choices such as +-1 produce for curves symmetric in one variable.
    for lambda in [1i64, 3, 7, 13, 29, 53, 101, 211].map(|v| Rat::from_integer(v.into())) {
        let d = &gx + &gy.scale(&lambda);
        if d.is_zero() {
            continue;
        }
        if d.is_constant() {
            return Ok(Vec::new());
        }
        if gcd(g, &d).is_constant() {
            eqs.push(d);
        }
        if eqs.len() == 4 {
            break;
        }
    }
    let k = eqs.len();
    if k == 1 {
        return Err(Error::Invalid(String::from("could not separate singular points")));
    }
    eqs.push(gx);
    eqs.push(gy);
    common_zeros(&eqs, k, "singular points")
}

/// Singular points of the atoms and their pairwise intersections, sorted.
pub fn critical_points(atoms: &[MPoly]) -> Result<Vec<(Rat, Rat)>> {
    let mut pts = Vec::new();
    for g in atoms {
        pts.extend(singular_points(g)?);
    }
    for i in 0..atoms.len() {
        for j in i + 1..atoms.len() {
            let eqs = [atoms[i].clone(), atoms[j].clone()];
            pts.extend(common_zeros(&eqs, 2, "intersection points")?);
        }
    }
    pts.sort();
    pts.dedup();
    Ok(pts)
}

/// Local equations at the points at infinity of the closure of `g`.
fn infinity_germs(g: &MPoly) -> Result<Vec<MPoly>> {
    let d = g.total_degree().unwrap();
    let q = {
        let top = g.homogeneous_part(d);
        let mut c = Vec::new();
        for (e, v) in top.terms() {
            let k = e[1] as usize;
            if c.len() <= k {
                c.resize(k + 1, Rat::zero());
            }
            c[k] = v.clone();
        }
        UPoly::new(c)
    };
    let roots = upoly_rational_roots(&q);
    let rational: u32 = roots.iter().map(|(_, k)| *k).sum();
    if rational as usize != q.degree().unwrap_or(0) {
        return Err(Error::NonRationalInfinity(format!(
            "points at infinity of {} are not rational",
            g.to_string_with(&["x", "y"])
        )));
    }
    let mut out = Vec::new();
    // X = 1: terms x^a y^b -> Y^b Z^(d-a-b)
    let affine_y = MPoly::from_terms(2, g.terms().map(|(e, c)| (vec![e[1], d - e[0] - e[1]], c.clone())));
    for (c, _) in roots {
        out.push(affine_y.translate(&[c, Rat::zero()]));
    }
    if (rational as usize) < d as usize {
        // Y = 1: terms x^a y^b -> X^a Z^(d-a-b)
        out.push(MPoly::from_terms(2, g.terms().map(|(e, c)| (vec![e[0], d - e[0] - e[1]], c.clone()))));
    }
    Ok(out)
}

pub(crate) fn infinity_data(g: &MPoly, budget: u64) -> Result<InfinityData> {
    let exps = [vec![1u32]];
    let mut places = 0;
    let mut delta = 0;
    for h in infinity_germs(g)? {
        let mut eng = Engine::new(&exps, 1, false, budget);
        eng.run(
            PointPath {
                base: (Rat::zero(), Rat::zero()),
                steps: Vec::new(),
            },
            vec![LocalAtom { atom: 0, eq: h }],
        )?;
        places += eng.branches.len() as u64;
        delta += eng.delta[0];
    }
    Ok(InfinityData { places, delta })
}

/// Euler characteristic of the affine curve `g = 0` for squarefree `g`,
/// from a projection that is finite after a shear: `d` points over a
/// generic abscissa, minus `deg gcd(g, g_y)` at each special one. The total
/// defect is `sum_k #roots(gcd(psc_0, ..., psc_(k-1)))` over the principal
/// subresultant coefficients of `g` and `g_y`, which stays over `Q`.
pub fn affine_euler_characteristic(g: &MPoly) -> Result<i64> {
    let d = g.total_degree().unwrap_or(0);
    if d == 0 {
        return Ok(0);
    }
    if d == 1 {
        return Ok(1);
    }
    let a = small_rationals().find(|a| !top_form_at(g, a).is_zero()).unwrap();
    let h = shear(g, &a);
    let psc = principal_subresultants_y(&h, &h.derivative(1));
    let mut defect = 0i64;
    let mut acc = UPoly::zero();
    for p in &psc {
        acc = acc.gcd(p);
        if acc.is_zero() {
            return Err(Error::Invalid(String::from("curve is not reduced")));
        }
        defect += acc.squarefree_part().degree().unwrap_or(0) as i64;
    }
    Ok(i64::from(d) - defect)
}

pub(crate) fn resolve_affine(
    c: &CurveSystem,
    opts: ResolveOptions,
    overrides: &BTreeMap<usize, i64>,
) -> Result<ResolutionGraph> {
    check_input(c)?;
    let polys: Vec<MPoly> = c.factors.iter().map(|f| f.poly.clone()).collect();
    let atoms = coprime_base(&polys);
    let atom_polys: Vec<MPoly> = atoms.iter().map(|a| a.poly.clone()).collect();
    let crit = critical_points(&atom_polys)?;
    let exps: Vec<Vec<u32>> = atoms.iter().map(|a| a.exps.clone()).collect();
    let mut eng = Engine::new(&exps, c.factors.len(), false, opts.budget);
    for pt in &crit {
        let shift = [pt.0.clone(), pt.1.clone()];
        let local: Vec<LocalAtom> = atom_polys
            .iter()
            .enumerate()
            .filter(|(_, g)| g.eval(&shift).is_zero())
            .map(|(i, g)| LocalAtom {
                atom: i,
                eq: g.translate(&shift),
            })
            .collect();
        eng.run(
            PointPath {
                base: pt.clone(),
                steps: Vec::new(),
            },
            local,
        )?;
    }
    let na = atoms.len();
    let map = |r: Ref| match r {
        Ref::Branch(b) => eng.branches[b].atom,
        Ref::Exc(i) => na + i,
    };
    let mut components = Vec::new();
    for (i, a) in atoms.iter().enumerate() {
        components.push(Component {
            id: i,
            kind: Kind::Strict,
            n: a.exps.clone(),
            nu: 1,
            self_int: None,
            birth_index: i,
            atom: Some(i),
        });
    }
    for (i, e) in eng.exc.iter().enumerate() {
        components.push(Component {
            id: na + i,
            kind: Kind::Exceptional,
            n: e.n.clone(),
            nu: e.nu,
            self_int: Some(e.self_int),
            birth_index: i,
            atom: None,
        });
    }
    let edges: Vec<Edge> = eng
        .edges
        .iter()
        .map(|(a, b, p)| {
            let (a, b) = (map(*a), map(*b));
            Edge {
                a: a.min(b),
                b: a.max(b),
                point: p.clone(),
            }
        })
        .collect();
    let mut strict_base_chi = BTreeMap::new();
    let mut warnings = Vec::new();
    for (i, g) in atom_polys.iter().enumerate() {
        if overrides.contains_key(&i) {
            continue;
        }
        let d = i64::from(g.total_degree().unwrap());
        let chi = match infinity_data(g, opts.budget) {
            Ok(inf) => {
                let delta = (eng.delta[i] + inf.delta) as i64;
                2 - (d - 1) * (d - 2) + 2 * delta - inf.places as i64
            }
            Err(Error::NonRationalCenter(_)) | Err(Error::NonRationalInfinity(_)) => {
                // The normalization adds r - 1 points over a point with r
                // branches, and each branch of a resolved critical point is
                // one puncture.
                let on_curve = crit.iter().filter(|pt| g.eval(&[pt.0.clone(), pt.1.clone()]).is_zero()).count() as i64;
                let valence = edges.iter().filter(|e| e.a == i || e.b == i).count() as i64;
                warnings.push(format!(
                    "Euler characteristic of atom {} computed by projection: the closure has irrational points",
                    i
                ));
                affine_euler_characteristic(g)? - on_curve + valence
            }
            Err(e) => return Err(e),
        };
        strict_base_chi.insert(i, chi);
    }
    let blowup_log = eng
        .log
        .iter()
        .map(|r| BlowupRecord {
            center: r.center.clone(),
            components_through_center: r.through.iter().map(|&i| na + i).collect(),
            strict_multiplicity_at_center: r.strict_multiplicity,
            created: na + r.created,
        })
        .collect();
    Ok(ResolutionGraph {
        base: c.base.clone(),
        labels: labels_of(c),
        atoms,
        components,
        edges,
        fiber: Vec::new(),
        blowup_log,
        points: eng.points,
        critical_points: crit,
        euler: Some(EulerData {
            strict_base_chi,
            overrides: overrides.clone(),
        }),
        warnings,
        factors: polys,
    })
}
