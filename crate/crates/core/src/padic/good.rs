//! A conservative test that a resolution over `Q` has good reduction at `p`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use super::count::{reduce_point, ModPoly};
use crate::algebra::rat::{is_p_integral, is_p_unit, is_prime};
use crate::algebra::roots::upoly_rational_roots;
use crate::algebra::{MPoly, Rat};
use crate::resolution::engine::{dehomogenize, PointRecord};
use crate::resolution::ResolutionGraph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoodPrimeReport {
    pub p: u64,
    /// Reasons the reduction mod `p` is not known to be good.
    pub failures: Vec<String>,
    /// Conditions that do not invalidate the formula but make `p` unusual,
    /// such as `p` dividing some `N_j`.
    pub suspects: Vec<String>,
}

impl GoodPrimeReport {
    pub fn is_good(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Primitive integer representative of a line `a u + b v`.
fn primitive_line(a: &Rat, b: &Rat) -> (Rat, Rat) {
    let l = MPoly::from_terms(2, [(vec![1, 0], a.clone()), (vec![0, 1], b.clone())]).primitive();
    (l.coeff(&[1, 0]), l.coeff(&[0, 1]))
}

/// Tangent lines through a point: linear parts of smooth branches, the
/// factors of the tangent cones of singular ones, and the axes.
fn check_point(pt: &PointRecord, p: u64, failures: &mut Vec<String>) {
    let mut lines: BTreeSet<(Rat, Rat)> = BTreeSet::new();
    for (atom, eq) in &pt.equations {
        let eq = eq.primitive();
        let m = eq.order().unwrap_or(0);
        let form = eq.homogeneous_part(m);
        if !form.terms().any(|(_, c)| is_p_unit(c, p)) {
            failures.push(format!("multiplicity of atom {} jumps mod p at {}", atom, pt.path));
            continue;
        }
        if m == 1 {
            lines.insert(primitive_line(&form.coeff(&[1, 0]), &form.coeff(&[0, 1])));
            continue;
        }
        let q = dehomogenize(&form);
        if !is_p_unit(&q.lead(), p) {
            failures.push(format!("tangent cone of atom {} degenerates mod p at {}", atom, pt.path));
        }
        let roots = upoly_rational_roots(&q);
        let rational: u32 = roots.iter().map(|(_, k)| *k).sum();
        for (c, _) in &roots {
            if !is_p_integral(c, p) {
                failures.push(format!("direction {} at {} is not p-integral", c, pt.path));
            }
            lines.insert(primitive_line(&-c, &Rat::from_integer(1.into())));
        }
        if (rational as usize) < m as usize {
            lines.insert(primitive_line(&Rat::from_integer(1.into()), &Rat::zero()));
        }
    }
    let u_axes = pt.axes - usize::from(pt.v_axis);
    if u_axes > 0 {
        lines.insert((Rat::from_integer(1.into()), Rat::zero()));
    }
    if pt.v_axis {
        lines.insert((Rat::zero(), Rat::from_integer(1.into())));
    }
    let lines: Vec<_> = lines.into_iter().collect();
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            let det = &lines[i].0 * &lines[j].1 - &lines[i].1 * &lines[j].0;
            if !is_p_unit(&det, p) {
                failures.push(format!("tangent directions at {} collide mod p", pt.path));
            }
        }
    }
}

fn check_critical_points(g: &ResolutionGraph, p: u64, failures: &mut Vec<String>, suspects: &mut Vec<String>) {
    let atoms: Vec<MPoly> = g.atoms.iter().map(|a| a.poly.primitive()).collect();
    let mut reduced = BTreeSet::new();
    for pt in &g.critical_points {
        match reduce_point(pt, p) {
            Some(r) => {
                if !reduced.insert(r) {
                    failures.push(format!("critical points collide mod p at {:?}", r));
                }
            }
            None => failures.push(format!("critical point ({}, {}) is not p-integral", pt.0, pt.1)),
        }
    }
    let mut mods = Vec::new();
    for a in &atoms {
        let (Some(f), Some(fx), Some(fy)) = (
            ModPoly::reduce(a, p),
            ModPoly::reduce(&a.derivative(0), p),
            ModPoly::reduce(&a.derivative(1), p),
        ) else {
            failures.push(String::from("an atom is not p-integral"));
            return;
        };
        mods.push((f, fx, fy));
    }
    let mut found = BTreeSet::new();
    for x in 0..p {
        for y in 0..p {
            let zeros: Vec<&(ModPoly, ModPoly, ModPoly)> = mods.iter().filter(|m| m.0.eval(x, y) == 0).collect();
            let singular = zeros.iter().any(|m| m.1.eval(x, y) == 0 && m.2.eval(x, y) == 0);
            if zeros.len() >= 2 || singular {
                found.insert((x, y));
            }
        }
    }
    if found != reduced {
        let extra: Vec<_> = found.difference(&reduced).collect();
        if !extra.is_empty() {
            failures.push(format!("new singular or intersection points mod p: {:?}", extra));
        }
        let lost: Vec<_> = reduced.difference(&found).collect();
        if !lost.is_empty() {
            suspects.push(format!("critical points mod p not detected by enumeration: {:?}", lost));
        }
    }
}

/// Germ mode: unit atoms must stay units at the base point. Other
/// singular points reducing to the base point would make some exceptional
/// or strict component singular mod `p`, which the point checks detect.
fn check_germ_units(g: &ResolutionGraph, p: u64, failures: &mut Vec<String>) {
    for a in &g.atoms {
        let c = a.poly.primitive().constant_term();
        if !c.is_zero() && !is_p_unit(&c, p) {
            failures.push(format!(
                "unit factor {} vanishes mod p at the base point",
                a.poly.to_string_with(&["x", "y"])
            ));
        }
    }
}

pub fn good_prime_check(g: &ResolutionGraph, p: u64) -> GoodPrimeReport {
    let mut failures = Vec::new();
    let mut suspects = Vec::new();
    if !is_prime(p) {
        failures.push(format!("{} is not prime", p));
        return GoodPrimeReport { p, failures, suspects };
    }
    if let crate::resolution::Base::Point(x0, y0) = &g.base {
        if !is_p_integral(x0, p) || !is_p_integral(y0, p) {
            failures.push(String::from("base point is not p-integral"));
        }
        check_germ_units(g, p, &mut failures);
    } else {
        check_critical_points(g, p, &mut failures, &mut suspects);
    }
    for pt in &g.points {
        check_point(pt, p, &mut failures);
    }
    for c in &g.components {
        let n = g.total_n(c.id);
        if n > 0 && n.is_multiple_of(p) {
            suspects.push(format!("p divides N = {} of E{}", n, c.id));
        }
    }
    failures.sort();
    failures.dedup();
    GoodPrimeReport { p, failures, suspects }
}
