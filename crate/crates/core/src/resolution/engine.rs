//! Point-by-point blow-up of a germ until its total transform has simple
//! normal crossings.
//!
//! Every point under consideration carries local coordinates `(u, v)`
//! centred at it, the exceptional components through it (at most the two
//! axes `{u = 0}` and `{v = 0}`), and the strict transforms of the atoms
//! passing through it. Chart 1 of a blow-up is `u = u1, v = u1 v1` with the
//! new component `{u1 = 0}`; chart 2 is only visited at its origin
//! `u = u2 v2, v = v2`, the direction `u = 0`.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::algebra::roots::upoly_rational_roots;
use crate::algebra::{MPoly, Rat, UPoly};
use crate::error::{Error, Result};

/// Location of an infinitely near point: a base point followed by chart
/// steps `(chart, c)`, chart 1 meaning the point `v1 = c` on the new
/// component and chart 2 the point at infinity of the new component.
#[derive(Clone, PartialEq, Eq, Debug, PartialOrd, Ord, Hash)]
pub struct PointPath {
    pub base: (Rat, Rat),
    pub steps: Vec<(u8, Rat)>,
}

impl PointPath {
    pub fn child(&self, chart: u8, c: Rat) -> PointPath {
        let mut steps = self.steps.clone();
        steps.push((chart, c));
        PointPath {
            base: self.base.clone(),
            steps,
        }
    }
}

impl core::fmt::Display for PointPath {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "({},{})", self.base.0, self.base.1)?;
        for (chart, c) in &self.steps {
            write!(f, "/{}:{}", chart, c)?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, PartialOrd, Ord)]
pub(crate) enum Ref {
    Exc(usize),
    Branch(usize),
}

#[derive(Clone, Debug)]
pub(crate) struct ExcData {
    pub n: Vec<u32>,
    pub nu: u32,
    pub self_int: i64,
}

#[derive(Clone, Debug)]
pub(crate) struct BranchData {
    pub atom: usize,
}

#[derive(Clone, Debug)]
pub(crate) struct RawBlowup {
    pub center: PointPath,
    pub through: Vec<usize>,
    pub strict_multiplicity: u32,
    pub created: usize,
}

/// What was seen at a visited point; kept for the reduction-mod-p checks.
#[derive(Clone, Debug)]
pub struct PointRecord {
    pub path: PointPath,
    /// Lowest-degree homogeneous part of each atom through the point.
    pub lowest_forms: Vec<(usize, MPoly)>,
    pub blown_up: bool,
    /// For a normal crossings point: tangent lines `a u + b v` of all
    /// branches and axes through it.
    pub tangents: Vec<(Rat, Rat)>,
    pub axes: usize,
    /// Whether the axis `{v = 0}` (direction `0` on a new component) passes.
    pub v_axis: bool,
    /// Local equations of the atoms through the point.
    pub equations: Vec<(usize, MPoly)>,
}

pub(crate) struct LocalAtom {
    pub atom: usize,
    pub eq: MPoly,
}

struct WorkPoint {
    path: PointPath,
    u_comp: Option<usize>,
    v_comp: Option<usize>,
    atoms: Vec<LocalAtom>,
}

pub(crate) struct Engine<'a> {
    exps: &'a [Vec<u32>],
    nlabels: usize,
    /// Whether an ordinary double point of one atom may stay unresolved.
    nodes_allowed: bool,
    budget: u64,
    pub exc: Vec<ExcData>,
    pub branches: Vec<BranchData>,
    pub edges: Vec<(Ref, Ref, PointPath)>,
    pub log: Vec<RawBlowup>,
    pub delta: Vec<u64>,
    pub points: Vec<PointRecord>,
}

impl<'a> Engine<'a> {
    pub fn new(exps: &'a [Vec<u32>], nlabels: usize, nodes_allowed: bool, budget: u64) -> Self {
        Engine {
            exps,
            nlabels,
            nodes_allowed,
            budget,
            exc: Vec::new(),
            branches: Vec::new(),
            edges: Vec::new(),
            log: Vec::new(),
            delta: vec![0; exps.len()],
            points: Vec::new(),
        }
    }

    /// Resolves the germ at `path` of the given local equations, all of
    /// which vanish at the origin.
    pub fn run(&mut self, path: PointPath, atoms: Vec<LocalAtom>) -> Result<()> {
        let mut queue = VecDeque::new();
        queue.push_back(WorkPoint {
            path,
            u_comp: None,
            v_comp: None,
            atoms,
        });
        while let Some(p) = queue.pop_front() {
            self.visit(p, &mut queue)?;
        }
        Ok(())
    }

    fn visit(&mut self, p: WorkPoint, queue: &mut VecDeque<WorkPoint>) -> Result<()> {
        let mut lowest = Vec::new();
        let mut tangents: Vec<(Rat, Rat)> = Vec::new();
        let mut owners: Vec<Option<usize>> = Vec::new();
        let mut needs_blowup = false;
        for la in &p.atoms {
            let m = la.eq.order().expect("nonzero local equation");
            let form = la.eq.homogeneous_part(m);
            match m {
                1 => {
                    tangents.push((form.coeff(&[1, 0]), form.coeff(&[0, 1])));
                    owners.push(Some(la.atom));
                }
                2 if self.nodes_allowed => match node_tangents(&form) {
                    Some(ts) => {
                        for t in ts {
                            tangents.push(t);
                            owners.push(Some(la.atom));
                        }
                    }
                    None => needs_blowup = true,
                },
                _ => needs_blowup = true,
            }
            lowest.push((la.atom, form));
        }
        for axis in [(p.u_comp, (Rat::one(), Rat::zero())), (p.v_comp, (Rat::zero(), Rat::one()))] {
            if axis.0.is_some() {
                tangents.push(axis.1);
                owners.push(None);
            }
        }
        if tangents.len() > 2 {
            needs_blowup = true;
        }
        if tangents.len() == 2 {
            let ((a1, b1), (a2, b2)) = (&tangents[0], &tangents[1]);
            if (a1 * b2 - a2 * b1).is_zero() {
                needs_blowup = true;
            }
        }
        let axes = usize::from(p.u_comp.is_some()) + usize::from(p.v_comp.is_some());
        self.points.push(PointRecord {
            path: p.path.clone(),
            lowest_forms: lowest.clone(),
            blown_up: needs_blowup,
            tangents: if needs_blowup { Vec::new() } else { tangents.clone() },
            axes,
            v_axis: p.v_comp.is_some(),
            equations: p.atoms.iter().map(|la| (la.atom, la.eq.clone())).collect(),
        });
        if !needs_blowup {
            self.record_snc(&p, &owners);
            return Ok(());
        }
        self.blow_up(p, &lowest, queue)
    }

    fn record_snc(&mut self, p: &WorkPoint, owners: &[Option<usize>]) {
        let mut refs = Vec::new();
        for o in owners.iter().flatten() {
            self.branches.push(BranchData { atom: *o });
            refs.push(Ref::Branch(self.branches.len() - 1));
        }
        if let Some(u) = p.u_comp {
            refs.push(Ref::Exc(u));
        }
        if let Some(v) = p.v_comp {
            refs.push(Ref::Exc(v));
        }
        if refs.len() == 2 {
            self.edges.push((refs[0], refs[1], p.path.clone()));
        }
    }

    fn blow_up(&mut self, p: WorkPoint, lowest: &[(usize, MPoly)], queue: &mut VecDeque<WorkPoint>) -> Result<()> {
        if self.log.len() as u64 >= self.budget {
            return Err(Error::BudgetExceeded(self.budget));
        }
        let axes: Vec<usize> = p.u_comp.iter().chain(p.v_comp.iter()).copied().collect();
        let mut n = vec![0u32; self.nlabels];
        let mut mult_total = 0;
        for (atom, form) in lowest {
            let m = form.total_degree().unwrap();
            mult_total += m;
            for (l, e) in self.exps[*atom].iter().enumerate() {
                n[l] += m * e;
            }
            self.delta[*atom] += u64::from(m) * u64::from(m - 1) / 2;
        }
        let mut nu = 2 - axes.len() as u32;
        for &a in &axes {
            for (nl, el) in n.iter_mut().zip(&self.exc[a].n) {
                *nl += el;
            }
            nu += self.exc[a].nu;
            self.exc[a].self_int -= 1;
        }
        self.exc.push(ExcData { n, nu, self_int: -1 });
        let e = self.exc.len() - 1;
        self.log.push(RawBlowup {
            center: p.path.clone(),
            through: axes.clone(),
            strict_multiplicity: mult_total,
            created: e,
        });
        if let (Some(u), Some(v)) = (p.u_comp, p.v_comp) {
            self.edges.retain(|(a, b, _)| {
                !((*a == Ref::Exc(u) && *b == Ref::Exc(v)) || (*a == Ref::Exc(v) && *b == Ref::Exc(u)))
            });
        }
        if let Some(u) = p.u_comp {
            self.edges.push((Ref::Exc(e), Ref::Exc(u), p.path.child(2, Rat::zero())));
        }
        if let Some(v) = p.v_comp {
            self.edges.push((Ref::Exc(e), Ref::Exc(v), p.path.child(1, Rat::zero())));
        }

        // Directions of the strict transforms on the new component.
        let mut chart1: Vec<(Rat, Vec<LocalAtom>)> = Vec::new();
        let mut chart2: Vec<LocalAtom> = Vec::new();
        for (la, (_, form)) in p.atoms.iter().zip(lowest) {
            let m = form.total_degree().unwrap();
            let q = dehomogenize(form);
            let roots = upoly_rational_roots(&q);
            let rational_degree: u32 = roots.iter().map(|(_, k)| *k).sum();
            if rational_degree as usize != q.degree().unwrap_or(0) {
                return Err(Error::NonRationalCenter(format!(
                    "tangent directions {} at {} are not rational",
                    q.to_string_in("t"),
                    p.path
                )));
            }
            if (rational_degree) < m {
                chart2.push(LocalAtom {
                    atom: la.atom,
                    eq: chart2_transform(&la.eq, m),
                });
            }
            if roots.is_empty() {
                continue;
            }
            let h = chart1_transform(&la.eq, m);
            for (c, _) in roots {
                let eq = h.translate(&[Rat::zero(), c.clone()]);
                match chart1.iter_mut().find(|(d, _)| *d == c) {
                    Some((_, v)) => v.push(LocalAtom { atom: la.atom, eq }),
                    None => chart1.push((c, vec![LocalAtom { atom: la.atom, eq }])),
                }
            }
        }
        chart1.sort_by(|a, b| a.0.cmp(&b.0));
        for (c, atoms) in chart1 {
            let v_comp = if c.is_zero() { p.v_comp } else { None };
            queue.push_back(WorkPoint {
                path: p.path.child(1, c),
                u_comp: Some(e),
                v_comp,
                atoms,
            });
        }
        if !chart2.is_empty() {
            queue.push_back(WorkPoint {
                path: p.path.child(2, Rat::zero()),
                u_comp: p.u_comp,
                v_comp: Some(e),
                atoms: chart2,
            });
        }
        Ok(())
    }
}

/// `form(1, t)` for a homogeneous form in `(u, v)`.
pub(crate) fn dehomogenize(form: &MPoly) -> UPoly {
    let mut coeffs = Vec::new();
    for (e, c) in form.terms() {
        let k = e[1] as usize;
        if coeffs.len() <= k {
            coeffs.resize(k + 1, Rat::zero());
        }
        coeffs[k] = c.clone();
    }
    UPoly::new(coeffs)
}

/// Tangent lines of an ordinary double point with rational branches.
fn node_tangents(form: &MPoly) -> Option<Vec<(Rat, Rat)>> {
    let q = dehomogenize(form);
    let roots = upoly_rational_roots(&q);
    if roots.iter().any(|(_, k)| *k > 1) {
        return None;
    }
    let mut out: Vec<(Rat, Rat)> = roots.into_iter().map(|(c, _)| (-c, Rat::one())).collect();
    match q.degree() {
        Some(2) if out.len() == 2 => Some(out),
        Some(1) if out.len() == 1 => {
            out.push((Rat::one(), Rat::zero()));
            Some(out)
        }
        _ => None,
    }
}

/// `g(u, u v) / u^m`
pub(crate) fn chart1_transform(g: &MPoly, m: u32) -> MPoly {
    MPoly::from_terms(2, g.terms().map(|(e, c)| (vec![e[0] + e[1] - m, e[1]], c.clone())))
}

/// `g(u v, v) / v^m`
pub(crate) fn chart2_transform(g: &MPoly, m: u32) -> MPoly {
    MPoly::from_terms(2, g.terms().map(|(e, c)| (vec![e[0], e[0] + e[1] - m], c.clone())))
}
