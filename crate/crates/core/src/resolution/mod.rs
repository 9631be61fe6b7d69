//! Embedded resolution of plane curves by point blow-ups and the dual
//! graph with numerical data.

pub(crate) mod engine;
mod global;

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::algebra::bivariate::{coprime_base, Atom};
use crate::algebra::{MPoly, Rat};
use crate::error::{Error, Result};

pub use engine::{PointPath, PointRecord};
use engine::{Engine, LocalAtom, Ref};
pub use global::{affine_euler_characteristic, critical_points, InfinityData};

pub const DEFAULT_BUDGET: u64 = 200;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Role {
    /// A factor of the function `f`.
    Function,
    /// The polynomial `g` of a differential form `g dx dy`.
    Form,
}

#[derive(Clone, Debug)]
pub struct Factor {
    pub label: String,
    pub poly: MPoly,
    pub multiplicity: u32,
    pub role: Role,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Base {
    Point(Rat, Rat),
    Global,
}

#[derive(Clone, Debug)]
pub struct CurveSystem {
    pub factors: Vec<Factor>,
    pub base: Base,
}

impl CurveSystem {
    /// Germ of `f` at the origin.
    pub fn germ(f: MPoly) -> Self {
        Self::germ_at(f, Rat::zero(), Rat::zero())
    }

    pub fn germ_at(f: MPoly, x0: Rat, y0: Rat) -> Self {
        CurveSystem {
            factors: vec![Factor {
                label: String::from("f"),
                poly: f,
                multiplicity: 1,
                role: Role::Function,
            }],
            base: Base::Point(x0, y0),
        }
    }

    pub fn global(f: MPoly) -> Self {
        let mut c = Self::germ(f);
        c.base = Base::Global;
        c
    }

    /// Several labelled factors `f_1, ..., f_k`.
    pub fn labelled(polys: Vec<MPoly>, base: Base) -> Self {
        CurveSystem {
            factors: polys
                .into_iter()
                .enumerate()
                .map(|(i, poly)| Factor {
                    label: format!("f{}", i + 1),
                    poly,
                    multiplicity: 1,
                    role: Role::Function,
                })
                .collect(),
            base,
        }
    }

    pub fn with_form(mut self, g: MPoly) -> Self {
        self.factors.push(Factor {
            label: String::from("form"),
            poly: g,
            multiplicity: 1,
            role: Role::Form,
        });
        self
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Kind {
    Exceptional,
    Strict,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub id: usize,
    pub kind: Kind,
    /// Multiplicity in `div(f_l o h)` for every label `l`.
    pub n: Vec<u32>,
    /// One plus the multiplicity in the relative canonical divisor.
    pub nu: u32,
    pub self_int: Option<i64>,
    pub birth_index: usize,
    /// Index of the atom whose strict transform this is.
    pub atom: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    pub point: PointPath,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlowupRecord {
    pub center: PointPath,
    pub components_through_center: Vec<usize>,
    pub strict_multiplicity_at_center: u32,
    pub created: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelInfo {
    pub name: String,
    pub multiplicity: u32,
    pub role: Role,
}

/// Euler characteristic data of a global resolution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerData {
    /// `chi` of the strict transform minus its points at infinity, before
    /// removing intersection points with other components.
    pub strict_base_chi: BTreeMap<usize, i64>,
    /// Explicit `chi(E_j°)` values that replace the computed ones.
    pub overrides: BTreeMap<usize, i64>,
}

/// A stratum `E_I°` (or `E_I° ∩ h^{-1}(base)` in germ mode) with its Euler
/// characteristic and class `a L + b` in the Grothendieck ring, where that
/// makes sense.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stratum {
    pub comps: Vec<usize>,
    pub chi: i64,
    pub class: Option<(i64, i64)>,
}

#[derive(Clone, Debug)]
pub struct ResolutionGraph {
    pub base: Base,
    pub labels: Vec<LabelInfo>,
    /// Pairwise coprime squarefree pieces of the input, primitive.
    pub atoms: Vec<Atom>,
    pub components: Vec<Component>,
    pub edges: Vec<Edge>,
    pub fiber: Vec<usize>,
    pub blowup_log: Vec<BlowupRecord>,
    /// Every point the engine looked at, in visiting order.
    pub points: Vec<PointRecord>,
    /// Affine points that were examined in global mode.
    pub critical_points: Vec<(Rat, Rat)>,
    pub euler: Option<EulerData>,
    pub warnings: Vec<String>,
    /// The input factors after translation to the base point.
    pub factors: Vec<MPoly>,
}

#[derive(Clone, Copy, Debug)]
pub struct ResolveOptions {
    pub budget: u64,
}

impl Default for ResolveOptions {
    fn default() -> Self {
        ResolveOptions {
            budget: DEFAULT_BUDGET,
        }
    }
}

/// Order of vanishing of `f` at `pt`.
pub fn multiplicity_at(f: &MPoly, pt: (&Rat, &Rat)) -> u32 {
    f.translate(&[pt.0.clone(), pt.1.clone()]).order().unwrap_or(0)
}

fn labels_of(c: &CurveSystem) -> Vec<LabelInfo> {
    c.factors
        .iter()
        .map(|f| LabelInfo {
            name: f.label.clone(),
            multiplicity: f.multiplicity,
            role: f.role,
        })
        .collect()
}

fn check_input(c: &CurveSystem) -> Result<()> {
    if c.factors.is_empty() {
        return Err(Error::Invalid(String::from("no factors")));
    }
    for f in &c.factors {
        if f.poly.nvars() != 2 {
            return Err(Error::Invalid(format!("factor {} is not in x, y", f.label)));
        }
        if f.poly.is_zero() {
            return Err(Error::Invalid(format!("factor {} is zero", f.label)));
        }
        if f.role == Role::Function && f.poly.is_constant() {
            return Err(Error::Invalid(format!("factor {} is constant", f.label)));
        }
    }
    Ok(())
}

/// Minimal embedded resolution of the germ at the base point.
pub fn resolve_germ(c: &CurveSystem) -> Result<ResolutionGraph> {
    resolve_germ_with(c, ResolveOptions::default())
}

pub fn resolve_germ_with(c: &CurveSystem, opts: ResolveOptions) -> Result<ResolutionGraph> {
    check_input(c)?;
    let Base::Point(x0, y0) = &c.base else {
        return Err(Error::Invalid(String::from("resolve_germ needs a base point")));
    };
    let translated: Vec<MPoly> = c
        .factors
        .iter()
        .map(|f| f.poly.translate(&[x0.clone(), y0.clone()]))
        .collect();
    let atoms = coprime_base(&translated);
    let mut warnings = Vec::new();
    let mut local = Vec::new();
    for (i, a) in atoms.iter().enumerate() {
        if a.poly.constant_term().is_zero() {
            local.push(LocalAtom {
                atom: i,
                eq: a.poly.clone(),
            });
        } else {
            warnings.push(format!(
                "dropped unit factor {} at the base point",
                a.poly.to_string_with(&["x", "y"])
            ));
        }
    }
    let f_vanishes = local.iter().any(|la| {
        atoms[la.atom]
            .exps
            .iter()
            .zip(&c.factors)
            .any(|(e, f)| *e > 0 && f.role == Role::Function)
    });
    if !f_vanishes {
        return Err(Error::NotAGerm);
    }
    let exps: Vec<Vec<u32>> = atoms.iter().map(|a| a.exps.clone()).collect();
    let mut eng = Engine::new(&exps, c.factors.len(), true, opts.budget);
    let base_path = PointPath {
        base: (x0.clone(), y0.clone()),
        steps: Vec::new(),
    };
    eng.run(base_path, local)?;

    // Strict branches get the first ids, exceptional components follow in
    // order of creation.
    let nb = eng.branches.len();
    let map = |r: Ref| match r {
        Ref::Branch(i) => i,
        Ref::Exc(i) => nb + i,
    };
    let mut components = Vec::new();
    for (i, b) in eng.branches.iter().enumerate() {
        components.push(Component {
            id: i,
            kind: Kind::Strict,
            n: exps[b.atom].clone(),
            nu: 1,
            self_int: None,
            birth_index: i,
            atom: Some(b.atom),
        });
    }
    for (i, e) in eng.exc.iter().enumerate() {
        components.push(Component {
            id: nb + i,
            kind: Kind::Exceptional,
            n: e.n.clone(),
            nu: e.nu,
            self_int: Some(e.self_int),
            birth_index: i,
            atom: None,
        });
    }
    let edges = eng
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
    let blowup_log = eng
        .log
        .iter()
        .map(|r| BlowupRecord {
            center: r.center.clone(),
            components_through_center: r.through.iter().map(|&i| nb + i).collect(),
            strict_multiplicity_at_center: r.strict_multiplicity,
            created: nb + r.created,
        })
        .collect();
    Ok(ResolutionGraph {
        base: c.base.clone(),
        labels: labels_of(c),
        atoms,
        fiber: (nb..nb + eng.exc.len()).collect(),
        components,
        edges,
        blowup_log,
        points: eng.points,
        critical_points: Vec::new(),
        euler: None,
        warnings,
        factors: translated,
    })
}

/// Resolution of the whole affine curve together with the Euler
/// characteristics of all strata. `chi_overrides` maps strict component
/// ids to `chi(E_j°)` and skips the computation at infinity for them.
pub fn resolve_affine(c: &CurveSystem) -> Result<ResolutionGraph> {
    global::resolve_affine(c, ResolveOptions::default(), &BTreeMap::new())
}

pub fn resolve_affine_with(
    c: &CurveSystem,
    opts: ResolveOptions,
    chi_overrides: &BTreeMap<usize, i64>,
) -> Result<ResolutionGraph> {
    global::resolve_affine(c, opts, chi_overrides)
}

/// Resolves according to the base of `c`.
pub fn resolve(c: &CurveSystem, opts: ResolveOptions) -> Result<ResolutionGraph> {
    match c.base {
        Base::Point(..) => resolve_germ_with(c, opts),
        Base::Global => global::resolve_affine(c, opts, &BTreeMap::new()),
    }
}

/// A point of the resolution that is already normal crossings, as target
/// of an extra blow-up.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SncPoint {
    /// The intersection point of an edge.
    Edge(usize),
    /// A point of a single component away from all others.
    OnComponent(usize),
}

impl ResolutionGraph {
    pub fn is_germ(&self) -> bool {
        matches!(self.base, Base::Point(..))
    }

    pub fn component(&self, id: usize) -> Result<&Component> {
        self.components.get(id).ok_or(Error::NoSuchComponent(id))
    }

    pub fn exceptional(&self) -> impl Iterator<Item = &Component> {
        self.components.iter().filter(|c| c.kind == Kind::Exceptional)
    }

    pub fn strict(&self) -> impl Iterator<Item = &Component> {
        self.components.iter().filter(|c| c.kind == Kind::Strict)
    }

    /// Neighbours with repetition, one entry per edge.
    pub fn neighbors(&self, id: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for e in &self.edges {
            if e.a == id {
                out.push(e.b);
            } else if e.b == id {
                out.push(e.a);
            }
        }
        out
    }

    pub fn valence(&self, id: usize) -> usize {
        self.edges.iter().filter(|e| e.a == id || e.b == id).count()
    }

    /// `N` of the function side: `sum_l m_l N^(l)` over function labels.
    pub fn total_n(&self, id: usize) -> u64 {
        let c = &self.components[id];
        self.labels
            .iter()
            .zip(&c.n)
            .filter(|(l, _)| l.role == Role::Function)
            .map(|(l, n)| u64::from(l.multiplicity) * u64::from(*n))
            .sum()
    }

    /// `N` of the form polynomial, zero without a form.
    pub fn form_n(&self, id: usize) -> u64 {
        let c = &self.components[id];
        self.labels
            .iter()
            .zip(&c.n)
            .filter(|(l, _)| l.role == Role::Form)
            .map(|(l, n)| u64::from(l.multiplicity) * u64::from(*n))
            .sum()
    }

    /// Indices of the function labels.
    pub fn function_labels(&self) -> Vec<usize> {
        (0..self.labels.len()).filter(|&i| self.labels[i].role == Role::Function).collect()
    }

    pub fn has_form(&self) -> bool {
        self.labels.iter().any(|l| l.role == Role::Form)
    }

    /// Strata meeting the fibre over the base point, with combinatorial
    /// Euler characteristics: exceptional components are projective lines,
    /// intersection points are points, strict strata miss the fibre.
    pub fn local_strata(&self) -> Result<Vec<Stratum>> {
        if !self.is_germ() {
            return Err(Error::Invalid(String::from("local strata need a germ resolution")));
        }
        let mut out = Vec::new();
        if self.blowup_log.is_empty() && self.fiber.is_empty() {
            // Identity resolution: the base point itself.
            match self.edges.as_slice() {
                [] => {
                    for c in self.strict() {
                        out.push(Stratum {
                            comps: vec![c.id],
                            chi: 1,
                            class: Some((0, 1)),
                        });
                    }
                }
                edges => {
                    for e in edges {
                        out.push(Stratum {
                            comps: vec![e.a, e.b],
                            chi: 1,
                            class: Some((0, 1)),
                        });
                    }
                }
            }
            return Ok(out);
        }
        for c in self.exceptional() {
            let v = self.valence(c.id) as i64;
            out.push(Stratum {
                comps: vec![c.id],
                chi: 2 - v,
                class: Some((1, 1 - v)),
            });
        }
        for e in &self.edges {
            let in_fiber = self.components[e.a].kind == Kind::Exceptional
                || self.components[e.b].kind == Kind::Exceptional;
            if in_fiber {
                out.push(Stratum {
                    comps: vec![e.a, e.b],
                    chi: 1,
                    class: Some((0, 1)),
                });
            }
        }
        Ok(out)
    }

    /// All strata `E_I°` of a global resolution including `E_∅°`.
    pub fn global_strata(&self) -> Result<Vec<Stratum>> {
        let Some(euler) = &self.euler else {
            return Err(Error::MissingEulerData(String::from(
                "global strata need a resolution of the affine curve",
            )));
        };
        let mut out = Vec::new();
        let mut sum = 0i64;
        for c in &self.components {
            let chi = match c.kind {
                Kind::Exceptional => 2 - self.valence(c.id) as i64,
                Kind::Strict => match euler.overrides.get(&c.id) {
                    Some(v) => *v,
                    None => match euler.strict_base_chi.get(&c.id) {
                        Some(b) => b - self.valence(c.id) as i64,
                        None => {
                            return Err(Error::MissingEulerData(format!("no Euler data for E{}", c.id)));
                        }
                    },
                },
            };
            sum += chi;
            out.push(Stratum {
                comps: vec![c.id],
                chi,
                class: None,
            });
        }
        for e in &self.edges {
            sum += 1;
            out.push(Stratum {
                comps: vec![e.a, e.b],
                chi: 1,
                class: Some((0, 1)),
            });
        }
        let empty = 1 + self.blowup_log.len() as i64 - sum;
        out.insert(
            0,
            Stratum {
                comps: Vec::new(),
                chi: empty,
                class: None,
            },
        );
        Ok(out)
    }

    /// Blows up a point that is already normal crossings and updates all
    /// data combinatorially. Used to test independence of the resolution.
    pub fn blow_up_snc_point(&self, at: SncPoint) -> Result<ResolutionGraph> {
        let mut g = self.clone();
        let new_id = g.components.len();
        let nlabels = g.labels.len();
        let birth = g.exceptional().count();
        let (n, nu, through, point): (Vec<u32>, u32, Vec<usize>, PointPath) = match at {
            SncPoint::Edge(i) => {
                let e = g.edges.get(i).ok_or(Error::Invalid(format!("no edge {}", i)))?.clone();
                let (ca, cb) = (&g.components[e.a], &g.components[e.b]);
                let n = (0..nlabels).map(|l| ca.n[l] + cb.n[l]).collect();
                let nu = ca.nu + cb.nu;
                g.edges.remove(i);
                g.edges.push(Edge {
                    a: e.a,
                    b: new_id,
                    point: e.point.child(1, Rat::zero()),
                });
                g.edges.push(Edge {
                    a: e.b,
                    b: new_id,
                    point: e.point.child(2, Rat::zero()),
                });
                (n, nu, vec![e.a, e.b], e.point)
            }
            SncPoint::OnComponent(id) => {
                let c = g.component(id)?.clone();
                // a smooth germ has an empty fibre and its base point lies
                // on the only component
                let base_point = g.fiber.is_empty() && g.edges.is_empty() && g.components.len() == 1;
                if g.is_germ() && c.kind != Kind::Exceptional && !base_point {
                    return Err(Error::Invalid(String::from(
                        "in germ mode only points of the fibre can be blown up",
                    )));
                }
                let point = PointPath {
                    base: (Rat::zero(), Rat::zero()),
                    steps: vec![(0, Rat::from_integer(id.into()))],
                };
                g.edges.push(Edge {
                    a: id,
                    b: new_id,
                    point: point.clone(),
                });
                (c.n.clone(), c.nu + 1, vec![id], point)
            }
        };
        for &t in &through {
            if let Some(s) = g.components[t].self_int.as_mut() {
                *s -= 1;
            }
        }
        g.components.push(Component {
            id: new_id,
            kind: Kind::Exceptional,
            n,
            nu,
            self_int: Some(-1),
            birth_index: birth,
            atom: None,
        });
        if g.is_germ() {
            g.fiber.push(new_id);
        }
        g.blowup_log.push(BlowupRecord {
            center: point,
            components_through_center: through.into_iter().filter(|&t| g.components[t].kind == Kind::Exceptional).collect(),
            strict_multiplicity_at_center: 0,
            created: new_id,
        });
        Ok(g)
    }

    /// The input of a resolution of an affine curve, as a germ at a point.
    pub fn germ_system_at(&self, x0: Rat, y0: Rat) -> Result<CurveSystem> {
        if self.is_germ() {
            return Err(Error::Invalid(String::from("factors of a germ graph are already translated")));
        }
        let factors = self
            .labels
            .iter()
            .zip(&self.factors)
            .map(|(l, f)| Factor {
                label: l.name.clone(),
                poly: f.clone(),
                multiplicity: l.multiplicity,
                role: l.role,
            })
            .collect();
        Ok(CurveSystem {
            factors,
            base: Base::Point(x0, y0),
        })
    }

    /// Graphviz rendering with nodes, edges and labels only. Labels read
    /// `E<id> (N,nu) nu/N`, then `[self-intersection]` for exceptional
    /// components or `strict` for strict ones.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph resolution {\n");
        for c in &self.components {
            let n = self.total_n(c.id);
            let ratio = if n == 0 {
                String::from("inf")
            } else {
                format!("{}", Rat::new((c.nu as i64).into(), (n as i64).into()))
            };
            let mut label = format!("E{} ({},{}) {}", c.id, n, c.nu, ratio);
            match c.self_int {
                Some(k) => label.push_str(&format!(" [{}]", k)),
                None if c.kind == Kind::Strict => label.push_str(" strict"),
                None => {}
            }
            s.push_str(&format!("  E{} [label=\"{}\"];\n", c.id, label));
        }
        let mut edges: Vec<(usize, usize)> = self.edges.iter().map(|e| (e.a, e.b)).collect();
        edges.sort();
        for (a, b) in edges {
            s.push_str(&format!("  E{} -- E{};\n", a, b));
        }
        s.push_str("}\n");
        s
    }
}

#[cfg(test)]
mod tests;
