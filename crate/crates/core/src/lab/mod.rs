//! Verifiers for the conjectures and structure theorems on concrete curves.
//! A verdict applies to the given input only.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::algebra::rat::{divisors, int};
use crate::algebra::{Rat, RatFunc1};
use crate::error::{Error, Result};
use crate::monodromy::{eigenvalue_orders_near, lct, EigenSource, EigenvalueSet};
use crate::resolution::{resolve, Kind, ResolutionGraph, ResolveOptions};
use crate::zeta::{component_residue, poles, zeta_top, Locality, PoleReport, ZetaOptions};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    Inapplicable,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Inapplicable => "inapplicable",
        }
    }
}

/// One checked claim about one object.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub subject: String,
    pub claim: String,
    pub holds: bool,
}

impl Witness {
    fn new(subject: impl Into<String>, claim: impl Into<String>, holds: bool) -> Self {
        Witness {
            subject: subject.into(),
            claim: claim.into(),
            holds,
        }
    }
}

/// Everything needed to reproduce a failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub input: Vec<String>,
    pub resolution: String,
    pub offending: Vec<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub verdict: Verdict,
    pub witnesses: Vec<Witness>,
    pub counterexample: Option<Counterexample>,
}

impl CheckReport {
    fn inapplicable(name: &str, why: impl Into<String>) -> Self {
        CheckReport {
            name: String::from(name),
            verdict: Verdict::Inapplicable,
            witnesses: alloc::vec![Witness::new("input", why, true)],
            counterexample: None,
        }
    }

    /// Pass when every witness holds, otherwise fail with the offending
    /// witnesses and the resolution attached.
    fn judge(name: &str, g: &ResolutionGraph, witnesses: Vec<Witness>) -> Self {
        let offending: Vec<Witness> = witnesses.iter().filter(|w| !w.holds).cloned().collect();
        let counterexample = (!offending.is_empty()).then(|| Counterexample {
            input: g.factors.iter().map(|f| f.to_string_with(&["x", "y"])).collect(),
            resolution: g.to_dot(),
            offending,
        });
        CheckReport {
            name: String::from(name),
            verdict: if counterexample.is_some() { Verdict::Fail } else { Verdict::Pass },
            witnesses,
            counterexample,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict != Verdict::Fail
    }
}

fn ratio(g: &ResolutionGraph, id: usize) -> Option<Rat> {
    let n = g.total_n(id);
    (n > 0).then(|| Rat::new(g.components[id].nu.into(), n.into()))
}

fn require_plain(g: &ResolutionGraph) -> Result<()> {
    if g.has_form() {
        return Err(Error::Invalid(String::from("the conjecture checks take a function without a form")));
    }
    Ok(())
}

fn is_reduced(g: &ResolutionGraph) -> bool {
    g.strict().all(|c| g.total_n(c.id) == 1)
}

pub fn pt_string(p: &(Rat, Rat)) -> String {
    format!("({}, {})", p.0, p.1)
}

/// Order of `exp(2 pi i s)` for rational `s`.
fn root_order(s: &Rat) -> u64 {
    u64::try_from(s.denom()).unwrap_or(u64::MAX)
}

/// Germ resolutions at every examined point of a global resolution.
pub fn local_graphs(g: &ResolutionGraph, opts: ResolveOptions) -> Result<Vec<((Rat, Rat), ResolutionGraph)>> {
    let mut out = Vec::new();
    for p in &g.critical_points {
        let h = resolve(&g.germ_system_at(p.0.clone(), p.1.clone())?, opts)?;
        out.push((p.clone(), h));
    }
    Ok(out)
}

/// Eigenvalue orders near every point of the curve: the union over the
/// critical points together with the smooth-point contributions of every
/// branch.
pub fn global_eigenvalues(g: &ResolutionGraph, locals: &[((Rat, Rat), ResolutionGraph)]) -> Result<EigenvalueSet> {
    let mut set = EigenvalueSet::default();
    for (_, h) in locals {
        set.extend(&eigenvalue_orders_near(h)?);
    }
    for c in g.strict() {
        for d in divisors(g.total_n(c.id).max(1)) {
            set.insert(d, EigenSource::SmoothPoint);
        }
    }
    Ok(set)
}

fn locality_of(g: &ResolutionGraph) -> Locality {
    if g.is_germ() {
        Locality::Local
    } else {
        Locality::Global
    }
}

fn zeta_opts(l: Locality) -> ZetaOptions {
    match l {
        Locality::Local => ZetaOptions::local(),
        Locality::Global => ZetaOptions::global(),
    }
}

/// Every pole `s0` of the topological zeta function must give a monodromy
/// eigenvalue `exp(2 pi i s0)` near the base point, or anywhere on the curve
/// in global mode. Globally each pole must also be a pole of a local zeta
/// function at a critical point or come from smooth points of a branch.
/// `opts` is used for the germ resolutions at the critical points of an
/// affine curve.
pub fn check_monodromy_conjecture(g: &ResolutionGraph, opts: ResolveOptions) -> Result<CheckReport> {
    const NAME: &str = "monodromy";
    require_plain(g)?;
    let loc = locality_of(g);
    let z = zeta_top(g, &zeta_opts(loc))?;
    let report = poles(&z, Some(g));
    let mut witnesses = Vec::new();
    match loc {
        Locality::Local => {
            let eig = eigenvalue_orders_near(g)?;
            for e in &report.entries {
                let d = root_order(&e.pole);
                let holds = eig.contains(d);
                let src = eig.provenance.get(&d).map_or("missing", |s| s.as_str());
                witnesses.push(Witness::new(format!("pole {}", e.pole), format!("eigenvalue of order {} ({})", d, src), holds));
            }
        }
        Locality::Global => {
            let locals = local_graphs(g, opts)?;
            let eig = global_eigenvalues(g, &locals)?;
            let mut local_poles = Vec::new();
            for (p, h) in &locals {
                local_poles.push((p, poles(&zeta_top(h, &ZetaOptions::local())?, None).poles()));
            }
            for e in &report.entries {
                let d = root_order(&e.pole);
                let src = eig.provenance.get(&d).map_or("missing", |s| s.as_str());
                let at = local_poles.iter().find(|(_, ps)| ps.contains(&e.pole)).map(|(p, _)| pt_string(p));
                let smooth = g.strict().any(|s| ratio(g, s.id).map(|r| -r) == Some(e.pole.clone()));
                let place = match (&at, smooth) {
                    (Some(p), _) => format!("local pole at {}", p),
                    (None, true) => String::from("smooth points of a branch"),
                    (None, false) => String::from("no local origin"),
                };
                witnesses.push(Witness::new(
                    format!("pole {}", e.pole),
                    format!("eigenvalue of order {} ({}); {}", d, src, place),
                    eig.contains(d) && (at.is_some() || smooth),
                ));
            }
        }
    }
    Ok(CheckReport::judge(NAME, g, witnesses))
}

/// If `d` divides no eigenvalue order, `Z_top(f, d; s)` must have no poles.
pub fn check_holomorphy(g: &ResolutionGraph, d: u64, opts: ResolveOptions) -> Result<CheckReport> {
    const NAME: &str = "holomorphy";
    if d == 0 {
        return Err(Error::Invalid(String::from("character order must be positive")));
    }
    require_plain(g)?;
    let loc = locality_of(g);
    let eig = match loc {
        Locality::Local => eigenvalue_orders_near(g)?,
        Locality::Global => global_eigenvalues(g, &local_graphs(g, opts)?)?,
    };
    if let Some(l) = eig.orders().into_iter().find(|l| l % d == 0) {
        return Ok(CheckReport::inapplicable(NAME, format!("d = {} divides the eigenvalue order {}", d, l)));
    }
    let z = zeta_top(g, &zeta_opts(loc).with_character(d))?;
    let ps = poles(&z, None).poles();
    let w = Witness::new(format!("Z_top(f, {}; s) = {}", d, z), String::from("no poles"), ps.is_empty());
    Ok(CheckReport::judge(NAME, g, alloc::vec![w]))
}

/// A (-1)-curve meeting at most two other components could be contracted
/// without losing normal crossings.
pub fn is_minimal(g: &ResolutionGraph) -> bool {
    g.exceptional().all(|c| c.self_int != Some(-1) || g.valence(c.id) >= 3)
}

/// At each exceptional `E_0` with `kappa = -E_0^2` and neighbours `E_i`:
/// `kappa N_0 = sum N_i`, `kappa nu_0 = sum (nu_i - 1) + 2` and
/// `sum (alpha_i - 1) + 2 = 0` where `alpha_i = nu_i - (nu_0/N_0) N_i`. On a
/// minimal resolution also `-1 <= alpha_i < 1`, with `alpha_i = -1` exactly
/// when `E_0` has a single neighbour.
pub fn check_numerical_relations(g: &ResolutionGraph) -> Result<CheckReport> {
    const NAME: &str = "relations";
    require_plain(g)?;
    if g.exceptional().next().is_none() {
        return Ok(CheckReport::inapplicable(NAME, "no exceptional components"));
    }
    let minimal = is_minimal(g);
    let mut witnesses = Vec::new();
    for c in g.exceptional() {
        let id = c.id;
        let subject = format!("E{}", id);
        let kappa = -c.self_int.ok_or_else(|| Error::Invalid(format!("E{} has no self-intersection", id)))?;
        let nbrs = g.neighbors(id);
        let n0 = g.total_n(id) as i64;
        let nu0 = i64::from(c.nu);
        let sum_n: i64 = nbrs.iter().map(|&i| g.total_n(i) as i64).sum();
        let sum_nu: i64 = nbrs.iter().map(|&i| i64::from(g.components[i].nu) - 1).sum();
        witnesses.push(Witness::new(
            subject.clone(),
            format!("{} * {} = {}", kappa, n0, sum_n),
            kappa * n0 == sum_n,
        ));
        witnesses.push(Witness::new(
            subject.clone(),
            format!("{} * {} = {} + 2", kappa, nu0, sum_nu),
            kappa * nu0 == sum_nu + 2,
        ));
        if n0 == 0 {
            continue;
        }
        let r0 = int(nu0) / int(n0);
        let alphas: Vec<Rat> = nbrs
            .iter()
            .map(|&i| int(i64::from(g.components[i].nu)) - &r0 * int(g.total_n(i) as i64))
            .collect();
        let sum: Rat = alphas.iter().map(|a| a - Rat::one()).sum::<Rat>() + int(2);
        witnesses.push(Witness::new(subject.clone(), format!("sum (alpha_i - 1) + 2 = {}", sum), sum.is_zero()));
        if minimal {
            for (a, &i) in alphas.iter().zip(&nbrs) {
                let bounded = a >= &int(-1) && a < &Rat::one();
                let sharp = (a == &int(-1)) == (nbrs.len() == 1);
                witnesses.push(Witness::new(
                    format!("E{} next to E{}", i, id),
                    format!("alpha = {} in [-1, 1), -1 iff single neighbour", a),
                    bounded && sharp,
                ));
            }
        }
    }
    Ok(CheckReport::judge(NAME, g, witnesses))
}

/// Poles predicted from the graph alone: `-nu/N` of the strict components
/// and of the exceptional components meeting at least three others.
pub fn predicted_poles(g: &ResolutionGraph) -> BTreeSet<Rat> {
    g.components
        .iter()
        .filter(|c| c.kind == Kind::Strict || g.valence(c.id) >= 3)
        .filter_map(|c| ratio(g, c.id).map(|r| -r))
        .collect()
}

pub fn check_pole_determination(g: &ResolutionGraph, z: &RatFunc1) -> Result<CheckReport> {
    const NAME: &str = "poles";
    require_plain(g)?;
    if !g.is_germ() {
        return Ok(CheckReport::inapplicable(NAME, "stated for germs"));
    }
    if g.blowup_log.is_empty() {
        return Ok(CheckReport::inapplicable(NAME, "germ is already normal crossings"));
    }
    if !is_minimal(g) {
        return Ok(CheckReport::inapplicable(NAME, "resolution is not minimal"));
    }
    let actual: BTreeSet<Rat> = poles(z, None).poles().into_iter().collect();
    let predicted = predicted_poles(g);
    let show = |s: &BTreeSet<Rat>| s.iter().map(|r| format!("{}", r)).collect::<Vec<_>>().join(", ");
    let w = Witness::new(
        format!("poles {{{}}}", show(&actual)),
        format!("predicted {{{}}}", show(&predicted)),
        actual == predicted,
    );
    Ok(CheckReport::judge(NAME, g, alloc::vec![w]))
}

/// The four possible shapes of the locus where `nu/N` is minimal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LocusShape {
    /// A single component meeting at least three others.
    SingleNode,
    /// A chain of components between two such nodes.
    ChainBetweenNodes,
    /// A single strict component.
    StrictEdge,
    /// A chain from a strict component to a node.
    StrictChain,
}

impl LocusShape {
    pub fn as_str(self) -> &'static str {
        match self {
            LocusShape::SingleNode => "single-node-star",
            LocusShape::ChainBetweenNodes => "chain-between-nodes",
            LocusShape::StrictEdge => "strict-edge",
            LocusShape::StrictChain => "strict-chain",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinLocusReport {
    pub value: Rat,
    pub locus: BTreeSet<usize>,
    pub edges: Vec<(usize, usize)>,
    pub connected: bool,
    /// `None` when the locus matches none of the four shapes.
    pub shape: Option<LocusShape>,
    /// `nu/N` strictly increases along every path leaving the locus.
    pub monotone: bool,
    /// The pole of order two, if any.
    pub order_two: Option<Rat>,
}

fn distances(g: &ResolutionGraph, from: &BTreeSet<usize>) -> BTreeMap<usize, usize> {
    let mut dist: BTreeMap<usize, usize> = from.iter().map(|&i| (i, 0)).collect();
    let mut queue: VecDeque<usize> = from.iter().copied().collect();
    while let Some(u) = queue.pop_front() {
        for v in g.neighbors(u) {
            if !dist.contains_key(&v) {
                dist.insert(v, dist[&u] + 1);
                queue.push_back(v);
            }
        }
    }
    dist
}

fn classify(g: &ResolutionGraph, locus: &BTreeSet<usize>, edges: &[(usize, usize)]) -> Option<LocusShape> {
    let inner = |i: usize| edges.iter().filter(|(a, b)| *a == i || *b == i).count();
    let node = |i: usize| g.components[i].kind == Kind::Exceptional && g.valence(i) >= 3;
    let strict: Vec<usize> = locus.iter().copied().filter(|&i| g.components[i].kind == Kind::Strict).collect();
    let is_path = edges.len() + 1 == locus.len() && locus.iter().all(|&i| inner(i) <= 2);
    if !is_path {
        return None;
    }
    let ends: Vec<usize> = if locus.len() == 1 {
        locus.iter().copied().collect()
    } else {
        locus.iter().copied().filter(|&i| inner(i) == 1).collect()
    };
    let interior_ok = locus
        .iter()
        .filter(|i| !ends.contains(i))
        .all(|&i| g.components[i].kind == Kind::Exceptional && g.valence(i) == 2);
    if !interior_ok {
        return None;
    }
    match (strict.len(), locus.len()) {
        (0, 1) if node(ends[0]) => Some(LocusShape::SingleNode),
        (0, n) if n > 1 && ends.iter().all(|&e| node(e)) => Some(LocusShape::ChainBetweenNodes),
        (1, 1) => Some(LocusShape::StrictEdge),
        (1, _) if ends.iter().any(|&e| e != strict[0] && node(e)) => Some(LocusShape::StrictChain),
        _ => None,
    }
}

pub fn analyze_min_locus(g: &ResolutionGraph) -> Result<MinLocusReport> {
    require_plain(g)?;
    let l = lct(g, Locality::Local)?;
    let locus: BTreeSet<usize> = l.achieved_by.iter().copied().collect();
    let edges: Vec<(usize, usize)> = g
        .edges
        .iter()
        .filter(|e| locus.contains(&e.a) && locus.contains(&e.b))
        .map(|e| (e.a, e.b))
        .collect();
    let start = locus.iter().next().copied().into_iter().collect();
    let connected = {
        let mut seen: BTreeSet<usize> = start;
        let mut stack: Vec<usize> = seen.iter().copied().collect();
        while let Some(u) = stack.pop() {
            for &(a, b) in &edges {
                let v = if a == u { b } else if b == u { a } else { continue };
                if seen.insert(v) {
                    stack.push(v);
                }
            }
        }
        seen == locus
    };
    let dist = distances(g, &locus);
    let monotone = g.edges.iter().all(|e| {
        let (u, v) = if dist[&e.a] <= dist[&e.b] { (e.a, e.b) } else { (e.b, e.a) };
        if dist[&u] == dist[&v] {
            return true;
        }
        match (ratio(g, u), ratio(g, v)) {
            (Some(ru), Some(rv)) => rv > ru,
            _ => true,
        }
    });
    let shape = if g.blowup_log.is_empty() { None } else { classify(g, &locus, &edges) };
    let report: PoleReport = poles(&zeta_top(g, &ZetaOptions::local())?, None);
    let order_two = report.entries.iter().find(|e| e.order == 2).map(|e| e.pole.clone());
    Ok(MinLocusReport {
        value: l.value,
        locus,
        edges,
        connected,
        shape,
        monotone,
        order_two,
    })
}

/// Shape and monotonicity of the minimal locus, the order-two pole, and
/// vanishing of the residue contribution of components meeting at most two
/// others.
pub fn check_structure(g: &ResolutionGraph) -> Result<CheckReport> {
    const NAME: &str = "structure";
    require_plain(g)?;
    if !g.is_germ() {
        return Ok(CheckReport::inapplicable(NAME, "stated for germs"));
    }
    if g.blowup_log.is_empty() {
        return Ok(CheckReport::inapplicable(NAME, "germ is already normal crossings"));
    }
    if !is_minimal(g) {
        return Ok(CheckReport::inapplicable(NAME, "resolution is not minimal"));
    }
    let m = analyze_min_locus(g)?;
    let locus = m.locus.iter().map(|i| format!("E{}", i)).collect::<Vec<_>>().join(", ");
    let subject = format!("locus {{{}}} at nu/N = {}", locus, m.value);
    let mut witnesses = alloc::vec![
        Witness::new(subject.clone(), "connected", m.connected),
        Witness::new(subject.clone(), "nu/N strictly increases away from it", m.monotone),
    ];
    let shape_ok = match m.shape {
        Some(LocusShape::SingleNode | LocusShape::ChainBetweenNodes) => true,
        Some(_) => !is_reduced(g),
        None => false,
    };
    witnesses.push(Witness::new(
        subject,
        format!("shape {}", m.shape.map_or("unclassified", |s| s.as_str())),
        shape_ok,
    ));
    let zt = zeta_top(g, &ZetaOptions::local())?;
    let doubles = poles(&zt, None).entries.iter().filter(|e| e.order >= 2).count();
    witnesses.push(Witness::new("poles", format!("{} of order two or more", doubles), doubles <= 1));
    if let Some(p) = &m.order_two {
        let unit = p.numer().abs().is_one();
        witnesses.push(Witness::new(
            format!("order-two pole {}", p),
            format!("equals -lct = {} and is -1/k", -m.value.clone()),
            p == &-m.value.clone() && unit && p.is_negative(),
        ));
    }
    for c in g.exceptional() {
        if g.valence(c.id) > 2 {
            continue;
        }
        match component_residue(g, c.id) {
            Ok(r) => witnesses.push(Witness::new(format!("E{}", c.id), format!("residue contribution {} = 0", r), r.is_zero())),
            Err(Error::SharedRatio(_)) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(CheckReport::judge(NAME, g, witnesses))
}

/// Every check on `c`. Germ-only checks run at each critical point of a
/// global input; holomorphy runs for every `d` from 2 up to the largest
/// `N`, the only orders for which `Z_top(f, d; s)` can be nonzero.
pub fn check_all(g: &ResolutionGraph, opts: ResolveOptions) -> Result<Vec<CheckReport>> {
    require_plain(g)?;
    let mut out = alloc::vec![check_monodromy_conjecture(g, opts)?];
    let max_n = g.components.iter().map(|k| g.total_n(k.id)).max().unwrap_or(1);
    for d in 2..=max_n {
        let mut r = check_holomorphy(g, d, opts)?;
        r.name = format!("holomorphy d={}", d);
        out.push(r);
    }
    let germs = if g.is_germ() {
        alloc::vec![(None, g.clone())]
    } else {
        local_graphs(g, opts)?.into_iter().map(|(p, h)| (Some(p), h)).collect()
    };
    for (p, h) in germs {
        let z = zeta_top(&h, &ZetaOptions::local())?;
        let mut reports = alloc::vec![check_numerical_relations(&h)?, check_pole_determination(&h, &z)?, check_structure(&h)?];
        if let Some(p) = p {
            for r in &mut reports {
                r.name = format!("{} at {}", r.name, pt_string(&p));
            }
        }
        out.extend(reports);
    }
    Ok(out)
}
