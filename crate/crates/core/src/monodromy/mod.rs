//! Monodromy zeta functions by A'Campo's formula, the characteristic
//! polynomial on the first cohomology of the Milnor fibre, eigenvalues
//! near a point, and log canonical thresholds.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::rat::divisors;
use crate::algebra::{Rat, UnityRat};
use crate::error::{Error, Result};
use crate::resolution::ResolutionGraph;
use crate::zeta::Locality;

/// Where an eigenvalue order was found.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum EigenSource {
    ZetaZero,
    ZetaPole,
    /// Smooth points of a branch with multiplicity `N` contribute all
    /// `N`-th roots of unity.
    SmoothPoint,
}

impl EigenSource {
    pub fn as_str(self) -> &'static str {
        match self {
            EigenSource::ZetaZero => "zeta-zero",
            EigenSource::ZetaPole => "zeta-pole",
            EigenSource::SmoothPoint => "smooth-point",
        }
    }
}

/// Orders `l` of the roots of unity that occur as eigenvalues, each with
/// the first source that produced it.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EigenvalueSet {
    pub provenance: BTreeMap<u64, EigenSource>,
}

impl EigenvalueSet {
    pub fn orders(&self) -> BTreeSet<u64> {
        self.provenance.keys().copied().collect()
    }

    pub fn contains(&self, l: u64) -> bool {
        self.provenance.contains_key(&l)
    }

    pub fn insert(&mut self, l: u64, src: EigenSource) {
        self.provenance.entry(l).or_insert(src);
    }

    pub fn extend(&mut self, other: &EigenvalueSet) {
        for (&l, &s) in &other.provenance {
            self.insert(l, s);
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LctValue {
    pub value: Rat,
    pub achieved_by: Vec<usize>,
}

fn no_form(g: &ResolutionGraph) -> Result<()> {
    if g.has_form() {
        return Err(Error::Invalid(String::from("monodromy invariants ignore differential forms; drop the form")));
    }
    Ok(())
}

/// `prod_j (t^(N_j) - 1)^(-chi(E_j°))` over the components with `N_j > 0`.
/// Local mode takes `E_j°` inside the fibre over the base point, global
/// mode takes the whole `E_j°` of a resolution of the affine curve.
pub fn acampo_zeta(g: &ResolutionGraph, locality: Locality) -> Result<UnityRat> {
    no_form(g)?;
    let strata = match locality {
        Locality::Local => g.local_strata()?,
        Locality::Global => g.global_strata()?,
    };
    let mut z = UnityRat::one();
    for s in strata.iter().filter(|s| s.comps.len() == 1) {
        let n = g.total_n(s.comps[0]);
        if n > 0 {
            z.mul_factor(n, -s.chi);
        }
    }
    Ok(z)
}

/// `(t - 1) zeta_0(t)`, the characteristic polynomial of the monodromy on
/// the first cohomology of the Milnor fibre of a reduced germ.
pub fn char_poly_p1(g: &ResolutionGraph) -> Result<UnityRat> {
    if !g.is_germ() {
        return Err(Error::Invalid(String::from("P1 is defined for germs")));
    }
    for c in g.strict() {
        let n = g.total_n(c.id);
        if n > 1 {
            return Err(Error::NotIsolated(alloc::format!(
                "branch E{} has multiplicity {}, so the germ is singular along it",
                c.id, n
            )));
        }
    }
    let p = acampo_zeta(g, Locality::Local)?.mul(&UnityRat::t_minus_one());
    if !p.is_polynomial() {
        return Err(Error::NotIsolated(String::from("(t-1) zeta_0 is not a polynomial")));
    }
    Ok(p)
}

/// Milnor number of a reduced germ, the degree of `P1`.
pub fn milnor_number(g: &ResolutionGraph) -> Result<u64> {
    Ok(char_poly_p1(g)?.degree() as u64)
}

/// Eigenvalue orders at the base point and at nearby points: the
/// cyclotomic orders of `zeta_0`, and every divisor of the multiplicity of
/// a branch through the base point.
pub fn eigenvalue_orders_near(g: &ResolutionGraph) -> Result<EigenvalueSet> {
    if !g.is_germ() {
        return Err(Error::Invalid(String::from("eigenvalues near a point need a germ resolution")));
    }
    let mut set = EigenvalueSet::default();
    for (l, m) in acampo_zeta(g, Locality::Local)?.phi_multiplicities() {
        set.insert(l, if m > 0 { EigenSource::ZetaZero } else { EigenSource::ZetaPole });
    }
    for c in g.strict() {
        let n = g.total_n(c.id);
        if n > 0 {
            for d in divisors(n) {
                set.insert(d, EigenSource::SmoothPoint);
            }
        }
    }
    Ok(set)
}

/// `min nu_j / N_j` over components with `N_j > 0`. For a germ graph these
/// are exactly the components meeting the fibre over the base point.
pub fn lct(g: &ResolutionGraph, locality: Locality) -> Result<LctValue> {
    match locality {
        Locality::Local if !g.is_germ() => {
            return Err(Error::Invalid(String::from("local lct needs a germ resolution")));
        }
        Locality::Global if g.is_germ() => {
            return Err(Error::Invalid(String::from("global lct needs a resolution of the affine curve")));
        }
        _ => {}
    }
    let mut best: Option<LctValue> = None;
    for c in &g.components {
        let n = g.total_n(c.id);
        if n == 0 {
            continue;
        }
        let r = Rat::new(i64::from(c.nu).into(), (n as i64).into());
        match &mut best {
            Some(b) if r > b.value => {}
            Some(b) if r == b.value => b.achieved_by.push(c.id),
            _ => {
                best = Some(LctValue {
                    value: r,
                    achieved_by: alloc::vec![c.id],
                })
            }
        }
    }
    best.ok_or_else(|| Error::Invalid(String::from("no component has N > 0")))
}

#[cfg(test)]
mod tests;
