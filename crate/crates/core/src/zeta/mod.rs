//! Topological zeta functions (plain, with a character, with a form and
//! multivariate), pole reports and the germ-local motivic zeta function.

mod motivic;

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{LinForm, Rat, RatFunc1, RatFuncMulti};
use crate::error::{Error, Result};
use crate::resolution::{Kind, ResolutionGraph, Stratum};

pub use motivic::{zeta_motivic_local, MotivicRat, MotivicTerm};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Locality {
    /// Strata over the base point of a germ resolution.
    #[default]
    Local,
    /// All strata of a resolution of the affine curve.
    Global,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZetaOptions {
    pub locality: Locality,
    /// Only strata whose components all have `d | N` contribute.
    pub character: u64,
}

impl Default for ZetaOptions {
    fn default() -> Self {
        ZetaOptions {
            locality: Locality::Local,
            character: 1,
        }
    }
}

impl ZetaOptions {
    pub fn local() -> Self {
        Self::default()
    }

    pub fn global() -> Self {
        ZetaOptions {
            locality: Locality::Global,
            character: 1,
        }
    }

    pub fn with_character(mut self, d: u64) -> Self {
        self.character = d;
        self
    }
}

/// `nu` of a component for the volume form in use: `nu + N` of the form
/// polynomial when the graph carries one.
pub fn effective_nu(g: &ResolutionGraph, id: usize) -> u64 {
    u64::from(g.components[id].nu) + g.form_n(id)
}

/// The strata selected by `opts`, before the character filter.
pub fn strata(g: &ResolutionGraph, opts: &ZetaOptions) -> Result<Vec<Stratum>> {
    if opts.character == 0 {
        return Err(Error::Invalid(String::from("character order must be positive")));
    }
    match opts.locality {
        Locality::Local => g.local_strata(),
        Locality::Global => g.global_strata(),
    }
}

fn admitted(g: &ResolutionGraph, s: &Stratum, d: u64) -> bool {
    s.comps.iter().all(|&i| g.total_n(i).is_multiple_of(d))
}

fn int(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

/// `sum_I chi(E_I°) prod_{i in I} 1 / (nu_i + N_i s)` over the admitted strata.
pub fn zeta_top(g: &ResolutionGraph, opts: &ZetaOptions) -> Result<RatFunc1> {
    let mut acc = RatFunc1::zero();
    for s in strata(g, opts)? {
        if s.chi == 0 || !admitted(g, &s, opts.character) {
            continue;
        }
        let forms: Vec<(i64, i64)> = s
            .comps
            .iter()
            .map(|&i| (effective_nu(g, i) as i64, g.total_n(i) as i64))
            .collect();
        acc = acc.add(&RatFunc1::term(int(s.chi), &forms)?);
    }
    Ok(acc.normalize())
}

/// The linear form `nu_i + sum_l m_l N_i^(l) s_l` over the function labels.
pub fn multi_form(g: &ResolutionGraph, id: usize) -> LinForm {
    let c = &g.components[id];
    let coeffs = g
        .function_labels()
        .into_iter()
        .map(|l| i64::from(g.labels[l].multiplicity) * i64::from(c.n[l]))
        .collect();
    LinForm::new(effective_nu(g, id) as i64, coeffs)
}

/// Multivariate zeta function with one variable per function label, and
/// its polar locus.
pub fn zeta_top_multi(g: &ResolutionGraph, opts: &ZetaOptions) -> Result<(RatFuncMulti, Vec<LinForm>)> {
    let k = g.function_labels().len();
    let mut acc = RatFuncMulti::zero(k);
    for s in strata(g, opts)? {
        if s.chi == 0 || !admitted(g, &s, opts.character) {
            continue;
        }
        let forms: Vec<LinForm> = s.comps.iter().map(|&i| multi_form(g, i)).collect();
        let t = if forms.is_empty() {
            RatFuncMulti::constant(k, int(s.chi))
        } else {
            RatFuncMulti::term(int(s.chi), &forms)?
        };
        acc = acc.add(&t);
    }
    let acc = acc.normalize();
    let polar = acc.polar_locus();
    Ok((acc, polar))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoleEntry {
    pub pole: Rat,
    pub order: u32,
    /// Residue for simple poles, otherwise the coefficient of
    /// `(s - pole)^(-order)`.
    pub coefficient: Rat,
    /// Components with `-nu/N` equal to the pole.
    pub contributors: BTreeSet<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PoleReport {
    pub entries: Vec<PoleEntry>,
}

impl PoleReport {
    pub fn poles(&self) -> Vec<Rat> {
        self.entries.iter().map(|e| e.pole.clone()).collect()
    }

    pub fn get(&self, pole: &Rat) -> Option<&PoleEntry> {
        self.entries.iter().find(|e| &e.pole == pole)
    }
}

/// Candidate pole `-nu/N` of a component, `None` when `N = 0`.
pub fn candidate_pole(g: &ResolutionGraph, id: usize) -> Option<Rat> {
    let n = g.total_n(id);
    if n == 0 {
        return None;
    }
    Some(-Rat::new(BigInt::from(effective_nu(g, id)), BigInt::from(n)))
}

/// Poles of a normalized zeta function; contributors are read from `g`
/// when given.
pub fn poles(r: &RatFunc1, g: Option<&ResolutionGraph>) -> PoleReport {
    let entries = r
        .normalize()
        .poles()
        .into_iter()
        .map(|p| {
            let contributors = match g {
                Some(g) => (0..g.components.len())
                    .filter(|&i| candidate_pole(g, i).as_ref() == Some(&p.pole))
                    .collect(),
                None => BTreeSet::new(),
            };
            PoleEntry {
                pole: p.pole,
                order: p.order,
                coefficient: p.leading_coefficient,
                contributors,
            }
        })
        .collect();
    PoleReport { entries }
}

/// `(1/N_j)(2 - r + sum_i 1/alpha_i)` with `alpha_i = nu_i - (nu_j/N_j) N_i`
/// over the `r` neighbours of the exceptional component `E_j`.
pub fn component_residue(g: &ResolutionGraph, j: usize) -> Result<Rat> {
    let c = g.component(j)?;
    if c.kind != Kind::Exceptional {
        return Err(Error::Invalid(alloc::format!("E{} is not exceptional", j)));
    }
    let nj = int(g.total_n(j) as i64);
    let ratio = int(effective_nu(g, j) as i64) / &nj;
    let nbrs = g.neighbors(j);
    let mut acc = int(2 - nbrs.len() as i64);
    for i in nbrs {
        let alpha = int(effective_nu(g, i) as i64) - &ratio * int(g.total_n(i) as i64);
        if alpha.is_zero() {
            return Err(Error::SharedRatio(i));
        }
        acc += Rat::one() / alpha;
    }
    Ok(acc / nj)
}
