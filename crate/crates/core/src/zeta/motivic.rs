//! Germ-local motivic zeta function. Every stratum over the base point is a
//! point or a punctured projective line, so its class is `a L + b`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use super::{effective_nu, strata, ZetaOptions};
use crate::algebra::rat::pow_i;
use crate::algebra::{Rat, RatFunc1, UPoly};
use crate::error::{Error, Result};
use crate::padic::combine_terms;
use crate::resolution::ResolutionGraph;

/// `[E_I°] (L - 1)^|I| prod_{i in I} L^(-nu_i) T^(N_i) / (1 - L^(-nu_i) T^(N_i))`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MotivicTerm {
    /// The class `a L + b` as `(a, b)`.
    pub class: (i64, i64),
    /// `(nu_i, N_i)` for `i in I`.
    pub factors: Vec<(u64, u64)>,
}

/// `L^(-2) sum` of the terms.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MotivicRat {
    pub terms: Vec<MotivicTerm>,
}

pub fn zeta_motivic_local(g: &ResolutionGraph) -> Result<MotivicRat> {
    let mut terms = Vec::new();
    for s in strata(g, &ZetaOptions::local())? {
        let class = s
            .class
            .ok_or_else(|| Error::Invalid(String::from("stratum without a class in L")))?;
        if class == (0, 0) {
            continue;
        }
        let factors = s.comps.iter().map(|&i| (effective_nu(g, i), g.total_n(i))).collect();
        terms.push(MotivicTerm { class, factors });
    }
    Ok(MotivicRat { terms })
}

fn int(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

impl MotivicRat {
    /// `[E_I°] -> chi`, each factor `-> 1/(nu + N s)`.
    pub fn topological(&self) -> Result<RatFunc1> {
        let mut acc = RatFunc1::zero();
        for t in &self.terms {
            let chi = t.class.0 + t.class.1;
            let forms: Vec<(i64, i64)> = t.factors.iter().map(|&(nu, n)| (nu as i64, n as i64)).collect();
            acc = acc.add(&RatFunc1::term(int(chi), &forms)?);
        }
        Ok(acc.normalize())
    }

    fn weighted(&self, l: &Rat) -> Vec<(Rat, &[(u64, u64)])> {
        self.terms
            .iter()
            .map(|t| (l * int(t.class.0) + int(t.class.1), t.factors.as_slice()))
            .collect()
    }

    /// Specialization at a numeric `L`: the numerator in `T` and the
    /// factors `(nu, N)` of the denominator `prod (1 - L^(-nu) T^N)^e`.
    pub fn specialize(&self, l: &Rat) -> (UPoly, BTreeMap<(u64, u64), u32>) {
        combine_terms(l, self.weighted(l))
    }

    /// Taylor coefficients in `T` at a numeric `L`.
    pub fn series_at(&self, l: &Rat, order: usize) -> Result<Vec<Rat>> {
        let (num, den) = self.specialize(l);
        let mut d = UPoly::one();
        for (&(nu, n), &e) in &den {
            let f = UPoly::one() - UPoly::monomial(n as usize, pow_i(l, -(nu as i64)));
            d = &d * &f.pow(e);
        }
        crate::algebra::series_expand(&num, &d, order)
    }
}

fn class_string(a: i64, b: i64) -> String {
    match (a, b) {
        (0, b) => format!("{}", b),
        (1, 0) => String::from("L"),
        (1, b) if b > 0 => format!("(L+{})", b),
        (1, b) => format!("(L-{})", -b),
        (a, 0) => format!("{}L", a),
        (a, b) if b > 0 => format!("({}L+{})", a, b),
        (a, b) => format!("({}L-{})", a, -b),
    }
}

impl fmt::Display for MotivicRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        f.write_str("L^-2 [")?;
        for (k, t) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            if t.class != (0, 1) || t.factors.is_empty() {
                f.write_str(&class_string(t.class.0, t.class.1))?;
            }
            if !t.factors.is_empty() {
                if t.factors.len() == 1 {
                    f.write_str("(L-1)")?;
                } else {
                    write!(f, "(L-1)^{}", t.factors.len())?;
                }
            }
            for &(nu, n) in &t.factors {
                let tn = if n == 1 { String::from("T") } else { format!("T^{}", n) };
                write!(f, " L^-{}{}/(1-L^-{}{})", nu, tn, nu, tn)?;
            }
        }
        f.write_str("]")
    }
}
