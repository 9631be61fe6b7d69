//! The built-in corpus of plane curve germs at the origin. Every entry is
//! a list of factors with multiplicities, so multi-label computations see
//! the same factorization as the product.

use monolab_core::algebra::{MPoly, Rat};
use num_traits::Zero;
use monolab_core::resolution::{Base, CurveSystem, Factor, Role};

use crate::parse::{parse_poly, ParseError};

#[derive(Clone, Copy, Debug)]
pub struct Entry {
    pub name: &'static str,
    pub factors: &'static [(&'static str, u32)],
}

pub const CORPUS: &[Entry] = &[
    Entry { name: "smooth", factors: &[("x", 1)] },
    Entry { name: "node-axes", factors: &[("x", 1), ("y", 1)] },
    Entry { name: "x^2y", factors: &[("x", 2), ("y", 1)] },
    Entry { name: "x^2y^3", factors: &[("x", 2), ("y", 3)] },
    Entry { name: "x^3y^2", factors: &[("x", 3), ("y", 2)] },
    Entry { name: "node", factors: &[("y-x", 1), ("y+x", 1)] },
    Entry { name: "triple-point", factors: &[("x", 1), ("y", 1), ("y-x", 1)] },
    Entry { name: "tacnode", factors: &[("y-x^2", 1), ("y+x^2", 1)] },
    Entry { name: "cusp-2-3", factors: &[("y^2-x^3", 1)] },
    Entry { name: "cusp-2-5", factors: &[("y^2-x^5", 1)] },
    Entry { name: "cusp-3-5", factors: &[("y^3-x^5", 1)] },
    Entry { name: "cusp-3-7", factors: &[("y^3-x^7", 1)] },
    Entry { name: "cusp-4-5", factors: &[("y^4-x^5", 1)] },
    Entry { name: "deformed-double-cusp", factors: &[("(y^2-x^3)^2-x^6*y", 1)] },
    Entry { name: "double-cusp", factors: &[("y^2-x^3", 2)] },
    Entry { name: "line-through-cusp", factors: &[("x", 1), ("y^2-x^3", 1)] },
    Entry { name: "tangent-through-cusp", factors: &[("y", 1), ("y^2-x^3", 1)] },
    Entry { name: "double-line-through-cusp", factors: &[("x", 2), ("y^2-x^3", 1)] },
    Entry { name: "transverse-cusps", factors: &[("y^2-x^3", 1), ("x^2-y^3", 1)] },
    Entry { name: "tangent-cusps", factors: &[("y^2-x^3", 1), ("y^2+x^3", 1)] },
    Entry { name: "cusp-2-3-times-3-5", factors: &[("y^2-x^3", 1), ("y^3-x^5", 1)] },
    Entry { name: "cusp-2-3-times-2-5", factors: &[("y^2-x^3", 1), ("y^2-x^5", 1)] },
    Entry { name: "x^2y^3-diagonal", factors: &[("x", 2), ("y", 3), ("y-x", 1)] },
];

impl Entry {
    pub fn factor_polys(&self) -> Result<Vec<(MPoly, u32)>, ParseError> {
        self.factors.iter().map(|&(s, m)| Ok((parse_poly(s)?, m))).collect()
    }

    /// The product of the factors raised to their multiplicities.
    pub fn poly(&self) -> Result<MPoly, ParseError> {
        let mut f = MPoly::one(2);
        for (g, m) in self.factor_polys()? {
            f = &f * &g.pow(m);
        }
        Ok(f)
    }

    /// Text of the product as the factors were written.
    pub fn text(&self) -> String {
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|&(s, m)| {
                let atomic = self.factors.len() == 1 && m == 1 || !s.contains(['+', '-']);
                let base = if atomic { s.to_string() } else { format!("({})", s) };
                if m == 1 {
                    base
                } else {
                    format!("{}^{}", base, m)
                }
            })
            .collect();
        parts.join("*")
    }

    /// One labelled factor per entry, as a germ at the origin.
    pub fn labelled(&self) -> Result<CurveSystem, ParseError> {
        let factors = self
            .factor_polys()?
            .into_iter()
            .enumerate()
            .map(|(i, (poly, multiplicity))| Factor {
                label: format!("f{}", i + 1),
                poly,
                multiplicity,
                role: Role::Function,
            })
            .collect();
        Ok(CurveSystem { factors, base: Base::Point(Rat::zero(), Rat::zero()) })
    }
}

pub fn find(name: &str) -> Option<&'static Entry> {
    CORPUS.iter().find(|e| e.name == name)
}
