//! Solution counts of `f = 0` over `Z/p^i Z`.

use alloc::vec::Vec;

use crate::algebra::rat::{mulmod, rat_mod};
use crate::algebra::{MPoly, Rat};
use crate::error::{Error, Result};

/// Default cap on `p^(2 imax)`.
pub const DEFAULT_COUNT_BUDGET: u64 = 1_000_000_000;

/// A polynomial in `x, y` with coefficients reduced modulo `m`.
#[derive(Clone, Debug)]
pub struct ModPoly {
    m: u64,
    terms: Vec<(u32, u32, u64)>,
}

impl ModPoly {
    /// `None` when a coefficient has a denominator not invertible mod `m`.
    pub fn reduce(f: &MPoly, m: u64) -> Option<ModPoly> {
        let mut terms = Vec::new();
        for (e, c) in f.terms() {
            let r = rat_mod(c, m)?;
            if r != 0 {
                terms.push((e[0], e[1], r));
            }
        }
        Some(ModPoly { m, terms })
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn eval(&self, x: u64, y: u64) -> u64 {
        let m = self.m;
        let mut acc = 0u64;
        for &(a, b, c) in &self.terms {
            let mut t = c;
            for _ in 0..a {
                t = mulmod(t, x, m);
            }
            for _ in 0..b {
                t = mulmod(t, y, m);
            }
            acc = (acc + t) % m;
        }
        acc
    }
}

/// `counts[i - 1] = #{(x, y) mod p^i : f(x, y) = 0 mod p^i}`, restricted to
/// pairs that are `0 mod p` when `restricted` is set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountSeries {
    pub p: u64,
    pub counts: Vec<u64>,
    pub restricted: bool,
}

fn check_budget(p: u64, imax: u32, budget: u64) -> Result<()> {
    let mut size: u128 = 1;
    for _ in 0..2 * imax {
        size *= u128::from(p);
        if size > u128::from(budget) {
            return Err(Error::BudgetExceeded(budget));
        }
    }
    Ok(())
}

fn reduce_checked(f: &MPoly, m: u64) -> Result<ModPoly> {
    ModPoly::reduce(f, m).ok_or_else(|| Error::Invalid(alloc::format!("coefficients of f are not integral at {}", m)))
}

/// Counts by lifting: the solutions mod `p^(i+1)` lie over those mod `p^i`.
/// Above an `F_p`-point where the gradient does not vanish every solution
/// has exactly `p` lifts, so only the residue classes of singular
/// `F_p`-points are enumerated explicitly.
pub fn brute_force_counts(f: &MPoly, p: u64, imax: u32, restricted: bool, budget: u64) -> Result<CountSeries> {
    check_budget(p, imax, budget)?;
    let mut counts = Vec::new();
    if imax == 0 {
        return Ok(CountSeries { p, counts, restricted });
    }
    let modulus = p.pow(imax);
    let fm = reduce_checked(f, modulus)?;
    let f1 = reduce_checked(f, p)?;
    let fx = reduce_checked(&f.derivative(0), p)?;
    let fy = reduce_checked(&f.derivative(1), p)?;
    let mut smooth = 0u64;
    let mut sing: Vec<(u64, u64)> = Vec::new();
    let range = if restricted { 1 } else { p };
    for x in 0..range {
        for y in 0..range {
            if f1.eval(x, y) != 0 {
                continue;
            }
            if fx.eval(x, y) == 0 && fy.eval(x, y) == 0 {
                sing.push((x, y));
            } else {
                smooth += 1;
            }
        }
    }
    counts.push(smooth + sing.len() as u64);
    let mut pi = p;
    for _ in 1..imax {
        let next_mod = pi * p;
        let mut next = Vec::new();
        for &(x, y) in &sing {
            for a in 0..p {
                for b in 0..p {
                    let (u, v) = (x + a * pi, y + b * pi);
                    if fm.eval(u, v) % next_mod == 0 {
                        next.push((u, v));
                    }
                }
            }
        }
        sing = next;
        pi = next_mod;
        counts.push(smooth * pi / p + sing.len() as u64);
    }
    Ok(CountSeries { p, counts, restricted })
}

/// Plain enumeration over `(Z/p^i Z)^2`, for cross-checking.
pub fn naive_counts(f: &MPoly, p: u64, imax: u32, restricted: bool) -> Result<CountSeries> {
    let mut counts = Vec::new();
    let mut m = 1u64;
    for _ in 0..imax {
        m *= p;
        let fm = reduce_checked(f, m)?;
        let step = if restricted { p } else { 1 };
        let mut c = 0;
        let mut x = 0;
        while x < m {
            let mut y = 0;
            while y < m {
                if fm.eval(x, y) == 0 {
                    c += 1;
                }
                y += step;
            }
            x += step;
        }
        counts.push(c);
    }
    Ok(CountSeries { p, counts, restricted })
}

/// `F_p`-points of `f = 0` in the plane.
pub fn fp_points(f: &ModPoly, p: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    for x in 0..p {
        for y in 0..p {
            if f.eval(x, y) == 0 {
                out.push((x, y));
            }
        }
    }
    out
}

/// Reduction of a rational point, `None` when it is not `p`-integral.
pub fn reduce_point(pt: &(Rat, Rat), p: u64) -> Option<(u64, u64)> {
    Some((rat_mod(&pt.0, p)?, rat_mod(&pt.1, p)?))
}
