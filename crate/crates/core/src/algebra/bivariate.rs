//! Bivariate polynomial algorithms over Q: gcd, squarefree decomposition,
//! resultants and coprime refinement. Variable 0 is `x`, variable 1 is `y`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::mpoly::MPoly;
use super::rat::Rat;
use super::upoly::UPoly;

fn deg_y(f: &MPoly) -> u32 {
    f.degree_in(1).unwrap_or(0)
}

fn x_poly(p: &UPoly) -> MPoly {
    MPoly::from_upoly(2, 0, p)
}

/// Gcd in `Q[x]` of the coefficients of `f` as a polynomial in `y`.
pub fn content_y(f: &MPoly) -> UPoly {
    let mut g = UPoly::zero();
    for c in f.coefficients_in(1) {
        let c = c.to_upoly(0).expect("coefficient depends on x only");
        g = g.gcd(&c);
        if g.degree() == Some(0) {
            break;
        }
    }
    g
}

pub fn primitive_part_y(f: &MPoly) -> MPoly {
    if f.is_zero() {
        return f.clone();
    }
    let c = content_y(f);
    f.div_exact(&x_poly(&c)).expect("content divides")
}

fn prem_y(a: &MPoly, b: &MPoly) -> MPoly {
    let db = deg_y(b);
    let lcb = b.coefficients_in(1).pop().unwrap();
    let mut r = a.clone();
    while !r.is_zero() && deg_y(&r) >= db {
        let dr = deg_y(&r);
        let lcr = r.coefficients_in(1).pop().unwrap();
        let mut e = vec![0; 2];
        e[1] = dr - db;
        let shift = MPoly::monomial(e, Rat::one());
        r = &lcb * &r - &(&lcr * &shift) * b;
    }
    r
}

/// Greatest common divisor, normalized by [`MPoly::primitive`].
pub fn gcd(a: &MPoly, b: &MPoly) -> MPoly {
    if a.is_zero() {
        return b.primitive();
    }
    if b.is_zero() {
        return a.primitive();
    }
    let ca = content_y(a);
    let cb = content_y(b);
    let c = ca.gcd(&cb);
    let mut p = a.div_exact(&x_poly(&ca)).unwrap();
    let mut q = b.div_exact(&x_poly(&cb)).unwrap();
    if deg_y(&p) < deg_y(&q) {
        core::mem::swap(&mut p, &mut q);
    }
    let g = loop {
        if deg_y(&q) == 0 {
            break MPoly::one(2);
        }
        let r = prem_y(&p, &q);
        if r.is_zero() {
            break q;
        }
        p = q;
        q = primitive_part_y(&r);
    };
    (&g * &x_poly(&c)).primitive()
}

/// Squarefree decomposition `f = c * prod g_i^i` with pairwise coprime,
/// squarefree, primitive `g_i`. Constant pieces are omitted.
pub fn squarefree_decomposition(f: &MPoly) -> Vec<(MPoly, u32)> {
    let mut out = Vec::new();
    if f.is_zero() || f.is_constant() {
        return out;
    }
    let c = content_y(f);
    for (g, m) in univariate_yun(&c) {
        out.push((x_poly(&g).primitive(), m));
    }
    let p = f.div_exact(&x_poly(&c)).unwrap();
    if deg_y(&p) == 0 {
        return out;
    }
    let dp = p.derivative(1);
    let a0 = gcd(&p, &dp);
    let mut b = p.div_exact(&a0).unwrap();
    let c1 = dp.div_exact(&a0).unwrap();
    let mut d = c1 - b.derivative(1);
    let mut i = 1;
    while !b.is_constant() {
        let a = gcd(&b, &d);
        if !a.is_constant() {
            out.push((a.primitive(), i));
        }
        let nb = b.div_exact(&a).unwrap();
        let nc = d.div_exact(&a).unwrap();
        d = nc - nb.derivative(1);
        b = nb;
        i += 1;
    }
    out
}

fn univariate_yun(f: &UPoly) -> Vec<(UPoly, u32)> {
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.div_exact(&a0).unwrap();
    let c1 = df.div_exact(&a0).unwrap();
    let mut d = &c1 - &b.derivative();
    let mut i = 1;
    while b.degree().unwrap_or(0) > 0 {
        let a = b.gcd(&d);
        if a.degree().unwrap_or(0) > 0 {
            out.push((a.clone(), i));
        }
        let nb = b.div_exact(&a).unwrap();
        let nc = d.div_exact(&a).unwrap();
        d = &nc - &nb.derivative();
        b = nb;
        i += 1;
    }
    out
}

/// Squarefree part of `f`, primitive.
pub fn squarefree_part(f: &MPoly) -> MPoly {
    squarefree_decomposition(f)
        .into_iter()
        .fold(MPoly::one(2), |acc, (g, _)| &acc * &g)
        .primitive()
}

/// A pairwise coprime squarefree piece together with its exponent in each
/// input polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Atom {
    pub poly: MPoly,
    pub exps: Vec<u32>,
}

/// Refines the squarefree decompositions of `polys` into a pairwise
/// coprime family so that every input is a constant times a product of
/// atom powers.
pub fn coprime_base(polys: &[MPoly]) -> Vec<Atom> {
    let k = polys.len();
    let mut atoms: Vec<Atom> = Vec::new();
    for (label, f) in polys.iter().enumerate() {
        for (piece, e) in squarefree_decomposition(f) {
            let mut q = piece;
            let mut next = Vec::new();
            for atom in atoms.drain(..) {
                let g = gcd(&q, &atom.poly);
                if g.is_constant() {
                    next.push(atom);
                    continue;
                }
                let rest = atom.poly.div_exact(&g).unwrap();
                if !rest.is_constant() {
                    next.push(Atom {
                        poly: rest.primitive(),
                        exps: atom.exps.clone(),
                    });
                }
                let mut exps = atom.exps;
                exps[label] += e;
                next.push(Atom { poly: g, exps });
                q = q.div_exact(&next.last().unwrap().poly).unwrap();
            }
            atoms = next;
            if !q.is_constant() {
                let mut exps = vec![0; k];
                exps[label] = e;
                atoms.push(Atom {
                    poly: q.primitive(),
                    exps,
                });
            }
        }
    }
    atoms
}

/// Interpolating polynomial through `(xs[i], ys[i])` by divided differences.
pub fn interpolate(xs: &[Rat], ys: &[Rat]) -> UPoly {
    let n = xs.len();
    let mut coef = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            coef[i] = (&coef[i] - &coef[i - 1]) / (&xs[i] - &xs[i - j]);
        }
    }
    let mut p = UPoly::constant(coef[n - 1].clone());
    for i in (0..n - 1).rev() {
        p = &(&p * &UPoly::linear_root(&xs[i])) + &UPoly::constant(coef[i].clone());
    }
    p
}

/// `f(x0, y)` as a polynomial in `y`.
pub fn specialize_x(f: &MPoly, x0: &Rat) -> UPoly {
    let mut coeffs = Vec::new();
    for c in f.coefficients_in(1) {
        coeffs.push(c.to_upoly(0).unwrap().eval(x0));
    }
    UPoly::new(coeffs)
}

/// Resultant of `g` and `h` with respect to `y`, as a polynomial in `x`.
/// Computed by evaluation at integer abscissae where neither leading
/// coefficient vanishes, followed by interpolation.
pub fn resultant_y(g: &MPoly, h: &MPoly) -> UPoly {
    let (dg, dh) = (deg_y(g), deg_y(h));
    if g.is_zero() || h.is_zero() {
        return UPoly::zero();
    }
    let lg = g.coefficients_in(1).pop().unwrap().to_upoly(0).unwrap();
    let lh = h.coefficients_in(1).pop().unwrap().to_upoly(0).unwrap();
    let bound = g.total_degree().unwrap() as usize * h.total_degree().unwrap() as usize;
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    let mut t: i64 = 0;
    while xs.len() <= bound {
        let x0 = Rat::from_integer(BigInt::from(t));
        t = if t > 0 { -t } else { -t + 1 };
        if lg.eval(&x0).is_zero() || lh.eval(&x0).is_zero() {
            continue;
        }
        let a = specialize_x(g, &x0);
        let b = specialize_x(h, &x0);
        debug_assert_eq!(a.degree(), Some(dg as usize));
        debug_assert_eq!(b.degree(), Some(dh as usize));
        ys.push(a.resultant(&b));
        xs.push(x0);
    }
    interpolate(&xs, &ys)
}

/// Determinant by Gaussian elimination over `Q`.
pub fn determinant(mut m: Vec<Vec<Rat>>) -> Rat {
    let n = m.len();
    let mut det = Rat::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rat::zero();
        };
        if piv != col {
            m.swap(piv, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &p;
            let (top, rest) = m.split_at_mut(r);
            for (x, y) in rest[0][col..n].iter_mut().zip(&top[col][col..n]) {
                *x -= &factor * y;
            }
        }
    }
    det
}

/// Principal subresultant coefficient of index `k` of two univariate
/// polynomials of degrees `m >= n`.
fn psc(a: &UPoly, b: &UPoly, k: usize) -> Rat {
    let (m, n) = (a.degree().unwrap(), b.degree().unwrap());
    let size = m + n - 2 * k;
    let width = m + n - k;
    let mut rows = Vec::new();
    for (p, deg, count) in [(a, m, n - k), (b, n, m - k)] {
        for i in 0..count {
            // p * y^(count - 1 - i), columns from y^(width - 1) down to y^0
            let shift = count - 1 - i;
            let mut row = alloc::vec![Rat::zero(); size];
            for (col, slot) in row.iter_mut().enumerate() {
                let power = width - 1 - col;
                if power >= shift && power - shift <= deg {
                    *slot = p.coeff(power - shift);
                }
            }
            rows.push(row);
        }
    }
    determinant(rows)
}

/// Principal subresultant coefficients `psc_0, ..., psc_(n-1)` of `g` and
/// `h` with respect to `y`, as polynomials in `x`. The leading coefficients
/// in `y` of both must be nonzero constants.
pub fn principal_subresultants_y(g: &MPoly, h: &MPoly) -> Vec<UPoly> {
    let (m, n) = (deg_y(g) as usize, deg_y(h) as usize);
    assert!(m >= n && n >= 1, "degrees must satisfy deg g >= deg h >= 1");
    let d = g.total_degree().unwrap().max(h.total_degree().unwrap()) as usize;
    let npts = (m + n) * d + 1;
    let xs: Vec<Rat> = (0..npts as i64).map(|t| Rat::from_integer(BigInt::from(t))).collect();
    let specs: Vec<(UPoly, UPoly)> = xs.iter().map(|x0| (specialize_x(g, x0), specialize_x(h, x0))).collect();
    (0..n)
        .map(|k| {
            let ys: Vec<Rat> = specs.iter().map(|(a, b)| psc(a, b, k)).collect();
            interpolate(&xs, &ys)
        })
        .collect()
}

/// True when `f` has no repeated factor.
pub fn is_squarefree(f: &MPoly) -> bool {
    squarefree_decomposition(f).iter().all(|(_, m)| *m == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::int;
    use proptest::prelude::*;

    fn x() -> MPoly {
        MPoly::var(2, 0)
    }
    fn y() -> MPoly {
        MPoly::var(2, 1)
    }
    fn c(v: i64) -> MPoly {
        MPoly::constant(2, int(v))
    }

    #[test]
    fn gcd_finds_common_branch() {
        let cusp = y().pow(2) - x().pow(3);
        let a = &cusp * &(x() + y());
        let b = &cusp * &(x() - c(1));
        assert_eq!(gcd(&a, &b), cusp.primitive());
        assert!(gcd(&(x() + y()), &(x() - y())).is_constant());
    }

    #[test]
    fn squarefree_of_nonreduced_cusp() {
        let cusp = y().pow(2) - x().pow(3);
        let f = cusp.pow(2) * x().pow(3);
        let mut d = squarefree_decomposition(&f);
        d.sort_by_key(|(_, m)| *m);
        assert_eq!(d, vec![(cusp.primitive(), 2), (x(), 3)]);
    }

    #[test]
    fn coprime_refinement() {
        let f = &(y() - x()) * &(y() + x());
        let g = &(y() - x()) * &y();
        let atoms = coprime_base(&[f, g]);
        assert_eq!(atoms.len(), 3);
        let shared = atoms.iter().find(|a| a.exps == vec![1, 1]).unwrap();
        assert_eq!(shared.poly, (y() - x()).primitive());
    }

    #[test]
    fn resultant_counts_intersections() {
        // y - x^2 and y - 1 meet at x = +-1
        let r = resultant_y(&(y() - x().pow(2)), &(y() - c(1)));
        assert_eq!(r.monic(), UPoly::from_ints(&[-1, 0, 1]));
    }

    fn small_bivariate() -> impl Strategy<Value = MPoly> {
        proptest::collection::vec(((0u32..3, 0u32..3), -3i64..4), 1..4).prop_map(|ts| {
            MPoly::from_terms(2, ts.into_iter().map(|((a, b), c)| (vec![a, b], int(c))))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn gcd_divides_both(a in small_bivariate(), b in small_bivariate(), m in small_bivariate()) {
            let a = &a * &m;
            let b = &b * &m;
            prop_assume!(!a.is_zero() && !b.is_zero());
            let g = gcd(&a, &b);
            prop_assert!(a.div_exact(&g).is_some());
            prop_assert!(b.div_exact(&g).is_some());
            if !m.is_zero() {
                prop_assert!(g.div_exact(&m.primitive()).is_some() || m.is_constant());
            }
        }

        #[test]
        fn squarefree_decomposition_reconstructs(a in small_bivariate(), b in small_bivariate()) {
            let f = &a * &(&b * &b);
            prop_assume!(!f.is_zero());
            let d = squarefree_decomposition(&f);
            let prod = d.iter().fold(MPoly::one(2), |acc, (g, m)| &acc * &g.pow(*m));
            prop_assert_eq!(prod.primitive(), f.primitive());
        }
    }
}
