//! Sparse multivariate polynomials with rational coefficients.
//!
//! Exponent vectors are kept in a `BTreeMap`, so iteration order is the
//! lexicographic monomial order with variable 0 most significant. The
//! leading term used by [`MPoly::div_rem`] is the lex-largest monomial.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rat::{gcd_big, lcm_big, Rat};
use super::upoly::UPoly;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rat::one())
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, Rat::one())
    }

    pub fn monomial(exps: Vec<u32>, c: Rat) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(exps, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Vec<u32>, Rat)>>(nvars: usize, terms: I) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector length");
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&k| k == 0))
    }

    pub fn coeff(&self, exps: &[u32]) -> Rat {
        self.terms.get(exps).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn constant_term(&self) -> Rat {
        self.coeff(&vec![0; self.nvars])
    }

    pub(crate) fn add_term(&mut self, exps: Vec<u32>, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&exps);
                }
            }
            None => {
                self.terms.insert(exps, c);
            }
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Lowest total degree of a term; the multiplicity at the origin.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).min()
    }

    pub fn degree_in(&self, i: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[i]).max()
    }

    pub fn involves(&self, i: usize) -> bool {
        self.terms.keys().any(|e| e[i] > 0)
    }

    pub fn homogeneous_part(&self, d: u32) -> MPoly {
        MPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<u32>() == d)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(self.nvars);
        }
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> MPoly {
        let mut acc = MPoly::one(self.nvars);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn eval(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.nvars);
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                if k > 0 {
                    t *= num_traits::pow(x.clone(), k as usize);
                }
            }
            acc += t;
        }
        acc
    }

    /// Substitutes `images[i]` for variable `i`. All images share one ring.
    pub fn compose(&self, images: &[MPoly]) -> MPoly {
        assert_eq!(images.len(), self.nvars);
        let target = images.first().map(|p| p.nvars).unwrap_or(0);
        let mut cache: Vec<Vec<MPoly>> = images.iter().map(|p| vec![MPoly::one(target), p.clone()]).collect();
        let mut out = MPoly::zero(target);
        for (e, c) in &self.terms {
            let mut t = MPoly::constant(target, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                while cache[i].len() <= k as usize {
                    let next = &cache[i][cache[i].len() - 1] * &images[i];
                    cache[i].push(next);
                }
                t = &t * &cache[i][k as usize];
            }
            out = out + t;
        }
        out
    }

    /// `f(x + a)`: moves the point `a` to the origin.
    pub fn translate(&self, a: &[Rat]) -> MPoly {
        if a.iter().all(|v| v.is_zero()) {
            return self.clone();
        }
        let images: Vec<MPoly> = (0..self.nvars)
            .map(|i| MPoly::var(self.nvars, i) + MPoly::constant(self.nvars, a[i].clone()))
            .collect();
        self.compose(&images)
    }

    pub fn derivative(&self, i: usize) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut f = e.clone();
            f[i] -= 1;
            out.add_term(f, c * Rat::from_integer(BigInt::from(e[i])));
        }
        out
    }

    pub fn leading_term(&self) -> Option<(&Vec<u32>, &Rat)> {
        self.terms.iter().next_back()
    }

    /// Division by a single divisor in lex order. The remainder is zero
    /// exactly when `d` divides `self`.
    pub fn div_rem(&self, d: &MPoly) -> (MPoly, MPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let (lm, lc) = d.leading_term().map(|(e, c)| (e.clone(), c.clone())).unwrap();
        let mut q = MPoly::zero(self.nvars);
        let mut r = MPoly::zero(self.nvars);
        let mut p = self.clone();
        while let Some((e, c)) = p.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
            if e.iter().zip(&lm).all(|(a, b)| a >= b) {
                let qe: Vec<u32> = e.iter().zip(&lm).map(|(a, b)| a - b).collect();
                let qc = &c / &lc;
                let t = MPoly::monomial(qe, qc);
                p = p - &t * d;
                q = q + t;
            } else {
                p.terms.remove(&e);
                r.add_term(e, c);
            }
        }
        (q, r)
    }

    pub fn div_exact(&self, d: &MPoly) -> Option<MPoly> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    /// Positive rational `c` with `self / c` a primitive integer polynomial.
    pub fn content(&self) -> Rat {
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for c in self.terms.values() {
            num = gcd_big(&num, c.numer());
            den = lcm_big(&den, c.denom());
        }
        if num.is_zero() {
            return Rat::one();
        }
        Rat::new(num, den)
    }

    /// Primitive integer associate with positive lex-leading coefficient.
    pub fn primitive(&self) -> MPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if self.leading_term().unwrap().1.is_negative() {
            c = -c;
        }
        self.scale(&c.recip())
    }

    /// Divides by the lex-leading coefficient.
    pub fn monic(&self) -> MPoly {
        match self.leading_term() {
            Some((_, c)) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    /// Integer coefficients of `primitive()` together with exponents.
    pub fn integer_terms(&self) -> Vec<(Vec<u32>, BigInt)> {
        self.terms
            .iter()
            .map(|(e, c)| {
                assert!(c.is_integer(), "integer_terms on non-integral polynomial");
                (e.clone(), c.numer().clone())
            })
            .collect()
    }

    /// The univariate polynomial in variable `i`, if no other variable occurs.
    pub fn to_upoly(&self, i: usize) -> Option<UPoly> {
        let mut coeffs = Vec::new();
        for (e, c) in &self.terms {
            if e.iter().enumerate().any(|(j, &k)| j != i && k > 0) {
                return None;
            }
            let k = e[i] as usize;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, Rat::zero());
            }
            coeffs[k] = c.clone();
        }
        Some(UPoly::new(coeffs))
    }

    pub fn from_upoly(nvars: usize, i: usize, p: &UPoly) -> MPoly {
        let mut out = MPoly::zero(nvars);
        for (k, c) in p.coeffs().iter().enumerate() {
            let mut e = vec![0; nvars];
            e[i] = k as u32;
            out.add_term(e, c.clone());
        }
        out
    }

    /// Coefficients with respect to variable `i`, each a polynomial in the
    /// remaining variables (still indexed in the full ring).
    pub fn coefficients_in(&self, i: usize) -> Vec<MPoly> {
        let deg = self.degree_in(i).unwrap_or(0) as usize;
        let mut out = vec![MPoly::zero(self.nvars); deg + 1];
        for (e, c) in &self.terms {
            let mut f = e.clone();
            let k = f[i] as usize;
            f[i] = 0;
            out[k].add_term(f, c.clone());
        }
        out
    }

    /// Writes the polynomial with the given variable names, highest total
    /// degree first.
    pub fn to_string_with(&self, names: &[&str]) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let mut items: Vec<(&Vec<u32>, &Rat)> = self.terms.iter().collect();
        items.sort_by(|a, b| {
            let da: u32 = a.0.iter().sum();
            let db: u32 = b.0.iter().sum();
            db.cmp(&da).then_with(|| b.0.cmp(a.0))
        });
        let mut s = String::new();
        for (idx, (e, c)) in items.into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let is_const = e.iter().all(|&k| k == 0);
            let mut parts: Vec<String> = Vec::new();
            if !abs.is_one() || is_const {
                parts.push(alloc::format!("{}", abs));
            }
            for (i, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => parts.push(String::from(names[i])),
                    _ => parts.push(alloc::format!("{}^{}", names[i], k)),
                }
            }
            let _ = write!(s, "{}", parts.join("*"));
        }
        s
    }
}

impl Add for MPoly {
    type Output = MPoly;
    fn add(mut self, rhs: MPoly) -> MPoly {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
        self
    }
}

impl<'a> Add<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        self.clone() + rhs.clone()
    }
}

impl Sub for MPoly {
    type Output = MPoly;
    fn sub(mut self, rhs: MPoly) -> MPoly {
        for (e, c) in rhs.terms {
            self.add_term(e, -c);
        }
        self
    }
}

impl<'a> Sub<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        self.clone() - rhs.clone()
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            nvars: self.nvars,
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl<'a> Mul<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        assert_eq!(self.nvars, rhs.nvars, "ring mismatch");
        let mut out = MPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl Mul for MPoly {
    type Output = MPoly;
    fn mul(self, rhs: MPoly) -> MPoly {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::{int, rat};

    fn xy() -> (MPoly, MPoly) {
        (MPoly::var(2, 0), MPoly::var(2, 1))
    }

    #[test]
    fn arithmetic_and_degrees() {
        let (x, y) = xy();
        let f = y.pow(3) - x.pow(5);
        assert_eq!(f.total_degree(), Some(5));
        assert_eq!(f.order(), Some(3));
        assert_eq!(f.num_terms(), 2);
        let g = (&x + &y) * (&x - &y);
        assert_eq!(g, x.pow(2) - y.pow(2));
    }

    #[test]
    fn translation_moves_point_to_origin() {
        let (x, _) = xy();
        let f = x - MPoly::constant(2, int(1));
        let g = f.translate(&[int(1), int(0)]);
        assert_eq!(g, MPoly::var(2, 0));
    }

    #[test]
    fn exact_division() {
        let (x, y) = xy();
        let a = &x + &y;
        let b = &x - &y.pow(2);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&a), Some(b.clone()));
        assert!((&prod + &MPoly::one(2)).div_exact(&a).is_none());
    }

    #[test]
    fn primitive_clears_content() {
        let (x, y) = xy();
        let f = x.scale(&rat(-2, 3)) + y.scale(&rat(4, 9));
        let p = f.primitive();
        assert_eq!(p, x.scale(&int(3)) - y.scale(&int(2)));
    }

    #[test]
    fn printing() {
        let (x, y) = xy();
        let f = y.pow(3) - x.pow(5);
        assert_eq!(f.to_string_with(&["x", "y"]), "-x^5 + y^3");
    }
}
