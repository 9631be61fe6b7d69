//! Rational functions whose denominators are products of linear forms.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::linform::{variable_names, LinForm};
use super::mpoly::MPoly;
use super::rat::Rat;
use super::series;
use super::upoly::UPoly;
use crate::error::{Error, Result};

/// `numerator / prod form^e`. After [`RatFuncMulti::normalize`] the forms
/// are primitive, pairwise distinct, sorted, and none divides the
/// numerator, so structural equality is arithmetic equality.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatFuncMulti {
    nvars: usize,
    numerator: MPoly,
    denominator: Vec<(LinForm, u32)>,
}

impl RatFuncMulti {
    pub fn new(numerator: MPoly, denominator: Vec<(LinForm, u32)>) -> Result<Self> {
        let nvars = numerator.nvars();
        for (l, _) in &denominator {
            if l.is_zero() {
                return Err(Error::ZeroLinForm);
            }
            if l.nvars() != nvars {
                return Err(Error::Invalid(String::from("linear form has wrong arity")));
            }
        }
        Ok(RatFuncMulti {
            nvars,
            numerator,
            denominator,
        }
        .normalize())
    }

    pub fn zero(nvars: usize) -> Self {
        RatFuncMulti {
            nvars,
            numerator: MPoly::zero(nvars),
            denominator: Vec::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        RatFuncMulti {
            nvars,
            numerator: MPoly::constant(nvars, c),
            denominator: Vec::new(),
        }
    }

    /// `c / prod forms`, one factor per entry.
    pub fn term(c: Rat, forms: &[LinForm]) -> Result<Self> {
        let nvars = forms.first().map(|l| l.nvars()).unwrap_or(1);
        Self::new(
            MPoly::constant(nvars, c),
            forms.iter().map(|l| (l.clone(), 1)).collect(),
        )
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn numerator(&self) -> &MPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &[(LinForm, u32)] {
        &self.denominator
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn normalize(&self) -> Self {
        let mut num = self.numerator.clone();
        let mut merged: BTreeMap<LinForm, u32> = BTreeMap::new();
        for (l, e) in &self.denominator {
            if *e == 0 {
                continue;
            }
            let (g, form) = l.canonical();
            let g = Rat::from_integer(BigInt::from(g));
            num = num.scale(&num_traits::pow(g.recip(), *e as usize));
            if form.is_constant() {
                continue;
            }
            *merged.entry(form).or_insert(0) += e;
        }
        if num.is_zero() {
            return RatFuncMulti::zero(self.nvars);
        }
        let mut den = Vec::new();
        for (form, mut e) in merged {
            let lp = form.to_mpoly();
            while e > 0 {
                match num.div_exact(&lp) {
                    Some(q) => {
                        num = q;
                        e -= 1;
                    }
                    None => break,
                }
            }
            if e > 0 {
                den.push((form, e));
            }
        }
        RatFuncMulti {
            nvars: self.nvars,
            numerator: num,
            denominator: den,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let mut lcd: BTreeMap<LinForm, u32> = BTreeMap::new();
        for (l, e) in self.denominator.iter().chain(&other.denominator) {
            let v = lcd.entry(l.clone()).or_insert(0);
            *v = (*v).max(*e);
        }
        let lift = |r: &Self| {
            let mut n = r.numerator.clone();
            for (l, e) in &lcd {
                let have = r
                    .denominator
                    .iter()
                    .find(|(m, _)| m == l)
                    .map(|(_, k)| *k)
                    .unwrap_or(0);
                if e > &have {
                    n = &n * &l.to_mpoly().pow(e - have);
                }
            }
            n
        };
        let num = lift(self) + lift(other);
        RatFuncMulti {
            nvars: self.nvars,
            numerator: num,
            denominator: lcd.into_iter().collect(),
        }
        .normalize()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut den = self.denominator.clone();
        den.extend(other.denominator.iter().cloned());
        RatFuncMulti {
            nvars: self.nvars,
            numerator: &self.numerator * &other.numerator,
            denominator: den,
        }
        .normalize()
    }

    pub fn scale(&self, c: &Rat) -> Self {
        RatFuncMulti {
            nvars: self.nvars,
            numerator: self.numerator.scale(c),
            denominator: self.denominator.clone(),
        }
        .normalize()
    }

    /// Value at a point, `None` on a polar hyperplane.
    pub fn eval(&self, point: &[Rat]) -> Option<Rat> {
        let mut d = Rat::one();
        for (l, e) in &self.denominator {
            d *= num_traits::pow(l.eval(point), *e as usize);
        }
        if d.is_zero() {
            return None;
        }
        Some(self.numerator.eval(point) / d)
    }

    /// Substitutes `s_i -> images[i]`, each image a linear form in a common
    /// target ring. Used for diagonal specializations.
    pub fn substitute(&self, images: &[LinForm]) -> Result<Self> {
        let polys: Vec<MPoly> = images.iter().map(|l| l.to_mpoly()).collect();
        let num = self.numerator.compose(&polys);
        let mut den = Vec::new();
        for (l, e) in &self.denominator {
            let target = images.first().map(|m| m.nvars()).unwrap_or(0);
            let mut c = l.constant;
            let mut coeffs = alloc::vec![0i64; target];
            for (a, img) in l.coeffs.iter().zip(images) {
                c += a * img.constant;
                for (j, b) in img.coeffs.iter().enumerate() {
                    coeffs[j] += a * b;
                }
            }
            den.push((LinForm::new(c, coeffs), *e));
        }
        Self::new(num, den)
    }

    /// Surviving polar hyperplanes.
    pub fn polar_locus(&self) -> Vec<LinForm> {
        self.denominator.iter().map(|(l, _)| l.clone()).collect()
    }

    pub fn to_string_with(&self, names: &[String]) -> String {
        if self.numerator.is_zero() {
            return String::from("0");
        }
        // A rational content a/b is printed as a in the numerator and b in
        // front of the linear factors.
        let b = self.numerator.content().denom().clone();
        let num = self.numerator.scale(&Rat::from_integer(b.clone()));
        let num_terms = num.num_terms();
        let num_str = format_numerator(&num, names);
        let mut pieces: Vec<String> = Vec::new();
        if !b.is_one() {
            pieces.push(alloc::format!("{}", b));
        }
        for (l, e) in &self.denominator {
            let mut p = alloc::format!("({})", l.to_string_with(names));
            if *e > 1 {
                p.push_str(&alloc::format!("^{}", e));
            }
            pieces.push(p);
        }
        let num_str = if num_terms > 1 && !pieces.is_empty() {
            alloc::format!("({})", num_str)
        } else {
            num_str
        };
        match pieces.len() {
            0 => num_str,
            1 => alloc::format!("{}/{}", num_str, pieces[0]),
            _ => alloc::format!("{}/({})", num_str, pieces.concat()),
        }
    }
}

/// Terms by increasing total degree; variables juxtaposed after the
/// coefficient.
fn format_numerator(p: &MPoly, names: &[String]) -> String {
    let mut items: Vec<(&Vec<u32>, &Rat)> = p.terms().collect();
    items.sort_by(|a, b| {
        let da: u32 = a.0.iter().sum();
        let db: u32 = b.0.iter().sum();
        da.cmp(&db).then_with(|| b.0.cmp(a.0))
    });
    let mut s = String::new();
    for (e, c) in items {
        let neg = c.is_negative();
        if neg {
            s.push('-');
        } else if !s.is_empty() {
            s.push('+');
        }
        let abs = c.abs();
        let is_const = e.iter().all(|&k| k == 0);
        if !abs.is_one() || is_const {
            s.push_str(&alloc::format!("{}", abs));
        }
        let mut first = true;
        for (i, &k) in e.iter().enumerate() {
            if k == 0 {
                continue;
            }
            if !first {
                s.push('*');
            }
            first = false;
            s.push_str(&names[i]);
            if k > 1 {
                s.push_str(&alloc::format!("^{}", k));
            }
        }
    }
    s
}

impl fmt::Display for RatFuncMulti {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with(&variable_names(self.nvars)))
    }
}

/// A pole of a univariate rational function with its order and the
/// coefficient of `(s - pole)^(-order)` in the Laurent expansion; for
/// simple poles this is the residue.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Pole {
    pub pole: Rat,
    pub order: u32,
    pub leading_coefficient: Rat,
}

/// Univariate case of [`RatFuncMulti`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatFunc1(RatFuncMulti);

impl RatFunc1 {
    pub fn new(numerator: UPoly, denominator: Vec<(LinForm, u32)>) -> Result<Self> {
        Ok(RatFunc1(RatFuncMulti::new(
            MPoly::from_upoly(1, 0, &numerator),
            denominator,
        )?))
    }

    pub fn zero() -> Self {
        RatFunc1(RatFuncMulti::zero(1))
    }

    /// `c / prod (nu_i + N_i s)`
    pub fn term(c: Rat, forms: &[(i64, i64)]) -> Result<Self> {
        let forms: Vec<LinForm> = forms.iter().map(|&(nu, n)| LinForm::single(nu, n)).collect();
        if forms.is_empty() {
            return Ok(RatFunc1(RatFuncMulti::constant(1, c)));
        }
        Ok(RatFunc1(RatFuncMulti::term(c, &forms)?))
    }

    pub fn from_multi(r: RatFuncMulti) -> Result<Self> {
        if r.nvars() != 1 {
            return Err(Error::Invalid(String::from("expected one variable")));
        }
        Ok(RatFunc1(r))
    }

    pub fn as_multi(&self) -> &RatFuncMulti {
        &self.0
    }

    pub fn numerator(&self) -> UPoly {
        self.0.numerator.to_upoly(0).unwrap()
    }

    pub fn denominator(&self) -> &[(LinForm, u32)] {
        &self.0.denominator
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn normalize(&self) -> Self {
        RatFunc1(self.0.normalize())
    }

    pub fn add(&self, other: &Self) -> Self {
        RatFunc1(self.0.add(&other.0))
    }

    pub fn mul(&self, other: &Self) -> Self {
        RatFunc1(self.0.mul(&other.0))
    }

    pub fn scale(&self, c: &Rat) -> Self {
        RatFunc1(self.0.scale(c))
    }

    pub fn eval(&self, s: &Rat) -> Option<Rat> {
        self.0.eval(core::slice::from_ref(s))
    }

    /// Denominator multiplied out, including the scalars of the forms.
    pub fn denominator_poly(&self) -> UPoly {
        let mut d = UPoly::one();
        for (l, e) in &self.0.denominator {
            let f = UPoly::from_ints(&[l.constant, l.coeffs[0]]);
            d = &d * &f.pow(*e);
        }
        d
    }

    pub fn poles(&self) -> Vec<Pole> {
        let mut out = Vec::new();
        if self.is_zero() {
            return out;
        }
        let num = self.numerator();
        for (i, (l, e)) in self.0.denominator.iter().enumerate() {
            let s0 = l.root().expect("non-constant form");
            let mut c = num.eval(&s0);
            c /= num_traits::pow(Rat::from_integer(BigInt::from(l.coeffs[0])), *e as usize);
            for (j, (m, f)) in self.0.denominator.iter().enumerate() {
                if j != i {
                    c /= num_traits::pow(m.eval(core::slice::from_ref(&s0)), *f as usize);
                }
            }
            out.push(Pole {
                pole: s0,
                order: *e,
                leading_coefficient: c,
            });
        }
        out.sort_by(|a, b| a.pole.cmp(&b.pole));
        out
    }

    /// Taylor coefficients at 0 up to `order`, reading the variable as `T`.
    pub fn series_expand(&self, order: usize) -> Result<Vec<Rat>> {
        series::series_expand(&self.numerator(), &self.denominator_poly(), order)
    }

    pub fn to_string_var(&self, var: &str) -> String {
        self.0.to_string_with(&[String::from(var)])
    }
}

impl fmt::Display for RatFunc1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
