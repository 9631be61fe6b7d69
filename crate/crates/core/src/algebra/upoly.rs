//! Dense univariate polynomials over the rationals.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rat::{gcd_big, lcm_big, Rat};

/// Coefficients are stored lowest degree first with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct UPoly {
    coeffs: Vec<Rat>,
}

impl UPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rat::from_integer(BigInt::from(c))).collect())
    }

    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::new(vec![c])
    }

    /// `c * t^k`
    pub fn monomial(k: usize, c: Rat) -> Self {
        let mut v = vec![Rat::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    /// `t - a`
    pub fn linear_root(a: &Rat) -> Self {
        Self::new(vec![-a.clone(), Rat::one()])
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    /// Lowest `k` with a nonzero coefficient of `t^k`.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn scale(&self, c: &Rat) -> UPoly {
        UPoly::new(self.coeffs.iter().map(|v| v * c).collect())
    }

    pub fn monic(&self) -> UPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.lead().recip())
    }

    pub fn pow(&self, n: u32) -> UPoly {
        let mut acc = UPoly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn derivative(&self) -> UPoly {
        UPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rat::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    /// `p(t) -> p(t^k)`
    pub fn inflate(&self, k: usize) -> UPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut v = vec![Rat::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[i * k] = c.clone();
        }
        UPoly::new(v)
    }

    pub fn div_rem(&self, d: &UPoly) -> (UPoly, UPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lc = d.lead();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (UPoly::zero(), self.clone());
        }
        let mut q = vec![Rat::zero(); r.len() - dd];
        for k in (dd..r.len()).rev() {
            if r[k].is_zero() {
                continue;
            }
            let f = &r[k] / &lc;
            for (j, c) in d.coeffs.iter().enumerate() {
                r[k - dd + j] -= &f * c;
            }
            q[k - dd] = f;
        }
        (UPoly::new(q), UPoly::new(r))
    }

    pub fn div_exact(&self, d: &UPoly) -> Option<UPoly> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor; zero only when both inputs are zero.
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn squarefree_part(&self) -> UPoly {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_exact(&g).expect("gcd divides").monic()
    }

    /// Resultant with respect to the single variable.
    pub fn resultant(&self, other: &UPoly) -> Rat {
        let (Some(mut da), Some(mut db)) = (self.degree(), other.degree()) else {
            return Rat::zero();
        };
        let mut a = self.clone();
        let mut b = other.clone();
        let mut acc = Rat::one();
        loop {
            if db == 0 {
                return acc * num_traits::pow(b.lead(), da);
            }
            let r = a.div_rem(&b).1;
            let Some(dr) = r.degree() else {
                return Rat::zero();
            };
            if da % 2 == 1 && db % 2 == 1 {
                acc = -acc;
            }
            acc *= num_traits::pow(b.lead(), da - dr);
            a = b;
            b = r;
            da = db;
            db = dr;
        }
    }

    /// Integer primitive associate with positive leading coefficient.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for c in &self.coeffs {
            num = gcd_big(&num, c.numer());
            den = lcm_big(&den, c.denom());
        }
        if num.is_zero() {
            return Vec::new();
        }
        if self.lead().is_negative() {
            num = -num;
        }
        let scale = Rat::new(den, num);
        self.coeffs
            .iter()
            .map(|c| {
                let v = c * &scale;
                debug_assert!(v.is_integer());
                v.numer().clone()
            })
            .collect()
    }

    pub fn to_string_in(&self, var: &str) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let mut s = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let a = c.abs();
            match k {
                0 => s.push_str(&alloc::format!("{}", a)),
                _ => {
                    if !a.is_one() {
                        s.push_str(&alloc::format!("{}*", a));
                    }
                    s.push_str(var);
                    if k > 1 {
                        s.push_str(&alloc::format!("^{}", k));
                    }
                }
            }
        }
        s
    }
}

impl Add for &UPoly {
    type Output = UPoly;
    fn add(self, rhs: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Add for UPoly {
    type Output = UPoly;
    fn add(self, rhs: UPoly) -> UPoly {
        &self + &rhs
    }
}

impl Sub for &UPoly {
    type Output = UPoly;
    fn sub(self, rhs: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Sub for UPoly {
    type Output = UPoly;
    fn sub(self, rhs: UPoly) -> UPoly {
        &self - &rhs
    }
}

impl Neg for UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        UPoly::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl Mul for &UPoly {
    type Output = UPoly;
    fn mul(self, rhs: &UPoly) -> UPoly {
        if self.is_zero() || rhs.is_zero() {
            return UPoly::zero();
        }
        let mut v = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        UPoly::new(v)
    }
}

impl Mul for UPoly {
    type Output = UPoly;
    fn mul(self, rhs: UPoly) -> UPoly {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::int;
    use proptest::prelude::*;

    #[test]
    fn division_and_gcd() {
        let a = UPoly::from_ints(&[-1, 0, 1]);
        let b = UPoly::from_ints(&[1, 1]);
        assert_eq!(a.div_exact(&b), Some(UPoly::from_ints(&[-1, 1])));
        assert_eq!(a.gcd(&UPoly::from_ints(&[2, 2])), b);
    }

    #[test]
    fn resultant_of_linear_factors() {
        // Res(t^2 - 1, t - 2) = (2 - 1)(2 + 1)... up to sign = 3
        let a = UPoly::from_ints(&[-1, 0, 1]);
        let b = UPoly::from_ints(&[-2, 1]);
        assert_eq!(a.resultant(&b), int(3));
        let c = UPoly::from_ints(&[-1, 1]);
        assert_eq!(a.resultant(&c), int(0));
    }

    #[test]
    fn squarefree() {
        let a = UPoly::from_ints(&[0, 0, 1]) * UPoly::from_ints(&[1, 1]);
        assert_eq!(a.squarefree_part(), UPoly::from_ints(&[0, 1, 1]));
    }

    fn small_poly() -> impl Strategy<Value = UPoly> {
        proptest::collection::vec(-6i64..6, 1..5).prop_map(|v| UPoly::from_ints(&v))
    }

    proptest! {
        #[test]
        fn div_rem_reconstructs(a in small_poly(), b in small_poly()) {
            prop_assume!(!b.is_zero());
            let (q, r) = a.div_rem(&b);
            prop_assert_eq!(&(&q * &b) + &r, a);
            prop_assert!(r.degree().is_none_or(|d| d < b.degree().unwrap()) || b.degree() == Some(0) && r.is_zero());
        }

        #[test]
        fn resultant_vanishes_on_common_factor(a in small_poly(), b in small_poly(), c in -4i64..4) {
            let l = UPoly::from_ints(&[c, 1]);
            let (a, b) = (&a * &l, &b * &l);
            prop_assume!(!a.is_zero() && !b.is_zero());
            prop_assert!(a.resultant(&b).is_zero());
        }
    }
}
