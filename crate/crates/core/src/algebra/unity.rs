//! Formal products `prod_N (t^N - 1)^(e_N)` and their cyclotomic content.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use super::rat::{divisors, Rat};
use super::upoly::UPoly;

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct UnityRat {
    factors: BTreeMap<u64, i64>,
}

impl UnityRat {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn from_pairs<I: IntoIterator<Item = (u64, i64)>>(pairs: I) -> Self {
        let mut u = Self::one();
        for (n, e) in pairs {
            u.mul_factor(n, e);
        }
        u
    }

    /// `t - 1`
    pub fn t_minus_one() -> Self {
        Self::from_pairs([(1, 1)])
    }

    pub fn mul_factor(&mut self, n: u64, e: i64) {
        assert!(n >= 1, "t^0 - 1 is not a unit");
        if e == 0 {
            return;
        }
        let v = self.factors.entry(n).or_insert(0);
        *v += e;
        if *v == 0 {
            self.factors.remove(&n);
        }
    }

    pub fn factors(&self) -> &BTreeMap<u64, i64> {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&n, &e) in &other.factors {
            out.mul_factor(n, e);
        }
        out
    }

    pub fn inverse(&self) -> Self {
        Self::from_pairs(self.factors.iter().map(|(&n, &e)| (n, -e)))
    }

    /// Degree of the rational function: `sum N e_N`.
    pub fn degree(&self) -> i64 {
        self.factors.iter().map(|(&n, &e)| n as i64 * e).sum()
    }

    /// `m_l = sum_{N : l | N} e_N` for every `l` dividing a stored `N`.
    pub fn cyclo_multiplicities(&self) -> BTreeMap<u64, i64> {
        let mut out = BTreeMap::new();
        for &n in self.factors.keys() {
            for d in divisors(n) {
                out.entry(d).or_insert(0);
            }
        }
        for (l, m) in out.iter_mut() {
            *m = self
                .factors
                .iter()
                .filter(|(&n, _)| n % *l == 0)
                .map(|(_, &e)| e)
                .sum();
        }
        out
    }

    /// Only the nonzero cyclotomic multiplicities.
    pub fn phi_multiplicities(&self) -> BTreeMap<u64, i64> {
        self.cyclo_multiplicities().into_iter().filter(|(_, m)| *m != 0).collect()
    }

    /// Rebuilds the product from cyclotomic multiplicities using
    /// `Phi_l = prod_{d | l} (t^d - 1)^(mu(l/d))`.
    pub fn from_phi(phi: &BTreeMap<u64, i64>) -> Self {
        let mut out = Self::one();
        for (&l, &m) in phi {
            for d in divisors(l) {
                let mu = mobius(l / d);
                out.mul_factor(d, mu * m);
            }
        }
        out
    }

    /// True when all cyclotomic multiplicities are nonnegative.
    pub fn is_polynomial(&self) -> bool {
        self.cyclo_multiplicities().values().all(|&m| m >= 0)
    }

    /// Expanded numerator and denominator.
    pub fn expand(&self) -> (UPoly, UPoly) {
        let mut num = UPoly::one();
        let mut den = UPoly::one();
        for (&n, &e) in &self.factors {
            let f = t_pow_minus_one(n);
            if e > 0 {
                num = &num * &f.pow(e as u32);
            } else {
                den = &den * &f.pow((-e) as u32);
            }
        }
        (num, den)
    }

    /// The product as a polynomial, when it is one.
    pub fn to_polynomial(&self) -> Option<UPoly> {
        let (n, d) = self.expand();
        n.div_exact(&d)
    }

    /// Value at `t`, `None` at a root of the denominator.
    pub fn eval(&self, t: &Rat) -> Option<Rat> {
        let mut acc = Rat::one();
        for (&n, &e) in &self.factors {
            let v = num_traits::pow(t.clone(), n as usize) - Rat::one();
            if e > 0 {
                acc *= num_traits::pow(v, e as usize);
            } else {
                if v.is_zero() {
                    return None;
                }
                acc /= num_traits::pow(v, (-e) as usize);
            }
        }
        Some(acc)
    }
}

fn t_pow_minus_one(n: u64) -> UPoly {
    UPoly::monomial(n as usize, Rat::one()) - UPoly::one()
}

pub fn mobius(n: u64) -> i64 {
    let mut n = n;
    let mut r = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            r = -r;
        }
        p += 1;
    }
    if n > 1 {
        r = -r;
    }
    r
}

/// The `n`-th cyclotomic polynomial.
pub fn cyclotomic(n: u64) -> UPoly {
    let mut num = UPoly::one();
    let mut den = UPoly::one();
    for d in divisors(n) {
        match mobius(n / d) {
            1 => num = &num * &t_pow_minus_one(d),
            -1 => den = &den * &t_pow_minus_one(d),
            _ => {}
        }
    }
    num.div_exact(&den).expect("cyclotomic division is exact")
}

impl fmt::Display for UnityRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        let piece = |n: u64, e: i64| -> String {
            let base = if n == 1 {
                String::from("(t-1)")
            } else {
                alloc::format!("(t^{}-1)", n)
            };
            if e.abs() > 1 {
                alloc::format!("{}^{}", base, e.abs())
            } else {
                base
            }
        };
        let num: Vec<String> = self.factors.iter().rev().filter(|(_, &e)| e > 0).map(|(&n, &e)| piece(n, e)).collect();
        let den: Vec<String> = self.factors.iter().rev().filter(|(_, &e)| e < 0).map(|(&n, &e)| piece(n, e)).collect();
        let num = if num.is_empty() { String::from("1") } else { num.concat() };
        match den.len() {
            0 => f.write_str(&num),
            1 => write!(f, "{}/{}", num, den[0]),
            _ => write!(f, "{}/({})", num, den.concat()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::int as int_rat;
    use proptest::prelude::*;

    #[test]
    fn cusp_zeta_multiplicities() {
        let z = UnityRat::from_pairs([(15, 1), (1, 1), (3, -1), (5, -1)]);
        let m = z.phi_multiplicities();
        assert_eq!(m.into_iter().collect::<Vec<_>>(), [(15, 1)]);
        assert_eq!(z.cyclo_multiplicities().get(&1), Some(&0));
    }

    #[test]
    fn phi_product_of_second_example() {
        let z = UnityRat::from_pairs([(30, 1), (12, 1), (1, 1), (15, -1), (6, -1), (4, -1)]);
        let m: Vec<_> = z.phi_multiplicities().into_iter().collect();
        assert_eq!(m, [(6, 1), (10, 1), (12, 1), (30, 1)]);
        assert_eq!(z.degree(), 18);
        let p = z.to_polynomial().unwrap();
        let q = [6u64, 10, 12, 30].iter().fold(UPoly::one(), |a, &l| &a * &cyclotomic(l));
        assert_eq!(p, q);
    }

    #[test]
    fn t_minus_one() {
        let m: Vec<_> = UnityRat::t_minus_one().phi_multiplicities().into_iter().collect();
        assert_eq!(m, [(1, 1)]);
        assert_eq!(UnityRat::from_pairs([(15, 1), (3, -1), (5, -1)]).to_string(), "(t^15-1)/((t^5-1)(t^3-1))");
    }

    proptest! {
        #[test]
        fn phi_round_trip(pairs in proptest::collection::vec((1u64..25, -2i64..3), 0..5)) {
            let u = UnityRat::from_pairs(pairs);
            let back = UnityRat::from_phi(&u.cyclo_multiplicities());
            prop_assert_eq!(back.expand().0 * u.expand().1, u.expand().0 * back.expand().1);
            prop_assert_eq!(back, u.clone());
            // value at t = 2 agrees with the expanded quotient
            let (n, d) = u.expand();
            let t = int_rat(2);
            prop_assert_eq!(u.eval(&t), Some(n.eval(&t) / d.eval(&t)));
        }
    }
}
