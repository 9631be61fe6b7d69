//! Affine-linear forms `c + a_1 s_1 + ... + a_k s_k` with integer data.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;

use super::mpoly::MPoly;
use super::rat::Rat;

#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct LinForm {
    pub constant: i64,
    pub coeffs: Vec<i64>,
}

impl LinForm {
    pub fn new(constant: i64, coeffs: Vec<i64>) -> Self {
        LinForm { constant, coeffs }
    }

    /// `nu + n s` in one variable.
    pub fn single(nu: i64, n: i64) -> Self {
        LinForm::new(nu, vec![n])
    }

    pub fn nvars(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.constant == 0 && self.is_constant()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.iter().all(|&a| a == 0)
    }

    pub fn eval(&self, point: &[Rat]) -> Rat {
        let mut acc = Rat::from_integer(BigInt::from(self.constant));
        for (a, s) in self.coeffs.iter().zip(point) {
            acc += s * Rat::from_integer(BigInt::from(*a));
        }
        acc
    }

    pub fn to_mpoly(&self) -> MPoly {
        let k = self.nvars();
        let mut p = MPoly::constant(k, Rat::from_integer(BigInt::from(self.constant)));
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a != 0 {
                p = p + MPoly::var(k, i).scale(&Rat::from_integer(BigInt::from(a)));
            }
        }
        p
    }

    /// Splits off the integer scalar `g` so that `self = g * form` with
    /// `form` primitive and its constant (or first nonzero coefficient)
    /// positive.
    pub fn canonical(&self) -> (i64, LinForm) {
        let mut g = self.coeffs.iter().fold(self.constant, |g, &a| g.gcd(&a));
        if g == 0 {
            return (0, self.clone());
        }
        let lead = if self.constant != 0 {
            self.constant
        } else {
            *self.coeffs.iter().find(|&&a| a != 0).unwrap()
        };
        if lead < 0 {
            g = -g;
        }
        (
            g,
            LinForm::new(self.constant / g, self.coeffs.iter().map(|a| a / g).collect()),
        )
    }

    /// Root of a form in one variable.
    pub fn root(&self) -> Option<Rat> {
        let a = *self.coeffs.first()?;
        if a == 0 {
            return None;
        }
        Some(Rat::new(BigInt::from(-self.constant), BigInt::from(a)))
    }

    pub fn to_string_with(&self, names: &[String]) -> String {
        let mut s = String::new();
        if self.constant != 0 {
            s.push_str(&alloc::format!("{}", self.constant));
        }
        for (a, name) in self.coeffs.iter().zip(names) {
            if *a == 0 {
                continue;
            }
            if *a < 0 {
                s.push('-');
            } else if !s.is_empty() {
                s.push('+');
            }
            if a.abs() != 1 {
                s.push_str(&alloc::format!("{}", a.abs()));
            }
            s.push_str(name);
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }
}

/// Default names: `s` for one variable, `s1..sk` otherwise.
pub fn variable_names(k: usize) -> Vec<String> {
    if k == 1 {
        return vec![String::from("s")];
    }
    (1..=k).map(|i| alloc::format!("s{}", i)).collect()
}

impl fmt::Display for LinForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with(&variable_names(self.nvars())))
    }
}
