//! Taylor expansion of rational functions at the origin.

use alloc::vec::Vec;

use num_traits::Zero;

use super::rat::Rat;
use super::upoly::UPoly;
use crate::error::{Error, Result};

/// Coefficients of `T^0 .. T^order` of `num / den`.
pub fn series_expand(num: &UPoly, den: &UPoly, order: usize) -> Result<Vec<Rat>> {
    let d0 = den.coeff(0);
    if d0.is_zero() {
        return Err(Error::NonExpandable);
    }
    let mut out: Vec<Rat> = Vec::with_capacity(order + 1);
    for k in 0..=order {
        let mut acc = num.coeff(k);
        for j in 1..=k.min(den.degree().unwrap_or(0)) {
            acc -= den.coeff(j) * &out[k - j];
        }
        out.push(acc / &d0);
    }
    Ok(out)
}
