//! Rational helpers on top of `num_rational::BigRational`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational number. The denominator is always positive and coprime
/// to the numerator.
pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn from_bigint(n: BigInt) -> Rat {
    Rat::from_integer(n)
}

pub fn gcd_big(a: &BigInt, b: &BigInt) -> BigInt {
    a.gcd(b)
}

pub fn lcm_big(a: &BigInt, b: &BigInt) -> BigInt {
    if a.is_zero() || b.is_zero() {
        return BigInt::zero();
    }
    a.lcm(b)
}

/// `x^e` for a possibly negative exponent.
pub fn pow_i(x: &Rat, e: i64) -> Rat {
    if e >= 0 {
        num_traits::pow(x.clone(), e as usize)
    } else {
        num_traits::pow(x.recip(), (-e) as usize)
    }
}

/// Reduces `x` modulo the prime `p`; `None` when `p` divides the denominator.
pub fn rat_mod_p(x: &Rat, p: u64) -> Option<u64> {
    let pb = BigInt::from(p);
    let den = x.denom().mod_floor(&pb);
    if den.is_zero() {
        return None;
    }
    let num = x.numer().mod_floor(&pb);
    let n = to_u64(&num);
    let d = to_u64(&den);
    Some(mulmod(n, inv_mod(d, p), p))
}

/// Reduces `x` modulo `m`; `None` when the denominator is not invertible.
pub fn rat_mod(x: &Rat, m: u64) -> Option<u64> {
    let mb = BigInt::from(m);
    let inv = x.denom().mod_floor(&mb).modinv(&mb)?;
    Some(to_u64(&(x.numer() * inv).mod_floor(&mb)))
}

pub fn p_adic_valuation(n: &BigInt, p: u64) -> Option<u32> {
    if n.is_zero() {
        return None;
    }
    let pb = BigInt::from(p);
    let mut v = 0;
    let mut m = n.abs();
    while (&m % &pb).is_zero() {
        m /= &pb;
        v += 1;
    }
    Some(v)
}

/// True when `x` has no `p` in its denominator.
pub fn is_p_integral(x: &Rat, p: u64) -> bool {
    !(x.denom() % BigInt::from(p)).is_zero()
}

/// True when `x` is a `p`-adic unit.
pub fn is_p_unit(x: &Rat, p: u64) -> bool {
    !x.is_zero() && is_p_integral(x, p) && !(x.numer() % BigInt::from(p)).is_zero()
}

fn to_u64(n: &BigInt) -> u64 {
    let (_, digits) = n.to_u64_digits();
    digits.first().copied().unwrap_or(0)
}

pub fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn powmod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, b, m);
        }
        b = mulmod(b, b, m);
        e >>= 1;
    }
    r
}

/// Inverse modulo a prime.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn divisors(n: u64) -> alloc::vec::Vec<u64> {
    let mut out = alloc::vec::Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            if d * d != n {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    out
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn is_one(x: &Rat) -> bool {
    x.is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modular_reduction() {
        assert_eq!(rat_mod_p(&rat(1, 2), 7), Some(4));
        assert_eq!(rat_mod_p(&rat(-1, 1), 5), Some(4));
        assert_eq!(rat_mod_p(&rat(1, 5), 5), None);
    }

    #[test]
    fn small_number_theory() {
        assert_eq!(divisors(12), [1, 2, 3, 4, 6, 12]);
        assert!(is_prime(13) && !is_prime(15));
        assert_eq!(p_adic_valuation(&BigInt::from(48), 2), Some(4));
        assert_eq!(pow_i(&rat(2, 3), -2), rat(9, 4));
    }
}
