//! Rational roots of univariate polynomials.
//!
//! The squarefree part is made monic over the integers, a prime with
//! squarefree reduction is chosen, every root modulo that prime is lifted
//! by Newton iteration past twice the root bound, and the symmetric
//! representative is tested exactly.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rat::{is_prime, Rat};
use super::upoly::UPoly;

/// All rational roots with multiplicities, sorted increasingly.
pub fn upoly_rational_roots(p: &UPoly) -> Vec<(Rat, u32)> {
    assert!(!p.is_zero(), "rational roots of the zero polynomial");
    let mut roots: Vec<Rat> = rational_roots(p);
    roots.sort();
    roots
        .into_iter()
        .map(|r| {
            let lin = UPoly::linear_root(&r);
            let mut q = p.clone();
            let mut m = 0;
            while let Some(next) = q.div_exact(&lin) {
                q = next;
                m += 1;
            }
            (r, m)
        })
        .collect()
}

/// Distinct rational roots, unsorted.
pub fn rational_roots(p: &UPoly) -> Vec<Rat> {
    let mut out = Vec::new();
    let Some(deg) = p.degree() else {
        return out;
    };
    if deg == 0 {
        return out;
    }
    let mut s = p.squarefree_part();
    if s.coeff(0).is_zero() {
        out.push(Rat::zero());
        s = s.div_exact(&UPoly::from_ints(&[0, 1])).expect("t divides");
    }
    if s.degree().unwrap_or(0) == 0 {
        return out;
    }
    if s.degree() == Some(1) {
        out.push(-s.coeff(0) / s.coeff(1));
        return out;
    }
    let a = s.primitive_integer();
    let n = a.len() - 1;
    let an = a[n].clone();
    // Q(y) = an^(n-1) S(y / an) is monic with integer coefficients.
    let mut qc = alloc::vec![BigInt::zero(); n + 1];
    let mut pw = BigInt::one();
    for i in (0..n).rev() {
        qc[i] = &a[i] * &pw;
        pw *= &an;
    }
    qc[n] = BigInt::one();
    let bound = qc[0].abs();
    let prime = choose_prime(&qc);
    let modulus_target = &bound * 2 + 1;
    for r0 in roots_mod_p(&qc, prime) {
        let (r, m) = hensel_lift(&qc, r0, prime, &modulus_target);
        let mut y = r.mod_floor(&m);
        if &y * 2 > m {
            y -= &m;
        }
        if eval_int(&qc, &y).is_zero() {
            out.push(Rat::new(y, an.clone()));
        }
    }
    out
}

fn eval_int(c: &[BigInt], x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for v in c.iter().rev() {
        acc = acc * x + v;
    }
    acc
}

fn eval_mod(c: &[BigInt], x: &BigInt, m: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for v in c.iter().rev() {
        acc = (acc * x + v).mod_floor(m);
    }
    acc
}

fn derivative(c: &[BigInt]) -> Vec<BigInt> {
    c.iter().enumerate().skip(1).map(|(k, v)| v * BigInt::from(k)).collect()
}

fn reduce(c: &[BigInt], p: u64) -> Vec<u64> {
    let pb = BigInt::from(p);
    let mut v: Vec<u64> = c
        .iter()
        .map(|x| {
            let r = x.mod_floor(&pb);
            r.to_u64_digits().1.first().copied().unwrap_or(0)
        })
        .collect();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn fp_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let inv = super::rat::inv_mod(b[db], p);
    while r.len() > db {
        let k = r.len() - 1;
        let f = super::rat::mulmod(r[k], inv, p);
        if f != 0 {
            for (j, &c) in b.iter().enumerate() {
                let t = super::rat::mulmod(f, c, p);
                r[k - db + j] = (r[k - db + j] + p - t) % p;
            }
        }
        r.pop();
        while r.last() == Some(&0) {
            r.pop();
        }
    }
    r
}

fn fp_gcd_degree(a: &[u64], b: &[u64], p: u64) -> usize {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    while !b.is_empty() {
        let r = fp_rem(&a, &b, p);
        a = b;
        b = r;
    }
    a.len().saturating_sub(1)
}

/// Smallest prime above the tiny ones for which `c` stays squarefree.
fn choose_prime(c: &[BigInt]) -> u64 {
    let d = derivative(c);
    let mut p = 3;
    loop {
        if is_prime(p) {
            let a = reduce(c, p);
            let b = reduce(&d, p);
            if a.len() == c.len() && !b.is_empty() && fp_gcd_degree(&a, &b, p) == 0 {
                return p;
            }
        }
        p += 2;
    }
}

fn roots_mod_p(c: &[BigInt], p: u64) -> Vec<BigInt> {
    let pb = BigInt::from(p);
    (0..p)
        .map(BigInt::from)
        .filter(|x| eval_mod(c, x, &pb).is_zero())
        .collect()
}

/// Newton lifting of a simple root until the modulus exceeds `target`.
fn hensel_lift(c: &[BigInt], r0: BigInt, p: u64, target: &BigInt) -> (BigInt, BigInt) {
    let d = derivative(c);
    let mut m = BigInt::from(p);
    let mut r = r0;
    while &m <= target {
        m = &m * &m;
        let fr = eval_mod(c, &r, &m);
        let dr = eval_mod(&d, &r, &m);
        let inv = mod_inverse(&dr, &m);
        r = (&r - fr * inv).mod_floor(&m);
    }
    (r, m)
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::{int, rat};
    use proptest::prelude::*;

    #[test]
    fn spec_examples() {
        let p = UPoly::from_ints(&[-1, 0, 1]);
        assert_eq!(upoly_rational_roots(&p), [(int(-1), 1), (int(1), 1)]);
        let p = UPoly::from_ints(&[0, 0, 0, 1]);
        assert_eq!(upoly_rational_roots(&p), [(int(0), 3)]);
        let p = UPoly::from_ints(&[1, -3, 2]);
        assert_eq!(upoly_rational_roots(&p), [(rat(1, 2), 1), (int(1), 1)]);
    }

    #[test]
    fn irrational_roots_are_skipped() {
        let p = UPoly::from_ints(&[-2, 0, 1]);
        assert!(upoly_rational_roots(&p).is_empty());
        let p = UPoly::from_ints(&[-2, 0, 1]) * UPoly::from_ints(&[3, 7]);
        assert_eq!(upoly_rational_roots(&p), [(rat(-3, 7), 1)]);
    }

    proptest! {
        #[test]
        fn recovers_planted_roots(
            roots in proptest::collection::vec((-30i64..30, 1i64..9), 1..5),
            extra in proptest::collection::vec(-5i64..5, 0..3),
        ) {
            // product of (d t - n) times a factor with no rational root check
            let mut p = UPoly::one();
            let mut want: Vec<Rat> = Vec::new();
            for &(n, d) in &roots {
                p = &p * &UPoly::from_ints(&[-n, d]);
                want.push(rat(n, d));
            }
            let q = UPoly::from_ints(&[1, 0, 1]);
            if extra.len() > 1 { p = &p * &q; }
            want.sort();
            want.dedup();
            let got: Vec<Rat> = upoly_rational_roots(&p).into_iter().map(|(r, _)| r).collect();
            prop_assert_eq!(got, want);
        }
    }
}
