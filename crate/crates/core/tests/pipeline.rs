//! The public pipeline on Brieskorn-Pham curves `y^a - x^b`, against
//! closed formulas.

use monolab_core::algebra::{MPoly, Rat, UnityRat};
use monolab_core::monodromy::{char_poly_p1, lct, milnor_number};
use monolab_core::padic::{denef_zeta, good_prime_check};
use monolab_core::resolution::{resolve_germ, CurveSystem};
use monolab_core::zeta::{poles, zeta_top, Locality, ZetaOptions};
use num_integer::Integer;
use proptest::prelude::*;

fn brieskorn_pham(a: u32, b: u32) -> MPoly {
    let one = Rat::from_integer(1.into());
    MPoly::from_terms(2, [(vec![0, a], one.clone()), (vec![b, 0], -one)])
}

fn r(n: u64, d: u64) -> Rat {
    Rat::new((n as i64).into(), (d as i64).into())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn closed_formulas(a in 2u32..6, b in 2u32..9) {
        prop_assume!(a.gcd(&b) == 1);
        let g = resolve_germ(&CurveSystem::germ(brieskorn_pham(a, b))).unwrap();
        let (a, b) = (u64::from(a), u64::from(b));
        // lct = 1/a + 1/b, the Milnor number is (a-1)(b-1)
        prop_assert_eq!(lct(&g, Locality::Local).unwrap().value, r(a + b, a * b));
        prop_assert_eq!(milnor_number(&g).unwrap(), (a - 1) * (b - 1));
        let p1 = char_poly_p1(&g).unwrap();
        prop_assert_eq!(p1, UnityRat::from_pairs([(a * b, 1), (a, -1), (b, -1), (1, 1)]));
        let z = zeta_top(&g, &ZetaOptions::local()).unwrap();
        let ps = poles(&z, None).poles();
        prop_assert_eq!(ps.clone(), vec![-r(1, 1), -r(a + b, a * b)]);
        // the poles of Igusa's zeta function have the same real parts
        for p in [5u64, 7, 11, 13] {
            if good_prime_check(&g, p).is_good() {
                let d = denef_zeta(&g, p, Locality::Local).unwrap();
                let mut real = d.pole_real_parts();
                real.sort();
                prop_assert_eq!(&real, &ps);
            }
        }
    }
}
