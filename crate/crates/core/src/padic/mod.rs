//! Denef's formula for the p-adic zeta function at good primes, checked
//! against solution counts through the Poincaré series identity.

mod count;
mod good;

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::algebra::rat::{is_prime, pow_i};
use crate::algebra::{series_expand, MPoly, Rat, UPoly};
use crate::error::{Error, Result};
use crate::resolution::{Base, CurveSystem, Kind, ResolutionGraph, ResolveOptions, Role};
use crate::zeta::Locality;

pub use count::{brute_force_counts, fp_points, naive_counts, CountSeries, ModPoly, DEFAULT_COUNT_BUDGET};
pub use good::{good_prime_check, GoodPrimeReport};

/// `(nu, N)` standing for `1 - L^(-nu) T^N`.
pub type Factor = (u64, u64);

fn int(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

fn one_minus(l: &Rat, (nu, n): Factor) -> UPoly {
    UPoly::one() - UPoly::monomial(n as usize, pow_i(l, -(nu as i64)))
}

/// Brings `L^(-2) sum_k c_k (L-1)^|I_k| prod_{I_k} L^(-nu) T^N / (1 - L^(-nu) T^N)`
/// over a common denominator, returning the numerator and the factors with
/// the largest multiplicity occurring in one term.
pub(crate) fn combine_terms<'a, I>(l: &Rat, terms: I) -> (UPoly, BTreeMap<Factor, u32>)
where
    I: IntoIterator<Item = (Rat, &'a [Factor])> + Clone,
{
    let mut den: BTreeMap<Factor, u32> = BTreeMap::new();
    for (_, fs) in terms.clone() {
        for (f, e) in multiset(fs) {
            let v = den.entry(f).or_insert(0);
            *v = (*v).max(e);
        }
    }
    let mut num = UPoly::zero();
    for (c, fs) in terms {
        let here = multiset(fs);
        let mut p = UPoly::constant(c * pow_i(&(l - Rat::one()), fs.len() as i64));
        for &(nu, n) in fs {
            p = &p * &UPoly::monomial(n as usize, pow_i(l, -(nu as i64)));
        }
        for (&f, &e) in &den {
            p = &p * &one_minus(l, f).pow(e - here.get(&f).copied().unwrap_or(0));
        }
        num = num + p;
    }
    (num.scale(&pow_i(l, -2)), den)
}

fn multiset(fs: &[Factor]) -> BTreeMap<Factor, u32> {
    let mut m = BTreeMap::new();
    for f in fs {
        *m.entry(*f).or_insert(0) += 1;
    }
    m
}

/// One term `p^(-2) count (p-1)^|I| prod_I p^(-nu) T^N / (1 - p^(-nu) T^N)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PadicTerm {
    /// Component ids of `I`.
    pub comps: Vec<usize>,
    /// `#E_I°(F_p)`, over the base point in local mode.
    pub count: i64,
    pub factors: Vec<Factor>,
}

/// `Z(T) = numerator(T) / prod (1 - p^(-nu) T^N)^e` with `T = p^(-s)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PadicZeta {
    pub p: u64,
    pub locality: Locality,
    pub terms: Vec<PadicTerm>,
    pub numerator: UPoly,
    /// Sorted factors surviving cancellation, with multiplicities.
    pub factors: Vec<(Factor, u32)>,
}

impl PadicZeta {
    fn from_terms(p: u64, locality: Locality, terms: Vec<PadicTerm>) -> Self {
        let l = int(p as i64);
        let (mut num, den) = combine_terms(&l, terms.iter().map(|t| (int(t.count), t.factors.as_slice())));
        let mut factors = Vec::new();
        for (f, mut e) in den {
            let d = one_minus(&l, f);
            while e > 0 {
                match num.div_exact(&d) {
                    Some(q) => {
                        num = q;
                        e -= 1;
                    }
                    None => break,
                }
            }
            if e > 0 {
                factors.push((f, e));
            }
        }
        if num.is_zero() {
            factors.clear();
        }
        PadicZeta {
            p,
            locality,
            terms,
            numerator: num,
            factors,
        }
    }

    pub fn denominator_poly(&self) -> UPoly {
        let l = int(self.p as i64);
        self.factors
            .iter()
            .fold(UPoly::one(), |acc, &(f, e)| &acc * &one_minus(&l, f).pow(e))
    }

    /// Taylor coefficients in `T`.
    pub fn series(&self, order: usize) -> Result<Vec<Rat>> {
        series_expand(&self.numerator, &self.denominator_poly(), order)
    }

    /// Value at `T`, `None` at a pole.
    pub fn eval(&self, t: &Rat) -> Option<Rat> {
        let d = self.denominator_poly().eval(t);
        if d.is_zero() {
            return None;
        }
        Some(self.numerator.eval(t) / d)
    }

    /// Real parts `-nu/N` of the poles. All roots of `1 - p^(-nu) T^N`
    /// share one real part, so a real part survives when the factors with
    /// that ratio are not all cancelled by the numerator.
    pub fn pole_real_parts(&self) -> Vec<Rat> {
        let l = int(self.p as i64);
        let mut groups: BTreeMap<Rat, UPoly> = BTreeMap::new();
        for &((nu, n), e) in &self.factors {
            let r = -Rat::new(BigInt::from(nu), BigInt::from(n));
            let d = groups.entry(r).or_insert_with(UPoly::one);
            *d = &*d * &one_minus(&l, (nu, n)).pow(e);
        }
        groups
            .into_iter()
            .filter(|(_, d)| {
                let g = self.numerator.gcd(d);
                d.degree() > g.degree()
            })
            .map(|(r, _)| r)
            .collect()
    }

    /// The denominator written as `prod (p^(nu + N s) - 1)^e`, with `p`
    /// printed as `base`.
    pub fn denominator_string(&self, base: &str) -> String {
        let mut out = String::new();
        for &((nu, n), e) in &self.factors {
            let ns = if n == 1 { String::from("s") } else { format!("{}s", n) };
            out.push_str(&format!("({}^({}+{})-1)", base, nu, ns));
            if e > 1 {
                out.push_str(&format!("^{}", e));
            }
        }
        if out.is_empty() {
            out.push('1');
        }
        out
    }

    /// Numerator after multiplying through by `prod (p^nu T^(-N))^e`, as
    /// `(exponent of T, coefficient)` pairs in decreasing exponent order.
    pub fn numerator_laurent(&self) -> Vec<(i64, Rat)> {
        let l = int(self.p as i64);
        let mut shift = 0i64;
        let mut scale = Rat::one();
        for &((nu, n), e) in &self.factors {
            shift += (n * u64::from(e)) as i64;
            scale *= pow_i(&l, (nu * u64::from(e)) as i64);
        }
        let mut out: Vec<(i64, Rat)> = self
            .numerator
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k as i64 - shift, c * &scale))
            .collect();
        out.reverse();
        out
    }
}

impl fmt::Display for PadicZeta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.numerator_laurent();
        if terms.is_empty() {
            return f.write_str("0");
        }
        let mut num = String::new();
        for (k, (e, c)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            if k > 0 {
                num.push_str(if neg { " - " } else { " + " });
            } else if neg {
                num.push('-');
            }
            let a = c.abs();
            let mono = match e {
                0 => String::new(),
                1 => String::from("T"),
                e => format!("T^{}", e),
            };
            if mono.is_empty() {
                num.push_str(&format!("{}", a));
            } else if a.is_one() {
                num.push_str(&mono);
            } else {
                num.push_str(&format!("{} {}", a, mono));
            }
        }
        let p = format!("{}", self.p);
        write!(f, "({})/({}) with T = {}^-s", num, self.denominator_string(&p), p)
    }
}

pub fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// Global counts: `E_∅°` is the complement of the curve, a strict
/// component loses its critical points, an exceptional one its
/// intersection points.
fn global_terms(g: &ResolutionGraph, p: u64) -> Result<Vec<PadicTerm>> {
    let atoms: Vec<MPoly> = g.atoms.iter().map(|a| a.poly.primitive()).collect();
    let mods: Vec<ModPoly> = atoms
        .iter()
        .map(|a| ModPoly::reduce(a, p).ok_or_else(|| Error::Invalid(String::from("atom is not p-integral"))))
        .collect::<Result<_>>()?;
    let mut on_curve = 0i64;
    let mut per_atom = alloc::vec![0i64; atoms.len()];
    for x in 0..p {
        for y in 0..p {
            let mut any = false;
            for (i, m) in mods.iter().enumerate() {
                if m.eval(x, y) == 0 {
                    per_atom[i] += 1;
                    any = true;
                }
            }
            if any {
                on_curve += 1;
            }
        }
    }
    let form = |i: usize| (u64::from(g.components[i].nu), g.total_n(i));
    let mut terms = alloc::vec![PadicTerm {
        comps: Vec::new(),
        count: (p * p) as i64 - on_curve,
        factors: Vec::new(),
    }];
    for c in &g.components {
        let count = match c.kind {
            Kind::Strict => {
                let a = &atoms[c.atom.expect("strict component has an atom")];
                let crit = g.critical_points.iter().filter(|pt| a.eval(&[pt.0.clone(), pt.1.clone()]).is_zero()).count();
                per_atom[c.atom.unwrap()] - crit as i64
            }
            Kind::Exceptional => p as i64 + 1 - g.valence(c.id) as i64,
        };
        terms.push(PadicTerm {
            comps: alloc::vec![c.id],
            count,
            factors: alloc::vec![form(c.id)],
        });
    }
    for e in &g.edges {
        terms.push(PadicTerm {
            comps: alloc::vec![e.a, e.b],
            count: 1,
            factors: alloc::vec![form(e.a), form(e.b)],
        });
    }
    Ok(terms)
}

fn local_terms(g: &ResolutionGraph, p: u64) -> Result<Vec<PadicTerm>> {
    let mut terms = Vec::new();
    for s in g.local_strata()? {
        let (a, b) = s.class.expect("local strata carry classes");
        let factors = s.comps.iter().map(|&i| (u64::from(g.components[i].nu), g.total_n(i))).collect();
        terms.push(PadicTerm {
            comps: s.comps,
            count: a * p as i64 + b,
            factors,
        });
    }
    Ok(terms)
}

/// Denef's formula at a prime that passes [`good_prime_check`].
pub fn denef_zeta(g: &ResolutionGraph, p: u64, locality: Locality) -> Result<PadicZeta> {
    require_prime(p)?;
    if g.has_form() {
        return Err(Error::Invalid(String::from("p-adic zeta functions take no differential form")));
    }
    let report = good_prime_check(g, p);
    if !report.is_good() {
        return Err(Error::BadPrime {
            p,
            reasons: report.failures,
        });
    }
    let terms = match (locality, g.is_germ()) {
        (Locality::Local, true) => local_terms(g, p)?,
        (Locality::Global, false) => global_terms(g, p)?,
        (Locality::Local, false) => return Err(Error::Invalid(String::from("local zeta needs a germ resolution"))),
        (Locality::Global, true) => {
            return Err(Error::Invalid(String::from("global zeta needs a resolution of the affine curve")))
        }
    };
    let terms = terms.into_iter().filter(|t| t.count != 0).collect();
    Ok(PadicZeta::from_terms(p, locality, terms))
}

/// Counts predicted by the zeta function: with `mu_0` the volume of the
/// domain and `mu_(i+1) = mu_i - z_i`, the count mod `p^i` is `mu_i p^(2i)`.
pub fn predicted_counts(z: &PadicZeta, imax: u32) -> Result<Vec<Rat>> {
    let series = z.series(imax as usize)?;
    let p = int(z.p as i64);
    let mut mu = match z.locality {
        Locality::Global => Rat::one(),
        Locality::Local => pow_i(&p, -2),
    };
    let mut out = Vec::new();
    for i in 1..=imax as usize {
        mu -= &series[i - 1];
        out.push(&mu * pow_i(&p, 2 * i as i64));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub zeta: PadicZeta,
    pub good: GoodPrimeReport,
    pub counts: CountSeries,
    pub predicted: Vec<Rat>,
    pub verified: bool,
    /// First level `i` where prediction and count differ.
    pub first_mismatch: Option<u32>,
}

/// The function `prod f_l^(m_l)` as a primitive integer polynomial, moved
/// so that the base point is the origin.
pub fn function_polynomial(c: &CurveSystem) -> MPoly {
    let mut f = MPoly::one(2);
    for fac in c.factors.iter().filter(|f| f.role == Role::Function) {
        f = &f * &fac.poly.pow(fac.multiplicity);
    }
    let f = match &c.base {
        Base::Point(x0, y0) => f.translate(&[x0.clone(), y0.clone()]),
        Base::Global => f,
    };
    f.primitive()
}

/// Resolves `c`, evaluates Denef's formula at `p` and compares the implied
/// counts mod `p^i`, `i <= imax`, with direct counts.
pub fn verify_padic(c: &CurveSystem, p: u64, imax: u32, count_budget: u64) -> Result<VerifyReport> {
    require_prime(p)?;
    let g = crate::resolution::resolve(c, ResolveOptions::default())?;
    verify_padic_graph(c, &g, p, imax, count_budget)
}

/// As [`verify_padic`], with a resolution `g` of `c` computed by the caller.
pub fn verify_padic_graph(c: &CurveSystem, g: &ResolutionGraph, p: u64, imax: u32, count_budget: u64) -> Result<VerifyReport> {
    require_prime(p)?;
    let locality = if g.is_germ() { Locality::Local } else { Locality::Global };
    let zeta = denef_zeta(g, p, locality)?;
    let good = good_prime_check(g, p);
    let predicted = predicted_counts(&zeta, imax)?;
    let counts = brute_force_counts(&function_polynomial(c), p, imax, g.is_germ(), count_budget)?;
    let first_mismatch = predicted
        .iter()
        .zip(&counts.counts)
        .position(|(a, &b)| *a != int(b as i64))
        .map(|i| i as u32 + 1);
    Ok(VerifyReport {
        zeta,
        good,
        counts,
        predicted,
        verified: first_mismatch.is_none(),
        first_mismatch,
    })
}
