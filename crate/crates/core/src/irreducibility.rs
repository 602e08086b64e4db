//! Irreducibility evidence over `Q`: rational roots, exhaustive quadratic
//! splits for small degree, Perron's coefficient criterion and reduction mod p.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{divisors, exact_sqrt};
use crate::bigpoly::IntPoly;
use crate::error::{Error, Result};
use crate::fp::{is_prime, FpPoly};
use crate::realroots::cauchy_bound;

/// Trial-division limit for divisor enumeration; covers constants up to 10^12.
pub const DIVISOR_TRIAL_LIMIT: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PerronCase {
    CaseI,
    CaseII,
    NotApplicable,
}

impl PerronCase {
    pub fn proves_irreducible(self) -> bool {
        self != PerronCase::NotApplicable
    }
}

/// What established irreducibility.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Certificate {
    Linear,
    NoRationalRoot,
    QuarticSplitSearch,
    QuadraticFactorSearch,
    Perron(PerronCase),
    ModP(u64),
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::Linear => f.write_str("linear"),
            Certificate::NoRationalRoot => f.write_str("no rational root"),
            Certificate::QuarticSplitSearch => f.write_str("exhaustive quadratic split search"),
            Certificate::QuadraticFactorSearch => f.write_str("bounded quadratic factor search"),
            Certificate::Perron(PerronCase::CaseI) => f.write_str("Perron case (i)"),
            Certificate::Perron(_) => f.write_str("Perron case (ii)"),
            Certificate::ModP(p) => write!(f, "irreducible mod {p}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IrreducibilityVerdict {
    Irreducible(Certificate),
    /// Nontrivial factors whose product is the input.
    Reducible(Vec<IntPoly>),
    Inconclusive,
}

impl IrreducibilityVerdict {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, IrreducibilityVerdict::Irreducible(_))
    }
}

fn require_monic(p: &IntPoly) -> Result<usize> {
    let n = p.degree().ok_or(Error::ZeroPolynomial)?;
    if !p.is_monic() {
        return Err(Error::NotMonic);
    }
    Ok(n)
}

/// All rational roots, ascending, each verified by exact evaluation.
pub fn rational_roots(p: &IntPoly) -> Result<Vec<BigRational>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut roots = Vec::new();
    let shift = p.coeffs().iter().take_while(|c| c.is_zero()).count();
    if shift > 0 {
        roots.push(BigRational::zero());
    }
    let q = IntPoly::new(p.coeffs()[shift..].to_vec());
    if q.degree().unwrap_or(0) > 0 {
        let nums = divisors(&q.constant_term(), DIVISOR_TRIAL_LIMIT)?;
        let dens = divisors(q.leading().unwrap(), DIVISOR_TRIAL_LIMIT)?;
        for n in &nums {
            for d in &dens {
                for cand in [BigRational::new(n.clone(), d.clone()), BigRational::new(-n, d.clone())] {
                    if q.eval(&cand).is_zero() && !roots.contains(&cand) {
                        roots.push(cand);
                    }
                }
            }
        }
    }
    roots.sort();
    Ok(roots)
}

fn linear_split(p: &IntPoly, root: &BigInt) -> Vec<IntPoly> {
    let lin = IntPoly::new(vec![-root.clone(), BigInt::one()]);
    let cof = p.div_exact(&lin).expect("verified root");
    vec![lin, cof]
}

/// Searches `x^4+ax^3+bx^2+cx+d = (x^2+px+q)(x^2+rx+s)` over divisor pairs `q s = d`.
fn quartic_split(poly: &IntPoly) -> Result<Option<(IntPoly, IntPoly)>> {
    let a = poly.coeff(3);
    let b = poly.coeff(2);
    let c = poly.coeff(1);
    let d = poly.coeff(0);
    if d.is_zero() {
        return Ok(None);
    }
    let quad = |p: &BigInt, q: &BigInt| IntPoly::new(vec![q.clone(), p.clone(), BigInt::one()]);
    for pos in divisors(&d, DIVISOR_TRIAL_LIMIT)? {
        for q in [pos.clone(), -pos] {
            let s = &d / &q;
            let mut candidates = Vec::new();
            if q != s {
                // p s + q (a - p) = c
                let num = &c - &q * &a;
                let den = &s - &q;
                if (&num % &den).is_zero() {
                    candidates.push(num / den);
                }
            } else if c == &q * &a {
                // p + r = a, p r = b - 2q
                let disc = &a * &a - BigInt::from(4) * (&b - BigInt::from(2) * &q);
                if let Some(root) = exact_sqrt(&disc) {
                    for cand in [&a + &root, &a - &root] {
                        if (&cand % BigInt::from(2)).is_zero() {
                            candidates.push(cand / 2);
                        }
                    }
                }
            }
            for p in candidates {
                let r = &a - &p;
                let left = quad(&p, &q);
                let right = quad(&r, &s);
                if &(&left * &right) == poly {
                    return Ok(Some((left, right)));
                }
            }
        }
    }
    Ok(None)
}

/// Complete irreducibility decision for monic integer quartics.
pub fn quartic_irreducible(p: &IntPoly) -> Result<IrreducibilityVerdict> {
    let n = require_monic(p)?;
    if n != 4 {
        return Err(Error::WrongDegree {
            expected: 4,
            found: n,
        });
    }
    if let Some(r) = rational_roots(p)?.first() {
        return Ok(IrreducibilityVerdict::Reducible(linear_split(p, r.numer())));
    }
    Ok(match quartic_split(p)? {
        Some((l, r)) => IrreducibilityVerdict::Reducible(vec![l, r]),
        None => IrreducibilityVerdict::Irreducible(Certificate::QuarticSplitSearch),
    })
}

/// Finds a monic integer quadratic factor of a monic polynomial of any degree.
///
/// Root magnitudes are below the Cauchy bound `B`, so a monic factor
/// `x^2 + u x + v` has `|u| < 2B`, `|v| < B^2`, and `v` divides the constant term.
pub fn quadratic_factor_search(p: &IntPoly) -> Result<Option<(IntPoly, IntPoly)>> {
    let n = require_monic(p)?;
    if n < 2 {
        return Ok(None);
    }
    let c0 = p.constant_term();
    if c0.is_zero() {
        return Ok(None);
    }
    let bound = cauchy_bound(p).ceil().to_integer();
    let umax = BigInt::from(2) * &bound;
    let vmax = &bound * &bound;
    for pos in divisors(&c0, DIVISOR_TRIAL_LIMIT)? {
        if pos > vmax {
            break;
        }
        for v in [pos.clone(), -pos.clone()] {
            let mut u = -umax.clone();
            while u <= umax {
                let q = IntPoly::new(vec![v.clone(), u.clone(), BigInt::one()]);
                if let Some(cof) = p.div_exact(&q) {
                    if cof.degree().unwrap_or(0) > 0 {
                        return Ok(Some((q, cof)));
                    }
                }
                u += 1;
            }
        }
    }
    Ok(None)
}

/// Exhaustive decision for monic polynomials of degree at most 5.
pub fn small_degree_irreducible(p: &IntPoly) -> Result<IrreducibilityVerdict> {
    let n = require_monic(p)?;
    match n {
        0 => Err(Error::ConstantPolynomial),
        1 => Ok(IrreducibilityVerdict::Irreducible(Certificate::Linear)),
        2 | 3 | 5 => {
            if let Some(r) = rational_roots(p)?.first() {
                return Ok(IrreducibilityVerdict::Reducible(linear_split(p, r.numer())));
            }
            if n == 5 {
                if let Some((a, b)) = quadratic_factor_search(p)? {
                    return Ok(IrreducibilityVerdict::Reducible(vec![a, b]));
                }
                return Ok(IrreducibilityVerdict::Irreducible(
                    Certificate::QuadraticFactorSearch,
                ));
            }
            Ok(IrreducibilityVerdict::Irreducible(Certificate::NoRationalRoot))
        }
        4 => quartic_irreducible(p),
        _ => Err(Error::InvalidInput(format!(
            "exhaustive search supports degree <= 5, got {n}"
        ))),
    }
}

/// Perron's criterion on `x^n + a1 x^(n-1) + ... + an`.
pub fn perron_check(p: &IntPoly) -> Result<PerronCase> {
    let n = require_monic(p)?;
    if n == 0 {
        return Err(Error::ConstantPolynomial);
    }
    if p.constant_term().is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    let a1 = p.coeff(n - 1).abs();
    let rest: BigInt = p.coeffs()[..n - 1].iter().map(|c| c.abs()).sum::<BigInt>() + 1;
    if a1 > rest {
        return Ok(PerronCase::CaseI);
    }
    let one = BigRational::one();
    if a1 == rest && !p.eval(&one).is_zero() && !p.eval(&-one).is_zero() {
        return Ok(PerronCase::CaseII);
    }
    Ok(PerronCase::NotApplicable)
}

pub fn irreducible_mod_p(p: &IntPoly, prime: u64) -> Result<bool> {
    let lc = p.leading().ok_or(Error::ZeroPolynomial)?;
    if !is_prime(prime) {
        return Err(Error::NotPrime(prime));
    }
    if (lc % BigInt::from(prime)).is_zero() {
        return Err(Error::PrimeDividesLeading(prime));
    }
    Ok(FpPoly::from_int(p, prime).is_irreducible())
}

/// Best available evidence for a monic polynomial: exhaustive search up to
/// degree 5, then Perron, then reduction modulo primes below 100.
pub fn certify(p: &IntPoly) -> Result<IrreducibilityVerdict> {
    let n = require_monic(p)?;
    if n <= 5 {
        return small_degree_irreducible(p);
    }
    if !p.constant_term().is_zero() {
        let case = perron_check(p)?;
        if case.proves_irreducible() {
            return Ok(IrreducibilityVerdict::Irreducible(Certificate::Perron(case)));
        }
    }
    for prime in crate::fp::primes_up_to(100) {
        if irreducible_mod_p(p, prime)? {
            return Ok(IrreducibilityVerdict::Irreducible(Certificate::ModP(prime)));
        }
    }
    if let Some(r) = rational_roots(p)?.first() {
        return Ok(IrreducibilityVerdict::Reducible(linear_split(p, r.numer())));
    }
    Ok(IrreducibilityVerdict::Inconclusive)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(s: &str) -> IntPoly {
        s.parse().unwrap()
    }

    fn q(n: i64) -> BigRational {
        BigRational::from(BigInt::from(n))
    }

    #[test]
    fn rational_root_examples() {
        assert_eq!(rational_roots(&poly("x^4-1")).unwrap(), vec![q(-1), q(1)]);
        assert!(rational_roots(&poly("x^4-4x^3-x^2+4x+1")).unwrap().is_empty());
        assert!(rational_roots(&poly("x^3+2x^2-3x-1")).unwrap().is_empty());
        assert_eq!(
            rational_roots(&poly("(2x-1)*x^2*(x+3)")).unwrap(),
            vec![q(-3), q(0), BigRational::new(1.into(), 2.into())]
        );
        assert_eq!(rational_roots(&IntPoly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn quartic_examples() {
        assert_eq!(
            quartic_irreducible(&poly("x^4-4x^3-x^2+4x+1")).unwrap(),
            IrreducibilityVerdict::Irreducible(Certificate::QuarticSplitSearch)
        );
        let f2 = poly("x^4-2x^3-x^2+2x+1");
        match quartic_irreducible(&f2).unwrap() {
            IrreducibilityVerdict::Reducible(fs) => {
                assert_eq!(fs, vec![poly("x^2-x-1"), poly("x^2-x-1")]);
            }
            other => panic!("{other:?}"),
        }
        match quartic_irreducible(&poly("x^4-1")).unwrap() {
            IrreducibilityVerdict::Reducible(fs) => {
                assert_eq!(fs[0], poly("x+1"));
                assert_eq!(&fs[0] * &fs[1], poly("x^4-1"));
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(quartic_irreducible(&poly("2x^4+1")), Err(Error::NotMonic));
        assert!(matches!(
            quartic_irreducible(&poly("x^3+1")),
            Err(Error::WrongDegree { .. })
        ));
    }

    #[test]
    fn split_with_equal_constant_pair() {
        // (x^2+3x+1)(x^2-x+1): q = s = 1
        let p = &poly("x^2+3x+1") * &poly("x^2-x+1");
        match quartic_irreducible(&p).unwrap() {
            IrreducibilityVerdict::Reducible(fs) => assert_eq!(&fs[0] * &fs[1], p),
            other => panic!("{other:?}"),
        }
        assert!(quartic_irreducible(&poly("x^4+1")).unwrap().is_irreducible());
        assert!(!quartic_irreducible(&poly("x^4+4")).unwrap().is_irreducible());
    }

    #[test]
    fn perron_examples() {
        assert_eq!(perron_check(&poly("x^5-7x^4+4x+1")).unwrap(), PerronCase::CaseI);
        assert_eq!(perron_check(&poly("x^4-4x^3-2x+1")).unwrap(), PerronCase::CaseII);
        assert_eq!(
            perron_check(&poly("x^4-2x^3+x+1")).unwrap(),
            PerronCase::NotApplicable
        );
        // equality but p(1) = 0
        assert_eq!(
            perron_check(&poly("x^2-2x+1")).unwrap(),
            PerronCase::NotApplicable
        );
        assert_eq!(perron_check(&poly("x^4-5x^3+x")), Err(Error::ZeroConstantTerm));
        assert!(small_degree_irreducible(&poly("x^4-4x^3-2x+1"))
            .unwrap()
            .is_irreducible());
    }

    #[test]
    fn mod_p_examples() {
        assert!(irreducible_mod_p(&poly("x^4-7x^3+4x+1"), 2).unwrap());
        assert!(!irreducible_mod_p(&poly("x^4+1"), 2).unwrap());
        assert!(!irreducible_mod_p(&poly("x^4-4x^3-x^2+4x+1"), 2).unwrap());
        assert_eq!(irreducible_mod_p(&poly("x^2+1"), 4), Err(Error::NotPrime(4)));
        assert_eq!(
            irreducible_mod_p(&poly("3x^2+1"), 3),
            Err(Error::PrimeDividesLeading(3))
        );
    }

    #[test]
    fn quintic_search() {
        let p = &poly("x^2+x-3") * &poly("x^3-2x+5");
        match small_degree_irreducible(&p).unwrap() {
            IrreducibilityVerdict::Reducible(fs) => assert_eq!(&fs[0] * &fs[1], p),
            other => panic!("{other:?}"),
        }
        assert!(small_degree_irreducible(&poly("x^5-x-1")).unwrap().is_irreducible());
    }

    #[test]
    fn certify_higher_degree() {
        let g7 = poly("x^7-7x^6+4x+1");
        assert_eq!(
            certify(&g7).unwrap(),
            IrreducibilityVerdict::Irreducible(Certificate::Perron(PerronCase::CaseI))
        );
        let r = certify(&poly("(x-2)*(x^5+x+3)")).unwrap();
        assert!(!r.is_irreducible());
    }
}
