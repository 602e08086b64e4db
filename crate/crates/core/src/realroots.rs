//! Exact real-root counting and the quartic `Δ/P/D` all-real test.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::bigpoly::{squarefree_part_poly, IntPoly, RatPoly};
use crate::error::{Error, Result};

/// Invariants of `x^4 + a x^3 + b x^2 + c x + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuarticInvariants {
    pub delta: BigInt,
    pub dval: BigInt,
    pub pval: BigInt,
}

/// Real embeddings and complex-conjugate pairs of the distinct roots.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Signature {
    pub r1: usize,
    pub r2: usize,
    /// `true` when the input had a repeated root; `r1`/`r2` then describe the squarefree part.
    pub multiple_roots: bool,
}

impl Signature {
    pub fn degree(&self) -> usize {
        self.r1 + 2 * self.r2
    }
}

fn sign_changes(seq: &[RatPoly], x: &BigRational) -> usize {
    let mut last: Option<bool> = None;
    let mut changes = 0;
    for p in seq {
        let v = p.eval(x);
        if v.is_zero() {
            continue;
        }
        let pos = v.is_positive();
        if last.is_some_and(|l| l != pos) {
            changes += 1;
        }
        last = Some(pos);
    }
    changes
}

fn sturm_sequence(p: &RatPoly) -> Result<Vec<RatPoly>> {
    let mut seq = vec![p.clone(), p.derivative()];
    loop {
        let n = seq.len();
        if seq[n - 1].is_zero() {
            seq.pop();
            return Ok(seq);
        }
        let (_, r) = seq[n - 2].div_rem(&seq[n - 1])?;
        seq.push(-&r);
    }
}

/// `1 + max |a_i| / |lc|`: every root lies strictly inside `(-B, B)`.
pub fn cauchy_bound(p: &IntPoly) -> BigRational {
    let lc = p.leading().map(|c| c.abs()).unwrap_or_default();
    let n = p.coeffs().len().saturating_sub(1);
    let m = p.coeffs()[..n]
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap_or_default();
    BigRational::from(BigInt::from(1)) + BigRational::new(m, lc)
}

/// Number of distinct real roots over the whole line.
pub fn sturm_real_root_count(p: &IntPoly) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let s = squarefree_part_poly(p)?;
    if s.degree() == Some(0) {
        return Ok(0);
    }
    let b = cauchy_bound(&s);
    let seq = sturm_sequence(&s.to_rat())?;
    Ok(sign_changes(&seq, &-b.clone()) - sign_changes(&seq, &b))
}

pub fn signature(p: &IntPoly) -> Result<Signature> {
    let n = p.degree().ok_or(Error::ZeroPolynomial)?;
    let s = squarefree_part_poly(p)?;
    let ns = s.degree().unwrap();
    let r1 = sturm_real_root_count(&s)?;
    Ok(Signature {
        r1,
        r2: (ns - r1) / 2,
        multiple_roots: ns != n,
    })
}

/// Dirichlet rank `r1 + r2 - 1`.
pub fn unit_rank(sig: &Signature) -> Result<usize> {
    if sig.degree() < 2 {
        return Err(Error::InvalidInput(format!(
            "unit rank needs degree >= 2, signature has degree {}",
            sig.degree()
        )));
    }
    Ok(sig.r1 + sig.r2 - 1)
}

pub fn quartic_invariants(a: &BigInt, b: &BigInt, c: &BigInt) -> QuarticInvariants {
    let i = |n: i64| BigInt::from(n);
    let a2 = a * a;
    let a3 = &a2 * a;
    let a4 = &a3 * a;
    let b2 = b * b;
    let b3 = &b2 * b;
    let b4 = &b3 * b;
    let c2 = c * c;
    let c3 = &c2 * c;
    let c4 = &c3 * c;

    let delta = i(256) - i(192) * a * c - i(128) * &b2 + i(144) * b * &c2 - i(27) * &c4
        + i(144) * &a2 * b
        - i(6) * &a2 * &c2
        - i(80) * a * &b2 * c
        + i(18) * a * b * &c3
        + i(16) * &b4
        - i(4) * &b3 * &c2
        - i(27) * &a4
        + i(18) * &a3 * b * c
        - i(4) * &a3 * &c3
        - i(4) * &a2 * &b3
        + &a2 * &b2 * &c2;
    let dval = i(64) - i(16) * &b2 + i(16) * &a2 * b - i(16) * a * c - i(3) * &a4;
    let pval = i(8) * b - i(3) * &a2;
    QuarticInvariants { delta, dval, pval }
}

/// Reads `(a, b, c)` off a monic quartic with constant term 1.
pub fn quartic_invariants_of(p: &IntPoly) -> Result<QuarticInvariants> {
    let deg = p.degree().ok_or(Error::ZeroPolynomial)?;
    if deg != 4 {
        return Err(Error::WrongDegree {
            expected: 4,
            found: deg,
        });
    }
    if !p.is_monic() {
        return Err(Error::NotMonic);
    }
    if p.constant_term() != BigInt::from(1) {
        return Err(Error::InvalidInput(
            "quartic invariants need constant term 1".into(),
        ));
    }
    Ok(quartic_invariants(&p.coeff(3), &p.coeff(2), &p.coeff(1)))
}

/// `Δ > 0 ∧ P < 0 ∧ D < 0`: sufficient for four distinct real roots.
pub fn all_real_sufficient(inv: &QuarticInvariants) -> bool {
    inv.delta.is_positive() && inv.pval.is_negative() && inv.dval.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn i(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn sturm_examples() {
        let f4 = IntPoly::from_descending(&[1, -4, -1, 4, 1]);
        assert_eq!(sturm_real_root_count(&f4).unwrap(), 4);
        assert_eq!(sturm_real_root_count(&IntPoly::from_i64s(&[1, 0, 1])).unwrap(), 0);
        let ns = IntPoly::from_descending(&[1, 1, 1, 1, -1]);
        assert_eq!(sturm_real_root_count(&ns).unwrap(), 2);
        assert_eq!(sturm_real_root_count(&IntPoly::zero()), Err(Error::ZeroPolynomial));
        assert_eq!(sturm_real_root_count(&IntPoly::from_i64s(&[7])).unwrap(), 0);
    }

    #[test]
    fn repeated_roots_counted_once() {
        let p: IntPoly = "(x-1)^3*(x+2)^2*(x^2+1)".parse().unwrap();
        assert_eq!(sturm_real_root_count(&p).unwrap(), 2);
        let sig = signature(&p).unwrap();
        assert_eq!((sig.r1, sig.r2, sig.multiple_roots), (2, 1, true));
    }

    #[test]
    fn invariants_of_f4() {
        let inv = quartic_invariants(&i(-4), &i(-1), &i(4));
        assert_eq!(inv.delta, i(10512));
        assert_eq!(inv.pval, i(-56));
        assert_eq!(inv.dval, i(-720));
        assert!(all_real_sufficient(&inv));
    }

    #[test]
    fn invariants_of_x4_plus_1() {
        let inv = quartic_invariants(&i(0), &i(0), &i(0));
        assert_eq!(inv.pval, i(0));
        assert!(inv.delta.is_positive());
        assert!(!all_real_sufficient(&inv));
    }

    #[test]
    fn invariants_of_h7_and_g4() {
        let inv = quartic_invariants(&i(-7), &i(-3), &i(7));
        assert_eq!(inv.delta, i(620789));
        let g4 = IntPoly::from_descending(&[1, -7, 0, 4, 1]);
        assert!(all_real_sufficient(&quartic_invariants_of(&g4).unwrap()));
        assert!(quartic_invariants_of(&IntPoly::from_descending(&[1, 0, 0, 0, 2])).is_err());
    }

    #[test]
    fn unit_ranks() {
        let s = |r1, r2| Signature {
            r1,
            r2,
            multiple_roots: false,
        };
        assert_eq!(unit_rank(&s(4, 0)).unwrap(), 3);
        assert_eq!(unit_rank(&s(2, 1)).unwrap(), 2);
        assert_eq!(unit_rank(&s(0, 2)).unwrap(), 1);
        assert!(unit_rank(&s(1, 0)).is_err());
    }
}
