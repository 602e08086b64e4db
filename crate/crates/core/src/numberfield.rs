//! Arithmetic in `Q(α) = Q[x]/(f)` and the unit checks built on it.
//!
//! Elements are coordinate vectors on the power basis `1, α, …, α^(n-1)`.
//! Norms and unit status come from the characteristic polynomial of
//! multiplication-by-element, so no integral basis is needed.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::bigpoly::{gcd_over_q, IntPoly, RatPoly};
use crate::error::{Error, Result};
use crate::irreducibility::{certify, IrreducibilityVerdict};
use crate::quadsub::squarefree_part;

#[derive(Clone, Debug)]
pub struct NFContext {
    modulus: Arc<IntPoly>,
    modulus_rat: RatPoly,
    degree: usize,
    evidence: IrreducibilityVerdict,
}

#[derive(Clone, PartialEq, Eq)]
pub struct NFElement {
    modulus: Arc<IntPoly>,
    coords: Vec<BigRational>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NFOp {
    Add,
    Sub,
    Mul,
    Inv,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalPolynomial {
    pub rational: RatPoly,
    /// Present exactly when the element is an algebraic integer.
    pub integral: Option<IntPoly>,
}

#[derive(Clone, Debug)]
pub struct EighteenUnits {
    pub count_distinct: usize,
    pub all_exceptional: bool,
    pub units: Vec<NFElement>,
}

/// `β = (α² - 1)/α` together with its quadratic relation `β² - tβ + ε = 0`.
#[derive(Clone, Debug)]
pub struct SubfieldWitness {
    pub beta: NFElement,
    /// `ε = ±1` in `β² - tβ + ε = 0`.
    pub norm_sign: i8,
    pub beta_minpoly: IntPoly,
    /// Squarefree part of `t² - 4ε`; the quadratic subfield is `Q(√d)`.
    pub d: BigInt,
}

impl NFElement {
    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    fn as_poly(&self) -> RatPoly {
        RatPoly::new(self.coords.clone())
    }
}

impl fmt::Display for NFElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.as_poly().display_var("a"))
    }
}

impl fmt::Debug for NFElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NFElement({self})")
    }
}

impl NFContext {
    /// Requires a monic modulus with a proof of irreducibility.
    pub fn new(modulus: IntPoly) -> Result<Self> {
        let degree = modulus.degree().ok_or(Error::ZeroPolynomial)?;
        if degree == 0 {
            return Err(Error::ConstantPolynomial);
        }
        if !modulus.is_monic() {
            return Err(Error::NotMonic);
        }
        let evidence = certify(&modulus)?;
        match evidence {
            IrreducibilityVerdict::Irreducible(_) => {}
            IrreducibilityVerdict::Reducible(_) => return Err(Error::Reducible),
            IrreducibilityVerdict::Inconclusive => return Err(Error::IrreducibilityUnknown),
        }
        Ok(NFContext {
            modulus_rat: modulus.to_rat(),
            modulus: Arc::new(modulus),
            degree,
            evidence,
        })
    }

    pub fn modulus(&self) -> &IntPoly {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn evidence(&self) -> &IrreducibilityVerdict {
        &self.evidence
    }

    fn reduce(&self, p: &RatPoly) -> NFElement {
        let r = if p.degree().is_some_and(|d| d >= self.degree) {
            p.div_rem(&self.modulus_rat).expect("nonzero modulus").1
        } else {
            p.clone()
        };
        let mut coords = r.coeffs().to_vec();
        coords.resize(self.degree, BigRational::zero());
        NFElement {
            modulus: self.modulus.clone(),
            coords,
        }
    }

    pub fn element(&self, coords: Vec<BigRational>) -> Result<NFElement> {
        if coords.len() != self.degree {
            return Err(Error::ContextMismatch);
        }
        Ok(NFElement {
            modulus: self.modulus.clone(),
            coords,
        })
    }

    pub fn from_rational(&self, c: BigRational) -> NFElement {
        self.reduce(&RatPoly::constant(c))
    }

    pub fn from_int(&self, c: i64) -> NFElement {
        self.from_rational(BigRational::from(BigInt::from(c)))
    }

    /// The polynomial expression `p(α)`.
    pub fn from_poly(&self, p: &IntPoly) -> NFElement {
        self.reduce(&p.to_rat())
    }

    pub fn generator(&self) -> NFElement {
        self.from_poly(&IntPoly::x())
    }

    fn check(&self, x: &NFElement) -> Result<()> {
        if Arc::ptr_eq(&x.modulus, &self.modulus) || *x.modulus == *self.modulus {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn add(&self, x: &NFElement, y: &NFElement) -> Result<NFElement> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.reduce(&(&x.as_poly() + &y.as_poly())))
    }

    pub fn sub(&self, x: &NFElement, y: &NFElement) -> Result<NFElement> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.reduce(&(&x.as_poly() - &y.as_poly())))
    }

    pub fn neg(&self, x: &NFElement) -> Result<NFElement> {
        self.check(x)?;
        Ok(self.reduce(&-&x.as_poly()))
    }

    pub fn mul(&self, x: &NFElement, y: &NFElement) -> Result<NFElement> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.reduce(&(&x.as_poly() * &y.as_poly())))
    }

    /// Inverse by the extended Euclidean algorithm against the modulus.
    pub fn inv(&self, x: &NFElement) -> Result<NFElement> {
        self.check(x)?;
        if x.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (mut r0, mut r1) = (self.modulus_rat.clone(), x.as_poly());
        let (mut s0, mut s1) = (RatPoly::zero(), RatPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1)?;
            let s = &s0 - &(&q * &s1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        // r0 is a nonzero constant because the modulus is irreducible
        if r0.degree() != Some(0) {
            return Err(Error::Contradiction("modulus shares a factor with element".into()));
        }
        let c = r0.coeff(0).recip();
        Ok(self.reduce(&s0.scale(&c)))
    }

    pub fn div(&self, x: &NFElement, y: &NFElement) -> Result<NFElement> {
        self.mul(x, &self.inv(y)?)
    }

    pub fn arith(&self, op: NFOp, x: &NFElement, y: Option<&NFElement>) -> Result<NFElement> {
        let need = || y.ok_or_else(|| Error::InvalidInput("binary operation needs two operands".into()));
        match op {
            NFOp::Add => self.add(x, need()?),
            NFOp::Sub => self.sub(x, need()?),
            NFOp::Mul => self.mul(x, need()?),
            NFOp::Inv => self.inv(x),
        }
    }

    /// Matrix of multiplication by `x`; column `j` holds `x α^j`.
    fn mult_matrix(&self, x: &NFElement) -> Vec<Vec<BigRational>> {
        let n = self.degree;
        let mut m = vec![vec![BigRational::zero(); n]; n];
        let mut col = x.clone();
        let alpha = self.generator();
        for j in 0..n {
            for i in 0..n {
                m[i][j] = col.coords[i].clone();
            }
            col = self.mul(&col, &alpha).expect("same context");
        }
        m
    }

    /// Characteristic polynomial of multiplication-by-`x` (Faddeev–LeVerrier).
    pub fn charpoly(&self, x: &NFElement) -> Result<RatPoly> {
        self.check(x)?;
        let n = self.degree;
        let a = self.mult_matrix(x);
        let matmul = |p: &Vec<Vec<BigRational>>, q: &Vec<Vec<BigRational>>| {
            let mut out = vec![vec![BigRational::zero(); n]; n];
            for i in 0..n {
                for k in 0..n {
                    if p[i][k].is_zero() {
                        continue;
                    }
                    for j in 0..n {
                        out[i][j] += &p[i][k] * &q[k][j];
                    }
                }
            }
            out
        };
        let mut coeffs = vec![BigRational::zero(); n + 1];
        coeffs[n] = BigRational::one();
        let mut m = vec![vec![BigRational::zero(); n]; n];
        for k in 1..=n {
            let mut next = matmul(&a, &m);
            for (i, row) in next.iter_mut().enumerate() {
                row[i] += &coeffs[n - k + 1];
            }
            m = next;
            let am = matmul(&a, &m);
            let tr: BigRational = (0..n).map(|i| am[i][i].clone()).sum();
            coeffs[n - k] = -tr / BigRational::from(BigInt::from(k));
        }
        Ok(RatPoly::new(coeffs))
    }

    pub fn norm(&self, x: &NFElement) -> Result<BigRational> {
        let cp = self.charpoly(x)?;
        let c0 = cp.coeff(0);
        Ok(if self.degree % 2 == 1 { -c0 } else { c0 })
    }

    pub fn minpoly(&self, x: &NFElement) -> Result<MinimalPolynomial> {
        let cp = self.charpoly(x)?;
        let g = gcd_over_q(&cp, &cp.derivative())?;
        let rational = cp.div_rem(&g)?.0.monic();
        let integral = rational.to_int_exact();
        Ok(MinimalPolynomial { rational, integral })
    }

    /// Algebraic integer with norm `±1`.
    pub fn is_unit(&self, x: &NFElement) -> Result<bool> {
        let cp = self.charpoly(x)?;
        Ok(cp.coeffs().iter().all(|c| c.is_integer()) && cp.coeff(0).abs().is_one())
    }

    pub fn is_exceptional(&self, x: &NFElement) -> Result<bool> {
        Ok(self.is_unit(x)? && self.is_unit(&self.sub(&self.from_int(1), x)?)?)
    }

    /// `{x, 1/x, 1-x, 1/(1-x), (x-1)/x, x/(x-1)}`
    pub fn orbit6(&self, x: &NFElement) -> Result<Vec<NFElement>> {
        self.check(x)?;
        let one = self.from_int(1);
        if x.is_zero() || *x == one {
            return Err(Error::DegenerateOrbit);
        }
        let one_minus = self.sub(&one, x)?;
        let x_minus = self.neg(&one_minus)?;
        Ok(vec![
            x.clone(),
            self.inv(x)?,
            one_minus.clone(),
            self.inv(&one_minus)?,
            self.div(&x_minus, x)?,
            self.div(x, &x_minus)?,
        ])
    }

    /// Union of the orbits of `α`, `α²` and `-1/α`.
    pub fn eighteen_units(&self) -> Result<EighteenUnits> {
        let alpha = self.generator();
        let sq = self.mul(&alpha, &alpha)?;
        let neg_inv = self.neg(&self.inv(&alpha)?)?;
        let mut seen = BTreeSet::new();
        let mut units = Vec::new();
        for seed in [alpha, sq, neg_inv] {
            for u in self.orbit6(&seed)? {
                if seen.insert(u.coords.clone()) {
                    units.push(u);
                }
            }
        }
        let mut all_exceptional = true;
        for u in &units {
            if !self.is_exceptional(u)? {
                all_exceptional = false;
                break;
            }
        }
        Ok(EighteenUnits {
            count_distinct: units.len(),
            all_exceptional,
            units,
        })
    }

    /// Checks `β² - tβ ± 1 = 0` exactly for `β = (α² - 1)/α`.
    pub fn subfield_witness(&self, t: &BigInt) -> Result<SubfieldWitness> {
        let alpha = self.generator();
        let one = self.from_int(1);
        let beta = self.div(&self.sub(&self.mul(&alpha, &alpha)?, &one)?, &alpha)?;
        let tb = self.mul(&self.from_rational(BigRational::from(t.clone())), &beta)?;
        let base = self.sub(&self.mul(&beta, &beta)?, &tb)?;
        let norm_sign: i8 = if self.add(&base, &one)?.is_zero() {
            1
        } else if self.sub(&base, &one)?.is_zero() {
            -1
        } else {
            return Err(Error::IdentityFailed(format!(
                "(a^2-1)/a satisfies neither b^2-{t}b+1 nor b^2-{t}b-1"
            )));
        };
        let mp = self.minpoly(&beta)?;
        let beta_minpoly = mp
            .integral
            .filter(|m| m.degree() == Some(2))
            .ok_or_else(|| Error::IdentityFailed("beta does not have a quadratic integral minimal polynomial".into()))?;
        let d = squarefree_part(&(t * t - BigInt::from(4 * norm_sign as i64)))?;
        Ok(SubfieldWitness {
            beta,
            norm_sign,
            beta_minpoly,
            d,
        })
    }
}

/// Polynomial whose roots are the squares of the roots of monic `p`.
pub fn graeffe_square_minpoly(p: &IntPoly) -> Result<IntPoly> {
    let n = p.degree().ok_or(Error::ZeroPolynomial)?;
    if !p.is_monic() {
        return Err(Error::NotMonic);
    }
    let neg = IntPoly::new(
        p.coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
            .collect(),
    );
    let prod = p * &neg;
    let q = IntPoly::new(prod.coeffs().iter().step_by(2).cloned().collect());
    Ok(if n % 2 == 1 { -&q } else { q })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(s: &str) -> IntPoly {
        s.parse().unwrap()
    }

    fn f_ctx(t: i64) -> NFContext {
        NFContext::new(IntPoly::from_descending(&[1, -t, -1, t, 1])).unwrap()
    }

    #[test]
    fn inverse_of_alpha() {
        let k = f_ctx(4);
        let a = k.generator();
        let ai = k.inv(&a).unwrap();
        assert_eq!(k.mul(&a, &ai).unwrap(), k.from_int(1));
        assert_eq!(ai, k.from_poly(&poly("-(x^3-4x^2-x+4)")));
        let beta = k.mul(&k.sub(&k.mul(&a, &a).unwrap(), &k.from_int(1)).unwrap(), &ai).unwrap();
        assert_eq!(beta, k.from_poly(&poly("x^3-4x^2+4")));
        assert_eq!(k.inv(&k.from_int(0)), Err(Error::DivisionByZero));
    }

    #[test]
    fn arith_dispatch_and_mismatch() {
        let k = f_ctx(4);
        let other = f_ctx(5);
        let a = k.generator();
        assert_eq!(
            k.arith(NFOp::Add, &a, Some(&a)).unwrap(),
            k.from_poly(&poly("2x"))
        );
        assert!(k.arith(NFOp::Mul, &a, None).is_err());
        assert_eq!(k.add(&a, &other.generator()), Err(Error::ContextMismatch));
        assert_eq!(k.element(vec![BigRational::zero(); 3]), Err(Error::ContextMismatch));
    }

    #[test]
    fn charpolys() {
        let k = f_ctx(4);
        let a = k.generator();
        assert_eq!(k.charpoly(&a).unwrap(), k.modulus().to_rat());
        let beta = k.from_poly(&poly("x^3-4x^2+4"));
        assert_eq!(k.charpoly(&beta).unwrap(), poly("(x^2-4x+1)^2").to_rat());
        let sq = k.mul(&a, &a).unwrap();
        assert_eq!(k.charpoly(&sq).unwrap(), poly("x^4-18x^3+35x^2-18x+1").to_rat());
    }

    #[test]
    fn minpolys() {
        let k = f_ctx(4);
        let beta = k.from_poly(&poly("x^3-4x^2+4"));
        assert_eq!(k.minpoly(&beta).unwrap().integral, Some(poly("x^2-4x+1")));
        let one_plus = k.from_poly(&poly("x+1"));
        let shifted = k
            .modulus()
            .transform(&crate::bigpoly::Transform::ShiftBy(BigInt::one()))
            .unwrap();
        assert_eq!(k.minpoly(&one_plus).unwrap().integral, Some(shifted));
        assert_eq!(k.minpoly(&k.from_int(2)).unwrap().integral, Some(poly("x-2")));
        let half = k.from_rational(BigRational::new(1.into(), 2.into()));
        assert_eq!(k.minpoly(&half).unwrap().integral, None);
    }

    #[test]
    fn units() {
        let k = f_ctx(4);
        let a = k.generator();
        assert!(k.is_exceptional(&a).unwrap());
        assert!(k.is_exceptional(&k.mul(&a, &a).unwrap()).unwrap());
        assert!(!k.is_unit(&k.from_int(2)).unwrap());
        assert_eq!(k.norm(&k.from_int(2)).unwrap(), BigRational::from(BigInt::from(16)));
    }

    #[test]
    fn orbit() {
        let k = f_ctx(4);
        let orbit = k.orbit6(&k.generator()).unwrap();
        let set: BTreeSet<_> = orbit.iter().map(|e| e.coords().to_vec()).collect();
        assert_eq!(set.len(), 6);
        for u in &orbit {
            assert!(k.is_exceptional(u).unwrap());
            let again: BTreeSet<_> = k.orbit6(u).unwrap().iter().map(|e| e.coords().to_vec()).collect();
            assert_eq!(again, set);
        }
        assert_eq!(k.orbit6(&k.from_int(1)).unwrap_err(), Error::DegenerateOrbit);
        assert_eq!(k.orbit6(&k.from_int(0)).unwrap_err(), Error::DegenerateOrbit);
    }

    #[test]
    fn eighteen() {
        for k in [f_ctx(4), f_ctx(5), NFContext::new(IntPoly::from_descending(&[1, -7, -3, 7, 1])).unwrap()] {
            let r = k.eighteen_units().unwrap();
            assert_eq!(r.count_distinct, 18);
            assert!(r.all_exceptional);
        }
    }

    #[test]
    fn graeffe() {
        let f4 = IntPoly::from_descending(&[1, -4, -1, 4, 1]);
        assert_eq!(graeffe_square_minpoly(&f4).unwrap(), poly("x^4-18x^3+35x^2-18x+1"));
        let cubic = poly("x^3-2");
        assert_eq!(graeffe_square_minpoly(&cubic).unwrap(), poly("x^3-4"));
    }

    #[test]
    fn subfield_witnesses() {
        for (t, d) in [(4, 3), (3, 5), (6, 2)] {
            let w = f_ctx(t).subfield_witness(&BigInt::from(t)).unwrap();
            assert_eq!(w.d, BigInt::from(d));
            assert_eq!(w.norm_sign, 1);
        }
        let h = NFContext::new(IntPoly::from_descending(&[1, -7, -3, 7, 1])).unwrap();
        let w = h.subfield_witness(&BigInt::from(7)).unwrap();
        assert_eq!(w.norm_sign, -1);
        assert_eq!(w.d, BigInt::from(53));
        assert_eq!(w.beta_minpoly, poly("x^2-7x-1"));
        assert!(f_ctx(4).subfield_witness(&BigInt::from(5)).is_err());
    }

    #[test]
    fn reducible_modulus_rejected() {
        assert_eq!(
            NFContext::new(IntPoly::from_descending(&[1, -2, -1, 2, 1])).unwrap_err(),
            Error::Reducible
        );
        assert_eq!(NFContext::new(poly("2x^2+1")).unwrap_err(), Error::NotMonic);
    }
}
