//! Discriminants as polynomials in the family parameter, the reduced
//! discriminant, and König's two conditions for infinitely many monogenic
//! members.
//!
//! Family coefficients are linear in `t`, so for degree `n` the discriminant
//! has `t`-degree at most `2n - 2`. We interpolate with a slightly larger
//! bound and confirm the result at points outside the sample.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::smallest_prime_factor;
use crate::bigpoly::{discriminant, squarefree_part_poly, IntPoly, RatPoly};
use crate::error::{Error, Result};
use crate::families::{make_family, FamilyId, FamilySpec};
use crate::irreducibility::rational_roots;
use crate::report::decimal;

const FRESH_POINTS: usize = 5;
/// Condition (ii) always samples at least this many consecutive values.
pub const MIN_KONIG_SAMPLES: i64 = 50;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscInT {
    /// Discriminant as a polynomial in `t`.
    pub poly: IntPoly,
    pub family: FamilySpec,
    pub degree_bound_used: usize,
    #[serde(with = "decimal::vec")]
    pub verification_points: Vec<BigInt>,
}

/// Family member with the free (last) parameter replaced by `t`.
fn specialize(template: &FamilySpec, t: &BigInt) -> Result<IntPoly> {
    let mut params = template.params.clone();
    match params.last_mut() {
        Some(last) => *last = t.clone(),
        None => return Err(Error::InvalidInput("family has no parameter".into())),
    }
    make_family(&FamilySpec::new(template.id, params)?)
}

fn rat(n: &BigInt) -> BigRational {
    BigRational::from_integer(n.clone())
}

/// Newton divided differences through `(xs[i], ys[i])`, expanded to a polynomial.
fn newton_interpolate(xs: &[BigInt], ys: &[BigInt]) -> RatPoly {
    let mut coef: Vec<BigRational> = ys.iter().map(rat).collect();
    let n = xs.len();
    for j in 1..n {
        for i in (j..n).rev() {
            let num = &coef[i] - &coef[i - 1];
            let den = rat(&(&xs[i] - &xs[i - j]));
            coef[i] = num / den;
        }
    }
    let mut poly = RatPoly::zero();
    for i in (0..n).rev() {
        let linear = RatPoly::new(vec![-rat(&xs[i]), BigRational::one()]);
        poly = &(&poly * &linear) + &RatPoly::constant(coef[i].clone());
    }
    poly
}

/// Interpolates the discriminant of the family in its last parameter.
///
/// Samples `t = 0, 1, …, 2B + 1` where `B = 2n - 1`, requires the result to
/// have integer coefficients and degree at most `B`, then confirms it at
/// five further points.
pub fn disc_in_t(family: &FamilySpec) -> Result<DiscInT> {
    let degree = specialize(family, &BigInt::zero())?
        .degree()
        .ok_or(Error::ZeroPolynomial)?;
    let bound = 2 * degree - 1;
    let samples = 2 * bound + 2;
    let xs: Vec<BigInt> = (0..samples as i64).map(BigInt::from).collect();
    let ys: Vec<BigInt> = xs
        .par_iter()
        .map(|t| discriminant(&specialize(family, t)?))
        .collect::<Result<_>>()?;
    let interp = newton_interpolate(&xs, &ys);
    let poly = interp
        .to_int_exact()
        .ok_or_else(|| Error::Interpolation("non-integral coefficients".into()))?;
    if poly.degree().is_some_and(|d| d > bound) {
        return Err(Error::Interpolation(format!(
            "degree {} exceeds the bound {bound}",
            poly.degree().unwrap_or(0)
        )));
    }
    let fresh: Vec<BigInt> = (1..=FRESH_POINTS as i64)
        .map(|k| BigInt::from(if k % 2 == 0 { samples as i64 + 7 * k } else { -7 * k }))
        .collect();
    for t in &fresh {
        let direct = discriminant(&specialize(family, t)?)?;
        if poly.eval_int(t) != direct {
            return Err(Error::Interpolation(format!("mismatch at t = {t}")));
        }
    }
    Ok(DiscInT {
        poly,
        family: family.clone(),
        degree_bound_used: bound,
        verification_points: fresh,
    })
}

/// Convenience wrapper for the one-parameter quartic families.
pub fn disc_in_t_for(id: FamilyId) -> Result<DiscInT> {
    let params = match id {
        FamilyId::G => vec![BigInt::from(4), BigInt::zero()],
        FamilyId::MultiParam => {
            return Err(Error::InvalidInput("the multi-parameter family has no single t".into()))
        }
        _ => vec![BigInt::zero()],
    };
    disc_in_t(&FamilySpec::new(id, params)?)
}

/// Product of the distinct irreducible factors of `Δ(t)`, primitive with
/// positive leading coefficient.
pub fn reduced_disc(dt: &DiscInT) -> Result<IntPoly> {
    squarefree_part_poly(&dt.poly)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConditionStatus {
    Pass,
    Fail,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorNote {
    pub factor: IntPoly,
    pub degree: usize,
    /// `Some(true)` when degree ≤ 3 and there is no rational root.
    pub irreducible: Option<bool>,
    #[serde(with = "decimal::option")]
    pub discriminant: Option<BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KonigReport {
    pub reduced_disc: IntPoly,
    /// No irreducible factor of degree ≥ 4.
    pub condition_i: ConditionStatus,
    pub factors: Vec<FactorNote>,
    /// No prime divides every value.
    pub condition_ii: ConditionStatus,
    pub sample_range: i64,
    #[serde(with = "decimal")]
    pub values_gcd: BigInt,
    #[serde(with = "decimal::option")]
    pub common_prime: Option<BigInt>,
    /// Shortest prefix `0..=t` of sample points whose values are coprime.
    pub coprime_by: Option<i64>,
    #[serde(with = "decimal::vec")]
    pub values: Vec<BigInt>,
}

impl KonigReport {
    pub fn passes(&self) -> bool {
        self.condition_i == ConditionStatus::Pass && self.condition_ii == ConditionStatus::Pass
    }
}

fn factor_note(f: &IntPoly) -> Result<FactorNote> {
    let degree = f.degree().ok_or(Error::ZeroPolynomial)?;
    let (irreducible, disc) = match degree {
        0 => (None, None),
        1 => (Some(true), None),
        2 | 3 => {
            let d = discriminant(f)?;
            (Some(rational_roots(f)?.is_empty()), Some(d))
        }
        _ => (None, None),
    };
    Ok(FactorNote {
        factor: f.clone(),
        degree,
        irreducible,
        discriminant: disc,
    })
}

/// Checks both conditions of König's criterion on `dred`.
///
/// Condition (i) uses the supplied factorization: the candidates must
/// multiply to `dred` exactly and each must have degree ≤ 3. Without
/// candidates it passes only when `deg dred ≤ 3`. Condition (ii) takes the
/// gcd of `dred(0), …, dred(R)` with `R = max(sample_range, 50)`; once `R`
/// reaches the degree this gcd is the fixed divisor of `dred`, so a value
/// above 1 yields a prime dividing every value.
pub fn konig_check(dred: &IntPoly, candidates: &[IntPoly], sample_range: i64) -> Result<KonigReport> {
    let deg = dred.degree().ok_or(Error::ZeroPolynomial)?;
    let (condition_i, factors) = if candidates.is_empty() {
        let status = if deg <= 3 {
            ConditionStatus::Pass
        } else {
            ConditionStatus::Inconclusive
        };
        (status, vec![])
    } else {
        let product = candidates.iter().fold(IntPoly::one(), |acc, c| &acc * c);
        if product != *dred {
            return Err(Error::CandidateMismatch);
        }
        let notes = candidates.iter().map(factor_note).collect::<Result<Vec<_>>>()?;
        let status = if notes.iter().all(|n| n.degree <= 3) {
            ConditionStatus::Pass
        } else {
            ConditionStatus::Inconclusive
        };
        (status, notes)
    };

    let range = sample_range.max(MIN_KONIG_SAMPLES).max(deg as i64);
    let values: Vec<BigInt> = (0..=range).map(|t| dred.eval_int(&BigInt::from(t))).collect();
    let mut g = BigInt::zero();
    let mut coprime_by = None;
    for (t, v) in values.iter().enumerate() {
        g = g.gcd(v);
        if g.is_one() && coprime_by.is_none() {
            coprime_by = Some(t as i64);
        }
    }
    let g = g.abs();
    let (condition_ii, common_prime) = if g.is_one() {
        (ConditionStatus::Pass, None)
    } else if g.is_zero() {
        (ConditionStatus::Fail, None)
    } else {
        (ConditionStatus::Fail, smallest_prime_factor(&g))
    };
    Ok(KonigReport {
        reduced_disc: dred.clone(),
        condition_i,
        factors,
        condition_ii,
        sample_range: range,
        values_gcd: g,
        common_prime,
        coprime_by,
        values,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(s: &str) -> IntPoly {
        s.parse().unwrap()
    }

    #[test]
    fn f_discriminant() {
        let dt = disc_in_t_for(FamilyId::F).unwrap();
        assert_eq!(dt.poly, poly("4t^6-23t^4-8t^2+144"));
        assert_eq!(dt.poly, poly("(t^2-4)^2(4t^2+9)"));
        assert_eq!(dt.degree_bound_used, 7);
        assert_eq!(reduced_disc(&dt).unwrap(), poly("4t^4-7t^2-36"));
    }

    #[test]
    fn h_discriminant() {
        let dt = disc_in_t_for(FamilyId::H).unwrap();
        assert_eq!(dt.poly, poly("4t^6+57t^4+264t^2+400"));
        let red = reduced_disc(&dt).unwrap();
        assert_eq!(red, poly("4t^4+41t^2+100"));
        assert_eq!(red.eval_int(&BigInt::from(0)), BigInt::from(100));
        assert_eq!(red.eval_int(&BigInt::from(3)), BigInt::from(793));
    }

    #[test]
    fn g_discriminant_matches_printed() {
        let dt = disc_in_t_for(FamilyId::G).unwrap();
        assert_eq!(dt.poly, poly("4t^6+36t^5+48t^4-252t^3-1320t^2-2340t-1931"));
    }

    #[test]
    fn cubic_families_interpolate() {
        for id in [FamilyId::NagellNonGalois, FamilyId::NagellGalois, FamilyId::NiklaschSmart] {
            let dt = disc_in_t_for(id).unwrap();
            for t in -10..10 {
                let t = BigInt::from(t);
                let spec = FamilySpec::new(id, vec![t.clone()]).unwrap();
                assert_eq!(dt.poly.eval_int(&t), discriminant(&make_family(&spec).unwrap()).unwrap());
            }
        }
        assert!(disc_in_t_for(FamilyId::MultiParam).is_err());
    }

    #[test]
    fn reduced_trivial() {
        let dt = DiscInT {
            poly: poly("(t-1)^2(t+2)"),
            family: FamilySpec::from_i64s(FamilyId::F, &[0]).unwrap(),
            degree_bound_used: 3,
            verification_points: vec![],
        };
        assert_eq!(reduced_disc(&dt).unwrap(), poly("(t-1)(t+2)"));
    }

    #[test]
    fn konig_h() {
        let dred = poly("4t^4+41t^2+100");
        let r = konig_check(&dred, &[poly("4t^2+25"), poly("t^2+4")], 3).unwrap();
        assert!(r.passes());
        assert_eq!(r.values[0], BigInt::from(100));
        assert_eq!(r.values[3], BigInt::from(793));
        assert_eq!(r.coprime_by, Some(2));
        assert!(r.factors.iter().all(|n| n.irreducible == Some(true)));
    }

    #[test]
    fn konig_f() {
        let dred = poly("4t^4-7t^2-36");
        let r = konig_check(&dred, &[poly("t^2-4"), poly("4t^2+9")], 3).unwrap();
        assert_eq!(r.condition_i, ConditionStatus::Pass);
        assert_eq!(r.factors[0].irreducible, Some(false));
        assert_eq!(r.factors[1].irreducible, Some(true));
    }

    #[test]
    fn konig_edge_cases() {
        let r = konig_check(&poly("t^4+1"), &[], 3).unwrap();
        assert_eq!(r.condition_i, ConditionStatus::Inconclusive);
        assert_eq!(
            konig_check(&poly("t^4+1"), &[poly("t^2+1")], 3),
            Err(Error::CandidateMismatch)
        );
        let r = konig_check(&poly("t^2+t+2"), &[], 3).unwrap();
        assert_eq!(r.condition_ii, ConditionStatus::Fail);
        assert_eq!(r.common_prime, Some(BigInt::from(2)));
    }
}
