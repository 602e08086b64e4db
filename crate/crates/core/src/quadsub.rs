//! Real quadratic subfields: squarefree parts, the equation `t² - d s² = 4`,
//! the `T = t² - 2` tower and the `(t²-4)(4t²+9)` square scan.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{exact_sqrt, factorize, is_square_u128};
use crate::error::{Error, Result};
use crate::families::{FamilyId, FamilySpec};

/// Trial-division limit for [`squarefree_part`].
pub const SQUAREFREE_TRIAL_LIMIT: u64 = 10_000_000;
/// Default candidate budget for the brute-force Pell search.
pub const DEFAULT_PELL_STEPS: u64 = 10_000_000;
const CF_MAX_STEPS: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SolveMethod {
    ContinuedFraction,
    BruteForce,
}

/// A solution of `t² - d s² = 4` with `t >= 3`, `s >= 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pell4Solution {
    pub d: BigInt,
    pub t: BigInt,
    pub s: BigInt,
    pub method: SolveMethod,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    pub spec: FamilySpec,
    pub solution: Pell4Solution,
    /// `false` when `t` is below the `t >= 4` range where `f(x;t)` is dihedral.
    pub in_range: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TowerStep {
    pub t: BigInt,
    pub next: BigInt,
    pub d: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AppendixHit {
    pub t: BigInt,
    pub value: BigInt,
    pub root: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AppendixScan {
    pub bound: u64,
    /// Hits with `3 <= t <= bound`.
    pub hits: Vec<AppendixHit>,
    /// Hits with `|t| < 3`, reported separately.
    pub small_hits: Vec<AppendixHit>,
}

/// `d` with `n = d m²`, `d` squarefree, sign of `n` kept.
pub fn squarefree_part(n: &BigInt) -> Result<BigInt> {
    if n.is_zero() {
        return Err(Error::InvalidInput("squarefree part of zero".into()));
    }
    let mut d: BigInt = factorize(n, SQUAREFREE_TRIAL_LIMIT)?
        .into_iter()
        .filter(|(_, e)| e % 2 == 1)
        .map(|(p, _)| p)
        .product();
    if n.is_negative() {
        d = -d;
    }
    Ok(d)
}

fn check_pell_input(d: &BigInt) -> Result<()> {
    if *d <= BigInt::one() {
        return Err(Error::InvalidInput(format!("d = {d} must exceed 1")));
    }
    if squarefree_part(d)? != *d {
        return Err(Error::InvalidInput(format!("d = {d} is not squarefree")));
    }
    Ok(())
}

/// Smallest `(u, v)`, `v >= 1`, with `u² - d v² = ±target` from the
/// continued fraction of `(p0 + √d)/q0`, where `u = q0 A - p0 B`.
fn continued_fraction_search(d: &BigInt, p0: i64, q0: i64, target: &BigInt) -> Option<(BigInt, BigInt)> {
    let root = d.sqrt();
    let (mut p, mut q) = (BigInt::from(p0), BigInt::from(q0));
    let (mut a2, mut a1) = (BigInt::zero(), BigInt::one());
    let (mut b2, mut b1) = (BigInt::one(), BigInt::zero());
    for _ in 0..CF_MAX_STEPS {
        let num = &p + &root;
        let a = if q.is_positive() {
            num.div_floor(&q)
        } else {
            (num + 1u32).div_floor(&q)
        };
        let an = &a * &a1 + &a2;
        let bn = &a * &b1 + &b2;
        a2 = std::mem::replace(&mut a1, an);
        b2 = std::mem::replace(&mut b1, bn);
        let u = BigInt::from(q0) * &a1 - BigInt::from(p0) * &b1;
        let v = &b1;
        if v.is_positive() && (&u * &u - d * v * v).abs() == *target {
            return Some((u.abs(), v.clone()));
        }
        p = &a * &q - &p;
        q = (d - &p * &p) / &q;
    }
    None
}

fn pell4_continued_fraction(d: &BigInt) -> Option<Pell4Solution> {
    let four = BigInt::from(4);
    let (u, v) = if d.mod_floor(&four) == BigInt::one() {
        continued_fraction_search(d, 1, 2, &four)?
    } else {
        let (x, y) = continued_fraction_search(d, 0, 1, &BigInt::one())?;
        (x * 2, y * 2)
    };
    let norm = &u * &u - d * &v * &v;
    let (t, s) = if norm == four {
        (u, v)
    } else {
        // square the norm -1 unit (u + v√d)/2
        ((&u * &u + d * &v * &v) / 2, &u * &v)
    };
    let sol = Pell4Solution {
        d: d.clone(),
        t,
        s,
        method: SolveMethod::ContinuedFraction,
    };
    verify_pell4(&sol).then_some(sol)
}

fn verify_pell4(sol: &Pell4Solution) -> bool {
    sol.s.is_positive() && &sol.t * &sol.t - &sol.d * &sol.s * &sol.s == BigInt::from(4)
}

/// Exhaustive search over `s = 1, 2, …` for `d s² + 4` a perfect square.
pub fn pell4_brute_force(d: &BigInt, max_steps: u64) -> Result<Pell4Solution> {
    check_pell_input(d)?;
    let dd = d
        .to_u64()
        .ok_or_else(|| Error::InvalidInput("brute force needs d < 2^64".into()))? as u128;
    for s in 1..=max_steps.min(u32::MAX as u64) as u128 {
        if let Some(t) = is_square_u128(dd * s * s + 4) {
            return Ok(Pell4Solution {
                d: d.clone(),
                t: BigInt::from(t),
                s: BigInt::from(s),
                method: SolveMethod::BruteForce,
            });
        }
    }
    Err(Error::IterationBound(max_steps))
}

pub fn pell4_solve(d: &BigInt) -> Result<Pell4Solution> {
    pell4_solve_with_bound(d, DEFAULT_PELL_STEPS)
}

/// Continued-fraction fast path, falling back to [`pell4_brute_force`].
pub fn pell4_solve_with_bound(d: &BigInt, max_steps: u64) -> Result<Pell4Solution> {
    check_pell_input(d)?;
    match pell4_continued_fraction(d) {
        Some(sol) => Ok(sol),
        None => pell4_brute_force(d, max_steps),
    }
}

/// The member `f(x;t)` of the first quartic family containing `Q(√d)`.
pub fn embed_quadratic(d: &BigInt) -> Result<Embedding> {
    let solution = pell4_solve(d)?;
    let roundtrip = squarefree_part(&(&solution.t * &solution.t - 4))?;
    if roundtrip != *d {
        return Err(Error::IdentityFailed(format!(
            "squarefree part of t^2-4 is {roundtrip}, expected {d}"
        )));
    }
    Ok(Embedding {
        spec: FamilySpec::new(FamilyId::F, vec![solution.t.clone()])?,
        in_range: solution.t >= BigInt::from(4),
        solution,
    })
}

/// `T = t² - 2`, checking that `T² - 4` and `t² - 4` have the same squarefree part.
pub fn tower_step(t: &BigInt) -> Result<TowerStep> {
    if *t < BigInt::from(3) {
        return Err(Error::InvalidInput(format!("tower needs t >= 3, got {t}")));
    }
    let next = t * t - 2;
    let d = squarefree_part(&(t * t - 4))?;
    let d_next = squarefree_part(&(&next * &next - 4))?;
    if d != d_next {
        return Err(Error::IdentityFailed(format!(
            "squarefree parts differ: {d} vs {d_next}"
        )));
    }
    Ok(TowerStep {
        t: t.clone(),
        next,
        d,
    })
}

fn appendix_value(t: &BigInt) -> BigInt {
    let t2 = t * t;
    (&t2 - 4) * (BigInt::from(4) * &t2 + 9)
}

fn appendix_hit(t: i64) -> Option<AppendixHit> {
    // (t^2-4)(4t^2+9) < 2^128 for |t| < 2^30
    if t.unsigned_abs() < (1 << 30) && t.unsigned_abs() >= 2 {
        let t2 = (t as i128 * t as i128) as u128;
        let v = (t2 - 4) * (4 * t2 + 9);
        return is_square_u128(v).map(|r| AppendixHit {
            t: BigInt::from(t),
            value: BigInt::from(v),
            root: BigInt::from(r),
        });
    }
    let bt = BigInt::from(t);
    let v = appendix_value(&bt);
    exact_sqrt(&v).map(|root| AppendixHit {
        t: bt,
        value: v,
        root,
    })
}

/// Every `t` in `[3, bound]` with `(t²-4)(4t²+9)` a perfect square.
pub fn appendix_scan(bound: u64) -> Result<AppendixScan> {
    if bound < 3 {
        return Err(Error::InvalidInput(format!("scan bound {bound} is below 3")));
    }
    let top = i64::try_from(bound).map_err(|_| Error::InvalidInput("scan bound too large".into()))?;
    let hits: Vec<AppendixHit> = (3..=top).into_par_iter().filter_map(appendix_hit).collect();
    let small_hits = (-2..=2).filter_map(appendix_hit).collect();
    Ok(AppendixScan {
        bound,
        hits,
        small_hits,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn squarefree_examples() {
        assert_eq!(squarefree_part(&b(12)).unwrap(), b(3));
        assert_eq!(squarefree_part(&b(32)).unwrap(), b(2));
        assert_eq!(squarefree_part(&b(45)).unwrap(), b(5));
        assert_eq!(squarefree_part(&b(-18)).unwrap(), b(-2));
        assert_eq!(squarefree_part(&b(1)).unwrap(), b(1));
        assert!(squarefree_part(&b(0)).is_err());
    }

    #[test]
    fn pell_examples() {
        for (d, t, s) in [(5, 3, 1), (2, 6, 4), (3, 4, 2), (7, 16, 6), (61, 1523, 195)] {
            let sol = pell4_solve(&b(d)).unwrap();
            assert_eq!((sol.t.clone(), sol.s.clone()), (b(t), b(s)), "d = {d}");
            assert_eq!(sol.method, SolveMethod::ContinuedFraction);
            assert_eq!(pell4_brute_force(&b(d), 1000).unwrap().t, b(t));
        }
    }

    #[test]
    fn pell_rejects_bad_input() {
        assert!(pell4_solve(&b(1)).is_err());
        assert!(pell4_solve(&b(12)).is_err());
        assert!(pell4_solve(&b(-5)).is_err());
        assert_eq!(pell4_brute_force(&b(94), 10), Err(Error::IterationBound(10)));
    }

    #[test]
    fn embeddings() {
        let e = embed_quadratic(&b(7)).unwrap();
        assert_eq!(e.spec.params, vec![b(16)]);
        assert_eq!(e.solution.s, b(6));
        let e = embed_quadratic(&b(5)).unwrap();
        assert_eq!(e.spec.params, vec![b(3)]);
        assert!(!e.in_range);
        let e = embed_quadratic(&b(3)).unwrap();
        assert_eq!(e.spec.params, vec![b(4)]);
        assert!(e.in_range);
    }

    #[test]
    fn tower_examples() {
        for (t, next, d) in [(3, 7, 5), (4, 14, 3), (6, 34, 2)] {
            let s = tower_step(&b(t)).unwrap();
            assert_eq!((s.next, s.d), (b(next), b(d)));
        }
        assert!(tower_step(&b(2)).is_err());
    }

    #[test]
    fn appendix_small() {
        let scan = appendix_scan(1000).unwrap();
        assert_eq!(scan.hits.len(), 1);
        assert_eq!(scan.hits[0].t, b(3));
        assert_eq!(scan.hits[0].value, b(225));
        assert_eq!(scan.hits[0].root, b(15));
        assert_eq!(appendix_value(&b(4)), b(876));
        assert!(appendix_hit(4).is_none());
        let small: Vec<_> = scan.small_hits.iter().map(|h| h.t.clone()).collect();
        assert_eq!(small, vec![b(-2), b(2)]);
        assert!(appendix_scan(2).is_err());
    }
}
