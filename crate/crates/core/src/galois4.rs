//! Galois groups of irreducible quartics from the resolvent cubic, plus a
//! Frobenius cycle-type sampler that serves as an independent check.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::arith::is_square;
use crate::bigpoly::{discriminant, IntPoly};
use crate::error::{Error, Result};
use crate::fp::{primes_up_to, FpPoly};
use crate::irreducibility::{quartic_irreducible, rational_roots, IrreducibilityVerdict};

pub const DEFAULT_PRIME_BOUND: u64 = 500;
pub const MIN_USABLE_PRIMES: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum GaloisClass {
    S4,
    A4,
    D4,
    C4,
    V,
}

impl GaloisClass {
    pub const ALL: [GaloisClass; 5] = [
        GaloisClass::S4,
        GaloisClass::A4,
        GaloisClass::D4,
        GaloisClass::C4,
        GaloisClass::V,
    ];

    /// Cycle types of the transitive subgroup of `S4`.
    pub fn cycle_types(self) -> &'static [CycleType] {
        use CycleType::*;
        match self {
            GaloisClass::S4 => &[Identity, Transposition, DoubleTransposition, ThreeCycle, FourCycle],
            GaloisClass::A4 => &[Identity, DoubleTransposition, ThreeCycle],
            GaloisClass::D4 => &[Identity, Transposition, DoubleTransposition, FourCycle],
            GaloisClass::C4 => &[Identity, DoubleTransposition, FourCycle],
            GaloisClass::V => &[Identity, DoubleTransposition],
        }
    }

    pub fn admits(self, t: CycleType) -> bool {
        self.cycle_types().contains(&t)
    }
}

impl fmt::Display for GaloisClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GaloisClass::S4 => "S4",
            GaloisClass::A4 => "A4",
            GaloisClass::D4 => "D4",
            GaloisClass::C4 => "C4",
            GaloisClass::V => "V",
        })
    }
}

impl FromStr for GaloisClass {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        GaloisClass::ALL
            .into_iter()
            .find(|g| g.to_string() == s)
            .ok_or_else(|| Error::Parse(format!("unknown Galois class `{s}`")))
    }
}

/// Degree partition of a quartic mod an unramified prime, written as in `112` or `13`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum CycleType {
    #[serde(rename = "1111")]
    Identity,
    #[serde(rename = "112")]
    Transposition,
    #[serde(rename = "22")]
    DoubleTransposition,
    #[serde(rename = "13")]
    ThreeCycle,
    #[serde(rename = "4")]
    FourCycle,
}

impl CycleType {
    fn from_degrees(degs: &[usize]) -> Option<Self> {
        let mut d = degs.to_vec();
        d.sort_unstable();
        Some(match d.as_slice() {
            [1, 1, 1, 1] => CycleType::Identity,
            [1, 1, 2] => CycleType::Transposition,
            [2, 2] => CycleType::DoubleTransposition,
            [1, 3] => CycleType::ThreeCycle,
            [4] => CycleType::FourCycle,
            _ => return None,
        })
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CycleType::Identity => "1111",
            CycleType::Transposition => "112",
            CycleType::DoubleTransposition => "22",
            CycleType::ThreeCycle => "13",
            CycleType::FourCycle => "4",
        })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CycleTypeProfile {
    pub observed: BTreeMap<CycleType, usize>,
    pub primes_used: Vec<u64>,
    pub primes_skipped: Vec<u64>,
}

impl CycleTypeProfile {
    pub fn contains(&self, t: CycleType) -> bool {
        self.observed.contains_key(&t)
    }

    pub fn consistent_with(&self, g: GaloisClass) -> bool {
        self.observed.keys().all(|&t| g.admits(t))
    }
}

/// Full output of the resolvent-cubic classification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuarticGalois {
    pub class: GaloisClass,
    pub discriminant: BigInt,
    pub discriminant_is_square: bool,
    pub resolvent: IntPoly,
    /// Unique rational root of the resolvent in the `D4`/`C4` branch.
    pub resolvent_root: Option<BigInt>,
    /// `(a^2 - 4(b - r)) Δ` and `(r^2 - 4d) Δ` in the `D4`/`C4` branch.
    pub branch_products: Option<(BigInt, BigInt)>,
}

/// `x^3 - b x^2 + (ac - 4d) x - (a^2 d + c^2 - 4bd)` for `x^4 + a x^3 + b x^2 + c x + d`.
pub fn resolvent_cubic(a: &BigInt, b: &BigInt, c: &BigInt, d: &BigInt) -> IntPoly {
    let four = BigInt::from(4);
    IntPoly::new(vec![
        -(a * a * d + c * c - &four * b * d),
        a * c - &four * d,
        -b.clone(),
        BigInt::from(1),
    ])
}

fn quartic_coeffs(p: &IntPoly) -> Result<[BigInt; 4]> {
    let n = p.degree().ok_or(Error::ZeroPolynomial)?;
    if n != 4 {
        return Err(Error::WrongDegree {
            expected: 4,
            found: n,
        });
    }
    if !p.is_monic() {
        return Err(Error::NotMonic);
    }
    Ok([p.coeff(3), p.coeff(2), p.coeff(1), p.coeff(0)])
}

pub fn classify_quartic(p: &IntPoly) -> Result<QuarticGalois> {
    let [a, b, c, d] = quartic_coeffs(p)?;
    match quartic_irreducible(p)? {
        IrreducibilityVerdict::Irreducible(_) => {}
        _ => return Err(Error::Reducible),
    }
    let disc = discriminant(p)?;
    let disc_sq = is_square(&disc);
    let resolvent = resolvent_cubic(&a, &b, &c, &d);
    let roots = rational_roots(&resolvent)?;

    let mut out = QuarticGalois {
        class: GaloisClass::S4,
        discriminant: disc.clone(),
        discriminant_is_square: disc_sq,
        resolvent,
        resolvent_root: None,
        branch_products: None,
    };
    match (roots.len(), disc_sq) {
        (0, false) => out.class = GaloisClass::S4,
        (0, true) => out.class = GaloisClass::A4,
        (1, true) => {
            return Err(Error::Contradiction(
                "resolvent has exactly one rational root but the discriminant is a square".into(),
            ))
        }
        (1, false) => {
            // monic integer cubic: rational roots are integers
            let r = roots[0].to_integer();
            let four = BigInt::from(4);
            let first = (&a * &a - &four * (&b - &r)) * &disc;
            let second = (&r * &r - &four * &d) * &disc;
            out.class = if is_square(&first) && is_square(&second) {
                GaloisClass::C4
            } else {
                GaloisClass::D4
            };
            out.resolvent_root = Some(r);
            out.branch_products = Some((first, second));
        }
        (_, true) => out.class = GaloisClass::V,
        (_, false) => {
            return Err(Error::Contradiction(
                "resolvent splits completely but the discriminant is not a square".into(),
            ))
        }
    }
    Ok(out)
}

/// Factorization pattern of `p` modulo every prime up to `prime_bound` that does not divide `disc(p)`.
pub fn frobenius_profile(p: &IntPoly, prime_bound: u64) -> Result<CycleTypeProfile> {
    if prime_bound < 20 {
        return Err(Error::PrimeBoundTooSmall(prime_bound));
    }
    quartic_coeffs(p)?;
    let disc = discriminant(p)?;
    if disc.is_zero() {
        return Err(Error::InvalidInput("quartic is not squarefree".into()));
    }
    let mut profile = CycleTypeProfile::default();
    for prime in primes_up_to(prime_bound) {
        if (&disc % BigInt::from(prime)).is_zero() {
            profile.primes_skipped.push(prime);
            continue;
        }
        let fp = FpPoly::from_int(p, prime);
        debug_assert!(fp.is_squarefree());
        let t = CycleType::from_degrees(&fp.factor_degrees())
            .ok_or_else(|| Error::Contradiction(format!("bad factor degrees mod {prime}")))?;
        *profile.observed.entry(t).or_default() += 1;
        profile.primes_used.push(prime);
    }
    Ok(profile)
}

/// Smallest transitive subgroup whose cycle types cover the observation.
///
/// Heuristic: absence of a cycle type in a finite sample proves nothing, so a
/// `Some` answer is "the smallest group consistent with the data".
pub fn classify_by_frobenius(profile: &CycleTypeProfile) -> Result<Option<GaloisClass>> {
    if profile.primes_used.len() < MIN_USABLE_PRIMES {
        return Err(Error::TooFewPrimes(profile.primes_used.len()));
    }
    let candidates: Vec<GaloisClass> = GaloisClass::ALL
        .into_iter()
        .filter(|&g| profile.consistent_with(g))
        .collect();
    let subset = |g: GaloisClass, h: GaloisClass| g.cycle_types().iter().all(|&t| h.admits(t));
    let minimal: Vec<GaloisClass> = candidates
        .iter()
        .copied()
        .filter(|&g| !candidates.iter().any(|&h| h != g && subset(h, g)))
        .collect();
    Ok(match minimal.as_slice() {
        [g] => Some(*g),
        _ => None,
    })
}
