//! The polynomial families and the per-instance claim checklist.
//!
//! | id                 | polynomial                                        | range        |
//! |--------------------|---------------------------------------------------|--------------|
//! | `f`                | `x^4 - t x^3 - x^2 + t x + 1`                     | `t >= 4`     |
//! | `h`                | `x^4 - t x^3 - 3x^2 + t x + 1`                    | `t >= 7`     |
//! | `g`                | `x^n - (t+3) x^(n-1) + t x + 1`                   | `n, t >= 4`  |
//! | `F`                | `x^n - (Σt_i + 3) x^(n-1) + t_1 x^(n-2) + … + 1`  | `t_i >= 1`   |
//! | `nagell_nonGalois` | `x^3 + (k-1) x^2 - k x - 1`                       | `k >= 3`     |
//! | `nagell_Galois`    | `x^3 + k x^2 - (k+3) x + 1`                       | `k >= -1`    |
//! | `niklasch_smart`   | `x^4 + a x^3 + x^2 + a x - 1`                     | `a >= 1`     |
//!
//! Constructors accept any parameters. [`verify`] records whether the
//! instance lies in the documented range and evaluates every claim anyway,
//! so degenerate instances such as `f` at `t = 2` show up as failures with
//! witnesses instead of being rejected.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bigpoly::IntPoly;
use crate::error::{Error, Result};
use crate::galois4::{classify_quartic, frobenius_profile, GaloisClass, DEFAULT_PRIME_BOUND};
use crate::irreducibility::{
    certify, irreducible_mod_p, perron_check, IrreducibilityVerdict, PerronCase,
};
use crate::numberfield::{graeffe_square_minpoly, NFContext};
use crate::quadsub::squarefree_part;
use crate::realroots::{all_real_sufficient, quartic_invariants_of, signature, unit_rank, Signature};
use crate::report::decimal;

const MAX_FAMILY_DEGREE: usize = 64;
const MAX_PERMUTED_PARAMS: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilyId {
    /// `f(x;t)`
    F,
    /// `h(x;t)`
    H,
    /// `g_n(x;t)`
    G,
    /// `F(x; t_1, …, t_{n-2})`
    MultiParam,
    NagellNonGalois,
    NagellGalois,
    NiklaschSmart,
}

impl FamilyId {
    pub const ALL: [FamilyId; 7] = [
        FamilyId::F,
        FamilyId::H,
        FamilyId::G,
        FamilyId::MultiParam,
        FamilyId::NagellNonGalois,
        FamilyId::NagellGalois,
        FamilyId::NiklaschSmart,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FamilyId::F => "f",
            FamilyId::H => "h",
            FamilyId::G => "g",
            FamilyId::MultiParam => "F",
            FamilyId::NagellNonGalois => "nagell_nonGalois",
            FamilyId::NagellGalois => "nagell_Galois",
            FamilyId::NiklaschSmart => "niklasch_smart",
        }
    }

    /// Expression, in the generator `x`, of the exceptional unit the family is built around.
    ///
    /// For the Niklasch–Smart quartics the root itself is not exceptional
    /// (`p(1) = 2a + 1`); `-α²` is, since `1 + α²` divides `α(α + a)(α² + 1) = 1`.
    pub fn exceptional_unit(self) -> IntPoly {
        match self {
            FamilyId::NiklaschSmart => IntPoly::from_i64s(&[0, 0, -1]),
            _ => IntPoly::x(),
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FamilyId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        FamilyId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

impl Serialize for FamilyId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for FamilyId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub id: FamilyId,
    #[serde(with = "decimal::vec")]
    pub params: Vec<BigInt>,
}

impl FamilySpec {
    pub fn new(id: FamilyId, params: Vec<BigInt>) -> Result<Self> {
        let ok = match id {
            FamilyId::G => params.len() == 2,
            FamilyId::MultiParam => !params.is_empty(),
            _ => params.len() == 1,
        };
        if !ok {
            let expected = match id {
                FamilyId::G => "2 (n, t)",
                FamilyId::MultiParam => "at least 1",
                _ => "1",
            };
            return Err(Error::Arity {
                family: id.to_string(),
                expected: expected.into(),
                got: params.len(),
            });
        }
        Ok(FamilySpec { id, params })
    }

    pub fn from_i64s(id: FamilyId, params: &[i64]) -> Result<Self> {
        Self::new(id, params.iter().map(|&p| BigInt::from(p)).collect())
    }

    /// Whether the parameters fall in the range where the family's claims are made.
    pub fn in_range(&self) -> bool {
        let p = |i: usize| &self.params[i];
        let ge = |i: usize, v: i64| *p(i) >= BigInt::from(v);
        match self.id {
            FamilyId::F => ge(0, 4),
            FamilyId::H => ge(0, 7),
            FamilyId::G => ge(0, 4) && ge(1, 4),
            FamilyId::MultiParam => self.params.iter().all(Signed::is_positive),
            FamilyId::NagellNonGalois => ge(0, 3),
            FamilyId::NagellGalois => ge(0, -1),
            FamilyId::NiklaschSmart => ge(0, 1),
        }
    }

    pub fn label(&self) -> String {
        let ps: Vec<String> = self.params.iter().map(|p| p.to_string()).collect();
        format!("{}({})", self.id, ps.join(","))
    }
}

/// Degree `n` of `g_n`, bounded to keep the dense representation sane.
fn family_degree(n: &BigInt) -> Result<usize> {
    n.to_usize()
        .filter(|&n| (2..=MAX_FAMILY_DEGREE).contains(&n))
        .ok_or_else(|| Error::InvalidInput(format!("degree n = {n} must lie in [2, {MAX_FAMILY_DEGREE}]")))
}

pub fn make_family(spec: &FamilySpec) -> Result<IntPoly> {
    let spec = FamilySpec::new(spec.id, spec.params.clone())?;
    let p = &spec.params;
    let i = |v: i64| BigInt::from(v);
    Ok(match spec.id {
        FamilyId::F => IntPoly::new(vec![i(1), p[0].clone(), i(-1), -&p[0], i(1)]),
        FamilyId::H => IntPoly::new(vec![i(1), p[0].clone(), i(-3), -&p[0], i(1)]),
        FamilyId::G => {
            let n = family_degree(&p[0])?;
            let t = &p[1];
            let mut c = vec![BigInt::zero(); n + 1];
            c[n] += 1;
            c[n - 1] -= t + 3;
            c[1] += t;
            c[0] += 1;
            IntPoly::new(c)
        }
        FamilyId::MultiParam => {
            let n = p.len() + 2;
            if n > MAX_FAMILY_DEGREE {
                return Err(Error::InvalidInput(format!("degree {n} exceeds {MAX_FAMILY_DEGREE}")));
            }
            let sum: BigInt = p.iter().sum();
            let mut c = vec![BigInt::zero(); n + 1];
            c[n] = i(1);
            c[n - 1] = -(sum + BigInt::from(3));
            for (k, tk) in p.iter().enumerate() {
                c[n - 2 - k] += tk;
            }
            c[0] += 1;
            IntPoly::new(c)
        }
        FamilyId::NagellNonGalois => {
            IntPoly::new(vec![i(-1), -&p[0], &p[0] - 1, i(1)])
        }
        FamilyId::NagellGalois => IntPoly::new(vec![i(1), -(&p[0] + BigInt::from(3)), p[0].clone(), i(1)]),
        FamilyId::NiklaschSmart => IntPoly::new(vec![i(-1), p[0].clone(), i(1), p[0].clone(), i(1)]),
    })
}

/// `3 · 7^(n + 2r + 2)`
pub fn evertse_bound(n: i64, r: i64) -> Result<BigInt> {
    if n < 1 || r < 0 {
        return Err(Error::InvalidInput(format!(
            "degree must be >= 1 and rank >= 0, got n = {n}, r = {r}"
        )));
    }
    let e = u32::try_from(n + 2 * r + 2).map_err(|_| Error::InvalidInput("exponent too large".into()))?;
    Ok(BigInt::from(3) * num_traits::pow(BigInt::from(7), e as usize))
}

/// Nagell's sufficient condition `|p(0)| = |p(1)| = 1`.
pub fn nagell_test(p: &IntPoly) -> bool {
    p.constant_term().abs().is_one() && p.eval_int(&BigInt::one()).abs().is_one()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Claim {
    PerronCriterion,
    Irreducible,
    NagellTest,
    NagellAllPermutations,
    AllRealSufficient,
    RealRootCount,
    UnitRank,
    AlphaExceptional,
    AlphaSquaredExceptional,
    GaloisGroup,
    FrobeniusConsistent,
    Mod2Irreducible,
    QuadraticSubfield,
    NoQuadraticSubfield,
    EighteenUnits,
    GraeffeAgreement,
}

impl Claim {
    pub const ALL: [Claim; 16] = [
        Claim::PerronCriterion,
        Claim::Irreducible,
        Claim::NagellTest,
        Claim::NagellAllPermutations,
        Claim::AllRealSufficient,
        Claim::RealRootCount,
        Claim::UnitRank,
        Claim::AlphaExceptional,
        Claim::AlphaSquaredExceptional,
        Claim::GaloisGroup,
        Claim::FrobeniusConsistent,
        Claim::Mod2Irreducible,
        Claim::QuadraticSubfield,
        Claim::NoQuadraticSubfield,
        Claim::EighteenUnits,
        Claim::GraeffeAgreement,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Claim::PerronCriterion => "perron_criterion",
            Claim::Irreducible => "irreducible",
            Claim::NagellTest => "nagell_test",
            Claim::NagellAllPermutations => "nagell_all_permutations",
            Claim::AllRealSufficient => "all_real_sufficient",
            Claim::RealRootCount => "real_root_count",
            Claim::UnitRank => "unit_rank",
            Claim::AlphaExceptional => "alpha_exceptional",
            Claim::AlphaSquaredExceptional => "alpha_squared_exceptional",
            Claim::GaloisGroup => "galois_group",
            Claim::FrobeniusConsistent => "frobenius_consistent",
            Claim::Mod2Irreducible => "mod2_irreducible",
            Claim::QuadraticSubfield => "quadratic_subfield",
            Claim::NoQuadraticSubfield => "no_quadratic_subfield",
            Claim::EighteenUnits => "eighteen_units",
            Claim::GraeffeAgreement => "graeffe_agreement",
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Claim {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Claim::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown check `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    NotApplicable,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::NotApplicable => "not_applicable",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub claim: Claim,
    pub status: CheckStatus,
    pub detail: String,
}

/// Data backing the checks.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witnesses {
    #[serde(with = "decimal")]
    pub value_at_zero: BigInt,
    #[serde(with = "decimal")]
    pub value_at_one: BigInt,
    #[serde(with = "decimal")]
    pub value_at_minus_one: BigInt,
    pub irreducibility: Option<String>,
    pub factors: Vec<IntPoly>,
    pub perron: Option<PerronCase>,
    /// Minimal polynomial of the unit the Nagell test was applied to.
    pub exceptional_minpoly: Option<IntPoly>,
    pub signature: Option<Signature>,
    pub unit_rank: Option<usize>,
    #[serde(with = "decimal::option")]
    pub discriminant: Option<BigInt>,
    pub galois: Option<GaloisClass>,
    pub resolvent: Option<IntPoly>,
    #[serde(with = "decimal::option")]
    pub resolvent_root: Option<BigInt>,
    #[serde(with = "decimal::option")]
    pub subfield_d: Option<BigInt>,
    pub beta_minpoly: Option<IntPoly>,
    pub alpha_squared_minpoly: Option<IntPoly>,
    pub eighteen_count: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub spec: FamilySpec,
    pub polynomial: IntPoly,
    pub in_range: bool,
    pub checks: Vec<Check>,
    pub witnesses: Witnesses,
}

impl VerificationReport {
    pub fn status(&self, claim: Claim) -> Option<CheckStatus> {
        self.checks.iter().find(|c| c.claim == claim).map(|c| c.status)
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Fail)
    }

    /// Keeps only the listed claims, in report order.
    pub fn filtered(mut self, keep: &[Claim]) -> Self {
        self.checks.retain(|c| keep.contains(&c.claim));
        self
    }
}

/// Claims evaluated for each family, in report order.
pub fn claims_for(spec: &FamilySpec) -> Vec<Claim> {
    use Claim::*;
    match spec.id {
        FamilyId::F | FamilyId::H => vec![
            Irreducible,
            NagellTest,
            AllRealSufficient,
            RealRootCount,
            UnitRank,
            AlphaExceptional,
            AlphaSquaredExceptional,
            GaloisGroup,
            FrobeniusConsistent,
            QuadraticSubfield,
            EighteenUnits,
            GraeffeAgreement,
        ],
        FamilyId::G if spec.params[0] == BigInt::from(4) => vec![
            PerronCriterion,
            Irreducible,
            NagellTest,
            AllRealSufficient,
            RealRootCount,
            UnitRank,
            AlphaExceptional,
            GaloisGroup,
            FrobeniusConsistent,
            Mod2Irreducible,
            NoQuadraticSubfield,
        ],
        FamilyId::G => vec![PerronCriterion, Irreducible, NagellTest, AlphaExceptional],
        FamilyId::MultiParam => vec![PerronCriterion, Irreducible, NagellTest, NagellAllPermutations],
        FamilyId::NagellNonGalois | FamilyId::NagellGalois => {
            vec![Irreducible, NagellTest, RealRootCount, UnitRank, AlphaExceptional]
        }
        FamilyId::NiklaschSmart => vec![Irreducible, NagellTest, RealRootCount, UnitRank],
    }
}

struct Checklist {
    checks: Vec<Check>,
}

impl Checklist {
    fn record(&mut self, claim: Claim, status: CheckStatus, detail: impl Into<String>) {
        self.checks.push(Check {
            claim,
            status,
            detail: detail.into(),
        });
    }

    fn expect(&mut self, claim: Claim, ok: bool, detail: impl Into<String>) {
        let status = if ok { CheckStatus::Pass } else { CheckStatus::Fail };
        self.record(claim, status, detail);
    }

    fn error(&mut self, claim: Claim, e: &Error) {
        self.record(claim, CheckStatus::Fail, format!("error: {e}"));
    }
}

fn expected_real_roots(id: FamilyId) -> usize {
    match id {
        FamilyId::NagellNonGalois | FamilyId::NagellGalois => 3,
        FamilyId::NiklaschSmart => 2,
        _ => 4,
    }
}

fn expected_rank(id: FamilyId) -> usize {
    match id {
        FamilyId::NagellNonGalois | FamilyId::NagellGalois | FamilyId::NiklaschSmart => 2,
        _ => 3,
    }
}

fn permutations(items: &[BigInt]) -> Vec<Vec<BigInt>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head.clone());
            out.push(tail);
        }
    }
    out
}

/// Runs the family's claim checklist on one instance. Never fails: problems
/// become `fail` entries with the error text as detail.
pub fn verify(spec: &FamilySpec) -> VerificationReport {
    let polynomial = match make_family(spec) {
        Ok(p) => p,
        Err(e) => {
            let mut list = Checklist { checks: vec![] };
            for claim in claims_for(spec) {
                list.error(claim, &e);
            }
            return VerificationReport {
                spec: spec.clone(),
                polynomial: IntPoly::zero(),
                in_range: false,
                checks: list.checks,
                witnesses: Witnesses::default(),
            };
        }
    };
    let one = BigInt::one();
    let mut w = Witnesses {
        value_at_zero: polynomial.constant_term(),
        value_at_one: polynomial.eval_int(&one),
        value_at_minus_one: polynomial.eval_int(&-one),
        ..Witnesses::default()
    };
    let mut list = Checklist { checks: vec![] };
    let claims = claims_for(spec);
    let t = spec.params.last().cloned().unwrap_or_default();

    let verdict = certify(&polynomial);
    let ctx = match &verdict {
        Ok(IrreducibilityVerdict::Irreducible(_)) => NFContext::new(polynomial.clone()).ok(),
        _ => None,
    };
    let classification = if polynomial.degree() == Some(4) && ctx.is_some() {
        Some(classify_quartic(&polynomial))
    } else {
        None
    };

    for claim in claims {
        match claim {
            Claim::PerronCriterion => match perron_check(&polynomial) {
                Ok(case) => {
                    w.perron = Some(case);
                    let expected_case_i = spec.id == FamilyId::G;
                    let status = match case {
                        PerronCase::CaseI => CheckStatus::Pass,
                        PerronCase::CaseII if !expected_case_i => CheckStatus::Pass,
                        PerronCase::NotApplicable if spec.id == FamilyId::MultiParam => {
                            CheckStatus::NotApplicable
                        }
                        _ => CheckStatus::Fail,
                    };
                    list.record(claim, status, format!("{case:?}"));
                }
                Err(e) => list.error(claim, &e),
            },
            Claim::Irreducible => match &verdict {
                Ok(IrreducibilityVerdict::Irreducible(cert)) => {
                    w.irreducibility = Some(cert.to_string());
                    list.record(claim, CheckStatus::Pass, cert.to_string());
                }
                Ok(IrreducibilityVerdict::Reducible(fs)) => {
                    w.irreducibility = Some("reducible".into());
                    w.factors = fs.clone();
                    let shown: Vec<String> = fs.iter().map(|f| format!("({f})")).collect();
                    list.record(claim, CheckStatus::Fail, format!("factors {}", shown.join("")));
                }
                Ok(IrreducibilityVerdict::Inconclusive) => {
                    w.irreducibility = Some("inconclusive".into());
                    let status = if spec.id == FamilyId::MultiParam {
                        CheckStatus::NotApplicable
                    } else {
                        CheckStatus::Fail
                    };
                    list.record(claim, status, "no certificate found");
                }
                Err(e) => list.error(claim, e),
            },
            Claim::NagellTest => {
                let expr = spec.id.exceptional_unit();
                let unit_poly = if expr == IntPoly::x() {
                    Some(polynomial.clone())
                } else {
                    ctx.as_ref()
                        .and_then(|k| k.minpoly(&k.from_poly(&expr)).ok())
                        .and_then(|m| m.integral)
                };
                match unit_poly {
                    Some(mp) => {
                        let ok = nagell_test(&mp);
                        let detail = format!(
                            "unit {} with minimal polynomial {mp}: |p(0)| = {}, |p(1)| = {}",
                            expr.display_var("a"),
                            mp.constant_term().abs(),
                            mp.eval_int(&BigInt::one()).abs()
                        );
                        w.exceptional_minpoly = Some(mp);
                        list.expect(claim, ok, detail);
                    }
                    None => list.record(claim, CheckStatus::Fail, "no number field (reducible)"),
                }
            }
            Claim::NagellAllPermutations => {
                if spec.params.len() > MAX_PERMUTED_PARAMS {
                    list.record(claim, CheckStatus::NotApplicable, "too many parameters to permute");
                    continue;
                }
                let mut bad = None;
                for perm in permutations(&spec.params) {
                    let p = make_family(&FamilySpec {
                        id: spec.id,
                        params: perm.clone(),
                    });
                    if !p.as_ref().is_ok_and(nagell_test) {
                        bad = Some(perm);
                        break;
                    }
                }
                match bad {
                    None => list.record(claim, CheckStatus::Pass, "every ordering passes"),
                    Some(perm) => list.record(claim, CheckStatus::Fail, format!("ordering {perm:?} fails")),
                }
            }
            Claim::AllRealSufficient => match quartic_invariants_of(&polynomial) {
                Ok(inv) => {
                    w.discriminant = Some(inv.delta.clone());
                    let detail = format!("delta = {}, P = {}, D = {}", inv.delta, inv.pval, inv.dval);
                    list.expect(claim, all_real_sufficient(&inv), detail);
                }
                Err(e) => list.error(claim, &e),
            },
            Claim::RealRootCount => match signature(&polynomial) {
                Ok(sig) => {
                    w.signature = Some(sig);
                    let want = expected_real_roots(spec.id);
                    let ok = sig.r1 == want && !sig.multiple_roots;
                    list.expect(claim, ok, format!("{} distinct real roots, expected {want}", sig.r1));
                }
                Err(e) => list.error(claim, &e),
            },
            Claim::UnitRank => {
                let sig = w.signature.map(Ok).unwrap_or_else(|| signature(&polynomial));
                match sig.and_then(|s| {
                    if s.multiple_roots {
                        Err(Error::InvalidInput("repeated roots".into()))
                    } else {
                        unit_rank(&s)
                    }
                }) {
                    Ok(r) => {
                        w.unit_rank = Some(r);
                        let want = expected_rank(spec.id);
                        list.expect(claim, r == want && ctx.is_some(), format!("rank {r}, expected {want}"));
                    }
                    Err(e) => list.error(claim, &e),
                }
            }
            Claim::AlphaExceptional => match &ctx {
                Some(k) => match k.is_exceptional(&k.generator()) {
                    Ok(ok) => list.expect(claim, ok, "a and 1-a are units"),
                    Err(e) => list.error(claim, &e),
                },
                None => list.record(claim, CheckStatus::Fail, "no number field (reducible)"),
            },
            Claim::AlphaSquaredExceptional => match &ctx {
                Some(k) => {
                    let a = k.generator();
                    match k.mul(&a, &a).and_then(|sq| k.is_exceptional(&sq)) {
                        Ok(ok) => {
                            let detail = format!(
                                "N(1+a) = {}",
                                polynomial.eval_int(&-BigInt::one()) * if polynomial.degree().unwrap_or(0) % 2 == 0 { 1 } else { -1 }
                            );
                            list.expect(claim, ok, detail);
                        }
                        Err(e) => list.error(claim, &e),
                    }
                }
                None => list.record(claim, CheckStatus::Fail, "no number field (reducible)"),
            },
            Claim::GaloisGroup => {
                let want = if spec.id == FamilyId::G { GaloisClass::S4 } else { GaloisClass::D4 };
                match &classification {
                    Some(Ok(g)) => {
                        w.galois = Some(g.class);
                        w.discriminant = Some(g.discriminant.clone());
                        w.resolvent = Some(g.resolvent.clone());
                        w.resolvent_root = g.resolvent_root.clone();
                        list.expect(claim, g.class == want, format!("{}, expected {want}", g.class));
                    }
                    Some(Err(e)) => list.error(claim, e),
                    None => list.record(claim, CheckStatus::Fail, "not an irreducible quartic"),
                }
            }
            Claim::FrobeniusConsistent => match &classification {
                Some(Ok(g)) => match frobenius_profile(&polynomial, DEFAULT_PRIME_BOUND) {
                    Ok(profile) => {
                        let seen: Vec<String> = profile.observed.keys().map(|t| t.to_string()).collect();
                        list.expect(
                            claim,
                            profile.consistent_with(g.class),
                            format!("observed {{{}}} over {} primes", seen.join(","), profile.primes_used.len()),
                        );
                    }
                    Err(e) => list.error(claim, &e),
                },
                Some(Err(e)) => list.error(claim, e),
                None => list.record(claim, CheckStatus::Fail, "not an irreducible quartic"),
            },
            Claim::Mod2Irreducible => match irreducible_mod_p(&polynomial, 2) {
                Ok(ok) => list.expect(claim, ok, "reduction mod 2"),
                Err(e) => list.error(claim, &e),
            },
            Claim::QuadraticSubfield => match &ctx {
                Some(k) => match k.subfield_witness(&t) {
                    Ok(wit) => {
                        let shift = if spec.id == FamilyId::H { 4 } else { -4 };
                        let want = squarefree_part(&(&t * &t + shift));
                        w.subfield_d = Some(wit.d.clone());
                        w.beta_minpoly = Some(wit.beta_minpoly.clone());
                        let ok = want.as_ref() == Ok(&wit.d) && wit.norm_sign == if shift < 0 { 1 } else { -1 };
                        list.expect(claim, ok, format!("beta = {}, minpoly {}, d = {}", wit.beta, wit.beta_minpoly, wit.d));
                    }
                    Err(e) => list.error(claim, &e),
                },
                None => list.record(claim, CheckStatus::Fail, "no number field (reducible)"),
            },
            Claim::NoQuadraticSubfield => match &classification {
                Some(Ok(g)) => list.expect(
                    claim,
                    g.class == GaloisClass::S4,
                    format!("group {}; the stabilizer S3 is maximal in S4", g.class),
                ),
                Some(Err(e)) => list.error(claim, e),
                None => list.record(claim, CheckStatus::Fail, "not an irreducible quartic"),
            },
            Claim::EighteenUnits => match ctx.as_ref().map(|k| k.eighteen_units()) {
                Some(Ok(r)) => {
                    w.eighteen_count = Some(r.count_distinct);
                    list.expect(
                        claim,
                        r.count_distinct == 18 && r.all_exceptional,
                        format!("{} distinct, all exceptional: {}", r.count_distinct, r.all_exceptional),
                    );
                }
                Some(Err(e)) => list.error(claim, &e),
                None => list.record(claim, CheckStatus::Fail, "no number field (reducible)"),
            },
            Claim::GraeffeAgreement => match &ctx {
                Some(k) => {
                    let a = k.generator();
                    let via_charpoly = k.mul(&a, &a).and_then(|sq| k.minpoly(&sq));
                    match (graeffe_square_minpoly(&polynomial), via_charpoly) {
                        (Ok(gr), Ok(mp)) => {
                            let ok = mp.integral.as_ref() == Some(&gr);
                            w.alpha_squared_minpoly = Some(gr.clone());
                            list.expect(claim, ok, format!("graeffe {gr}"));
                        }
                        (Err(e), _) | (_, Err(e)) => list.error(claim, &e),
                    }
                }
                None => list.record(claim, CheckStatus::Fail, "no number field (reducible)"),
            },
        }
    }

    VerificationReport {
        spec: spec.clone(),
        polynomial,
        in_range: spec.in_range(),
        checks: list.checks,
        witnesses: w,
    }
}

/// Verifies `id` for each value of its last parameter in `range`, with the
/// leading parameters fixed. Runs in parallel; output is in parameter order.
pub fn verify_sweep(id: FamilyId, fixed: &[BigInt], range: std::ops::RangeInclusive<i64>) -> Result<Vec<VerificationReport>> {
    let specs: Vec<FamilySpec> = range
        .map(|v| {
            let mut params = fixed.to_vec();
            params.push(BigInt::from(v));
            FamilySpec::new(id, params)
        })
        .collect::<Result<_>>()?;
    Ok(specs.par_iter().map(verify).collect())
}

/// `N(c - α) = f(c)` for monic `f`, as a rational.
pub fn norm_of_shift(ctx: &NFContext, c: &BigRational) -> Result<BigRational> {
    let diff = ctx.sub(&ctx.from_rational(c.clone()), &ctx.generator())?;
    ctx.norm(&diff)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(id: FamilyId, params: &[i64]) -> FamilySpec {
        FamilySpec::from_i64s(id, params).unwrap()
    }

    fn poly(s: &str) -> IntPoly {
        s.parse().unwrap()
    }

    #[test]
    fn constructors() {
        assert_eq!(make_family(&spec(FamilyId::F, &[4])).unwrap(), poly("x^4-4x^3-x^2+4x+1"));
        assert_eq!(make_family(&spec(FamilyId::H, &[7])).unwrap(), poly("x^4-7x^3-3x^2+7x+1"));
        assert_eq!(make_family(&spec(FamilyId::G, &[5, 4])).unwrap(), poly("x^5-7x^4+4x+1"));
        assert_eq!(make_family(&spec(FamilyId::MultiParam, &[2, 3])).unwrap(), poly("x^4-8x^3+2x^2+3x+1"));
        assert_eq!(make_family(&spec(FamilyId::NagellNonGalois, &[3])).unwrap(), poly("x^3+2x^2-3x-1"));
        assert_eq!(make_family(&spec(FamilyId::NagellGalois, &[-1])).unwrap(), poly("x^3-x^2-2x+1"));
        assert_eq!(make_family(&spec(FamilyId::NiklaschSmart, &[1])).unwrap(), poly("x^4+x^3+x^2+x-1"));
    }

    #[test]
    fn arity_and_ids() {
        assert!(matches!(FamilySpec::from_i64s(FamilyId::G, &[4]), Err(Error::Arity { .. })));
        assert!(matches!(FamilySpec::from_i64s(FamilyId::F, &[4, 5]), Err(Error::Arity { .. })));
        assert!(FamilySpec::from_i64s(FamilyId::MultiParam, &[]).is_err());
        for id in FamilyId::ALL {
            assert_eq!(id.as_str().parse::<FamilyId>().unwrap(), id);
        }
        assert!("q".parse::<FamilyId>().is_err());
        assert!(make_family(&FamilySpec { id: FamilyId::G, params: vec![BigInt::from(1), BigInt::from(4)] }).is_err());
    }

    #[test]
    fn evertse() {
        assert_eq!(evertse_bound(2, 1).unwrap(), BigInt::from(352947));
        assert_eq!(evertse_bound(4, 3).unwrap(), BigInt::from(41523861603i64));
        assert_eq!(evertse_bound(1, 0).unwrap(), BigInt::from(1029));
        assert!(evertse_bound(0, 1).is_err());
        assert!(evertse_bound(2, -1).is_err());
    }

    #[test]
    fn verify_f4() {
        let r = verify(&spec(FamilyId::F, &[4]));
        assert!(r.all_pass(), "{:#?}", r.failures().collect::<Vec<_>>());
        assert_eq!(r.checks.len(), claims_for(&r.spec).len());
        assert_eq!(r.witnesses.galois, Some(GaloisClass::D4));
        assert_eq!(r.witnesses.subfield_d, Some(BigInt::from(3)));
        assert_eq!(r.witnesses.unit_rank, Some(3));
        assert_eq!(r.witnesses.value_at_one, BigInt::one());
    }

    #[test]
    fn verify_f2_reducible() {
        let r = verify(&spec(FamilyId::F, &[2]));
        assert!(!r.in_range);
        assert_eq!(r.status(Claim::Irreducible), Some(CheckStatus::Fail));
        assert_eq!(r.witnesses.factors, vec![poly("x^2-x-1"), poly("x^2-x-1")]);
    }

    #[test]
    fn verify_f3_is_cyclic() {
        let r = verify(&spec(FamilyId::F, &[3]));
        assert_eq!(r.witnesses.galois, Some(GaloisClass::C4));
        assert_eq!(r.status(Claim::GaloisGroup), Some(CheckStatus::Fail));
        assert_eq!(r.status(Claim::QuadraticSubfield), Some(CheckStatus::Pass));
    }

    #[test]
    fn verify_g4() {
        let r = verify(&spec(FamilyId::G, &[4, 4]));
        assert!(r.all_pass(), "{:#?}", r.failures().collect::<Vec<_>>());
        assert_eq!(r.witnesses.perron, Some(PerronCase::CaseI));
        assert_eq!(r.witnesses.galois, Some(GaloisClass::S4));
    }

    #[test]
    fn verify_other_families() {
        for s in [
            spec(FamilyId::H, &[7]),
            spec(FamilyId::G, &[6, 5]),
            spec(FamilyId::MultiParam, &[2, 3, 1]),
            spec(FamilyId::NagellNonGalois, &[3]),
            spec(FamilyId::NagellGalois, &[-1]),
            spec(FamilyId::NiklaschSmart, &[3]),
        ] {
            let r = verify(&s);
            assert!(r.all_pass(), "{}: {:#?}", s.label(), r.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn niklasch_smart_root_is_not_itself_exceptional() {
        for a in 1..=10 {
            let p = make_family(&spec(FamilyId::NiklaschSmart, &[a])).unwrap();
            assert!(!nagell_test(&p));
            assert_eq!(p.eval_int(&BigInt::one()), BigInt::from(2 * a + 1));
        }
    }

    #[test]
    fn permutations_enumerated() {
        let ps = permutations(&[1, 2, 3].map(BigInt::from));
        assert_eq!(ps.len(), 6);
    }

    #[test]
    fn sweep_is_ordered() {
        let rs = verify_sweep(FamilyId::F, &[], 4..=8).unwrap();
        let ts: Vec<_> = rs.iter().map(|r| r.spec.params[0].clone()).collect();
        assert_eq!(ts, (4..=8).map(BigInt::from).collect::<Vec<_>>());
        assert!(rs.iter().all(VerificationReport::all_pass));
    }

    #[test]
    fn report_roundtrip() {
        let r = verify(&spec(FamilyId::F, &[7]));
        let json = serde_json::to_string(&r).unwrap();
        let back: VerificationReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
    }
}
