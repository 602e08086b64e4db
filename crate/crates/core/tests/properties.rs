//! Property tests. Where a library result has an independent definition
//! (Sylvester determinant, brute-force searches), the oracle lives here.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use proptest::strategy::ValueTree;

use exunits::bigpoly::{discriminant, gcd_over_q, resultant, squarefree_part_poly, IntPoly, Transform};
use exunits::families::{make_family, nagell_test, verify, CheckStatus, Claim, FamilyId, FamilySpec};
use exunits::galois4::{classify_quartic, GaloisClass};
use exunits::irreducibility::{
    irreducible_mod_p, quartic_irreducible, IrreducibilityVerdict,
};
use exunits::monodisc::{disc_in_t, reduced_disc};
use exunits::numberfield::NFContext;
use exunits::quadsub::{pell4_solve, squarefree_part};
use exunits::realroots::{quartic_invariants, signature, sturm_real_root_count};

fn b(n: i64) -> BigInt {
    BigInt::from(n)
}

fn int_poly(max_deg: usize, range: i64) -> impl Strategy<Value = IntPoly> {
    proptest::collection::vec(-range..=range, 1..=max_deg + 1).prop_map(|c| IntPoly::from_i64s(&c))
}

/// Determinant by fraction-free Bareiss elimination.
fn det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

fn sylvester_resultant(p: &IntPoly, q: &IntPoly) -> BigInt {
    let (m, n) = (p.degree().unwrap(), q.degree().unwrap());
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![BigInt::zero(); size];
        for (k, c) in p.coeffs().iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![BigInt::zero(); size];
        for (k, c) in q.coeffs().iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    det(rows)
}

fn quartic(a: i64, bb: i64, c: i64) -> IntPoly {
    IntPoly::from_i64s(&[1, c, bb, a, 1])
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 100, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn shift_moves_evaluation(p in int_poly(6, 20), c in -20i64..=20, x in -20i64..=20) {
        let shifted = p.transform(&Transform::ShiftBy(b(c))).unwrap();
        prop_assert_eq!(shifted.eval_int(&b(x)), p.eval_int(&b(x - c)));
    }

    #[test]
    fn reverse_is_an_involution(p in int_poly(6, 20)) {
        prop_assume!(!p.constant_term().is_zero());
        let twice = p.transform(&Transform::Reverse).unwrap().transform(&Transform::Reverse).unwrap();
        prop_assert_eq!(twice, p);
    }

    #[test]
    fn resultant_antisymmetry(p in int_poly(5, 10), q in int_poly(5, 10)) {
        prop_assume!(!p.is_zero() && !q.is_zero());
        let (m, n) = (p.degree().unwrap(), q.degree().unwrap());
        let sign = if (m * n) % 2 == 1 { -BigInt::one() } else { BigInt::one() };
        prop_assert_eq!(resultant(&p, &q).unwrap(), sign * resultant(&q, &p).unwrap());
    }

    #[test]
    fn resultant_matches_sylvester(p in int_poly(6, 15), q in int_poly(6, 15)) {
        prop_assume!(p.degree().is_some_and(|d| d > 0) && q.degree().is_some_and(|d| d > 0));
        prop_assert_eq!(resultant(&p, &q).unwrap(), sylvester_resultant(&p, &q));
    }

    #[test]
    fn discriminant_vanishes_iff_repeated_root(p in int_poly(5, 6)) {
        prop_assume!(p.degree().is_some_and(|d| d >= 2));
        let g = gcd_over_q(&p.to_rat(), &p.derivative().to_rat()).unwrap();
        prop_assert_eq!(discriminant(&p).unwrap().is_zero(), g.degree() != Some(0));
    }

    #[test]
    fn repeated_factor_has_zero_discriminant(p in int_poly(3, 6)) {
        prop_assume!(p.degree().is_some_and(|d| d >= 1));
        prop_assert!(discriminant(&(&p * &p)).unwrap().is_zero());
    }

    #[test]
    fn sturm_counts_linear_factors(
        roots in proptest::collection::btree_set(-30i64..=30, 0..=4),
        quads in proptest::collection::vec((-5i64..=5, 1i64..=10), 0..=2),
    ) {
        let mut p = IntPoly::one();
        for r in &roots {
            p = &p * &IntPoly::from_i64s(&[-r, 1]);
        }
        // x^2 + u x + v with u^2 < 4v has no real roots
        for (u, extra) in &quads {
            let v = u * u / 4 + extra;
            p = &p * &IntPoly::from_i64s(&[v, *u, 1]);
        }
        prop_assume!(p.degree().is_some_and(|d| d >= 1));
        prop_assert_eq!(sturm_real_root_count(&p).unwrap(), roots.len());
    }

    #[test]
    fn signature_adds_up(p in int_poly(7, 30)) {
        prop_assume!(p.degree().is_some_and(|d| d >= 1));
        let sq = squarefree_part_poly(&p).unwrap();
        let s = signature(&p).unwrap();
        prop_assert_eq!(s.r1 + 2 * s.r2, sq.degree().unwrap());
        if !s.multiple_roots {
            prop_assert_eq!(s.degree(), p.degree().unwrap());
        }
    }

    #[test]
    fn mod_p_irreducible_implies_irreducible(c in proptest::collection::vec(-20i64..=20, 4), q in prop::sample::select(vec![2u64, 3, 5, 7, 11, 13])) {
        let p = IntPoly::from_i64s(&[c[0], c[1], c[2], c[3], 1]);
        if irreducible_mod_p(&p, q).unwrap() {
            prop_assert!(quartic_irreducible(&p).unwrap().is_irreducible());
        }
    }

    #[test]
    fn reducible_witness_multiplies_back(c in proptest::collection::vec(-12i64..=12, 4)) {
        let p = IntPoly::from_i64s(&[c[0], c[1], c[2], c[3], 1]);
        if let IrreducibilityVerdict::Reducible(fs) = quartic_irreducible(&p).unwrap() {
            let prod = fs.iter().fold(IntPoly::one(), |acc, f| &acc * f);
            prop_assert_eq!(prod, p);
        }
    }

    #[test]
    fn norm_of_shift_is_value(t in 4i64..=40, num in -30i64..=30, den in 1i64..=7, which in 0usize..4) {
        let spec = match which {
            0 => FamilySpec::from_i64s(FamilyId::F, &[t]),
            1 => FamilySpec::from_i64s(FamilyId::H, &[t + 3]),
            2 => FamilySpec::from_i64s(FamilyId::G, &[4, t]),
            _ => FamilySpec::from_i64s(FamilyId::NagellGalois, &[t]),
        }.unwrap();
        let p = make_family(&spec).unwrap();
        let ctx = NFContext::new(p.clone()).unwrap();
        let c = BigRational::new(b(num), b(den));
        let diff = ctx.sub(&ctx.from_rational(c.clone()), &ctx.generator()).unwrap();
        prop_assert_eq!(ctx.norm(&diff).unwrap(), p.eval(&c));
    }

    #[test]
    fn unit_products_are_units(t in 4i64..=30, i in 0usize..18, j in 0usize..18) {
        let ctx = NFContext::new(make_family(&FamilySpec::from_i64s(FamilyId::F, &[t]).unwrap()).unwrap()).unwrap();
        let units = ctx.eighteen_units().unwrap().units;
        let x = &units[i % units.len()];
        let y = &units[j % units.len()];
        prop_assert!(ctx.is_unit(&ctx.mul(x, y).unwrap()).unwrap());
    }

    #[test]
    fn orbit_of_exceptional_is_exceptional(t in 4i64..=30, k in 1u32..=3) {
        let ctx = NFContext::new(make_family(&FamilySpec::from_i64s(FamilyId::H, &[t + 3]).unwrap()).unwrap()).unwrap();
        let x = ctx.from_poly(&IntPoly::x().pow(k));
        if ctx.is_exceptional(&x).unwrap() {
            for y in ctx.orbit6(&x).unwrap() {
                prop_assert!(ctx.is_exceptional(&y).unwrap());
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 1000, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn closed_form_quartic_discriminant(a in -100i64..=100, bb in -100i64..=100, c in -100i64..=100) {
        let inv = quartic_invariants(&b(a), &b(bb), &b(c));
        prop_assert_eq!(inv.delta, discriminant(&quartic(a, bb, c)).unwrap());
    }
}

#[test]
fn galois_classes_over_family_ranges() {
    for t in 4..=100 {
        let f = make_family(&FamilySpec::from_i64s(FamilyId::F, &[t]).unwrap()).unwrap();
        let g = classify_quartic(&f).unwrap();
        assert_eq!(g.class, GaloisClass::D4, "f t = {t}");
        // with r = -2 the two products reduce to (t^2 - 4)Δ and 0
        assert_eq!(g.resolvent_root, Some(b(-2)));
        let (p1, p2) = g.branch_products.unwrap();
        assert_eq!(p1, b(t * t - 4) * &g.discriminant);
        assert!(p2.is_zero());

        let g4 = make_family(&FamilySpec::from_i64s(FamilyId::G, &[4, t]).unwrap()).unwrap();
        assert_eq!(classify_quartic(&g4).unwrap().class, GaloisClass::S4, "g t = {t}");
        if t >= 7 {
            let h = make_family(&FamilySpec::from_i64s(FamilyId::H, &[t]).unwrap()).unwrap();
            assert_eq!(classify_quartic(&h).unwrap().class, GaloisClass::D4, "h t = {t}");
        }
    }
}

#[test]
fn subfield_relation_holds() {
    for t in 3..=200 {
        let ctx = NFContext::new(make_family(&FamilySpec::from_i64s(FamilyId::F, &[t]).unwrap()).unwrap()).unwrap();
        let w = ctx.subfield_witness(&b(t)).unwrap();
        let beta = &w.beta;
        // β² - tβ + 1
        let lhs = ctx
            .add(
                &ctx.sub(&ctx.mul(beta, beta).unwrap(), &ctx.mul(&ctx.from_int(t), beta).unwrap()).unwrap(),
                &ctx.from_int(1),
            )
            .unwrap();
        assert!(lhs.is_zero(), "t = {t}");
        assert_eq!(w.norm_sign, 1);
    }
}

#[test]
fn nagell_across_families() {
    let mut specs = vec![];
    specs.extend((4..=200).map(|t| FamilySpec::from_i64s(FamilyId::F, &[t]).unwrap()));
    specs.extend((7..=200).map(|t| FamilySpec::from_i64s(FamilyId::H, &[t]).unwrap()));
    for n in 4..=8 {
        specs.extend((4..=50).map(|t| FamilySpec::from_i64s(FamilyId::G, &[n, t]).unwrap()));
    }
    specs.extend((3..=50).map(|k| FamilySpec::from_i64s(FamilyId::NagellNonGalois, &[k]).unwrap()));
    specs.extend((-1..=50).map(|k| FamilySpec::from_i64s(FamilyId::NagellGalois, &[k]).unwrap()));
    for spec in specs {
        assert!(nagell_test(&make_family(&spec).unwrap()), "{}", spec.label());
    }
}

/// Every ordering of the parameters of `F` stays exceptional.
#[test]
fn multi_parameter_permutations() {
    let mut runner = proptest::test_runner::TestRunner::deterministic();
    let strategy = proptest::collection::vec(1i64..=20, 2..=4);
    for _ in 0..40 {
        let params = strategy.new_tree(&mut runner).unwrap().current();
        let r = verify(&FamilySpec::from_i64s(FamilyId::MultiParam, &params).unwrap());
        assert_eq!(r.status(Claim::NagellTest), Some(CheckStatus::Pass), "{params:?}");
        assert_eq!(r.status(Claim::NagellAllPermutations), Some(CheckStatus::Pass), "{params:?}");
        assert_ne!(r.status(Claim::Irreducible), Some(CheckStatus::Fail), "{params:?}");
    }
}

#[test]
fn verify_is_reproducible() {
    for spec in [
        FamilySpec::from_i64s(FamilyId::F, &[9]).unwrap(),
        FamilySpec::from_i64s(FamilyId::H, &[11]).unwrap(),
        FamilySpec::from_i64s(FamilyId::G, &[4, 13]).unwrap(),
    ] {
        let r = verify(&spec);
        assert_eq!(r, verify(&spec));
        let p = make_family(&spec).unwrap();
        assert_eq!(r.polynomial, p);
        let g = classify_quartic(&p).unwrap();
        assert_eq!(r.witnesses.galois, Some(g.class));
        assert_eq!(r.witnesses.discriminant, Some(discriminant(&p).unwrap()));
        assert_eq!(r.witnesses.signature, Some(signature(&p).unwrap()));
    }
}

#[test]
fn pell_solutions_are_minimal() {
    for d in 2..=99i64 {
        let bd = b(d);
        if squarefree_part(&bd).unwrap() != bd {
            continue;
        }
        let sol = pell4_solve(&bd).unwrap();
        assert_eq!(&sol.t * &sol.t - &bd * &sol.s * &sol.s, b(4));
        assert_eq!(squarefree_part(&(&sol.t * &sol.t - 4)).unwrap(), bd);
        // no smaller t >= 3 with (t^2 - 4)/d a perfect square
        if sol.t < b(200_000) {
            let top: i64 = sol.t.to_string().parse().unwrap();
            for t in 3..top {
                let v = t as i128 * t as i128 - 4;
                if v % d as i128 == 0 {
                    let q = v / d as i128;
                    let r = (q as f64).sqrt() as i128;
                    assert!((r - 1..=r + 1).all(|s| s * s != q), "d = {d}: t = {t} is smaller");
                }
            }
        }
    }
}

#[test]
fn disc_in_t_matches_direct_evaluation() {
    let mut runner = proptest::test_runner::TestRunner::deterministic();
    let templates = [
        FamilySpec::from_i64s(FamilyId::F, &[0]).unwrap(),
        FamilySpec::from_i64s(FamilyId::H, &[0]).unwrap(),
        FamilySpec::from_i64s(FamilyId::G, &[4, 0]).unwrap(),
        FamilySpec::from_i64s(FamilyId::G, &[5, 0]).unwrap(),
        FamilySpec::from_i64s(FamilyId::MultiParam, &[2, 0]).unwrap(),
        FamilySpec::from_i64s(FamilyId::NagellNonGalois, &[0]).unwrap(),
        FamilySpec::from_i64s(FamilyId::NagellGalois, &[0]).unwrap(),
        FamilySpec::from_i64s(FamilyId::NiklaschSmart, &[0]).unwrap(),
    ];
    for template in templates {
        let dt = disc_in_t(&template).unwrap();
        for _ in 0..20 {
            let t = (-50i64..=50).new_tree(&mut runner).unwrap().current();
            let mut params = template.params.clone();
            *params.last_mut().unwrap() = b(t);
            let p = make_family(&FamilySpec::new(template.id, params).unwrap()).unwrap();
            assert_eq!(dt.poly.eval_int(&b(t)), discriminant(&p).unwrap(), "{} at t = {t}", template.label());
        }
        let red = reduced_disc(&dt).unwrap();
        assert!(dt.poly.div_exact(&red).is_some(), "{}", template.label());
        let g = gcd_over_q(&red.to_rat(), &red.derivative().to_rat()).unwrap();
        assert_eq!(g.degree(), Some(0));
        assert!(red.leading().unwrap().is_positive());
    }
}
