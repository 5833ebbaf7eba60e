use genocchi_core::poly::*;
use genocchi_core::{Poly, Series, VarId};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn p(s: &str) -> Poly {
    s.parse().unwrap()
}

#[test]
fn canonical_rendering_sorts_by_degree() {
    assert_eq!(p("t^2 + 6*t + 1").to_string(), "1 + 6*t + t^2");
    assert_eq!(p("a*b*t*y + a*abar*b*bbar").to_string(), "a*abar*b*bbar + a*b*y*t");
    assert_eq!(p("q + p").to_string(), "p + q");
    assert_eq!(p("-3*x0 + 2 - z^2").to_string(), "2 - 3*x0 - z^2");
    assert_eq!(Poly::zero().to_string(), "0");
}

#[test]
fn unknown_variable_is_rejected() {
    assert!("a + w".parse::<Poly>().is_err());
    assert!("foo_3".parse::<VarId>().is_err());
    assert_eq!("alpha_3".parse::<VarId>().unwrap(), VarId::AlphaI(3));
}

#[test]
fn json_round_trip() {
    let x = p("a*abar*b*bbar + a*b*t*y - 7*p^3*q");
    let s = serde_json::to_string(&x).unwrap();
    assert!(s.contains("\"coeff\":\"-7\""));
    let back: Poly = serde_json::from_str(&s).unwrap();
    assert_eq!(back, x);
    assert!(serde_json::from_str::<Poly>(r#"[{"monomial":{"w":1},"coeff":"1"}]"#).is_err());
}

#[test]
fn bracket_examples() {
    let a = Poly::var(VarId::A);
    let bbar = Poly::var(VarId::BBar);
    assert_eq!(pq_bracket(&a, 1, &bbar).unwrap(), p("a*bbar"));
    assert_eq!(pq_bracket(&a, 2, &bbar).unwrap(), p("a*p + bbar*q"));
    assert_eq!(pq_int::<BigInt>(3).unwrap(), p("p^2 + p*q + q^2"));
    assert!(pq_bracket(&a, 0, &bbar).is_err());
    assert_eq!(qp_bracket1(&a, 2).unwrap(), p("a*q + p"));
}

#[test]
fn bracket_at_one_is_n() {
    for n in 1..=20u32 {
        let v = pq_int::<BigInt>(n)
            .unwrap()
            .eval(&[(VarId::P, 1.into()), (VarId::Q, 1.into())])
            .unwrap();
        assert_eq!(v, BigInt::from(n));
    }
}

#[test]
fn binomial_examples() {
    assert_eq!(pq_binomial::<BigInt>(2, 2).unwrap(), Poly::one());
    assert_eq!(pq_binomial::<BigInt>(3, 2).unwrap(), p("p^2 + p*q + q^2"));
    let v = pq_binomial::<BigInt>(4, 2)
        .unwrap()
        .eval(&[(VarId::P, 1.into()), (VarId::Q, 1.into())])
        .unwrap();
    assert_eq!(v, BigInt::from(6));
    assert!(pq_binomial::<BigInt>(2, 3).is_err());
}

#[test]
fn exact_division() {
    let f = p("p^2 + 2*p*q + q^2");
    assert_eq!(f.div_exact(&p("p + q")).unwrap(), p("p + q"));
    assert!(p("p^2 + q").div_exact(&p("p + q")).is_err());
    assert!(p("3*a").div_exact(&p("2")).is_err());
}

#[test]
fn series_inversion_examples() {
    let n = 6;
    let s = Series::from_coeffs(vec![Poly::one(), Poly::int(-1)], n);
    let inv = s.invert().unwrap();
    assert_eq!(inv.constants().unwrap(), vec![BigInt::from(1); n + 1]);
    assert_eq!(Series::one(n).invert().unwrap(), Series::one(n));
    let alpha = Poly::var(VarId::AlphaI(1));
    let s = Series::from_coeffs(vec![Poly::one(), -&alpha], n);
    let inv = s.invert().unwrap();
    for k in 0..=n {
        assert_eq!(inv.coeff(k), &alpha.pow(k as u32));
    }
    let bad = Series::from_coeffs(vec![Poly::int(2)], 3);
    assert!(bad.invert().is_err());
}

#[test]
fn gamma_examples() {
    let x2 = p("1 + 2*t*y + t^2*y^2 + 4*t");
    let g = gamma_extract(&x2, 2).unwrap();
    assert_eq!(g.gammas, vec![Poly::one(), Poly::int(4)]);
    assert_eq!(g.reconstruct(), x2);
    let g0 = gamma_extract(&Poly::one(), 0).unwrap();
    assert_eq!(g0.gammas, vec![Poly::one()]);
    assert!(gamma_extract(&p("1 + t^2"), 2).is_err());
    let no_y = gamma_extract_with(&p("1 + 6*t + t^2"), 2, VarId::T, None).unwrap();
    assert_eq!(no_y.gammas[1], Poly::int(4));
}

#[test]
fn generic_over_coefficients() {
    let a: MultiPoly<i64> = "2*a + 1".parse().unwrap();
    assert_eq!((&a * &a).to_string(), "1 + 4*a + 4*a^2");
    let r: MultiPoly<BigRational> = "1/2*a".parse().unwrap();
    assert_eq!((&r + &r).to_string(), "a");
    let i: MultiPoly<i128> = pq_binomial(5, 2).unwrap();
    assert_eq!(i.len(), 7);
}

const VARS: [VarId; 4] = [VarId::A, VarId::P, VarId::Q, VarId::T];

fn arb_poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((-5i64..=5, prop::collection::vec(0u32..3, 4)), 0..6).prop_map(|ts| {
        Poly::from_terms(ts.into_iter().map(|(c, e)| {
            (
                Monomial::from_pairs(VARS.iter().copied().zip(e)),
                BigInt::from(c),
            )
        }))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn text_and_json_round_trip(a in arb_poly()) {
        prop_assert_eq!(a.to_string().parse::<Poly>().unwrap(), a.clone());
        let j = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<Poly>(&j).unwrap(), a);
    }

    #[test]
    fn division_recovers_factor(a in arb_poly(), b in arb_poly()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
    }

    #[test]
    fn double_inversion(tail in prop::collection::vec(arb_poly(), 0..5)) {
        let mut cs = vec![Poly::one()];
        cs.extend(tail);
        let s = Series::from_coeffs(cs, 4);
        let inv = s.invert().unwrap();
        prop_assert_eq!(inv.invert().unwrap(), s.clone());
        prop_assert_eq!(s.mul(&inv), Series::one(4));
    }

    #[test]
    fn gamma_reconstruction(gs in prop::collection::vec(arb_poly(), 1..3)) {
        let gs: Vec<Poly> = gs.into_iter().map(|g| g.set_one(&[VarId::T])).collect();
        let n = 4;
        let src = GammaExpansion { n, gammas: gs.clone(), t: VarId::T, y: Some(VarId::Y) }.reconstruct();
        let g = gamma_extract(&src, n).unwrap();
        prop_assert_eq!(g.reconstruct(), src);
    }
}
