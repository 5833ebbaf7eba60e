use genocchi_core::cf::*;
use genocchi_core::family::{family_poly, Budget, FamilyId, GenMode, StatMap};
use genocchi_core::{Poly, Series, VarId};
use num_bigint::BigInt;

fn ints(s: &Series) -> Vec<i64> {
    s.constants()
        .unwrap()
        .into_iter()
        .map(|c| i64::try_from(c).unwrap())
        .collect()
}

fn expand(name: &str, order: usize) -> Series {
    catalog::<BigInt>(name).unwrap().expand(order)
}

#[test]
fn seidel_columns() {
    let (g, h, hn) = seidel::<BigInt>(6);
    let g: Vec<i64> = g.into_iter().map(|c| c.try_into().unwrap()).collect();
    let h: Vec<i64> = h.into_iter().map(|c| c.try_into().unwrap()).collect();
    let hn: Vec<i64> = hn.into_iter().map(|c| c.try_into().unwrap()).collect();
    assert_eq!(g, [1, 1, 3, 17, 155, 2073]);
    assert_eq!(h, [1, 2, 8, 56, 608, 9440, 198272]);
    assert_eq!(hn, [1, 1, 2, 7, 38, 295, 3098]);
    let t = SeidelTriangle::<i64>::build(8);
    assert_eq!(t.row(5), [2, 3, 3]);
    assert_eq!(t.row(8), [56, 48, 34, 17]);
    let (g2, _, _) = seidel::<i128>(6);
    assert_eq!(g2[5], 2073);
}

#[test]
fn numeric_fractions() {
    assert_eq!(ints(&expand("genocchi", 4)), [1, 1, 3, 17, 155]);
    assert_eq!(ints(&expand("mediangenocchi_s", 3)), [1, 1, 2, 8]);
    assert_eq!(ints(&expand("mediangenocchi", 6)), [1, 2, 8, 56, 608, 9440, 198272]);
    assert_eq!(ints(&expand("normalized_median", 6)), [1, 1, 2, 7, 38, 295, 3098]);
    let zero = JFractionSpec::<BigInt>::new(|_| Poly::zero(), |_| Poly::zero());
    assert_eq!(ints(&jfrac_expand(&zero, 5)), [1, 0, 0, 0, 0, 0]);
    let szero = SFractionSpec::<BigInt>::new(|_| Poly::zero());
    assert_eq!(ints(&sfrac_expand(&szero, 3)), [1, 0, 0, 0]);
}

#[test]
fn depth_stability() {
    for name in catalog_names() {
        if let CfSpec::J(j) = catalog::<BigInt>(name).unwrap() {
            for d in 1..=3 {
                let a = jfrac_expand_depth(&j, 2 * d - 1, d);
                let b = jfrac_expand_depth(&j, 2 * d - 1, d + 1);
                assert_eq!(a, b, "{name} depth {d}");
            }
        }
    }
}

#[test]
fn contraction_symbolic() {
    let s = SFractionSpec::<BigInt>::new(|k| Poly::var(VarId::AlphaI(k as u16)));
    let lhs = sfrac_expand(&s, 7);
    assert_eq!(jfrac_expand(&contract_even(&s), 7), lhs);
    let (head, j) = contract_odd(&s);
    assert_eq!(expand_odd_contraction(&head, &j, 7), lhs);
    let first = lhs.coeff(2).to_string();
    assert_eq!(first, "alpha_1^2 + alpha_1*alpha_2");
}

#[test]
fn median_contraction_gives_j_fraction() {
    let CfSpec::S(s) = catalog::<BigInt>("mediangenocchi_s").unwrap() else {
        panic!()
    };
    let (head, j) = contract_odd(&s);
    assert!(head.is_one());
    for n in 0..5usize {
        assert_eq!((j.b)(n), Poly::int(2 * ((n + 1) * (n + 1)) as i64));
    }
    for n in 1..5usize {
        assert_eq!((j.lam)(n), Poly::int((n * n * (n + 1) * (n + 1)) as i64));
    }
}

#[test]
fn catalog_heads() {
    let CfSpec::J(m) = catalog::<BigInt>("master").unwrap() else { panic!() };
    assert_eq!((m.b)(0), "a*abar*b*bbar + a*b*y*t".parse().unwrap());
    let CfSpec::J(r) = catalog::<BigInt>("pistol_rz").unwrap() else { panic!() };
    assert_eq!(
        (r.lam)(1),
        (Poly::var(VarId::AlphaBar) + Poly::var(VarId::Beta))
            * (Poly::var(VarId::BetaBar) + Poly::var(VarId::Gamma))
            * (Poly::var(VarId::GammaBar) + Poly::var(VarId::Alpha))
    );
    let CfSpec::J(x) = catalog::<BigInt>("xhat").unwrap() else { panic!() };
    let at1 = |p: Poly| p.subs_many(&[(VarId::P, Poly::one()), (VarId::Q, Poly::one())]);
    for n in 1..5usize {
        assert_eq!(at1((x.b)(n - 1)), Poly::int((n * n) as i64));
        let c = (n * (n + 1) / 2) as i64;
        assert_eq!(at1((x.lam)(n)), Poly::int(c * c) * Poly::var(VarId::T));
    }
    let CfSpec::J(d) = catalog::<BigInt>("dperm_fix").unwrap() else { panic!() };
    assert_eq!((d.b)(0), "z + x0*x1*z^2".parse::<Poly>().unwrap());
    let lam1 = Poly::var(VarId::Z)
        * (Poly::var(VarId::X0) * Poly::var(VarId::Z) + Poly::one())
        * (Poly::var(VarId::X1) * Poly::var(VarId::Z) + Poly::one());
    assert_eq!((d.lam)(1), lam1);
    let err = catalog::<BigInt>("nope").unwrap_err().to_string();
    assert!(err.contains("master"), "{err}");
}

#[test]
fn master_fraction_matches_enumeration() {
    let s = expand("master", 3);
    let b = Budget::default();
    for n in 1..=3 {
        let x: Poly = family_poly(FamilyId::X, n, &StatMap::x(), GenMode::Pruned, &b).unwrap();
        assert_eq!(*s.coeff(n), x, "n = {n}");
    }
}
