use genocchi_core::family::{generate, FamilyId, StatMap};
use genocchi_core::path::*;
use genocchi_core::perm::{embrace, parity_maxmin, signature_of, Permutation, StatVector};
use genocchi_core::{Poly, VarId};
use num_bigint::BigInt;

fn w(s: &str) -> Permutation {
    s.parse().unwrap()
}

fn monomial(s: &Permutation, map: &StatMap) -> Poly {
    map.vars()
        .into_iter()
        .zip(map.exponents(s))
        .map(|(v, e)| Poly::var(v).pow(e))
        .product()
}

#[test]
fn worked_example() {
    let s = w("2 6 8 1 4 7 14 9 10 12 3 5 11 15 16 13");
    let d = phi(&s).unwrap();
    assert_eq!(d.path.to_string(), "UUL1DUDL2D");
    assert_eq!(d.labels_string(), "(0,1)(0,1)(0,2)(1,1)(1,1)(0,0)(0,1)(1,0)");
    assert_eq!(phi_inverse(&d).unwrap(), s);
    let parsed = PathDiagram::parse("UUL1DUDL2D", "(0,1)(0,1)(0,2)(1,1)(1,1)(0,0)(0,1)(1,0)").unwrap();
    assert_eq!(parsed, d);
    let id = phi(&Permutation::identity(6)).unwrap();
    assert_eq!(id.to_string(), "L1L1L1 (0,0)(0,0)(0,0)");
    assert!(phi(&w("3 1 2 4")).is_err());
    assert!(PathDiagram::parse("L1", "(1,0)").is_err());
    assert!("UDD".parse::<MotzkinPath>().is_err());
}

#[test]
fn diagram_counts() {
    let counts: Vec<usize> = (0..=4).map(|n| enumerate_diagrams(n).len()).collect();
    assert_eq!(counts, [1, 2, 8, 56, 608]);
    let one: Vec<String> = enumerate_diagrams(1).iter().map(|d| d.to_string()).collect();
    assert_eq!(one, ["L1 (0,0)", "L2 (0,0)"]);
}

#[test]
fn phi_round_trip_and_transfer() {
    for n in 0..=4 {
        let xs = generate(FamilyId::X, n).unwrap();
        let mut images = std::collections::BTreeSet::new();
        for s in &xs {
            let d = phi(s).unwrap();
            assert_eq!(phi_inverse(&d).unwrap(), *s);
            let st = StatVector::of(s);
            let steps = d.steps();
            let count = |k: Step| steps.iter().filter(|&&x| x == k).count() as u32;
            assert_eq!(st.dom, count(Step::L2));
            assert_eq!(st.des, count(Step::U) + count(Step::L2));
            assert_eq!(st.ress, d.xi.iter().sum::<u32>() + d.xi_prime.iter().sum::<u32>());
            let hs = d.path.heights();
            let (_, f) = signature_of(s).unwrap();
            let mut les = i64::from(count(Step::U) + count(Step::D));
            for j in 0..n {
                let low = i64::from(hs[j].min(hs[j + 1]));
                les += (low - i64::from(d.xi[j])) + (low - i64::from(d.xi_prime[j]));
                assert_eq!((hs[j], hs[j + 1]), (f.at(2 * j + 1) - 1, f.at(2 * j + 2) - 1));
            }
            assert_eq!(i64::from(st.les), les, "{s}");
            let (lema, loma, remi, romi) = parity_maxmin(s);
            let (mut a, mut b, mut c, mut e) = (0, 0, 0, 0);
            for j in 0..n {
                let (x, xp) = (d.xi[j], d.xi_prime[j]);
                a += u32::from(xp == hs[j + 1]);
                if matches!(steps[j], Step::D | Step::L1) {
                    b += u32::from(x == hs[j]);
                }
                if matches!(steps[j], Step::U | Step::L1) {
                    c += u32::from(xp == 0);
                }
                e += u32::from(x == 0);
            }
            assert_eq!((lema, loma, remi, romi), (a, b, c, e), "{s}");
            let wt: Poly = WeightScheme::Master.weight(&d);
            assert_eq!(wt, monomial(s, &StatMap::x()), "{s}");
            assert!(images.insert(d));
        }
        assert_eq!(images.len(), enumerate_diagrams(n).len());
    }
}

#[test]
fn psi_properties() {
    let ys = generate(FamilyId::Ystar, 1).unwrap();
    let ds: Vec<String> = ys.iter().map(|s| psi(s).unwrap().to_string()).collect();
    assert_eq!(ds, ["L1 (0,0)", "L2 (0,0)"]);
    assert_eq!(psi(&Permutation::identity(5)).unwrap().to_string(), "L1L1 (0,0)(0,0)");
    for n in 0..=4 {
        let ys = generate(FamilyId::Ystar, n).unwrap();
        let mut images = std::collections::BTreeSet::new();
        for s in &ys {
            let d = psi(s).unwrap();
            assert!(images.insert(d.clone()));
            assert_eq!(psi_inverse(&d).unwrap(), *s);
            let wt: Poly = WeightScheme::OddOdd.weight(&d);
            assert_eq!(wt, monomial(s, &StatMap::y()), "{s}");
            let e = embrace(s);
            assert_eq!(e.les, d.xi.iter().sum::<u32>() + d.xi_prime.iter().sum::<u32>());
        }
        assert_eq!(images.len(), enumerate_diagrams(n).len());
    }
}

#[test]
fn step_sums_match_brackets() {
    for scheme in [WeightScheme::Master, WeightScheme::OddOdd] {
        for h in 0..=4 {
            for step in [Step::U, Step::D, Step::L1, Step::L2] {
                if step == Step::D && h == 0 {
                    continue;
                }
                let a: Poly = scheme.step_sum(step, h);
                let b: Poly = scheme.step_sum_closed(step, h).unwrap();
                assert_eq!(a, b, "{scheme:?} {step:?} {h}");
            }
        }
    }
}

#[test]
fn flajolet() {
    for scheme in [WeightScheme::Master, WeightScheme::OddOdd] {
        let out = flajolet_check::<BigInt>(scheme, 4);
        assert!(out.passed, "{scheme:?}: {:?}", out.first_discrepancy);
    }
    let g = flajolet_generic::<BigInt>(4);
    assert!(g.passed, "{:?}", g.first_discrepancy);
    let s = generic_path_series::<BigInt>(2);
    assert_eq!(
        *s.coeff(1),
        Poly::var(VarId::Lev(0)) + Poly::var(VarId::Lev2(0))
    );
}
