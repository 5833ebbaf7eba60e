use genocchi_core::family::*;
use genocchi_core::perm::Permutation;
use genocchi_core::{Error, Poly, VarId};

fn w(s: &str) -> Permutation {
    s.parse().unwrap()
}

fn words(v: &[Permutation]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

#[test]
fn membership_examples() {
    let s = w("2 4 1 6 3 7 8 5");
    assert!(is_member(FamilyId::X, &s).unwrap());
    assert!(!is_member(FamilyId::Xbar, &s).unwrap());
    assert!(is_member(FamilyId::D, &w("(1,3,4,2)")).unwrap());
    assert!(is_member(FamilyId::E, &w("1 2 3 4")).unwrap());
    assert!(is_member(FamilyId::Xhat, &w("2 4 1 3")).unwrap());
    match is_member(FamilyId::Ystar, &w("2 1")) {
        Err(Error::WrongParity { family, .. }) => assert_eq!(family, "Ystar"),
        other => panic!("{other:?}"),
    }
}

#[test]
fn listed_families() {
    let x4 = generate(FamilyId::X, 2).unwrap();
    assert_eq!(
        words(&x4),
        ["1 2 3 4", "1 2 4 3", "2 1 3 4", "2 1 4 3", "2 3 4 1", "2 4 1 3", "3 4 1 2", "4 1 2 3"]
            .map(String::from)
    );
    let xbar41: Vec<_> = generate(FamilyId::Xbar, 2)
        .unwrap()
        .into_iter()
        .filter(|s| genocchi_core::perm::des(s) == 1)
        .collect();
    let mut want = ["3 4 1 2", "4 1 2 3", "2 3 4 1", "2 4 1 3"].map(w).to_vec();
    want.sort();
    assert_eq!(xbar41, want);
    assert_eq!(words(&generate(FamilyId::Xhat, 1).unwrap()), ["1 2"]);
    assert_eq!(words(&generate(FamilyId::Xhat, 2).unwrap()), ["1 2 3 4", "2 4 1 3"]);
    assert_eq!(generate(FamilyId::Xhat, 3).unwrap().len(), 7);
    let y5 = generate(FamilyId::Ystar, 2).unwrap();
    assert_eq!(y5.len(), 8);
    assert!(y5.contains(&w("1 2 4 5 3")));
    assert_eq!(words(&generate(FamilyId::Ystar, 1).unwrap()), ["1 2 3", "2 3 1"]);
}

#[test]
fn counts() {
    let h = [2, 8, 56, 608];
    let g = [1, 1, 3, 17];
    let hn = [1, 2, 7, 38];
    for n in 1..=4 {
        for f in [FamilyId::D, FamilyId::E, FamilyId::X, FamilyId::Ystar] {
            assert_eq!(generate(f, n).unwrap().len(), h[n - 1], "{f} {n}");
        }
        assert_eq!(generate(FamilyId::DC, n).unwrap().len(), g[n - 1]);
        assert_eq!(generate(FamilyId::EC, n).unwrap().len(), g[n - 1]);
        assert_eq!(generate(FamilyId::Xhat, n).unwrap().len(), hn[n - 1]);
        assert_eq!(generate(FamilyId::Yhat, n).unwrap().len(), hn[n - 1]);
    }
    let ybar: Vec<usize> = (1..=4).map(|n| generate(FamilyId::Ybar, n).unwrap().len()).collect();
    assert_eq!(ybar, [1, 5, 25, 269]);
    let dumont: Vec<usize> = (1..=4).map(|n| generate(FamilyId::Dumont, n).unwrap().len()).collect();
    assert_eq!(dumont, [1, 3, 17, 155]);
    let der: Vec<usize> = (1..=4)
        .map(|n| generate(FamilyId::DumontDerangement, n).unwrap().len())
        .collect();
    assert_eq!(der, [1, 2, 8, 56]);
}

#[test]
fn generator_modes_agree() {
    let b = Budget::default();
    for n in 0..=4 {
        for f in FamilyId::all().iter().copied().filter(|&f| f != FamilyId::Pistol) {
            if f.carrier_len(n) > 9 {
                continue;
            }
            let a = generate_with(f, n, GenMode::Reference, &b).unwrap();
            let p = generate_with(f, n, GenMode::Pruned, &b).unwrap();
            assert_eq!(a, p, "{f} {n}");
            assert!(a.windows(2).all(|x| x[0] < x[1]));
        }
        for f in [FamilyId::X, FamilyId::Xbar, FamilyId::Xhat] {
            let a = generate_with(f, n, GenMode::Reference, &b).unwrap();
            let d = generate_with(f, n, GenMode::Diagram, &b).unwrap();
            assert_eq!(a, d, "{f} {n}");
        }
    }
}

#[test]
fn budget_is_enforced() {
    let err = generate_with(FamilyId::X, 6, GenMode::Pruned, &Budget::default()).unwrap_err();
    assert!(matches!(err, Error::BudgetExceeded { .. }), "{err}");
    assert!(generate_with(FamilyId::X, 2, GenMode::Pruned, &Budget::factorial(3)).is_err());
}

#[test]
fn pistols() {
    let f: Pistol = "2 8 4 4 12 6 10 14 10 14 14 12 14 14".parse().unwrap();
    let st = f.stats();
    assert_eq!((st.mo, st.me, st.fd, st.fi, st.sd, st.si), (1, 2, 2, 1, 2, 1));
    let one = Pistol::new(vec![2, 2]).unwrap().stats();
    assert_eq!((one.mo, one.me, one.fd, one.fi, one.sd, one.si), (0, 0, 0, 0, 0, 0));
    assert!(Pistol::new(vec![2, 4, 2, 4]).is_err());
    assert!(Pistol::new(vec![4, 4, 4, 4]).is_err());
    let b = Budget::default();
    let counts: Vec<usize> = (1..=4).map(|n| generate_pistols(n, &b).unwrap().len()).collect();
    assert_eq!(counts, [1, 3, 17, 155]);
    let g2: Poly = gamma_pistol(2, &b).unwrap();
    assert_eq!(g2.to_string(), "alpha*betabar + beta*gammabar + gamma*alphabar");
}

#[test]
fn x_polynomials() {
    let b = Budget::default();
    let x1: Poly = family_poly(FamilyId::X, 1, &StatMap::x(), GenMode::Pruned, &b).unwrap();
    assert_eq!(x1, "a*abar*b*bbar + a*b*y*t".parse().unwrap());
    let x2: Poly = family_poly(FamilyId::X, 2, &StatMap::x(), GenMode::Pruned, &b).unwrap();
    assert_eq!(x2.to_string().matches(" + ").count() + 1, 7);
    let keep_t = x2.keep_only(&[VarId::T]);
    assert_eq!(keep_t.to_string(), "1 + 6*t + t^2");
}
