use genocchi_core::action::*;
use genocchi_core::family::{generate, StatMap};
use genocchi_core::family::{is_normalized_f, FamilyId};
use genocchi_core::perm::{des, embrace, shape, signature_of, Permutation, StatVector};
use genocchi_core::{Poly, VarId};
use std::collections::BTreeSet;

fn w(s: &str) -> Permutation {
    s.parse().unwrap()
}

fn pq() -> StatMap {
    use genocchi_core::Stat;
    StatMap(vec![(VarId::P, Stat::Ress), (VarId::Q, Stat::Les)])
}

#[test]
fn normalizer_worked_examples() {
    let s = w("5 6 3 4 7 8 1 2 9 10");
    let cases = [
        (1, "2 5 6 3 4 7 8 1 9 10"),
        (3, "5 6 1 2 4 7 8 3 9 10"),
        (6, "5 7 8 3 4 6 1 2 9 10"),
        (8, "5 6 3 4 8 1 2 7 9 10"),
    ];
    for (x, out) in cases {
        assert_eq!(normalizer_phi(&s, x).unwrap(), w(out), "x = {x}");
        assert_eq!(normalizer_toggle(&s, x).unwrap(), w(out), "x = {x}");
    }
    assert!(normalizer_phi(&s, 2).is_err());
}

#[test]
fn normalizer_orbit_example() {
    let o = orbit(&w("1 2 4 6 3 5"), Action::Normalizer).unwrap();
    let want: BTreeSet<Permutation> = ["1 2 4 6 3 5", "1 2 6 3 4 5", "1 2 4 5 6 3", "1 2 5 6 3 4"]
        .iter()
        .map(|s| w(s))
        .collect();
    assert_eq!(o.members, want);
    assert_eq!(orbit(&Permutation::identity(6), Action::Normalizer).unwrap().len(), 1);
}

#[test]
fn normalizer_exhaustive() {
    for n in 1..=4 {
        let xbar = generate(FamilyId::Xbar, n).unwrap();
        let set: BTreeSet<_> = xbar.iter().cloned().collect();
        for s in &xbar {
            let (sig, _) = signature_of(s).unwrap();
            let st = StatVector::of(s);
            for &x in &sig.set {
                let u = normalizer_phi(s, x).unwrap();
                assert!(set.contains(&u), "{s} x={x}");
                assert_eq!(signature_of(&u).unwrap().0, sig);
                assert_eq!(normalizer_phi(&u, x).unwrap(), *s, "involution {s} x={x}");
                assert_eq!(normalizer_toggle(s, x).unwrap(), u, "literal vs toggle {s} x={x}");
                assert_eq!(normalizer_search(s, x, &xbar).unwrap(), u, "search {s} x={x}");
                let su = StatVector::of(&u);
                let d = (su.ress as i64 - st.ress as i64, su.les as i64 - st.les as i64);
                assert!(d == (1, -1) || d == (-1, 1), "{s} x={x} {d:?}");
                for &x2 in &sig.set {
                    if x2 != x {
                        let a = normalizer_phi(&normalizer_phi(s, x).unwrap(), x2).unwrap();
                        let b = normalizer_phi(&normalizer_phi(s, x2).unwrap(), x).unwrap();
                        assert_eq!(a, b, "commute {s} {x} {x2}");
                    }
                }
            }
        }
    }
}

#[test]
fn normalizer_orbit_sums() {
    let (p, q) = (Poly::var(VarId::P), Poly::var(VarId::Q));
    for n in 1..=4 {
        let xbar = generate(FamilyId::Xbar, n).unwrap();
        let orbits = orbits_of(&xbar, Action::Normalizer).unwrap();
        assert_eq!(orbits.iter().map(Orbit::len).sum::<usize>(), xbar.len());
        for o in &orbits {
            let k = des(&o.base);
            assert_eq!(o.len(), 1 << (2 * k));
            let hat: Vec<_> = o.members.iter().filter(|s| genocchi_core::family::is_member(FamilyId::Xhat, s).unwrap()).collect();
            assert_eq!(hat.len(), 1, "one normalized member");
            let st = StatVector::of(hat[0]);
            let rhs = (&p + &q).pow(2 * k) * p.pow(st.ress - k) * q.pow(st.les - k);
            assert_eq!(orbit_sum::<_>(o, &pq()), rhs);
        }
    }
}

#[test]
fn interhop_small() {
    assert_eq!(interhop(&w("2 1"), 1).unwrap(), w("1 2"));
    assert_eq!(interhop(&w("1 2"), 1).unwrap(), w("2 1"));
    assert_eq!(theta(&w("1 2"), 1).unwrap(), w("2 1"));
    assert!(theta(&w("2 1"), 1).is_err());
    assert!(interhop(&w("2 4 1 3"), 1).is_err());
}

#[test]
fn interhop_exhaustive() {
    for n in 1..=4 {
        let xs = generate(FamilyId::X, n).unwrap();
        let set: BTreeSet<_> = xs.iter().cloned().collect();
        for s in &xs {
            let fr = free_pairs(s).unwrap();
            let e = embrace(s);
            for p in &fr {
                let u = interhop(s, p.r).unwrap();
                assert!(set.contains(&u));
                assert_eq!(interhop(&u, p.r).unwrap(), *s);
                assert_eq!(des(&u).abs_diff(des(s)), 1);
                let eu = embrace(&u);
                assert_eq!((eu.les, eu.ress), (e.les, e.ress));
                let rs = |v: &[FreePair]| v.iter().map(|p| p.r).collect::<Vec<_>>();
                assert_eq!(rs(&free_pairs(&u).unwrap()), rs(&fr));
                for p2 in &fr {
                    if p2.r != p.r {
                        let a = interhop(&interhop(s, p.r).unwrap(), p2.r).unwrap();
                        let b = interhop(&interhop(s, p2.r).unwrap(), p.r).unwrap();
                        assert_eq!(a, b);
                    }
                }
                let lr = |v: &Permutation| {
                    let st = StatVector::of(v);
                    (st.lema, st.romi)
                };
                if p.kind == FreeKind::BothOut {
                    let t = theta(s, p.r).unwrap();
                    assert!(set.contains(&t), "{s} r={}", p.r);
                    assert_eq!(lr(&t), lr(&u), "{s} r={}", p.r);
                    assert_eq!(lr(&interhop(&t, p.r).unwrap()), lr(s));
                    if let Ok(tt) = theta(&t, p.r) {
                        assert_eq!(tt, *s);
                    }
                } else {
                    assert_eq!(lr(&theta(&u, p.r).unwrap()), lr(s), "{s} r={}", p.r);
                }
            }
        }
    }
}

#[test]
fn interhop_orbit_identity() {
    use genocchi_core::Stat;
    let map = StatMap(vec![
        (VarId::P, Stat::Ress),
        (VarId::Q, Stat::Les),
        (VarId::Y, Stat::Dom),
        (VarId::T, Stat::Des),
    ]);
    let (t, y) = (Poly::var(VarId::T), Poly::var(VarId::Y));
    for n in 1..=4 {
        let xs = generate(FamilyId::X, n).unwrap();
        let orbits = orbits_of(&xs, Action::Interhop).unwrap();
        assert_eq!(orbits.iter().map(Orbit::len).sum::<usize>(), xs.len());
        for o in &orbits {
            let bars: Vec<_> = o.members.iter().filter(|s| StatVector::of(s).dom == 0).collect();
            assert_eq!(bars.len(), 1);
            let st = StatVector::of(bars[0]);
            let rhs = Poly::var(VarId::P).pow(st.ress)
                * Poly::var(VarId::Q).pow(st.les)
                * t.pow(st.des)
                * (Poly::one() + &y * &t).pow(n as u32 - 2 * st.des);
            assert_eq!(orbit_sum::<_>(o, &map), rhs);
        }
    }
}

#[test]
fn fbar_exhaustive() {
    use genocchi_core::Stat;
    let map = StatMap(vec![(VarId::P, Stat::Res), (VarId::Q, Stat::Les)]);
    let (p, q) = (Poly::var(VarId::P), Poly::var(VarId::Q));
    for n in 1..=4 {
        let yb = generate(FamilyId::Ybar, n).unwrap();
        let set: BTreeSet<_> = yb.iter().cloned().collect();
        for s in &yb {
            let vops = genocchi_core::family::vop_pairs(s);
            let sh = shape(s);
            for &i in &vops {
                let u = fbar_phi(s, i).unwrap();
                assert!(set.contains(&u));
                assert_eq!(fbar_phi(&u, i).unwrap(), *s);
                assert_eq!(fbar_toggle(s, i).unwrap(), u);
                let su = shape(&u);
                assert_eq!((su.peaks, su.valleys), (sh.peaks, sh.valleys));
                for &i2 in &vops {
                    if i2 != i {
                        let a = fbar_phi(&fbar_phi(s, i).unwrap(), i2).unwrap();
                        let b = fbar_phi(&fbar_phi(s, i2).unwrap(), i).unwrap();
                        assert_eq!(a, b);
                    }
                }
            }
        }
        for o in orbits_of(&yb, Action::Fbar).unwrap() {
            let hat: Vec<_> = o.members.iter().filter(|s| is_normalized_f(s)).collect();
            assert_eq!(hat.len(), 1);
            let k = des(hat[0]);
            let st = StatVector::of(hat[0]);
            let rhs = (&p + &q).pow(2 * k) * p.pow(st.res - k) * q.pow(st.les - k);
            assert_eq!(orbit_sum::<_>(&o, &map), rhs, "orbit of {}", o.base);
        }
    }
    let id = Permutation::identity(5);
    assert_eq!(orbit(&id, Action::Fbar).unwrap().len(), 1);
}
