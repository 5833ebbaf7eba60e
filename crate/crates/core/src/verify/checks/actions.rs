use super::*;
use crate::action::{
    free_pairs, interhop, normalizer_case, normalizer_phi, normalizer_search, normalizer_toggle, orbit, orbit_sum,
    orbits_of, theta, Action, FreeKind, NormalizerCase,
};
use crate::family::is_member;
use crate::perm::{des, embrace, signature_of, StatVector};
use std::collections::BTreeSet;

fn fail_once(bad: &mut Option<String>, cond: bool, what: impl FnOnce() -> String) {
    if !cond && bad.is_none() {
        *bad = Some(what());
    }
}

fn report(p: &mut Probe, label: String, bad: Option<String>, ok: String) {
    let pass = bad.is_none();
    p.check(label, pass, bad.unwrap_or(ok));
}

pub(super) fn interhop_orbits(c: &Ctx, p: &mut Probe) -> Result<()> {
    let w = |s: &str| s.parse::<Permutation>();
    p.eq("hop of 2 1 at r = 1", interhop(&w("2 1")?, 1)?.to_string(), "1 2".to_string());
    let map = stat_map(&[(VarId::P, Stat::Ress), (VarId::Q, Stat::Les), (VarId::Y, Stat::Dom), (VarId::T, Stat::Des)]);
    let lr = |v: &Permutation| {
        let st = StatVector::of(v);
        (st.lema, st.romi)
    };
    for n in 1..=c.n {
        let xs = gen(c, FamilyId::X, n)?;
        let set: BTreeSet<_> = xs.iter().cloned().collect();
        let mut bad = None;
        let mut theta_bad = None;
        for s in &xs {
            let fr = free_pairs(s)?;
            let e = embrace(s);
            for pr in &fr {
                let u = interhop(s, pr.r)?;
                fail_once(&mut bad, set.contains(&u), || format!("{s} r={} leaves X", pr.r));
                fail_once(&mut bad, interhop(&u, pr.r)? == *s, || format!("{s} r={} not an involution", pr.r));
                fail_once(&mut bad, des(&u).abs_diff(des(s)) == 1, || format!("{s} r={} des change", pr.r));
                let eu = embrace(&u);
                fail_once(&mut bad, (eu.les, eu.ress) == (e.les, e.ress), || format!("{s} r={} moves les/ress", pr.r));
                for q in &fr {
                    if q.r != pr.r {
                        let a = interhop(&interhop(s, pr.r)?, q.r)?;
                        let b = interhop(&interhop(s, q.r)?, pr.r)?;
                        fail_once(&mut bad, a == b, || format!("{s} r={} and {} do not commute", pr.r, q.r));
                    }
                }
                if pr.kind == FreeKind::BothOut {
                    let t = theta(s, pr.r)?;
                    fail_once(&mut theta_bad, set.contains(&t), || format!("theta({s}) leaves X"));
                    fail_once(&mut theta_bad, lr(&t) == lr(&u), || format!("{s} r={}: theta and hop differ on lema, romi", pr.r));
                    fail_once(&mut theta_bad, lr(&interhop(&t, pr.r)?) == lr(s), || format!("{s} r={}: hop after theta", pr.r));
                    if let Ok(tt) = theta(&t, pr.r) {
                        fail_once(&mut theta_bad, tt == *s, || format!("{s} r={}: theta twice", pr.r));
                    }
                } else {
                    fail_once(&mut theta_bad, lr(&theta(&u, pr.r)?) == lr(s), || format!("{s} r={}: theta after hop", pr.r));
                }
            }
        }
        report(p, format!("n={n} hops: closed, involutive, commuting, des +-1, les/ress fixed"), bad, format!("{} permutations", xs.len()));
        report(p, format!("n={n} theta keeps lema, romi in step with the hop"), theta_bad, "ok".into());

        let orbits = orbits_of(&xs, Action::Interhop)?;
        let (t, y) = (var(VarId::T), var(VarId::Y));
        let mut bad = None;
        let mut total = Poly::zero();
        for o in &orbits {
            let bars: Vec<_> = o.members.iter().filter(|s| StatVector::of(s).dom == 0).collect();
            if bars.len() != 1 {
                bad.get_or_insert(format!("orbit of {} has {} domino-free members", o.base, bars.len()));
                continue;
            }
            let st = StatVector::of(bars[0]);
            let rhs: Poly = [
                var(VarId::P).pow(st.ress),
                var(VarId::Q).pow(st.les),
                t.pow(st.des),
                (Poly::one() + &y * &t).pow(n as u32 - 2 * st.des),
            ]
            .into_iter()
            .product();
            let lhs = orbit_sum::<BigInt>(o, &map);
            fail_once(&mut bad, lhs == rhs, || format!("orbit of {}: {lhs} vs {rhs}", o.base));
            total = total + lhs;
        }
        report(p, format!("n={n} each orbit sums to p^ress q^les t^des (1+yt)^(n-2des)"), bad, format!("{} orbits", orbits.len()));
        p.poly(format!("n={n} orbit sums vs X_n(p,q,y,t)"), &total, &family(c, FamilyId::X, n, &map)?);
    }
    Ok(())
}

fn pq_map() -> StatMap {
    stat_map(&[(VarId::P, Stat::Ress), (VarId::Q, Stat::Les)])
}

pub(super) fn normalizer_orbits(c: &Ctx, p: &mut Probe) -> Result<()> {
    let w = |s: &str| s.parse::<Permutation>();
    let s = w("5 6 3 4 7 8 1 2 9 10")?;
    for (x, out) in [
        (1, "2 5 6 3 4 7 8 1 9 10"),
        (3, "5 6 1 2 4 7 8 3 9 10"),
        (6, "5 7 8 3 4 6 1 2 9 10"),
        (8, "5 6 3 4 8 1 2 7 9 10"),
    ] {
        p.eq(format!("worked example x = {x}"), normalizer_phi(&s, x)?.to_string(), out.to_string());
    }
    let o = orbit(&w("1 2 4 6 3 5")?, Action::Normalizer)?;
    let got: Vec<String> = o.members.iter().map(|m| m.to_string()).collect();
    let mut want: Vec<String> = ["1 2 4 6 3 5", "1 2 6 3 4 5", "1 2 4 5 6 3", "1 2 5 6 3 4"].iter().map(|s| s.to_string()).collect();
    want.sort();
    p.eq("orbit of 1 2 4 6 3 5", got, want);

    let (pv, qv) = (var(VarId::P), var(VarId::Q));
    for n in 1..=c.n {
        let xbar = gen(c, FamilyId::Xbar, n)?;
        let set: BTreeSet<_> = xbar.iter().cloned().collect();
        let mut bad = None;
        let mut delta_bad = None;
        for s in &xbar {
            let (sig, _) = signature_of(s)?;
            let st = StatVector::of(s);
            let e = embrace(s);
            for &x in &sig.set {
                let u = normalizer_phi(s, x)?;
                fail_once(&mut bad, set.contains(&u), || format!("{s} x={x} leaves Xbar"));
                fail_once(&mut bad, signature_of(&u)?.0 == sig, || format!("{s} x={x} changes the signature"));
                fail_once(&mut bad, normalizer_phi(&u, x)? == *s, || format!("{s} x={x} not an involution"));
                fail_once(&mut bad, normalizer_toggle(s, x)? == u, || format!("{s} x={x} literal and toggle differ"));
                fail_once(&mut bad, normalizer_search(s, x, &xbar)? == u, || format!("{s} x={x} search differs"));
                for &x2 in &sig.set {
                    if x2 != x {
                        let a = normalizer_phi(&u, x2)?;
                        let b = normalizer_phi(&normalizer_phi(s, x2)?, x)?;
                        fail_once(&mut bad, a == b, || format!("{s} x={x},{x2} do not commute"));
                    }
                }
                // The toggled count goes up when even, down when odd; l + r is fixed.
                let case = normalizer_case(s, x)?;
                let y = match case {
                    NormalizerCase::A => x + 1,
                    NormalizerCase::B => x - 1,
                    _ => x,
                };
                let left = matches!(case, NormalizerCase::A | NormalizerCase::C);
                let key = if left { e.l_vec[y] } else { e.r_vec[y] };
                let up = if key % 2 == 0 { 1 } else { -1 };
                let want = if left { (-up, up) } else { (up, -up) };
                let su = StatVector::of(&u);
                let got = (i64::from(su.ress) - i64::from(st.ress), i64::from(su.les) - i64::from(st.les));
                fail_once(&mut delta_bad, got == want, || format!("{s} x={x}: delta {got:?}, predicted {want:?}"));
            }
        }
        report(p, format!("n={n} closed, signature kept, involutive, commuting; literal = toggle = search"), bad, format!("{} permutations", xbar.len()));
        report(p, format!("n={n} (ress, les) moves by +-(1,-1) as the toggled count's parity predicts"), delta_bad, "ok".into());

        let orbits = orbits_of(&xbar, Action::Normalizer)?;
        let mut bad = None;
        for o in &orbits {
            let k = des(&o.base);
            let hats: Vec<_> = o.members.iter().filter(|m| is_member(FamilyId::Xhat, m).unwrap_or(false)).collect();
            if hats.len() != 1 || o.len() != 1 << (2 * k) {
                bad.get_or_insert(format!("orbit of {}: size {}, {} normalized", o.base, o.len(), hats.len()));
                continue;
            }
            let st = StatVector::of(hats[0]);
            let rhs = &(&pv + &qv).pow(2 * k) * &(&pv.pow(st.ress.saturating_sub(k)) * &qv.pow(st.les.saturating_sub(k)));
            let lhs = orbit_sum::<BigInt>(o, &pq_map());
            fail_once(&mut bad, lhs == rhs, || format!("orbit of {}: {lhs} vs {rhs}", o.base));
        }
        report(
            p,
            format!("n={n} orbits of size 4^k with one normalized member, sum (p+q)^2k p^(ress-k) q^(les-k)"),
            bad,
            format!("{} orbits", orbits.len()),
        );
    }
    Ok(())
}
