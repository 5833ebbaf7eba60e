use super::master::{ones, same_j};
use super::*;
use crate::action::{fbar_case, fbar_phi, fbar_toggle, orbit_sum, orbits_of, Action, FbarCase};
use crate::cf::seidel;
use crate::family::{is_normalized_f, vop_pairs};
use crate::perm::{des, embrace, shape, StatVector};
use crate::poly::gamma_extract;
use std::collections::BTreeSet;

fn y_polys(c: &Ctx) -> Result<Vec<Poly>> {
    (0..=c.n).map(|n| family(c, FamilyId::Ystar, n, &StatMap::y())).collect()
}

pub(super) fn specialization(c: &Ctx, p: &mut Probe) -> Result<()> {
    use VarId::*;
    let (_, h, hn) = seidel::<BigInt>(c.n + 1);
    let (h, hn) = (to_i128(&h), to_i128(&hn));
    for n in 1..=c.n {
        p.eq(format!("n={n} |Y*| vs H_{}", 2 * n + 1), gen(c, FamilyId::Ystar, n)?.len() as i128, h[n]);
        p.eq(format!("n={n} |Yhat*| vs h_{n}"), gen(c, FamilyId::Yhat, n)?.len() as i128, hn[n]);
    }
    let ys = y_polys(c)?;
    let fix = ones(&[ABar, B, BBar]);
    for n in 1..=c.n {
        let x = family(c, FamilyId::X, n, &StatMap::x())?.subs_many(&fix);
        p.poly(format!("n={n} Y_n vs X_n(a,1,1,1,p,q,y,t)"), &ys[n], &x);
    }
    let lhs = Series::from_coeffs(ys, c.n);
    p.series("sum Y_n x^n vs J-fraction", &lhs, &expand("oddodd", c.n)?);
    same_j(p, "b = bbar = 1 scheme at abar = 1", &jspec("master_b1")?, &jspec("oddodd")?, c.n.max(2), |q| {
        q.subs(ABar, &Poly::one())
    });
    Ok(())
}

fn ybar_map() -> StatMap {
    use VarId::*;
    stat_map(&[(A, Stat::Lema), (P, Stat::Res), (Q, Stat::Les), (T, Stat::Des)])
}

pub(super) fn gamma(c: &Ctx, p: &mut Probe) -> Result<()> {
    use VarId::*;
    let ys = y_polys(c)?;
    for n in 1..=c.n {
        let g = gamma_extract(&ys[n], n as u32)?;
        let bar = family(c, FamilyId::Ybar, n, &ybar_map())?;
        for (k, gk) in g.gammas.iter().enumerate() {
            p.poly(format!("n={n} k={k} gamma vs a^lema p^res q^les over Ybar"), gk, &bar.coeff_of(T, k as u32));
        }
    }
    let zero = [(Y, Poly::zero())];
    let lhs = Series::from_coeffs(ys.iter().map(|q| q.subs_many(&zero)).collect(), c.n);
    let rhs = expand("oddodd", c.n)?.map(|q| q.subs_many(&zero));
    p.series("y = 0 series vs J-fraction", &lhs, &rhs);
    Ok(())
}

fn fail_once(bad: &mut Option<String>, cond: bool, what: impl FnOnce() -> String) {
    if !cond && bad.is_none() {
        *bad = Some(what());
    }
}

pub(super) fn factorization(c: &Ctx, p: &mut Probe) -> Result<()> {
    use VarId::*;
    let (pv, qv) = (var(P), var(Q));
    let pq = &pv + &qv;
    let map = stat_map(&[(P, Stat::Res), (Q, Stat::Les)]);
    let mut printed_misses = Vec::new();
    for n in 1..=c.n {
        let ybar = gen(c, FamilyId::Ybar, n)?;
        let yhat: Vec<Permutation> = gen(c, FamilyId::Yhat, n)?;
        let full = family(c, FamilyId::Ybar, n, &stat_map(&[(P, Stat::Res), (Q, Stat::Les), (T, Stat::Des)]))?;
        for k in 0..=(n / 2) as u32 {
            let gk = full.coeff_of(T, k);
            let hats: Vec<&Permutation> = yhat.iter().filter(|s| des(s) == k).collect();
            let sym = sum_over(hats.iter().copied(), |s| {
                let st = StatVector::of(s);
                &pv.pow(st.res.saturating_sub(k)) * &qv.pow(st.les.saturating_sub(k))
            });
            match gk.div_exact(&pq.pow(2 * k)) {
                Ok(q) => p.poly(format!("n={n} k={k} gamma / (p+q)^2k vs p^(res-k) q^(les-k) over Yhat"), &q, &sym),
                Err(e) => p.check(format!("n={n} k={k} division"), false, e),
            }
            let shown_ok = hats.iter().all(|s| StatVector::of(s).res >= 2 * k) && {
                let shown = sum_over(hats.iter().copied(), |s| {
                    let st = StatVector::of(s);
                    &pv.pow(st.res - 2 * k) * &qv.pow(st.les)
                });
                &pq.pow(2 * k) * &shown == gk
            };
            if !shown_ok {
                printed_misses.push(format!("(n={n},k={k})"));
            }
        }

        let set: BTreeSet<_> = ybar.iter().cloned().collect();
        let mut bad = None;
        let mut delta_bad = None;
        for s in &ybar {
            let vops = vop_pairs(s);
            let sh = shape(s);
            let st = StatVector::of(s);
            let e = embrace(s);
            for &i in &vops {
                let u = fbar_phi(s, i)?;
                fail_once(&mut bad, set.contains(&u), || format!("{s} i={i} leaves Ybar"));
                fail_once(&mut bad, fbar_phi(&u, i)? == *s, || format!("{s} i={i} not an involution"));
                fail_once(&mut bad, fbar_toggle(s, i)? == u, || format!("{s} i={i} literal and toggle differ"));
                let su = shape(&u);
                fail_once(&mut bad, (su.peaks, su.valleys) == (sh.peaks, sh.valleys), || format!("{s} i={i} changes valleys/peaks"));
                for &j in &vops {
                    if j != i {
                        let a = fbar_phi(&u, j)?;
                        let b = fbar_phi(&fbar_phi(s, j)?, i)?;
                        fail_once(&mut bad, a == b, || format!("{s} i={i},{j} do not commute"));
                    }
                }
                let y = match fbar_case(s, i)? {
                    FbarCase::MoveEven => 2 * i,
                    FbarCase::ToggleOdd => 2 * i - 1,
                };
                let want = if e.l_vec[y] % 2 == 0 { (-1, 1) } else { (1, -1) };
                let sv = StatVector::of(&u);
                let got = (i64::from(sv.res) - i64::from(st.res), i64::from(sv.les) - i64::from(st.les));
                fail_once(&mut delta_bad, got == want, || format!("{s} i={i}: delta {got:?}, predicted {want:?}"));
            }
        }
        let pass = bad.is_none();
        p.check(format!("n={n} VOP action closed, involutive, commuting, keeps valleys and peaks"), pass, bad.unwrap_or_else(|| format!("{} permutations", ybar.len())));
        let pass = delta_bad.is_none();
        p.check(format!("n={n} (res, les) moves by (-1,1) when l of the moved value is even, else (1,-1)"), pass, delta_bad.unwrap_or_else(|| "ok".into()));

        let mut bad = None;
        let orbits = orbits_of(&ybar, Action::Fbar)?;
        for o in &orbits {
            let hats: Vec<_> = o.members.iter().filter(|s| is_normalized_f(s)).collect();
            if hats.len() != 1 {
                bad.get_or_insert(format!("orbit of {} has {} normalized members", o.base, hats.len()));
                continue;
            }
            let k = des(hats[0]);
            let st = StatVector::of(hats[0]);
            let rhs = &pq.pow(2 * k) * &(&pv.pow(st.res.saturating_sub(k)) * &qv.pow(st.les.saturating_sub(k)));
            let lhs = orbit_sum::<BigInt>(o, &map);
            fail_once(&mut bad, lhs == rhs, || format!("orbit of {}: {lhs} vs {rhs}", o.base));
        }
        let pass = bad.is_none();
        p.check(
            format!("n={n} orbits hold one normalized member and sum to (p+q)^2k p^(res-k) q^(les-k)"),
            pass,
            bad.unwrap_or_else(|| format!("{} orbits", orbits.len())),
        );

        let xbar = family(c, FamilyId::Xbar, n, &stat_map(&[(A, Stat::Lema), (P, Stat::Ress), (Q, Stat::Les), (T, Stat::Des)]))?;
        p.poly(format!("n={n} Ybar_n(a,p,q,t) vs Xbar_n(a,1,p,q,t)"), &family(c, FamilyId::Ybar, n, &ybar_map())?, &xbar);
        let xhat = family(c, FamilyId::Xhat, n, &stat_map(&[(P, Stat::Ress), (Q, Stat::Les), (T, Stat::Des)]))?;
        let yhat_poly = family(c, FamilyId::Yhat, n, &stat_map(&[(P, Stat::Res), (Q, Stat::Les), (T, Stat::Des)]))?;
        p.poly(format!("n={n} Yhat_n(p,q,t) vs Xhat_n(1,1,p,q,t)"), &yhat_poly, &xhat);
    }
    if printed_misses.is_empty() {
        p.note("the displayed exponents p^(res-2k) q^les also fit");
    } else {
        p.note(format!("the displayed exponents p^(res-2k) q^les fail at {}", printed_misses.join(" ")));
    }
    Ok(())
}
