use super::*;
use crate::cf::{jfrac_expand, seidel};
use crate::family::{gamma_pistol, generate_pistols, Pistol};

pub(super) fn stats(c: &Ctx, p: &mut Probe) -> Result<()> {
    let f: Pistol = "2 8 4 4 12 6 10 14 10 14 14 12 14 14".parse()?;
    let st = f.stats();
    p.eq("example (mo, me, fd, fi, sd, si)", (st.mo, st.me, st.fd, st.fi, st.sd, st.si), (1, 2, 2, 1, 2, 1));
    let (g, _, _) = seidel::<BigInt>(c.n + 1);
    let g = to_i128(&g);
    for n in 1..=c.n {
        let all = generate_pistols(n, &c.budget)?;
        p.eq(format!("n={n} pistols vs G_{}", 2 * n + 2), all.len() as i128, g[n]);
        let gamma: Poly = gamma_pistol(n, &c.budget)?;
        let ones: Vec<(VarId, Poly)> = [VarId::Alpha, VarId::Beta, VarId::Gamma, VarId::AlphaBar, VarId::BetaBar, VarId::GammaBar]
            .iter()
            .map(|&v| (v, Poly::one()))
            .collect();
        p.poly(format!("n={n} Gamma at all ones"), &gamma.subs_many(&ones), &int(all.len() as i64));
    }
    Ok(())
}

fn rz_variant(z_misprint: bool) -> JFractionSpec<BigInt> {
    use VarId::*;
    let v = |x: VarId, n: usize| &var(x) + &int(n as i64);
    let base = jspec("pistol_rz").expect("catalog entry");
    let b = base.b.clone();
    JFractionSpec::new(
        move |n| b(n),
        move |k| {
            let n = k - 1;
            let second = if z_misprint { &var(BetaBar) + &v(Z, n) } else { &var(BetaBar) + &v(Gamma, n) };
            [int(k as i64), &var(AlphaBar) + &v(Beta, n), second, &var(GammaBar) + &v(Alpha, n)]
                .into_iter()
                .product()
        },
    )
}

pub(super) fn rz(c: &Ctx, p: &mut Probe) -> Result<()> {
    use VarId::*;
    let order = c.n.saturating_sub(1);
    let lhs = series(order, |m| gamma_pistol(m + 1, &c.budget))?;
    let rhs = expand("pistol_rz", order)?;
    p.series("sum Gamma_(n+1) x^n vs J-fraction", &lhs, &rhs);
    let j = jspec("pistol_rz")?;
    let b0 = &(&(&var(Alpha) * &var(BetaBar)) + &(&var(Beta) * &var(GammaBar))) + &(&var(Gamma) * &var(AlphaBar));
    p.poly("b_0", &(j.b)(0), &b0);
    let lam1: Poly = [&var(AlphaBar) + &var(Beta), &var(BetaBar) + &var(Gamma), &var(GammaBar) + &var(Alpha)]
        .into_iter()
        .product();
    p.poly("lam_1", &(j.lam)(1), &lam1);
    p.series("rebuilt with (betabar + gamma)", &jfrac_expand(&rz_variant(false), order), &rhs);
    if order >= 2 {
        let z = jfrac_expand(&rz_variant(true), order);
        match z.first_difference(&lhs) {
            Some(k) => p.note(format!("with (betabar + z) in lam_n the series already differs at x^{k}")),
            None => p.note("with (betabar + z) the series is unchanged at this order"),
        }
    }
    Ok(())
}

pub(super) fn dperm(c: &Ctx, p: &mut Probe) -> Result<()> {
    use VarId::*;
    let fix = stat_map(&[(X0, Stat::FixE), (X1, Stat::FixO), (Z, Stat::Cyc)]);
    let polys: Vec<Poly> = (0..=c.n).map(|n| family(c, FamilyId::D, n, &fix)).collect::<Result<_>>()?;
    let lhs = Series::from_coeffs(polys.clone(), c.n);
    p.series("x0^fix_e x1^fix_o z^cyc over D vs J-fraction", &lhs, &expand("dperm_fix", c.n)?);
    let z = var(Z);
    let spec = [
        (Alpha, &var(X1) * &z),
        (Beta, z.clone()),
        (Gamma, Poly::one()),
        (AlphaBar, Poly::zero()),
        (BetaBar, &var(X0) * &z),
        (GammaBar, Poly::one()),
    ];
    for n in 1..=c.n {
        let g: Poly = gamma_pistol(n + 1, &c.budget)?;
        p.poly(format!("n={n} Gamma_(n+1)(x1 z, z, 1, 0, x0 z, 1) vs D sum"), &g.subs_many(&spec), &polys[n]);
    }
    let j = jspec("dperm_fix")?;
    let b0 = &(&(&var(X0) * &var(X1)) * &z.pow(2)) + &z;
    p.poly("b_0", &(j.b)(0), &b0);
    let lam1: Poly = [z.clone(), &(&var(X0) * &z) + &int(1), &(&var(X1) * &z) + &int(1)].into_iter().product();
    p.poly("lam_1", &(j.lam)(1), &lam1);
    Ok(())
}

pub(super) fn derangement(c: &Ctx, p: &mut Probe) -> Result<()> {
    let map = stat_map(&[(VarId::Z, Stat::Cyc)]);
    let lhs = series(c.n, |n| family(c, FamilyId::Dstar, n, &map))?;
    p.series("z^cyc over fixed-point-free D vs S-fraction", &lhs, &expand("derangement", c.n)?);
    let s = sspec("derangement")?;
    let z = var(VarId::Z);
    let heads = [z.clone(), int(1), &int(2) * &(&z + &int(1)), int(4)];
    let got: Vec<Poly> = (1..=4).map(|k| (s.alpha)(k)).collect();
    p.check("alpha_1..alpha_4 = z, 1, 2(z+1), 4", got == heads, got.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(", "));
    Ok(())
}
