use super::*;
use crate::cf::{contract_even, contract_odd, expand_odd_contraction, jfrac_expand, seidel, sfrac_expand};
use crate::poly::gamma_extract;
use std::collections::BTreeSet;

const G: [i128; 6] = [1, 1, 3, 17, 155, 2073];
const H: [i128; 7] = [1, 2, 8, 56, 608, 9440, 198272];
const HN: [i128; 7] = [1, 1, 2, 7, 38, 295, 3098];

/// `(G_2.., H_1.., h_0..)` with at least `k + 1` entries each.
fn columns(k: usize) -> (Vec<i128>, Vec<i128>, Vec<i128>) {
    let (g, h, hn) = seidel::<BigInt>(k + 1);
    (to_i128(&g), to_i128(&h), to_i128(&hn))
}

pub(super) fn seidel_figure(c: &Ctx, p: &mut Probe) -> Result<()> {
    let (g, h, hn) = seidel::<BigInt>(c.n.max(1));
    let (g, h, hn) = (to_i128(&g), to_i128(&h), to_i128(&hn));
    let pre = |v: &[i128], k: usize| v[..k.min(v.len())].to_vec();
    p.eq("G_2, G_4, ...", pre(&g, G.len()), pre(&G, g.len()));
    p.eq("H_1, H_3, ...", pre(&h, H.len()), pre(&H, h.len()));
    p.eq("h_0, h_1, ...", pre(&hn, HN.len()), pre(&HN, hn.len()));
    let scaled = h.iter().enumerate().all(|(k, &v)| v == hn[k] << k);
    p.check("H_{2n+1} = 2^n h_n", scaled, format!("{} entries", h.len()));
    Ok(())
}

pub(super) fn counts(c: &Ctx, p: &mut Probe) -> Result<()> {
    let (g, h, _) = columns(c.n);
    for n in 1..=c.n {
        let len = |f| gen(c, f, n).map(|v| v.len() as i128);
        let (d, e, x) = (len(FamilyId::D)?, len(FamilyId::E)?, len(FamilyId::X)?);
        p.eq(format!("n={n} |D|,|E|,|X| vs H_{}", 2 * n + 1), (d, e, x), (h[n], h[n], h[n]));
        let (dc, ec) = (len(FamilyId::DC)?, len(FamilyId::EC)?);
        p.eq(format!("n={n} |DC|,|EC| vs G_{}", 2 * n), (dc, ec), (g[n - 1], g[n - 1]));
        if dc != g[n] {
            p.note(format!("n={n}: |DC| = {dc} differs from G_{} = {}, the shifted index is off by one", 2 * n + 2, g[n]));
        }
        p.eq(format!("n={n} Dumont permutations vs G_{}", 2 * n + 2), len(FamilyId::Dumont)?, g[n]);
        p.eq(
            format!("n={n} Dumont derangements vs H_{}", 2 * n - 1),
            len(FamilyId::DumontDerangement)?,
            h[n - 1],
        );
    }
    if c.n >= 2 {
        let listed = |cs: &[&str]| -> Result<BTreeSet<Permutation>> {
            cs.iter().map(|s| Permutation::from_cycles(s)).collect()
        };
        let common = ["(1)(2)(3)(4)", "(1,2)(3)(4)", "(1,4)(2)(3)", "(3,4)(1)(2)", "(1,2)(3,4)", "(1,3,4)(2)"];
        let d4 = listed(&[&common[..], &["(1,4,2)(3)", "(1,3,4,2)"]].concat())?;
        let e4 = listed(&[&common[..], &["(1,2,4)(3)", "(1,2,3,4)"]].concat())?;
        let gd: BTreeSet<_> = gen(c, FamilyId::D, 2)?.into_iter().collect();
        let ge: BTreeSet<_> = gen(c, FamilyId::E, 2)?.into_iter().collect();
        p.check("D_4 equals the listed cycle forms", gd == d4, format!("{} members", gd.len()));
        p.check("E_4 equals the listed cycle forms", ge == e4, format!("{} members", ge.len()));
    }
    Ok(())
}

pub(super) fn gamma_counts(c: &Ctx, p: &mut Probe) -> Result<()> {
    let map = stat_map(&[(VarId::Y, Stat::Dom), (VarId::T, Stat::Des)]);
    for n in 1..=c.n {
        let poly = family(c, FamilyId::X, n, &map)?;
        let gammas: Vec<Poly> = gamma_extract(&poly, n as u32)?.gammas;
        let want: Vec<Poly> = count_by_des(&gen(c, FamilyId::Xbar, n)?, n)
            .into_iter()
            .map(|k| int(k as i64))
            .collect();
        let show = |v: &[Poly]| v.iter().map(|g| g.to_string()).collect::<Vec<_>>();
        p.eq(format!("n={n} gamma_k vs |Xbar_(2n,k)|"), show(&gammas), show(&want));
    }
    let spot = |n: usize| -> Result<u64> { Ok(count_by_des(&gen(c, FamilyId::Xbar, n)?, n)[1]) };
    if c.n >= 2 {
        p.eq("|Xbar_(4,1)|", spot(2)?, 4);
        let xs: Vec<Permutation> = gen(c, FamilyId::Xbar, 2)?
            .into_iter()
            .filter(|s| crate::perm::des(s) == 1)
            .collect();
        let got: BTreeSet<String> = words(&xs).into_iter().collect();
        let want: BTreeSet<String> = ["2341", "2413", "3412", "4123"].iter().map(|s| s.to_string()).collect();
        p.eq("Xbar_(4,1) members", got, want);
    }
    if c.n >= 3 {
        p.eq("|Xbar_(6,1)|", spot(3)?, 24);
    }
    Ok(())
}

pub(super) fn normalized(c: &Ctx, p: &mut Probe) -> Result<()> {
    let (_, _, hn) = columns(c.n);
    for n in 1..=c.n {
        let bar = count_by_des(&gen(c, FamilyId::Xbar, n)?, n);
        let hat = count_by_des(&gen(c, FamilyId::Xhat, n)?, n);
        let mut quotients = Vec::new();
        for (k, &ck) in bar.iter().enumerate() {
            let four = 4u64.pow(k as u32);
            p.check(format!("n={n} k={k} 4^k | {ck}"), ck % four == 0, format!("{ck} / {four}"));
            quotients.push(ck / four);
        }
        p.eq(format!("n={n} quotients vs |Xhat_(2n,k)|"), quotients.clone(), hat);
        p.eq(format!("n={n} sum of quotients vs h_n"), quotients.iter().sum::<u64>() as i128, hn[n]);
    }
    Ok(())
}

fn compare_numbers(p: &mut Probe, label: &str, s: &Series, want: Vec<i128>) {
    p.eq(label, numbers(s), want);
}

pub(super) fn cf_genocchi(c: &Ctx, p: &mut Probe) -> Result<()> {
    let (g, _, _) = columns(c.order + 1);
    compare_numbers(p, "coefficients vs G_{2n+2}", &expand("genocchi", c.order)?, g[..=c.order].to_vec());
    Ok(())
}

pub(super) fn cf_median_s(c: &Ctx, p: &mut Probe) -> Result<()> {
    let (_, h, _) = columns(c.order);
    let want: Vec<i128> = std::iter::once(1).chain(h[..c.order].iter().copied()).collect();
    compare_numbers(p, "coefficients vs H_{2n-1}", &expand("mediangenocchi_s", c.order)?, want);
    Ok(())
}

pub(super) fn cf_median_j(c: &Ctx, p: &mut Probe) -> Result<()> {
    let (_, h, _) = columns(c.order);
    compare_numbers(p, "coefficients vs H_{2n+1}", &expand("mediangenocchi", c.order)?, h[..=c.order].to_vec());
    Ok(())
}

pub(super) fn cf_normalized(c: &Ctx, p: &mut Probe) -> Result<()> {
    let (_, _, hn) = columns(c.order);
    compare_numbers(p, "coefficients vs h_n", &expand("normalized_median", c.order)?, hn[..=c.order].to_vec());
    Ok(())
}

pub(super) fn contraction(c: &Ctx, p: &mut Probe) -> Result<()> {
    let s = SFractionSpec::<BigInt>::new(|k| var(VarId::AlphaI(k as u16)));
    let lhs = sfrac_expand(&s, c.order);
    p.series("even contraction", &jfrac_expand(&contract_even(&s), c.order), &lhs);
    let (head, j) = contract_odd(&s);
    p.series("odd contraction", &expand_odd_contraction(&head, &j, c.order), &lhs);

    // The median Genocchi J-fraction is the odd contraction of its S-fraction.
    let (head, j) = contract_odd(&sspec("mediangenocchi_s")?);
    let target = jspec("mediangenocchi")?;
    p.check("median odd contraction head", head.is_one(), &head);
    let same = (0..c.order).all(|n| (j.b)(n) == (target.b)(n) && (j.lam)(n + 1) == (target.lam)(n + 1));
    p.check(
        "median odd contraction coefficients",
        same,
        format!("b_0..b_{0} and lam_1..lam_{1} match 2(n+1)^2 and n^2(n+1)^2", c.order - 1, c.order),
    );
    let even = contract_even(&sspec("mediangenocchi_s")?);
    if (even.b)(0) != (target.b)(0) {
        p.note(format!("the even contraction gives b_0 = {}, not {}", (even.b)(0), (target.b)(0)));
    }
    Ok(())
}
