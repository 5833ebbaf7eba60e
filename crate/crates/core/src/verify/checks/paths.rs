use super::*;
use crate::path::{enumerate_diagrams, flajolet_check, flajolet_generic, phi, phi_inverse, PathDiagram, Step, WeightScheme};
use crate::perm::{parity_maxmin, signature_of, StatVector};
use std::collections::BTreeSet;

pub(super) fn flajolet(c: &Ctx, p: &mut Probe) -> Result<()> {
    let outcomes = [
        ("master weights", flajolet_check::<BigInt>(WeightScheme::Master, c.order)),
        ("odd-odd weights", flajolet_check::<BigInt>(WeightScheme::OddOdd, c.order)),
        ("generic symbolic weights", flajolet_generic::<BigInt>(c.order)),
    ];
    for (label, out) in outcomes {
        let detail = match &out.first_discrepancy {
            None => format!("equal through x^{}", out.order),
            Some((k, a, b)) => format!("differ at x^{k}: {a} vs {b}"),
        };
        p.check(label, out.passed, detail);
    }
    Ok(())
}

fn counts(d: &PathDiagram) -> impl Fn(Step) -> u32 + '_ {
    move |k| d.steps().iter().filter(|&&x| x == k).count() as u32
}

pub(super) fn bijection(c: &Ctx, p: &mut Probe) -> Result<()> {
    let s: Permutation = "2 6 8 1 4 7 14 9 10 12 3 5 11 15 16 13".parse()?;
    let d = phi(&s)?;
    p.eq("worked example steps", d.path.to_string(), "UUL1DUDL2D".to_string());
    p.eq(
        "worked example labels",
        d.labels_string(),
        "(0,1)(0,1)(0,2)(1,1)(1,1)(0,0)(0,1)(1,0)".to_string(),
    );
    let mut les_at_end = 0usize;
    for n in 1..=c.n {
        let xs = gen(c, FamilyId::X, n)?;
        let mut images = BTreeSet::new();
        let mut bad: Option<String> = None;
        for s in &xs {
            let d = phi(s)?;
            let st = StatVector::of(s);
            let cnt = counts(&d);
            let hs = d.path.heights();
            let (_, f) = signature_of(s)?;
            let mut les_min = i64::from(cnt(Step::U) + cnt(Step::D));
            let mut les_end = les_min;
            let mut heights_ok = true;
            for j in 0..n {
                let (xi, xp) = (i64::from(d.xi[j]), i64::from(d.xi_prime[j]));
                let low = i64::from(hs[j].min(hs[j + 1]));
                let end = i64::from(hs[j + 1]);
                les_min += 2 * low - xi - xp;
                les_end += 2 * end - xi - xp;
                heights_ok &= (hs[j], hs[j + 1]) == (f.at(2 * j + 1) - 1, f.at(2 * j + 2) - 1);
            }
            if i64::from(st.les) != les_end {
                les_at_end += 1;
            }
            let wt: Poly = WeightScheme::Master.weight(&d);
            let checks = [
                ("inverse", phi_inverse(&d)? == *s),
                ("dom", st.dom == cnt(Step::L2)),
                ("des", st.des == cnt(Step::U) + cnt(Step::L2)),
                ("ress", st.ress == d.xi.iter().sum::<u32>() + d.xi_prime.iter().sum::<u32>()),
                ("les", i64::from(st.les) == les_min),
                ("heights", heights_ok),
                ("weight", wt == monomial(s, &StatMap::x())),
                ("injective", images.insert(d.clone())),
            ];
            if let Some((what, _)) = checks.iter().find(|(_, ok)| !ok) {
                bad = Some(format!("{what} fails at {s}"));
                break;
            }
        }
        let total = enumerate_diagrams(n).len();
        match bad {
            Some(b) => p.check(format!("n={n}"), false, b),
            None => p.eq(
                format!("n={n} round trip, transfer, weights; images vs diagrams"),
                images.len(),
                total,
            ),
        }
    }
    p.note("les uses the lower endpoint height of each step");
    if les_at_end > 0 {
        p.note(format!("reading the height as the end height fails for {les_at_end} permutations"));
    }
    Ok(())
}

pub(super) fn indicators(c: &Ctx, p: &mut Probe) -> Result<()> {
    // Misses of the displayed forms, which read every height at the step's end
    // and use xi for remi and skip level-2 steps for romi.
    let mut printed = [0usize; 4];
    for n in 1..=c.n {
        let xs = gen(c, FamilyId::X, n)?;
        let mut bad = None;
        for s in &xs {
            let d = phi(s)?;
            let hs = d.path.heights();
            let steps = d.steps();
            let mut mine = [0u32; 4];
            let mut shown = [0u32; 4];
            for j in 0..n {
                let (xi, xp, st) = (d.xi[j], d.xi_prime[j], steps[j]);
                let (start, end) = (hs[j], hs[j + 1]);
                let dl1 = matches!(st, Step::D | Step::L1);
                let ul1 = matches!(st, Step::U | Step::L1);
                mine[0] += u32::from(xp == end);
                mine[1] += u32::from(dl1 && xi == start);
                mine[2] += u32::from(ul1 && xp == 0);
                mine[3] += u32::from(xi == 0);
                shown[0] += u32::from(xp == end);
                shown[1] += u32::from(dl1 && xi == end);
                shown[2] += u32::from(ul1 && xi == 0);
                shown[3] += u32::from(st != Step::L2 && xi == 0);
            }
            let (a, b, e, r) = parity_maxmin(s);
            let actual = [a, b, e, r];
            for k in 0..4 {
                if shown[k] != actual[k] {
                    printed[k] += 1;
                }
            }
            if mine != actual && bad.is_none() {
                bad = Some(format!("{s}: read {mine:?}, actual {actual:?}"));
            }
        }
        p.check(
            format!("n={n} (lema, loma, remi, romi) from labels"),
            bad.is_none(),
            bad.unwrap_or_else(|| format!("{} permutations", xs.len())),
        );
    }
    p.note("lema: xi' = end height; loma: xi = start height on D, L1; remi: xi' = 0 on U, L1; romi: xi = 0 on every step");
    p.note(format!(
        "the displayed forms (all heights at the step end, remi through xi, romi without L2) miss lema/loma/remi/romi on {}/{}/{}/{} permutations",
        printed[0], printed[1], printed[2], printed[3]
    ));
    Ok(())
}
