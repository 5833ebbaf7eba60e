use super::{CfSpec, JFractionSpec, SFractionSpec};
use crate::error::{Error, Result};
use crate::poly::{pq_binomial, pq_bracket, pq_bracket1, pq_int, qp_bracket1, Coeff, MultiPoly, VarId};

const NAMES: [&str; 15] = [
    "genocchi",
    "mediangenocchi_s",
    "mediangenocchi",
    "normalized_median",
    "master",
    "master_b1",
    "master_s",
    "cycles",
    "eperm",
    "gamma_ab",
    "xhat",
    "pistol_rz",
    "dperm_fix",
    "derangement",
    "oddodd",
];

pub fn catalog_names() -> &'static [&'static str] {
    &NAMES
}

fn v<C: Coeff>(x: VarId) -> MultiPoly<C> {
    MultiPoly::var(x)
}

fn int<C: Coeff>(n: usize) -> MultiPoly<C> {
    MultiPoly::int(n as i64)
}

// Bracket indices below are always at least 1.
fn br<C: Coeff>(x: VarId, n: usize, y: VarId) -> MultiPoly<C> {
    pq_bracket(&v(x), n as u32, &v(y)).expect("positive bracket index")
}

fn br1<C: Coeff>(x: VarId, n: usize) -> MultiPoly<C> {
    pq_bracket1(&v(x), n as u32).expect("positive bracket index")
}

fn qbr1<C: Coeff>(x: VarId, n: usize) -> MultiPoly<C> {
    qp_bracket1(&v(x), n as u32).expect("positive bracket index")
}

fn nint<C: Coeff>(n: usize) -> MultiPoly<C> {
    pq_int(n as u32).expect("positive bracket index")
}

fn prod<C: Coeff>(fs: &[MultiPoly<C>]) -> MultiPoly<C> {
    fs.iter().fold(MultiPoly::one(), |a, b| &a * b)
}

fn j<C: Coeff>(
    b: impl Fn(usize) -> MultiPoly<C> + Send + Sync + 'static,
    lam: impl Fn(usize) -> MultiPoly<C> + Send + Sync + 'static,
) -> CfSpec<C> {
    CfSpec::J(JFractionSpec::new(b, lam))
}

fn s<C: Coeff>(alpha: impl Fn(usize) -> MultiPoly<C> + Send + Sync + 'static) -> CfSpec<C> {
    CfSpec::S(SFractionSpec::new(alpha))
}

/// Named coefficient schemes. J-fraction `b` is indexed from 0, `lam`
/// and S-fraction `alpha` from 1.
pub fn catalog<C: Coeff>(name: &str) -> Result<CfSpec<C>> {
    use VarId::*;
    let t = || v::<C>(T);
    let ty = || &v::<C>(T) * &v(Y);
    Ok(match name {
        "genocchi" => s(|k| {
            let m = k.div_ceil(2);
            if k % 2 == 1 {
                int(m * m)
            } else {
                int(m * (m + 1))
            }
        }),
        "mediangenocchi_s" => s(|k| {
            let m = k.div_ceil(2);
            int(m * m)
        }),
        "mediangenocchi" => j(|n| int(2 * (n + 1) * (n + 1)), |n| int(n * n * (n + 1) * (n + 1))),
        "normalized_median" => j(
            |n| int((n + 1) * (n + 1)),
            |n| {
                let c = n * (n + 1) / 2;
                int(c * c)
            },
        ),
        "master" => j(
            move |i| {
                let n = i + 1;
                &(&br(ABar, n, B) * &br(A, n, BBar)) + &prod(&[ty(), br1(A, n), qbr1(B, n)])
            },
            move |n| prod(&[t(), br1(A, n), br(A, n + 1, BBar), qbr1(B, n), br(ABar, n + 1, B)]),
        ),
        "master_b1" => j(
            move |i| {
                let n = i + 1;
                &(&br1(ABar, n) + &(&ty() * &nint(n))) * &br1(A, n)
            },
            move |n| prod(&[t(), br1(A, n), br1(A, n + 1), nint(n), br1(ABar, n + 1)]),
        ),
        "master_s" => s(move |k| {
            let n = k.div_ceil(2);
            if k % 2 == 1 {
                &br1(ABar, n) * &br1(A, n)
            } else {
                prod(&[br1(A, n), nint(n), t()])
            }
        }),
        "cycles" => j(
            move |n| {
                let zn = &v::<C>(Z) + &int(n);
                let inner = &zn + &(&int(n + 1) * &t());
                &zn * &inner
            },
            move |k| {
                let n = k - 1;
                let zn = &v::<C>(Z) + &int(n);
                let zn1 = &v::<C>(Z) + &int(n + 1);
                prod(&[int(n + 1), zn, zn1.pow(2), t()])
            },
        ),
        "eperm" => j(
            |i| &br1(A, i + 1) * &br1(ABar, i + 1),
            move |n| prod(&[t(), br1(A, n), br1(A, n + 1), nint(n), br1(ABar, n + 1)]),
        ),
        "gamma_ab" => j(
            move |i| {
                let n = i + 1;
                prod(&[&MultiPoly::one() + &ty(), br1(A, n), qbr1(B, n)])
            },
            move |n| prod(&[t(), br1(A, n), br1(A, n + 1), qbr1(B, n), qbr1(B, n + 1)]),
        ),
        "xhat" => j(
            |i| nint(i + 1).pow(2),
            move |n| {
                let c = pq_binomial::<C>(n as u32 + 1, 2).expect("valid binomial");
                &c.pow(2) * &t()
            },
        ),
        "pistol_rz" => j(
            |n| {
                let at = |x: VarId| &v::<C>(x) + &int(n);
                let sum = &(&(&at(Alpha) * &at(BetaBar)) + &(&at(Beta) * &at(GammaBar))) + &(&at(Gamma) * &at(AlphaBar));
                &sum - &int(n * (n + 1))
            },
            |k| {
                let n = k - 1;
                let pair = |x: VarId, y: VarId| &(&v::<C>(x) + &v(y)) + &int(n);
                prod(&[int(n + 1), pair(AlphaBar, Beta), pair(BetaBar, Gamma), pair(GammaBar, Alpha)])
            },
        ),
        "dperm_fix" => j(
            |n| {
                let z = v::<C>(Z);
                let x1z = &(&v::<C>(X1) * &z) + &int(n);
                let x0z = &(&v::<C>(X0) * &z) + &int(n);
                &(&x1z * &x0z) + &(&(&z + &int(n)) * &int(n + 1))
            },
            |k| {
                let n = k - 1;
                let z = v::<C>(Z);
                let x0z = &(&v::<C>(X0) * &z) + &int(n + 1);
                let x1z = &(&v::<C>(X1) * &z) + &int(n + 1);
                prod(&[int(n + 1), &z + &int(n), x0z, x1z])
            },
        ),
        "derangement" => s(|k| {
            let m = k.div_ceil(2);
            if k % 2 == 1 {
                &int::<C>(m) * &(&v::<C>(Z) + &int(m - 1))
            } else {
                int(m * m)
            }
        }),
        "oddodd" => j(
            move |i| {
                let n = i + 1;
                prod(&[&MultiPoly::one() + &ty(), br1(A, n), nint(n)])
            },
            move |n| prod(&[t(), br1(A, n), br1(A, n + 1), nint(n), nint(n + 1)]),
        ),
        _ => {
            return Err(Error::UnknownCatalog {
                name: name.to_string(),
                valid: NAMES.join(", "),
            })
        }
    })
}
