mod actions;
mod intro;
mod master;
mod oddodd;
mod paths;
mod pistols;

use super::{CheckId, Ctx, Probe};
use crate::cf::{catalog, CfSpec, JFractionSpec, SFractionSpec};
use crate::error::{Error, Result};
use crate::family::{family_poly, generate_with, FamilyId, GenMode, StatMap};
use crate::perm::{Permutation, Stat};
use crate::{Poly, Series, VarId};
use num_bigint::BigInt;
use num_traits::ToPrimitive;

pub(super) fn dispatch(check: CheckId, c: &Ctx, p: &mut Probe) -> Result<()> {
    use CheckId::*;
    match check {
        SeidelFigure1 => intro::seidel_figure(c, p),
        Thm11Counts => intro::counts(c, p),
        Eq12Gamma => intro::gamma_counts(c, p),
        Eq15Normalized => intro::normalized(c, p),
        Cf16 => intro::cf_genocchi(c, p),
        Cf17 => intro::cf_median_s(c, p),
        Cf19 => intro::cf_median_j(c, p),
        Cf110 => intro::cf_normalized(c, p),
        Lemma14Contract => intro::contraction(c, p),
        Thm21Master => master::master(c, p),
        Cor22 => master::b_one(c, p),
        Cor23 => master::s_fraction(c, p),
        Cor24 => master::cycles(c, p),
        Cor25 => master::eperm(c, p),
        Thm26Cycles => master::cycle_equidistribution(c, p),
        Thm27Gamma => master::gamma_ab(c, p),
        Lemma28Signature => master::signature(c, p),
        Prop210 => master::normalized_bounds(c, p),
        Thm211Factorization => master::factorization(c, p),
        Cor211P3 => master::xhat(c, p),
        Lemma31Flajolet => paths::flajolet(c, p),
        Lemma32Bijection => paths::bijection(c, p),
        Lemma33Indicators => paths::indicators(c, p),
        Sec4PistolStats => pistols::stats(c, p),
        Lemma41Rz => pistols::rz(c, p),
        Eq42DpermCf => pistols::dperm(c, p),
        Eq43Derangement => pistols::derangement(c, p),
        Sec5Orbits => actions::interhop_orbits(c, p),
        Sec6Orbits => actions::normalizer_orbits(c, p),
        Thm72Specialization => oddodd::specialization(c, p),
        Thm74Gamma => oddodd::gamma(c, p),
        Thm7xFactorization => oddodd::factorization(c, p),
    }
}

fn gen(c: &Ctx, f: FamilyId, n: usize) -> Result<Vec<Permutation>> {
    generate_with(f, n, GenMode::Pruned, &c.budget)
}

fn var(v: VarId) -> Poly {
    Poly::var(v)
}

fn int(k: i64) -> Poly {
    Poly::int(k)
}

fn stat_map(pairs: &[(VarId, Stat)]) -> StatMap {
    StatMap(pairs.to_vec())
}

fn monomial(s: &Permutation, map: &StatMap) -> Poly {
    map.vars()
        .into_iter()
        .zip(map.exponents(s))
        .map(|(v, e)| var(v).pow(e))
        .product()
}

fn sum_over<'a>(perms: impl IntoIterator<Item = &'a Permutation>, f: impl Fn(&Permutation) -> Poly) -> Poly {
    perms.into_iter().map(f).sum()
}

fn family(c: &Ctx, f: FamilyId, n: usize, map: &StatMap) -> Result<Poly> {
    family_poly(f, n, map, GenMode::Pruned, &c.budget)
}

/// `sum_{k <= order} coeff(k) x^k`.
fn series(order: usize, mut coeff: impl FnMut(usize) -> Result<Poly>) -> Result<Series> {
    let coeffs = (0..=order).map(&mut coeff).collect::<Result<Vec<_>>>()?;
    Ok(Series::from_coeffs(coeffs, order))
}

fn expand(name: &str, order: usize) -> Result<Series> {
    Ok(catalog::<BigInt>(name)?.expand(order))
}

fn jspec(name: &str) -> Result<JFractionSpec<BigInt>> {
    match catalog::<BigInt>(name)? {
        CfSpec::J(j) => Ok(j),
        CfSpec::S(_) => Err(Error::InvalidArgument(format!("{name} is an S-fraction"))),
    }
}

fn sspec(name: &str) -> Result<SFractionSpec<BigInt>> {
    match catalog::<BigInt>(name)? {
        CfSpec::S(s) => Ok(s),
        CfSpec::J(_) => Err(Error::InvalidArgument(format!("{name} is a J-fraction"))),
    }
}

fn to_i128(v: &[BigInt]) -> Vec<i128> {
    v.iter().map(|c| c.to_i128().unwrap_or(i128::MAX)).collect()
}

/// Integer coefficients of a numeric series.
fn numbers(s: &Series) -> Vec<i128> {
    to_i128(&s.constants().unwrap_or_default())
}

fn count_by_des(perms: &[Permutation], n: usize) -> Vec<u64> {
    let mut out = vec![0u64; n / 2 + 1];
    for s in perms {
        let k = crate::perm::des(s) as usize;
        if k >= out.len() {
            out.resize(k + 1, 0);
        }
        out[k] += 1;
    }
    out
}

fn words(perms: &[Permutation]) -> Vec<String> {
    perms
        .iter()
        .map(|s| s.word().iter().map(|v| v.to_string()).collect::<String>())
        .collect()
}
