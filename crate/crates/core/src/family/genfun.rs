use super::{gamma_pistol, generate_with, Budget, FamilyId, GenMode};
use crate::error::Result;
use crate::perm::{Permutation, Stat, StatVector};
use crate::poly::{poly_from_histogram, Coeff, MultiPoly, VarId};
use std::collections::BTreeMap;

/// Assignment of statistics to the variables that mark them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StatMap(pub Vec<(VarId, Stat)>);

impl StatMap {
    /// `a^lema abar^loma b^romi bbar^remi p^ress q^les y^dom t^des`.
    pub fn x() -> Self {
        use {Stat::*, VarId as V};
        Self(vec![
            (V::A, Lema),
            (V::ABar, Loma),
            (V::B, Romi),
            (V::BBar, Remi),
            (V::P, Ress),
            (V::Q, Les),
            (V::Y, Dom),
            (V::T, Des),
        ])
    }

    /// `a^lema p^res q^les y^dd t^des`.
    pub fn y() -> Self {
        use {Stat::*, VarId as V};
        Self(vec![(V::A, Lema), (V::P, Res), (V::Q, Les), (V::Y, Dd), (V::T, Des)])
    }

    /// `x0^fix_e x1^fix_o z^cyc t^drop`.
    pub fn cycles() -> Self {
        use {Stat::*, VarId as V};
        Self(vec![(V::X0, FixE), (V::X1, FixO), (V::Z, Cyc), (V::T, Drop)])
    }

    /// The statistics a family is usually counted by.
    pub fn default_for(f: FamilyId) -> Self {
        use FamilyId::*;
        match f {
            X | Xbar | Xhat => Self::x(),
            Y | Ystar | Ybar | Yhat => Self::y(),
            _ => Self::cycles(),
        }
    }

    pub fn vars(&self) -> Vec<VarId> {
        self.0.iter().map(|&(v, _)| v).collect()
    }

    pub fn exponents(&self, s: &Permutation) -> Vec<u32> {
        let st = StatVector::of(s);
        self.0.iter().map(|&(_, k)| st.get(k)).collect()
    }
}

/// Joint distribution of the mapped statistics over a family.
pub fn histogram(
    f: FamilyId,
    n: usize,
    map: &StatMap,
    mode: GenMode,
    budget: &Budget,
) -> Result<BTreeMap<Vec<u32>, u64>> {
    let mut hist = BTreeMap::new();
    for s in generate_with(f, n, mode, budget)? {
        *hist.entry(map.exponents(&s)).or_default() += 1;
    }
    Ok(hist)
}

/// Generating polynomial of a family; the pistol family ignores `map` and
/// yields its six-variable polynomial.
pub fn family_poly<C: Coeff>(
    f: FamilyId,
    n: usize,
    map: &StatMap,
    mode: GenMode,
    budget: &Budget,
) -> Result<MultiPoly<C>> {
    if f == FamilyId::Pistol {
        return gamma_pistol(n, budget);
    }
    let hist = histogram(f, n, map, mode, budget)?;
    Ok(poly_from_histogram(&map.vars(), &hist))
}
