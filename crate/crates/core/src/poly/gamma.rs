use super::coeff::Coeff;
use super::multipoly::MultiPoly;
use super::var::VarId;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// `P = sum_k gamma_k t^k (1 + y t)^{n - 2k}`.
///
/// With `y = None` the basis is `t^k (1 + t)^{n-2k}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "C: Coeff")]
pub struct GammaExpansion<C> {
    pub n: u32,
    pub gammas: Vec<MultiPoly<C>>,
    pub t: VarId,
    pub y: Option<VarId>,
}

impl<C: Coeff> GammaExpansion<C> {
    fn basis(&self, k: u32) -> MultiPoly<C> {
        basis(k, self.n, self.t, self.y)
    }

    pub fn reconstruct(&self) -> MultiPoly<C> {
        (0..self.gammas.len() as u32)
            .map(|k| &self.gammas[k as usize] * &self.basis(k))
            .sum()
    }
}

fn basis<C: Coeff>(k: u32, n: u32, t: VarId, y: Option<VarId>) -> MultiPoly<C> {
    let tv = MultiPoly::<C>::var(t);
    let yt = match y {
        Some(y) => &MultiPoly::var(y) * &tv,
        None => tv.clone(),
    };
    &tv.pow(k) * &(&MultiPoly::one() + &yt).pow(n - 2 * k)
}

/// Gamma coefficients of `p` in the `(t, 1 + y t)` basis.
pub fn gamma_extract<C: Coeff>(p: &MultiPoly<C>, n: u32) -> Result<GammaExpansion<C>> {
    gamma_extract_with(p, n, VarId::T, Some(VarId::Y))
}

/// Peels `gamma_k` as the `t^k` coefficient of the running remainder.
pub fn gamma_extract_with<C: Coeff>(
    p: &MultiPoly<C>,
    n: u32,
    t: VarId,
    y: Option<VarId>,
) -> Result<GammaExpansion<C>> {
    let mut rem = p.clone();
    let mut gammas = Vec::new();
    for k in 0..=n / 2 {
        let g = rem.coeff_of(t, k);
        // The t^k coefficient must not involve y.
        if let Some(y) = y {
            if g.degree_in(y) > 0 {
                return Err(Error::NotGammaDecomposable(rem.to_string()));
            }
        }
        rem = &rem - &(&g * &basis(k, n, t, y));
        gammas.push(g);
    }
    if !rem.is_zero() {
        return Err(Error::NotGammaDecomposable(rem.to_string()));
    }
    Ok(GammaExpansion { n, gammas, t, y })
}
