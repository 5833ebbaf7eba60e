use super::coeff::Coeff;
use super::multipoly::MultiPoly;
use super::var::VarId;
use crate::error::{Error, Result};

type P<C> = MultiPoly<C>;

/// `[x, n, y]` in the variables `(p, q)`:
/// `x p^{n-1} + sum_{i=1}^{n-2} p^{n-1-i} q^i + y q^{n-1}`, and `x y` for `n = 1`.
pub fn bracket_in<C: Coeff>(x: &P<C>, n: u32, y: &P<C>, p: VarId, q: VarId) -> Result<P<C>> {
    if n == 0 {
        return Err(Error::InvalidArgument("bracket index must be at least 1".into()));
    }
    if n == 1 {
        return Ok(x * y);
    }
    let (pv, qv) = (P::<C>::var(p), P::<C>::var(q));
    let mut out = x * &pv.pow(n - 1);
    for i in 1..n - 1 {
        out += &(&pv.pow(n - 1 - i) * &qv.pow(i));
    }
    out += &(y * &qv.pow(n - 1));
    Ok(out)
}

/// `[x, n, y]_{p,q}`.
pub fn pq_bracket<C: Coeff>(x: &P<C>, n: u32, y: &P<C>) -> Result<P<C>> {
    bracket_in(x, n, y, VarId::P, VarId::Q)
}

/// `[x, n]_{p,q} = [x, n, 1]_{p,q}`.
pub fn pq_bracket1<C: Coeff>(x: &P<C>, n: u32) -> Result<P<C>> {
    pq_bracket(x, n, &P::one())
}

/// `[x, n]_{q,p}`, the bracket with the roles of p and q exchanged.
pub fn qp_bracket1<C: Coeff>(x: &P<C>, n: u32) -> Result<P<C>> {
    bracket_in(x, n, &P::one(), VarId::Q, VarId::P)
}

/// `[n]_{p,q} = p^{n-1} + p^{n-2} q + ... + q^{n-1}`.
pub fn pq_int<C: Coeff>(n: u32) -> Result<P<C>> {
    pq_bracket(&P::one(), n, &P::one())
}

/// The (p,q)-binomial `[n]...[n-k+1] / ([1]...[k])`, by exact division.
pub fn pq_binomial<C: Coeff>(n: u32, k: u32) -> Result<P<C>> {
    if k > n {
        return Err(Error::InvalidArgument(format!("binomial ({n}, {k}) needs k <= n")));
    }
    let mut num = P::one();
    let mut den = P::one();
    for i in 0..k {
        num = &num * &pq_int(n - i)?;
        den = &den * &pq_int(i + 1)?;
    }
    num.div_exact(&den)
}
