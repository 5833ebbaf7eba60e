//! Continued fractions of J and S type, contraction, the Seidel triangle
//! and the catalog of coefficient schemes.

mod catalog;
mod seidel;

pub use catalog::{catalog, catalog_names};
pub use seidel::{seidel, SeidelTriangle};

use crate::poly::{Coeff, MultiPoly, PowerSeries};
use std::fmt;
use std::sync::Arc;

/// An index-parameterized coefficient generator.
pub type CoeffFn<C> = Arc<dyn Fn(usize) -> MultiPoly<C> + Send + Sync>;

/// `1 / (1 - b_0 x - lam_1 x^2 / (1 - b_1 x - lam_2 x^2 / ...))`;
/// `b` is read from index 0 and `lam` from index 1.
#[derive(Clone)]
pub struct JFractionSpec<C> {
    pub b: CoeffFn<C>,
    pub lam: CoeffFn<C>,
}

/// `1 / (1 - alpha_1 x / (1 - alpha_2 x / ...))`; `alpha` is read from
/// index 1.
#[derive(Clone)]
pub struct SFractionSpec<C> {
    pub alpha: CoeffFn<C>,
}

/// Either kind of fraction, as returned by the catalog.
#[derive(Clone)]
pub enum CfSpec<C> {
    J(JFractionSpec<C>),
    S(SFractionSpec<C>),
}

impl<C> fmt::Debug for JFractionSpec<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("JFractionSpec")
    }
}

impl<C> fmt::Debug for SFractionSpec<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("SFractionSpec")
    }
}

impl<C> fmt::Debug for CfSpec<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CfSpec::J(j) => j.fmt(f),
            CfSpec::S(s) => s.fmt(f),
        }
    }
}

impl<C: Coeff> JFractionSpec<C> {
    pub fn new(
        b: impl Fn(usize) -> MultiPoly<C> + Send + Sync + 'static,
        lam: impl Fn(usize) -> MultiPoly<C> + Send + Sync + 'static,
    ) -> Self {
        Self {
            b: Arc::new(b),
            lam: Arc::new(lam),
        }
    }

    /// Applies `f` to every coefficient, e.g. a substitution.
    pub fn map(&self, f: impl Fn(MultiPoly<C>) -> MultiPoly<C> + Send + Sync + Clone + 'static) -> Self {
        let (b, lam, g) = (self.b.clone(), self.lam.clone(), f.clone());
        Self::new(move |n| f(b(n)), move |n| g(lam(n)))
    }
}

impl<C: Coeff> SFractionSpec<C> {
    pub fn new(alpha: impl Fn(usize) -> MultiPoly<C> + Send + Sync + 'static) -> Self {
        Self { alpha: Arc::new(alpha) }
    }

    pub fn map(&self, f: impl Fn(MultiPoly<C>) -> MultiPoly<C> + Send + Sync + 'static) -> Self {
        let a = self.alpha.clone();
        Self::new(move |n| f(a(n)))
    }
}

impl<C: Coeff> CfSpec<C> {
    pub fn expand(&self, order: usize) -> PowerSeries<C> {
        match self {
            CfSpec::J(j) => jfrac_expand(j, order),
            CfSpec::S(s) => sfrac_expand(s, order),
        }
    }

    pub fn map(&self, f: impl Fn(MultiPoly<C>) -> MultiPoly<C> + Send + Sync + Clone + 'static) -> Self {
        match self {
            CfSpec::J(j) => CfSpec::J(j.map(f)),
            CfSpec::S(s) => CfSpec::S(s.map(f)),
        }
    }
}

/// Expansion through `x^order` at depth `ceil(order/2) + 1`.
pub fn jfrac_expand<C: Coeff>(spec: &JFractionSpec<C>, order: usize) -> PowerSeries<C> {
    jfrac_expand_depth(spec, order, order.div_ceil(2) + 1)
}

/// Expansion with the fraction cut after `depth` levels (the tail below
/// `lam_depth` replaced by 1).
pub fn jfrac_expand_depth<C: Coeff>(spec: &JFractionSpec<C>, order: usize, depth: usize) -> PowerSeries<C> {
    let mut tail = PowerSeries::one(order);
    for k in (0..depth).rev() {
        let lam = (spec.lam)(k + 1);
        let denom = PowerSeries::one(order)
            .sub(&PowerSeries::monomial((spec.b)(k), 1, order))
            .sub(&tail.scale(&lam).shift(2));
        tail = denom.invert().expect("denominator has constant term 1");
    }
    tail
}

/// Expansion through `x^order` at depth `order + 1`.
pub fn sfrac_expand<C: Coeff>(spec: &SFractionSpec<C>, order: usize) -> PowerSeries<C> {
    sfrac_expand_depth(spec, order, order + 1)
}

pub fn sfrac_expand_depth<C: Coeff>(spec: &SFractionSpec<C>, order: usize, depth: usize) -> PowerSeries<C> {
    let mut tail = PowerSeries::one(order);
    for k in (0..depth).rev() {
        let denom = PowerSeries::one(order).sub(&tail.scale(&(spec.alpha)(k + 1)).shift(1));
        tail = denom.invert().expect("denominator has constant term 1");
    }
    tail
}

/// S-to-J contraction: `b_0 = alpha_1`, `b_n = alpha_{2n} + alpha_{2n+1}`,
/// `lam_n = alpha_{2n-1} alpha_{2n}`.
pub fn contract_even<C: Coeff>(s: &SFractionSpec<C>) -> JFractionSpec<C> {
    let (a, a2) = (s.alpha.clone(), s.alpha.clone());
    JFractionSpec::new(
        move |n| if n == 0 { a(1) } else { &a(2 * n) + &a(2 * n + 1) },
        move |n| &a2(2 * n - 1) * &a2(2 * n),
    )
}

/// The other contraction: the S-fraction equals `1 + alpha_1 x J` with
/// `b_{n-1} = alpha_{2n-1} + alpha_{2n}` and `lam_n = alpha_{2n} alpha_{2n+1}`.
/// Returns `(alpha_1, J)`.
pub fn contract_odd<C: Coeff>(s: &SFractionSpec<C>) -> (MultiPoly<C>, JFractionSpec<C>) {
    let (a, a2) = (s.alpha.clone(), s.alpha.clone());
    let head = (s.alpha)(1);
    (
        head,
        JFractionSpec::new(
            move |n| &a(2 * n + 1) + &a(2 * n + 2),
            move |n| &a2(2 * n) * &a2(2 * n + 1),
        ),
    )
}

/// `1 + head * x * J` truncated at `order`.
pub fn expand_odd_contraction<C: Coeff>(head: &MultiPoly<C>, j: &JFractionSpec<C>, order: usize) -> PowerSeries<C> {
    let inner = jfrac_expand(j, order).scale(head).shift(1);
    PowerSeries::one(order).add(&inner)
}
