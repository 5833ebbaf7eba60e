use super::diagram::{enumerate_diagrams, enumerate_paths, Step};
use super::weights::WeightScheme;
use crate::cf::{catalog, jfrac_expand, JFractionSpec};
use crate::poly::{Coeff, Monomial, MultiPoly, PowerSeries, VarId};
use serde::{Deserialize, Serialize};

/// Result of comparing a weighted path sum with a continued fraction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlajoletOutcome {
    pub passed: bool,
    pub order: usize,
    /// `(k, path side, fraction side)` at the first differing `x^k`.
    pub first_discrepancy: Option<(usize, String, String)>,
}

impl FlajoletOutcome {
    fn compare<C: Coeff>(lhs: &PowerSeries<C>, rhs: &PowerSeries<C>) -> Self {
        let first = lhs.first_difference(rhs);
        Self {
            passed: first.is_none(),
            order: lhs.order(),
            first_discrepancy: first.map(|k| (k, lhs.coeff(k).to_string(), rhs.coeff(k).to_string())),
        }
    }
}

/// `sum_{n <= order} sum_d weight(d) x^n` over labelled diagrams.
pub fn diagram_series<C: Coeff>(scheme: WeightScheme, order: usize) -> PowerSeries<C> {
    let coeffs = (0..=order)
        .map(|n| enumerate_diagrams(n).iter().map(|d| scheme.weight::<C>(d)).sum())
        .collect();
    PowerSeries::from_coeffs(coeffs, order)
}

/// Path side against the scheme's catalog fraction.
pub fn flajolet_check<C: Coeff>(scheme: WeightScheme, order: usize) -> FlajoletOutcome {
    let lhs = diagram_series::<C>(scheme, order);
    let rhs = catalog::<C>(scheme.catalog_name())
        .expect("scheme names are catalog entries")
        .expand(order);
    FlajoletOutcome::compare(&lhs, &rhs)
}

fn generic_step<C: Coeff>(step: Step, h: u32) -> MultiPoly<C> {
    let h = h as u16;
    MultiPoly::term(
        C::one(),
        Monomial::var(match step {
            Step::U => VarId::Up(h),
            Step::D => VarId::Down(h),
            Step::L1 => VarId::Lev(h),
            Step::L2 => VarId::Lev2(h),
        }),
    )
}

/// Unlabelled paths with symbolic weights `up_h`, `down_h` (a fall
/// starting at `h`), `lev_h`, `lev2_h`.
pub fn generic_path_series<C: Coeff>(order: usize) -> PowerSeries<C> {
    let coeffs = (0..=order)
        .map(|n| {
            enumerate_paths(n)
                .iter()
                .map(|p| {
                    let hs = p.heights();
                    p.steps()
                        .iter()
                        .enumerate()
                        .map(|(j, &s)| generic_step::<C>(s, hs[j]))
                        .product::<MultiPoly<C>>()
                })
                .sum()
        })
        .collect();
    PowerSeries::from_coeffs(coeffs, order)
}

/// Symbolic form of the lemma: `b_h = lev_h + lev2_h`,
/// `lam_h = up_{h-1} down_h`.
pub fn flajolet_generic<C: Coeff>(order: usize) -> FlajoletOutcome {
    let spec = JFractionSpec::<C>::new(
        |h| &MultiPoly::var(VarId::Lev(h as u16)) + &MultiPoly::var(VarId::Lev2(h as u16)),
        |h| &MultiPoly::var(VarId::Up(h as u16 - 1)) * &MultiPoly::var(VarId::Down(h as u16)),
    );
    FlajoletOutcome::compare(&generic_path_series::<C>(order), &jfrac_expand(&spec, order))
}
