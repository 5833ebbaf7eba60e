use super::coeff::Coeff;
use super::multipoly::MultiPoly;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Power series in `x` truncated after `x^order`, with polynomial
/// coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "C: Coeff")]
pub struct PowerSeries<C> {
    coeffs: Vec<MultiPoly<C>>,
}

impl<C: Coeff> PowerSeries<C> {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![MultiPoly::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(MultiPoly::one(), order)
    }

    pub fn constant(c: MultiPoly<C>, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// Pads or truncates `coeffs` to `order + 1` entries.
    pub fn from_coeffs(mut coeffs: Vec<MultiPoly<C>>, order: usize) -> Self {
        coeffs.resize(order + 1, MultiPoly::zero());
        Self { coeffs }
    }

    /// `c * x^k`, or zero when `k` exceeds the order.
    pub fn monomial(c: MultiPoly<C>, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &MultiPoly<C> {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[MultiPoly<C>] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(self.coeffs.iter().take(order + 1).cloned().collect(), order)
    }

    pub fn add(&self, o: &Self) -> Self {
        self.zip(o, |a, b| a + b)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.zip(o, |a, b| a - b)
    }

    fn zip(&self, o: &Self, f: impl Fn(&MultiPoly<C>, &MultiPoly<C>) -> MultiPoly<C>) -> Self {
        let n = self.order().min(o.order());
        Self {
            coeffs: (0..=n).map(|k| f(&self.coeffs[k], &o.coeffs[k])).collect(),
        }
    }

    pub fn scale(&self, c: &MultiPoly<C>) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by `x^k`, dropping what falls past the order.
    pub fn shift(&self, k: usize) -> Self {
        let n = self.order();
        let mut coeffs = vec![MultiPoly::zero(); n + 1];
        for i in k..=n {
            coeffs[i] = self.coeffs[i - k].clone();
        }
        Self { coeffs }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let n = self.order().min(o.order());
        let coeffs = (0..=n)
            .map(|k| {
                (0..=k)
                    .filter(|&i| !self.coeffs[i].is_zero() && !o.coeffs[k - i].is_zero())
                    .map(|i| &self.coeffs[i] * &o.coeffs[k - i])
                    .sum()
            })
            .collect();
        Self { coeffs }
    }

    /// Reciprocal of a series with constant term exactly 1.
    pub fn invert(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::NonUnitConstant);
        }
        let n = self.order();
        let mut inv: Vec<MultiPoly<C>> = Vec::with_capacity(n + 1);
        inv.push(MultiPoly::one());
        for k in 1..=n {
            let s: MultiPoly<C> = (1..=k)
                .filter(|&i| !self.coeffs[i].is_zero() && !inv[k - i].is_zero())
                .map(|i| &self.coeffs[i] * &inv[k - i])
                .sum();
            inv.push(-s);
        }
        Ok(Self { coeffs: inv })
    }

    /// Applies a coefficient-wise map, e.g. a substitution.
    pub fn map(&self, f: impl Fn(&MultiPoly<C>) -> MultiPoly<C>) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// Integer coefficients when every coefficient is constant.
    pub fn constants(&self) -> Option<Vec<C>> {
        self.coeffs.iter().map(|c| c.as_constant()).collect()
    }

    /// First index where the two series differ, over their common order.
    pub fn first_difference(&self, o: &Self) -> Option<usize> {
        (0..=self.order().min(o.order())).find(|&k| self.coeffs[k] != o.coeffs[k])
    }
}

/// Free function form of [`PowerSeries::invert`].
pub fn series_invert<C: Coeff>(s: &PowerSeries<C>) -> Result<PowerSeries<C>> {
    s.invert()
}

impl<C: Coeff> fmt::Display for PowerSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            write!(f, "x^{k}: {c}")?;
        }
        Ok(())
    }
}
