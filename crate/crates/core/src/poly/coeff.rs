use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{FromPrimitive, Num, Zero};
use std::fmt::{Debug, Display};
use std::ops::Neg;
use std::str::FromStr;

/// Exact coefficient ring for [`MultiPoly`](super::MultiPoly).
///
/// Machine integers overflow silently in release builds; use them only
/// where the magnitudes are known to be small.
pub trait Coeff:
    Num + Neg<Output = Self> + Clone + FromPrimitive + FromStr + Display + Debug + Send + Sync + 'static
{
    /// `self / d` if the quotient is exact in this ring.
    fn div_exact(&self, d: &Self) -> Option<Self>;

    fn from_count(n: u64) -> Self {
        Self::from_u64(n).expect("count fits the coefficient type")
    }

    fn is_negative(&self) -> bool;
}

macro_rules! int_coeff {
    ($($t:ty),*) => {$(
        impl Coeff for $t {
            fn div_exact(&self, d: &Self) -> Option<Self> {
                if d.is_zero() {
                    return None;
                }
                let (q, r) = self.div_rem(d);
                r.is_zero().then_some(q)
            }
            fn is_negative(&self) -> bool {
                *self < <$t>::zero()
            }
        }
    )*};
}

int_coeff!(i64, i128, BigInt);

impl Coeff for Ratio<i64> {
    fn div_exact(&self, d: &Self) -> Option<Self> {
        (!d.is_zero()).then(|| self / d)
    }
    fn is_negative(&self) -> bool {
        *self < Self::zero()
    }
}

impl Coeff for BigRational {
    fn div_exact(&self, d: &Self) -> Option<Self> {
        (!d.is_zero()).then(|| self / d)
    }
    fn is_negative(&self) -> bool {
        *self < Self::zero()
    }
}
