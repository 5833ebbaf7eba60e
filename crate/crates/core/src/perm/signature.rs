use super::permutation::Permutation;
use super::stats::{embrace, tops_bottoms};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// A subset `S` of `[2n]` with as many odd as even elements, in which
/// every prefix `[i]` holds at least as many odd as even elements.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeakSignature {
    pub n: usize,
    pub set: BTreeSet<usize>,
}

impl WeakSignature {
    pub fn new(n: usize, set: BTreeSet<usize>) -> Result<Self> {
        let sig = Self { n, set };
        sig.validate()?;
        Ok(sig)
    }

    fn validate(&self) -> Result<()> {
        let mut balance: i64 = 0;
        for i in 1..=2 * self.n {
            if self.set.contains(&i) {
                balance += if i % 2 == 1 { 1 } else { -1 };
            }
            if balance < 0 {
                return Err(Error::InvalidArgument(format!(
                    "prefix [{i}] has more even than odd elements of S"
                )));
            }
        }
        if balance != 0 || self.set.iter().any(|&i| i == 0 || i > 2 * self.n) {
            return Err(Error::InvalidArgument("unbalanced weak signature".into()));
        }
        Ok(())
    }

    pub fn contains(&self, x: usize) -> bool {
        self.set.contains(&x)
    }

    /// `s(x) = #(S_odd < x) - #(S_even < x) + [x in S_odd or x not in S]`.
    pub fn function(&self) -> SignatureFunction {
        let mut values = Vec::with_capacity(2 * self.n);
        let mut balance: i64 = 0;
        for x in 1..=2 * self.n {
            let inside = self.set.contains(&x);
            let bump = i64::from(!inside || x % 2 == 1);
            values.push((balance + bump) as u32);
            if inside {
                balance += if x % 2 == 1 { 1 } else { -1 };
            }
        }
        SignatureFunction { values }
    }
}

/// The signature function `s(1..=2n)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignatureFunction {
    pub values: Vec<u32>,
}

impl SignatureFunction {
    /// `s(x)` for `1 <= x <= 2n`.
    pub fn at(&self, x: usize) -> u32 {
        self.values[x - 1]
    }
}

/// Every descent has an even top and an odd bottom.
pub fn has_only_even_odd_descents(s: &Permutation) -> bool {
    s.word().windows(2).all(|w| w[0] < w[1] || (w[0] % 2 == 0 && w[1] % 2 == 1))
}

/// Weak signature and signature function of a member of the even-odd
/// descent family.
pub fn signature_of(s: &Permutation) -> Result<(WeakSignature, SignatureFunction)> {
    if s.len() % 2 != 0 || !has_only_even_odd_descents(s) {
        return Err(Error::NotMember {
            family: "X".into(),
            word: s.to_string(),
        });
    }
    let (tops, bottoms) = tops_bottoms(s);
    let set: BTreeSet<usize> = (1..=s.len()).filter(|&v| tops[v] || bottoms[v]).collect();
    let sig = WeakSignature::new(s.len() / 2, set)?;
    let f = sig.function();
    debug_assert!({
        let e = embrace(s);
        (1..=s.len()).all(|v| f.at(v) == e.l_vec[v] + e.r_vec[v] + 1)
    });
    Ok((sig, f))
}
