use super::Budget;
use crate::error::{Error, Result};
use crate::poly::{Coeff, Monomial, MultiPoly, VarId};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt;

/// A surjective map `f: [2n] -> {2, 4, ..., 2n}` with `f(i) >= i`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Pistol {
    values: Vec<u8>,
}

/// The six point statistics of a pistol.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct PistolStats {
    pub mo: u32,
    pub me: u32,
    pub fd: u32,
    pub fi: u32,
    pub sd: u32,
    pub si: u32,
}

impl Pistol {
    pub fn new(values: Vec<u8>) -> Result<Self> {
        let m = values.len();
        let bad = |why: String| Error::InvalidArgument(format!("not a surjective pistol: {why}"));
        if m == 0 || m % 2 != 0 {
            return Err(bad(format!("length {m} is not a positive even number")));
        }
        let mut hit = vec![false; m + 1];
        for (i, &v) in values.iter().enumerate() {
            let v = v as usize;
            if v % 2 != 0 || v < i + 1 || v > m {
                return Err(bad(format!("f({}) = {v}", i + 1)));
            }
            hit[v] = true;
        }
        if let Some(e) = (2..=m).step_by(2).find(|&e| !hit[e]) {
            return Err(bad(format!("{e} is not attained")));
        }
        Ok(Self { values })
    }

    /// `f(k)` for `1 <= k <= 2n`.
    pub fn at(&self, k: usize) -> usize {
        self.values[k - 1] as usize
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    pub fn stats(&self) -> PistolStats {
        pistol_stats(self)
    }
}

impl fmt::Display for Pistol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

impl std::str::FromStr for Pistol {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let values = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<u8>().map_err(|_| Error::Parse(format!("bad entry `{t}`"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(values)
    }
}

pub fn pistol_stats(f: &Pistol) -> PistolStats {
    let m = f.len();
    let mut mult = vec![0u32; m + 1];
    for k in 1..=m {
        mult[f.at(k)] += 1;
    }
    let mut st = PistolStats::default();
    for k in 1..=m {
        let v = f.at(k);
        let doubled = mult[v] > 1;
        if v == m && k + 2 <= m {
            if k % 2 == 0 {
                st.me += 1;
            } else {
                st.mo += 1;
            }
        }
        if v == k && k < m {
            if doubled {
                st.fd += 1;
            } else {
                st.fi += 1;
            }
        }
        if v == k + 1 && v < m {
            if doubled {
                st.sd += 1;
            } else {
                st.si += 1;
            }
        }
    }
    st
}

/// All surjective pistols on `[2n]`, lexicographically.
pub fn generate_pistols(n: usize, budget: &Budget) -> Result<Vec<Pistol>> {
    // Carrier: all maps with f(i) >= i into the evens, at most n^(2n).
    budget.check_power(n, 2 * n)?;
    let m = 2 * n;
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(m);
    let mut hits = vec![0u32; m + 1];
    fn rec(i: usize, m: usize, cur: &mut Vec<u8>, hits: &mut [u32], out: &mut Vec<Pistol>) {
        if i > m {
            if (2..=m).step_by(2).all(|e| hits[e] > 0) {
                out.push(Pistol { values: cur.clone() });
            }
            return;
        }
        // Even values below i can no longer be hit.
        if (2..i).step_by(2).any(|e| hits[e] == 0) {
            return;
        }
        let lo = if i % 2 == 0 { i } else { i + 1 };
        for v in (lo..=m).step_by(2) {
            cur.push(v as u8);
            hits[v] += 1;
            rec(i + 1, m, cur, hits, out);
            hits[v] -= 1;
            cur.pop();
        }
    }
    if n > 0 {
        rec(1, m, &mut cur, &mut hits, &mut out);
    }
    Ok(out)
}

/// `sum_f alpha^mo beta^fd gamma^si alphabar^me betabar^fi gammabar^sd`.
pub fn gamma_pistol<C: Coeff>(n: usize, budget: &Budget) -> Result<MultiPoly<C>> {
    let mut hist: HashMap<PistolStats, u64> = HashMap::new();
    for f in generate_pistols(n, budget)? {
        *hist.entry(f.stats()).or_default() += 1;
    }
    Ok(MultiPoly::from_terms(hist.into_iter().map(|(s, c)| {
        let m = Monomial::from_pairs([
            (VarId::Alpha, s.mo),
            (VarId::Beta, s.fd),
            (VarId::Gamma, s.si),
            (VarId::AlphaBar, s.me),
            (VarId::BetaBar, s.fi),
            (VarId::GammaBar, s.sd),
        ]);
        (m, C::from_count(c))
    })))
}
