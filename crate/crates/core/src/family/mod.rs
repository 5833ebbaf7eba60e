//! Permutation families, their membership predicates and generators.

mod genfun;
mod pistol;
mod predicates;

pub use genfun::{family_poly, histogram, StatMap};
pub use pistol::{gamma_pistol, generate_pistols, pistol_stats, Pistol, PistolStats};
pub use predicates::{a_sequence, is_normalized_e, is_normalized_f, vop_pairs};

use crate::error::{Error, Result};
use crate::perm::{has_only_even_odd_descents, Permutation, StatVector};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// The permutation families and the pistol family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FamilyId {
    /// `sigma(i) >= i` at odd `i`, `sigma(i) <= i` at even `i`.
    D,
    /// Single-cycle members of `D`.
    DC,
    /// Every drop goes from an even position to an odd value.
    E,
    /// Single-cycle members of `E`.
    EC,
    /// Fixed-point-free members of `D`.
    Dstar,
    /// Only even-odd descents.
    X,
    /// `X` without dominoes.
    Xbar,
    /// Normalized members of `Xbar`.
    Xhat,
    /// Odd length, only odd-odd descents.
    Y,
    /// `Y` ending in an odd value.
    Ystar,
    /// `Ystar` with no double descent.
    Ybar,
    /// Normalized members of `Ybar`.
    Yhat,
    Dumont,
    DumontDerangement,
    Pistol,
}

const ALL: [FamilyId; 15] = [
    FamilyId::D,
    FamilyId::DC,
    FamilyId::E,
    FamilyId::EC,
    FamilyId::Dstar,
    FamilyId::X,
    FamilyId::Xbar,
    FamilyId::Xhat,
    FamilyId::Y,
    FamilyId::Ystar,
    FamilyId::Ybar,
    FamilyId::Yhat,
    FamilyId::Dumont,
    FamilyId::DumontDerangement,
    FamilyId::Pistol,
];

impl FamilyId {
    pub fn all() -> &'static [FamilyId] {
        &ALL
    }

    /// Carrier length for half-length `n`.
    pub fn carrier_len(self, n: usize) -> usize {
        if self.odd_length() {
            2 * n + 1
        } else {
            2 * n
        }
    }

    pub fn odd_length(self) -> bool {
        matches!(self, FamilyId::Y | FamilyId::Ystar | FamilyId::Ybar | FamilyId::Yhat)
    }

    fn is_x_like(self) -> bool {
        matches!(self, FamilyId::X | FamilyId::Xbar | FamilyId::Xhat)
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for FamilyId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ALL.iter()
            .copied()
            .find(|f| f.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                let names: Vec<String> = ALL.iter().map(|f| f.to_string()).collect();
                Error::InvalidArgument(format!("unknown family `{s}`; expected one of {}", names.join(", ")))
            })
    }
}

/// Upper bound on the size of the carrier any generator may walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_carrier: u128,
}

impl Default for Budget {
    /// `11!`, enough for every default check.
    fn default() -> Self {
        Self::factorial(11)
    }
}

impl Budget {
    /// A budget of `k!` elements.
    pub fn factorial(k: u32) -> Self {
        Self {
            max_carrier: (1..=k as u128).product(),
        }
    }

    pub fn unlimited() -> Self {
        Self { max_carrier: u128::MAX }
    }

    /// Fails unless `m!` fits the budget.
    pub fn check_factorial(&self, m: usize) -> Result<()> {
        let mut acc: u128 = 1;
        for k in 1..=m as u128 {
            acc = match acc.checked_mul(k) {
                Some(a) if a <= self.max_carrier => a,
                _ => return Err(self.exceeded(format!("{m}!"))),
            };
        }
        Ok(())
    }

    /// Fails unless `base^exp` fits the budget.
    pub fn check_power(&self, base: usize, exp: usize) -> Result<()> {
        let mut acc: u128 = 1;
        for _ in 0..exp {
            acc = match acc.checked_mul(base as u128) {
                Some(a) if a <= self.max_carrier => a,
                _ => return Err(self.exceeded(format!("{base}^{exp}"))),
            };
        }
        Ok(())
    }

    fn exceeded(&self, required: String) -> Error {
        Error::BudgetExceeded {
            bound: self.max_carrier.to_string(),
            required,
        }
    }
}

/// How a generator walks its carrier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GenMode {
    /// Filter every permutation of the carrier.
    Reference,
    /// Backtracking with prefix pruning.
    #[default]
    Pruned,
    /// Path diagrams mapped through the inverse bijection (X families only).
    Diagram,
}

impl FromStr for GenMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "reference" => Ok(GenMode::Reference),
            "pruned" => Ok(GenMode::Pruned),
            "diagram" => Ok(GenMode::Diagram),
            _ => Err(Error::InvalidArgument(format!(
                "unknown mode `{s}`; expected reference, pruned or diagram"
            ))),
        }
    }
}

/// Exact membership test.
pub fn is_member(f: FamilyId, s: &Permutation) -> Result<bool> {
    if f == FamilyId::Pistol {
        return Err(Error::InvalidArgument("pistols are not permutations; use Pistol::new".into()));
    }
    let m = s.len();
    if (m % 2 == 1) != f.odd_length() {
        return Err(Error::WrongParity {
            family: f.to_string(),
            expected: if f.odd_length() { "odd" } else { "even" },
            len: m,
        });
    }
    Ok(member_unchecked(f, s))
}

fn member_unchecked(f: FamilyId, s: &Permutation) -> bool {
    use FamilyId::*;
    let w = s.word();
    let m = w.len();
    let positional = |ok: &dyn Fn(usize, usize) -> bool| (1..=m).all(|i| ok(i, s.at(i)));
    let cyc = || s.cycles().len();
    match f {
        D => positional(&d_ok),
        DC => positional(&d_ok) && cyc() == 1,
        E => positional(&e_ok),
        EC => positional(&e_ok) && cyc() == 1,
        Dstar => positional(&d_ok) && (1..=m).all(|i| s.at(i) != i),
        X => has_only_even_odd_descents(s),
        Xbar => has_only_even_odd_descents(s) && StatVector::of(s).dom == 0,
        Xhat => member_unchecked(Xbar, s) && is_normalized_e(s),
        Y => y_descents(w),
        Ystar => y_descents(w) && m > 0 && w[m - 1] % 2 == 1,
        Ybar => member_unchecked(Ystar, s) && crate::perm::shape(s).dd == 0,
        Yhat => member_unchecked(Ybar, s) && is_normalized_f(s),
        Dumont => positional(&dumont_ok),
        DumontDerangement => positional(&dumont_der_ok),
        Pistol => false,
    }
}

fn d_ok(i: usize, v: usize) -> bool {
    if i % 2 == 1 {
        v >= i
    } else {
        v <= i
    }
}

fn e_ok(i: usize, v: usize) -> bool {
    v >= i || (i % 2 == 0 && v % 2 == 1)
}

fn dumont_ok(i: usize, v: usize) -> bool {
    if i % 2 == 1 {
        v >= i
    } else {
        v < i
    }
}

fn dumont_der_ok(i: usize, v: usize) -> bool {
    if i % 2 == 1 {
        v > i
    } else {
        v < i
    }
}

fn y_descents(w: &[u8]) -> bool {
    w.windows(2).all(|p| p[0] < p[1] || (p[0] % 2 == 1 && p[1] % 2 == 1))
}

/// Members of `f` of half-length `n`, pruned mode, default budget.
pub fn generate(f: FamilyId, n: usize) -> Result<Vec<Permutation>> {
    generate_with(f, n, GenMode::Pruned, &Budget::default())
}

/// Members in lexicographic order of their one-line words.
pub fn generate_with(f: FamilyId, n: usize, mode: GenMode, budget: &Budget) -> Result<Vec<Permutation>> {
    if f == FamilyId::Pistol {
        return Err(Error::InvalidArgument("use generate_pistols for the pistol family".into()));
    }
    let m = f.carrier_len(n);
    budget.check_factorial(m)?;
    match mode {
        GenMode::Reference => Ok(reference(f, m)),
        GenMode::Pruned => Ok(pruned(f, m)),
        GenMode::Diagram => {
            if !f.is_x_like() {
                return Err(Error::InvalidArgument(format!(
                    "diagram mode only generates X, Xbar and Xhat, not {f}"
                )));
            }
            let mut out = Vec::new();
            for d in crate::path::enumerate_diagrams(n) {
                let s = crate::path::phi_inverse(&d)?;
                if member_unchecked(f, &s) {
                    out.push(s);
                }
            }
            out.sort();
            Ok(out)
        }
    }
}

fn next_permutation(w: &mut [u8]) -> bool {
    let n = w.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && w[i - 1] >= w[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while w[j] <= w[i - 1] {
        j -= 1;
    }
    w.swap(i - 1, j);
    w[i..].reverse();
    true
}

fn reference(f: FamilyId, m: usize) -> Vec<Permutation> {
    if m == 0 {
        let e = Permutation::identity(0);
        return if member_unchecked(f, &e) { vec![e] } else { vec![] };
    }
    // One task per leading value keeps the concatenation lexicographic.
    let chunks: Vec<Vec<Permutation>> = (1..=m as u8)
        .into_par_iter()
        .map(|first| {
            let mut w: Vec<u8> = std::iter::once(first)
                .chain((1..=m as u8).filter(|&v| v != first))
                .collect();
            let mut out = Vec::new();
            loop {
                let s = Permutation::from_word_unchecked(w.clone());
                if member_unchecked(f, &s) {
                    out.push(s);
                }
                if !next_permutation(&mut w[1..]) {
                    break;
                }
            }
            out
        })
        .collect();
    chunks.into_iter().flatten().collect()
}

/// Whether placing `v` at 1-based position `i` after `prefix` can still
/// lead to a member.
fn prefix_ok(f: FamilyId, prefix: &[u8], v: u8, m: usize) -> bool {
    use FamilyId::*;
    let i = prefix.len() + 1;
    let (vi, prev) = (v as usize, prefix.last().copied());
    match f {
        D | DC | Dstar => d_ok(i, vi) && !(f == Dstar && vi == i),
        E | EC => e_ok(i, vi),
        Dumont => dumont_ok(i, vi),
        DumontDerangement => dumont_der_ok(i, vi),
        X | Xbar | Xhat => prev.is_none_or(|p| p < v || (p % 2 == 0 && v % 2 == 1)),
        Y | Ystar | Ybar | Yhat => {
            let desc_ok = prev.is_none_or(|p| p < v || (p % 2 == 1 && v % 2 == 1));
            let last_ok = f == Y || i < m || v % 2 == 1;
            let no_dd = !matches!(f, Ybar | Yhat) || {
                let dd_mid = prefix.len() >= 2 && prefix[i - 3] > prefix[i - 2] && prefix[i - 2] > v;
                let dd_last = i == m && prev.is_some_and(|p| p > v);
                !dd_mid && !dd_last
            };
            desc_ok && last_ok && no_dd
        }
        Pistol => false,
    }
}

fn pruned(f: FamilyId, m: usize) -> Vec<Permutation> {
    fn rec(f: FamilyId, m: usize, cur: &mut Vec<u8>, used: &mut [bool], out: &mut Vec<Permutation>) {
        if cur.len() == m {
            let s = Permutation::from_word_unchecked(cur.clone());
            if member_unchecked(f, &s) {
                out.push(s);
            }
            return;
        }
        for v in 1..=m as u8 {
            if !used[v as usize] && prefix_ok(f, cur, v, m) {
                used[v as usize] = true;
                cur.push(v);
                rec(f, m, cur, used, out);
                cur.pop();
                used[v as usize] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(f, m, &mut Vec::with_capacity(m), &mut vec![false; m + 1], &mut out);
    out
}
