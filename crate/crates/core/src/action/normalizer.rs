use crate::error::{Error, Result};
use crate::perm::{embrace, has_only_even_odd_descents, signature_of, Permutation, StatVector};
use crate::path::{phi, phi_inverse};
use serde::{Deserialize, Serialize};

/// Which of the four constructions applies to `x`, by the parities of
/// `x` and of its signature value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum NormalizerCase {
    /// `x` odd, `s(x)` odd: the block move of `x + 1`.
    A,
    /// `x` even, `s(x)` odd: the block move of `x - 1`.
    B,
    /// `x` odd, `s(x)` even.
    C,
    /// `x` even, `s(x)` even.
    D,
}

impl NormalizerCase {
    /// The value whose embracing pair changes.
    fn moved(self, x: usize) -> usize {
        match self {
            NormalizerCase::A => x + 1,
            NormalizerCase::B => x - 1,
            _ => x,
        }
    }

    /// Whether the toggled count is the left one.
    fn toggles_left(self) -> bool {
        matches!(self, NormalizerCase::A | NormalizerCase::C)
    }
}

fn check_domain(s: &Permutation, x: usize) -> Result<(NormalizerCase, crate::perm::SignatureFunction)> {
    if s.len() % 2 != 0 || !has_only_even_odd_descents(s) || StatVector::of(s).dom != 0 {
        return Err(Error::NotMember {
            family: "Xbar".into(),
            word: s.to_string(),
        });
    }
    let (sig, f) = signature_of(s)?;
    if !sig.contains(x) {
        return Err(Error::NotApplicable {
            x,
            word: s.to_string(),
            reason: "not a descent top or bottom".into(),
        });
    }
    let case = match (x % 2 == 1, f.at(x) % 2 == 1) {
        (true, true) => NormalizerCase::A,
        (false, true) => NormalizerCase::B,
        (true, false) => NormalizerCase::C,
        (false, false) => NormalizerCase::D,
    };
    Ok((case, f))
}

pub fn normalizer_case(s: &Permutation, x: usize) -> Result<NormalizerCase> {
    check_domain(s, x).map(|(c, _)| c)
}

/// `{2m, 2m+1}` swap.
fn flip(k: u32) -> u32 {
    k ^ 1
}

/// Target `(l, r)` of the moved value.
fn target(s: &Permutation, x: usize) -> Result<(NormalizerCase, usize, u32, u32)> {
    let (case, f) = check_domain(s, x)?;
    let y = case.moved(x);
    let e = embrace(s);
    // l + r = s(y) - 1 on every member with this signature.
    let total = f.at(y) - 1;
    let pair = if case.toggles_left() {
        let l = flip(e.l_vec[y]);
        total.checked_sub(l).map(|r| (l, r))
    } else {
        let r = flip(e.r_vec[y]);
        total.checked_sub(r).map(|l| (l, r))
    };
    pair.map(|(l, r)| (case, y, l, r)).ok_or_else(|| Error::Reconstruction {
        case: format!("{case:?}"),
        word: s.to_string(),
        solutions: 0,
    })
}

/// Moves `y` out of `t3' t2' t1' y t1 t2 t3`, where `t1` is the run of
/// larger values right of `y`, `t2` the following run of smaller values,
/// `t1'` the run of smaller values left of `y` and `t2'` the preceding
/// run of larger ones. Right gives `t3' t2' t1' t1 t2 y t3`, left gives
/// `t3' y t2' t1' t1 t2 t3`.
pub fn tau_move(s: &Permutation, y: usize, right: bool) -> Permutation {
    let y = y as u8;
    let mut w = s.word().to_vec();
    let i = w.iter().position(|&v| v == y).expect("value present");
    w.remove(i);
    let dest = if right {
        let mut k = i;
        while k < w.len() && w[k] > y {
            k += 1;
        }
        while k < w.len() && w[k] < y {
            k += 1;
        }
        k
    } else {
        let mut k = i;
        while k > 0 && w[k - 1] < y {
            k -= 1;
        }
        while k > 0 && w[k - 1] > y {
            k -= 1;
        }
        k
    };
    w.insert(dest, y);
    Permutation::from_word_unchecked(w)
}

/// The signature-preserving involution at `x`. Block moves in cases A
/// and B; in cases C and D the moved value's embracing pair is toggled
/// and the permutation rebuilt from its path diagram.
pub fn normalizer_phi(s: &Permutation, x: usize) -> Result<Permutation> {
    let (case, _) = check_domain(s, x)?;
    let e = embrace(s);
    match case {
        NormalizerCase::A => Ok(tau_move(s, x + 1, e.l_vec[x + 1] % 2 == 0)),
        NormalizerCase::B => Ok(tau_move(s, x - 1, e.r_vec[x - 1] % 2 == 1)),
        NormalizerCase::C | NormalizerCase::D => normalizer_toggle(s, x),
    }
}

/// Toggle construction for every case: same diagram path, the moved
/// value's right-embracing label replaced.
pub fn normalizer_toggle(s: &Permutation, x: usize) -> Result<Permutation> {
    let (_, y, _, r) = target(s, x)?;
    let mut d = phi(s)?;
    let j = (y - 1) / 2;
    if y % 2 == 1 {
        d.xi[j] = r;
    } else {
        d.xi_prime[j] = r;
    }
    d.validate()?;
    phi_inverse(&d)
}

/// Brute-force reconstruction: the unique member of `pool` with the same
/// signature, the same embracing pairs away from the moved value and the
/// toggled pair on it.
pub fn normalizer_search(s: &Permutation, x: usize, pool: &[Permutation]) -> Result<Permutation> {
    let (case, y, l, r) = target(s, x)?;
    let (sig, _) = signature_of(s)?;
    let e = embrace(s);
    let m = s.len();
    let sols: Vec<&Permutation> = pool
        .iter()
        .filter(|w| w.len() == m && StatVector::of(w).dom == 0)
        .filter(|w| signature_of(w).map(|(g, _)| g == sig).unwrap_or(false))
        .filter(|w| {
            let ew = embrace(w);
            (1..=m).all(|v| {
                let want = if v == y { (l, r) } else { (e.l_vec[v], e.r_vec[v]) };
                (ew.l_vec[v], ew.r_vec[v]) == want
            })
        })
        .collect();
    match sols.as_slice() {
        [w] => Ok((*w).clone()),
        _ => Err(Error::Reconstruction {
            case: format!("{case:?}"),
            word: s.to_string(),
            solutions: sols.len(),
        }),
    }
}
