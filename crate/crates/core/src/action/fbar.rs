use super::normalizer::tau_move;
use crate::error::{Error, Result};
use crate::family::{a_sequence, is_member, vop_pairs, FamilyId};
use crate::path::{psi, psi_inverse};
use crate::perm::{embrace, Permutation};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FbarCase {
    /// `a(2i)` even: `2i` moves across its neighbouring blocks.
    MoveEven,
    /// `a(2i)` odd: the ascent-embracing count of `2i-1` is toggled.
    ToggleOdd,
}

fn check(s: &Permutation, i: usize) -> Result<FbarCase> {
    if !is_member(FamilyId::Ybar, s)? {
        return Err(Error::NotMember {
            family: "Ybar".into(),
            word: s.to_string(),
        });
    }
    if !vop_pairs(s).contains(&i) {
        return Err(Error::NotApplicable {
            x: i,
            word: s.to_string(),
            reason: format!("{} is neither a valley nor a peak", 2 * i - 1),
        });
    }
    Ok(if a_sequence(s)[2 * i] % 2 == 0 {
        FbarCase::MoveEven
    } else {
        FbarCase::ToggleOdd
    })
}

pub fn fbar_case(s: &Permutation, i: usize) -> Result<FbarCase> {
    check(s, i)
}

/// The valley/peak-preserving involution at the pair `{2i-1, 2i}`.
pub fn fbar_phi(s: &Permutation, i: usize) -> Result<Permutation> {
    match check(s, i)? {
        FbarCase::MoveEven => {
            let l = embrace(s).l_vec[2 * i];
            Ok(tau_move(s, 2 * i, l % 2 == 0))
        }
        FbarCase::ToggleOdd => fbar_toggle(s, i),
    }
}

/// Both cases through the odd-odd path diagram: toggle the relevant
/// count within `{2m, 2m+1}` and invert.
pub fn fbar_toggle(s: &Permutation, i: usize) -> Result<Permutation> {
    let case = check(s, i)?;
    let e = embrace(s);
    let mut d = psi(s)?;
    match case {
        FbarCase::MoveEven => d.xi_prime[i - 1] = e.l_vec[2 * i] ^ 1,
        FbarCase::ToggleOdd => {
            let o = 2 * i - 1;
            let a = a_sequence(s)[o];
            // l(o) + res(o) = a(o) - 1 for valleys and peaks.
            let l = a - 1 - i64::from(e.res_vec[o] ^ 1);
            d.xi[i - 1] = u32::try_from(l).map_err(|_| Error::Reconstruction {
                case: "toggle_odd".into(),
                word: s.to_string(),
                solutions: 0,
            })?;
        }
    }
    d.validate()?;
    psi_inverse(&d)
}
