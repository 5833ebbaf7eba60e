use crate::error::{Error, Result};
use crate::perm::{signature_of, Permutation};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FreeKind {
    BothIn,
    BothOut,
}

/// A pair `{2r-1, 2r}` lying entirely inside or entirely outside the
/// weak signature.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FreePair {
    pub r: usize,
    pub kind: FreeKind,
}

pub fn free_pairs(s: &Permutation) -> Result<Vec<FreePair>> {
    let (sig, _) = signature_of(s)?;
    Ok((1..=s.len() / 2)
        .filter_map(|r| match (sig.contains(2 * r - 1), sig.contains(2 * r)) {
            (true, true) => Some(FreePair { r, kind: FreeKind::BothIn }),
            (false, false) => Some(FreePair { r, kind: FreeKind::BothOut }),
            _ => None,
        })
        .collect())
}

fn pair_kind(s: &Permutation, r: usize) -> Result<FreeKind> {
    if r == 0 || 2 * r > s.len() {
        return Err(Error::InvalidArgument(format!("pair index {r} out of range for {s}")));
    }
    free_pairs(s)?
        .into_iter()
        .find(|p| p.r == r)
        .map(|p| p.kind)
        .ok_or_else(|| Error::NotFree { r, word: s.to_string() })
}

/// Swaps the values `2r-1` and `2r` when both lie outside the signature.
pub fn theta(s: &Permutation, r: usize) -> Result<Permutation> {
    if pair_kind(s, r)? != FreeKind::BothOut {
        return Err(Error::NotApplicable {
            x: r,
            word: s.to_string(),
            reason: "both values of the pair lie in the signature".into(),
        });
    }
    let (o, e) = ((2 * r - 1) as u8, (2 * r) as u8);
    let w: Vec<u8> = s
        .word()
        .iter()
        .map(|&v| if v == o { e } else if v == e { o } else { v })
        .collect();
    Permutation::new(w)
}

/// Maximal runs of `mid`, tagged `true` when above the pair.
fn blocks(mid: &[u8], e: u8) -> Vec<(bool, Vec<u8>)> {
    let mut out: Vec<(bool, Vec<u8>)> = Vec::new();
    for &v in mid {
        let above = v > e;
        match out.last_mut() {
            Some((k, b)) if *k == above => b.push(v),
            _ => out.push((above, vec![v])),
        }
    }
    out
}

fn split(bl: Vec<(bool, Vec<u8>)>, first_above: bool, s: &Permutation, r: usize) -> Result<(Vec<Vec<u8>>, Vec<Vec<u8>>)> {
    let alternating = bl.len() % 2 == 0
        && bl.iter().enumerate().all(|(i, (k, _))| *k == ((i % 2 == 0) == first_above));
    if !alternating {
        return Err(Error::NotApplicable {
            x: r,
            word: s.to_string(),
            reason: "blocks between the pair do not alternate".into(),
        });
    }
    let (mut above, mut below) = (Vec::new(), Vec::new());
    for (k, b) in bl {
        if k {
            above.push(b);
        } else {
            below.push(b);
        }
    }
    Ok((above, below))
}

/// Inter-hopping of the free pair `{2r-1, 2r}`: moves the pair across the
/// alternating blocks between them, changing the descent count by one
/// and preserving both embracing statistics.
pub fn interhop(s: &Permutation, r: usize) -> Result<Permutation> {
    let inside = pair_kind(s, r)? == FreeKind::BothIn;
    let (o, e) = ((2 * r - 1) as u8, (2 * r) as u8);
    let mut w = s.word().to_vec();
    let io = w.iter().position(|&v| v == o).expect("value present");
    let ie = w.iter().position(|&v| v == e).expect("value present");
    if io.abs_diff(ie) == 1 && (!inside || ie < io) {
        w.swap(io, ie);
        return Permutation::new(w);
    }
    let (i, j) = (io.min(ie), io.max(ie));
    let mut pre = w[..i].to_vec();
    let mid = &w[i + 1..j];
    let mut post = w[j + 1..].to_vec();
    let e_first = w[i] == e;
    let mut new = Vec::with_capacity(w.len());
    match (inside, e_first) {
        (false, true) => {
            // e a1 b1 .. ad bd o  ->  a1 o a2 b1 .. ad b(d-1) e bd
            let (al, be) = split(blocks(mid, e), true, s, r)?;
            let d = al.len();
            new.extend(&al[0]);
            new.push(o);
            for k in 1..d {
                new.extend(&al[k]);
                new.extend(&be[k - 1]);
            }
            new.push(e);
            new.extend(&be[d - 1]);
        }
        (false, false) => {
            // o a1 b1 .. ad bd e  ->  e b1 a1 .. bd ad o
            let (al, be) = split(blocks(mid, e), true, s, r)?;
            new.push(e);
            for (a, b) in al.iter().zip(&be) {
                new.extend(b);
                new.extend(a);
            }
            new.push(o);
        }
        (true, false) => {
            // The outer blocks sit outside the segment between the pair.
            let k = pre.iter().rposition(|&v| v < e).map_or(0, |p| p + 1);
            let a1 = pre.split_off(k);
            let m = post.iter().position(|&v| v > o).unwrap_or(post.len());
            let rest = post.split_off(m);
            let bd = std::mem::replace(&mut post, rest);
            // Between the pair: b1 a2 b2 .. a_d.
            let (mut al, mut be) = split(blocks(mid, e), false, s, r)?;
            al.insert(0, a1);
            be.push(bd);
            new.push(e);
            for (a, b) in al.iter().zip(&be) {
                new.extend(a);
                new.extend(b);
            }
            new.push(o);
        }
        (true, true) => {
            // e b1 a1 .. bd ad o  ->  o a1 b1 .. ad bd e
            let (al, be) = split(blocks(mid, e), false, s, r)?;
            new.push(o);
            for (a, b) in al.iter().zip(&be) {
                new.extend(a);
                new.extend(b);
            }
            new.push(e);
        }
    }
    let mut out = pre;
    out.extend(new);
    out.extend(post);
    Permutation::new(out)
}
