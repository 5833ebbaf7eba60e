use crate::perm::{embrace, shape, signature_of, Permutation, Shape};

/// Parity conditions on embracing counts that single out one member of
/// every orbit of the signature-preserving action. Assumes `s` has only
/// even-odd descents and no dominoes.
pub fn is_normalized_e(s: &Permutation) -> bool {
    let Ok((sig, f)) = signature_of(s) else {
        return false;
    };
    let e = embrace(s);
    let even = |x: u32| x % 2 == 0;
    (1..=s.len() / 2).all(|j| {
        let (o, ev) = (2 * j - 1, 2 * j);
        let odd_ok = !sig.contains(o)
            || if f.at(o) % 2 == 1 {
                even(e.l_vec[ev])
            } else {
                even(e.l_vec[o])
            };
        let even_ok = !sig.contains(ev)
            || if f.at(ev) % 2 == 1 {
                even(e.r_vec[o])
            } else {
                even(e.r_vec[ev])
            };
        odd_ok && even_ok
    })
}

/// `a(j) = #(valleys < j) - #(peaks < j) + 1` for `j` in `1..=len-1`
/// (index 0 unused).
pub fn a_sequence(s: &Permutation) -> Vec<i64> {
    let sh = shape(s);
    let mut out = vec![0i64; s.len() + 1];
    let mut bal = 0i64;
    for j in 1..=s.len() {
        out[j] = bal + 1;
        match sh.by_value[j] {
            Some(Shape::Valley) => bal += 1,
            Some(Shape::Peak) => bal -= 1,
            _ => {}
        }
    }
    out
}

/// Indices `i` such that `2i - 1` is a valley or a peak.
pub fn vop_pairs(s: &Permutation) -> Vec<usize> {
    let sh = shape(s);
    (1..=s.len() / 2)
        .filter(|&i| matches!(sh.by_value[2 * i - 1], Some(Shape::Valley | Shape::Peak)))
        .collect()
}

/// Every VOP pair has an even embracing number: the right ascent count
/// of `2i-1` when `a(2i-1)` is even, otherwise the left descent count of
/// `2i`.
pub fn is_normalized_f(s: &Permutation) -> bool {
    let a = a_sequence(s);
    let e = embrace(s);
    vop_pairs(s).into_iter().all(|i| {
        let l = if a[2 * i - 1] % 2 == 0 {
            e.res_vec[2 * i - 1]
        } else {
            e.l_vec[2 * i]
        };
        l % 2 == 0
    })
}
