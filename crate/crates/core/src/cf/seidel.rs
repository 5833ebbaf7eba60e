use crate::poly::Coeff;

/// Boustrophedon triangle: row `r` has `ceil(r/2)` entries; odd rows
/// accumulate left to right and even rows right to left.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeidelTriangle<C> {
    pub rows: Vec<Vec<C>>,
}

impl<C: Coeff> SeidelTriangle<C> {
    /// Rows `1..=rows`.
    pub fn build(rows: usize) -> Self {
        let mut out: Vec<Vec<C>> = Vec::with_capacity(rows);
        if rows == 0 {
            return Self { rows: out };
        }
        out.push(vec![C::one()]);
        for r in 2..=rows {
            let prev = &out[r - 2];
            let len = r.div_ceil(2);
            let at = |j: usize| prev.get(j).cloned().unwrap_or_else(C::zero);
            let mut row = vec![C::zero(); len];
            if r % 2 == 1 {
                row[0] = at(0);
                for j in 1..len {
                    row[j] = row[j - 1].clone() + at(j);
                }
            } else {
                row[len - 1] = at(len - 1);
                for j in (0..len - 1).rev() {
                    row[j] = row[j + 1].clone() + at(j);
                }
            }
            out.push(row);
        }
        Self { rows: out }
    }

    /// Row `r`, 1-based.
    pub fn row(&self, r: usize) -> &[C] {
        &self.rows[r - 1]
    }

    /// `G_{2n}`: last entry of row `2n - 1`.
    pub fn genocchi(&self, n: usize) -> C {
        self.row(2 * n - 1).last().cloned().expect("nonempty row")
    }

    /// `H_{2n+1}`: first entry of row `2n + 2`.
    pub fn median(&self, n: usize) -> C {
        self.row(2 * n + 2)[0].clone()
    }
}

/// `(G_2..G_{2N}, H_1..H_{2N+1}, h_0..h_N)` with `h_n = H_{2n+1} / 2^n`.
///
/// # Panics
/// If some `H_{2n+1}` is not divisible by `2^n`, which would mean the
/// triangle is wrong.
pub fn seidel<C: Coeff>(n_max: usize) -> (Vec<C>, Vec<C>, Vec<C>) {
    let tri = SeidelTriangle::<C>::build(2 * n_max + 2);
    let g = (1..=n_max).map(|n| tri.genocchi(n)).collect();
    let h: Vec<C> = (0..=n_max).map(|n| tri.median(n)).collect();
    let two = C::one() + C::one();
    let normalized = h
        .iter()
        .enumerate()
        .map(|(n, v)| {
            let pow = (0..n).fold(C::one(), |acc, _| acc * two.clone());
            v.div_exact(&pow)
                .unwrap_or_else(|| panic!("H_{} = {v} is not divisible by 2^{n}", 2 * n + 1))
        })
        .collect();
    (g, h, normalized)
}
