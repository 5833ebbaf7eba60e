use super::permutation::Permutation;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Names of the integer statistics, used to map statistics onto
/// polynomial variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Stat {
    Des,
    Drop,
    Cyc,
    Lma,
    Rmi,
    Lema,
    Loma,
    Remi,
    Romi,
    Les,
    Ress,
    Res,
    Dom,
    Dd,
    FixE,
    FixO,
}

/// Every statistic of one permutation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct StatVector {
    pub des: u32,
    pub drop: u32,
    pub cyc: u32,
    pub lma: u32,
    pub rmi: u32,
    pub lema: u32,
    pub loma: u32,
    pub remi: u32,
    pub romi: u32,
    pub les: u32,
    pub ress: u32,
    pub res: u32,
    pub dom: u32,
    pub dd: u32,
    pub fix_e: u32,
    pub fix_o: u32,
}

impl StatVector {
    /// `dom` is reported as 0 for odd lengths.
    pub fn of(s: &Permutation) -> Self {
        let (lema, loma, remi, romi) = parity_maxmin(s);
        let emb = embrace(s);
        let (fix_e, fix_o) = fixed_points(s);
        StatVector {
            des: des(s),
            drop: drop(s),
            cyc: cyc(s),
            lma: lema + loma,
            rmi: remi + romi,
            lema,
            loma,
            remi,
            romi,
            les: emb.les,
            ress: emb.ress,
            res: emb.res,
            dom: if s.len() % 2 == 0 { dom_unchecked(s) } else { 0 },
            dd: shape(s).dd,
            fix_e,
            fix_o,
        }
    }

    pub fn get(&self, st: Stat) -> u32 {
        match st {
            Stat::Des => self.des,
            Stat::Drop => self.drop,
            Stat::Cyc => self.cyc,
            Stat::Lma => self.lma,
            Stat::Rmi => self.rmi,
            Stat::Lema => self.lema,
            Stat::Loma => self.loma,
            Stat::Remi => self.remi,
            Stat::Romi => self.romi,
            Stat::Les => self.les,
            Stat::Ress => self.ress,
            Stat::Res => self.res,
            Stat::Dom => self.dom,
            Stat::Dd => self.dd,
            Stat::FixE => self.fix_e,
            Stat::FixO => self.fix_o,
        }
    }
}

pub fn des(s: &Permutation) -> u32 {
    s.word().windows(2).filter(|w| w[0] > w[1]).count() as u32
}

/// Number of `i` with `sigma(i) < i`.
pub fn drop(s: &Permutation) -> u32 {
    s.word()
        .iter()
        .enumerate()
        .filter(|&(i, &v)| (v as usize) < i + 1)
        .count() as u32
}

pub fn cyc(s: &Permutation) -> u32 {
    s.cycles().len() as u32
}

/// Left-to-right maxima.
pub fn lma(s: &Permutation) -> u32 {
    let (e, o, _, _) = parity_maxmin(s);
    e + o
}

/// Right-to-left minima.
pub fn rmi(s: &Permutation) -> u32 {
    let (_, _, e, o) = parity_maxmin(s);
    e + o
}

/// `(lema, loma, remi, romi)`: left-to-right maxima and right-to-left
/// minima split by the parity of their values.
pub fn parity_maxmin(s: &Permutation) -> (u32, u32, u32, u32) {
    let w = s.word();
    let (mut lema, mut loma, mut remi, mut romi) = (0, 0, 0, 0);
    let mut best = 0u8;
    for &v in w {
        if v > best {
            best = v;
            if v % 2 == 0 {
                lema += 1;
            } else {
                loma += 1;
            }
        }
    }
    let mut least = u8::MAX;
    for &v in w.iter().rev() {
        if v < least {
            least = v;
            if v % 2 == 0 {
                remi += 1;
            } else {
                romi += 1;
            }
        }
    }
    (lema, loma, remi, romi)
}

/// Embracing counts. Vectors are indexed by value (index 0 unused).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embrace {
    pub les: u32,
    pub ress: u32,
    pub res: u32,
    /// Descents to the left of `v` whose top exceeds `v` and whose bottom
    /// is below it.
    pub l_vec: Vec<u32>,
    /// The same for descents to the right of `v`.
    pub r_vec: Vec<u32>,
    /// Ascents to the right of `v` straddling it.
    pub res_vec: Vec<u32>,
}

pub fn embrace(s: &Permutation) -> Embrace {
    let w = s.word();
    let m = w.len();
    let mut l_vec = vec![0u32; m + 1];
    let mut r_vec = vec![0u32; m + 1];
    let mut res_vec = vec![0u32; m + 1];
    for k in 0..m.saturating_sub(1) {
        let (x, y) = (w[k], w[k + 1]);
        let (lo, hi) = (x.min(y), x.max(y));
        // Values strictly between the adjacent pair, left or right of it.
        for (j, &v) in w.iter().enumerate() {
            if v <= lo || v >= hi {
                continue;
            }
            if x > y {
                if j > k + 1 {
                    l_vec[v as usize] += 1;
                } else if j < k {
                    r_vec[v as usize] += 1;
                }
            } else if j < k {
                res_vec[v as usize] += 1;
            }
        }
    }
    Embrace {
        les: l_vec.iter().sum(),
        ress: r_vec.iter().sum(),
        res: res_vec.iter().sum(),
        l_vec,
        r_vec,
        res_vec,
    }
}

/// Dominoes: `j` with `2j` a descent top and `2j-1` a descent bottom.
pub fn dom(s: &Permutation) -> Result<u32> {
    if s.len() % 2 != 0 {
        return Err(Error::WrongParity {
            family: "dom".into(),
            expected: "even",
            len: s.len(),
        });
    }
    Ok(dom_unchecked(s))
}

fn dom_unchecked(s: &Permutation) -> u32 {
    let (tops, bottoms) = tops_bottoms(s);
    (1..=s.len() / 2)
        .filter(|&j| tops[2 * j] && bottoms[2 * j - 1])
        .count() as u32
}

/// Value-indexed flags: `tops[v]` if `v` is a descent top, `bottoms[v]`
/// if it is a descent bottom.
pub fn tops_bottoms(s: &Permutation) -> (Vec<bool>, Vec<bool>) {
    let m = s.len();
    let mut tops = vec![false; m + 1];
    let mut bottoms = vec![false; m + 1];
    for w in s.word().windows(2) {
        if w[0] > w[1] {
            tops[w[0] as usize] = true;
            bottoms[w[1] as usize] = true;
        }
    }
    (tops, bottoms)
}

pub fn fixed_points(s: &Permutation) -> (u32, u32) {
    let (mut e, mut o) = (0, 0);
    for i in 1..=s.len() {
        if s.at(i) == i {
            if i % 2 == 0 {
                e += 1;
            } else {
                o += 1;
            }
        }
    }
    (e, o)
}

/// Local shape of an entry with zero boundaries on both sides.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Shape {
    Peak,
    Valley,
    DoubleAscent,
    DoubleDescent,
}

/// Value-indexed shapes (index 0 unused) and the class counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShapeCounts {
    pub by_value: Vec<Option<Shape>>,
    pub peaks: u32,
    pub valleys: u32,
    pub double_ascents: u32,
    pub dd: u32,
}

pub fn shape(s: &Permutation) -> ShapeCounts {
    let w = s.word();
    let m = w.len();
    let mut by_value = vec![None; m + 1];
    let mut out = ShapeCounts {
        by_value: Vec::new(),
        peaks: 0,
        valleys: 0,
        double_ascents: 0,
        dd: 0,
    };
    for i in 0..m {
        let prev = if i == 0 { 0 } else { w[i - 1] };
        let next = if i + 1 == m { 0 } else { w[i + 1] };
        let v = w[i];
        let sh = match (prev < v, v < next) {
            (true, false) => {
                out.peaks += 1;
                Shape::Peak
            }
            (false, true) => {
                out.valleys += 1;
                Shape::Valley
            }
            (true, true) => {
                out.double_ascents += 1;
                Shape::DoubleAscent
            }
            (false, false) => {
                out.dd += 1;
                Shape::DoubleDescent
            }
        };
        by_value[v as usize] = Some(sh);
    }
    out.by_value = by_value;
    out
}

/// Foata's transform: each cycle written maximum first, cycles in
/// increasing order of their maxima, concatenated.
pub fn foata(s: &Permutation) -> Permutation {
    let mut cycles: Vec<Vec<usize>> = s
        .cycles()
        .into_iter()
        .map(|c| {
            let k = (0..c.len()).max_by_key(|&i| c[i]).unwrap_or(0);
            c[k..].iter().chain(&c[..k]).copied().collect()
        })
        .collect();
    cycles.sort_by_key(|c| c[0]);
    Permutation::from_word_unchecked(cycles.into_iter().flatten().map(|v| v as u8).collect())
}
